//! Nondegenerate symmetric bilinear forms, their extension to exterior
//! powers, and the (unscaled) Hodge star `∗ = ⋀g⁻¹ ∘ H`.

use crate::duality::{annihilator_H, annihilator_H_inv, bracket};
use crate::error::{Error, Result};
use crate::exterior::{ext_map, wedge_vectors, Matrix, MultiIndex, Multivector, Vector};
use crate::field::{FieldElement, FieldSpec};
use crate::projective::ProjFlat;
use crate::random;
use rand::Rng;

/// A validated Gram matrix with its inverse and determinant cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    matrix: Matrix,
    inverse: Matrix,
    det: FieldElement,
}

impl GramForm {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    /// The Gram determinant `G`.
    pub fn det(&self) -> &FieldElement {
        &self.det
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    /// The functional `g(v, ·)`.
    pub fn lower(&self, v: &Vector) -> Result<Multivector> {
        Ok(Multivector::from_vector(&self.matrix.transpose().mul_vec(v)?)?.with_dual(true))
    }
}

/// Checks symmetry and nondegeneracy.
pub fn gram_validate(m: Matrix) -> Result<GramForm> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.transpose() != m {
        return Err(Error::NotSymmetric);
    }
    let det = m.det()?;
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let inverse = m.inverse()?;
    Ok(GramForm { matrix: m, inverse, det })
}

/// `diag(η₁, …, η_d)` with each `ηᵢ = ±1`.
pub fn standard_form(field: FieldSpec, signs: &[i64]) -> Result<GramForm> {
    if signs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::BadSign);
    }
    let entries: Vec<FieldElement> = signs.iter().map(|&s| field.int(s)).collect();
    gram_validate(Matrix::diagonal(&entries)?)
}

fn check_dim(g: &GramForm, d: usize) -> Result<()> {
    if g.dim() != d {
        return Err(Error::DimMismatch { expected: g.dim(), found: d });
    }
    Ok(())
}

/// `vᵀ·g·w`.
pub fn sp(g: &GramForm, v: &Vector, w: &Vector) -> Result<FieldElement> {
    check_dim(g, v.dim())?;
    v.dot(&g.matrix.mul_vec(w)?)
}

/// The basis `xⱼ^⊥ = Σ g^{ij} xᵢ` with `g(xᵢ^⊥, xⱼ) = δᵢⱼ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalBasis {
    pub vectors: Vec<Vector>,
}

pub fn reciprocal(g: &GramForm) -> ReciprocalBasis {
    ReciprocalBasis { vectors: g.inverse.columns() }
}

/// `g̃(φ, ψ) = g(g⁻¹φ, g⁻¹ψ)` on functionals.
pub fn related_dual_sp(g: &GramForm, phi: &Multivector, psi: &Multivector) -> Result<FieldElement> {
    for f in [phi, psi] {
        if !f.is_dual() {
            return Err(Error::NotDual);
        }
        check_dim(g, f.dim())?;
    }
    let (a, b) = (phi.with_dual_view()?, psi.with_dual_view()?);
    a.dot(&g.inverse.mul_vec(&b)?)
}

trait DualView {
    fn with_dual_view(&self) -> Result<Vector>;
}

impl DualView for Multivector {
    fn with_dual_view(&self) -> Result<Vector> {
        self.clone().with_dual(false).to_vector()
    }
}

/// `g(x_I, x_J)`: the minor of `g` on rows `I`, columns `J`.
fn basis_sp(g: &GramForm, i: MultiIndex, j: MultiIndex) -> Result<FieldElement> {
    if i.is_empty() {
        return Ok(g.field().one());
    }
    let rows: Vec<usize> = i.indices().iter().map(|k| k - 1).collect();
    let cols: Vec<usize> = j.indices().iter().map(|k| k - 1).collect();
    g.matrix.submatrix(&rows, &cols).det()
}

/// The induced form on `⋀ᵖV`: `g(v₁∧⋯∧vₚ, w₁∧⋯∧wₚ) = det[g(vᵢ, wⱼ)]`.
pub fn sp_ext(g: &GramForm, r: &Multivector, s: &Multivector) -> Result<FieldElement> {
    check_dim(g, r.dim())?;
    r.check_compatible(s)?;
    let (pr, ps) = (r.homogeneous_grade(), s.homogeneous_grade());
    if let (Some(a), Some(b)) = (pr, ps) {
        if a != b {
            return Err(Error::GradeMismatch { expected: a, found: Some(b) });
        }
    } else if !(r.is_zero() || s.is_zero()) {
        return Err(Error::NotHomogeneous);
    }
    let mut acc = g.field().zero();
    for (i, a) in r.terms() {
        for (j, b) in s.terms() {
            acc += a * b * basis_sp(g, i, j)?;
        }
    }
    Ok(acc)
}

/// `∗ = ⋀g⁻¹ ∘ H`.
pub fn hodge(g: &GramForm, m: &Multivector) -> Result<Multivector> {
    check_dim(g, m.dim())?;
    let h = annihilator_H(m)?.with_dual(false);
    ext_map(&g.inverse, &h)
}

/// Inverse of [`hodge`]: `H⁻¹ ∘ ⋀g`.
pub fn hodge_inverse(g: &GramForm, m: &Multivector) -> Result<Multivector> {
    check_dim(g, m.dim())?;
    if m.is_dual() {
        return Err(Error::AlreadyDual);
    }
    annihilator_H_inv(&ext_map(&g.matrix, m)?.with_dual(true))
}

/// The star characterized by `s ∧ t = g(∗s, t)·x₁∧⋯∧x_d` for every `t`,
/// found by solving against the grade-(d−p) basis.
pub fn hodge_alt(g: &GramForm, m: &Multivector) -> Result<Multivector> {
    check_dim(g, m.dim())?;
    if m.is_dual() {
        return Err(Error::AlreadyDual);
    }
    let d = m.dim();
    let mut out = Multivector::zero(g.field(), d)?;
    for p in 0..=d {
        let s = m.grade_project(p);
        if s.is_zero() {
            continue;
        }
        let basis = MultiIndex::all_of_grade(d, d - p);
        let gram = basis
            .iter()
            .map(|&k| basis.iter().map(|&j| basis_sp(g, j, k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let rhs = basis
            .iter()
            .map(|&k| bracket(&s.wedge(&Multivector::from_terms(g.field(), d, false, [(k, g.field().one())])?)?))
            .collect::<Result<Vec<_>>>()?;
        let c = Matrix::from_rows(gram)?.solve(&Vector::new(rhs)?)?.ok_or(Error::Degenerate)?;
        let part = Multivector::from_terms(g.field(), d, false, basis.iter().copied().zip(c.into_coords()))?;
        out = out.checked_add(&part)?;
    }
    Ok(out)
}

/// `∗r = G⁻¹ Σ_I (−1)^ρ g(r, x_I)·x_Ī`, over the grades present in `r`.
pub fn hodge_expansion(g: &GramForm, r: &Multivector) -> Result<Multivector> {
    check_dim(g, r.dim())?;
    let d = r.dim();
    let ginv = g.det.inv()?;
    let mut out = Multivector::zero(g.field(), d)?;
    for p in 0..=d {
        let part = r.grade_project(p);
        if part.is_zero() {
            continue;
        }
        for i in MultiIndex::all_of_grade(d, p) {
            let xi = Multivector::from_terms(g.field(), d, false, [(i, g.field().one())])?;
            let c = sp_ext(g, &part, &xi)?;
            let ibar = i.complement(d);
            let odd = i.wedge_sign(ibar).expect("disjoint");
            let c = if odd { -(&ginv * &c) } else { &ginv * &c };
            out.add_term(ibar, c)?;
        }
    }
    Ok(out)
}

/// `X^⊥`, as the flat of `∗X`.
pub fn orthogonal_flat(g: &GramForm, f: &ProjFlat) -> Result<ProjFlat> {
    match ProjFlat::new(hodge(g, f.blade())?) {
        Err(Error::NotABlade) => Err(Error::StarNotBlade),
        other => other,
    }
}

/// `∗̃ = H ∘ ⋀g⁻¹` on the dual algebra.
pub fn star_dual(g: &GramForm, dm: &Multivector) -> Result<Multivector> {
    if !dm.is_dual() {
        return Err(Error::NotDual);
    }
    check_dim(g, dm.dim())?;
    annihilator_H(&ext_map(&g.inverse, &dm.clone().with_dual(false))?)
}

/// `∗(u ∧ v)` in dimension 3.
pub fn cross_product(g: &GramForm, u: &Vector, v: &Vector) -> Result<Vector> {
    if g.dim() != 3 {
        return Err(Error::WrongDimension { expected: 3, found: g.dim() });
    }
    check_dim(g, u.dim())?;
    let w = wedge_vectors(&[u.clone(), v.clone()])?;
    if w.is_zero() {
        return Ok(Vector::zero(g.field(), 3));
    }
    hodge(g, &w)?.to_vector()
}

/// The star built from the basis given by the columns of `x`, expressed
/// back in standard coordinates.
pub fn hodge_in_basis(g: &GramForm, x: &Matrix, m: &Multivector) -> Result<Multivector> {
    let gx = gram_validate(x.transpose().checked_mul(&g.matrix)?.checked_mul(x)?)?;
    let coords = ext_map(&x.inverse()?, m)?;
    ext_map(x, &hodge(&gx, &coords)?)
}

/// A random nondegenerate form: a signed diagonal one or a full
/// symmetric matrix, with equal odds.
pub fn random_gram<R: Rng>(rng: &mut R, field: FieldSpec, dim: usize) -> Result<GramForm> {
    if rng.gen_bool(0.5) {
        let signs: Vec<i64> = (0..dim).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        return standard_form(field, &signs);
    }
    random::try_retry(|| {
        let a = random::matrix(rng, field, dim, dim);
        let sym: Vec<Vec<FieldElement>> = (0..dim)
            .map(|i| (0..dim).map(|j| a.get(i.min(j), i.max(j)).clone()).collect())
            .collect();
        match gram_validate(Matrix::from_rows(sym)?) {
            Ok(g) => Ok(Some(g)),
            Err(Error::Degenerate) => Ok(None),
            Err(e) => Err(e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn e(d: usize, indices: &[usize]) -> Multivector {
        Multivector::basis(q(), d, indices).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        Vector::from_ints(q(), xs)
    }

    #[test]
    fn validation() {
        assert!(gram_validate(Matrix::identity(q(), 3)).is_ok());
        assert!(gram_validate(Matrix::from_ints(q(), &[&[0, 1], &[1, 0]])).is_ok());
        assert_eq!(gram_validate(Matrix::from_ints(q(), &[&[1, 1], &[1, 1]])), Err(Error::Degenerate));
        assert_eq!(gram_validate(Matrix::from_ints(q(), &[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric));
        assert_eq!(standard_form(q(), &[1, 2]), Err(Error::BadSign));
    }

    #[test]
    fn scalar_products() {
        let eu = standard_form(q(), &[1, 1]).unwrap();
        assert_eq!(sp(&eu, &v(&[1, 0]), &v(&[1, 0])).unwrap(), q().one());
        assert!(sp(&eu, &v(&[1, 0]), &v(&[0, 1])).unwrap().is_zero());
        let hyp = gram_validate(Matrix::from_ints(q(), &[&[0, 1], &[1, 0]])).unwrap();
        assert!(sp(&hyp, &v(&[1, 0]), &v(&[1, 0])).unwrap().is_zero());
    }

    #[test]
    fn reciprocal_of_signed_form() {
        let g = standard_form(q(), &[1, -1, 1]).unwrap();
        let r = reciprocal(&g);
        assert_eq!(r.vectors, vec![v(&[1, 0, 0]), v(&[0, -1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn dual_products() {
        let eu = standard_form(q(), &[1, 1, 1]).unwrap();
        let ed = |i| Multivector::dual_basis(q(), 3, &[i]).unwrap();
        assert_eq!(related_dual_sp(&eu, &ed(2), &ed(2)).unwrap(), q().one());
        assert!(related_dual_sp(&eu, &ed(1), &ed(2)).unwrap().is_zero());
    }

    #[test]
    fn exterior_products_of_forms() {
        let g = standard_form(q(), &[1, -1, 1, -1]).unwrap();
        let s = |a: i64| Multivector::scalar(q().int(a), 4).unwrap();
        assert_eq!(sp_ext(&g, &s(3), &s(5)).unwrap(), q().int(15));
        assert_eq!(sp_ext(&g, &e(4, &[1, 2]), &e(4, &[1, 2])).unwrap(), q().int(-1));
        assert_eq!(sp_ext(&g, &e(4, &[2, 4]), &e(4, &[2, 4])).unwrap(), q().one());
        assert!(sp_ext(&g, &e(4, &[1, 2]), &e(4, &[1, 3])).unwrap().is_zero());
        assert!(matches!(sp_ext(&g, &e(4, &[1]), &e(4, &[1, 3])), Err(Error::GradeMismatch { .. })));
    }

    #[test]
    fn hodge_examples() {
        let eu4 = standard_form(q(), &[1, 1, 1, 1]).unwrap();
        assert_eq!(hodge(&eu4, &e(4, &[1, 2])).unwrap(), e(4, &[3, 4]));
        assert_eq!(hodge_alt(&eu4, &e(4, &[1, 2])).unwrap(), e(4, &[3, 4]));
        let lor = standard_form(q(), &[1, -1]).unwrap();
        assert_eq!(hodge(&lor, &e(2, &[1])).unwrap(), -&e(2, &[2]));
        let eu3 = standard_form(q(), &[1, 1, 1]).unwrap();
        let one = Multivector::scalar(q().one(), 3).unwrap();
        assert_eq!(hodge(&eu3, &one).unwrap(), e(3, &[1, 2, 3]));
        let m = &e(4, &[1, 2]).scale(&q().int(3)) + &e(4, &[2, 4]);
        assert_eq!(hodge_inverse(&eu4, &hodge(&eu4, &m).unwrap()).unwrap(), m);
    }

    #[test]
    fn nonorthogonal_form_paths_agree() {
        let g = gram_validate(Matrix::from_ints(q(), &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 1]])).unwrap();
        for idx in MultiIndex::all(3) {
            let m = Multivector::from_terms(q(), 3, false, [(idx, q().one())]).unwrap();
            let star = hodge(&g, &m).unwrap();
            assert_eq!(hodge_alt(&g, &m).unwrap(), star);
            assert_eq!(hodge_expansion(&g, &m).unwrap(), star);
        }
    }

    #[test]
    fn orthogonal_complements() {
        let eu3 = standard_form(q(), &[1, 1, 1]).unwrap();
        let line = ProjFlat::from_span(&[v(&[1, 0, 0])]).unwrap();
        let perp = orthogonal_flat(&eu3, &line).unwrap();
        assert_eq!(perp, ProjFlat::from_span(&[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap());
        assert_eq!(orthogonal_flat(&eu3, &perp).unwrap(), line);
    }

    #[test]
    fn dual_star() {
        let eu4 = standard_form(q(), &[1, 1, 1, 1]).unwrap();
        let e12 = Multivector::dual_basis(q(), 4, &[1, 2]).unwrap();
        assert_eq!(star_dual(&eu4, &e12).unwrap(), Multivector::dual_basis(q(), 4, &[3, 4]).unwrap());
        let empty = Multivector::scalar(q().one(), 4).unwrap().with_dual(true);
        assert_eq!(star_dual(&eu4, &empty).unwrap(), Multivector::dual_basis(q(), 4, &[1, 2, 3, 4]).unwrap());
        assert_eq!(star_dual(&eu4, &e(4, &[1])), Err(Error::NotDual));
    }

    #[test]
    fn cross_products() {
        let eu3 = standard_form(q(), &[1, 1, 1]).unwrap();
        assert_eq!(cross_product(&eu3, &v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, 1]));
        assert!(cross_product(&eu3, &v(&[1, 2, 3]), &v(&[1, 2, 3])).unwrap().is_zero());
        let eu2 = standard_form(q(), &[1, 1]).unwrap();
        assert!(matches!(cross_product(&eu2, &v(&[1, 0]), &v(&[0, 1])), Err(Error::WrongDimension { .. })));
    }

    #[test]
    fn self_orthogonal_basis_form() {
        let g = gram_validate(Matrix::from_ints(q(), &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])).unwrap();
        for j in 1..=3 {
            let x = e(3, &[j]);
            assert!(x.wedge(&hodge(&g, &x).unwrap()).unwrap().is_zero());
        }
    }
}
