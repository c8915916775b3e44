//! The annihilator map `H`, the regressive product, brackets, annihilators
//! and dual maps.

use crate::error::{Error, Result};
use crate::exterior::{ext_map, wedge_vectors, Matrix, MultiIndex, Multivector, Vector};
use crate::field::FieldElement;

/// `H(e_I) = (−1)^ρ E_Ī` where `ρ` sorts `(I, Ī)`, extended linearly.
#[allow(non_snake_case)]
pub fn annihilator_H(m: &Multivector) -> Result<Multivector> {
    if m.is_dual() {
        return Err(Error::AlreadyDual);
    }
    let d = m.dim();
    Multivector::from_terms(
        m.field(),
        d,
        true,
        m.terms().map(|(idx, c)| {
            let comp = idx.complement(d);
            let odd = idx.wedge_sign(comp).expect("disjoint");
            (comp, if odd { -c } else { c.clone() })
        }),
    )
}

/// The inverse of [`annihilator_H`].
#[allow(non_snake_case)]
pub fn annihilator_H_inv(dm: &Multivector) -> Result<Multivector> {
    if !dm.is_dual() {
        return Err(Error::NotDual);
    }
    let d = dm.dim();
    Multivector::from_terms(
        dm.field(),
        d,
        false,
        dm.terms().map(|(comp, c)| {
            let idx = comp.complement(d);
            let odd = idx.wedge_sign(comp).expect("disjoint");
            (idx, if odd { -c } else { c.clone() })
        }),
    )
}

/// `a ∨ b = H⁻¹(H(a) ∧ H(b))`.
pub fn regressive(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_compatible(b)?;
    annihilator_H_inv(&annihilator_H(a)?.wedge(&annihilator_H(b)?)?)
}

/// The coefficient of `e_{1..d}` in a grade-d element.
pub fn bracket(m: &Multivector) -> Result<FieldElement> {
    let d = m.dim();
    match m.homogeneous_grade() {
        None if m.is_zero() => Ok(m.field().zero()),
        Some(g) if g == d => Ok(m.coefficient(MultiIndex::full(d))),
        found => Err(Error::WrongGrade { dim: d, found }),
    }
}

fn wedge_subset(vs: &[Vector], idx: MultiIndex, field_dim: (crate::FieldSpec, usize)) -> Result<Multivector> {
    let picked: Vec<Vector> = idx.indices().iter().map(|&i| vs[i - 1].clone()).collect();
    if picked.is_empty() {
        Multivector::scalar(field_dim.0.one(), field_dim.1)
    } else {
        wedge_vectors(&picked)
    }
}

fn coordfree_setup(us: &[Vector], vs: &[Vector]) -> Result<(Multivector, Multivector, usize)> {
    let first = us.first().or(vs.first()).ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if us.is_empty() || vs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if us.len() + vs.len() < d {
        return Err(Error::TooFewVectors { have: us.len() + vs.len(), dim: d });
    }
    let alpha = wedge_vectors(us)?;
    let beta = wedge_vectors(vs)?;
    alpha.check_compatible(&beta)?;
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::DependentFactors);
    }
    Ok((alpha, beta, us.len() + vs.len() - d))
}

/// `(u₁∧⋯∧u_l) ∨ (v₁∧⋯∧v_m)` without `H`:
/// `Σ_{|I|=n} (−1)^{ĪI} [u_Ī ∧ β] · u_I` with `β = v₁∧⋯∧v_m` and
/// `n = l + m − d`, the sum over subsets of the u-positions.
pub fn regressive_coordfree(us: &[Vector], vs: &[Vector]) -> Result<Multivector> {
    let (_, beta, n) = coordfree_setup(us, vs)?;
    let (field, d) = (beta.field(), beta.dim());
    let l = us.len();
    let mut out = Multivector::zero(field, d)?;
    if l > 16 {
        return Err(Error::DependentFactors);
    }
    for i in MultiIndex::all_of_grade(l, n) {
        let ibar = i.complement(l);
        let br = bracket(&wedge_subset(us, ibar, (field, d))?.wedge(&beta)?)?;
        if br.is_zero() {
            continue;
        }
        let odd = ibar.wedge_sign(i).expect("disjoint");
        let term = wedge_subset(us, i, (field, d))?.scale(&br);
        out = out.checked_add(&if odd { -&term } else { term })?;
    }
    Ok(out)
}

/// The v-side form of [`regressive_coordfree`]:
/// `Σ_{|I|=n} (−1)^{IĪ} [α ∧ v_Ī] · v_I`.
pub fn regressive_coordfree_v(us: &[Vector], vs: &[Vector]) -> Result<Multivector> {
    let (alpha, _, n) = coordfree_setup(us, vs)?;
    let (field, d) = (alpha.field(), alpha.dim());
    let m = vs.len();
    let mut out = Multivector::zero(field, d)?;
    if m > 16 {
        return Err(Error::DependentFactors);
    }
    for i in MultiIndex::all_of_grade(m, n) {
        let ibar = i.complement(m);
        let br = bracket(&alpha.wedge(&wedge_subset(vs, ibar, (field, d))?)?)?;
        if br.is_zero() {
            continue;
        }
        let odd = i.wedge_sign(ibar).expect("disjoint");
        let term = wedge_subset(vs, i, (field, d))?.scale(&br);
        out = out.checked_add(&if odd { -&term } else { term })?;
    }
    Ok(out)
}

/// The regressive product built from the basis given by the columns of
/// `x` instead of the standard one.
pub fn regressive_in_basis(x: &Matrix, a: &Multivector, b: &Multivector) -> Result<Multivector> {
    let to_coords = x.inverse()?;
    let ca = ext_map(&to_coords, a)?;
    let cb = ext_map(&to_coords, b)?;
    ext_map(x, &regressive(&ca, &cb)?)
}

/// Evaluates a grade-1 dual element on a vector.
pub fn pair(phi: &Multivector, v: &Vector) -> Result<FieldElement> {
    if !phi.is_dual() {
        return Err(Error::NotDual);
    }
    if phi.dim() != v.dim() {
        return Err(Error::DimMismatch { expected: phi.dim(), found: v.dim() });
    }
    if !phi.is_zero() && phi.homogeneous_grade() != Some(1) {
        return Err(Error::GradeMismatch { expected: 1, found: phi.homogeneous_grade() });
    }
    phi.to_vector()?.dot(v)
}

/// A basis of the functionals vanishing on `⟨W⟩`.
pub fn annihilator_subspace(w: &[Vector]) -> Result<Vec<Multivector>> {
    let first = w.first().ok_or(Error::EmptyInput)?;
    let rows = w.iter().map(|v| v.coords().to_vec()).collect();
    let a = Matrix::from_rows(rows)?;
    if a.cols() != first.dim() {
        return Err(Error::DimMismatch { expected: first.dim(), found: a.cols() });
    }
    if a.rank() < w.len() {
        return Err(Error::DependentInput);
    }
    a.kernel_basis()
        .iter()
        .map(|k| Ok(Multivector::from_vector(k)?.with_dual(true)))
        .collect()
}

/// Matrix of `f⊤` in the dual bases.
pub fn dual_map(m: &Matrix) -> Matrix {
    m.transpose()
}

/// `f⁻⊤ = (f⁻¹)⊤`.
pub fn contragredient(m: &Matrix) -> Result<Matrix> {
    Ok(m.inverse()?.transpose())
}

/// `det[φᵢ(vⱼ)]`.
pub fn eval_dual_blade(phis: &[Multivector], vs: &[Vector]) -> Result<FieldElement> {
    if phis.len() != vs.len() {
        return Err(Error::LengthMismatch(phis.len(), vs.len()));
    }
    let first = vs.first().ok_or(Error::EmptyInput)?;
    if phis.is_empty() {
        return Ok(first.field().one());
    }
    let rows = phis
        .iter()
        .map(|phi| vs.iter().map(|v| pair(phi, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)?.det()
}

/// Both sides of the Jacobi minor identity: the leading n×n minor of `m`,
/// and `det m` times the trailing (d−n)×(d−n) minor of `m⁻¹`.
pub fn jacobi_identity_check(m: &Matrix, n: usize) -> Result<(FieldElement, FieldElement)> {
    let inv = m.inverse()?;
    let d = m.rows();
    if n > d {
        return Err(Error::IndexOutOfRange { index: n, dim: d });
    }
    let minor = |a: &Matrix, idx: Vec<usize>| -> Result<FieldElement> {
        if idx.is_empty() {
            Ok(a.field().one())
        } else {
            a.submatrix(&idx, &idx).det()
        }
    };
    let lhs = minor(m, (0..n).collect())?;
    let rhs = m.det()? * minor(&inv, (n..d).collect())?;
    Ok((lhs, rhs))
}
