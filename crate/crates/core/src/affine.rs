//! Affine points, barycenters, dilations and the classical incidence
//! theorems of the affine plane as executable checks.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{Matrix, Vector};
use crate::field::{FieldElement, FieldSpec};
use crate::random;

/// A point of the affine space on `F^m`, in plain (not homogeneous)
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffinePoint(Vector);

impl AffinePoint {
    pub fn new(coords: Vector) -> Self {
        AffinePoint(coords)
    }

    pub fn from_ints(field: FieldSpec, coords: &[i64]) -> Self {
        AffinePoint(Vector::from_ints(field, coords))
    }

    pub fn coords(&self) -> &Vector {
        &self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `self − other` as a vector.
    pub fn sub(&self, other: &AffinePoint) -> Result<Vector> {
        self.0.checked_sub(&other.0)
    }

    /// `self + v`.
    pub fn offset(&self, v: &Vector) -> Result<AffinePoint> {
        Ok(AffinePoint(self.0.checked_add(v)?))
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A formal weighted sum `a₁·A₁ + ⋯ + aₙ·Aₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCombo {
    terms: Vec<(FieldElement, AffinePoint)>,
}

impl WeightedCombo {
    pub fn new(terms: Vec<(FieldElement, AffinePoint)>) -> Result<Self> {
        let (_, first) = terms.first().ok_or(Error::EmptyInput)?;
        for (w, p) in &terms {
            first.0.check_compatible(&p.0)?;
            if w.spec() != first.field() {
                return Err(Error::FieldMismatch(first.field().to_string(), w.spec().to_string()));
            }
        }
        Ok(WeightedCombo { terms })
    }

    pub fn terms(&self) -> &[(FieldElement, AffinePoint)] {
        &self.terms
    }

    pub fn total_weight(&self) -> FieldElement {
        let zero = self.terms[0].1.field().zero();
        self.terms.iter().fold(zero, |acc, (w, _)| acc + w)
    }
}

/// `α(v) = linear·v + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMapData {
    pub linear: Matrix,
    pub translation: Vector,
}

impl AffineMapData {
    pub fn new(linear: Matrix, translation: Vector) -> Result<Self> {
        if linear.rows() != translation.dim() {
            return Err(Error::DimMismatch { expected: linear.rows(), found: translation.dim() });
        }
        Ok(AffineMapData { linear, translation })
    }

    pub fn apply(&self, p: &AffinePoint) -> Result<AffinePoint> {
        Ok(AffinePoint(self.linear.mul_vec(&p.0)?.checked_add(&self.translation)?))
    }
}

/// The point `X` with `(a₁+⋯+aₙ)·X = a₁·A₁+⋯+aₙ·Aₙ`.
pub fn barycenter(c: &WeightedCombo) -> Result<AffinePoint> {
    let total = c.total_weight();
    if total.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let (_, first) = &c.terms[0];
    let mut sum = Vector::zero(first.field(), first.dim());
    for (w, p) in &c.terms {
        sum = &sum + &p.0.scale(w);
    }
    Ok(AffinePoint(sum.scale(&total.inv()?)))
}

/// `v + a·(x − w)`.
pub fn translate(v: &AffinePoint, a: &FieldElement, x: &AffinePoint, w: &AffinePoint) -> Result<AffinePoint> {
    v.offset(&x.sub(w)?.scale(a))
}

fn lifted_rank(ps: &[AffinePoint]) -> Result<usize> {
    let first = ps.first().ok_or(Error::EmptyInput)?;
    let cols = ps
        .iter()
        .map(|p| {
            first.0.check_compatible(&p.0)?;
            let mut c = vec![p.field().one()];
            c.extend(p.0.coords().iter().cloned());
            Vector::new(c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols)?.rank())
}

/// True when the differences from the first point are independent.
pub fn affine_independent(ps: &[AffinePoint]) -> Result<bool> {
    Ok(lifted_rank(ps)? == ps.len())
}

/// True when all points lie on one line.
pub fn collinear(ps: &[AffinePoint]) -> Result<bool> {
    Ok(lifted_rank(ps)? <= 2)
}

/// The scalar `k` with `u = k·v`.
pub fn vector_ratio(u: &Vector, v: &Vector) -> Result<FieldElement> {
    u.check_compatible(v)?;
    let (i, lead) = v
        .coords()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .ok_or(Error::ZeroDenominatorVector)?;
    let k = u.get(i).checked_div(lead)?;
    if v.scale(&k) == *u {
        Ok(k)
    } else {
        Err(Error::NotProportional)
    }
}

/// The vertices and one chosen point on each side line of a triangle:
/// `a1` on `BC`, `b1` on `CA`, `c1` on `AB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleConfig {
    pub a: AffinePoint,
    pub b: AffinePoint,
    pub c: AffinePoint,
    pub a1: AffinePoint,
    pub b1: AffinePoint,
    pub c1: AffinePoint,
}

fn violated(what: &str) -> Error {
    Error::PreconditionViolated(what.to_string())
}

fn check_side_points(t: &TriangleConfig) -> Result<()> {
    if collinear(&[t.a.clone(), t.b.clone(), t.c.clone()])? {
        return Err(violated("A, B, C are collinear"));
    }
    let sides = [
        ("A'", &t.a1, &t.b, &t.c, "BC"),
        ("B'", &t.b1, &t.c, &t.a, "CA"),
        ("C'", &t.c1, &t.a, &t.b, "AB"),
    ];
    for (name, p, from, to, line) in sides {
        if !collinear(&[from.clone(), to.clone(), p.clone()])? {
            return Err(violated(&format!("{name} is not on {line}")));
        }
        if p == from || p == to {
            return Err(violated(&format!("{name} coincides with a vertex")));
        }
    }
    Ok(())
}

/// `(BA'/A'C)·(CB'/B'A)·(AC'/C'B)`.
pub fn menelaus_product(t: &TriangleConfig) -> Result<FieldElement> {
    check_side_points(t)?;
    let r1 = vector_ratio(&t.a1.sub(&t.b)?, &t.c.sub(&t.a1)?)?;
    let r2 = vector_ratio(&t.b1.sub(&t.c)?, &t.a.sub(&t.b1)?)?;
    let r3 = vector_ratio(&t.c1.sub(&t.a)?, &t.b.sub(&t.c1)?)?;
    Ok(r1 * r2 * r3)
}

/// The same triple product as [`menelaus_product`]; it is `+1` exactly for
/// concurrent or parallel cevians.
pub fn ceva_product(t: &TriangleConfig) -> Result<FieldElement> {
    menelaus_product(t)
}

/// How two lines meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineIntersection {
    Point(AffinePoint),
    Parallel,
    Coincident,
    /// Neither meeting nor parallel (only in dimension 3 and up).
    Skew,
}

/// Intersects the line `P1Q1` with the line `P2Q2`.
pub fn lines_intersect_affine(
    p1: &AffinePoint,
    q1: &AffinePoint,
    p2: &AffinePoint,
    q2: &AffinePoint,
) -> Result<LineIntersection> {
    let u = q1.sub(p1)?;
    let w = q2.sub(p2)?;
    u.check_compatible(&w)?;
    if u.is_zero() || w.is_zero() {
        return Err(Error::DegenerateLine);
    }
    let gap = p2.sub(p1)?;
    if u.is_proportional(&w) {
        return Ok(if gap.is_zero() || gap.is_proportional(&u) {
            LineIntersection::Coincident
        } else {
            LineIntersection::Parallel
        });
    }
    let a = Matrix::from_columns(&[u.clone(), -&w])?;
    Ok(match a.solve(&gap)? {
        Some(st) => LineIntersection::Point(p1.offset(&u.scale(st.get(0)))?),
        None => LineIntersection::Skew,
    })
}

fn meet_point(p1: &AffinePoint, q1: &AffinePoint, p2: &AffinePoint, q2: &AffinePoint) -> Result<Option<AffinePoint>> {
    Ok(match lines_intersect_affine(p1, q1, p2, q2)? {
        LineIntersection::Point(x) => Some(x),
        _ => None,
    })
}

/// `δ_{t,u;b}(v) = t + b·(v − u)`.
pub fn dilation_apply(t: &AffinePoint, u: &AffinePoint, b: &FieldElement, v: &AffinePoint) -> Result<AffinePoint> {
    translate(t, b, v, u)
}

/// The linear part `f(h) = α(v + h) − α(v)` read off at `probe`.
pub fn underlying_linear(alpha: &AffineMapData, probe: &AffinePoint) -> Result<Matrix> {
    let base = alpha.apply(probe)?;
    let n = probe.dim();
    let cols = (1..=n)
        .map(|i| alpha.apply(&probe.offset(&Vector::unit(probe.field(), n, i))?)?.sub(&base))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(&cols)
}

/// For `W = BX ∩ AC`: whether `CX ∥ AB`, and whether `WC/WA = WX/WB`.
pub fn similarity_check(a: &AffinePoint, b: &AffinePoint, c: &AffinePoint, x: &AffinePoint) -> Result<(bool, bool)> {
    let tri = [a.clone(), b.clone(), c.clone()];
    if collinear(&tri)? {
        return Err(violated("A, B, C are collinear"));
    }
    if lifted_rank(&[a.clone(), b.clone(), c.clone(), x.clone()])? > 3 {
        return Err(violated("X is not in the plane ABC"));
    }
    for (p, q, line) in [(a, b, "AB"), (b, c, "BC"), (c, a, "CA")] {
        if collinear(&[p.clone(), q.clone(), x.clone()])? {
            return Err(violated(&format!("X is on {line}")));
        }
    }
    let w = meet_point(b, x, a, c)?.ok_or_else(|| violated("BX does not meet AC"))?;
    let parallel = x.sub(c)?.is_proportional(&b.sub(a)?);
    let r1 = vector_ratio(&c.sub(&w)?, &a.sub(&w)?)?;
    let r2 = vector_ratio(&x.sub(&w)?, &b.sub(&w)?)?;
    Ok((parallel, r1 == r2))
}

/// Whether `AA'`, `BB'`, `CC'` pass through one point or are all parallel.
pub fn cevians_concurrent_or_parallel(t: &TriangleConfig) -> Result<bool> {
    let lines = [(&t.a, &t.a1), (&t.b, &t.b1), (&t.c, &t.c1)];
    let dirs = lines.iter().map(|(p, q)| q.sub(p)).collect::<Result<Vec<_>>>()?;
    if dirs[0].is_proportional(&dirs[1]) && dirs[1].is_proportional(&dirs[2]) {
        return Ok(true);
    }
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        if let Some(p) = meet_point(lines[i].0, lines[i].1, lines[j].0, lines[j].1)? {
            return collinear(&[lines[k].0.clone(), lines[k].1.clone(), p]);
        }
    }
    Ok(false)
}

/// Desargues in the affine plane: for triangles in perspective, the three
/// pairs of corresponding sides meet in collinear points. Fails when a pair
/// of corresponding sides is parallel.
pub fn check_desargues_affine(t1: [&AffinePoint; 3], t2: [&AffinePoint; 3]) -> Result<bool> {
    let mut hits = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let p = meet_point(t1[i], t1[j], t2[i], t2[j])?
            .ok_or_else(|| violated("corresponding sides do not meet in a point"))?;
        hits.push(p);
    }
    collinear(&hits)
}

/// The standardized affine Pappus configuration with `A = (0,0)`,
/// `C = (c,0)`, `B' = (1,1)`, `A' = (1,a)`, `B` at infinity along the first
/// axis and `C'` at infinity along the second. Returns whether
/// `C'' − B'' = a(1−c)⁻¹·(B' − C)`.
pub fn check_pappus_affine(a: &FieldElement, c: &FieldElement) -> Result<bool> {
    let f = a.spec();
    if a.is_zero() || c.is_zero() || c.is_one() {
        return Err(violated("need a != 0 and c not in {0, 1}"));
    }
    let pt = |x: FieldElement, y: FieldElement| AffinePoint(Vector::new(vec![x, y]).expect("two coords"));
    let pa = pt(f.zero(), f.zero());
    let pc = pt(c.clone(), f.zero());
    let pb1 = pt(f.one(), f.one());
    let pa1 = pt(f.one(), a.clone());
    let up = pt(f.zero(), f.one());
    let right = pa1.offset(&Vector::unit(f, 2, 1))?;
    let b2 = meet_point(&pa, &up, &pa1, &pc)?.ok_or_else(|| violated("AC' parallel to A'C"))?;
    let c2 = meet_point(&pa, &pb1, &pa1, &right)?.ok_or_else(|| violated("AB' parallel to A'B"))?;
    let lhs = c2.sub(&b2)?;
    let rhs = pb1.sub(&pc)?.scale(&(a * &(f.one() - c).inv()?));
    Ok(lhs == rhs)
}

pub fn random_point<R: Rng>(rng: &mut R, field: FieldSpec, dim: usize) -> AffinePoint {
    AffinePoint(random::vector(rng, field, dim))
}

/// Three non-collinear points in the plane.
pub fn random_triangle<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<[AffinePoint; 3]> {
    random::try_retry(|| {
        let t = [random_point(rng, field, 2), random_point(rng, field, 2), random_point(rng, field, 2)];
        Ok((!collinear(&t)?).then_some(t))
    })
}

fn point_on<R: Rng>(rng: &mut R, p: &AffinePoint, q: &AffinePoint) -> Result<AffinePoint> {
    let f = p.field();
    random::try_retry(|| {
        let t = random::scalar(rng, f);
        if t.is_zero() || t.is_one() {
            return Ok(None);
        }
        Ok(Some(translate(p, &t, q, p)?))
    })
}

/// A triangle with an arbitrary point on each side line.
pub fn random_side_points<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<TriangleConfig> {
    let [a, b, c] = random_triangle(rng, field)?;
    let a1 = point_on(rng, &b, &c)?;
    let b1 = point_on(rng, &c, &a)?;
    let c1 = point_on(rng, &a, &b)?;
    Ok(TriangleConfig { a, b, c, a1, b1, c1 })
}

/// The side lines of a random triangle cut by a random transversal.
pub fn transversal_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<TriangleConfig> {
    random::try_retry(|| {
        let [a, b, c] = random_triangle(rng, field)?;
        let (p, q) = (random_point(rng, field, 2), random_point(rng, field, 2));
        if p == q {
            return Ok(None);
        }
        let hits = (meet_point(&b, &c, &p, &q)?, meet_point(&c, &a, &p, &q)?, meet_point(&a, &b, &p, &q)?);
        let (Some(a1), Some(b1), Some(c1)) = hits else { return Ok(None) };
        let t = TriangleConfig { a, b, c, a1, b1, c1 };
        Ok(check_side_points(&t).is_ok().then_some(t))
    })
}

/// Feet of the cevians through a random point off the side lines.
pub fn cevian_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<TriangleConfig> {
    random::try_retry(|| {
        let [a, b, c] = random_triangle(rng, field)?;
        let p = random_point(rng, field, 2);
        for (u, v) in [(&a, &b), (&b, &c), (&c, &a)] {
            if collinear(&[u.clone(), v.clone(), p.clone()])? {
                return Ok(None);
            }
        }
        let hits = (meet_point(&a, &p, &b, &c)?, meet_point(&b, &p, &c, &a)?, meet_point(&c, &p, &a, &b)?);
        let (Some(a1), Some(b1), Some(c1)) = hits else { return Ok(None) };
        let t = TriangleConfig { a, b, c, a1, b1, c1 };
        Ok(check_side_points(&t).is_ok().then_some(t))
    })
}

/// Three parallel cevians.
pub fn parallel_cevian_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<TriangleConfig> {
    random::try_retry(|| {
        let [a, b, c] = random_triangle(rng, field)?;
        let a1 = point_on(rng, &b, &c)?;
        let dir = a1.sub(&a)?;
        let hits = (
            meet_point(&b, &b.offset(&dir)?, &c, &a)?,
            meet_point(&c, &c.offset(&dir)?, &a, &b)?,
        );
        let (Some(b1), Some(c1)) = hits else { return Ok(None) };
        let t = TriangleConfig { a, b, c, a1, b1, c1 };
        Ok(check_side_points(&t).is_ok().then_some(t))
    })
}

/// Midpoints of the sides; needs characteristic other than 2.
pub fn median_configuration(a: AffinePoint, b: AffinePoint, c: AffinePoint) -> Result<TriangleConfig> {
    let f = a.field();
    let mid = |p: &AffinePoint, q: &AffinePoint| {
        barycenter(&WeightedCombo::new(vec![(f.one(), p.clone()), (f.one(), q.clone())])?)
    };
    Ok(TriangleConfig { a1: mid(&b, &c)?, b1: mid(&c, &a)?, c1: mid(&a, &b)?, a, b, c })
}

/// Two triangles in perspective from a point, with every pair of
/// corresponding sides meeting.
pub fn desargues_affine_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<([AffinePoint; 3], [AffinePoint; 3])> {
    random::try_retry(|| {
        let o = random_point(rng, field, 2);
        let t1 = random_triangle(rng, field)?;
        if t1.contains(&o) {
            return Ok(None);
        }
        let t2 = [0, 1, 2].map(|i| {
            let k = random::scalar(rng, field);
            translate(&o, &k, &t1[i], &o)
        });
        let t2 = [t2[0].clone()?, t2[1].clone()?, t2[2].clone()?];
        if t1.iter().zip(&t2).any(|(p, q)| p == q) || t2.contains(&o) || collinear(&t2)? {
            return Ok(None);
        }
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            if meet_point(&t1[i], &t1[j], &t2[i], &t2[j])?.is_none() {
                return Ok(None);
            }
        }
        Ok(Some((t1, t2)))
    })
}

/// A point `X` in the plane of the triangle with `BX` meeting `AC`. With
/// `parallel`, `X − C` is a multiple of `B − A`.
pub fn similarity_configuration<R: Rng>(rng: &mut R, field: FieldSpec, parallel: bool) -> Result<[AffinePoint; 4]> {
    random::try_retry(|| {
        let [a, b, c] = random_triangle(rng, field)?;
        let x = if parallel {
            let k = random::nonzero_scalar(rng, field);
            c.offset(&b.sub(&a)?.scale(&k))?
        } else {
            random_point(rng, field, 2)
        };
        Ok(match similarity_check(&a, &b, &c, &x) {
            Ok(_) => Some([a, b, c, x]),
            Err(Error::PreconditionViolated(_)) => None,
            Err(e) => return Err(e),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p(xs: &[i64]) -> AffinePoint {
        AffinePoint::from_ints(q(), xs)
    }

    #[test]
    fn midpoint_barycenter() {
        let c = WeightedCombo::new(vec![(q().one(), p(&[0, 0])), (q().one(), p(&[2, 4]))]).unwrap();
        assert_eq!(barycenter(&c).unwrap(), p(&[1, 2]));
        let z = WeightedCombo::new(vec![(q().one(), p(&[0, 0])), (q().int(-1), p(&[2, 4]))]).unwrap();
        assert_eq!(barycenter(&z), Err(Error::ZeroWeight));
    }

    #[test]
    fn translates() {
        let (v, x, w) = (p(&[1, 2]), p(&[5, 5]), p(&[3, 1]));
        assert_eq!(translate(&v, &q().zero(), &x, &w).unwrap(), v);
        assert_eq!(translate(&w, &q().one(), &x, &w).unwrap(), x);
    }

    #[test]
    fn independence_and_collinearity() {
        assert!(!affine_independent(&[p(&[0, 0]), p(&[1, 1]), p(&[2, 2])]).unwrap());
        assert!(affine_independent(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1])]).unwrap());
        assert!(!affine_independent(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1]), p(&[3, 7])]).unwrap());
        assert!(collinear(&[p(&[1, 1]), p(&[1, 1]), p(&[1, 1])]).unwrap());
        assert!(collinear(&[p(&[0, 0]), p(&[1, 1]), p(&[2, 2])]).unwrap());
        assert!(!collinear(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1])]).unwrap());
    }

    #[test]
    fn ratios() {
        let v = |xs: &[i64]| Vector::from_ints(q(), xs);
        assert_eq!(vector_ratio(&v(&[2, 4]), &v(&[1, 2])).unwrap(), q().int(2));
        assert!(vector_ratio(&v(&[0, 0]), &v(&[1, 2])).unwrap().is_zero());
        assert_eq!(vector_ratio(&v(&[1, 0]), &v(&[0, 1])), Err(Error::NotProportional));
        assert_eq!(vector_ratio(&v(&[1, 0]), &v(&[0, 0])), Err(Error::ZeroDenominatorVector));
    }

    #[test]
    fn line_intersections() {
        let hit = lines_intersect_affine(&p(&[0, 0]), &p(&[1, 0]), &p(&[0, 0]), &p(&[0, 1])).unwrap();
        assert_eq!(hit, LineIntersection::Point(p(&[0, 0])));
        let par = lines_intersect_affine(&p(&[0, 0]), &p(&[1, 0]), &p(&[0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(par, LineIntersection::Parallel);
        let same = lines_intersect_affine(&p(&[0, 0]), &p(&[1, 1]), &p(&[2, 2]), &p(&[5, 5])).unwrap();
        assert_eq!(same, LineIntersection::Coincident);
        let skew = lines_intersect_affine(&p(&[0, 0, 0]), &p(&[1, 0, 0]), &p(&[0, 1, 1]), &p(&[0, 2, 1])).unwrap();
        assert_eq!(skew, LineIntersection::Skew);
        assert_eq!(lines_intersect_affine(&p(&[0, 0]), &p(&[0, 0]), &p(&[0, 1]), &p(&[1, 1])), Err(Error::DegenerateLine));
    }

    #[test]
    fn medians_are_concurrent() {
        let t = median_configuration(p(&[0, 0]), p(&[4, 0]), p(&[0, 6])).unwrap();
        assert_eq!(ceva_product(&t).unwrap(), q().one());
        assert!(cevians_concurrent_or_parallel(&t).unwrap());
    }

    #[test]
    fn side_point_preconditions() {
        let mut t = median_configuration(p(&[0, 0]), p(&[4, 0]), p(&[0, 6])).unwrap();
        t.a1 = t.b.clone();
        assert!(matches!(menelaus_product(&t), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn fixed_transversal() {
        // the line x + y = 1 against the triangle (0,0), (2,0), (0,3)
        let t = TriangleConfig {
            a: p(&[0, 0]),
            b: p(&[2, 0]),
            c: p(&[0, 3]),
            a1: p(&[4, -3]),
            b1: p(&[0, 1]),
            c1: p(&[1, 0]),
        };
        assert_eq!(menelaus_product(&t).unwrap(), q().int(-1));
        assert!(collinear(&[t.a1.clone(), t.b1.clone(), t.c1.clone()]).unwrap());
    }

    #[test]
    fn dilations() {
        let (t, u, v) = (p(&[1, 2]), p(&[3, 4]), p(&[7, -1]));
        assert_eq!(dilation_apply(&u, &u, &q().one(), &v).unwrap(), v);
        assert_eq!(dilation_apply(&t, &u, &q().zero(), &v).unwrap(), t);
        let b = q().int(3);
        let there = dilation_apply(&t, &u, &b, &v).unwrap();
        assert_eq!(dilation_apply(&u, &t, &b.inv().unwrap(), &there).unwrap(), v);
    }

    #[test]
    fn linear_parts() {
        let shift = AffineMapData::new(Matrix::identity(q(), 2), Vector::from_ints(q(), &[5, -1])).unwrap();
        assert_eq!(underlying_linear(&shift, &p(&[3, 3])).unwrap(), Matrix::identity(q(), 2));
        let m = Matrix::from_ints(q(), &[&[1, 2], &[3, 4]]);
        let lin = AffineMapData::new(m.clone(), Vector::zero(q(), 2)).unwrap();
        assert_eq!(underlying_linear(&lin, &p(&[-2, 9])).unwrap(), m);
    }

    #[test]
    fn similarity_examples() {
        let (a, b, c) = (p(&[0, 0]), p(&[4, 0]), p(&[0, 4]));
        assert_eq!(similarity_check(&a, &b, &c, &p(&[2, 4])).unwrap(), (true, true));
        assert_eq!(similarity_check(&a, &b, &c, &p(&[1, 1])).unwrap(), (false, false));
        assert!(matches!(similarity_check(&a, &b, &c, &p(&[2, 0])), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn affine_pappus_standard_form() {
        let c = FieldElement::from_ratio(q(), 3, 2).unwrap();
        assert!(check_pappus_affine(&q().int(5), &c).unwrap());
        assert!(check_pappus_affine(&q().zero(), &c).is_err());
    }

    #[test]
    fn generators_meet_their_contracts() {
        let f = FieldSpec::prime(101).unwrap();
        let mut r = random::rng(3, 0);
        let t = transversal_configuration(&mut r, f).unwrap();
        assert_eq!(menelaus_product(&t).unwrap(), f.int(-1));
        let t = cevian_configuration(&mut r, f).unwrap();
        assert_eq!(ceva_product(&t).unwrap(), f.one());
        let t = parallel_cevian_configuration(&mut r, f).unwrap();
        assert_eq!(ceva_product(&t).unwrap(), f.one());
        assert!(cevians_concurrent_or_parallel(&t).unwrap());
        let (t1, t2) = desargues_affine_configuration(&mut r, f).unwrap();
        assert!(check_desargues_affine([&t1[0], &t1[1], &t1[2]], [&t2[0], &t2[1], &t2[2]]).unwrap());
    }
}
