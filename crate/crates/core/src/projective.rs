//! Flats of projective space as blades: join and meet, frames,
//! projective transformations, central projection, and the Pappus and
//! Desargues configurations.

use std::fmt;

use rand::Rng;

use crate::affine::AffinePoint;
use crate::duality::{annihilator_H, annihilator_H_inv};
use crate::error::{Error, Result};
use crate::exterior::{factor_blade_exact, is_blade, project_along, wedge_vectors, Matrix, Multivector, Vector};
use crate::field::{FieldElement, FieldSpec};
use crate::random;

/// A flat of the projective space on `V`, held as a representing blade.
///
/// Equality is proportionality of blades. A grade-0 blade stands for the
/// null flat, which is what [`meet`] produces for disjoint flats.
#[derive(Debug, Clone)]
pub struct ProjFlat {
    blade: Multivector,
}

impl ProjFlat {
    pub fn new(blade: Multivector) -> Result<Self> {
        if blade.is_dual() {
            return Err(Error::AlreadyDual);
        }
        if blade.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !is_blade(&blade) {
            return Err(Error::NotABlade);
        }
        Ok(ProjFlat { blade })
    }

    /// The flat spanned by independent vectors.
    pub fn from_span(vs: &[Vector]) -> Result<Self> {
        let blade = wedge_vectors(vs)?;
        if blade.is_zero() {
            return Err(Error::DependentInput);
        }
        Ok(ProjFlat { blade })
    }

    pub fn blade(&self) -> &Multivector {
        &self.blade
    }

    pub fn into_blade(self) -> Multivector {
        self.blade
    }

    /// Dimension of the underlying subspace.
    pub fn grade(&self) -> usize {
        self.blade.homogeneous_grade().expect("nonzero blade")
    }

    /// Projective dimension, `grade − 1`; the null flat has `−1`.
    pub fn pdim(&self) -> isize {
        self.grade() as isize - 1
    }

    pub fn dim(&self) -> usize {
        self.blade.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.blade.field()
    }

    pub fn is_null(&self) -> bool {
        self.grade() == 0
    }

    /// Vectors whose wedge is exactly the blade.
    pub fn factors(&self) -> Vec<Vector> {
        factor_blade_exact(&self.blade).expect("held blades factor")
    }

    /// Whether `v` lies in the subspace.
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.blade.wedge(&Multivector::from_vector(v)?)?.is_zero())
    }
}

impl PartialEq for ProjFlat {
    fn eq(&self, other: &Self) -> bool {
        self.blade.is_proportional(&other.blade)
    }
}

impl Eq for ProjFlat {}

impl fmt::Display for ProjFlat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.blade.fmt(f)
    }
}

/// A point of projective space: a nonzero vector up to scale.
#[derive(Debug, Clone)]
pub struct ProjPoint(Vector);

impl ProjPoint {
    pub fn new(v: Vector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(ProjPoint(v))
    }

    pub fn from_ints(field: FieldSpec, coords: &[i64]) -> Result<Self> {
        Self::new(Vector::from_ints(field, coords))
    }

    pub fn vector(&self) -> &Vector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field()
    }

    pub fn to_flat(&self) -> ProjFlat {
        ProjFlat::from_span(std::slice::from_ref(&self.0)).expect("nonzero")
    }

    /// Reads a grade-1 flat as a point.
    pub fn from_flat(f: &ProjFlat) -> Result<Self> {
        if f.grade() != 1 {
            return Err(Error::GradeMismatch { expected: 1, found: Some(f.grade()) });
        }
        Self::new(f.blade().to_vector()?)
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.0.is_proportional(&other.0)
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(1, p)`.
pub fn embed_affine(p: &AffinePoint) -> ProjPoint {
    let mut c = vec![p.field().one()];
    c.extend(p.coords().coords().iter().cloned());
    ProjPoint(Vector::new(c).expect("nonempty"))
}

/// `(0, v)`.
pub fn embed_direction(v: &Vector) -> Result<ProjPoint> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut c = vec![v.field().zero()];
    c.extend(v.coords().iter().cloned());
    ProjPoint::new(Vector::new(c)?)
}

/// A projective point read back in affine terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dehomogenized {
    Affine(AffinePoint),
    AtInfinity(Vector),
}

pub fn dehomogenize(p: &ProjPoint) -> Result<Dehomogenized> {
    let coords = p.0.coords();
    if p.dim() < 2 {
        return Err(Error::DimOutOfRange(p.dim() - 1));
    }
    let rest = Vector::new(coords[1..].to_vec())?;
    Ok(if coords[0].is_zero() {
        Dehomogenized::AtInfinity(rest)
    } else {
        Dehomogenized::Affine(AffinePoint::new(rest.scale(&coords[0].inv()?)))
    })
}

/// Folds vectors into `gamma`, skipping any that are already dependent.
fn fold(mut gamma: Multivector, vs: impl IntoIterator<Item = Vector>, dual: bool) -> Result<Multivector> {
    for v in vs {
        let vm = Multivector::from_vector(&v)?.with_dual(dual);
        let next = gamma.wedge(&vm)?;
        if !next.is_zero() {
            gamma = next;
        }
    }
    Ok(gamma)
}

/// The smallest flat containing all inputs.
pub fn join(flats: &[ProjFlat]) -> Result<ProjFlat> {
    let (first, rest) = flats.split_first().ok_or(Error::EmptyInput)?;
    let mut gamma = first.blade.clone();
    for f in rest {
        first.blade.check_compatible(&f.blade)?;
        gamma = fold(gamma, f.factors(), false)?;
    }
    Ok(ProjFlat { blade: gamma })
}

/// The intersection, by the join algorithm on annihilator blades. A
/// grade-0 result is the null flat.
pub fn meet(a: &ProjFlat, b: &ProjFlat) -> Result<ProjFlat> {
    a.blade.check_compatible(&b.blade)?;
    let ha = annihilator_H(&a.blade)?;
    let hb = annihilator_H(&b.blade)?;
    let hb_factors = factor_blade_exact(&hb)?;
    let gamma = fold(ha, hb_factors, true)?;
    Ok(ProjFlat { blade: annihilator_H_inv(&gamma)? })
}

/// One flat contains the other.
pub fn incident(a: &ProjFlat, b: &ProjFlat) -> Result<bool> {
    Ok(join(&[a.clone(), b.clone()])?.grade() == a.grade().max(b.grade()))
}

pub fn collinear_proj(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<bool> {
    Ok(wedge_vectors(&[p.0.clone(), q.0.clone(), r.0.clone()])?.is_zero())
}

/// Distinct, and every `d` of them (or all, when fewer) independent.
pub fn general_position(points: &[ProjPoint]) -> Result<bool> {
    let Some(first) = points.first() else { return Ok(true) };
    let d = first.dim();
    for (i, p) in points.iter().enumerate() {
        p.0.check_compatible(&first.0)?;
        if points[..i].contains(p) {
            return Ok(false);
        }
    }
    let k = d.min(points.len());
    let mut chosen = Vec::with_capacity(k);
    every_subset_independent(points, k, 0, &mut chosen)
}

fn every_subset_independent(points: &[ProjPoint], k: usize, start: usize, chosen: &mut Vec<Vector>) -> Result<bool> {
    if chosen.len() == k {
        return Ok(k == 0 || !wedge_vectors(chosen)?.is_zero());
    }
    for i in start..points.len() {
        if points.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(points[i].0.clone());
        let ok = every_subset_independent(points, k, i + 1, chosen)?;
        chosen.pop();
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d + 1` points in general position; the first is the unit point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjFrame {
    points: Vec<ProjPoint>,
}

impl ProjFrame {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        let d = points.first().ok_or(Error::NotAFrame)?.dim();
        if points.len() != d + 1 || points.iter().any(|p| p.dim() != d) || !general_position(&points)? {
            return Err(Error::NotAFrame);
        }
        Ok(ProjFrame { points })
    }

    /// `ε₀ = (1,…,1)` followed by the standard basis.
    pub fn standard(field: FieldSpec, d: usize) -> Self {
        let mut points = vec![ProjPoint(Vector::from_ints(field, &vec![1; d]))];
        points.extend((1..=d).map(|i| ProjPoint(Vector::unit(field, d, i))));
        ProjFrame { points }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }
}

/// Representatives `x₁,…,x_d` of the base points with `x₁+⋯+x_d`
/// representing the unit point, scaled so `x₁` has leading coordinate 1.
pub fn standardize_frame(f: &ProjFrame) -> Result<Vec<Vector>> {
    let base: Vec<Vector> = f.points[1..].iter().map(|p| p.0.clone()).collect();
    let a = Matrix::from_columns(&base)?;
    let c = a.solve(&f.points[0].0)?.ok_or(Error::NotAFrame)?;
    let xs: Vec<Vector> = base.iter().zip(c.coords()).map(|(p, ci)| p.scale(ci)).collect();
    if xs.iter().any(Vector::is_zero) {
        return Err(Error::NotAFrame);
    }
    let lead = xs[0].leading().expect("nonzero").inv()?;
    Ok(xs.iter().map(|x| x.scale(&lead)).collect())
}

/// An invertible matrix up to scale, stored with its first nonzero entry
/// (row-major) equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjTransform {
    matrix: Matrix,
}

impl ProjTransform {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rank() != m.rows() {
            return Err(Error::SingularMatrix);
        }
        let lead = m.leading().expect("invertible").inv()?;
        Ok(ProjTransform { matrix: m.scale(&lead) })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

impl fmt::Display for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

/// The unique transformation taking each point of `src` to the
/// corresponding point of `dst`.
pub fn transform_from_frames(src: &ProjFrame, dst: &ProjFrame) -> Result<ProjTransform> {
    if src.dim() != dst.dim() {
        return Err(Error::DimMismatch { expected: src.dim(), found: dst.dim() });
    }
    let s = Matrix::from_columns(&standardize_frame(src)?)?;
    let d = Matrix::from_columns(&standardize_frame(dst)?)?;
    ProjTransform::new(d.checked_mul(&s.inverse()?)?)
}

pub fn transform_apply(t: &ProjTransform, p: &ProjPoint) -> Result<ProjPoint> {
    if t.matrix.cols() != p.dim() {
        return Err(Error::DimMismatch { expected: t.matrix.cols(), found: p.dim() });
    }
    ProjPoint::new(t.matrix.mul_vec(&p.0)?)
}

/// Equal as projective transformations (proportional matrices).
pub fn transforms_equal(s: &ProjTransform, t: &ProjTransform) -> bool {
    s == t
}

/// Projects `p` from `center` onto `target`, which must be complementary.
pub fn central_project(center: &ProjFlat, target: &ProjFlat, p: &ProjPoint) -> Result<ProjPoint> {
    let sum = join(&[center.clone(), target.clone()])?;
    if sum.grade() != center.dim() || center.grade() + target.grade() != center.dim() {
        return Err(Error::NotComplementary);
    }
    if center.contains(&p.0)? {
        return Err(Error::PointInCenter);
    }
    ProjPoint::new(project_along(&target.factors(), &center.factors(), &p.0)?)
}

fn line(p: &ProjPoint, q: &ProjPoint) -> Result<ProjFlat> {
    ProjFlat::from_span(&[p.0.clone(), q.0.clone()])
}

fn meet_point(l1: &ProjFlat, l2: &ProjFlat) -> Result<ProjPoint> {
    ProjPoint::from_flat(&meet(l1, l2)?)
}

/// Three points on one line and three on another: `a, b, c` on `l` and
/// `a1, b1, c1` on `l'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PappusConfig {
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub a1: ProjPoint,
    pub b1: ProjPoint,
    pub c1: ProjPoint,
}

impl PappusConfig {
    /// The diagonal points `A'' = BC'∩B'C`, `B'' = AC'∩A'C`,
    /// `C'' = AB'∩A'B`.
    pub fn diagonal_points(&self) -> Result<[ProjPoint; 3]> {
        Ok([
            meet_point(&line(&self.b, &self.c1)?, &line(&self.b1, &self.c)?)?,
            meet_point(&line(&self.a, &self.c1)?, &line(&self.a1, &self.c)?)?,
            meet_point(&line(&self.a, &self.b1)?, &line(&self.a1, &self.b)?)?,
        ])
    }

    /// Checks the hypotheses: two distinct lines, three distinct points on
    /// each, none on the other line.
    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::PreconditionViolated(s.to_string()));
        let (l, l1) = (line(&self.a, &self.b).ok(), line(&self.a1, &self.b1).ok());
        let (Some(l), Some(l1)) = (l, l1) else { return bad("points coincide") };
        if l == l1 {
            return bad("the two lines coincide");
        }
        let (on_l, on_l1) = ([&self.a, &self.b, &self.c], [&self.a1, &self.b1, &self.c1]);
        for (pts, own, other) in [(on_l, &l, &l1), (on_l1, &l1, &l)] {
            if pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2] {
                return bad("points on a line are not distinct");
            }
            for p in pts {
                if !own.contains(&p.0)? || other.contains(&p.0)? {
                    return bad("a point is off its line or on the other line");
                }
            }
        }
        Ok(())
    }
}

/// Pappus' conclusion: the diagonal points are distinct and collinear.
pub fn check_pappus_proj(cfg: &PappusConfig) -> Result<bool> {
    cfg.validate()?;
    let [p, q, r] = cfg.diagonal_points()?;
    Ok(p != q && q != r && p != r && collinear_proj(&p, &q, &r)?)
}

/// The configuration in the frame `B'; A, B, C'` with `C = (1,c,0)` and
/// `A' = (1,1,a)`.
pub fn pappus_standard(a: &FieldElement, c: &FieldElement) -> Result<PappusConfig> {
    let f = a.spec();
    let v = |xs: [FieldElement; 3]| ProjPoint::new(Vector::new(xs.to_vec())?);
    let (o, l) = (f.zero(), f.one());
    Ok(PappusConfig {
        a: v([l.clone(), o.clone(), o.clone()])?,
        b: v([o.clone(), l.clone(), o.clone()])?,
        c: v([l.clone(), c.clone(), o.clone()])?,
        a1: v([l.clone(), l.clone(), a.clone()])?,
        b1: v([l.clone(), l.clone(), l.clone()])?,
        c1: v([o.clone(), o, l])?,
    })
}

fn point_on_line<R: Rng>(rng: &mut R, l: &[Vector; 2]) -> Result<ProjPoint> {
    let f = l[0].field();
    random::retry(|| {
        let (s, t) = (random::scalar(rng, f), random::scalar(rng, f));
        ProjPoint::new(&l[0].scale(&s) + &l[1].scale(&t)).ok()
    })
}

/// A random Pappus configuration in the projective plane.
pub fn pappus_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<PappusConfig> {
    random::try_retry(|| {
        let l = [random::vector(rng, field, 3), random::vector(rng, field, 3)];
        let l1 = [random::vector(rng, field, 3), random::vector(rng, field, 3)];
        let cfg = PappusConfig {
            a: point_on_line(rng, &l)?,
            b: point_on_line(rng, &l)?,
            c: point_on_line(rng, &l)?,
            a1: point_on_line(rng, &l1)?,
            b1: point_on_line(rng, &l1)?,
            c1: point_on_line(rng, &l1)?,
        };
        Ok(cfg.validate().is_ok().then_some(cfg))
    })
}

/// Two triangles in perspective from `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesarguesConfig {
    pub center: ProjPoint,
    pub abc: [ProjPoint; 3],
    pub abc1: [ProjPoint; 3],
}

impl DesarguesConfig {
    /// `BC∩B'C'`, `CA∩C'A'`, `AB∩A'B'`.
    pub fn axis_points(&self) -> Result<[ProjPoint; 3]> {
        let (t, u) = (&self.abc, &self.abc1);
        let side = |i: usize, j: usize| -> Result<ProjPoint> {
            meet_point(&line(&t[i], &t[j])?, &line(&u[i], &u[j])?)
        };
        Ok([side(1, 2)?, side(2, 0)?, side(0, 1)?])
    }

    /// Both triangles nondegenerate, corresponding vertices distinct and
    /// collinear with a center that is none of the vertices, and
    /// corresponding sides on distinct lines.
    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::PreconditionViolated(s.to_string()));
        let (t, u) = (&self.abc, &self.abc1);
        if collinear_proj(&t[0], &t[1], &t[2])? || collinear_proj(&u[0], &u[1], &u[2])? {
            return bad("a triangle is degenerate");
        }
        for i in 0..3 {
            if t[i] == u[i] || t[i] == self.center || u[i] == self.center {
                return bad("vertices coincide with each other or the center");
            }
            if !collinear_proj(&self.center, &t[i], &u[i])? {
                return bad("triangles are not in perspective from the center");
            }
        }
        for (i, j) in [(1, 2), (2, 0), (0, 1)] {
            if line(&t[i], &t[j])? == line(&u[i], &u[j])? {
                return bad("corresponding sides coincide");
            }
        }
        Ok(())
    }
}

/// Desargues' conclusion: the axis points are distinct and collinear.
pub fn check_desargues_proj(cfg: &DesarguesConfig) -> Result<bool> {
    cfg.validate()?;
    let [p, q, r] = cfg.axis_points()?;
    Ok(p != q && q != r && p != r && collinear_proj(&p, &q, &r)?)
}

/// A random perspective pair of triangles in the plane.
pub fn desargues_configuration<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<DesarguesConfig> {
    random::try_retry(|| {
        let center = ProjPoint::new(random::nonzero_vector(rng, field, 3))?;
        let abc = [0; 3].map(|_| ProjPoint(random::nonzero_vector(rng, field, 3)));
        let abc1 = abc.clone().map(|p| {
            let s = random::scalar(rng, field);
            let t = random::scalar(rng, field);
            ProjPoint(&p.0.scale(&s) + &center.0.scale(&t))
        });
        if abc1.iter().any(|p| p.0.is_zero()) {
            return Ok(None);
        }
        let cfg = DesarguesConfig { center, abc, abc1 };
        Ok(cfg.validate().is_ok().then_some(cfg))
    })
}
