//! Seeded randomized verification of the classical theorems and the
//! algebraic identities. Trial `k` draws from stream `k` of the seed, so a
//! report depends only on `(theorem, field, seed, trials)`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{
    self, barycenter, cevians_concurrent_or_parallel, check_desargues_affine, check_pappus_affine, collinear,
    menelaus_product, similarity_check, vector_ratio, TriangleConfig, WeightedCombo,
};
use crate::duality::{jacobi_identity_check, regressive, regressive_coordfree, regressive_coordfree_v};
use crate::error::{Error, Result};
use crate::exterior::{wedge_vectors, Matrix, Multivector, Vector};
use crate::field::{FieldElement, FieldSpec};
use crate::metric::{hodge, hodge_alt, hodge_inverse, random_gram, sp_ext, GramForm};
use crate::projective::{self, check_desargues_proj, check_pappus_proj, join, meet, pappus_standard, ProjFlat, ProjPoint};
use crate::random;

/// The theorem families `verify` accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Pappus,
    Desargues,
    Menelaus,
    Ceva,
    Similarity,
    HodgeIdentities,
    Jacobi,
    Grassmann,
    RegressiveEq,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Pappus,
        Theorem::Desargues,
        Theorem::Menelaus,
        Theorem::Ceva,
        Theorem::Similarity,
        Theorem::HodgeIdentities,
        Theorem::Jacobi,
        Theorem::Grassmann,
        Theorem::RegressiveEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Pappus => "pappus",
            Theorem::Desargues => "desargues",
            Theorem::Menelaus => "menelaus",
            Theorem::Ceva => "ceva",
            Theorem::Similarity => "similarity",
            Theorem::HodgeIdentities => "hodge-identities",
            Theorem::Jacobi => "jacobi",
            Theorem::Grassmann => "grassmann",
            Theorem::RegressiveEq => "regressive-eq",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem `{s}`")))
    }
}

/// Outcome of a harness run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub theorem: Theorem,
    pub field: FieldSpec,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    /// `(trial index, reason)` for each failed trial.
    pub failures: Vec<(usize, String)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theorem={} field={} seed={} trials={} passed={}/{}",
            self.theorem, self.field, self.seed, self.trials, self.passed, self.trials
        )?;
        for (k, why) in &self.failures {
            write!(f, "\nFAIL trial={k}: {why}")?;
        }
        Ok(())
    }
}

/// Runs `trials` independent trials.
pub fn verify(theorem: Theorem, field: FieldSpec, seed: u64, trials: usize) -> Report {
    let mut failures = Vec::new();
    for k in 0..trials {
        let outcome = run_trial(theorem, field, &mut random::rng(seed, k as u64), k);
        match outcome {
            Ok(None) => {}
            Ok(Some(why)) => failures.push((k, why)),
            Err(e) => failures.push((k, e.to_string())),
        }
    }
    Report { theorem, field, seed, trials, passed: trials - failures.len(), failures }
}

/// One trial: `Ok(None)` on success, `Ok(Some(reason))` on a violated
/// conclusion.
pub fn run_trial(theorem: Theorem, field: FieldSpec, rng: &mut ChaCha8Rng, k: usize) -> Result<Option<String>> {
    match theorem {
        Theorem::Pappus => pappus_trial(rng, field),
        Theorem::Desargues => desargues_trial(rng, field),
        Theorem::Menelaus => menelaus_trial(rng, field, k),
        Theorem::Ceva => ceva_trial(rng, field, k),
        Theorem::Similarity => similarity_trial(rng, field, k),
        Theorem::HodgeIdentities => {
            let d = 2 + k % 4;
            let p = rng.gen_range(0..=d);
            hodge_trial(rng, field, d, p)
        }
        Theorem::Jacobi => jacobi_trial(rng, field),
        Theorem::Grassmann => grassmann_trial(rng, field),
        Theorem::RegressiveEq => regressive_trial(rng, field, 4 + k % 2),
    }
}

fn fail(cond: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(why)
}

fn scalar_outside<R: Rng>(rng: &mut R, field: FieldSpec, banned: &[FieldElement]) -> Result<FieldElement> {
    random::retry(|| {
        let x = random::scalar(rng, field);
        (!banned.contains(&x)).then_some(x)
    })
}

/// The symbolic diagonal points `(0,1−c,1)`, `(1−c,0,−ca)`, `(1,a,a)` and
/// the dependency `a·A'' + B'' + (c−1)·C'' = 0` between them.
pub fn pappus_symbolic(a: &FieldElement, c: &FieldElement) -> Result<Option<String>> {
    let f = a.spec();
    let one_c = f.one() - c;
    let expected = [
        Vector::new(vec![f.zero(), one_c.clone(), f.one()])?,
        Vector::new(vec![one_c, f.zero(), -(c * a)])?,
        Vector::new(vec![f.one(), a.clone(), a.clone()])?,
    ];
    let cfg = pappus_standard(a, c)?;
    let got = cfg.diagonal_points()?;
    for (g, e) in got.iter().zip(&expected) {
        if g != &ProjPoint::new(e.clone())? {
            return Ok(Some(format!("diagonal point {} is not {}", g.vector(), e)));
        }
    }
    let dep = &(&expected[0].scale(a) + &expected[1]) + &expected[2].scale(&(c - &f.one()));
    if !dep.is_zero() {
        return Ok(Some(format!("dependency gives {dep}")));
    }
    Ok(fail(check_pappus_proj(&cfg)?, || "standard configuration fails".into()))
}

fn pappus_trial<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<Option<String>> {
    let cfg = projective::pappus_configuration(rng, field)?;
    if !check_pappus_proj(&cfg)? {
        return Ok(Some(format!("diagonal points not collinear for {cfg:?}")));
    }
    let a = scalar_outside(rng, field, &[field.zero(), field.one()])?;
    let c = scalar_outside(rng, field, &[field.zero(), field.one()])?;
    if let Some(why) = pappus_symbolic(&a, &c)? {
        return Ok(Some(why));
    }
    Ok(fail(check_pappus_affine(&a, &c)?, || format!("affine form fails at a={a}, c={c}")))
}

fn desargues_trial<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<Option<String>> {
    let cfg = projective::desargues_configuration(rng, field)?;
    if !check_desargues_proj(&cfg)? {
        return Ok(Some(format!("axis points not collinear for {cfg:?}")));
    }
    let (t1, t2) = affine::desargues_affine_configuration(rng, field)?;
    let ok = check_desargues_affine([&t1[0], &t1[1], &t1[2]], [&t2[0], &t2[1], &t2[2]])?;
    Ok(fail(ok, || format!("affine form fails for {t1:?} {t2:?}")))
}

/// Side ratios `BA'/A'C` and `CB'/B'A`.
fn first_two_ratios(t: &TriangleConfig) -> Result<(FieldElement, FieldElement)> {
    Ok((
        vector_ratio(&t.a1.sub(&t.b)?, &t.c.sub(&t.a1)?)?,
        vector_ratio(&t.b1.sub(&t.c)?, &t.a.sub(&t.b1)?)?,
    ))
}

/// Replaces `C'` by the point of `AB` with `AC'/C'B = r`, if one exists.
fn with_third_ratio(mut t: TriangleConfig, r: &FieldElement) -> Result<Option<TriangleConfig>> {
    let f = r.spec();
    match barycenter(&WeightedCombo::new(vec![(f.one(), t.a.clone()), (r.clone(), t.b.clone())])?) {
        Ok(p) => {
            t.c1 = p;
            Ok(Some(t))
        }
        Err(Error::ZeroWeight) => Ok(None),
        Err(e) => Err(e),
    }
}

fn menelaus_trial<R: Rng>(rng: &mut R, field: FieldSpec, k: usize) -> Result<Option<String>> {
    let minus_one = -field.one();
    match k % 3 {
        0 => {
            let t = affine::transversal_configuration(rng, field)?;
            let prod = menelaus_product(&t)?;
            Ok(fail(prod == minus_one, || format!("collinear points give product {prod}")))
        }
        1 => {
            let t = random::try_retry(|| {
                let t = affine::random_side_points(rng, field)?;
                let (r1, r2) = first_two_ratios(&t)?;
                with_third_ratio(t, &(-(r1 * r2).inv()?))
            })?;
            let line = collinear(&[t.a1.clone(), t.b1.clone(), t.c1.clone()])?;
            Ok(fail(line, || format!("product -1 without collinearity: {t:?}")))
        }
        _ => {
            let t = affine::random_side_points(rng, field)?;
            let prod = menelaus_product(&t)?;
            let line = collinear(&[t.a1.clone(), t.b1.clone(), t.c1.clone()])?;
            Ok(fail((prod == minus_one) == line, || format!("product {prod} but collinear={line}")))
        }
    }
}

fn ceva_trial<R: Rng>(rng: &mut R, field: FieldSpec, k: usize) -> Result<Option<String>> {
    let one = field.one();
    let forward = |t: TriangleConfig| -> Result<Option<String>> {
        let prod = affine::ceva_product(&t)?;
        Ok(fail(prod == one, || format!("concurrent or parallel cevians give product {prod}")))
    };
    match k % 4 {
        0 => forward(affine::cevian_configuration(rng, field)?),
        1 => forward(affine::parallel_cevian_configuration(rng, field)?),
        2 => {
            let t = random::try_retry(|| {
                let t = affine::random_side_points(rng, field)?;
                let (r1, r2) = first_two_ratios(&t)?;
                with_third_ratio(t, &(r1 * r2).inv()?)
            })?;
            let ok = cevians_concurrent_or_parallel(&t)?;
            Ok(fail(ok, || format!("product 1 without concurrence: {t:?}")))
        }
        _ => {
            let t = affine::random_side_points(rng, field)?;
            let prod = affine::ceva_product(&t)?;
            let conc = cevians_concurrent_or_parallel(&t)?;
            Ok(fail((prod == one) == conc, || format!("product {prod} but concurrent={conc}")))
        }
    }
}

fn similarity_trial<R: Rng>(rng: &mut R, field: FieldSpec, k: usize) -> Result<Option<String>> {
    let want_parallel = k.is_multiple_of(2);
    let [a, b, c, x] = affine::similarity_configuration(rng, field, want_parallel)?;
    let (parallel, ratios) = similarity_check(&a, &b, &c, &x)?;
    if want_parallel && !parallel {
        return Ok(Some("generator produced a non-parallel configuration".into()));
    }
    Ok(fail(parallel == ratios, || format!("parallel={parallel} but ratios equal={ratios}")))
}

/// Checks the star identities on one form: the isometry
/// `g(r,s) = G·g(∗r,∗s)`, `r∧∗s = s∧∗r`, recovery `g(r,s) = G·∗(r∧∗s)`,
/// `∗∗r = G⁻¹(−1)^{p(d−p)}·r`, agreement with [`hodge_alt`], and
/// `∗⁻¹(∗s∧∗t) = s∨t`.
pub fn check_hodge_identities(g: &GramForm, r: &Multivector, s: &Multivector, t: &Multivector) -> Result<Option<String>> {
    let (d, field) = (g.dim(), g.field());
    let p = r.homogeneous_grade().unwrap_or(s.homogeneous_grade().unwrap_or(0));
    let big_g = g.det();
    let (sr, ss) = (hodge(g, r)?, hodge(g, s)?);
    let grs = sp_ext(g, r, s)?;
    if grs != big_g * &sp_ext(g, &sr, &ss)? {
        return Ok(Some(format!("isometry fails for r={r}, s={s}")));
    }
    let (lhs, rhs) = (r.wedge(&ss)?, s.wedge(&sr)?);
    if lhs != rhs {
        return Ok(Some(format!("r^*s={lhs} but s^*r={rhs}")));
    }
    let recovered = hodge(g, &lhs)?.scale(big_g);
    if recovered != Multivector::scalar(grs.clone(), d)? {
        return Ok(Some(format!("recovery gives {recovered}, expected {grs}")));
    }
    let sign = FieldElement::sign(field, (p * (d - p)) % 2 == 1);
    let expected = r.scale(&(big_g.inv()? * sign));
    let double = hodge(g, &sr)?;
    if double != expected {
        return Ok(Some(format!("**r={double}, expected {expected}")));
    }
    let alt = hodge_alt(g, r)?;
    if alt != sr {
        return Ok(Some(format!("hodge={sr} but hodge_alt={alt}")));
    }
    let via_star = hodge_inverse(g, &ss.wedge(&hodge(g, t)?)?)?;
    let direct = regressive(s, t)?;
    Ok(fail(via_star == direct, || format!("*^-1(*s^*t)={via_star} but s v t={direct}")))
}

/// One hodge trial in dimension `d`, grade `p`.
pub fn hodge_trial<R: Rng>(rng: &mut R, field: FieldSpec, d: usize, p: usize) -> Result<Option<String>> {
    let g = random_gram(rng, field, d)?;
    let r = random::homogeneous(rng, field, d, p)?;
    let s = random::homogeneous(rng, field, d, p)?;
    let q = rng.gen_range(0..=d);
    let t = random::homogeneous(rng, field, d, q)?;
    check_hodge_identities(&g, &r, &s, &t)
}

fn jacobi_trial<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<Option<String>> {
    let d = rng.gen_range(1..=5);
    let n = rng.gen_range(0..=d);
    let m = random::invertible_matrix(rng, field, d)?;
    let (lhs, rhs) = jacobi_identity_check(&m, n)?;
    Ok(fail(lhs == rhs, || format!("n={n}: minor {lhs} but det*complement {rhs} for {m}")))
}

/// `U ∩ W` via the kernel of `[U | −W]`, independent of the regressive product.
fn intersection_by_kernel(u: &[Vector], w: &[Vector]) -> Result<Vec<Vector>> {
    let neg: Vec<Vector> = w.iter().map(|v| -v).collect();
    let cols: Vec<Vector> = u.iter().cloned().chain(neg).collect();
    let kernel = Matrix::from_columns(&cols)?.kernel_basis();
    let um = Matrix::from_columns(u)?;
    kernel
        .iter()
        .map(|k| um.mul_vec(&Vector::new(k.coords()[..u.len()].to_vec())?))
        .collect()
}

fn grassmann_trial<R: Rng>(rng: &mut R, field: FieldSpec) -> Result<Option<String>> {
    let d = rng.gen_range(3..=6);
    let shared = rng.gen_range(0..d);
    let (ku, kw) = (rng.gen_range(shared.max(1)..=d), rng.gen_range(shared.max(1)..=d));
    let (u, w) = random::try_retry(|| {
        let common = random::independent_vectors(rng, field, d, shared)?;
        let mut u = common.clone();
        u.extend(random::independent_vectors(rng, field, d, ku - shared)?);
        let mut w = common;
        w.extend(random::independent_vectors(rng, field, d, kw - shared)?);
        let indep = |vs: &[Vector]| Ok::<_, Error>(Matrix::from_columns(vs)?.rank() == vs.len());
        Ok((indep(&u)? && indep(&w)?).then_some((u, w)))
    })?;
    let (fu, fw) = (ProjFlat::from_span(&u)?, ProjFlat::from_span(&w)?);
    let (j, m) = (join(&[fu.clone(), fw.clone()])?, meet(&fu, &fw)?);
    let both: Vec<Vector> = u.iter().chain(&w).cloned().collect();
    let sum_dim = Matrix::from_columns(&both)?.rank();
    let cap = intersection_by_kernel(&u, &w)?;
    if j.grade() != sum_dim {
        return Ok(Some(format!("join has grade {} but U+W has dimension {sum_dim}", j.grade())));
    }
    if m.grade() != cap.len() {
        return Ok(Some(format!("meet has grade {} but the intersection has dimension {}", m.grade(), cap.len())));
    }
    for v in &cap {
        if !m.contains(v)? {
            return Ok(Some(format!("meet misses intersection vector {v}")));
        }
    }
    Ok(fail(j.grade() + m.grade() == ku + kw, || "dimension formula fails".into()))
}

/// Factor lists with `l + m ≥ d`; returns both coordinate-free sums and
/// the `H`-based product.
pub fn regressive_trial<R: Rng>(rng: &mut R, field: FieldSpec, d: usize) -> Result<Option<String>> {
    let l = rng.gen_range(1..=d);
    let m = rng.gen_range((d - l).max(1)..=d);
    let us = random::independent_vectors(rng, field, d, l)?;
    let vs = random::independent_vectors(rng, field, d, m)?;
    let direct = regressive(&wedge_vectors(&us)?, &wedge_vectors(&vs)?)?;
    let u_side = regressive_coordfree(&us, &vs)?;
    let v_side = regressive_coordfree_v(&us, &vs)?;
    Ok(fail(u_side == direct && v_side == direct, || {
        format!("u-side {u_side}, v-side {v_side}, H-based {direct}")
    }))
}
