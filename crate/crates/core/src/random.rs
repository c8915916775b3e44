//! Seeded sampling of scalars, vectors and matrices for configuration
//! generators and randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{Matrix, MultiIndex, Multivector, Vector};
use crate::field::{FieldElement, FieldSpec};

/// Attempts allowed before a generator reports [`Error::GeneratorExhausted`].
pub const RETRY_CAP: usize = 1000;

/// Range of integers drawn for rational coordinates.
const Q_RANGE: i64 = 12;

/// A reproducible stream: one per `(seed, stream)` pair.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn scalar<R: Rng>(rng: &mut R, field: FieldSpec) -> FieldElement {
    match field.modulus() {
        Some(p) => FieldElement::from_i64(field, rng.gen_range(0..p) as i64),
        None => field.int(rng.gen_range(-Q_RANGE..=Q_RANGE)),
    }
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, field: FieldSpec) -> FieldElement {
    loop {
        let x = scalar(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R, field: FieldSpec, dim: usize) -> Vector {
    let coords = (0..dim).map(|_| scalar(rng, field)).collect();
    Vector::new(coords).expect("dim >= 1")
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, field: FieldSpec, dim: usize) -> Vector {
    loop {
        let v = vector(rng, field, dim);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| scalar(rng, field)).collect())
        .collect();
    Matrix::from_rows(data).expect("rectangular")
}

pub fn invertible_matrix<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> Result<Matrix> {
    retry(|| {
        let m = matrix(rng, field, n, n);
        (m.rank() == n).then_some(m)
    })
}

/// A random element of `⋀ᵖ` in dimension `dim`, possibly zero.
pub fn homogeneous<R: Rng>(rng: &mut R, field: FieldSpec, dim: usize, p: usize) -> Result<Multivector> {
    let terms: Vec<_> = MultiIndex::all_of_grade(dim, p).into_iter().map(|i| (i, scalar(rng, field))).collect();
    Multivector::from_terms(field, dim, false, terms)
}

/// `k` independent vectors in dimension `dim`.
pub fn independent_vectors<R: Rng>(
    rng: &mut R,
    field: FieldSpec,
    dim: usize,
    k: usize,
) -> Result<Vec<Vector>> {
    retry(|| {
        let vs: Vec<Vector> = (0..k).map(|_| vector(rng, field, dim)).collect();
        if k == 0 {
            return Some(vs);
        }
        (Matrix::from_columns(&vs).ok()?.rank() == k).then_some(vs)
    })
}

/// Runs `attempt` until it yields, up to [`RETRY_CAP`] times.
pub fn retry<T>(mut attempt: impl FnMut() -> Option<T>) -> Result<T> {
    (0..RETRY_CAP)
        .find_map(|_| attempt())
        .ok_or(Error::GeneratorExhausted(RETRY_CAP))
}

/// Like [`retry`] for attempts that can fail outright.
pub fn try_retry<T>(mut attempt: impl FnMut() -> Result<Option<T>>) -> Result<T> {
    for _ in 0..RETRY_CAP {
        if let Some(x) = attempt()? {
            return Ok(x);
        }
    }
    Err(Error::GeneratorExhausted(RETRY_CAP))
}
