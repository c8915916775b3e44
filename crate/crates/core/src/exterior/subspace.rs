use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::multivector::wedge_vectors;
use super::vector::Vector;

/// Splits `v = w + x` with `w ∈ ⟨W⟩`, `x ∈ ⟨X⟩`.
fn decompose(w: &[Vector], x: &[Vector], v: &Vector) -> Result<(Vector, Vector)> {
    let all: Vec<Vector> = w.iter().chain(x).cloned().collect();
    if all.len() != v.dim() {
        return Err(Error::NotComplementary);
    }
    for u in &all {
        v.check_compatible(u)?;
    }
    if wedge_vectors(&all)?.is_zero() {
        return Err(Error::NotComplementary);
    }
    let a = Matrix::from_columns(&all)?;
    let c = a.solve(v)?.ok_or(Error::NotComplementary)?;
    let mut wpart = Vector::zero(v.field(), v.dim());
    for (k, u) in w.iter().enumerate() {
        wpart = &wpart + &u.scale(c.get(k));
    }
    let xpart = v - &wpart;
    Ok((wpart, xpart))
}

/// Projection onto `⟨W⟩` along `⟨X⟩`.
pub fn project_along(w: &[Vector], x: &[Vector], v: &Vector) -> Result<Vector> {
    Ok(decompose(w, x, v)?.0)
}

/// Reflection in `⟨W⟩` along `⟨X⟩`: `w − x`.
pub fn reflect_along(w: &[Vector], x: &[Vector], v: &Vector) -> Result<Vector> {
    let (wp, xp) = decompose(w, x, v)?;
    Ok(&wp - &xp)
}

/// Dimension of the degree-p symmetric power of an n-dimensional space.
pub fn sym_basis_count(n: u64, p: u64) -> u64 {
    num_integer::binomial(n + p - 1, p)
}
