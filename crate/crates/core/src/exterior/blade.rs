use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::index::MultiIndex;
use super::multivector::{wedge_vectors, Multivector};
use super::vector::Vector;

/// Read access to `P_{j1,…,jn}` for arbitrary index tuples of a grade-n
/// element: unordered tuples pick up the sorting sign, repeats read as 0.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedCoordView<'a> {
    source: &'a Multivector,
    grade: usize,
}

impl<'a> ExtendedCoordView<'a> {
    pub fn new(source: &'a Multivector) -> Result<Self> {
        let grade = source.homogeneous_grade().ok_or(if source.is_zero() {
            Error::ZeroInput
        } else {
            Error::NotHomogeneous
        })?;
        Ok(ExtendedCoordView { source, grade })
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    /// `P_{indices}` for 1-based indices.
    pub fn get(&self, indices: &[usize]) -> Result<FieldElement> {
        if indices.len() != self.grade {
            return Err(Error::GradeMismatch { expected: self.grade, found: Some(indices.len()) });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > self.source.dim()) {
            return Err(Error::IndexOutOfRange { index: bad, dim: self.source.dim() });
        }
        self.source.coefficient_of(indices)
    }

    /// The j-th file (0-based) through `pivot`: entry `i` is the coordinate
    /// with the j-th pivot index replaced by `i`.
    pub fn file(&self, pivot: MultiIndex, j: usize) -> Result<Vector> {
        let mut tuple = pivot.indices();
        let coords = (1..=self.source.dim())
            .map(|i| {
                tuple[j] = i;
                self.get(&tuple)
            })
            .collect::<Result<Vec<_>>>()?;
        Vector::new(coords)
    }
}

fn pivot_of(m: &Multivector) -> Result<(usize, MultiIndex, FieldElement)> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let grade = m.homogeneous_grade().ok_or(Error::NotABlade)?;
    let (pivot, c) = m.leading_term().expect("nonzero");
    Ok((grade, pivot, c.clone()))
}

/// Factors a blade into the files of its extended coordinate array through
/// the leading nonzero coordinate. The files wedge to `P^{n-1} · m` where
/// `P` is that coordinate. A grade-0 input factors as the empty list.
pub fn factor_blade(m: &Multivector) -> Result<Vec<Vector>> {
    let (grade, pivot, _) = pivot_of(m)?;
    if grade == 0 {
        return Ok(Vec::new());
    }
    let view = ExtendedCoordView::new(m)?;
    let files = (0..grade).map(|j| view.file(pivot, j)).collect::<Result<Vec<_>>>()?;
    if !wedge_vectors(&files)?.with_dual(m.is_dual()).is_proportional(m) {
        return Err(Error::NotABlade);
    }
    Ok(files)
}

/// Like [`factor_blade`], with the first factor rescaled so the factors
/// wedge to exactly `m`. Grade 0 still gives the empty list.
pub fn factor_blade_exact(m: &Multivector) -> Result<Vec<Vector>> {
    let (_, _, p) = pivot_of(m)?;
    let mut files = factor_blade(m)?;
    if let Some(first) = files.first_mut() {
        let n = m.homogeneous_grade().expect("checked") as i64;
        *first = first.scale(&p.pow(1 - n)?);
    }
    Ok(files)
}

/// True for 0, scalars, and decomposable homogeneous elements.
pub fn is_blade(m: &Multivector) -> bool {
    m.is_zero() || factor_blade(m).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn e(indices: &[usize]) -> Multivector {
        Multivector::basis(q(), 4, indices).unwrap()
    }

    #[test]
    fn extended_coordinates() {
        let m = &e(&[1, 2]) + &e(&[3, 4]).scale(&q().int(5));
        let view = ExtendedCoordView::new(&m).unwrap();
        assert_eq!(view.get(&[2, 1]).unwrap(), q().int(-1));
        assert_eq!(view.get(&[4, 3]).unwrap(), q().int(-5));
        assert!(view.get(&[3, 3]).unwrap().is_zero());
    }

    #[test]
    fn factors_coordinate_plane() {
        let f = factor_blade(&e(&[1, 2])).unwrap();
        assert_eq!(f.len(), 2);
        assert!(wedge_vectors(&f).unwrap().is_proportional(&e(&[1, 2])));
    }

    #[test]
    fn factors_meet_line() {
        let m = &(&e(&[1, 3]) - &e(&[1, 4])) - &e(&[3, 4]);
        let f = factor_blade(&m).unwrap();
        assert!(wedge_vectors(&f).unwrap().is_proportional(&m));
        assert_eq!(wedge_vectors(&factor_blade_exact(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn rejects_non_blades() {
        let m = &e(&[1, 2]) + &e(&[3, 4]);
        assert_eq!(factor_blade(&m), Err(Error::NotABlade));
        assert!(!is_blade(&m));
        assert_eq!(factor_blade(&Multivector::zero(q(), 4).unwrap()), Err(Error::ZeroInput));
        let mixed = &e(&[1]) + &e(&[2, 3]);
        assert_eq!(factor_blade(&mixed), Err(Error::NotABlade));
    }

    #[test]
    fn scalars_are_blades() {
        let s = Multivector::scalar(q().int(7), 3).unwrap();
        assert!(is_blade(&s));
        assert!(factor_blade(&s).unwrap().is_empty());
    }

    #[test]
    fn exact_factors_reproduce_the_blade() {
        let m = Multivector::basis(q(), 4, &[1, 3, 4]).unwrap().scale(&q().int(6));
        let m = &m + &e(&[2, 3, 4]).scale(&q().int(-4));
        let f = factor_blade_exact(&m).unwrap();
        assert_eq!(wedge_vectors(&f).unwrap(), m);
    }
}
