use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A coordinate d-tuple over one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    coords: Vec<FieldElement>,
}

impl Vector {
    pub fn new(coords: Vec<FieldElement>) -> Result<Self> {
        let field = coords.first().ok_or(Error::EmptyInput)?.spec();
        if let Some(bad) = coords.iter().find(|c| c.spec() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.spec().to_string()));
        }
        Ok(Vector { field, coords })
    }

    pub fn from_ints(field: FieldSpec, values: &[i64]) -> Self {
        assert!(!values.is_empty(), "vectors need at least one coordinate");
        Vector {
            field,
            coords: values.iter().map(|&v| field.int(v)).collect(),
        }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    /// The i-th standard basis vector, 1-based.
    pub fn unit(field: FieldSpec, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coords[i - 1] = field.one();
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<FieldElement> {
        self.coords
    }

    /// 0-based coordinate access.
    pub fn get(&self, i: usize) -> &FieldElement {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldElement::is_zero)
    }

    pub(crate) fn check_compatible(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, a: &FieldElement) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| a * c).collect(),
        }
    }

    /// Plain coordinate dot product.
    pub fn dot(&self, other: &Vector) -> Result<FieldElement> {
        self.check_compatible(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(self.field.zero(), |acc, (a, b)| acc + a * b))
    }

    /// First nonzero coordinate, if any.
    pub fn leading(&self) -> Option<&FieldElement> {
        self.coords.iter().find(|c| !c.is_zero())
    }

    /// Scaled so the first nonzero coordinate is 1; zero stays zero.
    pub fn normalized(&self) -> Vector {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("leading entry is nonzero")),
            None => self.clone(),
        }
    }

    /// True when one is a nonzero multiple of the other (both nonzero).
    pub fn is_proportional(&self, other: &Vector) -> bool {
        self.dim() == other.dim()
            && self.field == other.field
            && !self.is_zero()
            && !other.is_zero()
            && self.normalized() == other.normalized()
    }
}

impl std::ops::Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.checked_add(rhs).expect("incompatible vectors")
    }
}

impl std::ops::Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.checked_sub(rhs).expect("incompatible vectors")
    }
}

impl std::ops::Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(&self.field.int(-1))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
