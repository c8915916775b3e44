use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

use super::index::{check_dim, MultiIndex};
use super::matrix::Matrix;
use super::vector::Vector;

/// An element of the exterior algebra on a d-dimensional space with a fixed
/// ordered basis, or (with `dual` set) of the algebra on its dual space.
///
/// Terms are a map from [`MultiIndex`] to nonzero coefficients; zero
/// coefficients are never stored, so structural equality is algebraic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    field: FieldSpec,
    dim: usize,
    dual: bool,
    terms: BTreeMap<MultiIndex, FieldElement>,
}

impl Multivector {
    pub fn zero(field: FieldSpec, dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Multivector { field, dim, dual: false, terms: BTreeMap::new() })
    }

    pub fn zero_dual(field: FieldSpec, dim: usize) -> Result<Self> {
        Ok(Self::zero(field, dim)?.with_dual(true))
    }

    /// `c · 1`.
    pub fn scalar(c: FieldElement, dim: usize) -> Result<Self> {
        let mut m = Self::zero(c.spec(), dim)?;
        m.add_term(MultiIndex::EMPTY, c)?;
        Ok(m)
    }

    /// `e_{i1} ∧ … ∧ e_{ik}` for an arbitrary index sequence: unordered
    /// sequences pick up the permutation sign, repeated indices give zero.
    pub fn basis(field: FieldSpec, dim: usize, indices: &[usize]) -> Result<Self> {
        let mut m = Self::zero(field, dim)?;
        if let Some((idx, odd)) = MultiIndex::from_sequence(indices)? {
            m.add_term(idx, FieldElement::sign(field, odd))?;
        }
        Ok(m)
    }

    /// Dual-space counterpart of [`Multivector::basis`].
    pub fn dual_basis(field: FieldSpec, dim: usize, indices: &[usize]) -> Result<Self> {
        Ok(Self::basis(field, dim, indices)?.with_dual(true))
    }

    /// The top blade `e_1 ∧ … ∧ e_d`.
    pub fn pseudoscalar(field: FieldSpec, dim: usize) -> Result<Self> {
        let mut m = Self::zero(field, dim)?;
        m.add_term(MultiIndex::full(dim), field.one())?;
        Ok(m)
    }

    /// A grade-1 element with the vector's coordinates.
    pub fn from_vector(v: &Vector) -> Result<Self> {
        let mut m = Self::zero(v.field(), v.dim())?;
        for (i, c) in v.coords().iter().enumerate() {
            m.add_term(MultiIndex::from_bits(1 << i), c.clone())?;
        }
        Ok(m)
    }

    pub fn from_terms(
        field: FieldSpec,
        dim: usize,
        dual: bool,
        terms: impl IntoIterator<Item = (MultiIndex, FieldElement)>,
    ) -> Result<Self> {
        let mut m = Self::zero(field, dim)?.with_dual(dual);
        for (idx, c) in terms {
            m.add_term(idx, c)?;
        }
        Ok(m)
    }

    pub fn with_dual(mut self, dual: bool) -> Self {
        self.dual = dual;
        self
    }

    /// Adds `c · e_idx`, pruning a resulting zero coefficient.
    pub fn add_term(&mut self, idx: MultiIndex, c: FieldElement) -> Result<()> {
        if c.spec() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), c.spec().to_string()));
        }
        if idx.max_index() > self.dim {
            return Err(Error::IndexOutOfRange { index: idx.max_index(), dim: self.dim });
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.remove(&idx) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(idx, sum);
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &FieldElement)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient on `e_idx` (zero when absent).
    pub fn coefficient(&self, idx: MultiIndex) -> FieldElement {
        self.terms.get(&idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficient on a basis blade given by any index sequence, with the
    /// permutation sign applied and zero for repeated indices.
    pub fn coefficient_of(&self, indices: &[usize]) -> Result<FieldElement> {
        Ok(match MultiIndex::from_sequence(indices)? {
            Some((idx, odd)) => {
                let c = self.coefficient(idx);
                if odd {
                    -c
                } else {
                    c
                }
            }
            None => self.field.zero(),
        })
    }

    /// `Some(p)` when nonzero and every term has grade `p`.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|k| k.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    /// Leading (canonically first) term.
    pub fn leading_term(&self) -> Option<(MultiIndex, &FieldElement)> {
        self.terms.iter().next().map(|(k, v)| (*k, v))
    }

    pub(crate) fn check_compatible(&self, other: &Multivector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.dim != other.dim {
            return Err(Error::DimMismatch { expected: self.dim, found: other.dim });
        }
        if self.dual != other.dual {
            return Err(Error::DualMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, a: &FieldElement) -> Multivector {
        let mut out = Multivector { terms: BTreeMap::new(), ..self.clone() };
        if a.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(*k, a * v);
        }
        out
    }

    /// The progressive (exterior) product.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        let mut out = Multivector { terms: BTreeMap::new(), ..self.clone() };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(odd) = a.wedge_sign(*b) {
                    let c = ca * cb;
                    out.add_term(a.union(*b), if odd { -c } else { c })?;
                }
            }
        }
        Ok(out)
    }

    /// Sum of the grade-`p` terms.
    pub fn grade_project(&self, p: usize) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.grade() == p)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// Reads a grade-1 element as a coordinate vector.
    pub fn to_vector(&self) -> Result<Vector> {
        if !self.is_zero() && self.homogeneous_grade() != Some(1) {
            return Err(Error::GradeMismatch { expected: 1, found: self.homogeneous_grade() });
        }
        let coords = (1..=self.dim)
            .map(|i| self.coefficient(MultiIndex::from_bits(1 << (i - 1))))
            .collect();
        Vector::new(coords)
    }

    /// True when `self = c · other` for some nonzero scalar `c`.
    pub fn is_proportional(&self, other: &Multivector) -> bool {
        if self.check_compatible(other).is_err() || self.is_zero() || other.is_zero() {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.ratio_to(other).is_some()
    }

    /// The scalar `c` with `self = c · other`, when one exists.
    pub fn ratio_to(&self, other: &Multivector) -> Option<FieldElement> {
        if self.check_compatible(other).is_err() || other.is_zero() {
            return None;
        }
        let (k, b) = other.leading_term()?;
        let c = self.coefficient(k).checked_div(b).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// Scaled so the leading coefficient is 1.
    pub fn normalized(&self) -> Multivector {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }
}

impl std::ops::Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs).expect("incompatible multivectors")
    }
}

impl std::ops::Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs).expect("incompatible multivectors")
    }
}

impl std::ops::Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&self.field.int(-1))
    }
}

/// `a ∧ b`.
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.wedge(b)
}

/// `v₁ ∧ ⋯ ∧ vₚ`; zero exactly when the sequence is dependent.
pub fn wedge_vectors(vs: &[Vector]) -> Result<Multivector> {
    let first = vs.first().ok_or(Error::EmptyInput)?;
    let mut acc = Multivector::scalar(first.field().one(), first.dim())?;
    for v in vs {
        first.check_compatible(v)?;
        acc = acc.wedge(&Multivector::from_vector(v)?)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

pub fn grade_project(m: &Multivector, p: usize) -> Multivector {
    m.grade_project(p)
}

/// Plücker coordinates of the column span of a d×n matrix: the coefficient
/// on `e_I` is the minor on rows `I`.
pub fn plucker_from_matrix(a: &Matrix) -> Result<Multivector> {
    let (d, n) = (a.rows(), a.cols());
    if n > d {
        return Err(Error::TooManyColumns { cols: n, dim: d });
    }
    let mut out = Multivector::zero(a.field(), d)?;
    let cols: Vec<usize> = (0..n).collect();
    for idx in MultiIndex::all_of_grade(d, n) {
        let rows: Vec<usize> = idx.indices().iter().map(|i| i - 1).collect();
        out.add_term(idx, a.submatrix(&rows, &cols).det()?)?;
    }
    Ok(out)
}

/// `⋀ᵖ f` applied to a grade-p element, where `f` has matrix `m`
/// (columns are images of basis vectors). The result keeps the dual flag.
pub fn ext_power_map(m: &Matrix, p: usize, x: &Multivector) -> Result<Multivector> {
    if m.cols() != x.dim() {
        return Err(Error::DimMismatch { expected: m.cols(), found: x.dim() });
    }
    if m.field() != x.field() {
        return Err(Error::FieldMismatch(m.field().to_string(), x.field().to_string()));
    }
    if !x.is_zero() && x.homogeneous_grade() != Some(p) {
        return Err(Error::GradeMismatch { expected: p, found: x.homogeneous_grade() });
    }
    let images = m.columns();
    let mut out = Multivector::zero(m.field(), m.rows())?.with_dual(x.is_dual());
    for (idx, c) in x.terms() {
        let factors: Vec<Vector> = idx.indices().iter().map(|i| images[i - 1].clone()).collect();
        let img = if factors.is_empty() {
            Multivector::scalar(m.field().one(), m.rows())?
        } else {
            wedge_vectors(&factors)?
        }
        .with_dual(x.is_dual());
        out = out.checked_add(&img.scale(c))?;
    }
    Ok(out)
}

/// Applies `⋀ f` gradewise to an arbitrary element.
pub fn ext_map(m: &Matrix, x: &Multivector) -> Result<Multivector> {
    let mut out = Multivector::zero(m.field(), m.rows())?.with_dual(x.is_dual());
    for p in 0..=x.dim() {
        let part = x.grade_project(p);
        if !part.is_zero() {
            out = out.checked_add(&ext_power_map(m, p, &part)?)?;
        }
    }
    Ok(out)
}

/// The scalar `a` with `⋀ᵈ f(e_1∧⋯∧e_d) = a · e_1∧⋯∧e_d`.
pub fn det_of_map(m: &Matrix) -> Result<FieldElement> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let d = m.rows();
    let top = Multivector::pseudoscalar(m.field(), d)?;
    Ok(ext_power_map(m, d, &top)?.coefficient(MultiIndex::full(d)))
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = if self.dual { 'E' } else { 'e' };
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 && !c.is_negative_literal() {
                write!(f, "+")?;
            }
            write!(f, "{c}*{letter}{idx}")?;
        }
        Ok(())
    }
}
