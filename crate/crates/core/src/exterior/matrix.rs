use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

use super::vector::Vector;

/// A dense rows × cols matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyInput)?;
        let field = first.first().ok_or(Error::EmptyInput)?.spec();
        let cols = first.len();
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::RaggedMatrix);
            }
            for x in row {
                if x.spec() != field {
                    return Err(Error::FieldMismatch(field.to_string(), x.spec().to_string()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged integer matrix");
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.int(v))).collect();
        Matrix { field, rows: nrows, cols, data }
    }

    /// The matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::EmptyInput)?;
        for c in &columns[1..] {
            first.check_compatible(c)?;
        }
        let rows = first.dim();
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                data.push(c.get(i).clone());
            }
        }
        Ok(Matrix { field: first.field(), rows, cols, data })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal(entries: &[FieldElement]) -> Result<Self> {
        let field = entries.first().ok_or(Error::EmptyInput)?.spec();
        let mut m = Self::zeros(field, entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        assert_eq!(x.spec(), self.field, "mixed-field matrix entry");
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// The j-th column (0-based) as a vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .expect("matrix has at least one row")
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    /// Selects the given (0-based) rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix { field: self.field, rows: rows.len(), cols: cols.len(), data }
    }

    pub fn scale(&self, a: &FieldElement) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| a * x).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.cols != other.rows {
            return Err(Error::DimMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field() {
            return Err(Error::FieldMismatch(self.field.to_string(), v.field().to_string()));
        }
        if self.cols != v.dim() {
            return Err(Error::DimMismatch { expected: self.cols, found: v.dim() });
        }
        let coords = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.coords())
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect();
        Vector::new(coords)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant: fraction-free Bareiss elimination over Q, plain
    /// Gaussian elimination over GF(p).
    pub fn det(&self) -> Result<FieldElement> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut a: Vec<Vec<FieldElement>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        if self.field.is_rational() {
            let mut prev = self.field.one();
            for k in 0..n - 1 {
                if a[k][k].is_zero() {
                    match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                        Some(i) => {
                            a.swap(k, i);
                            negate = !negate;
                        }
                        None => return Ok(self.field.zero()),
                    }
                }
                for i in k + 1..n {
                    for j in k + 1..n {
                        let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                        a[i][j] = num.checked_div(&prev)?;
                    }
                }
                prev = a[k][k].clone();
            }
            let d = a[n - 1][n - 1].clone();
            Ok(if negate { -d } else { d })
        } else {
            let mut det = self.field.one();
            for k in 0..n {
                let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(self.field.zero());
                };
                if p != k {
                    a.swap(k, p);
                    negate = !negate;
                }
                let pivot_inv = a[k][k].inv()?;
                det *= &a[k][k];
                for i in k + 1..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let factor = &a[i][k] * &pivot_inv;
                    for j in k..n {
                        let t = &factor * &a[k][j];
                        a[i][j] -= t;
                    }
                }
            }
            Ok(if negate { -det } else { det })
        }
    }

    /// Permanent via Ryser's inclusion–exclusion formula.
    pub fn permanent(&self) -> Result<FieldElement> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut total = self.field.zero();
        for subset in 1u32..(1u32 << n) {
            let mut prod = self.field.one();
            for i in 0..n {
                let row_sum = (0..n)
                    .filter(|j| subset & (1 << j) != 0)
                    .fold(self.field.zero(), |acc, j| acc + self.get(i, j));
                prod *= row_sum;
            }
            if (n - subset.count_ones() as usize) % 2 == 1 {
                total -= prod;
            } else {
                total += prod;
            }
        }
        Ok(total)
    }

    /// Reduced row echelon form plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let x = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                Vector::new(v).expect("kernel vector has at least one coordinate")
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.dim() != self.rows {
            return Err(Error::DimMismatch { expected: self.rows, found: b.dim() });
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b.get(i).clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(Vector::new(x)?))
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.submatrix(&rows, &cols))
    }

    /// Minor deleting row `i` and column `j` (0-based).
    fn minor(&self, i: usize, j: usize) -> Result<FieldElement> {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols).det()
    }

    /// Inverse as adjugate divided by the determinant.
    pub fn cofactor_inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let det_inv = det.inv()?;
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = cofactor of entry (j, i)
                let c = self.minor(j, i)?;
                let signed = if (i + j) % 2 == 1 { -c } else { c };
                out.set(i, j, signed * &det_inv);
            }
        }
        Ok(out)
    }

    /// Cramer's rule: `x_i = det(A with column i replaced by b) / det(A)`.
    pub fn cramer_solve(&self, b: &Vector) -> Result<Vector> {
        let n = self.require_square()?;
        if b.dim() != n {
            return Err(Error::DimMismatch { expected: n, found: b.dim() });
        }
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let det_inv = det.inv()?;
        let coords = (0..n)
            .map(|i| {
                let mut m = self.clone();
                for r in 0..n {
                    m.set(r, i, b.get(r).clone());
                }
                Ok(m.det()? * &det_inv)
            })
            .collect::<Result<Vec<_>>>()?;
        Vector::new(coords)
    }

    /// First nonzero entry in row-major order.
    pub fn leading(&self) -> Option<&FieldElement> {
        self.data.iter().find(|x| !x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.leading().is_none()
    }
}

/// Determinant of a square matrix.
pub fn det(m: &Matrix) -> Result<FieldElement> {
    m.det()
}

/// Permanent of a square matrix.
pub fn permanent(m: &Matrix) -> Result<FieldElement> {
    m.permanent()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    m.kernel_basis()
}

pub fn cramer_solve(a: &Matrix, b: &Vector) -> Result<Vector> {
    a.cramer_solve(b)
}

pub fn cofactor_inverse(a: &Matrix) -> Result<Matrix> {
    a.cofactor_inverse()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (k, x) in self.row(i).iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn gf7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(q(), 4).det().unwrap(), q().one());
        let m = Matrix::from_ints(q(), &[&[0, 1], &[-1, 0]]);
        assert_eq!(m.det().unwrap(), q().one());
        let m = Matrix::from_ints(gf7(), &[&[0, 1], &[-1, 0]]);
        assert_eq!(m.det().unwrap(), gf7().one());
        assert!(matches!(
            Matrix::from_ints(q(), &[&[1, 2, 3]]).det(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn det_needs_row_swaps() {
        let m = Matrix::from_ints(q(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(m.det().unwrap(), q().int(-1));
        let m = Matrix::from_ints(gf7(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(m.det().unwrap(), gf7().int(-1));
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(Matrix::identity(q(), 3).permanent().unwrap(), q().one());
        let m = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(m.permanent().unwrap(), q().int(2));
    }

    #[test]
    fn rank_nullity_of_collapsing_map() {
        // (x, y, z) -> (x - y, 0)
        let m = Matrix::from_ints(q(), &[&[1, -1, 0], &[0, 0, 0]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn cramer_examples() {
        let b = Vector::from_ints(gf7(), &[1, 1]);
        let a = Matrix::from_ints(gf7(), &[&[2, 0], &[0, 5]]);
        let x = a.cramer_solve(&b).unwrap();
        assert_eq!(x, Vector::from_ints(gf7(), &[4, 3]));
        assert_eq!(Matrix::identity(gf7(), 2).cramer_solve(&b).unwrap(), b);
        let singular = Matrix::from_ints(gf7(), &[&[1, 2], &[2, 4]]);
        assert_eq!(singular.cramer_solve(&b), Err(Error::SingularMatrix));
    }

    #[test]
    fn cofactor_examples() {
        let a = Matrix::from_ints(gf7(), &[&[2, 0], &[0, 5]]);
        assert_eq!(
            a.cofactor_inverse().unwrap(),
            Matrix::from_ints(gf7(), &[&[4, 0], &[0, 3]])
        );
        assert_eq!(
            Matrix::identity(q(), 3).cofactor_inverse().unwrap(),
            Matrix::identity(q(), 3)
        );
        let a = Matrix::from_ints(q(), &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.cofactor_inverse().unwrap();
        assert_eq!(a.checked_mul(&inv).unwrap(), Matrix::identity(q(), 3));
        assert_eq!(inv, a.inverse().unwrap());
        let singular = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(singular.cofactor_inverse(), Err(Error::SingularMatrix));
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert!(a.solve(&Vector::from_ints(q(), &[1, 2])).unwrap().is_none());
        let x = a.solve(&Vector::from_ints(q(), &[2, 2])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), Vector::from_ints(q(), &[2, 2]));
    }
}
