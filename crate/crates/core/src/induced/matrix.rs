//! Small dense square matrices over QScalar.

use std::fmt;

use crate::scalarfield::QScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<QScalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![QScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, QScalar::one())
    }

    pub fn scalar(dim: usize, c: QScalar) -> Self {
        Self::diagonal(vec![c; dim])
    }

    pub fn diagonal(entries: Vec<QScalar>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, c) in entries.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    /// From rows.
    pub fn from_rows(rows: Vec<Vec<QScalar>>) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "matrix must be square");
            data.extend(r);
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &QScalar {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, c: QScalar) {
        self.data[row * self.dim + col] = c;
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&QScalar, &QScalar) -> QScalar) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Column `j` applied to basis vector `e_j`.
    pub fn column(&self, j: usize) -> Vec<QScalar> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QScalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product() {
        let q = QScalar::q();
        let a = Matrix::from_rows(vec![
            vec![QScalar::zero(), QScalar::one()],
            vec![QScalar::zero(), QScalar::zero()],
        ]);
        let b = Matrix::diagonal(vec![QScalar::one(), q.clone()]);
        assert_eq!(a.mul(&b).get(0, 1), &q);
        assert!(a.mul(&a).is_zero());
        assert_eq!(b.mul(&Matrix::identity(2)), b);
    }
}
