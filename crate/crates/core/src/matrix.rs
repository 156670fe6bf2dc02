//! Small dense matrices over exact scalar types (big integers or rationals).
//!
//! Just enough linear algebra for the conversion machinery: construction from
//! an entry function, products, transpose, and identity checks. None of the
//! matrices in this crate is inverted numerically; every inverse has a closed
//! form for its entries and is verified against the identity in tests.

use num_traits::{One, Zero};
use std::ops::{Add, Mul};

use crate::exact::{Int, Rational};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rational>;

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Mul<Output = T>,
{
    /// Builds a `rows x cols` matrix from an entry function on 0-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        assert!(r < self.rows);
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Matrix product `self * other`.
    pub fn mul_matrix(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
            }
            acc
        })
    }

    /// Column vector product `self * v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    /// Row vector product `v * self`.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            self.rows,
            v.len(),
            "shape mismatch in vector-matrix product"
        );
        (0..self.cols)
            .map(|c| {
                v.iter().enumerate().fold(T::zero(), |acc, (k, x)| {
                    acc + x.clone() * self.at(k, c).clone()
                })
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let (one, zero) = (T::one(), T::zero());
        (0..self.rows).all(|r| {
            (0..self.cols)
                .all(|c| *self.at(r, c) == if r == c { one.clone() } else { zero.clone() })
        })
    }
}

impl IntMatrix {
    /// Entrywise embedding into the rationals.
    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            Rational::from(self.at(r, c).clone())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn product_and_identity() {
        let a = IntMatrix::from_fn(2, 3, |r, c| int((r * 3 + c) as i64));
        let id = IntMatrix::identity(3);
        assert_eq!(a.mul_matrix(&id), a);
        assert!(IntMatrix::identity(4).is_identity());
        assert!(!IntMatrix::zero(2, 2).is_identity());
    }

    #[test]
    fn vector_products_match_by_transpose() {
        let a = IntMatrix::from_fn(3, 2, |r, c| int((r + 2 * c) as i64 + 1));
        let v = vec![int(1), int(-2), int(3)];
        assert_eq!(a.vec_mul(&v), a.transpose().mul_vec(&v));
    }
}
