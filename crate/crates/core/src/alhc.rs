//! Anti-lecture-hall compositions of 2-linear edge ideals.
//!
//! A sequence `lambda_1, ..., lambda_L` is an anti-lecture-hall composition
//! bounded by `t` when `t >= lambda_1/1 >= lambda_2/2 >= ... >= lambda_L/L >= 0`.
//! Every 2-linear Betti vector converts to one (with `t = 1`) through the
//! Pascal matrix `Psi_ij = C(i-1, j-1)`: `lambda = omega Psi^-1`. For
//! Booth-Lueker graphs and their complements the composition also has closed
//! forms, implemented here next to the matrix conversion.

use num_traits::{Signed, Zero};

use crate::betti::BettiVector;
use crate::exact::{binomial_usize, Int};
use crate::graph::DegreeVector;
use crate::matrix::IntMatrix;
use crate::{Error, Result};

/// Anti-lecture-hall composition with non-negative entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alhc {
    entries: Vec<Int>,
}

impl Alhc {
    pub fn new(entries: Vec<Int>) -> Self {
        Self { entries }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![Int::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    /// `lambda_j` for 1-indexed `j`.
    pub fn entry(&self, j: usize) -> &Int {
        &self.entries[j - 1]
    }
}

/// Checks the chain `t >= lambda_1/1 >= ... >= lambda_L/L >= 0` by
/// cross-multiplication; no rational division is performed.
pub fn is_alhc(lambda: &[Int], t: i64) -> bool {
    let len = lambda.len();
    if len == 0 {
        return true;
    }
    if lambda[0] > Int::from(t) {
        return false;
    }
    for j in 1..len {
        // lambda_j / j >= lambda_{j+1} / (j+1), with j the 1-indexed position.
        if &lambda[j - 1] * Int::from(j + 1) < &lambda[j] * Int::from(j) {
            return false;
        }
    }
    !lambda[len - 1].is_negative()
}

/// The `L x L` Pascal matrix with 1-indexed entries `Psi_ij = C(i-1, j-1)`.
pub fn psi_matrix(len: usize) -> IntMatrix {
    IntMatrix::from_fn(len, len, binomial_usize)
}

/// Inverse of [`psi_matrix`]: signed Pascal entries `(-1)^(i+j) C(i-1, j-1)`.
pub fn psi_inverse(len: usize) -> IntMatrix {
    IntMatrix::from_fn(len, len, |r, c| {
        let b = binomial_usize(r, c);
        if (r + c).is_multiple_of(2) {
            b
        } else {
            -b
        }
    })
}

/// `Xi = (Psi^-1)^T`, the matrix that maps the statistics side to the
/// composition side; `Xi A` is a 0/1 staircase and `Xi v` counts down from
/// `n-1`, which is what makes the closed forms below work.
pub fn xi_matrix(len: usize) -> IntMatrix {
    psi_inverse(len).transpose()
}

/// Anti-lecture-hall composition of a 2-linear Betti vector,
/// `lambda = omega Psi^-1`. Errors if the result fails the chain bound with
/// `t = 1`, which means the input was not a 2-linear Betti vector.
pub fn alhc_from_betti(omega: &BettiVector) -> Result<Alhc> {
    let len = omega.len();
    let mut entries = Vec::with_capacity(len);
    for c in 0..len {
        let mut acc = Int::zero();
        for r in c..len {
            let w = &omega.entries()[r];
            if !w.is_zero() {
                let term = w * binomial_usize(r, c);
                if (r + c).is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        entries.push(acc);
    }
    if !is_alhc(&entries, 1) {
        return Err(Error::NotAntiLectureHall);
    }
    Ok(Alhc::new(entries))
}

/// Closed-form composition of `BL(G)` from the degree vector, for
/// `m >= n-1`: `lambda_j = j` for `j <= n-1`, then
/// `lambda_j = d_{n-1} + ... + d_{j-n+1}` for `n <= j <= 2n-2`, then zeros.
///
/// At `j = n` the second clause evaluates to `n - d_0`; it only agrees with
/// the naive continuation `lambda_n = n` when the graph has no isolated
/// vertices, and it is the value the matrix method produces.
pub fn alhc_bl_closed(d: &DegreeVector, m: usize) -> Result<Alhc> {
    let n = d.vertex_count();
    if d.degree_sum() != 2 * m {
        return Err(Error::Inconsistent(format!(
            "degree vector sums to {} but 2m = {}",
            d.degree_sum(),
            2 * m
        )));
    }
    if m + 1 < n {
        return Err(Error::Applicability(format!(
            "closed-form composition requires m >= n-1, got n = {n}, m = {m}; \
             use the matrix method instead"
        )));
    }
    let len = (n + m).saturating_sub(1);
    let counts = d.counts();
    let entries = (1..=len)
        .map(|j| {
            if j < n {
                Int::from(j)
            } else if j <= 2 * n - 2 {
                Int::from(counts[(j + 1 - n)..n].iter().sum::<usize>())
            } else {
                Int::zero()
            }
        })
        .collect();
    Ok(Alhc::new(entries))
}

/// Closed-form composition of the complement of `BL(G)`: `lambda_j = j` up
/// to `j = m`, then the constant `m` up to `j = m+n-3`, then zeros. Derived
/// for simple graphs, so `n >= 3` whenever `m >= 1`; evaluated literally for
/// smaller `n`.
pub fn alhc_blcomp_closed(n: usize, m: usize) -> Alhc {
    let len = (n + m).saturating_sub(1);
    let entries = (1..=len)
        .map(|j| {
            if j <= m {
                Int::from(j)
            } else if j + 3 <= m + n {
                Int::from(m)
            } else {
                Int::zero()
            }
        })
        .collect();
    Alhc::new(entries)
}
