//! Pure Betti tables and decompositions of Betti tables into them.
//!
//! A 2-linear Betti vector `omega` decomposes as `omega = sum_s c_s pi_s`,
//! where `pi_s` is the second row of the pure table of `(0, 2, 3, ..., s+1)`.
//! The change of basis is the triangular matrix `Omega` with entries
//! `Omega_ij = j C(i+1, j+1)` (row `i` is `pi_i`), whose inverse has the
//! closed form `(-1)^(i-j) C(i+1, j+1) / i`. For Booth-Lueker graphs the
//! coefficients additionally have elementary closed forms in the degree
//! vector, implemented here alongside the generic matrix conversion so the
//! two routes can be compared.
//!
//! For arbitrary (not necessarily 2-linear) tables, [`decompose_table`] peels
//! off pure tables greedily along the chain order and [`recompose`] plays the
//! sum back.

use num_traits::{One, Signed, Zero};

use crate::betti::{BettiTable, BettiVector};
use crate::exact::{binomial_usize, Int, Rational};
use crate::graph::DegreeVector;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::{Error, Result};

/// Strictly increasing sequence of non-negative integers indexing a pure
/// Betti table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidDegreeSequence("must be nonempty".into()));
        }
        if !degrees.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidDegreeSequence(format!(
                "{degrees:?} is not strictly increasing"
            )));
        }
        Ok(Self { degrees })
    }

    pub fn from_slice(degrees: &[usize]) -> Result<Self> {
        Self::new(degrees.to_vec())
    }

    /// The 2-linear sequence `(0, 2, 3, ..., s+1)` whose pure table has `s`
    /// nonzero entries on the second row.
    pub fn two_linear(s: usize) -> Self {
        assert!(s >= 1);
        let mut degrees = Vec::with_capacity(s + 1);
        degrees.push(0);
        degrees.extend(2..=(s + 1));
        Self { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self >= other` in the partial order: `self` is no longer than
    /// `other` and dominates it entrywise on the shared prefix.
    pub fn dominates(&self, other: &DegreeSequence) -> bool {
        self.len() <= other.len() && self.degrees.iter().zip(&other.degrees).all(|(a, b)| a >= b)
    }
}

/// Pure Betti table: nonzero entries exactly at `(i, n_i)`, normalized so the
/// `(0, n_0)` entry is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureTable {
    seq: DegreeSequence,
    values: Vec<Rational>,
}

impl PureTable {
    pub fn sequence(&self) -> &DegreeSequence {
        &self.seq
    }

    /// The entry `beta_{i, n_i}`.
    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    /// The entry `beta_{i, i+j}` at table position (row `j`, column `i`).
    pub fn entry(&self, row: usize, col: usize) -> Rational {
        let degrees = self.seq.degrees();
        if col < degrees.len() && degrees[col] == col + row {
            self.values[col].clone()
        } else {
            Rational::zero()
        }
    }

    /// Smallest `(rows, cols)` shape containing all nonzero entries.
    pub fn min_shape(&self) -> (usize, usize) {
        let degrees = self.seq.degrees();
        let rows = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| d - i)
            .max()
            .unwrap_or(0)
            + 1;
        (rows, degrees.len())
    }

    pub fn to_table(&self) -> BettiTable {
        let (rows, cols) = self.min_shape();
        let mut t = BettiTable::zero(rows, cols);
        for (i, &d) in self.seq.degrees().iter().enumerate() {
            t.set(d - i, i, self.values[i].clone());
        }
        t
    }
}

/// Pure Betti table of a degree sequence, by the product formula
/// `beta_{i, n_i} = prod_{k != 0, i} |(n_k - n_0) / (n_k - n_i)|`.
pub fn pure_table(seq: &DegreeSequence) -> PureTable {
    let degrees = seq.degrees();
    let values = (0..degrees.len())
        .map(|i| {
            let mut value = Rational::one();
            for (k, &nk) in degrees.iter().enumerate() {
                if k == 0 || k == i {
                    continue;
                }
                let num = Int::from(nk as i64 - degrees[0] as i64);
                let den = Int::from(nk as i64 - degrees[i] as i64);
                value *= Rational::new(num, den);
            }
            if value.is_negative() {
                -value
            } else {
                value
            }
        })
        .collect();
    PureTable {
        seq: seq.clone(),
        values,
    }
}

/// Second row of the pure table of `(0, 2, 3, ..., s+1)`, padded with zeros
/// to length `L >= s`: 1-indexed entry `i` is `i C(s+1, i+1)` for `i <= s`.
pub fn pure_linear_vector(s: usize, len: usize) -> Result<Vec<Int>> {
    if s < 1 || len < s {
        return Err(Error::Applicability(format!(
            "pure 2-linear vector needs 1 <= s <= L, got s = {s}, L = {len}"
        )));
    }
    Ok((1..=len)
        .map(|i| {
            if i <= s {
                Int::from(i) * binomial_usize(s + 1, i + 1)
            } else {
                Int::zero()
            }
        })
        .collect())
}

/// The `L x L` change-of-basis matrix with 1-indexed entries
/// `Omega_ij = j C(i+1, j+1)`; row `i` is `pi_i` truncated to length `L`.
pub fn omega_matrix(len: usize) -> IntMatrix {
    IntMatrix::from_fn(len, len, |r, c| {
        Int::from(c + 1) * binomial_usize(r + 2, c + 2)
    })
}

/// Closed-form inverse of [`omega_matrix`]: 1-indexed entries
/// `(-1)^(i-j) C(i+1, j+1) / i`.
pub fn omega_inverse(len: usize) -> RatMatrix {
    RatMatrix::from_fn(len, len, omega_inverse_entry)
}

fn omega_inverse_entry(r: usize, c: usize) -> Rational {
    let b = binomial_usize(r + 2, c + 2);
    // (-1)^(i-j) has the parity of i+j.
    let signed = if (r + c).is_multiple_of(2) { b } else { -b };
    Rational::new(signed, Int::from(r + 1))
}

/// Vector of Boij-Söderberg coefficients, padded with explicit zeros to the
/// length of the Betti vector it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    entries: Vec<Rational>,
}

impl CoefficientVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![Rational::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `c_j` for 1-indexed `j`.
    pub fn entry(&self, j: usize) -> &Rational {
        &self.entries[j - 1]
    }

    /// The nonzero coefficients as 1-indexed `(j, c_j)` pairs.
    pub fn nonzero(&self) -> Vec<(usize, Rational)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k + 1, c.clone()))
            .collect()
    }
}

/// Boij-Söderberg coefficients of a 2-linear Betti vector by the matrix
/// method `c = omega Omega^-1`. Errors if any coefficient comes out
/// negative, which means the input was not such a Betti vector.
pub fn coeffs_from_betti(omega: &BettiVector) -> Result<CoefficientVector> {
    let len = omega.len();
    let mut entries = Vec::with_capacity(len);
    for c in 0..len {
        let mut acc = Rational::zero();
        for r in c..len {
            let w = &omega.entries()[r];
            if !w.is_zero() {
                acc += Rational::from(w.clone()) * omega_inverse_entry(r, c);
            }
        }
        if acc.is_negative() {
            return Err(Error::NegativeCoefficient {
                index: c + 1,
                value: acc.to_string(),
            });
        }
        entries.push(acc);
    }
    Ok(CoefficientVector::new(entries))
}

/// The closed-form coefficient `c_j` (1-indexed) of `BL(G)` for a graph with
/// degree vector `d`, using the summation bound `i >= j-n+2` consistent with
/// the matrix method; see the regression test for the bound.
pub(crate) fn closed_bl_coefficient(d: &DegreeVector, j: usize) -> Rational {
    let n = d.vertex_count();
    let counts = d.counts();
    if n == 0 || j + 2 <= n || j > 2 * n - 2 {
        // j <= n-2 or beyond the support.
        return Rational::zero();
    }
    if j == n - 1 {
        return Rational::new(Int::from(counts[0]), Int::from(n));
    }
    let head = Rational::new(Int::from(counts[j - n + 1]), Int::from(j));
    let tail_sum: usize = counts[(j - n + 2).min(n)..n].iter().sum();
    head + Rational::new(Int::from(tail_sum), Int::from(j * (j + 1)))
}

/// Closed-form Boij-Söderberg coefficients of `BL(G)` from the degree
/// vector: `c_{n-1} = d_0 / n` and, for `n-1 < j <= 2n-2`,
/// `c_j = d_{j-n+1}/j + (d_{j-n+2} + ... + d_{n-1}) / (j(j+1))`.
///
/// The stated hypothesis is `m >= n`; inputs with `m = n-1` are accepted as
/// well (the identity still holds there and is covered by the property
/// tests). Below that the vector is too short for the support and an
/// applicability error points at [`coeffs_from_betti`].
pub fn coeffs_bl_closed(d: &DegreeVector, m: usize) -> Result<CoefficientVector> {
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
            "closed-form coefficients require m >= n-1 (stated hypothesis: m >= n), got \
             n = {n}, m = {m}; use the matrix method instead"
        )));
    }
    let len = (n + m).saturating_sub(1);
    let entries = (1..=len).map(|j| closed_bl_coefficient(d, j)).collect();
    Ok(CoefficientVector::new(entries))
}

/// Closed-form Boij-Söderberg coefficients of the complement of `BL(G)`:
/// `c_i = m / (i(i+1))` for `m <= i <= m+n-4`, and `c_{m+n-3} = m / (m+n-3)`.
/// Requires `n >= 3` and `m >= 1`; smaller inputs are routed to
/// [`coeffs_from_betti`].
pub fn coeffs_blcomp_closed(n: usize, m: usize) -> Result<CoefficientVector> {
    if n < 3 || m < 1 {
        return Err(Error::Applicability(format!(
            "closed-form complement coefficients require n >= 3 and m >= 1, got \
             n = {n}, m = {m}; use the matrix method instead"
        )));
    }
    let len = n + m - 1;
    let top = m + n - 3;
    let entries = (1..=len)
        .map(|i| {
            if i == top {
                Rational::new(Int::from(m), Int::from(top))
            } else if m <= i && i + 4 <= m + n {
                Rational::new(Int::from(m), Int::from(i * (i + 1)))
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(CoefficientVector::new(entries))
}

/// Ordered list of `(degree sequence, positive coefficient)` pairs forming a
/// strictly increasing chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    parts: Vec<(DegreeSequence, Rational)>,
}

impl Decomposition {
    pub fn new(parts: Vec<(DegreeSequence, Rational)>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[(DegreeSequence, Rational)] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True iff the sequences form a strictly increasing chain.
    pub fn is_chain(&self) -> bool {
        self.parts.windows(2).all(|w| {
            let (prev, next) = (&w[0].0, &w[1].0);
            next.dominates(prev) && next != prev
        })
    }
}

/// Greedy decomposition of a non-negative Betti table into pure tables:
/// repeatedly read off the minimal degree in every column up to the last
/// nonzero one, peel off the largest multiple of that pure table that keeps
/// all entries non-negative, and continue until the table is zero.
pub fn decompose_table(table: &BettiTable) -> Result<Decomposition> {
    let rows = table.row_count();
    let cols = table.col_count();
    for r in 0..rows {
        for c in 0..cols {
            if table.at(r, c).is_negative() {
                return Err(Error::NotDecomposable(format!(
                    "negative entry at row {r}, column {c}"
                )));
            }
        }
    }

    let mut work = table.clone();
    let mut parts: Vec<(DegreeSequence, Rational)> = Vec::new();
    loop {
        let top_col = (0..cols)
            .rev()
            .find(|&c| (0..rows).any(|r| !work.at(r, c).is_zero()));
        let Some(top_col) = top_col else {
            break; // table is zero
        };

        let mut degrees = Vec::with_capacity(top_col + 1);
        for c in 0..=top_col {
            match (0..rows).find(|&r| !work.at(r, c).is_zero()) {
                Some(r) => degrees.push(c + r),
                None => {
                    return Err(Error::NotDecomposable(format!(
                        "column {c} is zero while column {top_col} is not"
                    )))
                }
            }
        }
        if !degrees.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotDecomposable(format!(
                "minimal degrees {degrees:?} are not strictly increasing"
            )));
        }
        let seq = DegreeSequence::new(degrees)?;
        let pure = pure_table(&seq);

        let coeff = (0..=top_col)
            .map(|i| {
                let row = seq.degrees()[i] - i;
                work.at(row, i) / pure.value(i)
            })
            .min()
            .expect("sequence is nonempty");
        debug_assert!(coeff.is_positive());

        for i in 0..=top_col {
            let row = seq.degrees()[i] - i;
            let remaining = work.at(row, i) - &coeff * pure.value(i);
            debug_assert!(!remaining.is_negative());
            work.set(row, i, remaining);
        }
        parts.push((seq, coeff));
    }

    let decomposition = Decomposition::new(parts);
    debug_assert!(decomposition.is_chain());
    Ok(decomposition)
}

/// Sum of the weighted pure tables, rendered at least at the requested shape
/// (the shape grows if a pure table needs more room).
pub fn recompose(decomposition: &Decomposition, min_rows: usize, min_cols: usize) -> BettiTable {
    let mut rows = min_rows;
    let mut cols = min_cols;
    let pures: Vec<PureTable> = decomposition
        .parts()
        .iter()
        .map(|(seq, _)| pure_table(seq))
        .collect();
    for pure in &pures {
        let (r, c) = pure.min_shape();
        rows = rows.max(r);
        cols = cols.max(c);
    }

    let mut out = BettiTable::zero(rows, cols);
    for (pure, (seq, coeff)) in pures.iter().zip(decomposition.parts()) {
        for (i, &d) in seq.degrees().iter().enumerate() {
            let updated = out.at(d - i, i) + coeff * pure.value(i);
            out.set(d - i, i, updated);
        }
    }
    out
}
