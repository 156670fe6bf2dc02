//! Betti vectors of 2-linear edge ideals.
//!
//! Two independent routes are implemented and cross-checked everywhere:
//!
//! - [`betti_oracle`]: brute-force subset enumeration. For a graph `H` whose
//!   complement is chordal, `beta_{i,i+1}` is the sum over all `(i+1)`-subsets
//!   `W` of the vertices of (number of connected components of the complement
//!   induced on `W`, minus one).
//! - [`betti_bl_closed`] / [`betti_blcomp_closed`]: closed forms for
//!   Booth-Lueker graphs and their complements, linear in the degree vector.
//!
//! The closed form for `BL(G)` is `omega = A d - v` with
//! `A_ij = C(j+n-2, i)` and `v_i = C(n, i+1)` (1-indexed), and it can be
//! inverted back to the degree vector ([`recover_degree_vector`]).

use num_traits::Zero;

use crate::exact::{binomial_usize, Int, Rational};
use crate::graph::{DegreeVector, Graph};
use crate::matrix::IntMatrix;
use crate::{Error, Result};

/// Largest vertex count accepted by the subset-enumeration oracle.
pub const ORACLE_VERTEX_CAP: usize = 24;

/// The reduced second row `(beta_{1,2}, ..., beta_{L,L+1})` of a 2-linear
/// Betti table, padded with explicit zeros up to its declared length.
/// Equality compares the padded vectors, declared length included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    entries: Vec<Int>,
}

impl BettiVector {
    pub fn new(entries: Vec<Int>) -> Self {
        Self { entries }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&b| Int::from(b)).collect())
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

    /// `beta_{i,i+1}` for 1-indexed `i`.
    pub fn entry(&self, i: usize) -> &Int {
        &self.entries[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Int::is_zero)
    }

    /// 1-indexed position of the last nonzero entry.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.entries
            .iter()
            .rposition(|b| !b.is_zero())
            .map(|p| p + 1)
    }
}

/// Betti table with entry `(j, i)` equal to `beta_{i,i+j}`, the `(0,0)` slot
/// included. Entries are exact rationals so that pure tables and their
/// weighted sums live in the same type; tables of actual modules are
/// integer-valued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    rows: Vec<Vec<Rational>>,
}

impl BettiTable {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        if let Some(width) = rows.first().map(Vec::len) {
            assert!(rows.iter().all(|r| r.len() == width), "ragged Betti table");
        }
        Self { rows }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(Int::from(x))).collect())
                .collect(),
        )
    }

    /// The table of a cyclic module with 2-linear resolution: a 1 in the
    /// `(0,0)` slot and `omega` as the second row.
    pub fn two_linear(omega: &BettiVector) -> Self {
        let cols = omega.len() + 1;
        let mut table = Self::zero(2, cols);
        table.rows[0][0] = Rational::from(Int::from(1));
        for (k, b) in omega.entries().iter().enumerate() {
            table.rows[1][k + 1] = Rational::from(b.clone());
        }
        table
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn at(&self, row: usize, col: usize) -> &Rational {
        &self.rows[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.rows[row][col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Rational::is_zero)
    }
}

/// Connected components of the subgraph induced on `subset` by the adjacency
/// bitmasks `adj`.
fn components_in_mask(adj: &[u32], subset: u32) -> u32 {
    let mut remaining = subset;
    let mut count = 0;
    while remaining != 0 {
        count += 1;
        let seed = remaining & remaining.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut grow = 0u32;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                grow |= adj[v];
                bits &= bits - 1;
            }
            frontier = grow & remaining & !comp;
            comp |= frontier;
        }
        remaining &= !comp;
    }
    count
}

pub(crate) fn oracle_with_subset_counts(h: &Graph) -> Result<(BettiVector, Vec<u64>)> {
    let nv = h.vertex_count();
    if nv > ORACLE_VERTEX_CAP {
        return Err(Error::OracleTooLarge {
            vertices: nv,
            cap: ORACLE_VERTEX_CAP,
        });
    }
    let complement = h.complement();
    if !complement.is_chordal() {
        return Err(Error::Applicability(
            "Betti oracle requires a 2-linear edge ideal, i.e. a graph whose complement \
             is chordal"
                .into(),
        ));
    }

    let adj = complement.adjacency_masks();
    let mut size_counts = vec![0u64; nv + 1];
    size_counts[0] = 1;
    let mut beta = vec![0u64; nv.saturating_sub(1)];
    for subset in 1..(1u32 << nv) {
        let k = subset.count_ones() as usize;
        size_counts[k] += 1;
        if k >= 2 {
            let components = components_in_mask(&adj, subset);
            beta[k - 2] += u64::from(components - 1);
        }
    }
    debug_assert_eq!(size_counts.iter().sum::<u64>(), 1u64 << nv);

    let entries = beta.into_iter().map(Int::from).collect();
    Ok((BettiVector::new(entries), size_counts))
}

/// Brute-force Betti vector of the edge ideal of `h`, by enumerating all
/// vertex subsets and counting connected components of the complement's
/// induced subgraphs. Declared length is `|V(h)| - 1`.
///
/// Errors if the complement of `h` is not chordal (no 2-linear resolution)
/// or if `h` exceeds [`ORACLE_VERTEX_CAP`] vertices.
pub fn betti_oracle(h: &Graph) -> Result<BettiVector> {
    oracle_with_subset_counts(h).map(|(beta, _)| beta)
}

fn bl_row_count(n: usize, m: usize) -> usize {
    (n + m).saturating_sub(1)
}

/// The `(n+m-1) x n` matrix with 1-indexed entries `A_ij = C(j+n-2, i)`;
/// `A d` is the degree-vector part of the Betti vector of `BL(G)`.
pub fn stat_matrix_a(n: usize, m: usize) -> IntMatrix {
    IntMatrix::from_fn(bl_row_count(n, m), n, |r, c| {
        binomial_usize(n + c - 1, r + 1)
    })
}

/// The length-`(n+m-1)` vector with 1-indexed entries `v_i = C(n, i+1)`.
pub fn stat_vector_v(n: usize, m: usize) -> Vec<Int> {
    (0..bl_row_count(n, m))
        .map(|r| binomial_usize(n, r + 2))
        .collect()
}

/// Closed-form Betti vector of `BL(G)` from the degree vector alone:
/// `omega = A d - v`, padded to length `n + m - 1`.
pub fn betti_bl_closed(d: &DegreeVector, m: usize) -> Result<BettiVector> {
    let n = d.vertex_count();
    if d.degree_sum() != 2 * m {
        return Err(Error::Inconsistent(format!(
            "degree vector sums to {} but 2m = {}",
            d.degree_sum(),
            2 * m
        )));
    }
    let counts = d.counts();
    let entries = (0..bl_row_count(n, m))
        .map(|r| {
            let mut acc = Int::zero();
            for (c, &dc) in counts.iter().enumerate() {
                if dc > 0 {
                    acc += binomial_usize(n + c - 1, r + 1) * Int::from(dc);
                }
            }
            acc - binomial_usize(n, r + 2)
        })
        .collect();
    Ok(BettiVector::new(entries))
}

/// Closed-form Betti vector of `BL(G)` computed directly from a graph.
pub fn betti_bl_of_graph(g: &Graph) -> BettiVector {
    betti_bl_closed(&g.degree_vector(), g.edge_count())
        .expect("a graph's degree vector is always consistent with its edge count")
}

/// Closed-form Betti vector of the complement of `BL(G)`: 1-indexed entry
/// `j` is `m C(m+n-3, j) - C(m, j+1)`. Depends on `(n, m)` only.
pub fn betti_blcomp_closed(n: usize, m: usize) -> BettiVector {
    let len = bl_row_count(n, m);
    if m == 0 || n <= 1 {
        // No edges survive in the complement of BL(G).
        return BettiVector::zeros(len);
    }
    let entries = (0..len)
        .map(|r| Int::from(m) * binomial_usize(m + n - 3, r + 1) - binomial_usize(m, r + 2))
        .collect();
    BettiVector::new(entries)
}

/// The upper unitriangular `(delta+1) x (delta+1)` submatrix `B` of `A` used
/// to recover the degree vector: rows `n-1 .. n+delta-1`, columns
/// `1 .. delta+1` (1-indexed).
pub fn recovery_matrix(n: usize, delta: usize) -> IntMatrix {
    IntMatrix::from_fn(delta + 1, delta + 1, |r, c| {
        binomial_usize(n + c - 1, n - 1 + r)
    })
}

/// Inverse of [`recovery_matrix`]: entrywise `(B^-1)_ij = (-1)^(i+j) B_ij`.
pub fn recovery_matrix_inverse(n: usize, delta: usize) -> IntMatrix {
    IntMatrix::from_fn(delta + 1, delta + 1, |r, c| {
        let b = binomial_usize(n + c - 1, n - 1 + r);
        if (r + c).is_multiple_of(2) {
            b
        } else {
            -b
        }
    })
}

/// Recovers the degree vector of `G` on `n` vertices from the Betti vector
/// of `BL(G)`. Fails with an inconsistency error when `omega` is not
/// realizable as such a Betti vector.
pub fn recover_degree_vector(omega: &BettiVector, n: usize) -> Result<DegreeVector> {
    if n == 0 {
        return if omega.is_empty() {
            DegreeVector::from_counts(vec![])
        } else {
            Err(Error::Inconsistent(
                "nonempty Betti vector for a graph on 0 vertices".into(),
            ))
        };
    }
    if omega.len() + 1 < n {
        return Err(Error::Inconsistent(format!(
            "Betti vector of length {} is too short for {} vertices",
            omega.len(),
            n
        )));
    }
    let m = omega.len() + 1 - n;

    let last = match omega.last_nonzero() {
        Some(t) => t,
        None => {
            // Only BL of the single-vertex graph has an all-zero Betti vector.
            return if n == 1 && m == 0 {
                DegreeVector::from_counts(vec![1])
            } else {
                Err(Error::Inconsistent(
                    "an all-zero Betti vector only arises from the one-vertex graph".into(),
                ))
            };
        }
    };
    if last < n - 1 {
        return Err(Error::Inconsistent(format!(
            "last nonzero entry at position {last} is below n-1 = {}",
            n - 1
        )));
    }
    let delta = last - (n - 1);
    if delta > n - 1 {
        return Err(Error::Inconsistent(format!(
            "implied maximum degree {delta} exceeds n-1 = {}",
            n - 1
        )));
    }

    let b_inv = recovery_matrix_inverse(n, delta);
    debug_assert!(recovery_matrix(n, delta).mul_matrix(&b_inv).is_identity());

    let mut rhs: Vec<Int> = (0..=delta)
        .map(|k| omega.entry(n - 1 + k).clone())
        .collect();
    rhs[0] += 1;
    let head = b_inv.mul_vec(&rhs);

    let mut counts = Vec::with_capacity(n);
    for value in &head {
        let Ok(count) = usize::try_from(value) else {
            return Err(Error::Inconsistent(format!(
                "recovered degree count {value} is not a non-negative integer index"
            )));
        };
        counts.push(count);
    }
    counts.resize(n, 0);

    let d = DegreeVector::from_counts(counts)
        .map_err(|e| Error::Inconsistent(format!("recovered vector is invalid: {e}")))?;
    if d.degree_sum() != 2 * m {
        return Err(Error::Inconsistent(format!(
            "recovered degree vector implies {} edge-endpoints, expected {}",
            d.degree_sum(),
            2 * m
        )));
    }
    // Full round trip: rows outside the recovery window must also match.
    if betti_bl_closed(&d, m)? != *omega {
        return Err(Error::Inconsistent(
            "vector is not realizable as the Betti vector of a Booth-Lueker graph".into(),
        ));
    }
    Ok(d)
}
