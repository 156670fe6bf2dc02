//! Arbitrary-precision integers and rationals, binomial coefficients, and the
//! two combinatorial identities the closed forms rest on.
//!
//! Rationals are always kept in canonical reduced form with a positive
//! denominator, so equality is structural equality. All arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer, the scalar type of every vector and
/// matrix entry in this crate.
pub type Int = BigInt;

/// Arbitrary-precision rational in reduced form with positive denominator.
pub type Rational = BigRational;

/// Rational `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

/// Binomial coefficient `C(a, b)` with the convention `C(a, b) = 0` for
/// `b < 0` or `b > a`. Negative upper arguments are rejected by the type:
/// none of the implemented formulas needs them.
pub fn binomial(a: u64, b: i64) -> Int {
    if b < 0 || b as u64 > a {
        return Int::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut result = Int::one();
    for i in 1..=b {
        result = result * Int::from(a - b + i) / Int::from(i);
    }
    result
}

/// `C(a, b)` for `usize` arguments (no truncation concerns in practice).
pub fn binomial_usize(a: usize, b: usize) -> Int {
    binomial(a as u64, b as i64)
}

/// Checks the convolution identity `sum_k C(r,k) C(s,n-k) = C(r+s,n)` by
/// direct expansion of the left-hand side. Always true; exposed as a
/// self-test of the binomial conventions.
pub fn vandermonde_check(r: u64, s: u64, n: i64) -> bool {
    let mut lhs = Int::zero();
    for k in 0..=r {
        lhs += binomial(r, k as i64) * binomial(s, n - k as i64);
    }
    lhs == binomial(r + s, n)
}

/// Integer-valued polynomial written in the binomial basis,
/// `P(x) = sum_j a_j * C(x+j, j)`.
///
/// Every polynomial taking integer values on the integers has such an
/// expansion with integer coefficients, and the basis makes the vanishing of
/// alternating sums ([`alternating_sum`]) directly checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasisPolynomial {
    coefficients: Vec<Int>,
}

impl BinomialBasisPolynomial {
    pub fn new(coefficients: Vec<Int>) -> Self {
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&a| Int::from(a)).collect())
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    /// Largest `j` with `a_j != 0`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|a| !a.is_zero())
    }

    /// Evaluates `P` at a non-negative integer point.
    pub fn eval(&self, x: u64) -> Int {
        let mut value = Int::zero();
        for (j, a) in self.coefficients.iter().enumerate() {
            if !a.is_zero() {
                value += a * binomial(x + j as u64, j as i64);
            }
        }
        value
    }
}

/// `sum_{i=0}^{N} (-1)^i C(N,i) P(i)`.
///
/// Vanishes whenever `degree(P) < N`; this is the cancellation driving the
/// staircase structure of the composition conversion and the sign pattern of
/// the degree-recovery matrix.
pub fn alternating_sum(p: &BinomialBasisPolynomial, n: u64) -> Int {
    let mut total = Int::zero();
    for i in 0..=n {
        let term = binomial(n, i as i64) * p.eval(i);
        if i.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// True iff `q` is in canonical form: positive denominator and coprime parts.
pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer;
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
