//! Output rendering. JSON reports are typed so that parsing and re-rendering
//! an output round-trips byte for byte; every integer is emitted as a decimal
//! string, safe for arbitrary precision.

use bl_invariants::boij_soderberg::CoefficientVector;
use bl_invariants::exact::{Int, Rational};
use bl_invariants::invariant::Signature;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffReport {
    pub j: String,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub n: String,
    pub m: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<CoeffReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
}

impl SignatureReport {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            n: n.to_string(),
            m: m.to_string(),
            omega: None,
            coeffs: None,
            lambda: None,
        }
    }

    pub fn with_omega(mut self, omega: &[Int]) -> Self {
        self.omega = Some(omega.iter().map(Int::to_string).collect());
        self
    }

    pub fn with_coeffs(mut self, coeffs: &CoefficientVector) -> Self {
        self.coeffs = Some(
            coeffs
                .nonzero()
                .iter()
                .map(|(j, c)| CoeffReport {
                    j: j.to_string(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        );
        self
    }

    pub fn with_lambda(mut self, lambda: &[Int]) -> Self {
        self.lambda = Some(lambda.iter().map(Int::to_string).collect());
        self
    }

    pub fn from_signature(sig: &Signature) -> Self {
        Self::new(sig.n, sig.m)
            .with_omega(sig.omega.entries())
            .with_coeffs(&sig.coeffs)
            .with_lambda(sig.lambda.entries())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub verdict: String,
    pub left: SignatureReport,
    pub right: SignatureReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub n: String,
    pub m: String,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: String,
    pub graphs: String,
    pub checks: String,
    pub mismatches: String,
}

/// `(a, b, c)` with exact decimal entries.
pub fn fmt_int_vec(values: &[Int]) -> String {
    let body: Vec<String> = values.iter().map(Int::to_string).collect();
    format!("({})", body.join(", "))
}

/// Exact fraction, with the denominator omitted when it is 1.
pub fn fmt_rational(value: &Rational) -> String {
    if *value.denom() == Int::from(1) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// The nonzero coefficients as `c_j = p/q` lines.
pub fn coeff_lines(coeffs: &CoefficientVector) -> Vec<String> {
    coeffs
        .nonzero()
        .iter()
        .map(|(j, c)| format!("c_{j} = {}", fmt_rational(c)))
        .collect()
}

/// Tab-separated values prefixed by a key.
pub fn tsv_row(key: &str, values: impl IntoIterator<Item = String>) -> String {
    let mut row = key.to_string();
    for v in values {
        row.push('\t');
        row.push_str(&v);
    }
    row
}
