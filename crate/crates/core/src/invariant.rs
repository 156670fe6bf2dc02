//! Graph comparison through Booth-Lueker Betti signatures.
//!
//! The signature of `G` packs the Betti vector of `BL(G)` together with its
//! Boij-Söderberg coefficients and anti-lecture-hall composition. Since the
//! Betti vector is a linear image of the degree vector with a left inverse,
//! two graphs share a signature exactly when they share a degree vector: the
//! invariant is isomorphism-invariant but strictly weaker than isomorphism
//! (the 6-cycle and two triangles share the signature).

use std::fmt;

use crate::alhc::{alhc_bl_closed, alhc_from_betti, Alhc};
use crate::betti::{betti_bl_of_graph, BettiVector};
use crate::boij_soderberg::{coeffs_bl_closed, coeffs_from_betti, CoefficientVector};
use crate::graph::Graph;
use crate::Error;

/// Invariant data of one graph: everything downstream of the degree vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub n: usize,
    pub m: usize,
    pub omega: BettiVector,
    pub coeffs: CoefficientVector,
    pub lambda: Alhc,
}

/// Outcome of a signature comparison. Deliberately not called "isomorphic":
/// equal signatures only mean the Betti data cannot tell the graphs apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Distinguished,
    IndistinguishableByBlBetti,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "DISTINGUISHED",
            Verdict::IndistinguishableByBlBetti => "INDISTINGUISHABLE_BY_BL_BETTI",
        })
    }
}

/// Computes the full signature of a graph. Closed forms are used when their
/// hypotheses hold, with the matrix conversions as the unconditional
/// fallback, so every graph gets a signature.
pub fn signature(g: &Graph) -> Signature {
    let n = g.vertex_count();
    let m = g.edge_count();
    let d = g.degree_vector();
    let omega = betti_bl_of_graph(g);

    let coeffs = match coeffs_bl_closed(&d, m) {
        Ok(c) => c,
        Err(Error::Applicability(_)) => {
            coeffs_from_betti(&omega).expect("Betti vectors of graphs convert cleanly")
        }
        Err(e) => unreachable!("graph-derived degree vector is consistent: {e}"),
    };
    let lambda = match alhc_bl_closed(&d, m) {
        Ok(l) => l,
        Err(Error::Applicability(_)) => {
            alhc_from_betti(&omega).expect("Betti vectors of graphs convert cleanly")
        }
        Err(e) => unreachable!("graph-derived degree vector is consistent: {e}"),
    };

    debug_assert_eq!(
        coeffs,
        coeffs_from_betti(&omega).expect("signature stays internally consistent")
    );
    debug_assert_eq!(
        lambda,
        alhc_from_betti(&omega).expect("signature stays internally consistent")
    );

    Signature {
        n,
        m,
        omega,
        coeffs,
        lambda,
    }
}

/// Compares two graphs by signature. `DISTINGUISHED` exactly when the degree
/// vectors differ.
pub fn compare(g: &Graph, h: &Graph) -> Verdict {
    let same = signature(g) == signature(h);
    debug_assert_eq!(same, g.degree_vector() == h.degree_vector());
    if same {
        Verdict::IndistinguishableByBlBetti
    } else {
        Verdict::Distinguished
    }
}
