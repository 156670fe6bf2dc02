//! The Booth-Lueker construction for simple graphs and multigraphs, its
//! complement, the pineapple multigraph, and the edge-move transformation.
//!
//! `BL(G)` has one vertex per vertex of `G` (the "left" part, completed to a
//! clique) and one vertex per edge instance of `G` (the "right" part, an
//! independent set), each right vertex joined to the two endpoints of its
//! source edge. Both `BL(G)` and its complement are split graphs, hence
//! chordal, for every `G`.

use crate::graph::{Graph, MultiGraph};
use crate::{Error, Result};

/// A Booth-Lueker graph together with its split structure: which vertices
/// form the left clique, and which source edge each right vertex came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlGraph {
    graph: Graph,
    left_size: usize,
    edge_sources: Vec<(usize, usize)>,
}

impl BlGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Number of original vertices (the clique part).
    pub fn left_size(&self) -> usize {
        self.left_size
    }

    /// Number of edge-vertices (the independent part).
    pub fn right_size(&self) -> usize {
        self.edge_sources.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Source edge of right vertex `left_size + k`.
    pub fn edge_source(&self, k: usize) -> (usize, usize) {
        self.edge_sources[k]
    }
}

/// Booth-Lueker graph of a multigraph. Right vertices are numbered
/// `n, n+1, ...` in the input edge order, one per edge instance, so parallel
/// edges yield distinct right vertices with identical neighborhoods.
pub fn bl_multi(g: &MultiGraph) -> BlGraph {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Graph::complete(n).disjoint_union(&Graph::new(m));
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        out.add_edge(u, n + k).expect("left-right edges are valid");
        out.add_edge(v, n + k).expect("left-right edges are valid");
    }
    BlGraph {
        graph: out,
        left_size: n,
        edge_sources: g.edges().to_vec(),
    }
}

/// Booth-Lueker graph of a simple graph.
pub fn bl(g: &Graph) -> BlGraph {
    bl_multi(&MultiGraph::from_graph(g))
}

/// Complement of the Booth-Lueker graph: left part independent, right part
/// independent, and the right vertex of edge `uv` joined to every left vertex
/// other than `u` and `v`.
pub fn bl_complement_multi(g: &MultiGraph) -> Graph {
    bl_multi(g).graph().complement()
}

pub fn bl_complement(g: &Graph) -> Graph {
    bl(g).graph().complement()
}

/// Multigraph on `n` vertices with all `m` edges between vertices 0 and 1;
/// its Booth-Lueker graph is the terminal shape of the edge-move reduction.
pub fn pineapple(n: usize, m: usize) -> Result<MultiGraph> {
    if n < 2 && m > 0 {
        return Err(Error::Applicability(format!(
            "a pineapple with {m} edges needs at least 2 vertices, got {n}"
        )));
    }
    let mut g = MultiGraph::new(n);
    for _ in 0..m {
        g.add_edge(0, 1).expect("pineapple edges are valid");
    }
    Ok(g)
}

/// Removes one instance of the edge `uv` and adds the edge `uw`.
/// The Betti vector of the complement Booth-Lueker graph is invariant under
/// this move, which is what makes it depend on `(n, m)` only.
pub fn move_edge(g: &MultiGraph, u: usize, v: usize, w: usize) -> Result<MultiGraph> {
    if u == v || u == w || v == w {
        return Err(Error::VerticesNotDistinct(u, v, w));
    }
    let n = g.vertex_count();
    for x in [u, v, w] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut out = g.clone();
    out.remove_edge(u, v)?;
    out.add_edge(u, w)?;
    Ok(out)
}
