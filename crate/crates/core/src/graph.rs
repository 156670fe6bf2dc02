//! Simple graphs and multigraphs with the structural operations the closed
//! forms consume: complement, induced subgraphs, connected components,
//! chordality, and the degree vector.
//!
//! Vertices are `0..n`. Isolated vertices matter (the degree vector depends on
//! the vertex count), so every constructor takes `n` explicitly.

use std::collections::BTreeSet;

use crate::exact::Int;
use crate::{Error, Result};

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Entry `i` counts the vertices of degree exactly `i`; length is the
    /// vertex count.
    pub fn degree_vector(&self) -> DegreeVector {
        let n = self.vertex_count();
        let mut counts = vec![0usize; n];
        for v in 0..n {
            counts[self.degree(v)] += 1;
        }
        DegreeVector { counts }
    }

    /// Edge present in the output iff absent here.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Number of connected components; 0 for the graph on no vertices.
    pub fn connected_components(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    /// Chordality via maximum cardinality search followed by verification
    /// that the resulting ordering is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        if n <= 3 {
            return true;
        }

        // MCS fills the ordering from the back: repeatedly pick an unpicked
        // vertex with the most picked neighbors.
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut order = vec![0usize; n];
        for slot in (0..n).rev() {
            let v = (0..n)
                .filter(|&v| !picked[v])
                .max_by_key(|&v| weight[v])
                .expect("an unpicked vertex remains");
            picked[v] = true;
            order[slot] = v;
            for u in self.neighbors(v) {
                if !picked[u] {
                    weight[u] += 1;
                }
            }
        }

        let mut pos = vec![0usize; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }

        // Perfect elimination check: the later neighbors of each vertex must
        // all be adjacent to the earliest of them.
        for (k, &v) in order.iter().enumerate() {
            let later: Vec<usize> = self.neighbors(v).filter(|&u| pos[u] > k).collect();
            if let Some(&u) = later.iter().min_by_key(|&&u| pos[u]) {
                for &w in &later {
                    if w != u && !self.has_edge(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut g = Graph::new(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation preserves validity");
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut g = Graph::new(offset + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edges stay valid");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset)
                .expect("edges stay valid");
        }
        g
    }

    /// Adjacency bitmasks for subset enumeration; requires at most 32 vertices.
    pub fn adjacency_masks(&self) -> Vec<u32> {
        let n = self.vertex_count();
        assert!(n <= 32, "bitmask adjacency requires at most 32 vertices");
        (0..n)
            .map(|v| self.neighbors(v).fold(0u32, |m, u| m | (1 << u)))
            .collect()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("path edges are valid");
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).expect("closing edge is valid");
        g
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(0, v).expect("star edges are valid");
        }
        g
    }
}

/// Undirected multigraph: parallel edges allowed, loops still rejected.
/// Edge instances keep their insertion order; constructions that number the
/// edges (like the Booth-Lueker graph) follow that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    /// Removes one instance of the edge `(u, v)` (the earliest one).
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let key = (u.min(v), u.max(v));
        match self.edges.iter().position(|&e| e == key) {
            Some(idx) => {
                self.edges.remove(idx);
                Ok(())
            }
            None => Err(Error::EdgeNotPresent(key.0, key.1)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Multiset of edges irrespective of insertion order.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted
    }
}

/// Counts of vertices by degree: entry `i` is the number of vertices of
/// degree `i`. The length equals the vertex count, so the entries sum to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    counts: Vec<usize>,
}

impl DegreeVector {
    pub fn from_counts(counts: Vec<usize>) -> Result<Self> {
        let n = counts.len();
        let total: usize = counts.iter().sum();
        if total != n {
            return Err(Error::InvalidDegreeVector(format!(
                "entries sum to {total}, expected the vertex count {n}"
            )));
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Vertex count (= length = sum of entries).
    pub fn vertex_count(&self) -> usize {
        self.counts.len()
    }

    /// `sum_i i * d_i`, which equals twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, d)| i * d).sum()
    }

    /// Largest degree present; 0 for the edgeless (or empty) graph.
    pub fn max_degree(&self) -> usize {
        self.counts.iter().rposition(|&d| d > 0).unwrap_or(0)
    }

    pub fn as_int_vec(&self) -> Vec<Int> {
        self.counts.iter().map(|&d| Int::from(d)).collect()
    }
}

/// All simple graphs on `n` labeled vertices, by edge-subset mask.
/// Only sensible for small `n` (there are `2^C(n,2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 30, "too many potential edges to enumerate");
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("enumerated edges are valid")
    })
}

/// All multigraphs on `n` labeled vertices with at most `max_edges` edges
/// (edge multisets in non-decreasing order of the underlying pairs).
pub fn all_multigraphs(n: usize, max_edges: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();

    fn extend(
        pairs: &[(usize, usize)],
        from: usize,
        left: usize,
        n: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<MultiGraph>,
    ) {
        out.push(MultiGraph::from_edges(n, current).expect("enumerated edges are valid"));
        if left == 0 {
            return;
        }
        for i in from..pairs.len() {
            current.push(pairs[i]);
            extend(pairs, i, left - 1, n, current, out);
            current.pop();
        }
    }

    extend(&pairs, 0, max_edges, n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_vector_examples() {
        // 7-cycle plus the chord (0, 2): five vertices of degree 2, two of degree 3.
        let mut g = Graph::cycle(7);
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.degree_vector().counts(), &[0, 0, 5, 2, 0, 0, 0]);

        assert_eq!(Graph::new(4).degree_vector().counts(), &[4, 0, 0, 0]);
        assert_eq!(Graph::path(4).degree_vector().counts(), &[0, 2, 2, 0]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::new(4));
        let mut g = Graph::path(5);
        g.add_edge(0, 3).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let e = k4.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(e.edges(), vec![(0, 1)]);

        assert_eq!(k4.induced_subgraph(&[]).unwrap(), Graph::new(0));

        let p4 = Graph::path(4);
        let h = p4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);

        assert!(matches!(
            p4.induced_subgraph(&[0, 9]),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn connected_component_counts() {
        assert_eq!(Graph::new(5).connected_components(), 5);
        assert_eq!(Graph::complete(4).connected_components(), 1);
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(two_triangles.connected_components(), 2);
        assert_eq!(Graph::new(0).connected_components(), 0);
    }

    #[test]
    fn components_invariant_under_full_induction() {
        for g in all_graphs(4) {
            let all: Vec<usize> = (0..4).collect();
            assert_eq!(
                g.induced_subgraph(&all).unwrap().connected_components(),
                g.connected_components()
            );
        }
    }

    #[test]
    fn chordality_examples() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(6).is_chordal());
        assert!(Graph::path(4).is_chordal());
        assert!(Graph::star(5).is_chordal());
        assert!(Graph::complete(6).is_chordal());
        // 4-cycle with a chord is chordal again.
        let mut g = Graph::cycle(4);
        g.add_edge(0, 2).unwrap();
        assert!(g.is_chordal());
        // C_5 with one chord still has a chordless 4-cycle.
        let mut g = Graph::cycle(5);
        g.add_edge(0, 2).unwrap();
        assert!(!g.is_chordal());
    }

    #[test]
    fn chordality_matches_cycle_check_small() {
        // Independent oracle: a graph is chordal iff no induced cycle of
        // length >= 4, checked by brute force over vertex subsets.
        fn has_chordless_cycle(g: &Graph) -> bool {
            let n = g.vertex_count();
            for mask in 0u32..(1 << n) {
                if (mask.count_ones() as usize) < 4 {
                    continue;
                }
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let h = g.induced_subgraph(&verts).unwrap();
                // An induced cycle is 2-regular and connected.
                if h.connected_components() == 1 && (0..h.vertex_count()).all(|v| h.degree(v) == 2)
                {
                    return true;
                }
            }
            false
        }

        for g in all_graphs(5) {
            assert_eq!(g.is_chordal(), !has_chordless_cycle(&g));
        }
    }

    #[test]
    fn degree_vector_sums() {
        for g in all_graphs(5) {
            let d = g.degree_vector();
            assert_eq!(d.counts().iter().sum::<usize>(), 5);
            assert_eq!(d.degree_sum(), 2 * g.edge_count());
        }
    }

    #[test]
    fn degree_vector_validation() {
        assert!(DegreeVector::from_counts(vec![0, 2, 2, 0]).is_ok());
        assert!(DegreeVector::from_counts(vec![1, 2, 2, 0]).is_err());
    }

    #[test]
    fn multigraph_edges_keep_order_and_multiplicity() {
        let mut g = MultiGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        g.add_edge(2, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(g.degree(1), 3);
        g.remove_edge(0, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(matches!(
            g.remove_edge(0, 2),
            Err(Error::EdgeNotPresent(0, 2))
        ));
        assert!(matches!(g.add_edge(2, 2), Err(Error::LoopEdge(2))));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        // Multisets of size <= 3 over the 3 pairs of a triangle: C(3+k-1, k).
        assert_eq!(all_multigraphs(3, 3).len(), 1 + 3 + 6 + 10);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(n: usize) -> impl Strategy<Value = Graph> {
            let bits = n * (n - 1) / 2;
            (0u64..(1u64 << bits)).prop_map(move |mask| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .collect();
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
        }

        proptest! {
            #[test]
            fn complement_is_involutive(g in arb_graph(7)) {
                prop_assert_eq!(g.complement().complement(), g);
            }

            #[test]
            fn degree_vector_invariants(g in arb_graph(8)) {
                let d = g.degree_vector();
                prop_assert_eq!(d.counts().iter().sum::<usize>(), 8);
                prop_assert_eq!(d.degree_sum(), 2 * g.edge_count());
            }
        }
    }
}
