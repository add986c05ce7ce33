//! Simple graphs, multigraphs, and structural predicates.
//!
//! Vertices are dense 0-based ids. [`SimpleGraph`] is immutable after
//! construction; edit operations return new graphs.

use crate::bits::BitSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0},{0}) rejected in simple graph")]
    RejectedLoop(usize),
    #[error("vertex {v} out of range for graph of order {n}")]
    BadVertex { v: usize, n: usize },
    #[error("malformed graph6: {0}")]
    BadGraph6(String),
    #[error("malformed multigraph text: {0}")]
    BadMultigraphText(String),
    #[error("graph too large: order {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BitSet>,
    m: usize,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; duplicate pairs are merged.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::BadVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::BadVertex { v, n });
            }
            if u == v {
                return Err(GraphError::RejectedLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(|a| a.count()).sum::<usize>() / 2;
        Ok(SimpleGraph { n, adj, m })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph::build(n, &[]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Returns a copy with edge (u,v) added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        SimpleGraph::build(self.n, &edges)
    }

    /// Returns the graph with vertex `v` deleted, remaining vertices relabeled.
    pub fn without_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        induced_subgraph(self, &keep).unwrap()
    }

    /// Non-edges as ordered pairs (u, v) with u < v.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        SimpleGraph::build(self.n, &self.non_edges()).unwrap()
    }

    /// Connected component memberships (component id per vertex, 0-based).
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = next;
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, m={}, {:?})", self.n, self.m, self.edges())
    }
}

/// Builds a simple graph, rejecting loops and out-of-range ids.
pub fn build_simple(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph, GraphError> {
    SimpleGraph::build(n, edges)
}

/// Cartesian product: (u1,u2) ~ (v1,v2) iff one coordinate equal, other adjacent.
/// Vertex (i, j) gets id `i * h.n() + j`.
pub fn cartesian_product(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let n = g.n() * h.n();
    let id = |i: usize, j: usize| i * h.n() + j;
    let mut edges = Vec::new();
    for i in 0..g.n() {
        for (j, jj) in h.edges().iter().map(|&(a, b)| (a, b)) {
            edges.push((id(i, j), id(i, jj)));
        }
    }
    for j in 0..h.n() {
        for (i, ii) in g.edges().iter().map(|&(a, b)| (a, b)) {
            edges.push((id(i, j), id(ii, j)));
        }
    }
    SimpleGraph::build(n, &edges).unwrap()
}

/// Induced subgraph on `vs`, relabeled 0..|vs|-1 preserving relative order.
pub fn induced_subgraph(g: &SimpleGraph, vs: &[usize]) -> Result<SimpleGraph, GraphError> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        if v >= g.n() {
            return Err(GraphError::BadVertex { v, n: g.n() });
        }
    }
    let mut idx = vec![usize::MAX; g.n()];
    for (i, &v) in sorted.iter().enumerate() {
        idx[v] = i;
    }
    let mut edges = Vec::new();
    for &u in &sorted {
        for w in g.neighbors(u) {
            if w > u && idx[w] != usize::MAX {
                edges.push((idx[u], idx[w]));
            }
        }
    }
    SimpleGraph::build(sorted.len(), &edges)
}

/// An undirected multigraph: parallel edges and loops allowed.
/// Edge ids are dense 0..m-1 in insertion order; a loop contributes 2 to its
/// vertex's degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::BadVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::BadVertex { v, n });
            }
        }
        Ok(MultiGraph {
            n,
            edges: edges.to_vec(),
        })
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        MultiGraph {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Ids of edges incident to v, ascending (a loop appears once).
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].0 == v || self.edges[e].1 == v)
            .collect()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        seen.insert(0);
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.count() == self.n
    }

    /// Collapses to a simple graph; errors if a loop or parallel edge remains.
    pub fn to_simple(&self) -> Result<SimpleGraph, GraphError> {
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::RejectedLoop(u));
            }
            for &(a, b) in &self.edges[..i] {
                if (a, b) == (u, v) || (a, b) == (v, u) {
                    return Err(GraphError::BadMultigraphText(format!(
                        "parallel edge ({u},{v}) cannot collapse to simple"
                    )));
                }
            }
        }
        SimpleGraph::build(self.n, &self.edges)
    }
}

/// Builds a multigraph; loops and repeats allowed, ids in input order.
pub fn build_multigraph(n: usize, edges: &[(usize, usize)]) -> Result<MultiGraph, GraphError> {
    MultiGraph::build(n, edges)
}

/// Structural summary of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    pub two_connected: bool,
    pub components: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `None` means acyclic (girth ∞).
    pub girth: Option<usize>,
    pub claw_free: bool,
    pub bipartite: bool,
    /// A 2-colouring (side per vertex) when bipartite.
    pub two_colouring: Option<Vec<u8>>,
}

/// Computes connectivity, degrees, girth, claw-freeness and bipartiteness.
pub fn structure_report(g: &SimpleGraph) -> StructureReport {
    let components = g.components();
    let connected = g.n() <= 1 || components.iter().all(|&c| c == 0);
    let two_connected = connected && g.n() >= 3 && !has_cut_vertex(g);
    let (bipartite, two_colouring) = bipartite_colouring(g);
    StructureReport {
        connected,
        two_connected,
        components,
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        girth: girth(g),
        claw_free: is_claw_free(g),
        bipartite,
        two_colouring,
    }
}

fn has_cut_vertex(g: &SimpleGraph) -> bool {
    // DFS lowpoint articulation check.
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    // iterative DFS with explicit stack of (v, parent, neighbor iterator index)
    let neigh: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < neigh[v].len() {
                let w = neigh[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        return true;
                    }
                }
            }
        }
        if root_children > 1 {
            return true;
        }
    }
    false
}

/// Girth via BFS from every vertex; `None` for acyclic graphs.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut par = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = std::collections::VecDeque::new();
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else if par[u] != w {
                    // non-tree edge closes a cycle through s of length ≤ d(u)+d(w)+1
                    let c = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| c < b) {
                        best = Some(c);
                    }
                }
            }
        }
    }
    best
}

/// Claw check: a vertex of degree ≥ 3 with three pairwise nonadjacent neighbors.
pub fn is_claw_free(g: &SimpleGraph) -> bool {
    for v in 0..g.n() {
        if g.degree(v) < 3 {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(v).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn bipartite_colouring(g: &SimpleGraph) -> (bool, Option<Vec<u8>>) {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = std::collections::VecDeque::new();
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    q.push_back(w);
                } else if side[w] == side[u] {
                    return (false, None);
                }
            }
        }
    }
    (true, Some(side))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> SimpleGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        SimpleGraph::build(n, &e).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::build(n, &e).unwrap()
    }

    fn path(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        SimpleGraph::build(n, &e).unwrap()
    }

    pub(crate) fn petersen() -> SimpleGraph {
        SimpleGraph::build(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn build_k4() {
        let g = k(4);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn build_p3() {
        let g = SimpleGraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_loop() {
        assert_eq!(
            SimpleGraph::build(4, &[(0, 0)]).unwrap_err(),
            GraphError::RejectedLoop(0)
        );
    }

    #[test]
    fn rejects_bad_vertex() {
        assert!(matches!(
            SimpleGraph::build(3, &[(0, 3)]).unwrap_err(),
            GraphError::BadVertex { v: 3, n: 3 }
        ));
    }

    #[test]
    fn dedups_edges() {
        let g = SimpleGraph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn product_c3_k2() {
        let g = cartesian_product(&cycle(3), &k(2));
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 9);
        assert!((0..6).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn product_c4_k2_cubic() {
        let g = cartesian_product(&cycle(4), &k(2));
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!((0..8).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn product_identity_factor() {
        let g = cartesian_product(&k(1), &petersen());
        assert_eq!((g.n(), g.m()), (10, 15));
    }

    #[test]
    fn induced_k3_from_k4() {
        let h = induced_subgraph(&k(4), &[0, 1, 2]).unwrap();
        assert_eq!((h.n(), h.m()), (3, 3));
    }

    #[test]
    fn induced_edgeless() {
        let h = induced_subgraph(&path(5), &[0, 2, 4]).unwrap();
        assert_eq!((h.n(), h.m()), (3, 0));
    }

    #[test]
    fn induced_identity() {
        let g = petersen();
        let vs: Vec<usize> = (0..10).collect();
        assert_eq!(induced_subgraph(&g, &vs).unwrap(), g);
    }

    #[test]
    fn report_petersen() {
        let r = structure_report(&petersen());
        assert_eq!(r.girth, Some(5));
        assert_eq!((r.min_degree, r.max_degree), (3, 3));
        assert!(!r.claw_free);
        assert!(r.two_connected);
        assert!(!r.bipartite);
    }

    #[test]
    fn report_net_claw_free() {
        // K3 on 0,1,2 with leaves 3,4,5
        let net =
            SimpleGraph::build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let r = structure_report(&net);
        assert!(r.claw_free);
        assert_eq!(r.girth, Some(3));
        assert!(!r.two_connected);
    }

    #[test]
    fn report_tree_girth_infinite() {
        let r = structure_report(&path(6));
        assert_eq!(r.girth, None);
        assert!(r.connected && !r.two_connected);
        assert!(r.bipartite);
    }

    #[test]
    fn two_connected_agrees_with_deletion_oracle() {
        // oracle: no single vertex deletion disconnects, and n >= 3
        let cases = [k(4), cycle(5), path(5), petersen(), k(2), k(3)];
        for g in cases {
            let oracle = g.n() >= 3
                && g.is_connected()
                && (0..g.n()).all(|v| g.without_vertex(v).is_connected());
            assert_eq!(structure_report(&g).two_connected, oracle, "{g:?}");
        }
    }

    #[test]
    fn multigraph_basics() {
        let m = MultiGraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(m.degree(0), 2);
        assert_eq!(m.degree(1), 2);
        let l = MultiGraph::build(1, &[(0, 0)]).unwrap();
        assert_eq!(l.degree(0), 2);
        assert!(MultiGraph::build(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn c2_k2_multigraph_cubic() {
        let m = MultiGraph::build(4, &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert!(m.is_cubic());
        assert_eq!(m.m(), 6);
        assert!(m.is_connected());
        assert!(m.to_simple().is_err());
    }

    #[test]
    fn sum_degrees_is_twice_edges() {
        let g = petersen();
        let s: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(s, 2 * g.m());
    }
}
