//! Simple undirected graphs with explicit vertices.
//!
//! Used by the generators and the brute-force oracle; the fast algorithms
//! never need more than degree sequences.

use std::fmt;

use crate::degseq::{runs_from_descending, DegreeSequence, PairedDegreeSequence};
use crate::error::{invalid, Result};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph { adj }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(invalid(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        if u == v {
            return Err(invalid(format!("self-loop at {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(invalid(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// One realization of `seq` by Havel–Hakimi: the vertex with the largest
    /// residual degree is joined to the next largest ones. Vertex `i` gets the
    /// `i`-th largest degree.
    pub fn realize(seq: &DegreeSequence) -> Result<Self> {
        let n = seq.vertex_count() as usize;
        let mut residual: Vec<(u64, usize)> = seq.iter_degrees().zip(0..n).collect();
        let mut g = Graph::empty(n);
        while let Some(&(d, v)) = residual.first() {
            residual.remove(0);
            if d as usize > residual.len() {
                return Err(invalid(format!("{seq} is not graphical")));
            }
            for slot in residual.iter_mut().take(d as usize) {
                if slot.0 == 0 {
                    return Err(invalid(format!("{seq} is not graphical")));
                }
                slot.0 -= 1;
                g.add_edge(v, slot.1);
            }
            residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        }
        Ok(g)
    }

    /// Adds `u-v` unless it is already present.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
            self.adj[v].remove(pos);
        }
    }

    /// Appends a vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Abbreviated degree sequence. Panics on the empty graph.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<u64> = self.adj.iter().map(|a| a.len() as u64).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence::from_descending(degrees)
    }

    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.adj.len());
        let mut adj = vec![Vec::new(); self.adj.len()];
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&u| perm[u]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph { adj }
    }

    /// Disjoint union; `other`'s vertices are shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.adj.len();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&u| u + shift).collect()));
        Graph { adj }
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `vertices` are pairwise non-adjacent.
    pub fn is_stable(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// Edge-list text: vertex count on the first line, then one `u v` per line.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.adj.len())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A split graph with a chosen KS-partition: `clique` induces a complete
/// graph and `stable` an edgeless one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    graph: Graph,
    clique: Vec<usize>,
    stable: Vec<usize>,
}

impl SplitGraph {
    pub fn new(graph: Graph, mut clique: Vec<usize>, mut stable: Vec<usize>) -> Result<Self> {
        clique.sort_unstable();
        stable.sort_unstable();
        let n = graph.vertex_count();
        let mut seen = vec![false; n];
        for &v in clique.iter().chain(&stable) {
            if v >= n {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("vertex {v} is in both parts or listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(invalid("partition does not cover every vertex"));
        }
        if !graph.is_clique(&clique) {
            return Err(invalid("clique side is not a clique"));
        }
        if !graph.is_stable(&stable) {
            return Err(invalid("stable side is not a stable set"));
        }
        Ok(SplitGraph { graph, clique, stable })
    }

    /// A single vertex on the clique side.
    pub fn trivial_k() -> Self {
        SplitGraph { graph: Graph::empty(1), clique: vec![0], stable: Vec::new() }
    }

    /// A single vertex on the stable side.
    pub fn trivial_s() -> Self {
        SplitGraph { graph: Graph::empty(1), clique: Vec::new(), stable: vec![0] }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn stable(&self) -> &[usize] {
        &self.stable
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn paired_degree_sequence(&self) -> PairedDegreeSequence {
        let part = |vs: &[usize]| {
            let mut d: Vec<u64> = vs.iter().map(|&v| self.graph.degree(v) as u64).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            runs_from_descending(d)
        };
        PairedDegreeSequence::new(part(&self.clique), part(&self.stable)).expect("valid KS-partition")
    }

    /// `(G-bar, B, A)`.
    pub fn complement(&self) -> SplitGraph {
        SplitGraph {
            graph: self.graph.complement(),
            clique: self.stable.clone(),
            stable: self.clique.clone(),
        }
    }

    /// `(G^I, B, A)`: edges inside `A` are removed and `B` becomes a clique.
    pub fn inverse(&self) -> SplitGraph {
        let mut g = self.graph.clone();
        for (i, &u) in self.clique.iter().enumerate() {
            for &v in &self.clique[i + 1..] {
                g.remove_edge(u, v);
            }
        }
        for (i, &u) in self.stable.iter().enumerate() {
            for &v in &self.stable[i + 1..] {
                g.add_edge(u, v);
            }
        }
        SplitGraph { graph: g, clique: self.stable.clone(), stable: self.clique.clone() }
    }

    /// Composition with another split graph; the result keeps the partition
    /// `(A ∪ C, B ∪ D)`.
    pub fn compose_split(&self, other: &SplitGraph) -> SplitGraph {
        let shift = self.graph.vertex_count();
        let graph = compose(self, &other.graph);
        let clique = self.clique.iter().copied().chain(other.clique.iter().map(|v| v + shift)).collect();
        let stable = self.stable.iter().copied().chain(other.stable.iter().map(|v| v + shift)).collect();
        SplitGraph { graph, clique, stable }
    }
}

/// Inverse of a split graph with respect to its partition.
pub fn split_inverse(sg: &SplitGraph) -> SplitGraph {
    sg.inverse()
}

/// `(G, A, B) ∘ H`: disjoint union plus every edge between `A` and `V(H)`.
/// `sg` keeps its vertex ids and `h`'s ids are shifted past them.
pub fn compose(sg: &SplitGraph, h: &Graph) -> Graph {
    let shift = sg.graph.vertex_count();
    let mut g = sg.graph.disjoint_union(h);
    for &a in &sg.clique {
        for v in 0..h.vertex_count() {
            g.add_edge(a, v + shift);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(cycle(5).degree_sequence().to_string(), "2^5");
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.degree_sequence().to_string(), "1^4");
        assert_eq!(two_k2.complement().degree_sequence().to_string(), "2^4");
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn complement_is_involution() {
        let g = path(5);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn split_partition_validation() {
        let p4 = path(4);
        assert!(SplitGraph::new(p4.clone(), vec![1, 2], vec![0, 3]).is_ok());
        assert!(SplitGraph::new(p4.clone(), vec![0, 1], vec![2, 3]).is_err());
        assert!(SplitGraph::new(p4.clone(), vec![1, 2], vec![0]).is_err());
        assert!(SplitGraph::new(p4, vec![1, 2, 0], vec![0, 3]).is_err());
    }

    #[test]
    fn inverse_examples() {
        let p4 = SplitGraph::new(path(4), vec![1, 2], vec![0, 3]).unwrap();
        let inv = p4.inverse();
        assert_eq!(inv.clique(), &[0, 3]);
        assert_eq!(inv.graph().degree_sequence().to_string(), "2^2,1^2");
        assert_eq!(inv.inverse(), p4);

        let tri = SplitGraph::new(Graph::complete(3), vec![0, 1, 2], vec![]).unwrap();
        let inv = tri.inverse();
        assert_eq!(inv.graph(), &Graph::empty(3));
        assert_eq!(inv.stable(), &[0, 1, 2]);
    }

    #[test]
    fn compose_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(compose(&SplitGraph::trivial_k(), &k2), Graph::complete(3));
        let g = compose(&SplitGraph::trivial_s(), &k2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0), 0);

        let k_block = SplitGraph::new(Graph::complete(2), vec![0, 1], vec![]).unwrap();
        let s_block = SplitGraph::new(Graph::empty(4), vec![], vec![0, 1, 2, 3]).unwrap();
        let g = compose(&k_block, s_block.graph());
        assert_eq!(g.degree_sequence().to_string(), "5^2,2^4");
    }

    #[test]
    fn compose_is_associative() {
        let a = SplitGraph::new(path(4), vec![1, 2], vec![0, 3]).unwrap();
        let b = SplitGraph::trivial_s();
        let c = cycle(5);
        let left = compose(&a.compose_split(&b), &c);
        let right = compose(&a, &compose(&b, &c));
        assert_eq!(left, right);
    }

    #[test]
    fn havel_hakimi() {
        let seq = DegreeSequence::from_pairs(&[(16, 3), (12, 4), (9, 5), (5, 2), (3, 1), (2, 1), (1, 4)]).unwrap();
        assert_eq!(Graph::realize(&seq).unwrap().degree_sequence(), seq);
        let bad = DegreeSequence::from_pairs(&[(3, 2), (1, 2)]).unwrap();
        assert!(Graph::realize(&bad).is_err());
    }

    #[test]
    fn edge_list_text() {
        assert_eq!(path(3).to_string(), "3\n0 1\n1 2\n");
    }
}
