//! Brute-force ground truth for small graphs.
//!
//! Automorphisms and isomorphisms are found by backtracking over vertex
//! images, restricted to classes of a stable color refinement. Distinguishing
//! labelings are searched in restricted-growth form (colors are introduced in
//! order), pruning a partial labeling as soon as some non-trivial automorphism
//! preserves its colors while fixing every unlabeled vertex.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::decompose::GoodPair;
use crate::degseq::DegreeSequence;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// A vertex bijection `v -> mapping[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &v in &mapping {
            if v >= mapping.len() || std::mem::replace(&mut seen[v], true) {
                return Err(invalid("not a permutation"));
            }
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { mapping: (0..n).collect() }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation { mapping: self.mapping.iter().map(|&v| next.mapping[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { mapping: inv }
    }

    /// Whether the permutation maps edges onto edges.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.mapping.len() == g.vertex_count() && g.edges().all(|(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mapping.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A vertex coloring with colors `1..=color_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    colors: Vec<u64>,
    color_count: u64,
}

impl Labeling {
    pub fn new(colors: Vec<u64>, color_count: u64) -> Result<Self> {
        if colors.iter().any(|&c| c == 0 || c > color_count) {
            return Err(invalid(format!("colors must lie in 1..={color_count}")));
        }
        Ok(Labeling { colors, color_count })
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color_count(&self) -> u64 {
        self.color_count
    }
}

/// Stable refinement of `initial`: vertices end in the same class iff no
/// round of "color plus multiset of neighbor colors" separates them. Class
/// ids are canonical, so refining a disjoint union makes the halves
/// comparable.
fn refine(g: &Graph, initial: &[u64]) -> Vec<usize> {
    let relabel = |keys: &[(u64, Vec<usize>)]| -> (Vec<usize>, usize) {
        let mut sorted: Vec<&(u64, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let ids = keys.iter().map(|k| sorted.binary_search(&k).expect("present")).collect();
        (ids, sorted.len())
    };
    let keys: Vec<(u64, Vec<usize>)> = initial.iter().map(|&c| (c, Vec::new())).collect();
    let (mut colors, mut classes) = relabel(&keys);
    loop {
        let keys: Vec<(u64, Vec<usize>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v] as u64, nb)
            })
            .collect();
        let (next, count) = relabel(&keys);
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Vertices ordered so each one has as many already-ordered neighbors as
/// possible, small classes first.
fn search_order(g: &Graph, classes: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut size = BTreeMap::new();
    for &c in classes {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(size[&classes[v]]), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}

/// Backtracking search for edge-preserving bijections `g -> h` that respect
/// the given classes.
struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    class_g: &'a [usize],
    order: Vec<usize>,
    buckets: BTreeMap<usize, Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, class_g: &'a [usize], class_h: &[usize]) -> Self {
        let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (w, &c) in class_h.iter().enumerate() {
            buckets.entry(c).or_default().push(w);
        }
        Matcher {
            g,
            h,
            class_g,
            order: search_order(g, class_g),
            buckets,
            map: vec![usize::MAX; g.vertex_count()],
            used: vec![false; h.vertex_count()],
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        self.extend(0, visit)
    }

    fn extend(&mut self, k: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if k == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[k];
        let Some(candidates) = self.buckets.get(&self.class_g[v]).cloned() else {
            return ControlFlow::Continue(());
        };
        for w in candidates {
            if self.used[w] {
                continue;
            }
            let consistent = self.order[..k]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            let flow = self.extend(k + 1, visit);
            self.used[w] = false;
            self.map[v] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Whether some non-identity automorphism preserves `colors`.
fn has_nontrivial_automorphism(g: &Graph, colors: &[u64]) -> bool {
    let classes = refine(g, colors);
    let distinct = {
        let mut c = classes.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    if distinct == g.vertex_count() {
        return false;
    }
    let mut found = false;
    let _ = Matcher::new(g, g, &classes, &classes).run(&mut |map| {
        if map.iter().enumerate().any(|(i, &v)| i != v) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Whether no non-identity automorphism of `g` preserves `phi`.
pub fn is_distinguishing(g: &Graph, phi: &Labeling) -> bool {
    assert_eq!(phi.colors.len(), g.vertex_count(), "labeling length must match the graph");
    !has_nontrivial_automorphism(g, &phi.colors)
}

/// Exhaustive list of all good pairs `(p, q)` of `seq`, in lexicographic
/// order.
pub fn brute_good_pairs(seq: &DegreeSequence) -> Vec<GoodPair> {
    let d = seq.expand();
    let m = d.len() as u64;
    let mut prefix = vec![0u64; d.len() + 1];
    for (i, &x) in d.iter().enumerate() {
        prefix[i + 1] = prefix[i] + x;
    }
    let total = prefix[d.len()];
    let mut out = Vec::new();
    for p in 0..m {
        for q in 0..m - p {
            if p + q == 0 {
                continue;
            }
            let front = prefix[p as usize];
            let back = total - prefix[(m - q) as usize];
            if front == p * (m - q - 1) + back {
                out.push(GoodPair { p, q });
            }
        }
    }
    out
}

/// Every labeled graph on vertices `0..n` whose vertex `i` has degree
/// `seq.expand()[i]`.
pub fn realizations(seq: &DegreeSequence) -> Vec<Graph> {
    fn go(i: usize, j: usize, residual: &mut [u64], g: &mut Graph, out: &mut Vec<Graph>) {
        let n = residual.len();
        if i == n {
            out.push(g.clone());
            return;
        }
        if j == n {
            if residual[i] == 0 {
                go(i + 1, i + 2, residual, g, out);
            }
            return;
        }
        if residual[i] > (n - j) as u64 {
            return;
        }
        if residual[i] > 0 && residual[j] > 0 {
            residual[i] -= 1;
            residual[j] -= 1;
            g.add_edge(i, j);
            go(i, j + 1, residual, g, out);
            g.remove_edge(i, j);
            residual[i] += 1;
            residual[j] += 1;
        }
        go(i, j + 1, residual, g, out);
    }
    let mut residual = seq.expand();
    let n = residual.len();
    let mut out = Vec::new();
    go(0, 1, &mut residual, &mut Graph::empty(n), &mut out);
    out
}

/// All non-increasing graphical sequences on `n` vertices (Erdős–Gallai).
pub fn graphical_sequences(n: usize) -> Vec<DegreeSequence> {
    fn graphical(d: &[u64]) -> bool {
        let n = d.len();
        if d.iter().sum::<u64>() % 2 == 1 {
            return false;
        }
        let mut left = 0;
        for k in 1..=n {
            left += d[k - 1];
            let right = (k * (k - 1)) as u64 + d[k..].iter().map(|&x| x.min(k as u64)).sum::<u64>();
            if left > right {
                return false;
            }
        }
        true
    }
    fn go(n: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            if graphical(cur) {
                out.push(DegreeSequence::from_descending(cur.iter().copied()));
            }
            return;
        }
        for d in (0..=max).rev() {
            cur.push(d);
            go(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(n, n as u64 - 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Brute-force checks bounded by a vertex cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: 10 }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(invalid("cap must be at least 1"));
        }
        Ok(Oracle { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::TooLarge { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn for_each_automorphism(&self, g: &Graph, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> Result<()> {
        self.check(g.vertex_count())?;
        let classes = refine(g, &vec![0; g.vertex_count()]);
        let _ = Matcher::new(g, g, &classes, &classes).run(visit);
        Ok(())
    }

    /// The full automorphism group, sorted, identity first.
    pub fn automorphisms(&self, g: &Graph) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        self.for_each_automorphism(g, &mut |map| {
            out.push(Permutation { mapping: map.to_vec() });
            ControlFlow::Continue(())
        })?;
        out.sort();
        Ok(out)
    }

    pub fn automorphism_count(&self, g: &Graph) -> Result<u64> {
        let mut count = 0u64;
        self.for_each_automorphism(g, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    /// Walks labelings with at most `c` colors in restricted-growth form,
    /// calling `leaf` with the number of colors used by every distinguishing
    /// one.
    fn search_labelings(&self, g: &Graph, c: u64, leaf: &mut dyn FnMut(u64) -> ControlFlow<()>) {
        let n = g.vertex_count();
        let classes = refine(g, &vec![0; n]);
        // Orbit-mates are adjacent in this order, which triggers pruning early.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (classes[v], v));

        fn go(
            g: &Graph,
            order: &[usize],
            k: usize,
            c: u64,
            used: u64,
            colors: &mut Vec<u64>,
            leaf: &mut dyn FnMut(u64) -> ControlFlow<()>,
        ) -> ControlFlow<()> {
            if k == order.len() {
                return leaf(used);
            }
            let v = order[k];
            for color in 1..=(used + 1).min(c) {
                colors[v] = color;
                if !has_nontrivial_automorphism(g, colors) {
                    go(g, order, k + 1, c, used.max(color), colors, leaf)?;
                }
            }
            colors[v] = c + 1 + v as u64;
            ControlFlow::Continue(())
        }

        // Unlabeled vertices carry unique colors, forcing automorphisms to fix them.
        let mut colors: Vec<u64> = (0..n as u64).map(|v| c + 1 + v).collect();
        let _ = go(g, &order, 0, c, 0, &mut colors, leaf);
    }

    /// Smallest `c` admitting a distinguishing `c`-labeling.
    pub fn brute_dist_number(&self, g: &Graph) -> Result<u64> {
        let n = g.vertex_count();
        self.check(n)?;
        for c in 1..=n as u64 {
            let mut found = false;
            self.search_labelings(g, c, &mut |_| {
                found = true;
                ControlFlow::Break(())
            });
            if found {
                return Ok(c);
            }
        }
        // Only reached for the vertexless graph.
        Ok(1)
    }

    /// Number of distinguishing `c`-labelings up to automorphism.
    pub fn count_inequivalent(&self, g: &Graph, c: u64) -> Result<u64> {
        self.check(g.vertex_count())?;
        self.check(c as usize)?;
        let mut by_used: BTreeMap<u64, u64> = BTreeMap::new();
        self.search_labelings(g, c, &mut |used| {
            *by_used.entry(used).or_insert(0) += 1;
            ControlFlow::Continue(())
        });
        // Each restricted-growth labeling with k colors stands for
        // c (c-1) ... (c-k+1) actual labelings.
        let total: u64 = by_used.iter().map(|(&k, &count)| count * (c - k + 1..=c).product::<u64>()).sum();
        let aut = self.automorphism_count(g)?;
        if !total.is_multiple_of(aut) {
            return Err(Error::Internal(format!("{total} distinguishing labelings not divisible by |Aut| = {aut}")));
        }
        Ok(total / aut)
    }

    /// A clique/stable-set bipartition of the vertices, if one exists.
    pub fn brute_is_split(&self, g: &Graph) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let n = g.vertex_count();
        self.check(n)?;
        for mask in 0u64..(1 << n) {
            let (clique, stable): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| mask >> v & 1 == 1);
            if g.is_clique(&clique) && g.is_stable(&stable) {
                return Ok(Some((clique, stable)));
            }
        }
        Ok(None)
    }

    /// An isomorphism `g -> h`, if one exists.
    pub fn isomorphism(&self, g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
        self.check(g.vertex_count())?;
        self.check(h.vertex_count())?;
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            return Ok(None);
        }
        let n = g.vertex_count();
        let classes = refine(&g.disjoint_union(h), &vec![0; 2 * n]);
        let (cg, ch) = classes.split_at(n);
        let (mut sg, mut sh) = (cg.to_vec(), ch.to_vec());
        sg.sort_unstable();
        sh.sort_unstable();
        if sg != sh {
            return Ok(None);
        }
        let mut found = None;
        let _ = Matcher::new(g, h, cg, ch).run(&mut |map| {
            found = Some(Permutation { mapping: map.to_vec() });
            ControlFlow::Break(())
        });
        Ok(found)
    }

    pub fn brute_isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool> {
        Ok(self.isomorphism(g, h)?.is_some())
    }

    /// Realizations of `seq` up to isomorphism, stopping once `limit` classes
    /// are found.
    pub fn non_isomorphic_realizations(&self, seq: &DegreeSequence, limit: usize) -> Result<Vec<Graph>> {
        self.check(seq.vertex_count() as usize)?;
        let mut reps: Vec<Graph> = Vec::new();
        for g in realizations(seq) {
            let mut new = true;
            for r in &reps {
                if self.brute_isomorphic(r, &g)? {
                    new = false;
                    break;
                }
            }
            if new {
                reps.push(g);
                if reps.len() >= limit {
                    break;
                }
            }
        }
        Ok(reps)
    }

    /// Whether every realization of `seq` is isomorphic to every other.
    pub fn brute_is_unigraph(&self, seq: &DegreeSequence) -> Result<bool> {
        Ok(self.non_isomorphic_realizations(seq, 2)?.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn automorphism_groups() {
        let o = Oracle::default();
        assert_eq!(o.automorphisms(&cycle(5)).unwrap().len(), 10);
        assert_eq!(o.automorphisms(&Graph::complete(3)).unwrap().len(), 6);
        let p4 = o.automorphisms(&path(4)).unwrap();
        assert_eq!(p4.len(), 2);
        assert!(p4[0].is_identity());
        assert_eq!(p4[1].mapping(), &[3, 2, 1, 0]);
        assert_eq!(o.automorphism_count(&Graph::empty(6)).unwrap(), 720);
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::new(4).unwrap();
        assert_eq!(o.automorphisms(&cycle(5)), Err(Error::TooLarge { n: 5, cap: 4 }));
        assert!(o.brute_dist_number(&cycle(5)).is_err());
        assert!(o.count_inequivalent(&path(3), 5).is_err());
    }

    #[test]
    fn distinguishing_examples() {
        let p3 = path(3);
        for center in 1..=2 {
            assert!(is_distinguishing(&p3, &Labeling::new(vec![1, center, 2], 2).unwrap()));
        }
        assert!(!is_distinguishing(&Graph::complete(2), &Labeling::new(vec![1, 1], 1).unwrap()));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_distinguishing(&two_k2, &Labeling::new(vec![1, 2, 1, 2], 2).unwrap()));
        assert!(Labeling::new(vec![0, 1], 2).is_err());
    }

    #[test]
    fn dist_numbers() {
        let o = Oracle::default();
        for n in 1..=6 {
            assert_eq!(o.brute_dist_number(&Graph::complete(n)).unwrap(), n as u64);
        }
        assert_eq!(o.brute_dist_number(&cycle(5)).unwrap(), 3);
        assert_eq!(o.brute_dist_number(&path(4)).unwrap(), 2);
        assert_eq!(o.brute_dist_number(&cycle(4)).unwrap(), 3);
        assert_eq!(o.brute_dist_number(&cycle(6)).unwrap(), 2);
    }

    #[test]
    fn counting() {
        let o = Oracle::default();
        for c in 1..=6u64 {
            assert_eq!(o.count_inequivalent(&Graph::complete(2), c).unwrap(), c * (c.saturating_sub(1)) / 2);
        }
        assert_eq!(o.count_inequivalent(&path(3), 3).unwrap(), 9);
        assert_eq!(o.count_inequivalent(&Graph::empty(1), 1).unwrap(), 1);
    }

    #[test]
    fn split_checks() {
        let o = Oracle::default();
        let (clique, stable) = o.brute_is_split(&path(4)).unwrap().unwrap();
        assert!(path(4).is_clique(&clique) && path(4).is_stable(&stable));
        assert!(o.brute_is_split(&cycle(5)).unwrap().is_none());
        assert!(o.brute_is_split(&Graph::empty(1)).unwrap().is_some());
    }

    #[test]
    fn isomorphism() {
        let o = Oracle::default();
        assert!(o.brute_isomorphic(&cycle(5), &cycle(5).complement()).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!o.brute_isomorphic(&two_k2, &path(4)).unwrap());
        assert!(o.brute_isomorphic(&two_k2.complement(), &cycle(4)).unwrap());
        let g = path(5);
        assert!(o.brute_isomorphic(&g, &g.permuted(&[3, 0, 4, 1, 2])).unwrap());
        assert!(!o.brute_isomorphic(&cycle(6), &cycle(3).disjoint_union(&cycle(3))).unwrap());
    }

    #[test]
    fn good_pairs() {
        let c5 = DegreeSequence::from_pairs(&[(2, 5)]).unwrap();
        assert!(brute_good_pairs(&c5).is_empty());
        let s = DegreeSequence::from_pairs(&[(2, 1), (1, 2), (0, 1)]).unwrap();
        assert!(brute_good_pairs(&s).contains(&GoodPair { p: 0, q: 1 }));
    }

    #[test]
    fn realization_counts() {
        let seq = DegreeSequence::from_pairs(&[(1, 4)]).unwrap();
        assert_eq!(realizations(&seq).len(), 3);
        let o = Oracle::default();
        assert!(o.brute_is_unigraph(&seq).unwrap());
        let ambiguous = DegreeSequence::from_pairs(&[(2, 3), (1, 2)]).unwrap();
        assert_eq!(o.non_isomorphic_realizations(&ambiguous, 10).unwrap().len(), 2);
        assert_eq!(graphical_sequences(3).len(), 4);
    }

    #[test]
    fn permutation_algebra() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.then(&a).mapping(), &[2, 0, 1]);
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
