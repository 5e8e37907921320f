//! Explicit graphs for every unigraph family.

use crate::degseq::RelativeTag;
use crate::dist::UnigraphKind;
use crate::error::{invalid, Result};
use crate::graph::{Graph, SplitGraph};

/// A family member: split kinds carry their KS-partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Split(SplitGraph),
    Plain(Graph),
}

impl Realization {
    pub fn graph(&self) -> &Graph {
        match self {
            Realization::Split(sg) => sg.graph(),
            Realization::Plain(g) => g,
        }
    }

    pub fn into_graph(self) -> Graph {
        match self {
            Realization::Split(sg) => sg.into_graph(),
            Realization::Plain(g) => g,
        }
    }

    pub fn as_split(&self) -> Option<&SplitGraph> {
        match self {
            Realization::Split(sg) => Some(sg),
            Realization::Plain(_) => None,
        }
    }

    /// Applies a relative. Plain graphs only have the identity and the
    /// complement.
    pub fn relative(&self, tag: RelativeTag) -> Result<Realization> {
        Ok(match (self, tag) {
            (_, RelativeTag::Identity) => self.clone(),
            (Realization::Split(sg), RelativeTag::Complement) => Realization::Split(sg.complement()),
            (Realization::Split(sg), RelativeTag::Inverse) => Realization::Split(sg.inverse()),
            (Realization::Split(sg), RelativeTag::ComplementInverse) => {
                Realization::Split(sg.inverse().complement())
            }
            (Realization::Plain(g), RelativeTag::Complement) => Realization::Plain(g.complement()),
            (Realization::Plain(_), tag) => {
                return Err(invalid(format!("{tag} is only defined for split graphs")))
            }
        })
    }
}

/// Stars `K_{1,p}` with pairwise adjacent centers: `q` stars for every
/// `(p, q)` in `stars`. Centers come first, in input order; `q = 1` is
/// allowed so this also serves as a building block.
pub fn star_clique(stars: &[(u64, u64)]) -> Result<SplitGraph> {
    if stars.iter().any(|&(p, q)| p == 0 || q == 0) || stars.is_empty() {
        return Err(invalid("stars need at least one leaf and one copy"));
    }
    let centers: usize = stars.iter().map(|&(_, q)| q as usize).sum();
    let leaves: usize = stars.iter().map(|&(p, q)| (p * q) as usize).sum();
    let mut g = Graph::empty(centers + leaves);
    for u in 0..centers {
        for v in u + 1..centers {
            g.add_edge(u, v);
        }
    }
    let mut center = 0;
    let mut leaf = centers;
    for &(p, q) in stars {
        for _ in 0..q {
            for _ in 0..p {
                g.add_edge(center, leaf);
                leaf += 1;
            }
            center += 1;
        }
    }
    SplitGraph::new(g, (0..centers).collect(), (centers..centers + leaves).collect())
}

fn s3_graph(p: u64, q1: u64, q2: u64) -> Result<SplitGraph> {
    let base = star_clique(&[(p, q1), (p + 1, q2)])?;
    let mut g = base.graph().clone();
    let e = g.add_vertex();
    for c in 0..q1 as usize {
        g.add_edge(e, c);
    }
    let mut stable = base.stable().to_vec();
    stable.push(e);
    SplitGraph::new(g, base.clique().to_vec(), stable)
}

/// Builds the family member `kind` after validating its parameters.
pub fn make_family(kind: &UnigraphKind) -> Result<Realization> {
    use UnigraphKind::*;
    kind.validate()?;
    let plain = |n: usize, edges: Vec<(usize, usize)>| Graph::from_edges(n, &edges).map(Realization::Plain);
    match *kind {
        C5 => plain(5, (0..5).map(|i| (i, (i + 1) % 5)).collect()),
        MK2 { m } => plain(2 * m as usize, (0..m as usize).map(|i| (2 * i, 2 * i + 1)).collect()),
        U2 { m, l } => {
            let (m, l) = (m as usize, l as usize);
            let hub = 2 * m;
            let mut edges: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
            edges.extend((1..=l).map(|j| (hub, hub + j)));
            plain(2 * m + l + 1, edges)
        }
        U3 { m } => {
            let m = m as usize;
            let hub = 0;
            let mut edges = Vec::new();
            for i in 0..m {
                let (a, b) = (1 + 2 * i, 2 + 2 * i);
                edges.extend([(a, b), (hub, a), (hub, b)]);
            }
            let (x, y, z) = (2 * m + 1, 2 * m + 2, 2 * m + 3);
            edges.extend([(x, y), (y, z), (hub, x), (hub, z)]);
            plain(2 * m + 4, edges)
        }
        SingleVertex => Ok(Realization::Plain(Graph::empty(1))),
        TrivialK => Ok(Realization::Split(SplitGraph::trivial_k())),
        TrivialS => Ok(Realization::Split(SplitGraph::trivial_s())),
        KComplete { size } => {
            let n = size as usize;
            SplitGraph::new(Graph::complete(n), (0..n).collect(), Vec::new()).map(Realization::Split)
        }
        SIsolated { size } => {
            let n = size as usize;
            SplitGraph::new(Graph::empty(n), Vec::new(), (0..n).collect()).map(Realization::Split)
        }
        S { p, q } => star_clique(&[(p, q)]).map(Realization::Split),
        S2 { ref pairs } => star_clique(pairs).map(Realization::Split),
        S3 { p, q1, q2 } => s3_graph(p, q1, q2).map(Realization::Split),
        S4 { p, q } => {
            let base = s3_graph(p, 2, q)?;
            let mut g = base.graph().clone();
            let e = g.vertex_count() - 1;
            let f = g.add_vertex();
            for v in 0..f {
                if v != e {
                    g.add_edge(f, v);
                }
            }
            let mut clique = base.clique().to_vec();
            clique.push(f);
            SplitGraph::new(g, clique, base.stable().to_vec()).map(Realization::Split)
        }
    }
}

/// `make_family(kind)` with a relative applied.
pub fn realize(kind: &UnigraphKind, relative: RelativeTag) -> Result<Realization> {
    make_family(kind)?.relative(relative)
}

/// Every family member with at most `max_vertices` vertices, excluding the
/// compaction blocks and single vertices.
pub fn small_kinds(max_vertices: u64) -> Vec<UnigraphKind> {
    use UnigraphKind::*;
    let n = max_vertices;
    let mut out = vec![C5];
    for m in 2..=n / 2 {
        out.push(MK2 { m });
    }
    for m in 1..=n {
        for l in 2..=n {
            out.push(U2 { m, l });
        }
        out.push(U3 { m });
    }
    for p in 1..=n {
        for q in 2..=n {
            out.push(S { p, q });
        }
        for q1 in 2..=n {
            for q2 in 1..=n {
                out.push(S3 { p, q1, q2 });
            }
        }
        for q in 1..=n {
            out.push(S4 { p, q });
        }
    }
    for p1 in 2..=n {
        for p2 in 1..p1 {
            for q1 in 1..=n {
                for q2 in 1..=n {
                    out.push(S2 { pairs: vec![(p1, q1), (p2, q2)] });
                    for p3 in 1..p2 {
                        out.push(S2 { pairs: vec![(p1, q1), (p2, q2), (p3, 1)] });
                    }
                }
            }
        }
    }
    out.retain(|k| k.validate().is_ok() && k.vertex_count() <= n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::Component;

    fn check_formula(kind: &UnigraphKind, indecomposable: bool) {
        let r = make_family(kind).unwrap();
        match (&r, kind.degree_sequence()) {
            (Realization::Split(sg), Component::Split(expected)) => {
                assert_eq!(sg.paired_degree_sequence(), expected, "{kind}");
                if indecomposable {
                    assert!(sg.paired_degree_sequence().swing_info().is_balanced(), "{kind}");
                }
            }
            (Realization::Plain(g), Component::Tail(expected)) => assert_eq!(g.degree_sequence(), expected, "{kind}"),
            _ => panic!("split/plain mismatch for {kind}"),
        }
    }

    #[test]
    fn table_examples() {
        let s13 = make_family(&UnigraphKind::S { p: 1, q: 3 }).unwrap();
        assert_eq!(s13.graph().vertex_count(), 6);
        assert_eq!(s13.as_split().unwrap().paired_degree_sequence().to_string(), "3^3;1^3");

        let u3 = make_family(&UnigraphKind::U3 { m: 2 }).unwrap();
        assert_eq!(u3.graph().degree_sequence().to_string(), "6,2^7");

        let s4 = make_family(&UnigraphKind::S4 { p: 1, q: 1 }).unwrap();
        assert_eq!(s4.graph().vertex_count(), 9);
        assert_eq!(s4.as_split().unwrap().paired_degree_sequence().to_string(), "7,5^3;2^5");

        let s3 = make_family(&UnigraphKind::S3 { p: 1, q1: 3, q2: 2 }).unwrap();
        assert_eq!(s3.graph().degree_sequence().to_string(), "6^5,3,1^7");
    }

    #[test]
    fn every_small_kind_matches_its_formula() {
        let kinds = small_kinds(12);
        assert!(kinds.len() > 50);
        for kind in &kinds {
            check_formula(kind, true);
        }
        for kind in [
            UnigraphKind::KComplete { size: 3 },
            UnigraphKind::SIsolated { size: 3 },
            UnigraphKind::TrivialK,
            UnigraphKind::TrivialS,
        ] {
            check_formula(&kind, false);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_family(&UnigraphKind::S { p: 2, q: 1 }).is_err());
        assert!(make_family(&UnigraphKind::MK2 { m: 1 }).is_err());
        assert!(star_clique(&[(2, 1)]).is_ok());
        assert!(star_clique(&[(0, 1)]).is_err());
    }

    #[test]
    fn relatives_match_sequence_relatives() {
        let kind = UnigraphKind::S3 { p: 1, q1: 2, q2: 1 };
        let base = kind.degree_sequence();
        let paired = base.as_split().unwrap();
        for (tag, expected) in paired.relatives().iter() {
            let r = realize(&kind, tag).unwrap();
            assert_eq!(&r.as_split().unwrap().paired_degree_sequence(), expected, "{tag}");
        }
        assert!(realize(&UnigraphKind::C5, RelativeTag::Inverse).is_err());
    }
}
