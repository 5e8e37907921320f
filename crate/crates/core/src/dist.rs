//! Recognition of indecomposable unigraphs and their distinguishing numbers.
//!
//! Every component of a compact canonical decomposition is a complete block,
//! an isolated block, or an indecomposable graph. For a unigraph each
//! indecomposable component (or one of its relatives) belongs to a small set
//! of families with closed-form degree sequences, and the distinguishing
//! number of the whole graph is the maximum over its components.
//!
//! Recognition is strict: after reading family parameters off a sequence's
//! shape, the family's degree sequence is regenerated from those parameters
//! and compared exactly. A sequence that matches no family is reported as
//! [`Error::NotUnigraph`].

use std::fmt;

use crate::decompose::{decompose, decompose_compact, Component};
use crate::degseq::{DegreeRun, DegreeSequence, PairedDegreeSequence, RelativeTag, SplitCheck};
use crate::error::{invalid, Error, Result};

/// Families of indecomposable unigraphs plus the blocks produced by compaction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnigraphKind {
    /// The 5-cycle.
    C5,
    /// `m` disjoint edges.
    MK2 { m: u64 },
    /// `mK_2` plus a disjoint star `K_{1,l}`.
    U2 { m: u64, l: u64 },
    /// A hub joined to both ends of `m` disjoint edges and to the ends of a
    /// 3-vertex path.
    U3 { m: u64 },
    /// `K_size` with every vertex on the clique side.
    KComplete { size: u64 },
    /// `size` isolated vertices on the stable side.
    SIsolated { size: u64 },
    TrivialK,
    TrivialS,
    /// An untyped single-vertex `G_0`.
    SingleVertex,
    /// `q` stars `K_{1,p}` with pairwise adjacent centers.
    S { p: u64, q: u64 },
    /// Stars of several sizes, `q_i` stars with `p_i` leaves each, all centers
    /// pairwise adjacent. `p_1 > p_2 > ...`.
    S2 { pairs: Vec<(u64, u64)> },
    /// `S(p, q1)` and `S(p+1, q2)` with all centers adjacent, plus a vertex
    /// joined to the centers of the first part only.
    S3 { p: u64, q1: u64, q2: u64 },
    /// `S3(p, 2, q)` plus a vertex joined to everything except the extra
    /// vertex of `S3`.
    S4 { p: u64, q: u64 },
}

impl UnigraphKind {
    /// Checks the parameter ranges for a standalone indecomposable instance.
    pub fn validate(&self) -> Result<()> {
        use UnigraphKind::*;
        let ok = match self {
            C5 | TrivialK | TrivialS | SingleVertex => true,
            MK2 { m } => *m >= 2,
            U2 { m, l } => *m >= 1 && *l >= 2,
            U3 { m } => *m >= 1,
            KComplete { size } | SIsolated { size } => *size >= 2,
            S { p, q } => *p >= 1 && *q >= 2,
            S2 { pairs } => {
                pairs.len() >= 2
                    && pairs.iter().all(|&(p, q)| p >= 1 && q >= 1)
                    && pairs.windows(2).all(|w| w[0].0 > w[1].0)
            }
            S3 { p, q1, q2 } => *p >= 1 && *q1 >= 2 && *q2 >= 1,
            S4 { p, q } => *p >= 1 && *q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("parameters out of range for {self}")))
        }
    }

    pub fn is_split(&self) -> bool {
        use UnigraphKind::*;
        !matches!(self, C5 | MK2 { .. } | U2 { .. } | U3 { .. } | SingleVertex)
    }

    pub fn vertex_count(&self) -> u64 {
        self.degree_sequence().vertex_count()
    }

    /// The family's degree sequence: paired for split kinds, plain otherwise.
    pub fn degree_sequence(&self) -> Component {
        use UnigraphKind::*;
        let flat = |pairs: &[(u64, u64)]| Component::Tail(DegreeSequence::from_pairs(pairs).expect("family sequence"));
        let paired = |k: Vec<(u64, u64)>, s: Vec<(u64, u64)>| {
            let k = k.into_iter().filter(|r| r.1 > 0).collect::<Vec<_>>();
            let s = s.into_iter().filter(|r| r.1 > 0).collect::<Vec<_>>();
            Component::Split(PairedDegreeSequence::from_pairs(&k, &s).expect("family sequence"))
        };
        match *self {
            C5 => flat(&[(2, 5)]),
            MK2 { m } => flat(&[(1, 2 * m)]),
            U2 { m, l } => flat(&[(l, 1), (1, 2 * m + l)]),
            U3 { m } => flat(&[(2 * m + 2, 1), (2, 2 * m + 3)]),
            SingleVertex => flat(&[(0, 1)]),
            KComplete { size } => Component::Split(PairedDegreeSequence::complete_block(size)),
            SIsolated { size } => Component::Split(PairedDegreeSequence::isolated_block(size)),
            TrivialK => Component::Split(PairedDegreeSequence::trivial_k()),
            TrivialS => Component::Split(PairedDegreeSequence::trivial_s()),
            S { p, q } => paired(vec![(p + q - 1, q)], vec![(1, p * q)]),
            S2 { ref pairs } => {
                let n: u64 = pairs.iter().map(|&(_, q)| q).sum();
                let leaves = pairs.iter().map(|&(p, q)| p * q).sum();
                paired(pairs.iter().map(|&(p, q)| (p + n - 1, q)).collect(), vec![(1, leaves)])
            }
            S3 { p, q1, q2 } => paired(
                vec![(p + q1 + q2, q1 + q2)],
                vec![(q1, 1), (1, p * q1 + (p + 1) * q2)],
            ),
            S4 { p, q } => paired(
                vec![(2 * (p + q + 1) + q * p, 1), (p + q + 3, q + 2)],
                vec![(2, q * p + 2 * p + q + 1)],
            ),
        }
    }

    /// Distinguishing number of the family member.
    pub fn dist_number(&self) -> u64 {
        use UnigraphKind::*;
        let s = |p, q| find_dist_s(p, q).expect("positive star parameters");
        let mk2 = |m| find_dist_mk2(m).expect("positive edge count");
        match *self {
            C5 => 3,
            MK2 { m } => mk2(m),
            U2 { m, l } => mk2(m).max(l),
            U3 { m } => mk2(m),
            KComplete { size } | SIsolated { size } => size,
            TrivialK | TrivialS | SingleVertex => 1,
            S { p, q } => s(p, q),
            S2 { ref pairs } => pairs.iter().map(|&(p, q)| s(p, q)).max().unwrap_or(1),
            S3 { p, q1, q2 } => s(p, q1).max(s(p + 1, q2)),
            S4 { p, q } => s(p, 2).max(s(p + 1, q)),
        }
    }
}

impl fmt::Display for UnigraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use UnigraphKind::*;
        match self {
            C5 => f.write_str("C5"),
            MK2 { m } => write!(f, "mK2(m={m})"),
            U2 { m, l } => write!(f, "U2(m={m},l={l})"),
            U3 { m } => write!(f, "U3(m={m})"),
            KComplete { size } => write!(f, "K({size})"),
            SIsolated { size } => write!(f, "E({size})"),
            TrivialK => f.write_str("K1"),
            TrivialS => f.write_str("S1"),
            SingleVertex => f.write_str("single"),
            S { p, q } => write!(f, "S(p={p},q={q})"),
            S2 { pairs } => {
                f.write_str("S2(")?;
                for (i, (p, q)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}:{q}")?;
                }
                f.write_str(")")
            }
            S3 { p, q1, q2 } => write!(f, "S3(p={p},q1={q1},q2={q2})"),
            S4 { p, q } => write!(f, "S4(p={p},q={q})"),
        }
    }
}

/// A decomposition component matched to a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedComponent {
    pub kind: UnigraphKind,
    /// Which relative of the component is the family member.
    pub relative: RelativeTag,
    pub dist: u64,
    /// The component's own (paired) degree sequence.
    pub component: Component,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnigraphReport {
    /// Compact components, leftmost first.
    pub components: Vec<ClassifiedComponent>,
    pub dist: u64,
}

/// `min{c : C(c, 2) >= m}`, by the incremental recurrence
/// `C(c+1, 2) = C(c, 2) + c`.
pub fn find_dist_mk2(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(invalid("edge count must be positive"));
    }
    let m = u128::from(m);
    let mut curr: u128 = 2;
    let mut val: u128 = 1;
    while val < m {
        curr += 1;
        val += curr - 1;
    }
    Ok(curr as u64)
}

/// Final state of the `D(S(p, q))` search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarSearch {
    /// `min{c : c * C(c, p) >= q}`.
    pub colors: u64,
    /// `colors * C(colors, p)`, exact.
    pub value: u128,
}

/// `D(S(p, q)) = min{c : c * C(c, p) >= q}`.
pub fn find_dist_s(p: u64, q: u64) -> Result<u64> {
    star_search(p, q).map(|s| s.colors)
}

/// Runs the incremental search behind [`find_dist_s`] and returns its final
/// state. Starting from `c = p`, `value = p`, each step uses
/// `(c+1) C(c+1, p) = c C(c, p) * (c+1)^2 / (c (c+1-p))`.
pub fn star_search(p: u64, q: u64) -> Result<StarSearch> {
    if p == 0 || q == 0 {
        return Err(invalid("star parameters must be positive"));
    }
    let p = u128::from(p);
    let q = u128::from(q);
    let mut curr = p;
    let mut val = p;
    while val < q {
        curr += 1;
        // val = c * C(c, p) with c = curr - 1.
        let binom = exact_div(val, curr - 1)?;
        val = exact_div(binom * curr, curr - p)? * curr;
    }
    Ok(StarSearch { colors: curr as u64, value: val })
}

fn exact_div(a: u128, b: u128) -> Result<u128> {
    if !a.is_multiple_of(b) {
        return Err(Error::Internal(format!("{a} is not divisible by {b}")));
    }
    Ok(a / b)
}

type Matcher<T> = fn(&T) -> Option<UnigraphKind>;

fn run_pair(k: &[DegreeRun], s: &[DegreeRun]) -> Option<((u64, u64), (u64, u64))> {
    match (k, s) {
        ([a], [b]) => Some(((a.degree, a.count), (b.degree, b.count))),
        _ => None,
    }
}

fn match_c5(seq: &DegreeSequence) -> Option<UnigraphKind> {
    (seq.runs() == [DegreeRun::new(2, 5)]).then_some(UnigraphKind::C5)
}

fn match_mk2(seq: &DegreeSequence) -> Option<UnigraphKind> {
    match seq.runs() {
        [r] if r.degree == 1 && r.count % 2 == 0 => Some(UnigraphKind::MK2 { m: r.count / 2 }),
        _ => None,
    }
}

fn match_u2(seq: &DegreeSequence) -> Option<UnigraphKind> {
    match seq.runs() {
        [hub, leaves] if hub.count == 1 && leaves.degree == 1 && leaves.count >= hub.degree => {
            let rest = leaves.count - hub.degree;
            (rest % 2 == 0).then_some(UnigraphKind::U2 { m: rest / 2, l: hub.degree })
        }
        _ => None,
    }
}

fn match_u3(seq: &DegreeSequence) -> Option<UnigraphKind> {
    match seq.runs() {
        [hub, rest] if hub.count == 1 && rest.degree == 2 && hub.degree >= 2 && hub.degree % 2 == 0 => {
            Some(UnigraphKind::U3 { m: (hub.degree - 2) / 2 })
        }
        _ => None,
    }
}

const NONSPLIT_FORMS: [Matcher<DegreeSequence>; 4] = [match_c5, match_mk2, match_u2, match_u3];

/// Matches an indecomposable non-split sequence, or its complement, against
/// the non-split families.
pub fn classify_nonsplit(seq: &DegreeSequence) -> Result<ClassifiedComponent> {
    let complement = seq.complement();
    let candidates = [(RelativeTag::Identity, seq), (RelativeTag::Complement, &complement)];
    for (relative, candidate) in candidates {
        for form in NONSPLIT_FORMS {
            let Some(kind) = form(candidate) else { continue };
            if kind.validate().is_err() {
                continue;
            }
            if kind.degree_sequence() == Component::Tail(candidate.clone()) {
                let dist = kind.dist_number();
                return Ok(ClassifiedComponent { kind, relative, dist, component: Component::Tail(seq.clone()) });
            }
        }
    }
    Err(Error::NotUnigraph)
}

fn match_s(p: &PairedDegreeSequence) -> Option<UnigraphKind> {
    let ((_, r1), (d2, r2)) = run_pair(p.k_part(), p.s_part())?;
    (d2 == 1 && r2 % r1 == 0).then_some(UnigraphKind::S { p: r2 / r1, q: r1 })
}

fn match_s2(p: &PairedDegreeSequence) -> Option<UnigraphKind> {
    let k = p.k_part();
    match p.s_part() {
        [leaves] if leaves.degree == 1 && k.len() >= 2 => {
            let n: u64 = k.iter().map(|r| r.count).sum();
            if k.iter().any(|r| r.degree < n) {
                return None;
            }
            let pairs = k.iter().map(|r| (r.degree - n + 1, r.count)).collect();
            Some(UnigraphKind::S2 { pairs })
        }
        _ => None,
    }
}

fn match_s3(p: &PairedDegreeSequence) -> Option<UnigraphKind> {
    match (p.k_part(), p.s_part()) {
        ([centers], [e, leaves]) if e.count == 1 && leaves.degree == 1 => {
            let (d1, r1, d2) = (centers.degree, centers.count, e.degree);
            (d1 >= r1 && r1 >= d2).then_some(UnigraphKind::S3 { p: d1 - r1, q1: d2, q2: r1 - d2 })
        }
        _ => None,
    }
}

fn match_s4(p: &PairedDegreeSequence) -> Option<UnigraphKind> {
    match (p.k_part(), p.s_part()) {
        ([top, rest], [leaves]) if top.count == 1 && rest.count > 1 && leaves.degree == 2 => {
            let (d2, r2) = (rest.degree, rest.count);
            (d2 > r2 && r2 >= 2).then_some(UnigraphKind::S4 { p: d2 - r2 - 1, q: r2 - 2 })
        }
        _ => None,
    }
}

/// Forms tried in order; each form is tried on all four relatives before the
/// next form.
const SPLIT_FORMS: [Matcher<PairedDegreeSequence>; 4] = [match_s, match_s2, match_s3, match_s4];

/// Matches an indecomposable split component, via its four relatives, against
/// the split families.
pub fn classify_split(pseq: &PairedDegreeSequence) -> Result<ClassifiedComponent> {
    let component = Component::Split(pseq.clone());
    if pseq.vertex_count() == 1 {
        let kind = if pseq.clique_size() == 1 { UnigraphKind::TrivialK } else { UnigraphKind::TrivialS };
        return Ok(ClassifiedComponent { kind, relative: RelativeTag::Identity, dist: 1, component });
    }
    let relatives = pseq.relatives();
    for form in SPLIT_FORMS {
        for (relative, candidate) in relatives.iter() {
            let Some(kind) = form(candidate) else { continue };
            if kind.validate().is_err() {
                continue;
            }
            if kind.degree_sequence() == Component::Split(candidate.clone()) {
                let dist = kind.dist_number();
                return Ok(ClassifiedComponent { kind, relative, dist, component });
            }
        }
    }
    Err(Error::NotUnigraph)
}

pub fn find_dist_split(pseq: &PairedDegreeSequence) -> Result<u64> {
    classify_split(pseq).map(|c| c.dist)
}

/// Classifies one component of a canonical or compact decomposition.
pub fn classify_component(component: &Component) -> Result<ClassifiedComponent> {
    let block = |kind: UnigraphKind| {
        let dist = kind.dist_number();
        Ok(ClassifiedComponent { kind, relative: RelativeTag::Identity, dist, component: component.clone() })
    };
    match component {
        Component::Split(p) => {
            if let Some(m) = p.as_complete_block() {
                block(if m == 1 { UnigraphKind::TrivialK } else { UnigraphKind::KComplete { size: m } })
            } else if let Some(m) = p.as_isolated_block() {
                block(if m == 1 { UnigraphKind::TrivialS } else { UnigraphKind::SIsolated { size: m } })
            } else {
                classify_split(p)
            }
        }
        Component::Tail(seq) if seq.vertex_count() == 1 => block(UnigraphKind::SingleVertex),
        Component::Tail(seq) => match seq.determine_split()? {
            SplitCheck::Split { paired, .. } => {
                classify_split(&paired).map(|c| ClassifiedComponent { component: component.clone(), ..c })
            }
            SplitCheck::NotSplit => classify_nonsplit(seq),
        },
    }
}

/// Distinguishing number of the unigraph with degree sequence `seq`, with the
/// classification of every compact component. Fails with
/// [`Error::NotUnigraph`] when some component matches no family.
pub fn find_dist_unigraph(seq: &DegreeSequence) -> Result<UnigraphReport> {
    if !seq.is_graphical() {
        return Err(invalid(format!("{seq} is not graphical")));
    }
    let compact = decompose_compact(&decompose(seq));
    let components = compact
        .components()
        .iter()
        .map(classify_component)
        .collect::<Result<Vec<_>>>()?;
    let dist = components.iter().map(|c| c.dist).max().unwrap_or(1);
    Ok(UnigraphReport { components, dist })
}

/// For threshold graphs: the size of the largest compact component.
pub fn threshold_dist(seq: &DegreeSequence) -> Result<u64> {
    if !seq.is_graphical() {
        return Err(invalid(format!("{seq} is not graphical")));
    }
    let compact = decompose_compact(&decompose(seq));
    let mut best = 1;
    for c in compact.components() {
        let size = match c {
            Component::Split(p) => p
                .as_complete_block()
                .or_else(|| p.as_isolated_block())
                .ok_or(Error::NotThreshold)?,
            Component::Tail(s) if s.vertex_count() == 1 => 1,
            Component::Tail(_) => return Err(Error::NotThreshold),
        };
        best = best.max(size);
    }
    Ok(best)
}
