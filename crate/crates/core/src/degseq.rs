//! Abbreviated degree sequences and paired (split) degree sequences.
//!
//! A degree sequence is stored as runs `(degree, multiplicity)` with strictly
//! decreasing degrees, so `(16^3, 12^4, 1^4)` is three runs. A paired
//! sequence carries one such run list for the clique side (K-part) and one for
//! the stable side (S-part) of a KS-partition; either side may be empty.

use std::fmt;

use crate::error::{invalid, Result};

/// `count` vertices of degree `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeRun {
    pub degree: u64,
    pub count: u64,
}

impl DegreeRun {
    pub const fn new(degree: u64, count: u64) -> Self {
        DegreeRun { degree, count }
    }
}

/// Builds runs from degrees that are already in non-increasing order.
pub(crate) fn runs_from_descending(degrees: impl IntoIterator<Item = u64>) -> Vec<DegreeRun> {
    let mut runs: Vec<DegreeRun> = Vec::new();
    for d in degrees {
        match runs.last_mut() {
            Some(last) if last.degree == d => last.count += 1,
            Some(last) => {
                debug_assert!(last.degree > d, "degrees must be non-increasing");
                runs.push(DegreeRun::new(d, 1));
            }
            None => runs.push(DegreeRun::new(d, 1)),
        }
    }
    runs
}

fn check_runs(runs: &[DegreeRun], what: &str) -> Result<()> {
    for (i, run) in runs.iter().enumerate() {
        if run.count == 0 {
            return Err(invalid(format!("{what}: multiplicity of degree {} is zero", run.degree)));
        }
        if i > 0 && runs[i - 1].degree <= run.degree {
            return Err(invalid(format!(
                "{what}: degrees must be strictly decreasing ({} then {})",
                runs[i - 1].degree,
                run.degree
            )));
        }
    }
    Ok(())
}

fn run_vertex_count(runs: &[DegreeRun]) -> u64 {
    runs.iter().map(|r| r.count).sum()
}

fn expand_runs(runs: &[DegreeRun]) -> impl Iterator<Item = u64> + '_ {
    runs.iter()
        .flat_map(|r| std::iter::repeat_n(r.degree, r.count as usize))
}

fn fmt_runs(runs: &[DegreeRun], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if runs.is_empty() {
        return f.write_str("-");
    }
    for (i, run) in runs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        if run.count == 1 {
            write!(f, "{}", run.degree)?;
        } else {
            write!(f, "{}^{}", run.degree, run.count)?;
        }
    }
    Ok(())
}

/// Maps every degree through `f`, which must reverse the order (so the
/// output is again strictly decreasing after reversal).
fn map_reversed(runs: &[DegreeRun], f: impl Fn(u64) -> u64) -> Vec<DegreeRun> {
    runs.iter().rev().map(|r| DegreeRun::new(f(r.degree), r.count)).collect()
}

fn map_in_order(runs: &[DegreeRun], f: impl Fn(u64) -> u64) -> Vec<DegreeRun> {
    runs.iter().map(|r| DegreeRun::new(f(r.degree), r.count)).collect()
}

/// The degree sequence of a graph in abbreviated form `(d_1^{r_1}, ..., d_s^{r_s})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    runs: Vec<DegreeRun>,
}

impl DegreeSequence {
    /// Sorts `degrees` in non-increasing order and merges equal degrees.
    pub fn abbreviate(degrees: &[u64]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(invalid("degree list is empty"));
        }
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_runs(runs_from_descending(sorted))
    }

    pub fn from_runs(runs: Vec<DegreeRun>) -> Result<Self> {
        if runs.is_empty() {
            return Err(invalid("degree sequence is empty"));
        }
        check_runs(&runs, "degree sequence")?;
        let n = run_vertex_count(&runs);
        if runs[0].degree >= n {
            return Err(invalid(format!(
                "degree {} is impossible with {n} vertices",
                runs[0].degree
            )));
        }
        Ok(DegreeSequence { runs })
    }

    /// Convenience constructor from `(degree, multiplicity)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        Self::from_runs(pairs.iter().map(|&(d, r)| DegreeRun::new(d, r)).collect())
    }

    /// Trusted constructor for degrees already sorted in non-increasing order.
    pub(crate) fn from_descending(degrees: impl IntoIterator<Item = u64>) -> Self {
        let seq = DegreeSequence { runs: runs_from_descending(degrees) };
        debug_assert!(!seq.runs.is_empty());
        seq
    }

    pub fn runs(&self) -> &[DegreeRun] {
        &self.runs
    }

    pub fn vertex_count(&self) -> u64 {
        run_vertex_count(&self.runs)
    }

    /// Number of distinct degrees `s`.
    pub fn distinct_degrees(&self) -> usize {
        self.runs.len()
    }

    pub fn max_degree(&self) -> u64 {
        self.runs[0].degree
    }

    pub fn min_degree(&self) -> u64 {
        self.runs[self.runs.len() - 1].degree
    }

    pub fn degree_sum(&self) -> u64 {
        self.runs.iter().map(|r| r.degree * r.count).sum()
    }

    /// Non-increasing list with each degree repeated by its multiplicity.
    pub fn expand(&self) -> Vec<u64> {
        expand_runs(&self.runs).collect()
    }

    pub fn iter_degrees(&self) -> impl Iterator<Item = u64> + '_ {
        expand_runs(&self.runs)
    }

    /// Degree sequence of the complement graph: `d -> n - 1 - d`.
    pub fn complement(&self) -> DegreeSequence {
        let top = self.vertex_count() - 1;
        DegreeSequence { runs: map_reversed(&self.runs, |d| top - d) }
    }

    /// Erdős–Gallai test in linear time: for every `k`,
    /// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`, with an even total.
    pub fn is_graphical(&self) -> bool {
        let d = self.expand();
        let n = d.len();
        if d.iter().sum::<u64>() % 2 == 1 {
            return false;
        }
        let mut suffix = vec![0u64; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + d[i];
        }
        // wide = number of degrees >= k; non-increasing in k.
        let mut wide = n;
        let mut left = 0u64;
        for k in 1..=n {
            left += d[k - 1];
            while wide > 0 && d[wide - 1] < k as u64 {
                wide -= 1;
            }
            let capped = wide.saturating_sub(k) as u64 * k as u64;
            let right = (k * (k - 1)) as u64 + capped + suffix[wide.max(k)];
            if left > right {
                return false;
            }
        }
        true
    }

    /// Split-graph recognition from degrees.
    ///
    /// With `h = max{i : d_i >= i - 1}` the graph is split iff
    /// `sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i`; the first `h` vertices then
    /// form the clique side of a KS-partition and `h` is the clique number.
    pub fn determine_split(&self) -> Result<SplitCheck> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(invalid("split recognition needs at least two vertices"));
        }
        // h is the length of the prefix with d_i >= i - 1 (1-based).
        let mut h: u64 = 0;
        for d in self.iter_degrees() {
            if d >= h {
                h += 1;
            } else {
                break;
            }
        }
        let mut left: u64 = 0;
        let mut right: u64 = 0;
        for (i, d) in self.iter_degrees().enumerate() {
            if (i as u64) < h {
                left += d;
            } else {
                right += d;
            }
        }
        if left != h * (h - 1) + right {
            return Ok(SplitCheck::NotSplit);
        }
        let (k_part, s_part) = split_runs_at(&self.runs, h);
        let paired = PairedDegreeSequence::new(k_part, s_part)?;
        Ok(SplitCheck::Split { clique_size: h, paired })
    }
}

/// Splits a run list after the first `at` vertices.
fn split_runs_at(runs: &[DegreeRun], at: u64) -> (Vec<DegreeRun>, Vec<DegreeRun>) {
    let mut head = Vec::new();
    let mut tail = Vec::new();
    let mut remaining = at;
    for run in runs {
        if remaining >= run.count {
            head.push(*run);
            remaining -= run.count;
        } else if remaining > 0 {
            head.push(DegreeRun::new(run.degree, remaining));
            tail.push(DegreeRun::new(run.degree, run.count - remaining));
            remaining = 0;
        } else {
            tail.push(*run);
        }
    }
    (head, tail)
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_runs(&self.runs, f)
    }
}

/// Outcome of split recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitCheck {
    NotSplit,
    /// `clique_size` is `h`, the size of the K-part and the clique number.
    Split { clique_size: u64, paired: PairedDegreeSequence },
}

/// Which relative of a split graph a sequence describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelativeTag {
    Identity,
    Complement,
    Inverse,
    ComplementInverse,
}

impl RelativeTag {
    /// Scan order used by classification.
    pub const ALL: [RelativeTag; 4] = [
        RelativeTag::Identity,
        RelativeTag::Complement,
        RelativeTag::Inverse,
        RelativeTag::ComplementInverse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelativeTag::Identity => "identity",
            RelativeTag::Complement => "complement",
            RelativeTag::Inverse => "inverse",
            RelativeTag::ComplementInverse => "complement-inverse",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RelativeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for RelativeTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        RelativeTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown relative `{s}`"))
    }
}

/// Whether a KS-partition has swing vertices on either side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwingInfo {
    /// Some K-part vertex has degree `|A| - 1`.
    pub k_side: bool,
    /// Some S-part vertex has degree `|A|`.
    pub s_side: bool,
}

impl SwingInfo {
    pub fn is_balanced(self) -> bool {
        !self.k_side && !self.s_side
    }
}

/// Degree sequence of a split graph together with a KS-partition `(A, B)`.
///
/// Besides per-part ordering, construction checks the degree bounds every
/// KS-partition satisfies: K-part degrees are at least `|A| - 1` and S-part
/// degrees at most `|A|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairedDegreeSequence {
    k_part: Vec<DegreeRun>,
    s_part: Vec<DegreeRun>,
}

impl PairedDegreeSequence {
    pub fn new(k_part: Vec<DegreeRun>, s_part: Vec<DegreeRun>) -> Result<Self> {
        check_runs(&k_part, "K-part")?;
        check_runs(&s_part, "S-part")?;
        if k_part.is_empty() && s_part.is_empty() {
            return Err(invalid("paired sequence has two empty parts"));
        }
        let a = run_vertex_count(&k_part);
        let b = run_vertex_count(&s_part);
        let n = a + b;
        if let Some(first) = k_part.first() {
            if first.degree > n - 1 {
                return Err(invalid(format!("K-part degree {} exceeds n - 1 = {}", first.degree, n - 1)));
            }
            let last = k_part[k_part.len() - 1].degree;
            if last + 1 < a {
                return Err(invalid(format!("K-part degree {last} is below |A| - 1 = {}", a - 1)));
            }
        }
        if let Some(first) = s_part.first() {
            if first.degree > a {
                return Err(invalid(format!("S-part degree {} exceeds |A| = {a}", first.degree)));
            }
        }
        Ok(PairedDegreeSequence { k_part, s_part })
    }

    pub fn from_pairs(k_part: &[(u64, u64)], s_part: &[(u64, u64)]) -> Result<Self> {
        let conv = |p: &[(u64, u64)]| p.iter().map(|&(d, r)| DegreeRun::new(d, r)).collect();
        Self::new(conv(k_part), conv(s_part))
    }

    pub(crate) fn new_unchecked(k_part: Vec<DegreeRun>, s_part: Vec<DegreeRun>) -> Self {
        let p = PairedDegreeSequence { k_part, s_part };
        debug_assert!(
            Self::new(p.k_part.clone(), p.s_part.clone()).is_ok(),
            "malformed paired sequence {p}"
        );
        p
    }

    /// `(0; -)`: a single clique-side vertex.
    pub fn trivial_k() -> Self {
        Self::complete_block(1)
    }

    /// `(-; 0)`: a single stable-side vertex.
    pub fn trivial_s() -> Self {
        Self::isolated_block(1)
    }

    /// `((m-1)^m; -)`: `K_m` with every vertex on the clique side.
    pub fn complete_block(m: u64) -> Self {
        assert!(m >= 1);
        PairedDegreeSequence { k_part: vec![DegreeRun::new(m - 1, m)], s_part: Vec::new() }
    }

    /// `(-; 0^m)`: `m` isolated vertices on the stable side.
    pub fn isolated_block(m: u64) -> Self {
        assert!(m >= 1);
        PairedDegreeSequence { k_part: Vec::new(), s_part: vec![DegreeRun::new(0, m)] }
    }

    pub fn k_part(&self) -> &[DegreeRun] {
        &self.k_part
    }

    pub fn s_part(&self) -> &[DegreeRun] {
        &self.s_part
    }

    /// `|A|`.
    pub fn clique_size(&self) -> u64 {
        run_vertex_count(&self.k_part)
    }

    /// `|B|`.
    pub fn stable_size(&self) -> u64 {
        run_vertex_count(&self.s_part)
    }

    pub fn vertex_count(&self) -> u64 {
        self.clique_size() + self.stable_size()
    }

    /// Total number of runs over both parts.
    pub fn distinct_runs(&self) -> usize {
        self.k_part.len() + self.s_part.len()
    }

    /// `Some(m)` when this is `((m-1)^m; -)`.
    pub fn as_complete_block(&self) -> Option<u64> {
        match (self.k_part.as_slice(), self.s_part.is_empty()) {
            ([run], true) if run.degree + 1 == run.count => Some(run.count),
            _ => None,
        }
    }

    /// `Some(m)` when this is `(-; 0^m)`.
    pub fn as_isolated_block(&self) -> Option<u64> {
        match (self.k_part.is_empty(), self.s_part.as_slice()) {
            (true, [run]) if run.degree == 0 => Some(run.count),
            _ => None,
        }
    }

    /// Both parts merged into an ordinary degree sequence.
    pub fn flatten(&self) -> DegreeSequence {
        let mut degrees: Vec<u64> = expand_runs(&self.k_part).chain(expand_runs(&self.s_part)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence::from_descending(degrees)
    }

    pub fn swing_info(&self) -> SwingInfo {
        let a = self.clique_size();
        SwingInfo {
            k_side: a >= 1 && self.k_part.iter().any(|r| r.degree == a - 1),
            s_side: self.s_part.iter().any(|r| r.degree == a),
        }
    }

    /// Paired sequence of the complement `(G-bar, B, A)`.
    pub fn complement(&self) -> Self {
        let top = self.vertex_count() - 1;
        PairedDegreeSequence::new_unchecked(
            map_reversed(&self.s_part, |d| top - d),
            map_reversed(&self.k_part, |d| top - d),
        )
    }

    /// Paired sequence of the inverse `(G^I, B, A)`: clique edges inside `A`
    /// are removed and `B` becomes a clique.
    pub fn inverse(&self) -> Self {
        let a = self.clique_size();
        let b = self.stable_size();
        let k_part = map_in_order(&self.s_part, |d| d + b.saturating_sub(1));
        let s_part = map_in_order(&self.k_part, |d| d - a.saturating_sub(1));
        PairedDegreeSequence::new_unchecked(k_part, s_part)
    }

    /// All four relatives, computed arithmetically.
    pub fn relatives(&self) -> Relatives {
        let complement = self.complement();
        let inverse = self.inverse();
        let complement_inverse = inverse.complement();
        Relatives { seqs: [self.clone(), complement, inverse, complement_inverse] }
    }
}

impl fmt::Display for PairedDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_runs(&self.k_part, f)?;
        f.write_str(";")?;
        fmt_runs(&self.s_part, f)
    }
}

/// The paired sequences of a split graph and its three relatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relatives {
    seqs: [PairedDegreeSequence; 4],
}

impl Relatives {
    pub fn get(&self, tag: RelativeTag) -> &PairedDegreeSequence {
        &self.seqs[tag.index()]
    }

    /// Relatives in scan order: identity, complement, inverse, complement-inverse.
    pub fn iter(&self) -> impl Iterator<Item = (RelativeTag, &PairedDegreeSequence)> {
        RelativeTag::ALL.into_iter().zip(self.seqs.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(p: &[(u64, u64)]) -> DegreeSequence {
        DegreeSequence::from_pairs(p).unwrap()
    }

    fn paired(k: &[(u64, u64)], s: &[(u64, u64)]) -> PairedDegreeSequence {
        PairedDegreeSequence::from_pairs(k, s).unwrap()
    }

    #[test]
    fn abbreviate_sorts_and_merges() {
        assert_eq!(DegreeSequence::abbreviate(&[1, 2, 1, 2]).unwrap(), seq(&[(2, 2), (1, 2)]));
        assert_eq!(DegreeSequence::abbreviate(&[0]).unwrap(), seq(&[(0, 1)]));
        let borri = [16, 16, 16, 12, 12, 12, 12, 9, 9, 9, 9, 9, 5, 5, 3, 2, 1, 1, 1, 1];
        let s = DegreeSequence::abbreviate(&borri).unwrap();
        assert_eq!(s, seq(&[(16, 3), (12, 4), (9, 5), (5, 2), (3, 1), (2, 1), (1, 4)]));
        assert_eq!(s.to_string(), "16^3,12^4,9^5,5^2,3,2,1^4");
        assert_eq!(s.vertex_count(), 20);
    }

    #[test]
    fn abbreviate_rejects_bad_input() {
        assert!(DegreeSequence::abbreviate(&[]).is_err());
        assert!(DegreeSequence::abbreviate(&[3, 1, 1]).is_err());
        assert!(DegreeSequence::from_pairs(&[(1, 2), (1, 2)]).is_err());
        assert!(DegreeSequence::from_pairs(&[(1, 0)]).is_err());
    }

    #[test]
    fn expand_examples() {
        assert_eq!(seq(&[(1, 4)]).expand(), vec![1, 1, 1, 1]);
        assert_eq!(seq(&[(2, 3)]).expand(), vec![2, 2, 2]);
    }

    #[test]
    fn split_recognition() {
        match seq(&[(3, 4)]).determine_split().unwrap() {
            SplitCheck::Split { clique_size, paired: p } => {
                assert_eq!(clique_size, 4);
                assert_eq!(p, paired(&[(3, 4)], &[]));
            }
            other => panic!("{other:?}"),
        }
        match seq(&[(2, 2), (1, 2)]).determine_split().unwrap() {
            SplitCheck::Split { clique_size, paired: p } => {
                assert_eq!(clique_size, 2);
                assert_eq!(p, paired(&[(2, 2)], &[(1, 2)]));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(seq(&[(2, 5)]).determine_split().unwrap(), SplitCheck::NotSplit);
        assert!(seq(&[(0, 1)]).determine_split().is_err());
    }

    #[test]
    fn split_inside_a_run() {
        // K3 plus a pendant on one vertex: (3,2,2,1), h = 3.
        match seq(&[(3, 1), (2, 2), (1, 1)]).determine_split().unwrap() {
            SplitCheck::Split { clique_size, paired: p } => {
                assert_eq!(clique_size, 3);
                assert_eq!(p.to_string(), "3,2^2;1");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(seq(&[(1, 4)]).complement(), seq(&[(2, 4)]));
        assert_eq!(seq(&[(4, 5)]).complement(), seq(&[(0, 5)]));
        assert_eq!(seq(&[(2, 5)]).complement(), seq(&[(2, 5)]));
    }

    #[test]
    fn relative_examples() {
        let r = paired(&[(4, 4)], &[(2, 2)]).relatives();
        assert_eq!(r.get(RelativeTag::Complement), &paired(&[(3, 2)], &[(1, 4)]));
        let p4 = paired(&[(2, 2)], &[(1, 2)]);
        assert_eq!(p4.relatives().get(RelativeTag::Inverse), &p4);
        let single = paired(&[], &[(0, 1)]);
        assert_eq!(single.complement(), paired(&[(0, 1)], &[]));
    }

    #[test]
    fn relative_algebra() {
        let s3 = paired(&[(4, 3)], &[(2, 1), (1, 4)]);
        assert_eq!(s3.inverse().inverse(), s3);
        assert_eq!(s3.complement().complement(), s3);
        assert_eq!(s3.inverse().complement(), s3.complement().inverse());
    }

    #[test]
    fn swing_examples() {
        let k2 = paired(&[(1, 2)], &[]);
        assert_eq!(k2.swing_info(), SwingInfo { k_side: true, s_side: false });
        let p4 = paired(&[(2, 2)], &[(1, 2)]);
        assert_eq!(p4.swing_info(), SwingInfo { k_side: false, s_side: false });
        let triangle_s_max = paired(&[(2, 2)], &[(2, 1)]);
        assert_eq!(triangle_s_max.swing_info(), SwingInfo { k_side: false, s_side: true });
    }

    #[test]
    fn paired_rejects_impossible_partitions() {
        assert!(PairedDegreeSequence::from_pairs(&[], &[]).is_err());
        // A K-part vertex must see the rest of the clique.
        assert!(PairedDegreeSequence::from_pairs(&[(0, 2)], &[]).is_err());
        // An S-part vertex sees at most |A| vertices.
        assert!(PairedDegreeSequence::from_pairs(&[(1, 1)], &[(2, 1)]).is_err());
    }

    #[test]
    fn blocks() {
        assert_eq!(PairedDegreeSequence::complete_block(3).to_string(), "2^3;-");
        assert_eq!(PairedDegreeSequence::isolated_block(4).to_string(), "-;0^4");
        assert_eq!(paired(&[(1, 2)], &[]).as_complete_block(), Some(2));
        assert_eq!(paired(&[], &[(0, 4)]).as_isolated_block(), Some(4));
        assert_eq!(paired(&[(2, 2)], &[(1, 2)]).as_complete_block(), None);
    }
}
