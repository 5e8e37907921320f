//! Text formats: abbreviated degree sequences and edge lists.

use thiserror::Error;
use unigraph::degseq::{DegreeRun, DegreeSequence, PairedDegreeSequence};
use unigraph::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `column` is 1-based and counts characters.
    #[error("column {column}: {message}")]
    DegreeSequence { column: usize, message: String },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// A parsed degree sequence, with or without a KS-partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSequence {
    Flat(DegreeSequence),
    Paired(PairedDegreeSequence),
}

impl ParsedSequence {
    /// The degree sequence of the whole graph.
    pub fn flat(&self) -> DegreeSequence {
        match self {
            ParsedSequence::Flat(s) => s.clone(),
            ParsedSequence::Paired(p) => p.flatten(),
        }
    }
}

fn seq_error(text: &str, byte: usize, message: impl Into<String>) -> ParseError {
    ParseError::DegreeSequence { column: text[..byte].chars().count() + 1, message: message.into() }
}

fn is_empty_marker(s: &str) -> bool {
    matches!(s, "-" | "\u{2212}" | "\u{2205}")
}

/// Parses one part starting at byte `offset` of `text`. `None` means the
/// empty-part marker.
fn parse_part(text: &str, offset: usize, part: &str) -> Result<Option<Vec<DegreeRun>>, ParseError> {
    let trimmed = part.trim();
    let lead = offset + (part.len() - part.trim_start().len());
    if trimmed.is_empty() {
        return Err(seq_error(text, lead, "empty part (write - for an empty part)"));
    }
    if is_empty_marker(trimmed) {
        return Ok(None);
    }
    let mut runs: Vec<DegreeRun> = Vec::new();
    let mut pos = offset;
    for term in part.split(',') {
        let start = pos + (term.len() - term.trim_start().len());
        pos += term.len() + 1;
        let term = term.trim();
        if term.is_empty() {
            return Err(seq_error(text, start, "empty term"));
        }
        let (d, r) = match term.split_once('^') {
            Some((d, r)) => (d.trim(), Some(r.trim())),
            None => (term, None),
        };
        let degree: u64 =
            d.parse().map_err(|_| seq_error(text, start, format!("`{d}` is not a non-negative integer")))?;
        let count: u64 = match r {
            Some(r) => r.parse().map_err(|_| seq_error(text, start, format!("`{r}` is not a positive integer")))?,
            None => 1,
        };
        if count == 0 {
            return Err(seq_error(text, start, "multiplicity must be positive"));
        }
        if let Some(prev) = runs.last() {
            if degree >= prev.degree {
                return Err(seq_error(text, start, format!("degree {degree} does not decrease after {}", prev.degree)));
            }
        }
        runs.push(DegreeRun::new(degree, count));
    }
    Ok(Some(runs))
}

/// Parses `d` / `d^r` terms separated by commas, optionally split into a
/// K-part and an S-part by one `;`. `-` (or `−`, `∅`) stands for an empty
/// part.
pub fn parse_degree_sequence_text(text: &str) -> Result<ParsedSequence, ParseError> {
    let parts: Vec<&str> = text.split(';').collect();
    match parts.as_slice() {
        [flat] => {
            let runs = parse_part(text, 0, flat)?.ok_or_else(|| seq_error(text, 0, "sequence is empty"))?;
            DegreeSequence::from_runs(runs)
                .map(ParsedSequence::Flat)
                .map_err(|e| seq_error(text, 0, e.to_string()))
        }
        [k, s] => {
            let k_runs = parse_part(text, 0, k)?;
            let s_runs = parse_part(text, k.len() + 1, s)?;
            if k_runs.is_none() && s_runs.is_none() {
                return Err(seq_error(text, 0, "both parts are empty"));
            }
            PairedDegreeSequence::new(k_runs.unwrap_or_default(), s_runs.unwrap_or_default())
                .map(ParsedSequence::Paired)
                .map_err(|e| seq_error(text, 0, e.to_string()))
        }
        _ => {
            let second = text.match_indices(';').nth(1).map_or(0, |(i, _)| i);
            Err(seq_error(text, second, "more than one `;`"))
        }
    }
}

/// Parses an edge list: the vertex count on the first non-comment line, then
/// one `u v` pair per line. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let [n] = fields.as_slice() else {
                    return Err(err(line, format!("expected the vertex count, found `{content}`")));
                };
                let n: usize = n.parse().map_err(|_| err(line, format!("`{n}` is not a vertex count")))?;
                if n == 0 {
                    return Err(err(line, "vertex count must be positive".into()));
                }
                graph = Some(Graph::empty(n));
            }
            Some(g) => {
                let [u, v] = fields.as_slice() else {
                    return Err(err(line, format!("expected `u v`, found `{content}`")));
                };
                let id = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("`{s}` is not a vertex id")));
                let (u, v) = (id(u)?, id(v)?);
                g.try_add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
            }
        }
    }
    graph.ok_or_else(|| err(last_line + 1, "missing vertex count".into()))
}
