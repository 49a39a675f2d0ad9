//! Quivers (finite directed multigraphs) and the path combinatorics the
//! homological computations are phrased in.
//!
//! Arrows are anonymous: a quiver is its ordered vertex list together with
//! the multiplicity matrix `arrow_mult[i][j]` = number of arrows `i -> j`.
//!
//! # Text format
//!
//! ```text
//! # comments run to end of line
//! vertices: a b c
//! arrow a b        # multiplicity 1
//! arrow b c 2      # repeated lines accumulate
//! ```

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("multiplicity matrix must be {n}x{n}, got {len} entries")]
    BadShape { n: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("negative multiplicity {0}")]
    NegativeMultiplicity(String),
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("no vertices declared")]
    NoVertices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Paths ending at the vertex.
    Into,
    /// Paths starting at the vertex.
    OutOf,
}

/// Length of the longest directed path, or `Infinite` when there is an
/// oriented cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathLength {
    Finite(usize),
    Infinite,
}

impl fmt::Display for PathLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathLength::Finite(n) => write!(f, "{n}"),
            PathLength::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexClassification {
    /// No arrow ends here.
    pub sources: BTreeSet<usize>,
    /// No arrow starts here.
    pub sinks: BTreeSet<usize>,
    /// Both a source and a sink.
    pub isolated: BTreeSet<usize>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    names: Vec<String>,
    mult: Vec<u64>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Quiver {
    /// Builds a quiver from vertex names and a row-major multiplicity
    /// matrix. An empty vertex list is accepted (it stands for the empty
    /// subquiver); the text parser rejects it.
    pub fn new(names: Vec<String>, mult: Vec<u64>) -> Result<Self, QuiverError> {
        let n = names.len();
        if mult.len() != n * n {
            return Err(QuiverError::BadShape { n, len: mult.len() });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(QuiverError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(QuiverError::DuplicateVertex(name.clone()));
            }
        }
        Ok(Quiver { names, mult })
    }

    /// Vertices named `1..=n`.
    pub fn numbered(n: usize, mult: Vec<u64>) -> Result<Self, QuiverError> {
        Quiver::new((1..=n).map(|i| i.to_string()).collect(), mult)
    }

    /// Numbered quiver from a list of arrows `(from, to)` given 0-based.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut mult = vec![0; n * n];
        for &(a, b) in arrows {
            mult[a * n + b] += 1;
        }
        Quiver::numbered(n, mult).expect("numbered names are valid")
    }

    /// Numbered quiver whose adjacency is the given nonnegative matrix.
    pub fn from_adjacency(m: &IntMatrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let mult: Option<Vec<u64>> = m.entries().iter().map(|x| u64::try_from(x).ok()).collect();
        Quiver::numbered(m.rows(), mult?).ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    fn check_vertex(&self, v: usize) -> Result<(), QuiverError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(QuiverError::UnknownVertex(format!("#{v}")))
        }
    }

    /// Number of arrows `from -> to`.
    pub fn arrows(&self, from: usize, to: usize) -> u64 {
        self.mult[from * self.vertex_count() + to]
    }

    pub fn add_arrows(&mut self, from: usize, to: usize, count: u64) {
        let n = self.vertex_count();
        self.mult[from * n + to] += count;
    }

    pub fn arrow_count(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        (0..self.vertex_count()).map(|w| self.arrows(v, w)).sum()
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        (0..self.vertex_count()).map(|u| self.arrows(u, v)).sum()
    }

    /// Adjacency matrix: entry `(i, j)` is the number of arrows `i -> j`.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.vertex_count();
        IntMatrix::from_fn(n, n, |i, j| BigInt::from(self.arrows(i, j)))
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let n = self.vertex_count();
        let mult = (0..n * n)
            .map(|idx| self.arrows(idx % n, idx / n))
            .collect();
        Quiver {
            names: self.names.clone(),
            mult,
        }
    }

    /// Every arrow count multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Quiver {
        Quiver {
            names: self.names.clone(),
            mult: self.mult.iter().map(|m| m * factor).collect(),
        }
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let mut out = VertexClassification::default();
        for v in 0..self.vertex_count() {
            let source = self.in_degree(v) == 0;
            let sink = self.out_degree(v) == 0;
            if source {
                out.sources.insert(v);
            }
            if sink {
                out.sinks.insert(v);
            }
            if source && sink {
                out.isolated.insert(v);
            }
        }
        out
    }

    pub fn has_sources_or_sinks(&self) -> bool {
        let c = self.classify_vertices();
        !c.sources.is_empty() || !c.sinks.is_empty()
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![];
            let mut queue = VecDeque::from([start]);
            comp[start] = id;
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for (w, c) in comp.iter_mut().enumerate() {
                    if *c == usize::MAX && (self.arrows(u, w) > 0 || self.arrows(w, u) > 0) {
                        *c = id;
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected, and every vertex has exactly one incoming and one outgoing
    /// arrow. A single vertex with one loop counts.
    pub fn is_cycle(&self) -> bool {
        self.is_connected()
            && (0..self.vertex_count()).all(|v| self.in_degree(v) == 1 && self.out_degree(v) == 1)
    }

    pub fn longest_path_length(&self) -> PathLength {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n)
            .map(|v| (0..n).filter(|&u| self.arrows(u, v) > 0).count())
            .collect();
        let mut longest = vec![0usize; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut visited = 0;
        while let Some(u) = queue.pop_front() {
            visited += 1;
            for w in 0..n {
                if self.arrows(u, w) == 0 {
                    continue;
                }
                longest[w] = longest[w].max(longest[u] + 1);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if visited < n {
            PathLength::Infinite
        } else {
            PathLength::Finite(longest.into_iter().max().unwrap_or(0))
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path_length() != PathLength::Infinite
    }

    /// Whether some directed path of length exactly `m` ends at (`Into`) or
    /// starts at (`OutOf`) vertex `v`. Length 0 always exists.
    pub fn has_exact_path(&self, v: usize, m: usize, dir: Direction) -> Result<bool, QuiverError> {
        self.check_vertex(v)?;
        Ok(PathTable::new(self, m).has(v, m, dir))
    }

    /// Full subquiver on vertices that carry a nonzero stable class at some
    /// level: a path of length `l` into `v` and one of length `k - l` out of
    /// `v` for some `1 <= l <= k - 1`. The result may have no vertices.
    pub fn reduced_core(&self, k: usize) -> Quiver {
        let table = PathTable::new(self, k);
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| (1..k).any(|l| table.survives(v, l, k)))
            .collect();
        self.full_subquiver(&keep)
    }

    /// One loop added at every source and at every sink.
    pub fn saturate_with_loops(&self) -> Quiver {
        let c = self.classify_vertices();
        let mut out = self.clone();
        for v in c.sources.union(&c.sinks) {
            out.add_arrows(*v, *v, 1);
        }
        out
    }

    /// Full subquiver on `keep` (in the given order).
    pub fn full_subquiver(&self, keep: &[usize]) -> Quiver {
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mult = keep
            .iter()
            .flat_map(|&a| keep.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.arrows(a, b))
            .collect();
        Quiver { names, mult }
    }

    /// Disjoint union; vertex names must not collide.
    pub fn disjoint_union(&self, other: &Quiver) -> Result<Quiver, QuiverError> {
        let n = self.vertex_count();
        let m = other.vertex_count();
        let total = n + m;
        let mut mult = vec![0; total * total];
        for i in 0..n {
            for j in 0..n {
                mult[i * total + j] = self.arrows(i, j);
            }
        }
        for i in 0..m {
            for j in 0..m {
                mult[(n + i) * total + n + j] = other.arrows(i, j);
            }
        }
        let names = self.names.iter().chain(&other.names).cloned().collect();
        Quiver::new(names, mult)
    }

    /// Parses the line-oriented text format.
    pub fn parse(text: &str) -> Result<Quiver, ParseError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut arrows: Vec<(usize, usize, u64)> = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let err = |kind| ParseError {
                line: line_no,
                kind,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                for name in rest.split_whitespace() {
                    if !valid_name(name) {
                        return Err(err(ParseErrorKind::InvalidName(name.to_string())));
                    }
                    if index.contains_key(name) {
                        return Err(err(ParseErrorKind::DuplicateVertex(name.to_string())));
                    }
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                }
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] != "arrow" || !(3..=4).contains(&tokens.len()) {
                return Err(err(ParseErrorKind::Malformed(line.to_string())));
            }
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| err(ParseErrorKind::UnknownVertex(name.to_string())))
            };
            let from = lookup(tokens[1])?;
            let to = lookup(tokens[2])?;
            let count = match tokens.get(3) {
                None => 1,
                Some(t) if t.starts_with('-') && t[1..].chars().all(|c| c.is_ascii_digit()) => {
                    return Err(err(ParseErrorKind::NegativeMultiplicity(t.to_string())));
                }
                Some(t) => t
                    .parse::<u64>()
                    .map_err(|_| err(ParseErrorKind::Malformed(line.to_string())))?,
            };
            arrows.push((from, to, count));
        }
        if names.is_empty() {
            return Err(ParseError {
                line: last_line,
                kind: ParseErrorKind::NoVertices,
            });
        }
        let n = names.len();
        let mut mult = vec![0u64; n * n];
        for (a, b, c) in arrows {
            mult[a * n + b] += c;
        }
        Ok(Quiver { names, mult })
    }
}

impl FromStr for Quiver {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Quiver::parse(s)
    }
}

/// Serializes to the text format: one `vertices:` line, then arrows in
/// `(from, to)` index order with explicit multiplicities.
impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.names.join(" "))?;
        let n = self.vertex_count();
        for i in 0..n {
            for j in 0..n {
                let m = self.arrows(i, j);
                if m > 0 {
                    writeln!(f, "arrow {} {} {}", self.names[i], self.names[j], m)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver({:?}, {})", self.names, self.adjacency())
    }
}

/// Which vertices are endpoints of paths of each exact length `0..=max_len`.
///
/// `ends[m][v]`: some path of length `m` ends at `v`;
/// `starts[m][v]`: some path of length `m` starts at `v`.
#[derive(Debug, Clone)]
pub struct PathTable {
    ends: Vec<Vec<bool>>,
    starts: Vec<Vec<bool>>,
}

impl PathTable {
    pub fn new(q: &Quiver, max_len: usize) -> Self {
        let n = q.vertex_count();
        let mut ends = vec![vec![true; n]];
        let mut starts = vec![vec![true; n]];
        for m in 1..=max_len {
            let prev_e = &ends[m - 1];
            let prev_s = &starts[m - 1];
            let e: Vec<bool> = (0..n)
                .map(|v| (0..n).any(|u| prev_e[u] && q.arrows(u, v) > 0))
                .collect();
            let s: Vec<bool> = (0..n)
                .map(|v| (0..n).any(|w| prev_s[w] && q.arrows(v, w) > 0))
                .collect();
            ends.push(e);
            starts.push(s);
        }
        PathTable { ends, starts }
    }

    pub fn max_len(&self) -> usize {
        self.ends.len() - 1
    }

    pub fn has(&self, v: usize, m: usize, dir: Direction) -> bool {
        match dir {
            Direction::Into => self.ends[m][v],
            Direction::OutOf => self.starts[m][v],
        }
    }

    /// `M^l_v` exists (a path of length `l` ends at `v`) and is not
    /// projective (a path of length `k - l` starts at `v`).
    pub fn survives(&self, v: usize, l: usize, k: usize) -> bool {
        self.ends[l][v] && self.starts[k - l][v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear(n: usize) -> Quiver {
        let arrows: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Quiver::from_arrows(n, &arrows)
    }

    fn cycle(n: usize) -> Quiver {
        let arrows: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Quiver::from_arrows(n, &arrows)
    }

    #[test]
    fn parse_gamma2() {
        let q = Quiver::parse("vertices: a b\narrow a a\narrow a b\narrow b b\n").unwrap();
        assert_eq!(q.names(), ["a", "b"]);
        assert_eq!(q.adjacency(), IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn parse_minimal_and_comments() {
        let q = Quiver::parse("vertices: v\n").unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(q.arrow_count(), 0);
        let q =
            Quiver::parse("# header\nvertices: x y # two\nvertices: z\narrow x z 2\narrow x z\n")
                .unwrap();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrows(0, 2), 3);
    }

    #[test]
    fn parse_errors() {
        let e = Quiver::parse("arrow a b\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.kind, ParseErrorKind::UnknownVertex("a".into()));
        assert!(e.to_string().contains("\"a\""));
        let e = Quiver::parse("vertices: a\narrow a a -2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::NegativeMultiplicity(_)));
        let e = Quiver::parse("# nothing\n\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NoVertices);
        let e = Quiver::parse("vertices: a\nedge a a\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
        let e = Quiver::parse("vertices: a a\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DuplicateVertex(_)));
        let e = Quiver::parse("vertices: a-b\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::InvalidName(_)));
        let e = Quiver::parse("vertices: a\narrow a a x\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
    }

    #[test]
    fn serialize_format() {
        let q = Quiver::parse("vertices: a b\narrow a b\narrow a a\narrow a b\n").unwrap();
        assert_eq!(q.to_string(), "vertices: a b\narrow a a 1\narrow a b 2\n");
        assert_eq!(Quiver::parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(
            cycle(3).adjacency(),
            IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
        );
        assert_eq!(
            Quiver::from_arrows(1, &[(0, 0)]).adjacency(),
            IntMatrix::from_i64_rows(&[&[1]])
        );
    }

    #[test]
    fn opposite_examples() {
        let q = Quiver::from_arrows(2, &[(0, 1)]);
        assert_eq!(q.opposite(), Quiver::from_arrows(2, &[(1, 0)]));
        assert_eq!(q.opposite().opposite(), q);
        let c = cycle(4).opposite();
        assert!(c.is_cycle());
        assert_eq!(c.adjacency(), cycle(4).adjacency().transpose());
    }

    #[test]
    fn classify_examples() {
        let c = linear(3).classify_vertices();
        assert_eq!(c.sources, BTreeSet::from([0]));
        assert_eq!(c.sinks, BTreeSet::from([2]));
        assert!(c.isolated.is_empty());
        let c = cycle(5).classify_vertices();
        assert!(c.sources.is_empty() && c.sinks.is_empty());
        let c = Quiver::from_arrows(1, &[]).classify_vertices();
        assert_eq!(c.isolated, BTreeSet::from([0]));
        assert_eq!(c.sources, BTreeSet::from([0]));
        assert_eq!(c.sinks, BTreeSet::from([0]));
    }

    #[test]
    fn cycle_detection() {
        assert!(cycle(5).is_cycle());
        assert!(cycle(1).is_cycle());
        let gamma2 = Quiver::from_arrows(2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(!gamma2.is_cycle());
        let two = cycle(2)
            .disjoint_union(
                &Quiver::new(
                    vec!["a".into(), "b".into(), "c".into()],
                    cycle(3)
                        .adjacency()
                        .entries()
                        .iter()
                        .map(|x| u64::try_from(x).unwrap())
                        .collect(),
                )
                .unwrap(),
            )
            .unwrap();
        assert!(!two.is_cycle());
        assert_eq!(two.components().len(), 2);
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(linear(3).longest_path_length(), PathLength::Finite(2));
        assert_eq!(
            Quiver::from_arrows(2, &[(0, 1), (1, 1)]).longest_path_length(),
            PathLength::Infinite
        );
        assert_eq!(
            Quiver::from_arrows(1, &[]).longest_path_length(),
            PathLength::Finite(0)
        );
        // diamond with a long side
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(q.longest_path_length(), PathLength::Finite(3));
    }

    #[test]
    fn exact_path_examples() {
        let q = linear(3);
        for v in 0..3 {
            assert!(q.has_exact_path(v, 0, Direction::Into).unwrap());
            assert!(q.has_exact_path(v, 0, Direction::OutOf).unwrap());
        }
        assert!(q.has_exact_path(2, 2, Direction::Into).unwrap());
        assert!(!q.has_exact_path(2, 3, Direction::Into).unwrap());
        assert!(q.has_exact_path(0, 2, Direction::OutOf).unwrap());
        assert!(!q.has_exact_path(1, 2, Direction::OutOf).unwrap());
        let c = cycle(3);
        for m in 0..8 {
            assert!(c.has_exact_path(1, m, Direction::Into).unwrap());
            assert!(c.has_exact_path(1, m, Direction::OutOf).unwrap());
        }
        assert!(matches!(
            q.has_exact_path(7, 1, Direction::Into),
            Err(QuiverError::UnknownVertex(_))
        ));
    }

    #[test]
    fn reduced_core_examples() {
        for k in 2..5 {
            assert_eq!(cycle(4).reduced_core(k), cycle(4));
        }
        let core = linear(3).reduced_core(2);
        assert_eq!(core.names(), ["2"]);
        assert_eq!(core.arrow_count(), 0);
        assert!(linear(2).reduced_core(2).is_empty());
        // 1->2->3->4, k=3: only interior vertices carry classes
        let core = linear(4).reduced_core(3);
        assert_eq!(core.names(), ["2", "3"]);
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(cycle(3).saturate_with_loops(), cycle(3));
        let s = Quiver::from_arrows(2, &[(0, 1)]).saturate_with_loops();
        assert_eq!(s, Quiver::from_arrows(2, &[(0, 1), (0, 0), (1, 1)]));
        let iso = Quiver::from_arrows(1, &[]).saturate_with_loops();
        assert_eq!(iso.arrows(0, 0), 1);
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle(4).is_connected());
        assert!(!Quiver::from_arrows(2, &[]).is_connected());
        assert!(Quiver::from_arrows(3, &[(0, 1), (2, 1)]).is_connected());
    }
}
