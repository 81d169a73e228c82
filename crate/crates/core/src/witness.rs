//! Witness structures: partitions of the vertex set into connected parts.
//! Contracting every part of a witness structure yields its quotient graph,
//! and the number of contractions needed is `n - parts`.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexMapping};
use crate::io::content_lines;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Path,
    Tree,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Path => "path",
            Target::Tree => "tree",
        })
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "path" => Ok(Target::Path),
            "tree" => Ok(Target::Tree),
            other => Err(format!("unknown target {other:?}, expected path or tree")),
        }
    }
}

/// A partition of `V(G)` into parts. For path targets the parts are kept
/// in path order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessStructure {
    parts: Vec<Vec<Vertex>>,
}

impl WitnessStructure {
    /// Parts are sorted internally; their order is preserved.
    pub fn new(parts: Vec<Vec<Vertex>>) -> Self {
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        WitnessStructure { parts }
    }

    pub fn singletons(n: usize) -> Self {
        WitnessStructure {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Vec<Vertex>> {
        self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn big_parts(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.parts.iter().filter(|p| p.len() > 1)
    }

    /// Part index of every vertex, validating that the parts partition
    /// `0..n`.
    pub fn labels(&self, n: usize) -> Result<Vec<usize>> {
        let mut labels = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::NotAPartition(format!("part {i} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::NotAPartition(format!("vertex {v} out of range")));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
                }
                labels[v] = i;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
        }
        Ok(labels)
    }

    /// Pulls the structure back along `mapping`: each part becomes the union
    /// of the preimages of its vertices.
    pub fn lift(&self, mapping: &VertexMapping) -> WitnessStructure {
        let mut parts = vec![Vec::new(); self.parts.len()];
        let mut label = vec![0; mapping.target_len()];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                label[v] = i;
            }
        }
        for old in 0..mapping.source_len() {
            parts[label[mapping.apply(old)]].push(old);
        }
        WitnessStructure { parts }
    }
}

impl fmt::Display for WitnessStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for part in &self.parts {
            let line: Vec<String> = part.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        f.write_str(&out)
    }
}

/// Parses the one-part-per-line witness format.
pub fn parse_witness(text: &str) -> Result<WitnessStructure> {
    let mut parts = Vec::new();
    for (line, content) in content_lines(text) {
        let part = content
            .split_whitespace()
            .map(|f| {
                f.parse::<Vertex>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not a vertex id: {f:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        parts.push(part);
    }
    Ok(WitnessStructure::new(parts))
}

/// Quotient graph of `g` by the parts of `ws`, one vertex per part in part
/// order.
pub fn quotient(g: &Graph, ws: &WitnessStructure) -> Result<Graph> {
    let labels = ws.labels(g.vertex_count())?;
    if let Some(i) = ws.parts.iter().position(|p| !g.is_connected_set(p)) {
        return Err(Error::PartNotConnected(i));
    }
    Ok(g.quotient(&labels, ws.part_count()))
}

/// Number of contractions realizing the quotient: `n - parts`.
pub fn contraction_cost(ws: &WitnessStructure) -> usize {
    ws.vertex_count() - ws.part_count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotAPartition(String),
    DisconnectedPart(usize),
    BadQuotient,
    OverBudget { cost: usize, k: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotAPartition(why) => write!(f, "not a partition: {why}"),
            Rejection::DisconnectedPart(i) => write!(f, "part {i} is not connected"),
            Rejection::BadQuotient => f.write_str("quotient does not have the target shape"),
            Rejection::OverBudget { cost, k } => {
                write!(f, "needs {cost} contractions but the budget is {k}")
            }
        }
    }
}

/// Checks `ws` against `g`, reporting the first failure.
///
/// A tree target accepts any acyclic quotient, so disconnected inputs are
/// judged component by component.
pub fn check(
    g: &Graph,
    ws: &WitnessStructure,
    target: Target,
    k: usize,
) -> std::result::Result<(), Rejection> {
    let q = match quotient(g, ws) {
        Ok(q) => q,
        Err(Error::PartNotConnected(i)) => return Err(Rejection::DisconnectedPart(i)),
        Err(Error::NotAPartition(why)) => return Err(Rejection::NotAPartition(why)),
        Err(other) => return Err(Rejection::NotAPartition(other.to_string())),
    };
    let shaped = match target {
        Target::Path => q.is_path(),
        Target::Tree => q.is_forest(),
    };
    if !shaped {
        return Err(Rejection::BadQuotient);
    }
    let cost = contraction_cost(ws);
    if cost > k {
        return Err(Rejection::OverBudget { cost, k });
    }
    Ok(())
}

pub fn verify(g: &Graph, ws: &WitnessStructure, target: Target, k: usize) -> bool {
    check(g, ws, target, k).is_ok()
}

/// Structural bounds any witness structure of cost at most `k` obeys: no
/// part exceeds `k + 1` vertices, at most `k` parts are big, and big parts
/// hold at most `2k` vertices altogether.
pub fn check_budget_shape(ws: &WitnessStructure, k: usize) -> bool {
    let largest = ws.parts.iter().map(Vec::len).max().unwrap_or(0);
    let big = ws.big_parts().count();
    let big_vertices: usize = ws.big_parts().map(Vec::len).sum();
    largest <= k + 1 && big <= k && big_vertices <= 2 * k
}

/// How a color-coding solver picks its colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Independent uniform colorings from a seeded generator.
    Randomized(u64),
    /// Every member of a universal family.
    Deterministic,
}

/// Counters filled in by the solvers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Witness extractions attempted, over all blocks.
    pub extraction_calls: u64,
    /// Extractions per biconnected block (tree solver only).
    pub block_calls: Vec<u64>,
    /// Vertex count after kernelization (path solver only).
    pub reduced_vertices: Option<usize>,
}

/// Answer to a contractibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub witness: Option<WitnessStructure>,
    pub contractions_used: usize,
    pub stats: SolveStats,
}

impl Verdict {
    pub fn yes(witness: WitnessStructure, stats: SolveStats) -> Self {
        Verdict {
            answer: true,
            contractions_used: contraction_cost(&witness),
            witness: Some(witness),
            stats,
        }
    }

    pub fn no(stats: SolveStats) -> Self {
        Verdict {
            answer: false,
            witness: None,
            contractions_used: 0,
            stats,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(ws) if self.answer => {
                writeln!(f, "yes k_used={}", self.contractions_used)?;
                write!(f, "{ws}")
            }
            _ => writeln!(f, "no"),
        }
    }
}
