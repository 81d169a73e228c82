//! Polynomial parameter transformation from Red-Blue Domination to
//! Tree-Contractibility.
//!
//! The red side `A` gets a new apex `a` adjacent to every blue vertex, and
//! each red vertex `u` is tied to `a` by `k + 1` private vertices of degree
//! two. With `k = |A| + t`, a dominating set of at most `t` blue vertices
//! exists iff the resulting graph is `k`-contractible to a tree.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::{content_lines, parse_numbers};
use crate::oracle;
use crate::witness::Target;

/// Bipartite graph with `red` vertices `0..red`, `blue` vertices `0..blue`
/// and edges `(red_index, blue_index)`; budget `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbdsInstance {
    pub red: usize,
    pub blue: usize,
    pub edges: Vec<(usize, usize)>,
    pub t: usize,
}

impl RbdsInstance {
    /// Every red vertex needs a blue neighbor and `t <= |A|`; edges must be
    /// in range and distinct.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.edges {
            if a >= self.red || b >= self.blue {
                return Err(Error::InvalidInstance(format!("edge {a}-{b} out of range")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidInstance(format!("duplicate edge {a}-{b}")));
            }
        }
        if let Some(a) = (0..self.red).find(|&a| !self.edges.iter().any(|e| e.0 == a)) {
            return Err(Error::InvalidInstance(format!("red vertex {a} has no neighbor")));
        }
        if self.t > self.red {
            return Err(Error::InvalidInstance(format!(
                "budget {} exceeds the {} red vertices",
                self.t, self.red
            )));
        }
        Ok(())
    }

    /// Parameter of the produced tree instance.
    pub fn tree_budget(&self) -> usize {
        self.red + self.t
    }
}

/// Parses `|A| |B| t` followed by edge lines `i j` (red `i`, blue `j`).
pub fn parse_bipartite(text: &str) -> Result<RbdsInstance> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `|A| |B| t` header".into(),
    })?;
    let [red, blue, t] = parse_numbers::<3>(line, header)?;
    let edges = lines
        .map(|(line, text)| parse_numbers::<2>(line, text).map(|[a, b]| (a, b)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RbdsInstance { red, blue, edges, t })
}

pub fn write_bipartite(r: &RbdsInstance) -> String {
    let mut out = format!("{} {} {}\n", r.red, r.blue, r.t);
    for &(a, b) in &r.edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Vertex layout of the produced graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub red: usize,
    pub blue: usize,
    pub k: usize,
}

impl GadgetLayout {
    pub fn red_vertex(&self, i: usize) -> Vertex {
        i
    }

    pub fn apex(&self) -> Vertex {
        self.red
    }

    pub fn blue_vertex(&self, j: usize) -> Vertex {
        self.red + 1 + j
    }

    /// The `copy`-th private connector between red vertex `i` and the apex.
    pub fn connector(&self, i: usize, copy: usize) -> Vertex {
        self.red + 1 + self.blue + i * (self.k + 1) + copy
    }

    pub fn vertex_count(&self) -> usize {
        self.red + 1 + self.blue + self.red * (self.k + 1)
    }
}

/// Builds the tree-contractibility instance `(G', k)`.
pub fn rbds_to_tree_instance(r: &RbdsInstance) -> Result<(Graph, usize)> {
    r.validate()?;
    let k = r.tree_budget();
    let layout = GadgetLayout {
        red: r.red,
        blue: r.blue,
        k,
    };
    let mut edges: Vec<(Vertex, Vertex)> = r
        .edges
        .iter()
        .map(|&(a, b)| (layout.red_vertex(a), layout.blue_vertex(b)))
        .collect();
    edges.extend((0..r.blue).map(|j| (layout.apex(), layout.blue_vertex(j))));
    for i in 0..r.red {
        for copy in 0..=k {
            let c = layout.connector(i, copy);
            edges.push((layout.red_vertex(i), c));
            edges.push((layout.apex(), c));
        }
    }
    let g = Graph::from_edges(layout.vertex_count(), &edges)?;
    Ok((g, k))
}

/// Whether both sides of the transformation agree on `r`, each decided by
/// exhaustive search.
pub fn equivalence_check(r: &RbdsInstance) -> Result<bool> {
    let (g, k) = rbds_to_tree_instance(r)?;
    let dominated = oracle::rbds_bruteforce(r)?;
    let contractible = oracle::contractible_within(&g, Target::Tree, k)?.is_some();
    Ok(dominated == contractible)
}
