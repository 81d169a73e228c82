//! Bridge contraction rule and the linear vertex kernel for path
//! contractibility.
//!
//! A bridge whose removal leaves two sides with at least `k + 2` vertices
//! each can be contracted without changing the answer. Once no such bridge
//! remains, a yes-instance has at most `5k + 3` vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexMapping};
use crate::oracle::order_path_parts;
use crate::witness::{self, Target, WitnessStructure};

/// One application of the rule, recorded so witnesses can be pulled back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Graph before the contraction.
    pub before: Graph,
    /// The contracted bridge, in ids of `before`, smaller endpoint first.
    pub edge: (Vertex, Vertex),
    pub mapping: VertexMapping,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub reduced: Graph,
    pub k: usize,
    pub trace: Vec<TraceStep>,
    /// The reduced graph is too large to be a yes-instance.
    pub decided_no: bool,
}

impl KernelResult {
    /// Composite mapping from the original vertices to the reduced ones.
    pub fn mapping(&self) -> VertexMapping {
        let n = self
            .trace
            .first()
            .map_or(self.reduced.vertex_count(), |s| s.before.vertex_count());
        self.trace
            .iter()
            .fold(VertexMapping::identity(n), |acc, s| acc.then(&s.mapping))
    }

    /// Pulls a path witness structure of the reduced graph back to the
    /// original graph, splitting the part that absorbed each bridge.
    pub fn lift(&self, ws: &WitnessStructure) -> WitnessStructure {
        self.trace
            .iter()
            .rev()
            .fold(ws.clone(), |ws, step| lift_step(step, &ws))
    }
}

/// Vertices on `u`'s side when the edge `uv` is deleted.
fn side_of(g: &Graph, u: Vertex, v: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !seen[y] && !(x == u && y == v) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Reduced graph, vertex mapping and the contracted bridge.
pub type Rule1Step = (Graph, VertexMapping, (Vertex, Vertex));

/// Contracts the lexicographically smallest bridge whose two sides both
/// have at least `k + 2` vertices, if there is one.
pub fn rule1_step(g: &Graph, k: usize) -> Result<Option<Rule1Step>> {
    let n = g.vertex_count();
    for (u, v) in g.bridges()? {
        let left = side_of(g, u, v).iter().filter(|&&s| s).count();
        if left >= k + 2 && n - left >= k + 2 {
            let (h, mapping) = g.contract_edge(u, v)?;
            return Ok(Some((h, mapping, (u, v))));
        }
    }
    Ok(None)
}

/// Applies the rule until it no longer fires.
pub fn kernelize(g: &Graph, k: usize) -> Result<KernelResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = g.clone();
    let mut trace = Vec::new();
    while let Some((next, mapping, edge)) = rule1_step(&current, k)? {
        trace.push(TraceStep {
            before: std::mem::replace(&mut current, next),
            edge,
            mapping,
        });
    }
    let decided_no = current.vertex_count() > 5 * k + 3 && !current.is_path();
    Ok(KernelResult {
        reduced: current,
        k,
        trace,
        decided_no,
    })
}

fn lift_step(step: &TraceStep, ws: &WitnessStructure) -> WitnessStructure {
    let merged = ws.lift(&step.mapping);
    let (u, v) = step.edge;
    let g = &step.before;
    let u_side = side_of(g, u, v);
    let mut parts = merged.clone().into_parts();
    let Some(i) = parts.iter().position(|p| p.contains(&u)) else {
        return merged;
    };
    let (left, right): (Vec<Vertex>, Vec<Vertex>) = parts[i].iter().partition(|&&x| u_side[x]);
    parts[i] = left;
    parts.insert(i + 1, right);
    let split = WitnessStructure::new(order_path_parts(g, parts));
    if witness::verify(g, &split, Target::Path, g.vertex_count()) {
        split
    } else {
        merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_examples() {
        let (h, _, edge) = rule1_step(&Graph::path(8), 1).unwrap().unwrap();
        assert_eq!(edge, (2, 3));
        assert!(h.is_path() && h.vertex_count() == 7);
        assert!(rule1_step(&Graph::cycle(6), 2).unwrap().is_none());
        assert!(rule1_step(&Graph::path(5), 1).unwrap().is_none());
        assert_eq!(
            rule1_step(&Graph::from_edges(2, &[]).unwrap(), 0),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn kernel_examples() {
        let r = kernelize(&Graph::path(8), 1).unwrap();
        assert_eq!(r.reduced, Graph::path(5));
        assert_eq!(r.trace.len(), 3);
        assert!(!r.decided_no);
        let r = kernelize(&Graph::path(20), 1).unwrap();
        assert_eq!(r.reduced, Graph::path(5));
        // at k = 0 every bridge with two vertices on each side qualifies
        let r = kernelize(&Graph::path(5), 0).unwrap();
        assert_eq!(r.reduced, Graph::path(3));
        assert!(!r.decided_no);
    }

    #[test]
    fn large_no_instance_is_decided() {
        // a long cycle has no bridges and needs many contractions
        let r = kernelize(&Graph::cycle(12), 1).unwrap();
        assert!(r.decided_no);
        assert_eq!(r.reduced.vertex_count(), 12);
    }

    #[test]
    fn lifting_splits_the_absorbing_part() {
        // a triangle hanging off each end of a long path
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for i in 2..10 {
            edges.push((i, i + 1));
        }
        edges.extend([(10, 11), (11, 12), (10, 12)]);
        let g = Graph::from_edges(13, &edges).unwrap();
        let r = kernelize(&g, 2).unwrap();
        assert!(r.reduced.vertex_count() < 13);
        let best = crate::oracle::contractible_within(&r.reduced, Target::Path, 2)
            .unwrap()
            .unwrap();
        let lifted = r.lift(&best);
        assert!(witness::verify(&g, &lifted, Target::Path, 2));
        assert_eq!(r.mapping().source_len(), 13);
    }
}
