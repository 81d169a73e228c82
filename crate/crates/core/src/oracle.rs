//! Exhaustive solvers used as ground truth. Everything here enumerates
//! candidate solutions directly; none of it shares code paths with the
//! color-coding solvers.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::reductions::RbdsInstance;
use crate::witness::{self, Target, WitnessStructure};

/// Largest graph the plain enumeration oracles accept.
pub const MAX_ORACLE_VERTICES: usize = 12;
/// Largest blue side (and CVC input) the subset oracles accept.
pub const MAX_SUBSET_ORACLE: usize = 20;
/// Largest graph the pruned partition search accepts.
pub const MAX_SEARCH_VERTICES: usize = 64;

fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::InputTooLarge { what, got, limit })
    } else {
        Ok(())
    }
}

fn shaped(q: &Graph, target: Target) -> bool {
    match target {
        Target::Path => q.is_path(),
        Target::Tree => q.is_forest(),
    }
}

/// Union-find with undo, no path compression.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        true
    }

    fn checkpoint(&self) -> usize {
        self.history.len()
    }

    fn rollback(&mut self, to: usize) {
        while self.history.len() > to {
            let (a, b) = self.history.pop().unwrap();
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

/// Minimum number of contractions turning `g` into a path, found by
/// enumerating edge sets `F` of increasing size and testing whether the
/// quotient by the components of `(V, F)` is a path. `None` when `g` is
/// disconnected.
pub fn min_contractions_to_path(g: &Graph) -> Result<Option<usize>> {
    guard("vertices", g.vertex_count(), MAX_ORACLE_VERTICES)?;
    if !g.is_connected() {
        return Ok(None);
    }
    Ok(min_by_edge_sets(g, Target::Path))
}

/// Minimum total number of contractions making every component of `g` a
/// tree, by the same edge-set enumeration run per component.
pub fn min_contractions_to_tree(g: &Graph) -> Result<usize> {
    guard("vertices", g.vertex_count(), MAX_ORACLE_VERTICES)?;
    Ok(g.components()
        .iter()
        .map(|comp| min_by_edge_sets(&g.induced(comp), Target::Tree).expect("a connected graph contracts to a point"))
        .sum())
}

/// Contracting a non-forest edge set gives the same quotient as one of its
/// spanning forests, which has fewer edges, so only forests are enumerated.
fn min_by_edge_sets(g: &Graph, target: Target) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(0);
    }
    let edges = g.edges();
    let mut dsu = RollbackDsu::new(n);
    (0..n).find(|&size| pick_forest(g, &edges, 0, size, &mut dsu, target))
}

fn pick_forest(
    g: &Graph,
    edges: &[(Vertex, Vertex)],
    from: usize,
    remaining: usize,
    dsu: &mut RollbackDsu,
    target: Target,
) -> bool {
    if remaining == 0 {
        let mut roots: Vec<usize> = g.vertices().map(|v| dsu.find(v)).collect();
        let mut ids = roots.clone();
        ids.sort_unstable();
        ids.dedup();
        for r in roots.iter_mut() {
            *r = ids.binary_search(r).unwrap();
        }
        return shaped(&g.quotient(&roots, ids.len()), target);
    }
    for i in from..edges.len() {
        if edges.len() - i < remaining {
            break;
        }
        let mark = dsu.checkpoint();
        if dsu.union(edges[i].0, edges[i].1) {
            let hit = pick_forest(g, edges, i + 1, remaining - 1, dsu, target);
            dsu.rollback(mark);
            if hit {
                return true;
            }
        }
    }
    false
}

/// Calls `visit` with the label vector of every set partition of `0..n`
/// (restricted growth strings). Stops early when `visit` returns true.
fn for_each_partition<F>(n: usize, mut visit: F) -> bool
where
    F: FnMut(&[usize], usize) -> bool,
{
    fn rec<F: FnMut(&[usize], usize) -> bool>(
        labels: &mut Vec<usize>,
        n: usize,
        parts: usize,
        visit: &mut F,
    ) -> bool {
        if labels.len() == n {
            return visit(labels, parts);
        }
        for p in 0..=parts {
            labels.push(p);
            let stop = rec(labels, n, parts.max(p + 1), visit);
            labels.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(n), n, 0, &mut visit)
}

fn parts_from_labels(labels: &[usize], parts: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new(); parts];
    for (v, &l) in labels.iter().enumerate() {
        out[l].push(v);
    }
    out
}

/// Second, independent oracle: tries every partition of `V(g)` as a
/// witness structure and keeps the cheapest one that verifies.
pub fn min_contractions_by_partitions(g: &Graph, target: Target) -> Result<Option<usize>> {
    guard("vertices", g.vertex_count(), MAX_ORACLE_VERTICES)?;
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for_each_partition(n, |labels, parts| {
        let cost = n - parts;
        if best.is_some_and(|b| b <= cost) {
            return false;
        }
        let ws = WitnessStructure::new(parts_from_labels(labels, parts));
        if witness::verify(g, &ws, target, cost) {
            best = Some(cost);
        }
        false
    });
    Ok(best)
}

/// Decides whether `g` has a witness structure for `target` of cost at most
/// `k`, returning one if so.
///
/// Enumerates all partitions vertex by vertex (in maximum cardinality
/// search order), pruning a branch once its cost exceeds `k` or the
/// quotient of the assigned prefix already contains a cycle (or, for
/// paths, a vertex of degree three).
/// Both defects persist: parts only gain vertices and never merge, so
/// quotient edges are never lost.
pub fn contractible_within(
    g: &Graph,
    target: Target,
    k: usize,
) -> Result<Option<WitnessStructure>> {
    guard("vertices", g.vertex_count(), MAX_SEARCH_VERTICES)?;
    if target == Target::Path && !g.is_connected() {
        return Ok(None);
    }
    let mut search = PartitionSearch::new(g, target, k);
    Ok(search.run().then(|| search.witness()))
}

/// Minimum contractions via [`contractible_within`] with increasing budget.
pub fn min_contractions_search(g: &Graph, target: Target) -> Result<Option<usize>> {
    guard("vertices", g.vertex_count(), MAX_SEARCH_VERTICES)?;
    if target == Target::Path && !g.is_connected() {
        return Ok(None);
    }
    for k in 0..g.vertex_count().max(1) {
        if contractible_within(g, target, k)?.is_some() {
            return Ok(Some(k));
        }
    }
    unreachable!("contracting every component to a point always succeeds")
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    target: Target,
    budget: usize,
    order: Vec<Vertex>,
    position: Vec<usize>,
    label: Vec<usize>,
    parts: usize,
    joins: usize,
    qadj: Vec<u64>,
    qdeg: Vec<u8>,
    qedges: usize,
    dsu: RollbackDsu,
    members: Vec<Vec<Vertex>>,
}

impl<'a> PartitionSearch<'a> {
    fn new(g: &'a Graph, target: Target, budget: usize) -> Self {
        let n = g.vertex_count();
        let order: Vec<Vertex> = g
            .components()
            .into_iter()
            .flat_map(|comp| cardinality_order(g, &comp))
            .collect();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        PartitionSearch {
            g,
            target,
            budget,
            order,
            position,
            label: vec![usize::MAX; n],
            parts: 0,
            joins: 0,
            qadj: vec![0; n],
            qdeg: vec![0; n],
            qedges: 0,
            dsu: RollbackDsu::new(n),
            members: vec![Vec::new(); n],
        }
    }

    fn run(&mut self) -> bool {
        self.dfs(0)
    }

    fn witness(&self) -> WitnessStructure {
        let mut parts = parts_from_labels(&self.label, self.parts);
        if self.target == Target::Path {
            parts = order_path_parts(self.g, parts);
        }
        WitnessStructure::new(parts)
    }

    fn dfs(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.accept();
        }
        let v = self.order[i];
        // new part first: it costs nothing
        let candidates: Vec<usize> = std::iter::once(self.parts)
            .chain((0..self.parts).filter(|_| self.joins < self.budget))
            .collect();
        for p in candidates {
            let fresh = p == self.parts;
            if fresh {
                self.parts += 1;
            } else {
                self.joins += 1;
            }
            let mark = self.dsu.checkpoint();
            let mut added = Vec::new();
            self.members[p].push(v);
            let ok = self.assign(v, p, i, &mut added) && self.parts_can_connect(v, i);
            if ok && self.dfs(i + 1) {
                return true;
            }
            self.members[p].pop();
            for &(a, b) in &added {
                self.qadj[a] &= !(1 << b);
                self.qadj[b] &= !(1 << a);
                self.qdeg[a] -= 1;
                self.qdeg[b] -= 1;
                self.qedges -= 1;
            }
            self.dsu.rollback(mark);
            self.label[v] = usize::MAX;
            if fresh {
                self.parts -= 1;
            } else {
                self.joins -= 1;
            }
        }
        false
    }

    fn assign(&mut self, v: Vertex, p: usize, i: usize, added: &mut Vec<(usize, usize)>) -> bool {
        self.label[v] = p;
        for &w in self.g.neighbors(v) {
            if self.position[w] >= i {
                continue;
            }
            let q = self.label[w];
            if q == p || self.qadj[p] >> q & 1 == 1 {
                continue;
            }
            if !self.dsu.union(p, q) {
                return false;
            }
            if self.target == Target::Path && (self.qdeg[p] == 2 || self.qdeg[q] == 2) {
                return false;
            }
            self.qadj[p] |= 1 << q;
            self.qadj[q] |= 1 << p;
            self.qdeg[p] += 1;
            self.qdeg[q] += 1;
            self.qedges += 1;
            added.push((p, q));
        }
        true
    }

    /// A part whose assigned vertices split into several components, one of
    /// which has no unassigned neighbor left, can never become connected.
    fn parts_can_connect(&self, v: Vertex, i: usize) -> bool {
        let mut touched: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.position[w] <= i)
            .map(|&w| self.label[w])
            .chain(std::iter::once(self.label[v]))
            .collect();
        touched.sort_unstable();
        touched.dedup();
        touched.into_iter().all(|p| {
            let part = &self.members[p];
            if part.len() == 1 {
                return true;
            }
            let sub = self.g.induced(part);
            let comps = sub.components();
            comps.len() == 1
                || comps.iter().all(|comp| {
                    comp.iter().any(|&j| {
                        self.g
                            .neighbors(part[j])
                            .iter()
                            .any(|&w| self.position[w] > i)
                    })
                })
        })
    }

    fn accept(&self) -> bool {
        if self.target == Target::Path && self.qedges + 1 != self.parts {
            return false;
        }
        parts_from_labels(&self.label, self.parts)
            .iter()
            .all(|part| self.g.is_connected_set(part))
    }
}

/// Maximum cardinality search over one component, starting from its
/// highest-degree vertex: cycles close as early as possible.
fn cardinality_order(g: &Graph, comp: &[Vertex]) -> Vec<Vertex> {
    let mut weight = vec![0usize; g.vertex_count()];
    let mut done = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(comp.len());
    for _ in 0..comp.len() {
        let &v = comp
            .iter()
            .filter(|&&v| !done[v])
            .max_by_key(|&&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

/// Arranges the parts of a path witness structure in path order.
pub(crate) fn order_path_parts(g: &Graph, parts: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let mut labels = vec![0; g.vertex_count()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            labels[v] = i;
        }
    }
    let q = g.quotient(&labels, parts.len());
    let Some(start) = q.vertices().find(|&v| q.degree(v) <= 1) else {
        return parts;
    };
    let mut sequence = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = q.neighbors(cur).iter().find(|&&w| w != prev) {
        sequence.push(next);
        prev = cur;
        cur = next;
    }
    let mut slots: Vec<Option<Vec<Vertex>>> = parts.into_iter().map(Some).collect();
    sequence.iter().map(|&i| slots[i].take().unwrap()).collect()
}

/// Size of a minimum connected vertex cover, by subsets of increasing size.
pub fn min_cvc_bruteforce(g: &Graph) -> Result<usize> {
    guard("vertices", g.vertex_count(), MAX_SUBSET_ORACLE)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let edges = g.edges();
    let mut best = n;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if edges.iter().any(|&(u, v)| mask >> u & 1 == 0 && mask >> v & 1 == 0) {
            continue;
        }
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_connected_set(&set) {
            best = size;
        }
    }
    Ok(best)
}

/// Minimum size over all shatters of the connected graph `gx`: ordered
/// path witness structures with at most one big part whose first part
/// contains `left` and whose last part contains `right`.
pub fn min_shatter_bruteforce(gx: &Graph, left: &[Vertex], right: &[Vertex]) -> Result<usize> {
    guard("vertices", gx.vertex_count(), MAX_ORACLE_VERTICES)?;
    if !gx.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = gx.vertex_count();
    let mut best = n;
    for_each_partition(n, |labels, parts| {
        let parts = parts_from_labels(labels, parts);
        if parts.iter().filter(|p| p.len() > 1).count() > 1 {
            return false;
        }
        let size = parts.iter().map(Vec::len).max().unwrap();
        if size >= best {
            return false;
        }
        let ws = WitnessStructure::new(parts);
        if !witness::verify(gx, &ws, Target::Path, n) {
            return false;
        }
        let ordered = order_path_parts(gx, ws.into_parts());
        let first = &ordered[0];
        let last = &ordered[ordered.len() - 1];
        let holds = |a: &Vec<Vertex>, b: &Vec<Vertex>| {
            left.iter().all(|v| a.contains(v)) && right.iter().all(|v| b.contains(v))
        };
        if holds(first, last) || holds(last, first) {
            best = size;
        }
        false
    });
    Ok(best)
}

/// Smallest core of a star-shaped partition of `x`: a connected set `C`
/// containing every vertex of `x` with a neighbor outside `x`, such that
/// every edge inside `x` touches `C`. `None` if `x` is not connected.
pub fn min_star_shatter_bruteforce(g: &Graph, x: &[Vertex]) -> Result<Option<usize>> {
    guard("vertices", x.len(), MAX_SUBSET_ORACLE)?;
    let sub = g.induced(x);
    if !sub.is_connected() {
        return Ok(None);
    }
    let boundary = g.boundary(x);
    let required: u32 = x
        .iter()
        .enumerate()
        .filter(|(_, v)| boundary.contains(v))
        .fold(0, |m, (i, _)| m | 1 << i);
    let edges = sub.edges();
    let mut best = None;
    for mask in 1u32..(1 << x.len()) {
        if mask & required != required {
            continue;
        }
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| b <= size) {
            continue;
        }
        if edges.iter().any(|&(u, v)| mask >> u & 1 == 0 && mask >> v & 1 == 0) {
            continue;
        }
        let set: Vec<Vertex> = (0..x.len()).filter(|&i| mask >> i & 1 == 1).collect();
        if sub.is_connected_set(&set) {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Whether at most `t` blue vertices dominate every red vertex.
pub fn rbds_bruteforce(r: &RbdsInstance) -> Result<bool> {
    guard("blue vertices", r.blue, MAX_SUBSET_ORACLE)?;
    guard("red vertices", r.red, 32)?;
    let mut reach = vec![0u32; r.blue];
    for &(a, b) in &r.edges {
        reach[b] |= 1 << a;
    }
    let all: u32 = if r.red == 32 { u32::MAX } else { (1 << r.red) - 1 };
    Ok((0u32..(1 << r.blue))
        .filter(|m| m.count_ones() as usize <= r.t)
        .any(|m| {
            (0..r.blue)
                .filter(|&b| m >> b & 1 == 1)
                .fold(0, |acc, b| acc | reach[b])
                == all
        }))
}
