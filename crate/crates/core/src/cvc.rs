//! Exact minimum connected vertex cover with an upper bound.
//!
//! Small graphs are solved by trying vertex subsets in order of size.
//! Larger ones branch on an uncovered edge to enumerate vertex covers of
//! size at most the bound, then connect each cover's components with the
//! fewest extra vertices via a Dreyfus-Wagner style dynamic program over
//! subsets of components. Every connected vertex cover contains one of the
//! enumerated covers, so the minimum over leaves is exact.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Up to this many vertices subsets are enumerated directly.
pub const SUBSET_LIMIT: usize = 15;

/// A minimum connected vertex cover of size at most `upper_bound`, or
/// `None` if every connected vertex cover is larger.
///
/// The subset route returns the lexicographically smallest minimum cover;
/// the branching route returns the smallest among the covers it builds.
pub fn min_cvc(g: &Graph, upper_bound: usize) -> Result<Option<Vec<Vertex>>> {
    let route = if g.vertex_count() <= SUBSET_LIMIT {
        Route::Subsets
    } else {
        Route::Branching
    };
    min_cvc_via(g, upper_bound, route)
}

/// Algorithm behind [`min_cvc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Vertex subsets by increasing size, lexicographic within a size.
    Subsets,
    /// Vertex cover branching followed by Steiner connection.
    Branching,
}

/// [`min_cvc`] with an explicit choice of algorithm.
pub fn min_cvc_via(g: &Graph, upper_bound: usize, route: Route) -> Result<Option<Vec<Vertex>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Ok(Some(Vec::new()));
    }
    Ok(match route {
        Route::Subsets => by_subsets(g, upper_bound),
        Route::Branching => by_branching(g, upper_bound),
    })
}

pub(crate) fn is_connected_cover(g: &Graph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v]) && g.is_connected_set(set)
}

fn by_subsets(g: &Graph, upper_bound: usize) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    for size in 1..=upper_bound.min(n) {
        // lexicographic combinations
        let mut pick: Vec<Vertex> = (0..size).collect();
        loop {
            if is_connected_cover(g, &pick) {
                return Some(pick);
            }
            let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    None
}

fn by_branching(g: &Graph, upper_bound: usize) -> Option<Vec<Vertex>> {
    let mut search = Branching {
        g,
        edges: g.edges(),
        bound: upper_bound,
        in_cover: vec![false; g.vertex_count()],
        size: 0,
        best: None,
    };
    search.branch();
    search.best
}

struct Branching<'a> {
    g: &'a Graph,
    edges: Vec<(Vertex, Vertex)>,
    bound: usize,
    in_cover: Vec<bool>,
    size: usize,
    best: Option<Vec<Vertex>>,
}

impl Branching<'_> {
    fn limit(&self) -> usize {
        self.best.as_ref().map_or(self.bound, Vec::len)
    }

    fn branch(&mut self) {
        let uncovered = self
            .edges
            .iter()
            .find(|&&(u, v)| !self.in_cover[u] && !self.in_cover[v])
            .copied();
        let Some((u, v)) = uncovered else {
            self.complete();
            return;
        };
        if self.size >= self.limit() {
            return;
        }
        for w in [u, v] {
            self.in_cover[w] = true;
            self.size += 1;
            self.branch();
            self.size -= 1;
            self.in_cover[w] = false;
        }
    }

    fn complete(&mut self) {
        let cover: Vec<Vertex> = self.g.vertices().filter(|&v| self.in_cover[v]).collect();
        let room = self.limit() - cover.len().min(self.limit());
        let Some(extra) = steiner_connect(self.g, &cover, room) else {
            return;
        };
        let mut candidate = cover;
        candidate.extend(extra);
        candidate.sort_unstable();
        let better = match &self.best {
            None => candidate.len() <= self.bound,
            Some(b) => (candidate.len(), &candidate) < (b.len(), b),
        };
        if better {
            self.best = Some(candidate);
        }
    }
}

#[derive(Clone, Copy)]
enum Back {
    None,
    Leaf,
    Split(usize),
    Step(usize),
}

/// Fewest vertices outside `cover` whose addition makes `cover` connected,
/// provided at most `room` are needed.
fn steiner_connect(g: &Graph, cover: &[Vertex], room: usize) -> Option<Vec<Vertex>> {
    let sub = g.induced(cover);
    let comps = sub.components();
    let q = comps.len();
    if q <= 1 {
        return Some(Vec::new());
    }
    if room == 0 {
        return None;
    }
    // Nodes: 0..q are the cover components, q.. are the outside vertices.
    let mut node_of = vec![usize::MAX; g.vertex_count()];
    for (c, comp) in comps.iter().enumerate() {
        for &i in comp {
            node_of[cover[i]] = c;
        }
    }
    let outside: Vec<Vertex> = g.vertices().filter(|&v| node_of[v] == usize::MAX).collect();
    for (i, &v) in outside.iter().enumerate() {
        node_of[v] = q + i;
    }
    let nodes = q + outside.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (u, v) in g.edges() {
        let (a, b) = (node_of[u], node_of[v]);
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    let weight = |x: usize| usize::from(x >= q);

    const INF: usize = usize::MAX / 4;
    let full = (1usize << q) - 1;
    let mut dp = vec![vec![INF; nodes]; full + 1];
    let mut back = vec![vec![Back::None; nodes]; full + 1];
    for c in 0..q {
        dp[1 << c][c] = 0;
        back[1 << c][c] = Back::Leaf;
    }
    for set in 1..=full {
        if set.count_ones() > 1 {
            for x in 0..nodes {
                let mut sub = (set - 1) & set;
                while sub > 0 {
                    // each unordered split once
                    if sub < set ^ sub {
                        let cost = dp[sub][x] + dp[set ^ sub][x];
                        if cost < INF {
                            let cost = cost - weight(x);
                            if cost < dp[set][x] {
                                dp[set][x] = cost;
                                back[set][x] = Back::Split(sub);
                            }
                        }
                    }
                    sub = (sub - 1) & set;
                }
            }
        }
        // Bellman-Ford relaxation along edges; weights are 0/1 and small
        loop {
            let mut changed = false;
            for x in 0..nodes {
                if dp[set][x] >= INF {
                    continue;
                }
                for &y in &adj[x] {
                    let cost = dp[set][x] + weight(y);
                    if cost < dp[set][y] {
                        dp[set][y] = cost;
                        back[set][y] = Back::Step(x);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    if dp[full][0] > room {
        return None;
    }
    let mut chosen = Vec::new();
    collect(&back, full, 0, q, &mut chosen);
    chosen.sort_unstable();
    chosen.dedup();
    Some(chosen.into_iter().map(|x| outside[x - q]).collect())
}

fn collect(back: &[Vec<Back>], set: usize, x: usize, q: usize, out: &mut Vec<usize>) {
    if x >= q {
        out.push(x);
    }
    match back[set][x] {
        Back::Leaf | Back::None => {}
        Back::Split(sub) => {
            collect_below(back, sub, x, q, out);
            collect_below(back, set ^ sub, x, q, out);
        }
        Back::Step(prev) => collect(back, set, prev, q, out),
    }
}

/// Like [`collect`] but `x` itself was already recorded by the caller.
fn collect_below(back: &[Vec<Back>], set: usize, x: usize, q: usize, out: &mut Vec<usize>) {
    match back[set][x] {
        Back::Leaf | Back::None => {}
        Back::Split(sub) => {
            collect_below(back, sub, x, q, out);
            collect_below(back, set ^ sub, x, q, out);
        }
        Back::Step(prev) => collect(back, set, prev, q, out),
    }
}
