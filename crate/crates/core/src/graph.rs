//! Simple undirected graphs with dense vertex ids and the handful of
//! structural primitives the solvers are built on: contraction, connected
//! and monochromatic components, bridges and biconnected blocks.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted and duplicate free, so two graphs compare
/// equal exactly when they have the same labeled edge set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently merges parallel edges and
    /// drops loops. Used internally where multigraph artifacts are expected.
    pub(crate) fn from_edges_lossy<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges_lossy(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges_lossy(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Graph obtained by identifying vertices with equal labels. Labels must
    /// lie in `0..parts`; edges inside one class vanish.
    pub fn quotient(&self, labels: &[usize], parts: usize) -> Graph {
        Graph::from_edges_lossy(
            parts,
            self.edges().into_iter().map(|(u, v)| (labels[u], labels[v])),
        )
    }

    /// Contracts the edge `uv`. The merged vertex takes the smaller of the
    /// two ids and every id above the larger one shifts down by one.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<(Graph, VertexMapping)> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let map: Vec<Vertex> = self
            .vertices()
            .map(|x| match x.cmp(&hi) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let n = self.vertex_count() - 1;
        let graph = self.quotient(&map, n);
        Ok((graph, VertexMapping { map, len: n }))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_by(|_, _| true)
    }

    /// Components of the graph that keeps only edges accepted by `keep`.
    pub(crate) fn components_by<F>(&self, keep: F) -> Vec<Vec<Vertex>>
    where
        F: Fn(Vertex, Vertex) -> bool,
    {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] && keep(v, w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Whether `set` induces a connected subgraph. The empty set does not.
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        match set.len() {
            0 => false,
            1 => true,
            _ => self.induced(set).is_connected(),
        }
    }

    /// Connected, with every vertex of degree at most two and exactly two
    /// of degree one, or at most two vertices in total.
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if !self.is_connected() {
            return false;
        }
        if n <= 2 {
            return true;
        }
        let mut ends = 0;
        for v in self.vertices() {
            match self.degree(v) {
                1 => ends += 1,
                2 => {}
                _ => return false,
            }
        }
        ends == 2
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.is_connected()
            && self.edge_count() + 1 == self.vertex_count()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Every edge whose removal disconnects the graph, as `(u, v)` with
    /// `u < v`, sorted.
    pub fn bridges(&self) -> Result<Vec<(Vertex, Vertex)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.lowpoint_scan().bridges)
    }

    /// Biconnected blocks as sorted vertex sets, ordered by their sorted
    /// contents. A single isolated vertex forms its own block.
    pub fn biconnected_components(&self) -> Result<Vec<Vec<Vertex>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.vertex_count() == 1 {
            return Ok(vec![vec![0]]);
        }
        Ok(self.lowpoint_scan().blocks)
    }

    /// Iterative Hopcroft–Tarjan DFS collecting bridges and blocks of every
    /// component that has at least one edge.
    fn lowpoint_scan(&self) -> Lowpoints {
        const UNSEEN: usize = usize::MAX;
        let n = self.vertex_count();
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut bridges = Vec::new();
        let mut blocks = Vec::new();
        let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, UNSEEN, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent, i) = *frame;
                if i < self.adj[v].len() {
                    frame.2 += 1;
                    let w = self.adj[v][i];
                    if disc[w] == UNSEEN {
                        edge_stack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                let Some(&(u, _, _)) = stack.last() else {
                    continue;
                };
                low[u] = low[u].min(low[v]);
                if low[v] > disc[u] {
                    bridges.push((u.min(v), u.max(v)));
                }
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
        bridges.sort_unstable();
        blocks.sort();
        Lowpoints { bridges, blocks }
    }

    /// Partition into maximal connected sets of equally colored vertices.
    pub fn monochromatic_components(&self, coloring: &TwoColoring) -> Result<Vec<Vec<Vertex>>> {
        coloring.check_len(self.vertex_count())?;
        Ok(self.components_by(|u, v| coloring.color(u) == coloring.color(v)))
    }

    /// Vertices of `set` with at least one neighbor outside `set`.
    pub fn boundary(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let mut out: Vec<Vertex> = set
            .iter()
            .copied()
            .filter(|&v| self.adj[v].iter().any(|&w| !inside[w]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Isomorphism test. Exhaustive for up to eight vertices; larger graphs
    /// are compared by their labeled edge lists.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        if n > 8 {
            return self.edges() == other.edges();
        }
        let mut deg_a: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<usize> = other.vertices().map(|v| other.degree(v)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return false;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_isomorphism(other, 0, &mut image, &mut used)
    }

    fn extend_isomorphism(
        &self,
        other: &Graph,
        v: Vertex,
        image: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if v == self.vertex_count() {
            return true;
        }
        for cand in other.vertices() {
            if used[cand] || other.degree(cand) != self.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| self.has_edge(u, v) == other.has_edge(image[u], cand));
            if !consistent {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if self.extend_isomorphism(other, v + 1, image, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
}

struct Lowpoints {
    bridges: Vec<(Vertex, Vertex)>,
    blocks: Vec<Vec<Vertex>>,
}

/// Surjection from the vertices of one graph onto those of a derived graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMapping {
    map: Vec<Vertex>,
    len: usize,
}

impl VertexMapping {
    pub fn identity(n: usize) -> Self {
        VertexMapping {
            map: (0..n).collect(),
            len: n,
        }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn target_len(&self) -> usize {
        self.len
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }

    /// Old vertices mapped to `new`, sorted.
    pub fn preimage(&self, new: Vertex) -> Vec<Vertex> {
        (0..self.map.len()).filter(|&v| self.map[v] == new).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMapping) -> VertexMapping {
        VertexMapping {
            map: self.map.iter().map(|&v| next.apply(v)).collect(),
            len: next.len,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    pub fn from_bit(bit: bool) -> Color {
        if bit {
            Color::Two
        } else {
            Color::One
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

/// An arbitrary (not necessarily proper) assignment of two colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        TwoColoring { colors }
    }

    pub fn constant(n: usize, color: Color) -> Self {
        TwoColoring {
            colors: vec![color; n],
        }
    }

    /// Vertex `v` gets color two iff bit `v` of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        TwoColoring {
            colors: (0..n).map(|v| Color::from_bit(mask >> v & 1 == 1)).collect(),
        }
    }

    pub fn from_fn<F: FnMut(Vertex) -> Color>(n: usize, f: F) -> Self {
        TwoColoring {
            colors: (0..n).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Coloring of the subgraph induced by `vertices` (same order).
    pub fn restrict(&self, vertices: &[Vertex]) -> TwoColoring {
        TwoColoring {
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
        }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.colors.len() == n {
            Ok(())
        } else {
            Err(Error::ColoringSize {
                expected: n,
                got: self.colors.len(),
            })
        }
    }
}
