//! Instance generators: seeded random graphs, named families, and the list
//! of all connected graphs on a few vertices up to isomorphism.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

/// Largest vertex count accepted by [`connected_graphs`] and
/// [`canonical_code`].
pub const MAX_ENUMERATED: usize = 9;

/// A connected graph: a uniformly shuffled random recursive tree plus
/// every other pair independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let mut present = HashSet::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        let e = (order[i].min(order[j]), order[i].max(order[j]));
        present.insert(e);
        edges.push(e);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// `legs` paths of `leg_len` vertices each, joined at center `0`.
pub fn spider(legs: usize, leg_len: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..leg_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &edges).expect("spider edges are simple")
}

/// Canonical form for small graphs: the least adjacency bit string over
/// all labelings that list vertices by a degree-based refinement class.
/// Two graphs are isomorphic iff their codes are equal.
///
/// # Panics
/// If the graph has more than [`MAX_ENUMERATED`] vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_ENUMERATED, "canonical code needs at most {MAX_ENUMERATED} vertices");
    let invariant = |v: Vertex| {
        let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        around.sort_unstable();
        (g.degree(v), around)
    };
    let mut keyed: Vec<_> = g.vertices().map(|v| (invariant(v), v)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *key {
            classes.last_mut().unwrap().push(*v);
        } else {
            classes.push(vec![*v]);
        }
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut best = u64::MAX;
    let mut labeling = Vec::with_capacity(n);
    let mut used = vec![false; n];
    place(&classes, 0, &adj, &mut labeling, &mut used, &mut best);
    best
}

fn code_of(labeling: &[Vertex], adj: &[u32]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..labeling.len() {
        for j in i + 1..labeling.len() {
            if adj[labeling[i]] >> labeling[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn place(
    classes: &[Vec<Vertex>],
    class: usize,
    adj: &[u32],
    labeling: &mut Vec<Vertex>,
    used: &mut [bool],
    best: &mut u64,
) {
    let Some(members) = classes.get(class) else {
        *best = (*best).min(code_of(labeling, adj));
        return;
    };
    let placed_here = labeling.iter().filter(|v| members.contains(v)).count();
    if placed_here == members.len() {
        place(classes, class + 1, adj, labeling, used, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            labeling.push(v);
            place(classes, class, adj, labeling, used, best);
            labeling.pop();
            used[v] = false;
        }
    }
}

/// One representative of every connected graph on `n` vertices, up to
/// isomorphism, in a fixed order.
///
/// Each is obtained from a connected graph on `n - 1` vertices by adding a
/// vertex with a nonempty neighborhood: deleting a leaf of a spanning tree
/// keeps a graph connected.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATED, "enumeration is limited to {MAX_ENUMERATED} vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base = g.edges();
            for mask in 1u32..1 << (size - 1) {
                let mut edges = base.clone();
                edges.extend((0..size - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, size - 1)));
                let h = Graph::from_edges(size, &edges).expect("extension edges are simple");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_of_connected_graphs() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_code_identifies_relabelings() {
        let p = Graph::path(5);
        let relabeled = Graph::from_edges(5, &[(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_code(&p), canonical_code(&relabeled));
        assert_ne!(canonical_code(&p), canonical_code(&spider(3, 1).induced(&[0, 1, 2, 3])));
        assert_ne!(canonical_code(&Graph::cycle(5)), canonical_code(&p));
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        for n in 1..12 {
            let g = random_connected(n, 0.3, &mut a);
            assert!(g.is_connected());
            assert_eq!(g, random_connected(n, 0.3, &mut b));
        }
        assert!(random_connected(6, 0.0, &mut a).is_tree());
    }

    #[test]
    fn spider_shape() {
        let s = spider(3, 2);
        assert_eq!((s.vertex_count(), s.degree(0)), (7, 3));
        assert!(s.is_tree());
    }
}
