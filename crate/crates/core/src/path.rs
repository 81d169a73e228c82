//! Color coding for path contractibility.
//!
//! The monochromatic components of a 2-coloring that is compatible with a
//! path witness structure are themselves arranged along a path, and each
//! holds at most one big witness set. Refining every component into a
//! minimum shatter therefore recovers a witness structure with at least as
//! many parts as the one the coloring was compatible with.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{Color, Graph, TwoColoring, Vertex};
use crate::kernel::kernelize;
use crate::oracle::order_path_parts;
use crate::universal::try_build_universal;
use crate::witness::{
    self, contraction_cost, Mode, SolveStats, Target, Verdict, WitnessStructure,
};

/// Monochromatic components in path order with their boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComponents {
    pub components: Vec<Vec<Vertex>>,
    /// Vertices of each component adjacent to the previous component.
    pub left: Vec<Vec<Vertex>>,
    /// Vertices of each component adjacent to the next component.
    pub right: Vec<Vec<Vertex>>,
}

/// A path witness structure of one component with at most one big part,
/// the left boundary in the first part and the right boundary in the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shatter {
    pub parts: Vec<Vec<Vertex>>,
}

impl Shatter {
    pub fn size(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Orders the monochromatic components along their quotient path, or
/// `None` if the quotient is not a path.
pub fn order_components(g: &Graph, c: &TwoColoring) -> Result<Option<OrderedComponents>> {
    let comps = g.monochromatic_components(c)?;
    let mut labels = vec![0; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            labels[v] = i;
        }
    }
    if !g.quotient(&labels, comps.len()).is_path() {
        return Ok(None);
    }
    let components = order_path_parts(g, comps);
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            labels[v] = i;
        }
    }
    let touching = |comp: &[Vertex], other: Option<usize>| -> Vec<Vertex> {
        let Some(other) = other else {
            return Vec::new();
        };
        comp.iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&w| labels[w] == other))
            .collect()
    };
    let r = components.len();
    let left = (0..r)
        .map(|i| touching(&components[i], i.checked_sub(1)))
        .collect();
    let right = (0..r)
        .map(|i| touching(&components[i], (i + 1 < r).then_some(i + 1)))
        .collect();
    Ok(Some(OrderedComponents {
        components,
        left,
        right,
    }))
}

/// A minimum-size shatter of component `i`.
///
/// Every shatter consists of a big part `B`, its path neighbors `x` (left)
/// and `y` (right) when present, and two induced paths hanging off `x` and
/// `y`; the components of `G[X - {x, y}]` are exactly `B` and those paths.
/// All choices of `x`, `y` and `B` are tried. Among shatters of equal size
/// the order is: all singletons, big part first, big part last, big part
/// interior, single part; then smaller vertex ids.
pub fn min_shatter(g: &Graph, oc: &OrderedComponents, i: usize) -> Shatter {
    let x_set = &oc.components[i];
    let gx = g.induced(x_set);
    let local = |set: &[Vertex]| -> Vec<bool> {
        let mut mask = vec![false; x_set.len()];
        for v in set {
            mask[x_set.binary_search(v).expect("boundary vertex outside component")] = true;
        }
        mask
    };
    let left = local(&oc.left[i]);
    let right = local(&oc.right[i]);
    let best = local_min_shatter(&gx, &left, &right);
    Shatter {
        parts: best
            .into_iter()
            .map(|p| p.into_iter().map(|v| x_set[v]).collect())
            .collect(),
    }
}

/// Minimum shatter of a connected graph with boundary masks, in local ids.
fn local_min_shatter(gx: &Graph, left: &[bool], right: &[bool]) -> Vec<Vec<Vertex>> {
    let n = gx.vertex_count();
    let anchors: Vec<Option<Vertex>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    type Scored = ((usize, u8), Vec<Vec<Vertex>>);
    let mut best: Option<Scored> = None;
    for &x in &anchors {
        for &y in &anchors {
            if x.is_some() && x == y {
                continue;
            }
            let rest: Vec<Vertex> = (0..n).filter(|&v| Some(v) != x && Some(v) != y).collect();
            if rest.is_empty() {
                continue;
            }
            let comps: Vec<Vec<Vertex>> = gx
                .induced(&rest)
                .components()
                .into_iter()
                .map(|c| c.into_iter().map(|v| rest[v]).collect())
                .collect();
            if comps.len() > 3 {
                continue;
            }
            for (b, big) in comps.iter().enumerate() {
                let class = match (x, y) {
                    _ if big.len() == 1 => 0,
                    (None, Some(_)) => 1,
                    (Some(_), None) => 2,
                    (Some(_), Some(_)) => 3,
                    (None, None) => 4,
                };
                let key = (big.len(), class);
                if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                let others: Vec<&Vec<Vertex>> =
                    comps.iter().enumerate().filter(|&(j, _)| j != b).map(|(_, c)| c).collect();
                for assignment in hanging_assignments(&others, x.is_some(), y.is_some()) {
                    let (before, after) = assignment;
                    let Some(seq) = assemble(gx, x, y, big, before, after) else {
                        continue;
                    };
                    if is_shatter(gx, &seq, left, right) {
                        best = Some((key, seq));
                        break;
                    }
                }
            }
        }
    }
    best.expect("the whole component is always a shatter").1
}

type Hanging<'a> = (Option<&'a Vec<Vertex>>, Option<&'a Vec<Vertex>>);

/// Ways to place the non-big components before `x` and after `y`.
fn hanging_assignments<'a>(others: &[&'a Vec<Vertex>], has_x: bool, has_y: bool) -> Vec<Hanging<'a>> {
    match (others, has_x, has_y) {
        ([], _, _) => vec![(None, None)],
        ([a], true, true) => vec![(Some(a), None), (None, Some(a))],
        ([a], true, false) => vec![(Some(a), None)],
        ([a], false, true) => vec![(None, Some(a))],
        ([a, b], true, true) => vec![(Some(a), Some(b)), (Some(b), Some(a))],
        _ => Vec::new(),
    }
}

/// Orders a hanging path so that the end adjacent to `anchor` comes first.
fn hanging_path(gx: &Graph, set: &[Vertex], anchor: Vertex) -> Option<Vec<Vertex>> {
    let sub = gx.induced(set);
    if !sub.is_path() {
        return None;
    }
    let start = sub
        .vertices()
        .find(|&v| sub.degree(v) <= 1 && gx.has_edge(set[v], anchor))?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = sub.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order.into_iter().map(|v| set[v]).collect())
}

fn assemble(
    gx: &Graph,
    x: Option<Vertex>,
    y: Option<Vertex>,
    big: &[Vertex],
    before: Option<&Vec<Vertex>>,
    after: Option<&Vec<Vertex>>,
) -> Option<Vec<Vec<Vertex>>> {
    let mut seq = Vec::new();
    if let (Some(set), Some(x)) = (before, x) {
        let mut p = hanging_path(gx, set, x)?;
        p.reverse();
        seq.extend(p.into_iter().map(|v| vec![v]));
    }
    seq.extend(x.map(|v| vec![v]));
    seq.push(big.to_vec());
    seq.extend(y.map(|v| vec![v]));
    if let (Some(set), Some(y)) = (after, y) {
        seq.extend(hanging_path(gx, set, y)?.into_iter().map(|v| vec![v]));
    }
    Some(seq)
}

/// Whether `seq` is a path witness structure of `gx` in the given order
/// with the boundaries in its end parts.
fn is_shatter(gx: &Graph, seq: &[Vec<Vertex>], left: &[bool], right: &[bool]) -> bool {
    let mut label = vec![usize::MAX; gx.vertex_count()];
    for (i, part) in seq.iter().enumerate() {
        for &v in part {
            label[v] = i;
        }
    }
    if !gx.edges().iter().all(|&(u, v)| label[u].abs_diff(label[v]) <= 1) {
        return false;
    }
    let linked = (1..seq.len()).all(|i| {
        seq[i - 1]
            .iter()
            .any(|&u| gx.neighbors(u).iter().any(|&w| label[w] == i))
    });
    let last = seq.len() - 1;
    linked
        && seq.iter().all(|p| gx.is_connected_set(p))
        && (0..gx.vertex_count()).all(|v| (!left[v] || label[v] == 0) && (!right[v] || label[v] == last))
}

/// Replaces every monochromatic component by a minimum shatter; `None` if
/// the components do not form a path.
pub fn extract_path_witness(g: &Graph, c: &TwoColoring) -> Result<Option<WitnessStructure>> {
    let Some(oc) = order_components(g, c)? else {
        return Ok(None);
    };
    let parts: Vec<Vec<Vertex>> = (0..oc.components.len())
        .flat_map(|i| min_shatter(g, &oc, i).parts)
        .collect();
    let ws = WitnessStructure::new(parts);
    debug_assert!(witness::verify(g, &ws, Target::Path, g.vertex_count()));
    Ok(Some(ws))
}

pub fn solve_path_randomized(g: &Graph, k: usize, seed: u64) -> Result<Verdict> {
    solve_path(g, k, Mode::Randomized(seed))
}

pub fn solve_path_deterministic(g: &Graph, k: usize) -> Result<Verdict> {
    solve_path(g, k, Mode::Deterministic)
}

/// Number of random colorings tried on a kernel with `reduced` vertices.
pub fn randomized_trials(k: usize, reduced: usize) -> u64 {
    let four_k = 1u64.checked_shl(2 * k as u32).filter(|_| 2 * k < 64).unwrap_or(u64::MAX);
    let all = 1u64.checked_shl(reduced as u32).filter(|_| reduced < 64).unwrap_or(u64::MAX);
    four_k.min(all)
}

/// Decides whether `g` is `k`-contractible to a path. Disconnected graphs
/// are never contractible to a path.
pub fn solve_path(g: &Graph, k: usize, mode: Mode) -> Result<Verdict> {
    let mut stats = SolveStats::default();
    if !g.is_connected() {
        return Ok(Verdict::no(stats));
    }
    let n = g.vertex_count();
    if g.is_path() {
        return Ok(Verdict::yes(WitnessStructure::singletons(n), stats));
    }
    if k + 1 >= n {
        return Ok(Verdict::yes(WitnessStructure::new(vec![g.vertices().collect()]), stats));
    }
    let kernel = kernelize(g, k)?;
    let reduced = &kernel.reduced;
    let m = reduced.vertex_count();
    stats.reduced_vertices = Some(m);
    if kernel.decided_no {
        return Ok(Verdict::no(stats));
    }
    let attempt = |c: &TwoColoring, stats: &mut SolveStats| -> Result<Option<WitnessStructure>> {
        stats.extraction_calls += 1;
        Ok(extract_path_witness(reduced, c)?
            .filter(|ws| contraction_cost(ws) <= k)
            .map(|ws| kernel.lift(&ws))
            .filter(|ws| witness::verify(g, ws, Target::Path, k)))
    };
    match mode {
        Mode::Randomized(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..randomized_trials(k, m) {
                let c = TwoColoring::from_fn(m, |_| Color::from_bit(rng.random::<bool>()));
                if let Some(ws) = attempt(&c, &mut stats)? {
                    return Ok(Verdict::yes(ws, stats));
                }
            }
        }
        Mode::Deterministic => {
            let family = try_build_universal(m, (2 * k).min(m))?;
            for c in &family.members {
                if let Some(ws) = attempt(c, &mut stats)? {
                    return Ok(Verdict::yes(ws, stats));
                }
            }
        }
    }
    Ok(Verdict::no(stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{min_contractions_to_path, min_shatter_bruteforce};

    fn coloring(bits: &[u8]) -> TwoColoring {
        TwoColoring::new(bits.iter().map(|&b| Color::from_bit(b == 2)).collect())
    }

    #[test]
    fn ordering_examples() {
        let oc = order_components(&Graph::cycle(4), &coloring(&[1, 1, 2, 2]))
            .unwrap()
            .unwrap();
        assert_eq!(oc.components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(oc.left[0], Vec::<Vertex>::new());
        assert_eq!(oc.right[0], vec![0, 1]);
        assert!(order_components(&Graph::complete(4), &coloring(&[1, 1, 2, 2]))
            .unwrap()
            .is_some());
        assert!(order_components(&Graph::cycle(6), &coloring(&[1, 2, 1, 2, 1, 2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn triangle_shatter_prefers_big_part_first() {
        // triangle 1,2,3 between a left neighbor 0 and a right neighbor 4
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (2, 4)]).unwrap();
        let oc = order_components(&g, &coloring(&[1, 2, 2, 2, 1])).unwrap().unwrap();
        assert_eq!(oc.components[1], vec![1, 2, 3]);
        let s = min_shatter(&g, &oc, 1);
        assert_eq!(s.parts, vec![vec![1, 3], vec![2]]);
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn path_and_forced_whole_shatters() {
        let g = Graph::path(6);
        let oc = order_components(&g, &coloring(&[1, 2, 2, 2, 2, 1])).unwrap().unwrap();
        assert_eq!(min_shatter(&g, &oc, 1).size(), 1);
        // both vertices of each C4 component touch the other component
        let oc = order_components(&Graph::cycle(4), &coloring(&[1, 1, 2, 2]))
            .unwrap()
            .unwrap();
        assert_eq!(min_shatter(&Graph::cycle(4), &oc, 0).size(), 2);
    }

    #[test]
    fn extraction_examples() {
        let ws = extract_path_witness(&Graph::path(4), &coloring(&[1, 1, 1, 1]))
            .unwrap()
            .unwrap();
        assert_eq!((ws.part_count(), contraction_cost(&ws)), (4, 0));
        let ws = extract_path_witness(&Graph::cycle(4), &coloring(&[1, 1, 2, 2]))
            .unwrap()
            .unwrap();
        assert_eq!(ws.parts(), &[vec![0, 1], vec![2, 3]]);
        assert!(extract_path_witness(&Graph::cycle(6), &coloring(&[1, 2, 1, 2, 1, 2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn shatter_matches_bruteforce_on_monochromatic_graphs() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::star(3), Graph::path(4)] {
            let c = TwoColoring::constant(g.vertex_count(), Color::One);
            let oc = order_components(&g, &c).unwrap().unwrap();
            let n = g.vertex_count();
            let expect = min_shatter_bruteforce(&g, &[], &[]).unwrap();
            assert_eq!(min_shatter(&g, &oc, 0).size(), expect, "{g:?}");
            assert_eq!(local_min_shatter(&g, &vec![false; n], &vec![false; n]).len() + expect, n + 1);
        }
    }

    #[test]
    fn solver_examples() {
        let v = solve_path_randomized(&Graph::path(5), 0, 7).unwrap();
        assert!(v.answer && v.contractions_used == 0);
        assert!(!solve_path_randomized(&Graph::cycle(4), 1, 7).unwrap().answer);
        for (g, k, expect) in [
            (Graph::cycle(4), 2, true),
            (Graph::cycle(4), 1, false),
            (Graph::complete(4), 2, true),
            (Graph::complete(4), 1, false),
        ] {
            let v = solve_path_deterministic(&g, k).unwrap();
            assert_eq!(v.answer, expect, "{g:?} k={k}");
            if let Some(ws) = &v.witness {
                assert!(witness::verify(&g, ws, Target::Path, k));
            }
        }
        assert!(!solve_path_deterministic(&Graph::from_edges(2, &[]).unwrap(), 3)
            .unwrap()
            .answer);
    }

    #[test]
    fn deterministic_matches_oracle_on_cycles_and_cliques() {
        for n in 3..=7 {
            for g in [Graph::cycle(n), Graph::complete(n)] {
                let min = min_contractions_to_path(&g).unwrap().unwrap();
                for k in 0..n {
                    assert_eq!(solve_path_deterministic(&g, k).unwrap().answer, min <= k);
                }
            }
        }
    }

    #[test]
    fn randomized_respects_trial_ceiling() {
        let g = Graph::cycle(8);
        for k in 0..4 {
            let v = solve_path_randomized(&g, k, 1).unwrap();
            let m = v.stats.reduced_vertices.unwrap_or(8);
            assert!(v.stats.extraction_calls <= randomized_trials(k, m));
        }
        assert_eq!(randomized_trials(40, 5), 32);
        assert_eq!(randomized_trials(2, 30), 16);
    }
}
