//! Color coding for tree contractibility.
//!
//! The minimum number of contractions to a tree is the sum of the minima of
//! the biconnected blocks, so each block is solved on its own. Within a
//! 2-connected block a compatible coloring splits into monochromatic
//! components that each hold at most one big witness set; refining each
//! component into a connected vertex cover core plus singletons
//! (a star-shatter) keeps the quotient a tree and does not lose parts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cvc::min_cvc;
use crate::error::Result;
use crate::graph::{Color, Graph, TwoColoring, Vertex};
use crate::universal::try_build_universal;
use crate::witness::{self, contraction_cost, Mode, SolveStats, Target, Verdict, WitnessStructure};

/// Core and singleton leaves of a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarShatter {
    pub core: Vec<Vertex>,
    pub leaves: Vec<Vertex>,
}

/// Vertices of `x` with a neighbor outside `x`.
pub fn boundary(g: &Graph, x: &[Vertex]) -> Vec<Vertex> {
    g.boundary(x)
}

/// A star-shatter of `x` with the smallest core, provided the core fits in
/// `d` vertices.
///
/// Computed as a minimum connected vertex cover of `G[x]` with a pendant
/// vertex hung on every boundary vertex; a minimum cover never uses a
/// pendant, so it contains the whole boundary.
pub fn min_star_shatter(g: &Graph, x: &[Vertex], d: usize) -> Result<Option<StarShatter>> {
    let mut x = x.to_vec();
    x.sort_unstable();
    if x.len() <= 1 {
        return Ok((d >= x.len()).then(|| StarShatter {
            core: x,
            leaves: Vec::new(),
        }));
    }
    let gx = g.induced(&x);
    let hat = boundary(g, &x);
    let m = x.len();
    let mut edges = gx.edges();
    for (i, &v) in hat.iter().enumerate() {
        edges.push((x.binary_search(&v).expect("boundary lies in x"), m + i));
    }
    let aux = Graph::from_edges(m + hat.len(), &edges)?;
    let Some(cover) = min_cvc(&aux, d.max(1))? else {
        return Ok(None);
    };
    debug_assert!(cover.iter().all(|&v| v < m));
    let mut in_core = vec![false; m];
    for &v in &cover {
        in_core[v] = true;
    }
    Ok(Some(StarShatter {
        core: cover.iter().map(|&v| x[v]).collect(),
        leaves: (0..m).filter(|&v| !in_core[v]).map(|v| x[v]).collect(),
    }))
}

/// Replaces every monochromatic component by a minimum star-shatter with
/// core size at most `d`. `None` if the components do not form a tree or
/// some component has no such star-shatter.
pub fn extract_tree_witness(g: &Graph, c: &TwoColoring, d: usize) -> Result<Option<WitnessStructure>> {
    let comps = g.monochromatic_components(c)?;
    let mut labels = vec![0; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            labels[v] = i;
        }
    }
    if !g.quotient(&labels, comps.len()).is_tree() {
        return Ok(None);
    }
    let mut parts = Vec::new();
    for comp in comps {
        if comp.len() == 1 {
            parts.push(comp);
            continue;
        }
        let Some(s) = min_star_shatter(g, &comp, d)? else {
            return Ok(None);
        };
        parts.push(s.core);
        parts.extend(s.leaves.into_iter().map(|v| vec![v]));
    }
    let ws = WitnessStructure::new(parts);
    debug_assert!(witness::verify(g, &ws, Target::Tree, g.vertex_count()));
    Ok(Some(ws))
}

/// Random colorings tried for core bound `d` on a block with budget `b`.
pub fn trials_for(b: usize, d: usize) -> u64 {
    let e = 2 * b as i64 - d as i64 - 2;
    if e <= 0 {
        1
    } else {
        1u64.checked_shl(e as u32).filter(|_| e < 64).unwrap_or(u64::MAX)
    }
}

/// Ceiling on extraction calls for one block with budget `b` in
/// randomized mode.
pub fn randomized_ceiling(b: usize) -> u64 {
    (1..=b + 1).fold(0u64, |acc, d| acc.saturating_add(trials_for(b, d)))
}

/// Size of the universal family's sets for core bound `d`: a witness
/// structure of cost `b` whose largest part has `d` vertices keeps at most
/// `2b - d + 2` vertices in big parts.
pub fn deterministic_t(b: usize, d: usize, n: usize) -> usize {
    (2 * b + 2).saturating_sub(d).min(n)
}

/// Cheapest tree witness of a 2-connected block within budget `b`.
///
/// The outer loop over `d` fixes how many colorings are drawn. In
/// randomized mode every draw may use a core of up to `b + 1` vertices:
/// a looser bound never loses a witness, it only costs time, and with the
/// per-`d` counts alone a core of `b + 1` vertices would get one draw.
/// Deterministic mode keeps the bound `d` to go with its family for `d`.
fn solve_block(
    block: &Graph,
    b: usize,
    mode: Mode,
    rng: &mut ChaCha8Rng,
    calls: &mut u64,
) -> Result<Option<WitnessStructure>> {
    let n = block.vertex_count();
    let mut best: Option<WitnessStructure> = None;
    let consider = |ws: Option<WitnessStructure>, best: &mut Option<WitnessStructure>| {
        if let Some(ws) = ws {
            let cost = contraction_cost(&ws);
            if cost <= b && best.as_ref().is_none_or(|w| cost < contraction_cost(w)) {
                *best = Some(ws);
            }
        }
    };
    for d in 1..=b + 1 {
        match mode {
            Mode::Randomized(_) => {
                let trials = trials_for(b, d);
                if n < 64 && trials >= 1u64 << n {
                    // every coloring fits in the allowance: try each once
                    for mask in 0..1u64 << n {
                        *calls += 1;
                        let c = TwoColoring::from_mask(n, mask);
                        consider(extract_tree_witness(block, &c, d)?, &mut best);
                    }
                } else {
                    for _ in 0..trials {
                        *calls += 1;
                        let c = TwoColoring::from_fn(n, |_| Color::from_bit(rng.random::<bool>()));
                        consider(extract_tree_witness(block, &c, b + 1)?, &mut best);
                    }
                }
            }
            Mode::Deterministic => {
                let family = try_build_universal(n, deterministic_t(b, d, n))?;
                for c in &family.members {
                    *calls += 1;
                    consider(extract_tree_witness(block, c, d)?, &mut best);
                }
            }
        }
    }
    Ok(best)
}

/// Minimal union-find used to glue block witnesses at cut vertices.
struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = v;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Decides whether `g` is `k`-contractible to a tree (a forest when `g` is
/// disconnected).
pub fn solve_tree(g: &Graph, k: usize, mode: Mode) -> Result<Verdict> {
    let mut stats = SolveStats::default();
    let n = g.vertex_count();
    if g.is_forest() {
        return Ok(Verdict::yes(WitnessStructure::singletons(n), stats));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(match mode {
        Mode::Randomized(seed) => seed,
        Mode::Deterministic => 0,
    });
    let mut dsu = Dsu((0..n).collect());
    let mut used = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        for block in sub.biconnected_components()? {
            if block.len() <= 2 {
                continue;
            }
            let global: Vec<Vertex> = block.iter().map(|&v| comp[v]).collect();
            let bg = g.induced(&global);
            let mut calls = 0;
            let found = solve_block(&bg, k - used, mode, &mut rng, &mut calls)?;
            stats.extraction_calls += calls;
            stats.block_calls.push(calls);
            let Some(ws) = found else {
                return Ok(Verdict::no(stats));
            };
            used += contraction_cost(&ws);
            for part in ws.parts() {
                for w in part.windows(2) {
                    dsu.union(global[w[0]], global[w[1]]);
                }
            }
        }
    }
    let mut by_root: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = dsu.find(v);
        by_root[r].push(v);
    }
    let ws = WitnessStructure::new(by_root.into_iter().filter(|p| !p.is_empty()).collect());
    match witness::check(g, &ws, Target::Tree, k) {
        Ok(()) => Ok(Verdict::yes(ws, stats)),
        Err(why) => unreachable!("glued block witnesses rejected: {why}"),
    }
}
