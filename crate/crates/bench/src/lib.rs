//! Fixed benchmark instances shared by the criterion benches.

use contraction_core::generate::{random_connected, spider};
use contraction_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A named graph with a budget at which the solvers are timed.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub k: usize,
}

/// Instances for the path solver; sizes stay small enough that the
/// deterministic mode finishes in well under a second.
pub fn path_instances() -> Vec<Instance> {
    let mut out = vec![
        Instance { name: "cycle-8".into(), graph: Graph::cycle(8), k: 3 },
        Instance { name: "path-40".into(), graph: Graph::path(40), k: 2 },
        Instance { name: "spider-3x4".into(), graph: spider(3, 4), k: 4 },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [8, 10] {
        out.push(Instance {
            name: format!("random-{n}"),
            graph: random_connected(n, 0.2, &mut rng),
            k: 3,
        });
    }
    out
}

pub fn tree_instances() -> Vec<Instance> {
    let mut out = vec![
        Instance { name: "cycle-7".into(), graph: Graph::cycle(7), k: 5 },
        Instance { name: "complete-5".into(), graph: Graph::complete(5), k: 3 },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [8, 11] {
        out.push(Instance {
            name: format!("random-{n}"),
            graph: random_connected(n, 0.15, &mut rng),
            k: 3,
        });
    }
    out
}
