//! `(n, t)`-universal families of 2-colorings: for every set `S` of `t`
//! vertices, the members restricted to `S` realize all `2^t` patterns.
//!
//! Small `n` gets the full family of all colorings. Otherwise the family is
//! the composition of an `(n, t)`-perfect hash family `H` (every `t`-set is
//! mapped injectively into `[t]` by some `h`) with all colorings of `[t]`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, TwoColoring};

/// Up to this many vertices the exhaustive family is used.
pub const EXHAUSTIVE_LIMIT: usize = 16;

const PHF_SEED: u64 = 0x5eed_0fc0_105e_7500;
const VERIFY_SUBSET_LIMIT: u128 = 20_000_000;
/// Largest number of `t`-sets the greedy hash family generator will cover.
pub const HASH_SUBSET_LIMIT: u128 = 200_000;
/// A random function is injective on a fixed `t`-set with probability
/// `t!/t^t`, so the greedy generator slows down sharply past this.
pub const HASH_MAX_T: usize = 8;
/// Largest `n` for which the exhaustive family is an acceptable fallback.
pub const EXHAUSTIVE_FALLBACK_LIMIT: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// All `2^n` colorings.
    Exhaustive,
    /// Perfect hash family composed with all colorings of `[t]`.
    PerfectHash,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalFamily {
    pub n: usize,
    pub t: usize,
    pub members: Vec<TwoColoring>,
    /// Size of the perfect hash family behind the members, if one was used.
    pub hash_functions: Option<usize>,
}

impl UniversalFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Builds an `(n, t)`-universal family. Deterministic: the perfect hash
/// family is drawn from a fixed seed.
///
/// # Panics
/// When neither construction is feasible; see [`try_build_universal`].
pub fn build_universal(n: usize, t: usize) -> UniversalFamily {
    try_build_universal(n, t).expect("universal family too large to build")
}

/// Like [`build_universal`], but reports sizes that neither construction
/// can handle instead of panicking.
pub fn try_build_universal(n: usize, t: usize) -> Result<UniversalFamily> {
    if t > n {
        return Err(Error::InvalidInstance(format!("t={t} exceeds n={n}")));
    }
    let construction = if t == 0 || n <= EXHAUSTIVE_LIMIT || t == n {
        Construction::Exhaustive
    } else if t <= HASH_MAX_T && binomial(n, t) <= HASH_SUBSET_LIMIT {
        Construction::PerfectHash
    } else if n <= EXHAUSTIVE_FALLBACK_LIMIT {
        Construction::Exhaustive
    } else {
        return Err(Error::InputTooLarge {
            what: "t-subsets for the hash family",
            got: binomial(n, t).min(usize::MAX as u128) as usize,
            limit: HASH_SUBSET_LIMIT as usize,
        });
    };
    Ok(build_universal_with(n, t, construction))
}

pub fn build_universal_with(n: usize, t: usize, construction: Construction) -> UniversalFamily {
    assert!(t <= n, "universal family needs t <= n (got t={t}, n={n})");
    if t == 0 {
        return UniversalFamily {
            n,
            t,
            members: vec![TwoColoring::constant(n, Color::One)],
            hash_functions: None,
        };
    }
    match construction {
        Construction::Exhaustive => {
            assert!(n < 64, "exhaustive family over {n} vertices is not enumerable");
            UniversalFamily {
                n,
                t,
                members: (0..1u64 << n).map(|m| TwoColoring::from_mask(n, m)).collect(),
                hash_functions: None,
            }
        }
        Construction::PerfectHash => {
            let hashes = perfect_hash_family(n, t);
            let mut seen = HashSet::new();
            let mut members = Vec::new();
            for h in &hashes {
                for pattern in 0..1u64 << t {
                    let c = TwoColoring::from_fn(n, |v| Color::from_bit(pattern >> h[v] & 1 == 1));
                    if seen.insert(c.clone()) {
                        members.push(c);
                    }
                }
            }
            UniversalFamily {
                n,
                t,
                members,
                hash_functions: Some(hashes.len()),
            }
        }
    }
}

/// Greedy randomized perfect hash family: draw functions `[n] -> [t]` and
/// keep those that are injective on some still uncovered `t`-set, until
/// every `t`-set is covered.
fn perfect_hash_family(n: usize, t: usize) -> Vec<Vec<usize>> {
    assert!(n <= 64);
    let mut uncovered: Vec<u64> = subsets(n, t).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(PHF_SEED ^ (n as u64) << 32 ^ t as u64);
    let mut family = Vec::new();
    while !uncovered.is_empty() {
        let h: Vec<usize> = (0..n).map(|_| rng.random_range(0..t)).collect();
        let before = uncovered.len();
        uncovered.retain(|&s| !injective_on(&h, s));
        if uncovered.len() < before {
            family.push(h);
        }
    }
    family
}

fn injective_on(h: &[usize], set: u64) -> bool {
    let mut hit = 0u64;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if hit >> h[v] & 1 == 1 {
            return false;
        }
        hit |= 1 << h[v];
    }
    true
}

/// All `t`-subsets of `0..n` as bitmasks, in colexicographic order.
fn subsets(n: usize, t: usize) -> impl Iterator<Item = u64> {
    let mut next = if t <= n { Some((1u64 << t) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if t == 0 {
            next = None;
            return Some(0);
        }
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        let succ = (((r ^ cur) >> 2) / c) | r;
        let in_range = succ.checked_shr(n as u32).unwrap_or(0) == 0;
        next = (in_range && r != 0).then_some(succ);
        Some(cur)
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Exhaustively checks universality over all `t`-subsets.
pub fn verify_universal(f: &UniversalFamily) -> Result<bool> {
    if f.n > 64 {
        return Err(Error::InputTooLarge {
            what: "vertices",
            got: f.n,
            limit: 64,
        });
    }
    let work = binomial(f.n, f.t);
    if work > VERIFY_SUBSET_LIMIT || f.t > 20 {
        return Err(Error::InputTooLarge {
            what: "subsets to check",
            got: work.min(usize::MAX as u128) as usize,
            limit: VERIFY_SUBSET_LIMIT as usize,
        });
    }
    if f.members.iter().any(|m| m.len() != f.n) {
        return Ok(false);
    }
    let masks: Vec<u64> = f
        .members
        .iter()
        .map(|m| {
            (0..f.n)
                .filter(|&v| m.color(v) == Color::Two)
                .fold(0, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut seen = vec![false; 1 << f.t];
    for set in subsets(f.n, f.t) {
        seen.iter_mut().for_each(|s| *s = false);
        let mut missing = 1usize << f.t;
        for &m in &masks {
            let pattern = compress(m, set);
            if !seen[pattern] {
                seen[pattern] = true;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        if missing > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bits of `value` at the positions set in `set`, packed low to high.
fn compress(value: u64, set: u64) -> usize {
    let mut out = 0;
    let mut rest = set;
    let mut i = 0;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        out |= ((value >> v & 1) as usize) << i;
        i += 1;
    }
    out
}
