//! Seeded random inputs for property checks and the `random` subcommand.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brauer::BrauerPermutation;
use crate::groups::{CyclicFactor, GroupElement, GroupSpec, Order};
use crate::weights::GWeight;

/// Environment variable that overrides [`DEFAULT_SEED`].
pub const SEED_VAR: &str = "BRAUER_COVER_SEED";
pub const DEFAULT_SEED: u64 = 20_240_917;
pub const MAX_HALF_EDGES: usize = 8;

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The small finite groups used for sampling: C2, C3, C2 x C2, C6 and S3.
pub fn small_groups() -> Vec<GroupSpec> {
    let named = |name: &str, n| CyclicFactor { name: name.into(), order: Order::Finite(n) };
    vec![
        GroupSpec::cyclic("a", 2).unwrap(),
        GroupSpec::cyclic("a", 3).unwrap(),
        GroupSpec::abelian(vec![named("a", 2), named("b", 2)]).unwrap(),
        GroupSpec::cyclic("a", 6).unwrap(),
        GroupSpec::permutation(3, vec![("a".into(), vec![1, 2, 0]), ("b".into(), vec![1, 0, 2])]).unwrap(),
    ]
}

/// Names of [`small_groups`], in order.
pub const SMALL_GROUP_NAMES: [&str; 5] = ["C2", "C3", "C2xC2", "C6", "S3"];

pub fn small_group(name: &str) -> Option<GroupSpec> {
    let k = SMALL_GROUP_NAMES.iter().position(|n| n.eq_ignore_ascii_case(name))?;
    Some(small_groups().swap_remove(k))
}

pub fn random_small_group<R: Rng>(rng: &mut R) -> GroupSpec {
    small_groups().swap_remove(rng.gen_range(0..SMALL_GROUP_NAMES.len()))
}

/// A Brauer permutation with an even number of half edges in `2..=max`,
/// uniform σ and τ, and multiplicities in {1, 2, 3}. Half edges of edge `k`
/// are named `k+` and `k-`.
pub fn random_brauer<R: Rng>(rng: &mut R, max_half_edges: usize) -> BrauerPermutation {
    let edges = rng.gen_range(1..=max_half_edges.max(2) / 2);
    let n = 2 * edges;
    let names: Vec<String> = (1..=edges).flat_map(|k| [format!("{k}+"), format!("{k}-")]).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.shuffle(rng);
    let mut tau = vec![0; n];
    for pair in slots.chunks(2) {
        tau[pair[0]] = pair[1];
        tau[pair[1]] = pair[0];
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let mut multiplicity = vec![0; n];
    for start in 0..n {
        if multiplicity[start] != 0 {
            continue;
        }
        let m = rng.gen_range(1..=3);
        let mut e = start;
        loop {
            multiplicity[e] = m;
            e = sigma[e];
            if e == start {
                break;
            }
        }
    }
    BrauerPermutation::from_indices(names, sigma, tau, multiplicity).expect("random data is valid")
}

/// Every half edge weighted by a uniform element of `group`.
pub fn random_weight<R: Rng>(rng: &mut R, b: &BrauerPermutation, group: &GroupSpec) -> GWeight {
    let elements = group.enumerate().expect("finite group");
    let values = b.half_edges().map(|e| (b.name(e).to_owned(), elements.choose(rng).unwrap().clone())).collect();
    GWeight::new(group.clone(), values).expect("elements belong to the group")
}

/// A uniform weight conditioned on admissibility: all but the last half edge
/// of each σ-orbit are uniform, and the last is solved so that the orbit
/// product is a uniform element `t` with `t^m = 1`.
pub fn random_admissible_weight<R: Rng>(rng: &mut R, b: &BrauerPermutation, group: &GroupSpec) -> GWeight {
    let elements = group.enumerate().expect("finite group");
    let mut values: BTreeMap<String, GroupElement> = BTreeMap::new();
    for orbit in b.orbits() {
        let m = b.multiplicity(orbit[0]) as i64;
        let roots: Vec<&GroupElement> =
            elements.iter().filter(|x| group.is_identity(&group.pow(x, m).unwrap())).collect();
        let target = (*roots.choose(rng).unwrap()).clone();
        let (&last, rest) = orbit.split_last().unwrap();
        let mut acc = group.identity();
        for &e in rest {
            let x = elements.choose(rng).unwrap().clone();
            acc = group.multiply(&x, &acc).unwrap();
            values.insert(b.name(e).to_owned(), x);
        }
        let x = group.multiply(&target, &group.inverse(&acc).unwrap()).unwrap();
        values.insert(b.name(last).to_owned(), x);
    }
    GWeight::new(group.clone(), values).expect("elements belong to the group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::is_admissible;

    #[test]
    fn same_seed_same_output() {
        let a = random_brauer(&mut rng(7), 8);
        let b = random_brauer(&mut rng(7), 8);
        assert_eq!(a, b);
    }

    #[test]
    fn admissible_sampler_is_admissible() {
        let mut r = rng(3);
        for group in small_groups() {
            for _ in 0..50 {
                let b = random_brauer(&mut r, MAX_HALF_EDGES);
                assert!(b.len() <= MAX_HALF_EDGES && b.len() % 2 == 0);
                let w = random_admissible_weight(&mut r, &b, &group);
                assert!(is_admissible(&b, &w).unwrap().holds(), "{}", group.describe());
            }
        }
    }
}
