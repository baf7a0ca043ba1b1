//! Shared workloads for the solver benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recbaf::generate::{random_framework, random_framework_with};
use recbaf::{translate, Flavor, Framework, LogicProgram};

/// A sparse framework with `args` arguments, for the polynomial grounded path.
pub fn large(flavor: Flavor, args: usize, seed: u64) -> Framework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let supports = if flavor.allows_supports() { args / 2 } else { 0 };
    random_framework_with(&mut rng, flavor, args, args * 3 / 2, supports)
}

/// Small frameworks of one flavor, as used by the random cross-check.
pub fn small(flavor: Flavor, max_elems: usize, count: usize, seed: u64) -> Vec<Framework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_framework(&mut rng, flavor, max_elems)).collect()
}

/// The translated programs of [`small`] frameworks.
pub fn programs(flavor: Flavor, max_elems: usize, count: usize, seed: u64) -> Vec<LogicProgram> {
    small(flavor, max_elems, count, seed).iter().map(translate).collect()
}
