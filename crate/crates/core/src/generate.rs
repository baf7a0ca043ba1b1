//! Seeded random frameworks and programs for property tests and the `check` task.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::framework::{Flavor, Framework, RawFramework};
use crate::lp::{Atom, Clause, Literal, LogicProgram, Rule};
use crate::structure::admits_acyclic_mode;

/// A random framework with at most `max_elems` elements (arguments, attacks
/// and supports together) and at least one argument. Edges are uniform, so
/// support cycles and self-attacks occur.
pub fn random_framework(rng: &mut impl Rng, flavor: Flavor, max_elems: usize) -> Framework {
    let total = rng.random_range(1..=max_elems.max(1));
    let args = rng.random_range(1..=total);
    let rest = total - args;
    let supports = if flavor.allows_supports() { rng.random_range(0..=rest) } else { 0 };
    build(rng, flavor, args, rest - supports, supports, false)
}

/// Like [`random_framework`], restricted to frameworks accepted by the acyclic
/// definitions. Falls back to supports that only point forward between
/// arguments when rejection sampling keeps failing.
pub fn random_acyclic_framework(rng: &mut impl Rng, flavor: Flavor, max_elems: usize) -> Framework {
    for _ in 0..64 {
        let fw = random_framework(rng, flavor, max_elems);
        if admits_acyclic_mode(&fw) {
            return fw;
        }
    }
    let total = rng.random_range(1..=max_elems.max(1));
    let args = rng.random_range(1..=total);
    let rest = total - args;
    let supports = if flavor.allows_supports() && args > 1 { rng.random_range(0..=rest) } else { 0 };
    build(rng, flavor, args, rest - supports, supports, true)
}

/// A random framework with exactly the given numbers of elements.
pub fn random_framework_with(
    rng: &mut impl Rng,
    flavor: Flavor,
    args: usize,
    attacks: usize,
    supports: usize,
) -> Framework {
    let supports = if flavor.allows_supports() { supports } else { 0 };
    build(rng, flavor, args.max(1), attacks, supports, false)
}

fn build(rng: &mut impl Rng, flavor: Flavor, args: usize, attacks: usize, supports: usize, forward: bool) -> Framework {
    let arg_names: Vec<String> = (0..args).map(|i| format!("a{i}")).collect();
    let att_names: Vec<String> = (0..attacks).map(|i| format!("r{i}")).collect();
    let sup_names: Vec<String> = (0..supports).map(|i| format!("s{i}")).collect();
    let targets: Vec<&String> = if flavor.is_recursive() {
        arg_names.iter().chain(&att_names).chain(&sup_names).collect()
    } else {
        arg_names.iter().collect()
    };
    let mut raw = RawFramework::new(flavor).arguments(arg_names.iter().cloned());
    for name in &att_names {
        let s = arg_names.choose(rng).unwrap();
        let t = *targets.choose(rng).unwrap();
        raw = raw.attack(name.clone(), s.clone(), t.clone());
    }
    for name in &sup_names {
        if forward {
            let i = rng.random_range(0..args - 1);
            let j = rng.random_range(i + 1..args);
            raw = raw.support(name.clone(), arg_names[i].clone(), arg_names[j].clone());
        } else {
            let s = arg_names.choose(rng).unwrap();
            let t = *targets.choose(rng).unwrap();
            raw = raw.support(name.clone(), s.clone(), t.clone());
        }
    }
    raw.build().expect("generated frameworks are well formed")
}

/// A random normal program over between 1 and `max_atoms` atoms.
pub fn random_normal_program(rng: &mut impl Rng, max_atoms: usize) -> LogicProgram {
    random_program(rng, max_atoms, 1)
}

/// A random program whose clauses hold up to `max_width` literals.
pub fn random_program(rng: &mut impl Rng, max_atoms: usize, max_width: usize) -> LogicProgram {
    let n = rng.random_range(1..=max_atoms.max(1));
    let mut program = LogicProgram::new();
    for i in 0..n {
        program.atom(&format!("p{i}"));
    }
    let rules = rng.random_range(0..=2 * n);
    for _ in 0..rules {
        let head = Atom::from_index(rng.random_range(0..n));
        let len = rng.random_range(0..=3);
        let body = (0..len)
            .map(|_| {
                let width = rng.random_range(1..=max_width.max(1));
                Clause::new((0..width).map(|_| {
                    let atom = Atom::from_index(rng.random_range(0..n));
                    if rng.random_bool(0.5) {
                        Literal::pos(atom)
                    } else {
                        Literal::neg(atom)
                    }
                }))
                .unwrap()
            })
            .collect();
        program.add_rule(Rule { head, body });
    }
    program
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_bounds_and_flavor() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for flavor in Flavor::ALL {
            for _ in 0..50 {
                let fw = random_framework(&mut rng, flavor, 8);
                assert!(fw.len() <= 8 && fw.num_arguments() >= 1);
                assert_eq!(fw.flavor(), flavor);
                if flavor == Flavor::Af {
                    assert_eq!(fw.num_supports(), 0);
                }
                assert!(admits_acyclic_mode(&random_acyclic_framework(&mut rng, flavor, 8)));
            }
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = random_framework(&mut ChaCha8Rng::seed_from_u64(3), Flavor::Rafn, 8);
        let b = random_framework(&mut ChaCha8Rng::seed_from_u64(3), Flavor::Rafn, 8);
        assert_eq!(a, b);
    }

    #[test]
    fn programs_are_normal_when_asked() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let p = random_normal_program(&mut rng, 9);
            assert!(p.is_normal() && p.num_atoms() <= 9);
        }
    }
}
