//! Defeated and acceptable sets for every flavor.
//!
//! Both operators are least fixpoints. The defeated set starts from the
//! elements hit by an effective attack (plus self-supported arguments in
//! general mode) and closes under support propagation; the acceptable set
//! grows from elements whose attackers are all neutralized and whose
//! supporters (in the flavor's direction) have already been accepted.

use crate::framework::{AttackReading, ElementId, ElementKind, Framework, SupportReading};
use crate::structure::dependency_cycle_mask;

use super::DefinitionMode;

/// Flavor-specialized operator evaluation over membership masks indexed by element.
pub(crate) struct Evaluator<'a> {
    fw: &'a Framework,
    mode: DefinitionMode,
    universe: usize,
    attacks: AttackReading,
    supports: SupportReading,
    recursive: bool,
    /// Self-supported arguments when they do not depend on the candidate set.
    static_cycles: Option<Vec<bool>>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(fw: &'a Framework, mode: DefinitionMode) -> Self {
        let flavor = fw.flavor();
        let recursive = flavor.is_recursive();
        let static_cycles = match mode {
            DefinitionMode::Acyclic => None,
            DefinitionMode::General => {
                let all = dependency_cycle_mask(fw, &|_| true);
                if !recursive || !all.contains(&true) {
                    Some(all)
                } else {
                    None
                }
            }
        };
        Evaluator {
            fw,
            mode,
            universe: fw.universe_len(),
            attacks: flavor.attack_reading(),
            supports: flavor.support_reading(),
            recursive,
            static_cycles,
        }
    }

    pub(crate) fn universe(&self) -> usize {
        self.universe
    }

    /// Whether a support takes part given candidate set `s`. BAF supports are
    /// relations, always present; Rec-BAF supports must belong to the set.
    fn support_active(&self, s: &[bool], beta: ElementId) -> bool {
        !self.recursive || s[beta.index()]
    }

    pub(crate) fn defeated(&self, s: &[bool]) -> Vec<bool> {
        let fw = self.fw;
        let mut def = vec![false; self.universe];
        let mut queue = Vec::new();
        let mark = |x: ElementId, def: &mut Vec<bool>, queue: &mut Vec<ElementId>| {
            if !std::mem::replace(&mut def[x.index()], true) {
                queue.push(x);
            }
        };

        for alpha in fw.attacks() {
            let (src, tgt) = fw.endpoints(alpha);
            let effective = match self.attacks {
                AttackReading::Plain => s[src.index()],
                AttackReading::Raf => s[alpha.index()] && s[src.index()],
                AttackReading::Afra => s[alpha.index()],
            };
            if effective {
                mark(tgt, &mut def, &mut queue);
            }
        }

        if self.mode == DefinitionMode::General {
            let owned;
            let cycles = match &self.static_cycles {
                Some(c) => c,
                None => {
                    owned = dependency_cycle_mask(fw, &|b| s[b.index()]);
                    &owned
                }
            };
            for a in fw.arguments() {
                if cycles[a.index()] {
                    mark(a, &mut def, &mut queue);
                }
            }
        }

        while let Some(x) = queue.pop() {
            match self.supports {
                SupportReading::Necessary => {
                    for &beta in fw.supports_from(x) {
                        if self.support_active(s, beta) {
                            mark(fw.endpoints(beta).1, &mut def, &mut queue);
                        }
                    }
                }
                SupportReading::Deductive => {
                    for &beta in fw.supports_on(x) {
                        if self.support_active(s, beta) {
                            mark(fw.endpoints(beta).0, &mut def, &mut queue);
                        }
                    }
                }
            }
            if self.attacks == AttackReading::Afra {
                for &alpha in fw.attacks_from(x) {
                    mark(alpha, &mut def, &mut queue);
                }
            }
        }
        def
    }

    /// Acceptable set against an already computed defeated set.
    pub(crate) fn acceptable(&self, def: &[bool]) -> Vec<bool> {
        let fw = self.fw;
        let n = self.universe;
        let mut pending = vec![0usize; n];
        let mut waiters: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        let mut acc = vec![false; n];
        let mut queue = Vec::new();

        for x in fw.universe() {
            let neutralized = fw.attacks_on(x).iter().all(|&alpha| {
                let src = fw.endpoints(alpha).0;
                match self.attacks {
                    AttackReading::Plain => def[src.index()],
                    AttackReading::Raf => def[alpha.index()] || def[src.index()],
                    AttackReading::Afra => def[alpha.index()],
                }
            });
            if !neutralized {
                continue;
            }
            let mut needs = Vec::new();
            if self.attacks == AttackReading::Afra && fw.kind(x) == ElementKind::Attack {
                needs.push(fw.endpoints(x).0);
            }
            let relevant = match self.supports {
                SupportReading::Necessary => fw.supports_on(x),
                SupportReading::Deductive => fw.supports_from(x),
            };
            for &beta in relevant {
                if self.recursive && def[beta.index()] {
                    continue;
                }
                let (src, tgt) = fw.endpoints(beta);
                needs.push(match self.supports {
                    SupportReading::Necessary => src,
                    SupportReading::Deductive => tgt,
                });
            }
            pending[x.index()] = needs.len();
            if needs.is_empty() {
                acc[x.index()] = true;
                queue.push(x);
            }
            for y in needs {
                waiters[y.index()].push(x);
            }
        }

        while let Some(y) = queue.pop() {
            for &w in &waiters[y.index()] {
                let p = &mut pending[w.index()];
                *p -= 1;
                if *p == 0 && !acc[w.index()] {
                    acc[w.index()] = true;
                    queue.push(w);
                }
            }
        }
        acc
    }

    /// Whether `s` is conflict-free and equal to its acceptable set; returns
    /// the defeated set on success.
    pub(crate) fn complete(&self, s: &[bool]) -> Option<Vec<bool>> {
        let def = self.defeated(s);
        if s.iter().zip(&def).any(|(&a, &d)| a && d) {
            return None;
        }
        (self.acceptable(&def) == s).then_some(def)
    }

    /// Least fixpoint of the acceptability operator iterated from the empty set.
    pub(crate) fn grounded(&self) -> (Vec<bool>, Vec<bool>) {
        let mut s = vec![false; self.universe];
        loop {
            let def = self.defeated(&s);
            let next = self.acceptable(&def);
            if next == s {
                return (s, def);
            }
            s = next;
        }
    }
}
