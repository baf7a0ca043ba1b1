//! Least models of clause-bodied programs under a fixed reading of negation.

use crate::lp::{Atom, LogicProgram};

/// Occurrence index for repeated least-model computations over one program.
pub(crate) struct ClauseIndex<'a> {
    program: &'a LogicProgram,
    /// Flattened clause ids per rule: `clause_start[r]..clause_start[r + 1]`.
    clause_start: Vec<usize>,
    clause_rule: Vec<usize>,
    /// (clause id) for each positive occurrence of an atom.
    positive_in: Vec<Vec<usize>>,
}

impl<'a> ClauseIndex<'a> {
    pub(crate) fn new(program: &'a LogicProgram) -> Self {
        let mut clause_start = Vec::with_capacity(program.rules().len() + 1);
        let mut clause_rule = Vec::new();
        let mut positive_in = vec![Vec::new(); program.num_atoms()];
        for (r, rule) in program.rules().iter().enumerate() {
            clause_start.push(clause_rule.len());
            for clause in &rule.body {
                let id = clause_rule.len();
                clause_rule.push(r);
                for lit in clause.disjuncts() {
                    if lit.positive {
                        positive_in[lit.atom.index()].push(id);
                    }
                }
            }
        }
        clause_start.push(clause_rule.len());
        ClauseIndex {
            program,
            clause_start,
            clause_rule,
            positive_in,
        }
    }

    /// Least set of atoms closed under the rules, where a negative literal
    /// `not A` holds exactly when `neg_holds(A)`.
    pub(crate) fn least_model(&self, neg_holds: impl Fn(Atom) -> bool) -> Vec<bool> {
        let rules = self.program.rules();
        let mut model = vec![false; self.program.num_atoms()];
        let mut clause_sat = vec![false; self.clause_rule.len()];
        let mut pending: Vec<usize> = (0..rules.len())
            .map(|r| self.clause_start[r + 1] - self.clause_start[r])
            .collect();
        let mut queue = Vec::new();
        let derive = |a: Atom, model: &mut Vec<bool>, queue: &mut Vec<Atom>| {
            if !std::mem::replace(&mut model[a.index()], true) {
                queue.push(a);
            }
        };

        for (r, rule) in rules.iter().enumerate() {
            for (k, clause) in rule.body.iter().enumerate() {
                if clause.disjuncts().iter().any(|l| !l.positive && neg_holds(l.atom)) {
                    clause_sat[self.clause_start[r] + k] = true;
                    pending[r] -= 1;
                }
            }
            if pending[r] == 0 {
                derive(rule.head, &mut model, &mut queue);
            }
        }

        while let Some(a) = queue.pop() {
            for &c in &self.positive_in[a.index()] {
                if std::mem::replace(&mut clause_sat[c], true) {
                    continue;
                }
                let r = self.clause_rule[c];
                pending[r] -= 1;
                if pending[r] == 0 {
                    derive(rules[r].head, &mut model, &mut queue);
                }
            }
        }
        model
    }
}
