//! Labeling search for partial stable models.
//!
//! Every partial stable model extends the well-founded model and is a
//! fixpoint of the three-valued immediate-consequence operator, so the
//! search only branches on atoms the well-founded model leaves undefined and
//! narrows each atom to the interval its rules allow. Complete labelings are
//! certified with the model check.

use crate::lp::{Atom, LogicProgram};

use super::{is_psm_indexed, well_founded, ClauseIndex, PsmError, ThreeValuedInterpretation, Truth};

/// Default bound on the atoms left undefined by the well-founded model.
pub const DEFAULT_PSM_CAP: usize = 32;

pub fn enumerate_psm(program: &LogicProgram) -> Result<Vec<ThreeValuedInterpretation>, PsmError> {
    enumerate_psm_with_cap(program, DEFAULT_PSM_CAP)
}

/// All partial stable models, sorted.
pub fn enumerate_psm_with_cap(
    program: &LogicProgram,
    cap: usize,
) -> Result<Vec<ThreeValuedInterpretation>, PsmError> {
    let wf = well_founded(program);
    let undefined = wf.undefined_atoms().count();
    if undefined > cap {
        return Err(PsmError::CapExceeded { undefined, cap });
    }
    let search = Search::new(program);
    let mut bounds: Vec<(Truth, Truth)> = wf
        .values()
        .iter()
        .map(|&v| if v == Truth::Undefined { (Truth::False, Truth::True) } else { (v, v) })
        .collect();
    let mut out = Vec::new();
    let all: Vec<Atom> = program.atoms().collect();
    if search.propagate(&mut bounds, all) {
        search.branch(bounds, &mut out);
    }
    out.sort();
    Ok(out)
}

struct Search<'a> {
    program: &'a LogicProgram,
    index: ClauseIndex<'a>,
    by_head: Vec<Vec<usize>>,
    /// Heads of the rules each atom occurs in.
    dependents: Vec<Vec<Atom>>,
}

impl<'a> Search<'a> {
    fn new(program: &'a LogicProgram) -> Self {
        let mut dependents = vec![Vec::new(); program.num_atoms()];
        for rule in program.rules() {
            for clause in &rule.body {
                for lit in clause.disjuncts() {
                    let deps: &mut Vec<Atom> = &mut dependents[lit.atom.index()];
                    if !deps.contains(&rule.head) {
                        deps.push(rule.head);
                    }
                }
            }
        }
        Search {
            program,
            index: ClauseIndex::new(program),
            by_head: program.rules_by_head(),
            dependents,
        }
    }

    /// Interval of values the rules for `head` can produce under `bounds`.
    fn support(&self, bounds: &[(Truth, Truth)], head: Atom) -> (Truth, Truth) {
        let mut best = (Truth::False, Truth::False);
        for &r in &self.by_head[head.index()] {
            let mut body = (Truth::True, Truth::True);
            for clause in &self.program.rules()[r].body {
                let mut c = (Truth::False, Truth::False);
                for lit in clause.disjuncts() {
                    let (lo, hi) = bounds[lit.atom.index()];
                    let (lo, hi) = if lit.positive { (lo, hi) } else { (hi.negate(), lo.negate()) };
                    c = (c.0.max(lo), c.1.max(hi));
                }
                body = (body.0.min(c.0), body.1.min(c.1));
            }
            best = (best.0.max(body.0), best.1.max(body.1));
        }
        best
    }

    /// Narrows bounds to a fixpoint; `false` on an empty interval.
    fn propagate(&self, bounds: &mut [(Truth, Truth)], mut queue: Vec<Atom>) -> bool {
        let mut queued = vec![false; bounds.len()];
        for a in &queue {
            queued[a.index()] = true;
        }
        while let Some(a) = queue.pop() {
            queued[a.index()] = false;
            let (lo, hi) = bounds[a.index()];
            let (slo, shi) = self.support(bounds, a);
            let next = (lo.max(slo), hi.min(shi));
            if next.0 > next.1 {
                return false;
            }
            if next != (lo, hi) {
                bounds[a.index()] = next;
                for &d in &self.dependents[a.index()] {
                    if !std::mem::replace(&mut queued[d.index()], true) {
                        queue.push(d);
                    }
                }
            }
        }
        true
    }

    fn branch(&self, bounds: Vec<(Truth, Truth)>, out: &mut Vec<ThreeValuedInterpretation>) {
        let Some(pick) = bounds.iter().position(|&(lo, hi)| lo != hi) else {
            let m = ThreeValuedInterpretation::from_values(bounds.iter().map(|&(v, _)| v).collect());
            if is_psm_indexed(self.program, &self.index, &m) {
                out.push(m);
            }
            return;
        };
        let (lo, hi) = bounds[pick];
        for v in [Truth::True, Truth::False, Truth::Undefined] {
            if v < lo || v > hi {
                continue;
            }
            let mut next = bounds.clone();
            next[pick] = (v, v);
            let mut queue = self.dependents[pick].clone();
            queue.push(Atom::from_index(pick));
            if self.propagate(&mut next, queue) {
                self.branch(next, out);
            }
        }
    }
}
