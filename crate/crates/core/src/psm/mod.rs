//! Partial stable models: reduct, least model, model check, enumeration,
//! the well-founded model and the maximal/total selections.

mod fixpoint;
mod search;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lp::{Atom, LogicProgram};

pub(crate) use fixpoint::ClauseIndex;
pub use search::{enumerate_psm, enumerate_psm_with_cap, DEFAULT_PSM_CAP};

/// Three truth values ordered `False < Undefined < True`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truth {
    False,
    Undefined,
    True,
}

impl Truth {
    pub fn negate(self) -> Truth {
        match self {
            Truth::False => Truth::True,
            Truth::Undefined => Truth::Undefined,
            Truth::True => Truth::False,
        }
    }
}

/// A consistent three-valued assignment to the atoms of a program.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeValuedInterpretation {
    values: Vec<Truth>,
}

impl ThreeValuedInterpretation {
    /// Every atom undefined.
    pub fn undefined(num_atoms: usize) -> Self {
        ThreeValuedInterpretation {
            values: vec![Truth::Undefined; num_atoms],
        }
    }

    pub fn from_values(values: Vec<Truth>) -> Self {
        ThreeValuedInterpretation { values }
    }

    /// Builds an interpretation from its true and false atoms. Returns `None`
    /// when the two overlap or an atom is out of range.
    pub fn from_sets(
        num_atoms: usize,
        true_atoms: impl IntoIterator<Item = Atom>,
        false_atoms: impl IntoIterator<Item = Atom>,
    ) -> Option<Self> {
        let mut m = Self::undefined(num_atoms);
        for a in true_atoms {
            *m.values.get_mut(a.index())? = Truth::True;
        }
        for a in false_atoms {
            let v = m.values.get_mut(a.index())?;
            if *v == Truth::True {
                return None;
            }
            *v = Truth::False;
        }
        Some(m)
    }

    pub fn num_atoms(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, atom: Atom) -> Truth {
        self.values[atom.index()]
    }

    pub fn set(&mut self, atom: Atom, value: Truth) {
        self.values[atom.index()] = value;
    }

    pub fn values(&self) -> &[Truth] {
        &self.values
    }

    fn with(&self, t: Truth) -> impl Iterator<Item = Atom> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(move |(_, &v)| v == t)
            .map(|(i, _)| Atom::from_index(i))
    }

    /// pos(M).
    pub fn true_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.with(Truth::True)
    }

    /// neg(M).
    pub fn false_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.with(Truth::False)
    }

    pub fn undefined_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.with(Truth::Undefined)
    }

    pub fn is_total(&self) -> bool {
        !self.values.contains(&Truth::Undefined)
    }

    /// Inclusion of literal sets: every literal of `self` is one of `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| a == Truth::Undefined || a == b)
    }

    /// Literals sorted by atom name, e.g. `{a, not b}`.
    pub fn display(&self, program: &LogicProgram) -> String {
        format!("{{{}}}", self.literal_names(program).join(", "))
    }

    /// Literals sorted by atom name, negative ones prefixed with `not `.
    pub fn literal_names(&self, program: &LogicProgram) -> Vec<String> {
        let mut lits: Vec<(&str, bool)> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != Truth::Undefined)
            .map(|(i, &v)| (program.atom_name(Atom::from_index(i)), v == Truth::True))
            .collect();
        lits.sort();
        lits.into_iter()
            .map(|(n, pos)| if pos { n.to_string() } else { format!("not {n}") })
            .collect()
    }
}

/// A program without negation, as produced by the reduct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositiveProgram {
    pub num_atoms: usize,
    pub rules: Vec<(Atom, Vec<Atom>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelClass {
    /// All partial stable models.
    Ps,
    /// The well-founded model.
    Wf,
    /// Maximal partial stable models.
    Ms,
    /// Total stable models.
    Ts,
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelClass::Ps => "ps",
            ModelClass::Wf => "wf",
            ModelClass::Ms => "ms",
            ModelClass::Ts => "ts",
        })
    }
}

impl FromStr for ModelClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ps" => Ok(ModelClass::Ps),
            "wf" => Ok(ModelClass::Wf),
            "ms" => Ok(ModelClass::Ms),
            "ts" => Ok(ModelClass::Ts),
            _ => Err(format!("unknown model class `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsmError {
    #[error("the reduct is only defined for normal programs")]
    NotNormalized,
    #[error("{undefined} atoms left undefined by the well-founded model exceed the search cap of {cap}")]
    CapExceeded { undefined: usize, cap: usize },
    #[error("no models to select from")]
    EmptyInput,
}

/// The positive instantiation of a normal program with respect to `m`:
/// (a) drop rules with `not A` for a true `A`; (b) drop rules with a body
/// literal undefined in `m`; (c) strip the remaining negative literals.
pub fn reduct(program: &LogicProgram, m: &ThreeValuedInterpretation) -> Result<PositiveProgram, PsmError> {
    if !program.is_normal() {
        return Err(PsmError::NotNormalized);
    }
    let rules = program
        .rules()
        .iter()
        .filter(|r| r.literals().all(|l| l.positive || m.value(l.atom) != Truth::True))
        .filter(|r| r.literals().all(|l| m.value(l.atom) != Truth::Undefined))
        .map(|r| (r.head, r.literals().filter(|l| l.positive).map(|l| l.atom).collect()))
        .collect();
    Ok(PositiveProgram {
        num_atoms: program.num_atoms(),
        rules,
    })
}

/// Least fixpoint of the immediate-consequence operator from the empty set.
pub fn least_model(program: &PositiveProgram) -> Vec<Atom> {
    let mut pending: Vec<usize> = program.rules.iter().map(|(_, b)| b.len()).collect();
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); program.num_atoms];
    for (r, (_, body)) in program.rules.iter().enumerate() {
        for a in body {
            watchers[a.index()].push(r);
        }
    }
    let mut model = vec![false; program.num_atoms];
    let mut queue: Vec<Atom> = Vec::new();
    for (r, (head, _)) in program.rules.iter().enumerate() {
        if pending[r] == 0 && !std::mem::replace(&mut model[head.index()], true) {
            queue.push(*head);
        }
    }
    while let Some(a) = queue.pop() {
        for &r in &watchers[a.index()] {
            pending[r] -= 1;
            let head = program.rules[r].0;
            if pending[r] == 0 && !std::mem::replace(&mut model[head.index()], true) {
                queue.push(head);
            }
        }
    }
    (0..program.num_atoms)
        .filter(|&i| model[i])
        .map(Atom::from_index)
        .collect()
}

/// Whether `m` is a partial stable model of `program`.
///
/// The true atoms must be exactly what the rules derive when `not A` holds
/// for false `A` only. The false atoms must be exactly those not derivable
/// even when `not A` holds for every non-true `A`. For normal programs the
/// first half goes through [`reduct`] and [`least_model`].
pub fn is_psm(program: &LogicProgram, m: &ThreeValuedInterpretation) -> bool {
    if m.num_atoms() != program.num_atoms() {
        return false;
    }
    is_psm_indexed(program, &ClauseIndex::new(program), m)
}

pub(crate) fn is_psm_indexed(program: &LogicProgram, index: &ClauseIndex, m: &ThreeValuedInterpretation) -> bool {
    let pessimistic = if program.is_normal() {
        let mut mask = vec![false; program.num_atoms()];
        for a in least_model(&reduct(program, m).expect("normal program")) {
            mask[a.index()] = true;
        }
        mask
    } else {
        index.least_model(|a| m.value(a) == Truth::False)
    };
    let optimistic = index.least_model(|a| m.value(a) != Truth::True);
    m.values().iter().enumerate().all(|(i, &v)| {
        pessimistic[i] == (v == Truth::True) && optimistic[i] == (v != Truth::False)
    })
}

/// The well-founded model by the alternating fixpoint: starting from no true
/// atoms, alternately overestimate the true atoms (negation holds for every
/// atom not yet known true) and underestimate them (negation holds only for
/// atoms outside the overestimate) until both stabilize.
pub fn well_founded(program: &LogicProgram) -> ThreeValuedInterpretation {
    let index = ClauseIndex::new(program);
    let mut under = vec![false; program.num_atoms()];
    loop {
        let over = index.least_model(|a| !under[a.index()]);
        let next = index.least_model(|a| !over[a.index()]);
        if next == under {
            let values = under
                .iter()
                .zip(&over)
                .map(|(&t, &o)| match (t, o) {
                    (true, _) => Truth::True,
                    (false, true) => Truth::Undefined,
                    (false, false) => Truth::False,
                })
                .collect();
            return ThreeValuedInterpretation::from_values(values);
        }
        under = next;
    }
}

/// Restricts a set of partial stable models to a class.
pub fn select_models(
    models: &[ThreeValuedInterpretation],
    class: ModelClass,
) -> Result<Vec<ThreeValuedInterpretation>, PsmError> {
    let maximal = || {
        models
            .iter()
            .filter(|m| !models.iter().any(|o| o != *m && m.is_subset(o)))
            .cloned()
    };
    Ok(match class {
        ModelClass::Ps => models.to_vec(),
        ModelClass::Ms => maximal().collect(),
        ModelClass::Ts => maximal().filter(|m| m.is_total()).collect(),
        ModelClass::Wf => {
            if models.is_empty() {
                return Err(PsmError::EmptyInput);
            }
            models
                .iter()
                .filter(|m| !models.iter().any(|o| o != *m && o.is_subset(m)))
                .cloned()
                .collect()
        }
    })
}
