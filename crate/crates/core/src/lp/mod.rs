//! Propositional logic programs with clause bodies, their translation from
//! frameworks, normalization and the plain-text rule syntax.
//!
//! A rule body is a conjunction of clauses and each clause a disjunction of
//! literals. A program is *normal* when every clause holds a single literal.

mod text;
mod translate;

use std::collections::HashMap;
use std::fmt;

pub use text::{parse_program, ProgramParseError};
pub use translate::translate;

/// Index of an atom inside one [`LogicProgram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(pub(crate) u32);

impl Atom {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Atom(i as u32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal { atom, positive: true }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal { atom, positive: false }
    }
}

/// A nonempty disjunction of distinct literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    disjuncts: Vec<Literal>,
}

impl Clause {
    /// Builds a clause, dropping repeated literals. Returns `None` when empty.
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Option<Self> {
        let mut disjuncts: Vec<Literal> = Vec::new();
        for lit in literals {
            if !disjuncts.contains(&lit) {
                disjuncts.push(lit);
            }
        }
        (!disjuncts.is_empty()).then_some(Clause { disjuncts })
    }

    pub fn unit(lit: Literal) -> Self {
        Clause { disjuncts: vec![lit] }
    }

    pub fn disjuncts(&self) -> &[Literal] {
        &self.disjuncts
    }

    pub fn is_unit(&self) -> bool {
        self.disjuncts.len() == 1
    }
}

/// `head ← C1 ∧ … ∧ Ck`; a fact when the body is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: Atom,
    pub body: Vec<Clause>,
}

impl Rule {
    pub fn fact(head: Atom) -> Self {
        Rule { head, body: Vec::new() }
    }

    pub fn is_normal(&self) -> bool {
        self.body.iter().all(Clause::is_unit)
    }

    /// Body literals of a normal rule.
    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.body.iter().flat_map(|c| c.disjuncts.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogicProgram {
    names: Vec<String>,
    index: HashMap<String, Atom>,
    rules: Vec<Rule>,
}

impl LogicProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares an atom, returning the existing one if the name is known.
    pub fn atom(&mut self, name: &str) -> Atom {
        if let Some(&a) = self.index.get(name) {
            return a;
        }
        let a = Atom::from_index(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), a);
        a
    }

    pub fn add_rule(&mut self, rule: Rule) {
        debug_assert!(rule.head.index() < self.names.len());
        self.rules.push(rule);
    }

    pub fn num_atoms(&self) -> usize {
        self.names.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> {
        (0..self.names.len()).map(Atom::from_index)
    }

    pub fn atom_name(&self, atom: Atom) -> &str {
        &self.names[atom.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(Rule::is_normal)
    }

    /// Rules indexed by head atom.
    pub(crate) fn rules_by_head(&self) -> Vec<Vec<usize>> {
        let mut by_head = vec![Vec::new(); self.num_atoms()];
        for (i, r) in self.rules.iter().enumerate() {
            by_head[r.head.index()].push(i);
        }
        by_head
    }

    /// Same atoms, replacement rules.
    pub(crate) fn with_rules(&self, rules: Vec<Rule>) -> LogicProgram {
        LogicProgram {
            names: self.names.clone(),
            index: self.index.clone(),
            rules,
        }
    }

    pub fn display_literal(&self, lit: Literal) -> String {
        if lit.positive {
            self.atom_name(lit.atom).to_string()
        } else {
            format!("not {}", self.atom_name(lit.atom))
        }
    }

    pub fn display_rule(&self, rule: &Rule) -> String {
        let head = self.atom_name(rule.head);
        if rule.body.is_empty() {
            return format!("{head}.");
        }
        let body: Vec<String> = rule
            .body
            .iter()
            .map(|c| {
                let lits: Vec<String> = c.disjuncts.iter().map(|&l| self.display_literal(l)).collect();
                if lits.len() == 1 {
                    lits.into_iter().next().unwrap()
                } else {
                    format!("({})", lits.join(" | "))
                }
            })
            .collect();
        format!("{head} :- {}.", body.join(", "))
    }
}

impl fmt::Display for LogicProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut has_rule = vec![false; self.num_atoms()];
        for r in &self.rules {
            has_rule[r.head.index()] = true;
        }
        let ruleless: Vec<&str> = self
            .atoms()
            .filter(|a| !has_rule[a.index()])
            .map(|a| self.atom_name(a))
            .collect();
        if !ruleless.is_empty() {
            writeln!(f, "#atoms {}.", ruleless.join(", "))?;
        }
        for r in &self.rules {
            writeln!(f, "{}", self.display_rule(r))?;
        }
        Ok(())
    }
}

/// Distributes clause bodies into normal rules: a rule with clauses
/// `C1, …, Ck` becomes one rule per element of `C1 × … × Ck`.
pub fn normalize(program: &LogicProgram) -> LogicProgram {
    if program.is_normal() {
        return program.clone();
    }
    let mut rules = Vec::new();
    for rule in program.rules() {
        let mut bodies: Vec<Vec<Literal>> = vec![Vec::new()];
        for clause in &rule.body {
            bodies = bodies
                .into_iter()
                .flat_map(|prefix| {
                    clause.disjuncts().iter().map(move |&lit| {
                        let mut body = prefix.clone();
                        if !body.contains(&lit) {
                            body.push(lit);
                        }
                        body
                    })
                })
                .collect();
        }
        rules.extend(bodies.into_iter().map(|lits| Rule {
            head: rule.head,
            body: lits.into_iter().map(Clause::unit).collect(),
        }));
    }
    program.with_rules(rules)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributes_two_by_two() {
        let p = parse_program("f :- (not a2 | m), (not b2 | w).").unwrap();
        let n = normalize(&p);
        assert!(n.is_normal());
        let mut lines: Vec<String> = n.rules().iter().map(|r| n.display_rule(r)).collect();
        lines.sort();
        let mut expected = vec![
            "f :- not a2, not b2.",
            "f :- not a2, w.",
            "f :- m, not b2.",
            "f :- m, w.",
        ];
        expected.sort();
        assert_eq!(lines, expected);
        assert_eq!(n.num_atoms(), p.num_atoms());
    }

    #[test]
    fn normal_program_unchanged() {
        let p = parse_program("a :- not b.\nb :- not a.\nc.").unwrap();
        assert!(p.is_normal());
        assert_eq!(normalize(&p), p);
    }

    #[test]
    fn clause_drops_duplicates() {
        let a = Atom::from_index(0);
        let c = Clause::new([Literal::neg(a), Literal::neg(a)]).unwrap();
        assert_eq!(c.disjuncts().len(), 1);
        assert!(Clause::new([]).is_none());
    }
}
