use crate::framework::{AttackReading, ElementId, ElementKind, Framework, SupportReading};

use super::{Atom, Clause, Literal, LogicProgram, Rule};

/// The program of a framework: one rule per universe element, atoms named
/// after the elements and numbered in the same order.
///
/// | flavor | per attack α on X | per relevant support β | extra |
/// |---|---|---|---|
/// | AF, AFN, AFD | `¬s(α)` | AFN: `s(β)` for t(β)=X; AFD: `t(β)` for s(β)=X | |
/// | RAFN, RAFD | `¬α ∨ ¬s(α)` | RAFN: `¬β ∨ s(β)` for t(β)=X; RAFD: `¬β ∨ t(β)` for s(β)=X | |
/// | ASAF, AFRAD | `¬α` | as RAFN / RAFD | `s(X)` when X is an attack |
pub fn translate(fw: &Framework) -> LogicProgram {
    let mut program = LogicProgram::new();
    for x in fw.universe() {
        let atom = program.atom(fw.name(x));
        debug_assert_eq!(atom.index(), x.index());
    }
    let atom = |id: ElementId| Atom::from_index(id.index());
    let flavor = fw.flavor();
    let recursive = flavor.is_recursive();

    for x in fw.universe() {
        let mut body = Vec::new();
        if flavor.attack_reading() == AttackReading::Afra && fw.kind(x) == ElementKind::Attack {
            body.push(Clause::unit(Literal::pos(atom(fw.source(x).unwrap()))));
        }
        for &alpha in fw.attacks_on(x) {
            let src = atom(fw.source(alpha).unwrap());
            body.push(match flavor.attack_reading() {
                AttackReading::Plain => Clause::unit(Literal::neg(src)),
                AttackReading::Raf => Clause::new([Literal::neg(atom(alpha)), Literal::neg(src)]).unwrap(),
                AttackReading::Afra => Clause::unit(Literal::neg(atom(alpha))),
            });
        }
        let (relevant, necessary) = match flavor.support_reading() {
            SupportReading::Necessary => (fw.supports_on(x), true),
            SupportReading::Deductive => (fw.supports_from(x), false),
        };
        for &beta in relevant {
            let needed = if necessary { fw.source(beta) } else { fw.target(beta) };
            let other = Literal::pos(atom(needed.unwrap()));
            body.push(if recursive {
                Clause::new([Literal::neg(atom(beta)), other]).unwrap()
            } else {
                Clause::unit(other)
            });
        }
        program.add_rule(Rule { head: atom(x), body });
    }
    program
}
