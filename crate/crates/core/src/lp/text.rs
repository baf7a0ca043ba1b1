//! Plain-text rule syntax.
//!
//! ```text
//! % comment
//! #atoms x, y.               % declare atoms without rules
//! a.                         % fact
//! b :- not a, c.             % normal rule
//! f :- (not a2 | m), w.      % clause body
//! ```

use thiserror::Error;

use crate::lexer::{Cursor, Position, Token};

use super::{Clause, Literal, LogicProgram, Rule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {message}")]
pub struct ProgramParseError {
    pub position: Position,
    pub message: String,
}

impl From<(Position, String)> for ProgramParseError {
    fn from((position, message): (Position, String)) -> Self {
        ProgramParseError { position, message }
    }
}

pub fn parse_program(input: &str) -> Result<LogicProgram, ProgramParseError> {
    let mut cur = Cursor::new(input)?;
    let mut program = LogicProgram::new();
    while !cur.is_done() {
        if cur.peek() == Some(&Token::Hash) {
            cur.bump();
            let pos = cur.position();
            let directive = cur.name()?;
            if directive != "atoms" {
                return Err(ProgramParseError {
                    position: pos,
                    message: format!("unknown directive `#{directive}`"),
                });
            }
            loop {
                let name = cur.name()?;
                program.atom(&name);
                if cur.peek() == Some(&Token::Comma) {
                    cur.bump();
                } else {
                    break;
                }
            }
            cur.expect(Token::Dot)?;
            continue;
        }
        let head_name = cur.name()?;
        let head = program.atom(&head_name);
        let mut body = Vec::new();
        if cur.peek() == Some(&Token::Implies) {
            cur.bump();
            loop {
                body.push(clause(&mut cur, &mut program)?);
                if cur.peek() == Some(&Token::Comma) {
                    cur.bump();
                } else {
                    break;
                }
            }
        }
        cur.expect(Token::Dot)?;
        program.add_rule(Rule { head, body });
    }
    Ok(program)
}

fn clause(cur: &mut Cursor, program: &mut LogicProgram) -> Result<Clause, ProgramParseError> {
    if cur.peek() != Some(&Token::LParen) {
        return Ok(Clause::unit(literal(cur, program)?));
    }
    cur.bump();
    let mut lits = vec![literal(cur, program)?];
    while cur.peek() == Some(&Token::Pipe) {
        cur.bump();
        lits.push(literal(cur, program)?);
    }
    cur.expect(Token::RParen)?;
    Ok(Clause::new(lits).expect("at least one literal"))
}

fn literal(cur: &mut Cursor, program: &mut LogicProgram) -> Result<Literal, ProgramParseError> {
    let negated = matches!(cur.peek(), Some(Token::Name(n)) if n == "not")
        && matches!(cur.peek_at(1), Some(Token::Name(_)));
    if negated {
        cur.bump();
    }
    let atom = program.atom(&cur.name()?);
    Ok(if negated { Literal::neg(atom) } else { Literal::pos(atom) })
}
