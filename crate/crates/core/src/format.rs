//! Framework text format.
//!
//! ```text
//! % the sorbet menu
//! flavor(rafn).
//! arg(f). arg(m). arg(s).
//! att(a1, f, m). att(a7, s, a1).
//! sup(b1, f, w).
//! ```
//!
//! Statements end with `.` and may share a line; `%` comments run to the end
//! of the line. Declarations may appear in any order.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::framework::{Flavor, Framework, FrameworkError, Interaction, RawFramework};
use crate::lexer::{Cursor, Position, Token};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{position}: {message}")]
    Syntax { position: Position, message: String },
    #[error("no flavor directive")]
    MissingFlavor,
    #[error("{position}: second flavor directive")]
    DuplicateFlavor { position: Position },
    #[error("{}{source}", .position.map(|p| format!("{p}: ")).unwrap_or_default())]
    Invalid {
        position: Option<Position>,
        source: FrameworkError,
    },
}

impl From<(Position, String)> for ParseError {
    fn from((position, message): (Position, String)) -> Self {
        ParseError::Syntax { position, message }
    }
}

#[derive(Default)]
struct Positions {
    declarations: Vec<(String, Position)>,
    attacks: Vec<Position>,
    supports: Vec<Position>,
}

pub fn parse_framework(input: &str) -> Result<Framework, ParseError> {
    let mut cur = Cursor::new(input)?;
    let mut flavor = None;
    let mut arguments = Vec::new();
    let mut attacks = Vec::new();
    let mut supports = Vec::new();
    let mut pos = Positions::default();

    while !cur.is_done() {
        let start = cur.position();
        let keyword = cur.name()?;
        cur.expect(Token::LParen)?;
        match keyword.as_str() {
            "flavor" => {
                let at = cur.position();
                let value = cur.name()?;
                let parsed: Flavor = value.parse().map_err(|m| ParseError::Syntax { position: at, message: m })?;
                if flavor.replace(parsed).is_some() {
                    return Err(ParseError::DuplicateFlavor { position: start });
                }
            }
            "arg" => {
                let name = cur.name()?;
                pos.declarations.push((name.clone(), start));
                arguments.push(name);
            }
            "att" | "sup" => {
                let name = cur.name()?;
                cur.expect(Token::Comma)?;
                let source = cur.name()?;
                cur.expect(Token::Comma)?;
                let target = cur.name()?;
                pos.declarations.push((name.clone(), start));
                let inter = Interaction { name, source, target };
                if keyword == "att" {
                    pos.attacks.push(start);
                    attacks.push(inter);
                } else {
                    pos.supports.push(start);
                    supports.push(inter);
                }
            }
            other => {
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unknown statement `{other}`; expected flavor, arg, att or sup"),
                })
            }
        }
        cur.expect(Token::RParen)?;
        cur.expect(Token::Dot)?;
    }

    let flavor = flavor.ok_or(ParseError::MissingFlavor)?;
    let raw = RawFramework {
        flavor,
        arguments,
        attacks,
        supports,
    };
    Framework::new(raw.clone()).map_err(|source| ParseError::Invalid {
        position: locate(&raw, &pos, &source),
        source,
    })
}

/// Position of the statement responsible for a validation error.
fn locate(raw: &RawFramework, pos: &Positions, err: &FrameworkError) -> Option<Position> {
    let interactions = || {
        raw.attacks
            .iter()
            .zip(&pos.attacks)
            .chain(raw.supports.iter().zip(&pos.supports))
    };
    match err {
        FrameworkError::DuplicateName(name) => pos
            .declarations
            .iter()
            .filter(|(n, _)| n == name)
            .nth(1)
            .map(|&(_, p)| p),
        FrameworkError::DanglingEndpoint { interaction, .. } => {
            interactions().find(|(i, _)| &i.name == interaction).map(|(_, &p)| p)
        }
        FrameworkError::FlavorViolation(_) => {
            if raw.flavor == Flavor::Af {
                if let Some(&p) = pos.supports.first() {
                    return Some(p);
                }
            }
            let kinds: HashMap<&str, bool> = raw
                .arguments
                .iter()
                .map(|a| (a.as_str(), true))
                .chain(interactions().map(|(i, _)| (i.name.as_str(), false)))
                .collect();
            let is_arg = |n: &str| kinds.get(n).copied().unwrap_or(false);
            interactions()
                .find(|(i, _)| !is_arg(&i.source) || (!raw.flavor.is_recursive() && !is_arg(&i.target)))
                .map(|(_, &p)| p)
        }
        _ => None,
    }
}

/// Canonical text: the flavor, then arguments, attacks and supports in
/// declaration order, one statement per line.
pub fn print_framework(fw: &Framework) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "flavor({}).", fw.flavor().keyword());
    for a in fw.arguments() {
        let _ = writeln!(out, "arg({}).", fw.name(a));
    }
    let interactions = fw.attacks().map(|x| ("att", x)).chain(fw.supports().map(|x| ("sup", x)));
    for (kw, x) in interactions {
        let (s, t) = fw.endpoints(x);
        let _ = writeln!(out, "{kw}({},{},{}).", fw.name(x), fw.name(s), fw.name(t));
    }
    out
}

/// Whether `name` can be written in the text format.
pub fn is_printable_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(crate::lexer::is_name_char)
}
