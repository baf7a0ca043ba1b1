//! Tokenizer shared by the framework and program text formats.
//!
//! Names are runs of characters other than whitespace and `( ) , . | : % #`.
//! `%` starts a comment running to the end of the line.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Name(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Pipe,
    Implies,
    Hash,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => write!(f, "`{n}`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Dot => f.write_str("`.`"),
            Token::Pipe => f.write_str("`|`"),
            Token::Implies => f.write_str("`:-`"),
            Token::Hash => f.write_str("`#`"),
        }
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

pub(crate) fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !"(),.|:%#".contains(c)
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<(Token, Position)>, (Position, String)> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    let mut pos = Position { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Position| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
            continue;
        }
        if c == '%' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                advance(c, &mut pos);
            }
            continue;
        }
        let single = match c {
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            '.' => Some(Token::Dot),
            '|' => Some(Token::Pipe),
            '#' => Some(Token::Hash),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            advance(c, &mut pos);
            tokens.push((tok, start));
            continue;
        }
        if c == ':' {
            chars.next();
            advance(c, &mut pos);
            if chars.peek() == Some(&'-') {
                chars.next();
                advance('-', &mut pos);
                tokens.push((Token::Implies, start));
                continue;
            }
            return Err((start, "expected `:-`".to_string()));
        }
        let mut name = String::new();
        while let Some(&c) = chars.peek() {
            if !is_name_char(c) {
                break;
            }
            name.push(c);
            chars.next();
            advance(c, &mut pos);
        }
        tokens.push((Token::Name(name), start));
    }
    Ok(tokens)
}

/// Cursor over a token stream that reports the position of the end of input.
pub(crate) struct Cursor {
    tokens: Vec<(Token, Position)>,
    next: usize,
    end: Position,
}

impl Cursor {
    pub(crate) fn new(input: &str) -> Result<Self, (Position, String)> {
        let tokens = tokenize(input)?;
        let end = end_position(input);
        Ok(Cursor { tokens, next: 0, end })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next).map(|(t, _)| t)
    }

    pub(crate) fn peek_at(&self, offset: usize) -> Option<&Token> {
        self.tokens.get(self.next + offset).map(|(t, _)| t)
    }

    pub(crate) fn position(&self) -> Position {
        self.tokens.get(self.next).map(|&(_, p)| p).unwrap_or(self.end)
    }

    pub(crate) fn bump(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.next).map(|(t, _)| t.clone());
        self.next += 1;
        tok
    }

    pub(crate) fn is_done(&self) -> bool {
        self.next >= self.tokens.len()
    }

    pub(crate) fn expect(&mut self, want: Token) -> Result<(), (Position, String)> {
        let pos = self.position();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err((pos, format!("expected {want}, found {t}"))),
            None => Err((pos, format!("expected {want}, found end of input"))),
        }
    }

    pub(crate) fn name(&mut self) -> Result<String, (Position, String)> {
        let pos = self.position();
        match self.bump() {
            Some(Token::Name(n)) => Ok(n),
            Some(t) => Err((pos, format!("expected a name, found {t}"))),
            None => Err((pos, "expected a name, found end of input".to_string())),
        }
    }
}

fn end_position(input: &str) -> Position {
    let mut pos = Position { line: 1, column: 1 };
    for c in input.chars() {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    }
    pos
}
