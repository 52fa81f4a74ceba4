use thiserror::Error;

use super::formula::{BinaryOp, Formula, UnaryOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

/// Identifiers that cannot be used as atom names.
pub const KEYWORDS: [&str; 11] = ["true", "EX", "AX", "EF", "AG", "EG", "AF", "E", "A", "U", "R"];

pub fn is_valid_atom(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    Unary(UnaryOp),
    Quant(char),
    Until,
    Release,
    Bang,
    Amp,
    Pipe,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::True => "`true`".into(),
            Tok::Unary(op) => format!("`{}`", op.keyword()),
            Tok::Quant(c) => format!("`{c}`"),
            Tok::Until => "`U`".into(),
            Tok::Release => "`R`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'!' => Tok::Bang,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "EX" => Tok::Unary(UnaryOp::EX),
                    "AX" => Tok::Unary(UnaryOp::AX),
                    "EF" => Tok::Unary(UnaryOp::EF),
                    "AG" => Tok::Unary(UnaryOp::AG),
                    "EG" => Tok::Unary(UnaryOp::EG),
                    "AF" => Tok::Unary(UnaryOp::AF),
                    "E" => Tok::Quant('E'),
                    "A" => Tok::Quant('A'),
                    "U" => Tok::Until,
                    "R" => Tok::Release,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    pos: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        tok
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(what)
        }
    }

    // precedence, loosest first: ^ < | < & < unary
    fn xor(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.or()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            lhs = lhs.xor(self.or()?);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            lhs = lhs.or(self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Unary(op) => {
                self.bump();
                Ok(Formula::unary(op, self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::True => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.xor()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Quant(q) => {
                self.bump();
                self.expect(Tok::LBrack, "`[` after path quantifier")?;
                let lhs = self.xor()?;
                let op = match (q, self.peek()) {
                    ('E', Tok::Until) => BinaryOp::EU,
                    ('E', Tok::Release) => BinaryOp::ER,
                    ('A', Tok::Until) => BinaryOp::AU,
                    ('A', Tok::Release) => BinaryOp::AR,
                    _ => return self.error("`U` or `R`"),
                };
                self.bump();
                let rhs = self.xor()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Formula::binary(op, lhs, rhs))
            }
            _ => self.error("a formula"),
        }
    }
}

/// Parses the ASCII formula grammar.
///
/// Unary operators (`!`, `EX`, `AX`, `EF`, `AG`, `EG`, `AF`) bind tightest,
/// followed by `&`, `|` and finally `^`; all binary Boolean operators are
/// left-associative. Binary temporal operators are bracketed: `E[p U q]`,
/// `A[p R q]`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser { toks: lex(text)?, at: 0 };
    let phi = parser.xor()?;
    if *parser.peek() != Tok::Eof {
        return parser.error("end of input");
    }
    Ok(phi)
}
