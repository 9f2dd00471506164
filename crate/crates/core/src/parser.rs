//! Surface syntax for rules and programs.
//!
//! ```text
//! rule    := [head] [":-" [body]] "."  |  "#taut."
//! head    := lit (";" lit)*
//! body    := lit ("," lit)*
//! lit     := "not"* atom
//! atom    := [a-z][A-Za-z0-9_]*
//! comment := "%" to end of line
//! ```
//!
//! Pairs of `not` cancel. `#taut.` is the canonical tautology and `:-.` is the
//! rule with empty head and body. Printing goes through [`Rule`]'s `Display`
//! impl, and `parse_rule(&r.to_string())` gives back `r`.

use crate::domain::{is_atom_lexeme, Alphabet, Atom, Literals, Program, Rule};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    Semi,
    Comma,
    If,
    Dot,
    Taut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn error(pos: Pos, message: impl Into<String>) -> Error {
        Error::Syntax {
            rule: None,
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }

    fn word(&mut self) -> String {
        let mut word = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        word
    }

    fn tokens(mut self) -> Result<(Vec<(Token, Pos)>, Pos)> {
        let mut out = Vec::new();
        loop {
            let Some(&c) = self.chars.peek() else {
                return Ok((out, self.pos));
            };
            let start = self.pos;
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                '%' => {
                    while self.chars.peek().is_some_and(|&c| c != '\n') {
                        self.bump();
                    }
                }
                ';' | ',' | '.' => {
                    self.bump();
                    let t = match c {
                        ';' => Token::Semi,
                        ',' => Token::Comma,
                        _ => Token::Dot,
                    };
                    out.push((t, start));
                }
                ':' => {
                    self.bump();
                    if self.bump() != Some('-') {
                        return Err(Self::error(start, "expected `:-`"));
                    }
                    out.push((Token::If, start));
                }
                '#' => {
                    self.bump();
                    let word = self.word();
                    if word != "taut" {
                        return Err(Self::error(start, format!("unknown directive `#{word}`")));
                    }
                    out.push((Token::Taut, start));
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let word = self.word();
                    if word == "not" {
                        out.push((Token::Not, start));
                    } else if is_atom_lexeme(&word) {
                        out.push((Token::Ident(word), start));
                    } else {
                        return Err(Self::error(
                            start,
                            format!("invalid atom `{word}`: atoms must match [a-z][A-Za-z0-9_]*"),
                        ));
                    }
                }
                other => return Err(Self::error(start, format!("unexpected character `{other}`"))),
            }
        }
    }
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let (tokens, end) = Lexer::new(text).tokens()?;
        Ok(Self { tokens, at: 0, end })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn at_end(&self) -> bool {
        self.at == self.tokens.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Lexer::error(self.pos(), message)
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Token::Ident(name)) => format!("atom `{name}`"),
            Some(Token::Not) => "`not`".into(),
            Some(Token::Semi) => "`;`".into(),
            Some(Token::Comma) => "`,`".into(),
            Some(Token::If) => "`:-`".into(),
            Some(Token::Dot) => "`.`".into(),
            Some(Token::Taut) => "`#taut`".into(),
        }
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_dot(&mut self) -> Result<()> {
        if self.eat(&Token::Dot) {
            Ok(())
        } else {
            Err(self.error(format!("expected `.`, found {}", self.describe())))
        }
    }

    /// Returns the atom and whether it ended up negated.
    fn literal(&mut self) -> Result<(Atom, bool)> {
        let mut negated = false;
        while self.eat(&Token::Not) {
            negated = !negated;
        }
        match self.peek() {
            Some(Token::Ident(name)) => {
                let atom = Atom::new(name)?;
                self.at += 1;
                Ok((atom, negated))
            }
            _ => Err(self.error(format!("expected an atom, found {}", self.describe()))),
        }
    }

    fn rule(&mut self) -> Result<Rule> {
        if self.eat(&Token::Taut) {
            self.expect_dot()?;
            return Ok(Rule::Epsilon);
        }
        let mut lits = Literals::default();
        if !matches!(self.peek(), Some(Token::If | Token::Dot)) {
            loop {
                let (atom, negated) = self.literal()?;
                if negated {
                    lits.head_neg.insert(atom);
                } else {
                    lits.head_pos.insert(atom);
                }
                if !self.eat(&Token::Semi) {
                    break;
                }
            }
        }
        if self.eat(&Token::If) && self.peek() != Some(&Token::Dot) {
            loop {
                let (atom, negated) = self.literal()?;
                if negated {
                    lits.body_neg.insert(atom);
                } else {
                    lits.body_pos.insert(atom);
                }
                if !self.eat(&Token::Comma) {
                    break;
                }
            }
        }
        self.expect_dot()?;
        Ok(Rule::Proper(lits))
    }
}

/// Parses exactly one rule.
pub fn parse_rule(text: &str) -> Result<Rule> {
    let mut parser = Parser::new(text)?;
    let rule = parser.rule()?;
    if !parser.at_end() {
        return Err(parser.error(format!(
            "expected end of input after the rule, found {}",
            parser.describe()
        )));
    }
    Ok(rule)
}

/// Parses a sequence of rules. The alphabet is the set of atoms occurring in
/// the program; syntax errors carry the 1-based index of the offending rule.
pub fn parse_program(text: &str) -> Result<(Program, Alphabet)> {
    let mut parser = Parser::new(text)?;
    let mut program = Program::new();
    let mut index = 1;
    while !parser.at_end() {
        let rule = parser.rule().map_err(|e| match e {
            Error::Syntax {
                line,
                column,
                message,
                ..
            } => Error::Syntax {
                rule: Some(index),
                line,
                column,
                message,
            },
            other => other,
        })?;
        program.insert(rule);
        index += 1;
    }
    let alphabet = program.alphabet();
    Ok((program, alphabet))
}
