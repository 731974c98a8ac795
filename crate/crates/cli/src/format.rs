//! Presentation text formats.
//!
//! Two formats are supported:
//!
//! * **explicit**: `< a, b | (a*b)^2, b^-1*a*b*a^-2 >` — declared generator
//!   names, `*`-separated factors, integer exponents, parenthesized
//!   subwords. Robust and name-preserving.
//! * **compact**: one line of single letters per relator, lowercase for a
//!   generator and uppercase for its inverse (`abC` is `a b c^-1`), at most
//!   26 generators. Generators are implied by the letters used.
//!
//! Parsing canonicalizes and normalizes; parse errors carry line, column and
//! what was expected.

use crate::error::{CliError, ParseError};
use tietze_core::word::canonical_form;
use tietze_core::{Presentation, Relator, Symbol};

/// Which text format a file uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Explicit,
    Compact,
}

/// Parses a presentation in the given format.
pub fn parse(text: &str, format: Format) -> Result<Presentation, CliError> {
    match format {
        Format::Explicit => parse_explicit(text),
        Format::Compact => parse_compact(text),
    }
}

/// Serializes a presentation in the given format. Only live generators are
/// written; the compact format refuses more than 26 of them.
pub fn serialize(p: &Presentation, format: Format) -> Result<String, CliError> {
    match format {
        Format::Explicit => Ok(serialize_explicit(p)),
        Format::Compact => serialize_compact(p),
    }
}

// ---------------------------------------------------------------- explicit

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Less,
    Greater,
    Pipe,
    Comma,
    Star,
    Caret,
    LParen,
    RParen,
    Name(String),
    Int(i64),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Less => "'<'".into(),
            Token::Greater => "'>'".into(),
            Token::Pipe => "'|'".into(),
            Token::Comma => "','".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Name(n) => format!("name '{n}'"),
            Token::Int(v) => format!("integer {v}"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

type Spanned = (Token, u32, u32);

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.bump() else { break };
            let token = match c {
                '<' => Token::Less,
                '>' => Token::Greater,
                '|' => Token::Pipe,
                ',' => Token::Comma,
                '*' => Token::Star,
                '^' => Token::Caret,
                '(' => Token::LParen,
                ')' => Token::RParen,
                '-' | '0'..='9' => {
                    let mut digits = String::new();
                    let negative = c == '-';
                    if !negative {
                        digits.push(c);
                    }
                    while self.chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                        digits.push(self.bump().expect("peeked"));
                    }
                    if digits.is_empty() {
                        return Err(ParseError::new(line, col, "digits after '-'", "'-'"));
                    }
                    let value: i64 = digits.parse().map_err(|_| {
                        ParseError::new(line, col, "an integer in range", &digits)
                    })?;
                    Token::Int(if negative { -value } else { value })
                }
                c if c.is_ascii_alphabetic() => {
                    let mut name = String::new();
                    name.push(c);
                    while self
                        .chars
                        .peek()
                        .is_some_and(|d| d.is_ascii_alphanumeric() || *d == '_')
                    {
                        name.push(self.bump().expect("peeked"));
                    }
                    Token::Name(name)
                }
                other => {
                    return Err(ParseError::new(
                        line,
                        col,
                        "a token",
                        &format!("'{other}'"),
                    ))
                }
            };
            out.push((token, line, col));
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: (u32, u32),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (u32, u32) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.tokens
            .get(self.pos)
            .map(|(t, _, _)| t.describe())
            .unwrap_or_else(|| "end of input".into())
    }

    fn error(&self, expected: &str) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, expected, &self.found())
    }

    fn eat(&mut self, want: &Token, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn eat_name(&mut self, expected: &str) -> Result<String, ParseError> {
        if let Some(Token::Name(n)) = self.peek() {
            let n = n.clone();
            self.pos += 1;
            Ok(n)
        } else {
            Err(self.error(expected))
        }
    }

    /// word := factor ('*' factor)*
    fn word(&mut self, gens: &Gens) -> Result<Vec<Symbol>, ParseError> {
        let mut out = self.factor(gens)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            out.extend(self.factor(gens)?);
        }
        Ok(out)
    }

    /// factor := (name | '(' word ')') ('^' int)?
    fn factor(&mut self, gens: &Gens) -> Result<Vec<Symbol>, ParseError> {
        let (line, col) = self.here();
        let base: Vec<Symbol> = match self.peek() {
            Some(Token::Name(_)) => {
                let name = self.eat_name("a generator name")?;
                let index = gens.lookup(&name).ok_or_else(|| {
                    ParseError::new(line, col, "a declared generator", &format!("'{name}'"))
                })?;
                vec![Symbol::new(index as i32 + 1)]
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.word(gens)?;
                self.eat(&Token::RParen, "')'")?;
                inner
            }
            _ => return Err(self.error("a generator name or '('")),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let (eline, ecol) = self.here();
            let Some(Token::Int(exp)) = self.peek().cloned() else {
                return Err(self.error("an exponent"));
            };
            self.pos += 1;
            if exp == 0 {
                return Err(ParseError::new(eline, ecol, "a nonzero exponent", "0"));
            }
            if exp.unsigned_abs() > 1_000_000 {
                return Err(ParseError::new(eline, ecol, "a sane exponent", "a huge one"));
            }
            let unit: Vec<Symbol> = if exp < 0 {
                base.iter().rev().map(|s| s.inverse()).collect()
            } else {
                base
            };
            let mut out = Vec::with_capacity(unit.len() * exp.unsigned_abs() as usize);
            for _ in 0..exp.unsigned_abs() {
                out.extend_from_slice(&unit);
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }
}

struct Gens {
    names: Vec<String>,
}

impl Gens {
    fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn parse_explicit(text: &str) -> Result<Presentation, CliError> {
    let last_line = text.lines().count().max(1) as u32;
    let last_col = text.lines().last().map_or(1, |l| l.chars().count() as u32 + 1);
    let tokens = Lexer::new(text).tokens()?;
    let mut p = Parser { tokens, pos: 0, end: (last_line, last_col) };

    p.eat(&Token::Less, "'<'")?;
    let mut names: Vec<String> = Vec::new();
    if matches!(p.peek(), Some(Token::Name(_))) {
        loop {
            let (line, col) = p.here();
            let name = p.eat_name("a generator name")?;
            if names.contains(&name) {
                return Err(ParseError::new(
                    line,
                    col,
                    "a fresh generator name",
                    &format!("duplicate '{name}'"),
                )
                .into());
            }
            names.push(name);
            if p.peek() == Some(&Token::Comma) {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.eat(&Token::Pipe, "'|'")?;
    let gens = Gens { names };
    let mut relators: Vec<Relator> = Vec::new();
    if p.peek() != Some(&Token::Greater) {
        loop {
            let raw = p.word(&gens)?;
            relators.push(canonical_form(&raw));
            if p.peek() == Some(&Token::Comma) {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.eat(&Token::Greater, "'>'")?;
    if p.peek().is_some() {
        return Err(p.error("end of input").into());
    }
    Presentation::new(gens.names, relators).map_err(CliError::Core)
}

// ----------------------------------------------------------------- compact

fn parse_compact(text: &str) -> Result<Presentation, CliError> {
    let mut relators: Vec<Relator> = Vec::new();
    let mut max_gen = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let mut raw: Vec<Symbol> = Vec::new();
        for (colno, c) in line.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            let value = if c.is_ascii_lowercase() {
                c as i32 - 'a' as i32 + 1
            } else if c.is_ascii_uppercase() {
                -(c as i32 - 'A' as i32 + 1)
            } else {
                return Err(ParseError::new(
                    lineno as u32 + 1,
                    colno as u32 + 1,
                    "a letter",
                    &format!("'{c}'"),
                )
                .into());
            };
            max_gen = max_gen.max(value.unsigned_abs() as usize);
            raw.push(Symbol::new(value));
        }
        if !raw.is_empty() {
            relators.push(canonical_form(&raw));
        }
    }
    let names: Vec<String> = (0..max_gen)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    Presentation::new(names, relators).map_err(CliError::Core)
}

fn serialize_compact(p: &Presentation) -> Result<String, CliError> {
    let live = p.live_generators();
    if live.len() > 26 {
        return Err(CliError::CompactOverflow { live: live.len() });
    }
    let mut letter_of = vec![None::<char>; p.generators().len()];
    for (pos, &g) in live.iter().enumerate() {
        letter_of[g] = Some((b'a' + pos as u8) as char);
    }
    let mut out = String::new();
    for r in p.relators() {
        for s in r.symbols() {
            let c = letter_of[s.generator_index()].expect("live generator");
            out.push(if s.is_inverse() { c.to_ascii_uppercase() } else { c });
        }
        out.push('\n');
    }
    Ok(out)
}

// ------------------------------------------------------------- serializers

/// Writes a word in explicit syntax with runs collapsed into exponents.
/// The empty word is written `1` (it appears in transform logs, never in
/// stored relators).
pub fn word_text(symbols: &[Symbol], name_of: &dyn Fn(usize) -> String) -> String {
    if symbols.is_empty() {
        return "1".into();
    }
    let mut factors: Vec<String> = Vec::new();
    let mut i = 0;
    while i < symbols.len() {
        let s = symbols[i];
        let mut run = 1;
        while i + run < symbols.len() && symbols[i + run] == s {
            run += 1;
        }
        let name = name_of(s.generator_index());
        let exponent = if s.is_inverse() { -(run as i64) } else { run as i64 };
        if exponent == 1 {
            factors.push(name);
        } else {
            factors.push(format!("{name}^{exponent}"));
        }
        i += run;
    }
    factors.join("*")
}

fn serialize_explicit(p: &Presentation) -> String {
    let name_of = |g: usize| p.generators()[g].name.clone();
    let gens: Vec<String> = p
        .live_generators()
        .into_iter()
        .map(|g| p.generators()[g].name.clone())
        .collect();
    let relators: Vec<String> = p
        .relators()
        .iter()
        .map(|r| word_text(r.symbols(), &name_of))
        .collect();
    format!("< {} | {} >", gens.join(", "), relators.join(", "))
}
