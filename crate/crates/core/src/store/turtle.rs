//! Reader and writer for the Turtle subset used for city data.
//!
//! Supported: `@prefix` / `PREFIX` directives, prefixed names (local names may start
//! with a digit), `<absolute IRIs>`, `_:blank` nodes, the `a` keyword, `;` predicate
//! lists, `,` object lists, string / integer / decimal / boolean literals with optional
//! `^^datatype`, and `#` comments. Collections, `[...]` property lists, language tags
//! and relative IRIs are rejected.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::graph::{Graph, GraphBuilder};
use super::prefixes::{is_local_char, is_prefix_char, is_valid_prefix, PrefixMap};
use super::term::{
    escape_string, is_decimal_lexical, is_integer_lexical, Iri, Literal, LiteralKind, Term, Triple,
};
use super::vocab::rdf;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("syntax error: unexpected end of input, expected {0}")]
    UnexpectedEof(String),
    #[error("undeclared prefix `{0}:`")]
    UndeclaredPrefix(String),
    #[error("literal in {0} position")]
    LiteralPosition(&'static str),
    #[error("blank node in predicate position")]
    BlankPredicate,
    #[error("invalid {kind} literal {lexical:?}")]
    InvalidLiteral { lexical: String, kind: LiteralKind },
    #[error("unsupported datatype {0}")]
    UnsupportedDatatype(String),
    #[error("comma-grouped number; write plain digits")]
    GroupedNumber,
    #[error("relative or malformed IRI <{0}>")]
    BadIri(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    IriRef(String),
    PName { prefix: String, local: String },
    Blank(String),
    Str(String),
    Integer(String),
    Decimal(String),
    Bool(bool),
    A,
    Dot,
    Semicolon,
    Comma,
    DoubleCaret,
    AtPrefix,
    SparqlPrefix,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::IriRef(s) => write!(f, "<{s}>"),
            Tok::PName { prefix, local } => write!(f, "{prefix}:{local}"),
            Tok::Blank(l) => write!(f, "_:{l}"),
            Tok::Str(s) => write!(f, "\"{}\"", escape_string(s)),
            Tok::Integer(s) | Tok::Decimal(s) => f.write_str(s),
            Tok::Bool(b) => write!(f, "{b}"),
            Tok::A => f.write_str("a"),
            Tok::Dot => f.write_str("."),
            Tok::Semicolon => f.write_str(";"),
            Tok::Comma => f.write_str(","),
            Tok::DoubleCaret => f.write_str("^^"),
            Tok::AtPrefix => f.write_str("@prefix"),
            Tok::SparqlPrefix => f.write_str("PREFIX"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn err(&self, pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError { line: pos.line, column: pos.column, kind }
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, Pos)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            let pos = self.pos();
            let Some(c) = self.peek() else {
                out.push((Tok::Eof, pos));
                return Ok(out);
            };
            let tok = match c {
                '<' => self.iri_ref(pos)?,
                '"' | '\'' => self.string(pos)?,
                '.' => {
                    self.bump();
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.err(pos, ParseErrorKind::Syntax(
                            "decimals need a leading digit".into(),
                        )));
                    }
                    Tok::Dot
                }
                ';' => {
                    self.bump();
                    Tok::Semicolon
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '^' => {
                    self.bump();
                    if self.bump() != Some('^') {
                        return Err(self.err(pos, ParseErrorKind::Syntax("expected `^^`".into())));
                    }
                    Tok::DoubleCaret
                }
                '@' => {
                    self.bump();
                    let word = self.take_while(|c| c.is_ascii_alphabetic());
                    if word == "prefix" {
                        Tok::AtPrefix
                    } else {
                        return Err(self.err(pos, ParseErrorKind::Syntax(format!(
                            "unsupported directive or language tag `@{word}`"
                        ))));
                    }
                }
                '_' => self.blank(pos)?,
                '+' | '-' | '0'..='9' => self.number(pos)?,
                ':' => self.pname(String::new()),
                c if c.is_alphabetic() => self.word(pos)?,
                c => {
                    return Err(self.err(pos, ParseErrorKind::Syntax(format!("unexpected character `{c}`"))))
                }
            };
            out.push((tok, pos));
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn iri_ref(&mut self, pos: Pos) -> Result<Tok, ParseError> {
        self.bump();
        let mut s = String::new();
        loop {
            match self.bump() {
                Some('>') => break,
                Some(c) if c.is_whitespace() => {
                    return Err(self.err(pos, ParseErrorKind::BadIri(s)));
                }
                Some(c) => s.push(c),
                None => return Err(self.err(self.pos(), ParseErrorKind::UnexpectedEof("`>`".into()))),
            }
        }
        Ok(Tok::IriRef(s))
    }

    fn string(&mut self, pos: Pos) -> Result<Tok, ParseError> {
        let quote = self.bump().unwrap();
        let mut s = String::new();
        loop {
            match self.bump() {
                Some(c) if c == quote => break,
                Some('\n') | None => {
                    return Err(self.err(pos, ParseErrorKind::Syntax("unterminated string".into())));
                }
                Some('\\') => {
                    let esc_pos = self.pos();
                    let c = match self.bump() {
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some(u @ ('u' | 'U')) => {
                            let n = if u == 'u' { 4 } else { 8 };
                            let hex: String = (0..n).filter_map(|_| self.bump()).collect();
                            u32::from_str_radix(&hex, 16)
                                .ok()
                                .filter(|_| hex.len() == n)
                                .and_then(char::from_u32)
                                .ok_or_else(|| {
                                    self.err(esc_pos, ParseErrorKind::Syntax(format!("bad escape \\{u}{hex}")))
                                })?
                        }
                        other => {
                            return Err(self.err(esc_pos, ParseErrorKind::Syntax(format!(
                                "unknown escape \\{}",
                                other.map(String::from).unwrap_or_default()
                            ))));
                        }
                    };
                    s.push(c);
                }
                Some(c) => s.push(c),
            }
        }
        Ok(Tok::Str(s))
    }

    fn blank(&mut self, pos: Pos) -> Result<Tok, ParseError> {
        self.bump();
        if self.bump() != Some(':') {
            return Err(self.err(pos, ParseErrorKind::Syntax("expected `_:` blank node".into())));
        }
        let label = self.take_while(|c| c.is_alphanumeric() || c == '_' || c == '-');
        if label.is_empty() {
            return Err(self.err(pos, ParseErrorKind::Syntax("empty blank node label".into())));
        }
        Ok(Tok::Blank(label))
    }

    fn number(&mut self, pos: Pos) -> Result<Tok, ParseError> {
        let mut s = String::new();
        if let Some(c @ ('+' | '-')) = self.peek() {
            s.push(c);
            self.bump();
        }
        let int = self.take_while(|c| c.is_ascii_digit());
        if int.is_empty() {
            return Err(self.err(pos, ParseErrorKind::Syntax("expected digits".into())));
        }
        s.push_str(&int);
        let mut decimal = false;
        // A `.` is part of the number only when a digit follows; otherwise it ends the
        // statement (`ex:a ex:p 12.`).
        let mut look = self.chars.clone();
        if look.next() == Some('.') && look.next().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            s.push('.');
            s.push_str(&self.take_while(|c| c.is_ascii_digit()));
            decimal = true;
        }
        let mut look = self.chars.clone();
        match (look.next(), look.next()) {
            (Some(','), Some(d)) if d.is_ascii_digit() => {
                return Err(self.err(pos, ParseErrorKind::GroupedNumber));
            }
            (Some(c), _) if c.is_alphanumeric() || c == '_' || c == ':' => {
                return Err(self.err(pos, ParseErrorKind::Syntax(format!(
                    "unexpected `{c}` after number {s}"
                ))));
            }
            _ => {}
        }
        Ok(if decimal { Tok::Decimal(s) } else { Tok::Integer(s) })
    }

    /// Consumes a run of name characters. A `.` is taken only when more name characters
    /// follow it, so a name never swallows the statement terminator.
    fn take_name(&mut self, is_name_char: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        loop {
            match self.peek() {
                Some('.') => {
                    let mut look = self.chars.clone();
                    let mut dots = 0;
                    while look.peek() == Some(&'.') {
                        look.next();
                        dots += 1;
                    }
                    if !look.peek().is_some_and(|&c| c != '.' && is_name_char(c)) {
                        return s;
                    }
                    for _ in 0..dots {
                        s.push('.');
                        self.bump();
                    }
                }
                Some(c) if is_name_char(c) => {
                    s.push(c);
                    self.bump();
                }
                _ => return s,
            }
        }
    }

    fn word(&mut self, pos: Pos) -> Result<Tok, ParseError> {
        let word = self.take_name(|c| is_prefix_char(c) || c == '.');
        if self.peek() == Some(':') {
            if !is_valid_prefix(&word) {
                return Err(self.err(pos, ParseErrorKind::Syntax(format!("invalid prefix `{word}`"))));
            }
            return Ok(self.pname(word));
        }
        Ok(match word.as_str() {
            "a" => Tok::A,
            "true" => Tok::Bool(true),
            "false" => Tok::Bool(false),
            w if w.eq_ignore_ascii_case("prefix") => Tok::SparqlPrefix,
            w => {
                return Err(self.err(pos, ParseErrorKind::Syntax(format!(
                    "unexpected bare word `{w}` (prefixed names need `prefix:`)"
                ))));
            }
        })
    }

    fn pname(&mut self, prefix: String) -> Tok {
        self.bump(); // ':'
        let local = self.take_name(is_local_char);
        Tok::PName { prefix, local }
    }
}

#[derive(Debug, Clone)]
enum RawTerm {
    Iri(String),
    PName { prefix: String, local: String },
    Blank(String),
    Literal { lexical: String, kind: RawKind },
}

#[derive(Debug, Clone)]
enum RawKind {
    Known(LiteralKind),
    Typed(Box<RawTerm>),
}

struct Parser<'p> {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    prefixes: &'p mut PrefixMap,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err_at(pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError { line: pos.line, column: pos.column, kind }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let (tok, pos) = &self.toks[self.i];
        let kind = match tok {
            Tok::Eof => ParseErrorKind::UnexpectedEof(expected.to_string()),
            t => ParseErrorKind::Syntax(format!("expected {expected}, found `{t}`")),
        };
        Self::err_at(*pos, kind)
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn document(&mut self, out: &mut GraphBuilder) -> Result<(), ParseError> {
        loop {
            match self.peek() {
                Tok::Eof => return Ok(()),
                Tok::AtPrefix => {
                    self.next();
                    self.prefix_decl()?;
                    self.expect(Tok::Dot, "`.` after @prefix")?;
                }
                Tok::SparqlPrefix => {
                    self.next();
                    self.prefix_decl()?;
                }
                _ => {
                    let raw = self.triples()?;
                    self.expect(Tok::Dot, "`.`")?;
                    for (s, p, o) in raw {
                        let subject = self.resolve(s, Position::Subject)?;
                        let predicate = self.resolve(p, Position::Predicate)?;
                        let object = self.resolve(o, Position::Object)?;
                        out.insert(Triple { subject, predicate, object });
                    }
                }
            }
        }
    }

    fn prefix_decl(&mut self) -> Result<(), ParseError> {
        let (tok, pos) = self.next();
        let Tok::PName { prefix, local } = tok else {
            return Err(Self::err_at(pos, ParseErrorKind::Syntax("expected `prefix:`".into())));
        };
        if !local.is_empty() {
            return Err(Self::err_at(pos, ParseErrorKind::Syntax(format!(
                "prefix declaration `{prefix}:{local}` has a local part"
            ))));
        }
        let (tok, pos) = self.next();
        let Tok::IriRef(ns) = tok else {
            return Err(Self::err_at(pos, ParseErrorKind::Syntax("expected <namespace IRI>".into())));
        };
        if Iri::new(ns.clone()).is_err() {
            return Err(Self::err_at(pos, ParseErrorKind::BadIri(ns)));
        }
        self.prefixes.insert(prefix, ns);
        Ok(())
    }

    #[allow(clippy::type_complexity)]
    fn triples(&mut self) -> Result<Vec<((RawTerm, Pos), (RawTerm, Pos), (RawTerm, Pos))>, ParseError> {
        let subject = self.term("subject")?;
        let mut out = Vec::new();
        loop {
            let predicate = match self.peek() {
                Tok::A => {
                    let (_, pos) = self.next();
                    (RawTerm::Iri(rdf::type_().as_str().to_string()), pos)
                }
                _ => self.term("predicate")?,
            };
            loop {
                let object = self.term("object")?;
                out.push((subject.clone(), predicate.clone(), object));
                if *self.peek() == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
            if *self.peek() != Tok::Semicolon {
                return Ok(out);
            }
            while *self.peek() == Tok::Semicolon {
                self.next();
            }
            if matches!(self.peek(), Tok::Dot | Tok::Eof) {
                return Ok(out);
            }
        }
    }

    fn term(&mut self, role: &str) -> Result<(RawTerm, Pos), ParseError> {
        let pos = self.pos();
        let raw = match self.peek().clone() {
            Tok::IriRef(s) => RawTerm::Iri(s),
            Tok::PName { prefix, local } => RawTerm::PName { prefix, local },
            Tok::Blank(l) => RawTerm::Blank(l),
            Tok::Integer(s) => RawTerm::Literal { lexical: s, kind: RawKind::Known(LiteralKind::Integer) },
            Tok::Decimal(s) => RawTerm::Literal { lexical: s, kind: RawKind::Known(LiteralKind::Decimal) },
            Tok::Bool(b) => RawTerm::Literal {
                lexical: b.to_string(),
                kind: RawKind::Known(LiteralKind::Boolean),
            },
            Tok::Str(s) => {
                self.next();
                if *self.peek() == Tok::DoubleCaret {
                    self.next();
                    let (dt, _) = self.term("datatype IRI")?;
                    if !matches!(dt, RawTerm::Iri(_) | RawTerm::PName { .. }) {
                        return Err(Self::err_at(pos, ParseErrorKind::Syntax(
                            "datatype must be an IRI".into(),
                        )));
                    }
                    return Ok((RawTerm::Literal { lexical: s, kind: RawKind::Typed(Box::new(dt)) }, pos));
                }
                return Ok((RawTerm::Literal { lexical: s, kind: RawKind::Known(LiteralKind::String) }, pos));
            }
            _ => return Err(self.unexpected(role)),
        };
        self.next();
        Ok((raw, pos))
    }

    fn resolve_iri(&self, raw: &RawTerm, pos: Pos) -> Result<Iri, ParseError> {
        match raw {
            RawTerm::Iri(s) => Iri::new(s.clone()).map_err(|_| Self::err_at(pos, ParseErrorKind::BadIri(s.clone()))),
            RawTerm::PName { prefix, local } => self
                .prefixes
                .expand(prefix, local)
                .ok_or_else(|| Self::err_at(pos, ParseErrorKind::UndeclaredPrefix(prefix.clone()))),
            _ => unreachable!("only called on IRI-shaped terms"),
        }
    }

    fn resolve(&self, (raw, pos): (RawTerm, Pos), position: Position) -> Result<Term, ParseError> {
        match &raw {
            RawTerm::Iri(_) | RawTerm::PName { .. } => Ok(Term::Iri(self.resolve_iri(&raw, pos)?)),
            RawTerm::Blank(label) => {
                if position == Position::Predicate {
                    return Err(Self::err_at(pos, ParseErrorKind::BlankPredicate));
                }
                Ok(Term::BlankNode(label.clone()))
            }
            RawTerm::Literal { lexical, kind } => {
                match position {
                    Position::Subject => return Err(Self::err_at(pos, ParseErrorKind::LiteralPosition("subject"))),
                    Position::Predicate => {
                        return Err(Self::err_at(pos, ParseErrorKind::LiteralPosition("predicate")))
                    }
                    Position::Object => {}
                }
                let kind = match kind {
                    RawKind::Known(k) => *k,
                    RawKind::Typed(dt) => {
                        let dt = self.resolve_iri(dt, pos)?;
                        LiteralKind::from_datatype(&dt).ok_or_else(|| {
                            Self::err_at(pos, ParseErrorKind::UnsupportedDatatype(dt.as_str().to_string()))
                        })?
                    }
                };
                Literal::new(lexical.clone(), kind).map(Term::Literal).map_err(|_| {
                    Self::err_at(pos, ParseErrorKind::InvalidLiteral { lexical: lexical.clone(), kind })
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Position {
    Subject,
    Predicate,
    Object,
}

/// Parses a document. The resulting graph's prefixes are `base_prefixes` overlaid
/// with the document's own declarations.
pub fn parse_turtle(text: &str, base_prefixes: &PrefixMap) -> Result<Graph, ParseError> {
    let mut builder = GraphBuilder::new(base_prefixes.clone());
    parse_into(text, &mut builder)?;
    Ok(builder.freeze())
}

/// Parses a document into an existing builder, so several files can be loaded into
/// one graph. Prefix declarations accumulate in the builder.
pub fn parse_into(text: &str, builder: &mut GraphBuilder) -> Result<(), ParseError> {
    let toks = Lexer::new(text).tokenize()?;
    let mut prefixes = builder.prefixes_mut().clone();
    let mut triples = GraphBuilder::new(PrefixMap::empty());
    Parser { toks, i: 0, prefixes: &mut prefixes }.document(&mut triples)?;
    *builder.prefixes_mut() = prefixes;
    builder.extend(triples.freeze().triples().iter().cloned());
    Ok(())
}

/// Reads only the prefix declarations of a document (used for extra prefix files).
pub fn parse_prefixes(text: &str) -> Result<PrefixMap, ParseError> {
    let mut builder = GraphBuilder::new(PrefixMap::empty());
    parse_into(text, &mut builder)?;
    Ok(builder.freeze().prefixes().clone())
}

/// Writes the graph in the same subset. Every prefix in the graph's map is declared,
/// triples are grouped by subject, and IRIs are written in prefixed form whenever the
/// compacted name re-expands to the same IRI.
pub fn serialize_turtle(graph: &Graph) -> String {
    let prefixes = graph.prefixes();
    let mut out = String::new();
    for (p, ns) in prefixes.iter() {
        let _ = writeln!(out, "@prefix {p}: <{ns}> .");
    }
    let triples = graph.triples();
    let mut i = 0;
    while i < triples.len() {
        let subject = &triples[i].subject;
        let _ = write!(out, "\n{}", write_term(subject, prefixes));
        let mut first_predicate = true;
        while i < triples.len() && &triples[i].subject == subject {
            let predicate = &triples[i].predicate;
            if !first_predicate {
                out.push_str(" ;\n   ");
            }
            first_predicate = false;
            let p = match predicate {
                Term::Iri(iri) if *iri == rdf::type_() => "a".to_string(),
                other => write_term(other, prefixes),
            };
            let _ = write!(out, " {p} ");
            let mut first_object = true;
            while i < triples.len() && &triples[i].subject == subject && &triples[i].predicate == predicate {
                if !first_object {
                    out.push_str(", ");
                }
                first_object = false;
                out.push_str(&write_term(&triples[i].object, prefixes));
                i += 1;
            }
        }
        out.push_str(" .\n");
    }
    out
}

fn write_term(term: &Term, prefixes: &PrefixMap) -> String {
    match term {
        Term::Iri(iri) => prefixes.display(iri),
        Term::BlankNode(label) => format!("_:{label}"),
        Term::Literal(lit) => write_literal(lit, prefixes),
    }
}

fn write_literal(lit: &Literal, prefixes: &PrefixMap) -> String {
    let lex = lit.lexical();
    let bare = match lit.kind() {
        LiteralKind::String => return format!("\"{}\"", escape_string(lex)),
        LiteralKind::Integer => is_integer_lexical(lex),
        LiteralKind::Decimal => {
            let body = lex.strip_prefix(['+', '-']).unwrap_or(lex);
            is_decimal_lexical(lex)
                && body.split_once('.').is_some_and(|(a, b)| !a.is_empty() && !b.is_empty())
        }
        LiteralKind::Boolean => true,
        LiteralKind::DateTime => false,
    };
    if bare {
        lex.to_string()
    } else {
        let dt = lit.kind().datatype();
        let dt = match prefixes.compact(&dt) {
            Some((p, local)) => format!("{p}:{local}"),
            None => format!("<{}>", dt.as_str()),
        };
        format!("\"{}\"^^{dt}", escape_string(lex))
    }
}
