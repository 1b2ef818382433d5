use crate::store::vocab::rdf;
use crate::store::{Iri, Literal, LiteralKind, PrefixMap, Term};

use super::QueryError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternTerm {
    Var(String),
    Const(Term),
}

impl PatternTerm {
    pub fn var(&self) -> Option<&str> {
        match self {
            PatternTerm::Var(v) => Some(v),
            PatternTerm::Const(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn vars(&self) -> impl Iterator<Item = &str> {
        [&self.subject, &self.predicate, &self.object].into_iter().filter_map(PatternTerm::var)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Const(Term),
    Neg(Box<Expr>),
    Binary(Box<Expr>, ArithOp, Box<Expr>),
}

impl Expr {
    pub fn vars(&self) -> Vec<&str> {
        match self {
            Expr::Var(v) => vec![v],
            Expr::Const(_) => Vec::new(),
            Expr::Neg(e) => e.vars(),
            Expr::Binary(a, _, b) => {
                let mut out = a.vars();
                out.extend(b.vars());
                out
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    /// Case-sensitive substring match on the variable's literal text or IRI.
    TextMatch { var: String, pattern: String },
    Comparison { left: Expr, op: CompareOp, right: Expr },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    Var(String),
    Expr { expr: Expr, alias: String },
    /// `COUNT(?v)`, or `COUNT(*)` when `var` is `None`.
    Count { var: Option<String>, distinct: bool, alias: String },
}

impl Projection {
    pub fn column(&self) -> &str {
        match self {
            Projection::Var(v) => v,
            Projection::Expr { alias, .. } | Projection::Count { alias, .. } => alias,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub projection: Vec<Projection>,
    pub distinct: bool,
    pub patterns: Vec<TriplePattern>,
    pub filters: Vec<Filter>,
}

impl Query {
    pub fn is_aggregate(&self) -> bool {
        self.projection.iter().any(|p| matches!(p, Projection::Count { .. }))
    }

    /// Pattern variables in order of first appearance.
    pub fn pattern_vars(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in self.patterns.iter().flat_map(TriplePattern::vars) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Var(String),
    PName(String, String),
    IriRef(String),
    Str(String),
    Num(String),
    Punct(&'static str),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

const PUNCT: [&str; 17] = ["<=", ">=", "!=", "(", ")", "{", "}", ".", ",", ";", "*", "/", "+", "-", "=", "<", ">"];

impl<'a> Lexer<'a> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> QueryError {
        QueryError::Syntax { pos, msg: msg.into() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let t = r.trim_start();
            self.pos += r.len() - t.len();
            if t.starts_with('#') {
                self.pos += t.find('\n').unwrap_or(t.len());
            } else {
                break;
            }
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let r = self.rest();
        let n = r.find(|c| !f(c)).unwrap_or(r.len());
        self.pos += n;
        &r[..n]
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>, QueryError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let Some(c) = self.rest().chars().next() else { break };
            let tok = if c == '?' || c == '$' {
                self.pos += 1;
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if name.is_empty() {
                    return Err(self.err(start, "empty variable name"));
                }
                Tok::Var(name.to_string())
            } else if c == '"' {
                self.pos += 1;
                let mut s = String::new();
                let mut chars = self.rest().char_indices();
                loop {
                    match chars.next() {
                        None => return Err(self.err(start, "unterminated string")),
                        Some((i, '"')) => {
                            self.pos += i + 1;
                            break;
                        }
                        Some((_, '\\')) => match chars.next() {
                            Some((_, 'n')) => s.push('\n'),
                            Some((_, 't')) => s.push('\t'),
                            Some((_, e @ ('"' | '\\'))) => s.push(e),
                            _ => return Err(self.err(start, "bad escape in string")),
                        },
                        Some((_, ch)) => s.push(ch),
                    }
                }
                Tok::Str(s)
            } else if c == '<' && self.rest()[1..].starts_with(|c: char| c.is_ascii_alphabetic()) {
                let r = self.rest();
                match r.find('>') {
                    Some(end) if !r[1..end].contains(char::is_whitespace) => {
                        self.pos += end + 1;
                        Tok::IriRef(r[1..end].to_string())
                    }
                    _ => return Err(self.err(start, "unterminated IRI")),
                }
            } else if c.is_ascii_digit() {
                let int = self.take_while(|c| c.is_ascii_digit());
                let mut text = int.to_string();
                let r = self.rest();
                if r.starts_with('.') && r[1..].starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 1;
                    text.push('.');
                    text.push_str(self.take_while(|c| c.is_ascii_digit()));
                }
                if self.rest().starts_with(|c: char| c.is_alphabetic() || c == '_' || c == ':') {
                    return Err(self.err(start, "names must not start with a digit outside a prefix"));
                }
                Tok::Num(text)
            } else if c.is_alphabetic() || c == '_' || c == ':' {
                let prefix = self.take_while(|c| c.is_alphanumeric() || c == '_' || c == '-');
                if self.rest().starts_with(':') {
                    self.pos += 1;
                    let local = self.take_while(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'));
                    let trimmed = local.trim_end_matches('.');
                    self.pos -= local.len() - trimmed.len();
                    Tok::PName(prefix.to_string(), trimmed.to_string())
                } else {
                    Tok::Word(prefix.to_string())
                }
            } else if let Some(p) = PUNCT.iter().find(|p| self.rest().starts_with(**p)) {
                self.pos += p.len();
                Tok::Punct(p)
            } else {
                return Err(self.err(start, format!("unexpected character {c:?}")));
            };
            out.push((start, tok));
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    prefixes: PrefixMap,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn err(&self, msg: impl Into<String>) -> QueryError {
        QueryError::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.1.clone());
        self.i += 1;
        t
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x.eq_ignore_ascii_case(w))
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(x)) if *x == p)
    }

    fn eat_word(&mut self, w: &str) -> bool {
        let hit = self.is_word(w);
        if hit {
            self.i += 1;
        }
        hit
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        let hit = self.is_punct(p);
        if hit {
            self.i += 1;
        }
        hit
    }

    fn expect_word(&mut self, w: &str) -> Result<(), QueryError> {
        if self.eat_word(w) { Ok(()) } else { Err(self.err(format!("expected {w}"))) }
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), QueryError> {
        if self.eat_punct(p) { Ok(()) } else { Err(self.err(format!("expected '{p}'"))) }
    }

    fn var(&mut self) -> Result<String, QueryError> {
        match self.peek() {
            Some(Tok::Var(v)) => {
                let v = v.clone();
                self.i += 1;
                Ok(v)
            }
            _ => Err(self.err("expected a variable")),
        }
    }

    fn iri(&self, text: &str) -> Result<Iri, QueryError> {
        Iri::new(text).map_err(|e| self.err(e.to_string()))
    }

    fn pname(&self, prefix: &str, local: &str) -> Result<Iri, QueryError> {
        if self.prefixes.namespace(prefix).is_none() {
            return Err(QueryError::UnknownPrefix { prefix: prefix.to_string(), pos: self.pos() });
        }
        self.prefixes.expand(prefix, local).ok_or_else(|| self.err(format!("bad name {prefix}:{local}")))
    }

    fn prologue(&mut self) -> Result<(), QueryError> {
        while self.eat_word("PREFIX") {
            let prefix = match self.next() {
                Some(Tok::PName(p, l)) if l.is_empty() => p,
                _ => {
                    self.i -= 1;
                    return Err(self.err("expected 'prefix:'"));
                }
            };
            match self.next() {
                Some(Tok::IriRef(ns)) => self.prefixes.insert(prefix, ns),
                _ => {
                    self.i -= 1;
                    return Err(self.err("expected <namespace>"));
                }
            }
        }
        Ok(())
    }

    fn projection(&mut self) -> Result<Vec<Projection>, QueryError> {
        let mut out = Vec::new();
        loop {
            if let Some(Tok::Var(_)) = self.peek() {
                out.push(Projection::Var(self.var()?));
            } else if self.eat_punct("(") {
                let p = if self.is_word("COUNT") {
                    self.i += 1;
                    self.expect_punct("(")?;
                    let distinct = self.eat_word("DISTINCT");
                    let var = if self.eat_punct("*") { None } else { Some(self.var()?) };
                    self.expect_punct(")")?;
                    Projection::Count { var, distinct, alias: String::new() }
                } else {
                    Projection::Expr { expr: self.expr()?, alias: String::new() }
                };
                // `(expr AS ?v)` or `(expr) AS ?v`
                let alias = if self.eat_word("AS") {
                    let a = self.var()?;
                    self.expect_punct(")")?;
                    a
                } else {
                    self.expect_punct(")")?;
                    self.expect_word("AS")?;
                    self.var()?
                };
                out.push(match p {
                    Projection::Count { var, distinct, .. } => Projection::Count { var, distinct, alias },
                    Projection::Expr { expr, .. } => Projection::Expr { expr, alias },
                    Projection::Var(_) => unreachable!(),
                });
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn pattern_term(&mut self, position: &str) -> Result<PatternTerm, QueryError> {
        let t = match self.next() {
            Some(Tok::Var(v)) => return Ok(PatternTerm::Var(v)),
            Some(Tok::IriRef(i)) => {
                self.i -= 1;
                let iri = self.iri(&i)?;
                self.i += 1;
                Term::Iri(iri)
            }
            Some(Tok::PName(p, l)) => {
                self.i -= 1;
                let iri = self.pname(&p, &l)?;
                self.i += 1;
                Term::Iri(iri)
            }
            Some(Tok::Word(w)) if w == "a" && position == "predicate" => Term::Iri(rdf::type_()),
            Some(Tok::Str(s)) if position == "object" => Term::Literal(Literal::string(s)),
            Some(Tok::Num(n)) if position == "object" => Term::Literal(number_literal(&n)),
            Some(Tok::Word(w)) if position == "object" && (w == "true" || w == "false") => {
                Term::Literal(Literal::boolean(w == "true"))
            }
            _ => {
                self.i -= 1;
                return Err(self.err(format!("expected {position}")));
            }
        };
        Ok(PatternTerm::Const(t))
    }

    fn body(&mut self, q: &mut Query) -> Result<(), QueryError> {
        self.expect_punct("{")?;
        loop {
            if self.eat_punct("}") {
                return Ok(());
            }
            if self.eat_punct(".") {
                continue;
            }
            if self.eat_word("FILTER") {
                q.filters.push(self.filter()?);
                continue;
            }
            let subject = self.pattern_term("subject")?;
            loop {
                let predicate = self.pattern_term("predicate")?;
                loop {
                    let object = self.pattern_term("object")?;
                    q.patterns.push(TriplePattern {
                        subject: subject.clone(),
                        predicate: predicate.clone(),
                        object,
                    });
                    if !self.eat_punct(",") {
                        break;
                    }
                }
                if !self.eat_punct(";") {
                    break;
                }
            }
            if !self.is_punct("}") && !self.is_word("FILTER") {
                self.expect_punct(".")?;
            }
        }
    }

    fn filter(&mut self) -> Result<Filter, QueryError> {
        let wrapped = self.eat_punct("(");
        let f = if self.eat_word("regex") {
            self.expect_punct("(")?;
            let var = self.var()?;
            self.expect_punct(",")?;
            let pattern = match self.next() {
                Some(Tok::Str(s)) => s,
                _ => {
                    self.i -= 1;
                    return Err(self.err("expected a string pattern"));
                }
            };
            self.expect_punct(")")?;
            Filter::TextMatch { var, pattern }
        } else {
            let left = self.expr()?;
            let op = match self.next() {
                Some(Tok::Punct("=")) => CompareOp::Eq,
                Some(Tok::Punct("!=")) => CompareOp::Ne,
                Some(Tok::Punct("<")) => CompareOp::Lt,
                Some(Tok::Punct("<=")) => CompareOp::Le,
                Some(Tok::Punct(">")) => CompareOp::Gt,
                Some(Tok::Punct(">=")) => CompareOp::Ge,
                _ => {
                    self.i -= 1;
                    return Err(self.err("expected a comparison operator"));
                }
            };
            Filter::Comparison { left, op, right: self.expr()? }
        };
        if wrapped {
            self.expect_punct(")")?;
        }
        Ok(f)
    }

    fn expr(&mut self) -> Result<Expr, QueryError> {
        let mut left = self.term()?;
        loop {
            let op = if self.eat_punct("+") {
                ArithOp::Add
            } else if self.eat_punct("-") {
                ArithOp::Sub
            } else {
                return Ok(left);
            };
            left = Expr::Binary(Box::new(left), op, Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, QueryError> {
        let mut left = self.factor()?;
        loop {
            let op = if self.eat_punct("*") {
                ArithOp::Mul
            } else if self.eat_punct("/") {
                ArithOp::Div
            } else {
                return Ok(left);
            };
            left = Expr::Binary(Box::new(left), op, Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<Expr, QueryError> {
        if self.eat_punct("(") {
            let e = self.expr()?;
            self.expect_punct(")")?;
            return Ok(e);
        }
        if self.eat_punct("-") {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        match self.peek() {
            Some(Tok::Var(_)) => Ok(Expr::Var(self.var()?)),
            _ => match self.pattern_term("object")? {
                PatternTerm::Const(t) => Ok(Expr::Const(t)),
                PatternTerm::Var(v) => Ok(Expr::Var(v)),
            },
        }
    }
}

fn number_literal(text: &str) -> Literal {
    let kind = if text.contains('.') { LiteralKind::Decimal } else { LiteralKind::Integer };
    Literal::new(text, kind).unwrap_or_else(|_| Literal::string(text))
}

/// Parses a query. Prefixed names resolve against `prefixes` plus the query's own
/// `PREFIX` declarations.
pub fn parse_query(text: &str, prefixes: &PrefixMap) -> Result<Query, QueryError> {
    let toks = Lexer { src: text, pos: 0 }.tokens()?;
    let mut p = Parser { toks, i: 0, end: text.len(), prefixes: prefixes.clone() };
    p.prologue()?;
    p.expect_word("SELECT")?;
    let distinct = p.eat_word("DISTINCT");
    let star = p.eat_punct("*");
    let projection = if star { Vec::new() } else { p.projection()? };
    if !star && projection.is_empty() {
        return Err(p.err("expected a projection"));
    }
    p.expect_word("WHERE")?;
    let mut q = Query { projection, distinct, patterns: Vec::new(), filters: Vec::new() };
    p.body(&mut q)?;
    if p.peek().is_some() {
        return Err(p.err("unexpected input after the query"));
    }
    if star {
        q.projection = q.pattern_vars().into_iter().map(|v| Projection::Var(v.to_string())).collect();
    }
    let bound = q.pattern_vars();
    let check = |v: &str| if bound.contains(&v) { Ok(()) } else { Err(QueryError::Unbound(v.to_string())) };
    for proj in &q.projection {
        match proj {
            Projection::Var(v) => check(v)?,
            Projection::Expr { expr, .. } => expr.vars().into_iter().try_for_each(check)?,
            Projection::Count { var, .. } => var.as_deref().map_or(Ok(()), check)?,
        }
    }
    for f in &q.filters {
        match f {
            Filter::TextMatch { var, .. } => check(var)?,
            Filter::Comparison { left, right, .. } => {
                left.vars().into_iter().chain(right.vars()).try_for_each(check)?
            }
        }
    }
    Ok(q)
}
