//! Graph expressions.
//!
//! ```text
//! expr   := term ("+" term)*
//! term   := factor ("v" factor)*
//! factor := INT "*" factor | atom
//! atom   := ("K" | "C" | "P" | "S" | "M") INT | "T(" INT "," INT ")" | "Q(" INT "," INT ")"
//!         | "fan(" INT ["," INT] ")" | "petersen" | "(" expr ")"
//! ```
//!
//! `+` is disjoint union, `v` is join and `k*G` is `k` disjoint copies. Whitespace is
//! ignored everywhere.

use std::fmt;

use antiramsey::graph::{self, Graph};

/// Largest integer literal accepted.
pub const MAX_COUNT: u64 = 1_000_000;

/// Largest graph an expression may evaluate to.
pub const MAX_VERTICES: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(u64),
    Cycle(u64),
    Path(u64),
    Star(u64),
    Matching(u64),
    Turan(u64, u64),
    Q(u64, u64),
    Fan(u64, Option<u64>),
    Petersen,
    Union(Vec<GraphExpr>),
    Join(Vec<GraphExpr>),
    Copies(u64, Box<GraphExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_graph_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("expected \"+\", \"v\" or end of input"));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let e = parse_graph_expr(text).map_err(|e| e.to_string())?;
    e.eval().map_err(|e| format!("cannot build {text:?}: {e}"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(v) if v <= MAX_COUNT => Ok(v),
            _ => Err(ParseError {
                pos: start,
                message: format!("integer {digits} exceeds the limit {MAX_COUNT}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        let mut parts = vec![self.term()?];
        while self.eat(b'+') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GraphExpr::Union(parts) })
    }

    fn term(&mut self) -> Result<GraphExpr, ParseError> {
        let mut parts = vec![self.factor()?];
        while self.eat(b'v') {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GraphExpr::Join(parts) })
    }

    fn factor(&mut self) -> Result<GraphExpr, ParseError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.int()?;
            self.expect(b'*')?;
            return Ok(GraphExpr::Copies(k, Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn pair(&mut self) -> Result<(u64, u64), ParseError> {
        self.expect(b'(')?;
        let a = self.int()?;
        self.expect(b',')?;
        let b = self.int()?;
        self.expect(b')')?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<GraphExpr, ParseError> {
        if self.keyword("petersen") {
            return Ok(GraphExpr::Petersen);
        }
        if self.keyword("fan") {
            self.expect(b'(')?;
            let k = self.int()?;
            let p = if self.eat(b',') { Some(self.int()?) } else { None };
            self.expect(b')')?;
            return Ok(GraphExpr::Fan(k, p));
        }
        let Some(c) = self.peek() else {
            return Err(self.error("expected a graph, found end of input"));
        };
        let unary = |k| match c {
            b'K' => GraphExpr::Complete(k),
            b'C' => GraphExpr::Cycle(k),
            b'P' => GraphExpr::Path(k),
            b'S' => GraphExpr::Star(k),
            _ => GraphExpr::Matching(k),
        };
        match c {
            b'K' | b'C' | b'P' | b'S' | b'M' => {
                self.pos += 1;
                Ok(unary(self.int()?))
            }
            b'T' | b'Q' => {
                self.pos += 1;
                let (a, b) = self.pair()?;
                Ok(if c == b'T' { GraphExpr::Turan(a, b) } else { GraphExpr::Q(a, b) })
            }
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            _ => Err(self.error(
                "expected K, C, P, S, M, T(, Q(, fan(, petersen, an integer or \"(\"",
            )),
        }
    }
}

impl GraphExpr {
    /// Number of vertices, or `None` past [`MAX_VERTICES`].
    fn order(&self) -> Option<u64> {
        let n = match self {
            GraphExpr::Complete(k)
            | GraphExpr::Cycle(k)
            | GraphExpr::Path(k)
            | GraphExpr::Star(k)
            | GraphExpr::Matching(k)
            | GraphExpr::Turan(k, _) => *k,
            GraphExpr::Q(p, k) => p.checked_mul(*k)?.checked_add(1)?,
            GraphExpr::Fan(k, p) => k.checked_mul(p.unwrap_or(2))?.checked_add(1)?,
            GraphExpr::Petersen => 10,
            GraphExpr::Union(parts) | GraphExpr::Join(parts) => {
                parts.iter().try_fold(0u64, |acc, e| acc.checked_add(e.order()?))?
            }
            GraphExpr::Copies(k, e) => k.checked_mul(e.order()?)?,
        };
        (n <= MAX_VERTICES as u64).then_some(n)
    }

    pub fn eval(&self) -> Result<Graph, String> {
        if self.order().is_none() {
            return Err(format!("expression has more than {MAX_VERTICES} vertices"));
        }
        let lib = |r: antiramsey::Result<Graph>| r.map_err(|e| e.to_string());
        let u = |k: u64| k as usize;
        Ok(match self {
            GraphExpr::Complete(k) => graph::complete(u(*k)),
            GraphExpr::Cycle(k) => graph::cycle(u(*k)),
            GraphExpr::Path(k) => graph::path(u(*k)),
            GraphExpr::Star(k) => graph::star(u(*k)),
            GraphExpr::Matching(k) => graph::matching(u(*k)),
            GraphExpr::Turan(n, p) => lib(graph::turan(u(*n), u(*p)))?,
            GraphExpr::Q(p, k) => lib(graph::q_graph(u(*p), u(*k)))?,
            GraphExpr::Fan(k, None) => graph::fan(u(*k)),
            GraphExpr::Fan(k, Some(p)) => graph::general_fan(u(*k), u(*p)),
            GraphExpr::Petersen => graph::petersen(),
            GraphExpr::Union(parts) => {
                let mut g = Graph::empty(0);
                for e in parts {
                    g = graph::disjoint_union(&g, &e.eval()?);
                }
                g
            }
            GraphExpr::Join(parts) => {
                let mut g = Graph::empty(0);
                for e in parts {
                    g = graph::join(&g, &e.eval()?);
                }
                g
            }
            GraphExpr::Copies(k, e) => graph::copies(u(*k), &e.eval()?),
        })
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, wrap: bool) -> fmt::Result {
        if wrap {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(k) => write!(f, "K{k}"),
            GraphExpr::Cycle(k) => write!(f, "C{k}"),
            GraphExpr::Path(k) => write!(f, "P{k}"),
            GraphExpr::Star(k) => write!(f, "S{k}"),
            GraphExpr::Matching(k) => write!(f, "M{k}"),
            GraphExpr::Turan(a, b) => write!(f, "T({a},{b})"),
            GraphExpr::Q(a, b) => write!(f, "Q({a},{b})"),
            GraphExpr::Fan(k, None) => write!(f, "fan({k})"),
            GraphExpr::Fan(k, Some(p)) => write!(f, "fan({k},{p})"),
            GraphExpr::Petersen => write!(f, "petersen"),
            GraphExpr::Union(parts) => {
                for (i, e) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    e.fmt_child(f, matches!(e, GraphExpr::Union(_)))?;
                }
                Ok(())
            }
            GraphExpr::Join(parts) => {
                for (i, e) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " v ")?;
                    }
                    e.fmt_child(f, matches!(e, GraphExpr::Union(_) | GraphExpr::Join(_)))?;
                }
                Ok(())
            }
            GraphExpr::Copies(k, e) => {
                write!(f, "{k}*")?;
                e.fmt_child(f, matches!(**e, GraphExpr::Union(_) | GraphExpr::Join(_)))
            }
        }
    }
}
