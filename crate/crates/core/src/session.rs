//! Line-oriented session files.
//!
//! ```text
//! # comment
//! field Q                  | field GF <p>
//! vars x y t               | ncvars X Y T
//! weights 1 1 1            (optional, default all 1)
//! order deglex t x y       (ascending precedence, optional)
//! homvar t                 (optional)
//! poly f = y^3 - x - y
//! command gb               (optional)
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Term, Word};
use crate::order::OrderingSpec;
use crate::poly::Polynomial;
use crate::ring::{RingContext, RingKind};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Named<M: Term> {
    pub name: String,
    pub poly: Polynomial<M>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SessionPolys {
    Commutative(Vec<Named<Monomial>>),
    Free(Vec<Named<Word>>),
}

impl SessionPolys {
    pub fn len(&self) -> usize {
        match self {
            SessionPolys::Commutative(v) => v.len(),
            SessionPolys::Free(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> Vec<&str> {
        match self {
            SessionPolys::Commutative(v) => v.iter().map(|n| n.name.as_str()).collect(),
            SessionPolys::Free(v) => v.iter().map(|n| n.name.as_str()).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Session {
    pub ctx: Arc<RingContext>,
    /// The declared graded order.
    pub ord: OrderingSpec,
    pub homvar: Option<usize>,
    pub polys: SessionPolys,
    /// Tokens of the `command` line, if any.
    pub command: Option<Vec<String>>,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits a line into whitespace-separated words with 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((sc, si))) => {
                out.push((sc, &line[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((sc, si)) = start {
        out.push((sc, &line[si..]));
    }
    out
}

#[derive(Default)]
struct Header {
    field: Option<Field>,
    kind: Option<RingKind>,
    vars: Vec<String>,
    weights: Option<Vec<u32>>,
    order: Option<(usize, Vec<usize>)>,
    homvar: Option<(usize, usize)>,
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut header = Header::default();
    let mut ctx: Option<Arc<RingContext>> = None;
    let mut raw_polys: Vec<(usize, usize, String, usize, String)> = Vec::new();
    let mut command = None;

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = words(line);
        let Some(&(kw_col, kw)) = toks.first() else { continue };
        let args = &toks[1..];
        let err = |col: usize, msg: String| Error::parse(ln, col, msg);
        let end_col = line.trim_end().chars().count() + 1;
        let declaration = matches!(kw, "field" | "vars" | "ncvars" | "weights" | "order" | "homvar");
        if declaration && !raw_polys.is_empty() {
            return Err(err(kw_col, format!("`{kw}` must precede the polynomials")));
        }
        if command.is_some() && kw != "command" {
            return Err(err(kw_col, "nothing may follow the command line".into()));
        }
        match kw {
            "field" => {
                if header.field.is_some() {
                    return Err(err(kw_col, "field declared twice".into()));
                }
                header.field = Some(match args {
                    [(_, "Q")] => Field::Rationals,
                    [(_, "GF"), (c, p)] => {
                        let p: u64 = p.parse().map_err(|_| err(*c, format!("bad modulus `{p}`")))?;
                        Field::prime(p).map_err(|e| err(*c, e.to_string()))?
                    }
                    [(c, _), ..] => return Err(err(*c, "expected `Q` or `GF <p>`".into())),
                    [] => return Err(err(end_col, "expected `Q` or `GF <p>`".into())),
                });
            }
            "vars" | "ncvars" => {
                if header.kind.is_some() {
                    return Err(err(kw_col, "variables declared twice".into()));
                }
                if args.is_empty() {
                    return Err(err(end_col, "expected variable names".into()));
                }
                for (c, name) in args {
                    if !is_ident(name) {
                        return Err(err(*c, format!("`{name}` is not a valid variable name")));
                    }
                    if header.vars.iter().any(|v| v == name) {
                        return Err(err(*c, format!("variable `{name}` declared twice")));
                    }
                    header.vars.push(name.to_string());
                }
                header.kind = Some(if kw == "vars" { RingKind::Commutative } else { RingKind::Free });
            }
            "weights" => {
                if header.kind.is_none() {
                    return Err(err(kw_col, "`weights` needs a preceding variable declaration".into()));
                }
                let mut w = Vec::new();
                for (c, s) in args {
                    match s.parse::<u32>() {
                        Ok(v) if v > 0 => w.push(v),
                        _ => return Err(err(*c, format!("weight `{s}` is not a positive integer"))),
                    }
                }
                if w.len() != header.vars.len() {
                    return Err(err(kw_col, format!("expected {} weights, found {}", header.vars.len(), w.len())));
                }
                header.weights = Some(w);
            }
            "order" => {
                if header.kind.is_none() {
                    return Err(err(kw_col, "`order` needs a preceding variable declaration".into()));
                }
                match args.first() {
                    Some((_, "deglex")) => {}
                    Some((c, other)) => return Err(err(*c, format!("unknown ordering `{other}`"))),
                    None => return Err(err(end_col, "expected `deglex`".into())),
                }
                let mut asc = Vec::new();
                for (c, name) in &args[1..] {
                    let v = header
                        .vars
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| err(*c, format!("unknown variable `{name}`")))?;
                    if asc.contains(&v) {
                        return Err(err(*c, format!("variable `{name}` listed twice")));
                    }
                    asc.push(v);
                }
                if asc.len() != header.vars.len() {
                    return Err(err(kw_col, "the precedence list must name every variable".into()));
                }
                header.order = Some((kw_col, asc));
            }
            "homvar" => {
                let kind = header.kind.ok_or_else(|| err(kw_col, "`homvar` needs a preceding variable declaration".into()))?;
                let [(c, name)] = args else {
                    return Err(err(kw_col, "expected one variable name".into()));
                };
                let v = header
                    .vars
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| err(*c, format!("unknown variable `{name}`")))?;
                if kind == RingKind::Commutative && v + 1 != header.vars.len() {
                    return Err(err(*c, format!("homogenizing variable `{name}` must be declared last")));
                }
                header.homvar = Some((*c, v));
            }
            "poly" => {
                if ctx.is_none() {
                    ctx = Some(build_context(&header, ln, kw_col)?);
                }
                let rest_start = line.find("poly").unwrap() + 4;
                let rest = &line[rest_start..];
                let Some(eq) = rest.find('=') else {
                    return Err(err(end_col, "expected `poly <name> = <expr>`".into()));
                };
                let name = rest[..eq].trim();
                let name_col = line[..rest_start].chars().count() + rest[..eq].find(name).unwrap_or(0) + 1;
                if !is_ident(name) {
                    return Err(err(name_col, format!("`{name}` is not a valid polynomial name")));
                }
                if raw_polys.iter().any(|p| p.2 == name) {
                    return Err(err(name_col, format!("polynomial `{name}` defined twice")));
                }
                let expr_offset = line[..rest_start + eq + 1].chars().count();
                raw_polys.push((ln, name_col, name.to_string(), expr_offset, rest[eq + 1..].to_string()));
            }
            "command" => {
                if command.is_some() {
                    return Err(err(kw_col, "only one command line is allowed".into()));
                }
                if args.is_empty() {
                    return Err(err(end_col, "expected a command".into()));
                }
                command = Some(args.iter().map(|(_, s)| s.to_string()).collect::<Vec<_>>());
            }
            other => return Err(err(kw_col, format!("unknown keyword `{other}`"))),
        }
    }
    let ctx = match ctx {
        Some(c) => c,
        None => build_context(&header, text.lines().count().max(1), 1)?,
    };
    let ord = match &header.order {
        Some((_, asc)) => OrderingSpec::deglex(&ctx, asc)?,
        None => OrderingSpec::deglex_declared(&ctx),
    };
    let polys = match ctx.kind() {
        RingKind::Commutative => SessionPolys::Commutative(parse_all(&ctx, &raw_polys)?),
        RingKind::Free => SessionPolys::Free(parse_all(&ctx, &raw_polys)?),
    };
    Ok(Session { ctx, ord, homvar: header.homvar.map(|(_, v)| v), polys, command })
}

fn build_context(header: &Header, line: usize, col: usize) -> Result<Arc<RingContext>> {
    let kind = header
        .kind
        .ok_or_else(|| Error::parse(line, col, "no `vars` or `ncvars` declaration"))?;
    let weights = header.weights.clone().unwrap_or_else(|| vec![1; header.vars.len()]);
    let field = header.field.unwrap_or(Field::Rationals);
    let mut ctx = RingContext::new(kind, header.vars.clone(), weights, field)?;
    if let Some((c, v)) = header.homvar {
        ctx = ctx.with_homog_var(v).map_err(|e| Error::parse(line, c, e.to_string()))?;
    }
    Ok(Arc::new(ctx))
}

fn parse_all<M: Term>(
    ctx: &Arc<RingContext>,
    raw: &[(usize, usize, String, usize, String)],
) -> Result<Vec<Named<M>>> {
    raw.iter()
        .map(|(ln, _, name, offset, expr)| {
            let poly = parse_poly_at(ctx, expr, *ln, *offset)?;
            Ok(Named { name: name.clone(), poly })
        })
        .collect()
}

/// Parses a polynomial expression over `ctx`; errors report line 1.
pub fn parse_poly<M: Term>(ctx: &Arc<RingContext>, expr: &str) -> Result<Polynomial<M>> {
    parse_poly_at(ctx, expr, 1, 0)
}

fn parse_poly_at<M: Term>(ctx: &Arc<RingContext>, expr: &str, line: usize, offset: usize) -> Result<Polynomial<M>> {
    let chars = expr.chars().collect::<Vec<_>>();
    let mut p = ExprParser { ctx, chars: &chars, pos: 0, line, offset };
    p.parse()
}

struct ExprParser<'a> {
    ctx: &'a Arc<RingContext>,
    chars: &'a [char],
    pos: usize,
    line: usize,
    offset: usize,
}

impl ExprParser<'_> {
    fn error(&self, at: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.offset + at + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn parse<M: Term>(&mut self) -> Result<Polynomial<M>> {
        let field = self.ctx.field();
        let mut out = Polynomial::zero(self.ctx);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error(self.pos, "empty expression"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = field.one();
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = -&sign;
                }
                Some(c) if !first => return Err(self.error(self.pos, format!("expected `+` or `-`, found `{c}`"))),
                None if !first => break,
                _ => {}
            }
            first = false;
            let (m, c) = self.term::<M>()?;
            out = &out + &Polynomial::term(self.ctx, m, &sign * &c);
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }

    fn term<M: Term>(&mut self) -> Result<(M, Scalar)> {
        let field = self.ctx.field();
        let n = self.ctx.nvars();
        let mut coeff = field.one();
        let mut mono = M::one(n);
        let mut factors = 0;
        loop {
            self.skip_ws();
            if factors > 0 {
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.skip_ws();
                } else if !self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
            }
            let start = self.pos;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits().unwrap();
                    let mut den = "1".to_string();
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        den = self.digits().ok_or_else(|| self.error(self.pos, "expected a denominator"))?;
                    }
                    let num: BigInt = num.parse().expect("digits");
                    let den: BigInt = den.parse().expect("digits");
                    let c = field.from_ratio(&num, &den).map_err(|e| self.error(start, e.to_string()))?;
                    coeff = &coeff * &c;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                        self.pos += 1;
                    }
                    let name = self.chars[start..self.pos].iter().collect::<String>();
                    let v = self
                        .ctx
                        .var_index(&name)
                        .ok_or_else(|| self.error(start, format!("unknown variable `{name}`")))?;
                    let mut exp = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let at = self.pos;
                        exp = self
                            .digits()
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| self.error(at, "malformed exponent"))?;
                    }
                    for _ in 0..exp {
                        mono = mono.times_var(v);
                    }
                }
                Some(c) => return Err(self.error(start, format!("unexpected `{c}`"))),
                None => return Err(self.error(start, "expected a term")),
            }
            factors += 1;
        }
        Ok((mono, coeff))
    }
}
