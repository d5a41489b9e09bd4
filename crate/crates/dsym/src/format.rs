//! Text and JSON renderings of library values, and the polynomial parser.

use std::fmt::Write as _;

use dsym_core::basis::DoubleSym;
use dsym_core::series::{IdentityCheck, SchurSeries, SeriesBasis};
use dsym_core::transition::TransitionMatrix;
use dsym_core::xpoly::XPoly;
use dsym_core::{AMonomial, APoly, Partition, Rational};
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {offset}")]
    Unexpected { found: char, offset: usize },
    #[error("unexpected end of input")]
    End,
    #[error("bad number {0:?}")]
    Number(String),
    #[error("malformed JSON polynomial: {0}")]
    Json(String),
}

/// Parses sums of products of rationals, `a[i]` and parenthesised
/// expressions, with `^` for nonnegative integer powers.
pub fn parse_apoly(input: &str) -> Result<APoly, ParseError> {
    let mut p = Parser { chars: input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0 };
    let v = p.sum()?;
    match p.peek() {
        None => Ok(v),
        Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().map(|(_, d)| d) == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            return Ok(());
        }
        match self.peek() {
            Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
            None => Err(ParseError::End),
        }
    }

    fn sum(&mut self) -> Result<APoly, ParseError> {
        let mut total = if self.eat('-') { -self.product()? } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                total = &total + &self.product()?;
            } else if self.eat('-') {
                total = &total - &self.product()?;
            } else {
                return Ok(total);
            }
        }
    }

    fn product(&mut self) -> Result<APoly, ParseError> {
        let mut v = self.power()?;
        while self.eat('*') {
            v = &v * &self.power()?;
        }
        Ok(v)
    }

    fn power(&mut self) -> Result<APoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| ParseError::Number(e))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let mut s = String::new();
        while let Some((_, c)) = self.peek().filter(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return match self.peek() {
                Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
                None => Err(ParseError::End),
            };
        }
        Ok(s)
    }

    fn atom(&mut self) -> Result<APoly, ParseError> {
        match self.peek() {
            Some((_, '(')) => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some((_, 'a')) => {
                self.pos += 1;
                self.expect('[')?;
                let neg = self.eat('-');
                let d = self.digits()?;
                let i: i32 = d.parse().map_err(|_| ParseError::Number(d))?;
                self.expect(']')?;
                Ok(APoly::var(if neg { -i } else { i }))
            }
            Some((_, c)) if c.is_ascii_digit() => {
                let mut s = self.digits()?;
                if self.eat('/') {
                    s.push('/');
                    s.push_str(&self.digits()?);
                }
                let r: Rational = s.parse().map_err(|_| ParseError::Number(s))?;
                Ok(APoly::constant(r))
            }
            Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
            None => Err(ParseError::End),
        }
    }
}

/// `[[coefficient, [[index, exponent], ...]], ...]` with the text form alongside.
pub fn apoly_json(p: &APoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!([c.to_string(), m.vars().iter().map(|&(i, e)| json!([i, e])).collect::<Vec<_>>()]))
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

pub fn apoly_from_json(v: &Value) -> Result<APoly, ParseError> {
    let bad = |what: &str| ParseError::Json(what.to_string());
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::new();
    for t in terms {
        let c = t.get(0).and_then(Value::as_str).ok_or_else(|| bad("coefficient"))?;
        let c: Rational = c.parse().map_err(|_| ParseError::Number(c.to_string()))?;
        let vars = t.get(1).and_then(Value::as_array).ok_or_else(|| bad("variables"))?;
        let pairs = vars
            .iter()
            .map(|pair| {
                let i = pair.get(0).and_then(Value::as_i64).ok_or_else(|| bad("index"))?;
                let e = pair.get(1).and_then(Value::as_u64).ok_or_else(|| bad("exponent"))?;
                Ok((i as i32, e as u32))
            })
            .collect::<Result<Vec<_>, ParseError>>()?;
        out.push((AMonomial::from_pairs(pairs), c));
    }
    Ok(APoly::from_terms(out))
}

fn partition_key(l: &Partition) -> String {
    l.to_string()
}

fn basis_symbol(b: SeriesBasis) -> &'static str {
    match b {
        SeriesBasis::ClassicalSchur => "s",
        SeriesBasis::DualSchur => "shat",
    }
}

/// One `s[λ] = c` line per term, by size then reverse lexicographic order.
pub fn series_text(s: &SchurSeries) -> String {
    let mut out = String::new();
    if s.is_zero() {
        out.push_str("0\n");
    }
    for (l, c) in s.coeffs() {
        let _ = writeln!(out, "{}[{}] = {}", basis_symbol(s.basis()), l, c);
    }
    let _ = writeln!(out, "+ O(degree {})", s.degree() + 1);
    out
}

pub fn series_json(s: &SchurSeries) -> Value {
    let mut coeffs = Map::new();
    for (l, c) in s.coeffs() {
        coeffs.insert(partition_key(l), apoly_json(c));
    }
    json!({ "schema": SCHEMA, "basis": s.basis().to_string(), "degree": s.degree(), "coeffs": coeffs })
}

pub fn double_sym_text(d: &DoubleSym) -> String {
    let mut terms: Vec<(&Partition, &APoly)> = d.coeffs().collect();
    terms.sort_by(|x, y| dsym_core::partition::size_revlex(y.0, x.0));
    if terms.is_empty() {
        return "0\n".to_string();
    }
    let mut out = String::new();
    for (l, c) in terms {
        let _ = writeln!(out, "s[{l}] = {c}");
    }
    out
}

pub fn double_sym_json(d: &DoubleSym) -> Value {
    let mut coeffs = Map::new();
    for (l, c) in d.coeffs() {
        coeffs.insert(partition_key(l), apoly_json(c));
    }
    json!({ "schema": SCHEMA, "basis": "double-schur", "nvars": d.nvars(), "coeffs": coeffs })
}

/// `x`-monomials written `x1^2*x3`, one term per line with its coefficient.
pub fn xpoly_text(p: &XPoly) -> String {
    if p.is_zero() {
        return "0\n".to_string();
    }
    let n = p.nvars();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|x, y| y.0.degree().cmp(&x.0.degree()).then_with(|| y.0.cmp(x.0)));
    let mut out = String::new();
    for (e, c) in terms {
        let _ = writeln!(out, "{} : {}", monomial_text(e.as_slice(n)), c);
    }
    out
}

fn monomial_text(e: &[u8]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn xpoly_json(p: &XPoly) -> Value {
    let n = p.nvars();
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!([e.as_slice(n), apoly_json(c)])).collect();
    json!({ "schema": SCHEMA, "nvars": n, "terms": terms })
}

pub fn matrix_text(m: &TransitionMatrix) -> String {
    let label = |l: &Partition| if l.is_empty() { "-".to_string() } else { l.to_string() };
    let cells: Vec<Vec<String>> = m.entries().iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
    let row_w = m.rows().iter().map(|r| label(r).len()).max().unwrap_or(1);
    let widths: Vec<usize> = (0..m.cols().len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([label(&m.cols()[j]).len()]).max().unwrap_or(1))
        .collect();
    let mut out = format!("{:row_w$}", "");
    for (c, w) in m.cols().iter().zip(&widths) {
        let _ = write!(out, "  {:>w$}", label(c));
    }
    out.push('\n');
    for (r, row) in m.rows().iter().zip(&cells) {
        let _ = write!(out, "{:>row_w$}", label(r));
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, "  {cell:>w$}");
        }
        out.push('\n');
    }
    out
}

pub fn matrix_json(m: &TransitionMatrix) -> Value {
    json!({
        "schema": SCHEMA,
        "rows": m.rows().iter().map(partition_key).collect::<Vec<_>>(),
        "cols": m.cols().iter().map(partition_key).collect::<Vec<_>>(),
        "entries": m.entries().iter().map(|r| r.iter().map(apoly_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn check_text(c: &IdentityCheck) -> String {
    match &c.first_difference {
        None => format!("ok    {}", c.name),
        Some((e, d)) => format!("FAIL  {}: differs at {:?} by {}", c.name, e, d),
    }
}

pub fn check_json(c: &IdentityCheck) -> Value {
    json!({
        "name": c.name,
        "holds": c.holds(),
        "difference": c.first_difference.as_ref().map(|(_, d)| apoly_json(d)),
    })
}
