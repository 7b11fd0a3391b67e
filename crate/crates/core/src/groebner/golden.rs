//! Coefficient formulas in `(n, p)` for the eliminant factors, parsed from a
//! small text format and specialized to integers on demand.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::UniPoly;
use crate::{Error, Result};

const SHIPPED: &str = include_str!("../../data/golden.txt");

/// Integer expression over the symbols `n` and `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    N,
    P,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens: &tokens, pos: 0 };
        let e = parser.sum()?;
        if parser.pos != tokens.len() {
            return Err(Error::Golden(format!("trailing input in {src:?} at token {}", parser.pos)));
        }
        Ok(e)
    }

    pub fn eval(&self, n: &BigInt, p: &BigInt) -> BigInt {
        match self {
            Expr::Int(v) => v.clone(),
            Expr::N => n.clone(),
            Expr::P => p.clone(),
            Expr::Neg(a) => -a.eval(n, p),
            Expr::Add(a, b) => a.eval(n, p) + b.eval(n, p),
            Expr::Sub(a, b) => a.eval(n, p) - b.eval(n, p),
            Expr::Mul(a, b) => a.eval(n, p) * b.eval(n, p),
            Expr::Pow(a, e) => num_traits::pow(a.eval(n, p), *e as usize),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Sym(char),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().expect("ascii digits")));
            }
            'n' | 'p' => {
                out.push(Token::Sym(c));
                i += 1;
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push(Token::Op(c));
                i += 1;
            }
            _ => return Err(Error::Golden(format!("unexpected character {c:?} in {src:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == '+' {
                Expr::Add(Box::new(acc), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(acc), Box::new(rhs))
            };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        while self.peek_op() == Some('*') {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.tokens.get(self.pos) {
            Some(Token::Int(e)) => {
                self.pos += 1;
                let e = u32::try_from(e).map_err(|_| Error::Golden(format!("exponent {e} too large")))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            other => Err(Error::Golden(format!("exponent must be an integer literal, got {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(v)) => Ok(Expr::Int(v)),
            Some(Token::Sym('n')) => Ok(Expr::N),
            Some(Token::Sym(_)) => Ok(Expr::P),
            Some(Token::Op('(')) => {
                let e = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Golden("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Golden(format!("unexpected token {other:?}"))),
        }
    }
}

/// One polynomial: coefficient formulas keyed by degree.
#[derive(Clone, Debug)]
pub struct GoldenRecord {
    pub name: String,
    pub variable: String,
    pub coeffs: BTreeMap<usize, Expr>,
}

impl GoldenRecord {
    pub fn specialize(&self, n: u32, p: u32) -> UniPoly {
        let (n, p) = (BigInt::from(n), BigInt::from(p));
        let deg = self.coeffs.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (&k, e) in &self.coeffs {
            coeffs[k] = BigRational::from_integer(e.eval(&n, &p));
        }
        UniPoly::new(self.variable.clone(), coeffs)
    }
}

#[derive(Clone, Debug)]
pub struct GoldenData {
    records: BTreeMap<String, GoldenRecord>,
}

impl GoldenData {
    /// The data file compiled into the crate.
    pub fn shipped() -> &'static GoldenData {
        static DATA: OnceLock<GoldenData> = OnceLock::new();
        DATA.get_or_init(|| GoldenData::parse(SHIPPED).expect("shipped golden data parses"))
    }

    pub fn parse(text: &str) -> Result<GoldenData> {
        let mut records: BTreeMap<String, GoldenRecord> = BTreeMap::new();
        let mut raw: Vec<(String, String, Vec<(usize, String)>)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let err = |m: &str| Error::Golden(format!("line {}: {m}", lineno + 1));
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(header) = trimmed.strip_prefix('[') {
                let header = header.strip_suffix(']').ok_or_else(|| err("unterminated header"))?;
                let mut parts = header.split_whitespace();
                let (Some(name), Some(var), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(err("header must be [name variable]"));
                };
                raw.push((name.to_string(), var.to_string(), Vec::new()));
                continue;
            }
            let block = raw.last_mut().ok_or_else(|| err("coefficient outside a block"))?;
            if line.starts_with([' ', '\t']) {
                let last = block.2.last_mut().ok_or_else(|| err("continuation without a coefficient"))?;
                last.1.push_str(trimmed);
                continue;
            }
            let (deg, expr) = trimmed.split_once(':').ok_or_else(|| err("expected `degree: expression`"))?;
            let deg: usize = deg.trim().parse().map_err(|_| err("bad degree"))?;
            if block.2.iter().any(|(d, _)| *d == deg) {
                return Err(err("duplicate degree"));
            }
            block.2.push((deg, expr.trim().to_string()));
        }
        for (name, variable, coeffs) in raw {
            let coeffs = coeffs
                .into_iter()
                .map(|(d, s)| Ok((d, Expr::parse(&s)?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            if records.contains_key(&name) {
                return Err(Error::Golden(format!("duplicate record {name}")));
            }
            records.insert(name.clone(), GoldenRecord { name, variable, coeffs });
        }
        Ok(GoldenData { records })
    }

    pub fn record(&self, name: &str) -> Result<&GoldenRecord> {
        self.records.get(name).ok_or_else(|| Error::Golden(format!("no record named {name}")))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    /// The named polynomial specialized at `(n, p)`.
    pub fn poly(&self, name: &str, n: u32, p: u32) -> Result<UniPoly> {
        Ok(self.record(name)?.specialize(n, p))
    }

    /// The named record's coefficient of `var^degree` at `(n, p)`.
    pub fn coefficient(&self, name: &str, degree: usize, n: u32, p: u32) -> Result<BigInt> {
        let rec = self.record(name)?;
        let e = rec
            .coeffs
            .get(&degree)
            .ok_or_else(|| Error::Golden(format!("{name} has no coefficient of degree {degree}")))?;
        Ok(e.eval(&BigInt::from(n), &BigInt::from(p)))
    }
}

/// `F_{n,p}` evaluated straight from the coefficient formulas, used as an
/// independent check on signs computed from eliminants.
pub fn eval_formula(name: &str, n: u32, p: u32, x: &BigRational) -> Result<BigRational> {
    let rec = GoldenData::shipped().record(name)?;
    let (bn, bp) = (BigInt::from(n), BigInt::from(p));
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    let deg = rec.coeffs.keys().next_back().copied().unwrap_or(0);
    for k in 0..=deg {
        if let Some(e) = rec.coeffs.get(&k) {
            acc += BigRational::from_integer(e.eval(&bn, &bp)) * &pow;
        }
        pow *= x;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn expression_evaluator() {
        let e = Expr::parse("-2*(n-2)*p*(n-2*p)^3").unwrap();
        assert_eq!(e.eval(&BigInt::from(7), &BigInt::from(2)), BigInt::from(-2 * 5 * 2 * 27));
        let e = Expr::parse("--3 + n^2^1").unwrap_err();
        assert!(matches!(e, Error::Golden(_)));
        assert!(Expr::parse("2*(n").is_err());
        assert!(Expr::parse("2x").is_err());
    }

    #[test]
    fn shipped_records() {
        let g = GoldenData::shipped();
        assert_eq!(g.names().collect::<Vec<_>>(), ["F", "G", "a8", "jensen"]);
        let gp = g.poly("G", 7, 2).unwrap();
        assert_eq!(gp.degree(), Some(6));
        assert_eq!(g.poly("G", 9, 3).unwrap().degree(), Some(8));
        assert_eq!(gp.coeff(0), int(243));
        let f = g.poly("F", 7, 2).unwrap();
        assert_eq!(f.eval(&int(14)), int(756320640000));
        assert_eq!(f.eval(&int(0)), int(20736));
        assert_eq!(g.poly("jensen", 7, 2).unwrap(), crate::curvature::jensen_quadratic(7, 2));
        assert_eq!(eval_formula("F", 7, 2, &rat(1, 4)).unwrap(), f.eval(&rat(1, 4)));
    }

    #[test]
    fn n31_polynomials() {
        let g = GoldenData::shipped();
        let f = g.poly("F", 31, 13).unwrap();
        let printed = [
            15968016i64, -193555008, 1093464243, -2795832361, 1342556360, 2082493764, 4011833808, 1682093952,
            491774976,
        ];
        let scale = &f.coeff(8) / int(printed[8]);
        for (k, c) in printed.iter().enumerate() {
            assert_eq!(f.coeff(k), &scale * int(*c), "degree {k}");
        }
        let f = g.poly("F", 31, 12).unwrap();
        assert_eq!(&f.coeff(8) / int(24356284225), &f.coeff(0) / int(1073676289));
    }

    #[test]
    fn malformed_files() {
        assert!(GoldenData::parse("0: 1").is_err());
        assert!(GoldenData::parse("[x u]\n0: 1\n0: 2").is_err());
        assert!(GoldenData::parse("[x u]\n  +1").is_err());
        let d = GoldenData::parse("[x u]\n1: n\n   +p\n0: 1").unwrap();
        assert_eq!(d.poly("x", 3, 4).unwrap(), UniPoly::from_ints("u", &[1, 7]));
    }
}
