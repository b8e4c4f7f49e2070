//! Text syntax shared by polynomials and operators.
//!
//! ```text
//! poly ::= ['+'|'-'] term (('+'|'-') term)*
//! term ::= coeff ('*' factor)* | factor ('*' factor)*
//! factor ::= var ('^' int)?
//! coeff ::= int ('/' int)?
//! ```
//!
//! Juxtaposition is rejected: `2x` and `x y` are errors.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{MonomialOrder, Polynomial};
use crate::coeff::{Field, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

/// Split `src` into tokens; columns are 1-based character positions.
pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let lno = li + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let simple = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '/' => Some(Tok::Slash),
                _ => None,
            };
            if let Some(tok) = simple {
                out.push(Token { tok, line: lno, col });
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: lno, col });
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: lno, col });
            } else {
                return Err(syntax(lno, col, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}

/// A parsed term: coefficient and the factors in written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: Rational,
    pub factors: Vec<(usize, u32)>,
}

/// Parse a sum of products, resolving identifiers with `lookup`.
pub fn parse_terms(src: &str, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<Vec<RawTerm>> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks: &toks, pos: 0, lookup };
    p.poly()
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    lookup: &'a dyn Fn(&str) -> Option<usize>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn end_pos(&self) -> (usize, usize) {
        match self.toks.last() {
            Some(t) => (t.line, t.col + 1),
            None => (1, 1),
        }
    }

    fn err_here(&self, msg: &str) -> Error {
        match self.peek() {
            Some(t) => syntax(t.line, t.col, msg),
            None => {
                let (l, c) = self.end_pos();
                syntax(l, c, format!("{msg} (end of input)"))
            }
        }
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut sign = match self.peek().map(|t| &t.tok) {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let mut t = self.term()?;
            if sign < 0 {
                t.coeff = t.coeff.neg();
            }
            out.push(t);
            match self.peek().map(|t| &t.tok) {
                None => break,
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => return Err(self.err_here("expected `+`, `-` or `*`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Token { tok: Tok::Int(n), .. }) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err_here("expected an integer")),
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = <Rational as Field>::one();
        let mut factors = Vec::new();
        let mut first = true;
        loop {
            if !first {
                match self.peek().map(|t| &t.tok) {
                    Some(Tok::Star) => self.pos += 1,
                    _ => break,
                }
            }
            match self.peek() {
                Some(Token { tok: Tok::Int(_), .. }) => {
                    let num = self.int()?;
                    let mut c = Rational::from_bigint(num);
                    if let Some(Tok::Slash) = self.peek().map(|t| &t.tok) {
                        self.pos += 1;
                        let den_tok = self.peek().cloned();
                        let den = self.int()?;
                        if den == BigInt::from(0) {
                            let t = den_tok.expect("int token");
                            return Err(syntax(t.line, t.col, "zero denominator"));
                        }
                        c = Field::div(&c, &Rational::from_bigint(den))?;
                    }
                    coeff = Field::mul(&coeff, &c);
                }
                Some(Token { tok: Tok::Ident(name), line, col }) => {
                    let (name, line, col) = (name.clone(), *line, *col);
                    let v = (self.lookup)(&name).ok_or_else(|| syntax(line, col, format!("unknown variable `{name}`")))?;
                    self.pos += 1;
                    let mut e = 1u32;
                    if let Some(Tok::Caret) = self.peek().map(|t| &t.tok) {
                        self.pos += 1;
                        let t = self.peek().cloned();
                        let n = self.int()?;
                        e = u32::try_from(n).map_err(|_| {
                            let t = t.expect("int token");
                            syntax(t.line, t.col, "exponent out of range")
                        })?;
                    }
                    factors.push((v, e));
                }
                _ => return Err(self.err_here("expected a coefficient or a variable")),
            }
            first = false;
        }
        Ok(RawTerm { coeff, factors })
    }
}

/// Parse a commutative polynomial over the named variables.
pub fn parse_polynomial(src: &str, names: &[&str]) -> Result<Polynomial<Rational>> {
    let lookup = |s: &str| names.iter().position(|n| *n == s);
    let terms = parse_terms(src, &lookup)?;
    let n = names.len();
    let mut p = Polynomial::zero(n);
    for t in terms {
        let mut e = super::zero_exp(n);
        for (v, k) in t.factors {
            e[v] += k;
        }
        p.add_term(e, t.coeff);
    }
    Ok(p)
}

/// Format one monomial; empty string for the unit monomial.
pub fn format_monomial(exp: &[u32], names: &[String]) -> String {
    let mut s = String::new();
    for (i, &k) in exp.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&names[i]);
        if k > 1 {
            let _ = write!(s, "^{k}");
        }
    }
    s
}

/// Join `(coefficient, monomial)` pairs, already in display order.
pub fn format_terms<K: Field>(terms: impl IntoIterator<Item = (K, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative_constant();
        let abs = if neg { c.neg() } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let cs = abs.to_string();
        if mono.is_empty() {
            out.push_str(&cs);
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{cs}*{mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: terms in degrevlex-descending order.
pub fn format_polynomial<K: Field>(p: &Polynomial<K>, names: &[String]) -> String {
    let ord = MonomialOrder::degrevlex(p.nvars());
    format_terms(p.sorted_terms(&ord).into_iter().map(|(e, c)| (c.clone(), format_monomial(e, names))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let names = ["x", "y", "z"];
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let p = parse_polynomial("x^2 - 3/2*y*z + 4 - x*x", &names).unwrap();
        assert_eq!(format_polynomial(&p, &owned), "-3/2*y*z + 4");
        let q = parse_polynomial(&format_polynomial(&p, &owned), &names).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn errors_have_positions() {
        let names = ["d1"];
        match parse_polynomial("d1^2 @@", &names) {
            Err(Error::Syntax { line: 1, col: 6, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("d1 d1", &names) {
            Err(Error::Syntax { col: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("q1", &names), Err(Error::Syntax { col: 1, .. })));
        assert!(parse_polynomial("d1 +", &names).is_err());
        assert!(parse_polynomial("1/0*d1", &names).is_err());
    }
}
