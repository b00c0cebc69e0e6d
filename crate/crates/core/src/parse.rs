//! Polynomial expression parser.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' nat)?
//! base   := var | nat | '(' expr ')'
//! ```
//!
//! A variable is a letter followed by optional digits, so `X1X2` and `XYZ`
//! are products of two and three factors respectively. When an explicit
//! variable list is supplied, the longest listed name matching at the
//! current position wins. `−` (U+2212) is accepted as a minus sign.

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::poly::{ExponentVector, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

type Result<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(usize),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

/// A parsed polynomial with the variable names in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPolynomial {
    pub poly: Polynomial,
    pub names: Vec<String>,
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::SyntaxError { position, message: message.into() }
}

struct Lexer<'a> {
    chars: Vec<char>,
    fixed: Option<&'a [String]>,
    names: Vec<String>,
}

impl<'a> Lexer<'a> {
    fn new(src: &str, fixed: Option<&'a [String]>) -> Self {
        Lexer { chars: src.chars().collect(), fixed, names: fixed.map(<[String]>::to_vec).unwrap_or_default() }
    }

    fn var_index(&mut self, name: &str) -> usize {
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }

    fn tokens(&mut self) -> Result<Vec<(usize, Token)>> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.chars.len() {
            let ch = self.chars[i];
            let start = i;
            let token = match ch {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '+' => Token::Plus,
                '-' | '\u{2212}' => Token::Minus,
                '*' | '\u{00b7}' => Token::Star,
                '^' => Token::Caret,
                '(' => Token::LParen,
                ')' => Token::RParen,
                c if c.is_ascii_digit() => {
                    while i + 1 < self.chars.len() && self.chars[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = self.chars[start..=i].iter().collect();
                    Token::Nat(digits.parse().expect("ascii digits"))
                }
                c if c.is_ascii_alphabetic() => {
                    let name = self.lex_name(start)?;
                    i = start + name.chars().count() - 1;
                    Token::Var(self.var_index(&name))
                }
                c => return Err(syntax(start, format!("unexpected character `{c}`"))),
            };
            out.push((start, token));
            i += 1;
        }
        Ok(out)
    }

    fn lex_name(&self, start: usize) -> Result<String> {
        let rest: String = self.chars[start..].iter().collect();
        match self.fixed {
            Some(names) => names
                .iter()
                .filter(|n| rest.starts_with(n.as_str()))
                .max_by_key(|n| n.len())
                .cloned()
                .ok_or_else(|| ParseError::UnknownVariable(default_name(&self.chars[start..]))),
            None => Ok(default_name(&self.chars[start..])),
        }
    }
}

fn default_name(chars: &[char]) -> String {
    let digits = chars[1..].iter().take_while(|c| c.is_ascii_digit()).count();
    chars[..=digits].iter().collect()
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    field: FieldSpec,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.peek() == Some(&Token::Minus);
        if negate {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?).expect("same ring");
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.multiply(&self.factor()?).expect("same ring");
                }
                Some(Token::Var(_) | Token::Nat(_) | Token::LParen) => {
                    acc = acc.multiply(&self.factor()?).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Nat(k)) => {
                self.pos += 1;
                let k: u32 = k.try_into().map_err(|_| syntax(at, "exponent too large"))?;
                Ok(base.pow(k))
            }
            Some(Token::Minus) => Err(ParseError::NegativeExponent(at)),
            _ => Err(syntax(at, "expected a nonnegative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Var(i)) => {
                self.pos += 1;
                Ok(Polynomial::variable(self.field, self.nvars, i))
            }
            Some(Token::Nat(z)) => {
                self.pos += 1;
                let c = self.field.from_integer(&z);
                Ok(Polynomial::monomial(self.field, ExponentVector::zero(self.nvars), c))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(syntax(at, "expected a variable, number or `(`")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses `src` over `field`. Variables are numbered by first appearance
/// unless `vars` fixes the list (and its order).
pub fn parse_polynomial(src: &str, field: FieldSpec, vars: Option<&[String]>) -> Result<ParsedPolynomial> {
    if let Some(names) = vars {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(ParseError::DuplicateVariable(n.clone()));
            }
        }
    }
    let mut lexer = Lexer::new(src, vars);
    let tokens = lexer.tokens()?;
    let end = lexer.chars.len();
    if tokens.is_empty() {
        return Err(syntax(end, "empty expression"));
    }
    let names = lexer.names;
    let mut parser = Parser { tokens, pos: 0, end, field, nvars: names.len() };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected token"));
    }
    Ok(ParsedPolynomial { poly, names })
}

/// Parses several expressions (e.g. ideal generators) into one ring whose
/// variables are numbered by first appearance across all of them.
pub fn parse_polynomials(sources: &[&str], field: FieldSpec, vars: Option<&[String]>) -> Result<(Vec<Polynomial>, Vec<String>)> {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for src in sources {
                let mut lexer = Lexer::new(src, None);
                lexer.names = names;
                lexer.tokens()?;
                names = lexer.names;
            }
            names
        }
    };
    let polys = sources
        .iter()
        .map(|s| parse_polynomial(s, field, Some(&names)).map(|p| p.poly))
        .collect::<Result<Vec<_>>>()?;
    Ok((polys, names))
}

/// Splits a semicolon-separated list, dropping empty entries.
pub fn split_ideal(src: &str) -> Vec<&str> {
    src.split(';').map(str::trim).filter(|s| !s.is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn implicit_products_and_indices() {
        let p = parse_polynomial("x1^2x2 - x1x2^2", Q, None).unwrap();
        assert_eq!(p.names, names(&["x1", "x2"]));
        assert_eq!(p.poly.num_terms(), 2);
        assert_eq!(p.poly.display_with(&default_names(2, true)).to_string(), "X1^2*X2 - X1*X2^2");
    }

    #[test]
    fn expanded_product() {
        let p = parse_polynomial("X^3*Y*Z^4*T*U^2*V^6*(X^2*Y*Z*T^2*U - V^7)", Q, None).unwrap();
        assert_eq!(p.names, names(&["X", "Y", "Z", "T", "U", "V"]));
        assert_eq!(p.poly.num_terms(), 2);
        assert_eq!(p.poly.homogeneous_degree(), Some(24));
        let q = parse_polynomial("X^3YZ^4TU^2V^6(X^2YZT^2U\u{2212}V^7)", Q, None).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_polynomial("x^(2)", Q, None), Err(ParseError::SyntaxError { position: 2, .. })));
        assert_eq!(parse_polynomial("x^-2", Q, None), Err(ParseError::NegativeExponent(2)));
        assert!(matches!(parse_polynomial("", Q, None), Err(ParseError::SyntaxError { .. })));
        assert!(matches!(parse_polynomial("x +", Q, None), Err(ParseError::SyntaxError { .. })));
        assert!(matches!(parse_polynomial("(x", Q, None), Err(ParseError::SyntaxError { .. })));
        assert!(matches!(parse_polynomial("x $ y", Q, None), Err(ParseError::SyntaxError { position: 2, .. })));
        let v = names(&["x", "y"]);
        assert_eq!(parse_polynomial("x*z", Q, Some(&v)), Err(ParseError::UnknownVariable("z".into())));
    }

    #[test]
    fn fixed_variables_use_longest_match() {
        let v = names(&["y", "x", "xy"]);
        let p = parse_polynomial("xy*x + y", Q, Some(&v)).unwrap();
        assert_eq!(p.names, v);
        assert_eq!(p.poly.display_with(&v).to_string(), "y + x*xy");
    }

    #[test]
    fn leading_minus_and_constants() {
        let p = parse_polynomial("-2x + 3", Q, None).unwrap();
        assert_eq!(p.poly.display_with(&p.names).to_string(), "-2*x + 3");
        let p = parse_polynomial("7", FieldSpec::PrimeField(5), None).unwrap();
        assert_eq!(p.poly.display_with(&p.names).to_string(), "2");
    }

    #[test]
    fn ideal_lists_share_variables() {
        let (polys, names) = parse_polynomials(&split_ideal("x^2; y^2 ;z^2;"), Q, None).unwrap();
        assert_eq!(names.len(), 3);
        assert!(polys.iter().all(|p| p.nvars() == 3));
    }
}
