//! Sparse multivariate polynomials and the contraction action.
//!
//! The same [`Polynomial`] type represents elements of the polynomial ring
//! `R = K[x_1..x_n]` and of the divided-power module `S = K[X_1..X_n]`; which
//! side a value lives on is decided by how it is used. `x^a ∘ X^b` is
//! `X^(b-a)` when `b >= a` componentwise and zero otherwise. There are no
//! factorial coefficients, so the action is valid in every characteristic.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("polynomials live over different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("variable supports overlap")]
    OverlappingSupport,
}

/// Exponent tuple of a monomial `x^a` (or `X^a`).
///
/// The derived `Ord` is plain lexicographic order; the canonical order used
/// for bases and printing is the reverse of it (decreasing lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The exponent vector of the variable `x_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other - self`, when it stays nonnegative.
    pub fn checked_sub_from(&self, other: &ExponentVector) -> Option<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(b.checked_sub(*a)?);
        }
        Some(ExponentVector(out))
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Multiply by `x_i`.
    pub fn bump(&self, i: usize) -> ExponentVector {
        let mut e = self.0.clone();
        e[i] += 1;
        ExponentVector(e)
    }

    /// Divide by `x_i`, if possible.
    pub fn lower(&self, i: usize) -> Option<ExponentVector> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(ExponentVector(e))
    }

    pub fn scaled(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// `alpha ∘ beta`: `Some(beta - alpha)` when `alpha <= beta`, `None` when the
/// monomial is annihilated.
pub fn contract_monomial(
    alpha: &ExponentVector,
    beta: &ExponentVector,
) -> Result<Option<ExponentVector>, PolyError> {
    if alpha.len() != beta.len() {
        return Err(PolyError::LengthMismatch(alpha.len(), beta.len()));
    }
    Ok(alpha.checked_sub_from(beta))
}

/// All monomials of degree `t` in `n` variables, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    pub monomials: Vec<ExponentVector>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index(&self) -> std::collections::HashMap<ExponentVector, usize> {
        self.monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
    }
}

/// Canonical (strictly decreasing lex) list of the `C(t+n-1, n-1)` monomials
/// of degree `t` in `n` variables.
pub fn monomials_of_degree(n: usize, t: u32) -> GradedBasis {
    fn fill(prefix: &mut Vec<u32>, n: usize, rest: u32, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == n {
            prefix.push(rest);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e);
            fill(prefix, n, rest - e, out);
            prefix.pop();
        }
    }
    let mut monomials = Vec::new();
    if n == 0 {
        if t == 0 {
            monomials.push(ExponentVector(Vec::new()));
        }
    } else {
        fill(&mut Vec::with_capacity(n), n, t, &mut monomials);
    }
    GradedBasis { degree: t, monomials }
}

/// `dim R_t = C(t+n-1, n-1)`, the number of monomials of degree `t` in `n`
/// variables.
pub fn forms_count(n: usize, t: u32) -> usize {
    if n == 0 {
        return usize::from(t == 0);
    }
    binomial(t as u64 + n as u64 - 1, n as u64 - 1) as usize
}

/// Binomial coefficient `C(n, k)` as u64 (saturating is unnecessary at the
/// sizes used here).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Sparse polynomial with exact coefficients. Never stores zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: BTreeMap::new() }
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Self::monomial(field, ExponentVector::zero(nvars), field.one())
    }

    pub fn monomial(field: FieldSpec, exponents: ExponentVector, coeff: Scalar) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Polynomial { field, nvars, terms }
    }

    /// The variable `x_i` as a polynomial.
    pub fn variable(field: FieldSpec, nvars: usize, i: usize) -> Self {
        Self::monomial(field, ExponentVector::unit(nvars, i), field.one())
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<I>(field: FieldSpec, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Scalar)>,
    {
        let mut p = Polynomial::zero(field, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, &c);
        }
        p
    }

    /// Linear form `Σ c_i x_i` from integer coefficients.
    pub fn linear_form(field: FieldSpec, coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            field,
            n,
            coeffs.iter().enumerate().map(|(i, c)| (ExponentVector::unit(n, i), field.from_i64(*c))),
        )
    }

    fn add_term(&mut self, e: ExponentVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = &*existing + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (decreasing lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Scalar> {
        self.terms.get(e)
    }

    /// Leading term in canonical order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Degree shared by all terms, or `None` for zero / inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Indices of variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::LengthMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        self.map_coefficients(|c| c * s)
    }

    fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        }
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift(&self, e: &ExponentVector) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.add(e), c.clone())).collect(),
        }
    }

    /// Ordinary commutative product.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `self ∘ target`, the contraction action of `R` on `S`.
    pub fn contract(&self, target: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(target)?;
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &target.terms {
                if let Some(e) = a.checked_sub_from(b) {
                    out.add_term(e, &(ca * cb));
                }
            }
        }
        Ok(out)
    }

    /// Re-embed into a ring with `nvars` variables, sending variable `i` to
    /// `map[i]`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = vec![0; nvars];
            for (i, &x) in e.as_slice().iter().enumerate() {
                v[map[i]] += x;
            }
            (ExponentVector(v), c.clone())
        });
        Polynomial::from_terms(self.field, nvars, terms)
    }

    /// Drop to the variables listed in `keep` (in that order). Callers must
    /// ensure the discarded variables do not occur.
    pub fn restrict(&self, keep: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| {
            debug_assert!((0..self.nvars).filter(|i| !keep.contains(i)).all(|i| e[i] == 0));
            (ExponentVector(keep.iter().map(|&i| e[i]).collect()), c.clone())
        });
        Polynomial::from_terms(self.field, keep.len(), terms)
    }

    /// Render with the given variable names, e.g. `x^2*y - 3/2*y^3`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    /// `[coefficient, exponent-array]` pairs in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(e, c)| serde_json::json!([c.to_canonical_string(), e.as_slice()]))
                .collect(),
        )
    }
}

/// Contraction `f ∘ target`.
pub fn contract(f: &Polynomial, target: &Polynomial) -> Result<Polynomial, PolyError> {
    f.contract(target)
}

/// Product `f · g`.
pub fn multiply(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.multiply(g)
}

/// Default variable names `x1..xn`.
pub fn default_names(n: usize, upper: bool) -> Vec<String> {
    let base = if upper { "X" } else { "x" };
    (1..=n).map(|i| format!("{base}{i}")).collect()
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.poly.terms().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let factors: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    let name = self.names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                    if x == 1 {
                        name
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
