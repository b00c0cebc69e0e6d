//! Deterministic families of dual generators.

use thiserror::Error;

use crate::field::FieldSpec;
use crate::poly::{ExponentVector, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("sweep needs max_b >= 1")]
    EmptyBBound,
    #[error("sweep needs at least two variables, got {0}")]
    TooFewVariables(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `F = X^a`.
pub fn monomial_family(field: FieldSpec, a: &[u32]) -> Polynomial {
    Polynomial::monomial(field, ExponentVector::new(a.to_vec()), field.one())
}

/// `F = (X1^{s-1} + X1^{s-2} X2 + … + X2^{s-1}) · X3^{t_1} ··· X_{2+|tail|}^{t_|tail|}`.
pub fn sum_family(field: FieldSpec, s: u32, tail: &[u32]) -> Polynomial {
    assert!(s >= 1, "s must be positive");
    let n = 2 + tail.len();
    Polynomial::from_terms(
        field,
        n,
        (0..s).map(|j| {
            let mut e = vec![s - 1 - j, j];
            e.extend_from_slice(tail);
            (ExponentVector::new(e), field.one())
        }),
    )
}

/// `F1 · F2` for forms in the same ring with disjoint variable supports, so
/// that `A_F = A_{F1} ⊗ A_{F2}`.
pub fn tensor_dual(f1: &Polynomial, f2: &Polynomial) -> Result<Polynomial, FamilyError> {
    let s1 = f1.support();
    if f2.support().iter().any(|i| s1.contains(i)) {
        return Err(PolyError::OverlappingSupport.into());
    }
    Ok(f1.multiply(f2)?)
}

/// `F1 · F2` with `F1` on the first `p` variables and `F2` on the next `q`.
pub fn tensor_dual_shifted(f1: &Polynomial, f2: &Polynomial) -> Result<Polynomial, FamilyError> {
    let (p, q) = (f1.nvars(), f2.nvars());
    let left = f1.relabel(p + q, &(0..p).collect::<Vec<_>>());
    let right = f2.relabel(p + q, &(p..p + q).collect::<Vec<_>>());
    tensor_dual(&left, &right)
}

/// Coefficients of the product of the two h-polynomials.
pub fn convolve(h1: &[usize], h2: &[usize]) -> Vec<usize> {
    if h1.is_empty() || h2.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; h1.len() + h2.len() - 1];
    for (i, x) in h1.iter().enumerate() {
        for (j, y) in h2.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Bounds for an exhaustive binomial sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSpec {
    pub n: usize,
    pub max_a: u32,
    pub max_b: u32,
    /// Also emit every binomial with its two monomials swapped (`−F`).
    pub both_orientations: bool,
}

impl SweepSpec {
    pub fn new(n: usize, max_a: u32, max_b: u32) -> Self {
        SweepSpec { n, max_a, max_b, both_orientations: false }
    }
}

/// One enumerated binomial and its parameters. `signed_b[i] > 0` puts
/// `X_i` in the first block, `< 0` in the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCase {
    pub a: Vec<u32>,
    pub signed_b: Vec<i64>,
    pub poly: Polynomial,
}

/// All `F = X^a (X^{b⁺} − X^{b⁻})` with `a_i ≤ max_a`, `|b_i| ≤ max_b`,
/// balanced blocks, and the first variable with `b_i ≠ 0` in the first
/// block. Each binomial appears once up to sign (twice when
/// `both_orientations` is set). Variables with `a_i = b_i = 0` are allowed.
pub fn enumerate_binomials(field: FieldSpec, spec: SweepSpec) -> Result<impl Iterator<Item = SweepCase>, FamilyError> {
    if spec.max_b == 0 {
        return Err(FamilyError::EmptyBBound);
    }
    if spec.n < 2 {
        return Err(FamilyError::TooFewVariables(spec.n));
    }
    let n = spec.n;
    let bs: Vec<Vec<i64>> = signed_vectors(n, spec.max_b as i64)
        .filter(|b| b.iter().sum::<i64>() == 0 && b.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .collect();
    let a_count = (spec.max_a as u64 + 1).pow(n as u32);
    let cases = (0..a_count).flat_map(move |code| {
        let mut a = vec![0u32; n];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = (c % (spec.max_a as u64 + 1)) as u32;
            c /= spec.max_a as u64 + 1;
        }
        let signs: &[i64] = if spec.both_orientations { &[1, -1] } else { &[1] };
        bs.clone()
            .into_iter()
            .flat_map(move |b| {
                let a = a.clone();
                signs.iter().map(move |&s| {
                    let signed_b: Vec<i64> = b.iter().map(|x| x * s).collect();
                    let poly = binomial_from(field, &a, &signed_b);
                    SweepCase { a: a.clone(), signed_b, poly }
                })
            })
            .collect::<Vec<_>>()
    });
    Ok(cases)
}

/// Vectors in `{-m..=m}^n` in lexicographic order.
fn signed_vectors(n: usize, m: i64) -> impl Iterator<Item = Vec<i64>> {
    let base = (2 * m + 1) as u64;
    (0..base.pow(n as u32)).map(move |mut code| {
        let mut v = vec![0i64; n];
        for slot in v.iter_mut().rev() {
            *slot = (code % base) as i64 - m;
            code /= base;
        }
        v
    })
}

/// `X^a (X^{b⁺} − X^{b⁻})` from a signed exponent vector.
pub fn binomial_from(field: FieldSpec, a: &[u32], signed_b: &[i64]) -> Polynomial {
    let left: Vec<u32> = a.iter().zip(signed_b).map(|(&x, &b)| x + b.max(0) as u32).collect();
    let right: Vec<u32> = a.iter().zip(signed_b).map(|(&x, &b)| x + (-b).max(0) as u32).collect();
    Polynomial::from_terms(
        field,
        a.len(),
        [(ExponentVector::new(left), field.one()), (ExponentVector::new(right), -&field.one())],
    )
}
