//! Closed-form complete-intersection test for binomial dual generators.
//!
//! A two-term form factors as
//! `F = s · X^a (X_1^{b_1}···X_r^{b_r} − c · X_{r+1}^{b_{r+1}}···X_n^{b_n})`
//! with `X^a = gcd` of the two monomials. Variables with `b_i = 0` split off
//! as tensor factors `K[x_i]/(x_i^{a_i+1})`. The remaining algebra is a
//! complete intersection exactly when, in one of the two orientations, the
//! right block is a single variable `x_n` and some `i < n` has
//! `a_i < q·b_i` with `q = ⌊(a_n+1)/b_n⌋`; the annihilator is then
//! `(x_1^{a_1+b_1+1}, …, x_{n-1}^{a_{n-1}+b_{n-1}+1}, G)` with
//! `G = x_n^{a_n+1} + Σ_{j=1}^{m} c^j (x_1^{b_1}···x_{n-1}^{b_{n-1}})^j x_n^{a_n+1−j·b_n}`
//! and `m = min_j ⌊a_j/b_j⌋ + 1`.

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::inverse::{
    ideal_equals_annihilator_with, is_complete_intersection_oracle, GradedIdealPresentation,
    InverseSystemError,
};
use crate::poly::{ExponentVector, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BinomialError {
    #[error("expected exactly two terms, found {0}")]
    NotBinomial(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the two monomials coincide")]
    DegenerateBinomial,
    #[error("the algebra is not a complete intersection")]
    NotCi,
    #[error(transparent)]
    Oracle(#[from] InverseSystemError),
}

type Result<T> = std::result::Result<T, BinomialError>;

/// A variable with `b_i = 0`, contributing the factor `X_i^{exponent}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorFactor {
    pub variable: usize,
    pub exponent: u32,
}

/// Factored form `F = scale · X^a (X^{b_left} − c · X^{b_right})` over the
/// variables with `b_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialNormalForm {
    pub field: FieldSpec,
    /// Variable count of the input ring.
    pub ambient_nvars: usize,
    /// Number of variables with `b_i > 0`.
    pub n: usize,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    /// Size of the left block.
    pub r: usize,
    pub c: Scalar,
    pub scale: Scalar,
    /// `variable_map[k]` is the input variable at normal-form position `k`.
    pub variable_map: Vec<usize>,
    pub tensor_factors: Vec<TensorFactor>,
    pub degree: u32,
}

impl BinomialNormalForm {
    /// Factors a two-term form. The canonically larger monomial goes first
    /// and its coefficient is divided out.
    pub fn new(f: &Polynomial) -> Result<Self> {
        normalize(f)
    }

    /// Same binomial with the two monomials exchanged.
    pub fn mirror(&self) -> BinomialNormalForm {
        let rot = |v: &[u32]| -> Vec<u32> { v[self.r..].iter().chain(&v[..self.r]).copied().collect() };
        let variable_map = self.variable_map[self.r..].iter().chain(&self.variable_map[..self.r]).copied().collect();
        BinomialNormalForm {
            a: rot(&self.a),
            b: rot(&self.b),
            r: self.n - self.r,
            c: self.c.invert().expect("c is nonzero"),
            scale: -&(&self.scale * &self.c),
            variable_map,
            ..self.clone()
        }
    }

    /// `Σ b_i` over the left block, which equals the sum over the right block.
    pub fn block_degree(&self) -> u32 {
        self.b[..self.r].iter().sum()
    }

    /// Reassembles `F` in the input ring.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut left = vec![0u32; self.ambient_nvars];
        for tf in &self.tensor_factors {
            left[tf.variable] = tf.exponent;
        }
        let mut right = left.clone();
        for (k, &v) in self.variable_map.iter().enumerate() {
            left[v] = self.a[k] + if k < self.r { self.b[k] } else { 0 };
            right[v] = self.a[k] + if k < self.r { 0 } else { self.b[k] };
        }
        Polynomial::from_terms(
            self.field,
            self.ambient_nvars,
            [
                (ExponentVector::new(left), self.scale.clone()),
                (ExponentVector::new(right), -&(&self.scale * &self.c)),
            ],
        )
    }

    /// `q = ⌊(a_n+1)/b_n⌋` for the last variable in this orientation.
    pub fn q(&self) -> u32 {
        let k = self.n - 1;
        (self.a[k] + 1) / self.b[k]
    }
}

/// Splits `F` into the data of [`BinomialNormalForm`].
pub fn normalize(f: &Polynomial) -> Result<BinomialNormalForm> {
    if f.num_terms() != 2 {
        return Err(BinomialError::NotBinomial(f.num_terms()));
    }
    let degree = f.homogeneous_degree().ok_or(BinomialError::NotHomogeneous)?;
    let mut terms = f.terms();
    let (m1, c1) = terms.next().unwrap();
    let (m2, c2) = terms.next().unwrap();
    if m1 == m2 {
        return Err(BinomialError::DegenerateBinomial);
    }
    let g = m1.gcd(m2);
    let nvars = f.nvars();
    let left: Vec<usize> = (0..nvars).filter(|&i| m1[i] > g[i]).collect();
    let right: Vec<usize> = (0..nvars).filter(|&i| m2[i] > g[i]).collect();
    if left.is_empty() || right.is_empty() {
        return Err(BinomialError::DegenerateBinomial);
    }
    let variable_map: Vec<usize> = left.iter().chain(&right).copied().collect();
    let a = variable_map.iter().map(|&i| g[i]).collect();
    let b = left.iter().map(|&i| m1[i] - g[i]).chain(right.iter().map(|&i| m2[i] - g[i])).collect();
    let tensor_factors = (0..nvars)
        .filter(|i| !variable_map.contains(i))
        .map(|i| TensorFactor { variable: i, exponent: g[i] })
        .collect();
    let c = -&c2.div(c1).expect("nonzero leading coefficient");
    Ok(BinomialNormalForm {
        field: f.field(),
        ambient_nvars: nvars,
        n: variable_map.len(),
        a,
        b,
        r: left.len(),
        c,
        scale: c1.clone(),
        variable_map,
        tensor_factors,
        degree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    /// Both blocks have at least two variables.
    #[serde(rename = "R_TOO_SMALL")]
    RTooSmall,
    /// The single-variable side exists but no `a_i < q·b_i`.
    #[serde(rename = "NO_INDEX_SATISFIES_A_LT_QB")]
    NoIndexSatisfiesALtQb,
    /// The explicit generators apply.
    #[serde(rename = "CI")]
    Ci,
    /// Two variables with `b_i > 0` but the explicit generators do not
    /// apply; every Gorenstein ideal of height two is a complete
    /// intersection, and the generators come from the oracle.
    #[serde(rename = "CODIM_TWO")]
    CodimTwo,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::RTooSmall => "R_TOO_SMALL",
            Reason::NoIndexSatisfiesALtQb => "NO_INDEX_SATISFIES_A_LT_QB",
            Reason::Ci => "CI",
            Reason::CodimTwo => "CODIM_TWO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// The orientation the verdict was reached in (possibly mirrored).
    pub normal_form: BinomialNormalForm,
    pub mirrored: bool,
    pub is_ci: bool,
    pub reason: Reason,
    /// Absent when neither orientation has a single-variable side.
    pub q: Option<u32>,
    pub m: Option<u32>,
    /// 1-based position in `normal_form` of the first `i` with `a_i < q·b_i`.
    pub witness_index: Option<usize>,
    /// Generators of `Ann(F)` in the input ring, tensor factors last.
    pub generators: Option<Vec<Polynomial>>,
}

/// Result of checking one orientation against the closed-form criterion.
struct OrientationCheck {
    q: u32,
    witness: Option<usize>,
}

fn check_orientation(nf: &BinomialNormalForm) -> Option<OrientationCheck> {
    if nf.r + 1 != nf.n {
        return None;
    }
    let q = nf.q();
    let witness = (0..nf.n - 1).find(|&i| nf.a[i] < q * nf.b[i]);
    Some(OrientationCheck { q, witness })
}

/// `m = min_{j<n} ⌊a_j/b_j⌋ + 1`.
fn m_value(nf: &BinomialNormalForm) -> u32 {
    (0..nf.n - 1).map(|j| nf.a[j] / nf.b[j]).min().unwrap_or(0) + 1
}

/// Applies the closed-form criterion in both orientations.
pub fn classify(nf: &BinomialNormalForm) -> ClassificationReport {
    let mirror = nf.mirror();
    let checks = [(nf, false, check_orientation(nf)), (&mirror, true, check_orientation(&mirror))];

    if let Some((form, mirrored, check)) = checks
        .iter()
        .find_map(|(form, mirrored, c)| c.as_ref().filter(|c| c.witness.is_some()).map(|c| (*form, *mirrored, c)))
    {
        let generators = closed_form_generators(form);
        return ClassificationReport {
            normal_form: form.clone(),
            mirrored,
            is_ci: true,
            reason: Reason::Ci,
            q: Some(check.q),
            m: Some(m_value(form)),
            witness_index: check.witness.map(|i| i + 1),
            generators: Some(generators),
        };
    }

    let fallback = checks.iter().find_map(|(form, mirrored, c)| c.as_ref().map(|c| (*form, *mirrored, c.q)));
    match fallback {
        None => ClassificationReport {
            normal_form: nf.clone(),
            mirrored: false,
            is_ci: false,
            reason: Reason::RTooSmall,
            q: None,
            m: None,
            witness_index: None,
            generators: None,
        },
        Some((form, mirrored, q)) if nf.n == 2 => {
            let generators = oracle_generators(nf);
            ClassificationReport {
                normal_form: form.clone(),
                mirrored,
                is_ci: true,
                reason: Reason::CodimTwo,
                q: Some(q),
                m: None,
                witness_index: None,
                generators: Some(generators),
            }
        }
        Some((form, mirrored, q)) => ClassificationReport {
            normal_form: form.clone(),
            mirrored,
            is_ci: false,
            reason: Reason::NoIndexSatisfiesALtQb,
            q: Some(q),
            m: None,
            witness_index: None,
            generators: None,
        },
    }
}

fn oracle_generators(nf: &BinomialNormalForm) -> Vec<Polynomial> {
    let f = nf.to_polynomial();
    let verdict = is_complete_intersection_oracle(&f).expect("normal form reassembles to a nonzero form");
    assert!(verdict.is_ci, "height-two Gorenstein ideal must be a complete intersection");
    let mut gens = verdict.full_ring_presentation(nf.ambient_nvars).generators().to_vec();
    gens.sort_by_key(|g| g.homogeneous_degree());
    gens
}

/// The `n − 1` pure powers, then `G`, then `x_i^{a_i+1}` per tensor factor,
/// each checked to annihilate `F` before being returned.
fn closed_form_generators(nf: &BinomialNormalForm) -> Vec<Polynomial> {
    let field = nf.field;
    let nv = nf.ambient_nvars;
    let n = nf.n;
    let power = |var: usize, e: u32| {
        let mut v = vec![0u32; nv];
        v[var] = e;
        Polynomial::monomial(field, ExponentVector::new(v), field.one())
    };
    let mut gens: Vec<Polynomial> =
        (0..n - 1).map(|k| power(nf.variable_map[k], nf.a[k] + nf.b[k] + 1)).collect();

    let last = nf.variable_map[n - 1];
    let top = nf.a[n - 1] + 1;
    let mut g_terms = vec![(power(last, top).leading_term().unwrap().0.clone(), field.one())];
    for j in 1..=m_value(nf) {
        let mut v = vec![0u32; nv];
        for k in 0..n - 1 {
            v[nf.variable_map[k]] = j * nf.b[k];
        }
        v[last] = top - j * nf.b[n - 1];
        g_terms.push((ExponentVector::new(v), nf.c.pow(j)));
    }
    gens.push(Polynomial::from_terms(field, nv, g_terms));
    gens.extend(nf.tensor_factors.iter().map(|tf| power(tf.variable, tf.exponent + 1)));

    let f = nf.to_polynomial();
    for g in &gens {
        assert!(
            g.contract(&f).expect("same ring").is_zero(),
            "closed-form generator fails to annihilate F"
        );
    }
    gens
}

/// Generators of `Ann(F)` from the closed form (or the height-two fallback).
pub fn explicit_generators(nf: &BinomialNormalForm) -> Result<Vec<Polynomial>> {
    classify(nf).generators.ok_or(BinomialError::NotCi)
}

/// Closed-form verdict next to the brute-force one.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub report: ClassificationReport,
    pub oracle_is_ci: bool,
    pub oracle_mu: usize,
    /// Whether the emitted generators generate exactly `Ann(F)`; `None`
    /// when there are no generators to check.
    pub generators_match: Option<bool>,
}

impl CrossValidation {
    pub fn agrees(&self) -> bool {
        self.report.is_ci == self.oracle_is_ci && self.generators_match != Some(false)
    }
}

pub fn cross_validate_report(f: &Polynomial) -> Result<CrossValidation> {
    let nf = normalize(f)?;
    let report = classify(&nf);
    let verdict = is_complete_intersection_oracle(f)?;
    let generators_match = match &report.generators {
        None => None,
        Some(gens) => {
            let j = GradedIdealPresentation::new(f.field(), f.nvars(), gens.clone())?;
            let ann = verdict.full_ring_presentation(f.nvars());
            Some(ideal_equals_annihilator_with(&j, f, &ann)?)
        }
    };
    Ok(CrossValidation { report, oracle_is_ci: verdict.is_ci, oracle_mu: verdict.mu, generators_match })
}

/// Whether the closed form and the oracle agree on `F`, including equality
/// of the emitted generators with `Ann(F)`.
pub fn cross_validate(f: &Polynomial) -> Result<bool> {
    Ok(cross_validate_report(f)?.agrees())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(Q, n, terms.iter().map(|(c, e)| (ev(e), Q.from_i64(*c))))
    }

    #[test]
    fn scaled_two_variable_binomial() {
        let f = poly(2, &[(2, &[2, 1]), (-3, &[1, 2])]);
        let nf = normalize(&f).unwrap();
        assert_eq!((nf.a.clone(), nf.b.clone(), nf.r), (vec![1, 1], vec![1, 1], 1));
        assert_eq!(nf.c, Q.from_fraction(&3.into(), &2.into()).unwrap());
        assert_eq!(nf.to_polynomial(), f);
        assert_eq!(nf.mirror().to_polynomial(), f);
        let report = classify(&nf);
        assert!(report.is_ci);
        assert_eq!(report.reason, Reason::Ci);
        // G = x2^2 + (3/2) x1 x2 + (9/4) x1^2 with m = 2
        let gens = report.generators.unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], poly(2, &[(1, &[3, 0])]));
        let g = &gens[1];
        assert_eq!(g.coefficient(&ev(&[2, 0])), Some(&Q.from_fraction(&9.into(), &4.into()).unwrap()));
        assert!(cross_validate(&f).unwrap());
    }

    #[test]
    fn error_cases() {
        assert_eq!(normalize(&poly(2, &[(1, &[1, 1])])), Err(BinomialError::NotBinomial(1)));
        assert_eq!(
            normalize(&poly(2, &[(1, &[1, 1]), (1, &[1, 0])])),
            Err(BinomialError::NotHomogeneous)
        );
        let f = poly(3, &[(1, &[1, 1, 0]), (1, &[0, 0, 2]), (1, &[2, 0, 0])]);
        assert_eq!(normalize(&f), Err(BinomialError::NotBinomial(3)));
    }

    #[test]
    fn zero_shift_generators() {
        // X1 X2 − X3^2 : a = 0, so q = 1 and m = 1
        let f = poly(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let report = classify(&normalize(&f).unwrap());
        assert!(!report.is_ci);
        // X1^2 − X2 X3 mirrored has the single variable on the right
        let f = poly(3, &[(1, &[0, 1, 1]), (-1, &[2, 0, 0])]);
        let report = classify(&normalize(&f).unwrap());
        assert!(!report.is_ci);
        assert_eq!(report.reason, Reason::NoIndexSatisfiesALtQb);
        let f = poly(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        assert!(cross_validate(&f).unwrap());
    }

    #[test]
    fn codim_two_fallback() {
        // X^2 Y^2 (X^2 − Y^2): q = 1 and 2 < 2 fails in both orientations
        let f = poly(2, &[(1, &[4, 2]), (-1, &[2, 4])]);
        let report = classify(&normalize(&f).unwrap());
        assert!(report.is_ci);
        assert_eq!(report.reason, Reason::CodimTwo);
        assert_eq!(report.generators.as_ref().unwrap().len(), 2);
        assert!(cross_validate(&f).unwrap());
    }

    #[test]
    fn tensor_factor_variables() {
        let f = poly(3, &[(1, &[2, 0, 1]), (-1, &[0, 2, 1])]);
        let nf = normalize(&f).unwrap();
        assert_eq!(nf.tensor_factors, vec![TensorFactor { variable: 2, exponent: 1 }]);
        assert_eq!(nf.n, 2);
        let report = classify(&nf);
        assert!(report.is_ci);
        assert!(report.generators.as_ref().unwrap().contains(&poly(3, &[(1, &[0, 0, 2])])));
        assert!(cross_validate(&f).unwrap());
    }

    #[test]
    fn verdict_ignores_c() {
        for c in [1, -1, 5, 7] {
            let f = poly(3, &[(1, &[2, 1, 1]), (-c, &[1, 0, 3])]);
            let report = classify(&normalize(&f).unwrap());
            assert!(report.is_ci);
            assert!(cross_validate(&f).unwrap());
        }
    }
}
