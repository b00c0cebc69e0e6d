//! Weak and strong Lefschetz checks.
//!
//! For a dual generator `F` of degree `d`, the rank of `×ℓ^k : A_i → A_{i+k}`
//! equals the rank of the pairing matrix `M[a, b] = (x^a ℓ^k x^b) ∘ F`, with
//! `x^a` and `x^b` running over monomial bases of `A_i` and `A_{d-i-k}`.
//! Each entry is the coefficient of `X^{a+b}` in `ℓ^k ∘ F`, so one chain of
//! contractions `F, ℓ∘F, ℓ^2∘F, …` feeds every matrix.
//!
//! Over `Q`, ranks are first computed modulo the prime `2^31 − 1`. That rank
//! never exceeds the rational one, so reaching full rank settles the entry;
//! otherwise the rank is recomputed exactly.
//!
//! For an arbitrary Artinian presentation the multiplication maps are built
//! on standard-monomial bases of the quotient.

use std::cell::OnceCell;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::inverse::{from_sparse, hilbert_function, standard_monomials, GradedIdealPresentation, InverseSystemError, QuotientAlgebra};
use crate::linalg::{rank_mod_prime, Echelon, Matrix};
use crate::poly::{ExponentVector, PolyError, Polynomial};

/// Modulus of the fast rank path over `Q`.
pub const FAST_PRIME: u32 = 2_147_483_647;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LefschetzError {
    #[error("degree pair (i = {i}, k = {k}) out of range for socle degree {d}")]
    DegreeOutOfRange { i: u32, k: u32, d: u32 },
    #[error("ℓ must be a nonzero linear form in the same ring")]
    NotLinear,
    #[error(transparent)]
    Inverse(#[from] InverseSystemError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

type Result<T> = std::result::Result<T, LefschetzError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzMode {
    Wlp,
    Slp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzSearchStrategy {
    pub mode: LefschetzMode,
    /// Linear forms tried over `Q` (the first is `x_1 + … + x_n`).
    pub trials: usize,
    pub seed: u64,
    /// Compute every `(i, k)` entry instead of deducing them from the
    /// bijections `A_i → A_{d-i}`.
    pub full_table: bool,
    /// Over `F_p`, enumerate all linear forms up to scaling when there are at
    /// most this many.
    pub exhaustive_limit: usize,
}

impl Default for LefschetzSearchStrategy {
    fn default() -> Self {
        LefschetzSearchStrategy {
            mode: LefschetzMode::Slp,
            trials: 16,
            seed: 0x5eed,
            full_table: false,
            exhaustive_limit: 4096,
        }
    }
}

impl LefschetzSearchStrategy {
    pub fn with_mode(mode: LefschetzMode) -> Self {
        LefschetzSearchStrategy { mode, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankSource {
    /// Computed from a matrix.
    Computed,
    /// Copied from `(d-i-k, k)`, which has the same rank for a dual generator.
    Symmetry,
    /// Forced by the bijections `×ℓ^{d-2j} : A_j → A_{d-j}`.
    Implied,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEntry {
    pub i: u32,
    pub k: u32,
    pub achieved: usize,
    pub required: usize,
    pub source: RankSource,
}

impl RankEntry {
    pub fn ok(&self) -> bool {
        self.achieved == self.required
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzReport {
    pub ell: Polynomial,
    pub characteristic: u64,
    pub mode: LefschetzMode,
    pub h_vector: Vec<usize>,
    pub wlp: bool,
    /// `None` in WLP mode.
    pub slp: Option<bool>,
    /// Sorted by `(i, k)`.
    pub rank_table: Vec<RankEntry>,
    /// Smallest failing `(i, k)`, ordered by `k` first.
    pub first_failure: Option<(u32, u32)>,
    pub trials: usize,
    /// Successes are always certified; failures only after exhausting every
    /// linear form over a finite field.
    pub certified: bool,
    pub exhaustive: bool,
}

impl LefschetzReport {
    pub fn success(&self) -> bool {
        match self.mode {
            LefschetzMode::Wlp => self.wlp,
            LefschetzMode::Slp => self.slp == Some(true),
        }
    }

    pub fn entry(&self, i: u32, k: u32) -> Option<&RankEntry> {
        self.rank_table.iter().find(|e| e.i == i && e.k == k)
    }

    fn score(&self) -> usize {
        self.rank_table.iter().map(|e| e.achieved).sum()
    }

    fn from_table(ell: Polynomial, mode: LefschetzMode, h_vector: Vec<usize>, mut table: Vec<RankEntry>) -> Self {
        table.sort_by_key(|e| (e.i, e.k));
        let wlp = table.iter().filter(|e| e.k == 1).all(RankEntry::ok);
        let slp = (mode == LefschetzMode::Slp).then(|| table.iter().all(RankEntry::ok));
        let first_failure = table.iter().filter(|e| !e.ok()).map(|e| (e.k, e.i)).min().map(|(k, i)| (i, k));
        let success = match mode {
            LefschetzMode::Wlp => wlp,
            LefschetzMode::Slp => slp == Some(true),
        };
        LefschetzReport {
            characteristic: ell.field().characteristic(),
            ell,
            mode,
            h_vector,
            wlp,
            slp,
            rank_table: table,
            first_failure,
            trials: 1,
            certified: success,
            exhaustive: false,
        }
    }
}

fn check_linear(ell: &Polynomial, field: FieldSpec, nvars: usize) -> Result<()> {
    if ell.field() != field || ell.nvars() != nvars {
        return Err(LefschetzError::NotLinear);
    }
    if nvars > 0 && ell.homogeneous_degree() != Some(1) {
        return Err(LefschetzError::NotLinear);
    }
    if nvars == 0 && !ell.is_zero() {
        return Err(LefschetzError::NotLinear);
    }
    Ok(())
}

/// Monomial bases and the Hilbert function of `A_F`.
struct DualContext<'a> {
    f: &'a Polynomial,
    d: u32,
    h: Vec<usize>,
    bases: Vec<Vec<ExponentVector>>,
}

impl<'a> DualContext<'a> {
    fn new(f: &'a Polynomial) -> Result<Self> {
        let hd = hilbert_function(f)?;
        let bases = (0..=hd.socle_degree)
            .map(|t| standard_monomials(f, t))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(DualContext { f, d: hd.socle_degree, h: hd.h_vector, bases })
    }

    fn required(&self, i: u32, k: u32) -> usize {
        self.h[i as usize].min(self.h[(i + k) as usize])
    }
}

/// `ℓ^k ∘ F` for `k = 0..=d`, with residues modulo the fast prime on demand.
struct ContractionChain {
    field: FieldSpec,
    exact: Vec<Polynomial>,
    residues: Vec<OnceCell<Option<HashMap<ExponentVector, u32>>>>,
}

impl ContractionChain {
    fn new(f: &Polynomial, ell: &Polynomial, d: u32) -> Self {
        let mut exact = vec![f.clone()];
        for _ in 0..d {
            let next = ell.contract(exact.last().unwrap()).expect("same ring");
            exact.push(next);
        }
        let residues = (0..exact.len()).map(|_| OnceCell::new()).collect();
        ContractionChain { field: f.field(), exact, residues }
    }

    fn modulus(&self) -> u32 {
        match self.field {
            FieldSpec::Rationals => FAST_PRIME,
            FieldSpec::PrimeField(p) => p,
        }
    }

    fn residues(&self, k: u32) -> Option<&HashMap<ExponentVector, u32>> {
        let p = self.modulus();
        self.residues[k as usize]
            .get_or_init(|| {
                self.exact[k as usize]
                    .terms()
                    .map(|(e, c)| c.residue_mod(p).map(|r| (e.clone(), r)))
                    .collect()
            })
            .as_ref()
    }
}

/// Rank of the pairing matrix for `(i, k)`.
fn chain_rank(ctx: &DualContext, chain: &ContractionChain, i: u32, k: u32) -> usize {
    let rows = &ctx.bases[i as usize];
    let cols = &ctx.bases[(ctx.d - i - k) as usize];
    let full = rows.len().min(cols.len());
    if full == 0 {
        return 0;
    }
    if let Some(h) = chain.residues(k) {
        let mut m: Vec<Vec<u32>> = rows
            .iter()
            .map(|a| cols.iter().map(|b| h.get(&a.add(b)).copied().unwrap_or(0)).collect())
            .collect();
        let r = rank_mod_prime(&mut m, chain.modulus());
        if r == full || chain.field.is_finite() {
            return r;
        }
    }
    let poly = &chain.exact[k as usize];
    let field = chain.field;
    let entries = rows
        .iter()
        .flat_map(|a| cols.iter().map(move |b| poly.coefficient(&a.add(b)).cloned().unwrap_or_else(|| field.zero())))
        .collect();
    Matrix::new(field, rows.len(), cols.len(), entries).expect("entry count").rank()
}

/// Exact rank of `×ℓ^k : A_i → A_{i+k}` for `A = A_F`, via the pairing matrix.
pub fn pairing_rank(f: &Polynomial, ell: &Polynomial, i: u32, k: u32) -> Result<usize> {
    check_linear(ell, f.field(), f.nvars())?;
    let ctx = DualContext::new(f)?;
    if k == 0 || i + k > ctx.d {
        return Err(LefschetzError::DegreeOutOfRange { i, k, d: ctx.d });
    }
    let chain = ContractionChain::new(f, ell, k);
    Ok(chain_rank(&ctx, &chain, i, k))
}

fn evaluate_dual_ctx(ctx: &DualContext, ell: &Polynomial, mode: LefschetzMode, full_table: bool) -> LefschetzReport {
    let d = ctx.d;
    let chain = ContractionChain::new(ctx.f, ell, d);
    let mut computed: HashMap<(u32, u32), usize> = HashMap::new();
    let mut table = Vec::new();

    let compute = |i: u32, k: u32, computed: &mut HashMap<(u32, u32), usize>| -> usize {
        *computed.entry((i, k)).or_insert_with(|| chain_rank(ctx, &chain, i, k))
    };

    let ks: Vec<u32> = match mode {
        LefschetzMode::Wlp => (1..=d.min(1)).collect(),
        LefschetzMode::Slp => (1..=d).collect(),
    };

    let narrow_ok = mode == LefschetzMode::Slp
        && !full_table
        && (0..=d).filter(|i| 2 * i < d).all(|i| compute(i, d - 2 * i, &mut computed) == ctx.h[i as usize]);

    for &k in &ks {
        for i in 0..=(d - k) {
            let j = d - i - k;
            let required = ctx.required(i, k);
            let (achieved, source) = if narrow_ok {
                match computed.get(&(i, k)) {
                    Some(&r) => (r, RankSource::Computed),
                    None => (required, RankSource::Implied),
                }
            } else if i <= j {
                (compute(i, k, &mut computed), RankSource::Computed)
            } else {
                (compute(j, k, &mut computed), RankSource::Symmetry)
            };
            table.push(RankEntry { i, k, achieved, required, source });
        }
    }
    LefschetzReport::from_table(ell.clone(), mode, ctx.h.clone(), table)
}

/// Rank table of a fixed `ℓ` on `A_F`.
pub fn evaluate_dual(f: &Polynomial, ell: &Polynomial, mode: LefschetzMode, full_table: bool) -> Result<LefschetzReport> {
    check_linear(ell, f.field(), f.nvars())?;
    let ctx = DualContext::new(f)?;
    Ok(evaluate_dual_ctx(&ctx, ell, mode, full_table))
}

fn evaluate_quotient(qa: &QuotientAlgebra, ell: &Polynomial, mode: LefschetzMode) -> LefschetzReport {
    let h = qa.hilbert();
    let top = h.len().saturating_sub(1) as u32;
    let n = qa.nvars();
    let field = qa.field();
    let mut table = Vec::new();
    for i in 0..h.len() as u32 {
        let basis_i = qa.basis(i);
        let mut images: Vec<Polynomial> =
            basis_i.iter().map(|m| Polynomial::monomial(field, m.clone(), field.one())).collect();
        let kmax = match mode {
            LefschetzMode::Wlp => (top - i).min(1),
            LefschetzMode::Slp => top - i,
        };
        for k in 1..=kmax {
            let target = i + k;
            let target_basis = qa.basis(target);
            let mut span = Echelon::new(field);
            images = images
                .iter()
                .map(|p| {
                    let v = qa.normal_form(&p.multiply(ell).expect("same ring"), target);
                    span.insert(&v);
                    from_sparse(field, n, &v, &target_basis)
                })
                .collect();
            let required = h[i as usize].min(h[target as usize]);
            table.push(RankEntry { i, k, achieved: span.rank(), required, source: RankSource::Computed });
        }
    }
    LefschetzReport::from_table(ell.clone(), mode, h, table)
}

/// Rank table of a fixed `ℓ` on `R/I`.
pub fn evaluate_ideal(ideal: &GradedIdealPresentation, ell: &Polynomial, mode: LefschetzMode) -> Result<LefschetzReport> {
    check_linear(ell, ideal.field(), ideal.nvars())?;
    let qa = QuotientAlgebra::new(ideal)?;
    Ok(evaluate_quotient(&qa, ell, mode))
}

/// Input to the Lefschetz-element search.
#[derive(Debug, Clone, Copy)]
pub enum LefschetzInput<'a> {
    Dual(&'a Polynomial),
    Ideal(&'a GradedIdealPresentation),
}

impl LefschetzInput<'_> {
    fn field(&self) -> FieldSpec {
        match self {
            LefschetzInput::Dual(f) => f.field(),
            LefschetzInput::Ideal(i) => i.field(),
        }
    }

    fn nvars(&self) -> usize {
        match self {
            LefschetzInput::Dual(f) => f.nvars(),
            LefschetzInput::Ideal(i) => i.nvars(),
        }
    }
}

/// Linear forms to try, and whether they exhaust all forms up to scaling.
fn candidate_forms(field: FieldSpec, n: usize, strategy: &LefschetzSearchStrategy) -> (Vec<Vec<i64>>, bool) {
    let sum = vec![1i64; n];
    if n == 0 {
        return (vec![sum], true);
    }
    if let FieldSpec::PrimeField(p) = field {
        let p = p as u64;
        let count = (0..n as u32).try_fold(0u64, |acc, e| p.checked_pow(e).and_then(|x| acc.checked_add(x)));
        if let Some(count) = count.filter(|&c| c <= strategy.exhaustive_limit as u64) {
            let mut forms = vec![sum.clone()];
            forms.extend(normalized_forms(p as i64, n).filter(|f| *f != sum));
            debug_assert_eq!(forms.len() as u64, count);
            return (forms, true);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
        let mut forms = vec![sum];
        while forms.len() < strategy.trials.max(1) {
            let f: Vec<i64> = (0..n).map(|_| rng.gen_range(0..p as i64)).collect();
            if f.iter().any(|&c| c != 0) {
                forms.push(f);
            }
        }
        return (forms, false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut forms = vec![sum];
    while forms.len() < strategy.trials.max(1) {
        let bound = match forms.len() {
            1..=5 => 1,
            6..=10 => 3,
            _ => 99,
        };
        let lo = if bound == 1 { 0 } else { -bound };
        let f: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=bound)).collect();
        if f.iter().any(|&c| c != 0) {
            forms.push(f);
        }
    }
    (forms, false)
}

/// Every nonzero vector of `F_p^n` whose first nonzero entry is 1.
fn normalized_forms(p: i64, n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        let total = (p as u64).pow(tail as u32);
        (0..total).map(move |mut code| {
            let mut v = vec![0i64; n];
            v[lead] = 1;
            for slot in v[lead + 1..].iter_mut() {
                *slot = (code % p as u64) as i64;
                code /= p as u64;
            }
            v
        })
    })
}

/// Searches for a Lefschetz element: `x_1 + … + x_n` first, then random
/// forms from widening coefficient ranges (or every form up to scaling over
/// a small finite field). Returns the first success, otherwise the report
/// with the largest total rank.
pub fn find_lefschetz_element(input: LefschetzInput, strategy: &LefschetzSearchStrategy) -> Result<LefschetzReport> {
    let field = input.field();
    let n = input.nvars();
    let (forms, exhaustive) = candidate_forms(field, n, strategy);

    enum Prepared<'a> {
        Dual(DualContext<'a>),
        Ideal(QuotientAlgebra),
    }
    let prepared = match input {
        LefschetzInput::Dual(f) => Prepared::Dual(DualContext::new(f)?),
        LefschetzInput::Ideal(i) => Prepared::Ideal(QuotientAlgebra::new(i)?),
    };

    let mut best: Option<LefschetzReport> = None;
    for (t, coeffs) in forms.iter().enumerate() {
        let ell = Polynomial::linear_form(field, coeffs);
        let report = match &prepared {
            Prepared::Dual(ctx) => evaluate_dual_ctx(ctx, &ell, strategy.mode, strategy.full_table),
            Prepared::Ideal(qa) => evaluate_quotient(qa, &ell, strategy.mode),
        };
        let done = report.success();
        if best.as_ref().is_none_or(|b| report.score() > b.score() || done) {
            best = Some(report);
        }
        if done {
            let mut r = best.unwrap();
            r.trials = t + 1;
            r.certified = true;
            r.exhaustive = exhaustive;
            return Ok(r);
        }
    }
    let mut r = best.expect("at least one candidate form");
    r.trials = forms.len();
    r.certified = exhaustive;
    r.exhaustive = exhaustive;
    Ok(r)
}

/// Strong Lefschetz search on `A_F`.
pub fn check_slp(f: &Polynomial, strategy: &LefschetzSearchStrategy) -> Result<LefschetzReport> {
    let strategy = LefschetzSearchStrategy { mode: LefschetzMode::Slp, ..strategy.clone() };
    find_lefschetz_element(LefschetzInput::Dual(f), &strategy)
}

/// Weak Lefschetz search on `R/I`.
pub fn check_wlp_from_ideal(ideal: &GradedIdealPresentation, strategy: &LefschetzSearchStrategy) -> Result<LefschetzReport> {
    let strategy = LefschetzSearchStrategy { mode: LefschetzMode::Wlp, ..strategy.clone() };
    find_lefschetz_element(LefschetzInput::Ideal(ideal), &strategy)
}

/// Literal pairing matrix over all monomials of degrees `i` and `d-i-k`,
/// built by multiplication and contraction. Kept as a slow reference.
pub fn pairing_matrix(f: &Polynomial, ell: &Polynomial, i: u32, k: u32) -> Result<Matrix> {
    check_linear(ell, f.field(), f.nvars())?;
    let d = f.homogeneous_degree().ok_or(InverseSystemError::NotHomogeneous)?;
    if k == 0 || i + k > d {
        return Err(LefschetzError::DegreeOutOfRange { i, k, d });
    }
    let n = f.nvars();
    let field = f.field();
    let lk = ell.pow(k);
    let rows = crate::poly::monomials_of_degree(n, i).monomials;
    let cols = crate::poly::monomials_of_degree(n, d - i - k).monomials;
    let mut entries: Vec<Scalar> = Vec::with_capacity(rows.len() * cols.len());
    for a in &rows {
        let left = lk.shift(a);
        for b in &cols {
            let value = left.shift(b).contract(f)?;
            entries.push(value.coefficient(&ExponentVector::zero(n)).cloned().unwrap_or_else(|| field.zero()));
        }
    }
    Ok(Matrix::new(field, rows.len(), cols.len(), entries).expect("entry count"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::minimal_generators;
    use crate::parse::{parse_polynomial, parse_polynomials, split_ideal};

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    fn parse(src: &str, field: FieldSpec) -> Polynomial {
        parse_polynomial(src, field, None).unwrap().poly
    }

    fn ideal(src: &str, field: FieldSpec) -> GradedIdealPresentation {
        let (gens, names) = parse_polynomials(&split_ideal(src), field, None).unwrap();
        GradedIdealPresentation::new(field, names.len(), gens).unwrap()
    }

    #[test]
    fn pairing_ranks_of_a_squarefree_cubic() {
        let f = parse("X1X2X3", Q);
        let ell = Polynomial::linear_form(Q, &[1, 1, 1]);
        assert_eq!(pairing_rank(&f, &ell, 1, 1).unwrap(), 3);
        assert_eq!(pairing_rank(&f, &ell, 0, 3).unwrap(), 1);
        assert_eq!(pairing_matrix(&f, &ell, 1, 1).unwrap().rank(), 3);
        let f2 = parse("X1X2X3", F2);
        let ell2 = Polynomial::linear_form(F2, &[1, 1, 1]);
        assert_eq!(pairing_rank(&f2, &ell2, 1, 1).unwrap(), 2);
        assert!(matches!(pairing_rank(&f, &ell, 2, 2), Err(LefschetzError::DegreeOutOfRange { .. })));
        assert!(matches!(pairing_rank(&f, &ell, 1, 0), Err(LefschetzError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn wlp_fails_in_characteristic_two() {
        let f = parse("X1X2X3", F2);
        let r = evaluate_dual(&f, &Polynomial::linear_form(F2, &[1, 1, 1]), LefschetzMode::Slp, false).unwrap();
        assert!(!r.wlp);
        assert_eq!(r.first_failure, Some((1, 1)));

        let i = ideal("x^2;y^2;z^2", F2);
        let r = check_wlp_from_ideal(&i, &LefschetzSearchStrategy::default()).unwrap();
        assert!(!r.wlp);
        assert!(r.certified && r.exhaustive);
        assert_eq!(r.trials, 7);
        let e = r.entry(1, 1).unwrap();
        assert_eq!((e.achieved, e.required), (2, 3));
        assert_eq!(r.slp, None);
    }

    #[test]
    fn ideal_path_over_q() {
        let r = check_wlp_from_ideal(&ideal("x^2;y^2;z^2", Q), &LefschetzSearchStrategy::default()).unwrap();
        assert!(r.wlp && r.certified);
        assert_eq!(r.h_vector, vec![1, 3, 3, 1]);
        let i = ideal("x^2;x*y;y^3", Q);
        let y = Polynomial::linear_form(Q, &[0, 1]);
        let r = evaluate_ideal(&i, &y, LefschetzMode::Wlp).unwrap();
        assert!(r.wlp);
        let bad = ideal("x^2;x*y", Q);
        assert!(matches!(
            evaluate_ideal(&bad, &Polynomial::linear_form(Q, &[1, 1]), LefschetzMode::Wlp),
            Err(LefschetzError::Inverse(InverseSystemError::NotArtinian(_)))
        ));
    }

    #[test]
    fn monomials_and_codim_two() {
        let f = parse("X1^4", Q);
        let r = evaluate_dual(&f, &Polynomial::linear_form(Q, &[1]), LefschetzMode::Slp, true).unwrap();
        assert_eq!(r.slp, Some(true));
        let r = check_slp(&parse("X1^2X2^2", Q), &LefschetzSearchStrategy::default()).unwrap();
        assert_eq!((r.slp, r.trials), (Some(true), 1));
        assert_eq!(r.ell, Polynomial::linear_form(Q, &[1, 1]));
    }

    #[test]
    fn narrow_and_full_tables_agree() {
        for src in ["X1^2X2 - X1X2^2", "X^2YZ - XZ^3", "X1X2X3", "X^3Y^2 + XY^4 - 2Y^5"] {
            let f = parse(src, Q);
            let ell = Polynomial::linear_form(Q, &vec![1; f.nvars()]);
            let narrow = evaluate_dual(&f, &ell, LefschetzMode::Slp, false).unwrap();
            let full = evaluate_dual(&f, &ell, LefschetzMode::Slp, true).unwrap();
            assert_eq!(narrow.slp, full.slp);
            let a: Vec<_> = narrow.rank_table.iter().map(|e| (e.i, e.k, e.achieved)).collect();
            let b: Vec<_> = full.rank_table.iter().map(|e| (e.i, e.k, e.achieved)).collect();
            assert_eq!(a, b, "{src}");
        }
    }

    #[test]
    fn dual_and_ideal_paths_agree() {
        for src in ["X1^2X2 - X1X2^2", "X^2YZ - XZ^3", "X^2Y^2(X^2 - Y^2)", "X1X2X3 + X1^3"] {
            let f = parse(src, Q);
            let d = f.homogeneous_degree().unwrap();
            let ann = minimal_generators(&f, d + 1).unwrap();
            for coeffs in [vec![1i64; f.nvars()], (1..=f.nvars() as i64).collect()] {
                let ell = Polynomial::linear_form(Q, &coeffs);
                let dual = evaluate_dual(&f, &ell, LefschetzMode::Slp, true).unwrap();
                let quot = evaluate_ideal(&ann, &ell, LefschetzMode::Slp).unwrap();
                assert_eq!(dual.h_vector, quot.h_vector);
                let a: Vec<_> = dual.rank_table.iter().map(|e| (e.i, e.k, e.achieved)).collect();
                let b: Vec<_> = quot.rank_table.iter().map(|e| (e.i, e.k, e.achieved)).collect();
                assert_eq!(a, b, "{src}");
            }
        }
    }

    #[test]
    fn fast_rank_matches_literal_matrix() {
        let f = parse("X^3Y - 2XY^2Z + 5Z^4", Q);
        let d = 4;
        for coeffs in [[1, 1, 1], [1, 0, 0], [2, -1, 3]] {
            let ell = Polynomial::linear_form(Q, &coeffs);
            for k in 1..=d {
                for i in 0..=(d - k) {
                    assert_eq!(
                        pairing_rank(&f, &ell, i, k).unwrap(),
                        pairing_matrix(&f, &ell, i, k).unwrap().rank(),
                        "i={i} k={k} ell={coeffs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn random_forms_are_deterministic() {
        let s = LefschetzSearchStrategy::default();
        let (a, ex) = candidate_forms(Q, 3, &s);
        let (b, _) = candidate_forms(Q, 3, &s);
        assert_eq!(a, b);
        assert!(!ex);
        assert_eq!(a.len(), 16);
        assert!(a[1..6].iter().flatten().all(|c| (0..=1).contains(c)));
        let (forms, ex) = candidate_forms(FieldSpec::PrimeField(3), 2, &s);
        assert!(ex);
        assert_eq!(forms.len(), 4);
    }

    #[test]
    fn rejects_bad_linear_forms() {
        let f = parse("X1X2", Q);
        assert_eq!(pairing_rank(&f, &parse("x1^2", Q).relabel(2, &[0]), 0, 1), Err(LefschetzError::NotLinear));
        assert_eq!(pairing_rank(&f, &Polynomial::zero(Q, 2), 0, 1), Err(LefschetzError::NotLinear));
    }
}
