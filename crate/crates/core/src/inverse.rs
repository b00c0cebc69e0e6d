//! Brute-force inverse-system oracle.
//!
//! Everything here is computed from the definition `Ann(F) = {f : f ∘ F = 0}`
//! one degree at a time, with no appeal to the closed-form classification in
//! [`crate::binomial`]; that module is checked against this one.
//!
//! The key structural fact used for speed: a monomial `x^a` that divides no
//! term of `F` contracts `F` to zero, so in each degree
//! `Ann(F)_t = N_t ⊕ K_t`, where `N_t` is spanned by those monomials and
//! `K_t` is the kernel of the contraction matrix restricted to the
//! (few) monomials dividing some term. All dimension counts and minimal
//! generators are derived from this splitting.

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{forms_count, monomials_of_degree, ExponentVector, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InverseSystemError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("dual generator is zero")]
    ZeroPolynomial,
    #[error("degree bound {t_max} is below deg F + 1 = {needed}")]
    DegreeBoundTooSmall { t_max: u32, needed: u32 },
    #[error("quotient is not Artinian: ideal misses forms of degree {0}")]
    NotArtinian(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

type Result<T> = std::result::Result<T, InverseSystemError>;

/// Graded dimensions `(h_0, ..., h_d)` of an Artinian algebra.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HilbertData {
    pub socle_degree: u32,
    pub h_vector: Vec<usize>,
}

impl HilbertData {
    pub fn is_palindromic(&self) -> bool {
        self.h_vector.iter().eq(self.h_vector.iter().rev())
    }

    pub fn total_dimension(&self) -> usize {
        self.h_vector.iter().sum()
    }

    pub fn get(&self, t: u32) -> usize {
        self.h_vector.get(t as usize).copied().unwrap_or(0)
    }
}

/// Homogeneous generators of an ideal together with the graded dimensions
/// `dim I_t` that are already known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdealPresentation {
    field: FieldSpec,
    nvars: usize,
    generators: Vec<Polynomial>,
    degreewise_dims: BTreeMap<u32, usize>,
}

impl GradedIdealPresentation {
    /// Validates that every generator is a nonzero form in the same ring.
    pub fn new(field: FieldSpec, nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.field() != field {
                return Err(PolyError::FieldMismatch(field, g.field()).into());
            }
            if g.nvars() != nvars {
                return Err(PolyError::LengthMismatch(nvars, g.nvars()).into());
            }
            if g.homogeneous_degree().is_none() {
                return Err(if g.is_zero() {
                    InverseSystemError::ZeroPolynomial
                } else {
                    InverseSystemError::NotHomogeneous
                });
            }
        }
        Ok(GradedIdealPresentation { field, nvars, generators, degreewise_dims: BTreeMap::new() })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Number of generators; equals μ(I) for presentations produced by
    /// [`minimal_generators`].
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Sorted generator degrees.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().filter_map(Polynomial::homogeneous_degree).collect();
        d.sort_unstable();
        d
    }

    pub fn known_dims(&self) -> &BTreeMap<u32, usize> {
        &self.degreewise_dims
    }

    /// `dim I_t`, from the cache when available.
    pub fn dim_in_degree(&self, t: u32) -> usize {
        if let Some(&d) = self.degreewise_dims.get(&t) {
            return d;
        }
        ideal_span_in_degree(self, t).rank()
    }
}

/// Echelon form of `I_t` in the canonical monomial basis of `R_t`.
fn ideal_span_in_degree(ideal: &GradedIdealPresentation, t: u32) -> Echelon {
    let basis = monomials_of_degree(ideal.nvars, t);
    let index = basis.index();
    let mut e = Echelon::new(ideal.field);
    for g in &ideal.generators {
        let dg = g.homogeneous_degree().unwrap();
        if dg > t {
            continue;
        }
        for shift in monomials_of_degree(ideal.nvars, t - dg).monomials {
            e.insert(&to_sparse(&g.shift(&shift), &index));
        }
    }
    e
}

/// Coordinates of `p` in the monomial basis described by `index`; monomials
/// missing from the index are dropped.
pub(crate) fn to_sparse(p: &Polynomial, index: &HashMap<ExponentVector, usize>) -> SparseVec {
    let mut v: SparseVec = p
        .terms()
        .filter_map(|(e, c)| index.get(e).map(|&i| (i, c.clone())))
        .collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

pub(crate) fn from_sparse(
    field: FieldSpec,
    nvars: usize,
    v: &[(usize, Scalar)],
    basis: &[ExponentVector],
) -> Polynomial {
    Polynomial::from_terms(field, nvars, v.iter().map(|(i, c)| (basis[*i].clone(), c.clone())))
}

fn form_degree(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(InverseSystemError::ZeroPolynomial);
    }
    f.homogeneous_degree().ok_or(InverseSystemError::NotHomogeneous)
}

/// Monomials of degree `t` dividing at least one term of `f`, in canonical
/// (decreasing lex) order.
pub fn relevant_monomials(f: &Polynomial, t: u32) -> Vec<ExponentVector> {
    fn walk(gamma: &[u32], pos: usize, rest: u32, suffix: &[u32], cur: &mut Vec<u32>, out: &mut HashSet<ExponentVector>) {
        if pos == gamma.len() {
            if rest == 0 {
                out.insert(ExponentVector::new(cur.clone()));
            }
            return;
        }
        // the remaining positions can absorb at most suffix[pos + 1]
        let lo = rest.saturating_sub(suffix[pos + 1]);
        let hi = rest.min(gamma[pos]);
        for e in lo..=hi {
            cur.push(e);
            walk(gamma, pos + 1, rest - e, suffix, cur, out);
            cur.pop();
        }
    }
    let mut out = HashSet::new();
    for (gamma, _) in f.terms() {
        if gamma.degree() < t {
            continue;
        }
        let g = gamma.as_slice();
        let mut suffix = vec![0u32; g.len() + 1];
        for i in (0..g.len()).rev() {
            suffix[i] = suffix[i + 1] + g[i];
        }
        walk(g, 0, t, &suffix, &mut Vec::with_capacity(g.len()), &mut out);
    }
    let mut v: Vec<ExponentVector> = out.into_iter().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// The contraction matrix of `F` in degree `t`, restricted to the relevant
/// monomials: one column per monomial `x^a` dividing a term of `F`, one row
/// per monomial `X^b` of `S_{d-t}`, entry = coefficient of `X^b` in `x^a ∘ F`.
struct ContractionBlock {
    relevant: Vec<ExponentVector>,
    echelon: Echelon,
}

impl ContractionBlock {
    fn build(f: &Polynomial, t: u32) -> Self {
        let relevant = relevant_monomials(f, t);
        let mut rows: HashMap<ExponentVector, SparseVec> = HashMap::new();
        for (j, alpha) in relevant.iter().enumerate() {
            for (gamma, c) in f.terms() {
                if let Some(beta) = alpha.checked_sub_from(gamma) {
                    rows.entry(beta).or_default().push((j, c.clone()));
                }
            }
        }
        // deterministic insertion order keeps the echelon reproducible
        let mut keyed: Vec<(ExponentVector, SparseVec)> = rows.into_iter().collect();
        keyed.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut echelon = Echelon::new(f.field());
        for (_, row) in keyed {
            echelon.insert(&row);
        }
        ContractionBlock { relevant, echelon }
    }

    fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Kernel vectors as polynomials of `R_t`.
    fn kernel(&self, f: &Polynomial) -> Vec<Polynomial> {
        self.echelon
            .kernel(self.relevant.len())
            .iter()
            .map(|v| from_sparse(f.field(), f.nvars(), v, &self.relevant))
            .collect()
    }
}

/// One graded piece of `Ann(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnnihilatorPiece {
    /// `t > deg F`: every form of degree `t` annihilates `F`.
    Full,
    /// Canonical basis of `Ann(F)_t`.
    Basis(Vec<Polynomial>),
}

/// Canonical basis of `{f ∈ R_t : f ∘ F = 0}`: the reduced-echelon kernel of
/// the degree-`t` contraction matrix, listed by free column in canonical
/// monomial order.
pub fn annihilator_in_degree(f: &Polynomial, t: u32) -> Result<AnnihilatorPiece> {
    let d = form_degree(f)?;
    if t > d {
        return Ok(AnnihilatorPiece::Full);
    }
    let block = ContractionBlock::build(f, t);
    let pivots: HashSet<usize> = block.echelon.pivot_columns().collect();
    let kernel = block.kernel(f);
    // kernel vectors come one per free relevant column, in column order
    let mut free_kernel = block
        .relevant
        .iter()
        .enumerate()
        .filter(|(j, _)| !pivots.contains(j))
        .map(|(_, m)| m.clone())
        .zip(kernel)
        .collect::<HashMap<_, _>>();
    let relevant: HashSet<&ExponentVector> = block.relevant.iter().collect();
    let mut basis = Vec::new();
    for m in monomials_of_degree(f.nvars(), t).monomials {
        if !relevant.contains(&m) {
            basis.push(Polynomial::monomial(f.field(), m, f.field().one()));
        } else if let Some(k) = free_kernel.remove(&m) {
            basis.push(k);
        }
    }
    Ok(AnnihilatorPiece::Basis(basis))
}

/// `h_t = rank` of the degree-`t` contraction matrix for `0 <= t <= deg F`.
pub fn hilbert_function(f: &Polynomial) -> Result<HilbertData> {
    let d = form_degree(f)?;
    let h_vector = (0..=d).map(|t| ContractionBlock::build(f, t).rank()).collect();
    Ok(HilbertData { socle_degree: d, h_vector })
}

/// Monomials `x^a` of degree `t` whose classes form a basis of `A_t`
/// (equivalently, with `x^a ∘ F` linearly independent), canonical order.
pub fn standard_monomials(f: &Polynomial, t: u32) -> Result<Vec<ExponentVector>> {
    let d = form_degree(f)?;
    if t > d {
        return Ok(Vec::new());
    }
    let block = ContractionBlock::build(f, t);
    let mut cols: Vec<usize> = block.echelon.pivot_columns().collect();
    cols.sort_unstable();
    Ok(cols.into_iter().map(|c| block.relevant[c].clone()).collect())
}

/// Linearly independent basis of `(R ∘ F)_j = span{x^a ∘ F : |a| = deg F - j}`,
/// a subspace of `S_j` of dimension `h_{d-j} = h_j`.
pub fn inverse_system_basis(f: &Polynomial, j: u32) -> Result<Vec<Polynomial>> {
    let d = form_degree(f)?;
    if j > d {
        return Ok(Vec::new());
    }
    let t = d - j;
    let basis = relevant_monomials(f, j);
    let index: HashMap<ExponentVector, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut e = Echelon::new(f.field());
    for alpha in relevant_monomials(f, t) {
        let x = Polynomial::monomial(f.field(), alpha, f.field().one());
        e.insert(&to_sparse(&x.contract(f)?, &index));
    }
    Ok(e.rows().iter().map(|r| from_sparse(f.field(), f.nvars(), r, &basis)).collect())
}

/// Minimal homogeneous generators of `Ann(F)` in degrees `0..=t_max`.
///
/// In degree `t` the new generators span a complement of `R_1 · I_{t-1}`
/// inside `I_t`. Working modulo the monomial part, the only coordinates that
/// matter are the relevant monomials of degree `t` together with the
/// monomials all of whose degree-`(t-1)` divisors are relevant (the minimal
/// monomial generators of the monomial part); everything else already lies
/// in `R_1 · I_{t-1}`.
pub fn minimal_generators(f: &Polynomial, t_max: u32) -> Result<GradedIdealPresentation> {
    let d = form_degree(f)?;
    if t_max < d + 1 {
        return Err(InverseSystemError::DegreeBoundTooSmall { t_max, needed: d + 1 });
    }
    let n = f.nvars();
    let field = f.field();
    let mut generators = Vec::new();
    let mut dims = BTreeMap::new();
    let mut prev_relevant: HashSet<ExponentVector> = HashSet::new();
    let mut prev_kernel: Vec<Polynomial> = Vec::new();

    for t in 0..=t_max {
        let (relevant, kernel, rank) = if t <= d {
            let block = ContractionBlock::build(f, t);
            let kernel = block.kernel(f);
            let rank = block.rank();
            (block.relevant, kernel, rank)
        } else {
            (Vec::new(), Vec::new(), 0)
        };
        let relevant_set: HashSet<ExponentVector> = relevant.iter().cloned().collect();

        let mut minimal_monomials: Vec<ExponentVector> = if t == 0 {
            Vec::new()
        } else {
            let mut cands: HashSet<ExponentVector> = HashSet::new();
            for alpha in &prev_relevant {
                for i in 0..n {
                    let m = alpha.bump(i);
                    if !relevant_set.contains(&m) {
                        cands.insert(m);
                    }
                }
            }
            cands
                .into_iter()
                .filter(|m| (0..n).all(|i| m.lower(i).is_none_or(|l| prev_relevant.contains(&l))))
                .collect()
        };
        minimal_monomials.sort_unstable_by(|a, b| b.cmp(a));

        let mut coords: Vec<ExponentVector> = relevant.iter().chain(&minimal_monomials).cloned().collect();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        let index: HashMap<ExponentVector, usize> =
            coords.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        let mut span = Echelon::new(field);
        for k in &prev_kernel {
            for i in 0..n {
                span.insert(&to_sparse(&k.shift(&ExponentVector::unit(n, i)), &index));
            }
        }
        for m in &minimal_monomials {
            let mono = Polynomial::monomial(field, m.clone(), field.one());
            if span.insert(&to_sparse(&mono, &index)) {
                generators.push(mono);
            }
        }
        for k in &kernel {
            if span.insert(&to_sparse(k, &index)) {
                generators.push(k.clone());
            }
        }

        let full = forms_count(n, t);
        dims.insert(t, full - rank);
        prev_relevant = relevant_set;
        prev_kernel = kernel;
    }

    let mut presentation = GradedIdealPresentation::new(field, n, generators)?;
    presentation.degreewise_dims = dims;
    Ok(presentation)
}

/// Outcome of the brute-force complete-intersection test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub is_ci: bool,
    /// μ(Ann(F)) after dropping variables absent from `F`.
    pub mu: usize,
    /// Number of variables actually occurring in `F`.
    pub effective_nvars: usize,
    /// Original indices of the variables kept, in order.
    pub kept_vars: Vec<usize>,
    /// Original indices of variables absent from `F`.
    pub dropped_vars: Vec<usize>,
    /// Minimal generators in the kept variables.
    pub presentation: GradedIdealPresentation,
    pub hilbert: HilbertData,
}

/// `R/Ann(F)` is a complete intersection iff `μ(Ann(F)) = n`, with `n` the
/// number of variables occurring in `F`.
pub fn is_complete_intersection_oracle(f: &Polynomial) -> Result<OracleVerdict> {
    let d = form_degree(f)?;
    let kept_vars = f.support();
    let dropped_vars: Vec<usize> = (0..f.nvars()).filter(|i| !kept_vars.contains(i)).collect();
    let restricted = f.restrict(&kept_vars);
    let presentation = minimal_generators(&restricted, d + 1)?;
    let hilbert = hilbert_from_dims(&presentation, restricted.nvars(), d);
    let mu = presentation.mu();
    Ok(OracleVerdict {
        is_ci: mu == kept_vars.len(),
        mu,
        effective_nvars: kept_vars.len(),
        kept_vars,
        dropped_vars,
        presentation,
        hilbert,
    })
}

impl OracleVerdict {
    /// Minimal generators of `Ann(F)` in the original `nvars` variables:
    /// the kept-variable generators plus `x_i` for every absent variable.
    pub fn full_ring_presentation(&self, nvars: usize) -> GradedIdealPresentation {
        let field = self.presentation.field();
        let mut generators: Vec<Polynomial> = self
            .dropped_vars
            .iter()
            .map(|&i| Polynomial::variable(field, nvars, i))
            .collect();
        generators.extend(self.presentation.generators().iter().map(|g| g.relabel(nvars, &self.kept_vars)));
        let dims = (0..self.presentation.known_dims().len() as u32)
            .map(|t| (t, forms_count(nvars, t) - self.hilbert.get(t)))
            .collect();
        GradedIdealPresentation { field, nvars, generators, degreewise_dims: dims }
    }
}

fn hilbert_from_dims(p: &GradedIdealPresentation, n: usize, d: u32) -> HilbertData {
    let h_vector = (0..=d)
        .map(|t| forms_count(n, t) - p.degreewise_dims[&t])
        .collect();
    HilbertData { socle_degree: d, h_vector }
}

/// Whether the ideal generated by `j` equals `Ann(F)`.
///
/// Containment is checked generator by generator. Given `J ⊆ Ann(F)`,
/// equality holds iff `dim J_t = dim Ann(F)_t` in every degree up to the top
/// degree of a minimal generator of `Ann(F)` (at most `deg F + 1`): past that
/// degree `Ann(F)` is generated by lower pieces already contained in `J`.
pub fn ideal_equals_annihilator(j: &GradedIdealPresentation, f: &Polynomial) -> Result<bool> {
    let d = form_degree(f)?;
    let ann = minimal_generators(f, d + 1)?;
    ideal_equals_annihilator_with(j, f, &ann)
}

/// As [`ideal_equals_annihilator`], reusing precomputed minimal generators of
/// `Ann(F)` (in the same variables as `F`).
pub fn ideal_equals_annihilator_with(
    j: &GradedIdealPresentation,
    f: &Polynomial,
    ann: &GradedIdealPresentation,
) -> Result<bool> {
    form_degree(f)?;
    if j.nvars() != f.nvars() {
        return Err(PolyError::LengthMismatch(j.nvars(), f.nvars()).into());
    }
    for g in j.generators() {
        if !g.contract(f)?.is_zero() {
            return Ok(false);
        }
    }
    let top = ann.generator_degrees().last().copied().unwrap_or(0);
    for t in 0..=top {
        if j.dim_in_degree(t) != ann.dim_in_degree(t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truncated graded algebra `R/I` with a monomial basis in every degree.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    field: FieldSpec,
    nvars: usize,
    pieces: Vec<QuotientPiece>,
}

#[derive(Debug, Clone)]
struct QuotientPiece {
    monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
    ideal: Echelon,
    /// positions (into `monomials`) of the standard monomials
    standard: Vec<usize>,
    standard_pos: HashMap<usize, usize>,
}

impl QuotientAlgebra {
    /// Builds `A_t = R_t / I_t` until `I_t = R_t`. Fails with `NotArtinian`
    /// when that does not happen by degree `n (D - 1) + 1`, `D` the largest
    /// generator degree (the socle degree of a complete intersection of `n`
    /// forms of degree `D`, which an Artinian ideal contains after extending
    /// the field).
    pub fn new(ideal: &GradedIdealPresentation) -> Result<Self> {
        let n = ideal.nvars();
        let field = ideal.field();
        let max_deg = ideal.generator_degrees().last().copied();
        let bound = match max_deg {
            None if n > 0 => return Err(InverseSystemError::NotArtinian(0)),
            None => 0,
            Some(dmax) => n as u32 * dmax.saturating_sub(1) + 1,
        };
        let mut pieces: Vec<QuotientPiece> = Vec::new();
        let mut t = 0u32;
        loop {
            let monomials = monomials_of_degree(n, t).monomials;
            let index: HashMap<ExponentVector, usize> =
                monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut e = Echelon::new(field);
            if let Some(prev) = pieces.last() {
                for row in prev.ideal.rows() {
                    let p = from_sparse(field, n, row, &prev.monomials);
                    for i in 0..n {
                        e.insert(&to_sparse(&p.shift(&ExponentVector::unit(n, i)), &index));
                    }
                }
            }
            for g in ideal.generators() {
                if g.homogeneous_degree() == Some(t) {
                    e.insert(&to_sparse(g, &index));
                }
            }
            if e.rank() == monomials.len() {
                break;
            }
            if t >= bound {
                return Err(InverseSystemError::NotArtinian(t));
            }
            let standard: Vec<usize> = (0..monomials.len()).filter(|c| !e.is_pivot(*c)).collect();
            let standard_pos = standard.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            pieces.push(QuotientPiece { monomials, index, ideal: e, standard, standard_pos });
            t += 1;
        }
        Ok(QuotientAlgebra { field, nvars: n, pieces })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Largest degree with `A_t != 0`, or `None` for the zero algebra.
    pub fn top_degree(&self) -> Option<u32> {
        self.pieces.len().checked_sub(1).map(|t| t as u32)
    }

    pub fn dim(&self, t: u32) -> usize {
        self.pieces.get(t as usize).map_or(0, |p| p.standard.len())
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.standard.len()).collect()
    }

    /// Standard monomials spanning `A_t`.
    pub fn basis(&self, t: u32) -> Vec<ExponentVector> {
        self.pieces
            .get(t as usize)
            .map(|p| p.standard.iter().map(|&c| p.monomials[c].clone()).collect())
            .unwrap_or_default()
    }

    /// Coordinates of the class of a form of degree `t` in the standard basis.
    pub fn normal_form(&self, p: &Polynomial, t: u32) -> SparseVec {
        let Some(piece) = self.pieces.get(t as usize) else {
            return Vec::new();
        };
        let reduced = piece.ideal.reduce(&to_sparse(p, &piece.index));
        let mut v: SparseVec = reduced
            .into_iter()
            .map(|(c, s)| (piece.standard_pos[&c], s))
            .collect();
        v.sort_by_key(|(c, _)| *c);
        v
    }

    /// `dim (0 : m)`, summed over all degrees.
    pub fn socle_dimension(&self) -> usize {
        let n = self.nvars;
        let mut total = 0;
        for t in 0..self.pieces.len() as u32 {
            let next_dim = self.dim(t + 1);
            let mut images = Echelon::new(self.field);
            for m in self.basis(t) {
                let mut image: SparseVec = Vec::new();
                for i in 0..n {
                    let prod = Polynomial::monomial(self.field, m.bump(i), self.field.one());
                    image.extend(self.normal_form(&prod, t + 1).into_iter().map(|(c, s)| (i * next_dim + c, s)));
                }
                images.insert(&image);
            }
            total += self.dim(t) - images.rank();
        }
        total
    }
}

/// `dim Soc(R/Ann(F))`; always 1, computed rather than assumed.
pub fn socle_dimension(f: &Polynomial) -> Result<usize> {
    let d = form_degree(f)?;
    let ann = minimal_generators(f, d + 1)?;
    Ok(QuotientAlgebra::new(&ann)?.socle_dimension())
}

/// `dim Soc(R/I)` for an arbitrary Artinian presentation.
pub fn socle_dimension_of_ideal(ideal: &GradedIdealPresentation) -> Result<usize> {
    Ok(QuotientAlgebra::new(ideal)?.socle_dimension())
}
