//! Transition polynomials between the double Schur, double monomial and
//! power-sum families, supersymmetric expansions and hook-product sums.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::apoly::APoly;
use crate::basis::{
    dual_lr_via_supertableaux, expand_in_double_schur, lr_polynomial, BasisError, DoubleSym, ExpandMethod, Interpolator,
};
use crate::classical::mn_character;
use crate::double_schur::{double_ehp_product, EhpKind};
use crate::flagged::{lower_boxes, phi, psi, same_diagonal, upper_boxes};
use crate::partition::{size_revlex, Partition, SkewShape};
use crate::rational::Rational;
use crate::series::{classical_expansion, dual_ehp, DualKind, SchurSeries, SeriesBasis, SeriesError};
use crate::spec::ASpec;
use crate::xpoly::XPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransitionError {
    Basis(BasisError),
    Series(SeriesError),
    /// The hook identities need `|λ| = |μ|`.
    SizeMismatch { lambda: usize, mu: usize },
}

impl From<BasisError> for TransitionError {
    fn from(e: BasisError) -> Self {
        TransitionError::Basis(e)
    }
}

impl From<SeriesError> for TransitionError {
    fn from(e: SeriesError) -> Self {
        TransitionError::Series(e)
    }
}

impl From<crate::apoly::AlgebraError> for TransitionError {
    fn from(e: crate::apoly::AlgebraError) -> Self {
        TransitionError::Basis(BasisError::Algebra(e))
    }
}

impl fmt::Display for TransitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionError::Basis(e) => write!(f, "{e}"),
            TransitionError::Series(e) => write!(f, "{e}"),
            TransitionError::SizeMismatch { lambda, mu } => {
                write!(f, "partitions must have equal size, got {lambda} and {mu}")
            }
        }
    }
}

fn sign(k: usize) -> APoly {
    APoly::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn skew(outer: &Partition, inner: &Partition) -> SkewShape {
    SkewShape::new(outer.clone(), inner.clone()).expect("containment checked by caller")
}

/// How [`kostka_dual`] computes `K̂_{λμ}(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaDualMethod {
    /// Expands `h_μ(x‖a)` in `ℓ(λ)` variables.
    Expansion,
    /// Sums products of LR polynomials `c^{ρ_{i-1}}_{(μ_i) ρ_i}(a)` along chains.
    LrChain,
}

/// `K̂_{λμ}(a)`: the coefficient of `s_λ(x‖a)` in `h_μ(x‖a)`.
pub fn kostka_dual(lambda: &Partition, mu: &Partition, method: KostkaDualMethod) -> Result<APoly, TransitionError> {
    if lambda.size() > mu.size() {
        return Ok(APoly::zero());
    }
    match method {
        KostkaDualMethod::Expansion => {
            let n = lambda.len().max(1);
            let h = double_ehp_product(EhpKind::H, mu, n);
            Ok(expand_in_double_schur(&h, ExpandMethod::Elimination)?.coefficient(lambda))
        }
        KostkaDualMethod::LrChain => {
            let mut memo = BTreeMap::new();
            Ok(lr_chain(lambda, mu.parts(), &mut memo))
        }
    }
}

fn lr_chain(lambda: &Partition, rows: &[usize], memo: &mut BTreeMap<(Partition, usize), APoly>) -> APoly {
    let Some((&first, rest)) = rows.split_first() else {
        return if lambda.is_empty() { APoly::one() } else { APoly::zero() };
    };
    let key = (lambda.clone(), rows.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let rest_size: usize = rest.iter().sum();
    let row = Partition::row(first);
    let mut total = APoly::zero();
    for rho in lambda.subpartitions().into_iter().filter(|r| r.size() <= rest_size) {
        let c = lr_polynomial(&row, &rho, lambda);
        if c.is_zero() {
            continue;
        }
        total = &total + &(c * lr_chain(&rho, rest, memo));
    }
    memo.insert(key, total.clone());
    total
}

/// How [`kostka`] computes `K_{λμ}(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaMethod {
    /// Multiplies the `ĥ_{μ_i}` as classical-basis series, then converts to the dual basis.
    DualProduct,
    /// Sums products of dual LR polynomials from barred supertableaux along chains.
    DualLrChain,
}

/// `K_{λμ}(a)`: the coefficient of `ŝ_λ(y‖a)` in `ĥ_μ(y‖a)`, computed up to degree `degree`.
pub fn kostka(lambda: &Partition, mu: &Partition, degree: usize, method: KostkaMethod) -> Result<APoly, TransitionError> {
    if degree < lambda.size() {
        return Err(SeriesError::TruncationTooSmall { size: lambda.size(), degree }.into());
    }
    if lambda.size() < mu.size() {
        return Ok(APoly::zero());
    }
    match method {
        KostkaMethod::DualProduct => Ok(dual_complete_product(mu, degree).coefficient(lambda)),
        KostkaMethod::DualLrChain => {
            let mut memo = BTreeMap::new();
            dual_lr_chain(lambda, mu.parts(), &mut memo)
        }
    }
}

/// `ĥ_μ(y‖a)` in the dual basis up to degree `degree`.
pub fn dual_complete_product(mu: &Partition, degree: usize) -> SchurSeries {
    mu.parts()
        .iter()
        .fold(SchurSeries::one(SeriesBasis::ClassicalSchur, degree), |acc, &k| {
            acc.mul(&dual_ehp(DualKind::H, k as i64, 0, degree))
        })
        .to_dual()
}

fn dual_lr_chain(
    lambda: &Partition,
    rows: &[usize],
    memo: &mut BTreeMap<(Partition, usize), APoly>,
) -> Result<APoly, TransitionError> {
    let Some((&first, rest)) = rows.split_first() else {
        return Ok(if lambda.is_empty() { APoly::one() } else { APoly::zero() });
    };
    let key = (lambda.clone(), rows.len());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let rest_size: usize = rest.iter().sum();
    let row = Partition::row(first);
    let mut total = APoly::zero();
    for rho in lambda.subpartitions().into_iter().filter(|r| r.size() >= rest_size && r.size() + first <= lambda.size()) {
        let n = skew(lambda, &rho).max_column_height().max(1);
        let c = dual_lr_via_supertableaux(&row, &rho, lambda, n)?;
        if c.is_zero() {
            continue;
        }
        total = &total + &(c * dual_lr_chain(&rho, rest, memo)?);
    }
    memo.insert(key, total.clone());
    Ok(total)
}

/// How [`char_poly`] computes `χ^λ_μ(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterMethod {
    /// Expands `p_μ(x‖a)` in `ℓ(λ)` variables.
    Expansion,
    /// Interpolates from the values `p_μ(a_ρ‖a)`.
    Interpolation,
}

/// `p_μ(a_ρ‖a) = ∏_k Σ_{i≤ℓ(ρ)} (a_{i-ρ_i}^k - a_i^k)`.
pub fn power_sum_at(mu: &Partition, rho: &Partition) -> APoly {
    mu.parts()
        .iter()
        .map(|&k| {
            (1..=rho.len() as i32)
                .map(|i| APoly::var(i - rho.part(i as usize) as i32).pow(k as u32) - APoly::var(i).pow(k as u32))
                .sum::<APoly>()
        })
        .product()
}

/// `χ^λ_μ(a)`: the coefficient of `s_λ(x‖a)` in `p_μ(x‖a)`.
pub fn char_poly(lambda: &Partition, mu: &Partition, method: CharacterMethod) -> Result<APoly, TransitionError> {
    if lambda.size() > mu.size() {
        return Ok(APoly::zero());
    }
    match method {
        CharacterMethod::Expansion => {
            let n = lambda.len().max(1);
            let p = double_ehp_product(EhpKind::P, mu, n);
            Ok(expand_in_double_schur(&p, ExpandMethod::Elimination)?.coefficient(lambda))
        }
        CharacterMethod::Interpolation => {
            let mut interp = Interpolator::new(|rho: &Partition| Ok(power_sum_at(mu, rho)));
            Ok(interp.coefficient(&Partition::empty(), lambda)?)
        }
    }
}

/// How [`char_dual`] computes `χ̂^λ_μ(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualCharacterMethod {
    /// `Σ_ρ (-1)^{m(λ/ρ)} χ^ρ_μ ψ_{λ/ρ}(a)` with Murnaghan–Nakayama characters.
    Flagged,
    /// Expands the power sums `p_μ(y)` in the classical basis and converts.
    Conversion,
}

/// `χ̂^λ_μ(a)`: the coefficient of `ŝ_λ(y‖a)` in `p_μ(y)`.
pub fn char_dual(lambda: &Partition, mu: &Partition, method: DualCharacterMethod) -> Result<APoly, TransitionError> {
    if lambda.size() < mu.size() {
        return Ok(APoly::zero());
    }
    match method {
        DualCharacterMethod::Flagged => {
            let mut total = APoly::zero();
            for rho in Partition::all_of_size(mu.size()).into_iter().filter(|r| lambda.contains(r)) {
                let theta = skew(lambda, &rho);
                if !same_diagonal(&theta) {
                    continue;
                }
                let chi = mn_character(&rho, mu);
                if chi != 0 {
                    total = &total + &(APoly::from_int(chi) * sign(upper_boxes(&theta)) * psi(&theta));
                }
            }
            Ok(total)
        }
        DualCharacterMethod::Conversion => {
            let n = lambda.size().max(1);
            let p = mu.parts().iter().fold(XPoly::one(n), |acc, &k| {
                acc.mul(&(0..n).fold(XPoly::zero(n), |s, i| s.add(&XPoly::var(n, i).pow(k as u32))))
            });
            Ok(classical_expansion(&p, lambda.size())?.to_dual().coefficient(lambda))
        }
    }
}

/// The double monomial functions `m_λ(x‖a)` for all `|λ| ≤ max_size`, in
/// `max_size` variables, solved from `s_ν = Σ_λ K_{νλ}(a) m_λ`.
pub fn double_monomials(max_size: usize) -> BTreeMap<Partition, DoubleSym> {
    let n = max_size.max(1);
    let all = Partition::all_up_to(max_size);
    // column μ of K: the dual-basis coefficients of ĥ_μ
    let columns: BTreeMap<Partition, SchurSeries> =
        all.iter().map(|mu| (mu.clone(), dual_complete_product(mu, max_size))).collect();
    let mut out: BTreeMap<Partition, DoubleSym> = BTreeMap::new();
    for size in 0..=max_size {
        // lexicographically increasing, so dominated partitions come first
        let mut level = Partition::all_of_size(size);
        level.reverse();
        for nu in level {
            let mut m = DoubleSym::basis(nu.clone(), n);
            for (lam, m_lam) in &out {
                let k = columns[lam].coefficient(&nu);
                if !k.is_zero() {
                    m = m.add(&m_lam.scale(&-k));
                }
            }
            out.insert(nu, m);
        }
    }
    out
}

pub fn double_monomial(lambda: &Partition) -> DoubleSym {
    double_monomials(lambda.size()).remove(lambda).expect("every partition of the size is solved")
}

/// `f_λ(x‖a)`, the element with `ω_a f_λ(x‖a) = m_λ(x‖a')`, in `|λ|` variables.
pub fn double_forgotten(lambda: &Partition) -> DoubleSym {
    double_monomial(lambda).omega_a()
}

/// A graded matrix of transition polynomials, rows and columns ordered by
/// size and then reverse-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    entries: Vec<Vec<APoly>>,
}

impl TransitionMatrix {
    pub fn build<F>(mut rows: Vec<Partition>, mut cols: Vec<Partition>, mut entry: F) -> Result<Self, TransitionError>
    where
        F: FnMut(&Partition, &Partition) -> Result<APoly, TransitionError>,
    {
        rows.sort_by(size_revlex);
        cols.sort_by(size_revlex);
        let entries = rows
            .iter()
            .map(|r| cols.iter().map(|c| entry(r, c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TransitionMatrix { rows, cols, entries })
    }

    /// Square matrix over all partitions with `|λ| ≤ max_size`.
    pub fn graded<F>(max_size: usize, entry: F) -> Result<Self, TransitionError>
    where
        F: FnMut(&Partition, &Partition) -> Result<APoly, TransitionError>,
    {
        let all = Partition::all_up_to(max_size);
        Self::build(all.clone(), all, entry)
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&APoly> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.entries[i][j])
    }

    pub fn entries(&self) -> &[Vec<APoly>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols.len())
            .map(|j| self.entries.iter().map(|row| row[j].clone()).collect())
            .collect();
        TransitionMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries }
    }

    pub fn map<F: FnMut(&APoly) -> APoly>(&self, mut f: F) -> Self {
        let entries = self.entries.iter().map(|row| row.iter().map(&mut f).collect()).collect();
        TransitionMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries }
    }

    /// Matrix product; `None` if the inner labels differ.
    pub fn mul(&self, other: &Self) -> Option<Self> {
        if self.cols != other.rows {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..other.cols.len())
                    .map(|j| {
                        row.iter()
                            .zip(&other.entries)
                            .filter(|(x, y)| !x.is_zero() && !y[j].is_zero())
                            .map(|(x, y)| x * &y[j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Some(TransitionMatrix { rows: self.rows.clone(), cols: other.cols.clone(), entries })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
            })
    }

    /// Zero outside the blocks `|row| ≥ |col|`.
    pub fn is_lower_graded(&self) -> bool {
        self.rows.iter().zip(&self.entries).all(|(r, row)| {
            self.cols.iter().zip(row).all(|(c, e)| r.size() >= c.size() || e.is_zero())
        })
    }
}

/// `(-1)^{n(λ/μ)} φ_{λ/μ}(a)` at `(λ, μ)`: rows `λ`, columns `μ ⊆ λ`.
pub fn phi_matrix(max_size: usize) -> TransitionMatrix {
    TransitionMatrix::graded(max_size, |lam, mu| Ok(flagged_entry(lam, mu, false))).expect("infallible entries")
}

/// `(-1)^{m(λ/μ)} ψ_{λ/μ}(a)` at `(λ, μ)`: rows `λ`, columns `μ ⊆ λ`.
pub fn psi_matrix(max_size: usize) -> TransitionMatrix {
    TransitionMatrix::graded(max_size, |lam, mu| Ok(flagged_entry(lam, mu, true))).expect("infallible entries")
}

fn flagged_entry(outer: &Partition, inner: &Partition, use_psi: bool) -> APoly {
    if !outer.contains(inner) {
        return APoly::zero();
    }
    let theta = skew(outer, inner);
    if !same_diagonal(&theta) {
        return APoly::zero();
    }
    if use_psi {
        sign(upper_boxes(&theta)) * psi(&theta)
    } else {
        sign(lower_boxes(&theta)) * phi(&theta)
    }
}

/// The two coefficient families relating supersymmetric double Schur
/// functions to classical supersymmetric Schur functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperExpansions {
    pub lambda: Partition,
    /// `s_λ(x/y‖a) = Σ_μ c_μ s_μ(x/y)` with `c_μ = (-1)^{m(λ/μ)} ψ_{λ/μ}(a)`.
    pub to_classical: Vec<(Partition, APoly)>,
    /// `s_λ(x/y) = Σ_μ c_μ s_μ(x/y‖a)` with `c_μ = (-1)^{n(λ/μ)} φ_{λ/μ}(a)`.
    pub from_classical: Vec<(Partition, APoly)>,
}

pub fn super_expansions(lambda: &Partition) -> SuperExpansions {
    let family = |use_psi: bool| -> Vec<(Partition, APoly)> {
        lambda
            .subpartitions()
            .into_iter()
            .map(|mu| {
                let c = flagged_entry(lambda, &mu, use_psi);
                (mu, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    SuperExpansions { lambda: lambda.clone(), to_classical: family(true), from_classical: family(false) }
}

/// Partitions with the numeric value of their coefficient.
pub type NumericFamily = Vec<(Partition, Rational)>;

impl SuperExpansions {
    /// Both families evaluated under a numeric specialization, e.g. the
    /// Frobenius–Schur one `a_i = -i + 1/2`.
    pub fn evaluate(&self, spec: &ASpec) -> Result<(NumericFamily, NumericFamily), TransitionError> {
        let eval = |family: &[(Partition, APoly)]| {
            family
                .iter()
                .map(|(mu, c)| Ok((mu.clone(), c.evaluate(spec)?)))
                .collect::<Result<Vec<_>, TransitionError>>()
        };
        Ok((eval(&self.to_classical)?, eval(&self.from_classical)?))
    }
}

/// `H_θ = |θ|! / dim θ`.
pub fn hook_product(theta: &SkewShape) -> Rational {
    theta.dim_and_hook().1
}

fn part_multiplicities(mu: &Partition) -> BTreeMap<usize, u32> {
    let mut m = BTreeMap::new();
    for &k in mu.parts() {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// `π_μ(ρ) = ∏_k (Σ_{i≤ℓ(ρ)} ((i-ρ_i)^k - i^k))^{m_k(μ)}`.
pub fn pi_weight(mu: &Partition, rho: &Partition) -> Rational {
    part_multiplicities(mu)
        .into_iter()
        .map(|(k, m)| {
            let s: i64 = (1..=rho.len() as i64)
                .map(|i| (i - rho.part(i as usize) as i64).pow(k as u32) - i.pow(k as u32))
                .sum();
            Rational::from_int(s).pow(m)
        })
        .fold(Rational::one(), |acc, x| &acc * &x)
}

/// `ϰ_μ(ρ) = ∏_k (Σ_{ℓ(ρ)≥i_1≥…≥i_k≥1} ρ_{i_1}(ρ_{i_2}-1)…(ρ_{i_k}-k+1))^{m_k(μ)}`.
pub fn kappa_weight(mu: &Partition, rho: &Partition) -> Rational {
    fn chains(rho: &Partition, step: usize, k: usize, top: usize) -> i64 {
        if step == k {
            return 1;
        }
        (1..=top)
            .map(|i| (rho.part(i) as i64 - step as i64) * chains(rho, step + 1, k, i))
            .sum()
    }
    part_multiplicities(mu)
        .into_iter()
        .map(|(k, m)| Rational::from_int(chains(rho, 0, k, rho.len())).pow(m))
        .fold(Rational::one(), |acc, x| &acc * &x)
}

/// One summand `sign · weight / (H_ρ H_{λ/ρ})` of a hook-product sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTerm {
    pub rho: Partition,
    pub weight: Rational,
    pub hook_rho: Rational,
    pub hook_complement: Rational,
    pub value: Rational,
}

fn hook_terms<F>(lambda: &Partition, mut signed_weight: F) -> Vec<HookTerm>
where
    F: FnMut(&Partition) -> Rational,
{
    lambda
        .subpartitions()
        .into_iter()
        .filter_map(|rho| {
            let weight = signed_weight(&rho);
            if weight.is_zero() {
                return None;
            }
            let hook_rho = hook_product(&SkewShape::straight(rho.clone()));
            let hook_complement = hook_product(&skew(lambda, &rho));
            let value = &weight / &(&hook_rho * &hook_complement);
            Some(HookTerm { rho, weight, hook_rho, hook_complement, value })
        })
        .collect()
}

fn signed(k: usize, r: Rational) -> Rational {
    if k.is_multiple_of(2) {
        r
    } else {
        -r
    }
}

/// Nonzero summands of `χ^λ_μ = Σ_ρ (-1)^{|ρ|} π_μ(ρ) / (H_ρ H_{λ/ρ})`.
pub fn character_hook_terms(lambda: &Partition, mu: &Partition) -> Vec<HookTerm> {
    hook_terms(lambda, |rho| signed(rho.size(), pi_weight(mu, rho)))
}

/// Nonzero summands of `K_{λμ} = Σ_ρ (-1)^{|λ/ρ|} ϰ_μ(ρ) / (H_ρ H_{λ/ρ})`.
pub fn kostka_hook_terms(lambda: &Partition, mu: &Partition) -> Vec<HookTerm> {
    hook_terms(lambda, |rho| signed(lambda.size() - rho.size(), kappa_weight(mu, rho)))
}

fn total(terms: &[HookTerm]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, t| &acc + &t.value)
}

/// `c^ν_{λμ} = Σ_{λ,μ⊆ρ⊆ν} (-1)^{|ν/ρ|} H_ρ / (H_{ν/ρ} H_{ρ/λ} H_{ρ/μ})`.
pub fn lr_by_hooks(lambda: &Partition, mu: &Partition, nu: &Partition) -> Rational {
    if nu.size() != lambda.size() + mu.size() {
        return Rational::zero();
    }
    let mut sum = Rational::zero();
    for rho in nu.subpartitions().into_iter().filter(|r| r.contains(lambda) && r.contains(mu)) {
        let num = hook_product(&SkewShape::straight(rho.clone()));
        let den = &(&hook_product(&skew(nu, &rho)) * &hook_product(&skew(&rho, lambda))) * &hook_product(&skew(&rho, mu));
        sum = &sum + &signed(nu.size() - rho.size(), &num / &den);
    }
    sum
}

/// The hook-product sums for `χ^λ_μ` and `K_{λμ}` next to the classical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookReport {
    pub character_terms: Vec<HookTerm>,
    pub character: Rational,
    pub character_classical: i64,
    pub kostka_terms: Vec<HookTerm>,
    pub kostka: Rational,
    pub kostka_classical: u64,
}

impl HookReport {
    pub fn holds(&self) -> bool {
        self.character == Rational::from_int(self.character_classical)
            && self.kostka == Rational::from_int(self.kostka_classical as i64)
    }
}

pub fn hook_identities(lambda: &Partition, mu: &Partition) -> Result<HookReport, TransitionError> {
    if lambda.size() != mu.size() {
        return Err(TransitionError::SizeMismatch { lambda: lambda.size(), mu: mu.size() });
    }
    let character_terms = character_hook_terms(lambda, mu);
    let kostka_terms = kostka_hook_terms(lambda, mu);
    Ok(HookReport {
        character: total(&character_terms),
        character_classical: mn_character(lambda, mu),
        kostka: total(&kostka_terms),
        kostka_classical: crate::classical::kostka_number(&SkewShape::straight(lambda.clone()), mu),
        character_terms,
        kostka_terms,
    })
}
