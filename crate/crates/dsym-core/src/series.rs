//! Truncated series of symmetric functions: dual Schur functions and the
//! conversions between the classical and dual Schur bases.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::apoly::{APoly, AlgebraError};
use crate::classical::schur_product;
use crate::double_schur::{classical_schur, weighted_sum_truncated};
use crate::flagged::{lower_boxes, phi, phi_determinant, psi, same_diagonal, upper_boxes};
use crate::partition::{size_revlex, Partition, SkewShape};
use crate::ring::{det, Ring};
use crate::tableaux::TableauFamily;
use crate::xpoly::{XExp, XPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    TruncationTooSmall { size: usize, degree: usize },
    WrongBasis { expected: SeriesBasis, found: SeriesBasis },
    LengthExceeded { length: usize, n: usize },
    NotSymmetric,
    /// The operation needs a straight shape.
    SkewShape,
    Algebra(AlgebraError),
}

impl From<AlgebraError> for SeriesError {
    fn from(e: AlgebraError) -> Self {
        SeriesError::Algebra(e)
    }
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::TruncationTooSmall { size, degree } => {
                write!(f, "truncation degree {degree} is below the partition size {size}")
            }
            SeriesError::WrongBasis { expected, found } => write!(f, "expected a {expected} series, got {found}"),
            SeriesError::LengthExceeded { length, n } => {
                write!(f, "partition of length {length} needs at least {length} variables, got {n}")
            }
            SeriesError::NotSymmetric => f.write_str("series is not symmetric"),
            SeriesError::SkewShape => f.write_str("operation needs a straight shape"),
            SeriesError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

/// Which family of symmetric functions a [`SchurSeries`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesBasis {
    /// Classical Schur functions `s_λ(x)`.
    ClassicalSchur,
    /// Dual Schur functions `ŝ_λ(x‖a)`.
    DualSchur,
}

impl fmt::Display for SeriesBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesBasis::ClassicalSchur => "schur",
            SeriesBasis::DualSchur => "dual-schur",
        })
    }
}

/// `Σ_{|λ| ≤ D} c_λ(a) b_λ` for a basis `b`, all terms above `D` discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSeries {
    basis: SeriesBasis,
    degree: usize,
    coeffs: BTreeMap<Partition, APoly>,
}

impl SchurSeries {
    pub fn zero(basis: SeriesBasis, degree: usize) -> Self {
        SchurSeries { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn one(basis: SeriesBasis, degree: usize) -> Self {
        Self::term(basis, degree, Partition::empty(), APoly::one())
    }

    pub fn term(basis: SeriesBasis, degree: usize, lambda: Partition, c: APoly) -> Self {
        Self::from_coeffs(basis, degree, [(lambda, c)])
    }

    /// Sums repeated partitions and drops zeros and terms above `degree`.
    pub fn from_coeffs<I: IntoIterator<Item = (Partition, APoly)>>(basis: SeriesBasis, degree: usize, coeffs: I) -> Self {
        let mut map: BTreeMap<Partition, APoly> = BTreeMap::new();
        for (lambda, c) in coeffs {
            if lambda.size() > degree || c.is_zero() {
                continue;
            }
            let slot = map.entry(lambda).or_insert_with(APoly::zero);
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        SchurSeries { basis, degree, coeffs: map }
    }

    pub fn basis(&self) -> SeriesBasis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms ordered by size, then reverse lexicographically.
    pub fn coeffs(&self) -> Vec<(&Partition, &APoly)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|x, y| size_revlex(x.0, y.0));
        v
    }

    pub fn coefficient(&self, lambda: &Partition) -> APoly {
        self.coeffs.get(lambda).cloned().unwrap_or_else(APoly::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn expect_basis(&self, expected: SeriesBasis) -> Result<(), SeriesError> {
        if self.basis == expected {
            Ok(())
        } else {
            Err(SeriesError::WrongBasis { expected, found: self.basis })
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.basis, other.basis, "series in different bases");
        let degree = self.degree.min(other.degree);
        let rhs = other.coeffs.iter().map(|(l, c)| (l.clone(), if negate { -c } else { c.clone() }));
        Self::from_coeffs(self.basis, degree, self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())).chain(rhs))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &APoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs<F: FnMut(&APoly) -> APoly>(&self, mut f: F) -> Self {
        Self::from_coeffs(self.basis, self.degree, self.coeffs.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Applies `τ^k : a_i ↦ a_{i+k}` to every coefficient.
    pub fn shift(&self, k: i32) -> Self {
        self.map_coeffs(|c| c.shift(k))
    }

    /// Applies `a_i ↦ -a_{1-i}` to every coefficient.
    pub fn dualize(&self) -> Self {
        self.map_coeffs(APoly::dualize)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::from_coeffs(self.basis, degree.min(self.degree), self.coeffs.clone())
    }

    /// Keeps the terms indexed by partitions with at most `n` parts.
    pub fn restrict_length(&self, n: usize) -> Self {
        Self::from_coeffs(self.basis, self.degree, self.coeffs.iter().filter(|(l, _)| l.len() <= n).map(|(l, c)| (l.clone(), c.clone())))
    }

    /// Truncated product; dual-basis factors are multiplied through the
    /// classical basis.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "series in different bases");
        match self.basis {
            SeriesBasis::ClassicalSchur => classical_product(self, other),
            SeriesBasis::DualSchur => classical_product(&self.to_classical(), &other.to_classical()).to_dual(),
        }
    }

    /// Rewrites a dual-basis series in the classical basis.
    pub fn to_classical(&self) -> Self {
        match self.basis {
            SeriesBasis::ClassicalSchur => self.clone(),
            SeriesBasis::DualSchur => {
                let mut terms = Vec::new();
                for (mu, c) in &self.coeffs {
                    for (lambda, f) in flagged_expansion(mu, self.degree).coeffs {
                        terms.push((lambda, &f * c));
                    }
                }
                Self::from_coeffs(SeriesBasis::ClassicalSchur, self.degree, terms)
            }
        }
    }

    /// Rewrites a classical-basis series in the dual basis by graded
    /// back-substitution against the expansions of the `ŝ_λ`.
    pub fn to_dual(&self) -> Self {
        match self.basis {
            SeriesBasis::DualSchur => self.clone(),
            SeriesBasis::ClassicalSchur => {
                let mut rest = self.clone();
                let mut out = Vec::new();
                for size in 0..=self.degree {
                    for lambda in Partition::all_of_size(size) {
                        let c = rest.coefficient(&lambda);
                        if c.is_zero() {
                            continue;
                        }
                        rest = rest.sub(&flagged_expansion(&lambda, self.degree).scale(&c));
                        out.push((lambda, c));
                    }
                }
                debug_assert!(rest.is_zero());
                Self::from_coeffs(SeriesBasis::DualSchur, self.degree, out)
            }
        }
    }
}

impl Ring for SchurSeries {
    fn is_zero(&self) -> bool {
        SchurSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SchurSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        SchurSeries::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        SchurSeries::mul(self, other)
    }
}

fn classical_product(s: &SchurSeries, t: &SchurSeries) -> SchurSeries {
    let degree = s.degree.min(t.degree);
    let mut memo: BTreeMap<(Partition, Partition), Vec<(Partition, u64)>> = BTreeMap::new();
    let mut terms = Vec::new();
    for (alpha, c) in &s.coeffs {
        for (beta, d) in &t.coeffs {
            if alpha.size() + beta.size() > degree {
                continue;
            }
            let cd = c * d;
            let product = memo.entry((alpha.clone(), beta.clone())).or_insert_with(|| schur_product(alpha, beta));
            for (gamma, k) in product.iter() {
                terms.push((gamma.clone(), cd.scale(&crate::rational::Rational::from_int(*k as i64))));
            }
        }
    }
    SchurSeries::from_coeffs(SeriesBasis::ClassicalSchur, degree, terms)
}

fn check_degree(mu: &Partition, degree: usize) -> Result<(), SeriesError> {
    if degree < mu.size() {
        return Err(SeriesError::TruncationTooSmall { size: mu.size(), degree });
    }
    Ok(())
}

fn check_length(mu: &Partition, n: usize) -> Result<(), SeriesError> {
    if mu.len() > n {
        return Err(SeriesError::LengthExceeded { length: mu.len(), n });
    }
    Ok(())
}

/// Partitions `λ ⊇ μ` with `|λ| ≤ degree` and the same diagonal count.
fn same_diagonal_covers(mu: &Partition, degree: usize) -> Vec<SkewShape> {
    Partition::all_up_to(degree)
        .into_iter()
        .filter(|l| l.contains(mu))
        .map(|l| SkewShape::new(l, mu.clone()).expect("containment checked"))
        .filter(same_diagonal)
        .collect()
}

fn sign(k: usize) -> APoly {
    APoly::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn flagged_expansion(mu: &Partition, degree: usize) -> SchurSeries {
    let terms = same_diagonal_covers(mu, degree)
        .into_iter()
        .map(|th| (th.outer().clone(), sign(lower_boxes(&th)) * phi(&th)));
    SchurSeries::from_coeffs(SeriesBasis::ClassicalSchur, degree, terms)
}

/// How [`dual_schur`] computes `ŝ_μ(x‖a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualSchurMethod {
    /// Hook-tableau sums `φ_{λ/μ}(a)`.
    Flagged,
    /// Products of two determinants of complete and elementary polynomials in `a`.
    Determinant,
    /// Reverse tableaux weighted by `X_i(g,h)` in `n` variables.
    Combinatorial(usize),
    /// Ratio of alternants in `n` variables.
    Alternant(usize),
}

/// `ŝ_μ(x‖a)` in the classical Schur basis up to degree `degree`.
///
/// The finite-variable methods only produce terms `s_λ` with `ℓ(λ) ≤ n`.
pub fn dual_schur(mu: &Partition, degree: usize, method: DualSchurMethod) -> Result<SchurSeries, SeriesError> {
    check_degree(mu, degree)?;
    match method {
        DualSchurMethod::Flagged => Ok(flagged_expansion(mu, degree)),
        DualSchurMethod::Determinant => {
            let terms = same_diagonal_covers(mu, degree)
                .into_iter()
                .map(|th| (th.outer().clone(), sign(lower_boxes(&th)) * phi_determinant(&th)));
            Ok(SchurSeries::from_coeffs(SeriesBasis::ClassicalSchur, degree, terms))
        }
        DualSchurMethod::Combinatorial(n) => {
            check_length(mu, n)?;
            skew_dual_schur(&SkewShape::straight(mu.clone()), degree, n)
        }
        DualSchurMethod::Alternant(n) => {
            check_length(mu, n)?;
            classical_expansion(&dual_schur_alternant(mu, n, degree)?, degree)
        }
    }
}

/// `X_i(g,h) = x_i (1-g x_{i-1})…(1-g x_1) / ((1-h x_i)…(1-h x_1))`, with
/// `i` counted from 1, up to total degree `max`.
pub fn x_weight(n: usize, i: usize, g: &APoly, h: &APoly, max: u32) -> XPoly {
    let mut w = XPoly::var(n, i - 1).truncate(0..n, max);
    for k in 0..i - 1 {
        w = w.mul_truncated(&XPoly::one(n).sub(&XPoly::var(n, k).scale(g)), 0..n, max);
    }
    for k in 0..i {
        w = w.mul_truncated(&geometric(n, k, h, max), 0..n, max);
    }
    w
}

/// `1/(1 - c x_k)` up to degree `max`.
pub fn geometric(n: usize, k: usize, c: &APoly, max: u32) -> XPoly {
    let mut terms = Vec::new();
    let mut e = [0u8; crate::xpoly::MAX_VARS];
    for m in 0..=max {
        e[k] = m as u8;
        terms.push((XExp::from_slice(&e[..n]), c.pow(m)));
    }
    XPoly::from_terms(n, terms)
}

/// `ŝ_θ(x_1..x_n‖a)` as a polynomial truncated at total degree `degree`.
pub fn skew_dual_schur_xpoly(theta: &SkewShape, n: usize, degree: usize) -> XPoly {
    if theta.size() > degree {
        return XPoly::zero(n);
    }
    let slack = (degree - theta.size()) as u32;
    let fam = TableauFamily::Reverse { max: n as u32 };
    let a = APoly::var;
    weighted_sum_truncated(theta, &fam, n, Some(degree as u32), |c, t| {
        x_weight(n, t as usize, &a(1 - c), &a(-c), slack + 1)
    })
}

/// `ŝ_θ(x‖a)` from reverse tableaux in `n` variables, expanded in the
/// classical Schur basis. Only terms with `ℓ(λ) ≤ n` are produced.
pub fn skew_dual_schur(theta: &SkewShape, degree: usize, n: usize) -> Result<SchurSeries, SeriesError> {
    classical_expansion(&skew_dual_schur_xpoly(theta, n, degree), degree)
}

/// `∏_{k≤n} ∏_{i≤ℓ(μ)} (1 - a_i x_k) / (1 - a_{i-μ_i} x_k)` up to degree `degree`.
pub fn skew_factor(mu: &Partition, n: usize, degree: usize) -> XPoly {
    let max = degree as u32;
    let mut f = XPoly::one(n);
    for k in 0..n {
        for i in 1..=mu.len() {
            let num = XPoly::one(n).sub(&XPoly::var(n, k).scale(&APoly::var(i as i32)));
            f = f.mul_truncated(&num, 0..n, max);
            f = f.mul_truncated(&geometric(n, k, &APoly::var(i as i32 - mu.part(i) as i32), max), 0..n, max);
        }
    }
    f
}

/// `ŝ_{ν/μ}(x‖a)` times [`skew_factor`], which expands as `Σ_λ c^ν_{λμ}(a) ŝ_λ(x‖a)`.
/// Only terms with `ℓ(λ) ≤ n` are produced.
pub fn skew_dual_schur_rescaled(theta: &SkewShape, degree: usize, n: usize) -> Result<SchurSeries, SeriesError> {
    let skew = skew_dual_schur_xpoly(theta, n, degree);
    let p = skew.mul_truncated(&skew_factor(theta.inner(), n, degree), 0..n, degree as u32);
    classical_expansion(&p, degree)
}

/// `A_{λ+δ}(x,a) / A_δ(x)` in `n` variables, truncated at total degree `degree`.
pub fn dual_schur_alternant(lambda: &Partition, n: usize, degree: usize) -> Result<XPoly, SeriesError> {
    check_length(lambda, n)?;
    let delta = (n * n.saturating_sub(1) / 2) as u32;
    let top = degree as u32 + delta;
    let d = lambda.diagonal_count();
    let a = APoly::var;
    let mut m = vec![Vec::with_capacity(n); n];
    for (i, row) in m.iter_mut().enumerate() {
        for j in 1..=n {
            let part = lambda.part(j) as i32;
            let power = (part + n as i32 - j as i32) as u32;
            let mut e = [0u8; crate::xpoly::MAX_VARS];
            e[i] = power as u8;
            let mut entry = XPoly::monomial(n, XExp::from_slice(&e[..n]), APoly::one()).truncate(0..n, top);
            if j <= d {
                for k in 0..=(part - j as i32) {
                    entry = entry.mul_truncated(&geometric(n, i, &a(-k), top), 0..n, top);
                }
            } else {
                for k in 1..(j as i32 - part) {
                    entry = entry.mul_truncated(&XPoly::one(n).sub(&XPoly::var(n, i).scale(&a(k))), 0..n, top);
                }
            }
            row.push(Truncated { poly: entry, max: top });
        }
    }
    let numerator = det(&m, Truncated { poly: XPoly::one(n), max: top }).poly;
    Ok(numerator.div_by_vandermonde()?.truncate(0..n, degree as u32))
}

#[derive(Clone)]
struct Truncated {
    poly: XPoly,
    max: u32,
}

impl Ring for Truncated {
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Truncated { poly: self.poly.add(&other.poly), max: self.max }
    }
    fn sub(&self, other: &Self) -> Self {
        Truncated { poly: self.poly.sub(&other.poly), max: self.max }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.poly.nvars();
        Truncated { poly: self.poly.mul_truncated(&other.poly, 0..n, self.max), max: self.max }
    }
}

/// Expands a symmetric polynomial of degree ≤ `degree` (higher terms are
/// ignored) in classical Schur polynomials by stripping leading monomials.
pub fn classical_expansion(p: &XPoly, degree: usize) -> Result<SchurSeries, SeriesError> {
    let n = p.nvars();
    let mut rest = p.truncate(0..n, degree as u32);
    if !rest.is_symmetric() {
        return Err(SeriesError::NotSymmetric);
    }
    let mut out = Vec::new();
    while let Some((e, c)) = rest.dominant_terms(core::slice::from_ref(&(0..n))).into_iter().max_by(|x, y| {
        x.0.degree().cmp(&y.0.degree()).then_with(|| x.0.cmp(&y.0))
    }) {
        let lambda = Partition::new(e.as_slice(n).iter().map(|&k| k as usize).collect()).expect("dominant exponent");
        rest = rest.sub(&classical_schur(&SkewShape::straight(lambda.clone()), n).scale(&c));
        out.push((lambda, c));
    }
    Ok(SchurSeries::from_coeffs(SeriesBasis::ClassicalSchur, degree, out))
}

/// A classical-basis series as a polynomial in `n` of the variables of a
/// ring with `total` variables, starting at position `offset`.
pub fn classical_to_xpoly(s: &SchurSeries, n: usize, total: usize, offset: usize) -> Result<XPoly, SeriesError> {
    s.expect_basis(SeriesBasis::ClassicalSchur)?;
    let map: Vec<usize> = (offset..offset + n).collect();
    let mut terms = Vec::new();
    for (lambda, c) in &s.coeffs {
        if lambda.len() > n {
            continue;
        }
        let poly = classical_schur(&SkewShape::straight(lambda.clone()), n).scale(c).relabel(&map, total);
        terms.extend(poly.terms().map(|(e, c)| (*e, c.clone())));
    }
    Ok(XPoly::from_terms(total, terms))
}

/// `s_μ(x) = Σ_λ (-1)^{m(λ/μ)} ψ_{λ/μ}(a) ŝ_λ(x‖a)`, with `m` counting the
/// boxes of `λ/μ` in the top `d` rows.
pub fn schur_to_dual(mu: &Partition, degree: usize) -> Result<SchurSeries, SeriesError> {
    check_degree(mu, degree)?;
    let terms = same_diagonal_covers(mu, degree)
        .into_iter()
        .map(|th| (th.outer().clone(), sign(upper_boxes(&th)) * psi(&th)));
    Ok(SchurSeries::from_coeffs(SeriesBasis::DualSchur, degree, terms))
}

/// Dual elementary or complete functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    /// `ê_k = ŝ_{(1^k)}`.
    E,
    /// `ĥ_k = ŝ_{(k)}`.
    H,
}

/// `ê_k(x‖τ^shift a)` or `ĥ_k(x‖τ^shift a)` in the classical basis; zero for `k < 0`.
pub fn dual_ehp(kind: DualKind, k: i64, shift: i32, degree: usize) -> SchurSeries {
    if k < 0 || k as usize > degree {
        return SchurSeries::zero(SeriesBasis::ClassicalSchur, degree);
    }
    let shape = match kind {
        DualKind::E => Partition::column(k as usize),
        DualKind::H => Partition::row(k as usize),
    };
    flagged_expansion(&shape, degree).shift(shift)
}

/// Determinantal presentations of `ŝ_{λ/μ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualDeterminant {
    JacobiTrudi,
    NagelsbachKostka,
    /// Straight shapes only.
    Giambelli,
}

/// `ŝ_θ(x‖a)` in the classical basis from a determinant of simpler series.
pub fn dual_determinant(theta: &SkewShape, degree: usize, kind: DualDeterminant) -> Result<SchurSeries, SeriesError> {
    let one = SchurSeries::one(SeriesBasis::ClassicalSchur, degree);
    let m: Vec<Vec<SchurSeries>> = match kind {
        DualDeterminant::JacobiTrudi => {
            let (lam, mu) = (theta.outer(), theta.inner());
            let n = lam.len();
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            let k = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                            dual_ehp(DualKind::H, k, -(mu.part(j) as i32) + j as i32 - 1, degree)
                        })
                        .collect()
                })
                .collect()
        }
        DualDeterminant::NagelsbachKostka => {
            let (lam, mu) = (theta.outer().conjugate(), theta.inner().conjugate());
            let n = lam.len();
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            let k = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                            dual_ehp(DualKind::E, k, mu.part(j) as i32 - j as i32 + 1, degree)
                        })
                        .collect()
                })
                .collect()
        }
        DualDeterminant::Giambelli => {
            if !theta.is_straight() {
                return Err(SeriesError::SkewShape);
            }
            let fr = theta.outer().frobenius();
            fr.alpha
                .iter()
                .map(|&alpha| {
                    fr.beta
                        .iter()
                        .map(|&beta| {
                            let hook = crate::partition::FrobeniusCoords::hook(alpha, beta).to_partition();
                            if hook.size() > degree {
                                SchurSeries::zero(SeriesBasis::ClassicalSchur, degree)
                            } else {
                                flagged_expansion(&hook, degree)
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    Ok(det(&m, one))
}

/// `ω̂ : Σ c_λ s_λ ↦ Σ c_λ s_{λ'}` on classical-basis series.
pub fn omega_hat(s: &SchurSeries) -> Result<SchurSeries, SeriesError> {
    s.expect_basis(SeriesBasis::ClassicalSchur)?;
    Ok(SchurSeries::from_coeffs(SeriesBasis::ClassicalSchur, s.degree, s.coeffs.iter().map(|(l, c)| (l.conjugate(), c.clone()))))
}

/// Product of two series in the same basis, truncated at `degree`.
pub fn series_mul(s: &SchurSeries, t: &SchurSeries, degree: usize) -> Result<SchurSeries, SeriesError> {
    t.expect_basis(s.basis)?;
    Ok(s.truncate(degree).mul(&t.truncate(degree)))
}

/// Outcome of comparing both sides of an identity between truncated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// A monomial where the sides differ, with the difference of coefficients.
    pub first_difference: Option<(XExp, APoly)>,
}

impl IdentityCheck {
    /// Compares two polynomials whose difference is symmetric within each
    /// block, so only block-dominant monomials need inspecting.
    pub fn compare(name: &'static str, lhs: &XPoly, rhs: &XPoly, blocks: &[core::ops::Range<usize>]) -> Self {
        let diff = lhs.sub(rhs);
        IdentityCheck { name, first_difference: diff.dominant_terms(blocks).into_iter().next() }
    }

    pub fn holds(&self) -> bool {
        self.first_difference.is_none()
    }
}

/// Both generating-series identities for `ê_k` and `ĥ_k` in `n` variables
/// `x` and one extra variable `t`, truncated at `x`-degree `degree`.
pub fn generating_series_check(n: usize, degree: usize) -> Vec<IdentityCheck> {
    let total = n + 1;
    let t = XPoly::var(total, n);
    let a = |i: i32| XPoly::constant(total, APoly::var(i));
    let max = degree as u32;
    let x = 0..n;
    let cut = |p: XPoly, q: &XPoly| p.mul_truncated(q, 0..n, max);
    let mut e_side = XPoly::one(total);
    let mut h_side = XPoly::one(total);
    for k in 1..=degree {
        let e_hat = classical_to_xpoly(&dual_ehp(DualKind::E, k as i64, 0, degree), n, total, 0).expect("classical basis");
        let rising = (0..k as i32).fold(XPoly::one(total), |acc, i| acc.mul(&t.add(&a(i))));
        e_side = e_side.add(&cut(e_hat, &rising));
        let h_hat = classical_to_xpoly(&dual_ehp(DualKind::H, k as i64, 0, degree), n, total, 0).expect("classical basis");
        let falling = (0..k as i32).fold(XPoly::one(total), |acc, i| acc.mul(&t.sub(&a(1 - i))));
        h_side = h_side.add(&cut(h_hat, &falling));
    }
    let mut e_product = XPoly::one(total);
    let mut h_product = XPoly::one(total);
    for i in x.clone() {
        let xi = XPoly::var(total, i);
        e_product = cut(e_product, &XPoly::one(total).add(&t.mul(&xi)));
        e_product = cut(e_product, &geometric(total, i, &APoly::var(0), max));
        h_product = cut(h_product, &XPoly::one(total).sub(&xi.scale(&APoly::var(1))));
        let inverse = (0..=max).fold(XPoly::zero(total), |acc, m| acc.add(&t.mul(&xi).pow(m)));
        h_product = cut(h_product, &inverse);
    }
    vec![
        IdentityCheck::compare("dual elementary generating series", &e_side, &e_product, core::slice::from_ref(&x)),
        IdentityCheck::compare("dual complete generating series", &h_side, &h_product, &[x]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{dual_lr_via_skew, lr_polynomial};
    use crate::partition::FrobeniusCoords;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn a(i: i32) -> APoly {
        APoly::var(i)
    }

    fn classical(lambda: Partition, degree: usize) -> SchurSeries {
        SchurSeries::term(SeriesBasis::ClassicalSchur, degree, lambda, APoly::one())
    }

    fn zero_a(s: &SchurSeries) -> SchurSeries {
        s.map_coeffs(|c| c.substitute(|_| APoly::zero()))
    }

    #[test]
    fn single_box_hook_coefficients() {
        let s1 = dual_schur(&p("1"), 5, DualSchurMethod::Flagged).unwrap();
        for pq in 0..5 {
            for q in 0..=pq {
                let hook = FrobeniusCoords::hook(pq - q, q).to_partition();
                let want = a(0).pow((pq - q) as u32) * a(1).pow(q as u32);
                let want = if q % 2 == 0 { want } else { -want };
                assert_eq!(s1.coefficient(&hook), want, "{hook}");
            }
        }
        assert_eq!(s1.coefficient(&p("2,1")), -(a(0) * a(1)));
        assert_eq!(s1.coefficient(&p("2,2")), APoly::zero());
        assert_eq!(dual_schur(&Partition::empty(), 3, DualSchurMethod::Flagged).unwrap(), classical(Partition::empty(), 3));
        assert_eq!(
            dual_schur(&p("2,1"), 2, DualSchurMethod::Flagged),
            Err(SeriesError::TruncationTooSmall { size: 3, degree: 2 })
        );
    }

    #[test]
    fn four_methods_agree() {
        for mu in Partition::all_up_to(3) {
            for n in mu.len().max(1)..=3 {
                let degree = 5;
                let flagged = dual_schur(&mu, degree, DualSchurMethod::Flagged).unwrap();
                assert_eq!(flagged.coefficient(&mu), APoly::one());
                assert!(flagged.coeffs().iter().all(|(l, _)| l.size() >= mu.size()));
                assert_eq!(zero_a(&flagged), classical(mu.clone(), degree));
                let det = dual_schur(&mu, degree, DualSchurMethod::Determinant).unwrap();
                assert_eq!(flagged, det, "{mu}");
                let restricted = flagged.restrict_length(n);
                let comb = dual_schur(&mu, degree, DualSchurMethod::Combinatorial(n)).unwrap();
                assert_eq!(restricted, comb, "{mu} n={n}");
                let alt = dual_schur(&mu, degree, DualSchurMethod::Alternant(n)).unwrap();
                assert_eq!(restricted, alt, "{mu} n={n}");
            }
        }
    }

    #[test]
    fn inverse_expansion_values() {
        let s1 = schur_to_dual(&p("1"), 4).unwrap();
        assert_eq!(s1.basis(), SeriesBasis::DualSchur);
        assert_eq!(s1.coefficient(&p("1,1")), a(1));
        assert_eq!(s1.coefficient(&p("2")), -a(0));
        // s_1 = Σ (-1)^p a_0 a_{-1}…a_{-p+1} · a_1…a_q · ŝ_{(p|q)}
        for pq in 0..4 {
            for q in 0..=pq {
                let pp = pq - q;
                let hook = FrobeniusCoords::hook(pp, q).to_partition();
                let up: APoly = (0..pp as i32).map(|k| a(-k)).product();
                let down: APoly = (1..=q as i32).map(a).product();
                let want = if pp % 2 == 0 { up * down } else { -(up * down) };
                assert_eq!(s1.coefficient(&hook), want, "{hook}");
            }
        }
    }

    #[test]
    fn conversions_are_mutually_inverse() {
        let degree = 5;
        for mu in Partition::all_up_to(3) {
            let hat = dual_schur(&mu, degree, DualSchurMethod::Flagged).unwrap();
            assert_eq!(hat.to_dual(), SchurSeries::term(SeriesBasis::DualSchur, degree, mu.clone(), APoly::one()));
            let back = schur_to_dual(&mu, degree).unwrap();
            assert_eq!(back.to_classical(), classical(mu.clone(), degree), "{mu}");
            assert_eq!(classical(mu.clone(), degree).to_dual(), back);
        }
    }

    #[test]
    fn dual_elementary_and_complete() {
        let one = classical(Partition::empty(), 4);
        assert_eq!(dual_ehp(DualKind::H, 0, 0, 4), one);
        assert_eq!(dual_ehp(DualKind::E, 0, 3, 4), one);
        let s1 = dual_schur(&p("1"), 4, DualSchurMethod::Flagged).unwrap();
        assert_eq!(dual_ehp(DualKind::H, 1, 0, 4), s1);
        assert_eq!(dual_ehp(DualKind::E, 1, 0, 4), s1);
        assert_eq!(dual_ehp(DualKind::H, 1, 2, 4), s1.shift(2));
    }

    #[test]
    fn generating_series() {
        let n = 2;
        let degree = 4;
        for check in generating_series_check(n, degree) {
            assert!(check.holds(), "{check:?}");
        }
    }

    #[test]
    fn determinants_match_tableaux() {
        let degree = 5;
        for nu in Partition::all_up_to(4) {
            for mu in nu.subpartitions() {
                let th = SkewShape::new(nu.clone(), mu.clone()).unwrap();
                let n = 3;
                let comb = skew_dual_schur(&th, degree, n).unwrap();
                let jt = dual_determinant(&th, degree, DualDeterminant::JacobiTrudi).unwrap();
                let nk = dual_determinant(&th, degree, DualDeterminant::NagelsbachKostka).unwrap();
                assert_eq!(jt, nk, "{th:?}");
                assert_eq!(jt.restrict_length(n), comb, "{th:?}");
                if mu.is_empty() {
                    assert_eq!(dual_determinant(&th, degree, DualDeterminant::Giambelli).unwrap(), jt);
                }
            }
        }
        let th = SkewShape::new(p("2,1"), p("1")).unwrap();
        assert_eq!(dual_determinant(&th, 4, DualDeterminant::Giambelli), Err(SeriesError::SkewShape));
    }

    #[test]
    fn skew_decomposes_with_lr_polynomials() {
        let degree = 5;
        let n = 3;
        for nu in Partition::all_up_to(4) {
            for mu in nu.subpartitions() {
                let th = SkewShape::new(nu.clone(), mu.clone()).unwrap();
                let skew = skew_dual_schur_rescaled(&th, degree, n).unwrap();
                let mut want = SchurSeries::zero(SeriesBasis::ClassicalSchur, degree);
                for lam in nu.subpartitions() {
                    let c = lr_polynomial(&lam, &mu, &nu);
                    if !c.is_zero() {
                        want = want.add(&dual_schur(&lam, degree, DualSchurMethod::Flagged).unwrap().scale(&c));
                    }
                }
                assert_eq!(skew, want.restrict_length(n), "{th:?}");
            }
        }
        // without the factor only the top-degree coefficients are LR polynomials
        let th = SkewShape::new(p("1"), p("1")).unwrap();
        assert_eq!(skew_dual_schur(&th, 3, 2).unwrap(), SchurSeries::one(SeriesBasis::ClassicalSchur, 3));
        assert!(!lr_polynomial(&p("1"), &p("1"), &p("1")).is_zero());
        let th = SkewShape::new(p("2"), p("1")).unwrap();
        let dual = dual_determinant(&th, 4, DualDeterminant::JacobiTrudi).unwrap().to_dual();
        assert_eq!(dual.coefficient(&p("1")), lr_polynomial(&p("1"), &p("1"), &p("2")));
    }

    #[test]
    fn omega_hat_images() {
        let degree = 4;
        let s1 = dual_schur(&p("1"), degree, DualSchurMethod::Flagged).unwrap();
        assert_eq!(omega_hat(&s1).unwrap(), s1.dualize());
        assert_eq!(omega_hat(&s1.to_dual()), Err(SeriesError::WrongBasis {
            expected: SeriesBasis::ClassicalSchur,
            found: SeriesBasis::DualSchur
        }));
        for k in 0..=4 {
            let h = dual_ehp(DualKind::H, k, 0, degree);
            assert_eq!(omega_hat(&h).unwrap(), dual_ehp(DualKind::E, k, 0, degree).dualize());
            assert_eq!(omega_hat(&omega_hat(&h).unwrap()).unwrap(), h);
        }
        for nu in Partition::all_up_to(4) {
            for mu in nu.subpartitions() {
                let th = SkewShape::new(nu.clone(), mu.clone()).unwrap();
                let lhs = omega_hat(&dual_determinant(&th, degree, DualDeterminant::JacobiTrudi).unwrap()).unwrap();
                let rhs = dual_determinant(&th.conjugate(), degree, DualDeterminant::JacobiTrudi).unwrap().dualize();
                assert_eq!(lhs, rhs, "{th:?}");
            }
        }
    }

    #[test]
    fn products_in_the_dual_basis() {
        let degree = 4;
        let basis = |l: Partition| SchurSeries::term(SeriesBasis::DualSchur, degree, l, APoly::one());
        let hat = |s: &str| basis(p(s));
        let prod = series_mul(&hat("1"), &hat("2"), degree).unwrap();
        assert_eq!(prod.coefficient(&p("2,2")), APoly::diff(0, 1));
        let one = SchurSeries::one(SeriesBasis::DualSchur, degree);
        assert_eq!(series_mul(&one, &hat("2,1"), degree).unwrap(), hat("2,1"));
        for lam in Partition::all_up_to(2) {
            for mu in Partition::all_up_to(2) {
                let prod = series_mul(&basis(lam.clone()), &basis(mu.clone()), degree).unwrap();
                for nu in Partition::all_up_to(degree) {
                    assert_eq!(prod.coefficient(&nu), dual_lr_via_skew(&lam, &mu, &nu).unwrap(), "{lam} {mu} {nu}");
                }
            }
        }
        let mixed = series_mul(&hat("1"), &classical(p("1"), degree), degree);
        assert!(matches!(mixed, Err(SeriesError::WrongBasis { .. })));
    }

    #[test]
    fn square_of_dual_complete() {
        let h1 = dual_ehp(DualKind::H, 1, 0, 4);
        let sq = h1.mul(&h1);
        let two = APoly::from_int(2);
        assert_eq!(sq.coefficient(&p("3,1")), &(&APoly::from_int(3) * &a(0).pow(2)) - &(&APoly::from_int(4) * &(a(0) * a(1))));
        assert_eq!(sq.coefficient(&p("2,1")), &two * &APoly::diff(0, 1));
        let dual = sq.to_dual();
        let d = APoly::diff;
        let expected = [
            ("2", APoly::one()),
            ("1,1", APoly::one()),
            ("3", d(0, -1)),
            ("2,1", d(0, 1)),
            ("1,1,1", d(2, 1)),
            ("4", d(0, -2) * d(0, -1)),
            ("3,1", d(0, 1) * d(0, -1)),
            ("2,2", d(0, 1).pow(2)),
            ("2,1,1", d(1, 0) * d(1, 2)),
            ("1,1,1,1", d(1, 2) * d(1, 3)),
        ];
        for (s, c) in &expected {
            assert_eq!(dual.coefficient(&p(s)), *c, "{s}");
        }
        assert_eq!(dual.len(), expected.len());
    }
}
