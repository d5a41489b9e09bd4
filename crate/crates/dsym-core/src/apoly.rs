//! Sparse polynomials over the rationals in the parameters `a_i`, `i ∈ ℤ`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec::Vec;
use smallvec::SmallVec;

use crate::rational::Rational;

/// A monomial `∏ a_i^{e_i}`, stored as `(i, e_i)` pairs sorted by index.
///
/// The derived order (total degree first, then the pair list) is the
/// canonical printing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AMonomial {
    degree: u32,
    vars: SmallVec<[(i32, u32); 4]>,
}

impl AMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: i32) -> Self {
        Self::power(i, 1)
    }

    pub fn power(i: i32, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut vars = SmallVec::new();
        vars.push((i, e));
        AMonomial { degree: e, vars }
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (i32, u32)>>(pairs: I) -> Self {
        let mut vars: SmallVec<[(i32, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        vars.sort_unstable();
        let mut merged: SmallVec<[(i32, u32); 4]> = SmallVec::new();
        for (i, e) in vars {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => merged.push((i, e)),
            }
        }
        let degree = merged.iter().map(|p| p.1).sum();
        AMonomial { degree, vars: merged }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> &[(i32, u32)] {
        &self.vars
    }

    pub fn exponent(&self, i: i32) -> u32 {
        self.vars.iter().find(|p| p.0 == i).map_or(0, |p| p.1)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.vars, &other.vars);
        let mut vars = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    vars.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&a[i..]);
        vars.extend_from_slice(&b[j..]);
        AMonomial { degree: self.degree + other.degree, vars }
    }

    /// Removes every power of `a_i`, returning the exponent that was removed.
    fn split_off(&self, i: i32) -> (u32, AMonomial) {
        let e = self.exponent(i);
        if e == 0 {
            return (0, self.clone());
        }
        let vars = self.vars.iter().copied().filter(|p| p.0 != i).collect();
        (e, AMonomial { degree: self.degree - e, vars })
    }
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (i, e)) in self.vars.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "a[{i}]")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in the `a_i` with rational coefficients.
///
/// Terms are kept sorted in canonical order with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct APoly {
    terms: Vec<(AMonomial, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    NotDivisible,
    NotLinear,
    MissingIndex(i32),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NotDivisible => f.write_str("NotDivisible: nonzero remainder"),
            AlgebraError::NotLinear => f.write_str("NotLinear: divisor is not a linear form"),
            AlgebraError::MissingIndex(i) => write!(f, "MissingIndex: no value for a[{i}]"),
        }
    }
}

impl APoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(AMonomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn var(i: i32) -> Self {
        Self::monomial(AMonomial::var(i), Rational::one())
    }

    /// `a_i - a_j`.
    pub fn diff(i: i32, j: i32) -> Self {
        &Self::var(i) - &Self::var(j)
    }

    pub fn monomial(m: AMonomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            APoly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (AMonomial, Rational)>>(terms: I) -> Self {
        let mut v: Vec<_> = terms.into_iter().collect();
        v.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(AMonomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += &c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        APoly { terms: out }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AMonomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if this polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.first().map(|t| t.0.degree()) == self.degree()
    }

    pub fn coefficient(&self, m: &AMonomial) -> Rational {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map_or_else(|_| Rational::zero(), |k| self.terms[k].1.clone())
    }

    /// Indices of all variables that occur.
    pub fn indices(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.iter().flat_map(|t| t.0.vars().iter().map(|p| p.0)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        APoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        APoly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return other.scale(&self.terms[0].1);
        }
        if other.terms.len() == 1 && other.terms[0].0.is_one() {
            return self.scale(&other.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                v.push((m1.mul(m2), c1 * c2));
            }
        }
        Self::from_terms(v)
    }

    /// Replaces each `a_i` by `image(i)`.
    pub fn substitute<F: FnMut(i32) -> APoly>(&self, mut image: F) -> APoly {
        let mut cache: alloc::collections::BTreeMap<i32, APoly> = alloc::collections::BTreeMap::new();
        let mut acc = APoly::zero();
        for (m, c) in &self.terms {
            let mut t = APoly::constant(c.clone());
            for &(i, e) in m.vars() {
                let base = cache.entry(i).or_insert_with(|| image(i));
                t = &t * &base.pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renames variables by an injective index map; cheaper than `substitute`.
    pub fn reindex<F: Fn(i32) -> i32>(&self, f: F) -> APoly {
        APoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (AMonomial::from_pairs(m.vars().iter().map(|&(i, e)| (f(i), e))), c.clone())),
        )
    }

    /// `a_i ↦ a_{i+k}`.
    pub fn shift(&self, k: i32) -> APoly {
        if k == 0 {
            return self.clone();
        }
        // Translation preserves the order of indices, hence the term order.
        APoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let vars = m.vars.iter().map(|&(i, e)| (i + k, e)).collect();
                    (AMonomial { degree: m.degree, vars }, c.clone())
                })
                .collect(),
        }
    }

    /// `a_i ↦ -a_{-i+1}`.
    pub fn dualize(&self) -> APoly {
        APoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mono = AMonomial::from_pairs(m.vars().iter().map(|&(i, e)| (1 - i, e)));
            let c = if m.degree() % 2 == 1 { -c } else { c.clone() };
            (mono, c)
        }))
    }

    /// Divides by a linear form `L`, as univariate division in the
    /// highest-index variable of `L`.
    pub fn exact_div_linear(&self, divisor: &APoly) -> Result<APoly, AlgebraError> {
        if divisor.is_zero() || divisor.terms.iter().any(|t| t.0.degree() != 1) {
            return Err(AlgebraError::NotLinear);
        }
        let (lead_mono, lead_coeff) = divisor
            .terms
            .iter()
            .max_by_key(|t| t.0.vars()[0].0)
            .expect("nonzero divisor");
        let var = lead_mono.vars()[0].0;
        let inv = lead_coeff.recip().expect("nonzero coefficient");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        loop {
            let top = rem.terms.iter().map(|t| t.0.exponent(var)).max().unwrap_or(0);
            if top == 0 {
                break;
            }
            let step = APoly::from_terms(rem.terms.iter().filter_map(|(m, c)| {
                let (e, rest) = m.split_off(var);
                (e == top).then(|| (rest.mul(&AMonomial::power(var, top - 1)), c * &inv))
            }));
            rem = &rem - &(&step * divisor);
            quotient.extend(step.terms);
        }
        if !rem.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(APoly::from_terms(quotient))
    }

    /// Evaluates with a partial assignment of values.
    pub fn evaluate_with<F: FnMut(i32) -> Option<Rational>>(&self, mut value: F) -> Result<Rational, AlgebraError> {
        let mut cache: alloc::collections::BTreeMap<i32, Rational> = alloc::collections::BTreeMap::new();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(i, e) in m.vars() {
                let v = match cache.get(&i) {
                    Some(v) => v.clone(),
                    None => {
                        let v = value(i).ok_or(AlgebraError::MissingIndex(i))?;
                        cache.insert(i, v.clone());
                        v
                    }
                };
                t = &t * &v.pow(e);
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, spec: &crate::spec::ASpec) -> Result<Rational, AlgebraError> {
        self.evaluate_with(|i| spec.value(i))
    }
}

impl<'a> Add<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn add(self, rhs: &'a APoly) -> APoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn sub(self, rhs: &'a APoly) -> APoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn mul(self, rhs: &'a APoly) -> APoly {
        self.product(rhs)
    }
}

impl Add for APoly {
    type Output = APoly;
    fn add(self, rhs: APoly) -> APoly {
        &self + &rhs
    }
}

impl Sub for APoly {
    type Output = APoly;
    fn sub(self, rhs: APoly) -> APoly {
        &self - &rhs
    }
}

impl Mul for APoly {
    type Output = APoly;
    fn mul(self, rhs: APoly) -> APoly {
        &self * &rhs
    }
}

impl Neg for &APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        APoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        -&self
    }
}

impl core::iter::Sum for APoly {
    fn sum<I: Iterator<Item = APoly>>(iter: I) -> APoly {
        iter.fold(APoly::zero(), |acc, p| &acc + &p)
    }
}

impl core::iter::Product for APoly {
    fn product<I: Iterator<Item = APoly>>(iter: I) -> APoly {
        iter.fold(APoly::one(), |acc, p| &acc * &p)
    }
}

impl From<Rational> for APoly {
    fn from(c: Rational) -> Self {
        APoly::constant(c)
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_k` of a list of polynomials.
pub fn elementary(vars: &[APoly], k: usize) -> APoly {
    let mut e = alloc::vec![APoly::zero(); k + 1];
    e[0] = APoly::one();
    for v in vars {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * v;
            e[j] = &e[j] + &t;
        }
    }
    e.swap_remove(k)
}

/// `h_k` of a list of polynomials.
pub fn complete(vars: &[APoly], k: usize) -> APoly {
    let mut h = alloc::vec![APoly::zero(); k + 1];
    h[0] = APoly::one();
    for v in vars {
        for j in 1..=k {
            let t = &h[j - 1] * v;
            h[j] = &h[j] + &t;
        }
    }
    h.swap_remove(k)
}

/// The variables `a_i` for `i` running from `from` to `to` in either direction.
pub fn var_range(from: i32, to: i32) -> Vec<APoly> {
    if from <= to {
        (from..=to).map(APoly::var).collect()
    } else {
        (to..=from).rev().map(APoly::var).collect()
    }
}
