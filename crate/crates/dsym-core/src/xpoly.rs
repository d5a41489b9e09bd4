//! Polynomials in `x_1..x_n` with [`APoly`] coefficients.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

use crate::apoly::{AMonomial, APoly, AlgebraError};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::spec::ASpec;

/// Maximum number of x-variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector of an x-monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct XExp([u8; MAX_VARS]);

impl XExp {
    pub fn from_slice(e: &[u8]) -> Self {
        let mut a = [0u8; MAX_VARS];
        a[..e.len()].copy_from_slice(e);
        XExp(a)
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn as_slice(&self, n: usize) -> &[u8] {
        &self.0[..n]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree counted over the variables in `range`.
    pub fn degree_in(&self, range: core::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    fn add(&self, o: &Self) -> Self {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(o.0.iter()) {
            *x += *y;
        }
        XExp(a)
    }

    fn with(&self, i: usize, e: u8) -> Self {
        let mut a = self.0;
        a[i] = e;
        XExp(a)
    }

    /// Whether the exponents over `range` weakly decrease.
    pub fn is_dominant_in(&self, range: core::ops::Range<usize>) -> bool {
        self.0[range].windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Debug for XExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A polynomial `Σ c_e x^e` with `c_e ∈ ℚ[a]`; terms sorted by exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    n: usize,
    terms: Vec<(XExp, APoly)>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        XPoly { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: APoly) -> Self {
        Self::monomial(n, XExp::default(), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, APoly::one())
    }

    pub fn monomial(n: usize, e: XExp, c: APoly) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.push((e, c));
        }
        p
    }

    /// `x_{i+1}` (0-based index).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n);
        Self::monomial(n, XExp::default().with(i, 1), APoly::one())
    }

    /// `x_{i+1} - c`.
    pub fn var_minus(n: usize, i: usize, c: &APoly) -> Self {
        Self::var(n, i).sub(&Self::constant(n, c.clone()))
    }

    pub fn from_terms<I: IntoIterator<Item = (XExp, APoly)>>(n: usize, terms: I) -> Self {
        let flat = terms
            .into_iter()
            .flat_map(|(e, c)| c.terms().map(|(m, r)| (e, m.clone(), r.clone())).collect::<Vec<_>>())
            .collect();
        Self::from_flat_terms(n, flat)
    }

    /// Collects `(x-exponent, a-monomial, coefficient)` triples, merging duplicates.
    pub fn from_flat_terms(n: usize, mut flat: Vec<(XExp, AMonomial, Rational)>) -> Self {
        flat.sort_unstable_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        let mut out: Vec<(XExp, APoly)> = Vec::new();
        let mut i = 0;
        while i < flat.len() {
            let e = flat[i].0;
            let mut j = i;
            while j < flat.len() && flat[j].0 == e {
                j += 1;
            }
            let c = APoly::from_terms(flat[i..j].iter().map(|t| (t.1.clone(), t.2.clone())));
            if !c.is_zero() {
                out.push((e, c));
            }
            i = j;
        }
        XPoly { n, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XExp, &APoly)> {
        self.terms.iter().map(|(e, c)| (e, c))
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

    pub fn coefficient(&self, e: &XExp) -> APoly {
        self.terms
            .binary_search_by(|t| t.0.cmp(e))
            .map_or_else(|_| APoly::zero(), |k| self.terms[k].1.clone())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// The homogeneous component of x-degree `d`.
    pub fn component(&self, d: u32) -> XPoly {
        XPoly { n: self.n, terms: self.terms.iter().filter(|t| t.0.degree() == d).cloned().collect() }
    }

    pub fn map_coeffs<F: FnMut(&APoly) -> APoly>(&self, mut f: F) -> XPoly {
        XPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn scale(&self, c: &APoly) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.n);
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn neg(&self) -> XPoly {
        XPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> XPoly {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &APoly| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        XPoly { n: self.n, terms: out }
    }

    /// Product keeping only terms whose degree over `range` is at most `max`.
    pub fn mul_truncated(&self, other: &Self, range: core::ops::Range<usize>, max: u32) -> XPoly {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut v = Vec::new();
        for (e1, c1) in &self.terms {
            let d1 = e1.degree_in(range.clone());
            if d1 > max {
                continue;
            }
            for (e2, c2) in &other.terms {
                if d1 + e2.degree_in(range.clone()) <= max {
                    v.push((e1.add(e2), c1 * c2));
                }
            }
        }
        XPoly::from_terms(self.n, v)
    }

    /// Drops terms whose degree over `range` exceeds `max`.
    pub fn truncate(&self, range: core::ops::Range<usize>, max: u32) -> XPoly {
        XPoly {
            n: self.n,
            terms: self.terms.iter().filter(|t| t.0.degree_in(range.clone()) <= max).cloned().collect(),
        }
    }

    pub fn pow(&self, e: u32) -> XPoly {
        (0..e).fold(XPoly::one(self.n), |acc, _| acc.mul(self))
    }

    /// Substitutes `x_i ← point[i]`.
    pub fn evaluate_at(&self, point: &[APoly]) -> APoly {
        assert_eq!(point.len(), self.n, "evaluation point has wrong length");
        let max = self.terms.iter().flat_map(|t| t.0.as_slice(self.n).iter().copied()).max().unwrap_or(0);
        let powers: Vec<Vec<APoly>> = point
            .iter()
            .map(|v| {
                let mut p = alloc::vec![APoly::one()];
                for k in 1..=max as usize {
                    let next = &p[k - 1] * v;
                    p.push(next);
                }
                p
            })
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                e.as_slice(self.n).iter().enumerate().fold(c.clone(), |acc, (i, &k)| &acc * &powers[i][k as usize])
            })
            .sum()
    }

    /// Numerical value with `x_i ← x[i]` and parameters from `spec`.
    pub fn evaluate_numeric(&self, x: &[Rational], spec: &ASpec) -> Result<Rational, AlgebraError> {
        assert_eq!(x.len(), self.n);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.evaluate(spec)?;
            for (i, &k) in e.as_slice(self.n).iter().enumerate() {
                t = &t * &x[i].pow(k as u32);
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitutes `x_i ← images[i]`, where the images live in `target_n` variables.
    pub fn substitute(&self, images: &[XPoly], target_n: usize) -> XPoly {
        assert_eq!(images.len(), self.n);
        let mut out = XPoly::zero(target_n);
        for (e, c) in &self.terms {
            let mut t = XPoly::constant(target_n, c.clone());
            for (i, &k) in e.as_slice(self.n).iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k as u32));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Moves variable `i` to position `map[i]` in a ring with `target_n` variables.
    pub fn relabel(&self, map: &[usize], target_n: usize) -> XPoly {
        assert_eq!(map.len(), self.n);
        XPoly::from_terms(
            target_n,
            self.terms.iter().map(|(e, c)| {
                let mut a = [0u8; MAX_VARS];
                for (i, &k) in e.as_slice(self.n).iter().enumerate() {
                    a[map[i]] += k;
                }
                (XExp(a), c.clone())
            }),
        )
    }

    /// Invariance under all adjacent transpositions of variables in `range`.
    pub fn is_symmetric_in(&self, range: core::ops::Range<usize>) -> bool {
        range.clone().skip(1).all(|i| {
            let mut map: Vec<usize> = (0..self.n).collect();
            map.swap(i - 1, i);
            self.relabel(&map, self.n) == *self
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(0..self.n)
    }

    /// Terms whose exponents weakly decrease within each block of variables.
    pub fn dominant_terms(&self, blocks: &[core::ops::Range<usize>]) -> Vec<(XExp, APoly)> {
        self.terms
            .iter()
            .filter(|t| blocks.iter().all(|b| t.0.is_dominant_in(b.clone())))
            .cloned()
            .collect()
    }

    /// Exact quotient by `x_i - x_j`.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<XPoly, AlgebraError> {
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        loop {
            let top = rem.terms.iter().map(|t| t.0.get(i)).max().unwrap_or(0);
            if top == 0 {
                break;
            }
            let step: Vec<(XExp, APoly)> = rem
                .terms
                .iter()
                .filter(|t| t.0.get(i) == top)
                .map(|(e, c)| (e.with(i, top - 1), c.clone()))
                .collect();
            let step = XPoly::from_terms(self.n, step);
            let sub = step.mul(&XPoly::var(self.n, i).sub(&XPoly::var(self.n, j)));
            rem = rem.sub(&sub);
            quotient.extend(step.terms);
        }
        if !rem.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(XPoly::from_terms(self.n, quotient))
    }

    /// Exact quotient by the Vandermonde `∏_{i<j}(x_i - x_j)`.
    pub fn div_by_vandermonde(&self) -> Result<XPoly, AlgebraError> {
        let mut q = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                q = q.div_by_difference(i, j)?;
            }
        }
        Ok(q)
    }

    pub fn add(&self, other: &Self) -> XPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> XPoly {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> XPoly {
        self.mul_truncated(other, 0..self.n, u32::MAX)
    }
}

impl Ring for XPoly {
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        XPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        XPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        XPoly::mul(self, other)
    }
}

impl fmt::Display for XPoly {
    /// Terms by decreasing total degree, then decreasing exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut order: Vec<&(XExp, APoly)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(&a.0)));
        for (k, (e, c)) in order.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]")?;
            for (i, &p) in e.as_slice(self.n).iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x(n: usize, i: usize) -> XPoly {
        XPoly::var(n, i)
    }

    #[test]
    fn vandermonde_division() {
        let n = 3;
        let mut v = XPoly::one(n);
        for i in 0..n {
            for j in i + 1..n {
                v = v.mul(&x(n, i).sub(&x(n, j)));
            }
        }
        let f = x(n, 0).add(&XPoly::constant(n, APoly::var(2)));
        assert_eq!(v.mul(&f).div_by_vandermonde().unwrap(), f);
        assert_eq!(x(n, 0).div_by_difference(0, 1), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn evaluation_and_symmetry() {
        let n = 2;
        let p = x(n, 0).mul(&x(n, 1)).add(&x(n, 0)).add(&x(n, 1));
        assert!(p.is_symmetric());
        assert!(!x(n, 0).is_symmetric());
        let val = p.evaluate_at(&[APoly::var(0), APoly::from_int(2)]);
        assert_eq!(val, &APoly::var(0).scale(&Rational::from_int(3)) + &APoly::from_int(2));
    }

    #[test]
    fn display_form() {
        let n = 2;
        let p = x(n, 0).pow(2).mul(&x(n, 1)).sub(&XPoly::constant(n, APoly::var(1)));
        assert_eq!(p.to_string(), "[1]*x1^2*x2 + [-a[1]]");
    }

    #[test]
    fn truncated_product() {
        let n = 2;
        let p = XPoly::one(n).add(&x(n, 0)).add(&x(n, 1));
        let sq = p.mul_truncated(&p, 0..1, 1);
        assert_eq!(sq.coefficient(&XExp::from_slice(&[2, 0])), APoly::zero());
        assert_eq!(sq.coefficient(&XExp::from_slice(&[0, 2])), APoly::one());
    }
}
