//! Cauchy-type kernel identities in finitely many variables, and the pairing
//! between double symmetric functions and dual series.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::apoly::APoly;
use crate::basis::{expand_in_double_schur, DoubleSym, ExpandMethod, SchurTable};
use crate::classical::z_lambda;
use crate::double_schur::{double_ehp_product, double_schur_tableau, supersymmetric_schur, EhpKind};
use crate::partition::{Partition, SkewShape};
use crate::rational::Rational;
use crate::series::{
    classical_to_xpoly, dual_ehp, dual_schur, geometric, DualKind, DualSchurMethod, IdentityCheck, SchurSeries,
    SeriesBasis,
};
use crate::tableaux::SuperOrder;
use crate::transition::{double_monomials, kostka_dual, KostkaDualMethod, TransitionError};
use crate::xpoly::{XExp, XPoly, MAX_VARS};

/// Variable blocks `x`, `y`, `z` of `n` variables each, with the series
/// side truncated at total degree `degree` in its block.
struct Layout {
    n: usize,
    total: usize,
    degree: u32,
}

impl Layout {
    fn block(&self, k: usize) -> Range<usize> {
        k * self.n..(k + 1) * self.n
    }

    /// Moves a polynomial in `n` variables into block `k`.
    fn place(&self, p: &XPoly, k: usize) -> XPoly {
        let map: Vec<usize> = self.block(k).collect();
        p.relabel(&map, self.total)
    }

    /// Moves a polynomial in the first `2n` variables (blocks `x`, `y`) into place.
    fn place_pair(&self, p: &XPoly) -> XPoly {
        let map: Vec<usize> = (0..2 * self.n).collect();
        p.relabel(&map, self.total)
    }

    fn series(&self, s: &SchurSeries, k: usize) -> XPoly {
        classical_to_xpoly(s, self.n, self.total, k * self.n).expect("classical-basis series")
    }

    fn cut(&self, p: &XPoly, q: &XPoly, k: usize) -> XPoly {
        p.mul_truncated(q, self.block(k), self.degree)
    }

    fn var(&self, k: usize, i: usize) -> XPoly {
        XPoly::var(self.total, k * self.n + i)
    }

    /// `Σ_{m≤degree} t^m` for a monomial `t` of positive degree in block `k`.
    fn inverse(&self, t: &XPoly, k: usize) -> XPoly {
        let mut sum = XPoly::one(self.total);
        let mut power = XPoly::one(self.total);
        for _ in 0..self.degree {
            power = self.cut(&power, t, k);
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power);
        }
        sum
    }

    /// `∏_{i,j≤n} num(u_i, w_j) / (1 - u_i w_j)` with `u` in block `from` and
    /// `w` in the truncated block `to`.
    fn kernel<F>(&self, from: usize, to: usize, mut num: F) -> XPoly
    where
        F: FnMut(usize, usize) -> XPoly,
    {
        let mut k = XPoly::one(self.total);
        for i in 0..self.n {
            for j in 0..self.n {
                let t = self.var(from, i).mul(&self.var(to, j));
                k = self.cut(&k, &self.inverse(&t, to), to);
                k = self.cut(&k, &num(i, j), to);
            }
        }
        k
    }

    fn sum<I: IntoIterator<Item = (XPoly, XPoly)>>(&self, pairs: I, k: usize) -> XPoly {
        pairs.into_iter().fold(XPoly::zero(self.total), |acc, (left, right)| acc.add(&self.cut(&left, &right, k)))
    }
}

/// Distinct rearrangements of `parts` padded with zeros to length `n`.
fn rearrangements(parts: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = parts.to_vec();
    v.resize(n, 0);
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        // next lexicographic permutation
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
        v.swap(i - 1, j);
        v[i..].reverse();
    }
}

/// Which parameter sequence a dual monomial function uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialParameters {
    /// `(y, a)^r = y^r / ∏_{k=0}^{r-1} (1 - a_{-k} y)`.
    Plain,
    /// `(y, a')^r = y^r / ∏_{k=1}^{r} (1 + a_k y)`.
    Dual,
}

/// `m̂_λ(y_1..y_n‖a)` (or with `a'`) as a polynomial in `total` variables
/// starting at `offset`, truncated at degree `degree` in those variables.
pub fn dual_monomial_xpoly(
    lambda: &Partition,
    params: MonomialParameters,
    n: usize,
    total: usize,
    offset: usize,
    degree: usize,
) -> XPoly {
    if lambda.len() > n || lambda.size() > degree {
        return XPoly::zero(total);
    }
    let range = offset..offset + n;
    let max = degree as u32;
    let mut sum = XPoly::zero(total);
    for exps in rearrangements(lambda.parts(), n) {
        let mut term = XPoly::one(total);
        let mut e = [0u8; MAX_VARS];
        for (i, &r) in exps.iter().enumerate() {
            e[offset + i] = r as u8;
        }
        term = term.mul_truncated(&XPoly::monomial(total, XExp::from_slice(&e[..total]), APoly::one()), range.clone(), max);
        for (i, &r) in exps.iter().enumerate() {
            for k in 0..r as i32 {
                let c = match params {
                    MonomialParameters::Plain => APoly::var(-k),
                    MonomialParameters::Dual => -APoly::var(k + 1),
                };
                term = term.mul_truncated(&geometric(total, offset + i, &c, max), range.clone(), max);
            }
        }
        sum = sum.add(&term);
    }
    sum
}

fn power_sums(lambda: &Partition, n: usize) -> XPoly {
    lambda.parts().iter().fold(XPoly::one(n), |acc, &k| {
        acc.mul(&(0..n).fold(XPoly::zero(n), |s, i| s.add(&XPoly::var(n, i).pow(k as u32))))
    })
}

fn dual_product(kind: DualKind, lambda: &Partition, degree: usize) -> SchurSeries {
    lambda
        .parts()
        .iter()
        .fold(SchurSeries::one(SeriesBasis::ClassicalSchur, degree), |acc, &k| acc.mul(&dual_ehp(kind, k as i64, 0, degree)))
}

fn epsilon(lambda: &Partition) -> Rational {
    if (lambda.size() - lambda.len()).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Checks every kernel identity in `n` variables per alphabet with the dual
/// side truncated at degree `degree`. Needs `3n ≤ 12`.
pub fn cauchy_check(n: usize, degree: usize) -> Result<Vec<IdentityCheck>, TransitionError> {
    let mut out = double_kernel_checks(n, degree)?;
    out.extend(super_kernel_checks(n, degree));
    Ok(out)
}

/// The identities with kernel `∏ (1 - a_i y_j)/(1 - x_i y_j)` or
/// `∏ (1 + x_i y_j)/(1 + a_i y_j)`.
pub fn double_kernel_checks(n: usize, degree: usize) -> Result<Vec<IdentityCheck>, TransitionError> {
    let lay = Layout { n, total: 2 * n, degree: degree as u32 };
    let (x, y) = (0, 1);
    let blocks = [lay.block(x), lay.block(y)];
    let a = |i: i32| XPoly::constant(lay.total, APoly::var(i));
    let parts: Vec<Partition> = Partition::all_up_to(degree);
    let short: Vec<&Partition> = parts.iter().filter(|l| l.len() <= n).collect();

    let kernel = lay.kernel(x, y, |i, j| XPoly::one(lay.total).sub(&lay.var(y, j).mul(&a(i as i32 + 1))));
    let mut out = Vec::new();

    let schur = lay.sum(
        short.iter().map(|l| {
            let dual = dual_schur(l, degree, DualSchurMethod::Flagged).expect("degree covers the partition");
            (lay.place(&double_schur_tableau(l, n), x), lay.series(&dual, y))
        }),
        y,
    );
    out.push(IdentityCheck::compare("double Schur and dual Schur", &kernel, &schur, &blocks));

    let complete = lay.sum(
        short.iter().map(|l| {
            let m_hat = dual_monomial_xpoly(l, MonomialParameters::Plain, n, lay.total, n, degree);
            (lay.place(&double_ehp_product(EhpKind::H, l, n), x), m_hat)
        }),
        y,
    );
    out.push(IdentityCheck::compare("double complete and dual monomial", &kernel, &complete, &blocks));

    let power = lay.sum(
        parts.iter().map(|l| {
            let z = z_lambda(l).recip().expect("z_λ is positive");
            let left = lay.place(&double_ehp_product(EhpKind::P, l, n), x).scale(&APoly::constant(z));
            (left, lay.place(&power_sums(l, n), y))
        }),
        y,
    );
    out.push(IdentityCheck::compare("double power sums", &kernel, &power, &blocks));

    let monomials = double_monomials(degree);
    let mut table = SchurTable::new(n);
    let restrict = |s: &DoubleSym| DoubleSym::from_coeffs(n, s.coeffs().map(|(l, c)| (l.clone(), c.clone())));
    let mut m_x = BTreeMap::new();
    let mut f_x = BTreeMap::new();
    for (l, m) in &monomials {
        m_x.insert(l.clone(), lay.place(&restrict(m).to_xpoly(&mut table), x));
        f_x.insert(l.clone(), lay.place(&restrict(&m.omega_a()).to_xpoly(&mut table), x));
    }
    let by_complete = lay.sum(parts.iter().map(|l| (m_x[l].clone(), lay.series(&dual_product(DualKind::H, l, degree), y))), y);
    out.push(IdentityCheck::compare("double monomial and dual complete", &kernel, &by_complete, &blocks));
    let by_elementary = lay.sum(parts.iter().map(|l| (f_x[l].clone(), lay.series(&dual_product(DualKind::E, l, degree), y))), y);
    out.push(IdentityCheck::compare("double forgotten and dual elementary", &kernel, &by_elementary, &blocks));

    // (1 + x_i y_j) / (1 + a_i y_j)
    let mut plus = XPoly::one(lay.total);
    for i in 0..n {
        for j in 0..n {
            plus = lay.cut(&plus, &XPoly::one(lay.total).add(&lay.var(x, i).mul(&lay.var(y, j))), y);
            plus = lay.cut(&plus, &geometric(lay.total, n + j, &-APoly::var(i as i32 + 1), lay.degree), y);
        }
    }

    let conjugate = lay.sum(
        short.iter().map(|l| {
            let dual = dual_schur(&l.conjugate(), degree, DualSchurMethod::Flagged).expect("degree covers the partition");
            (lay.place(&double_schur_tableau(l, n), x), lay.series(&dual.dualize(), y))
        }),
        y,
    );
    out.push(IdentityCheck::compare("double Schur and conjugate dual Schur", &plus, &conjugate, &blocks));

    let elementary = lay.sum(
        short.iter().map(|l| {
            let m_hat = dual_monomial_xpoly(l, MonomialParameters::Dual, n, lay.total, n, degree);
            (lay.place(&double_ehp_product(EhpKind::E, l, n), x), m_hat)
        }),
        y,
    );
    out.push(IdentityCheck::compare("double elementary and dual monomial", &plus, &elementary, &blocks));

    let signed_power = lay.sum(
        parts.iter().map(|l| {
            let z = &epsilon(l) * &z_lambda(l).recip().expect("z_λ is positive");
            let left = lay.place(&double_ehp_product(EhpKind::P, l, n), x).scale(&APoly::constant(z));
            (left, lay.place(&power_sums(l, n), y))
        }),
        y,
    );
    out.push(IdentityCheck::compare("signed double power sums", &plus, &signed_power, &blocks));

    let by_dual_elementary = lay.sum(
        parts.iter().map(|l| (m_x[l].clone(), lay.series(&dual_product(DualKind::E, l, degree).dualize(), y))),
        y,
    );
    out.push(IdentityCheck::compare("double monomial and dual elementary", &plus, &by_dual_elementary, &blocks));

    // ŝ_λ(y‖a) = Σ_μ K̂_{λμ}(a) m̂_μ(y‖a)
    let mut first = None;
    for l in &short {
        let dual = dual_schur(l, degree, DualSchurMethod::Flagged).expect("degree covers the partition");
        let lhs = lay.series(&dual, y);
        let mut rhs = XPoly::zero(lay.total);
        for mu in parts.iter().filter(|m| m.size() >= l.size()) {
            let k = kostka_dual(l, mu, KostkaDualMethod::LrChain)?;
            if !k.is_zero() {
                rhs = rhs.add(&dual_monomial_xpoly(mu, MonomialParameters::Plain, n, lay.total, n, degree).scale(&k));
            }
        }
        let check = IdentityCheck::compare("dual Schur in dual monomials", &lhs, &rhs, &blocks);
        if !check.holds() {
            first = Some(check);
            break;
        }
    }
    out.push(first.unwrap_or(IdentityCheck { name: "dual Schur in dual monomials", first_difference: None }));
    Ok(out)
}

/// The identities with two alphabets `x/y` on the double side and `z` on
/// the dual side.
pub fn super_kernel_checks(n: usize, degree: usize) -> Vec<IdentityCheck> {
    let lay = Layout { n, total: 3 * n, degree: degree as u32 };
    let (x, y, z) = (0, 1, 2);
    let blocks = [lay.block(x), lay.block(y), lay.block(z)];
    let parts = Partition::all_up_to(degree);
    let supers: Vec<(Partition, XPoly)> = parts
        .iter()
        .map(|l| (l.clone(), lay.place_pair(&supersymmetric_schur(&SkewShape::straight(l.clone()), n, n, SuperOrder::A))))
        .filter(|(_, p)| !p.is_zero())
        .collect();

    // (1 + y_i z_j) / (1 - x_i z_j)
    let kernel = lay.kernel(x, z, |i, j| XPoly::one(lay.total).add(&lay.var(y, i).mul(&lay.var(z, j))));
    let rhs = lay.sum(
        supers.iter().map(|(l, s)| {
            let dual = dual_schur(l, degree, DualSchurMethod::Flagged).expect("degree covers the partition");
            (s.clone(), lay.series(&dual, z))
        }),
        z,
    );
    let mut out = vec![IdentityCheck::compare("supersymmetric and dual Schur", &kernel, &rhs, &blocks)];

    // (1 + x_i z_j) / (1 - y_i z_j)
    let kernel = lay.kernel(y, z, |i, j| XPoly::one(lay.total).add(&lay.var(x, i).mul(&lay.var(z, j))));
    let rhs = lay.sum(
        supers.iter().map(|(l, s)| {
            let dual = dual_schur(&l.conjugate(), degree, DualSchurMethod::Flagged).expect("degree covers the partition");
            (s.clone(), lay.series(&dual.dualize(), z))
        }),
        z,
    );
    out.push(IdentityCheck::compare("supersymmetric and conjugate dual Schur", &kernel, &rhs, &blocks));
    out
}

/// The pairing `⟨s_λ(x‖a), ŝ_μ(y‖a)⟩ = δ_{λμ}`, evaluated by expanding the
/// first argument in the `h_ρ(x‖a)` and the second in the `m̂_ρ(y‖a)`, which
/// are dual by the kernel identity.
pub struct Pairing {
    degree: usize,
    complete: BTreeMap<Partition, DoubleSym>,
    monomials: BTreeMap<Partition, XPoly>,
}

impl Pairing {
    /// Tables for arguments of degree at most `degree`.
    pub fn new(degree: usize) -> Result<Self, TransitionError> {
        let n = degree.max(1);
        let mut complete = BTreeMap::new();
        let mut monomials = BTreeMap::new();
        for rho in Partition::all_up_to(degree) {
            let h = expand_in_double_schur(&double_ehp_product(EhpKind::H, &rho, n), ExpandMethod::Elimination)?;
            complete.insert(rho.clone(), h);
            monomials.insert(rho.clone(), dual_monomial_xpoly(&rho, MonomialParameters::Plain, n, n, 0, degree));
        }
        Ok(Pairing { degree, complete, monomials })
    }

    /// `u = Σ A_ρ h_ρ(x‖a)`.
    pub fn complete_coefficients(&self, u: &DoubleSym) -> BTreeMap<Partition, APoly> {
        let n = self.degree.max(1);
        let mut rest = DoubleSym::from_coeffs(n, u.coeffs().map(|(l, c)| (l.clone(), c.clone())));
        let mut out = BTreeMap::new();
        while let Some(lam) = rest.coeffs().map(|(l, _)| l.clone()).min_by(|p, q| q.size().cmp(&p.size()).then(p.cmp(q))) {
            let c = rest.coefficient(&lam);
            rest = rest.add(&self.complete[&lam].scale(&-c.clone()));
            out.insert(lam, c);
        }
        out
    }

    /// `v = Σ B_ρ m̂_ρ(y‖a)` up to the table degree.
    pub fn monomial_coefficients(&self, v: &SchurSeries) -> BTreeMap<Partition, APoly> {
        let n = self.degree.max(1);
        let classical = v.to_classical().truncate(self.degree);
        let mut rest = classical_to_xpoly(&classical, n, n, 0).expect("classical-basis series");
        let mut out = BTreeMap::new();
        while let Some((e, c)) = rest
            .dominant_terms(core::slice::from_ref(&(0..n)))
            .into_iter()
            .min_by(|p, q| p.0.degree().cmp(&q.0.degree()).then_with(|| p.0.cmp(&q.0)))
        {
            let rho = Partition::new(e.as_slice(n).iter().map(|&k| k as usize).collect()).expect("dominant exponent");
            rest = rest.sub(&self.monomials[&rho].scale(&c));
            out.insert(rho, c);
        }
        out
    }

    pub fn pair(&self, u: &DoubleSym, v: &SchurSeries) -> APoly {
        let left = self.complete_coefficients(u);
        let right = self.monomial_coefficients(v);
        left.iter().filter_map(|(rho, c)| right.get(rho).map(|d| c * d)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::omega_hat;

    fn assert_all(checks: &[IdentityCheck]) {
        for c in checks {
            assert!(c.holds(), "{}: {:?}", c.name, c.first_difference);
        }
    }

    #[test]
    fn rearrangements_are_distinct() {
        assert_eq!(rearrangements(&[2, 1], 3).len(), 6);
        assert_eq!(rearrangements(&[1, 1], 3), [[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert_eq!(rearrangements(&[], 2), [[0, 0]]);
    }

    #[test]
    fn kernels_in_two_variables() {
        assert_all(&cauchy_check(2, 4).unwrap());
    }

    #[test]
    fn kernels_in_one_variable() {
        assert_all(&cauchy_check(1, 5).unwrap());
    }

    #[test]
    fn wrong_sides_are_detected() {
        let lay = Layout { n: 1, total: 2, degree: 3 };
        let k = lay.kernel(0, 1, |_, _| XPoly::one(2));
        let check = IdentityCheck::compare("plain", &k, &XPoly::one(2), &[0..1, 1..2]);
        assert!(!check.holds());
    }

    fn basis_elements(degree: usize) -> Vec<(Partition, DoubleSym, SchurSeries)> {
        Partition::all_up_to(degree)
            .into_iter()
            .map(|l| {
                let s = DoubleSym::basis(l.clone(), degree.max(1));
                let hat = dual_schur(&l, degree, DualSchurMethod::Flagged).unwrap();
                (l, s, hat)
            })
            .collect()
    }

    #[test]
    fn pairing_is_orthonormal() {
        let degree = 3;
        let pairing = Pairing::new(degree).unwrap();
        let elements = basis_elements(degree);
        let monomials = double_monomials(degree);
        for (l, s, _) in &elements {
            for (m, _, hat) in &elements {
                let want = if l == m { APoly::one() } else { APoly::zero() };
                assert_eq!(pairing.pair(s, hat), want, "{l} {m}");
                let h = dual_product(DualKind::H, m, degree);
                assert_eq!(pairing.pair(&monomials[l], &h), want, "{l} {m}");
                let e = dual_product(DualKind::E, m, degree);
                assert_eq!(pairing.pair(&monomials[l].omega_a(), &e), want, "{l} {m}");
                let pl = expand_in_double_schur(&double_ehp_product(EhpKind::P, l, degree), ExpandMethod::Elimination).unwrap();
                let pm = crate::series::classical_expansion(&power_sums(m, degree), degree).unwrap();
                let want = if l == m { APoly::constant(z_lambda(l)) } else { APoly::zero() };
                assert_eq!(pairing.pair(&pl, &pm), want, "{l} {m}");
            }
        }
    }

    #[test]
    fn omega_maps_are_adjoint() {
        let degree = 3;
        let pairing = Pairing::new(degree).unwrap();
        let elements = basis_elements(degree);
        let monomials = double_monomials(degree);
        for (l, s, _) in &elements {
            for (m, _, hat) in &elements {
                let powers = crate::series::classical_expansion(&power_sums(m, degree), degree).unwrap();
                for (u, v) in [(s, hat), (&monomials[l], &powers)] {
                    let left = pairing.pair(&u.omega_a(), &omega_hat(v).unwrap().dualize()).dualize();
                    assert_eq!(left, pairing.pair(u, v), "{l} {m}");
                }
            }
        }
    }
}
