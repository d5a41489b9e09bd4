//! Double Schur polynomials and their relatives at a finite number of variables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::apoly::{APoly, AlgebraError};
use crate::partition::{Cell, Partition, SkewShape};
use crate::ring::det;
use crate::tableaux::{visit_fillings, FillingRule, SuperOrder, TableauFamily};
use crate::xpoly::{XExp, XPoly};

/// Sum over fillings of products of per-cell factors.
///
/// Factors are memoised by `(content, entry)`.
pub fn weighted_sum<R, F>(shape: &SkewShape, rule: &R, n: usize, factor: F) -> XPoly
where
    R: FillingRule + ?Sized,
    F: FnMut(i32, i32) -> XPoly,
{
    weighted_sum_truncated(shape, rule, n, None, factor)
}

/// [`weighted_sum`] dropping every term of total degree above `max_degree`.
pub fn weighted_sum_truncated<R, F>(shape: &SkewShape, rule: &R, n: usize, max_degree: Option<u32>, mut factor: F) -> XPoly
where
    R: FillingRule + ?Sized,
    F: FnMut(i32, i32) -> XPoly,
{
    let mut cache: BTreeMap<(i32, i32), XPoly> = BTreeMap::new();
    let mut total = XPoly::zero(n);
    let mut flat = Vec::new();
    visit_fillings(
        shape,
        rule,
        XPoly::one(n),
        |acc: &XPoly, cell: Cell, v| {
            let f = cache.entry((cell.content(), v)).or_insert_with(|| factor(cell.content(), v));
            let next = match max_degree {
                Some(max) => acc.mul_truncated(f, 0..n, max),
                None => acc.mul(f),
            };
            (!next.is_zero()).then_some(next)
        },
        |_, acc| {
            for (e, c) in acc.terms() {
                flat.extend(c.terms().map(|(m, r)| (*e, m.clone(), r.clone())));
            }
            if flat.len() > FLUSH {
                total = total.add(&XPoly::from_flat_terms(n, core::mem::take(&mut flat)));
            }
        },
    );
    total.add(&XPoly::from_flat_terms(n, flat))
}

const FLUSH: usize = 1 << 16;

fn a(i: i32) -> APoly {
    APoly::var(i)
}

/// `s_λ(x‖a)` as a sum over reverse tableaux with entries `≤ n`.
pub fn double_schur_tableau(lambda: &Partition, n: usize) -> XPoly {
    tilde_skew_double_schur(&SkewShape::straight(lambda.clone()), n)
}

/// The non-stable skew polynomial `s̃_θ(x‖a)`: reverse θ-tableaux, entries `≤ n`.
pub fn tilde_skew_double_schur(theta: &SkewShape, n: usize) -> XPoly {
    let fam = TableauFamily::Reverse { max: n as u32 };
    weighted_sum(theta, &fam, n, |c, t| XPoly::var_minus(n, t as usize - 1, &a(t - c)))
}

/// `s_λ(x‖a)` as `A_{λ+δ}(x‖a) / A_δ(x)`; zero when `ℓ(λ) > n`.
pub fn double_schur_alternant(lambda: &Partition, n: usize) -> Result<XPoly, AlgebraError> {
    if lambda.len() > n {
        return Ok(XPoly::zero(n));
    }
    // (x_i‖a)^r = (x_i - a_n)(x_i - a_{n-1})…(x_i - a_{n-r+1})
    let falling = |i: usize, r: usize| -> XPoly {
        (0..r).fold(XPoly::one(n), |acc, k| acc.mul(&XPoly::var_minus(n, i, &a(n as i32 - k as i32))))
    };
    let m: Vec<Vec<XPoly>> = (0..n)
        .map(|i| (1..=n).map(|j| falling(i, lambda.part(j) + n - j)).collect())
        .collect();
    det(&m, XPoly::one(n)).div_by_vandermonde()
}

/// Which double family to build in [`double_ehp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhpKind {
    E,
    H,
    P,
}

/// `e_k`, `h_k` or `p_k` in `x_1..x_n` with `a` replaced by `τ^shift a`.
pub fn double_ehp(kind: EhpKind, k: usize, n: usize, shift: i32) -> XPoly {
    let base = match kind {
        EhpKind::E => double_schur_tableau(&Partition::column(k), n),
        EhpKind::H => double_schur_tableau(&Partition::row(k), n),
        EhpKind::P => {
            if k == 0 {
                // the empty power sum is the unit, matching p_∅ = 1
                return XPoly::one(n);
            }
            (0..n).fold(XPoly::zero(n), |acc, i| {
                let xk = XPoly::var(n, i).pow(k as u32);
                acc.add(&xk.sub(&XPoly::constant(n, a(i as i32 + 1).pow(k as u32))))
            })
        }
    };
    base.map_coeffs(|c| c.shift(shift))
}

/// Product `∏ f_{λ_i}` of one-index families, e.g. `h_λ`.
pub fn double_ehp_product(kind: EhpKind, lambda: &Partition, n: usize) -> XPoly {
    lambda.parts().iter().fold(XPoly::one(n), |acc, &k| acc.mul(&double_ehp(kind, k, n, 0)))
}

fn ehp_or_zero(kind: EhpKind, k: i64, n: usize, shift: i32) -> XPoly {
    if k < 0 {
        XPoly::zero(n)
    } else {
        double_ehp(kind, k as usize, n, shift)
    }
}

/// `det[h_{λ_i-i+j}(x‖τ^{j-1}a)]`.
pub fn jacobi_trudi(lambda: &Partition, n: usize) -> XPoly {
    let l = lambda.len();
    let m: Vec<Vec<XPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| ehp_or_zero(EhpKind::H, lambda.part(i) as i64 - i as i64 + j as i64, n, j as i32 - 1))
                .collect()
        })
        .collect();
    det(&m, XPoly::one(n))
}

/// `det[e_{λ'_i-i+j}(x‖τ^{-j+1}a)]`.
pub fn nagelsbach_kostka(lambda: &Partition, n: usize) -> XPoly {
    let conj = lambda.conjugate();
    let l = conj.len();
    let m: Vec<Vec<XPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| ehp_or_zero(EhpKind::E, conj.part(i) as i64 - i as i64 + j as i64, n, 1 - j as i32))
                .collect()
        })
        .collect();
    det(&m, XPoly::one(n))
}

/// Semistandard sum `Σ_T ∏ (x_{T(α)} - u_{T(α)+c(α)})` with an explicit sequence `u`.
pub(crate) fn factorial_schur_with<U: Fn(i32) -> APoly>(theta: &SkewShape, n: usize, u: U) -> XPoly {
    let fam = TableauFamily::Semistandard { max: n as u32 };
    weighted_sum(theta, &fam, n, |c, t| XPoly::var_minus(n, t as usize - 1, &u(t + c)))
}

/// `s_θ(x|u)` with `u_i = a_{n-i+1}`.
pub fn factorial_schur(theta: &SkewShape, n: usize) -> XPoly {
    factorial_schur_with(theta, n, |i| a(n as i32 - i + 1))
}

/// Methods for [`skew_double_schur`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewMethod {
    SupertableauA,
    SupertableauAPrime,
    RhoSum,
}

/// The stable skew double Schur polynomial `s_θ(x‖a)` in `n` variables.
pub fn skew_double_schur(theta: &SkewShape, n: usize, method: SkewMethod) -> XPoly {
    match method {
        SkewMethod::SupertableauA | SkewMethod::SupertableauAPrime => {
            let (order, off) = if method == SkewMethod::SupertableauA { (SuperOrder::A, 1) } else { (SuperOrder::APrime, 0) };
            let fam = TableauFamily::Super { order, n: n as u32 };
            weighted_sum(theta, &fam, n, |c, code| {
                let s = order.decode(n as u32, code);
                let base = a(off - c);
                if s.primed {
                    XPoly::constant(n, &base - &a(s.index as i32))
                } else {
                    XPoly::var_minus(n, s.index as usize - 1, &base)
                }
            })
        }
        SkewMethod::RhoSum => {
            let (outer, inner) = (theta.outer(), theta.inner());
            let mut total = XPoly::zero(n);
            for rho in outer.subpartitions().into_iter().filter(|r| r.contains(inner)) {
                let left = tilde_skew_double_schur(&SkewShape::new(outer.clone(), rho.clone()).expect("ρ ⊆ ν"), n);
                if left.is_zero() {
                    continue;
                }
                // s_{ρ'/μ'}(y|-a) at y = -a^{(n)}
                let right_shape = SkewShape::new(rho.conjugate(), inner.conjugate()).expect("μ ⊆ ρ");
                let right = factorial_schur_with(&right_shape, n, |i| -a(i));
                let point: Vec<APoly> = (1..=n as i32).map(|i| -a(i)).collect();
                let value = right.evaluate_at(&point);
                total = total.add(&left.scale(&value));
            }
            total
        }
    }
}

/// Supersymmetric `s_θ(x/y‖a)` in `x_1..x_{nx}, y_1..y_{ny}` (y-variables follow the x-variables).
pub fn supersymmetric_schur(theta: &SkewShape, nx: usize, ny: usize, order: SuperOrder) -> XPoly {
    let n = nx + ny;
    let m = nx.max(ny) as u32;
    let off = match order {
        SuperOrder::A => 1,
        SuperOrder::APrime => 0,
        SuperOrder::Barred => panic!("the barred order is not a supersymmetric ordering"),
    };
    let fam = TableauFamily::Super { order, n: m };
    weighted_sum(theta, &fam, n, |c, code| {
        let s = order.decode(m, code);
        let base = a(off - c);
        let i = s.index as usize;
        if s.primed {
            if i > ny {
                return XPoly::constant(n, base);
            }
            XPoly::var(n, nx + i - 1).add(&XPoly::constant(n, base))
        } else {
            if i > nx {
                return XPoly::constant(n, -base);
            }
            XPoly::var_minus(n, i - 1, &base)
        }
    })
}

/// `s_{ν/μ}(x/y‖a) = Σ_ρ s̃_{ν/ρ}(x‖a) s_{ρ'/μ'}(y|-a)` with `nx = ny = n`.
pub fn supersymmetric_schur_rho_sum(theta: &SkewShape, n: usize) -> XPoly {
    let (outer, inner) = (theta.outer(), theta.inner());
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let mut total = XPoly::zero(2 * n);
    for rho in outer.subpartitions().into_iter().filter(|r| r.contains(inner)) {
        let left = tilde_skew_double_schur(&SkewShape::new(outer.clone(), rho.clone()).expect("ρ ⊆ ν"), n);
        let right_shape = SkewShape::new(rho.conjugate(), inner.conjugate()).expect("μ ⊆ ρ");
        let right = factorial_schur_with(&right_shape, n, |i| -a(i));
        total = total.add(&left.relabel(&xs, 2 * n).mul(&right.relabel(&ys, 2 * n)));
    }
    total
}

/// The point `a_ρ = (a_{1-ρ_1}, …, a_{n-ρ_n})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPoint(pub Vec<APoly>);

impl EvalPoint {
    pub fn a_mu(mu: &Partition, n: usize) -> Self {
        EvalPoint(mu.a_mu_indices(n).into_iter().map(a).collect())
    }
}

pub fn evaluate_at(p: &XPoly, point: &EvalPoint) -> APoly {
    p.evaluate_at(&point.0)
}

/// `s_λ(a_ρ‖a)` by summing tableau weights at the point directly.
pub fn double_schur_at(lambda: &Partition, rho: &Partition) -> APoly {
    let n = lambda.len().max(rho.len());
    if !rho.contains(lambda) {
        return APoly::zero();
    }
    let fam = TableauFamily::Reverse { max: n as u32 };
    let shape = SkewShape::straight(lambda.clone());
    let mut total = APoly::zero();
    visit_fillings(
        &shape,
        &fam,
        APoly::one(),
        |acc, cell, t| {
            let x = t - rho.part(t as usize) as i32;
            if x == t - cell.content() {
                return None;
            }
            Some(acc * &APoly::diff(x, t - cell.content()))
        },
        |_, w| total = &total + w,
    );
    total
}

/// `∏_{(i,j)∈λ} (a_{i-λ_i} - a_{λ'_j-j+1})`.
pub fn hook_value(lambda: &Partition) -> APoly {
    let conj = lambda.conjugate();
    lambda
        .cells()
        .into_iter()
        .map(|c| {
            let (i, j) = (c.row + 1, c.col + 1);
            APoly::diff(i as i32 - lambda.part(i) as i32, conj.part(j) as i32 - j as i32 + 1)
        })
        .product()
}

/// Classical Schur polynomial `s_λ(x_1..x_n)` from semistandard tableaux.
pub fn classical_schur(theta: &SkewShape, n: usize) -> XPoly {
    let fam = TableauFamily::Semistandard { max: n as u32 };
    let mut counts: BTreeMap<XExp, i64> = BTreeMap::new();
    visit_fillings(theta, &fam, (), |_, _, _| Some(()), |entries, _| {
        let mut e = [0u8; crate::xpoly::MAX_VARS];
        for &v in entries {
            e[v as usize - 1] += 1;
        }
        *counts.entry(XExp::from_slice(&e[..n])).or_insert(0) += 1;
    });
    XPoly::from_terms(n, counts.into_iter().map(|(e, c)| (e, APoly::from_int(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::spec::ASpec;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn xm(n: usize, i: usize, j: i32) -> XPoly {
        XPoly::var_minus(n, i, &a(j))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(double_schur_tableau(&p("1"), 2), xm(2, 0, 1).add(&xm(2, 1, 2)));
        assert!(double_schur_tableau(&p("1,1,1"), 2).is_zero());
        assert_eq!(double_schur_tableau(&p("2"), 1), xm(1, 0, 1).mul(&xm(1, 0, 0)));
        assert_eq!(double_schur_alternant(&Partition::empty(), 3).unwrap(), XPoly::one(3));
        assert!(double_ehp(EhpKind::E, 2, 1, 0).is_zero());
        for n in 1..=3 {
            let h1 = double_ehp(EhpKind::H, 1, n, 0);
            assert_eq!(h1, double_ehp(EhpKind::E, 1, n, 0));
            assert_eq!(h1, double_ehp(EhpKind::P, 1, n, 0));
        }
    }

    #[test]
    fn four_methods_agree_small() {
        for lam in Partition::all_up_to(4) {
            for n in 1..=3 {
                let t = double_schur_tableau(&lam, n);
                assert_eq!(double_schur_alternant(&lam, n).unwrap(), t, "alternant {lam:?} n={n}");
                assert_eq!(jacobi_trudi(&lam, n), t, "jt {lam:?} n={n}");
                assert_eq!(nagelsbach_kostka(&lam, n), t, "nk {lam:?} n={n}");
                assert!(t.is_symmetric());
            }
        }
    }

    #[test]
    fn top_degree_is_classical() {
        for lam in Partition::all_up_to(4) {
            let n = 3;
            let t = double_schur_tableau(&lam, n);
            let classical = classical_schur(&SkewShape::straight(lam.clone()), n);
            assert_eq!(t.component(lam.size() as u32), classical);
            assert_eq!(t.map_coeffs(|c| APoly::constant(c.evaluate(&ASpec::Zero).unwrap())), classical);
        }
    }

    #[test]
    fn stability() {
        for lam in Partition::all_up_to(4) {
            for n in 2..=4 {
                let big = double_schur_tableau(&lam, n);
                let mut point: Vec<APoly> = (0..n - 1).map(|_| APoly::zero()).collect();
                point.push(a(n as i32));
                let images: Vec<XPoly> = (0..n)
                    .map(|i| if i + 1 < n { XPoly::var(n - 1, i) } else { XPoly::constant(n - 1, a(n as i32)) })
                    .collect();
                assert_eq!(big.substitute(&images, n - 1), double_schur_tableau(&lam, n - 1), "{lam:?} {n}");
            }
        }
    }

    #[test]
    fn factorial_matches_tilde() {
        for outer in Partition::all_up_to(4) {
            for inner in outer.subpartitions() {
                let th = SkewShape::new(outer.clone(), inner).unwrap();
                for n in 1..=3 {
                    assert_eq!(factorial_schur(&th, n), tilde_skew_double_schur(&th, n), "{th:?} {n}");
                }
            }
        }
        assert_eq!(factorial_schur(&sk("1"), 1), xm(1, 0, 1));
    }

    #[test]
    fn skew_methods_agree() {
        for outer in Partition::all_up_to(4) {
            for inner in outer.subpartitions() {
                let th = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                for n in 1..=3 {
                    let x = skew_double_schur(&th, n, SkewMethod::SupertableauA);
                    assert_eq!(x, skew_double_schur(&th, n, SkewMethod::SupertableauAPrime), "{th:?} {n}");
                    assert_eq!(x, skew_double_schur(&th, n, SkewMethod::RhoSum), "{th:?} {n}");
                    if inner.is_empty() {
                        assert_eq!(x, double_schur_tableau(&outer, n));
                    }
                }
            }
        }
        assert_eq!(skew_double_schur(&sk("1/1"), 2, SkewMethod::SupertableauA), XPoly::one(2));
    }

    #[test]
    fn supersymmetric_one_box() {
        let s = supersymmetric_schur(&sk("1"), 1, 1, SuperOrder::APrime);
        let expect = XPoly::var_minus(2, 0, &a(0)).add(&XPoly::var(2, 1).add(&XPoly::constant(2, a(0))));
        assert_eq!(s, expect);
    }

    fn all_skew(max: usize) -> Vec<SkewShape> {
        Partition::all_up_to(max)
            .into_iter()
            .flat_map(|o| o.subpartitions().into_iter().map(move |i| SkewShape::new(o.clone(), i).unwrap()))
            .collect()
    }

    #[test]
    fn supersymmetric_orders_and_rho_sum_agree() {
        for th in all_skew(4) {
            for n in 1..=2 {
                let s = supersymmetric_schur(&th, n, n, SuperOrder::A);
                assert_eq!(s, supersymmetric_schur(&th, n, n, SuperOrder::APrime), "{th:?} {n}");
                assert_eq!(s, supersymmetric_schur_rho_sum(&th, n), "{th:?} {n}");
            }
        }
    }

    #[test]
    fn supersymmetric_swap_and_specializations() {
        for th in all_skew(4) {
            for n in 1..=2 {
                let s = supersymmetric_schur(&th, n, n, SuperOrder::A);
                let swap: Vec<usize> = (n..2 * n).chain(0..n).collect();
                let other = supersymmetric_schur(&th.conjugate(), n, n, SuperOrder::A)
                    .map_coeffs(|c| c.dualize())
                    .relabel(&swap, 2 * n);
                assert_eq!(s, other, "swap {th:?} {n}");
                // y_i = -a_i
                let images: Vec<XPoly> =
                    (0..n).map(|i| XPoly::var(n, i)).chain((1..=n as i32).map(|i| XPoly::constant(n, -a(i)))).collect();
                assert_eq!(s.substitute(&images, n), skew_double_schur(&th, n, SkewMethod::RhoSum), "y=-a {th:?}");
                // x_i = -a'_i = a_{1-i}
                let images: Vec<XPoly> =
                    (1..=n as i32).map(|i| XPoly::constant(n, a(1 - i))).chain((0..n).map(|i| XPoly::var(n, i))).collect();
                let expect = skew_double_schur(&th.conjugate(), n, SkewMethod::SupertableauA).map_coeffs(|c| c.dualize());
                assert_eq!(s.substitute(&images, n), expect, "x=-a' {th:?}");
            }
        }
    }

    #[test]
    fn vanishing_and_hook_values() {
        for rho in Partition::all_up_to(5) {
            for lam in Partition::all_up_to(5) {
                let direct = double_schur_at(&lam, &rho);
                if !rho.contains(&lam) {
                    assert!(direct.is_zero());
                }
                if lam == rho {
                    assert_eq!(direct, hook_value(&lam), "{lam:?}");
                }
            }
        }
        let n = 3;
        let s1 = double_schur_tableau(&p("1"), n);
        assert_eq!(evaluate_at(&s1, &EvalPoint::a_mu(&p("1"), n)), APoly::diff(0, 1));
        let s21 = double_schur_tableau(&p("2,1"), n);
        assert_eq!(evaluate_at(&s21, &EvalPoint::a_mu(&p("2,1"), n)), hook_value(&p("2,1")));
        assert_eq!(
            evaluate_at(&s21, &EvalPoint::a_mu(&p("3,1"), n)),
            double_schur_at(&p("2,1"), &p("3,1"))
        );
    }

    #[test]
    fn generating_functions() {
        // series in t, stored as an extra last variable; compared up to t^K
        let k_max = 5u32;
        for n in 1..=3usize {
            let m = n + 1;
            let t = XPoly::var(m, n);
            let lift = |p: &XPoly| p.relabel(&(0..n).collect::<Vec<_>>(), m);
            let trunc = |p: &XPoly, q: &XPoly| p.mul_truncated(q, n..m, k_max);
            let geometric = |c: XPoly| -> XPoly {
                // 1/(1 - c t) up to t^K
                let ct = trunc(&c, &t);
                (1..=k_max).fold((XPoly::one(m), XPoly::one(m)), |(acc, pw), _| {
                    let pw = trunc(&pw, &ct);
                    (acc.add(&pw), pw)
                })
                .0
            };
            let cst = |p: APoly| XPoly::constant(m, p);
            // Σ e_k t^k / ∏_{i≤k}(1+a_i t) = ∏ (1+x_i t)/(1+a_i t)
            let mut lhs = XPoly::one(m);
            for k in 1..=k_max as usize {
                let mut term = trunc(&lift(&double_ehp(EhpKind::E, k, n, 0)), &t.pow(k as u32));
                for i in 1..=k as i32 {
                    term = trunc(&term, &geometric(cst(-a(i))));
                }
                lhs = lhs.add(&term);
            }
            let mut rhs = XPoly::one(m);
            for i in 0..n {
                let num = XPoly::one(m).add(&trunc(&XPoly::var(m, i), &t));
                rhs = trunc(&trunc(&rhs, &num), &geometric(cst(-a(i as i32 + 1))));
            }
            assert_eq!(lhs, rhs, "e-series n={n}");
            // Σ h_k t^k / ∏_{j=0}^{k-1}(1-a_{-j} t) = ∏ (1-a_i t)/(1-x_i t)
            let mut lhs = XPoly::one(m);
            for k in 1..=k_max as usize {
                let mut term = trunc(&lift(&double_ehp(EhpKind::H, k, n, 0)), &t.pow(k as u32));
                for j in 0..k as i32 {
                    term = trunc(&term, &geometric(cst(a(-j))));
                }
                lhs = lhs.add(&term);
            }
            let mut rhs = XPoly::one(m);
            for i in 0..n {
                let num = XPoly::one(m).sub(&trunc(&cst(a(i as i32 + 1)), &t));
                rhs = trunc(&trunc(&rhs, &num), &geometric(XPoly::var(m, i)));
            }
            assert_eq!(lhs, rhs, "h-series n={n}");
        }
    }

    #[test]
    fn numeric_evaluation_matches_symbolic() {
        let s = double_schur_tableau(&p("2,1"), 2);
        let spec = ASpec::Generic { seed: 3 };
        let x = [Rational::new(1, 3), Rational::from_int(-2)];
        let sym = s.evaluate_at(&[APoly::constant(x[0].clone()), APoly::constant(x[1].clone())]);
        assert_eq!(sym.evaluate(&spec).unwrap(), s.evaluate_numeric(&x, &spec).unwrap());
    }
}
