//! Flagged Schur polynomials `φ_{λ/μ}(a)` and `ψ_{λ/μ}(a)`: the transition
//! coefficients between dual Schur series and classical Schur functions.

use alloc::vec::Vec;

use crate::apoly::{complete, elementary, var_range, APoly};
use crate::partition::{Partition, SkewShape};
use crate::ring::det;
use crate::tableaux::{visit_fillings, TableauFamily};

/// `λ ⊇ μ` with the same number of diagonal boxes.
pub fn same_diagonal(theta: &SkewShape) -> bool {
    theta.outer().diagonal_count() == theta.inner().diagonal_count()
}

/// Boxes of `λ/μ` below row `d`.
pub fn lower_boxes(theta: &SkewShape) -> usize {
    let d = theta.inner().diagonal_count();
    theta.cells().iter().filter(|c| c.row >= d).count()
}

/// Boxes of `λ/μ` in rows `1..=d`.
pub fn upper_boxes(theta: &SkewShape) -> usize {
    theta.size() - lower_boxes(theta)
}

fn sign(k: usize) -> APoly {
    APoly::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `Σ_T ∏ a_{T(α)}` over fillings of a family.
pub fn tableau_weight_sum(shape: &SkewShape, family: &TableauFamily) -> APoly {
    let mut total = APoly::zero();
    visit_fillings(shape, family, (), |_, _, _| Some(()), |entries, _| {
        total = &total + &entries.iter().map(|&v| APoly::var(v)).product::<APoly>();
    });
    total
}

/// `φ_{λ/μ}(a)` over hook tableaux; zero unless the diagonals agree.
pub fn phi(theta: &SkewShape) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    tableau_weight_sum(theta, &TableauFamily::Hook { inner: theta.inner().clone() })
}

/// `ψ_{λ/μ}(a)` over dual hook tableaux; zero unless the diagonals agree.
pub fn psi(theta: &SkewShape) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    tableau_weight_sum(theta, &TableauFamily::DualHook { outer: theta.outer().clone() })
}

/// Rows `1..=d` of `λ/μ`.
pub fn upper_part(theta: &SkewShape) -> SkewShape {
    let d = theta.inner().diagonal_count();
    let cut = |p: &Partition| Partition::new(p.parts().iter().take(d).copied().collect()).expect("prefix of a partition");
    SkewShape::new(cut(theta.outer()), cut(theta.inner())).expect("prefix keeps containment")
}

/// Rows `d+1, d+2, …` of `λ/μ`, kept in place by filling the upper rows of the inner shape.
pub fn lower_part(theta: &SkewShape) -> SkewShape {
    let d = theta.inner().diagonal_count();
    let inner: Vec<usize> = (1..=theta.outer().len())
        .map(|i| if i <= d { theta.outer().part(i) } else { theta.inner().part(i) })
        .collect();
    SkewShape::new(theta.outer().clone(), Partition::from_unsorted(inner)).expect("lower rows of a skew shape")
}

/// `φ_{(λ/μ)_+}(a)`, hook tableau sum restricted to the upper rows.
pub fn phi_upper(theta: &SkewShape) -> APoly {
    tableau_weight_sum(&upper_part(theta), &TableauFamily::Hook { inner: theta.inner().clone() })
}

/// The same polynomial as [`phi_upper`] from the column-flagged family.
pub fn phi_upper_flagged(theta: &SkewShape) -> APoly {
    tableau_weight_sum(&upper_part(theta), &TableauFamily::FlaggedTop { inner: theta.inner().clone() })
}

/// `ψ_{(λ/μ)_-}(a)`, dual hook tableau sum restricted to the lower rows.
pub fn psi_lower(theta: &SkewShape) -> APoly {
    tableau_weight_sum(&lower_part(theta), &TableauFamily::DualHook { outer: theta.outer().clone() })
}

/// The same polynomial as [`psi_lower`] from the row-flagged family.
pub fn psi_lower_flagged(theta: &SkewShape) -> APoly {
    tableau_weight_sum(&lower_part(theta), &TableauFamily::FlaggedBottom { outer: theta.outer().clone() })
}

/// Which presentation to use for `φ` and `ψ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlaggedMethod {
    /// Hook or dual hook tableaux on the whole shape.
    Tableau,
    /// Product of the upper part and the dualized conjugate upper part.
    Factorized,
    /// As `Factorized`, with the row/column-flagged alternative families.
    AltFlagged,
    /// Products of two flagged determinants.
    Determinant,
}

pub fn phi_by(theta: &SkewShape, method: FlaggedMethod) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    let conj = theta.conjugate();
    match method {
        FlaggedMethod::Tableau => phi(theta),
        FlaggedMethod::Factorized => sign(lower_boxes(theta)) * phi_upper(theta) * phi_upper(&conj).dualize(),
        FlaggedMethod::AltFlagged => {
            sign(lower_boxes(theta)) * phi_upper_flagged(theta) * phi_upper_flagged(&conj).dualize()
        }
        FlaggedMethod::Determinant => phi_determinant(theta),
    }
}

pub fn psi_by(theta: &SkewShape, method: FlaggedMethod) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    let conj = theta.conjugate();
    match method {
        FlaggedMethod::Tableau => psi(theta),
        FlaggedMethod::Factorized => sign(upper_boxes(theta)) * psi_lower(theta) * psi_lower(&conj).dualize(),
        FlaggedMethod::AltFlagged => {
            sign(upper_boxes(theta)) * psi_lower_flagged(theta) * psi_lower_flagged(&conj).dualize()
        }
        FlaggedMethod::Determinant => psi_determinant(theta),
    }
}

fn block_det<F: Fn(usize, usize) -> APoly>(rows: core::ops::RangeInclusive<usize>, entry: F) -> APoly {
    let idx: Vec<usize> = rows.collect();
    let m: Vec<Vec<APoly>> = idx.iter().map(|&i| idx.iter().map(|&j| entry(i, j)).collect()).collect();
    det(&m, APoly::one())
}

fn offset(lambda: &Partition, mu: &Partition, i: usize, j: usize) -> i64 {
    lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64
}

fn ek(vars: &[APoly], k: i64) -> APoly {
    if k < 0 { APoly::zero() } else { elementary(vars, k as usize) }
}

fn hk(vars: &[APoly], k: i64) -> APoly {
    if k < 0 { APoly::zero() } else { complete(vars, k as usize) }
}

/// `a_from, …, a_to` stepping toward `to`, empty when the list would be
/// shorter than one element in the stated direction.
fn run(from: i32, to: i32, descending: bool) -> Vec<APoly> {
    if (descending && to > from) || (!descending && to < from) {
        Vec::new()
    } else {
        var_range(from, to)
    }
}

/// `det[h(a_0, …, a_{j-μ_j})]_{1..d} · det[e(a_1, …, a_{j-μ_j-1})]_{d+1..ℓ(λ)}`.
pub fn phi_determinant(theta: &SkewShape) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    let (lambda, mu) = (theta.outer(), theta.inner());
    let d = mu.diagonal_count();
    let top = block_det(1..=d, |i, j| hk(&run(0, j as i32 - mu.part(j) as i32, true), offset(lambda, mu, i, j)));
    let bottom = block_det(d + 1..=lambda.len(), |i, j| {
        ek(&run(1, j as i32 - mu.part(j) as i32 - 1, false), offset(lambda, mu, i, j))
    });
    top * bottom
}

/// `det[e(a_0, …, a_{i-λ_i+1})]_{1..d} · det[h(a_1, …, a_{i-λ_i})]_{d+1..ℓ(λ)}`.
pub fn psi_determinant(theta: &SkewShape) -> APoly {
    if !same_diagonal(theta) {
        return APoly::zero();
    }
    let (lambda, mu) = (theta.outer(), theta.inner());
    let d = mu.diagonal_count();
    let top = block_det(1..=d, |i, j| ek(&run(0, i as i32 - lambda.part(i) as i32 + 1, true), offset(lambda, mu, i, j)));
    let bottom = block_det(d + 1..=lambda.len(), |i, j| {
        hk(&run(1, i as i32 - lambda.part(i) as i32, false), offset(lambda, mu, i, j))
    });
    top * bottom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn a(i: i32) -> APoly {
        APoly::var(i)
    }

    fn all_same_diagonal(max: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for lam in Partition::all_up_to(max) {
            for mu in lam.subpartitions() {
                let th = SkewShape::new(lam.clone(), mu).unwrap();
                if same_diagonal(&th) {
                    out.push(th);
                }
            }
        }
        out
    }

    #[test]
    fn empty_shapes_give_one() {
        for lam in Partition::all_up_to(4) {
            let th = SkewShape::new(lam.clone(), lam.clone()).unwrap();
            assert!(phi(&th).is_one());
            assert!(psi(&th).is_one());
        }
        assert!(phi(&sk("1")).is_zero());
    }

    #[test]
    fn one_box_hooks() {
        // s_{(1|1)} over s_{(0|0)}: one box right (a_0) and one below (a_1)
        assert_eq!(phi(&sk("2,1/1")), a(0) * a(1));
        assert_eq!(psi(&sk("2/1")), a(0));
        assert_eq!(psi(&sk("1,1/1")), a(1));
        // hooks: φ = h_p(a_0..a_{-α}) h_q(a_1..a_{β+1}), ψ = e_p(a_0..) e_q(a_1..)
        for (al, be) in [(0usize, 0usize), (1, 0), (0, 1), (1, 1)] {
            for p in 0..3 {
                for q in 0..3 {
                    let outer = crate::partition::FrobeniusCoords::hook(al + p, be + q).to_partition();
                    let inner = crate::partition::FrobeniusCoords::hook(al, be).to_partition();
                    let th = SkewShape::new(outer, inner).unwrap();
                    let expect = complete(&var_range(0, -(al as i32)), p) * complete(&var_range(1, be as i32 + 1), q);
                    assert_eq!(phi(&th), expect, "φ {al} {be} {p} {q}");
                    let expect = elementary(&run(0, 1 - (al + p) as i32, true), p)
                        * elementary(&run(1, (be + q) as i32, false), q);
                    assert_eq!(psi(&th), expect, "ψ {al} {be} {p} {q}");
                }
            }
        }
    }

    #[test]
    fn presentations_agree() {
        for th in all_same_diagonal(6) {
            let p = phi(&th);
            let q = psi(&th);
            for m in [FlaggedMethod::Factorized, FlaggedMethod::AltFlagged, FlaggedMethod::Determinant] {
                assert_eq!(phi_by(&th, m), p, "φ {m:?} {th}");
                assert_eq!(psi_by(&th, m), q, "ψ {m:?} {th}");
            }
        }
    }

    #[test]
    fn conjugation_exchanges_with_dualization() {
        // φ_{λ/μ}(a) and φ_{λ'/μ'}(a') differ by the sign (-1)^{|λ/μ|}
        for th in all_same_diagonal(6) {
            let s = sign(th.size());
            assert_eq!(phi(&th), s.clone() * phi(&th.conjugate()).dualize(), "{th}");
            assert_eq!(psi(&th), s * psi(&th.conjugate()).dualize(), "{th}");
        }
    }
}
