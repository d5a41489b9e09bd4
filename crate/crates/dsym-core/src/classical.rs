//! Classical coefficients: Littlewood–Richardson, Kostka, characters.

use alloc::vec;
use alloc::vec::Vec;

use crate::partition::{Partition, SkewShape};
use crate::rational::Rational;
use crate::tableaux::{visit_fillings, TableauFamily};

/// `c^γ_{αβ}` by counting lattice-word fillings of `γ/α` with content `β`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if gamma.size() != alpha.size() + beta.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    // reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for row in 0..gamma.len() {
        for col in (alpha.part(row + 1)..gamma.part(row + 1)).rev() {
            cells.push((row, col));
        }
    }
    let mut grid = vec![vec![0usize; gamma.part(1)]; gamma.len()];
    let mut counts = vec![0usize; beta.len() + 1];
    let mut total = 0;
    lr_rec(0, &cells, alpha, beta, &mut grid, &mut counts, &mut total);
    total
}

fn lr_rec(
    k: usize,
    cells: &[(usize, usize)],
    alpha: &Partition,
    beta: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (row, col) = cells[k];
    let right_limit = if col + 1 < grid[row].len() && grid[row][col + 1] > 0 { grid[row][col + 1] } else { beta.len() };
    let above = if row > 0 && col >= alpha.part(row) { grid[row - 1][col] } else { 0 };
    for v in (above + 1)..=right_limit.min(beta.len()) {
        if counts[v] >= beta.part(v) || (v > 1 && counts[v] >= counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        grid[row][col] = v;
        lr_rec(k + 1, cells, alpha, beta, grid, counts, total);
        grid[row][col] = 0;
        counts[v] -= 1;
    }
}

/// Expansion of `s_α s_β` in the Schur basis.
pub fn schur_product(alpha: &Partition, beta: &Partition) -> Vec<(Partition, u64)> {
    Partition::all_of_size(alpha.size() + beta.size())
        .into_iter()
        .filter(|g| g.contains(alpha) && g.contains(beta))
        .filter_map(|g| {
            let c = lr_coefficient(alpha, beta, &g);
            (c > 0).then_some((g, c))
        })
        .collect()
}

/// Number of semistandard tableaux of shape `θ` and content `μ`.
pub fn kostka_number(shape: &SkewShape, content: &Partition) -> u64 {
    kostka_weight(shape, content.parts())
}

/// Kostka number for an arbitrary composition `weight`.
pub fn kostka_weight(shape: &SkewShape, weight: &[usize]) -> u64 {
    if shape.size() != weight.iter().sum::<usize>() {
        return 0;
    }
    let fam = TableauFamily::Semistandard { max: weight.len() as u32 };
    let mut total = 0;
    visit_fillings(
        shape,
        &fam,
        vec![0usize; weight.len()],
        |counts, _, v| {
            let k = v as usize - 1;
            (counts[k] < weight[k]).then(|| {
                let mut c = counts.clone();
                c[k] += 1;
                c
            })
        },
        |_, _| total += 1,
    );
    total
}

/// Irreducible character `χ^λ_μ` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let l = lambda.len();
    let beta: Vec<usize> = (1..=l).map(|i| lambda.part(i) + l - i).collect();
    mn_rec(&beta, mu.parts())
}

fn mn_rec(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - k;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest);
    }
    total
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> Rational {
    let mut z = Rational::one();
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let m = (j - i) as i64;
        z = &(&z * &Rational::from_int(parts[i] as i64).pow(m as u32)) * &crate::partition::factorial(m as u64);
        i = j;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2,1")), 0);
        assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("2,1")), 1);
        assert_eq!(lr_coefficient(&Partition::empty(), &p("3,1"), &p("3,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("2,2")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
    }

    /// Brute-force oracle: multiply Schur polynomials through their monomial
    /// coefficients (Kostka numbers) in `n` variables and read off the
    /// dominant coefficients.
    #[test]
    fn lr_against_kostka_oracle() {
        for total in 0..=5 {
            for a in Partition::all_up_to(total) {
                let b_size = total - a.size();
                for b in Partition::all_of_size(b_size) {
                    let prod = schur_product(&a, &b);
                    // compare monomial coefficient of x^ν on both sides for each ν ⊢ total
                    for nu in Partition::all_of_size(total) {
                        let rhs: u64 = prod
                            .iter()
                            .map(|(g, c)| c * kostka_number(&SkewShape::straight(g.clone()), &nu))
                            .sum();
                        // lhs: Σ over splittings x^ν = x^σ x^τ of K_{aσ}K_{bτ}
                        let lhs = split_count(&a, &b, nu.parts());
                        assert_eq!(lhs, rhs, "{a:?} {b:?} {nu:?}");
                    }
                }
            }
        }
    }

    fn split_count(a: &Partition, b: &Partition, nu: &[usize]) -> u64 {
        fn rec(i: usize, nu: &[usize], first: &mut Vec<usize>, a: &Partition, b: &Partition) -> u64 {
            if i == nu.len() {
                let second: Vec<usize> = nu.iter().zip(first.iter()).map(|(n, f)| n - f).collect();
                return kostka_weight(&SkewShape::straight(a.clone()), first)
                    * kostka_weight(&SkewShape::straight(b.clone()), &second);
            }
            let mut s = 0;
            for k in 0..=nu[i] {
                first.push(k);
                s += rec(i + 1, nu, first, a, b);
                first.pop();
            }
            s
        }
        rec(0, nu, &mut Vec::new(), a, b)
    }

    #[test]
    fn lr_symmetry_and_dimension_identity() {
        for total in 0..=6 {
            for a in Partition::all_up_to(total) {
                for b in Partition::all_of_size(total - a.size()) {
                    let mut lhs = 0u64;
                    for (g, c) in schur_product(&a, &b) {
                        assert_eq!(lr_coefficient(&b, &a, &g), c);
                        lhs += c * SkewShape::straight(g).dim_by_enumeration();
                    }
                    let binom = &factorial(total as u64)
                        / &(&factorial(a.size() as u64) * &factorial(b.size() as u64));
                    let rhs = &binom
                        * &Rational::from_int(
                            (SkewShape::straight(a.clone()).dim_by_enumeration()
                                * SkewShape::straight(b.clone()).dim_by_enumeration()) as i64,
                        );
                    assert_eq!(Rational::from_int(lhs as i64), rhs);
                }
            }
        }
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&p("3,2"), &p("2,1,1,1")), 1);
        assert_eq!(mn_character(&p("2,1"), &p("3")), -1);
        assert_eq!(mn_character(&p("2,1"), &p("2,1")), 0);
        for n in 1..=6 {
            let mut sum_sq = 0i64;
            for lam in Partition::all_of_size(n) {
                let dim = SkewShape::straight(lam.clone()).dim_by_enumeration() as i64;
                assert_eq!(mn_character(&lam, &Partition::column(n)), dim);
                sum_sq += dim * dim;
            }
            assert_eq!(Rational::from_int(sum_sq), factorial(n as u64));
        }
        // column orthogonality: Σ_λ χ^λ_μ χ^λ_ν = δ z_μ
        for mu in Partition::all_of_size(5) {
            for nu in Partition::all_of_size(5) {
                let s: i64 = Partition::all_of_size(5).iter().map(|l| mn_character(l, &mu) * mn_character(l, &nu)).sum();
                let expect = if mu == nu { z_lambda(&mu) } else { Rational::zero() };
                assert_eq!(Rational::from_int(s), expect);
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&SkewShape::straight(p("2,1")), &p("1,1,1")), 2);
        assert_eq!(kostka_number(&SkewShape::straight(p("3")), &p("2,1")), 1);
        assert_eq!(kostka_number(&SkewShape::straight(p("1,1")), &p("2")), 0);
    }
}
