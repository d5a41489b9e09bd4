//! Minimal commutative-ring interface and determinants.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::apoly::APoly;
use crate::rational::Rational;

pub trait Ring: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Ring for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for APoly {
    fn is_zero(&self) -> bool {
        APoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Determinant by Laplace expansion along rows, memoised on column sets.
///
/// `one` is returned for the empty matrix and otherwise only fixes the type.
pub fn det<T: Ring>(m: &[Vec<T>], one: T) -> T {
    let n = m.len();
    if n == 0 {
        return one;
    }
    assert!(n <= 24 && m.iter().all(|r| r.len() == n), "square matrix expected");
    // minors[mask] = det of the last |mask| rows restricted to columns in mask
    let mut minors: BTreeMap<u32, T> = BTreeMap::new();
    minors.insert(0, one.clone());
    for k in 1..=n {
        let row = &m[n - k];
        let mut next: BTreeMap<u32, T> = BTreeMap::new();
        for (mask, minor) in &minors {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                // sign from the position of column j among the chosen columns
                let before = (mask & ((1u32 << j) - 1)).count_ones();
                let term = entry.mul(minor);
                let slot = next.entry(mask | (1 << j));
                match slot {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(if before.is_multiple_of(2) { term } else { minor_neg(&term) });
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        let cur = o.get_mut();
                        *cur = if before.is_multiple_of(2) { cur.add(&term) } else { cur.sub(&term) };
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.is_empty() {
            return one.sub(&one);
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_else(|| one.sub(&one))
}

fn minor_neg<T: Ring>(t: &T) -> T {
    t.sub(t).sub(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn perm_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Rational::zero();
        fn heap(k: usize, perm: &mut Vec<usize>, m: &[Vec<Rational>], total: &mut Rational) {
            if k == 1 {
                let inversions = (0..perm.len())
                    .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let mut t = Rational::one();
                for (i, &j) in perm.iter().enumerate() {
                    t = &t * &m[i][j];
                }
                *total = if inversions % 2 == 0 { &*total + &t } else { &*total - &t };
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, m, total);
                let swap = if k.is_multiple_of(2) { i } else { 0 };
                perm.swap(swap, k - 1);
            }
        }
        heap(n, &mut perm, m, &mut total);
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&[vec![r(2), r(3)], vec![r(5), r(7)]], r(1)), r(-1));
        assert_eq!(det::<Rational>(&[], r(1)), r(1));
        let m = vec![vec![r(0), r(1), r(2)], vec![r(3), r(0), r(5)], vec![r(6), r(7), r(0)]];
        assert_eq!(det(&m, r(1)), perm_det(&m));
    }

    proptest::proptest! {
        #[test]
        fn matches_permutation_expansion(entries in proptest::collection::vec(-4i64..5, 16)) {
            let m: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&x| r(x)).collect()).collect();
            proptest::prop_assert_eq!(det(&m, r(1)), perm_det(&m));
        }
    }
}
