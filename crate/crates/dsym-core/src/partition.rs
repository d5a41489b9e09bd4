//! Partitions, skew shapes, Frobenius coordinates and growth chains.

use core::fmt;
use core::str::FromStr;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeError {
    NotPartition,
    NotContained,
    Parse,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::NotPartition => f.write_str("parts must be weakly decreasing"),
            ShapeError::NotContained => f.write_str("inner shape is not contained in outer shape"),
            ShapeError::Parse => f.write_str("cannot parse shape"),
        }
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// A box of a diagram, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(self) -> i32 {
        self.col as i32 - self.row as i32
    }
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ShapeError::NotPartition);
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        Partition::from_unsorted(vec![k])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of boxes on the main diagonal.
    pub fn diagonal_count(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &p)| p > *i).count()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| (0..p).map(move |col| Cell { row, col }))
            .collect()
    }

    pub fn contents(&self) -> Vec<i32> {
        self.cells().into_iter().map(Cell::content).collect()
    }

    /// Partitions obtained by adding one box, ordered by the row of the new box.
    pub fn add_box(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.0[r - 1] > self.part(r + 1))
            .map(|r| {
                let mut p = self.0.clone();
                if r == p.len() {
                    p.push(1);
                } else {
                    p[r] += 1;
                }
                Partition(p)
            })
            .collect()
    }

    /// Partitions obtained by removing one box, ordered by row.
    pub fn remove_box(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&r| self.0[r] > self.part(r + 2))
            .map(|r| {
                let mut p = self.0.clone();
                p[r] -= 1;
                Partition::new(p).expect("corner removal keeps a partition")
            })
            .collect()
    }

    /// Row (1-based) of the unique box of `self / smaller`, if they differ by one box.
    pub fn added_row(&self, smaller: &Partition) -> Option<usize> {
        if self.size() != smaller.size() + 1 || !self.contains(smaller) {
            return None;
        }
        (1..=self.len()).find(|&i| self.part(i) != smaller.part(i))
    }

    /// Whether `self / inner` has at most one box in each column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| self.part(i + 1) <= inner.part(i))
    }

    /// `(1-μ_1, 2-μ_2, …, n-μ_n)`: indices of the sequence `a_μ`.
    pub fn a_mu_indices(&self, n: usize) -> Vec<i32> {
        (1..=n).map(|i| i as i32 - self.part(i) as i32).collect()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.diagonal_count();
        let conj = self.conjugate();
        FrobeniusCoords {
            alpha: (1..=d).map(|i| self.part(i) - i).collect(),
            beta: (1..=d).map(|i| conj.part(i) - i).collect(),
        }
    }

    /// Number of boxes in rows `1..=d` where `d` is the diagonal count of `self`.
    pub fn arm_boxes(&self) -> usize {
        (1..=self.diagonal_count()).map(|i| self.part(i)).sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|λ| ≤ n`, by size then reverse lexicographic order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`, by size then reverse lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        Partition::all_up_to(self.size()).into_iter().filter(|p| self.contains(p)).collect()
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut s, mut t) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Comma separated parts; the empty string, `0` and `-` denote ∅.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| ShapeError::Parse))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Sort key for partitions: by size, then reverse lexicographic.
pub fn size_revlex(p: &Partition, q: &Partition) -> core::cmp::Ordering {
    p.size().cmp(&q.size()).then_with(|| q.cmp(p))
}

/// The skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.outer.part(row + 1) && col >= self.inner.part(row + 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|row| (self.inner.part(row + 1)..self.outer.part(row + 1)).map(move |col| Cell { row, col }))
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// The largest number of boxes in a single column.
    pub fn max_column_height(&self) -> usize {
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        (1..=oc.len()).map(|j| oc.part(j) - ic.part(j)).max().unwrap_or(0)
    }

    /// Number of standard tableaux, by counting growth chains.
    pub fn dim_by_enumeration(&self) -> u64 {
        let mut memo: BTreeMap<Partition, u64> = BTreeMap::new();
        memo.insert(self.inner.clone(), 1);
        fn rec(p: &Partition, inner: &Partition, memo: &mut BTreeMap<Partition, u64>) -> u64 {
            if let Some(&v) = memo.get(p) {
                return v;
            }
            let v = p.remove_box().iter().filter(|q| q.contains(inner)).map(|q| rec(q, inner, memo)).sum();
            memo.insert(p.clone(), v);
            v
        }
        rec(&self.outer, &self.inner, &mut memo)
    }

    /// Number of standard tableaux, from `|θ|! det[1/(λ_i-μ_j-i+j)!]`.
    pub fn dim_by_determinant(&self) -> Rational {
        let l = self.outer.len();
        if l == 0 {
            return Rational::one();
        }
        let m: Vec<Vec<Rational>> = (1..=l)
            .map(|i| {
                (1..=l)
                    .map(|j| {
                        let k = self.outer.part(i) as i64 - self.inner.part(j) as i64 - i as i64 + j as i64;
                        if k < 0 {
                            Rational::zero()
                        } else {
                            factorial(k as u64).recip().expect("nonzero")
                        }
                    })
                    .collect()
            })
            .collect();
        &crate::ring::det(&m, Rational::one()) * &factorial(self.size() as u64)
    }

    /// `(dim θ, H_θ)` with `H_θ = |θ|!/dim θ`; the enumeration is checked
    /// against the determinant.
    pub fn dim_and_hook(&self) -> (u64, Rational) {
        let dim = self.dim_by_enumeration();
        debug_assert_eq!(Rational::from_int(dim as i64), self.dim_by_determinant());
        let h = if dim == 0 {
            Rational::zero()
        } else {
            &factorial(self.size() as u64) / &Rational::from_int(dim as i64)
        };
        (dim, h)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// `outer` or `outer/inner`.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

pub fn factorial(n: u64) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| &acc * &Rational::from_int(k))
}

/// Frobenius coordinates `(α|β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self, ShapeError> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if alpha.len() != beta.len() || !strict(&alpha) || !strict(&beta) {
            return Err(ShapeError::NotPartition);
        }
        Ok(FrobeniusCoords { alpha, beta })
    }

    /// A single hook `(α|β)`.
    pub fn hook(alpha: usize, beta: usize) -> Self {
        FrobeniusCoords { alpha: vec![alpha], beta: vec![beta] }
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.alpha.len();
        let rows = d + self.beta.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|i| {
                if i <= d {
                    self.alpha[i - 1] + i
                } else {
                    self.beta.iter().enumerate().filter(|(j, &b)| b + j + 1 >= i).count()
                }
            })
            .collect();
        Partition::new(parts).expect("Frobenius coordinates give a partition")
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.alpha), join(&self.beta))
    }
}

/// A chain `ρ⁽⁰⁾ → … → ρ⁽ˡ⁾` adding one box at a time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrowthChain {
    chain: Vec<Partition>,
    yamanouchi: Vec<usize>,
}

impl GrowthChain {
    pub fn new(chain: Vec<Partition>) -> Result<Self, ShapeError> {
        if chain.is_empty() {
            return Err(ShapeError::NotContained);
        }
        let yamanouchi = chain
            .windows(2)
            .map(|w| w[1].added_row(&w[0]).ok_or(ShapeError::NotContained))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GrowthChain { chain, yamanouchi })
    }

    /// All chains from `start` to `end`, in lexicographic order of the row sequence.
    pub fn all_between(start: &Partition, end: &Partition) -> Vec<GrowthChain> {
        fn rec(cur: &mut Vec<Partition>, end: &Partition, out: &mut Vec<GrowthChain>) {
            let last = cur.last().expect("nonempty");
            if last == end {
                out.push(GrowthChain::new(cur.clone()).expect("valid chain"));
                return;
            }
            for next in last.add_box() {
                if end.contains(&next) {
                    cur.push(next);
                    rec(cur, end, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        if end.contains(start) {
            rec(&mut vec![start.clone()], end, &mut out);
        }
        out
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.chain
    }

    /// Rows (1-based) of the added boxes.
    pub fn yamanouchi(&self) -> &[usize] {
        &self.yamanouchi
    }

    pub fn steps(&self) -> usize {
        self.yamanouchi.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basic_ops() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("1").add_box(), vec![p("2"), p("1,1")]);
        assert_eq!(p("3,2").diagonal_count(), 2);
        assert_eq!(p("2,2,1").remove_box(), vec![p("2,1,1"), p("2,2")]);
        assert!(p("3,1").is_horizontal_strip_over(&p("1")));
        assert!(p("2,2").is_horizontal_strip_over(&p("2")));
        assert!(!p("2,2").is_horizontal_strip_over(&p("1")));
        assert_eq!(p("2,1").contents(), vec![0, 1, -1]);
    }

    #[test]
    fn a_mu_examples() {
        assert_eq!(p("1").a_mu_indices(3), vec![0, 2, 3]);
        assert_eq!(Partition::empty().a_mu_indices(2), vec![1, 2]);
        assert_eq!(p("3,2").a_mu_indices(4), vec![-2, 0, 3, 4]);
    }

    #[test]
    fn hooks_and_dims() {
        let h = |o: &str, i: &str| SkewShape::new(p(o), p(i)).unwrap().dim_and_hook().1;
        assert_eq!(h("3,2", "1"), Rational::new(24, 5));
        assert_eq!(h("3,2", "2,1"), Rational::one());
        assert_eq!(h("3,2", "2"), Rational::from_int(2));
        assert_eq!(h("3,2", "1,1"), Rational::from_int(3));
        assert_eq!(SkewShape::straight(p("2,1")).dim_and_hook().0, 2);
        assert_eq!(SkewShape::straight(Partition::empty()).dim_and_hook().0, 1);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn growth_chains() {
        let chains = GrowthChain::all_between(&Partition::empty(), &p("2,1"));
        assert_eq!(chains.len(), 2);
        assert_eq!(chains[0].yamanouchi(), &[1, 1, 2]);
        assert_eq!(chains[1].yamanouchi(), &[1, 2, 1]);
    }

    #[test]
    fn parse_and_display() {
        let s: SkewShape = "3,2/1".parse().unwrap();
        assert_eq!(s.to_string(), "3,2/1");
        assert_eq!(s.cells().len(), 4);
        assert!("1/2".parse::<SkewShape>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p("3,1").frobenius().to_string(), "(2|1)");
    }

    #[test]
    fn frobenius_round_trip_small() {
        for lam in Partition::all_up_to(8) {
            assert_eq!(lam.frobenius().to_partition(), lam);
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn dim_methods_agree() {
        for outer in Partition::all_up_to(8) {
            for inner in outer.subpartitions() {
                let s = SkewShape::new(outer.clone(), inner).unwrap();
                assert_eq!(Rational::from_int(s.dim_by_enumeration() as i64), s.dim_by_determinant(), "{s}");
            }
        }
    }

    proptest! {
        #[test]
        fn box_moves_are_inverse(parts in prop::collection::vec(1usize..6, 0..5)) {
            let lam = Partition::from_unsorted(parts);
            for up in lam.add_box() {
                prop_assert!(up.remove_box().contains(&lam));
                prop_assert_eq!(up.size(), lam.size() + 1);
            }
            prop_assert_eq!(lam.conjugate().diagonal_count(), lam.diagonal_count());
        }
    }
}
