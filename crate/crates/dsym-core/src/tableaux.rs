//! Deterministic enumeration of tableau families.
//!
//! Every family is a [`FillingRule`]: a candidate range per cell plus a
//! compatibility test against the left and upper neighbours. Fillings are
//! produced in row-major lexicographic order.

use core::ops::RangeInclusive;

use alloc::vec::Vec;

use crate::partition::{Cell, GrowthChain, Partition, SkewShape};

pub trait FillingRule {
    fn candidates(&self, cell: Cell) -> RangeInclusive<i32>;
    fn fits(&self, cell: Cell, value: i32, left: Option<i32>, above: Option<i32>) -> bool;
}

/// A symbol `i` or `i′` of a super alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperSymbol {
    pub index: u32,
    pub primed: bool,
}

/// How symbols `1,1′,…,n,n′` are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperOrder {
    /// `1′ < 1 < 2′ < 2 < …`
    A,
    /// `1 < 1′ < 2 < 2′ < …`
    APrime,
    /// `1′ < 2′ < … < n′ < n < … < 1`: primed entries first, unprimed decreasing.
    Barred,
}

impl SuperOrder {
    pub fn encode(self, n: u32, s: SuperSymbol) -> i32 {
        let i = s.index as i32;
        let n = n as i32;
        match (self, s.primed) {
            (SuperOrder::A, true) | (SuperOrder::APrime, false) => 2 * i - 1,
            (SuperOrder::A, false) | (SuperOrder::APrime, true) => 2 * i,
            (SuperOrder::Barred, true) => i,
            (SuperOrder::Barred, false) => 2 * n + 1 - i,
        }
    }

    pub fn decode(self, n: u32, code: i32) -> SuperSymbol {
        let n = n as i32;
        let (index, primed) = match self {
            SuperOrder::A => ((code + 1) / 2, code % 2 == 1),
            SuperOrder::APrime => ((code + 1) / 2, code % 2 == 0),
            SuperOrder::Barred if code <= n => (code, true),
            SuperOrder::Barred => (2 * n + 1 - code, false),
        };
        SuperSymbol { index: index as u32, primed }
    }
}

/// The tableau families used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauFamily {
    /// Rows weakly decrease, columns strictly decrease, entries in `1..=max`.
    Reverse { max: u32 },
    /// Rows weakly increase, columns strictly increase, entries in `1..=max`.
    Semistandard { max: u32 },
    /// Entries are codes of [`SuperOrder`] symbols with indices `≤ n`; codes
    /// weakly increase along rows and columns, a primed symbol repeats in no
    /// row and an unprimed symbol repeats in no column.
    Super { order: SuperOrder, n: u32 },
    /// Hook tableaux on `λ/μ` (flags from the inner shape `μ`).
    Hook { inner: Partition },
    /// Dual hook tableaux on `λ/μ` (flags from the outer shape `λ`).
    DualHook { outer: Partition },
    /// Column-flagged tableaux on the top part of `λ/μ`: column `j` entries in
    /// `{-j+μ'_j+2, …, 0}`, rows weak, columns strict.
    FlaggedTop { inner: Partition },
    /// Row-flagged tableaux on the bottom part of `λ/μ`: row `i` entries in
    /// `{1, …, i-λ_i}`, rows weak, columns strict.
    FlaggedBottom { outer: Partition },
}

impl FillingRule for TableauFamily {
    fn candidates(&self, cell: Cell) -> RangeInclusive<i32> {
        let (i, j) = (cell.row + 1, cell.col + 1);
        match self {
            TableauFamily::Reverse { max } | TableauFamily::Semistandard { max } => 1..=*max as i32,
            TableauFamily::Super { n, .. } => 1..=2 * *n as i32,
            TableauFamily::Hook { inner } => {
                if i <= inner.diagonal_count() {
                    i as i32 - inner.part(i) as i32..=0
                } else {
                    1..=inner.conjugate().part(j) as i32 - j as i32 + 1
                }
            }
            TableauFamily::DualHook { outer } => {
                if i <= outer.diagonal_count() {
                    i as i32 - outer.part(i) as i32 + 1..=0
                } else {
                    1..=outer.conjugate().part(j) as i32 - j as i32
                }
            }
            TableauFamily::FlaggedTop { inner } => -(j as i32) + inner.conjugate().part(j) as i32 + 2..=0,
            TableauFamily::FlaggedBottom { outer } => 1..=i as i32 - outer.part(i) as i32,
        }
    }

    fn fits(&self, cell: Cell, v: i32, left: Option<i32>, above: Option<i32>) -> bool {
        let row_ok = |f: fn(i32, i32) -> bool| left.is_none_or(|l| f(l, v));
        let col_ok = |f: fn(i32, i32) -> bool| above.is_none_or(|u| f(u, v));
        let weak_inc = |a: i32, b: i32| a <= b;
        let strict_inc = |a: i32, b: i32| a < b;
        let weak_dec = |a: i32, b: i32| a >= b;
        let strict_dec = |a: i32, b: i32| a > b;
        match self {
            TableauFamily::Reverse { .. } => row_ok(weak_dec) && col_ok(strict_dec),
            TableauFamily::Semistandard { .. } => row_ok(weak_inc) && col_ok(strict_inc),
            TableauFamily::Super { order, n } => {
                let primed = order.decode(*n, v).primed;
                left.is_none_or(|l| l < v || (l == v && !primed)) && above.is_none_or(|u| u < v || (u == v && primed))
            }
            TableauFamily::Hook { inner } => {
                if cell.row < inner.diagonal_count() {
                    row_ok(weak_inc) && col_ok(strict_inc)
                } else {
                    row_ok(strict_dec) && col_ok(weak_dec)
                }
            }
            TableauFamily::DualHook { outer } => {
                if cell.row < outer.diagonal_count() {
                    row_ok(strict_dec) && col_ok(weak_dec)
                } else {
                    row_ok(weak_inc) && col_ok(strict_inc)
                }
            }
            TableauFamily::FlaggedTop { .. } | TableauFamily::FlaggedBottom { .. } => {
                row_ok(weak_inc) && col_ok(strict_inc)
            }
        }
    }
}

/// A filling of a skew shape, entries in row-major cell order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    cells: Vec<Cell>,
    entries: Vec<i32>,
}

impl Filling {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, i32)> + '_ {
        self.cells.iter().copied().zip(self.entries.iter().copied())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i32> {
        self.cells.iter().position(|c| c.row == row && c.col == col).map(|k| self.entries[k])
    }
}

/// Depth-first traversal of all fillings allowed by `rule`.
///
/// `extend` folds a cell value into the running state and may prune by
/// returning `None`; `leaf` receives each complete filling.
pub fn visit_fillings<S, R, E, L>(shape: &SkewShape, rule: &R, init: S, mut extend: E, mut leaf: L)
where
    R: FillingRule + ?Sized,
    E: FnMut(&S, Cell, i32) -> Option<S>,
    L: FnMut(&[i32], &S),
{
    let cells = shape.cells();
    let position = |row: usize, col: usize| cells.iter().position(|c| c.row == row && c.col == col);
    let neighbours: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|c| {
            let left = if c.col > 0 { position(c.row, c.col - 1) } else { None };
            let above = if c.row > 0 { position(c.row - 1, c.col) } else { None };
            (left, above)
        })
        .collect();
    let mut entries = alloc::vec![0i32; cells.len()];

    #[allow(clippy::too_many_arguments)]
    fn rec<S, R, E, L>(
        k: usize,
        state: &S,
        cells: &[Cell],
        neighbours: &[(Option<usize>, Option<usize>)],
        entries: &mut Vec<i32>,
        rule: &R,
        extend: &mut E,
        leaf: &mut L,
    ) where
        R: FillingRule + ?Sized,
        E: FnMut(&S, Cell, i32) -> Option<S>,
        L: FnMut(&[i32], &S),
    {
        if k == cells.len() {
            leaf(entries, state);
            return;
        }
        let cell = cells[k];
        let (l, u) = neighbours[k];
        let left = l.map(|p| entries[p]);
        let above = u.map(|p| entries[p]);
        for v in rule.candidates(cell) {
            if !rule.fits(cell, v, left, above) {
                continue;
            }
            if let Some(next) = extend(state, cell, v) {
                entries[k] = v;
                rec(k + 1, &next, cells, neighbours, entries, rule, extend, leaf);
            }
        }
    }

    rec(0, &init, &cells, &neighbours, &mut entries, rule, &mut extend, &mut leaf);
}

/// All fillings of `shape` in the given family.
pub fn iter_tableaux(shape: &SkewShape, family: &TableauFamily) -> Vec<Filling> {
    let cells = shape.cells();
    let mut out = Vec::new();
    visit_fillings(shape, family, (), |_, _, _| Some(()), |e, _| {
        out.push(Filling { cells: cells.clone(), entries: e.to_vec() })
    });
    out
}

/// Number of fillings, without materialising them.
pub fn count_tableaux(shape: &SkewShape, family: &TableauFamily) -> u64 {
    let mut count = 0;
    visit_fillings(shape, family, (), |_, _, _| Some(()), |_, _| count += 1);
    count
}

/// A supertableau with barred boxes attached to a growth chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarredSupertableau {
    /// Entries are [`SuperOrder::Barred`] codes.
    pub filling: Filling,
    /// Barred boxes `α_1 ≺ … ≺ α_l` in column order.
    pub barred: Vec<Cell>,
    /// `ρ(α)` for every unprimed unbarred box.
    pub rho: Vec<(Cell, Partition)>,
}

impl BarredSupertableau {
    pub fn symbol(&self, n: u32, cell: Cell) -> SuperSymbol {
        let code = self.filling.get(cell.row, cell.col).expect("cell of the shape");
        SuperOrder::Barred.decode(n, code)
    }
}

/// Barred `ν/μ`-supertableaux over `{1,1′,…,n,n′}` for a chain from ∅.
///
/// Column order reads columns left to right and each column bottom to top.
pub fn iter_barred_supertableaux(shape: &SkewShape, chain: &GrowthChain, n: u32) -> Vec<BarredSupertableau> {
    let rows = chain.yamanouchi();
    let family = TableauFamily::Super { order: SuperOrder::Barred, n };
    let mut out = Vec::new();
    for filling in iter_tableaux(shape, &family) {
        let mut unprimed: Vec<(Cell, u32)> = filling
            .iter()
            .filter_map(|(c, code)| {
                let s = SuperOrder::Barred.decode(n, code);
                (!s.primed).then_some((c, s.index))
            })
            .collect();
        unprimed.sort_by(|a, b| a.0.col.cmp(&b.0.col).then(b.0.row.cmp(&a.0.row)));
        let mut chosen = Vec::new();
        choose_bars(&unprimed, rows, 0, &mut chosen, &mut |bars| {
            let mut rho = Vec::new();
            let mut passed = 0;
            for (k, (cell, _)) in unprimed.iter().enumerate() {
                if passed < bars.len() && bars[passed] == k {
                    passed += 1;
                } else {
                    rho.push((*cell, chain.partitions()[passed].clone()));
                }
            }
            out.push(BarredSupertableau {
                filling: filling.clone(),
                barred: bars.iter().map(|&k| unprimed[k].0).collect(),
                rho,
            });
        });
    }
    out
}

fn choose_bars(
    cells: &[(Cell, u32)],
    rows: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let i = chosen.len();
    if i == rows.len() {
        emit(chosen);
        return;
    }
    for k in from..cells.len() {
        if cells[k].1 as usize == rows[i] {
            chosen.push(k);
            choose_bars(cells, rows, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn documented_counts() {
        let rev = iter_tableaux(&sk("2,1"), &TableauFamily::Reverse { max: 2 });
        assert_eq!(rev.len(), 2);
        assert_eq!(rev[0].entries(), &[2, 1, 1]);
        assert_eq!(rev[1].entries(), &[2, 2, 1]);
        assert_eq!(count_tableaux(&sk("1,1"), &TableauFamily::Semistandard { max: 2 }), 1);
        for fam in [
            TableauFamily::Reverse { max: 3 },
            TableauFamily::Super { order: SuperOrder::A, n: 2 },
            TableauFamily::Hook { inner: Partition::empty() },
        ] {
            assert_eq!(count_tableaux(&SkewShape::straight(Partition::empty()), &fam), 1);
        }
    }

    #[test]
    fn reverse_and_semistandard_are_equinumerous() {
        for lam in Partition::all_up_to(6) {
            for n in 1..=4 {
                let s = SkewShape::straight(lam.clone());
                assert_eq!(
                    count_tableaux(&s, &TableauFamily::Reverse { max: n }),
                    count_tableaux(&s, &TableauFamily::Semistandard { max: n })
                );
            }
        }
    }

    #[test]
    fn super_codes_round_trip() {
        for order in [SuperOrder::A, SuperOrder::APrime, SuperOrder::Barred] {
            for code in 1..=6 {
                assert_eq!(order.encode(3, order.decode(3, code)), code);
            }
        }
        let one_prime = SuperSymbol { index: 1, primed: true };
        assert!(SuperOrder::A.encode(2, one_prime) < SuperOrder::A.encode(2, SuperSymbol { index: 1, primed: false }));
        assert!(SuperOrder::APrime.encode(2, one_prime) > SuperOrder::APrime.encode(2, SuperSymbol { index: 1, primed: false }));
    }

    #[test]
    fn super_rows_and_columns() {
        // one-row shape at n = 1 in the A order: 1^k or 1' 1^{k-1}
        let fam = TableauFamily::Super { order: SuperOrder::A, n: 1 };
        assert_eq!(count_tableaux(&sk("3"), &fam), 2);
        // one-column shape: 1'^k or 1'^{k-1} 1
        assert_eq!(count_tableaux(&sk("1,1,1"), &fam), 2);
    }

    #[test]
    fn barred_examples() {
        let chain = GrowthChain::all_between(&Partition::empty(), &p("1")).remove(0);
        assert_eq!(iter_barred_supertableaux(&sk("2,2/2"), &chain, 1).len(), 3);
        let chain = GrowthChain::all_between(&Partition::empty(), &p("2")).remove(0);
        let found = iter_barred_supertableaux(&sk("2,2/1"), &chain, 2);
        assert_eq!(found.len(), 3);
        let longer = GrowthChain::all_between(&Partition::empty(), &p("3")).remove(0);
        assert!(iter_barred_supertableaux(&sk("2,2/2"), &longer, 2).is_empty());
    }

    #[test]
    fn hook_family_shapes() {
        // φ for (p+1,1^q)/(1) has one tableau: row of 0s and column of 1s
        let fam = TableauFamily::Hook { inner: p("1") };
        let t = iter_tableaux(&sk("3,1,1/1"), &fam);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].entries(), &[0, 0, 1, 1]);
        let fam = TableauFamily::DualHook { outer: p("3,1,1") };
        let t = iter_tableaux(&sk("3,1,1/1"), &fam);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].entries(), &[0, -1, 1, 2]);
        assert_eq!(vec![t[0].get(2, 0)], vec![Some(2)]);
    }
}
