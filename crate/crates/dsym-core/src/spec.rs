//! Numerical specialisations of the parameter sequence.

use alloc::collections::BTreeMap;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

/// Denominator of the fractional part used by [`ASpec::Generic`].
pub const GENERIC_DENOMINATOR: i64 = 1_000_003;

/// A rule assigning a rational value to every `a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ASpec {
    /// `a_i = 0`.
    Zero,
    /// `a_i = -i + 1`.
    Shifted,
    /// `a_i = -i + 1/2`.
    Frobenius,
    Custom(CustomSpec),
    /// `a_i = i + r_i / 1000003` where `r_i` is the first output of ChaCha8
    /// seeded with `seed` on stream `zigzag(i)`. Values are pairwise distinct.
    Generic { seed: u64 },
}

/// Listed values plus an optional affine default `p*i + q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CustomSpec {
    pub values: BTreeMap<i32, Rational>,
    pub default: Option<(Rational, Rational)>,
}

impl ASpec {
    pub fn value(&self, i: i32) -> Option<Rational> {
        match self {
            ASpec::Zero => Some(Rational::zero()),
            ASpec::Shifted => Some(Rational::from_int(1 - i as i64)),
            ASpec::Frobenius => Some(Rational::new(1 - 2 * i as i64, 2)),
            ASpec::Custom(c) => c.values.get(&i).cloned().or_else(|| {
                c.default.as_ref().map(|(p, q)| &(p * &Rational::from_int(i as i64)) + q)
            }),
            ASpec::Generic { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(((i << 1) ^ (i >> 31)) as u32 as u64);
                let r = (rng.next_u32() as i64) % GENERIC_DENOMINATOR;
                Some(Rational::new(i as i64 * GENERIC_DENOMINATOR + r, GENERIC_DENOMINATOR))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_specs() {
        assert_eq!(ASpec::Shifted.value(3), Some(Rational::from_int(-2)));
        assert_eq!(ASpec::Frobenius.value(0), Some(Rational::new(1, 2)));
        let c = CustomSpec { values: [(0, Rational::from_int(5))].into(), default: None };
        assert_eq!(ASpec::Custom(c.clone()).value(1), None);
        let d = CustomSpec { default: Some((Rational::from_int(2), Rational::one())), ..c };
        assert_eq!(ASpec::Custom(d.clone()).value(0), Some(Rational::from_int(5)));
        assert_eq!(ASpec::Custom(d).value(3), Some(Rational::from_int(7)));
    }

    #[test]
    fn generic_is_reproducible_and_distinct() {
        let s = ASpec::Generic { seed: 7 };
        let vals: alloc::vec::Vec<_> = (-20..20).map(|i| s.value(i).unwrap()).collect();
        assert_eq!(vals[3], s.value(-17).unwrap());
        for w in vals.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_ne!(s.value(0), ASpec::Generic { seed: 8 }.value(0));
    }
}
