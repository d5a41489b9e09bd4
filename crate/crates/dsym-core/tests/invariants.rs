use dsym_core::basis::{dual_lr_via_skew, lr_polynomial, DoubleSym, SchurTable};
use dsym_core::double_schur::{double_schur_at, double_schur_tableau, evaluate_at, EvalPoint};
use dsym_core::series::{dual_schur, DualSchurMethod, SchurSeries, SeriesBasis};
use dsym_core::transition::hook_product;
use dsym_core::{APoly, ASpec, Partition, Rational, SkewShape};
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn coefficient() -> impl Strategy<Value = APoly> {
    (-3i64..4, -2i32..3, 0u32..2).prop_map(|(c, i, e)| &APoly::from_int(c) * &APoly::var(i).pow(e))
}

fn element(n: usize) -> impl Strategy<Value = DoubleSym> {
    proptest::collection::vec((partition(3), coefficient()), 0..4)
        .prop_map(move |terms| DoubleSym::from_coeffs(n, terms.into_iter().filter(|(l, _)| l.len() <= n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lr_polynomials_commute_and_conjugate(lam in partition(3), mu in partition(3), nu in partition(4)) {
        let c = lr_polynomial(&lam, &mu, &nu);
        prop_assert_eq!(&c, &lr_polynomial(&mu, &lam, &nu));
        prop_assert_eq!(&c, &lr_polynomial(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()).dualize());
        if !c.is_zero() {
            prop_assert!(nu.contains(&lam) && nu.contains(&mu));
        }
    }

    #[test]
    fn dual_lr_polynomials_conjugate(lam in partition(3), mu in partition(3), nu in partition(4)) {
        let c = dual_lr_via_skew(&lam, &mu, &nu).unwrap();
        let conj = dual_lr_via_skew(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap();
        prop_assert_eq!(c, conj.dualize());
    }

    #[test]
    fn products_match_polynomial_products(u in element(3), v in element(3)) {
        let mut table = SchurTable::new(3);
        let product = u.mul(&v, &mut table).unwrap();
        let direct = u.to_xpoly(&mut table).mul(&v.to_xpoly(&mut table));
        prop_assert_eq!(product.to_xpoly(&mut table), direct);
    }

    #[test]
    fn omega_is_an_involution(u in element(4)) {
        prop_assert_eq!(u.omega_a().omega_a(), u);
    }

    #[test]
    fn evaluation_at_a_rho_vanishes_outside(lam in partition(4), rho in partition(4)) {
        let n = lam.len().max(rho.len()).max(1);
        let value = evaluate_at(&double_schur_tableau(&lam, n), &EvalPoint::a_mu(&rho, n));
        prop_assert_eq!(&value, &double_schur_at(&lam, &rho));
        if !rho.contains(&lam) {
            prop_assert!(value.is_zero());
        }
    }

    #[test]
    fn shifted_values_are_hook_ratios(nu in partition(5), pick in 0usize..64) {
        let subs = nu.subpartitions();
        let mu = &subs[pick % subs.len()];
        let value = double_schur_at(mu, &nu).evaluate(&ASpec::Shifted).unwrap();
        let theta = SkewShape::new(nu.clone(), mu.clone()).unwrap();
        prop_assert_eq!(value, &hook_product(&SkewShape::straight(nu.clone())) / &hook_product(&theta));
    }

    #[test]
    fn basis_changes_are_inverse(terms in proptest::collection::vec((partition(3), -3i64..4), 0..4)) {
        let degree = 5;
        let s = SchurSeries::from_coeffs(
            SeriesBasis::ClassicalSchur,
            degree,
            terms.into_iter().map(|(l, c)| (l, APoly::from_int(c))),
        );
        prop_assert_eq!(s.to_dual().to_classical(), s);
    }

    #[test]
    fn dual_schur_reduces_to_schur_at_zero(mu in partition(3)) {
        let hat = dual_schur(&mu, 5, DualSchurMethod::Flagged).unwrap();
        let classical = hat.map_coeffs(|c| APoly::constant(c.evaluate(&ASpec::Zero).unwrap()));
        let want = SchurSeries::term(SeriesBasis::ClassicalSchur, 5, mu.clone(), APoly::one());
        prop_assert_eq!(classical, want);
        prop_assert_eq!(hat.coefficient(&mu), APoly::constant(Rational::one()));
    }
}
