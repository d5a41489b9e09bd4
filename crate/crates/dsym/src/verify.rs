//! The acceptance suites. Each criterion collects named checks; a sweep over
//! many inputs is one check that records the first failing case.

use std::collections::BTreeMap;
use std::fmt::Display;

use dsym_core::apoly::{complete, elementary};
use dsym_core::basis::{
    dual_lr_via_classical, dual_lr_via_skew, dual_lr_via_supertableaux, expand_in_double_schur, is_graham_positive,
    lr_polynomial, lr_polynomial_by_product, rational_interpolation_eval, DoubleSym, ExpandMethod, InterpolationKind,
};
use dsym_core::cauchy::{cauchy_check, Pairing};
use dsym_core::classical::{kostka_number, lr_coefficient, mn_character, z_lambda};
use dsym_core::double_schur::{
    double_ehp_product, double_schur_alternant, double_schur_at, double_schur_tableau, evaluate_at, hook_value,
    jacobi_trudi, nagelsbach_kostka, skew_double_schur, supersymmetric_schur, EhpKind, EvalPoint, SkewMethod,
};
use dsym_core::series::{
    classical_expansion, dual_ehp, dual_schur, generating_series_check, omega_hat, schur_to_dual, DualKind,
    DualSchurMethod, SchurSeries,
};
use dsym_core::tableaux::SuperOrder;
use dsym_core::transition::{
    char_dual, char_poly, character_hook_terms, double_monomials, dual_complete_product, hook_identities, hook_product,
    kostka, kostka_dual, phi_matrix, psi_matrix, CharacterMethod, DualCharacterMethod, KostkaDualMethod, KostkaMethod,
};
use dsym_core::xpoly::XPoly;
use dsym_core::{APoly, ASpec, FrobeniusCoords, Partition, Rational, SkewShape};
use serde_json::{json, Value};

pub const CRITERIA: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let failed: Vec<&str> = self.failures().map(|c| c.label.as_str()).collect();
        if failed.is_empty() {
            format!("{status} {:>2} {} ({} checks)", self.id, self.title, self.checks.len())
        } else {
            format!("{status} {:>2} {} (failed: {})", self.id, self.title, failed.join("; "))
        }
    }

    pub fn text(&self) -> String {
        let mut out = self.summary_line();
        for c in &self.checks {
            out.push_str(&format!("\n    {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.label, c.note));
        }
        out
    }

    pub fn json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed(),
            "details": self.checks.iter().map(|c| json!({"label": c.label, "passed": c.passed, "note": c.note})).collect::<Vec<_>>(),
        })
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn push(&mut self, label: impl Into<String>, passed: bool, note: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, note: note.into() });
    }

    fn equal<T: PartialEq + Display, E: Display>(&mut self, label: impl Into<String>, got: Result<T, E>, want: &T) {
        match got {
            Ok(v) if &v == want => self.push(label, true, v.to_string()),
            Ok(v) => self.push(label, false, format!("got {v}, expected {want}")),
            Err(e) => self.push(label, false, format!("error: {e}")),
        }
    }

    fn sweep(&mut self, label: &str) -> Sweep {
        Sweep { label: label.to_string(), cases: 0, failure: None }
    }

    fn finish(&mut self, s: Sweep) {
        match s.failure {
            None => self.push(s.label, true, format!("{} cases", s.cases)),
            Some(f) => self.push(s.label, false, format!("{} cases, first failure: {f}", s.cases)),
        }
    }

    fn outcome(self, id: usize) -> Outcome {
        Outcome { id, title: TITLES[id - 1], checks: self.checks }
    }
}

struct Sweep {
    label: String,
    cases: usize,
    failure: Option<String>,
}

impl Sweep {
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn same<T: PartialEq + std::fmt::Debug, E: Display>(&mut self, got: Result<T, E>, want: Result<T, E>, case: impl Display) {
        match (got, want) {
            (Ok(g), Ok(w)) => self.case(g == w, || format!("{case}: {g:?} vs {w:?}")),
            (Err(e), _) | (_, Err(e)) => self.case(false, || format!("{case}: error {e}")),
        }
    }
}

const TITLES: [&str; CRITERIA] = [
    "documented values",
    "character of (3,2) at (2,1,1,1) three ways",
    "cross-method equality",
    "kernel identities",
    "vanishing and hook values",
    "classical limits",
    "conjugation symmetries",
    "duality and involutions",
    "numeric chain sums",
    "Graham positivity",
];

pub fn title(id: usize) -> Option<&'static str> {
    TITLES.get(id.checked_sub(1)?).copied()
}

pub fn run(id: usize) -> Option<Outcome> {
    let f: fn() -> Recorder = match id {
        1 => documented_values,
        2 => character_three_ways,
        3 => cross_method,
        4 => kernel_identities,
        5 => vanishing,
        6 => classical_limits,
        7 => symmetries,
        8 => duality,
        9 => chain_sums,
        10 => graham,
        _ => return None,
    };
    Some(f().outcome(id))
}

/// Runs every criterion on its own thread; results come back in order.
pub fn run_all() -> Vec<Outcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=CRITERIA).map(|id| scope.spawn(move || run(id).expect("known id"))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn a(i: i32) -> APoly {
    APoly::var(i)
}

fn int(n: i64) -> APoly {
    APoly::from_int(n)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn at_zero(c: &APoly) -> APoly {
    c.substitute(|_| APoly::zero())
}

fn sign(k: usize) -> APoly {
    if k.is_multiple_of(2) {
        APoly::one()
    } else {
        -APoly::one()
    }
}

fn vars<I: IntoIterator<Item = i32>>(indices: I) -> Vec<APoly> {
    indices.into_iter().map(a).collect()
}

fn skew(outer: &Partition, inner: &Partition) -> SkewShape {
    SkewShape::new(outer.clone(), inner.clone()).expect("inner fits inside outer")
}

fn all_skew(max: usize) -> Vec<SkewShape> {
    Partition::all_up_to(max)
        .into_iter()
        .flat_map(|o| o.subpartitions().into_iter().map(move |i| skew(&o, &i)))
        .collect()
}

/// `ĉ^{(m)}_{(k)(l)}` as a sum of `h_r` in `a_0, a_{-1}, …` times `e_s` in `a_{-l}, …, a_{-m+2}`.
fn dual_lr_rows_by_symmetric_functions(k: usize, l: usize, m: usize) -> APoly {
    let (k, l, m) = (k as i32, l as i32, m as i32);
    let first = vars((0..k).map(|t| -t));
    let second = vars((l..=m - 2).map(|t| -t));
    (0..=m - k - l)
        .map(|rr| {
            let s = m - k - l - rr;
            &(&sign(s as usize) * &complete(&first, rr as usize)) * &elementary(&second, s as usize)
        })
        .sum()
}

/// The column analogue `ĉ^{(1^m)}_{(1^k)(1^l)}`.
fn dual_lr_columns_by_symmetric_functions(k: usize, l: usize, m: usize) -> APoly {
    let (k, l, m) = (k as i32, l as i32, m as i32);
    let first = vars(1..=k);
    let second = vars(l + 1..=m - 1);
    (0..=m - k - l)
        .map(|rr| {
            let s = m - k - l - rr;
            &(&sign(rr as usize) * &complete(&first, rr as usize)) * &elementary(&second, s as usize)
        })
        .sum()
}

/// `ĉ^{(m)}_{(k)(l)}` as a sum over `0 ≤ i_1 < … < i_{k-1} ≤ m-l-2` of products
/// of differences, the `j`-th block running over `t` strictly between `i_{j-1}` and `i_j`.
fn dual_lr_rows_by_index_sets(k: usize, l: usize, m: usize) -> APoly {
    fn choose(from: i32, to: i32, count: usize, acc: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if count == 0 {
            out.push(acc.clone());
            return;
        }
        for i in from..=to {
            acc.push(i);
            choose(i + 1, to, count - 1, acc, out);
            acc.pop();
        }
    }
    let (l, m) = (l as i32, m as i32);
    let mut sets = Vec::new();
    choose(0, m - l - 2, k - 1, &mut Vec::new(), &mut sets);
    sets.into_iter()
        .map(|inner| {
            let mut bounds = vec![-1];
            bounds.extend(inner);
            bounds.push(m - l - 1);
            let mut term = APoly::one();
            for (j, w) in bounds.windows(2).enumerate() {
                for t in w[0] + 1..w[1] {
                    term = &term * &APoly::diff(-(j as i32), -l - t);
                }
            }
            term
        })
        .sum()
}

fn documented_values() -> Recorder {
    let mut rec = Recorder::default();
    let d = APoly::diff;

    let want = d(0, 1);
    let (lam, mu, nu) = (p("1"), p("2"), p("2,2"));
    rec.equal("dual LR (2,2)/(1),(2) by supertableaux", dual_lr_via_supertableaux(&lam, &mu, &nu, 1), &want);
    rec.equal("dual LR (2,2)/(1),(2) by skew expansion", dual_lr_via_skew(&lam, &mu, &nu), &want);
    rec.equal("dual LR (2,2)/(1),(2) by classical expansion", Ok::<_, String>(dual_lr_via_classical(&lam, &mu, &nu)), &want);

    for (lam, mu, nu, want) in [("2", "1", "2", a(-1) - a(1)), ("3", "2,1", "3,2", a(-2) - a(2))] {
        let (lam, mu, nu) = (p(lam), p(mu), p(nu));
        rec.equal(format!("LR ({nu})/({lam}),({mu}) by interpolation"), Ok::<_, String>(lr_polynomial(&lam, &mu, &nu)), &want);
        rec.equal(format!("LR ({nu})/({lam}),({mu}) by product"), lr_polynomial_by_product(&lam, &mu, &nu), &want);
    }

    let published = a(-2) + a(-1) - a(1) - a(2);
    for (name, m) in [("expansion", KostkaDualMethod::Expansion), ("LR chain", KostkaDualMethod::LrChain)] {
        rec.equal(format!("published dual Kostka (3,2),(3,2,1) by {name}"), kostka_dual(&p("3,2"), &p("3,2,1"), m), &published);
    }

    let expected = [
        ("2", APoly::one()),
        ("1,1", APoly::one()),
        ("3", d(0, -1)),
        ("2,1", d(0, 1)),
        ("1,1,1", d(2, 1)),
        ("4", d(0, -2) * d(0, -1)),
        ("3,1", d(0, 1) * d(0, -1)),
        ("2,2", d(0, 1).pow(2)),
        ("2,1,1", d(1, 0) * d(1, 2)),
        ("1,1,1,1", d(1, 2) * d(1, 3)),
    ];
    let h1 = dual_ehp(DualKind::H, 1, 0, 4);
    let square = h1.mul(&h1).to_dual();
    for (lam, want) in &expected {
        let lam = p(lam);
        rec.equal(format!("square of dual h1 at ({lam})"), Ok::<_, String>(square.coefficient(&lam)), want);
        rec.equal(format!("Kostka ({lam}),(1,1) by dual LR chain"), kostka(&lam, &p("1,1"), 4, KostkaMethod::DualLrChain), want);
    }
    rec.push("square of dual h1 has ten terms up to degree 4", square.len() == expected.len(), square.len().to_string());

    let ms = double_monomials(3);
    let sym = |terms: &[(&str, APoly)]| DoubleSym::from_coeffs(3, terms.iter().map(|(l, c)| (p(l), c.clone())));
    let published = [
        ("1", sym(&[("1", APoly::one())])),
        ("1,1", sym(&[("1,1", APoly::one())])),
        ("2", sym(&[("2", APoly::one()), ("1,1", int(-1))])),
        ("1,1,1", sym(&[("1,1,1", APoly::one()), ("1,1", a(1) - a(2))])),
        ("2,1", sym(&[("2,1", APoly::one()), ("1,1,1", int(-2)), ("1,1", &(&int(2) * &a(2)) - &(a(1) + a(0)))])),
        ("3", sym(&[("3", APoly::one()), ("2,1", int(-1)), ("1,1,1", APoly::one()), ("1,1", a(-1) - a(0))])),
    ];
    for (lam, want) in published {
        let got = &ms[&p(lam)];
        let show = |s: &DoubleSym| crate::format::double_sym_text(s).trim_end().replace('\n', ", ");
        if *got == want {
            rec.push(format!("published double monomial ({lam})"), true, show(got));
        } else {
            rec.push(format!("published double monomial ({lam})"), false, format!("got {}, expected {}", show(got), show(&want)));
        }
    }

    let s1 = dual_schur(&p("1"), 5, DualSchurMethod::Flagged);
    let inverse = schur_to_dual(&p("1"), 5);
    match (s1, inverse) {
        (Ok(s1), Ok(inverse)) => {
            let mut hooks = rec.sweep("dual Schur (1) hook coefficients, p+q <= 4");
            let mut inv = rec.sweep("Schur (1) in dual Schur functions, p+q <= 4");
            let mut hook_count = 0;
            for pq in 0..5usize {
                for q in 0..=pq {
                    let pp = pq - q;
                    hook_count += 1;
                    let hook = FrobeniusCoords::hook(pp, q).to_partition();
                    let want = &sign(q) * &(&a(0).pow(pp as u32) * &a(1).pow(q as u32));
                    let got = s1.coefficient(&hook);
                    hooks.case(got == want, || format!("({hook}): {got} vs {want}"));
                    let up: APoly = (0..pp as i32).map(|k| a(-k)).product();
                    let down: APoly = (1..=q as i32).map(a).product();
                    let want = &sign(pp) * &(&up * &down);
                    let got = inverse.coefficient(&hook);
                    inv.case(got == want, || format!("({hook}): {got} vs {want}"));
                }
            }
            let extra = inverse.coeffs().iter().filter(|(l, _)| l.size() <= 5 && l.diagonal_count() > 1).count();
            inv.case(extra == 0 && inverse.len() == hook_count, || format!("{} terms, {extra} outside hooks", inverse.len()));
            rec.finish(hooks);
            rec.finish(inv);
        }
        (Err(e), _) | (_, Err(e)) => rec.push("single-box series", false, e.to_string()),
    }

    let mut general = rec.sweep("row dual LR by h and e sums, k <= l, k+l <= m <= 5");
    let mut columns = rec.sweep("column dual LR by h and e sums, k <= l, k+l <= m <= 5");
    let mut single = rec.sweep("row and column dual LR product formulas for k = 1");
    let mut index_sets = rec.sweep("row dual LR by index-set sums, k+l <= m <= 5");
    for m in 2..=5usize {
        for k in 1..m {
            for l in 1..=m - k {
                let case = format!("k={k} l={l} m={m}");
                let rows = dual_lr_via_skew(&Partition::row(k), &Partition::row(l), &Partition::row(m));
                let cols = dual_lr_via_skew(&Partition::column(k), &Partition::column(l), &Partition::column(m));
                if k <= l {
                    general.same(Ok::<_, String>(dual_lr_rows_by_symmetric_functions(k, l, m)), rows.clone().map_err(|e| e.to_string()), &case);
                    columns.same(Ok::<_, String>(dual_lr_columns_by_symmetric_functions(k, l, m)), cols.clone().map_err(|e| e.to_string()), &case);
                }
                if k == 1 {
                    let row_product: APoly = (0..=(m - l) as i32 - 2).map(|t| d(0, -(l as i32) - t)).product();
                    let col_product: APoly = (l + 1..m).map(|j| d(j as i32, 1)).product();
                    single.same(Ok::<_, String>(row_product), rows.clone().map_err(|e| e.to_string()), &case);
                    single.same(Ok::<_, String>(col_product), cols.map_err(|e| e.to_string()), &case);
                }
                index_sets.same(Ok::<_, String>(dual_lr_rows_by_index_sets(k, l, m)), rows.map_err(|e| e.to_string()), &case);
            }
        }
    }
    for s in [general, columns, single, index_sets] {
        rec.finish(s);
    }
    rec
}

fn character_three_ways() -> Recorder {
    let mut rec = Recorder::default();
    let (lam, mu) = (p("3,2"), p("2,1,1,1"));
    let one = APoly::one();
    rec.equal("double character by expansion", char_poly(&lam, &mu, CharacterMethod::Expansion), &one);
    rec.equal("double character by interpolation", char_poly(&lam, &mu, CharacterMethod::Interpolation), &one);
    rec.equal("dual character by flagged sums", char_dual(&lam, &mu, DualCharacterMethod::Flagged), &one);

    let hooks: Vec<Rational> =
        ["1", "2", "1,1", "3", "2,1", "2,2", "3,2"].iter().map(|rho| hook_product(&skew(&lam, &p(rho)))).collect();
    let want = [r(24, 5), r(2, 1), r(3, 1), r(2, 1), r(1, 1), r(1, 1), r(1, 1)];
    rec.push("hook products of (3,2) over (1),(2),(1,1),(3),(2,1),(2,2),(3,2)", hooks == want, format!("{hooks:?}"));
    let terms: Vec<Rational> = character_hook_terms(&lam, &mu).into_iter().map(|t| t.value).collect();
    let want = [r(-5, 24), r(32, 6), r(81, 12), r(-81, 3), r(256, 12), r(-125, 24)];
    rec.push("hook sum terms", terms == want, format!("{terms:?}"));
    match hook_identities(&lam, &mu) {
        Ok(report) => rec.push("hook sum total", report.character == Rational::one(), report.character.to_string()),
        Err(e) => rec.push("hook sum total", false, e.to_string()),
    }
    rec
}

fn cross_method() -> Recorder {
    let mut rec = Recorder::default();
    let mut s = rec.sweep("double Schur by tableau, alternant, Jacobi-Trudi, Nagelsbach-Kostka, |lambda| <= 5, n <= 4");
    for lam in Partition::all_up_to(5) {
        for n in 1..=4 {
            let t = double_schur_tableau(&lam, n);
            let case = format!("({lam}) n={n}");
            s.same(double_schur_alternant(&lam, n).map_err(|e| e.to_string()), Ok(t.clone()), &case);
            s.case(jacobi_trudi(&lam, n) == t, || format!("{case}: Jacobi-Trudi"));
            s.case(nagelsbach_kostka(&lam, n) == t, || format!("{case}: Nagelsbach-Kostka"));
        }
    }
    rec.finish(s);

    let mut s = rec.sweep("dual Schur by flagged, determinant, combinatorial, alternant, |mu| <= 3, D <= 6, n <= 3");
    for mu in Partition::all_up_to(3) {
        for degree in mu.size().max(1)..=6 {
            let case = format!("({mu}) D={degree}");
            let flagged = match dual_schur(&mu, degree, DualSchurMethod::Flagged) {
                Ok(f) => f,
                Err(e) => {
                    s.case(false, || format!("{case}: {e}"));
                    continue;
                }
            };
            s.same(dual_schur(&mu, degree, DualSchurMethod::Determinant), Ok(flagged.clone()), &case);
            for n in mu.len().max(1)..=3 {
                let restricted = flagged.restrict_length(n);
                let case = format!("{case} n={n}");
                s.same(dual_schur(&mu, degree, DualSchurMethod::Combinatorial(n)), Ok(restricted.clone()), &case);
                s.same(dual_schur(&mu, degree, DualSchurMethod::Alternant(n)), Ok(restricted), &case);
            }
        }
    }
    rec.finish(s);

    let mut s = rec.sweep("skew double Schur by A, A' supertableaux and rho sum, |nu| <= 4, n <= 3");
    for th in all_skew(4) {
        for n in 1..=3 {
            let x = skew_double_schur(&th, n, SkewMethod::SupertableauA);
            s.case(x == skew_double_schur(&th, n, SkewMethod::SupertableauAPrime), || format!("{th} n={n}: A'"));
            s.case(x == skew_double_schur(&th, n, SkewMethod::RhoSum), || format!("{th} n={n}: rho sum"));
        }
    }
    rec.finish(s);
    rec
}

fn kernel_identities() -> Recorder {
    let mut rec = Recorder::default();
    for (n, degree) in [(2, 4), (3, 5)] {
        match cauchy_check(n, degree) {
            Ok(checks) => {
                for c in checks.iter().chain(&generating_series_check(n, degree)) {
                    let note = match &c.first_difference {
                        None => "holds".to_string(),
                        Some((e, diff)) => format!("differs at {e:?} by {diff}"),
                    };
                    rec.push(format!("{} (n={n}, D={degree})", c.name), c.holds(), note);
                }
            }
            Err(e) => rec.push(format!("kernel identities (n={n}, D={degree})"), false, e.to_string()),
        }
    }
    rec
}

fn vanishing() -> Recorder {
    let mut rec = Recorder::default();
    let mut zero = rec.sweep("s_lambda(a_rho) = 0 unless lambda is inside rho, |rho| <= 5");
    let mut hook = rec.sweep("s_lambda(a_lambda) equals the hook product, |lambda| <= 5");
    let mut direct = rec.sweep("evaluation of the tableau polynomial matches the direct sum");
    let all = Partition::all_up_to(5);
    for rho in &all {
        for lam in &all {
            let v = double_schur_at(lam, rho);
            if !rho.contains(lam) {
                zero.case(v.is_zero(), || format!("({lam}) at ({rho}): {v}"));
            }
            if lam == rho {
                let want = hook_value(lam);
                hook.case(v == want, || format!("({lam}): {v} vs {want}"));
            }
            let n = rho.len().max(lam.len()).max(1);
            let at = evaluate_at(&double_schur_tableau(lam, n), &EvalPoint::a_mu(rho, n));
            direct.case(at == v, || format!("({lam}) at ({rho})"));
        }
    }
    for s in [zero, hook, direct] {
        rec.finish(s);
    }
    rec
}

fn classical_limits() -> Recorder {
    let mut rec = Recorder::default();
    let all = Partition::all_up_to(5);
    let mut lr = rec.sweep("LR polynomials at a = 0 are LR coefficients, |nu| <= 5");
    for nu in &all {
        let subs = nu.subpartitions();
        for lam in &subs {
            for mu in &subs {
                let c = at_zero(&lr_polynomial(lam, mu, nu));
                let want = if lam.size() + mu.size() == nu.size() { lr_coefficient(lam, mu, nu) as i64 } else { 0 };
                lr.case(c == int(want), || format!("({lam}),({mu}) in ({nu}): {c} vs {want}"));
            }
        }
    }
    rec.finish(lr);

    let mut kd = rec.sweep("dual Kostka at a = 0 counts tableaux, sizes <= 5");
    let mut k = rec.sweep("Kostka at a = 0 counts tableaux, sizes <= 5");
    let mut chi = rec.sweep("characters at a = 0 are Murnaghan-Nakayama values, sizes <= 5");
    for mu in &all {
        for lam in &all {
            let classical =
                if lam.size() == mu.size() { kostka_number(&SkewShape::straight(lam.clone()), mu) as i64 } else { 0 };
            let case = format!("({lam}),({mu})");
            kd.same(kostka_dual(lam, mu, KostkaDualMethod::Expansion).map(|c| at_zero(&c)), Ok(int(classical)), &case);
            k.same(kostka(lam, mu, 5, KostkaMethod::DualProduct).map(|c| at_zero(&c)), Ok(int(classical)), &case);
            if !mu.is_empty() {
                let mn = if lam.size() == mu.size() { mn_character(lam, mu) } else { 0 };
                chi.same(char_poly(lam, mu, CharacterMethod::Expansion).map(|c| at_zero(&c)), Ok(int(mn)), &case);
            }
        }
    }
    for s in [kd, k, chi] {
        rec.finish(s);
    }
    rec
}

fn symmetries() -> Recorder {
    let mut rec = Recorder::default();
    let mut lr = rec.sweep("LR polynomials under conjugation, |nu| <= 4");
    let mut dual = rec.sweep("dual LR polynomials under conjugation, |nu| <= 4");
    for nu in Partition::all_up_to(4) {
        let subs = nu.subpartitions();
        for lam in &subs {
            for mu in &subs {
                let (lc, mc, nc) = (lam.conjugate(), mu.conjugate(), nu.conjugate());
                let case = format!("({lam}),({mu}) in ({nu})");
                let c = lr_polynomial(lam, mu, &nu);
                let cc = lr_polynomial(&lc, &mc, &nc).dualize();
                lr.case(c == cc, || format!("{case}: {c} vs {cc}"));
                dual.same(dual_lr_via_skew(lam, mu, &nu), dual_lr_via_skew(&lc, &mc, &nc).map(|c| c.dualize()), &case);
            }
        }
    }
    rec.finish(lr);
    rec.finish(dual);

    let mut swap = rec.sweep("supersymmetric Schur under swapping alphabets and conjugating, |theta| <= 4");
    for th in all_skew(4) {
        for n in 1..=2 {
            let s = supersymmetric_schur(&th, n, n, SuperOrder::A);
            let order: Vec<usize> = (n..2 * n).chain(0..n).collect();
            let other = supersymmetric_schur(&th.conjugate(), n, n, SuperOrder::A)
                .map_coeffs(|c| c.dualize())
                .relabel(&order, 2 * n);
            swap.case(s == other, || format!("{th} n={n}"));
        }
    }
    rec.finish(swap);
    rec
}

fn power_sum_series(lambda: &Partition, degree: usize) -> Result<SchurSeries, String> {
    let n = degree.max(1);
    let sum = |k: usize| (0..n).fold(XPoly::zero(n), |s, i| s.add(&XPoly::var(n, i).pow(k as u32)));
    let poly = lambda.parts().iter().fold(XPoly::one(n), |acc, &k| acc.mul(&sum(k)));
    classical_expansion(&poly, degree).map_err(|e| e.to_string())
}

fn duality() -> Recorder {
    let mut rec = Recorder::default();
    let (phi, psi) = (phi_matrix(6), psi_matrix(6));
    let inverse = |m: Option<dsym_core::transition::TransitionMatrix>| m.is_some_and(|m| m.is_identity());
    rec.push("flagged matrices phi psi = I to degree 6", inverse(phi.mul(&psi)), format!("{} rows", phi.rows().len()));
    rec.push("flagged matrices psi phi = I to degree 6", inverse(psi.mul(&phi)), format!("{} rows", psi.rows().len()));

    let degree = 4;
    let pairing = match Pairing::new(degree) {
        Ok(pairing) => pairing,
        Err(e) => {
            rec.push("pairing tables", false, e.to_string());
            return rec;
        }
    };
    let all = Partition::all_up_to(degree);
    let monomials = double_monomials(degree);
    let mut schur = rec.sweep("<s, dual s> = delta to degree 4");
    let mut power = rec.sweep("<p, p> = z delta to degree 4");
    let mut mono = rec.sweep("<m, dual h> = delta to degree 4");
    let mut adjoint = rec.sweep("omega maps are adjoint under the pairing to degree 4");
    let hats: BTreeMap<&Partition, _> = all.iter().map(|l| (l, dual_schur(l, degree, DualSchurMethod::Flagged))).collect();
    let powers: BTreeMap<&Partition, _> = all.iter().map(|l| (l, power_sum_series(l, degree))).collect();
    let double_powers: BTreeMap<&Partition, _> = all
        .iter()
        .map(|l| (l, expand_in_double_schur(&double_ehp_product(EhpKind::P, l, degree), ExpandMethod::Elimination)))
        .collect();
    for l in &all {
        let s = DoubleSym::basis(l.clone(), degree);
        for m in &all {
            let delta = if l == m { APoly::one() } else { APoly::zero() };
            let case = format!("({l}),({m})");
            match (&hats[m], &powers[m], &double_powers[l]) {
                (Ok(hat), Ok(pm), Ok(pl)) => {
                    let v = pairing.pair(&s, hat);
                    schur.case(v == delta, || format!("{case}: {v}"));
                    let z = if l == m { APoly::constant(z_lambda(l)) } else { APoly::zero() };
                    let v = pairing.pair(pl, pm);
                    power.case(v == z, || format!("{case}: {v}"));
                    let h = dual_complete_product(m, degree).to_classical();
                    let v = pairing.pair(&monomials[l], &h);
                    mono.case(v == delta, || format!("{case}: {v}"));
                    for (u, w) in [(&s, hat), (&monomials[l], pm)] {
                        match omega_hat(w) {
                            Ok(ow) => {
                                let left = pairing.pair(&u.omega_a(), &ow.dualize()).dualize();
                                let right = pairing.pair(u, w);
                                adjoint.case(left == right, || format!("{case}: {left} vs {right}"));
                            }
                            Err(e) => adjoint.case(false, || format!("{case}: {e}")),
                        }
                    }
                }
                _ => schur.case(false, || format!("{case}: series construction failed")),
            }
        }
    }
    for s in [schur, power, mono, adjoint] {
        rec.finish(s);
    }

    let mut inv = rec.sweep("omega_a twice is the identity, |lambda| <= 4");
    let mut hat_inv = rec.sweep("omega hat twice is the identity, |mu| <= 3, D = 5");
    let mut h_to_e = rec.sweep("omega_a sends double h products to double e products, |lambda| <= 4");
    for l in &all {
        let u = DoubleSym::from_coeffs(degree, [(l.clone(), a(1) * a(-2) + int(3)), (Partition::empty(), a(0))]);
        inv.case(u.omega_a().omega_a() == u, || format!("({l})"));
        let expand = |kind| expand_in_double_schur(&double_ehp_product(kind, l, degree), ExpandMethod::Elimination);
        h_to_e.same(expand(EhpKind::H).map(|h| h.omega_a()), expand(EhpKind::E), format!("({l})"));
        if l.size() <= 3 {
            if let Ok(hat) = dual_schur(l, 5, DualSchurMethod::Flagged) {
                let twice = omega_hat(&hat).and_then(|w| omega_hat(&w));
                hat_inv.same(twice, Ok(hat), format!("({l})"));
            }
        }
    }
    for s in [inv, hat_inv, h_to_e] {
        rec.finish(s);
    }
    rec
}

fn chain_sums() -> Recorder {
    let mut rec = Recorder::default();
    let all = Partition::all_up_to(4);
    let mut kinds: Vec<(InterpolationKind, APoly)> = Vec::new();
    for lam in &all {
        for mu in &all {
            if let Ok(v) = kostka_dual(lam, mu, KostkaDualMethod::LrChain) {
                kinds.push((InterpolationKind::KostkaDual { lambda: lam.clone(), mu: mu.clone() }, v));
            }
            if !mu.is_empty() {
                if let Ok(v) = char_poly(lam, mu, CharacterMethod::Expansion) {
                    kinds.push((InterpolationKind::Character { lambda: lam.clone(), mu: mu.clone() }, v));
                }
            }
        }
    }
    for nu in &all {
        let subs = nu.subpartitions();
        for lam in &subs {
            for mu in &subs {
                kinds.push((
                    InterpolationKind::Lr { lambda: lam.clone(), mu: mu.clone(), nu: nu.clone() },
                    lr_polynomial(lam, mu, nu),
                ));
                if let Ok(v) = dual_lr_via_skew(lam, mu, nu) {
                    kinds.push((InterpolationKind::DualLr { lambda: lam.clone(), mu: mu.clone(), nu: nu.clone() }, v));
                }
            }
        }
    }
    let label = |k: &InterpolationKind| match k {
        InterpolationKind::KostkaDual { .. } => "dual Kostka",
        InterpolationKind::Character { .. } => "character",
        InterpolationKind::DualLr { .. } => "dual LR",
        InterpolationKind::Lr { .. } => "LR",
    };
    let mut sweeps: BTreeMap<&str, Sweep> = BTreeMap::new();
    for name in ["LR", "dual LR", "dual Kostka", "character"] {
        sweeps.insert(name, rec.sweep(&format!("{name} chain sums for 20 generic specializations, sizes <= 4")));
    }
    for seed in 1..=20u64 {
        let spec = ASpec::Generic { seed };
        for (kind, symbolic) in &kinds {
            let sweep = sweeps.get_mut(label(kind)).expect("all kinds listed");
            sweep.same(rational_interpolation_eval(kind, &spec).map_err(|e| e.to_string()), symbolic.evaluate(&spec).map_err(|e| e.to_string()), format!("{kind:?} seed {seed}"));
        }
    }
    for name in ["LR", "dual LR", "dual Kostka", "character"] {
        let s = sweeps.remove(name).expect("inserted above");
        rec.finish(s);
    }

    let mut dims = rec.sweep("character on single boxes is the dimension, n <= 5");
    for size in 1..=5 {
        let ones = Partition::column(size);
        for lam in Partition::all_of_size(size) {
            let (dim, _) = SkewShape::straight(lam.clone()).dim_and_hook();
            let kind = InterpolationKind::Character { lambda: lam.clone(), mu: ones.clone() };
            dims.same(rational_interpolation_eval(&kind, &ASpec::Generic { seed: 1 }), Ok(Rational::from_int(dim as i64)), format!("({lam})"));
        }
    }
    rec.finish(dims);
    rec
}

fn graham() -> Recorder {
    let mut rec = Recorder::default();
    let mut s = rec.sweep("LR polynomials are Graham-positive, |nu| <= 4");
    for nu in Partition::all_up_to(4) {
        let subs = nu.subpartitions();
        for lam in &subs {
            for mu in &subs {
                let c = lr_polynomial(lam, mu, &nu);
                s.case(is_graham_positive(&c), || format!("({lam}),({mu}) in ({nu}): {c}"));
            }
        }
    }
    rec.finish(s);
    rec
}

/// Acceptance failures that come from published values the library
/// computes differently.
pub const KNOWN_FAILURES: [(usize, &str); 3] = [
    (1, "published dual Kostka (3,2),(3,2,1) by expansion"),
    (1, "published dual Kostka (3,2),(3,2,1) by LR chain"),
    (1, "published double monomial (3)"),
];
