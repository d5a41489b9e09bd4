//! One PASS/FAIL line per acceptance criterion. Criterion 1 compares against
//! published values, three of which the library computes differently; the
//! target fails if any other check fails or if those three start agreeing.

use dsym::verify::{run_all, KNOWN_FAILURES};

fn main() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.summary_line());
        for c in o.failures() {
            println!("    {}: {}", c.label, c.note);
        }
    }
    let failures: Vec<(usize, &str)> =
        outcomes.iter().flat_map(|o| o.failures().map(move |c| (o.id, c.label.as_str()))).collect();
    if failures != KNOWN_FAILURES {
        eprintln!("unexpected acceptance failures: {failures:?}");
        std::process::exit(1);
    }
    println!("acceptance: only the {} documented mismatches fail", KNOWN_FAILURES.len());
}
