//! Acceptance criteria 1-10, one status line each.
//!
//! Every comparison is exact: Laurent polynomials and integers are compared for equality,
//! and the sandwich inequalities are decided in exact rational arithmetic at the pinned
//! sample points below.

use std::io::Write;

use hilbfix_cli::suites::{run_suite, Bounds, Suite};
use hilbfix_core::exactalg::{default_samples, ratio, rat};

/// Sample points for criterion 9.
fn pinned_samples() -> Vec<hilbfix_core::exactalg::Rational> {
    vec![ratio(3, 2), rat(2), rat(3)]
}

#[test]
fn acceptance_criteria() {
    assert_eq!(default_samples(), pinned_samples());
    let bounds = Bounds { samples: Some(pinned_samples()), ..Bounds::default() };
    assert_eq!(
        (bounds.closed_form_n, bounds.pairing_n, bounds.generating_n, bounds.tidality_n, bounds.order_n, bounds.sandwich_n),
        (4, 3, 6, 4, 3, 2)
    );
    assert_eq!(bounds.oracle_truncation, Some(12));

    let report = run_suite(Suite::All, &bounds);

    // Written to the process stdout directly so the lines show up without --nocapture.
    let mut out = std::io::stdout().lock();
    for c in &report.checks {
        writeln!(out, "acceptance: {}", c.line()).unwrap();
        for note in &c.notes {
            writeln!(out, "acceptance:        note: {note}").unwrap();
        }
    }
    drop(out);

    let ids: Vec<u8> = report.checks.iter().map(|c| c.criterion).collect();
    assert_eq!(ids, (1..=10).collect::<Vec<_>>());
    // The two table entries that are compared against corrected values.
    assert_eq!(report.checks[0].notes.len(), 2, "{:?}", report.checks[0].notes);
    let failed: Vec<String> = report.checks.iter().filter(|c| !c.passed).map(|c| c.line()).collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
