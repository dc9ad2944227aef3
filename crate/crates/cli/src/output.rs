//! Versioned JSON envelopes and plain-text renderings.

use hilbfix_core::hilb::ComponentReport;
use serde::Serialize;

/// Bumped whenever a field of an emitted document changes meaning or disappears.
pub const SCHEMA_VERSION: &str = "hilbfix/1";

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: &'static str,
    pub command: &'a str,
    #[serde(flatten)]
    pub body: T,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(command: &str, body: T) -> String {
    let env = Envelope { schema: SCHEMA_VERSION, command, body };
    let mut s = serde_json::to_string_pretty(&env).expect("serializable output");
    s.push('\n');
    s
}

/// Fixed-width text table of component reports.
pub fn fixed_pretty(rows: &[ComponentReport]) -> String {
    let header = ["multipartition", "WG", "VS", "dim", "m", "mu(t)", "m(t)"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.label.clone(),
                yes_no(r.weight_gap).into(),
                yes_no(r.very_stable).into(),
                r.dimension.to_string(),
                r.m_non_eq.clone().unwrap_or_else(|| "-".into()),
                r.mu.to_string(),
                r.m_poly.as_ref().map(|p| p.to_string()).unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let padded: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header.map(String::from));
    for row in &cells {
        out.push_str(&line(row));
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
