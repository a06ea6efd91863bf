use std::io::Write;

use anyhow::{anyhow, bail, Context};
use clap::ValueEnum;
use serde_json::{json, Value};

use bicrank_core::asymptotics::{check_asymptotic_range, dominance_scan};
use bicrank_core::bicrank::{
    diff_series, sign_report, two_colored_partitions, verify_mod5, verify_specializations,
};
use bicrank_core::identities::verify_catalog;
use bicrank_core::report::{asymptotic_table, catalog_table, dominance_table, Report, Table};
use bicrank_core::{BicrankTable, Modulus, PowerSeries, ResidueTable};

use crate::{Expansion, Format, RunConfig, Theorem};

/// One verification suite: its defaults and the exceptions it expects.
struct Suite {
    theorem: Theorem,
    modulus: Option<Modulus>,
    default_order: usize,
    default_range: (u64, u64),
    expected_exceptions: &'static [usize],
}

const SUITES: &[Suite] = &[
    Suite {
        theorem: Theorem::T1,
        modulus: Some(Modulus::Two),
        default_order: 5000,
        default_range: (0, 0),
        expected_exceptions: &[],
    },
    Suite {
        theorem: Theorem::T2,
        modulus: Some(Modulus::Three),
        default_order: 2000,
        default_range: (0, 0),
        expected_exceptions: &[5],
    },
    Suite {
        theorem: Theorem::T4,
        modulus: Some(Modulus::Four),
        default_order: 5000,
        default_range: (0, 0),
        expected_exceptions: &[4, 20],
    },
    Suite {
        theorem: Theorem::Mod5,
        modulus: None,
        default_order: 60,
        default_range: (0, 0),
        expected_exceptions: &[],
    },
    Suite {
        theorem: Theorem::Identities,
        modulus: None,
        default_order: 600,
        default_range: (0, 0),
        expected_exceptions: &[],
    },
    Suite {
        theorem: Theorem::Asy3,
        modulus: Some(Modulus::Three),
        default_order: 0,
        default_range: (1, 1200),
        expected_exceptions: &[],
    },
    Suite {
        theorem: Theorem::Asy5,
        modulus: Some(Modulus::Four),
        default_order: 0,
        default_range: (1, 1200),
        expected_exceptions: &[],
    },
];

/// Largest index for the table cross-check attached to the sign suites.
const TABLE_CROSS_CHECK: usize = 200;

pub fn name_of<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

enum Body {
    List(String),
    Report(Report),
}

pub struct Outcome {
    body: Body,
    format: Format,
    pub passed: bool,
}

impl Outcome {
    fn report(
        config: &RunConfig,
        table: Table,
        summary: Value,
        passed: bool,
    ) -> anyhow::Result<Self> {
        Ok(Outcome {
            body: Body::Report(Report {
                command: format!("{} {}", config.command, config.target),
                config: serde_json::to_value(config)?,
                table,
                summary,
            }),
            format: config.format,
            passed,
        })
    }

    pub fn write<W: Write>(&self, w: &mut W) -> anyhow::Result<()> {
        match (&self.body, self.format) {
            (Body::List(s), _) => writeln!(w, "{s}")?,
            (Body::Report(r), Format::Json) => r.write_json(w)?,
            (Body::Report(r), _) => r.write_csv(w)?,
        }
        Ok(())
    }

    /// Human-readable summary, one `key: value` per line.
    pub fn write_summary<W: Write>(&self, w: &mut W) -> anyhow::Result<()> {
        if let Body::Report(r) = &self.body {
            if let Value::Object(map) = &r.summary {
                for (k, v) in map {
                    writeln!(w, "{k}: {v}")?;
                }
            }
        }
        Ok(())
    }
}

fn series_table(s: &PowerSeries) -> Table {
    let mut t = Table::new(&["exponent", "coefficient"]);
    for (n, c) in s.coeffs().iter().enumerate() {
        t.push(vec![n.to_string(), c.to_string()]);
    }
    t
}

pub fn expand(what: Expansion, config: RunConfig) -> anyhow::Result<Outcome> {
    let order = config.order.unwrap_or(0);
    let list = config.format == Format::List;
    let summary = json!({ "order": order });
    let series = match what {
        Expansion::P2 => Some(two_colored_partitions(order)),
        Expansion::Diff2 => Some(diff_series(Modulus::Two, order)),
        Expansion::Diff3 => Some(diff_series(Modulus::Three, order)),
        Expansion::Diff4 => Some(diff_series(Modulus::Four, order)),
        Expansion::Table | Expansion::Classes => None,
    };
    if let Some(s) = series {
        if list {
            return Ok(Outcome {
                body: Body::List(s.to_list()),
                format: Format::List,
                passed: true,
            });
        }
        return Outcome::report(&config, series_table(&s), summary, true);
    }

    if what == Expansion::Table {
        let table = BicrankTable::build(order);
        if list {
            let lines: Vec<String> = table
                .rows()
                .iter()
                .enumerate()
                .map(|(n, row)| format!("{n}: {row}"))
                .collect();
            return Ok(Outcome {
                body: Body::List(lines.join("\n")),
                format: Format::List,
                passed: true,
            });
        }
        let mut t = Table::new(&["n", "m", "count"]);
        for (n, row) in table.rows().iter().enumerate() {
            for (m, c) in row.iter() {
                if !c.is_zero() {
                    t.push(vec![n.to_string(), m.to_string(), c.to_string()]);
                }
            }
        }
        return Outcome::report(&config, t, summary, true);
    }

    let k = config
        .modulus
        .ok_or_else(|| anyhow!("expand classes needs --modulus"))?;
    let residues = ResidueTable::build(order, k).context("invalid class modulus")?;
    if list {
        let lines: Vec<String> = (0..=order)
            .map(|n| {
                let row = residues.row(n).expect("row within order");
                row.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        return Ok(Outcome {
            body: Body::List(lines.join("\n")),
            format: Format::List,
            passed: true,
        });
    }
    let headers: Vec<String> = std::iter::once("n".to_string())
        .chain((0..k).map(|j| format!("class_{j}")))
        .collect();
    let mut t = Table::new(&headers.iter().map(String::as_str).collect::<Vec<_>>());
    for n in 0..=order {
        let row = residues.row(n)?;
        t.push(
            std::iter::once(n.to_string())
                .chain(row.iter().map(|c| c.to_string()))
                .collect(),
        );
    }
    Outcome::report(&config, t, summary, true)
}

pub fn verify(theorem: Theorem, mut config: RunConfig) -> anyhow::Result<Outcome> {
    let suite = SUITES
        .iter()
        .find(|s| s.theorem == theorem)
        .expect("every theorem has a suite");
    match theorem {
        Theorem::T1 | Theorem::T2 | Theorem::T4 => {
            let order = *config.order.get_or_insert(suite.default_order);
            sign_suite(suite, order, &config)
        }
        Theorem::Mod5 => {
            let bound = *config.order.get_or_insert(suite.default_order);
            mod5_suite(bound, &config)
        }
        Theorem::Identities => {
            let order = *config.order.get_or_insert(suite.default_order);
            let results = verify_catalog(order)?;
            let failed: Vec<&str> = results
                .iter()
                .filter(|r| r.passed() == Some(false))
                .map(|r| r.id())
                .collect();
            let summary = json!({
                "entries": results.len(),
                "failed": failed,
                "passed": failed.is_empty(),
            });
            let passed = failed.is_empty();
            Outcome::report(&config, catalog_table(&results), summary, passed)
        }
        Theorem::Asy3 | Theorem::Asy5 => {
            let (lo, hi) = *config.range.get_or_insert(suite.default_range);
            if lo == 0 {
                bail!("the asymptotic formulas start at n = 1");
            }
            let modulus = suite.modulus.expect("asymptotic suites carry a modulus");
            let checks = check_asymptotic_range(modulus, lo, hi, config.precision)?;
            let failures: Vec<u64> = checks.iter().filter(|c| !c.passed()).map(|c| c.n).collect();
            let summary = json!({
                "modulus": modulus.value(),
                "checked": checks.len(),
                "failures": failures,
                "passed": failures.is_empty(),
            });
            let passed = failures.is_empty();
            Outcome::report(&config, asymptotic_table(&checks), summary, passed)
        }
    }
}

fn sign_suite(suite: &Suite, order: usize, config: &RunConfig) -> anyhow::Result<Outcome> {
    let modulus = suite.modulus.expect("sign suites carry a modulus");
    let report = sign_report(modulus, order);
    let found = report.exception_indices();
    let expected: Vec<usize> = suite
        .expected_exceptions
        .iter()
        .copied()
        .filter(|&n| n <= order)
        .collect();
    let unexpected: Vec<usize> = found
        .iter()
        .copied()
        .filter(|n| !expected.contains(n))
        .collect();
    let missing: Vec<usize> = expected
        .iter()
        .copied()
        .filter(|n| !found.contains(n))
        .collect();

    let top = order.min(TABLE_CROSS_CHECK);
    let table = BicrankTable::build(top);
    let filter = verify_specializations(&table, top)?;

    let mut t = Table::new(&["n", "coefficient", "predicted", "status"]);
    for e in &report.exceptions {
        let status = if expected.contains(&e.n) {
            "expected"
        } else {
            "unexpected"
        };
        t.push(vec![
            e.n.to_string(),
            e.coefficient.to_string(),
            serde_json::to_value(e.predicted)?
                .as_str()
                .unwrap_or_default()
                .to_string(),
            status.to_string(),
        ]);
    }
    let passed = unexpected.is_empty() && missing.is_empty() && filter.passed();
    let summary = json!({
        "modulus": modulus.value(),
        "order": order,
        "exceptions_found": found,
        "exceptions_expected": expected,
        "unexpected": unexpected,
        "missing": missing,
        "table_cross_check_to": top,
        "table_cross_check_passed": filter.passed(),
        "passed": passed,
    });
    Outcome::report(config, t, summary, passed)
}

fn mod5_suite(bound: usize, config: &RunConfig) -> anyhow::Result<Outcome> {
    let top = 5 * bound + 4;
    let residues = ResidueTable::build(top, 5)?;
    let report = verify_mod5(&residues, bound)?;
    let p2 = two_colored_partitions(top);
    let mut t = Table::new(&[
        "index", "class_0", "class_1", "class_2", "class_3", "class_4", "p2", "relation",
    ]);
    for n in 0..=bound {
        for idx in [5 * n + 2, 5 * n + 3, 5 * n + 4] {
            let mut row = vec![idx.to_string()];
            row.extend(residues.row(idx)?.iter().map(|c| c.to_string()));
            row.push(p2.coeff(idx).to_string());
            row.push(if idx % 5 == 3 { "congruent" } else { "equal" }.to_string());
            t.push(row);
        }
    }
    let summary = json!({
        "bound": bound,
        "table_order": top,
        "failure": serde_json::to_value(report.failure)?,
        "passed": report.passed(),
    });
    Outcome::report(config, t, summary, report.passed())
}

pub fn threshold(modulus: u32, config: RunConfig) -> anyhow::Result<Outcome> {
    let modulus = Modulus::try_from(modulus)?;
    if modulus == Modulus::Two {
        bail!("threshold scans need --modulus 3 or 4");
    }
    let (lo, hi) = config.range.expect("threshold always has a range");
    if lo == 0 {
        bail!("the main term is defined from n = 1");
    }
    let report = dominance_scan(modulus, lo, hi, config.precision)?;
    let from_reference = report.reference_threshold.max(lo);
    let holds_after_threshold = report.holds_from_reference();
    let summary = json!({
        "modulus": report.modulus,
        "range": [lo, hi],
        "nondominant": report.failures.len(),
        "last_nondominant": report.failures.last(),
        "stable_from": report.stable_from,
        "reference_threshold": report.reference_threshold,
        "holds_from_threshold": if from_reference <= hi { Some(holds_after_threshold) } else { None },
        "passed": holds_after_threshold,
    });
    Outcome::report(
        &config,
        dominance_table(&report),
        summary,
        holds_after_threshold,
    )
}
