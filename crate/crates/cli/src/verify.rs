//! Identity sweeps for `detvar verify`.
//!
//! Each suite expands to a list of parameter points that are evaluated in
//! parallel; rows are sorted afterwards so the report does not depend on
//! scheduling.

use detvar::combinatorics::{v_property_sum, verify_lemma2};
use detvar::eids::{build_generic_system, eu_section_low_q, solve_polar_multiplicities};
use detvar::{chi_bar_slice, csm_cycle, eu_closed, eu_recurrence, evaluate_cycle_at_stratum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::report::{Report, Table};
use crate::{EXIT_COUNTEREXAMPLE, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    All,
    Eu,
    Lemma2,
    VProperty,
    Csm,
    GenericSystem,
    Section,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Eu,
        Suite::Lemma2,
        Suite::VProperty,
        Suite::Csm,
        Suite::GenericSystem,
        Suite::Section,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Eu => "eu",
            Suite::Lemma2 => "lemma2",
            Suite::VProperty => "v-property",
            Suite::Csm => "csm",
            Suite::GenericSystem => "generic-system",
            Suite::Section => "section",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Case {
    suite: Suite,
    n: u32,
    k: Option<u32>,
    s: u32,
    j: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    case: Case,
    pub value: String,
    pub expected: String,
    pub ok: bool,
}

impl Row {
    fn record(&self) -> Vec<String> {
        let opt = |v: Option<u32>| v.map(|v| v.to_string()).unwrap_or_default();
        vec![
            self.case.suite.name().to_string(),
            self.case.n.to_string(),
            opt(self.case.k),
            self.case.s.to_string(),
            opt(self.case.j),
            self.value.clone(),
            self.expected.clone(),
            self.ok.to_string(),
        ]
    }
}

pub const HEADER: [&str; 8] = ["suite", "n", "k", "s", "j", "value", "expected", "ok"];

fn cases(suite: Suite, n_max: u32, k_max: u32, s_max: Option<u32>) -> Vec<Case> {
    let mut out = Vec::new();
    let case = |n, k, s, j| Case { suite, n, k, s, j };
    for n in 1..=n_max {
        let top = s_max.map_or(n, |m| m.min(n));
        let s_from = match suite {
            Suite::Lemma2 | Suite::Section => 2,
            _ => 1,
        };
        for s in s_from..=top {
            match suite {
                Suite::Csm => out.extend((1..=s).map(|j| case(n, None, s, Some(j)))),
                Suite::GenericSystem => out.extend((0..=k_max).map(|k| case(n, Some(k), s, None))),
                _ => out.push(case(n, None, s, None)),
            }
        }
    }
    out
}

fn evaluate(c: Case) -> Row {
    let (value, expected) = match eval_pair(c) {
        Ok(pair) => pair,
        Err(e) => (format!("error[{}]", e.code()), String::new()),
    };
    Row {
        case: c,
        ok: !expected.is_empty() && value == expected,
        value,
        expected,
    }
}

fn eval_pair(c: Case) -> detvar::Result<(String, String)> {
    let one = BigInt::from(1);
    Ok(match c.suite {
        Suite::Eu => (
            eu_recurrence(c.s, c.n)?.to_string(),
            eu_closed(c.s, c.n)?.to_string(),
        ),
        Suite::Lemma2 => {
            let chk = verify_lemma2(c.n, c.s)?;
            (chk.lhs.to_string(), chk.rhs.to_string())
        }
        Suite::VProperty => (v_property_sum(c.n, c.s).to_string(), one.to_string()),
        Suite::Csm => {
            let cycle = csm_cycle(c.s, c.n)?;
            let j = c.j.expect("csm cases carry j");
            (evaluate_cycle_at_stratum(&cycle, j)?.to_string(), one.to_string())
        }
        Suite::GenericSystem => {
            let k = c.k.expect("generic-system cases carry k");
            let x = solve_polar_multiplicities(&build_generic_system(c.n, k, c.s)?)?;
            let expected: Vec<String> = (0..c.s).map(|i| u8::from(i == 0).to_string()).collect();
            (join(x.iter().map(|v| v.to_string())), join(expected.into_iter()))
        }
        Suite::Section => {
            let star = (2..=c.s)
                .map(|i| chi_bar_slice(i, c.n))
                .collect::<detvar::Result<Vec<_>>>()?;
            (
                eu_section_low_q(c.s, c.n, &star)?.to_string(),
                eu_closed(c.s, c.n)?.to_string(),
            )
        }
        Suite::All => unreachable!("expanded before evaluation"),
    })
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(" ")
}

/// Evaluate the sweep and return sorted rows.
pub fn sweep(suite: Suite, n_max: u32, k_max: u32, s_max: Option<u32>) -> Vec<Row> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let all: Vec<Case> = suites
        .into_iter()
        .flat_map(|s| cases(s, n_max, k_max, s_max))
        .collect();
    let mut rows: Vec<Row> = all.into_par_iter().map(evaluate).collect();
    rows.sort();
    rows
}

pub fn run(suite: Suite, n_max: u32, k_max: u32, s_max: Option<u32>) -> (Report, i32) {
    let rows = sweep(suite, n_max, k_max, s_max);
    let failures: Vec<&Row> = rows.iter().filter(|r| !r.ok).collect();

    let mut r = Report::new("verify", "identity-sweep");
    r.field("suite", suite.name())
        .field("n_max", n_max)
        .field("k_max", k_max)
        .field("s_max", s_max.map_or(Value::Null, Value::from))
        .field("cases", rows.len())
        .field("counterexamples", failures.len());

    let mut per_suite = Map::new();
    for s in Suite::EACH {
        let of: Vec<&Row> = rows.iter().filter(|r| r.case.suite == s).collect();
        if of.is_empty() {
            continue;
        }
        let mut o = Map::new();
        o.insert("cases".into(), of.len().into());
        o.insert(
            "counterexamples".into(),
            of.iter().filter(|r| !r.ok).count().into(),
        );
        per_suite.insert(s.name().into(), Value::Object(o));
    }
    r.field("suites", Value::Object(per_suite));
    r.field(
        "failures",
        Value::Array(
            failures
                .iter()
                .map(|row| {
                    let mut o = Map::new();
                    for (h, v) in HEADER.iter().zip(row.record()) {
                        o.insert((*h).into(), Value::String(v));
                    }
                    Value::Object(o)
                })
                .collect(),
        ),
    );
    r.field("ok", failures.is_empty());

    let mut t = Table::with_header(HEADER);
    for row in &rows {
        t.push(row.record());
    }
    for f in &failures {
        r.notes.push(format!("counterexample: {}", f.record().join(",")));
    }
    r.table = Some(t);
    r.text_table = false;
    let status = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    (r, status)
}
