//! Text/JSON/TSV/DOT rendering. All outputs are byte-stable: collections
//! arrive in canonical order and JSON maps are keyed by composition
//! strings in sorted order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use srct::classes::SrctClass;
use srct::linalg::IntMatrix;
use srct::posets::{ClassRankStats, FinitePoset};
use srct::qsym::QSymF;
use srct::shifted::{CountFamily, CountReport};

use crate::Format;

pub fn json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn tableaux_text<T: std::fmt::Display>(tableaux: &[T]) -> String {
    let mut out = String::new();
    for t in tableaux {
        let _ = writeln!(out, "{t}");
    }
    let _ = write!(out, "total {}", tableaux.len());
    out
}

/// Expansion lines `coef F(parts)`, or a `{composition: coefficient}` map.
pub fn expansion(f: &QSymF, format: Format) -> String {
    match format {
        Format::Json => {
            let map: BTreeMap<String, i64> =
                f.terms().map(|(a, c)| (a.to_string(), c)).collect();
            json_pretty(&map)
        }
        _ => {
            let mut out = String::new();
            for (alpha, c) in f.terms() {
                let _ = writeln!(out, "{c} F({alpha})");
            }
            let _ = write!(out, "terms {}, degree {}", f.support_len(), f.degree());
            out
        }
    }
}

pub fn classes_json(classes: &[SrctClass]) -> String {
    let values: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "size": c.len(),
                "st": c.st(),
                "source": c.source(),
                "sink": c.sink(),
                "drn": c.drn(),
            })
        })
        .collect();
    json_pretty(&values)
}

pub fn classes_text(classes: &[SrctClass]) -> String {
    let mut out = String::new();
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "class {i}: size {}, st {}, drn {:?}",
            c.len(),
            c.st_key(),
            c.drn()
        );
        let _ = writeln!(out, "  source {}", c.source());
        let _ = writeln!(out, "  sink   {}", c.sink());
    }
    let _ = write!(out, "total classes {}", classes.len());
    out
}

pub fn poset_text(poset: &FinitePoset) -> String {
    let mut out = String::new();
    for (i, label) in poset.labels().iter().enumerate() {
        let rank = poset.ranks().map(|r| r[i]).unwrap_or(0);
        let _ = writeln!(out, "{i}: {label} (rank {rank})");
    }
    for &(a, b) in poset.covers() {
        let _ = writeln!(out, "{a} < {b}");
    }
    let _ = write!(
        out,
        "elements {}, covers {}",
        poset.len(),
        poset.covers().len()
    );
    out
}

pub fn module_body<T: Serialize + std::fmt::Display>(
    header: Value,
    basis: &[T],
    gens: &[IntMatrix],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let mut value = header;
            value["dim"] = json!(basis.len());
            value["basis"] = serde_json::to_value(basis).expect("serializable");
            value["generators"] = serde_json::to_value(gens).expect("serializable");
            json_pretty(&value)
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "dim {}", basis.len());
            for (i, t) in basis.iter().enumerate() {
                let _ = writeln!(out, "basis {i}: {t}");
            }
            for (i, a) in gens.iter().enumerate() {
                let _ = writeln!(out, "pi_{}:", i + 1);
                for row in a.to_rows() {
                    let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                    let _ = writeln!(out, "  {}", cells.join(" "));
                }
            }
            let _ = write!(out, "generators {}", gens.len());
            out
        }
    }
}

fn family_json(report: &CountReport) -> Value {
    let (name, parameter) = match report.family {
        CountFamily::Threes { k } => ("threes", json!({ "k": k })),
        CountFamily::StaircaseDouble { n } => ("staircase-double", json!({ "n": n })),
        CountFamily::Rectangle { n, k } => ("rectangle", json!({ "n": n, "k": k })),
    };
    let as_number = |s: &str| -> Value {
        s.parse::<u64>()
            .map(Value::from)
            .unwrap_or_else(|_| Value::from(s.to_string()))
    };
    json!({
        "family": name,
        "parameter": parameter,
        "shape": report.shape,
        "formula": as_number(&report.formula),
        "enumerated": as_number(&report.enumerated),
        "match": report.matches,
    })
}

pub fn counts_body(reports: &[CountReport], format: Format) -> String {
    match format {
        Format::Json => {
            if reports.len() == 1 {
                json_pretty(&family_json(&reports[0]))
            } else {
                let values: Vec<Value> = reports.iter().map(family_json).collect();
                json_pretty(&values)
            }
        }
        Format::Tsv => {
            let mut out = String::from("family\tparameter\tshape\tformula\tenumerated\tmatch");
            for r in reports {
                let (name, parameter) = match r.family {
                    CountFamily::Threes { k } => ("threes", format!("k={k}")),
                    CountFamily::StaircaseDouble { n } => ("staircase-double", format!("n={n}")),
                    CountFamily::Rectangle { n, k } => ("rectangle", format!("n={n},k={k}")),
                };
                let _ = write!(
                    out,
                    "\n{name}\t{parameter}\t{}\t{}\t{}\t{}",
                    r.shape, r.formula, r.enumerated, r.matches
                );
            }
            out
        }
        _ => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(
                    out,
                    "{:?}: shape {}, formula {}, enumerated {}, match {}",
                    r.family, r.shape, r.formula, r.enumerated, r.matches
                );
            }
            out.pop();
            out
        }
    }
}

pub fn conjecture_body(stats: &[ClassRankStats], format: Format) -> String {
    match format {
        Format::Json => json_pretty(&stats),
        Format::Tsv => {
            let mut out =
                String::from("shape\tst\tsize\trank_vector\tunimodal\tsymmetric");
            for s in stats {
                let vector: Vec<String> = s.rank_vector.iter().map(usize::to_string).collect();
                let _ = write!(
                    out,
                    "\n{}\t{}\t{}\t{}\t{}\t{}",
                    s.shape,
                    s.st,
                    s.size,
                    vector.join(","),
                    s.rank_unimodal,
                    s.rank_symmetric
                );
            }
            out
        }
        _ => {
            let mut out = String::new();
            let mut anomalies = 0usize;
            for s in stats {
                if !s.rank_unimodal {
                    anomalies += 1;
                    let _ = writeln!(
                        out,
                        "NON-UNIMODAL shape {} class {} rank vector {:?}",
                        s.shape, s.st, s.rank_vector
                    );
                }
                if !s.rank_symmetric {
                    let _ = writeln!(
                        out,
                        "non-symmetric shape {} class {} rank vector {:?}",
                        s.shape, s.st, s.rank_vector
                    );
                }
            }
            let _ = write!(
                out,
                "classes {}, non-unimodal {anomalies}",
                stats.len()
            );
            out
        }
    }
}
