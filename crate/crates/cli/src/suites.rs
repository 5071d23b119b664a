//! Verification sweeps behind `srct verify`. Each suite fans out across
//! shapes with rayon (RAYON_NUM_THREADS controls the width), buffers
//! per-shape results, and reports them in canonical shape order; the first
//! failure in that order becomes the machine-readable counterexample.

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use srct::classes::{equivalence_classes, is_sink, is_source};
use srct::compositions::Composition;
use srct::hecke::verify_hecke_relations;
use srct::modrep::{
    branching_check, build_module, commutant, indecomposability_verdict, restrict_and_verify,
    IndecomposabilityVerdict,
};
use srct::posets::{bruhat_interval, flip_poset, is_lattice, verify_interval_iso};
use srct::qsym::{
    canonical_transition_matrix, quasisymmetric_schur, schur_expansion_check,
};
use srct::shifted::{class_bijection, count_report, CountFamily};
use srct::tableaux::Tableau;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    /// 0-Hecke relations on every SRCT (default n <= 7).
    Relations,
    /// Module characteristics equal quasisymmetric Schur functions (n <= 7).
    Characteristic,
    /// Schur refinement against the SSYT oracle (n <= 6).
    Schur,
    /// Unique source/sink and entry-1 placement per class (n <= 7).
    Classes,
    /// Flip posets are the Bruhat interval lattices (n <= 6).
    Bruhat,
    /// Simple <=> one class <=> commutant dimension 1 (n <= 6).
    Indec,
    /// Canonical-over-fundamental transition matrices unitriangular (n <= 6).
    CanonicalBasis,
    /// Count formulas against enumeration, bijection bound from --n (default 9).
    Counts,
    /// Restriction block intertwining for all m (default |alpha| <= 5).
    Restriction,
    /// Branching into removable-node reductions (n <= 6).
    Branching,
    /// Everything above at its default bound.
    All,
}

fn default_bound(suite: Suite) -> usize {
    match suite {
        Suite::Relations | Suite::Characteristic | Suite::Classes => 7,
        Suite::Schur
        | Suite::Bruhat
        | Suite::Indec
        | Suite::CanonicalBasis
        | Suite::Branching => 6,
        Suite::Restriction => 5,
        Suite::Counts => 9,
        Suite::All => 0,
    }
}

struct QuietPanics;

impl QuietPanics {
    fn install() -> Self {
        std::panic::set_hook(Box::new(|_| {}));
        QuietPanics
    }
}

impl Drop for QuietPanics {
    fn drop(&mut self) {
        let _ = std::panic::take_hook();
    }
}

fn guard<F: FnOnce() -> Result<(), Value>>(shape: &Composition, f: F) -> Result<(), Value> {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(result) => result,
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            Err(json!({"shape": shape, "panic": message}))
        }
    }
}

/// Runs `check` on every composition of every size up to `max_n`,
/// in parallel per size, reporting the first failure in canonical order.
fn sweep_shapes<F>(suite_name: &str, max_n: usize, check: F) -> Result<String, Value>
where
    F: Fn(&Composition) -> Result<(), Value> + Sync,
{
    let mut lines = Vec::new();
    for n in 1..=max_n {
        let shapes = Composition::all(n);
        let results: Vec<Result<(), Value>> = shapes
            .par_iter()
            .map(|alpha| guard(alpha, || check(alpha)))
            .collect();
        for (alpha, result) in shapes.iter().zip(results) {
            if let Err(witness) = result {
                return Err(json!({
                    "suite": suite_name,
                    "shape": alpha,
                    "counterexample": witness,
                }));
            }
        }
        lines.push(format!("{suite_name}: n={n} ok ({} shapes)", shapes.len()));
    }
    lines.push(format!("suite {suite_name}: ok"));
    Ok(lines.join("\n"))
}

fn relations(max_n: usize) -> Result<String, Value> {
    sweep_shapes("relations", max_n, |alpha| {
        verify_hecke_relations(alpha)
            .map_err(|witness| serde_json::to_value(&*witness).expect("serializable"))
    })
}

fn characteristic(max_n: usize) -> Result<String, Value> {
    sweep_shapes("characteristic", max_n, |alpha| {
        let module_char = build_module(alpha).characteristic();
        let expansion = quasisymmetric_schur(alpha);
        if module_char == expansion {
            Ok(())
        } else {
            Err(json!({"module": module_char, "expansion": expansion}))
        }
    })
}

fn schur(max_n: usize) -> Result<String, Value> {
    let mut lines = Vec::new();
    for n in 1..=max_n {
        for lambda in Composition::partitions(n) {
            match schur_expansion_check(&lambda) {
                Ok(true) => {}
                _ => {
                    return Err(json!({
                        "suite": "schur",
                        "partition": lambda,
                        "counterexample": "monomial expansions differ",
                    }))
                }
            }
        }
        lines.push(format!("schur: n={n} ok"));
    }
    lines.push("suite schur: ok".to_string());
    Ok(lines.join("\n"))
}

fn classes_suite(max_n: usize) -> Result<String, Value> {
    sweep_shapes("classes", max_n, |alpha| {
        for class in equivalence_classes(alpha) {
            let sources = class.members().iter().filter(|t| is_source(t)).count();
            let sinks = class.members().iter().filter(|t| is_sink(t)).count();
            let min = *class.drn().iter().next().expect("DRN nonempty");
            let max = *class.drn().iter().last().expect("DRN nonempty");
            let placement_ok = class.source().position_of(1).1 == min
                && class.sink().position_of(1).1 == max
                && class
                    .members()
                    .iter()
                    .all(|t| class.drn().contains(&t.position_of(1).1));
            if sources != 1 || sinks != 1 || !placement_ok {
                return Err(json!({
                    "class": class.st_key(),
                    "sources": sources,
                    "sinks": sinks,
                    "drn": class.drn(),
                }));
            }
        }
        Ok(())
    })
}

fn bruhat(max_n: usize) -> Result<String, Value> {
    sweep_shapes("bruhat", max_n, |alpha| {
        for class in equivalence_classes(alpha) {
            if !verify_interval_iso(&class) {
                return Err(json!({"class": class.st_key(), "problem": "interval mismatch"}));
            }
            let poset = flip_poset(&class);
            let interval = bruhat_interval(
                &class.source().column_word(),
                &class.sink().column_word(),
            )
            .map_err(|e| json!({"class": class.st_key(), "problem": e.to_string()}))?;
            for (name, p) in [("flip", &poset), ("interval", &interval)] {
                if !is_lattice(p).map_err(|e| json!({"problem": e.to_string()}))? {
                    return Err(json!({"class": class.st_key(), "problem": format!("{name} poset is not a lattice")}));
                }
            }
        }
        Ok(())
    })
}

fn indec(max_n: usize) -> Result<String, Value> {
    sweep_shapes("indec", max_n, |alpha| {
        let simple = alpha.is_simple();
        let single_class = equivalence_classes(alpha).len() == 1;
        let commutant_dim = commutant(&build_module(alpha)).dimension();
        let verdict = indecomposability_verdict(alpha);
        let expected = if simple {
            IndecomposabilityVerdict::Indecomposable
        } else {
            IndecomposabilityVerdict::Decomposable
        };
        if single_class != simple || (commutant_dim == 1) != simple || verdict != expected {
            return Err(json!({
                "is_simple": simple,
                "single_class": single_class,
                "commutant_dimension": commutant_dim,
                "verdict": verdict,
            }));
        }
        Ok(())
    })
}

fn canonical_basis(max_n: usize) -> Result<String, Value> {
    let mut lines = Vec::new();
    for n in 1..=max_n {
        let matrix = canonical_transition_matrix(n);
        if !matrix.upper_unitriangular {
            return Err(json!({
                "suite": "canonical-basis",
                "n": n,
                "counterexample": matrix,
            }));
        }
        lines.push(format!("canonical-basis: n={n} ok ({} compositions)", matrix.order.len()));
    }
    lines.push("suite canonical-basis: ok".to_string());
    Ok(lines.join("\n"))
}

fn counts(bijection_bound: usize) -> Result<String, Value> {
    let mut families: Vec<CountFamily> = Vec::new();
    families.extend((1..=5).map(|k| CountFamily::Threes { k }));
    families.extend((1..=3).map(|n| CountFamily::StaircaseDouble { n }));
    families.extend((1..=4).map(|k| CountFamily::Rectangle { n: 3, k }));
    for family in families {
        let report = count_report(family);
        if !report.matches {
            return Err(json!({"suite": "counts", "counterexample": report}));
        }
    }
    let mut checked = 0usize;
    for n in 1..=bijection_bound {
        for alpha in Composition::all(n) {
            if alpha.parts().windows(2).all(|w| w[0] < w[1]) {
                if let Err(e) = class_bijection(&alpha) {
                    return Err(json!({
                        "suite": "counts",
                        "shape": alpha,
                        "counterexample": e.to_string(),
                    }));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "counts: formulas ok; bijection ok on {checked} strict reverse partitions (size <= {bijection_bound})\nsuite counts: ok"
    ))
}

fn restriction(max_n: usize) -> Result<String, Value> {
    sweep_shapes("restriction", max_n, |alpha| {
        for m in 0..=alpha.size() {
            restrict_and_verify(alpha, m)
                .map_err(|e| serde_json::to_value(&e).expect("serializable"))?;
        }
        Ok(())
    })
}

fn branching(max_n: usize) -> Result<String, Value> {
    sweep_shapes("branching", max_n, |alpha| {
        let report = branching_check(alpha);
        if report.ok {
            Ok(())
        } else {
            Err(serde_json::to_value(&report).expect("serializable"))
        }
    })
}

pub fn run_suite(suite: Suite, n: Option<usize>) -> Result<String, Value> {
    // Falsified invariants inside the library panic; the guards turn those
    // into counterexamples, so keep the default hook from spamming stderr.
    let _quiet = QuietPanics::install();
    let bound = |s: Suite| n.unwrap_or_else(|| default_bound(s));
    match suite {
        Suite::Relations => relations(bound(suite)),
        Suite::Characteristic => characteristic(bound(suite)),
        Suite::Schur => schur(bound(suite)),
        Suite::Classes => classes_suite(bound(suite)),
        Suite::Bruhat => bruhat(bound(suite)),
        Suite::Indec => indec(bound(suite)),
        Suite::CanonicalBasis => canonical_basis(bound(suite)),
        Suite::Counts => counts(bound(suite)),
        Suite::Restriction => restriction(bound(suite)),
        Suite::Branching => branching(bound(suite)),
        Suite::All => {
            let mut parts = Vec::new();
            for s in [
                Suite::Relations,
                Suite::Characteristic,
                Suite::Schur,
                Suite::Classes,
                Suite::Bruhat,
                Suite::Indec,
                Suite::CanonicalBasis,
                Suite::Counts,
                Suite::Restriction,
                Suite::Branching,
            ] {
                parts.push(run_suite(s, n)?);
            }
            parts.push("suite all: ok".to_string());
            Ok(parts.join("\n"))
        }
    }
}
