//! Text, JSON and DOT output.

use std::fmt::Write;

use itertools::Itertools;
use serde::Serialize;

use super::input::{FunctionDocument, ParsedInput};
use crate::canonical::{aut_count, component_key, cycle_codes};
use crate::centralizer::{report, CentralizerReport};
use crate::decompose::{self, Pseudocycle};
use crate::Count;

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub cycle: Vec<usize>,
    /// Tree codes in cycle order.
    pub trees: Vec<String>,
    pub class_key: String,
    pub aut: String,
}

#[derive(Debug, Serialize)]
pub struct Digits {
    pub total: usize,
    pub bijective: usize,
}

#[derive(Debug, Serialize)]
pub struct CountsJson {
    pub total: String,
    pub bijective: String,
    pub digits: Digits,
}

/// Machine-readable analysis. Big integers are decimal strings.
#[derive(Debug, Serialize)]
pub struct AnalysisJson {
    pub input: FunctionDocument,
    pub components: Vec<ComponentJson>,
    pub counts: CountsJson,
    pub matrix: Vec<Vec<String>>,
}

struct Analysis {
    comps: Vec<Pseudocycle>,
    report: CentralizerReport<Count>,
}

fn analyze(input: &ParsedInput) -> Analysis {
    Analysis {
        comps: decompose::components(&input.function),
        report: report(&input.function),
    }
}

fn component_aut(p: &Pseudocycle) -> Count {
    p.trees().iter().map(aut_count::<Count>).product()
}

pub fn analysis_json(input: &ParsedInput) -> String {
    let a = analyze(input);
    let total = a.report.total.to_string();
    let bijective = a.report.bijective_total.to_string();
    let doc = AnalysisJson {
        input: input.document(),
        components: a
            .comps
            .iter()
            .map(|p| ComponentJson {
                cycle: p.cycle().to_vec(),
                trees: cycle_codes(p).iter().map(|c| c.to_string()).collect(),
                class_key: component_key(p),
                aut: component_aut(p).to_string(),
            })
            .collect(),
        counts: CountsJson {
            digits: Digits {
                total: total.len(),
                bijective: bijective.len(),
            },
            total,
            bijective,
        },
        matrix: a
            .report
            .per_component
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

pub fn analysis_text(input: &ParsedInput) -> String {
    let a = analyze(input);
    let f = &input.function;
    let mut out = String::new();
    writeln!(out, "n: {}", f.len()).unwrap();
    writeln!(out, "map: {f}").unwrap();
    writeln!(out, "components: {}", a.comps.len()).unwrap();
    for (i, p) in a.comps.iter().enumerate() {
        let cycle = p.cycle().iter().map(|&v| input.label(v)).join(" -> ");
        writeln!(out, "  P{i}: cycle ({cycle}), {} vertices", p.size()).unwrap();
        for (t, code) in p.trees().iter().zip(cycle_codes(p)) {
            writeln!(
                out,
                "    tree at {}: {code} ({} vertices)",
                input.label(t.root()),
                t.len()
            )
            .unwrap();
        }
        writeln!(out, "    class: {}", component_key(p)).unwrap();
        writeln!(out, "    tree automorphisms: {}", component_aut(p)).unwrap();
    }
    writeln!(out, "classes: {}", a.report.class_summary.len()).unwrap();
    for c in &a.report.class_summary {
        writeln!(
            out,
            "  {} multiplicity {} index {}: {}! * {}^{} * {} = {}",
            c.key,
            c.multiplicity,
            c.index,
            c.multiplicity,
            c.index,
            c.multiplicity,
            c.automorphisms,
            c.permutations.clone() * c.rotations.clone() * c.automorphisms.clone()
        )
        .unwrap();
    }
    writeln!(out, "hom counts (row: source, column: target):").unwrap();
    for row in &a.report.per_component {
        writeln!(out, "  {}", row.iter().join(" ")).unwrap();
    }
    let total = a.report.total.to_string();
    let bij = a.report.bijective_total.to_string();
    writeln!(out, "total: {total} ({} digits)", total.len()).unwrap();
    writeln!(out, "bijective: {bij} ({} digits)", bij.len()).unwrap();
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source: one cluster per component, one node per vertex and one
/// edge `v -> f(v)` per vertex.
pub fn dot(input: &ParsedInput) -> String {
    let f = &input.function;
    let mut out = String::from("digraph functional_graph {\n");
    for (i, p) in decompose::components(f).iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label={};", quote(&component_key(p))).unwrap();
        for v in p.vertices() {
            writeln!(out, "    v{v} [label={}];", quote(&input.label(v))).unwrap();
        }
        for v in p.vertices() {
            writeln!(out, "    v{v} -> v{};", f.apply(v)).unwrap();
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
