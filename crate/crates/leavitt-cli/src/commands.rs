//! Report text for each subcommand.  All output is deterministic: term
//! order, subset order and witness choices are fixed by declaration order,
//! and randomized suites are seeded.

use std::fmt::Write as _;
use std::sync::Arc;

use leavitt_core::error::Result;
use leavitt_core::graph::Graph;
use leavitt_core::ideals::{
    all_saturated_hereditary, is_basically_simple, lattice_covers, quotient_graph, HereditarySet,
};
use leavitt_core::oracle::{base_change, differential_suite};
use leavitt_core::ring::{RingDescriptor, RingHom};
use leavitt_core::witness::full_witness;

use crate::expr::parse_expr;

/// Which graph condition `check` should decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    L,
    K,
    Cofinal,
    BasicSimple,
}

pub fn check(graph: &Arc<Graph>, condition: Condition) -> String {
    match condition {
        Condition::L => {
            let (ok, witness) = graph.check_condition_l();
            match witness {
                Some(cycle) => format!(
                    "condition L: {ok} (exitless cycle: {})",
                    cycle.display(graph)
                ),
                None => format!("condition L: {ok}"),
            }
        }
        Condition::K => {
            let (ok, witness) = graph.check_condition_k();
            match witness {
                Some(v) => format!(
                    "condition K: {ok} (witness vertex: {})",
                    graph.vertex_name(v)
                ),
                None => format!("condition K: {ok}"),
            }
        }
        Condition::Cofinal => format!("cofinal: {}", graph.is_cofinal()),
        Condition::BasicSimple => {
            format!("basically simple: {}", is_basically_simple(graph))
        }
    }
}

pub fn ideals_report(graph: &Arc<Graph>) -> String {
    let sets = all_saturated_hereditary(graph);
    let mut out = String::new();
    for (i, set) in sets.iter().enumerate() {
        writeln!(out, "H{i}: {}", set.display()).unwrap();
    }
    out.push_str("covers:\n");
    for (i, j) in lattice_covers(&sets) {
        writeln!(out, "H{i} < H{j}").unwrap();
    }
    out
}

pub fn eval_report(graph: &Arc<Graph>, ring: RingDescriptor, expr: &str) -> Result<String> {
    let element = parse_expr(expr, graph, ring)?;
    let mut out = format!("{element}\n");
    for (degree, component) in element.graded_components().components() {
        writeln!(out, "degree {degree}: {component}").unwrap();
    }
    Ok(out)
}

pub fn witness_report(graph: &Arc<Graph>, ring: RingDescriptor, expr: &str) -> Result<String> {
    let element = parse_expr(expr, graph, ring)?;
    let witness = full_witness(&element)?;
    Ok(format!("{}\n", witness.report()))
}

pub fn quotient_report(graph: &Arc<Graph>, set_spec: &str) -> Result<String> {
    let names: Vec<&str> = set_spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let set = HereditarySet::from_names(graph, &names)?;
    let quotient = quotient_graph(graph, &set)?;
    Ok(quotient.to_text())
}

pub fn basechange_report(
    graph: &Arc<Graph>,
    from: RingDescriptor,
    to: RingDescriptor,
    expr: &str,
) -> Result<String> {
    let hom = RingHom::new(from, to)?;
    let element = parse_expr(expr, graph, from)?;
    let image = base_change(&hom, &element)?;
    Ok(format!("{image}\n"))
}

/// Runs the seeded differential suite; the boolean reports overall success.
pub fn oracle_report(
    graph: &Arc<Graph>,
    ring: RingDescriptor,
    seed: u64,
    pairs: usize,
) -> Result<(String, bool)> {
    let report = differential_suite(graph, ring, seed, pairs)?;
    let mut out = String::new();
    writeln!(
        out,
        "family relations: {}",
        if report.family_verified {
            "ok"
        } else {
            "FAILED"
        }
    )
    .unwrap();
    writeln!(out, "pairs: {}", report.pairs).unwrap();
    writeln!(out, "additive failures: {}", report.additive_failures).unwrap();
    writeln!(
        out,
        "multiplicative failures: {}",
        report.multiplicative_failures
    )
    .unwrap();
    writeln!(
        out,
        "faithfulness failures: {}",
        report.faithfulness_failures
    )
    .unwrap();
    let passed = report.all_passed();
    writeln!(out, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    Ok((out, passed))
}
