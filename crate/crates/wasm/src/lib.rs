//! Thin JSON bindings over the core library for the browser demo page.
//!
//! Every function takes the edge-list text format and returns a JSON string,
//! so the page needs no typed glue beyond `JSON.parse`. The logic lives in
//! plain functions with string errors; the `#[wasm_bindgen]` exports only
//! convert errors to `JsValue`, which keeps everything testable on native
//! targets.

use serde_json::{json, Value};
use sunscan::chordal::{find_elimination_ordering, find_hole, EliminationKind};
use sunscan::reduction::{build_f, build_h, LabelMap, VertexRole};
use sunscan::sun::{find_any_sun, find_k_sun, SearchBudget, SearchOutcome, SunWitness};
use sunscan::{emit_graph, parse_graph, random_triangle_free, Graph};
use wasm_bindgen::prelude::*;

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

fn witness_json(w: &SunWitness) -> Value {
    json!({ "t": w.order(), "hub": w.hub(), "ears": w.ears() })
}

fn labels_json(labels: &LabelMap) -> Vec<Value> {
    labels
        .iter()
        .map(|(v, role)| match role {
            VertexRole::Sub { source, copy } => {
                json!({ "v": v, "kind": "SUB", "source": source, "copy": copy })
            }
            VertexRole::U { index } => json!({ "v": v, "kind": "U", "index": index }),
            VertexRole::W { index } => json!({ "v": v, "kind": "W", "index": index }),
            VertexRole::X { index } => json!({ "v": v, "kind": "X", "index": index }),
            VertexRole::Orig { vertex } => json!({ "v": v, "kind": "ORIG", "vertex": vertex }),
            VertexRole::Ear { a, b } => json!({ "v": v, "kind": "EAR", "a": a, "b": b }),
        })
        .collect()
}

fn parse(graph_text: &str) -> Result<Graph, String> {
    parse_graph(graph_text).map_err(|e| e.to_string())
}

fn recognize_impl(graph_text: &str) -> Result<String, String> {
    let g = parse(graph_text)?;
    let simplicial = find_elimination_ordering(&g, EliminationKind::Simplicial);
    let simple = find_elimination_ordering(&g, EliminationKind::Simple);
    let hole = if simplicial.is_none() {
        find_hole(&g).map(|c| Value::from(c.cycle().to_vec()))
    } else {
        None
    };
    let sun = if simplicial.is_some() && simple.is_none() {
        match find_any_sun(&g, SearchBudget::default()) {
            SearchOutcome::Found(w) => Some(witness_json(&w)),
            _ => None,
        }
    } else {
        None
    };
    Ok(json!({
        "graph": graph_json(&g),
        "chordal": simplicial.is_some(),
        "strongly_chordal": simple.is_some(),
        "simplicial_order": simplicial.map(|o| o.order().to_vec()),
        "simple_order": simple.map(|o| o.order().to_vec()),
        "hole": hole,
        "sun": sun,
    })
    .to_string())
}

fn detect_sun_impl(graph_text: &str, order: u32, budget: u32) -> Result<String, String> {
    let g = parse(graph_text)?;
    let budget = SearchBudget::new(budget as u64);
    let outcome = if order == 0 {
        find_any_sun(&g, budget)
    } else {
        find_k_sun(&g, order as usize, budget).map_err(|e| e.to_string())?
    };
    let value = match outcome {
        SearchOutcome::Found(w) => json!({
            "status": "found",
            "witness": witness_json(&w),
            "graph": graph_json(&g),
        }),
        SearchOutcome::Absent => json!({ "status": "absent", "graph": graph_json(&g) }),
        SearchOutcome::Indeterminate { nodes_used } => json!({
            "status": "indeterminate",
            "nodes_used": nodes_used,
            "graph": graph_json(&g),
        }),
    };
    Ok(value.to_string())
}

fn build_reduction_impl(
    kind: &str,
    graph_text: &str,
    k: u32,
    sun_budget: u32,
) -> Result<String, String> {
    let g = parse(graph_text)?;
    let (product, labels) = match kind {
        "f" => {
            let f = build_f(&g, k as usize).map_err(|e| e.to_string())?;
            (f.product().clone(), f.labels().clone())
        }
        "h" => {
            let h = build_h(&g);
            (h.product().clone(), h.labels().clone())
        }
        other => return Err(format!("unknown gadget kind {other:?}")),
    };
    let sun = match find_any_sun(&product, SearchBudget::new(sun_budget as u64)) {
        SearchOutcome::Found(w) => json!({ "status": "found", "witness": witness_json(&w) }),
        SearchOutcome::Absent => json!({ "status": "absent" }),
        SearchOutcome::Indeterminate { nodes_used } => {
            json!({ "status": "indeterminate", "nodes_used": nodes_used })
        }
    };
    Ok(json!({
        "source": graph_json(&g),
        "product": graph_json(&product),
        "labels": labels_json(&labels),
        "sun": sun,
        "text": emit_graph(&product),
    })
    .to_string())
}

/// Chordal and strongly chordal verdicts with certificates.
#[wasm_bindgen]
pub fn recognize(graph_text: &str) -> Result<String, JsValue> {
    recognize_impl(graph_text).map_err(|e| JsValue::from_str(&e))
}

/// Budgeted sun search; `order == 0` tries every order.
#[wasm_bindgen]
pub fn detect_sun(graph_text: &str, order: u32, budget: u32) -> Result<String, JsValue> {
    detect_sun_impl(graph_text, order, budget).map_err(|e| JsValue::from_str(&e))
}

/// Builds a reduction gadget (`kind` is `"f"` or `"h"`) and, when the budget
/// allows, a sun of the product for highlighting.
#[wasm_bindgen]
pub fn build_reduction(
    kind: &str,
    graph_text: &str,
    k: u32,
    sun_budget: u32,
) -> Result<String, JsValue> {
    build_reduction_impl(kind, graph_text, k, sun_budget).map_err(|e| JsValue::from_str(&e))
}

/// Seeded triangle-free instance in edge-list text form.
#[wasm_bindgen]
pub fn gen_triangle_free(n: u32, edges: u32, seed: u32) -> String {
    emit_graph(&random_triangle_free(n as usize, edges as usize, seed as u64))
}
