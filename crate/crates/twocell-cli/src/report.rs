use serde_json::{json, Value};
use twocell::complex::{compute_pieces, link_graph};
use twocell::criteria::Verdict;
use twocell::{Complex2, Presentation, ReductionTrace, Weighting};

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn info(p: &Presentation, x: &Complex2, w: &Weighting) -> Value {
    let edges: Vec<Value> = (0..x.num_edges())
        .map(|e| json!({"generator": p.generators()[e], "perimeter": w.edge_perimeter(e)}))
        .collect();
    let table = compute_pieces(x);
    let cells: Vec<Value> = (0..x.num_cells())
        .map(|c| {
            let (period, exponent) = x.cell_period(c).expect("cell in range");
            json!({
                "relator": p.format_word(&p.relators()[c]),
                "length": x.boundary_len(c),
                "weight": w.cell_weight(c),
                "period": period,
                "exponent": exponent,
                "max_piece": table.max_piece[c],
                "piece_cover": table.cyclic_cover(c),
            })
        })
        .collect();
    let c_p = (0..x.num_cells()).filter_map(|c| table.cyclic_cover(c)).min();
    let girth = (0..x.num_vertices()).filter_map(|v| link_graph(x, v).expect("vertex in range").girth).min();
    let ratio = (0..x.num_cells())
        .map(|c| (table.max_piece[c], x.boundary_len(c)))
        .max_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    json!({
        "generators": p.num_generators(),
        "relators": x.num_cells(),
        "edges": edges,
        "cells": cells,
        "pieces": table.pairs.len(),
        "small_cancellation": {
            "c_p": c_p.map_or(Value::from("any"), Value::from),
            "c_prime_ratio": ratio.map(|(k, n)| format!("{k}/{n}")),
            "t_q": girth.map_or(Value::from("any"), Value::from),
        },
    })
}

pub fn info_text(v: &Value) -> String {
    let mut s = String::new();
    s.push_str("edges:\n");
    for e in v["edges"].as_array().into_iter().flatten() {
        s.push_str(&format!("  P({}) = {}\n", e["generator"].as_str().unwrap_or("?"), e["perimeter"]));
    }
    s.push_str("cells:\n");
    for (i, c) in v["cells"].as_array().into_iter().flatten().enumerate() {
        s.push_str(&format!(
            "  R{}: Wt = {}, length {}, period {}, exponent {}, max piece {}\n",
            i + 1,
            c["weight"],
            c["length"],
            c["period"],
            c["exponent"],
            c["max_piece"]
        ));
    }
    let sc = &v["small_cancellation"];
    s.push_str(&format!(
        "pieces: {}\nC(p) for p <= {}, C'(alpha) for alpha > {}, T(q) for q <= {}\n",
        v["pieces"],
        plain(&sc["c_p"]),
        plain(&sc["c_prime_ratio"]),
        plain(&sc["t_q"])
    ));
    s
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "0".to_string(),
        other => other.to_string(),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

pub fn presentation(p: &Presentation) -> Value {
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| p.format_word(r)).collect::<Vec<_>>(),
    })
}

pub fn presentation_text(p: &Presentation) -> String {
    let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
    if rels.is_empty() {
        format!("< {} | >\n", p.generators().join(", "))
    } else {
        format!("< {} | {} >\n", p.generators().join(", "), rels.join(", "))
    }
}

pub fn certificate(cert: Option<&Verdict>) -> Value {
    cert.map_or(Value::Null, |v| Value::from(v.criterion.clone()))
}

/// Steps from every trace, numbered consecutively.
pub fn trace_file(traces: &[ReductionTrace]) -> String {
    traces
        .iter()
        .flat_map(|t| &t.steps)
        .enumerate()
        .map(|(i, s)| format!("step={} kind={} P={} edges={}\n", i + 1, s.kind.label(), s.after.perimeter, s.after.edges))
        .collect()
}

pub fn steps(traces: &[ReductionTrace]) -> usize {
    traces.iter().map(|t| t.steps.len()).sum()
}
