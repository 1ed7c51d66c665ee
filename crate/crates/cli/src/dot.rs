//! Graphviz export: vertices labelled with function values, edges with
//! lengths and slopes.

use std::fmt::Write;

use tropweil::{PLFunction, TropicalCurve};

/// Labels may carry `\n` escapes, so backslashes pass through.
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn export_dot(curve: &TropicalCurve, f: Option<&PLFunction>) -> String {
    let mut out = String::from("graph tropical_curve {\n");
    for v in curve.vertex_ids() {
        let name = curve.vertex_name(v);
        let label = match f {
            Some(f) => format!("{name}\\nf = {}", f.vertex_values()[v.0]),
            None => name.to_string(),
        };
        writeln!(out, "  {} [label={}];", quote(name), quote(&label)).expect("string write");
    }
    for e in curve.edge_ids() {
        let edge = curve.edge(e);
        let mut label = format!("{} ({})", edge.name, edge.length);
        if let Some(f) = f {
            let slopes: Vec<String> = f.slopes(e).iter().map(ToString::to_string).collect();
            write!(label, "\\nslopes {}", slopes.join(", ")).expect("string write");
        }
        writeln!(
            out,
            "  {} -- {} [label={}];",
            quote(curve.vertex_name(edge.tail)),
            quote(curve.vertex_name(edge.head)),
            quote(&label)
        )
        .expect("string write");
    }
    out.push_str("}\n");
    out
}
