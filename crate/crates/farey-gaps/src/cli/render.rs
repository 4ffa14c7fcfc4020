//! Output encodings: JSON documents, SVG figures and DOT graphs.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::continuants::TupleSpec;
use crate::empirical::GapHistogram;
use crate::enumeration::{Decomposition, Status, TupleTree};
use crate::farey_triangle::ConvexRegion;
use crate::proportions::{numeric_eval, NuResult, NuValue, SymbolicValue};
use crate::ratio_string;

pub fn region_json(t: &TupleSpec, reg: &ConvexRegion) -> Value {
    let vertices: Vec<Value> = reg
        .vertices()
        .iter()
        .map(|p| json!([ratio_string(&p.x), ratio_string(&p.y)]))
        .collect();
    json!({
        "tuple": t.to_string(),
        "vertices": vertices,
        "area": ratio_string(&reg.area()),
        "empty": reg.is_empty(),
    })
}

fn f(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// The region inside the Farey triangle, in a unit view box with `y` pointing up.
pub fn region_svg(t: &TupleSpec, reg: &ConvexRegion) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-0.05 -0.05 1.1 1.1" width="480" height="480">"#
    );
    let _ = writeln!(s, "  <title>T({t})</title>");
    let _ = writeln!(
        s,
        r##"  <rect x="-0.05" y="-0.05" width="1.1" height="1.1" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        s,
        r##"  <polygon points="1,1 1,0 0,0" fill="none" stroke="#000000" stroke-width="0.004"/>"##
    );
    if !reg.is_empty() {
        let pts: Vec<String> = reg
            .vertices()
            .iter()
            .map(|p| format!("{:.6},{:.6}", f(&p.x), 1.0 - f(&p.y)))
            .collect();
        let _ = writeln!(
            s,
            r##"  <polygon points="{}" fill="#9ab8d8" stroke="#1f3f66" stroke-width="0.003"/>"##,
            pts.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn enumerate_json(dec: &Decomposition) -> Value {
    let finite: Vec<Value> = dec
        .finite
        .iter()
        .map(|m| json!(TupleSpec::from_indices(&m.tuple).to_string()))
        .collect();
    let families: Vec<Value> = dec
        .families
        .iter()
        .map(|fam| {
            json!({
                "template": fam.template(),
                "progression": fam.progression(),
                "k_min": fam.k_min,
                "area_rule": fam.area_rule(),
                "continuant": fam.continuant_rule(),
            })
        })
        .collect();
    let mut v = json!({
        "r": dec.r,
        "D": dec.spec.d,
        "c0": dec.spec.c0,
        "c1": dec.spec.c1,
        "finite": finite,
        "families": families,
        "finite_area": ratio_string(&dec.finite_area()),
    });
    if let Some(k) = dec.cutoff {
        v["cutoff"] = json!(k);
    }
    v
}

pub fn symbolic_json(v: &SymbolicValue) -> Value {
    serde_json::to_value(v).expect("plain strings")
}

pub fn nu_json(res: &NuResult, digits: usize) -> Value {
    let route = serde_json::to_value(res.route).unwrap();
    match &res.value {
        NuValue::Exact(v) => json!({
            "r": res.r,
            "D": res.d,
            "c0": res.c0,
            "exact": symbolic_json(v),
            "decimal": numeric_eval(v, digits),
            "route": route,
        }),
        NuValue::Interval { lower, upper } => json!({
            "r": res.r,
            "D": res.d,
            "c0": res.c0,
            "lower": ratio_string(lower),
            "upper": ratio_string(upper),
            "decimal_lower": numeric_eval(&SymbolicValue::from_rational(lower.clone()), digits),
            "decimal_upper": numeric_eval(&SymbolicValue::from_rational(upper.clone()), digits),
            "route": route,
        }),
    }
}

fn marker(s: Status) -> &'static str {
    match s {
        Status::Degenerate => "\u{25cb}",
        Status::Live => "\u{2217}",
        Status::Rejected => "\u{00d7}",
    }
}

fn tuple_label(ks: &[u64]) -> String {
    TupleSpec::from_indices(ks).to_string()
}

pub fn tree_dot(tree: &TupleTree) -> String {
    let mut s = String::from("digraph tuples {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, n) in tree.nodes.iter().enumerate() {
        let style = if n.status == Status::Degenerate {
            ", style=rounded"
        } else {
            ""
        };
        let _ = writeln!(
            s,
            "  n{i} [label=\"{} ({})\\n{}\"{style}];",
            marker(n.status),
            tuple_label(&n.tuple),
            ratio_string(&n.area)
        );
    }
    for (i, n) in tree.nodes.iter().enumerate() {
        for c in &n.children {
            let _ = writeln!(s, "  n{i} -> n{c};");
        }
    }
    s.push_str("}\n");
    s
}

/// Layered drawing: depth downwards, leaves spread evenly, parents centred over children.
pub fn tree_svg(tree: &TupleTree) -> String {
    let n = tree.nodes.len();
    let mut x = vec![0.0f64; n];
    let mut next_leaf = 0.0;
    fn place(i: usize, tree: &TupleTree, x: &mut [f64], next: &mut f64) {
        let kids = &tree.nodes[i].children;
        if kids.is_empty() {
            x[i] = *next;
            *next += 1.0;
        } else {
            for &c in kids {
                place(c, tree, x, next);
            }
            x[i] = kids.iter().map(|&c| x[c]).sum::<f64>() / kids.len() as f64;
        }
    }
    place(0, tree, &mut x, &mut next_leaf);
    let base = tree.nodes[0].tuple.len();
    let depth = tree
        .nodes
        .iter()
        .map(|nd| nd.tuple.len() - base)
        .max()
        .unwrap_or(0);
    let (dx, dy) = (120.0, 70.0);
    let width = (next_leaf.max(1.0)) * dx + 40.0;
    let height = (depth as f64 + 1.0) * dy + 40.0;
    let pos = |i: usize| {
        (
            20.0 + dx * (x[i] + 0.5),
            30.0 + dy * (tree.nodes[i].tuple.len() - base) as f64,
        )
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" font-family="monospace" font-size="11">"#
    );
    for (i, nd) in tree.nodes.iter().enumerate() {
        let (x0, y0) = pos(i);
        for &c in &nd.children {
            let (x1, y1) = pos(c);
            let _ = writeln!(
                s,
                r##"  <line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="#777777"/>"##
            );
        }
    }
    for (i, nd) in tree.nodes.iter().enumerate() {
        let (x0, y0) = pos(i);
        let _ = writeln!(
            s,
            r##"  <text x="{x0:.1}" y="{y0:.1}" text-anchor="middle" fill="#000000">{} ({})</text>"##,
            marker(nd.status),
            tuple_label(&nd.tuple)
        );
        let _ = writeln!(
            s,
            r##"  <text x="{x0:.1}" y="{:.1}" text-anchor="middle" fill="#555555">{}</text>"##,
            y0 + 13.0,
            ratio_string(&nd.area)
        );
    }
    s.push_str("</svg>\n");
    s
}

/// `r,count,ratio_decimal` rows; the overflow bucket is written as `>r_max`.
pub fn scan_csv(h: &GapHistogram, digits: usize) -> String {
    let mut s = String::from("r,count,ratio_decimal\n");
    let total = h.coloured_total.max(1);
    let ratio = |c: u64| {
        let q = BigRational::new(c.into(), total.into());
        numeric_eval(&SymbolicValue::from_rational(q), digits)
    };
    for (r, &c) in h.counts.iter().enumerate() {
        if r == 0 && c == 0 {
            continue;
        }
        let _ = writeln!(s, "{r},{c},{}", ratio(c));
    }
    let _ = writeln!(
        s,
        ">{},{},{}",
        h.config.r_max,
        h.overflow,
        ratio(h.overflow)
    );
    s
}

pub fn scan_json(h: &GapHistogram, digits: usize) -> Value {
    let total = h.coloured_total.max(1);
    let rows: Vec<Value> = h
        .counts
        .iter()
        .enumerate()
        .filter(|(r, &c)| *r > 0 || c > 0)
        .map(|(r, &c)| {
            let q = BigRational::new(c.into(), total.into());
            json!({
                "r": r,
                "count": c,
                "ratio": ratio_string(&q),
                "ratio_decimal": numeric_eval(&SymbolicValue::from_rational(q), digits),
            })
        })
        .collect();
    json!({
        "Q": h.config.q,
        "D": h.config.d,
        "c0": h.config.c0,
        "coloured_total": h.coloured_total,
        "fraction_total": h.fraction_total,
        "overflow": h.overflow,
        "counts": rows,
    })
}
