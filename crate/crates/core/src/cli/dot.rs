use std::fmt::Write;

use crate::dfa::DfaSystem;
use crate::solvers::{build_product_graph, Polarity, ProductVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotMode {
    /// The control flow graph, one node per vertex labelled with its function.
    Cfg,
    /// The product graph over (polarity, vertex, element) triples.
    Product,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Node id of a product vertex: polarity, then 1-based vertex and element.
pub fn product_node_id(v: ProductVertex) -> String {
    format!("v{}_{}_{}", v.polarity as usize, v.vertex + 1, v.value + 1)
}

pub fn emit_dot(sys: &DfaSystem, mode: DotMode) -> String {
    match mode {
        DotMode::Cfg => cfg_dot(sys),
        DotMode::Product => product_dot(sys),
    }
}

fn cfg_dot(sys: &DfaSystem) -> String {
    let cfg = sys.cfg();
    let lattice = sys.lattice();
    let q = sys.query();
    let mut out = String::from("digraph cfg {\n  node [shape=box];\n");
    for v in 0..sys.vertex_count() {
        let table: Vec<String> = sys
            .function(v)
            .table()
            .iter()
            .map(|&e| lattice.name(e))
            .collect();
        let label = format!("{}\nf = [{}]", sys.vertex_name(v), table.join(", "));
        let mut attrs = format!("label={}", quote(&label));
        if v == cfg.entry() {
            attrs.push_str(", style=bold");
        }
        if v == cfg.exit() {
            attrs.push_str(", peripheries=2");
        }
        if v == q.vertex {
            let _ = write!(
                attrs,
                ", xlabel={}",
                quote(&format!("? {}", lattice.name(q.value)))
            );
        }
        let _ = writeln!(out, "  n{v} [{attrs}];");
    }
    for (u, v) in cfg.edges() {
        let _ = writeln!(out, "  n{u} -> n{v};");
    }
    out.push_str("}\n");
    out
}

fn product_dot(sys: &DfaSystem) -> String {
    let pg = build_product_graph(sys);
    let reach = pg.search();
    let lattice = sys.lattice();
    let mut out = String::from("digraph product {\n  rankdir=LR;\n  node [shape=circle];\n");
    for polarity in [Polarity::In, Polarity::Out] {
        out.push_str("  { rank=same;\n");
        for v in pg.vertices().filter(|v| v.polarity == polarity) {
            let label = format!("{}\n{}", sys.vertex_name(v.vertex), lattice.name(v.value));
            let mut attrs = format!("label={}", quote(&label));
            if v == pg.source() {
                attrs.push_str(", peripheries=2");
            }
            if reach.is_reachable(v) {
                attrs.push_str(", style=filled, fillcolor=lightgrey");
            }
            let _ = writeln!(out, "    {} [{attrs}];", product_node_id(v));
        }
        out.push_str("  }\n");
    }
    for (a, b) in pg.edges() {
        let _ = writeln!(out, "  {} -> {};", product_node_id(a), product_node_id(b));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::{ControlFlowGraph, Query, TransferFunction};
    use crate::lattice::Lattice;

    #[test]
    fn single_vertex_cfg() {
        let cfg = ControlFlowGraph::new(1, &[], 0, 0).unwrap();
        let sys = DfaSystem::new(
            cfg,
            Lattice::chain(2),
            vec![TransferFunction::identity(2)],
            Query {
                vertex: 0,
                value: 1,
            },
        )
        .unwrap();
        let dot = emit_dot(&sys, DotMode::Cfg);
        assert_eq!(dot.matches(" [label=").count(), 1);
        assert!(!dot.contains("->"));
        assert!(dot.starts_with("digraph cfg {"));
    }

    #[test]
    fn product_ids_and_escaping() {
        assert_eq!(
            product_node_id(ProductVertex::new(Polarity::In, 0, 1)),
            "v0_1_2"
        );
        assert_eq!(quote("a\"b\nc"), "\"a\\\"b\\nc\"");
    }
}
