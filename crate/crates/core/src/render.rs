//! Module diagrams as graphviz DOT.
//!
//! One node per basis path of the module, labelled by its target vertex. An
//! edge `p -> q` labelled `a` when `q` is `p` followed by `a`. Paths of equal
//! length share a rank, so the generator sits on top.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::module::ModuleSpec;
use crate::quiver::{Path, Vertex};

/// The diagram as plain data, nodes in canonical basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDiagram {
    pub nodes: Vec<(Path, Vertex)>,
    /// `(from, to, arrow name)` as node indices.
    pub edges: Vec<(usize, usize, String)>,
}

impl ModuleDiagram {
    pub fn build(alg: &Algebra, spec: &ModuleSpec) -> Result<Self> {
        let q = alg.quiver();
        let paths: Vec<Path> = alg.module_basis(spec)?.cloned().collect();
        let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut edges = Vec::new();
        for (k, p) in paths.iter().enumerate() {
            for &a in q.outgoing(p.target()) {
                let ext = p.extended(a, q.target(a));
                if let Some(&j) = index.get(&ext) {
                    edges.push((k, j, q.arrow(a).name.clone()));
                }
            }
        }
        let nodes = paths.into_iter().map(|p| {
            let t = p.target();
            (p, t)
        });
        Ok(ModuleDiagram {
            nodes: nodes.collect(),
            edges,
        })
    }

    /// How often each vertex labels a node.
    pub fn label_counts(&self) -> BTreeMap<Vertex, usize> {
        let mut counts = BTreeMap::new();
        for &(_, v) in &self.nodes {
            *counts.entry(v).or_insert(0) += 1;
        }
        counts
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
        out.push_str("  rankdir=TB;\n  node [shape=plaintext];\n");
        for (k, (_, v)) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{v}\"];");
        }
        let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, (p, _)) in self.nodes.iter().enumerate() {
            ranks.entry(p.len()).or_default().push(k);
        }
        for members in ranks.values() {
            out.push_str("  { rank=same;");
            for k in members {
                let _ = write!(out, " n{k};");
            }
            out.push_str(" }\n");
        }
        for (s, t, a) in &self.edges {
            let _ = writeln!(out, "  n{s} -> n{t} [label=\"{a}\"];");
        }
        out.push_str("}\n");
        out
    }
}

pub fn render_module_quiver(alg: &Algebra, spec: &ModuleSpec) -> Result<String> {
    let diagram = ModuleDiagram::build(alg, spec)?;
    let q = alg.quiver();
    let mut name = format!("M({}", spec.vertex());
    for &a in spec.killed() {
        let _ = write!(name, ",{}", q.arrow(a).name);
    }
    name.push(')');
    Ok(diagram.to_dot(&name))
}
