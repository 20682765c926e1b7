//! Hasse diagrams in DOT, drawn bottom to top.

use std::fmt::Write;

use toposcope::{FiniteTopology, PointSet};

fn covers(len: usize, below: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if i != j && below(i, j) && !(0..len).any(|k| k != i && k != j && below(i, k) && below(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn render(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {name} {{").unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(s, "  v{i} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
    }
    for (i, j) in edges {
        writeln!(s, "  v{i} -> v{j};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Inclusion order on a family of topologies on the same ground set.
pub fn lattice(family: &[FiniteTopology]) -> String {
    let labels: Vec<String> = family.iter().map(|t| t.to_string()).collect();
    let edges = covers(family.len(), |i, j| family[i].is_strictly_coarser_than(&family[j]));
    render("topologies", &labels, &edges)
}

/// Specialization order of one topology, with equivalent points merged:
/// `x` is drawn below `y` when `x ∈ cl{y}`.
pub fn specialization(t: &FiniteTopology) -> String {
    let order = t.specialization();
    let classes: Vec<PointSet> = order.classes();
    let rep = |c: PointSet| c.first().expect("classes are nonempty");
    let labels: Vec<String> =
        classes.iter().map(|c| if c.len() == 1 { rep(*c).to_string() } else { c.to_string() }).collect();
    let edges = covers(classes.len(), |i, j| {
        let (x, y) = (rep(classes[i]), rep(classes[j]));
        order.leq(x, y) && !order.leq(y, x)
    });
    render("specialization", &labels, &edges)
}
