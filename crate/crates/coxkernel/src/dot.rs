//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use coxkernel_core::Poset;

/// DOT text for a poset: one node per element, one edge `a -> b` per cover
/// `a < b`. Nodes are numbered in lexicographic order of their labels.
pub fn emit_dot<T>(poset: &Poset<T>, label: impl Fn(&T) -> String) -> String {
    let labels: Vec<String> = poset.elements().iter().map(label).collect();
    let covers = poset.covers();
    emit_dot_raw(&labels, &covers)
}

pub fn emit_dot_raw(labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]).then(a.cmp(&b)));
    let mut rank = vec![0; labels.len()];
    for (k, &i) in order.iter().enumerate() {
        rank[i] = k;
    }
    let mut edges: Vec<(usize, usize)> = covers.iter().map(|&(a, b)| (rank[a], rank[b])).collect();
    edges.sort_unstable();
    let mut out = String::from("digraph poset {\n");
    for (k, &i) in order.iter().enumerate() {
        writeln!(out, "  n{k} [label=\"{}\"];", escape(&labels[i])).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_chain() {
        let empty: Poset<u8> = Poset::new(vec![], |a, b| a <= b);
        assert_eq!(emit_dot(&empty, |x| x.to_string()), "digraph poset {\n}\n");
        let chain = Poset::new(vec![2u8, 0, 1], |a, b| a <= b);
        let dot = emit_dot(&chain, |x| x.to_string());
        assert_eq!(
            dot,
            "digraph poset {\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n"
        );
    }

    #[test]
    fn labels_are_escaped() {
        let p = Poset::new(vec!["a\"b".to_string()], |a, b| a == b);
        assert!(emit_dot(&p, |s| s.clone()).contains("label=\"a\\\"b\""));
    }
}
