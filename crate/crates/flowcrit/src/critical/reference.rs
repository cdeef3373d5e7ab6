//! Definitional checks over every non-trivial partition. Exponential; used
//! to validate the pairwise tests on small inputs.

use crate::enumerate::{part_count, set_partitions};
use crate::error::Result;
use crate::flow::{enumerate_tip_preflows, extend_preflow, has_flow};
use crate::graph::{BorderedMultigraph, Canvas, Contraction, TipPreflow, Vertex};

/// Non-trivial partitions with `{z}` as a part, as vertex labellings.
fn tip_partitions(c: &Canvas) -> Vec<(Vec<usize>, usize)> {
    let rest = c.non_tip_vertices();
    set_partitions(rest.len())
        .into_iter()
        .filter(|rgs| part_count(rgs) < rgs.len())
        .map(|rgs| {
            let parts = part_count(&rgs);
            let mut labels = vec![parts; c.vertex_count()];
            for (i, &v) in rest.iter().enumerate() {
                labels[v] = rgs[i];
            }
            (labels, parts + 1)
        })
        .collect()
}

fn contracted_canvas(c: &Canvas, labels: &[usize], parts: usize) -> (Canvas, Contraction) {
    let k = c.graph().contract_by_labels(labels, parts);
    let tip = labels[c.tip()];
    (Canvas::new(k.graph.clone(), tip).expect("tip part"), k)
}

fn mapped_preflow(k: &Contraction, target: &Canvas, psi: &TipPreflow) -> TipPreflow {
    let dirs = psi.dirs().iter().map(|&(e, d)| (k.edge_map[e].expect("tip edges survive"), d)).collect();
    TipPreflow::new(target, dirs).expect("net value is preserved")
}

pub fn is_flow_critical_canvas_by_partitions(c: &Canvas) -> bool {
    if c.is_trivial() {
        return true;
    }
    let stuck: Vec<TipPreflow> = enumerate_tip_preflows(c)
        .map(|nv| nv.to_preflow(c))
        .filter(|psi| extend_preflow(c, psi).expect("valid").is_none())
        .collect();
    tip_partitions(c).iter().all(|(labels, parts)| {
        let (cc, k) = contracted_canvas(c, labels, *parts);
        stuck.iter().any(|psi| extend_preflow(&cc, &mapped_preflow(&k, &cc, psi)).expect("valid").is_some())
    })
}

pub fn is_psi_critical_by_partitions(c: &Canvas, psi: &TipPreflow) -> Result<bool> {
    if extend_preflow(c, psi)?.is_some() {
        return Ok(false);
    }
    Ok(tip_partitions(c).iter().all(|(labels, parts)| {
        let (cc, k) = contracted_canvas(c, labels, *parts);
        extend_preflow(&cc, &mapped_preflow(&k, &cc, psi)).expect("valid").is_some()
    }))
}

fn parts_connected(g: &BorderedMultigraph, labels: &[usize], parts: usize) -> bool {
    (0..parts).all(|p| {
        let members: Vec<Vertex> = (0..labels.len()).filter(|&v| labels[v] == p).collect();
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        while let Some(u) = stack.pop() {
            for &[a, b] in g.edges() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if labels[w] == p && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.iter().all(|&v| seen[v])
    })
}

fn graph_by_partitions(g: &BorderedMultigraph, connected_parts: bool) -> bool {
    if has_flow(g) {
        return false;
    }
    set_partitions(g.vertex_count())
        .into_iter()
        .filter(|rgs| part_count(rgs) < rgs.len())
        .filter(|rgs| !connected_parts || parts_connected(g, rgs, part_count(rgs)))
        .all(|rgs| has_flow(&g.contract_by_labels(&rgs, part_count(&rgs)).graph))
}

pub fn is_flow_critical_graph_by_partitions(g: &BorderedMultigraph) -> bool {
    graph_by_partitions(g, false)
}

pub fn is_connected_flow_critical_by_partitions(g: &BorderedMultigraph) -> bool {
    graph_by_partitions(g, true)
}
