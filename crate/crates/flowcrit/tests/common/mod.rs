#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use flowcrit::generate::{generate_gk, generate_gkr, CorpusEntry};
use flowcrit::graph::{BorderedMultigraph, Canvas, Multigraph, TipDir, TipPreflow, Vertex};
use flowcrit::Z3;

fn with_double_tip(mut edges: Vec<(Vertex, Vertex)>) -> Vec<(Vertex, Vertex)> {
    for v in 0..4 {
        edges.push((v, 4));
        edges.push((v, 4));
    }
    edges
}

/// K4 with a tip joined to every vertex by a double edge.
pub fn k4_canvas() -> Canvas {
    let edges = with_double_tip(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    Canvas::new(BorderedMultigraph::from_edges(5, &edges, &[1, 1, 2, 2, 0]).unwrap(), 4).unwrap()
}

/// Away from the tip at the boundary-1 vertices, toward it at the others.
pub fn k4_canvas_psi(c: &Canvas) -> TipPreflow {
    TipPreflow::from_signs(c, "+,+,+,+,-,-,-,-").unwrap()
}

/// A perfect matching on four vertices plus a double-joined tip.
pub fn matching_canvas() -> Canvas {
    let edges = with_double_tip(vec![(0, 1), (2, 3)]);
    Canvas::new(BorderedMultigraph::from_edges(5, &edges, &[0; 5]).unwrap(), 4).unwrap()
}

pub fn k4(boundary: &[u8]) -> BorderedMultigraph {
    BorderedMultigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], boundary).unwrap()
}

pub fn residues(b: &[Z3]) -> Vec<u8> {
    b.iter().map(|z| z.value()).collect()
}

/// `out − in` mod 3 at every vertex when edge `e` points from its first
/// endpoint exactly if bit `e` of `mask` is set.
pub fn net_of_mask(g: &Multigraph, mask: u64) -> Vec<u8> {
    let mut net = vec![0i64; g.vertex_count()];
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        let (a, b) = if mask >> e & 1 == 1 { (u, v) } else { (v, u) };
        net[a] += 1;
        net[b] -= 1;
    }
    net.iter().map(|&x| x.rem_euclid(3) as u8).collect()
}

/// Every boundary some orientation realises, by trying all `2^m`.
pub fn reachable_boundaries(g: &Multigraph) -> HashSet<Vec<u8>> {
    let m = g.edge_count();
    assert!(m <= 24, "exhaustive oracle limited to 24 edges");
    (0u64..1 << m).map(|mask| net_of_mask(g, mask)).collect()
}

/// Orientations agreeing with `psi` on the tip edges that realise the boundary.
pub fn brute_extends(c: &Canvas, psi: &TipPreflow) -> bool {
    let g = c.multigraph();
    let want = residues(c.boundary());
    let free: Vec<usize> = (0..g.edge_count()).filter(|&e| psi.direction(e).is_none()).collect();
    let mut fixed = 0u64;
    for e in 0..g.edge_count() {
        if let Some(d) = psi.direction(e) {
            let [u, _] = g.edges()[e];
            let from_tip = d == TipDir::Away;
            if (u == c.tip()) == from_tip {
                fixed |= 1 << e;
            }
        }
    }
    (0u64..1 << free.len()).any(|m| {
        let mut mask = fixed;
        for (i, &e) in free.iter().enumerate() {
            if m >> i & 1 == 1 {
                mask |= 1 << e;
            }
        }
        net_of_mask(g, mask) == want
    })
}

/// Non-tip degrees other than 4, sorted.
pub fn census_of(c: &Canvas) -> Vec<usize> {
    let mut v: Vec<usize> =
        (0..c.vertex_count()).filter(|&v| v != c.tip()).map(|v| c.degree(v)).filter(|&d| d != 4).collect();
    v.sort_unstable();
    v
}

pub fn g6() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| generate_gk(6, 6).unwrap())
}

pub fn g7() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| generate_gk(7, 6).unwrap())
}

pub fn g70() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| generate_gkr(7, 0, 5).unwrap().entries)
}

pub fn g71() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| generate_gkr(7, 1, 5).unwrap().entries)
}

/// Every generated corpus used by the sweeps, with a label.
pub fn all_corpora() -> Vec<(&'static str, &'static [CorpusEntry])> {
    vec![("G6 n<=6", g6()), ("G7 n<=6", g7()), ("G7,0 n<=5", g70()), ("G7,1 n<=5", g71())]
}
