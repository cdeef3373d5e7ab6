//! Criticality and class membership.
//!
//! All pairwise tests rest on one fact: a flow of `g/{u,v}` induces a flow
//! of every coarser contraction, and every non-trivial partition coarsens
//! some pair merge. So pair merges stand for all non-trivial partitions.

mod cache;
mod reference;

use serde::Serialize;

use crate::error::Result;
use crate::flow::{self, preflow_targets, NetVector, Orientation, Solver};
use crate::graph::{BorderedMultigraph, Canvas, Easel, EdgeId, Multigraph, TipPreflow, Vertex};
use crate::z3::Z3;

pub use cache::{FlowCache, DEFAULT_CACHE_CAP};
pub use reference::{
    is_connected_flow_critical_by_partitions, is_flow_critical_canvas_by_partitions,
    is_flow_critical_graph_by_partitions, is_psi_critical_by_partitions,
};

/// Concrete evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A flow (or an extension of the preflow) on the whole graph.
    Flow { arcs: Vec<(Vertex, Vertex)> },
    /// A pair whose merge fails; `psi` is the preflow involved, if any.
    Pair { pair: [Vertex; 2], psi: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub subject: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CriticalityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn subject_of(g: &BorderedMultigraph, tip: Option<Vertex>) -> String {
    let code = match tip {
        Some(t) => crate::graph::canonical_form(g, &[t], crate::graph::DEFAULT_CANON_CAP),
        None => crate::graph::canonical_form(g, &[], crate::graph::DEFAULT_CANON_CAP),
    };
    match code {
        Ok(f) => f.code.to_hex(),
        Err(_) => format!("n{}m{}", g.vertex_count(), g.edge_count()),
    }
}

/// Bundles of `g` after identifying `v` with `u`; `v` is left isolated.
fn merged_bundles(g: &Multigraph, u: Vertex, v: Vertex) -> Vec<(Vertex, Vertex, usize)> {
    let mut acc = std::collections::BTreeMap::new();
    for &[a, b] in g.edges() {
        let a = if a == v { u } else { a };
        let b = if b == v { u } else { b };
        if a != b {
            *acc.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }
    acc.into_iter().map(|((a, b), m)| (a, b, m)).collect()
}

fn merged_target(t: &[Z3], u: Vertex, v: Vertex) -> Vec<Z3> {
    let mut m = t.to_vec();
    m[u] = t[u] + t[v];
    m[v] = Z3::ZERO;
    m
}

/// Tip preflow classes of a canvas with their extension status, computed
/// once and reused by every criticality question about that canvas.
pub struct CanvasAnalysis<'a> {
    canvas: &'a Canvas,
    rest: Multigraph,
    preflows: Vec<NetVector>,
    targets: Vec<Vec<Z3>>,
    extends: Vec<bool>,
}

impl<'a> CanvasAnalysis<'a> {
    pub fn new(canvas: &'a Canvas) -> Self {
        let rest = canvas.delete_vertex_keep_index(canvas.tip());
        let solver = Solver::for_graph(&rest);
        let preflows: Vec<NetVector> = flow::enumerate_tip_preflows(canvas).collect();
        let targets: Vec<Vec<Z3>> = preflows.iter().map(|nv| preflow_targets(canvas, nv)).collect();
        let extends = targets.iter().map(|t| solver.solve(t).is_some()).collect();
        CanvasAnalysis { canvas, rest, preflows, targets, extends }
    }

    pub fn preflows(&self) -> &[NetVector] {
        &self.preflows
    }

    pub fn extends(&self, i: usize) -> bool {
        self.extends[i]
    }

    /// Indices of preflow classes that do not extend, in enumeration order.
    pub fn non_extending(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.preflows.len()).filter(|&i| !self.extends[i])
    }

    fn pair_solver(&self, u: Vertex, v: Vertex) -> Solver {
        Solver::new(self.rest.vertex_count(), merged_bundles(&self.rest, u, v))
    }

    /// First non-extending class that extends after merging `u` and `v`.
    pub fn distinguishing(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let solver = self.pair_solver(u, v);
        self.non_extending().find(|&i| solver.solve(&merged_target(&self.targets[i], u, v)).is_some())
    }

    fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        let vs = self.canvas.non_tip_vertices();
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                out.push((u, v));
            }
        }
        out
    }

    /// The first pair no preflow class distinguishes, if any.
    pub fn failing_pair(&self) -> Option<(Vertex, Vertex)> {
        if self.canvas.is_trivial() {
            return None;
        }
        self.pairs().into_iter().find(|&(u, v)| self.distinguishing(u, v).is_none())
    }

    pub fn is_flow_critical(&self) -> bool {
        self.failing_pair().is_none()
    }

    /// Whether class `i` extends in every pair merge; returns the first
    /// pair where it does not.
    pub fn psi_failing_pair(&self, i: usize) -> Option<(Vertex, Vertex)> {
        self.pairs()
            .into_iter()
            .find(|&(u, v)| self.pair_solver(u, v).solve(&merged_target(&self.targets[i], u, v)).is_none())
    }

    /// First non-extending class that witnesses `k`-tallness.
    pub fn k_tallness_witness(&self, k: usize) -> Option<&NetVector> {
        let d = self.canvas.tip_degree();
        if d > k + 1 {
            return None;
        }
        self.non_extending().map(|i| &self.preflows[i]).find(|nv| d < k + 1 || nv.is_mixed())
    }

    /// First non-extending class making `(x, ψ)` a `(k, r)`-tallness witness.
    pub fn kr_tallness_witness(&self, x: Vertex, k: usize, r: i64) -> Option<&NetVector> {
        let c = self.canvas;
        let d = c.tip_degree();
        let dx = c.degree(x) as i64;
        let floor = k as i64 - 2 - r;
        if d > k + 1 || x == c.tip() || dx < floor {
            return None;
        }
        let tight = dx == floor && d == k + 1;
        self.non_extending()
            .map(|i| &self.preflows[i])
            .find(|nv| (d < k + 1 || nv.is_mixed()) && (!tight || nv.is_mixed_off(x)))
    }
}

/// `ψ` does not extend in `c` but extends in `c/{u,v}` for every pair of
/// non-tip vertices.
pub fn is_psi_critical(c: &Canvas, psi: &TipPreflow) -> Result<CriticalityReport> {
    let subject = subject_of(c.graph(), Some(c.tip()));
    if let Some(o) = flow::extend_preflow(c, psi)? {
        return Ok(CriticalityReport {
            subject,
            verdict: false,
            witness: Some(Witness::Flow { arcs: o.arcs().to_vec() }),
        });
    }
    let rest = c.delete_vertex_keep_index(c.tip());
    let nv = NetVector::from_preflow(c, psi);
    let t = preflow_targets(c, &nv);
    let vs = c.non_tip_vertices();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let s = Solver::new(rest.vertex_count(), merged_bundles(&rest, u, v));
            if s.solve(&merged_target(&t, u, v)).is_none() {
                return Ok(CriticalityReport {
                    subject,
                    verdict: false,
                    witness: Some(Witness::Pair { pair: [u, v], psi: Some(psi.to_signs()) }),
                });
            }
        }
    }
    Ok(CriticalityReport { subject, verdict: true, witness: None })
}

pub fn is_flow_critical_canvas(c: &Canvas) -> CriticalityReport {
    let subject = subject_of(c.graph(), Some(c.tip()));
    let a = CanvasAnalysis::new(c);
    match a.failing_pair() {
        None => CriticalityReport { subject, verdict: true, witness: None },
        Some((u, v)) => {
            CriticalityReport { subject, verdict: false, witness: Some(Witness::Pair { pair: [u, v], psi: None }) }
        }
    }
}

fn graph_pairs(g: &BorderedMultigraph, adjacent_only: bool) -> CriticalityReport {
    let subject = subject_of(g, None);
    if let Some(o) = flow::find_nowhere_zero_flow(g) {
        return CriticalityReport { subject, verdict: false, witness: Some(Witness::Flow { arcs: o.arcs().to_vec() }) };
    }
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent_only && g.multiplicity(u, v) == 0 {
                continue;
            }
            let s = Solver::new(n, merged_bundles(g, u, v));
            if s.solve(&merged_target(g.boundary(), u, v)).is_none() {
                return CriticalityReport {
                    subject,
                    verdict: false,
                    witness: Some(Witness::Pair { pair: [u, v], psi: None }),
                };
            }
        }
    }
    CriticalityReport { subject, verdict: true, witness: None }
}

/// No flow in `g`, and a flow in `g/{u,v}` for every pair.
pub fn is_flow_critical_graph(g: &BorderedMultigraph) -> CriticalityReport {
    graph_pairs(g, false)
}

/// As [`is_flow_critical_graph`] but only adjacent pairs are merged.
pub fn is_connected_flow_critical(g: &BorderedMultigraph) -> CriticalityReport {
    graph_pairs(g, true)
}

pub fn is_in_friendly(c: &Canvas, v: Vertex) -> bool {
    c.is_in_friendly(v)
}

pub fn is_out_friendly(c: &Canvas, v: Vertex) -> bool {
    c.is_out_friendly(v)
}

pub fn is_mixed_edge(c: &Canvas, e: EdgeId) -> Result<bool> {
    c.is_mixed_edge(e)
}

pub fn is_x_homogeneous(c: &Canvas, x: Vertex) -> bool {
    c.is_x_homogeneous(x)
}

/// Membership in 𝒢ₖ (k-tall, flow-critical, tame); returns the
/// lexicographically first witnessing preflow class.
pub fn in_gk(c: &Canvas, k: usize) -> Option<NetVector> {
    if c.tip_degree() > k + 1 || !c.is_tame() {
        return None;
    }
    let a = CanvasAnalysis::new(c);
    let w = a.k_tallness_witness(k)?.clone();
    a.is_flow_critical().then_some(w)
}

/// Membership of an easel in 𝒢ₖ,ᵣ with its own preflow.
pub fn in_gkr(e: &Easel, k: usize, r: i64) -> bool {
    let c = e.canvas();
    if c.tip_degree() > k + 1 || !c.is_tame() {
        return false;
    }
    if !matches!(flow::is_kr_tallness_witness(e, k, r), Ok(true)) {
        return false;
    }
    CanvasAnalysis::new(c).is_flow_critical()
}

/// Some preflow class makes `(x, ψ)` witness `(k, r)`-tallness and the
/// canvas is tame and flow-critical.
pub fn gkr_witness(c: &Canvas, x: Vertex, k: usize, r: i64) -> Option<NetVector> {
    if c.tip_degree() > k + 1 || !c.is_tame() || x == c.tip() || x >= c.vertex_count() {
        return None;
    }
    let a = CanvasAnalysis::new(c);
    let w = a.kr_tallness_witness(x, k, r)?.clone();
    a.is_flow_critical().then_some(w)
}

/// Re-expands an orientation of a flow witness into report form.
pub fn flow_witness(o: &Orientation) -> Witness {
    Witness::Flow { arcs: o.arcs().to_vec() }
}
