//! From a flow-critical bordered graph to a tame canvas with a critical preflow.

use serde::Serialize;

use crate::critical::{is_flow_critical_graph, is_psi_critical};
use crate::error::{Error, Result};
use crate::graph::{BorderedMultigraph, CanonCode, Canvas, Multigraph, TipDir, TipPreflow, Vertex};
use crate::z3::Z3;

/// What to do when the input is not flow-critical.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    #[default]
    Strict,
    Warn,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub input: CanonCode,
    pub input_flow_critical: bool,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
    pub n5: usize,
    pub deg_z: usize,
    /// New boundary of each input vertex.
    pub boundary: Vec<Z3>,
    pub tip_boundary: Z3,
    pub psi: String,
    pub canvas: CanonCode,
    pub tame: bool,
    pub psi_critical: bool,
    pub deg_z_formula: bool,
    pub edge_formula: bool,
    #[serde(skip)]
    pub canvas_graph: Canvas,
    #[serde(skip)]
    pub preflow: TipPreflow,
}

impl ReductionReport {
    /// Every asserted property held.
    pub fn holds(&self) -> bool {
        self.tame && self.deg_z_formula && self.edge_formula && (self.psi_critical || !self.input_flow_critical)
    }
}

/// Smallest residue satisfying `ok`.
fn smallest(ok: impl Fn(Z3) -> bool) -> Z3 {
    Z3::ALL.into_iter().find(|&b| ok(b)).expect("some residue qualifies")
}

/// Joins a new tip to the low-degree vertices so that the result is tame,
/// and builds the preflow that the input's flow-criticality makes critical.
pub fn to_tame(g: &BorderedMultigraph, mode: Strictness) -> Result<ReductionReport> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Precondition("the reduction needs at least three vertices".into()));
    }
    let deg = g.degrees();
    if let Some(v) = (0..n).find(|&v| deg[v] < 2) {
        return Err(Error::Precondition(format!("vertex {v} has degree {} < 2", deg[v])));
    }
    let critical = is_flow_critical_graph(g).verdict;
    if !critical && mode == Strictness::Strict {
        return Err(Error::Precondition("input graph is not flow-critical".into()));
    }
    let z = n;
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().iter().map(|&[a, b]| (a, b)).collect();
    let mut boundary = Vec::with_capacity(n + 1);
    // per vertex: tip multiplicity and the required toward − away count
    let mut wanted: Vec<(Vertex, usize, Z3)> = Vec::new();
    for v in 0..n {
        let b = g.boundary()[v];
        let (mult, nb) = match deg[v] {
            2 => (2, Z3::ZERO),
            3 => (2, Z3::ONE),
            4 => (1, smallest(|x| !x.is_zero() && x != b)),
            5 => (1, smallest(|x| x != b)),
            _ => (0, b),
        };
        boundary.push(nb);
        edges.extend(std::iter::repeat_n((v, z), mult));
        if mult > 0 {
            wanted.push((v, mult, nb - b));
        }
    }
    let base = g.edge_count();
    let mut dirs = Vec::new();
    let mut next = base;
    let mut tip_net = Z3::ZERO;
    for &(_, mult, need) in &wanted {
        // v sees toward − away from the tip edges and β(v) from the rest
        let away = (0..=mult)
            .rev()
            .find(|&a| Z3::new((mult - a) as i64 - a as i64) == need)
            .ok_or_else(|| Error::Precondition("no preflow meets the vertex congruence".into()))?;
        for i in 0..mult {
            dirs.push((next + i, if i < away { TipDir::Away } else { TipDir::Toward }));
        }
        tip_net += Z3::new(away as i64 - (mult - away) as i64);
        next += mult;
    }
    boundary.push(tip_net);
    let g2 = Multigraph::new(n + 1, edges)?;
    let canvas = Canvas::new(BorderedMultigraph::new(g2, boundary.clone())?, z)?;
    let psi = TipPreflow::new(&canvas, dirs)?;
    let psi_critical = is_psi_critical(&canvas, &psi)?.verdict;
    let count = |d: usize| deg.iter().filter(|&&x| x == d).count();
    let (n2, n3, n4, n5) = (count(2), count(3), count(4), count(5));
    let deg_z = canvas.tip_degree();
    let slack: i64 = (0..n).map(|v| canvas.degree(v) as i64 - 6).sum();
    let edge_formula = 2 * g.edge_count() as i64 == 6 * n as i64 - (deg_z as i64 - slack);
    Ok(ReductionReport {
        input: g.canonical_code()?,
        input_flow_critical: critical,
        n2,
        n3,
        n4,
        n5,
        deg_z,
        boundary: boundary[..n].to_vec(),
        tip_boundary: tip_net,
        psi: psi.to_signs(),
        canvas: canvas.canonical_code()?,
        tame: canvas.is_tame(),
        psi_critical,
        deg_z_formula: deg_z == 2 * n2 + 2 * n3 + n4 + n5,
        edge_formula,
        canvas_graph: canvas,
        preflow: psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4;

    #[test]
    fn k4_zero_boundary() {
        let r = to_tame(&k4(), Strictness::Strict).unwrap();
        assert_eq!((r.n3, r.deg_z), (4, 8));
        assert!(r.holds() && r.psi_critical && r.tame);
        assert_eq!(r.boundary, vec![Z3::ONE; 4]);
    }

    #[test]
    fn strict_mode_rejects_graphs_with_flows() {
        let g = BorderedMultigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], &[0, 0, 0]).unwrap();
        assert!(to_tame(&g, Strictness::Strict).is_err());
        let r = to_tame(&g, Strictness::Warn).unwrap();
        assert!(!r.input_flow_critical);
        assert!(r.edge_formula && r.deg_z_formula);
    }

    #[test]
    fn high_degree_vertices_stay_off_the_tip() {
        // K7 has every degree 6
        let mut e = Vec::new();
        for i in 0..7 {
            for j in i + 1..7 {
                e.push((i, j));
            }
        }
        let g = BorderedMultigraph::from_edges(7, &e, &[0; 7]).unwrap();
        let r = to_tame(&g, Strictness::Warn).unwrap();
        assert_eq!(r.deg_z, 0);
        assert!(r.edge_formula);
    }
}
