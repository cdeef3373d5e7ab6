//! Tip preflows, their net-vector quotient and extension.
//!
//! Whether `ψ` extends depends only on the net value `away − toward` at each
//! tip neighbour, so a [`NetVector`] stands for a class of tip preflows.

use serde::{Deserialize, Serialize};

use super::{orient, Orientation, Solver};
use crate::error::{Error, Result};
use crate::graph::{Canvas, Easel, TipDir, TipPreflow, Vertex};
use crate::z3::Z3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NetEntry {
    pub vertex: Vertex,
    pub away: usize,
    pub toward: usize,
}

/// Per tip-neighbour counts of tip edges pointing away from / toward the tip.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NetVector(Vec<NetEntry>);

impl NetVector {
    pub fn new(c: &Canvas, mut entries: Vec<NetEntry>) -> Result<Self> {
        entries.sort_unstable();
        let shape: Vec<(Vertex, usize)> = entries.iter().map(|e| (e.vertex, e.away + e.toward)).collect();
        if shape != c.tip_neighbors() {
            return Err(Error::InvalidPreflow("entries must match the tip multiplicities".into()));
        }
        let nv = NetVector(entries);
        if nv.net() != c.boundary()[c.tip()] {
            return Err(Error::InvalidPreflow("net value differs from the tip boundary".into()));
        }
        Ok(nv)
    }

    pub fn from_preflow(c: &Canvas, psi: &TipPreflow) -> Self {
        let z = c.tip();
        let mut entries: Vec<NetEntry> =
            c.tip_neighbors().into_iter().map(|(vertex, _)| NetEntry { vertex, away: 0, toward: 0 }).collect();
        for &(e, d) in psi.dirs() {
            let [a, b] = c.edges()[e];
            let u = if a == z { b } else { a };
            let entry = entries.iter_mut().find(|x| x.vertex == u).expect("tip neighbour");
            match d {
                TipDir::Away => entry.away += 1,
                TipDir::Toward => entry.toward += 1,
            }
        }
        NetVector(entries)
    }

    /// A representative preflow: at each neighbour the lowest edge ids point away.
    pub fn to_preflow(&self, c: &Canvas) -> TipPreflow {
        let z = c.tip();
        let mut left: Vec<(Vertex, usize)> = self.0.iter().map(|e| (e.vertex, e.away)).collect();
        let dirs = c
            .tip_edges()
            .into_iter()
            .map(|e| {
                let [a, b] = c.edges()[e];
                let u = if a == z { b } else { a };
                let slot = left.iter_mut().find(|s| s.0 == u).expect("tip neighbour");
                if slot.1 > 0 {
                    slot.1 -= 1;
                    (e, TipDir::Away)
                } else {
                    (e, TipDir::Toward)
                }
            })
            .collect();
        TipPreflow::from_sorted_unchecked(dirs)
    }

    pub fn entries(&self) -> &[NetEntry] {
        &self.0
    }

    pub fn net(&self) -> Z3 {
        self.0.iter().map(|e| Z3::new(e.away as i64 - e.toward as i64)).sum()
    }

    fn mixed_where(&self, keep: impl Fn(Vertex) -> bool) -> bool {
        let kept = || self.0.iter().filter(|e| keep(e.vertex));
        kept().any(|e| e.away > 0) && kept().any(|e| e.toward > 0)
    }

    /// Some tip edge points away and some points toward.
    pub fn is_mixed(&self) -> bool {
        self.mixed_where(|_| true)
    }

    /// Mixed on the tip edges whose other end is not `x`.
    pub fn is_mixed_off(&self, x: Vertex) -> bool {
        self.mixed_where(|v| v != x)
    }
}

/// Boundary that `g − z` must realise for the preflow to extend:
/// `β(v) + away(v) − toward(v)` off the tip, zero at the isolated tip.
pub(crate) fn preflow_targets(c: &Canvas, nv: &NetVector) -> Vec<Z3> {
    let mut t = c.boundary().to_vec();
    t[c.tip()] = Z3::ZERO;
    for e in nv.entries() {
        t[e.vertex] += Z3::new(e.away as i64 - e.toward as i64);
    }
    t
}

/// Net vectors in lexicographic order of away counts (neighbours by vertex).
pub struct TipPreflows {
    caps: Vec<(Vertex, usize)>,
    away: Vec<usize>,
    want: Z3,
    done: bool,
}

impl Iterator for TipPreflows {
    type Item = NetVector;

    fn next(&mut self) -> Option<NetVector> {
        while !self.done {
            let net: Z3 = self.caps.iter().zip(&self.away).map(|(&(_, m), &a)| Z3::new(2 * a as i64 - m as i64)).sum();
            let hit = (net == self.want).then(|| {
                NetVector(
                    self.caps
                        .iter()
                        .zip(&self.away)
                        .map(|(&(vertex, m), &away)| NetEntry { vertex, away, toward: m - away })
                        .collect(),
                )
            });
            // odometer step, last position fastest
            self.done = true;
            for i in (0..self.away.len()).rev() {
                if self.away[i] < self.caps[i].1 {
                    self.away[i] += 1;
                    for a in &mut self.away[i + 1..] {
                        *a = 0;
                    }
                    self.done = false;
                    break;
                }
            }
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

pub fn enumerate_tip_preflows(c: &Canvas) -> TipPreflows {
    let caps = c.tip_neighbors();
    TipPreflows { away: vec![0; caps.len()], caps, want: c.boundary()[c.tip()], done: false }
}

/// A flow of `c` agreeing with `psi` on the tip edges, or `None`.
pub fn extend_preflow(c: &Canvas, psi: &TipPreflow) -> Result<Option<Orientation>> {
    let psi = TipPreflow::new(c, psi.dirs().to_vec())?;
    let nv = NetVector::from_preflow(c, &psi);
    let rest = c.delete_vertex_keep_index(c.tip());
    let solver = Solver::for_graph(&rest);
    let Some(nets) = solver.solve(&preflow_targets(c, &nv)) else {
        return Ok(None);
    };
    let mut arcs = vec![None; c.edge_count()];
    let z = c.tip();
    for &(e, d) in psi.dirs() {
        let [a, b] = c.edges()[e];
        let u = if a == z { b } else { a };
        arcs[e] = Some(match d {
            TipDir::Away => (z, u),
            TipDir::Toward => (u, z),
        });
    }
    orient(c, solver.bundles(), &nets, &mut arcs);
    let o = Orientation::new(arcs.into_iter().map(|a| a.expect("all edges oriented")).collect());
    assert!(o.is_flow_for(c), "extension is not a flow");
    Ok(Some(o))
}

fn check_tip_degree(c: &Canvas, k: usize) -> Result<()> {
    if c.tip_degree() > k + 1 {
        return Err(Error::Precondition(format!("tip degree {} exceeds k+1 = {}", c.tip_degree(), k + 1)));
    }
    Ok(())
}

/// `psi` does not extend, and mixes directions when `deg(z) = k + 1`.
pub fn is_k_tallness_witnessing(c: &Canvas, psi: &TipPreflow, k: usize) -> Result<bool> {
    check_tip_degree(c, k)?;
    let nv = NetVector::from_preflow(c, &TipPreflow::new(c, psi.dirs().to_vec())?);
    if c.tip_degree() == k + 1 && !nv.is_mixed() {
        return Ok(false);
    }
    Ok(extend_preflow(c, psi)?.is_none())
}

/// The three clauses for `(x, ψ)` witnessing `(k, r)`-tallness.
pub fn is_kr_tallness_witness(e: &Easel, k: usize, r: i64) -> Result<bool> {
    let c = e.canvas();
    if !is_k_tallness_witnessing(c, e.psi(), k)? {
        return Ok(false);
    }
    let floor = k as i64 - 2 - r;
    let dx = c.degree(e.x()) as i64;
    if dx < floor {
        return Ok(false);
    }
    if dx == floor && c.tip_degree() == k + 1 {
        return Ok(NetVector::from_preflow(c, e.psi()).is_mixed_off(e.x()));
    }
    Ok(true)
}

impl Canvas {
    /// `g − z` on the same vertex indices, with the tip left isolated.
    pub(crate) fn delete_vertex_keep_index(&self, v: Vertex) -> crate::graph::Multigraph {
        let edges: Vec<(Vertex, Vertex)> =
            self.edges().iter().filter(|e| !e.contains(&v)).map(|&[a, b]| (a, b)).collect();
        crate::graph::Multigraph::new(self.vertex_count(), edges).expect("edges already valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4_canvas;
    use crate::graph::BorderedMultigraph;

    fn k4_canvas_psi(c: &Canvas) -> TipPreflow {
        // tip edges come in id order 6..14: two per clique vertex 0,1,2,3
        TipPreflow::from_signs(c, "+,+,+,+,-,-,-,-").unwrap()
    }

    #[test]
    fn k4_canvas_psi_does_not_extend() {
        let c = k4_canvas();
        let psi = k4_canvas_psi(&c);
        assert!(extend_preflow(&c, &psi).unwrap().is_none());
        let nv = NetVector::from_preflow(&c, &psi);
        assert_eq!(nv.to_preflow(&c), psi);
        assert!(is_k_tallness_witnessing(&c, &psi, 8).unwrap());
        assert!(is_k_tallness_witnessing(&c, &psi, 7).unwrap());
        assert!(is_k_tallness_witnessing(&c, &psi, 6).is_err());
    }

    #[test]
    fn k4_canvas_psi_extends_after_merging_the_clique() {
        let c = k4_canvas();
        let psi = k4_canvas_psi(&c);
        let merged = c.contract(&[vec![0, 1, 2, 3], vec![4]]).unwrap();
        let m = Canvas::new(merged.graph.clone(), 1).unwrap();
        let dirs = psi.dirs().iter().map(|&(e, d)| (merged.edge_map[e].unwrap(), d)).collect();
        let psi2 = TipPreflow::new(&m, dirs).unwrap();
        let o = extend_preflow(&m, &psi2).unwrap().unwrap();
        assert!(o.is_flow_for(m.graph()));
    }

    #[test]
    fn two_vertex_canvas_extension_is_psi() {
        let g = BorderedMultigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)], &[1, 2]).unwrap();
        let c = Canvas::new(g, 0).unwrap();
        for nv in enumerate_tip_preflows(&c) {
            let psi = nv.to_preflow(&c);
            let o = extend_preflow(&c, &psi).unwrap().unwrap();
            for &(e, d) in psi.dirs() {
                let want = if d == TipDir::Away { (0, 1) } else { (1, 0) };
                assert_eq!(o.arcs()[e], want);
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let g = BorderedMultigraph::from_edges(1, &[], &[0]).unwrap();
        let c = Canvas::new(g, 0).unwrap();
        let all: Vec<NetVector> = enumerate_tip_preflows(&c).collect();
        assert_eq!(all, vec![NetVector::default()]);

        let g = BorderedMultigraph::from_edges(2, &[(0, 1)], &[1, 2]).unwrap();
        let c = Canvas::new(g, 0).unwrap();
        let all: Vec<NetVector> = enumerate_tip_preflows(&c).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].entries()[0].away, 1);
    }

    #[test]
    fn enumeration_matches_instance_brute_force() {
        let c = k4_canvas();
        let tips = c.tip_edges();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << tips.len()) {
            let dirs: Vec<_> = tips
                .iter()
                .enumerate()
                .map(|(i, &e)| (e, if mask >> i & 1 == 1 { TipDir::Away } else { TipDir::Toward }))
                .collect();
            if let Ok(psi) = TipPreflow::new(&c, dirs) {
                seen.insert(NetVector::from_preflow(&c, &psi));
            }
        }
        let listed: Vec<NetVector> = enumerate_tip_preflows(&c).collect();
        assert_eq!(listed.len(), seen.len());
        assert_eq!(listed.into_iter().collect::<std::collections::BTreeSet<_>>(), seen);
    }

    #[test]
    fn tallness_clauses() {
        let c = k4_canvas();
        // all away: net 8 ≡ 2, not valid for β(z) = 0; use a uniform canvas instead
        let g =
            BorderedMultigraph::from_edges(3, &[(0, 1), (0, 2), (0, 2), (0, 2), (1, 2), (1, 2), (1, 2)], &[0, 0, 0])
                .unwrap();
        let t = Canvas::new(g, 2).unwrap();
        let all_away = TipPreflow::from_signs(&t, "+,+,+,+,+,+").unwrap();
        // deg(z) = 6 = k + 1 with k = 5: uniform fails the second clause
        assert!(!is_k_tallness_witnessing(&t, &all_away, 5).unwrap());
        assert!(extend_preflow(&t, &all_away).unwrap().is_none());
        assert!(is_k_tallness_witnessing(&t, &all_away, 6).unwrap());

        let psi = k4_canvas_psi(&c);
        let e = Easel::new(c.clone(), 0, psi.clone()).unwrap();
        // deg(x) = 5 = k − 2 − r with k = 7, r = 0 and deg(z) = 8 = k + 1;
        // off-x edges: vertex 1 away, vertices 2, 3 toward
        assert!(is_kr_tallness_witness(&e, 7, 0).unwrap());
        assert!(!is_kr_tallness_witness(&e, 7, -1).unwrap());
        assert!(is_kr_tallness_witness(&e, 8, 1).unwrap());
        // third clause: deg(x) = 4 = k − 2 − r for k = 5, r = −1, deg(z) = 6;
        // the only tip edges off x all point away
        let psi = TipPreflow::from_signs(&t, "-,-,-,+,+,+").unwrap();
        assert!(is_k_tallness_witnessing(&t, &psi, 5).unwrap());
        let e = Easel::new(t.clone(), 0, psi).unwrap();
        assert!(!is_kr_tallness_witness(&e, 5, -1).unwrap());
        assert!(is_kr_tallness_witness(&e, 5, 0).unwrap());
    }
}
