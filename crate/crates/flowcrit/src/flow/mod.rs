//! Nowhere-zero Z3 flows.
//!
//! The search runs over parallel classes ("bundles") rather than instances:
//! a bundle of multiplicity `m` only contributes its net value `#u→v − #v→u`,
//! and for `m ≥ 2` every residue is available.

mod connectivity;
mod preflow;

use serde::Serialize;

use crate::graph::{BorderedMultigraph, Multigraph, Vertex};
use crate::z3::Z3;

pub use connectivity::{is_collapsible, is_z3_connected, suppress};
pub(crate) use preflow::preflow_targets;
pub use preflow::{
    enumerate_tip_preflows, extend_preflow, is_k_tallness_witnessing, is_kr_tallness_witness, NetEntry, NetVector,
    TipPreflows,
};

/// A full orientation; `arcs[e] = (tail, head)` for edge id `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Orientation {
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    pub fn new(arcs: Vec<(Vertex, Vertex)>) -> Self {
        Orientation { arcs }
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// `deg⁺(v) − deg⁻(v)` for every vertex of an `n`-vertex graph.
    pub fn net_out(&self, n: usize) -> Vec<i64> {
        let mut net = vec![0; n];
        for &(t, h) in &self.arcs {
            net[t] += 1;
            net[h] -= 1;
        }
        net
    }

    /// Orients exactly the edges of `g` and meets every congruence.
    pub fn is_flow_for(&self, g: &BorderedMultigraph) -> bool {
        if self.arcs.len() != g.edge_count() {
            return false;
        }
        let same_edges = self.arcs.iter().zip(g.edges()).all(|(&(t, h), e)| [t.min(h), t.max(h)] == *e && t != h);
        same_edges && self.net_out(g.vertex_count()).iter().zip(g.boundary()).all(|(&d, &b)| Z3::new(d) == b)
    }
}

/// Backtracking solver for a fixed bundle structure and varying targets.
#[derive(Clone, Debug)]
pub(crate) struct Solver {
    n: usize,
    bundles: Vec<(Vertex, Vertex, usize)>,
    component: Vec<usize>,
    components: usize,
    /// Per-bundle candidate nets, one per reachable residue.
    choices: Vec<Vec<i32>>,
    simple_deg: Vec<u32>,
    multi_deg: Vec<u32>,
}

fn choices_for(m: usize) -> Vec<i32> {
    let m = m as i32;
    let mut best: [Option<i32>; 3] = [None; 3];
    let mut t = -m;
    while t <= m {
        let r = t.rem_euclid(3) as usize;
        let better = match best[r] {
            None => true,
            Some(b) => t.abs() < b.abs() || (t.abs() == b.abs() && t > b),
        };
        if better {
            best[r] = Some(t);
        }
        t += 2;
    }
    let mut out: Vec<i32> = best.into_iter().flatten().collect();
    out.sort_by_key(|&t| (t.abs(), -t));
    out
}

impl Solver {
    pub fn new(n: usize, bundles: Vec<(Vertex, Vertex, usize)>) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut simple_deg = vec![0; n];
        let mut multi_deg = vec![0; n];
        for &(u, v, m) in &bundles {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
            let deg = if m == 1 { &mut simple_deg } else { &mut multi_deg };
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut label = vec![usize::MAX; n];
        let mut component = vec![0; n];
        let mut components = 0;
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = components;
                components += 1;
            }
            component[v] = label[r];
        }
        let choices = bundles.iter().map(|b| choices_for(b.2)).collect();
        Solver { n, bundles, component, components, choices, simple_deg, multi_deg }
    }

    pub fn for_graph(g: &Multigraph) -> Self {
        Solver::new(g.vertex_count(), g.bundles())
    }

    pub fn bundles(&self) -> &[(Vertex, Vertex, usize)] {
        &self.bundles
    }

    /// Net value per bundle, or `None` if no orientation meets `target`.
    pub fn solve(&self, target: &[Z3]) -> Option<Vec<i32>> {
        debug_assert_eq!(target.len(), self.n);
        let mut sums = vec![Z3::ZERO; self.components];
        let mut skip = vec![false; self.n];
        let mut last = vec![usize::MAX; self.components];
        for v in 0..self.n {
            sums[self.component[v]] += target[v];
            last[self.component[v]] = v;
        }
        if sums.iter().any(|s| !s.is_zero()) {
            return None;
        }
        // the last vertex of each component is implied by the others
        for &v in &last {
            if v != usize::MAX {
                skip[v] = true;
            }
        }
        let mut st = State {
            cur: vec![Z3::ZERO; self.n],
            simple: self.simple_deg.clone(),
            multi: self.multi_deg.clone(),
            nets: Vec::with_capacity(self.bundles.len()),
        };
        // isolated vertices must already be satisfied
        for v in 0..self.n {
            if !skip[v] && self.simple_deg[v] + self.multi_deg[v] == 0 && !target[v].is_zero() {
                return None;
            }
        }
        if self.dfs(0, target, &skip, &mut st) {
            Some(st.nets)
        } else {
            None
        }
    }

    fn feasible(&self, w: Vertex, target: &[Z3], skip: &[bool], st: &State) -> bool {
        if skip[w] || st.multi[w] > 0 {
            return true;
        }
        let need = target[w] - st.cur[w];
        match st.simple[w] {
            0 => need.is_zero(),
            1 => !need.is_zero(),
            _ => true,
        }
    }

    fn dfs(&self, i: usize, target: &[Z3], skip: &[bool], st: &mut State) -> bool {
        if i == self.bundles.len() {
            return true;
        }
        let (u, v, m) = self.bundles[i];
        let deg = |st: &mut State, w: Vertex, delta: i32| {
            let d = if m == 1 { &mut st.simple[w] } else { &mut st.multi[w] };
            *d = (*d as i32 + delta) as u32;
        };
        deg(st, u, -1);
        deg(st, v, -1);
        for &t in &self.choices[i] {
            let tz = Z3::new(t as i64);
            st.cur[u] += tz;
            st.cur[v] -= tz;
            if self.feasible(u, target, skip, st) && self.feasible(v, target, skip, st) {
                st.nets.push(t);
                if self.dfs(i + 1, target, skip, st) {
                    return true;
                }
                st.nets.pop();
            }
            st.cur[u] -= tz;
            st.cur[v] += tz;
        }
        deg(st, u, 1);
        deg(st, v, 1);
        false
    }
}

struct State {
    cur: Vec<Z3>,
    simple: Vec<u32>,
    multi: Vec<u32>,
    nets: Vec<i32>,
}

/// Expands bundle nets into per-instance arcs of `g`; instances of a bundle
/// are taken in id order, the first `(m + t) / 2` oriented `u → v`.
pub(crate) fn orient(
    g: &Multigraph,
    bundles: &[(Vertex, Vertex, usize)],
    nets: &[i32],
    arcs: &mut [Option<(Vertex, Vertex)>],
) {
    let mut forward: std::collections::HashMap<(Vertex, Vertex), i32> = std::collections::HashMap::new();
    for (&(u, v, m), &t) in bundles.iter().zip(nets) {
        forward.insert((u, v), (m as i32 + t) / 2);
    }
    for (id, &[u, v]) in g.edges().iter().enumerate() {
        if let Some(left) = forward.get_mut(&(u, v)) {
            arcs[id] = Some(if *left > 0 {
                *left -= 1;
                (u, v)
            } else {
                (v, u)
            });
        }
    }
}

/// A nowhere-zero flow for the boundary of `g`, or `None`.
pub fn find_nowhere_zero_flow(g: &BorderedMultigraph) -> Option<Orientation> {
    let solver = Solver::for_graph(g);
    let nets = solver.solve(g.boundary())?;
    let mut arcs = vec![None; g.edge_count()];
    orient(g, solver.bundles(), &nets, &mut arcs);
    let o = Orientation::new(arcs.into_iter().map(|a| a.expect("every edge is in a bundle")).collect());
    assert!(o.is_flow_for(g), "solver returned an invalid witness");
    Some(o)
}

pub fn has_flow(g: &BorderedMultigraph) -> bool {
    Solver::for_graph(g).solve(g.boundary()).is_some()
}

/// Exhaustive reference: tries all `2^m` orientations.
pub fn brute_force_flow(g: &BorderedMultigraph) -> Option<Orientation> {
    let m = g.edge_count();
    assert!(m < 31, "too many edges for exhaustive search");
    let n = g.vertex_count();
    for mask in 0u32..(1 << m) {
        let mut net = vec![0i64; n];
        for (i, &[u, v]) in g.edges().iter().enumerate() {
            let (t, h) = if mask >> i & 1 == 1 { (v, u) } else { (u, v) };
            net[t] += 1;
            net[h] -= 1;
        }
        if net.iter().zip(g.boundary()).all(|(&d, &b)| Z3::new(d) == b) {
            let arcs = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &[u, v])| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            return Some(Orientation::new(arcs));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4;

    #[test]
    fn choice_lists() {
        assert_eq!(choices_for(1), vec![1, -1]);
        assert_eq!(choices_for(2), vec![0, 2, -2]);
        assert_eq!(choices_for(3), vec![1, -1, 3]);
        assert_eq!(choices_for(4), vec![0, 2, -2]);
    }

    #[test]
    fn single_edge() {
        let g = BorderedMultigraph::from_edges(2, &[(0, 1)], &[1, 2]).unwrap();
        let o = find_nowhere_zero_flow(&g).unwrap();
        assert_eq!(o.arcs(), &[(0, 1)]);
        let g = BorderedMultigraph::from_edges(2, &[(0, 1)], &[0, 0]).unwrap();
        assert!(find_nowhere_zero_flow(&g).is_none());
    }

    #[test]
    fn k4_zero_has_no_flow() {
        assert!(find_nowhere_zero_flow(&k4()).is_none());
        assert!(brute_force_flow(&k4()).is_none());
    }

    #[test]
    fn two_k4_sharing_an_edge() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)];
        let g = BorderedMultigraph::from_edges(6, &edges, &[0; 6]).unwrap();
        assert!(find_nowhere_zero_flow(&g).is_none());
        assert!(brute_force_flow(&g).is_none());
    }

    #[test]
    fn disconnected_and_isolated() {
        let g = BorderedMultigraph::from_edges(5, &[(0, 1), (0, 1), (0, 1), (2, 3), (2, 3)], &[0, 0, 1, 2, 0]).unwrap();
        let o = find_nowhere_zero_flow(&g).unwrap();
        assert!(o.is_flow_for(&g));
        let solver = Solver::new(3, vec![(0, 1, 1)]);
        assert!(solver.solve(&[Z3::ONE, Z3::TWO, Z3::ZERO]).is_some());
        assert!(solver.solve(&[Z3::ZERO, Z3::ONE, Z3::TWO]).is_none());
    }

    #[test]
    fn agrees_with_brute_force_on_k4_boundaries() {
        let g = k4();
        for code in 0..27 {
            let b: Vec<Z3> = (0..3).map(|i| Z3::from((code / 3u8.pow(i)) % 3)).collect();
            let last = -b.iter().sum::<Z3>();
            let mut full = b.clone();
            full.push(last);
            let h = g.with_boundary(full).unwrap();
            assert_eq!(find_nowhere_zero_flow(&h).is_some(), brute_force_flow(&h).is_some());
        }
    }
}
