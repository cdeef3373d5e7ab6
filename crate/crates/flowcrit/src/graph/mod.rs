//! Z3-bordered multigraphs, canvases and easels.
//!
//! Edge instances carry dense integer ids; multiplicities are derived.
//! Every value is immutable once built.

mod canon;
mod tau;
mod text;

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::z3::Z3;

pub use canon::{canonical_form, CanonCode, CanonForm, DEFAULT_CANON_CAP};
pub use tau::Tau;
pub use text::{parse_graph_file, write_graph_file, GraphFile};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Loopless multigraph; each edge instance is stored with sorted endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl Multigraph {
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Multigraph::empty(n);
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    /// Builds from `(u, v, multiplicity)` triples, ids assigned in order.
    pub fn from_bundles(n: usize, bundles: &[(Vertex, Vertex, usize)]) -> Result<Self> {
        let mut g = Multigraph::empty(n);
        for &(u, v, m) in bundles {
            for _ in 0..m {
                g.push_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub(crate) fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.edges.push([u.min(v), u.max(v)]);
        Ok(self.edges.len() - 1)
    }

    pub(crate) fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub(crate) fn remove_edges(&mut self, ids: &[EdgeId]) {
        let mut drop = vec![false; self.edges.len()];
        for &e in ids {
            drop[e] = true;
        }
        let mut i = 0;
        self.edges.retain(|_| {
            i += 1;
            !drop[i - 1]
        });
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[Vertex; 2]] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<[Vertex; 2]> {
        self.edges.get(e).copied().ok_or(Error::EdgeOutOfRange(e))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e[0] == v || e[1] == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &[u, v] in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let key = [u.min(v), u.max(v)];
        self.edges.iter().filter(|e| **e == key).count()
    }

    /// Symmetric multiplicity matrix.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &[u, v] in &self.edges {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    }

    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.edges[e][0] == v || self.edges[e][1] == v).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter_map(|&[a, b]| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Parallel classes as sorted `(u, v, multiplicity)` with `u < v`.
    pub fn bundles(&self) -> Vec<(Vertex, Vertex, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        let mut out: Vec<(Vertex, Vertex, usize)> = Vec::new();
        for [u, v] in e {
            match out.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += 1,
                _ => out.push((u, v, 1)),
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.bundles().iter().all(|b| b.2 == 1)
    }

    /// Number of edge instances with exactly one end in `a`.
    pub fn degree_of_set(&self, a: &[Vertex]) -> usize {
        let inside = self.membership(a);
        self.edges.iter().filter(|&&[u, v]| inside[u] != inside[v]).count()
    }

    pub(crate) fn membership(&self, a: &[Vertex]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        for &v in a {
            if v < self.n {
                inside[v] = true;
            }
        }
        inside
    }

    /// Component label per vertex; labels numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &[u, v] in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut out = vec![0; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Contracts by a vertex labelling into `parts` classes. Loops vanish;
    /// surviving instances get fresh ids in (sorted endpoints, old id) order.
    pub(crate) fn contract_labels(&self, labels: &[usize], parts: usize) -> (Multigraph, Vec<Option<EdgeId>>) {
        let mut kept: Vec<([Vertex; 2], EdgeId)> = self
            .edges
            .iter()
            .enumerate()
            .filter_map(|(id, &[u, v])| {
                let (a, b) = (labels[u], labels[v]);
                (a != b).then(|| ([a.min(b), a.max(b)], id))
            })
            .collect();
        kept.sort_unstable();
        let mut map = vec![None; self.edges.len()];
        let mut edges = Vec::with_capacity(kept.len());
        for (new_id, (e, old)) in kept.into_iter().enumerate() {
            map[old] = Some(new_id);
            edges.push(e);
        }
        (Multigraph { n: parts, edges }, map)
    }

    /// Relabels vertices by `perm[old] = new`; edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .map(|&[u, v]| {
                let (a, b) = (perm[u], perm[v]);
                [a.min(b), a.max(b)]
            })
            .collect();
        Multigraph { n: self.n, edges }
    }

    /// Removes one vertex and its edges; later vertices shift down by one.
    pub fn delete_vertex(&self, x: Vertex) -> Multigraph {
        let shift = |v: Vertex| if v > x { v - 1 } else { v };
        let edges = self.edges.iter().filter(|e| e[0] != x && e[1] != x).map(|&[u, v]| [shift(u), shift(v)]).collect();
        Multigraph { n: self.n - 1, edges }
    }
}

/// Checks that `parts` partitions `0..n` into nonempty classes and returns labels.
pub(crate) fn partition_labels(n: usize, parts: &[Vec<Vertex>]) -> Result<Vec<usize>> {
    let mut labels = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if labels[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            labels[v] = i;
        }
    }
    if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
    }
    Ok(labels)
}

/// A multigraph with a Z3-boundary: every component's boundary sums to 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderedMultigraph {
    graph: Multigraph,
    boundary: Vec<Z3>,
}

/// Result of contracting a bordered multigraph by a partition.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: BorderedMultigraph,
    /// Old vertex to part index.
    pub vertex_map: Vec<Vertex>,
    /// Old edge id to new id, `None` for edges inside a part.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl BorderedMultigraph {
    pub fn new(graph: Multigraph, boundary: Vec<Z3>) -> Result<Self> {
        if boundary.len() != graph.n {
            return Err(Error::BoundaryLength { expected: graph.n, got: boundary.len() });
        }
        let g = BorderedMultigraph { graph, boundary };
        g.check_boundary()?;
        Ok(g)
    }

    pub fn with_zero_boundary(graph: Multigraph) -> Self {
        let boundary = vec![Z3::ZERO; graph.n];
        BorderedMultigraph { graph, boundary }
    }

    /// Convenience constructor from edge pairs and boundary values in {0,1,2}.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)], boundary: &[u8]) -> Result<Self> {
        let graph = Multigraph::new(n, edges.iter().copied())?;
        BorderedMultigraph::new(graph, boundary.iter().map(|&b| Z3::from(b)).collect())
    }

    fn check_boundary(&self) -> Result<()> {
        let labels = self.graph.component_labels();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut sums = vec![Z3::ZERO; count];
        let mut rep = vec![usize::MAX; count];
        for v in 0..self.graph.n {
            sums[labels[v]] += self.boundary[v];
            rep[labels[v]] = rep[labels[v]].min(v);
        }
        match sums.iter().position(|s| !s.is_zero()) {
            Some(c) => Err(Error::NotZ3Boundary { vertex: rep[c], sum: sums[c].value() }),
            None => Ok(()),
        }
    }

    pub fn multigraph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn boundary(&self) -> &[Z3] {
        &self.boundary
    }

    pub fn boundary_of_set(&self, a: &[Vertex]) -> Z3 {
        a.iter().map(|&v| self.boundary[v]).sum()
    }

    pub fn with_boundary(&self, boundary: Vec<Z3>) -> Result<Self> {
        BorderedMultigraph::new(self.graph.clone(), boundary)
    }

    /// The τ class of a nonempty vertex set.
    pub fn tau(&self, a: &[Vertex]) -> Result<Tau> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = a.iter().find(|&&v| v >= self.graph.n) {
            return Err(Error::VertexOutOfRange(v));
        }
        Ok(Tau::from_degree_boundary(self.graph.degree_of_set(a), self.boundary_of_set(a)))
    }

    pub fn tau_abs(&self, a: &[Vertex]) -> Result<u32> {
        self.tau(a).map(Tau::abs)
    }

    pub fn contract(&self, parts: &[Vec<Vertex>]) -> Result<Contraction> {
        let labels = partition_labels(self.graph.n, parts)?;
        Ok(self.contract_by_labels(&labels, parts.len()))
    }

    pub(crate) fn contract_by_labels(&self, labels: &[usize], parts: usize) -> Contraction {
        let (graph, edge_map) = self.graph.contract_labels(labels, parts);
        let mut boundary = vec![Z3::ZERO; parts];
        for (v, &l) in labels.iter().enumerate() {
            boundary[l] += self.boundary[v];
        }
        Contraction { graph: BorderedMultigraph { graph, boundary }, vertex_map: labels.to_vec(), edge_map }
    }

    /// Identifies `u` and `v`; the merged vertex takes the smaller index and
    /// later vertices shift down.
    pub fn contract_pair(&self, u: Vertex, v: Vertex) -> Result<Contraction> {
        if u >= self.graph.n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= self.graph.n || u == v {
            return Err(Error::VertexOutOfRange(v));
        }
        let (a, b) = (u.min(v), u.max(v));
        let labels: Vec<usize> = (0..self.graph.n)
            .map(|w| match w.cmp(&b) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        Ok(self.contract_by_labels(&labels, self.graph.n - 1))
    }

    /// Splits off `e1 = uv` and `e2 = vw` at their common end `v`: both are
    /// removed and, if `u ≠ w`, an edge `uw` is appended. A parallel pair
    /// (`u = w`) is just deleted. Other ids shift down to stay dense.
    /// Fails if the result is no longer a Z3-boundary.
    pub fn split_off(&self, e1: EdgeId, e2: EdgeId) -> Result<Self> {
        let a = self.graph.endpoints(e1)?;
        let b = self.graph.endpoints(e2)?;
        if e1 == e2 {
            return Err(Error::NotSplittable(e1, e2));
        }
        let shared: Vec<Vertex> = a.iter().copied().filter(|x| b.contains(x)).collect();
        let mut graph = self.graph.clone();
        match shared.len() {
            0 => return Err(Error::NotSplittable(e1, e2)),
            // parallel pair: u = w, both instances simply go
            2 => graph.remove_edges(&[e1, e2]),
            _ => {
                let v = shared[0];
                let u = if a[0] == v { a[1] } else { a[0] };
                let w = if b[0] == v { b[1] } else { b[0] };
                graph.remove_edges(&[e1, e2]);
                graph.push_edge(u, w)?;
            }
        }
        BorderedMultigraph::new(graph, self.boundary.clone())
    }

    pub fn relabel(&self, perm: &[Vertex]) -> BorderedMultigraph {
        let mut boundary = vec![Z3::ZERO; self.boundary.len()];
        for (old, &new) in perm.iter().enumerate() {
            boundary[new] = self.boundary[old];
        }
        BorderedMultigraph { graph: self.graph.relabel(perm), boundary }
    }
}

impl Deref for BorderedMultigraph {
    type Target = Multigraph;
    fn deref(&self) -> &Multigraph {
        &self.graph
    }
}

/// A bordered multigraph with a distinguished tip vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Canvas {
    graph: BorderedMultigraph,
    tip: Vertex,
}

impl Canvas {
    pub fn new(graph: BorderedMultigraph, tip: Vertex) -> Result<Self> {
        if tip >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange(tip));
        }
        Ok(Canvas { graph, tip })
    }

    pub fn graph(&self) -> &BorderedMultigraph {
        &self.graph
    }

    pub fn into_graph(self) -> BorderedMultigraph {
        self.graph
    }

    pub fn tip(&self) -> Vertex {
        self.tip
    }

    pub fn tip_degree(&self) -> usize {
        self.graph.degree(self.tip)
    }

    /// Ids of the edge instances at the tip, increasing.
    pub fn tip_edges(&self) -> Vec<EdgeId> {
        self.graph.incident_edges(self.tip)
    }

    /// Tip neighbours with their multiplicities, by increasing vertex.
    pub fn tip_neighbors(&self) -> Vec<(Vertex, usize)> {
        let mut counts = vec![0; self.graph.vertex_count()];
        for &[u, v] in self.graph.edges() {
            if u == self.tip {
                counts[v] += 1;
            } else if v == self.tip {
                counts[u] += 1;
            }
        }
        counts.into_iter().enumerate().filter(|&(_, c)| c > 0).collect()
    }

    pub fn non_tip_vertices(&self) -> Vec<Vertex> {
        (0..self.graph.vertex_count()).filter(|&v| v != self.tip).collect()
    }

    /// Canvases on at most two vertices.
    pub fn is_trivial(&self) -> bool {
        self.graph.vertex_count() <= 2
    }

    /// Every parallel class not at the tip is a single edge.
    pub fn is_off_tip_simple(&self) -> bool {
        self.graph.bundles().iter().all(|&(u, v, m)| m == 1 || u == self.tip || v == self.tip)
    }

    /// Contracts `V ∖ a` into a new tip. The vertices of `a` keep their
    /// relative order as `0..|a|`; the new tip is vertex `|a|`.
    pub fn restriction(&self, a: &[Vertex]) -> Result<Canvas> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.graph.vertex_count();
        let mut inside = vec![false; n];
        for &v in a {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if v == self.tip {
                return Err(Error::ContainsTip);
            }
            inside[v] = true;
        }
        let k = inside.iter().filter(|&&b| b).count();
        let mut labels = vec![k; n];
        let mut next = 0;
        for v in 0..n {
            if inside[v] {
                labels[v] = next;
                next += 1;
            }
        }
        let c = self.graph.contract_by_labels(&labels, k + 1);
        Canvas::new(c.graph, k)
    }

    pub fn census(&self) -> Census {
        let d = self.graph.degrees();
        Census::new((0..d.len()).filter(|&v| v != self.tip && d[v] != 4).map(|v| d[v]).collect())
    }

    /// `deg(v) ≥ 4 + |τ(v)|` for every `v ≠ z`.
    pub fn is_tame(&self) -> bool {
        self.tame_except(None)
    }

    pub(crate) fn tame_except(&self, x: Option<Vertex>) -> bool {
        let d = self.graph.degrees();
        (0..d.len()).all(|v| {
            v == self.tip
                || Some(v) == x
                || d[v] >= 4 + Tau::from_degree_boundary(d[v], self.graph.boundary()[v]).abs() as usize
        })
    }

    pub fn order_key(&self, x: Vertex) -> OrderKey {
        let o = self.graph.vertex_count() + self.graph.edges().iter().filter(|e| !e.contains(&self.tip)).count();
        OrderKey { o, homogeneous: self.is_x_homogeneous(x), tip_degree: self.tip_degree() }
    }

    /// Relabels by `perm[old] = new`; edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> Canvas {
        Canvas { graph: self.graph.relabel(perm), tip: perm[self.tip] }
    }
}

impl Deref for Canvas {
    type Target = BorderedMultigraph;
    fn deref(&self) -> &BorderedMultigraph {
        &self.graph
    }
}

/// Orientation of a tip edge relative to the tip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TipDir {
    Away,
    Toward,
}

/// A total orientation of the tip edges obeying the congruence at the tip.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TipPreflow {
    dirs: Vec<(EdgeId, TipDir)>,
}

impl TipPreflow {
    pub fn new(c: &Canvas, mut dirs: Vec<(EdgeId, TipDir)>) -> Result<Self> {
        dirs.sort_unstable();
        let ids: Vec<EdgeId> = dirs.iter().map(|d| d.0).collect();
        if ids != c.tip_edges() {
            return Err(Error::InvalidPreflow("directions must cover exactly the tip edges".into()));
        }
        let psi = TipPreflow { dirs };
        if psi.net() != c.boundary()[c.tip()] {
            return Err(Error::InvalidPreflow(format!(
                "away minus toward is {} but the tip boundary is {}",
                psi.net(),
                c.boundary()[c.tip()]
            )));
        }
        Ok(psi)
    }

    /// Parses `+,-,…` aligned with increasing tip-edge ids; `+` is away.
    pub fn from_signs(c: &Canvas, signs: &str) -> Result<Self> {
        let tips = c.tip_edges();
        let tokens: Vec<&str> =
            if signs.trim().is_empty() { Vec::new() } else { signs.split(',').map(str::trim).collect() };
        if tokens.len() != tips.len() {
            return Err(Error::InvalidPreflow(format!("{} signs given for {} tip edges", tokens.len(), tips.len())));
        }
        let mut dirs = Vec::with_capacity(tips.len());
        for (e, t) in tips.into_iter().zip(tokens) {
            let d = match t {
                "+" => TipDir::Away,
                "-" => TipDir::Toward,
                other => return Err(Error::InvalidPreflow(format!("bad sign `{other}`"))),
            };
            dirs.push((e, d));
        }
        TipPreflow::new(c, dirs)
    }

    pub fn to_signs(&self) -> String {
        self.dirs.iter().map(|d| if d.1 == TipDir::Away { "+" } else { "-" }).collect::<Vec<_>>().join(",")
    }

    pub fn dirs(&self) -> &[(EdgeId, TipDir)] {
        &self.dirs
    }

    pub fn direction(&self, e: EdgeId) -> Option<TipDir> {
        self.dirs.binary_search_by_key(&e, |d| d.0).ok().map(|i| self.dirs[i].1)
    }

    pub fn away_count(&self) -> usize {
        self.dirs.iter().filter(|d| d.1 == TipDir::Away).count()
    }

    pub fn toward_count(&self) -> usize {
        self.dirs.len() - self.away_count()
    }

    /// `#away − #toward` mod 3.
    pub fn net(&self) -> Z3 {
        Z3::new(self.away_count() as i64 - self.toward_count() as i64)
    }

    pub(crate) fn from_sorted_unchecked(dirs: Vec<(EdgeId, TipDir)>) -> Self {
        TipPreflow { dirs }
    }
}

/// Canvas plus a marked vertex `x ≠ z` and a tip preflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Easel {
    canvas: Canvas,
    x: Vertex,
    psi: TipPreflow,
}

impl Easel {
    pub fn new(canvas: Canvas, x: Vertex, psi: TipPreflow) -> Result<Self> {
        if x >= canvas.vertex_count() {
            return Err(Error::VertexOutOfRange(x));
        }
        if x == canvas.tip() {
            return Err(Error::Precondition("the marked vertex must differ from the tip".into()));
        }
        TipPreflow::new(&canvas, psi.dirs.clone())?;
        Ok(Easel { canvas, x, psi })
    }

    pub fn canvas(&self) -> &Canvas {
        &self.canvas
    }

    pub fn x(&self) -> Vertex {
        self.x
    }

    pub fn psi(&self) -> &TipPreflow {
        &self.psi
    }

    /// `deg(v) ≥ 4 + |τ(v)|` for every `v ∉ {x, z}`.
    pub fn is_tame_easel(&self) -> bool {
        self.canvas.tame_except(Some(self.x))
    }
}

/// Partition of a canvas's vertices in which the tip is a singleton part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TipPartition {
    parts: Vec<Vec<Vertex>>,
}

impl TipPartition {
    pub fn new(c: &Canvas, parts: Vec<Vec<Vertex>>) -> Result<Self> {
        partition_labels(c.vertex_count(), &parts)?;
        if !parts.iter().any(|p| p.len() == 1 && p[0] == c.tip()) {
            return Err(Error::InvalidPartition("the tip must be a part by itself".into()));
        }
        let mut parts: Vec<Vec<Vertex>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        parts.sort_unstable();
        Ok(TipPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn is_nontrivial(&self) -> bool {
        self.parts.iter().any(|p| p.len() >= 2)
    }
}

/// Sorted multiset of non-tip degrees other than 4.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Census(Vec<usize>);

impl Census {
    pub fn new(mut values: Vec<usize>) -> Self {
        values.retain(|&d| d != 4);
        values.sort_unstable();
        Census(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Key for the well-founded order on canvases with a marked vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderKey {
    /// `|V| + |E(g − z)|`.
    pub o: usize,
    pub homogeneous: bool,
    pub tip_degree: usize,
}

impl OrderKey {
    /// Strict precedence; `false` covers both "not smaller" and incomparable.
    pub fn precedes(&self, other: &OrderKey) -> bool {
        if self.o != other.o {
            return self.o < other.o;
        }
        if !self.homogeneous && other.homogeneous {
            return true;
        }
        self.homogeneous && other.homogeneous && self.tip_degree < other.tip_degree
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// K4 on 0..4 with a tip 4 joined by double edges; boundary 1,1,2,2 on the clique.
    pub fn k4_canvas() -> Canvas {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for v in 0..4 {
            edges.push((4, v));
            edges.push((4, v));
        }
        Canvas::new(BorderedMultigraph::from_edges(5, &edges, &[1, 1, 2, 2, 0]).unwrap(), 4).unwrap()
    }

    /// Matching 0-1, 2-3 plus tip 4 double-joined to all four; zero boundary.
    pub fn matching_canvas() -> Canvas {
        let mut edges = vec![(0, 1), (2, 3)];
        for v in 0..4 {
            edges.push((4, v));
            edges.push((4, v));
        }
        Canvas::new(BorderedMultigraph::from_edges(5, &edges, &[0; 5]).unwrap(), 4).unwrap()
    }

    pub fn k4() -> BorderedMultigraph {
        BorderedMultigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[0; 4]).unwrap()
    }
}
