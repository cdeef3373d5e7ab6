//! Expansion: replacing vertices by the insides of library canvases.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BorderedMultigraph, CanonCode, Canvas, Multigraph, Vertex};
use crate::z3::Z3;

/// A library canvas in canonical form (tip 0; marked vertex 1 for easels).
#[derive(Clone, Debug)]
pub struct Piece {
    pub code: CanonCode,
    pub canvas: Canvas,
    pub x: Option<Vertex>,
}

impl Piece {
    pub fn from_code(code: CanonCode) -> Result<Piece> {
        let canvas = code.to_canvas()?;
        let x = (code.mark_count() >= 2).then_some(1);
        Ok(Piece { code, canvas, x })
    }

    pub fn size(&self) -> usize {
        self.canvas.vertex_count()
    }
}

/// Pieces indexed by (tip degree, tip boundary).
#[derive(Clone, Debug, Default)]
pub struct Library {
    by_key: HashMap<(usize, Z3), Vec<Piece>>,
}

impl Library {
    pub fn new() -> Self {
        Library::default()
    }

    pub fn insert(&mut self, piece: Piece) {
        let key = (piece.canvas.tip_degree(), piece.canvas.boundary()[piece.canvas.tip()]);
        self.by_key.entry(key).or_default().push(piece);
    }

    /// Pieces that can replace a vertex of degree `deg` and boundary `b`.
    pub fn fitting(&self, deg: usize, b: Z3) -> &[Piece] {
        self.by_key.get(&(deg, -b)).map_or(&[], |v| v.as_slice())
    }

    pub fn len(&self) -> usize {
        self.by_key.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One substitution: `table[i][j]` edges run from the `i`-th neighbour of
/// `vertex` (increasing) to the `j`-th tip neighbour of the piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub vertex: Vertex,
    pub piece: CanonCode,
    pub table: Vec<Vec<usize>>,
}

/// Neighbours of `v` with multiplicities, increasing.
fn neighbour_counts(g: &Multigraph, v: Vertex) -> Vec<(Vertex, usize)> {
    let mut counts = vec![0; g.vertex_count()];
    for &[a, b] in g.edges() {
        if a == v {
            counts[b] += 1;
        } else if b == v {
            counts[a] += 1;
        }
    }
    counts.into_iter().enumerate().filter(|&(_, m)| m > 0).collect()
}

/// Replaces `v` by `piece − tip`. The first non-tip vertex of the piece takes
/// index `v`; the others are appended. Returns the canvas and the map from
/// piece vertices to new indices (`None` for the piece tip).
pub fn substitute(
    base: &Canvas,
    v: Vertex,
    piece: &Canvas,
    table: &[Vec<usize>],
) -> Result<(Canvas, Vec<Option<Vertex>>)> {
    if v == base.tip() || v >= base.vertex_count() {
        return Err(Error::Precondition(format!("cannot substitute at vertex {v}")));
    }
    if base.degree(v) != piece.tip_degree() {
        return Err(Error::Precondition(format!(
            "degree {} at {v} differs from piece tip degree {}",
            base.degree(v),
            piece.tip_degree()
        )));
    }
    if base.boundary()[v] != -piece.boundary()[piece.tip()] {
        return Err(Error::Precondition("piece tip boundary must be the negated vertex boundary".into()));
    }
    let rows = neighbour_counts(base.multigraph(), v);
    let cols = piece.tip_neighbors();
    let shape_ok = table.len() == rows.len()
        && table.iter().zip(&rows).all(|(r, &(_, m))| r.len() == cols.len() && r.iter().sum::<usize>() == m)
        && (0..cols.len()).all(|j| table.iter().map(|r| r[j]).sum::<usize>() == cols[j].1);
    if !shape_ok {
        return Err(Error::Precondition("attachment table does not match the degrees".into()));
    }
    let n = base.vertex_count();
    let inner = piece.non_tip_vertices();
    let mut map = vec![None; piece.vertex_count()];
    for (i, &p) in inner.iter().enumerate() {
        map[p] = Some(if i == 0 { v } else { n + i - 1 });
    }
    let mut edges: Vec<(Vertex, Vertex)> =
        base.edges().iter().filter(|e| !e.contains(&v)).map(|&[a, b]| (a, b)).collect();
    for &[a, b] in piece.edges() {
        if a != piece.tip() && b != piece.tip() {
            edges.push((map[a].unwrap(), map[b].unwrap()));
        }
    }
    for (i, &(w, _)) in rows.iter().enumerate() {
        for (j, &(u, _)) in cols.iter().enumerate() {
            for _ in 0..table[i][j] {
                edges.push((map[u].unwrap(), w));
            }
        }
    }
    let mut boundary = base.boundary().to_vec();
    boundary.resize(n + inner.len() - 1, Z3::ZERO);
    for &p in &inner {
        boundary[map[p].unwrap()] = piece.boundary()[p];
    }
    let g = Multigraph::new(n + inner.len() - 1, edges)?;
    Ok((Canvas::new(BorderedMultigraph::new(g, boundary)?, base.tip())?, map))
}

/// All tables with the given row sums, column sums and per-row cell caps.
fn tables(rows: &[(usize, usize)], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn fill(
        rows: &[(usize, usize)],
        left: &mut [usize],
        i: usize,
        j: usize,
        need: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == rows.len() {
            if left.iter().all(|&l| l == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let ncols = left.len();
        if j == ncols {
            if need == 0 {
                let next = rows.get(i + 1).map_or(0, |r| r.0);
                fill(rows, left, i + 1, 0, next, cur, out);
            }
            return;
        }
        let room: usize = left[j..].iter().map(|&l| l.min(rows[i].1)).sum();
        if room < need {
            return;
        }
        let hi = need.min(left[j]).min(rows[i].1);
        for t in (0..=hi).rev() {
            cur[i][j] = t;
            left[j] -= t;
            fill(rows, left, i, j + 1, need - t, cur, out);
            left[j] += t;
        }
        cur[i][j] = 0;
    }
    let mut out = Vec::new();
    let mut left = cols.to_vec();
    let mut cur = vec![vec![0; cols.len()]; rows.len()];
    let first = rows.first().map_or(0, |r| r.0);
    fill(rows, &mut left, 0, 0, first, &mut cur, &mut out);
    out
}

/// What an expansion may and must do.
pub struct ExpansionSpec<'a> {
    /// Pieces for ordinary vertices.
    pub library: &'a Library,
    /// Pieces for the marked vertex, with its position in the base.
    pub marked: Option<(Vertex, &'a Library)>,
    /// Vertices that must be substituted.
    pub forced: Vec<Vertex>,
    /// Exact vertex count of the results.
    pub target_n: usize,
}

#[derive(Clone, Debug)]
pub struct Expansion {
    pub canvas: Canvas,
    pub x: Option<Vertex>,
    pub subs: Vec<Substitution>,
}

/// Every expansion of `base` with exactly `spec.target_n` vertices whose
/// result is tame and simple off the tip. Pieces keep their own degrees
/// and boundaries, so these two properties are decided on the base: every
/// non-tame vertex and one end of every off-tip multi-edge must be
/// substituted.
pub fn expansions(base: &Canvas, spec: &ExpansionSpec<'_>) -> Vec<Expansion> {
    let n = base.vertex_count();
    if spec.target_n < n {
        return Vec::new();
    }
    let z = base.tip();
    let degrees = base.degrees();
    let mut required = vec![false; n];
    for &v in &spec.forced {
        required[v] = true;
    }
    let marked = spec.marked.map(|m| m.0);
    for v in 0..n {
        if v != z && !vertex_tame(base, v, degrees[v]) {
            required[v] = true;
        }
    }
    let multi: Vec<(Vertex, Vertex)> =
        base.bundles().into_iter().filter(|&(u, w, m)| m >= 2 && u != z && w != z).map(|(u, w, _)| (u, w)).collect();
    let options: Vec<&[Piece]> = (0..n)
        .map(|v| {
            if v == z {
                return &[][..];
            }
            let lib = match spec.marked {
                Some((x, l)) if x == v => l,
                _ => spec.library,
            };
            lib.fitting(degrees[v], base.boundary()[v])
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Option<&Piece>> = vec![None; n];
    choose(base, &options, &required, &multi, marked, 0, spec.target_n - n, &mut chosen, &mut out);
    out
}

fn vertex_tame(c: &Canvas, v: Vertex, d: usize) -> bool {
    d >= 4 + crate::graph::Tau::from_degree_boundary(d, c.boundary()[v]).abs() as usize
}

#[allow(clippy::too_many_arguments)]
fn choose<'p>(
    base: &Canvas,
    options: &[&'p [Piece]],
    required: &[bool],
    multi: &[(Vertex, Vertex)],
    marked: Option<Vertex>,
    v: Vertex,
    budget: usize,
    chosen: &mut Vec<Option<&'p Piece>>,
    out: &mut Vec<Expansion>,
) {
    if v == base.vertex_count() {
        if budget == 0 && multi.iter().all(|&(a, b)| chosen[a].is_some() || chosen[b].is_some()) {
            realise(base, chosen, marked, out);
        }
        return;
    }
    if !required[v] {
        choose(base, options, required, multi, marked, v + 1, budget, chosen, out);
    }
    for p in options[v] {
        let cost = p.size() - 2;
        if cost <= budget {
            chosen[v] = Some(p);
            choose(base, options, required, multi, marked, v + 1, budget - cost, chosen, out);
            chosen[v] = None;
        }
    }
}

fn realise(base: &Canvas, chosen: &[Option<&Piece>], marked: Option<Vertex>, out: &mut Vec<Expansion>) {
    let order: Vec<Vertex> = (0..chosen.len()).filter(|&v| chosen[v].is_some()).collect();
    let mut subs = Vec::with_capacity(order.len());
    step(base, chosen, &order, 0, marked, &mut subs, out);
}

fn step(
    cur: &Canvas,
    chosen: &[Option<&Piece>],
    order: &[Vertex],
    i: usize,
    x: Option<Vertex>,
    subs: &mut Vec<Substitution>,
    out: &mut Vec<Expansion>,
) {
    if i == order.len() {
        out.push(Expansion { canvas: cur.clone(), x, subs: subs.clone() });
        return;
    }
    let v = order[i];
    let piece = chosen[v].unwrap();
    let pending: Vec<Vertex> = order[i + 1..].to_vec();
    let rows: Vec<(usize, usize)> = neighbour_counts(cur.multigraph(), v)
        .into_iter()
        .map(|(w, m)| (m, if w == cur.tip() || pending.contains(&w) { usize::MAX } else { 1 }))
        .collect();
    let cols: Vec<usize> = piece.canvas.tip_neighbors().into_iter().map(|c| c.1).collect();
    for table in tables(&rows, &cols) {
        let (next, map) = substitute(cur, v, &piece.canvas, &table).expect("shapes match by construction");
        let nx = match (x, piece.x) {
            (Some(xv), Some(px)) if xv == v => map[px],
            (x, _) => x,
        };
        subs.push(Substitution { vertex: v, piece: piece.code.clone(), table });
        step(&next, chosen, order, i + 1, nx, subs, out);
        subs.pop();
    }
}

/// Re-applies recorded substitutions; the marked vertex is tracked when given.
pub fn apply_substitutions(
    base: &Canvas,
    x: Option<Vertex>,
    subs: &[Substitution],
) -> Result<(Canvas, Option<Vertex>)> {
    let mut cur = base.clone();
    let mut x = x;
    for s in subs {
        let piece = Piece::from_code(s.piece.clone())?;
        let (next, map) = substitute(&cur, s.vertex, &piece.canvas, &s.table)?;
        if x == Some(s.vertex) {
            x = map[piece.x.ok_or_else(|| Error::Precondition("the marked vertex needs an easel piece".into()))?];
        }
        cur = next;
    }
    Ok((cur, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4_canvas;

    #[test]
    fn table_counts() {
        // 2x2 with margins (1,1) / (1,1): identity and swap
        assert_eq!(tables(&[(1, 9), (1, 9)], &[1, 1]).len(), 2);
        // one row of 4 into caps (2,2)
        assert_eq!(tables(&[(4, 9)], &[2, 2]).len(), 1);
        // four simple rows into caps (2,2): choose which two go left
        assert_eq!(tables(&[(1, 1), (1, 1), (1, 1), (1, 1)], &[2, 2]).len(), 6);
        // per-cell cap forbids a double edge
        assert_eq!(tables(&[(2, 1)], &[2]).len(), 0);
    }

    #[test]
    fn substituting_a_trivial_piece_is_identity_up_to_iso() {
        let f = k4_canvas();
        // two-vertex piece: tip joined to one vertex by 5 edges, boundaries mirrored
        let b = f.boundary()[0];
        let g = BorderedMultigraph::new(Multigraph::new(2, vec![(0, 1); 5]).unwrap(), vec![-b, b]).unwrap();
        let piece = Canvas::new(g, 0).unwrap();
        let rows = neighbour_counts(f.multigraph(), 0);
        let table: Vec<Vec<usize>> = rows.iter().map(|&(_, m)| vec![m]).collect();
        let (h, map) = substitute(&f, 0, &piece, &table).unwrap();
        assert_eq!(map[1], Some(0));
        assert_eq!(h.canonical_code().unwrap(), f.canonical_code().unwrap());
    }

    #[test]
    fn expansion_of_the_single_vertex_canvas() {
        // base: tip 0 joined to vertex 1 by 8 edges; substituting the K4 canvas gives it back
        let (code, f) = k4_canvas().canonical().unwrap();
        let b = f.boundary()[0];
        let g = BorderedMultigraph::new(Multigraph::new(2, vec![(0, 1); 8]).unwrap(), vec![b, -b]).unwrap();
        let base = Canvas::new(g, 0).unwrap();
        let mut lib = Library::new();
        lib.insert(Piece::from_code(code.clone()).unwrap());
        let spec = ExpansionSpec { library: &lib, marked: None, forced: vec![], target_n: 5 };
        let all = expansions(&base, &spec);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].canvas.canonical_code().unwrap(), code);
        let (again, _) = apply_substitutions(&base, None, &all[0].subs).unwrap();
        assert_eq!(again.canonical_code().unwrap(), code);
        // S = ∅ when the sizes already agree
        let spec = ExpansionSpec { library: &lib, marked: None, forced: vec![], target_n: 2 };
        assert_eq!(expansions(&base, &spec).len(), 1);
        let spec = ExpansionSpec { library: &lib, marked: None, forced: vec![1], target_n: 2 };
        assert!(expansions(&base, &spec).is_empty());
    }
}
