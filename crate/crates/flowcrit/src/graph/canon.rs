//! Canonical codes up to isomorphism fixing a list of marked vertices.
//!
//! Colour refinement on (mark, boundary, degree) seeds an ordered cell
//! structure; a pruned search over cell-respecting orderings then picks the
//! lexicographically least adjacency code.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BorderedMultigraph, Canvas, Multigraph, Vertex};
use crate::error::{Error, Result};
use crate::z3::Z3;

pub const DEFAULT_CANON_CAP: usize = 12;

/// Decodable canonical byte string: `[n, marks, rows…]` where row `i` is
/// the boundary of position `i` followed by its multiplicities to positions
/// `0..i`. Marked vertices occupy the first positions, in mark order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode(Vec<u8>);

#[derive(Clone, Debug)]
pub struct CanonForm {
    pub code: CanonCode,
    /// `perm[old] = new` position.
    pub perm: Vec<Vertex>,
}

impl CanonCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<CanonCode> {
        if !s.len().is_multiple_of(2) {
            return Err(Error::BadCode);
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| Error::BadCode))
            .collect::<Result<Vec<u8>>>()?;
        let code = CanonCode(bytes);
        code.decode()?;
        Ok(code)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn mark_count(&self) -> usize {
        self.0.get(1).copied().unwrap_or(0) as usize
    }

    /// Rebuilds the graph in canonical vertex order; edges sorted by endpoints.
    pub fn decode(&self) -> Result<(BorderedMultigraph, usize)> {
        let b = &self.0;
        if b.len() < 2 {
            return Err(Error::BadCode);
        }
        let n = b[0] as usize;
        let marks = b[1] as usize;
        if marks > n || b.len() != 2 + n + n * (n.saturating_sub(1)) / 2 {
            return Err(Error::BadCode);
        }
        let mut boundary = Vec::with_capacity(n);
        let mut bundles = Vec::new();
        let mut at = 2;
        for i in 0..n {
            if b[at] > 2 {
                return Err(Error::BadCode);
            }
            boundary.push(Z3::from(b[at]));
            at += 1;
            for j in 0..i {
                if b[at] > 0 {
                    bundles.push((j, i, b[at] as usize));
                }
                at += 1;
            }
        }
        bundles.sort_unstable();
        let graph = Multigraph::from_bundles(n, &bundles)?;
        Ok((BorderedMultigraph::new(graph, boundary)?, marks))
    }

    /// Decodes a code with at least one mark as a canvas with tip 0.
    pub fn to_canvas(&self) -> Result<Canvas> {
        let (g, marks) = self.decode()?;
        if marks == 0 {
            return Err(Error::BadCode);
        }
        Canvas::new(g, 0)
    }
}

impl fmt::Display for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonCode({})", self.to_hex())
    }
}

impl Serialize for CanonCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<CanonCode, D::Error> {
        let s = String::deserialize(d)?;
        CanonCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

fn refine(mult: &[Vec<usize>], mut colour: Vec<usize>) -> Vec<usize> {
    let n = colour.len();
    let mut count = colour.iter().max().map_or(0, |m| m + 1);
    loop {
        let sigs: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, usize)> =
                    (0..n).filter(|&w| mult[v][w] > 0).map(|w| (colour[w], mult[v][w])).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<(usize, usize)>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).expect("signature present")).collect();
        if distinct.len() == count {
            return next;
        }
        count = distinct.len();
        colour = next;
    }
}

struct Search<'a> {
    mult: &'a [Vec<usize>],
    boundary: &'a [u8],
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<Vertex>,
    used: Vec<bool>,
    rows: Vec<Vec<u8>>,
    best: Option<(Vec<Vec<u8>>, Vec<Vertex>)>,
}

impl Search<'_> {
    fn row(&self, v: Vertex) -> Vec<u8> {
        let mut r = Vec::with_capacity(self.order.len() + 1);
        r.push(self.boundary[v]);
        r.extend(self.order.iter().map(|&w| self.mult[v][w] as u8));
        r
    }

    /// `less` is true once the current prefix is already below the best.
    fn go(&mut self, less: bool) {
        let p = self.order.len();
        if p == self.colour.len() {
            if less || self.best.is_none() {
                self.best = Some((self.rows.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..self.colour.len() {
            if self.used[v] || self.colour[v] != self.slot_colour[p] {
                continue;
            }
            let row = self.row(v);
            let mut now_less = less;
            if !less {
                if let Some((best, _)) = &self.best {
                    match row.cmp(&best[p]) {
                        Ordering::Greater => continue,
                        Ordering::Less => now_less = true,
                        Ordering::Equal => {}
                    }
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.rows.push(row);
            self.go(now_less);
            self.rows.pop();
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical form of `g` up to isomorphisms fixing each of `marks`.
pub fn canonical_form(g: &BorderedMultigraph, marks: &[Vertex], cap: usize) -> Result<CanonForm> {
    let n = g.vertex_count();
    if n > cap || n > u8::MAX as usize {
        return Err(Error::AboveCap { n, cap });
    }
    let mult = g.multiplicity_matrix();
    if mult.iter().flatten().any(|&m| m > u8::MAX as usize) {
        return Err(Error::Precondition("edge multiplicity above 255".into()));
    }
    for &m in marks {
        if m >= n {
            return Err(Error::VertexOutOfRange(m));
        }
    }
    let degrees = g.degrees();
    let keys: Vec<(usize, usize, u8, usize)> = (0..n)
        .map(|v| match marks.iter().position(|&m| m == v) {
            Some(i) => (0, i, 0, 0),
            None => (1, 0, g.boundary()[v].value(), degrees[v]),
        })
        .collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let colour0: Vec<usize> = keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect();
    let colour = refine(&mult, colour0);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let boundary: Vec<u8> = g.boundary().iter().map(|b| b.value()).collect();
    let mut search = Search {
        mult: &mult,
        boundary: &boundary,
        slot_colour,
        colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        rows: Vec::with_capacity(n),
        best: None,
    };
    search.go(false);
    let (rows, order) = search.best.expect("at least one ordering");
    let mut bytes = vec![n as u8, marks.len() as u8];
    for r in rows {
        bytes.extend(r);
    }
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(CanonForm { code: CanonCode(bytes), perm })
}

impl BorderedMultigraph {
    pub fn canonical_code(&self) -> Result<CanonCode> {
        canonical_form(self, &[], DEFAULT_CANON_CAP).map(|f| f.code)
    }
}

impl Canvas {
    /// Code up to tip-fixing isomorphism, default vertex cap.
    pub fn canonical_code(&self) -> Result<CanonCode> {
        self.canonical_code_with_cap(DEFAULT_CANON_CAP)
    }

    pub fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonCode> {
        canonical_form(self.graph(), &[self.tip()], cap).map(|f| f.code)
    }

    /// The canonical representative: tip 0, edges sorted by endpoints.
    pub fn canonical(&self) -> Result<(CanonCode, Canvas)> {
        let code = self.canonical_code()?;
        let c = code.to_canvas()?;
        Ok((code, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{k4, k4_canvas, matching_canvas};

    #[test]
    fn relabelled_k4_codes_agree() {
        let g = BorderedMultigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[1, 0, 2, 0])
            .unwrap();
        let h = g.relabel(&[2, 3, 0, 1]);
        assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
        assert_ne!(g.canonical_code().unwrap(), k4().canonical_code().unwrap());
    }

    #[test]
    fn matching_canvas_mirror() {
        let f = matching_canvas();
        let mirror = f.relabel(&[2, 3, 0, 1, 4]);
        assert_eq!(f.canonical_code().unwrap(), mirror.canonical_code().unwrap());
    }

    #[test]
    fn tip_is_respected() {
        // path a-b-c; tip at an end vs tip in the middle
        let g = BorderedMultigraph::from_edges(3, &[(0, 1), (1, 2)], &[0, 0, 0]).unwrap();
        let end = Canvas::new(g.clone(), 0).unwrap();
        let mid = Canvas::new(g, 1).unwrap();
        assert_ne!(end.canonical_code().unwrap(), mid.canonical_code().unwrap());
    }

    #[test]
    fn decode_round_trip() {
        let f = k4_canvas();
        let (code, c) = f.canonical().unwrap();
        assert_eq!(c.tip(), 0);
        assert_eq!(c.canonical_code().unwrap(), code);
        assert_eq!(CanonCode::from_hex(&code.to_hex()).unwrap(), code);
        assert_eq!(c.edge_count(), f.edge_count());
    }

    #[test]
    fn cap_is_enforced() {
        let g = BorderedMultigraph::with_zero_boundary(Multigraph::empty(13));
        assert_eq!(g.canonical_code().unwrap_err(), Error::AboveCap { n: 13, cap: 12 });
    }

    #[test]
    fn bad_codes_are_rejected() {
        assert!(CanonCode::from_hex("0").is_err());
        assert!(CanonCode::from_hex("0201").is_err());
        assert!(CanonCode::from_hex("zz").is_err());
    }
}
