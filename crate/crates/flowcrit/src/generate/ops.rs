//! The local operations behind the generation theorems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BorderedMultigraph, Canvas, EdgeId, Multigraph, Vertex};
use crate::z3::Z3;

/// A vertex or an edge instance, as acted on by 2- and x-alterations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AltItem {
    Vertex(Vertex),
    Edge(EdgeId),
}

fn rebuild(c: &Canvas, g: Multigraph, boundary: Vec<Z3>) -> Result<Canvas> {
    Canvas::new(BorderedMultigraph::new(g, boundary)?, c.tip())
}

fn check_vertex(c: &Canvas, v: Vertex) -> Result<()> {
    if v >= c.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    Ok(())
}

/// Adds an edge `uv` and moves one unit of boundary from `v` to `u`.
fn alteration(c: &Canvas, u: Vertex, v: Vertex) -> Result<Canvas> {
    check_vertex(c, u)?;
    check_vertex(c, v)?;
    if u == v {
        return Err(Error::Precondition("alteration needs two distinct vertices".into()));
    }
    let mut g = c.multigraph().clone();
    g.push_edge(u, v)?;
    let mut b = c.boundary().to_vec();
    b[u] += Z3::ONE;
    b[v] -= Z3::ONE;
    rebuild(c, g, b)
}

/// 1-alteration at non-tip vertices `u ≠ v`: edge `uv`, `β(u) + 1`, `β(v) − 1`.
pub fn one_alteration(c: &Canvas, u: Vertex, v: Vertex) -> Result<Canvas> {
    if u == c.tip() || v == c.tip() {
        return Err(Error::Precondition("1-alteration avoids the tip".into()));
    }
    alteration(c, u, v)
}

/// Tip-alteration at `w`: with `raise_tip` the tip gains one unit of
/// boundary and `w` loses one, otherwise the reverse.
pub fn tip_alteration(c: &Canvas, w: Vertex, raise_tip: bool) -> Result<Canvas> {
    if w == c.tip() {
        return Err(Error::Precondition("tip-alteration needs a non-tip vertex".into()));
    }
    if raise_tip {
        alteration(c, c.tip(), w)
    } else {
        alteration(c, w, c.tip())
    }
}

/// Deletes the highest-id edge between the tip and `v`; needs multiplicity ≥ 2.
pub fn tip_reduction(c: &Canvas, v: Vertex) -> Result<Canvas> {
    check_vertex(c, v)?;
    let key = [c.tip().min(v), c.tip().max(v)];
    let ids: Vec<EdgeId> = (0..c.edge_count()).filter(|&e| c.edges()[e] == key).collect();
    if ids.len() < 2 || v == c.tip() {
        return Err(Error::Precondition(format!("tip multiplicity at {v} is {}, need at least 2", ids.len())));
    }
    let mut g = c.multigraph().clone();
    g.remove_edges(&[*ids.last().unwrap()]);
    rebuild(c, g, c.boundary().to_vec())
}

fn distinct_items(c: &Canvas, items: &[AltItem]) -> Result<()> {
    for (i, a) in items.iter().enumerate() {
        match *a {
            AltItem::Vertex(v) => check_vertex(c, v)?,
            AltItem::Edge(e) => {
                c.endpoints(e)?;
            }
        }
        if items[..i].contains(a) {
            return Err(Error::Precondition("alteration items must be distinct".into()));
        }
    }
    Ok(())
}

/// 2-alteration on one or two items. Edges in `items` are subdivided by a
/// new vertex `y` (appended last, boundary 0); each vertex item gets a
/// double edge to `y`. Tip edges may be subdivided; the tip itself may not
/// be an item.
pub fn two_alteration(c: &Canvas, items: &[AltItem]) -> Result<Canvas> {
    if items.is_empty() || items.len() > 2 {
        return Err(Error::Precondition("2-alteration acts on one or two items".into()));
    }
    distinct_items(c, items)?;
    if items.contains(&AltItem::Vertex(c.tip())) {
        return Err(Error::ContainsTip);
    }
    let mut g = c.multigraph().clone();
    let y = g.add_vertex();
    let mut drop = Vec::new();
    for item in items {
        match *item {
            AltItem::Vertex(w) => {
                g.push_edge(y, w)?;
                g.push_edge(y, w)?;
            }
            AltItem::Edge(e) => {
                let [u, v] = c.edges()[e];
                g.push_edge(u, y)?;
                g.push_edge(y, v)?;
                drop.push(e);
            }
        }
    }
    g.remove_edges(&drop);
    let mut b = c.boundary().to_vec();
    b.push(Z3::ZERO);
    rebuild(c, g, b)
}

/// x-alteration on `y`: an edge `uv` of `g − {x, z}` is replaced by `ux`
/// and `vx`; a vertex `v ∉ {x, z}` gets a double edge to `x`.
pub fn x_alteration(c: &Canvas, x: Vertex, y: AltItem) -> Result<Canvas> {
    check_vertex(c, x)?;
    if x == c.tip() {
        return Err(Error::Precondition("x must differ from the tip".into()));
    }
    distinct_items(c, &[y])?;
    let mut g = c.multigraph().clone();
    match y {
        AltItem::Vertex(v) => {
            if v == x || v == c.tip() {
                return Err(Error::Precondition("y must avoid x and the tip".into()));
            }
            g.push_edge(v, x)?;
            g.push_edge(v, x)?;
        }
        AltItem::Edge(e) => {
            let [u, v] = c.edges()[e];
            if [u, v].iter().any(|&w| w == x || w == c.tip()) {
                return Err(Error::Precondition("y must avoid x and the tip".into()));
            }
            g.push_edge(u, x)?;
            g.push_edge(v, x)?;
            g.remove_edges(&[e]);
        }
    }
    rebuild(c, g, c.boundary().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4_canvas;

    fn path_canvas() -> Canvas {
        // tip 2 joined to 0 and 1, plus edge 0-1
        let g = BorderedMultigraph::from_edges(3, &[(0, 1), (0, 2), (0, 2), (1, 2)], &[0, 0, 0]).unwrap();
        Canvas::new(g, 2).unwrap()
    }

    #[test]
    fn one_alteration_moves_boundary() {
        let c = path_canvas();
        let a = one_alteration(&c, 0, 1).unwrap();
        assert_eq!(a.boundary()[0], Z3::ONE);
        assert_eq!(a.boundary()[1], Z3::TWO);
        assert_eq!(a.multiplicity(0, 1), 2);
        let back = one_alteration(&a, 1, 0).unwrap();
        assert_eq!(back.boundary(), c.boundary());
        assert_eq!(back.multiplicity(0, 1), 3);
        assert!(one_alteration(&c, 0, 0).is_err());
        assert!(one_alteration(&c, 0, 2).is_err());
    }

    #[test]
    fn tip_ops() {
        let c = path_canvas();
        let t = tip_alteration(&c, 1, true).unwrap();
        assert_eq!(t.tip_degree(), 4);
        assert_eq!(t.boundary()[2], Z3::ONE);
        let r = tip_reduction(&c, 0).unwrap();
        assert_eq!(r.multiplicity(0, 2), 1);
        assert_eq!(r.boundary(), c.boundary());
        assert!(tip_reduction(&c, 1).is_err());
    }

    #[test]
    fn two_alteration_on_two_edges() {
        let f = k4_canvas();
        // edges 0 = 0-1 and 5 = 2-3 are disjoint
        let a = two_alteration(&f, &[AltItem::Edge(0), AltItem::Edge(5)]).unwrap();
        let y = 5;
        assert_eq!(a.vertex_count(), 6);
        assert_eq!(a.degree(y), 4);
        assert_eq!(a.boundary()[y], Z3::ZERO);
        assert_eq!(a.multiplicity(0, 1), 0);
        assert_eq!(a.multiplicity(0, y), 1);
        assert_eq!(a.edge_count(), f.edge_count() + 2);
        let v = two_alteration(&f, &[AltItem::Vertex(0)]).unwrap();
        assert_eq!(v.multiplicity(0, 5), 2);
        assert!(two_alteration(&f, &[AltItem::Vertex(4)]).is_err());
        assert!(two_alteration(&f, &[AltItem::Edge(0), AltItem::Edge(0)]).is_err());
        // a tip edge may be subdivided
        assert!(two_alteration(&f, &[AltItem::Edge(6), AltItem::Edge(5)]).is_ok());
    }

    #[test]
    fn x_alteration_raises_degree_by_two() {
        let f = k4_canvas();
        let e = x_alteration(&f, 0, AltItem::Edge(5)).unwrap();
        assert_eq!(e.degree(0), f.degree(0) + 2);
        assert_eq!(e.multiplicity(2, 3), 0);
        let v = x_alteration(&f, 0, AltItem::Vertex(2)).unwrap();
        assert_eq!(v.degree(0), f.degree(0) + 2);
        assert_eq!(v.multiplicity(0, 2), 3);
        assert!(x_alteration(&f, 0, AltItem::Edge(0)).is_err());
        assert!(x_alteration(&f, 0, AltItem::Vertex(4)).is_err());
    }
}
