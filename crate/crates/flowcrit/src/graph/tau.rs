use serde::Serialize;

use super::{Canvas, EdgeId, Vertex};
use crate::error::{Error, Result};
use crate::z3::Z3;

/// The τ class of a vertex set, fixed by the parity of its degree and its
/// boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tau {
    Zero,
    MinusTwo,
    PlusTwo,
    PlusMinusThree,
    PlusOne,
    MinusOne,
}

impl Tau {
    pub fn from_degree_boundary(degree: usize, boundary: Z3) -> Tau {
        match (degree % 2, boundary.value()) {
            (0, 0) => Tau::Zero,
            (0, 1) => Tau::MinusTwo,
            (0, _) => Tau::PlusTwo,
            (_, 0) => Tau::PlusMinusThree,
            (_, 1) => Tau::PlusOne,
            _ => Tau::MinusOne,
        }
    }

    pub fn values(self) -> &'static [i32] {
        match self {
            Tau::Zero => &[0],
            Tau::MinusTwo => &[-2],
            Tau::PlusTwo => &[2],
            Tau::PlusMinusThree => &[-3, 3],
            Tau::PlusOne => &[1],
            Tau::MinusOne => &[-1],
        }
    }

    pub fn abs(self) -> u32 {
        self.values()[0].unsigned_abs()
    }

    /// Contains a non-positive value.
    pub fn in_friendly(self) -> bool {
        self.values().iter().any(|&t| t <= 0)
    }

    /// Contains a non-negative value.
    pub fn out_friendly(self) -> bool {
        self.values().iter().any(|&t| t >= 0)
    }
}

impl Canvas {
    fn vertex_tau(&self, v: Vertex) -> Tau {
        Tau::from_degree_boundary(self.degree(v), self.boundary()[v])
    }

    pub fn is_in_friendly(&self, v: Vertex) -> bool {
        self.vertex_tau(v).in_friendly()
    }

    pub fn is_out_friendly(&self, v: Vertex) -> bool {
        self.vertex_tau(v).out_friendly()
    }

    /// A non-tip edge joining an in-friendly end to an out-friendly end.
    pub fn is_mixed_edge(&self, e: EdgeId) -> Result<bool> {
        let [u, v] = self.endpoints(e)?;
        if u == self.tip() || v == self.tip() {
            return Err(Error::Precondition(format!("edge {e} is incident with the tip")));
        }
        Ok(self.mixed_pair(u, v))
    }

    fn mixed_pair(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = (self.vertex_tau(u), self.vertex_tau(v));
        (a.in_friendly() && b.out_friendly()) || (a.out_friendly() && b.in_friendly())
    }

    /// All mixed edges are incident with `x`; with `x = z` there are none.
    pub fn is_x_homogeneous(&self, x: Vertex) -> bool {
        let z = self.tip();
        self.edges()
            .iter()
            .filter(|e| !e.contains(&z))
            .all(|&[u, v]| (x != z && (u == x || v == x)) || !self.mixed_pair(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4_canvas;
    use crate::graph::{BorderedMultigraph, Canvas};

    #[test]
    fn chart() {
        assert_eq!(Tau::from_degree_boundary(4, Z3::ZERO).values(), &[0]);
        assert_eq!(Tau::from_degree_boundary(3, Z3::ZERO).values(), &[-3, 3]);
        assert_eq!(Tau::from_degree_boundary(5, Z3::ONE).values(), &[1]);
        assert_eq!(Tau::from_degree_boundary(6, Z3::ONE).abs(), 2);
        assert_eq!(Tau::from_degree_boundary(6, Z3::TWO).abs(), 2);
        assert_eq!(Tau::from_degree_boundary(3, Z3::ZERO).abs(), 3);
        assert_eq!(Tau::from_degree_boundary(7, Z3::TWO).abs(), 1);
        // every value is congruent to the boundary
        for d in 0..8 {
            for b in Z3::ALL {
                let t = Tau::from_degree_boundary(d, b);
                assert!(t.values().iter().all(|&v| Z3::new(v as i64) == b));
                assert_eq!(t.abs() as usize % 2, d % 2);
            }
        }
    }

    #[test]
    fn tau_of_sets() {
        let f = k4_canvas();
        assert_eq!(f.tau(&[0]).unwrap(), Tau::PlusOne);
        assert_eq!(f.tau(&[0, 1, 2, 3]).unwrap(), Tau::Zero);
        assert_eq!(f.tau(&[]).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn friendliness() {
        assert!(Tau::Zero.in_friendly() && Tau::Zero.out_friendly());
        assert!(Tau::PlusMinusThree.in_friendly() && Tau::PlusMinusThree.out_friendly());
        assert!(!Tau::PlusOne.in_friendly() && Tau::PlusOne.out_friendly());
        assert!(Tau::MinusTwo.in_friendly() && !Tau::MinusTwo.out_friendly());
    }

    #[test]
    fn homogeneity() {
        // K4 canvas: vertices 0,1 have τ = {1}, vertices 2,3 have τ = {-1}
        let f = k4_canvas();
        assert!(!f.is_mixed_edge(0).unwrap()); // 0-1
        assert!(f.is_mixed_edge(1).unwrap()); // 0-2
        assert!(f.is_mixed_edge(6).is_err());
        assert!(!f.is_x_homogeneous(0));
        assert!(!f.is_x_homogeneous(4));
        // both non-tip vertices have odd degree and boundary 1, so τ = {1}
        let g = BorderedMultigraph::from_edges(3, &[(0, 1), (0, 2), (0, 2), (1, 2), (1, 2)], &[1, 1, 1]).unwrap();
        let c = Canvas::new(g, 2).unwrap();
        assert!(c.is_x_homogeneous(0) && c.is_x_homogeneous(1) && c.is_x_homogeneous(2));
    }
}
