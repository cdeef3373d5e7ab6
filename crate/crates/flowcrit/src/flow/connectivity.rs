use super::Solver;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};
use crate::z3::Z3;

/// Has a flow for every Z3-boundary. Boundaries are tried in lexicographic
/// order (the last vertex is forced) and the first failure stops the sweep.
pub fn is_z3_connected(g: &Multigraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("Z3-connectivity needs a connected graph".into()));
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(true);
    }
    let solver = Solver::for_graph(g);
    let mut b = vec![Z3::ZERO; n];
    loop {
        b[n - 1] = -b[..n - 1].iter().sum::<Z3>();
        if solver.solve(&b).is_none() {
            return Ok(false);
        }
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            b[i] += Z3::ONE;
            if !b[i].is_zero() {
                break;
            }
        }
    }
}

/// A single vertex, or some edge of multiplicity at least two whose
/// contraction is collapsible. Contracting a multi-edge never destroys
/// another one, so contracting greedily decides the recursive definition.
pub fn is_collapsible(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut mult = std::collections::HashMap::new();
        for &[u, v] in g.edges() {
            let (a, b) = (label[u], label[v]);
            if a != b {
                *mult.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
            }
        }
        let Some((&(a, b), _)) = mult.iter().filter(|(_, &m)| m >= 2).min() else {
            break;
        };
        for l in &mut label {
            if *l == b {
                *l = a;
            }
        }
    }
    label.iter().all(|&l| l == label[0])
}

/// Splits off the two edges at a degree-2 vertex and deletes it.
pub fn suppress(g: &Multigraph, v: Vertex) -> Result<Multigraph> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    let inc = g.incident_edges(v);
    if inc.len() != 2 {
        return Err(Error::Precondition(format!("vertex {v} has degree {}, not 2", inc.len())));
    }
    let other = |e: usize| {
        let [a, b] = g.edges()[e];
        if a == v {
            b
        } else {
            a
        }
    };
    let (a, b) = (other(inc[0]), other(inc[1]));
    let shift = |w: Vertex| if w > v { w - 1 } else { w };
    let mut edges: Vec<(Vertex, Vertex)> =
        g.edges().iter().filter(|e| !e.contains(&v)).map(|&[x, y]| (shift(x), shift(y))).collect();
    if a != b {
        edges.push((shift(a), shift(b)));
    }
    Multigraph::new(g.vertex_count() - 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_edges() -> Vec<(usize, usize)> {
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    }

    #[test]
    fn z3_connectivity_examples() {
        assert!(is_z3_connected(&Multigraph::empty(1)).unwrap());
        assert!(!is_z3_connected(&Multigraph::new(4, k4_edges()).unwrap()).unwrap());
        let mut e = k4_edges();
        e.push((0, 1));
        let g = Multigraph::new(4, e).unwrap();
        assert!(is_z3_connected(&g).unwrap());
        assert!(is_collapsible(&g));
        assert!(is_z3_connected(&Multigraph::empty(2)).is_err());
    }

    #[test]
    fn collapsibility() {
        assert!(is_collapsible(&Multigraph::empty(1)));
        assert!(is_collapsible(&Multigraph::new(2, [(0, 1), (0, 1)]).unwrap()));
        assert!(!is_collapsible(&Multigraph::new(2, [(0, 1)]).unwrap()));
        assert!(!is_collapsible(&Multigraph::new(4, k4_edges()).unwrap()));
    }

    #[test]
    fn suppression() {
        let p = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(suppress(&p, 1).unwrap().edges(), &[[0, 1]]);
        let d = Multigraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(suppress(&d, 1).is_err());
        let loopy = Multigraph::new(3, [(0, 2), (0, 2), (0, 1)]).unwrap();
        let s = suppress(&loopy, 2).unwrap();
        assert_eq!(s.edges(), &[[0, 1]]);
    }
}
