//! Nowhere-zero Z3 flows on K4 under every boundary.

use flowcrit::enumerate::z3_boundaries;
use flowcrit::flow::{find_nowhere_zero_flow, is_z3_connected};
use flowcrit::graph::BorderedMultigraph;

fn main() -> flowcrit::Result<()> {
    let k4 = BorderedMultigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[0; 4])?;
    let mut without = 0;
    for b in z3_boundaries(k4.multigraph()) {
        let g = k4.with_boundary(b.clone())?;
        let label: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        match find_nowhere_zero_flow(&g) {
            Some(o) => println!("beta = [{}]: {:?}", label.join(" "), o.arcs()),
            None => {
                without += 1;
                println!("beta = [{}]: none", label.join(" "));
            }
        }
    }
    println!("boundaries without a flow: {without}; Z3-connected: {}", is_z3_connected(k4.multigraph())?);

    // doubling one edge is enough for every boundary
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    edges.push((0, 1));
    let g = BorderedMultigraph::from_edges(4, &edges, &[0; 4])?;
    println!("K4 plus a parallel edge Z3-connected: {}", is_z3_connected(g.multigraph())?);
    Ok(())
}
