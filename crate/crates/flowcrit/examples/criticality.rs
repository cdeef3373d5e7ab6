//! Flow-criticality of the two standard examples, with the evidence.

use flowcrit::critical::{is_flow_critical_canvas, is_psi_critical};
use flowcrit::flow::{enumerate_tip_preflows, extend_preflow};
use flowcrit::graph::{BorderedMultigraph, Canvas, TipPreflow};

fn double_tip(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for v in 0..4 {
        edges.extend([(v, 4), (v, 4)]);
    }
    edges
}

fn main() -> flowcrit::Result<()> {
    let k4 = double_tip(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let c = Canvas::new(BorderedMultigraph::from_edges(5, &k4, &[1, 1, 2, 2, 0])?, 4)?;
    println!("K4 canvas: {}", is_flow_critical_canvas(&c).to_json());
    println!("census {}", c.census());

    let psi = TipPreflow::from_signs(&c, "+,+,+,+,-,-,-,-")?;
    println!("psi {} extends: {}", psi.to_signs(), extend_preflow(&c, &psi)?.is_some());
    println!("psi-critical: {}", is_psi_critical(&c, &psi)?.verdict);

    let m = double_tip(vec![(0, 1), (2, 3)]);
    let c = Canvas::new(BorderedMultigraph::from_edges(5, &m, &[0; 5])?, 4)?;
    println!("matching canvas: {}", is_flow_critical_canvas(&c).to_json());
    let stuck = enumerate_tip_preflows(&c).filter(|nv| extend_preflow(&c, &nv.to_preflow(&c)).ok().flatten().is_none());
    println!("non-extending preflow classes: {}", stuck.count());
    Ok(())
}
