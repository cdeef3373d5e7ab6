//! Turns flow-critical graphs into tame canvases and prints the reports.

use flowcrit::critical::is_flow_critical_graph;
use flowcrit::enumerate::simple_graphs_up_to_iso;
use flowcrit::graph::{write_graph_file, BorderedMultigraph};
use flowcrit::reduce::{to_tame, Strictness};

fn main() -> flowcrit::Result<()> {
    let k4 = BorderedMultigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[0; 4])?;
    let r = to_tame(&k4, Strictness::Strict)?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    print!("{}", write_graph_file(r.canvas_graph.graph(), Some(r.canvas_graph.tip())));

    // every zero-boundary flow-critical graph on up to 7 vertices
    for n in 3..=7 {
        for g in simple_graphs_up_to_iso(n) {
            let g = BorderedMultigraph::with_zero_boundary(g);
            if !is_flow_critical_graph(&g).verdict {
                continue;
            }
            let r = to_tame(&g, Strictness::Strict)?;
            println!(
                "n = {n}, |E| = {}, deg z = {}, formulas hold: {}, preflow critical: {}",
                g.edge_count(),
                r.deg_z,
                r.edge_formula && r.deg_z_formula,
                r.psi_critical
            );
        }
    }
    Ok(())
}
