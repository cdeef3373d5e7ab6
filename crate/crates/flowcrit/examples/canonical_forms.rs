//! Canonical codes: relabelling with the tip fixed does not change them,
//! and moving the tip does.

use flowcrit::graph::{BorderedMultigraph, Canvas};

fn main() -> flowcrit::Result<()> {
    let edges = [(0, 1), (2, 3), (0, 4), (0, 4), (1, 4), (1, 4), (2, 4), (2, 4), (3, 4), (3, 4)];
    let c = Canvas::new(BorderedMultigraph::from_edges(5, &edges, &[0; 5])?, 4)?;
    let code = c.canonical_code()?;
    println!("code {code}");

    // swap the two matched pairs
    let mirror = c.relabel(&[2, 3, 0, 1, 4]);
    println!("mirror {} equal: {}", mirror.canonical_code()?, mirror.canonical_code()? == code);

    let moved = Canvas::new(c.graph().clone(), 0)?;
    println!("tip at 0: {} equal: {}", moved.canonical_code()?, moved.canonical_code()? == code);

    let back = code.to_canvas()?;
    println!("decoded: {} vertices, tip {}, {} edges", back.vertex_count(), back.tip(), back.edge_count());
    Ok(())
}
