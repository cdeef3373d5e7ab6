//! Generates 𝒢ₖ by closure, checks it against brute force and prints the
//! census distribution.
//!
//! `cargo run --release --example generate_classes -- 7 6`

use std::collections::BTreeMap;
use std::time::Instant;

use flowcrit::generate::{brute_force_enumerate, generate_gk};

fn main() -> flowcrit::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, n) = (args.first().copied().unwrap_or(6), args.get(1).copied().unwrap_or(6));

    let t = Instant::now();
    let gen = generate_gk(k, n)?;
    println!("generated {} members of G{k} with at most {n} vertices in {:.2?}", gen.len(), t.elapsed());

    let t = Instant::now();
    let brute = brute_force_enumerate(k, n)?;
    let same = gen.iter().map(|e| &e.code).eq(brute.iter().map(|e| &e.code));
    println!("brute force: {} members in {:.2?}, same set: {same}", brute.len(), t.elapsed());

    let mut table: BTreeMap<(usize, usize, String), usize> = BTreeMap::new();
    for e in &gen {
        *table.entry((e.vertex_count(), e.tip_degree(), e.census().to_string())).or_default() += 1;
    }
    println!("  n  deg z census           count");
    for ((n, d, c), count) in table {
        println!("{n:>3} {d:>6} {c:<16} {count}");
    }
    Ok(())
}
