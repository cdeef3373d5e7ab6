//! Easel classes 𝒢ₖ,ᵣ: generation, the nesting check, and the census pairs.

use std::collections::BTreeSet;

use flowcrit::generate::{brute_force_easels, generate_gkr_with, GenOptions};
use flowcrit::verify::c_prime_k0;

fn main() -> flowcrit::Result<()> {
    let opts = GenOptions { check_depth: true, ..GenOptions::default() };
    for (k, r, n) in [(7, 0, 5), (7, 1, 5), (6, 1, 6)] {
        let gen = generate_gkr_with(k, r, n, &opts)?;
        let brute = brute_force_easels(k, r, n)?;
        let same = gen.entries.iter().map(|e| &e.code).eq(brute.iter().map(|e| &e.code));
        println!(
            "G{k},{r} (n <= {n}): {} easels, brute force agrees: {same}, stable under deeper nesting: {:?}",
            gen.entries.len(),
            gen.depth_stable
        );
        if r == 0 {
            let pairs: BTreeSet<(usize, String)> =
                gen.entries.iter().map(|e| (e.tip_degree(), e.census().to_string())).collect();
            println!("  (deg z, census) pairs: {pairs:?}");
            println!("  allowed: {:?}", c_prime_k0(k));
        }
    }
    Ok(())
}
