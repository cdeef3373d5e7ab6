//! Runs every corpus claim on 𝒢₇ and prints the results as JSON, then the
//! density check on small graphs.

use flowcrit::generate::generate_gk;
use flowcrit::verify::{verify, verify_density, Claim};

fn main() -> flowcrit::Result<()> {
    let corpus = generate_gk(7, 6)?;
    for claim in Claim::ALL {
        if claim == Claim::Density {
            continue;
        }
        let r = verify(claim, &corpus)?;
        let status = match (r.passed(), r.conjecture) {
            (true, _) => "holds",
            (false, true) => "counterexamples",
            (false, false) => "VIOLATED",
        };
        println!("{:<16} {status:<16} checked {:>4}, violations {}", claim.id(), r.checked, r.violations.len());
        if claim == Claim::ConjFewlarge {
            println!("{}", serde_json::to_string_pretty(&r.stats["per_deg_z"]).unwrap());
        }
    }
    let d = verify_density(6, false)?;
    println!("density (all boundaries, n <= 6): {}", d.to_json());
    Ok(())
}
