//! Reads a quiver file and prints φdim and gldim for a range of k.
//!
//!     cargo run --example compute_phidim -- data/gamma2.quiver 5

use std::env;
use std::fs;

use phidim::homology::{gldim, phi_dim_with_report, phi_upper_bound};
use phidim::{Quiver, TruncatedAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "data/gamma2.quiver".into());
    let max_k: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let q = Quiver::parse(&fs::read_to_string(&path)?)?;
    println!(
        "{path}: {} vertices, {} arrows",
        q.vertex_count(),
        q.arrow_count()
    );
    println!(
        "{:>3} {:>7} {:>9} {:>6}  ranks",
        "k", "phidim", "gldim", "bound"
    );
    for k in 2..=max_k {
        let a = TruncatedAlgebra::new(q.clone(), k)?;
        let (phi, report) = phi_dim_with_report(&a);
        println!(
            "{k:>3} {phi:>7} {:>9} {:>6}  {:?}",
            gldim(&a).to_string(),
            phi_upper_bound(&a),
            report.rank_sequence
        );
    }
    Ok(())
}
