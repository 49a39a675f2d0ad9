//! Builds radical-square-zero algebras whose φ-dimension equals the number
//! of vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use phidim::constructor::{construct_maximal, ConstructionInput};

fn main() -> Result<(), phidim::Error> {
    for n in 2..=5 {
        let r = construct_maximal(&ConstructionInput::uniform(n))?;
        println!(
            "n = {n}: λ = {}, scale = {}, {} arrows, φdim = {}",
            r.lambda,
            r.scale_m,
            r.quiver.arrow_count(),
            r.achieved_phidim
        );
    }

    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut input = ConstructionInput::new(
        vec![q(1, 1), q(2, 1), q(1, 1)],
        vec![q(1, 4), q(1, 8), q(1, 2)],
    );
    input.strict_positive = true;
    let r = construct_maximal(&input)?;
    println!("\nv = (1, 2, 1), w = (1/4, 1/8, 1/2), every entry positive:");
    println!("adjacency {}", r.quiver.adjacency());
    println!("conjugator {}", r.conjugator);
    Ok(())
}
