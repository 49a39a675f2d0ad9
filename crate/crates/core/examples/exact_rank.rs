//! Exact rank three ways: fraction-free elimination, Smith form and
//! rational elimination.

use phidim::{IntMatrix, RatMatrix};

fn main() {
    let m = IntMatrix::from_i64_rows(&[
        &[2, 4, 4, 1],
        &[-6, 6, 12, 0],
        &[10, -4, -16, 2],
        &[6, 6, 0, 3],
    ]);
    println!("M = {m}");
    println!("rank (Bareiss)   {}", m.rank());
    println!("rank (Smith)     {}", m.rank_smith());
    println!("rank (rational)  {}", m.to_rational().rank());
    println!(
        "Smith invariants {:?}",
        m.smith_invariants()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
    );
    println!("det              {}", m.determinant().unwrap());
    for s in 1..=4 {
        let a = m.mat_pow(s).unwrap().rank();
        let b = m.transpose().mat_pow(s).unwrap().rank();
        println!("rank M^{s} = {a}, rank (M^T)^{s} = {b}");
    }

    let r = RatMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]);
    println!("\n{r} has inverse {}", r.rat_inverse().unwrap());
}
