//! The quivers Γ^m: radical square zero gives m - 1, higher truncations
//! follow f_k.

use phidim::families::gamma_quiver;
use phidim::homology::{f_k, phi_dim};
use phidim::TruncatedAlgebra;

fn main() {
    let n = 6;
    println!("Γ^m on {n} vertices");
    println!("{:>3} {:>6} {:>6} {:>6}", "m", "k=2", "k=3", "k=4");
    for m in 2..=n {
        let q = gamma_quiver(n, m).expect("1 <= m <= n");
        let row: Vec<usize> = (2..=4)
            .map(|k| phi_dim(&TruncatedAlgebra::new(q.clone(), k).unwrap()))
            .collect();
        for (k, &phi) in (2..=4).zip(&row) {
            assert_eq!(phi, f_k(k, m - 1).unwrap());
        }
        println!("{m:>3} {:>6} {:>6} {:>6}", row[0], row[1], row[2]);
    }
    println!();
    print!("{}", gamma_quiver(4, 3).unwrap());
}
