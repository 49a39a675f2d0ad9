//! Every value from 0 up to the bound f_k(n) is realized on n vertices.

use phidim::families::a_family;
use phidim::homology::{f_k, phi_dim};

fn main() -> Result<(), phidim::Error> {
    for k in [3, 4] {
        for n in 2..=7 {
            let top = f_k(k, n)?;
            let values: Vec<usize> = (0..=top)
                .map(|l| a_family(n, k, l).map(|a| phi_dim(&a)))
                .collect::<Result<_, _>>()?;
            assert!(values.iter().enumerate().all(|(l, &v)| l == v));
            println!("k = {k}, n = {n}: realized {values:?}");
        }
    }
    Ok(())
}
