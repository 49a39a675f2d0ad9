//! Without sources or sinks, the value at J^k is f_k of the value at J^2.

use phidim::families::gamma_quiver;
use phidim::homology::{f_k, phi_dim, phidim_by_formula};
use phidim::TruncatedAlgebra;

fn main() {
    let q = gamma_quiver(7, 7).unwrap();
    let d2 = phi_dim(&TruncatedAlgebra::new(q.clone(), 2).unwrap());
    println!("value at J^2: {d2}");
    for k in 2..=8 {
        let a = TruncatedAlgebra::new(q.clone(), k).unwrap();
        let phi = phi_dim(&a);
        assert_eq!(phidim_by_formula(&a).unwrap(), phi);
        println!(
            "k = {k}: φdim {phi} = f_{k}({d2}) = {}",
            f_k(k, d2).unwrap()
        );
    }
}
