//! Decides φdim = 1 from the quiver alone and compares with the direct
//! computation.

use phidim::homology::{phi_dim, phidim_one_verdict};
use phidim::{Quiver, TruncatedAlgebra};

fn main() {
    let cases = [
        ("one arrow", "vertices: 1 2\narrow 1 2\n", 5),
        (
            "two loops and an arrow",
            "vertices: a b\narrow a a\narrow a b\narrow b b\n",
            2,
        ),
        (
            "3-cycle",
            "vertices: 1 2 3\narrow 1 2\narrow 2 3\narrow 3 1\n",
            3,
        ),
        (
            "line of three",
            "vertices: 1 2 3\narrow 1 2\narrow 2 3\n",
            2,
        ),
        (
            "loop feeding a line",
            "vertices: a b c\narrow a a\narrow a b\narrow b c\n",
            3,
        ),
    ];
    for (name, text, k) in cases {
        let a = TruncatedAlgebra::new(Quiver::parse(text).unwrap(), k).unwrap();
        let v = phidim_one_verdict(&a);
        let phi = phi_dim(&a);
        assert_eq!(v.holds, phi == 1);
        println!(
            "{name:<24} k={k}  φdim {phi}  one: {:<5} ({})",
            v.holds, v.reason
        );
    }
}
