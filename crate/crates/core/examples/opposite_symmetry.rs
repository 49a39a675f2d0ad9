//! φdim(A) = φdim(A^op) on seeded random quivers.

use phidim::corpus::{sample_corpus, CorpusConfig};
use phidim::homology::phi_dim;

fn main() {
    let corpus = sample_corpus(&CorpusConfig {
        seed: 11,
        samples: 300,
        max_vertices: 6,
        max_k: 4,
    });
    let mut histogram = [0usize; 8];
    for s in &corpus {
        let phi = phi_dim(&s.algebra);
        assert_eq!(phi, phi_dim(&s.algebra.opposite()), "sample {}", s.index);
        histogram[phi.min(7)] += 1;
    }
    println!("{} samples, all symmetric", corpus.len());
    for (phi, count) in histogram.iter().enumerate().filter(|(_, c)| **c > 0) {
        println!("  φdim {phi}: {count}");
    }
}
