//! Seeded random quivers, and the cross-checks run on them.
//!
//! Sample `i` draws its shape from `i mod 10`: four in ten have neither
//! sources nor sinks, two in ten are acyclic, one is a disjoint union of
//! cycles and the rest are unconstrained. Multiplicities never exceed 2.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactmat::IntMatrix;
use crate::homology::{
    check_small_phidim_remark, classify_phidim_one, gldim, is_self_injective, phi_dim,
    phi_upper_bound, phidim_by_formula, GlobalDimension, TruncatedAlgebra,
};
use crate::quiver::Quiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    NoSourceNoSink,
    Acyclic,
    Cycles,
    General,
}

impl SampleKind {
    pub fn for_index(i: usize) -> Self {
        match i % 10 {
            0..=3 => SampleKind::NoSourceNoSink,
            4 | 5 => SampleKind::Acyclic,
            6 => SampleKind::Cycles,
            _ => SampleKind::General,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_vertices: usize,
    pub max_k: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: 0,
            samples: 500,
            max_vertices: 6,
            max_k: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub index: usize,
    pub kind: SampleKind,
    pub algebra: TruncatedAlgebra,
}

/// Same config, same corpus.
pub fn sample_corpus(config: &CorpusConfig) -> Vec<Sample> {
    let max_n = config.max_vertices.max(1);
    let max_k = config.max_k.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.samples)
        .map(|index| {
            let kind = SampleKind::for_index(index);
            let n = rng.gen_range(1..=max_n);
            let k = rng.gen_range(2..=max_k);
            let quiver = random_quiver(&mut rng, kind, n);
            let algebra = TruncatedAlgebra::new(quiver, k).expect("k >= 2");
            Sample {
                index,
                kind,
                algebra,
            }
        })
        .collect()
}

fn multiplicity<R: Rng>(rng: &mut R) -> u64 {
    if rng.gen_bool(0.25) {
        2
    } else {
        1
    }
}

pub fn random_quiver<R: Rng>(rng: &mut R, kind: SampleKind, n: usize) -> Quiver {
    let density = rng.gen_range(0.15..0.6);
    let mut mult = vec![0u64; n * n];
    match kind {
        SampleKind::General | SampleKind::NoSourceNoSink => {
            for m in mult.iter_mut() {
                if rng.gen_bool(density) {
                    *m = multiplicity(rng);
                }
            }
        }
        SampleKind::Acyclic => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density.max(0.3)) {
                        mult[order[a] * n + order[b]] = multiplicity(rng);
                    }
                }
            }
        }
        SampleKind::Cycles => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            for (i, &j) in perm.iter().enumerate() {
                mult[i * n + j] = 1;
            }
        }
    }
    let mut q = Quiver::numbered(n, mult).expect("square multiplicity table");
    if kind == SampleKind::NoSourceNoSink {
        // Feed every source and drain every sink, from/to a random vertex;
        // neither move creates a new source or sink.
        for v in 0..n {
            if q.in_degree(v) == 0 {
                let u = rng.gen_range(0..n);
                q.add_arrows(u, v, 1);
            }
            if q.out_degree(v) == 0 {
                let u = rng.gen_range(0..n);
                q.add_arrows(v, u, 1);
            }
        }
    }
    q
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub index: usize,
    pub k: usize,
    pub phidim: usize,
    pub failures: Vec<String>,
    pub quiver: String,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every structural identity that can be checked from one algebra.
pub fn cross_check(a: &TruncatedAlgebra) -> Vec<String> {
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };
    let phi = phi_dim(a);
    let phi_op = phi_dim(&a.opposite());
    expect(
        phi == phi_op,
        format!("opposite algebra: {phi} vs {phi_op}"),
    );

    let si = is_self_injective(a);
    expect(
        (phi == 0) == si,
        format!("phidim {phi} but self-injective = {si}"),
    );

    let bound = phi_upper_bound(a);
    expect(phi <= bound, format!("phidim {phi} exceeds bound {bound}"));

    if !si && !a.quiver().has_sources_or_sinks() {
        match phidim_by_formula(a) {
            Ok(f) => expect(
                f == phi,
                format!("closed formula gives {f}, phidim is {phi}"),
            ),
            Err(e) => expect(false, format!("closed formula failed: {e}")),
        }
    }

    let one = classify_phidim_one(a);
    expect(
        one == (phi == 1),
        format!("phidim-one classifier says {one}, phidim is {phi}"),
    );

    if let GlobalDimension::Finite(g) = gldim(a) {
        expect(
            g == phi,
            format!("finite gldim {g} differs from phidim {phi}"),
        );
    }

    let remark = check_small_phidim_remark(a);
    expect(
        remark.all_hold(),
        format!("small-phidim bullets violated: {remark:?}"),
    );

    let adj = a.quiver().adjacency();
    expect(
        adj.rank() == adj.rank_smith(),
        "adjacency rank disagrees with Smith rank".into(),
    );
    for s in 1..=a.vertex_count().min(6) as u64 {
        let p = adj.mat_pow(s).expect("square");
        let pt = adj.transpose().mat_pow(s).expect("square");
        expect(
            p.rank() == pt.rank(),
            format!("rank of A^{s} differs from rank of (A^T)^{s}"),
        );
    }
    failures
}

fn check_case(sample: &Sample) -> CaseReport {
    let a = &sample.algebra;
    CaseReport {
        index: sample.index,
        k: a.k(),
        phidim: phi_dim(a),
        failures: cross_check(a),
        quiver: a.quiver().to_string(),
    }
}

/// Runs [`cross_check`] on the whole corpus in parallel; reports come back
/// in index order.
pub fn run_checks(config: &CorpusConfig) -> Vec<CaseReport> {
    let corpus = sample_corpus(config);
    let mut reports: Vec<CaseReport> = corpus.par_iter().map(check_case).collect();
    reports.sort_by_key(|r| r.index);
    reports
}

/// Random integer matrix with entries in `[-bound, bound]`.
pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-bound..=bound).into())
}
