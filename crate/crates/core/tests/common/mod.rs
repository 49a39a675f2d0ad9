//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the crate's linear algebra or homology code: the
//! rank is plain Gaussian elimination over the rationals, global dimension
//! comes from walking projective resolutions, and φ of a module is found by
//! pushing each summand's class through the syzygy one step at a time.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use phidim::Quiver;

/// Rank by Gaussian elimination over `Q`.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for j in c..cols {
                    let d = &f * &m[rank][j];
                    m[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `counts[m][v][w]`: number of paths of length `m` from `v` to `w`.
pub fn path_counts(q: &Quiver, max: usize) -> Vec<Vec<Vec<BigInt>>> {
    let n = q.vertex_count();
    let mut counts = vec![(0..n)
        .map(|v| {
            (0..n)
                .map(|w| {
                    if v == w {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect::<Vec<Vec<BigInt>>>()];
    for m in 1..=max {
        let prev = &counts[m - 1];
        let next = (0..n)
            .map(|v| {
                (0..n)
                    .map(|w| {
                        (0..n)
                            .map(|u| &prev[v][u] * BigInt::from(q.arrows(u, w)))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        counts.push(next);
    }
    counts
}

fn starts_path(counts: &[Vec<Vec<BigInt>>], v: usize, len: usize) -> bool {
    counts[len][v].iter().any(|c| !c.is_zero())
}

/// Global dimension of `kQ/J^k` for acyclic `Q` by resolving every simple.
///
/// `N(v, j) = e_v A / e_v J^j` is projective exactly when no path of length
/// `j` leaves `v`; otherwise its syzygy is the sum of `N(w, k - j)` over the
/// paths of length `j` from `v` to `w`.
pub fn gldim_by_resolution(q: &Quiver, k: usize) -> usize {
    let n = q.vertex_count();
    let counts = path_counts(q, k);
    let mut memo = vec![vec![None; k + 1]; n];
    fn pd(
        v: usize,
        j: usize,
        k: usize,
        counts: &[Vec<Vec<BigInt>>],
        memo: &mut Vec<Vec<Option<usize>>>,
    ) -> usize {
        if let Some(d) = memo[v][j] {
            return d;
        }
        let d = if !starts_path(counts, v, j) {
            0
        } else {
            let n = counts[j].len();
            1 + (0..n)
                .filter(|&w| !counts[j][v][w].is_zero())
                .map(|w| pd(w, k - j, k, counts, memo))
                .max()
                .unwrap_or(0)
        };
        memo[v][j] = Some(d);
        d
    }
    (0..n)
        .map(|v| pd(v, 1, k, &counts, &mut memo))
        .max()
        .unwrap_or(0)
}

/// φ of `⊕ N(v, j)` over the given `(vertex, loewy length)` summands, with
/// `1 <= j < k`.
///
/// Classes live on all pairs `(v, j)`; projective ones are zero. The rank of
/// the span of the `i`-th syzygies of the summands never increases, so it
/// is settled after as many steps as there are pairs.
pub fn phi_by_iteration(q: &Quiver, k: usize, summands: &[(usize, usize)]) -> usize {
    let n = q.vertex_count();
    let counts = path_counts(q, k);
    let dim = n * (k - 1);
    let idx = |v: usize, j: usize| (j - 1) * n + v;
    let class = |v: usize, j: usize| {
        let mut x = vec![BigInt::zero(); dim];
        if starts_path(&counts, v, j) {
            x[idx(v, j)] = BigInt::one();
        }
        x
    };
    let omega = |x: &Vec<BigInt>| {
        let mut y = vec![BigInt::zero(); dim];
        for j in 1..k {
            for v in 0..n {
                let c = &x[idx(v, j)];
                if c.is_zero() {
                    continue;
                }
                for w in 0..n {
                    let p = &counts[j][v][w];
                    if !p.is_zero() && starts_path(&counts, w, k - j) {
                        y[idx(w, k - j)] += c * p;
                    }
                }
            }
        }
        y
    };
    let mut current: Vec<Vec<BigInt>> = summands.iter().map(|&(v, j)| class(v, j)).collect();
    let mut ranks = Vec::with_capacity(dim + 2);
    for _ in 0..=dim + 1 {
        ranks.push(rational_rank(&current));
        current = current.iter().map(omega).collect();
    }
    let last = *ranks.last().unwrap();
    ranks.iter().position(|&r| r == last).unwrap()
}

/// φ-dimension from [`phi_by_iteration`]: zero when every component is a
/// cycle or a bare vertex, otherwise one more than φ of all modules that
/// occur as syzygy summands.
pub fn phidim_by_iteration(q: &Quiver, k: usize) -> usize {
    let n = q.vertex_count();
    let comps_si = components(q).iter().all(|c| {
        let arrows: u64 = c
            .iter()
            .flat_map(|&a| c.iter().map(move |&b| (a, b)))
            .map(|(a, b)| q.arrows(a, b))
            .sum();
        let all_one = c.iter().all(|&v| {
            (0..n).map(|w| q.arrows(v, w)).sum::<u64>() == 1
                && (0..n).map(|w| q.arrows(w, v)).sum::<u64>() == 1
        });
        (c.len() == 1 && arrows == 0) || all_one
    });
    if comps_si {
        return 0;
    }
    let counts = path_counts(q, k);
    let mut summands = Vec::new();
    for j in 1..k {
        for w in 0..n {
            // N(w, j) is a syzygy summand when a path of length k - j ends at w
            if (0..n).any(|v| !counts[k - j][v][w].is_zero()) {
                summands.push((w, j));
            }
        }
    }
    1 + phi_by_iteration(q, k, &summands)
}

pub fn components(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if !seen[w] && (q.arrows(v, w) > 0 || q.arrows(w, v) > 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Longest path by depth-first search; `None` when there is an oriented cycle.
pub fn longest_path(q: &Quiver) -> Option<usize> {
    let n = q.vertex_count();
    fn visit(v: usize, q: &Quiver, state: &mut [u8], best: &mut [usize]) -> bool {
        state[v] = 1;
        let mut longest = 0;
        for w in 0..q.vertex_count() {
            if q.arrows(v, w) == 0 {
                continue;
            }
            let seen = state[w];
            if seen == 1 || (seen == 0 && !visit(w, q, state, best)) {
                return false;
            }
            longest = longest.max(best[w] + 1);
        }
        best[v] = longest;
        state[v] = 2;
        true
    }
    let mut state = vec![0u8; n];
    let mut best = vec![0usize; n];
    for v in 0..n {
        if state[v] == 0 && !visit(v, q, &mut state, &mut best) {
            return None;
        }
    }
    best.into_iter().max().or(Some(0))
}
