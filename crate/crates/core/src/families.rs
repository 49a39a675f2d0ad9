//! Named quivers and algebras: oriented cycles, the `Γ^m` quivers, the
//! family realizing every φ-dimension up to the bound, and a maximal
//! example with a source and a sink.

use std::fmt;

use crate::constructor::{construct_maximal, ConstructionInput};
use crate::homology::{f_k, TruncatedAlgebra};
use crate::quiver::Quiver;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `C^n` truncated at `J^k`.
    Cycle {
        n: usize,
        k: usize,
    },
    /// `Γ^m` on `n` vertices truncated at `J^k`.
    Gamma {
        n: usize,
        m: usize,
        k: usize,
    },
    AFamily {
        n: usize,
        k: usize,
        l: usize,
    },
    SourceSinkMaximal {
        n: usize,
        m: usize,
        i0: usize,
    },
}

impl FamilySpec {
    /// Parses a CLI family name and its comma-separated
    /// parameters: `cycle n[,k]`, `gamma n,m[,k]`, `afamily n,k,l`,
    /// `s5 n,m,i0`. Missing `k` defaults to 2.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self, Error> {
        let arity = |lo: usize, hi: usize| {
            if (lo..=hi).contains(&params.len()) {
                Ok(())
            } else if lo == hi {
                Err(Error::Domain(format!(
                    "family {name} takes {lo} parameters, got {}",
                    params.len()
                )))
            } else {
                Err(Error::Domain(format!(
                    "family {name} takes {lo} or {hi} parameters, got {}",
                    params.len()
                )))
            }
        };
        let k_or_2 = |i: usize| params.get(i).copied().unwrap_or(2);
        match name {
            "cycle" => {
                arity(1, 2)?;
                Ok(FamilySpec::Cycle {
                    n: params[0],
                    k: k_or_2(1),
                })
            }
            "gamma" => {
                arity(2, 3)?;
                Ok(FamilySpec::Gamma {
                    n: params[0],
                    m: params[1],
                    k: k_or_2(2),
                })
            }
            "afamily" => {
                arity(3, 3)?;
                Ok(FamilySpec::AFamily {
                    n: params[0],
                    k: params[1],
                    l: params[2],
                })
            }
            "s5" => {
                arity(3, 3)?;
                Ok(FamilySpec::SourceSinkMaximal {
                    n: params[0],
                    m: params[1],
                    i0: params[2],
                })
            }
            other => Err(Error::Domain(format!(
                "unknown family {other:?} (expected cycle, gamma, afamily or s5)"
            ))),
        }
    }

    pub fn build(&self) -> Result<TruncatedAlgebra, Error> {
        match *self {
            FamilySpec::Cycle { n, k } => TruncatedAlgebra::new(cycle_quiver(n)?, k),
            FamilySpec::Gamma { n, m, k } => TruncatedAlgebra::new(gamma_quiver(n, m)?, k),
            FamilySpec::AFamily { n, k, l } => a_family(n, k, l),
            FamilySpec::SourceSinkMaximal { n, m, i0 } => source_sink_maximal_example(n, m, i0),
        }
    }

    /// φ-dimension the family is known to have.
    pub fn expected_phidim(&self) -> Result<usize, Error> {
        match *self {
            FamilySpec::Cycle { .. } => Ok(0),
            FamilySpec::Gamma { m, k, .. } => f_k(k, m - 1),
            FamilySpec::AFamily { l, .. } => Ok(l),
            FamilySpec::SourceSinkMaximal { .. } => Ok(3),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { n, k } => write!(f, "cycle n={n} k={k}"),
            FamilySpec::Gamma { n, m, k } => write!(f, "gamma n={n} m={m} k={k}"),
            FamilySpec::AFamily { n, k, l } => write!(f, "afamily n={n} k={k} l={l}"),
            FamilySpec::SourceSinkMaximal { n, m, i0 } => write!(f, "s5 n={n} m={m} i0={i0}"),
        }
    }
}

/// Oriented cycle `1 -> 2 -> ... -> n -> 1`; `C^1` is a single loop.
pub fn cycle_quiver(n: usize) -> Result<Quiver, Error> {
    if n == 0 {
        return Err(Error::Domain("cycle needs at least one vertex".into()));
    }
    let arrows: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Quiver::from_arrows(n, &arrows))
}

/// `Γ^m` on `n` vertices: a loop at 1, the chain `1 -> ... -> m`, a loop at
/// `m`, and for every `j > m` a loop at `j` with an arrow `j -> m`.
pub fn gamma_quiver(n: usize, m: usize) -> Result<Quiver, Error> {
    if m == 0 || m > n {
        return Err(Error::Domain(format!(
            "gamma needs 1 <= m <= n, got n={n} m={m}"
        )));
    }
    let mut arrows = vec![(0, 0)];
    arrows.extend((1..m).map(|i| (i - 1, i)));
    if m >= 2 {
        arrows.push((m - 1, m - 1));
    }
    for j in m..n {
        arrows.push((j, j));
        arrows.push((j, m - 1));
    }
    Ok(Quiver::from_arrows(n, &arrows))
}

/// Algebra on `n` vertices with φ-dimension exactly `l` at `J^k`.
///
/// `l = 0` is the cycle, `l = f_k(n)` the constructor's maximal quiver,
/// `l = 1` is `Γ^2`; otherwise `Γ^{l'+1}` with `l' = k(l-2)/2 + 2` for even
/// `l` and `l' = k(l-3)/2 + 3` for odd `l`. Since `Γ^m` has value `m - 1` at
/// `J^2`, these give `f_k(l') = l`.
pub fn a_family(n: usize, k: usize, l: usize) -> Result<TruncatedAlgebra, Error> {
    if k < 3 {
        return Err(Error::Domain(format!("family needs k >= 3, got {k}")));
    }
    if n < 2 {
        return Err(Error::Domain(format!("family needs n >= 2, got {n}")));
    }
    let top = f_k(k, n)?;
    if l > top {
        return Err(Error::Domain(format!(
            "l = {l} exceeds the bound f_k(n) = {top} for n={n} k={k}"
        )));
    }
    let quiver = if l == 0 {
        cycle_quiver(n)?
    } else if l == top {
        construct_maximal(&ConstructionInput::uniform(n))?.quiver
    } else if l == 1 {
        gamma_quiver(n, 2)?
    } else {
        let l_prime = if l.is_multiple_of(2) {
            k * (l - 2) / 2 + 2
        } else {
            k * (l - 3) / 2 + 3
        };
        if l_prime + 1 > n {
            return Err(Error::Domain(format!(
                "l = {l} needs Γ^{} but only n = {n} vertices are available",
                l_prime + 1
            )));
        }
        gamma_quiver(n, l_prime + 1)?
    };
    TruncatedAlgebra::new(quiver, k)
}

/// Maximal-φ-dimension algebra `kQ/J^n` whose quiver has a source and a
/// sink, with `Γ` the constructor's quiver on `m` vertices glued into a
/// chain `w_1 -> ... -> w_{n-m+1}` at `w_{i0}` (1-based).
pub fn source_sink_maximal_example(
    n: usize,
    m: usize,
    i0: usize,
) -> Result<TruncatedAlgebra, Error> {
    source_sink_maximal_glued(n, m, i0, 0)
}

/// As [`source_sink_maximal_example`], choosing which vertex of `Γ`
/// (0-based) plays `w_{i0}`.
pub fn source_sink_maximal_glued(
    n: usize,
    m: usize,
    i0: usize,
    glue: usize,
) -> Result<TruncatedAlgebra, Error> {
    if m < 3 {
        return Err(Error::Domain(format!("needs m >= 3, got {m}")));
    }
    if n <= m {
        return Err(Error::Domain(format!("needs n > m, got n={n} m={m}")));
    }
    let chain = n - m + 1;
    if !(1 < i0 && i0 < chain) {
        return Err(Error::Domain(format!("needs 1 < i0 < {chain}, got {i0}")));
    }
    if glue >= m {
        return Err(Error::Domain(format!(
            "glue vertex {glue} is not in Γ (m={m})"
        )));
    }
    let gamma = construct_maximal(&ConstructionInput::uniform(m))?.quiver;
    let mut names: Vec<String> = (1..=m).map(|i| format!("v{i}")).collect();
    let mut chain_index = Vec::with_capacity(chain);
    for i in 1..=chain {
        if i == i0 {
            chain_index.push(glue);
        } else {
            chain_index.push(names.len());
            names.push(format!("w{i}"));
        }
    }
    let size = names.len();
    let mut q = Quiver::new(names, vec![0; size * size])?;
    for a in 0..m {
        for b in 0..m {
            q.add_arrows(a, b, gamma.arrows(a, b));
        }
    }
    for pair in chain_index.windows(2) {
        q.add_arrows(pair[0], pair[1], 1);
    }
    TruncatedAlgebra::new(q, n)
}
