//! Face-counting invariants: f-vectors, h-vectors, flag vectors, and the
//! closed forms they must match for the braxtope family.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Binomial coefficient with the combinatorial convention: zero whenever
/// k < 0, k > n, or n < 0.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as u64
}

/// Face counts by dimension, f_0 upward. The empty face (f_{-1} = 1) is
/// implicit; for a polytope the improper top face is excluded, so a
/// d-polytope carries exactly d entries f_0 .. f_{d-1}. A simplicial
/// complex of dimension D carries D+1 entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// f_j, with f_{-1} = 1.
    pub fn f(&self, j: i64) -> u64 {
        if j == -1 {
            1
        } else {
            self.0.get(j as usize).copied().unwrap_or(0)
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Euler relation for the boundary of a d-polytope, d = number of
    /// entries: sum of (-1)^j f_j over 0 <= j < d equals 1 - (-1)^d.
    pub fn euler_ok(&self) -> bool {
        let d = self.0.len() as i64;
        let lhs: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 0 { *c as i64 } else { -(*c as i64) })
            .sum();
        lhs == 1 - if d % 2 == 0 { 1 } else { -1 }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// h-vector entries h_0 .. h_dim. Entries are signed: the transform below
/// can produce negative values on inputs that are not simplicial balls or
/// spheres, and reporting those honestly beats clamping them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i64>);

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Standard f-to-h transform for a simplicial complex whose maximal faces
/// have `dim` vertices: h_i = sum over 0 <= j <= i of
/// (-1)^{i-j} C(dim-j, dim-i) f_{j-1}. The boundary complex of a
/// simplicial d-polytope takes dim = d; a triangulation of the d-ball
/// takes dim = d+1. `f` must carry exactly `dim` entries.
pub fn h_from_f_simplicial(f: &FVector, dim: usize) -> HVector {
    assert_eq!(f.len(), dim, "f-vector has {} entries, transform needs {dim}", f.len());
    let d = dim as i64;
    let mut h = Vec::with_capacity(dim + 1);
    for i in 0..=d {
        let mut s = 0i64;
        for j in 0..=i {
            let term = binomial(d - j, d - i) as i64 * f.f(j - 1) as i64;
            s += if (i - j) % 2 == 0 { term } else { -term };
        }
        h.push(s);
    }
    HVector(h)
}

/// Flag counts of a d-polytope: for each set S of proper dimensions the
/// number of chains of faces with exactly those dimensions. The empty key
/// counts the empty chain, so it is always 1.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FlagVector(pub BTreeMap<Vec<u32>, u64>);

impl FlagVector {
    pub fn get(&self, dims: &[u32]) -> u64 {
        self.0.get(dims).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

/// Closed-form face counts of the braxtope Q^{d,n}:
/// f_j = C(d+1, j+1) + (n-d) (C(d-1, j) + C(d-2, j-1)).
pub fn braxtope_f_closed(d: u32, n: u32) -> FVector {
    let (di, ni) = (d as i64, n as i64);
    let counts = (0..di)
        .map(|j| {
            binomial(di + 1, j + 1)
                + (ni - di) as u64 * (binomial(di - 1, j) + binomial(di - 2, j - 1))
        })
        .collect();
    FVector(counts)
}

/// Closed-form h-vector of the braxtope Q^{d,n}:
/// (1, n-d+1, n-d+1, ..., n-d+1, 1) with d+1 entries.
pub fn braxtope_h_closed(d: u32, n: u32) -> HVector {
    let mid = (n - d + 1) as i64;
    let mut h = vec![mid; d as usize + 1];
    h[0] = 1;
    h[d as usize] = 1;
    HVector(h)
}
