use std::fmt;

use num_traits::Zero;

use crate::rational::{neg_half_pow, Q};

/// Face counts `f_{-1}, f_0, ..., f_dim`. Index 0 holds `f_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Builds from counts starting at `f_{-1}`; trailing zeros are dropped.
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(1);
        }
        FVector(counts)
    }

    /// `f_k` for `k >= -1`; zero past the top dimension.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Largest `k` with `f_k > 0`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    /// Reduced-free Euler characteristic `sum_{k>=0} (-1)^k f_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .skip(1)
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// `sum_{k>=-1} (-1/2)^{k+1} f_k`.
    pub fn kappa(&self) -> Q {
        self.0
            .iter()
            .enumerate()
            .fold(Q::zero(), |acc, (i, &f)| acc + neg_half_pow(i) * Q::from_integer(f.into()))
    }

    /// f-vector of a join: `f_k = sum_{i+j=k-1} f_i f_j`.
    pub fn join(&self, other: &FVector) -> FVector {
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FVector::new(out)
    }

    /// f-vector of a cone.
    pub fn cone(&self) -> FVector {
        self.join(&FVector(vec![1, 1]))
    }

    /// f-vector of a suspension.
    pub fn suspension(&self) -> FVector {
        self.join(&FVector(vec![1, 2]))
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
