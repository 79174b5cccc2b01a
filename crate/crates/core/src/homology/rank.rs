//! Rank of a sparse integer matrix over the rationals.
//!
//! Columns are reduced against earlier columns sharing the same lowest
//! nonzero row using fraction-free updates `c <- a*c - b*r`, then divided
//! by their content. Machine integers are tried first; on overflow the
//! whole reduction restarts with big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// A sparse column: `(row, value)` pairs sorted by row, no zero values.
pub type SparseColumn = Vec<(usize, i64)>;

/// Rank over ℚ of the matrix with the given columns.
pub fn rank(columns: &[SparseColumn]) -> usize {
    let small: Vec<Vec<(usize, i128)>> =
        columns.iter().map(|c| c.iter().map(|&(r, v)| (r, v as i128)).collect()).collect();
    if let Some(r) = reduce(small) {
        return r;
    }
    let big: Vec<Vec<(usize, BigInt)>> =
        columns.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
    reduce(big).expect("big-integer reduction cannot overflow")
}

fn reduce<T>(columns: Vec<Vec<(usize, T)>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        while let Some((low, _)) = col.last() {
            let Some(piv) = pivots.get(low) else { break };
            col = eliminate(&col, piv)?;
        }
        if let Some(&(low, _)) = col.last() {
            pivots.insert(low, col);
            rank += 1;
        }
    }
    Some(rank)
}

/// `a*c - b*r` with `a`, `b` the lowest entries of `r`, `c`; the lowest
/// entry cancels. The result is divided by the gcd of its entries.
fn eliminate<T>(c: &[(usize, T)], r: &[(usize, T)]) -> Option<Vec<(usize, T)>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let a = r.last()?.1.clone();
    let b = c.last()?.1.clone();
    let g = a.gcd(&b);
    let (a, b) = (a / g.clone(), b / g);
    let mut out = Vec::with_capacity(c.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < r.len() {
        let (row, val) = match (c.get(i), r.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, a.checked_mul(&x.1)?.checked_sub(&b.checked_mul(&y.1)?)?)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, a.checked_mul(&x.1)?)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, a.checked_mul(&x.1)?)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, T::zero().checked_sub(&b.checked_mul(&y.1)?)?)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    let content = out.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && content != T::one() {
        for (_, v) in out.iter_mut() {
            *v = v.clone() / content.clone();
        }
    }
    Some(out)
}
