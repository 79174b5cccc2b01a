use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

use super::rank::{rank, SparseColumn};

/// A finite chain complex of free ℚ-modules with integer boundaries.
///
/// `boundaries[k]` is the matrix of `∂_k : C_k -> C_{k-1}` stored by
/// columns (one column per `k`-cell); `boundaries[0]` is empty.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    sizes: Vec<usize>,
    boundaries: Vec<Vec<SparseColumn>>,
}

impl ChainComplex {
    /// Validates shapes and `∂∘∂ = 0`.
    pub fn new(sizes: Vec<usize>, boundaries: Vec<Vec<SparseColumn>>) -> Result<Self> {
        if boundaries.len() != sizes.len() {
            return Err(Error::Precondition("one boundary matrix per degree required".into()));
        }
        for (k, cols) in boundaries.iter().enumerate() {
            if cols.len() != if k == 0 { 0 } else { sizes[k] } {
                return Err(Error::Precondition(format!("boundary {k} has the wrong number of columns")));
            }
            for col in cols {
                if k == 0 || col.iter().any(|&(r, _)| r >= sizes[k - 1]) || !col.windows(2).all(|w| w[0].0 < w[1].0)
                {
                    return Err(Error::Precondition(format!("malformed column in boundary {k}")));
                }
            }
        }
        let cc = ChainComplex { sizes, boundaries };
        cc.assert_square_zero()?;
        Ok(cc)
    }

    fn assert_square_zero(&self) -> Result<()> {
        for k in 2..self.sizes.len() {
            for (j, col) in self.boundaries[k].iter().enumerate() {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(r, v) in col {
                    for &(rr, w) in &self.boundaries[k - 1][r] {
                        *acc.entry(rr).or_insert(0) += v * w;
                    }
                }
                if acc.values().any(|&x| x != 0) {
                    return Err(Error::Precondition(format!(
                        "boundary of boundary is nonzero at cell {j} of degree {k}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Simplicial chains of `k` modulo the simplices of `sub` (given as
    /// index simplices of `k`). Simplices are oriented by sorted vertex
    /// order.
    pub fn simplicial(k: &SimplicialComplex, sub: &[Vec<usize>]) -> Self {
        let drop: std::collections::HashSet<&[usize]> = sub.iter().map(Vec::as_slice).collect();
        let levels = k.all_simplices();
        let cells: Vec<Vec<&Vec<usize>>> = levels
            .iter()
            .skip(1)
            .map(|l| l.iter().filter(|s| !drop.contains(s.as_slice())).collect())
            .collect();
        let index: Vec<HashMap<&[usize], usize>> = cells
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect())
            .collect();
        let mut boundaries = if cells.is_empty() { Vec::new() } else { vec![Vec::new()] };
        for d in 1..cells.len() {
            let cols = cells[d]
                .iter()
                .map(|s| {
                    let mut col: SparseColumn = (0..s.len())
                        .filter_map(|i| {
                            let mut face = (*s).clone();
                            face.remove(i);
                            index[d - 1]
                                .get(face.as_slice())
                                .map(|&r| (r, if i % 2 == 0 { 1 } else { -1 }))
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            boundaries.push(cols);
        }
        let sizes = cells.iter().map(Vec::len).collect();
        ChainComplex::new(sizes, boundaries).expect("simplicial boundary is a chain complex")
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Ranks of homology over ℚ, one per degree.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| rank(b)).collect();
        (0..self.sizes.len())
            .map(|k| self.sizes[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    /// `Σ (−1)^k dim C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.sizes.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }
}
