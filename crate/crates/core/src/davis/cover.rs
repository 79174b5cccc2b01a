use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::simplicial::FlagComplex;

use super::cubical::{Cell, CubicalComplex};

/// Environment variable overriding the vertex limit for commutator covers.
pub const COVER_LIMIT_VAR: &str = "RACG_MAX_COVER_VERTICES";
const DEFAULT_COVER_LIMIT: usize = 22;

fn cover_limit() -> usize {
    std::env::var(COVER_LIMIT_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_COVER_LIMIT).min(63)
}

/// Label of a face of `[−1,1]^p`: `*` free, `+`/`-` fixed.
fn sign_label(p: usize, free: u64, sign: u64) -> String {
    (0..p)
        .map(|i| if free >> i & 1 == 1 { '*' } else if sign >> i & 1 == 1 { '+' } else { '-' })
        .collect()
}

/// The commutator cover `P_L ⊂ [−1,1]^{S₀(L)}`: the faces whose free
/// coordinates span a simplex of `L`. Cells are keyed by (free mask,
/// sign mask); a set sign bit means coordinate `+1`.
pub fn commutator_cover(l: &FlagComplex) -> Result<CubicalComplex> {
    let p = l.vertex_count();
    let limit = cover_limit();
    if p > limit {
        return Err(Error::ResourceLimit(format!(
            "commutator cover needs 2^{p} vertices; limit is {limit} generators (set {COVER_LIMIT_VAR})"
        )));
    }
    let mut keys: Vec<(u64, u64)> = Vec::new();
    for level in l.all_simplices() {
        for sigma in level {
            let free: u64 = sigma.iter().fold(0, |m, &v| m | 1 << v);
            let fixed: Vec<usize> = (0..p).filter(|i| free >> i & 1 == 0).collect();
            for bits in 0u64..1 << fixed.len() {
                let sign = fixed.iter().enumerate().fold(0u64, |m, (j, &i)| m | ((bits >> j & 1) << i));
                keys.push((free, sign));
            }
        }
    }
    let id: HashMap<(u64, u64), usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let cells = keys
        .iter()
        .map(|&(free, sign)| {
            let coords: Vec<usize> = (0..p).filter(|i| free >> i & 1 == 1).collect();
            let mut faces = Vec::with_capacity(2 * coords.len());
            for (i, &c) in coords.iter().enumerate() {
                let s = if i % 2 == 0 { 1 } else { -1 };
                let f = free & !(1 << c);
                faces.push((id[&(f, sign | 1 << c)], s));
                faces.push((id[&(f, sign)], -s));
            }
            let mut vertices: Vec<usize> = (0u64..1 << coords.len())
                .map(|bits| {
                    let extra = coords.iter().enumerate().fold(0u64, |m, (j, &c)| m | ((bits >> j & 1) << c));
                    id[&(0, sign | extra)]
                })
                .collect();
            vertices.sort_unstable();
            Cell { label: sign_label(p, free, sign), dim: coords.len(), faces, vertices }
        })
        .collect();
    Ok(CubicalComplex::from_cells(cells))
}

/// Both sides of `χ(P_L) = 2^p κ(L)`.
#[derive(Clone, Debug, Serialize)]
pub struct ChiReport {
    pub generators: usize,
    pub chi_cover: i64,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub kappa: Q,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub scaled_kappa: Q,
    pub consistent: bool,
}

/// Euler characteristic of `P_L` against `2^p κ(L)`.
pub fn chi_orb_consistency(l: &FlagComplex) -> Result<ChiReport> {
    let cover = commutator_cover(l)?;
    let p = l.vertex_count();
    let kappa = l.kappa();
    let scaled = &kappa * Q::from_integer(num_bigint::BigInt::from(1u64) << p);
    let chi = cover.euler_characteristic();
    Ok(ChiReport {
        generators: p,
        chi_cover: chi,
        consistent: scaled == Q::from_integer(chi.into()),
        kappa,
        scaled_kappa: scaled,
    })
}
