//! Link-homology recognition of homology manifolds, spheres and disks.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

use super::{betti_numbers, relative_betti_numbers};

/// True iff `k` has the rational homology of `S^d`; `S^{-1}` is empty.
pub fn has_sphere_homology(k: &SimplicialComplex, d: isize) -> bool {
    if d < 0 {
        return k.vertex_count() == 0;
    }
    let b = betti_numbers(k);
    let d = d as usize;
    (0..b.len().max(d + 1)).all(|i| {
        let want = usize::from(i == 0) + usize::from(i == d);
        b.get(i).copied().unwrap_or(0) == want
    })
}

fn ghs(s: &SimplicialComplex, n: isize) -> bool {
    if s.dim() != n {
        return false;
    }
    s.all_simplices().iter().flatten().all(|sigma| {
        let link = s.link(sigma).expect("simplex of the complex");
        has_sphere_homology(&link, n - sigma.len() as isize)
    })
}

/// Generalized homology `n`-sphere: every `k`-simplex (including the
/// empty one) has a link with the homology of `S^{n-k-1}`.
pub fn is_ghs(s: &SimplicialComplex, n: isize) -> Result<bool> {
    if s.dim() != n {
        return Err(Error::DimensionMismatch { expected: n as i64, found: s.dim() as i64 });
    }
    Ok(ghs(s, n))
}

fn ghd(d: &SimplicialComplex, boundary: &[Vec<usize>], n: isize) -> bool {
    if d.vertex_count() == 0 || d.dim() != n {
        return false;
    }
    let bset: HashSet<Vec<usize>> = boundary
        .iter()
        .flat_map(|f| {
            (1u64..(1u64 << f.len())).map(move |m| {
                (0..f.len()).filter(|i| m >> i & 1 == 1).map(|i| f[i]).collect::<Vec<usize>>()
            })
        })
        .collect();
    for v in 0..d.vertex_count() {
        let link = d.link(&[v]).expect("vertex of the complex");
        if !bset.contains(&vec![v]) {
            if !ghs(&link, n - 1) {
                return false;
            }
            continue;
        }
        let to_d: Vec<usize> = link.labels().iter().map(|l| d.index_of(l).expect("link label")).collect();
        let link_boundary: Vec<Vec<usize>> = link
            .all_simplices()
            .iter()
            .flatten()
            .filter(|tau| {
                let mut s: Vec<usize> = tau.iter().map(|&i| to_d[i]).collect();
                s.push(v);
                s.sort_unstable();
                bset.contains(&s)
            })
            .cloned()
            .collect();
        if !ghd(&link, &link_boundary, n - 1) {
            return false;
        }
    }
    let b = relative_betti_numbers(d, &bset.into_iter().collect::<Vec<_>>());
    (0..b.len().max(n as usize + 1)).all(|i| b.get(i).copied().unwrap_or(0) == usize::from(i == n as usize))
}

/// Generalized homology `n`-disk `(D, ∂D)`: interior vertex links are
/// `GHS^{n-1}`, boundary vertex link pairs are `GHD^{n-1}`, and
/// `H_*(D, ∂D)` is ℚ in degree `n` only. `boundary` is matched by label.
pub fn is_ghd(d: &SimplicialComplex, boundary: &SimplicialComplex, n: isize) -> Result<bool> {
    if d.dim() != n {
        return Err(Error::DimensionMismatch { expected: n as i64, found: d.dim() as i64 });
    }
    let map = d.embedding_of(boundary)?;
    let faces: Vec<Vec<usize>> = boundary
        .facets()
        .iter()
        .map(|f| {
            let mut s: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    Ok(ghd(d, &faces, n))
}

/// Every simplex of dimension `n − i` with `1 <= i <= m` has a link that
/// is a `GHS^{i-1}`. The empty simplex participates once `m > n`.
pub fn spherical_links_codim(l: &SimplicialComplex, m: usize) -> Result<bool> {
    if !l.is_pure() {
        return Err(Error::NonPure("facets of different dimensions".into()));
    }
    let n = l.dim();
    for i in 1..=m as isize {
        let k = n - i;
        if k < -1 {
            break;
        }
        for sigma in l.simplices(k) {
            let link = l.link(sigma).expect("simplex of the complex");
            if !has_sphere_homology(&link, i - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pure, and every codimension-one simplex lies in exactly two facets.
pub fn is_pseudomanifold(l: &SimplicialComplex) -> Result<bool> {
    spherical_links_codim(l, 1)
}
