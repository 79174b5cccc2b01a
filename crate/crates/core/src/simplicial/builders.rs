//! Standard small complexes.

use super::FlagComplex;
use crate::error::{Error, Result};

fn named(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// The m-gon (cycle on `m >= 3` vertices). Only `m >= 4` is flag as a
/// triangle-free cycle; `m = 3` yields the full 2-simplex.
pub fn polygon(m: usize) -> FlagComplex {
    assert!(m >= 3, "polygon needs at least 3 vertices");
    FlagComplex::from_indexed(named("v", m), (0..m).map(|i| (i, (i + 1) % m)))
}

/// `k` isolated points.
pub fn points(k: usize) -> FlagComplex {
    FlagComplex::from_indexed(named("p", k), [])
}

/// Path with `k` vertices.
pub fn path(k: usize) -> FlagComplex {
    FlagComplex::from_indexed(named("v", k), (1..k).map(|i| (i - 1, i)))
}

/// The full `k`-simplex (`k + 1` vertices); `k = -1` is empty.
pub fn simplex(k: isize) -> FlagComplex {
    let n = (k + 1).max(0) as usize;
    FlagComplex::from_indexed(
        named("s", n),
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
    )
}

/// Boundary of the `n`-dimensional cross-polytope: the `n`-fold join of
/// 0-spheres. Vertices `x{i}+` and `x{i}-` for `i` in `1..=n`.
pub fn cross_polytope(n: usize) -> FlagComplex {
    let labels: Vec<String> = (1..=n).flat_map(|i| [format!("x{i}+"), format!("x{i}-")]).collect();
    let mut edges = Vec::new();
    for a in 0..2 * n {
        for b in a + 1..2 * n {
            if a / 2 != b / 2 {
                edges.push((a, b));
            }
        }
    }
    FlagComplex::from_indexed(labels, edges)
}

/// Boundary of the octahedron.
pub fn octahedron() -> FlagComplex {
    cross_polytope(3)
}

/// Boundary of the icosahedron: a pole, two pentagonal rings, a pole.
pub fn icosahedron() -> FlagComplex {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (low, low_next), (11, low), (up, low), (up_next, low)]);
    }
    FlagComplex::from_indexed(named("i", 12), edges)
}

/// Complete bipartite graph `K_{m,n}` with sides `a*` and `b*`.
pub fn complete_bipartite(m: usize, n: usize) -> FlagComplex {
    let labels: Vec<String> = named("a", m).into_iter().chain(named("b", n)).collect();
    FlagComplex::from_indexed(labels, (0..m).flat_map(|a| (0..n).map(move |b| (a, m + b))))
}

/// Subdivides the edge `{a, b}` by a new vertex `label` joined to `a`,
/// `b` and the link of the edge.
pub fn subdivide_edge(l: &FlagComplex, a: &str, b: &str, label: &str) -> Result<FlagComplex> {
    let (x, y) = (l.vertex(a)?, l.vertex(b)?);
    if !l.is_adjacent(x, y) {
        return Err(Error::NotASimplex(format!("{{{a}, {b}}}")));
    }
    if l.index_of(label).is_some() {
        return Err(Error::Precondition(format!("label {label} already used")));
    }
    let m = l.vertex_count();
    let mut labels = l.labels().to_vec();
    labels.push(label.to_string());
    let mut edges: Vec<(usize, usize)> = l.edges().into_iter().filter(|&e| e != (x.min(y), x.max(y))).collect();
    edges.extend([(x, m), (y, m)]);
    edges.extend(l.link_vertices(&[x.min(y), x.max(y)])?.into_iter().map(|v| (v, m)));
    Ok(FlagComplex::from_indexed(labels, edges))
}
