//! The octahedral local model: quadrants `Q_λ` of the coordinate
//! hyperplane arrangement in `R^n`, the sheets `P(l)` and the balls
//! `B(l)` in the boundary of the `n`-octahedron.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A function `{1..n} -> {−1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedFunction(Vec<i8>);

impl SignedFunction {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Precondition("a signed function needs n >= 1".into()));
        }
        if let Some(v) = values.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(Error::Precondition(format!("value {v} is not in {{-1, 0, 1}}")));
        }
        Ok(SignedFunction(values))
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of zero entries.
    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&v| v == 0).count()
    }

    /// Number of `−1` entries.
    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&v| v == -1).count()
    }

    /// Vertex labels `±e_j` spanning the simplex of `Q_λ` on the sphere.
    pub fn simplex_labels(&self) -> Vec<String> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(j, &v)| vertex_label(j, v))
            .collect()
    }

    /// All functions on `{1..n}`, lexicographic in `(−1, 0, +1)`.
    pub fn all(n: usize) -> Vec<SignedFunction> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out.into_iter().flat_map(|v: Vec<i8>| [-1i8, 0, 1].map(|x| [v.clone(), vec![x]].concat())).collect();
        }
        out.into_iter().map(SignedFunction).collect()
    }

    /// `Q_self ⊆ Q_other`: `other` agrees on the nonzero entries of `self`.
    pub fn face_of(&self, other: &SignedFunction) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || a == b)
    }
}

impl fmt::Display for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&v| match v {
            -1 => '-',
            0 => '0',
            _ => '+',
        }).collect();
        f.write_str(&s)
    }
}

fn vertex_label(j: usize, sign: i8) -> String {
    format!("{}e{}", if sign > 0 { '+' } else { '-' }, j + 1)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("the local model needs n >= 2, got {n}")));
    }
    Ok(())
}

fn check_l(n: usize, l: usize) -> Result<()> {
    check_n(n)?;
    if l >= n {
        return Err(Error::Precondition(format!("l must lie in 0..={}, got {l}", n - 1)));
    }
    Ok(())
}

fn complex_of(lambdas: impl Iterator<Item = SignedFunction>) -> SimplicialComplex {
    let sims: Vec<Vec<String>> = lambdas.map(|l| l.simplex_labels()).collect();
    SimplicialComplex::from_labeled(&sims).expect("labels are well formed")
}

/// The octahedral sphere `O^{n−1}` together with the signed functions
/// without zeros indexing its facets.
#[derive(Clone, Debug)]
pub struct OctahedronModel {
    pub complex: SimplicialComplex,
    pub facets: Vec<SignedFunction>,
}

pub fn octahedron_model(n: usize) -> Result<OctahedronModel> {
    check_n(n)?;
    let facets: Vec<SignedFunction> = SignedFunction::all(n).into_iter().filter(|l| l.zeros() == 0).collect();
    Ok(OctahedronModel { complex: complex_of(facets.iter().cloned()), facets })
}

/// The `(n−1)`-dimensional quadrants: signed functions with one zero.
pub fn quadrants(n: usize) -> Result<Vec<SignedFunction>> {
    check_n(n)?;
    Ok(SignedFunction::all(n).into_iter().filter(|l| l.zeros() == 1).collect())
}

/// `E(l)`: quadrants with exactly `l` negative entries.
pub fn sheet_quadrants(n: usize, l: usize) -> Result<Vec<SignedFunction>> {
    check_l(n, l)?;
    Ok(quadrants(n)?.into_iter().filter(|q| q.negatives() == l).collect())
}

/// `∂B(l)`: the `(n−2)`-simplices of `O^{n−1}` with `n(λ) = l`.
pub fn boundary_b(n: usize, l: usize) -> Result<SimplicialComplex> {
    Ok(complex_of(sheet_quadrants(n, l)?.into_iter()))
}

/// `B(l)`: the union of the facets of `O^{n−1}` with `n(λ) <= l`.
pub fn ball_b(n: usize, l: usize) -> Result<SimplicialComplex> {
    check_l(n, l)?;
    Ok(complex_of(octahedron_model(n)?.facets.into_iter().filter(|f| f.negatives() <= l)))
}

/// The sheet `P(l)`, realised as the cone with apex `o` (the origin)
/// over `∂B(l)`: one cone `Q_λ` per `λ ∈ E(l)`.
pub fn sheet(n: usize, l: usize) -> Result<SimplicialComplex> {
    let sims: Vec<Vec<String>> = sheet_quadrants(n, l)?
        .into_iter()
        .map(|q| {
            let mut s = q.simplex_labels();
            s.push("o".into());
            s
        })
        .collect();
    SimplicialComplex::from_labeled(&sims)
}

/// Sheets `P(l)` containing the cone `Q_μ`, found by enumerating the
/// quadrants that contain it.
pub fn sheets_containing(mu: &SignedFunction) -> Vec<usize> {
    let mut out: Vec<usize> = SignedFunction::all(mu.n())
        .into_iter()
        .filter(|q| q.zeros() == 1 && mu.face_of(q))
        .map(|q| q.negatives())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
