//! Homology-ball recognition with a greedy collapse certificate.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::simplicial::SimplicialComplex;

use super::betti_numbers;

/// How strongly a complex was recognised as a ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BallVerdict {
    /// Acyclic, connected, and greedily collapsible to a vertex.
    Collapsible,
    /// Homology of a point, but the greedy collapse got stuck.
    HomologyOnly,
    /// Not connected or not acyclic.
    NotBall,
}

#[derive(Clone, Debug, Serialize)]
pub struct BallReport {
    pub connected: bool,
    pub acyclic: bool,
    pub collapsible: bool,
    pub verdict: BallVerdict,
}

impl BallReport {
    /// True for both positive verdicts.
    pub fn is_ball(&self) -> bool {
        self.verdict != BallVerdict::NotBall
    }
}

/// Ball test without a collapse-order hint.
pub fn is_homology_ball(k: &SimplicialComplex) -> BallReport {
    ball_report(k, &|_| 0)
}

/// Ball test; pairs whose top simplex has a smaller `priority` are
/// collapsed first.
pub fn ball_report(k: &SimplicialComplex, priority: &dyn Fn(&[usize]) -> i64) -> BallReport {
    let b = betti_numbers(k);
    let connected = k.vertex_count() > 0 && b.first() == Some(&1);
    let acyclic = connected && b.iter().skip(1).all(|&x| x == 0);
    let collapsible = acyclic && greedy_collapse(k, priority);
    let verdict = match (acyclic, collapsible) {
        (true, true) => BallVerdict::Collapsible,
        (true, false) => BallVerdict::HomologyOnly,
        _ => BallVerdict::NotBall,
    };
    BallReport { connected, acyclic, collapsible, verdict }
}

/// Repeatedly removes a free face together with its unique coface.
/// Succeeds when a single vertex remains.
pub fn greedy_collapse(k: &SimplicialComplex, priority: &dyn Fn(&[usize]) -> i64) -> bool {
    let simplices: Vec<Vec<usize>> = k.all_simplices().iter().skip(1).flatten().cloned().collect();
    if simplices.is_empty() {
        return false;
    }
    let id: HashMap<&[usize], usize> = simplices.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let n = simplices.len();
    let mut faces = vec![Vec::new(); n];
    let mut cofaces = vec![Vec::new(); n];
    for (i, s) in simplices.iter().enumerate() {
        if s.len() < 2 {
            continue;
        }
        for j in 0..s.len() {
            let mut f = s.clone();
            f.remove(j);
            let fi = id[f.as_slice()];
            faces[i].push(fi);
            cofaces[fi].push(i);
        }
    }
    let mut alive = vec![true; n];
    let mut live: Vec<usize> = cofaces.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut queue: BTreeSet<(i64, usize)> = BTreeSet::new();
    // a face is free when it has one live coface and that coface is maximal
    let free_key = |tau: usize, alive: &[bool], live: &[usize]| -> Option<(i64, usize)> {
        if !alive[tau] || live[tau] != 1 {
            return None;
        }
        let sigma = *cofaces[tau].iter().find(|&&c| alive[c])?;
        (live[sigma] == 0).then(|| (priority(&simplices[sigma]), tau))
    };
    for tau in 0..n {
        queue.extend(free_key(tau, &alive, &live));
    }
    while let Some((_, tau)) = queue.pop_first() {
        if free_key(tau, &alive, &live).is_none() {
            continue;
        }
        let sigma = *cofaces[tau].iter().find(|&&c| alive[c]).unwrap();
        alive[tau] = false;
        alive[sigma] = false;
        remaining -= 2;
        let mut touched = Vec::new();
        for &f in faces[sigma].iter().chain(faces[tau].iter()) {
            if alive[f] {
                live[f] -= 1;
                touched.push(f);
            }
        }
        for f in touched {
            queue.extend(free_key(f, &alive, &live));
            if live[f] == 0 {
                for &g in &faces[f] {
                    queue.extend(free_key(g, &alive, &live));
                }
            }
        }
    }
    remaining == 1
}
