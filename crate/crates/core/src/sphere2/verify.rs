//! Certificate validation. Re-derives every claim from the recorded
//! complexes with separate, elementary checks.

use std::collections::{BTreeMap, BTreeSet};

use super::dual::dual_checks;
use super::{CertNode, Certificate};
use crate::error::{Error, Result};
use crate::io::complex_from_value;
use crate::rational::{qi, render, Q};
use crate::simplicial::FlagComplex;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub nodes: usize,
    pub suspension_leaves: usize,
    pub andreev_leaves: usize,
    pub max_depth: usize,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

/// Validates a certificate. Returns counts on success.
pub fn verify(cert: &Certificate) -> Result<VerifySummary> {
    let mut summary = VerifySummary::default();
    verify_node(&cert.root, 0, &mut summary)?;
    Ok(summary)
}

/// Edge sets by label.
struct Graph {
    verts: BTreeSet<String>,
    adj: BTreeMap<String, BTreeSet<String>>,
}

impl Graph {
    fn of(l: &FlagComplex) -> Graph {
        let verts: BTreeSet<String> = l.labels().iter().cloned().collect();
        let mut adj: BTreeMap<String, BTreeSet<String>> = verts.iter().map(|v| (v.clone(), BTreeSet::new())).collect();
        for (a, b) in l.edges() {
            adj.get_mut(l.label(a)).unwrap().insert(l.label(b).to_string());
            adj.get_mut(l.label(b)).unwrap().insert(l.label(a).to_string());
        }
        Graph { verts, adj }
    }

    fn linked(&self, a: &str, b: &str) -> bool {
        self.adj.get(a).is_some_and(|s| s.contains(b))
    }

    fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn triangles(&self) -> Vec<[&String; 3]> {
        let mut out = Vec::new();
        for (a, na) in &self.adj {
            for b in na.range::<String, _>((std::ops::Bound::Excluded(a), std::ops::Bound::Unbounded)) {
                for c in self.adj[b].range::<String, _>((std::ops::Bound::Excluded(b), std::ops::Bound::Unbounded)) {
                    if na.contains(c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// True if the set is exactly one cycle through all of `set`.
    fn is_cycle(&self, set: &BTreeSet<String>) -> bool {
        let Some(start) = set.iter().next() else { return false };
        if set.len() < 3 || set.iter().any(|v| self.adj[v].intersection(set).count() != 2) {
            return false;
        }
        let (mut prev, mut cur, mut steps) = (start.clone(), self.adj[start].intersection(set).next().unwrap().clone(), 1);
        while &cur != start {
            let next = self.adj[&cur].intersection(set).find(|x| **x != prev).unwrap().clone();
            prev = std::mem::replace(&mut cur, next);
            steps += 1;
        }
        steps == set.len()
    }
}

/// Flag 2-sphere test via the combinatorial definition: every edge in
/// two triangles, every vertex link a single cycle, connected, χ = 2.
fn check_sphere(g: &Graph) -> Result<()> {
    let tris = g.triangles();
    let mut per_edge: BTreeMap<(&String, &String), usize> = BTreeMap::new();
    for [a, b, c] in &tris {
        for e in [(*a, *b), (*a, *c), (*b, *c)] {
            *per_edge.entry(e).or_default() += 1;
        }
        // no 4-cliques in a 2-dimensional flag complex
        if g.adj[*a].iter().any(|d| g.linked(d, b) && g.linked(d, c)) {
            return Err(bad(format!("{a}, {b}, {c} lie in a tetrahedron")));
        }
    }
    if per_edge.len() != g.edge_count() || per_edge.values().any(|&k| k != 2) {
        return Err(bad("some edge does not lie in exactly two triangles"));
    }
    for v in &g.verts {
        if !g.is_cycle(&g.adj[v]) {
            return Err(bad(format!("link of {v} is not a cycle")));
        }
    }
    let mut seen = BTreeSet::new();
    let mut stack: Vec<&String> = g.verts.iter().take(1).collect();
    while let Some(v) = stack.pop() {
        if seen.insert(v) {
            stack.extend(g.adj[v].iter());
        }
    }
    if seen.len() != g.verts.len() {
        return Err(bad("complex is disconnected"));
    }
    let chi = g.verts.len() as i64 - g.edge_count() as i64 + tris.len() as i64;
    if chi != 2 {
        return Err(bad(format!("Euler characteristic {chi}")));
    }
    Ok(())
}

fn kappa_of(g: &Graph) -> Q {
    let f0 = g.verts.len() as i64;
    let f1 = g.edge_count() as i64;
    let f2 = g.triangles().len() as i64;
    qi(1) - Q::new(f0.into(), 2.into()) + Q::new(f1.into(), 4.into()) - Q::new(f2.into(), 8.into())
}

fn parse(node: &CertNode) -> Result<(FlagComplex, Graph)> {
    let l = complex_from_value(node.complex())
        .and_then(|c| c.into_flag(false))
        .map_err(|e| bad(format!("node complex: {e}")))?;
    let g = Graph::of(&l);
    Ok((l, g))
}

fn verify_node(node: &CertNode, depth: usize, summary: &mut VerifySummary) -> Result<Graph> {
    summary.nodes += 1;
    summary.max_depth = summary.max_depth.max(depth);
    let (l, g) = parse(node)?;
    check_sphere(&g)?;
    let kappa = kappa_of(&g);
    let recorded = match node {
        CertNode::Suspension { kappa, .. }
        | CertNode::SquareDecomposition { kappa, .. }
        | CertNode::AndreevBase { kappa, .. } => kappa,
    };
    if render(&kappa) != *recorded || kappa != qi(0) {
        return Err(bad(format!("recorded κ = {recorded}, computed {}", render(&kappa))));
    }
    match node {
        CertNode::Suspension { gon, poles: [n, s], .. } => {
            if !(*gon == 4 || *gon == 5) || n == s || g.linked(n, s) {
                return Err(bad("suspension poles or gon size invalid"));
            }
            let base: BTreeSet<String> = g.verts.iter().filter(|v| *v != n && *v != s).cloned().collect();
            for pole in [n, s] {
                if !g.verts.contains(pole) || g.adj[pole] != base {
                    return Err(bad(format!("pole {pole} is not joined to every base vertex")));
                }
            }
            if base.len() != *gon || !g.is_cycle(&base) {
                return Err(bad(format!("base is not a {gon}-gon")));
            }
            summary.suspension_leaves += 1;
        }
        CertNode::SquareDecomposition { circuit, caps, children, .. } => {
            let set: BTreeSet<String> = circuit.iter().cloned().collect();
            if set.len() != 4 || !set.iter().all(|v| g.verts.contains(v)) {
                return Err(bad("circuit must name four vertices"));
            }
            for i in 0..4 {
                if !g.linked(&circuit[i], &circuit[(i + 1) % 4]) {
                    return Err(bad("circuit is not a 4-cycle"));
                }
            }
            if g.linked(&circuit[0], &circuit[2]) || g.linked(&circuit[1], &circuit[3]) {
                return Err(bad("circuit has a chord"));
            }
            if g.adj.values().any(|nb| *nb == set) {
                return Err(bad("circuit is the link of a vertex"));
            }
            if children.len() != 2 {
                return Err(bad("a decomposition node has exactly two children"));
            }
            let mut pieces = Vec::new();
            for (child, cap) in children.iter().zip(caps) {
                let cg = verify_node(child, depth + 1, summary)?;
                if cg.verts.len() >= g.verts.len() {
                    return Err(bad("child is not smaller than its parent"));
                }
                if cg.adj.get(cap) != Some(&set) {
                    return Err(bad(format!("cap {cap} is not a cone vertex over the circuit")));
                }
                let verts: BTreeSet<String> = cg.verts.iter().filter(|v| *v != cap).cloned().collect();
                for a in &verts {
                    if !g.verts.contains(a) {
                        return Err(bad(format!("child vertex {a} is not in the parent")));
                    }
                    for b in &verts {
                        if cg.linked(a, b) != g.linked(a, b) {
                            return Err(bad("child is not a full subcomplex of the parent plus a cap"));
                        }
                    }
                }
                pieces.push(verts);
            }
            let meet: BTreeSet<String> = pieces[0].intersection(&pieces[1]).cloned().collect();
            let all: BTreeSet<String> = pieces[0].union(&pieces[1]).cloned().collect();
            if meet != set || all != g.verts {
                return Err(bad("children do not recompose the parent"));
            }
            for (a, nb) in &g.adj {
                for b in nb {
                    if !pieces.iter().any(|p| p.contains(a) && p.contains(b)) {
                        return Err(bad(format!("edge {a}-{b} is lost in the decomposition")));
                    }
                }
            }
        }
        CertNode::AndreevBase { valence_four, checks, .. } => {
            let t: BTreeSet<String> = g.adj.iter().filter(|(_, nb)| nb.len() == 4).map(|(v, _)| v.clone()).collect();
            let listed: BTreeSet<String> = valence_four.iter().cloned().collect();
            if t != listed {
                return Err(bad("valence-4 set does not match the complex"));
            }
            for a in &t {
                if t.iter().any(|b| g.linked(a, b)) {
                    return Err(bad("valence-4 vertices are adjacent"));
                }
            }
            // no chordless 4-cycle other than vertex links
            for (a, na) in &g.adj {
                for c in g.verts.range::<String, _>((std::ops::Bound::Excluded(a), std::ops::Bound::Unbounded)) {
                    if g.linked(a, c) {
                        continue;
                    }
                    let common: Vec<&String> = na.intersection(&g.adj[c]).collect();
                    for (i, b) in common.iter().enumerate() {
                        for d in &common[i + 1..] {
                            if g.linked(b, d) {
                                continue;
                            }
                            let cyc: BTreeSet<String> = [a, *b, c, *d].into_iter().cloned().collect();
                            if !g.adj.values().any(|nb| *nb == cyc) {
                                return Err(bad(format!("empty 4-circuit {a}-{b}-{c}-{d} at a base node")));
                            }
                        }
                    }
                }
            }
            let idx: Vec<usize> = t.iter().map(|v| l.index_of(v).unwrap()).collect();
            let recomputed = dual_checks(&l, &idx);
            if recomputed != *checks || !recomputed.all_pass() {
                return Err(bad(format!("cellulation checks do not hold: {recomputed:?}")));
            }
            summary.andreev_leaves += 1;
        }
    }
    Ok(g)
}
