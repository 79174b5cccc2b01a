use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::iso::{find_isomorphism, Shape};
use super::{FVector, FlagComplex};

/// A finite abstract simplicial complex given by its maximal simplices.
///
/// Every vertex label is a vertex of the complex, so a label that lies in
/// no listed facet becomes an isolated vertex.
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<usize>>,
    faces: OnceLock<Vec<Vec<Vec<usize>>>>,
    lookup: OnceLock<HashSet<Vec<usize>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: self.facets.clone(),
            faces: self.faces.clone(),
            lookup: self.lookup.clone(),
        }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<Vec<&str>> = self
            .facets
            .iter()
            .map(|s| s.iter().map(|&v| self.labels[v].as_str()).collect())
            .collect();
        f.debug_struct("SimplicialComplex").field("facets", &facets).finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl SimplicialComplex {
    /// Builds from labels and simplices given by label. Unknown labels are
    /// an error; vertices are ordered by first appearance.
    pub fn from_labeled<S: AsRef<str>>(simplices: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut facets = Vec::with_capacity(simplices.len());
        for s in simplices {
            let mut idx = Vec::with_capacity(s.len());
            for l in s {
                let l = l.as_ref();
                let i = *index.entry(l.to_string()).or_insert_with(|| {
                    labels.push(l.to_string());
                    labels.len() - 1
                });
                idx.push(i);
            }
            let n = idx.len();
            idx.sort_unstable();
            idx.dedup();
            if idx.len() != n {
                return Err(Error::Parse("repeated vertex inside a simplex".into()));
            }
            facets.push(idx);
        }
        Ok(Self::from_indexed(labels, facets))
    }

    /// Builds from labels and index simplices; nested simplices are
    /// removed and unused labels become isolated vertices.
    pub fn from_indexed(labels: Vec<String>, simplices: Vec<Vec<usize>>) -> Self {
        let n = labels.len();
        let mut sets: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                assert!(s.iter().all(|&v| v < n), "simplex vertex out of range");
                s
            })
            .filter(|s| !s.is_empty())
            .collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !facets.iter().any(|f| is_subset(&s, f)) {
                facets.push(s);
            }
        }
        let mut used = vec![false; n];
        for f in &facets {
            for &v in f {
                used[v] = true;
            }
        }
        facets.extend((0..n).filter(|&v| !used[v]).map(|v| vec![v]));
        facets.sort();
        SimplicialComplex { labels, facets, faces: OnceLock::new(), lookup: OnceLock::new() }
    }

    pub fn empty() -> Self {
        Self::from_indexed(Vec::new(), Vec::new())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Maximal simplices, sorted.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All simplices grouped by size; index 0 holds the empty simplex.
    pub fn all_simplices(&self) -> &[Vec<Vec<usize>>] {
        self.faces.get_or_init(|| {
            let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); (self.dim() + 2) as usize];
            levels[0].insert(Vec::new());
            for f in &self.facets {
                for mask in 1u64..(1u64 << f.len()) {
                    let s: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                    levels[s.len()].insert(s);
                }
            }
            levels.into_iter().map(|l| l.into_iter().collect()).collect()
        })
    }

    /// Simplices of dimension `k`.
    pub fn simplices(&self, k: isize) -> &[Vec<usize>] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.all_simplices().get(i))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Membership test for a sorted simplex.
    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.lookup
            .get_or_init(|| self.all_simplices().iter().flatten().cloned().collect())
            .contains(simplex)
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.all_simplices().iter().map(|l| l.len() as u64).collect())
    }

    /// Sorted adjacency lists of the 1-skeleton.
    pub fn one_skeleton(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in self.simplices(1) {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        adj
    }

    /// True iff every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        let adj = self.one_skeleton();
        super::cliques::maximal_cliques(&adj).iter().all(|c| self.contains(c))
    }

    /// The flag complex with the same 1-skeleton, if this complex is flag.
    pub fn to_flag(&self) -> Result<FlagComplex> {
        if !self.is_flag() {
            return Err(Error::NotFlag("some clique of the 1-skeleton is not a simplex".into()));
        }
        let edges: Vec<(usize, usize)> = self.simplices(1).iter().map(|e| (e[0], e[1])).collect();
        Ok(FlagComplex::from_indexed(self.labels.clone(), edges))
    }

    /// Pure: all facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    /// Restriction to the vertex subset `keep`, relabelled compactly.
    fn restrict(&self, simplices: Vec<Vec<usize>>, keep: &BTreeSet<usize>) -> SimplicialComplex {
        let order: Vec<usize> = keep.iter().copied().collect();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let sims = simplices.into_iter().map(|s| s.into_iter().map(|v| pos[&v]).collect()).collect();
        SimplicialComplex::from_indexed(labels, sims)
    }

    /// Link of a simplex: `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, simplex: &[usize]) -> Result<SimplicialComplex> {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        if !self.contains(&s) {
            return Err(Error::NotASimplex(format!("{simplex:?}")));
        }
        let mut keep = BTreeSet::new();
        let mut sims = Vec::new();
        for f in &self.facets {
            if is_subset(&s, f) {
                let rest: Vec<usize> = f.iter().copied().filter(|v| s.binary_search(v).is_err()).collect();
                keep.extend(rest.iter().copied());
                sims.push(rest);
            }
        }
        Ok(self.restrict(sims, &keep))
    }

    /// Full subcomplex on a vertex subset.
    pub fn full_subcomplex(&self, vertices: &[usize]) -> SimplicialComplex {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let sims = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect::<Vec<_>>())
            .collect();
        self.restrict(sims, &keep)
    }

    /// Subcomplex generated by the given simplices, on the same vertex
    /// labels (unused vertices dropped).
    pub fn generated_by(labels: &[String], simplices: Vec<Vec<usize>>) -> SimplicialComplex {
        let keep: BTreeSet<usize> = simplices.iter().flatten().copied().collect();
        let order: Vec<usize> = keep.iter().copied().collect();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let new_labels = order.iter().map(|&v| labels[v].clone()).collect();
        let sims = simplices.into_iter().map(|s| s.into_iter().map(|v| pos[&v]).collect()).collect();
        SimplicialComplex::from_indexed(new_labels, sims)
    }

    /// Every simplex of `sub`, translated by label, lies in `self`. Returns
    /// the index translation `sub -> self`.
    pub fn embedding_of(&self, sub: &SimplicialComplex) -> Result<Vec<usize>> {
        let map = sub
            .labels
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| Error::UnknownVertex(l.clone())))
            .collect::<Result<Vec<_>>>()?;
        for f in &sub.facets {
            let mut t: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            t.sort_unstable();
            if !self.contains(&t) {
                return Err(Error::Precondition(format!(
                    "simplex {:?} is not in the ambient complex",
                    f.iter().map(|&v| sub.labels[v].as_str()).collect::<Vec<_>>()
                )));
            }
        }
        Ok(map)
    }

    /// Barycentric subdivision; vertices are labelled `{a,b,...}`.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let simplices: Vec<Vec<usize>> = self.all_simplices().iter().skip(1).flatten().cloned().collect();
        let pos: HashMap<&Vec<usize>, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let labels = simplices
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|&v| self.labels[v].as_str()).collect::<Vec<_>>().join(",")))
            .collect();
        let mut chains = Vec::new();
        for f in &self.facets {
            for perm in permutations(f) {
                let chain: Vec<usize> = (1..=perm.len())
                    .map(|k| {
                        let mut s = perm[..k].to_vec();
                        s.sort_unstable();
                        pos[&s]
                    })
                    .collect();
                chains.push(chain);
            }
        }
        SimplicialComplex::from_indexed(labels, chains)
    }

    /// Connected components as vertex sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.one_skeleton();
        super::flag::components_of(self.vertex_count(), |v| adj[v].clone())
    }

    /// An isomorphism `self -> other` as an index map, if one exists.
    pub fn isomorphism(&self, other: &SimplicialComplex) -> Option<Vec<usize>> {
        if self.f_vector() != other.f_vector() {
            return None;
        }
        let (adj_a, adj_b) = (self.one_skeleton(), other.one_skeleton());
        let tag = |k: &SimplicialComplex| {
            let mut t = vec![0u64; k.vertex_count()];
            for f in &k.facets {
                for &v in f {
                    t[v] += 1 << (8 * (f.len().min(7) - 1));
                }
            }
            t
        };
        let a = Shape { adj: &adj_a, tag: tag(self) };
        let b = Shape { adj: &adj_b, tag: tag(other) };
        let target: HashSet<&Vec<usize>> = other.facets.iter().collect();
        let accept = |phi: &[usize]| {
            self.facets.iter().all(|f| {
                let mut g: Vec<usize> = f.iter().map(|&v| phi[v]).collect();
                g.sort_unstable();
                target.contains(&g)
            })
        };
        find_isomorphism(&a, &b, &accept)
    }

    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        self.isomorphism(other).is_some()
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
