use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::cliques::{all_cliques, intersect_sorted, maximal_cliques};
use super::iso::{find_isomorphism, Shape};
use super::{FVector, SimplicialComplex};

/// A finite flag complex, stored as its 1-skeleton.
///
/// Vertices are indexed `0..n` in insertion order and carry string labels.
/// Simplices are sorted index vectors; the clique table is computed on
/// first use and cached.
pub struct FlagComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    cliques: OnceLock<Vec<Vec<Vec<usize>>>>,
}

impl Clone for FlagComplex {
    fn clone(&self) -> Self {
        FlagComplex {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj: self.adj.clone(),
            cliques: self.cliques.clone(),
        }
    }
}

impl PartialEq for FlagComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for FlagComplex {}

impl fmt::Debug for FlagComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
            .collect();
        f.debug_struct("FlagComplex")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl FlagComplex {
    /// Builds from labelled vertices and edges. Rejects duplicate labels,
    /// loops, unknown endpoints and repeated edges.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex `{l}`")));
            }
        }
        let mut seen = HashSet::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::Parse(format!("loop at vertex `{a}`")));
            }
            if !seen.insert((ia.min(ib), ia.max(ib))) {
                return Err(Error::Parse(format!("duplicate edge `{a}`-`{b}`")));
            }
            pairs.push((ia, ib));
        }
        Ok(Self::from_indexed(labels, pairs))
    }

    /// Builds from labels and index pairs. Repeated edges are merged.
    ///
    /// # Panics
    /// On duplicate labels, loops or out-of-range indices.
    pub fn from_indexed(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            assert!(index.insert(l.clone(), i).is_none(), "duplicate vertex label `{l}`");
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            assert!(a < n && b < n && a != b, "bad edge ({a}, {b})");
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        FlagComplex { labels, index, adj, cliques: OnceLock::new() }
    }

    /// The empty complex (only the empty simplex).
    pub fn empty() -> Self {
        Self::from_indexed(Vec::new(), [])
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Index of a label, or an `UnknownVertex` error.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Indices for a list of labels, sorted.
    pub fn vertices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = labels.iter().map(|l| self.vertex(l.as_ref())).collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Labels of a simplex.
    pub fn labels_of(&self, simplex: &[usize]) -> Vec<String> {
        simplex.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Number of vertices in the link of `v`.
    pub fn valence(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn clique_table(&self) -> &Vec<Vec<Vec<usize>>> {
        self.cliques.get_or_init(|| all_cliques(&self.adj))
    }

    /// Simplices of dimension `k` (cliques with `k + 1` vertices). The
    /// only simplex of dimension −1 is the empty one.
    pub fn simplices(&self, k: isize) -> &[Vec<usize>] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.clique_table().get(i))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All simplices, grouped by size (index 0 holds the empty simplex).
    pub fn all_simplices(&self) -> &[Vec<Vec<usize>>] {
        self.clique_table()
    }

    /// Dimension; −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.clique_table().len() as isize - 2
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.clique_table().iter().map(|l| l.len() as u64).collect())
    }

    /// κ(L) = Σ (−1/2)^{k+1} f_k.
    pub fn kappa(&self) -> crate::rational::Q {
        self.f_vector().kappa()
    }

    /// True iff the vertices are distinct and pairwise adjacent.
    pub fn is_simplex(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        set.len() == s.len()
            && s.iter().all(|&v| v < self.vertex_count())
            && s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| self.is_adjacent(a, b)))
    }

    /// True iff the whole complex is a single (possibly empty) simplex.
    pub fn is_full_simplex(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        maximal_cliques(&self.adj)
    }

    pub fn to_simplicial(&self) -> SimplicialComplex {
        SimplicialComplex::from_indexed(self.labels.clone(), self.maximal_simplices())
    }

    /// Full subcomplex on `vertices`, keeping the original vertex order.
    pub fn full_subcomplex(&self, vertices: &[usize]) -> FlagComplex {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let order: Vec<usize> = keep.iter().copied().collect();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            for &u in &self.adj[v] {
                if let Some(&j) = pos.get(&u) {
                    if j > i {
                        edges.push((i, j));
                    }
                }
            }
        }
        FlagComplex::from_indexed(labels, edges)
    }

    /// Full subcomplex on the vertices outside `removed`.
    pub fn minus(&self, removed: &[usize]) -> FlagComplex {
        let drop: HashSet<usize> = removed.iter().copied().collect();
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !drop.contains(v)).collect();
        self.full_subcomplex(&keep)
    }

    /// Vertices joinable to every vertex of `simplex` (excluding it).
    pub fn link_vertices(&self, simplex: &[usize]) -> Result<Vec<usize>> {
        if !self.is_simplex(simplex) {
            return Err(Error::NotASimplex(format!("{:?}", self.labels_of_checked(simplex))));
        }
        let mut common: Vec<usize> = (0..self.vertex_count()).collect();
        for &v in simplex {
            common = intersect_sorted(&common, &self.adj[v]);
        }
        Ok(common)
    }

    fn labels_of_checked(&self, s: &[usize]) -> Vec<String> {
        s.iter()
            .map(|&v| self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}")))
            .collect()
    }

    /// Link of a simplex. The link of the empty simplex is the complex.
    pub fn link(&self, simplex: &[usize]) -> Result<FlagComplex> {
        Ok(self.full_subcomplex(&self.link_vertices(simplex)?))
    }

    /// Closed star of a vertex as a full subcomplex.
    pub fn star(&self, v: usize) -> FlagComplex {
        let mut verts = self.adj[v].clone();
        verts.push(v);
        self.full_subcomplex(&verts)
    }

    /// A label not used by this complex, derived from `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        if !self.index.contains_key(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|l| !self.index.contains_key(l)).unwrap()
    }

    /// Join `self * other`. Labels are kept when the vertex sets are
    /// disjoint; otherwise every label gets the suffix `#0` or `#1`.
    pub fn join(&self, other: &FlagComplex) -> FlagComplex {
        self.combine(other, true)
    }

    /// Disjoint union, labelled as for `join`.
    pub fn disjoint_union(&self, other: &FlagComplex) -> FlagComplex {
        self.combine(other, false)
    }

    fn combine(&self, other: &FlagComplex, cross: bool) -> FlagComplex {
        let clash = other.labels.iter().any(|l| self.index.contains_key(l));
        let tag = |l: &String, side: usize| if clash { format!("{l}#{side}") } else { l.clone() };
        let n = self.vertex_count();
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| tag(l, 0))
            .chain(other.labels.iter().map(|l| tag(l, 1)))
            .collect();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + n, b + n)));
        if cross {
            for a in 0..n {
                edges.extend((0..other.vertex_count()).map(|b| (a, b + n)));
            }
        }
        FlagComplex::from_indexed(labels, edges)
    }

    /// Cone with a fresh apex appended as the last vertex.
    pub fn cone(&self) -> FlagComplex {
        let apex = self.fresh_label("apex");
        let mut labels = self.labels.clone();
        labels.push(apex);
        let n = self.vertex_count();
        let mut edges = self.edges();
        edges.extend((0..n).map(|v| (v, n)));
        FlagComplex::from_indexed(labels, edges)
    }

    /// Suspension with two fresh, non-adjacent poles appended.
    pub fn suspension(&self) -> FlagComplex {
        let north = self.fresh_label("north");
        let south = self.fresh_label("south");
        let mut labels = self.labels.clone();
        labels.push(north);
        labels.push(south);
        let n = self.vertex_count();
        let mut edges = self.edges();
        edges.extend((0..n).flat_map(|v| [(v, n), (v, n + 1)]));
        FlagComplex::from_indexed(labels, edges)
    }

    /// The double `d_v L`: two copies of `L − v` glued along the link of
    /// `v`. Link vertices keep their labels; the other vertices of `L − v`
    /// appear as `x#0` and `x#1`.
    pub fn double_along_vertex(&self, v: usize) -> Result<FlagComplex> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let rest: Vec<usize> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        let in_link = |u: usize| self.is_adjacent(u, v);
        let mut labels = Vec::new();
        let mut slot = [HashMap::new(), HashMap::new()];
        for &u in &rest {
            if in_link(u) {
                slot[0].insert(u, labels.len());
                slot[1].insert(u, labels.len());
                labels.push(self.labels[u].clone());
            } else {
                slot[0].insert(u, labels.len());
                labels.push(format!("{}#0", self.labels[u]));
            }
        }
        for &u in &rest {
            if !in_link(u) {
                slot[1].insert(u, labels.len());
                labels.push(format!("{}#1", self.labels[u]));
            }
        }
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            if a == v || b == v {
                continue;
            }
            for s in &slot {
                edges.push((s[&a], s[&b]));
            }
        }
        Ok(FlagComplex::from_indexed(labels, edges))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.vertex_count(), |v| self.adj[v].clone())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of the complement of the 1-skeleton. A flag complex is
    /// the join of its full subcomplexes on these vertex sets.
    pub fn complement_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        components_of(n, |v| (0..n).filter(|&u| u != v && !self.is_adjacent(u, v)).collect())
    }

    /// Chordless 4-cycles that are not the link of a vertex. Each is
    /// returned as `[a, b, c, d]` in cyclic order with `a` least and
    /// `b < d`; the list is sorted.
    pub fn empty_circuits_4(&self) -> Vec<[usize; 4]> {
        let n = self.vertex_count();
        let mut found = BTreeSet::new();
        for a in 0..n {
            for c in a + 1..n {
                if self.is_adjacent(a, c) {
                    continue;
                }
                let common = intersect_sorted(&self.adj[a], &self.adj[c]);
                for (i, &b) in common.iter().enumerate() {
                    for &d in &common[i + 1..] {
                        if self.is_adjacent(b, d) {
                            continue;
                        }
                        let cyc = canonical_cycle([a, b, c, d]);
                        if !self.is_vertex_link(&cyc) {
                            found.insert(cyc);
                        }
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    fn is_vertex_link(&self, cycle: &[usize; 4]) -> bool {
        let mut set = cycle.to_vec();
        set.sort_unstable();
        let mut candidates = self.adj[cycle[0]].clone();
        for &x in &cycle[1..] {
            candidates = intersect_sorted(&candidates, &self.adj[x]);
        }
        candidates.iter().any(|&v| self.adj[v] == set)
    }

    /// An isomorphism `self -> other` as an index map, if one exists.
    pub fn isomorphism(&self, other: &FlagComplex) -> Option<Vec<usize>> {
        let a = Shape { adj: &self.adj, tag: vec![0; self.vertex_count()] };
        let b = Shape { adj: &other.adj, tag: vec![0; other.vertex_count()] };
        find_isomorphism(&a, &b, &|_| true)
    }

    pub fn is_isomorphic(&self, other: &FlagComplex) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Same complex with labels replaced.
    pub fn relabeled(&self, labels: Vec<String>) -> FlagComplex {
        assert_eq!(labels.len(), self.vertex_count());
        FlagComplex::from_indexed(labels, self.edges())
    }
}

fn canonical_cycle(c: [usize; 4]) -> [usize; 4] {
    let start = (0..4).min_by_key(|&i| c[i]).unwrap();
    let r = [c[start], c[(start + 1) % 4], c[(start + 2) % 4], c[(start + 3) % 4]];
    if r[1] < r[3] {
        r
    } else {
        [r[0], r[3], r[2], r[1]]
    }
}

pub(crate) fn components_of(n: usize, neighbors: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for u in neighbors(comp[i]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
