//! Isomorphism search for small graphs and complexes: colour refinement
//! followed by backtracking.

use std::collections::{BTreeMap, HashSet};

/// Vertex-coloured graph used as the search structure.
pub(crate) struct Shape<'a> {
    pub adj: &'a [Vec<usize>],
    /// Extra per-vertex invariant, compared before refinement.
    pub tag: Vec<u64>,
}

/// Joint colour refinement of two graphs. Returns the stable colours of
/// each side, or `None` when the colour histograms differ.
fn refine(a: &Shape, b: &Shape) -> Option<(Vec<usize>, Vec<usize>)> {
    let na = a.adj.len();
    let adj: Vec<&Vec<usize>> = a.adj.iter().chain(b.adj.iter()).collect();
    let n = adj.len();
    let offset = |side: usize, v: usize| if side == 0 { v } else { v + na };
    let mut colour: Vec<usize> = {
        let keys: Vec<(usize, u64)> = (0..n)
            .map(|v| {
                let tag = if v < na { a.tag[v] } else { b.tag[v - na] };
                (adj[v].len(), tag)
            })
            .collect();
        compress(&keys)
    };
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let side = usize::from(v >= na);
                let mut nb: Vec<usize> = adj[v].iter().map(|&u| colour[offset(side, u)]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let next = compress(&keys);
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        let stable = classes(&next) == classes(&colour);
        colour = next;
        if stable {
            break;
        }
    }
    let (ca, cb) = colour.split_at(na);
    let hist = |c: &[usize]| {
        let mut m = BTreeMap::new();
        for &x in c {
            *m.entry(x).or_insert(0usize) += 1;
        }
        m
    };
    if hist(ca) != hist(cb) {
        return None;
    }
    Some((ca.to_vec(), cb.to_vec()))
}

fn compress<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// Find a bijection `phi: A -> B` preserving adjacency in both directions
/// and accepted by `accept`. Returns `phi` as a vector indexed by A's
/// vertices.
pub(crate) fn find_isomorphism(
    a: &Shape,
    b: &Shape,
    accept: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let n = a.adj.len();
    if n != b.adj.len() {
        return None;
    }
    let ea: usize = a.adj.iter().map(Vec::len).sum();
    let eb: usize = b.adj.iter().map(Vec::len).sum();
    if ea != eb {
        return None;
    }
    let (ca, cb) = refine(a, b)?;
    // Order A's vertices: start from the rarest colour, then grow along
    // edges so that every new vertex is constrained by mapped neighbours.
    let mut count = BTreeMap::new();
    for &c in &ca {
        *count.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (count[&ca[v]], v))
            .expect("unplaced vertex");
        placed[seed] = true;
        order.push(seed);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            let mut next: Vec<usize> = a.adj[v].iter().copied().filter(|&u| !placed[u]).collect();
            next.sort_by_key(|&u| (count[&ca[u]], u));
            for u in next {
                if !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    let adj_b: Vec<HashSet<usize>> = b.adj.iter().map(|l| l.iter().copied().collect()).collect();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(0, &order, a, &adj_b, &ca, &cb, &mut phi, &mut used, accept) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    depth: usize,
    order: &[usize],
    a: &Shape,
    adj_b: &[HashSet<usize>],
    ca: &[usize],
    cb: &[usize],
    phi: &mut [usize],
    used: &mut [bool],
    accept: &dyn Fn(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return accept(phi);
    }
    let v = order[depth];
    for w in 0..cb.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        // adjacency with every already-mapped vertex must agree
        let consistent = order[..depth].iter().all(|&u| {
            let ua = a.adj[v].binary_search(&u).is_ok();
            let ub = adj_b[w].contains(&phi[u]);
            ua == ub
        });
        if !consistent {
            continue;
        }
        phi[v] = w;
        used[w] = true;
        if backtrack(depth + 1, order, a, adj_b, ca, cb, phi, used, accept) {
            return true;
        }
        used[w] = false;
        phi[v] = usize::MAX;
    }
    false
}
