//! Clique enumeration on sorted adjacency lists.

/// Intersection of two sorted slices.
pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Every clique of the graph (including the empty one), grouped by size.
/// `out[k]` holds the cliques with `k` vertices, each sorted, in
/// lexicographic order.
pub(crate) fn all_cliques(adj: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    let mut stack = Vec::new();
    for v in 0..adj.len() {
        let cand: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
        stack.push(v);
        extend(adj, &mut stack, &cand, &mut out);
        stack.pop();
    }
    for level in out.iter_mut() {
        level.sort();
    }
    out
}

fn extend(adj: &[Vec<usize>], clique: &mut Vec<usize>, cand: &[usize], out: &mut Vec<Vec<Vec<usize>>>) {
    let k = clique.len();
    if out.len() <= k {
        out.push(Vec::new());
    }
    out[k].push(clique.clone());
    for (i, &u) in cand.iter().enumerate() {
        let next = intersect_sorted(&cand[i + 1..], &adj[u]);
        clique.push(u);
        extend(adj, clique, &next, out);
        clique.pop();
    }
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting. Output sorted.
pub(crate) fn maximal_cliques(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: Vec<usize> = (0..adj.len()).collect();
    bron_kerbosch(adj, &mut Vec::new(), p, Vec::new(), &mut out);
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| intersect_sorted(&p, &adj[u]).len())
        .expect("p is nonempty");
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| adj[pivot].binary_search(v).is_err())
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        bron_kerbosch(
            adj,
            r,
            intersect_sorted(&p, &adj[v]),
            intersect_sorted(&x, &adj[v]),
            out,
        );
        r.pop();
        p.retain(|&u| u != v);
        let pos = x.binary_search(&v).unwrap_or_else(|e| e);
        x.insert(pos, v);
    }
}
