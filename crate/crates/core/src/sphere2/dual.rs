use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{check_flag_2_sphere, suspension_leaf};
use crate::error::{Error, Result};
use crate::simplicial::FlagComplex;

/// Outcome of the checks on the cellulation `[S − T]` obtained by
/// deleting the valence-4 vertices `T`: triangles of `S` away from `T`
/// and one square for each vertex of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCellReport {
    pub triangles: usize,
    pub squares: usize,
    /// Any two cells meet in the empty set, a vertex or a common edge.
    pub cells_meet_in_faces: bool,
    /// Every 3-cycle of the 1-skeleton bounds a triangle.
    pub no_empty_3_circuits: bool,
    /// Every 4-cycle bounds two triangles sharing an edge or a square.
    pub four_circuits_bound: bool,
    /// No vertex outside a square is adjacent to two opposite corners.
    pub opposite_corners_unshared: bool,
}

impl DualCellReport {
    pub fn all_pass(&self) -> bool {
        self.cells_meet_in_faces && self.no_empty_3_circuits && self.four_circuits_bound && self.opposite_corners_unshared
    }
}

/// Runs the cellulation checks for `t` on a flag 2-sphere with no empty
/// 4-circuit that is not the suspension of a 4- or 5-gon.
pub fn dual_cell_check(l: &FlagComplex, t: &[usize]) -> Result<DualCellReport> {
    check_flag_2_sphere(l)?;
    if let Some((_, m)) = suspension_leaf(l) {
        return Err(Error::Precondition(format!("complex is the suspension of a {m}-gon")));
    }
    if let Some(c) = l.empty_circuits_4().first() {
        let names: Vec<&str> = c.iter().map(|&v| l.label(v)).collect();
        return Err(Error::Precondition(format!("empty 4-circuit {}", names.join("-"))));
    }
    if let Some(&v) = t.iter().find(|&&v| v >= l.vertex_count() || l.valence(v) != 4) {
        return Err(Error::Precondition(format!("vertex {v} is not a valence-4 vertex")));
    }
    Ok(dual_checks(l, t))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// The link of a valence-4 vertex in cyclic order.
pub(super) fn link_cycle(l: &FlagComplex, v: usize) -> Option<[usize; 4]> {
    let nb = l.neighbors(v);
    if nb.len() != 4 {
        return None;
    }
    let mut cyc = vec![nb[0]];
    while cyc.len() < 4 {
        let last = *cyc.last().unwrap();
        let prev = if cyc.len() > 1 { Some(cyc[cyc.len() - 2]) } else { None };
        let next = nb.iter().copied().find(|&u| u != last && Some(u) != prev && !cyc.contains(&u) && l.is_adjacent(u, last))?;
        cyc.push(next);
    }
    if !l.is_adjacent(cyc[3], cyc[0]) {
        return None;
    }
    Some([cyc[0], cyc[1], cyc[2], cyc[3]])
}

pub(super) fn dual_checks(l: &FlagComplex, t: &[usize]) -> DualCellReport {
    let n = l.vertex_count();
    let removed: BTreeSet<usize> = t.iter().copied().collect();
    let alive = |v: usize| !removed.contains(&v);

    // Cells as (vertex set, edge set).
    let mut cells: Vec<(Vec<usize>, BTreeSet<(usize, usize)>)> = Vec::new();
    let mut triangle_set = BTreeSet::new();
    for tri in l.simplices(2) {
        if tri.iter().all(|&v| alive(v)) {
            let edges = [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])].into_iter().collect();
            cells.push((tri.clone(), edges));
            triangle_set.insert(tri.clone());
        }
    }
    let triangles = cells.len();
    let mut squares: Vec<[usize; 4]> = Vec::new();
    let mut square_sets = BTreeSet::new();
    let mut square_ok = true;
    for &v in t {
        match link_cycle(l, v) {
            Some(c) => {
                let mut vs = c.to_vec();
                vs.sort_unstable();
                square_ok &= vs.iter().all(|&u| alive(u));
                let edges = (0..4).map(|i| ordered(c[i], c[(i + 1) % 4])).collect();
                cells.push((vs.clone(), edges));
                square_sets.insert(vs);
                squares.push(c);
            }
            None => square_ok = false,
        }
    }

    let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, (vs, _)) in cells.iter().enumerate() {
        for &v in vs {
            incident.entry(v).or_default().push(i);
        }
    }
    let mut cells_meet_in_faces = square_ok;
    let mut seen = BTreeSet::new();
    for list in incident.values() {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                if !seen.insert((i, j)) {
                    continue;
                }
                let common: Vec<usize> = cells[i].0.iter().copied().filter(|v| cells[j].0.contains(v)).collect();
                match common.len() {
                    0 | 1 => {}
                    2 => {
                        let e = ordered(common[0], common[1]);
                        cells_meet_in_faces &= cells[i].1.contains(&e) && cells[j].1.contains(&e);
                    }
                    _ => cells_meet_in_faces = false,
                }
            }
        }
    }

    // 1-skeleton of the cellulation: edges of S away from T.
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| if alive(v) { l.neighbors(v).iter().copied().filter(|&u| alive(u)).collect() } else { Vec::new() })
        .collect();
    let linked = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();

    let mut no_empty_3_circuits = true;
    for a in 0..n {
        for &b in adj[a].iter().filter(|&&b| b > a) {
            for &c in adj[b].iter().filter(|&&c| c > b) {
                if linked(a, c) && !triangle_set.contains(&vec![a, b, c]) {
                    no_empty_3_circuits = false;
                }
            }
        }
    }

    let bounds_two_triangles = |a: usize, b: usize, c: usize, d: usize| {
        let tri = |x: usize, y: usize, z: usize| {
            let mut s = vec![x, y, z];
            s.sort_unstable();
            triangle_set.contains(&s)
        };
        (linked(a, c) && tri(a, b, c) && tri(a, c, d)) || (linked(b, d) && tri(a, b, d) && tri(b, c, d))
    };
    let mut four_circuits_bound = true;
    for a in 0..n {
        for c in a + 1..n {
            let common: Vec<usize> = adj[a].iter().copied().filter(|&x| linked(c, x)).collect();
            for (i, &b) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if bounds_two_triangles(a, b, c, d) {
                        continue;
                    }
                    let mut vs = vec![a, b, c, d];
                    vs.sort_unstable();
                    let is_square = square_sets.contains(&vs) && !linked(a, c) && !linked(b, d);
                    if !is_square {
                        four_circuits_bound = false;
                    }
                }
            }
        }
    }

    let mut opposite_corners_unshared = true;
    for c in &squares {
        for (p, q) in [(c[0], c[2]), (c[1], c[3])] {
            let shared = adj[p].iter().any(|&x| linked(q, x) && !c.contains(&x));
            if shared {
                opposite_corners_unshared = false;
            }
        }
    }

    DualCellReport {
        triangles,
        squares: squares.len(),
        cells_meet_in_faces,
        no_empty_3_circuits,
        four_circuits_bound,
        opposite_corners_unshared,
    }
}
