use std::collections::BTreeMap;

use super::check_flag_2_sphere;
use super::dual::link_cycle;
use crate::error::{Error, Result};
use crate::simplicial::FlagComplex;

/// The composite `S1 □ S2`: delete valence-4 vertices `v1`, `v2` and
/// glue the two complements along their boundary squares.
///
/// `matching` pairs each link vertex of `v1` with a link vertex of `v2`
/// (labels in `S1`, `S2`); it must respect the 4-cycles. Without it the
/// cycles are matched in the order found. Vertices of `S2` keep their
/// labels, with `#1` appended on collision with `S1`.
pub fn square_compose(
    s1: &FlagComplex,
    v1: &str,
    s2: &FlagComplex,
    v2: &str,
    matching: Option<&[(String, String)]>,
) -> Result<FlagComplex> {
    let a = s1.vertex(v1)?;
    let b = s2.vertex(v2)?;
    for (s, v, name) in [(s1, a, v1), (s2, b, v2)] {
        if s.valence(v) != 4 {
            return Err(Error::Precondition(format!("vertex {name} has valence {}, not 4", s.valence(v))));
        }
    }
    let c1 = link_cycle(s1, a).ok_or_else(|| Error::Precondition(format!("link of {v1} is not a 4-cycle")))?;
    let c2 = link_cycle(s2, b).ok_or_else(|| Error::Precondition(format!("link of {v2} is not a 4-cycle")))?;

    // image in S1 of each link vertex of v2
    let mut to_s1: BTreeMap<usize, usize> = BTreeMap::new();
    match matching {
        None => {
            for i in 0..4 {
                to_s1.insert(c2[i], c1[i]);
            }
        }
        Some(pairs) => {
            if pairs.len() != 4 {
                return Err(Error::Precondition("a matching pairs exactly four link vertices".into()));
            }
            for (x, y) in pairs {
                let x = s1.vertex(x)?;
                let y = s2.vertex(y)?;
                if !c1.contains(&x) || !c2.contains(&y) {
                    return Err(Error::Precondition("matching uses a vertex outside the links".into()));
                }
                to_s1.insert(y, x);
            }
            let mut images: Vec<usize> = to_s1.values().copied().collect();
            images.sort_unstable();
            images.dedup();
            if to_s1.len() != 4 || images.len() != 4 {
                return Err(Error::Precondition("matching is not a bijection".into()));
            }
            for i in 0..4 {
                let (p, q) = (to_s1[&c2[i]], to_s1[&c2[(i + 1) % 4]]);
                if !s1.is_adjacent(p, q) {
                    return Err(Error::Precondition("matching does not preserve the link cycles".into()));
                }
            }
        }
    }

    let mut labels: Vec<String> = Vec::new();
    let mut index1 = vec![usize::MAX; s1.vertex_count()];
    for v in 0..s1.vertex_count() {
        if v != a {
            index1[v] = labels.len();
            labels.push(s1.label(v).to_string());
        }
    }
    let mut index2 = vec![usize::MAX; s2.vertex_count()];
    for v in 0..s2.vertex_count() {
        if v == b {
            continue;
        }
        if let Some(&w) = to_s1.get(&v) {
            index2[v] = index1[w];
            continue;
        }
        let mut l = s2.label(v).to_string();
        while labels.contains(&l) {
            l.push_str("#1");
        }
        index2[v] = labels.len();
        labels.push(l);
    }
    let mut edges = Vec::new();
    for (x, y) in s1.edges() {
        if x != a && y != a {
            edges.push((index1[x], index1[y]));
        }
    }
    for (x, y) in s2.edges() {
        if x != b && y != b {
            let e = (index2[x], index2[y]);
            if !(to_s1.contains_key(&x) && to_s1.contains_key(&y)) {
                edges.push(e);
            }
        }
    }
    let out = FlagComplex::from_indexed(labels, edges);
    check_flag_2_sphere(&out).map_err(|e| Error::NotSphere(format!("composite: {e}")))?;
    Ok(out)
}
