use serde::Serialize;

use super::{NormalForm, Racg};

/// The coset `w W_σ`, with `w` its shortest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphericalCoset {
    pub rep: NormalForm,
    pub simplex: Vec<usize>,
}

/// Spherical cosets with minimal representative in a ball, ordered by
/// inclusion.
#[derive(Clone, Debug)]
pub struct CosetPoset {
    pub cosets: Vec<SphericalCoset>,
}

#[derive(Serialize)]
struct CosetRow {
    rep: String,
    simplex: Vec<String>,
}

impl Racg {
    /// True iff `w` is the shortest element of `w W_σ`.
    pub fn is_minimal_in_coset(&self, w: &NormalForm, simplex: &[usize]) -> bool {
        let desc = self.right_descents(w);
        simplex.iter().all(|s| !desc.contains(s))
    }

    /// Shortest element of `w W_σ`: strip right descents lying in σ.
    pub fn minimal_coset_rep(&self, w: &NormalForm, simplex: &[usize]) -> NormalForm {
        let mut cur = w.clone();
        loop {
            let desc = self.right_descents(&cur);
            match simplex.iter().find(|s| desc.contains(s)) {
                Some(&s) => cur = self.times_generator(&cur, s),
                None => return cur,
            }
        }
    }

    /// Membership of `x` in the special subgroup `W_T`.
    pub fn in_special_subgroup(&self, x: &NormalForm, t: &[usize]) -> bool {
        x.letters().iter().all(|s| t.contains(s))
    }

    /// All `w W_σ` with ℓ(w) <= n, ordered by representative then simplex.
    pub fn spherical_cosets(&self, n: usize) -> CosetPoset {
        let simplices: Vec<Vec<usize>> = self.nerve().all_simplices().iter().flatten().cloned().collect();
        let mut cosets = Vec::new();
        for w in self.ball(n) {
            for sigma in &simplices {
                if self.is_minimal_in_coset(&w, sigma) {
                    cosets.push(SphericalCoset { rep: w.clone(), simplex: sigma.clone() });
                }
            }
        }
        CosetPoset { cosets }
    }

    /// `a ⊆ b` as cosets: σ ⊆ τ and `b.rep⁻¹ a.rep ∈ W_τ`.
    pub fn coset_le(&self, a: &SphericalCoset, b: &SphericalCoset) -> bool {
        a.simplex.iter().all(|s| b.simplex.contains(s))
            && self.in_special_subgroup(&self.multiply(&self.inverse(&b.rep), &a.rep), &b.simplex)
    }

    /// Rows for JSON output.
    pub fn coset_rows(&self, poset: &CosetPoset) -> serde_json::Value {
        let rows: Vec<CosetRow> = poset
            .cosets
            .iter()
            .map(|c| CosetRow { rep: self.render(&c.rep), simplex: self.nerve().labels_of(&c.simplex) })
            .collect();
        serde_json::to_value(rows).expect("serializable rows")
    }
}

impl CosetPoset {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Pairs `(i, j)` with coset `i` strictly contained in coset `j`.
    pub fn relations(&self, w: &Racg) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.cosets.iter().enumerate() {
            for (j, b) in self.cosets.iter().enumerate() {
                if i != j && a.simplex.len() < b.simplex.len() && w.coset_le(a, b) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::builders::*;

    #[test]
    fn identity_cosets_mirror_the_nerve() {
        let w = Racg::new(polygon(5));
        let p = w.spherical_cosets(0);
        assert_eq!(p.len(), 1 + 5 + 5);
        assert_eq!(p.relations(&w).len(), 5 + 5 + 10);
    }

    #[test]
    fn single_point() {
        let w = Racg::new(points(1));
        let p = w.spherical_cosets(1);
        assert_eq!(p.len(), 3);
        assert_eq!(p.relations(&w).len(), 2);
    }

    #[test]
    fn minimal_reps() {
        let w = Racg::new(polygon(4));
        let x = w.normal_form(&[0, 1]);
        assert!(w.minimal_coset_rep(&x, &[1, 2]).letters() == [0]);
    }
}
