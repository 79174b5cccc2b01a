use std::collections::HashMap;

use crate::coxeter::{NormalForm, Racg};

use super::cubical::{Cell, CubicalComplex};

impl Racg {
    /// Finite piece of the Davis complex: the cubes `w W_σ` all of whose
    /// elements have length at most `n` (so ℓ(w) + |σ| ≤ n). Vertex cells
    /// are the group elements; the cube `w W_σ` has faces `w W_{σ−s}` and
    /// `ws W_{σ−s}`.
    pub fn davis_ball(&self, n: usize) -> CubicalComplex {
        let elements = self.ball(n);
        let simplices: Vec<Vec<usize>> = self.nerve().all_simplices().iter().flatten().cloned().collect();
        let mut keys: Vec<(NormalForm, Vec<usize>)> = Vec::new();
        for w in &elements {
            for sigma in &simplices {
                if w.len() + sigma.len() <= n && self.is_minimal_in_coset(w, sigma) {
                    keys.push((w.clone(), sigma.clone()));
                }
            }
        }
        keys.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.cmp(b)));
        let id: HashMap<(NormalForm, Vec<usize>), usize> =
            keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let cells = keys
            .iter()
            .map(|(w, sigma)| {
                let mut faces = Vec::with_capacity(2 * sigma.len());
                for (i, &s) in sigma.iter().enumerate() {
                    let mut rest = sigma.clone();
                    rest.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let ws = self.times_generator(w, s);
                    faces.push((id[&(ws, rest.clone())], sign));
                    faces.push((id[&(w.clone(), rest)], -sign));
                }
                let mut vertices: Vec<usize> = (0u64..1 << sigma.len())
                    .map(|mask| {
                        let u: Vec<usize> = (0..sigma.len()).filter(|b| mask >> b & 1 == 1).map(|b| sigma[b]).collect();
                        id[&(self.multiply(w, &self.normal_form(&u)), Vec::new())]
                    })
                    .collect();
                vertices.sort_unstable();
                let label = format!("{}|{{{}}}", self.render(w), self.nerve().labels_of(sigma).join(","));
                Cell { label, dim: sigma.len(), faces, vertices }
            })
            .collect();
        CubicalComplex::from_cells(cells)
    }
}
