use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::FlagComplex;

use super::{NormalForm, Racg};

/// Side of a wall: `Plus` is the half-space containing the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn symbol(self) -> &'static str {
        match self {
            Side::Plus => "+",
            Side::Minus => "-",
        }
    }
}

/// Supporting walls of a chamber set and the panels realising them.
#[derive(Clone, Debug)]
pub struct WallReport {
    /// Reflections in ShortLex order.
    pub walls: Vec<NormalForm>,
    /// For each wall, the boundary panels `(w, s)` with `w ∈ C`, `ws ∉ C`.
    pub panels: Vec<Vec<(NormalForm, usize)>>,
}

impl Racg {
    /// Writes a reflection as `u s u⁻¹` with `u` shortest; `None` if `r`
    /// is not conjugate to a generator.
    pub fn reflection_root(&self, r: &NormalForm) -> Option<(NormalForm, usize)> {
        let mut cur = r.clone();
        let mut prefix = Vec::new();
        while cur.len() > 1 {
            let next = self.left_descents(&cur).into_iter().find_map(|t| {
                let c = self.multiply(&self.generator_times(t, &cur), &self.generator_element(t));
                (c.len() + 2 == cur.len()).then_some((t, c))
            });
            let (t, c) = next?;
            prefix.push(t);
            cur = c;
        }
        if cur.len() != 1 {
            return None;
        }
        Some((self.normal_form(&prefix), cur.letters()[0]))
    }

    pub fn is_reflection(&self, r: &NormalForm) -> bool {
        self.reflection_root(r).is_some()
    }

    /// `u s u⁻¹` in normal form.
    pub fn conjugate_generator(&self, u: &NormalForm, s: usize) -> NormalForm {
        self.multiply(&self.times_generator(u, s), &self.inverse(u))
    }

    /// Side of the wall of `r` containing the chamber `w`: `Plus` iff
    /// ℓ(rw) > ℓ(w).
    pub fn wall_halfspace(&self, r: &NormalForm, w: &NormalForm) -> Result<Side> {
        if !self.is_reflection(r) {
            return Err(Error::Precondition(format!("`{}` is not a reflection", self.render(r))));
        }
        Ok(if self.multiply(r, w).len() > w.len() { Side::Plus } else { Side::Minus })
    }

    /// Supporting walls of the chamber set `chambers`, after verifying that
    /// the set is convex: for every boundary panel, all chambers lie on the
    /// inner side of its wall.
    pub fn supporting_walls(&self, chambers: &[NormalForm]) -> Result<WallReport> {
        if chambers.is_empty() {
            return Err(Error::Precondition("empty chamber set".into()));
        }
        let set: HashSet<&NormalForm> = chambers.iter().collect();
        let mut by_wall: BTreeMap<NormalForm, Vec<(NormalForm, usize)>> = BTreeMap::new();
        for w in chambers {
            for s in 0..self.rank() {
                let ws = self.times_generator(w, s);
                if !set.contains(&ws) {
                    let r = self.conjugate_generator(w, s);
                    by_wall.entry(r).or_default().push((w.clone(), s));
                }
            }
        }
        for (r, panels) in &by_wall {
            let (w, _) = &panels[0];
            let inner = self.multiply(r, w).len() > w.len();
            if let Some(c) = chambers.iter().find(|c| (self.multiply(r, c).len() > c.len()) != inner) {
                return Err(Error::NotConvex(format!(
                    "chamber `{}` lies across the supporting wall of `{}` from `{}`",
                    self.render(c),
                    self.render(r),
                    self.render(w)
                )));
            }
        }
        let (walls, panels) = by_wall.into_iter().unzip();
        Ok(WallReport { walls, panels })
    }

    /// The nerve `L(C)`: vertices are the supporting walls, labelled by
    /// their normal forms, with an edge whenever two reflections commute.
    pub fn nerve_of_convex_union(&self, chambers: &[NormalForm]) -> Result<FlagComplex> {
        let report = self.supporting_walls(chambers)?;
        let walls = &report.walls;
        let mut edges = Vec::new();
        for i in 0..walls.len() {
            for j in i + 1..walls.len() {
                let ab = self.multiply(&walls[i], &walls[j]);
                if self.multiply(&ab, &ab).is_identity() {
                    edges.push((i, j));
                }
            }
        }
        let labels = walls.iter().map(|r| self.render(r)).collect();
        Ok(FlagComplex::from_indexed(labels, edges))
    }

    /// Chambers given as label words, one per entry.
    pub fn parse_chambers(&self, words: &[String]) -> Result<Vec<NormalForm>> {
        let set: BTreeSet<NormalForm> = words.iter().map(|w| self.normal_form_of(w)).collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }
}
