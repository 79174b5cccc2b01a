//! The positive region `D₊ ⊂ ∂D` of an orientation of the standard
//! hypersurfaces and the disk test for it.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::domain::ChamberDomain;
use crate::coxeter::Racg;
use crate::error::{Error, Result};
use crate::homology::{has_sphere_homology, is_homology_ball, BallReport};
use crate::io::simplicial_to_json;
use crate::simplicial::SimplicialComplex;

/// Environment variable bounding the exhaustive orientation search.
pub const ORIENTATION_LIMIT_VAR: &str = "RACG_MAX_ORIENTATION_CLASSES";
const DEFAULT_ORIENTATION_LIMIT: usize = 20;

/// One sign per hypersurface class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationAssignment {
    pub signs: Vec<i8>,
}

impl OrientationAssignment {
    pub fn uniform(m: usize) -> Self {
        OrientationAssignment { signs: vec![1; m] }
    }

    /// Parses a string of `+` and `-`.
    pub fn parse(text: &str) -> Result<Self> {
        let signs = text
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Parse(format!("orientation sign `{other}`; use + or -"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(OrientationAssignment { signs })
    }

    pub fn flipped(&self) -> Self {
        OrientationAssignment { signs: self.signs.iter().map(|s| -s).collect() }
    }

    pub fn render(&self) -> String {
        self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
    }
}

#[derive(Clone, Debug)]
pub struct DplusReport {
    pub is_disk: bool,
    pub dplus: SimplicialComplex,
    pub dminus: SimplicialComplex,
    pub plus: BallReport,
    pub minus: BallReport,
    /// `D₊ ∩ D₋` has the homology of `S^{n−2}`.
    pub interface_sphere: bool,
    pub positive_panels: usize,
    pub negative_panels: usize,
    /// Dimension `n` of the Davis complex.
    pub dimension: usize,
}

impl DplusReport {
    /// Disk verdicts in dimension 4 and up rest on homology and
    /// collapsibility alone.
    pub fn homology_level_only(&self) -> bool {
        self.dimension >= 4
    }

    pub fn conclusion(&self) -> String {
        if self.is_disk {
            let mut s = "D+ is a disk: the commutator cover fibers over the circle with fiber N_{12...m}".to_string();
            if self.homology_level_only() {
                s.push_str(" (homology-level only)");
            }
            s
        } else {
            "D+ is not a disk: no certificate".to_string()
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "is_disk": self.is_disk,
            "conclusion": self.conclusion(),
            "homology_level_only": self.homology_level_only(),
            "positive_panels": self.positive_panels,
            "negative_panels": self.negative_panels,
            "dplus_ball": format!("{:?}", self.plus.verdict),
            "dminus_ball": format!("{:?}", self.minus.verdict),
            "interface_sphere": self.interface_sphere,
            "dplus": simplicial_to_json(&self.dplus),
        })
    }
}

/// Facets of the barycentric panel `w K_s`: chains `{s} ⊂ σ_1 ⊂ … ⊂ τ`
/// of simplices of `L` containing `s`, each simplex named by its coset
/// `w W_σ`.
fn panel_facets(w: &Racg, chamber: &crate::coxeter::NormalForm, s: usize) -> Vec<Vec<String>> {
    let nerve = w.nerve();
    let name = |sigma: &[usize]| {
        let rep = w.minimal_coset_rep(chamber, sigma);
        let labels: Vec<&str> = sigma.iter().map(|&v| nerve.label(v)).collect();
        format!("{}|{}", w.render(&rep), labels.join(","))
    };
    let mut out = Vec::new();
    for tau in nerve.maximal_simplices().into_iter().filter(|t| t.contains(&s)) {
        let rest: Vec<usize> = tau.iter().copied().filter(|&v| v != s).collect();
        for order in permutations(&rest) {
            let mut sigma = vec![s];
            let mut chain = vec![name(&sigma)];
            for v in order {
                sigma.push(v);
                sigma.sort_unstable();
                chain.push(name(&sigma));
            }
            out.push(chain);
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
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

fn faces(k: &SimplicialComplex) -> BTreeSet<Vec<String>> {
    k.all_simplices()
        .iter()
        .flatten()
        .map(|s| {
            let mut l: Vec<String> = s.iter().map(|&v| k.labels()[v].clone()).collect();
            l.sort();
            l
        })
        .collect()
}

/// Disk test for an arbitrary partition of the panels of `∂D`
/// (`positive[k]` for panel `k`).
pub fn dplus_from_panels(w: &Racg, d: &ChamberDomain, positive: &[bool]) -> Result<DplusReport> {
    if positive.len() != d.panels.len() {
        return Err(Error::Precondition(format!("{} panel signs given, domain has {}", positive.len(), d.panels.len())));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (panel, &pos) in d.panels.iter().zip(positive) {
        let f = panel_facets(w, &panel.chamber, panel.generator);
        if pos {
            plus.extend(f);
        } else {
            minus.extend(f);
        }
    }
    let dplus = SimplicialComplex::from_labeled(&plus)?;
    let dminus = SimplicialComplex::from_labeled(&minus)?;
    let common: Vec<Vec<String>> = faces(&dplus).intersection(&faces(&dminus)).cloned().collect();
    let interface = SimplicialComplex::from_labeled(&common)?;
    let dimension = (w.nerve().dim() + 1).max(0) as usize;
    let plus_report = is_homology_ball(&dplus);
    let minus_report = is_homology_ball(&dminus);
    let interface_sphere = has_sphere_homology(&interface, dimension as isize - 2);
    let positive_panels = positive.iter().filter(|&&b| b).count();
    let is_disk = positive_panels > 0
        && positive_panels < positive.len()
        && plus_report.is_ball()
        && minus_report.is_ball()
        && interface_sphere;
    Ok(DplusReport {
        is_disk,
        dplus,
        dminus,
        plus: plus_report,
        minus: minus_report,
        interface_sphere,
        positive_panels,
        negative_panels: positive.len() - positive_panels,
        dimension,
    })
}

/// Sign of each panel under `o`: positive when the chosen normal points
/// out of `D`.
pub fn panel_signs(d: &ChamberDomain, o: &OrientationAssignment) -> Result<Vec<bool>> {
    if o.signs.len() != d.class_count() {
        return Err(Error::Precondition(format!(
            "orientation has {} signs, there are {} hypersurface classes",
            o.signs.len(),
            d.class_count()
        )));
    }
    Ok(d.panels.iter().map(|p| p.outward_is_reference == (o.signs[p.class] > 0)).collect())
}

pub fn dplus_check(w: &Racg, d: &ChamberDomain, o: &OrientationAssignment) -> Result<DplusReport> {
    dplus_from_panels(w, d, &panel_signs(d, o)?)
}

/// The first assignment (binary order, bit `i` set meaning class `i`
/// gets `−`) whose positive region is a disk.
pub fn search_orientations(w: &Racg, d: &ChamberDomain) -> Result<Option<OrientationAssignment>> {
    let m = d.class_count();
    let limit = std::env::var(ORIENTATION_LIMIT_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORIENTATION_LIMIT)
        .min(40);
    if m > limit {
        return Err(Error::ResourceLimit(format!(
            "{m} hypersurface classes; search limit is {limit} (set {ORIENTATION_LIMIT_VAR})"
        )));
    }
    for mask in 0u64..1 << m {
        let o = OrientationAssignment { signs: (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect() };
        if dplus_check(w, d, &o)?.is_disk {
            return Ok(Some(o));
        }
    }
    Ok(None)
}
