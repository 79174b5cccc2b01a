//! The fundamental domain `D = D(p)` for the commutator subgroup,
//! obtained by doubling the base chamber along `Σ(s_1), …, Σ(s_p)`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::coxeter::{NormalForm, Racg};
use crate::error::{Error, Result};

/// Environment variable bounding the number of generators for `D`.
pub const DOMAIN_LIMIT_VAR: &str = "RACG_MAX_DOMAIN_GENERATORS";
const DEFAULT_DOMAIN_LIMIT: usize = 14;

fn domain_limit() -> usize {
    std::env::var(DOMAIN_LIMIT_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_DOMAIN_LIMIT).min(30)
}

/// A codimension-one face of `∂D`: the panel of `chamber` across
/// `generator`, lying in the wall of the reflection `wall`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Panel {
    pub chamber: NormalForm,
    pub generator: usize,
    pub wall: NormalForm,
    /// Index of the panel identified with this one.
    pub partner: usize,
    /// The element of the commutator subgroup carrying this panel to
    /// its partner.
    pub gamma: NormalForm,
    /// Standard hypersurface class.
    pub class: usize,
    /// True if the outward normal agrees with the reference
    /// coorientation of the class.
    pub outward_is_reference: bool,
}

/// A standard hypersurface: walls of type `generator` whose adjacent
/// chambers have abelianization `key` outside the star of `generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceClass {
    pub generator: usize,
    pub key: u64,
    pub panels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingStep {
    pub generator: usize,
    pub chambers: usize,
}

#[derive(Clone, Debug)]
pub struct ChamberDomain {
    pub chambers: Vec<NormalForm>,
    pub log: Vec<DoublingStep>,
    pub panels: Vec<Panel>,
    pub classes: Vec<HypersurfaceClass>,
}

fn star_mask(w: &Racg, s: usize) -> u64 {
    w.nerve().neighbors(s).iter().fold(1u64 << s, |m, &t| m | 1 << t)
}

/// Builds `D(p)` and checks that it is convex, that its chambers map
/// bijectively onto `(Z/2)^p`, and that its panels are paired by
/// elements of the commutator subgroup.
pub fn doubling_domain(w: &Racg) -> Result<ChamberDomain> {
    let p = w.rank();
    let limit = domain_limit();
    if p > limit {
        return Err(Error::ResourceLimit(format!(
            "the domain has 2^{p} chambers; limit is {limit} generators (set {DOMAIN_LIMIT_VAR})"
        )));
    }
    let mut chambers = vec![NormalForm::identity()];
    let mut log = Vec::with_capacity(p);
    for s in 0..p {
        // Σ(s) must support D(i): every chamber on the side of the base chamber.
        if let Some(c) = chambers.iter().find(|c| w.left_descents(c).contains(&s)) {
            return Err(Error::LemmaViolation(format!(
                "wall of {} does not support the domain at chamber {}",
                w.generator_label(s),
                w.render(c)
            )));
        }
        let doubled: Vec<NormalForm> = chambers.iter().map(|c| w.generator_times(s, c)).collect();
        chambers.extend(doubled);
        log.push(DoublingStep { generator: s, chambers: chambers.len() });
    }

    let by_ab: BTreeMap<u64, usize> = chambers.iter().enumerate().map(|(i, c)| (w.abelianization(c), i)).collect();
    if by_ab.len() != chambers.len() || chambers.len() != 1usize << p {
        return Err(Error::LemmaViolation("chambers do not map bijectively onto (Z/2)^p".into()));
    }
    w.supporting_walls(&chambers).map_err(|e| Error::LemmaViolation(format!("domain is not convex: {e}")))?;

    let index: BTreeMap<&NormalForm, usize> = chambers.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut panels = Vec::new();
    let mut panel_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, c) in chambers.iter().enumerate() {
        for s in 0..p {
            if !index.contains_key(&w.times_generator(c, s)) {
                panel_index.insert((i, s), panels.len());
                panels.push(Panel {
                    chamber: c.clone(),
                    generator: s,
                    wall: w.conjugate_generator(c, s),
                    partner: usize::MAX,
                    gamma: NormalForm::identity(),
                    class: usize::MAX,
                    outward_is_reference: w.abelianization(c) >> s & 1 == 0,
                });
            }
        }
    }

    let mut classes: Vec<HypersurfaceClass> = Vec::new();
    let mut class_of: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    for k in 0..panels.len() {
        let (c, s) = (panels[k].chamber.clone(), panels[k].generator);
        let ab = w.abelianization(&c);
        let j = by_ab[&(ab ^ 1 << s)];
        let partner = *panel_index.get(&(j, s)).ok_or_else(|| {
            Error::LemmaViolation(format!("panel of {} across {} has no partner", w.render(&c), w.generator_label(s)))
        })?;
        // γ = w' s w^{-1} carries chamber w s onto w' and the panel with it.
        let gamma = w.multiply(&w.times_generator(&chambers[j], s), &w.inverse(&c));
        if w.abelianization(&gamma) != 0 {
            return Err(Error::LemmaViolation("pairing element is not in the commutator subgroup".into()));
        }
        panels[k].partner = partner;
        panels[k].gamma = gamma;
        let key = (s, ab & !star_mask(w, s));
        let class = *class_of.entry(key).or_insert_with(|| {
            classes.push(HypersurfaceClass { generator: s, key: key.1, panels: Vec::new() });
            classes.len() - 1
        });
        panels[k].class = class;
        classes[class].panels.push(k);
    }
    for (k, panel) in panels.iter().enumerate() {
        let q = &panels[panel.partner];
        if q.partner != k || panel.partner == k || q.outward_is_reference == panel.outward_is_reference {
            return Err(Error::LemmaViolation("panel pairing is not an orientation-reversing involution".into()));
        }
    }
    Ok(ChamberDomain { chambers, log, panels, classes })
}

impl ChamberDomain {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self, w: &Racg) -> Value {
        json!({
            "chambers": self.chambers.iter().map(|c| w.render(c)).collect::<Vec<_>>(),
            "doubling": self.log.iter().map(|s| json!({
                "generator": w.generator_label(s.generator),
                "chambers": s.chambers,
            })).collect::<Vec<_>>(),
            "panels": self.panels.iter().map(|p| json!({
                "chamber": w.render(&p.chamber),
                "generator": w.generator_label(p.generator),
                "wall": w.render(&p.wall),
                "partner": p.partner,
                "gamma": w.render(&p.gamma),
                "class": p.class,
            })).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(|c| json!({
                "generator": w.generator_label(c.generator),
                "panels": c.panels,
            })).collect::<Vec<_>>(),
        })
    }
}
