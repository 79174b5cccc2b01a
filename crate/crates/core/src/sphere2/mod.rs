//! Certified decomposition of flag 2-spheres.
//!
//! A flag 2-sphere is reduced recursively: suspensions of a 4- or 5-gon
//! are leaves; otherwise the sphere is cut along an empty 4-circuit into
//! two smaller capped spheres; if there is no empty 4-circuit the
//! valence-4 vertices are removed and the resulting cellulation is
//! checked against the Andreev-type conditions.

mod compose;
mod dual;
mod verify;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::homology::is_ghs;
use crate::io::flag_to_json;
use crate::rational::{render, Q};
use crate::simplicial::FlagComplex;

pub use compose::square_compose;
pub use dual::{dual_cell_check, DualCellReport};
pub use verify::{verify, VerifySummary};

pub const CERTIFICATE_FORMAT: &str = "s2-certificate";

/// A decomposition certificate, serialised as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub root: CertNode,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertNode {
    /// Suspension of a `gon`-gon with the given poles.
    Suspension { complex: Value, kappa: String, gon: usize, poles: [String; 2] },
    /// Cut along `circuit` (cyclic order); child `i` carries the cone
    /// vertex `caps[i]` over the circuit.
    SquareDecomposition {
        complex: Value,
        kappa: String,
        circuit: [String; 4],
        caps: [String; 2],
        children: Vec<CertNode>,
    },
    /// No empty 4-circuit; `valence_four` is the removed vertex set.
    AndreevBase { complex: Value, kappa: String, valence_four: Vec<String>, checks: DualCellReport },
}

impl CertNode {
    pub fn kind(&self) -> &'static str {
        match self {
            CertNode::Suspension { .. } => "suspension",
            CertNode::SquareDecomposition { .. } => "square_decomposition",
            CertNode::AndreevBase { .. } => "andreev_base",
        }
    }

    pub fn children(&self) -> &[CertNode] {
        match self {
            CertNode::SquareDecomposition { children, .. } => children,
            _ => &[],
        }
    }

    pub fn complex(&self) -> &Value {
        match self {
            CertNode::Suspension { complex, .. }
            | CertNode::SquareDecomposition { complex, .. }
            | CertNode::AndreevBase { complex, .. } => complex,
        }
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&CertNode> {
        match self {
            CertNode::SquareDecomposition { children, .. } => children.iter().flat_map(|c| c.leaves()).collect(),
            _ => vec![self],
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
    }
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let cert: Certificate = serde_json::from_str(text)
            .map_err(|e| Error::InvalidCertificate(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        if cert.format != CERTIFICATE_FORMAT {
            return Err(Error::InvalidCertificate(format!("unknown format `{}`", cert.format)));
        }
        Ok(cert)
    }
}

/// Checks that `l` is a flag 2-sphere: pure of dimension 2, a
/// homology manifold with circle links, connected, with χ = 2.
pub fn check_flag_2_sphere(l: &FlagComplex) -> Result<()> {
    if l.dim() != 2 {
        return Err(Error::NotSphere(format!("dimension is {}, not 2", l.dim())));
    }
    let k = l.to_simplicial();
    if !k.is_pure() {
        return Err(Error::NotSphere("not pure".into()));
    }
    for e in l.simplices(1) {
        let n = l.link_vertices(e)?.len();
        if n != 2 {
            return Err(Error::NotSphere(format!(
                "edge {{{}, {}}} lies in {n} triangles",
                l.label(e[0]),
                l.label(e[1])
            )));
        }
    }
    if !l.is_connected() {
        return Err(Error::NotSphere("not connected".into()));
    }
    let chi = l.f_vector().euler_characteristic();
    if chi != 2 {
        return Err(Error::NotSphere(format!("Euler characteristic {chi}")));
    }
    if !is_ghs(&k, 2)? {
        return Err(Error::NotSphere("some link is not a homology sphere".into()));
    }
    Ok(())
}

/// If `l` is the suspension of a 4- or 5-gon, returns the poles and `m`.
/// Detected through the join decomposition given by the components of
/// the complement graph.
pub fn suspension_leaf(l: &FlagComplex) -> Option<([usize; 2], usize)> {
    let comps = l.complement_components();
    for c in &comps {
        if c.len() != 2 {
            continue;
        }
        let rest: Vec<usize> = (0..l.vertex_count()).filter(|v| !c.contains(v)).collect();
        let m = rest.len();
        if !(m == 4 || m == 5) {
            continue;
        }
        let base = l.full_subcomplex(&rest);
        let cycle = base.is_connected() && (0..m).all(|v| base.valence(v) == 2);
        if cycle {
            return Some(([c[0], c[1]], m));
        }
    }
    None
}

/// Builds a certificate for a flag 2-sphere. Fails with
/// [`Error::NotSphere`] on bad input and [`Error::LemmaViolation`] if a
/// step that is guaranteed by theory does not go through.
pub fn certify(l: &FlagComplex) -> Result<Certificate> {
    check_flag_2_sphere(l)?;
    Ok(Certificate { format: CERTIFICATE_FORMAT.into(), root: certify_node(l)? })
}

fn certify_node(l: &FlagComplex) -> Result<CertNode> {
    let kappa = l.kappa();
    if kappa != Q::from_integer(0.into()) {
        return Err(Error::LemmaViolation(format!("κ = {} on a flag 2-sphere", render(&kappa))));
    }
    let complex = flag_to_json(l);
    let kappa = render(&kappa);
    if let Some((poles, gon)) = suspension_leaf(l) {
        let poles = [l.label(poles[0]).to_string(), l.label(poles[1]).to_string()];
        return Ok(CertNode::Suspension { complex, kappa, gon, poles });
    }
    let circuits = l.empty_circuits_4();
    if let Some(circuit) = circuits.iter().min_by_key(|c| {
        let mut ls: Vec<&str> = c.iter().map(|&v| l.label(v)).collect();
        ls.sort_unstable();
        ls
    }) {
        let (children, caps) = split_along(l, circuit)?;
        let mut nodes = Vec::with_capacity(2);
        for child in &children {
            if child.vertex_count() >= l.vertex_count() {
                return Err(Error::LemmaViolation("cutting along an empty 4-circuit did not shrink".into()));
            }
            check_flag_2_sphere(child)
                .map_err(|e| Error::LemmaViolation(format!("capped piece is not a flag 2-sphere: {e}")))?;
            nodes.push(certify_node(child)?);
        }
        return Ok(CertNode::SquareDecomposition {
            complex,
            kappa,
            circuit: circuit.map(|v| l.label(v).to_string()),
            caps,
            children: nodes,
        });
    }
    let t: Vec<usize> = (0..l.vertex_count()).filter(|&v| l.valence(v) == 4).collect();
    for (i, &a) in t.iter().enumerate() {
        for &b in &t[i + 1..] {
            if l.is_adjacent(a, b) {
                return Err(Error::LemmaViolation(format!(
                    "adjacent valence-4 vertices {} and {} without an empty 4-circuit",
                    l.label(a),
                    l.label(b)
                )));
            }
        }
    }
    let checks = dual::dual_checks(l, &t);
    if !checks.all_pass() {
        return Err(Error::LemmaViolation(format!("cellulation check failed: {checks:?}")));
    }
    Ok(CertNode::AndreevBase { complex, kappa, valence_four: t.iter().map(|&v| l.label(v).to_string()).collect(), checks })
}

/// Cuts `l` along the 4-circuit and caps both sides with a cone vertex.
fn split_along(l: &FlagComplex, circuit: &[usize; 4]) -> Result<(Vec<FlagComplex>, [String; 2])> {
    let n = l.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if circuit.contains(&s) || comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in l.neighbors(v) {
                if !circuit.contains(&u) && comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        comps.push(members);
    }
    if comps.len() != 2 {
        return Err(Error::LemmaViolation(format!("4-circuit separates the sphere into {} pieces", comps.len())));
    }
    let cap = l.fresh_label("cap");
    let mut children = Vec::with_capacity(2);
    for members in &comps {
        let mut verts = members.clone();
        verts.extend_from_slice(circuit);
        verts.sort_unstable();
        let sub = l.full_subcomplex(&verts);
        let mut labels = sub.labels().to_vec();
        let apex = labels.len();
        labels.push(cap.clone());
        let mut edges = sub.edges();
        for &c in circuit {
            edges.push((sub.index_of(l.label(c)).expect("circuit vertex kept"), apex));
        }
        children.push(FlagComplex::from_indexed(labels, edges));
    }
    Ok((children, [cap.clone(), cap]))
}

#[cfg(test)]
mod tests;
