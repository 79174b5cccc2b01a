//! JSON exchange formats:
//! `{"format":"flag-graph","vertices":[...],"edges":[[a,b],...]}` and
//! `{"format":"simplicial","maximal_simplices":[[...],...]}`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::simplicial::{FlagComplex, SimplicialComplex};

/// A parsed complex in either exchange format.
#[derive(Clone, Debug)]
pub enum Complex {
    Flag(FlagComplex),
    Simplicial(SimplicialComplex),
}

impl Complex {
    /// The flag complex. Simplicial input must be flag unless
    /// `assume_flag` is set, in which case its 1-skeleton is used.
    pub fn into_flag(self, assume_flag: bool) -> Result<FlagComplex> {
        match self {
            Complex::Flag(f) => Ok(f),
            Complex::Simplicial(s) => {
                if assume_flag {
                    let edges: Vec<(usize, usize)> = s.simplices(1).iter().map(|e| (e[0], e[1])).collect();
                    Ok(FlagComplex::from_indexed(s.labels().to_vec(), edges))
                } else {
                    s.to_flag()
                }
            }
        }
    }

    pub fn to_simplicial(&self) -> SimplicialComplex {
        match self {
            Complex::Flag(f) => f.to_simplicial(),
            Complex::Simplicial(s) => s.clone(),
        }
    }
}

fn label(v: &Value, field: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("field `{field}`: expected a vertex label, got {other}"))),
    }
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("field `{field}`: expected an array")))
}

/// Parses either exchange format.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    complex_from_value(&v)
}

/// Parses an already decoded JSON value.
pub fn complex_from_value(v: &Value) -> Result<Complex> {
    let format = v.get("format").and_then(Value::as_str).ok_or_else(|| Error::Parse("missing field `format`".into()))?;
    match format {
        "flag-graph" => {
            let vertices = array(v.get("vertices").unwrap_or(&Value::Null), "vertices")?
                .iter()
                .enumerate()
                .map(|(i, x)| label(x, &format!("vertices[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let edges = array(v.get("edges").unwrap_or(&json!([])), "edges")?
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let field = format!("edges[{i}]");
                    match array(e, &field)?.as_slice() {
                        [a, b] => {
                            let (a, b) = (label(a, &field)?, label(b, &field)?);
                            if let Some(x) = [&a, &b].into_iter().find(|x| !vertices.contains(*x)) {
                                return Err(Error::Parse(format!("field `{field}`: unknown vertex `{x}`")));
                            }
                            Ok((a, b))
                        }
                        _ => Err(Error::Parse(format!("field `{field}`: an edge has exactly two endpoints"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Complex::Flag(FlagComplex::new(&vertices, &edges)?))
        }
        "simplicial" => {
            let sims = array(v.get("maximal_simplices").unwrap_or(&Value::Null), "maximal_simplices")?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let field = format!("maximal_simplices[{i}]");
                    array(s, &field)?.iter().map(|x| label(x, &field)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mut labels: Vec<String> = Vec::new();
            if let Some(extra) = v.get("vertices") {
                for (i, x) in array(extra, "vertices")?.iter().enumerate() {
                    labels.push(label(x, &format!("vertices[{i}]"))?);
                }
            }
            for l in sims.iter().flatten() {
                if !labels.contains(l) {
                    labels.push(l.clone());
                }
            }
            let facets = sims
                .iter()
                .map(|s| s.iter().map(|l| labels.iter().position(|x| x == l).unwrap()).collect())
                .collect();
            let k = SimplicialComplex::from_indexed(labels, facets);
            Ok(Complex::Simplicial(k))
        }
        other => Err(Error::Parse(format!("field `format`: unknown format `{other}`"))),
    }
}

pub fn flag_to_json(l: &FlagComplex) -> Value {
    let edges: Vec<[&str; 2]> = l.edges().into_iter().map(|(a, b)| [l.label(a), l.label(b)]).collect();
    json!({ "format": "flag-graph", "vertices": l.labels(), "edges": edges })
}

pub fn simplicial_to_json(k: &SimplicialComplex) -> Value {
    let sims: Vec<Vec<&str>> =
        k.facets().iter().map(|f| f.iter().map(|&v| k.labels()[v].as_str()).collect()).collect();
    json!({ "format": "simplicial", "vertices": k.labels(), "maximal_simplices": sims })
}
