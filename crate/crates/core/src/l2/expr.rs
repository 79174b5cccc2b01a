use std::fmt;

use crate::error::{Error, Result};
use crate::simplicial::{builders, FVector, FlagComplex};

/// Expression tree over the constructors with closed-form ℓ²-Betti rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum L2Expr {
    Empty,
    /// The full `k`-simplex.
    Simplex(usize),
    /// `k` isolated points.
    Points(usize),
    /// The `m`-gon, `m >= 4`.
    MGon(usize),
    Cone(Box<L2Expr>),
    Susp(Box<L2Expr>),
    Join(Box<L2Expr>, Box<L2Expr>),
    DisjointUnion(Box<L2Expr>, Box<L2Expr>),
    /// Double along the vertex with the given label in the realisation.
    DoubleV(Box<L2Expr>, String),
    /// Flag triangulation of a 2-sphere with `g + 1` holes bounded by the
    /// listed polygons.
    PlanarHoles(usize, Vec<usize>),
}

impl L2Expr {
    pub fn cone(e: L2Expr) -> Self {
        L2Expr::Cone(Box::new(e))
    }

    pub fn susp(e: L2Expr) -> Self {
        L2Expr::Susp(Box::new(e))
    }

    pub fn join(a: L2Expr, b: L2Expr) -> Self {
        L2Expr::Join(Box::new(a), Box::new(b))
    }

    pub fn union(a: L2Expr, b: L2Expr) -> Self {
        L2Expr::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn double(e: L2Expr, v: impl Into<String>) -> Self {
        L2Expr::DoubleV(Box::new(e), v.into())
    }

    /// Right-nested join of several factors; the empty join is `Empty`.
    pub fn join_all(mut factors: Vec<L2Expr>) -> Self {
        let Some(mut acc) = factors.pop() else { return L2Expr::Empty };
        while let Some(f) = factors.pop() {
            acc = L2Expr::join(f, acc);
        }
        acc
    }

    /// Right-nested disjoint union of several parts.
    pub fn union_all(mut parts: Vec<L2Expr>) -> Self {
        let Some(mut acc) = parts.pop() else { return L2Expr::Empty };
        while let Some(p) = parts.pop() {
            acc = L2Expr::union(p, acc);
        }
        acc
    }

    /// Structural well-formedness: polygon arity and hole counts.
    pub fn validate(&self) -> Result<()> {
        match self {
            L2Expr::MGon(m) if *m < 4 => Err(Error::Precondition(format!("a {m}-gon is not flag; need m >= 4"))),
            L2Expr::PlanarHoles(g, ms) => {
                if ms.len() != g + 1 {
                    return Err(Error::Precondition(format!(
                        "a sphere with {} holes needs {} boundary polygons, got {}",
                        g + 1,
                        g + 1,
                        ms.len()
                    )));
                }
                match ms.iter().find(|&&m| m < 4) {
                    Some(m) => Err(Error::Precondition(format!("boundary {m}-gon is not flag; need m >= 4"))),
                    None => Ok(()),
                }
            }
            L2Expr::Cone(e) | L2Expr::Susp(e) => e.validate(),
            L2Expr::DoubleV(e, v) => {
                e.validate()?;
                match e.realize() {
                    Some(k) if resolve_vertex(&k, v).is_none() => Err(Error::UnknownVertex(v.clone())),
                    None => Err(Error::Precondition("double needs a realisable argument".into())),
                    _ => Ok(()),
                }
            }
            L2Expr::Join(a, b) | L2Expr::DisjointUnion(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// True when the expression denotes the empty complex.
    pub fn is_empty_complex(&self) -> bool {
        match self {
            L2Expr::Empty | L2Expr::Points(0) => true,
            L2Expr::Join(a, b) | L2Expr::DisjointUnion(a, b) => a.is_empty_complex() && b.is_empty_complex(),
            _ => false,
        }
    }

    /// True when the expression denotes a simplex, the empty one included.
    pub fn is_simplex(&self) -> bool {
        match self {
            L2Expr::Empty | L2Expr::Simplex(_) => true,
            L2Expr::Points(k) => *k <= 1,
            L2Expr::MGon(_) | L2Expr::Susp(_) | L2Expr::PlanarHoles(..) => false,
            L2Expr::Cone(e) => e.is_simplex(),
            L2Expr::Join(a, b) => a.is_simplex() && b.is_simplex(),
            L2Expr::DisjointUnion(a, b) => {
                (a.is_empty_complex() && b.is_simplex()) || (b.is_empty_complex() && a.is_simplex())
            }
            L2Expr::DoubleV(..) => self.realize().is_some_and(|k| k.is_full_simplex()),
        }
    }

    /// Dimension of the denoted complex.
    pub fn dim(&self) -> isize {
        match self {
            L2Expr::Empty => -1,
            L2Expr::Simplex(k) => *k as isize,
            L2Expr::Points(k) => {
                if *k == 0 {
                    -1
                } else {
                    0
                }
            }
            L2Expr::MGon(_) => 1,
            L2Expr::Cone(e) | L2Expr::Susp(e) => e.dim() + 1,
            L2Expr::Join(a, b) => a.dim() + b.dim() + 1,
            L2Expr::DisjointUnion(a, b) => a.dim().max(b.dim()),
            L2Expr::DoubleV(e, _) => self.realize().map_or(e.dim(), |k| k.dim()),
            L2Expr::PlanarHoles(..) => 2,
        }
    }

    /// The flag complex denoted, when it has a canonical construction.
    pub fn realize(&self) -> Option<FlagComplex> {
        Some(match self {
            L2Expr::Empty => FlagComplex::empty(),
            L2Expr::Simplex(k) => builders::simplex(*k as isize),
            L2Expr::Points(k) => builders::points(*k),
            L2Expr::MGon(m) if *m >= 4 => builders::polygon(*m),
            L2Expr::MGon(_) => return None,
            L2Expr::Cone(e) => e.realize()?.cone(),
            L2Expr::Susp(e) => e.realize()?.suspension(),
            L2Expr::Join(a, b) => a.realize()?.join(&b.realize()?),
            L2Expr::DisjointUnion(a, b) => a.realize()?.disjoint_union(&b.realize()?),
            L2Expr::DoubleV(e, v) => {
                let k = e.realize()?;
                k.double_along_vertex(resolve_vertex(&k, v)?).ok()?
            }
            L2Expr::PlanarHoles(..) => return None,
        })
    }

    /// f-vector from the join, cone and suspension identities where they
    /// apply; doubles use their realisation.
    pub fn f_vector(&self) -> Option<FVector> {
        Some(match self {
            L2Expr::Empty => FVector::new(vec![1]),
            L2Expr::Simplex(k) => {
                let n = *k as u64 + 1;
                let mut row = vec![1u64];
                for i in 0..n {
                    row.push(row[i as usize] * (n - i) / (i + 1));
                }
                FVector::new(row)
            }
            L2Expr::Points(k) => FVector::new(vec![1, *k as u64]),
            L2Expr::MGon(m) => FVector::new(vec![1, *m as u64, *m as u64]),
            L2Expr::Cone(e) => e.f_vector()?.cone(),
            L2Expr::Susp(e) => e.f_vector()?.suspension(),
            L2Expr::Join(a, b) => a.f_vector()?.join(&b.f_vector()?),
            L2Expr::DisjointUnion(a, b) => {
                let (fa, fb) = (a.f_vector()?, b.f_vector()?);
                let len = fa.as_slice().len().max(fb.as_slice().len());
                let mut out = vec![1u64];
                for i in 1..len {
                    out.push(fa.as_slice().get(i).unwrap_or(&0) + fb.as_slice().get(i).unwrap_or(&0));
                }
                FVector::new(out)
            }
            L2Expr::DoubleV(..) => self.realize()?.f_vector(),
            L2Expr::PlanarHoles(..) => return None,
        })
    }
}

/// A vertex by label, or by decimal index when no label matches.
pub(crate) fn resolve_vertex(k: &FlagComplex, v: &str) -> Option<usize> {
    k.index_of(v).or_else(|| v.parse::<usize>().ok().filter(|&i| i < k.vertex_count()))
}

impl fmt::Display for L2Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            L2Expr::Empty => write!(f, "(empty)"),
            L2Expr::Simplex(k) => write!(f, "(simplex {k})"),
            L2Expr::Points(k) => write!(f, "(points {k})"),
            L2Expr::MGon(m) => write!(f, "(gon {m})"),
            L2Expr::Cone(e) => write!(f, "(cone {e})"),
            L2Expr::Susp(e) => write!(f, "(susp {e})"),
            L2Expr::Join(a, b) => write!(f, "(join {a} {b})"),
            L2Expr::DisjointUnion(a, b) => write!(f, "(union {a} {b})"),
            L2Expr::DoubleV(e, v) => write!(f, "(double {e} {v})"),
            L2Expr::PlanarHoles(g, ms) => {
                write!(f, "(planar {g}")?;
                for m in ms {
                    write!(f, " {m}")?;
                }
                write!(f, ")")
            }
        }
    }
}
