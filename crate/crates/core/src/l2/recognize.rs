use crate::homology::{is_pseudomanifold, BettiVector};
use crate::rational::Q;
use crate::simplicial::FlagComplex;

use super::L2Expr;

/// Maps a flag complex into the calculus, trying in order: empty,
/// simplex, points, polygon, cone, join (via components of the
/// complement graph), disjoint union. `None` when some piece is not
/// recognised.
pub fn recognize(l: &FlagComplex) -> Option<L2Expr> {
    let n = l.vertex_count();
    if n == 0 {
        return Some(L2Expr::Empty);
    }
    if l.is_full_simplex() {
        return Some(L2Expr::Simplex(n - 1));
    }
    if l.edge_count() == 0 {
        return Some(L2Expr::Points(n));
    }
    if n >= 4 && l.is_connected() && (0..n).all(|v| l.valence(v) == 2) {
        return Some(L2Expr::MGon(n));
    }
    if let Some(apex) = (0..n).find(|&v| l.valence(v) + 1 == n) {
        return Some(L2Expr::cone(recognize(&l.minus(&[apex]))?));
    }
    let factors = l.complement_components();
    if factors.len() > 1 {
        let parts = factors.iter().map(|c| recognize(&l.full_subcomplex(c))).collect::<Option<Vec<_>>>()?;
        return Some(L2Expr::join_all(parts));
    }
    let comps = l.components();
    if comps.len() > 1 {
        let parts = comps.iter().map(|c| recognize(&l.full_subcomplex(c))).collect::<Option<Vec<_>>>()?;
        return Some(L2Expr::union_all(parts));
    }
    None
}

/// Degrees fixed by the general vanishing rules: `β_0 = 0` for nonempty
/// non-simplices, and `β_{d+1} = 0` when `L` is a `d`-dimensional
/// pseudomanifold. Other degrees are unknown.
pub fn vanishing_rules(l: &FlagComplex) -> BettiVector {
    let dim = l.dim();
    let mut out = BettiVector::unknown((dim + 2).max(1) as usize);
    if l.vertex_count() > 0 && !l.is_full_simplex() {
        out.set(0, Some(Q::from_integer(0.into())));
    }
    if dim >= 0 && is_pseudomanifold(&l.to_simplicial()).unwrap_or(false) {
        out.set((dim + 1) as usize, Some(Q::from_integer(0.into())));
    }
    out
}
