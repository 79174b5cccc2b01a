//! Right-angled Coxeter groups: word problem, enumeration, spherical
//! cosets, reflections and walls.

mod cosets;
mod walls;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

pub use cosets::{CosetPoset, SphericalCoset};
pub use walls::{Side, WallReport};

use crate::error::{Error, Result};
use crate::simplicial::FlagComplex;

/// A reduced word in ShortLex-least form. Letters are generator indices
/// (vertex indices of the nerve). Ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NormalForm(Vec<usize>);

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Word length ℓ(w).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The right-angled Coxeter group with nerve `L`.
#[derive(Clone, Debug)]
pub struct Racg {
    nerve: FlagComplex,
}

impl Racg {
    pub fn new(nerve: FlagComplex) -> Self {
        Racg { nerve }
    }

    pub fn nerve(&self) -> &FlagComplex {
        &self.nerve
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.nerve.vertex_count()
    }

    pub fn generator(&self, label: &str) -> Result<usize> {
        self.nerve.vertex(label)
    }

    pub fn generator_label(&self, s: usize) -> &str {
        self.nerve.label(s)
    }

    /// `s` and `t` commute (equal or joined by an edge).
    pub fn commute(&self, s: usize, t: usize) -> bool {
        s == t || self.nerve.is_adjacent(s, t)
    }

    /// Parses a word of generator labels separated by whitespace, commas
    /// or dots. `ε`, `e` and `1` denote the identity when used alone.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let t = text.trim();
        if t.is_empty() || t == "ε" || (matches!(t, "e" | "1") && self.nerve.index_of(t).is_none()) {
            return Ok(Vec::new());
        }
        t.split(|c: char| c.is_whitespace() || c == ',' || c == '.')
            .filter(|s| !s.is_empty())
            .map(|s| self.generator(s))
            .collect()
    }

    /// Canonical form of a word: free reduction modulo commutations, then
    /// the ShortLex-least rearrangement.
    pub fn normal_form(&self, word: &[usize]) -> NormalForm {
        let mut out: Vec<usize> = Vec::with_capacity(word.len());
        for &s in word {
            assert!(s < self.rank(), "letter {s} is not a generator");
            self.push_letter(&mut out, s);
        }
        NormalForm(self.shortlex(out))
    }

    /// Checked variant of `normal_form` for untrusted letters.
    pub fn try_normal_form(&self, word: &[usize]) -> Result<NormalForm> {
        if let Some(&bad) = word.iter().find(|&&s| s >= self.rank()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        Ok(self.normal_form(word))
    }

    /// Normal form of a word given by labels.
    pub fn normal_form_of(&self, text: &str) -> Result<NormalForm> {
        Ok(self.normal_form(&self.parse_word(text)?))
    }

    /// Appends `s` to a reduced word, cancelling with an earlier `s` when
    /// everything in between commutes with it.
    fn push_letter(&self, w: &mut Vec<usize>, s: usize) {
        for i in (0..w.len()).rev() {
            if w[i] == s {
                w.remove(i);
                return;
            }
            if !self.commute(w[i], s) {
                break;
            }
        }
        w.push(s);
    }

    /// Lexicographically least word in the commutation class of a reduced
    /// word: repeatedly pull the smallest letter that can reach the front.
    fn shortlex(&self, mut w: Vec<usize>) -> Vec<usize> {
        let mut out = Vec::with_capacity(w.len());
        while !w.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..w.len() {
                if w[..i].iter().all(|&x| self.commute(x, w[i]) && x != w[i])
                    && best.is_none_or(|b| w[i] < w[b])
                {
                    best = Some(i);
                }
            }
            let i = best.expect("first letter is always movable");
            out.push(w.remove(i));
        }
        out
    }

    pub fn multiply(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        let mut w = a.0.clone();
        for &s in &b.0 {
            self.push_letter(&mut w, s);
        }
        NormalForm(self.shortlex(w))
    }

    pub fn inverse(&self, a: &NormalForm) -> NormalForm {
        let mut w = a.0.clone();
        w.reverse();
        NormalForm(self.shortlex(w))
    }

    /// `w s` for a generator `s`.
    pub fn times_generator(&self, w: &NormalForm, s: usize) -> NormalForm {
        let mut v = w.0.clone();
        self.push_letter(&mut v, s);
        NormalForm(self.shortlex(v))
    }

    /// `s w` for a generator `s`.
    pub fn generator_times(&self, s: usize, w: &NormalForm) -> NormalForm {
        self.multiply(&NormalForm(vec![s]), w)
    }

    pub fn generator_element(&self, s: usize) -> NormalForm {
        NormalForm(vec![s])
    }

    /// Generators `s` with ℓ(ws) < ℓ(w).
    pub fn right_descents(&self, w: &NormalForm) -> BTreeSet<usize> {
        let v = &w.0;
        (0..v.len())
            .filter(|&i| v[i + 1..].iter().all(|&x| self.commute(x, v[i]) && x != v[i]))
            .map(|i| v[i])
            .collect()
    }

    /// Generators `s` with ℓ(sw) < ℓ(w).
    pub fn left_descents(&self, w: &NormalForm) -> BTreeSet<usize> {
        let v = &w.0;
        (0..v.len())
            .filter(|&i| v[..i].iter().all(|&x| self.commute(x, v[i]) && x != v[i]))
            .map(|i| v[i])
            .collect()
    }

    /// Parity of each generator in `w`, as a bit mask (image in the
    /// abelianization `(Z/2)^p`). Requires at most 64 generators.
    pub fn abelianization(&self, w: &NormalForm) -> u64 {
        assert!(self.rank() <= 64, "abelianization mask limited to 64 generators");
        w.0.iter().fold(0u64, |m, &s| m ^ (1 << s))
    }

    /// Elements of length at most `n`, in ShortLex order.
    pub fn ball(&self, n: usize) -> Vec<NormalForm> {
        let mut all = vec![NormalForm::identity()];
        let mut frontier = vec![NormalForm::identity()];
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for w in &frontier {
                let desc = self.right_descents(w);
                for s in 0..self.rank() {
                    if !desc.contains(&s) {
                        next.insert(self.times_generator(w, s));
                    }
                }
            }
            frontier = next.into_iter().collect();
            if frontier.is_empty() {
                break;
            }
            all.extend(frontier.iter().cloned());
        }
        all
    }

    /// Labels of the letters joined by `.`; `ε` for the identity.
    pub fn render(&self, w: &NormalForm) -> String {
        if w.0.is_empty() {
            return "ε".to_string();
        }
        w.0.iter().map(|&s| self.nerve.label(s)).collect::<Vec<_>>().join(".")
    }

    /// The set of generators occurring in `w`.
    pub fn support(&self, w: &NormalForm) -> BTreeSet<usize> {
        w.0.iter().copied().collect()
    }

    /// The first `n` elements of `1, s1, s1 s2, s1 s2 s1, ...`.
    pub fn iterated_double_domain(&self, s1: usize, s2: usize, n: usize) -> Result<Vec<NormalForm>> {
        if s1 >= self.rank() || s2 >= self.rank() {
            return Err(Error::UnknownVertex("generator out of range".into()));
        }
        if self.commute(s1, s2) {
            return Err(Error::Precondition(format!(
                "generators `{}` and `{}` commute, so they generate a finite group",
                self.nerve.label(s1),
                self.nerve.label(s2)
            )));
        }
        if n == 0 {
            return Err(Error::Precondition("domain size must be at least 1".into()));
        }
        let mut out = vec![NormalForm::identity()];
        while out.len() < n {
            let s = if out.len() % 2 == 1 { s1 } else { s2 };
            let next = self.times_generator(out.last().unwrap(), s);
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
