use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{render, Q};

/// Graded exact values, each either known or unknown.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiVector {
    values: Vec<Option<Q>>,
}

impl BettiVector {
    /// All degrees known.
    pub fn known(values: Vec<Q>) -> Self {
        BettiVector { values: values.into_iter().map(Some).collect() }
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        Self::known(counts.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn from_options(values: Vec<Option<Q>>) -> Self {
        BettiVector { values }
    }

    /// `len` degrees, all unknown.
    pub fn unknown(len: usize) -> Self {
        BettiVector { values: vec![None; len] }
    }

    /// `len` degrees, all zero.
    pub fn zeros(len: usize) -> Self {
        Self::known(vec![Q::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value in degree `i`; degrees past the end count as known zero.
    pub fn get(&self, i: usize) -> Option<Q> {
        match self.values.get(i) {
            Some(v) => v.clone(),
            None => Some(Q::zero()),
        }
    }

    pub fn set(&mut self, i: usize, v: Option<Q>) {
        if self.values.len() <= i {
            self.values.resize(i + 1, Some(Q::zero()));
        }
        self.values[i] = v;
    }

    pub fn values(&self) -> &[Option<Q>] {
        &self.values
    }

    pub fn is_fully_known(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Degrees marked unknown.
    pub fn unknown_degrees(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i].is_none()).collect()
    }

    /// True when every degree is known and zero.
    pub fn is_identically_zero(&self) -> bool {
        self.values.iter().all(|v| v.as_ref().is_some_and(Zero::is_zero))
    }

    /// `Σ (−1)^i β_i`, if all degrees are known.
    pub fn alternating_sum(&self) -> Option<Q> {
        let mut acc = Q::zero();
        for (i, v) in self.values.iter().enumerate() {
            let v = v.as_ref()?;
            if i % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        Some(acc)
    }

    /// Known values are nonnegative.
    pub fn is_valid(&self) -> bool {
        self.values.iter().flatten().all(|v| !v.is_negative())
    }

    /// Values with trailing known zeros removed.
    pub fn trimmed(&self) -> BettiVector {
        let mut values = self.values.clone();
        while values.last().is_some_and(|v| v.as_ref().is_some_and(Zero::is_zero)) {
            values.pop();
        }
        BettiVector { values }
    }

    /// Strings `"p/q"` or `"?"` per degree.
    pub fn rendered(&self) -> Vec<String> {
        self.values.iter().map(|v| v.as_ref().map_or_else(|| "?".to_string(), render)).collect()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rendered().join(", "))
    }
}

impl serde::Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Option<String>> = self.values.iter().map(|x| x.as_ref().map(render)).collect();
        v.serialize(s)
    }
}
