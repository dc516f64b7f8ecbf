//! Orbit classes of section images under permutations of absolute values:
//! a class of degree `n` is the pair (number of negatives, number of
//! positives). Multiplication adds counts and comultiplication distributes
//! them, which is the bivariate binomial bialgebra.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bialgebra::GradedBialgebra;
use crate::error::{Error, Result};
use crate::hset::{enumerate_sections, Sign};
use crate::lincomb::{Coeff, LinComb, TensorElement};

/// A class of section images with `neg` negative and `pos` positive
/// entries; `0/0` is the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EhClass {
    neg: usize,
    pos: usize,
}

impl EhClass {
    pub fn new(neg: usize, pos: usize) -> Self {
        EhClass { neg, pos }
    }

    pub fn neg(&self) -> usize {
        self.neg
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn degree(&self) -> usize {
        self.neg + self.pos
    }
}

impl fmt::Display for EhClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.neg, self.pos)
    }
}

impl FromStr for EhClass {
    type Err = Error;

    /// Parses `neg/pos`, e.g. `1/2`; the unit is `0/0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(EhClass::default());
        }
        let (neg, pos) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("class `{s}` must look like neg/pos")))?;
        Ok(EhClass {
            neg: neg
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad count `{neg}`")))?,
            pos: pos
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad count `{pos}`")))?,
        })
    }
}

pub struct Eh;

impl GradedBialgebra for Eh {
    type Basis = EhClass;

    fn name(&self) -> &'static str {
        "eh"
    }

    fn unit(&self) -> EhClass {
        EhClass::default()
    }

    fn degree(&self, b: &EhClass) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<EhClass> {
        (0..=n).map(|neg| EhClass::new(neg, n - neg)).collect()
    }

    /// Union of representative section images after relocation: counts add.
    fn product(&self, a: &EhClass, b: &EhClass) -> LinComb<EhClass> {
        LinComb::basis(EhClass::new(a.neg + b.neg, a.pos + b.pos))
    }

    /// Split the representative section image over every two-sided stable
    /// decomposition and classify both legs.
    fn coproduct(&self, b: &EhClass) -> TensorElement<EhClass, EhClass> {
        let n = b.degree();
        let mut out = LinComb::zero();
        for mask in 0u64..(1 << n) {
            // Positions 1..=neg carry the negatives of the representative.
            let mut left = EhClass::default();
            let mut right = EhClass::default();
            for i in 0..n {
                let side = if mask >> i & 1 == 1 { &mut left } else { &mut right };
                if i < b.neg {
                    side.neg += 1;
                } else {
                    side.pos += 1;
                }
            }
            out.add_term((left, right), Coeff::from_integer(1.into()));
        }
        out
    }

    fn parse(&self, text: &str) -> Result<EhClass> {
        text.parse()
    }

    fn print(&self, b: &EhClass) -> String {
        b.to_string()
    }

    fn label_json(&self, b: &EhClass) -> serde_json::Value {
        serde_json::to_value([b.neg, b.pos]).expect("class serializes")
    }
}

/// Dimensions in degree `n` of the three graded images of the one-point
/// species: classes under absolute-value permutations, all sections, and
/// classes under all signed permutations. Computed by honest orbit
/// enumeration.
pub fn eh_image_dimensions(n: usize) -> (usize, usize, usize) {
    let sections = enumerate_sections(n);
    let total = sections.len();
    let signs: Vec<Vec<Sign>> = sections.iter().map(|s| s.signs().to_vec()).collect();

    let coinvariant_orbits = |allow_flip: bool| -> usize {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut orbits = 0;
        for start in 0..signs.len() {
            if seen.contains(&start) {
                continue;
            }
            orbits += 1;
            let mut stack = vec![signs[start].clone()];
            while let Some(current) = stack.pop() {
                let idx = signs.iter().position(|s| *s == current).expect("closed orbit");
                if !seen.insert(idx) {
                    continue;
                }
                for i in 0..n.saturating_sub(1) {
                    let mut next = current.clone();
                    next.swap(i, i + 1);
                    stack.push(next);
                }
                if allow_flip && n > 0 {
                    let mut next = current.clone();
                    next[0] = next[0].flip();
                    stack.push(next);
                }
            }
        }
        orbits
    };

    (coinvariant_orbits(false), total, coinvariant_orbits(true))
}
