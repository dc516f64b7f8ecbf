//! Bicompositions: ordered lists of nonzero (negatives, positives) count
//! pairs, and the bijection with orbit representatives of signed set
//! compositions under absolute-value permutations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::setcomp::{SetComposition, SignedSetComposition};

/// One column: `neg` counts negative entries, `pos` positive ones. The zero
/// column is excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipart {
    neg: usize,
    pos: usize,
}

impl Bipart {
    pub fn new(neg: usize, pos: usize) -> Result<Self> {
        if neg == 0 && pos == 0 {
            return Err(Error::Invalid("the zero bipart is not allowed".into()));
        }
        Ok(Bipart { neg, pos })
    }

    pub fn neg(&self) -> usize {
        self.neg
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn size(&self) -> usize {
        self.neg + self.pos
    }

    /// Componentwise sum; two nonzero biparts always fuse to a nonzero one.
    pub fn merge(&self, other: &Bipart) -> Bipart {
        Bipart {
            neg: self.neg + other.neg,
            pos: self.pos + other.pos,
        }
    }
}

impl fmt::Display for Bipart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.neg, self.pos)
    }
}

/// An ordered sequence of biparts; the degree is the total count. The empty
/// sequence is the unique degree-0 bicomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bicomposition {
    parts: Vec<Bipart>,
}

impl Bicomposition {
    pub fn new(parts: Vec<Bipart>) -> Self {
        Bicomposition { parts }
    }

    pub fn empty() -> Self {
        Bicomposition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Bipart] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(Bipart::size).sum()
    }

    /// Prefix/suffix pair after cutting before part index `i`.
    pub fn split(&self, i: usize) -> (Bicomposition, Bicomposition) {
        let (a, b) = self.parts.split_at(i);
        (
            Bicomposition { parts: a.to_vec() },
            Bicomposition { parts: b.to_vec() },
        )
    }
}

impl fmt::Display for Bicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Bicomposition {
    type Err = Error;

    /// Parses `1/0|0/2`; `()` is the empty bicomposition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Bicomposition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split('|') {
            let (a, b) = tok
                .trim()
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("bipart `{tok}` must look like a/b")))?;
            let neg: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad count `{a}`")))?;
            let pos: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad count `{b}`")))?;
            parts.push(Bipart::new(neg, pos).map_err(|e| Error::Parse(e.to_string()))?);
        }
        Ok(Bicomposition { parts })
    }
}

impl Serialize for Bicomposition {
    /// Serializes as an array of `[neg, pos]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(&[p.neg, p.pos])?;
        }
        seq.end()
    }
}

/// All bicompositions of degree `n`, sorted. Counts satisfy
/// `d(0) = 1, d(1) = 2, d(2) = 7` and `d(n) = 4 d(n-1) - 2 d(n-2)`.
pub fn enumerate_bicompositions(n: usize) -> Vec<Bicomposition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    enumerate_rec(n, &mut current, &mut out);
    out.sort();
    out
}

fn enumerate_rec(n: usize, current: &mut Vec<Bipart>, out: &mut Vec<Bicomposition>) {
    if n == 0 {
        out.push(Bicomposition {
            parts: current.clone(),
        });
        return;
    }
    for size in 1..=n {
        for neg in 0..=size {
            current.push(Bipart {
                neg,
                pos: size - neg,
            });
            enumerate_rec(n - size, current, out);
            current.pop();
        }
    }
}

/// Count negatives and positives per block.
pub fn to_bicomposition(x: &SignedSetComposition) -> Bicomposition {
    let parts = x
        .blocks()
        .iter()
        .map(|b| {
            let neg = b.iter().filter(|&&v| v < 0).count();
            Bipart {
                neg,
                pos: b.len() - neg,
            }
        })
        .collect();
    Bicomposition { parts }
}

/// The distinguished orbit representative: block `i` takes the negatives
/// `prev+1 ..= prev+neg` and then the positives `prev+neg+1 ..= prev+neg+pos`,
/// where `prev` is the total size of earlier blocks.
pub fn from_bicomposition(b: &Bicomposition) -> SignedSetComposition {
    let mut blocks: Vec<BTreeSet<i64>> = Vec::with_capacity(b.num_parts());
    let mut prev: i64 = 0;
    for part in &b.parts {
        let mut block = BTreeSet::new();
        for k in 1..=part.neg as i64 {
            block.insert(-(prev + k));
        }
        for k in 1..=part.pos as i64 {
            block.insert(prev + part.neg as i64 + k);
        }
        prev += part.size() as i64;
        blocks.push(block);
    }
    let comp = SetComposition::new(blocks).expect("blocks are disjoint by construction");
    SignedSetComposition::new(comp).expect("ground is standard by construction")
}

/// Orbit canonical form under permutations of absolute values.
pub fn canonical_rep(x: &SignedSetComposition) -> SignedSetComposition {
    from_bicomposition(&to_bicomposition(x))
}
