//! Signed permutations: the hyperoctahedral group of rank `n`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A signed permutation `w` of rank `n`, stored as the image list
/// `w(1), ..., w(n)`; the absolute values form a permutation of
/// `{1, ..., n}` and each image carries a sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Invalid(format!(
                    "images {images:?} are not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i64).collect(),
        }
    }

    /// Lift a plain permutation given by 1-based images.
    pub fn from_plain(images: &[usize]) -> Result<Self> {
        SignedPermutation::new(images.iter().map(|&v| v as i64).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// Apply to a signed value with `1 <= |x| <= n`, extending by
    /// `w(-k) = -w(k)`.
    pub fn apply(&self, x: i64) -> i64 {
        let image = self.images[(x.unsigned_abs() - 1) as usize];
        if x < 0 {
            -image
        } else {
            image
        }
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.degree(), other.degree());
        SignedPermutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            let slot = (v.unsigned_abs() - 1) as usize;
            images[slot] = if v < 0 { -(i as i64 + 1) } else { i as i64 + 1 };
        }
        SignedPermutation { images }
    }

    /// The sign-flip generator: negates 1, fixes everything else.
    pub fn sign_flip(n: usize) -> Self {
        let mut images: Vec<i64> = (1..=n as i64).collect();
        images[0] = -1;
        SignedPermutation { images }
    }

    /// The adjacent transposition swapping `i` and `i + 1` (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i < n);
        let mut images: Vec<i64> = (1..=n as i64).collect();
        images.swap(i - 1, i);
        SignedPermutation { images }
    }

    /// The standard generating set: the sign flip plus the adjacent
    /// transpositions.
    pub fn generators(n: usize) -> Vec<Self> {
        let mut gens = Vec::new();
        if n >= 1 {
            gens.push(SignedPermutation::sign_flip(n));
        }
        for i in 1..n {
            gens.push(SignedPermutation::transposition(n, i));
        }
        gens
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", body.join(" "))
    }
}

/// The whole hyperoctahedral group of rank `n`, `2^n n!` elements, sorted by
/// image list.
pub fn enumerate_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in (1..=n as i64).permutations(n) {
        for mask in 0u64..(1 << n) {
            let images = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { images });
        }
    }
    out.sort();
    out
}

/// All plain permutations of rank `n`, lifted.
pub fn enumerate_plain_permutations(n: usize) -> Vec<SignedPermutation> {
    (1..=n as i64)
        .permutations(n)
        .map(|images| SignedPermutation { images })
        .collect()
}
