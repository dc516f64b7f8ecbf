//! Finitely supported linear combinations over arbitrary basis labels with
//! exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

/// Exact rational scalar.
pub type Coeff = BigRational;

pub fn coeff_int(k: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return Coeff::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Coeff::new(num, den)
}

/// A formal sum of basis labels with nonzero rational coefficients. Zero
/// coefficients are pruned on every operation, so equality is equality of
/// the stored term maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

/// A formal sum over pairs of labels.
pub type TensorElement<A, B> = LinComb<(A, B)>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single basis label with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Coeff::one())
    }

    pub fn term(b: B, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(b, c);
        }
        LinComb { terms }
    }

    pub fn from_terms(items: impl IntoIterator<Item = (B, Coeff)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in items {
            out.add_term(b, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Coeff) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * k)).collect(),
        }
    }

    /// Linear extension of a map defined on basis labels.
    pub fn apply<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            for (image, ic) in f(b).iter() {
                out.add_term(image.clone(), ic * c);
            }
        }
        out
    }

    /// Relabeling along a plain map of labels.
    pub fn map_labels<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }
}

/// Bilinear tensor of two combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    x: &LinComb<A>,
    y: &LinComb<B>,
) -> TensorElement<A, B> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// Apply linear maps to both tensor legs.
pub fn tensor_apply<A, B, C, D>(
    t: &TensorElement<A, B>,
    f: impl Fn(&A) -> LinComb<C>,
    g: impl Fn(&B) -> LinComb<D>,
) -> TensorElement<C, D>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in t.iter() {
        let left = f(a);
        let right = g(b);
        for (l, cl) in left.iter() {
            for (r, cr) in right.iter() {
                out.add_term((l.clone(), r.clone()), &(cl * cr) * c);
            }
        }
    }
    out
}

/// Coefficient prefix used by the display form: empty for 1, `k*` otherwise.
pub fn coeff_prefix(c: &Coeff) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("{c}*")
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if c.is_one() {
                    b.to_string()
                } else {
                    format!("{c}*{b}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
