//! Quasi-symmetric functions on the monomial basis: integer compositions
//! with the quasishuffle product (parts fuse by addition) and the
//! deconcatenation coproduct, plus the sign-forgetting map from DQSym.

use std::fmt;
use std::str::FromStr;

use crate::bialgebra::GradedBialgebra;
use crate::bicomp::Bicomposition;
use crate::error::{Error, Result};
use crate::lincomb::{Coeff, LinComb, TensorElement};
use crate::setcomp::quasishuffle_sequences;

/// An integer composition: an ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn split(&self, i: usize) -> (Composition, Composition) {
        let (a, b) = self.parts.split_at(i);
        (
            Composition { parts: a.to_vec() },
            Composition { parts: b.to_vec() },
        )
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `2,1`; `()` is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part `{tok}`")))?;
            parts.push(p);
        }
        Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All `2^(n-1)` compositions of `n` (one empty composition for `n = 0`),
/// sorted.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(n: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for size in 1..=n {
            current.push(size);
            rec(n - size, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out.sort();
    out
}

pub struct QSym;

impl GradedBialgebra for QSym {
    type Basis = Composition;

    fn name(&self) -> &'static str {
        "qsym"
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn degree(&self, b: &Composition) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<Composition> {
        enumerate_compositions(n)
    }

    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        let mut out = LinComb::zero();
        for parts in quasishuffle_sequences(a.parts(), b.parts(), &|p, q| p + q) {
            out.add_term(Composition { parts }, Coeff::from_integer(1.into()));
        }
        out
    }

    fn coproduct(&self, b: &Composition) -> TensorElement<Composition, Composition> {
        let mut out = LinComb::zero();
        for i in 0..=b.parts.len() {
            out.add_term(b.split(i), Coeff::from_integer(1.into()));
        }
        out
    }

    fn parse(&self, text: &str) -> Result<Composition> {
        text.parse()
    }

    fn print(&self, b: &Composition) -> String {
        b.to_string()
    }

    fn label_json(&self, b: &Composition) -> serde_json::Value {
        serde_json::to_value(b.parts()).expect("composition serializes")
    }
}

/// Forget signs: each bipart goes to its total size.
pub fn alpha_forget(b: &Bicomposition) -> Composition {
    Composition {
        parts: b.parts().iter().map(|p| p.size()).collect(),
    }
}

/// Linear extension of [`alpha_forget`].
pub fn alpha_forget_lin(x: &LinComb<Bicomposition>) -> LinComb<Composition> {
    x.map_labels(alpha_forget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::coeff_int;

    fn cp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn singleton_square() {
        let got = QSym.product(&cp("1"), &cp("1"));
        assert_eq!(got.coeff(&cp("1,1")), coeff_int(2));
        assert_eq!(got.coeff(&cp("2")), coeff_int(1));
        assert_eq!(got.num_terms(), 2);
    }

    #[test]
    fn unit_laws() {
        let x = cp("2,1");
        assert_eq!(QSym.product(&QSym.unit(), &x), LinComb::basis(x.clone()));
        assert_eq!(QSym.product(&x, &QSym.unit()), LinComb::basis(x));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(enumerate_compositions(0).len(), 1);
        for n in 1..=6 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn alpha_takes_column_sums() {
        assert_eq!(alpha_forget(&"0/2|1/0".parse().unwrap()), cp("2,1"));
        assert_eq!(alpha_forget(&"1/1".parse().unwrap()), cp("2"));
        assert_eq!(alpha_forget(&Bicomposition::empty()), Composition::empty());
    }

    #[test]
    fn text_round_trip() {
        for n in 0..=4 {
            for c in enumerate_compositions(n) {
                let back: Composition = c.to_string().parse().unwrap();
                assert_eq!(back, c);
            }
        }
        assert!("2,0".parse::<Composition>().is_err());
    }
}
