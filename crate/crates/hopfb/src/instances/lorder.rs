//! Graded algebras built from signed linear orders: concatenation with the
//! stable deshuffle coproduct, and the dual pair, shuffle with
//! deconcatenation. Degree `n` carries all `2^n n!` orders, one linear
//! order per section image.

use crate::bialgebra::GradedBialgebra;
use crate::error::{Error, Result};
use crate::lincomb::{Coeff, LinComb, TensorElement};
use crate::perm::enumerate_plain_permutations;

use std::fmt;
use std::str::FromStr;

/// A sequence of signed values with pairwise distinct absolute values. The
/// standard (basis) form uses every absolute value `1..=n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedLinearOrder {
    entries: Vec<i64>,
}

impl SignedLinearOrder {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let mut abs: Vec<u64> = entries.iter().map(|v| v.unsigned_abs()).collect();
        abs.sort_unstable();
        abs.dedup();
        if abs.len() != entries.len() || entries.iter().any(|&v| v == 0) {
            return Err(Error::Invalid(format!(
                "entries {entries:?} must have distinct nonzero absolute values"
            )));
        }
        Ok(SignedLinearOrder { entries })
    }

    pub fn empty() -> Self {
        SignedLinearOrder::default()
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_standard(&self) -> bool {
        let mut abs: Vec<u64> = self.entries.iter().map(|v| v.unsigned_abs()).collect();
        abs.sort_unstable();
        abs.iter().enumerate().all(|(i, &a)| a == i as u64 + 1)
    }

    /// Relabel onto the standard ground: the k-th smallest absolute value
    /// becomes k, signs and order kept.
    pub fn standardize(&self) -> SignedLinearOrder {
        let mut abs: Vec<u64> = self.entries.iter().map(|v| v.unsigned_abs()).collect();
        abs.sort_unstable();
        let entries = self
            .entries
            .iter()
            .map(|&v| {
                let r = abs.binary_search(&v.unsigned_abs()).unwrap() as i64 + 1;
                if v < 0 {
                    -r
                } else {
                    r
                }
            })
            .collect();
        SignedLinearOrder { entries }
    }

    pub fn shift(&self, by: i64) -> SignedLinearOrder {
        let entries = self
            .entries
            .iter()
            .map(|&v| if v < 0 { v - by } else { v + by })
            .collect();
        SignedLinearOrder { entries }
    }

    /// Keep the entries whose absolute value is selected by `keep`
    /// (a predicate on 1-based values), preserving order.
    fn filter_abs(&self, keep: impl Fn(u64) -> bool) -> SignedLinearOrder {
        SignedLinearOrder {
            entries: self
                .entries
                .iter()
                .filter(|v| keep(v.unsigned_abs()))
                .copied()
                .collect(),
        }
    }

    fn split(&self, i: usize) -> (SignedLinearOrder, SignedLinearOrder) {
        let (a, b) = self.entries.split_at(i);
        (
            SignedLinearOrder { entries: a.to_vec() },
            SignedLinearOrder { entries: b.to_vec() },
        )
    }
}

impl fmt::Display for SignedLinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", body.join(" "))
    }
}

impl FromStr for SignedLinearOrder {
    type Err = Error;

    /// Parses space-separated signed values, e.g. `-2 1 3`; `()` is empty.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(SignedLinearOrder::empty());
        }
        let entries = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad entry `{tok}`")))
            })
            .collect::<Result<Vec<i64>>>()?;
        SignedLinearOrder::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All standard orders of degree `n`: a permutation of the absolute values
/// with an independent sign per entry. Sorted; `2^n n!` of them.
pub fn enumerate_signed_linear_orders(n: usize) -> Vec<SignedLinearOrder> {
    let mut out = Vec::new();
    for perm in enumerate_plain_permutations(n) {
        for mask in 0u64..(1 << n) {
            let entries = perm
                .images()
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedLinearOrder { entries });
        }
    }
    out.sort();
    out
}

fn parse_standard(text: &str) -> Result<SignedLinearOrder> {
    let l: SignedLinearOrder = text.parse()?;
    if !l.is_standard() {
        return Err(Error::Parse(format!(
            "`{text}` does not use the absolute values 1..{} exactly once",
            l.degree()
        )));
    }
    Ok(l)
}

/// Concatenation product with the stable deshuffle coproduct.
pub struct LOrder;

impl GradedBialgebra for LOrder {
    type Basis = SignedLinearOrder;

    fn name(&self) -> &'static str {
        "lorder"
    }

    fn unit(&self) -> SignedLinearOrder {
        SignedLinearOrder::empty()
    }

    fn degree(&self, b: &SignedLinearOrder) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<SignedLinearOrder> {
        enumerate_signed_linear_orders(n)
    }

    /// Relocate the second order past the first, then concatenate.
    fn product(&self, a: &SignedLinearOrder, b: &SignedLinearOrder) -> LinComb<SignedLinearOrder> {
        let mut entries = a.entries.clone();
        entries.extend(b.shift(a.degree() as i64).entries);
        LinComb::basis(SignedLinearOrder { entries })
    }

    /// Route each absolute value to the left or right leg, keep relative
    /// order, relabel both legs.
    fn coproduct(
        &self,
        b: &SignedLinearOrder,
    ) -> TensorElement<SignedLinearOrder, SignedLinearOrder> {
        let n = b.degree();
        let mut out = LinComb::zero();
        for mask in 0u64..(1 << n) {
            let left = b.filter_abs(|a| mask >> (a - 1) & 1 == 1).standardize();
            let right = b.filter_abs(|a| mask >> (a - 1) & 1 == 0).standardize();
            out.add_term((left, right), Coeff::from_integer(1.into()));
        }
        out
    }

    fn parse(&self, text: &str) -> Result<SignedLinearOrder> {
        parse_standard(text)
    }

    fn print(&self, b: &SignedLinearOrder) -> String {
        b.to_string()
    }

    fn label_json(&self, b: &SignedLinearOrder) -> serde_json::Value {
        serde_json::to_value(b.entries()).expect("order serializes")
    }
}

/// Shuffle product with the deconcatenation coproduct.
pub struct LOrderDual;

impl GradedBialgebra for LOrderDual {
    type Basis = SignedLinearOrder;

    fn name(&self) -> &'static str {
        "lorder-dual"
    }

    fn unit(&self) -> SignedLinearOrder {
        SignedLinearOrder::empty()
    }

    fn degree(&self, b: &SignedLinearOrder) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<SignedLinearOrder> {
        enumerate_signed_linear_orders(n)
    }

    /// All interleavings of the first order with the relocated second.
    fn product(&self, a: &SignedLinearOrder, b: &SignedLinearOrder) -> LinComb<SignedLinearOrder> {
        let shifted = b.shift(a.degree() as i64);
        let mut out = LinComb::zero();
        let mut prefix = Vec::new();
        interleave(&a.entries, &shifted.entries, &mut prefix, &mut out);
        out
    }

    fn coproduct(
        &self,
        b: &SignedLinearOrder,
    ) -> TensorElement<SignedLinearOrder, SignedLinearOrder> {
        let mut out = LinComb::zero();
        for i in 0..=b.degree() {
            let (prefix, suffix) = b.split(i);
            out.add_term(
                (prefix.standardize(), suffix.standardize()),
                Coeff::from_integer(1.into()),
            );
        }
        out
    }

    fn parse(&self, text: &str) -> Result<SignedLinearOrder> {
        parse_standard(text)
    }

    fn print(&self, b: &SignedLinearOrder) -> String {
        b.to_string()
    }

    fn label_json(&self, b: &SignedLinearOrder) -> serde_json::Value {
        serde_json::to_value(b.entries()).expect("order serializes")
    }
}

fn interleave(
    a: &[i64],
    b: &[i64],
    prefix: &mut Vec<i64>,
    out: &mut LinComb<SignedLinearOrder>,
) {
    if a.is_empty() && b.is_empty() {
        out.add_term(
            SignedLinearOrder {
                entries: prefix.clone(),
            },
            Coeff::from_integer(1.into()),
        );
        return;
    }
    if let Some((&head, rest)) = a.split_first() {
        prefix.push(head);
        interleave(rest, b, prefix, out);
        prefix.pop();
    }
    if let Some((&head, rest)) = b.split_first() {
        prefix.push(head);
        interleave(a, rest, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::coeff_int;

    fn lo(s: &str) -> SignedLinearOrder {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions_are_hyperoctahedral_orders() {
        let expected = [1usize, 2, 8, 48, 384];
        for (n, &d) in expected.iter().enumerate() {
            assert_eq!(enumerate_signed_linear_orders(n).len(), d);
        }
    }

    #[test]
    fn concatenation_shifts_second_factor() {
        let got = LOrder.product(&lo("-2 1"), &lo("1"));
        assert_eq!(got, LinComb::basis(lo("-2 1 3")));
    }

    #[test]
    fn deshuffle_of_single_entry() {
        let got = LOrder.coproduct(&lo("1"));
        let expected = LinComb::from_terms([
            ((lo("1"), SignedLinearOrder::empty()), coeff_int(1)),
            ((SignedLinearOrder::empty(), lo("1")), coeff_int(1)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn deshuffle_keeps_signs() {
        let got = LOrder.coproduct(&lo("-2 1"));
        assert_eq!(got.coeff(&(lo("-1"), lo("1"))), coeff_int(1));
        assert_eq!(got.coeff(&(lo("1"), lo("-1"))), coeff_int(1));
        assert_eq!(got.num_terms(), 4);
    }

    #[test]
    fn shuffle_of_singletons() {
        let got = LOrderDual.product(&lo("1"), &lo("1"));
        let expected = LinComb::from_terms([
            (lo("1 2"), coeff_int(1)),
            (lo("2 1"), coeff_int(1)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn shuffle_counts_are_binomial() {
        let a = lo("-1 2");
        let b = lo("2 -1");
        let got = LOrderDual.product(&a, &b);
        // All C(4, 2) interleavings are distinct orders.
        assert_eq!(got.num_terms(), 6);
        assert_eq!(
            got.iter().map(|(_, c)| c.clone()).sum::<Coeff>(),
            coeff_int(6)
        );
    }

    #[test]
    fn deconcatenation_of_two_entries() {
        let got = LOrderDual.coproduct(&lo("2 -1"));
        let expected = LinComb::from_terms([
            ((SignedLinearOrder::empty(), lo("2 -1")), coeff_int(1)),
            ((lo("1"), lo("-1")), coeff_int(1)),
            ((lo("2 -1"), SignedLinearOrder::empty()), coeff_int(1)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn parse_requires_standard_ground() {
        assert!(LOrder.parse("-2 1").is_ok());
        assert!(LOrder.parse("-3 1").is_err());
        assert!(LOrder.parse("1 1").is_err());
        assert!("1 -1".parse::<SignedLinearOrder>().is_err());
    }
}
