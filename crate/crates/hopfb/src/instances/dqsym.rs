//! DQSym on the monomial basis: bicompositions with the quasishuffle
//! product and the deconcatenation coproduct, together with the equivalent
//! description through orbit classes of signed set compositions.

use std::collections::BTreeSet;

use crate::bialgebra::GradedBialgebra;
use crate::bicomp::{
    canonical_rep, enumerate_bicompositions, from_bicomposition, to_bicomposition, Bicomposition,
};
use crate::error::Result;
use crate::lincomb::{Coeff, LinComb, TensorElement};
use crate::setcomp::{quasishuffle, quasishuffle_sequences, SetComposition, SignedSetComposition};

pub struct DqSym;

impl GradedBialgebra for DqSym {
    type Basis = Bicomposition;

    fn name(&self) -> &'static str {
        "dqsym"
    }

    fn unit(&self) -> Bicomposition {
        Bicomposition::empty()
    }

    fn degree(&self, b: &Bicomposition) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<Bicomposition> {
        enumerate_bicompositions(n)
    }

    /// Quasishuffle of the part sequences; parts fused by componentwise sum.
    fn product(&self, a: &Bicomposition, b: &Bicomposition) -> LinComb<Bicomposition> {
        let mut out = LinComb::zero();
        for parts in quasishuffle_sequences(a.parts(), b.parts(), &|p, q| p.merge(q)) {
            out.add_term(Bicomposition::new(parts), Coeff::from_integer(1.into()));
        }
        out
    }

    /// Deconcatenation of the part sequence.
    fn coproduct(&self, b: &Bicomposition) -> TensorElement<Bicomposition, Bicomposition> {
        let mut out = LinComb::zero();
        for i in 0..=b.num_parts() {
            let (prefix, suffix) = b.split(i);
            out.add_term((prefix, suffix), Coeff::from_integer(1.into()));
        }
        out
    }

    fn parse(&self, text: &str) -> Result<Bicomposition> {
        text.parse()
    }

    fn print(&self, b: &Bicomposition) -> String {
        b.to_string()
    }

    fn label_json(&self, b: &Bicomposition) -> serde_json::Value {
        serde_json::to_value(b).expect("bicomposition serializes")
    }
}

/// The same product computed through orbit classes: embed both factors as
/// their distinguished representatives, relocate the second onto the next
/// absolute values, quasishuffle as set compositions, and classify every
/// outcome.
pub fn product_via_classes(a: &Bicomposition, b: &Bicomposition) -> LinComb<Bicomposition> {
    let x = from_bicomposition(a);
    let y = shift_abs(&from_bicomposition(b), a.degree() as i64);
    let mut out = LinComb::zero();
    for h in quasishuffle(x.as_composition(), &y).expect("grounds are disjoint after the shift") {
        let signed = SignedSetComposition::new(h).expect("union ground is standard");
        out.add_term(
            to_bicomposition(&canonical_rep(&signed)),
            Coeff::from_integer(1.into()),
        );
    }
    out
}

/// The same coproduct computed through orbit classes: deconcatenate the
/// distinguished representative at the signed level and classify the two
/// relabeled legs.
pub fn coproduct_via_classes(b: &Bicomposition) -> TensorElement<Bicomposition, Bicomposition> {
    let mut out = LinComb::zero();
    for (prefix, suffix) in signed_deconcatenation(&from_bicomposition(b)) {
        out.add_term(
            (to_bicomposition(&prefix), to_bicomposition(&suffix)),
            Coeff::from_integer(1.into()),
        );
    }
    out
}

/// Deconcatenation of a signed set composition: cut the block list at every
/// point and relabel each leg onto its own standard ground, signs kept.
pub fn signed_deconcatenation(
    x: &SignedSetComposition,
) -> Vec<(SignedSetComposition, SignedSetComposition)> {
    let blocks = x.blocks();
    (0..=blocks.len())
        .map(|i| {
            let prefix = SetComposition::new(blocks[..i].to_vec()).expect("blocks stay disjoint");
            let suffix = SetComposition::new(blocks[i..].to_vec()).expect("blocks stay disjoint");
            (
                SignedSetComposition::standardize_from(&prefix).expect("distinct absolute values"),
                SignedSetComposition::standardize_from(&suffix).expect("distinct absolute values"),
            )
        })
        .collect()
}

fn shift_abs(x: &SignedSetComposition, by: i64) -> SetComposition {
    let blocks = x
        .blocks()
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|&v| if v < 0 { v - by } else { v + by })
                .collect::<BTreeSet<i64>>()
        })
        .collect();
    SetComposition::new(blocks).expect("shifting keeps blocks disjoint")
}
