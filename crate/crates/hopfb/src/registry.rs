//! Name-keyed access to the registered algebras and string-level wrappers
//! around their operations, shared by the command line front end and the
//! C interface.

use std::str::FromStr;

use serde_json::Value;

use crate::bialgebra::{antipode, graded_dimension, GradedBialgebra};
use crate::error::{Error, Result};
use crate::instances::dqsym::DqSym;
use crate::instances::eh::Eh;
use crate::instances::lorder::{LOrder, LOrderDual};
use crate::instances::qsym::{alpha_forget_lin, QSym};
use crate::instances::word3::Word3Algebra;
use crate::lincomb::LinComb;
use crate::verify::{verify, VerifyReport};

/// The registered algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraId {
    DqSym,
    QSym,
    Word3,
    LOrder,
    LOrderDual,
    Eh,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 6] = [
        AlgebraId::DqSym,
        AlgebraId::QSym,
        AlgebraId::Word3,
        AlgebraId::LOrder,
        AlgebraId::LOrderDual,
        AlgebraId::Eh,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraId::DqSym => "dqsym",
            AlgebraId::QSym => "qsym",
            AlgebraId::Word3 => "word3",
            AlgebraId::LOrder => "lorder",
            AlgebraId::LOrderDual => "lorder-dual",
            AlgebraId::Eh => "eh",
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

macro_rules! with_algebra {
    ($id:expr, $alg:ident => $body:expr) => {
        match $id {
            AlgebraId::DqSym => {
                let $alg = DqSym;
                $body
            }
            AlgebraId::QSym => {
                let $alg = QSym;
                $body
            }
            AlgebraId::Word3 => {
                let $alg = Word3Algebra;
                $body
            }
            AlgebraId::LOrder => {
                let $alg = LOrder;
                $body
            }
            AlgebraId::LOrderDual => {
                let $alg = LOrderDual;
                $body
            }
            AlgebraId::Eh => {
                let $alg = Eh;
                $body
            }
        }
    };
}

/// One rendered term of a linear combination.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: String,
    pub basis: String,
    pub basis_json: Value,
}

/// One rendered term of a tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorTerm {
    pub coefficient: String,
    pub left: String,
    pub right: String,
    pub left_json: Value,
    pub right_json: Value,
}

fn element_terms<A: GradedBialgebra>(alg: &A, x: &LinComb<A::Basis>) -> Vec<Term> {
    x.iter()
        .map(|(b, c)| Term {
            coefficient: c.to_string(),
            basis: alg.print(b),
            basis_json: alg.label_json(b),
        })
        .collect()
}

fn tensor_terms<A: GradedBialgebra>(
    alg: &A,
    t: &LinComb<(A::Basis, A::Basis)>,
) -> Vec<TensorTerm> {
    t.iter()
        .map(|((l, r), c)| TensorTerm {
            coefficient: c.to_string(),
            left: alg.print(l),
            right: alg.print(r),
            left_json: alg.label_json(l),
            right_json: alg.label_json(r),
        })
        .collect()
}

/// Product of two parsed basis labels.
pub fn mul_terms(id: AlgebraId, a: &str, b: &str) -> Result<Vec<Term>> {
    with_algebra!(id, alg => {
        let x = alg.parse(a)?;
        let y = alg.parse(b)?;
        Ok(element_terms(&alg, &alg.product(&x, &y)))
    })
}

/// Coproduct of a parsed basis label.
pub fn comul_terms(id: AlgebraId, a: &str) -> Result<Vec<TensorTerm>> {
    with_algebra!(id, alg => {
        let x = alg.parse(a)?;
        Ok(tensor_terms(&alg, &alg.coproduct(&x)))
    })
}

/// Antipode of a parsed basis label.
pub fn antipode_terms(id: AlgebraId, a: &str) -> Result<Vec<Term>> {
    with_algebra!(id, alg => {
        let x = alg.parse(a)?;
        Ok(element_terms(&alg, &antipode(&alg, &LinComb::basis(x))))
    })
}

/// Graded dimensions for degrees `0..=n`.
pub fn dims(id: AlgebraId, n: usize) -> Vec<usize> {
    with_algebra!(id, alg => (0..=n).map(|k| graded_dimension(&alg, k)).collect())
}

/// Printed degree-`n` basis labels with their JSON forms.
pub fn enumerate_terms(id: AlgebraId, n: usize) -> Vec<(String, Value)> {
    with_algebra!(id, alg => {
        alg.basis(n)
            .iter()
            .map(|b| (alg.print(b), alg.label_json(b)))
            .collect()
    })
}

/// Run the axiom harness up to `max_degree`.
pub fn run_verify(id: AlgebraId, max_degree: usize) -> VerifyReport {
    with_algebra!(id, alg => verify(&alg, max_degree))
}

/// Apply the sign-forgetting morphism to a parsed DQSym label.
pub fn map_qsym_terms(a: &str) -> Result<Vec<Term>> {
    let x = DqSym.parse(a)?;
    let image = alpha_forget_lin(&LinComb::basis(x));
    Ok(element_terms(&QSym, &image))
}

/// Sanity evaluations used at start-up by callers that want a cheap
/// self-test: counit of the unit and the degree-0 dimension.
pub fn is_connected(id: AlgebraId) -> bool {
    with_algebra!(id, alg => {
        let basis0 = alg.basis(0);
        basis0.len() == 1 && basis0[0] == alg.unit()
    })
}

/// Parse-and-reprint round trip used to validate user input.
pub fn normalize_label(id: AlgebraId, text: &str) -> Result<String> {
    with_algebra!(id, alg => Ok(alg.print(&alg.parse(text)?)))
}

/// Stable text form: terms joined by ` + `, coefficients other than one
/// rendered as a `k*` prefix.
pub fn render_terms_text(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| {
            if t.coefficient == "1" {
                t.basis.clone()
            } else {
                format!("{}*{}", t.coefficient, t.basis)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn render_tensor_terms_text(terms: &[TensorTerm]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| {
            let body = format!("{} (x) {}", t.left, t.right);
            if t.coefficient == "1" {
                body
            } else {
                format!("{}*[{}]", t.coefficient, body)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn terms_json(terms: &[Term]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "coefficient": t.coefficient,
                    "basis": t.basis,
                    "basis_json": t.basis_json,
                })
            })
            .collect(),
    )
}

pub fn tensor_terms_json(terms: &[TensorTerm]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "coefficient": t.coefficient,
                    "left": t.left,
                    "right": t.right,
                    "left_json": t.left_json,
                    "right_json": t.right_json,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_names_round_trip() {
        for id in AlgebraId::ALL {
            let back: AlgebraId = id.name().parse().unwrap();
            assert_eq!(back, id);
        }
        assert!("nope".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn every_algebra_is_connected() {
        for id in AlgebraId::ALL {
            assert!(is_connected(id), "{}", id.name());
        }
    }

    #[test]
    fn mul_renders_deterministically() {
        let terms = mul_terms(AlgebraId::QSym, "1", "1").unwrap();
        assert_eq!(render_terms_text(&terms), "2*1,1 + 2");
    }

    #[test]
    fn map_qsym_takes_column_sums() {
        let terms = map_qsym_terms("0/2|1/0").unwrap();
        assert_eq!(render_terms_text(&terms), "2,1");
    }

    #[test]
    fn normalize_rejects_bad_labels() {
        assert!(normalize_label(AlgebraId::DqSym, "0/0").is_err());
        assert_eq!(normalize_label(AlgebraId::DqSym, " 1/0 ").unwrap(), "1/0");
    }

    #[test]
    fn dims_of_dqsym() {
        assert_eq!(dims(AlgebraId::DqSym, 4), vec![1, 2, 7, 24, 82]);
    }
}
