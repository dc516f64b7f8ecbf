//! Acceptance suite: every criterion is one test that prints a PASS line
//! when it holds (run with `--nocapture` to see the lines). All comparisons
//! are exact.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use hopfb::bialgebra::{antipode, antipode_takeuchi, GradedBialgebra};
use hopfb::bicomp::{
    canonical_rep, enumerate_bicompositions, from_bicomposition, to_bicomposition, Bicomposition,
};
use hopfb::error::Result;
use hopfb::instances::dqsym::DqSym;
use hopfb::instances::eh::{eh_image_dimensions, Eh, EhClass};
use hopfb::instances::lorder::enumerate_signed_linear_orders;
use hopfb::instances::qsym::{alpha_forget, alpha_forget_lin, Composition, QSym};
use hopfb::instances::word3::{face_coproduct, face_product, FaceElement, Word3Algebra};
use hopfb::lincomb::{coeff_int, LinComb, TensorElement};
use hopfb::perm::{enumerate_plain_permutations, SignedPermutation};
use hopfb::setcomp::{enumerate_signed_set_compositions, SignedSetComposition};
use hopfb::verify::{verify, Axiom};

fn bc(s: &str) -> Bicomposition {
    s.parse().unwrap()
}

fn ssc(s: &str) -> SignedSetComposition {
    s.parse().unwrap()
}

#[test]
fn criterion_01_graded_dimensions_of_dqsym() {
    let start = Instant::now();
    let dims: Vec<usize> = (0..=8).map(|n| enumerate_bicompositions(n).len()).collect();
    let elapsed = start.elapsed();

    assert_eq!(&dims[..=4], &[1, 2, 7, 24, 82]);
    // Degree 2 matches the explicit seven-element list.
    let degree_two: BTreeSet<String> = enumerate_bicompositions(2)
        .iter()
        .map(|b| b.to_string())
        .collect();
    let listed: BTreeSet<String> =
        ["2/0", "1/0|1/0", "1/1", "1/0|0/1", "0/1|1/0", "0/1|0/1", "0/2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    assert_eq!(degree_two, listed);
    for n in 3..=8 {
        assert_eq!(dims[n], 4 * dims[n - 1] - 2 * dims[n - 2], "degree {n}");
    }
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "[acceptance] criterion 1 PASS: dqsym dims {:?} with d(n) = 4d(n-1) - 2d(n-2) up to 8 ({elapsed:?})",
        &dims[..=4]
    );
}

#[test]
fn criterion_02_product_and_coproduct_examples() {
    let product = DqSym.product(&bc("2/0"), &bc("1/0|0/1"));
    let expected = LinComb::from_terms(
        ["2/0|1/0|0/1", "1/0|2/0|0/1", "1/0|0/1|2/0", "3/0|0/1", "1/0|2/1"]
            .iter()
            .map(|s| (bc(s), coeff_int(1))),
    );
    assert_eq!(product, expected);
    assert_eq!(product.num_terms(), 5);

    let coproduct = DqSym.coproduct(&bc("1/0|1/1"));
    let expected = LinComb::from_terms([
        ((bc("()"), bc("1/0|1/1")), coeff_int(1)),
        ((bc("1/0"), bc("1/1")), coeff_int(1)),
        ((bc("1/0|1/1"), bc("()")), coeff_int(1)),
    ]);
    assert_eq!(coproduct, expected);
    assert_eq!(coproduct.coeff(&(bc("1/0"), bc("1/1"))), coeff_int(1));

    // The middle leg comes from relabeling the signed suffix onto its own
    // standard ground.
    let legs = hopfb::instances::dqsym::signed_deconcatenation(&ssc("-1|-2 3"));
    assert_eq!(legs[1].0.to_string(), "-1");
    assert_eq!(legs[1].1.to_string(), "-1 2");

    println!(
        "[acceptance] criterion 2 PASS: 5-term product and 3-term coproduct reproduced exactly"
    );
}

#[test]
fn criterion_03_exhaustive_axiom_verification() {
    let start = Instant::now();
    let reports = [
        verify(&DqSym, 4),
        verify(&QSym, 5),
        verify(&Word3Algebra, 4),
    ];
    let elapsed = start.elapsed();
    for report in &reports {
        for check in &report.checks {
            assert!(
                check.passed(),
                "{} fails {} with {:?}",
                report.algebra,
                check.axiom.as_str(),
                check.violations.first()
            );
        }
    }
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "[acceptance] criterion 3 PASS: dqsym<=4, qsym<=5, word3<=4 all axioms hold ({elapsed:?})"
    );
}

#[test]
fn criterion_04_antipode_cross_check() {
    for n in 0..=4 {
        for b in DqSym.basis(n) {
            let x = LinComb::basis(b.clone());
            assert_eq!(
                antipode(&DqSym, &x),
                antipode_takeuchi(&DqSym, &x),
                "label {b}"
            );
        }
    }
    let m = LinComb::basis(bc("1/0"));
    assert_eq!(antipode(&DqSym, &m), m.neg());
    println!(
        "[acceptance] criterion 4 PASS: recursive and alternating-sum antipodes agree through degree 4"
    );
}

#[test]
fn criterion_05_sign_forgetting_is_a_bialgebra_morphism() {
    // Multiplicative on every basis pair of total degree <= 4.
    for total in 0..=4usize {
        for da in 0..=total {
            for a in DqSym.basis(da) {
                for b in DqSym.basis(total - da) {
                    let lhs = alpha_forget_lin(&DqSym.product(&a, &b));
                    let rhs = QSym.product(&alpha_forget(&a), &alpha_forget(&b));
                    assert_eq!(lhs, rhs, "a={a} b={b}");
                }
            }
        }
    }
    // Comultiplicative on every basis label of degree <= 4.
    for n in 0..=4 {
        for b in DqSym.basis(n) {
            let mut lhs: TensorElement<Composition, Composition> = LinComb::zero();
            for ((l, r), c) in DqSym.coproduct(&b).iter() {
                lhs.add_term((alpha_forget(l), alpha_forget(r)), c.clone());
            }
            let rhs = QSym.coproduct(&alpha_forget(&b));
            assert_eq!(lhs, rhs, "b={b}");
        }
    }
    println!(
        "[acceptance] criterion 5 PASS: the sign-forgetting map respects products and coproducts through total degree 4"
    );
}

#[test]
fn criterion_06_bijection_with_orbit_classes() {
    for n in 0..=4usize {
        let perms = enumerate_plain_permutations(n);
        let all = enumerate_signed_set_compositions(n);
        // Orbit canonical form: the least element of the orbit.
        let mut orbit_min: BTreeMap<SignedSetComposition, SignedSetComposition> = BTreeMap::new();
        for x in &all {
            let min = perms
                .iter()
                .map(|p| x.act(p).unwrap())
                .min()
                .expect("at least the identity");
            orbit_min.insert(x.clone(), min);
        }
        let orbits: BTreeSet<&SignedSetComposition> = orbit_min.values().collect();
        let bicompositions = enumerate_bicompositions(n);
        assert_eq!(orbits.len(), bicompositions.len(), "degree {n}");

        // Orbits correspond one to one to bicompositions.
        let mapped: BTreeSet<Bicomposition> =
            orbits.iter().map(|x| to_bicomposition(x)).collect();
        assert_eq!(
            mapped,
            bicompositions.iter().cloned().collect::<BTreeSet<_>>()
        );

        // The distinguished representative is constant on orbits, lies in
        // the orbit, and inverts the counting map.
        for (x, min) in &orbit_min {
            let rep = canonical_rep(x);
            assert_eq!(rep, canonical_rep(min));
            assert_eq!(orbit_min[&rep], *min);
            assert_eq!(from_bicomposition(&to_bicomposition(&rep)), rep);
        }
        for b in &bicompositions {
            assert_eq!(to_bicomposition(&from_bicomposition(b)), *b);
        }
    }

    // The worked class of degree 3.
    let class = [ssc("1 2|-3"), ssc("1 3|-2"), ssc("2 3|-1")];
    for member in &class {
        assert_eq!(to_bicomposition(member), bc("0/2|1/0"));
        assert_eq!(canonical_rep(member), ssc("1 2|-3"));
    }
    assert_eq!(from_bicomposition(&bc("0/2|1/0")), ssc("1 2|-3"));

    println!(
        "[acceptance] criterion 6 PASS: orbit classes match bicompositions exactly for degrees <= 4"
    );
}

#[test]
fn criterion_07_face_algebra_examples() {
    // Species-level product of a free coordinate with a fixed negative one.
    let x = FaceElement::from_sections(&[vec![1], vec![-1]]).unwrap();
    let y = FaceElement::from_sections(&[vec![-2]]).unwrap();
    let expected = FaceElement::from_sections(&[vec![1, -2], vec![-1, -2]]).unwrap();
    assert_eq!(face_product(&x, &y).unwrap(), expected);

    // Species-level coproduct of the face {(1,2),(1,-2)}.
    let h = FaceElement::from_sections(&[vec![1, 2], vec![1, -2]]).unwrap();
    let one = FaceElement::from_sections(&[vec![1]]).unwrap();
    let two_free = FaceElement::from_sections(&[vec![2], vec![-2]]).unwrap();
    let expected = LinComb::from_terms([
        ((h.clone(), FaceElement::empty()), coeff_int(1)),
        ((one.clone(), two_free.clone()), coeff_int(1)),
        ((two_free, one), coeff_int(1)),
        ((FaceElement::empty(), h.clone()), coeff_int(1)),
    ]);
    assert_eq!(face_coproduct(&h), expected);

    // Word encodings.
    let big = FaceElement::from_sections(&[
        vec![1, 2, -3, 4],
        vec![1, -2, -3, 4],
        vec![1, 2, -3, -4],
        vec![1, -2, -3, -4],
    ])
    .unwrap();
    assert_eq!(big.to_word().to_string(), "acbc");
    let shifted = FaceElement::from_sections(&[vec![5, -6]]).unwrap();
    assert_eq!(shifted.to_word().to_string(), "ab");

    // Sizes and the four-term deshuffle.
    for n in 0..=6 {
        assert_eq!(Word3Algebra.basis(n).len(), 3usize.pow(n as u32));
    }
    let ab = Word3Algebra.parse("ab").unwrap();
    let delta = Word3Algebra.coproduct(&ab);
    assert_eq!(delta.num_terms(), 4);
    let empty = Word3Algebra.unit();
    let a = Word3Algebra.parse("a").unwrap();
    let b = Word3Algebra.parse("b").unwrap();
    assert_eq!(delta.coeff(&(ab.clone(), empty.clone())), coeff_int(1));
    assert_eq!(delta.coeff(&(a.clone(), b.clone())), coeff_int(1));
    assert_eq!(delta.coeff(&(b, a)), coeff_int(1));
    assert_eq!(delta.coeff(&(empty, ab)), coeff_int(1));

    println!(
        "[acceptance] criterion 7 PASS: face product, face coproduct, acbc/ab encodings, 3^n sizes and the ab deshuffle all match"
    );
}

#[test]
fn criterion_08_one_point_species_images() {
    for n in 0..=5 {
        assert_eq!(eh_image_dimensions(n), (n + 1, 1 << n, 1), "degree {n}");
    }

    // Monomial model of K[x,y]: exponents (neg, pos) multiply by adding.
    for total in 0..=5usize {
        for da in 0..=total {
            let db = total - da;
            for neg_a in 0..=da {
                for neg_b in 0..=db {
                    let a = EhClass::new(neg_a, da - neg_a);
                    let b = EhClass::new(neg_b, db - neg_b);
                    let got = Eh.product(&a, &b);
                    let monomial =
                        EhClass::new(neg_a + neg_b, (da - neg_a) + (db - neg_b));
                    assert_eq!(got, LinComb::basis(monomial));
                }
            }
        }
    }
    println!(
        "[acceptance] criterion 8 PASS: image dimensions (n+1, 2^n, 1) for n <= 5 and class products multiply like bivariate monomials"
    );
}

#[test]
fn criterion_09_hyperoctahedral_dimensions() {
    let mut expected = 1usize;
    for n in 0..=5 {
        if n > 0 {
            expected *= 2 * n;
        }
        assert_eq!(enumerate_signed_linear_orders(n).len(), expected, "degree {n}");
    }

    // Generator closure reproduces the full group.
    for n in 0..=4 {
        let gens = SignedPermutation::generators(n);
        let mut reached: BTreeSet<SignedPermutation> = BTreeSet::new();
        let mut frontier = vec![SignedPermutation::identity(n)];
        reached.insert(SignedPermutation::identity(n));
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let next = g.compose(&w);
                if reached.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut order = 1usize;
        for k in 1..=n {
            order *= 2 * k;
        }
        assert_eq!(reached.len(), order, "group rank {n}");
    }
    println!(
        "[acceptance] criterion 9 PASS: 2^n n! signed orders for n <= 5 and generator closure sizes for n <= 4"
    );
}

/// DQSym with one quasishuffle term deleted from one product.
struct MutatedDqSym;

impl GradedBialgebra for MutatedDqSym {
    type Basis = Bicomposition;

    fn name(&self) -> &'static str {
        "dqsym-mutated"
    }

    fn unit(&self) -> Bicomposition {
        DqSym.unit()
    }

    fn degree(&self, b: &Bicomposition) -> usize {
        DqSym.degree(b)
    }

    fn basis(&self, n: usize) -> Vec<Bicomposition> {
        DqSym.basis(n)
    }

    fn product(&self, a: &Bicomposition, b: &Bicomposition) -> LinComb<Bicomposition> {
        let full = DqSym.product(a, b);
        if *a == bc("1/0") && *b == bc("0/1") {
            // Forget the fused term.
            return full.sub(&LinComb::basis(bc("1/1")));
        }
        full
    }

    fn coproduct(&self, b: &Bicomposition) -> TensorElement<Bicomposition, Bicomposition> {
        DqSym.coproduct(b)
    }

    fn parse(&self, text: &str) -> Result<Bicomposition> {
        DqSym.parse(text)
    }

    fn print(&self, b: &Bicomposition) -> String {
        DqSym.print(b)
    }
}

#[test]
fn criterion_10_mutation_sensitivity() {
    let report = verify(&MutatedDqSym, 3);
    assert!(!report.passed());
    let compat = report.check(Axiom::Compatibility);
    assert!(
        !compat.passed(),
        "compatibility must flag the dropped term"
    );
    println!(
        "[acceptance] criterion 10 PASS: dropping one quasishuffle term is caught by the compatibility check ({} violations)",
        compat.violations.len()
    );
}
