//! Exhaustive small-degree verification of the bialgebra axioms, with a
//! structured report.

use num::{One, Zero};
use serde::Serialize;

use crate::bialgebra::{
    antipode_convolution, coproduct_lin, product_lin, GradedBialgebra,
};
use crate::lincomb::{tensor, Coeff, LinComb, TensorElement};

/// The axioms checked by [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    UnitLaws,
    Coassociativity,
    CounitLaws,
    Compatibility,
    AntipodeConvolution,
    Grading,
}

impl Axiom {
    pub fn as_str(&self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::UnitLaws => "unit_laws",
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLaws => "counit_laws",
            Axiom::Compatibility => "compatibility",
            Axiom::AntipodeConvolution => "antipode_convolution",
            Axiom::Grading => "grading",
        }
    }
}

/// Outcome of one axiom's exhaustive sweep.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Full report of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub max_degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is always present")
    }

    /// One line per axiom plus a verdict, for terminal output.
    pub fn summary(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!(
            "verify {} up to total degree {}",
            self.algebra, self.max_degree
        ));
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            lines.push(format!(
                "  {:<22} {:>7} cases  {}",
                c.axiom.as_str(),
                c.cases,
                status
            ));
            for v in c.violations.iter().take(5) {
                lines.push(format!("    violated: {v}"));
            }
            if c.violations.len() > 5 {
                lines.push(format!("    ... and {} more", c.violations.len() - 5));
            }
        }
        lines.push(if self.passed() {
            "all checks passed".to_string()
        } else {
            "VERIFICATION FAILED".to_string()
        });
        lines.join("\n")
    }
}

struct Sweep<'a, A: GradedBialgebra> {
    alg: &'a A,
    /// Basis labels by degree, 0..=max_degree.
    by_degree: Vec<Vec<A::Basis>>,
}

impl<'a, A: GradedBialgebra> Sweep<'a, A> {
    fn labels(&self, n: usize) -> &[A::Basis] {
        &self.by_degree[n]
    }

    fn all_degrees(&self) -> std::ops::RangeInclusive<usize> {
        0..=(self.by_degree.len() - 1)
    }
}

/// Check every axiom exhaustively over basis labels of total degree at most
/// `max_degree`; collect every violated instance.
pub fn verify<A: GradedBialgebra>(alg: &A, max_degree: usize) -> VerifyReport {
    let sweep = Sweep {
        alg,
        by_degree: (0..=max_degree).map(|n| alg.basis(n)).collect(),
    };
    let checks = vec![
        check_grading(&sweep),
        check_unit_laws(&sweep),
        check_associativity(&sweep),
        check_coassociativity(&sweep),
        check_counit_laws(&sweep),
        check_compatibility(&sweep),
        check_antipode(&sweep),
    ];
    VerifyReport {
        algebra: alg.name().to_string(),
        max_degree,
        checks,
    }
}

fn check_grading<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();

    // Connectedness and basis consistency.
    for n in sweep.all_degrees() {
        cases += 1;
        let labels = sweep.labels(n);
        if n == 0 && labels != [alg.unit()] {
            violations.push("degree 0 basis is not exactly the unit".to_string());
        }
        let mut sorted = labels.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            violations.push(format!("degree {n} basis has duplicates"));
        }
        for b in labels {
            if alg.degree(b) != n {
                violations.push(format!("label {} listed in wrong degree {n}", alg.print(b)));
            }
            let eps = alg.counit(b);
            let expected = if *b == alg.unit() { Coeff::one() } else { Coeff::zero() };
            if eps != expected {
                violations.push(format!("counit of {} is {eps}", alg.print(b)));
            }
        }
    }

    // Homogeneity of the structure maps.
    for (dx, dy) in degree_pairs(sweep) {
        for x in sweep.labels(dx) {
            for y in sweep.labels(dy) {
                cases += 1;
                for (t, _) in alg.product(x, y).iter() {
                    if alg.degree(t) != dx + dy {
                        violations.push(format!(
                            "product {} * {} has a term off degree {}",
                            alg.print(x),
                            alg.print(y),
                            dx + dy
                        ));
                    }
                }
            }
        }
    }
    for n in sweep.all_degrees() {
        for x in sweep.labels(n) {
            cases += 1;
            for ((l, r), _) in alg.coproduct(x).iter() {
                if alg.degree(l) + alg.degree(r) != n {
                    violations.push(format!(
                        "coproduct of {} has a term off total degree {n}",
                        alg.print(x)
                    ));
                }
            }
        }
    }

    AxiomCheck {
        axiom: Axiom::Grading,
        cases,
        violations,
    }
}

fn check_unit_laws<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let unit = alg.unit();
    let mut cases = 0;
    let mut violations = Vec::new();
    for n in sweep.all_degrees() {
        for x in sweep.labels(n) {
            cases += 1;
            let expected = LinComb::basis(x.clone());
            if alg.product(&unit, x) != expected {
                violations.push(format!("unit * {} is wrong", alg.print(x)));
            }
            if alg.product(x, &unit) != expected {
                violations.push(format!("{} * unit is wrong", alg.print(x)));
            }
        }
    }
    // The unit is grouplike.
    cases += 1;
    if alg.coproduct(&unit) != tensor(&LinComb::basis(unit.clone()), &LinComb::basis(unit.clone()))
    {
        violations.push("coproduct of the unit is not unit x unit".to_string());
    }
    AxiomCheck {
        axiom: Axiom::UnitLaws,
        cases,
        violations,
    }
}

fn check_associativity<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();
    for (dx, dy, dz) in degree_triples(sweep) {
        for x in sweep.labels(dx) {
            for y in sweep.labels(dy) {
                let xy = alg.product(x, y);
                for z in sweep.labels(dz) {
                    cases += 1;
                    let left = product_lin(alg, &xy, &LinComb::basis(z.clone()));
                    let yz = alg.product(y, z);
                    let right = product_lin(alg, &LinComb::basis(x.clone()), &yz);
                    if left != right {
                        violations.push(format!(
                            "({} * {}) * {} differs from the right-nested product",
                            alg.print(x),
                            alg.print(y),
                            alg.print(z)
                        ));
                    }
                }
            }
        }
    }
    AxiomCheck {
        axiom: Axiom::Associativity,
        cases,
        violations,
    }
}

fn check_coassociativity<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();
    for n in sweep.all_degrees() {
        for x in sweep.labels(n) {
            cases += 1;
            let delta = alg.coproduct(x);
            // Refine the left leg, then the right leg; compare as 3-leg sums.
            let mut left: LinComb<(A::Basis, A::Basis, A::Basis)> = LinComb::zero();
            for ((l, r), c) in delta.iter() {
                for ((a, b), d) in alg.coproduct(l).iter() {
                    left.add_term((a.clone(), b.clone(), r.clone()), c * d);
                }
            }
            let mut right: LinComb<(A::Basis, A::Basis, A::Basis)> = LinComb::zero();
            for ((l, r), c) in delta.iter() {
                for ((a, b), d) in alg.coproduct(r).iter() {
                    right.add_term((l.clone(), a.clone(), b.clone()), c * d);
                }
            }
            if left != right {
                violations.push(format!("coproduct of {} is not coassociative", alg.print(x)));
            }
        }
    }
    AxiomCheck {
        axiom: Axiom::Coassociativity,
        cases,
        violations,
    }
}

fn check_counit_laws<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();
    for n in sweep.all_degrees() {
        for x in sweep.labels(n) {
            cases += 1;
            let delta = alg.coproduct(x);
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((l, r), c) in delta.iter() {
                left.add_term(r.clone(), &alg.counit(l) * c);
                right.add_term(l.clone(), &alg.counit(r) * c);
            }
            let expected = LinComb::basis(x.clone());
            if left != expected {
                violations.push(format!("(counit x id) fails on {}", alg.print(x)));
            }
            if right != expected {
                violations.push(format!("(id x counit) fails on {}", alg.print(x)));
            }
        }
    }
    AxiomCheck {
        axiom: Axiom::CounitLaws,
        cases,
        violations,
    }
}

fn check_compatibility<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();
    for (dx, dy) in degree_pairs(sweep) {
        for x in sweep.labels(dx) {
            let dx_t = alg.coproduct(x);
            for y in sweep.labels(dy) {
                cases += 1;
                let lhs = coproduct_lin(alg, &alg.product(x, y));
                // Componentwise product of the two coproducts, no sign
                // twist in the middle swap.
                let dy_t = alg.coproduct(y);
                let mut rhs: TensorElement<A::Basis, A::Basis> = LinComb::zero();
                for ((xl, xr), cx) in dx_t.iter() {
                    for ((yl, yr), cy) in dy_t.iter() {
                        let left = alg.product(xl, yl);
                        let right = alg.product(xr, yr);
                        let t = tensor(&left, &right).scale(&(cx * cy));
                        rhs = rhs.add(&t);
                    }
                }
                if lhs != rhs {
                    violations.push(format!(
                        "coproduct of {} * {} differs from the product of coproducts",
                        alg.print(x),
                        alg.print(y)
                    ));
                }
                // The counit is multiplicative as well.
                let eps_prod: Coeff = alg
                    .product(x, y)
                    .iter()
                    .map(|(t, c)| &alg.counit(t) * c)
                    .fold(Coeff::zero(), |acc, v| acc + v);
                if eps_prod != &alg.counit(x) * &alg.counit(y) {
                    violations.push(format!(
                        "counit is not multiplicative on {} * {}",
                        alg.print(x),
                        alg.print(y)
                    ));
                }
            }
        }
    }
    AxiomCheck {
        axiom: Axiom::Compatibility,
        cases,
        violations,
    }
}

fn check_antipode<A: GradedBialgebra>(sweep: &Sweep<A>) -> AxiomCheck {
    let alg = sweep.alg;
    let mut cases = 0;
    let mut violations = Vec::new();
    for n in sweep.all_degrees() {
        for x in sweep.labels(n) {
            cases += 1;
            let expected = LinComb::term(alg.unit(), alg.counit(x));
            if antipode_convolution(alg, x, true) != expected {
                violations.push(format!("S * id convolution fails on {}", alg.print(x)));
            }
            if antipode_convolution(alg, x, false) != expected {
                violations.push(format!("id * S convolution fails on {}", alg.print(x)));
            }
        }
    }
    AxiomCheck {
        axiom: Axiom::AntipodeConvolution,
        cases,
        violations,
    }
}

fn degree_pairs<A: GradedBialgebra>(sweep: &Sweep<A>) -> Vec<(usize, usize)> {
    let max = sweep.by_degree.len() - 1;
    let mut out = Vec::new();
    for dx in 0..=max {
        for dy in 0..=(max - dx) {
            out.push((dx, dy));
        }
    }
    out
}

fn degree_triples<A: GradedBialgebra>(sweep: &Sweep<A>) -> Vec<(usize, usize, usize)> {
    let max = sweep.by_degree.len() - 1;
    let mut out = Vec::new();
    for dx in 0..=max {
        for dy in 0..=(max - dx) {
            for dz in 0..=(max - dx - dy) {
                out.push((dx, dy, dz));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Result;
    use crate::instances::qsym::{Composition, QSym};

    #[test]
    fn degree_zero_is_trivially_clean() {
        let report = verify(&QSym, 0);
        assert!(report.passed());
    }

    #[test]
    fn report_serializes() {
        let report = verify(&QSym, 2);
        assert!(report.passed());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["algebra"], "qsym");
        assert!(json["checks"].as_array().unwrap().len() == 7);
    }

    /// A wrapper that forgets one term of one product, to show the harness
    /// actually detects broken structure constants.
    struct BrokenQSym;

    impl GradedBialgebra for BrokenQSym {
        type Basis = Composition;

        fn name(&self) -> &'static str {
            "broken-qsym"
        }

        fn unit(&self) -> Composition {
            QSym.unit()
        }

        fn degree(&self, b: &Composition) -> usize {
            QSym.degree(b)
        }

        fn basis(&self, n: usize) -> Vec<Composition> {
            QSym.basis(n)
        }

        fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
            let full = QSym.product(a, b);
            let one: Composition = "1".parse().unwrap();
            if *a == one && *b == one {
                let two: Composition = "2".parse().unwrap();
                return full.sub(&LinComb::basis(two));
            }
            full
        }

        fn coproduct(&self, b: &Composition) -> TensorElement<Composition, Composition> {
            QSym.coproduct(b)
        }

        fn parse(&self, text: &str) -> Result<Composition> {
            QSym.parse(text)
        }

        fn print(&self, b: &Composition) -> String {
            QSym.print(b)
        }
    }

    #[test]
    fn harness_detects_a_dropped_product_term() {
        let report = verify(&BrokenQSym, 3);
        assert!(!report.passed());
        assert!(!report.check(Axiom::Compatibility).passed());
    }
}
