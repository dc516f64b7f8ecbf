//! Faces of the signed cube as section-map sets, and the graded algebra of
//! their three-letter encodings: `a` for a coordinate fixed positive, `b`
//! for fixed negative, `c` for free.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::bialgebra::GradedBialgebra;
use crate::error::{Error, Result};
use crate::hset::Sign;
use crate::lincomb::{Coeff, LinComb, TensorElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            'c' => Ok(Letter::C),
            _ => Err(Error::Parse(format!("letter `{c}` is not one of a, b, c"))),
        }
    }
}

/// A word over `{a, b, c}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word3 {
    letters: Vec<Letter>,
}

impl Word3 {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word3 { letters }
    }

    pub fn empty() -> Self {
        Word3::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, other: &Word3) -> Word3 {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word3 { letters }
    }

    /// Subword at the 0-based positions in `mask` (bit i = position i).
    fn subword(&self, mask: u64, keep: bool) -> Word3 {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i & 1 == 1) == keep)
            .map(|(_, &l)| l)
            .collect();
        Word3 { letters }
    }
}

impl fmt::Display for Word3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Word3::empty());
        }
        let letters = s.chars().map(Letter::from_char).collect::<Result<_>>()?;
        Ok(Word3 { letters })
    }
}

/// The graded algebra on words: concatenation, and the deshuffle coproduct
/// that routes each position to the left or right leg.
pub struct Word3Algebra;

impl GradedBialgebra for Word3Algebra {
    type Basis = Word3;

    fn name(&self) -> &'static str {
        "word3"
    }

    fn unit(&self) -> Word3 {
        Word3::empty()
    }

    fn degree(&self, b: &Word3) -> usize {
        b.len()
    }

    fn basis(&self, n: usize) -> Vec<Word3> {
        let mut out = Vec::with_capacity(3usize.pow(n as u32));
        let mut current = Vec::new();
        fn rec(n: usize, current: &mut Vec<Letter>, out: &mut Vec<Word3>) {
            if current.len() == n {
                out.push(Word3 {
                    letters: current.clone(),
                });
                return;
            }
            for l in [Letter::A, Letter::B, Letter::C] {
                current.push(l);
                rec(n, current, out);
                current.pop();
            }
        }
        rec(n, &mut current, &mut out);
        out
    }

    fn product(&self, a: &Word3, b: &Word3) -> LinComb<Word3> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct(&self, b: &Word3) -> TensorElement<Word3, Word3> {
        let n = b.len();
        let mut out = LinComb::zero();
        for mask in 0u64..(1 << n) {
            out.add_term(
                (b.subword(mask, true), b.subword(mask, false)),
                Coeff::from_integer(1.into()),
            );
        }
        out
    }

    fn parse(&self, text: &str) -> Result<Word3> {
        text.parse()
    }

    fn print(&self, b: &Word3) -> String {
        b.to_string()
    }
}

/// A face: a set of sections over a finite set of coordinate positions,
/// cut out by fixing the sign of some positions and leaving the rest free.
/// Positions are arbitrary positive integers so that species-level
/// restriction keeps its labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FaceElement {
    fixed: BTreeMap<usize, Sign>,
    free: BTreeSet<usize>,
}

impl FaceElement {
    pub fn new(fixed: BTreeMap<usize, Sign>, free: BTreeSet<usize>) -> Result<Self> {
        if fixed.keys().any(|p| free.contains(p)) {
            return Err(Error::Invalid("fixed and free positions overlap".into()));
        }
        if fixed.keys().chain(free.iter()).any(|&p| p == 0) {
            return Err(Error::Invalid("positions are 1-based".into()));
        }
        Ok(FaceElement { fixed, free })
    }

    pub fn empty() -> Self {
        FaceElement::default()
    }

    pub fn degree(&self) -> usize {
        self.fixed.len() + self.free.len()
    }

    pub fn positions(&self) -> BTreeSet<usize> {
        self.fixed.keys().copied().chain(self.free.iter().copied()).collect()
    }

    pub fn fixed(&self) -> &BTreeMap<usize, Sign> {
        &self.fixed
    }

    pub fn free(&self) -> &BTreeSet<usize> {
        &self.free
    }

    /// Keep only the given positions, labels unchanged.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> FaceElement {
        FaceElement {
            fixed: self
                .fixed
                .iter()
                .filter(|(p, _)| keep.contains(p))
                .map(|(&p, &s)| (p, s))
                .collect(),
            free: self.free.intersection(keep).copied().collect(),
        }
    }

    pub fn shift(&self, by: usize) -> FaceElement {
        FaceElement {
            fixed: self.fixed.iter().map(|(&p, &s)| (p + by, s)).collect(),
            free: self.free.iter().map(|&p| p + by).collect(),
        }
    }

    /// Relabel positions onto `1..=degree` by rank.
    pub fn standardize(&self) -> FaceElement {
        let order: Vec<usize> = self.positions().into_iter().collect();
        let rank = |p: usize| order.binary_search(&p).expect("position present") + 1;
        FaceElement {
            fixed: self.fixed.iter().map(|(&p, &s)| (rank(p), s)).collect(),
            free: self.free.iter().map(|&p| rank(p)).collect(),
        }
    }

    /// The `2^(free count)` sections of the face, each listed over the
    /// positions in increasing order as signed values.
    pub fn sections(&self) -> Vec<Vec<i64>> {
        let positions: Vec<usize> = self.positions().into_iter().collect();
        let free: Vec<usize> = self.free.iter().copied().collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << free.len()) {
            let assignment: BTreeMap<usize, Sign> = free
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    (p, if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                })
                .collect();
            let section = positions
                .iter()
                .map(|p| {
                    let sign = self.fixed.get(p).copied().unwrap_or_else(|| assignment[p]);
                    sign.apply(*p as i64)
                })
                .collect();
            out.push(section);
        }
        out.sort();
        out
    }

    /// Reconstruct a face from an explicit section set. The sections must
    /// all live over the same positions and form a full box: every position
    /// is either constant or takes both signs freely.
    pub fn from_sections(sections: &[Vec<i64>]) -> Result<FaceElement> {
        if sections.is_empty() {
            return Err(Error::Invalid("a face holds at least one section".into()));
        }
        let positions: BTreeSet<usize> =
            sections[0].iter().map(|v| v.unsigned_abs() as usize).collect();
        if positions.len() != sections[0].len() {
            return Err(Error::Invalid("repeated position in a section".into()));
        }
        let mut signs_seen: BTreeMap<usize, BTreeSet<Sign>> = BTreeMap::new();
        let mut distinct: BTreeSet<Vec<i64>> = BTreeSet::new();
        for section in sections {
            let here: BTreeSet<usize> =
                section.iter().map(|v| v.unsigned_abs() as usize).collect();
            if here != positions || section.len() != positions.len() {
                return Err(Error::Invalid(
                    "sections do not share one position set".into(),
                ));
            }
            for &v in section {
                signs_seen
                    .entry(v.unsigned_abs() as usize)
                    .or_default()
                    .insert(Sign::of(v));
            }
            let mut sorted = section.clone();
            sorted.sort_by_key(|v| v.unsigned_abs());
            distinct.insert(sorted);
        }
        let mut fixed = BTreeMap::new();
        let mut free = BTreeSet::new();
        for (p, signs) in &signs_seen {
            if signs.len() == 1 {
                fixed.insert(*p, *signs.iter().next().unwrap());
            } else {
                free.insert(*p);
            }
        }
        if distinct.len() != 1 << free.len() {
            return Err(Error::Invalid(
                "section set is not a full box over its free positions".into(),
            ));
        }
        FaceElement::new(fixed, free)
    }

    /// The three-letter encoding of the standardized face.
    pub fn to_word(&self) -> Word3 {
        let letters = self
            .positions()
            .into_iter()
            .map(|p| {
                match self.fixed.get(&p) {
                    Some(Sign::Plus) => Letter::A,
                    Some(Sign::Minus) => Letter::B,
                    None => Letter::C,
                }
            })
            .collect();
        Word3 { letters }
    }

    /// The face on positions `1..=len` decoded from a word.
    pub fn from_word(w: &Word3) -> FaceElement {
        let mut fixed = BTreeMap::new();
        let mut free = BTreeSet::new();
        for (i, &l) in w.letters().iter().enumerate() {
            match l {
                Letter::A => {
                    fixed.insert(i + 1, Sign::Plus);
                }
                Letter::B => {
                    fixed.insert(i + 1, Sign::Minus);
                }
                Letter::C => {
                    free.insert(i + 1);
                }
            }
        }
        FaceElement { fixed, free }
    }
}

impl fmt::Display for FaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fixed: Vec<String> = self
            .fixed
            .iter()
            .map(|(p, s)| format!("{p}:{s}"))
            .collect();
        let free: Vec<String> = self.free.iter().map(|p| p.to_string()).collect();
        write!(f, "fixed: {} ; free: {}", fixed.join(" "), free.join(" "))
    }
}

impl FromStr for FaceElement {
    type Err = Error;

    /// Parses either the `fixed: 1:+ 3:- ; free: 2` grammar or an explicit
    /// section set `{(1,2),(1,-2)}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('{') {
            let body = body
                .strip_suffix('}')
                .ok_or_else(|| Error::Parse("unterminated section set".into()))?;
            let mut sections = Vec::new();
            for chunk in body.split("),") {
                let chunk = chunk
                    .trim()
                    .trim_start_matches('(')
                    .trim_end_matches(')')
                    .trim();
                if chunk.is_empty() {
                    sections.push(Vec::new());
                    continue;
                }
                let section = chunk
                    .split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad entry `{tok}`")))
                    })
                    .collect::<Result<Vec<i64>>>()?;
                sections.push(section);
            }
            return FaceElement::from_sections(&sections).map_err(|e| Error::Parse(e.to_string()));
        }

        let (fixed_part, free_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected `fixed: ... ; free: ...`".into()))?;
        let fixed_body = fixed_part
            .trim()
            .strip_prefix("fixed:")
            .ok_or_else(|| Error::Parse("missing `fixed:`".into()))?;
        let free_body = free_part
            .trim()
            .strip_prefix("free:")
            .ok_or_else(|| Error::Parse("missing `free:`".into()))?;
        let mut fixed = BTreeMap::new();
        for tok in fixed_body.split_whitespace() {
            let (p, sign) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad fixed entry `{tok}`")))?;
            let p: usize = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad position `{p}`")))?;
            let sign = match sign {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => return Err(Error::Parse(format!("bad sign `{sign}`"))),
            };
            if fixed.insert(p, sign).is_some() {
                return Err(Error::Parse(format!("repeated position {p}")));
            }
        }
        let mut free = BTreeSet::new();
        for tok in free_body.split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad position `{tok}`")))?;
            if !free.insert(p) {
                return Err(Error::Parse(format!("repeated position {p}")));
            }
        }
        FaceElement::new(fixed, free).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Species-level product: the two faces live on disjoint position sets and
/// their section sets combine by pairwise union.
pub fn face_product(x: &FaceElement, y: &FaceElement) -> Result<FaceElement> {
    if !x.positions().is_disjoint(&y.positions()) {
        return Err(Error::Invalid("faces share a position".into()));
    }
    let mut fixed = x.fixed.clone();
    fixed.extend(y.fixed.iter().map(|(&p, &s)| (p, s)));
    let free = x.free.union(&y.free).copied().collect();
    Ok(FaceElement { fixed, free })
}

/// Species-level coproduct: one term per two-sided stable split of the
/// positions, each leg keeping its original labels.
pub fn face_coproduct(x: &FaceElement) -> TensorElement<FaceElement, FaceElement> {
    let positions: Vec<usize> = x.positions().into_iter().collect();
    let mut out = LinComb::zero();
    for mask in 0u64..(1 << positions.len()) {
        let left: BTreeSet<usize> = positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let right: BTreeSet<usize> = positions
            .iter()
            .filter(|p| !left.contains(p))
            .copied()
            .collect();
        out.add_term(
            (x.restrict(&left), x.restrict(&right)),
            Coeff::from_integer(1.into()),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::coeff_int;

    fn w(s: &str) -> Word3 {
        s.parse().unwrap()
    }

    #[test]
    fn word_encoding_of_big_face() {
        let face = FaceElement::from_sections(&[
            vec![1, 2, -3, 4],
            vec![1, -2, -3, 4],
            vec![1, 2, -3, -4],
            vec![1, -2, -3, -4],
        ])
        .unwrap();
        assert_eq!(face.to_word(), w("acbc"));
    }

    #[test]
    fn word_encoding_standardizes_positions() {
        let face = FaceElement::from_sections(&[vec![5, -6]]).unwrap();
        assert_eq!(face.to_word(), w("ab"));
    }

    #[test]
    fn single_fixed_negative() {
        let face = FaceElement::from_sections(&[vec![-1]]).unwrap();
        assert_eq!(face.to_word(), w("b"));
    }

    #[test]
    fn species_product_example() {
        let x = FaceElement::from_sections(&[vec![1], vec![-1]]).unwrap();
        let y = FaceElement::from_sections(&[vec![-2]]).unwrap();
        let got = face_product(&x, &y).unwrap();
        let expected = FaceElement::from_sections(&[vec![1, -2], vec![-1, -2]]).unwrap();
        assert_eq!(got, expected);
        assert!(face_product(&x, &x).is_err());
    }

    #[test]
    fn species_coproduct_example() {
        let h = FaceElement::from_sections(&[vec![1, 2], vec![1, -2]]).unwrap();
        let got = face_coproduct(&h);
        let one = FaceElement::from_sections(&[vec![1]]).unwrap();
        let two_free = FaceElement::from_sections(&[vec![2], vec![-2]]).unwrap();
        let expected = LinComb::from_terms([
            ((h.clone(), FaceElement::empty()), coeff_int(1)),
            ((one.clone(), two_free.clone()), coeff_int(1)),
            ((two_free, one), coeff_int(1)),
            ((FaceElement::empty(), h.clone()), coeff_int(1)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn word_product_is_concatenation() {
        let got = Word3Algebra.product(&w("acbc"), &w("ab"));
        assert_eq!(got, LinComb::basis(w("acbcab")));
    }

    #[test]
    fn word_coproduct_is_deshuffle() {
        let got = Word3Algebra.coproduct(&w("ab"));
        let expected = LinComb::from_terms([
            ((w("ab"), Word3::empty()), coeff_int(1)),
            ((w("a"), w("b")), coeff_int(1)),
            ((w("b"), w("a")), coeff_int(1)),
            ((Word3::empty(), w("ab")), coeff_int(1)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn repeated_letters_pick_up_multiplicity() {
        let got = Word3Algebra.coproduct(&w("aa"));
        assert_eq!(got.coeff(&(w("a"), w("a"))), coeff_int(2));
    }

    #[test]
    fn basis_sizes_are_powers_of_three() {
        for n in 0..=5 {
            assert_eq!(Word3Algebra.basis(n).len(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn face_word_bijection_small_degrees() {
        for n in 0..=3 {
            for word in Word3Algebra.basis(n) {
                let face = FaceElement::from_word(&word);
                assert_eq!(face.to_word(), word);
                assert_eq!(face.sections().len(), 1 << face.free().len());
            }
        }
    }

    #[test]
    fn face_ops_transport_to_word_ops() {
        for n in 0..=3 {
            for word in Word3Algebra.basis(n) {
                let face = FaceElement::from_word(&word);
                // Coproduct legs, standardized, match the word deshuffle.
                let mut via_faces: TensorElement<Word3, Word3> = LinComb::zero();
                for ((l, r), c) in face_coproduct(&face).iter() {
                    via_faces.add_term((l.to_word(), r.to_word()), c.clone());
                }
                assert_eq!(via_faces, Word3Algebra.coproduct(&word));
            }
        }
        // Products against a shifted second factor match concatenation.
        for wa in Word3Algebra.basis(2) {
            for wb in Word3Algebra.basis(2) {
                let fa = FaceElement::from_word(&wa);
                let fb = FaceElement::from_word(&wb).shift(2);
                let prod = face_product(&fa, &fb).unwrap();
                assert_eq!(LinComb::basis(prod.to_word()), Word3Algebra.product(&wa, &wb));
            }
        }
    }

    #[test]
    fn face_text_round_trip() {
        let face = FaceElement::from_sections(&[vec![1, 2, -3], vec![1, -2, -3]]).unwrap();
        assert_eq!(face.to_string(), "fixed: 1:+ 3:- ; free: 2");
        let back: FaceElement = face.to_string().parse().unwrap();
        assert_eq!(back, face);
        let from_set: FaceElement = "{(1,2,-3),(1,-2,-3)}".parse().unwrap();
        assert_eq!(from_set, face);
        let empty: FaceElement = "fixed: ; free:".parse().unwrap();
        assert_eq!(empty, FaceElement::empty());
    }

    #[test]
    fn from_sections_rejects_partial_boxes() {
        // Two sections disagreeing on two positions but not a full square.
        assert!(FaceElement::from_sections(&[vec![1, 2], vec![-1, -2]]).is_err());
        assert!(FaceElement::from_sections(&[]).is_err());
        assert!(FaceElement::from_sections(&[vec![1], vec![2]]).is_err());
    }
}
