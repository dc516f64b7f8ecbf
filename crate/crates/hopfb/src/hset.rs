//! Finite sets with a fixed-point-free involution, their order-preserving
//! bijections, section maps and involution-stable set compositions.
//!
//! Signed elements are encoded as nonzero integers: the negative `-i` plays
//! the role of the barred letter. The standard model of rank `n` is
//! `[-n, n] = {-n, ..., -1, 1, ..., n}` with negation as the involution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two members of an involution pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Attach this sign to a positive magnitude.
    pub fn apply(self, magnitude: i64) -> i64 {
        debug_assert!(magnitude > 0);
        match self {
            Sign::Plus => magnitude,
            Sign::Minus => -magnitude,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A finite set of nonzero integers with a fixed-point-free involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSet {
    involution: BTreeMap<i64, i64>,
}

impl HSet {
    /// Build from an explicit involution table. The table must be a
    /// fixed-point-free involutive bijection of its own key set.
    pub fn new(involution: BTreeMap<i64, i64>) -> Result<Self> {
        for (&x, &y) in &involution {
            if x == 0 || y == 0 {
                return Err(Error::Invalid("elements must be nonzero".into()));
            }
            if x == y {
                return Err(Error::Invalid(format!("involution fixes {x}")));
            }
            match involution.get(&y) {
                Some(&back) if back == x => {}
                _ => {
                    return Err(Error::Invalid(format!(
                        "involution is not self-inverse at {x}"
                    )))
                }
            }
        }
        Ok(HSet { involution })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut involution = BTreeMap::new();
        for &(a, b) in pairs {
            if involution.insert(a, b).is_some() || involution.insert(b, a).is_some() {
                return Err(Error::Invalid(format!("duplicate element in pair ({a},{b})")));
            }
        }
        HSet::new(involution)
    }

    /// The standard model `[-n, n]` with negation.
    pub fn standard(n: usize) -> Self {
        let mut involution = BTreeMap::new();
        for i in 1..=n as i64 {
            involution.insert(i, -i);
            involution.insert(-i, i);
        }
        HSet { involution }
    }

    pub fn is_empty(&self) -> bool {
        self.involution.is_empty()
    }

    /// Total number of elements (always even).
    pub fn len(&self) -> usize {
        self.involution.len()
    }

    /// Number of involution pairs.
    pub fn rank(&self) -> usize {
        self.involution.len() / 2
    }

    pub fn contains(&self, x: i64) -> bool {
        self.involution.contains_key(&x)
    }

    pub fn elements(&self) -> impl Iterator<Item = i64> + '_ {
        self.involution.keys().copied()
    }

    pub fn involute(&self, x: i64) -> i64 {
        self.involution[&x]
    }

    /// Quotient representatives: the larger member of each pair, in
    /// increasing order.
    pub fn quotient_reps(&self) -> Vec<i64> {
        let mut reps: Vec<i64> = self
            .involution
            .iter()
            .filter(|&(&x, &y)| x > y)
            .map(|(&x, _)| x)
            .collect();
        reps.sort_unstable();
        reps
    }

    /// All elements in the total order induced by the quotient
    /// representatives `i_1 < ... < i_n`:
    /// `inv(i_n) < ... < inv(i_1) < i_1 < ... < i_n`.
    pub fn ordered_elements(&self) -> Vec<i64> {
        let reps = self.quotient_reps();
        let mut out: Vec<i64> = reps.iter().rev().map(|&r| self.involute(r)).collect();
        out.extend(reps);
        out
    }

    /// The unique order-preserving involution-compatible bijection onto the
    /// standard model of the same rank.
    pub fn standardize(&self) -> HBijection {
        let n = self.rank() as i64;
        let mut forward = BTreeMap::new();
        let targets = (-n..=n).filter(|&k| k != 0);
        for (x, k) in self.ordered_elements().into_iter().zip(targets) {
            forward.insert(x, k);
        }
        HBijection { forward }
    }
}

/// The unique order-preserving involution-compatible bijection between two
/// sets of equal rank: standardize the source, then un-standardize into the
/// target.
pub fn canonical_map(from: &HSet, to: &HSet) -> Result<HBijection> {
    if from.len() != to.len() {
        return Err(Error::SizeMismatch(format!(
            "cannot map a {}-element set onto a {}-element set",
            from.len(),
            to.len()
        )));
    }
    let st_from = from.standardize();
    let st_to_inv = to.standardize().inverse();
    let forward = st_from
        .forward
        .iter()
        .map(|(&x, &mid)| (x, st_to_inv.apply(mid)))
        .collect();
    Ok(HBijection { forward })
}

/// A bijection between two H-sets, stored as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBijection {
    forward: BTreeMap<i64, i64>,
}

impl HBijection {
    pub fn apply(&self, x: i64) -> i64 {
        self.forward[&x]
    }

    pub fn get(&self, x: i64) -> Option<i64> {
        self.forward.get(&x).copied()
    }

    pub fn inverse(&self) -> HBijection {
        HBijection {
            forward: self.forward.iter().map(|(&x, &y)| (y, x)).collect(),
        }
    }

    pub fn table(&self) -> &BTreeMap<i64, i64> {
        &self.forward
    }
}

/// A choice of one element from each involution pair of the standard model,
/// recorded as a sign per position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectionMap {
    signs: Vec<Sign>,
}

impl SectionMap {
    pub fn new(signs: Vec<Sign>) -> Self {
        SectionMap { signs }
    }

    pub fn degree(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, position: usize) -> Sign {
        self.signs[position - 1]
    }

    /// The image list `(s(1), ..., s(n))`.
    pub fn image(&self) -> Vec<i64> {
        self.signs
            .iter()
            .enumerate()
            .map(|(i, s)| s.apply(i as i64 + 1))
            .collect()
    }

    pub fn image_set(&self) -> BTreeSet<i64> {
        self.image().into_iter().collect()
    }
}

impl fmt::Display for SectionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.image().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for SectionMap {
    type Err = Error;

    /// Parses the parenthesized image list, e.g. `(1,-2,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("section map must be parenthesized: `{s}`")))?;
        let mut signs = Vec::new();
        if !inner.trim().is_empty() {
            for (i, tok) in inner.split(',').enumerate() {
                let v: i64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad section entry `{tok}`")))?;
                if v.unsigned_abs() as usize != i + 1 {
                    return Err(Error::Parse(format!(
                        "section entry {} must be +/-{}",
                        v,
                        i + 1
                    )));
                }
                signs.push(Sign::of(v));
            }
        }
        Ok(SectionMap::new(signs))
    }
}

/// All `2^n` section maps of degree `n`. Position 1 varies fastest, with
/// the positive choice first.
pub fn enumerate_sections(n: usize) -> Vec<SectionMap> {
    (0u64..(1 << n))
        .map(|mask| {
            let signs = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            SectionMap::new(signs)
        })
        .collect()
}

/// An ordered list of disjoint nonempty involution-stable blocks covering an
/// H-set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HSetComposition {
    blocks: Vec<BTreeSet<i64>>,
}

impl HSetComposition {
    pub fn new(blocks: Vec<BTreeSet<i64>>, ambient: &HSet) -> Result<Self> {
        let mut seen: BTreeSet<i64> = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &x in block {
                if !ambient.contains(x) {
                    return Err(Error::Invalid(format!("{x} is not in the ambient set")));
                }
                if !block.contains(&ambient.involute(x)) {
                    return Err(Error::Invalid(format!(
                        "block is not involution-stable at {x}"
                    )));
                }
                if !seen.insert(x) {
                    return Err(Error::Invalid(format!("blocks overlap at {x}")));
                }
            }
        }
        if seen.len() != ambient.len() {
            return Err(Error::Invalid("blocks do not cover the ambient set".into()));
        }
        Ok(HSetComposition { blocks })
    }

    pub fn blocks(&self) -> &[BTreeSet<i64>] {
        &self.blocks
    }
}

impl fmt::Display for HSetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// All stable compositions of the standard model of rank `n`. A stable block
/// is `A u -A` for a nonempty `A`, so these match the ordered set partitions
/// of `{1, ..., n}`; results come back sorted in the derived order.
pub fn enumerate_hset_compositions(n: usize) -> Vec<HSetComposition> {
    let universe: Vec<i64> = (1..=n as i64).collect();
    let mut out = Vec::new();
    let mut current: Vec<BTreeSet<i64>> = Vec::new();
    fill_compositions(&universe, &mut current, &mut out);
    out.sort();
    out
}

fn fill_compositions(
    remaining: &[i64],
    current: &mut Vec<BTreeSet<i64>>,
    out: &mut Vec<HSetComposition>,
) {
    if remaining.is_empty() {
        out.push(HSetComposition {
            blocks: current.clone(),
        });
        return;
    }
    // Nonempty subsets of the remaining positives, closed under negation.
    for mask in 1u64..(1 << remaining.len()) {
        let mut block = BTreeSet::new();
        let mut rest = Vec::new();
        for (i, &x) in remaining.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.insert(x);
                block.insert(-x);
            } else {
                rest.push(x);
            }
        }
        current.push(block);
        fill_compositions(&rest, current, out);
        current.pop();
    }
}

/// All ordered pairs `(S, T)` of stable sets with `S u T = [-n, n]`,
/// disjoint, empties allowed. Pairs are indexed by the subset of positions
/// routed to `S`; there are `2^n` of them.
pub fn stable_decompositions(n: usize) -> Vec<(BTreeSet<i64>, BTreeSet<i64>)> {
    (0u64..(1 << n))
        .map(|mask| {
            let mut s = BTreeSet::new();
            let mut t = BTreeSet::new();
            for i in 1..=n {
                let target = if mask >> (i - 1) & 1 == 1 { &mut s } else { &mut t };
                target.insert(i as i64);
                target.insert(-(i as i64));
            }
            (s, t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_nonstandard_set() {
        // Pairs -5<->3, -1<->2, 8<->9; quotient reps {2, 3, 9}.
        let h = HSet::from_pairs(&[(-5, 3), (-1, 2), (8, 9)]).unwrap();
        assert_eq!(h.quotient_reps(), vec![2, 3, 9]);
        assert_eq!(h.ordered_elements(), vec![8, -5, -1, 2, 3, 9]);
        let st = h.standardize();
        assert_eq!(st.apply(-1), -1);
        assert_eq!(st.apply(2), 1);
        assert_eq!(st.apply(-5), -2);
        assert_eq!(st.apply(3), 2);
        assert_eq!(st.apply(8), -3);
        assert_eq!(st.apply(9), 3);
    }

    #[test]
    fn standardize_standard_is_identity() {
        let h = HSet::standard(3);
        let st = h.standardize();
        for x in h.elements() {
            assert_eq!(st.apply(x), x);
        }
    }

    #[test]
    fn standardize_single_pair() {
        let h = HSet::from_pairs(&[(-7, 7)]).unwrap();
        let st = h.standardize();
        assert_eq!(st.apply(-7), -1);
        assert_eq!(st.apply(7), 1);
        // The only other bijection {-7,7} -> [-1,1] swaps the pair and is
        // not order-preserving.
        assert!(st.apply(-7) < st.apply(7));
    }

    #[test]
    fn standardize_commutes_with_involution() {
        let h = HSet::from_pairs(&[(-5, 3), (-1, 2), (8, 9)]).unwrap();
        let st = h.standardize();
        for x in h.elements() {
            assert_eq!(st.apply(h.involute(x)), -st.apply(x));
        }
    }

    #[test]
    fn canonical_map_shifts_ranges() {
        let from = HSet::standard(2);
        let to = HSet::from_pairs(&[(-3, 3), (-4, 4)]).unwrap();
        let can = canonical_map(&from, &to).unwrap();
        assert_eq!(can.apply(1), 3);
        assert_eq!(can.apply(2), 4);
        assert_eq!(can.apply(-1), -3);
        assert_eq!(can.apply(-2), -4);
    }

    #[test]
    fn canonical_map_identity() {
        let h = HSet::standard(2);
        let can = canonical_map(&h, &h).unwrap();
        for x in h.elements() {
            assert_eq!(can.apply(x), x);
        }
    }

    #[test]
    fn canonical_map_size_mismatch() {
        let a = HSet::standard(1);
        let b = HSet::standard(2);
        assert!(canonical_map(&a, &b).is_err());
    }

    #[test]
    fn empty_hset_standardizes_to_empty() {
        let h = HSet::standard(0);
        assert!(h.standardize().table().is_empty());
    }

    #[test]
    fn rejects_fixed_points_and_non_involutions() {
        let mut fixed = BTreeMap::new();
        fixed.insert(1, 1);
        assert!(HSet::new(fixed).is_err());

        let mut broken = BTreeMap::new();
        broken.insert(1, 2);
        broken.insert(2, 3);
        broken.insert(3, 1);
        assert!(HSet::new(broken).is_err());
    }

    #[test]
    fn sections_of_degree_two() {
        let sections = enumerate_sections(2);
        assert_eq!(sections.len(), 4);
        let images: Vec<Vec<i64>> = sections.iter().map(|s| s.image()).collect();
        assert_eq!(
            images,
            vec![vec![1, 2], vec![-1, 2], vec![1, -2], vec![-1, -2]]
        );
    }

    #[test]
    fn sections_count_and_base_case() {
        assert_eq!(enumerate_sections(0).len(), 1);
        assert_eq!(enumerate_sections(3).len(), 8);
        let all: BTreeSet<_> = enumerate_sections(3).into_iter().collect();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn section_text_round_trip() {
        for s in enumerate_sections(3) {
            let back: SectionMap = s.to_string().parse().unwrap();
            assert_eq!(back, s);
        }
        assert!("(1,2".parse::<SectionMap>().is_err());
        assert!("(2,1)".parse::<SectionMap>().is_err());
    }

    #[test]
    fn hset_composition_counts_are_fubini() {
        assert_eq!(enumerate_hset_compositions(0).len(), 1);
        assert_eq!(enumerate_hset_compositions(1).len(), 1);
        assert_eq!(enumerate_hset_compositions(2).len(), 3);
        assert_eq!(enumerate_hset_compositions(3).len(), 13);
        assert_eq!(enumerate_hset_compositions(4).len(), 75);
    }

    #[test]
    fn hset_composition_degree_two_blocks() {
        let got: BTreeSet<String> = enumerate_hset_compositions(2)
            .iter()
            .map(|c| c.to_string())
            .collect();
        let expected: BTreeSet<String> = ["-1 1|-2 2", "-2 2|-1 1", "-2 -1 1 2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn hset_composition_validation() {
        let ambient = HSet::standard(2);
        // Not stable: {1, 2} without the negatives.
        let bad = vec![[1i64, 2].into_iter().collect::<BTreeSet<_>>()];
        assert!(HSetComposition::new(bad, &ambient).is_err());
        // Stable but not covering.
        let partial = vec![[-1i64, 1].into_iter().collect::<BTreeSet<_>>()];
        assert!(HSetComposition::new(partial, &ambient).is_err());
        // Good.
        let good = vec![
            [-2i64, 2].into_iter().collect::<BTreeSet<_>>(),
            [-1i64, 1].into_iter().collect::<BTreeSet<_>>(),
        ];
        assert!(HSetComposition::new(good, &ambient).is_ok());
    }

    #[test]
    fn stable_decompositions_count() {
        assert_eq!(stable_decompositions(0).len(), 1);
        assert_eq!(stable_decompositions(3).len(), 8);
        for (s, t) in stable_decompositions(3) {
            assert_eq!(s.len() + t.len(), 6);
            assert!(s.intersection(&t).next().is_none());
        }
    }
}
