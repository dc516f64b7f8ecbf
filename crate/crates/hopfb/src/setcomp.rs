//! Set compositions of signed ground sets and the restriction /
//! concatenation / shuffle / quasishuffle calculus.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

/// An ordered sequence of pairwise-disjoint nonempty blocks of nonzero
/// integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetComposition {
    blocks: Vec<BTreeSet<i64>>,
}

impl SetComposition {
    pub fn new(blocks: Vec<BTreeSet<i64>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &x in block {
                if x == 0 {
                    return Err(Error::Invalid("elements must be nonzero".into()));
                }
                if !seen.insert(x) {
                    return Err(Error::Invalid(format!("blocks overlap at {x}")));
                }
            }
        }
        Ok(SetComposition { blocks })
    }

    pub fn empty() -> Self {
        SetComposition { blocks: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[BTreeSet<i64>] {
        &self.blocks
    }

    pub fn ground(&self) -> BTreeSet<i64> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Blockwise intersection with `s`, dropping empty intersections.
    pub fn restrict(&self, s: &BTreeSet<i64>) -> SetComposition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.intersection(s).copied().collect::<BTreeSet<i64>>())
            .filter(|b| !b.is_empty())
            .collect();
        SetComposition { blocks }
    }

    /// Block-list concatenation; the ground sets must be disjoint.
    pub fn concat(&self, other: &SetComposition) -> Result<SetComposition> {
        let blocks = self
            .blocks
            .iter()
            .chain(other.blocks.iter())
            .cloned()
            .collect();
        SetComposition::new(blocks)
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.blocks.iter().map(|b| format_block(b)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Block rendering: negative elements first by absolute value, then positive
/// ones, space-separated.
fn format_block(block: &BTreeSet<i64>) -> String {
    let mut elems: Vec<i64> = block.iter().copied().collect();
    elems.sort_by_key(|&x| (x > 0, x.abs()));
    elems
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl FromStr for SetComposition {
    type Err = Error;

    /// Parses the `-1 2|-3` grammar; `()` is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(SetComposition::empty());
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let mut block = BTreeSet::new();
            for tok in part.split_whitespace() {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element `{tok}`")))?;
                if v == 0 {
                    return Err(Error::Parse("element 0 is not allowed".into()));
                }
                if !block.insert(v) {
                    return Err(Error::Parse(format!("repeated element {v}")));
                }
            }
            if block.is_empty() {
                return Err(Error::Parse(format!("empty block in `{s}`")));
            }
            blocks.push(block);
        }
        SetComposition::new(blocks).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All interleavings of the blocks of `f` and `g` preserving both internal
/// orders; no merges. The ground sets must be disjoint.
pub fn shuffle(f: &SetComposition, g: &SetComposition) -> Result<Vec<SetComposition>> {
    check_disjoint(f, g)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    shuffle_rec(&f.blocks, &g.blocks, &mut prefix, &mut out);
    out.sort();
    Ok(out)
}

fn shuffle_rec(
    f: &[BTreeSet<i64>],
    g: &[BTreeSet<i64>],
    prefix: &mut Vec<BTreeSet<i64>>,
    out: &mut Vec<SetComposition>,
) {
    if f.is_empty() && g.is_empty() {
        out.push(SetComposition {
            blocks: prefix.clone(),
        });
        return;
    }
    if let Some((head, rest)) = f.split_first() {
        prefix.push(head.clone());
        shuffle_rec(rest, g, prefix, out);
        prefix.pop();
    }
    if let Some((head, rest)) = g.split_first() {
        prefix.push(head.clone());
        shuffle_rec(f, rest, prefix, out);
        prefix.pop();
    }
}

/// All set compositions restricting to `f` on its ground and to `g` on the
/// other: interleavings in which a block of `f` and a block of `g` that end
/// up adjacent may also fuse into a single block.
pub fn quasishuffle(f: &SetComposition, g: &SetComposition) -> Result<Vec<SetComposition>> {
    check_disjoint(f, g)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    quasishuffle_rec(&f.blocks, &g.blocks, &mut prefix, &mut out);
    out.sort();
    Ok(out)
}

fn quasishuffle_rec(
    f: &[BTreeSet<i64>],
    g: &[BTreeSet<i64>],
    prefix: &mut Vec<BTreeSet<i64>>,
    out: &mut Vec<SetComposition>,
) {
    if f.is_empty() && g.is_empty() {
        out.push(SetComposition {
            blocks: prefix.clone(),
        });
        return;
    }
    if let Some((head, rest)) = f.split_first() {
        prefix.push(head.clone());
        quasishuffle_rec(rest, g, prefix, out);
        prefix.pop();
    }
    if let Some((head, rest)) = g.split_first() {
        prefix.push(head.clone());
        quasishuffle_rec(f, rest, prefix, out);
        prefix.pop();
    }
    if let (Some((fh, fr)), Some((gh, gr))) = (f.split_first(), g.split_first()) {
        prefix.push(fh.union(gh).copied().collect());
        quasishuffle_rec(fr, gr, prefix, out);
        prefix.pop();
    }
}

fn check_disjoint(f: &SetComposition, g: &SetComposition) -> Result<()> {
    let fg = f.ground();
    if g.ground().iter().any(|x| fg.contains(x)) {
        return Err(Error::Invalid("ground sets are not disjoint".into()));
    }
    Ok(())
}

/// Quasishuffle at the level of abstract part sequences: every interleaving
/// path contributes one result, and a step may fuse the leading parts of the
/// two inputs via `merge`. Paths are returned individually, so repeated
/// outcomes appear with multiplicity.
pub fn quasishuffle_sequences<T: Clone>(
    p: &[T],
    q: &[T],
    merge: &impl Fn(&T, &T) -> T,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    qs_seq_rec(p, q, merge, &mut prefix, &mut out);
    out
}

fn qs_seq_rec<T: Clone>(
    p: &[T],
    q: &[T],
    merge: &impl Fn(&T, &T) -> T,
    prefix: &mut Vec<T>,
    out: &mut Vec<Vec<T>>,
) {
    if p.is_empty() && q.is_empty() {
        out.push(prefix.clone());
        return;
    }
    if let Some((head, rest)) = p.split_first() {
        prefix.push(head.clone());
        qs_seq_rec(rest, q, merge, prefix, out);
        prefix.pop();
    }
    if let Some((head, rest)) = q.split_first() {
        prefix.push(head.clone());
        qs_seq_rec(p, rest, merge, prefix, out);
        prefix.pop();
    }
    if let (Some((ph, pr)), Some((qh, qr))) = (p.split_first(), q.split_first()) {
        prefix.push(merge(ph, qh));
        qs_seq_rec(pr, qr, merge, prefix, out);
        prefix.pop();
    }
}

/// A set composition whose ground set is a section image of `[-n, n]`: each
/// absolute value `1..=n` occurs exactly once, with one sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSetComposition {
    comp: SetComposition,
    degree: usize,
}

impl SignedSetComposition {
    pub fn new(comp: SetComposition) -> Result<Self> {
        let ground = comp.ground();
        let degree = ground.len();
        let mut seen = vec![false; degree];
        for &x in &ground {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > degree || seen[a - 1] {
                return Err(Error::Invalid(format!(
                    "ground of `{comp}` is not a section image of a standard set"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedSetComposition { comp, degree })
    }

    pub fn empty() -> Self {
        SignedSetComposition {
            comp: SetComposition::empty(),
            degree: 0,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn as_composition(&self) -> &SetComposition {
        &self.comp
    }

    pub fn blocks(&self) -> &[BTreeSet<i64>] {
        self.comp.blocks()
    }

    /// Relabel a composition with distinct absolute values onto the standard
    /// ground: the k-th smallest absolute value becomes k, signs kept.
    pub fn standardize_from(comp: &SetComposition) -> Result<Self> {
        let mut abs: Vec<u64> = comp.ground().iter().map(|x| x.unsigned_abs()).collect();
        abs.sort_unstable();
        abs.dedup();
        if abs.len() != comp.ground().len() {
            return Err(Error::Invalid(format!(
                "`{comp}` carries both signs of some value"
            )));
        }
        let rank = |x: i64| -> i64 {
            let r = abs.binary_search(&x.unsigned_abs()).unwrap() as i64 + 1;
            if x < 0 {
                -r
            } else {
                r
            }
        };
        let blocks = comp
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| rank(x)).collect())
            .collect();
        SignedSetComposition::new(SetComposition { blocks })
    }

    /// Act by a signed permutation: `x` goes to `sign(x) * w(|x|)`, blocks
    /// kept in place.
    pub fn act(&self, w: &SignedPermutation) -> Result<Self> {
        if w.degree() != self.degree {
            return Err(Error::SizeMismatch(format!(
                "permutation of rank {} acting on degree {}",
                w.degree(),
                self.degree
            )));
        }
        let blocks = self
            .comp
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| w.apply(x)).collect())
            .collect();
        SignedSetComposition::new(SetComposition { blocks })
    }
}

impl fmt::Display for SignedSetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.comp.fmt(f)
    }
}

impl FromStr for SignedSetComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comp: SetComposition = s.parse()?;
        SignedSetComposition::new(comp).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All ordered set partitions of `elems`, every ordering of disjoint
/// nonempty blocks covering it.
pub fn ordered_set_partitions(elems: &BTreeSet<i64>) -> Vec<Vec<BTreeSet<i64>>> {
    let elems: Vec<i64> = elems.iter().copied().collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    osp_rec(&elems, &mut current, &mut out);
    out
}

fn osp_rec(remaining: &[i64], current: &mut Vec<BTreeSet<i64>>, out: &mut Vec<Vec<BTreeSet<i64>>>) {
    if remaining.is_empty() {
        out.push(current.clone());
        return;
    }
    for mask in 1u64..(1 << remaining.len()) {
        let mut block = BTreeSet::new();
        let mut rest = Vec::new();
        for (i, &x) in remaining.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.insert(x);
            } else {
                rest.push(x);
            }
        }
        current.push(block);
        osp_rec(&rest, current, out);
        current.pop();
    }
}

/// Every signed set composition of degree `n`: an ordered set partition of
/// `{1..n}` with an independent sign per value. Sorted.
pub fn enumerate_signed_set_compositions(n: usize) -> Vec<SignedSetComposition> {
    let universe: BTreeSet<i64> = (1..=n as i64).collect();
    let mut out = Vec::new();
    for partition in ordered_set_partitions(&universe) {
        for mask in 0u64..(1 << n) {
            let blocks = partition
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&x| if mask >> (x - 1) & 1 == 1 { -x } else { x })
                        .collect()
                })
                .collect();
            out.push(SignedSetComposition {
                comp: SetComposition { blocks },
                degree: n,
            });
        }
    }
    out.sort();
    out
}
