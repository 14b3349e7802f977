//! Noncrossing symmetric matchings, alpha words, the orders on atom words,
//! nested descent shapes, the interval decomposition of the atom set, and
//! the quasi-atom classification.
//!
//! This module works with *words*: fixed-length signed one-lines stored as
//! `Vec<i32>` without trailing-fixed-point trimming, since quasi-atoms such
//! as `1` collapse to the identity as group elements but are distinct
//! vertices of the transition graphs.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{demazure_product, longest_element, Family, SignedPermutation};

/// A symmetric matching of a symmetric set of nonzero integers: a partition
/// into unordered blocks `{i, j}` closed under negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymMatching {
    /// Every block, stored as `(min, max)`.
    pairs: BTreeSet<(i32, i32)>,
}

impl SymMatching {
    /// Build from any list of blocks, closing under negation and validating
    /// that the blocks are pairwise disjoint pairs of distinct nonzero
    /// integers.
    pub fn from_blocks(blocks: &[(i32, i32)]) -> Result<Self> {
        let mut pairs = BTreeSet::new();
        for &(a, b) in blocks {
            if a == 0 || b == 0 || a == b {
                return Err(Error::MalformedMatching(format!(
                    "bad block ({a},{b}): entries must be distinct and nonzero"
                )));
            }
            pairs.insert((a.min(b), a.max(b)));
            pairs.insert(((-a).min(-b), (-a).max(-b)));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &pairs {
            if !seen.insert(a) || !seen.insert(b) {
                return Err(Error::MalformedMatching(format!(
                    "blocks are not disjoint at ({a},{b})"
                )));
            }
        }
        Ok(SymMatching { pairs })
    }

    /// The empty matching.
    pub fn empty() -> Self {
        SymMatching {
            pairs: BTreeSet::new(),
        }
    }

    /// Every block (including mirror blocks), as `(min, max)` pairs.
    pub fn all_blocks(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.pairs.iter().copied()
    }

    /// Canonical representatives: the all-positive member of each mirrored
    /// block pair as `(a, b)` with `0 < a < b`, and each self-symmetric
    /// block as `(c, -c)` with `c > 0`; sorted by minimal absolute value.
    pub fn blocks(&self) -> Vec<(i32, i32)> {
        let mut out: Vec<(i32, i32)> = Vec::new();
        for &(a, b) in &self.pairs {
            if a > 0 {
                out.push((a, b));
            } else if a == -b {
                out.push((b, a));
            }
        }
        out.sort_by_key(|&(a, b)| a.abs().min(b.abs()));
        out
    }

    /// All matched points.
    pub fn support(&self) -> BTreeSet<i32> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// The point matched with `x`, if any.
    pub fn partner(&self, x: i32) -> Option<i32> {
        self.pairs
            .iter()
            .find_map(|&(a, b)| match x {
                _ if x == a => Some(b),
                _ if x == b => Some(a),
                _ => None,
            })
    }

    /// Whether no two blocks `{i,j}`, `{a,b}` interleave as `i < a < j < b`.
    pub fn is_noncrossing(&self) -> bool {
        let v: Vec<(i32, i32)> = self.pairs.iter().copied().collect();
        for (k, &(i, j)) in v.iter().enumerate() {
            for &(a, b) in &v[k + 1..] {
                if (i < a && a < j && j < b) || (a < i && i < b && b < j) {
                    return false;
                }
            }
        }
        true
    }

    /// Parse the text format `{1,3} {4,7} {5,6} {8,-8}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for tok in text.split_whitespace() {
            let inner = tok
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::ParseError(format!("bad block token `{tok}`")))?;
            let mut it = inner.split(',').map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::ParseError(format!("bad block entry `{t}`")))
            });
            let a = it
                .next()
                .ok_or_else(|| Error::ParseError(format!("empty block `{tok}`")))??;
            let b = it
                .next()
                .ok_or_else(|| Error::ParseError(format!("block `{tok}` needs two entries")))??;
            if it.next().is_some() {
                return Err(Error::ParseError(format!("block `{tok}` has too many entries")));
            }
            blocks.push((a, b));
        }
        Self::from_blocks(&blocks)
    }
}

impl fmt::Display for SymMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|&(a, b)| format!("{{{a},{b}}}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All noncrossing perfect matchings of an increasing point list, as block
/// lists.
fn nc_matchings(points: &[i32]) -> Vec<Vec<(i32, i32)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        for inside in nc_matchings(&points[1..k]) {
            for outside in nc_matchings(&points[k + 1..]) {
                let mut m = vec![(points[0], points[k])];
                m.extend(inside.iter().copied());
                m.extend(outside);
                out.push(m);
            }
        }
    }
    out
}

fn symmetric(blocks: &[(i32, i32)]) -> bool {
    let set: HashSet<(i32, i32)> = blocks.iter().copied().collect();
    blocks
        .iter()
        .all(|&(a, b)| set.contains(&((-a).min(-b), (-a).max(-b))))
}

/// All noncrossing symmetric perfect matchings of `{-n..-1, 1..n}`, in
/// canonical order.
pub fn enumerate_ncsp(n: usize) -> Vec<SymMatching> {
    let points: Vec<i32> = (-(n as i32)..=n as i32).filter(|&x| x != 0).collect();
    let mut out: Vec<SymMatching> = nc_matchings(&points)
        .into_iter()
        .filter(|m| symmetric(m))
        .map(|m| SymMatching::from_blocks(&m).expect("generated blocks are disjoint"))
        .collect();
    out.sort();
    out
}

/// The pair `(alpha_min(M), alpha_max(M))` of extremal atom words of a
/// noncrossing symmetric matching.
///
/// Each positive block `{a,b}` contributes the letter pair `(a,-b)` and each
/// self-symmetric block `{c,-c}` contributes `(-c,-c)`; pairs are
/// concatenated in increasing order of their second letters for `alpha_min`
/// and of their first letters for `alpha_max`, then repeated letters are
/// dropped after their first appearance.
pub fn alpha_words(m: &SymMatching) -> Result<(Vec<i32>, Vec<i32>)> {
    if !m.is_noncrossing() {
        return Err(Error::MalformedMatching(format!("matching {m} is crossing")));
    }
    let mut pairs: Vec<(i32, i32)> = Vec::new();
    for (a, b) in m.blocks() {
        if b == -a {
            pairs.push((-a, -a));
        } else {
            pairs.push((a, -b));
        }
    }
    let flatten = |pairs: &[(i32, i32)]| {
        let mut word = Vec::new();
        let mut seen = HashSet::new();
        for &(a, b) in pairs {
            for x in [a, b] {
                if seen.insert(x) {
                    word.push(x);
                }
            }
        }
        word
    };
    let mut by_second = pairs.clone();
    by_second.sort_by_key(|&(_, b)| b);
    let mut by_first = pairs;
    by_first.sort_by_key(|&(a, _)| a);
    Ok((flatten(&by_second), flatten(&by_first)))
}

/// Nested descent data of an atom: the values of its self-symmetric blocks
/// (`nneg`) and the removed descent pairs `(q, p)` with `q > p` (`ndes`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedData {
    pub nneg: BTreeSet<i32>,
    pub ndes: BTreeSet<(i32, i32)>,
}

/// Repeatedly remove a descent pair (here: always the leftmost) until the
/// word is increasing; returns the removed pairs and the leftover letters.
pub fn nested_removal(word: &[i32]) -> (Vec<(i32, i32)>, Vec<i32>) {
    let mut w = word.to_vec();
    let mut pairs = Vec::new();
    loop {
        match w.windows(2).position(|p| p[0] > p[1]) {
            Some(i) => {
                pairs.push((w[i], w[i + 1]));
                w.drain(i..=i + 1);
            }
            None => return (pairs, w),
        }
    }
}

fn validate_word(word: &[i32]) -> Result<()> {
    SignedPermutation::from_oneline(word.to_vec()).map(|_| ())
}

/// Whether the word of length `n` is an atom of the longest element of
/// `C_n`: `w^{-1} o w = w_n^C` (Demazure product) with `l(w)` equal to the
/// involution length `n(n+1)/2` of `w_n^C`.
pub fn is_atom_word(word: &[i32]) -> bool {
    let n = word.len();
    if n == 0 {
        return true;
    }
    let Ok(w) = SignedPermutation::from_oneline(word.to_vec()) else {
        return false;
    };
    if w.ell_c() * 2 != n * (n + 1) {
        return false;
    }
    let target = longest_element(Family::C, n).unwrap();
    demazure_product(&w.inverse(), &w, Family::C).unwrap() == target
}

/// Nested descent data and the matching `M(w)` of an atom word.
pub fn atom_shape(word: &[i32]) -> Result<(NestedData, SymMatching)> {
    if !is_atom_word(word) {
        return Err(Error::NotAnAtom(format!("{word:?}")));
    }
    nested_data(word)
}

/// The mechanical nested-descent extraction, applicable to any valid word:
/// remove descent pairs until increasing, then read off the leftover values
/// and the removed pairs.  For atoms this is order-independent and recovers
/// `M(w)`; for other words it still succeeds whenever the leftovers are all
/// negative and the derived blocks are disjoint.
pub fn nested_data(word: &[i32]) -> Result<(NestedData, SymMatching)> {
    validate_word(word)?;
    let (pairs, leftover) = nested_removal(word);
    if let Some(&c) = leftover.iter().find(|&&c| c > 0) {
        return Err(Error::NotAnAtom(format!(
            "{word:?}: positive leftover letter {c} after descent removal"
        )));
    }
    let mut blocks: Vec<(i32, i32)> = Vec::new();
    let mut nneg = BTreeSet::new();
    let mut ndes = BTreeSet::new();
    for &(q, p) in &pairs {
        ndes.insert((q, p));
        blocks.push((p, -q));
    }
    for &c in &leftover {
        debug_assert!(c < 0, "leftover letters of an atom are negative");
        nneg.insert(-c);
        blocks.push((c, -c));
    }
    let m = SymMatching::from_blocks(&blocks)?;
    Ok((NestedData { nneg, ndes }, m))
}

// ---------------------------------------------------------------------------
// The orders on words
// ---------------------------------------------------------------------------

/// If `v` is obtained from `u` by one upward step — replacing a factor
/// `c a b` with `a < b < c` at positions `i, i+1, i+2` by `b c a` — return
/// that `i` (1-indexed).
pub fn order_step(u: &[i32], v: &[i32]) -> Option<usize> {
    if u.len() != v.len() {
        return None;
    }
    for i in 0..u.len().saturating_sub(2) {
        let (c, a, b) = (u[i], u[i + 1], u[i + 2]);
        if a < b && b < c && v[i] == b && v[i + 1] == c && v[i + 2] == a {
            let rest_equal = u
                .iter()
                .zip(v)
                .enumerate()
                .all(|(k, (x, y))| (i..i + 3).contains(&k) || x == y);
            if rest_equal {
                return Some(i + 1);
            }
        }
    }
    None
}

/// All single upward steps from `w` using positions `i >= min_i`
/// (1-indexed).
fn steps_up(w: &[i32], min_i: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in min_i..=w.len().saturating_sub(2) {
        let (c, a, b) = (w[i - 1], w[i], w[i + 1]);
        if a < b && b < c {
            let mut v = w.to_vec();
            v[i - 1] = b;
            v[i] = c;
            v[i + 1] = a;
            out.push(v);
        }
    }
    out
}

/// All single downward steps from `w` (inverses of upward steps).
fn steps_down(w: &[i32], min_i: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in min_i..=w.len().saturating_sub(2) {
        let (b, c, a) = (w[i - 1], w[i], w[i + 1]);
        if a < b && b < c {
            let mut v = w.to_vec();
            v[i - 1] = c;
            v[i] = a;
            v[i + 1] = b;
            out.push(v);
        }
    }
    out
}

fn closure<F: Fn(&[i32]) -> Vec<Vec<i32>>>(
    start: &[i32],
    next: F,
    budget: Option<u64>,
) -> Result<BTreeSet<Vec<i32>>> {
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    let mut steps: u64 = 0;
    while let Some(w) = queue.pop_front() {
        for v in next(&w) {
            steps += 1;
            if let Some(b) = budget {
                if steps > b {
                    return Err(Error::BudgetExceeded(format!(
                        "order closure exceeded {b} steps"
                    )));
                }
            }
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// Everything reachable from `w` by upward steps at positions `>= min_i`.
pub fn order_upset(w: &[i32], min_i: usize, budget: Option<u64>) -> Result<BTreeSet<Vec<i32>>> {
    closure(w, |x| steps_up(x, min_i), budget)
}

/// Everything reachable from `w` by downward steps at positions `>= min_i`.
pub fn order_downset(w: &[i32], min_i: usize, budget: Option<u64>) -> Result<BTreeSet<Vec<i32>>> {
    closure(w, |x| steps_down(x, min_i), budget)
}

/// The order generated by upward steps at all positions.
pub fn leq_a(u: &[i32], v: &[i32]) -> Result<bool> {
    Ok(u.len() == v.len() && order_upset(u, 1, None)?.contains(v))
}

/// The suborder using only positions `i >= 2` (equivalently: first letters
/// agree and the tails are comparable at all positions).
pub fn leq_q(u: &[i32], v: &[i32]) -> Result<bool> {
    Ok(u.len() == v.len() && order_upset(u, 2, None)?.contains(v))
}

// ---------------------------------------------------------------------------
// Atom enumeration and interval decomposition
// ---------------------------------------------------------------------------

/// The atoms of the longest element of `C_n`, as words of length exactly
/// `n`, sorted.
pub fn enumerate_atoms(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let w0 = longest_element(Family::C, n).unwrap();
    crate::involution::atoms(&w0, Family::C, crate::involution::Twist::Identity)
        .unwrap()
        .into_iter()
        .map(|w| w.oneline_padded(n))
        .collect()
}

/// Partition the atoms of rank `n` by their matching `M(w)`, keyed in
/// canonical matching order.
pub fn decompose_atoms(n: usize) -> Result<Vec<(SymMatching, Vec<Vec<i32>>)>> {
    let mut out: Vec<(SymMatching, Vec<Vec<i32>>)> = enumerate_ncsp(n)
        .into_iter()
        .map(|m| (m, Vec::new()))
        .collect();
    for w in enumerate_atoms(n) {
        let (_, m) = atom_shape(&w)?;
        let slot = out
            .iter_mut()
            .find(|(k, _)| *k == m)
            .ok_or_else(|| Error::MalformedMatching(format!("M({w:?}) = {m} not in NCSP({n})")))?;
        slot.1.push(w);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Quasi-atoms
// ---------------------------------------------------------------------------

/// Order-preserving relabeling of the letters of a word onto
/// `{-k..-1, 1..k}`.
pub fn fl_pm(word: &[i32]) -> Vec<i32> {
    let mut abs: Vec<i32> = word.iter().map(|x| x.abs()).collect();
    abs.sort_unstable();
    word.iter()
        .map(|&x| {
            let r = abs.binary_search(&x.abs()).unwrap() as i32 + 1;
            r * x.signum()
        })
        .collect()
}

/// Result of [`classify_quasi_atom`]: quasi-atoms are *even* when exactly
/// one block of `sh'(w)` straddles the first letter and *odd* when none
/// does; `Even` carries the distinguished complementary indices `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuasiAtomClass {
    Not,
    Even {
        sh: SymMatching,
        i: usize,
        j: usize,
    },
    Odd {
        sh: SymMatching,
    },
}

/// The matching `sh'(w)` of a word whose flattened tail is an atom: nested
/// descent removal applied to the tail letters themselves.
fn sh_prime(tail: &[i32]) -> Result<SymMatching> {
    let (pairs, leftover) = nested_removal(tail);
    let mut blocks: Vec<(i32, i32)> = pairs.iter().map(|&(q, p)| (p, -q)).collect();
    blocks.extend(leftover.iter().map(|&c| (c, -c)));
    SymMatching::from_blocks(&blocks)
}

/// Decide whether a word is a quasi-atom and classify its parity.
pub fn classify_quasi_atom(word: &[i32]) -> Result<QuasiAtomClass> {
    validate_word(word)?;
    let Some((&e, tail)) = word.split_first() else {
        return Ok(QuasiAtomClass::Not);
    };
    if e <= 0 {
        return Ok(QuasiAtomClass::Not);
    }
    if !is_atom_word(&fl_pm(tail)) {
        return Ok(QuasiAtomClass::Not);
    }
    let sh = sh_prime(tail)?;
    let mut straddles: Vec<(i32, i32)> = Vec::new();
    for (a, b) in sh.blocks() {
        if b == -a {
            // self-symmetric block {c, -c}: forbidden beyond the center
            if a > e {
                return Ok(QuasiAtomClass::Not);
            }
        } else if a < e && e < b {
            straddles.push((a, b));
        }
    }
    match straddles.as_slice() {
        [] => Ok(QuasiAtomClass::Odd { sh }),
        [(a, b)] => {
            let i = word.iter().position(|&x| x == *a).unwrap() + 1;
            let j = word.iter().position(|&x| x == -*b).unwrap() + 1;
            Ok(QuasiAtomClass::Even { sh, i, j })
        }
        _ => Ok(QuasiAtomClass::Not),
    }
}

/// The even and odd quasi-atoms of rank `n`, as sorted word lists.
#[allow(clippy::type_complexity)]
pub fn enumerate_quasi_atoms(n: usize) -> Result<(Vec<Vec<i32>>, Vec<Vec<i32>>)> {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for e in 1..=n as i32 {
        for tail in enumerate_atoms(n - 1) {
            // unflatten the tail into the letters {1..n} \ {e}
            let word: Vec<i32> = std::iter::once(e)
                .chain(tail.iter().map(|&x| {
                    let a = x.abs();
                    let v = if a < e { a } else { a + 1 };
                    v * x.signum()
                }))
                .collect();
            match classify_quasi_atom(&word)? {
                QuasiAtomClass::Even { .. } => even.push(word),
                QuasiAtomClass::Odd { .. } => odd.push(word),
                QuasiAtomClass::Not => {}
            }
        }
    }
    even.sort();
    odd.sort();
    Ok((even, odd))
}

// ---------------------------------------------------------------------------
// NCSQ matchings
// ---------------------------------------------------------------------------

/// Parity of an NCSQ matching: `Plus` when exactly one block straddles the
/// center, `Minus` when none does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
}

/// Center and parity of an NCSQ matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NCSQTag {
    pub center: i32,
    pub parity: Parity,
}

/// All noncrossing symmetric perfect matchings of `{-n..n} \ {0, ±e}` for
/// every center `e`, restricted to the stated parity: no self-symmetric
/// block beyond the center, and exactly one (`Plus`) or zero (`Minus`)
/// blocks `{a,b}` with `0 < a < e < b`.  Sorted by center, then matching.
pub fn enumerate_ncsq(n: usize, parity: Parity) -> Vec<(SymMatching, NCSQTag)> {
    let mut out = Vec::new();
    for e in 1..=n as i32 {
        let points: Vec<i32> = (-(n as i32)..=n as i32)
            .filter(|&x| x != 0 && x.abs() != e)
            .collect();
        for blocks in nc_matchings(&points) {
            if !symmetric(&blocks) {
                continue;
            }
            let m = SymMatching::from_blocks(&blocks).expect("generated blocks are disjoint");
            let mut straddles = 0usize;
            let mut bad = false;
            for (a, b) in m.blocks() {
                if b == -a {
                    if a > e {
                        bad = true;
                    }
                } else if a < e && e < b {
                    straddles += 1;
                }
            }
            let want = match parity {
                Parity::Plus => 1,
                Parity::Minus => 0,
            };
            if !bad && straddles == want {
                out.push((m, NCSQTag { center: e, parity }));
            }
        }
    }
    out.sort_by(|x, y| (x.1.center, &x.0).cmp(&(y.1.center, &y.0)));
    out
}

/// The extremal quasi-atom words of an NCSQ matching: its alpha words with
/// the center prefixed.
pub fn alpha_prime_words(m: &SymMatching, tag: &NCSQTag) -> Result<(Vec<i32>, Vec<i32>)> {
    let (lo, hi) = alpha_words(m)?;
    let prefix = |w: Vec<i32>| std::iter::once(tag.center).chain(w).collect::<Vec<i32>>();
    Ok((prefix(lo), prefix(hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Vec<i32> {
        if text.trim().is_empty() {
            return vec![];
        }
        text.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn matching_text_round_trip() {
        let m = SymMatching::parse("{1,3} {4,7} {5,6} {8,-8}").unwrap();
        assert_eq!(m.to_string(), "{1,3} {4,7} {5,6} {8,-8}");
        assert_eq!(m.partner(1), Some(3));
        assert_eq!(m.partner(-4), Some(-7));
        assert_eq!(m.partner(8), Some(-8));
        assert_eq!(m.partner(2), None);
        assert!(SymMatching::parse("{1,2} {2,3}").is_err());
        assert!(SymMatching::from_blocks(&[(1, 1)]).is_err());
    }

    #[test]
    fn ncsp_examples() {
        assert_eq!(enumerate_ncsp(0), vec![SymMatching::empty()]);
        let three = enumerate_ncsp(3);
        let expected: Vec<SymMatching> = [
            "{1,-1} {2,-2} {3,-3}",
            "{1,2} {3,-3}",
            "{1,-1} {2,3}",
        ]
        .iter()
        .map(|t| SymMatching::parse(t).unwrap())
        .collect();
        assert_eq!(three.len(), 3);
        for m in &expected {
            assert!(three.contains(m), "missing {m}");
        }
        assert_eq!(enumerate_ncsp(4).len(), 6);
        // binomial(n, floor(n/2)) for small n
        assert_eq!(enumerate_ncsp(5).len(), 10);
        assert_eq!(enumerate_ncsp(6).len(), 20);
        for m in enumerate_ncsp(4) {
            assert!(m.is_noncrossing());
        }
    }

    #[test]
    fn alpha_word_examples() {
        let m = SymMatching::parse("{1,3} {4,7} {5,6} {8,-8}").unwrap();
        let (lo, hi) = alpha_words(&m).unwrap();
        assert_eq!(lo, w("-8 4 -7 5 -6 1 -3"));
        assert_eq!(hi, w("-8 1 -3 4 -7 5 -6"));
        let m = SymMatching::parse("{1,-1}").unwrap();
        assert_eq!(alpha_words(&m).unwrap(), (w("-1"), w("-1")));
        let m = SymMatching::parse("{1,2}").unwrap();
        assert_eq!(alpha_words(&m).unwrap(), (w("1 -2"), w("1 -2")));
        let crossing = SymMatching::from_blocks(&[(1, 3), (2, 4)]).unwrap();
        assert!(matches!(alpha_words(&crossing), Err(Error::MalformedMatching(_))));
    }

    #[test]
    fn atom_shape_examples() {
        // The descent-removal extraction applies mechanically to any word.
        let (nd, m) = nested_data(&w("-8 -2 1 4 -7 5 -6 -3")).unwrap();
        assert_eq!(nd.nneg, BTreeSet::from([2, 8]));
        assert_eq!(nd.ndes, BTreeSet::from([(1, -3), (4, -7), (5, -6)]));
        assert_eq!(m.to_string(), "{1,3} {2,-2} {4,7} {5,6} {8,-8}");
        // That word is not itself an atom (length 37, not 36), and its
        // derived matching is crossing, so the checked entry point rejects it.
        assert!(matches!(
            atom_shape(&w("-8 -2 1 4 -7 5 -6 -3")),
            Err(Error::NotAnAtom(_))
        ));
        let (nd, m) = atom_shape(&w("4 -5 2 -3 -1")).unwrap();
        assert_eq!(nd.nneg, BTreeSet::from([1]));
        assert_eq!(nd.ndes, BTreeSet::from([(2, -3), (4, -5)]));
        assert_eq!(m.to_string(), "{1,-1} {2,3} {4,5}");
        let (_, m) = atom_shape(&w("-1")).unwrap();
        assert_eq!(m.to_string(), "{1,-1}");
        let (_, m) = atom_shape(&w("1 -2")).unwrap();
        assert_eq!(m.to_string(), "{1,2}");
        assert!(matches!(atom_shape(&w("2 1")), Err(Error::NotAnAtom(_))));
    }

    #[test]
    fn order_step_example() {
        assert_eq!(
            order_step(&w("-5 6 3 -4 1 -2"), &w("-5 6 1 3 -4 -2")),
            Some(3)
        );
        assert_eq!(order_step(&w("1 -2"), &w("1 -2")), None);
    }

    #[test]
    fn leq_examples() {
        let u = w("4 -5 2 -3 -1");
        assert!(leq_a(&u, &u).unwrap());
        for m in enumerate_ncsp(4) {
            let (lo, hi) = alpha_words(&m).unwrap();
            assert!(leq_a(&lo, &hi).unwrap(), "{m}");
        }
        // interval for M = {{±1}, ±{2,3}, ±{4,5}} in rank 5
        let m = SymMatching::parse("{1,-1} {2,3} {4,5}").unwrap();
        let (lo, hi) = alpha_words(&m).unwrap();
        assert_eq!(lo, w("4 -5 2 -3 -1"));
        assert_eq!(hi, w("-1 2 -3 4 -5"));
        let interval: Vec<Vec<i32>> = enumerate_atoms(5)
            .into_iter()
            .filter(|a| leq_a(&lo, a).unwrap() && leq_a(a, &hi).unwrap())
            .collect();
        assert_eq!(interval.len(), 8);
    }

    #[test]
    fn atom_counts() {
        let expected = [1usize, 2, 4, 11, 30];
        for n in 1..=5usize {
            assert_eq!(enumerate_atoms(n).len(), expected[n - 1]);
        }
        assert_eq!(enumerate_atoms(0), vec![Vec::<i32>::new()]);
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_atoms(2).unwrap();
        for (m, atoms) in &d {
            match m.to_string().as_str() {
                "{1,-1} {2,-2}" => assert_eq!(atoms, &vec![w("-2 -1")]),
                "{1,2}" => assert_eq!(atoms, &vec![w("1 -2")]),
                other => panic!("unexpected matching {other}"),
            }
        }
        let d = decompose_atoms(4).unwrap();
        let total: usize = d.iter().map(|(_, a)| a.len()).sum();
        assert_eq!(total, 11);
        assert!(d.iter().all(|(_, a)| !a.is_empty()));
        // every part is the interval between its alpha words
        for (m, atoms) in &d {
            let (lo, hi) = alpha_words(m).unwrap();
            for a in atoms {
                assert!(leq_a(&lo, a).unwrap() && leq_a(a, &hi).unwrap());
            }
        }
    }

    #[test]
    fn fl_pm_example() {
        assert_eq!(fl_pm(&w("3 -2 5 -7")), w("2 -1 3 -4"));
        assert_eq!(fl_pm(&[]), Vec::<i32>::new());
    }

    #[test]
    fn classify_examples() {
        match classify_quasi_atom(&w("3 1 6 -7 4 -5 -2")).unwrap() {
            QuasiAtomClass::Odd { sh } => {
                assert_eq!(sh.to_string(), "{1,2} {4,5} {6,7}");
            }
            other => panic!("expected odd, got {other:?}"),
        }
        match classify_quasi_atom(&w("2 1 -3")).unwrap() {
            QuasiAtomClass::Even { i, j, .. } => assert_eq!((i, j), (2, 3)),
            other => panic!("expected even, got {other:?}"),
        }
        assert_eq!(classify_quasi_atom(&w("-1")).unwrap(), QuasiAtomClass::Not);
        assert_eq!(classify_quasi_atom(&w("1")).unwrap(), QuasiAtomClass::Odd {
            sh: SymMatching::empty()
        });
    }

    #[test]
    fn quasi_atom_sets() {
        let (even, odd) = enumerate_quasi_atoms(3).unwrap();
        assert_eq!(even, vec![w("2 1 -3")]);
        assert_eq!(
            odd,
            vec![w("1 2 -3"), w("3 -2 -1"), w("3 1 -2")]
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        let (even, _) = enumerate_quasi_atoms(4).unwrap();
        assert_eq!(even, vec![w("3 -1 2 -4"), w("3 2 -4 -1")]);
        let expected_plus = [0usize, 0, 1, 2, 11];
        let expected_minus = [1usize, 1, 3, 6, 21];
        for n in 1..=5usize {
            let (e, o) = enumerate_quasi_atoms(n).unwrap();
            assert_eq!(e.len(), expected_plus[n - 1], "plus at {n}");
            assert_eq!(o.len(), expected_minus[n - 1], "minus at {n}");
        }
    }

    #[test]
    fn atoms_and_quasi_atoms_disjoint() {
        for n in 1..=5usize {
            let atoms: BTreeSet<Vec<i32>> = enumerate_atoms(n).into_iter().collect();
            let (e, o) = enumerate_quasi_atoms(n).unwrap();
            assert!(e.iter().all(|x| !atoms.contains(x)));
            assert!(o.iter().all(|x| !atoms.contains(x)));
        }
    }

    #[test]
    fn ncsq_example() {
        let plus = enumerate_ncsq(8, Parity::Plus);
        let m = SymMatching::parse("{3,-3} {1,2} {4,8} {6,7}").unwrap();
        let tag = plus
            .iter()
            .find(|(x, t)| *x == m && t.center == 5)
            .map(|(_, t)| *t)
            .expect("matching present in NCSQ^+(8) at center 5");
        let (lo, hi) = alpha_prime_words(&m, &tag).unwrap();
        assert_eq!(hi, w("5 -3 1 -2 4 -8 6 -7"));
        assert_eq!(lo, w("5 4 -8 6 -7 -3 1 -2"));
    }

    #[test]
    fn ncsq_matches_quasi_atoms() {
        // every quasi-atom's shape appears with the right parity, and the
        // alpha-prime words bound its interval in the suborder
        for n in 1..=4usize {
            let (even, odd) = enumerate_quasi_atoms(n).unwrap();
            for (words, parity) in [(&even, Parity::Plus), (&odd, Parity::Minus)] {
                let listed = enumerate_ncsq(n, parity);
                let mut seen = 0usize;
                for (m, tag) in &listed {
                    let (lo, hi) = alpha_prime_words(m, tag).unwrap();
                    let members: Vec<&Vec<i32>> = words
                        .iter()
                        .filter(|x| {
                            leq_q(&lo, x).unwrap() && leq_q(x, &hi).unwrap()
                        })
                        .collect();
                    seen += members.len();
                    // interval members have exactly this shape
                    for x in members {
                        match classify_quasi_atom(x).unwrap() {
                            QuasiAtomClass::Even { sh, .. } | QuasiAtomClass::Odd { sh } => {
                                assert_eq!(sh, *m)
                            }
                            QuasiAtomClass::Not => panic!("non-quasi-atom in interval"),
                        }
                    }
                }
                assert_eq!(seen, words.len(), "rank {n} parity {parity:?}");
            }
        }
    }
}
