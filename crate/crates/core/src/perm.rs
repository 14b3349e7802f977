//! Signed-permutation arithmetic: words, length, reflections, Bruhat covers,
//! Demazure products, and reduced-word enumeration/counting.
//!
//! A signed permutation is a bijection `w` of `{-n, ..., -1, 1, ..., n}` with
//! `w(-i) = -w(i)`.  It is stored by its canonical one-line representation
//! `w(1), w(2), ..., w(n)` with trailing fixed points trimmed, so that an
//! element of rank `n` is identified with its image in every larger rank; the
//! identity is the empty sequence.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The three Coxeter families handled by the crate.
///
/// `A` is the symmetric group `S_{n+1}` acting on all-positive one-lines,
/// `C` is the full hyperoctahedral group, and `D` is its index-two subgroup of
/// elements with an even number of sign changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

/// A simple generator of one of the three families.
///
/// Type A uses `s_i` for `i >= 1`; type C uses `t_i` for `i >= 0`; type D uses
/// `t_1'` (encoded as index `-1`) together with `t_1, t_2, ...`.  As an
/// element of the ambient group `C_n`, the generator `t_1'` is `t_0 t_1 t_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub family: Family,
    pub index: i32,
}

impl Generator {
    /// Build a generator, validating the index for the family.
    pub fn new(family: Family, index: i32) -> Result<Self> {
        let ok = match family {
            Family::A => index >= 1,
            Family::C => index >= 0,
            Family::D => index == -1 || index >= 1,
        };
        if ok {
            Ok(Generator { family, index })
        } else {
            Err(Error::BadIndex(format!(
                "generator index {index} invalid for family {family}"
            )))
        }
    }

    /// The signed permutation realizing this generator.
    pub fn element(&self) -> SignedPermutation {
        match (self.family, self.index) {
            (Family::A, i) => {
                // s_i = (i, i+1)
                let i = i as usize;
                let mut v: Vec<i32> = (1..=(i + 1) as i32).collect();
                v.swap(i - 1, i);
                SignedPermutation::new_canonical(v)
            }
            (Family::C, 0) => SignedPermutation::new_canonical(vec![-1]),
            (Family::C, i) | (Family::D, i) if i >= 1 => {
                // t_i = (i, i+1)(-i, -i-1)
                let i = i as usize;
                let mut v: Vec<i32> = (1..=(i + 1) as i32).collect();
                v.swap(i - 1, i);
                SignedPermutation::new_canonical(v)
            }
            (Family::D, -1) => SignedPermutation::new_canonical(vec![-2, -1]),
            _ => unreachable!("invalid generator"),
        }
    }

    /// Generator name as used in word text formats (`s1`, `t0`, `t1'`).
    pub fn name(&self) -> String {
        match (self.family, self.index) {
            (Family::A, i) => format!("s{i}"),
            (Family::D, -1) => "t1'".to_string(),
            (_, i) => format!("t{i}"),
        }
    }

    /// Parse a generator name such as `s2`, `t0` or `t1'`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "t1'" {
            return Generator::new(Family::D, -1);
        }
        let (family, rest) = match text.chars().next() {
            Some('s') => (Family::A, &text[1..]),
            Some('t') => (Family::C, &text[1..]),
            _ => return Err(Error::ParseError(format!("bad generator `{text}`"))),
        };
        let index: i32 = rest
            .parse()
            .map_err(|_| Error::ParseError(format!("bad generator `{text}`")))?;
        Generator::new(family, index)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A finite sequence of generators, all from one family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<Generator>,
}

impl Word {
    pub fn new(letters: Vec<Generator>) -> Result<Self> {
        if let Some(first) = letters.first() {
            if letters.iter().any(|g| g.family != first.family) {
                return Err(Error::ParseError(
                    "word mixes generators from different families".to_string(),
                ));
            }
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element this word multiplies out to (left-to-right).
    pub fn product(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity();
        for g in &self.letters {
            w = w.compose(&g.element());
        }
        w
    }

    /// Parse a comma-separated list of generator names, e.g. `t0,t1,t0`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Word::new(vec![]);
        }
        let letters = text
            .split(',')
            .map(Generator::parse)
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.letters.iter().map(|g| g.name()).collect();
        write!(f, "{}", names.join(","))
    }
}

/// Kinds of reflections in `C_n`:
/// `S_DIAG` is `s_ii = (i, -i)`, `S_OFF` is `s_ij = (i, -j)(-i, j)` for
/// `i < j`, and `T` is `t_ij = (i, j)(-i, -j)` for `i < j`.
/// `t_0 = s_11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReflectionKind {
    SDiag,
    SOff,
    T,
}

/// A reflection in `C_n`, identified by its kind and indices `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reflection {
    pub kind: ReflectionKind,
    pub i: usize,
    pub j: usize,
}

impl Reflection {
    pub fn new(kind: ReflectionKind, i: usize, j: usize) -> Result<Self> {
        let ok = match kind {
            ReflectionKind::SDiag => i == j && i >= 1,
            ReflectionKind::SOff | ReflectionKind::T => 1 <= i && i < j,
        };
        if ok {
            Ok(Reflection { kind, i, j })
        } else {
            Err(Error::BadIndex(format!("bad reflection indices ({i},{j})")))
        }
    }

    /// The signed permutation realized by this reflection in rank `n`.
    pub fn element(&self, n: usize) -> Result<SignedPermutation> {
        if self.j > n {
            return Err(Error::RankTooSmall(format!(
                "reflection needs rank >= {}, ambient rank is {n}",
                self.j
            )));
        }
        let mut v: Vec<i32> = (1..=n as i32).collect();
        match self.kind {
            ReflectionKind::SDiag => v[self.i - 1] = -(self.i as i32),
            ReflectionKind::SOff => {
                v[self.i - 1] = -(self.j as i32);
                v[self.j - 1] = -(self.i as i32);
            }
            ReflectionKind::T => {
                v[self.i - 1] = self.j as i32;
                v[self.j - 1] = self.i as i32;
            }
        }
        Ok(SignedPermutation::new_canonical(v))
    }
}

/// A signed permutation in canonical (trailing-fixed-point-trimmed) one-line
/// form.  Equality, ordering, and hashing act on the canonical form only; the
/// optional `family_hint` is for display purposes and never participates in
/// comparisons.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedPermutation {
    oneline: Vec<i32>,
    pub family_hint: Option<Family>,
}

impl PartialEq for SignedPermutation {
    fn eq(&self, other: &Self) -> bool {
        self.oneline == other.oneline
    }
}
impl Eq for SignedPermutation {}
impl std::hash::Hash for SignedPermutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.oneline.hash(state);
    }
}
impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.oneline.cmp(&other.oneline)
    }
}

impl SignedPermutation {
    /// The identity element (empty canonical one-line).
    pub fn identity() -> Self {
        SignedPermutation {
            oneline: vec![],
            family_hint: None,
        }
    }

    /// Build from a one-line representation, validating that the absolute
    /// values form a permutation of `1..=n`; trailing fixed points are
    /// trimmed.
    pub fn from_oneline(oneline: Vec<i32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n];
        for &v in &oneline {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::ParseError(format!(
                    "invalid one-line {oneline:?}: absolute values must be a permutation of 1..={n}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(Self::new_canonical(oneline))
    }

    /// Internal constructor from a known-valid one-line; trims trailing fixed
    /// points.
    pub(crate) fn new_canonical(mut oneline: Vec<i32>) -> Self {
        while let Some(&last) = oneline.last() {
            if last == oneline.len() as i32 {
                oneline.pop();
            } else {
                break;
            }
        }
        SignedPermutation {
            oneline,
            family_hint: None,
        }
    }

    /// Canonical rank: the minimal `n` with `w(n) != n` (0 for the identity).
    pub fn rank(&self) -> usize {
        self.oneline.len()
    }

    /// The canonical one-line representation.
    pub fn oneline(&self) -> &[i32] {
        &self.oneline
    }

    /// One-line representation padded with fixed points to length `n`.
    pub fn oneline_padded(&self, n: usize) -> Vec<i32> {
        let mut v = self.oneline.clone();
        for k in v.len() + 1..=n {
            v.push(k as i32);
        }
        v
    }

    /// Evaluate `w(i)` for any nonzero `i`, treating positions beyond the
    /// canonical rank as fixed.
    pub fn value(&self, i: i32) -> i32 {
        debug_assert!(i != 0);
        let (a, sign) = (i.unsigned_abs() as usize, i.signum());
        let v = if a <= self.oneline.len() {
            self.oneline[a - 1]
        } else {
            a as i32
        };
        sign * v
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    /// Composition `(uv)(i) = u(v(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank().max(other.rank());
        let v: Vec<i32> = (1..=n as i32).map(|i| self.value(other.value(i))).collect();
        SignedPermutation::new_canonical(v)
    }

    /// Group inverse.
    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut v = vec![0i32; n];
        for i in 1..=n {
            let w = self.oneline[i - 1];
            v[w.unsigned_abs() as usize - 1] = w.signum() * i as i32;
        }
        SignedPermutation::new_canonical(v)
    }

    /// Number of negative one-line values.
    pub fn neg_count(&self) -> usize {
        self.oneline.iter().filter(|&&v| v < 0).count()
    }

    /// Coxeter length in type C:
    /// `inv(w) + neg(w) + nsp(w)` where `inv` counts inversions, `neg` counts
    /// negative values and `nsp` counts pairs `i < j` with `w_i + w_j < 0`.
    pub fn ell_c(&self) -> usize {
        let w = &self.oneline;
        let n = w.len();
        let mut len = self.neg_count();
        for i in 0..n {
            for j in (i + 1)..n {
                if w[i] > w[j] {
                    len += 1;
                }
                if w[i] + w[j] < 0 {
                    len += 1;
                }
            }
        }
        len
    }

    /// Membership test for a family's group.
    pub fn in_family(&self, family: Family) -> bool {
        match family {
            Family::A => self.oneline.iter().all(|&v| v > 0),
            Family::C => true,
            Family::D => self.neg_count().is_multiple_of(2),
        }
    }

    pub fn require_family(&self, family: Family) -> Result<()> {
        if self.in_family(family) {
            Ok(())
        } else {
            let reason = match family {
                Family::A => "one-line has negative values".to_string(),
                Family::D => "odd number of negative one-line values".to_string(),
                Family::C => unreachable!(),
            };
            Err(Error::ElemNotInFamily {
                family: family.to_string(),
                reason,
            })
        }
    }

    /// Coxeter length with respect to the stated family's generating set.
    pub fn length(&self, family: Family) -> Result<usize> {
        self.require_family(family)?;
        Ok(match family {
            Family::A | Family::C => self.ell_c(),
            Family::D => self.ell_c() - self.neg_count(),
        })
    }

    /// Right product `w * s` by a generator.
    pub fn apply_right(&self, g: Generator) -> SignedPermutation {
        self.compose(&g.element())
    }

    /// Candidate simple generators for elements of this canonical rank.
    /// Generators beyond this list can never be (left or right) descents.
    pub(crate) fn candidate_generators(&self, family: Family) -> Vec<Generator> {
        let n = self.rank() as i32;
        match family {
            Family::A => (1..n.max(1)).map(|i| Generator { family, index: i }).collect(),
            Family::C => (0..n).map(|i| Generator { family, index: i }).collect(),
            Family::D => {
                let mut v = Vec::new();
                if n >= 2 {
                    v.push(Generator { family, index: -1 });
                }
                v.extend((1..n).map(|i| Generator { family, index: i }));
                v
            }
        }
    }

    /// Right descent set `{ s : l(ws) < l(w) }`.
    pub fn right_descents(&self, family: Family) -> Result<Vec<Generator>> {
        self.require_family(family)?;
        let len = self.length(family)?;
        Ok(self
            .candidate_generators(family)
            .into_iter()
            .filter(|g| {
                self.apply_right(*g)
                    .length(family)
                    .map(|l| l < len)
                    .unwrap_or(false)
            })
            .collect())
    }

    /// Left descent set `{ s : l(sw) < l(w) }`.
    pub fn left_descents(&self, family: Family) -> Result<Vec<Generator>> {
        self.require_family(family)?;
        let len = self.length(family)?;
        Ok(self
            .candidate_generators(family)
            .into_iter()
            .filter(|g| {
                g.element()
                    .compose(self)
                    .length(family)
                    .map(|l| l < len)
                    .unwrap_or(false)
            })
            .collect())
    }

    /// Parse space-separated signed integers; trailing fixed points accepted
    /// and trimmed; empty input is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::identity());
        }
        let values = text
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::ParseError(format!("bad one-line value `{t}`")))
            })
            .collect::<Result<Vec<i32>>>()?;
        Self::from_oneline(values)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::parse(s)
    }
}

/// The longest element of the stated family and rank:
/// type A gives `(n+1) n ... 2 1`; type C gives `-1 -2 ... -n`; type D gives
/// the type-C longest element for even `n` and `1 -2 -3 ... -n` for odd `n`.
pub fn longest_element(family: Family, n: usize) -> Result<SignedPermutation> {
    if n == 0 || (family == Family::D && n < 2) {
        return Err(Error::BadRank(format!(
            "no longest element for family {family} at rank {n}"
        )));
    }
    let v: Vec<i32> = match family {
        Family::A => (1..=(n + 1) as i32).rev().collect(),
        Family::C => (1..=n as i32).map(|i| -i).collect(),
        Family::D => {
            if n.is_multiple_of(2) {
                (1..=n as i32).map(|i| -i).collect()
            } else {
                std::iter::once(1)
                    .chain((2..=n as i32).map(|i| -i))
                    .collect()
            }
        }
    };
    Ok(SignedPermutation::new_canonical(v))
}

/// The embedding of the symmetric group into type C that identifies `s_i`
/// with `t_i`: an all-positive one-line is reinterpreted verbatim.
pub fn embed_a_in_c(w: &SignedPermutation) -> Result<SignedPermutation> {
    if !w.in_family(Family::A) {
        return Err(Error::NotUnsigned(w.to_string()));
    }
    let mut out = w.clone();
    out.family_hint = Some(Family::C);
    Ok(out)
}

/// True iff `v = u t` for a reflection `t` with `l(v) = l(u) + 1` in type C.
pub fn is_cover(u: &SignedPermutation, v: &SignedPermutation) -> bool {
    if v.ell_c() != u.ell_c() + 1 {
        return false;
    }
    // u^{-1} v must be a reflection: either (i,-i) or (i,j)(-i,-j) or
    // (i,-j)(-i,j).
    let r = u.inverse().compose(v);
    let n = r.rank();
    let moved: Vec<usize> = (1..=n)
        .filter(|&i| r.value(i as i32) != i as i32)
        .collect();
    match moved.len() {
        1 => {
            let i = moved[0] as i32;
            r.value(i) == -i
        }
        2 => {
            let (i, j) = (moved[0] as i32, moved[1] as i32);
            (r.value(i) == j && r.value(j) == i) || (r.value(i) == -j && r.value(j) == -i)
        }
        _ => false,
    }
}

/// Pattern-based cover test: decides `w < w r` (a Bruhat cover in type C)
/// from the one-line of `w` alone, without computing lengths.
///
/// For `t_ij`, the condition is `w_i < w_j` with no value strictly between
/// them among `w_{i+1}, ..., w_{j-1}`.  For `s_ii`, the condition is
/// `w_i > 0` with no value of absolute value less than `w_i` to its left.
/// For `s_ij` with `w_i > 0`, the condition is `0 < -w_j < w_i` with no value
/// in `(-w_j, w_i)` among `w_1, ..., w_{i-1}` and no value in `(-w_i, w_j)`
/// among `w_1, ..., w_{j-1}`.  The remaining `s_ij` cases reduce to the
/// previous one by negating all other values, and a cover is impossible when
/// `w_i` and `w_j` are both negative.
pub fn cover_test(w: &SignedPermutation, r: &Reflection) -> bool {
    let n = w.rank().max(r.j);
    let w = w.oneline_padded(n);
    let (i, j) = (r.i, r.j);
    match r.kind {
        ReflectionKind::T => {
            let (a, b) = (w[i - 1], w[j - 1]);
            a < b && !w[i..j - 1].iter().any(|&e| a < e && e < b)
        }
        ReflectionKind::SDiag => {
            let a = w[i - 1];
            a > 0 && !w[..i - 1].iter().any(|&e| -a < e && e < a)
        }
        ReflectionKind::SOff => {
            let (wi, wj) = (w[i - 1], w[j - 1]);
            if wi > 0 {
                soff_cover_positive(&w, i, j)
            } else if wj > 0 {
                // Negate every other value and swap the roles of positions
                // i and j; the resulting word has a positive value at
                // position i, reducing to the first case.
                let mut v: Vec<i32> = w.iter().map(|&e| -e).collect();
                v[i - 1] = wj;
                v[j - 1] = wi;
                soff_cover_positive(&v, i, j)
            } else {
                false
            }
        }
    }
}

/// The `s_ij` cover pattern when `w_i > 0`.
fn soff_cover_positive(w: &[i32], i: usize, j: usize) -> bool {
    let (wi, wj) = (w[i - 1], w[j - 1]);
    debug_assert!(wi > 0);
    0 < -wj
        && -wj < wi
        && !w[..i - 1].iter().any(|&e| -wj < e && e < wi)
        && !w[..j - 1].iter().any(|&e| -wi < e && e < wj)
}

/// The Demazure (0-Hecke) product of `u` and `v` relative to the stated
/// family: the unique associative product with `s o s = s` that agrees with
/// group multiplication when lengths add.
pub fn demazure_product(
    u: &SignedPermutation,
    v: &SignedPermutation,
    family: Family,
) -> Result<SignedPermutation> {
    u.require_family(family)?;
    v.require_family(family)?;
    let mut u = u.clone();
    let mut v = v.clone();
    while !v.is_identity() {
        let s = v.left_descents(family)?[0];
        let selem = s.element();
        v = selem.compose(&v);
        let us = u.compose(&selem);
        if us.length(family)? > u.length(family)? {
            u = us;
        }
    }
    Ok(u)
}

/// Visit every reduced word of `w` (as a sequence of generator indices) in
/// lexicographic order of generator index sequences.  Words are produced by
/// peeling left descents in generator order; type D's `t_1'` (index -1)
/// sorts before `t_1`.
pub(crate) fn visit_reduced_words<F: FnMut(&[i32])>(
    w: &SignedPermutation,
    family: Family,
    budget: Option<u64>,
    f: &mut F,
) -> Result<()> {
    w.require_family(family)?;
    let mut prefix: Vec<i32> = Vec::with_capacity(w.length(family)?);
    let mut count: u64 = 0;
    fn rec<F: FnMut(&[i32])>(
        w: &SignedPermutation,
        family: Family,
        prefix: &mut Vec<i32>,
        count: &mut u64,
        budget: Option<u64>,
        f: &mut F,
    ) -> Result<()> {
        if w.is_identity() {
            *count += 1;
            if let Some(b) = budget {
                if *count > b {
                    return Err(Error::BudgetExceeded(format!(
                        "reduced-word enumeration exceeded {b} words"
                    )));
                }
            }
            f(prefix);
            return Ok(());
        }
        for s in w.left_descents(family)? {
            prefix.push(s.index);
            let rest = s.element().compose(w);
            rec(&rest, family, prefix, count, budget, f)?;
            prefix.pop();
        }
        Ok(())
    }
    rec(w, family, &mut prefix, &mut count, budget, f)
}

/// Enumerate `R(w)`: all reduced words of `w` in the stated family, in
/// lexicographic order of generator indices.
pub fn reduced_words(w: &SignedPermutation, family: Family) -> Result<Vec<Word>> {
    reduced_words_with_budget(w, family, None)
}

/// As [`reduced_words`], erroring with `BudgetExceeded` if more than `budget`
/// words would be produced.
pub fn reduced_words_with_budget(
    w: &SignedPermutation,
    family: Family,
    budget: Option<u64>,
) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    visit_reduced_words(w, family, budget, &mut |idx| {
        out.push(Word {
            letters: idx
                .iter()
                .map(|&i| Generator { family, index: i })
                .collect(),
        });
    })?;
    Ok(out)
}

#[allow(clippy::type_complexity)]
static WORD_COUNT_MEMO: Lazy<Mutex<HashMap<(Family, Vec<i32>), BigUint>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Exact count of `R(w)` via the memoized descent recursion
/// `|R(w)| = sum over right descents s of |R(ws)|`.
pub fn count_reduced_words(w: &SignedPermutation, family: Family) -> Result<BigUint> {
    w.require_family(family)?;
    if w.is_identity() {
        return Ok(BigUint::one());
    }
    let key = (family, w.oneline.clone());
    if let Some(c) = WORD_COUNT_MEMO.lock().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let mut total = BigUint::zero();
    for s in w.right_descents(family)? {
        total += count_reduced_words(&w.apply_right(s), family)?;
    }
    WORD_COUNT_MEMO.lock().unwrap().insert(key, total.clone());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> SignedPermutation {
        SignedPermutation::parse(text).unwrap()
    }

    #[test]
    fn compose_identity_law() {
        let w = sp("-3 2 -1");
        assert_eq!(SignedPermutation::identity().compose(&w), w);
        assert_eq!(w.compose(&SignedPermutation::identity()), w);
    }

    #[test]
    fn compose_t0_involution() {
        let t0 = Generator::new(Family::C, 0).unwrap().element();
        assert!(t0.compose(&t0).is_identity());
    }

    #[test]
    fn compose_letters_example() {
        // t0 t1 t0 t1 = -1 -2, and in the other order too
        let t0 = Generator::new(Family::C, 0).unwrap().element();
        let t1 = Generator::new(Family::C, 1).unwrap().element();
        let p = t0.compose(&t1).compose(&t0).compose(&t1);
        assert_eq!(p, sp("-1 -2"));
        let q = t1.compose(&t0).compose(&t1).compose(&t0);
        assert_eq!(q, sp("-1 -2"));
    }

    #[test]
    fn inverse_examples() {
        assert!(SignedPermutation::identity().inverse().is_identity());
        assert_eq!(sp("-1 -2").inverse(), sp("-1 -2"));
        let w = sp("3 -1 2");
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn length_examples() {
        assert_eq!(SignedPermutation::identity().ell_c(), 0);
        assert_eq!(sp("-1 -2").ell_c(), 4);
        assert_eq!(sp("-2 -1").ell_c(), 3);
        // brute-force shortest word: length agrees with the minimal word
        // length for every element of C_2
        for w in all_elements(2) {
            let words = reduced_words(&w, Family::C).unwrap();
            assert!(words.iter().all(|a| a.len() == w.ell_c()));
            for a in &words {
                assert_eq!(a.product(), w);
            }
        }
    }

    /// All elements of C_n by brute force.
    pub(crate) fn all_elements(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        permute(&mut perm, 0, &mut out);
        fn permute(v: &mut Vec<i32>, k: usize, out: &mut Vec<SignedPermutation>) {
            if k == v.len() {
                // all sign patterns
                let n = v.len();
                for mask in 0..(1usize << n) {
                    let signed: Vec<i32> = v
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    out.push(SignedPermutation::new_canonical(signed));
                }
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                permute(v, k + 1, out);
                v.swap(k, i);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn right_descents_examples() {
        assert!(SignedPermutation::identity()
            .right_descents(Family::C)
            .unwrap()
            .is_empty());
        let d = sp("-1 -2").right_descents(Family::C).unwrap();
        let idx: Vec<i32> = d.iter().map(|g| g.index).collect();
        assert_eq!(idx, vec![0, 1]);
        let d = sp("3 2 1").right_descents(Family::A).unwrap();
        let idx: Vec<i32> = d.iter().map(|g| g.index).collect();
        assert_eq!(idx, vec![1, 2]);
    }

    #[test]
    fn right_descents_family_error() {
        let err = sp("-1 2").right_descents(Family::D).unwrap_err();
        assert!(matches!(err, Error::ElemNotInFamily { .. }));
    }

    #[test]
    fn reflection_elements() {
        let t12 = Reflection::new(ReflectionKind::T, 1, 2).unwrap();
        assert_eq!(t12.element(2).unwrap(), sp("2 1"));
        let s11 = Reflection::new(ReflectionKind::SDiag, 1, 1).unwrap();
        assert_eq!(s11.element(1).unwrap(), sp("-1"));
        let s12 = Reflection::new(ReflectionKind::SOff, 1, 2).unwrap();
        assert_eq!(s12.element(2).unwrap(), sp("-2 -1"));
        assert!(matches!(
            s12.element(1),
            Err(Error::RankTooSmall(_))
        ));
    }

    #[test]
    fn cover_examples() {
        // 1 -2 4 3 is covered by (1 -2 4 3) t_14 = 3 -2 4 1
        assert!(is_cover(&sp("1 -2 4 3"), &sp("3 -2 4 1")));
        // 1 2 4 3 is NOT covered by (1 2 4 3) t_14
        assert!(!is_cover(&sp("1 2 4 3"), &sp("3 2 4 1")));
        // 3 -2 4 -1 is NOT covered by (3 -2 4 -1) s_14
        assert!(!is_cover(&sp("3 -2 4 -1"), &sp("1 -2 4 -3")));
    }

    #[test]
    fn cover_test_agrees_with_length_on_c3() {
        for w in all_elements(3) {
            for n in 1..=4usize {
                for i in 1..=n {
                    let r = Reflection::new(ReflectionKind::SDiag, i, i).unwrap();
                    let v = w.compose(&r.element(n).unwrap());
                    assert_eq!(cover_test(&w, &r), is_cover(&w, &v), "{w} s_{i}{i}");
                    for j in i + 1..=n {
                        for kind in [ReflectionKind::SOff, ReflectionKind::T] {
                            let r = Reflection::new(kind, i, j).unwrap();
                            let v = w.compose(&r.element(n).unwrap());
                            assert_eq!(
                                cover_test(&w, &r),
                                is_cover(&w, &v),
                                "{w} {kind:?} ({i},{j})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn demazure_examples() {
        let t0 = Generator::new(Family::C, 0).unwrap().element();
        let u = sp("3 -1 2");
        assert_eq!(demazure_product(&u, &SignedPermutation::identity(), Family::C).unwrap(), u);
        // t0 o (t1 t0 t1) = t0 t1 t0 t1
        let t1t0t1 = Word::parse("t1,t0,t1").unwrap().product();
        let full = Word::parse("t0,t1,t0,t1").unwrap().product();
        assert_eq!(demazure_product(&t0, &t1t0t1, Family::C).unwrap(), full);
        // absorption: (t0 t1 t0 t1) o t0 = t0 t1 t0 t1
        assert_eq!(demazure_product(&full, &t0, Family::C).unwrap(), full);
    }

    #[test]
    fn demazure_associative_on_c2() {
        let elems = all_elements(2);
        for u in &elems {
            for v in &elems {
                for w in &elems {
                    let a = demazure_product(
                        &demazure_product(u, v, Family::C).unwrap(),
                        w,
                        Family::C,
                    )
                    .unwrap();
                    let b = demazure_product(
                        u,
                        &demazure_product(v, w, Family::C).unwrap(),
                        Family::C,
                    )
                    .unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn reduced_words_examples() {
        assert_eq!(
            reduced_words(&SignedPermutation::identity(), Family::C).unwrap(),
            vec![Word { letters: vec![] }]
        );
        // R(w_2^A) = {(s1,s2,s1),(s2,s1,s2)}
        let w2a = longest_element(Family::A, 2).unwrap();
        let words = reduced_words(&w2a, Family::A).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(texts, vec!["s1,s2,s1", "s2,s1,s2"]);
        // R(-1 3 -2 in D_3) = {(t1,t1',t2),(t1',t1,t2)}
        let w = sp("-1 3 -2");
        let words = reduced_words(&w, Family::D).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(texts, vec!["t1',t1,t2", "t1,t1',t2"]);
    }

    #[test]
    fn count_reduced_words_examples() {
        assert_eq!(
            count_reduced_words(&SignedPermutation::identity(), Family::C).unwrap(),
            BigUint::one()
        );
        let w2c = longest_element(Family::C, 2).unwrap();
        assert_eq!(count_reduced_words(&w2c, Family::C).unwrap(), 2u32.into());
        let w3c = longest_element(Family::C, 3).unwrap();
        assert_eq!(count_reduced_words(&w3c, Family::C).unwrap(), 42u32.into());
    }

    #[test]
    fn counts_match_enumeration_on_c3() {
        for w in all_elements(3) {
            let words = reduced_words(&w, Family::C).unwrap();
            assert_eq!(
                count_reduced_words(&w, Family::C).unwrap(),
                BigUint::from(words.len())
            );
            assert!(words.iter().all(|a| a.len() == w.ell_c()));
        }
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(longest_element(Family::A, 2).unwrap(), sp("3 2 1"));
        assert_eq!(longest_element(Family::C, 3).unwrap(), sp("-1 -2 -3"));
        assert_eq!(longest_element(Family::D, 3).unwrap(), sp("1 -2 -3"));
        assert!(matches!(longest_element(Family::D, 1), Err(Error::BadRank(_))));
    }

    #[test]
    fn embed_examples() {
        let s1 = Generator::new(Family::A, 1).unwrap().element();
        assert_eq!(embed_a_in_c(&s1).unwrap(), sp("2 1"));
        assert!(embed_a_in_c(&SignedPermutation::identity())
            .unwrap()
            .is_identity());
        assert!(matches!(embed_a_in_c(&sp("-1")), Err(Error::NotUnsigned(_))));
    }

    #[test]
    fn canonicalization_well_defined() {
        // appending a fixed point before composing gives the same canonical
        // result
        let u = sp("3 -1 2");
        let v = sp("-2 1 3 5 4");
        let u_pad = SignedPermutation::from_oneline(u.oneline_padded(6)).unwrap();
        let v_pad = SignedPermutation::from_oneline(v.oneline_padded(6)).unwrap();
        assert_eq!(u.compose(&v), u_pad.compose(&v_pad));
        assert_eq!(u.inverse(), u_pad.inverse());
    }
}
