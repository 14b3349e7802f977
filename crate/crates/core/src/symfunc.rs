//! Partitions, (marked, shifted) tableaux, hook-length counts, Schur /
//! Schur-S / Schur-Q polynomials as exact monomial vectors, basis
//! conversion, superfication, square-free coefficient extraction, and
//! definitional Stanley-function oracles.
//!
//! Symmetric polynomials in `N` variables are stored losslessly as maps from
//! exponent-partitions to integer coefficients ([`MonomialVector`]).  The
//! marked alphabet is `1' < 1 < 2' < 2 < ...` with the usual rules: rows and
//! columns weakly increase, no unprimed letter repeats in a column, and no
//! primed letter repeats in a row.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{visit_reduced_words, Family, SignedPermutation};

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Validate that `parts` is a partition: weakly decreasing positive integers.
pub fn check_partition(parts: &[u32]) -> Result<()> {
    let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::ParseError(format!(
            "not a partition (weakly decreasing positive parts required): {parts:?}"
        )))
    }
}

/// Whether a partition has strictly decreasing parts.
pub fn is_strict(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

fn require_strict(parts: &[u32]) -> Result<()> {
    if is_strict(parts) {
        Ok(())
    } else {
        Err(Error::NotStrict(format_partition(parts)))
    }
}

/// Sum of the parts.
pub fn weight(parts: &[u32]) -> u64 {
    parts.iter().map(|&p| p as u64).sum()
}

/// The staircase partition `(n, n-1, ..., 2, 1)`.
pub fn staircase(n: u32) -> Vec<u32> {
    (1..=n).rev().collect()
}

/// The rectangle partition `(a, a, ..., a)` with `b` rows.
pub fn rectangle(a: u32, b: u32) -> Vec<u32> {
    vec![a; b as usize]
}

/// Parse `8,6,4,2`; the empty string is the empty partition.
pub fn parse_partition(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    let parts = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::ParseError(format!("bad partition part `{t}`")))
        })
        .collect::<Result<Vec<u32>>>()?;
    check_partition(&parts)?;
    Ok(parts)
}

/// Render as comma-separated parts.
pub fn format_partition(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// All partitions of `d` with at most `max_parts` parts, in no particular
/// order.
pub fn partitions_of(d: u64, max_parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(rem: u64, max_part: u64, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let top = rem.min(max_part);
        // each part must be at least ceil(rem / slots) to fit
        let low = rem.div_ceil(slots as u64);
        let mut p = top;
        while p >= low {
            cur.push(p as u32);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    rec(d, d.max(1), max_parts, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Standard tableau counts
// ---------------------------------------------------------------------------

fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}

static SHIFTED_SYT_MEMO: Lazy<Mutex<HashMap<Vec<u32>, BigUint>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Number of standard tableaux of a straight shape (hook-length formula) or
/// of a shifted shape (memoized corner-removal recursion; shifted shapes
/// must be strict).
pub fn syt_count(shape: &[u32], shifted: bool) -> Result<BigUint> {
    check_partition(shape)?;
    if !shifted {
        // hook-length formula
        let k = shape.len();
        let mut denom = BigUint::one();
        for i in 0..k {
            for j in 0..shape[i] as usize {
                let arm = shape[i] as usize - 1 - j;
                let leg = (i + 1..k).filter(|&r| shape[r] as usize > j).count();
                denom *= BigUint::from((arm + leg + 1) as u64);
            }
        }
        return Ok(factorial(weight(shape)) / denom);
    }
    require_strict(shape)?;
    fn rec(shape: &[u32]) -> BigUint {
        if shape.is_empty() {
            return BigUint::one();
        }
        if let Some(c) = SHIFTED_SYT_MEMO.lock().unwrap().get(shape) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..shape.len() {
            // a cell is removable from row i if the result is still strict
            let next = if i + 1 < shape.len() { shape[i + 1] } else { 0 };
            let ok = if i + 1 < shape.len() {
                shape[i] - 1 > next
            } else {
                true
            };
            if ok {
                let mut smaller = shape.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += rec(&smaller);
            }
        }
        SHIFTED_SYT_MEMO
            .lock()
            .unwrap()
            .insert(shape.to_vec(), total.clone());
        total
    }
    Ok(rec(shape))
}

// ---------------------------------------------------------------------------
// Tableau enumeration
// ---------------------------------------------------------------------------

/// The tableau flavors underlying the three polynomial bases and their
/// standard variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableauKind {
    Semistandard,
    Marked,
    ShiftedMarked,
    Standard,
    ShiftedStandard,
    MarkedStandardShifted,
}

impl TableauKind {
    fn shifted(&self) -> bool {
        matches!(
            self,
            TableauKind::ShiftedMarked
                | TableauKind::ShiftedStandard
                | TableauKind::MarkedStandardShifted
        )
    }

    fn marked(&self) -> bool {
        matches!(
            self,
            TableauKind::Marked | TableauKind::ShiftedMarked | TableauKind::MarkedStandardShifted
        )
    }

    fn standard(&self) -> bool {
        matches!(
            self,
            TableauKind::Standard | TableauKind::ShiftedStandard | TableauKind::MarkedStandardShifted
        )
    }
}

/// A filled tableau: `entries[r][k]` is the `(value, primed)` letter of the
/// `k`-th cell of row `r` (shifted rows start at column `r`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Vec<u32>,
    pub shifted: bool,
    pub entries: Vec<Vec<(u32, bool)>>,
}

impl Tableau {
    /// The exponent-partition of the monomial `x^T` (value multiplicities,
    /// sorted decreasingly).
    pub fn monomial(&self) -> Vec<u32> {
        let mut counts: HashMap<u32, u32> = HashMap::new();
        for row in &self.entries {
            for &(v, _) in row {
                *counts.entry(v).or_insert(0) += 1;
            }
        }
        let mut m: Vec<u32> = counts.into_values().collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    /// Value multiplicities indexed by value `1..=max`, not sorted.
    pub fn content(&self, max: u32) -> Vec<u32> {
        let mut e = vec![0u32; max as usize];
        for row in &self.entries {
            for &(v, _) in row {
                e[v as usize - 1] += 1;
            }
        }
        e
    }
}

/// Enumerate every tableau of the given flavor, shape, and entry bound, in a
/// canonical (row-major, alphabet-increasing) order.  Standard flavors
/// ignore `max_entry` and use exactly the values `1..=|shape|`.
pub fn enumerate_tableaux(kind: TableauKind, shape: &[u32], max_entry: u32) -> Result<Vec<Tableau>> {
    check_partition(shape)?;
    if kind.shifted() {
        require_strict(shape)?;
    }
    let n = weight(shape);
    let max = if kind.standard() { n as u32 } else { max_entry };
    // cells in row-major order with absolute column numbers
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &len) in shape.iter().enumerate() {
        let start = if kind.shifted() { r } else { 0 };
        for c in start..start + len as usize {
            cells.push((r, c));
        }
    }
    let index: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &rc)| (rc, k)).collect();
    let mut out = Vec::new();
    let mut letters: Vec<(u32, bool)> = Vec::with_capacity(cells.len());
    let mut used = vec![false; max as usize + 1];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        kind: TableauKind,
        shape: &[u32],
        cells: &[(usize, usize)],
        index: &HashMap<(usize, usize), usize>,
        max: u32,
        letters: &mut Vec<(u32, bool)>,
        used: &mut Vec<bool>,
        out: &mut Vec<Tableau>,
    ) {
        if letters.len() == cells.len() {
            // split the flat letters back into rows
            let mut entries: Vec<Vec<(u32, bool)>> = vec![Vec::new(); shape.len()];
            for (k, &(r, _)) in cells.iter().enumerate() {
                entries[r].push(letters[k]);
            }
            out.push(Tableau {
                shape: shape.to_vec(),
                shifted: kind.shifted(),
                entries,
            });
            return;
        }
        let rank = |v: u32, p: bool| 2 * v - p as u32;
        let (r, c) = cells[letters.len()];
        let left = (c > 0).then(|| index.get(&(r, c - 1))).flatten().map(|&k| letters[k]);
        let up = (r > 0).then(|| index.get(&(r - 1, c))).flatten().map(|&k| letters[k]);
        for v in 1..=max {
            for p in [true, false] {
                if p && !kind.marked() {
                    continue;
                }
                if kind.standard() && used[v as usize] {
                    continue;
                }
                if let Some((lv, lp)) = left {
                    if rank(v, p) < rank(lv, lp) {
                        continue;
                    }
                    // no primed letter twice in a row
                    if p && lp && lv == v {
                        continue;
                    }
                }
                if let Some((uv, up_)) = up {
                    if rank(v, p) < rank(uv, up_) {
                        continue;
                    }
                    if kind.marked() {
                        // no unprimed letter twice in a column
                        if !p && !up_ && uv == v {
                            continue;
                        }
                    } else {
                        // unmarked flavors: columns strictly increase
                        if uv >= v {
                            continue;
                        }
                    }
                }
                letters.push((v, p));
                if kind.standard() {
                    used[v as usize] = true;
                }
                rec(kind, shape, cells, index, max, letters, used, out);
                if kind.standard() {
                    used[v as usize] = false;
                }
                letters.pop();
            }
        }
    }
    rec(kind, shape, &cells, &index, max, &mut letters, &mut used, &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Monomial vectors
// ---------------------------------------------------------------------------

/// A homogeneous symmetric polynomial in `nvars` variables, stored as the
/// coefficients of its monomials `x_1^{k_1} x_2^{k_2} ...` with
/// `k_1 >= k_2 >= ...` (one key per exponent-partition).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialVector {
    pub degree: u64,
    pub nvars: usize,
    pub coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialVector {
    pub fn zero(degree: u64, nvars: usize) -> Self {
        MonomialVector {
            degree,
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1 (degree 0).
    pub fn constant_one(nvars: usize) -> Self {
        let mut v = Self::zero(0, nvars);
        v.add_term(vec![], BigInt::one());
        v
    }

    /// Add `c` to the coefficient of the exponent-partition `key`.
    pub fn add_term(&mut self, key: Vec<u32>, c: BigInt) {
        debug_assert!(weight(&key) == self.degree && key.len() <= self.nvars);
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, key: &[u32]) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self -= c * other`.
    pub fn sub_scaled(&mut self, other: &MonomialVector, c: &BigInt) {
        for (k, v) in &other.coeffs {
            self.add_term(k.clone(), -(c * v));
        }
    }
}

// ---------------------------------------------------------------------------
// Basis expansions
// ---------------------------------------------------------------------------

/// An exact integer combination of Schur Q-functions indexed by strict
/// partitions.  The empty partition indexes the constant 1, so the constant
/// function is `{[]: 1}` and the zero function has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QExpansion {
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

/// An exact integer combination of Schur functions.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SchurExpansion {
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

fn add_expansion_term(terms: &mut BTreeMap<Vec<u32>, BigInt>, key: Vec<u32>, c: BigInt) {
    let entry = terms.entry(key.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        terms.remove(&key);
    }
}

fn fmt_expansion(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<Vec<u32>, BigInt>,
    symbol: &str,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(shape, c)| {
            if shape.is_empty() {
                c.to_string()
            } else if c.is_one() {
                format!("{symbol}[{}]", format_partition(shape))
            } else {
                format!("{c}*{symbol}[{}]", format_partition(shape))
            }
        })
        .collect();
    write!(f, "{}", parts.join(" + "))
}

impl QExpansion {
    /// The expansion of the constant function 1.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![], BigInt::one());
        QExpansion { terms }
    }

    pub fn add_term(&mut self, key: Vec<u32>, c: BigInt) {
        add_expansion_term(&mut self.terms, key, c);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &QExpansion, c: &BigInt) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    /// The common degree of all terms, or `MixedDegree` if they disagree.
    pub fn degree(&self) -> Result<u64> {
        let mut degrees = self.terms.keys().map(|k| weight(k));
        let d = degrees.next().unwrap_or(0);
        if degrees.all(|e| e == d) {
            Ok(d)
        } else {
            Err(Error::MixedDegree)
        }
    }

    /// Expand into an exact monomial vector over `nvars` variables.
    pub fn monomials(&self, nvars: usize) -> Result<MonomialVector> {
        let d = self.degree()?;
        let mut out = MonomialVector::zero(d, nvars);
        for (shape, c) in &self.terms {
            out.sub_scaled(&basis_poly(BasisKind::Q, shape, nvars)?, &(-c));
        }
        Ok(out)
    }
}

impl SchurExpansion {
    pub fn add_term(&mut self, key: Vec<u32>, c: BigInt) {
        add_expansion_term(&mut self.terms, key, c);
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_expansion(f, &self.terms, "Q")
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_expansion(f, &self.terms, "s")
    }
}

/// The three polynomial bases computed by [`basis_poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    Schur,
    S,
    Q,
}

fn contains(inner: &[u32], outer: &[u32]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Columns occupied by the skew shape `outer/inner` in row `r`.
fn skew_cols(inner: &[u32], outer: &[u32], shifted: bool, r: usize) -> std::ops::Range<usize> {
    let start = if shifted { r } else { 0 };
    let lo = start + inner.get(r).copied().unwrap_or(0) as usize;
    let hi = start + outer[r] as usize;
    lo..hi
}

/// Horizontal strip: `outer/inner` has at most one cell per column.
fn is_hstrip(inner: &[u32], outer: &[u32], shifted: bool) -> bool {
    let mut seen: HashSet<usize> = HashSet::new();
    for r in 0..outer.len() {
        for c in skew_cols(inner, outer, shifted, r) {
            if !seen.insert(c) {
                return false;
            }
        }
    }
    true
}

/// Vertical strip: `outer/inner` has at most one cell per row.
fn is_vstrip(inner: &[u32], outer: &[u32]) -> bool {
    outer
        .iter()
        .enumerate()
        .all(|(r, &o)| o - inner.get(r).copied().unwrap_or(0) <= 1)
}

/// All sub-partitions contained in `shape` (strict ones only, if `shifted`).
fn subshapes(shape: &[u32], shifted: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(shape: &[u32], shifted: bool, r: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if r == shape.len() {
            return;
        }
        let cap = shape[r].min(if r == 0 {
            u32::MAX
        } else {
            let prev = cur[r - 1];
            if shifted {
                prev.saturating_sub(1)
            } else {
                prev
            }
        });
        for p in (1..=cap).rev() {
            cur.push(p);
            rec(shape, shifted, r + 1, cur, out);
            cur.pop();
        }
    }
    rec(shape, shifted, 0, &mut cur, &mut out);
    out
}

/// The Schur, Schur-S, or Schur-Q polynomial of the given shape as an exact
/// monomial vector in `nvars` variables.
///
/// Coefficients are computed by a layered strip dynamic program: each value
/// class `i` adds a vertical strip of `i'` followed by a horizontal strip of
/// `i` (horizontal only, for plain Schur), so the coefficient of `x^kappa`
/// counts weighted chains of subshapes with step sizes `kappa_1, kappa_2,
/// ...`.
pub fn basis_poly(kind: BasisKind, shape: &[u32], nvars: usize) -> Result<MonomialVector> {
    check_partition(shape)?;
    if kind == BasisKind::Q {
        require_strict(shape)?;
    }
    let shifted = kind == BasisKind::Q;
    let d = weight(shape);
    let mut out = MonomialVector::zero(d, nvars);
    if d == 0 {
        out.add_term(vec![], BigInt::one());
        return Ok(out);
    }
    if nvars == 0 {
        return Ok(out);
    }
    let shapes = subshapes(shape, shifted);
    let index: HashMap<Vec<u32>, usize> = shapes
        .iter()
        .enumerate()
        .map(|(k, s)| (s.clone(), k))
        .collect();
    let sizes: Vec<u64> = shapes.iter().map(|s| weight(s)).collect();
    // one-value transition weights between subshapes
    let mut trans: Vec<HashMap<usize, BigUint>> = vec![HashMap::new(); shapes.len()];
    match kind {
        BasisKind::Schur => {
            for (a, sa) in shapes.iter().enumerate() {
                for (b, sb) in shapes.iter().enumerate() {
                    if contains(sa, sb) && is_hstrip(sa, sb, false) {
                        trans[a].insert(b, BigUint::one());
                    }
                }
            }
        }
        BasisKind::S | BasisKind::Q => {
            for (a, sa) in shapes.iter().enumerate() {
                for sm in shapes.iter() {
                    if !(contains(sa, sm) && is_vstrip(sa, sm)) {
                        continue;
                    }
                    for (b, sb) in shapes.iter().enumerate() {
                        if contains(sm, sb) && is_hstrip(sm, sb, shifted) {
                            *trans[a].entry(b).or_insert_with(BigUint::zero) += BigUint::one();
                        }
                    }
                }
            }
        }
    }
    let full = index[&shape.to_vec()];
    // memoized count of weighted chains from a subshape to the full shape
    // with the given remaining step sizes
    let mut memo: HashMap<(usize, Vec<u32>), BigUint> = HashMap::new();
    fn chains(
        s: usize,
        tail: &[u32],
        full: usize,
        sizes: &[u64],
        trans: &[HashMap<usize, BigUint>],
        memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
    ) -> BigUint {
        if tail.is_empty() {
            return if s == full {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let key = (s, tail.to_vec());
        if let Some(c) = memo.get(&key) {
            return c.clone();
        }
        let step = tail[0] as u64;
        let mut total = BigUint::zero();
        for (&b, w) in &trans[s] {
            if sizes[b] == sizes[s] + step {
                total += w * chains(b, &tail[1..], full, sizes, trans, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let empty = index[&vec![]];
    for kappa in partitions_of(d, nvars) {
        let c = chains(empty, &kappa, full, &sizes, &trans, &mut memo);
        if !c.is_zero() {
            out.add_term(kappa, BigInt::from(c));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Stanley-function monomial oracles
// ---------------------------------------------------------------------------

/// The exact truncation to `nvars` variables of the type-A Stanley function
/// `F_w` or the type-C Stanley function `G_w`, computed straight from the
/// definition: iterate every reduced word together with every compatible
/// weakly increasing sequence (type C weights each sequence by
/// `2^{#distinct values}` and forbids constant triples across peaks).
pub fn stanley_monomials(
    w: &SignedPermutation,
    family: Family,
    nvars: usize,
) -> Result<MonomialVector> {
    if family == Family::D {
        return Err(Error::ElemNotInFamily {
            family: "D".to_string(),
            reason: "the monomial oracle is defined for families A and C".to_string(),
        });
    }
    let degree = w.length(family)? as u64;
    let mut out = MonomialVector::zero(degree, nvars);
    visit_reduced_words(w, family, None, &mut |a: &[i32]| {
        // DFS over compatible sequences i_1 <= ... <= i_l with values in
        // 1..=nvars
        let mut seq: Vec<usize> = Vec::with_capacity(a.len());
        fn rec(
            a: &[i32],
            family: Family,
            nvars: usize,
            seq: &mut Vec<usize>,
            out: &mut MonomialVector,
        ) {
            let j = seq.len();
            if j == a.len() {
                // record only the canonical (weakly decreasing content)
                // monomial; symmetry determines the rest
                let mut content = vec![0u32; nvars];
                for &i in seq.iter() {
                    content[i - 1] += 1;
                }
                if content.windows(2).any(|w| w[0] < w[1]) {
                    return;
                }
                while content.last() == Some(&0) {
                    content.pop();
                }
                let coeff = if family == Family::C {
                    BigInt::one() << seq.iter().collect::<HashSet<_>>().len()
                } else {
                    BigInt::one()
                };
                out.add_term(content, coeff);
                return;
            }
            let lo = seq.last().copied().unwrap_or(1);
            for i in lo..=nvars {
                if family == Family::A {
                    // descent in the word forces a strict increase
                    if j > 0 && a[j - 1] > a[j] && i == seq[j - 1] {
                        continue;
                    }
                } else {
                    // peaks forbid three equal consecutive values
                    if j >= 2
                        && a[j - 2] < a[j - 1]
                        && a[j - 1] > a[j]
                        && i == seq[j - 1]
                        && seq[j - 2] == seq[j - 1]
                    {
                        continue;
                    }
                }
                seq.push(i);
                rec(a, family, nvars, seq, out);
                seq.pop();
            }
        }
        rec(a, family, nvars, &mut seq, &mut out);
    })?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Basis conversion, superfication, square-free coefficients
// ---------------------------------------------------------------------------

fn check_faithful(v: &MonomialVector) -> Result<()> {
    if (v.nvars as u64) < v.degree {
        Err(Error::NotInSpan(format!(
            "need at least {} variables for a degree-{} vector, have {}",
            v.degree, v.degree, v.nvars
        )))
    } else {
        Ok(())
    }
}

/// Convert a monomial vector to Schur-Q coordinates by greedy leading-term
/// elimination (lexicographically maximal exponent-partition first).  The
/// leading key must always be strict with coefficient divisible by
/// `2^{length}`, and the residual must reach zero; otherwise `NotInSpan`.
pub fn to_q_basis(v: &MonomialVector) -> Result<QExpansion> {
    check_faithful(v)?;
    let mut rem = v.clone();
    let mut out = QExpansion::default();
    while let Some((kappa, c)) = rem.coeffs.last_key_value() {
        let (kappa, c) = (kappa.clone(), c.clone());
        if !is_strict(&kappa) {
            return Err(Error::NotInSpan(format!(
                "leading exponent-partition {kappa:?} is not strict"
            )));
        }
        let div = BigInt::one() << kappa.len();
        if (&c % &div) != BigInt::zero() {
            return Err(Error::NotInSpan(format!(
                "leading coefficient {c} of {kappa:?} is not divisible by {div}"
            )));
        }
        let m = &c / &div;
        rem.sub_scaled(&basis_poly(BasisKind::Q, &kappa, v.nvars)?, &m);
        out.add_term(kappa, m);
    }
    Ok(out)
}

/// Convert a monomial vector to Schur coordinates by greedy leading-term
/// elimination (leading coefficient of `s_kappa` is 1).
pub fn to_schur_basis(v: &MonomialVector) -> Result<SchurExpansion> {
    check_faithful(v)?;
    let mut rem = v.clone();
    let mut out = SchurExpansion::default();
    while let Some((kappa, c)) = rem.coeffs.last_key_value() {
        let (kappa, c) = (kappa.clone(), c.clone());
        rem.sub_scaled(&basis_poly(BasisKind::Schur, &kappa, v.nvars)?, &c);
        out.add_term(kappa, c);
    }
    Ok(out)
}

/// Superfication: replace every Schur function `s_lambda` by the Schur
/// S-function `S_lambda` and express the result in the Q basis.
pub fn superfication(e: &SchurExpansion, nvars: usize) -> Result<QExpansion> {
    if e.terms.is_empty() {
        return Ok(QExpansion::default());
    }
    let mut degrees = e.terms.keys().map(|k| weight(k));
    let d = degrees.next().unwrap();
    if !degrees.all(|x| x == d) {
        return Err(Error::MixedDegree);
    }
    let mut sum = MonomialVector::zero(d, nvars);
    for (shape, c) in &e.terms {
        sum.sub_scaled(&basis_poly(BasisKind::S, shape, nvars)?, &(-c));
    }
    to_q_basis(&sum)
}

/// The coefficient of the square-free monomial `x_1 x_2 ... x_d` in a
/// homogeneous Q-expansion of degree `d`: each `Q_mu` contributes the number
/// of marked standard shifted tableaux of shape `mu`, which is
/// `2^{|mu|} * (shifted standard count)`.
pub fn squarefree_coefficient(q: &QExpansion) -> Result<BigInt> {
    let _ = q.degree()?;
    let mut total = BigInt::zero();
    for (shape, c) in &q.terms {
        let marked = syt_count(shape, true)? << weight(shape);
        total += c * BigInt::from(marked);
    }
    Ok(total)
}
