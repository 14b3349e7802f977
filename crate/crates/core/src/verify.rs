//! Verification suites: each suite re-derives a family of identities and
//! counts from first principles and reports exact comparisons.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::involution::{
    atoms, count_involution_words, involution_length, underline_count, Twist, UnderlineMode,
};
use crate::matchings::{atom_shape, decompose_atoms, enumerate_atoms, enumerate_ncsp,
    enumerate_quasi_atoms};
use crate::perm::{
    count_reduced_words, embed_a_in_c, longest_element, Family, SignedPermutation,
};
use crate::symfunc::{
    basis_poly, squarefree_coefficient, stanley_monomials, staircase, syt_count, to_q_basis,
    to_schur_basis, superfication, weight, BasisKind, QExpansion,
};
use crate::transition::{
    build_full_graph, g_expansion, hat_g_expansion, telescope_check, transition_sets,
    verify_graph_theorems, VertexTag,
};

/// One comparison performed by a suite.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The outcome of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        VerifyReport { suite: suite.to_string(), checks: Vec::new(), pass: true }
    }

    fn record<E: ToString, A: ToString>(&mut self, description: &str, expected: E, actual: A) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.pass &= pass;
        self.checks.push(Check { description: description.to_string(), expected, actual, pass });
    }

    fn merge(&mut self, other: VerifyReport) {
        self.pass &= other.pass;
        self.checks.extend(other.checks);
    }
}

/// Tuning knobs shared by all suites.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyParams {
    /// Cap on the rank examined; each suite has its own default.
    pub max_n: Option<usize>,
    /// Raise the default caps by one.
    pub long: bool,
    /// Allow the memory-hungry rank-6 type-D counts.
    pub huge: bool,
}

impl VerifyParams {
    fn cap(&self, default: usize, hard: usize) -> usize {
        let base = self.max_n.unwrap_or(default + usize::from(self.long));
        base.min(hard)
    }
}

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Main,
    Transition,
    Graphs,
    TypeD,
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "counts" => Ok(Suite::Counts),
            "main" => Ok(Suite::Main),
            "transition" => Ok(Suite::Transition),
            "graphs" => Ok(Suite::Graphs),
            "typeD" | "typed" => Ok(Suite::TypeD),
            other => Err(crate::error::Error::ParseError(format!("unknown suite `{other}`"))),
        }
    }
}

/// Run a suite and return its report.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerifyReport> {
    match suite {
        Suite::Counts => counts_suite(params),
        Suite::Main => main_suite(params),
        Suite::Transition => transition_suite(params),
        Suite::Graphs => graphs_suite(params),
        Suite::TypeD => type_d_suite(params),
        Suite::All => {
            let mut report = VerifyReport::new("all");
            report.merge(counts_suite(params)?);
            report.merge(main_suite(params)?);
            report.merge(transition_suite(params)?);
            report.merge(graphs_suite(params)?);
            report.merge(type_d_suite(params)?);
            Ok(report)
        }
    }
}

// ---------------------------------------------------------------------------
// Element enumeration helpers
// ---------------------------------------------------------------------------

/// Every element of the rank-`n` hyperoctahedral group.
pub fn all_elements_c(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    fn rec(n: usize, current: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
        if current.len() == n {
            out.push(SignedPermutation::from_oneline(current.clone()).expect("valid one-line"));
            return;
        }
        for v in 1..=n as i32 {
            if current.iter().all(|&x| x.abs() != v) {
                for s in [v, -v] {
                    current.push(s);
                    rec(n, current, out);
                    current.pop();
                }
            }
        }
    }
    rec(n, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Every element of the rank-`n` symmetric-group family (unsigned one-lines
/// on `n + 1` points).
pub fn all_elements_a(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    fn rec(m: usize, current: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
        if current.len() == m {
            out.push(SignedPermutation::from_oneline(current.clone()).expect("valid one-line"));
            return;
        }
        for v in 1..=m as i32 {
            if !current.contains(&v) {
                current.push(v);
                rec(m, current, out);
                current.pop();
            }
        }
    }
    rec(n + 1, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

fn involutions(elements: &[SignedPermutation]) -> Vec<SignedPermutation> {
    elements.iter().filter(|w| &w.inverse() == *w).cloned().collect()
}

/// Square-free coefficient of a Schur expansion: each `s_lambda` contributes
/// the number of standard tableaux of shape `lambda`.
fn schur_squarefree(terms: &std::collections::BTreeMap<Vec<u32>, BigInt>) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for (shape, c) in terms {
        total += c * BigInt::from(syt_count(shape, false)?);
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Suite: counts
// ---------------------------------------------------------------------------

fn product_formula_a(n: usize) -> BigUint {
    // binomial(n+1, 2)! / prod_{i=1}^{n} (2i-1)^(n-i+1)
    let top = n * (n + 1) / 2;
    let mut num = BigUint::one();
    for k in 1..=top {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for i in 1..=n {
        den *= BigUint::from(2 * i - 1).pow((n - i + 1) as u32);
    }
    num / den
}

fn product_formula_c(n: usize) -> BigUint {
    // (n^2)! / (n^n * prod_{i=1}^{n-1} (i * (2n - i))^i)
    let mut num = BigUint::one();
    for k in 1..=n * n {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::from(n).pow(n as u32);
    for i in 1..n {
        den *= BigUint::from(i * (2 * n - i)).pow(i as u32);
    }
    num / den
}

fn counts_suite(params: &VerifyParams) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("counts");
    let cap = params.cap(4, 5);
    for n in 1..=cap.max(1) {
        let y = longest_element(Family::C, n)?;
        let count = count_involution_words(&y, Family::C, Twist::Identity)?;
        let expected = syt_count(&staircase(n as u32), false)?;
        report.record(
            &format!("involution word count of the rank-{n} longest element"),
            expected,
            count,
        );
    }
    for n in 1..=cap.max(1) {
        let w = longest_element(Family::A, n)?;
        report.record(
            &format!("reduced word count, family A, rank {n}, closed product"),
            product_formula_a(n),
            count_reduced_words(&w, Family::A)?,
        );
    }
    for n in 1..=cap.clamp(1, 4) {
        let w = longest_element(Family::C, n)?;
        report.record(
            &format!("reduced word count, family C, rank {n}, closed product"),
            product_formula_c(n),
            count_reduced_words(&w, Family::C)?,
        );
    }
    coefficient_laws(&mut report)?;
    Ok(report)
}

/// The four square-free coefficient laws, checked exhaustively at rank 3.
fn coefficient_laws(report: &mut VerifyReport) -> Result<()> {
    let a3 = all_elements_a(3);
    let mut bad = 0usize;
    for w in &a3 {
        let n = w.length(Family::A)?.max(1);
        let f = to_schur_basis(&stanley_monomials(w, Family::A, n)?)?;
        if schur_squarefree(&f.terms)? != BigInt::from(count_reduced_words(w, Family::A)?) {
            bad += 1;
        }
    }
    report.record(
        &format!("square-free law for F_w over {} rank-3 unsigned elements", a3.len()),
        0,
        bad,
    );
    let c3 = all_elements_c(3);
    let mut bad = 0usize;
    for w in &c3 {
        let l = w.ell_c();
        let expected = BigInt::from(count_reduced_words(w, Family::C)?) << l;
        if squarefree_coefficient(&g_expansion(w)?)? != expected {
            bad += 1;
        }
    }
    report.record(
        &format!("square-free law for G_w over {} rank-3 signed elements", c3.len()),
        0,
        bad,
    );
    let mut bad = 0usize;
    let ia3 = involutions(&a3);
    for y in &ia3 {
        let n = involution_length(y, Family::A, Twist::Identity)?.max(1);
        let mut total = BigInt::from(0);
        for w in atoms(y, Family::A, Twist::Identity)? {
            let f = to_schur_basis(&stanley_monomials(&w, Family::A, n)?)?;
            total += schur_squarefree(&f.terms)?;
        }
        if total != BigInt::from(count_involution_words(y, Family::A, Twist::Identity)?) {
            bad += 1;
        }
    }
    report.record(
        &format!("square-free law for the involution F over {} involutions", ia3.len()),
        0,
        bad,
    );
    let mut bad = 0usize;
    let ic3 = involutions(&c3);
    for y in &ic3 {
        let lhat = involution_length(y, Family::C, Twist::Identity)?;
        let expected = BigInt::from(count_involution_words(y, Family::C, Twist::Identity)?) << lhat;
        if squarefree_coefficient(&hat_g_expansion(y)?)? != expected {
            bad += 1;
        }
    }
    report.record(
        &format!("square-free law for the involution G over {} involutions", ic3.len()),
        0,
        bad,
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// Suite: main identity and superfication
// ---------------------------------------------------------------------------

fn main_suite(params: &VerifyParams) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("main");
    let cap = params.cap(4, 5);
    for n in 1..=cap.max(1) {
        let hat = hat_g_expansion(&longest_element(Family::C, n)?)?;
        let g = g_expansion(&longest_element(Family::A, n)?)?;
        let delta = staircase(n as u32);
        let s = to_q_basis(&basis_poly(BasisKind::S, &delta, weight(&delta) as usize)?)?;
        report.record(&format!("rank {n}: involution G equals plain G of the unsigned longest element"), &hat, &g);
        report.record(&format!("rank {n}: both equal the staircase S-function"), &g, &s);
    }
    // Superfication sends each F_w to the matching G_w.
    let mut bad = 0usize;
    let a3 = all_elements_a(3);
    for w in &a3 {
        let n = w.length(Family::A)?.max(1);
        let f = to_schur_basis(&stanley_monomials(w, Family::A, n)?)?;
        let lhs = superfication(&f, n)?;
        let rhs = to_q_basis(&stanley_monomials(&embed_a_in_c(w)?, Family::C, n)?)?;
        if lhs != rhs {
            bad += 1;
        }
    }
    report.record(
        &format!("superfication maps F to G over {} rank-3 unsigned elements", a3.len()),
        0,
        bad,
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// Suite: transition identity and oracle equivalence
// ---------------------------------------------------------------------------

fn transition_suite(_params: &VerifyParams) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("transition");
    let c3 = all_elements_c(3);
    let mut bad = 0usize;
    for w in &c3 {
        for j in 1..=3 {
            let sets = transition_sets(w, j)?;
            let mut lhs = QExpansion::default();
            for v in &sets.t_plus {
                lhs.add_scaled(&g_expansion(v)?, &BigInt::one());
            }
            let mut rhs = QExpansion::default();
            for v in sets.s_set.iter().chain(&sets.t_minus) {
                rhs.add_scaled(&g_expansion(v)?, &BigInt::one());
            }
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    report.record(
        &format!("transition identity over {} elements x 3 columns", c3.len()),
        0,
        bad,
    );
    let mut bad = 0usize;
    for w in &c3 {
        let n = w.ell_c().max(1);
        if g_expansion(w)?.monomials(n)? != stanley_monomials(w, Family::C, n)? {
            bad += 1;
        }
    }
    report.record(
        &format!("recursion matches the monomial oracle over {} elements", c3.len()),
        0,
        bad,
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// Suite: structure counts and graphs
// ---------------------------------------------------------------------------

fn graphs_suite(params: &VerifyParams) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("graphs");
    let cap = params.cap(6, 6);
    const ATOM_COUNTS: [usize; 6] = [1, 2, 4, 11, 30, 101];
    const QPLUS_COUNTS: [usize; 6] = [0, 0, 1, 2, 11, 30];
    const QMINUS_COUNTS: [usize; 6] = [1, 1, 3, 6, 21, 57];
    for n in 1..=cap.max(1) {
        let atoms_n = enumerate_atoms(n);
        let (even, odd) = enumerate_quasi_atoms(n)?;
        report.record(&format!("atom count at rank {n}"), ATOM_COUNTS[n - 1], atoms_n.len());
        report.record(&format!("even quasi-atom count at rank {n}"), QPLUS_COUNTS[n - 1], even.len());
        report.record(&format!("odd quasi-atom count at rank {n}"), QMINUS_COUNTS[n - 1], odd.len());
    }
    for n in 1..=8usize {
        let expected = binomial(n, n / 2);
        report.record(
            &format!("noncrossing symmetric matching count at rank {n}"),
            expected,
            enumerate_ncsp(n).len(),
        );
    }
    for n in 1..=cap.max(1) {
        let atoms_n: std::collections::BTreeSet<Vec<i32>> =
            enumerate_atoms(n).into_iter().collect();
        let decomposition = decompose_atoms(n)?;
        let mut seen: std::collections::BTreeSet<Vec<i32>> = Default::default();
        let mut overlaps = 0usize;
        let mut shape_mismatches = 0usize;
        for (m, interval) in &decomposition {
            for w in interval {
                if !seen.insert(w.clone()) {
                    overlaps += 1;
                }
                let (_, shape) = atom_shape(w)?;
                if &shape != m {
                    shape_mismatches += 1;
                }
            }
        }
        report.record(
            &format!("interval decomposition covers the rank-{n} atoms"),
            true,
            seen == atoms_n && overlaps == 0,
        );
        report.record(
            &format!("atom shapes agree with their intervals at rank {n}"),
            0,
            shape_mismatches,
        );
    }
    for n in 0..=cap {
        let violations = verify_graph_theorems(n)?;
        report.record(
            &format!("layer graph theorems at rank {n}"),
            "no violations",
            if violations.is_empty() { "no violations".to_string() } else { violations.join("; ") },
        );
    }
    for n in 1..=cap.clamp(1, 4) {
        let g = build_full_graph(n)?;
        let outcome = telescope_check(&g, |v| {
            if v.tag == VertexTag::QMinus {
                Ok(QExpansion::default())
            } else {
                g_expansion(&SignedPermutation::from_oneline(v.word.clone())?)
            }
        })?;
        let mut atom_sum = QExpansion::default();
        for w in enumerate_atoms(n) {
            atom_sum.add_scaled(
                &g_expansion(&SignedPermutation::from_oneline(w)?)?,
                &BigInt::one(),
            );
        }
        let expected = g_expansion(&longest_element(Family::A, n)?)?;
        report.record(
            &format!("telescoping sum at rank {n} matches the unsigned longest element"),
            &expected,
            &outcome.source_sum,
        );
        report.record(
            &format!("telescoping sum at rank {n} matches the atom sum"),
            &expected,
            &atom_sum,
        );
        report.record(&format!("telescoping hypothesis holds at rank {n}"), true, outcome.holds);
    }
    Ok(report)
}

fn binomial(n: usize, k: usize) -> usize {
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

// ---------------------------------------------------------------------------
// Suite: type D underline counts
// ---------------------------------------------------------------------------

fn type_d_suite(params: &VerifyParams) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("typeD");
    let cap = params.cap(4, if params.huge { 6 } else { 5 });
    for n in 3..=cap.clamp(3, 4) {
        let y = longest_element(Family::D, n)?;
        let shape = vec![(n - 1) as u32; n];
        report.record(
            &format!("underlined reduced word count at rank {n}"),
            syt_count(&shape, false)?,
            underline_count(&y, Twist::Identity, UnderlineMode::Reduced, None)?,
        );
    }
    const PLAIN: [u64; 4] = [3, 70, 5775, 10_720_710];
    const TWISTED: [u64; 4] = [3, 35, 5775, 3_573_570];
    let top = if params.huge && params.long { cap.min(6) } else { cap.min(5) };
    for n in 3..=top.max(3) {
        let y = longest_element(Family::D, n)?;
        report.record(
            &format!("underlined involution word count at rank {n}"),
            PLAIN[n - 3],
            underline_count(&y, Twist::Identity, UnderlineMode::Involution, None)?,
        );
        report.record(
            &format!("underlined twisted involution word count at rank {n}"),
            TWISTED[n - 3],
            underline_count(&y, Twist::StarD, UnderlineMode::Involution, None)?,
        );
    }
    Ok(report)
}
