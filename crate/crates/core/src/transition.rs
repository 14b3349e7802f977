//! Transition sets, the recursion expanding `G_w` into Schur Q-functions,
//! involution Stanley functions, and the directed transition graphs whose
//! telescoping sums identify the two sides of the main identity.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::{atoms, Twist};
use crate::matchings::{atom_shape, classify_quasi_atom, enumerate_atoms,
    enumerate_quasi_atoms, QuasiAtomClass};
use crate::perm::{cover_test, Family, Reflection, ReflectionKind, SignedPermutation};
pub use crate::symfunc::QExpansion;

// ---------------------------------------------------------------------------
// Transition sets
// ---------------------------------------------------------------------------

/// The three families of Bruhat covers of `w` attached to a column `j`:
/// `t_plus` moves a larger value into position `j` from the right (searched
/// one rank beyond `w`), `t_minus` from the left, and `s_set` uses the
/// sign-changing reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionSets {
    pub t_plus: Vec<SignedPermutation>,
    pub t_minus: Vec<SignedPermutation>,
    pub s_set: Vec<SignedPermutation>,
}

/// Multiply `w` on the right by the reflection `r`, padding ranks as needed.
fn apply_reflection(w: &SignedPermutation, r: &Reflection) -> SignedPermutation {
    let n = w.rank().max(r.j);
    w.compose(&r.element(n).expect("rank was padded to cover the reflection"))
}

/// Compute `T_j^+(w)`, `T_j^-(w)`, and `S_j(w)`.
///
/// Covers are decided by the one-line pattern test.  Because one-lines are
/// kept in canonical trimmed form, candidate indices run to one slot past
/// `max(rank, j)`; no cover can involve a further slot, as the skipped
/// fixed points would sit strictly between the swapped values.
pub fn transition_sets(w: &SignedPermutation, j: usize) -> Result<TransitionSets> {
    if j == 0 {
        return Err(Error::BadIndex("transition column j must be >= 1".into()));
    }
    let n = w.rank().max(j);
    let mut t_plus = Vec::new();
    let mut t_minus = Vec::new();
    let mut s_set = Vec::new();
    for k in j + 1..=n + 1 {
        let r = Reflection::new(ReflectionKind::T, j, k)?;
        if cover_test(w, &r) {
            t_plus.push(apply_reflection(w, &r));
        }
    }
    for i in 1..j {
        let r = Reflection::new(ReflectionKind::T, i, j)?;
        if cover_test(w, &r) {
            t_minus.push(apply_reflection(w, &r));
        }
    }
    for i in 1..=n + 1 {
        let r = if i == j {
            Reflection::new(ReflectionKind::SDiag, j, j)?
        } else {
            Reflection::new(ReflectionKind::SOff, i.min(j), i.max(j))?
        };
        if cover_test(w, &r) {
            s_set.push(apply_reflection(w, &r));
        }
    }
    t_plus.sort();
    t_minus.sort();
    s_set.sort();
    Ok(TransitionSets { t_plus, t_minus, s_set })
}

// ---------------------------------------------------------------------------
// Q-expansions of G_w
// ---------------------------------------------------------------------------

/// Default node-expansion budget for the `G_w` recursion.
pub const DEFAULT_G_BUDGET: u64 = 10_000_000;

static G_MEMO: Lazy<Mutex<HashMap<Vec<i32>, QExpansion>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn g_rec(w: &SignedPermutation, steps: &mut u64) -> Result<QExpansion> {
    let key = w.oneline().to_vec();
    if let Some(hit) = G_MEMO.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    if *steps == 0 {
        return Err(Error::BudgetExceeded(
            "G_w expansion exceeded its node budget".into(),
        ));
    }
    *steps -= 1;
    let ol = w.oneline().to_vec();
    let result = if ol.windows(2).all(|p| p[0] < p[1]) {
        // Increasing one-line: G_w is a single Q-function indexed by the
        // negated negative values, read left to right.
        let shape: Vec<u32> = ol.iter().take_while(|&&x| x < 0).map(|&x| (-x) as u32).collect();
        let mut q = QExpansion::default();
        q.add_term(shape, BigInt::one());
        q
    } else {
        // Pivot at the lexicographically maximal (r, s) with r < s and
        // w_r > w_s, descend to v = w t_{rs}, and sum over the covers of v
        // in column r that are not w itself.
        let n = ol.len();
        let mut pivot = None;
        'outer: for r in (1..n).rev() {
            for s in (r + 1..=n).rev() {
                if ol[r - 1] > ol[s - 1] {
                    pivot = Some((r, s));
                    break 'outer;
                }
            }
        }
        let (r, s) = pivot.expect("a non-increasing one-line has a descent pair");
        let t = Reflection::new(ReflectionKind::T, r, s)?;
        let v = apply_reflection(w, &t);
        debug_assert_eq!(v.ell_c() + 1, w.ell_c());
        let sets = transition_sets(&v, r)?;
        debug_assert!(sets.t_plus.contains(w));
        let mut q = QExpansion::default();
        for u in sets.s_set.iter().chain(&sets.t_minus) {
            q.add_scaled(&g_rec(u, steps)?, &BigInt::one());
        }
        q
    };
    G_MEMO.lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// The expansion of the type-C Stanley function `G_w` into Schur
/// Q-functions, with the default step budget.
pub fn g_expansion(w: &SignedPermutation) -> Result<QExpansion> {
    g_expansion_with_budget(w, DEFAULT_G_BUDGET)
}

/// As [`g_expansion`], but with an explicit node-expansion budget.
pub fn g_expansion_with_budget(w: &SignedPermutation, budget: u64) -> Result<QExpansion> {
    let mut steps = budget;
    g_rec(w, &mut steps)
}

/// The involution Stanley function of `y`: the sum of `G_w` over the atoms
/// of `y`.
pub fn hat_g_expansion(y: &SignedPermutation) -> Result<QExpansion> {
    hat_g_expansion_with_budget(y, DEFAULT_G_BUDGET)
}

/// As [`hat_g_expansion`], but with an explicit node-expansion budget.
pub fn hat_g_expansion_with_budget(y: &SignedPermutation, budget: u64) -> Result<QExpansion> {
    let mut steps = budget;
    let mut q = QExpansion::default();
    for w in atoms(y, Family::C, Twist::Identity)? {
        q.add_scaled(&g_rec(&w, &mut steps)?, &BigInt::one());
    }
    if q.terms.is_empty() {
        // y is the identity: the empty sum of atoms contributes G_id = 1.
        q = QExpansion::one();
    }
    Ok(q)
}

// ---------------------------------------------------------------------------
// Transition graphs
// ---------------------------------------------------------------------------

/// Vertex classification in the transition graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexTag {
    Atom,
    QPlus,
    QMinus,
    Lifted,
}

/// A graph vertex: a full-support one-line word with its tag and, in the
/// layered graph, the index of the layer it was lifted from.
#[derive(Debug, Clone, Serialize)]
pub struct GraphVertex {
    pub word: Vec<i32>,
    pub tag: VertexTag,
    pub layer: Option<usize>,
}

/// A directed edge between vertex indices; `bridge` marks the inter-layer
/// edges of the full graph.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub bridge: bool,
}

/// A directed bipartite transition graph.
#[derive(Debug, Clone, Serialize, Default)]
pub struct TransitionGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
}

impl TransitionGraph {
    /// Index of the vertex carrying `word`, if present.
    pub fn index_of(&self, word: &[i32]) -> Option<usize> {
        self.vertices.iter().position(|v| v.word == word)
    }

    /// In-degrees and out-degrees of every vertex.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg = vec![0; self.vertices.len()];
        let mut outdeg = vec![0; self.vertices.len()];
        for e in &self.edges {
            outdeg[e.from] += 1;
            indeg[e.to] += 1;
        }
        (indeg, outdeg)
    }

    /// Vertex indices with in-degree zero.
    pub fn sources(&self) -> Vec<usize> {
        let (indeg, _) = self.degrees();
        (0..self.vertices.len()).filter(|&i| indeg[i] == 0).collect()
    }

    /// Vertex indices with out-degree zero.
    pub fn sinks(&self) -> Vec<usize> {
        let (_, outdeg) = self.degrees();
        (0..self.vertices.len()).filter(|&i| outdeg[i] == 0).collect()
    }

    /// Whether the directed edge `from -> to` is present.
    pub fn has_edge(&self, from: &[i32], to: &[i32]) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.edges.iter().any(|e| e.from == a && e.to == b),
            _ => false,
        }
    }

    /// Graphviz DOT rendering: boxes for even quasi-atoms, dashed arrows
    /// for bridge edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph transition {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let label = word_text(&v.word);
            let shape = match v.tag {
                VertexTag::QPlus => "box",
                _ => "ellipse",
            };
            let _ = writeln!(out, "  v{i} [label=\"{label}\", shape={shape}];");
        }
        for e in &self.edges {
            let style = if e.bridge { " [style=dashed]" } else { "" };
            let _ = writeln!(out, "  v{} -> v{}{style};", e.from, e.to);
        }
        out.push_str("}\n");
        out
    }
}

/// Space-separated one-line text for a word.
fn word_text(word: &[i32]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Negate position 1 of a word (right multiplication by the sign change).
fn apply_t0(word: &[i32]) -> Vec<i32> {
    let mut w = word.to_vec();
    w[0] = -w[0];
    w
}

/// Swap positions 1 and `i` of a word (right multiplication by `t_{1i}`).
fn apply_t1i(word: &[i32], i: usize) -> Vec<i32> {
    let mut w = word.to_vec();
    w.swap(0, i - 1);
    w
}

/// Swap-and-negate positions 1 and `j` (right multiplication by `s_{1j}`).
fn apply_s1j(word: &[i32], j: usize) -> Vec<i32> {
    let mut w = word.to_vec();
    let (a, b) = (w[0], w[j - 1]);
    w[0] = -b;
    w[j - 1] = -a;
    w
}

fn push_edge(
    g: &mut TransitionGraph,
    index: &HashMap<Vec<i32>, usize>,
    from: &[i32],
    to: &[i32],
    bridge: bool,
) -> Result<()> {
    let lookup = |w: &[i32]| {
        index.get(w).copied().ok_or_else(|| {
            Error::HypothesisFailed(format!("expected vertex {} is missing", word_text(w)))
        })
    };
    let from = lookup(from)?;
    let to = lookup(to)?;
    g.edges.push(GraphEdge { from, to, bridge });
    Ok(())
}

/// One layer of the transition graph: vertices are the atoms and quasi-atoms
/// of rank `n`, with one incoming edge per atom and one incoming plus one
/// outgoing edge per even quasi-atom.
pub fn build_layer_graph(n: usize) -> Result<TransitionGraph> {
    let mut g = TransitionGraph::default();
    let atoms_n = enumerate_atoms(n);
    let (even, odd) = enumerate_quasi_atoms(n)?;
    let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
    for (words, tag) in [
        (&atoms_n, VertexTag::Atom),
        (&even, VertexTag::QPlus),
        (&odd, VertexTag::QMinus),
    ] {
        for w in words {
            index.insert(w.clone(), g.vertices.len());
            g.vertices.push(GraphVertex { word: w.clone(), tag, layer: None });
        }
    }
    for v in &atoms_n {
        if v.is_empty() {
            continue;
        }
        let u = if v[0] < 0 {
            apply_t0(v)
        } else {
            let (_, m) = atom_shape(v)?;
            let c = m.partner(v[0]).ok_or_else(|| {
                Error::MalformedMatching(format!("{} has no block at its first letter", word_text(v)))
            })?;
            let j = v
                .iter()
                .position(|&x| x == -c)
                .ok_or_else(|| Error::MalformedMatching(format!("value {} missing", -c)))?
                + 1;
            apply_s1j(v, j)
        };
        push_edge(&mut g, &index, &u, v, false)?;
    }
    for v in &even {
        let QuasiAtomClass::Even { i, j, .. } = classify_quasi_atom(v)? else {
            return Err(Error::HypothesisFailed(format!(
                "{} is not an even quasi-atom",
                word_text(v)
            )));
        };
        push_edge(&mut g, &index, &apply_s1j(v, j), v, false)?;
        push_edge(&mut g, &index, v, &apply_t1i(v, i), false)?;
    }
    Ok(g)
}

/// The image of a rank-`m` word in rank `big`: prepend the descending run
/// `big .. m+2` and append `m+1`.
pub fn lift_word(word: &[i32], m: usize, big: usize) -> Vec<i32> {
    let mut out: Vec<i32> = (m + 2..=big).rev().map(|x| x as i32).collect();
    out.extend_from_slice(word);
    out.push(m as i32 + 1);
    out
}

/// The full transition graph on rank `n + 1` words: one lifted copy of each
/// layer `0 ..= n`, joined by a bridge from the lifted image of every atom
/// of rank `m - 1` to the corresponding source of layer `m`.
pub fn build_full_graph(n: usize) -> Result<TransitionGraph> {
    let mut g = TransitionGraph::default();
    let big = n + 1;
    let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
    for m in 0..=n {
        let layer = build_layer_graph(m)?;
        let offset = g.vertices.len();
        for v in &layer.vertices {
            let tag = if m == n {
                v.tag
            } else if v.tag == VertexTag::QMinus {
                VertexTag::QMinus
            } else {
                VertexTag::Lifted
            };
            let word = lift_word(&v.word, m, big);
            index.insert(word.clone(), g.vertices.len());
            g.vertices.push(GraphVertex { word, tag, layer: Some(m) });
        }
        for e in &layer.edges {
            g.edges.push(GraphEdge { from: offset + e.from, to: offset + e.to, bridge: false });
        }
    }
    for m in 1..=n {
        for w in enumerate_atoms(m - 1) {
            let from = lift_word(&w, m - 1, big);
            let mut source = vec![m as i32];
            source.extend_from_slice(&w);
            let to = lift_word(&source, m, big);
            push_edge(&mut g, &index, &from, &to, true)?;
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Telescoping sums
// ---------------------------------------------------------------------------

/// Result of a telescoping-sum check: the weighted sums over sinks and
/// sources, and whether they agree.
#[derive(Debug, Clone)]
pub struct TelescopeOutcome {
    pub holds: bool,
    pub sink_sum: QExpansion,
    pub source_sum: QExpansion,
}

/// Verify the bipartite telescoping lemma on `g` for the vertex labelling
/// `f`.  The odd part of the bipartition is the `QMinus` vertices; `f` must
/// vanish and balance (incoming sum = outgoing sum) at each of them, and
/// every interior even vertex must have in-degree equal to out-degree.  The
/// conclusion compares `sum over sinks of deg * f` with the same sum over
/// sources.
pub fn telescope_check<F>(g: &TransitionGraph, f: F) -> Result<TelescopeOutcome>
where
    F: Fn(&GraphVertex) -> Result<QExpansion>,
{
    let (indeg, outdeg) = g.degrees();
    let odd = |i: usize| g.vertices[i].tag == VertexTag::QMinus;
    for e in &g.edges {
        if odd(e.from) == odd(e.to) {
            return Err(Error::HypothesisFailed(word_text(&g.vertices[e.from].word)));
        }
    }
    let mut values = Vec::with_capacity(g.vertices.len());
    for v in &g.vertices {
        values.push(f(v)?);
    }
    for i in 0..g.vertices.len() {
        if odd(i) {
            if !values[i].terms.is_empty() {
                return Err(Error::HypothesisFailed(word_text(&g.vertices[i].word)));
            }
            let mut balance = QExpansion::default();
            for e in &g.edges {
                if e.from == i {
                    balance.add_scaled(&values[e.to], &BigInt::one());
                }
                if e.to == i {
                    balance.add_scaled(&values[e.from], &(-BigInt::one()));
                }
            }
            if !balance.terms.is_empty() {
                return Err(Error::HypothesisFailed(word_text(&g.vertices[i].word)));
            }
        } else if indeg[i] > 0 && outdeg[i] > 0 && indeg[i] != outdeg[i] {
            return Err(Error::HypothesisFailed(word_text(&g.vertices[i].word)));
        }
    }
    let mut sink_sum = QExpansion::default();
    let mut source_sum = QExpansion::default();
    for i in 0..g.vertices.len() {
        let deg = BigInt::from(indeg[i] + outdeg[i]);
        if outdeg[i] == 0 {
            sink_sum.add_scaled(&values[i], &deg);
        }
        if indeg[i] == 0 {
            source_sum.add_scaled(&values[i], &deg);
        }
    }
    Ok(TelescopeOutcome { holds: sink_sum == source_sum, sink_sum, source_sum })
}

// ---------------------------------------------------------------------------
// Structural verification of the layer graphs
// ---------------------------------------------------------------------------

fn perm_of(word: &[i32]) -> SignedPermutation {
    SignedPermutation::from_oneline(word.to_vec()).expect("graph words are valid one-lines")
}

/// Check every structural theorem about the layer graph of rank `n` and
/// return the list of violations (empty means all checks pass): typed and
/// covering edges, degree bounds, the identification of edge neighborhoods
/// at odd quasi-atoms with transition sets, and the source/sink criteria.
pub fn verify_graph_theorems(n: usize) -> Result<Vec<String>> {
    let g = build_layer_graph(n)?;
    let mut bad = Vec::new();
    let (indeg, outdeg) = g.degrees();
    let odd = |i: usize| g.vertices[i].tag == VertexTag::QMinus;
    for e in &g.edges {
        let (a, b) = (&g.vertices[e.from], &g.vertices[e.to]);
        if odd(e.from) == odd(e.to) {
            bad.push(format!(
                "edge {} -> {} does not cross the bipartition",
                word_text(&a.word),
                word_text(&b.word)
            ));
        }
        // The even endpoint always covers the odd endpoint in Bruhat order.
        let (lo, hi) = if odd(e.to) { (&b.word, &a.word) } else { (&a.word, &b.word) };
        if !crate::perm::is_cover(&perm_of(lo), &perm_of(hi)) {
            bad.push(format!(
                "edge {} -> {} is not a Bruhat cover toward the even endpoint",
                word_text(&a.word),
                word_text(&b.word)
            ));
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        match v.tag {
            VertexTag::Atom => {
                let want_in = usize::from(n > 0);
                if indeg[i] != want_in || outdeg[i] != 0 {
                    bad.push(format!("atom {} has degrees {}/{}", word_text(&v.word), indeg[i], outdeg[i]));
                }
            }
            VertexTag::QPlus => {
                if indeg[i] != 1 || outdeg[i] != 1 {
                    bad.push(format!(
                        "even quasi-atom {} has degrees {}/{}",
                        word_text(&v.word),
                        indeg[i],
                        outdeg[i]
                    ));
                }
            }
            VertexTag::QMinus => {
                let p = perm_of(&v.word);
                // Outgoing neighbors must be exactly S_1.
                let mut out_words: Vec<Vec<i32>> = g
                    .edges
                    .iter()
                    .filter(|e| e.from == i)
                    .map(|e| g.vertices[e.to].word.clone())
                    .collect();
                out_words.sort();
                let mut s_words: Vec<Vec<i32>> = transition_sets(&p, 1)?
                    .s_set
                    .iter()
                    .map(|u| u.oneline_padded(n))
                    .collect();
                s_words.sort();
                if out_words != s_words {
                    bad.push(format!("out-edges at {} differ from S_1", word_text(&v.word)));
                }
                // Incoming neighbors must be exactly T_1^+ whenever the
                // first letter is below n.
                if v.word[0] < n as i32 {
                    let mut in_words: Vec<Vec<i32>> = g
                        .edges
                        .iter()
                        .filter(|e| e.to == i)
                        .map(|e| g.vertices[e.from].word.clone())
                        .collect();
                    in_words.sort();
                    let mut t_words: Vec<Vec<i32>> = Vec::new();
                    for u in transition_sets(&p, 1)?.t_plus {
                        if u.rank() > n {
                            bad.push(format!(
                                "T_1 member of {} leaves rank {n}",
                                word_text(&v.word)
                            ));
                        } else {
                            t_words.push(u.oneline_padded(n));
                        }
                    }
                    t_words.sort();
                    if in_words != t_words {
                        bad.push(format!("in-edges at {} differ from T_1", word_text(&v.word)));
                    }
                }
            }
            VertexTag::Lifted => bad.push("layer graph contains a lifted vertex".to_string()),
        }
    }
    // Sources are exactly the words starting with n (all odd quasi-atoms
    // whose tail is an atom of rank n - 1), and sinks are exactly the atoms.
    let mut source_words: Vec<Vec<i32>> =
        g.sources().iter().map(|&i| g.vertices[i].word.clone()).collect();
    source_words.sort();
    let mut expected_sources: Vec<Vec<i32>> = enumerate_atoms(n.saturating_sub(1))
        .into_iter()
        .map(|tail| {
            let mut w = vec![n as i32];
            w.extend(tail);
            w
        })
        .collect();
    if n == 0 {
        expected_sources = vec![vec![]];
    }
    expected_sources.sort();
    if source_words != expected_sources {
        bad.push(format!("sources of rank {n} differ from the first-letter criterion"));
    }
    for &i in &g.sources() {
        if n > 0 && (g.vertices[i].tag != VertexTag::QMinus || g.vertices[i].word[0] != n as i32) {
            bad.push(format!("source {} mistyped", word_text(&g.vertices[i].word)));
        }
    }
    let mut sink_words: Vec<Vec<i32>> =
        g.sinks().iter().map(|&i| g.vertices[i].word.clone()).collect();
    sink_words.sort();
    let mut atom_words = enumerate_atoms(n);
    atom_words.sort();
    if sink_words != atom_words {
        bad.push(format!("sinks of rank {n} are not exactly the atoms"));
    }
    Ok(bad)
}
