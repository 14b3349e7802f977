//! Twisted involutions, the 0-Hecke conjugation action, atoms, involution
//! words, and the type-D underline projection.
//!
//! For a group automorphism `theta` preserving the generating set, an element
//! `y` is a twisted involution if `theta(y) = y^{-1}`.  Its atoms are the
//! minimal-length elements `w` with `theta(w)^{-1} o w = y` in the 0-Hecke
//! monoid, and its involution words are the reduced words of its atoms.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::Zero;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{
    count_reduced_words, demazure_product, reduced_words, visit_reduced_words, Family, Generator,
    SignedPermutation, Word,
};

/// Diagram automorphisms used to twist the conjugation action.
///
/// `Identity` is available in every family.  `StarD` is the nontrivial
/// diagram automorphism of type D: it conjugates elements by the sign change
/// in position 1 and swaps the generators `t_1'` and `t_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Twist {
    Identity,
    StarD,
}

impl Twist {
    /// Whether this twist is defined for the given family.
    pub fn valid_for(&self, family: Family) -> bool {
        match self {
            Twist::Identity => true,
            Twist::StarD => family == Family::D,
        }
    }

    fn require(&self, family: Family) -> Result<()> {
        if self.valid_for(family) {
            Ok(())
        } else {
            Err(Error::BadIndex(format!(
                "twist {self:?} is only defined in type D, not {family}"
            )))
        }
    }

    /// Apply the automorphism to a group element.
    pub fn apply_element(&self, w: &SignedPermutation) -> SignedPermutation {
        match self {
            Twist::Identity => w.clone(),
            Twist::StarD => {
                let t0 = SignedPermutation::from_oneline(vec![-1]).unwrap();
                t0.compose(w).compose(&t0)
            }
        }
    }

    /// Apply the automorphism to a generator.
    pub fn apply_generator(&self, g: Generator) -> Generator {
        match (self, g.index) {
            (Twist::StarD, -1) => Generator { index: 1, ..g },
            (Twist::StarD, 1) => Generator { index: -1, ..g },
            _ => g,
        }
    }
}

/// Whether `y` lies in the family and satisfies `theta(y) = y^{-1}`.
pub fn is_twisted_involution(y: &SignedPermutation, family: Family, twist: Twist) -> Result<bool> {
    twist.require(family)?;
    Ok(y.in_family(family) && twist.apply_element(y) == y.inverse())
}

fn require_twisted_involution(
    y: &SignedPermutation,
    family: Family,
    twist: Twist,
) -> Result<()> {
    if is_twisted_involution(y, family, twist)? {
        Ok(())
    } else {
        Err(Error::NotInvolution(format!(
            "{y} (family {family}, twist {twist:?})"
        )))
    }
}

/// The twisted 0-Hecke conjugate `theta(s) o y o s` (Demazure products).
pub fn demazure_conjugate(
    y: &SignedPermutation,
    s: Generator,
    family: Family,
    twist: Twist,
) -> Result<SignedPermutation> {
    require_twisted_involution(y, family, twist)?;
    let ys = demazure_product(y, &s.element(), family)?;
    demazure_product(&twist.apply_generator(s).element(), &ys, family)
}

type AtomsKey = (Family, Twist, Vec<i32>);
static ATOMS_MEMO: Lazy<Mutex<HashMap<AtomsKey, Vec<SignedPermutation>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The atom set of a twisted involution: all minimal-length `w` with
/// `theta(w)^{-1} o w = y`, sorted by one-line representation.
pub fn atoms(y: &SignedPermutation, family: Family, twist: Twist) -> Result<Vec<SignedPermutation>> {
    require_twisted_involution(y, family, twist)?;
    atoms_inner(y, family, twist)
}

fn atoms_inner(
    y: &SignedPermutation,
    family: Family,
    twist: Twist,
) -> Result<Vec<SignedPermutation>> {
    if y.is_identity() {
        return Ok(vec![SignedPermutation::identity()]);
    }
    let key = (family, twist, y.oneline().to_vec());
    if let Some(a) = ATOMS_MEMO.lock().unwrap().get(&key) {
        return Ok(a.clone());
    }
    let len = y.length(family)?;
    let mut out: HashSet<SignedPermutation> = HashSet::new();
    for s in y.right_descents(family)? {
        let selem = s.element();
        let ys = y.compose(&selem);
        let tsys = twist.apply_generator(s).element().compose(&ys);
        let y_prev = if tsys.length(family)? + 2 == len { tsys } else { ys };
        for v in atoms_inner(&y_prev, family, twist)? {
            let vs = v.compose(&selem);
            if vs.length(family)? == v.length(family)? + 1 {
                out.insert(vs);
            }
        }
    }
    let mut out: Vec<SignedPermutation> = out.into_iter().collect();
    out.sort();
    ATOMS_MEMO.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Twisted involution length: the common length of the atoms of `y`.
pub fn involution_length(y: &SignedPermutation, family: Family, twist: Twist) -> Result<usize> {
    let a = atoms(y, family, twist)?;
    a[0].length(family)
}

/// All involution words of `y`: the reduced words of its atoms, sorted
/// lexicographically.
pub fn involution_words(
    y: &SignedPermutation,
    family: Family,
    twist: Twist,
) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for w in atoms(y, family, twist)? {
        out.extend(reduced_words(&w, family)?);
    }
    out.sort();
    Ok(out)
}

/// Exact count of the involution words of `y` (atom-by-atom, memoized).
pub fn count_involution_words(
    y: &SignedPermutation,
    family: Family,
    twist: Twist,
) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for w in atoms(y, family, twist)? {
        total += count_reduced_words(&w, family)?;
    }
    Ok(total)
}

/// Which word set the underline projection is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnderlineMode {
    /// Reduced words of a type-D element.
    Reduced,
    /// Involution words of a type-D twisted involution.
    Involution,
}

/// Count the distinct underline projections of the reduced or involution
/// words of a type-D element.  The projection replaces every letter `t_1'`
/// by `t_1`; distinct words can collide, so this is a count of the image
/// set.  `budget` bounds the number of words enumerated before projection.
pub fn underline_count(
    y: &SignedPermutation,
    twist: Twist,
    mode: UnderlineMode,
    budget: Option<u64>,
) -> Result<BigUint> {
    let family = Family::D;
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut visit = |idx: &[i32]| {
        let projected: Vec<i32> = idx.iter().map(|&i| if i == -1 { 1 } else { i }).collect();
        seen.insert(projected);
    };
    match mode {
        UnderlineMode::Reduced => {
            visit_reduced_words(y, family, budget, &mut visit)?;
        }
        UnderlineMode::Involution => {
            let mut remaining = budget;
            for w in atoms(y, family, twist)? {
                if let Some(b) = remaining {
                    let used = count_reduced_words(&w, family)?;
                    let used: u64 = (&used)
                        .try_into()
                        .map_err(|_| Error::BudgetExceeded("word count overflow".into()))?;
                    if used > b {
                        return Err(Error::BudgetExceeded(format!(
                            "underline enumeration exceeded {} words",
                            budget.unwrap()
                        )));
                    }
                    remaining = Some(b - used);
                }
                visit_reduced_words(&w, family, None, &mut visit)?;
            }
        }
    }
    Ok(BigUint::from(seen.len()))
}
