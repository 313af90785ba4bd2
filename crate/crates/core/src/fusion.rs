//! The fusion ring of simple objects.
//!
//! Simples are indexed by words; tensor products decompose by a recursive
//! recipe: only the adjacent alternating parts at the junction interact,
//! through the Clebsch-Gordan rule, and a unit summand splits off and
//! recurses on the shortened words. The whole module is pure word
//! combinatorics; `dimension_oracle_check` ties it back to diagram counting
//! through semisimplicity.

use crate::morphisms::hom_dimension;
use crate::words::Word;
use crate::Error;
use std::collections::BTreeMap;

/// A multiset of simple labels with positive multiplicities; the empty word
/// labels the unit object.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FusionResult {
    labels: BTreeMap<Word, u64>,
}

impl FusionResult {
    pub fn empty() -> Self {
        FusionResult::default()
    }

    pub fn unit() -> Self {
        Self::single(Word::empty())
    }

    pub fn single(w: Word) -> Self {
        let mut r = Self::empty();
        r.add(w, 1);
        r
    }

    pub fn add(&mut self, w: Word, mult: u64) {
        if mult == 0 {
            return;
        }
        *self.labels.entry(w).or_insert(0) += mult;
    }

    pub fn extend_scaled(&mut self, other: &FusionResult, factor: u64) {
        for (w, m) in &other.labels {
            self.add(w.clone(), m * factor);
        }
    }

    /// Labels in lexicographic order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, u64)> {
        self.labels.iter().map(|(w, m)| (w, *m))
    }

    pub fn multiplicity(&self, w: &Word) -> u64 {
        self.labels.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.labels.values().sum()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl FromIterator<(Word, u64)> for FusionResult {
    fn from_iter<T: IntoIterator<Item = (Word, u64)>>(iter: T) -> Self {
        let mut r = Self::empty();
        for (w, m) in iter {
            r.add(w, m);
        }
        r
    }
}

/// Clebsch-Gordan decomposition of `X_u (x) X_v` for nonempty alternating
/// `u`, `v` whose junction alternates: one copy of the alternating word of
/// length `|u| + |v| - 2k` starting with `u`'s first letter, for
/// `k = 0 .. min(|u|, |v|)`; length zero is the unit (possible only when
/// `v = star(u)`).
pub fn clebsch_gordan(u: &Word, v: &Word) -> Result<FusionResult, Error> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::Domain(
            "Clebsch-Gordan factors must be nonempty".into(),
        ));
    }
    if !u.is_alternating() || !v.is_alternating() {
        return Err(Error::Domain(
            "Clebsch-Gordan factors must be alternating".into(),
        ));
    }
    let junction_left = *u.letters().last().expect("nonempty");
    let junction_right = v.letters()[0];
    if junction_left == junction_right {
        return Err(Error::Domain(
            "Clebsch-Gordan junction must alternate; use the simple-product rule".into(),
        ));
    }
    let first = u.letters()[0];
    let mut out = FusionResult::empty();
    for k in 0..=u.len().min(v.len()) {
        let len = u.len() + v.len() - 2 * k;
        out.add(Word::alternating(first, len), 1);
    }
    Ok(out)
}

/// The fusion product `X_w (x) X_{w'}` by the recursive recipe: if the
/// junction letters of the adjacent alternating parts agree, the product
/// stays simple with label `ww'`; otherwise the junction parts fuse by
/// Clebsch-Gordan, non-unit outcomes are substituted in place, and a unit
/// outcome recurses on the remaining parts.
pub fn fuse(w: &Word, w_prime: &Word) -> FusionResult {
    if w.is_empty() {
        return FusionResult::single(w_prime.clone());
    }
    if w_prime.is_empty() {
        return FusionResult::single(w.clone());
    }
    let left_parts = w.alternating_decomposition();
    let right_parts = w_prime.alternating_decomposition();
    let last = left_parts.last().expect("nonempty word");
    let first = &right_parts[0];

    let junction_left = *last.letters().last().expect("nonempty part");
    let junction_right = first.letters()[0];
    if junction_left == junction_right {
        return FusionResult::single(w.concat(w_prime));
    }

    let prefix = concat_all(&left_parts[..left_parts.len() - 1]);
    let suffix = concat_all(&right_parts[1..]);
    let cg = clebsch_gordan(last, first).expect("junction alternates");

    let mut out = FusionResult::empty();
    for (label, mult) in cg.iter() {
        debug_assert_eq!(mult, 1);
        if label.is_empty() {
            out.extend_scaled(&fuse(&prefix, &suffix), mult);
        } else {
            out.add(prefix.concat(label).concat(&suffix), mult);
        }
    }
    out
}

fn concat_all(parts: &[Word]) -> Word {
    let mut out = Word::empty();
    for p in parts {
        out = out.concat(p);
    }
    out
}

/// Multiplicities of each simple inside the full tensor word `X^w`,
/// computed by fusing letter by letter starting from the unit.
pub fn decompose_word(w: &Word) -> FusionResult {
    let mut acc = FusionResult::unit();
    for &letter in w.letters() {
        let step = Word::from_letters(vec![letter]);
        let mut next = FusionResult::empty();
        for (label, mult) in acc.iter() {
            next.extend_scaled(&fuse(label, &step), mult);
        }
        acc = next;
    }
    acc
}

/// Semisimplicity consistency: `sum_u m_u(w) m_u(w') = dim K_{w,w'}`, with
/// multiplicities from the fusion recipe and the dimension from brute-force
/// diagram enumeration.
pub fn dimension_oracle_check(w: &Word, w_prime: &Word) -> bool {
    let left = decompose_word(w);
    let right = decompose_word(w_prime);
    let paired: u64 = left
        .iter()
        .map(|(label, m)| m * right.multiplicity(label))
        .sum();
    paired == hom_dimension(w, w_prime) as u64
}
