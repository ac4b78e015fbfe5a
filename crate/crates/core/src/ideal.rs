//! The quadratic generating set of the ideal of invariants.
//!
//! For three leaves the ideal is generated by three binomials. For `n >= 4`
//! the generators split in two families:
//!
//! * property one: some leaf carries the same bit in all four words, and
//!   deleting that leaf gives an invariant for `n - 1` leaves. These are the
//!   lifts of the generators for `n - 1` leaves.
//! * property two: at every leaf both terms pair a word with its complement.
//!   These are built directly by pairing complementary words against a fixed
//!   trailing term chosen by the parity of `n`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{check_leaf_count, in_kernel, lift, project, Binomial, LeafWord, Monomial};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub n: usize,
    /// Sorted by leading monomial, greatest first.
    pub property_one: Vec<Binomial>,
    /// Sorted by leading monomial, greatest first.
    pub property_two: Vec<Binomial>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.property_one.len() + self.property_two.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Property one first, then property two.
    pub fn iter(&self) -> impl Iterator<Item = &Binomial> {
        self.property_one.iter().chain(&self.property_two)
    }

    pub fn to_vec(&self) -> Vec<Binomial> {
        self.iter().cloned().collect()
    }
}

/// Generators for three leaves. They pair complementary words at every leaf,
/// so they are filed under property two.
pub fn base_generators() -> GeneratorSet {
    let property_two = sorted_desc(
        ["q000q111-q100q011", "q001q110-q100q011", "q010q101-q100q011"]
            .iter()
            .map(|s| s.parse().expect("valid literal")),
    );
    GeneratorSet {
        n: 3,
        property_one: Vec::new(),
        property_two,
    }
}

/// All lifts of the generators for `n - 1` leaves obtained by inserting the
/// same bit at the same position in every word, de-duplicated.
pub fn lift_property_one(prev: &GeneratorSet) -> Result<Vec<Binomial>> {
    let n = prev.n + 1;
    check_leaf_count(n, 4, crate::MAX_LEAVES)?;
    let prev: Vec<&Binomial> = prev.iter().collect();
    let lifted = prev
        .par_iter()
        .map(|q| {
            let mut out = Vec::with_capacity(2 * n);
            for position in 1..=n {
                for bit in 0..=1 {
                    out.push(lift(q, position, bit)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted_desc(lifted.into_iter().flatten()))
}

/// The two candidate trailing terms `q_{01..1} q_{10..0}` and
/// `q_{01..10} q_{10..01}`.
fn trailing_terms(n: usize) -> [Monomial; 2] {
    let top = 1u32 << (n - 1);
    [Monomial::pair(n, top - 1, top), Monomial::pair(n, top - 2, top + 1)]
}

/// Generators that pair complementary words in both terms.
///
/// Complementary pairs `{w, ~w}` are listed by the smaller word. For odd `n`
/// every pair except the one forming the trailing term `q_{01..1} q_{10..0}`
/// is matched with it. For even `n` the two pairs used as trailing terms are
/// skipped; a pair whose words have odd weight is matched with
/// `q_{01..1} q_{10..0}`, and one with even weight with `q_{01..10} q_{10..01}`,
/// which keeps the root parameters equal on both sides.
pub fn property_two_generators(n: usize) -> Result<Vec<Binomial>> {
    check_leaf_count(n, 4, crate::MAX_LEAVES)?;
    let half = 1u32 << (n - 1);
    let [odd_tail, even_tail] = trailing_terms(n);
    let mask = (1u32 << n) - 1;
    let mut out = Vec::new();
    for w in 0..half {
        if w == half - 1 || (n.is_multiple_of(2) && w == half - 2) {
            continue;
        }
        let lead = Monomial::pair(n, w, !w & mask);
        let tail = if n % 2 == 1 || LeafWord::from_raw(n, w).parity() == 1 {
            odd_tail.clone()
        } else {
            even_tail.clone()
        };
        out.extend(Binomial::new(lead, tail)?);
    }
    Ok(sorted_desc(out))
}

/// Expected number of property-two generators, `(2^(n-1) - 2) + (n mod 2)`.
pub fn property_two_count(n: usize) -> usize {
    (1usize << (n - 1)) - 2 + n % 2
}

/// Generators for `n` leaves, built up from three leaves.
pub fn build_generators(n: usize, cap: usize) -> Result<GeneratorSet> {
    check_leaf_count(n, 3, cap.min(crate::MAX_LEAVES))?;
    let mut set = base_generators();
    for k in 4..=n {
        let property_two = property_two_generators(k)?;
        let two: BTreeSet<&Binomial> = property_two.iter().collect();
        let property_one = lift_property_one(&set)?
            .into_iter()
            .filter(|b| !two.contains(b))
            .collect();
        set = GeneratorSet {
            n: k,
            property_one,
            property_two,
        };
    }
    Ok(set)
}

/// A leaf and bit fixed across all four words such that deleting the leaf
/// leaves an invariant, if there is one.
pub fn property_one_witness(b: &Binomial) -> Option<(usize, u8)> {
    let words: Vec<LeafWord> = b.words().collect();
    (1..=b.n()).find_map(|i| {
        let j = words[0].bit(i);
        if !words.iter().all(|w| w.bit(i) == j) {
            return None;
        }
        match project(b, i) {
            Ok(Some(p)) if in_kernel(&p) => Some((i, j)),
            _ => None,
        }
    })
}

/// Both terms are products of a word and its complement.
pub fn satisfies_property_two(b: &Binomial) -> bool {
    let complementary = |m: &Monomial| {
        let ws: Vec<LeafWord> = m.words().collect();
        ws.len() == 2 && ws[0].complement() == ws[1]
    };
    complementary(b.plus()) && complementary(b.minus())
}

fn sorted_desc(items: impl IntoIterator<Item = Binomial>) -> Vec<Binomial> {
    let set: BTreeSet<Binomial> = items.into_iter().collect();
    set.into_iter().rev().collect()
}
