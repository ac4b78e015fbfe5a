//! Fourier coordinates of the Z2 claw tree and the monomial map into the
//! edge parameters.
//!
//! A coordinate `q_w` is indexed by a [`LeafWord`] `w = g1 g2 ... gn`, leaf 1
//! leftmost. Its image under the parametrization is the product
//! `a_{g1}^(1) ... a_{gn}^(n) a_{g1+...+gn}^(n+1)`, a multiset of
//! [`ParamVariable`]s. Variables `q_w` are ordered by binary counting:
//! `q_{0..00} > q_{0..01} > ... > q_{1..1}`, and monomials carry the
//! lexicographic order induced by it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Hard upper bound on the leaf count supported by the word encoding.
pub const MAX_LEAVES: usize = 24;

/// Default configurable cap on the leaf count.
pub const DEFAULT_CAP: usize = 16;

/// A length-`n` word over {0,1}; index of a Fourier coordinate.
///
/// Stored as its binary value `g1*2^(n-1) + ... + gn`. The [`Ord`] impl is the
/// variable order, so `000 > 001 > ... > 111`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeafWord {
    value: u32,
    n: u8,
}

impl LeafWord {
    pub fn new(n: usize, value: u32) -> Result<Self> {
        check_leaf_count(n, 1, MAX_LEAVES)?;
        if u64::from(value) >= 1u64 << n {
            return Err(Error::WordValueOutOfRange { value: value.into(), n });
        }
        Ok(Self::from_raw(n, value))
    }

    pub(crate) fn from_raw(n: usize, value: u32) -> Self {
        debug_assert!(n <= MAX_LEAVES && u64::from(value) < 1u64 << n);
        Self { value, n: n as u8 }
    }

    /// Builds a word from its bits, leaf 1 first.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() || bits.len() > MAX_LEAVES || bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWord(format!("{bits:?}")));
        }
        let value = bits.iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
        Ok(Self::from_raw(bits.len(), value))
    }

    /// All words of length `n` in binary-counting order (greatest variable first).
    pub fn all(n: usize) -> impl DoubleEndedIterator<Item = LeafWord> + ExactSizeIterator {
        (0..1u32 << n).map(move |v| LeafWord::from_raw(n, v))
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn binary_value(self) -> u32 {
        self.value
    }

    /// The bit observed at leaf `position` (1-based, leaf 1 leftmost).
    pub fn bit(self, position: usize) -> u8 {
        debug_assert!((1..=self.n()).contains(&position));
        ((self.value >> (self.n() - position)) & 1) as u8
    }

    pub fn bits(self) -> impl Iterator<Item = u8> {
        (1..=self.n()).map(move |i| self.bit(i))
    }

    /// Sum of the bits mod 2; the group element at the root.
    pub fn parity(self) -> u8 {
        (self.value.count_ones() & 1) as u8
    }

    pub fn complement(self) -> Self {
        Self::from_raw(self.n(), !self.value & ((1u32 << self.n) - 1))
    }

    /// Deletes the entry at `position`, giving a word of length `n - 1`.
    pub fn delete(self, position: usize) -> Result<Self> {
        if !(1..=self.n()).contains(&position) {
            return Err(Error::PositionOutOfRange {
                position,
                max: self.n(),
            });
        }
        check_leaf_count(self.n() - 1, 1, MAX_LEAVES)?;
        let low_bits = self.n() - position;
        let low = self.value & ((1u32 << low_bits) - 1);
        let high = self.value >> (low_bits + 1);
        Ok(Self::from_raw(self.n() - 1, (high << low_bits) | low))
    }

    /// Inserts `bit` so that it becomes the entry at `position` of a word of
    /// length `n + 1`.
    pub fn insert(self, position: usize, bit: u8) -> Result<Self> {
        if !(1..=self.n() + 1).contains(&position) {
            return Err(Error::PositionOutOfRange {
                position,
                max: self.n() + 1,
            });
        }
        check_leaf_count(self.n() + 1, 1, MAX_LEAVES)?;
        let low_bits = self.n() + 1 - position;
        let low = self.value & ((1u32 << low_bits) - 1);
        let high = self.value >> low_bits;
        let value = (((high << 1) | u32::from(bit & 1)) << low_bits) | low;
        Ok(Self::from_raw(self.n() + 1, value))
    }
}

impl Ord for LeafWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| other.value.cmp(&self.value))
    }
}

impl PartialOrd for LeafWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LeafWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LeafWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{self}")
    }
}

impl FromStr for LeafWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidWord(s.to_owned())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_bits(&bits).map_err(|_| Error::InvalidWord(s.to_owned()))
    }
}

/// Variable order on words: `Greater` means `q_w1 > q_w2`, i.e. `w1` has the
/// smaller binary value.
pub fn compare_words(w1: LeafWord, w2: LeafWord) -> Result<Ordering> {
    check_same_n(w1.n(), w2.n())?;
    Ok(w1.cmp(&w2))
}

/// An edge parameter `a_g^(i)`: group element `g` at position `i`, where
/// position `n + 1` is the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamVariable {
    pub position: u8,
    pub g: u8,
}

impl ParamVariable {
    pub fn new(g: u8, position: usize) -> Self {
        debug_assert!(g <= 1 && position >= 1);
        Self {
            position: position as u8,
            g,
        }
    }
}

impl fmt::Display for ParamVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}^({})", self.g, self.position)
    }
}

/// Image of a single coordinate: one parameter per position `1..=n+1`, in
/// position order.
pub fn phi_variable(w: LeafWord) -> Vec<ParamVariable> {
    w.bits()
        .enumerate()
        .map(|(i, g)| ParamVariable::new(g, i + 1))
        .chain(std::iter::once(ParamVariable::new(w.parity(), w.n() + 1)))
        .collect()
}

/// Image of a monomial as a sorted multiset of parameters.
pub fn phi_monomial(m: &Monomial) -> Vec<ParamVariable> {
    let mut image: Vec<ParamVariable> = m.words().flat_map(phi_variable).collect();
    image.sort_unstable();
    image
}

/// A product of Fourier coordinates, all over the same leaf count.
///
/// Factors are kept sorted by binary value, i.e. descending in the variable
/// order. [`Ord`] is the lexicographic monomial order for a fixed `n`: the
/// greatest variables are compared first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    factors: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn new(n: usize, words: impl IntoIterator<Item = LeafWord>) -> Result<Self> {
        check_leaf_count(n, 1, MAX_LEAVES)?;
        let mut factors = SmallVec::new();
        for w in words {
            check_same_n(n, w.n())?;
            factors.push(w.value);
        }
        factors.sort_unstable();
        Ok(Self { n: n as u8, factors })
    }

    pub fn one(n: usize) -> Self {
        Self {
            n: n as u8,
            factors: SmallVec::new(),
        }
    }

    pub(crate) fn from_sorted_values(n: usize, factors: SmallVec<[u32; 4]>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Self { n: n as u8, factors }
    }

    pub(crate) fn pair(n: usize, a: u32, b: u32) -> Self {
        let factors = if a <= b {
            SmallVec::from_slice(&[a, b])
        } else {
            SmallVec::from_slice(&[b, a])
        };
        Self { n: n as u8, factors }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.factors
    }

    /// Factors, greatest variable first.
    pub fn words(&self) -> impl Iterator<Item = LeafWord> + '_ {
        let n = self.n();
        self.factors.iter().map(move |&v| LeafWord::from_raw(n, v))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] != w[1])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut rest = other.factors.iter().peekable();
        'outer: for &f in &self.factors {
            while let Some(&&g) = rest.peek() {
                rest.next();
                match g.cmp(&f) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut d = divisor.factors.iter().peekable();
        for &f in &self.factors {
            match d.peek() {
                Some(&&g) if g == f => {
                    d.next();
                }
                Some(&&g) if g < f => return None,
                _ => out.push(f),
            }
        }
        if d.next().is_some() {
            return None;
        }
        Some(Self::from_sorted_values(self.n(), out))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors: SmallVec<[u32; 4]> = SmallVec::with_capacity(self.degree() + other.degree());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        factors.push(x);
                        a.next();
                    } else {
                        factors.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    factors.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    factors.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self::from_sorted_values(self.n(), factors)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                factors.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                factors.push(b[j]);
                j += 1;
            } else {
                factors.push(a[i]);
                i += 1;
                j += 1;
            }
        }
        Self::from_sorted_values(self.n(), factors)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Applies `f` to every factor word and re-sorts.
    pub fn map_words(&self, n: usize, mut f: impl FnMut(LeafWord) -> Result<LeafWord>) -> Result<Monomial> {
        let words = self.words().map(&mut f).collect::<Result<Vec<_>>>()?;
        Monomial::new(n, words)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.factors.iter().zip(&other.factors) {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, w) in self.words().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "q{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lexicographic comparison of two monomials of equal leaf count and degree.
pub fn compare_monomials_lex(m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    check_same_n(m1.n(), m2.n())?;
    if m1.degree() != m2.degree() {
        return Err(Error::DegreeMismatch {
            left: m1.degree(),
            right: m2.degree(),
        });
    }
    Ok(m1.cmp(m2))
}

/// A pure difference `plus - minus` of two distinct monomials of equal degree,
/// oriented so that `plus` is the lex-greater term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Canonical binomial `a - b` up to sign; `None` when the terms coincide.
    pub fn new(a: Monomial, b: Monomial) -> Result<Option<Self>> {
        check_same_n(a.n(), b.n())?;
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: b.degree(),
            });
        }
        Ok(Self::oriented(a, b))
    }

    /// Like [`Binomial::new`] for terms already known to be compatible.
    pub(crate) fn oriented(a: Monomial, b: Monomial) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Greater => Some(Self { plus: a, minus: b }),
            Ordering::Less => Some(Self { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    /// Builds `q_{p1} q_{p2} ... - q_{m1} q_{m2} ...` from word strings.
    pub fn from_words(plus: &[&str], minus: &[&str]) -> Result<Option<Self>> {
        let parse = |ws: &[&str]| ws.iter().map(|s| s.parse()).collect::<Result<Vec<LeafWord>>>();
        let (p, m) = (parse(plus)?, parse(minus)?);
        let n = p.first().or(m.first()).map_or(1, |w| w.n());
        Self::new(Monomial::new(n, p)?, Monomial::new(n, m)?)
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn degree(&self) -> usize {
        self.plus.degree()
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn into_terms(self) -> (Monomial, Monomial) {
        (self.plus, self.minus)
    }

    /// Quadratic, squarefree, and all four words distinct.
    pub fn is_quadratic_circuit_shape(&self) -> bool {
        self.degree() == 2
            && self.plus.is_squarefree()
            && self.minus.is_squarefree()
            && self.plus.is_coprime(&self.minus)
    }

    /// All words in the binomial: the plus factors followed by the minus factors.
    pub fn words(&self) -> impl Iterator<Item = LeafWord> + '_ {
        self.plus.words().chain(self.minus.words())
    }

    /// Applies a word map to every factor and re-canonicalizes.
    pub fn map_words(&self, n: usize, mut f: impl FnMut(LeafWord) -> Result<LeafWord>) -> Result<Option<Binomial>> {
        let plus = self.plus.map_words(n, &mut f)?;
        let minus = self.minus.map_words(n, &mut f)?;
        Binomial::new(plus, minus)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses forms such as `q0000*q1111 - q1001*q0110` or
/// `q_{0000}q_{1111}-q_{1001}q_{0110}`. The zero binomial is rejected.
impl FromStr for Binomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidWord(s.to_owned());
        let (lhs, rhs) = s.split_once('-').ok_or_else(invalid)?;
        let side = |t: &str| -> Result<Vec<LeafWord>> {
            t.split('q')
                .map(|w| w.chars().filter(|c| matches!(c, '0' | '1')).collect::<String>())
                .filter(|w| !w.is_empty())
                .map(|w| w.parse())
                .collect()
        };
        let (p, m) = (side(lhs)?, side(rhs)?);
        let n = p.first().ok_or_else(invalid)?.n();
        Binomial::new(Monomial::new(n, p)?, Monomial::new(n, m)?)?.ok_or_else(invalid)
    }
}

/// True iff both terms have the same image under the monomial map.
pub fn in_kernel(b: &Binomial) -> bool {
    phi_monomial(b.plus()) == phi_monomial(b.minus())
}

/// Deletes the entry at leaf `position` from every word; `None` when the two
/// terms collapse onto each other.
pub fn project(b: &Binomial, position: usize) -> Result<Option<Binomial>> {
    let n = b.n();
    check_leaf_count(n, 3, MAX_LEAVES)?;
    if !(1..=n).contains(&position) {
        return Err(Error::PositionOutOfRange { position, max: n });
    }
    b.map_words(n - 1, |w| w.delete(position))
}

/// Inserts `bit` at leaf `position` in every word of `b`.
pub fn lift(b: &Binomial, position: usize, bit: u8) -> Result<Binomial> {
    let lifted = b.map_words(b.n() + 1, |w| w.insert(position, bit))?;
    Ok(lifted.expect("inserting a common bit is injective"))
}

pub(crate) fn check_leaf_count(n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::LeafCountOutOfRange { n, min, max })
    }
}

pub(crate) fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LeafCountMismatch { left, right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> LeafWord {
        s.parse().unwrap()
    }

    fn m(words: &[&str]) -> Monomial {
        let ws: Vec<_> = words.iter().map(|s| w(s)).collect();
        Monomial::new(ws[0].n(), ws).unwrap()
    }

    fn b(s: &str) -> Binomial {
        s.parse().unwrap()
    }

    fn pv(g: u8, i: usize) -> ParamVariable {
        ParamVariable::new(g, i)
    }

    #[test]
    fn phi_variable_examples() {
        assert_eq!(phi_variable(w("01")), vec![pv(0, 1), pv(1, 2), pv(1, 3)]);
        assert_eq!(phi_variable(w("00")), vec![pv(0, 1), pv(0, 2), pv(0, 3)]);
        assert_eq!(phi_variable(w("111")), vec![pv(1, 1), pv(1, 2), pv(1, 3), pv(1, 4)]);
    }

    #[test]
    fn phi_monomial_examples() {
        let expected: Vec<_> = (1..=4).flat_map(|i| [pv(0, i), pv(1, i)]).collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(phi_monomial(&m(&["000", "111"])), expected_sorted);
        assert_eq!(phi_monomial(&m(&["100", "011"])), expected_sorted);
        assert!(phi_monomial(&Monomial::one(3)).is_empty());
    }

    #[test]
    fn kernel_membership_examples() {
        assert!(in_kernel(&b("q_{010}q_{101}-q_{100}q_{011}")));
        assert!(!in_kernel(&b("q00*q11 - q01*q10")));
        assert!(in_kernel(&b("q0000q1111-q1001q0110")));
    }

    #[test]
    fn word_order_examples() {
        assert_eq!(compare_words(w("000"), w("001")).unwrap(), Ordering::Greater);
        assert_eq!(compare_words(w("10"), w("11")).unwrap(), Ordering::Greater);
        assert_eq!(compare_words(w("011"), w("011")).unwrap(), Ordering::Equal);
        assert!(matches!(
            compare_words(w("01"), w("011")),
            Err(Error::LeafCountMismatch { .. })
        ));
    }

    #[test]
    fn monomial_order_examples() {
        let a = m(&["000", "111"]);
        let c = m(&["100", "011"]);
        assert_eq!(compare_monomials_lex(&a, &c).unwrap(), Ordering::Greater);
        assert_eq!(compare_monomials_lex(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(compare_monomials_lex(&m(&["001", "110"]), &a).unwrap(), Ordering::Less);
        assert!(matches!(
            compare_monomials_lex(&a, &m(&["000"])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            compare_monomials_lex(&a, &m(&["00", "11"])),
            Err(Error::LeafCountMismatch { .. })
        ));
    }

    /// Lex order straight from exponent vectors: scan variables from the
    /// greatest (value 0) down and compare exponents.
    fn lex_by_exponents(n: usize, m1: &Monomial, m2: &Monomial) -> Ordering {
        let exps = |mm: &Monomial| {
            let mut e = vec![0u32; 1 << n];
            for &v in mm.values() {
                e[v as usize] += 1;
            }
            e
        };
        let (e1, e2) = (exps(m1), exps(m2));
        for (x, y) in e1.iter().zip(&e2) {
            if x != y {
                return x.cmp(y);
            }
        }
        Ordering::Equal
    }

    #[test]
    fn monomial_order_matches_exponent_table_for_three_leaves() {
        let all: Vec<Monomial> = (0..8u32)
            .flat_map(|a| (a..8).map(move |c| Monomial::pair(3, a, c)))
            .collect();
        for x in &all {
            for y in &all {
                assert_eq!(x.cmp(y), lex_by_exponents(3, x, y), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn projection_examples() {
        let p = project(&b("q0000q1110-q1000q0110"), 4).unwrap().unwrap();
        assert_eq!(p, b("q000q111-q100q011"));
        let p = project(&b("q0010q0101-q0011q0100"), 1).unwrap().unwrap();
        assert_eq!(p, b("q010q101-q011q100"));
        assert_eq!(project(&b("q001q110-q101q010"), 1).unwrap(), None);
        assert!(matches!(
            project(&b("q001q110-q101q010"), 4),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            project(&b("q00q11-q01q10"), 1),
            Err(Error::LeafCountOutOfRange { .. })
        ));
    }

    #[test]
    fn binomial_canonical_orientation() {
        let x = Binomial::new(m(&["100", "011"]), m(&["000", "111"])).unwrap().unwrap();
        assert_eq!(x.plus(), &m(&["000", "111"]));
        assert_eq!(Binomial::new(m(&["000", "111"]), m(&["111", "000"])).unwrap(), None);
        let again = Binomial::new(x.plus().clone(), x.minus().clone()).unwrap().unwrap();
        assert_eq!(again, x);
    }

    #[test]
    fn word_surgery() {
        assert_eq!(w("10110").delete(3).unwrap(), w("1010"));
        assert_eq!(w("1010").insert(3, 1).unwrap(), w("10110"));
        assert_eq!(w("0110").insert(5, 0).unwrap(), w("01100"));
        assert_eq!(w("0110").complement(), w("1001"));
        assert!("01a".parse::<LeafWord>().is_err());
        assert!("".parse::<LeafWord>().is_err());
        assert!(LeafWord::new(3, 8).is_err());
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&["000", "011", "111"]);
        assert!(m(&["000", "111"]).divides(&a));
        assert!(!m(&["000", "001"]).divides(&a));
        assert_eq!(a.checked_div(&m(&["011"])).unwrap(), m(&["000", "111"]));
        assert_eq!(a.checked_div(&m(&["011", "011"])), None);
        assert_eq!(m(&["000", "111"]).lcm(&m(&["000", "011"])), a);
        assert_eq!(m(&["000"]).mul(&m(&["011", "111"])), a);
        assert!(m(&["000", "111"]).is_coprime(&m(&["001", "011"])));
    }

    fn arb_word(n: usize) -> impl Strategy<Value = LeafWord> {
        (0..1u32 << n).prop_map(move |v| LeafWord::from_raw(n, v))
    }

    fn arb_binomial(n: usize) -> impl Strategy<Value = Option<Binomial>> {
        prop::collection::vec(arb_word(n), 4).prop_map(move |ws| {
            Binomial::new(
                Monomial::new(n, ws[..2].to_vec()).unwrap(),
                Monomial::new(n, ws[2..].to_vec()).unwrap(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn phi_has_one_parameter_per_position(n in 2usize..12, v in any::<u32>()) {
            let word = LeafWord::from_raw(n, v & ((1 << n) - 1));
            let image = phi_variable(word);
            prop_assert_eq!(image.len(), n + 1);
            for (i, p) in image.iter().enumerate() {
                prop_assert_eq!(p.position as usize, i + 1);
            }
        }

        #[test]
        fn word_order_reverses_binary_value(n in 1usize..12, a in any::<u32>(), c in any::<u32>()) {
            let mask = (1u32 << n) - 1;
            let (x, y) = (LeafWord::from_raw(n, a & mask), LeafWord::from_raw(n, c & mask));
            prop_assert_eq!(x.cmp(&y), y.binary_value().cmp(&x.binary_value()));
        }

        #[test]
        fn string_round_trip(n in 1usize..16, v in any::<u32>()) {
            let word = LeafWord::from_raw(n, v & ((1 << n) - 1));
            prop_assert_eq!(word.to_string().parse::<LeafWord>().unwrap(), word);
        }

        #[test]
        fn insert_then_delete_is_identity(n in 1usize..12, v in any::<u32>(), pos in 1usize..13, bit in 0u8..2) {
            prop_assume!(pos <= n + 1);
            let word = LeafWord::from_raw(n, v & ((1 << n) - 1));
            let lifted = word.insert(pos, bit).unwrap();
            prop_assert_eq!(lifted.bit(pos), bit);
            prop_assert_eq!(lifted.delete(pos).unwrap(), word);
        }

        #[test]
        fn canonicalization_is_idempotent(b in arb_binomial(4)) {
            if let Some(b) = b {
                prop_assert!(b.plus() > b.minus());
                let again = Binomial::new(b.minus().clone(), b.plus().clone()).unwrap().unwrap();
                prop_assert_eq!(again, b);
            }
        }

        #[test]
        fn lex_order_agrees_with_exponent_scan(x in prop::collection::vec(0u32..16, 3), y in prop::collection::vec(0u32..16, 3)) {
            let to_m = |v: &[u32]| Monomial::new(4, v.iter().map(|&a| LeafWord::from_raw(4, a))).unwrap();
            let (mx, my) = (to_m(&x), to_m(&y));
            prop_assert_eq!(mx.cmp(&my), lex_by_exponents(4, &mx, &my));
        }

        #[test]
        fn lifting_commutes_with_orientation(b in arb_binomial(4), pos in 1usize..6, bit in 0u8..2) {
            if let Some(b) = b {
                let lifted = lift(&b, pos, bit).unwrap();
                prop_assert_eq!(project(&lifted, pos).unwrap(), Some(b.clone()));
                let raw_plus = b.plus().map_words(5, |w| w.insert(pos, bit)).unwrap();
                prop_assert_eq!(lifted.plus(), &raw_plus);
            }
        }
    }
}
