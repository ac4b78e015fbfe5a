//! Reduction of pure difference binomials against a binomial basis under the
//! lexicographic order, and a Buchberger-criterion check of a proposed basis.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{check_same_n, Binomial, Monomial};
use crate::error::{Error, Result};

const STEP_CAP: usize = 1 << 20;

/// The leading term; canonical orientation keeps it in the plus slot.
pub fn leading_monomial(b: &Binomial) -> &Monomial {
    b.plus()
}

/// `(m / u1) v1 - (m / u2) v2` with `m = lcm(u1, u2)`; `None` when the two
/// sides coincide.
pub fn s_polynomial(b1: &Binomial, b2: &Binomial) -> Result<Option<Binomial>> {
    check_same_n(b1.n(), b2.n())?;
    let m = b1.plus().lcm(b2.plus());
    let left = m.checked_div(b1.plus()).expect("lcm is a multiple").mul(b1.minus());
    let right = m.checked_div(b2.plus()).expect("lcm is a multiple").mul(b2.minus());
    Binomial::new(left, right)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    /// Index of the divisor in the basis as passed in.
    pub divisor: usize,
    /// The rewritten term is `multiplier * lead(divisor)`.
    pub multiplier: Monomial,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: Option<Binomial>,
}

impl ReductionTrace {
    /// Re-applies the recorded steps to `input`; `None` if a step does not
    /// match a term of the current binomial.
    pub fn replay(&self, input: &Binomial, basis: &[Binomial]) -> Option<Option<Binomial>> {
        let mut current = Some(input.clone());
        for step in &self.steps {
            let (u, v) = current?.into_terms();
            let g = basis.get(step.divisor)?;
            let term = step.multiplier.mul(g.plus());
            let replacement = step.multiplier.mul(g.minus());
            current = if term == u {
                Binomial::oriented(replacement, v)
            } else if term == v {
                Binomial::oriented(u, replacement)
            } else {
                return None;
            };
        }
        Some(current)
    }
}

/// A basis prepared for repeated reductions.
///
/// Divisors are looked up by leading monomial. When several basis elements
/// divide a term, the one with the greatest leading monomial wins, ties going
/// to the lower index.
pub struct Reducer<'a> {
    basis: &'a [Binomial],
    leads: HashMap<&'a Monomial, usize>,
    lead_degrees: Vec<usize>,
}

impl<'a> Reducer<'a> {
    pub fn new(basis: &'a [Binomial]) -> Result<Self> {
        if let Some(first) = basis.first() {
            for g in basis {
                check_same_n(first.n(), g.n())?;
            }
        }
        let mut leads = HashMap::with_capacity(basis.len());
        for (i, g) in basis.iter().enumerate() {
            leads.entry(g.plus()).or_insert(i);
        }
        let mut lead_degrees: Vec<usize> = basis.iter().map(|g| g.degree()).collect();
        lead_degrees.sort_unstable();
        lead_degrees.dedup();
        Ok(Self {
            basis,
            leads,
            lead_degrees,
        })
    }

    pub fn basis(&self) -> &'a [Binomial] {
        self.basis
    }

    /// The preferred basis element whose leading monomial divides `m`, with the cofactor.
    fn find_divisor(&self, m: &Monomial) -> Option<(usize, Monomial)> {
        let mut best: Option<(usize, &Monomial)> = None;
        for &d in self.lead_degrees.iter().filter(|&&d| d <= m.degree()) {
            for_each_submultiset(m.values(), d, &mut |sub| {
                let candidate = Monomial::from_sorted_values(m.n(), sub.into());
                if let Some((key, &i)) = self.leads.get_key_value(&candidate) {
                    let better = match best {
                        None => true,
                        Some((j, lead)) => *key > lead || (*key == lead && i < j),
                    };
                    if better {
                        best = Some((i, key));
                    }
                }
            });
        }
        best.map(|(i, lead)| (i, m.checked_div(lead).expect("divisor found by lookup")))
    }

    /// Full normal form: first the leading term is rewritten until no leading
    /// monomial of the basis divides it, then the trailing term.
    pub fn reduce(&self, b: &Binomial) -> Result<ReductionTrace> {
        if let Some(g) = self.basis.first() {
            check_same_n(b.n(), g.n())?;
        }
        let mut steps = Vec::new();
        let (mut u, mut v) = b.clone().into_terms();
        loop {
            if steps.len() >= STEP_CAP {
                return Err(Error::ReductionCap(STEP_CAP));
            }
            if let Some((i, multiplier)) = self.find_divisor(&u) {
                let replacement = multiplier.mul(self.basis[i].minus());
                steps.push(ReductionStep { divisor: i, multiplier });
                match Binomial::oriented(replacement, v) {
                    None => return Ok(ReductionTrace { steps, result: None }),
                    Some(next) => (u, v) = next.into_terms(),
                }
                continue;
            }
            if let Some((i, multiplier)) = self.find_divisor(&v) {
                let replacement = multiplier.mul(self.basis[i].minus());
                debug_assert!(replacement < v);
                steps.push(ReductionStep { divisor: i, multiplier });
                v = replacement;
                continue;
            }
            break;
        }
        Ok(ReductionTrace {
            steps,
            result: Binomial::oriented(u, v),
        })
    }
}

/// Calls `f` once per distinct sub-multiset of size `k` of the sorted slice.
fn for_each_submultiset(values: &[u32], k: usize, f: &mut impl FnMut(&[u32])) {
    fn go(values: &[u32], k: usize, start: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let mut i = start;
        while i < values.len() {
            if values.len() - i < k - buf.len() {
                break;
            }
            buf.push(values[i]);
            go(values, k, i + 1, buf, f);
            buf.pop();
            let current = values[i];
            while i < values.len() && values[i] == current {
                i += 1;
            }
        }
    }
    go(values, k, 0, &mut Vec::with_capacity(k), f);
}

/// Normal form of `b` modulo `basis`, with the steps taken.
pub fn reduce(b: &Binomial, basis: &[Binomial]) -> Result<ReductionTrace> {
    Reducer::new(basis)?.reduce(b)
}

/// True iff `b` reduces to zero; meaningful as a membership test when
/// `basis` is a Gröbner basis.
pub fn ideal_membership(b: &Binomial, groebner_basis: &[Binomial]) -> Result<bool> {
    Ok(reduce(b, groebner_basis)?.result.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Every S-pair is reduced.
    Strict,
    /// Pairs with coprime leading terms, or with non-coprime trailing terms,
    /// are skipped.
    Criteria,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum PairOutcome {
    CoprimeLeads,
    SharedTrailingFactor,
    /// The S-polynomial vanished identically.
    ZeroSPolynomial,
    Reduced {
        steps: u32,
    },
    Remainder {
        remainder: Binomial,
    },
}

impl PairOutcome {
    pub fn is_success(&self) -> bool {
        !matches!(self, PairOutcome::Remainder { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub i: u32,
    pub j: u32,
    #[serde(flatten)]
    pub outcome: PairOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerCertificate {
    pub mode: CheckMode,
    pub basis_size: usize,
    pub holds: bool,
    pub pairs: Vec<PairRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub pairs: usize,
    pub coprime_leads: usize,
    pub shared_trailing_factor: usize,
    pub zero_s_polynomial: usize,
    pub reduced: usize,
    pub remainders: usize,
    pub max_steps: u32,
}

impl GroebnerCertificate {
    pub fn summary(&self) -> CertificateSummary {
        let mut s = CertificateSummary {
            pairs: self.pairs.len(),
            ..Default::default()
        };
        for p in &self.pairs {
            match &p.outcome {
                PairOutcome::CoprimeLeads => s.coprime_leads += 1,
                PairOutcome::SharedTrailingFactor => s.shared_trailing_factor += 1,
                PairOutcome::ZeroSPolynomial => s.zero_s_polynomial += 1,
                PairOutcome::Reduced { steps } => {
                    s.reduced += 1;
                    s.max_steps = s.max_steps.max(*steps);
                }
                PairOutcome::Remainder { .. } => s.remainders += 1,
            }
        }
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairRecord> {
        self.pairs.iter().filter(|p| !p.outcome.is_success())
    }
}

/// Buchberger criterion: the basis is a Gröbner basis iff every S-pair
/// reduces to zero (or is discarded by a criterion in [`CheckMode::Criteria`]).
pub fn is_groebner(basis: &[Binomial], mode: CheckMode) -> Result<GroebnerCertificate> {
    let reducer = Reducer::new(basis)?;
    let len = basis.len();
    let pairs = (0..len)
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..len).map(move |j| (i, j)))
        .map(|(i, j)| {
            let (gi, gj) = (&basis[i], &basis[j]);
            let outcome = if mode == CheckMode::Criteria && gi.plus().is_coprime(gj.plus()) {
                PairOutcome::CoprimeLeads
            } else if mode == CheckMode::Criteria && !gi.minus().is_coprime(gj.minus()) {
                PairOutcome::SharedTrailingFactor
            } else {
                match s_polynomial(gi, gj)? {
                    None => PairOutcome::ZeroSPolynomial,
                    Some(s) => {
                        let trace = reducer.reduce(&s)?;
                        match trace.result {
                            None => PairOutcome::Reduced {
                                steps: trace.steps.len() as u32,
                            },
                            Some(remainder) => PairOutcome::Remainder { remainder },
                        }
                    }
                }
            };
            Ok(PairRecord {
                i: i as u32,
                j: j as u32,
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let holds = pairs.iter().all(|p| p.outcome.is_success());
    Ok(GroebnerCertificate {
        mode,
        basis_size: len,
        holds,
        pairs,
    })
}

/// Number of monomials of the given degree in `2^n` variables divisible by no
/// leading monomial of `basis`.
pub fn count_standard_monomials(basis: &[Binomial], n: usize, degree: usize) -> Result<usize> {
    let reducer = Reducer::new(basis)?;
    let vars = 1u32 << n;
    let mut count = 0;
    let mut buf = vec![0u32; degree];
    fn walk(depth: usize, min: u32, vars: u32, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if depth == buf.len() {
            visit(buf);
            return;
        }
        for v in min..vars {
            buf[depth] = v;
            walk(depth + 1, v, vars, buf, visit);
        }
    }
    walk(0, 0, vars, &mut buf, &mut |values| {
        let m = Monomial::from_sorted_values(n, values.into());
        if reducer.find_divisor(&m).is_none() {
            count += 1;
        }
    });
    Ok(count)
}
