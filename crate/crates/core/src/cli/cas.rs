//! Singular scripts declaring the coordinate ring and an ideal, for checking
//! results against an external computer algebra system.

use std::fmt::Write;

use crate::algebra::{Binomial, LeafWord, Monomial};

fn term(m: &Monomial) -> String {
    m.words().map(|w| format!("q_{w}")).collect::<Vec<_>>().join("*")
}

/// A script with `2^n` variables `q_<word>` in binary-counting order under
/// `lp` (so `q_0..0` is the greatest variable) and the ideal `I` spanned by
/// `generators`. Output is byte-stable for a fixed input.
pub fn export_cas_script(generators: &[Binomial], n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "// claw tree on {n} leaves, {} generators", generators.len()).unwrap();
    let vars: Vec<String> = LeafWord::all(n).map(|w| format!("q_{w}")).collect();
    writeln!(out, "ring R = 0, ({}), lp;", vars.join(", ")).unwrap();
    if generators.is_empty() {
        writeln!(out, "ideal I = 0;").unwrap();
    } else {
        writeln!(out, "ideal I =").unwrap();
        for (k, g) in generators.iter().enumerate() {
            let sep = if k + 1 == generators.len() { ";" } else { "," };
            writeln!(out, "  {} - {}{sep}", term(g.plus()), term(g.minus())).unwrap();
        }
    }
    out
}
