//! JSON wire forms. A binomial is written as
//! `{"n": 4, "plus": ["0000", "1111"], "minus": ["0110", "1001"]}` with each
//! word list sorted descending in the variable order.

use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{Binomial, LeafWord, Monomial};
use crate::error::{Error, Result};
use crate::ideal::GeneratorSet;
use crate::lattice::LatticeBasis;
use crate::matrix::IncidenceMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialRecord {
    pub n: usize,
    pub plus: Vec<String>,
    pub minus: Vec<String>,
}

impl From<&Binomial> for BinomialRecord {
    fn from(b: &Binomial) -> Self {
        let words = |m: &Monomial| m.words().map(|w| w.to_string()).collect();
        Self {
            n: b.n(),
            plus: words(b.plus()),
            minus: words(b.minus()),
        }
    }
}

impl TryFrom<BinomialRecord> for Binomial {
    type Error = Error;

    fn try_from(r: BinomialRecord) -> Result<Self> {
        let side = |ws: &[String]| -> Result<Monomial> {
            let words = ws.iter().map(|s| s.parse()).collect::<Result<Vec<LeafWord>>>()?;
            Monomial::new(r.n, words)
        };
        let zero = || Error::InvalidWord(format!("{:?} - {:?}", r.plus, r.minus));
        Binomial::new(side(&r.plus)?, side(&r.minus)?)?.ok_or_else(zero)
    }
}

impl Serialize for Binomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BinomialRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Binomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let record = BinomialRecord::deserialize(d)?;
        Binomial::try_from(record).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.words().map(|w| w.to_string()))
    }
}

#[derive(Serialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<u8>>,
}

impl From<&IncidenceMatrix> for MatrixDocument {
    fn from(b: &IncidenceMatrix) -> Self {
        Self {
            n: b.n(),
            rows: b.row_labels().iter().map(|p| p.to_string()).collect(),
            cols: b.col_labels().iter().map(|w| w.to_string()).collect(),
            entries: b.to_rows(),
        }
    }
}

#[derive(Serialize)]
pub struct LatticeDocument {
    pub n: usize,
    pub cols: Vec<String>,
    pub rows: Vec<Vec<i8>>,
    pub binomials: Vec<Binomial>,
}

impl LatticeDocument {
    pub fn new(l: &LatticeBasis, binomials: Vec<Binomial>) -> Self {
        Self {
            n: l.n(),
            cols: l.col_labels().iter().map(|w| w.to_string()).collect(),
            rows: l.rows().to_vec(),
            binomials,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct GeneratorDocument {
    pub n: usize,
    pub count: usize,
    pub property_one: Vec<Binomial>,
    pub property_two: Vec<Binomial>,
}

impl From<&GeneratorSet> for GeneratorDocument {
    fn from(g: &GeneratorSet) -> Self {
        Self {
            n: g.n,
            count: g.len(),
            property_one: g.property_one.clone(),
            property_two: g.property_two.clone(),
        }
    }
}

pub fn binomials_to_json(list: &[Binomial]) -> String {
    serde_json::to_string_pretty(list).expect("binomials serialize")
}

pub fn binomials_from_json(text: &str) -> std::result::Result<Vec<Binomial>, serde_json::Error> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::build_generators;
    use proptest::prelude::*;

    #[test]
    fn schema() {
        let b: Binomial = "q0000q1111-q1001q0110".parse().unwrap();
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": 4, "plus": ["0000", "1111"], "minus": ["0110", "1001"]})
        );
        // Unsorted input is canonicalized on the way in.
        let back: Binomial =
            serde_json::from_str(r#"{"n": 4, "plus": ["1001", "0110"], "minus": ["1111", "0000"]}"#).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<Binomial>(r#"{"n": 3, "plus": ["0000"], "minus": ["1111"]}"#).is_err());
        assert!(serde_json::from_str::<Binomial>(r#"{"n": 2, "plus": ["01","10"], "minus": ["10","01"]}"#).is_err());
    }

    #[test]
    fn generator_document_round_trip() {
        let g = build_generators(5, 16).unwrap();
        let doc = GeneratorDocument::from(&g);
        let text = serde_json::to_string(&doc).unwrap();
        let back: GeneratorDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    proptest! {
        #[test]
        fn binomial_lists_round_trip(raw in prop::collection::vec(prop::collection::vec(0u32..32, 4), 0..20)) {
            let list: Vec<Binomial> = raw
                .iter()
                .filter_map(|v| {
                    let w = |x: u32| LeafWord::new(5, x).unwrap();
                    Binomial::new(
                        Monomial::new(5, [w(v[0]), w(v[1])]).unwrap(),
                        Monomial::new(5, [w(v[2]), w(v[3])]).unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            let back = binomials_from_json(&binomials_to_json(&list)).unwrap();
            prop_assert_eq!(back, list);
        }
    }
}
