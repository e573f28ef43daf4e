//! JSON interchange forms. Rationals are strings (`"-1/30"`), partitions are
//! integer arrays zero-padded to `r`, and terms appear weight ascending,
//! lexicographically descending within a weight.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{format_rational, parse_rational};
use crate::series::GradedSeries;
use crate::sympoly::SymPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPolyJson {
    pub r: usize,
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    pub terms: Vec<TermJson>,
}

impl SymPolyJson {
    pub fn from_sympoly(f: &SymPoly, family: Option<&str>) -> Self {
        SymPolyJson {
            r: f.r(),
            basis: "monomial".into(),
            family: family.map(str::to_owned),
            terms: f
                .terms()
                .map(|(k, c)| TermJson {
                    partition: k.padded(f.r()),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_sympoly(&self) -> Result<SymPoly> {
        if self.basis != "monomial" {
            return Err(Error::Parse {
                what: "basis",
                input: self.basis.clone(),
            });
        }
        let mut f = SymPoly::zero(self.r);
        for t in &self.terms {
            let k = Partition::new(t.partition.clone())?;
            k.check_fits(self.r)?;
            f.add_term(k, parse_rational(&t.coeff)?);
        }
        Ok(f)
    }
}

pub fn sympoly_to_json(f: &SymPoly, family: Option<&str>) -> String {
    serde_json::to_string(&SymPolyJson::from_sympoly(f, family)).expect("serializable")
}

/// Parses a SymPoly document, returning the polynomial and its family tag.
pub fn sympoly_from_json(s: &str) -> Result<(SymPoly, Option<String>)> {
    let doc: SymPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        what: "SymPoly JSON",
        input: e.to_string(),
    })?;
    Ok((doc.to_sympoly()?, doc.family))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSeriesJson {
    pub r: usize,
    pub max_degree: usize,
    pub components: Vec<SymPolyJson>,
}

pub fn graded_to_json(g: &GradedSeries) -> String {
    let doc = GradedSeriesJson {
        r: g.r(),
        max_degree: g.max_degree(),
        components: g
            .components()
            .iter()
            .map(|c| SymPolyJson::from_sympoly(c, None))
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn graded_from_json(s: &str) -> Result<GradedSeries> {
    let doc: GradedSeriesJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        what: "GradedSeries JSON",
        input: e.to_string(),
    })?;
    if doc.components.len() != doc.max_degree + 1 {
        return Err(Error::Parse {
            what: "GradedSeries JSON",
            input: format!("{} components for max_degree {}", doc.components.len(), doc.max_degree),
        });
    }
    let comps = doc
        .components
        .iter()
        .map(SymPolyJson::to_sympoly)
        .collect::<Result<Vec<_>>>()?;
    GradedSeries::from_components(doc.r, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::jack_p;
    use crate::rational::{frac, int};
    use crate::series::f00_truncated;

    #[test]
    fn sympoly_shape_and_round_trip() {
        let f = SymPoly::from_terms(
            2,
            [
                (Partition::new(vec![2]).unwrap(), frac(3, 4)),
                (Partition::empty(), frac(-1, 30)),
                (Partition::new(vec![1, 1]).unwrap(), int(2)),
            ],
        );
        let s = sympoly_to_json(&f, None);
        assert_eq!(
            s,
            r#"{"r":2,"basis":"monomial","terms":[{"partition":[0,0],"coeff":"-1/30"},{"partition":[2,0],"coeff":"3/4"},{"partition":[1,1],"coeff":"2"}]}"#
        );
        let (back, fam) = sympoly_from_json(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(fam, None);
        assert_eq!(sympoly_to_json(&back, None), s);
    }

    #[test]
    fn family_tag() {
        let p = jack_p(&Partition::new(vec![2, 1]).unwrap(), 3, &frac(1, 2)).unwrap();
        let s = sympoly_to_json(&p, Some("P"));
        let (back, fam) = sympoly_from_json(&s).unwrap();
        assert_eq!((back, fam.as_deref()), (p.as_ref().clone(), Some("P")));
    }

    #[test]
    fn accepts_unicode_minus_and_rejects_junk() {
        let s = r#"{"r":1,"basis":"monomial","terms":[{"partition":[0],"coeff":"−1/2"}]}"#;
        assert_eq!(sympoly_from_json(s).unwrap().0, SymPoly::constant(1, frac(-1, 2)));
        let bad = r#"{"r":1,"basis":"monomial","terms":[{"partition":[1,2],"coeff":"1"}]}"#;
        assert!(sympoly_from_json(bad).is_err());
        let bad = r#"{"r":1,"basis":"schur","terms":[]}"#;
        assert!(sympoly_from_json(bad).is_err());
    }

    #[test]
    fn graded_round_trip() {
        let g = f00_truncated(&[frac(1, 2), int(-1)], 2, &int(1), 3).unwrap();
        let s = graded_to_json(&g);
        let back = graded_from_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(graded_to_json(&back), s);
    }
}
