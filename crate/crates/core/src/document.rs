//! JSON interchange for polytope descriptions. A document carries a
//! facet family, optionally exact rational coordinates and cached
//! invariants. Coordinates are serialized as "p/q" strings so nothing
//! rounds; on import they must realize the listed facets.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, VertexSet};
use crate::generators::{braxtope_facets, cyclic_facets, multiplex_facets, rd_braxtope_facets};
use crate::geometry::{hull_facets, Point, Rational, Realization};
use crate::invariants::{FVector, FlagVector, HVector};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Braxtope,
    Multiplex,
    Cyclic,
    RdBraxtope,
    Custom,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Braxtope => "braxtope",
            Kind::Multiplex => "multiplex",
            Kind::Cyclic => "cyclic",
            Kind::RdBraxtope => "rd-braxtope",
            Kind::Custom => "custom",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "braxtope" => Ok(Kind::Braxtope),
            "multiplex" => Ok(Kind::Multiplex),
            "cyclic" => Ok(Kind::Cyclic),
            "rd-braxtope" => Ok(Kind::RdBraxtope),
            "custom" => Ok(Kind::Custom),
            other => Err(Error::InvalidParams(format!(
                "unknown kind {other:?}; expected braxtope, multiplex, cyclic, rd-braxtope, or custom"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    pub d: u32,
    pub n: u32,
}

/// Cached invariants. Imports accept them verbatim; consumers recompute
/// from the facets rather than trusting the cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Invariants {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<FVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flags: Option<BTreeMap<String, u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<HVector>,
}

/// Flag map keyed by comma-joined dimension chains ("" for the empty
/// chain, "0,2" for vertex-in-2-face).
pub fn flag_map(flags: &FlagVector) -> BTreeMap<String, u64> {
    flags
        .0
        .iter()
        .map(|(dims, count)| {
            let key = dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            (key, *count)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub kind: Kind,
    pub parameters: Parameters,
    /// Sorted vertex index lists, one per facet.
    pub facets: Vec<Vec<u32>>,
    /// Exact coordinates as "p/q" strings, one list per vertex in label
    /// order. When present there are n+1 of them and their hull must
    /// reproduce `facets`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<Invariants>,
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s)
        .map_err(|e| Error::Document(format!("coordinate {s:?} is not a rational: {e}")))
}

fn rational_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

impl PolytopeDocument {
    /// Document for a generated family of the given kind.
    pub fn generate(kind: Kind, r: Option<u32>, d: u32, n: u32) -> Result<PolytopeDocument> {
        let family = match kind {
            Kind::Braxtope => braxtope_facets(d, n)?,
            Kind::Multiplex => multiplex_facets(d, n)?,
            Kind::Cyclic => cyclic_facets(d, n)?,
            Kind::RdBraxtope => {
                let r = r.ok_or_else(|| {
                    Error::InvalidParams("rd-braxtope generation needs --r".into())
                })?;
                rd_braxtope_facets(r, d, n)?
            }
            Kind::Custom => {
                return Err(Error::InvalidParams(
                    "custom documents come from files, not generators".into(),
                ))
            }
        };
        Ok(PolytopeDocument::from_family(kind, r, d, n, &family))
    }

    pub fn from_family(
        kind: Kind,
        r: Option<u32>,
        d: u32,
        n: u32,
        family: &FacetFamily,
    ) -> PolytopeDocument {
        let r = match kind {
            Kind::RdBraxtope => r,
            _ => None,
        };
        PolytopeDocument {
            kind,
            parameters: Parameters { r, d, n },
            facets: family
                .facets()
                .iter()
                .map(|f| f.iter().collect())
                .collect(),
            vertices: None,
            invariants: None,
        }
    }

    /// Attach exact coordinates rendered as "p/q" strings.
    pub fn with_realization(mut self, real: &Realization) -> PolytopeDocument {
        self.vertices = Some(
            real.points()
                .iter()
                .map(|p| p.iter().map(rational_string).collect())
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Parse and validate. Well-formedness failures (bad JSON, indices
    /// out of range, coordinates that bound a different polytope) are
    /// errors; whether the facets satisfy any structural claim is the
    /// verifier's business, not the importer's.
    pub fn from_json(text: &str) -> Result<PolytopeDocument> {
        let doc: PolytopeDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        let n = self.parameters.n;
        if self.facets.is_empty() {
            return Err(Error::Document("document lists no facets".into()));
        }
        for facet in &self.facets {
            if facet.is_empty() {
                return Err(Error::Document("empty facet".into()));
            }
            if facet.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Document(format!(
                    "facet {facet:?} is not strictly increasing"
                )));
            }
            if let Some(&v) = facet.iter().find(|v| **v > n) {
                return Err(Error::Document(format!(
                    "facet {facet:?} uses vertex {v} beyond n = {n}"
                )));
            }
        }
        if self.kind == Kind::RdBraxtope && self.parameters.r.is_none() {
            return Err(Error::Document("rd-braxtope document lacks r".into()));
        }
        if let Some(vertices) = &self.vertices {
            let real = self.parse_realization(vertices)?;
            let hull = hull_facets(&real)?;
            let family = self.facet_family()?;
            if !hull.same_sets(&family) {
                return Err(Error::Document(
                    "vertex coordinates bound a polytope with different facets".into(),
                ));
            }
        }
        Ok(())
    }

    fn parse_realization(&self, vertices: &[Vec<String>]) -> Result<Realization> {
        let n = self.parameters.n;
        let d = self.parameters.d;
        if vertices.len() != n as usize + 1 {
            return Err(Error::Document(format!(
                "{} vertex coordinate lists for n = {n}; expected {}",
                vertices.len(),
                n + 1
            )));
        }
        let points: Vec<Point> = vertices
            .iter()
            .map(|coords| coords.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<_>>()?;
        Realization::new(d, points)
    }

    /// The coordinates as an exact realization, when present.
    pub fn realization(&self) -> Result<Option<Realization>> {
        match &self.vertices {
            Some(vertices) => Ok(Some(self.parse_realization(vertices)?)),
            None => Ok(None),
        }
    }

    pub fn facet_family(&self) -> Result<FacetFamily> {
        let sets: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| VertexSet::new(f.clone()))
            .collect();
        FacetFamily::unlabeled(self.parameters.n, sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{realize_braxtope, RealizeOptions};

    #[test]
    fn generated_document_round_trips() {
        let doc = PolytopeDocument::generate(Kind::Braxtope, None, 4, 6).unwrap();
        assert_eq!(doc.facets.len(), 9);
        let json = doc.to_json().unwrap();
        let back = PolytopeDocument::from_json(&json).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.to_json().unwrap(), json);
    }

    #[test]
    fn kind_strings_round_trip() {
        for kind in [
            Kind::Braxtope,
            Kind::Multiplex,
            Kind::Cyclic,
            Kind::RdBraxtope,
            Kind::Custom,
        ] {
            assert_eq!(kind.to_string().parse::<Kind>().unwrap(), kind);
        }
    }

    #[test]
    fn rd_braxtope_requires_r() {
        assert!(PolytopeDocument::generate(Kind::RdBraxtope, None, 4, 6).is_err());
        let doc = PolytopeDocument::generate(Kind::RdBraxtope, Some(2), 4, 6).unwrap();
        assert_eq!(doc.parameters.r, Some(2));
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(PolytopeDocument::from_json("{not json").is_err());
        assert!(PolytopeDocument::from_json("{}").is_err());
        // Unknown fields are caught rather than silently dropped.
        let doc = PolytopeDocument::generate(Kind::Braxtope, None, 3, 4).unwrap();
        let json = doc.to_json().unwrap().replace("\"kind\"", "\"knd\"");
        assert!(PolytopeDocument::from_json(&json).is_err());
    }

    #[test]
    fn bad_facet_lists_are_rejected() {
        let mut doc = PolytopeDocument::generate(Kind::Braxtope, None, 3, 4).unwrap();
        doc.facets[0] = vec![2, 1, 0];
        let json = doc.to_json().unwrap();
        assert!(matches!(
            PolytopeDocument::from_json(&json),
            Err(Error::Document(_))
        ));
        doc.facets[0] = vec![0, 1, 9];
        let json = doc.to_json().unwrap();
        assert!(matches!(
            PolytopeDocument::from_json(&json),
            Err(Error::Document(_))
        ));
    }

    #[test]
    fn coordinates_verify_on_import() {
        let real = realize_braxtope(3, 5, &RealizeOptions::default()).unwrap();
        let doc = PolytopeDocument::generate(Kind::Braxtope, None, 3, 5)
            .unwrap()
            .with_realization(&real);
        let json = doc.to_json().unwrap();
        let back = PolytopeDocument::from_json(&json).unwrap();
        let parsed = back.realization().unwrap().unwrap();
        assert_eq!(parsed.points(), real.points());

        // Same coordinates against the wrong facet family must fail.
        let wrong = PolytopeDocument::generate(Kind::Multiplex, None, 3, 5)
            .unwrap()
            .with_realization(&real);
        let json = wrong.to_json().unwrap();
        assert!(matches!(
            PolytopeDocument::from_json(&json),
            Err(Error::Document(_))
        ));
    }

    #[test]
    fn rational_strings_always_carry_a_denominator() {
        let real = realize_braxtope(3, 3, &RealizeOptions::default()).unwrap();
        let doc = PolytopeDocument::generate(Kind::Braxtope, None, 3, 3)
            .unwrap()
            .with_realization(&real);
        for coords in doc.vertices.as_ref().unwrap() {
            for c in coords {
                assert!(c.contains('/'), "coordinate {c} lacks an explicit denominator");
            }
        }
    }

    #[test]
    fn flag_map_keys_are_comma_joined() {
        let lat =
            crate::lattice::build_lattice(4, &braxtope_facets(3, 3).unwrap()).unwrap();
        let map = flag_map(&lat.flag_vector());
        assert_eq!(map.get(""), Some(&1));
        assert!(map.contains_key("0,1,2"));
    }
}
