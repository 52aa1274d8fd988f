//! JSON documents. Rationals travel as `"num/den"` strings (plain integers
//! allowed without the slash) so exact values survive serialization. Every
//! document emitted by this module re-parses to an equal value.
//!
//! The `ground` field is optional where names double as object keys; when it
//! is absent, elements are taken in sorted key order.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use cgx_core::{
    ConvexGeometry, GroundSet, Ordering, OrderingFamily, Polygon, PolygonMap, Rational,
    RationalPoint, ShellingEmbedding, ShellingInstance, Subset,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

fn core_err(e: cgx_core::Error) -> anyhow::Error {
    anyhow::Error::new(e)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .trim()
        .parse()
        .with_context(|| format!("bad numerator in {s:?}"))?;
    let denom: BigInt = d
        .trim()
        .parse()
        .with_context(|| format!("bad denominator in {s:?}"))?;
    if denom == BigInt::from(0) {
        bail!("zero denominator in {s:?}");
    }
    Ok(Rational::new(numer, denom))
}

pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn point_strings(p: &RationalPoint) -> Vec<String> {
    p.coords().iter().map(rational_string).collect()
}

pub fn parse_point(coords: &[String]) -> Result<RationalPoint> {
    let parsed = coords
        .iter()
        .map(|c| parse_rational(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalPoint::new(parsed))
}

pub fn subset_names(ground: &GroundSet, s: Subset) -> Vec<String> {
    s.iter().map(|e| ground.name(e).to_string()).collect()
}

/// `{"ground": ["a","b"], "convex": [[], ["a"], ["a","b"]]}`. Members are
/// emitted in ascending mask order, each sorted by ground order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryDoc {
    pub ground: Vec<String>,
    pub convex: Vec<Vec<String>>,
}

impl GeometryDoc {
    pub fn from_geometry(g: &ConvexGeometry) -> GeometryDoc {
        GeometryDoc {
            ground: g.ground().names().to_vec(),
            convex: g
                .sets()
                .iter()
                .map(|&s| subset_names(g.ground(), s))
                .collect(),
        }
    }

    pub fn to_geometry(&self) -> Result<ConvexGeometry> {
        let ground = GroundSet::new(self.ground.clone()).map_err(core_err)?;
        let mut sets = Vec::with_capacity(self.convex.len());
        for member in &self.convex {
            sets.push(ground.subset_of_names(member).map_err(core_err)?);
        }
        ConvexGeometry::new(ground, sets).map_err(core_err)
    }
}

/// `{"ground": [...], "orderings": [["a","b","c"], ...]}`, best first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingsDoc {
    pub ground: Vec<String>,
    pub orderings: Vec<Vec<String>>,
}

impl OrderingsDoc {
    pub fn from_family(f: &OrderingFamily) -> OrderingsDoc {
        OrderingsDoc {
            ground: f.ground().names().to_vec(),
            orderings: f
                .orders()
                .iter()
                .map(|o| {
                    o.ranked()
                        .iter()
                        .map(|&e| f.ground().name(e).to_string())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_family(&self) -> Result<OrderingFamily> {
        let ground = GroundSet::new(self.ground.clone()).map_err(core_err)?;
        let mut orders = Vec::with_capacity(self.orderings.len());
        for names in &self.orderings {
            let mut ranked = Vec::with_capacity(names.len());
            for name in names {
                ranked.push(
                    ground
                        .index(name)
                        .ok_or_else(|| anyhow!("unknown element {name:?} in ordering"))?,
                );
            }
            orders.push(Ordering::new(ranked).map_err(core_err)?);
        }
        OrderingFamily::new(ground, orders).map_err(core_err)
    }
}

/// `{"dimension": 2, "points": {"a": ["-3","-3"]}, "Q": [["0","0"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDoc {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    pub points: BTreeMap<String, Vec<String>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<String>>,
}

impl EmbeddingDoc {
    pub fn from_embedding(e: &ShellingEmbedding) -> EmbeddingDoc {
        EmbeddingDoc::from_instance(e.instance())
    }

    pub fn from_instance(inst: &ShellingInstance) -> EmbeddingDoc {
        let ground = inst.ground();
        EmbeddingDoc {
            dimension: inst.dim(),
            ground: Some(ground.names().to_vec()),
            points: ground
                .names()
                .iter()
                .cloned()
                .zip(inst.points().iter().map(point_strings))
                .collect(),
            q: inst.q().iter().map(point_strings).collect(),
        }
    }

    pub fn element_names(&self) -> Vec<String> {
        match &self.ground {
            Some(names) => names.clone(),
            None => self.points.keys().cloned().collect(),
        }
    }

    pub fn to_instance(&self) -> Result<ShellingInstance> {
        let names = self.element_names();
        if self.points.len() != names.len() {
            bail!(
                "{} points for {} ground elements",
                self.points.len(),
                names.len()
            );
        }
        let ground = GroundSet::new(names.clone()).map_err(core_err)?;
        let mut pts = Vec::with_capacity(names.len());
        for name in &names {
            let coords = self
                .points
                .get(name)
                .ok_or_else(|| anyhow!("missing point for element {name:?}"))?;
            if coords.len() != self.dimension {
                bail!(
                    "point {name:?} has {} coordinates, expected {}",
                    coords.len(),
                    self.dimension
                );
            }
            pts.push(parse_point(coords)?);
        }
        let q = self
            .q
            .iter()
            .map(|c| parse_point(c))
            .collect::<Result<Vec<_>>>()?;
        ShellingInstance::new(ground, pts, q).map_err(core_err)
    }
}

/// `{"shapes": {"a": [["-1","0"],["1","0"]], ...}}` with hull vertices in
/// counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    pub shapes: BTreeMap<String, Vec<Vec<String>>>,
}

impl PolygonDoc {
    pub fn from_map(m: &PolygonMap) -> PolygonDoc {
        PolygonDoc {
            ground: Some(m.ground().names().to_vec()),
            shapes: m
                .ground()
                .names()
                .iter()
                .enumerate()
                .map(|(e, name)| {
                    let vertices = m.shape(e).vertices().iter().map(point_strings).collect();
                    (name.clone(), vertices)
                })
                .collect(),
        }
    }

    pub fn element_names(&self) -> Vec<String> {
        match &self.ground {
            Some(names) => names.clone(),
            None => self.shapes.keys().cloned().collect(),
        }
    }

    pub fn to_map(&self) -> Result<PolygonMap> {
        let names = self.element_names();
        if self.shapes.len() != names.len() {
            bail!(
                "{} shapes for {} ground elements",
                self.shapes.len(),
                names.len()
            );
        }
        let ground = GroundSet::new(names.clone()).map_err(core_err)?;
        let mut shapes = Vec::with_capacity(names.len());
        for name in &names {
            let vertices = self
                .shapes
                .get(name)
                .ok_or_else(|| anyhow!("missing shape for element {name:?}"))?;
            let pts = vertices
                .iter()
                .map(|v| parse_point(v))
                .collect::<Result<Vec<_>>>()?;
            shapes.push(Polygon::from_points(pts).map_err(core_err)?);
        }
        PolygonMap::new(ground, shapes).map_err(core_err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cgx_core::hull::rational;

    fn example_family() -> OrderingFamily {
        OrderingsDoc {
            ground: vec!["a".into(), "b".into(), "c".into()],
            orderings: vec![
                vec!["a".into(), "b".into(), "c".into()],
                vec!["a".into(), "c".into(), "b".into()],
            ],
        }
        .to_family()
        .unwrap()
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "-3", "27", "1/2", "-10/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_string(&r), s);
        }
        assert_eq!(parse_rational("4/2").unwrap(), parse_rational("2").unwrap());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn geometry_doc_round_trips() {
        let g = example_family().generate();
        let doc = GeometryDoc::from_geometry(&g);
        let json = serde_json::to_string(&doc).unwrap();
        let back: GeometryDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert!(back.to_geometry().unwrap().equals(&g));
    }

    #[test]
    fn geometry_doc_rejects_bad_families() {
        let missing_empty: GeometryDoc = serde_json::from_str(
            r#"{"ground": ["a"], "convex": [["a"]]}"#,
        )
        .unwrap();
        assert!(missing_empty.to_geometry().is_err());
        let unknown: GeometryDoc = serde_json::from_str(
            r#"{"ground": ["a"], "convex": [[], ["b"]]}"#,
        )
        .unwrap();
        assert!(unknown.to_geometry().is_err());
        let duplicate: GeometryDoc = serde_json::from_str(
            r#"{"ground": ["a"], "convex": [[], ["a"], ["a"]]}"#,
        )
        .unwrap();
        assert!(duplicate.to_geometry().is_err());
    }

    #[test]
    fn orderings_doc_round_trips() {
        let f = example_family();
        let doc = OrderingsDoc::from_family(&f);
        let back: OrderingsDoc =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        let g = back.to_family().unwrap().generate();
        assert!(g.equals(&f.generate()));
    }

    #[test]
    fn embedding_doc_round_trips_and_orders_elements() {
        let e = ShellingEmbedding::new(&example_family(), None).unwrap();
        let doc = EmbeddingDoc::from_embedding(&e);
        assert_eq!(doc.dimension, 2);
        assert_eq!(doc.points["a"], vec!["-3", "-3"]);
        assert_eq!(doc.q[1], vec!["27", "0"]);
        let back: EmbeddingDoc =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        let inst = back.to_instance().unwrap();
        assert_eq!(inst.points(), e.points());
        assert_eq!(inst.q(), e.q());
    }

    #[test]
    fn embedding_doc_accepts_missing_ground_in_key_order() {
        let json = r#"{
            "dimension": 1,
            "points": {"b": ["-4"], "a": ["-2"]},
            "Q": [["0"], ["4"]]
        }"#;
        let doc: EmbeddingDoc = serde_json::from_str(json).unwrap();
        let inst = doc.to_instance().unwrap();
        assert_eq!(inst.ground().names(), ["a", "b"]);
        assert_eq!(inst.points()[0], RationalPoint::from_integers(&[-2]));
    }

    #[test]
    fn polygon_doc_round_trips() {
        let g = example_family().generate();
        let m = cgx_core::embed_polygons(&g, 12).unwrap();
        let doc = PolygonDoc::from_map(&m);
        let back: PolygonDoc =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        let again = back.to_map().unwrap();
        assert!(cgx_core::verify_polygons(&again, &g).unwrap().pass());
    }

    #[test]
    fn rational_coordinates_survive_documents() {
        let p = RationalPoint::new(vec![rational(1, 3), rational(-7, 2)]);
        let strings = point_strings(&p);
        assert_eq!(strings, vec!["1/3", "-7/2"]);
        assert_eq!(parse_point(&strings).unwrap(), p);
    }
}
