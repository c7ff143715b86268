//! Wire formats: images, maps, homotopies, functions, and partition files
//! as JSON documents, a plain-text image format, and JSON renderings of
//! reports. All output is deterministic for fixed inputs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{LatticeFunction, PartitionCandidate};
use crate::error::{Error, Result};
use crate::lattice::{Adjacency, DigitalImage, LatticePoint, SimplexCensus};
use crate::manifold::ManifoldReport;
use crate::morphisms::{DigitalMap, HomotopyTable};

/// `{"dim": d, "adjacency": l, "points": [[c1, ..., cd], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImageFile {
    pub dim: usize,
    pub adjacency: usize,
    pub points: Vec<Vec<i64>>,
}

impl ImageFile {
    pub fn from_image(image: &DigitalImage) -> Self {
        Self {
            dim: image.dim(),
            adjacency: image.adjacency().l(),
            points: image.points().iter().map(|p| p.coords().to_vec()).collect(),
        }
    }

    pub fn into_image(self) -> Result<DigitalImage> {
        let adjacency = Adjacency::new(self.adjacency, self.dim)?;
        DigitalImage::new(self.points.into_iter().map(LatticePoint::new), adjacency)
    }
}

/// `{"source": image, "target": image, "pairs": [[[p...], [q...]], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub source: ImageFile,
    pub target: ImageFile,
    pub pairs: Vec<(Vec<i64>, Vec<i64>)>,
}

impl MapFile {
    pub fn from_map(map: &DigitalMap) -> Self {
        Self {
            source: ImageFile::from_image(map.source()),
            target: ImageFile::from_image(map.target()),
            pairs: map
                .table()
                .iter()
                .map(|(p, q)| (p.coords().to_vec(), q.coords().to_vec()))
                .collect(),
        }
    }

    pub fn into_map(self) -> Result<DigitalMap> {
        let source = self.source.into_image()?;
        let target = self.target.into_image()?;
        let table: BTreeMap<LatticePoint, LatticePoint> = self
            .pairs
            .into_iter()
            .map(|(p, q)| (LatticePoint::new(p), LatticePoint::new(q)))
            .collect();
        DigitalMap::new(source, target, table)
    }
}

/// `{"steps": j, "triples": [[[p...], t, [q...]], ...]}`; the source and
/// target come from context.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomotopyFile {
    pub steps: i64,
    pub triples: Vec<(Vec<i64>, i64, Vec<i64>)>,
}

impl HomotopyFile {
    pub fn into_table(self, source: DigitalImage, target: DigitalImage) -> Result<HomotopyTable> {
        let table = self
            .triples
            .into_iter()
            .map(|(p, t, q)| ((LatticePoint::new(p), t), LatticePoint::new(q)))
            .collect();
        HomotopyTable::new(source, target, self.steps, table)
    }
}

/// `{"image": image, "values": [[[p...], v], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctionFile {
    pub image: ImageFile,
    pub values: Vec<(Vec<i64>, i64)>,
}

impl FunctionFile {
    pub fn from_function(f: &LatticeFunction) -> Self {
        Self {
            image: ImageFile::from_image(f.domain()),
            values: f
                .values()
                .iter()
                .map(|(p, &v)| (p.coords().to_vec(), v))
                .collect(),
        }
    }

    pub fn into_function(self) -> Result<LatticeFunction> {
        let domain = self.image.into_image()?;
        let values = self
            .values
            .into_iter()
            .map(|(p, v)| (LatticePoint::new(p), v))
            .collect();
        LatticeFunction::new(domain, values)
    }
}

/// `{"target": c, "functions": [function, ...], "cover": [[[p...], ...], ...]?}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionFile {
    pub target: i64,
    pub functions: Vec<FunctionFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<Vec<Vec<i64>>>>,
}

impl PartitionFile {
    pub fn into_candidate(self) -> Result<PartitionCandidate> {
        let functions = self
            .functions
            .into_iter()
            .map(FunctionFile::into_function)
            .collect::<Result<Vec<_>>>()?;
        let cover = self.cover.map(|sets| {
            sets.into_iter()
                .map(|set| {
                    set.into_iter()
                        .map(LatticePoint::new)
                        .collect::<BTreeSet<_>>()
                })
                .collect::<Vec<_>>()
        });
        PartitionCandidate::new(functions, self.target, cover)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_image_json(text: &str) -> Result<DigitalImage> {
    parse::<ImageFile>(text)?.into_image()
}

pub fn parse_map_json(text: &str) -> Result<DigitalMap> {
    parse::<MapFile>(text)?.into_map()
}

pub fn parse_homotopy_json(text: &str) -> Result<HomotopyFile> {
    parse(text)
}

pub fn parse_function_json(text: &str) -> Result<LatticeFunction> {
    parse::<FunctionFile>(text)?.into_function()
}

pub fn parse_partition_json(text: &str) -> Result<PartitionCandidate> {
    parse::<PartitionFile>(text)?.into_candidate()
}

pub fn image_to_json(image: &DigitalImage) -> String {
    serde_json::to_string_pretty(&ImageFile::from_image(image)).expect("image serializes")
}

/// Plain-text image format: one point per line, whitespace-separated
/// integer coordinates; the adjacency is supplied out of band. Blank lines
/// and `#` comment lines are skipped.
pub fn parse_image_text(text: &str, adjacency: Adjacency) -> Result<DigitalImage> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad integer {tok:?}", lineno + 1)))
            })
            .collect::<Result<Vec<i64>>>()?;
        points.push(LatticePoint::new(coords));
    }
    DigitalImage::new(points, adjacency)
}

pub fn points_value(points: &BTreeSet<LatticePoint>) -> Value {
    Value::Array(points.iter().map(point_value).collect())
}

pub fn point_value(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(|&c| Value::from(c)).collect())
}

/// The report schema: verdict, dimension, model adjacency, boundary mode,
/// the decomposition, and per-point failures. Rim fields appear only when a
/// rim was exempted.
pub fn manifold_report_value(report: &ManifoldReport) -> Value {
    let mut value = json!({
        "verdict": report.verdict,
        "dimension": report.dimension,
        "model_adjacency": report.model_adjacency,
        "with_boundary": report.with_boundary,
        "interior": points_value(&report.interior),
        "boundary": points_value(&report.boundary),
        "failures": report
            .failures
            .iter()
            .map(|f| json!({
                "point": point_value(&f.point),
                "neighborhood_size": f.neighborhood_size,
            }))
            .collect::<Vec<Value>>(),
    });
    if !report.exempt.is_empty() {
        let object = value.as_object_mut().expect("report is an object");
        object.insert("rim".into(), points_value(&report.exempt));
        object.insert(
            "rim_unclassified".into(),
            points_value(&report.exempt_unmatched),
        );
    }
    value
}

pub fn census_value(census: &SimplexCensus) -> Value {
    json!({
        "census": census.counts(),
        "euler_characteristic": census.euler(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{gen_interval, gen_sphere};
    use crate::manifold::manifold_report;

    #[test]
    fn image_round_trip() {
        let sphere = gen_sphere(1, 1).unwrap();
        let text = image_to_json(&sphere);
        let back = parse_image_json(&text).unwrap();
        assert_eq!(back, sphere);
    }

    #[test]
    fn duplicate_points_are_rejected() {
        let err = parse_image_json(r#"{"dim": 1, "adjacency": 1, "points": [[0], [0]]}"#);
        assert!(err.is_err());
    }

    #[test]
    fn malformed_json_reports_a_parse_error() {
        match parse_image_json("{") {
            Err(Error::Parse(_)) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn text_format_skips_blanks_and_comments() {
        let text = "# axis points\n0 0\n1 0\n\n2 0\n";
        let image = parse_image_text(text, Adjacency::new(1, 2).unwrap()).unwrap();
        assert_eq!(image.len(), 3);
        assert!(parse_image_text("0 zero", Adjacency::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn map_round_trip() {
        let interval = gen_interval(0, 2).unwrap();
        let map = DigitalMap::identity(&interval);
        let file = MapFile::from_map(&map);
        let text = serde_json::to_string(&file).unwrap();
        let back = parse_map_json(&text).unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn report_json_is_deterministic_and_schema_shaped() {
        let interval = gen_interval(0, 4).unwrap();
        let report = manifold_report(&interval, 1, true, None).unwrap();
        let a = manifold_report_value(&report).to_string();
        let b =
            manifold_report_value(&manifold_report(&interval, 1, true, None).unwrap()).to_string();
        assert_eq!(a, b);
        let value = manifold_report_value(&report);
        for key in [
            "verdict",
            "dimension",
            "model_adjacency",
            "with_boundary",
            "interior",
            "boundary",
            "failures",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert!(value.get("rim").is_none());
    }
}
