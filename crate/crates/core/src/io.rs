//! Instance and matching file formats.
//!
//! Instances are JSON `{"points": [[x, y], ...]}` or CSV lines `x,y`.
//! Matchings are JSON objects with a fixed key order.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{ConvexPointSet, GeometryError, Point};
use crate::solver::{SolveReport, SolveStructure};
use crate::structure::{CascadeDecomposition, Matching};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("line {line}: expected two numeric fields")]
    BadRecord { line: usize },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub points: Vec<[f64; 2]>,
}

impl InstanceFile {
    pub fn from_points(points: &[Point]) -> Self {
        Self {
            points: points.iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.points.iter().map(|&[x, y]| Point::new(x, y)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureTag {
    #[serde(rename = "one-cascade")]
    OneCascade,
    #[serde(rename = "three-cascade")]
    ThreeCascade,
}

impl From<SolveStructure> for StructureTag {
    fn from(s: SolveStructure) -> Self {
        match s {
            SolveStructure::OneCascadeOrLess => StructureTag::OneCascade,
            SolveStructure::ThreeCascade => StructureTag::ThreeCascade,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchingFile {
    pub n: usize,
    pub value: f64,
    pub pairs: Vec<[usize; 2]>,
    pub structure: StructureTag,
    pub cascades: usize,
    pub candidates: usize,
}

impl MatchingFile {
    pub fn from_report(r: &SolveReport) -> Self {
        Self {
            n: r.matching.n(),
            value: r.value,
            pairs: pairs_of(&r.matching),
            structure: r.structure.into(),
            cascades: r.cascades,
            candidates: r.candidate_count,
        }
    }

    /// For matchings not produced by the solver: the structure tag is derived
    /// from the cascade count (anything above one is tagged three-cascade) and
    /// `candidates` is 0.
    pub fn from_matching(m: &Matching, value: f64) -> Self {
        let cascades = CascadeDecomposition::of(m)
            .map(|c| c.cascade_count())
            .unwrap_or(0);
        Self {
            n: m.n(),
            value,
            pairs: pairs_of(m),
            structure: if cascades <= 1 {
                StructureTag::OneCascade
            } else {
                StructureTag::ThreeCascade
            },
            cascades,
            candidates: 0,
        }
    }

    pub fn matching(&self) -> Matching {
        Matching::new(self.n, self.pairs.iter().map(|&[a, b]| (a, b)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matching serializes")
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.trim().is_empty() {
            return Err(FormatError::Empty);
        }
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, FormatError> {
        Self::parse(&read_to_string(path)?)
    }
}

fn pairs_of(m: &Matching) -> Vec<[usize; 2]> {
    m.pairs().iter().map(|&(a, b)| [a, b]).collect()
}

fn read_to_string(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses instance text; JSON if it starts with `{`, CSV otherwise.
/// CSV accepts `#` comments and an optional non-numeric header line.
pub fn parse_points(text: &str) -> Result<Vec<Point>, FormatError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(FormatError::Empty);
    }
    if trimmed.starts_with('{') {
        let f: InstanceFile = serde_json::from_str(text)?;
        return Ok(f.to_points());
    }

    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut pts = Vec::new();
    for (idx, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let line = rec.position().map_or(idx + 1, |p| p.line() as usize);
        let parsed = match (rec.get(0), rec.get(1), rec.len()) {
            (Some(x), Some(y), 2) => x.parse::<f64>().ok().zip(y.parse::<f64>().ok()),
            _ => None,
        };
        match parsed {
            Some((x, y)) => pts.push(Point::new(x, y)),
            None if idx == 0 => continue,
            None => return Err(FormatError::BadRecord { line }),
        }
    }
    if pts.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(pts)
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, FormatError> {
    parse_points(&read_to_string(path)?)
}

/// Reorders points counterclockwise by angle around their centroid, starting
/// from the smallest angle.
pub fn sort_ccw(points: &mut [Point]) {
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / n;
    points.sort_by(|a, b| {
        let ta = (a.y - cy).atan2(a.x - cx);
        let tb = (b.y - cy).atan2(b.x - cx);
        ta.total_cmp(&tb)
    });
}

/// Failure while loading an instance: either the file could not be parsed or
/// the points violate the convex-position requirements.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] FormatError),
    #[error(transparent)]
    Invalid(#[from] GeometryError),
}

pub fn load_instance(path: &Path, sort: bool) -> Result<ConvexPointSet, LoadError> {
    let mut pts = read_points(path)?;
    if sort {
        sort_ccw(&mut pts);
    }
    Ok(ConvexPointSet::new(pts)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json_and_csv() {
        let j = parse_points(r#"{"points": [[0, 0], [1, 0], [1, 1], [0, 1]]}"#).unwrap();
        let c = parse_points("x,y\n0,0\n1,0\n# comment\n1,1\n0, 1\n").unwrap();
        assert_eq!(j, c);
        assert_eq!(j.len(), 4);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_points(""), Err(FormatError::Empty)));
        assert!(matches!(parse_points("{"), Err(FormatError::Json(_))));
        assert!(matches!(
            parse_points("0,0\n1,zz\n"),
            Err(FormatError::BadRecord { .. })
        ));
        assert!(matches!(MatchingFile::parse("  \n"), Err(FormatError::Empty)));
    }

    #[test]
    fn matching_key_order() {
        let m = Matching::new(4, [(2, 3), (0, 1)]);
        let f = MatchingFile::from_matching(&m, 1.0);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"n":4,"value":1.0,"pairs":[[0,1],[2,3]],"structure":"one-cascade","cascades":0,"candidates":0}"#
        );
        assert_eq!(MatchingFile::parse(&s).unwrap(), f);
    }

    #[test]
    fn sorting_recovers_ccw() {
        let mut pts = vec![
            Point::new(1.0, 1.0),
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 0.0),
        ];
        sort_ccw(&mut pts);
        assert!(ConvexPointSet::new(pts).is_ok());
    }
}
