use std::fmt;

use serde::{Deserialize, Serialize};

use super::EquilibriaError;
use crate::ratcore::{RatVector, Rational};

/// Vertex vectors of a `d`-dimensional polytope relative to its centre of
/// mass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    vertices: Vec<RatVector>,
}

impl PointConfig {
    /// Requires `V ≥ d+1` vertices, each of dimension `d`.
    pub fn new(d: usize, vertices: Vec<RatVector>) -> Result<Self, EquilibriaError> {
        check_points(d, &vertices)?;
        Ok(PointConfig { d, vertices })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    /// Distinct squared norms, the genericity the equilibrium counts assume.
    pub fn is_generic(&self) -> bool {
        distinct_norms(&self.vertices)
    }

    /// Index of the vertex with the largest `|r_i|²` (first one on ties).
    pub fn farthest(&self) -> usize {
        let norms: Vec<Rational> = self.vertices.iter().map(RatVector::norm_sq).collect();
        let mut best = 0;
        for (i, n) in norms.iter().enumerate() {
            if *n > norms[best] {
                best = i;
            }
        }
        best
    }
}

/// Face vectors `q_i`: from the centre of mass to its orthogonal projection
/// on each face plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceConfig {
    d: usize,
    faces: Vec<RatVector>,
}

impl FaceConfig {
    pub fn new(d: usize, faces: Vec<RatVector>) -> Result<Self, EquilibriaError> {
        check_points(d, &faces)?;
        if let Some(i) = faces.iter().position(RatVector::is_zero) {
            return Err(EquilibriaError::ZeroFaceVector(i));
        }
        Ok(FaceConfig { d, faces })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[RatVector] {
        &self.faces
    }

    pub fn is_generic(&self) -> bool {
        distinct_norms(&self.faces)
    }
}

fn check_points(d: usize, points: &[RatVector]) -> Result<(), EquilibriaError> {
    if points.len() < d + 1 {
        return Err(EquilibriaError::TooFewPoints { min: d + 1, found: points.len() });
    }
    if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
        return Err(EquilibriaError::WrongDimension { index, expected: d, found: p.len() });
    }
    Ok(())
}

fn distinct_norms(points: &[RatVector]) -> bool {
    let mut norms: Vec<Rational> = points.iter().map(RatVector::norm_sq).collect();
    norms.sort();
    norms.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Vertices,
    Faces,
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigKind::Vertices => "vertices",
            ConfigKind::Faces => "faces",
        })
    }
}

/// On-disk form of a vertex or face set:
/// `{ "d": 3, "kind": "vertices", "coords": [["1/2", "0", "-1"], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub d: usize,
    pub kind: ConfigKind,
    pub coords: Vec<RatVector>,
}

impl ConfigDocument {
    pub fn from_json(text: &str) -> Result<Self, EquilibriaError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config documents always serialize")
    }

    pub fn from_points(cfg: &PointConfig) -> Self {
        ConfigDocument { d: cfg.dim(), kind: ConfigKind::Vertices, coords: cfg.vertices().to_vec() }
    }

    pub fn from_faces(cfg: &FaceConfig) -> Self {
        ConfigDocument { d: cfg.dim(), kind: ConfigKind::Faces, coords: cfg.faces().to_vec() }
    }

    pub fn into_points(self) -> Result<PointConfig, EquilibriaError> {
        self.expect_kind(ConfigKind::Vertices)?;
        PointConfig::new(self.d, self.coords)
    }

    pub fn into_faces(self) -> Result<FaceConfig, EquilibriaError> {
        self.expect_kind(ConfigKind::Faces)?;
        FaceConfig::new(self.d, self.coords)
    }

    fn expect_kind(&self, expected: ConfigKind) -> Result<(), EquilibriaError> {
        if self.kind != expected {
            return Err(EquilibriaError::KindMismatch { expected, found: self.kind });
        }
        Ok(())
    }
}
