use serde::{Deserialize, Serialize};
use std::fmt;

use super::SurfaceError;

/// Raw surface description as read from a descriptor file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDescriptor {
    pub genus: u32,
    pub boundary: Vec<u32>,
    pub punctures: u32,
}

impl SurfaceDescriptor {
    pub fn disk(boundary_points: u32, punctures: u32) -> Self {
        SurfaceDescriptor {
            genus: 0,
            boundary: vec![boundary_points],
            punctures,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Marked point identifier. Boundary points come first, component by
/// component, followed by punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PointId(pub u32);

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Boundary { component: usize, index: u32 },
    Puncture(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SurfaceDescriptor", try_from = "SurfaceDescriptor")]
pub struct MarkedSurface {
    genus: u32,
    boundary: Vec<u32>,
    punctures: u32,
}

impl From<MarkedSurface> for SurfaceDescriptor {
    fn from(s: MarkedSurface) -> Self {
        SurfaceDescriptor {
            genus: s.genus,
            boundary: s.boundary,
            punctures: s.punctures,
        }
    }
}

impl TryFrom<SurfaceDescriptor> for MarkedSurface {
    type Error = SurfaceError;
    fn try_from(d: SurfaceDescriptor) -> Result<Self, SurfaceError> {
        validate_surface(&d)
    }
}

/// Checks a descriptor against the excluded small cases.
pub fn validate_surface(d: &SurfaceDescriptor) -> Result<MarkedSurface, SurfaceError> {
    if d.boundary.is_empty() {
        return Err(SurfaceError::EmptyBoundary);
    }
    if let Some(i) = d.boundary.iter().position(|&m| m == 0) {
        return Err(SurfaceError::BoundaryComponentWithoutMarkedPoint(i));
    }
    if d.genus == 0 && d.boundary.len() == 1 {
        let m = d.boundary[0];
        let forbidden = match (m, d.punctures) {
            (1, 0) | (1, 1) => Some("monogon with at most one puncture"),
            (2, 0) => Some("unpunctured digon"),
            (3, 0) => Some("unpunctured triangle"),
            _ => None,
        };
        if let Some(what) = forbidden {
            return Err(SurfaceError::ForbiddenSurface(what.to_string()));
        }
    }
    let s = MarkedSurface {
        genus: d.genus,
        boundary: d.boundary.clone(),
        punctures: d.punctures,
    };
    if s.rank_i64() < 1 {
        return Err(SurfaceError::ForbiddenSurface(format!(
            "triangulation would have {} arcs",
            s.rank_i64()
        )));
    }
    Ok(s)
}

impl MarkedSurface {
    pub fn disk(boundary_points: u32, punctures: u32) -> Result<Self, SurfaceError> {
        validate_surface(&SurfaceDescriptor::disk(boundary_points, punctures))
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn boundary_point_count(&self) -> u32 {
        self.boundary.iter().sum()
    }

    pub fn point_count(&self) -> u32 {
        self.boundary_point_count() + self.punctures
    }

    fn rank_i64(&self) -> i64 {
        6 * self.genus as i64
            + 3 * self.boundary.len() as i64
            + 3 * self.punctures as i64
            + self.boundary_point_count() as i64
            - 6
    }

    /// Number of arcs in any ideal triangulation.
    pub fn rank(&self) -> usize {
        self.rank_i64() as usize
    }

    /// Genus 0, one boundary component, at most two punctures.
    pub fn is_disk_family(&self) -> bool {
        self.genus == 0 && self.boundary.len() == 1 && self.punctures <= 2
    }

    pub fn boundary_point(&self, component: usize, index: u32) -> PointId {
        let offset: u32 = self.boundary[..component].iter().sum();
        PointId(offset + index % self.boundary[component])
    }

    pub fn puncture(&self, index: u32) -> PointId {
        PointId(self.boundary_point_count() + index)
    }

    pub fn kind(&self, p: PointId) -> PointKind {
        let mut rest = p.0;
        for (component, &m) in self.boundary.iter().enumerate() {
            if rest < m {
                return PointKind::Boundary {
                    component,
                    index: rest,
                };
            }
            rest -= m;
        }
        PointKind::Puncture(rest)
    }

    pub fn is_puncture(&self, p: PointId) -> bool {
        matches!(self.kind(p), PointKind::Puncture(_))
    }

    pub fn puncture_ids(&self) -> impl Iterator<Item = PointId> + '_ {
        (0..self.punctures).map(|i| self.puncture(i))
    }

    pub fn descriptor(&self) -> SurfaceDescriptor {
        self.clone().into()
    }
}

impl fmt::Display for MarkedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "genus {} boundary {:?} punctures {}",
            self.genus, self.boundary, self.punctures
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_cases() {
        for (m, p) in [(1, 0), (1, 1), (2, 0), (3, 0)] {
            assert!(matches!(
                MarkedSurface::disk(m, p),
                Err(SurfaceError::ForbiddenSurface(_))
            ));
        }
        assert!(matches!(
            validate_surface(&SurfaceDescriptor {
                genus: 1,
                boundary: vec![],
                punctures: 0
            }),
            Err(SurfaceError::EmptyBoundary)
        ));
        assert!(matches!(
            validate_surface(&SurfaceDescriptor {
                genus: 0,
                boundary: vec![2, 0],
                punctures: 0
            }),
            Err(SurfaceError::BoundaryComponentWithoutMarkedPoint(1))
        ));
    }

    #[test]
    fn ranks() {
        assert_eq!(MarkedSurface::disk(4, 1).unwrap().rank(), 4);
        assert_eq!(MarkedSurface::disk(6, 0).unwrap().rank(), 3);
        assert_eq!(MarkedSurface::disk(3, 1).unwrap().rank(), 3);
        assert_eq!(MarkedSurface::disk(1, 2).unwrap().rank(), 4);
        let annulus = validate_surface(&SurfaceDescriptor {
            genus: 0,
            boundary: vec![2, 2],
            punctures: 0,
        })
        .unwrap();
        assert_eq!(annulus.rank(), 4);
    }

    #[test]
    fn point_kinds() {
        let s = validate_surface(&SurfaceDescriptor {
            genus: 0,
            boundary: vec![2, 3],
            punctures: 2,
        })
        .unwrap();
        assert_eq!(
            s.kind(PointId(3)),
            PointKind::Boundary {
                component: 1,
                index: 1
            }
        );
        assert_eq!(s.kind(PointId(6)), PointKind::Puncture(1));
        assert_eq!(s.puncture(0), PointId(5));
        assert_eq!(s.boundary_point(1, 3), PointId(2));
    }

    #[test]
    fn descriptor_json() {
        let d =
            SurfaceDescriptor::from_json(r#"{"genus":0,"boundary":[4],"punctures":1}"#).unwrap();
        let s = validate_surface(&d).unwrap();
        let back: MarkedSurface =
            serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(s, back);
    }
}
