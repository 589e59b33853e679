//! Property spaces: points, domains and the default schema.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::ConceptError;
use crate::lp;

/// Tolerance for domain membership tests.
pub const DOMAIN_TOLERANCE: f64 = 1e-9;

/// A point in one property's coordinate space. Coordinates are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    /// Wraps finite coordinates.
    pub fn new(coords: Vec<f64>) -> Result<Self, ConceptError> {
        if coords.is_empty() || coords.iter().any(|c| !c.is_finite()) {
            return Err(ConceptError::BadPoint(coords.len()));
        }
        Ok(Point(coords))
    }

    /// A one-dimensional point.
    pub fn scalar(value: f64) -> Result<Self, ConceptError> {
        Point::new(vec![value])
    }

    /// The coordinates.
    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// L1 (taxicab) distance.
    pub fn l1(&self, other: &Point) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| libm::fabs(a - b)).sum()
    }
}

impl Eq for Point {}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.0.as_slice() {
            return write!(f, "{x}");
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A named corner of a polytope domain ("Bitter" for taste).
#[derive(Debug, Clone, PartialEq)]
pub struct NamedVertex {
    /// Vertex name.
    pub name: String,
    /// Vertex coordinates.
    pub point: Point,
}

/// The region a property's values live in.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    /// An axis-aligned box, e.g. `[0,1]` or the RGB cube `[0,1]^3`.
    Box {
        /// Lower corner.
        lower: Vec<f64>,
        /// Upper corner.
        upper: Vec<f64>,
    },
    /// The convex hull of named vertices, e.g. the taste tetrahedron.
    Polytope {
        /// The vertices.
        vertices: Vec<NamedVertex>,
    },
}

impl Domain {
    /// The unit cube `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Self {
        Domain::Box {
            lower: vec![0.0; dim],
            upper: vec![1.0; dim],
        }
    }

    /// Number of coordinates.
    pub fn dimension(&self) -> usize {
        match self {
            Domain::Box { lower, .. } => lower.len(),
            Domain::Polytope { vertices } => vertices.first().map_or(0, |v| v.point.dim()),
        }
    }

    /// Generators whose hull is the whole domain.
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Domain::Box { lower, upper } => {
                let d = lower.len();
                (0..1usize << d)
                    .map(|mask| {
                        Point(
                            (0..d)
                                .map(|i| {
                                    if mask >> (d - 1 - i) & 1 == 1 {
                                        upper[i]
                                    } else {
                                        lower[i]
                                    }
                                })
                                .collect(),
                        )
                    })
                    .collect()
            }
            Domain::Polytope { vertices } => vertices.iter().map(|v| v.point.clone()).collect(),
        }
    }

    /// A named vertex of a polytope domain (case-insensitive).
    pub fn vertex(&self, name: &str) -> Option<&Point> {
        match self {
            Domain::Box { .. } => None,
            Domain::Polytope { vertices } => vertices
                .iter()
                .find(|v| v.name.eq_ignore_ascii_case(name))
                .map(|v| &v.point),
        }
    }

    /// Whether `point` lies in the domain, up to [`DOMAIN_TOLERANCE`].
    pub fn contains(&self, point: &Point) -> bool {
        if point.dim() != self.dimension() {
            return false;
        }
        match self {
            Domain::Box { lower, upper } => point
                .coords()
                .iter()
                .zip(lower.iter().zip(upper))
                .all(|(x, (lo, hi))| *x >= lo - DOMAIN_TOLERANCE && *x <= hi + DOMAIN_TOLERANCE),
            Domain::Polytope { vertices } => {
                let gens: Vec<Vec<f64>> = vertices.iter().map(|v| v.point.0.clone()).collect();
                lp::l1_distance_to_hull(point.coords(), &gens).is_some_and(|d| d <= DOMAIN_TOLERANCE)
            }
        }
    }
}

/// A named property with its domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Property {
    /// Property name ("colour").
    pub name: String,
    /// Where its values live.
    pub domain: Domain,
}

impl Property {
    /// Number of coordinates.
    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }
}

/// The ordered list of properties a concept has one region for.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertySchema {
    properties: Vec<Property>,
}

/// The four taste vertices: Salt, Sour, Bitter, Sweet.
pub fn taste_vertices() -> Vec<NamedVertex> {
    let half_root3 = libm::sqrt(3.0) / 2.0;
    let raw: [(&str, [f64; 3]); 4] = [
        ("Salt", [1.0, 0.0, 0.0]),
        ("Sour", [-0.5, -half_root3, 0.0]),
        ("Bitter", [-0.5, half_root3, 0.0]),
        ("Sweet", [0.0, 0.0, libm::sqrt(2.0)]),
    ];
    raw.iter()
        .map(|(name, p)| NamedVertex {
            name: name.to_string(),
            point: Point(p.to_vec()),
        })
        .collect()
}

impl PropertySchema {
    /// Builds a schema; property names must be distinct and domains non-empty.
    pub fn new(properties: Vec<Property>) -> Result<Self, ConceptError> {
        for (i, p) in properties.iter().enumerate() {
            if p.dimension() == 0 {
                return Err(ConceptError::BadPoint(0));
            }
            if properties[..i].iter().any(|q| q.name.eq_ignore_ascii_case(&p.name)) {
                return Err(ConceptError::DuplicateProperty(p.name.clone()));
            }
        }
        Ok(PropertySchema { properties })
    }

    /// The default schema: eleven properties over fifteen coordinates.
    ///
    /// | property | coordinates | domain |
    /// |---|---|---|
    /// | dimension, age, value, speed | 1 each | `[0,1]` |
    /// | colour | 3 | RGB cube `[0,1]^3` |
    /// | intensity | 1 | `[0,1]` |
    /// | taste | 3 | tetrahedron on Salt, Sour, Bitter, Sweet |
    /// | temperature, density, mass, texture | 1 each | `[0,1]` |
    pub fn standard() -> Self {
        let unit = |name: &str| Property {
            name: name.to_string(),
            domain: Domain::unit_cube(1),
        };
        let properties = vec![
            unit("dimension"),
            unit("age"),
            unit("value"),
            unit("speed"),
            Property {
                name: "colour".to_string(),
                domain: Domain::unit_cube(3),
            },
            unit("intensity"),
            Property {
                name: "taste".to_string(),
                domain: Domain::Polytope {
                    vertices: taste_vertices(),
                },
            },
            unit("temperature"),
            unit("density"),
            unit("mass"),
            unit("texture"),
        ];
        PropertySchema { properties }
    }

    /// The properties in order.
    pub fn properties(&self) -> &[Property] {
        &self.properties
    }

    /// Property names in order.
    pub fn names(&self) -> Vec<&str> {
        self.properties.iter().map(|p| p.name.as_str()).collect()
    }

    /// Position of a property (case-insensitive).
    pub fn index(&self, name: &str) -> Option<usize> {
        self.properties.iter().position(|p| p.name.eq_ignore_ascii_case(name))
    }

    /// A property by name.
    pub fn get(&self, name: &str) -> Option<&Property> {
        self.index(name).map(|i| &self.properties[i])
    }

    /// Sum of the properties' coordinate counts.
    pub fn total_dimension(&self) -> usize {
        self.properties.iter().map(Property::dimension).sum()
    }
}

impl Default for PropertySchema {
    fn default() -> Self {
        PropertySchema::standard()
    }
}
