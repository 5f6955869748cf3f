//! Exact rational 2D convex geometry for seminorm balls and their duals.
//!
//! The ball of a norm-curve seminorm is a centrally symmetric convex polygon
//! whose vertices lie on the boundary-slope rays; its dual Newton polygon is
//! the zonotope spanned by one integer segment per active slope. Everything
//! is computed in exact rational arithmetic; no coordinate ever passes
//! through floating point.

mod svg;

pub use svg::write_svg;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::peripheral::{PeripheralClass, Slope};
use crate::seminorm::{ball_box, eval_unchecked, SeminormError, SlopeSystem};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Seminorm(#[from] SeminormError),
    #[error("ball of an r-curve seminorm is an infinite strip along {0}, not a polygon")]
    RCurveBall(Slope),
    #[error("radius {0} is invalid: norm ball radii are positive even integers")]
    InvalidRadius(i64),
    #[error("bound {0} is invalid: must be positive")]
    InvalidBound(i64),
    #[error("failed to write {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
}

/// A point with exact rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: Rational64,
    pub y: Rational64,
}

impl RationalPoint {
    pub fn new(x: Rational64, y: Rational64) -> RationalPoint {
        RationalPoint { x, y }
    }

    fn neg(&self) -> RationalPoint {
        RationalPoint::new(-self.x, -self.y)
    }
}

impl std::fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(serializer)
    }
}

/// The ball of a given radius in a norm-curve seminorm: a centrally
/// symmetric convex polygon with one vertex pair per active boundary slope,
/// listed counterclockwise from the positive x-axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormBallPolygon {
    pub radius: i64,
    pub vertices: Vec<RationalPoint>,
}

/// A convex polygon with integer vertices, counterclockwise, translated so
/// that the bounding box touches the axes (min x = 0, min y = 0), starting
/// at the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolygon {
    pub vertices: Vec<(i64, i64)>,
}

impl LatticePolygon {
    /// Width of the bounding box; equals the meridian norm of the seminorm
    /// the polygon is dual to.
    pub fn x_width(&self) -> i64 {
        self.vertices.iter().map(|v| v.0).max().unwrap_or(0)
    }

    /// Height of the bounding box; equals the longitude norm.
    pub fn y_height(&self) -> i64 {
        self.vertices.iter().map(|v| v.1).max().unwrap_or(0)
    }

    /// Edge vectors in boundary order (wrapping around).
    pub fn edge_vectors(&self) -> Vec<(i64, i64)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| {
                let (x0, y0) = self.vertices[i];
                let (x1, y1) = self.vertices[(i + 1) % n];
                (x1 - x0, y1 - y0)
            })
            .collect()
    }

    /// Distinct slopes `dy/dx` of the edges, in slope order.
    pub fn edge_slopes(&self) -> Vec<Slope> {
        let mut slopes: Vec<Slope> = self
            .edge_vectors()
            .iter()
            .filter(|&&(dx, dy)| (dx, dy) != (0, 0))
            .map(|&(dx, dy)| Slope::new(dy, dx).expect("nonzero edge vector"))
            .collect();
        slopes.sort();
        slopes.dedup();
        slopes
    }
}

/// Construct the ball of the given radius in the seminorm defined by
/// `coeffs` over `sys`. The vertices are exactly `+-t_j (c_j, d_j)` where
/// `t_j` solves `||t (c_j, d_j)|| = radius` for each active slope `c_j/d_j`.
///
/// Rejects r-curve vectors: with a single active slope the "ball" is an
/// infinite strip.
pub fn norm_ball(
    sys: &SlopeSystem,
    coeffs: &[i64],
    radius: i64,
) -> Result<NormBallPolygon, GeometryError> {
    sys.check_coeffs(coeffs)?;
    if radius <= 0 || radius % 2 != 0 {
        return Err(GeometryError::InvalidRadius(radius));
    }
    let active = sys.active_indices(coeffs);
    match active[..] {
        [] => return Err(SeminormError::AllZeroCoefficients.into()),
        [j] => return Err(GeometryError::RCurveBall(sys.slopes()[j])),
        _ => {}
    }

    let mut vertices = Vec::with_capacity(2 * active.len());
    for &j in &active {
        let slope = sys.slopes()[j];
        let norm_on_ray = eval_unchecked(sys, coeffs, slope.class());
        let t = Rational64::new(radius, norm_on_ray);
        let vertex = RationalPoint::new(
            t * Rational64::from_integer(slope.numerator()),
            t * Rational64::from_integer(slope.denominator()),
        );
        vertices.push(vertex);
        vertices.push(vertex.neg());
    }
    vertices.sort_by(compare_by_angle);
    Ok(NormBallPolygon { radius, vertices })
}

/// Counterclockwise angular order starting at the positive x-axis.
fn compare_by_angle(a: &RationalPoint, b: &RationalPoint) -> std::cmp::Ordering {
    fn sector(p: &RationalPoint) -> u8 {
        let zero = Rational64::zero();
        if p.y == zero {
            if p.x > zero {
                0
            } else {
                2
            }
        } else if p.y > zero {
            1
        } else {
            3
        }
    }
    sector(a).cmp(&sector(b)).then_with(|| {
        // Same open half-plane: a comes first iff the turn a -> b is
        // counterclockwise, i.e. the cross product is positive.
        let cross = a.x * b.y - a.y * b.x;
        Rational64::zero().cmp(&cross)
    })
}

/// The Newton polygon dual to the norm ball: the zonotope spanned by the
/// segments from the origin to `2 a_j (d_j, c_j)`, one per active slope
/// `c_j/d_j`. Its edge slopes are exactly the active boundary slopes and
/// its bounding box is `||mu|| x ||lambda||`.
pub fn newton_polygon(
    sys: &SlopeSystem,
    coeffs: &[i64],
) -> Result<LatticePolygon, GeometryError> {
    sys.check_coeffs(coeffs)?;
    let active = sys.active_indices(coeffs);
    if active.is_empty() {
        return Err(SeminormError::AllZeroCoefficients.into());
    }

    // Orient every generator into the upper half-plane (positive x-axis
    // included), then walk them in increasing angle order: up the right
    // chain, back down the left. This traverses the zonotope boundary
    // counterclockwise.
    let mut generators: Vec<(i64, i64)> = active
        .iter()
        .map(|&j| {
            let slope = sys.slopes()[j];
            let (mut gx, mut gy) = (
                2 * coeffs[j] * slope.denominator(),
                2 * coeffs[j] * slope.numerator(),
            );
            if gy < 0 || (gy == 0 && gx < 0) {
                gx = -gx;
                gy = -gy;
            }
            (gx, gy)
        })
        .collect();
    generators.sort_by(|a, b| {
        // Both in the closed upper half-plane: cross product orders by angle.
        (0i64).cmp(&(a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128) as &_).reverse()
    });

    let mut vertices = Vec::with_capacity(2 * generators.len());
    let (mut x, mut y) = (0i64, 0i64);
    for &(gx, gy) in &generators {
        vertices.push((x, y));
        x += gx;
        y += gy;
    }
    for &(gx, gy) in &generators {
        vertices.push((x, y));
        x -= gx;
        y -= gy;
    }

    Ok(canonicalize_lattice_polygon(vertices))
}

/// Translate so the bounding box corner sits at the origin and rotate the
/// cyclic vertex list to start at the lexicographically smallest vertex.
fn canonicalize_lattice_polygon(mut vertices: Vec<(i64, i64)>) -> LatticePolygon {
    vertices.dedup();
    if vertices.len() > 1 && vertices.first() == vertices.last() {
        vertices.pop();
    }
    let min_x = vertices.iter().map(|v| v.0).min().unwrap_or(0);
    let min_y = vertices.iter().map(|v| v.1).min().unwrap_or(0);
    for v in &mut vertices {
        v.0 -= min_x;
        v.1 -= min_y;
    }
    let start = vertices
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    vertices.rotate_left(start);
    LatticePolygon { vertices }
}

/// All primitive classes in the upper half-lattice (`y >= 0`, `x > 0` when
/// `y = 0`) with seminorm at most `bound`, in slope order. Requires a
/// norm-curve vector so that the ball of radius `bound` is compact.
pub fn primitive_classes_within(
    sys: &SlopeSystem,
    coeffs: &[i64],
    bound: i64,
) -> Result<Vec<PeripheralClass>, GeometryError> {
    sys.check_coeffs(coeffs)?;
    if bound <= 0 {
        return Err(GeometryError::InvalidBound(bound));
    }
    let active = sys.active_indices(coeffs);
    match active[..] {
        [] => return Err(SeminormError::AllZeroCoefficients.into()),
        [j] => return Err(GeometryError::RCurveBall(sys.slopes()[j])),
        _ => {}
    }

    let (x_max, y_max) = ball_box(sys, coeffs, &active, bound);
    let mut classes = Vec::new();
    for y in 0..=y_max {
        let x_lo = if y == 0 { 1 } else { -x_max };
        for x in x_lo..=x_max {
            let class = PeripheralClass::new(x, y);
            if class.is_primitive() && eval_unchecked(sys, coeffs, class) <= bound {
                classes.push(class);
            }
        }
    }
    classes.sort_by_key(|class| class.to_slope().expect("scanned classes name slopes"));
    Ok(classes)
}
