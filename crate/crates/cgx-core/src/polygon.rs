//! Realizing convex geometries as families of convex polygons in the plane.
//!
//! A polygon map assigns every ground element a convex polygon (points and
//! segments count). The induced family consists of the empty set plus every
//! X such that any element whose polygon fits inside the hull of X's
//! polygons already belongs to X. When no two elements share a polygon
//! vertex, the induced family is guaranteed to be a convex geometry, and the
//! embedder below constructs such a map for any convex geometry: nested
//! segments when one ordering generates it, segments straddling the origin
//! for two, and polygons with one vertex per ordering on evenly spread rays
//! otherwise. Ray directions are rounded to rationals, so the construction
//! is checked exactly afterwards and rebuilt with finer rounding if needed.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::geometry::{ConvexGeometry, GroundSet};
use crate::hull::{in_hull_check, int_pow, Rational, RationalPoint};
use crate::order::cdim;
use crate::subset::Subset;
use crate::Error;

/// A convex polygon in the plane: the extreme points of its vertex hull in
/// counterclockwise order. One vertex is a point, two are a segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<RationalPoint>,
}

fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
    let ax = a.coord(0) - o.coord(0);
    let ay = a.coord(1) - o.coord(1);
    let bx = b.coord(0) - o.coord(0);
    let by = b.coord(1) - o.coord(1);
    ax * by - ay * bx
}

impl Polygon {
    /// Convex hull of the given planar points; collinear and repeated points
    /// are dropped so every stored vertex is extreme.
    pub fn from_points(points: Vec<RationalPoint>) -> Result<Polygon, Error> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for p in &points {
            if p.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: p.dim(),
                });
            }
        }
        let mut pts = points;
        pts.sort_by(|a, b| a.coord(0).cmp(b.coord(0)).then(a.coord(1).cmp(b.coord(1))));
        pts.dedup();
        if pts.len() <= 2 {
            return Ok(Polygon { vertices: pts });
        }

        // Monotone chain; strict turns only, so collinear middles vanish.
        let mut lower: Vec<RationalPoint> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<RationalPoint> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(Polygon { vertices: lower })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Fewer than three vertices: a point or a segment.
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }
}

/// One convex polygon per ground element.
#[derive(Debug, Clone)]
pub struct PolygonMap {
    ground: GroundSet,
    shapes: Vec<Polygon>,
}

impl PolygonMap {
    pub fn new(ground: GroundSet, shapes: Vec<Polygon>) -> Result<PolygonMap, Error> {
        if shapes.len() != ground.len() {
            return Err(Error::InvalidFamily(
                "one polygon per ground element is required".to_string(),
            ));
        }
        Ok(PolygonMap { ground, shapes })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn shapes(&self) -> &[Polygon] {
        &self.shapes
    }

    pub fn shape(&self, e: usize) -> &Polygon {
        &self.shapes[e]
    }

    /// The induced family: the empty set plus every X such that a polygon
    /// inside Hull of X's polygons forces its element into X. Not
    /// necessarily a convex geometry unless `check_strong_injectivity`
    /// passes.
    pub fn geometry(&self) -> ConvexGeometry {
        let n = self.ground.len();
        assert!(n <= 32, "induced family enumerates 2^N subsets");
        let mut sets = alloc::vec![Subset::EMPTY];
        for mask in 1..1u64 << n {
            let x = Subset::from_bits(mask);
            if self.satisfies_membership_rule(x) {
                sets.push(x);
            }
        }
        ConvexGeometry::new(self.ground.clone(), sets)
            .expect("empty and full sets always satisfy the rule")
    }

    /// Nonempty X: no outside element's polygon fits inside Hull(shapes(X)).
    fn satisfies_membership_rule(&self, x: Subset) -> bool {
        let mut hull_pts: Vec<RationalPoint> = Vec::new();
        for e in x.iter() {
            hull_pts.extend(self.shapes[e].vertices().iter().cloned());
        }
        debug_assert!(!hull_pts.is_empty());

        let mut lo = [hull_pts[0].coord(0).clone(), hull_pts[0].coord(1).clone()];
        let mut hi = lo.clone();
        for p in &hull_pts[1..] {
            for i in 0..2 {
                let c = p.coord(i);
                if c < &lo[i] {
                    lo[i] = c.clone();
                }
                if c > &hi[i] {
                    hi[i] = c.clone();
                }
            }
        }

        for y in self.ground.full().difference(x).iter() {
            let mut contained = true;
            for v in self.shapes[y].vertices() {
                let outside_box =
                    (0..2).any(|i| v.coord(i) < &lo[i] || v.coord(i) > &hi[i]);
                if outside_box {
                    contained = false;
                    break;
                }
                if !in_hull_check(v, &hull_pts).expect("planar points are consistent") {
                    contained = false;
                    break;
                }
            }
            if contained {
                return false;
            }
        }
        true
    }

    /// No two distinct elements' polygons may share a vertex. Passing this
    /// guarantees the induced family is a convex geometry.
    pub fn check_strong_injectivity(&self) -> InjectivityReport {
        for a in 0..self.shapes.len() {
            for b in a + 1..self.shapes.len() {
                for v in self.shapes[a].vertices() {
                    if self.shapes[b].vertices().contains(v) {
                        return InjectivityReport {
                            violation: Some(SharedVertex {
                                first: a,
                                second: b,
                                vertex: v.clone(),
                            }),
                        };
                    }
                }
            }
        }
        InjectivityReport { violation: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub violation: Option<SharedVertex>,
}

impl InjectivityReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
    }
}

/// Two elements whose polygons share the given vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedVertex {
    pub first: usize,
    pub second: usize,
    pub vertex: RationalPoint,
}

/// Outcome of checking a polygon map against a target geometry: vertex
/// collisions and the first subset where the induced family differs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonReport {
    pub shared_vertex: Option<SharedVertex>,
    pub mismatch: Option<PolygonMismatch>,
}

impl PolygonReport {
    pub fn pass(&self) -> bool {
        self.shared_vertex.is_none() && self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonMismatch {
    pub subset: Subset,
    pub from_polygons: bool,
    pub expected: bool,
}

/// Check that the family induced by `m` is exactly `g`, and that no vertex
/// is shared between elements. Grounds must match.
pub fn verify_polygons(m: &PolygonMap, g: &ConvexGeometry) -> Result<PolygonReport, Error> {
    if m.ground().names() != g.ground().names() {
        return Err(Error::GroundMismatch);
    }
    let shared_vertex = m.check_strong_injectivity().violation;
    let induced = m.geometry();
    let n = g.ground().len();
    let mut mismatch = None;
    for mask in 0..1u64 << n {
        let x = Subset::from_bits(mask);
        let from_polygons = induced.contains(x);
        let expected = g.contains(x);
        if from_polygons != expected {
            mismatch = Some(PolygonMismatch {
                subset: x,
                from_polygons,
                expected,
            });
            break;
        }
    }
    Ok(PolygonReport {
        shared_vertex,
        mismatch,
    })
}

/// Round to the rational with the given power-of-ten denominator.
fn round_to_denominator(v: f64, pow10: usize) -> Rational {
    let scale = libm::pow(10.0, pow10 as f64);
    let scaled = libm::round(v * scale);
    Rational::new(
        BigInt::from(scaled as i128),
        int_pow(&BigInt::from(10), pow10),
    )
}

/// Direction of ray `i` out of `n`: exact on the axes, rounded elsewhere.
fn ray_direction(i: usize, n: usize, pow10: usize) -> (Rational, Rational) {
    if (4 * i) % n == 0 {
        let one = Rational::one();
        let zero = Rational::zero();
        return match (4 * i / n) % 4 {
            0 => (one, zero),
            1 => (zero, one),
            2 => (-one, zero),
            _ => (zero, -one),
        };
    }
    let theta = 2.0 * core::f64::consts::PI * (i as f64) / (n as f64);
    (
        round_to_denominator(libm::cos(theta), pow10),
        round_to_denominator(libm::sin(theta), pow10),
    )
}

/// Realize `g` as a polygon map and verify it exactly. Uses the fewest
/// orderings that generate `g`: one gives nested segments, two give segments
/// straddling the origin, and n of them give n-gons whose vertex on ray i
/// sits at distance C + rank in ordering i, with C large enough that only
/// rank maxima matter. Ray rounding is retried at denominators 10^(6+3k),
/// k = 0..4, until verification passes.
pub fn embed_polygons(g: &ConvexGeometry, limit: usize) -> Result<PolygonMap, Error> {
    if !g.check_axioms().pass() {
        return Err(Error::AxiomsViolated);
    }
    let result = cdim(g, limit)?;
    let n = result.cdim;
    let orders = result.witness.orders();
    let ground = g.ground().clone();
    let count = ground.len();

    if n <= 2 {
        let mut shapes = Vec::with_capacity(count);
        for e in 0..count {
            let (left, right) = if n == 1 {
                // Nested segments: rank j spans [1-j, j].
                let j = orders[0].rank(e) as i64;
                (1 - j, j)
            } else {
                // Left endpoint encodes the first ordering, right the second.
                (-(orders[0].rank(e) as i64), orders[1].rank(e) as i64)
            };
            shapes.push(Polygon::from_points(alloc::vec![
                RationalPoint::from_integers(&[left, 0]),
                RationalPoint::from_integers(&[right, 0]),
            ])?);
        }
        let map = PolygonMap::new(ground, shapes)?;
        let report = verify_polygons(&map, g)?;
        if !report.pass() {
            // Exact integer construction; a failure here is a bug.
            return Err(Error::Inconsistent(
                "segment embedding failed verification".to_string(),
            ));
        }
        return Ok(map);
    }

    // abs(cos(2pi/n)) at the base precision fixes the radius offset C:
    // the ceiling of 2|E| |cos| / (1 - |cos|), plus one for rounding slack.
    let cos_abs = round_to_denominator(libm::fabs(libm::cos(2.0 * core::f64::consts::PI / (n as f64))), 6);
    let c_exact = Rational::from_integer(BigInt::from(2 * count)) * &cos_abs
        / (Rational::one() - &cos_abs);
    let c = c_exact.ceil().to_integer() + BigInt::one();

    let mut last_mismatch = None;
    for k in 0..=4usize {
        let pow10 = 6 + 3 * k;
        let dirs: Vec<(Rational, Rational)> =
            (0..n).map(|i| ray_direction(i, n, pow10)).collect();
        let mut shapes = Vec::with_capacity(count);
        for e in 0..count {
            let mut vertices = Vec::with_capacity(n);
            for (i, (dx, dy)) in dirs.iter().enumerate() {
                let radius = Rational::from_integer(&c + BigInt::from(orders[i].rank(e)));
                vertices.push(RationalPoint::new(alloc::vec![&radius * dx, &radius * dy]));
            }
            shapes.push(Polygon::from_points(vertices)?);
        }
        let map = PolygonMap::new(ground.clone(), shapes)?;
        let report = verify_polygons(&map, g)?;
        if report.pass() {
            return Ok(map);
        }
        last_mismatch = report.mismatch.map(|m| m.subset);
    }
    Err(Error::RetriesExhausted(last_mismatch))
}
