//! Exact hull membership and generalized convex shellings.
//!
//! All coordinates are arbitrary-precision rationals, so every verdict here
//! is exact: `in_hull` answers with a certificate (convex weights, or an
//! affine functional separating the point from the set), and the shelling
//! operations reduce to those verdicts.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
#[cfg(debug_assertions)]
use num_traits::Signed;

use crate::geometry::{ConvexGeometry, GroundSet};
use crate::simplex::{self, Feasibility};
use crate::subset::Subset;
use crate::Error;

pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `numer / denom` as a rational; `denom` must be nonzero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn int_pow(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// A point with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> RationalPoint {
        RationalPoint { coords }
    }

    pub fn from_integers(coords: &[i64]) -> RationalPoint {
        RationalPoint {
            coords: coords.iter().map(|&v| rational_int(v)).collect(),
        }
    }

    pub fn origin(dim: usize) -> RationalPoint {
        RationalPoint {
            coords: alloc::vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl core::fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Affine functional `gradient . p + offset`, nonpositive on the set and
/// positive on the separated point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingFunctional {
    pub gradient: Vec<Rational>,
    pub offset: Rational,
}

impl SeparatingFunctional {
    pub fn evaluate(&self, p: &RationalPoint) -> Rational {
        let mut acc = self.offset.clone();
        for (g, c) in self.gradient.iter().zip(p.coords()) {
            acc += g * c;
        }
        acc
    }
}

/// Certified answer to a hull-membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullMembership {
    /// Convex weights over the queried set reconstructing the point.
    Inside { weights: Vec<Rational> },
    /// A functional strictly separating the point from the set.
    Outside { separator: SeparatingFunctional },
}

impl HullMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullMembership::Inside { .. })
    }
}

/// Is `x` in the convex hull of `s`? Exact, with certificate. Errors on an
/// empty `s` or mismatched dimensions.
pub fn in_hull(x: &RationalPoint, s: &[RationalPoint]) -> Result<HullMembership, Error> {
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let d = x.dim();
    for p in s {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
    }

    // Columns are the candidate points plus a convexity row of ones.
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(d + 1);
    for i in 0..d {
        a.push(s.iter().map(|p| p.coord(i).clone()).collect());
    }
    a.push(alloc::vec![Rational::one(); s.len()]);
    let mut b: Vec<Rational> = x.coords().to_vec();
    b.push(Rational::one());

    match simplex::feasible(&a, &b) {
        Feasibility::Feasible(weights) => {
            #[cfg(debug_assertions)]
            {
                let mut sum = Rational::zero();
                for w in &weights {
                    debug_assert!(!w.is_negative());
                    sum += w;
                }
                debug_assert!(sum.is_one());
                for i in 0..d {
                    let mut acc = Rational::zero();
                    for (w, p) in weights.iter().zip(s) {
                        acc += w * p.coord(i);
                    }
                    debug_assert_eq!(&acc, x.coord(i));
                }
            }
            Ok(HullMembership::Inside { weights })
        }
        Feasibility::Infeasible(mut y) => {
            let offset = y.pop().expect("dual has one entry per row");
            let separator = SeparatingFunctional { gradient: y, offset };
            #[cfg(debug_assertions)]
            {
                debug_assert!(separator.evaluate(x).is_positive());
                for p in s {
                    debug_assert!(!separator.evaluate(p).is_positive());
                }
            }
            Ok(HullMembership::Outside { separator })
        }
    }
}

/// Convenience verdict without the certificate.
pub fn in_hull_check(x: &RationalPoint, s: &[RationalPoint]) -> Result<bool, Error> {
    Ok(in_hull(x, s)?.is_inside())
}

/// A generalized convex shelling: ground points G and an anchor set Q whose
/// hull avoids G. A subset X of G is shelling-convex when the hull of X
/// together with Q captures no further ground point.
#[derive(Debug, Clone)]
pub struct ShellingInstance {
    ground: GroundSet,
    points: Vec<RationalPoint>,
    q: Vec<RationalPoint>,
    dim: usize,
}

impl ShellingInstance {
    pub fn new(
        ground: GroundSet,
        points: Vec<RationalPoint>,
        q: Vec<RationalPoint>,
    ) -> Result<ShellingInstance, Error> {
        if points.len() != ground.len() {
            return Err(Error::InvalidFamily(
                "one point per ground element is required".to_string(),
            ));
        }
        if q.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let dim = q[0].dim();
        for p in points.iter().chain(&q) {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        for (i, p) in points.iter().enumerate() {
            if in_hull_check(p, &q)? {
                return Err(Error::HullIntersectsGround(i));
            }
        }
        Ok(ShellingInstance { ground, points, q, dim })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn q(&self) -> &[RationalPoint] {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Hull(X ∪ Q) meets G exactly in X.
    pub fn is_shelling_convex(&self, x: Subset) -> bool {
        let full = self.ground.full();
        debug_assert!(x.is_subset_of(full));
        let mut hull_pts: Vec<RationalPoint> =
            x.iter().map(|e| self.points[e].clone()).collect();
        hull_pts.extend(self.q.iter().cloned());

        // Bounding box prefilter: a point outside the box is outside the hull.
        let boxes: Vec<(Rational, Rational)> = (0..self.dim)
            .map(|i| {
                let mut lo = hull_pts[0].coord(i).clone();
                let mut hi = lo.clone();
                for p in &hull_pts[1..] {
                    let c = p.coord(i);
                    if c < &lo {
                        lo = c.clone();
                    }
                    if c > &hi {
                        hi = c.clone();
                    }
                }
                (lo, hi)
            })
            .collect();

        for e in full.difference(x).iter() {
            let p = &self.points[e];
            let outside_box = (0..self.dim)
                .any(|i| p.coord(i) < &boxes[i].0 || p.coord(i) > &boxes[i].1);
            if outside_box {
                continue;
            }
            if in_hull_check(p, &hull_pts).expect("hull points are nonempty and consistent") {
                return false;
            }
        }
        true
    }

    /// The family of shelling-convex subsets. Enumerates all 2^N subsets.
    pub fn shelling_geometry(&self) -> ConvexGeometry {
        let n = self.ground.len();
        assert!(n <= 32, "shelling_geometry enumerates 2^N subsets");
        let mut sets = Vec::new();
        for mask in 0..1u64 << n {
            let x = Subset::from_bits(mask);
            if self.is_shelling_convex(x) {
                sets.push(x);
            }
        }
        ConvexGeometry::new(self.ground.clone(), sets)
            .expect("empty set and ground set are always shelling-convex")
    }
}

/// Elements whose point dominates, coordinatewise, the componentwise minimum
/// of the points of `p`. Requires nonempty `p`.
pub fn pos_hull_members(p: Subset, points: &[RationalPoint]) -> Result<Subset, Error> {
    if p.is_empty() {
        return Err(Error::EmptySubset);
    }
    let dim = points[0].dim();
    let mins: Vec<Rational> = (0..dim)
        .map(|i| {
            p.iter()
                .map(|e| points[e].coord(i).clone())
                .min()
                .expect("p is nonempty")
        })
        .collect();
    let mut out = Subset::EMPTY;
    for (e, pt) in points.iter().enumerate() {
        if (0..dim).all(|i| pt.coord(i) >= &mins[i]) {
            out = out.with(e);
        }
    }
    Ok(out)
}

/// Elements whose point dominates, coordinatewise, some point of the convex
/// hull of the points of `p`. Requires nonempty `p`. Decided exactly by a
/// feasibility program with slack variables.
pub fn ext_hull_members(p: Subset, points: &[RationalPoint]) -> Result<Subset, Error> {
    if p.is_empty() {
        return Err(Error::EmptySubset);
    }
    let dim = points[0].dim();
    let members: Vec<&RationalPoint> = p.iter().map(|e| &points[e]).collect();
    let k = members.len();

    let mut out = Subset::EMPTY;
    for (e, pt) in points.iter().enumerate() {
        // sum_j w_j members[j][i] + s_i = pt[i], sum_j w_j = 1, w, s >= 0
        let mut a: Vec<Vec<Rational>> = Vec::with_capacity(dim + 1);
        for i in 0..dim {
            let mut row: Vec<Rational> = members.iter().map(|q| q.coord(i).clone()).collect();
            for si in 0..dim {
                row.push(if si == i { Rational::one() } else { Rational::zero() });
            }
            a.push(row);
        }
        let mut sum_row = alloc::vec![Rational::one(); k];
        sum_row.extend(core::iter::repeat(Rational::zero()).take(dim));
        a.push(sum_row);
        let mut b: Vec<Rational> = pt.coords().to_vec();
        b.push(Rational::one());
        if matches!(simplex::feasible(&a, &b), Feasibility::Feasible(_)) {
            out = out.with(e);
        }
    }
    Ok(out)
}
