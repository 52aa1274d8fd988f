//! Embedding ordering families as generalized convex shellings over integer
//! coordinates, verification of the embedding identities, and the
//! line-realizability decision.
//!
//! Given M orderings of N elements, element x maps to the point whose i-th
//! coordinate is -(M+1)^(rank of x in order i). The anchor set Q is the
//! origin plus lambda times each standard basis vector. With the default
//! lambda = (M+1)^max(M+1, N) the shelling-convex subsets of the image are
//! exactly the sets generated by the orderings; smaller lambdas can break
//! this, which `verify_roundtrip` detects and reports.
//!
//! The default exponent must grow with N, not just M: coordinates reach
//! -(M+1)^N, and absorbing a dominated point into Hull(Q) needs lambda on
//! the order of the coordinate range. Exhaustive search over all families
//! with N <= 5, M <= 3 (and adversarial search at N = 6, 7) found the
//! largest required lambda just under M*(M+1)^(N-1), which the default
//! clears by a factor of (M+1)/M.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::geometry::{ConvexGeometry, GroundSet};
use crate::hull::{
    ext_hull_members, in_hull_check, int_pow, pos_hull_members, Rational, RationalPoint,
    ShellingInstance,
};
use crate::order::{cdim, OrderingFamily};
use crate::subset::Subset;
use crate::Error;

/// An ordering family realized as points and anchors in rational space.
#[derive(Debug, Clone)]
pub struct ShellingEmbedding {
    family: OrderingFamily,
    lambda: Rational,
    instance: ShellingInstance,
}

impl ShellingEmbedding {
    /// Build the embedding, with `lambda` defaulting to (M+1)^max(M+1, N).
    pub fn new(family: &OrderingFamily, lambda: Option<Rational>) -> Result<ShellingEmbedding, Error> {
        let m = family.orders().len();
        let n = family.ground().len();
        let lambda = match lambda {
            Some(l) => {
                if !l.is_positive() {
                    return Err(Error::NonPositiveScale);
                }
                l
            }
            None => Self::default_lambda(m, n),
        };

        let base = BigInt::from(m + 1);
        let mut points = Vec::with_capacity(n);
        for e in 0..n {
            let coords: Vec<Rational> = family
                .orders()
                .iter()
                .map(|o| Rational::from_integer(-int_pow(&base, o.rank(e))))
                .collect();
            points.push(RationalPoint::new(coords));
        }

        let mut q = Vec::with_capacity(m + 1);
        q.push(RationalPoint::origin(m));
        for i in 0..m {
            let mut coords = alloc::vec![Rational::from_integer(BigInt::from(0)); m];
            coords[i] = lambda.clone();
            q.push(RationalPoint::new(coords));
        }

        let instance = ShellingInstance::new(family.ground().clone(), points, q)?;
        Ok(ShellingEmbedding {
            family: family.clone(),
            lambda,
            instance,
        })
    }

    /// The scale (M+1)^max(M+1, N) for M orders over N elements, large
    /// enough that the shelling-convex sets match the generated ones.
    pub fn default_lambda(m: usize, n: usize) -> Rational {
        Rational::from_integer(int_pow(&BigInt::from(m + 1), core::cmp::max(m + 1, n)))
    }

    pub fn family(&self) -> &OrderingFamily {
        &self.family
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn instance(&self) -> &ShellingInstance {
        &self.instance
    }

    pub fn ground(&self) -> &GroundSet {
        self.instance.ground()
    }

    /// One point per ground element, in ground order.
    pub fn points(&self) -> &[RationalPoint] {
        self.instance.points()
    }

    pub fn q(&self) -> &[RationalPoint] {
        self.instance.q()
    }

    pub fn coordinates_integral(&self) -> bool {
        self.points().iter().all(RationalPoint::is_integral)
    }

    /// Compare the shelling-convex subsets of the image with `g`, subset by
    /// subset in mask order. Grounds must match.
    pub fn verify_roundtrip(&self, g: &ConvexGeometry) -> Result<RoundtripReport, Error> {
        if g.ground().names() != self.ground().names() {
            return Err(Error::GroundMismatch);
        }
        let n = self.ground().len();
        assert!(n <= 32, "roundtrip verification enumerates 2^N subsets");
        for mask in 0..1u64 << n {
            let x = Subset::from_bits(mask);
            let shelling = self.instance.is_shelling_convex(x);
            let generated = g.contains(x);
            if shelling != generated {
                return Ok(RoundtripReport {
                    mismatch: Some(RoundtripMismatch {
                        subset: x,
                        shelling_convex: shelling,
                        generated,
                    }),
                });
            }
        }
        Ok(RoundtripReport { mismatch: None })
    }

    /// For every nonempty P, the elements dominating the coordinatewise
    /// minimum of F(P) must equal those dominating some point of Hull(F(P)).
    pub fn verify_dominance_identity(&self) -> IdentityReport {
        let n = self.ground().len();
        assert!(n <= 32, "identity verification enumerates 2^N subsets");
        let points = self.points();
        for mask in 1..1u64 << n {
            let p = Subset::from_bits(mask);
            let lhs = pos_hull_members(p, points).expect("p is nonempty");
            let rhs = ext_hull_members(p, points).expect("p is nonempty");
            if lhs != rhs {
                return IdentityReport {
                    counterexample: Some(IdentityMismatch { subset: p, lhs, rhs }),
                };
            }
        }
        IdentityReport { counterexample: None }
    }

    /// For every nonempty P, the elements inside Hull(F(P) ∪ Q) must equal
    /// those dominating some point of Hull(F(P)).
    pub fn verify_hull_identity(&self) -> IdentityReport {
        let n = self.ground().len();
        assert!(n <= 32, "identity verification enumerates 2^N subsets");
        let points = self.points();
        for mask in 1..1u64 << n {
            let p = Subset::from_bits(mask);
            let mut hull_pts: Vec<RationalPoint> =
                p.iter().map(|e| points[e].clone()).collect();
            hull_pts.extend(self.q().iter().cloned());
            let mut lhs = Subset::EMPTY;
            for (e, pt) in points.iter().enumerate() {
                if in_hull_check(pt, &hull_pts).expect("consistent dimensions") {
                    lhs = lhs.with(e);
                }
            }
            let rhs = ext_hull_members(p, points).expect("p is nonempty");
            if lhs != rhs {
                return IdentityReport {
                    counterexample: Some(IdentityMismatch { subset: p, lhs, rhs }),
                };
            }
        }
        IdentityReport { counterexample: None }
    }
}

/// Outcome of comparing a shelling geometry against a target family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    /// First differing subset in mask order, if any.
    pub mismatch: Option<RoundtripMismatch>,
}

impl RoundtripReport {
    pub fn pass(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripMismatch {
    pub subset: Subset,
    pub shelling_convex: bool,
    pub generated: bool,
}

/// Outcome of an exhaustive two-sided identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub counterexample: Option<IdentityMismatch>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityMismatch {
    pub subset: Subset,
    pub lhs: Subset,
    pub rhs: Subset,
}

/// A placement of the ground set on a line realizing a geometry: elements
/// left to right, with the anchor interval in the given gap (gap k sits
/// between positions k-1 and k; 0 is left of everything).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineWitness {
    pub left_to_right: Vec<usize>,
    pub gap: usize,
}

/// Does `g` arise as a generalized convex shelling on a line? Searches every
/// arrangement (permutation of E, anchor gap); returns the lexicographically
/// first witness. Only the anchor's position relative to the ground points
/// matters, so the search space is exactly these N! * (N+1) candidates.
pub fn decide_dim1(g: &ConvexGeometry, limit: usize) -> Result<Option<LineWitness>, Error> {
    if !g.check_axioms().pass() {
        return Err(Error::AxiomsViolated);
    }
    let n = g.ground().len();
    if n > limit {
        return Err(Error::LimitExceeded { limit, actual: n });
    }

    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    search_line(g, n, &mut perm, &mut used)
}

fn search_line(
    g: &ConvexGeometry,
    n: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Result<Option<LineWitness>, Error> {
    if perm.len() == n {
        for gap in 0..=n {
            if line_family_matches(g, perm, gap) {
                return Ok(Some(LineWitness {
                    left_to_right: perm.clone(),
                    gap,
                }));
            }
        }
        return Ok(None);
    }
    for e in 0..n {
        if used[e] {
            continue;
        }
        used[e] = true;
        perm.push(e);
        if let Some(w) = search_line(g, n, perm, used)? {
            return Ok(Some(w));
        }
        perm.pop();
        used[e] = false;
    }
    Ok(None)
}

/// With elements at positions 0..N-1 and the anchor interval strictly inside
/// gap `t`, a subset is shelling-convex exactly when it is a contiguous run
/// of positions touching the gap: positions i..=j with i <= t and j+1 >= t.
/// The empty set is always convex. Checks that these sets are exactly `g`.
fn line_family_matches(g: &ConvexGeometry, perm: &[usize], t: usize) -> bool {
    let n = perm.len();
    let mut count = 1usize;
    let i_hi = core::cmp::min(t, n - 1);
    for i in 0..=i_hi {
        let j_lo = if t == 0 { i } else { core::cmp::max(i, t - 1) };
        let mut mask = Subset::EMPTY;
        for s in i..j_lo {
            mask = mask.with(perm[s]);
        }
        for j in j_lo..n {
            mask = mask.with(perm[j]);
            if !g.contains(mask) {
                return false;
            }
            count += 1;
        }
    }
    count == g.sets().len()
}

/// Dimension bounds for `g`: the exact convex dimension, the geometric upper
/// bound min(N, cdim), a line witness when one exists, and the exact
/// geometric dimension whenever the two pin it down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub cdim: usize,
    pub upper_bound: usize,
    pub line_witness: Option<LineWitness>,
    /// Known exactly only when a line witness exists (1) or the upper bound
    /// collapses to 2.
    pub exact: Option<usize>,
    /// Inclusive range the geometric dimension is known to lie in.
    pub bounds: (usize, usize),
}

pub fn dim_report(g: &ConvexGeometry, limit: usize) -> Result<DimReport, Error> {
    let cd = cdim(g, limit)?.cdim;
    let n = g.ground().len();
    let upper_bound = core::cmp::min(n, cd);
    let line_witness = decide_dim1(g, limit)?;
    let (exact, bounds) = if line_witness.is_some() {
        (Some(1), (1, 1))
    } else if upper_bound == 2 {
        (Some(2), (2, 2))
    } else {
        (None, (2, upper_bound))
    };
    Ok(DimReport {
        cdim: cd,
        upper_bound,
        line_witness,
        exact,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::{rational, rational_int};
    use crate::order::Ordering;
    use alloc::vec;

    fn two_order_family() -> OrderingFamily {
        let ground = GroundSet::letters(3).unwrap();
        let o1 = Ordering::new(vec![0, 1, 2]).unwrap();
        let o2 = Ordering::new(vec![0, 2, 1]).unwrap();
        OrderingFamily::new(ground, vec![o1, o2]).unwrap()
    }

    #[test]
    fn embedding_coordinates() {
        let f = two_order_family();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert_eq!(e.points()[0], RationalPoint::from_integers(&[-3, -3]));
        assert_eq!(e.points()[1], RationalPoint::from_integers(&[-9, -27]));
        assert_eq!(e.points()[2], RationalPoint::from_integers(&[-27, -9]));
        assert_eq!(e.lambda(), &rational_int(27));
        assert_eq!(e.q()[0], RationalPoint::from_integers(&[0, 0]));
        assert_eq!(e.q()[1], RationalPoint::from_integers(&[27, 0]));
        assert_eq!(e.q()[2], RationalPoint::from_integers(&[0, 27]));
        assert!(e.coordinates_integral());
    }

    #[test]
    fn embedding_single_order() {
        let ground = GroundSet::letters(2).unwrap();
        let o = Ordering::new(vec![0, 1]).unwrap();
        let f = OrderingFamily::new(ground, vec![o]).unwrap();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert_eq!(e.points()[0], RationalPoint::from_integers(&[-2]));
        assert_eq!(e.points()[1], RationalPoint::from_integers(&[-4]));
        assert_eq!(e.lambda(), &rational_int(4));
        assert_eq!(e.q().len(), 2);
    }

    #[test]
    fn rank_monotone_in_coordinates() {
        let f = two_order_family();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        for (i, o) in f.orders().iter().enumerate() {
            for x in 0..3 {
                for y in 0..3 {
                    let earlier = o.rank(x) < o.rank(y);
                    let bigger = e.points()[x].coord(i) > e.points()[y].coord(i);
                    assert_eq!(earlier, bigger);
                }
            }
        }
    }

    #[test]
    fn nonpositive_lambda_rejected() {
        let f = two_order_family();
        assert_eq!(
            ShellingEmbedding::new(&f, Some(rational_int(0))).unwrap_err(),
            Error::NonPositiveScale
        );
        assert_eq!(
            ShellingEmbedding::new(&f, Some(rational_int(-1))).unwrap_err(),
            Error::NonPositiveScale
        );
    }

    #[test]
    fn roundtrip_passes_with_default_lambda() {
        let f = two_order_family();
        let g = f.generate();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert!(e.verify_roundtrip(&g).unwrap().pass());
    }

    #[test]
    fn default_lambda_grows_with_the_ground_set() {
        // Worst case among all two-order families on four elements: absorbing
        // F(a) into Hull({F(d)} ∪ Q) needs lambda >= 36, so a default keyed
        // to M alone (27 here) is too small once N exceeds M+1.
        let ground = GroundSet::letters(4).unwrap();
        let o1 = Ordering::new(vec![0, 1, 2, 3]).unwrap();
        let o2 = Ordering::new(vec![0, 2, 3, 1]).unwrap();
        let f = OrderingFamily::new(ground, vec![o1, o2]).unwrap();
        let g = f.generate();

        let short = ShellingEmbedding::new(&f, Some(rational_int(27))).unwrap();
        let m = short.verify_roundtrip(&g).unwrap().mismatch.unwrap();
        assert!(m.shelling_convex && !m.generated);

        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert_eq!(e.lambda(), &rational_int(81));
        assert!(e.verify_roundtrip(&g).unwrap().pass());
        assert!(ShellingEmbedding::new(&f, Some(rational_int(36)))
            .unwrap()
            .verify_roundtrip(&g)
            .unwrap()
            .pass());
    }

    #[test]
    fn roundtrip_fails_with_tiny_lambda() {
        let f = two_order_family();
        let g = f.generate();
        let e = ShellingEmbedding::new(&f, Some(rational(1, 100))).unwrap();
        let report = e.verify_roundtrip(&g).unwrap();
        let m = report.mismatch.expect("tiny lambda breaks the roundtrip");
        // The singleton {b} becomes shelling-convex: with Q squeezed near the
        // origin, Hull({F(b)} ∪ Q) no longer captures F(a).
        assert_eq!(m.subset, Subset::singleton(1));
        assert!(m.shelling_convex);
        assert!(!m.generated);
    }

    #[test]
    fn roundtrip_ground_mismatch() {
        let f = two_order_family();
        let other = ConvexGeometry::new(
            GroundSet::letters(2).unwrap(),
            vec![Subset::EMPTY, Subset::from_bits(0b11)],
        )
        .unwrap();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert_eq!(e.verify_roundtrip(&other).unwrap_err(), Error::GroundMismatch);
    }

    #[test]
    fn identities_hold_on_small_family() {
        let f = two_order_family();
        let e = ShellingEmbedding::new(&f, None).unwrap();
        assert!(e.verify_dominance_identity().pass());
        assert!(e.verify_hull_identity().pass());
    }

    fn chain_geometry(n: usize) -> ConvexGeometry {
        let ground = GroundSet::letters(n).unwrap();
        let o = Ordering::new((0..n).collect()).unwrap();
        OrderingFamily::new(ground, vec![o]).unwrap().generate()
    }

    #[test]
    fn line_decision_on_chain() {
        let g = chain_geometry(3);
        let w = decide_dim1(&g, 12).unwrap().expect("chains embed on a line");
        assert_eq!(w.left_to_right, vec![0, 1, 2]);
        assert_eq!(w.gap, 0);
    }

    #[test]
    fn line_decision_negative() {
        let g = two_order_family().generate();
        assert_eq!(decide_dim1(&g, 12).unwrap(), None);
    }

    #[test]
    fn line_decision_power_set_of_two() {
        let ground = GroundSet::letters(2).unwrap();
        let sets = (0..4).map(Subset::from_bits).collect();
        let g = ConvexGeometry::new(ground, sets).unwrap();
        let w = decide_dim1(&g, 12).unwrap().expect("two points around the anchor");
        assert_eq!(w.left_to_right, vec![0, 1]);
        assert_eq!(w.gap, 1);
    }

    #[test]
    fn line_decision_limit() {
        let g = chain_geometry(4);
        assert_eq!(
            decide_dim1(&g, 3).unwrap_err(),
            Error::LimitExceeded { limit: 3, actual: 4 }
        );
    }

    #[test]
    fn dim_report_examples() {
        let g = two_order_family().generate();
        let r = dim_report(&g, 12).unwrap();
        assert_eq!(r.cdim, 2);
        assert_eq!(r.upper_bound, 2);
        assert_eq!(r.line_witness, None);
        assert_eq!(r.exact, Some(2));
        assert_eq!(r.bounds, (2, 2));

        let chain = chain_geometry(3);
        let r = dim_report(&chain, 12).unwrap();
        assert_eq!(r.cdim, 1);
        assert_eq!(r.exact, Some(1));
        assert_eq!(r.bounds, (1, 1));

        let ground = GroundSet::letters(4).unwrap();
        let sets = (0..16).map(Subset::from_bits).collect();
        let power = ConvexGeometry::new(ground, sets).unwrap();
        let r = dim_report(&power, 12).unwrap();
        assert_eq!(r.cdim, 4);
        assert_eq!(r.upper_bound, 4);
        assert_eq!(r.exact, None);
        assert_eq!(r.bounds, (2, 4));
    }
}
