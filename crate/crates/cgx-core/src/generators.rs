//! Concrete geometry families: order-convex sets of a poset, standard
//! planar convexity on point sets, and the D-relation whose acyclicity
//! characterizes lower-boundedness.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::{ConvexGeometry, GroundSet};
use crate::hull::{in_hull_check, rational_int, Rational, RationalPoint};
use crate::subset::Subset;
use crate::Error;

/// A finite partial order. `up[x]` holds every element above or equal to x.
#[derive(Debug, Clone)]
pub struct Poset {
    ground: GroundSet,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl Poset {
    /// Build from `below ⪯ above` pairs. The diagonal is implied; the rest
    /// of the relation must already be transitive and antisymmetric.
    pub fn new(ground: GroundSet, pairs: &[(usize, usize)]) -> Result<Poset, Error> {
        let n = ground.len();
        let mut up = alloc::vec![Subset::EMPTY; n];
        for x in 0..n {
            up[x] = up[x].with(x);
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!(
                    "pair ({a}, {b}) is outside the ground set"
                )));
            }
            up[a] = up[a].with(b);
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are mutually comparable",
                        ground.name(a),
                        ground.name(b)
                    )));
                }
                if !up[b].is_subset_of(up[a]) {
                    let c = up[b].difference(up[a]).min_element().unwrap();
                    return Err(Error::NotPartialOrder(format!(
                        "missing transitive pair ({}, {})",
                        ground.name(a),
                        ground.name(c)
                    )));
                }
            }
        }
        let mut down = alloc::vec![Subset::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b] = down[b].with(a);
            }
        }
        Ok(Poset { ground, up, down })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Elements above or equal to `x`.
    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// Elements below or equal to `x`.
    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// The order-convex subsets: X keeps every element lying between two of
    /// its members. Enumerates all 2^N subsets.
    pub fn geometry(&self) -> ConvexGeometry {
        let n = self.ground.len();
        assert!(n <= 32, "order-convex enumeration walks 2^N subsets");
        let full = self.ground.full();
        let mut sets = Vec::new();
        'mask: for mask in 0..1u64 << n {
            let x = Subset::from_bits(mask);
            for y in full.difference(x).iter() {
                let below = !x.intersect(self.down[y]).is_empty();
                let above = !x.intersect(self.up[y]).is_empty();
                if below && above {
                    continue 'mask;
                }
            }
            sets.push(x);
        }
        ConvexGeometry::new(self.ground.clone(), sets)
            .expect("empty and full sets are order-convex")
    }
}

/// The complete three-level order: `a` minima a1.., `b` middles b1.., `c`
/// maxima c1.., every lower element below every higher one.
pub fn three_level_poset(a: usize, b: usize, c: usize) -> Result<Poset, Error> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::InvalidGround(
            "every level needs at least one element".into(),
        ));
    }
    let mut names: Vec<String> = Vec::with_capacity(a + b + c);
    for (count, prefix) in [(a, 'a'), (b, 'b'), (c, 'c')] {
        for i in 1..=count {
            names.push(format!("{prefix}{i}"));
        }
    }
    let ground = GroundSet::new(names)?;
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in 0..b {
            pairs.push((i, a + j));
        }
        for k in 0..c {
            pairs.push((i, a + b + k));
        }
    }
    for j in 0..b {
        for k in 0..c {
            pairs.push((a + j, a + b + k));
        }
    }
    Poset::new(ground, &pairs)
}

/// Standard convexity on distinct planar points: X is convex exactly when
/// the hull of its points captures no other ground point.
pub fn planar_points_geometry(
    ground: GroundSet,
    points: &[RationalPoint],
) -> Result<ConvexGeometry, Error> {
    let n = ground.len();
    if points.len() != n {
        return Err(Error::InvalidFamily(
            "one point per ground element is required".into(),
        ));
    }
    for p in points {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint(i, j));
            }
        }
    }
    assert!(n <= 32, "planar convexity enumerates 2^N subsets");

    let full = Subset::full(n);
    let mut sets = alloc::vec![Subset::EMPTY];
    'mask: for mask in 1..1u64 << n {
        let x = Subset::from_bits(mask);
        let hull_pts: Vec<RationalPoint> = x.iter().map(|e| points[e].clone()).collect();
        for y in full.difference(x).iter() {
            if in_hull_check(&points[y], &hull_pts)? {
                continue 'mask;
            }
        }
        sets.push(x);
    }
    ConvexGeometry::new(ground, sets)
}

/// `n` points on a horizontal line at x = 0, 1, ..., n-1.
pub fn line_points(n: usize) -> Vec<RationalPoint> {
    (0..n)
        .map(|i| RationalPoint::from_integers(&[i as i64, 0]))
        .collect()
}

/// `n` distinct rational points on the unit circle, via the parametrization
/// t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)). The parameter sequence
/// 0, 2, -2, 1, -1, 1/2, -1/2, 3, -3, 1/3, -1/3, ... starts the list at
/// (1, 0), (-3/5, 4/5), (-3/5, -4/5). Any subset of a circle is in convex
/// position, so these induce the power set under planar convexity.
pub fn circle_points(n: usize) -> Vec<RationalPoint> {
    let mut params: Vec<Rational> = Vec::with_capacity(n);
    params.push(rational_int(0));
    let mut k = 2i64;
    while params.len() < n {
        params.push(rational_int(k));
        params.push(rational_int(-k));
        if k == 2 {
            params.push(rational_int(1));
            params.push(rational_int(-1));
        }
        params.push(Rational::new(1.into(), k.into()));
        params.push(Rational::new((-1).into(), k.into()));
        k += 1;
    }
    params.truncate(n);
    params
        .into_iter()
        .map(|t| {
            let t2 = &t * &t;
            let denom = rational_int(1) + &t2;
            let x = (rational_int(1) - t2) / denom.clone();
            let y = (rational_int(2) * t) / denom;
            RationalPoint::new(alloc::vec![x, y])
        })
        .collect()
}

/// The D-relation of a geometry and, when one exists, a witness cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DRelationReport {
    /// All pairs (a, b) with a D b, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Elements forming a directed cycle, if any; `cycle[i]` points to
    /// `cycle[i+1]` and the last back to the first.
    pub cycle: Option<Vec<usize>>,
}

impl DRelationReport {
    pub fn is_acyclic(&self) -> bool {
        self.cycle.is_none()
    }
}

/// a D b when dropping a from some set A frees b from its closure: there is
/// A containing a but not b with b in closure(A) and not in closure(A - a).
/// Acyclicity of this digraph is the lower-boundedness criterion.
pub fn d_relation(g: &ConvexGeometry, limit: usize) -> Result<DRelationReport, Error> {
    if !g.check_axioms().pass() {
        return Err(Error::AxiomsViolated);
    }
    let n = g.ground().len();
    if n > limit {
        return Err(Error::LimitExceeded { limit, actual: n });
    }

    // Closure of every subset, indexed by mask.
    let mut cl: Vec<Subset> = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        cl.push(g.closure(Subset::from_bits(mask)));
    }

    let mut pairs = Vec::new();
    let mut succ = alloc::vec![Subset::EMPTY; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for mask in 0..1u64 << n {
                let set = Subset::from_bits(mask);
                if !set.contains(a) || set.contains(b) {
                    continue;
                }
                if cl[mask as usize].contains(b)
                    && !cl[set.without(a).bits() as usize].contains(b)
                {
                    pairs.push((a, b));
                    succ[a] = succ[a].with(b);
                    break;
                }
            }
        }
    }

    Ok(DRelationReport {
        cycle: find_cycle(&succ),
        pairs,
    })
}

/// First directed cycle in ascending DFS order, as its vertex list.
fn find_cycle(succ: &[Subset]) -> Option<Vec<usize>> {
    let n = succ.len();
    // 0 = new, 1 = on the current path, 2 = finished.
    let mut state = alloc::vec![0u8; n];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(v: usize, succ: &[Subset], state: &mut [u8], path: &mut Vec<usize>) -> Option<usize> {
        state[v] = 1;
        path.push(v);
        for w in succ[v].iter() {
            match state[w] {
                0 => {
                    if let Some(entry) = dfs(w, succ, state, path) {
                        return Some(entry);
                    }
                }
                1 => return Some(w),
                _ => {}
            }
        }
        state[v] = 2;
        path.pop();
        None
    }

    for v in 0..n {
        if state[v] == 0 {
            if let Some(entry) = dfs(v, succ, &mut state, &mut path) {
                let start = path.iter().position(|&x| x == entry).unwrap();
                return Some(path[start..].to_vec());
            }
        }
    }
    None
}
