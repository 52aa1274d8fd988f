//! Ground sets and convex geometries as explicit set families.
//!
//! A `ConvexGeometry` stores a structurally valid family (contains the empty
//! set and the ground set, deduplicated, members inside the ground set). The
//! convex-geometry axioms beyond that are NOT enforced by the type; they are
//! checked by [`ConvexGeometry::check_axioms`] and
//! [`ConvexGeometry::check_anti_exchange`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::subset::Subset;
use crate::Error;

/// Default cap for the isomorphism search (`|E|!` bijections).
pub const ISO_LIMIT: usize = 8;

/// A named finite ground set. Element identity is the index; names are for
/// presentation and file formats. At most 64 elements.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new(names: Vec<String>) -> Result<GroundSet, Error> {
        if names.is_empty() {
            return Err(Error::InvalidGround("no elements".to_string()));
        }
        if names.len() > 64 {
            return Err(Error::InvalidGround("more than 64 elements".to_string()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidGround("empty element name".to_string()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidGround(alloc::format!(
                    "duplicate element name \"{name}\""
                )));
            }
        }
        Ok(GroundSet { names })
    }

    /// Ground set `a, b, c, ...` of size `n` (at most 26).
    pub fn letters(n: usize) -> Result<GroundSet, Error> {
        if n == 0 || n > 26 {
            return Err(Error::InvalidGround(alloc::format!(
                "letter ground sets need 1..=26 elements, got {n}"
            )));
        }
        let names = (0..n)
            .map(|i| String::from(char::from(b'a' + i as u8)))
            .collect();
        GroundSet::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The subset containing every element.
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Parse a list of names into a subset. Duplicates are rejected.
    pub fn subset_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, Error> {
        let mut s = Subset::EMPTY;
        for n in names {
            let n = n.as_ref();
            let i = self
                .index(n)
                .ok_or_else(|| Error::InvalidFamily(alloc::format!("unknown element \"{n}\"")))?;
            if s.contains(i) {
                return Err(Error::InvalidFamily(alloc::format!(
                    "duplicate element \"{n}\""
                )));
            }
            s = s.with(i);
        }
        Ok(s)
    }

    /// Render a subset as `{a,c}` using element names.
    pub fn format_subset(&self, s: Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.name(i));
        }
        out.push('}');
        out
    }
}

impl core::fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// A set family over a ground set, kept sorted by subset mask with a hash
/// index for membership tests.
#[derive(Clone)]
pub struct ConvexGeometry {
    ground: GroundSet,
    sets: Vec<Subset>,
    index: HashSet<Subset>,
}

impl PartialEq for ConvexGeometry {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.sets == other.sets
    }
}

impl Eq for ConvexGeometry {}

impl core::fmt::Debug for ConvexGeometry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "ConvexGeometry[")?;
        for (k, s) in self.sets.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.ground.format_subset(*s))?;
        }
        write!(f, "]")
    }
}

impl ConvexGeometry {
    /// Build from a member list. Requires the empty set and the ground set as
    /// members, no duplicates, and every member inside the ground set.
    pub fn new(ground: GroundSet, mut sets: Vec<Subset>) -> Result<ConvexGeometry, Error> {
        let full = ground.full();
        for s in &sets {
            if !s.is_subset_of(full) {
                return Err(Error::InvalidFamily(alloc::format!(
                    "member {s:?} has elements outside the ground set"
                )));
            }
        }
        sets.sort();
        if sets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily("duplicate member".to_string()));
        }
        if sets.first() != Some(&Subset::EMPTY) {
            return Err(Error::InvalidFamily("missing empty set".to_string()));
        }
        if sets.last() != Some(&full) {
            return Err(Error::InvalidFamily("missing ground set".to_string()));
        }
        let index = sets.iter().copied().collect();
        Ok(ConvexGeometry { ground, sets, index })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Members in ascending mask order.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index.contains(&s)
    }

    /// Smallest member containing `a`: the intersection of all members that
    /// contain it. Lands in the family whenever the family is
    /// intersection-closed.
    pub fn closure(&self, a: Subset) -> Subset {
        let mut acc = self.ground.full();
        for &s in &self.sets {
            if a.is_subset_of(s) {
                acc = acc.intersect(s);
            }
        }
        acc
    }

    /// Check the three convex-geometry axioms: the empty set and ground set
    /// are members, the family is intersection-closed, and every proper
    /// member extends by a single element inside the family. Witnesses are
    /// the smallest violations in mask order.
    pub fn check_axioms(&self) -> AxiomReport {
        let full = self.ground.full();
        let contains_empty_and_ground =
            self.contains(Subset::EMPTY) && self.contains(full);

        let mut intersection_violation = None;
        'outer: for (i, &x) in self.sets.iter().enumerate() {
            for &y in &self.sets[i + 1..] {
                if !self.contains(x.intersect(y)) {
                    intersection_violation = Some((x, y));
                    break 'outer;
                }
            }
        }

        let mut extension_violation = None;
        for &x in &self.sets {
            if x == full {
                continue;
            }
            let extends = full
                .difference(x)
                .iter()
                .any(|e| self.contains(x.with(e)));
            if !extends {
                extension_violation = Some(x);
                break;
            }
        }

        AxiomReport {
            contains_empty_and_ground,
            intersection_violation,
            extension_violation,
        }
    }

    /// Anti-exchange check. Rejects families that fail [`check_axioms`],
    /// since closure is only meaningful there.
    ///
    /// [`check_axioms`]: ConvexGeometry::check_axioms
    pub fn check_anti_exchange(&self) -> Result<AntiExchangeReport, Error> {
        if !self.check_axioms().pass() {
            return Err(Error::AxiomsViolated);
        }
        Ok(self.anti_exchange_report_unchecked())
    }

    /// Anti-exchange check without the axiom gate. Meaningful on any
    /// intersection-closed family containing the ground set; used to test
    /// the equivalence of axiom (3) with anti-exchange.
    pub fn anti_exchange_report_unchecked(&self) -> AntiExchangeReport {
        let full = self.ground.full();
        for &x in &self.sets {
            let outside = full.difference(x);
            for y in outside.iter() {
                for z in outside.iter() {
                    if y == z {
                        continue;
                    }
                    if self.closure(x.with(y)).contains(z)
                        && self.closure(x.with(z)).contains(y)
                    {
                        return AntiExchangeReport {
                            violation: Some(AntiExchangeWitness { base: x, y, z }),
                        };
                    }
                }
            }
        }
        AntiExchangeReport { violation: None }
    }

    /// Set-family equality over an identical ground set (same names, same
    /// order).
    pub fn equals(&self, other: &ConvexGeometry) -> bool {
        self == other
    }

    /// Search for a ground-set bijection carrying this family onto `other`.
    /// Returns the lexicographically smallest witness as `map[i] = image of
    /// element i in other`, or `None` if the geometries are not isomorphic.
    /// Refuses ground sets larger than [`ISO_LIMIT`].
    pub fn is_isomorphic(&self, other: &ConvexGeometry) -> Result<Option<Vec<usize>>, Error> {
        self.is_isomorphic_with_limit(other, ISO_LIMIT)
    }

    pub fn is_isomorphic_with_limit(
        &self,
        other: &ConvexGeometry,
        limit: usize,
    ) -> Result<Option<Vec<usize>>, Error> {
        let n = self.ground.len();
        if n > limit {
            return Err(Error::LimitExceeded { limit, actual: n });
        }
        if n != other.ground.len() || self.sets.len() != other.sets.len() {
            return Ok(None);
        }

        // Invariant prefilter: per-element membership counts must match up,
        // and the member-size histograms must be equal.
        let degree = |g: &ConvexGeometry, e: usize| g.sets.iter().filter(|s| s.contains(e)).count();
        let mut hist_a = [0usize; 65];
        let mut hist_b = [0usize; 65];
        for &s in &self.sets {
            hist_a[s.len()] += 1;
        }
        for &s in &other.sets {
            hist_b[s.len()] += 1;
        }
        if hist_a != hist_b {
            return Ok(None);
        }
        let deg_a: Vec<usize> = (0..n).map(|e| degree(self, e)).collect();
        let deg_b: Vec<usize> = (0..n).map(|e| degree(other, e)).collect();

        let mut map = Vec::with_capacity(n);
        let mut used = alloc::vec![false; n];
        if self.search_bijection(other, &deg_a, &deg_b, &mut map, &mut used) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    fn search_bijection(
        &self,
        other: &ConvexGeometry,
        deg_a: &[usize],
        deg_b: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = self.ground.len();
        if map.len() == n {
            return self.sets.iter().all(|s| {
                let image = Subset::from_indices(s.iter().map(|e| map[e]));
                other.contains(image)
            });
        }
        let e = map.len();
        for img in 0..n {
            if used[img] || deg_a[e] != deg_b[img] {
                continue;
            }
            used[img] = true;
            map.push(img);
            if self.search_bijection(other, deg_a, deg_b, map, used) {
                return true;
            }
            map.pop();
            used[img] = false;
        }
        false
    }
}

/// Axiom verdicts from [`ConvexGeometry::check_axioms`]. `None` witnesses
/// mean the axiom holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Both the empty set and the ground set are members. Always true for
    /// constructible values; reported for completeness.
    pub contains_empty_and_ground: bool,
    /// A member pair whose intersection is missing from the family.
    pub intersection_violation: Option<(Subset, Subset)>,
    /// A proper member with no single-element extension in the family.
    pub extension_violation: Option<Subset>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.contains_empty_and_ground
            && self.intersection_violation.is_none()
            && self.extension_violation.is_none()
    }
}

/// Anti-exchange verdict. A violation is a closed set `base` and distinct
/// elements `y`, `z` outside it with `z` in the closure of `base + y` and
/// `y` in the closure of `base + z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiExchangeReport {
    pub violation: Option<AntiExchangeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiExchangeWitness {
    pub base: Subset,
    pub y: usize,
    pub z: usize,
}

impl AntiExchangeReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
    }
}
