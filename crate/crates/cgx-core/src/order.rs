//! Total orderings of the ground set, the geometries they generate, and the
//! convex dimension (fewest orderings generating a given geometry).
//!
//! A family of total orderings generates the family of sets X such that for
//! every outside element y some ordering ranks all of X strictly better than
//! y. Convex dimension is computed exactly: the search space is the set of
//! orderings compatible with the geometry (every prefix convex), and the
//! requirement "generate(family) = geometry" reduces to covering the pairs
//! (X convex, y outside X) by orderings that rank X above y. Only
//! inclusion-maximal X per y matter, which keeps the cover universe small.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::geometry::{ConvexGeometry, GroundSet};
use crate::subset::Subset;
use crate::Error;

/// A total ordering of ground elements, best first: `ranked[0]` has rank 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Ordering {
    ranked: Vec<usize>,
    pos: Vec<usize>,
    above: Vec<Subset>,
}

impl Ordering {
    /// `ranked` must be a permutation of `0..ranked.len()`.
    pub fn new(ranked: Vec<usize>) -> Result<Ordering, Error> {
        let n = ranked.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &e) in ranked.iter().enumerate() {
            if e >= n || pos[e] != usize::MAX {
                return Err(Error::InvalidFamily(
                    "ordering is not a permutation of the ground set".to_string(),
                ));
            }
            pos[e] = p;
        }
        let mut above = vec![Subset::EMPTY; n];
        let mut prefix = Subset::EMPTY;
        for &e in &ranked {
            above[e] = prefix;
            prefix = prefix.with(e);
        }
        Ok(Ordering { ranked, pos, above })
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements best-first.
    pub fn ranked(&self) -> &[usize] {
        &self.ranked
    }

    /// Zero-based position of `x` (0 = best).
    pub fn position(&self, x: usize) -> usize {
        self.pos[x]
    }

    /// One-based rank of `x` (1 = best). This is the exponent used by the
    /// shelling embedding.
    pub fn rank(&self, x: usize) -> usize {
        self.pos[x] + 1
    }

    /// Elements ranked strictly better than `y`.
    pub fn above(&self, y: usize) -> Subset {
        self.above[y]
    }

    /// The first `k` elements as a set.
    pub fn prefix(&self, k: usize) -> Subset {
        Subset::from_indices(self.ranked[..k].iter().copied())
    }

    /// Smallest prefix containing `x`; rejects the empty set.
    pub fn prefix_closure(&self, x: Subset) -> Result<Subset, Error> {
        let maxpos = x
            .iter()
            .map(|e| self.pos[e])
            .max()
            .ok_or(Error::EmptySubset)?;
        Ok(self.prefix(maxpos + 1))
    }
}

impl core::fmt::Debug for Ordering {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Ordering{:?}", self.ranked)
    }
}

/// One or more total orderings over a shared ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderingFamily {
    ground: GroundSet,
    orders: Vec<Ordering>,
}

impl core::fmt::Debug for OrderingFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "OrderingFamily({:?}, {:?})", self.ground, self.orders)
    }
}

impl OrderingFamily {
    pub fn new(ground: GroundSet, orders: Vec<Ordering>) -> Result<OrderingFamily, Error> {
        if orders.is_empty() {
            return Err(Error::InvalidFamily(
                "an ordering family needs at least one ordering".to_string(),
            ));
        }
        for o in &orders {
            if o.len() != ground.len() {
                return Err(Error::InvalidFamily(
                    "ordering length differs from ground set size".to_string(),
                ));
            }
        }
        Ok(OrderingFamily { ground, orders })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn orders(&self) -> &[Ordering] {
        &self.orders
    }

    /// Does `x` belong to the generated geometry? Direct evaluation of the
    /// defining condition, no enumeration.
    pub fn is_generated(&self, x: Subset) -> bool {
        let full = self.ground.full();
        debug_assert!(x.is_subset_of(full));
        full.difference(x)
            .iter()
            .all(|y| self.orders.iter().any(|o| x.is_subset_of(o.above(y))))
    }

    /// The generated convex geometry. Enumerates all 2^N subsets; intended
    /// for desk-scale ground sets.
    pub fn generate(&self) -> ConvexGeometry {
        let n = self.ground.len();
        assert!(n <= 32, "generate enumerates 2^N subsets");
        let mut sets = Vec::new();
        for mask in 0..1u64 << n {
            let x = Subset::from_bits(mask);
            if self.is_generated(x) {
                sets.push(x);
            }
        }
        ConvexGeometry::new(self.ground.clone(), sets)
            .expect("generated family always contains the empty and ground sets")
    }

    /// The element whose addition keeps `x` inside the generated geometry:
    /// a maximal element (smallest index on ties) of the dominance relation
    /// on outside elements. `x` must be generated and proper.
    pub fn extension_element(&self, x: Subset) -> Result<usize, Error> {
        let full = self.ground.full();
        if !x.is_subset_of(full) {
            return Err(Error::InvalidFamily(
                "subset has elements outside the ground set".to_string(),
            ));
        }
        if x == full {
            return Err(Error::FullSet);
        }
        if !self.is_generated(x) {
            return Err(Error::NotConvex(x));
        }

        let m = self.orders.len();
        // base[i] = deepest position of x in ordering i; usize::MAX marks empty x,
        // making max(base, pos) collapse to pos.
        let base: Vec<Option<usize>> = (0..m)
            .map(|i| x.iter().map(|e| self.orders[i].position(e)).max())
            .collect();
        let dominates = |a: usize, b: usize| -> bool {
            (0..m).all(|i| {
                let cutoff = match base[i] {
                    Some(p) => p.max(self.orders[i].position(b)),
                    None => self.orders[i].position(b),
                };
                self.orders[i].position(a) <= cutoff
            })
        };

        let outside = full.difference(x);
        for z in outside.iter() {
            let is_maximal = outside
                .iter()
                .filter(|&c| c != z)
                .all(|c| !(dominates(c, z) && !dominates(z, c)));
            if is_maximal {
                debug_assert!(self.is_generated(x.with(z)));
                return Ok(z);
            }
        }
        Err(Error::Inconsistent(
            "dominance relation has no maximal element".to_string(),
        ))
    }
}

/// All orderings whose every prefix is convex in `g`, in lexicographic order
/// of their ranked element lists. Nonempty whenever `g` passes the axioms.
pub fn compatible_orderings(g: &ConvexGeometry) -> Vec<Ordering> {
    let n = g.ground().len();
    let mut out = Vec::new();
    let mut ranked = Vec::with_capacity(n);
    dfs_orderings(g, Subset::EMPTY, &mut ranked, &mut out);
    out
}

fn dfs_orderings(
    g: &ConvexGeometry,
    cur: Subset,
    ranked: &mut Vec<usize>,
    out: &mut Vec<Ordering>,
) {
    let n = g.ground().len();
    if ranked.len() == n {
        out.push(Ordering::new(ranked.clone()).expect("DFS builds permutations"));
        return;
    }
    for e in 0..n {
        if !cur.contains(e) && g.contains(cur.with(e)) {
            ranked.push(e);
            dfs_orderings(g, cur.with(e), ranked, out);
            ranked.pop();
        }
    }
}

/// Result of the convex-dimension search: the minimum number of orderings
/// generating the geometry, plus the lexicographically smallest witness
/// family of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdimResult {
    pub cdim: usize,
    pub witness: OrderingFamily,
}

/// Exact convex dimension by branch and bound over compatible orderings.
///
/// Requires `g` to pass the axioms and `|E| <= limit` (compatible-ordering
/// enumeration is factorial in the worst case). The witness is re-checked by
/// regenerating the geometry before returning.
pub fn cdim(g: &ConvexGeometry, limit: usize) -> Result<CdimResult, Error> {
    let n = g.ground().len();
    if n > limit {
        return Err(Error::LimitExceeded { limit, actual: n });
    }
    if !g.check_axioms().pass() {
        return Err(Error::AxiomsViolated);
    }

    let candidates = compatible_orderings(g);
    if candidates.is_empty() {
        return Err(Error::Inconsistent(
            "no compatible orderings for a geometry passing the axioms".to_string(),
        ));
    }

    // Cover universe: per outside element y, the inclusion-maximal convex
    // sets avoiding y. Covering those covers every (convex X, y outside X)
    // pair, which is exactly "the family regenerates g".
    let mut pairs: Vec<(Subset, usize)> = Vec::new();
    for y in 0..n {
        let avoiding: Vec<Subset> = g
            .sets()
            .iter()
            .copied()
            .filter(|x| !x.is_empty() && !x.contains(y))
            .collect();
        for &x in &avoiding {
            if avoiding.iter().all(|&x2| x == x2 || !x.is_subset_of(x2)) {
                pairs.push((x, y));
            }
        }
    }
    pairs.sort_by_key(|&(x, y)| (y, x));

    let finish = |k: usize, chosen: &[usize]| -> Result<CdimResult, Error> {
        let orders: Vec<Ordering> = chosen.iter().map(|&j| candidates[j].clone()).collect();
        let witness = OrderingFamily::new(g.ground().clone(), orders)?;
        if &witness.generate() != g {
            return Err(Error::Inconsistent(
                "cdim witness does not regenerate the geometry".to_string(),
            ));
        }
        Ok(CdimResult { cdim: k, witness })
    };

    if pairs.is_empty() {
        // Only ∅ and E are convex; with the axioms that means |E| = 1.
        return finish(1, &[0]);
    }

    let solver = CoverSolver::new(&candidates, &pairs);
    let universe = PairMask::all(pairs.len());
    let greedy_ub = solver
        .greedy_steps(&universe, usize::MAX, 0)
        .ok_or_else(|| Error::Inconsistent("some cover pair is uncoverable".to_string()))?;
    let mut k = solver.lower_bound(&universe, 0).max(1);
    while k < greedy_ub && !solver.feasible(universe.clone(), k, 0) {
        k += 1;
    }

    // Lexicographically smallest witness of size k: fill slots left to right,
    // taking the smallest candidate index that still leaves the rest
    // coverable within the remaining budget.
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut uncovered = universe;
    let mut start = 0;
    for slot in 0..k {
        let budget = k - slot - 1;
        let mut advanced = false;
        for j in start..candidates.len() {
            if solver.cov[j].and_count(&uncovered) == 0 {
                continue;
            }
            let mut rest = uncovered.clone();
            rest.subtract(&solver.cov[j]);
            let ok = if rest.is_empty() {
                true
            } else {
                budget > 0 && solver.feasible(rest.clone(), budget, j + 1)
            };
            if ok {
                chosen.push(j);
                uncovered = rest;
                start = j + 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Err(Error::Inconsistent(
                "witness extraction diverged from the computed cover size".to_string(),
            ));
        }
    }
    if !uncovered.is_empty() || chosen.len() != k {
        return Err(Error::Inconsistent(
            "witness extraction left pairs uncovered".to_string(),
        ));
    }
    finish(k, &chosen)
}

/// Bit mask over the cover universe.
#[derive(Clone, PartialEq, Eq, Hash)]
struct PairMask {
    words: Vec<u64>,
}

impl PairMask {
    fn empty(n: usize) -> PairMask {
        PairMask {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn all(n: usize) -> PairMask {
        let mut m = PairMask::empty(n);
        for i in 0..n {
            m.set(i);
        }
        m
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and_count(&self, other: &PairMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn intersects(&self, other: &PairMask) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn subtract(&mut self, other: &PairMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn union_with(&mut self, other: &PairMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}

/// Minimum set cover over candidate orderings. `cov[c]` is the pair set an
/// ordering covers; `share[p]` is the set of pairs co-coverable with p by a
/// single candidate, used for an independent-set lower bound.
struct CoverSolver {
    cov: Vec<PairMask>,
    coverers: Vec<Vec<usize>>,
    share: Vec<PairMask>,
}

impl CoverSolver {
    fn new(candidates: &[Ordering], pairs: &[(Subset, usize)]) -> CoverSolver {
        let u = pairs.len();
        let cov: Vec<PairMask> = candidates
            .iter()
            .map(|o| {
                let mut m = PairMask::empty(u);
                for (p, &(x, y)) in pairs.iter().enumerate() {
                    if x.is_subset_of(o.above(y)) {
                        m.set(p);
                    }
                }
                m
            })
            .collect();
        let mut coverers = vec![Vec::new(); u];
        let mut share = vec![PairMask::empty(u); u];
        for (c, mask) in cov.iter().enumerate() {
            for p in mask.indices() {
                coverers[p].push(c);
                share[p].union_with(mask);
            }
        }
        CoverSolver { cov, coverers, share }
    }

    /// Greedy cover restricted to candidates >= min_idx; number of steps if
    /// it finishes within `cap`, else None.
    fn greedy_steps(&self, uncovered: &PairMask, cap: usize, min_idx: usize) -> Option<usize> {
        let mut unc = uncovered.clone();
        let mut steps = 0;
        while !unc.is_empty() {
            if steps == cap {
                return None;
            }
            let mut best = None;
            let mut best_gain = 0;
            for c in min_idx..self.cov.len() {
                let gain = self.cov[c].and_count(&unc);
                if gain > best_gain {
                    best_gain = gain;
                    best = Some(c);
                }
            }
            let best = best?;
            unc.subtract(&self.cov[best]);
            steps += 1;
        }
        Some(steps)
    }

    /// Lower bound on the cover size for `uncovered` using candidates
    /// >= min_idx: max of a counting bound and a greedy independent set of
    /// pairwise-uncoverable pairs (computed with the unrestricted share
    /// relation, which only weakens the bound).
    fn lower_bound(&self, uncovered: &PairMask, min_idx: usize) -> usize {
        let total = uncovered.count();
        if total == 0 {
            return 0;
        }
        let mut max_gain = 0;
        for c in min_idx..self.cov.len() {
            max_gain = max_gain.max(self.cov[c].and_count(uncovered));
        }
        if max_gain == 0 {
            return usize::MAX;
        }
        let ratio = total.div_ceil(max_gain);

        let mut order: Vec<(usize, usize)> = uncovered
            .indices()
            .into_iter()
            .map(|p| (self.share[p].and_count(uncovered), p))
            .collect();
        order.sort_unstable();
        let mut taken = PairMask::empty(self.share.len());
        let mut indep = 0;
        for (_, p) in order {
            if !self.share[p].intersects(&taken) {
                taken.set(p);
                indep += 1;
            }
        }
        ratio.max(indep)
    }

    fn feasible(&self, uncovered: PairMask, budget: usize, min_idx: usize) -> bool {
        let mut failed: HashMap<PairMask, usize> = HashMap::new();
        self.search(uncovered, budget, min_idx, &mut failed)
    }

    /// Record that `key` is uncoverable within `budget`, keeping the largest
    /// budget seen so the memo prunes as much as possible.
    fn note_failure(failed: &mut HashMap<PairMask, usize>, key: PairMask, budget: usize) {
        let known = failed.entry(key).or_insert(0);
        if budget > *known {
            *known = budget;
        }
    }

    fn search(
        &self,
        uncovered: PairMask,
        budget: usize,
        min_idx: usize,
        failed: &mut HashMap<PairMask, usize>,
    ) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        if let Some(&b) = failed.get(&uncovered) {
            if b >= budget {
                return false;
            }
        }
        if self.lower_bound(&uncovered, min_idx) > budget {
            Self::note_failure(failed, uncovered, budget);
            return false;
        }
        if self.greedy_steps(&uncovered, budget, min_idx).is_some() {
            return true;
        }

        // Branch on the uncovered pair with the fewest usable coverers.
        let mut pick = None;
        let mut pick_count = usize::MAX;
        for p in uncovered.indices() {
            let cnt = self.coverers[p]
                .iter()
                .filter(|&&c| c >= min_idx)
                .count();
            if cnt < pick_count {
                pick_count = cnt;
                pick = Some(p);
            }
        }
        let Some(p) = pick else { return false };
        if pick_count == 0 {
            Self::note_failure(failed, uncovered, budget);
            return false;
        }
        for &c in self.coverers[p].iter().filter(|&&c| c >= min_idx) {
            let mut rest = uncovered.clone();
            rest.subtract(&self.cov[c]);
            if self.search(rest, budget - 1, min_idx, failed) {
                return true;
            }
        }
        Self::note_failure(failed, uncovered, budget);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GroundSet;

    fn family(n: usize, orders: &[&[usize]]) -> OrderingFamily {
        let ground = GroundSet::letters(n).unwrap();
        let orders = orders
            .iter()
            .map(|o| Ordering::new(o.to_vec()).unwrap())
            .collect();
        OrderingFamily::new(ground, orders).unwrap()
    }

    fn subset(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    /// Two orderings a>b>c and a>c>b: the running three-element example.
    fn two_order_family() -> OrderingFamily {
        family(3, &[&[0, 1, 2], &[0, 2, 1]])
    }

    #[test]
    fn ordering_validation() {
        assert!(Ordering::new(vec![0, 1, 2]).is_ok());
        assert!(Ordering::new(vec![0, 0, 2]).is_err());
        assert!(Ordering::new(vec![1, 2, 3]).is_err());
        let o = Ordering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.rank(2), 1);
        assert_eq!(o.rank(0), 2);
        assert_eq!(o.rank(1), 3);
        assert_eq!(o.above(1), subset(&[0, 2]));
        assert_eq!(o.above(2), Subset::EMPTY);
        assert_eq!(o.prefix(2), subset(&[0, 2]));
    }

    #[test]
    fn generate_two_orders() {
        let g = two_order_family().generate();
        let expect: Vec<Subset> = [
            subset(&[]),
            subset(&[0]),
            subset(&[0, 1]),
            subset(&[0, 2]),
            subset(&[0, 1, 2]),
        ]
        .to_vec();
        assert_eq!(g.sets(), &expect[..]);
        assert!(g.check_axioms().pass());
    }

    #[test]
    fn generate_single_order_is_chain() {
        let g = family(3, &[&[0, 1, 2]]).generate();
        assert_eq!(
            g.sets(),
            &[subset(&[]), subset(&[0]), subset(&[0, 1]), subset(&[0, 1, 2])]
        );
    }

    #[test]
    fn prefix_closure_rejects_empty() {
        let o = Ordering::new(vec![0, 1, 2]).unwrap();
        assert_eq!(o.prefix_closure(Subset::EMPTY), Err(Error::EmptySubset));
        assert_eq!(o.prefix_closure(subset(&[1])).unwrap(), subset(&[0, 1]));
        assert_eq!(o.prefix_closure(subset(&[0, 2])).unwrap(), subset(&[0, 1, 2]));
    }

    #[test]
    fn extension_element_examples() {
        let f = two_order_family();
        // From {a} both b and c are maximal; ground order breaks the tie.
        assert_eq!(f.extension_element(subset(&[0])).unwrap(), 1);
        // From ∅ the unique maximal element is a.
        assert_eq!(f.extension_element(Subset::EMPTY).unwrap(), 0);
        assert_eq!(
            f.extension_element(subset(&[1])),
            Err(Error::NotConvex(subset(&[1])))
        );
        assert_eq!(f.extension_element(subset(&[0, 1, 2])), Err(Error::FullSet));
    }

    #[test]
    fn extension_element_iterates_to_ground() {
        let f = two_order_family();
        let mut x = Subset::EMPTY;
        let mut seen = alloc::vec::Vec::new();
        while x != f.ground().full() {
            let z = f.extension_element(x).unwrap();
            seen.push(z);
            x = x.with(z);
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn compatible_orderings_of_generated_geometry() {
        let f = two_order_family();
        let g = f.generate();
        let compat = compatible_orderings(&g);
        let lists: Vec<&[usize]> = compat.iter().map(|o| o.ranked()).collect();
        assert_eq!(lists, [&[0, 1, 2][..], &[0, 2, 1][..]]);
    }

    #[test]
    fn cdim_of_two_order_geometry() {
        let g = two_order_family().generate();
        let r = cdim(&g, 12).unwrap();
        assert_eq!(r.cdim, 2);
        let lists: Vec<&[usize]> = r.witness.orders().iter().map(|o| o.ranked()).collect();
        assert_eq!(lists, [&[0, 1, 2][..], &[0, 2, 1][..]]);
    }

    #[test]
    fn cdim_of_chain_is_one() {
        let g = family(4, &[&[2, 0, 3, 1]]).generate();
        let r = cdim(&g, 12).unwrap();
        assert_eq!(r.cdim, 1);
        assert_eq!(r.witness.orders()[0].ranked(), &[2, 0, 3, 1]);
    }

    #[test]
    fn cdim_of_power_set_is_ground_size() {
        for n in 1..=4 {
            let ground = GroundSet::letters(n).unwrap();
            let sets = (0..1u64 << n).map(Subset::from_bits).collect();
            let g = ConvexGeometry::new(ground, sets).unwrap();
            let r = cdim(&g, 12).unwrap();
            assert_eq!(r.cdim, n, "power set on {n}");
            assert_eq!(&r.witness.generate(), &g);
        }
    }

    #[test]
    fn cdim_brute_force_cross_check() {
        // Compare against direct enumeration of all families of compatible
        // orderings of sizes 1..=3.
        let geoms = [
            family(3, &[&[0, 1, 2], &[0, 2, 1]]).generate(),
            family(3, &[&[0, 1, 2], &[2, 1, 0]]).generate(),
            family(4, &[&[0, 1, 2, 3], &[3, 2, 1, 0]]).generate(),
            family(3, &[&[1, 0, 2]]).generate(),
        ];
        for g in &geoms {
            let compat = compatible_orderings(g);
            let mut brute = None;
            'sizes: for k in 1..=3usize {
                let mut stack: Vec<Vec<usize>> = vec![vec![]];
                let mut combos: Vec<Vec<usize>> = Vec::new();
                while let Some(cur) = stack.pop() {
                    if cur.len() == k {
                        combos.push(cur);
                        continue;
                    }
                    let lo = cur.last().map_or(0, |&j| j + 1);
                    for j in (lo..compat.len()).rev() {
                        let mut next = cur.clone();
                        next.push(j);
                        stack.push(next);
                    }
                }
                for combo in combos {
                    let orders = combo.iter().map(|&j| compat[j].clone()).collect();
                    let f = OrderingFamily::new(g.ground().clone(), orders).unwrap();
                    if &f.generate() == g {
                        brute = Some((k, combo));
                        break 'sizes;
                    }
                }
            }
            let (bk, bcombo) = brute.expect("brute force found no generating family");
            let r = cdim(g, 12).unwrap();
            assert_eq!(r.cdim, bk);
            // The DFS above tries combinations in lexicographic order, so the
            // first hit is the lex-smallest witness.
            let witness_lists: Vec<&[usize]> =
                r.witness.orders().iter().map(|o| o.ranked()).collect();
            let brute_lists: Vec<&[usize]> =
                bcombo.iter().map(|&j| compat[j].ranked()).collect();
            assert_eq!(witness_lists, brute_lists);
        }
    }

    #[test]
    fn cdim_respects_limit() {
        let g = family(3, &[&[0, 1, 2]]).generate();
        assert_eq!(
            cdim(&g, 2),
            Err(Error::LimitExceeded { limit: 2, actual: 3 })
        );
    }
}
