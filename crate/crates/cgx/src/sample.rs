//! Seeded random ordering families. One stream of a fixed-seed ChaCha
//! generator gives reproducible fuzz corpora across runs and platforms.

use cgx_core::{GroundSet, Ordering, OrderingFamily};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Family of `m` uniformly random orders over `n` letter-named elements.
pub fn random_family(rng: &mut ChaCha8Rng, n: usize, m: usize) -> OrderingFamily {
    let ground = GroundSet::letters(n).expect("letter ground set");
    let mut orders = Vec::with_capacity(m);
    for _ in 0..m {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        orders.push(Ordering::new(perm).expect("shuffled permutation"));
    }
    OrderingFamily::new(ground, orders).expect("orders match ground")
}

/// Family with sizes drawn uniformly from `1..=max_n` and `1..=max_m`.
pub fn random_family_upto(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> OrderingFamily {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    random_family(rng, n, m)
}
