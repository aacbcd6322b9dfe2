//! Seeded random hosts for differential testing.

use crate::hypergraph::{Edge4, Hypergraph4};
use crate::util::four_subsets;
use rand::Rng;

/// Includes every 4-subset of `[0, n)` independently with probability
/// `density`, consuming the generator in lexicographic subset order so a
/// seeded generator reproduces the same host.
pub fn random_hypergraph<R: Rng>(n: u32, density: f64, rng: &mut R) -> Hypergraph4 {
    let mut h = Hypergraph4::new(n);
    for s in four_subsets(n) {
        if rng.gen_bool(density) {
            h.add_edge(Edge4::new(s).unwrap()).unwrap();
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn same_seed_same_host() {
        let a = random_hypergraph(10, 0.3, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_hypergraph(10, 0.3, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        let c = random_hypergraph(10, 0.3, &mut ChaCha8Rng::seed_from_u64(8));
        assert_ne!(a, c);
    }
}
