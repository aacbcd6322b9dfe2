//! Minimum copy count over a single added edge.
//!
//! For a host `H` and pattern `F`, scans every non-edge `e`, counts the copies
//! of `F` in `H + e` that use `e` (the deletion difference against the count
//! in `H`), and reports the exact minimum together with all edges attaining
//! it. The scan is embarrassingly parallel over the non-edges; the reduction
//! is a plain minimum plus a sorted argmin list, so results are independent
//! of the number of threads.

use crate::count::count_copies;
use crate::error::{Error, Result};
use crate::hypergraph::{Edge4, Hypergraph4};
use crate::partition::Partition;
use crate::pattern::Pattern;
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct MinAddedEdgeResult {
    /// Minimum over all non-edges of the copies through the added edge.
    pub min_copies: u64,
    /// All non-edges attaining the minimum, lexicographically sorted.
    pub argmin_edges: Vec<Edge4>,
    /// Per-part vertex counts of each argmin edge with respect to the
    /// supplied partition; empty when no partition was given.
    pub argmin_profiles: Vec<[u8; 4]>,
}

pub fn min_added_edge_copies(
    h: &Hypergraph4,
    f: &Pattern,
    partition: Option<&Partition>,
) -> Result<MinAddedEdgeResult> {
    let non_edges = h.non_edges();
    if non_edges.is_empty() {
        return Err(Error::HypergraphComplete);
    }
    let base = count_copies(h, f)?.0;
    let counts: Result<Vec<(Edge4, u64)>> = non_edges
        .into_par_iter()
        .map(|e| {
            let host = h.with_edge(e)?;
            let total = count_copies(&host, f)?.0;
            Ok((e, total - base))
        })
        .collect();
    let counts = counts?;
    let min_copies = counts.iter().map(|(_, c)| *c).min().expect("non-empty");
    let mut argmin_edges: Vec<Edge4> = counts
        .iter()
        .filter(|(_, c)| *c == min_copies)
        .map(|(e, _)| *e)
        .collect();
    argmin_edges.sort_unstable();
    let argmin_profiles = match partition {
        Some(p) => argmin_edges.iter().map(|e| p.profile(e)).collect(),
        None => Vec::new(),
    };
    Ok(MinAddedEdgeResult {
        min_copies,
        argmin_edges,
        argmin_profiles,
    })
}

/// True when the profile puts exactly `k` vertices in some part of maximum size.
pub fn profile_has_count_in_largest_part(profile: &[u8; 4], sizes: &[u64], k: u8) -> bool {
    let max = sizes.iter().copied().max().unwrap_or(0);
    sizes
        .iter()
        .enumerate()
        .any(|(i, s)| *s == max && profile[i] == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::pattern::{BuiltinPattern, Pattern};

    #[test]
    fn complete_host_is_rejected() {
        let h = Hypergraph4::complete(6);
        let f = Pattern::builtin(BuiltinPattern::C3);
        assert!(matches!(
            min_added_edge_copies(&h, &f, None),
            Err(Error::HypergraphComplete)
        ));
    }

    #[test]
    fn p3_over_d4_12_value_and_argmin_types() {
        let c = constructions::d4(12);
        let f = Pattern::builtin(BuiltinPattern::P3);
        let r = min_added_edge_copies(&c.hypergraph, &f, Some(&c.partition)).unwrap();
        assert_eq!(r.min_copies, 120);
        // At n=12 the minimum is attained both by 3+1 edges and by edges
        // lying inside one part: 4*C(5,2)*3 = 4*(6-4)*C(6,2) = 120.
        let mut saw_three_one = false;
        let mut saw_four_zero = false;
        for p in &r.argmin_profiles {
            let mut s = *p;
            s.sort_unstable_by(|a, b| b.cmp(a));
            match s {
                [3, 1, 0, 0] => saw_three_one = true,
                [4, 0, 0, 0] => saw_four_zero = true,
                other => panic!("unexpected argmin profile {other:?}"),
            }
        }
        assert!(saw_three_one && saw_four_zero);
    }

    #[test]
    fn p3_over_d4_10_minimum_is_inside_one_part() {
        // Regression value from the brute-force scan: the edge inside a part
        // lies in 4*(5-4)*C(5,2) = 40 copies, below the 3+1 edges' 48.
        let c = constructions::d4(10);
        let f = Pattern::builtin(BuiltinPattern::P3);
        let r = min_added_edge_copies(&c.hypergraph, &f, Some(&c.partition)).unwrap();
        assert_eq!(r.min_copies, 40);
        for p in &r.argmin_profiles {
            let mut s = *p;
            s.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(s, [4, 0, 0, 0]);
        }
    }

    #[test]
    fn p2_over_t4_12_regression() {
        let c = constructions::t4(12);
        let f = Pattern::builtin(BuiltinPattern::P2);
        let r = min_added_edge_copies(&c.hypergraph, &f, Some(&c.partition)).unwrap();
        assert_eq!(r.min_copies, 18);
        for p in &r.argmin_profiles {
            let mut s = *p;
            s.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(s, [2, 2, 0, 0]);
        }
    }

    #[test]
    fn c3_over_b4_12_is_within_the_coarse_bound() {
        let c = constructions::b4(12).unwrap();
        let f = Pattern::builtin(BuiltinPattern::C3);
        let r = min_added_edge_copies(&c.hypergraph, &f, Some(&c.partition)).unwrap();
        assert!(r.min_copies <= 108);
        assert_eq!(r.min_copies, 45);
    }
}
