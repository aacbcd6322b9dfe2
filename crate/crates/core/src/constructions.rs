//! Extremal families, their edge-count formulas, and the near-extremal hosts
//! obtained by adding a few edges to them.
//!
//! Three families are generated, each with a defining vertex partition over
//! contiguous ranges starting at vertex 0 so that outputs are byte-for-byte
//! reproducible:
//!
//! * `t4(n)`: complete 4-partite, near-equal part sizes in descending order;
//!   edges are the transversal 4-tuples.
//! * `d4(n)`: two parts of sizes `⌊n/2⌋` and `⌈n/2⌉`; edges are the 4-tuples
//!   with exactly two vertices in each part.
//! * `b4(n)`: two parts of sizes `a` and `n-a` with `a` chosen to maximize the
//!   number of odd/odd 4-tuples; edges are the 3+1 and 1+3 tuples. The
//!   maximizer is scanned over `a >= ⌈n/2⌉` (the objective is symmetric under
//!   `a ↔ n-a`, so this picks the representative with the larger first part,
//!   which the added-edge constructions below rely on), ties to the smaller
//!   such `a`.
//!
//! The `sharpness_*` constructions add `q` edges to a base family in the
//! shape that realizes few pattern copies per added edge: `p2` adds edges
//! through one fixed pair of the first part paired with two vertices of the
//! second; `p3` adds pairwise disjoint 4-sets inside the larger part; `p4`
//! adds disjoint 2+2 sets; `c3` adds 4-sets inside the first part that
//! pairwise share at most one vertex (greedy lexicographic packing).

use crate::error::{Error, Result};
use crate::hypergraph::{Edge4, Hypergraph4};
use crate::partition::{Partition, PartitionMode};
use crate::util::binomial;

/// A generated hypergraph with its defining partition and any added edges.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub hypergraph: Hypergraph4,
    pub partition: Partition,
    pub n: u32,
    /// First part size for the odd-family constructions, `None` otherwise.
    pub chosen_a: Option<u32>,
    /// Edges added on top of the base family, in insertion order.
    pub added_edges: Vec<Edge4>,
}

impl ConstructionResult {
    pub fn q(&self) -> u64 {
        self.added_edges.len() as u64
    }

    /// Contiguous `[start, end)` vertex ranges of the defining parts.
    pub fn part_ranges(&self) -> Vec<[u32; 2]> {
        let sizes = self.partition.part_sizes();
        let mut out = Vec::with_capacity(sizes.len());
        let mut start = 0u32;
        for s in sizes {
            out.push([start, start + s as u32]);
            start += s as u32;
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Edge-count formulas
// ---------------------------------------------------------------------------

pub fn t4_formula(n: u64) -> u64 {
    (n / 4) * ((n + 1) / 4) * ((n + 2) / 4) * ((n + 3) / 4)
}

pub fn d4_formula(n: u64) -> u64 {
    binomial(n / 2, 2) * binomial(n.div_ceil(2), 2)
}

fn odd_family_value(a: u64, n: u64) -> u64 {
    binomial(a, 3) * (n - a) + binomial(n - a, 3) * a
}

pub fn b4_formula(n: u64) -> u64 {
    (1..=n).map(|a| odd_family_value(a, n)).max().unwrap_or(0)
}

/// The part size used by [`b4`]: the maximizer of the odd-family value over
/// `a >= ⌈n/2⌉`, smallest such `a` on ties.
pub fn b4_chosen_a(n: u32) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "odd family needs at least one vertex".into(),
        ));
    }
    let lo = n.div_ceil(2).max(1);
    let hi = (n - 1).max(lo);
    let mut best = (lo, odd_family_value(lo as u64, n as u64));
    for a in (lo + 1)..=hi {
        let v = odd_family_value(a as u64, n as u64);
        if v > best.1 {
            best = (a, v);
        }
    }
    Ok(best.0)
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Part sizes of the complete 4-partite family, descending.
pub fn t4_part_sizes(n: u32) -> [u32; 4] {
    [(n + 3) / 4, (n + 2) / 4, (n + 1) / 4, n / 4]
}

/// Complete 4-partite 4-graph with near-equal parts.
pub fn t4(n: u32) -> ConstructionResult {
    let sizes = t4_part_sizes(n);
    let partition = Partition::from_ranges(PartitionMode::Transversal4, &sizes)
        .expect("sizes sum to n");
    let r: Vec<(u32, u32)> = {
        let mut acc = 0;
        sizes
            .iter()
            .map(|s| {
                let range = (acc, acc + s);
                acc += s;
                range
            })
            .collect()
    };
    let mut h = Hypergraph4::new(n);
    for w in r[0].0..r[0].1 {
        for x in r[1].0..r[1].1 {
            for y in r[2].0..r[2].1 {
                for z in r[3].0..r[3].1 {
                    h.add_edge(Edge4::new([w, x, y, z]).unwrap()).unwrap();
                }
            }
        }
    }
    ConstructionResult {
        hypergraph: h,
        partition,
        n,
        chosen_a: None,
        added_edges: Vec::new(),
    }
}

/// All 2+2 tuples across a balanced bipartition.
pub fn d4(n: u32) -> ConstructionResult {
    let s0 = n / 2;
    let partition =
        Partition::from_ranges(PartitionMode::TwoTwo, &[s0, n - s0]).expect("sizes sum to n");
    let mut h = Hypergraph4::new(n);
    for a in 0..s0 {
        for b in (a + 1)..s0 {
            for c in s0..n {
                for d in (c + 1)..n {
                    h.add_edge(Edge4::new([a, b, c, d]).unwrap()).unwrap();
                }
            }
        }
    }
    ConstructionResult {
        hypergraph: h,
        partition,
        n,
        chosen_a: None,
        added_edges: Vec::new(),
    }
}

/// All 3+1 and 1+3 tuples across the optimal unbalanced bipartition.
pub fn b4(n: u32) -> Result<ConstructionResult> {
    let a = b4_chosen_a(n)?;
    let partition = Partition::from_ranges(PartitionMode::OddOdd, &[a, n - a])?;
    let mut h = Hypergraph4::new(n);
    // 3 in the first part, 1 in the second.
    for x1 in 0..a {
        for x2 in (x1 + 1)..a {
            for x3 in (x2 + 1)..a {
                for y in a..n {
                    h.add_edge(Edge4::new([x1, x2, x3, y]).unwrap()).unwrap();
                }
            }
        }
    }
    // 1 in the first part, 3 in the second.
    for x in 0..a {
        for y1 in a..n {
            for y2 in (y1 + 1)..n {
                for y3 in (y2 + 1)..n {
                    h.add_edge(Edge4::new([x, y1, y2, y3]).unwrap()).unwrap();
                }
            }
        }
    }
    Ok(ConstructionResult {
        hypergraph: h,
        partition,
        n,
        chosen_a: Some(a),
        added_edges: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Added-edge constructions
// ---------------------------------------------------------------------------

fn with_added(mut base: ConstructionResult, added: Vec<Edge4>) -> Result<ConstructionResult> {
    for e in &added {
        if !base.hypergraph.add_edge(*e)? {
            return Err(Error::InvalidParameter(format!(
                "added edge {e:?} already in the base family"
            )));
        }
    }
    base.added_edges = added;
    Ok(base)
}

/// `q` edges through one fixed pair of the first part of `t4(n)`, completed
/// by the first `q` lexicographic vertex pairs of the second part.
pub fn sharpness_p2(n: u32, q: u64) -> Result<ConstructionResult> {
    let base = t4(n);
    let sizes = t4_part_sizes(n);
    let (w_size, x_size) = (sizes[0] as u64, sizes[1] as u64);
    if q > binomial(x_size, 2) {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds the {} vertex pairs available in the second part",
            binomial(x_size, 2)
        )));
    }
    if q > 0 && w_size < 2 {
        return Err(Error::InvalidParameter(
            "first part too small to fix a pair".into(),
        ));
    }
    let x_start = sizes[0];
    let x_end = sizes[0] + sizes[1];
    let mut added = Vec::new();
    'outer: for c in x_start..x_end {
        for d in (c + 1)..x_end {
            if added.len() as u64 == q {
                break 'outer;
            }
            added.push(Edge4::new([0, 1, c, d]).unwrap());
        }
    }
    if (added.len() as u64) < q {
        return Err(Error::InvalidParameter("q too large".into()));
    }
    with_added(base, added)
}

/// `q` pairwise disjoint 4-sets inside the larger part of `d4(n)`, taken from
/// its lowest-numbered vertices.
pub fn sharpness_p3(n: u32, q: u64) -> Result<ConstructionResult> {
    let base = d4(n);
    let larger = n.div_ceil(2) as u64;
    if q > larger / 4 {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds {} disjoint 4-sets in the larger part",
            larger / 4
        )));
    }
    let start = n / 2;
    let added = (0..q)
        .map(|i| {
            let b = start + 4 * i as u32;
            Edge4::new([b, b + 1, b + 2, b + 3]).unwrap()
        })
        .collect();
    with_added(base, added)
}

/// `q` pairwise disjoint 4-sets each meeting both parts of `b4(n)` in two
/// vertices, taken from the lowest-numbered vertices of each part.
pub fn sharpness_p4(n: u32, q: u64) -> Result<ConstructionResult> {
    let base = b4(n)?;
    let a = base.chosen_a.expect("b4 sets chosen_a");
    let cap = (a.min(n - a) / 2) as u64;
    if q > cap {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds {cap} disjoint 2+2 sets for parts of sizes {a} and {}",
            n - a
        )));
    }
    let added = (0..q as u32)
        .map(|i| Edge4::new([2 * i, 2 * i + 1, a + 2 * i, a + 2 * i + 1]).unwrap())
        .collect();
    with_added(base, added)
}

/// Greedy lexicographic packing of 4-subsets of `[0, m)` with pairwise
/// intersections of at most one vertex, stopped after `limit` sets if given.
fn greedy_packing(m: u32, limit: Option<u64>) -> Vec<Edge4> {
    let mut chosen: Vec<Edge4> = Vec::new();
    for s in crate::util::four_subsets(m) {
        if let Some(l) = limit {
            if chosen.len() as u64 == l {
                break;
            }
        }
        let e = Edge4::new(s).unwrap();
        if chosen.iter().all(|c| c.intersection_size(&e) <= 1) {
            chosen.push(e);
        }
    }
    chosen
}

/// Size of the full greedy packing used by [`sharpness_c3`].
pub fn c3_packing_max(n: u32) -> Result<u64> {
    let a = b4_chosen_a(n)?;
    Ok(greedy_packing(a, None).len() as u64)
}

/// `q` 4-sets inside the first part of `b4(n)` that pairwise share at most
/// one vertex, chosen by greedy lexicographic scan.
pub fn sharpness_c3(n: u32, q: u64) -> Result<ConstructionResult> {
    let base = b4(n)?;
    let a = base.chosen_a.expect("b4 sets chosen_a");
    let added = greedy_packing(a, Some(q));
    if (added.len() as u64) < q {
        return Err(Error::InvalidParameter(format!(
            "q={q} exceeds the greedy packing of size {} in a part of {a} vertices",
            added.len()
        )));
    }
    with_added(base, added)
}

// ---------------------------------------------------------------------------
// Closed-form values for the minimum added-edge copy counts
// ---------------------------------------------------------------------------

/// Named formula evaluations. The `*_lead` variants are leading terms only
/// (integer part), not exact counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub name: &'static str,
    pub n: u64,
    pub value: u64,
    pub leading_term_only: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CFormula {
    /// Leading term `2(n/4)^3` of the minimum for the two-edge book over `t4`.
    P2Lead,
    /// Exact closed form `4 C(⌊n/2⌋-1, 2) (⌈n/2⌉-3)` for the three-edge book
    /// over `d4`, attained by an edge with three vertices in the larger part.
    P3Exact,
    /// Leading term `4 C(n/2, 3)` of the minimum for the four-edge book over `b4`.
    P4Lead,
    /// Leading term `3 (n/2)^2` of the minimum for the expanded triangle over `b4`.
    C3Lead,
}

impl CFormula {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cp2_lead" | "p2" => Ok(CFormula::P2Lead),
            "cp3_exact" | "p3" => Ok(CFormula::P3Exact),
            "cp4_lead" | "p4" => Ok(CFormula::P4Lead),
            "cc3_lead" | "c3" => Ok(CFormula::C3Lead),
            other => Err(Error::UnknownPattern(other.to_string())),
        }
    }
}

pub fn c_formula(which: CFormula, n: u64) -> Result<FormulaValue> {
    let min_n = match which {
        CFormula::C3Lead => 6,
        _ => 7,
    };
    if n < min_n {
        return Err(Error::InvalidParameter(format!(
            "formula needs n >= {min_n}, got {n}"
        )));
    }
    let (name, value, lead) = match which {
        CFormula::P2Lead => ("cP2_lead", n * n * n / 32, true),
        CFormula::P3Exact => (
            "cP3_exact",
            4 * binomial(n / 2 - 1, 2) * (n.div_ceil(2) - 3),
            false,
        ),
        CFormula::P4Lead => ("cP4_lead", 4 * binomial(n / 2, 3), true),
        CFormula::C3Lead => ("cC3_lead", 3 * (n / 2) * (n / 2), true),
    };
    Ok(FormulaValue {
        name,
        n,
        value,
        leading_term_only: lead,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count;

    #[test]
    fn t4_edge_counts() {
        assert_eq!(t4_formula(8), 16);
        assert_eq!(t4_formula(10), 36);
        assert_eq!(t4_formula(12), 81);
        assert_eq!(t4(8).hypergraph.edge_count(), 16);
        assert_eq!(t4(10).hypergraph.edge_count(), 36);
        assert_eq!(t4(0).hypergraph.edge_count(), 0);
    }

    #[test]
    fn t4_vertex_degree_is_product_of_other_parts() {
        let h = t4(8).hypergraph;
        for v in 0..8 {
            assert_eq!(h.degree(&[v]).unwrap(), 8);
        }
    }

    #[test]
    fn d4_edge_counts() {
        assert_eq!(d4_formula(8), 36);
        assert_eq!(d4_formula(9), 60);
        assert_eq!(d4(8).hypergraph.edge_count(), 36);
        assert_eq!(d4(9).hypergraph.edge_count(), 60);
    }

    #[test]
    fn d4_triple_inside_one_part_has_empty_link() {
        let h = d4(8).hypergraph;
        assert!(h.link(&[0, 1, 2]).unwrap().is_empty());
        assert!(h.link(&[4, 5, 6]).unwrap().is_empty());
    }

    #[test]
    fn b4_edge_counts_and_chosen_a() {
        assert_eq!(b4_formula(6), 10);
        assert_eq!(b4_formula(8), 40);
        assert_eq!(b4_chosen_a(6).unwrap(), 5);
        assert_eq!(b4_chosen_a(8).unwrap(), 6);
        assert_eq!(b4_chosen_a(12).unwrap(), 9);
        let c = b4(8).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 40);
        assert_eq!(c.chosen_a, Some(6));
    }

    #[test]
    fn formulas_match_generated_edge_counts() {
        for n in 4..=40u32 {
            assert_eq!(t4(n).hypergraph.edge_count(), t4_formula(n as u64), "t4({n})");
            assert_eq!(d4(n).hypergraph.edge_count(), d4_formula(n as u64), "d4({n})");
            assert_eq!(
                b4(n).unwrap().hypergraph.edge_count(),
                b4_formula(n as u64),
                "b4({n})"
            );
        }
    }

    #[test]
    fn b4_chosen_a_stays_near_half() {
        for n in 4..=200u32 {
            let a = b4_chosen_a(n).unwrap() as f64;
            let bound = (3.0 * n as f64).sqrt() / 2.0 + 1.0;
            assert!(
                (a - n as f64 / 2.0).abs() < bound,
                "n={n}: a={a} outside window {bound}"
            );
        }
    }

    #[test]
    fn c_formula_values() {
        assert_eq!(c_formula(CFormula::P3Exact, 12).unwrap().value, 120);
        assert_eq!(c_formula(CFormula::P2Lead, 16).unwrap().value, 128);
        assert_eq!(c_formula(CFormula::P4Lead, 12).unwrap().value, 80);
        assert_eq!(c_formula(CFormula::C3Lead, 12).unwrap().value, 108);
        assert!(c_formula(CFormula::P3Exact, 5).is_err());
        assert!(c_formula(CFormula::P2Lead, 16).unwrap().leading_term_only);
        assert!(!c_formula(CFormula::P3Exact, 16).unwrap().leading_term_only);
    }

    #[test]
    fn sharpness_p2_shape() {
        let c = sharpness_p2(12, 1).unwrap();
        assert_eq!(c.added_edges.len(), 1);
        let prof = c.partition.profile(&c.added_edges[0]);
        let mut sorted = prof;
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        assert_eq!(sorted, [2, 2, 0, 0]);

        // All added edges contain the fixed pair {0, 1}.
        let c = sharpness_p2(12, 3).unwrap();
        for e in &c.added_edges {
            assert!(e.contains(0) && e.contains(1));
        }
        assert!(sharpness_p2(12, 4).is_err());
    }

    #[test]
    fn sharpness_p3_shape() {
        let c = sharpness_p3(16, 2).unwrap();
        assert_eq!(c.added_edges.len(), 2);
        assert!(c.added_edges[0].disjoint_from(&c.added_edges[1]));
        // Added sets live inside the larger part (the second range).
        for e in &c.added_edges {
            assert!(e.vertices().iter().all(|v| *v >= 8));
        }
        assert_eq!(c.hypergraph.edge_count(), 784 + 2);
        assert!(sharpness_p3(16, 3).is_err());
    }

    #[test]
    fn sharpness_p4_shape() {
        let c = sharpness_p4(12, 1).unwrap();
        assert_eq!(c.added_edges.len(), 1);
        let prof = c.partition.profile(&c.added_edges[0]);
        assert_eq!(&prof[..2], &[2, 2]);
        assert!(sharpness_p4(12, 2).is_err(), "second part has 3 vertices");
    }

    #[test]
    fn sharpness_c3_packing() {
        let max = c3_packing_max(12).unwrap();
        assert_eq!(max, 3, "greedy packing of 4-sets in 9 points");
        let c = sharpness_c3(12, max).unwrap();
        for (i, e) in c.added_edges.iter().enumerate() {
            for f in &c.added_edges[..i] {
                assert!(e.intersection_size(f) <= 1);
            }
        }
        assert!(sharpness_c3(12, max + 1).is_err());
    }

    #[test]
    fn base_families_are_pattern_free_small() {
        use crate::pattern::BuiltinPattern;
        for n in [8u32, 11, 14] {
            assert_eq!(count::count_p2(&t4(n).hypergraph).unwrap(), 0);
            assert_eq!(count::count_p3(&d4(n).hypergraph).unwrap(), 0);
            let b = b4(n).unwrap().hypergraph;
            assert_eq!(count::count_p4(&b).unwrap(), 0);
            assert_eq!(count::count_c3(&b).unwrap(), 0);
            let _ = BuiltinPattern::ALL;
        }
    }
}
