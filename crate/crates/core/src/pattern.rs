//! Pattern 4-graphs and their automorphism counts.
//!
//! A pattern is a small 4-graph on vertices `[0, f)` whose copies are counted
//! inside a host. The four built-ins are the books `P2`, `P3`, `P4` (two,
//! three or four edges through a common triple, closed off by an edge through
//! the apex vertices) and the expanded triangle `C3` (three pairwise disjoint
//! vertex pairs, each union of two pairs an edge).

use crate::error::{Error, Result};
use crate::hypergraph::Edge4;

/// Maximum pattern size accepted by the brute-force automorphism counter.
pub const MAX_AUT_VERTICES: u32 = 12;
/// Maximum pattern size accepted by the generic copy counter.
pub const MAX_COUNT_VERTICES: u32 = 8;

/// The built-in patterns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuiltinPattern {
    P2,
    P3,
    P4,
    C3,
}

impl BuiltinPattern {
    pub const ALL: [BuiltinPattern; 4] = [
        BuiltinPattern::P2,
        BuiltinPattern::P3,
        BuiltinPattern::P4,
        BuiltinPattern::C3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BuiltinPattern::P2 => "P2",
            BuiltinPattern::P3 => "P3",
            BuiltinPattern::P4 => "P4",
            BuiltinPattern::C3 => "C3",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "P2" => Ok(BuiltinPattern::P2),
            "P3" => Ok(BuiltinPattern::P3),
            "P4" => Ok(BuiltinPattern::P4),
            "C3" => Ok(BuiltinPattern::C3),
            _ => Err(Error::UnknownPattern(name.to_string())),
        }
    }
}

/// A pattern 4-graph: `f` vertices, a non-empty duplicate-free edge list, and
/// an optional display name. Every vertex must appear in at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    f: u32,
    edges: Vec<Edge4>,
    name: Option<String>,
}

impl Pattern {
    pub fn new(f: u32, mut edges: Vec<Edge4>, name: Option<String>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::EmptyPattern);
        }
        edges.sort_unstable();
        edges.dedup();
        for e in &edges {
            if e.vertices()[3] >= f {
                return Err(Error::VertexOutOfRange {
                    vertex: e.vertices()[3],
                    n: f,
                });
            }
        }
        for v in 0..f {
            if !edges.iter().any(|e| e.contains(v)) {
                return Err(Error::IsolatedPatternVertex(v));
            }
        }
        Ok(Pattern { f, edges, name })
    }

    /// One of the four built-in patterns.
    pub fn builtin(which: BuiltinPattern) -> Pattern {
        let (f, raw): (u32, &[[u32; 4]]) = match which {
            // Books: l edges through the triple {0,1,2}, apexes 3..(3+l),
            // plus the edge through all apexes (padded with fresh vertices).
            BuiltinPattern::P2 => (7, &[[0, 1, 2, 3], [0, 1, 2, 4], [3, 4, 5, 6]]),
            BuiltinPattern::P3 => (7, &[[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 2, 5], [3, 4, 5, 6]]),
            BuiltinPattern::P4 => (
                7,
                &[
                    [0, 1, 2, 3],
                    [0, 1, 2, 4],
                    [0, 1, 2, 5],
                    [0, 1, 2, 6],
                    [3, 4, 5, 6],
                ],
            ),
            // Expanded triangle on the pairs {0,1}, {2,3}, {4,5}.
            BuiltinPattern::C3 => (6, &[[0, 1, 2, 3], [2, 3, 4, 5], [0, 1, 4, 5]]),
        };
        let edges = raw.iter().map(|v| Edge4::new(*v).unwrap()).collect();
        Pattern::new(f, edges, Some(which.name().to_string())).unwrap()
    }

    pub fn from_name(name: &str) -> Result<Pattern> {
        Ok(Pattern::builtin(BuiltinPattern::parse(name)?))
    }

    #[inline]
    pub fn vertex_count(&self) -> u32 {
        self.f
    }

    #[inline]
    pub fn edges(&self) -> &[Edge4] {
        &self.edges
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("pattern(f={},|F|={})", self.f, self.edges.len()))
    }

    /// Which built-in this pattern is, if it literally equals one
    /// (same vertex count and same edge set, not merely isomorphic).
    pub fn as_builtin(&self) -> Option<BuiltinPattern> {
        BuiltinPattern::ALL.into_iter().find(|b| {
            let p = Pattern::builtin(*b);
            p.f == self.f && p.edges == self.edges
        })
    }
}

/// Number of vertex permutations of `[0, f)` mapping the edge set onto itself,
/// by brute force over all `f!` permutations.
pub fn automorphism_count(pattern: &Pattern) -> Result<u64> {
    let f = pattern.vertex_count();
    if f > MAX_AUT_VERTICES {
        return Err(Error::PatternTooLarge {
            f,
            max: MAX_AUT_VERTICES,
        });
    }
    let edge_set: std::collections::BTreeSet<Edge4> = pattern.edges().iter().copied().collect();
    let mut perm: Vec<u32> = (0..f).collect();
    let mut count = 0u64;
    permute(&mut perm, 0, &mut |p| {
        let preserved = pattern.edges().iter().all(|e| {
            let v = e.vertices();
            let mapped = Edge4::new([
                p[v[0] as usize],
                p[v[1] as usize],
                p[v[2] as usize],
                p[v[3] as usize],
            ])
            .expect("permutation keeps vertices distinct");
            edge_set.contains(&mapped)
        });
        if preserved {
            count += 1;
        }
    });
    Ok(count)
}

/// Heap-style permutation enumeration via swaps; calls `visit` on each of the
/// `len!` orderings of `items[at..]`.
fn permute<F: FnMut(&[u32])>(items: &mut [u32], at: usize, visit: &mut F) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let p2 = Pattern::builtin(BuiltinPattern::P2);
        assert_eq!(p2.vertex_count(), 7);
        assert_eq!(p2.edges().len(), 3);
        assert_eq!(
            p2.edges(),
            &[
                Edge4::new([0, 1, 2, 3]).unwrap(),
                Edge4::new([0, 1, 2, 4]).unwrap(),
                Edge4::new([3, 4, 5, 6]).unwrap(),
            ]
        );

        let c3 = Pattern::builtin(BuiltinPattern::C3);
        assert_eq!(c3.vertex_count(), 6);
        assert_eq!(
            c3.edges(),
            &[
                Edge4::new([0, 1, 2, 3]).unwrap(),
                Edge4::new([0, 1, 4, 5]).unwrap(),
                Edge4::new([2, 3, 4, 5]).unwrap(),
            ]
        );

        let p4 = Pattern::builtin(BuiltinPattern::P4);
        assert_eq!(p4.edges().len(), 5);
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(Pattern::from_name("P9").is_err());
    }

    #[test]
    fn automorphism_counts_of_builtins() {
        // Frozen from the brute-force enumeration itself; structurally these
        // are 3!*2!*2!, 3!*3!, 3!*4! and 3!*2^3.
        assert_eq!(
            automorphism_count(&Pattern::builtin(BuiltinPattern::P2)).unwrap(),
            24
        );
        assert_eq!(
            automorphism_count(&Pattern::builtin(BuiltinPattern::P3)).unwrap(),
            36
        );
        assert_eq!(
            automorphism_count(&Pattern::builtin(BuiltinPattern::P4)).unwrap(),
            144
        );
        assert_eq!(
            automorphism_count(&Pattern::builtin(BuiltinPattern::C3)).unwrap(),
            48
        );
    }

    #[test]
    fn single_edge_pattern_has_s4_symmetry() {
        let p = Pattern::new(4, vec![Edge4::new([0, 1, 2, 3]).unwrap()], None).unwrap();
        assert_eq!(automorphism_count(&p).unwrap(), 24);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let err = Pattern::new(5, vec![Edge4::new([0, 1, 2, 3]).unwrap()], None);
        assert!(matches!(err, Err(Error::IsolatedPatternVertex(4))));
    }

    #[test]
    fn aut_bound_enforced() {
        let mut edges = vec![Edge4::new([0, 1, 2, 3]).unwrap()];
        for v in 4..13 {
            edges.push(Edge4::new([0, 1, 2, v]).unwrap());
        }
        let p = Pattern::new(13, edges, None).unwrap();
        assert!(automorphism_count(&p).is_err());
    }

    #[test]
    fn builtin_recognition_is_literal() {
        let p3 = Pattern::builtin(BuiltinPattern::P3);
        assert_eq!(p3.as_builtin(), Some(BuiltinPattern::P3));
        // A relabelled copy is not recognized.
        let relabeled = Pattern::new(
            7,
            vec![
                Edge4::new([4, 5, 6, 0]).unwrap(),
                Edge4::new([4, 5, 6, 1]).unwrap(),
                Edge4::new([4, 5, 6, 2]).unwrap(),
                Edge4::new([0, 1, 2, 3]).unwrap(),
            ],
            None,
        )
        .unwrap();
        assert_eq!(relabeled.as_builtin(), None);
    }
}
