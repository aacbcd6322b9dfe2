//! Canonical representation of 4-uniform hypergraphs with subset-degree queries.
//!
//! Vertices are dense 0-based integers below the owning hypergraph's `n`.
//! Edges are stored as sorted 4-tuples, so membership and iteration order are
//! independent of the order in which vertices were supplied. Degree and link
//! queries for 1-, 2- and 3-element vertex subsets go through a
//! [`SubsetDegreeIndex`] that is rebuilt lazily after mutations: the expected
//! usage is "construct, then count", so incremental maintenance would buy
//! nothing.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

/// Index of a vertex, in `[0, n)`.
pub type VertexId = u32;

/// An edge of a 4-uniform hypergraph: four distinct vertices, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge4([VertexId; 4]);

impl Edge4 {
    /// Builds an edge from four vertices in any order.
    pub fn new(vertices: [VertexId; 4]) -> Result<Self> {
        let mut v = vertices;
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] || v[2] == v[3] {
            return Err(Error::DuplicateVertices(vertices));
        }
        Ok(Edge4(v))
    }

    /// The vertices in increasing order.
    #[inline]
    pub fn vertices(&self) -> [VertexId; 4] {
        self.0
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// Number of vertices shared with another edge.
    pub fn intersection_size(&self, other: &Edge4) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }

    /// True when no vertex of `other` appears in `self`.
    pub fn disjoint_from(&self, other: &Edge4) -> bool {
        self.intersection_size(other) == 0
    }
}

impl fmt::Debug for Edge4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {} {} {}}}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for Edge4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// A 4-uniform hypergraph on `n` labelled vertices.
#[derive(Default)]
pub struct Hypergraph4 {
    n: u32,
    edges: BTreeSet<Edge4>,
    index: OnceLock<SubsetDegreeIndex>,
}

impl Clone for Hypergraph4 {
    fn clone(&self) -> Self {
        // The lazily built index is not cloned; the clone rebuilds on demand.
        Hypergraph4 {
            n: self.n,
            edges: self.edges.clone(),
            index: OnceLock::new(),
        }
    }
}

impl PartialEq for Hypergraph4 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Hypergraph4 {}

impl fmt::Debug for Hypergraph4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph4(n={}, |H|={})", self.n, self.edges.len())
    }
}

impl Hypergraph4 {
    /// An empty hypergraph on `n` vertices.
    pub fn new(n: u32) -> Self {
        Hypergraph4 {
            n,
            edges: BTreeSet::new(),
            index: OnceLock::new(),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge4> + '_ {
        self.edges.iter()
    }

    pub fn has_edge(&self, e: &Edge4) -> bool {
        self.edges.contains(e)
    }

    fn check_range(&self, e: &Edge4) -> Result<()> {
        let max = e.vertices()[3];
        if max >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: max,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Inserts an edge. Returns whether the hypergraph changed; inserting a
    /// duplicate returns `false`.
    pub fn add_edge(&mut self, e: Edge4) -> Result<bool> {
        self.check_range(&e)?;
        let changed = self.edges.insert(e);
        if changed {
            self.index = OnceLock::new();
        }
        Ok(changed)
    }

    /// Removes an edge that must be present.
    pub fn remove_edge(&mut self, e: &Edge4) -> Result<()> {
        if !self.edges.remove(e) {
            return Err(Error::EdgeNotPresent(e.vertices()));
        }
        self.index = OnceLock::new();
        Ok(())
    }

    /// A copy of `self` with one extra edge (which must not be present).
    pub fn with_edge(&self, e: Edge4) -> Result<Hypergraph4> {
        self.check_range(&e)?;
        if self.has_edge(&e) {
            return Err(Error::InvalidParameter(format!(
                "edge {e:?} already present"
            )));
        }
        let mut h = self.clone();
        h.add_edge(e)?;
        Ok(h)
    }

    /// A copy of `self` with one edge removed (which must be present).
    pub fn without_edge(&self, e: &Edge4) -> Result<Hypergraph4> {
        let mut h = self.clone();
        h.remove_edge(e)?;
        Ok(h)
    }

    /// Number of edges containing every vertex of `subset`, for 1 <= |subset| <= 3.
    pub fn degree(&self, subset: &[VertexId]) -> Result<u64> {
        self.validate_subset(subset)?;
        let idx = self.index();
        Ok(match subset.len() {
            1 => idx.vertex_degree(subset[0]),
            2 => idx.pair_degree(subset[0], subset[1]),
            3 => idx.triple_link(subset[0], subset[1], subset[2]).len() as u64,
            _ => unreachable!(),
        })
    }

    /// Vertices `w` with `subset + {w}` an edge, for a 3-element subset.
    pub fn link(&self, subset: &[VertexId]) -> Result<Vec<VertexId>> {
        if subset.len() != 3 {
            return Err(Error::InvalidSubsetSize(subset.len()));
        }
        self.validate_subset(subset)?;
        Ok(self
            .index()
            .triple_link(subset[0], subset[1], subset[2])
            .to_vec())
    }

    fn validate_subset(&self, subset: &[VertexId]) -> Result<()> {
        if subset.is_empty() || subset.len() > 3 {
            return Err(Error::InvalidSubsetSize(subset.len()));
        }
        for (i, &v) in subset.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if subset[..i].contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "subset vertices must be distinct, got {subset:?}"
                )));
            }
        }
        Ok(())
    }

    /// The subset-degree index, built on first use and cached until the next
    /// mutation. Safe to call from concurrent readers.
    pub fn index(&self) -> &SubsetDegreeIndex {
        self.index.get_or_init(|| SubsetDegreeIndex::build(self))
    }

    /// Non-edges in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge4> {
        let mut out = Vec::new();
        let n = self.n;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let e = Edge4([a, b, c, d]);
                        if !self.edges.contains(&e) {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Complete 4-graph on `n` vertices.
    pub fn complete(n: u32) -> Hypergraph4 {
        let mut h = Hypergraph4::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        h.edges.insert(Edge4([a, b, c, d]));
                    }
                }
            }
        }
        h
    }
}

fn pair_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn triple_key(a: VertexId, b: VertexId, c: VertexId) -> [VertexId; 3] {
    let mut k = [a, b, c];
    k.sort_unstable();
    k
}

/// Occurrence counts of vertices, pairs and triples over the edge set.
///
/// `triple_link[S]` lists, in increasing order, the vertices `w` with
/// `S + {w}` an edge; `pair_completions[{a,b}]` lists the remaining pairs
/// `{c,d}` of edges containing `{a,b}`. Both are derived views of the edge
/// set and are rebuilt from scratch when the hypergraph mutates.
pub struct SubsetDegreeIndex {
    vertex_degrees: Vec<u64>,
    pair_completions: HashMap<(VertexId, VertexId), Vec<(VertexId, VertexId)>>,
    triple_links: HashMap<[VertexId; 3], Vec<VertexId>>,
}

impl SubsetDegreeIndex {
    fn build(h: &Hypergraph4) -> Self {
        let mut vertex_degrees = vec![0u64; h.n as usize];
        let mut pair_completions: HashMap<(VertexId, VertexId), Vec<(VertexId, VertexId)>> =
            HashMap::new();
        let mut triple_links: HashMap<[VertexId; 3], Vec<VertexId>> = HashMap::new();
        for e in h.edges() {
            let v = e.vertices();
            for &x in &v {
                vertex_degrees[x as usize] += 1;
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let rest: Vec<VertexId> =
                        (0..4).filter(|k| *k != i && *k != j).map(|k| v[k]).collect();
                    pair_completions
                        .entry(pair_key(v[i], v[j]))
                        .or_default()
                        .push((rest[0], rest[1]));
                }
            }
            for i in 0..4 {
                let mut t = [0; 3];
                let mut w = 0;
                for k in 0..4 {
                    if k != i {
                        t[w] = v[k];
                        w += 1;
                    }
                }
                triple_links.entry(t).or_default().push(v[i]);
            }
        }
        for links in triple_links.values_mut() {
            links.sort_unstable();
        }
        for comps in pair_completions.values_mut() {
            comps.sort_unstable();
        }
        SubsetDegreeIndex {
            vertex_degrees,
            pair_completions,
            triple_links,
        }
    }

    #[inline]
    pub fn vertex_degree(&self, v: VertexId) -> u64 {
        self.vertex_degrees.get(v as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn pair_degree(&self, a: VertexId, b: VertexId) -> u64 {
        self.pair_completions
            .get(&pair_key(a, b))
            .map_or(0, |v| v.len() as u64)
    }

    /// Pairs completing `{a,b}` to an edge, sorted.
    pub fn pair_completions(&self, a: VertexId, b: VertexId) -> &[(VertexId, VertexId)] {
        self.pair_completions
            .get(&pair_key(a, b))
            .map_or(&[], |v| v.as_slice())
    }

    /// Link of a triple, sorted. Empty when the triple lies in no edge.
    pub fn triple_link(&self, a: VertexId, b: VertexId, c: VertexId) -> &[VertexId] {
        self.triple_links
            .get(&triple_key(a, b, c))
            .map_or(&[], |v| v.as_slice())
    }

    /// Iterates over all triples contained in at least one edge, with their links.
    pub fn triples(&self) -> impl Iterator<Item = (&[VertexId; 3], &[VertexId])> {
        self.triple_links.iter().map(|(k, v)| (k, v.as_slice()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: [u32; 4]) -> Edge4 {
        Edge4::new(v).unwrap()
    }

    #[test]
    fn create_empty() {
        let h = Hypergraph4::new(0);
        assert_eq!(h.vertex_count(), 0);
        assert_eq!(h.edge_count(), 0);
        let h = Hypergraph4::new(7);
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.degree(&[0]).unwrap(), 0);
        assert_eq!(h.degree(&[0, 1, 2]).unwrap(), 0);
    }

    #[test]
    fn single_edge() {
        let mut h = Hypergraph4::new(4);
        assert!(h.add_edge(e([0, 1, 2, 3])).unwrap());
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.degree(&[0, 1, 2]).unwrap(), 1);
        assert_eq!(h.link(&[0, 1, 2]).unwrap(), vec![3]);
    }

    #[test]
    fn duplicate_insert_reports_unchanged() {
        let mut h = Hypergraph4::new(5);
        assert!(h.add_edge(e([0, 1, 2, 3])).unwrap());
        assert!(!h.add_edge(e([0, 1, 2, 3])).unwrap());
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn insertion_order_is_canonicalized() {
        let mut h = Hypergraph4::new(4);
        h.add_edge(e([3, 1, 0, 2])).unwrap();
        assert!(h.has_edge(&e([0, 1, 2, 3])));
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let mut h = Hypergraph4::new(4);
        assert!(h.add_edge(e([0, 1, 2, 4])).is_err());
    }

    #[test]
    fn non_distinct_vertices_rejected() {
        assert!(Edge4::new([0, 1, 2, 2]).is_err());
    }

    #[test]
    fn link_of_complete_k5() {
        let h = Hypergraph4::complete(5);
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.link(&[0, 1, 2]).unwrap(), vec![3, 4]);
    }

    #[test]
    fn degree_matches_direct_scan() {
        let mut h = Hypergraph4::new(8);
        for v in [[0, 1, 2, 3], [0, 1, 2, 4], [1, 2, 4, 7], [3, 5, 6, 7]] {
            h.add_edge(e(v)).unwrap();
        }
        for s in [&[1u32][..], &[1, 2], &[1, 2, 4]] {
            let scan = h
                .edges()
                .filter(|edge| s.iter().all(|v| edge.contains(*v)))
                .count() as u64;
            assert_eq!(h.degree(s).unwrap(), scan);
        }
    }

    #[test]
    fn subset_size_validation() {
        let h = Hypergraph4::complete(6);
        assert!(h.degree(&[]).is_err());
        assert!(h.degree(&[0, 1, 2, 3]).is_err());
        assert!(h.degree(&[0, 0]).is_err());
        assert!(h.link(&[0, 1]).is_err());
    }

    #[test]
    fn index_invalidated_after_mutation() {
        let mut h = Hypergraph4::new(5);
        h.add_edge(e([0, 1, 2, 3])).unwrap();
        assert_eq!(h.degree(&[0, 1, 2]).unwrap(), 1);
        h.add_edge(e([0, 1, 2, 4])).unwrap();
        assert_eq!(h.degree(&[0, 1, 2]).unwrap(), 2);
        h.remove_edge(&e([0, 1, 2, 3])).unwrap();
        assert_eq!(h.degree(&[0, 1, 2]).unwrap(), 1);
    }

    #[test]
    fn non_edges_are_complement() {
        let mut h = Hypergraph4::new(6);
        h.add_edge(e([0, 1, 2, 3])).unwrap();
        let non = h.non_edges();
        assert_eq!(non.len(), 14);
        assert!(!non.contains(&e([0, 1, 2, 3])));
    }
}
