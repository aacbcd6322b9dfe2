//! Vertex partitions, edge-profile decompositions and partition search.
//!
//! For a partition of the host's vertices, every edge either conforms to the
//! partition mode's profile (one vertex per part / two per part / odd count in
//! both parts) or violates it. The decomposition splits the edge set into the
//! bad set `B` and the good set `G`, and counts the missing set `M` of
//! conforming 4-tuples that are not edges. `M` is reported as a count derived
//! from the closed-form number of conforming tuples; materializing it is
//! opt-in since it can be Θ(n⁴).
//!
//! [`optimize_partition`] hill-climbs the number of conforming edges over
//! single-vertex moves (best improvement, lexicographic tie-break on the
//! `(vertex, target part)` pair) from seeded random assignments, optionally
//! preceded by caller-supplied initial partitions. [`exact_partition`] is the
//! exhaustive baseline used to validate the local search on small instances.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge4, Hypergraph4};
use crate::util::binomial;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionMode {
    /// Four parts, every edge with exactly one vertex in each.
    Transversal4,
    /// Two parts, every edge with exactly two vertices in each.
    TwoTwo,
    /// Two parts, every edge meeting both in an odd number of vertices.
    OddOdd,
}

impl PartitionMode {
    pub fn part_count(&self) -> usize {
        match self {
            PartitionMode::Transversal4 => 4,
            PartitionMode::TwoTwo | PartitionMode::OddOdd => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PartitionMode::Transversal4 => "transversal4",
            PartitionMode::TwoTwo => "two-two",
            PartitionMode::OddOdd => "odd-odd",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "transversal4" | "transversal" => Ok(PartitionMode::Transversal4),
            "two-two" | "22" => Ok(PartitionMode::TwoTwo),
            "odd-odd" | "odd" => Ok(PartitionMode::OddOdd),
            other => Err(Error::InvalidParameter(format!(
                "unknown partition mode `{other}`"
            ))),
        }
    }

    #[inline]
    pub fn conforms(&self, profile: &[u8; 4]) -> bool {
        match self {
            PartitionMode::Transversal4 => profile.iter().all(|c| *c == 1),
            PartitionMode::TwoTwo => profile[0] == 2 && profile[1] == 2,
            PartitionMode::OddOdd => profile[0] % 2 == 1 && profile[1] % 2 == 1,
        }
    }

    /// Number of conforming 4-tuples for the given part sizes.
    pub fn conforming_total(&self, sizes: &[u64]) -> u64 {
        match self {
            PartitionMode::Transversal4 => sizes.iter().product(),
            PartitionMode::TwoTwo => binomial(sizes[0], 2) * binomial(sizes[1], 2),
            PartitionMode::OddOdd => {
                binomial(sizes[0], 3) * sizes[1] + sizes[0] * binomial(sizes[1], 3)
            }
        }
    }
}

/// A labelled assignment of every vertex to a part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    mode: PartitionMode,
    assignment: Vec<u8>,
}

impl Partition {
    pub fn new(mode: PartitionMode, assignment: Vec<u8>) -> Result<Self> {
        let parts = mode.part_count() as u8;
        if let Some(bad) = assignment.iter().find(|p| **p >= parts) {
            return Err(Error::InvalidParameter(format!(
                "part id {bad} out of range for mode {}",
                mode.as_str()
            )));
        }
        Ok(Partition { mode, assignment })
    }

    /// Contiguous ranges: the first `sizes[0]` vertices in part 0, and so on.
    pub fn from_ranges(mode: PartitionMode, sizes: &[u32]) -> Result<Self> {
        if sizes.len() != mode.part_count() {
            return Err(Error::InvalidParameter(format!(
                "expected {} part sizes, got {}",
                mode.part_count(),
                sizes.len()
            )));
        }
        let mut assignment = Vec::with_capacity(sizes.iter().sum::<u32>() as usize);
        for (part, size) in sizes.iter().enumerate() {
            assignment.extend(std::iter::repeat(part as u8).take(*size as usize));
        }
        Partition::new(mode, assignment)
    }

    #[inline]
    pub fn mode(&self) -> PartitionMode {
        self.mode
    }

    #[inline]
    pub fn vertex_count(&self) -> u32 {
        self.assignment.len() as u32
    }

    #[inline]
    pub fn part_of(&self, v: u32) -> u8 {
        self.assignment[v as usize]
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn part_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.mode.part_count()];
        for p in &self.assignment {
            sizes[*p as usize] += 1;
        }
        sizes
    }

    /// Per-part vertex counts of an edge, padded with zeros to length 4.
    #[inline]
    pub fn profile(&self, e: &Edge4) -> [u8; 4] {
        let mut prof = [0u8; 4];
        for v in e.vertices() {
            prof[self.assignment[v as usize] as usize] += 1;
        }
        prof
    }

    #[inline]
    pub fn conforms(&self, e: &Edge4) -> bool {
        self.mode.conforms(&self.profile(e))
    }
}

/// The B/G/M split of a host with respect to a partition.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Edges violating the mode's profile.
    pub bad: Vec<Edge4>,
    /// Edges conforming to the profile.
    pub good: Vec<Edge4>,
    /// Conforming 4-tuples that are not edges (count only).
    pub missing_count: u64,
}

impl Decomposition {
    pub fn objective(&self) -> u64 {
        self.good.len() as u64
    }
}

pub fn decompose(h: &Hypergraph4, partition: &Partition) -> Result<Decomposition> {
    if partition.vertex_count() != h.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "partition covers {} vertices, hypergraph has {}",
            partition.vertex_count(),
            h.vertex_count()
        )));
    }
    let mut bad = Vec::new();
    let mut good = Vec::new();
    for e in h.edges() {
        if partition.conforms(e) {
            good.push(*e);
        } else {
            bad.push(*e);
        }
    }
    let total = partition.mode().conforming_total(&partition.part_sizes());
    Ok(Decomposition {
        missing_count: total - good.len() as u64,
        bad,
        good,
    })
}

/// Materializes the missing set: conforming 4-tuples that are not edges.
pub fn missing_tuples(h: &Hypergraph4, partition: &Partition) -> Result<Vec<Edge4>> {
    if partition.vertex_count() != h.vertex_count() {
        return Err(Error::InvalidParameter(
            "partition does not cover the hypergraph".into(),
        ));
    }
    let n = h.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let e = Edge4::new([a, b, c, d]).expect("distinct by construction");
                    if partition.conforms(&e) && !h.has_edge(&e) {
                        out.push(e);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Result of a partition search, exact or local.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub partition: Partition,
    pub objective: u64,
    pub bad_count: u64,
    pub good_count: u64,
    pub missing_count: u64,
    /// Deletions plus additions to reach the partition's full conforming
    /// hypergraph: `|B| + |M|`.
    pub edit_distance: u64,
    pub restarts: u32,
    pub seed: u64,
    pub locally_optimal: bool,
}

struct ClimbState {
    mode: PartitionMode,
    edges: Vec<[u32; 4]>,
    incident: Vec<Vec<usize>>,
}

impl ClimbState {
    fn new(h: &Hypergraph4, mode: PartitionMode) -> Self {
        let edges: Vec<[u32; 4]> = h.edges().map(|e| e.vertices()).collect();
        let mut incident = vec![Vec::new(); h.vertex_count() as usize];
        for (i, e) in edges.iter().enumerate() {
            for v in e {
                incident[*v as usize].push(i);
            }
        }
        ClimbState {
            mode,
            edges,
            incident,
        }
    }

    fn objective(&self, assignment: &[u8]) -> u64 {
        self.edges
            .iter()
            .filter(|e| {
                let mut prof = [0u8; 4];
                for v in *e {
                    prof[assignment[*v as usize] as usize] += 1;
                }
                self.mode.conforms(&prof)
            })
            .count() as u64
    }

    /// Objective change from moving `v` to `target`.
    fn move_delta(&self, assignment: &[u8], v: u32, target: u8) -> i64 {
        let from = assignment[v as usize];
        let mut delta = 0i64;
        for &ei in &self.incident[v as usize] {
            let mut prof = [0u8; 4];
            for w in self.edges[ei] {
                prof[assignment[w as usize] as usize] += 1;
            }
            let before = self.mode.conforms(&prof);
            prof[from as usize] -= 1;
            prof[target as usize] += 1;
            let after = self.mode.conforms(&prof);
            delta += after as i64 - before as i64;
        }
        delta
    }

    /// Best-improvement hill climbing; returns the local optimum reached.
    fn climb(&self, assignment: &mut [u8]) -> u64 {
        let parts = self.mode.part_count() as u8;
        let n = assignment.len() as u32;
        let mut objective = self.objective(assignment);
        loop {
            let mut best: Option<(u32, u8, i64)> = None;
            for v in 0..n {
                for target in 0..parts {
                    if target == assignment[v as usize] {
                        continue;
                    }
                    let delta = self.move_delta(assignment, v, target);
                    if delta > 0 && best.map_or(true, |(_, _, d)| delta > d) {
                        best = Some((v, target, delta));
                    }
                }
            }
            match best {
                Some((v, target, delta)) => {
                    assignment[v as usize] = target;
                    objective = (objective as i64 + delta) as u64;
                }
                None => return objective,
            }
        }
    }

    /// True when no single-vertex move improves the objective.
    fn is_local_optimum(&self, assignment: &[u8]) -> bool {
        let parts = self.mode.part_count() as u8;
        (0..assignment.len() as u32).all(|v| {
            (0..parts).all(|t| {
                t == assignment[v as usize] || self.move_delta(assignment, v, t) <= 0
            })
        })
    }
}

/// Hill climbing with `restarts` seeded random starts, preceded by any
/// caller-supplied initial partitions (useful when the host comes from a
/// construction whose defining partition is a strong start). The best
/// objective wins; ties go to the earliest start, so results do not depend
/// on scheduling.
pub fn optimize_partition(
    h: &Hypergraph4,
    mode: PartitionMode,
    restarts: u32,
    seed: u64,
    initial: &[Partition],
) -> Result<StabilityReport> {
    if h.vertex_count() == 0 {
        return Err(Error::InvalidParameter(
            "cannot partition an empty vertex set".into(),
        ));
    }
    if restarts == 0 && initial.is_empty() {
        return Err(Error::InvalidParameter(
            "need at least one restart or initial partition".into(),
        ));
    }
    for p in initial {
        if p.mode() != mode || p.vertex_count() != h.vertex_count() {
            return Err(Error::InvalidParameter(
                "initial partition does not match mode or host".into(),
            ));
        }
    }
    let state = ClimbState::new(h, mode);
    let n = h.vertex_count() as usize;
    let parts = mode.part_count() as u8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<u8>)> = None;
    let consider = |objective: u64, assignment: &[u8], best: &mut Option<(u64, Vec<u8>)>| {
        if best.as_ref().map_or(true, |(obj, _)| objective > *obj) {
            *best = Some((objective, assignment.to_vec()));
        }
    };
    for p in initial {
        let mut assignment = p.assignment().to_vec();
        let obj = state.climb(&mut assignment);
        consider(obj, &assignment, &mut best);
    }
    for _ in 0..restarts {
        let mut assignment: Vec<u8> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
        let obj = state.climb(&mut assignment);
        consider(obj, &assignment, &mut best);
    }
    let (objective, assignment) = best.expect("at least one start");
    debug_assert!(state.is_local_optimum(&assignment));
    let partition = Partition::new(mode, assignment)?;
    let d = decompose(h, &partition)?;
    Ok(StabilityReport {
        locally_optimal: state.is_local_optimum(partition.assignment()),
        objective,
        bad_count: d.bad.len() as u64,
        good_count: d.good.len() as u64,
        missing_count: d.missing_count,
        edit_distance: d.bad.len() as u64 + d.missing_count,
        restarts,
        seed,
        partition,
    })
}

/// Global optimum by exhaustive enumeration (vertex 0 pinned to part 0, since
/// the objective is invariant under relabelling parts). Two-part modes accept
/// up to 24 vertices, the four-part mode up to 12.
pub fn exact_partition(h: &Hypergraph4, mode: PartitionMode) -> Result<StabilityReport> {
    let n = h.vertex_count();
    let bound = match mode.part_count() {
        2 => 24,
        _ => 12,
    };
    if n > bound {
        return Err(Error::EnumerationBound(format!(
            "exact partition search supports n <= {bound} for {}",
            mode.as_str()
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cannot partition an empty vertex set".into(),
        ));
    }
    let parts = mode.part_count() as u8;
    // Edges indexed by their maximum vertex: each edge is scored exactly once,
    // at the recursion depth where its last vertex gets assigned.
    let mut edges_by_max: Vec<Vec<[u32; 4]>> = vec![Vec::new(); n as usize];
    for e in h.edges() {
        let v = e.vertices();
        edges_by_max[v[3] as usize].push(v);
    }
    let mut assignment = vec![0u8; n as usize];
    let mut best: Option<(u64, Vec<u8>)> = None;
    fn recurse(
        depth: usize,
        n: usize,
        parts: u8,
        conforming: u64,
        mode: PartitionMode,
        edges_by_max: &Vec<Vec<[u32; 4]>>,
        assignment: &mut Vec<u8>,
        best: &mut Option<(u64, Vec<u8>)>,
    ) {
        if depth == n {
            if best.as_ref().map_or(true, |(obj, _)| conforming > *obj) {
                *best = Some((conforming, assignment.clone()));
            }
            return;
        }
        let choices = if depth == 0 { 1 } else { parts };
        for part in 0..choices {
            assignment[depth] = part;
            let mut gained = 0u64;
            for e in &edges_by_max[depth] {
                let mut prof = [0u8; 4];
                for v in e {
                    prof[assignment[*v as usize] as usize] += 1;
                }
                if mode.conforms(&prof) {
                    gained += 1;
                }
            }
            recurse(
                depth + 1,
                n,
                parts,
                conforming + gained,
                mode,
                edges_by_max,
                assignment,
                best,
            );
        }
    }
    recurse(
        0,
        n as usize,
        parts,
        0,
        mode,
        &edges_by_max,
        &mut assignment,
        &mut best,
    );
    let (objective, assignment) = best.expect("n >= 1 yields at least one assignment");
    let partition = Partition::new(mode, assignment)?;
    let d = decompose(h, &partition)?;
    Ok(StabilityReport {
        locally_optimal: true,
        objective,
        bad_count: d.bad.len() as u64,
        good_count: d.good.len() as u64,
        missing_count: d.missing_count,
        edit_distance: d.bad.len() as u64 + d.missing_count,
        restarts: 0,
        seed: 0,
        partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::hypergraph::Edge4;

    #[test]
    fn decompose_d4_defining_partition_is_clean() {
        let c = constructions::d4(10);
        let d = decompose(&c.hypergraph, &c.partition).unwrap();
        assert!(d.bad.is_empty());
        assert_eq!(d.missing_count, 0);
        assert_eq!(d.objective(), c.hypergraph.edge_count());
    }

    #[test]
    fn removing_one_edge_shows_up_in_missing() {
        let c = constructions::d4(10);
        let e = *c.hypergraph.edges().next().unwrap();
        let h = c.hypergraph.without_edge(&e).unwrap();
        let d = decompose(&h, &c.partition).unwrap();
        assert_eq!(d.missing_count, 1);
        assert_eq!(missing_tuples(&h, &c.partition).unwrap(), vec![e]);
    }

    #[test]
    fn missing_count_on_empty_host_odd_odd_4_4() {
        let h = Hypergraph4::new(8);
        let p = Partition::from_ranges(PartitionMode::OddOdd, &[4, 4]).unwrap();
        let d = decompose(&h, &p).unwrap();
        // 3+1 tuples: C(4,3)*4 on each side.
        assert_eq!(d.missing_count, 32);
        assert_eq!(missing_tuples(&h, &p).unwrap().len(), 32);
    }

    #[test]
    fn bad_plus_good_is_everything() {
        let c = constructions::sharpness_p3(12, 1).unwrap();
        let d = decompose(&c.hypergraph, &c.partition).unwrap();
        assert_eq!(
            d.bad.len() as u64 + d.good.len() as u64,
            c.hypergraph.edge_count()
        );
        assert_eq!(d.bad, c.added_edges);
    }

    #[test]
    fn exact_on_single_edge_odd_odd() {
        let mut h = Hypergraph4::new(4);
        h.add_edge(Edge4::new([0, 1, 2, 3]).unwrap()).unwrap();
        let r = exact_partition(&h, PartitionMode::OddOdd).unwrap();
        assert_eq!(r.objective, 1);
    }

    #[test]
    fn exact_on_d4_8_two_two() {
        let c = constructions::d4(8);
        let r = exact_partition(&c.hypergraph, PartitionMode::TwoTwo).unwrap();
        assert_eq!(r.objective, 36);
        assert_eq!(r.bad_count, 0);
        assert_eq!(r.missing_count, 0);
    }

    #[test]
    fn optimize_matches_exact_on_b4_10() {
        let c = constructions::b4(10).unwrap();
        let exact = exact_partition(&c.hypergraph, PartitionMode::OddOdd).unwrap();
        let local = optimize_partition(
            &c.hypergraph,
            PartitionMode::OddOdd,
            16,
            1729,
            std::slice::from_ref(&c.partition),
        )
        .unwrap();
        assert_eq!(local.objective, exact.objective);
        assert!(local.locally_optimal);
    }

    #[test]
    fn optimize_is_deterministic_for_a_seed() {
        let c = constructions::b4(12).unwrap();
        let run = || {
            optimize_partition(&c.hypergraph, PartitionMode::OddOdd, 8, 99, &[]).unwrap()
        };
        let (a, b) = (run(), run());
        assert_eq!(a.objective, b.objective);
        assert_eq!(a.partition, b.partition);
    }

    #[test]
    fn exact_bound_is_enforced() {
        let h = Hypergraph4::new(30);
        assert!(matches!(
            exact_partition(&h, PartitionMode::TwoTwo),
            Err(Error::EnumerationBound(_))
        ));
        let h = Hypergraph4::new(14);
        assert!(exact_partition(&h, PartitionMode::Transversal4).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!(
            PartitionMode::parse("two_two").unwrap(),
            PartitionMode::TwoTwo
        );
        assert_eq!(
            PartitionMode::parse("ODD-ODD").unwrap(),
            PartitionMode::OddOdd
        );
        assert!(PartitionMode::parse("threeway").is_err());
    }
}
