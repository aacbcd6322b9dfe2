//! Exact copy counting.
//!
//! A copy of a pattern `F` (on `f` vertices) in a host `H` is a set of `f`
//! host vertices together with `|F|` host edges forming a subhypergraph
//! isomorphic to `F`. Extra host edges among those vertices never disqualify
//! a copy (non-induced semantics). Equivalently, the number of copies is the
//! number of edge-preserving injections from the pattern's vertices into the
//! host, divided by the pattern's automorphism count; the division is always
//! exact because the injections landing on a fixed copy form a coset of the
//! automorphism group.
//!
//! [`count_copies_generic`] implements the injection definition directly by
//! backtracking and serves as the oracle. The specialized counters visit each
//! copy exactly once through a canonical decomposition; the uniqueness
//! arguments are:
//!
//! * Books (`P2`, `P3`, `P4`): in any copy, the `l` edges through the common
//!   triple pairwise intersect in exactly 3 vertices while the closing edge
//!   meets each of them in exactly 1 vertex (its apex). So the shared triple
//!   `S`, the apex set, and the closing edge are all recoverable from the
//!   copy's edge set, and enumerating `(S, apexes, closing edge)` visits each
//!   copy once. The closing edge is disjoint from `S` (the copy has `f = 7`
//!   distinct vertices), which is exactly the disjointness filter below.
//! * `C3`: the three vertex pairs of a copy are the pairwise intersections of
//!   its three edges, hence uniquely determined. Copies therefore biject with
//!   triangles of the auxiliary graph on disjoint vertex pairs where two
//!   pairs are adjacent iff their union is a host edge.
//!
//! All counters use checked 64-bit arithmetic and fail loudly on overflow.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge4, Hypergraph4, VertexId};
use crate::pattern::{automorphism_count, BuiltinPattern, Pattern, MAX_COUNT_VERTICES};
use std::collections::HashSet;

/// How a count was produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    Generic,
    Specialized,
}

impl CountMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            CountMethod::Generic => "generic",
            CountMethod::Specialized => "specialized",
        }
    }
}

fn add(total: &mut u64, amount: u64) -> Result<()> {
    *total = total
        .checked_add(amount)
        .ok_or(Error::Overflow("copy count"))?;
    Ok(())
}

/// Counts copies of `f` in `h`, dispatching to a specialized counter when the
/// pattern literally equals a built-in.
pub fn count_copies(h: &Hypergraph4, f: &Pattern) -> Result<(u64, CountMethod)> {
    match f.as_builtin() {
        Some(b) => Ok((count_builtin(h, b)?, CountMethod::Specialized)),
        None => Ok((count_copies_generic(h, f)?, CountMethod::Generic)),
    }
}

pub fn count_builtin(h: &Hypergraph4, which: BuiltinPattern) -> Result<u64> {
    match which {
        BuiltinPattern::P2 => count_p2(h),
        BuiltinPattern::P3 => count_p3(h),
        BuiltinPattern::P4 => count_p4(h),
        BuiltinPattern::C3 => count_c3(h),
    }
}

// ---------------------------------------------------------------------------
// Generic backtracking counter (the oracle)
// ---------------------------------------------------------------------------

/// Exact copy count per the injection definition. Intended as an oracle for
/// hosts with up to ~16 vertices and patterns with at most 8.
pub fn count_copies_generic(h: &Hypergraph4, f: &Pattern) -> Result<u64> {
    if f.vertex_count() > MAX_COUNT_VERTICES {
        return Err(Error::PatternTooLarge {
            f: f.vertex_count(),
            max: MAX_COUNT_VERTICES,
        });
    }
    if f.vertex_count() > h.vertex_count() {
        return Ok(0);
    }
    let injections = count_injections(h, f)?;
    let aut = automorphism_count(f)?;
    assert_eq!(
        injections % aut,
        0,
        "injection count {injections} not divisible by Aut = {aut}"
    );
    Ok(injections / aut)
}

/// Whether any copy of `f` in `h` uses the edge `e` (in any role).
///
/// Used for incremental forbidden-pattern checks: after adding `e` to a
/// pattern-free host, the result is pattern-free iff this returns false.
pub fn exists_copy_through_edge(h: &Hypergraph4, f: &Pattern, e: &Edge4) -> Result<bool> {
    if !h.has_edge(e) {
        return Err(Error::EdgeNotPresent(e.vertices()));
    }
    if f.vertex_count() > MAX_COUNT_VERTICES {
        return Err(Error::PatternTooLarge {
            f: f.vertex_count(),
            max: MAX_COUNT_VERTICES,
        });
    }
    if f.vertex_count() > h.vertex_count() {
        return Ok(false);
    }
    let ev = e.vertices();
    let mut perm = [0usize; 4];
    for fe in f.edges() {
        let fv = fe.vertices();
        // All 24 ways to map this pattern edge onto e.
        let mut found = false;
        for_each_permutation4(&mut perm, &mut |p| {
            if found {
                return;
            }
            let mut assign = vec![None; f.vertex_count() as usize];
            let mut used = vec![false; h.vertex_count() as usize];
            for i in 0..4 {
                assign[fv[i] as usize] = Some(ev[p[i]]);
                used[ev[p[i]] as usize] = true;
            }
            // The rooted pattern edge maps onto e by construction; other
            // pattern edges are checked as they complete.
            if extend_exists(h, f, &mut assign, &mut used) {
                found = true;
            }
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn for_each_permutation4<F: FnMut(&[usize; 4])>(perm: &mut [usize; 4], visit: &mut F) {
    let mut items = [0usize, 1, 2, 3];
    heap_permute(&mut items, 0, perm, visit);
}

fn heap_permute<F: FnMut(&[usize; 4])>(
    items: &mut [usize; 4],
    at: usize,
    out: &mut [usize; 4],
    visit: &mut F,
) {
    if at == 4 {
        out.copy_from_slice(items);
        visit(out);
        return;
    }
    for i in at..4 {
        items.swap(at, i);
        heap_permute(items, at + 1, out, visit);
        items.swap(at, i);
    }
}

/// Counts edge-preserving injections by backtracking. Pattern vertices are
/// chosen most-constrained first: prefer a vertex that completes a pattern
/// edge, since its candidates come from the link of an already-mapped triple
/// instead of the whole host.
fn count_injections(h: &Hypergraph4, f: &Pattern) -> Result<u64> {
    let mut assign = vec![None; f.vertex_count() as usize];
    let mut used = vec![false; h.vertex_count() as usize];
    let mut total = 0u64;
    extend_count(h, f, &mut assign, &mut used, &mut total)?;
    Ok(total)
}

/// Picks the next pattern vertex to assign: most completing edges first, then
/// most edges touching assigned vertices, then highest degree, then lowest id.
fn choose_vertex(f: &Pattern, assign: &[Option<VertexId>]) -> Option<usize> {
    let mut best: Option<(usize, (usize, usize, usize))> = None;
    for u in 0..assign.len() {
        if assign[u].is_some() {
            continue;
        }
        let mut completing = 0;
        let mut touching = 0;
        let mut degree = 0;
        for e in f.edges() {
            if !e.contains(u as VertexId) {
                continue;
            }
            degree += 1;
            let assigned_others = e
                .vertices()
                .iter()
                .filter(|v| **v != u as VertexId && assign[**v as usize].is_some())
                .count();
            if assigned_others == 3 {
                completing += 1;
            }
            if assigned_others > 0 {
                touching += 1;
            }
        }
        let score = (completing, touching, degree);
        let better = match &best {
            None => true,
            Some((_, s)) => score > *s,
        };
        if better {
            best = Some((u, score));
        }
    }
    best.map(|(u, _)| u)
}

/// Candidate host vertices for pattern vertex `u`, given the partial map.
/// When `u` completes at least one pattern edge the candidates come from the
/// smallest link over those edges and the rest are verified by membership;
/// otherwise every unused host vertex is a candidate (no edge completes, so
/// nothing to verify at this step).
fn candidates_for(
    h: &Hypergraph4,
    f: &Pattern,
    u: usize,
    assign: &[Option<VertexId>],
    used: &[bool],
) -> Vec<VertexId> {
    let mut completing: Vec<[VertexId; 3]> = Vec::new();
    for e in f.edges() {
        if !e.contains(u as VertexId) {
            continue;
        }
        let others: Vec<Option<VertexId>> = e
            .vertices()
            .iter()
            .filter(|v| **v != u as VertexId)
            .map(|v| assign[*v as usize])
            .collect();
        if others.iter().all(Option::is_some) {
            completing.push([
                others[0].unwrap(),
                others[1].unwrap(),
                others[2].unwrap(),
            ]);
        }
    }
    if completing.is_empty() {
        return (0..h.vertex_count()).filter(|v| !used[*v as usize]).collect();
    }
    let idx = h.index();
    let links: Vec<&[VertexId]> = completing
        .iter()
        .map(|t| idx.triple_link(t[0], t[1], t[2]))
        .collect();
    let smallest = links
        .iter()
        .enumerate()
        .min_by_key(|(_, l)| l.len())
        .map(|(i, _)| i)
        .unwrap();
    links[smallest]
        .iter()
        .copied()
        .filter(|w| !used[*w as usize])
        .filter(|w| {
            links.iter().enumerate().all(|(i, l)| i == smallest || l.contains(w))
        })
        .collect()
}

fn extend_count(
    h: &Hypergraph4,
    f: &Pattern,
    assign: &mut [Option<VertexId>],
    used: &mut [bool],
    total: &mut u64,
) -> Result<()> {
    let u = match choose_vertex(f, assign) {
        None => {
            return add(total, 1);
        }
        Some(u) => u,
    };
    for w in candidates_for(h, f, u, assign, used) {
        assign[u] = Some(w);
        used[w as usize] = true;
        extend_count(h, f, assign, used, total)?;
        assign[u] = None;
        used[w as usize] = false;
    }
    Ok(())
}

fn extend_exists(
    h: &Hypergraph4,
    f: &Pattern,
    assign: &mut [Option<VertexId>],
    used: &mut [bool],
) -> bool {
    let u = match choose_vertex(f, assign) {
        None => return true,
        Some(u) => u,
    };
    for w in candidates_for(h, f, u, assign, used) {
        assign[u] = Some(w);
        used[w as usize] = true;
        let hit = extend_exists(h, f, assign, used);
        assign[u] = None;
        used[w as usize] = false;
        if hit {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Specialized counters
// ---------------------------------------------------------------------------

/// Copies of `P2`: for each triple `S`, each apex pair from `link(S)`, and
/// each edge through the apex pair disjoint from `S`.
pub fn count_p2(h: &Hypergraph4) -> Result<u64> {
    let idx = h.index();
    let mut total = 0u64;
    for (triple, link) in idx.triples() {
        if link.len() < 2 {
            continue;
        }
        for i in 0..link.len() {
            for j in (i + 1)..link.len() {
                let (a, b) = (link[i], link[j]);
                let spines = idx
                    .pair_completions(a, b)
                    .iter()
                    .filter(|(c, d)| !triple.contains(c) && !triple.contains(d))
                    .count() as u64;
                add(&mut total, spines)?;
            }
        }
    }
    Ok(total)
}

/// Copies of `P3`: for each triple `S`, each apex 3-subset of `link(S)`, and
/// each fourth vertex of the closing edge outside `S`.
pub fn count_p3(h: &Hypergraph4) -> Result<u64> {
    let idx = h.index();
    let mut total = 0u64;
    for (triple, link) in idx.triples() {
        if link.len() < 3 {
            continue;
        }
        for i in 0..link.len() {
            for j in (i + 1)..link.len() {
                for k in (j + 1)..link.len() {
                    let closing = idx
                        .triple_link(link[i], link[j], link[k])
                        .iter()
                        .filter(|w| !triple.contains(w))
                        .count() as u64;
                    add(&mut total, closing)?;
                }
            }
        }
    }
    Ok(total)
}

/// Copies of `P4`: for each host edge `e` (the closing edge) count triples
/// `S` disjoint from `e` with `S + {x}` an edge for every `x` in `e`.
pub fn count_p4(h: &Hypergraph4) -> Result<u64> {
    let n = h.vertex_count() as usize;
    let mut triples_of: Vec<HashSet<[VertexId; 3]>> = vec![HashSet::new(); n];
    for e in h.edges() {
        let v = e.vertices();
        for i in 0..4 {
            let mut t = [0; 3];
            let mut w = 0;
            for k in 0..4 {
                if k != i {
                    t[w] = v[k];
                    w += 1;
                }
            }
            triples_of[v[i] as usize].insert(t);
        }
    }
    let mut total = 0u64;
    for e in h.edges() {
        let v = e.vertices();
        let x0 = *v
            .iter()
            .min_by_key(|x| triples_of[**x as usize].len())
            .unwrap();
        let rest: Vec<VertexId> = v.iter().copied().filter(|x| *x != x0).collect();
        let hits = triples_of[x0 as usize]
            .iter()
            .filter(|s| s.iter().all(|w| !e.contains(*w)))
            .filter(|s| rest.iter().all(|x| triples_of[*x as usize].contains(*s)))
            .count() as u64;
        add(&mut total, hits)?;
    }
    Ok(total)
}

/// Copies of `C3`: triangles of the auxiliary graph on vertex pairs, where
/// two disjoint pairs are adjacent iff their union is a host edge.
pub fn count_c3(h: &Hypergraph4) -> Result<u64> {
    let n = h.vertex_count() as usize;
    if n < 6 {
        return Ok(0);
    }
    // Lexicographic pair ids: {a,b} with a < b.
    let mut offset = vec![0usize; n];
    let mut acc = 0;
    for a in 0..n {
        offset[a] = acc;
        acc += n - a - 1;
    }
    let num_pairs = acc;
    let pair_id = |a: usize, b: usize| offset[a] + (b - a - 1);
    let words = num_pairs.div_ceil(64);
    let mut adj = vec![0u64; num_pairs * words];
    let mut aux_edges: Vec<(usize, usize)> = Vec::new();
    for e in h.edges() {
        let v = e.vertices().map(|x| x as usize);
        for (p, q) in [
            ((v[0], v[1]), (v[2], v[3])),
            ((v[0], v[2]), (v[1], v[3])),
            ((v[0], v[3]), (v[1], v[2])),
        ] {
            let pi = pair_id(p.0, p.1);
            let qi = pair_id(q.0, q.1);
            adj[pi * words + qi / 64] |= 1 << (qi % 64);
            adj[qi * words + pi / 64] |= 1 << (pi % 64);
            aux_edges.push((pi.min(qi), pi.max(qi)));
        }
    }
    let mut total = 0u64;
    for (p, q) in aux_edges {
        // Third pair must rank above q so each triangle is counted once.
        let row_p = &adj[p * words..(p + 1) * words];
        let row_q = &adj[q * words..(q + 1) * words];
        let start = q + 1;
        for w in (start / 64)..words {
            let mut bits = row_p[w] & row_q[w];
            if w == start / 64 {
                bits &= !0u64 << (start % 64);
            }
            add(&mut total, bits.count_ones() as u64)?;
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Through-edge counts
// ---------------------------------------------------------------------------

/// Number of copies of `f` whose edge set includes `e`, with `e` permitted in
/// every role. Computed as the deletion difference
/// `count(H) - count(H - e)`, which equals the through-count because every
/// copy of `H` either avoids `e` (and survives the deletion) or contains it.
pub fn count_through_edge(h: &Hypergraph4, f: &Pattern, e: &Edge4) -> Result<u64> {
    if !h.has_edge(e) {
        return Err(Error::EdgeNotPresent(e.vertices()));
    }
    let (with, _) = count_copies(h, f)?;
    let without = count_copies(&h.without_edge(e)?, f)?.0;
    Ok(with - without)
}
