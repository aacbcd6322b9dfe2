//! Exact maximum edge counts of pattern-free hosts at tiny sizes.
//!
//! Branch and bound over the lexicographically ordered candidate edges:
//! each candidate is either taken (when it creates no pattern copy, checked
//! incrementally through the added edge only) or skipped. Two prunes are
//! applied, both exactness-preserving:
//!
//! * Size bound: a subtree whose current edge count plus remaining candidates
//!   cannot beat the best known value is cut.
//! * First-edge pinning: any pattern-free host with at least one edge is
//!   isomorphic, via relabelling one of its edges onto `{0,1,2,3}`, to a host
//!   containing the first candidate, so the search roots at that edge and the
//!   edgeless host is covered by the initial bound. No vertex-degree-ordering
//!   prune is applied: combined with the pinned first edge there is no
//!   formulation of it that provably keeps the search exact.
//!
//! When the pattern is one of the built-ins the search starts from the
//! matching extremal family as an initial witness.

use crate::constructions;
use crate::count::{count_copies, exists_copy_through_edge};
use crate::error::Result;
use crate::hypergraph::{Edge4, Hypergraph4};
use crate::pattern::{BuiltinPattern, Pattern};
use crate::util::four_subsets;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStatus {
    /// The search space was exhausted; the value is the exact maximum.
    Exact,
    /// The budget ran out; the value is the best witness found.
    LowerBound,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Exact => "exact",
            SearchStatus::LowerBound => "lower_bound",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TuranResult {
    pub n: u32,
    pub pattern: String,
    pub value: u64,
    pub status: SearchStatus,
    pub witness: Hypergraph4,
    pub nodes_explored: u64,
}

struct SearchCtx<'a> {
    f: &'a Pattern,
    candidates: Vec<Edge4>,
    budget: SearchBudget,
    started: Instant,
    nodes: u64,
    exhausted: bool,
    best_value: u64,
    best_witness: Hypergraph4,
}

impl<'a> SearchCtx<'a> {
    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes {
            self.exhausted = false;
            return true;
        }
        if self.nodes % 4096 == 0 && self.started.elapsed() >= self.budget.max_time {
            self.exhausted = false;
            return true;
        }
        false
    }

    fn consider(&mut self, h: &Hypergraph4) {
        let count = h.edge_count();
        if count > self.best_value {
            self.best_value = count;
            self.best_witness = h.clone();
        }
    }

    fn dfs(&mut self, i: usize, h: &mut Hypergraph4) -> Result<()> {
        self.nodes += 1;
        if self.out_of_budget() {
            return Ok(());
        }
        let remaining = (self.candidates.len() - i) as u64;
        if h.edge_count() + remaining <= self.best_value {
            return Ok(());
        }
        if i == self.candidates.len() {
            return Ok(());
        }
        let e = self.candidates[i];
        h.add_edge(e)?;
        if !exists_copy_through_edge(h, self.f, &e)? {
            self.consider(h);
            self.dfs(i + 1, h)?;
        }
        h.remove_edge(&e)?;
        self.dfs(i + 1, h)
    }
}

/// Seed witness when the pattern literally equals a built-in.
fn construction_seed(n: u32, f: &Pattern) -> Option<Hypergraph4> {
    match f.as_builtin()? {
        BuiltinPattern::P2 => Some(constructions::t4(n).hypergraph),
        BuiltinPattern::P3 => Some(constructions::d4(n).hypergraph),
        BuiltinPattern::P4 | BuiltinPattern::C3 => {
            constructions::b4(n).ok().map(|c| c.hypergraph)
        }
    }
}

pub fn exact_ex(n: u32, f: &Pattern, budget: SearchBudget) -> Result<TuranResult> {
    let mut best_witness = Hypergraph4::new(n);
    let mut best_value = 0u64;
    if let Some(seed) = construction_seed(n, f) {
        // The families are pattern-free by construction; keep an eye on it.
        debug_assert_eq!(count_copies(&seed, f)?.0, 0);
        best_value = seed.edge_count();
        best_witness = seed;
    }
    let mut ctx = SearchCtx {
        f,
        candidates: four_subsets(n).map(|s| Edge4::new(s).unwrap()).collect(),
        budget,
        started: Instant::now(),
        nodes: 0,
        exhausted: true,
        best_value,
        best_witness,
    };
    if !ctx.candidates.is_empty() {
        let first = ctx.candidates[0];
        let mut h = Hypergraph4::new(n);
        h.add_edge(first)?;
        if exists_copy_through_edge(&h, f, &first)? {
            // A single edge already forms a copy, so no nonempty host is
            // pattern-free and the empty host is optimal.
            ctx.best_value = ctx.best_value.max(0);
        } else {
            ctx.consider(&h);
            ctx.dfs(1, &mut h)?;
        }
    }
    // The returned witness must actually avoid the pattern.
    assert_eq!(
        count_copies(&ctx.best_witness, f)?.0,
        0,
        "witness contains the pattern; search is buggy"
    );
    assert_eq!(ctx.best_witness.edge_count(), ctx.best_value);
    Ok(TuranResult {
        n,
        pattern: f.display_name(),
        value: ctx.best_value,
        status: if ctx.exhausted {
            SearchStatus::Exact
        } else {
            SearchStatus::LowerBound
        },
        witness: ctx.best_witness,
        nodes_explored: ctx.nodes,
    })
}
