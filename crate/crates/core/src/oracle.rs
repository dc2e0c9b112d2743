//! Exact anti-Ramsey numbers of small complete graphs by exhaustive search.
//!
//! Edges of `K_n` are coloured in lexicographic order by restricted-growth strings
//! (edge `i` reuses a colour already seen or opens the next one), so colour names
//! carry no symmetry. A branch dies as soon as a fully coloured copy of a member is
//! rainbow, or when it cannot beat the best colouring found so far.

use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::{edge_index, Coloring};
use crate::error::{arg, Error, Result};
use crate::family::GraphFamily;
use crate::graph::complete;
use crate::rainbow::is_family_free;
use crate::subgraph::for_each_embedding;

/// Largest `n` the oracle accepts.
pub const ORACLE_MAX_N: usize = 8;

pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Search-tree node limit.
    pub budget: u64,
    /// Cut branches whose coloured prefix already holds a rainbow copy. When off,
    /// only complete colourings are tested.
    pub prune_rainbow: bool,
    /// Cut branches that cannot exceed the best colour count found so far.
    pub prune_bound: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: DEFAULT_BUDGET, prune_rainbow: true, prune_bound: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArStatus {
    Exact,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArResult {
    pub n: usize,
    pub status: ArStatus,
    /// The exact value when `status` is `Exact`.
    pub value: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    /// An `F`-free colouring with `lower` colours.
    pub witness: Coloring,
    pub nodes_explored: u64,
}

impl ArResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serialises")
    }
}

/// `AR(n, f)` with the default options.
pub fn ar_exact(n: usize, f: &GraphFamily, budget: u64) -> Result<ArResult> {
    ar_exact_with(n, f, &OracleOptions { budget, ..Default::default() }, |_, _| {})
}

/// `AR(n, f)`; `on_improve(best, nodes)` is called whenever a better colouring is found.
pub fn ar_exact_with(
    n: usize,
    f: &GraphFamily,
    opts: &OracleOptions,
    mut on_improve: impl FnMut(u64, u64),
) -> Result<ArResult> {
    if f.is_empty() {
        return arg("family is empty");
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Resource(format!("oracle limited to n <= {ORACLE_MAX_N}, got {n}")));
    }
    if f.max_vertices() > n {
        return arg(format!("members need {} vertices, K_{n} has {n}", f.max_vertices()));
    }
    if let Some(g) = f.iter().find(|g| g.edge_count() < 2) {
        return arg(format!("member {g:?} has fewer than two edges, so no colouring avoids it"));
    }
    let m = n * n.saturating_sub(1) / 2;
    let by_last = copies_by_last_edge(n, f)?;
    let mut s = Search {
        m,
        by_last: &by_last,
        opts,
        colors: vec![0; m],
        // monochromatic colourings are free of members with two or more edges
        best: 1,
        best_colors: vec![0; m],
        nodes: 0,
        exhausted: false,
        upper: 0,
        on_improve: &mut on_improve,
    };
    s.rec(0, 0);
    let witness = Coloring::new(n, s.best_colors.clone())?;
    let (status, value, upper) = if s.exhausted {
        (ArStatus::BudgetExhausted, None, s.upper.max(s.best))
    } else {
        (ArStatus::Exact, Some(s.best), s.best)
    };
    Ok(ArResult { n, status, value, lower: s.best, upper, witness, nodes_explored: s.nodes })
}

/// Every copy of every member in `K_n`, as edge-index sets grouped by their largest edge.
fn copies_by_last_edge(n: usize, f: &GraphFamily) -> Result<Vec<Vec<Vec<usize>>>> {
    let m = n * n.saturating_sub(1) / 2;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let host = complete(n);
    for g in f.iter() {
        for_each_embedding(g, &host, |map| {
            let mut set: Vec<usize> = g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (u, v) = (map[a].min(map[b]), map[a].max(map[b]));
                    edge_index(n, u, v)
                })
                .collect();
            set.sort_unstable();
            seen.insert(set);
            true
        })?;
    }
    let mut by_last = vec![Vec::new(); m];
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort_unstable();
    for set in all {
        let last = *set.last().expect("members have edges");
        by_last[last].push(set);
    }
    Ok(by_last)
}

struct Search<'a, F: FnMut(u64, u64)> {
    m: usize,
    by_last: &'a [Vec<Vec<usize>>],
    opts: &'a OracleOptions,
    colors: Vec<u32>,
    best: u64,
    best_colors: Vec<u32>,
    nodes: u64,
    exhausted: bool,
    /// Largest bound among branches abandoned when the budget ran out.
    upper: u64,
    on_improve: &'a mut F,
}

impl<F: FnMut(u64, u64)> Search<'_, F> {
    fn rainbow_ending_at(&self, i: usize) -> bool {
        self.by_last[i].iter().any(|set| {
            let mut seen = 0u64;
            set.iter().all(|&e| {
                let bit = 1u64 << self.colors[e];
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    /// Colours edges `i..` given `used` colours on edges `..i`.
    fn rec(&mut self, i: usize, used: u32) {
        if i == self.m {
            if !self.opts.prune_rainbow && (0..self.m).any(|e| self.rainbow_ending_at(e)) {
                return;
            }
            if used as u64 > self.best {
                self.best = used as u64;
                self.best_colors = self.colors.clone();
                (self.on_improve)(self.best, self.nodes);
            }
            return;
        }
        let remaining = (self.m - i) as u64;
        // try opening a new colour first, then reuse colours from the newest down
        let mut choices = (0..=used).rev();
        while let Some(c) = choices.next() {
            let after = used.max(c + 1) as u64;
            if self.opts.prune_bound && after + remaining - 1 <= self.best {
                continue;
            }
            if self.nodes >= self.opts.budget {
                self.exhausted = true;
                self.upper = self.upper.max(after + remaining - 1);
                for c in choices.by_ref() {
                    self.upper = self.upper.max(used.max(c + 1) as u64 + remaining - 1);
                }
                return;
            }
            self.nodes += 1;
            self.colors[i] = c;
            if self.opts.prune_rainbow && self.rainbow_ending_at(i) {
                continue;
            }
            self.rec(i + 1, after as u32);
        }
    }
}

/// `num_colors(c)`, certified as a lower bound on `AR(n, f)` by checking that `c` is `f`-free.
pub fn ar_lower_from_construction(c: &Coloring, f: &GraphFamily) -> Result<u64> {
    if !is_family_free(c, f)? {
        return Err(Error::Contract("colouring contains a rainbow member of the family".into()));
    }
    Ok(c.num_colors() as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    OracleBelow,
    OracleAbove,
    /// The formula value lies inside the oracle's bounds.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub formula: u64,
    pub verdict: Verdict,
    pub oracle: ArResult,
}

/// Compares `AR(n, f)` with a formula value. The formulas are asymptotic, so any verdict
/// is reported, not asserted.
pub fn ar_cross_check(n: usize, f: &GraphFamily, formula: u64, budget: u64) -> Result<CrossCheck> {
    let oracle = ar_exact(n, f, budget)?;
    let verdict = if oracle.upper < formula {
        Verdict::OracleBelow
    } else if oracle.lower > formula {
        Verdict::OracleAbove
    } else if oracle.status == ArStatus::Exact {
        Verdict::Equal
    } else {
        Verdict::Undetermined
    };
    Ok(CrossCheck { formula, verdict, oracle })
}
