//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are placed in a connectivity-first order (most placed
//! neighbours, then highest degree, then lowest index) and host candidates
//! are tried in ascending order, so the witness returned is the
//! lexicographically first embedding with respect to that order. Two
//! symmetry reductions are applied; both keep that first embedding:
//!
//! * twin pattern vertices (equal neighbourhoods) receive increasing images;
//! * among unused host twins only the smallest is tried.

use crate::error::{resource, Result};
use crate::graph::{Graph, MAX_SEARCH_VERTICES};

/// Search order and per-position constraints derived from a pattern.
#[derive(Debug, Clone)]
pub(crate) struct PatternPlan {
    /// Pattern vertex placed at each position.
    pub order: Vec<usize>,
    /// Earlier positions adjacent to each position.
    pub back: Vec<Vec<usize>>,
    /// Earlier position of a twin whose image must be smaller.
    pub twin_prev: Vec<Option<usize>>,
    /// Pattern degree at each position.
    pub degree: Vec<usize>,
}

impl PatternPlan {
    pub fn new(pattern: &Graph) -> Self {
        let n = pattern.n();
        let adj = pattern.adjacency_bits();
        let deg: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut placed_mask = 0u64;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    (
                        deg[v] > 0,
                        (adj[v] & placed_mask).count_ones(),
                        deg[v],
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            placed[v] = true;
            placed_mask |= 1 << v;
            order.push(v);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| adj[v] >> order[j] & 1 == 1).collect())
            .collect();
        let twin_prev = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..i).rev().find(|&j| {
                    let w = order[j];
                    adj[v] & !(1 << w) == adj[w] & !(1 << v)
                })
            })
            .collect();
        let degree = order.iter().map(|&v| deg[v]).collect();
        PatternPlan { order, back, twin_prev, degree }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}

/// Assigns each host vertex the smallest member of its twin class.
///
/// `twins(u, v)` must say whether transposing `u` and `v` is a symmetry of the host.
pub(crate) fn twin_masks(n: usize, twins: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0usize; n];
    let mut masks: Vec<u64> = Vec::new();
    for v in 0..n {
        match reps.iter().position(|&r| twins(r, v)) {
            Some(c) => {
                class_of[v] = c;
                masks[c] |= 1 << v;
            }
            None => {
                class_of[v] = reps.len();
                reps.push(v);
                masks.push(1 << v);
            }
        }
    }
    (0..n).map(|v| masks[class_of[v]]).collect()
}

pub(crate) fn below(v: usize) -> u64 {
    (1u64 << v) - 1
}

pub(crate) fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((2u64 << v) - 1)
    }
}

/// Whether `host` contains `pattern` as a (not necessarily induced) subgraph.
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> Result<bool> {
    Ok(find_subgraph(pattern, host)?.is_some())
}

/// An embedding `pattern vertex -> host vertex`, if one exists.
///
/// Isolated pattern vertices only need spare host vertices.
pub fn find_subgraph(pattern: &Graph, host: &Graph) -> Result<Option<Vec<usize>>> {
    if host.n() > MAX_SEARCH_VERTICES {
        return resource(format!(
            "subgraph search limited to {MAX_SEARCH_VERTICES} host vertices, got {}",
            host.n()
        ));
    }
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let plan = PatternPlan::new(pattern);
    let hadj = host.adjacency_bits();
    let hn = host.n();
    let twin = twin_masks(hn, |u, v| hadj[u] & !(1 << v) == hadj[v] & !(1 << u));
    // vertices of host degree >= d, for each d
    let hdeg: Vec<usize> = hadj.iter().map(|r| r.count_ones() as usize).collect();
    let max_d = plan.degree.iter().copied().max().unwrap_or(0);
    let deg_ok: Vec<u64> = (0..=max_d)
        .map(|d| (0..hn).filter(|&v| hdeg[v] >= d).fold(0, |m, v| m | 1 << v))
        .collect();
    let mut s = PlainSearch {
        plan: &plan,
        hadj: &hadj,
        twin: &twin,
        deg_ok: &deg_ok,
        all: crate::chromatic::full_mask(hn),
        img: vec![usize::MAX; plan.len()],
    };
    if !s.rec(0, 0) {
        return Ok(None);
    }
    let mut map = vec![0; pattern.n()];
    for (i, &v) in plan.order.iter().enumerate() {
        map[v] = s.img[i];
    }
    Ok(Some(map))
}

/// Calls `visit` with every embedding `pattern vertex -> host vertex` (no symmetry reduction).
/// Stops early when `visit` returns `false`.
pub fn for_each_embedding(
    pattern: &Graph,
    host: &Graph,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    if host.n() > MAX_SEARCH_VERTICES {
        return resource(format!(
            "subgraph search limited to {MAX_SEARCH_VERTICES} host vertices, got {}",
            host.n()
        ));
    }
    if pattern.n() > host.n() {
        return Ok(());
    }
    let plan = PatternPlan::new(pattern);
    let hadj = host.adjacency_bits();
    let all = crate::chromatic::full_mask(host.n());
    let mut img = vec![0usize; plan.len()];
    let mut map = vec![0usize; plan.len()];
    fn rec(
        plan: &PatternPlan,
        hadj: &[u64],
        all: u64,
        pos: usize,
        used: u64,
        img: &mut [usize],
        map: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == plan.len() {
            for (i, &v) in plan.order.iter().enumerate() {
                map[v] = img[i];
            }
            return visit(map);
        }
        let mut cand = all & !used;
        for &j in &plan.back[pos] {
            cand &= hadj[img[j]];
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            img[pos] = v;
            if !rec(plan, hadj, all, pos + 1, used | 1 << v, img, map, visit) {
                return false;
            }
        }
        true
    }
    rec(&plan, &hadj, all, 0, 0, &mut img, &mut map, &mut visit);
    Ok(())
}

struct PlainSearch<'a> {
    plan: &'a PatternPlan,
    hadj: &'a [u64],
    twin: &'a [u64],
    deg_ok: &'a [u64],
    all: u64,
    img: Vec<usize>,
}

impl PlainSearch<'_> {
    fn rec(&mut self, pos: usize, used: u64) -> bool {
        if pos == self.plan.len() {
            return true;
        }
        let mut cand = self.all & !used & self.deg_ok[self.plan.degree[pos]];
        for &j in &self.plan.back[pos] {
            cand &= self.hadj[self.img[j]];
        }
        if let Some(t) = self.plan.twin_prev[pos] {
            cand &= above(self.img[t]);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.twin[v] & !used & below(v) != 0 {
                continue;
            }
            self.img[pos] = v;
            if self.rec(pos + 1, used | 1 << v) {
                return true;
            }
        }
        false
    }
}
