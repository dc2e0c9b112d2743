//! Rainbow subgraph detection in edge-coloured complete graphs.
//!
//! Same search skeleton as [`crate::subgraph`]: pattern vertices in
//! connectivity-first order, host vertices ascending, increasing images for
//! pattern twins, and only the smallest unused vertex of each host twin class.
//! Host vertices `u`, `v` are twins when swapping them maps the colour classes
//! onto colour classes.

use crate::coloring::Coloring;
use crate::error::{resource, Result};
use crate::family::GraphFamily;
use crate::graph::{Graph, MAX_SEARCH_VERTICES};
use crate::subgraph::{above, below, twin_masks, PatternPlan};

/// Whether some copy of `pattern` in `K_n` has pairwise distinct edge colours.
pub fn has_rainbow_copy(c: &Coloring, pattern: &Graph) -> Result<bool> {
    Ok(find_rainbow_copy(c, pattern)?.is_some())
}

/// The first rainbow embedding `pattern vertex -> vertex of K_n`, if any.
pub fn find_rainbow_copy(c: &Coloring, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    RainbowHost::new(c)?.find(pattern)
}

/// Whether no member of `f` has a rainbow copy.
pub fn is_family_free(c: &Coloring, f: &GraphFamily) -> Result<bool> {
    let host = RainbowHost::new(c)?;
    for g in f.iter() {
        if host.find(g)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A colouring prepared for repeated rainbow queries.
pub struct RainbowHost {
    n: usize,
    /// `col[u * n + v]`, dense colours `0..num_colors`.
    col: Vec<u32>,
    num_colors: usize,
    twin: Vec<u64>,
}

impl RainbowHost {
    pub fn new(c: &Coloring) -> Result<Self> {
        let n = c.n();
        if n > MAX_SEARCH_VERTICES {
            return resource(format!(
                "rainbow search limited to {MAX_SEARCH_VERTICES} vertices, got {n}"
            ));
        }
        let norm = c.normalize();
        let mut col = vec![u32::MAX; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    col[u * n + v] = norm.color(u, v);
                }
            }
        }
        let num_colors = norm.num_colors();
        let twin = twin_masks(n, |u, v| swap_preserves_classes(&col, n, num_colors, u, v));
        Ok(RainbowHost { n, col, num_colors, twin })
    }

    pub fn find(&self, pattern: &Graph) -> Result<Option<Vec<usize>>> {
        if pattern.n() > self.n || pattern.edge_count() > self.num_colors {
            return Ok(None);
        }
        let plan = PatternPlan::new(pattern);
        // pattern edges still to place after each position
        let mut remaining = vec![0usize; plan.len() + 1];
        for i in (0..plan.len()).rev() {
            remaining[i] = remaining[i + 1] + plan.back[i].len();
        }
        let mut s = Search {
            host: self,
            plan: &plan,
            remaining: &remaining,
            img: vec![0; plan.len()],
            used_color: vec![false; self.num_colors],
            colors_used: 0,
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
}

/// Whether the transposition `(u v)` induces a well-defined map on colours.
fn swap_preserves_classes(col: &[u32], n: usize, num_colors: usize, u: usize, v: usize) -> bool {
    let mut map = vec![u32::MAX; num_colors];
    let swap = |x: usize| if x == u { v } else if x == v { u } else { x };
    for a in 0..n {
        for b in a + 1..n {
            let c1 = col[a * n + b];
            let c2 = col[swap(a) * n + swap(b)];
            let slot = &mut map[c1 as usize];
            if *slot == u32::MAX {
                *slot = c2;
            } else if *slot != c2 {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    host: &'a RainbowHost,
    plan: &'a PatternPlan,
    remaining: &'a [usize],
    img: Vec<usize>,
    used_color: Vec<bool>,
    colors_used: usize,
}

impl Search<'_> {
    fn rec(&mut self, pos: usize, used: u64) -> bool {
        if pos == self.plan.len() {
            return true;
        }
        if self.host.num_colors - self.colors_used < self.remaining[pos] {
            return false;
        }
        let n = self.host.n;
        let mut cand = crate::chromatic::full_mask(n) & !used;
        if let Some(t) = self.plan.twin_prev[pos] {
            cand &= above(self.img[t]);
        }
        let back = &self.plan.back[pos];
        let mut fresh: Vec<u32> = Vec::with_capacity(back.len());
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host.twin[v] & !used & below(v) != 0 {
                continue;
            }
            fresh.clear();
            let mut ok = true;
            for &j in back {
                let c = self.host.col[self.img[j] * n + v];
                if self.used_color[c as usize] || fresh.contains(&c) {
                    ok = false;
                    break;
                }
                fresh.push(c);
            }
            if !ok {
                continue;
            }
            for &c in &fresh {
                self.used_color[c as usize] = true;
            }
            self.colors_used += fresh.len();
            self.img[pos] = v;
            if self.rec(pos + 1, used | 1 << v) {
                return true;
            }
            for &c in &fresh {
                self.used_color[c as usize] = false;
            }
            self.colors_used -= fresh.len();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn rainbow_embedding(c: &Coloring, p: &Graph, map: &[usize]) -> bool {
        let mut cols: Vec<u32> = p.edges().iter().map(|&(a, b)| c.color(map[a], map[b])).collect();
        cols.sort_unstable();
        let len = cols.len();
        cols.dedup();
        let mut verts = map.to_vec();
        verts.sort_unstable();
        verts.dedup();
        cols.len() == len && verts.len() == map.len()
    }

    #[test]
    fn trivial_cases() {
        assert!(has_rainbow_copy(&Coloring::rainbow(3), &complete(3)).unwrap());
        for n in 2..8 {
            assert!(!has_rainbow_copy(&Coloring::monochromatic(n), &path(3)).unwrap());
            assert!(has_rainbow_copy(&Coloring::monochromatic(n), &complete(2)).unwrap());
        }
        assert!(!has_rainbow_copy(&Coloring::rainbow(4), &complete(5)).unwrap());
    }

    #[test]
    fn witness_is_rainbow() {
        // colour by min endpoint: no rainbow triangle, rainbow paths exist
        let c = Coloring::from_fn(7, |u, _| u as u32);
        assert!(!has_rainbow_copy(&c, &complete(3)).unwrap());
        let w = find_rainbow_copy(&c, &path(4)).unwrap().unwrap();
        assert!(rainbow_embedding(&c, &path(4), &w));
    }

    #[test]
    fn turan_extremal_has_no_rainbow_clique() {
        // rainbow T(6,2) with one extra colour inside the classes
        let cls = |v: usize| v % 2;
        let mut next = 1;
        let c = Coloring::from_fn(6, |u, v| {
            if cls(u) == cls(v) {
                0
            } else {
                next += 1;
                next
            }
        });
        assert!(!has_rainbow_copy(&c, &complete(4)).unwrap());
        assert!(has_rainbow_copy(&c, &complete(3)).unwrap());
    }
}
