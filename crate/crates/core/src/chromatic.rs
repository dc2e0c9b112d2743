//! Exact vertex colouring.
//!
//! DSATUR-ordered backtracking on bitset neighbourhoods, bracketed by a greedy
//! clique lower bound and a greedy DSATUR upper bound. Graphs above
//! [`MAX_SEARCH_VERTICES`] are refused with a resource error.

use crate::error::{resource, Result};
use crate::graph::{Graph, MAX_SEARCH_VERTICES};

/// Exact chromatic number. `χ` of the 0-vertex graph is 0.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_limit(g)?;
    let adj = g.adjacency_bits();
    Ok(chromatic_on(&adj, full_mask(g.n())))
}

/// Whether `g` admits a proper colouring with `k` colours.
pub fn is_colorable(g: &Graph, k: usize) -> Result<bool> {
    check_limit(g)?;
    Ok(find_coloring(g, k)?.is_some())
}

/// A proper `k`-colouring (colour per vertex), if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    check_limit(g)?;
    let adj = g.adjacency_bits();
    let mut color = vec![usize::MAX; g.n()];
    let ok = Dsatur::new(&adj, full_mask(g.n()), k).solve(&mut color);
    Ok(ok.then_some(color))
}

fn check_limit(g: &Graph) -> Result<()> {
    if g.n() > MAX_SEARCH_VERTICES {
        return resource(format!(
            "exact colouring limited to {MAX_SEARCH_VERTICES} vertices, got {}",
            g.n()
        ));
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Chromatic number of the subgraph induced by `mask`.
pub(crate) fn chromatic_on(adj: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    if bits(mask).all(|v| adj[v] & mask == 0) {
        return 1;
    }
    let lower = greedy_clique(adj, mask);
    let upper = greedy_upper(adj, mask);
    for k in lower..upper {
        if colorable_on(adj, mask, k) {
            return k;
        }
    }
    upper
}

/// Whether the subgraph induced by `mask` is `k`-colourable.
pub(crate) fn colorable_on(adj: &[u64], mask: u64, k: usize) -> bool {
    if mask == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut color = vec![usize::MAX; adj.len()];
    Dsatur::new(adj, mask, k).solve(&mut color)
}

/// Whether the subgraph induced by `mask` embeds in the complete multipartite graph with
/// class sizes `caps`, i.e. has a proper colouring using colour `i` at most `caps[i]` times.
pub(crate) fn fits_multipartite(adj: &[u64], mask: u64, caps: &[usize]) -> bool {
    if (mask.count_ones() as usize) > caps.iter().sum::<usize>() {
        return false;
    }
    let mut order: Vec<usize> = bits(mask).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & mask).count_ones()));
    let mut classes = vec![0u64; caps.len()];
    fn rec(adj: &[u64], order: &[usize], caps: &[usize], classes: &mut [u64]) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        let mut tried_empty = Vec::new();
        for i in 0..classes.len() {
            let size = classes[i].count_ones() as usize;
            if size >= caps[i] || adj[v] & classes[i] != 0 {
                continue;
            }
            if classes[i] == 0 {
                // empty classes of equal capacity are interchangeable
                if tried_empty.contains(&caps[i]) {
                    continue;
                }
                tried_empty.push(caps[i]);
            }
            classes[i] |= 1 << v;
            if rec(adj, rest, caps, classes) {
                return true;
            }
            classes[i] &= !(1 << v);
        }
        false
    }
    rec(adj, &order, caps, &mut classes)
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn greedy_clique(adj: &[u64], mask: u64) -> usize {
    let mut best = 1;
    for start in bits(mask) {
        let mut cand = adj[start] & mask;
        let mut size = 1;
        while cand != 0 {
            // pick the candidate with the most neighbours among the remaining candidates
            let v = bits(cand)
                .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
                .unwrap();
            size += 1;
            cand &= adj[v];
        }
        best = best.max(size);
    }
    best
}

fn greedy_upper(adj: &[u64], mask: u64) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    let mut left = mask;
    while left != 0 {
        let v = bits(left)
            .max_by_key(|&v| {
                let sat = classes.iter().filter(|&&c| adj[v] & c != 0).count();
                (sat, (adj[v] & mask).count_ones(), std::cmp::Reverse(v))
            })
            .unwrap();
        match classes.iter().position(|&c| adj[v] & c == 0) {
            Some(i) => classes[i] |= 1 << v,
            None => classes.push(1 << v),
        }
        left &= !(1 << v);
    }
    classes.len()
}

struct Dsatur<'a> {
    adj: &'a [u64],
    mask: u64,
    k: usize,
    classes: Vec<u64>,
}

impl<'a> Dsatur<'a> {
    fn new(adj: &'a [u64], mask: u64, k: usize) -> Self {
        Dsatur { adj, mask, k, classes: vec![0; k] }
    }

    fn solve(&mut self, color: &mut [usize]) -> bool {
        self.recurse(self.mask, 0, color)
    }

    fn recurse(&mut self, uncolored: u64, used: usize, color: &mut [usize]) -> bool {
        if uncolored == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0u32);
        for v in bits(uncolored) {
            let sat = self.classes[..used].iter().filter(|&&c| self.adj[v] & c != 0).count();
            if sat >= self.k {
                return false;
            }
            let key = (sat, (self.adj[v] & uncolored).count_ones());
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.adj[v] & self.classes[c] != 0 {
                continue;
            }
            self.classes[c] |= 1 << v;
            color[v] = c;
            if self.recurse(uncolored & !(1 << v), used.max(c + 1), color) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        color[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, turan, Graph};

    fn proper(g: &Graph, col: &[usize]) -> bool {
        g.edges().iter().all(|&(a, b)| col[a] != col[b])
    }

    #[test]
    fn named_graphs() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(9)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(8)).unwrap(), 2);
        assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap(), 1);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let p = petersen();
        let col = find_coloring(&p, 3).unwrap().expect("3-colouring");
        assert!(proper(&p, &col));
        assert!(!is_colorable(&p, 2).unwrap());
        assert_eq!(chromatic_number(&p).unwrap(), 3);
    }

    #[test]
    fn turan_chromatic() {
        for n in 1..13 {
            for p in 1..6 {
                let t = turan(n, p).unwrap();
                assert_eq!(chromatic_number(&t).unwrap(), p.min(n));
            }
        }
    }

    #[test]
    fn capacity_colouring() {
        let star = crate::graph::star(5);
        let adj = star.adjacency_bits();
        assert!(!fits_multipartite(&adj, full_mask(5), &[3, 2]));
        assert!(fits_multipartite(&adj, full_mask(5), &[4, 1]));
        assert!(fits_multipartite(&adj, full_mask(5), &[5, 5]));
        let k4 = complete(4).adjacency_bits();
        assert!(!fits_multipartite(&k4, full_mask(4), &[4, 4, 4]));
        assert!(fits_multipartite(&k4, full_mask(4), &[1, 1, 1, 1]));
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            chromatic_number(&Graph::empty(65)),
            Err(crate::Error::Resource(_))
        ));
    }
}
