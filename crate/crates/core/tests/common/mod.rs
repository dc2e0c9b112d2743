//! Brute-force reference implementations shared by the integration tests.
//! Everything here is deliberately naive: permutations, full assignments and
//! complete enumeration, with no pruning shared with the library.
#![allow(dead_code)]

use antiramsey::{Coloring, Graph};
use itertools::Itertools;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

/// Graph on `n` vertices whose edges are the set bits of `mask` in lexicographic pair order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    graph(n, &edges)
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |m| from_mask(n, m))
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn iso(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let adj = adjacency(b);
    (0..a.n()).permutations(a.n()).any(|pi| a.edges().iter().all(|&(u, v)| adj[pi[u]][pi[v]]))
}

/// Injective maps `pattern -> host` preserving edges.
pub fn embeddings(pattern: &Graph, host: &Graph) -> Vec<Vec<usize>> {
    if pattern.n() > host.n() {
        return Vec::new();
    }
    let adj = adjacency(host);
    (0..host.n())
        .permutations(pattern.n())
        .filter(|pi| pattern.edges().iter().all(|&(u, v)| adj[pi[u]][pi[v]]))
        .collect()
}

pub fn contains(pattern: &Graph, host: &Graph) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    let adj = adjacency(host);
    (0..host.n())
        .permutations(pattern.n())
        .any(|pi| pattern.edges().iter().all(|&(u, v)| adj[pi[u]][pi[v]]))
}

pub fn chromatic(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| {
            std::iter::repeat(0..k)
                .take(g.n())
                .multi_cartesian_product()
                .any(|col| g.edges().iter().all(|&(u, v)| col[u] != col[v]))
        })
        .unwrap()
}

pub fn rainbow_copy(c: &Coloring, pattern: &Graph) -> bool {
    if pattern.n() > c.n() {
        return false;
    }
    (0..c.n()).permutations(pattern.n()).any(|pi| {
        let cols: Vec<u32> = pattern.edges().iter().map(|&(u, v)| c.color(pi[u], pi[v])).collect();
        cols.iter().all_unique()
    })
}

/// All set partitions of `0..m` as restricted-growth strings.
pub fn restricted_growth(m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|s: Vec<u32>| {
                let top = s.iter().max().map_or(0, |&x| x + 1);
                (0..=top).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// `AR(n, F)` by trying every partition of the edges of `K_n`.
pub fn naive_ar(n: usize, family: &[Graph]) -> u64 {
    let m = n * (n - 1) / 2;
    restricted_growth(m)
        .into_iter()
        .filter_map(|cols| {
            let c = Coloring::new(n, cols).unwrap();
            family.iter().all(|g| !rainbow_copy(&c, g)).then(|| c.num_colors() as u64)
        })
        .max()
        .unwrap()
}

/// `(M ∪ K̄_t) ∨ T(t, p-1)` as an explicit graph.
pub fn padding_host(m: &Graph, p: usize, t: usize) -> Graph {
    let left = antiramsey::graph::disjoint_union(m, &Graph::empty(t));
    let right = if p >= 2 { antiramsey::graph::turan(t, p - 1).unwrap() } else { Graph::empty(0) };
    antiramsey::graph::join(&left, &right)
}
