//! Labeled simple undirected graphs and the standard constructors.
//!
//! A [`Graph`] is an immutable value: a vertex count plus a sorted list of
//! edges `(u, v)` with `u < v`. Every constructor uses a fixed labeling, so
//! two calls with the same arguments produce identical graphs.

use std::fmt;

use crate::error::{arg, Result};

/// Search kernels pack neighbourhoods into a `u64`.
pub const MAX_SEARCH_VERTICES: usize = 64;

/// A labeled simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return arg(format!("self-loop at vertex {a}"));
            }
            if a >= n || b >= n {
                return arg(format!("edge ({a}, {b}) out of range for {n} vertices"));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return arg(format!("duplicate edge {:?}", w[0]));
        }
        Ok(Graph { n, edges: list })
    }

    /// Internal constructor: normalizes orientation, sorts and dedups.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        list.dedup();
        debug_assert!(list.iter().all(|&(a, b)| a < b && b < n));
        Graph { n, edges: list }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Neighbourhood bitmasks; only valid for graphs within the search limit.
    pub(crate) fn adjacency_bits(&self) -> Vec<u64> {
        debug_assert!(self.n <= MAX_SEARCH_VERTICES);
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Number of vertices with at least one incident edge.
    pub fn non_isolated_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d > 0).count()
    }

    /// Drops isolated vertices, keeping the relative order of the others.
    pub fn strip_isolated(&self) -> Graph {
        let deg = self.degrees();
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if deg[v] > 0 {
                index[v] = next;
                next += 1;
            }
        }
        Graph::from_edges_unchecked(next, self.edges.iter().map(|&(a, b)| (index[a], index[b])))
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        Graph::from_edges_unchecked(
            vertices.len(),
            self.edges
                .iter()
                .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
                .map(|&(a, b)| (index[a], index[b])),
        )
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "relabel needs a full permutation");
        let mut index = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        Graph::from_edges_unchecked(self.n, self.edges.iter().map(|&(a, b)| (index[a], index[b])))
    }

    /// Removes the listed edges, keeping every vertex.
    pub fn delete_edges(&self, remove: &[(usize, usize)]) -> Result<Graph> {
        let mut keep = self.edges.clone();
        for &(a, b) in remove {
            let key = (a.min(b), a.max(b));
            match keep.binary_search(&key) {
                Ok(i) => {
                    keep.remove(i);
                }
                Err(_) => return arg(format!("edge ({a}, {b}) is not present")),
            }
        }
        Ok(Graph { n: self.n, edges: keep })
    }

    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph { n: self.n, edges }
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.edges.len());
        let mut it = self.edges.iter().peekable();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if it.peek() == Some(&&(a, b)) {
                    it.next();
                } else {
                    edges.push((a, b));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    pub fn is_triangle_free(&self) -> bool {
        if self.n <= MAX_SEARCH_VERTICES {
            let adj = self.adjacency_bits();
            return self.edges.iter().all(|&(a, b)| adj[a] & adj[b] == 0);
        }
        let nbrs: Vec<std::collections::BTreeSet<usize>> =
            (0..self.n).map(|v| self.neighbors(v).into_iter().collect()).collect();
        self.edges
            .iter()
            .all(|&(a, b)| nbrs[a].intersection(&nbrs[b]).next().is_none())
    }
}

// ---------------------------------------------------------------------------
// constructors

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// `P_k`: a path on `k` vertices.
pub fn path(k: usize) -> Graph {
    Graph::from_edges_unchecked(k, (1..k).map(|i| (i - 1, i)))
}

/// `C_k` for `k >= 3`; smaller counts degrade to the path on `k` vertices.
pub fn cycle(k: usize) -> Graph {
    if k < 3 {
        return path(k);
    }
    Graph::from_edges_unchecked(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// `S_k`: a star on `k` vertices centred at vertex 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges_unchecked(k, (1..k).map(|i| (0, i)))
}

/// `M_k`: `floor(k/2)` disjoint edges plus an isolated vertex when `k` is odd.
pub fn matching(k: usize) -> Graph {
    Graph::from_edges_unchecked(k, (0..k / 2).map(|i| (2 * i, 2 * i + 1)))
}

/// Complete multipartite graph with the given class sizes, classes laid out consecutively.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut class = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(i, s));
    }
    Graph::from_edges_unchecked(
        n,
        (0..n).flat_map(|a| {
            let class = &class;
            (a + 1..n).filter(move |&b| class[a] != class[b]).map(move |b| (a, b))
        }),
    )
}

/// Class sizes of `T(n, p)`, largest first.
pub fn turan_class_sizes(n: usize, p: usize) -> Result<Vec<usize>> {
    if p == 0 {
        return arg("Turán graph needs p >= 1");
    }
    Ok((0..p).map(|i| n / p + usize::from(i < n % p)).collect())
}

/// `T(n, p)`: the balanced complete `p`-partite graph.
pub fn turan(n: usize, p: usize) -> Result<Graph> {
    Ok(complete_multipartite(&turan_class_sizes(n, p)?))
}

/// `G ∨ H`: disjoint union plus every edge between the two sides. `G` keeps labels `0..v(G)`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    let mut edges: Vec<(usize, usize)> = g.edges.clone();
    edges.extend(h.edges.iter().map(|&(a, b)| (a + off, b + off)));
    for a in 0..g.n {
        for b in 0..h.n {
            edges.push((a, b + off));
        }
    }
    Graph::from_edges_unchecked(g.n + h.n, edges)
}

/// `G ∪ H` (vertex-disjoint).
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    Graph::from_edges_unchecked(
        g.n + h.n,
        g.edges.iter().copied().chain(h.edges.iter().map(|&(a, b)| (a + off, b + off))),
    )
}

/// `k·G`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

/// The `(k, p+1)`-fan: `k` copies of `K_{p+1}` sharing vertex 0.
pub fn general_fan(k: usize, p: usize) -> Graph {
    let mut edges = Vec::new();
    for c in 0..k {
        let block: Vec<usize> = std::iter::once(0).chain((0..p).map(|i| 1 + c * p + i)).collect();
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_unchecked(k * p + 1, edges)
}

/// The `k`-fan: `k` triangles sharing vertex 0.
pub fn fan(k: usize) -> Graph {
    general_fan(k, 2)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_unchecked(10, edges)
}

/// `Q(p, k) = K_1 ∨ T(pk, p)`; the dominating vertex is vertex 0.
pub fn q_graph(p: usize, k: usize) -> Result<Graph> {
    Ok(join(&complete(1), &turan(p * k, p)?))
}

/// `H(n, p, k) = K_{k-1} ∨ T(n-k+1, p)`.
pub fn h_graph(n: usize, p: usize, k: usize) -> Result<Graph> {
    check_h_params(n, p, k)?;
    Ok(join(&complete(k - 1), &turan(n + 1 - k, p)?))
}

/// `H'(n, p, k) = complement(K_{k-1}) ∨ T(n-k+1, p)`.
pub fn h_prime_graph(n: usize, p: usize, k: usize) -> Result<Graph> {
    check_h_params(n, p, k)?;
    Ok(join(&Graph::empty(k - 1), &turan(n + 1 - k, p)?))
}

pub(crate) fn check_h_params(n: usize, p: usize, k: usize) -> Result<()> {
    if p == 0 {
        return arg("p must be >= 1");
    }
    if k == 0 || k > n + 1 {
        return arg(format!("k = {k} outside 1..=n+1 for n = {n}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_sizes() {
        let m4 = matching(4);
        assert_eq!((m4.n(), m4.edge_count()), (4, 2));
        let m5 = matching(5);
        assert_eq!((m5.n(), m5.edge_count(), m5.non_isolated_count()), (5, 2, 4));
        let s1 = star(1);
        assert_eq!((s1.n(), s1.edge_count()), (1, 0));
        assert_eq!(star(4).edge_count(), 3);
        assert_eq!(complete_multipartite(&[2, 2, 2]).edge_count(), 12);
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(5).edge_count(), 10);
    }

    #[test]
    fn turan_graphs() {
        let c4 = turan(4, 2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert_eq!(turan(5, 5).unwrap(), complete(5));
        assert_eq!(turan(9, 3).unwrap().edge_count(), 27);
        assert_eq!(turan_class_sizes(10, 4).unwrap(), vec![3, 3, 2, 2]);
        assert!(turan(3, 0).is_err());
    }

    #[test]
    fn join_union_complement() {
        let w = join(&complete(1), &turan(4, 2).unwrap());
        assert_eq!((w.n(), w.edge_count()), (5, 8));
        let e = complete(5).complement();
        assert_eq!((e.n(), e.edge_count()), (5, 0));
        let two_k3 = copies(2, &complete(3));
        assert_eq!((two_k3.n(), two_k3.edge_count()), (6, 6));
        let g = petersen();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn fans_and_special_graphs() {
        let bowtie = fan(2);
        assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
        let f = general_fan(2, 3);
        assert_eq!((f.n(), f.edge_count()), (7, 12));
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(p.is_triangle_free());
        let q = q_graph(2, 2).unwrap();
        assert_eq!((q.n(), q.edge_count()), (5, 8));
    }

    #[test]
    fn delete_edges_behaviour() {
        let k5 = complete(5);
        let g = k5.delete_edges(&[(1, 3)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 9));
        assert_eq!(k5.delete_edges(&[]).unwrap(), k5);
        let k3 = complete(3);
        let e = k3.delete_edges(&[(0, 1), (2, 1), (0, 2)]).unwrap();
        assert_eq!((e.n(), e.edge_count()), (3, 0));
        assert!(matches!(
            path(3).delete_edges(&[(0, 2)]),
            Err(crate::Error::Argument(_))
        ));
    }

    #[test]
    fn new_validates() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        let g = Graph::new(3, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn strip_and_induce() {
        let g = disjoint_union(&Graph::empty(2), &path(3));
        let s = g.strip_isolated();
        assert_eq!(s, path(3));
        assert_eq!(complete(5).induced(&[4, 2, 0]), complete(3));
    }
}
