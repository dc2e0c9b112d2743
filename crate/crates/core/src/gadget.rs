//! Regular and nearly regular graphs used inside the classes of the extremal colourings.
//!
//! "Nearly `d`-regular" means every degree is `d` except a single vertex of degree
//! `d - 1`; it is produced exactly when `m·d` is odd.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BACKTRACK_NODE_LIMIT: usize = 5_000_000;

fn infeasible<T>(msg: String) -> Result<T> {
    Err(Error::Infeasible(msg))
}

/// A `d`-regular (or nearly `d`-regular) triangle-free graph on `m` vertices.
///
/// Construction order: bipartite circulant for even `m`; for odd `m` and even `d`,
/// a circulant with a sum-free connection set; otherwise lexicographic
/// degree-constrained backtracking. Output is deterministic. The backtracking is
/// budgeted; for large odd `d` near the feasibility boundary it may report a
/// resource error instead of deciding.
pub fn regular_triangle_free(m: usize, d: usize) -> Result<Graph> {
    if d == 0 {
        return Ok(Graph::empty(m));
    }
    if 2 * d > m {
        return infeasible(format!(
            "no triangle-free graph on {m} vertices has (near) minimum degree {d}"
        ));
    }
    if m.is_multiple_of(2) {
        let h = m / 2;
        let edges = (0..h).flat_map(|i| (0..d).map(move |j| (i, h + (i + j) % h)));
        return Ok(Graph::from_edges_unchecked(m, edges));
    }
    // Odd m, d >= 2: no bipartite graph has these degree sequences. A non-bipartite
    // triangle-free graph has minimum degree at most 2m/5 and at most (m-1)²/4 + 1 edges.
    let min_deg = if d.is_multiple_of(2) { d } else { d - 1 };
    let edges = m * d / 2;
    if d >= 2 && (5 * min_deg > 2 * m || 4 * edges > (m - 1) * (m - 1) + 4) {
        return infeasible(format!(
            "no (nearly) {d}-regular triangle-free graph on {m} vertices"
        ));
    }
    if let Some(g) = odd_circulant(m, d) {
        return Ok(g);
    }
    backtrack(m, d, true)
}

/// A `d`-regular (or nearly `d`-regular) graph on `m` vertices; triangles allowed.
pub fn regular_graph(m: usize, d: usize) -> Result<Graph> {
    if d == 0 {
        return Ok(Graph::empty(m));
    }
    if d >= m {
        return infeasible(format!("degree {d} impossible on {m} vertices"));
    }
    let half = d / 2;
    let offsets: Vec<usize> = (1..=half).collect();
    let mut edges: Vec<(usize, usize)> = circulant(m, &offsets).edges().to_vec();
    if d % 2 == 1 {
        if m.is_multiple_of(2) {
            edges.extend((0..m / 2).map(|i| (i, i + m / 2)));
        } else {
            let s = (m - 1) / 2;
            edges.extend((0..s).map(|i| (i, i + s)));
        }
    }
    Graph::new(m, edges)
}

fn circulant(m: usize, offsets: &[usize]) -> Graph {
    let edges = (0..m).flat_map(|i| offsets.iter().map(move |&s| (i, (i + s) % m)));
    let edges: Vec<(usize, usize)> = edges.filter(|&(a, b)| a != b).collect();
    Graph::new(m, edges).expect("circulant edges are valid")
}

/// Circulant construction on odd `m`: a sum-free connection set `±S` with `|S| = ⌊d/2⌋`,
/// plus, for odd `d`, a near-perfect matching along a step `δ` coprime to `m` whose
/// endpoints have no common neighbour. Sets are tried lexicographically.
fn odd_circulant(m: usize, d: usize) -> Option<Graph> {
    let top = (m - 1) / 2;
    let mut chosen = Vec::with_capacity(d / 2);
    let mut found = None;
    connection_sets(m, top, d / 2, 1, &mut chosen, &mut |set| {
        if d.is_multiple_of(2) {
            found = Some(circulant(m, set));
            return true;
        }
        let Some(step) = matching_step(m, set) else {
            return false;
        };
        let mut edges = circulant(m, set).edges().to_vec();
        let walk: Vec<usize> = (0..m).map(|j| j * step % m).collect();
        edges.extend(walk[..m - 1].chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))));
        found = Some(Graph::new(m, edges).expect("valid circulant edges"));
        true
    });
    found
}

fn symmetric(m: usize, set: &[usize]) -> Vec<usize> {
    set.iter().flat_map(|&s| [s, m - s]).collect()
}

fn sum_free(m: usize, set: &[usize]) -> bool {
    let sym = symmetric(m, set);
    sym.iter().all(|&a| sym.iter().all(|&b| !sym.contains(&((a + b) % m))))
}

fn matching_step(m: usize, set: &[usize]) -> Option<usize> {
    let sym = symmetric(m, set);
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (1..m).find(|&step| {
        gcd(step, m) == 1
            && !sym.contains(&step)
            && !sym.iter().any(|&a| sym.iter().any(|&b| (a + b) % m == step))
    })
}

/// Enumerates sum-free `S ⊆ {from..=top}` of the given size until `accept` returns true.
fn connection_sets(
    m: usize,
    top: usize,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == size {
        return accept(chosen);
    }
    for s in from..=top {
        chosen.push(s);
        if sum_free(m, chosen) && connection_sets(m, top, size, s + 1, chosen, accept) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Degree-constrained backtracking: vertices are saturated in index order, each
/// choosing its missing neighbours among larger vertices lexicographically.
fn backtrack(m: usize, d: usize, triangle_free: bool) -> Result<Graph> {
    let mut target = vec![d; m];
    if m * d % 2 == 1 {
        target[m - 1] = d - 1;
    }
    let mut st = Backtrack {
        m,
        target,
        adj: vec![0u64; m],
        triangle_free,
        nodes: 0,
    };
    match st.fill(0, 0) {
        Some(true) => {
            let edges = (0..m).flat_map(|u| {
                let row = st.adj[u];
                (u + 1..m).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
            });
            Graph::new(m, edges.collect::<Vec<_>>())
        }
        Some(false) => infeasible(format!(
            "no (nearly) {d}-regular {}graph on {m} vertices",
            if triangle_free { "triangle-free " } else { "" }
        )),
        None => Err(Error::Resource(format!(
            "gadget search for ({m}, {d}) exceeded {BACKTRACK_NODE_LIMIT} nodes"
        ))),
    }
}

struct Backtrack {
    m: usize,
    target: Vec<usize>,
    adj: Vec<u64>,
    triangle_free: bool,
    nodes: usize,
}

impl Backtrack {
    fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `None` when the node budget runs out.
    fn fill(&mut self, v: usize, from: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > BACKTRACK_NODE_LIMIT {
            return None;
        }
        if v == self.m {
            return Some(true);
        }
        if self.deg(v) == self.target[v] {
            return self.fill(v + 1, v + 2);
        }
        let need = self.target[v] - self.deg(v);
        let spare = (from.max(v + 1)..self.m)
            .filter(|&w| self.deg(w) < self.target[w])
            .count();
        if spare < need {
            return Some(false);
        }
        for w in from.max(v + 1)..self.m {
            if self.deg(w) >= self.target[w] {
                continue;
            }
            if self.triangle_free && self.adj[v] & self.adj[w] != 0 {
                continue;
            }
            self.adj[v] |= 1 << w;
            self.adj[w] |= 1 << v;
            let r = self.fill(v, w + 1);
            if r != Some(false) {
                return r;
            }
            self.adj[v] &= !(1 << w);
            self.adj[w] &= !(1 << v);
        }
        Some(false)
    }
}
