//! Explicit extremal colourings: a rainbow host graph plus a few extra colours on
//! the complementary edges.
//!
//! Vertex layout is fixed: interior vertices first (for the `H`/`H'` hosts), then the
//! classes of the Turán part consecutively, largest first.

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{arg, Error, Result};
use crate::gadget::{regular_graph, regular_triangle_free};
use crate::graph::{complete_multipartite, h_graph, h_prime_graph, turan_class_sizes, Graph};

/// Colours every edge of `rainbow` distinctly and every other edge `{u, v}` with extra
/// colour `extra(u, v)`; the result is normalized.
fn assemble(rainbow: &Graph, extra: impl Fn(usize, usize) -> u32) -> Coloring {
    let base = rainbow.edge_count() as u32;
    let edges = rainbow.edges();
    let mut next = 0;
    let c = Coloring::from_fn(rainbow.n(), |u, v| {
        if next < edges.len() && edges[next] == (u, v) {
            next += 1;
            next as u32 - 1
        } else {
            base + extra(u, v)
        }
    });
    c.normalize()
}

/// Class index of every vertex for classes laid out consecutively from `offset`.
fn class_of(offset: usize, sizes: &[usize]) -> Vec<Option<usize>> {
    let mut out = vec![None; offset];
    for (i, &s) in sizes.iter().enumerate() {
        out.extend(std::iter::repeat_n(Some(i), s));
    }
    out
}

/// Rainbow `T(n, p)` with one extra colour on all edges inside the classes.
pub fn kp_extremal(n: usize, p: usize) -> Result<Coloring> {
    if p < 2 || n <= p {
        return arg(format!("need n > p >= 2 so that a class has an edge, got n = {n}, p = {p}"));
    }
    let sizes = turan_class_sizes(n, p)?;
    Ok(assemble(&complete_multipartite(&sizes), |_, _| 0))
}

fn check_h_layout(n: usize, p: usize, k: usize, min_class: usize) -> Result<Vec<usize>> {
    if p < 2 || k < 2 {
        return arg(format!("need p >= 2 and k >= 2, got p = {p}, k = {k}"));
    }
    if n + 2 < k + min_class * p {
        return arg(format!(
            "T(n-k+2, p) needs classes of size >= {min_class}: n = {n}, p = {p}, k = {k}"
        ));
    }
    turan_class_sizes(n + 2 - k, p)
}

/// Rainbow `H(n, p, k-1) = K_{k-2} ∨ T(n-k+2, p)` with one extra colour on the complement.
pub fn h_coloring(n: usize, p: usize, k: usize) -> Result<Coloring> {
    check_h_layout(n, p, k, 1)?;
    if n + 2 - k <= p {
        return arg("T(n-k+2, p) has no edges inside its classes");
    }
    Ok(assemble(&h_graph(n, p, k - 1)?, |_, _| 0))
}

/// Number of extra-colour slots of [`h_prime_coloring`]: one per partite set of
/// `T(n-k+2, p)`, plus one for the clique spanned by the `k-2` interior vertices when it
/// has edges.
pub fn h_prime_slots(p: usize, k: usize) -> usize {
    p + usize::from(k >= 4)
}

/// Slot of the complementary edge `{u, v}`, `u < v`, in the [`h_prime_coloring`] layout.
fn h_prime_slot(class: &[Option<usize>], p: usize, u: usize, v: usize) -> usize {
    match (class[u], class[v]) {
        (Some(a), Some(b)) if a == b => a,
        (None, None) => p,
        _ => unreachable!("cross edges belong to the rainbow host"),
    }
}

/// Rainbow `H'(n, p, k-1) = K̄_{k-2} ∨ T(n-k+2, p)`; complementary edges of slot `s` get
/// extra label `labels[s]` (see [`h_prime_slots`]). Equal labels share a colour.
pub fn h_prime_coloring(n: usize, p: usize, k: usize, labels: &[u32]) -> Result<Coloring> {
    let sizes = check_h_layout(n, p, k, 2)?;
    let slots = h_prime_slots(p, k);
    if labels.len() != slots {
        return arg(format!("expected {slots} slot labels, got {}", labels.len()));
    }
    let class = class_of(k - 2, &sizes);
    let host = h_prime_graph(n, p, k - 1)?;
    Ok(assemble(&host, |u, v| labels[h_prime_slot(&class, p, u, v)]))
}

/// Class sizes for the `C'` colourings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassSizes {
    /// The Turán sizes of `T(n, p)`.
    Balanced,
    /// Explicit sizes `n_1 >= ... >= n_p` with `n_1 - n_p = 2` (and `n_1`, `n_p` even when
    /// the gadget degree is odd).
    Sizes(Vec<usize>),
}

/// A complete `p`-partite graph with a (nearly) `d`-regular gadget inside every class.
/// Gadgets are triangle-free unless `allow_triangles` is set.
pub fn turan_with_gadgets(
    n: usize,
    p: usize,
    d: usize,
    sizes: &ClassSizes,
    allow_triangles: bool,
) -> Result<(Graph, Vec<usize>)> {
    if p < 1 {
        return arg("p must be >= 1");
    }
    let sizes = match sizes {
        ClassSizes::Balanced => turan_class_sizes(n, p)?,
        ClassSizes::Sizes(s) => {
            check_sizes(n, p, d + 1, s)?;
            s.clone()
        }
    };
    let mut edges = complete_multipartite(&sizes).edges().to_vec();
    let mut offset = 0;
    for &m in &sizes {
        let gadget = if allow_triangles { regular_graph(m, d)? } else { regular_triangle_free(m, d)? };
        edges.extend(gadget.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += m;
    }
    Ok((Graph::new(n, edges)?, sizes))
}

fn check_sizes(n: usize, p: usize, k: usize, s: &[usize]) -> Result<()> {
    if s.len() != p || s.iter().sum::<usize>() != n {
        return arg(format!("class sizes {s:?} must be {p} numbers summing to {n}"));
    }
    if s.windows(2).any(|w| w[0] < w[1]) {
        return arg(format!("class sizes {s:?} must be non-increasing"));
    }
    if s[0] - s[p - 1] != 2 {
        return arg(format!("class sizes {s:?} need n_1 - n_p = 2"));
    }
    if k.is_multiple_of(2) && (s[0] % 2 == 1 || s[p - 1] % 2 == 1) {
        return arg(format!("class sizes {s:?} need n_1 and n_p even when k is even"));
    }
    Ok(())
}

/// A colouring from `C'(n, k, p)` (or `C(n, k, p)` with `allow_triangles`): rainbow complete
/// `p`-partite graph with a (nearly) `(k-1)`-regular gadget in each class, and one extra
/// colour per class on the remaining edges of that class.
pub fn gadget_coloring(n: usize, k: usize, p: usize, sizes: &ClassSizes, allow_triangles: bool) -> Result<Coloring> {
    if k < 1 || p < 2 {
        return arg(format!("need k >= 1 and p >= 2, got k = {k}, p = {p}"));
    }
    let (host, sizes) = turan_with_gadgets(n, p, k - 1, sizes, allow_triangles)?;
    for (i, &m) in sizes.iter().enumerate() {
        let gadget_edges = (m * (k - 1)) / 2;
        if gadget_edges >= m * m.saturating_sub(1) / 2 {
            return Err(Error::Infeasible(format!(
                "class {i} of size {m} has no edges left for its extra colour"
            )));
        }
    }
    let class = class_of(0, &sizes);
    Ok(assemble(&host, |u, _| class[u].expect("every vertex is in a class") as u32))
}

/// [`gadget_coloring`] with balanced classes and gadget degree `k - 2`: `t(n, p) + Σ ⌊(k-2) n_i / 2⌋ + p` colours.
pub fn gadget_extremal(n: usize, p: usize, k: usize) -> Result<Coloring> {
    if k < 2 {
        return arg(format!("need k >= 2, got {k}"));
    }
    gadget_coloring(n, k - 1, p, &ClassSizes::Balanced, false)
}

/// The exceptional extremal colouring for `k = 3`, `p = 2`, `n ≡ 2 (mod 4)`: rainbow
/// `T(n, 2)` plus a 2-regular graph inside one class, one extra colour on everything else.
pub fn exceptional_k3(n: usize) -> Result<Coloring> {
    if n % 4 != 2 || n < 10 {
        return arg(format!("need n ≡ 2 (mod 4) and n >= 10, got {n}"));
    }
    let half = n / 2;
    let mut edges = complete_multipartite(&[half, half]).edges().to_vec();
    edges.extend(regular_graph(half, 2)?.edges().iter().copied());
    Ok(assemble(&Graph::new(n, edges)?, |_, _| 0))
}
