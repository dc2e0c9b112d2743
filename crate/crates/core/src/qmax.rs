//! The largest number of extra colours that keeps the rainbow `H'(n, p, k-1)` colouring
//! free of a family.
//!
//! Label assignments to the extra-colour slots are set partitions, tried from the
//! coarsest to the finest. Splitting a colour never destroys a rainbow copy, so every
//! refinement of a failing assignment is skipped, and the search stops at the first
//! block count where nothing passes.

use serde::Serialize;

use crate::constructions::{h_prime_coloring, h_prime_slots};
use crate::error::Result;
use crate::family::GraphFamily;
use crate::rainbow::is_family_free;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QValue {
    pub n: usize,
    /// Largest number of distinct labels that passes; 0 when even a single extra colour fails.
    pub q: usize,
    /// First passing assignment with `q` labels, one label per slot.
    pub labels: Option<Vec<u32>>,
    /// Assignments actually tested against the family.
    pub tested: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QResult {
    pub p: usize,
    pub k: usize,
    pub slots: usize,
    pub at_n: QValue,
    pub at_n_plus_p: QValue,
    /// Whether both evaluations agree.
    pub stable: bool,
}

/// Default evaluation size: twice the largest member, raised if needed so that every class
/// of `T(n-k+2, p)` has two vertices. Smaller hosts can pass vacuously because no copy
/// fits around the monochromatic classes.
pub fn default_n(p: usize, k: usize, f: &GraphFamily) -> usize {
    (2 * f.max_vertices()).max(2 * p + k - 2)
}

/// `q` at `n` (default [`default_n`]) and at `n + p`.
pub fn max_extra_colors(n: Option<usize>, p: usize, k: usize, f: &GraphFamily) -> Result<QResult> {
    let n = n.unwrap_or_else(|| default_n(p, k, f));
    let at_n = q_at(n, p, k, f)?;
    let at_n_plus_p = q_at(n + p, p, k, f)?;
    let stable = at_n.q == at_n_plus_p.q;
    Ok(QResult { p, k, slots: h_prime_slots(p, k), at_n, at_n_plus_p, stable })
}

/// `q` at a single `n`.
pub fn q_at(n: usize, p: usize, k: usize, f: &GraphFamily) -> Result<QValue> {
    let slots = h_prime_slots(p, k);
    let mut levels: Vec<Vec<Vec<u32>>> = vec![Vec::new(); slots + 1];
    for labels in set_partitions(slots) {
        let blocks = labels.iter().max().map_or(0, |&m| m as usize + 1);
        levels[blocks].push(labels);
    }
    let mut failing: Vec<Vec<u32>> = Vec::new();
    let mut best = QValue { n, q: 0, labels: None, tested: 0 };
    for level in levels.into_iter().skip(1) {
        let mut passed = None;
        for labels in level {
            if failing.iter().any(|f| refines(&labels, f)) {
                continue;
            }
            let c = h_prime_coloring(n, p, k, &labels)?;
            best.tested += 1;
            if is_family_free(&c, f)? {
                passed.get_or_insert(labels);
            } else {
                failing.push(labels);
            }
        }
        match passed {
            Some(labels) => {
                best.q = labels.iter().max().map_or(0, |&m| m as usize + 1);
                best.labels = Some(labels);
            }
            None => break,
        }
    }
    Ok(best)
}

/// Whether partition `a` refines partition `b` (equal labels in `a` are equal in `b`).
fn refines(a: &[u32], b: &[u32]) -> bool {
    (0..a.len()).all(|i| (0..i).all(|j| a[i] != a[j] || b[i] == b[j]))
}

/// All set partitions of `0..m` as restricted-growth strings, in lexicographic order.
fn set_partitions(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(m: usize, cur: &mut Vec<u32>, next: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in 0..=next {
            cur.push(c);
            rec(m, cur, next.max(c + 1), out);
            cur.pop();
        }
    }
    rec(m, &mut cur, 0, &mut out);
    out
}
