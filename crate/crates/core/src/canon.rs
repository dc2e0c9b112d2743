//! Canonical forms of graphs under isomorphism.
//!
//! Graphs are first split along connected components and along components of
//! the complement; these decompositions are isomorphism invariant, and they
//! absorb the large symmetric cases (matchings, edgeless graphs, complete
//! multipartite graphs, joins) that defeat plain individualisation. A part
//! that is connected with a connected complement is labeled by colour
//! refinement plus individualisation, keeping the lexicographically smallest
//! adjacency string over all leaves of the search tree.

use std::cmp::Ordering;

use crate::error::{resource, Error, Result};
use crate::graph::{Graph, MAX_SEARCH_VERTICES};

/// Upper bound on search-tree nodes spent on the prime parts of one graph.
pub const CANON_NODE_LIMIT: usize = 2_000_000;

/// Isomorphism certificate: equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// The certificate together with a canonical ordering: `order[i]` is the vertex of `g`
/// placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    if g.n() > MAX_SEARCH_VERTICES {
        return resource(format!(
            "canonical form limited to {MAX_SEARCH_VERTICES} vertices, got {}",
            g.n()
        ));
    }
    let adj = g.adjacency_bits();
    let verts: Vec<usize> = (0..g.n()).collect();
    let mut budget = CANON_NODE_LIMIT;
    let (bytes, order) = canon_part(&adj, &verts, &mut budget)?;
    Ok((CanonicalForm(bytes), order))
}

/// `g` relabeled into canonical position; isomorphic inputs give identical outputs.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    Ok(g.relabel(&order))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn push_u32(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u32).to_be_bytes());
}

fn mask_of(verts: &[usize]) -> u64 {
    verts.iter().fold(0, |m, &v| m | 1 << v)
}

/// Connected components of the graph on `verts` given by `nbr(v)` (already restricted to `verts`).
fn components(verts: &[usize], nbr: impl Fn(usize) -> u64) -> Vec<Vec<usize>> {
    let mut left = mask_of(verts);
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = nbr(v) & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        let mut c = Vec::new();
        let mut m = comp;
        while m != 0 {
            c.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out.push(c);
    }
    out
}

fn canon_part(adj: &[u64], verts: &[usize], budget: &mut usize) -> Result<(Vec<u8>, Vec<usize>)> {
    let m = verts.len();
    if m <= 1 {
        let mut out = vec![0u8];
        push_u32(&mut out, m);
        return Ok((out, verts.to_vec()));
    }
    let mask = mask_of(verts);
    let comps = components(verts, |v| adj[v] & mask);
    if comps.len() > 1 {
        return combine(1, adj, m, comps, budget);
    }
    let co = components(verts, |v| !adj[v] & mask & !(1 << v));
    if co.len() > 1 {
        return combine(2, adj, m, co, budget);
    }
    prime_canon(adj, verts, budget)
}

fn combine(
    tag: u8,
    adj: &[u64],
    m: usize,
    parts: Vec<Vec<usize>>,
    budget: &mut usize,
) -> Result<(Vec<u8>, Vec<usize>)> {
    let mut done = parts
        .iter()
        .map(|p| canon_part(adj, p, budget))
        .collect::<Result<Vec<_>>>()?;
    done.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = vec![tag];
    push_u32(&mut out, m);
    push_u32(&mut out, done.len());
    let mut order = Vec::with_capacity(m);
    for (bytes, ord) in done {
        push_u32(&mut out, bytes.len());
        out.extend_from_slice(&bytes);
        order.extend(ord);
    }
    Ok((out, order))
}

type Partition = Vec<Vec<usize>>;

struct PrimeSearch<'a> {
    adj: Vec<u64>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    budget: &'a mut usize,
}

fn prime_canon(adj: &[u64], verts: &[usize], budget: &mut usize) -> Result<(Vec<u8>, Vec<usize>)> {
    let m = verts.len();
    // local relabeling 0..m
    let local: Vec<u64> = verts
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            for (j, &w) in verts.iter().enumerate() {
                if adj[v] >> w & 1 == 1 {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();
    let mut search = PrimeSearch { adj: local, best: None, budget };
    let start = refine(&search.adj, vec![(0..m).collect()]);
    search.descend(start)?;
    let (bits, order) = search.best.expect("search visits at least one leaf");
    let mut out = vec![3u8];
    push_u32(&mut out, m);
    out.extend(bits);
    Ok((out, order.into_iter().map(|i| verts[i]).collect()))
}

impl PrimeSearch<'_> {
    fn descend(&mut self, part: Partition) -> Result<()> {
        if *self.budget == 0 {
            return Err(Error::Resource(format!(
                "canonical labeling exceeded {CANON_NODE_LIMIT} search nodes"
            )));
        }
        *self.budget -= 1;
        let target = part
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<usize> = part.into_iter().flatten().collect();
            let bits = adjacency_string(&self.adj, &order);
            let better = match &self.best {
                None => true,
                Some((b, _)) => bits.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some((bits, order));
            }
            return Ok(());
        };
        for &v in &part[t] {
            let mut next: Partition = Vec::with_capacity(part.len() + 1);
            next.extend(part[..t].iter().cloned());
            next.push(vec![v]);
            next.push(part[t].iter().copied().filter(|&w| w != v).collect());
            next.extend(part[t + 1..].iter().cloned());
            let refined = refine(&self.adj, next);
            self.descend(refined)?;
        }
        Ok(())
    }
}

/// Upper-triangle adjacency bits in `order`, packed big-endian.
fn adjacency_string(adj: &[u64], order: &[usize]) -> Vec<u8> {
    let m = order.len();
    let mut out = vec![0u8; (m * m.saturating_sub(1) / 2).div_ceil(8)];
    let mut k = 0;
    for i in 0..m {
        for j in i + 1..m {
            if adj[order[i]] >> order[j] & 1 == 1 {
                out[k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

/// Equitable refinement: split every cell by neighbour counts into all cells until stable.
fn refine(adj: &[u64], mut part: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = part.iter().map(|c| mask_of(c)).collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, matching, path, petersen, star};

    #[test]
    fn relabeled_path_matches() {
        let p3 = path(3);
        let relabeled = Graph::new(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&p3).unwrap(), canonical_form(&relabeled).unwrap());
        assert_ne!(canonical_form(&star(4)).unwrap(), canonical_form(&path(4)).unwrap());
    }

    #[test]
    fn canonical_graph_is_stable() {
        let g = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 5, 4, 6];
        let h = g.relabel(&perm);
        assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&h).unwrap());
        assert_eq!(canonical_form(&canonical_graph(&g).unwrap()).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        for g in [Graph::empty(40), complete(40), matching(40), cycle(30)] {
            canonical_form(&g).unwrap();
        }
        assert_ne!(canonical_form(&cycle(6)).unwrap(), canonical_form(&crate::graph::copies(2, &complete(3))).unwrap());
    }

    #[test]
    fn four_vertex_classes() {
        use std::collections::HashSet;
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        let mut forms = HashSet::new();
        for bits in 0u32..64 {
            let g = Graph::new(4, pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }
}
