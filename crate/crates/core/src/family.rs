//! Finite graph families up to isomorphism.

use std::fmt;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::{arg, resource, Result};
use crate::graph::Graph;
use crate::graph6::{read_graph6_lines, write_graph6_lines};

/// Isomorphism classes of graphs, each stored by a canonically labeled representative.
///
/// Members are kept sorted by vertex count, edge count, then certificate, so two
/// families are equal exactly when they hold the same isomorphism classes.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    members: Vec<(CanonicalForm, Graph)>,
}

impl GraphFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_graphs<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Self> {
        let mut f = Self::new();
        for g in graphs {
            f.insert(g)?;
        }
        Ok(f)
    }

    /// Adds the class of `g`; returns whether it was new.
    pub fn insert(&mut self, g: &Graph) -> Result<bool> {
        let (form, order) = canonical_labeling(g)?;
        Ok(self.insert_canonical(form, g.relabel(&order)))
    }

    pub(crate) fn insert_canonical(&mut self, form: CanonicalForm, g: Graph) -> bool {
        let key = |(f, g): &(CanonicalForm, Graph)| (g.n(), g.edge_count(), f.clone());
        let probe = (g.n(), g.edge_count(), form.clone());
        match self.members.binary_search_by(|m| key(m).cmp(&probe)) {
            Ok(_) => false,
            Err(at) => {
                self.members.insert(at, (form, g));
                true
            }
        }
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        let (form, _) = canonical_labeling(g)?;
        Ok(self.members.iter().any(|(f, _)| *f == form))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.members.iter().map(|(_, g)| g)
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.iter().cloned().collect()
    }

    pub fn max_vertices(&self) -> usize {
        self.iter().map(Graph::n).max().unwrap_or(0)
    }

    /// The same classes with isolated vertices removed (classes may merge).
    pub fn stripped(&self) -> Result<Self> {
        let stripped: Vec<Graph> = self.iter().map(Graph::strip_isolated).collect();
        Self::from_graphs(&stripped)
    }

    /// Every member padded with isolated vertices up to `n` vertices.
    pub fn padded(&self, n: usize) -> Result<Self> {
        let mut out = Self::new();
        for g in self.iter() {
            if g.non_isolated_count() > n {
                return arg(format!("member {g:?} does not fit on {n} vertices"));
            }
            let core = g.strip_isolated();
            out.insert(&Graph::new(n, core.edges().iter().copied())?)?;
        }
        Ok(out)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        Self::from_graphs(&read_graph6_lines(text)?)
    }

    pub fn to_graph6(&self) -> String {
        write_graph6_lines(self.iter())
    }
}

impl fmt::Debug for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// All isomorphism classes of graphs with `n` vertices and `e` edges, `n <= 7`.
pub fn all_graphs(n: usize, e: usize) -> Result<GraphFamily> {
    const LIMIT: usize = 7;
    if n > LIMIT {
        return resource(format!("graph enumeration limited to {LIMIT} vertices, got {n}"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if e > pairs {
        return arg(format!("{n} vertices carry at most {pairs} edges, asked for {e}"));
    }
    // build from the sparser side, complementing at the end if needed
    let (steps, flip) = if 2 * e > pairs { (pairs - e, true) } else { (e, false) };
    let mut level = GraphFamily::from_graphs([&Graph::empty(n)])?;
    for _ in 0..steps {
        let mut next = GraphFamily::new();
        for g in level.iter() {
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let h = Graph::new(n, g.edges().iter().copied().chain([(u, v)]))?;
                        next.insert(&h)?;
                    }
                }
            }
        }
        level = next;
    }
    if flip {
        let complements: Vec<Graph> = level.iter().map(Graph::complement).collect();
        level = GraphFamily::from_graphs(&complements)?;
    }
    Ok(level)
}
