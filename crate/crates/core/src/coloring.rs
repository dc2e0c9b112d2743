//! Edge colourings of complete graphs.

use serde::{Deserialize, Serialize};

use crate::error::{arg, resource, Error, Result};
use crate::graph::Graph;

/// Index of edge `(u, v)`, `u < v < n`, in lexicographic edge order.
pub fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// All edges of `K_n` in lexicographic order.
pub fn kn_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// A total colouring of the edges of `K_n` by small integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    colors: Vec<u32>,
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coloring(n={}, colors={})", self.n, self.num_colors())
    }
}

impl Coloring {
    /// `colors` lists the colour of every edge in lexicographic edge order.
    pub fn new(n: usize, colors: Vec<u32>) -> Result<Self> {
        let want = n * n.saturating_sub(1) / 2;
        if colors.len() != want {
            return arg(format!("K_{n} has {want} edges, got {} colours", colors.len()));
        }
        Ok(Coloring { n, colors })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        Coloring { n, colors: kn_edges(n).map(|(u, v)| f(u, v)).collect() }
    }

    pub fn monochromatic(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn rainbow(n: usize) -> Self {
        let mut next = 0;
        Self::from_fn(n, |_, _| {
            next += 1;
            next - 1
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Colour of the edge `{u, v}` in either order.
    pub fn color(&self, u: usize, v: usize) -> u32 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colors[edge_index(self.n, a, b)]
    }

    /// Colours in lexicographic edge order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels colours `0..c` by first occurrence in edge order.
    pub fn normalize(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len() as u32;
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { n: self.n, colors }
    }

    pub fn is_normalized(&self) -> bool {
        let mut next = 0;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    /// Edges of each colour of the normalized colouring, indexed by colour.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let norm = self.normalize();
        let mut out = vec![Vec::new(); norm.num_colors()];
        for ((u, v), &c) in kn_edges(self.n).zip(&norm.colors) {
            out[c as usize].push((u, v));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("colouring serialises")
    }

    fn to_doc(&self) -> ColoringDoc {
        ColoringDoc {
            n: self.n,
            edges: kn_edges(self.n)
                .zip(&self.colors)
                .map(|((u, v), &c)| [u as u64, v as u64, c as u64])
                .collect(),
        }
    }

    /// Parses the `{"n": .., "edges": [[u, v, c], ...]}` document; edges must be complete,
    /// sorted by `(u, v)` and normalized.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("colouring JSON: {e}")))?;
        let c = Self::from_doc(&doc)?;
        if !c.is_normalized() {
            return Err(Error::Parse("colouring is not normalized".into()));
        }
        Ok(c)
    }

    pub(crate) fn from_doc(doc: &ColoringDoc) -> Result<Self> {
        let n = doc.n;
        let want = n * n.saturating_sub(1) / 2;
        if doc.edges.len() != want {
            return Err(Error::Parse(format!(
                "K_{n} needs {want} coloured edges, got {}",
                doc.edges.len()
            )));
        }
        let mut colors = Vec::with_capacity(want);
        for (i, ((u, v), e)) in kn_edges(n).zip(&doc.edges).enumerate() {
            if e[0] != u as u64 || e[1] != v as u64 {
                return Err(Error::Parse(format!(
                    "entry {i}: expected edge [{u}, {v}], got [{}, {}]",
                    e[0], e[1]
                )));
            }
            let c = u32::try_from(e[2])
                .map_err(|_| Error::Parse(format!("entry {i}: colour {} too large", e[2])))?;
            colors.push(c);
        }
        Ok(Coloring { n, colors })
    }

    /// Splits colour `c` by giving `edge` a fresh colour.
    pub fn recolor_fresh(&self, u: usize, v: usize) -> Coloring {
        let fresh = self.colors.iter().max().map_or(0, |m| m + 1);
        let mut colors = self.colors.clone();
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        colors[edge_index(self.n, a, b)] = fresh;
        Coloring { n: self.n, colors }
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ColoringDoc::deserialize(d)?;
        let c = Coloring::from_doc(&doc).map_err(serde::de::Error::custom)?;
        if !c.is_normalized() {
            return Err(serde::de::Error::custom("colouring is not normalized"));
        }
        Ok(c)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ColoringDoc {
    pub n: usize,
    pub edges: Vec<[u64; 3]>,
}

/// One edge of every colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentingGraph {
    pub graph: Graph,
    /// `chosen[c]` is the edge picked for colour `c` of the normalized colouring.
    pub chosen: Vec<(usize, usize)>,
}

impl RepresentingGraph {
    fn from_choice(n: usize, chosen: Vec<(usize, usize)>) -> Self {
        let graph = Graph::new(n, chosen.iter().copied()).expect("distinct K_n edges");
        RepresentingGraph { graph, chosen }
    }
}

/// The representing graph taking the first edge (in edge order) of each colour.
pub fn representing_graph(c: &Coloring) -> RepresentingGraph {
    let chosen = c.classes().iter().map(|cls| cls[0]).collect();
    RepresentingGraph::from_choice(c.n(), chosen)
}

/// Upper bound on the number of representing graphs [`representing_graphs`] will enumerate.
pub const REPRESENTING_LIMIT: u64 = 1_000_000;

/// Iterator over every representing graph, in odometer order over the colour classes.
pub fn representing_graphs(c: &Coloring) -> Result<RepresentingGraphs> {
    let classes = c.classes();
    let mut total: u64 = 1;
    for cls in &classes {
        total = total.saturating_mul(cls.len() as u64);
    }
    if total > REPRESENTING_LIMIT {
        return resource(format!(
            "{total} representing graphs exceed the limit {REPRESENTING_LIMIT}"
        ));
    }
    Ok(RepresentingGraphs { n: c.n(), pos: vec![0; classes.len()], classes, done: false, total })
}

pub struct RepresentingGraphs {
    n: usize,
    classes: Vec<Vec<(usize, usize)>>,
    pos: Vec<usize>,
    done: bool,
    total: u64,
}

impl RepresentingGraphs {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for RepresentingGraphs {
    type Item = RepresentingGraph;

    fn next(&mut self) -> Option<RepresentingGraph> {
        if self.done {
            return None;
        }
        let chosen = self.classes.iter().zip(&self.pos).map(|(cls, &i)| cls[i]).collect();
        // advance the odometer, last colour fastest
        self.done = true;
        for i in (0..self.pos.len()).rev() {
            self.pos[i] += 1;
            if self.pos[i] < self.classes[i].len() {
                self.done = false;
                break;
            }
            self.pos[i] = 0;
        }
        Some(RepresentingGraph::from_choice(self.n, chosen))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_normalization() {
        assert_eq!(Coloring::monochromatic(4).num_colors(), 1);
        assert_eq!(Coloring::rainbow(4).num_colors(), 6);
        let c = Coloring::new(3, vec![7, 3, 7]).unwrap();
        let norm = c.normalize();
        assert_eq!(norm.colors(), &[0, 1, 0]);
        assert_eq!(norm.normalize(), norm);
        assert!(!c.is_normalized() && norm.is_normalized());
        assert!(Coloring::new(3, vec![0, 0]).is_err());
    }

    #[test]
    fn edge_indexing() {
        for n in 1..9 {
            for (i, (u, v)) in kn_edges(n).enumerate() {
                assert_eq!(edge_index(n, u, v), i);
            }
        }
    }

    #[test]
    fn representing_graphs_count() {
        assert_eq!(representing_graph(&Coloring::monochromatic(3)).chosen, vec![(0, 1)]);
        // classes of sizes 3, 2, 1 on K_4
        let c = Coloring::new(4, vec![0, 0, 1, 0, 1, 2]).unwrap();
        let all: Vec<_> = representing_graphs(&c).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|r| r.graph.edge_count() == 3));
        let distinct: std::collections::HashSet<_> = all.iter().map(|r| r.chosen.clone()).collect();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn json_round_trip() {
        let c = Coloring::new(4, vec![0, 1, 0, 2, 1, 0]).unwrap();
        let text = c.to_json();
        assert_eq!(text, r#"{"n":4,"edges":[[0,1,0],[0,2,1],[0,3,0],[1,2,2],[1,3,1],[2,3,0]]}"#);
        assert_eq!(Coloring::from_json(&text).unwrap(), c);
        assert!(Coloring::from_json(r#"{"n":3,"edges":[[0,1,1],[0,2,0],[1,2,0]]}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":3,"edges":[[0,1,0],[0,2,0]]}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":3,"edges":[[0,2,0],[0,1,0],[1,2,0]]}"#).is_err());
    }
}
