//! Decomposition families, remainders and decomposition family sequences.
//!
//! For a family `L` with `p = p(L)`, a graph `M` qualifies when some `L ∈ L`
//! embeds in `(M ∪ K̄_t) ∨ T(t, p-1)` for a large `t`. Since all cross edges of the
//! join are present, this holds iff some `S ⊆ V(L)` has `L[S] ⊆ M` (up to isolated
//! vertices) and `χ(L - S) <= p - 1`, so the minimal qualifying graphs are the
//! subgraph-minimal projections `L[S]`.

use std::collections::HashSet;

use serde::Serialize;

use crate::canon::canonical_labeling;
use crate::chromatic::{chromatic_number, colorable_on, fits_multipartite, full_mask};
use crate::error::{arg, Error, Result};
use crate::family::{all_graphs, GraphFamily};
use crate::graph::{complete, matching, star, turan_class_sizes, Graph};
use crate::subgraph::{contains_subgraph, for_each_embedding};

/// How decomposition families are formed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionRule {
    /// The definition: `M` is placed inside one class of `T(t, p)`.
    #[default]
    ClassEmbedding,
    /// `M` is the set of edges inside the classes of some partition of `V(L)` into at
    /// most `p` classes, i.e. the edges whose removal leaves a `p`-colourable graph.
    ColorReduction,
}

/// Which subchromatic number drives each stage of a sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PPolicy {
    /// `p(F_i)` of the current stage family.
    #[default]
    PerStage,
    /// `p(F_0)` throughout.
    Frozen,
}

/// `{H - e : H ∈ f, e ∈ E(H)}` with vertices retained.
pub fn minus_one_edge(f: &GraphFamily) -> Result<GraphFamily> {
    let mut out = GraphFamily::new();
    for h in f.iter() {
        if h.edge_count() == 0 {
            return arg(format!("member {h:?} has no edge to delete"));
        }
        for i in 0..h.edge_count() {
            out.insert(&h.without_edge(i))?;
        }
    }
    Ok(out)
}

/// `p(f) = min χ(L) - 1`.
pub fn subchromatic(f: &GraphFamily) -> Result<usize> {
    let mut best: Option<usize> = None;
    for g in f.iter() {
        let chi = chromatic_number(g)?;
        best = Some(best.map_or(chi, |b| b.min(chi)));
    }
    match best {
        None => arg("subchromatic number of an empty family"),
        Some(0) => arg("subchromatic number undefined for a 0-vertex member"),
        Some(chi) => Ok(chi - 1),
    }
}

/// Largest member vertex count accepted by the split enumeration.
pub const SPLIT_VERTEX_LIMIT: usize = 24;

fn check_size(l: &Graph) -> Result<()> {
    if l.n() > SPLIT_VERTEX_LIMIT {
        return Err(Error::Resource(format!(
            "split enumeration limited to {SPLIT_VERTEX_LIMIT} vertices, got {}",
            l.n()
        )));
    }
    Ok(())
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Whether `l ⊆ (m ∪ K̄_t) ∨ T(t, p-1)`, with `T(t, 0)` the empty graph.
pub fn embeds_with_padding(l: &Graph, m: &Graph, p: usize, t: usize) -> Result<bool> {
    if p == 0 {
        return arg("p must be >= 1");
    }
    check_size(l)?;
    let adj = l.adjacency_bits();
    let all = full_mask(l.n());
    let caps = if p == 1 { Vec::new() } else { turan_class_sizes(t, p - 1)? };
    let m_core = m.strip_isolated();
    for s in subsets(l.n()) {
        let rest = all & !s;
        if s.count_ones() as usize > m.n() + t {
            continue;
        }
        if !fits_multipartite(&adj, rest, &caps) {
            continue;
        }
        let inside = l.induced(&vertices_of(s)).strip_isolated();
        if contains_subgraph(&inside, &m_core)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Minimal members of the decomposition family of `f` under the given rule, using `p(f)`.
pub fn decomposition_family(f: &GraphFamily) -> Result<GraphFamily> {
    decomposition_family_with(f, subchromatic(f)?, DecompositionRule::ClassEmbedding)
}

/// Decomposition family with an explicit `p` and rule. Members carry no isolated vertices.
pub fn decomposition_family_with(
    f: &GraphFamily,
    p: usize,
    rule: DecompositionRule,
) -> Result<GraphFamily> {
    if f.is_empty() {
        return arg("decomposition family of an empty family");
    }
    if p == 0 {
        return arg("decomposition family needs p >= 1");
    }
    let mut candidates = GraphFamily::new();
    for l in f.iter() {
        check_size(l)?;
        match rule {
            DecompositionRule::ClassEmbedding => class_candidates(l, p, &mut candidates)?,
            DecompositionRule::ColorReduction => reduction_candidates(l, p, &mut candidates)?,
        }
    }
    minimal_elements(&candidates)
}

fn class_candidates(l: &Graph, p: usize, out: &mut GraphFamily) -> Result<()> {
    let adj = l.adjacency_bits();
    let all = full_mask(l.n());
    for s in subsets(l.n()) {
        if colorable_on(&adj, all & !s, p - 1) {
            out.insert(&l.induced(&vertices_of(s)).strip_isolated())?;
        }
    }
    Ok(())
}

fn reduction_candidates(l: &Graph, p: usize, out: &mut GraphFamily) -> Result<()> {
    // restricted-growth assignments of vertices to at most p classes
    let n = l.n();
    let mut class = vec![0usize; n];
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    fn rec(
        l: &Graph,
        p: usize,
        v: usize,
        used: usize,
        class: &mut [usize],
        seen: &mut HashSet<Vec<(usize, usize)>>,
        out: &mut GraphFamily,
    ) -> Result<()> {
        if v == class.len() {
            let inside: Vec<(usize, usize)> =
                l.edges().iter().copied().filter(|&(a, b)| class[a] == class[b]).collect();
            if seen.insert(inside.clone()) {
                out.insert(&Graph::new(l.n(), inside)?.strip_isolated())?;
            }
            return Ok(());
        }
        for c in 0..(used + 1).min(p) {
            class[v] = c;
            rec(l, p, v + 1, used.max(c + 1), class, seen, out)?;
        }
        Ok(())
    }
    rec(l, p, 0, 0, &mut class, &mut seen, out)
}

/// Members of `candidates` containing no other member as a subgraph.
pub fn minimal_elements(candidates: &GraphFamily) -> Result<GraphFamily> {
    let mut sorted: Vec<&Graph> = candidates.iter().collect();
    sorted.sort_by_key(|g| (g.edge_count(), g.n()));
    let mut kept: Vec<&Graph> = Vec::new();
    for g in sorted {
        let mut dominated = false;
        for k in &kept {
            if contains_subgraph(k, g)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            kept.push(g);
        }
    }
    GraphFamily::from_graphs(kept)
}

/// `{F - E(M') : F ∈ f, M ∈ m, M' a copy of M in F}` over all copies, vertices retained.
pub fn decomposition_remainder(f: &GraphFamily, m: &GraphFamily) -> Result<GraphFamily> {
    let mut out = GraphFamily::new();
    for host in f.iter() {
        let index = |a: usize, b: usize| {
            let (u, v) = (a.min(b), a.max(b));
            host.edges().binary_search(&(u, v)).expect("embedded edge exists")
        };
        for pattern in m.iter() {
            let pattern = pattern.strip_isolated();
            let mut images: HashSet<Vec<usize>> = HashSet::new();
            for_each_embedding(&pattern, host, |map| {
                let mut img: Vec<usize> =
                    pattern.edges().iter().map(|&(a, b)| index(map[a], map[b])).collect();
                img.sort_unstable();
                images.insert(img);
                true
            })?;
            let mut images: Vec<Vec<usize>> = images.into_iter().collect();
            images.sort();
            for img in images {
                let keep = host
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| img.binary_search(i).is_err())
                    .map(|(_, &e)| e);
                let g = Graph::new(host.n(), keep.collect::<Vec<_>>())?;
                let (form, order) = canonical_labeling(&g)?;
                out.insert_canonical(form, g.relabel(&order));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub family: GraphFamily,
    pub p: usize,
    pub decomposition: GraphFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceStatus {
    /// The requested number of stages was computed.
    Complete,
    /// A stage family had subchromatic number 0 (a member without edges).
    Edgeless,
    /// A remainder family was empty.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionSequence {
    pub stages: Vec<Stage>,
    pub p0: usize,
    pub status: SequenceStatus,
    /// The family following the last recorded stage, when one was computed.
    pub next_family: Option<GraphFamily>,
}

impl DecompositionSequence {
    pub fn decompositions(&self) -> Vec<&GraphFamily> {
        self.stages.iter().map(|s| &s.decomposition).collect()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SequenceOptions {
    /// Number of decomposition families to record; default `p(F_0) + 1`.
    pub stages: Option<usize>,
    pub p_policy: PPolicy,
    pub rule: DecompositionRule,
}

/// Partial sequence attached to an error raised mid-computation.
#[derive(Debug)]
pub struct SequenceError {
    pub partial: DecompositionSequence,
    pub error: Error,
}

impl std::fmt::Display for SequenceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (after {} stages)", self.error, self.partial.stages.len())
    }
}

impl std::error::Error for SequenceError {}

pub fn decomposition_sequence(
    f: &GraphFamily,
    opts: SequenceOptions,
) -> std::result::Result<DecompositionSequence, SequenceError> {
    let mut seq = DecompositionSequence {
        stages: Vec::new(),
        p0: 0,
        status: SequenceStatus::Complete,
        next_family: None,
    };
    let fail = |seq: &DecompositionSequence, error: Error| SequenceError { partial: seq.clone(), error };
    if f.iter().all(|g| g.edge_count() == 0) {
        seq.status = if f.is_empty() { SequenceStatus::Empty } else { SequenceStatus::Edgeless };
        return Ok(seq);
    }
    seq.p0 = subchromatic(f).map_err(|e| fail(&seq, e))?;
    let length = opts.stages.unwrap_or(seq.p0 + 1);
    let mut family = f.clone();
    for i in 0..length {
        if family.is_empty() {
            seq.status = SequenceStatus::Empty;
            return Ok(seq);
        }
        let p = match opts.p_policy {
            PPolicy::Frozen => seq.p0,
            PPolicy::PerStage => subchromatic(&family).map_err(|e| fail(&seq, e))?,
        };
        if p == 0 {
            seq.status = SequenceStatus::Edgeless;
            seq.next_family = Some(family);
            return Ok(seq);
        }
        let m = decomposition_family_with(&family, p, opts.rule).map_err(|e| fail(&seq, e))?;
        let next = if i + 1 < length {
            Some(decomposition_remainder(&family, &m).map_err(|e| fail(&seq, e))?)
        } else {
            None
        };
        seq.stages.push(Stage { family, p, decomposition: m });
        seq.next_family = next.clone();
        match next {
            Some(n) => family = n,
            None => break,
        }
    }
    Ok(seq)
}

/// Outcome of one checked clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct K5Report {
    pub sequence: DecompositionSequence,
    pub checks: Vec<Check>,
}

impl K5Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The expected table `({K2}, {K2}, {S3, M4}, G(5,6))` for the sequence of `{K5}`.
pub fn k5_expected_decompositions() -> Result<Vec<GraphFamily>> {
    Ok(vec![
        GraphFamily::from_graphs([&complete(2)])?,
        GraphFamily::from_graphs([&complete(2)])?,
        GraphFamily::from_graphs([&star(3), &matching(4)])?,
        all_graphs(5, 6)?.stripped()?,
    ])
}

/// Computes the sequence of `{K5}`, compares it with the expected table, and replays the
/// reconstruction `M_3 -> F_3 -> F_2 -> F_1 -> F_0` from the computed decompositions.
pub fn k5_determination_check(opts: SequenceOptions) -> Result<K5Report> {
    let k5 = GraphFamily::from_graphs([&complete(5)])?;
    let opts = SequenceOptions { stages: opts.stages.or(Some(4)), ..opts };
    let sequence = decomposition_sequence(&k5, opts).map_err(|e| e.error)?;
    let expected = k5_expected_decompositions()?;
    let mut checks = Vec::new();
    checks.push(Check::new(
        "stage-count",
        sequence.stages.len() == 4,
        format!("{} recorded stages", sequence.stages.len()),
    ));
    for (i, want) in expected.iter().enumerate() {
        let got = sequence.stages.get(i).map(|s| &s.decomposition);
        checks.push(Check::new(
            format!("M{i}"),
            got == Some(want),
            format!("computed {:?}, expected {want:?}", got),
        ));
    }
    if sequence.stages.len() == 4 {
        let ms: Vec<&GraphFamily> = sequence.decompositions();
        // F_3: with p(F_3) = 1 the decomposition is the family itself, so F_3 is M_3 padded
        let f3 = ms[3].padded(5)?;
        let g56 = all_graphs(5, 6)?;
        let p3 = subchromatic(&f3)?;
        checks.push(Check::new(
            "F3",
            f3 == g56 && p3 == 1 && decomposition_family_with(&f3, 1, opts.rule)? == *ms[3],
            format!("F3 has {} members, p(F3) = {p3}", f3.len()),
        ));
        let mut below = f3;
        let mut e = 6;
        for i in (0..3).rev() {
            let sizes: HashSet<usize> = ms[i].iter().map(Graph::edge_count).collect();
            let step = if sizes.len() == 1 { *sizes.iter().next().unwrap() } else { 0 };
            e += step;
            let candidate = all_graphs(5, e)?;
            let ok = step > 0 && decomposition_remainder(&candidate, ms[i])? == below;
            checks.push(Check::new(
                format!("F{i}"),
                ok,
                format!("G(5,{e}) minus M{i} {} F{}", if ok { "=" } else { "!=" }, i + 1),
            ));
            below = candidate;
        }
        let k5_only = below == k5;
        checks.push(Check::new("F0=K5", k5_only, format!("G(5,{e}) = {{K5}}: {k5_only}")));
    }
    Ok(K5Report { sequence, checks })
}
