//! Shared machinery for the reduction-based colorings.
//!
//! A ruleset repeatedly finds a reducible configuration in the working
//! graph and deletes some edges. Once nothing applies, the remaining base
//! pieces are colored and the deletions are replayed in reverse. Each
//! replayed step first runs the scripted extension attached to its
//! configuration (a list of edge groups, each group receiving one color), then falls
//! back to an exhaustive search over the step's edges, and as a last resort
//! to a search over the whole current graph. Fallbacks are counted.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Live edges of a graph under deletion.
pub(crate) struct Work<'a> {
    pub g: &'a Graph,
    pub alive: Vec<bool>,
    pub deg: Vec<usize>,
    /// Vertices of odd-cycle components of the input; exempt from the path
    /// property because no coloring of an odd cycle can satisfy it.
    pub exempt: Vec<bool>,
}

impl<'a> Work<'a> {
    pub fn new(g: &'a Graph) -> Work<'a> {
        let mut exempt = vec![false; g.n()];
        for comp in g.connected_components() {
            let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let odd_cycle = comp.len() % 2 == 1 && edges == comp.len() && comp.iter().all(|&v| g.degree(v) == 2);
            if odd_cycle {
                for v in comp {
                    exempt[v] = true;
                }
            }
        }
        Work {
            g,
            alive: vec![true; g.m()],
            deg: g.degrees(),
            exempt,
        }
    }

    pub fn kill(&mut self, e: usize) {
        debug_assert!(self.alive[e]);
        self.alive[e] = false;
        let (u, v) = self.g.edge(e);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    pub fn revive(&mut self, e: usize) {
        debug_assert!(!self.alive[e]);
        self.alive[e] = true;
        let (u, v) = self.g.edge(e);
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    /// `(neighbor, edge)` pairs over live edges at `v`.
    pub fn links(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.g
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| self.alive[e])
            .map(move |e| (self.g.other_end(e, v), e))
    }

    pub fn nbrs(&self, v: usize) -> Vec<usize> {
        self.links(v).map(|(w, _)| w).collect()
    }

    pub fn live_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.g.edge_id(u, v).filter(|&e| self.alive[e])
    }

    pub fn edge(&self, u: usize, v: usize) -> usize {
        self.live_edge(u, v).expect("live edge")
    }

    pub fn live_edges(&self) -> Vec<usize> {
        (0..self.g.m()).filter(|&e| self.alive[e]).collect()
    }

    /// Live edges conflicting with live edge `e` in the current graph.
    pub fn conflicts(&self, e: usize) -> Vec<usize> {
        let (a, b) = self.g.edge(e);
        let mut out = Vec::new();
        for (p, q) in [(a, b), (b, a)] {
            for (x, px) in self.links(p) {
                if x == q {
                    continue;
                }
                if self.live_edge(x, q).is_some() {
                    out.push(px);
                }
                for (y, xy) in self.links(x) {
                    if y != p {
                        out.push(xy);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out.retain(|&f| f != e);
        out
    }

    /// Paths `a b c d` of live edges through `e` whose interior vertices have
    /// degree 2, as edge triples.
    pub fn triples(&self, e: usize) -> Vec<[usize; 3]> {
        let (u, v) = self.g.edge(e);
        let mut out = Vec::new();
        if self.exempt[u] {
            return out;
        }
        let other = |x: usize, not: usize| self.links(x).find(|&(w, _)| w != not);
        // e in the middle
        if self.deg[u] == 2 && self.deg[v] == 2 {
            if let (Some((a, ea)), Some((d, ed))) = (other(u, v), other(v, u)) {
                if a != d {
                    out.push([ea, e, ed]);
                }
            }
        }
        // e at an end
        for (p, q) in [(u, v), (v, u)] {
            if self.deg[q] != 2 {
                continue;
            }
            let Some((r, qr)) = other(q, p) else { continue };
            if self.deg[r] != 2 {
                continue;
            }
            if let Some((s, rs)) = other(r, q) {
                if s != p {
                    out.push([e, qr, rs]);
                }
            }
        }
        out
    }

    /// Vertex sets of components that still have edges, by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.deg[s] == 0 {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.nbrs(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_edges(&self, comp: &[usize]) -> Vec<usize> {
        let mut edges: Vec<usize> = comp.iter().flat_map(|&v| self.links(v).map(|(_, e)| e)).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Choice {
    /// Lowest color admissible for every edge of the group.
    Lowest,
    /// The current color of another edge.
    Copy(usize),
    Fixed(u32),
}

/// Edges that receive one common color.
#[derive(Debug, Clone)]
pub(crate) struct Group {
    pub edges: Vec<usize>,
    pub choice: Choice,
    /// Edges whose current colors must not be used.
    pub avoid: Vec<usize>,
}

/// Builds groups from per-edge letters, one group per letter.
#[derive(Default)]
pub(crate) struct Script {
    letters: Vec<char>,
    groups: Vec<Group>,
}

impl Script {
    fn slot(&mut self, letter: char) -> &mut Group {
        let i = match self.letters.iter().position(|&l| l == letter) {
            Some(i) => i,
            None => {
                self.letters.push(letter);
                self.groups.push(Group {
                    edges: Vec::new(),
                    choice: Choice::Lowest,
                    avoid: Vec::new(),
                });
                self.letters.len() - 1
            }
        };
        &mut self.groups[i]
    }

    pub fn put(&mut self, letter: char, edges: &[usize]) -> &mut Self {
        self.slot(letter).edges.extend_from_slice(edges);
        self
    }

    /// Letter `pattern[i]` for `edges[i]`.
    pub fn put_seq(&mut self, edges: &[usize], pattern: &[char]) -> &mut Self {
        for (&e, &l) in edges.iter().zip(pattern) {
            self.slot(l).edges.push(e);
        }
        self
    }

    pub fn choice(&mut self, letter: char, choice: Choice) -> &mut Self {
        self.slot(letter).choice = choice;
        self
    }

    pub fn avoid(&mut self, letter: char, edges: &[usize]) -> &mut Self {
        self.slot(letter).avoid.extend_from_slice(edges);
        self
    }

    /// Makes every letter avoid the colors of all earlier letters.
    pub fn distinct(&mut self) -> &mut Self {
        let firsts: Vec<Option<usize>> = self.groups.iter().map(|g| g.edges.first().copied()).collect();
        for i in 0..self.groups.len() {
            let earlier: Vec<usize> = firsts[..i].iter().flatten().copied().collect();
            self.groups[i].avoid.extend(earlier);
        }
        self
    }

    pub fn build(&mut self) -> Vec<Group> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for mut g in std::mem::take(&mut self.groups) {
            g.edges.retain(|&e| seen.insert(e));
            if !g.edges.is_empty() {
                out.push(g);
            }
        }
        self.letters.clear();
        out
    }
}

/// `prefix` followed by `period` repeated, cut to `len` letters.
pub(crate) fn pattern(prefix: &str, period: &str, len: usize) -> Vec<char> {
    prefix.chars().chain(period.chars().cycle()).take(len).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConfigKind {
    IsolatedEdge,
    WeakTwoVertex,
    BranchWithTwoLeaves,
    TriangleWithTwoThreads,
    FourCycleWithThreeThreads,
    ThreadOfThree,
    BranchWithThreeThreads,
    Leaf,
    AdjacentTwoVertices,
    BranchWithTwoThreads,
    TwoVertex,
    LeafAtBranch,
    PendantPath,
    LoopThread,
    ChainCycle,
}

/// How a step's extension is chosen once the smaller graph is colored.
#[derive(Debug, Clone)]
pub(crate) enum Plan {
    Fixed(Vec<Group>),
    /// Thread `v1..vk` between adjacent branch vertices `x` and `y`; the
    /// script depends on the colors around it.
    Chain { x: usize, y: usize, thread: Vec<usize> },
    /// Path `x u v w y` of three 2-vertices, possibly with pendant edges;
    /// colors follow a case analysis on the colors at `x` and `y`.
    Thread(ThreadEdges),
}

#[derive(Debug, Clone)]
pub(crate) struct ThreadEdges {
    pub x: usize,
    pub y: usize,
    pub xu: usize,
    pub uv: usize,
    pub vw: usize,
    pub wy: usize,
    pub uu: Option<usize>,
    pub vv: Option<usize>,
    pub ww: Option<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct Step {
    pub kind: ConfigKind,
    pub removed: Vec<usize>,
    pub recolor: Vec<usize>,
    pub plan: Plan,
}

/// A part of the irreducible remainder, colored directly.
#[derive(Debug, Clone)]
pub(crate) struct Piece {
    pub edges: Vec<usize>,
    /// `None`: search with `palette` colors.
    pub groups: Option<Vec<Group>>,
    pub palette: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: ConfigKind,
    pub removed: Vec<usize>,
    pub recolored: Vec<usize>,
}

/// Deletions in the order they were made, plus the edges left at the end.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub base_edges: Vec<usize>,
}

impl ReductionTrace {
    /// Edge set obtained by undoing every deletion; equals the input's.
    pub fn restored_edges(&self) -> Vec<usize> {
        let mut edges = self.base_edges.clone();
        for s in self.steps.iter().rev() {
            edges.extend_from_slice(&s.removed);
        }
        edges.sort_unstable();
        edges
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub steps: usize,
    pub base_pieces: usize,
    /// Steps and pieces whose scripted extension validated.
    pub scripted: usize,
    pub local_fallbacks: usize,
    pub global_fallbacks: usize,
    /// Kinds of the steps whose script did not validate, in replay order.
    pub fallback_kinds: Vec<ConfigKind>,
}

pub(crate) trait Rules {
    fn palette(&self) -> u32;
    fn property(&self) -> bool;
    fn find(&self, w: &Work) -> Result<Option<Step>>;
    fn base(&self, w: &Work) -> Result<Vec<Piece>>;
    fn resolve(&self, plan: &Plan, _w: &Work, _colors: &[u32]) -> Vec<Group> {
        match plan {
            Plan::Fixed(groups) => groups.clone(),
            Plan::Chain { .. } | Plan::Thread(_) => Vec::new(),
        }
    }
}

pub(crate) struct Outcome {
    pub colors: Vec<u32>,
    pub trace: ReductionTrace,
    pub stats: ReductionStats,
}

pub(crate) fn run(g: &Graph, rules: &dyn Rules) -> Result<Outcome> {
    let mut w = Work::new(g);
    let mut steps = Vec::new();
    while let Some(step) = rules.find(&w)? {
        for &e in &step.removed {
            w.kill(e);
        }
        steps.push(step);
    }
    let pieces = rules.base(&w)?;
    let k = rules.palette();
    let mut colors = vec![0u32; g.m()];
    let mut stats = ReductionStats {
        steps: steps.len(),
        base_pieces: pieces.len(),
        ..Default::default()
    };
    let base_edges = w.live_edges();
    for piece in &pieces {
        let done = match &piece.groups {
            Some(groups) => apply_groups(&w, &mut colors, groups, k, rules.property()) && locally_valid(&w, &colors, &piece.edges, rules.property()),
            None => false,
        };
        if done {
            stats.scripted += 1;
            continue;
        }
        for &e in &piece.edges {
            colors[e] = 0;
        }
        let palette = if piece.groups.is_none() { piece.palette } else { k };
        let solved = search(&w, &mut colors, &piece.edges, palette, rules.property())
            || search(&w, &mut colors, &piece.edges, k, rules.property());
        if !solved {
            return Err(Error::Invariant(format!("base piece with {} edges has no coloring", piece.edges.len())));
        }
        if piece.groups.is_some() {
            stats.local_fallbacks += 1;
        }
    }
    for step in steps.iter().rev() {
        for &e in &step.removed {
            w.revive(e);
        }
        let mut vars: Vec<usize> = step.removed.clone();
        vars.extend_from_slice(&step.recolor);
        let saved: Vec<u32> = vars.iter().map(|&e| colors[e]).collect();
        for &e in &vars {
            colors[e] = 0;
        }
        // chain scripts read the colors of the smaller graph, recolored edges included
        for (&e, &c) in vars.iter().zip(&saved) {
            colors[e] = c;
        }
        let groups = rules.resolve(&step.plan, &w, &colors);
        for &e in &vars {
            colors[e] = 0;
        }
        if apply_groups(&w, &mut colors, &groups, k, rules.property())
            && vars.iter().all(|&e| colors[e] != 0)
            && locally_valid(&w, &colors, &vars, rules.property())
        {
            stats.scripted += 1;
            continue;
        }
        for &e in &vars {
            colors[e] = 0;
        }
        stats.fallback_kinds.push(step.kind);
        if search(&w, &mut colors, &vars, k, rules.property()) && locally_valid(&w, &colors, &vars, rules.property()) {
            stats.local_fallbacks += 1;
            continue;
        }
        let all = w.live_edges();
        for &e in &all {
            colors[e] = 0;
        }
        if !search(&w, &mut colors, &all, k, rules.property()) {
            return Err(Error::Invariant(format!(
                "no {k}-coloring extends past a {:?} step",
                step.kind
            )));
        }
        stats.global_fallbacks += 1;
    }
    let trace = ReductionTrace {
        steps: steps
            .iter()
            .map(|s| TraceStep {
                kind: s.kind,
                removed: s.removed.clone(),
                recolored: s.recolor.clone(),
            })
            .collect(),
        base_edges,
    };
    Ok(Outcome { colors, trace, stats })
}

/// Whether `c` is allowed on `e` given the colored live edges.
fn admissible(w: &Work, colors: &mut [u32], e: usize, c: u32, property: bool) -> bool {
    if w.conflicts(e).iter().any(|&f| colors[f] == c) {
        return false;
    }
    if !property {
        return true;
    }
    let old = colors[e];
    colors[e] = c;
    let ok = w.triples(e).iter().all(|t| triple_ok(colors, t));
    colors[e] = old;
    ok
}

fn triple_ok(colors: &[u32], &[a, b, c]: &[usize; 3]) -> bool {
    let (x, y, z) = (colors[a], colors[b], colors[c]);
    if x == 0 || y == 0 || z == 0 {
        return true;
    }
    x != z && (y == x || y == z)
}

fn apply_groups(w: &Work, colors: &mut [u32], groups: &[Group], k: u32, property: bool) -> bool {
    for g in groups {
        let banned: Vec<u32> = g.avoid.iter().map(|&e| colors[e]).filter(|&c| c != 0).collect();
        let candidates: Vec<u32> = match g.choice {
            Choice::Lowest => (1..=k).collect(),
            Choice::Copy(e) => vec![colors[e]],
            Choice::Fixed(c) => vec![c],
        };
        let mut chosen = None;
        'colors: for c in candidates {
            if c == 0 || banned.contains(&c) {
                continue;
            }
            for (i, &e) in g.edges.iter().enumerate() {
                if !admissible(w, colors, e, c, property) {
                    for &f in &g.edges[..i] {
                        colors[f] = 0;
                    }
                    continue 'colors;
                }
                colors[e] = c;
            }
            chosen = Some(c);
            break;
        }
        if chosen.is_none() {
            return false;
        }
    }
    true
}

/// Checks all constraints touching edges incident to the endpoints of `edges`.
fn locally_valid(w: &Work, colors: &[u32], edges: &[usize], property: bool) -> bool {
    let mut touched: Vec<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = w.g.edge(e);
            w.links(u).chain(w.links(v)).map(|(_, f)| f).collect::<Vec<_>>()
        })
        .collect();
    touched.sort_unstable();
    touched.dedup();
    touched.iter().all(|&e| {
        colors[e] != 0
            && w.conflicts(e).iter().all(|&f| colors[f] != colors[e])
            && (!property || w.triples(e).iter().all(|t| triple_ok(colors, t)))
    })
}

const SEARCH_BUDGET: u64 = 20_000_000;

/// Exhaustive search over the colors of `vars` (currently uncolored), with
/// every other live edge fixed. Leaves `colors` filled in on success.
pub(crate) fn search(w: &Work, colors: &mut [u32], vars: &[usize], k: u32, property: bool) -> bool {
    let mut nodes = 0u64;
    let mut free: Vec<usize> = vars.to_vec();
    free.sort_unstable();
    free.dedup();
    let ok = backtrack(w, colors, &mut free, k, property, &mut nodes);
    if !ok {
        for &e in vars {
            colors[e] = 0;
        }
    }
    ok
}

fn backtrack(w: &Work, colors: &mut [u32], free: &mut Vec<usize>, k: u32, property: bool, nodes: &mut u64) -> bool {
    if free.is_empty() {
        return true;
    }
    *nodes += 1;
    if *nodes > SEARCH_BUDGET {
        return false;
    }
    // most constrained variable first
    let mut best = (usize::MAX, 0, Vec::new());
    for (i, &e) in free.iter().enumerate() {
        let options: Vec<u32> = (1..=k).filter(|&c| admissible(w, colors, e, c, property)).collect();
        if options.len() < best.0 {
            best = (options.len(), i, options);
            if best.0 == 0 {
                return false;
            }
        }
    }
    let (_, i, options) = best;
    let e = free.swap_remove(i);
    for c in options {
        colors[e] = c;
        if backtrack(w, colors, free, k, property, nodes) {
            return true;
        }
    }
    colors[e] = 0;
    free.push(e);
    let last = free.len() - 1;
    free.swap(i, last);
    false
}
