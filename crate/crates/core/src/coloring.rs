//! Coloring values, validators, and the two transformations between star
//! vertex colorings and injective edge colorings.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::conflict::conflicting_edges;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Positive color per edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::ZeroColor);
        }
        Ok(EdgeColoring { colors })
    }

    /// All edges of `g` get color 1.
    pub fn uniform(g: &Graph) -> Self {
        EdgeColoring { colors: vec![1; g.m()] }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors.
    pub fn palette_size(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Renumbers colors to `1..=k` preserving their relative order.
    pub fn densified(&self) -> EdgeColoring {
        let order: BTreeMap<u32, u32> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .zip(1..)
            .collect();
        EdgeColoring {
            colors: self.colors.iter().map(|c| order[c]).collect(),
        }
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::PartialColoring {
                expected: g.m(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Vertex colors as opaque comparable tokens. Incidence signatures are
/// stored as bitmasks over the edge palette.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexColoring {
    colors: Vec<u64>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u64>) -> Self {
        VertexColoring { colors }
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u64 {
        self.colors[v]
    }

    pub fn distinct(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Link {
    /// The two edges are the ends of a path of length three through this edge.
    Middle(usize),
    /// The two edges lie in a triangle closed by this edge.
    Triangle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    SameColorConflict { e: usize, f: usize, link: Link, color: u32 },
    ImproperEdge { u: usize, v: usize },
    BicoloredPath { path: [usize; 4] },
    SimplePathColors { path: [usize; 4], distinct: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn ok() -> Self {
        Verdict { valid: true, witness: None }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict {
            valid: false,
            witness: Some(w),
        }
    }
}

/// The edge that makes `e` and `f` conflict: the closing edge of their
/// triangle, or the lowest-id edge joining them.
pub fn conflict_link(g: &Graph, e: usize, f: usize) -> Option<Link> {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    if let Some(s) = [a, b].into_iter().find(|&x| x == c || x == d) {
        let p = if s == a { b } else { a };
        let r = if s == c { d } else { c };
        return g.edge_id(p, r).map(Link::Triangle);
    }
    [(a, c), (a, d), (b, c), (b, d)]
        .into_iter()
        .filter_map(|(x, y)| g.edge_id(x, y))
        .min()
        .map(Link::Middle)
}

/// Checks that no two conflicting edges share a color. The witness is the
/// lexicographically smallest offending pair.
pub fn verify_injective(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    c.check_total(g)?;
    for e in 0..g.m() {
        for f in conflicting_edges(g, e) {
            if f > e && c.color(e) == c.color(f) {
                let link = conflict_link(g, e, f).expect("conflicting edges are linked");
                return Ok(Verdict::fail(Witness::SameColorConflict {
                    e,
                    f,
                    link,
                    color: c.color(e),
                }));
            }
        }
    }
    Ok(Verdict::ok())
}

/// Proper, and no path on four vertices carries only two colors.
pub fn verify_star_coloring(g: &Graph, vc: &VertexColoring) -> Verdict {
    let col = vc.colors();
    if col.len() != g.n() {
        return Verdict {
            valid: false,
            witness: None,
        };
    }
    for &(u, v) in g.edges() {
        if col[u] == col[v] {
            return Verdict::fail(Witness::ImproperEdge { u, v });
        }
    }
    for &(b, c) in g.edges() {
        for (x, y) in [(b, c), (c, b)] {
            for &a in g.neighbors(x) {
                if a == y || col[a] != col[y] {
                    continue;
                }
                for &d in g.neighbors(y) {
                    if d != x && d != a && col[d] == col[x] {
                        return Verdict::fail(Witness::BicoloredPath { path: [a, x, y, d] });
                    }
                }
            }
        }
    }
    Verdict::ok()
}

/// Every path `v1 v2 v3 v4` whose interior vertices have degree 2 shows
/// exactly two colors on its three edges.
pub fn verify_simple_path_property(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    c.check_total(g)?;
    for (e, &(b, x)) in g.edges().iter().enumerate() {
        if g.degree(b) != 2 || g.degree(x) != 2 {
            continue;
        }
        let a = other_neighbor(g, b, x);
        let d = other_neighbor(g, x, b);
        if a == d {
            continue;
        }
        let ea = g.edge_id(a, b).unwrap();
        let ed = g.edge_id(x, d).unwrap();
        let distinct = [c.color(ea), c.color(e), c.color(ed)]
            .into_iter()
            .collect::<BTreeSet<_>>()
            .len();
        if distinct != 2 {
            return Ok(Verdict::fail(Witness::SimplePathColors {
                path: [a, b, x, d],
                distinct,
            }));
        }
    }
    Ok(Verdict::ok())
}

fn other_neighbor(g: &Graph, v: usize, not: usize) -> usize {
    *g.neighbors(v).iter().find(|&&w| w != not).unwrap()
}

/// Color classes of an injective coloring, each an induced star forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForestDecomposition {
    /// `(color, edge ids)` in increasing color order.
    pub classes: Vec<(u32, Vec<usize>)>,
}

impl StarForestDecomposition {
    pub fn to_coloring(&self, m: usize) -> Result<EdgeColoring> {
        let mut colors = vec![0u32; m];
        for (i, (_, edges)) in self.classes.iter().enumerate() {
            for &e in edges {
                colors[e] = i as u32 + 1;
            }
        }
        EdgeColoring::new(colors).map_err(|_| Error::PartialColoring { expected: m, got: 0 })
    }
}

pub fn star_forest_decomposition(g: &Graph, c: &EdgeColoring) -> Result<StarForestDecomposition> {
    if !verify_injective(g, c)?.valid {
        return Err(Error::NotInjective);
    }
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for e in 0..g.m() {
        by_color.entry(c.color(e)).or_default().push(e);
    }
    let classes: Vec<(u32, Vec<usize>)> = by_color.into_iter().collect();
    for (color, edges) in &classes {
        if !is_induced_star_forest(g, edges) {
            return Err(Error::Invariant(format!("color class {color} is not an induced star forest")));
        }
    }
    Ok(StarForestDecomposition { classes })
}

/// The edge set forms a star forest and equals the subgraph of `g` induced
/// on its vertices.
pub fn is_induced_star_forest(g: &Graph, edges: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    let mut in_class = vec![false; g.m()];
    for &e in edges {
        let (u, v) = g.edge(e);
        inside[u] = true;
        inside[v] = true;
        in_class[e] = true;
    }
    let induced = g
        .edges()
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| in_class[e] || !(inside[u] && inside[v]));
    if !induced {
        return false;
    }
    let sub = g.edge_subgraph(edges);
    sub.component_subgraphs().iter().all(|comp| {
        let h = &comp.graph;
        h.is_forest() && h.degrees().iter().filter(|&&d| d >= 2).count() <= 1
    })
}

/// Colors each edge by the unordered pair of its endpoint colors. The
/// distinct pairs, sorted, become colors `1..=k`.
pub fn star_to_injective(g: &Graph, vc: &VertexColoring) -> Result<EdgeColoring> {
    if !verify_star_coloring(g, vc).valid {
        return Err(Error::NotStarColoring);
    }
    let pair = |e: usize| {
        let (u, v) = g.edge(e);
        let (a, b) = (vc.color(u), vc.color(v));
        (a.min(b), a.max(b))
    };
    let palette: BTreeMap<(u64, u64), u32> = (0..g.m())
        .map(pair)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .zip(1..)
        .collect();
    EdgeColoring::new((0..g.m()).map(|e| palette[&pair(e)]).collect())
}

/// Colors each vertex of degree at least 2 by the set of colors on its
/// incident edges (as a bitmask), and degree-1 vertices by the empty set.
/// In an isolated edge the higher endpoint takes the singleton set of its
/// edge color instead.
pub fn injective_to_star(g: &Graph, c: &EdgeColoring) -> Result<VertexColoring> {
    if !verify_injective(g, c)?.valid {
        return Err(Error::NotInjective);
    }
    let dense = c.densified();
    if dense.palette_size() > 64 {
        return Err(Error::PreconditionViolated(
            "incidence signatures support at most 64 edge colors".into(),
        ));
    }
    let bit = |e: usize| 1u64 << (dense.color(e) - 1);
    let mut colors = vec![0u64; g.n()];
    for v in 0..g.n() {
        match g.degree(v) {
            0 => {}
            1 => {
                let e = g.incident(v)[0];
                let w = g.other_end(e, v);
                if g.degree(w) == 1 && v > w {
                    colors[v] = bit(e);
                }
            }
            _ => colors[v] = g.incident(v).iter().fold(0, |acc, &e| acc | bit(e)),
        }
    }
    Ok(VertexColoring::new(colors))
}

/// Greedy star coloring in vertex order: each vertex takes the least color
/// that keeps the partial coloring proper and free of two-colored 4-paths.
pub fn greedy_star_coloring(g: &Graph) -> VertexColoring {
    let mut col: Vec<Option<u64>> = vec![None; g.n()];
    for v in 0..g.n() {
        let mut c = 1;
        loop {
            col[v] = Some(c);
            let proper = g.neighbors(v).iter().all(|&w| col[w] != Some(c));
            if proper && !bicolored_path_through(g, &col, v) {
                break;
            }
            c += 1;
        }
    }
    VertexColoring::new(col.into_iter().map(Option::unwrap).collect())
}

fn bicolored_path_through(g: &Graph, col: &[Option<u64>], v: usize) -> bool {
    let two_colored = |p: [usize; 4]| match p.map(|x| col[x]) {
        [Some(a), Some(b), Some(c), Some(d)] => a == c && b == d && a != b,
        _ => false,
    };
    for &a in g.neighbors(v) {
        for &b in g.neighbors(a) {
            if b == v {
                continue;
            }
            for &d in g.neighbors(b) {
                if d != v && d != a && two_colored([v, a, b, d]) {
                    return true;
                }
            }
        }
        for &b in g.neighbors(v) {
            if b == a {
                continue;
            }
            for &d in g.neighbors(b) {
                if d != v && d != a && two_colored([a, v, b, d]) {
                    return true;
                }
            }
        }
    }
    false
}
