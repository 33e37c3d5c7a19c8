//! Exact injective chromatic index.
//!
//! The index equals the chromatic number of the conflict graph. The main
//! search is DSATUR branch and bound on the conflict graph, seeded with a
//! large clique; [`brute_force_index`] works from the raw definition and
//! serves as an independent oracle.

use rand::seq::SliceRandom;

use crate::coloring::EdgeColoring;
use crate::conflict::ConflictGraph;
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;

/// Clique search node limit used by [`injective_chromatic_index`].
pub const DEFAULT_CLIQUE_BUDGET: usize = 200_000;

/// Edge limit for [`brute_force_index`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub index: usize,
    pub coloring: EdgeColoring,
    /// Pairwise conflicting edges; its size is a lower bound on the index.
    pub clique: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    /// Permutes DSATUR tie-breaking. The index never depends on it.
    pub shuffle_seed: Option<u64>,
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<EdgeColoring> {
    is_k_colorable_with(g, k, &SolverOptions::default())
}

pub fn is_k_colorable_with(g: &Graph, k: usize, opts: &SolverOptions) -> Option<EdgeColoring> {
    assert!(k >= 1, "k must be positive");
    let cg = ConflictGraph::build(g);
    let clique = max_clique(cg.base(), DEFAULT_CLIQUE_BUDGET);
    color_vertices(cg.base(), k, &clique, opts).map(to_edge_coloring)
}

pub fn injective_chromatic_index(g: &Graph) -> Result<SolveResult> {
    injective_chromatic_index_with(g, &SolverOptions::default())
}

pub fn injective_chromatic_index_with(g: &Graph, opts: &SolverOptions) -> Result<SolveResult> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let cg = ConflictGraph::build(g);
    let clique = max_clique(cg.base(), DEFAULT_CLIQUE_BUDGET);
    for k in clique.len().max(1)..=g.m() {
        if let Some(colors) = color_vertices(cg.base(), k, &clique, opts) {
            return Ok(SolveResult {
                index: k,
                coloring: to_edge_coloring(colors),
                clique: clique.iter().map(|&v| cg.source_edge(v)).collect(),
            });
        }
    }
    Err(Error::Invariant("a coloring with one color per edge always exists".into()))
}

/// A clique of the conflict graph found within `budget` search nodes.
pub fn max_conflict_clique(g: &Graph, budget: usize) -> Vec<usize> {
    let cg = ConflictGraph::build(g);
    max_clique(cg.base(), budget)
}

fn to_edge_coloring(colors: Vec<u32>) -> EdgeColoring {
    EdgeColoring::new(colors.into_iter().map(|c| c + 1).collect()).expect("positive colors")
}

/// Proper vertex `k`-coloring by DSATUR backtracking. Vertices of `clique`
/// are fixed to colors `0..clique.len()` first.
pub fn color_vertices(h: &Graph, k: usize, clique: &[usize], opts: &SolverOptions) -> Option<Vec<u32>> {
    if clique.len() > k {
        return None;
    }
    let n = h.n();
    let mut rank: Vec<usize> = (0..n).collect();
    if let Some(seed) = opts.shuffle_seed {
        rank.shuffle(&mut generate::rng(seed));
    }
    let mut search = Dsatur {
        h,
        k,
        color: vec![u32::MAX; n],
        seen: vec![vec![0u16; k]; n],
        sat: vec![0; n],
        rank,
        used: 0,
    };
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c as u32);
    }
    search.used = clique.len();
    if search.run(clique.len()) {
        Some(search.color)
    } else {
        None
    }
}

struct Dsatur<'a> {
    h: &'a Graph,
    k: usize,
    color: Vec<u32>,
    seen: Vec<Vec<u16>>,
    sat: Vec<usize>,
    rank: Vec<usize>,
    used: usize,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: u32) {
        self.color[v] = c;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.seen[w][c as usize];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v] as usize;
        self.color[v] = u32::MAX;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.seen[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    /// Highest saturation, then highest degree, then lowest rank.
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        for v in 0..self.h.n() {
            if self.color[v] != u32::MAX {
                continue;
            }
            if best == usize::MAX
                || (self.sat[v], self.h.degree(v), std::cmp::Reverse(self.rank[v]))
                    > (self.sat[best], self.h.degree(best), std::cmp::Reverse(self.rank[best]))
            {
                best = v;
            }
        }
        best
    }

    fn run(&mut self, colored: usize) -> bool {
        if colored == self.h.n() {
            return true;
        }
        let v = self.pick();
        if self.sat[v] >= self.k {
            return false;
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.seen[v][c] != 0 {
                continue;
            }
            let fresh = c == self.used;
            self.assign(v, c as u32);
            if fresh {
                self.used += 1;
            }
            if self.run(colored + 1) {
                return true;
            }
            if fresh {
                self.used -= 1;
            }
            self.unassign(v);
        }
        false
    }
}

/// Maximum clique by Bron–Kerbosch with pivoting, stopped after `budget`
/// calls; returns the largest clique seen (sorted).
pub fn max_clique(h: &Graph, budget: usize) -> Vec<usize> {
    let n = h.n();
    let words = n.div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; n];
    for &(u, v) in h.edges() {
        adj[u][v / 64] |= 1 << (v % 64);
        adj[v][u / 64] |= 1 << (u % 64);
    }
    let mut best = greedy_clique(h);
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut calls = 0usize;
    let mut current = Vec::new();
    bron_kerbosch(&adj, &mut current, all, vec![0u64; words], &mut best, &mut calls, budget);
    best.sort_unstable();
    best
}

fn greedy_clique(h: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| h.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn bron_kerbosch(
    adj: &[Vec<u64>],
    current: &mut Vec<usize>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    best: &mut Vec<usize>,
    calls: &mut usize,
    budget: usize,
) {
    *calls += 1;
    if count(&p) == 0 {
        if x.iter().all(|&w| w == 0) && current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if *calls > budget || current.len() + count(&p) <= best.len() {
        return;
    }
    let pivot = bits(&p)
        .chain(bits(&x))
        .max_by_key(|&u| p.iter().zip(&adj[u]).map(|(a, b)| (a & b).count_ones()).sum::<u32>())
        .unwrap();
    let candidates: Vec<usize> = bits(&p).filter(|&v| adj[pivot][v / 64] >> (v % 64) & 1 == 0).collect();
    for v in candidates {
        let np: Vec<u64> = p.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        let nx: Vec<u64> = x.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        current.push(v);
        bron_kerbosch(adj, current, np, nx, best, calls, budget);
        current.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
        if *calls > budget {
            return;
        }
    }
}

/// Injective chromatic index by exhaustive search over edge colorings,
/// checking the consecutive-edge condition directly (no conflict graph).
pub fn brute_force_index(g: &Graph) -> Result<usize> {
    if g.m() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let m = g.m();
    // earlier[e]: edges f < e such that some third edge makes e, ?, f consecutive
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); m];
    for e1 in 0..m {
        for e3 in 0..e1 {
            if (0..m).any(|e2| e2 != e1 && e2 != e3 && consecutive(g, e1, e2, e3)) {
                earlier[e1].push(e3);
            }
        }
    }
    let mut colors = vec![0usize; m];
    for k in 1..=m {
        if extend(&earlier, &mut colors, 0, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("one color per edge is always injective")
}

/// Three distinct edges forming a path `e1 e2 e3` in this order, or a triangle.
fn consecutive(g: &Graph, e1: usize, e2: usize, e3: usize) -> bool {
    let (a, b) = g.edge(e1);
    let (c, d) = g.edge(e2);
    let (x, y) = g.edge(e3);
    let touches = |p: usize, q: usize, r: usize, s: usize| p == r || p == s || q == r || q == s;
    let mut vs = [a, b, c, d, x, y];
    vs.sort_unstable();
    let distinct = 1 + vs.windows(2).filter(|w| w[0] != w[1]).count();
    match distinct {
        3 => true,
        4 => touches(a, b, c, d) && touches(c, d, x, y) && !touches(a, b, x, y),
        _ => false,
    }
}

fn extend(earlier: &[Vec<usize>], colors: &mut [usize], e: usize, used: usize, k: usize) -> bool {
    if e == colors.len() {
        return true;
    }
    for c in 1..=(used + 1).min(k) {
        if earlier[e].iter().all(|&f| colors[f] != c) {
            colors[e] = c;
            if extend(earlier, colors, e + 1, used.max(c), k) {
                return true;
            }
        }
    }
    colors[e] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_injective;

    #[test]
    fn cycle_five() {
        let c5 = Graph::cycle(5);
        assert!(is_k_colorable(&c5, 2).is_none());
        let c = is_k_colorable(&c5, 3).unwrap();
        assert!(verify_injective(&c5, &c).unwrap().valid);
    }

    #[test]
    fn k4_needs_six() {
        let k4 = Graph::complete(4);
        assert!(is_k_colorable(&k4, 5).is_none());
        assert!(is_k_colorable(&k4, 6).is_some());
        assert_eq!(max_conflict_clique(&k4, 1000).len(), 6);
    }

    #[test]
    fn enough_colors_always_work() {
        let g = generate::random_graph(8, 0.5, 5);
        assert!(is_k_colorable(&g, g.m()).is_some());
    }

    #[test]
    fn brute_force_values() {
        assert_eq!(brute_force_index(&Graph::path(5)), Ok(2));
        assert_eq!(brute_force_index(&Graph::cycle(8)), Ok(2));
        assert_eq!(brute_force_index(&Graph::cycle(7)), Ok(3));
        assert_eq!(brute_force_index(&Graph::complete(7)), Err(Error::TooLarge { limit: 20 }));
        assert_eq!(brute_force_index(&Graph::empty(3)), Err(Error::NoEdges));
    }

    #[test]
    fn index_needs_edges() {
        assert!(matches!(injective_chromatic_index(&Graph::empty(2)), Err(Error::NoEdges)));
    }

    #[test]
    fn forest_cliques_are_small() {
        let p = Graph::path(9);
        assert!(max_conflict_clique(&p, 1000).len() <= 2);
    }

    #[test]
    fn monotone_in_k() {
        let g = Graph::complete_bipartite(3, 3);
        let first = (1..=g.m()).find(|&k| is_k_colorable(&g, k).is_some()).unwrap();
        assert_eq!(first, 3);
        for k in first..=g.m() {
            assert!(is_k_colorable(&g, k).is_some());
        }
    }
}
