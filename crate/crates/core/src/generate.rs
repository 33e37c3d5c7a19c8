//! Seeded graph generators and an exhaustive generator for small connected
//! subcubic graphs (one representative per isomorphism class).

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(&mut rng(seed), n, p)
}

pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// Uniform random recursive tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

/// Random connected graph with maximum degree at most `max_degree`: a random
/// spanning tree followed by `extra` attempted chord insertions.
pub fn random_bounded_degree<R: Rng>(rng: &mut R, n: usize, max_degree: usize, extra: usize) -> Graph {
    assert!(max_degree >= 2 || n <= 2);
    let mut deg = vec![0usize; n];
    let mut pairs = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < max_degree).collect();
        let u = *open.choose(rng).expect("a tree vertex with spare degree");
        deg[u] += 1;
        deg[v] += 1;
        pairs.push((u, v));
    }
    let mut present: std::collections::HashSet<(usize, usize)> = pairs.iter().copied().collect();
    for _ in 0..extra {
        let open: Vec<usize> = (0..n).filter(|&u| deg[u] < max_degree).collect();
        if open.len() < 2 {
            break;
        }
        let u = *open.choose(rng).unwrap();
        let v = *open.choose(rng).unwrap();
        let k = (u.min(v), u.max(v));
        if u != v && !present.contains(&k) {
            present.insert(k);
            deg[u] += 1;
            deg[v] += 1;
            pairs.push(k);
        }
    }
    Graph::new(n, pairs).unwrap()
}

pub fn random_connected_subcubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let extra = rng.gen_range(0..=n);
    random_bounded_degree(rng, n, 3, extra)
}

/// Random bipartite graph with maximum degree at most `max_degree` and no
/// isolated vertices.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize, max_degree: usize, p: f64) -> Graph {
    let mut deg = vec![0usize; a + b];
    let mut pairs = Vec::new();
    let mut candidates: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    candidates.shuffle(rng);
    for (u, v) in candidates {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            pairs.push((u, v));
        }
    }
    drop_isolated(a + b, &pairs)
}

/// Relabels away vertices without incident edges.
pub fn drop_isolated(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let mut used = vec![false; n];
    for &(u, v) in pairs {
        used[u] = true;
        used[v] = true;
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if used[v] {
            label[v] = next;
            next += 1;
        }
    }
    Graph::new(next, pairs.iter().map(|&(u, v)| (label[u], label[v]))).unwrap()
}

/// Replaces each edge, with probability `p`, by a path of two edges.
pub fn subdivide<R: Rng>(rng: &mut R, g: &Graph, p: f64) -> Graph {
    let mut n = g.n();
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if rng.gen_bool(p) {
            pairs.push((u, n));
            pairs.push((n, v));
            n += 1;
        } else {
            pairs.push((u, v));
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// Random connected subcubic outerplanar graph with maximum degree 3.
///
/// Built from polygons glued along outer edges whose endpoints both have
/// degree 2, polygons hung from a degree-2 vertex by a bridge, and pendant
/// paths. Every step keeps all vertices on the outer face.
pub fn random_outerplanar_subcubic<R: Rng>(rng: &mut R, steps: usize) -> Graph {
    let mut b = Builder::default();
    let first = rng.gen_range(3..=7);
    b.polygon_from(None, first);
    let mut grew = false;
    for _ in 0..steps.max(1) {
        match rng.gen_range(0..4) {
            0 | 1 => {
                let glue: Vec<(usize, usize)> = b
                    .pairs
                    .iter()
                    .copied()
                    .filter(|&(u, v)| b.deg[u] == 2 && b.deg[v] == 2)
                    .collect();
                if let Some(&(u, v)) = glue.choose(rng) {
                    let len = rng.gen_range(1..=5);
                    let mut prev = u;
                    for _ in 0..len {
                        let w = b.vertex();
                        b.edge(prev, w);
                        prev = w;
                    }
                    b.edge(prev, v);
                    grew = true;
                }
            }
            2 => {
                if let Some(w) = b.pick_degree_two(rng) {
                    let size = rng.gen_range(3..=6);
                    b.polygon_from(Some(w), size);
                    grew = true;
                }
            }
            _ => {
                if let Some(w) = b.pick_degree_two(rng) {
                    let len = rng.gen_range(1..=3);
                    let mut prev = w;
                    for _ in 0..len {
                        let x = b.vertex();
                        b.edge(prev, x);
                        prev = x;
                    }
                    grew = true;
                }
            }
        }
    }
    if !grew {
        let w = b.pick_degree_two(rng).unwrap();
        let x = b.vertex();
        b.edge(w, x);
    }
    Graph::new(b.deg.len(), b.pairs).unwrap()
}

#[derive(Default)]
struct Builder {
    deg: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.deg.push(0);
        self.deg.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.pairs.push((u, v));
    }

    fn polygon_from(&mut self, anchor: Option<usize>, size: usize) {
        let vs: Vec<usize> = (0..size).map(|_| self.vertex()).collect();
        for i in 0..size {
            self.edge(vs[i], vs[(i + 1) % size]);
        }
        if let Some(a) = anchor {
            self.edge(a, vs[0]);
        }
    }

    fn pick_degree_two<R: Rng>(&self, rng: &mut R) -> Option<usize> {
        let open: Vec<usize> = (0..self.deg.len()).filter(|&v| self.deg[v] == 2).collect();
        open.choose(rng).copied()
    }
}

/// Canonical adjacency certificate: row `i` is the neighbor bitmask of the
/// vertex labelled `i` under the canonical labelling. Two graphs (n <= 64)
/// are isomorphic iff their certificates are equal.
pub fn canonical_certificate(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "canonical form supports at most 64 vertices");
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    let mut best = None;
    canon_search(g, cells, &mut best);
    best.unwrap_or_default()
}

pub fn graph_from_certificate(cert: &[u64]) -> Graph {
    let n = cert.len();
    let pairs = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| cert[i] >> j & 1 == 1).map(move |j| (i, j)));
    Graph::new(n, pairs).unwrap()
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn canon_search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0usize; g.n()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let mut cert = vec![0u64; g.n()];
            for &(u, v) in g.edges() {
                cert[label[u]] |= 1 << label[v];
                cert[label[v]] |= 1 << label[u];
            }
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = cells[..i].to_vec();
                split.push(vec![v]);
                split.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                split.extend(cells[i + 1..].iter().cloned());
                canon_search(g, split, best);
            }
        }
    }
}

/// Every connected graph with maximum degree at most 3 and between 2 and
/// `max_n` vertices, one per isomorphism class, in canonical labelling.
/// Ordered by vertex count, then by certificate.
pub fn enumerate_connected_subcubic(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    level.insert(vec![0], Graph::empty(1));
    for n in 2..=max_n {
        let mut next: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for g in level.values() {
            let open: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
            for size in 1..=3.min(open.len()) {
                for subset in combinations(&open, size) {
                    let mut pairs = g.edges().to_vec();
                    pairs.extend(subset.iter().map(|&u| (u, n - 1)));
                    let h = Graph::new(n, pairs).unwrap();
                    let cert = canonical_certificate(&h);
                    next.entry(cert).or_insert_with_key(|c| graph_from_certificate(c));
                }
            }
        }
        out.extend(next.values().cloned());
        level = next;
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_is_label_invariant() {
        let mut r = rng(7);
        for _ in 0..50 {
            let g = random_connected_subcubic(&mut r, 9);
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut r);
            let h = Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
            assert_eq!(canonical_certificate(&g), canonical_certificate(&h));
        }
        assert_ne!(
            canonical_certificate(&Graph::path(4)),
            canonical_certificate(&Graph::star(3))
        );
    }

    #[test]
    fn enumeration_counts() {
        // connected graphs with maximum degree <= 3 (OEIS A112410: 1, 1, 2, 6, 10, 29, 64, 194)
        let all = enumerate_connected_subcubic(8);
        let count = |n| all.iter().filter(|g| g.n() == n).count();
        assert_eq!(
            (2..=8).map(count).collect::<Vec<_>>(),
            vec![1, 2, 6, 10, 29, 64, 194]
        );
    }

    #[test]
    fn outerplanar_generator_is_subcubic_and_connected() {
        let mut r = rng(11);
        for _ in 0..100 {
            let g = random_outerplanar_subcubic(&mut r, 6);
            assert_eq!(g.delta(), 3);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn bipartite_generator() {
        let mut r = rng(3);
        for _ in 0..50 {
            let g = random_bipartite(&mut r, 5, 6, 3, 0.5);
            assert!(g.is_bipartite());
            assert!(g.delta() <= 3);
            assert!(g.min_degree().map_or(true, |d| d >= 1));
        }
    }
}
