//! Exact maximum average degree.
//!
//! `mad(G)` is twice the maximum edge density `|E(H)|/|V(H)|` over
//! non-empty subgraphs; a densest subgraph can always be taken induced.
//! Densities are compared as exact rationals. Each improvement step solves
//! one minimum cut on the edge/vertex closure network; the loop stops at
//! the first density that no vertex set beats.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact rational in lowest terms, compared by cross-multiplication.
pub type Rational = num_rational::Ratio<i64>;

pub fn mad_exact(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(max_density(g) * 2)
}

/// Maximum of `|E(H)|/|V(H)|` over induced subgraphs `H`, with a maximizing
/// vertex set.
pub fn densest_subgraph(g: &Graph) -> Result<(Rational, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best_set: Vec<usize> = (0..g.n()).collect();
    let mut best = Rational::new(g.m() as i64, g.n() as i64);
    loop {
        match denser_than(g, best) {
            Some(set) => {
                let d = induced_density(g, &set);
                debug_assert!(d > best);
                best = d;
                best_set = set;
            }
            None => return Ok((best, best_set)),
        }
    }
}

fn max_density(g: &Graph) -> Rational {
    densest_subgraph(g).map(|(d, _)| d).unwrap_or_default()
}

/// `|E(G[S])| / |S|` for a non-empty vertex set.
pub fn induced_density(g: &Graph, set: &[usize]) -> Rational {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let m = g
        .edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .count();
    Rational::new(m as i64, set.len() as i64)
}

/// A vertex set whose induced density strictly exceeds `target = p/q`, found
/// by maximizing `q|E(S)| - p|S|` through a minimum cut.
fn denser_than(g: &Graph, target: Rational) -> Option<Vec<usize>> {
    let (p, q) = (*target.numer(), *target.denom());
    let m = g.m();
    let n = g.n();
    // nodes: source, edge nodes, vertex nodes, sink
    let source = 0;
    let sink = 1 + m + n;
    let mut net = FlowNetwork::new(sink + 1);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_edge(source, 1 + e, q);
        net.add_edge(1 + e, 1 + m + u, i64::MAX / 4);
        net.add_edge(1 + e, 1 + m + v, i64::MAX / 4);
    }
    for v in 0..n {
        net.add_edge(1 + m + v, sink, p);
    }
    let cut = net.max_flow(source, sink);
    if cut >= q * m as i64 {
        return None;
    }
    let reach = net.residual_reachable(source);
    let set: Vec<usize> = (0..n).filter(|&v| reach[1 + m + v]).collect();
    (!set.is_empty()).then_some(set)
}

/// Dinic's algorithm on integer capacities.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<i64> {
        let mut level = vec![-1; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, pushed: i64, level: &[i64], it: &mut [usize]) -> i64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.head[u].len() {
            let a = self.head[u][it[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let d = self.augment(v, t, pushed.min(self.cap[a]), level, it);
                if d > 0 {
                    self.cap[a] -= d;
                    self.cap[a ^ 1] += d;
                    return d;
                }
            }
            it[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t] < 0 {
                return flow;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.augment(s, t, i64::MAX, &level, &mut it);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l >= 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    fn brute_force_mad(g: &Graph) -> Rational {
        let n = g.n();
        let mut best = Rational::from_integer(0);
        for mask in 1u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            best = best.max(induced_density(g, &set) * 2);
        }
        best
    }

    #[test]
    fn known_values() {
        assert_eq!(mad_exact(&Graph::path(4)), Ok(Rational::new(3, 2)));
        assert_eq!(mad_exact(&Graph::cycle(7)), Ok(Rational::from_integer(2)));
        assert_eq!(mad_exact(&Graph::complete(4)), Ok(Rational::from_integer(3)));
        assert_eq!(mad_exact(&Graph::empty(3)), Ok(Rational::from_integer(0)));
        assert_eq!(mad_exact(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn dense_core_inside_sparse_graph() {
        // K4 with a long tail: the K4 dominates
        let mut pairs = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        pairs.extend((3..10).map(|i| (i, i + 1)));
        let g = Graph::new(11, pairs).unwrap();
        let (d, set) = densest_subgraph(&g).unwrap();
        assert_eq!(d, Rational::new(3, 2));
        assert_eq!(set, vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(seed in any::<u64>(), n in 1usize..10, p in 0.1f64..0.7) {
            let g = generate::random_graph(n, p, seed);
            let mad = mad_exact(&g).unwrap();
            prop_assert_eq!(mad, brute_force_mad(&g));
            prop_assert!(mad >= Rational::new(2 * g.m() as i64, g.n() as i64));
            if g.is_forest() {
                prop_assert!(mad < Rational::from_integer(2));
            } else {
                prop_assert!(mad >= Rational::from_integer(2));
            }
        }
    }
}
