//! Immutable simple graphs with dense vertex and edge identifiers.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Vertices are `0..n`, edges are `0..m` in insertion order. Each edge is
/// stored with its smaller endpoint first.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    index: HashMap<(usize, usize), usize>,
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub delta_a: usize,
    pub delta_b: usize,
    on_a: Vec<bool>,
}

impl Bipartition {
    pub fn is_on_a(&self, v: usize) -> bool {
        self.on_a[v]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let k = key(u, v);
            if g.index.contains_key(&k) {
                return Err(Error::DuplicateEdge(k.0, k.1));
            }
            let id = g.edges.len();
            g.edges.push(k);
            g.index.insert(k, id);
            g.incident[u].push(id);
            g.incident[v].push(id);
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).expect("edgeless graph")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, pairs).expect("complete graph")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let pairs = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, pairs).expect("complete bipartite graph")
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|v| (0, v))).expect("star")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident with `v`, in insertion order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn delta(&self) -> usize {
        self.max_degree().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.index.contains_key(&key(u, v))
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&key(u, v)).copied()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Whether both graphs have the same vertex count and edge set,
    /// ignoring edge order.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Two-coloring by breadth-first search. Each component's least vertex
    /// is placed on side A. Fails with an odd cycle as witness.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(true);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(Error::NotBipartite(odd_cycle(&parent, u, w)));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let on_a: Vec<bool> = side.into_iter().map(|s| s.unwrap_or(true)).collect();
        let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
        let (mut delta_a, mut delta_b) = (0, 0);
        for (v, &a) in on_a.iter().enumerate() {
            if a {
                side_a.push(v);
                delta_a = delta_a.max(self.degree(v));
            } else {
                side_b.push(v);
                delta_b = delta_b.max(self.degree(v));
            }
        }
        Ok(Bipartition {
            side_a,
            side_b,
            delta_a,
            delta_b,
            on_a,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.connected_components().len() == self.n
    }

    /// Subgraph induced on `vertices` (relabelled `0..k` in the given order).
    /// Edges keep their relative order. Returns the subgraph and, for each
    /// of its edges, the id of the edge in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                edge_map.push(e);
            }
        }
        let g = Graph::new(vertices.len(), pairs).expect("induced subgraph of a simple graph");
        (g, edge_map)
    }

    /// One induced subgraph per connected component, with vertex and edge
    /// maps back into `self`.
    pub fn component_subgraphs(&self) -> Vec<Component> {
        self.connected_components()
            .into_iter()
            .map(|vertices| {
                let (graph, edge_map) = self.induced_subgraph(&vertices);
                Component {
                    graph,
                    vertex_map: vertices,
                    edge_map,
                }
            })
            .collect()
    }

    /// Graph with the same vertices and only the listed edges.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Graph {
        Graph::new(self.n, edge_ids.iter().map(|&e| self.edges[e])).expect("edge subgraph")
    }

    /// Pairs of vertices at distance exactly two inside `side`, i.e. the
    /// square restricted to one side of a bipartite graph.
    pub fn distance_two_graph(&self, side: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in side.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        for (i, &v) in side.iter().enumerate() {
            let mut reach: Vec<usize> = self.adj[v]
                .iter()
                .flat_map(|&w| self.adj[w].iter().copied())
                .filter(|&x| x != v && local[x] != usize::MAX && !self.has_edge(v, x))
                .map(|x| local[x])
                .filter(|&j| j > i)
                .collect();
            reach.sort_unstable();
            reach.dedup();
            pairs.extend(reach.into_iter().map(|j| (i, j)));
        }
        Graph::new(side.len(), pairs).expect("distance-two graph")
    }
}

#[derive(Debug, Clone)]
pub struct Component {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut chain = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    // strip the common suffix down to the lowest common ancestor
    let (mut i, mut j) = (pu.len(), pw.len());
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edge(2), (0, 2));
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(Graph::new(4, [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(4, [(1, 0), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degree_queries() {
        let star = Graph::star(5);
        assert_eq!(star.degrees(), vec![5, 1, 1, 1, 1, 1]);
        assert_eq!(Graph::path(4).degrees(), vec![1, 2, 2, 1]);
        assert_eq!(Graph::empty(0).max_degree(), Err(Error::EmptyGraph));
        assert_eq!(Graph::empty(0).min_degree(), Err(Error::EmptyGraph));
        assert_eq!(Graph::path(4).min_degree(), Ok(1));
    }

    #[test]
    fn girth_values() {
        assert_eq!(Graph::complete(4).girth(), Girth::Finite(3));
        assert_eq!(Graph::path(7).girth(), Girth::Infinite);
        assert_eq!(Graph::cycle(9).girth(), Girth::Finite(9));
        assert_eq!(Graph::complete_bipartite(3, 3).girth(), Girth::Finite(4));
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        let b = Graph::cycle(6).bipartition().unwrap();
        assert_eq!(b.side_a, vec![0, 2, 4]);
        assert_eq!(b.side_b, vec![1, 3, 5]);
        match Graph::cycle(5).bipartition() {
            Err(Error::NotBipartite(mut cycle)) => {
                assert_eq!(cycle.len(), 5);
                cycle.sort_unstable();
                assert_eq!(cycle, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        // triangle hanging off a longer path
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let Err(Error::NotBipartite(cycle)) = g.bipartition() else {
            panic!("not bipartite")
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn components() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::empty(5).connected_components().len(), 5);
    }

    #[test]
    fn distance_two_on_one_side() {
        let g = Graph::complete_bipartite(3, 3);
        let d2 = g.distance_two_graph(&[0, 1, 2]);
        assert_eq!(d2, Graph::complete(3));
    }
}
