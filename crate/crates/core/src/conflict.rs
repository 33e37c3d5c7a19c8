//! The conflict graph: one vertex per edge of the source graph, two of them
//! adjacent when the edges are at distance exactly two or lie in a common
//! triangle. Injective edge colorings of a graph are exactly the proper
//! vertex colorings of its conflict graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether edges `e` and `f` must receive different colors.
///
/// Disjoint edges conflict when some edge joins an endpoint of one to an
/// endpoint of the other. Edges sharing a vertex conflict only when their
/// other endpoints are adjacent (a triangle).
pub fn edges_conflict(g: &Graph, e: usize, f: usize) -> Result<bool> {
    if e == f {
        return Err(Error::SameEdge);
    }
    for id in [e, f] {
        if id >= g.m() {
            return Err(Error::EdgeOutOfRange(id));
        }
    }
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    let shared = [a, b].into_iter().find(|&x| x == c || x == d);
    Ok(match shared {
        Some(s) => {
            let p = if s == a { b } else { a };
            let r = if s == c { d } else { c };
            g.has_edge(p, r)
        }
        None => g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d),
    })
}

/// Edge ids conflicting with `e`, sorted and deduplicated.
pub fn conflicting_edges(g: &Graph, e: usize) -> Vec<usize> {
    let (a, b) = g.edge(e);
    let mut out = Vec::new();
    for (p, q) in [(a, b), (b, a)] {
        for &x in g.neighbors(p) {
            if x == q {
                continue;
            }
            let px = g.edge_id(p, x).unwrap();
            if g.has_edge(x, q) {
                out.push(px);
            }
            for &y in g.neighbors(x) {
                if y != p {
                    out.push(g.edge_id(x, y).unwrap());
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out.retain(|&f| f != e);
    out
}

/// `G^(*)`: vertex `i` of [`ConflictGraph::base`] is edge `i` of the source.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    base: Graph,
}

impl ConflictGraph {
    pub fn build(g: &Graph) -> ConflictGraph {
        let mut pairs = Vec::new();
        for e in 0..g.m() {
            pairs.extend(
                conflicting_edges(g, e)
                    .into_iter()
                    .filter(|&f| f > e)
                    .map(|f| (e, f)),
            );
        }
        ConflictGraph {
            base: Graph::new(g.m(), pairs).expect("conflict graph is simple"),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Source edge represented by conflict-graph vertex `v`.
    pub fn source_edge(&self, v: usize) -> usize {
        v
    }
}

pub fn conflict_graph(g: &Graph) -> ConflictGraph {
    ConflictGraph::build(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    #[test]
    fn path_of_three_edges() {
        let g = Graph::path(4);
        let cg = conflict_graph(&g);
        assert_eq!(cg.base().edges(), &[(0, 2)]);
    }

    #[test]
    fn triangle_and_k4() {
        assert_eq!(conflict_graph(&Graph::complete(3)).base().m(), 3);
        let k4 = conflict_graph(&Graph::complete(4));
        assert_eq!(k4.base().m(), 15);
        assert!(k4.base().degrees().iter().all(|&d| d == 5));
    }

    #[test]
    fn pairwise_predicate() {
        let p3 = Graph::path(3);
        assert_eq!(edges_conflict(&p3, 0, 1), Ok(false));
        let k3 = Graph::complete(3);
        assert_eq!(edges_conflict(&k3, 0, 2), Ok(true));
        assert_eq!(edges_conflict(&Graph::path(4), 0, 2), Ok(true));
        assert_eq!(edges_conflict(&k3, 1, 1), Err(Error::SameEdge));
        // star edges never conflict
        let s = Graph::star(5);
        assert_eq!(conflict_graph(&s).base().m(), 0);
    }

    proptest! {
        #[test]
        fn conflict_graph_matches_predicate(seed in any::<u64>(), n in 2usize..10) {
            let g = generate::random_graph(n, 0.4, seed);
            let cg = conflict_graph(&g);
            for e in 0..g.m() {
                for f in 0..g.m() {
                    if e != f {
                        let direct = edges_conflict(&g, e, f).unwrap();
                        prop_assert_eq!(direct, edges_conflict(&g, f, e).unwrap());
                        prop_assert_eq!(direct, cg.base().has_edge(e, f));
                    }
                }
            }
        }

        #[test]
        fn conflict_degree_bound(seed in any::<u64>(), n in 2usize..14) {
            let g = generate::random_graph(n, 0.3, seed);
            let delta = g.delta();
            if delta >= 1 {
                let bound = 2 * (delta - 1) * (delta - 1);
                prop_assert!(conflict_graph(&g).base().delta() <= bound);
            }
        }
    }
}
