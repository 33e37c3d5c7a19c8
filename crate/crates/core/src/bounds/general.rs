//! Brooks-based bounds: `2(Δ-1)²` for every graph with `Δ >= 3`, the
//! one-sided bound for bipartite graphs, and 6 for subcubic bipartite graphs.

use super::brooks::brooks_coloring;
use super::pathcycle;
use super::{BoundResult, Method};
use crate::coloring::EdgeColoring;
use crate::conflict::ConflictGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver;

pub fn general_bound(delta: usize) -> usize {
    2 * (delta - 1) * (delta - 1)
}

/// Brooks on each component of the conflict graph.
pub fn color_general(g: &Graph) -> Result<BoundResult> {
    let delta = g.delta();
    if delta < 3 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let bound = general_bound(delta);
    let cg = ConflictGraph::build(g);
    let mut colors = vec![0u32; g.m()];
    for comp in cg.base().component_subgraphs() {
        let h = &comp.graph;
        if h.n() == bound + 1 && h.m() == h.n() * (h.n() - 1) / 2 {
            return Err(Error::Invariant(format!(
                "conflict component is complete on {} vertices",
                h.n()
            )));
        }
        for (local, c) in brooks_coloring(h).into_iter().enumerate() {
            colors[cg.source_edge(comp.vertex_map[local])] = c + 1;
        }
    }
    BoundResult::checked(g, EdgeColoring::new(colors)?, bound, Method::General)
}

fn bipartite_checks(g: &Graph) -> Result<crate::graph::Bipartition> {
    let b = g.bipartition()?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(b)
}

/// `min(Δ_A(Δ_B - 1), Δ_B(Δ_A - 1)) + 1` for `Δ >= 3`, 3 for `Δ = 2` and 1
/// for a matching.
pub fn bipartite_bound(delta_a: usize, delta_b: usize) -> usize {
    match delta_a.max(delta_b) {
        1 => 1,
        2 => 3,
        _ => (delta_a * (delta_b - 1)).min(delta_b * (delta_a - 1)) + 1,
    }
}

/// Colors each edge by the color of its endpoint on `side` in a proper
/// coloring of the distance-two graph of that side.
fn color_through_side(g: &Graph, side: &[usize]) -> Vec<u32> {
    let h = g.distance_two_graph(side);
    let mut side_color = vec![0u32; g.n()];
    for comp in h.component_subgraphs() {
        for (local, c) in brooks_coloring(&comp.graph).into_iter().enumerate() {
            side_color[side[comp.vertex_map[local]]] = c + 1;
        }
    }
    let mut on_side = vec![false; g.n()];
    for &v in side {
        on_side[v] = true;
    }
    g.edges()
        .iter()
        .map(|&(u, v)| if on_side[u] { side_color[u] } else { side_color[v] })
        .collect()
}

pub fn color_bipartite(g: &Graph) -> Result<BoundResult> {
    let b = bipartite_checks(g)?;
    let bound = bipartite_bound(b.delta_a, b.delta_b);
    let colors = match g.delta() {
        1 => vec![1; g.m()],
        2 => pathcycle::color_components(g),
        _ => {
            let a_first = b.delta_a * (b.delta_b - 1) <= b.delta_b * (b.delta_a - 1);
            let side = if a_first { &b.side_a } else { &b.side_b };
            color_through_side(g, side)
        }
    };
    BoundResult::checked(g, EdgeColoring::new(colors)?, bound, Method::Bipartite)
}

pub fn color_subcubic_bipartite(g: &Graph) -> Result<BoundResult> {
    if g.delta() > 3 {
        return Err(Error::DegreeTooLarge(g.delta()));
    }
    bipartite_checks(g)?;
    let mut colors = vec![0u32; g.m()];
    for comp in g.component_subgraphs() {
        let c = &comp.graph;
        let local: Vec<u32> = if c.delta() <= 2 {
            pathcycle::color_components(c)
        } else {
            let b = c.bipartition()?;
            let a_first = b.delta_a * (b.delta_b - 1) <= b.delta_b * (b.delta_a - 1);
            let side = if a_first { &b.side_a } else { &b.side_b };
            let h = c.distance_two_graph(side);
            if h.n() == 7 && h.m() == 21 {
                // only the Heawood graph has a complete side graph on 7 vertices
                solver::is_k_colorable(c, 4)
                    .ok_or_else(|| Error::Invariant("side graph is K7 but no 4-coloring found".into()))?
                    .colors()
                    .to_vec()
            } else {
                color_through_side(c, side)
            }
        };
        for (i, &e) in comp.edge_map.iter().enumerate() {
            colors[e] = local[i];
        }
    }
    BoundResult::checked(g, EdgeColoring::new(colors)?, 6, Method::SubcubicBipartite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    #[test]
    fn complete_graphs() {
        let r = color_general(&Graph::complete(4)).unwrap();
        assert!(r.coloring.palette_size() <= 8);
        assert!(matches!(color_general(&Graph::cycle(5)), Err(Error::DegreeTooSmall(2))));
    }

    #[test]
    fn bipartite_values() {
        let k33 = Graph::complete_bipartite(3, 3);
        let r = color_bipartite(&k33).unwrap();
        assert_eq!(r.bound_claimed, 7);
        assert_eq!(color_bipartite(&Graph::cycle(8)).unwrap().coloring.palette_size(), 2);
        assert!(matches!(color_bipartite(&Graph::cycle(5)), Err(Error::NotBipartite(_))));
        let with_isolated = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(color_bipartite(&with_isolated), Err(Error::IsolatedVertex(2))));
        assert_eq!(color_subcubic_bipartite(&Graph::cycle(6)).unwrap().coloring.palette_size(), 3);
    }

    proptest! {
        #[test]
        fn general_is_sound(seed in any::<u64>(), n in 4usize..14, d in 3usize..6) {
            let mut rng = generate::rng(seed);
            let g = generate::random_bounded_degree(&mut rng, n, d, n);
            if g.delta() >= 3 {
                let r = color_general(&g).unwrap();
                prop_assert!(r.coloring.palette_size() <= general_bound(g.delta()));
            }
        }

        #[test]
        fn bipartite_is_sound(seed in any::<u64>(), a in 1usize..7, b in 1usize..7) {
            let mut rng = generate::rng(seed);
            let g = generate::random_bipartite(&mut rng, a, b, 4, 0.5);
            if g.m() > 0 {
                color_bipartite(&g).unwrap();
                if g.delta() <= 3 {
                    color_subcubic_bipartite(&g).unwrap();
                }
            }
        }
    }
}
