//! Optimal colorings of paths and cycles.
//!
//! Along a path or cycle, edge `i` conflicts exactly with edges `i +- 2`.
//! Runs of two equal colors (1 1 2 2 1 1 ...) are therefore injective;
//! cycles of length `4t` close up with two colors, other even cycles take a
//! third color on the last run, and odd cycles are colored along the orbit
//! `0, 2, 4, ...` of the step-two conflict cycle.

use super::engine::Work;
use super::{BoundResult, Method};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colors for the edges of a path (`cyclic = false`) or cycle with `len`
/// edges, listed in walking order.
pub fn sequence_colors(len: usize, cyclic: bool) -> Vec<u32> {
    let runs = |i: usize| 1 + ((i / 2) % 2) as u32;
    if !cyclic || len % 4 == 0 {
        return (0..len).map(runs).collect();
    }
    if len % 2 == 0 {
        let last_run = len / 2 - 1;
        return (0..len).map(|i| if i / 2 == last_run { 3 } else { runs(i) }).collect();
    }
    let mut colors = vec![0; len];
    for j in 0..len {
        colors[(2 * j) % len] = if j == len - 1 { 3 } else { 1 + (j % 2) as u32 };
    }
    colors
}

/// Exact injective chromatic index of a path or cycle with `len` edges.
pub fn exact_value(len: usize, cyclic: bool) -> usize {
    match (cyclic, len) {
        (_, 0) => 0,
        (false, 1 | 2) => 1,
        (false, _) => 2,
        (true, l) if l % 4 == 0 => 2,
        (true, _) => 3,
    }
}

/// Vertices of a connected graph with maximum degree 2 in walking order,
/// starting at an end (path) or at its least vertex (cycle).
fn walk_order(n_edges: usize, start_candidates: &[usize], nbrs: impl Fn(usize) -> Vec<usize>, deg: impl Fn(usize) -> usize) -> (Vec<usize>, bool) {
    let start = start_candidates
        .iter()
        .copied()
        .find(|&v| deg(v) == 1)
        .unwrap_or(start_candidates[0]);
    let cyclic = deg(start) == 2;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 0..n_edges {
        let next = nbrs(cur).into_iter().find(|&t| t != prev).unwrap();
        if cyclic && next == start && order.len() == n_edges {
            order.push(start);
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order, cyclic)
}

/// Pattern colors for one component of maximum degree 2 of the working graph.
pub(crate) fn component_colors(w: &Work, comp: &[usize]) -> Vec<(usize, u32)> {
    let m = w.component_edges(comp).len();
    let (order, cyclic) = walk_order(m, comp, |v| w.nbrs(v), |v| w.deg[v]);
    let colors = sequence_colors(m, cyclic);
    order.windows(2).map(|p| w.edge(p[0], p[1])).zip(colors).collect()
}

/// Colors every component of a graph with maximum degree at most 2.
pub(crate) fn color_components(g: &Graph) -> Vec<u32> {
    let mut colors = vec![0; g.m()];
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let m = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let (order, cyclic) = walk_order(m, &comp, |v| g.neighbors(v).to_vec(), |v| g.degree(v));
        for (p, c) in order.windows(2).zip(sequence_colors(m, cyclic)) {
            colors[g.edge_id(p[0], p[1]).unwrap()] = c;
        }
    }
    colors
}

pub fn color_path_or_cycle(g: &Graph) -> Result<BoundResult> {
    if g.m() == 0 || g.delta() > 2 || !g.is_connected() {
        return Err(Error::NotPathOrCycle);
    }
    let cyclic = g.m() == g.n();
    let coloring = EdgeColoring::new(color_components(g))?;
    BoundResult::checked(g, coloring, exact_value(g.m(), cyclic), Method::PathCycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute_force_index;

    #[test]
    fn documented_patterns() {
        let r = color_path_or_cycle(&Graph::path(6)).unwrap();
        assert_eq!(r.coloring.colors(), &[1, 1, 2, 2, 1]);
        assert_eq!(color_path_or_cycle(&Graph::cycle(7)).unwrap().coloring.palette_size(), 3);
        assert_eq!(color_path_or_cycle(&Graph::path(2)).unwrap().coloring.palette_size(), 1);
        assert_eq!(sequence_colors(6, true), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(sequence_colors(3, true), vec![1, 3, 2]);
    }

    #[test]
    fn rejects_other_shapes() {
        assert!(matches!(color_path_or_cycle(&Graph::star(3)), Err(Error::NotPathOrCycle)));
        let two_paths = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(color_path_or_cycle(&two_paths), Err(Error::NotPathOrCycle)));
    }

    #[test]
    fn optimal_up_to_fourteen() {
        for n in 2..=14 {
            let p = Graph::path(n);
            let r = color_path_or_cycle(&p).unwrap();
            assert_eq!(r.coloring.palette_size(), brute_force_index(&p).unwrap(), "P{n}");
            if n >= 3 {
                let c = Graph::cycle(n);
                let r = color_path_or_cycle(&c).unwrap();
                if c.m() <= 20 {
                    assert_eq!(r.coloring.palette_size(), brute_force_index(&c).unwrap(), "C{n}");
                }
            }
        }
    }
}
