//! Forests with three colors.
//!
//! Root each tree at a leaf and give all edges from a vertex down to its
//! children one common color `c(v)`. Two edges at distance two then either
//! run straight down (so `c(v)` must differ from the color of its
//! grandparent) or hang below two siblings (so `c(v)` must differ from its
//! parent's color when the parent has another child). At most two colors
//! are excluded, so three suffice.

use super::{BoundResult, Method};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn color_tree(g: &Graph) -> Result<BoundResult> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.n();
    let mut colors = vec![0u32; g.m()];
    let mut down = vec![0u32; n];
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let root = comp.iter().copied().find(|&v| g.degree(v) == 1).unwrap();
        visited[root] = true;
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let children = g.neighbors(v).iter().filter(|&&t| !visited[t]).count();
            if children > 0 {
                let p = parent[v];
                let mut banned = Vec::new();
                if p != usize::MAX {
                    if parent[p] != usize::MAX {
                        banned.push(down[parent[p]]);
                    }
                    let siblings = g.neighbors(p).iter().filter(|&&t| t != parent[p]).count();
                    if siblings >= 2 {
                        banned.push(down[p]);
                    }
                }
                down[v] = (1..).find(|c| !banned.contains(c)).unwrap();
            }
            for &t in g.neighbors(v) {
                if !visited[t] {
                    visited[t] = true;
                    parent[t] = v;
                    colors[g.edge_id(v, t).unwrap()] = down[v];
                    order.push(t);
                }
            }
        }
    }
    BoundResult::checked(g, EdgeColoring::new(colors)?, 3, Method::Tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::solver::brute_force_index;
    use proptest::prelude::*;

    #[test]
    fn stars_and_paths() {
        assert_eq!(color_tree(&Graph::star(7)).unwrap().coloring.palette_size(), 1);
        assert_eq!(color_tree(&Graph::path(10)).unwrap().coloring.palette_size(), 2);
        assert!(matches!(color_tree(&Graph::cycle(4)), Err(Error::NotForest)));
    }

    #[test]
    fn spider() {
        // three legs of length 3 around vertex 0
        let mut pairs = Vec::new();
        for leg in 0..3 {
            let base = 1 + 3 * leg;
            pairs.push((0, base));
            pairs.push((base, base + 1));
            pairs.push((base + 1, base + 2));
        }
        let g = Graph::new(10, pairs).unwrap();
        let r = color_tree(&g).unwrap();
        assert!(r.coloring.palette_size() <= 3);
        assert!(brute_force_index(&g).unwrap() <= r.coloring.palette_size());
    }

    proptest! {
        #[test]
        fn random_trees(seed in any::<u64>(), n in 2usize..30) {
            let g = generate::random_tree(&mut generate::rng(seed), n);
            let r = color_tree(&g).unwrap();
            prop_assert!(r.coloring.palette_size() <= 3);
        }
    }
}
