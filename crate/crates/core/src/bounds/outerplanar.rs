//! Subcubic outerplanar graphs: 5 colors, and every path `v1 v2 v3 v4`
//! whose interior vertices have degree 2 shows exactly two colors.
//!
//! Reductions work per component of maximum degree 3: leaves first, then a
//! cycle through one branch vertex whose other vertices all have degree 2,
//! then a thread of 2-vertices joining two adjacent branch vertices. Outer
//! planar graphs of minimum degree 2 always contain one of the last two.

use super::engine::{pattern, Choice, ConfigKind, Group, Piece, Plan, Rules, Script, Step, Work};
use super::pathcycle;
use crate::error::{Error, Result};

pub(crate) struct OuterplanarRules;

pub(crate) const PALETTE: u32 = 5;

impl Rules for OuterplanarRules {
    fn palette(&self) -> u32 {
        PALETTE
    }

    fn property(&self) -> bool {
        true
    }

    fn find(&self, w: &Work) -> Result<Option<Step>> {
        for comp in w.components() {
            if comp.iter().all(|&v| w.deg[v] <= 2) || base_shape(w, &comp).is_some() {
                continue;
            }
            return match find_in(w, &comp) {
                Some(step) => Ok(Some(step)),
                None => Err(Error::ReductionStalled {
                    edges: w.component_edges(&comp).len(),
                }),
            };
        }
        Ok(None)
    }

    fn base(&self, w: &Work) -> Result<Vec<Piece>> {
        let mut pieces = Vec::new();
        for comp in w.components() {
            let edges = w.component_edges(&comp);
            if comp.iter().all(|&v| w.deg[v] <= 2) {
                let groups = pathcycle::component_colors(w, &comp)
                    .into_iter()
                    .map(|(e, c)| Group {
                        edges: vec![e],
                        choice: Choice::Fixed(c),
                        avoid: Vec::new(),
                    })
                    .collect();
                pieces.push(Piece {
                    edges,
                    groups: Some(groups),
                    palette: 3,
                });
                continue;
            }
            let groups = base_shape(w, &comp).expect("only base components remain");
            pieces.push(Piece {
                edges,
                groups,
                palette: 3,
            });
        }
        Ok(pieces)
    }

    fn resolve(&self, plan: &Plan, w: &Work, colors: &[u32]) -> Vec<Group> {
        match plan {
            Plan::Fixed(groups) => groups.clone(),
            Plan::Chain { x, y, thread } => chain_script(w, colors, *x, *y, thread),
            Plan::Thread(_) => Vec::new(),
        }
    }
}

/// Walks from `from` into `start` along 2-vertices; returns the 2-vertices
/// passed and the first vertex of another degree.
fn walk(w: &Work, from: usize, start: usize) -> (Vec<usize>, usize) {
    let mut path = Vec::new();
    let (mut prev, mut cur) = (from, start);
    while w.deg[cur] == 2 {
        path.push(cur);
        let next = w.nbrs(cur).into_iter().find(|&t| t != prev).unwrap();
        prev = cur;
        cur = next;
        if cur == start {
            break;
        }
    }
    (path, cur)
}

fn path_edges(w: &Work, vertices: &[usize]) -> Vec<usize> {
    vertices.windows(2).map(|p| w.edge(p[0], p[1])).collect()
}

/// Components colored directly: a cycle or path with one pendant edge at
/// its only branch vertex, or two cycles sharing exactly one edge.
/// `Some(None)` asks for a search with three colors.
fn base_shape(w: &Work, comp: &[usize]) -> Option<Option<Vec<Group>>> {
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| w.deg[v] == 3).collect();
    if branch.len() == 1 {
        let v2 = branch[0];
        let v1 = w.nbrs(v2).into_iter().find(|&t| w.deg[t] == 1)?;
        return Some(pendant_on_cycle(w, v1, v2));
    }
    if branch.len() == 2 && comp.iter().all(|&v| w.deg[v] >= 2) {
        let (x, y) = (branch[0], branch[1]);
        w.live_edge(x, y)?;
        let walks: Vec<(Vec<usize>, usize)> = w.nbrs(x).into_iter().filter(|&t| t != y).map(|t| walk(w, x, t)).collect();
        if walks.iter().any(|(path, end)| *end != y || path.is_empty()) {
            return None;
        }
        let mut threads: Vec<Vec<usize>> = walks.into_iter().map(|(path, _)| path).collect();
        threads.sort_by_key(|t| t.len());
        return Some(Some(two_cycles(w, x, y, &threads[0], &threads[1])));
    }
    None
}

/// Pendant edge `v1 v2` on a component whose only branch vertex is `v2`.
fn pendant_on_cycle(w: &Work, v1: usize, v2: usize) -> Option<Vec<Group>> {
    let rest: Vec<usize> = w.nbrs(v2).into_iter().filter(|&t| t != v1).collect();
    let (path, end) = walk(w, v2, rest[0]);
    if end != v2 || path.len() < 3 {
        // a path or a triangle under the pendant
        return None;
    }
    // cycle v2 v3 v4 ... vi v2
    let mut cyc = vec![v2];
    cyc.extend_from_slice(&path);
    cyc.push(v2);
    let edges = path_edges(w, &cyc);
    let mut s = Script::default();
    s.put('a', &edges[..2]);
    s.put('b', &[w.edge(v1, v2)]);
    s.put_seq(&edges[2..], &pattern("", "ggll", edges.len() - 2));
    s.distinct();
    Some(s.build())
}

/// Two cycles `x v1..vi y x` and `x w1..wj y x` sharing the edge `xy`,
/// with `vs` no longer than `ws`.
fn two_cycles(w: &Work, x: usize, y: usize, vs: &[usize], ws: &[usize]) -> Vec<Group> {
    let xy = w.edge(x, y);
    let v_first = w.edge(x, vs[0]);
    let w_first = w.edge(x, ws[0]);
    let mut s = Script::default();
    let (i, j) = (vs.len(), ws.len());
    if i >= 2 {
        // ws reversed: w_j w_{j-1} ... w_1, edges from y side
        let wrev: Vec<usize> = ws.iter().rev().copied().collect();
        let w_back = path_edges(w, &wrev);
        let mut vrev: Vec<usize> = vec![y];
        vrev.extend(vs.iter().rev());
        let v_back = path_edges(w, &vrev);
        s.put('a', &[v_first, w_first, xy]);
        s.put('b', &[w.edge(y, ws[j - 1])]);
        let wpat = if j % 2 == 0 { pattern("b", "ggbb", j - 1) } else { pattern("", "ggbb", j - 1) };
        s.put_seq(&w_back, &wpat);
        // parity of i, not j: the sequence must end in a repeated pair next to xv1
        let vpat = if i % 2 == 1 { pattern("l", "ggll", i) } else { pattern("", "llgg", i) };
        s.put_seq(&v_back, &vpat);
    } else if j >= 2 {
        s.put('a', &[v_first, w_first]);
        s.put('b', &[w.edge(y, vs[0])]);
        s.put('g', &[xy]);
        let mut wrev: Vec<usize> = vec![y];
        wrev.extend(ws.iter().rev());
        let w_back = path_edges(w, &wrev);
        let wpat = if j % 2 == 1 { pattern("b", "llbb", j) } else { pattern("", "llbb", j) };
        s.put_seq(&w_back, &wpat);
    } else {
        s.put('a', &[v_first, w_first]);
        s.put('b', &[w.edge(y, vs[0]), w.edge(y, ws[0])]);
        s.put('g', &[xy]);
    }
    s.distinct();
    s.build()
}

fn find_in(w: &Work, comp: &[usize]) -> Option<Step> {
    leaf_step(w, comp)
        .or_else(|| loop_step(w, comp))
        .or_else(|| chain_step(w, comp))
}

fn leaf_step(w: &Work, comp: &[usize]) -> Option<Step> {
    let v1 = comp.iter().copied().find(|&v| w.deg[v] == 1)?;
    let v2 = w.nbrs(v1)[0];
    if w.deg[v2] == 3 {
        let e = w.edge(v1, v2);
        let mut s = Script::default();
        s.put('a', &[e]);
        return Some(Step {
            kind: ConfigKind::LeafAtBranch,
            removed: vec![e],
            recolor: Vec::new(),
            plan: Plan::Fixed(s.build()),
        });
    }
    // maximal path v1 v2 ... vk of 2-vertices ending at a branch vertex
    let (mut path, vk) = walk(w, v1, v2);
    path.insert(0, v1);
    path.push(vk);
    debug_assert_eq!(w.deg[vk], 3);
    let k = path.len();
    // edges v_{k-1} v_{k-2}, ..., v2 v1
    let rev: Vec<usize> = path[..k - 1].iter().rev().copied().collect();
    let edges = path_edges(w, &rev);
    let at_vk: Vec<usize> = w.links(vk).map(|(_, e)| e).collect();
    let mut s = Script::default();
    s.put_seq(&edges, &pattern("", "aabb", edges.len()));
    s.avoid('a', &at_vk);
    s.distinct();
    Some(Step {
        kind: ConfigKind::PendantPath,
        removed: edges,
        recolor: Vec::new(),
        plan: Plan::Fixed(s.build()),
    })
}

/// Cycle `x v1 .. vk y x` whose vertices other than the branch vertex `x`
/// all have degree 2.
fn loop_step(w: &Work, comp: &[usize]) -> Option<Step> {
    for &x in comp {
        if w.deg[x] != 3 {
            continue;
        }
        for a in w.nbrs(x) {
            if w.deg[a] != 2 {
                continue;
            }
            let (path, end) = walk(w, x, a);
            if end != x {
                continue;
            }
            let y = *path.last().unwrap();
            let vs = &path[..path.len() - 1];
            let k = vs.len();
            let x1 = w.nbrs(x).into_iter().find(|&t| t != a && t != y).unwrap();
            let xx1 = w.edge(x, x1);
            let at_x1: Vec<usize> = w.links(x1).map(|(_, e)| e).collect();
            let beside_x1: Vec<usize> = at_x1.iter().copied().filter(|&e| e != xx1).collect();
            let (xv1, xy) = (w.edge(x, vs[0]), w.edge(x, y));
            let mut s = Script::default();
            let removed = if k == 1 {
                let yv1 = w.edge(y, vs[0]);
                s.put('a', &[xy]).avoid('a', &beside_x1).avoid('a', &[xv1]);
                s.put('b', &[yv1]).avoid('b', &[xy, xv1, xx1]);
                vec![yv1]
            } else {
                let thread = path_edges(w, vs);
                let yvk = w.edge(vs[k - 1], y);
                s.put('a', &[xv1]).avoid('a', &at_x1);
                s.put('b', &[xy, yvk]).avoid('b', &at_x1).avoid('b', &[xv1]);
                let pat = if k % 2 == 0 { pattern("a", "ggaa", k - 1) } else { pattern("", "ggaa", k - 1) };
                s.put_seq(&thread, &pat);
                s.avoid('g', &[xx1, xv1, xy]);
                [thread, vec![yvk]].concat()
            };
            return Some(Step {
                kind: ConfigKind::LoopThread,
                removed,
                recolor: if k == 1 { vec![xy] } else { vec![xv1, xy] },
                plan: Plan::Fixed(s.build()),
            });
        }
    }
    None
}

/// Thread `v1..vk` of 2-vertices between adjacent branch vertices `x`, `y`.
fn chain_step(w: &Work, comp: &[usize]) -> Option<Step> {
    for &x in comp {
        if w.deg[x] != 3 {
            continue;
        }
        for a in w.nbrs(x) {
            if w.deg[a] != 2 {
                continue;
            }
            let (thread, y) = walk(w, x, a);
            if y == x || w.deg[y] != 3 || w.live_edge(x, y).is_none() {
                continue;
            }
            let mut vertices = vec![x];
            vertices.extend_from_slice(&thread);
            vertices.push(y);
            return Some(Step {
                kind: ConfigKind::ChainCycle,
                removed: path_edges(w, &vertices),
                recolor: Vec::new(),
                plan: Plan::Chain { x, y, thread },
            });
        }
    }
    None
}

/// Extension across a chain once the rest is colored. `x` and `y` now have
/// degree 2 outside the thread (the thread edges are live but uncolored).
fn chain_script(w: &Work, colors: &[u32], x: usize, y: usize, thread: &[usize]) -> Vec<Group> {
    let third = |v: usize, not: &[usize]| w.nbrs(v).into_iter().find(|t| !not.contains(t)).unwrap();
    let k = thread.len();
    let (x1, y1) = (third(x, &[y, thread[0]]), third(y, &[x, thread[k - 1]]));
    let xy = w.edge(x, y);
    let mut s = Script::default();
    if x1 == y1 {
        let x2 = third(x1, &[x, y]);
        let (x1x, yx1, x1x2) = (w.edge(x1, x), w.edge(y, x1), w.edge(x1, x2));
        let xv1 = w.edge(x, thread[0]);
        let vky = w.edge(thread[k - 1], y);
        if k == 1 {
            s.put('a', &[xv1]).avoid('a', &[xy, yx1, x1x2]);
            s.put('b', &[vky]).avoid('b', &[x1x, xy, xv1, x1x2]);
        } else if k % 2 == 0 {
            let mut vs = vec![x];
            vs.extend_from_slice(thread);
            let edges = path_edges(w, &vs);
            s.put_seq(&edges, &pattern("", "llaa", k));
            s.choice('a', Choice::Copy(x1x));
            s.avoid('l', &[x1x, yx1, x1x2, xy]);
            s.put('x', &[vky]).avoid('x', &[x1x2, x1x, xv1]);
        } else {
            s.put('b', &[xv1]).choice('b', Choice::Copy(xy));
            s.put('x', &[vky]).avoid('x', &[x1x, xy, yx1, x1x2]);
            let edges = path_edges(w, thread);
            s.put_seq(&edges, &pattern("", "llaa", k - 1));
            s.choice('a', Choice::Copy(x1x));
            s.avoid('l', &[x1x, xy, yx1, vky]);
        }
        return s.build();
    }
    // orient so that the edges xx1 and xy share a color
    let (x, y, x1, y1, thread): (usize, usize, usize, usize, Vec<usize>) = if colors[w.edge(x, x1)] == colors[xy] {
        (x, y, x1, y1, thread.to_vec())
    } else if colors[w.edge(y, y1)] == colors[xy] {
        (y, x, y1, x1, thread.iter().rev().copied().collect())
    } else {
        // the smaller graph broke the path property; let the fallback decide
        return Vec::new();
    };
    let (xx1, yy1) = (w.edge(x, x1), w.edge(y, y1));
    let xv1 = w.edge(x, thread[0]);
    let vky = w.edge(thread[k - 1], y);
    let beside = |v: usize, e: usize| -> Vec<usize> { w.links(v).map(|(_, f)| f).filter(|&f| f != e).collect() };
    if k == 1 {
        s.put('g', &[xv1]).avoid('g', &beside(x1, xx1)).avoid('g', &[xx1, yy1]);
        s.put('l', &[vky]).avoid('l', &beside(y1, yy1)).avoid('l', &[xx1, xv1]);
        return s.build();
    }
    s.put('a', &[xv1]).choice('a', Choice::Copy(xx1));
    if k % 2 == 0 {
        // y v_k, v_k v_{k-1}, ..., v2 v1
        let mut vs = vec![y];
        vs.extend(thread.iter().rev());
        let edges = path_edges(w, &vs);
        s.put_seq(&edges, &pattern("", "ggbb", k));
        s.choice('b', Choice::Copy(yy1));
        let at_y1: Vec<usize> = w.links(y1).map(|(_, f)| f).collect();
        s.avoid('g', &at_y1).avoid('g', &[xx1]);
    } else {
        let rev: Vec<usize> = thread.iter().rev().copied().collect();
        let edges = path_edges(w, &rev);
        s.put_seq(&edges, &pattern("", "ggll", k - 1));
        s.avoid('g', &[xx1, yy1]);
        s.avoid('l', &[xx1]);
        if let Some(&first) = edges.first() {
            s.avoid('l', &[first]);
        }
        s.put('x', &[vky]);
    }
    s.build()
}
