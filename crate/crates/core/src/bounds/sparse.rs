//! Subcubic graphs of bounded maximum average degree: 4 colors below 7/3,
//! 6 below 8/3 and 7 below 3, by peeling reducible configurations.

use super::engine::{self, Choice, ConfigKind, Group, Piece, Plan, Rules, Script, Step, ThreadEdges, Work};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    /// `mad < 7/3`, 4 colors.
    SevenThirds,
    /// `mad < 8/3`, 6 colors.
    EightThirds,
    /// `mad < 3`, 7 colors.
    Three,
}

impl Threshold {
    pub fn palette(self) -> u32 {
        match self {
            Threshold::SevenThirds => 4,
            Threshold::EightThirds => 6,
            Threshold::Three => 7,
        }
    }

    pub fn bound(self) -> crate::Rational {
        match self {
            Threshold::SevenThirds => crate::Rational::new(7, 3),
            Threshold::EightThirds => crate::Rational::new(8, 3),
            Threshold::Three => crate::Rational::from_integer(3),
        }
    }
}

pub(crate) struct SparseRules(pub Threshold);

fn fixed(kind: ConfigKind, script: &mut Script, removed: Vec<usize>) -> Step {
    Step {
        kind,
        removed,
        recolor: Vec::new(),
        plan: Plan::Fixed(script.build()),
    }
}

/// One group per edge, in the given order.
fn in_order(kind: ConfigKind, edges: &[usize]) -> Step {
    let mut s = Script::default();
    for (i, &e) in edges.iter().enumerate() {
        s.put(char::from_u32(0x100 + i as u32).unwrap(), &[e]);
    }
    fixed(kind, &mut s, edges.to_vec())
}

impl Rules for SparseRules {
    fn palette(&self) -> u32 {
        self.0.palette()
    }

    fn property(&self) -> bool {
        false
    }

    fn find(&self, w: &Work) -> Result<Option<Step>> {
        Ok(match self.0 {
            Threshold::SevenThirds => find_four(w),
            Threshold::EightThirds => find_six(w),
            Threshold::Three => find_seven(w),
        })
    }

    fn base(&self, w: &Work) -> Result<Vec<Piece>> {
        let left = w.live_edges().len();
        if left > 0 {
            return Err(Error::ReductionStalled { edges: left });
        }
        Ok(Vec::new())
    }

    fn resolve(&self, plan: &Plan, w: &Work, colors: &[u32]) -> Vec<Group> {
        match plan {
            Plan::Fixed(groups) => groups.clone(),
            Plan::Thread(t) => thread_colors(w, colors, t, self.0.palette())
                .into_iter()
                .map(|(e, c)| Group {
                    edges: vec![e],
                    choice: Choice::Fixed(c),
                    avoid: Vec::new(),
                })
                .collect(),
            Plan::Chain { .. } => Vec::new(),
        }
    }
}

/// Lowest color in `1..=k` outside `banned`.
fn lowest(banned: &[Option<u32>], k: u32) -> Option<u32> {
    (1..=k).find(|c| !banned.contains(&Some(*c)))
}

/// Four-color extension over a thread `x u v w y` (pendants `uu'`, `vv'`,
/// `ww'` optional). Greedy on `uv`, `vw`, `vv'`, then `ww'` and `uu'`; when
/// one of the last two is blocked, the blocked colors pin down enough of
/// the others that a fixed recoloring works. Other palettes only use the
/// greedy part.
fn thread_colors(w: &Work, colors: &[u32], t: &ThreadEdges, k: u32) -> Vec<(usize, u32)> {
    let at = |v: usize, skip: usize| -> Vec<Option<u32>> {
        w.links(v).filter(|&(_, e)| e != skip).map(|(_, e)| Some(colors[e])).collect()
    };
    let (at_x, at_y) = (at(t.x, t.xu), at(t.y, t.wy));
    let (xu, wy) = (Some(colors[t.xu]), Some(colors[t.wy]));
    let Some(alpha) = lowest(&[at_x.clone(), vec![wy]].concat(), k) else {
        return Vec::new();
    };
    let Some(beta) = lowest(&[at_y.clone(), vec![xu]].concat(), k) else {
        return Vec::new();
    };
    let gamma = t.vv.and_then(|_| lowest(&[wy, Some(alpha), xu], k));
    let mut out = vec![(t.uv, alpha), (t.vw, beta)];
    if let (Some(vv), Some(g)) = (t.vv, gamma) {
        out.push((vv, g));
    }
    let lambda = lowest(&[at_y.clone(), vec![Some(alpha), gamma]].concat(), k);
    let xi = |out: &[(usize, u32)]| {
        let get = |e: Option<usize>| e.and_then(|e| out.iter().find(|p| p.0 == e).map(|p| p.1));
        lowest(&[at_x.clone(), vec![get(Some(t.vw)), get(t.vv)]].concat(), k)
    };
    match (t.ww, lambda) {
        (None, _) | (Some(_), Some(_)) => {
            if let (Some(ww), Some(l)) = (t.ww, lambda) {
                out.push((ww, l));
            }
            if let Some(uu) = t.uu {
                match xi(&out) {
                    Some(c) => out.push((uu, c)),
                    None => {
                        // colors at x, beta and gamma fill the palette, which
                        // forces alpha = beta: swap uv and vv', uu' takes gamma
                        let g = gamma.expect("blocked only when vv' is colored");
                        out = vec![(t.uv, g), (t.vw, beta), (t.vv.unwrap(), alpha), (uu, g)];
                        if let (Some(ww), Some(l)) = (t.ww, lambda) {
                            out.push((ww, l));
                        }
                    }
                }
            }
        }
        (Some(ww), None) => {
            // colors at y, alpha and gamma fill the palette
            let g = gamma.expect("blocked only when vv' is colored");
            let vv = t.vv.unwrap();
            if beta != g {
                // beta = alpha: vv' takes alpha and ww' takes gamma
                out = vec![(t.uv, alpha), (t.vw, beta), (vv, alpha), (ww, g)];
                if let Some(uu) = t.uu {
                    if let Some(c) = lowest(&[at_x.clone(), vec![Some(alpha)]].concat(), k) {
                        out.push((uu, c));
                    }
                }
            } else if xu == Some(alpha) {
                let other = lowest(&[wy, Some(g), Some(alpha)], k).unwrap_or(0);
                out = vec![(t.uv, alpha), (t.vw, beta), (ww, g), (vv, other)];
                if let Some(uu) = t.uu {
                    out.push((uu, alpha));
                }
            } else {
                out = vec![(t.uv, alpha), (t.vw, alpha), (vv, alpha), (ww, g)];
                if let Some(uu) = t.uu {
                    if let Some(c) = lowest(&[at_x.clone(), vec![Some(alpha)]].concat(), k) {
                        out.push((uu, c));
                    }
                }
            }
        }
    }
    out
}

fn leaf(w: &Work) -> Option<Step> {
    let n = w.g.n();
    let u = (0..n).find(|&v| w.deg[v] == 1)?;
    let (_, e) = w.links(u).next().unwrap();
    Some(in_order(ConfigKind::Leaf, &[e]))
}

fn find_seven(w: &Work) -> Option<Step> {
    if let Some(s) = leaf(w) {
        return Some(s);
    }
    let u = (0..w.g.n()).find(|&v| w.deg[v] == 2)?;
    let edges: Vec<usize> = w.links(u).map(|(_, e)| e).collect();
    Some(in_order(ConfigKind::TwoVertex, &edges))
}

fn find_six(w: &Work) -> Option<Step> {
    if let Some(s) = leaf(w) {
        return Some(s);
    }
    let n = w.g.n();
    for u in 0..n {
        if w.deg[u] != 2 {
            continue;
        }
        if let Some((v, uv)) = w.links(u).find(|&(v, _)| w.deg[v] == 2) {
            let (_, vw) = w.links(v).find(|&(x, _)| x != u).unwrap();
            return Some(in_order(ConfigKind::AdjacentTwoVertices, &[uv, vw]));
        }
    }
    for u in 0..n {
        if w.deg[u] != 3 {
            continue;
        }
        let twos: Vec<(usize, usize)> = w.links(u).filter(|&(v, _)| w.deg[v] == 2).collect();
        if twos.len() >= 2 {
            let (v, uv) = twos[0];
            let (x, ux) = twos[1];
            let (_, vy) = w.links(v).find(|&(y, _)| y != u).unwrap();
            let (_, xz) = w.links(x).find(|&(z, _)| z != u).unwrap();
            return Some(in_order(ConfigKind::BranchWithTwoThreads, &[vy, xz, uv, ux]));
        }
    }
    None
}

/// Degree in the graph with all leaves removed.
fn core_degree(w: &Work, v: usize) -> usize {
    if w.deg[v] < 2 {
        return 0;
    }
    w.links(v).filter(|&(x, _)| w.deg[x] >= 2).count()
}

fn core_nbrs(w: &Work, v: usize) -> Vec<usize> {
    w.links(v).filter(|&(x, _)| w.deg[x] >= 2).map(|(x, _)| x).collect()
}

/// The edge from `v` to an adjacent leaf, if any.
fn pendant(w: &Work, v: usize) -> Option<usize> {
    w.links(v).find(|&(x, _)| w.deg[x] == 1).map(|(_, e)| e)
}

fn find_four(w: &Work) -> Option<Step> {
    let n = w.g.n();
    // an edge whose ends are both leaves
    if let Some(e) = w.live_edges().into_iter().find(|&e| {
        let (u, v) = w.g.edge(e);
        w.deg[u] == 1 && w.deg[v] == 1
    }) {
        return Some(in_order(ConfigKind::IsolatedEdge, &[e]));
    }
    for u in 0..n {
        if w.deg[u] == 2 {
            if let Some(e) = pendant(w, u) {
                return Some(in_order(ConfigKind::WeakTwoVertex, &[e]));
            }
        }
    }
    for u in 0..n {
        if w.deg[u] == 3 && w.links(u).filter(|&(x, _)| w.deg[x] == 1).count() >= 2 {
            let e = pendant(w, u).unwrap();
            return Some(in_order(ConfigKind::BranchWithTwoLeaves, &[e]));
        }
    }
    let d = |v: usize| core_degree(w, v);
    let with_pendants = |edges: &[Option<usize>]| -> Vec<usize> { edges.iter().flatten().copied().collect() };
    // triangle uvw, v and w of core degree 2
    for v in 0..n {
        if d(v) != 2 {
            continue;
        }
        let nb = core_nbrs(w, v);
        for (i, &wv) in nb.iter().enumerate() {
            let u = nb[1 - i];
            if d(wv) == 2 && w.live_edge(u, wv).is_some() {
                let (uv, uw, vw) = (w.edge(u, v), w.edge(u, wv), w.edge(v, wv));
                let order = with_pendants(&[Some(uv), Some(uw), Some(vw), pendant(w, v), pendant(w, wv)]);
                return Some(in_order(ConfigKind::TriangleWithTwoThreads, &order));
            }
        }
    }
    // cycle x u v w x, u v w of core degree 2
    for v in 0..n {
        if d(v) != 2 {
            continue;
        }
        let nb = core_nbrs(w, v);
        let (u, wv) = (nb[0], nb[1]);
        if d(u) != 2 || d(wv) != 2 {
            continue;
        }
        let x = core_nbrs(w, u).into_iter().find(|&t| t != v).unwrap();
        let x2 = core_nbrs(w, wv).into_iter().find(|&t| t != v).unwrap();
        if x == x2 {
            let order = with_pendants(&[
                Some(w.edge(x, u)),
                Some(w.edge(u, v)),
                pendant(w, v),
                pendant(w, u),
                Some(w.edge(wv, v)),
            ]);
            return Some(in_order(ConfigKind::FourCycleWithThreeThreads, &order));
        }
    }
    // path x u v w y, interior of core degree 2
    for v in 0..n {
        if d(v) != 2 {
            continue;
        }
        let nb = core_nbrs(w, v);
        let (u, wv) = (nb[0], nb[1]);
        if d(u) != 2 || d(wv) != 2 {
            continue;
        }
        let x = core_nbrs(w, u).into_iter().find(|&t| t != v).unwrap();
        let y = core_nbrs(w, wv).into_iter().find(|&t| t != v).unwrap();
        if x != y {
            let t = ThreadEdges {
                x,
                y,
                xu: w.edge(x, u),
                uv: w.edge(u, v),
                vw: w.edge(v, wv),
                wy: w.edge(wv, y),
                uu: pendant(w, u),
                vv: pendant(w, v),
                ww: pendant(w, wv),
            };
            let removed = with_pendants(&[Some(t.uv), Some(t.vw), t.vv, t.ww, t.uu]);
            return Some(Step {
                kind: ConfigKind::ThreadOfThree,
                removed,
                recolor: Vec::new(),
                plan: Plan::Thread(t),
            });
        }
    }
    // branch vertex with three threads, two of them continuing into threads
    for u in 0..n {
        if w.deg[u] != 3 || d(u) != 3 {
            continue;
        }
        let nb = core_nbrs(w, u);
        if nb.iter().any(|&t| d(t) != 2) {
            continue;
        }
        let next = |t: usize| core_nbrs(w, t).into_iter().find(|&s| s != u).unwrap();
        let continuing: Vec<usize> = nb.iter().copied().filter(|&t| d(next(t)) == 2).collect();
        if continuing.len() < 2 {
            continue;
        }
        let (y, z) = (continuing[0], continuing[1]);
        let x = nb.iter().copied().find(|&t| t != y && t != z).unwrap();
        let (x1, y1, z1) = (next(x), next(y), next(z));
        let mut s = Script::default();
        s.put('a', &[w.edge(u, x), w.edge(u, y), w.edge(u, z)]);
        s.put('b', &with_pendants(&[pendant(w, z1), Some(w.edge(z, z1))]));
        s.put('c', &with_pendants(&[pendant(w, y1), Some(w.edge(y, y1))]));
        s.put('d', &with_pendants(&[pendant(w, x1), Some(w.edge(x, x1))]));
        s.put('e', &with_pendants(&[pendant(w, z)]));
        s.put('f', &with_pendants(&[pendant(w, y)]));
        s.put('g', &with_pendants(&[pendant(w, x)]));
        let groups = s.build();
        let removed: Vec<usize> = groups.iter().flat_map(|g| g.edges.clone()).collect();
        return Some(Step {
            kind: ConfigKind::BranchWithThreeThreads,
            removed,
            recolor: Vec::new(),
            plan: Plan::Fixed(groups),
        });
    }
    None
}

pub(crate) fn run(g: &crate::Graph, t: Threshold) -> Result<engine::Outcome> {
    engine::run(g, &SparseRules(t))
}
