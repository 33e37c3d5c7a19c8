//! Constructive upper bounds. Every algorithm returns a coloring that has
//! been checked by the validator against its claimed palette size.

pub mod brooks;
mod engine;
pub mod general;
mod outerplanar;
pub mod pathcycle;
pub mod probe;
pub mod sparse;
pub mod tree;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use brooks::brooks_proper_coloring;
pub use engine::{ConfigKind, ReductionStats, ReductionTrace, TraceStep};
pub use general::{color_bipartite, color_general, color_subcubic_bipartite};
pub use pathcycle::color_path_or_cycle;
pub use probe::{conjecture_probe, ProbeFamily, ProbeReport};
pub use sparse::Threshold;
pub use tree::color_tree;

use crate::coloring::{verify_injective, verify_simple_path_property, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mad::mad_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    General,
    Bipartite,
    SubcubicBipartite,
    Mad73,
    Mad83,
    Mad3,
    Outerplanar,
    Tree,
    PathCycle,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::General,
        Method::Bipartite,
        Method::SubcubicBipartite,
        Method::Mad73,
        Method::Mad83,
        Method::Mad3,
        Method::Outerplanar,
        Method::Tree,
        Method::PathCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::General => "general",
            Method::Bipartite => "bipartite",
            Method::SubcubicBipartite => "subcubic-bipartite",
            Method::Mad73 => "mad73",
            Method::Mad83 => "mad83",
            Method::Mad3 => "mad3",
            Method::Outerplanar => "outerplanar",
            Method::Tree => "tree",
            Method::PathCycle => "pathcycle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Reduction {
    pub trace: ReductionTrace,
    pub stats: ReductionStats,
}

#[derive(Debug, Clone)]
pub struct BoundResult {
    pub coloring: EdgeColoring,
    pub bound_claimed: usize,
    pub method: Method,
    /// Present for the reduction-based methods.
    pub reduction: Option<Reduction>,
}

impl BoundResult {
    pub(crate) fn checked(g: &Graph, coloring: EdgeColoring, bound: usize, method: Method) -> Result<BoundResult> {
        let verdict = verify_injective(g, &coloring)?;
        if !verdict.valid {
            return Err(Error::Invariant(format!("{method} produced an invalid coloring: {:?}", verdict.witness)));
        }
        if coloring.palette_size() > bound {
            return Err(Error::Invariant(format!(
                "{method} used {} colors, more than its bound {bound}",
                coloring.palette_size()
            )));
        }
        Ok(BoundResult {
            coloring,
            bound_claimed: bound,
            method,
            reduction: None,
        })
    }
}

/// Bound for subcubic graphs whose maximum average degree is below the
/// threshold. With `trust_mad`, the threshold is not checked and a stalled
/// reduction is reported instead.
pub fn color_subcubic_mad(g: &Graph, threshold: Threshold, trust_mad: bool) -> Result<BoundResult> {
    let method = match threshold {
        Threshold::SevenThirds => Method::Mad73,
        Threshold::EightThirds => Method::Mad83,
        Threshold::Three => Method::Mad3,
    };
    if g.delta() > 3 {
        return Err(Error::DegreeTooLarge(g.delta()));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !trust_mad {
        let mad = mad_exact(g)?;
        if mad >= threshold.bound() {
            return Err(Error::PreconditionViolated(format!(
                "mad is {mad}, not below {}",
                threshold.bound()
            )));
        }
    }
    let bound = threshold.palette() as usize;
    if g.delta() <= 2 {
        let colors = pathcycle::color_components(g);
        return BoundResult::checked(g, EdgeColoring::new(colors)?, bound, method);
    }
    let out = sparse::run(g, threshold)?;
    let mut r = BoundResult::checked(g, EdgeColoring::new(out.colors)?, bound, method)?;
    r.reduction = Some(Reduction {
        trace: out.trace,
        stats: out.stats,
    });
    Ok(r)
}

/// Five colors for subcubic outerplanar graphs, with exactly two colors on
/// every path of three edges whose interior vertices have degree 2
/// (components that are odd cycles excepted). Outerplanarity is not checked;
/// other graphs may end in [`Error::ReductionStalled`].
pub fn color_outerplanar_subcubic(g: &Graph) -> Result<BoundResult> {
    if g.delta() > 3 {
        return Err(Error::DegreeTooLarge(g.delta()));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let out = engine::run(g, &outerplanar::OuterplanarRules)?;
    let coloring = EdgeColoring::new(out.colors)?;
    let mut r = BoundResult::checked(g, coloring, outerplanar::PALETTE as usize, Method::Outerplanar)?;
    if !path_property_holds(g, &r.coloring)? {
        return Err(Error::Invariant("path property fails on the outerplanar coloring".into()));
    }
    r.reduction = Some(Reduction {
        trace: out.trace,
        stats: out.stats,
    });
    Ok(r)
}

/// The path property on every component that is not an odd cycle.
pub fn path_property_holds(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    for comp in g.component_subgraphs() {
        let h = &comp.graph;
        let odd_cycle = h.n() % 2 == 1 && h.m() == h.n() && h.delta() == 2;
        if odd_cycle || h.m() == 0 {
            continue;
        }
        let local = EdgeColoring::new(comp.edge_map.iter().map(|&e| c.color(e)).collect())?;
        if !verify_simple_path_property(h, &local)?.valid {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ruleset {
    Mad73,
    Mad83,
    Mad3,
    Outerplanar,
}

/// A configuration found by a ruleset: its kind and the edges whose
/// removal reduces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub removed: Vec<usize>,
}

/// First configuration in scan order, or `None` at a base case or when the
/// graph has none.
pub fn find_reducible_configuration(g: &Graph, ruleset: Ruleset) -> Option<Configuration> {
    use engine::Rules;
    let w = engine::Work::new(g);
    let found = match ruleset {
        Ruleset::Mad73 => sparse::SparseRules(Threshold::SevenThirds).find(&w),
        Ruleset::Mad83 => sparse::SparseRules(Threshold::EightThirds).find(&w),
        Ruleset::Mad3 => sparse::SparseRules(Threshold::Three).find(&w),
        Ruleset::Outerplanar => outerplanar::OuterplanarRules.find(&w),
    };
    found.ok().flatten().map(|s| Configuration {
        kind: s.kind,
        removed: s.removed,
    })
}

/// Runs one method by name.
pub fn bound(g: &Graph, method: Method, trust_mad: bool) -> Result<BoundResult> {
    match method {
        Method::General => color_general(g),
        Method::Bipartite => color_bipartite(g),
        Method::SubcubicBipartite => color_subcubic_bipartite(g),
        Method::Mad73 => color_subcubic_mad(g, Threshold::SevenThirds, trust_mad),
        Method::Mad83 => color_subcubic_mad(g, Threshold::EightThirds, trust_mad),
        Method::Mad3 => color_subcubic_mad(g, Threshold::Three, trust_mad),
        Method::Outerplanar => color_outerplanar_subcubic(g),
        Method::Tree => color_tree(g),
        Method::PathCycle => color_path_or_cycle(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use rand::Rng;
    use crate::solver::injective_chromatic_index;
    use proptest::prelude::*;

    fn sun() -> Graph {
        let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        pairs.extend((0..5).map(|i| (i, i + 5)));
        Graph::new(10, pairs).unwrap()
    }

    #[test]
    fn sun_with_four_colors() {
        let g = sun();
        let r = color_subcubic_mad(&g, Threshold::SevenThirds, false).unwrap();
        assert!(r.coloring.palette_size() <= 4);
        let red = r.reduction.unwrap();
        assert_eq!(red.trace.restored_edges(), (0..g.m()).collect::<Vec<_>>());
    }

    #[test]
    fn precondition_and_stall() {
        let k4 = Graph::complete(4);
        assert!(matches!(
            color_subcubic_mad(&k4, Threshold::Three, false),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            color_subcubic_mad(&k4, Threshold::Three, true),
            Err(Error::ReductionStalled { .. })
        ));
        assert_eq!(find_reducible_configuration(&k4, Ruleset::Mad3), None);
    }

    #[test]
    fn configuration_examples() {
        let c = find_reducible_configuration(&Graph::path(5), Ruleset::Mad73).unwrap();
        assert_eq!(c.kind, ConfigKind::WeakTwoVertex);
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = color_outerplanar_subcubic(&g).unwrap();
        assert_eq!(r.coloring.palette_size(), 3);
        let stats = r.reduction.unwrap().stats;
        assert_eq!(stats.local_fallbacks + stats.global_fallbacks, 0);
    }

    #[test]
    fn six_cycle_has_the_path_property() {
        let g = Graph::cycle(6);
        let r = color_outerplanar_subcubic(&g).unwrap();
        assert_eq!(r.coloring.palette_size(), 3);
        assert!(verify_simple_path_property(&g, &r.coloring).unwrap().valid);
    }

    #[test]
    fn theta_graphs_follow_the_script() {
        for i in 1..7 {
            for j in i..7 {
                // x = 0, y = 1, threads of i and j vertices
                let mut pairs = vec![(0, 1)];
                let mut next = 2;
                for len in [i, j] {
                    let mut prev = 0;
                    for _ in 0..len {
                        pairs.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    pairs.push((prev, 1));
                }
                let g = Graph::new(next, pairs).unwrap();
                let r = color_outerplanar_subcubic(&g).unwrap();
                let stats = r.reduction.unwrap().stats;
                assert_eq!(stats.local_fallbacks + stats.global_fallbacks, 0, "theta {i} {j}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn outerplanar_random(seed in any::<u64>(), steps in 1usize..8) {
            let g = generate::random_outerplanar_subcubic(&mut generate::rng(seed), steps);
            let r = color_outerplanar_subcubic(&g).unwrap();
            prop_assert!(r.coloring.palette_size() <= 5);
            prop_assert!(verify_simple_path_property(&g, &r.coloring).unwrap().valid);
        }

        #[test]
        fn sparse_random(seed in any::<u64>(), n in 3usize..16) {
            let mut rng = generate::rng(seed);
            let g = generate::random_bounded_degree(&mut rng, n, 3, n / 3);
            for t in [Threshold::SevenThirds, Threshold::EightThirds, Threshold::Three] {
                match color_subcubic_mad(&g, t, false) {
                    Ok(r) => {
                        prop_assert!(r.coloring.palette_size() <= t.palette() as usize);
                        if g.m() <= 14 {
                            prop_assert!(injective_chromatic_index(&g).unwrap().index <= r.coloring.palette_size());
                        }
                    }
                    Err(Error::PreconditionViolated(_)) | Err(Error::NoEdges) => {}
                    Err(e) => prop_assert!(false, "{e}"),
                }
            }
        }

        // subdivided sparse graphs with extra leaves hit every recoloring
        // case of the three-thread step
        #[test]
        fn thread_of_three_never_falls_back(seed in any::<u64>(), n in 5usize..20) {
            let mut rng = generate::rng(seed);
            let extra = rng.gen_range(0..=n / 2);
            let base = generate::random_bounded_degree(&mut rng, n, 3, extra);
            let p = rng.gen_range(0.0..0.7);
            let g = generate::subdivide(&mut rng, &base, p);
            let mut pairs = g.edges().to_vec();
            let mut next = g.n();
            for v in 0..g.n() {
                if g.degree(v) < 3 && rng.gen_bool(0.3) {
                    pairs.push((v, next));
                    next += 1;
                }
            }
            let g = Graph::new(next, pairs).unwrap();
            if g.delta() == 3 && mad_exact(&g).unwrap() < Threshold::SevenThirds.bound() {
                let r = color_subcubic_mad(&g, Threshold::SevenThirds, true).unwrap();
                let stats = r.reduction.unwrap().stats;
                prop_assert!(!stats.fallback_kinds.contains(&ConfigKind::ThreadOfThree));
            }
        }
    }
}
