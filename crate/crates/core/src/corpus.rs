//! Named fixture graphs with their known injective chromatic index.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::mad::{mad_exact, Rational};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub expected_index: Option<usize>,
    pub expected_mad: Option<Rational>,
    pub provenance: &'static str,
}

fn named(name: impl Into<String>, graph: Graph, index: Option<usize>, provenance: &'static str) -> NamedGraph {
    NamedGraph {
        name: name.into(),
        graph,
        expected_index: index,
        expected_mad: None,
        provenance,
    }
}

fn with_mad(mut g: NamedGraph, mad: i64) -> NamedGraph {
    g.expected_mad = Some(Rational::from_integer(mad));
    g
}

pub fn prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pairs.extend((0..5).map(|i| (i, i + 5)));
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, pairs).unwrap()
}

/// Incidence graph of the Fano plane, drawn as a 14-cycle with chords
/// `i ~ i+5` from every even vertex.
pub fn heawood() -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    pairs.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::new(14, pairs).unwrap()
}

/// Cubic bipartite graph on `v1..v10` (vertex `vi` is `i - 1`) whose index
/// is 5.
pub fn bipartite_cubic() -> Graph {
    let pairs = [
        (1, 3),
        (1, 4),
        (1, 7),
        (2, 3),
        (2, 4),
        (2, 6),
        (3, 8),
        (4, 5),
        (5, 6),
        (5, 10),
        (6, 9),
        (7, 8),
        (7, 9),
        (8, 10),
        (9, 10),
    ];
    Graph::new(10, pairs.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

/// The 5-cycle with one pendant edge at each cycle vertex.
pub fn sun() -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pairs.extend((0..5).map(|i| (i, i + 5)));
    Graph::new(10, pairs).unwrap()
}

/// Two copies of a triangle-and-pentagon block joined by the edge `uv`.
/// Vertices: `u = 0`, `u1..u5 = 1..5`, `v = 6`, `v1..v5 = 7..11`.
pub fn outerplanar_twin() -> Graph {
    let mut pairs = vec![(0, 6)];
    for base in [0, 6] {
        let block = [(0, 1), (0, 2), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5), (3, 5)];
        pairs.extend(block.iter().map(|&(a, b)| (base + a, base + b)));
    }
    Graph::new(12, pairs).unwrap()
}

fn path_value(n: usize) -> usize {
    if n >= 4 {
        2
    } else {
        1
    }
}

fn cycle_value(n: usize) -> usize {
    if n % 4 == 0 {
        2
    } else {
        3
    }
}

fn build() -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(named(format!("path-{n}"), Graph::path(n), Some(path_value(n)), "closed form for paths"));
    }
    for n in 3..=12 {
        out.push(with_mad(
            named(format!("cycle-{n}"), Graph::cycle(n), Some(cycle_value(n)), "closed form for cycles"),
            2,
        ));
    }
    for k in [1, 3, 5, 7] {
        out.push(named(format!("star-{k}"), Graph::star(k), Some(1), "a star is one induced star"));
    }
    out.push(named("k3-3", Graph::complete_bipartite(3, 3), Some(3), "complete bipartite graphs attain the one-sided bound"));
    out.push(named("k4-7", Graph::complete_bipartite(4, 7), Some(4), "complete bipartite graphs attain the one-sided bound"));
    out.push(with_mad(named("k4", Graph::complete(4), Some(6), "all six edges pairwise conflict"), 3));
    out.push(with_mad(named("prism", prism(), Some(6), "triangular prism"), 3));
    out.push(with_mad(named("petersen", petersen(), None, "classic; value left to the exact solver"), 3));
    out.push(with_mad(named("heawood", heawood(), Some(4), "the (3,6)-cage"), 3));
    out.push(with_mad(
        named("bipartite-cubic", bipartite_cubic(), Some(5), "transcribed drawing of a cubic bipartite graph with index 5"),
        3,
    ));
    out.push(with_mad(named("sun", sun(), Some(4), "sparse graph needing four colors"), 2));
    out.push(named(
        "outerplanar-twin",
        outerplanar_twin(),
        Some(5),
        "transcribed drawing of a subcubic outerplanar graph needing five colors",
    ));
    out
}

pub fn list() -> Vec<String> {
    build().into_iter().map(|g| g.name).collect()
}

pub fn all() -> Vec<NamedGraph> {
    build()
}

pub fn get(name: &str) -> Result<NamedGraph> {
    build()
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(*dist.iter().max()?);
        if best == usize::MAX {
            return None;
        }
    }
    Some(best)
}

/// Structural facts that a transcribed fixture must satisfy. A failure
/// means the fixture is wrong, not the solver.
pub fn check_structure(f: &NamedGraph) -> Result<()> {
    let g = &f.graph;
    let fail = |reason: String| Err(Error::FixtureError { name: f.name.clone(), reason });
    match f.name.as_str() {
        "bipartite-cubic" => {
            if g.degrees().iter().any(|&d| d != 3) {
                return fail("not 3-regular".into());
            }
            if !g.is_bipartite() {
                return fail("not bipartite".into());
            }
        }
        "outerplanar-twin" if g.delta() != 3 => return fail(format!("maximum degree {} instead of 3", g.delta())),
        "heawood" => {
            if (g.n(), g.m()) != (14, 21) {
                return fail(format!("{} vertices and {} edges", g.n(), g.m()));
            }
            if g.girth() != Girth::Finite(6) {
                return fail(format!("girth {:?}", g.girth()));
            }
            if diameter(g) != Some(3) {
                return fail(format!("diameter {:?}", diameter(g)));
            }
        }
        _ => {}
    }
    if let Some(mad) = f.expected_mad {
        let got = mad_exact(g)?;
        if got != mad {
            return fail(format!("mad {got} instead of {mad}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolvable() {
        let names = list();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        for n in &names {
            assert_eq!(&get(n).unwrap().name, n);
        }
        assert!(matches!(get("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn structure_holds() {
        for f in all() {
            check_structure(&f).unwrap();
        }
    }

    #[test]
    fn broken_fixture_is_flagged() {
        let mut f = get("bipartite-cubic").unwrap();
        f.graph = Graph::cycle(10);
        assert!(matches!(check_structure(&f), Err(Error::FixtureError { .. })));
    }
}
