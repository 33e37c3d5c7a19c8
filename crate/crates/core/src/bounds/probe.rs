//! Empirical sweep over small subcubic graphs: exact index of every
//! enumerable graph plus seeded random samples.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus;
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::solver::injective_chromatic_index;

/// Largest vertex count handed to the exhaustive generator.
pub const ENUMERATION_LIMIT: usize = 9;
/// Index that no subcubic graph can exceed (the general degree bound at 3).
pub const SUBCUBIC_CEILING: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeFamily {
    Subcubic,
    SubcubicBipartite,
}

impl ProbeFamily {
    /// Largest index conjectured for the family.
    pub fn conjectured(self) -> usize {
        match self {
            ProbeFamily::Subcubic => 6,
            ProbeFamily::SubcubicBipartite => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProbeFamily::Subcubic => "subcubic",
            ProbeFamily::SubcubicBipartite => "subcubic-bipartite",
        }
    }
}

impl fmt::Display for ProbeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProbeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProbeFamily> {
        match s {
            "subcubic" => Ok(ProbeFamily::Subcubic),
            "subcubic-bipartite" => Ok(ProbeFamily::SubcubicBipartite),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Enumerated,
    Fixture,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeRecord {
    pub n: usize,
    pub m: usize,
    pub index: usize,
    pub graph6: String,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub family: ProbeFamily,
    pub checked: usize,
    pub enumerated: usize,
    pub sampled: usize,
    pub max_index: usize,
    /// A graph attaining `max_index`, the first in graph order.
    pub max_witness: Option<ProbeRecord>,
    /// Number of graphs per index value.
    pub histogram: BTreeMap<usize, usize>,
    pub trees_max_index: Option<usize>,
    /// Graphs above the conjectured value for the family.
    pub above_conjecture: Vec<ProbeRecord>,
    /// Graphs above the proven ceiling; any entry is a bug.
    pub above_ceiling: Vec<ProbeRecord>,
}

/// Random connected bipartite subcubic graph: a random subcubic tree plus
/// chords between its two sides.
fn random_bipartite_subcubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let tree = generate::random_bounded_degree(rng, n, 3, 0);
    let sides = tree.bipartition().expect("trees are bipartite");
    let mut deg = tree.degrees();
    let mut pairs = tree.edges().to_vec();
    let attempts = rng.gen_range(0..=n);
    for _ in 0..attempts {
        let a: Vec<usize> = sides.side_a.iter().copied().filter(|&v| deg[v] < 3).collect();
        let b: Vec<usize> = sides.side_b.iter().copied().filter(|&v| deg[v] < 3).collect();
        if a.is_empty() || b.is_empty() {
            break;
        }
        let u = a[rng.gen_range(0..a.len())];
        let v = b[rng.gen_range(0..b.len())];
        let key = (u.min(v), u.max(v));
        if !pairs.contains(&key) {
            pairs.push(key);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::new(n, pairs).unwrap()
}

fn sample(family: ProbeFamily, max_n: usize, seed: u64, i: usize) -> Graph {
    let mut rng = generate::rng(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.gen_range(2..=max_n.max(2));
    match family {
        ProbeFamily::Subcubic => generate::random_connected_subcubic(&mut rng, n),
        ProbeFamily::SubcubicBipartite => random_bipartite_subcubic(&mut rng, n),
    }
}

/// Solves every connected subcubic graph on at most `min(max_n, 9)`
/// vertices (bipartite ones only for the bipartite family), a few fixtures,
/// and `count` seeded samples on at most `max_n` vertices.
pub fn conjecture_probe(family: ProbeFamily, max_n: usize, count: usize, seed: u64) -> ProbeReport {
    let keep = |g: &Graph| family == ProbeFamily::Subcubic || g.is_bipartite();
    let mut graphs: Vec<(Graph, Source)> = generate::enumerate_connected_subcubic(max_n.min(ENUMERATION_LIMIT))
        .into_iter()
        .filter(|g| keep(g))
        .map(|g| (g, Source::Enumerated))
        .collect();
    let enumerated = graphs.len();
    let fixtures = match family {
        ProbeFamily::Subcubic => vec![corpus::get("k4"), corpus::get("prism")],
        ProbeFamily::SubcubicBipartite => vec![corpus::get("bipartite-cubic"), corpus::get("heawood")],
    };
    graphs.extend(fixtures.into_iter().map(|f| (f.expect("fixture exists").graph, Source::Fixture)));
    graphs.extend((0..count).map(|i| (sample(family, max_n, seed, i), Source::Sampled)));

    let indices: Vec<usize> = graphs
        .par_iter()
        .map(|(g, _)| injective_chromatic_index(g).map(|r| r.index).unwrap_or(0))
        .collect();

    let mut report = ProbeReport {
        family,
        checked: graphs.len(),
        enumerated,
        sampled: count,
        max_index: 0,
        max_witness: None,
        histogram: BTreeMap::new(),
        trees_max_index: None,
        above_conjecture: Vec::new(),
        above_ceiling: Vec::new(),
    };
    for ((g, source), &index) in graphs.iter().zip(&indices) {
        *report.histogram.entry(index).or_default() += 1;
        let record = || ProbeRecord {
            n: g.n(),
            m: g.m(),
            index,
            graph6: encode_graph6(g),
            source: *source,
        };
        if index > report.max_index {
            report.max_index = index;
            report.max_witness = Some(record());
        }
        if g.m() > 0 && g.is_forest() {
            report.trees_max_index = Some(report.trees_max_index.unwrap_or(0).max(index));
        }
        if index > family.conjectured() {
            report.above_conjecture.push(record());
        }
        if index > SUBCUBIC_CEILING {
            report.above_ceiling.push(record());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep() {
        let r = conjecture_probe(ProbeFamily::Subcubic, 6, 20, 1);
        assert_eq!(r.max_index, 6);
        assert!(r.above_ceiling.is_empty());
        assert!(r.trees_max_index.unwrap() <= 3);
        assert_eq!(r.histogram.values().sum::<usize>(), r.checked);
        assert_eq!(r, conjecture_probe(ProbeFamily::Subcubic, 6, 20, 1));
    }

    #[test]
    fn bipartite_sweep_reaches_five() {
        let r = conjecture_probe(ProbeFamily::SubcubicBipartite, 6, 20, 7);
        assert!(r.max_index >= 5);
        assert!(r.above_conjecture.is_empty());
    }

    #[test]
    fn bipartite_samples_are_bipartite() {
        for i in 0..50 {
            let g = sample(ProbeFamily::SubcubicBipartite, 14, 3, i);
            assert!(g.is_bipartite() && g.delta() <= 3 && g.is_connected());
        }
    }
}
