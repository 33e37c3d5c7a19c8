//! Text formats: graph6, a plain edge list, DIMACS, and result records.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::coloring::{EdgeColoring, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    Dimacs,
}

impl Format {
    pub fn from_name(name: &str) -> Result<Format> {
        match name {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// `.g6` is graph6, `.col` and `.dimacs` are DIMACS, anything else is an
    /// edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Format::Graph6,
            Some("col") | Some("dimacs") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Graph6 => "g6",
            Format::EdgeList => "txt",
            Format::Dimacs => "col",
        }
    }
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_graph(&text, format.unwrap_or_else(|| Format::from_path(path)))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::parse("byte 0", "empty input"))?;
            decode_graph6(line)
        }
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g) + "\n",
        Format::EdgeList => {
            let mut s = format!("{} {}\n", g.n(), g.m());
            for &(u, v) in g.edges() {
                writeln!(s, "{u} {v}").unwrap();
            }
            s
        }
        Format::Dimacs => {
            let mut s = format!("p edge {} {}\n", g.n(), g.m());
            for &(u, v) in g.edges() {
                writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
            }
            s
        }
    }
}

const HEADER: &str = ">>graph6<<";

/// graph6 encoding: the vertex count, then the upper triangle of the
/// adjacency matrix column by column, six bits per printable byte.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

pub fn decode_graph6(line: &str) -> Result<Graph> {
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    let offset = line.len() - body.len();
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(format!("byte {}", offset + i), format!("invalid graph6 byte {b}")));
        }
    }
    let at = |i: usize| -> Result<usize> {
        body.get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| Error::parse(format!("byte {}", offset + i), "truncated size"))
    };
    let (n, mut pos) = if body.first() != Some(&126) {
        (at(0)?, 1)
    } else if body.get(1) != Some(&126) {
        ((at(1)? << 12) | (at(2)? << 6) | at(3)?, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | at(i)?;
        }
        (n, 8)
    };
    let total = n * n.saturating_sub(1) / 2;
    let needed = total.div_ceil(6);
    let data = &body[pos.min(body.len())..];
    if data.len() != needed {
        return Err(Error::parse(
            format!("byte {}", offset + pos + data.len().min(needed)),
            format!("expected {needed} data bytes for {n} vertices, found {}", data.len()),
        ));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
            if k == total {
                break 'outer;
            }
        }
    }
    if total % 6 != 0 {
        let last = data[needed - 1] - 63;
        let pad = 6 - total % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::FormatViolation("nonzero graph6 padding bits".into()));
        }
    }
    pos += needed;
    debug_assert_eq!(pos, body.len());
    Graph::new(n, pairs)
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(format!("line {lineno}"), format!("not a non-negative integer: {t:?}")))
        })
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (lineno, head) = lines.next().ok_or_else(|| Error::parse("line 1", "missing header \"n m\""))?;
    let nm = numbers(head, lineno)?;
    let [n, m] = nm[..] else {
        return Err(Error::parse(format!("line {lineno}"), "header must be \"n m\""));
    };
    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let uv = numbers(line, lineno)?;
        let [u, v] = uv[..] else {
            return Err(Error::parse(format!("line {lineno}"), "edge line must be \"u v\""));
        };
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::FormatViolation(format!("header announces {m} edges, found {}", pairs.len())));
    }
    Graph::new(n, pairs)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut m = 0;
    let mut pairs = Vec::new();
    for (lineno, line) in content_lines(text) {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(Error::parse(format!("line {lineno}"), "problem line must be \"p edge n m\""));
                }
                n = Some(numbers(rest[1], lineno)?[0]);
                m = numbers(rest[2], lineno)?[0];
            }
            Some("e") => {
                if n.is_none() {
                    return Err(Error::parse(format!("line {lineno}"), "edge before problem line"));
                }
                let uv = numbers(&tokens.collect::<Vec<_>>().join(" "), lineno)?;
                let [u, v] = uv[..] else {
                    return Err(Error::parse(format!("line {lineno}"), "edge line must be \"e u v\""));
                };
                if u == 0 || v == 0 {
                    return Err(Error::parse(format!("line {lineno}"), "DIMACS vertices are numbered from 1"));
                }
                pairs.push((u - 1, v - 1));
            }
            _ => return Err(Error::parse(format!("line {lineno}"), format!("unexpected line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse("line 1", "missing problem line"))?;
    if pairs.len() != m {
        return Err(Error::FormatViolation(format!("problem line announces {m} edges, found {}", pairs.len())));
    }
    Graph::new(n, pairs)
}

/// Reads a coloring: a JSON object with a `colors` array, a bare JSON
/// array, or whitespace-separated integers.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let trimmed = text.trim_start();
    let values: Vec<u32> = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("line {}", e.line()), e.to_string()))?;
        let arr = match &v {
            serde_json::Value::Array(a) => a,
            serde_json::Value::Object(o) => o
                .get("colors")
                .and_then(|c| c.as_array())
                .ok_or_else(|| Error::parse("colors", "missing \"colors\" array"))?,
            _ => unreachable!(),
        };
        arr.iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_u64()
                    .and_then(|c| u32::try_from(c).ok())
                    .ok_or_else(|| Error::parse(format!("colors[{i}]"), "not a color"))
            })
            .collect::<Result<_>>()?
    } else {
        text.split_whitespace()
            .enumerate()
            .map(|(i, t)| t.parse::<u32>().map_err(|_| Error::parse(format!("token {}", i + 1), format!("not a color: {t:?}"))))
            .collect::<Result<_>>()?
    };
    EdgeColoring::new(values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSize {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    /// Pairwise conflicting edges (a lower bound on the index).
    pub clique: Vec<usize>,
}

/// The JSON record printed by `solve`, `bound` and `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct ResultRecord {
    pub graph: GraphSize,
    pub method: String,
    pub index_or_bound: Option<usize>,
    pub colors: Vec<u32>,
    pub valid: bool,
    pub certificates: Certificates,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ResultRecord {
    pub fn new(g: &Graph, method: &str, index_or_bound: Option<usize>, colors: &EdgeColoring) -> ResultRecord {
        ResultRecord {
            graph: GraphSize { n: g.n(), m: g.m() },
            method: method.to_string(),
            index_or_bound,
            colors: colors.colors().to_vec(),
            valid: true,
            certificates: Certificates::default(),
            witness: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalRecord {
    pub num: i64,
    pub den: i64,
}

/// `{"mad": {"num": .., "den": ..}}`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MadRecord {
    pub mad: RationalRecord,
}

impl MadRecord {
    pub fn new(mad: crate::mad::Rational) -> MadRecord {
        MadRecord {
            mad: RationalRecord {
                num: *mad.numer(),
                den: *mad.denom(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schema {
    Json,
    Tsv,
}

pub fn write_result(g: &Graph, record: &ResultRecord, schema: Schema) -> String {
    match schema {
        Schema::Json => serde_json::to_string_pretty(record).expect("serializable") + "\n",
        Schema::Tsv => {
            let mut s = String::new();
            for (&(u, v), c) in g.edges().iter().zip(&record.colors) {
                writeln!(s, "{u}\t{v}\t{c}").unwrap();
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    #[test]
    fn edge_list_triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n", Format::EdgeList).unwrap();
        assert!(g.same_edge_set(&Graph::complete(3)));
    }

    #[test]
    fn graph6_known_strings() {
        // path 0-1-2 and the 5-cycle, as printed by standard tools
        assert_eq!(encode_graph6(&Graph::path(3)), "Bg");
        assert_eq!(encode_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        let g = decode_graph6(">>graph6<<Dhc").unwrap();
        assert!(g.same_edge_set(&Graph::cycle(5)));
        assert_eq!(decode_graph6("D?{").map(|g| g.m()), Ok(4));
        assert!(matches!(decode_graph6("Bh"), Err(Error::FormatViolation(_))));
        assert!(matches!(decode_graph6("D?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dimacs_rejects_zero() {
        assert!(matches!(
            parse_graph("p edge 2 1\ne 0 1\n", Format::Dimacs),
            Err(Error::Parse { .. })
        ));
        let g = parse_graph("c hi\np edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        assert!(g.same_edge_set(&Graph::path(3)));
    }

    #[test]
    fn colorings() {
        assert_eq!(parse_coloring("1 2 3").unwrap().colors(), &[1, 2, 3]);
        assert_eq!(parse_coloring("{\"colors\": [2, 1]}").unwrap().colors(), &[2, 1]);
        assert!(parse_coloring("1 0").is_err());
    }

    #[test]
    fn json_key_order() {
        let g = Graph::cycle(5);
        let rec = ResultRecord::new(&g, "exact", Some(3), &EdgeColoring::new(vec![1, 2, 1, 2, 3]).unwrap());
        let s = write_result(&g, &rec, Schema::Json);
        let keys = ["\"graph\"", "\"method\"", "\"index_or_bound\"", "\"colors\"", "\"valid\"", "\"certificates\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|p| p[0] < p[1]));
        assert!(write_result(&g, &rec, Schema::Tsv).starts_with("0\t1\t1\n"));
    }

    #[test]
    fn mad_record() {
        let r = MadRecord::new(crate::mad::Rational::new(7, 3));
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"mad":{"num":7,"den":3}}"#);
    }

    proptest! {
        #[test]
        fn round_trips(seed in any::<u64>(), n in 0usize..11, p in 0.0f64..1.0) {
            let g = generate::random_graph(n, p, seed);
            let g6 = encode_graph6(&g);
            prop_assert_eq!(encode_graph6(&decode_graph6(&g6).unwrap()), g6.clone());
            for f in [Format::Graph6, Format::EdgeList, Format::Dimacs] {
                let back = parse_graph(&write_graph(&g, f), f).unwrap();
                prop_assert!(back.same_edge_set(&g));
                prop_assert_eq!(back.n(), g.n());
            }
        }
    }
}
