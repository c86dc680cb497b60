//! Text formats.
//!
//! Graph file: first line `n m`, then `m` lines `u v` with `u < v`, 0-indexed,
//! in ascending lexicographic order. A partition file has the same header and
//! an owner column `A`, `B` or `AB` on every edge line. Digraph files use the
//! same layout with ordered arcs `from to` (self-loops allowed).
//!
//! Writers always emit the canonical form; readers accept edges in any order
//! but reject malformed lines, self-loops, out-of-range vertices, duplicates
//! and a wrong edge count.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ArcPartition, DiGraph, Edge, EdgePartition, Graph, Owner};

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n_vertices(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

pub fn write_partition(p: &EdgePartition) -> String {
    let owned = p.owned_edges();
    let mut out = format!("{} {}\n", p.n_vertices(), owned.len());
    for (e, owner) in owned {
        writeln!(out, "{} {} {}", e.u(), e.v(), owner.tag()).unwrap();
    }
    out
}

pub fn write_digraph(d: &DiGraph) -> String {
    let mut out = format!("{} {}\n", d.n_vertices(), d.arc_count());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_arc_partition(p: &ArcPartition) -> String {
    let owned = p.owned_arcs();
    let mut out = format!("{} {}\n", p.n_vertices(), owned.len());
    for ((u, v), owner) in owned {
        writeln!(out, "{u} {v} {}", owner.tag()).unwrap();
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-blank line with its 1-based number.
    fn next_line(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if !fields.is_empty() {
                return Some((i + 1, fields));
            }
        }
        None
    }
}

fn parse_num(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got {field:?}"),
        )
    })
}

/// `(line, u, v, owner tag)`.
type Record = (usize, usize, usize, Option<Owner>);
type OwnedArc = ((usize, usize), Option<Owner>);

/// Header vertex count and records.
fn parse_records(text: &str, with_owner: bool) -> Result<(usize, Vec<Record>)> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines
        .next_line()
        .ok_or_else(|| Error::parse(1, "missing header"))?;
    if header.len() != 2 {
        return Err(Error::parse(hl, "header must be `n m`"));
    }
    let n = parse_num(hl, header[0])?;
    let m = parse_num(hl, header[1])?;
    let width = if with_owner { 3 } else { 2 };
    let mut records = Vec::with_capacity(m);
    while let Some((ln, fields)) = lines.next_line() {
        if fields.len() != width {
            return Err(Error::parse(
                ln,
                format!("expected {width} fields, got {}", fields.len()),
            ));
        }
        let u = parse_num(ln, fields[0])?;
        let v = parse_num(ln, fields[1])?;
        if u >= n || v >= n {
            return Err(Error::parse(ln, format!("vertex out of range for n={n}")));
        }
        let owner = if with_owner {
            Some(Owner::from_tag(fields[2]).ok_or_else(|| {
                Error::parse(ln, format!("owner must be A, B or AB, got {:?}", fields[2]))
            })?)
        } else {
            None
        };
        records.push((ln, u, v, owner));
    }
    if records.len() != m {
        return Err(Error::parse(
            hl,
            format!(
                "header declares {m} edges but {} were listed",
                records.len()
            ),
        ));
    }
    Ok((n, records))
}

fn undirected(
    records: &[(usize, usize, usize, Option<Owner>)],
) -> Result<Vec<(Edge, Option<Owner>)>> {
    let mut seen = BTreeSet::new();
    records
        .iter()
        .map(|&(ln, u, v, owner)| {
            let e = Edge::try_new(u, v).map_err(|_| Error::parse(ln, "self-loop"))?;
            if !seen.insert(e) {
                return Err(Error::parse(ln, "duplicate edge"));
            }
            Ok((e, owner))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, records) = parse_records(text, false)?;
    let mut g = Graph::new(n);
    for (e, _) in undirected(&records)? {
        g.insert(e)?;
    }
    Ok(g)
}

pub fn parse_partition(text: &str) -> Result<EdgePartition> {
    let (n, records) = parse_records(text, true)?;
    let owned = undirected(&records)?
        .into_iter()
        .map(|(e, o)| (e, o.expect("owner column")))
        .collect::<Vec<_>>();
    EdgePartition::from_owned_edges(n, owned, false)
}

fn arcs(records: &[Record]) -> Result<Vec<OwnedArc>> {
    let mut seen = BTreeSet::new();
    records
        .iter()
        .map(|&(ln, u, v, owner)| {
            if !seen.insert((u, v)) {
                return Err(Error::parse(ln, "duplicate arc"));
            }
            Ok(((u, v), owner))
        })
        .collect()
}

pub fn parse_digraph(text: &str) -> Result<DiGraph> {
    let (n, records) = parse_records(text, false)?;
    DiGraph::from_arcs(n, arcs(&records)?.into_iter().map(|(a, _)| a))
}

pub fn parse_arc_partition(text: &str) -> Result<ArcPartition> {
    let (n, records) = parse_records(text, true)?;
    let mut alice = DiGraph::new(n);
    let mut bob = DiGraph::new(n);
    for ((u, v), owner) in arcs(&records)? {
        let owner = owner.expect("owner column");
        if owner != Owner::Bob {
            alice.add_arc(u, v)?;
        }
        if owner != Owner::Alice {
            bob.add_arc(u, v)?;
        }
    }
    Ok(ArcPartition { alice, bob })
}

fn dot_nodes(out: &mut String, n: usize, roles: Option<&[String]>) {
    for v in 0..n {
        match roles.and_then(|r| r.get(v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{label}\", role=\"{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
}

pub fn graph_to_dot(g: &Graph, roles: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    dot_nodes(&mut out, g.n_vertices(), roles);
    for e in g.edges() {
        writeln!(out, "  {} -- {};", e.u(), e.v()).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn partition_to_dot(p: &EdgePartition, roles: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    dot_nodes(&mut out, p.n_vertices(), roles);
    for (e, owner) in p.owned_edges() {
        writeln!(out, "  {} -- {} [owner=\"{}\"];", e.u(), e.v(), owner.tag()).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn digraph_to_dot(d: &DiGraph, roles: Option<&[String]>) -> String {
    let mut out = String::from("digraph G {\n");
    dot_nodes(&mut out, d.n_vertices(), roles);
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn arc_partition_to_dot(p: &ArcPartition, roles: Option<&[String]>) -> String {
    let mut out = String::from("digraph G {\n");
    dot_nodes(&mut out, p.n_vertices(), roles);
    for ((u, v), owner) in p.owned_arcs() {
        writeln!(out, "  {u} -> {v} [owner=\"{}\"];", owner.tag()).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_format_is_canonical() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (0, 1)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "4 3\n0 1\n0 3\n1 2\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(parse_graph("4 3\n1 2\n3 0\n0 1\n").unwrap(), g);
    }

    #[test]
    fn partition_format() {
        let p = EdgePartition::new(
            Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(),
            Graph::from_edges(3, [(1, 2)]).unwrap(),
            false,
        )
        .unwrap();
        let text = write_partition(&p);
        assert_eq!(text, "3 2\n0 1 A\n1 2 AB\n");
        assert_eq!(parse_partition(&text).unwrap(), p);
    }

    #[test]
    fn malformed_inputs_rejected() {
        for bad in [
            "",
            "3\n",
            "3 1\n0 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n",
            "3 1\n0 x\n",
            "3 2\n0 1\n1 0\n",
        ] {
            assert!(parse_graph(bad).is_err(), "{bad:?}");
        }
        for bad in ["3 1\n0 1 C\n", "3 1\n0 1\n", "3 1\n0 1 A extra\n"] {
            assert!(parse_partition(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn digraph_roundtrip_with_loops() {
        let d = DiGraph::from_arcs(3, [(0, 0), (2, 1), (1, 2)]).unwrap();
        let text = write_digraph(&d);
        assert_eq!(text, "3 3\n0 0\n1 2\n2 1\n");
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let roles = vec!["t_1".to_string(), "b_1".to_string()];
        let dot = graph_to_dot(&g, Some(&roles));
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains("0 [label=\"t_1\", role=\"t_1\"];"));
        assert!(dot.contains("0 -- 1;"));
        let d = DiGraph::from_arcs(2, [(1, 0)]).unwrap();
        assert!(digraph_to_dot(&d, None).contains("1 -> 0;"));
    }
}
