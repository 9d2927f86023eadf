//! DIMACS `.col` subset: `c` comments, one `p edge <N> <M>` header, `e <u> <v>` lines.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

use super::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::DimacsParse {
        line,
        msg: msg.into(),
    }
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    field
        .ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("malformed {what}: {:?}", field.unwrap())))
}

/// Reads a graph from a DIMACS `.col` stream.
///
/// Vertex numbers are 1-based on the wire and 0-based in the returned graph.
/// Duplicate edge lines and both orientations of an edge are tolerated and
/// collapse to one undirected edge. A declared edge count that disagrees with
/// the deduplicated count is accepted with a `log` warning.
pub fn load_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else {
            continue; // blank line
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate 'p' header"));
                }
                if fields.next() != Some("edge") {
                    return Err(parse_err(line_no, "expected 'p edge <vertices> <edges>'"));
                }
                let n: usize = parse_field(fields.next(), line_no, "vertex count")?;
                let m: usize = parse_field(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(parse_err(line_no, "trailing fields after 'p edge <vertices> <edges>'"));
                }
                if n == 0 {
                    return Err(parse_err(line_no, "vertex count must be at least 1"));
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge line before 'p' header"));
                };
                let u: usize = parse_field(fields.next(), line_no, "edge endpoint")?;
                let v: usize = parse_field(fields.next(), line_no, "edge endpoint")?;
                if fields.next().is_some() {
                    return Err(parse_err(line_no, "trailing fields after 'e <u> <v>'"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex {x} outside the declared range 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(parse_err(line_no, format!("unrecognized line type {other:?}")));
            }
        }
    }

    let Some((n, m_declared)) = header else {
        return Err(Error::DimacsMissingHeader);
    };
    let graph = Graph::from_edges(n, edges)?;
    if graph.n_edges() != m_declared {
        log::warn!(
            "DIMACS header declares {m_declared} edges but {} remain after deduplication",
            graph.n_edges()
        );
    }
    Ok(graph)
}

/// Writes `g` in DIMACS `.col` form: one header, then each edge once with `u < v`.
pub fn save_dimacs<W: Write>(g: &Graph, mut writer: W) -> std::io::Result<()> {
    writeln!(writer, "p edge {} {}", g.n_vertices(), g.n_edges())?;
    for (u, v) in g.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}
