//! Plain-text edge lists.
//!
//! One `u v` pair per line, `#` starts a comment. A comment of the form
//! `# nodes: N` declares the node count, which lets isolated trailing nodes
//! survive a round trip; without it `n` is one more than the largest id.

use std::fmt::Write as _;

use super::{Digraph, IdBase, NodeId};
use crate::error::{Error, Result};

const NODES_HEADER: &str = "nodes:";

pub fn parse_edge_list(text: &str, base: IdBase) -> Result<Digraph> {
    let offset = base.offset() as i64;
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(NodeId, NodeId, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (content, comment) = match raw.split_once('#') {
            Some((c, rest)) => (c, Some(rest)),
            None => (raw, None),
        };
        if let Some(header) = comment.and_then(|c| c.trim().strip_prefix(NODES_HEADER)) {
            let n = header.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad node-count header {:?}", header.trim()),
            })?;
            if declared.replace(n).is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "node count declared twice".into(),
                });
            }
        }

        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            [u, v] => {
                let u = parse_id(u, offset, line_no)?;
                let v = parse_id(v, offset, line_no)?;
                edges.push((u, v, line_no));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two ids, found {} tokens", tokens.len()),
                })
            }
        }
    }

    let n = match declared {
        Some(n) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u >= n || v >= n) {
                return Err(Error::Parse {
                    line,
                    message: format!(
                        "id {} exceeds declared node count {n}",
                        u.max(v) as i64 + offset
                    ),
                });
            }
            n
        }
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };

    Digraph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

fn parse_id(token: &str, offset: i64, line: usize) -> Result<NodeId> {
    let raw: i64 = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{token:?} is not an integer id"),
    })?;
    if raw < 0 {
        return Err(Error::Parse {
            line,
            message: format!("negative id {raw}"),
        });
    }
    if raw < offset {
        return Err(Error::Parse {
            line,
            message: format!("id {raw} is below base {offset}"),
        });
    }
    Ok((raw - offset) as NodeId)
}

/// Canonical form: node-count header, then edges sorted lexicographically.
pub fn serialize_edge_list(g: &Digraph, base: IdBase) -> String {
    let offset = base.offset();
    let mut out = format!("# {NODES_HEADER} {}\n", g.node_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + offset, v + offset);
    }
    out
}
