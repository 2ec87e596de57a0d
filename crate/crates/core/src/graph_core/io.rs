//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use super::graph::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::MissingHeader)?;
    let [n, m] = parse_pair(hline, header)?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {w} out of range for n = {n}"),
                });
            }
        }
        match g.insert_edge(u, v) {
            Ok(true) => {}
            Ok(false) => {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate edge {u} {v}"),
                })
            }
            Err(e) => {
                return Err(Error::Parse {
                    line,
                    msg: e.to_string(),
                })
            }
        }
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges but {seen} were listed"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, found {:?}", l),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a non-negative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("write to String");
    }
    out
}
