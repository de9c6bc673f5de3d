//! Line-oriented instance text format.
//!
//! ```text
//! trigraph <n>
//! e <u> <v>                        # strongly adjacent pair
//! s <u> <v>                        # semi-adjacent pair
//! w <u> <val>                      # vertex weight, default 0
//! sw <u> <v> <wuv> <wvu> <wpair>   # w(u,v), w(v,u), w(uv); semi pairs only
//! ```
//!
//! All unlisted pairs are strongly anti-adjacent; all unlisted weights are
//! zero. `#` starts a comment; tokens are whitespace-separated. Duplicate or
//! conflicting pair lines and weight-function violations are parse errors.
//! The serializer emits a canonical form that round-trips bit-exactly.

use crate::trigraph::{Adjacency, Trigraph};
use crate::weight::{WeightFunction, WeightedTrigraph};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("parse error at line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses a weighted trigraph; a bare trigraph is a weighted trigraph with
/// all weights zero.
pub fn parse(input: &str) -> Result<WeightedTrigraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut theta: BTreeMap<(usize, usize), Adjacency> = BTreeMap::new();
    let mut vertex_w: BTreeMap<usize, u64> = BTreeMap::new();
    let mut semi_w: BTreeMap<(usize, usize), (u64, u64, u64)> = BTreeMap::new();

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse_usize = |tok: &str| -> Result<usize, ParseError> {
            tok.parse()
                .map_err(|_| ParseError {
                    line: lineno,
                    message: format!("expected a non-negative integer, got `{tok}`"),
                })
        };
        let parse_u64 = |tok: &str| -> Result<u64, ParseError> {
            tok.parse()
                .map_err(|_| ParseError {
                    line: lineno,
                    message: format!("expected a non-negative integer, got `{tok}`"),
                })
        };
        match tokens[0] {
            "trigraph" => {
                if n.is_some() {
                    return err(lineno, "duplicate `trigraph` header");
                }
                if tokens.len() != 2 {
                    return err(lineno, "usage: trigraph <n>");
                }
                n = Some(parse_usize(tokens[1])?);
            }
            "e" | "s" => {
                let n = match n {
                    Some(n) => n,
                    None => return err(lineno, "pair line before `trigraph` header"),
                };
                if tokens.len() != 3 {
                    return err(lineno, format!("usage: {} <u> <v>", tokens[0]));
                }
                let u = parse_usize(tokens[1])?;
                let v = parse_usize(tokens[2])?;
                if u == v {
                    return err(lineno, format!("self-pair {u} {v}"));
                }
                if u >= n || v >= n {
                    return err(lineno, format!("vertex out of range (n={n})"));
                }
                let key = (u.min(v), u.max(v));
                let a = if tokens[0] == "e" {
                    Adjacency::StrongAdj
                } else {
                    Adjacency::Semi
                };
                if theta.insert(key, a).is_some() {
                    return err(
                        lineno,
                        format!("duplicate or conflicting pair line for {} {}", key.0, key.1),
                    );
                }
            }
            "w" => {
                let n = match n {
                    Some(n) => n,
                    None => return err(lineno, "weight line before `trigraph` header"),
                };
                if tokens.len() != 3 {
                    return err(lineno, "usage: w <u> <val>");
                }
                let u = parse_usize(tokens[1])?;
                if u >= n {
                    return err(lineno, format!("vertex out of range (n={n})"));
                }
                let val = parse_u64(tokens[2])?;
                if vertex_w.insert(u, val).is_some() {
                    return err(lineno, format!("duplicate vertex weight for {u}"));
                }
            }
            "sw" => {
                let n = match n {
                    Some(n) => n,
                    None => return err(lineno, "weight line before `trigraph` header"),
                };
                if tokens.len() != 6 {
                    return err(lineno, "usage: sw <u> <v> <wuv> <wvu> <wpair>");
                }
                let u = parse_usize(tokens[1])?;
                let v = parse_usize(tokens[2])?;
                if u == v || u >= n || v >= n {
                    return err(lineno, "bad pair in sw line");
                }
                let wuv = parse_u64(tokens[3])?;
                let wvu = parse_u64(tokens[4])?;
                let wpair = parse_u64(tokens[5])?;
                let key = (u.min(v), u.max(v));
                // Orient the directed entries to the normalized key order.
                let entry = if u < v {
                    (wuv, wvu, wpair)
                } else {
                    (wvu, wuv, wpair)
                };
                if semi_w.insert(key, entry).is_some() {
                    return err(lineno, format!("duplicate sw line for {} {}", key.0, key.1));
                }
            }
            other => return err(lineno, format!("unknown directive `{other}`")),
        }
    }

    let n = match n {
        Some(n) => n,
        None => return err(input.lines().count().max(1), "missing `trigraph` header"),
    };

    let mut g = Trigraph::new(n);
    for (&(u, v), &a) in &theta {
        g.set(u, v, a).map_err(|e| ParseError {
            line: 0,
            message: e.to_string(),
        })?;
    }

    let mut w = WeightFunction::new();
    for (&u, &val) in &vertex_w {
        w.set_vertex(u, val);
    }
    for (&(u, v), &(wuv, wvu, wpair)) in &semi_w {
        if g.theta(u, v) != Adjacency::Semi {
            return err(1, format!("sw line on non-semi pair {u} {v}"));
        }
        w.set_pair(u, v, wpair);
        w.set_directed(u, v, wuv);
        w.set_directed(v, u, wvu);
    }

    WeightedTrigraph::new(g, w).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

/// Canonical serialization: header, then `e` lines, `s` lines, nonzero `w`
/// lines and needed `sw` lines, each block in lexicographic order.
pub fn serialize(wt: &WeightedTrigraph) -> String {
    let g = &wt.trigraph;
    let w = &wt.weights;
    let mut out = String::new();
    out.push_str(&format!("trigraph {}\n", g.n()));
    for (u, v) in g.strong_pairs() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for (u, v) in g.semi_pairs() {
        out.push_str(&format!("s {u} {v}\n"));
    }
    for v in g.vertices() {
        let val = w.vertex(v);
        if val != 0 {
            out.push_str(&format!("w {v} {val}\n"));
        }
    }
    for (u, v) in g.semi_pairs() {
        let wuv = w.directed(u, v);
        let wvu = w.directed(v, u);
        let wpair = w.pair(u, v);
        if wuv != 0 || wvu != 0 || wpair != 0 {
            out.push_str(&format!("sw {u} {v} {wuv} {wvu} {wpair}\n"));
        }
    }
    out
}
