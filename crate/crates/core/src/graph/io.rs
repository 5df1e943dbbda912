//! Plain-text file formats.
//!
//! * graph: `n m` then `m` lines `u v`
//! * hypergraph: `n m` then `m` lines each listing one hyperedge
//! * capacities: one line `v c` per vertex
//! * bipartite: `nL nR m` then `m` lines `l r`
//!
//! Ids are 0-based. Blank lines are ignored except inside the hyperedge
//! block, where a blank line is an (illegal) empty hyperedge.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{CapacityFn, Graph, Hypergraph};
use crate::min_valid_aug::ContractedBipartite;

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("expected a non-negative integer, found `{tok}`")))
        })
        .collect()
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn header<const K: usize>(lines: &mut dyn Iterator<Item = (usize, &str)>, what: &str) -> Result<[usize; K]> {
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing header `{what}`")))?;
    let nums = numbers(line, lineno)?;
    nums.try_into()
        .map_err(|_| Error::parse(lineno, format!("header must be `{what}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let [n, m] = header::<2>(&mut lines, "n m")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = 1;
    for (lineno, line) in lines {
        last_line = lineno;
        let nums = numbers(line, lineno)?;
        let [u, v]: [usize; 2] = nums
            .try_into()
            .map_err(|_| Error::parse(lineno, "edge line must be `u v`"))?;
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex id >= n = {n}")));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(last_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut all = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut skip_blank = all.by_ref().skip_while(|(_, l)| l.trim().is_empty());
    let [n, m] = header::<2>(&mut skip_blank, "n m")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = 1;
    for _ in 0..m {
        let Some((lineno, line)) = skip_blank.next() else {
            return Err(Error::parse(last_line, format!("header announces {m} hyperedges, found {}", edges.len())));
        };
        last_line = lineno;
        let e = numbers(line, lineno)?;
        if e.is_empty() {
            return Err(Error::parse(lineno, "empty hyperedge"));
        }
        if let Some(v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::parse(lineno, format!("vertex {v} >= n = {n}")));
        }
        edges.push(e);
    }
    if let Some((lineno, _)) = skip_blank.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::parse(lineno, format!("more than {m} hyperedges")));
    }
    Hypergraph::new(n, edges).map_err(|e| Error::parse(last_line, e.to_string()))
}

/// Every vertex `0..n` must appear exactly once.
pub fn parse_capacities(text: &str, n: usize) -> Result<CapacityFn> {
    let mut cap = vec![None; n];
    let mut last_line = 1;
    for (lineno, line) in content_lines(text) {
        last_line = lineno;
        let [v, c]: [usize; 2] = numbers(line, lineno)?
            .try_into()
            .map_err(|_| Error::parse(lineno, "capacity line must be `v c`"))?;
        if v >= n {
            return Err(Error::parse(lineno, format!("vertex id >= n = {n}")));
        }
        if cap[v].replace(c).is_some() {
            return Err(Error::parse(lineno, format!("capacity of vertex {v} given twice")));
        }
    }
    let cap: Option<Vec<usize>> = cap.into_iter().collect();
    cap.map(CapacityFn::new)
        .ok_or_else(|| Error::parse(last_line, format!("capacities must cover all {n} vertices")))
}

pub fn parse_bipartite(text: &str) -> Result<ContractedBipartite> {
    let mut lines = content_lines(text);
    let [n_left, n_right, m] = header::<3>(&mut lines, "nL nR m")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let mut last_line = 1;
    for (lineno, line) in lines {
        last_line = lineno;
        let [l, r]: [usize; 2] = numbers(line, lineno)?
            .try_into()
            .map_err(|_| Error::parse(lineno, "edge line must be `l r`"))?;
        if l >= n_left || r >= n_right {
            return Err(Error::parse(lineno, "vertex id out of range"));
        }
        if !seen.insert((l, r)) {
            return Err(Error::parse(lineno, format!("duplicate edge {l} {r}")));
        }
        edges.push((l, r));
    }
    if edges.len() != m {
        return Err(Error::parse(last_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(ContractedBipartite::new(n_left, n_right, &edges))
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn format_capacities(c: &CapacityFn) -> String {
    let mut out = String::new();
    for (v, cap) in c.as_slice().iter().enumerate() {
        writeln!(out, "{v} {cap}").unwrap();
    }
    out
}
