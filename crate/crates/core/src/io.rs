//! Line-oriented text formats.
//!
//! * edge list: `i j` per line, `i < j`, 0-based;
//! * vertex table: `index<TAB>dim<TAB>label`;
//! * permutation: `src-label -> dst-label` per vertex, or `i j` index pairs;
//! * standard automorphism record: `delta`, `t`, `X` and optionally
//!   `verified`, one `key<TAB>value` per line.
//!
//! Blank lines and lines starting with `#` are ignored on input.

use std::fmt::Write;

use crate::automorphism::{Permutation, StandardAutomorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::InclusionGraph;
use crate::linalg::Matrix;
use crate::subspace::Subspace;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn edge_list(g: &InclusionGraph) -> String {
    let mut out = String::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u).iter().filter(|&&v| v as usize > u) {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

pub fn vertex_table(g: &InclusionGraph) -> String {
    let mut out = String::new();
    for (i, w) in g.vertices().iter().enumerate() {
        writeln!(out, "{i}\t{}\t{w}", w.dim()).unwrap();
    }
    out
}

pub fn dot(g: &InclusionGraph) -> String {
    let mut out = format!("graph \"In(F_{}^{})\" {{\n", g.field().order(), g.ambient_dim());
    for (i, w) in g.vertices().iter().enumerate() {
        writeln!(out, "  {i} [label=\"{w}\", dim={}];", w.dim()).unwrap();
    }
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u).iter().filter(|&&v| v as usize > u) {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn parse_pair(lineno: usize, line: &str) -> Result<(u32, u32)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<u32> {
        it.next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected two vertex indices, got {line:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing data in {line:?}")));
    }
    Ok(pair)
}

/// Neighbor lists from an edge list. Vertices are `0..vertex_count`, or up to
/// the largest index mentioned when `vertex_count` is `None`.
pub fn parse_edge_list(text: &str, vertex_count: Option<usize>) -> Result<Vec<Vec<u32>>> {
    let mut pairs = Vec::new();
    for (lineno, line) in content_lines(text) {
        pairs.push(parse_pair(lineno, line)?);
    }
    let needed = pairs.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0);
    let count = match vertex_count {
        Some(c) if c < needed => {
            return Err(Error::Parse(format!("edge list mentions vertex {} but only {c} exist", needed - 1)))
        }
        Some(c) => c,
        None => needed,
    };
    let mut adj = vec![Vec::new(); count];
    for (a, b) in pairs {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(adj)
}

/// Subspaces listed in a vertex table, in index order.
pub fn parse_vertex_table(field: &Field, n: usize, text: &str) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for (lineno, line) in content_lines(text) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(Error::Parse(format!("line {lineno}: expected index, dim and label")));
        }
        let index: usize = cols[0].trim().parse().map_err(|_| Error::Parse(format!("line {lineno}: bad index")))?;
        if index != out.len() {
            return Err(Error::Parse(format!("line {lineno}: expected index {}, got {index}", out.len())));
        }
        let w = Subspace::parse(field, n, cols[2])?;
        if cols[1].trim() != w.dim().to_string() {
            return Err(Error::Parse(format!("line {lineno}: dimension column disagrees with label")));
        }
        out.push(w);
    }
    Ok(out)
}

pub fn permutation_labels(g: &InclusionGraph, perm: &Permutation) -> String {
    let mut out = String::new();
    for (i, w) in g.vertices().iter().enumerate() {
        writeln!(out, "{w} -> {}", g.vertex(perm.apply(i))).unwrap();
    }
    out
}

pub fn permutation_pairs(perm: &[u32]) -> String {
    let mut out = String::new();
    for (i, &w) in perm.iter().enumerate() {
        writeln!(out, "{i} {w}").unwrap();
    }
    out
}

/// Reads a permutation file against `g`. Every vertex must appear exactly
/// once as a source; the image array is returned unvalidated so callers can
/// report what is wrong with it.
pub fn parse_permutation(g: &InclusionGraph, text: &str) -> Result<Vec<u32>> {
    let count = g.vertex_count();
    let mut image = vec![u32::MAX; count];
    let lookup = |lineno: usize, label: &str| -> Result<u32> {
        let w = Subspace::parse(g.field(), g.ambient_dim(), label)
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
        g.index_of(&w)
            .map(|i| i as u32)
            .ok_or_else(|| Error::Parse(format!("line {lineno}: [{label}] is not a vertex")))
    };
    for (lineno, line) in content_lines(text) {
        let (src, dst) = match line.split_once("->") {
            Some((a, b)) => (lookup(lineno, a)?, lookup(lineno, b)?),
            None => parse_pair(lineno, line)?,
        };
        if src as usize >= count || dst as usize >= count {
            return Err(Error::Parse(format!("line {lineno}: vertex index out of range")));
        }
        if image[src as usize] != u32::MAX {
            return Err(Error::Parse(format!("line {lineno}: vertex {src} mapped twice")));
        }
        image[src as usize] = dst;
    }
    if let Some(missing) = image.iter().position(|&w| w == u32::MAX) {
        return Err(Error::Parse(format!("no image given for vertex {missing} [{}]", g.vertex(missing))));
    }
    Ok(image)
}

pub fn standard_record(s: &StandardAutomorphism, verified: Option<bool>) -> String {
    let mut out = format!("delta\t{}\nt\t{}\nX\t{}\n", s.delta() as u8, s.frobenius(), s.matrix());
    if let Some(v) = verified {
        writeln!(out, "verified\t{v}").unwrap();
    }
    out
}

/// Reads a record written by [`standard_record`]. Lines may carry a leading
/// `#` so a record can ride along as a header in a permutation file.
pub fn parse_standard_record(field: &Field, text: &str) -> Result<StandardAutomorphism> {
    let (mut delta, mut t, mut x) = (None, None, None);
    for line in text.lines() {
        let line = line.trim().trim_start_matches('#').trim();
        let Some((key, value)) = line.split_once(char::is_whitespace) else {
            continue;
        };
        let value = value.trim();
        match key {
            "delta" => delta = Some(matches!(value, "1" | "true")),
            "t" => t = Some(value.parse::<u32>().map_err(|_| Error::Parse(format!("bad t {value:?}")))?),
            "X" => x = Some(Matrix::parse(field, value)?),
            _ => {}
        }
    }
    match (delta, t, x) {
        (Some(d), Some(t), Some(x)) => StandardAutomorphism::new(field, d, x, t),
        _ => Err(Error::Parse("record needs delta, t and X".into())),
    }
}
