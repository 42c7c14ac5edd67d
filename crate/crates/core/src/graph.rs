//! The subspace inclusion graph of `F_q^n` and its structural invariants.
//!
//! Vertices are the nontrivial proper subspaces, indexed in enumeration order
//! (dimension 1 first, then 2, ...). Two vertices are adjacent when one
//! properly contains the other.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result, Violation};
use crate::field::Field;
use crate::subspace::{enumerate_subspaces, Subspace};

/// A path or cycle length that may be unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(d) => write!(f, "{d}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub diameter: Length,
    pub girth: Length,
    pub clique_number: usize,
}

pub struct InclusionGraph {
    field: Field,
    n: usize,
    vertices: Vec<Subspace>,
    adjacency: Vec<Vec<u32>>,
    bits: Vec<u64>,
    words: usize,
    index: HashMap<Subspace, u32>,
    perp: OnceLock<Vec<u32>>,
}

impl fmt::Debug for InclusionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InclusionGraph")
            .field("field", &self.field)
            .field("n", &self.n)
            .field("vertices", &self.vertices.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl InclusionGraph {
    pub fn build(field: &Field, n: usize) -> Result<InclusionGraph> {
        if n < 2 {
            return Err(Error::AmbientDimension { n, min: 2 });
        }
        let mut vertices = Vec::new();
        let mut starts = Vec::new();
        for k in 1..n {
            starts.push(vertices.len());
            vertices.extend(enumerate_subspaces(field, n, k)?);
        }
        starts.push(vertices.len());

        let count = vertices.len();
        let words = count.div_ceil(64);
        let mut bits = vec![0u64; count * words];
        let mut adjacency = vec![Vec::new(); count];
        for k1 in 1..n {
            for k2 in k1 + 1..n {
                for i in starts[k1 - 1]..starts[k1] {
                    for j in starts[k2 - 1]..starts[k2] {
                        if vertices[i].is_proper_subset(field, &vertices[j]) {
                            adjacency[i].push(j as u32);
                            adjacency[j].push(i as u32);
                            bits[i * words + j / 64] |= 1 << (j % 64);
                            bits[j * words + i / 64] |= 1 << (i % 64);
                        }
                    }
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let index = vertices.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
        Ok(InclusionGraph { field: field.clone(), n, vertices, adjacency, bits, words, index, perp: OnceLock::new() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Subspace {
        &self.vertices[i]
    }

    pub fn dim(&self, i: usize) -> usize {
        self.vertices[i].dim()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    #[inline]
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).map(|&i| i as usize)
    }

    /// Index of a subspace that must be a vertex of this graph.
    pub(crate) fn expect_index(&self, s: &Subspace) -> Result<usize> {
        self.index_of(s).ok_or_else(|| Error::Integrity(format!("subspace [{s}] is not a vertex of the graph")))
    }

    /// `perp_index(i)` is the vertex `W_i^⊥`.
    pub fn perp_index(&self, i: usize) -> usize {
        self.perp_table()[i] as usize
    }

    pub(crate) fn perp_table(&self) -> &[u32] {
        self.perp.get_or_init(|| self.vertices.iter().map(|w| self.index[&w.perp(&self.field)]).collect())
    }

    /// Checks that `image` is a bijection preserving adjacency and
    /// non-adjacency. A bijection that maps every edge to an edge also maps
    /// non-edges to non-edges, so only edges are scanned.
    pub fn check_automorphism(&self, image: &[u32]) -> Result<(), Violation> {
        let count = self.vertex_count();
        if image.len() != count {
            return Err(Violation::Length { expected: count, found: image.len() });
        }
        let mut seen = vec![false; count];
        for (v, &w) in image.iter().enumerate() {
            let w = w as usize;
            if w >= count || seen[w] {
                return Err(Violation::NotBijective { vertex: v, image: w });
            }
            seen[w] = true;
        }
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list.iter().filter(|&&v| (v as usize) > u) {
                if !self.is_adjacent(image[u] as usize, image[v as usize] as usize) {
                    return Err(Violation::Edge { u, v: v as usize, adjacent: true });
                }
            }
        }
        Ok(())
    }

    pub fn is_automorphism(&self, image: &[u32]) -> bool {
        self.check_automorphism(image).is_ok()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants { diameter: self.diameter(), girth: self.girth(), clique_number: self.clique_number() }
    }

    fn bfs(&self, root: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                let v = v as usize;
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    /// Largest distance between two vertices; infinite if disconnected.
    pub fn diameter(&self) -> Length {
        let count = self.vertex_count();
        let mut dist = vec![0; count];
        let mut queue = VecDeque::new();
        let mut best = 0;
        for root in 0..count {
            self.bfs(root, &mut dist, &mut queue);
            match dist.iter().max() {
                Some(&usize::MAX) => return Length::Infinite,
                Some(&d) => best = best.max(d),
                None => {}
            }
        }
        Length::Finite(best)
    }

    /// Shortest cycle length, by BFS from every vertex: each non-tree edge
    /// `(u, v)` closes a walk of length `d(u) + d(v) + 1`, and the minimum
    /// over all roots is exact.
    pub fn girth(&self) -> Length {
        let count = self.vertex_count();
        let mut dist = vec![usize::MAX; count];
        let mut parent = vec![usize::MAX; count];
        let mut queue = VecDeque::new();
        let mut best = usize::MAX;
        for root in 0..count {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &v in &self.adjacency[u] {
                    let v = v as usize;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Length::Infinite
        } else {
            Length::Finite(best)
        }
    }

    /// Size of a largest clique. Cliques are exactly chains of nested
    /// subspaces, so this is the longest chain, found by dynamic programming
    /// in increasing dimension.
    pub fn clique_number(&self) -> usize {
        let mut chain = vec![1usize; self.vertex_count()];
        // vertices are sorted by dimension
        for v in 0..self.vertex_count() {
            let dv = self.dim(v);
            for &u in &self.adjacency[v] {
                let u = u as usize;
                if self.dim(u) < dv {
                    chain[v] = chain[v].max(chain[u] + 1);
                }
            }
        }
        chain.into_iter().max().unwrap_or(0)
    }

    /// Colors each vertex by its dimension, a proper `(n-1)`-coloring.
    pub fn dimension_coloring(&self) -> Vec<usize> {
        self.vertices.iter().map(Subspace::dim).collect()
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.vertex_count()
            && self.adjacency.iter().enumerate().all(|(u, list)| list.iter().all(|&v| colors[u] != colors[v as usize]))
    }
}

/// The Gaussian binomial `[n k]_q`, via `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> Result<u128> {
    if k > n {
        return Err(Error::OutOfRange { k, lo: 0, hi: n });
    }
    let overflow = || Error::Overflow("gaussian binomial");
    // row[j] holds [i j]_q for the current i
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let qj = (q as u128).checked_pow(j as u32).ok_or_else(overflow)?;
            row[j] = qj.checked_mul(row[j]).and_then(|t| t.checked_add(row[j - 1])).ok_or_else(overflow)?;
        }
    }
    Ok(row[k])
}

/// Degree of a `k`-dimensional vertex of the inclusion graph of `F_q^n`:
/// `sum_{i=1}^{k-1} [k i]_q + sum_{i=1}^{n-k-1} [n-k i]_q`.
pub fn expected_degree(n: usize, k: usize, q: u64) -> Result<u128> {
    if k < 1 || k + 1 > n {
        return Err(Error::OutOfRange { k, lo: 1, hi: n.saturating_sub(1) });
    }
    let mut total = 0u128;
    for i in 1..k {
        total = total.checked_add(gaussian_binomial(k, i, q)?).ok_or(Error::Overflow("degree"))?;
    }
    for i in 1..n - k {
        total = total.checked_add(gaussian_binomial(n - k, i, q)?).ok_or(Error::Overflow("degree"))?;
    }
    Ok(total)
}
