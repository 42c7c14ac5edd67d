//! Exhaustive automorphism enumeration for small simple graphs.
//!
//! Standard individualization-refinement backtracking. A fixed "left" path
//! individualizes the first vertex of the first non-singleton cell at every
//! level; the "right" side tries every vertex of the matching cell. Both
//! colorings are refined together by neighbor-color multisets and a branch is
//! cut as soon as their color statistics differ. Every discrete leaf pair
//! gives a candidate bijection, which is kept if it preserves adjacency. Each
//! automorphism maps the left path onto exactly one right path, so each is
//! found exactly once.
//!
//! The initial coloring uses degrees only, so the result does not depend on
//! anything but the adjacency structure.

use std::ops::ControlFlow;

use crate::error::{Error, Result};

/// Result of [`enumerate_automorphisms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Number of automorphisms found, exact unless `truncated`.
    pub count: u64,
    /// The automorphisms found, in search order, as image arrays.
    pub automorphisms: Vec<Vec<u32>>,
    /// The search stopped at the limit.
    pub truncated: bool,
}

/// A validated simple undirected graph with an adjacency bit matrix.
pub struct SearchGraph<'a> {
    adjacency: &'a [Vec<u32>],
    bits: Vec<u64>,
    words: usize,
}

impl<'a> SearchGraph<'a> {
    /// Checks symmetry, absence of loops and of repeated neighbors.
    pub fn new(adjacency: &'a [Vec<u32>]) -> Result<SearchGraph<'a>> {
        let count = adjacency.len();
        let words = count.div_ceil(64).max(1);
        let mut bits = vec![0u64; count * words];
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                let v = v as usize;
                if v >= count {
                    return Err(Error::NotSimple(format!("vertex {u} lists missing neighbor {v}")));
                }
                if v == u {
                    return Err(Error::NotSimple(format!("loop at vertex {u}")));
                }
                let (w, b) = (u * words + v / 64, 1u64 << (v % 64));
                if bits[w] & b != 0 {
                    return Err(Error::NotSimple(format!("edge {u}-{v} listed twice")));
                }
                bits[w] |= b;
            }
        }
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                let v = v as usize;
                if bits[v * words + u / 64] >> (u % 64) & 1 == 0 {
                    return Err(Error::NotSimple(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        Ok(SearchGraph { adjacency, bits, words })
    }

    fn len(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn preserves_edges(&self, image: &[u32]) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| self.adjacent(image[u] as usize, image[v as usize] as usize)))
    }

    /// Calls `visit` with every automorphism in search order until it breaks.
    /// Returns the number visited.
    pub fn for_each_automorphism(&self, mut visit: impl FnMut(&[u32]) -> ControlFlow<()>) -> u64 {
        let count = self.len();
        if count == 0 {
            let _ = visit(&[]);
            return 1;
        }
        let degrees: Vec<u32> = self.adjacency.iter().map(|l| l.len() as u32).collect();
        let mut left = Coloring::from_keys(&degrees);
        let mut right = left.clone();
        let mut scratch = Scratch::new(count);
        // Both sides start identical, so refinement cannot fail here.
        self.refine_pair(&mut left, &mut right, &mut scratch);
        let mut found = 0u64;
        let _ = self.search(&left, &right, &mut scratch, &mut found, &mut visit);
        found
    }

    fn search(
        &self,
        left: &Coloring,
        right: &Coloring,
        scratch: &mut Scratch,
        found: &mut u64,
        visit: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if left.is_discrete() {
            let mut image = vec![0u32; self.len()];
            for (cell, &u) in left.order.iter().enumerate() {
                image[u as usize] = right.order[cell];
            }
            if self.preserves_edges(&image) {
                *found += 1;
                return visit(&image);
            }
            return ControlFlow::Continue(());
        }
        let (start, end) = left.first_nonsingleton_cell();
        let target = left.order[start];
        let mut candidates: Vec<u32> = right.order[start..end].to_vec();
        candidates.sort_unstable();
        let mut next_left = left.clone();
        next_left.individualize(target);
        for w in candidates {
            let mut l = next_left.clone();
            let mut r = right.clone();
            r.individualize(w);
            if self.refine_pair(&mut l, &mut r, scratch) {
                self.search(&l, &r, scratch, found, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Refines both colorings to equitable ones with the same rule. Returns
    /// false as soon as the two sides produce different signature multisets.
    fn refine_pair(&self, left: &mut Coloring, right: &mut Coloring, scratch: &mut Scratch) -> bool {
        loop {
            let cells = left.cell_count();
            let sig_left = self.signatures(left, &mut scratch.left);
            let sig_right = self.signatures(right, &mut scratch.right);
            if sig_left.sorted != sig_right.sorted {
                return false;
            }
            left.recolor(&scratch.left);
            right.recolor(&scratch.right);
            if left.cell_count() == cells {
                return true;
            }
        }
    }

    /// Per-vertex signature `(color, sorted neighbor colors)`, ranked.
    fn signatures<'s>(&self, coloring: &Coloring, buf: &'s mut SigBuffer) -> SigSummary<'s> {
        buf.offsets.clear();
        buf.flat.clear();
        for (u, list) in self.adjacency.iter().enumerate() {
            buf.offsets.push(buf.flat.len());
            buf.flat.push(coloring.color[u]);
            let from = buf.flat.len();
            buf.flat.extend(list.iter().map(|&v| coloring.color[v as usize]));
            buf.flat[from..].sort_unstable();
        }
        buf.offsets.push(buf.flat.len());
        let sig = |u: usize| &buf.flat[buf.offsets[u]..buf.offsets[u + 1]];
        buf.order.clear();
        buf.order.extend(0..self.len() as u32);
        buf.order.sort_by(|&a, &b| sig(a as usize).cmp(sig(b as usize)));
        // Rank distinct signatures in sorted order.
        buf.rank.clear();
        buf.rank.resize(self.len(), 0);
        buf.sorted.clear();
        let mut current = 0u32;
        for (pos, &u) in buf.order.iter().enumerate() {
            if pos > 0 && sig(u as usize) != sig(buf.order[pos - 1] as usize) {
                current += 1;
            }
            buf.rank[u as usize] = current;
            buf.sorted.extend_from_slice(sig(u as usize));
            buf.sorted.push(u32::MAX);
        }
        SigSummary { sorted: &buf.sorted }
    }
}

struct SigSummary<'s> {
    sorted: &'s [u32],
}

#[derive(Default)]
struct SigBuffer {
    offsets: Vec<usize>,
    flat: Vec<u32>,
    order: Vec<u32>,
    rank: Vec<u32>,
    sorted: Vec<u32>,
}

struct Scratch {
    left: SigBuffer,
    right: SigBuffer,
}

impl Scratch {
    fn new(_count: usize) -> Scratch {
        Scratch { left: SigBuffer::default(), right: SigBuffer::default() }
    }
}

/// Vertex colors `0..cells` plus the vertices listed by color.
#[derive(Clone, Debug)]
struct Coloring {
    color: Vec<u32>,
    order: Vec<u32>,
    cells: usize,
}

impl Coloring {
    fn from_keys(keys: &[u32]) -> Coloring {
        let mut distinct = keys.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let color = keys.iter().map(|k| distinct.binary_search(k).unwrap() as u32).collect();
        let mut c = Coloring { color, order: Vec::new(), cells: distinct.len() };
        c.rebuild_order();
        c
    }

    fn rebuild_order(&mut self) {
        self.order = (0..self.color.len() as u32).collect();
        let color = &self.color;
        self.order.sort_by_key(|&u| (color[u as usize], u));
    }

    fn cell_count(&self) -> usize {
        self.cells
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.color.len()
    }

    fn recolor(&mut self, buf: &SigBuffer) {
        self.color.copy_from_slice(&buf.rank);
        self.cells = buf.rank.iter().max().map_or(0, |&m| m as usize + 1);
        self.rebuild_order();
    }

    /// Range in `order` of the first cell with more than one vertex.
    fn first_nonsingleton_cell(&self) -> (usize, usize) {
        let mut start = 0;
        while start < self.order.len() {
            let c = self.color[self.order[start] as usize];
            let mut end = start + 1;
            while end < self.order.len() && self.color[self.order[end] as usize] == c {
                end += 1;
            }
            if end - start > 1 {
                return (start, end);
            }
            start = end;
        }
        unreachable!("coloring is not discrete")
    }

    /// Gives `v` a fresh color of its own.
    fn individualize(&mut self, v: u32) {
        self.color[v as usize] = self.cells as u32;
        self.cells += 1;
        self.rebuild_order();
    }
}

/// Enumerates all automorphisms of a simple graph given by neighbor lists,
/// stopping after `limit` of them if set.
pub fn enumerate_automorphisms(adjacency: &[Vec<u32>], limit: Option<u64>) -> Result<Enumeration> {
    let graph = SearchGraph::new(adjacency)?;
    let mut automorphisms = Vec::new();
    let mut truncated = false;
    let count = graph.for_each_automorphism(|image| {
        if limit.is_some_and(|l| automorphisms.len() as u64 >= l) {
            truncated = true;
            return ControlFlow::Break(());
        }
        automorphisms.push(image.to_vec());
        ControlFlow::Continue(())
    });
    let count = if truncated { automorphisms.len() as u64 } else { count };
    Ok(Enumeration { count, automorphisms, truncated })
}

/// Counts automorphisms without storing them.
pub fn count_automorphisms(adjacency: &[Vec<u32>]) -> Result<u64> {
    Ok(SearchGraph::new(adjacency)?.for_each_automorphism(|_| ControlFlow::Continue(())))
}
