use std::collections::VecDeque;

use ingraph::field::Field;
use ingraph::graph::{expected_degree, gaussian_binomial, InclusionGraph, Length};

fn graph(q: &str, n: usize) -> InclusionGraph {
    InclusionGraph::build(&q.parse::<Field>().unwrap(), n).unwrap()
}

const CASES: [(&str, usize); 5] = [("2^1", 3), ("3^1", 3), ("2^1", 4), ("3^1", 4), ("2^1", 5)];

/// Girth by deleting each edge in turn and finding the shortest path between
/// its endpoints.
fn girth_by_edge_deletion(g: &InclusionGraph) -> Length {
    let count = g.vertex_count();
    let mut best = usize::MAX;
    for u in 0..count {
        for &v in g.neighbors(u) {
            let v = v as usize;
            if v < u {
                continue;
            }
            let mut dist = vec![usize::MAX; count];
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    let y = y as usize;
                    if (x == u && y == v) || (x == v && y == u) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                best = best.min(dist[v] + 1);
            }
        }
    }
    if best == usize::MAX {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

/// Maximum clique by plain Bron-Kerbosch, ignoring the chain structure.
fn max_clique(g: &InclusionGraph) -> usize {
    fn bk(g: &InclusionGraph, r: usize, p: Vec<usize>, mut x: Vec<usize>, best: &mut usize) {
        if p.is_empty() && x.is_empty() {
            *best = (*best).max(r);
            return;
        }
        let mut p = p;
        while let Some(v) = p.pop() {
            let np: Vec<usize> = p.iter().copied().filter(|&w| g.is_adjacent(v, w)).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&w| g.is_adjacent(v, w)).collect();
            bk(g, r + 1, np, nx, best);
            x.push(v);
        }
    }
    let mut best = 0;
    bk(g, 0, (0..g.vertex_count()).collect(), Vec::new(), &mut best);
    best
}

#[test]
fn degrees_match_formula() {
    for (q, n) in CASES {
        let g = graph(q, n);
        let qv = g.field().order() as u64;
        let total: u128 = (1..n).map(|k| gaussian_binomial(n, k, qv).unwrap()).sum();
        assert_eq!(g.vertex_count() as u128, total);
        for v in 0..g.vertex_count() {
            assert_eq!(g.degree(v) as u128, expected_degree(n, g.dim(v), qv).unwrap(), "{q} n={n} v={v}");
        }
    }
}

#[test]
fn degree_symmetry_and_monotonicity() {
    for n in 3..=7 {
        for q in [2u64, 3, 4, 5, 7] {
            for k in 1..n {
                assert_eq!(expected_degree(n, k, q).unwrap(), expected_degree(n, n - k, q).unwrap());
            }
            for k in 2..=n / 2 {
                assert!(expected_degree(n, k, q).unwrap() < expected_degree(n, k - 1, q).unwrap());
            }
        }
    }
    for (q, n) in CASES {
        let g = graph(q, n);
        let mut by_dim = vec![Vec::new(); n];
        for v in 0..g.vertex_count() {
            by_dim[g.dim(v)].push(g.degree(v));
        }
        for k in 1..n {
            let (mut a, mut b) = (by_dim[k].clone(), by_dim[n - k].clone());
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn adjacency_is_proper_inclusion() {
    for (q, n) in [("2^1", 3), ("3^1", 3), ("2^1", 4)] {
        let g = graph(q, n);
        let f = g.field();
        for a in 0..g.vertex_count() {
            assert!(!g.is_adjacent(a, a));
            for b in 0..g.vertex_count() {
                let (wa, wb) = (g.vertex(a), g.vertex(b));
                let expected = wa.is_proper_subset(f, wb) || wb.is_proper_subset(f, wa);
                assert_eq!(g.is_adjacent(a, b), expected);
                assert_eq!(g.is_adjacent(a, b), g.is_adjacent(b, a));
                if g.dim(a) == g.dim(b) {
                    assert!(!g.is_adjacent(a, b));
                }
            }
        }
    }
}

#[test]
fn structural_invariants() {
    for (q, n) in CASES {
        let g = graph(q, n);
        let inv = g.invariants();
        assert_eq!(inv.diameter, Length::Finite(3));
        assert_eq!(inv.clique_number, n - 1);
        assert!(matches!(inv.girth, Length::Finite(3) | Length::Finite(6) | Length::Infinite));
        let expected_girth = if n == 3 { 6 } else { 3 };
        assert_eq!(inv.girth, Length::Finite(expected_girth));
        assert_eq!(girth_by_edge_deletion(&g), inv.girth);
        assert!(g.is_proper_coloring(&g.dimension_coloring()));
    }
    let g = graph("2^1", 2);
    assert_eq!(girth_by_edge_deletion(&g), Length::Infinite);
    assert_eq!(g.girth(), Length::Infinite);
}

#[test]
fn chain_clique_matches_generic_clique_search() {
    for (q, n) in [("2^1", 2), ("2^1", 3), ("3^1", 3), ("2^2", 3), ("2^1", 4)] {
        let g = graph(q, n);
        assert_eq!(g.clique_number(), max_clique(&g), "{q} n={n}");
    }
}
