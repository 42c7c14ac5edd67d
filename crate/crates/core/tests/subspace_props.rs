use std::collections::HashSet;

use ingraph::field::{Elem, Field};
use ingraph::graph::gaussian_binomial;
use ingraph::subspace::{enumerate_subspaces, standard_rep, Subspace};
use num_bigint::BigUint;
use proptest::prelude::*;

/// `[n k]_q` straight from the product formula, in big integers.
fn gaussian_product(n: usize, k: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut num = one.clone();
    let mut den = one.clone();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - &one;
        den *= q.pow((k - i) as u32) - &one;
    }
    assert_eq!(&num % &den, BigUint::from(0u32));
    num / den
}

fn fields() -> Vec<Field> {
    ["2^1", "3^1", "2^2", "5^1"].iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn enumeration_counts_match_gaussian_binomials() {
    for f in fields() {
        let q = f.order() as u64;
        for n in 0..=5 {
            for k in 0..=n {
                let all = enumerate_subspaces(&f, n, k).unwrap();
                let expected = gaussian_product(n, k, q);
                assert_eq!(BigUint::from(all.len()), expected, "n={n} k={k} q={q}");
                assert_eq!(BigUint::from(gaussian_binomial(n, k, q).unwrap()), expected);
                // canonical and distinct
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
                for w in &all {
                    assert_eq!(w.dim(), k);
                    assert_eq!(&Subspace::row_space(&f, w.basis()), w);
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let f: Field = "3^1".parse().unwrap();
    assert_eq!(enumerate_subspaces(&f, 4, 2).unwrap(), enumerate_subspaces(&f, 4, 2).unwrap());
}

#[test]
fn perp_algebra_exhaustive_at_4_2() {
    let f: Field = "2^1".parse().unwrap();
    let n = 4;
    let all: Vec<Subspace> = (1..n).flat_map(|k| enumerate_subspaces(&f, n, k).unwrap()).collect();
    for w in &all {
        let p = w.perp(&f);
        assert_eq!(p.perp(&f), *w);
        assert_eq!(w.dim() + p.dim(), n);
        for v in w.basis().row_iter() {
            for u in p.basis().row_iter() {
                assert!(ingraph::linalg::dot(&f, v, u).is_zero());
            }
        }
    }
    for a in &all {
        for b in &all {
            assert_eq!(a.is_proper_subset(&f, b), b.perp(&f).is_proper_subset(&f, &a.perp(&f)));
        }
    }
}

#[test]
fn dimension_formula_over_other_fields() {
    for f in fields() {
        for k in 0..=4 {
            for w in enumerate_subspaces(&f, 4, k).unwrap() {
                assert_eq!(w.dim() + w.perp(&f).dim(), 4);
            }
        }
    }
}

#[test]
fn image_and_frobenius_preserve_inclusion() {
    let f: Field = "2^2".parse().unwrap();
    let x = ingraph::linalg::Matrix::parse(&f, "1 2 0; 0 1 3; 2 0 1").unwrap();
    let lines = enumerate_subspaces(&f, 3, 1).unwrap();
    let planes = enumerate_subspaces(&f, 3, 2).unwrap();
    for l in &lines {
        for p in &planes {
            let inside = l.is_proper_subset(&f, p);
            assert_eq!(inside, l.image(&f, &x).unwrap().is_proper_subset(&f, &p.image(&f, &x).unwrap()));
            assert_eq!(inside, l.frobenius(&f, 1).unwrap().is_proper_subset(&f, &p.frobenius(&f, 1).unwrap()));
        }
    }
}

fn vec_strategy(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..9, n)
}

proptest! {
    #[test]
    fn span_is_order_and_scale_invariant(rows in prop::collection::vec(vec_strategy(4), 1..4), c in 1u32..9) {
        let f: Field = "3^2".parse().unwrap();
        let vecs: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&v| f.element(v).unwrap()).collect()).collect();
        if vecs.iter().all(|v| v.iter().all(|e| e.is_zero())) {
            prop_assert!(Subspace::span(&f, 4, &vecs).is_err());
            return Ok(());
        }
        let c = f.element(c).unwrap();
        let a = Subspace::span(&f, 4, &vecs).unwrap();
        let mut rev: Vec<Vec<Elem>> = vecs.iter().rev().map(|v| v.iter().map(|&e| f.mul(c, e)).collect()).collect();
        rev.push(vec![Elem::ZERO; 4]);
        prop_assert_eq!(Subspace::span(&f, 4, &rev).unwrap(), a.clone());
        for v in &vecs {
            prop_assert!(a.contains_vector(&f, v));
        }
    }

    #[test]
    fn standard_rep_ignores_scalars(v in vec_strategy(5), c in 1u32..9) {
        let f: Field = "3^2".parse().unwrap();
        let v: Vec<Elem> = v.iter().map(|&x| f.element(x).unwrap()).collect();
        let c = f.element(c).unwrap();
        let scaled: Vec<Elem> = v.iter().map(|&e| f.mul(c, e)).collect();
        match standard_rep(&f, &v) {
            Ok(rep) => {
                prop_assert_eq!(standard_rep(&f, &scaled).unwrap(), rep.clone());
                prop_assert_eq!(*rep.iter().find(|e| !e.is_zero()).unwrap(), Elem::ONE);
            }
            Err(_) => prop_assert!(v.iter().all(|e| e.is_zero())),
        }
    }
}
