//! Standard automorphisms of the inclusion graph and their factorization.
//!
//! Three families of vertex maps preserve proper inclusion:
//!
//! * `tau`: `W -> W^⊥` under the dot product, which reverses inclusion;
//! * `theta_X`: `W -> XW` for an invertible matrix `X`;
//! * `chi_t`: apply the field automorphism `a -> a^(p^t)` to every coordinate.
//!
//! For `n >= 3` every automorphism is `tau^delta ∘ theta_X ∘ chi_t` for a
//! unique `delta`, a unique `t` and `X` unique up to a nonzero scalar. All
//! compositions here act right to left: `chi_t` first, then `theta_X`, then
//! `tau`.

mod decompose;

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::InclusionGraph;
use crate::linalg::Matrix;

pub use decompose::{decompose, decompose_with, DecomposeOptions, Decomposition, DecompositionTrace};

/// A vertex map given by its image array: vertex `i` goes to `image[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(len: usize) -> Permutation {
        Permutation { image: (0..len as u32).collect() }
    }

    /// Fails unless `image` is a bijection of `0..len`.
    pub fn from_images(image: Vec<u32>) -> Result<Permutation> {
        let mut seen = vec![false; image.len()];
        for &w in &image {
            let w = w as usize;
            if w >= image.len() || seen[w] {
                return Err(Error::Parse(format!("vertex {w} is out of range or repeated")));
            }
            seen[w] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.image
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different lengths");
        Permutation { image: other.image.iter().map(|&i| self.image[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &w) in self.image.iter().enumerate() {
            inv[w as usize] = i as u32;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &w)| i as u32 == w)
    }
}

/// `tau^delta ∘ theta_X ∘ chi_t` with `X` scaled so that its first nonzero
/// entry in row-major order is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardAutomorphism {
    delta: bool,
    matrix: Matrix,
    frobenius: u32,
}

impl StandardAutomorphism {
    pub fn new(field: &Field, delta: bool, matrix: Matrix, frobenius: u32) -> Result<StandardAutomorphism> {
        field.frobenius_inverse(frobenius)?;
        if !matrix.is_square() {
            return Err(Error::Dimension { expected: matrix.rows(), found: matrix.cols() });
        }
        if !matrix.is_invertible(field) {
            return Err(Error::Singular);
        }
        let matrix = matrix.normalize_projective(field)?;
        Ok(StandardAutomorphism { delta, matrix, frobenius })
    }

    pub fn identity(n: usize) -> StandardAutomorphism {
        StandardAutomorphism { delta: false, matrix: Matrix::identity(n), frobenius: 0 }
    }

    /// Uniform `delta` and `t`, and a uniformly random invertible `X` by
    /// rejection sampling.
    pub fn random<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> StandardAutomorphism {
        let delta = rng.gen_bool(0.5);
        let frobenius = rng.gen_range(0..field.degree());
        let q = field.order();
        let matrix = loop {
            let values: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..q)).collect();
            let x = Matrix::from_values(field, n, n, &values).expect("values are in range");
            if x.is_invertible(field) {
                break x;
            }
        };
        StandardAutomorphism::new(field, delta, matrix, frobenius).expect("sampled matrix is invertible")
    }

    pub fn delta(&self) -> bool {
        self.delta
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.rows()
    }
}

impl fmt::Display for StandardAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta={} t={} X=[{}]", self.delta as u8, self.frobenius, self.matrix)
    }
}

/// `W -> W^⊥`.
pub fn tau_perm(g: &InclusionGraph) -> Permutation {
    Permutation { image: g.perp_table().to_vec() }
}

/// `W -> XW`.
pub fn theta_perm(g: &InclusionGraph, x: &Matrix) -> Result<Permutation> {
    let n = g.ambient_dim();
    if x.shape() != (n, n) {
        return Err(Error::Dimension { expected: n, found: x.rows() });
    }
    if !x.is_invertible(g.field()) {
        return Err(Error::Singular);
    }
    map_vertices(g, |w| w.image(g.field(), x))
}

/// `W -> chi_t(W)`, coordinates raised to the power `p^t`.
pub fn chi_perm(g: &InclusionGraph, t: u32) -> Result<Permutation> {
    g.field().frobenius_inverse(t)?;
    map_vertices(g, |w| w.frobenius(g.field(), t))
}

/// The vertex permutation of `s`, acting right to left.
pub fn std_to_perm(g: &InclusionGraph, s: &StandardAutomorphism) -> Result<Permutation> {
    let n = g.ambient_dim();
    if s.ambient_dim() != n {
        return Err(Error::Dimension { expected: n, found: s.ambient_dim() });
    }
    let field = g.field();
    let linear = map_vertices(g, |w| w.frobenius(field, s.frobenius)?.image(field, &s.matrix))?;
    Ok(if s.delta { tau_perm(g).compose(&linear) } else { linear })
}

fn map_vertices(
    g: &InclusionGraph,
    mut f: impl FnMut(&crate::subspace::Subspace) -> Result<crate::subspace::Subspace>,
) -> Result<Permutation> {
    let image = g.vertices().iter().map(|w| Ok(g.expect_index(&f(w)?)? as u32)).collect::<Result<Vec<_>>>()?;
    Ok(Permutation { image })
}

/// `|PGL_n(F_q)| = prod_{i<n} (q^n - q^i) / (q - 1)`.
pub fn pgl_order(n: usize, q: u64) -> BigUint {
    let qn = BigUint::from(q).pow(n as u32);
    let gl = (0..n).fold(BigUint::from(1u32), |acc, i| acc * (&qn - BigUint::from(q).pow(i as u32)));
    gl / BigUint::from(q - 1)
}

/// Order of the automorphism group of the inclusion graph of `F_{p^m}^n`:
/// `2 |PGL_n(F_q)| m` for `n >= 3`, and `(q + 1)!` for `n = 2`, where the
/// graph is `q + 1` isolated vertices.
pub fn aut_order(n: usize, p: u64, m: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::AmbientDimension { n, min: 2 });
    }
    let q = p.checked_pow(m).ok_or(Error::Overflow("field order"))?;
    if n == 2 {
        return Ok((1..=q + 1).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i)));
    }
    Ok(BigUint::from(2u32) * pgl_order(n, q) * BigUint::from(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Elem;
    use crate::subspace::Subspace;

    fn graph(q: &str, n: usize) -> InclusionGraph {
        InclusionGraph::build(&q.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(aut_order(3, 2, 1).unwrap(), BigUint::from(336u32));
        assert_eq!(aut_order(4, 2, 1).unwrap(), BigUint::from(40320u32));
        assert_eq!(aut_order(2, 2, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(aut_order(3, 3, 1).unwrap(), BigUint::from(11232u32));
        assert_eq!(aut_order(3, 2, 2).unwrap(), BigUint::from(241920u32));
        assert!(aut_order(1, 2, 1).is_err());
    }

    #[test]
    fn tau_examples() {
        let g = graph("2^1", 3);
        let tau = tau_perm(&g);
        for v in 0..g.vertex_count() {
            assert_eq!(g.dim(tau.apply(v)), 3 - g.dim(v));
        }
        let g4 = graph("2^1", 4);
        let tau4 = tau_perm(&g4);
        assert!(tau4.compose(&tau4).is_identity());
        assert!(g4.is_automorphism(tau4.as_slice()));
    }

    #[test]
    fn theta_examples() {
        let g = graph("3^1", 3);
        assert!(theta_perm(&g, &Matrix::identity(3)).unwrap().is_identity());
        assert!(theta_perm(&g, &Matrix::scalar(3, Elem(2))).unwrap().is_identity());
        assert_eq!(theta_perm(&g, &Matrix::zeros(3, 3)), Err(Error::Singular));
        assert!(matches!(theta_perm(&g, &Matrix::identity(2)), Err(Error::Dimension { .. })));

        let g2 = graph("2^1", 3);
        let f2 = g2.field().clone();
        let swap = theta_perm(&g2, &Matrix::transposition(3, 0, 1)).unwrap();
        let e1 = g2.index_of(&Subspace::axis(3, 0)).unwrap();
        let e2 = g2.index_of(&Subspace::axis(3, 1)).unwrap();
        let e12 = g2.index_of(&Subspace::axis(3, 0).join(&f2, &Subspace::axis(3, 1)).unwrap()).unwrap();
        assert_eq!(swap.apply(e1), e2);
        assert_eq!(swap.apply(e2), e1);
        assert_eq!(swap.apply(e12), e12);
    }

    #[test]
    fn chi_examples() {
        let g = graph("2^2", 3);
        let f4 = g.field().clone();
        assert!(chi_perm(&g, 0).unwrap().is_identity());
        assert!(chi_perm(&g, 2).is_err());
        let chi = chi_perm(&g, 1).unwrap();
        for v in 0..g.vertex_count() {
            let over_f2 = g.vertex(v).basis().data().iter().all(|e| e.value() < 2);
            if over_f2 {
                assert_eq!(chi.apply(v), v);
            }
        }
        let w = Subspace::span(&f4, 3, &[[Elem(1), Elem(2), Elem(0)]]).unwrap();
        let w2 = Subspace::span(&f4, 3, &[[Elem(1), Elem(3), Elem(0)]]).unwrap();
        assert_eq!(chi.apply(g.index_of(&w).unwrap()), g.index_of(&w2).unwrap());

        let prime = graph("3^1", 3);
        assert!(chi_perm(&prime, 0).unwrap().is_identity());
        assert!(chi_perm(&prime, 1).is_err());
    }

    #[test]
    fn std_to_perm_examples() {
        let g = graph("2^1", 3);
        let id = StandardAutomorphism::identity(3);
        assert!(std_to_perm(&g, &id).unwrap().is_identity());
        let f2 = g.field().clone();
        let tau_only = StandardAutomorphism::new(&f2, true, Matrix::identity(3), 0).unwrap();
        assert_eq!(std_to_perm(&g, &tau_only).unwrap(), tau_perm(&g));
        assert!(std_to_perm(&g, &StandardAutomorphism::identity(4)).is_err());
    }

    #[test]
    fn standard_constructor_validates() {
        let f4: Field = "2^2".parse().unwrap();
        assert_eq!(StandardAutomorphism::new(&f4, false, Matrix::zeros(3, 3), 0), Err(Error::Singular));
        assert!(StandardAutomorphism::new(&f4, false, Matrix::identity(3), 2).is_err());
        let s = StandardAutomorphism::new(&f4, false, Matrix::scalar(3, Elem(3)), 1).unwrap();
        assert_eq!(s.matrix(), &Matrix::identity(3));
    }

    #[test]
    fn permutation_algebra() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // (a ∘ b)(1) = a(2) = 0
        assert_eq!(a.compose(&b).apply(1), 0);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
