//! Constructive factorization of an automorphism as `tau^delta ∘ theta_X ∘ chi_t`.
//!
//! The pipeline peels factors off `sigma` one at a time:
//!
//! 1. If `sigma` sends `[e_1]` to a hyperplane, set `delta = 1` and continue
//!    with `sigma1 = tau ∘ sigma`; otherwise `sigma1 = sigma`. Either way
//!    `sigma1` preserves dimension.
//! 2. For `k = 1..n` left-multiply a matrix `A_k` so that `theta_A ∘ sigma1`
//!    fixes `[e_1], ..., [e_k]`. Call the result `sigma2`.
//! 3. `sigma2` sends `[e_i + a e_j]` to `[e_i + f_ij(a) e_j]`. The ratio
//!    `f = f_12 / f_12(1)` is a field automorphism, identified as a Frobenius
//!    power `t`.
//! 4. With `D = diag(1, f_12(1)^-1, ..., f_1n(1)^-1)`,
//!    `sigma3 = chi_t^-1 ∘ theta_D ∘ sigma2` must fix every vertex, which is
//!    checked over the whole vertex set.
//!
//! Then `sigma = tau^delta ∘ theta_X ∘ chi_t` with `X = A^-1 D^-1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::graph::InclusionGraph;
use crate::linalg::Matrix;
use crate::subspace::Subspace;

use super::StandardAutomorphism;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Sample every `f_ij(a)` and check the product and additivity relations
    /// they must satisfy, instead of only the values the algorithm needs.
    pub full_table: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub delta: bool,
    /// The fixing matrices `A_1, ..., A_n` in the order applied.
    pub steps: Vec<Matrix>,
    /// `A = A_n ... A_1`.
    pub fixing: Matrix,
    /// Sampled `f_ij(a)`, keyed by 0-based `(i, j)` with `i < j`.
    pub f_table: BTreeMap<(usize, usize, Elem), Elem>,
    /// `f(a)` for every element `a`, indexed by encoded value.
    pub f_values: Vec<Elem>,
    pub diagonal: Matrix,
    pub frobenius: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub standard: StandardAutomorphism,
    pub trace: DecompositionTrace,
}

pub fn decompose(g: &InclusionGraph, sigma: &[u32]) -> Result<Decomposition> {
    decompose_with(g, sigma, DecomposeOptions::default())
}

pub fn decompose_with(g: &InclusionGraph, sigma: &[u32], options: DecomposeOptions) -> Result<Decomposition> {
    let n = g.ambient_dim();
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "automorphisms factor through the standard ones only for n >= 3 (got n = {n})"
        )));
    }
    g.check_automorphism(sigma).map_err(Error::NotAutomorphism)?;
    let field = g.field();
    let tau = g.perp_table();

    // Step 1: does [e_1] go to a point or a hyperplane?
    let e1 = g.expect_index(&Subspace::axis(n, 0))?;
    let delta = match g.dim(sigma[e1] as usize) {
        1 => false,
        d if d == n - 1 => true,
        d => return Err(Error::Integrity(format!("[e_1] maps to a vertex of dimension {d}, not 1 or {}", n - 1))),
    };
    let sigma1 = |v: usize| -> usize {
        let w = sigma[v] as usize;
        if delta {
            tau[w] as usize
        } else {
            w
        }
    };
    for v in 0..g.vertex_count() {
        if g.dim(sigma1(v)) != g.dim(v) {
            return Err(Error::Integrity(format!(
                "after removing tau, vertex {v} of dimension {} maps to dimension {}",
                g.dim(v),
                g.dim(sigma1(v))
            )));
        }
    }
    let image1 = |s: &Subspace| -> Result<&Subspace> { Ok(g.vertex(sigma1(g.expect_index(s)?))) };

    // Step 2: make [e_1], ..., [e_n] fixed points.
    let mut fixing = Matrix::identity(n);
    let mut steps = Vec::with_capacity(n);
    for k in 0..n {
        let current = image1(&Subspace::axis(n, k))?.image(field, &fixing)?;
        let alpha = current.basis().row(0).to_vec();
        let step = fixing_step(field, &alpha, k)?;
        fixing = step.mul(field, &fixing)?;
        steps.push(step);
    }
    let sigma2 = |s: &Subspace| -> Result<Subspace> { image1(s)?.image(field, &fixing) };
    for k in 0..n {
        let axis = Subspace::axis(n, k);
        if sigma2(&axis)? != axis {
            return Err(Error::Integrity(format!("fixing matrices do not fix [e_{}]", k + 1)));
        }
    }

    // Step 3: read f_ij off the lines [e_i + a e_j].
    let mut f_table = BTreeMap::new();
    let mut sample = |i: usize, j: usize, a: Elem| -> Result<Elem> {
        if let Some(&b) = f_table.get(&(i, j, a)) {
            return Ok(b);
        }
        let mut v = vec![Elem::ZERO; n];
        v[i] = Elem::ONE;
        v[j] = a;
        let line = Subspace::span(field, n, &[v])?;
        let image = sigma2(&line)?;
        // RREF of a line is its standard representative.
        let rep = image.basis().row(0);
        let pattern_ok = rep[i] == Elem::ONE
            && rep.iter().enumerate().all(|(c, e)| c == i || c == j || e.is_zero())
            && rep[j].is_zero() == a.is_zero();
        if !pattern_ok {
            return Err(Error::Integrity(format!(
                "[e_{} + {a} e_{}] maps to [{image}], breaking the zero pattern",
                i + 1,
                j + 1
            )));
        }
        f_table.insert((i, j, a), rep[j]);
        Ok(rep[j])
    };

    let f12_one = sample(0, 1, Elem::ONE)?;
    let f12_one_inv = field.inv(f12_one)?;
    let mut f_values = Vec::with_capacity(field.order() as usize);
    for a in field.elements() {
        f_values.push(field.mul(sample(0, 1, a)?, f12_one_inv));
    }

    let generator = field.generator();
    let frobenius = (0..field.degree())
        .find(|&t| field.frob(generator, t) == f_values[generator.value() as usize])
        .ok_or_else(|| Error::Integrity("recovered field map is not a Frobenius power".into()))?;
    if let Some(a) = field.elements().find(|&a| field.frob(a, frobenius) != f_values[a.value() as usize]) {
        return Err(Error::Integrity(format!("recovered field map disagrees with Frobenius power {frobenius} at {a}")));
    }

    // Step 4: diagonal correction.
    let mut diag = vec![Elem::ONE; n];
    for (j, d) in diag.iter_mut().enumerate().skip(1) {
        *d = field.inv(sample(0, j, Elem::ONE)?)?;
    }

    if options.full_table {
        for i in 0..n {
            for j in i + 1..n {
                for a in field.elements() {
                    sample(i, j, a)?;
                }
            }
        }
        check_table_relations(field, n, &f_table, &f_values)?;
    }

    let diagonal = Matrix::diagonal(&diag);
    let scaled = diagonal.mul(field, &fixing)?;
    let undo = field.frobenius_inverse(frobenius)?;
    for v in 0..g.vertex_count() {
        let back = g.vertex(sigma1(v)).image(field, &scaled)?.frobenius(field, undo)?;
        if &back != g.vertex(v) {
            return Err(Error::Integrity(format!("residual map moves vertex {v} [{}] to [{back}]", g.vertex(v))));
        }
    }

    let x = fixing.inverse(field)?.mul(field, &diagonal.inverse(field)?)?;
    let standard = StandardAutomorphism::new(field, delta, x, frobenius)?;
    Ok(Decomposition {
        standard,
        trace: DecompositionTrace { delta, steps, fixing, f_table, f_values, diagonal, frobenius },
    })
}

/// A matrix fixing `e_1, ..., e_k` (0-based `e_0..e_{k-1}`) and sending
/// `alpha` to a multiple of `e_k`.
///
/// With `a_k != 0` this is `I - a_k^-1 sum_{i != k} a_i E_ik`. Otherwise some
/// later `a_m` is nonzero and the matrix is
/// `(I - a_m^-1 sum_{i not in {k, m}} a_i E_ik) P_km`.
fn fixing_step(field: &Field, alpha: &[Elem], k: usize) -> Result<Matrix> {
    let n = alpha.len();
    let (pivot, swap) = if !alpha[k].is_zero() {
        (k, None)
    } else {
        let m = (k + 1..n)
            .find(|&m| !alpha[m].is_zero())
            .ok_or_else(|| Error::Integrity(format!("image of [e_{}] lies in the span of earlier axes", k + 1)))?;
        (m, Some(m))
    };
    let scale = field.neg(field.inv(alpha[pivot])?);
    let mut step = Matrix::identity(n);
    for i in (0..n).filter(|&i| i != k && i != pivot) {
        step[(i, k)] = field.mul(scale, alpha[i]);
    }
    match swap {
        None => Ok(step),
        Some(m) => step.mul(field, &Matrix::transposition(n, k, m)),
    }
}

/// Product and additivity relations of the full `f_ij` table:
/// `f_1j(ab) = f_1i(a) f_ij(b)` for `1 < i < j`, `f_ij(a) = f(a) f_ij(1)`, and
/// `f` additive and multiplicative.
fn check_table_relations(
    field: &Field,
    n: usize,
    table: &BTreeMap<(usize, usize, Elem), Elem>,
    f: &[Elem],
) -> Result<()> {
    let fail = |what: String| Err(Error::Integrity(what));
    let get = |i: usize, j: usize, a: Elem| table[&(i, j, a)];
    for i in 1..n {
        for j in i + 1..n {
            for a in field.elements() {
                for b in field.elements() {
                    if get(0, j, field.mul(a, b)) != field.mul(get(0, i, a), get(i, j, b)) {
                        return fail(format!("f_1{}({a}*{b}) != f_1{}({a}) f_{}{}({b})", j + 1, i + 1, i + 1, j + 1));
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let one = get(i, j, Elem::ONE);
            for a in field.elements() {
                if get(i, j, a) != field.mul(f[a.value() as usize], one) {
                    return fail(format!("f_{}{} is not a multiple of f at {a}", i + 1, j + 1));
                }
            }
        }
    }
    let at = |a: Elem| f[a.value() as usize];
    for a in field.elements() {
        for b in field.elements() {
            if at(field.add(a, b)) != field.add(at(a), at(b)) || at(field.mul(a, b)) != field.mul(at(a), at(b)) {
                return fail(format!("recovered field map is not a homomorphism at ({a}, {b})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{std_to_perm, tau_perm, theta_perm, Permutation};

    fn graph(q: &str, n: usize) -> InclusionGraph {
        InclusionGraph::build(&q.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn identity_and_tau() {
        let g = graph("2^1", 3);
        let id = Permutation::identity(g.vertex_count());
        let d = decompose(&g, id.as_slice()).unwrap();
        assert_eq!(d.standard, StandardAutomorphism::identity(3));
        let tau = tau_perm(&g);
        let d = decompose(&g, tau.as_slice()).unwrap();
        assert!(d.standard.delta());
        assert_eq!(d.standard.matrix(), &Matrix::identity(3));
        assert_eq!(d.standard.frobenius(), 0);
    }

    #[test]
    fn rejects_small_n_and_non_automorphisms() {
        let g2 = graph("2^1", 2);
        let id = Permutation::identity(3);
        assert!(matches!(decompose(&g2, id.as_slice()), Err(Error::Unsupported(_))));
        let g = graph("2^1", 3);
        let mut bad: Vec<u32> = (0..14).collect();
        bad.swap(0, 1);
        assert!(matches!(decompose(&g, &bad), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn swap_branch_of_fixing_step() {
        // theta_P with P = P_12 sends [e_1] to [e_2], so step 1 needs the swap.
        let g = graph("3^1", 3);
        let p = Matrix::transposition(3, 0, 1);
        let sigma = theta_perm(&g, &p).unwrap();
        let d = decompose(&g, sigma.as_slice()).unwrap();
        assert_eq!(d.standard.matrix(), &p);
        assert_eq!(std_to_perm(&g, &d.standard).unwrap(), sigma);
    }

    #[test]
    fn fixing_step_sends_alpha_to_axis() {
        let f5 = Field::prime(5).unwrap();
        for alpha in [[2u32, 3, 1, 4], [1, 0, 0, 3], [4, 0, 2, 0]] {
            let alpha: Vec<Elem> = alpha.iter().map(|&v| f5.element(v).unwrap()).collect();
            let step = fixing_step(&f5, &alpha, 1).unwrap();
            let out = step.apply(&f5, &alpha).unwrap();
            assert!(out.iter().enumerate().all(|(i, e)| (i == 1) != e.is_zero()));
            // e_0 is untouched
            let e0 = [Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO];
            assert_eq!(step.apply(&f5, &e0).unwrap(), e0.to_vec());
        }
        let inside: Vec<Elem> = [1u32, 0, 0, 0].iter().map(|&v| Elem(v)).collect();
        assert!(matches!(fixing_step(&f5, &inside, 1), Err(Error::Integrity(_))));
    }

    #[test]
    fn full_table_mode_on_field_automorphism() {
        let g = graph("2^2", 3);
        let field = g.field().clone();
        let x = Matrix::parse(&field, "1 2 0; 0 1 3; 2 0 1").unwrap();
        let s = StandardAutomorphism::new(&field, true, x, 1).unwrap();
        let sigma = std_to_perm(&g, &s).unwrap();
        let d = decompose_with(&g, sigma.as_slice(), DecomposeOptions { full_table: true }).unwrap();
        assert_eq!(d.standard, s);
        assert_eq!(d.trace.f_table.len(), 3 * 4);
        assert_eq!(d.trace.steps.len(), 3);
    }
}
