//! Arithmetic in the finite field `F_q`, `q = p^m`.
//!
//! Elements are encoded as integers in `[0, q)`: the polynomial
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` (coefficients in `F_p`) is stored as
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Multiplication reduces modulo a monic
//! irreducible polynomial of degree `m`, by default the lexicographically
//! smallest one when the coefficient sequence `(c_0, ..., c_m)` is compared
//! low degree first.
//!
//! ```
//! use ingraph::field::Field;
//!
//! let f4: Field = "2^2".parse().unwrap();
//! assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2 + x + 1
//! let x = f4.element(2).unwrap();
//! assert_eq!(f4.mul(x, x).value(), 3); // x^2 = x + 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest field order accepted. Irreducibility is checked exhaustively and
/// log tables are dense, so this is a desk-scale library.
pub const MAX_ORDER: u64 = 1 << 20;

/// Fields up to this order get a dense addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// An element of some [`Field`], in its base-`p` integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field `F_{p^m}` with a fixed modulus and precomputed tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    custom_modulus: bool,
    generator: Elem,
    // exp has length 2(q-1) so that log a + log b never needs reducing.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("p", &self.p).field("m", &self.m).field("modulus", &self.modulus).finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// `F_{p^m}` with the default modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        check_order(p, m)?;
        let modulus = default_modulus(p, m);
        Field::build(p, m, modulus, false)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    /// `F_{p^m}` where `m = modulus.len() - 1` and `modulus` lists the
    /// coefficients `c_0, ..., c_m` of a monic irreducible polynomial.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::BadModulus(modulus.to_vec()));
        }
        let m = (modulus.len() - 1) as u32;
        check_order(p, m)?;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 || !poly::is_irreducible(modulus, p) {
            return Err(Error::BadModulus(modulus.to_vec()));
        }
        let custom = modulus != default_modulus(p, m).as_slice();
        Field::build(p, m, modulus.to_vec(), custom)
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>, custom_modulus: bool) -> Result<Field> {
        let q = p.pow(m);
        let order = (q - 1) as usize;

        // Find a primitive element by walking powers with polynomial arithmetic.
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut generator = None;
        'candidates: for g in 1..q {
            let mut x = 1u32;
            for (i, slot) in exp[..order].iter_mut().enumerate() {
                if i > 0 && x == 1 {
                    continue 'candidates;
                }
                *slot = x;
                x = poly::mul_mod(x, g, &modulus, p);
            }
            generator = Some(Elem(g));
            break;
        }
        let generator = generator.ok_or_else(|| Error::BadModulus(modulus.clone()))?;
        for i in 0..order {
            exp[i + order] = exp[i];
            log[exp[i] as usize] = i as u32;
        }

        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = poly::digits(a, p, m).iter().map(|&c| (p - c) % p).collect();
                poly::from_digits(&d, p)
            })
            .collect();

        let mut field = Field { p, m, q, modulus, custom_modulus, generator, exp, log, neg, add: None };
        if q <= ADD_TABLE_LIMIT {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add = Some(table);
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A multiplicative generator of `F_q^*`.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// Validates an encoded value.
    pub fn element(&self, value: u32) -> Result<Elem> {
        if value < self.q {
            Ok(Elem(value))
        } else {
            Err(Error::ForeignElement { value, q: self.q })
        }
    }

    /// Every element in increasing encoded value.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(Elem)
    }

    /// Embeds an integer of the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        match &self.add {
            Some(table) => Elem(table[(a.0 * self.q + b.0) as usize]),
            None => Elem(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.q - 1;
        Ok(Elem(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        Elem(self.exp[l as usize])
    }

    /// `a^(p^t)`, the `t`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: Elem, t: u32) -> Result<Elem> {
        if t >= self.m {
            return Err(Error::FrobeniusExponent { t, m: self.m });
        }
        Ok(self.frob(a, t))
    }

    /// Exponent of the inverse Frobenius power.
    pub fn frobenius_inverse(&self, t: u32) -> Result<u32> {
        if t >= self.m {
            return Err(Error::FrobeniusExponent { t, m: self.m });
        }
        Ok((self.m - t) % self.m)
    }

    #[inline]
    pub(crate) fn frob(&self, a: Elem, t: u32) -> Elem {
        if t == 0 {
            a
        } else {
            self.pow(a, (self.p as u64).pow(t))
        }
    }

    /// Range-checked addition, for values whose provenance is unknown.
    pub fn checked_add(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.element(a.0)?;
        self.element(b.0)?;
        Ok(self.add(a, b))
    }

    /// Range-checked multiplication.
    pub fn checked_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.element(a.0)?;
        self.element(b.0)?;
        Ok(self.mul(a, b))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.m)?;
        if self.custom_modulus {
            let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
            write!(f, ":{}", coeffs.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses `"p^m"` or `"p^m:c0,c1,...,cm"`.
    fn from_str(s: &str) -> Result<Field> {
        let bad = |reason: &str| Error::FieldSpec { spec: s.to_string(), reason: reason.to_string() };
        let (order, modulus) = match s.split_once(':') {
            Some((o, m)) => (o.trim(), Some(m.trim())),
            None => (s.trim(), None),
        };
        let (p, m) = match order.split_once('^') {
            Some((p, m)) => (p.trim(), m.trim()),
            None => (order, "1"),
        };
        let p: u64 = p.parse().map_err(|_| bad("characteristic is not an integer"))?;
        let m: u32 = m.parse().map_err(|_| bad("degree is not an integer"))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(bad("degree must be at least 1"));
        }
        let p = u32::try_from(p).map_err(|_| bad("characteristic too large"))?;
        match modulus {
            None => Field::new(p, m),
            Some(list) => {
                let coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("modulus coefficients must be integers"))?;
                if coeffs.len() != m as usize + 1 {
                    return Err(bad("modulus must list m + 1 coefficients"));
                }
                Field::with_modulus(p, &coeffs)
            }
        }
    }
}

fn check_order(p: u32, m: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::FieldSpec { spec: format!("{p}^0"), reason: "degree must be at least 1".into() });
    }
    match (p as u64).checked_pow(m) {
        Some(q) if q <= MAX_ORDER => Ok(()),
        _ => Err(Error::FieldSpec { spec: format!("{p}^{m}"), reason: format!("order exceeds {MAX_ORDER}") }),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `m`
/// over `F_p`, comparing `(c_0, c_1, ..., c_m)` from `c_0`.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m);
    for idx in 0..count {
        // c_0 is the most significant digit of idx.
        let mut coeffs = vec![0u32; m as usize + 1];
        let mut rest = idx;
        for i in (0..m as usize).rev() {
            coeffs[i] = rest % p;
            rest /= p;
        }
        coeffs[m as usize] = 1;
        if poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Dense polynomial helpers over `F_p` on the base-`p` encoding.
mod poly {
    pub(super) fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
        let mut out = vec![0; m as usize];
        for d in out.iter_mut() {
            *d = a % p;
            a /= p;
        }
        out
    }

    pub(super) fn from_digits(d: &[u32], p: u32) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// Remainder of `a` modulo the monic `modulus`, coefficients low first.
    fn rem(a: &mut Vec<u32>, modulus: &[u32], p: u32) {
        let deg = modulus.len() - 1;
        while a.len() > deg {
            let lead = a.pop().unwrap();
            if lead != 0 {
                let shift = a.len() - deg;
                for (i, &c) in modulus[..deg].iter().enumerate() {
                    let t = (p - lead) as u64 * c as u64 % p as u64;
                    a[shift + i] = ((a[shift + i] as u64 + t) % p as u64) as u32;
                }
            }
        }
    }

    pub(super) fn mul_mod(a: u32, b: u32, modulus: &[u32], p: u32) -> u32 {
        let m = (modulus.len() - 1) as u32;
        let (da, db) = (digits(a, p, m), digits(b, p, m));
        let mut prod = vec![0u32; 2 * m as usize];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        rem(&mut prod, modulus, p);
        prod.resize(m as usize, 0);
        from_digits(&prod, p)
    }

    /// Exhaustive check: no monic factor of degree `1..=m/2` divides.
    pub(super) fn is_irreducible(modulus: &[u32], p: u32) -> bool {
        let m = modulus.len() - 1;
        if m == 1 {
            return true;
        }
        for d in 1..=m / 2 {
            for idx in 0..p.pow(d as u32) {
                let mut divisor = digits(idx, p, d as u32);
                divisor.push(1);
                let mut r = modulus.to_vec();
                rem(&mut r, &divisor, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}
