//! Arithmetic in finite fields `F_{p^e}`.
//!
//! Elements are reduced polynomial residues `c_0 + c_1 t + ... + c_{e-1} t^{e-1}`
//! modulo a monic irreducible polynomial, packed into a `u32` as the base-`p`
//! integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. For prime fields the packed
//! value is just the residue mod `p`. Extension fields precompute addition and
//! multiplication tables from the polynomial arithmetic.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A packed field element. Only meaningful together with its [`FiniteField`].
pub type Elem = u32;

/// Largest field order for which extension-field tables are built.
pub const MAX_EXTENSION_ORDER: u64 = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be a monic polynomial of degree {expected} given by {len} coefficients")]
    BadModulus { expected: usize, len: usize },
    #[error("modulus is reducible over F_{0}")]
    Reducible(u32),
    #[error("field of order {0} exceeds the supported size for extension fields")]
    TooLarge(u64),
    #[error("coefficient {value} is not a reduced residue modulo {p}")]
    Unreduced { value: i64, p: u32 },
    #[error("element needs {got} coefficients but the field has degree {e}")]
    WrongLength { got: usize, e: usize },
}

struct Tables {
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

struct Inner {
    p: u32,
    e: usize,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// The finite field `F_{p^e}`; cheap to clone.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}{:?}", self.inner.p, self.inner.e, self.inner.modulus)
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}", self.inner.q)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, lowest degree first, used only for the modulus.
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r = poly_trim(a.to_vec());
    let b = poly_trim(b.to_vec());
    let lead_inv = pow_mod(*b.last().expect("nonzero divisor") as u64, p64 - 2, p64);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = (*r.last().unwrap() as u64 * lead_inv) % p64;
        for (i, &bi) in b.iter().enumerate() {
            let sub = coef * bi as u64 % p64;
            r[shift + i] = ((r[shift + i] as u64 + p64 - sub) % p64) as u32;
        }
        r = poly_trim(r);
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Exhaustive factor search: a polynomial of degree `e` is irreducible iff no
/// monic polynomial of degree `1..=e/2` divides it.
fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    for deg in 1..=e / 2 {
        let count = (p as u64).pow(deg as u32);
        for packed in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut x = packed;
            for _ in 0..deg {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::with_modulus(p, vec![0, 1])
    }

    /// `F_{p^e}` with the first monic irreducible modulus in packed order.
    pub fn new(p: u32, e: usize) -> Result<Self, FieldError> {
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if e == 1 {
            return Self::prime(p);
        }
        let q = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if q > MAX_EXTENSION_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let lower = (p as u64).pow(e as u32);
        for packed in 0..lower {
            let mut f = Vec::with_capacity(e + 1);
            let mut x = packed;
            for _ in 0..e {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            if is_irreducible_mod_p(&f, p) {
                return Self::with_modulus(p, f);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// `F_p[t]/(modulus)`; `modulus` lists coefficients lowest degree first
    /// and must be monic and irreducible.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if modulus.len() < 2 {
            return Err(FieldError::ZeroDegree);
        }
        let e = modulus.len() - 1;
        if modulus[e] != 1 {
            return Err(FieldError::BadModulus { expected: e, len: modulus.len() });
        }
        if let Some(&bad) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::Unreduced { value: bad as i64, p });
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(FieldError::Reducible(p));
        }
        let q64 = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if e > 1 && q64 > MAX_EXTENSION_ORDER {
            return Err(FieldError::TooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = if e == 1 { vec![0, 1] } else { modulus };
        let tables = (e > 1).then(|| build_tables(p, e, q, &modulus));
        Ok(FiniteField { inner: Arc::new(Inner { p, e, q, modulus, tables }) })
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            None => {
                let s = a + b;
                if s >= self.inner.p {
                    s - self.inner.p
                } else {
                    s
                }
            }
            Some(t) => t.add[(a * self.inner.q + b) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.inner.tables {
            None => {
                if a == 0 {
                    0
                } else {
                    self.inner.p - a
                }
            }
            Some(t) => t.neg[a as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            None => ((a as u64 * b as u64) % self.inner.p as u64) as Elem,
            Some(t) => t.mul[(a * self.inner.q + b) as usize],
        }
    }

    /// `a + b*c`
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        match &self.inner.tables {
            None => ((a as u64 + b as u64 * c as u64) % self.inner.p as u64) as Elem,
            Some(_) => self.add(a, self.mul(b, c)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        Some(match &self.inner.tables {
            None => {
                let p = self.inner.p as u64;
                pow_mod(a as u64, p - 2, p) as Elem
            }
            Some(t) => t.inv[a as usize],
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.inner.p as i64) as Elem
    }

    /// Element with the given residue coefficients (lowest degree first).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Elem, FieldError> {
        if coeffs.len() > self.inner.e {
            return Err(FieldError::WrongLength { got: coeffs.len(), e: self.inner.e });
        }
        let p = self.inner.p;
        let mut packed: u64 = 0;
        for &c in coeffs.iter().rev() {
            if c < 0 || c >= p as i64 {
                return Err(FieldError::Unreduced { value: c, p });
            }
            packed = packed * p as u64 + c as u64;
        }
        Ok(packed as Elem)
    }

    /// Residue coefficients of `a`, always of length `e`.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let p = self.inner.p;
        let mut x = a;
        (0..self.inner.e)
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    }

    /// All field elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1u64;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Human-readable element: an integer for prime fields, otherwise a
    /// polynomial in `t`.
    pub fn format(&self, a: Elem) -> String {
        if self.inner.e == 1 {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn build_tables(p: u32, e: usize, q: u32, modulus: &[u32]) -> Tables {
    let qs = q as usize;
    let digits = |mut x: u32| -> Vec<u32> {
        (0..e)
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    };
    let pack = |c: &[u32]| -> u32 { c.iter().rev().fold(0u32, |acc, &d| acc * p + d) };
    let all: Vec<Vec<u32>> = (0..q).map(digits).collect();
    let mut add = vec![0; qs * qs];
    let mut mul = vec![0; qs * qs];
    for a in 0..qs {
        for b in 0..qs {
            let s: Vec<u32> = (0..e).map(|i| (all[a][i] + all[b][i]) % p).collect();
            add[a * qs + b] = pack(&s);
            let mut prod = vec![0u32; 2 * e - 1];
            for i in 0..e {
                for j in 0..e {
                    prod[i + j] = ((prod[i + j] as u64 + all[a][i] as u64 * all[b][j] as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, modulus, p);
            r.resize(e, 0);
            mul[a * qs + b] = pack(&r);
        }
    }
    let neg = (0..qs).map(|a| pack(&all[a].iter().map(|&c| (p - c) % p).collect::<Vec<_>>())).collect();
    let mut inv = vec![0; qs];
    for a in 1..qs {
        for b in 1..qs {
            if mul[a * qs + b] == 1 {
                inv[a] = b as u32;
                break;
            }
        }
    }
    Tables { add, mul, neg, inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::prime(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.from_int(-1), 6);
    }

    #[test]
    fn f4_has_cube_roots_of_unity() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.multiplicative_order(t), Some(3));
        // t^2 = t + 1
        assert_eq!(f.mul(t, t), f.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (p, e) in [(2, 3), (3, 2), (3, 4), (5, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f:?} {a}");
            }
            assert_eq!(f.order() as u64, (p as u64).pow(e as u32));
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        // t^2 + 1 = (t+1)^2 over F_2
        assert_eq!(FiniteField::with_modulus(2, vec![1, 0, 1]), Err(FieldError::Reducible(2)));
        assert!(matches!(FiniteField::new(4, 1), Err(FieldError::NotPrime(4))));
        assert!(FiniteField::with_modulus(3, vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn coefficient_round_trip() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            let c: Vec<i64> = f.coeffs(a).iter().map(|&x| x as i64).collect();
            assert_eq!(f.from_coeffs(&c).unwrap(), a);
        }
        assert!(f.from_coeffs(&[3]).is_err());
    }
}
