//! Arithmetic in GF(p^n).
//!
//! A field is a context object; its elements are small `Copy` handles that
//! encode the reduced coefficient vector `c_0 + c_1 x + ... + c_{n-1} x^{n-1}`
//! as the integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`. Equality of handles
//! is therefore equality of canonical representatives.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Element of some [`FiniteField`]. Only meaningful together with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    /// Integer encoding of the coefficient vector (base p, low degree first).
    pub fn index(self) -> u32 {
        self.0
    }
}

/// The finite field GF(p^n) modulo the lexicographically smallest monic
/// irreducible polynomial of degree n.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    n: u32,
    q: u32,
    /// Low coefficients of the monic modulus, `n` entries.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `num` divided by a monic polynomial `den` over GF(p).
/// Both are coefficient vectors, low degree first; `den` includes its leading 1.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_from_low(low: &[u32]) -> Vec<u32> {
    let mut v = low.to_vec();
    v.push(1);
    v
}

/// Coefficient tuple number `k` in lexicographic order, `c_0` most significant.
fn lex_tuple(mut k: u64, len: usize, p: u32) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut().rev() {
        *slot = (k % p as u64) as u32;
        k /= p as u64;
    }
    out
}

fn is_irreducible(low: &[u32], p: u32) -> bool {
    let n = low.len();
    let f = monic_from_low(low);
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let g = monic_from_low(&lex_tuple(k, d, p));
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds GF(p^n).
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 1 {
            return Err(Error::BadDegree(n));
        }
        let order = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        let q = order as u32;
        let modulus = (0..order)
            .map(|k| lex_tuple(k, n as usize, p))
            .find(|low| is_irreducible(low, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = FiniteField {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        if q <= 256 {
            let mut t = vec![0u32; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = self.add_digits(a as u32, b as u32);
                }
            }
            self.add_table = Some(t);
        }
        // Search for a primitive element by increasing encoding.
        for g in 1..self.q {
            let mut exp = Vec::with_capacity(q - 1);
            let mut log = vec![u32::MAX; q];
            let mut x = 1u32;
            let mut ok = true;
            for k in 0..q - 1 {
                if log[x as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[x as usize] = k as u32;
                exp.push(x);
                x = self.mul_schoolbook(FieldElement(x), FieldElement(g)).0;
            }
            if ok && x == 1 {
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Low coefficients of the monic modulus followed by the leading 1.
    pub fn modulus(&self) -> Vec<u32> {
        monic_from_low(&self.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The generator `x` of the extension (equals the prime-field element 0 when n = 1
    /// because the modulus is then `x` itself).
    pub fn generator(&self) -> FieldElement {
        if self.n == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_index(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.n as usize {
            return Err(Error::MixedFields);
        }
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::MixedFields);
            }
            v = v * self.p + c;
        }
        Ok(FieldElement(v))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.n)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    /// Fails with `MixedFields` when `a` cannot be an element of this field.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::MixedFields)
        }
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place = place.wrapping_mul(self.p);
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.add_table {
            Some(t) => FieldElement(t[(a.0 * self.q + b.0) as usize]),
            None => FieldElement(self.add_digits(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let mut v = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            let d = v % self.p;
            out += ((self.p - d) % self.p) * place;
            place = place.wrapping_mul(self.p);
            v /= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let k = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[k % (self.q as usize - 1)])
    }

    /// Polynomial multiplication followed by reduction; independent of the
    /// log tables used by [`FiniteField::mul`].
    pub fn mul_schoolbook(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u32; ca.len() + cb.len() - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % self.p as u64) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus(), self.p);
        self.from_coeffs(&r).expect("reduced polynomial")
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let m = self.q as usize - 1;
        let k = (m - self.log[a.0 as usize] as usize) % m;
        Ok(FieldElement(self.exp[k]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return self.zero();
        }
        let m = self.q as u64 - 1;
        let k = (self.log[a.0 as usize] as u64 * (e % m)) % m;
        FieldElement(self.exp[k as usize])
    }

    /// Some `x` with `x^2 = a`, the one with the smallest encoding, found by search.
    pub fn sqrt(&self, a: FieldElement) -> Option<FieldElement> {
        self.elements().find(|&x| self.mul(x, x) == a)
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        self.sqrt(a).is_some()
    }

    /// Euler's criterion `a^((q-1)/2) = 1` for nonzero `a`; `None` in characteristic 2.
    pub fn euler_criterion(&self, a: FieldElement) -> Option<bool> {
        if self.p == 2 {
            return None;
        }
        if a.0 == 0 {
            return Some(true);
        }
        Some(self.pow(a, (self.q as u64 - 1) / 2) == self.one())
    }

    /// Whether every nonzero element has a square root, by squaring every element.
    pub fn is_closed_under_sqrt(&self) -> bool {
        let mut hit = vec![false; self.q as usize];
        for x in self.elements() {
            hit[self.mul(x, x).0 as usize] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn render(&self, a: FieldElement) -> String {
        self.coeffs(a)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a comma-separated coefficient list, low degree first. Fewer
    /// than `n` coefficients are padded with zeros.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
            .map_err(|_| Error::Parse(format!("{s:?} is not an element of {self:?}")))
    }
}

/// A field given as `p^n` (or just `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
}

impl FieldSpec {
    pub fn build(self) -> Result<FiniteField> {
        FiniteField::new(self.p, self.n)
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("field {s:?} is not of the form p^n"));
        let (p, n) = match s.trim().split_once('^') {
            Some((p, n)) => (p.trim(), n.trim()),
            None => (s.trim(), "1"),
        };
        Ok(FieldSpec {
            p: p.parse().map_err(|_| bad())?,
            n: n.parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), vec![0, 1]);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        let two = f3.from_int(2);
        assert_eq!(f3.mul(two, two), f3.one());
    }

    #[test]
    fn gf4_modulus_and_square_of_x() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), vec![1, 1, 1]);
        let x = f.generator();
        assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 1]);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), vec![1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(FiniteField::new(3, 0).unwrap_err(), Error::BadDegree(0));
        assert!(matches!(
            FiniteField::new(2, 17),
            Err(Error::FieldTooLarge(_))
        ));
        assert!(FiniteField::new(2, 16).is_ok());
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let f = FiniteField::new(5, 2).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn square_roots() {
        let f3 = FiniteField::new(3, 1).unwrap();
        assert!(!f3.is_square(f3.from_int(2)));
        let f5 = FiniteField::new(5, 1).unwrap();
        let r = f5.sqrt(f5.from_int(4)).unwrap();
        assert_eq!(f5.mul(r, r), f5.from_int(4));
        assert_eq!(r, f5.from_int(2));
        let f4 = FiniteField::new(2, 2).unwrap();
        assert!(f4.elements().all(|a| f4.is_square(a)));
        assert!(f3.is_square(f3.zero()));
    }

    #[test]
    fn sqrt_closure() {
        assert!(FiniteField::new(2, 1).unwrap().is_closed_under_sqrt());
        assert!(!FiniteField::new(3, 1).unwrap().is_closed_under_sqrt());
        // Half the units of GF(9) are non-squares.
        assert!(!FiniteField::new(3, 2).unwrap().is_closed_under_sqrt());
    }

    #[test]
    fn render_and_parse() {
        let f = FiniteField::new(3, 2).unwrap();
        let a = f.from_coeffs(&[2, 1]).unwrap();
        assert_eq!(f.render(a), "2,1");
        assert_eq!(f.parse_element("2, 1").unwrap(), a);
        assert_eq!(f.parse_element("2").unwrap(), f.from_int(2));
        assert!(f.parse_element("3").is_err());
        assert!(f.parse_element("1,1,1").is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(
            "3^2".parse::<FieldSpec>().unwrap(),
            FieldSpec { p: 3, n: 2 }
        );
        assert_eq!("5".parse::<FieldSpec>().unwrap(), FieldSpec { p: 5, n: 1 });
        assert!("x^2".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn mixed_field_elements_are_rejected() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.check(FieldElement(7)), Err(Error::MixedFields));
        assert_eq!(f.from_index(3), Err(Error::MixedFields));
    }
}
