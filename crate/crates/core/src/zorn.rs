//! Zorn vector matrices: the split octonion algebra C(F).
//!
//! An element is a 2x2 array with scalars on the diagonal and 3-vectors off
//! the diagonal,
//!
//! ```text
//! | a1   v12 |
//! | v21  a2  |
//! ```
//!
//! multiplied with the dot/cross-product rule
//!
//! ```text
//! a1 b1 + (v12, w21)              a1 w12 + b2 v12 - v21 x w21
//! b1 v21 + a2 w21 + v12 x w12     a2 b2 + (v21, w12)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gfpn::{FieldElement, FiniteField};

/// Largest field order for which the full q^8 enumeration is allowed.
pub const MAX_ENUMERATION_Q: u32 = 5;

pub type Vec3 = [FieldElement; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZornMatrix {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub v12: Vec3,
    pub v21: Vec3,
}

impl ZornMatrix {
    pub fn new(a1: FieldElement, a2: FieldElement, v12: Vec3, v21: Vec3) -> Self {
        ZornMatrix { a1, a2, v12, v21 }
    }

    /// Components in the order used for enumeration: a1, a2, v12, v21.
    pub fn components(&self) -> [FieldElement; 8] {
        [
            self.a1,
            self.a2,
            self.v12[0],
            self.v12[1],
            self.v12[2],
            self.v21[0],
            self.v21[1],
            self.v21[2],
        ]
    }

    pub fn from_components(c: [FieldElement; 8]) -> Self {
        ZornMatrix {
            a1: c[0],
            a2: c[1],
            v12: [c[2], c[3], c[4]],
            v21: [c[5], c[6], c[7]],
        }
    }
}

/// Norm condition for [`ZornAlgebra::enumerate_by_norm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormTarget {
    Value(FieldElement),
    Nonzero,
}

/// C(F) over a fixed finite field.
#[derive(Clone, Debug)]
pub struct ZornAlgebra {
    field: FiniteField,
}

impl ZornAlgebra {
    pub fn new(field: FiniteField) -> Self {
        ZornAlgebra { field }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn zero(&self) -> ZornMatrix {
        let z = self.field.zero();
        ZornMatrix::new(z, z, [z; 3], [z; 3])
    }

    pub fn one(&self) -> ZornMatrix {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, s: FieldElement) -> ZornMatrix {
        let z = self.field.zero();
        ZornMatrix::new(s, s, [z; 3], [z; 3])
    }

    pub fn check(&self, a: &ZornMatrix) -> Result<()> {
        if a.components().iter().all(|&c| self.field.contains(c)) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn dot(&self, x: &Vec3, y: &Vec3) -> FieldElement {
        let f = &self.field;
        let s = f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1]));
        f.add(s, f.mul(x[2], y[2]))
    }

    fn cross(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        let f = &self.field;
        [
            f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
            f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
            f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0])),
        ]
    }

    fn vlin(&self, s: FieldElement, x: &Vec3, t: FieldElement, y: &Vec3) -> Vec3 {
        let f = &self.field;
        [0, 1, 2].map(|i| f.add(f.mul(s, x[i]), f.mul(t, y[i])))
    }

    fn vadd(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        [0, 1, 2].map(|i| self.field.add(x[i], y[i]))
    }

    fn vsub(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        [0, 1, 2].map(|i| self.field.sub(x[i], y[i]))
    }

    /// Product without membership checks; see [`ZornAlgebra::checked_mul`].
    pub fn mul(&self, a: &ZornMatrix, b: &ZornMatrix) -> ZornMatrix {
        let f = &self.field;
        let a1 = f.add(f.mul(a.a1, b.a1), self.dot(&a.v12, &b.v21));
        let v12 = self.vsub(
            &self.vlin(a.a1, &b.v12, b.a2, &a.v12),
            &self.cross(&a.v21, &b.v21),
        );
        let v21 = self.vadd(
            &self.vlin(b.a1, &a.v21, a.a2, &b.v21),
            &self.cross(&a.v12, &b.v12),
        );
        let a2 = f.add(f.mul(a.a2, b.a2), self.dot(&a.v21, &b.v12));
        ZornMatrix { a1, a2, v12, v21 }
    }

    pub fn checked_mul(&self, a: &ZornMatrix, b: &ZornMatrix) -> Result<ZornMatrix> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn add(&self, a: &ZornMatrix, b: &ZornMatrix) -> ZornMatrix {
        let (x, y) = (a.components(), b.components());
        ZornMatrix::from_components([0, 1, 2, 3, 4, 5, 6, 7].map(|i| self.field.add(x[i], y[i])))
    }

    pub fn sub(&self, a: &ZornMatrix, b: &ZornMatrix) -> ZornMatrix {
        let (x, y) = (a.components(), b.components());
        ZornMatrix::from_components([0, 1, 2, 3, 4, 5, 6, 7].map(|i| self.field.sub(x[i], y[i])))
    }

    pub fn scale(&self, s: FieldElement, a: &ZornMatrix) -> ZornMatrix {
        ZornMatrix::from_components(a.components().map(|c| self.field.mul(s, c)))
    }

    pub fn neg(&self, a: &ZornMatrix) -> ZornMatrix {
        ZornMatrix::from_components(a.components().map(|c| self.field.neg(c)))
    }

    pub fn trace(&self, a: &ZornMatrix) -> FieldElement {
        self.field.add(a.a1, a.a2)
    }

    pub fn norm(&self, a: &ZornMatrix) -> FieldElement {
        self.field
            .sub(self.field.mul(a.a1, a.a2), self.dot(&a.v12, &a.v21))
    }

    /// `n(a)^{-1} (t(a) 1 - a)`.
    pub fn inv(&self, a: &ZornMatrix) -> Result<ZornMatrix> {
        let n = self.norm(a);
        let ninv = self.field.inv(n).map_err(|_| Error::NotAUnit)?;
        let conj = self.sub(&self.scalar(self.trace(a)), a);
        Ok(self.scale(ninv, &conj))
    }

    /// `uv.w - u.vw`
    pub fn associator(&self, u: &ZornMatrix, v: &ZornMatrix, w: &ZornMatrix) -> ZornMatrix {
        self.sub(&self.mul(&self.mul(u, v), w), &self.mul(u, &self.mul(v, w)))
    }

    pub fn is_zero(&self, a: &ZornMatrix) -> bool {
        *a == self.zero()
    }

    /// Number of matrices, q^8.
    pub fn size(&self) -> u64 {
        (self.field.order() as u64).pow(8)
    }

    /// Dense code of a matrix: its component tuple read as a base-q numeral
    /// with `a1` most significant, so codes follow lexicographic order.
    pub fn encode(&self, a: &ZornMatrix) -> u64 {
        let q = self.field.order() as u64;
        a.components()
            .iter()
            .fold(0u64, |acc, c| acc * q + c.index() as u64)
    }

    pub fn decode(&self, mut code: u64) -> ZornMatrix {
        let q = self.field.order() as u64;
        let mut c = [FieldElement::default(); 8];
        for slot in c.iter_mut().rev() {
            *slot = self
                .field
                .from_index((code % q) as u32)
                .expect("digit below q");
            code /= q;
        }
        ZornMatrix::from_components(c)
    }

    /// All matrices satisfying the norm condition, in lexicographic order.
    pub fn enumerate_by_norm(&self, target: NormTarget) -> Result<Vec<ZornMatrix>> {
        let q = self.field.order();
        if q > MAX_ENUMERATION_Q {
            return Err(Error::FieldTooLarge(q as u64));
        }
        if let NormTarget::Value(t) = target {
            self.field.check(t)?;
        }
        let keep = |n: FieldElement| match target {
            NormTarget::Value(t) => n == t,
            NormTarget::Nonzero => n != self.field.zero(),
        };
        Ok((0..self.size())
            .map(|code| self.decode(code))
            .filter(|a| keep(self.norm(a)))
            .collect())
    }

    /// First element of norm 1 (in enumeration order) whose square is -1.
    pub fn find_square_root_of_minus_one(&self) -> Option<ZornMatrix> {
        let minus_one = self.neg(&self.one());
        let q = self.field.order();
        if q > MAX_ENUMERATION_Q {
            return None;
        }
        (0..self.size())
            .map(|code| self.decode(code))
            .find(|a| self.norm(a) == self.field.one() && self.mul(a, a) == minus_one)
    }

    pub fn render(&self, a: &ZornMatrix) -> String {
        let r = |x: FieldElement| self.field.render(x);
        let mut s = String::new();
        write!(
            s,
            "({}, {} | {}, {}, {} | {}, {}, {})",
            r(a.a1),
            r(a.a2),
            r(a.v12[0]),
            r(a.v12[1]),
            r(a.v12[2]),
            r(a.v21[0]),
            r(a.v21[1]),
            r(a.v21[2])
        )
        .unwrap();
        s
    }

    /// Parses the output of [`ZornAlgebra::render`]. Each scalar contributes
    /// `n` comma-separated coefficients, so the split is by count.
    pub fn parse(&self, s: &str) -> Result<ZornMatrix> {
        let bad = |m: &str| Error::Parse(format!("zorn matrix {s:?}: {m}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let parts: Vec<&str> = inner.split('|').collect();
        if parts.len() != 3 {
            return Err(bad("expected three '|'-separated parts"));
        }
        let n = self.field.degree() as usize;
        let mut comps = Vec::with_capacity(8);
        for (part, count) in parts.iter().zip([2usize, 3, 3]) {
            let nums = part
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("bad coefficient")))
                .collect::<Result<Vec<_>>>()?;
            if nums.len() != count * n {
                return Err(bad("wrong number of coefficients"));
            }
            for chunk in nums.chunks(n) {
                comps.push(
                    self.field
                        .from_coeffs(chunk)
                        .map_err(|_| bad("coefficient out of range"))?,
                );
            }
        }
        Ok(ZornMatrix::from_components(
            comps.try_into().expect("eight components"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u32, n: u32) -> ZornAlgebra {
        ZornAlgebra::new(FiniteField::new(p, n).unwrap())
    }

    fn e1(z: &ZornAlgebra) -> Vec3 {
        let f = z.field();
        [f.one(), f.zero(), f.zero()]
    }

    #[test]
    fn identity_is_unit() {
        let z = alg(2, 1);
        for code in (0..z.size()).step_by(7) {
            let a = z.decode(code);
            assert_eq!(z.mul(&z.one(), &a), a);
            assert_eq!(z.mul(&a, &z.one()), a);
        }
    }

    #[test]
    fn dot_product_term_survives() {
        let z = alg(2, 1);
        let f = z.field();
        let zero = [f.zero(); 3];
        let a = ZornMatrix::new(f.zero(), f.zero(), e1(&z), zero);
        let b = ZornMatrix::new(f.zero(), f.zero(), zero, e1(&z));
        assert_eq!(
            z.mul(&a, &b),
            ZornMatrix::new(f.one(), f.zero(), zero, zero)
        );
    }

    #[test]
    fn trace_and_norm() {
        let z = alg(3, 1);
        let f = z.field();
        assert_eq!(z.trace(&z.one()), f.from_int(2));
        assert_eq!(z.norm(&z.one()), f.one());
        let a = ZornMatrix::new(f.zero(), f.zero(), e1(&z), e1(&z));
        assert_eq!(z.trace(&a), f.zero());
        assert_eq!(z.norm(&a), f.from_int(2));
    }

    #[test]
    fn inverse() {
        let z = alg(3, 1);
        assert_eq!(z.inv(&z.one()).unwrap(), z.one());
        let m0 = z
            .enumerate_by_norm(NormTarget::Value(z.field().one()))
            .unwrap();
        for a in m0.iter().step_by(37) {
            let inv = z.inv(a).unwrap();
            assert_eq!(inv, z.sub(&z.scalar(z.trace(a)), a));
            assert_eq!(z.mul(a, &inv), z.one());
            assert_eq!(z.mul(&inv, a), z.one());
        }
        assert_eq!(z.inv(&z.zero()), Err(Error::NotAUnit));
    }

    #[test]
    fn enumeration_counts() {
        let z = alg(2, 1);
        assert_eq!(
            z.enumerate_by_norm(NormTarget::Value(z.field().one()))
                .unwrap()
                .len(),
            120
        );
        assert_eq!(z.enumerate_by_norm(NormTarget::Nonzero).unwrap().len(), 120);
        let z = alg(7, 1);
        assert_eq!(
            z.enumerate_by_norm(NormTarget::Nonzero).unwrap_err(),
            Error::FieldTooLarge(7)
        );
    }

    #[test]
    fn enumeration_is_sorted() {
        let z = alg(2, 1);
        let all = z.enumerate_by_norm(NormTarget::Nonzero).unwrap();
        assert!(all.windows(2).all(|w| z.encode(&w[0]) < z.encode(&w[1])));
    }

    #[test]
    fn render_parse_gf9() {
        let z = alg(3, 2);
        let f = z.field();
        let x = f.generator();
        let a = ZornMatrix::new(x, f.one(), [f.zero(), x, f.one()], [f.from_int(2); 3]);
        let s = z.render(&a);
        assert_eq!(s, "(0,1, 1,0 | 0,0, 0,1, 1,0 | 2,0, 2,0, 2,0)");
        assert_eq!(z.parse(&s).unwrap(), a);
        assert!(z.parse("(1, 0 | 0 | 0)").is_err());
    }

    #[test]
    fn mixed_field_operands() {
        let z = alg(2, 1);
        let big = alg(5, 1).scalar(alg(5, 1).field().from_int(4));
        assert_eq!(z.checked_mul(&big, &z.one()), Err(Error::MixedFields));
    }

    #[test]
    fn square_root_of_minus_one_exists() {
        for p in [2, 3, 5] {
            let z = alg(p, 1);
            let a = z.find_square_root_of_minus_one().unwrap();
            assert_eq!(z.mul(&a, &a), z.neg(&z.one()));
        }
    }
}
