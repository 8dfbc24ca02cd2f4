//! The loop algebra FQ of a finite loop over a finite field: coefficient
//! vectors indexed by loop elements, multiplied through the Cayley table.

mod ideal;
mod lemmas;
mod prop4;

use rand::{Rng, RngExt};

use crate::error::{Error, Result};
use crate::gfpn::{FieldElement, FiniteField};
use crate::linalg::{solve_columns, Subspace};
use crate::loopcore::FiniteLoop;

pub use ideal::{IdealHandle, PowerChain};
pub use lemmas::{
    lemma11_check, lemma12_check, lemma13_chain_check, Lemma11Report, Lemma12Outcome, Lemma13Level,
    Lemma13Report,
};
pub use prop4::{prop4_suite, Prop4Report};

/// Largest loop order accepted for algebra work.
pub const MAX_ALGEBRA_ORDER: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }
}

#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    loop_: FiniteLoop,
    field: FiniteField,
}

impl LoopAlgebra {
    pub fn new(loop_: FiniteLoop, field: FiniteField) -> Result<Self> {
        if loop_.order() > MAX_ALGEBRA_ORDER {
            return Err(Error::OrderTooLarge {
                order: loop_.order(),
                limit: MAX_ALGEBRA_ORDER,
            });
        }
        Ok(LoopAlgebra { loop_, field })
    }

    pub fn loop_(&self) -> &FiniteLoop {
        &self.loop_
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.loop_.order()
    }

    pub fn element(&self, coeffs: Vec<FieldElement>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Mismatch);
        }
        for &c in &coeffs {
            self.field.check(c)?;
        }
        Ok(AlgebraElement { coeffs })
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    /// The basis element of loop element `g`.
    pub fn basis(&self, g: usize) -> AlgebraElement {
        let mut x = self.zero();
        x.coeffs[g] = self.field.one();
        x
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(0)
    }

    /// `1 - g`
    pub fn one_minus(&self, g: usize) -> AlgebraElement {
        self.sub(&self.one(), &self.basis(g))
    }

    pub fn is_zero(&self, x: &AlgebraElement) -> bool {
        x.coeffs.iter().all(|&c| c == self.field.zero())
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: FieldElement, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: x.coeffs.iter().map(|&a| self.field.mul(s, a)).collect(),
        }
    }

    /// Bilinear extension of the loop product.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.mul_raw(&x.coeffs, &y.coeffs),
        }
    }

    pub fn checked_mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.coeffs.len() != self.dim() || y.coeffs.len() != self.dim() {
            return Err(Error::Mismatch);
        }
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul_raw(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let zero = f.zero();
        let mut out = vec![zero; self.dim()];
        let ys: Vec<(usize, FieldElement)> = y
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != zero)
            .map(|(j, &c)| (j, c))
            .collect();
        for (i, &a) in x.iter().enumerate() {
            if a == zero {
                continue;
            }
            for &(j, b) in &ys {
                let k = self.loop_.mul(i, j);
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        out
    }

    /// `g x`, a permutation of coordinates.
    pub(crate) fn left_basis_mul(&self, g: usize, x: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, &c) in x.iter().enumerate() {
            out[self.loop_.mul(g, i)] = c;
        }
        out
    }

    /// `x g`
    pub(crate) fn right_basis_mul(&self, x: &[FieldElement], g: usize) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, &c) in x.iter().enumerate() {
            out[self.loop_.mul(i, g)] = c;
        }
        out
    }

    /// Coefficient sum.
    pub fn augmentation(&self, x: &AlgebraElement) -> FieldElement {
        x.coeffs
            .iter()
            .fold(self.field.zero(), |acc, &c| self.field.add(acc, c))
    }

    /// Left-normed power `x^k = (..(x x) x ..) x`, with `x^0 = 1`.
    pub fn pow(&self, x: &AlgebraElement, k: usize) -> AlgebraElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// `1 + x + ... + x^{m-1}`
    pub fn geometric_sum(&self, x: &AlgebraElement, m: usize) -> AlgebraElement {
        let mut term = self.one();
        let mut sum = self.zero();
        for _ in 0..m {
            sum = self.add(&sum, &term);
            term = self.mul(&term, x);
        }
        sum
    }

    /// `uv.w - u.vw`
    pub fn associator(
        &self,
        u: &AlgebraElement,
        v: &AlgebraElement,
        w: &AlgebraElement,
    ) -> AlgebraElement {
        self.sub(&self.mul(&self.mul(u, v), w), &self.mul(u, &self.mul(v, w)))
    }

    /// `uv - vu`
    pub fn commutator(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        self.sub(&self.mul(u, v), &self.mul(v, u))
    }

    /// Two-sided inverse found by solving `z x = 1` as a linear system and
    /// confirming `x z = 1`.
    pub fn inverse(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let columns: Vec<Vec<FieldElement>> = (0..self.dim())
            .map(|g| self.left_basis_mul(g, &x.coeffs))
            .collect();
        let z = solve_columns(&self.field, &columns, &self.one().coeffs).ok_or(Error::NotAUnit)?;
        let z = AlgebraElement { coeffs: z };
        if self.mul(x, &z) != self.one() || self.mul(&z, x) != self.one() {
            return Err(Error::NotAUnit);
        }
        Ok(z)
    }

    /// Kernel of the augmentation map.
    pub fn augmentation_kernel(&self) -> Subspace {
        let one = self.one();
        Subspace::span(
            &self.field,
            self.dim(),
            (1..self.dim()).map(|g| self.sub(&one, &self.basis(g)).coeffs),
        )
    }

    /// A uniformly random element of a subspace (random combination of its basis).
    pub fn random_in<R: Rng>(&self, s: &Subspace, rng: &mut R) -> AlgebraElement {
        let q = self.field.order();
        let mut x = self.zero();
        for row in s.basis() {
            let c = self
                .field
                .from_index(rng.random_range(0..q))
                .expect("index below q");
            x = self.add(
                &x,
                &self.scale(
                    c,
                    &AlgebraElement {
                        coeffs: row.clone(),
                    },
                ),
            );
        }
        x
    }

    pub fn from_subspace_row(&self, row: &[FieldElement]) -> AlgebraElement {
        AlgebraElement {
            coeffs: row.to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::small_group;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(name: &str, p: u32) -> LoopAlgebra {
        LoopAlgebra::new(small_group(name).unwrap(), FiniteField::new(p, 1).unwrap()).unwrap()
    }

    #[test]
    fn basis_products() {
        let a = alg("S3", 3);
        for g in 0..6 {
            for h in 0..6 {
                assert_eq!(
                    a.mul(&a.basis(g), &a.basis(h)),
                    a.basis(a.loop_().mul(g, h))
                );
            }
        }
    }

    #[test]
    fn one_plus_g_times_one_minus_g() {
        let a = alg("Z2", 2);
        let one = a.one();
        let g = a.basis(1);
        let p = a.mul(&a.add(&one, &g), &a.sub(&one, &g));
        assert!(a.is_zero(&p));
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let a = alg("Q8", 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let full = Subspace::full(a.field(), a.dim());
        for _ in 0..50 {
            let x = a.random_in(&full, &mut rng);
            let y = a.random_in(&full, &mut rng);
            let f = a.field();
            assert_eq!(
                a.augmentation(&a.mul(&x, &y)),
                f.mul(a.augmentation(&x), a.augmentation(&y))
            );
        }
        assert_eq!(a.augmentation(&a.basis(3)), a.field().one());
        assert_eq!(a.augmentation(&a.one_minus(3)), a.field().zero());
    }

    #[test]
    fn unit_is_neutral_and_inverse_works() {
        let a = alg("Z4", 3);
        // 1 + g + g^2 + 2g^3 is nonzero under every character of Z4.
        let x = a
            .element(
                [1, 1, 1, 2]
                    .iter()
                    .map(|&c| a.field().from_int(c))
                    .collect(),
            )
            .unwrap();
        assert_eq!(a.mul(&a.one(), &x), x);
        assert_eq!(a.mul(&x, &a.one()), x);
        let inv = a.inverse(&x).unwrap();
        assert_eq!(a.mul(&x, &inv), a.one());
        // 1 + g + g^2 + g^3 is a zero divisor.
        let s = a.element(vec![a.field().one(); 4]).unwrap();
        assert_eq!(a.inverse(&s), Err(Error::NotAUnit));
    }

    #[test]
    fn mismatched_lengths() {
        let a = alg("Z4", 2);
        assert_eq!(a.element(vec![a.field().one(); 3]), Err(Error::Mismatch));
        let b = alg("Z2", 2);
        assert_eq!(a.checked_mul(&a.one(), &b.one()), Err(Error::Mismatch));
    }

    #[test]
    fn too_large() {
        let big = small_group("Z257").unwrap();
        assert!(matches!(
            LoopAlgebra::new(big, FiniteField::new(2, 1).unwrap()),
            Err(Error::OrderTooLarge { .. })
        ));
    }
}
