//! Translations, inner mappings, associators and commutators.

use super::FiniteLoop;

/// A permutation of `0..n`; `image[x]` is where `x` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Self {
        Permutation { image }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// `self` after `first`: `x -> self(first(x))`.
    pub fn after(&self, first: &Permutation) -> Self {
        Permutation {
            image: first.image.iter().map(|&y| self.image[y]).collect(),
        }
    }
}

impl FiniteLoop {
    /// `R(a): x -> x a`
    pub fn right_translation(&self, a: usize) -> Permutation {
        Permutation::from_images((0..self.order()).map(|x| self.mul(x, a)).collect())
    }

    /// `L(a): x -> a x`
    pub fn left_translation(&self, a: usize) -> Permutation {
        Permutation::from_images((0..self.order()).map(|x| self.mul(a, x)).collect())
    }

    /// `T(a) = L(a)^{-1} R(a)`
    pub fn inner_t(&self, a: usize) -> Permutation {
        self.left_translation(a)
            .inverse()
            .after(&self.right_translation(a))
    }

    /// `R(a,b) = R(ab)^{-1} R(b) R(a)`
    pub fn inner_r(&self, a: usize, b: usize) -> Permutation {
        self.right_translation(self.mul(a, b))
            .inverse()
            .after(&self.right_translation(b).after(&self.right_translation(a)))
    }

    /// `L(a,b) = L(ab)^{-1} L(a) L(b)`
    pub fn inner_l(&self, a: usize, b: usize) -> Permutation {
        self.left_translation(self.mul(a, b))
            .inverse()
            .after(&self.left_translation(a).after(&self.left_translation(b)))
    }

    /// Pointwise `T(a) x`, without building the permutation.
    #[inline]
    pub fn t_at(&self, a: usize, x: usize) -> usize {
        self.ldiv(a, self.mul(x, a))
    }

    /// Pointwise `R(a,b) x`.
    #[inline]
    pub fn r_at(&self, a: usize, b: usize, x: usize) -> usize {
        self.rdiv(self.mul(self.mul(x, a), b), self.mul(a, b))
    }

    /// Pointwise `L(a,b) x`.
    #[inline]
    pub fn l_at(&self, a: usize, b: usize, x: usize) -> usize {
        self.ldiv(self.mul(a, b), self.mul(a, self.mul(b, x)))
    }

    /// Solution `x` of `ab.c = ax.bc`.
    pub fn assoc_alpha(&self, a: usize, b: usize, c: usize) -> usize {
        let lhs = self.mul(self.mul(a, b), c);
        self.ldiv(a, self.rdiv(lhs, self.mul(b, c)))
    }

    /// Solution `x` of `c.ba = cb.xa`.
    pub fn assoc_beta(&self, a: usize, b: usize, c: usize) -> usize {
        let lhs = self.mul(c, self.mul(b, a));
        self.rdiv(self.ldiv(self.mul(c, b), lhs), a)
    }

    /// Solution `x` of `ab = b.ax`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.ldiv(a, self.ldiv(b, self.mul(a, b)))
    }

    /// `[a,b,c]` with `ab.c = (a.bc)[a,b,c]`.
    pub fn bracket_assoc(&self, a: usize, b: usize, c: usize) -> usize {
        self.ldiv(self.mul(a, self.mul(b, c)), self.mul(self.mul(a, b), c))
    }

    /// `[a,b]` with `ab = (ba)[a,b]`.
    pub fn bracket_comm(&self, a: usize, b: usize) -> usize {
        self.ldiv(self.mul(b, a), self.mul(a, b))
    }

    /// Checks `T(b)a = a(a,b)`, `R(b,c)a = a alpha(a,b,c)` and
    /// `L(c,b)a = beta(a,b,c) a` at one triple.
    pub fn inner_associator_consistent(&self, a: usize, b: usize, c: usize) -> bool {
        self.t_at(b, a) == self.mul(a, self.commutator(a, b))
            && self.r_at(b, c, a) == self.mul(a, self.assoc_alpha(a, b, c))
            && self.l_at(c, b, a) == self.mul(self.assoc_beta(a, b, c), a)
    }

    /// Checks `[a,b,c]^{-1} = alpha(a,c^{-1},b^{-1})` and `[a,b,c] = beta(a^{-1},c,b)`,
    /// which hold in every Moufang loop.
    pub fn moufang_bracket_identities(&self, a: usize, b: usize, c: usize) -> bool {
        let br = self.bracket_assoc(a, b, c);
        self.inverse(br) == self.assoc_alpha(a, self.inverse(c), self.inverse(b))
            && br == self.assoc_beta(self.inverse(a), c, b)
    }

    /// The same identities with the last two arguments of alpha and beta
    /// unswapped. These fail in nonassociative Moufang loops.
    pub fn unswapped_bracket_identities(&self, a: usize, b: usize, c: usize) -> bool {
        let br = self.bracket_assoc(a, b, c);
        self.inverse(br) == self.assoc_alpha(a, self.inverse(b), self.inverse(c))
            && br == self.assoc_beta(self.inverse(a), b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::small_group;

    #[test]
    fn abelian_t_is_identity() {
        let z6 = small_group("Z6").unwrap();
        for a in 0..6 {
            assert!(z6.inner_t(a).is_identity());
            assert_eq!(z6.commutator(a, 5 - a), 0);
        }
    }

    #[test]
    fn group_t_is_conjugation() {
        let s3 = small_group("S3").unwrap();
        for a in 0..6 {
            let t = s3.inner_t(a);
            for x in 0..6 {
                let conj = s3.mul(s3.mul(s3.inverse(a), x), a);
                assert_eq!(t.apply(x), conj);
                assert_eq!(s3.t_at(a, x), conj);
            }
        }
    }

    #[test]
    fn inner_maps_fix_identity() {
        let q = small_group("Q8").unwrap();
        for a in 0..8 {
            assert_eq!(q.inner_r(a, q.inverse(a)).apply(0), 0);
            for b in 0..8 {
                assert_eq!(q.inner_r(a, b).apply(0), 0);
                assert_eq!(q.inner_l(a, b).apply(0), 0);
                for x in 0..8 {
                    assert_eq!(q.inner_r(a, b).apply(x), q.r_at(a, b, x));
                    assert_eq!(q.inner_l(a, b).apply(x), q.l_at(a, b, x));
                }
            }
        }
    }

    #[test]
    fn group_associators_vanish() {
        let g = small_group("D4").unwrap();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    assert_eq!(g.assoc_alpha(a, b, c), 0);
                    assert_eq!(g.assoc_beta(a, b, c), 0);
                    assert_eq!(g.bracket_assoc(a, b, c), 0);
                    assert!(g.inner_associator_consistent(a, b, c));
                }
            }
        }
    }

    #[test]
    fn defining_equations_hold() {
        let g = small_group("S3").unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let k = g.commutator(a, b);
                assert_eq!(g.mul(a, b), g.mul(b, g.mul(a, k)));
                assert_eq!(g.mul(a, b), g.mul(g.mul(b, a), g.bracket_comm(a, b)));
            }
        }
    }

    #[test]
    fn permutation_inverse_roundtrip() {
        let p = Permutation::from_images(vec![2, 0, 1]);
        assert!(p.after(&p.inverse()).is_identity());
        assert_eq!(p.images(), &[2, 0, 1]);
    }

    #[test]
    fn bracket_identities_need_swapped_arguments() {
        let q = crate::corpus::chein_double(&small_group("S3").unwrap()).unwrap();
        let n = q.order();
        let mut unswapped_failures = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert!(q.moufang_bracket_identities(a, b, c));
                    unswapped_failures += !q.unswapped_bracket_identities(a, b, c) as usize;
                }
            }
        }
        assert_eq!(unswapped_failures, 324);
    }
}
