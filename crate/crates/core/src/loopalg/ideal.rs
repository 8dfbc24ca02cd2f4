//! Two-sided ideals of FQ, augmentation ideals and ideal powers.

use super::{AlgebraElement, LoopAlgebra};
use crate::error::{Error, Result};
use crate::gfpn::FieldElement;
use crate::linalg::Subspace;
use crate::loopcore::Subloop;

/// A subspace of FQ closed under multiplication by FQ on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle {
    pub space: Subspace,
    pub description: String,
}

impl LoopAlgebra {
    /// Least two-sided ideal containing `generators`. Closing under left and
    /// right multiplication by the loop basis suffices by bilinearity.
    pub fn ideal_generated(&self, generators: &[AlgebraElement], description: &str) -> IdealHandle {
        let f = self.field();
        let mut space = Subspace::zero(self.dim());
        let mut queue: Vec<Vec<FieldElement>> = Vec::new();
        for g in generators {
            if space.insert(f, g.coeffs().to_vec()) {
                queue.push(g.coeffs().to_vec());
            }
        }
        while let Some(v) = queue.pop() {
            for g in 0..self.dim() {
                for w in [self.left_basis_mul(g, &v), self.right_basis_mul(&v, g)] {
                    if !space.contains(f, &w) {
                        space.insert(f, w.clone());
                        queue.push(w);
                    }
                }
            }
        }
        let ideal = IdealHandle {
            space,
            description: description.to_string(),
        };
        debug_assert!(self.is_ideal(&ideal.space));
        ideal
    }

    /// Whether every basis vector stays inside under left and right
    /// multiplication by every loop element.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let f = self.field();
        s.basis().iter().all(|v| {
            (0..self.dim()).all(|g| {
                s.contains(f, &self.left_basis_mul(g, v))
                    && s.contains(f, &self.right_basis_mul(v, g))
            })
        })
    }

    /// `ωH`: the ideal generated by `1 - h` for `h` in a normal subloop `H`.
    pub fn omega_ideal(&self, h: &Subloop) -> Result<IdealHandle> {
        if h.parent_order() != self.dim() || !self.loop_().is_normal(h) {
            return Err(Error::NotNormal);
        }
        let gens: Vec<AlgebraElement> = h.members().iter().map(|&x| self.one_minus(x)).collect();
        let desc = if h.is_whole() {
            "omega(Q)".to_string()
        } else {
            format!("omega(H), |H| = {}", h.len())
        };
        Ok(self.ideal_generated(&gens, &desc))
    }

    /// `ωQ`, the augmentation ideal.
    pub fn omega(&self) -> IdealHandle {
        self.omega_ideal(&self.loop_().whole())
            .expect("the whole loop is normal")
    }

    /// Span of all products `u v` with `u` in `a` and `v` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let f = self.field();
        let mut out = Subspace::zero(self.dim());
        for u in a.basis() {
            for v in b.basis() {
                out.insert(f, self.mul_raw(u, v));
            }
        }
        out
    }

    /// `S^k`: products of `k` elements of `S` under every bracketing.
    pub fn ideal_power(&self, s: &IdealHandle, k: usize) -> Subspace {
        assert!(k >= 1, "powers start at 1");
        let mut chain = PowerChain::new(s.space.clone());
        chain.extend_to(self, k);
        chain.power(k).clone()
    }

    /// Least `k <= cap` with `S^k = 0`; `None` when no such `k` exists within
    /// the cap, or when the powers have provably stabilized at a nonzero space.
    pub fn nilpotency_index(&self, s: &IdealHandle, cap: usize) -> Option<usize> {
        PowerChain::new(s.space.clone()).nilpotency_index(self, cap)
    }
}

/// The descending chain `S = P_1 ⊇ P_2 ⊇ ...` with
/// `P_k = Σ_{i=1}^{k-1} P_i P_{k-i}`.
#[derive(Clone, Debug)]
pub struct PowerChain {
    powers: Vec<Subspace>,
}

impl PowerChain {
    pub fn new(s: Subspace) -> Self {
        PowerChain { powers: vec![s] }
    }

    /// `P_k`, 1-based. Must already be computed.
    pub fn power(&self, k: usize) -> &Subspace {
        &self.powers[k - 1]
    }

    pub fn computed(&self) -> usize {
        self.powers.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::rank).collect()
    }

    fn push_next(&mut self, alg: &LoopAlgebra) {
        let k = self.powers.len() + 1;
        let f = alg.field();
        let mut next = Subspace::zero(alg.dim());
        for i in 1..k {
            let (a, b) = (&self.powers[i - 1], &self.powers[k - i - 1]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let prod = alg.product_space(a, b);
            next = next.sum(f, &prod);
        }
        self.powers.push(next);
    }

    pub fn extend_to(&mut self, alg: &LoopAlgebra, k: usize) {
        while self.powers.len() < k {
            self.push_next(alg);
        }
    }

    /// Computes powers until one vanishes or the chain is provably stuck.
    ///
    /// `P_k` depends only on `P_1..P_{k-1}`; if `P_s = P_{s+1} = ... = P_{2s}`
    /// then every later power equals `P_s`, so a plateau that lasts from `s`
    /// through `2s` ends the search.
    pub fn nilpotency_index(&mut self, alg: &LoopAlgebra, cap: usize) -> Option<usize> {
        let mut plateau_start = 1;
        for k in 1..=cap {
            self.extend_to(alg, k);
            let p = self.power(k);
            if p.is_zero() {
                return Some(k);
            }
            if k > 1 && !p.same_span(self.power(k - 1)) {
                plateau_start = k;
            }
            if k >= 2 * plateau_start && k > 1 {
                return None;
            }
        }
        None
    }

    /// Whether `P_{k+1} ⊆ P_k` for every computed pair.
    pub fn is_descending(&self, alg: &LoopAlgebra) -> bool {
        self.powers
            .windows(2)
            .all(|w| w[1].is_subspace_of(alg.field(), &w[0]))
    }
}
