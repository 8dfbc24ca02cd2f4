//! The loops `M0(F)` (norm one), `U(F)` (units) and `M(F) = M0(F)/{±1}` of
//! the Zorn algebra over a finite field, plus the square-root classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfpn::{FieldElement, FiniteField};
use crate::loopcore::{FiniteLoop, LoopMap, Subloop};
use crate::zorn::{NormTarget, ZornAlgebra, ZornMatrix, MAX_ENUMERATION_Q};

/// Largest field order built without an explicit override.
pub const DEFAULT_MAX_Q: u32 = 3;

/// A loop whose elements are Zorn matrices, with the dense lookup back.
#[derive(Clone, Debug)]
pub struct ZornLoop {
    pub loop_: FiniteLoop,
    pub elements: Vec<ZornMatrix>,
    code_index: Vec<u32>,
    algebra: ZornAlgebra,
}

impl ZornLoop {
    fn build(algebra: ZornAlgebra, target: NormTarget) -> Result<Self> {
        let mut elements = algebra.enumerate_by_norm(target)?;
        let one = algebra.one();
        let id = elements
            .iter()
            .position(|e| *e == one)
            .expect("1 has norm 1");
        elements.swap(0, id);
        let mut code_index = vec![u32::MAX; algebra.size() as usize];
        for (i, e) in elements.iter().enumerate() {
            code_index[algebra.encode(e) as usize] = i as u32;
        }
        let loop_ = FiniteLoop::from_fn(elements.len(), |x, y| {
            let prod = algebra.mul(&elements[x], &elements[y]);
            let idx = code_index[algebra.encode(&prod) as usize];
            assert!(idx != u32::MAX, "product left the element set");
            idx as usize
        })?;
        Ok(ZornLoop {
            loop_,
            elements,
            code_index,
            algebra,
        })
    }

    pub fn algebra(&self) -> &ZornAlgebra {
        &self.algebra
    }

    pub fn index_of(&self, a: &ZornMatrix) -> Option<usize> {
        let code = self.algebra.encode(a) as usize;
        self.code_index
            .get(code)
            .filter(|&&i| i != u32::MAX)
            .map(|&i| i as usize)
    }

    pub fn norm_of(&self, i: usize) -> FieldElement {
        self.algebra.norm(&self.elements[i])
    }
}

#[derive(Clone, Debug)]
pub struct PaigeBundle {
    pub field: FiniteField,
    pub m0: ZornLoop,
    pub m: FiniteLoop,
    /// Projection `M0 -> M`; the identity map in characteristic 2.
    pub projection: LoopMap,
    /// Center of `M0`, verified to be `{1, -1}`.
    pub center: Subloop,
}

fn guard(field: &FiniteField, limit: u32) -> Result<()> {
    let q = field.order();
    if q > limit.min(MAX_ENUMERATION_Q) {
        return Err(Error::FieldTooLarge(q as u64));
    }
    Ok(())
}

/// `M0(F)`. Fields above `max_q` (at most 5) are refused.
pub fn build_m0(field: &FiniteField, max_q: u32) -> Result<ZornLoop> {
    guard(field, max_q)?;
    let alg = ZornAlgebra::new(field.clone());
    ZornLoop::build(alg, NormTarget::Value(field.one()))
}

/// `M0(F)` together with `M(F) = M0(F)/Z(M0)`.
pub fn build_m(field: &FiniteField, max_q: u32) -> Result<PaigeBundle> {
    let m0 = build_m0(field, max_q)?;
    let minus_one = m0
        .index_of(&m0.algebra.neg(&m0.algebra.one()))
        .expect("-1 has norm 1");
    let center = m0.loop_.center();
    let mut expected = vec![0, minus_one];
    expected.sort_unstable();
    expected.dedup();
    if center.members() != expected.as_slice() {
        return Err(Error::CenterMismatch {
            computed: center.members().to_vec(),
            expected,
        });
    }
    let (m, projection) = if center.is_trivial() {
        let n = m0.loop_.order();
        (m0.loop_.clone(), LoopMap::new((0..n).collect(), n))
    } else {
        m0.loop_.quotient(&center)?
    };
    Ok(PaigeBundle {
        field: field.clone(),
        m0,
        m,
        projection,
        center,
    })
}

/// `U(F)`, the loop of all matrices with nonzero norm. Refused above `max_q`;
/// the default limit is GF(2).
pub fn build_unit_loop(field: &FiniteField, max_q: u32) -> Result<ZornLoop> {
    guard(field, max_q)?;
    let alg = ZornAlgebra::new(field.clone());
    ZornLoop::build(alg, NormTarget::Nonzero)
}

impl ZornLoop {
    /// Whether `u -> n(u)` is multiplicative on every pair.
    pub fn norm_is_homomorphism(&self) -> bool {
        let f = self.algebra.field();
        let norms: Vec<FieldElement> = (0..self.elements.len()).map(|i| self.norm_of(i)).collect();
        let n = self.loop_.order();
        (0..n).all(|x| (0..n).all(|y| norms[self.loop_.mul(x, y)] == f.mul(norms[x], norms[y])))
    }

    /// Elements of norm 1, as a subloop.
    pub fn norm_kernel(&self) -> Subloop {
        let one = self.algebra.field().one();
        let members: Vec<usize> = (0..self.elements.len())
            .filter(|&i| self.norm_of(i) == one)
            .collect();
        self.loop_
            .subloop(&members)
            .expect("norm-one elements form a subloop")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ClaimedNonEmbeddable,
    Embeddable,
}

/// Square-root closure of GF(p^n), compared with the claim that for odd `p`
/// closure holds exactly when `n` is even.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub characteristic: u32,
    pub closed_under_sqrt: bool,
    /// `n` even; only stated for odd characteristic.
    pub parity_claim: Option<bool>,
    pub disagrees_with_parity_claim: Option<bool>,
    pub verdict: Verdict,
}

pub fn classify_embeddability(p: u32, n: u32) -> Result<ClassificationReport> {
    let field = FiniteField::new(p, n)?;
    let closed = field.is_closed_under_sqrt();
    let parity_claim = (p != 2).then_some(n.is_multiple_of(2));
    let verdict = if p != 2 && closed {
        Verdict::ClaimedNonEmbeddable
    } else {
        Verdict::Embeddable
    };
    Ok(ClassificationReport {
        p,
        n,
        q: field.order(),
        characteristic: p,
        closed_under_sqrt: closed,
        parity_claim,
        disagrees_with_parity_claim: parity_claim.map(|c| c != closed),
        verdict,
    })
}
