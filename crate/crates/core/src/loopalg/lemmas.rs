//! Desk-scale checks for finite Moufang p-loops: nilpotency of the
//! augmentation ideal, the associator/commutator expansions for `1 - B` with
//! `B` nil, and the inclusion of the lower central series in `1 - (ωQ)^{i+1}`.

use serde::Serialize;

use super::{AlgebraElement, LoopAlgebra, PowerChain};
use crate::corpus::is_power_of;
use crate::error::{Error, Result};
use crate::gfpn::FiniteField;
use crate::loopcore::{FiniteLoop, SeriesMode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma11Report {
    pub p: u32,
    pub order: usize,
    /// `(1 - g)^{|g|} = 0` for every element `g`.
    pub binomial_powers_vanish: bool,
    pub power_dims: Vec<usize>,
    pub nilpotency_index: Option<usize>,
}

impl Lemma11Report {
    pub fn holds(&self) -> bool {
        self.binomial_powers_vanish && self.nilpotency_index.is_some()
    }
}

/// For a finite Moufang p-loop `Q`, checks `(1 - g)^{|g|} = 0` in GF(p)Q for
/// each `g` and computes the nilpotency index of `ωQ`.
pub fn lemma11_check(q: &FiniteLoop, p: u32) -> Result<Lemma11Report> {
    let field = FiniteField::new(p, 1)?;
    for g in 1..q.order() {
        let k = q.element_order(g);
        if !is_power_of(k, p as usize) {
            return Err(Error::NotPLoop {
                element: g,
                order: k,
                p,
            });
        }
    }
    if !q.is_moufang() {
        return Err(Error::NotMoufang);
    }
    let alg = LoopAlgebra::new(q.clone(), field)?;
    let binomial_powers_vanish = (0..q.order()).all(|g| {
        let x = alg.one_minus(g);
        alg.is_zero(&alg.pow(&x, q.element_order(g)))
    });
    let mut chain = PowerChain::new(alg.omega().space);
    let index = chain.nilpotency_index(&alg, 4 * q.order() + 4);
    Ok(Lemma11Report {
        p,
        order: q.order(),
        binomial_powers_vanish,
        power_dims: chain.dims(),
        nilpotency_index: index,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma12Outcome {
    /// `[1-u,1-v,1-w] = 1 - ((Σw Σv) Σu)(u,v,w)`
    pub associator_form: bool,
    /// `[1-u,1-v] = 1 + (Σu Σv)(u,v)`
    pub commutator_form: bool,
}

impl Lemma12Outcome {
    pub fn holds(&self) -> bool {
        self.associator_form && self.commutator_form
    }
}

/// Evaluates both sides of the expansions of the loop associator
/// `[a,b,c] = (a.bc)^{-1}(ab.c)` and loop commutator `[a,b] = a^{-1}b^{-1}.ab`
/// at `a = 1-u`, `b = 1-v`, `c = 1-w`, where `u^m = v^m = w^m = 0`.
///
/// The loop side uses inverses obtained by linear solving; the expanded side
/// uses the geometric sums `Σx = 1 + x + ... + x^{m-1}`.
pub fn lemma12_check(
    alg: &LoopAlgebra,
    u: &AlgebraElement,
    v: &AlgebraElement,
    w: &AlgebraElement,
    m: usize,
) -> Result<Lemma12Outcome> {
    for (x, name) in [(u, "u"), (v, "v"), (w, "w")] {
        if x.coeffs().len() != alg.dim() {
            return Err(Error::Mismatch);
        }
        if !alg.is_zero(&alg.pow(x, m)) {
            return Err(Error::NotNilpotent(name));
        }
    }
    let one = alg.one();
    let a = alg.sub(&one, u);
    let b = alg.sub(&one, v);
    let c = alg.sub(&one, w);

    let a_bc = alg.mul(&a, &alg.mul(&b, &c));
    let ab_c = alg.mul(&alg.mul(&a, &b), &c);
    let loop_assoc = alg.mul(&alg.inverse(&a_bc)?, &ab_c);
    let (su, sv, sw) = (
        alg.geometric_sum(u, m),
        alg.geometric_sum(v, m),
        alg.geometric_sum(w, m),
    );
    let factor = alg.mul(&alg.mul(&sw, &sv), &su);
    let expanded_assoc = alg.sub(&one, &alg.mul(&factor, &alg.associator(u, v, w)));

    let loop_comm = alg.mul(
        &alg.mul(&alg.inverse(&a)?, &alg.inverse(&b)?),
        &alg.mul(&a, &b),
    );
    let expanded_comm = alg.add(&one, &alg.mul(&alg.mul(&su, &sv), &alg.commutator(u, v)));

    Ok(Lemma12Outcome {
        associator_form: loop_assoc == expanded_assoc,
        commutator_form: loop_comm == expanded_comm,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma13Level {
    pub i: usize,
    pub term_size: usize,
    /// `dim (ωQ)^{i+1}`
    pub power_dim: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma13Report {
    pub applicable: bool,
    pub nilpotency_index: Option<usize>,
    pub levels: Vec<Lemma13Level>,
    /// `index - 1`: `(ωQ)^{k+1} = 0` forces `Q_k = 1`.
    pub class_bound: Option<usize>,
    pub nilpotency_class: Option<usize>,
    pub bound_holds: bool,
}

impl Lemma13Report {
    pub fn holds(&self) -> bool {
        self.applicable && self.levels.iter().all(|l| l.holds) && self.bound_holds
    }
}

/// Checks `1 - g ∈ (ωQ)^{i+1}` for every `g` in every lower central term `Q_i`.
pub fn lemma13_chain_check(q: &FiniteLoop, field: &FiniteField) -> Result<Lemma13Report> {
    let alg = LoopAlgebra::new(q.clone(), field.clone())?;
    let mut chain = PowerChain::new(alg.omega().space);
    let index = chain.nilpotency_index(&alg, 4 * q.order() + 4);
    let Some(index) = index else {
        return Ok(Lemma13Report {
            applicable: false,
            nilpotency_index: None,
            levels: Vec::new(),
            class_bound: None,
            nilpotency_class: None,
            bound_holds: false,
        });
    };
    let lower = q.lower_central_series(SeriesMode::General)?;
    chain.extend_to(&alg, lower.chain.len() + 1);
    let f = alg.field();
    let levels = lower
        .chain
        .iter()
        .enumerate()
        .map(|(i, term)| {
            let power = chain.power(i + 1);
            Lemma13Level {
                i,
                term_size: term.len(),
                power_dim: power.rank(),
                holds: term
                    .members()
                    .iter()
                    .all(|&g| power.contains(f, alg.one_minus(g).coeffs())),
            }
        })
        .collect();
    let class = lower.class;
    let bound = index - 1;
    Ok(Lemma13Report {
        applicable: true,
        nilpotency_index: Some(index),
        levels,
        class_bound: Some(bound),
        nilpotency_class: class,
        bound_holds: class.is_some_and(|c| c <= bound),
    })
}
