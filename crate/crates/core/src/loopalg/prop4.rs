//! Finite checks of the structure of augmentation ideals of normal subloops.

use serde::Serialize;

use super::{IdealHandle, LoopAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::loopcore::{FiniteLoop, LoopMap, Subloop};
use crate::report::CheckList;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop4Report {
    pub order: usize,
    pub h1_size: usize,
    pub h2_size: usize,
    /// Whether `H1` or `H2` is a proper nontrivial normal subloop. Recorded only.
    pub nonsimple_witnessed: bool,
    pub omega_h1_dim: usize,
    pub omega_h2_dim: usize,
    pub checks: CheckList,
}

impl Prop4Report {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

fn span_of(
    alg: &LoopAlgebra,
    vs: impl IntoIterator<Item = Vec<crate::gfpn::FieldElement>>,
) -> Subspace {
    Subspace::span(alg.field(), alg.dim(), vs)
}

/// `FQ/ωH ≅ F(Q/H)`: coset representatives are independent modulo `ωH`, span
/// the quotient, and multiply according to the table of `Q/H`.
fn quotient_checks(
    alg: &LoopAlgebra,
    h: &Subloop,
    wh: &IdealHandle,
    label: &str,
    out: &mut CheckList,
) -> Result<()> {
    let q = alg.loop_();
    let f = alg.field();
    let (qh, proj): (FiniteLoop, LoopMap) = q.quotient(h)?;
    let cosets = qh.order();
    let quotient_dim = alg.dim() - wh.space.rank();
    out.push(
        format!("4.{label}.dimension"),
        quotient_dim == cosets,
        format!("dim FQ/wH = {quotient_dim}, |Q/H| = {cosets}"),
    );

    let mut reps = vec![usize::MAX; cosets];
    for g in 0..q.order() {
        let c = proj.apply(g);
        if reps[c] == usize::MAX {
            reps[c] = g;
        }
    }
    let with_reps = reps.iter().fold(wh.space.clone(), |mut s, &r| {
        s.insert(f, alg.basis(r).into_coeffs());
        s
    });
    out.check(
        format!("4.{label}.representatives_form_basis"),
        with_reps.rank() == alg.dim() && wh.space.rank() + cosets == alg.dim(),
    );

    let congruent = |x: usize, y: usize| {
        x == y
            || wh
                .space
                .contains(f, alg.sub(&alg.basis(x), &alg.basis(y)).coeffs())
    };
    let mut constants_match = true;
    'outer: for a in 0..q.order() {
        for b in 0..q.order() {
            let target = reps[qh.mul(proj.apply(a), proj.apply(b))];
            if !congruent(q.mul(a, b), target) {
                constants_match = false;
                break 'outer;
            }
        }
    }
    out.check(format!("4.{label}.structure_constants"), constants_match);

    // ωQ/ωH ≅ ω(Q/H): both sides have dimension |Q/H| - 1.
    let omega_q = alg.omega();
    let lhs = omega_q.space.rank() - wh.space.rank();
    let qh_alg = LoopAlgebra::new(qh, f.clone())?;
    let rhs = qh_alg.omega().space.rank();
    out.push(
        format!("4.{label}.omega_quotient"),
        lhs == rhs && wh.space.is_subspace_of(f, &omega_q.space),
        format!("dim wQ/wH = {lhs}, dim w(Q/H) = {rhs}"),
    );
    Ok(())
}

fn lemma4_holds(alg: &LoopAlgebra, h: &Subloop, wh: &IdealHandle) -> bool {
    let f = alg.field();
    (0..alg.dim()).all(|g| h.contains(g) == wh.space.contains(f, alg.one_minus(g).coeffs()))
}

/// Runs items 1-6 and the membership criterion `h ∈ H ⇔ 1 - h ∈ ωH` for the
/// normal subloops `h1` and `h2`.
pub fn prop4_suite(alg: &LoopAlgebra, h1: &Subloop, h2: &Subloop) -> Result<Prop4Report> {
    let q = alg.loop_();
    let f = alg.field();
    let n = alg.dim();
    for h in [h1, h2] {
        if h.parent_order() != n || !q.is_normal(h) {
            return Err(Error::NotNormal);
        }
    }
    let mut checks = CheckList::new();

    let full = Subspace::full(f, n);
    checks.check(
        "1.loop_spans_algebra",
        span_of(alg, (0..n).map(|g| alg.basis(g).into_coeffs())) == full,
    );

    let omega_q = alg.omega();
    let differences = span_of(alg, (0..n).map(|g| alg.one_minus(g).into_coeffs()));
    checks.check("2.differences_span_omega", differences == omega_q.space);

    let kernel = alg.augmentation_kernel();
    checks.push(
        "3.omega_is_augmentation_kernel",
        omega_q.space == kernel && kernel.rank() == n - 1,
        format!("dim wQ = {}", omega_q.space.rank()),
    );

    let w1 = alg.omega_ideal(h1)?;
    let w2 = alg.omega_ideal(h2)?;
    quotient_checks(alg, h1, &w1, "h1", &mut checks)?;
    quotient_checks(alg, h2, &w2, "h2", &mut checks)?;

    for (label, h, w) in [("h1", h1, &w1), ("h2", h2, &w2)] {
        let gens: Vec<_> = q
            .generators(h)
            .into_iter()
            .map(|g| alg.one_minus(g))
            .collect();
        let generated = alg.ideal_generated(&gens, "generated");
        checks.check(format!("5.{label}.generators"), generated.space == w.space);
    }
    if h1 != h2 {
        checks.check("5.distinct_subloops_distinct_ideals", w1.space != w2.space);
    }
    let strict = |a: &Subloop, b: &Subloop| a.is_subset_of(b) && a.len() < b.len();
    for (a, wa, b, wb, label) in [
        (h1, &w1, h2, &w2, "h1_in_h2"),
        (h2, &w2, h1, &w1, "h2_in_h1"),
    ] {
        if strict(a, b) {
            checks.check(
                format!("5.monotone.{label}"),
                wa.space.is_subspace_of(f, &wb.space) && wa.space.rank() < wb.space.rank(),
            );
        }
    }
    let join = q.join(h1, h2);
    let wj = alg.omega_ideal(&join)?;
    checks.check("5.join", wj.space == w1.space.sum(f, &w2.space));

    let scalars = span_of(alg, [alg.one().into_coeffs()]);
    checks.check(
        "6.scalars_meet_omega_trivially",
        scalars.intersection_rank(f, &omega_q.space) == 0,
    );
    checks.check(
        "6.scalars_plus_omega_is_everything",
        scalars.sum(f, &omega_q.space) == full,
    );

    checks.check("lemma4.h1", lemma4_holds(alg, h1, &w1));
    checks.check("lemma4.h2", lemma4_holds(alg, h2, &w2));

    let proper = |h: &Subloop| !h.is_trivial() && !h.is_whole();
    Ok(Prop4Report {
        order: n,
        h1_size: h1.len(),
        h2_size: h2.len(),
        nonsimple_witnessed: proper(h1) || proper(h2),
        omega_h1_dim: w1.space.rank(),
        omega_h2_dim: w2.space.rank(),
        checks,
    })
}
