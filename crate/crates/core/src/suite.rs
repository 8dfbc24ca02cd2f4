//! The thirteen acceptance checks, shared by `verify-all` and the test suite.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus::{self, chein_double, corpus_loop, small_group, CorpusEntry};
use crate::error::Result;
use crate::gfpn::FiniteField;
use crate::loopalg::{
    lemma11_check, lemma12_check, lemma13_chain_check, prop4_suite, LoopAlgebra, PowerChain,
};
use crate::loopcore::{FiniteLoop, SeriesMode, Subloop, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::paige::{build_m, build_m0, classify_embeddability};
use crate::report::CheckList;
use crate::zorn::{ZornAlgebra, ZornMatrix};

pub const CRITERIA: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random triples per field for the sampled Zorn laws.
    pub zorn_samples: usize,
    /// Random triples for the checks on `M(GF(2))` and in `ωQ`.
    pub triples: usize,
    /// Check every triple of `M(GF(2))` instead of sampling.
    pub full: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            zorn_samples: DEFAULT_SAMPLES,
            triples: 1000,
            full: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub checks: CheckList,
}

pub fn title(id: usize) -> &'static str {
    match id {
        1 => "Zorn algebra laws over GF(2), exhaustive",
        2 => "Zorn algebra laws over GF(3) and GF(5), sampled",
        3 => "orders of M0(GF(2)), M0(GF(3)) and M(GF(3))",
        4 => "M(GF(2)) is a simple nonassociative Moufang loop",
        5 => "associator consistency and bracket identities",
        6 => "general and Moufang lower central series agree",
        7 => "upper and lower central series terminate together",
        8 => "finite Moufang p-loops are centrally nilpotent",
        9 => "augmentation ideals of Moufang 2-loops are nilpotent",
        10 => "associator and commutator expansions in 1 - B",
        11 => "lower central terms lie in 1 - (wQ)^(i+1)",
        12 => "augmentation ideals of normal subloops",
        13 => "square-root closure of finite fields",
        _ => "unknown",
    }
}

/// Runs one criterion. Construction errors count as failures, with the
/// error recorded in the check list.
pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> CriterionResult {
    let outcome = match id {
        1 => c1_zorn_exhaustive(),
        2 => c2_zorn_sampled(cfg),
        3 => c3_orders(),
        4 => c4_paige_gf2(),
        5 => c5_brackets(cfg),
        6 => c6_prop1(),
        7 => c7_prop2(),
        8 => c8_prop5(),
        9 => c9_lemma11(),
        10 => c10_lemma12(cfg),
        11 => c11_lemma13(),
        12 => c12_prop4(),
        13 => c13_sqrt(),
        _ => {
            let mut c = CheckList::new();
            c.push("criterion", false, format!("no criterion {id}"));
            Ok(c)
        }
    };
    let checks = outcome.unwrap_or_else(|e| {
        let mut c = CheckList::new();
        c.push("construction", false, e.to_string());
        c
    });
    CriterionResult {
        id,
        title: title(id),
        passed: !checks.is_empty() && checks.all_passed(),
        checks,
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|id| run_criterion(id, cfg)).collect()
}

fn gf(p: u32) -> FiniteField {
    FiniteField::new(p, 1).expect("prime")
}

fn random_zorn(alg: &ZornAlgebra, rng: &mut ChaCha8Rng) -> ZornMatrix {
    let f = alg.field();
    let q = f.order();
    let c = std::array::from_fn(|_| f.from_index(rng.random_range(0..q)).expect("below q"));
    ZornMatrix::from_components(c)
}

/// Violations of `(x,x,y) = (y,x,x) = 0`, `n(xy) = n(x)n(y)`,
/// `x^2 - t(x)x + n(x) = 0` among the given pairs.
fn zorn_law_violations(alg: &ZornAlgebra, x: &ZornMatrix, y: &ZornMatrix) -> [bool; 3] {
    let f = alg.field();
    let alt = alg.is_zero(&alg.associator(x, x, y)) && alg.is_zero(&alg.associator(y, x, x));
    let comp = alg.norm(&alg.mul(x, y)) == f.mul(alg.norm(x), alg.norm(y));
    let quad = alg.is_zero(&alg.add(
        &alg.sub(&alg.mul(x, x), &alg.scale(alg.trace(x), x)),
        &alg.scalar(alg.norm(x)),
    ));
    [!alt, !comp, !quad]
}

fn c1_zorn_exhaustive() -> Result<CheckList> {
    let alg = ZornAlgebra::new(gf(2));
    let all: Vec<ZornMatrix> = (0..alg.size()).map(|c| alg.decode(c)).collect();
    let mut bad = [0usize; 3];
    for x in &all {
        for y in &all {
            let v = zorn_law_violations(&alg, x, y);
            bad[0] += v[0] as usize;
            bad[1] += v[1] as usize;
        }
        bad[2] += zorn_law_violations(&alg, x, x)[2] as usize;
    }
    let mut c = CheckList::new();
    let pairs = all.len() * all.len();
    c.push(
        "alternative",
        bad[0] == 0,
        format!("{} of {pairs} pairs violate", bad[0]),
    );
    c.push(
        "composition",
        bad[1] == 0,
        format!("{} of {pairs} pairs violate", bad[1]),
    );
    c.push(
        "quadratic",
        bad[2] == 0,
        format!("{} of {} elements violate", bad[2], all.len()),
    );
    Ok(c)
}

fn c2_zorn_sampled(cfg: &SuiteConfig) -> Result<CheckList> {
    let mut c = CheckList::new();
    for p in [3, 5] {
        let alg = ZornAlgebra::new(gf(p));
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ p as u64);
        let mut bad = [0usize; 4];
        for _ in 0..cfg.zorn_samples {
            let (x, y, z) = (
                random_zorn(&alg, &mut rng),
                random_zorn(&alg, &mut rng),
                random_zorn(&alg, &mut rng),
            );
            for (i, v) in zorn_law_violations(&alg, &x, &y).iter().enumerate() {
                bad[i] += *v as usize;
            }
            let lhs = alg.mul(&alg.mul(&alg.mul(&x, &y), &x), &z);
            let rhs = alg.mul(&x, &alg.mul(&y, &alg.mul(&x, &z)));
            bad[3] += (lhs != rhs) as usize;
        }
        let n = cfg.zorn_samples;
        for (name, b) in ["alternative", "composition", "quadratic", "moufang"]
            .iter()
            .zip(bad)
        {
            c.push(
                format!("GF({p}).{name}"),
                b == 0,
                format!("{b} of {n} samples violate"),
            );
        }
    }
    Ok(c)
}

fn c3_orders() -> Result<CheckList> {
    let mut c = CheckList::new();
    for p in [2u32, 3] {
        let m0 = build_m0(&gf(p), 3)?;
        let q = p as usize;
        let expected = q.pow(3) * (q.pow(4) - 1);
        c.push(
            format!("|M0(GF({p}))|"),
            m0.loop_.order() == expected,
            format!("{} enumerated, q^3(q^4-1) = {expected}", m0.loop_.order()),
        );
    }
    let b = build_m(&gf(3), 3)?;
    c.push(
        "|Z(M0(GF(3)))|",
        b.center.len() == 2,
        format!("{}", b.center.len()),
    );
    c.push(
        "|M(GF(3))|",
        b.m.order() == 1080,
        format!("{}", b.m.order()),
    );
    c.check(
        "projection is a homomorphism",
        b.projection.is_homomorphism(&b.m0.loop_, &b.m),
    );
    Ok(c)
}

fn c4_paige_gf2() -> Result<CheckList> {
    let b = build_m(&gf(2), 3)?;
    let m = &b.m;
    let mut c = CheckList::new();
    c.push("order", m.order() == 120, format!("{}", m.order()));
    c.check("moufang", m.is_moufang());
    c.check("inverse property", m.is_ip_loop());
    c.check("nonassociative", !m.is_associative());
    c.check("simple (all singleton normal closures)", m.is_simple());
    let bad: Vec<usize> = (0..m.order())
        .filter(|&g| 120 % m.element_order(g) != 0)
        .collect();
    c.push(
        "element orders divide 120",
        bad.is_empty(),
        format!("{bad:?}"),
    );
    Ok(c)
}

fn bracket_checks(
    name: &str,
    q: &FiniteLoop,
    triples: &[(usize, usize, usize)],
    c: &mut CheckList,
) {
    let inconsistent = triples
        .iter()
        .filter(|&&(a, b, d)| !q.inner_associator_consistent(a, b, d))
        .count();
    c.push(
        format!("{name}.consistency"),
        inconsistent == 0,
        format!("{inconsistent} of {} violate", triples.len()),
    );
    if q.is_moufang() {
        let bracket_bad = triples
            .iter()
            .filter(|&&(a, b, d)| !q.moufang_bracket_identities(a, b, d))
            .count();
        let unswapped = triples
            .iter()
            .filter(|&&(a, b, d)| !q.unswapped_bracket_identities(a, b, d))
            .count();
        c.push(
            format!("{name}.brackets"),
            bracket_bad == 0,
            format!(
                "{bracket_bad} of {} violate; unswapped argument order fails on {unswapped}",
                triples.len()
            ),
        );
    }
}

fn all_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                v.push((a, b, d));
            }
        }
    }
    v
}

fn c5_brackets(cfg: &SuiteConfig) -> Result<CheckList> {
    let mut c = CheckList::new();
    for e in corpus::corpus().iter().filter(|e| e.loop_.order() <= 16) {
        bracket_checks(&e.name, &e.loop_, &all_triples(e.loop_.order()), &mut c);
    }
    let m = build_m(&gf(2), 3)?.m;
    let triples = if cfg.full {
        all_triples(m.order())
    } else {
        m.random_triples(cfg.triples, cfg.seed)
    };
    bracket_checks("M(GF(2))", &m, &triples, &mut c);
    Ok(c)
}

fn moufang_entries() -> Vec<CorpusEntry> {
    corpus::corpus()
        .into_iter()
        .filter(CorpusEntry::is_moufang)
        .collect()
}

fn c6_prop1() -> Result<CheckList> {
    let mut c = CheckList::new();
    for e in moufang_entries()
        .iter()
        .filter(|e| (4..=32).contains(&e.loop_.order()))
    {
        let general = e.loop_.lower_central_series(SeriesMode::General)?;
        let moufang = e.loop_.lower_central_series(SeriesMode::Moufang)?;
        c.push(
            e.name.clone(),
            general.chain == moufang.chain,
            format!(
                "sizes {:?}",
                general.chain.iter().map(Subloop::len).collect::<Vec<_>>()
            ),
        );
    }
    Ok(c)
}

fn c7_prop2() -> Result<CheckList> {
    let mut c = CheckList::new();
    for e in corpus::corpus() {
        let upper = e.loop_.upper_central_series();
        let lower = e.loop_.lower_central_series(SeriesMode::General)?;
        if upper.class.is_none() && lower.class.is_none() {
            continue;
        }
        let mut ok = upper.class == lower.class;
        if ok {
            ok = e.loop_.nilpotency_class() == upper.class
                && e.loop_.central_series_bounds_hold(&lower.chain);
        }
        c.push(
            e.name.clone(),
            ok,
            format!("upper {:?}, lower {:?}", upper.class, lower.class),
        );
    }
    Ok(c)
}

fn c8_prop5() -> Result<CheckList> {
    let mut c = CheckList::new();
    for name in ["Q8", "D4"] {
        let q = chein_double(&small_group(name)?)?;
        let class = q.nilpotency_class();
        c.push(
            format!("chein-{name} nilpotent"),
            class.is_some(),
            format!("class {class:?}"),
        );
    }
    for e in corpus::corpus() {
        if e.loop_.order() > 1 && e.p_loop() == Some(2) && !e.name.starts_with("chein-") {
            let class = e.loop_.nilpotency_class();
            c.push(
                format!("{} nilpotent", e.name),
                class.is_some(),
                format!("class {class:?}"),
            );
        }
    }
    for (label, q) in [
        ("chein-S3", chein_double(&small_group("S3")?)?),
        ("S3", small_group("S3")?),
    ] {
        let class = q.nilpotency_class();
        c.push(
            format!("{label} not nilpotent"),
            class.is_none(),
            format!("class {class:?}"),
        );
    }
    Ok(c)
}

fn c9_lemma11() -> Result<CheckList> {
    let mut c = CheckList::new();
    for e in moufang_entries() {
        if e.p_loop() == Some(2) && e.loop_.order() <= 32 {
            let r = lemma11_check(&e.loop_, 2)?;
            c.push(
                e.name.clone(),
                r.holds(),
                format!("index {:?}, dims {:?}", r.nilpotency_index, r.power_dims),
            );
        }
    }
    let z4 = LoopAlgebra::new(small_group("Z4")?, gf(2))?;
    let mut chain = PowerChain::new(z4.omega().space);
    let index = chain.nilpotency_index(&z4, 16);
    let last_nonzero = index.map(|k| k - 1);
    // GF(2)Z4 = GF(2)[t]/(t^4) with t = 1 + g: t^3 != 0, t^4 = 0.
    c.push(
        "Z4/GF(2) index",
        index == Some(4),
        format!(
            "least vanishing power {index:?}; last nonzero power {last_nonzero:?}; dims {:?}",
            chain.dims()
        ),
    );
    let z3 = LoopAlgebra::new(small_group("Z3")?, gf(2))?;
    let mut chain = PowerChain::new(z3.omega().space);
    let index = z3.nilpotency_index(&z3.omega(), 64);
    chain.extend_to(&z3, 4);
    c.push(
        "Z3/GF(2) not nilpotent",
        index.is_none() && chain.power(4).rank() > 0,
        format!("dims {:?}", chain.dims()),
    );
    Ok(c)
}

fn c10_lemma12(cfg: &SuiteConfig) -> Result<CheckList> {
    let q = corpus_loop("chein-Q8")?;
    let alg = LoopAlgebra::new(q, gf(2))?;
    let omega = alg.omega();
    let m = alg
        .nilpotency_index(&omega, 64)
        .expect("Moufang 2-loop over GF(2)");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut assoc_bad, mut comm_bad) = (0, 0);
    for _ in 0..cfg.triples {
        let u = alg.random_in(&omega.space, &mut rng);
        let v = alg.random_in(&omega.space, &mut rng);
        let w = alg.random_in(&omega.space, &mut rng);
        let r = lemma12_check(&alg, &u, &v, &w, m)?;
        assoc_bad += !r.associator_form as usize;
        comm_bad += !r.commutator_form as usize;
    }
    let mut c = CheckList::new();
    let n = cfg.triples;
    c.push(
        "associator form",
        assoc_bad == 0,
        format!("{assoc_bad} of {n} violate, m = {m}"),
    );
    c.push(
        "commutator form",
        comm_bad == 0,
        format!("{comm_bad} of {n} violate, m = {m}"),
    );
    Ok(c)
}

fn c11_lemma13() -> Result<CheckList> {
    let mut c = CheckList::new();
    let f = gf(2);
    for e in moufang_entries() {
        if e.p_loop() == Some(2) {
            let r = lemma13_chain_check(&e.loop_, &f)?;
            c.push(
                e.name.clone(),
                r.holds(),
                format!("class {:?}, bound {:?}", r.nilpotency_class, r.class_bound),
            );
        }
    }
    Ok(c)
}

fn c12_prop4() -> Result<CheckList> {
    let z4 = small_group("Z4")?;
    let z4_h1 = z4.subloop(&[0, 2])?;
    let z4_h2 = z4.whole();
    let cq8 = corpus_loop("chein-Q8")?;
    let cq8_h1 = cq8.center();
    let cq8_h2 = cq8.whole();
    let d = small_group("D4xZ2")?;
    let d_h1 = d.subloop(&[0, 1])?;
    let d_h2 = d.center();
    let cases = [
        ("Z4", &z4, z4_h1, z4_h2),
        ("chein-Q8", &cq8, cq8_h1, cq8_h2),
        ("D4xZ2", &d, d_h1, d_h2),
    ];
    let mut c = CheckList::new();
    for (name, q, h1, h2) in cases {
        for p in [2, 3] {
            let alg = LoopAlgebra::new(q.clone(), gf(p))?;
            let r = prop4_suite(&alg, &h1, &h2)?;
            c.extend(&format!("{name}/GF({p})."), r.checks);
        }
    }
    Ok(c)
}

fn c13_sqrt() -> Result<CheckList> {
    let mut c = CheckList::new();
    for q in 2u32..=81 {
        let Some((p, n)) = prime_power(q) else {
            continue;
        };
        let field = FiniteField::new(p, n)?;
        let closed = field.is_closed_under_sqrt();
        let report = classify_embeddability(p, n)?;
        if p == 2 {
            c.push(format!("GF({q}) closed"), closed, "");
            continue;
        }
        let euler_all = field
            .elements()
            .all(|a| field.euler_criterion(a) == Some(field.is_square(a)));
        let euler_closed = field
            .elements()
            .all(|a| field.euler_criterion(a) == Some(true));
        c.push(
            format!("GF({q}) euler"),
            euler_all && closed == euler_closed && report.closed_under_sqrt == closed,
            format!("closed {closed}"),
        );
        c.push(
            format!("GF({q}) parity comparison"),
            report.disagrees_with_parity_claim.is_some(),
            format!(
                "n even {:?}, disagrees {:?}",
                report.parity_claim, report.disagrees_with_parity_claim
            ),
        );
    }
    Ok(c)
}

/// `(p, n)` with `q = p^n`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut n) = (q, 0);
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(99, &SuiteConfig::default()).passed);
    }

    #[test]
    fn cheap_criteria_pass() {
        let cfg = SuiteConfig {
            zorn_samples: 200,
            triples: 50,
            ..SuiteConfig::default()
        };
        for id in [2, 6, 9, 12, 13] {
            let r = run_criterion(id, &cfg);
            assert!(
                r.passed,
                "{id}: {:?}",
                r.checks.failures().collect::<Vec<_>>()
            );
        }
    }
}
