//! Acceptance suite: one PASS/FAIL line per criterion, then the independent
//! oracles the criteria are frozen against. Exits nonzero on any failure.

use moufang::corpus::{corpus_loop, small_group};
use moufang::gfpn::FiniteField;
use moufang::loopalg::LoopAlgebra;
use moufang::paige::build_m0;
use moufang::suite::{run_criterion, SuiteConfig, CRITERIA};
use moufang::zorn::{ZornAlgebra, ZornMatrix};

type Ints = [i64; 8];

/// Zorn product written out from the component rule, on integer tuples mod p.
fn zorn_mul_oracle(p: i64, a: &Ints, b: &Ints) -> Ints {
    let m = |x: i64| x.rem_euclid(p);
    let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(s, t)| s * t).sum::<i64>();
    let cross = |x: &[i64], y: &[i64]| {
        [
            x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0],
        ]
    };
    let (a1, a2, a12, a21) = (a[0], a[1], &a[2..5], &a[5..8]);
    let (b1, b2, b12, b21) = (b[0], b[1], &b[2..5], &b[5..8]);
    let c1 = a1 * b1 + dot(a12, b21);
    let c2 = a2 * b2 + dot(a21, b12);
    let x = cross(a21, b21);
    let y = cross(a12, b12);
    let mut c = [m(c1), m(c2), 0, 0, 0, 0, 0, 0];
    for i in 0..3 {
        c[2 + i] = m(a1 * b12[i] + b2 * a12[i] - x[i]);
        c[5 + i] = m(b1 * a21[i] + a2 * b21[i] + y[i]);
    }
    c
}

fn norm_oracle(p: i64, a: &Ints) -> i64 {
    (a[0] * a[1] - (a[2] * a[5] + a[3] * a[6] + a[4] * a[7])).rem_euclid(p)
}

fn to_ints(m: &ZornMatrix) -> Ints {
    m.components().map(|c| c.index() as i64)
}

fn tuples(p: i64) -> impl Iterator<Item = Ints> {
    (0..p.pow(8)).map(move |mut code| {
        let mut t = [0; 8];
        for slot in t.iter_mut().rev() {
            *slot = code % p;
            code /= p;
        }
        t
    })
}

/// Library product and norm agree with the written-out rule on every pair over GF(2).
fn oracle_zorn_product() -> Result<String, String> {
    let f = FiniteField::new(2, 1).unwrap();
    let alg = ZornAlgebra::new(f);
    let all: Vec<ZornMatrix> = (0..alg.size()).map(|c| alg.decode(c)).collect();
    for a in &all {
        if norm_oracle(2, &to_ints(a)) != alg.norm(a).index() as i64 {
            return Err(format!("norm differs at {}", alg.render(a)));
        }
        for b in &all {
            if to_ints(&alg.mul(a, b)) != zorn_mul_oracle(2, &to_ints(a), &to_ints(b)) {
                return Err(format!(
                    "product differs at {} * {}",
                    alg.render(a),
                    alg.render(b)
                ));
            }
        }
    }
    Ok(format!("{} pairs", all.len() * all.len()))
}

/// Norm-one counts by brute force over integer tuples: 120 and 2160.
fn oracle_m0_orders() -> Result<String, String> {
    let mut found = Vec::new();
    for (p, frozen) in [(2i64, 120usize), (3, 2160)] {
        let brute = tuples(p).filter(|t| norm_oracle(p, t) == 1).count();
        let built = build_m0(&FiniteField::new(p as u32, 1).unwrap(), 3)
            .map_err(|e| e.to_string())?
            .loop_
            .order();
        if brute != frozen || built != frozen {
            return Err(format!(
                "GF({p}): brute {brute}, built {built}, frozen {frozen}"
            ));
        }
        found.push(format!("GF({p}) {brute}"));
    }
    Ok(found.join(", "))
}

/// Ideal (t) of GF(2)[t]/(t^4): powers spanned by monomials t^k..t^3.
fn oracle_z4_index() -> Result<String, String> {
    // Elements as bitmasks over {1, t, t^2, t^3}; multiply as polynomials mod 2 and t^4.
    let mul = |x: u8, y: u8| {
        let mut r = 0u8;
        for i in 0..4 {
            for j in 0..4 {
                if x >> i & 1 == 1 && y >> j & 1 == 1 && i + j < 4 {
                    r ^= 1 << (i + j);
                }
            }
        }
        r
    };
    let span = |gens: &[u8]| {
        let mut set = vec![0u8];
        for &g in gens {
            let extra: Vec<u8> = set.iter().map(|&s| s ^ g).collect();
            set.extend(extra);
            set.sort_unstable();
            set.dedup();
        }
        set
    };
    let omega = span(&[0b0010, 0b0100, 0b1000]);
    let mut powers = vec![omega.clone()];
    while powers.last().unwrap().len() > 1 {
        let k = powers.len() + 1;
        let mut gens = Vec::new();
        for i in 1..k {
            for &x in &powers[i - 1] {
                for &y in &powers[k - i - 1] {
                    gens.push(mul(x, y));
                }
            }
        }
        powers.push(span(&gens));
    }
    let oracle = powers.len();
    let alg =
        LoopAlgebra::new(small_group("Z4").unwrap(), FiniteField::new(2, 1).unwrap()).unwrap();
    let lib = alg.nilpotency_index(&alg.omega(), 16);
    if lib != Some(oracle) || oracle != 4 {
        return Err(format!("oracle {oracle}, library {lib:?}"));
    }
    Ok(format!(
        "least vanishing power {oracle}, last nonzero power {}",
        oracle - 1
    ))
}

/// Squares in GF(p) by squaring every residue; odd prime fields are never closed.
fn oracle_squares() -> Result<String, String> {
    let mut checked = 0;
    for p in (3u32..=81).filter(|&p| (2..p).all(|d| p % d != 0)) {
        let f = FiniteField::new(p, 1).unwrap();
        let squares: Vec<bool> = {
            let mut s = vec![false; p as usize];
            for x in 0..p {
                s[(x * x % p) as usize] = true;
            }
            s
        };
        for a in f.elements() {
            if f.is_square(a) != squares[a.index() as usize] {
                return Err(format!("GF({p}) at {}", a.index()));
            }
        }
        if f.is_closed_under_sqrt() {
            return Err(format!("GF({p}) reported closed"));
        }
        checked += 1;
    }
    Ok(format!("{checked} prime fields"))
}

/// Frozen quotient dimensions dim FQ/ωH = |Q|/|H| for the criterion 12 pairs.
fn oracle_quotient_dims() -> Result<String, String> {
    let cases: [(&str, Vec<usize>, usize); 3] = [
        ("Z4", vec![0, 2], 2),
        (
            "chein-Q8",
            corpus_loop("chein-Q8").unwrap().center().members().to_vec(),
            8,
        ),
        ("D4xZ2", vec![0, 1], 8),
    ];
    for (name, members, frozen) in cases {
        let q = corpus_loop(name).unwrap();
        for p in [2, 3] {
            let alg = LoopAlgebra::new(q.clone(), FiniteField::new(p, 1).unwrap()).unwrap();
            let h = q.subloop(&members).map_err(|e| e.to_string())?;
            let dim = q.order() - alg.omega_ideal(&h).map_err(|e| e.to_string())?.space.rank();
            if dim != frozen {
                return Err(format!("{name}/GF({p}): {dim} != {frozen}"));
            }
        }
    }
    Ok("Z4 2, chein-Q8 8, D4xZ2 8".into())
}

type Oracle = fn() -> Result<String, String>;

fn main() {
    let cfg = SuiteConfig::default();
    let mut failures = 0;
    for id in 1..=CRITERIA {
        let r = run_criterion(id, &cfg);
        if r.passed {
            println!("PASS criterion {id:2}: {}", r.title);
        } else {
            failures += 1;
            println!("FAIL criterion {id:2}: {}", r.title);
            for item in r.checks.failures() {
                println!("       {} {}", item.name, item.detail);
            }
        }
    }
    let oracles: [(&str, Oracle); 5] = [
        ("zorn product and norm (criteria 1, 2)", oracle_zorn_product),
        ("M0 orders by brute count (criterion 3)", oracle_m0_orders),
        (
            "omega(Z4) over GF(2) via GF(2)[t]/(t^4) (criterion 9)",
            oracle_z4_index,
        ),
        ("squares in prime fields (criterion 13)", oracle_squares),
        ("quotient dimensions (criterion 12)", oracle_quotient_dims),
    ];
    for (name, oracle) in oracles {
        match oracle() {
            Ok(detail) => println!("PASS oracle: {name} [{detail}]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL oracle: {name} [{detail}]");
            }
        }
    }
    if failures > 0 {
        println!("{failures} failing");
        std::process::exit(1);
    }
    println!("all {CRITERIA} criteria and oracles pass");
}
