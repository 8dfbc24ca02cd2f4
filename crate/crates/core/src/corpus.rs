//! A fixed corpus of small loops: Cayley tables of familiar groups and
//! Chein doubles `M(G,2)` of them.
//!
//! The Chein double of a group `G` lives on `G ∪ Gu` with
//!
//! ```text
//! g (hu)  = (hg) u
//! (gu) h  = (g h^-1) u
//! (gu)(hu) = h^-1 g
//! ```
//!
//! It is Moufang for every group and associative exactly when `G` is abelian.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::loopcore::{FiniteLoop, Sampling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Group,
    Moufang,
    PLoop(u32),
    Nonassociative,
    Simple,
    NilpotentExpected,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub loop_: FiniteLoop,
    pub tags: BTreeSet<Tag>,
}

impl CorpusEntry {
    pub fn is_moufang(&self) -> bool {
        self.tags.contains(&Tag::Moufang)
    }

    pub fn p_loop(&self) -> Option<u32> {
        self.tags.iter().find_map(|t| match t {
            Tag::PLoop(p) => Some(*p),
            _ => None,
        })
    }
}

fn cyclic(n: usize) -> FiniteLoop {
    FiniteLoop::from_fn(n, |x, y| (x + y) % n).expect("cyclic group")
}

/// Dihedral group of order `2n`; `r^a s^b` has index `a + n b`.
fn dihedral(n: usize) -> FiniteLoop {
    FiniteLoop::from_fn(2 * n, |x, y| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        rot + n * ((b + d) % 2)
    })
    .expect("dihedral group")
}

/// Quaternion group: `x^a y^b` with `x^4 = 1`, `y^2 = x^2`, `y x y^-1 = x^-1`;
/// index `a + 4 b`.
fn quaternion() -> FiniteLoop {
    FiniteLoop::from_fn(8, |x, y| {
        let (a, b) = (x % 4, x / 4);
        let (c, d) = (y % 4, y / 4);
        let mut e = if b == 0 { a + c } else { a + 4 - c };
        let f = b + d;
        if f == 2 {
            e += 2;
        }
        e % 4 + 4 * (f % 2)
    })
    .expect("quaternion group")
}

/// Group tables by name: `Z<n>`, `S3`, `D<n>` (order 2n), `Q8`, and direct
/// products written with `x`, e.g. `D4xZ2`, `Z2xZ2xZ2`.
pub fn small_group(name: &str) -> Result<FiniteLoop> {
    let unknown = || Error::UnknownName(name.to_string());
    let factors: Vec<&str> = name.split('x').collect();
    let mut acc: Option<FiniteLoop> = None;
    for f in factors {
        let g = match f {
            "S3" => dihedral(3),
            "Q8" => quaternion(),
            _ if f.starts_with('Z') => {
                let n: usize = f[1..].parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                cyclic(n)
            }
            _ if f.starts_with('D') => {
                let n: usize = f[1..].parse().map_err(|_| unknown())?;
                if n < 2 {
                    return Err(unknown());
                }
                dihedral(n)
            }
            _ => return Err(unknown()),
        };
        acc = Some(match acc {
            None => g,
            Some(a) => a.direct_product(&g),
        });
    }
    acc.ok_or_else(unknown)
}

/// Chein double `M(G,2)` of a group `G`.
pub fn chein_double(g: &FiniteLoop) -> Result<FiniteLoop> {
    if !g.is_associative_with(Sampling::Exhaustive) {
        return Err(Error::NotAssociative);
    }
    let n = g.order();
    let inv = |h: usize| g.inverse(h);
    let m = FiniteLoop::from_fn(2 * n, |x, y| match (x < n, y < n) {
        (true, true) => g.mul(x, y),
        (true, false) => n + g.mul(y - n, x),
        (false, true) => n + g.mul(x - n, inv(y)),
        (false, false) => g.mul(inv(y - n), x - n),
    })?;
    if !m.is_moufang_with(Sampling::Exhaustive) {
        return Err(Error::NotMoufang);
    }
    Ok(m)
}

/// Smallest prime dividing every element order when all orders are powers
/// of one prime; `None` for the trivial loop or mixed orders.
pub fn p_loop_prime(q: &FiniteLoop) -> Option<u32> {
    if q.order() < 2 {
        return None;
    }
    let orders: Vec<usize> = (1..q.order()).map(|g| q.element_order(g)).collect();
    let p = smallest_prime_factor(orders[0]);
    orders
        .iter()
        .all(|&k| is_power_of(k, p))
        .then_some(p as u32)
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

pub(crate) fn is_power_of(mut k: usize, p: usize) -> bool {
    if k == 0 {
        return false;
    }
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

/// Names of the fixed corpus, in generation order.
pub const CORPUS_NAMES: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z2xZ2",
    "S3",
    "Z8",
    "Z4xZ2",
    "Z2xZ2xZ2",
    "D4",
    "Q8",
    "D4xZ2",
    "Q8xZ2",
    "chein-Z2",
    "chein-Z4",
    "chein-S3",
    "chein-D4",
    "chein-Q8",
    "chein-D4xZ2",
    "chein-Q8xZ2",
];

/// Computes tags for a loop from its table.
pub fn compute_tags(q: &FiniteLoop) -> BTreeSet<Tag> {
    let mut tags = BTreeSet::new();
    let assoc = q.is_associative();
    let moufang = q.is_moufang();
    if assoc {
        tags.insert(Tag::Group);
    } else {
        tags.insert(Tag::Nonassociative);
    }
    if moufang {
        tags.insert(Tag::Moufang);
    }
    if let Some(p) = p_loop_prime(q) {
        tags.insert(Tag::PLoop(p));
        if moufang {
            tags.insert(Tag::NilpotentExpected);
        }
    }
    if q.is_commutative() && assoc {
        tags.insert(Tag::NilpotentExpected);
    }
    if q.order() > 1 && q.is_simple() {
        tags.insert(Tag::Simple);
    }
    tags
}

pub fn corpus_loop(name: &str) -> Result<FiniteLoop> {
    match name.strip_prefix("chein-") {
        Some(base) => chein_double(&small_group(base)?),
        None => small_group(name),
    }
}

pub fn corpus_entry(name: &str) -> Result<CorpusEntry> {
    let loop_ = corpus_loop(name)?;
    let tags = compute_tags(&loop_);
    Ok(CorpusEntry {
        name: name.to_string(),
        loop_,
        tags,
    })
}

/// The whole fixed corpus. Tags are recomputed from the tables and checked
/// against the nilpotency class: entries tagged nilpotent-expected must be
/// centrally nilpotent.
pub fn corpus() -> Vec<CorpusEntry> {
    CORPUS_NAMES
        .iter()
        .map(|name| {
            let e = corpus_entry(name).expect("corpus names are valid");
            if e.tags.contains(&Tag::NilpotentExpected) {
                assert!(
                    e.loop_.nilpotency_class().is_some(),
                    "{name} tagged nilpotent but is not"
                );
            }
            e
        })
        .collect()
}
