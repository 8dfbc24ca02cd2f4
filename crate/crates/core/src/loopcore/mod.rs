//! Finite loops stored as dense Cayley tables.
//!
//! Elements are indices `0..order`; index 0 is the identity. Every predicate
//! here is a direct scan of the table.

mod inner;
mod series;
mod subloop;
mod text;

use std::sync::OnceLock;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use inner::Permutation;
pub use series::{SeriesKind, SeriesMode, SeriesReport};
pub use subloop::{LoopMap, Subloop};
pub use text::{parse_table, write_table};

/// Seed used by every randomized check unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0x004d_6f75_6661_6e67;

/// Largest order for which triple-quantified laws are checked exhaustively by default.
pub const EXHAUSTIVE_TRIPLE_LIMIT: usize = 256;

/// Number of random triples used when a law is sampled.
pub const DEFAULT_SAMPLES: usize = 100_000;

/// How a triple-quantified predicate is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

impl Sampling {
    /// Exhaustive up to [`EXHAUSTIVE_TRIPLE_LIMIT`], fixed-seed sampling above.
    pub fn auto(order: usize) -> Self {
        if order <= EXHAUSTIVE_TRIPLE_LIMIT {
            Sampling::Exhaustive
        } else {
            Sampling::Random {
                samples: DEFAULT_SAMPLES,
                seed: DEFAULT_SEED,
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteLoop {
    order: usize,
    table: Vec<u32>,
    ldiv: OnceLock<Vec<u32>>,
    rdiv: OnceLock<Vec<u32>>,
}

impl PartialEq for FiniteLoop {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteLoop {}

impl FiniteLoop {
    /// Validates a row-major table: Latin square with two-sided identity at 0.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotLatin("empty table".into()));
        }
        if table.len() != order * order {
            return Err(Error::NotLatin(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        let mut seen = vec![0usize; order];
        for r in 0..order {
            for c in 0..order {
                let v = table[r * order + c] as usize;
                if v >= order {
                    return Err(Error::NotLatin(format!("entry {v} out of range")));
                }
                if seen[v] == r + 1 {
                    return Err(Error::NotLatin(format!("row {r} repeats {v}")));
                }
                seen[v] = r + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for c in 0..order {
            for r in 0..order {
                let v = table[r * order + c] as usize;
                if seen[v] == c + 1 {
                    return Err(Error::NotLatin(format!("column {c} repeats {v}")));
                }
                seen[v] = c + 1;
            }
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::NoIdentity);
            }
        }
        Ok(Self::from_validated(order, table))
    }

    /// Accepts a table from nested rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::NotLatin("table is not square".into()));
            }
            table.extend(row.iter().map(|&v| v as u32));
        }
        Self::from_table(order, table)
    }

    pub(crate) fn from_validated(order: usize, table: Vec<u32>) -> Self {
        FiniteLoop {
            order,
            table,
            ldiv: OnceLock::new(),
            rdiv: OnceLock::new(),
        }
    }

    /// Builds a loop from a product function on `0..order`, row by row in parallel.
    pub fn from_fn<F>(order: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        let mut table = vec![0u32; order * order];
        table
            .par_chunks_mut(order)
            .enumerate()
            .for_each(|(x, row)| {
                for (y, slot) in row.iter_mut().enumerate() {
                    *slot = f(x, y) as u32;
                }
            });
        Self::from_table(order, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    fn ldiv_table(&self) -> &[u32] {
        self.ldiv.get_or_init(|| {
            let n = self.order;
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for x in 0..n {
                    t[a * n + self.mul(a, x)] = x as u32;
                }
            }
            t
        })
    }

    fn rdiv_table(&self) -> &[u32] {
        self.rdiv.get_or_init(|| {
            let n = self.order;
            let mut t = vec![0u32; n * n];
            for x in 0..n {
                for a in 0..n {
                    t[self.mul(x, a) * n + a] = x as u32;
                }
            }
            t
        })
    }

    /// `a \ b`: the unique `x` with `a x = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv_table()[a * self.order + b] as usize
    }

    /// `b / a`: the unique `x` with `x a = b`.
    #[inline]
    pub fn rdiv(&self, b: usize, a: usize) -> usize {
        self.rdiv_table()[b * self.order + a] as usize
    }

    /// Right inverse `x^{-1}` with `x x^{-1} = 1`; two-sided in IP loops.
    pub fn inverse(&self, x: usize) -> usize {
        self.ldiv(x, 0)
    }

    pub fn left_inverse(&self, x: usize) -> usize {
        self.rdiv(0, x)
    }

    /// Left-normed powers `g, g g, (g g) g, ...`; returns the least `k >= 1`
    /// with `g^k = 1`. Meaningful for power-associative loops.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
            assert!(
                k <= self.order + 1,
                "left-normed powers of {g} never reach 1"
            );
        }
        k
    }

    /// Left-normed power `g^k`.
    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_ip_loop(&self) -> bool {
        let n = self.order;
        (0..n).into_par_iter().all(|x| {
            let li = self.left_inverse(x);
            let ri = self.inverse(x);
            (0..n).all(|y| self.mul(li, self.mul(x, y)) == y && self.mul(self.mul(y, x), ri) == y)
        })
    }

    pub fn is_moufang(&self) -> bool {
        self.is_moufang_with(Sampling::auto(self.order))
    }

    pub fn is_moufang_with(&self, sampling: Sampling) -> bool {
        self.moufang_violation(sampling).is_none()
    }

    /// A triple violating `(xy.x)z = x(y.xz)`, if one is found.
    pub fn moufang_violation(&self, sampling: Sampling) -> Option<(usize, usize, usize)> {
        self.find_triple(sampling, |x, y, z| {
            self.mul(self.mul(self.mul(x, y), x), z) != self.mul(x, self.mul(y, self.mul(x, z)))
        })
    }

    pub fn is_associative(&self) -> bool {
        self.is_associative_with(Sampling::auto(self.order))
    }

    pub fn is_associative_with(&self, sampling: Sampling) -> bool {
        self.nonassociative_triple(sampling).is_none()
    }

    /// First (in scan order) triple with `xy.z != x.yz`.
    pub fn nonassociative_triple(&self, sampling: Sampling) -> Option<(usize, usize, usize)> {
        self.find_triple(sampling, |x, y, z| {
            self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z))
        })
    }

    /// Searches for a triple satisfying `bad`. Exhaustive scans return the
    /// lexicographically first hit.
    pub fn find_triple<F>(&self, sampling: Sampling, bad: F) -> Option<(usize, usize, usize)>
    where
        F: Fn(usize, usize, usize) -> bool + Sync,
    {
        let n = self.order;
        match sampling {
            Sampling::Exhaustive => (0..n).into_par_iter().find_map_first(|x| {
                for y in 0..n {
                    for z in 0..n {
                        if bad(x, y, z) {
                            return Some((x, y, z));
                        }
                    }
                }
                None
            }),
            Sampling::Random { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| {
                        (
                            rng.random_range(0..n),
                            rng.random_range(0..n),
                            rng.random_range(0..n),
                        )
                    })
                    .find(|&(x, y, z)| bad(x, y, z))
            }
        }
    }

    /// Fixed-seed random triples, for checks that need the values themselves.
    pub fn random_triples(&self, samples: usize, seed: u64) -> Vec<(usize, usize, usize)> {
        let n = self.order;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                )
            })
            .collect()
    }

    /// Applies a relabelling that keeps 0 fixed: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)] as u32;
            }
        }
        Self::from_table(n, table)
    }

    /// Direct product with componentwise multiplication; `(a, b)` maps to `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteLoop) -> FiniteLoop {
        let m = other.order;
        FiniteLoop::from_fn(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("direct product of loops is a loop")
    }
}
