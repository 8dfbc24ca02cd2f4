//! Upper and lower central series.

use rayon::prelude::*;
use serde::Serialize;

use super::{FiniteLoop, Subloop};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Upper,
    Lower,
    Custom,
}

/// Generators used for the lower central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMode {
    /// `alpha(n,x,y)`, `beta(n,x,y)`, `(n,x)`.
    General,
    /// `[n,x,y]`, `[n,x]`; valid for Moufang loops.
    Moufang,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Upper: `Z_0 = 1, Z_1, ...`; lower: `Q_0 = Q, Q_1, ...`.
    pub chain: Vec<Subloop>,
    pub class: Option<usize>,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    schema: u32,
    kind: SeriesKind,
    class: Option<usize>,
    sizes: Vec<usize>,
    terms: Vec<&'a [usize]>,
}

impl SeriesReport {
    /// Number of steps in the chain.
    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn last(&self) -> &Subloop {
        self.chain.last().expect("series has at least one term")
    }

    /// Term `i`, repeating the last term once the series has stabilized.
    pub fn term(&self, i: usize) -> &Subloop {
        &self.chain[i.min(self.chain.len() - 1)]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson {
            schema: 1,
            kind: self.kind,
            class: self.class,
            sizes: self.chain.iter().map(Subloop::len).collect(),
            terms: self.chain.iter().map(Subloop::members).collect(),
        })
        .expect("series serializes")
    }
}

impl FiniteLoop {
    /// `Z_{i+1}/Z_i = Z(Q/Z_i)`, iterated until `Z_{i+1} = Z_i`.
    pub fn upper_central_series(&self) -> SeriesReport {
        let mut chain = vec![self.trivial_subloop()];
        loop {
            let current = chain.last().unwrap();
            if current.is_whole() {
                break;
            }
            let (quot, proj) = self
                .quotient(current)
                .expect("upper central terms are normal");
            let next = proj.preimage(&quot.center());
            if next == *current {
                break;
            }
            chain.push(next);
        }
        let class = chain.last().unwrap().is_whole().then(|| chain.len() - 1);
        SeriesReport {
            kind: SeriesKind::Upper,
            chain,
            class,
        }
    }

    /// Mask of the elements that generate `Q_{i+1}` from `Q_i`.
    fn lower_step_generators(&self, term: &Subloop, mode: SeriesMode) -> Vec<usize> {
        let n = self.order();
        let mask = term
            .members()
            .par_iter()
            .fold(
                || vec![false; n],
                |mut acc, &m| {
                    for x in 0..n {
                        match mode {
                            SeriesMode::General => acc[self.commutator(m, x)] = true,
                            SeriesMode::Moufang => acc[self.bracket_comm(m, x)] = true,
                        }
                        for y in 0..n {
                            match mode {
                                SeriesMode::General => {
                                    acc[self.assoc_alpha(m, x, y)] = true;
                                    acc[self.assoc_beta(m, x, y)] = true;
                                }
                                SeriesMode::Moufang => acc[self.bracket_assoc(m, x, y)] = true,
                            }
                        }
                    }
                    acc
                },
            )
            .reduce(
                || vec![false; n],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                    a
                },
            );
        (0..n).filter(|&i| mask[i]).collect()
    }

    /// `Q_0 = Q`, `Q_{i+1}` the normal subloop generated by the associators
    /// and commutators of `Q_i` with `Q`.
    pub fn lower_central_series(&self, mode: SeriesMode) -> Result<SeriesReport> {
        if mode == SeriesMode::Moufang && !self.is_moufang() {
            return Err(Error::NotMoufang);
        }
        let mut chain = vec![self.whole()];
        loop {
            let current = chain.last().unwrap();
            if current.is_trivial() {
                break;
            }
            let gens = self.lower_step_generators(current, mode);
            let next = self.normal_closure(&gens);
            if next == *current {
                break;
            }
            chain.push(next);
        }
        let class = chain.last().unwrap().is_trivial().then(|| chain.len() - 1);
        Ok(SeriesReport {
            kind: SeriesKind::Lower,
            chain,
            class,
        })
    }

    /// Central nilpotency class. Both series are computed; when either
    /// reaches its end both must, with equal lengths.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let upper = self.upper_central_series();
        let lower = self
            .lower_central_series(SeriesMode::General)
            .expect("general mode accepts every loop");
        assert_eq!(
            upper.class, lower.class,
            "upper and lower central series disagree"
        );
        upper.class
    }

    /// Whether `chain` runs from `Q` down to `1` through normal subloops with
    /// `C_i/C_{i+1}` inside `Z(Q/C_{i+1})`.
    pub fn is_central_series(&self, chain: &[Subloop]) -> bool {
        let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
            return false;
        };
        if !first.is_whole() || !last.is_trivial() {
            return false;
        }
        if chain
            .iter()
            .any(|c| c.parent_order() != self.order() || !self.is_normal(c))
        {
            return false;
        }
        chain.windows(2).all(|w| {
            if !w[1].is_subset_of(&w[0]) {
                return false;
            }
            let (quot, proj) = self.quotient(&w[1]).expect("checked normal");
            let center = quot.center();
            w[0].members()
                .iter()
                .all(|&x| center.contains(proj.apply(x)))
        })
    }

    /// For a central series `Q = C_0 > ... > C_r = 1`: `C_{r-i}` lies in `Z_i`
    /// and `Q_i` lies in `C_i` for every `i`.
    pub fn central_series_bounds_hold(&self, chain: &[Subloop]) -> bool {
        if !self.is_central_series(chain) {
            return false;
        }
        let r = chain.len() - 1;
        let upper = self.upper_central_series();
        let lower = self
            .lower_central_series(SeriesMode::General)
            .expect("general mode accepts every loop");
        (0..=r).all(|i| {
            chain[r - i].is_subset_of(upper.term(i)) && lower.term(i).is_subset_of(&chain[i])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{chein_double, small_group};

    #[test]
    fn abelian_has_class_one() {
        let z6 = small_group("Z6").unwrap();
        let up = z6.upper_central_series();
        assert_eq!(up.class, Some(1));
        assert_eq!(up.length(), 1);
        let low = z6.lower_central_series(SeriesMode::General).unwrap();
        assert_eq!(low.class, Some(1));
        assert_eq!(low.length(), 1);
    }

    #[test]
    fn trivial_loop_has_class_zero() {
        let one = small_group("Z1").unwrap();
        assert_eq!(one.nilpotency_class(), Some(0));
    }

    #[test]
    fn q8_has_class_two() {
        assert_eq!(small_group("Q8").unwrap().nilpotency_class(), Some(2));
    }

    #[test]
    fn s3_double_is_not_nilpotent() {
        let m = chein_double(&small_group("S3").unwrap()).unwrap();
        let up = m.upper_central_series();
        assert_eq!(up.class, None);
        let low = m.lower_central_series(SeriesMode::General).unwrap();
        assert_eq!(low.class, None);
        assert!(!low.last().is_trivial());
        assert_eq!(m.nilpotency_class(), None);
    }

    #[test]
    fn moufang_mode_rejects_non_moufang() {
        // A loop of order 5 that is not Moufang.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let q = FiniteLoop::from_rows(&rows).unwrap();
        assert!(!q.is_moufang());
        assert_eq!(
            q.lower_central_series(SeriesMode::Moufang).unwrap_err(),
            Error::NotMoufang
        );
    }

    #[test]
    fn central_series_checks() {
        let d4 = small_group("D4").unwrap();
        let chain = vec![d4.whole(), d4.center(), d4.trivial_subloop()];
        assert!(d4.is_central_series(&chain));
        assert!(d4.central_series_bounds_hold(&chain));
        assert!(!d4.is_central_series(&[d4.whole(), d4.trivial_subloop()]));
        assert!(!d4.is_central_series(&[]));
    }

    #[test]
    fn series_json_shape() {
        let q8 = small_group("Q8").unwrap();
        let v = q8.upper_central_series().to_json();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["kind"], "upper");
        assert_eq!(v["class"], 2);
        assert_eq!(v["sizes"], serde_json::json!([1, 2, 8]));
    }
}
