//! Subloops, normality, centers and quotients.

use rayon::prelude::*;

use super::FiniteLoop;
use crate::error::{Error, Result};

/// A subset of a loop's indices that is closed as a subloop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subloop {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subloop {
    fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subloop { members, mask }
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subloop) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// A map between loops given by the image of every source index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopMap {
    images: Vec<usize>,
    target_order: usize,
}

impl LoopMap {
    pub fn new(images: Vec<usize>, target_order: usize) -> Self {
        LoopMap {
            images,
            target_order,
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_homomorphism(&self, source: &FiniteLoop, target: &FiniteLoop) -> bool {
        let n = source.order();
        self.images.len() == n
            && target.order() == self.target_order
            && self.images[0] == 0
            && (0..n).into_par_iter().all(|x| {
                (0..n).all(|y| {
                    self.images[source.mul(x, y)] == target.mul(self.images[x], self.images[y])
                })
            })
    }

    /// Source elements mapping into `sub`.
    pub fn preimage(&self, sub: &Subloop) -> Subloop {
        Subloop::from_mask(self.images.iter().map(|&y| sub.contains(y)).collect())
    }

    /// Source elements mapping to the identity.
    pub fn kernel(&self) -> Subloop {
        Subloop::from_mask(self.images.iter().map(|&y| y == 0).collect())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl FiniteLoop {
    pub fn trivial_subloop(&self) -> Subloop {
        self.subloop_generated(&[])
    }

    pub fn whole(&self) -> Subloop {
        Subloop::from_mask(vec![true; self.order()])
    }

    /// Validates an explicit member list.
    pub fn subloop(&self, members: &[usize]) -> Result<Subloop> {
        let mut mask = vec![false; self.order()];
        for &m in members {
            if m >= self.order() {
                return Err(Error::NotASubloop);
            }
            mask[m] = true;
        }
        let sub = Subloop::from_mask(mask);
        let closed = sub.contains(0)
            && sub
                .members()
                .iter()
                .all(|&a| sub.members().iter().all(|&b| sub.contains(self.mul(a, b))));
        if closed {
            Ok(sub)
        } else {
            Err(Error::NotASubloop)
        }
    }

    /// Least subloop containing `seeds`. In a finite loop a multiplicatively
    /// closed subset containing 1 is a subloop; inverses are added as well.
    pub fn subloop_generated(&self, seeds: &[usize]) -> Subloop {
        let mut mask = vec![false; self.order()];
        let mut members = vec![0usize];
        mask[0] = true;
        let mut queue: Vec<usize> = Vec::new();
        for &s in seeds {
            if !mask[s] {
                mask[s] = true;
                members.push(s);
                queue.push(s);
            }
        }
        while let Some(a) = queue.pop() {
            let mut fresh = Vec::new();
            let inv = [self.inverse(a), self.left_inverse(a)];
            for &b in members.iter() {
                for c in [self.mul(a, b), self.mul(b, a)] {
                    if !mask[c] {
                        mask[c] = true;
                        fresh.push(c);
                    }
                }
            }
            for c in inv {
                if !mask[c] {
                    mask[c] = true;
                    fresh.push(c);
                }
            }
            members.extend_from_slice(&fresh);
            queue.extend(fresh);
        }
        Subloop::from_mask(mask)
    }

    /// Subloop generated by the union of two subloops.
    pub fn join(&self, a: &Subloop, b: &Subloop) -> Subloop {
        let seeds: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
        self.subloop_generated(&seeds)
    }

    /// A generating set chosen greedily in increasing index order.
    pub fn generators(&self, sub: &Subloop) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subloop();
        for &m in sub.members() {
            if !current.contains(m) {
                gens.push(m);
                current = self.subloop_generated(&gens);
            }
        }
        gens
    }

    /// `T(x)H = H`, `L(x,y)H = H`, `R(x,y)H = H` for all `x, y`.
    pub fn is_normal(&self, h: &Subloop) -> bool {
        if h.parent_order() != self.order() {
            return false;
        }
        if h.is_whole() || h.is_trivial() {
            return true;
        }
        let n = self.order();
        (0..n).into_par_iter().all(|x| {
            h.members().iter().all(|&m| h.contains(self.t_at(x, m)))
                && (0..n).all(|y| {
                    h.members()
                        .iter()
                        .all(|&m| h.contains(self.l_at(x, y, m)) && h.contains(self.r_at(x, y, m)))
                })
        })
    }

    /// Least normal subloop containing `seeds`, read off as the identity class
    /// of the least congruence identifying every seed with 1.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subloop {
        let n = self.order();
        let mut uf = UnionFind::new(n);
        let mut pending: Vec<(usize, usize)> = seeds.iter().map(|&s| (s, 0)).collect();
        while let Some((a, b)) = pending.pop() {
            if !uf.union(a, b) {
                continue;
            }
            for c in 0..n {
                pending.push((self.mul(c, a), self.mul(c, b)));
                pending.push((self.mul(a, c), self.mul(b, c)));
                pending.push((self.ldiv(c, a), self.ldiv(c, b)));
                pending.push((self.ldiv(a, c), self.ldiv(b, c)));
                pending.push((self.rdiv(c, a), self.rdiv(c, b)));
                pending.push((self.rdiv(a, c), self.rdiv(b, c)));
            }
        }
        let root = uf.find(0);
        Subloop::from_mask((0..n).map(|x| uf.find(x) == root).collect())
    }

    /// Least subloop containing `seeds` that is stable under every `T(x)`,
    /// `R(x,y)` and `L(x,y)`: alternates subloop closure and inner-mapping
    /// saturation until nothing grows. Quadratic in the order per round.
    pub fn normal_closure_by_inner_maps(&self, seeds: &[usize]) -> Subloop {
        let n = self.order();
        let mut current = self.subloop_generated(seeds);
        loop {
            let mut mask = vec![false; n];
            for &m in current.members() {
                mask[m] = true;
            }
            for x in 0..n {
                for &m in current.members() {
                    mask[self.t_at(x, m)] = true;
                }
                for y in 0..n {
                    for &m in current.members() {
                        mask[self.l_at(x, y, m)] = true;
                        mask[self.r_at(x, y, m)] = true;
                    }
                }
            }
            let grown: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
            let next = self.subloop_generated(&grown);
            if next.len() == current.len() {
                return current;
            }
            current = next;
        }
    }

    /// Elements that commute with everything and lie in all three nuclei.
    pub fn center(&self) -> Subloop {
        let n = self.order();
        let mask: Vec<bool> = (0..n)
            .into_par_iter()
            .map(|x| {
                (0..n).all(|y| self.mul(x, y) == self.mul(y, x))
                    && (0..n).all(|y| {
                        (0..n).all(|z| {
                            self.mul(x, self.mul(y, z)) == self.mul(self.mul(x, y), z)
                                && self.mul(self.mul(y, x), z) == self.mul(y, self.mul(x, z))
                                && self.mul(self.mul(z, y), x) == self.mul(z, self.mul(y, x))
                        })
                    })
            })
            .collect();
        Subloop::from_mask(mask)
    }

    /// Coset loop `Q/H` and the projection. Cosets are numbered by their
    /// smallest member, so the identity coset is 0.
    pub fn quotient(&self, h: &Subloop) -> Result<(FiniteLoop, LoopMap)> {
        if !self.is_normal(h) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &m in h.members() {
                    coset[self.mul(x, m)] = id;
                }
            }
        }
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * k + j] = coset[self.mul(a, b)] as u32;
            }
        }
        let well_defined = (0..n).into_par_iter().all(|x| {
            (0..n).all(|y| coset[self.mul(x, y)] == table[coset[x] * k + coset[y]] as usize)
        });
        if !well_defined {
            return Err(Error::NotNormal);
        }
        let q = FiniteLoop::from_table(k, table)?;
        Ok((q, LoopMap::new(coset, k)))
    }

    /// Whether every non-identity element has the whole loop as normal closure.
    pub fn is_simple(&self) -> bool {
        (1..self.order()).all(|g| self.normal_closure(&[g]).is_whole())
    }

    /// Simplicity restricted to the given candidate elements.
    pub fn is_simple_on(&self, candidates: &[usize]) -> bool {
        candidates
            .iter()
            .filter(|&&g| g != 0)
            .all(|&g| self.normal_closure(&[g]).is_whole())
    }
}
