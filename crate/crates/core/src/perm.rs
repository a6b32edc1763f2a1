//! Permutations of `0..n` as image vectors.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Malformed(format!("not a permutation of 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
        let mut v: Vec<u32> = (0..n as u32).collect();
        v.shuffle(rng);
        Perm(v)
    }

    /// The `n`-cycle `i ↦ i + 1 mod n`.
    pub fn cycle(n: usize) -> Perm {
        Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// `self` after `first`: `i ↦ self(first(i))`.
    pub fn after(&self, first: &Perm) -> Perm {
        Perm(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &j)| i as u32 == j).count()
    }

    /// Cycle lengths, one entry per cycle, in order of smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Cycles in order of smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
