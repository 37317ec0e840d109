//! Permutations of {0, …, n−1}. Products compose right to left: (p·q)(x) = p(q(x)).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)` on `n` points.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        let bad = || Error::Parse(format!("bad cycle notation `{text}`"));
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let pts: Vec<usize> = inner[..close]
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > n || seen[p - 1] {
                    return Err(bad());
                }
                seen[p - 1] = true;
            }
            for (k, &p) in pts.iter().enumerate() {
                images[p - 1] = (pts[(k + 1) % pts.len()] - 1) as u32;
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Perm { images: rhs.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm { images: out }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Permutation matrix sending basis vector a_i to a_{π(i)}.
    pub fn matrix(&self, ring: crate::arith::CoeffRing) -> crate::arith::Mat {
        let n = self.degree();
        let mut m = crate::arith::Mat::zeros(ring, n, n);
        for (i, &x) in self.images.iter().enumerate() {
            m.set(x as usize, i, ring.one());
        }
        m
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Perm::from_cycles(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.image(0), 1);
        assert!(!p.is_even());
        assert!(Perm::from_cycles(5, "(1,1)").is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::from_cycles(3, "(1,2)").unwrap();
        let b = Perm::from_cycles(3, "(2,3)").unwrap();
        // (1,2)∘(2,3) sends 2 ↦ 3, 3 ↦ 2 ↦ 1
        assert_eq!(a.compose(&b).to_string(), "(1,2,3)");
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
