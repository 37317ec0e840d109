//! Complete submodule lattices of small modules by spinning every vector.

use super::rep::Representation;
use crate::arith::{span_rref, CoeffRing};
use crate::error::{Error, Result};

pub const LATTICE_CAP: u64 = 1_000_000;

/// Every submodule, as RREF bases, sorted by dimension.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    pub ring: CoeffRing,
    pub dim: usize,
    pub submodules: Vec<Vec<Vec<u32>>>,
}

pub fn submodule_lattice_small(rep: &Representation) -> Result<SubmoduleLattice> {
    let f = rep.ring();
    if !f.is_field() {
        return Err(Error::UnsupportedRing(format!("lattices need a field, got {f}")));
    }
    let n = rep.dim();
    let q = f.size() as u64;
    let total = q.checked_pow(n as u32).filter(|&t| t <= LATTICE_CAP);
    let total = total.ok_or(Error::ResourceLimit { cap: "lattice vectors", limit: LATTICE_CAP })?;
    let mut subs: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    // spin one vector per line: leading nonzero coordinate equal to 1
    for code in 1..total {
        let v = crate::group::decode_vector(f, n, code);
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let s = rep.spin(&v)?;
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    // every submodule is a sum of cyclic ones
    let mut k = 0;
    while k < subs.len() {
        let mut j = 0;
        while j < k {
            let joined = span_rref(f, n, &[subs[k].clone(), subs[j].clone()].concat())?;
            if !subs.contains(&joined) {
                subs.push(joined);
            }
            j += 1;
        }
        k += 1;
    }
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(SubmoduleLattice { ring: f, dim: n, submodules: subs })
}

impl SubmoduleLattice {
    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.submodules.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.submodules.iter().map(|s| s.len()).collect()
    }

    /// True when submodule a lies in submodule b.
    pub fn includes(&self, a: usize, b: usize) -> bool {
        let (sa, sb) = (&self.submodules[a], &self.submodules[b]);
        sa.len() <= sb.len() && sa.iter().all(|v| {
            let mut t = sb.clone();
            t.push(v.clone());
            span_rref(self.ring, self.dim, &t).map(|r| r.len() == sb.len()).unwrap_or(false)
        })
    }

    /// Totally ordered by inclusion.
    pub fn is_uniserial(&self) -> bool {
        (1..self.len()).all(|k| self.includes(k - 1, k))
    }

    /// Dimensions of successive quotients along the chain, bottom first.
    pub fn layers(&self) -> Option<Vec<usize>> {
        if !self.is_uniserial() {
            return None;
        }
        Some(self.dims().windows(2).map(|w| w[1] - w[0]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{coset_action, Perm, SMALL_CAP};

    fn gf3() -> CoeffRing {
        CoeffRing::prime_field(3).unwrap()
    }

    fn alt5() -> Vec<Perm> {
        vec![Perm::from_cycles(5, "(1,2,3)").unwrap(), Perm::from_cycles(5, "(1,2,3,4,5)").unwrap()]
    }

    /// Oracle: a subspace is a submodule iff every generator maps it into itself.
    fn all_invariant(l: &SubmoduleLattice, rep: &Representation) -> bool {
        l.submodules.iter().all(|s| {
            s.iter().all(|v| rep.images().iter().all(|g| {
                let mut t = s.clone();
                t.push(g.apply(v));
                span_rref(l.ring, l.dim, &t).unwrap().len() == s.len()
            }))
        })
    }

    #[test]
    fn irreducible_module_has_two_submodules() {
        let v = Representation::deleted_permutation_module(gf3(), &alt5()).unwrap();
        let l = submodule_lattice_small(&v).unwrap();
        assert_eq!(l.dims(), vec![0, 4]);
        assert!(all_invariant(&l, &v));
    }

    #[test]
    fn dihedral_induction_is_uniserial() {
        let one = Perm::identity(5);
        let d10 = vec![Perm::from_cycles(5, "(1,2,3,4,5)").unwrap(), Perm::from_cycles(5, "(2,5)(3,4)").unwrap()];
        let act = coset_action(&alt5(), &d10, &one, SMALL_CAP).unwrap();
        let m = Representation::permutation_module(gf3(), &act).unwrap();
        let l = submodule_lattice_small(&m).unwrap();
        assert!(l.is_uniserial());
        assert_eq!(l.layers().unwrap(), vec![1, 4, 1]);
        assert!(all_invariant(&l, &m));
    }

    #[test]
    fn trivial_plane_has_every_subspace() {
        let t = Representation::trivial(gf3(), 1).direct_sum(&Representation::trivial(gf3(), 1)).unwrap();
        let l = submodule_lattice_small(&t).unwrap();
        // 0, four lines, the plane
        assert_eq!(l.dims(), vec![0, 1, 1, 1, 1, 2]);
        assert!(!l.is_uniserial());
        assert!(l.layers().is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let big = Representation::trivial(gf3(), 1);
        let mut m = big.clone();
        for _ in 0..12 {
            m = m.direct_sum(&big).unwrap();
        }
        assert!(matches!(submodule_lattice_small(&m), Err(Error::ResourceLimit { .. })));
    }
}
