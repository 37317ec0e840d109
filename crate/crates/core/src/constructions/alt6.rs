//! Alt(6): no copy inside GL₄(ℤ/9) through the integral Alt(5), and the
//! 4-dimensional GF(3)-module.

use num_bigint::BigUint;

use super::constants::klein_s_perms;
use super::psl49::integral_alt5;
use crate::arith::{CoeffRing, Mat};
use crate::centralizer::{automorphisms, normalizer_of_finite_subgroup};
use crate::cohomology::{ext1_dim, CertifiedPresentation};
use crate::error::Result;
use crate::group::{enumerate_small, is_perfect_small, ChainOptions, Perm, StabChain, SMALL_CAP};
use crate::modrep::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma45 {
    pub normalizer_order: usize,
    pub order_360: usize,
    pub perfect_360: usize,
}

/// Normaliser N of the Sylow 2-subgroup S of the integral Alt(5) in GL₄(ℤ/9),
/// and for every x ∈ N whether ⟨A, x⟩ has order 360 and is perfect.
pub fn lemma45(seed: u64) -> Result<Lemma45> {
    let ring = CoeffRing::local_ring(3, 2)?;
    let a = integral_alt5(ring)?;
    let k = Representation::deleted_permutation_module(ring, &klein_s_perms())?;
    let p = enumerate_small(k.images(), &Mat::identity(ring, 4), SMALL_CAP)?;
    let autos = automorphisms(&p)?;
    let n = normalizer_of_finite_subgroup(ring, 4, &p, &autos)?;
    let target = BigUint::from(360u32);
    let mut order_360 = 0;
    let mut perfect_360 = 0;
    for (i, x) in n.iter().enumerate() {
        let gens = vec![a.image(0).clone(), a.image(1).clone(), x.clone()];
        let c = StabChain::build(&gens, &ChainOptions::seeded(seed.wrapping_add(i as u64)))?;
        if c.order() == target {
            order_360 += 1;
            if is_perfect_small(&gens, &Mat::identity(ring, 4), SMALL_CAP)? {
                perfect_360 += 1;
            }
        }
    }
    Ok(Lemma45 { normalizer_order: n.len(), order_360, perfect_360 })
}

pub fn alt6_perms() -> Vec<Perm> {
    vec![Perm::from_cycles(6, "(1,2,3)").unwrap(), Perm::from_cycles(6, "(2,3,4,5,6)").unwrap()]
}

/// (sum-zero vectors)/(all-ones line) inside the 6-point GF(3) permutation
/// module; 6 ≡ 0 mod 3 puts the all-ones vector inside the sum-zero space.
pub fn alt6_module() -> Result<Representation> {
    let f = CoeffRing::prime_field(3)?;
    let w = Representation::permutation_module(f, &alt6_perms())?;
    let sum_zero: Vec<Vec<u32>> = (1..6)
        .map(|i| {
            let mut v = vec![0u32; 6];
            v[0] = 1;
            v[i] = f.neg(1);
            v
        })
        .collect();
    let s = w.sub_rep(&sum_zero)?;
    // all-ones = −Σ (e₀ − eᵢ) since −5 ≡ 1
    let ones = vec![f.neg(1); 5];
    s.quotient_rep(&[ones])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma46 {
    pub dim: usize,
    pub fpf: bool,
    pub ext1: usize,
    pub hom_vv_v: usize,
}

pub fn lemma46(seed: u64) -> Result<Lemma46> {
    let v = alt6_module()?;
    let chain = StabChain::build(&alt6_perms(), &ChainOptions::seeded(seed))?;
    let cp = CertifiedPresentation::from_chain(&chain)?;
    let w = cp.on_strong_generators(&v)?;
    let ext1 = ext1_dim(Some(&cp), &w, &w)?;
    let hom_vv_v = v.tensor(&v)?.hom_space(&v)?.len();
    // (2,3,4,5,6) is generator 1
    let fpf = v.fpf_check(v.image(1))?;
    Ok(Lemma46 { dim: v.dim(), fpf, ext1, hom_vv_v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alt6_module_facts() {
        let l = lemma46(1).unwrap();
        assert_eq!(l, Lemma46 { dim: 4, fpf: true, ext1: 0, hom_vv_v: 0 });
        let v = alt6_module().unwrap();
        assert_eq!(v.hom_space(&v).unwrap().len(), 1);
        let order = enumerate_small(&alt6_perms(), &Perm::identity(6), SMALL_CAP).unwrap().len();
        assert_eq!(order, 360);
    }
}
