//! Computations around PSL₂(49): the integral Alt(5) over ℤ/49, and
//! complete reducibility of the 4-dimensional GF(7)-module.

use num_bigint::BigUint;

use super::constants::alt5_perms;
use crate::arith::{CoeffRing, Mat};
use crate::centralizer::{commutant, reduction_torsion, sylow5_element, unit_group_order};
use crate::cohomology::{ext1_dim, CertifiedPresentation};
use crate::error::Result;
use crate::group::{element_order, ChainData, ChainOptions, Perm, StabChain, ORBIT_CAP, ORDER_CAP};
use crate::modrep::sl2::{psl2_49_perms, twisted_natural_tensor};
use crate::modrep::{galois_descent, Representation};

pub const PSL2_49_ORDER: u64 = 58_800;

/// Integral Alt(5) on V over ℤ/49; generator 1 is the 5-cycle.
pub fn integral_alt5(ring: CoeffRing) -> Result<Representation> {
    Representation::deleted_permutation_module(ring, &alt5_perms())
}

#[derive(Clone, Debug)]
pub struct Lemma41 {
    pub centralizer_order: BigUint,
    /// Elements of the mod-7 reduction of C_K(S) with x²⁵ = 1.
    pub five_torsion: usize,
    pub t_order: u64,
    pub group_order: BigUint,
    pub divides_psl: bool,
    pub gens: Vec<Mat>,
    pub chain: StabChain<Mat>,
}

/// C_K(S) for S the Sylow 5-subgroup of A, its Sylow 5-subgroup T and
/// the order of ⟨A, T⟩ in GL₄(ℤ/49). A stored chain for ⟨A, T⟩ is
/// reused when it matches the generators.
pub fn lemma41(seed: u64, stored: Option<&ChainData>) -> Result<Lemma41> {
    let ring = CoeffRing::local_ring(7, 2)?;
    let a = integral_alt5(ring)?;
    let s = a.image(1).clone();
    let alg = commutant(ring, 4, &[s])?;
    let centralizer_order = unit_group_order(&alg)?;
    let five_torsion = reduction_torsion(&alg, 25)?.len();
    let t = sylow5_element(&alg, 25, seed)?;
    let t_order = element_order(&t, ORDER_CAP)?;
    let gens = vec![a.image(0).clone(), a.image(1).clone(), t];
    let chain = match stored.map(|d| StabChain::from_data(&gens, d, ORBIT_CAP)) {
        Some(Ok(c)) => c,
        _ => StabChain::build(&gens, &ChainOptions::seeded(seed))?,
    };
    let group_order = chain.order();
    let divides_psl = (BigUint::from(PSL2_49_ORDER) % &group_order) == BigUint::ZERO;
    Ok(Lemma41 { centralizer_order, five_torsion, t_order, group_order, divides_psl, gens, chain })
}

pub fn psl2_49_chain(seed: u64, stored: Option<&ChainData>) -> Result<StabChain<Perm>> {
    let gens = psl2_49_perms();
    if let Some(Ok(c)) = stored.map(|d| StabChain::from_data(&gens, d, ORBIT_CAP)) {
        return Ok(c);
    }
    StabChain::build(&gens, &ChainOptions::seeded(seed))
}

#[derive(Clone, Debug)]
pub struct Lemma43 {
    pub descended: Representation,
    pub descent_certified: bool,
    pub cosets: BigUint,
    pub ext1: usize,
}

/// Descends U₁ ⊗ U₁^σ to GF(7) and computes Ext¹ over a presentation
/// certified by coset enumeration.
pub fn lemma43(chain: &StabChain<Perm>) -> Result<Lemma43> {
    let v = twisted_natural_tensor();
    let d = galois_descent(&v)?;
    let descent_certified = d.certify(&v)?;
    let cp = CertifiedPresentation::from_chain(chain)?;
    let w = cp.on_strong_generators(&d.rep)?;
    let ext1 = ext1_dim(Some(&cp), &w, &w)?;
    Ok(Lemma43 { descended: d.rep, descent_certified, cosets: cp.order.clone(), ext1 })
}
