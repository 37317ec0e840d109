//! Fixed matrices and permutation generators, transcribed once in the
//! column convention: a map's matrix has the image of vᵢ in column i.

use crate::arith::{CoeffRing, Mat};
use crate::error::{Error, Result};
use crate::group::Perm;
use crate::modrep::Representation;

fn perms(n: usize, cycles: &[&str]) -> Vec<Perm> {
    cycles.iter().map(|c| Perm::from_cycles(n, c).expect("valid cycle")).collect()
}

/// Sym(5) = ⟨(1,2), (1,2,3,4,5)⟩.
pub fn sym5_perms() -> Vec<Perm> {
    perms(5, &["(1,2)", "(1,2,3,4,5)"])
}

/// Alt(5) = ⟨(1,2,3), (1,2,3,4,5)⟩; the 5-cycle is generator 1.
pub fn alt5_perms() -> Vec<Perm> {
    perms(5, &["(1,2,3)", "(1,2,3,4,5)"])
}

/// Point stabiliser of 1 in Sym(5).
pub fn sym4_perms() -> Vec<Perm> {
    perms(5, &["(2,3)", "(2,3,4,5)"])
}

/// S = ⟨(2,3)(4,5), (2,4)(3,5)⟩.
pub fn klein_s_perms() -> Vec<Perm> {
    perms(5, &["(2,3)(4,5)", "(2,4)(3,5)"])
}

/// Dih(10) = ⟨(1,2,3,4,5), (2,5)(3,4)⟩ inside Alt(5).
pub fn dih10_perms() -> Vec<Perm> {
    perms(5, &["(1,2,3,4,5)", "(2,5)(3,4)"])
}

pub fn five_cycle() -> Perm {
    Perm::from_cycles(5, "(1,2,3,4,5)").expect("valid cycle")
}

pub fn field(r: u32) -> Result<CoeffRing> {
    if r == 2 || r == 5 {
        return Err(Error::Domain(format!("r = {r} is excluded")));
    }
    CoeffRing::prime_field(r)
}

/// V over GF(r), r odd and r ≠ 5, on the given permutations.
pub fn v_module(r: u32, perms: &[Perm]) -> Result<Representation> {
    Representation::deleted_permutation_module(field(r)?, perms)
}

/// σ = v₁ + v₂ + v₃ + v₄.
pub fn sigma(ring: CoeffRing) -> Vec<u32> {
    vec![ring.one(); 4]
}

/// θ: vᵢ ↦ σ − vᵢ.
pub fn theta(ring: CoeffRing) -> Mat {
    let rows: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| i64::from(i != j)).collect()).collect();
    Mat::from_int_rows(ring, &rows).expect("4×4")
}

/// γ(vᵢ ⊗ vⱼ) in the v-basis over ℤ: −5vᵢ + 2σ when i = j, σ otherwise.
pub fn gamma_integral(i: usize, j: usize) -> [i64; 4] {
    let mut out = [1; 4];
    if i == j {
        out = [2; 4];
        out[i] -= 5;
    }
    out
}

/// γ as a 4 × 16 matrix on V ⊗ V with tensor index 4i + j.
pub fn gamma(ring: CoeffRing) -> Mat {
    let mut m = Mat::zeros(ring, 4, 16);
    for i in 0..4 {
        for j in 0..4 {
            for (k, &c) in gamma_integral(i, j).iter().enumerate() {
                m.set(k, 4 * i + j, ring.from_int(c));
            }
        }
    }
    m
}
