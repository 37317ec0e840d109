//! Hall–Witt defect of γ-composed commutator maps in a graded class-three
//! setting, written additively.
//!
//! Level 1 carries C, D, E with standard bases cᵢ, dᵢ, eᵢ. The commutator
//! maps C⊗D → F, C⊗E → H and D⊗E → J are m₁γ, m₂γ and m₃γ, and every map
//! into the level-3 factor K is γ. An inactive level-2 factor has m = 0.
//! Multiplicative products like σ⁵f₂⁻¹⁰ become vectors 5σ − 10f₂.

use super::constants::gamma_integral;
use crate::arith::CoeffRing;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedTriple {
    pub r: u32,
    /// Scalars of the maps onto F, H and J.
    pub m: [u32; 3],
}

impl GradedTriple {
    pub fn unit(r: u32) -> Self {
        GradedTriple { r, m: [1, 1, 1] }
    }
}

/// γ(x ⊗ y) over ℤ.
pub fn gamma_apply(x: &[i64; 4], y: &[i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            let c = x[i] * y[j];
            if c == 0 {
                continue;
            }
            for (o, g) in out.iter_mut().zip(gamma_integral(i, j)) {
                *o += c * g;
            }
        }
    }
    out
}

fn basis(i: usize) -> [i64; 4] {
    let mut e = [0; 4];
    e[i - 1] = 1;
    e
}

/// γ(γ(x ⊗ y) ⊗ z), the value of [x, y, z] with unit scalars.
pub fn triple(x: &[i64; 4], y: &[i64; 4], z: &[i64; 4]) -> [i64; 4] {
    gamma_apply(&gamma_apply(x, y), z)
}

/// The three Hall–Witt paths at (cᵢ, dⱼ, eₖ) over ℤ, unweighted:
/// [cᵢ,dⱼ,eₖ] through F, [dⱼ,eₖ,cᵢ] through J, [eₖ,cᵢ,dⱼ] through H.
pub fn hall_witt_paths(i: usize, j: usize, k: usize) -> [[i64; 4]; 3] {
    let (c, d, e) = (basis(i), basis(j), basis(k));
    [triple(&c, &d, &e), triple(&d, &e, &c), triple(&e, &c, &d)]
}

/// Defect vector in K (k-basis), reduced mod r; indices are 1-based.
pub fn hall_witt_defect(t: &GradedTriple, idx: (usize, usize, usize)) -> Result<Vec<u32>> {
    let f = CoeffRing::prime_field(t.r)?;
    let [p1, p2, p3] = hall_witt_paths(idx.0, idx.1, idx.2);
    let [m1, m2, m3] = t.m.map(|x| f.from_int(i64::from(x)));
    Ok((0..4)
        .map(|a| {
            let t1 = f.mul(m1, f.from_int(p1[a]));
            let t2 = f.mul(m3, f.from_int(p2[a]));
            let t3 = f.mul(m2, f.from_int(p3[a]));
            f.add(f.add(t1, t2), t3)
        })
        .collect())
}

/// Trilinear form of the defect on arbitrary level-1 vectors.
pub fn hall_witt_defect_vectors(t: &GradedTriple, c: &[i64; 4], d: &[i64; 4], e: &[i64; 4]) -> Result<Vec<u32>> {
    let f = CoeffRing::prime_field(t.r)?;
    let (p1, p2, p3) = (triple(c, d, e), triple(d, e, c), triple(e, c, d));
    let [m1, m2, m3] = t.m.map(|x| f.from_int(i64::from(x)));
    Ok((0..4)
        .map(|a| {
            let s = f.add(f.mul(m1, f.from_int(p1[a])), f.mul(m3, f.from_int(p2[a])));
            f.add(s, f.mul(m2, f.from_int(p3[a])))
        })
        .collect())
}

/// Exhaustive sweep over index triples and scalars with m₁ ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub r: u32,
    pub cases: u64,
    pub zero_defects: u64,
    /// First vanishing case, as (indices, scalars).
    pub first_zero: Option<((usize, usize, usize), [u32; 3])>,
    /// Zero defects among cases at the indices (1, 1, 2).
    pub zero_at_112: u64,
}

pub fn hall_witt_sweep(r: u32) -> Result<SweepReport> {
    let mut rep = SweepReport { r, cases: 0, zero_defects: 0, first_zero: None, zero_at_112: 0 };
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                for m1 in 1..r {
                    for m2 in 0..r {
                        for m3 in 0..r {
                            let t = GradedTriple { r, m: [m1, m2, m3] };
                            rep.cases += 1;
                            if hall_witt_defect(&t, (i, j, k))?.iter().all(|&x| x == 0) {
                                rep.zero_defects += 1;
                                rep.first_zero.get_or_insert(((i, j, k), t.m));
                                if (i, j, k) == (1, 1, 2) {
                                    rep.zero_at_112 += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}
