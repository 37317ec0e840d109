//! The X-submodule of Hom(V, V) generated by θ.

use std::collections::HashSet;

use super::constants::{sym4_perms, sym5_perms, theta, v_module};
use crate::arith::{span_rref, Mat};
use crate::cohomology::{hom_module, mat_to_vec};
use crate::error::Result;
use crate::modrep::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub r: u32,
    pub stabilizer_fixes: bool,
    pub orbit_size: usize,
    pub span_dim: usize,
    pub iso_to_v: bool,
    pub translate_sum_zero: bool,
}

/// Orbit of a matrix under φ ↦ ρ(g)·φ·ρ(g)⁻¹ for the generators of `rep`.
pub fn conjugation_orbit(rep: &Representation, m: &Mat) -> Vec<Mat> {
    let inverses: Vec<Mat> = rep.images().iter().map(|g| g.invert().expect("invertible")).collect();
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = vec![m.clone()];
    seen.insert(m.clone());
    let mut k = 0;
    while k < out.len() {
        for (g, gi) in rep.images().iter().zip(&inverses) {
            let y = &(g * &out[k]) * gi;
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

/// Span of the θ-orbit inside Hom(V, V), as a module.
pub fn theta_module(r: u32) -> Result<(Representation, Vec<Mat>)> {
    let v = v_module(r, &sym5_perms())?;
    let orbit = conjugation_orbit(&v, &theta(v.ring()));
    let vecs: Vec<Vec<u32>> = orbit.iter().map(mat_to_vec).collect();
    let basis = span_rref(v.ring(), 16, &vecs)?;
    let u = hom_module(&v, &v)?.sub_rep(&basis)?;
    Ok((u, orbit))
}

pub fn theta_submodule_check(r: u32) -> Result<ThetaReport> {
    let v = v_module(r, &sym5_perms())?;
    let f = v.ring();
    let th = theta(f);
    let stab = v_module(r, &sym4_perms())?;
    let stabilizer_fixes = stab.images().iter().all(|g| (g * &th) == (&th * g));
    let (u, orbit) = theta_module(r)?;
    let homs = u.hom_space(&v)?;
    let iso_to_v = homs.len() == 1 && homs[0].matrix.is_invertible();
    let sum = orbit.iter().skip(1).fold(orbit[0].clone(), |acc, m| acc.add(m).expect("4×4"));
    Ok(ThetaReport {
        r,
        stabilizer_fixes,
        orbit_size: orbit.len(),
        span_dim: u.dim(),
        iso_to_v,
        translate_sum_zero: sum.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_generates_a_copy_of_v() {
        for r in [3, 7, 11, 13] {
            let rep = theta_submodule_check(r).unwrap();
            assert!(rep.stabilizer_fixes, "r = {r}");
            assert_eq!(rep.orbit_size, 5);
            assert_eq!(rep.span_dim, 4);
            assert!(rep.iso_to_v);
            assert!(rep.translate_sum_zero);
        }
    }

    #[test]
    fn excluded_primes() {
        assert!(theta_submodule_check(5).is_err());
        assert!(theta_submodule_check(2).is_err());
    }

    #[test]
    fn theta_has_trace_zero_translates() {
        let (_, orbit) = theta_module(7).unwrap();
        assert!(orbit.iter().all(|m| m.trace() == 0));
    }
}
