//! SL₂(49): generators, the projective-line permutation avatar of PSL₂(49),
//! the basic modules U_j and order-5 eigenvalue data.

use crate::arith::{CoeffRing, Mat, Poly};
use crate::error::{Error, Result};
use crate::group::{element_order, Perm, ORDER_CAP};

use super::rep::Representation;

pub fn gf49() -> CoeffRing {
    CoeffRing::quadratic_field(7).expect("GF(49)")
}

/// Root of y² + y − 1, i.e. the trace of an element of order 5.
fn order5_trace(f: CoeffRing) -> u32 {
    f.elements()
        .find(|&y| f.add(f.add(f.mul(y, y), y), f.neg(1)) == 0)
        .expect("y² + y − 1 has a root in GF(49)")
}

/// Generators of SL₂(49): diag(ω, ω⁻¹), the unipotent [[1,1],[0,1]] and
/// φ = [[0,−1],[1,τ]] of order 5 (τ² + τ = 1), which is not in the Borel.
pub fn sl2_generators() -> Vec<Mat> {
    let f = gf49();
    let w = f.primitive_element().unwrap();
    let a = Mat::diagonal(f, &[w, f.inv(w).unwrap()]);
    let b = Mat::new(f, 2, 2, vec![1, 1, 0, 1]).unwrap();
    let tau = order5_trace(f);
    let phi = Mat::new(f, 2, 2, vec![0, f.neg(1), 1, tau]).unwrap();
    vec![a, b, phi]
}

/// Index of φ among the generators.
pub const PHI: usize = 2;

pub const INFINITY: u32 = 49;

/// Möbius action x ↦ (αx + β)/(γx + δ) on GF(49) ∪ {∞}, with ∞ coded 49.
pub fn projective_perm(m: &Mat) -> Perm {
    let f = m.ring();
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let images = (0..=INFINITY)
        .map(|x| {
            let (num, den) = if x == INFINITY { (a, c) } else { (f.add(f.mul(a, x), b), f.add(f.mul(c, x), d)) };
            match f.inv(den) {
                Some(i) => f.mul(num, i),
                None => INFINITY,
            }
        })
        .collect();
    Perm::from_images(images).expect("Möbius maps are bijective")
}

pub fn psl2_49_perms() -> Vec<Perm> {
    sl2_generators().iter().map(projective_perm).collect()
}

/// U_j on the monomials x^j, x^{j−1}y, …, y^j with g·x = αx + γy and
/// g·y = βx + δy for g = [[α, β], [γ, δ]].
pub fn sym_power(g: &Mat, j: usize) -> Mat {
    let f = g.ring();
    let (a, b, c, d) = (g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1));
    // binary polynomial (αx + γy)^{j−k}(βx + δy)^k as coefficients of x^{j−i} y^i
    let mut m = Mat::zeros(f, j + 1, j + 1);
    for k in 0..=j {
        let mut poly = vec![1u32];
        for t in 0..j {
            let (p, q) = if t < j - k { (a, c) } else { (b, d) };
            let mut next = vec![0u32; poly.len() + 1];
            for (i, &co) in poly.iter().enumerate() {
                next[i] = f.add(next[i], f.mul(co, p));
                next[i + 1] = f.add(next[i + 1], f.mul(co, q));
            }
            poly = next;
        }
        for (i, &co) in poly.iter().enumerate() {
            m.set(i, k, co);
        }
    }
    m
}

pub fn sym_power_basic(j: usize) -> Result<Representation> {
    if j > 6 {
        return Err(Error::Domain(format!("basic modules are U_0..U_6, got U_{j}")));
    }
    let gens = sl2_generators();
    Representation::new(gf49(), j + 1, gens.iter().map(|g| sym_power(g, j)).collect())
}

/// V = U₁ ⊗ U₁^σ.
pub fn twisted_natural_tensor() -> Representation {
    let u1 = sym_power_basic(1).unwrap();
    u1.tensor(&u1.frobenius_twist()).unwrap()
}

/// Multiplicities of the eigenvalues of an order-5 element φ, grouped by
/// exponent class of λ where λ is an eigenvalue of φ on U₁. The classes
/// {λ, λ⁴} and {λ², λ³} are the two Galois orbits over GF(49).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenProfile {
    /// Multiplicity of λ^k for k = 0..4.
    pub mult: [usize; 5],
}

impl EigenProfile {
    pub fn has_all_nontrivial(&self) -> bool {
        self.mult[1..].iter().all(|&m| m > 0)
    }

    pub fn has_one(&self) -> bool {
        self.mult[0] > 0
    }

    pub fn total(&self) -> usize {
        self.mult.iter().sum()
    }
}

/// The two quadratic factors of Φ₅ over GF(49); the first one kills φ on U₁.
fn phi5_factors(f: CoeffRing, phi_on_u1: &Mat) -> Result<(Poly, Poly)> {
    let phi5 = Poly::new(&f, vec![1, 1, 1, 1, 1]);
    let fs = phi5
        .small_factors(&f)
        .ok_or_else(|| Error::UnsupportedRing("Φ₅ does not split into quadratics".into()))?;
    if fs.len() != 2 || fs.iter().any(|q| q.degree() != Some(2)) {
        return Err(Error::UnsupportedRing("unexpected factorization of Φ₅".into()));
    }
    let (p, q) = (fs[0].clone(), fs[1].clone());
    if p.eval_mat(phi_on_u1).is_zero() {
        Ok((p, q))
    } else {
        Ok((q, p))
    }
}

/// Eigenvalue multiplicities of `g` (order 5) acting by `rep_g`, given the
/// action `g_u1` of the same element on U₁, read from kernel dimensions of
/// the factors of x⁵ − 1.
pub fn eigenvalue_profile(rep_g: &Mat, g_u1: &Mat) -> Result<EigenProfile> {
    let f = rep_g.ring();
    if element_order(g_u1, ORDER_CAP)? != 5 {
        return Err(Error::Domain("profile needs an element of order 5".into()));
    }
    let (p1, p2) = phi5_factors(f, g_u1)?;
    let n = rep_g.rows();
    let ker = |m: Mat| -> Result<usize> { Ok(n - m.rank()?) };
    let m0 = ker(rep_g.sub(&Mat::identity(f, n))?)?;
    let k1 = ker(p1.eval_mat(rep_g))?;
    let k2 = ker(p2.eval_mat(rep_g))?;
    if m0 + k1 + k2 != n || k1 % 2 != 0 || k2 % 2 != 0 {
        return Err(Error::Integrity("element is not semisimple of order 5".into()));
    }
    Ok(EigenProfile { mult: [m0, k1 / 2, k2 / 2, k2 / 2, k1 / 2] })
}

/// Hom data for V ⊗ V with V = U₁ ⊗ U₁^σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCheck {
    pub hom_to_v: usize,
    pub hom_from_v: usize,
    /// dim Hom(V⊗V, U) for U = U₀, U₂, U₂^σ, U₂⊗U₂^σ.
    pub multiplicities: [usize; 4],
    pub summand_dims: [usize; 4],
}

pub fn decompose_tensor_check() -> Result<TensorCheck> {
    let v = twisted_natural_tensor();
    let vv = v.tensor(&v)?;
    let u0 = sym_power_basic(0)?;
    let u2 = sym_power_basic(2)?;
    let u2s = u2.frobenius_twist();
    let u22 = u2.tensor(&u2s)?;
    let targets = [&u0, &u2, &u2s, &u22];
    let mut multiplicities = [0; 4];
    let mut summand_dims = [0; 4];
    for (k, u) in targets.iter().enumerate() {
        multiplicities[k] = vv.hom_space(u)?.len();
        summand_dims[k] = u.dim();
    }
    Ok(TensorCheck {
        hom_to_v: vv.hom_space(&v)?.len(),
        hom_from_v: v.hom_space(&vv)?.len(),
        multiplicities,
        summand_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ChainOptions, Element, StabChain};
    use num_bigint::BigUint;

    #[test]
    fn generators_have_expected_orders() {
        let g = sl2_generators();
        assert_eq!(element_order(&g[0], 100).unwrap(), 48);
        assert_eq!(element_order(&g[PHI], 100).unwrap(), 5);
        assert!(g.iter().all(|m| m.det().unwrap() == 1));
    }

    #[test]
    fn projective_avatar_is_a_homomorphism() {
        let g = sl2_generators();
        let ab = &g[0] * &g[PHI];
        assert_eq!(projective_perm(&ab), projective_perm(&g[0]).mul(&projective_perm(&g[PHI])));
        let minus = Mat::identity(gf49(), 2).neg();
        assert!(projective_perm(&minus).is_identity());
    }

    #[test]
    fn psl2_49_order() {
        let c = StabChain::build(&psl2_49_perms(), &ChainOptions::seeded(7)).unwrap();
        assert_eq!(c.order(), BigUint::from(58800u32));
        assert_eq!(c.orbit_lengths(), vec![50, 49, 24]);
    }

    #[test]
    fn sym_powers_are_representations() {
        // oracle: U_j(g)U_j(h) = U_j(gh) for generator pairs
        let g = sl2_generators();
        for j in 0..=6 {
            for x in &g {
                for y in &g {
                    assert_eq!(&sym_power(x, j) * &sym_power(y, j), sym_power(&(x * y), j));
                }
            }
            assert_eq!(sym_power_basic(j).unwrap().dim(), j + 1);
        }
        assert!(sym_power_basic(7).is_err());
        assert_eq!(sym_power(&g[1], 1), g[1]);
    }

    #[test]
    fn profiles() {
        let g = sl2_generators();
        let phi = &g[PHI];
        let p3 = eigenvalue_profile(&sym_power(phi, 3), phi).unwrap();
        // weights ±3, ±1
        assert_eq!(p3.mult, [0, 1, 1, 1, 1]);
        let p4 = eigenvalue_profile(&sym_power(phi, 4), phi).unwrap();
        assert_eq!(p4.mult, [1, 1, 1, 1, 1]);
        let v = twisted_natural_tensor();
        let pv = eigenvalue_profile(v.image(PHI), phi).unwrap();
        assert_eq!(pv.mult, [0, 1, 1, 1, 1]);
        let id = eigenvalue_profile(&Mat::identity(gf49(), 4), phi).unwrap();
        assert_eq!(id.mult, [4, 0, 0, 0, 0]);
    }

    #[test]
    fn tensor_square_has_no_copy_of_v() {
        let t = decompose_tensor_check().unwrap();
        assert_eq!(t.hom_to_v, 0);
        assert_eq!(t.hom_from_v, 0);
        assert_eq!(t.multiplicities, [1, 1, 1, 1]);
        assert_eq!(t.summand_dims.iter().sum::<usize>(), 16);
    }
}
