//! The class-two group K = U ⋊ J with J = ⟨θ-block, diag(x_π, x_π)⟩.

use num_bigint::BigUint;

use super::constants::{sym5_perms, theta, v_module};
use super::theta::conjugation_orbit;
use crate::arith::{span_rref, CoeffRing, Mat};
use crate::cohomology::{hom_module, mat_to_vec};
use crate::error::{Error, Result};
use crate::group::{element_order, small::commutator, ChainOptions, Element, StabChain, ORDER_CAP};
use crate::modrep::Representation;

/// Generators and structural data of K ≤ GL₉(r) acting affinely on GF(r)⁸.
#[derive(Clone, Debug)]
pub struct Thm24 {
    pub r: u32,
    pub ring: CoeffRing,
    /// θ-block, then diag(x_π, x_π) for each generator π of Sym(5).
    pub j_gens: Vec<Mat>,
    /// `j_gens` embedded as 9 × 9 matrices, then the 8 translations.
    pub k_gens: Vec<Mat>,
    /// Basis of the span of the θ-orbit in Hom(V, V).
    pub theta_span: Vec<Mat>,
    pub v: Representation,
}

/// Index of diag(x_π, x_π) for the 5-cycle in `k_gens`.
pub const FIVE_CYCLE_GEN: usize = 2;
/// Index of diag(x_π, x_π) for the transposition in `k_gens`.
pub const TRANSPOSITION_GEN: usize = 1;

fn upper_block(f: CoeffRing, m: &Mat) -> Mat {
    let mut b = Mat::identity(f, 8);
    b.set_block(0, 4, m);
    b
}

fn affine(f: CoeffRing, lin: &Mat, shift: &[u32]) -> Mat {
    let mut a = Mat::identity(f, 9);
    a.set_block(0, 0, lin);
    for (i, &s) in shift.iter().enumerate() {
        a.set(i, 8, s);
    }
    a
}

pub fn build_thm24(r: u32) -> Result<Thm24> {
    let v = v_module(r, &sym5_perms())?;
    let f = v.ring();
    let mut j_gens = vec![upper_block(f, &theta(f))];
    for x in v.images() {
        j_gens.push(x.direct_sum(x));
    }
    let mut k_gens: Vec<Mat> = j_gens.iter().map(|g| affine(f, g, &[0; 8])).collect();
    for k in 0..8 {
        let mut e = vec![0u32; 8];
        e[k] = 1;
        k_gens.push(affine(f, &Mat::identity(f, 8), &e));
    }
    let orbit = conjugation_orbit(&v, &theta(f));
    let vecs: Vec<Vec<u32>> = orbit.iter().map(mat_to_vec).collect();
    let theta_span = span_rref(f, 16, &vecs)?
        .iter()
        .map(|b| crate::cohomology::vec_to_mat(f, 4, 4, b))
        .collect();
    Ok(Thm24 { r, ring: f, j_gens, k_gens, theta_span, v })
}

/// Orders certified for K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm24Orders {
    pub j: BigUint,
    pub top: BigUint,
    pub or_k: BigUint,
    pub k: BigUint,
}

impl Thm24 {
    fn in_theta_span(&self, m: &Mat) -> bool {
        let mut vecs: Vec<Vec<u32>> = self.theta_span.iter().map(mat_to_vec).collect();
        let n = vecs.len();
        vecs.push(mat_to_vec(m));
        span_rref(self.ring, 16, &vecs).map(|b| b.len() == n).unwrap_or(false)
    }

    /// Membership in the normal r-subgroup: unipotent block form
    /// [[I, M, u], [0, I, u'], [0, 0, 1]] with M in the θ-span.
    pub fn in_or_k(&self, m: &Mat) -> bool {
        let f = self.ring;
        if m.rows() != 9 || m.cols() != 9 {
            return false;
        }
        let i4 = Mat::identity(f, 4);
        let z4 = Mat::zeros(f, 4, 4);
        m.block(0, 0, 4, 4) == i4
            && m.block(4, 4, 4, 4) == i4
            && m.block(4, 0, 4, 4) == z4
            && (0..8).all(|c| m.get(8, c) == 0)
            && m.get(8, 8) == 1
            && self.in_theta_span(&m.block(0, 4, 4, 4))
    }

    /// Generators of the normal r-subgroup: the 8 translations and one
    /// θ-span block per basis element.
    pub fn or_k_generators(&self) -> Vec<Mat> {
        let f = self.ring;
        let mut gens: Vec<Mat> = self.k_gens[self.j_gens.len()..].to_vec();
        for m in &self.theta_span {
            gens.push(affine(f, &upper_block(f, m), &[0; 8]));
        }
        gens
    }

    /// |J| from a chain on GF(r)⁸, |J/N| from a chain of the top block,
    /// |N| = r^dim(θ-span), and |K| = r⁸·|J|.
    pub fn orders(&self, seed: u64) -> Result<Thm24Orders> {
        let j = StabChain::build(&self.j_gens, &ChainOptions::seeded(seed))?.order();
        let top = StabChain::build(self.v.images(), &ChainOptions::seeded(seed))?.order();
        let r = BigUint::from(self.r);
        let n = r.pow(self.theta_span.len() as u32);
        if &top * &n != j {
            return Err(Error::Integrity(format!("|J| = {j} but |J/N|·|N| = {}", &top * &n)));
        }
        for g in &self.j_gens {
            for m in &self.theta_span {
                let c = &(&(g * &upper_block(self.ring, m)) * &g.invert()?).block(0, 4, 4, 4);
                if !self.in_theta_span(c) {
                    return Err(Error::Closure("θ-span is not normal in J".into()));
                }
            }
        }
        let r8 = r.pow(8);
        Ok(Thm24Orders { or_k: &r8 * &n, k: &r8 * &j, j, top })
    }
}

/// Nilpotency class certificate for a normal subgroup given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCertificate {
    /// Every commutator of generators is central in the subgroup.
    pub commutators_central: bool,
    /// A pair of generators with non-trivial commutator.
    pub witness: Option<(usize, usize)>,
}

impl ClassCertificate {
    /// Exact class when the certificate pins it down (1 or 2).
    pub fn class(&self) -> Option<usize> {
        match (self.witness, self.commutators_central) {
            (None, _) => Some(1),
            (Some(_), true) => Some(2),
            (Some(_), false) => None,
        }
    }
}

pub fn class_certificate(gens: &[Mat], conjugators: &[Mat], member: impl Fn(&Mat) -> bool) -> Result<ClassCertificate> {
    for (i, g) in gens.iter().enumerate() {
        for (j, c) in conjugators.iter().enumerate() {
            let conj = &(&c.invert()? * g) * c;
            if !member(&conj) || !member(&(&(c * g) * &c.invert()?)) {
                return Err(Error::Closure(format!("conjugate of generator {} by conjugator {} leaves the subgroup", i + 1, j + 1)));
            }
        }
    }
    let mut witness = None;
    let mut central = true;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = commutator(&gens[i], &gens[j]);
            if c.is_one() {
                continue;
            }
            witness.get_or_insert((i, j));
            if gens.iter().any(|g| (g * &c) != (&c * g)) {
                central = false;
            }
        }
    }
    Ok(ClassCertificate { commutators_central: central, witness })
}

/// s has order 5 and acts without fixed points on GF(r)⁸ and on the θ-span.
/// By coprime action this gives C_K(s) = ⟨s⟩.
pub fn self_centralising_check(k: &Thm24, s: &Mat) -> Result<bool> {
    let ord = element_order(s, ORDER_CAP)?;
    if ord != 5 {
        return Err(Error::Domain(format!("element has order {ord}, not 5")));
    }
    let f = k.ring;
    let lin = s.block(0, 0, 8, 8);
    let outer = Representation::new(f, 8, vec![lin.clone()])?;
    let x = lin.block(0, 0, 4, 4);
    let basis: Vec<Vec<u32>> = k.theta_span.iter().map(mat_to_vec).collect();
    let one = Representation::new(f, 4, vec![x.clone()])?;
    let inner = hom_module(&one, &one)?.sub_rep(&basis)?;
    Ok(outer.fpf_check(&lin)? && inner.fpf_check(inner.image(0))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_for_small_primes() {
        for r in [3u32, 7] {
            let k = build_thm24(r).unwrap();
            let o = k.orders(1).unwrap();
            let rr = BigUint::from(r);
            assert_eq!(o.or_k, rr.pow(12));
            assert_eq!(o.top, BigUint::from(120u32));
            assert_eq!(&o.k / &o.or_k, BigUint::from(120u32));
        }
    }

    #[test]
    fn full_chain_agrees_for_r3() {
        let k = build_thm24(3).unwrap();
        let c = StabChain::build(&k.k_gens, &ChainOptions::seeded(3)).unwrap();
        assert_eq!(c.order(), BigUint::from(3u32).pow(12) * 120u32);
        let p = StabChain::build(&k.or_k_generators(), &ChainOptions::seeded(3)).unwrap();
        assert_eq!(p.order(), BigUint::from(3u32).pow(12));
        // structural membership agrees with the chain on random elements
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let x = c.random_element(&mut rng);
            assert_eq!(k.in_or_k(&x), p.contains(&x));
        }
    }

    #[test]
    fn class_is_exactly_two() {
        for r in [3u32, 7] {
            let k = build_thm24(r).unwrap();
            let cert = class_certificate(&k.or_k_generators(), &k.k_gens, |m| k.in_or_k(m)).unwrap();
            assert_eq!(cert.class(), Some(2));
        }
    }

    #[test]
    fn translations_are_abelian() {
        let k = build_thm24(3).unwrap();
        let t = &k.k_gens[k.j_gens.len()..];
        let cert = class_certificate(t, t, |m| k.in_or_k(m)).unwrap();
        assert_eq!(cert.class(), Some(1));
    }

    #[test]
    fn closure_failure_names_the_conjugate() {
        let k = build_thm24(3).unwrap();
        let t = &k.k_gens[k.j_gens.len()..];
        let only_first = |m: &Mat| m.get(1, 8) == 0 && k.in_or_k(m);
        let err = class_certificate(&t[..1], &k.k_gens, only_first);
        assert!(matches!(err, Err(Error::Closure(_))));
    }

    #[test]
    fn five_cycle_is_self_centralising() {
        for r in [3u32, 7, 11] {
            let k = build_thm24(r).unwrap();
            let s = &k.k_gens[FIVE_CYCLE_GEN];
            assert_eq!(element_order(s, 100).unwrap(), 5);
            assert!(self_centralising_check(&k, s).unwrap());
        }
        let k = build_thm24(3).unwrap();
        assert!(self_centralising_check(&k, &k.k_gens[TRANSPOSITION_GEN]).is_err());
    }
}
