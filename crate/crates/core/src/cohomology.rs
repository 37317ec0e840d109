//! H¹(G, M) and Ext¹ via derivations over a certified presentation.
//!
//! Modules are left modules on column vectors, so a derivation satisfies
//! d(gh) = d(g) + g·d(h) and a relator x₁⋯x_l imposes
//! Σ_t ρ(x₁⋯x_{t−1})·d(x_t) = 0 with d(s⁻¹) = −ρ(s)⁻¹·d(s).

use num_bigint::BigUint;
use rand::Rng;

use crate::arith::Mat;
use crate::error::{Error, Result};
use crate::group::{coset_enumeration, Slp, presentation_from_chain, Element, Presentation, StabChain, Word, COSET_CAP};
use crate::modrep::Representation;

/// A presentation on the strong generators of a chain whose coset
/// enumeration over the trivial subgroup reached the chain's order.
#[derive(Clone, Debug)]
pub struct CertifiedPresentation {
    pub presentation: Presentation,
    pub order: BigUint,
    slp: Slp,
    strong_node: Vec<u32>,
}

impl CertifiedPresentation {
    pub fn from_chain<E: Element>(chain: &StabChain<E>) -> Result<Self> {
        let presentation = presentation_from_chain(chain)?;
        let order = chain.order();
        let index = coset_enumeration(&presentation, &[], COSET_CAP)?;
        if BigUint::from(index) != order {
            return Err(Error::Integrity(format!("coset enumeration gave {index}, chain order is {order}")));
        }
        let (slp, nodes) = chain.slp();
        Ok(CertifiedPresentation { presentation, order, slp: slp.clone(), strong_node: nodes.to_vec() })
    }

    pub fn ngens(&self) -> usize {
        self.presentation.ngens()
    }

    /// Rewrites a representation given on the chain's original generators
    /// onto the presentation's strong generators.
    pub fn on_strong_generators(&self, rep: &Representation) -> Result<Representation> {
        let n = rep.dim();
        let images = self.slp.evaluate(
            &self.strong_node,
            |g| rep.image(g).clone(),
            || Mat::identity(rep.ring(), n),
            |a, b| a * b,
            |a| a.invert().expect("invertible"),
        );
        Representation::new(rep.ring(), rep.dim(), images)
    }

    /// Number of cosets reached; equal to the group order by construction.
    pub fn coset_count(&self) -> &BigUint {
        &self.order
    }
}

/// Cocycles of a presentation with coefficients in a module, modulo
/// inner derivations.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub presentation: Presentation,
    pub module: Representation,
    /// Each entry lists d(s) for every generator s.
    pub cocycles: Vec<Vec<Vec<u32>>>,
    pub inner_dim: usize,
    pub h1: usize,
}

fn relator_holds(rep: &Representation, w: &[i32]) -> bool {
    rep.eval_word(w).is_identity()
}

/// Coefficient blocks of the unknowns d(s₁), …, d(s_n) in d(w).
fn word_coefficients(rep: &Representation, inverses: &[Mat], w: &[i32]) -> Vec<Mat> {
    let ring = rep.ring();
    let n = rep.dim();
    let mut blocks = vec![Mat::zeros(ring, n, n); rep.ngens()];
    let mut prefix = Mat::identity(ring, n);
    for &l in w {
        let g = l.unsigned_abs() as usize - 1;
        if l > 0 {
            blocks[g] = blocks[g].add(&prefix).expect("square");
            prefix = &prefix * rep.image(g);
        } else {
            prefix = &prefix * &inverses[g];
            blocks[g] = blocks[g].sub(&prefix).expect("square");
        }
    }
    blocks
}

pub fn derivation_space(p: &Presentation, m: &Representation) -> Result<DerivationSpace> {
    if !m.ring().is_field() {
        return Err(Error::UnsupportedRing("derivation spaces need a field".into()));
    }
    if m.ngens() != p.ngens() {
        return Err(Error::Dimension(format!("module has {} generators, presentation {}", m.ngens(), p.ngens())));
    }
    if let Some(bad) = p.relators.iter().position(|r| !relator_holds(m, r)) {
        return Err(Error::Integrity(format!("relator {} fails in the module", bad + 1)));
    }
    let ring = m.ring();
    let n = m.dim();
    let ng = p.ngens();
    let inverses: Vec<Mat> = m.images().iter().map(|g| g.invert()).collect::<Result<_>>()?;
    let mut sys = Mat::zeros(ring, n * p.relators.len(), n * ng);
    for (ri, r) in p.relators.iter().enumerate() {
        for (g, b) in word_coefficients(m, &inverses, r).iter().enumerate() {
            sys.set_block(ri * n, g * n, b);
        }
    }
    let z = sys.nullspace()?;
    let fixed = m.fixed_points_of_group()?.len();
    let inner_dim = n - fixed;
    let cocycles: Vec<Vec<Vec<u32>>> = z.iter().map(|v| v.chunks(n).map(|c| c.to_vec()).collect()).collect();
    let h1 = cocycles.len() - inner_dim;
    Ok(DerivationSpace { presentation: p.clone(), module: m.clone(), cocycles, inner_dim, h1 })
}

impl DerivationSpace {
    pub fn cocycle_dim(&self) -> usize {
        self.cocycles.len()
    }

    /// d(w) for the k-th basis cocycle.
    pub fn evaluate(&self, k: usize, w: &[i32]) -> Vec<u32> {
        let m = &self.module;
        let ring = m.ring();
        let inverses: Vec<Mat> = m.images().iter().map(|g| g.invert().expect("invertible")).collect();
        let mut acc = vec![0u32; m.dim()];
        for (g, b) in word_coefficients(m, &inverses, w).iter().enumerate() {
            let part = b.apply(&self.cocycles[k][g]);
            for (a, x) in acc.iter_mut().zip(part) {
                *a = ring.add(*a, x);
            }
        }
        acc
    }

    /// Checks every basis cocycle on `trials` random products of conjugated
    /// relators; returns the number of trials that passed.
    pub fn check_consequences(&self, rng: &mut impl Rng, trials: usize) -> usize {
        let p = &self.presentation;
        let ng = p.ngens() as i32;
        let mut passed = 0;
        for _ in 0..trials {
            let mut w: Word = Vec::new();
            for _ in 0..rng.gen_range(1..=3) {
                let u: Word = (0..rng.gen_range(0..6))
                    .map(|_| {
                        let g = rng.gen_range(1..=ng);
                        if rng.gen_bool(0.5) {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect();
                let r = &p.relators[rng.gen_range(0..p.relators.len())];
                let r = if rng.gen_bool(0.5) { r.clone() } else { crate::group::invert_word(r) };
                w.extend(&u);
                w.extend(r);
                w.extend(crate::group::invert_word(&u));
            }
            if (0..self.cocycles.len()).all(|k| self.evaluate(k, &w).iter().all(|&x| x == 0)) {
                passed += 1;
            }
        }
        passed
    }
}

pub fn h1(p: &Presentation, m: &Representation) -> Result<usize> {
    Ok(derivation_space(p, m)?.h1)
}

/// Hom(V, W) as a module: φ ↦ ρ_W(g)·φ·ρ_V(g)⁻¹, on column-stacked
/// dim W × dim V matrices.
pub fn hom_module(v: &Representation, w: &Representation) -> Result<Representation> {
    if v.ngens() != w.ngens() || v.ring() != w.ring() {
        return Err(Error::Dimension("modules live on different groups".into()));
    }
    // vec(A φ B) = (Bᵀ ⊗ A) vec(φ) for column stacking
    let images = v
        .images()
        .iter()
        .zip(w.images())
        .map(|(gv, gw)| Ok(gv.invert()?.transpose().kron(gw)))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(v.ring(), v.dim() * w.dim(), images)
}

/// Column-stacked coordinates of a matrix, matching `hom_module`.
pub fn mat_to_vec(m: &Mat) -> Vec<u32> {
    (0..m.cols()).flat_map(|c| (0..m.rows()).map(move |r| m.get(r, c))).collect()
}

pub fn vec_to_mat(ring: crate::arith::CoeffRing, rows: usize, cols: usize, v: &[u32]) -> Mat {
    let mut m = Mat::zeros(ring, rows, cols);
    for c in 0..cols {
        for r in 0..rows {
            m.set(r, c, v[c * rows + r]);
        }
    }
    m
}

/// dim Ext¹(V, W) = dim H¹(G, Hom(V, W)); both modules are on the
/// presentation's generators.
pub fn ext1_dim(p: Option<&CertifiedPresentation>, v: &Representation, w: &Representation) -> Result<usize> {
    let p = p.ok_or(Error::MissingPresentation)?;
    h1(&p.presentation, &hom_module(v, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CoeffRing;
    use crate::group::{ChainOptions, Perm};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alt5() -> Vec<Perm> {
        vec![Perm::from_cycles(5, "(1,2,3)").unwrap(), Perm::from_cycles(5, "(1,2,3,4,5)").unwrap()]
    }

    fn certified(perms: &[Perm], seed: u64) -> CertifiedPresentation {
        let c = StabChain::build(perms, &ChainOptions::seeded(seed)).unwrap();
        CertifiedPresentation::from_chain(&c).unwrap()
    }

    #[test]
    fn alt5_examples_over_gf3() {
        let f = CoeffRing::prime_field(3).unwrap();
        let cp = certified(&alt5(), 1);
        assert_eq!(cp.order, BigUint::from(60u32));
        let triv = cp.on_strong_generators(&Representation::trivial(f, 2)).unwrap();
        assert_eq!(h1(&cp.presentation, &triv).unwrap(), 0);
        let v = cp.on_strong_generators(&Representation::deleted_permutation_module(f, &alt5()).unwrap()).unwrap();
        let ds = derivation_space(&cp.presentation, &v).unwrap();
        assert_eq!(ds.h1, 1);
        assert_eq!(ds.inner_dim, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert_eq!(ds.check_consequences(&mut rng, 100), 100);
        assert_eq!(ext1_dim(Some(&cp), &v, &v).unwrap(), 0);
        assert_eq!(ext1_dim(Some(&cp), &triv, &triv).unwrap(), 0);
        assert_eq!(ext1_dim(None, &v, &v), Err(Error::MissingPresentation));
    }

    #[test]
    fn hom_module_acts_by_conjugation() {
        let f = CoeffRing::prime_field(7).unwrap();
        let v = Representation::deleted_permutation_module(f, &alt5()).unwrap();
        let w = v.tensor(&v).unwrap().wedge2();
        let h = hom_module(&v, &w).unwrap();
        let phi = Mat::new(f, w.dim(), 4, (0..4 * w.dim() as u32).map(|k| (k * k + 3) % 7).collect()).unwrap();
        for g in 0..2 {
            let direct = &(w.image(g) * &phi) * &v.image(g).invert().unwrap();
            assert_eq!(h.image(g).apply(&mat_to_vec(&phi)), mat_to_vec(&direct));
        }
        assert_eq!(vec_to_mat(f, w.dim(), 4, &mat_to_vec(&phi)), phi);
    }

    #[test]
    fn independent_of_chain_seed() {
        let f = CoeffRing::prime_field(3).unwrap();
        let base = Representation::deleted_permutation_module(f, &alt5()).unwrap();
        let dims: Vec<usize> = [2u64, 9, 31]
            .iter()
            .map(|&s| {
                let cp = certified(&alt5(), s);
                h1(&cp.presentation, &cp.on_strong_generators(&base).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(dims, vec![1, 1, 1]);
    }

    #[test]
    fn cyclic_group_has_h1_equal_to_fixed_dimension() {
        // H¹(C_3, GF(3)) = Hom(C_3, GF(3)) is 1-dimensional
        let f = CoeffRing::prime_field(3).unwrap();
        let cp = certified(&[Perm::from_cycles(3, "(1,2,3)").unwrap()], 0);
        let t = cp.on_strong_generators(&Representation::trivial(f, 1)).unwrap();
        assert_eq!(h1(&cp.presentation, &t).unwrap(), 1);
        // coprime: H¹(C_3, GF(2)) = 0
        let f2 = CoeffRing::prime_field(2).unwrap();
        let t2 = cp.on_strong_generators(&Representation::trivial(f2, 1)).unwrap();
        assert_eq!(h1(&cp.presentation, &t2).unwrap(), 0);
    }

    #[test]
    fn mismatched_module_is_an_integrity_error() {
        let f = CoeffRing::prime_field(3).unwrap();
        let cp = certified(&alt5(), 1);
        // a diagonal module that ignores the relators
        let images = (0..cp.ngens()).map(|_| Mat::diagonal(f, &[2])).collect();
        let bad = Representation::new(f, 1, images).unwrap();
        assert!(matches!(derivation_space(&cp.presentation, &bad), Err(Error::Integrity(_))));
    }
}
