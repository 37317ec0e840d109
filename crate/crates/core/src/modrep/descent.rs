//! Realising a twist-stable GF(p²)-representation over GF(p).

use super::rep::Representation;
use crate::arith::{span_rref, Mat, RingKind};
use crate::error::{Error, Result};

/// Result of a descent together with the data that certifies it.
#[derive(Clone, Debug)]
pub struct Descent {
    pub rep: Representation,
    /// Columns span the fixed points of v ↦ C·v^σ; conjugating the input by
    /// this matrix gives `rep`.
    pub basis: Mat,
    /// Normalised intertwiner C: V^σ → V with C·C^σ = I.
    pub intertwiner: Mat,
}

/// Descends `rep` (over GF(p²)) to GF(p).
pub fn galois_descent(rep: &Representation) -> Result<Descent> {
    let f = rep.ring();
    if !matches!(f.kind(), RingKind::Quadratic { .. }) {
        return Err(Error::UnsupportedRing(format!("descent needs GF(p²), got {f}")));
    }
    let n = rep.dim();
    let twist = rep.frobenius_twist();
    let homs = twist.hom_space(rep)?;
    if homs.len() != 1 || !homs[0].matrix.is_invertible() {
        return Err(Error::NotDescendable(format!("Hom(V^σ, V) has dimension {}", homs.len())));
    }
    let c0 = homs[0].matrix.clone();
    let cc = &c0 * &c0.frobenius();
    let mu = cc.get(0, 0);
    if cc != Mat::identity(f, n).scale(mu) || !f.in_prime_subfield(mu) {
        return Err(Error::Integrity("C·C^σ is not a scalar of the prime field".into()));
    }
    // (cC)(cC)^σ = c^{p+1}·μ, and the norm map onto GF(p)* is surjective
    let p = f.characteristic() as u64;
    let c = f
        .elements()
        .find(|&c| f.mul(f.pow(c, p + 1), mu) == 1)
        .expect("norm is surjective on finite fields");
    let cmat = c0.scale(c);
    let semilinear = |v: &[u32]| -> Vec<u32> {
        let vs: Vec<u32> = v.iter().map(|&x| f.frobenius(x)).collect();
        cmat.apply(&vs)
    };
    let t = f.quad(0, 1);
    let mut fixed = Vec::new();
    for i in 0..n {
        for s in [1, t] {
            let mut e = vec![0u32; n];
            e[i] = s;
            let fe = semilinear(&e);
            let w: Vec<u32> = e.iter().zip(&fe).map(|(&a, &b)| f.add(a, b)).collect();
            let mut trial = fixed.clone();
            trial.push(w.clone());
            if span_rref(f, n, &trial)?.len() > fixed.len() {
                fixed.push(w);
            }
        }
    }
    if fixed.len() != n {
        return Err(Error::Integrity("fixed points do not span".into()));
    }
    let basis = Mat::from_columns(f, n, &fixed);
    let conj = rep.conjugate(&basis)?;
    let k = f.prime_subfield();
    let mut images = Vec::new();
    for g in conj.images() {
        if !g.data().iter().all(|&x| f.in_prime_subfield(x)) {
            return Err(Error::Integrity("descended matrix leaves the prime field".into()));
        }
        images.push(g.map(|r, x| r.reduce_to_prime(x)).with_ring(k)?);
    }
    Ok(Descent { rep: Representation::new(k, n, images)?, basis, intertwiner: cmat })
}

impl Descent {
    /// Extending scalars back gives a module with a 1-dimensional,
    /// invertible Hom space to the input.
    pub fn certify(&self, original: &Representation) -> Result<bool> {
        let ext = self.rep.extend_scalars(original.ring())?;
        let homs = ext.hom_space(original)?;
        Ok(homs.len() == 1 && homs[0].matrix.is_invertible())
    }
}
