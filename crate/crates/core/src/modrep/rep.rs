//! Matrix representations on generator symbols, module maps and the
//! standard constructions on them. Modules are column vectors with the
//! group acting on the left.

use std::fmt::Write as _;

use crate::arith::{span_rref, CoeffRing, Mat};
use crate::error::{Error, Result};
use crate::group::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    ring: CoeffRing,
    dim: usize,
    images: Vec<Mat>,
}

/// An equivariant map A → B, stored as a dim B × dim A matrix H with
/// ρ_B(g)·H = H·ρ_A(g).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub matrix: Mat,
}

impl Representation {
    pub fn new(ring: CoeffRing, dim: usize, images: Vec<Mat>) -> Result<Self> {
        for m in &images {
            if m.ring() != ring || m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!("image is not {dim}×{dim} over {ring}")));
            }
            if dim > 0 && !m.is_invertible() {
                return Err(Error::NotAUnit);
            }
        }
        Ok(Representation { ring, dim, images })
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Mat] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Mat {
        &self.images[i]
    }

    pub fn ngens(&self) -> usize {
        self.images.len()
    }

    /// Image of a word of signed 1-based generator indices.
    pub fn eval_word(&self, word: &[i32]) -> Mat {
        word.iter().fold(Mat::identity(self.ring, self.dim), |acc, &l| {
            let g = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                &acc * g
            } else {
                &acc * &g.invert().expect("invertible image")
            }
        })
    }

    pub fn trivial(ring: CoeffRing, ngens: usize) -> Self {
        Representation { ring, dim: 1, images: vec![Mat::identity(ring, 1); ngens] }
    }

    pub fn zero_dim(ring: CoeffRing, ngens: usize) -> Self {
        Representation { ring, dim: 0, images: vec![Mat::zeros(ring, 0, 0); ngens] }
    }

    /// Permutation module: basis a_i ↦ a_{π(i)}.
    pub fn permutation_module(ring: CoeffRing, perms: &[Perm]) -> Result<Self> {
        let n = perms.first().map(|p| p.degree()).unwrap_or(0);
        Representation::new(ring, n, perms.iter().map(|p| p.matrix(ring)).collect())
    }

    /// The span of vᵢ = a₁ − a_{i+1} inside the permutation module, in the
    /// v-basis: π·vᵢ = v_{π(i+1)−1} − v_{π(1)−1} with v₀ = 0.
    pub fn deleted_permutation_module(ring: CoeffRing, perms: &[Perm]) -> Result<Self> {
        let n = perms.first().map(|p| p.degree()).unwrap_or(0);
        if n < 2 {
            return Err(Error::Domain("need at least two points".into()));
        }
        let d = n - 1;
        let images = perms
            .iter()
            .map(|p| {
                let mut m = Mat::zeros(ring, d, d);
                let p1 = p.image(0) as usize;
                for i in 1..n {
                    let pi = p.image(i as u32) as usize;
                    // column i−1 holds π·v_i
                    if pi > 0 {
                        m.set(pi - 1, i - 1, ring.add(m.get(pi - 1, i - 1), 1));
                    }
                    if p1 > 0 {
                        m.set(p1 - 1, i - 1, ring.sub(m.get(p1 - 1, i - 1), 1));
                    }
                }
                m
            })
            .collect();
        Representation::new(ring, d, images)
    }

    fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.ring != other.ring || self.images.len() != other.images.len() {
            return Err(Error::Domain("representations of different groups or fields".into()));
        }
        Ok(())
    }

    /// Basis order (i, j) ↦ i·dim(b) + j.
    pub fn tensor(&self, other: &Representation) -> Result<Self> {
        self.check_compatible(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.kron(b)).collect();
        Ok(Representation { ring: self.ring, dim: self.dim * other.dim, images })
    }

    /// Basis e_i ∧ e_j for i < j in lexicographic order.
    pub fn wedge2(&self) -> Self {
        let r = self.ring;
        let n = self.dim;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let images = self
            .images
            .iter()
            .map(|g| {
                let mut m = Mat::zeros(r, pairs.len(), pairs.len());
                for (c, &(i, j)) in pairs.iter().enumerate() {
                    for (row, &(k, l)) in pairs.iter().enumerate() {
                        let v = r.sub(r.mul(g.get(k, i), g.get(l, j)), r.mul(g.get(l, i), g.get(k, j)));
                        m.set(row, c, v);
                    }
                }
                m
            })
            .collect();
        Representation { ring: r, dim: pairs.len(), images }
    }

    /// g ↦ (ρ(g)⁻¹)ᵀ.
    pub fn dual(&self) -> Self {
        let images = self.images.iter().map(|g| g.invert().expect("invertible").transpose()).collect();
        Representation { ring: self.ring, dim: self.dim, images }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        self.check_compatible(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Representation { ring: self.ring, dim: self.dim + other.dim, images })
    }

    /// Entrywise Frobenius x ↦ x^p.
    pub fn frobenius_twist(&self) -> Self {
        Representation { ring: self.ring, dim: self.dim, images: self.images.iter().map(|g| g.frobenius()).collect() }
    }

    /// Same matrices viewed over a ring containing this one.
    pub fn extend_scalars(&self, ring: CoeffRing) -> Result<Self> {
        let images = self.images.iter().map(|g| g.with_ring(ring)).collect::<Result<_>>()?;
        Ok(Representation { ring, dim: self.dim, images })
    }

    /// Restriction to the subgroup generated by the given words.
    pub fn restrict(&self, words: &[Vec<i32>]) -> Self {
        Representation { ring: self.ring, dim: self.dim, images: words.iter().map(|w| self.eval_word(w)).collect() }
    }

    /// Conjugate by a change of basis: g ↦ P⁻¹·ρ(g)·P.
    pub fn conjugate(&self, p: &Mat) -> Result<Self> {
        let pi = p.invert()?;
        let images = self.images.iter().map(|g| &(&pi * g) * p).collect();
        Ok(Representation { ring: self.ring, dim: self.dim, images })
    }

    /// Submodule spanned by the columns of `basis` (must be invariant).
    pub fn sub_rep(&self, basis: &[Vec<u32>]) -> Result<Self> {
        let r = self.ring;
        let k = basis.len();
        let b = Mat::from_columns(r, self.dim, basis);
        let mut images = Vec::new();
        for g in &self.images {
            let mut m = Mat::zeros(r, k, k);
            for (c, v) in basis.iter().enumerate() {
                let gv = g.apply(v);
                let x = b.solve(&gv)?.ok_or_else(|| Error::Closure("subspace is not invariant".into()))?;
                for (i, &xi) in x.iter().enumerate() {
                    m.set(i, c, xi);
                }
            }
            images.push(m);
        }
        Representation::new(r, k, images)
    }

    /// Quotient by the invariant subspace spanned by `basis`.
    pub fn quotient_rep(&self, basis: &[Vec<u32>]) -> Result<Self> {
        let r = self.ring;
        let n = self.dim;
        let sub = span_rref(r, n, basis)?;
        // complete to a basis with standard vectors
        let mut full = sub.clone();
        let mut comp = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let mut trial = full.clone();
            trial.push(e.clone());
            if span_rref(r, n, &trial)?.len() > full.len() {
                full.push(e.clone());
                comp.push(e);
            }
        }
        let k = sub.len();
        let b = Mat::from_columns(r, n, &full);
        let mut images = Vec::new();
        for g in &self.images {
            let mut m = Mat::zeros(r, n - k, n - k);
            for (c, v) in comp.iter().enumerate() {
                let x = b.solve(&g.apply(v))?.expect("full basis");
                for i in 0..n - k {
                    m.set(i, c, x[k + i]);
                }
            }
            images.push(m);
        }
        for v in &sub {
            for g in &self.images {
                let x = b.solve(&g.apply(v))?.expect("full basis");
                if x[k..].iter().any(|&y| y != 0) {
                    return Err(Error::Closure("subspace is not invariant".into()));
                }
            }
        }
        Representation::new(r, n - k, images)
    }

    /// All H with ρ_B(g)·H = H·ρ_A(g), as a basis.
    pub fn hom_space(&self, other: &Representation) -> Result<Vec<ModuleMap>> {
        self.check_compatible(other)?;
        let r = self.ring;
        if !r.is_field() {
            return Err(Error::UnsupportedRing(format!("Hom spaces need a field, got {r}")));
        }
        let (m, n) = (other.dim, self.dim);
        let unknowns = m * n;
        if unknowns == 0 {
            return Ok(Vec::new());
        }
        let mut sys = Mat::zeros(r, self.images.len() * unknowns, unknowns);
        for (gi, (a, b)) in self.images.iter().zip(&other.images).enumerate() {
            for i in 0..m {
                for j in 0..n {
                    let row = gi * unknowns + i * n + j;
                    for k in 0..m {
                        // (B H)_{ij} = Σ_k B_{ik} H_{kj}
                        sys.set(row, k * n + j, r.add(sys.get(row, k * n + j), b.get(i, k)));
                    }
                    for k in 0..n {
                        // (H A)_{ij} = Σ_k H_{ik} A_{kj}
                        sys.set(row, i * n + k, r.sub(sys.get(row, i * n + k), a.get(k, j)));
                    }
                }
            }
        }
        let null = if self.images.is_empty() {
            (0..unknowns).map(|k| (0..unknowns).map(|l| u32::from(k == l)).collect()).collect()
        } else {
            sys.nullspace()?
        };
        Ok(null.into_iter().map(|v| ModuleMap { matrix: Mat::new(r, m, n, v).unwrap() }).collect())
    }

    pub fn is_equivariant(&self, other: &Representation, h: &Mat) -> bool {
        self.images.iter().zip(&other.images).all(|(a, b)| (b * h) == (h * a))
    }

    /// Common fixed space of the listed elements.
    pub fn fixed_points(&self, elements: &[Mat]) -> Result<Vec<Vec<u32>>> {
        let r = self.ring;
        let n = self.dim;
        if elements.is_empty() || n == 0 {
            return Ok((0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect());
        }
        let mut sys = Mat::zeros(r, elements.len() * n, n);
        for (k, g) in elements.iter().enumerate() {
            let d = g.sub(&Mat::identity(r, n))?;
            sys.set_block(k * n, 0, &d);
        }
        sys.nullspace()
    }

    pub fn fixed_points_of_group(&self) -> Result<Vec<Vec<u32>>> {
        self.fixed_points(&self.images.clone())
    }

    /// True iff no nontrivial power gᵏ (k < 5) has a nonzero fixed vector.
    pub fn fpf_check(&self, g: &Mat) -> Result<bool> {
        let ord = crate::group::element_order(g, 5)
            .map_err(|_| Error::Domain("element does not have order 5".into()))?;
        if ord != 5 {
            return Err(Error::Domain(format!("element has order {ord}, not 5")));
        }
        for k in 1..5 {
            if !self.fixed_points(&[g.pow(k)])?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest invariant subspace containing `v`, as RREF rows.
    pub fn spin(&self, v: &[u32]) -> Result<Vec<Vec<u32>>> {
        let mut span = span_rref(self.ring, self.dim, &[v.to_vec()])?;
        let mut frontier = span.clone();
        while let Some(w) = frontier.pop() {
            for g in &self.images {
                let gw = g.apply(&w);
                let mut trial = span.clone();
                trial.push(gw.clone());
                let next = span_rref(self.ring, self.dim, &trial)?;
                if next.len() > span.len() {
                    span = next;
                    frontier.push(gw);
                }
            }
        }
        Ok(span)
    }

    /// Plain-text form: ring header, dimension, then one block per generator.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ring {}", self.ring.name());
        let _ = writeln!(s, "dim {}", self.dim);
        for (i, g) in self.images.iter().enumerate() {
            let _ = writeln!(s, "gen {}", i + 1);
            for r in 0..g.rows() {
                let row: Vec<String> = g.row(r).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("representation text: {m}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let ring = CoeffRing::parse_name(
            lines.next().and_then(|l| l.strip_prefix("ring ")).ok_or_else(|| bad("missing ring header"))?,
        )?;
        let dim: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("dim "))
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| bad("missing dim"))?;
        let mut images = Vec::new();
        while let Some(l) = lines.next() {
            if !l.starts_with("gen") {
                return Err(bad("expected gen block"));
            }
            let mut data = Vec::with_capacity(dim * dim);
            for _ in 0..dim {
                let row = lines.next().ok_or_else(|| bad("short block"))?;
                for x in row.split_whitespace() {
                    let v: i64 = x.parse().map_err(|_| bad("bad entry"))?;
                    if ring.is_residue_ring() {
                        data.push(ring.from_int(v));
                    } else if (0..ring.size() as i64).contains(&v) {
                        data.push(v as u32);
                    } else {
                        return Err(bad("field element code out of range"));
                    }
                }
            }
            images.push(Mat::new(ring, dim, dim, data)?);
        }
        Representation::new(ring, dim, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> CoeffRing {
        CoeffRing::prime_field(p).unwrap()
    }

    fn alt5() -> Vec<Perm> {
        vec![Perm::from_cycles(5, "(1,2,3)").unwrap(), Perm::from_cycles(5, "(1,2,3,4,5)").unwrap()]
    }

    #[test]
    fn transposition_in_v_basis() {
        // hand expansion: (1,2) swaps a₁, a₂, so v₁ ↦ −v₁ and vᵢ ↦ vᵢ − v₁
        let r = gf(7);
        let t = Perm::from_cycles(5, "(1,2)").unwrap();
        let v = Representation::deleted_permutation_module(r, &[t]).unwrap();
        let expect = Mat::from_int_rows(
            r,
            &[vec![-1, -1, -1, -1], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(v.image(0), &expect);
    }

    #[test]
    fn deleted_module_is_the_difference_span() {
        // oracle: restrict the permutation matrices to the span of a₁ − a_{i+1}
        let r = gf(11);
        let w = Representation::permutation_module(r, &alt5()).unwrap();
        let basis: Vec<Vec<u32>> = (1..5)
            .map(|i| {
                let mut v = vec![0; 5];
                v[0] = 1;
                v[i] = r.neg(1);
                v
            })
            .collect();
        let sub = w.sub_rep(&basis).unwrap();
        let v = Representation::deleted_permutation_module(r, &alt5()).unwrap();
        assert_eq!(sub, v);
    }

    #[test]
    fn dimensions() {
        let v = Representation::deleted_permutation_module(gf(3), &alt5()).unwrap();
        assert_eq!(v.tensor(&v).unwrap().dim(), 16);
        assert_eq!(v.wedge2().dim(), 6);
        assert_eq!(Representation::trivial(gf(3), 2).wedge2().dim(), 0);
    }

    #[test]
    fn hom_and_fixed_points() {
        let v = Representation::deleted_permutation_module(gf(7), &alt5()).unwrap();
        let h = v.hom_space(&v).unwrap();
        assert_eq!(h.len(), 1);
        assert!(v.is_equivariant(&v, &h[0].matrix));
        assert_eq!(v.fixed_points(&[Mat::identity(gf(7), 4)]).unwrap().len(), 4);
        let c5 = v.image(1).clone();
        assert!(v.fpf_check(&c5).unwrap());
        let w = Representation::permutation_module(gf(3), &alt5()).unwrap();
        assert!(!w.fpf_check(w.image(1)).unwrap());
        assert!(v.fpf_check(v.image(0)).is_err());
    }

    #[test]
    fn dual_of_dual_is_equivalent() {
        let v = Representation::deleted_permutation_module(gf(5), &alt5()).unwrap();
        let dd = v.dual().dual();
        assert!(dd.hom_space(&v).unwrap().iter().any(|h| h.matrix.is_invertible()));
    }

    #[test]
    fn text_round_trip() {
        let v = Representation::deleted_permutation_module(gf(13), &alt5()).unwrap();
        assert_eq!(Representation::from_text(&v.to_text()).unwrap(), v);
        let q = Representation::deleted_permutation_module(CoeffRing::quadratic_field(7).unwrap(), &alt5()).unwrap();
        assert_eq!(Representation::from_text(&q.to_text()).unwrap(), q);
    }
}
