//! Commutant algebras, unit counting and normalizers of small finite
//! subgroups inside GLₙ(ℤ/pᵉ), all by linear algebra over the residue ring.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{kernel, span_rref, CoeffRing, HowellForm, Mat};
use crate::error::{Error, Result};
use crate::group::{element_order, Element, ORDER_CAP};

pub const REDUCTION_CAP: u64 = 10_000_000;
pub const NORMALIZER_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct CommutantAlgebra {
    ring: CoeffRing,
    n: usize,
    form: HowellForm,
    basis: Vec<Mat>,
}

fn vec_to_mat(ring: CoeffRing, n: usize, v: &[u32]) -> Mat {
    Mat::new(ring, n, n, v.to_vec()).expect("n² entries")
}

/// All X with X·g = g·X for every g. An empty list gives the full matrix algebra.
pub fn commutant(ring: CoeffRing, n: usize, mats: &[Mat]) -> Result<CommutantAlgebra> {
    for g in mats {
        if g.ring() != ring || g.rows() != n || g.cols() != n {
            return Err(Error::Dimension("commutant inputs must be n×n over one ring".into()));
        }
    }
    let nn = n * n;
    // Row (g, i, j) of the system: (X g − g X)_{ij} as a form in the entries of X.
    let mut sys = Mat::zeros(ring, mats.len() * nn, nn);
    for (gi, g) in mats.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = gi * nn + i * n + j;
                for k in 0..n {
                    // (X g)_{ij} = Σ_k X_{ik} g_{kj}
                    sys.set(row, i * n + k, ring.add(sys.get(row, i * n + k), g.get(k, j)));
                    // (g X)_{ij} = Σ_k g_{ik} X_{kj}
                    sys.set(row, k * n + j, ring.sub(sys.get(row, k * n + j), g.get(i, k)));
                }
            }
        }
    }
    let form = if mats.is_empty() {
        HowellForm::new(ring, nn, (0..nn).map(|k| (0..nn).map(|l| u32::from(k == l)).collect()).collect())?
    } else {
        kernel(&sys)?
    };
    let basis = form.rows().iter().map(|v| vec_to_mat(ring, n, v)).collect();
    Ok(CommutantAlgebra { ring, n, form, basis })
}

impl CommutantAlgebra {
    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// Number of Howell generators.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_free(&self) -> bool {
        self.form.is_free()
    }

    pub fn size(&self) -> u128 {
        self.form.module_size()
    }

    pub fn contains(&self, x: &Mat) -> bool {
        let mut rows = self.form.rows().to_vec();
        rows.push(x.data().to_vec());
        HowellForm::new(self.ring, self.n * self.n, rows).map(|f| f.module_size() == self.size()).unwrap_or(false)
    }

    pub fn is_closed_under_products(&self) -> bool {
        self.basis.iter().all(|a| self.basis.iter().all(|b| self.contains(&(a * b))))
    }

    pub fn is_commutative(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| self.basis[i + 1..].iter().all(|b| a * b == b * a))
    }

    pub fn elements(&self) -> impl Iterator<Item = Mat> + '_ {
        self.form.elements().map(move |v| vec_to_mat(self.ring, self.n, &v))
    }

    /// Random element with uniformly random Howell coefficients.
    pub fn random_element(&self, rng: &mut impl Rng) -> Mat {
        let r = self.ring;
        let p = r.characteristic();
        let e = r.exponent();
        let mut acc = vec![0u32; self.n * self.n];
        for (row, &(_, v)) in self.form.rows().iter().zip(self.form.pivots()) {
            let c = rng.gen_range(0..p.pow(e - v));
            for (a, &x) in acc.iter_mut().zip(row) {
                *a = r.add(*a, r.mul(c, x));
            }
        }
        vec_to_mat(r, self.n, &acc)
    }

    /// GF(p)-basis of the image of the algebra modulo p.
    pub fn reduction_basis(&self) -> Result<Vec<Mat>> {
        let f = self.ring.prime_subfield();
        let red: Vec<Vec<u32>> =
            self.basis.iter().map(|b| b.data().iter().map(|&x| self.ring.reduce_to_prime(x)).collect()).collect();
        let span = span_rref(f, self.n * self.n, &red)?;
        Ok(span.iter().map(|v| vec_to_mat(f, self.n, v)).collect())
    }

    /// Every element of the mod-p reduction.
    pub fn reduction_elements(&self) -> Result<Vec<Mat>> {
        let f = self.ring.prime_subfield();
        let basis = self.reduction_basis()?;
        let p = f.characteristic() as u64;
        let total = p
            .checked_pow(basis.len() as u32)
            .filter(|&t| t <= REDUCTION_CAP)
            .ok_or(Error::ResourceLimit { cap: "reduction enumeration", limit: REDUCTION_CAP })?;
        let mut out = Vec::with_capacity(total as usize);
        for mut code in 0..total {
            let mut m = Mat::zeros(f, self.n, self.n);
            for b in &basis {
                let c = (code % p) as u32;
                code /= p;
                if c != 0 {
                    m = m.add(&b.scale(c))?;
                }
            }
            out.push(m);
        }
        Ok(out)
    }
}

/// |R*| = |R| / |R̄| · |R̄*| where R̄ is the reduction modulo p; the last factor
/// is counted exhaustively.
pub fn unit_group_order(alg: &CommutantAlgebra) -> Result<BigUint> {
    let red = alg.reduction_elements()?;
    let units = red.iter().filter(|m| m.is_invertible()).count();
    let kernel_size = BigUint::from(alg.size()) / BigUint::from(red.len());
    Ok(kernel_size * BigUint::from(units))
}

fn prime_part(n: &BigUint, p: u32) -> BigUint {
    let mut n = n.clone();
    let mut part = BigUint::one();
    let bp = BigUint::from(p);
    while (&n % &bp) == BigUint::ZERO {
        n /= &bp;
        part *= &bp;
    }
    part
}

/// A unit of order `target` (a power of 5) in the algebra's unit group.
pub fn sylow5_element(alg: &CommutantAlgebra, target: u64, seed: u64) -> Result<Mat> {
    let order = unit_group_order(alg)?;
    let five = prime_part(&order, 5);
    if !(target == 5 || target == 25) || BigUint::from(target) > five || (&five % target) != BigUint::ZERO {
        return Err(Error::Domain(format!("unit group of order {order} has no element of order {target}")));
    }
    let cofactor = &order / &five;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let u = alg.random_element(&mut rng);
        if !u.is_invertible() {
            continue;
        }
        let t = pow_big(&u, &cofactor);
        let ord = element_order(&t, ORDER_CAP)?;
        if ord >= target && ord % target == 0 {
            return Ok(t.pow(ord / target));
        }
    }
    Err(Error::BudgetExhausted { what: format!("element of order {target}"), seed })
}

fn pow_big(x: &Mat, k: &BigUint) -> Mat {
    let mut acc = x.one();
    for bit in (0..k.bits()).rev() {
        acc = &acc * &acc;
        if k.bit(bit) {
            acc = &acc * x;
        }
    }
    acc
}

/// Elements x of the mod-p unit group with x^exponent = 1.
pub fn reduction_torsion(alg: &CommutantAlgebra, exponent: u64) -> Result<Vec<Mat>> {
    Ok(alg
        .reduction_elements()?
        .into_iter()
        .filter(|m| m.is_invertible() && m.pow(exponent).is_identity())
        .collect())
}

/// Automorphisms of a finite group given by its element list, as index maps.
/// Brute force over images of a generating set.
pub fn automorphisms<E: Element>(elems: &[E]) -> Result<Vec<Vec<usize>>> {
    let pos = |x: &E| elems.iter().position(|y| y == x);
    let n = elems.len();
    // Greedy generating set with each element's word as a generator sequence.
    let id = elems.iter().position(|x| x.is_one()).ok_or_else(|| Error::Closure("identity missing".into()))?;
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![id];
    let closure = |gens: &[usize]| -> Vec<usize> {
        let mut span = vec![id];
        let mut k = 0;
        while k < span.len() {
            for &g in gens {
                let y = pos(&elems[span[k]].mul(&elems[g])).expect("closed");
                if !span.contains(&y) {
                    span.push(y);
                }
            }
            k += 1;
        }
        span
    };
    for i in 0..n {
        if !reached.contains(&i) {
            gens.push(i);
            reached = closure(&gens);
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        // Try gens[t] ↦ elems[choice[t]], extend along BFS words.
        let mut map = vec![usize::MAX; n];
        map[id] = id;
        let mut order = vec![id];
        let mut ok = true;
        let mut k = 0;
        'bfs: while k < order.len() {
            for (t, &g) in gens.iter().enumerate() {
                let x = order[k];
                let y = pos(&elems[x].mul(&elems[g])).expect("closed");
                let fy = pos(&elems[map[x]].mul(&elems[choice[t]])).expect("closed");
                if map[y] == usize::MAX {
                    map[y] = fy;
                    order.push(y);
                } else if map[y] != fy {
                    ok = false;
                    break 'bfs;
                }
            }
            k += 1;
        }
        if ok {
            let mut seen = vec![false; n];
            ok = map.iter().all(|&m| m != usize::MAX && !std::mem::replace(&mut seen[m], true));
        }
        if ok {
            out.push(map);
        }
        let mut t = 0;
        loop {
            if t == choice.len() {
                return Ok(out);
            }
            choice[t] += 1;
            if choice[t] < n {
                break;
            }
            choice[t] = 0;
            t += 1;
        }
    }
}

/// N(P) = ⋃_φ {g unit : g·x = φ(x)·g for all x ∈ P}, with one linear system
/// per automorphism φ.
pub fn normalizer_of_finite_subgroup(
    ring: CoeffRing,
    n: usize,
    p: &[Mat],
    autos: &[Vec<usize>],
) -> Result<Vec<Mat>> {
    let nn = n * n;
    for x in p {
        for y in p {
            if !p.contains(&(x * y)) {
                return Err(Error::Closure("subgroup not closed under products".into()));
            }
        }
    }
    let mut out = Vec::new();
    for phi in autos {
        let mut sys = Mat::zeros(ring, p.len() * nn, nn);
        for (xi, x) in p.iter().enumerate() {
            let y = &p[phi[xi]];
            for i in 0..n {
                for j in 0..n {
                    let row = xi * nn + i * n + j;
                    for k in 0..n {
                        // (G x)_{ij} − (y G)_{ij}
                        sys.set(row, i * n + k, ring.add(sys.get(row, i * n + k), x.get(k, j)));
                        sys.set(row, k * n + j, ring.sub(sys.get(row, k * n + j), y.get(i, k)));
                    }
                }
            }
        }
        let sol = kernel(&sys)?;
        if sol.module_size() > NORMALIZER_CAP as u128 {
            return Err(Error::ResourceLimit { cap: "normalizer coset", limit: NORMALIZER_CAP as u64 });
        }
        for v in sol.elements() {
            let g = vec_to_mat(ring, n, &v);
            if g.is_invertible() {
                out.push(g);
                if out.len() > NORMALIZER_CAP {
                    return Err(Error::ResourceLimit { cap: "normalizer coset", limit: NORMALIZER_CAP as u64 });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Perm;
    use std::collections::HashSet;

    fn z9() -> CoeffRing {
        CoeffRing::local_ring(3, 2).unwrap()
    }

    fn all_mats(ring: CoeffRing, n: usize) -> impl Iterator<Item = Mat> {
        let q = ring.size() as u64;
        (0..q.pow((n * n) as u32)).map(move |mut c| {
            let d = (0..n * n)
                .map(|_| {
                    let x = (c % q) as u32;
                    c /= q;
                    x
                })
                .collect();
            Mat::new(ring, n, n, d).unwrap()
        })
    }

    #[test]
    fn commutant_examples() {
        let a = commutant(z9(), 2, &[Mat::identity(z9(), 2)]).unwrap();
        assert_eq!(a.rank(), 4);
        let z49 = CoeffRing::local_ring(7, 2).unwrap();
        let d = commutant(z49, 2, &[Mat::diagonal(z49, &[1, 2])]).unwrap();
        assert_eq!(d.rank(), 2);
        assert!(d.basis().iter().all(|b| b.get(0, 1) == 0 && b.get(1, 0) == 0));
        assert!(d.is_closed_under_products());
        assert!(d.contains(&Mat::identity(z49, 2)));
    }

    #[test]
    fn unit_counts() {
        let full = commutant(z9(), 2, &[]).unwrap();
        assert_eq!(unit_group_order(&full).unwrap(), BigUint::from(3888u32));
        // exhaustive oracle over all of Mat₂(ℤ/9)
        let brute = all_mats(z9(), 2).filter(|m| m.is_invertible()).count();
        assert_eq!(brute, 3888);
        let z49 = CoeffRing::local_ring(7, 2).unwrap();
        let scalars = commutant(z49, 1, &[]).unwrap();
        assert_eq!(unit_group_order(&scalars).unwrap(), BigUint::from(42u32));
    }

    #[test]
    fn unit_count_matches_exhaustive_count_on_small_commutant() {
        let g = Mat::from_int_rows(z9(), &[vec![1, 1], vec![0, 1]]).unwrap();
        let alg = commutant(z9(), 2, &[g]).unwrap();
        let brute = alg.elements().filter(|m| m.is_invertible()).count();
        assert_eq!(unit_group_order(&alg).unwrap(), BigUint::from(brute));
        assert_eq!(alg.elements().count() as u128, alg.size());
    }

    #[test]
    fn sylow5_elements() {
        let z49 = CoeffRing::local_ring(7, 2).unwrap();
        let scalars = commutant(z49, 1, &[]).unwrap();
        assert!(matches!(sylow5_element(&scalars, 5, 1), Err(Error::Domain(_))));
        // GF(49) as 2×2 companion matrices of x² − 3: 48 units, no 5-part
        let f7 = CoeffRing::prime_field(7).unwrap();
        let comp = Mat::from_int_rows(f7, &[vec![0, 3], vec![1, 0]]).unwrap();
        let gf49 = commutant(f7, 2, &[comp]).unwrap();
        assert_eq!(unit_group_order(&gf49).unwrap(), BigUint::from(48u32));
        assert!(sylow5_element(&gf49, 5, 1).is_err());
        let f11 = commutant(CoeffRing::prime_field(11).unwrap(), 1, &[]).unwrap();
        let t = sylow5_element(&f11, 5, 3).unwrap();
        assert_eq!(element_order(&t, 100).unwrap(), 5);
    }

    fn klein(ring: CoeffRing, n: usize, gens: &[Mat]) -> Vec<Mat> {
        let mut out = vec![Mat::identity(ring, n)];
        let mut k = 0;
        while k < out.len() {
            for g in gens {
                let y = &out[k] * g;
                if !out.contains(&y) {
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }

    #[test]
    fn normalizer_examples() {
        let f3 = CoeffRing::prime_field(3).unwrap();
        let pm = klein(f3, 2, &[Mat::identity(f3, 2).neg()]);
        let autos = automorphisms(&pm).unwrap();
        assert_eq!(autos.len(), 1);
        assert_eq!(normalizer_of_finite_subgroup(f3, 2, &pm, &autos).unwrap().len(), 48);

        let d = Mat::diagonal(z9(), &[1, 8]);
        let p = klein(z9(), 2, std::slice::from_ref(&d));
        let autos = automorphisms(&p).unwrap();
        let n = normalizer_of_finite_subgroup(z9(), 2, &p, &autos).unwrap();
        // oracle: brute force over GL₂(ℤ/9)
        let pset: HashSet<Mat> = p.iter().cloned().collect();
        let brute = all_mats(z9(), 2)
            .filter(|g| g.is_invertible())
            .filter(|g| {
                let gi = g.invert().unwrap();
                p.iter().all(|x| pset.contains(&(&(g * x) * &gi)))
            })
            .count();
        assert_eq!(brute, 36);
        assert_eq!(n.len(), brute);

        let p4 = klein(z9(), 2, &[d, Mat::identity(z9(), 2).neg()]);
        let autos = automorphisms(&p4).unwrap();
        assert_eq!(autos.len(), 6);
        assert_eq!(normalizer_of_finite_subgroup(z9(), 2, &p4, &autos).unwrap().len(), 72);
    }

    #[test]
    fn klein_four_of_permutations_has_six_automorphisms() {
        let a = Perm::from_cycles(5, "(2,3)(4,5)").unwrap();
        let b = Perm::from_cycles(5, "(2,4)(3,5)").unwrap();
        let elems = vec![Perm::identity(5), a.clone(), b.clone(), a.mul(&b)];
        assert_eq!(automorphisms(&elems).unwrap().len(), 6);
    }
}
