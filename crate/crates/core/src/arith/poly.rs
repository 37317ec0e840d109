//! Dense univariate polynomials over a finite field, lowest degree first.

use super::mat::Mat;
use super::ring::CoeffRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(ring: &CoeffRing, mut coeffs: Vec<u32>) -> Self {
        let _ = ring;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, r: &CoeffRing, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly { coeffs: vec![] };
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        Poly::new(r, out)
    }

    /// Quotient and remainder; panics on a zero divisor polynomial.
    pub fn div_rem(&self, r: &CoeffRing, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = r.inv(d.coeffs[dd]).expect("field coefficients");
        let mut rem = self.coeffs.clone();
        let mut q = vec![0; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = r.mul(rem[k], lead_inv);
            if c != 0 {
                for (j, &b) in d.coeffs.iter().enumerate() {
                    let at = k - dd + j;
                    rem[at] = r.sub(rem[at], r.mul(c, b));
                }
            }
            q[k - dd] = c;
            rem.pop();
        }
        (Poly::new(r, q), Poly::new(r, rem))
    }

    pub fn eval(&self, r: &CoeffRing, x: u32) -> u32 {
        self.coeffs.iter().rev().fold(0, |acc, &c| r.add(r.mul(acc, x), c))
    }

    /// f(M) by Horner's rule.
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let r = m.ring();
        let n = m.rows();
        let mut acc = Mat::zeros(r, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                let v = r.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Monic irreducible factors of degree ≤ 2, found by trial division.
    /// Returns None when something of higher degree is left over.
    pub fn small_factors(&self, r: &CoeffRing) -> Option<Vec<Poly>> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        for a in r.elements() {
            let lin = Poly::new(r, vec![r.neg(a), 1]);
            loop {
                let (q, rm) = rest.div_rem(r, &lin);
                if !rm.is_zero() {
                    break;
                }
                out.push(lin.clone());
                rest = q;
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            'outer: for b in r.elements() {
                for a in r.elements() {
                    let quad = Poly::new(r, vec![b, a, 1]);
                    if (0..r.size()).any(|x| quad.eval(r, x) == 0) {
                        continue;
                    }
                    loop {
                        let (q, rm) = rest.div_rem(r, &quad);
                        if !rm.is_zero() {
                            break;
                        }
                        out.push(quad.clone());
                        rest = q;
                    }
                    if rest.degree().unwrap_or(0) == 0 {
                        break 'outer;
                    }
                }
            }
        }
        (rest.degree().unwrap_or(0) == 0).then_some(out)
    }
}

/// det(xI − M), interpolated from det(aI − M) at n + 1 field points.
pub fn char_poly(m: &Mat) -> Poly {
    let r = m.ring();
    let n = m.rows();
    assert!(r.is_field() && m.is_square());
    assert!(r.size() as usize > n, "field too small to interpolate");
    let pts: Vec<u32> = (0..=n as u32).map(|k| r.elements().nth(k as usize).unwrap()).collect();
    let vals: Vec<u32> = pts
        .iter()
        .map(|&a| {
            let shifted = Mat::identity(r, n).scale(a).sub(m).unwrap();
            shifted.det().unwrap()
        })
        .collect();
    // Lagrange interpolation
    let mut acc = Poly { coeffs: vec![] };
    for (i, &xi) in pts.iter().enumerate() {
        let mut basis = Poly::new(&r, vec![vals[i]]);
        for (j, &xj) in pts.iter().enumerate() {
            if i != j {
                let inv = r.inv(r.sub(xi, xj)).unwrap();
                basis = basis.mul(&r, &Poly::new(&r, vec![r.mul(r.neg(xj), inv), inv]));
            }
        }
        let len = acc.coeffs.len().max(basis.coeffs.len());
        let mut sum = vec![0; len];
        for (k, s) in sum.iter_mut().enumerate() {
            *s = r.add(*acc.coeffs.get(k).unwrap_or(&0), *basis.coeffs.get(k).unwrap_or(&0));
        }
        acc = Poly::new(&r, sum);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_five_over_gf49_splits_into_quadratics() {
        let r = CoeffRing::quadratic_field(7).unwrap();
        let phi5 = Poly::new(&r, vec![1, 1, 1, 1, 1]);
        let f = phi5.small_factors(&r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|q| q.degree() == Some(2)));
        assert_eq!(f[0].mul(&r, &f[1]), phi5);
    }

    #[test]
    fn char_poly_of_companion() {
        let r = CoeffRing::prime_field(7).unwrap();
        // companion of x² − 3x + 2
        let m = Mat::from_int_rows(r, &[vec![0, -2], vec![1, 3]]).unwrap();
        assert_eq!(char_poly(&m).coeffs, vec![2, r.from_int(-3), 1]);
        assert!(char_poly(&m).eval_mat(&m).is_zero());
    }
}
