//! The element interface the stabilizer-chain machinery runs on.

use super::perm::Perm;
use crate::arith::{CoeffRing, Mat};
use std::fmt::Debug;
use std::hash::Hash;

/// A group element acting on a domain of points coded as `u64`.
///
/// `mul` composes right to left and `act` is a left action, so
/// `a.mul(b).act(x) == a.act(b.act(x))`.
pub trait Element: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    fn one(&self) -> Self;
    fn is_one(&self) -> bool;
    fn act(&self, pt: u64) -> u64;
    /// Number of domain points, if it fits.
    fn domain_size(&self) -> Option<u64>;
    /// Points tried, in order, when a new base point is needed.
    fn base_candidates(&self) -> Vec<u64>;
    fn packed_len(&self) -> usize;
    fn pack(&self, out: &mut Vec<u8>);
    /// Rebuilds an element of the same shape as `self` from packed bytes.
    fn unpack(&self, bytes: &[u8]) -> Self;
}

fn width(max: u32) -> usize {
    if max < 1 << 8 {
        1
    } else if max < 1 << 16 {
        2
    } else {
        4
    }
}

fn put(out: &mut Vec<u8>, w: usize, x: u32) {
    out.extend_from_slice(&x.to_le_bytes()[..w]);
}

fn get(bytes: &[u8], w: usize, i: usize) -> u32 {
    let mut b = [0u8; 4];
    b[..w].copy_from_slice(&bytes[i * w..(i + 1) * w]);
    u32::from_le_bytes(b)
}

impl Element for Perm {
    fn mul(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn one(&self) -> Self {
        Perm::identity(self.degree())
    }
    fn is_one(&self) -> bool {
        self.is_identity()
    }
    #[inline]
    fn act(&self, pt: u64) -> u64 {
        self.image(pt as u32) as u64
    }
    fn domain_size(&self) -> Option<u64> {
        Some(self.degree() as u64)
    }
    fn base_candidates(&self) -> Vec<u64> {
        (0..self.degree() as u64).collect()
    }
    fn packed_len(&self) -> usize {
        self.degree() * width(self.degree() as u32)
    }
    fn pack(&self, out: &mut Vec<u8>) {
        let w = width(self.degree() as u32);
        for &x in self.images() {
            put(out, w, x);
        }
    }
    fn unpack(&self, bytes: &[u8]) -> Self {
        let n = self.degree();
        let w = width(n as u32);
        Perm::from_images((0..n).map(|i| get(bytes, w, i)).collect()).expect("packed permutation")
    }
}

/// Codes a vector as Σ vᵢ·qⁱ with q = |ring|.
pub fn encode_vector(ring: CoeffRing, v: &[u32]) -> u64 {
    let q = ring.size() as u64;
    v.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64)
}

pub fn decode_vector(ring: CoeffRing, dim: usize, mut code: u64) -> Vec<u32> {
    let q = ring.size() as u64;
    (0..dim)
        .map(|_| {
            let x = (code % q) as u32;
            code /= q;
            x
        })
        .collect()
}

fn vector_space_size(ring: CoeffRing, dim: usize) -> Option<u64> {
    (ring.size() as u64).checked_pow(dim as u32)
}

impl Element for Mat {
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.invert().expect("group elements are invertible")
    }
    fn one(&self) -> Self {
        Mat::identity(self.ring(), self.rows())
    }
    fn is_one(&self) -> bool {
        self.is_identity()
    }
    fn act(&self, pt: u64) -> u64 {
        let r = self.ring();
        let n = self.rows();
        let q = r.size() as u64;
        const STACK: usize = 32;
        if n > STACK {
            return encode_vector(r, &self.apply(&decode_vector(r, n, pt)));
        }
        let mut v = [0u32; STACK];
        let mut c = pt;
        for x in v.iter_mut().take(n) {
            *x = (c % q) as u32;
            c /= q;
        }
        let mut code = 0u64;
        for i in (0..n).rev() {
            let row = self.row(i);
            let y = if r.is_residue_ring() {
                let m = r.modulus() as u64;
                (row.iter().zip(&v[..n]).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % m) as u32
            } else {
                row.iter().zip(&v[..n]).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b)))
            };
            code = code * q + y as u64;
        }
        code
    }
    fn domain_size(&self) -> Option<u64> {
        vector_space_size(self.ring(), self.rows())
    }
    fn base_candidates(&self) -> Vec<u64> {
        let q = self.ring().size() as u64;
        (0..self.rows() as u32).map(|i| q.pow(i)).collect()
    }
    fn packed_len(&self) -> usize {
        self.data().len() * width(self.ring().size() - 1)
    }
    fn pack(&self, out: &mut Vec<u8>) {
        let w = width(self.ring().size() - 1);
        for &x in self.data() {
            put(out, w, x);
        }
    }
    fn unpack(&self, bytes: &[u8]) -> Self {
        let w = width(self.ring().size() - 1);
        let len = self.data().len();
        Mat::new(self.ring(), self.rows(), self.cols(), (0..len).map(|i| get(bytes, w, i)).collect())
            .expect("packed matrix")
    }
}

/// Least k ≥ 1 with xᵏ = 1, by direct powering up to `cap`.
pub fn element_order<E: Element>(x: &E, cap: u64) -> crate::error::Result<u64> {
    let mut y = x.clone();
    for k in 1..=cap {
        if y.is_one() {
            return Ok(k);
        }
        y = y.mul(x);
    }
    Err(crate::error::Error::ResourceLimit { cap: "element order", limit: cap })
}

pub const ORDER_CAP: u64 = 1_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_action_matches_apply() {
        let r = CoeffRing::local_ring(7, 2).unwrap();
        let m = Mat::from_int_rows(r, &[vec![1, 2, 0, 0], vec![0, 1, 3, 0], vec![5, 0, 1, 7], vec![0, 0, 0, 1]]).unwrap();
        let v = vec![3, 48, 7, 11];
        let code = encode_vector(r, &v);
        assert_eq!(decode_vector(r, 4, m.act(code)), m.apply(&v));
        assert_eq!(m.unpack(&{
            let mut b = Vec::new();
            m.pack(&mut b);
            b
        }), m);
    }

    #[test]
    fn orders() {
        let r = CoeffRing::prime_field(3).unwrap();
        assert_eq!(element_order(&Mat::identity(r, 3), ORDER_CAP).unwrap(), 1);
        let c5 = Perm::from_cycles(5, "(1,2,3,4,5)").unwrap();
        let deleted = c5.matrix(r);
        assert_eq!(element_order(&deleted, ORDER_CAP).unwrap(), 5);
        assert!(element_order(&c5, 3).is_err());
    }
}
