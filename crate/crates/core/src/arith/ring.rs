//! Coefficient rings: GF(p), GF(p²) and the local rings ℤ/pᵉ.
//!
//! Elements are `u32` codes holding the least non-negative residue. For the
//! quadratic field the code of `a + b·t` is `a + b·p`, where `t² = n` for a
//! fixed quadratic non-residue `n`. The subfield GF(p) is exactly the codes
//! below `p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    /// GF(p).
    Prime,
    /// GF(p²) = GF(p)[t]/(t² − nonresidue).
    Quadratic { nonresidue: u32 },
    /// ℤ/pᵉ with e ≥ 2.
    Local { exponent: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffRing {
    p: u32,
    kind: RingKind,
    /// Number of elements.
    size: u32,
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if p > 251 {
        return Err(Error::Domain(format!("characteristic {p} too large")));
    }
    Ok(())
}

impl CoeffRing {
    pub fn prime_field(p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(Self { p, kind: RingKind::Prime, size: p })
    }

    /// GF(p²) with the smallest quadratic non-residue as `t²`.
    pub fn quadratic_field(p: u32) -> Result<Self> {
        check_prime(p)?;
        if p == 2 {
            // t² + t + 1 is the irreducible quadratic over GF(2); not needed here.
            return Err(Error::UnsupportedRing("GF(4)".into()));
        }
        let n = (2..p)
            .find(|&n| (0..p).all(|x| (x * x) % p != n))
            .expect("odd prime has a non-residue");
        Self::quadratic_field_with(p, n)
    }

    /// GF(p²) with `t² = nonresidue`; the modulus `x² − nonresidue` must have
    /// no root in GF(p).
    pub fn quadratic_field_with(p: u32, nonresidue: u32) -> Result<Self> {
        check_prime(p)?;
        let n = nonresidue % p;
        if (0..p).any(|x| (x * x) % p == n) {
            return Err(Error::Domain(format!("x² − {n} is reducible over GF({p})")));
        }
        if p * p > 65536 {
            return Err(Error::Domain("quadratic field too large".into()));
        }
        Ok(Self { p, kind: RingKind::Quadratic { nonresidue: n }, size: p * p })
    }

    /// ℤ/pᵉ; `e = 1` yields the prime field.
    pub fn local_ring(p: u32, e: u32) -> Result<Self> {
        check_prime(p)?;
        if e == 0 {
            return Err(Error::Domain("exponent must be at least 1".into()));
        }
        if e == 1 {
            return Self::prime_field(p);
        }
        let size = (p as u64).pow(e);
        if size > 65536 {
            return Err(Error::Domain(format!("ℤ/{p}^{e} too large")));
        }
        Ok(Self { p, kind: RingKind::Local { exponent: e }, size: size as u32 })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        match self.kind {
            RingKind::Local { exponent } => exponent,
            _ => 1,
        }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.kind, RingKind::Local { .. })
    }

    /// True for GF(p) and ℤ/pᵉ, whose elements are plain residues.
    pub fn is_residue_ring(&self) -> bool {
        !matches!(self.kind, RingKind::Quadratic { .. })
    }

    /// Modulus of a residue ring (p or pᵉ).
    pub fn modulus(&self) -> u32 {
        match self.kind {
            RingKind::Quadratic { .. } => self.p,
            _ => self.size,
        }
    }

    /// The prime field underlying this ring.
    pub fn prime_subfield(&self) -> CoeffRing {
        CoeffRing { p: self.p, kind: RingKind::Prime, size: self.p }
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn from_int(&self, v: i64) -> u32 {
        let m = self.modulus() as i64;
        v.rem_euclid(m) as u32
    }

    /// Element `a + b·t` of the quadratic field.
    pub fn quad(&self, a: u32, b: u32) -> u32 {
        debug_assert!(matches!(self.kind, RingKind::Quadratic { .. }));
        (a % self.p) + (b % self.p) * self.p
    }

    /// `(a, b)` with `x = a + b·t`; residue rings report `(x, 0)`.
    pub fn components(&self, x: u32) -> (u32, u32) {
        match self.kind {
            RingKind::Quadratic { .. } => (x % self.p, x / self.p),
            _ => (x, 0),
        }
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        match self.kind {
            RingKind::Quadratic { .. } => {
                let p = self.p;
                let (a, b) = (x % p, x / p);
                let (c, d) = (y % p, y / p);
                (a + c) % p + ((b + d) % p) * p
            }
            _ => {
                let s = x + y;
                if s >= self.size {
                    s - self.size
                } else {
                    s
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        match self.kind {
            RingKind::Quadratic { .. } => {
                let p = self.p;
                let (a, b) = (x % p, x / p);
                (p - a) % p + ((p - b) % p) * p
            }
            _ => {
                if x == 0 {
                    0
                } else {
                    self.size - x
                }
            }
        }
    }

    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        match self.kind {
            RingKind::Quadratic { nonresidue } => {
                let p = self.p;
                let (a, b) = (x % p, x / p);
                let (c, d) = (y % p, y / p);
                let re = (a * c + (b * d) % p * nonresidue) % p;
                let im = (a * d + b * c) % p;
                re + im * p
            }
            _ => (x * y) % self.size,
        }
    }

    pub fn pow(&self, x: u32, mut k: u64) -> u32 {
        let mut base = x;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, x: u32) -> bool {
        match self.kind {
            RingKind::Local { .. } => !x.is_multiple_of(self.p),
            _ => x != 0,
        }
    }

    pub fn inv(&self, x: u32) -> Option<u32> {
        if !self.is_unit(x) {
            return None;
        }
        match self.kind {
            RingKind::Quadratic { nonresidue } => {
                let p = self.p;
                let (a, b) = (x % p, x / p);
                // (a + bt)(a − bt) = a² − n b²
                let norm = (a * a + (p - (b * b) % p) * nonresidue % p) % p;
                let ninv = inv_mod(norm, p)?;
                Some((a * ninv) % p + (((p - b) % p) * ninv % p) * p)
            }
            _ => inv_mod(x, self.size),
        }
    }

    /// The p-adic valuation of a residue (e for zero); 0 for every nonzero
    /// field element.
    pub fn valuation(&self, x: u32) -> u32 {
        match self.kind {
            RingKind::Local { exponent } => {
                if x == 0 {
                    return exponent;
                }
                let mut v = 0;
                let mut y = x;
                while y.is_multiple_of(self.p) {
                    y /= self.p;
                    v += 1;
                }
                v
            }
            _ => {
                if x == 0 {
                    1
                } else {
                    0
                }
            }
        }
    }

    /// Frobenius x ↦ xᵖ. Identity on residue rings.
    pub fn frobenius(&self, x: u32) -> u32 {
        match self.kind {
            RingKind::Quadratic { nonresidue } => {
                // tᵖ = t·n^((p−1)/2) = −t because n is a non-residue.
                let _ = nonresidue;
                let p = self.p;
                let (a, b) = (x % p, x / p);
                a + ((p - b) % p) * p
            }
            _ => x,
        }
    }

    /// Reduction ℤ/pᵉ → GF(p).
    pub fn reduce_to_prime(&self, x: u32) -> u32 {
        match self.kind {
            RingKind::Quadratic { .. } => x,
            _ => x % self.p,
        }
    }

    /// True when the element lies in the prime subfield.
    pub fn in_prime_subfield(&self, x: u32) -> bool {
        match self.kind {
            RingKind::Quadratic { .. } => x < self.p,
            RingKind::Prime => true,
            RingKind::Local { .. } => x < self.p,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size
    }

    /// Multiplicative order of a unit (brute force; rings are tiny).
    pub fn unit_order(&self, x: u32) -> Option<u64> {
        if !self.is_unit(x) {
            return None;
        }
        let mut y = x;
        let mut k = 1;
        while y != 1 {
            y = self.mul(y, x);
            k += 1;
        }
        Some(k)
    }

    /// A generator of the unit group of a field.
    pub fn primitive_element(&self) -> Option<u32> {
        if !self.is_field() {
            return None;
        }
        let n = (self.size - 1) as u64;
        (1..self.size).find(|&x| self.unit_order(x) == Some(n))
    }

    /// Short textual name, also used as the header of serialized matrices.
    pub fn name(&self) -> String {
        match self.kind {
            RingKind::Prime => format!("GF({})", self.p),
            RingKind::Quadratic { nonresidue } => format!("GF({}^2;{})", self.p, nonresidue),
            RingKind::Local { exponent } => format!("Z/{}^{}", self.p, exponent),
        }
    }

    pub fn parse_name(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown ring `{s}`"));
        if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            if let Some((base, rest)) = inner.split_once("^2") {
                let p: u32 = base.parse().map_err(|_| bad())?;
                let n = rest.trim_start_matches(';');
                if n.is_empty() {
                    return Self::quadratic_field(p);
                }
                return Self::quadratic_field_with(p, n.parse().map_err(|_| bad())?);
            }
            return Self::prime_field(inner.parse().map_err(|_| bad())?);
        }
        if let Some(inner) = s.strip_prefix("Z/") {
            let (p, e) = inner.split_once('^').ok_or_else(bad)?;
            return Self::local_ring(p.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }

    pub fn fmt_elem(&self, x: u32) -> String {
        match self.kind {
            RingKind::Quadratic { .. } => {
                let (a, b) = self.components(x);
                match (a, b) {
                    (_, 0) => format!("{a}"),
                    (0, _) => format!("{b}t"),
                    _ => format!("{a}+{b}t"),
                }
            }
            _ => format!("{x}"),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn inv_mod(x: u32, m: u32) -> Option<u32> {
    let (mut a, mut b) = (x as i64, m as i64);
    let (mut s, mut t) = (1i64, 0i64);
    while b != 0 {
        let q = a / b;
        (a, b) = (b, a - q * b);
        (s, t) = (t, s - q * t);
    }
    if a != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i64) as u32)
}
