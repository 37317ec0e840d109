//! Dense matrices over a [`CoeffRing`], with elimination over fields and unit
//! pivoting over local rings.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::ring::CoeffRing;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    ring: CoeffRing,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of reducing a matrix over a field to reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    /// Builds a matrix from already-encoded ring elements, reducing residues.
    pub fn new(ring: CoeffRing, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|x| x % ring.size()).collect();
        Ok(Self { ring, rows, cols, data })
    }

    pub fn zeros(ring: CoeffRing, rows: usize, cols: usize) -> Self {
        Self { ring, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(ring: CoeffRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Integer rows reduced into a residue ring (or the prime subfield of GF(p²)).
    pub fn from_int_rows(ring: CoeffRing, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| ring.from_int(v)).collect();
        Ok(Self { ring, rows: r, cols: c, data })
    }

    pub fn diagonal(ring: CoeffRing, entries: &[u32]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(ring, n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = x % ring.size();
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ring: CoeffRing, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(ring, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i * cols + j] = c[i];
            }
        }
        m
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.ring.size();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(Error::Dimension(format!(
                "{}×{} times {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut data = vec![0u32; n * m];
        if self.ring.is_residue_ring() {
            let modulus = self.ring.modulus() as u64;
            // Entries are below 2¹⁶, so a few thousand products fit in u64
            // before reduction is required.
            let mut acc = vec![0u64; m];
            for i in 0..n {
                acc.iter_mut().for_each(|a| *a = 0);
                let arow = &self.data[i * k..(i + 1) * k];
                for (l, &a) in arow.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let a = a as u64;
                    let brow = &other.data[l * m..(l + 1) * m];
                    for (acc, &b) in acc.iter_mut().zip(brow) {
                        *acc += a * b as u64;
                    }
                    if l % 4096 == 4095 {
                        acc.iter_mut().for_each(|a| *a %= modulus);
                    }
                }
                for (d, a) in data[i * m..(i + 1) * m].iter_mut().zip(&acc) {
                    *d = (a % modulus) as u32;
                }
            }
        } else {
            let r = self.ring;
            for i in 0..n {
                for l in 0..k {
                    let a = self.data[i * k + l];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..m {
                        let b = other.data[l * m + j];
                        if b != 0 {
                            let d = &mut data[i * m + j];
                            *d = r.add(*d, r.mul(a, b));
                        }
                    }
                }
            }
        }
        Ok(Mat { ring: self.ring, rows: n, cols: m, data })
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let r = self.ring;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                if r.is_residue_ring() {
                    let s: u64 = row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                    (s % r.modulus() as u64) as u32
                } else {
                    row.iter().zip(v).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b)))
                }
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&CoeffRing, u32, u32) -> u32) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols || self.ring != other.ring {
            return Err(Error::Dimension("shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(&self.ring, a, b)).collect();
        Ok(Mat { ring: self.ring, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: u32) -> Mat {
        self.map(|r, x| r.mul(c, x))
    }

    pub fn neg(&self) -> Mat {
        self.map(|r, x| r.neg(x))
    }

    pub fn map(&self, f: impl Fn(&CoeffRing, u32) -> u32) -> Mat {
        let data = self.data.iter().map(|&x| f(&self.ring, x)).collect();
        Mat { ring: self.ring, rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise Frobenius x ↦ xᵖ.
    pub fn frobenius(&self) -> Mat {
        self.map(|r, x| r.frobenius(x))
    }

    /// Same entries viewed in another ring (codes must be valid there).
    pub fn with_ring(&self, ring: CoeffRing) -> Result<Mat> {
        if self.data.iter().any(|&x| x >= ring.size()) {
            return Err(Error::Domain(format!("entries do not fit in {ring}")));
        }
        Ok(Mat { ring, rows: self.rows, cols: self.cols, data: self.data.clone() })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Kronecker product; index (i, j) of the result basis is `i·dim(b) + j`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let r = self.ring;
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Mat::zeros(r, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.data[(i * other.rows + k) * cols + j * other.cols + l] =
                            r.mul(a, other.get(k, l));
                    }
                }
            }
        }
        m
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.ring, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(self.ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = self.get(r0 + i, c0 + j);
            }
        }
        m
    }

    pub fn pow(&self, mut k: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.ring, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.ring.add(acc, self.get(i, i)))
    }

    fn require_field(&self) -> Result<()> {
        if !self.ring.is_field() {
            return Err(Error::UnsupportedRing(format!("{} is not a field", self.ring)));
        }
        Ok(())
    }

    /// Reduced row-echelon form over a field.
    pub fn rref(&self) -> Result<Rref> {
        self.require_field()?;
        let r = self.ring;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = r.inv(m.get(row, col)).expect("nonzero field element");
            m.scale_row(row, inv);
            for i in 0..m.rows {
                if i != row {
                    let f = m.get(i, col);
                    if f != 0 {
                        m.add_row_multiple(i, row, r.neg(f));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(Rref { rank: pivots.len(), matrix: m, pivots })
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.rank)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: u32) {
        let r = self.ring;
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = r.mul(*x, c);
        }
    }

    /// row[dst] += c · row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: u32) {
        let r = self.ring;
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j];
            if s != 0 {
                let d = &mut self.data[dst * self.cols + j];
                *d = r.add(*d, r.mul(c, s));
            }
        }
    }

    /// Basis of the right null space {v : M·v = 0}.
    pub fn nullspace(&self) -> Result<Vec<Vec<u32>>> {
        let rr = self.rref()?;
        let r = self.ring;
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (i, &p) in rr.pivots.iter().enumerate() {
                    v[p] = r.neg(rr.matrix.get(i, f));
                }
                v
            })
            .collect())
    }

    /// Inverse, by Gauss–Jordan elimination on unit pivots. Over ℤ/pᵉ a unit
    /// pivot exists in every column exactly when the reduction mod p is
    /// invertible.
    pub fn invert(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{}×{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let r = self.ring;
        let mut a = self.clone();
        let mut inv = Mat::identity(r, n);
        for col in 0..n {
            let p = (col..n).find(|&i| r.is_unit(a.get(i, col))).ok_or(Error::NotAUnit)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let u = r.inv(a.get(col, col)).expect("unit pivot");
            a.scale_row(col, u);
            inv.scale_row(col, u);
            for i in 0..n {
                if i != col {
                    let f = a.get(i, col);
                    if f != 0 {
                        let c = r.neg(f);
                        a.add_row_multiple(i, col, c);
                        inv.add_row_multiple(i, col, c);
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.ring.is_field() {
            return self.rank().map(|k| k == self.rows).unwrap_or(false);
        }
        self.map(|r, x| r.reduce_to_prime(x))
            .with_ring(self.ring.prime_subfield())
            .and_then(|m| m.rank())
            .map(|k| k == self.rows)
            .unwrap_or(false)
    }

    /// Determinant over a field.
    pub fn det(&self) -> Result<u32> {
        self.require_field()?;
        if !self.is_square() {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let r = self.ring;
        let mut m = self.clone();
        let mut det = 1;
        for col in 0..m.rows {
            let Some(p) = (col..m.rows).find(|&i| m.get(i, col) != 0) else {
                return Ok(0);
            };
            if p != col {
                m.swap_rows(p, col);
                det = r.neg(det);
            }
            let pv = m.get(col, col);
            det = r.mul(det, pv);
            let inv = r.inv(pv).unwrap();
            for i in col + 1..m.rows {
                let f = m.get(i, col);
                if f != 0 {
                    m.add_row_multiple(i, col, r.neg(r.mul(f, inv)));
                }
            }
        }
        Ok(det)
    }

    /// Solves `self · x = b` over a field; `None` when inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let mut aug = Mat::zeros(self.ring, self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for (i, &x) in b.iter().enumerate() {
            aug.data[i * (self.cols + 1) + self.cols] = x;
        }
        let rr = aug.rref()?;
        if rr.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in rr.pivots.iter().enumerate() {
            x[p] = rr.matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product dimensions")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat<{}> {}×{}", self.ring, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&x| self.ring.fmt_elem(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Span of a list of vectors over a field, as RREF rows (canonical form).
pub fn span_rref(ring: CoeffRing, dim: usize, vectors: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let mut m = Mat::zeros(ring, vectors.len(), dim);
    for (i, v) in vectors.iter().enumerate() {
        for (j, &x) in v.iter().enumerate() {
            m.data[i * dim + j] = x;
        }
    }
    let rr = m.rref()?;
    Ok((0..rr.rank).map(|i| rr.matrix.row(i).to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> CoeffRing {
        CoeffRing::prime_field(p).unwrap()
    }

    fn theta(ring: CoeffRing) -> Mat {
        let rows: Vec<Vec<i64>> =
            (0..4).map(|i| (0..4).map(|j| i64::from(i != j)).collect()).collect();
        Mat::from_int_rows(ring, &rows).unwrap()
    }

    /// Rank by brute force: the largest k such that some k×k minor has a
    /// nonzero determinant computed by cofactor expansion over the integers.
    fn brute_rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum()
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let n = rows.len();
        for k in (1..=n).rev() {
            for rs in subsets(n, k) {
                for cs in subsets(rows[0].len(), k) {
                    let minor: Vec<Vec<i64>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
                    if det(&minor).rem_euclid(p) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(gf(3), 2);
        let rr = id.rref().unwrap();
        assert_eq!(rr.matrix, id);
        assert_eq!(rr.rank, 2);
        let z = Mat::zeros(gf(7), 3, 3);
        let rr = z.rref().unwrap();
        assert_eq!(rr.rank, 0);
        assert!(rr.matrix.is_zero());
    }

    #[test]
    fn theta_rank_mod_three_matches_minor_oracle() {
        // det θ = −3, so θ is singular mod 3.
        let rows: Vec<Vec<i64>> =
            (0..4).map(|i| (0..4).map(|j| i64::from(i != j)).collect()).collect();
        let oracle = brute_rank_mod(&rows, 3);
        assert_eq!(oracle, 3);
        assert_eq!(theta(gf(3)).rank().unwrap(), oracle);
        assert_eq!(theta(gf(7)).rank().unwrap(), brute_rank_mod(&rows, 7));
        assert_eq!(theta(gf(7)).det().unwrap(), gf(7).from_int(-3));
    }

    #[test]
    fn rref_rejects_local_rings() {
        let r = CoeffRing::local_ring(7, 2).unwrap();
        assert!(matches!(Mat::identity(r, 2).rref(), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn nullspace_examples() {
        assert!(Mat::identity(gf(7), 4).nullspace().unwrap().is_empty());
        assert_eq!(Mat::zeros(gf(7), 4, 4).nullspace().unwrap().len(), 4);
    }

    #[test]
    fn invert_examples() {
        let r49 = CoeffRing::local_ring(7, 2).unwrap();
        let id = Mat::identity(r49, 3);
        assert_eq!(id.invert().unwrap(), id);
        assert_eq!(Mat::diagonal(r49, &[7, 1]).invert(), Err(Error::NotAUnit));
        let r9 = CoeffRing::local_ring(3, 2).unwrap();
        assert_eq!(Mat::diagonal(r9, &[2, 3]).invert(), Err(Error::NotAUnit));
        assert_eq!(Mat::diagonal(r9, &[2, 4]).invert().unwrap(), Mat::diagonal(r9, &[5, 7]));
        assert!(matches!(Mat::zeros(r9, 2, 3).invert(), Err(Error::Dimension(_))));
    }

    #[test]
    fn kron_dimensions_and_mixed_product() {
        let f = gf(5);
        let a = Mat::from_int_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = Mat::from_int_rows(f, &[vec![0, 1], vec![1, 1]]).unwrap();
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(&k * &k, (&a * &a).kron(&(&b * &b)));
    }

    fn arb_square(p: u32, n: usize) -> impl Strategy<Value = Mat> {
        prop::collection::vec(0..p, n * n)
            .prop_map(move |d| Mat::new(CoeffRing::prime_field(p).unwrap(), n, n, d).unwrap())
    }

    fn arb_local_square() -> impl Strategy<Value = Mat> {
        prop::collection::vec(0u32..49, 9)
            .prop_map(|d| Mat::new(CoeffRing::local_ring(7, 2).unwrap(), 3, 3, d).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_exists_iff_full_rank(m in arb_square(7, 4)) {
            let full = m.rank().unwrap() == 4;
            match m.invert() {
                Ok(inv) => {
                    prop_assert!(full);
                    prop_assert!((&m * &inv).is_identity());
                    prop_assert!((&inv * &m).is_identity());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::NotAUnit);
                    prop_assert!(!full);
                }
            }
        }

        #[test]
        fn local_inverse_iff_residue_invertible(m in arb_local_square()) {
            match m.invert() {
                Ok(inv) => {
                    prop_assert!(m.is_invertible());
                    prop_assert!((&m * &inv).is_identity());
                }
                Err(_) => prop_assert!(!m.is_invertible()),
            }
        }

        #[test]
        fn nullspace_vectors_are_killed(m in arb_square(11, 5)) {
            let ns = m.nullspace().unwrap();
            prop_assert_eq!(ns.len(), 5 - m.rank().unwrap());
            for v in ns {
                prop_assert!(m.apply(&v).iter().all(|&x| x == 0));
            }
        }
    }
}
