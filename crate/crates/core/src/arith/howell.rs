//! Howell normal form over ℤ/pᵉ and the linear-system solver built on it.
//!
//! A Howell form is an echelon form whose rows additionally satisfy: every
//! module element vanishing in the first `c` columns is a combination of the
//! rows with pivot column ≥ `c`. That property is what makes kernels and
//! solution modules readable off the form.

use super::mat::Mat;
use super::ring::CoeffRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellForm {
    ring: CoeffRing,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    /// (pivot column, valuation of the pivot entry) per row.
    pivots: Vec<(usize, u32)>,
}

/// Solution description of `A·x = b` over ℤ/pᵉ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    Solvable {
        /// One solution per right-hand-side column.
        particular: Vec<Vec<u32>>,
        /// Howell generators of {x : A·x = 0}.
        homogeneous: Vec<Vec<u32>>,
    },
}

fn require_residue(ring: CoeffRing) -> Result<()> {
    if !ring.is_residue_ring() {
        return Err(Error::UnsupportedRing(format!(
            "Howell form needs ℤ/pᵉ, got {ring}"
        )));
    }
    Ok(())
}

impl HowellForm {
    pub fn new(ring: CoeffRing, ncols: usize, input: Vec<Vec<u32>>) -> Result<Self> {
        require_residue(ring)?;
        let p = ring.characteristic();
        let e = ring.exponent();
        let n = ring.modulus();
        let ppow = |k: u32| p.pow(k);

        let scale = |row: &mut [u32], c: u32| {
            for x in row.iter_mut() {
                *x = ((*x as u64 * c as u64) % n as u64) as u32;
            }
        };
        // row -= c·other
        let sub_mul = |row: &mut [u32], other: &[u32], c: u32| {
            let c = (n - c % n) % n;
            for (x, &y) in row.iter_mut().zip(other) {
                *x = ((*x as u64 + c as u64 * y as u64) % n as u64) as u32;
            }
        };

        let mut piv: Vec<Option<Vec<u32>>> = vec![None; ncols];
        let mut queue: Vec<Vec<u32>> = input
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "row length");
                r.into_iter().map(|x| x % n).collect()
            })
            .collect();
        queue.reverse();

        while let Some(mut row) = queue.pop() {
            loop {
                let Some(c) = row.iter().position(|&x| x != 0) else {
                    break;
                };
                let v = ring.valuation(row[c]);
                let unit = row[c] / ppow(v);
                let uinv = ring.inv(unit % n).expect("unit part is a unit");
                scale(&mut row, uinv);
                debug_assert_eq!(row[c], ppow(v));
                match piv[c].take() {
                    None => {
                        if v > 0 {
                            let mut ann = row.clone();
                            scale(&mut ann, ppow(e - v));
                            queue.push(ann);
                        }
                        piv[c] = Some(row);
                        break;
                    }
                    Some(existing) => {
                        let vp = ring.valuation(existing[c]);
                        if v >= vp {
                            sub_mul(&mut row, &existing, ppow(v - vp));
                            piv[c] = Some(existing);
                        } else {
                            if v > 0 {
                                let mut ann = row.clone();
                                scale(&mut ann, ppow(e - v));
                                queue.push(ann);
                            }
                            let mut old = existing;
                            sub_mul(&mut old, &row, ppow(vp - v));
                            piv[c] = Some(row);
                            row = old;
                        }
                    }
                }
            }
        }

        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for (c, r) in piv.into_iter().enumerate() {
            if let Some(r) = r {
                pivots.push((c, ring.valuation(r[c])));
                rows.push(r);
            }
        }
        // Reduce entries above each pivot into [0, p^v).
        for k in 0..rows.len() {
            let (c, v) = pivots[k];
            let pv = ppow(v);
            for i in 0..k {
                let q = rows[i][c] / pv;
                if q != 0 {
                    let (head, tail) = rows.split_at_mut(k);
                    sub_mul(&mut head[i], &tail[0], q);
                }
            }
        }
        Ok(Self { ring, ncols, rows, pivots })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Free of rank = number of rows iff every pivot is a unit.
    pub fn is_free(&self) -> bool {
        self.pivots.iter().all(|&(_, v)| v == 0)
    }

    /// Number of elements of the row module: ∏ p^(e − v).
    pub fn module_size(&self) -> u128 {
        let p = self.ring.characteristic() as u128;
        let e = self.ring.exponent();
        self.pivots.iter().map(|&(_, v)| p.pow(e - v)).product()
    }

    /// Every element of the row module exactly once, as Σ cᵢ·rowᵢ with
    /// 0 ≤ cᵢ < p^(e − vᵢ).
    pub fn elements(&self) -> ModuleElements<'_> {
        let p = self.ring.characteristic();
        let e = self.ring.exponent();
        let bounds = self.pivots.iter().map(|&(_, v)| p.pow(e - v)).collect();
        ModuleElements {
            form: self,
            bounds,
            coeffs: vec![0; self.rows.len()],
            current: vec![0; self.ncols],
            done: false,
        }
    }
}

pub struct ModuleElements<'a> {
    form: &'a HowellForm,
    bounds: Vec<u32>,
    coeffs: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl Iterator for ModuleElements<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let r = self.form.ring;
        // Odometer increment; adding one copy of a row keeps `current` in sync.
        let mut i = 0;
        loop {
            if i == self.coeffs.len() {
                self.done = true;
                break;
            }
            self.coeffs[i] += 1;
            let row = &self.form.rows[i];
            if self.coeffs[i] < self.bounds[i] {
                for (x, &y) in self.current.iter_mut().zip(row) {
                    *x = r.add(*x, y);
                }
                break;
            }
            // wrap: drop the (bound − 1) copies accumulated so far
            let k = self.bounds[i] - 1;
            for (x, &y) in self.current.iter_mut().zip(row) {
                *x = r.sub(*x, r.mul(r.from_int(k as i64), y));
            }
            self.coeffs[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// Howell generators of the right kernel {x : A·x = 0}.
pub fn kernel(a: &Mat) -> Result<HowellForm> {
    let ring = a.ring();
    require_residue(ring)?;
    let (m, n) = (a.rows(), a.cols());
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut r = a.column(j);
            r.extend((0..n).map(|k| u32::from(k == j)));
            r
        })
        .collect();
    let hf = HowellForm::new(ring, m + n, rows)?;
    let mut krows = Vec::new();
    let mut kpiv = Vec::new();
    for (row, &(c, v)) in hf.rows.iter().zip(&hf.pivots) {
        if c >= m {
            krows.push(row[m..].to_vec());
            kpiv.push((c - m, v));
        }
    }
    Ok(HowellForm { ring, ncols: n, rows: krows, pivots: kpiv })
}

/// Solves `A·X = B` over ℤ/pᵉ column by column.
pub fn howell_solve(a: &Mat, b: &Mat) -> Result<Solution> {
    let ring = a.ring();
    require_residue(ring)?;
    if b.ring() != ring || b.rows() != a.rows() {
        return Err(Error::Dimension("right-hand side shape".into()));
    }
    let (m, n) = (a.rows(), a.cols());
    let homogeneous = kernel(a)?.rows;
    let mut particular = Vec::new();
    for col in 0..b.cols() {
        // columns: [A-part (m) | t | x (n)]
        let mut rows: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                let mut r = a.column(j);
                r.push(0);
                r.extend((0..n).map(|k| u32::from(k == j)));
                r
            })
            .collect();
        let mut extra: Vec<u32> = b.column(col).iter().map(|&x| ring.neg(x)).collect();
        extra.push(1);
        extra.extend(std::iter::repeat_n(0, n));
        rows.push(extra);
        let hf = HowellForm::new(ring, m + 1 + n, rows)?;
        let found = hf
            .rows
            .iter()
            .zip(&hf.pivots)
            .find(|(_, &(c, v))| c == m && v == 0)
            .map(|(r, _)| r[m + 1..].to_vec());
        match found {
            Some(x) => particular.push(x),
            None => return Ok(Solution::Inconsistent),
        }
    }
    Ok(Solution::Solvable { particular, homogeneous })
}
