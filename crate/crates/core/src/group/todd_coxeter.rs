//! Todd–Coxeter coset enumeration, HLT strategy with lookahead.

use super::presentation::{Presentation, Word};
use crate::error::{Error, Result};

pub const COSET_CAP: usize = 4_000_000;

const NONE: u32 = u32::MAX;

struct Table {
    cols: usize,
    data: Vec<u32>,
    /// Union-find parent; p[c] == c for live cosets.
    parent: Vec<u32>,
    cap: usize,
    live: usize,
    queue: Vec<u32>,
}

#[inline]
fn col(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    2 * g + usize::from(letter < 0)
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Table {
    fn new(ngens: usize, cap: usize) -> Self {
        let cols = 2 * ngens;
        Table { cols, data: vec![NONE; cols], parent: vec![0], cap, live: 1, queue: Vec::new() }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.data[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.data[c as usize * self.cols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Option<u32> {
        if self.len() >= self.cap {
            return None;
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.data.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Some(d)
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi];
            qi += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(g, x, NONE);
                let xi = inv_col(x);
                if self.get(d, xi) == g {
                    self.set(d, xi, NONE);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let m_x = self.get(mu, x);
                if m_x != NONE {
                    self.merge(nu, m_x);
                } else {
                    let n_xi = self.get(nu, xi);
                    if n_xi != NONE {
                        self.merge(mu, n_xi);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, xi, mu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `c`; with `fill`, defines cosets to close it.
    /// Returns false when a needed definition hit the cap.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> bool {
        if w.is_empty() {
            return true;
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() - 1;
        loop {
            while i <= j {
                let n = self.get(f, w[i]);
                if n == NONE {
                    break;
                }
                f = n;
                if i == j {
                    // forward scan completed the word
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return true;
                }
                i += 1;
            }
            while j >= i {
                let n = self.get(b, inv_col(w[j]));
                if n == NONE {
                    break;
                }
                b = n;
                if j == i {
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return true;
                }
                j -= 1;
            }
            if i == j {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return true;
            }
            if !fill {
                return true;
            }
            match self.define(f, w[i]) {
                Some(_) => {}
                None => return false,
            }
        }
    }

    fn compact(&mut self) -> u32 {
        let n = self.len();
        let mut map = vec![NONE; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.parent[c] == c as u32 {
                map[c] = k;
                k += 1;
            }
        }
        let cols = self.cols;
        let mut data = Vec::with_capacity(k as usize * cols);
        for c in 0..n {
            if map[c] == NONE {
                continue;
            }
            for x in 0..cols {
                let d = self.data[c * cols + x];
                data.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        self.data = data;
        self.parent = (0..k).collect();
        self.live = k as usize;
        k
    }

    fn lookahead(&mut self, rels: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.len() {
            if self.is_live(c as u32) {
                for r in rels {
                    if !self.is_live(c as u32) {
                        break;
                    }
                    self.scan(c as u32, r, false);
                }
            }
            c += 1;
        }
    }
}

/// Index of the subgroup generated by `subgroup` in the group presented by `p`.
pub fn coset_enumeration(p: &Presentation, subgroup: &[Word], cap: usize) -> Result<usize> {
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|r| r.iter().map(|&l| col(l)).collect()).collect();
    let sub: Vec<Vec<usize>> = subgroup.iter().map(|r| r.iter().map(|&l| col(l)).collect()).collect();
    let ngens = p.ngens();
    if ngens == 0 {
        return Ok(1);
    }
    let mut t = Table::new(ngens, cap);
    for w in &sub {
        if !t.scan(0, w, true) {
            return Err(Error::EnumerationIncomplete(cap));
        }
    }
    let mut c: usize = 0;
    let mut stalled = false;
    while c < t.len() {
        if !t.is_live(c as u32) {
            c += 1;
            continue;
        }
        let mut full = false;
        for r in &rels {
            if !t.is_live(c as u32) {
                break;
            }
            if !t.scan(c as u32, r, true) {
                full = true;
                break;
            }
        }
        if !full && t.is_live(c as u32) {
            for x in 0..t.cols {
                if t.get(c as u32, x) == NONE && t.define(c as u32, x).is_none() {
                    full = true;
                    break;
                }
            }
        }
        if full {
            if stalled {
                return Err(Error::EnumerationIncomplete(cap));
            }
            t.lookahead(&rels);
            // keep position: count live cosets before c
            let before = (0..c).filter(|&k| t.is_live(k as u32)).count();
            t.compact();
            c = before;
            // give up once lookahead frees less than 1% of the table
            stalled = t.len() + cap / 100 >= cap;
            continue;
        }
        stalled = false;
        c += 1;
    }
    Ok(t.live)
}
