//! Orbits and stabilizer chains with word-tracked strong generators.
//!
//! The chain is found by random Schreier–Sims (product replacement) and then
//! checked deterministically: every Schreier generator at every level must
//! sift to the identity through the levels below it. Transversal elements
//! and their inverses are kept packed per level.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::elem::Element;
use super::slp::Slp;
use crate::error::{Error, Result};

pub const ORBIT_CAP: usize = 10_000_000;
const DENSE_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct ChainOptions {
    pub seed: u64,
    pub orbit_cap: usize,
    /// Stop the random phase once this order is reached.
    pub known_order: Option<BigUint>,
    /// Consecutive trivial sifts that end the random phase.
    pub random_stop: usize,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { seed: 0, orbit_cap: ORBIT_CAP, known_order: None, random_stop: 24 }
    }
}

impl ChainOptions {
    pub fn seeded(seed: u64) -> Self {
        ChainOptions { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
enum OrbitIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl OrbitIndex {
    fn new(domain: Option<u64>) -> Self {
        match domain {
            Some(n) if n <= DENSE_LIMIT => OrbitIndex::Dense(vec![u32::MAX; n as usize]),
            _ => OrbitIndex::Sparse(HashMap::new()),
        }
    }

    #[inline]
    fn get(&self, pt: u64) -> Option<u32> {
        match self {
            OrbitIndex::Dense(v) => {
                let k = v[pt as usize];
                (k != u32::MAX).then_some(k)
            }
            OrbitIndex::Sparse(m) => m.get(&pt).copied(),
        }
    }

    fn insert(&mut self, pt: u64, k: u32) {
        match self {
            OrbitIndex::Dense(v) => v[pt as usize] = k,
            OrbitIndex::Sparse(m) => {
                m.insert(pt, k);
            }
        }
    }
}

/// A BFS orbit with its Schreier vector.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<u64>,
    /// Position of the parent point, `u32::MAX` at the root.
    pub parent: Vec<u32>,
    /// Generator index carrying the parent to this point.
    pub label: Vec<u32>,
    index: OrbitIndex,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, pt: u64) -> Option<usize> {
        self.index.get(pt).map(|k| k as usize)
    }

    pub fn contains(&self, pt: u64) -> bool {
        self.index.get(pt).is_some()
    }

    /// Generator indices `w` with `point = g_{w[0]}·g_{w[1]}⋯ (root)`.
    pub fn word(&self, mut k: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while self.parent[k] != u32::MAX {
            w.push(self.label[k] as usize);
            k = self.parent[k] as usize;
        }
        w
    }
}

pub fn orbit<E: Element>(gens: &[E], point: u64, cap: usize) -> Result<Orbit> {
    let domain = gens.first().and_then(|g| g.domain_size());
    if let Some(n) = domain {
        if point >= n {
            return Err(Error::Domain(format!("point {point} outside domain of size {n}")));
        }
    }
    let mut o = Orbit {
        points: vec![point],
        parent: vec![u32::MAX],
        label: vec![u32::MAX],
        index: OrbitIndex::new(domain),
    };
    o.index.insert(point, 0);
    let mut k = 0;
    while k < o.points.len() {
        let x = o.points[k];
        for (gi, g) in gens.iter().enumerate() {
            let y = g.act(x);
            if o.index.get(y).is_none() {
                if o.points.len() >= cap {
                    return Err(Error::ResourceLimit { cap: "orbit", limit: cap as u64 });
                }
                o.index.insert(y, o.points.len() as u32);
                o.points.push(y);
                o.parent.push(k as u32);
                o.label.push(gi as u32);
            }
        }
        k += 1;
    }
    Ok(o)
}

#[derive(Clone, Debug)]
struct Level {
    base: u64,
    /// Strong generators fixing every earlier base point.
    gens: Vec<usize>,
    orbit: Orbit,
    fwd: Vec<u8>,
    inv: Vec<u8>,
    /// Verification cursor per verification generator.
    checked: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct StabChain<E: Element> {
    one: E,
    stride: usize,
    cap: usize,
    domain: Option<u64>,
    gens: Vec<E>,
    /// Strong generator each original generator was inserted as.
    gen_strong: Vec<Option<usize>>,
    strong: Vec<E>,
    strong_inv: Vec<E>,
    strong_level: Vec<usize>,
    strong_node: Vec<u32>,
    slp: Slp,
    levels: Vec<Level>,
    verified: bool,
}

/// Serializable content of a verified chain.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChainData {
    pub base: Vec<u64>,
    pub strong_packed: Vec<Vec<u8>>,
    pub strong_level: Vec<usize>,
    pub slp: Slp,
    pub strong_node: Vec<u32>,
    pub gen_strong: Vec<Option<usize>>,
}

impl<E: Element> StabChain<E> {
    fn empty(gens: &[E], cap: usize) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Domain("no generators".into()))?;
        let one = first.one();
        let mut slp = Slp::new();
        for i in 0..gens.len() {
            slp.gen(i);
        }
        Ok(StabChain {
            stride: one.packed_len(),
            domain: one.domain_size(),
            one,
            cap,
            gens: gens.to_vec(),
            gen_strong: vec![None; gens.len()],
            strong: Vec::new(),
            strong_inv: Vec::new(),
            strong_level: Vec::new(),
            strong_node: Vec::new(),
            slp,
            levels: Vec::new(),
            verified: false,
        })
    }

    pub fn build(gens: &[E], opts: &ChainOptions) -> Result<Self> {
        let mut c = Self::empty(gens, opts.orbit_cap)?;
        for (i, g) in gens.iter().enumerate() {
            if g.is_one() {
                continue;
            }
            let lvl = c.first_moved_level(g);
            let s = c.add_strong(g.clone(), i as u32, lvl)?;
            c.gen_strong[i] = Some(s);
        }
        if !c.strong.is_empty() {
            c.random_phase(opts)?;
        }
        c.verify()?;
        c.finish();
        Ok(c)
    }

    fn first_moved_level(&self, g: &E) -> usize {
        self.levels.iter().position(|l| g.act(l.base) != l.base).unwrap_or(self.levels.len())
    }

    fn random_phase(&mut self, opts: &ChainOptions) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let n = self.gens.len();
        let slots_len = n.max(10);
        let mut slots: Vec<(E, u32)> = (0..slots_len).map(|i| (self.gens[i % n].clone(), (i % n) as u32)).collect();
        let one_node = self.slp.one();
        let mut acc = (self.one.clone(), one_node);
        let step = |slots: &mut Vec<(E, u32)>, acc: &mut (E, u32), slp: &mut Slp, rng: &mut ChaCha8Rng| {
            let i = rng.gen_range(0..slots_len);
            let mut j = rng.gen_range(0..slots_len - 1);
            if j >= i {
                j += 1;
            }
            let (mut e, mut w) = slots[j].clone();
            if rng.gen_bool(0.5) {
                e = e.inv();
                w = slp.inv(w);
            }
            let (si, wi) = &slots[i];
            let (ne, nw) = if rng.gen_bool(0.5) {
                (si.mul(&e), slp.mul(*wi, w))
            } else {
                (e.mul(si), slp.mul(w, *wi))
            };
            acc.0 = acc.0.mul(&ne);
            acc.1 = slp.mul(acc.1, nw);
            slots[i] = (ne, nw);
        };
        for _ in 0..50 {
            step(&mut slots, &mut acc, &mut self.slp, &mut rng);
        }
        let mut quiet = 0;
        while quiet < opts.random_stop {
            if let Some(k) = &opts.known_order {
                if &self.order() >= k {
                    break;
                }
            }
            step(&mut slots, &mut acc, &mut self.slp, &mut rng);
            let (res, lvl) = self.sift_from(acc.0.clone(), 0);
            if res.is_one() {
                quiet += 1;
                continue;
            }
            quiet = 0;
            let (res, node, lvl2) = self.sift_word(acc.0.clone(), acc.1, 0);
            debug_assert_eq!(lvl, lvl2);
            self.add_strong(res, node, lvl2)?;
        }
        Ok(())
    }

    fn new_level(&mut self, g: &E) -> Result<()> {
        let used: Vec<u64> = self.levels.iter().map(|l| l.base).collect();
        let base = g
            .base_candidates()
            .into_iter()
            .find(|&b| !used.contains(&b) && g.act(b) != b)
            .ok_or_else(|| Error::NonFaithful(format!("{g:?} fixes every base candidate")))?;
        let mut orbit = Orbit {
            points: vec![base],
            parent: vec![u32::MAX],
            label: vec![u32::MAX],
            index: OrbitIndex::new(self.domain),
        };
        orbit.index.insert(base, 0);
        let mut fwd = Vec::with_capacity(self.stride);
        self.one.pack(&mut fwd);
        let inv = fwd.clone();
        self.levels.push(Level { base, gens: Vec::new(), orbit, fwd, inv, checked: Vec::new() });
        Ok(())
    }

    /// Adds `g` (with SLP node `node`) to S₀, …, S_lvl and extends the orbits.
    fn add_strong(&mut self, g: E, node: u32, lvl: usize) -> Result<usize> {
        debug_assert!(!g.is_one());
        if lvl == self.levels.len() {
            self.new_level(&g)?;
        }
        let idx = self.strong.len();
        self.strong_inv.push(g.inv());
        self.strong.push(g);
        self.strong_level.push(lvl);
        self.strong_node.push(node);
        for i in 0..=lvl {
            self.levels[i].gens.push(idx);
            if i > 0 {
                self.levels[i].checked.push(0);
            }
            self.extend_orbit(i, idx)?;
        }
        self.verified = false;
        Ok(idx)
    }

    fn extend_orbit(&mut self, i: usize, new_gen: usize) -> Result<()> {
        let old = self.levels[i].orbit.len();
        for k in 0..old {
            self.try_edge(i, k, new_gen)?;
        }
        let mut k = old;
        while k < self.levels[i].orbit.len() {
            for gi in 0..self.levels[i].gens.len() {
                let g = self.levels[i].gens[gi];
                self.try_edge(i, k, g)?;
            }
            k += 1;
        }
        Ok(())
    }

    fn try_edge(&mut self, i: usize, k: usize, g: usize) -> Result<()> {
        let stride = self.stride;
        let x = self.levels[i].orbit.points[k];
        let y = self.strong[g].act(x);
        if self.levels[i].orbit.index.get(y).is_some() {
            return Ok(());
        }
        let cap = self.cap;
        let lvl = &mut self.levels[i];
        let n = lvl.orbit.points.len();
        if n >= cap {
            return Err(Error::ResourceLimit { cap: "orbit", limit: cap as u64 });
        }
        lvl.orbit.index.insert(y, n as u32);
        lvl.orbit.points.push(y);
        lvl.orbit.parent.push(k as u32);
        lvl.orbit.label.push(g as u32);
        let uf = self.one.unpack(&lvl.fwd[k * stride..(k + 1) * stride]);
        let ui = self.one.unpack(&lvl.inv[k * stride..(k + 1) * stride]);
        self.strong[g].mul(&uf).pack(&mut lvl.fwd);
        ui.mul(&self.strong_inv[g]).pack(&mut lvl.inv);
        Ok(())
    }

    #[inline]
    fn fwd(&self, i: usize, k: usize) -> E {
        let s = self.stride;
        self.one.unpack(&self.levels[i].fwd[k * s..(k + 1) * s])
    }

    #[inline]
    fn inv_t(&self, i: usize, k: usize) -> E {
        let s = self.stride;
        self.one.unpack(&self.levels[i].inv[k * s..(k + 1) * s])
    }

    /// Strips `g` through levels `start..`; returns the residue and the
    /// level it dropped out at (`depth()` if it passed every level).
    pub fn sift_from(&self, mut g: E, start: usize) -> (E, usize) {
        for i in start..self.levels.len() {
            let l = &self.levels[i];
            match l.orbit.index.get(g.act(l.base)) {
                None => return (g, i),
                Some(k) => g = self.inv_t(i, k as usize).mul(&g),
            }
        }
        (g, self.levels.len())
    }

    fn fwd_word(&mut self, i: usize, k: usize) -> u32 {
        let w = self.levels[i].orbit.word(k);
        let mut node = self.slp.one();
        for &s in w.iter().rev() {
            node = self.slp.mul(self.strong_node[s], node);
        }
        node
    }

    fn sift_word(&mut self, mut g: E, mut node: u32, start: usize) -> (E, u32, usize) {
        for i in start..self.levels.len() {
            let b = self.levels[i].base;
            match self.levels[i].orbit.index.get(g.act(b)) {
                None => return (g, node, i),
                Some(k) => {
                    g = self.inv_t(i, k as usize).mul(&g);
                    let f = self.fwd_word(i, k as usize);
                    let fi = self.slp.inv(f);
                    node = self.slp.mul(fi, node);
                }
            }
        }
        let l = self.levels.len();
        (g, node, l)
    }

    /// Generators used for the Schreier generators of level `i`: the original
    /// generators at the top, the strong generators S_i below it.
    fn verification_gen(&self, i: usize, j: usize) -> Option<(E, u32, Option<usize>)> {
        if i == 0 {
            let g = self.gens.get(j)?;
            Some((g.clone(), j as u32, self.gen_strong[j]))
        } else {
            let s = *self.levels[i].gens.get(j)?;
            Some((self.strong[s].clone(), self.strong_node[s], Some(s)))
        }
    }

    fn check_level(&mut self, i: usize) -> Option<(E, u32, usize)> {
        if i == 0 && self.levels[0].checked.len() < self.gens.len() {
            self.levels[0].checked.resize(self.gens.len(), 0);
        }
        let mut j = 0;
        while let Some((x, xnode, xs)) = self.verification_gen(i, j) {
            if x.is_one() {
                j += 1;
                continue;
            }
            let mut k = self.levels[i].checked[j];
            while k < self.levels[i].orbit.len() {
                let l = &self.levels[i];
                let y = x.act(l.orbit.points[k]);
                let ky = l.orbit.index.get(y).expect("orbit closed") as usize;
                k += 1;
                if let Some(s) = xs {
                    if l.orbit.parent[ky] as usize == k - 1 && l.orbit.label[ky] as usize == s {
                        continue;
                    }
                }
                let h = self.inv_t(i, ky).mul(&x).mul(&self.fwd(i, k - 1));
                let (res, _) = self.sift_from(h.clone(), i + 1);
                if res.is_one() {
                    continue;
                }
                self.levels[i].checked[j] = k;
                let wy = self.fwd_word(i, ky);
                let wyi = self.slp.inv(wy);
                let wx = self.fwd_word(i, k - 1);
                let t = self.slp.mul(wyi, xnode);
                let hn = self.slp.mul(t, wx);
                let (res, node, lvl) = self.sift_word(h, hn, i + 1);
                return Some((res, node, lvl));
            }
            self.levels[i].checked[j] = k;
            j += 1;
        }
        None
    }

    fn verify(&mut self) -> Result<()> {
        let mut i = self.levels.len();
        while i > 0 {
            match self.check_level(i - 1) {
                None => i -= 1,
                Some((res, node, lvl)) => {
                    self.add_strong(res, node, lvl)?;
                    i = lvl + 1;
                }
            }
        }
        self.verified = true;
        Ok(())
    }

    fn finish(&mut self) {
        let (slp, nodes) = self.slp.compact(&self.strong_node);
        self.slp = slp;
        self.strong_node = nodes;
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn base(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn level_orbit(&self, i: usize) -> &Orbit {
        &self.levels[i].orbit
    }

    /// Strong generator indices of S_i.
    pub fn level_gens(&self, i: usize) -> &[usize] {
        &self.levels[i].gens
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn strong_generators(&self) -> &[E] {
        &self.strong
    }

    pub fn strong_level(&self, s: usize) -> usize {
        self.strong_level[s]
    }

    pub fn slp(&self) -> (&Slp, &[u32]) {
        (&self.slp, &self.strong_node)
    }

    /// Evaluates every strong generator's word in another avatar of the
    /// original generators.
    pub fn strong_images<T: Clone>(
        &self,
        gen: impl Fn(usize) -> T,
        one: impl Fn() -> T,
        mul: impl Fn(&T, &T) -> T,
        inv: impl Fn(&T) -> T,
    ) -> Vec<T> {
        self.slp.evaluate(&self.strong_node, gen, one, mul, inv)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.sift_from(x.clone(), 0).0.is_one()
    }

    /// Sifting residue (identity iff `x` is a member).
    pub fn sift(&self, x: &E) -> E {
        self.sift_from(x.clone(), 0).0
    }

    /// Sift of a member as a word in strong generators: `x = s_{w[0]}⋯s_{w[m]}`.
    pub fn factor(&self, x: &E) -> Option<Vec<usize>> {
        self.factor_from(x, 0)
    }

    /// As `factor`, for an element of the stabilizer G_start.
    pub fn factor_from(&self, x: &E, start: usize) -> Option<Vec<usize>> {
        let mut g = x.clone();
        let mut word = Vec::new();
        for i in start..self.levels.len() {
            let l = &self.levels[i];
            let k = l.orbit.index.get(g.act(l.base))? as usize;
            g = self.inv_t(i, k).mul(&g);
            word.extend(l.orbit.word(k));
        }
        g.is_one().then_some(word)
    }

    /// Random element from the chain: a uniformly chosen transversal product.
    pub fn random_element(&self, rng: &mut impl Rng) -> E {
        let mut g = self.one.clone();
        for i in (0..self.levels.len()).rev() {
            let k = rng.gen_range(0..self.levels[i].orbit.len());
            g = self.fwd(i, k).mul(&g);
        }
        g
    }

    pub fn to_data(&self) -> ChainData {
        ChainData {
            base: self.base(),
            strong_packed: self
                .strong
                .iter()
                .map(|s| {
                    let mut b = Vec::new();
                    s.pack(&mut b);
                    b
                })
                .collect(),
            strong_level: self.strong_level.clone(),
            slp: self.slp.clone(),
            strong_node: self.strong_node.clone(),
            gen_strong: self.gen_strong.clone(),
        }
    }

    /// Rebuilds a chain from stored data, replaying the generator insertions
    /// and checking every stored word against the generators.
    pub fn from_data(gens: &[E], data: &ChainData, cap: usize) -> Result<Self> {
        let bad = |m: &str| Error::Integrity(format!("stored chain: {m}"));
        let n = data.strong_packed.len();
        if data.strong_level.len() != n || data.strong_node.len() != n || data.gen_strong.len() != gens.len() {
            return Err(bad("length mismatch"));
        }
        if !data.slp.validate() || data.strong_node.iter().any(|&t| t as usize >= data.slp.len()) {
            return Err(bad("malformed word program"));
        }
        let mut c = Self::empty(gens, cap)?;
        let strong: Vec<E> = data
            .strong_packed
            .iter()
            .map(|b| {
                if b.len() != c.stride {
                    return Err(bad("packed size"));
                }
                Ok(c.one.unpack(b))
            })
            .collect::<Result<_>>()?;
        let evald = data.slp.evaluate(
            &data.strong_node,
            |i| gens[i].clone(),
            || c.one.clone(),
            |a, b| a.mul(b),
            |a| a.inv(),
        );
        if evald != strong {
            return Err(bad("word does not reproduce strong generator"));
        }
        for (j, s) in data.gen_strong.iter().enumerate() {
            if let Some(s) = *s {
                if s >= n || strong[s] != gens[j] {
                    return Err(bad("generator map"));
                }
            }
        }
        c.slp = data.slp.clone();
        for (s, g) in strong.into_iter().enumerate() {
            let lvl = data.strong_level[s];
            if lvl > c.levels.len() {
                return Err(bad("level gap"));
            }
            c.add_strong(g, data.strong_node[s], lvl)?;
        }
        c.gen_strong = data.gen_strong.clone();
        if c.base() != data.base {
            return Err(bad("base mismatch"));
        }
        for i in 0..c.levels.len() {
            c.levels[i].checked = vec![usize::MAX; c.levels[i].checked.len().max(if i == 0 { gens.len() } else { 0 })];
        }
        c.verified = true;
        Ok(c)
    }
}
