//! Finite presentations on named generators, and presentations read off a
//! verified stabilizer chain.

use std::fmt::Write as _;

use super::chain::StabChain;
use super::elem::Element;
use crate::error::{Error, Result};

/// Letters are signed 1-based generator indices: `i` is gᵢ, `−i` is gᵢ⁻¹.
pub type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<String>,
    pub relators: Vec<Word>,
}

pub fn invert_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

impl Presentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = gens.len() as i32;
        if relators.iter().flatten().any(|&l| l == 0 || l.abs() > n) {
            return Err(Error::Parse("relator letter out of range".into()));
        }
        Ok(Presentation { gens, relators })
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Evaluates every relator in the given images.
    pub fn holds_in<E: Element>(&self, images: &[E]) -> bool {
        if images.len() != self.gens.len() {
            return false;
        }
        let inv: Vec<E> = images.iter().map(|g| g.inv()).collect();
        self.relators.iter().all(|r| {
            let mut acc = images[0].one();
            for &l in r {
                let k = l.unsigned_abs() as usize - 1;
                acc = acc.mul(if l > 0 { &images[k] } else { &inv[k] });
            }
            acc.is_one()
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.gens.join(" "));
        for r in &self.relators {
            let letters: Vec<String> = r
                .iter()
                .map(|&l| {
                    let g = &self.gens[l.unsigned_abs() as usize - 1];
                    if l > 0 {
                        g.clone()
                    } else {
                        format!("{g}'")
                    }
                })
                .collect();
            let _ = writeln!(s, "rel: {}", letters.join(" "));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if gens.is_some() {
                    return Err(Error::Parse("duplicate gens line".into()));
                }
                gens = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let g = gens.as_ref().ok_or_else(|| Error::Parse("rel before gens".into()))?;
                let mut w = Vec::new();
                for tok in rest.split_whitespace() {
                    let (name, sign) = match tok.strip_suffix('\'') {
                        Some(n) => (n, -1),
                        None => (tok, 1),
                    };
                    let k = g
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
                    w.push(sign * (k as i32 + 1));
                }
                relators.push(w);
            } else {
                return Err(Error::Parse(format!("unrecognized line `{line}`")));
            }
        }
        Presentation::new(gens.unwrap_or_default(), relators)
    }
}

/// Presentation on the strong generators sᵢ: for every level, orbit point γ
/// and s ∈ S_level, the relator u_{sγ}⁻¹·s·u_γ·w⁻¹ where w is the sift word
/// of the left side through the lower levels.
pub fn presentation_from_chain<E: Element>(chain: &StabChain<E>) -> Result<Presentation> {
    if !chain.is_verified() {
        return Err(Error::UnverifiedChain);
    }
    let strong = chain.strong_generators();
    let gens: Vec<String> = (1..=strong.len()).map(|i| format!("s{i}")).collect();
    let to_word = |w: &[usize]| -> Word { w.iter().map(|&s| s as i32 + 1).collect() };
    let mut relators = Vec::new();
    for lvl in 0..chain.depth() {
        let orbit = chain.level_orbit(lvl);
        for k in 0..orbit.len() {
            let uk = orbit.word(k);
            let u = strong[0].one();
            let ug = uk.iter().rev().fold(u, |acc, &s| strong[s].mul(&acc));
            for &s in chain.level_gens(lvl) {
                let y = strong[s].act(orbit.points[k]);
                let ky = orbit.position(y).expect("orbit closed");
                if orbit.parent[ky] as usize == k && orbit.label[ky] as usize == s {
                    continue;
                }
                let uy = orbit.word(ky);
                let uyg = uy.iter().rev().fold(strong[0].one(), |acc, &t| strong[t].mul(&acc));
                let h = uyg.inv().mul(&strong[s]).mul(&ug);
                let w = chain
                    .factor_from(&h, lvl + 1)
                    .ok_or_else(|| Error::Integrity("Schreier generator outside the chain".into()))?;
                let mut rel = invert_word(&to_word(&uy));
                rel.push(s as i32 + 1);
                rel.extend(to_word(&uk));
                rel.extend(invert_word(&to_word(&w)));
                let rel = cyclic_reduce(&rel);
                if !rel.is_empty() && !relators.contains(&rel) {
                    relators.push(rel);
                }
            }
        }
    }
    Presentation::new(gens, relators)
}
