//! Straight-line programs over a fixed list of generators.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlpNode {
    One,
    Gen(u32),
    Inv(u32),
    /// Product of two earlier nodes, left factor first in the composition.
    Mul(u32, u32),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slp {
    nodes: Vec<SlpNode>,
}

impl Slp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SlpNode] {
        &self.nodes
    }

    fn push(&mut self, n: SlpNode) -> u32 {
        self.nodes.push(n);
        (self.nodes.len() - 1) as u32
    }

    pub fn one(&mut self) -> u32 {
        self.push(SlpNode::One)
    }

    pub fn gen(&mut self, i: usize) -> u32 {
        self.push(SlpNode::Gen(i as u32))
    }

    pub fn inv(&mut self, a: u32) -> u32 {
        self.push(SlpNode::Inv(a))
    }

    pub fn mul(&mut self, a: u32, b: u32) -> u32 {
        self.push(SlpNode::Mul(a, b))
    }

    /// Values of the requested nodes, evaluating only what they depend on.
    pub fn evaluate<T: Clone>(
        &self,
        targets: &[u32],
        gen: impl Fn(usize) -> T,
        one: impl Fn() -> T,
        mul: impl Fn(&T, &T) -> T,
        inv: impl Fn(&T) -> T,
    ) -> Vec<T> {
        let needed = self.reachable(targets);
        let mut vals: Vec<Option<T>> = vec![None; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if !needed[i] {
                continue;
            }
            let v = match *node {
                SlpNode::One => one(),
                SlpNode::Gen(g) => gen(g as usize),
                SlpNode::Inv(a) => inv(vals[a as usize].as_ref().unwrap()),
                SlpNode::Mul(a, b) => {
                    mul(vals[a as usize].as_ref().unwrap(), vals[b as usize].as_ref().unwrap())
                }
            };
            vals[i] = Some(v);
        }
        targets.iter().map(|&t| vals[t as usize].clone().unwrap()).collect()
    }

    fn reachable(&self, targets: &[u32]) -> Vec<bool> {
        let mut needed = vec![false; self.nodes.len()];
        for &t in targets {
            needed[t as usize] = true;
        }
        for i in (0..self.nodes.len()).rev() {
            if !needed[i] {
                continue;
            }
            match self.nodes[i] {
                SlpNode::Inv(a) => needed[a as usize] = true,
                SlpNode::Mul(a, b) => {
                    needed[a as usize] = true;
                    needed[b as usize] = true;
                }
                _ => {}
            }
        }
        needed
    }

    /// Drops nodes the targets do not depend on; returns the remapped targets.
    pub fn compact(&self, targets: &[u32]) -> (Slp, Vec<u32>) {
        let needed = self.reachable(targets);
        let mut map = vec![u32::MAX; self.nodes.len()];
        let mut out = Slp::new();
        for (i, node) in self.nodes.iter().enumerate() {
            if !needed[i] {
                continue;
            }
            let n = match *node {
                SlpNode::Inv(a) => SlpNode::Inv(map[a as usize]),
                SlpNode::Mul(a, b) => SlpNode::Mul(map[a as usize], map[b as usize]),
                other => other,
            };
            map[i] = out.push(n);
        }
        let t = targets.iter().map(|&t| map[t as usize]).collect();
        (out, t)
    }

    pub fn validate(&self) -> bool {
        self.nodes.iter().enumerate().all(|(i, n)| match *n {
            SlpNode::Inv(a) => (a as usize) < i,
            SlpNode::Mul(a, b) => (a as usize) < i && (b as usize) < i,
            _ => true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_words_in_integers_mod_seven() {
        // additive group ℤ/7 with generators 2 and 3
        let mut s = Slp::new();
        let a = s.gen(0);
        let b = s.gen(1);
        let ab = s.mul(a, b);
        let junk = s.mul(ab, ab);
        let inv = s.inv(ab);
        let vals = s.evaluate(&[ab, inv], |i| [2i64, 3][i], || 0, |x, y| (x + y) % 7, |x| (7 - x) % 7);
        assert_eq!(vals, vec![5, 2]);
        let (c, t) = s.compact(&[inv]);
        assert_eq!(c.len(), 4);
        assert!(c.validate());
        let _ = junk;
        let v = c.evaluate(&t, |i| [2i64, 3][i], || 0, |x, y| (x + y) % 7, |x| (7 - x) % 7);
        assert_eq!(v, vec![2]);
    }
}
