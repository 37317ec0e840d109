//! A generated group with an optional verified stabilizer chain.

use num_bigint::BigUint;

use super::chain::{orbit, ChainData, ChainOptions, Orbit, StabChain, ORBIT_CAP};
use super::elem::Element;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GroupHandle<E: Element> {
    gens: Vec<E>,
    chain: Option<StabChain<E>>,
}

impl<E: Element> GroupHandle<E> {
    pub fn new(gens: Vec<E>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Domain("a group needs at least one generator".into()))?;
        if gens.iter().any(|g| g.packed_len() != first.packed_len()) {
            return Err(Error::Dimension("generators of different shapes".into()));
        }
        if first.domain_size().is_none() {
            return Err(Error::Domain("action domain does not fit 64-bit point codes".into()));
        }
        Ok(GroupHandle { gens, chain: None })
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn identity(&self) -> E {
        self.gens[0].one()
    }

    pub fn orbit(&self, point: u64) -> Result<Orbit> {
        orbit(&self.gens, point, ORBIT_CAP)
    }

    pub fn build_chain(&mut self, opts: &ChainOptions) -> Result<&StabChain<E>> {
        let c = StabChain::build(&self.gens, opts)?;
        self.chain = Some(c);
        Ok(self.chain.as_ref().unwrap())
    }

    pub fn with_chain(mut self, opts: &ChainOptions) -> Result<Self> {
        self.build_chain(opts)?;
        Ok(self)
    }

    pub fn load_chain(&mut self, data: &ChainData) -> Result<&StabChain<E>> {
        let c = StabChain::from_data(&self.gens, data, ORBIT_CAP)?;
        self.chain = Some(c);
        Ok(self.chain.as_ref().unwrap())
    }

    pub fn chain(&self) -> Result<&StabChain<E>> {
        match &self.chain {
            Some(c) if c.is_verified() => Ok(c),
            _ => Err(Error::UnverifiedChain),
        }
    }

    pub fn order(&self) -> Result<BigUint> {
        Ok(self.chain()?.order())
    }

    pub fn contains(&self, x: &E) -> Result<bool> {
        let c = self.chain()?;
        if x.packed_len() != self.gens[0].packed_len() {
            return Err(Error::Dimension("element shape differs from generators".into()));
        }
        Ok(c.contains(x))
    }

    /// Evaluates a word of signed generator indices (+i for gᵢ, −i for gᵢ⁻¹, 1-based).
    pub fn eval_word(&self, word: &[i32]) -> E {
        word.iter().fold(self.identity(), |acc, &l| {
            let g = &self.gens[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc.mul(g)
            } else {
                acc.mul(&g.inv())
            }
        })
    }
}
