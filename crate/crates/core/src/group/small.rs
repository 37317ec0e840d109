//! Brute-force tools for small groups given by generators.

use std::collections::HashMap;

use super::elem::Element;
use super::perm::Perm;
use crate::error::{Error, Result};

pub const SMALL_CAP: usize = 100_000;

/// All elements of ⟨gens⟩, identity first, in BFS order.
pub fn enumerate_small<E: Element>(gens: &[E], one: &E, cap: usize) -> Result<Vec<E>> {
    let mut seen: HashMap<E, usize> = HashMap::new();
    let mut out = vec![one.clone()];
    seen.insert(one.clone(), 0);
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let y = out[k].mul(g);
            if !seen.contains_key(&y) {
                if out.len() >= cap {
                    return Err(Error::ResourceLimit { cap: "small group", limit: cap as u64 });
                }
                seen.insert(y.clone(), out.len());
                out.push(y);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Normal closure of ⟨sub⟩ under conjugation by `gens`.
pub fn normal_closure_small<E: Element>(gens: &[E], sub: &[E], one: &E, cap: usize) -> Result<Vec<E>> {
    let mut sgens: Vec<E> = sub.to_vec();
    loop {
        let elems = enumerate_small(&sgens, one, cap)?;
        let set: std::collections::HashSet<&E> = elems.iter().collect();
        let mut extra = None;
        'search: for s in &sgens {
            for g in gens {
                let c = g.inv().mul(s).mul(g);
                if !set.contains(&c) {
                    extra = Some(c);
                    break 'search;
                }
            }
        }
        match extra {
            Some(c) => sgens.push(c),
            None => return Ok(elems),
        }
    }
}

pub fn commutator<E: Element>(x: &E, y: &E) -> E {
    x.inv().mul(&y.inv()).mul(x).mul(y)
}

pub fn derived_subgroup_small<E: Element>(gens: &[E], one: &E, cap: usize) -> Result<Vec<E>> {
    let comms: Vec<E> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, x)| gens[i + 1..].iter().map(move |y| commutator(x, y)))
        .filter(|c| !c.is_one())
        .collect();
    normal_closure_small(gens, &comms, one, cap)
}

pub fn is_perfect_small<E: Element>(gens: &[E], one: &E, cap: usize) -> Result<bool> {
    let g = enumerate_small(gens, one, cap)?;
    Ok(derived_subgroup_small(gens, one, cap)?.len() == g.len())
}

/// Action of each generator on the left cosets xH of `sub` in ⟨gens⟩.
/// Coset 0 is H itself.
pub fn coset_action<E: Element>(gens: &[E], sub: &[E], one: &E, cap: usize) -> Result<Vec<Perm>> {
    let elems = enumerate_small(gens, one, cap)?;
    let h = enumerate_small(sub, one, cap)?;
    if elems.len() % h.len() != 0 {
        return Err(Error::Closure("subgroup order does not divide group order".into()));
    }
    let mut coset_of: HashMap<E, u32> = HashMap::new();
    let mut reps: Vec<E> = Vec::new();
    for x in &elems {
        if coset_of.contains_key(x) {
            continue;
        }
        let id = reps.len() as u32;
        for y in &h {
            if coset_of.insert(x.mul(y), id).is_some() {
                return Err(Error::Closure("subgroup is not contained in the group".into()));
            }
        }
        reps.push(x.clone());
    }
    gens.iter()
        .map(|g| {
            let images = reps.iter().map(|x| coset_of[&g.mul(x)]).collect();
            Perm::from_images(images)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alt5() -> Vec<Perm> {
        vec![Perm::from_cycles(5, "(1,2,3)").unwrap(), Perm::from_cycles(5, "(1,2,3,4,5)").unwrap()]
    }

    #[test]
    fn alt5_is_perfect_sym4_is_not() {
        let one = Perm::identity(5);
        assert_eq!(enumerate_small(&alt5(), &one, SMALL_CAP).unwrap().len(), 60);
        assert!(is_perfect_small(&alt5(), &one, SMALL_CAP).unwrap());
        let s4 = vec![Perm::from_cycles(4, "(1,2)").unwrap(), Perm::from_cycles(4, "(1,2,3,4)").unwrap()];
        let one4 = Perm::identity(4);
        assert_eq!(derived_subgroup_small(&s4, &one4, SMALL_CAP).unwrap().len(), 12);
        assert!(!is_perfect_small(&s4, &one4, SMALL_CAP).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let one = Perm::identity(5);
        assert!(matches!(enumerate_small(&alt5(), &one, 10), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn coset_action_of_alt5_on_dihedral_cosets() {
        let one = Perm::identity(5);
        let d10 = vec![Perm::from_cycles(5, "(1,2,3,4,5)").unwrap(), Perm::from_cycles(5, "(2,5)(3,4)").unwrap()];
        let act = coset_action(&alt5(), &d10, &one, SMALL_CAP).unwrap();
        assert!(act.iter().all(|p| p.degree() == 6));
        let img = enumerate_small(&act, &Perm::identity(6), SMALL_CAP).unwrap();
        assert_eq!(img.len(), 60);
        // the 5-cycle lies in H, so it fixes coset 0
        assert_eq!(act[1].image(0), 0);
    }
}
