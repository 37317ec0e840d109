use fpf5::arith::CoeffRing;
use fpf5::cohomology::{derivation_space, ext1_dim, h1, CertifiedPresentation};
use fpf5::constructions::constants::{alt5_perms, dih10_perms};
use fpf5::group::{coset_action, ChainOptions, Perm, StabChain, SMALL_CAP};
use fpf5::modrep::Representation;
use rand::SeedableRng;

fn certified(perms: &[Perm], seed: u64) -> CertifiedPresentation {
    let chain = StabChain::build(perms, &ChainOptions::seeded(seed)).unwrap();
    CertifiedPresentation::from_chain(&chain).unwrap()
}

#[test]
fn shapiro_for_the_dihedral_coset_module() {
    let f = CoeffRing::prime_field(3).unwrap();
    let g = certified(&alt5_perms(), 5);
    let act = coset_action(&alt5_perms(), &dih10_perms(), &Perm::identity(5), SMALL_CAP).unwrap();
    let induced = g.on_strong_generators(&Representation::permutation_module(f, &act).unwrap()).unwrap();
    let d = certified(&dih10_perms(), 5);
    let trivial = d.on_strong_generators(&Representation::trivial(f, 2)).unwrap();
    let lhs = h1(&g.presentation, &induced).unwrap();
    let rhs = h1(&d.presentation, &trivial).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(rhs, 0);
}

#[test]
fn shapiro_for_the_point_stabiliser_over_gf5() {
    let f = CoeffRing::prime_field(5).unwrap();
    let alt4 = vec![Perm::from_cycles(5, "(1,2,3)").unwrap(), Perm::from_cycles(5, "(1,2)(3,4)").unwrap()];
    let g = certified(&alt5_perms(), 8);
    let act = coset_action(&alt5_perms(), &alt4, &Perm::identity(5), SMALL_CAP).unwrap();
    let induced = g.on_strong_generators(&Representation::permutation_module(f, &act).unwrap()).unwrap();
    let h = certified(&alt4, 8);
    let trivial = h.on_strong_generators(&Representation::trivial(f, 2)).unwrap();
    assert_eq!(h1(&g.presentation, &induced).unwrap(), h1(&h.presentation, &trivial).unwrap());
}

#[test]
fn cocycles_satisfy_relator_consequences() {
    let f = CoeffRing::prime_field(3).unwrap();
    let g = certified(&alt5_perms(), 11);
    let v = g.on_strong_generators(&Representation::deleted_permutation_module(f, &alt5_perms()).unwrap()).unwrap();
    let ds = derivation_space(&g.presentation, &v).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    assert_eq!(ds.check_consequences(&mut rng, 100), 100);
}

#[test]
fn ext1_needs_a_presentation() {
    let f = CoeffRing::prime_field(3).unwrap();
    let v = Representation::deleted_permutation_module(f, &alt5_perms()).unwrap();
    assert!(ext1_dim(None, &v, &v).is_err());
}
