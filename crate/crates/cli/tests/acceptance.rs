//! Acceptance suite: one test per criterion, run against the library and,
//! for determinism, the `verify` binary.

use std::process::Command;
use std::time::{Duration, Instant};

use fpf5::arith::CoeffRing;
use fpf5::cohomology::{ext1_dim, h1, CertifiedPresentation};
use fpf5::constructions::alt6::{lemma45, lemma46};
use fpf5::constructions::constants::{alt5_perms, dih10_perms, gamma, klein_s_perms, sym5_perms, v_module};
use fpf5::constructions::hall_witt::{hall_witt_paths, hall_witt_sweep};
use fpf5::constructions::psl49::{lemma41, lemma43, psl2_49_chain};
use fpf5::constructions::thm24::FIVE_CYCLE_GEN;
use fpf5::constructions::{build_thm24, class_certificate, self_centralising_check, theta_submodule_check};
use fpf5::group::{coset_action, ChainOptions, Perm, StabChain, SMALL_CAP};
use fpf5::modrep::sl2::{decompose_tensor_check, eigenvalue_profile, sl2_generators, sym_power, sym_power_basic, twisted_natural_tensor, PHI};
use fpf5::modrep::{submodule_lattice_small, Representation};
use fpf5_cli::VerificationReport;
use num_bigint::BigUint;

const SEED: u64 = 42;

fn within(start: Instant, limit: Duration, what: &str) {
    let t = start.elapsed();
    assert!(t < limit, "{what} took {t:?}, limit {limit:?}");
}

#[test]
fn c01_wedge_square_fixed_points_and_homs() {
    let t0 = Instant::now();
    for r in [3u32, 7, 11, 13] {
        let v = v_module(r, &alt5_perms()).unwrap();
        let u = v.wedge2();
        let vs = v_module(r, &klein_s_perms()).unwrap();
        let us = vs.wedge2();
        assert_eq!(us.fixed_points(us.images()).unwrap().len(), 0, "r={r}");
        assert_eq!(vs.fixed_points(vs.images()).unwrap().len(), 1, "r={r}");
        assert_eq!(u.hom_space(&v).unwrap().len(), 0, "r={r}");
        assert_eq!(v.hom_space(&u).unwrap().len(), 0, "r={r}");
    }
    within(t0, Duration::from_secs(1), "criterion 1");
}

#[test]
fn c02_theta_orbit_spans_a_copy_of_v() {
    let t0 = Instant::now();
    for r in [3u32, 7, 11] {
        let t = theta_submodule_check(r).unwrap();
        assert_eq!(t.orbit_size, 5, "r={r}");
        assert_eq!(t.span_dim, 4, "r={r}");
        assert!(t.iso_to_v, "r={r}");
        assert!(t.translate_sum_zero, "r={r}");
        assert!(t.stabilizer_fixes, "r={r}");
    }
    within(t0, Duration::from_secs(1), "criterion 2");
}

#[test]
fn c03_gamma_spans_equivariant_products() {
    let t0 = Instant::now();
    for r in [3u32, 7, 11, 13] {
        let v = v_module(r, &sym5_perms()).unwrap();
        let vv = v.tensor(&v).unwrap();
        assert_eq!(vv.hom_space(&v).unwrap().len(), 1, "r={r}");
        let g = gamma(v.ring());
        assert!(!g.is_zero() && vv.is_equivariant(&v, &g), "r={r}");
    }
    within(t0, Duration::from_secs(1), "criterion 3");
}

#[test]
fn c04_alt5_mod3_cohomology_and_induced_module() {
    let t0 = Instant::now();
    let f = CoeffRing::prime_field(3).unwrap();
    let chain = StabChain::build(&alt5_perms(), &ChainOptions::seeded(SEED)).unwrap();
    let cp = CertifiedPresentation::from_chain(&chain).unwrap();
    let v = cp
        .on_strong_generators(&Representation::deleted_permutation_module(f, &alt5_perms()).unwrap())
        .unwrap();
    assert_eq!(ext1_dim(Some(&cp), &v, &v).unwrap(), 0);
    assert_eq!(h1(&cp.presentation, &v).unwrap(), 1);
    let act = coset_action(&alt5_perms(), &dih10_perms(), &Perm::identity(5), SMALL_CAP).unwrap();
    assert_eq!(act[0].degree(), 6);
    let lattice = submodule_lattice_small(&Representation::permutation_module(f, &act).unwrap()).unwrap();
    assert!(lattice.is_uniserial());
    assert_eq!(lattice.layers(), Some(vec![1, 4, 1]));
    within(t0, Duration::from_secs(30), "criterion 4");
}

#[test]
fn c05_class_two_group_with_self_centralising_five_element() {
    for r in [3u32, 7, 11] {
        let t0 = Instant::now();
        let k = build_thm24(r).unwrap();
        let o = k.orders(SEED).unwrap();
        assert_eq!(o.or_k, BigUint::from(r).pow(12), "r={r}");
        let cert = class_certificate(&k.or_k_generators(), &k.k_gens, |m| k.in_or_k(m)).unwrap();
        assert!(cert.commutators_central, "r={r}");
        assert!(cert.witness.is_some(), "r={r}");
        assert_eq!(cert.class(), Some(2), "r={r}");
        assert!(self_centralising_check(&k, &k.k_gens[FIVE_CYCLE_GEN]).unwrap(), "r={r}");
        within(t0, Duration::from_secs(30), "criterion 5");
    }
}

#[test]
fn c06_hall_witt_defects() {
    let t0 = Instant::now();
    let [p1, _, _] = hall_witt_paths(1, 1, 2);
    let [_, _, p3] = hall_witt_paths(2, 1, 1);
    assert_eq!(p1, [5, -5, 5, 5]);
    assert_eq!(p3, [0, 5, 5, 5]);
    let five = hall_witt_sweep(5).unwrap();
    assert_eq!(five.zero_defects, five.cases);
    for r in [3u32, 7, 11, 13] {
        let s = hall_witt_sweep(r).unwrap();
        assert_eq!(s.zero_at_112, 0, "r={r}");
        assert_eq!(s.zero_defects, 0, "r={r}: a vanishing defect at {:?}", s.first_zero);
    }
    within(t0, Duration::from_secs(10), "criterion 6");
}

#[test]
fn c07_centralizer_and_overgroup_orders_mod_49() {
    let t0 = Instant::now();
    let l = lemma41(SEED, None).unwrap();
    assert_eq!(l.centralizer_order, BigUint::from(5_762_400u32));
    assert_eq!(l.five_torsion, 25);
    assert_eq!(l.t_order, 25);
    let seven8 = BigUint::from(7u32).pow(8);
    assert_eq!(l.group_order, BigUint::from(16u32 * 3 * 25) * &seven8);
    assert!(!l.divides_psl);
    assert_ne!(BigUint::from(58_800u32) % &seven8, BigUint::ZERO);
    within(t0, Duration::from_secs(600), "criterion 7");
}

#[test]
fn c08_sl2_49_basic_modules_and_twisted_tensor() {
    let t0 = Instant::now();
    for j in 0..=6 {
        assert_eq!(sym_power_basic(j).unwrap().dim(), j + 1);
    }
    let phi = &sl2_generators()[PHI];
    for j in 3..=6 {
        assert!(eigenvalue_profile(&sym_power(phi, j), phi).unwrap().has_all_nontrivial(), "j={j}");
    }
    assert!(eigenvalue_profile(&sym_power(phi, 4), phi).unwrap().has_one());
    let v = twisted_natural_tensor();
    assert!(v.fpf_check(v.image(PHI)).unwrap());
    let t = decompose_tensor_check().unwrap();
    assert_eq!(t.hom_to_v, 0);
    assert_eq!(t.hom_from_v, 0);
    assert_eq!(t.multiplicities, [1, 1, 1, 1]);
    within(t0, Duration::from_secs(30), "criterion 8");
}

#[test]
fn c09_descended_module_has_no_self_extension() {
    let t0 = Instant::now();
    let chain = psl2_49_chain(SEED, None).unwrap();
    let l = lemma43(&chain).unwrap();
    assert_eq!(l.descended.dim(), 4);
    assert_eq!(l.descended.ring(), CoeffRing::prime_field(7).unwrap());
    assert!(l.descent_certified);
    assert_eq!(l.cosets, BigUint::from(58_800u32));
    assert_eq!(l.ext1, 0);
    within(t0, Duration::from_secs(900), "criterion 9");
}

#[test]
fn c10_no_alt6_overgroup_mod_9() {
    let t0 = Instant::now();
    let l = lemma45(SEED).unwrap();
    assert_eq!(l.normalizer_order, 7776);
    assert_eq!(l.perfect_360, 0);
    within(t0, Duration::from_secs(900), "criterion 10");
}

#[test]
fn c11_alt6_mod3_module() {
    let t0 = Instant::now();
    let l = lemma46(SEED).unwrap();
    assert_eq!(l.dim, 4);
    assert_eq!(l.ext1, 0);
    assert_eq!(l.hom_vv_v, 0);
    within(t0, Duration::from_secs(300), "criterion 11");
}

fn run_all(dir: &std::path::Path, name: &str) -> VerificationReport {
    let json = dir.join(name);
    let status = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(["all", "--seed", "42", "--json"])
        .arg(&json)
        .arg("--cache")
        .arg(dir.join("cache"))
        .status()
        .unwrap();
    assert!(status.code().is_some());
    serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap()
}

#[test]
fn c12_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = run_all(dir.path(), "a.json");
    let b = run_all(dir.path(), "b.json");
    assert_eq!(a.results.len(), 11);
    assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
}
