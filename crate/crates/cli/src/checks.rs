//! The check registry. Each check recomputes its claim and renders both the
//! computed and the expected value in the same format.

use std::time::Instant;

use fpf5::arith::CoeffRing;
use fpf5::cohomology::{derivation_space, ext1_dim, h1, CertifiedPresentation};
use fpf5::constructions::alt6::{lemma45, lemma46, Lemma45};
use fpf5::constructions::constants::{alt5_perms, dih10_perms, gamma, klein_s_perms, sym5_perms, v_module};
use fpf5::constructions::hall_witt::{hall_witt_paths, hall_witt_sweep};
use fpf5::constructions::psl49::{lemma41, lemma43, psl2_49_chain, PSL2_49_ORDER};
use fpf5::constructions::thm24::FIVE_CYCLE_GEN;
use fpf5::constructions::{build_thm24, class_certificate, self_centralising_check, theta_submodule_check};
use fpf5::group::{coset_action, ChainOptions, Perm, StabChain, SMALL_CAP};
use fpf5::modrep::sl2::{decompose_tensor_check, eigenvalue_profile, sl2_generators, sym_power, twisted_natural_tensor, PHI};
use fpf5::modrep::{submodule_lattice_small, Representation};
use num_bigint::BigUint;

use crate::cache::Cache;
use crate::fmt::{factored, power, yes_no};
use crate::report::{CheckResult, Status, VerificationReport};

pub struct Outcome {
    pub computed: String,
    pub expected: String,
    pub notes: String,
}

impl Outcome {
    fn skip(notes: &str) -> Self {
        Outcome { computed: String::new(), expected: String::new(), notes: notes.into() }
    }
}

pub struct Ctx<'a> {
    pub seed: u64,
    pub primes: &'a [u32],
    pub cache: Option<&'a Cache>,
    skipped: bool,
    lemma45: Option<Lemma45>,
}

impl Ctx<'_> {
    /// The override primes that the check accepts, or its defaults.
    fn primes_or(&self, default: &[u32], accepts: impl Fn(u32) -> bool) -> Vec<u32> {
        if self.primes.is_empty() {
            default.to_vec()
        } else {
            self.primes.iter().copied().filter(|&r| accepts(r)).collect()
        }
    }
}

type CheckFn = fn(&mut Ctx) -> fpf5::Result<Outcome>;

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    run: CheckFn,
}

pub const REGISTRY: &[Check] = &[
    Check { id: "lemma2.1", anchor: "Lemma 2.1", run: lemma2_1 },
    Check { id: "lemma2.2", anchor: "Lemma 2.2", run: lemma2_2 },
    Check { id: "lemma2.3", anchor: "Lemma 2.3", run: lemma2_3 },
    Check { id: "thm2.4", anchor: "Theorem 2.4", run: thm2_4 },
    Check { id: "lemma2.5", anchor: "Lemma 2.5", run: lemma2_5 },
    Check { id: "sec3.hallwitt", anchor: "Section 3", run: sec3_hallwitt },
    Check { id: "lemma4.1", anchor: "Lemma 4.1", run: lemma4_1 },
    Check { id: "lemma4.2", anchor: "Lemma 4.2", run: lemma4_2 },
    Check { id: "lemma4.3", anchor: "Lemma 4.3", run: lemma4_3 },
    Check { id: "lemma4.5", anchor: "Lemma 4.5", run: lemma4_5 },
    Check { id: "lemma4.6", anchor: "Lemma 4.6", run: lemma4_6 },
];

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Per-check seed: the run seed mixed with an FNV-1a hash of the id.
pub fn check_seed(run_seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = run_seed ^ h;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d4_9bb1_3311_eb00);
    z ^ (z >> 31)
}

pub struct RunOptions {
    pub seed: u64,
    pub primes: Vec<u32>,
    pub cache: Option<Cache>,
}

/// Expands "all" and rejects unknown ids; order follows the registry.
pub fn resolve(ids: &[String]) -> Result<Vec<&'static Check>, String> {
    if ids.is_empty() {
        return Err("no checks given".into());
    }
    for id in ids {
        if id != "all" && !REGISTRY.iter().any(|c| c.id == id) {
            return Err(format!("unknown check id '{id}' (known: {})", check_ids().join(", ")));
        }
    }
    let all = ids.iter().any(|i| i == "all");
    Ok(REGISTRY.iter().filter(|c| all || ids.iter().any(|i| i == c.id)).collect())
}

pub fn run(checks: &[&Check], opts: &RunOptions, mut progress: impl FnMut(&CheckResult)) -> VerificationReport {
    let mut lemma45_memo = None;
    let mut results = Vec::new();
    for check in checks {
        let mut ctx = Ctx {
            seed: check_seed(opts.seed, check.id),
            primes: &opts.primes,
            cache: opts.cache.as_ref(),
            skipped: false,
            lemma45: lemma45_memo.take(),
        };
        let t0 = Instant::now();
        let out = (check.run)(&mut ctx);
        let elapsed_ms = t0.elapsed().as_millis() as u64;
        lemma45_memo = ctx.lemma45.take();
        let result = match out {
            Ok(o) => CheckResult {
                check_id: check.id.into(),
                paper_anchor: check.anchor.into(),
                status: if ctx.skipped {
                    Status::Skip
                } else if o.computed == o.expected {
                    Status::Pass
                } else {
                    Status::Fail
                },
                computed: o.computed,
                expected: o.expected,
                elapsed_ms,
                notes: o.notes,
            },
            Err(e) => CheckResult {
                check_id: check.id.into(),
                paper_anchor: check.anchor.into(),
                status: Status::Error,
                computed: e.to_string(),
                expected: String::new(),
                elapsed_ms,
                notes: String::new(),
            },
        };
        progress(&result);
        results.push(result);
    }
    VerificationReport { version: env!("CARGO_PKG_VERSION").into(), seed: opts.seed, results }
}

fn odd_non_five(r: u32) -> bool {
    r > 2 && r != 5
}

fn no_primes(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    ctx.skipped = true;
    Ok(Outcome::skip("no applicable prime among those requested"))
}

fn join_primes(primes: &[u32], part: impl Fn(u32) -> fpf5::Result<(String, String)>) -> fpf5::Result<(String, String)> {
    let mut comp = Vec::new();
    let mut exp = Vec::new();
    for &r in primes {
        let (c, e) = part(r)?;
        if primes.len() == 1 {
            comp.push(c);
            exp.push(e);
        } else {
            comp.push(format!("r={r}: {c}"));
            exp.push(format!("r={r}: {e}"));
        }
    }
    Ok((comp.join("; "), exp.join("; ")))
}

fn lemma2_1(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let primes = ctx.primes_or(&[3, 7, 11, 13], odd_non_five);
    if primes.is_empty() {
        return no_primes(ctx);
    }
    let fmt = |a: usize, b: usize, c: usize, d: usize| {
        format!("dim C_U(S)={a}, dim C_V(S)={b}, dim Hom(U,V)={c}, dim Hom(V,U)={d}")
    };
    let (computed, expected) = join_primes(&primes, |r| {
        let v = v_module(r, &alt5_perms())?;
        let u = v.wedge2();
        let vs = v_module(r, &klein_s_perms())?;
        let us = vs.wedge2();
        let cu = us.fixed_points(us.images())?.len();
        let cv = vs.fixed_points(vs.images())?.len();
        let huv = u.hom_space(&v)?.len();
        let hvu = v.hom_space(&u)?.len();
        Ok((fmt(cu, cv, huv, hvu), fmt(0, 1, 0, 0)))
    })?;
    Ok(Outcome { computed, expected, notes: "U = V∧V, S = ⟨(2,3)(4,5), (2,4)(3,5)⟩, group Alt(5)".into() })
}

fn lemma2_2(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let f = CoeffRing::prime_field(3)?;
    let chain = StabChain::build(&alt5_perms(), &ChainOptions::seeded(ctx.seed))?;
    let cp = CertifiedPresentation::from_chain(&chain)?;
    let v = cp.on_strong_generators(&Representation::deleted_permutation_module(f, &alt5_perms())?)?;
    let ext = ext1_dim(Some(&cp), &v, &v)?;
    let h1v = h1(&cp.presentation, &v)?;
    let one = Perm::identity(5);
    let act = coset_action(&alt5_perms(), &dih10_perms(), &one, SMALL_CAP)?;
    let ind = Representation::permutation_module(f, &act)?;
    let lattice = submodule_lattice_small(&ind)?;
    let layers = lattice.layers().map(|l| l.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
    let fmt = |e: usize, h: usize, l: &str| format!("Ext¹(V,V)={e}, H¹(Alt(5),V)={h}, 1_D↑ layers={l}");
    let computed = fmt(ext, h1v, layers.as_deref().unwrap_or("not uniserial"));
    // H¹(Alt(4), GF(3)) for comparison with the quoted extension dimension.
    let alt4 = vec![Perm::from_cycles(4, "(1,2,3)")?, Perm::from_cycles(4, "(1,2)(3,4)")?];
    let c4 = StabChain::build(&alt4, &ChainOptions::seeded(ctx.seed))?;
    let p4 = CertifiedPresentation::from_chain(&c4)?;
    let h_alt4 = h1(&p4.presentation, &p4.on_strong_generators(&Representation::trivial(f, 2))?)?;
    let ds = derivation_space(&cp.presentation, &cp.on_strong_generators(&ind)?)?;
    Ok(Outcome {
        computed,
        expected: fmt(0, 1, "1,4,1"),
        notes: format!(
            "presentation on {} generators with {} relators, {} cosets; H¹(Alt(4),GF(3))={h_alt4}; H¹(Alt(5),1_D↑)={}",
            cp.ngens(),
            cp.presentation.relators.len(),
            cp.order,
            ds.h1
        ),
    })
}

fn lemma2_3(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let primes = ctx.primes_or(&[3, 7, 11], odd_non_five);
    if primes.is_empty() {
        return no_primes(ctx);
    }
    let (computed, expected) = join_primes(&primes, |r| {
        let t = theta_submodule_check(r)?;
        let mut c = format!("orbit={}, dimU={}, iso={}", t.orbit_size, t.span_dim, yes_no(t.iso_to_v));
        if !t.translate_sum_zero {
            c.push_str(", translate sum≠0");
        }
        if !t.stabilizer_fixes {
            c.push_str(", θ not fixed by Stab(1)");
        }
        Ok((c, "orbit=5, dimU=4, iso=yes".into()))
    })?;
    Ok(Outcome { computed, expected, notes: "θ is fixed by Stab(1) and its translates sum to 0".into() })
}

fn thm2_4(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let primes = ctx.primes_or(&[3, 7, 11], odd_non_five);
    if primes.is_empty() {
        return no_primes(ctx);
    }
    let seed = ctx.seed;
    let fmt = |r: u32, or: &str, idx: &str, class: &str, fpf: bool| {
        let _ = r;
        format!("|O_r(K)|={or}, |K:O_r(K)|={idx}, class={class}, fpf={}", yes_no(fpf))
    };
    let (computed, expected) = join_primes(&primes, |r| {
        let k = build_thm24(r)?;
        let o = k.orders(seed)?;
        let rr = BigUint::from(r);
        let or_str = if o.or_k == rr.pow(12) { power(r, 12) } else { o.or_k.to_string() };
        let idx = (&o.k / &o.or_k).to_string();
        let cert = class_certificate(&k.or_k_generators(), &k.k_gens, |m| k.in_or_k(m))?;
        let class = cert.class().map(|c| c.to_string()).unwrap_or_else(|| ">2 or unknown".into());
        let fpf = self_centralising_check(&k, &k.k_gens[FIVE_CYCLE_GEN])?;
        Ok((fmt(r, &or_str, &idx, &class, fpf), fmt(r, &power(r, 12), "120", "2", true)))
    })?;
    Ok(Outcome {
        computed,
        expected,
        notes: "class 2: commutators of generators are central and one is non-trivial; \
                fixed-point-free on U and on the θ-span gives C_K(s) = ⟨s⟩ by coprime action"
            .into(),
    })
}

fn lemma2_5(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let primes = ctx.primes_or(&[3, 7, 11, 13], odd_non_five);
    if primes.is_empty() {
        return no_primes(ctx);
    }
    let fmt = |d: usize, d_alt: usize, inside: bool| {
        format!("dim Hom(V⊗V,V)={d}, for Alt(5)={d_alt}, γ in it: {}", yes_no(inside))
    };
    let (computed, expected) = join_primes(&primes, |r| {
        let v = v_module(r, &sym5_perms())?;
        let vv = v.tensor(&v)?;
        let homs = vv.hom_space(&v)?;
        let g = gamma(v.ring());
        let inside = vv.is_equivariant(&v, &g) && !g.is_zero();
        let va = v_module(r, &alt5_perms())?;
        let d_alt = va.tensor(&va)?.hom_space(&va)?.len();
        Ok((fmt(homs.len(), d_alt, inside), fmt(1, 1, true)))
    })?;
    Ok(Outcome { computed, expected, notes: String::new() })
}

/// Renders a vector as aσ + Σ bᵢ·xᵢ with σ the all-ones vector.
fn sigma_form(v: &[i64; 4], letter: char) -> String {
    let sub = ['₁', '₂', '₃', '₄'];
    let mut counts: Vec<(i64, usize)> = Vec::new();
    for &x in v {
        match counts.iter_mut().find(|(y, _)| *y == x) {
            Some(c) => c.1 += 1,
            None => counts.push((x, 1)),
        }
    }
    let s = counts.iter().max_by_key(|c| c.1).map(|c| c.0).unwrap_or(0);
    let mut out = if s == 0 { String::new() } else { format!("{s}σ") };
    for (i, &x) in v.iter().enumerate() {
        let c = x - s;
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "−" } else if out.is_empty() { "" } else { "+" };
        out.push_str(&format!("{sign}{}{letter}{}", c.abs(), sub[i]));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn sec3_hallwitt(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let primes = ctx.primes_or(&[3, 5, 7, 11, 13], |r| r > 2);
    if primes.is_empty() {
        return no_primes(ctx);
    }
    // [c₁,d₁,d₂] and [d₂,c₁,d₁] in the two-factor case
    let [p1, _, _] = hall_witt_paths(1, 1, 2);
    let [_, _, p3] = hall_witt_paths(2, 1, 1);
    let mut computed = vec![format!("[c₁,d₁,d₂]={}, [d₂,c₁,d₁]={}", sigma_form(&p1, 'f'), sigma_form(&p3, 'f'))];
    let mut expected = vec!["[c₁,d₁,d₂]=5σ−10f₂, [d₂,c₁,d₁]=5σ−5f₁".to_string()];
    let mut notes = Vec::new();
    for &r in &primes {
        let s = hall_witt_sweep(r)?;
        if r == 5 {
            computed.push(format!("r=5: non-zero defects={}", s.cases - s.zero_defects));
            expected.push("r=5: non-zero defects=0".into());
        } else {
            computed.push(format!("r={r}: zero defects at (c₁,d₁,e₂) with m₁≠0={}", s.zero_at_112));
            expected.push(format!("r={r}: zero defects at (c₁,d₁,e₂) with m₁≠0=0"));
            let first = s
                .first_zero
                .map(|((i, j, k), m)| format!(", first at (c{i},d{j},e{k}) m=({},{},{})", m[0], m[1], m[2]))
                .unwrap_or_default();
            notes.push(format!("r={r}: {} of {} index/scalar cases vanish{first}", s.zero_defects, s.cases));
        }
    }
    Ok(Outcome {
        computed: computed.join("; "),
        expected: expected.join("; "),
        notes: format!("over all index triples: {}", notes.join("; ")),
    })
}

fn lemma4_1(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let stored = ctx.cache.and_then(|c| c.load("alt5-t-z49", ctx.seed));
    let l = lemma41(ctx.seed, stored.as_ref())?;
    if let Some(c) = ctx.cache {
        c.store("alt5-t-z49", ctx.seed, &l.chain.to_data());
    }
    let mut computed = format!(
        "|C_K(S)|={}, |⟨A,T⟩|={}, divides |PSL₂(49)|: {}",
        factored(&l.centralizer_order),
        factored(&l.group_order),
        yes_no(l.divides_psl)
    );
    if l.t_order != 25 || l.five_torsion != 25 {
        computed.push_str(&format!(", |T|={}, 5-elements={}", l.t_order, l.five_torsion));
    }
    Ok(Outcome {
        computed,
        expected: "|C_K(S)|=2⁵·3·5²·7⁴, |⟨A,T⟩|=2⁴·3·5²·7⁸, divides |PSL₂(49)|: no".into(),
        notes: format!(
            "T of order {} is the unique Sylow 5-subgroup: {} elements of the reduction satisfy x²⁵=1; |PSL₂(49)|={}",
            l.t_order,
            l.five_torsion,
            factored(&BigUint::from(PSL2_49_ORDER))
        ),
    })
}

fn lemma4_2(_ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let g = sl2_generators();
    let phi = &g[PHI];
    let dims_ok = (0..=6).all(|j| fpf5::modrep::sl2::sym_power_basic(j).map(|u| u.dim() == j + 1).unwrap_or(false));
    let mut all_nontrivial = true;
    for j in 3..=6 {
        all_nontrivial &= eigenvalue_profile(&sym_power(phi, j), phi)?.has_all_nontrivial();
    }
    let u4_has_one = eigenvalue_profile(&sym_power(phi, 4), phi)?.has_one();
    let v = twisted_natural_tensor();
    let fpf = v.fpf_check(v.image(PHI))?;
    let t = decompose_tensor_check()?;
    let m = t.multiplicities;
    let fmt = |d: bool, a: bool, o: bool, f: bool, h1: usize, h2: usize, m: [usize; 4]| {
        format!(
            "dim U_j=j+1: {}, U_j (j≥3) has all non-trivial 5th roots: {}, U₄ has 1: {}, fpf(U₁⊗U₁^σ)={}, \
             Hom(V⊗V,V)={h1}, Hom(V,V⊗V)={h2}, Hom(V⊗V,U₀|U₂|U₂^σ|U₂⊗U₂^σ)=({},{},{},{})",
            yes_no(d),
            yes_no(a),
            yes_no(o),
            yes_no(f),
            m[0],
            m[1],
            m[2],
            m[3]
        )
    };
    Ok(Outcome {
        computed: fmt(dims_ok, all_nontrivial, u4_has_one, fpf, t.hom_to_v, t.hom_from_v, m),
        expected: fmt(true, true, true, true, 0, 0, [1, 1, 1, 1]),
        notes: "order-5 element φ of SL₂(49); eigenvalues sorted by the two quadratic factors of Φ₅ over GF(49); \
                uniqueness of V among irreducible modules is not re-proved"
            .into(),
    })
}

fn lemma4_3(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let stored = ctx.cache.and_then(|c| c.load("psl2-49", ctx.seed));
    let chain = psl2_49_chain(ctx.seed, stored.as_ref())?;
    if let Some(c) = ctx.cache {
        c.store("psl2-49", ctx.seed, &chain.to_data());
    }
    let l = lemma43(&chain)?;
    let fmt = |d: usize, f: &str, eq: bool, cos: &str, e: usize| {
        format!("descended dim={d} over {f}, extends to U₁⊗U₁^σ: {}, cosets={cos}, Ext¹(V,V)={e}", yes_no(eq))
    };
    Ok(Outcome {
        computed: fmt(l.descended.dim(), &l.descended.ring().name(), l.descent_certified, &l.cosets.to_string(), l.ext1),
        expected: fmt(4, "GF(7)", true, "58800", 0),
        notes: format!("chain on the projective line, orbit lengths {:?}", chain.orbit_lengths()),
    })
}

fn lemma4_5_data(ctx: &mut Ctx) -> fpf5::Result<Lemma45> {
    if let Some(l) = &ctx.lemma45 {
        return Ok(l.clone());
    }
    let l = lemma45(ctx.seed)?;
    ctx.lemma45 = Some(l.clone());
    Ok(l)
}

fn lemma4_5(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let l = lemma4_5_data(ctx)?;
    let fmt = |n: usize, p: usize| format!("|N|={n}, ⟨A,x⟩ perfect of order 360: {p}");
    Ok(Outcome {
        computed: fmt(l.normalizer_order, l.perfect_360),
        expected: fmt(7776, 0),
        notes: format!("{} of the groups ⟨A,x⟩ have order 360", l.order_360),
    })
}

fn lemma4_6(ctx: &mut Ctx) -> fpf5::Result<Outcome> {
    let l = lemma46(ctx.seed)?;
    let n = lemma4_5_data(ctx)?;
    let fmt = |d: usize, f: bool, e: usize, h: usize, inside: bool| {
        format!(
            "dimV={d}, fpf={}, Ext¹(V,V)={e}, Hom(V⊗V,V)={h}, Alt(6) in GL₄(ℤ/9): {}",
            yes_no(f),
            yes_no(inside)
        )
    };
    Ok(Outcome {
        computed: fmt(l.dim, l.fpf, l.ext1, l.hom_vv_v, n.perfect_360 > 0),
        expected: fmt(4, true, 0, 0, false),
        notes: "V = (sum-zero vectors)/(all-ones) in the 6-point GF(3) permutation module".into(),
    })
}
