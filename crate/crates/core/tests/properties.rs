use fpf5::arith::{CoeffRing, Mat};
use fpf5::constructions::constants::{alt5_perms, gamma, sym5_perms, v_module};
use fpf5::constructions::hall_witt::{hall_witt_defect_vectors, GradedTriple};
use fpf5::modrep::galois_descent;
use fpf5::modrep::sl2::{gf49, twisted_natural_tensor};
use proptest::prelude::*;

fn vec4() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-6i64..7)
}

fn word(ngens: i32) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..=ngens, any::<bool>()).prop_map(|(g, inv)| if inv { -g } else { g }), 0..12)
}

fn invertible(ring: CoeffRing, n: usize) -> impl Strategy<Value = Mat> {
    let q = ring.size();
    prop::collection::vec(0..q, n * n)
        .prop_map(move |d| Mat::new(ring, n, n, d).unwrap())
        .prop_filter("invertible", |m| m.is_invertible())
}

fn add(a: &[i64; 4], b: &[i64; 4]) -> [i64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

proptest! {
    #[test]
    fn hall_witt_defect_is_trilinear(
        r in prop::sample::select(vec![3u32, 5, 7, 11, 13]),
        m in prop::array::uniform3(0u32..13),
        c in vec4(), c2 in vec4(), d in vec4(), e in vec4(),
    ) {
        let t = GradedTriple { r, m: m.map(|x| x % r) };
        let f = CoeffRing::prime_field(r).unwrap();
        let lhs = hall_witt_defect_vectors(&t, &add(&c, &c2), &d, &e).unwrap();
        let a = hall_witt_defect_vectors(&t, &c, &d, &e).unwrap();
        let b = hall_witt_defect_vectors(&t, &c2, &d, &e).unwrap();
        let rhs: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!(lhs, rhs);
        // linear in the other two slots as well
        let lhs = hall_witt_defect_vectors(&t, &c, &add(&d, &c2), &e).unwrap();
        let b = hall_witt_defect_vectors(&t, &c, &c2, &e).unwrap();
        let rhs: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!(lhs, rhs);
        let lhs = hall_witt_defect_vectors(&t, &c, &d, &add(&e, &c2)).unwrap();
        let b = hall_witt_defect_vectors(&t, &c, &d, &c2).unwrap();
        let rhs: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_commutes_with_group_words(r in prop::sample::select(vec![3u32, 7, 11, 13]), w in word(2)) {
        let v = v_module(r, &sym5_perms()).unwrap();
        let vv = v.tensor(&v).unwrap();
        let g = gamma(v.ring());
        prop_assert_eq!(&g * &vv.eval_word(&w), &v.eval_word(&w) * &g);
    }

    #[test]
    fn fpf_is_a_conjugacy_invariant(
        r in prop::sample::select(vec![3u32, 7, 11]),
        w in word(2),
        seed in any::<u64>(),
    ) {
        let v = v_module(r, &alt5_perms()).unwrap();
        let f = v.ring();
        let x = v.eval_word(&w);
        // deterministic invertible matrix from the seed
        let mut s = seed | 1;
        let p = loop {
            let data: Vec<u32> = (0..16)
                .map(|_| {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    (s % u64::from(f.size())) as u32
                })
                .collect();
            let p = Mat::new(f, 4, 4, data).unwrap();
            if p.is_invertible() {
                break p;
            }
        };
        let y = &(&p.invert().unwrap() * &x) * &p;
        prop_assert_eq!(v.fpf_check(&x).ok(), v.fpf_check(&y).ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn descent_survives_change_of_basis(p in invertible(gf49(), 4)) {
        let v = twisted_natural_tensor().conjugate(&p).unwrap();
        let d = galois_descent(&v).unwrap();
        prop_assert_eq!(d.rep.dim(), 4);
        prop_assert!(d.rep.ring().is_field() && d.rep.ring().size() == 7);
        prop_assert!(d.certify(&v).unwrap());
        prop_assert!(d.certify(&twisted_natural_tensor()).unwrap());
    }
}
