use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use finsub_core::cohom::{
    brute_h1, brute_h2_direct, cyclic_cohomology_from_profile, jordan_profile, random_order_p,
};
use finsub_core::embed::{min_gl_valuation, minkowski_bound};
use finsub_core::fp::FpMatrix;
use finsub_core::group::FiniteGroup;
use finsub_core::modrep::unipotent::{one_parameter_law, unipotent_power};
use finsub_core::modrep::FpModule;
use finsub_core::obstruction::{named_tower, ZMat};
use finsub_core::rootsys::RootSystem;
use finsub_core::weyl::{degree_divisors, eigenvalue_orders, word};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7, 11])
}

fn matrix(p: u32, n: usize) -> impl Strategy<Value = FpMatrix> {
    prop::collection::vec(0..p, n * n).prop_map(move |v| {
        FpMatrix::from_rows(p, &v.chunks(n).map(<[u32]>::to_vec).collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity((_p, a) in prime().prop_flat_map(|p| (Just(p), matrix(p, 5)))) {
        prop_assert_eq!(a.rank() + a.nullspace().len(), 5);
        for v in a.nullspace() {
            prop_assert!(a.mul_vec(&v).iter().all(|&x| x == 0));
        }
        if let Some(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).is_identity());
        }
    }

    #[test]
    fn dual_is_an_involution((p, a, b) in prime().prop_flat_map(|p| (Just(p), matrix(p, 3), matrix(p, 3)))) {
        prop_assume!(a.determinant() != 0 && b.determinant() != 0);
        let m = FpModule::new(p, vec![a, b], "m").unwrap();
        let twice = m.dual().dual();
        prop_assert_eq!(twice.action(), m.action());
    }

    #[test]
    fn unipotent_powers_form_a_group(p in prop::sample::select(vec![3u32, 5, 7]), d in 1usize..6, seed: u64) {
        let u = random_order_p(p, d, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(one_parameter_law(&u).unwrap());
        prop_assert_eq!(unipotent_power(&u, 1).unwrap(), u);
    }

    #[test]
    fn cyclic_forms_match_cocycles(p in prop::sample::select(vec![3u32, 5]), d in 1usize..5, seed: u64) {
        let u = FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]);
        let c = FiniteGroup::cyclic(p, u, "C").unwrap();
        let sigma = random_order_p(p, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let prof = jordan_profile(&sigma).unwrap();
        let m = FpModule::new(p, vec![sigma], "m").unwrap();
        prop_assert_eq!(brute_h1(&c, &m).unwrap().h_dim, cyclic_cohomology_from_profile(&prof, p as usize, 1));
        prop_assert_eq!(brute_h2_direct(&c, &m).unwrap().h_dim, cyclic_cohomology_from_profile(&prof, p as usize, 2));
    }

    #[test]
    fn lie_addition_is_abelian(p in prop::sample::select(vec![3u32, 5, 7]), x: [u8; 3], y: [u8; 3], z: [u8; 3]) {
        let t = named_tower(p, "trivial").unwrap();
        let h = |v: [u8; 3]| v.map(|c| c as u32 % p);
        let (x, y, z) = (h(x), h(y), h(z));
        prop_assert_eq!(t.lie_add(x, y), t.lie_add(y, x));
        prop_assert_eq!(t.lie_add(t.lie_add(x, y), z), t.lie_add(x, t.lie_add(y, z)));
        prop_assert_eq!(t.comm(t.lie_add(x, y), z)[2], (t.comm(x, z)[2] + t.comm(y, z)[2]) % p);
    }

    #[test]
    fn newton_inverse(p in prop::sample::select(vec![3u32, 5, 7]), k in 1u32..5, v in prop::collection::vec(0u64..10_000, 9)) {
        let m = (p as u64).pow(k);
        let a = ZMat { n: 3, m, a: v.iter().map(|x| x % m).collect() };
        let det = FpMatrix::from_rows(p, &a.reduce(p as u64).rows().iter().map(|r| r.iter().map(|&x| x as u32).collect()).collect::<Vec<_>>()).determinant();
        match a.inverse(p) {
            Some(inv) => prop_assert!(a.mul(&inv).is_identity() && inv.mul(&a).is_identity()),
            None => prop_assert_eq!(det, 0),
        }
    }

    #[test]
    fn eigenvalue_orders_divide_degrees(letters in prop::collection::vec(0usize..4, 0..20)) {
        let rs = RootSystem::new("F4".parse().unwrap()).unwrap();
        let w = word(&rs, &letters);
        let divs = degree_divisors(&rs.degrees);
        prop_assert!(eigenvalue_orders(&w).unwrap().is_subset(&divs));
    }

    #[test]
    fn minkowski_formula_is_attained(n in 1u64..6, l in prop::sample::select(vec![3u64, 5])) {
        prop_assert_eq!(minkowski_bound(n, l).unwrap().bound, min_gl_valuation(n as u32, l, 100) as u64);
    }
}
