use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

use tilting_core::bott::{bott_classify_with, negative_root_count};
use tilting_core::bundles::{lr_tensor, schur_dim};
use tilting_core::oracle::{character_tensor, hook_content_dim, projective_euler_characteristic};
use tilting_core::{
    bott_classify, bott_typea_epsilon, build_gsb, build_inv, build_sb, epsilon_to_fundamental,
    ext_dims, k0_decomposition, CohomologyResult, EquivariantBundle, GLWeight, Parabolic,
    RootDatum, Weight,
};

fn datum_a_or_d() -> impl Strategy<Value = RootDatum> {
    prop_oneof![
        (1usize..=6).prop_map(|r| RootDatum::type_a(r).unwrap()),
        (3usize..=6).prop_map(|r| RootDatum::type_d(r).unwrap()),
    ]
}

fn datum_and_weight(lo: i64, hi: i64) -> impl Strategy<Value = (RootDatum, Weight)> {
    datum_a_or_d().prop_flat_map(move |d| {
        let r = d.rank();
        (
            Just(d),
            prop::collection::vec(lo..=hi, r).prop_map(Weight::new),
        )
    })
}

fn glweight(r: usize) -> impl Strategy<Value = GLWeight> {
    prop::collection::vec(-4i64..=4, r).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        GLWeight::new(v).unwrap()
    })
}

fn gl_pair() -> impl Strategy<Value = (GLWeight, GLWeight)> {
    (1usize..=4).prop_flat_map(|r| (glweight(r), glweight(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dot_reflection_is_involutive((d, w) in datum_and_weight(-8, 8), i in 1usize..=6) {
        let i = 1 + (i - 1) % d.rank();
        let once = d.simple_dot_reflection(i, &w).unwrap();
        prop_assert_eq!(d.simple_dot_reflection(i, &once).unwrap(), w);
    }

    #[test]
    fn single_degree_equals_negative_roots((d, w) in datum_and_weight(-6, 6)) {
        match bott_classify(&d, &w).unwrap() {
            CohomologyResult::Singular => {}
            CohomologyResult::NonSingular { degree, dominant, dim } => {
                prop_assert_eq!(degree, negative_root_count(&d, &w));
                prop_assert!(dominant.is_dominant());
                prop_assert!(dim > BigUint::zero());
            }
        }
    }

    #[test]
    fn pivot_rule_does_not_matter((d, w) in datum_and_weight(-6, 6), seed in any::<u64>()) {
        let mut state = seed;
        let random = bott_classify_with(&d, &w, |c| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            c[(state >> 33) as usize % c.len()]
        })
        .unwrap();
        prop_assert_eq!(bott_classify(&d, &w).unwrap(), random);
    }

    #[test]
    fn epsilon_oracle(eps in (2usize..=5).prop_flat_map(|n| prop::collection::vec(-6i64..=6, n))) {
        let d = RootDatum::type_a(eps.len() - 1).unwrap();
        let ours = bott_classify(&d, &epsilon_to_fundamental(&eps).unwrap()).unwrap();
        prop_assert_eq!(ours, bott_typea_epsilon(&eps).unwrap());
    }

    #[test]
    fn lr_multiplicative_and_commutative((a, b) in gl_pair(), k in -3i64..=3) {
        let ab = lr_tensor(&a, &b).unwrap();
        let total: BigUint = ab.iter().map(|(nu, &c)| schur_dim(nu) * BigUint::from(c)).sum();
        prop_assert_eq!(total, schur_dim(&a) * schur_dim(&b));
        prop_assert_eq!(&lr_tensor(&b, &a).unwrap(), &ab);
        let shifted: BTreeMap<GLWeight, u64> = ab.iter().map(|(nu, &c)| (nu.shifted(k), c)).collect();
        prop_assert_eq!(lr_tensor(&a.shifted(k), &b).unwrap(), shifted);
        if a.len() <= 3 {
            prop_assert_eq!(character_tensor(&a, &b), ab);
        }
    }

    #[test]
    fn line_bundle_euler_characteristic(n in 2usize..=7, j in -12i64..=12, k in -12i64..=12) {
        let d = RootDatum::type_a(n - 1).unwrap();
        let p = Parabolic::new(n - 1, [1]).unwrap();
        let l1 = Weight::fundamental(n - 1, 1).unwrap();
        let line = |t: i64| EquivariantBundle::irreducible(&d, &p, t * &l1).unwrap();
        let chi = ext_dims(&line(j), &line(k)).unwrap().euler_characteristic();
        prop_assert_eq!(chi, projective_euler_characteristic(n, k - j));
    }

    #[test]
    fn identity_in_degree_zero(
        (d, w) in (2usize..=5).prop_flat_map(|r| (
            Just(RootDatum::type_a(r).unwrap()),
            prop::collection::vec(-3i64..=3, r),
        )),
    ) {
        // P-dominant for the Grassmannian of the last node: coordinates before it ≥ 0.
        let r = d.rank();
        let mut c = w.into_iter().map(|x| x.abs()).collect::<Vec<_>>();
        c[r - 1] = -c[r - 1];
        let p = Parabolic::new(r, [r]).unwrap();
        let e = EquivariantBundle::irreducible(&d, &p, Weight::new(c)).unwrap();
        prop_assert!(ext_dims(&e, &e).unwrap().hom() >= BigUint::one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn type_d_outer_symmetry(r in 3usize..=6, c in prop::collection::vec(0i64..=4, 6)) {
        let d = RootDatum::type_d(r).unwrap();
        let mut w = c[..r].to_vec();
        let lam = Weight::new(w.clone());
        w.swap(r - 2, r - 1);
        prop_assert_eq!(d.weyl_dim(&lam).unwrap(), d.weyl_dim(&Weight::new(w)).unwrap());
    }
}

#[test]
fn rho_pairing_is_height() {
    for d in [1, 3, 6]
        .map(|r| RootDatum::type_a(r).unwrap())
        .into_iter()
        .chain([3, 4, 6].map(|r| RootDatum::type_d(r).unwrap()))
    {
        let rho = Weight::rho(d.rank());
        for alpha in d.positive_roots() {
            let h = d.coroot_pairing(&rho, alpha).unwrap();
            assert!(h >= 1);
            let simple = alpha.iter().sum::<i64>() == 1;
            assert_eq!(h == 1, simple, "{alpha:?}");
        }
    }
}

#[test]
fn weyl_dim_matches_hook_content_in_four_by_four_box() {
    let mut count = 0;
    for n in 2..=8u64 {
        let d = RootDatum::type_a(n as usize - 1).unwrap();
        for a in 0..=4u64 {
            for b in 0..=a {
                for c in 0..=b {
                    for e in 0..=c {
                        let p = [a, b, c, e];
                        if p.iter().filter(|&&x| x > 0).count() as u64 >= n {
                            continue;
                        }
                        let mut eps: Vec<i64> = p.iter().map(|&x| x as i64).collect();
                        eps.resize(n as usize, 0);
                        eps.truncate(n as usize);
                        let w = epsilon_to_fundamental(&eps).unwrap();
                        assert_eq!(
                            d.weyl_dim(&w).unwrap(),
                            hook_content_dim(&p, n),
                            "{p:?} n={n}"
                        );
                        count += 1;
                    }
                }
            }
        }
    }
    assert!(count > 300);
}

#[test]
fn serre_duality_on_projective_space() {
    for n in 2..=8usize {
        let d = RootDatum::type_a(n - 1).unwrap();
        let l1 = Weight::fundamental(n - 1, 1).unwrap();
        for j in -3 * n as i64..=3 * n as i64 {
            let a = bott_classify(&d, &(j * &l1)).unwrap();
            let b = bott_classify(&d, &(-(j + n as i64) * &l1)).unwrap();
            let a0 = matches!(a, CohomologyResult::NonSingular { degree: 0, .. });
            let btop = b.degree() == Some(n - 1);
            assert_eq!(a0, btop, "n={n} j={j}");
            if let (
                CohomologyResult::NonSingular { dim: x, .. },
                CohomologyResult::NonSingular { dim: y, .. },
            ) = (&a, &b)
            {
                assert_eq!(x, y);
            }
        }
    }
}

#[test]
fn collection_sizes_match_k0_rank() {
    let mut collections = Vec::new();
    for n in 1..=6 {
        collections.push(build_sb(n).unwrap());
        for r in 1..n {
            let c = build_gsb(n, r).unwrap();
            assert_eq!(c.len(), build_gsb(n, n - r).unwrap().len());
            collections.push(c);
        }
    }
    for n in 3..=6 {
        collections.push(build_inv(n).unwrap());
    }
    for c in collections {
        let k = k0_decomposition(&c);
        assert_eq!(k.k0_rank_split as usize, c.len(), "{}", c.family);
        assert_eq!(c.len(), c.family.expected_size());
    }
}

#[test]
fn euler_oracle_sign() {
    assert_eq!(projective_euler_characteristic(3, -3), BigInt::one());
}
