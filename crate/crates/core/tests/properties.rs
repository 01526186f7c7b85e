//! Randomized invariants of the classifiers and the ideal engine.

use collineation::classify::classify;
use collineation::ideal::Ideal;
use collineation::net::classify_net;
use collineation::pencil::{admissible_ks, build_pencil, classify_pencil, random_block_spec, scramble};
use collineation::scheme::profile_scheme;
use collineation::{CollineationLabel, Field, Tensor3};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GF: Field = Field::Prime(32003);

/// Sparse 3x3x3 tensors with entries in {-1, 0, 1, 2}.
fn net() -> impl Strategy<Value = Tensor3> {
    proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => Just(1), 1 => Just(-1), 1 => Just(2)], 27).prop_map(|v| {
        let mut terms = Vec::new();
        for (idx, c) in v.into_iter().enumerate() {
            if c != 0 {
                terms.push((idx / 9, (idx / 3) % 3, idx % 3, c));
            }
        }
        Tensor3::from_int_terms([3, 3, 3], Field::Rational, &terms).unwrap()
    })
}

fn minor_ideal(t: &Tensor3) -> Ideal {
    t.linear_matrix(1).unwrap().minor_ideal(2).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_is_idempotent(t in net()) {
        let i = minor_ideal(&t);
        let gb = i.groebner().unwrap().to_vec();
        let again = Ideal::new(i.ring(), gb.clone()).unwrap();
        prop_assert_eq!(again.groebner().unwrap(), gb.as_slice());
        for g in i.generators() {
            prop_assert!(again.contains_poly(g).unwrap());
        }
    }

    #[test]
    fn saturation_keeps_the_hilbert_polynomial(t in net()) {
        let i = minor_ideal(&t);
        let h = i.hilbert_data().unwrap();
        let (sat, profile) = profile_scheme(&i).unwrap();
        let hs = sat.hilbert_data().unwrap();
        prop_assert_eq!(h.dim, hs.dim);
        prop_assert_eq!(profile.dim, hs.dim);
        if h.dim >= 0 {
            prop_assert_eq!(h.degree, hs.degree);
        }
        prop_assert!(sat.contains(&i).unwrap());
    }

    #[test]
    fn zero_dimensional_radicals(t in net()) {
        let (sat, profile) = profile_scheme(&minor_ideal(&t)).unwrap();
        prop_assume!(profile.dim == 0);
        let rad = sat.zero_dim_radical().unwrap();
        prop_assert!(rad.contains(&sat).unwrap());
        prop_assert!(rad.zero_dim_radical().unwrap().equals(&rad).unwrap());
        let deg = rad.hilbert_data().unwrap().degree.unwrap();
        prop_assert!(deg <= profile.deg.unwrap());
        prop_assert_eq!(Some(deg), profile.radical_deg);
    }

    #[test]
    fn net_labels_agree_across_fields(t in net()) {
        let q = classify(&t, 1, 2).unwrap();
        let p = classify(&t.to_field(GF).unwrap(), 1, 2).unwrap();
        prop_assert!(q.label.same_variety(&p.label), "{} vs {}", q.label, p.label);
        prop_assert_eq!(q.dim_l, p.dim_l);
    }

    #[test]
    fn net_labels_ignore_swap_and_scale(t in net(), c in prop_oneof![Just(-1i64), Just(2), Just(7)]) {
        prop_assume!(t.is_concise());
        let a = classify_net(&t, 1).unwrap();
        let b = classify_net(&t.swap23(), 1).unwrap();
        let s = classify_net(&t.scale(&Field::Rational.from_i64(c)), 1).unwrap();
        prop_assert_eq!(&a.label, &b.label);
        prop_assert_eq!(a.dim_l, b.dim_l);
        prop_assert_eq!(a.base_locus, b.base_locus);
        prop_assert_eq!(a, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pencil_labels_survive_change_of_basis(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_block_spec(&mut rng, 5, 6);
        let t = build_pencil(&spec, Field::Rational).unwrap();
        let s = scramble(&t, &mut rng);
        let (rows, cols) = t.linear_matrix(1).unwrap().shape();
        for k in admissible_ks(rows, cols) {
            let a = classify_pencil(&t, k).unwrap();
            let b = classify_pencil(&s, k).unwrap();
            prop_assert_eq!(&a.label, &b.label, "{} k={}", spec, k);
            prop_assert_eq!(a.p, b.p);
            if let Some(p) = a.p {
                prop_assert!(p as usize <= k);
            }
        }
    }

    #[test]
    fn pencil_p_grows_with_k(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_block_spec(&mut rng, 6, 7);
        let t = build_pencil(&spec, Field::Rational).unwrap();
        let (rows, cols) = t.linear_matrix(1).unwrap().shape();
        let ps: Vec<u32> = admissible_ks(rows, cols)
            .into_iter()
            .filter_map(|k| classify_pencil(&t, k).unwrap().p)
            .collect();
        prop_assert!(ps.windows(2).all(|w| w[0] <= w[1]), "{}: {:?}", spec, ps);
    }

    /// A concise pencil whose 2x2 minors have a common zero has only lines
    /// and points as collineation varieties.
    #[test]
    fn small_base_locus_forces_lines(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_block_spec(&mut rng, 6, 7);
        let t = build_pencil(&spec, Field::Rational).unwrap();
        prop_assume!(t.is_concise());
        let (rows, cols) = t.linear_matrix(1).unwrap().shape();
        prop_assume!(rows >= 2 && cols >= 2);
        let (_, b) = profile_scheme(&t.linear_matrix(1).unwrap().minor_ideal(2).unwrap().0).unwrap();
        prop_assume!(!b.is_empty());
        for k in admissible_ks(rows, cols) {
            let c = classify_pencil(&t, k).unwrap();
            if c.label.is_undefined() {
                continue;
            }
            prop_assert!(
                c.label.same_variety(&CollineationLabel::Line) || c.label == CollineationLabel::Point,
                "{} k={}: {}", spec, k, c.label
            );
        }
    }
}
