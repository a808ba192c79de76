mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dsgenus::cli_io::{builtin, parse_descriptor, BUILTIN_NAMES};
use dsgenus::covers::branched_cover_order;
use dsgenus::exactalg::rational::int;
use dsgenus::exactalg::{CertifiedValue, LaurentPoly};
use dsgenus::families::{thm_c_family, thm_g_family, FamilyDescriptor};
use dsgenus::lt_signature::{signature_profile, SignatureConfig};
use dsgenus::obstruct::{certify_no_h1_embedding, gds_x_lower_bound, Certificate};
use dsgenus::parity::arf;
use dsgenus::seifert::{is_visibly_hyperbolic, KnotDescriptor, SeifertMatrix};

fn seifert_strategy() -> impl Strategy<Value = SeifertMatrix> {
    (1usize..=3).prop_flat_map(|g| {
        let n = 2 * g;
        prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
            let mut v = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let s = it.next().unwrap();
                    v[i][j] += s;
                    if i != j {
                        v[j][i] += s;
                    }
                }
            }
            for k in 0..g {
                v[2 * k][2 * k + 1] += 1;
            }
            SeifertMatrix::validate(v).unwrap()
        })
    })
}

fn small_seifert() -> impl Strategy<Value = SeifertMatrix> {
    seifert_strategy().prop_filter("genus at most 2", |v| v.genus() <= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alexander_is_normalized_and_symmetric(v in seifert_strategy()) {
        let d = v.alexander_polynomial();
        prop_assert!(d.eval(&int(1)) == int(1) || d.eval(&int(1)) == int(-1));
        prop_assert!(d.associates_pm(&d.conjugate()));
        prop_assert!(d.width().unwrap() <= v.size() as u64);
    }

    #[test]
    fn module_order_is_alexander_polynomial(v in small_seifert()) {
        let k = KnotDescriptor::from_seifert("k", v);
        let m = k.alexander_module();
        prop_assert_eq!(m.free_rank(), 0);
        prop_assert!(m.order().unwrap().associates(&k.alexander_polynomial()));
    }

    #[test]
    fn connected_sum_laws(a in small_seifert(), b in small_seifert()) {
        let (ka, kb) = (KnotDescriptor::from_seifert("a", a), KnotDescriptor::from_seifert("b", b));
        let s = ka.connected_sum(&kb).unwrap();
        let product = &ka.alexander_polynomial() * &kb.alexander_polynomial();
        prop_assert!(s.alexander_polynomial().associates(&product));
        prop_assert_eq!(
            s.genus_upper_bound().unwrap(),
            ka.genus_upper_bound().unwrap() + kb.genus_upper_bound().unwrap()
        );
        prop_assert!(SeifertMatrix::validate(s.seifert().unwrap().entries().to_vec()).is_ok());
        prop_assert_eq!(arf(&s), arf(&ka) + arf(&kb));
        for n in [2u64, 3, 4, 5] {
            let (oa, ob, os) = (
                branched_cover_order(&ka, n).unwrap().order,
                branched_cover_order(&kb, n).unwrap().order,
                branched_cover_order(&s, n).unwrap().order,
            );
            if let (Some(x), Some(y)) = (oa.finite(), ob.finite()) {
                prop_assert_eq!(os.finite().cloned(), Some(x * y));
            } else {
                prop_assert!(os.finite().is_none());
            }
        }
    }

    #[test]
    fn mirror_laws(v in small_seifert()) {
        let k = KnotDescriptor::from_seifert("k", v.clone());
        let m = k.mirror().unwrap();
        let back = m.mirror().unwrap();
        prop_assert_eq!(back.seifert().unwrap(), &v);
        prop_assert!(SeifertMatrix::validate(m.seifert().unwrap().entries().to_vec()).is_ok());
        prop_assert!(m.alexander_polynomial().associates(&k.alexander_polynomial()));
        prop_assert_eq!(arf(&m), arf(&k));
    }

    #[test]
    fn descriptors_round_trip(v in seifert_strategy(), ribbon in any::<Option<bool>>()) {
        let k = KnotDescriptor::from_seifert("k", v).with_ribbon(ribbon);
        let s = serde_json::to_string(&k).unwrap();
        prop_assert_eq!(parse_descriptor(s.as_bytes()).unwrap(), k);
    }

    #[test]
    fn laurent_serde_round_trip(c in prop::collection::vec(-50i64..50, 0..6), shift in -4i64..4) {
        let p = LaurentPoly::from_ints(&c).shift(shift);
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }

    #[test]
    fn certificates_are_monotone_in_r(g in 0u64..3, n in 0u64..3, r in 0u64..12) {
        let f = thm_c_family(g, n).unwrap();
        if certify_no_h1_embedding(&f, r).unwrap().passed() {
            for smaller in 0..r {
                prop_assert!(certify_no_h1_embedding(&f, smaller).unwrap().passed());
            }
        }
    }
}

#[test]
fn hundred_random_descriptors_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..100 {
        let k = common::knot(common::random_seifert(&mut rng, 1 + i % 3, 5));
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(parse_descriptor(s.as_bytes()).unwrap(), k);
    }
    for name in BUILTIN_NAMES {
        let k = builtin(name).unwrap();
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(parse_descriptor(s.as_bytes()).unwrap(), k);
    }
}

#[test]
fn infection_family_members_are_algebraically_doubly_slice() {
    let cfg = SignatureConfig::default();
    for (g, n) in [(0, 0), (1, 0), (0, 2), (1, 1)] {
        let f = thm_c_family(g, n).unwrap();
        let k = &f.seifert_level;
        if k.seifert().unwrap().size() <= 8 {
            assert!(is_visibly_hyperbolic(k).unwrap().hyperbolic, "({g},{n})");
        }
        assert!(signature_profile(k, &cfg).unwrap().is_identically_zero());
        let multiplicity = k
            .alexander_module()
            .primary_multiplicity(&f.infection.axis_primary);
        assert_eq!(multiplicity.unwrap() as u64, f.infection.axis_count);
    }
}

#[test]
fn infection_family_end_to_end_margins() {
    for g in 0..=6u64 {
        for n in 0..=(6 - g) {
            let f = thm_c_family(g, n).unwrap();
            let c = gds_x_lower_bound(&f, n, g).unwrap();
            assert!(c.passed());
            assert_eq!(Some(c.checks[1].margin()), f.margin());
        }
    }
}

#[test]
fn ribbon_sum_family_members() {
    let cfg = SignatureConfig::default();
    for (g, b2) in [(0, 0), (1, 0), (0, 1)] {
        let k = thm_g_family(g, b2).unwrap();
        assert_eq!(
            k.alexander_module().min_generators() as u64,
            4 * g + 2 * b2 + 1
        );
        assert_eq!(k.ribbon, Some(true));
        assert!(arf(&k).is_zero());
        assert!(signature_profile(&k, &cfg).unwrap().is_identically_zero());
    }
}

#[test]
fn doubly_slice_table_entries_get_no_gds_bound() {
    let cfg = SignatureConfig::default();
    for name in ["unknot", "9_46"] {
        let k = builtin(name).unwrap();
        let c = dsgenus::obstruct::signature_gds_bound(&k, &cfg).unwrap();
        assert_eq!(c.conclusion.unwrap().claim.value, 0.into());
    }
}

#[test]
fn certificates_reverify_after_serialization() {
    let mut certs = vec![];
    for (g, n) in [(0, 0), (1, 2), (2, 1)] {
        let f = thm_c_family(g, n).unwrap();
        for r in 0..8 {
            certs.push(certify_no_h1_embedding(&f, r).unwrap());
        }
    }
    for c in certs {
        let back: Certificate = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back.verify().unwrap(), c.status);
        assert_eq!(back, c);
    }
}

#[test]
fn family_descriptors_round_trip() {
    for (g, n) in [(0, 0), (2, 3)] {
        let f = thm_c_family(g, n).unwrap();
        let back: FamilyDescriptor =
            serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }
    assert_eq!(
        serde_json::to_string(&CertifiedValue::exact(int(3))).unwrap(),
        r#"{"exact":"3"}"#
    );
}
