use mtc_core::cyclo::recognize;
use mtc_core::dataio::{catalog, CATALOG_NAMES};
use mtc_core::{
    braid_jm_spectrum, braid_jm_spectrum_with, gfs_matrix, nu2_direct, rotation_report, sigma3_spectrum_n2,
    sigma_spectrum_n2, sl2_word, CenterData, Crossing, Cyclotomic, FusionRing, IndicatorEngine, Matrix,
    ModularData, ObjectMultiset, RootConvention, RootOfUnity,
};
use proptest::prelude::*;

const SMALL: [&str; 4] = ["vec", "semion", "toric-code", "fibonacci"];

fn fixture(name: &str) -> (ModularData, FusionRing) {
    let md = catalog(name).unwrap();
    let fr = FusionRing::verlinde(&md).unwrap();
    (md, fr)
}

#[test]
fn every_catalog_entry_validates() {
    for name in CATALOG_NAMES {
        let md = catalog(name).unwrap();
        let report = md.validate();
        assert!(report.passed(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
        assert!(md.reverse().validate().passed(), "{name} reversed");
    }
}

#[test]
fn fusion_rules_and_dimensions() {
    for name in CATALOG_NAMES {
        let (md, fr) = fixture(name);
        fr.check_axioms().unwrap();
        let dims = md.derive_invariants().unwrap().dims;
        let r = md.rank();
        // d_a d_b = sum_c N^c_{a,b} d_c
        for a in 0..r {
            for b in 0..r {
                let mut rhs = Cyclotomic::zero();
                for (c, d) in dims.iter().enumerate() {
                    let n = fr.n(c, a, b) as i64;
                    rhs = &rhs + &d.scale(&n.into());
                }
                assert_eq!(&dims[a] * &dims[b], rhs, "{name}: d_{a} d_{b}");
            }
        }
    }
}

#[test]
fn center_structure() {
    for name in CATALOG_NAMES {
        let md = catalog(name).unwrap();
        let cd = CenterData::of(&md).unwrap();
        let r = md.rank();
        assert_eq!(cd.rank(), r * r);
        assert!(cd.central_charge().is_one());
        let base = md.derive_invariants().unwrap();
        let z = cd.md().derive_invariants().unwrap();
        assert_eq!(z.global_dim, &base.global_dim * &base.global_dim, "{name}");
        for a in 0..r {
            for b in 0..r {
                let i = cd.pair_index(a, b);
                assert_eq!(cd.pair(i), (a, b));
                assert_eq!(z.dims[i], &base.dims[a] * &base.dims[b]);
                assert_eq!(cd.theta(i), md.theta()[a] * md.theta()[b].inv());
            }
        }
        // The unit of Z forgets to the unit, and the column sums reproduce
        // sum_(a,b) N^c_{a,b} d_a d_b = d_c D^2.
        let u = cd.pair_index(md.unit(), md.unit());
        for c in 0..r {
            assert_eq!(cd.forget(u, c), u64::from(c == md.unit()));
            let mut lhs = Cyclotomic::zero();
            for i in 0..cd.rank() {
                let k = cd.forget(i, c) as i64;
                lhs = &lhs + &z.dims[i].scale(&k.into());
            }
            assert_eq!(lhs, &base.dims[c] * &base.global_dim, "{name}: column {c}");
        }
    }
}

#[test]
fn small_centers_validate_exactly() {
    for name in SMALL {
        let cd = CenterData::of(&catalog(name).unwrap()).unwrap();
        let report = cd.md().validate();
        assert!(report.passed(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn kronecker_s_matches_full_s() {
    for name in SMALL {
        let cd = CenterData::of(&catalog(name).unwrap()).unwrap();
        let a = cd.forget_matrix();
        assert_eq!(cd.apply_s(&a).unwrap(), cd.md().s().try_mul(&a).unwrap(), "{name}");
    }
}

#[test]
fn indicator_routes_agree() {
    for name in SMALL {
        let (md, fr) = fixture(name);
        let cd = CenterData::of(&md).unwrap();
        let engine = IndicatorEngine::new(&cd);
        let r = md.rank();
        let v21 = gfs_matrix(&cd, 2, 1).unwrap();
        for c in 0..r {
            for b in 0..r {
                for a in 0..r {
                    let i = cd.pair_index(c, b);
                    assert_eq!(v21.get(i, a), &nu2_direct(&md, &fr, c, b, a), "{name}");
                }
            }
        }
        for n in 1..=4u32 {
            for k in 1..n as i64 {
                if mtc_core::cyclo::field::gcd(k as u64, n as u64) != 1 {
                    continue;
                }
                let table = gfs_matrix(&cd, n as i64, k).unwrap();
                for b in 0..cd.rank() {
                    for a in 0..r {
                        let x = ObjectMultiset::simple(r, a);
                        assert_eq!(&engine.nu(b, n, k, &x).unwrap(), table.get(b, a), "{name} n={n} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn indicator_periodicity_and_gcd_reduction() {
    for name in SMALL {
        let md = catalog(name).unwrap();
        let cd = CenterData::of(&md).unwrap();
        let engine = IndicatorEngine::new(&cd);
        let r = md.rank();
        for b in 0..cd.rank() {
            for a in 0..r {
                let x = ObjectMultiset::simple(r, a);
                for (m, l) in [(2, 1), (3, 1), (3, 2)] {
                    let base = engine.nu(b, m, l, &x).unwrap();
                    for k in [-2i64, -1, 1, 2] {
                        let shifted = engine.nu(b, m, l + k * m as i64, &x).unwrap();
                        let tw = cd.theta(b).pow(-k);
                        assert_eq!(shifted, base.mul_root(tw.order(), tw.exponent() as i64).unwrap());
                    }
                }
                let sq = cd.base_ring().power_multiset(&x, 2);
                assert_eq!(engine.nu(b, 4, 2, &x).unwrap(), engine.nu(b, 2, 1, &sq).unwrap());
            }
        }
    }
}

#[test]
fn classical_frobenius_schur_indicators() {
    // On the unit of Z the second indicator is the classical one: 0 unless a
    // is self-dual, otherwise +1 or -1. The semion is the only one here that
    // is pseudo-real.
    let expected: [(&str, &[i64]); 4] = [
        ("vec", &[1]),
        ("semion", &[1, -1]),
        ("toric-code", &[1, 1, 1, 1]),
        ("fibonacci", &[1, 1]),
    ];
    for (name, values) in expected {
        let md = catalog(name).unwrap();
        let cd = CenterData::of(&md).unwrap();
        let engine = IndicatorEngine::new(&cd);
        let u = cd.pair_index(md.unit(), md.unit());
        for (a, &v) in values.iter().enumerate() {
            let x = ObjectMultiset::simple(md.rank(), a);
            assert_eq!(engine.nu(u, 2, 1, &x).unwrap(), Cyclotomic::from_integer(v), "{name} {a}");
            assert_eq!(engine.nu(u, 1, 1, &x).unwrap(), Cyclotomic::from_integer(i64::from(a == md.unit())));
        }
    }
}

#[test]
fn rotation_spectra_are_convention_independent() {
    for name in SMALL {
        let md = catalog(name).unwrap();
        let cd = CenterData::of(&md).unwrap();
        let canonical = IndicatorEngine::new(&cd);
        let shifted = IndicatorEngine::with_convention(&cd, RootConvention::Shifted);
        for a in 0..md.rank() {
            for n in 1..=4 {
                let x = rotation_report(&canonical, a, n).unwrap();
                let y = rotation_report(&shifted, a, n).unwrap();
                assert_eq!(x, y, "{name} a={a} n={n}");
                for row in &x.rows {
                    assert_eq!(row.total(), row.hom_dim);
                    for e in &row.entries {
                        assert_eq!(e.eigenvalue.pow(n as i64), cd.theta(row.index).inv());
                    }
                }
            }
        }
    }
}

#[test]
fn jucys_murphy_rows_sum_to_hom_dimensions() {
    for name in SMALL {
        let (md, fr) = fixture(name);
        let cd = CenterData::of(&md).unwrap();
        let engine = IndicatorEngine::new(&cd);
        for a in 0..md.rank() {
            for n in 1..=4u32 {
                for lm in 0..n {
                    for l in 0..=lm {
                        let report = braid_jm_spectrum_with(&engine, a, n, l, lm - l).unwrap();
                        for row in &report.rows {
                            assert_eq!(row.total(), fr.hom_dim(row.index, a, n));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dedicated_routes_match_the_center_route() {
    for name in SMALL {
        let (md, fr) = fixture(name);
        for a in 0..md.rank() {
            let s = sigma_spectrum_n2(&md, &fr, a).unwrap();
            let s_jm = braid_jm_spectrum(&md, a, 2, 0, 0, Crossing::Over).unwrap();
            assert_eq!(s.rows, s_jm.rows, "{name}");
            let s3 = sigma3_spectrum_n2(&md, &fr, a).unwrap();
            let s3_jm = braid_jm_spectrum(&md, a, 3, 1, 0, Crossing::Over).unwrap();
            for (x, y) in s3.rows.iter().zip(&s3_jm.rows) {
                assert_eq!(x.hom_dim, y.hom_dim);
                for e in &x.entries {
                    assert_eq!(e.multiplicity, y.multiplicity_of(e.eigenvalue));
                }
            }
        }
    }
}

#[test]
fn under_crossing_inverts_eigenvalues() {
    // A braid and its mirror act on the same hom space by inverse operators.
    for name in CATALOG_NAMES.into_iter().filter(|n| *n != "haagerup-center") {
        let md = catalog(name).unwrap();
        for a in 0..md.rank() {
            for (n, l, m) in [(2, 0, 0), (3, 1, 0), (3, 0, 1), (3, 0, 0)] {
                let over = braid_jm_spectrum(&md, a, n, l, m, Crossing::Over).unwrap();
                let under = braid_jm_spectrum(&md, a, n, l, m, Crossing::Under).unwrap();
                for (x, y) in over.rows.iter().zip(&under.rows) {
                    for e in &x.entries {
                        assert_eq!(e.multiplicity, y.multiplicity_of(e.eigenvalue.inv()), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_sum_rule_on_haagerup() {
    let (md, fr) = fixture("haagerup-center");
    for a in 0..md.rank() {
        let report = sigma_spectrum_n2(&md, &fr, a).unwrap();
        for row in &report.rows {
            assert_eq!(row.total(), fr.hom_dim(row.index, a, 2));
        }
    }
}

#[test]
fn bad_braid_arguments_are_rejected() {
    let md = catalog("semion").unwrap();
    assert!(matches!(braid_jm_spectrum(&md, 0, 2, 1, 1, Crossing::Over), Err(mtc_core::Error::Domain(_))));
    assert!(matches!(braid_jm_spectrum(&md, 5, 2, 0, 0, Crossing::Over), Err(mtc_core::Error::Domain(_))));
}

#[test]
fn gauss_sum_squares_to_thirteen() {
    let g = mtc_core::dataio::sqrt13();
    assert_eq!(&g * &g, Cyclotomic::from_integer(13));
    assert!(recognize(&g).as_count().is_none());
}

fn t_power(t: &Matrix, k: i64) -> Matrix {
    let theta: Vec<RootOfUnity> = (0..t.rows())
        .map(|i| RootOfUnity::from_cyclotomic(t.get(i, i)).unwrap())
        .collect();
    Matrix::identity(t.rows()).scale_rows(&theta, k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sl2_words_hit_their_target(m in -40i64..=40, l in -40i64..=40) {
        prop_assume!(mtc_core::cyclo::field::gcd(m.unsigned_abs(), l.unsigned_abs()) == 1);
        let w = sl2_word(m, l).unwrap();
        prop_assert!(w.verify());
        prop_assert_eq!(w.target(), (m, l));
    }

    #[test]
    fn indicator_table_matches_explicit_word(m in 1i64..=6, l in -6i64..=6) {
        prop_assume!(mtc_core::cyclo::field::gcd(m as u64, l.unsigned_abs()) == 1);
        let md = catalog("semion").unwrap();
        let cd = CenterData::of(&md).unwrap();
        let w = sl2_word(m, l).unwrap();
        let s = cd.md().s().clone();
        let t = cd.md().t_matrix();
        let mut x = cd.forget_matrix();
        for tok in w.tokens().iter().rev() {
            let g = match tok {
                mtc_core::Sl2Token::S => s.clone(),
                mtc_core::Sl2Token::T => t_power(&t, 1),
                mtc_core::Sl2Token::TInv => t_power(&t, -1),
            };
            x = g.try_mul(&x).unwrap();
        }
        prop_assert_eq!(gfs_matrix(&cd, m, l).unwrap().values, x);
    }
}
