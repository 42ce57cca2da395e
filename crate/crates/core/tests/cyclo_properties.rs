use mtc_core::cyclo::{dft, field::gcd, inverse_dft, Cyclotomic, Rational};
use mtc_core::dataio::parse_expr;
use num_complex::Complex64;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::from_signeds(n, d))
}

/// A random element of Q(zeta_n) for some `n <= max_order`, with a few
/// nonzero coefficients.
fn cyclotomic(max_order: u32) -> impl Strategy<Value = Cyclotomic> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec((0..n as usize, rational()), 0..5).prop_map(move |terms| {
            let mut coeffs = vec![Rational::from(0); n as usize];
            for (i, q) in terms {
                coeffs[i] += q;
            }
            Cyclotomic::from_coeffs(n, &coeffs).unwrap()
        })
    })
}

/// Naive float evaluation of the same power-basis coefficients.
fn float_eval(x: &Cyclotomic) -> Complex64 {
    let n = x.order() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(k, q)| {
            let text = q.to_string();
            let v = match text.split_once('/') {
                Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
                None => text.parse::<f64>().unwrap(),
            };
            Complex64::from_polar(v, 2.0 * std::f64::consts::PI * k as f64 / n)
        })
        .sum()
}

fn approx(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Orders stay small enough that the lcm of three never passes the cap.
    #[test]
    fn ring_axioms(x in cyclotomic(20), y in cyclotomic(20), z in cyclotomic(20)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &Cyclotomic::zero(), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn inverse_is_exact(x in cyclotomic(30)) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        prop_assert!((&x * &inv).is_one());
    }

    #[test]
    fn float_agreement(x in cyclotomic(100), y in cyclotomic(100)) {
        let fx = float_eval(&x);
        let fy = float_eval(&y);
        prop_assert!(approx((&x * &y).to_complex(), fx * fy));
        prop_assert!(approx((&x + &y).to_complex(), fx + fy));
        prop_assert!(approx(x.conj().to_complex(), fx.conj()));
    }

    #[test]
    fn embed_then_descend(x in cyclotomic(40), f in 1u32..=4) {
        let n = x.order();
        let big = x.embed(n * f).unwrap();
        prop_assert_eq!(big.descend(n).unwrap(), x.clone());
        let m = x.minimal_order();
        prop_assert_eq!(x.descend(m).unwrap(), x);
    }

    #[test]
    fn galois_composition(x in cyclotomic(40), k1 in 1i64..200, k2 in 1i64..200) {
        let m = x.order();
        prop_assume!(gcd(k1 as u64, m as u64) == 1 && gcd(k2 as u64, m as u64) == 1);
        let lhs = x.galois_apply(k2, m).unwrap().galois_apply(k1, m).unwrap();
        let rhs = x.galois_apply((k1 * k2) % m as i64, m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation(x in cyclotomic(50), y in cyclotomic(50)) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        let m = x.order();
        prop_assert_eq!(x.galois_apply(-1, m).unwrap(), x.conj());
    }

    #[test]
    fn print_parse_roundtrip(x in cyclotomic(100)) {
        let text = x.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), x);
    }

    #[test]
    fn dft_roundtrip(v in prop::collection::vec(rational(), 1..=12)) {
        let x: Vec<Cyclotomic> = v.iter().map(Cyclotomic::from_rational).collect();
        prop_assert_eq!(inverse_dft(&dft(&x).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(dft(&inverse_dft(&x).unwrap()).unwrap(), x);
    }
}

#[test]
fn descend_examples() {
    let minus_one = Cyclotomic::from_integer(-1).embed(12).unwrap();
    assert_eq!(minus_one.descend(1).unwrap(), Cyclotomic::from_integer(-1));
    let z12 = |k| Cyclotomic::root_of_unity(12, k).unwrap();
    assert_eq!(z12(2).descend(6).unwrap(), Cyclotomic::root_of_unity(6, 1).unwrap());
    assert!(matches!(
        z12(1).descend(6),
        Err(mtc_core::Error::Descent { target: 6, .. })
    ));
}
