use bicrank_core::asymptotics::{
    bessel_argument, check_asymptotic, dedekind_sum, error_bound, kotesovec_estimate, main_coeff,
    main_term, root_of_unity_main,
};
use bicrank_core::bicrank::diff_series;
use bicrank_core::{Integer, Modulus, Rational};
use rug::Float;

#[test]
fn dedekind_reciprocity() {
    for c in 2..=60u64 {
        for d in 1..c {
            if Integer::from(d).gcd(&Integer::from(c)) != 1 {
                continue;
            }
            let lhs = dedekind_sum(d as i64, c).unwrap() + dedekind_sum(c as i64, d).unwrap();
            let rhs = Rational::from((-1, 4))
                + (Rational::from((c, d)) + Rational::from((d, c)) + Rational::from((1, c * d)))
                    / 12u32;
            assert_eq!(lhs, rhs, "d = {d}, c = {c}");
        }
    }
}

#[test]
fn exponential_sums_are_real() {
    let prec = 128;
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 8));
    for modulus in [Modulus::Three, Modulus::Four] {
        for kp in 1..=4 {
            for n in 0..=24 {
                let s = root_of_unity_main(modulus, kp, n, prec).unwrap();
                assert!(s.imag.clone().abs() < tol, "{modulus} k'={kp} n={n}");
            }
        }
    }
}

#[test]
fn closed_forms_match_exponential_sums() {
    for (modulus, period) in [(Modulus::Three, 3), (Modulus::Four, 8)] {
        for n in 0..2 * period {
            for c in main_coeff(modulus, n, 160).unwrap() {
                let s = root_of_unity_main(modulus, c.kprime, n, 160).unwrap();
                let err = Float::with_val(160, &s.real - &c.value).abs();
                assert!(err < 1e-40, "{modulus} n={n} k'={}", c.kprime);
            }
        }
    }
}

#[test]
fn main_coefficient_sign_patterns() {
    for n in 0..48u64 {
        let c = main_coeff(Modulus::Three, n, 64).unwrap();
        assert_eq!(c[0].value > 0, n % 3 != 1);
        let c = main_coeff(Modulus::Four, n, 64).unwrap();
        let nonzero: Vec<_> = c.iter().filter(|c| !c.value.is_zero()).collect();
        assert_eq!(nonzero.len(), 1, "n = {n}");
        let positive = n % 4 == 3 || n % 8 == 0 || n % 8 == 2;
        assert_eq!(nonzero[0].value > 0, positive, "n = {n}");
    }
}

#[test]
fn error_bound_increases() {
    for modulus in [Modulus::Three, Modulus::Four] {
        let mut prev = error_bound(modulus, 1, 64).unwrap();
        for n in 2..=10_000 {
            let b = error_bound(modulus, n, 64).unwrap();
            assert!(b > prev, "{modulus} n = {n}");
            prev = b;
        }
    }
}

#[test]
fn small_cases() {
    let arg = bessel_argument(Modulus::Three, 1, 1, 128);
    assert!((arg.to_f64() - 1.1581).abs() < 1e-3);
    let m = main_term(Modulus::Four, 2, 128).unwrap();
    assert!(m > 0);
    let r = check_asymptotic(Modulus::Three, 5, &Integer::new(), 192).unwrap();
    assert!(r.passed());
}

#[test]
fn kotesovec_ratio_near_one() {
    let d2 = diff_series(Modulus::Two, 2000);
    for (n, lo, hi) in [(100usize, 0.9, 1.0), (2000, 0.95, 1.05)] {
        let est = kotesovec_estimate(n as u64, 192).unwrap();
        let ratio = Float::with_val(192, d2.coeff(n)) / est;
        let r = ratio.to_f64();
        assert!(r > lo && r < hi, "n = {n}: ratio {r}");
    }
}
