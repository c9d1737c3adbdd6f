//! Independent oracles: brute-force enumeration, classical recurrences and
//! numeric power-series expansion at rational points. None of these share
//! code paths with the routes they check.

use degenstir::deg_stirling::{deg_stirling2, deg_stirling2_via_s1};
use degenstir::degenerate::{
    build_deg_power, chu_vandermonde_lambda, deg_binom, deg_falling, sample_points,
};
use degenstir::difference::{delta, delta_at_zero, delta_power, newton_expand};
use degenstir::euler_bernoulli::{bernoulli_poly, deg_bernoulli, deg_euler_higher, euler_poly};
use degenstir::gf_oracle::{coefficients, SeriesFamily};
use degenstir::rational::{binomial, factorial, from_bigint, int, ratio, Rational};
use degenstir::stirling::{falling_factorial, stirling1, stirling2};
use degenstir::whitney::{deg_whitney, whitney, WhitneyParams};
use degenstir::MultiPoly;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Counts set partitions of `{0..n}` into exactly `k` blocks by restricted
/// growth strings.
fn count_partitions(n: usize, k: usize) -> u64 {
    fn go(i: usize, n: usize, used: usize, k: usize) -> u64 {
        if i == n {
            return (used == k) as u64;
        }
        let mut total = 0;
        for b in 0..=used.min(k) {
            if b < k {
                total += go(i + 1, n, used.max(b + 1), k);
            }
        }
        total
    }
    if n == 0 {
        return (k == 0) as u64;
    }
    go(0, n, 0, k)
}

#[test]
fn stirling2_matches_partition_enumeration() {
    assert_eq!(count_partitions(3, 2), 3);
    assert_eq!(count_partitions(4, 2), 7);
    for n in 0..=8 {
        for k in 0..=8 {
            assert_eq!(
                stirling2(n, k),
                int(count_partitions(n as usize, k as usize) as i64),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn stirling1_matches_falling_factorial_expansion() {
    // Expand x(x-1)...(x-n+1) by repeated multiplication, independent of the recurrence.
    for n in 0..=12u32 {
        let mut coeffs = vec![Rational::one()];
        for i in 0..n {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (d, c) in coeffs.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * int(i as i64);
            }
            coeffs = next;
        }
        for k in 0..=n {
            assert_eq!(stirling1(n, k), coeffs[k as usize], "n={n} k={k}");
        }
    }
}

#[test]
fn power_basis_expansion() {
    for n in 0..=10 {
        let sum: MultiPoly = (0..=n)
            .map(|l| falling_factorial(l).scale(&stirling2(n, l)))
            .sum();
        assert_eq!(sum, MultiPoly::x().pow(n), "n={n}");
    }
}

#[test]
fn log_and_exp_generating_functions() {
    for k in 0..=8 {
        let s1 = coefficients(SeriesFamily::Stirling1 { k }, 12).unwrap();
        let s2 = coefficients(SeriesFamily::Stirling2 { k }, 12).unwrap();
        for n in 0..=12u32 {
            assert_eq!(s1[n as usize], MultiPoly::constant(stirling1(n, k)));
            assert_eq!(s2[n as usize], MultiPoly::constant(stirling2(n, k)));
        }
    }
}

#[test]
fn normalized_delta_at_zero() {
    for n in 0..=12 {
        for k in 0..=12 {
            let raw = delta_at_zero(k, n);
            assert_eq!(raw / from_bigint(factorial(k)), stirling2(n, k));
        }
    }
}

#[test]
fn delta_pascal_recursion() {
    let x = MultiPoly::x();
    for m in 1..=10 {
        for k in 1..=m {
            let lhs = delta_power(k, m + 1);
            let rhs = &(&x * &delta_power(k, m))
                + &(&delta_power(k, m) + &delta_power(k - 1, m)).scale(&int(k as i64));
            assert_eq!(lhs, rhs, "k={k} m={m}");
        }
    }
}

fn x_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..=10, -20i64..=20, 1i64..=5), 0..8)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(d, p, q)| ((d, 0), ratio(p, q)))))
}

proptest! {
    #[test]
    fn newton_round_trip(f in x_poly()) {
        let e = newton_expand(&f).unwrap();
        prop_assert_eq!(e.reconstruct(), f);
    }

    #[test]
    fn delta_is_linear(f in x_poly(), g in x_poly()) {
        prop_assert_eq!(delta(&(&f + &g)), &delta(&f) + &delta(&g));
        // Term-by-term: Δ of the sum of monomials equals the sum of delta_power.
        let termwise: MultiPoly = f
            .terms()
            .map(|(&(d, _), c)| delta_power(1, d).scale(c))
            .sum();
        prop_assert_eq!(delta(&f), termwise);
    }

    #[test]
    fn deg_falling_at_lambda_zero(p in -5i64..=5, q in 1i64..=4, with_x in any::<bool>(), n in 0u32..=10) {
        let mut a = MultiPoly::constant(ratio(p, q));
        if with_x {
            a = &a + &MultiPoly::x();
        }
        let at0 = deg_falling(&a, n).specialize(None, Some(&int(0)));
        prop_assert_eq!(at0, a.pow(n));
    }

    #[test]
    fn deg_power_is_multiplicative(ap in -4i64..=4, ax in -2i64..=2, bp in -4i64..=4, bq in 1i64..=3) {
        let a = &MultiPoly::x().scale(&int(ax)) + &MultiPoly::from_int(ap);
        let b = MultiPoly::constant(ratio(bp, bq));
        let prod = build_deg_power(&a, 12).mul(&build_deg_power(&b, 12)).unwrap();
        prop_assert_eq!(prod, build_deg_power(&(&a + &b), 12));
    }
}

/// Ordinary power series over Q truncated at `n`, used to expand the
/// degenerate exponential numerically at a fixed rational `l != 0`.
fn ops_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len()];
    for i in 0..a.len() {
        for j in 0..a.len() - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// `(1 + l t)^e` for rational `e` via the generalized binomial series.
fn ops_binomial_power(e: &Rational, lam: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Rational::one();
    for i in 0..=n {
        out.push(c.clone() * num_traits::pow(lam.clone(), i));
        c = c * (e - int(i as i64)) / int(i as i64 + 1);
    }
    out
}

fn egf_coeff(ops: &[Rational], n: usize) -> Rational {
    &ops[n] * from_bigint(factorial(n as u32))
}

#[test]
fn degenerate_stirling_numeric_oracle() {
    let lambdas = [ratio(1, 2), ratio(-1, 3), int(2)];
    let xs = [int(0), ratio(3, 5), int(-2)];
    let n_max = 8;
    for lam in &lambdas {
        for xv in &xs {
            let base = ops_binomial_power(&(xv / lam), lam, n_max);
            let mut inner = ops_binomial_power(&lam.recip(), lam, n_max);
            inner[0] -= Rational::one();
            let mut power = base.clone();
            for k in 0..=n_max as u32 {
                let kf = from_bigint(factorial(k));
                for n in 0..=n_max as u32 {
                    let want = egf_coeff(&power, n as usize) / &kf;
                    let got = deg_stirling2(n, k).eval(xv, lam);
                    assert_eq!(got, want, "n={n} k={k} x={xv} l={lam}");
                    assert_eq!(deg_stirling2_via_s1(n, k).eval(xv, lam), want);
                }
                power = ops_mul(&power, &inner);
            }
        }
    }
}

#[test]
fn degenerate_whitney_numeric_oracle() {
    let n_max = 7;
    for lam in [ratio(1, 3), int(-1)] {
        for (m, r) in [(1u32, 0u32), (2, 1), (3, 2)] {
            let p = WhitneyParams::new(m, r).unwrap();
            let base = ops_binomial_power(&(int(r as i64) / &lam), &lam, n_max);
            let mut inner = ops_binomial_power(&(int(m as i64) / &lam), &lam, n_max);
            inner[0] -= Rational::one();
            let mut power = base;
            for k in 0..=n_max as u32 {
                let norm = from_bigint(factorial(k)) * num_traits::pow(int(m as i64), k as usize);
                for n in 0..=n_max as u32 {
                    let want = egf_coeff(&power, n as usize) / &norm;
                    let got = deg_whitney(n, k, p).eval(&int(0), &lam);
                    assert_eq!(got, want, "n={n} k={k} m={m} r={r} l={lam}");
                }
                power = ops_mul(&power, &inner);
            }
        }
    }
}

/// `B_n` from `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
fn bernoulli_numbers(n_max: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = (0..n)
            .map(|k| from_bigint(binomial(n + 1, k)) * &b[k as usize])
            .fold(Rational::zero(), |a, c| a + c);
        b.push(-s / int(n as i64 + 1));
    }
    b
}

#[test]
fn bernoulli_recurrence_oracle() {
    let b = bernoulli_numbers(12);
    assert_eq!(b[2], ratio(1, 6));
    assert_eq!(b[4], ratio(-1, 30));
    for n in 0..=12 {
        // B_n(x) = sum_k C(n, k) B_k x^(n-k)
        let want = MultiPoly::from_terms(
            (0..=n).map(|k| ((n - k, 0), from_bigint(binomial(n, k)) * &b[k as usize])),
        );
        assert_eq!(bernoulli_poly(n), want, "n={n}");
    }
}

#[test]
fn euler_polynomial_reflection() {
    // E_n(x) + E_n(x + 1) = 2 x^n, an identity independent of the series route.
    let x1 = &MultiPoly::x() + &MultiPoly::one();
    for n in 0..=10 {
        let e = euler_poly(n);
        let shifted: MultiPoly = e.terms().map(|(&(d, _), c)| x1.pow(d).scale(c)).sum();
        assert_eq!(&e + &shifted, MultiPoly::x().pow(n).scale(&int(2)), "n={n}");
    }
}

#[test]
fn degenerate_families_reduce_to_classical() {
    let zero = int(0);
    for n in 0..=12 {
        assert_eq!(
            deg_bernoulli(n).specialize(None, Some(&zero)),
            bernoulli_poly(n)
        );
        assert_eq!(
            deg_euler_higher(n, 1).specialize(None, Some(&zero)),
            euler_poly(n)
        );
    }
}

#[test]
fn vandermonde_on_rational_slices() {
    let x = MultiPoly::x();
    for n in 0..=10 {
        for y in sample_points(n as usize + 1) {
            let (l, r) = chu_vandermonde_lambda(&x, &MultiPoly::constant(y), n);
            assert_eq!(l, r, "n={n}");
        }
    }
    let (l, r) = chu_vandermonde_lambda(&x, &x, 2);
    assert_eq!(r, deg_binom(&x.scale(&int(2)), 2));
    assert_eq!(r.to_string(), "2*x^2 - l*x");
    assert_eq!(l, r);
}

#[test]
fn whitney_basis_expansion_by_hand() {
    let p = WhitneyParams::new(2, 1).unwrap();
    assert_eq!(whitney(1, 1, p), int(1));
    assert_eq!(whitney(1, 0, p), int(1));
    assert_eq!(whitney(2, 1, p), int(4));
    assert_eq!(deg_whitney(2, 1, p).to_string(), "4 - l");
}
