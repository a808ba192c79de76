use super::laurent::LaurentPoly;
use super::poly::Poly;

/// Möbius function, by trial division.
pub fn moebius(mut n: u64) -> i8 {
    assert!(n >= 1);
    let mut mu = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `t^n - 1` as a dense polynomial.
pub fn t_pow_minus_one(n: u64) -> Poly {
    let mut c = vec![0i64; n as usize + 1];
    c[0] = -1;
    c[n as usize] = 1;
    Poly::from_ints(&c)
}

/// The n-th cyclotomic polynomial, `Φ_n = ∏_{d | n} (t^d - 1)^{μ(n/d)}`.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = Poly::one();
    let mut den = Poly::one();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    let phi = num.exact_div(&den).expect("cyclotomic quotient is exact");
    LaurentPoly::from_poly(0, &phi)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64
}

/// Prime powers `p^k` (k ≥ 1) up to `bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    (2..=bound)
        .filter(|&n| {
            let p = (2..=n).find(|p| n % p == 0).unwrap();
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            m == 1
        })
        .collect()
}
