//! Hilbert symbols and Hasse invariants of diagonal rational forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Splits `n = p^v * u` with `p` not dividing `u`.
fn split(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    let mut u = n.clone();
    let mut v = 0;
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

/// Legendre symbol `(u/p)` for an odd prime `p` not dividing `u`.
fn legendre(u: &BigInt, p: &BigInt) -> i32 {
    let e = (p - 1u32) / 2u32;
    let r = u.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_p` for nonzero integers and a prime `p`.
pub fn hilbert_symbol_int(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let (alpha, u) = split(a, p);
    let (beta, v) = split(b, p);
    let two = BigInt::from(2);
    if *p == two {
        let eps = |x: &BigInt| ((x - 1u32) / 2u32).mod_floor(&two);
        let omega = |x: &BigInt| ((x * x - 1u32) / 8u32).mod_floor(&two);
        let e = eps(&u) * eps(&v) + BigInt::from(alpha) * omega(&v) + BigInt::from(beta) * omega(&u);
        if e.is_even() {
            1
        } else {
            -1
        }
    } else {
        let mut s = 1;
        let eps_p = ((p - 1u32) / 2u32).is_odd();
        if alpha % 2 == 1 && beta % 2 == 1 && eps_p {
            s = -s;
        }
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

/// Hilbert symbol at the real place.
pub fn hilbert_symbol_real(a: &BigInt, b: &BigInt) -> i32 {
    if a.is_negative() && b.is_negative() {
        -1
    } else {
        1
    }
}

/// A rational is replaced by `num * den`, which has the same square class.
fn square_class_int(x: &BigRational) -> BigInt {
    x.numer() * x.denom()
}

pub fn hilbert_symbol(a: &BigRational, b: &BigRational, p: &BigInt) -> i32 {
    hilbert_symbol_int(&square_class_int(a), &square_class_int(b), p)
}

/// Hasse invariant `prod_{i<j} (a_i, a_j)_p` of a diagonal form.
pub fn hasse_invariant(diag: &[BigRational], p: &BigInt) -> i32 {
    let ints: Vec<BigInt> = diag.iter().map(square_class_int).collect();
    let mut c = 1;
    for i in 0..ints.len() {
        for j in i + 1..ints.len() {
            c *= hilbert_symbol_int(&ints[i], &ints[j], p);
        }
    }
    c
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Distinct prime factors of a nonzero integer.
pub fn prime_factors(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::Factorization("0".into()));
    }
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= limit {
        if (&m % &p).is_zero() {
            out.push(p.clone());
            while (&m % &p).is_zero() {
                m /= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(out);
    }
    let mut stack = vec![m];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if is_probable_prime(&x) {
            out.push(x);
            continue;
        }
        let f = pollard_rho(&x).ok_or_else(|| Error::Factorization(x.to_string()))?;
        stack.push(&x / &f);
        stack.push(f);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Miller-Rabin with the first twelve prime bases, deterministic below 3.3e24.
fn is_probable_prime(n: &BigInt) -> bool {
    let bases = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if *n < BigInt::from(2) {
        return false;
    }
    for b in bases {
        let b = BigInt::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d /= 2u32;
        s += 1;
    }
    'outer: for b in bases {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..64 {
        let f = |x: &BigInt| (x * x + c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let mut steps = 0u64;
        while d.is_one() && steps < 10_000_000 {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
            steps += 1;
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

/// Convenience for small integers.
pub fn hilbert_i64(a: i64, b: i64, p: i64) -> i32 {
    hilbert_symbol_int(&BigInt::from(a), &BigInt::from(b), &BigInt::from(p))
}

/// Primes at which the Hilbert symbol of two nonzero integers can be nontrivial.
pub fn relevant_primes(a: &BigInt, b: &BigInt) -> Result<Vec<BigInt>> {
    let mut ps = prime_factors(&(a * b * 2))?;
    ps.sort();
    ps.dedup();
    Ok(ps)
}
