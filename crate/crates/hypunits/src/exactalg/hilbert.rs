//! Hilbert symbols (a,b)_p over Q, used to decide whether a rational
//! quaternion algebra splits at every place.

use crate::Rat;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

/// Squarefree integer representing the square class of a nonzero rational.
pub fn square_class(r: &Rat) -> i64 {
    let n = r.numer() * r.denom(); // same class as n/d
    let mut m = n.to_i64().unwrap_or_else(|| {
        // fall back through BigInt factor removal first
        big_square_class(&n)
    });
    let neg = m < 0;
    m = m.abs();
    let mut out = 1i64;
    let mut p = 2i64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out *= m;
    if neg {
        -out
    } else {
        out
    }
}

fn big_square_class(n: &BigInt) -> i64 {
    // strip square factors of small primes, then demand the rest fits
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= m && p < limit {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= m;
    if n.is_negative() {
        out = -out;
    }
    out.to_i64().expect("square class exceeds i64; inputs out of supported range")
}

fn odd_primes_of(mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    n = n.abs();
    let mut p = 3i64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 2;
    }
    while n % 2 == 0 {
        n /= 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn legendre(mut a: i64, p: i64) -> i64 {
    a %= p;
    if a < 0 {
        a += p;
    }
    if a == 0 {
        return 0;
    }
    // Euler criterion by fast exponentiation mod p
    let mut result = 1i128;
    let mut base = a as i128 % p as i128;
    let mut e = (p - 1) / 2;
    let m = p as i128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if result == m - 1 {
        -1
    } else {
        result as i64
    }
}

/// Hilbert symbol (a,b)_p for squarefree nonzero integers a, b and an odd
/// prime p.
fn hilbert_odd(a: i64, b: i64, p: i64) -> i64 {
    let (mut alpha, mut u) = (0, a);
    while u % p == 0 {
        u /= p;
        alpha += 1;
    }
    let (mut beta, mut v) = (0, b);
    while v % p == 0 {
        v /= p;
        beta += 1;
    }
    let eps = ((p - 1) / 2) % 2; // (-1)^eps = (-1|p)
    let mut sym = if (alpha * beta * eps) % 2 == 1 { -1 } else { 1 };
    if beta % 2 == 1 {
        sym *= legendre(u, p);
    }
    if alpha % 2 == 1 {
        sym *= legendre(v, p);
    }
    sym
}

fn hilbert_two(a: i64, b: i64) -> i64 {
    let (mut alpha, mut u) = (0, a);
    while u % 2 == 0 {
        u /= 2;
        alpha += 1;
    }
    let (mut beta, mut v) = (0, b);
    while v % 2 == 0 {
        v /= 2;
        beta += 1;
    }
    let eps = |x: i64| (((x - 1) / 2) % 2 + 2) % 2; // (x-1)/2 mod 2 for odd x
    let omega = |x: i64| (((x * x - 1) / 8) % 2 + 2) % 2; // (x^2-1)/8 mod 2
    let exp = (eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)) % 2;
    if exp == 1 {
        -1
    } else {
        1
    }
}

/// Hilbert symbol (a,b)_v at the place v; `None` means the infinite place.
pub fn hilbert_symbol(a: i64, b: i64, place: Option<i64>) -> i64 {
    assert!(a != 0 && b != 0);
    match place {
        None => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Some(2) => hilbert_two(a, b),
        Some(p) => hilbert_odd(a, b, p),
    }
}

/// All places where the quaternion algebra (a,b/Q) could ramify: infinity, 2,
/// and the odd primes dividing a or b (after squarefree reduction).
pub fn relevant_places(a: i64, b: i64) -> Vec<Option<i64>> {
    let mut places = vec![None, Some(2)];
    let mut odd: Vec<i64> = odd_primes_of(a);
    for p in odd_primes_of(b) {
        if !odd.contains(&p) {
            odd.push(p);
        }
    }
    odd.sort_unstable();
    places.extend(odd.into_iter().map(Some));
    places
}

/// True when (a,b/Q) is split at every place, i.e. isomorphic to M2(Q).
pub fn splits_everywhere(a: &Rat, b: &Rat) -> bool {
    let a = square_class(a);
    let b = square_class(b);
    relevant_places(a, b).into_iter().all(|v| hilbert_symbol(a, b, v) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn square_classes() {
        assert_eq!(square_class(&rat(18)), 2);
        assert_eq!(square_class(&rat(-4)), -1);
        assert_eq!(square_class(&ratio(1, 2)), 2);
        assert_eq!(square_class(&ratio(-27, 4)), -3);
    }

    #[test]
    fn hamilton_quaternions_ramify() {
        // (-1,-1) ramifies exactly at 2 and infinity
        assert_eq!(hilbert_symbol(-1, -1, None), -1);
        assert_eq!(hilbert_symbol(-1, -1, Some(2)), -1);
        assert_eq!(hilbert_symbol(-1, -1, Some(3)), 1);
        assert_eq!(hilbert_symbol(-1, -1, Some(5)), 1);
        assert!(!splits_everywhere(&rat(-1), &rat(-1)));
    }

    #[test]
    fn split_algebra() {
        // (1, b) is always split
        assert!(splits_everywhere(&rat(1), &rat(-1)));
        // (a, -a) is split for every a
        assert!(splits_everywhere(&rat(3), &rat(-3)));
        assert!(splits_everywhere(&rat(-6), &rat(6)));
        // (2, 3): (2,3)_3 = (2|3) = -1, so not split
        assert!(!splits_everywhere(&rat(2), &rat(3)));
    }

    #[test]
    fn product_formula_samples() {
        // the number of ramified places is always even
        for (a, b) in [(-1, -1), (2, 3), (-1, 3), (5, 7), (-2, -5), (6, 15)] {
            let a = square_class(&rat(a));
            let b = square_class(&rat(b));
            let ramified = relevant_places(a, b)
                .into_iter()
                .filter(|&v| hilbert_symbol(a, b, v) == -1)
                .count();
            assert_eq!(ramified % 2, 0, "odd ramification for ({}, {})", a, b);
        }
    }

    #[test]
    fn legendre_small() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(2, 3), -1);
        assert_eq!(legendre(4, 5), 1);
    }
}
