//! Integer utilities: exact square roots, valuations, primality, factoring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Floor of the square root of a nonnegative integer, by Newton iteration.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x: BigInt = BigInt::one() << ((n.bits() + 1) / 2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// True iff `n` is a perfect square; exact (isqrt then square back).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Remove all factors of p; returns (v, n / p^v).
pub fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let v = valuation(n, p);
    let unit = n / BigInt::from(p).pow(v);
    (v, unit)
}

pub fn modpow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
pub fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Deterministic Miller-Rabin for u64 (the standard 12-witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // n must be odd composite, not a prime power handled elsewhere
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Prime factorization of |n| as sorted (prime, exponent) pairs.
/// Trial division for small factors, Pollard rho beyond.
pub fn factorize(n: &BigInt) -> Vec<(u64, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= BigInt::one() {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut e = 0;
        let pb = BigInt::from(p);
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut rest: Vec<u64> = Vec::new();
    if n > BigInt::one() {
        let n64 = u64::try_from(&n).unwrap_or_else(|_| {
            panic!("factorize: cofactor {n} exceeds u64; inputs of this size are out of scope")
        });
        let mut stack = vec![n64];
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                rest.push(m);
            } else {
                let d = pollard_rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
    }
    rest.sort_unstable();
    for p in rest {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// Simple sieve of Eratosthenes, primes up to and including `bound`.
pub fn primes_up_to(bound: usize) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; bound + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= bound {
        if sieve[i] {
            let mut j = i * i;
            while j <= bound {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

/// Legendre symbol (a/p) for odd prime p: returns 1, -1, or 0.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    let pb = BigInt::from(p);
    let r = a.mod_floor(&pb);
    if r.is_zero() {
        return 0;
    }
    let r64 = u64::try_from(&r).expect("reduced residue fits u64");
    let ls = modpow_u64(r64, (p - 1) / 2, p);
    if ls == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_and_squares() {
        assert_eq!(isqrt(&BigInt::from(0)), BigInt::from(0));
        assert_eq!(isqrt(&BigInt::from(80)), BigInt::from(8));
        assert_eq!(isqrt(&BigInt::from(81)), BigInt::from(9));
        assert!(is_perfect_square(&BigInt::from(81)));
        assert!(!is_perfect_square(&BigInt::from(80)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(5184), 2), 6);
        assert_eq!(valuation(&BigInt::from(5184), 3), 4);
        assert_eq!(valuation(&BigInt::from(-48), 2), 4);
        let (v, u) = split_valuation(&BigInt::from(-48), 2);
        assert_eq!((v, u), (4, BigInt::from(-3)));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(2657));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(5184));
        // strong pseudoprime candidates
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn factoring() {
        assert_eq!(factorize(&BigInt::from(5184)), vec![(2, 6), (3, 4)]);
        assert_eq!(factorize(&BigInt::from(-80)), vec![(2, 4), (5, 1)]);
        assert_eq!(factorize(&BigInt::from(1)), vec![]);
        assert_eq!(factorize(&BigInt::from(229)), vec![(229, 1)]);
        assert_eq!(
            factorize(&BigInt::from(127536)),
            vec![(2, 4), (3, 1), (2657, 1)]
        );
    }

    #[test]
    fn legendre_symbol() {
        assert_eq!(legendre(&BigInt::from(5), 11), 1); // 4^2 = 16 = 5 mod 11
        assert_eq!(legendre(&BigInt::from(2), 3), -1);
        assert_eq!(legendre(&BigInt::from(20), 5), 0);
    }

    #[test]
    fn prime_sieve() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
    }
}
