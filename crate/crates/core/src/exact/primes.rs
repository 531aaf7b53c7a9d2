//! Deterministic primality and small-prime enumeration.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Deterministic Miller-Rabin for `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be exact for every `n < 3.3 * 10^24`, so in particular for all of `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for unbounded input.
///
/// Values that fit in `u64` use Miller-Rabin with a proven witness set;
/// larger values fall back on trial division up to the square root. The
/// fallback is deterministic but slow, which is acceptable: every prime this
/// artifact certifies is far below the `u64` range.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    if (n % &two) == BigUint::ZERO || (n % &three) == BigUint::ZERO {
        return false;
    }
    // wheel over 6k +- 1
    let mut d = BigUint::from(5u32);
    let mut step = two.clone();
    while &d * &d <= *n {
        if (n % &d) == BigUint::ZERO {
            return false;
        }
        d += &step;
        step = if step == two { BigUint::from(4u32) } else { two.clone() };
    }
    true
}

/// All primes `<= max` by a plain sieve of Eratosthenes.
pub fn primes_up_to(max: u64) -> Vec<u64> {
    if max < 2 {
        return Vec::new();
    }
    let n = max as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}
