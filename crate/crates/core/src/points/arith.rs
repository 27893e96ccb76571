//! Square classes of rationals and the sum-of-two-squares criterion.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization as `prime -> exponent`.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    let mut n = n.clone();
    let push = |p: BigUint, out: &mut BTreeMap<BigUint, u32>| *out.entry(p).or_insert(0) += 1;
    for p in [2u64, 3, 5] {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
    }
    // wheel mod 30
    let offsets = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut k = 0;
    while p <= TRIAL_LIMIT && BigUint::from(p * p) <= n {
        if let Some(small) = n.to_u64() {
            if small % p == 0 {
                n = BigUint::from(small / p);
                push(BigUint::from(p), &mut out);
                continue;
            }
        } else {
            let bp = BigUint::from(p);
            if (&n % &bp).is_zero() {
                n /= &bp;
                push(bp, &mut out);
                continue;
            }
        }
        p += offsets[k];
        k = (k + 1) % 8;
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_brent(&m);
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }
    out
}

/// Miller-Rabin with the first twelve primes as bases; deterministic below
/// 3.3e24 and a strong probable-prime test above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let m: u64 = 128;
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Square-free part of a positive integer.
pub fn squarefree_part(n: &BigUint) -> BigUint {
    factorize(n)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p)
}

/// The class of a nonzero rational modulo squares, as a square-free integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SquareClass {
    #[serde(serialize_with = "crate::points::ser_display")]
    pub representative: BigInt,
}

impl std::fmt::Display for SquareClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.representative)
    }
}

pub fn square_class(x: &Rational) -> Result<SquareClass> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let prod = (x.numer() * x.denom()).abs();
    let sf = squarefree_part(&prod.to_biguint().expect("nonnegative"));
    let sign = if x.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok(SquareClass {
        representative: BigInt::from_biguint(sign, sf),
    })
}

/// `x = u^2 + v^2` for rationals `u, v`, with `x != 0`: positive and no
/// prime `3 mod 4` to an odd power.
pub fn is_norm_from_qi(x: &Rational) -> bool {
    if !x.is_positive() {
        return false;
    }
    let prod = (x.numer() * x.denom()).to_biguint().expect("positive");
    let four = BigUint::from(4u32);
    let three = BigUint::from(3u32);
    factorize(&prod)
        .into_iter()
        .all(|(p, e)| e % 2 == 0 || &p % &four != three)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn naive_is_sum_of_two_squares(n: u64) -> bool {
        (0..=n).take_while(|u| u * u <= n).any(|u| {
            let r = n - u * u;
            let v = (r as f64).sqrt() as u64;
            (v.saturating_sub(1)..=v + 1).any(|w| w * w == r)
        })
    }

    #[test]
    fn classes() {
        assert_eq!(square_class(&rat(576)).unwrap().representative, BigInt::from(1));
        assert_eq!(square_class(&rat(-12)).unwrap().representative, BigInt::from(-3));
        assert_eq!(square_class(&ratio(3, 8)).unwrap().representative, BigInt::from(6));
        assert!(matches!(square_class(&rat(0)), Err(Error::ZeroInput)));
    }

    #[test]
    fn norms_match_two_squares_for_integers() {
        assert!(is_norm_from_qi(&rat(5)));
        assert!(!is_norm_from_qi(&rat(3)));
        assert!(!is_norm_from_qi(&rat(-5)));
        for n in 1..400u64 {
            assert_eq!(is_norm_from_qi(&rat(n as i64)), naive_is_sum_of_two_squares(n), "{n}");
        }
        // 1/2 = (1/2)^2 + (1/2)^2
        assert!(is_norm_from_qi(&ratio(1, 2)));
        assert!(!is_norm_from_qi(&ratio(5, 3)));
    }

    #[test]
    fn factorization_beyond_trial_division() {
        let p = BigUint::from(1_000_003u64);
        let q = BigUint::from(1_000_033u64);
        let n = &p * &q * &q;
        let f = factorize(&n);
        assert_eq!(f.get(&p), Some(&1));
        assert_eq!(f.get(&q), Some(&2));
        assert_eq!(squarefree_part(&n), p);
        let big = BigUint::from(2u64.pow(61) - 1) * BigUint::from(1_000_000_007u64);
        let f = factorize(&big);
        assert_eq!(f.len(), 2);
        assert!(is_probable_prime(&BigUint::from(2u64.pow(61) - 1)));
        assert!(!is_probable_prime(&BigUint::from(561u32)));
    }

    #[test]
    fn product_of_factors_is_input() {
        for n in [1u64, 2, 360, 9_999_991, 600_851_475_143] {
            let n = BigUint::from(n);
            let back = factorize(&n)
                .into_iter()
                .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e));
            assert_eq!(back, n);
        }
    }
}
