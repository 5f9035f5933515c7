//! Elementary integer arithmetic: sieving, factoring, orders, primitive roots
//! and the Kronecker symbol.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, f))` when `n = p^f` with `p` prime and `f ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, f)] => Some((*p, *f)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Multiplicative order of `a` modulo `m`; `a` must be a unit. Order mod 1 is 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert!(gcd(a % m.max(1), m) == 1 || m == 1, "{a} is not a unit mod {m}");
    if m == 1 {
        return 1;
    }
    let phi = euler_phi(m);
    let mut order = phi;
    for (q, _) in factorize(phi) {
        while order.is_multiple_of(q) && mod_pow(a, order / q, m) == 1 {
            order /= q;
        }
    }
    order
}

/// Least primitive root modulo `p^e` for an odd prime `p`.
pub fn primitive_root_odd_prime_power(p: u64, e: u32) -> u64 {
    assert!(p > 2 && is_prime(p));
    let factors = factorize(p - 1);
    let g =
        (2..p).find(|&g| factors.iter().all(|&(q, _)| mod_pow(g, (p - 1) / q, p) != 1)).expect("primitive root exists");
    if e >= 2 && mod_pow(g, p - 1, p * p) == 1 {
        g + p
    } else {
        g
    }
}

/// Primes strictly below `bound`, by the sieve of Eratosthenes.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound <= 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n];
    let mut i = 2;
    while i * i < n {
        if !composite[i] {
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// Chinese remainder: the `x mod m1*m2` with `x ≡ a1 (m1)`, `x ≡ a2 (m2)`,
/// for coprime moduli.
pub fn crt_pair(a1: u64, m1: u64, a2: u64, m2: u64) -> u64 {
    debug_assert_eq!(gcd(m1, m2), 1);
    let m = m1 as i128 * m2 as i128;
    let (_, u, _) = ext_gcd(m1 as i128, m2 as i128);
    // x = a1 + m1 * ((a2 - a1) * u mod m2)
    let t = ((a2 as i128 - a1 as i128) * u).rem_euclid(m2 as i128);
    ((a1 as i128 + m1 as i128 * t).rem_euclid(m)) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(a/n)` for arbitrary integers, including `n = 2`,
/// even `n` and negative `n`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1;
    let mut m = n.unsigned_abs();
    if n < 0 && a < 0 {
        result = -result;
    }
    let twos = m.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let r = a.rem_euclid(8);
        if twos % 2 == 1 && (r == 3 || r == 5) {
            result = -result;
        }
        m >>= twos;
    }
    if m == 1 {
        return result;
    }
    result * jacobi(a, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sieve_small() {
        assert_eq!(primes_below(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_below(2), Vec::<u64>::new());
        assert_eq!(primes_below(10_000).len(), 1229);
    }

    #[test]
    fn factor_and_phi() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(multiplicative_order(3, 8), 2);
        assert_eq!(primitive_root_odd_prime_power(7, 1), 3);
        for &(p, e) in &[(3u64, 3u32), (5, 2), (487, 2)] {
            let m = p.pow(e);
            let g = primitive_root_odd_prime_power(p, e);
            assert_eq!(multiplicative_order(g, m), euler_phi(m));
        }
    }

    #[test]
    fn crt_combines() {
        let x = crt_pair(2, 3, 3, 5);
        assert_eq!(x % 3, 2);
        assert_eq!(x % 5, 3);
        assert!(x < 15);
    }

    #[test]
    fn kronecker_special_cases() {
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(17, 2), 1);
        assert_eq!(kronecker(-1, -1), -1);
        assert_eq!(kronecker(3, 0), 0);
        assert_eq!(kronecker(1, 0), 1);
    }

    fn small_prime() -> impl Strategy<Value = u64> {
        proptest::sample::select(primes_below(2000)[1..].to_vec())
    }

    proptest! {
        #[test]
        fn quadratic_reciprocity(p in small_prime(), q in small_prime()) {
            prop_assume!(p != q);
            let lhs = kronecker(p as i64, q as i64) * kronecker(q as i64, p as i64);
            let sign = if ((p - 1) / 2) * ((q - 1) / 2) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(lhs, sign);
        }

        #[test]
        fn supplementary_laws(p in small_prime()) {
            let minus_one = if p % 4 == 1 { 1 } else { -1 };
            prop_assert_eq!(kronecker(-1, p as i64), minus_one);
            let two = if p % 8 == 1 || p % 8 == 7 { 1 } else { -1 };
            prop_assert_eq!(kronecker(2, p as i64), two);
        }

        #[test]
        fn euler_criterion(p in small_prime(), a in -5000i64..5000) {
            let e = mod_pow(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
            let expected = if a.rem_euclid(p as i64) == 0 { 0 } else if e == 1 { 1 } else { -1 };
            prop_assert_eq!(kronecker(a, p as i64), expected);
        }

        #[test]
        fn kronecker_multiplicative_in_top(a in -300i64..300, b in -300i64..300, n in -400i64..400) {
            prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        }

        #[test]
        fn kronecker_multiplicative_in_bottom(a in -300i64..300, m in 1i64..300, n in 1i64..300) {
            prop_assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
        }
    }
}
