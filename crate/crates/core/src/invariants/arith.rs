//! Integer helpers: trial-division factorisation, exact logarithms and
//! base-`p` digit sums.

/// Prime factorisation `n = ∏ p^k` in increasing order of `p`.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p as u64, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n as u128) == [(n, 1)]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p as u128) {
        n /= p as u128;
        part *= p as u128;
    }
    part
}

/// `k` with `p^k = n`, if `n` is a power of `p`.
pub fn exact_log(mut n: u128, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Sum of the base-`p` digits of `x`.
pub fn digit_sum(mut x: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut s = 0;
    while x > 0 {
        s += x % p;
        x /= p;
    }
    s
}

/// Whether every prime divisor of `n` lies in `pi`.
pub fn is_pi_number(n: u128, pi: &[u64]) -> bool {
    prime_divisors(n).iter().all(|p| pi.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisation_and_logs() {
        assert_eq!(factorize(7200), vec![(2, 5), (3, 2), (5, 2)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(prime_divisors(30), vec![2, 3, 5]);
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(exact_log(81, 3), Some(4));
        assert_eq!(exact_log(12, 2), None);
        assert!(is_pi_number(12, &[2, 3]) && !is_pi_number(10, &[2, 3]));
    }

    #[test]
    fn digit_sums() {
        assert_eq!(digit_sum(5, 2), 2);
        assert_eq!(digit_sum(9, 3), 1);
        assert_eq!(digit_sum(0, 7), 0);
        assert_eq!(digit_sum(2, 3), 2);
    }
}
