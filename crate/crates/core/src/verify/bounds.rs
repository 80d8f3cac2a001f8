//! Numeric bounds in saturating base-2 log space.

use std::cmp::Ordering;

/// Relative slack added to the bound side of every comparison.
pub const SLACK: f64 = 1e-12;

/// Base-2 logarithms at or beyond this are saturated: the value is no longer
/// representable as an `f64`.
pub const SATURATION_LOG2: f64 = 1024.0;

/// The constants of the nilpotent linear group bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundConstants {
    /// `log 288 / log 9`, so that `9^c = 288`.
    pub c_wolf: f64,
    /// `log 32 / log 9`.
    pub wolf_slope: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants {
            c_wolf: 288f64.ln() / 9f64.ln(),
            wolf_slope: 32f64.ln() / 9f64.ln(),
        }
    }
}

pub fn constants() -> BoundConstants {
    BoundConstants::default()
}

/// A positive quantity stored as its base-2 logarithm, or saturated (+∞).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SatLog {
    Finite(f64),
    Saturated,
}

impl SatLog {
    pub const ONE: SatLog = SatLog::Finite(0.0);

    pub fn from_log2(log2: f64) -> SatLog {
        if log2.is_nan() || log2 >= SATURATION_LOG2 {
            SatLog::Saturated
        } else {
            SatLog::Finite(log2)
        }
    }

    pub fn from_int(n: u128) -> SatLog {
        assert!(n > 0, "SatLog holds positive values");
        SatLog::from_log2((n as f64).log2())
    }

    /// `base^exponent`.
    pub fn power(base: u64, exponent: f64) -> SatLog {
        SatLog::from_log2(exponent * (base as f64).log2())
    }

    pub fn log2(self) -> Option<f64> {
        match self {
            SatLog::Finite(l) => Some(l),
            SatLog::Saturated => None,
        }
    }

    pub fn is_saturated(self) -> bool {
        self == SatLog::Saturated
    }

    /// The value itself, when it fits in an `f64`.
    pub fn value(self) -> Option<f64> {
        self.log2().map(f64::exp2).filter(|v| v.is_finite())
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(self, k: f64) -> SatLog {
        debug_assert!(k >= 0.0);
        match self {
            SatLog::Finite(a) => SatLog::from_log2(a * k),
            SatLog::Saturated if k == 0.0 => SatLog::ONE,
            SatLog::Saturated => SatLog::Saturated,
        }
    }

    /// `base^self`.
    pub fn exp_base(self, base: u64) -> SatLog {
        match self.value() {
            Some(v) => SatLog::power(base, v),
            None => SatLog::Saturated,
        }
    }

    /// Whether the integer `n` is at most this bound, with the bound side
    /// widened by [`SLACK`].
    pub fn admits(self, n: u128) -> bool {
        match self {
            SatLog::Saturated => true,
            SatLog::Finite(b) => (n as f64).log2() <= b + SLACK * b.abs().max(1.0),
        }
    }

    /// Whether `n < self`, with the bound side widened by [`SLACK`].
    pub fn strictly_exceeds(self, n: u128) -> bool {
        match self {
            SatLog::Saturated => true,
            SatLog::Finite(b) => (n as f64).log2() < b + SLACK * b.abs().max(1.0),
        }
    }

    /// Printable form for reports.
    pub fn describe(self) -> String {
        match self {
            SatLog::Finite(l) if l < 53.0 => format!("{}", round_sig(l.exp2())),
            SatLog::Finite(l) => format!("2^{}", round_sig(l)),
            SatLog::Saturated => "saturated".to_string(),
        }
    }
}

impl std::ops::Mul for SatLog {
    type Output = SatLog;

    // log-domain: products add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: SatLog) -> SatLog {
        match (self, other) {
            (SatLog::Finite(a), SatLog::Finite(b)) => SatLog::from_log2(a + b),
            _ => SatLog::Saturated,
        }
    }
}

impl std::ops::Div for SatLog {
    type Output = SatLog;

    /// Panics when dividing a finite value by a saturated one.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, other: SatLog) -> SatLog {
        match (self, other) {
            (SatLog::Finite(a), SatLog::Finite(b)) => SatLog::from_log2(a - b),
            (SatLog::Saturated, _) => SatLog::Saturated,
            (SatLog::Finite(_), SatLog::Saturated) => panic!("division by a saturated value"),
        }
    }
}

fn round_sig(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

impl PartialOrd for SatLog {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (SatLog::Finite(a), SatLog::Finite(b)) => a.partial_cmp(b),
            (SatLog::Finite(_), SatLog::Saturated) => Some(Ordering::Less),
            (SatLog::Saturated, SatLog::Finite(_)) => Some(Ordering::Greater),
            (SatLog::Saturated, SatLog::Saturated) => Some(Ordering::Equal),
        }
    }
}

/// `g_0 = 1`, `g_{i+1} = p_max^{c · d_max · g_i}`, for `i` up to `d_sigma`.
pub fn g_sequence(d_max: u32, p_max: u64, d_sigma: u32) -> Vec<SatLog> {
    let c = constants().c_wolf;
    let mut out = vec![SatLog::ONE];
    for _ in 0..d_sigma {
        let last = *out.last().expect("non-empty");
        let next = match last.value() {
            _ if d_max == 0 => SatLog::ONE,
            Some(g) => SatLog::power(p_max, c * d_max as f64 * g),
            None => SatLog::Saturated,
        };
        out.push(next);
    }
    out
}

/// The soluble-case index bound `g · p_max^{d_sigma · g}` with `g = g_{d_sigma}`.
pub fn frattini_index_bound(d_max: u32, p_max: u64, d_sigma: u32) -> SatLog {
    let g = *g_sequence(d_max, p_max, d_sigma).last().expect("non-empty");
    match g.value() {
        Some(v) => g * SatLog::power(p_max, d_sigma as f64 * v),
        None => SatLog::Saturated,
    }
}

/// `index · (d − 1) + 1`.
pub fn schreier_bound(d: u64, index: u64) -> i128 {
    index as i128 * (d as i128 - 1) + 1
}

/// Upper bound for a nilpotent `p′`-subgroup `H` of `GL(n, p^e)`:
/// `|H| ≤ p^{e·n·log32/log9} / 2`.
pub fn wolf_bound(n: u32, e: u32, p: u64) -> SatLog {
    SatLog::power(p, e as f64 * n as f64 * constants().wolf_slope) / SatLog::from_int(2)
}

/// The largest integer admitted by [`wolf_bound`].
pub fn wolf_max_order(n: u32, e: u32, p: u64) -> Option<u128> {
    let v = wolf_bound(n, e, p).value()?;
    let floor = v.floor() as u128;
    Some(if wolf_bound(n, e, p).admits(floor + 1) { floor + 1 } else { floor })
}

/// Case (i) bound on `|G/N|`: `p^{c · d_max} / 2`.
pub fn case_i_bound(p: u64, d_max: u32) -> SatLog {
    SatLog::power(p, constants().c_wolf * d_max as f64) / SatLog::from_int(2)
}

/// Case (i) bound on the complement: `p^{(c − 1) · d_max} / 2`.
pub fn complement_bound(p: u64, d_max: u32) -> SatLog {
    SatLog::power(p, (constants().c_wolf - 1.0) * d_max as f64) / SatLog::from_int(2)
}

/// `p^{e + p^e} (p^{2p^e} − 1) / 2`, the least order of a non-nilpotent image
/// of `SL(2, p^{p^e}) ⋊ ⟨Frobenius⟩`.
pub fn example_image_bound(p: u64, e: u32) -> u128 {
    let p = p as u128;
    let pe = p.pow(e);
    p.pow(e + pe as u32) * (p.pow(2 * pe as u32) - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_their_definitions() {
        let k = constants();
        assert!(k.c_wolf < 8.0 / 3.0);
        assert!(((k.c_wolf * 9f64.ln()).exp() / 288.0 - 1.0).abs() < 1e-9);
        assert!(((k.wolf_slope * 9f64.ln()).exp() / 32.0 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn g_sequence_values() {
        let g = g_sequence(1, 3, 2);
        assert!((g[1].value().unwrap() - 16.97).abs() < 0.01);
        assert!((g[2].log2().unwrap() - 69.3).abs() < 0.1);
        assert!(g_sequence(0, 5, 4).iter().all(|&x| x == SatLog::ONE));
        let h = g_sequence(2, 3, 1);
        assert!((h[1].value().unwrap() - 288.0).abs() < 1e-6);
        let long = g_sequence(2, 5, 6);
        assert!(long.last().unwrap().is_saturated());
    }

    #[test]
    fn schreier_and_wolf() {
        assert_eq!(schreier_bound(2, 4), 5);
        assert_eq!(schreier_bound(1, 7), 1);
        assert_eq!(schreier_bound(3, 2), 5);
        assert_eq!(wolf_max_order(2, 1, 3), Some(16));
        assert_eq!(wolf_max_order(1, 1, 2), Some(1));
        assert!(case_i_bound(3, 2).admits(144) && !case_i_bound(3, 2).admits(145));
        assert!((case_i_bound(3, 1).value().unwrap() - 8.485).abs() < 0.01);
        assert_eq!(example_image_bound(2, 1), 60);
    }

    #[test]
    fn saturation_is_absorbing() {
        let s = SatLog::Saturated;
        assert!((s * SatLog::ONE).is_saturated());
        assert!(SatLog::from_int(u128::MAX) < s);
        assert!(s.admits(u128::MAX));
        assert!(SatLog::from_log2(2000.0).is_saturated());
    }
}
