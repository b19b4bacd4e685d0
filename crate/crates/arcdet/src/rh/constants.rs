//! Stored constants and their self-check oracles.

use crate::dd::Dd;

/// zeta'(-1) = 1/12 - ln A (A the Glaisher-Kinkelin constant), stored to
/// 20 digits. Checked against [`zeta_prime_minus_one_oracle`] in the test
/// suite so a typo here cannot survive.
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.16542114370045092921;

/// The gap-expansion constant term `c_0 = (1/12) ln 2 + 3 zeta'(-1)`.
pub fn dyson_c0() -> f64 {
    std::f64::consts::LN_2 / 12.0 + 3.0 * ZETA_PRIME_MINUS_ONE
}

/// Euler-Maclaurin evaluation of `zeta'(-1)`, independent of the stored
/// constant: `ln A = lim [sum_{k<=N} k ln k - (N^2/2 + N/2 + 1/12) ln N
/// + N^2/4]` with the `1/(720 N^2)` and `1/(5040 N^4)` tail corrections,
/// summed in double-double so the check is meaningful at 1e-12.
pub fn zeta_prime_minus_one_oracle() -> f64 {
    let n = 400usize;
    let mut sum = Dd::ZERO;
    for k in 1..=n {
        let kd = Dd::from_f64(k as f64);
        sum += kd * kd.ln();
    }
    let nd = Dd::from_f64(n as f64);
    let n2 = nd * nd;
    let half = Dd::from_f64(0.5);
    let twelfth = Dd::ONE / Dd::from_f64(12.0);
    let ln_a = sum - (n2 * half + nd * half + twelfth) * nd.ln() + n2 / Dd::from_f64(4.0)
        - Dd::ONE / (Dd::from_f64(720.0) * n2)
        + Dd::ONE / (Dd::from_f64(5040.0) * n2 * n2);
    (twelfth - ln_a).to_f64()
}
