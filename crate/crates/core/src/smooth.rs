//! The flat-glued bump family and its building blocks.
//!
//! Everything here is built from the classic flat function
//! `flat_exp(s) = exp(-1/s)` for `s > 0`, `0` otherwise: a smooth ramp
//! [`ramp`] that rises from 0 to 1 over `(0, t/4)`, the bump [`bump`]
//! with support `(t/2, 3t/2)` and plateau `[3t/4, 5t/4]`, and the
//! normalized step [`smooth_step`] used by the tail-curve turns.
//!
//! The quotient `f(s) / (f(s) + f(t/4 - s))` is evaluated in the
//! algebraically equivalent form `1 / (1 + exp(1/s - 1/(t/4 - s)))`.
//! Both exponentials in the naive quotient underflow to 0 for small `t`,
//! leaving 0/0; the rewritten form saturates to exact 0 and 1 instead,
//! which also makes the flat branches of the bump exact in binary64.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Highest derivative order carried by the closed-form tower of
/// [`flat_exp_deriv`].
pub const FLAT_DERIV_MAX_ORDER: u32 = 8;

/// The flat function: `0` for `s <= 0`, `exp(-1/s)` for `s > 0`.
///
/// Monotone nondecreasing, with every derivative vanishing at 0. For
/// subnormal-small `s > 0` the result underflows to exact 0, which sits
/// on the correct side of the limit.
pub fn flat_exp(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else {
        (-s.recip()).exp()
    }
}

fn deriv_polys() -> &'static [Vec<i64>] {
    static POLYS: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    POLYS.get_or_init(|| {
        // p_0 = 1, p_{k+1}(u) = u^2 (p_k(u) - p_k'(u)); coefficients stay
        // small integers (max |c| ~ 1.5e5 at k = 8).
        let mut polys: Vec<Vec<i64>> = vec![vec![1]];
        for _ in 0..FLAT_DERIV_MAX_ORDER {
            let p = polys.last().expect("nonempty");
            let mut q = vec![0i64; p.len() + 2];
            for (i, &c) in p.iter().enumerate() {
                q[i + 2] += c;
                if i > 0 {
                    q[i + 1] -= c * i as i64;
                }
            }
            polys.push(q);
        }
        polys
    })
}

/// Exact `k`-th derivative of [`flat_exp`]: `p_k(1/s) exp(-1/s)` for
/// `s > 0` and `0` for `s <= 0`, with the polynomials `p_k` built once
/// from the recurrence `p_{k+1} = u^2 (p_k - p_k')`.
///
/// Rejects `k > FLAT_DERIV_MAX_ORDER`.
pub fn flat_exp_deriv(s: f64, k: u32) -> Result<f64> {
    if k > FLAT_DERIV_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: k,
            expected: "0..=8",
        });
    }
    if s <= 0.0 {
        return Ok(0.0);
    }
    let u = s.recip();
    let e = (-u).exp();
    if e == 0.0 {
        // Underflowed: u^(2k) * e is 0 analytically but would be inf * 0.
        return Ok(0.0);
    }
    let poly = &deriv_polys()[k as usize];
    let mut acc = 0.0;
    for &c in poly.iter().rev() {
        acc = acc * u + c as f64;
    }
    Ok(acc * e)
}

/// Core of the stable quotient: `f(a) / (f(a) + f(b))` for `a, b` not
/// both on a flat branch, via `1 / (1 + exp(1/a - 1/b))`.
///
/// Saturation of `exp` yields exact 0 / exact 1 at the ends. If `1/a`
/// itself overflows (subnormal `a`) the value is pinned to the flat
/// limit on that side so the function never returns NaN.
fn stable_quotient(a: f64, b: f64) -> f64 {
    let ia = a.recip();
    let ib = b.recip();
    if ia.is_infinite() {
        return 0.0;
    }
    if ib.is_infinite() {
        return 1.0;
    }
    1.0 / (1.0 + (ia - ib).exp())
}

/// Normalized smooth step: `0` for `u <= 0`, `1` for `u >= 1`, strictly
/// increasing in between, with `smooth_step(u) + smooth_step(1-u) = 1`.
pub fn smooth_step(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else {
        stable_quotient(u, 1.0 - u)
    }
}

/// Smooth ramp for family parameter `t`: exactly `0` for `s <= 0`,
/// exactly `1` for `s >= t/4`, and the stable quotient in between.
///
/// Rejects `t` outside `(0, 1]`.
pub fn ramp(t: f64, s: f64) -> Result<f64> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            range: "(0, 1]",
        });
    }
    let quarter = 0.25 * t;
    Ok(if s <= 0.0 {
        0.0
    } else if s >= quarter {
        1.0
    } else {
        stable_quotient(s, quarter - s)
    })
}

/// The bump `ramp(t, s - t/2) * ramp(t, 3t/2 - s)` for `t` in `(0, 1]`,
/// and identically `0` for `t = 0`.
///
/// Exactly 0 outside `(t/2, 3t/2)`, exactly 1 on `[3t/4, 5t/4]`; in
/// particular `bump(t, t) == 1` for every `t > 0`.
pub fn bump(t: f64, s: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            range: "[0, 1]",
        });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let rising = ramp(t, s - 0.5 * t)?;
    if rising == 0.0 {
        return Ok(0.0);
    }
    let falling = ramp(t, 1.5 * t - s)?;
    Ok(rising * falling)
}
