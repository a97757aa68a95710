//! Bracketed scalar root finding shared by the potential and resonance
//! modules: plain bisection, optionally polished by Newton steps when a
//! derivative is available.

/// Bisect `f` on a bracket `[lo, hi]` with `f(lo)` and `f(hi)` of opposite
/// sign, until the bracket width falls below `rel_tol` relative to the
/// midpoint magnitude (with a small absolute floor).
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, rel_tol: f64) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    let f_hi = f(hi);
    if f_hi == 0.0 {
        return hi;
    }
    debug_assert!(f_lo * f_hi < 0.0, "bisect requires a sign-changing bracket");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let scale = mid.abs().max(1e-300);
        if hi - lo <= rel_tol * scale || mid == lo || mid == hi {
            return mid;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    0.5 * (lo + hi)
}

/// Newton-polish a root estimate inside `[lo, hi]`, falling back to the
/// input when an iterate leaves the bracket or the derivative degenerates.
pub(crate) fn polish_newton<F, D>(f: F, df: D, x0: f64, lo: f64, hi: f64, rel_tol: f64) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut x = x0;
    for _ in 0..30 {
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            return x;
        }
        let step = f(x) / d;
        let next = x - step;
        if !(lo..=hi).contains(&next) || !next.is_finite() {
            return x;
        }
        let scale = next.abs().max(1e-300);
        let converged = step.abs() <= rel_tol * scale;
        x = next;
        if converged {
            break;
        }
    }
    x
}
