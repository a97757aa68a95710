//! Gauss–Legendre quadrature rules.
//!
//! Nodes are the roots of the Legendre polynomial P_n, found by Newton
//! iteration from the Chebyshev initial guess; weights follow from the
//! derivative. Rules are cached per order since the integrals in this crate
//! reuse a fixed ladder of orders.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Orders used by the refinement ladder: doubled until two successive
/// estimates agree.
pub(crate) const ORDER_LADDER: [usize; 10] = [8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096];

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let deriv = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, deriv)
}

/// Nodes and weights of the n-point rule on [-1, 1].
fn build_rule(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    let half = n.div_ceil(2);
    for i in 0..half {
        // Chebyshev-like initial guess for the i-th positive-side root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_deriv(n, x);
            deriv = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.push((x, w));
        if !(n % 2 == 1 && i == half - 1) {
            rule.push((-x, w));
        }
    }
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

type Rule = Arc<Vec<(f64, f64)>>;

fn cache() -> &'static Mutex<HashMap<usize, Rule>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Rule>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rule(n: usize) -> Rule {
    let mut guard = cache().lock().expect("gauss rule cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(build_rule(n)))
        .clone()
}

/// n-point Gauss–Legendre estimate of ∫_a^b f.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let rule = rule(n);
    let mut sum = 0.0;
    for &(x, w) in rule.iter() {
        sum += w * f(mid + half * x);
    }
    half * sum
}
