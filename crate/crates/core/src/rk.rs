//! Embedded Dormand–Prince 5(4) integrator with per-step cubic Hermite
//! dense output. Fixed four-component state, enough for the orbit system
//! (z, dz/ds, x/a, accumulated action gain).

pub(crate) type State = [f64; 4];

fn axpy(y: &State, scale: f64, k: &State) -> State {
    [
        y[0] + scale * k[0],
        y[1] + scale * k[1],
        y[2] + scale * k[2],
        y[3] + scale * k[3],
    ]
}

/// One accepted step: left node, step size, states and derivatives at both
/// ends. Hermite interpolation reconstructs the solution inside.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Step {
    pub s: f64,
    pub h: f64,
    pub y0: State,
    pub f0: State,
    pub y1: State,
    pub f1: State,
}

impl Step {
    /// Cubic Hermite value at fraction `theta` in [0, 1] of the step.
    pub fn interpolate(&self, theta: f64) -> State {
        let mut out = [0.0; 4];
        for (i, value) in out.iter_mut().enumerate() {
            let dy = self.y1[i] - self.y0[i];
            let c2 = 3.0 * dy - self.h * (2.0 * self.f0[i] + self.f1[i]);
            let c3 = -2.0 * dy + self.h * (self.f0[i] + self.f1[i]);
            *value = self.y0[i] + self.h * theta * self.f0[i] + theta * theta * (c2 + theta * c3);
        }
        out
    }
}

pub(crate) struct Dopri5<'a> {
    rhs: &'a dyn Fn(&State) -> State,
    rel_tol: f64,
    abs_tol: f64,
}

pub(crate) enum StepOutcome {
    Accepted(Step),
    MaxStepsExceeded,
}

const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B5: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

impl<'a> Dopri5<'a> {
    pub fn new(rhs: &'a dyn Fn(&State) -> State, tol: f64) -> Self {
        Dopri5 {
            rhs,
            rel_tol: tol,
            abs_tol: tol,
        }
    }

    fn stages(&self, y: &State, h: f64) -> ([State; 7], State) {
        let f = self.rhs;
        let k1 = f(y);
        let k2 = f(&axpy(y, h * A2[0], &k1));
        let k3 = f(&{
            let mut t = axpy(y, h * A3[0], &k1);
            t = axpy(&t, h * A3[1], &k2);
            t
        });
        let k4 = f(&{
            let mut t = axpy(y, h * A4[0], &k1);
            t = axpy(&t, h * A4[1], &k2);
            t = axpy(&t, h * A4[2], &k3);
            t
        });
        let k5 = f(&{
            let mut t = axpy(y, h * A5[0], &k1);
            t = axpy(&t, h * A5[1], &k2);
            t = axpy(&t, h * A5[2], &k3);
            t = axpy(&t, h * A5[3], &k4);
            t
        });
        let k6 = f(&{
            let mut t = axpy(y, h * A6[0], &k1);
            t = axpy(&t, h * A6[1], &k2);
            t = axpy(&t, h * A6[2], &k3);
            t = axpy(&t, h * A6[3], &k4);
            t = axpy(&t, h * A6[4], &k5);
            t
        });
        // 5th-order solution; its derivative is the FSAL stage k7
        let mut y5 = *y;
        for (i, k) in [&k1, &k2, &k3, &k4, &k5, &k6].into_iter().enumerate() {
            y5 = axpy(&y5, h * B5[i], k);
        }
        let k7 = f(&y5);
        ([k1, k2, k3, k4, k5, k6, k7], y5)
    }

    /// Advance one accepted step from (s, y), adapting h; returns the step
    /// and the suggested next h.
    pub fn step(&self, s: f64, y: &State, h_try: f64, max_attempts: usize) -> (StepOutcome, f64) {
        let mut h = h_try;
        for _ in 0..max_attempts {
            let (k, y5) = self.stages(y, h);
            let mut err_norm = 0.0f64;
            for i in 0..4 {
                let mut e = 0.0;
                for (j, kj) in k.iter().enumerate() {
                    let b5 = if j < 6 { B5[j] } else { 0.0 };
                    e += (b5 - B4[j]) * kj[i];
                }
                e *= h;
                let scale = self.abs_tol + self.rel_tol * y[i].abs().max(y5[i].abs());
                err_norm = err_norm.max((e / scale).abs());
            }
            if err_norm <= 1.0 {
                let step = Step {
                    s,
                    h,
                    y0: *y,
                    f0: k[0],
                    y1: y5,
                    f1: k[6],
                };
                let grow = (0.9 * err_norm.max(1e-10).powf(-0.2)).min(5.0);
                return (StepOutcome::Accepted(step), h * grow);
            }
            let shrink = (0.9 * err_norm.powf(-0.2)).max(0.2);
            h *= shrink;
        }
        (StepOutcome::MaxStepsExceeded, h)
    }
}
