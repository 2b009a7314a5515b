use num_complex::Complex64;
use std::sync::Arc;

type EvalFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A smooth probe function with analytic derivatives up to fourth order,
/// used to evaluate operator identities pointwise.
#[derive(Clone)]
pub struct TestFunction {
    pub name: &'static str,
    evals: [EvalFn; 5],
}

impl TestFunction {
    pub fn new(name: &'static str, evals: [EvalFn; 5]) -> Self {
        Self { name, evals }
    }

    /// k-th derivative at x, k <= 4.
    pub fn deriv(&self, k: usize, x: f64) -> Complex64 {
        (self.evals[k])(x)
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.deriv(0, x)
    }

    /// Monomial x^p (p <= 4 keeps all stored derivatives exact).
    pub fn monomial(p: u32) -> Self {
        let name = match p {
            0 => "1",
            1 => "x",
            2 => "x^2",
            3 => "x^3",
            _ => "x^4",
        };
        let d = move |k: u32| -> EvalFn {
            Arc::new(move |x: f64| {
                if k > p {
                    return Complex64::new(0.0, 0.0);
                }
                let mut c = 1.0;
                for j in 0..k {
                    c *= (p - j) as f64;
                }
                Complex64::new(c * x.powi((p - k) as i32), 0.0)
            })
        };
        Self::new(name, [d(0), d(1), d(2), d(3), d(4)])
    }

    /// exp(c x) for complex c.
    pub fn exponential(name: &'static str, c: Complex64) -> Self {
        let d = move |k: u32| -> EvalFn {
            Arc::new(move |x: f64| c.powu(k) * (c * x).exp())
        };
        Self::new(name, [d(0), d(1), d(2), d(3), d(4)])
    }

    pub fn sine(omega: f64) -> Self {
        let d = move |k: u32| -> EvalFn {
            Arc::new(move |x: f64| {
                let w = omega.powi(k as i32);
                let v = match k % 4 {
                    0 => (omega * x).sin(),
                    1 => (omega * x).cos(),
                    2 => -(omega * x).sin(),
                    _ => -(omega * x).cos(),
                };
                Complex64::new(w * v, 0.0)
            })
        };
        Self::new("sin", [d(0), d(1), d(2), d(3), d(4)])
    }

    /// Max relative mismatch of stored derivatives against central finite
    /// differences of the next-lower order, over the probe points.
    pub fn chain_self_check(&self, probes: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for &x in probes {
            let h = 1e-5 * (1.0 + x.abs());
            for k in 0..4 {
                let fd = (self.deriv(k, x + h) - self.deriv(k, x - h)) / (2.0 * h);
                let scale = self.deriv(k + 1, x).norm().max(1.0);
                worst = worst.max((fd - self.deriv(k + 1, x)).norm() / scale);
            }
        }
        worst
    }
}

/// The standard battery of five probe functions used by the residual checks.
pub fn standard_battery() -> Vec<TestFunction> {
    vec![
        TestFunction::monomial(0),
        TestFunction::monomial(1),
        TestFunction::monomial(2),
        TestFunction::exponential("exp(x/2)", Complex64::new(0.5, 0.0)),
        TestFunction::sine(1.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_chain_consistency() {
        let probes = [-0.8, -0.1, 0.3, 0.9];
        for f in standard_battery() {
            assert!(
                f.chain_self_check(&probes) < 1e-6,
                "derivative chain of {} inconsistent",
                f.name
            );
        }
    }

    #[test]
    fn monomial_derivatives() {
        let f = TestFunction::monomial(3);
        assert_eq!(f.deriv(1, 2.0), Complex64::new(12.0, 0.0));
        assert_eq!(f.deriv(3, 2.0), Complex64::new(6.0, 0.0));
        assert_eq!(f.deriv(4, 2.0), Complex64::new(0.0, 0.0));
    }
}
