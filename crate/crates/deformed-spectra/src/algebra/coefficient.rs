use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

type CoefFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A coefficient function of a linear differential operator: a complex-valued
/// function of a real variable together with its first two analytic
/// derivatives.
///
/// Derivatives are supplied at construction so that operator composition and
/// similarity conjugation stay closed-form; finite differences are only used
/// as a self-test (see [`Coefficient::derivative_self_check`]).
#[derive(Clone)]
pub struct Coefficient {
    eval: CoefFn,
    deriv1: CoefFn,
    deriv2: CoefFn,
    structurally_zero: bool,
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient(zero={})", self.structurally_zero)
    }
}

impl Coefficient {
    pub fn new<F, G, H>(eval: F, deriv1: G, deriv2: H) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
        G: Fn(f64) -> Complex64 + Send + Sync + 'static,
        H: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            eval: Arc::new(eval),
            deriv1: Arc::new(deriv1),
            deriv2: Arc::new(deriv2),
            structurally_zero: false,
        }
    }

    pub fn zero() -> Self {
        let mut c = Self::constant(Complex64::new(0.0, 0.0));
        c.structurally_zero = true;
        c
    }

    pub fn constant(value: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(move |_| value, move |_| z, move |_| z)
    }

    pub fn real_constant(value: f64) -> Self {
        Self::constant(Complex64::new(value, 0.0))
    }

    /// The identity function x -> x.
    pub fn var_x() -> Self {
        Self::new(
            |x| Complex64::new(x, 0.0),
            |_| Complex64::new(1.0, 0.0),
            |_| Complex64::new(0.0, 0.0),
        )
    }

    /// exp(c x) for complex c.
    pub fn exp_cx(c: Complex64) -> Self {
        Self::new(
            move |x| (c * x).exp(),
            move |x| c * (c * x).exp(),
            move |x| c * c * (c * x).exp(),
        )
    }

    pub fn is_structurally_zero(&self) -> bool {
        self.structurally_zero
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        (self.eval)(x)
    }

    pub fn deriv1(&self, x: f64) -> Complex64 {
        (self.deriv1)(x)
    }

    pub fn deriv2(&self, x: f64) -> Complex64 {
        (self.deriv2)(x)
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        if self.structurally_zero {
            return other.clone();
        }
        if other.structurally_zero {
            return self.clone();
        }
        let (a, b) = (self.clone(), other.clone());
        let (a1, b1) = (self.clone(), other.clone());
        let (a2, b2) = (self.clone(), other.clone());
        Coefficient::new(
            move |x| a.eval(x) + b.eval(x),
            move |x| a1.deriv1(x) + b1.deriv1(x),
            move |x| a2.deriv2(x) + b2.deriv2(x),
        )
    }

    /// Product with derivatives by the Leibniz rule.
    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        if self.structurally_zero || other.structurally_zero {
            return Coefficient::zero();
        }
        let (a, b) = (self.clone(), other.clone());
        let (a1, b1) = (self.clone(), other.clone());
        let (a2, b2) = (self.clone(), other.clone());
        Coefficient::new(
            move |x| a.eval(x) * b.eval(x),
            move |x| a1.deriv1(x) * b1.eval(x) + a1.eval(x) * b1.deriv1(x),
            move |x| {
                a2.deriv2(x) * b2.eval(x)
                    + 2.0 * a2.deriv1(x) * b2.deriv1(x)
                    + a2.eval(x) * b2.deriv2(x)
            },
        )
    }

    pub fn scale(&self, factor: Complex64) -> Coefficient {
        if self.structurally_zero || factor == Complex64::new(0.0, 0.0) {
            return Coefficient::zero();
        }
        let (a, a1, a2) = (self.clone(), self.clone(), self.clone());
        Coefficient::new(
            move |x| factor * a.eval(x),
            move |x| factor * a1.deriv1(x),
            move |x| factor * a2.deriv2(x),
        )
    }

    /// Reciprocal 1/f with derivatives -f'/f^2 and (2f'^2 - f f'')/f^3.
    pub fn recip(&self) -> Coefficient {
        let (a, a1, a2) = (self.clone(), self.clone(), self.clone());
        Coefficient::new(
            move |x| 1.0 / a.eval(x),
            move |x| -a1.deriv1(x) / (a1.eval(x) * a1.eval(x)),
            move |x| {
                let f = a2.eval(x);
                let f1 = a2.deriv1(x);
                let f2 = a2.deriv2(x);
                (2.0 * f1 * f1 - f * f2) / (f * f * f)
            },
        )
    }

    /// Max relative error of the stored derivatives against central finite
    /// differences of `eval` over the probe points.
    pub fn derivative_self_check(&self, probes: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for &x in probes {
            let h = 1e-5 * (1.0 + x.abs());
            let fp = (self.eval(x + h) - self.eval(x - h)) / (2.0 * h);
            let fpp = (self.eval(x + h) - 2.0 * self.eval(x) + self.eval(x - h)) / (h * h);
            let s1 = self.deriv1(x).norm().max(1.0);
            let s2 = self.deriv2(x).norm().max(1.0);
            worst = worst
                .max((fp - self.deriv1(x)).norm() / s1)
                .max((fpp - self.deriv2(x)).norm() / s2);
        }
        worst
    }
}
