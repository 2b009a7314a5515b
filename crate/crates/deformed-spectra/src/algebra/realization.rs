use super::coefficient::Coefficient;
use super::operator::DiffOperator;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RealizationError {
    #[error("z = 0 is the classical algebra; use make_classical_realization")]
    ZeroDeformation,
}

/// Which differential realization a triple came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// sl(2,R): l+, l0, l-.
    Classical,
    /// U_z(sl(2,R)) with real deformation parameter z: j+, j0, j-.
    Deformed,
    /// PT-symmetric realization (z real, operators complex): J+, J0, J-.
    Pt,
}

/// A raising/Cartan/lowering triple in a differential realization.
#[derive(Clone, Debug)]
pub struct Triple {
    pub plus: DiffOperator,
    pub zero: DiffOperator,
    pub minus: DiffOperator,
    pub kind: Realization,
    pub z: f64,
    pub lambda: f64,
}

/// phi_w(x) = (e^{2wx} - 1)/w, with the w -> 0 limit 2x.
fn phi(w: Complex64) -> Coefficient {
    if w.norm() == 0.0 {
        Coefficient::var_x().scale(Complex64::new(2.0, 0.0))
    } else {
        Coefficient::new(
            move |x| ((2.0 * w * x).exp() - 1.0) / w,
            move |x| 2.0 * (2.0 * w * x).exp(),
            move |x| 4.0 * w * (2.0 * w * x).exp(),
        )
    }
}

/// psi_w(x) = (e^{2wx} + 1)/2, with the w -> 0 limit 1.
fn psi(w: Complex64) -> Coefficient {
    Coefficient::new(
        move |x| ((2.0 * w * x).exp() + 1.0) / 2.0,
        move |x| w * (2.0 * w * x).exp(),
        move |x| 2.0 * w * w * (2.0 * w * x).exp(),
    )
}

/// The deformed generators for a complex deformation parameter w:
///   j+ = x,
///   j0 = phi_w d/dx - lambda psi_w,
///   j- = -(phi_w/2) d^2/dx^2 + lambda psi_w d/dx - (lambda^2 w^2/8) phi_w.
fn deformed_generators(w: Complex64, lambda: f64) -> (DiffOperator, DiffOperator, DiffOperator) {
    let lam = Complex64::new(lambda, 0.0);
    let plus = DiffOperator::multiplication(Coefficient::var_x());
    let zero = DiffOperator::new(vec![psi(w).scale(-lam), phi(w)]).expect("order 1");
    let minus = DiffOperator::new(vec![
        phi(w).scale(-lam * lam * w * w / 8.0),
        psi(w).scale(lam),
        phi(w).scale(Complex64::new(-0.5, 0.0)),
    ])
    .expect("order 2");
    (plus, zero, minus)
}

/// Classical sl(2,R): l+ = x, l0 = 2x d/dx - lambda, l- = -x d^2/dx^2 + lambda d/dx.
pub fn make_classical_realization(lambda: f64) -> Triple {
    let (plus, zero, minus) = deformed_generators(Complex64::new(0.0, 0.0), lambda);
    Triple {
        plus,
        zero,
        minus,
        kind: Realization::Classical,
        z: 0.0,
        lambda,
    }
}

/// The non-standard deformation with real z != 0.
pub fn make_deformed_realization(z: f64, lambda: f64) -> Result<Triple, RealizationError> {
    if z == 0.0 {
        return Err(RealizationError::ZeroDeformation);
    }
    let (plus, zero, minus) = deformed_generators(Complex64::new(z, 0.0), lambda);
    Ok(Triple {
        plus,
        zero,
        minus,
        kind: Realization::Deformed,
        z,
        lambda,
    })
}

/// PT-symmetric realization: J+ = -i j+^(-iz), J0 = j0^(-iz), J- = i j-^(-iz).
/// At z = 0 this is the usual PT-symmetric sl(2,R) representation.
pub fn make_pt_realization(z: f64, lambda: f64) -> Triple {
    let w = Complex64::new(0.0, -z);
    let (plus, zero, minus) = deformed_generators(w, lambda);
    let i = Complex64::new(0.0, 1.0);
    Triple {
        plus: plus.scale(-i),
        zero,
        minus: minus.scale(i),
        kind: Realization::Pt,
        z,
        lambda,
    }
}

/// Multiplication operator exp(s * 2 z J+) for the triple's own J+ content
/// (x for the deformed realization, -ix for the PT one). `s = 1` gives
/// e^{2 z j+}, `s = -1` gives e^{-2 z j+}.
pub fn exp_of_jplus(triple: &Triple, s: f64) -> DiffOperator {
    let c = match triple.kind {
        Realization::Pt => Complex64::new(0.0, -2.0 * s * triple.z),
        _ => Complex64::new(2.0 * s * triple.z, 0.0),
    };
    DiffOperator::multiplication(Coefficient::exp_cx(c))
}

/// Multiplication operator (e^{2 z J+} - 1)/z, continuous at z = 0 where it
/// becomes 2 J+.
pub fn phi_of_jplus(triple: &Triple) -> DiffOperator {
    match triple.kind {
        Realization::Pt => {
            let w = Complex64::new(0.0, -triple.z);
            // (e^{2 w x} - 1)/z = -i phi_w for z != 0; at z = 0 this is -2ix = 2 J+.
            DiffOperator::multiplication(phi(w).scale(Complex64::new(0.0, -1.0)))
        }
        _ => DiffOperator::multiplication(phi(Complex64::new(triple.z, 0.0))),
    }
}
