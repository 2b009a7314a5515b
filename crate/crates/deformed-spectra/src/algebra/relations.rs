use super::operator::{DiffOperator, OperatorError};
use super::realization::{
    exp_of_jplus, make_deformed_realization, make_pt_realization, phi_of_jplus, Triple,
};
use super::test_function::{standard_battery, TestFunction};
use num_complex::Complex64;
use serde::Serialize;

/// Residuals of the deformed commutation relations
///   [j0, j+] = (e^{2 z j+} - 1)/z,
///   [j0, j-] = -2 j- + z j0^2,
///   [j+, j-] = j0,
/// evaluated on a battery of test functions at one point. Returns the max
/// modulus over the battery for each relation. The same formulas cover the
/// classical algebra (z = 0) and the PT realization.
pub fn commutation_residuals(
    triple: &Triple,
    x: f64,
    battery: &[TestFunction],
) -> Result<[f64; 3], OperatorError> {
    let z = triple.z;
    let r1_op = triple
        .zero
        .commutator(&triple.plus)?
        .sub(&phi_of_jplus(triple))?;
    let j0_sq = triple.zero.compose(&triple.zero)?;
    let r2_op = triple
        .zero
        .commutator(&triple.minus)?
        .add(&triple.minus.scale(Complex64::new(2.0, 0.0)))?
        .sub(&j0_sq.scale(Complex64::new(z, 0.0)))?;
    let r3_op = triple.plus.commutator(&triple.minus)?.sub(&triple.zero)?;

    let mut out = [0.0f64; 3];
    for (slot, op) in [(0, &r1_op), (1, &r2_op), (2, &r3_op)] {
        for f in battery {
            out[slot] = out[slot].max(op.apply(f, x)?.norm());
        }
    }
    Ok(out)
}

/// The Casimir operator of the deformed algebra,
///   C = 1/2 j0 E j0 + (1-E)/(2z) j- + j- (1-E)/(2z) + E - 1,  E = e^{-2 z j+},
/// assembled by operator composition. At z = 0 the middle factors become
/// multiplication by j+ and E - 1 vanishes, giving the classical Casimir.
pub fn casimir_operator(triple: &Triple) -> Result<DiffOperator, OperatorError> {
    let e = exp_of_jplus(triple, -1.0);
    // m = (1 - E)/(2z); at z = 0 this is j+ itself.
    let m = if triple.z == 0.0 {
        triple.plus.clone()
    } else {
        DiffOperator::identity()
            .sub(&e)?
            .scale(Complex64::new(1.0 / (2.0 * triple.z), 0.0))
    };
    let half_j0_e_j0 = triple
        .zero
        .compose(&e)?
        .compose(&triple.zero)?
        .scale(Complex64::new(0.5, 0.0));
    let e_minus_one = e.sub(&DiffOperator::identity())?;
    half_j0_e_j0
        .add(&m.compose(&triple.minus)?)?
        .add(&triple.minus.compose(&m)?)?
        .add(&e_minus_one)
}

/// (C f)(x) - lambda (lambda + 2)/2 f(x).
pub fn casimir_residual(
    triple: &Triple,
    f: &TestFunction,
    x: f64,
) -> Result<Complex64, OperatorError> {
    let c = casimir_operator(triple)?;
    let eig = 0.5 * triple.lambda * (triple.lambda + 2.0);
    Ok(c.apply(f, x)? - Complex64::new(eig, 0.0) * f.eval(x))
}

/// Report of the standard residual battery: z in {0.1, 0.5, 1, 2},
/// lambda in {0, 1, 2, 3.7}, a 20-point grid on (-1, 1), five test functions,
/// for both the deformed and the PT realizations.
#[derive(Debug, Clone, Serialize)]
pub struct BatteryReport {
    pub max_commutator_residual: f64,
    pub max_casimir_residual: f64,
    /// Worst (z, lambda, x, relation) tuple for diagnostics.
    pub worst_case: String,
    pub points_checked: usize,
}

pub fn standard_battery_report() -> Result<BatteryReport, OperatorError> {
    let zs = [0.1, 0.5, 1.0, 2.0];
    let lambdas = [0.0, 1.0, 2.0, 3.7];
    let grid: Vec<f64> = (0..20).map(|i| -1.0 + (i as f64 + 0.5) * 0.1).collect();
    let battery = standard_battery();

    let mut report = BatteryReport {
        max_commutator_residual: 0.0,
        max_casimir_residual: 0.0,
        worst_case: String::new(),
        points_checked: 0,
    };
    for &z in &zs {
        for &lambda in &lambdas {
            let triples = [
                make_deformed_realization(z, lambda).expect("z != 0"),
                make_pt_realization(z, lambda),
            ];
            for triple in &triples {
                let casimir = casimir_operator(triple)?;
                let eig = 0.5 * lambda * (lambda + 2.0);
                for &x in &grid {
                    let rs = commutation_residuals(triple, x, &battery)?;
                    for (k, &r) in rs.iter().enumerate() {
                        if r > report.max_commutator_residual {
                            report.max_commutator_residual = r;
                            report.worst_case = format!(
                                "{:?} z={z} lambda={lambda} x={x:.3} relation r{}",
                                triple.kind,
                                k + 1
                            );
                        }
                    }
                    for f in &battery {
                        let r = (casimir.apply(f, x)? - Complex64::new(eig, 0.0) * f.eval(x))
                            .norm();
                        report.max_casimir_residual = report.max_casimir_residual.max(r);
                    }
                    report.points_checked += 1;
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_classical_realization;

    #[test]
    fn deformed_relations_hold_pointwise() {
        let t = make_deformed_realization(1.0, 2.0).unwrap();
        let rs = commutation_residuals(&t, 0.3, &standard_battery()).unwrap();
        for r in rs {
            assert!(r < 1e-10, "residual {r}");
        }
    }

    #[test]
    fn classical_relations_hold() {
        let t = make_classical_realization(1.5);
        let rs = commutation_residuals(&t, -0.4, &standard_battery()).unwrap();
        for r in rs {
            assert!(r < 1e-10);
        }
    }

    #[test]
    fn pt_relations_hold() {
        let t = make_pt_realization(0.7, 3.7);
        let rs = commutation_residuals(&t, 0.6, &standard_battery()).unwrap();
        for r in rs {
            assert!(r < 1e-9, "residual {r}");
        }
    }

    #[test]
    fn r1_on_constant_function_is_exact_commutator_content() {
        // [j0, j+] 1 = (e^{2zx}-1)/z exactly: j0(x*1) - x*j0(1)
        let z = 0.8;
        let t = make_deformed_realization(z, 1.3).unwrap();
        let op = t.zero.commutator(&t.plus).unwrap();
        let one = TestFunction::monomial(0);
        for &x in &[0.25, 1.0] {
            let expect = (((2.0 * z * x) as f64).exp() - 1.0) / z;
            let got = op.apply(&one, x).unwrap();
            assert!((got - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn casimir_eigenvalue_lambda_two_is_four() {
        assert_eq!(0.5 * 2.0 * (2.0 + 2.0), 4.0);
        let t = make_deformed_realization(0.5, 2.0).unwrap();
        for f in standard_battery() {
            let r = casimir_residual(&t, &f, 0.4).unwrap();
            assert!(r.norm() < 1e-9, "casimir residual {} on {}", r.norm(), f.name);
        }
    }

    #[test]
    fn casimir_for_lambda_zero_has_zero_eigenvalue_term() {
        let t = make_deformed_realization(1.0, 0.0).unwrap();
        let c = casimir_operator(&t).unwrap();
        let f = TestFunction::monomial(2);
        let r = casimir_residual(&t, &f, 0.3).unwrap();
        // residual equals (C f)(x) since the eigenvalue term is zero
        assert!((r - c.apply(&f, 0.3).unwrap()).norm() < 1e-14);
        assert!(r.norm() < 1e-10);
    }

    #[test]
    fn mutated_sign_fails_loudly() {
        // flipping the sign of the j- second-order coefficient breaks r3 at O(1)
        let mut t = make_deformed_realization(1.0, 1.0).unwrap();
        t.minus = t.minus.scale(Complex64::new(-1.0, 0.0));
        let rs = commutation_residuals(&t, 0.5, &standard_battery()).unwrap();
        assert!(rs[2] > 0.1, "mutation not detected: {:?}", rs);
    }

    #[test]
    fn standard_battery_passes_spec_thresholds() {
        let report = standard_battery_report().unwrap();
        assert!(report.max_commutator_residual < 1e-9, "{report:?}");
        assert!(report.max_casimir_residual < 1e-8, "{report:?}");
    }
}
