//! Differential realizations of sl(2,R) and its non-standard deformation
//! U_z(sl(2,R)), with enough operator algebra to verify the commutation
//! relations and the Casimir numerically.

mod coefficient;
mod operator;
mod realization;
mod relations;
mod test_function;

pub use coefficient::Coefficient;
pub use operator::{DiffOperator, OperatorError};
pub use realization::{
    exp_of_jplus, make_classical_realization, make_deformed_realization, make_pt_realization,
    Realization, Triple,
};
pub use relations::{
    casimir_operator, casimir_residual, commutation_residuals, standard_battery_report,
    BatteryReport,
};
pub use test_function::{standard_battery, TestFunction};
