use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of domain: {name} = {value} (requires {bound})")]
    ParameterDomain {
        name: &'static str,
        value: f64,
        bound: &'static str,
    },

    #[error("shift c = {c} lies inside or too close to the support [{a}, {b}]")]
    ShiftInsideSupport { c: f64, a: f64, b: f64 },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("division hazard: {0}")]
    DivisionHazard(String),

    #[error("Gram matrix ill-conditioned (condition {condition:.3e} > {limit:.1e})")]
    IllConditioned { condition: f64, limit: f64 },

    #[error("removable singularity at x = {x}: {what} vanishes there")]
    RemovableSingularity { x: f64, what: &'static str },

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("zeros {left} and {right} are not separated (simplicity violation)")]
    SimplicityViolation { left: f64, right: f64 },

    #[error("degree {requested} exceeds the prepared maximum {available}")]
    DegreeOutOfRange { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
