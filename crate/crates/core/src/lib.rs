pub mod cli;
pub mod error;
pub mod extended;
pub mod geronimus;
pub mod ladder;
pub mod measures;
pub mod oracle;
pub mod quadrature;
pub mod scalar;
pub mod secondkind;
pub mod tables;
pub mod tridiag;
pub mod verify;
pub mod zeros;
