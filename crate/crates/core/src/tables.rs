//! The two reference configurations with printed zero tables, and the
//! printed large-mass limits of their kernel polynomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geronimus::GeronimusContext;
use crate::ladder::short_range_root;
use crate::measures::MeasureSpec;
use crate::zeros::{zeros_kernel, ZeroAnalysis};

/// Absolute tolerance for comparisons with printed six-digit values.
pub const PRINTED_TOL: f64 = 5e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableId {
    /// Laguerre α = 0, c = -1, n = 3.
    Laguerre,
    /// Jacobi α = 0.5, β = 1, c = -1.5, n = 4.
    Jacobi,
}

impl TableId {
    pub fn from_number(id: u8) -> Result<Self> {
        match id {
            1 => Ok(TableId::Laguerre),
            2 => Ok(TableId::Jacobi),
            _ => Err(Error::ParameterDomain {
                name: "table",
                value: id as f64,
                bound: "1 or 2",
            }),
        }
    }

    pub fn spec(self) -> MeasureSpec {
        match self {
            TableId::Laguerre => MeasureSpec::laguerre(0.0),
            TableId::Jacobi => MeasureSpec::jacobi(0.5, 1.0),
        }
        .expect("valid reference parameters")
    }

    pub fn shift(self) -> f64 {
        match self {
            TableId::Laguerre => -1.0,
            TableId::Jacobi => -1.5,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            TableId::Laguerre => 3,
            TableId::Jacobi => 4,
        }
    }

    pub fn masses(self) -> [f64; 5] {
        match self {
            TableId::Laguerre => [0.0, 0.0125, 0.025, 0.05, 5.0],
            TableId::Jacobi => [0.0, 0.0008, 0.0020, 0.05, 5.0],
        }
    }

    pub fn context(self, mass: f64) -> Result<GeronimusContext> {
        GeronimusContext::new(self.spec(), self.shift(), mass, self.degree())
    }

    /// Printed rows.
    pub fn printed(self) -> Vec<TableRow> {
        let rows: &[(f64, &[f64], f64)] = match self {
            TableId::Laguerre => &[
                (0.0, &[0.296771, 1.794881, 5.327153], -1.27309),
                (0.0125, &[0.096936, 1.381317, 4.846199], -0.039345),
                (0.025, &[-0.079531, 1.196907, 4.66079], -0.015274),
                (0.05, &[-0.324373, 1.050055, 4.50679], -0.156362),
                (5.0, &[-0.988481, 0.87094, 4.276644], -0.700057),
            ],
            TableId::Jacobi => &[
                (0.0, &[-0.784545, -0.302212, 0.304654, 0.806277], -1.61637),
                (0.0008, &[-0.925906, -0.430453, 0.230271, 0.784909], -0.97778),
                (0.0020, &[-1.080633, -0.488136, 0.199190, 0.776221], -1.04893),
                (0.05, &[-1.467364, -0.544057, 0.163585, 0.765818], -1.35837),
                (5.0, &[-1.499661, -0.546604, 0.161684, 0.765238], -1.38587),
            ],
        };
        rows.iter()
            .map(|&(mass, zeros, z)| TableRow {
                mass,
                zeros: zeros.to_vec(),
                z,
            })
            .collect()
    }

    /// Printed zeros of the kernel polynomial `P_{n-1}^{c,[1]}`.
    pub fn printed_kernel_zeros(self) -> Vec<f64> {
        match self {
            TableId::Laguerre => vec![0.869089, 4.273768],
            TableId::Jacobi => vec![-0.546629, 0.161665, 0.765232],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    #[serde(rename = "N")]
    pub mass: f64,
    pub zeros: Vec<f64>,
    /// Root of the short-range factor `u`.
    pub z: f64,
}

/// Recomputes the rows of a table.
pub fn compute_table(id: TableId) -> Result<Vec<TableRow>> {
    let ctx = id.context(0.0)?;
    let n = id.degree();
    let analysis = ZeroAnalysis::new(&ctx, n)?;
    id.masses()
        .iter()
        .map(|&mass| {
            let zeros = analysis.at_mass(mass)?.zeros;
            let z = short_range_root(&ctx.with_mass(mass)?, n);
            Ok(TableRow { mass, zeros, z })
        })
        .collect()
}

pub fn compute_kernel_zeros(id: TableId) -> Result<Vec<f64>> {
    Ok(zeros_kernel(&id.context(0.0)?, id.degree() - 1)?.zeros)
}

/// Largest absolute deviation of each computed row from the printed one.
pub fn deviations(computed: &[TableRow], printed: &[TableRow]) -> Vec<f64> {
    computed
        .iter()
        .zip(printed)
        .map(|(c, p)| {
            c.zeros
                .iter()
                .zip(&p.zeros)
                .map(|(a, b)| (a - b).abs())
                .fold((c.z - p.z).abs(), f64::max)
        })
        .collect()
}
