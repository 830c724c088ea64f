//! Extended-precision Newton refinement for the zeros of `Q_n^c`,
//! `P_{n-1}^{c,[1]}` and `Q_n^{c,N}`.
//!
//! For large `N B_n^c` the zeros of `Q_n^{c,N}` sit closer to their limits
//! than binary64 can resolve. The polynomials are evaluated from the same
//! binary64 recurrence coefficients, so refined zeros and refined limits
//! are zeros of one consistent set of polynomials.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use crate::error::{Error, Result};
use crate::geronimus::GeronimusContext;

pub type Big = FBig<HalfEven, 2>;

/// Working precision in bits.
pub const BITS: usize = 320;
const MAX_NEWTON: usize = 60;

pub fn big(x: f64) -> Big {
    Big::try_from(x)
        .expect("finite binary64 value")
        .with_precision(BITS)
        .value()
}

pub fn to_f64(x: &Big) -> f64 {
    x.to_f64().value()
}

/// Smallest gap, relative to `1 + |v|`, that the working precision certifies.
pub fn resolution() -> f64 {
    2f64.powi(-(BITS as i32 - 64))
}

fn to_big(v: &[f64]) -> Vec<Big> {
    v.iter().map(|&x| big(x)).collect()
}

/// Value and derivative of the monic three-term polynomial of degree `n`.
fn eval(beta: &[Big], gamma: &[Big], n: usize, x: &Big) -> (Big, Big) {
    let mut p0 = big(1.0);
    let mut d0 = big(0.0);
    if n == 0 {
        return (p0, d0);
    }
    let mut p1 = x - &beta[0];
    let mut d1 = big(1.0);
    for k in 1..n {
        let t = x - &beta[k];
        let p2 = &t * &p1 - &gamma[k] * &p0;
        let d2 = &p1 + &t * &d1 - &gamma[k] * &d0;
        p0 = p1;
        d0 = d1;
        p1 = p2;
        d1 = d2;
    }
    (p1, d1)
}

/// The degree-`n` rational and kernel polynomials of one context.
pub struct ExtendedFamily {
    n: usize,
    c: Big,
    b: Big,
    beta_c: Vec<Big>,
    gamma_c: Vec<Big>,
    beta_k: Vec<Big>,
    gamma_k: Vec<Big>,
}

impl ExtendedFamily {
    pub fn new(ctx: &GeronimusContext, n: usize) -> Self {
        let (beta_c, gamma_c) = ctx.geronimus_recurrence();
        let (beta_k, gamma_k) = ctx.christoffel_recurrence();
        Self {
            n,
            c: big(ctx.shift()),
            b: big(ctx.b_coefficient(n)),
            beta_c: to_big(&beta_c[..=n]),
            gamma_c: to_big(&gamma_c[..=n]),
            beta_k: to_big(&beta_k[..n]),
            gamma_k: to_big(&gamma_k[..n]),
        }
    }

    pub fn shift(&self) -> &Big {
        &self.c
    }

    /// `Q_n^c`
    pub fn rational(&self, x: &Big) -> (Big, Big) {
        eval(&self.beta_c, &self.gamma_c, self.n, x)
    }

    /// `P_{n-1}^{c,[1]}`
    pub fn kernel(&self, x: &Big) -> (Big, Big) {
        eval(&self.beta_k, &self.gamma_k, self.n - 1, x)
    }

    /// `Q_n^c + N B_n^c (x - c) P_{n-1}^{c,[1]}`, i.e. `κ_n Q_n^{c,N}`.
    pub fn geronimus(&self, mass: f64, x: &Big) -> (Big, Big) {
        let (q, dq) = self.rational(x);
        let (k, dk) = self.kernel(x);
        let nb = big(mass) * &self.b;
        let h = x - &self.c;
        let value = &q + &nb * &h * &k;
        let deriv = dq + nb * (k + h * dk);
        (value, deriv)
    }

    /// Newton iteration from a binary64 starting point.
    pub fn newton(&self, start: f64, f: impl Fn(&Big) -> (Big, Big)) -> Result<Big> {
        let mut x = big(start);
        let tol = 2f64.powi(-(BITS as i32 - 16));
        for _ in 0..MAX_NEWTON {
            let (v, d) = f(&x);
            if to_f64(&d) == 0.0 {
                return Err(Error::NumericalFailure(format!(
                    "vanishing derivative in extended Newton near {start}"
                )));
            }
            let step = v / d;
            x = &x - &step;
            let s = to_f64(&step).abs();
            if s <= tol * to_f64(&x).abs().max(1.0) {
                return Ok(x);
            }
        }
        Err(Error::NumericalFailure(format!(
            "extended Newton did not converge near {start}"
        )))
    }
}
