//! Closed-form Faber polynomials for the supports that admit them --
//! the disk (z^k), the lemniscates E_m = {|z^m - 1| <= 1} ((z^m - 1)^j),
//! and [-2, 2] (monic Chebyshev) -- plus the lemniscate ratio experiment.

use num_complex::Complex64;

use crate::asymptotics::{ratio_trace, RatioMode, RatioTrace, SubsequenceMask};
use crate::error::Error;
use crate::measure::{Polynomial, SupportDescriptor};
use crate::opoly::OrthoBasis;
use crate::Result;

/// Closed-form Faber polynomials over one support.
#[derive(Debug, Clone)]
pub struct FaberFamily {
    support: SupportDescriptor,
}

impl FaberFamily {
    pub fn new(support: SupportDescriptor) -> Self {
        Self { support }
    }

    pub fn support(&self) -> SupportDescriptor {
        self.support
    }

    fn admissible_description(&self) -> String {
        match self.support {
            SupportDescriptor::UnitCircle | SupportDescriptor::ClosedDisk => {
                "all degrees (F_k = z^k)".into()
            }
            SupportDescriptor::Lemniscate { m } => {
                format!("multiples of {m} (F_jm = (z^{m} - 1)^j)")
            }
            SupportDescriptor::RealInterval { .. } => {
                "all degrees on [-2, 2] (monic Chebyshev); other intervals have \
                 capacity != 1 and no monic closed form"
                    .into()
            }
            SupportDescriptor::Custom => "none (no closed form for custom supports)".into(),
        }
    }

    pub fn admissible(&self, k: usize) -> bool {
        match self.support {
            SupportDescriptor::UnitCircle | SupportDescriptor::ClosedDisk => true,
            SupportDescriptor::Lemniscate { m } => k.is_multiple_of(m as usize),
            SupportDescriptor::RealInterval { a, b } => {
                (a + 2.0).abs() < 1e-12 && (b - 2.0).abs() < 1e-12
            }
            SupportDescriptor::Custom => false,
        }
    }

    /// The monic Faber polynomial of degree k.
    pub fn polynomial(&self, k: usize) -> Result<Polynomial> {
        if !self.admissible(k) {
            return Err(Error::InadmissibleDegree {
                degree: k,
                admissible: self.admissible_description(),
            });
        }
        let one = Complex64::new(1.0, 0.0);
        Ok(match self.support {
            SupportDescriptor::UnitCircle | SupportDescriptor::ClosedDisk => {
                Polynomial::monomial(k, one)
            }
            SupportDescriptor::Lemniscate { m } => {
                let base = Polynomial::new({
                    let mut coeffs = vec![Complex64::new(0.0, 0.0); m as usize + 1];
                    coeffs[0] = -one;
                    coeffs[m as usize] = one;
                    coeffs
                });
                let mut out = Polynomial::one();
                for _ in 0..k / m as usize {
                    out = out.mul(&base);
                }
                out
            }
            SupportDescriptor::RealInterval { .. } => monic_chebyshev(k),
            SupportDescriptor::Custom => unreachable!("admissible() returned false"),
        })
    }
}

/// F(support, k): the monic Faber polynomial of degree k, when a closed
/// form exists.
pub fn faber(support: SupportDescriptor, k: usize) -> Result<Polynomial> {
    FaberFamily::new(support).polynomial(k)
}

/// 2 T_k(x/2) for k >= 1 (sup norm 2 on [-2, 2]); 1 for k = 0.
fn monic_chebyshev(k: usize) -> Polynomial {
    let one = Complex64::new(1.0, 0.0);
    if k == 0 {
        return Polynomial::one();
    }
    // C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
    let mut prev = Polynomial::constant(one * 2.0);
    let mut cur = Polynomial::monomial(1, one);
    for _ in 1..k {
        let next = cur.shift_up().sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Ratio trace F(z) p_{n-m}(z) / p_n(z) with the Faber step dictated by
/// the basis support: m on E_m, 1 on the disk or circle (recovering the
/// consecutive ratio).
pub fn keps_experiment(
    basis: &OrthoBasis,
    z_grid: &[Complex64],
    n_range: std::ops::RangeInclusive<usize>,
    mask: &SubsequenceMask,
) -> Result<RatioTrace> {
    let support = match basis.source_measure() {
        Some(mu) => mu.support(),
        // a Verblunsky basis is a circle measure
        None => SupportDescriptor::UnitCircle,
    };
    let (f, step) = match support {
        SupportDescriptor::Lemniscate { m } => (faber(support, m as usize)?, m as usize),
        SupportDescriptor::UnitCircle | SupportDescriptor::ClosedDisk => {
            (Polynomial::monomial(1, Complex64::new(1.0, 0.0)), 1)
        }
        other => {
            return Err(Error::InadmissibleDegree {
                degree: 0,
                admissible: format!(
                    "keps experiment needs a disk or lemniscate support, got {other:?}"
                ),
            })
        }
    };
    ratio_trace(basis, &RatioMode::Faber { f, step }, z_grid, n_range, mask)
}

// ---------------------------------------------------------------------------
