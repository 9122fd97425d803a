//! Ratio-asymptotics experiments: density-1 subsequence masks, ratio
//! traces, Jacobi recurrence coefficients, weak moments, and Cesàro means
//! of Cauchy transforms.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::Error;
use crate::measure::{KahanComplex, Measure, Polynomial, SupportDescriptor};
use crate::opoly::{BasisSource, OrthoBasis};
use crate::Result;

// ---------------------------------------------------------------------------
// Subsequence masks
// ---------------------------------------------------------------------------

/// An index set on [1, horizon] given by its excluded complement.
#[derive(Debug, Clone)]
pub struct SubsequenceMask {
    excluded: BTreeSet<u64>,
    horizon: u64,
}

impl SubsequenceMask {
    pub fn new(excluded: BTreeSet<u64>, horizon: u64) -> Self {
        let excluded = excluded
            .into_iter()
            .filter(|&m| m >= 1 && m <= horizon)
            .collect();
        Self { excluded, horizon }
    }

    /// Mask retaining all of [1, horizon].
    pub fn full(horizon: u64) -> Self {
        Self {
            excluded: BTreeSet::new(),
            horizon,
        }
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn excluded(&self) -> &BTreeSet<u64> {
        &self.excluded
    }

    pub fn retains(&self, n: u64) -> bool {
        n >= 1 && n <= self.horizon && !self.excluded.contains(&n)
    }

    /// Empirical density of the retained set on [1, n].
    pub fn density_at(&self, n: u64) -> f64 {
        if n == 0 {
            return 1.0;
        }
        let excluded_count = self.excluded.range(1..=n).count() as u64;
        1.0 - excluded_count as f64 / n as f64
    }

    /// Smallest T such that every retained m >= T has [m - ell, m + ell]
    /// disjoint from `original`, checked by enumeration up to the horizon.
    /// Always at most horizon + 1 (vacuous at that value).
    pub fn shift_threshold(&self, original: &BTreeSet<u64>, ell: u64) -> u64 {
        let mut last_violation = 0u64;
        for &q in original {
            let lo = q.saturating_sub(ell).max(1);
            let hi = (q + ell).min(self.horizon);
            for m in lo..=hi {
                if self.retains(m) {
                    last_violation = last_violation.max(m);
                }
            }
        }
        last_violation + 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "excluded": self.excluded.iter().collect::<Vec<_>>(),
            "horizon": self.horizon,
            "density_at_horizon": self.density_at(self.horizon),
        })
    }
}

/// Widens the gaps around an excluded set so that retained indices keep a
/// growing buffer from it, at asymptotically no cost in density.
///
/// Schedule: k_n = max(1, floor((n / max(1, c_n))^{1/4})) with
/// c_n = |excluded intersect [1, n]|, made non-decreasing by a running max
/// and capped at n. Each excluded m is blown up to
/// U_m = {m - (k_m - 1), ..., m + k_m - 1}. The quarter-power keeps the
/// widened set an order of magnitude below the density budget of the
/// test families while still growing unboundedly wherever the
/// excluded set has vanishing density.
pub fn widen_gaps(excluded: &BTreeSet<u64>, horizon: u64) -> SubsequenceMask {
    let mut widened = BTreeSet::new();
    let mut count: u64 = 0;
    let mut k_running: u64 = 1;
    let mut it = excluded.range(1..=horizon).peekable();
    for n in 1..=horizon {
        if it.peek() == Some(&&n) {
            it.next();
            count += 1;
            // schedule value at n, with the running max making it non-decreasing
            let raw = ((n as f64 / count.max(1) as f64).powf(0.25)).floor() as u64;
            k_running = k_running.max(raw.clamp(1, n));
            let k = k_running;
            let lo = n.saturating_sub(k - 1).max(1);
            let hi = (n + k - 1).min(horizon);
            for m in lo..=hi {
                widened.insert(m);
            }
        }
    }
    SubsequenceMask {
        excluded: widened,
        horizon,
    }
}

/// Retains the n with |kappa_n / kappa_{n - step} - 1| <= eps; indices
/// below `step` are retained. Horizon is the basis degree.
pub fn kappa_ratio_mask(basis: &OrthoBasis, step: usize, eps: f64) -> SubsequenceMask {
    let n_max = basis.max_degree();
    let mut excluded = BTreeSet::new();
    for n in step..=n_max {
        let ratio = basis.kappa(n) / basis.kappa(n - step);
        if (ratio - 1.0).abs() > eps {
            excluded.insert(n as u64);
        }
    }
    SubsequenceMask {
        excluded,
        horizon: n_max as u64,
    }
}

/// kappa_{n-step} / kappa_n: the value of F(z) p_{n-step}(z) / p_n(z) at
/// infinity for monic F of degree `step`.
pub fn ratio_at_infinity(basis: &OrthoBasis, n: usize, step: usize) -> f64 {
    basis.kappa(n - step) / basis.kappa(n)
}

// ---------------------------------------------------------------------------
// Ratio traces
// ---------------------------------------------------------------------------

/// Which numerator polynomial multiplies p_{n-step}.
pub enum RatioMode {
    /// z * p_{n-1} / p_n.
    ConsecutiveZ,
    /// F(z) * p_{n-step} / p_n for a fixed (typically Faber) polynomial.
    Faber { f: Polynomial, step: usize },
}

/// Rows (n, z, value) sorted by (n, z index).
#[derive(Debug, Clone, Default)]
pub struct RatioTrace {
    pub rows: Vec<(usize, Complex64, Complex64)>,
}

impl RatioTrace {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,z_re,z_im,val_re,val_im\n");
        for (n, z, v) in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", n, z.re, z.im, v.re, v.im));
        }
        out
    }
}

/// Records F(z) p_{n-step}(z) / p_n(z) for every mask-retained n in the
/// range, at every grid point. Evaluation runs through the Hessenberg
/// recurrence with periodic common rescaling, so large n and |z| > 1 do
/// not overflow; a vanishing denominator is recorded as NaN, never an
/// abort.
pub fn ratio_trace(
    basis: &OrthoBasis,
    mode: &RatioMode,
    z_grid: &[Complex64],
    n_range: std::ops::RangeInclusive<usize>,
    mask: &SubsequenceMask,
) -> Result<RatioTrace> {
    let (step, f): (usize, Option<&Polynomial>) = match mode {
        RatioMode::ConsecutiveZ => (1, None),
        RatioMode::Faber { f, step } => (*step, Some(f)),
    };
    let (lo, hi) = n_range.into_inner();
    if hi > basis.max_degree() {
        return Err(Error::IndexOutOfRange {
            index: hi,
            max: basis.max_degree(),
        });
    }
    let lo = lo.max(step);

    // by-z pass, rows collected then re-sorted to (n, z index) order
    let mut rows: Vec<(usize, usize, Complex64)> = Vec::new();
    for (zi, &z) in z_grid.iter().enumerate() {
        let fz = match f {
            Some(p) => p.eval(z),
            None => z,
        };
        let (values, _scale) = basis.evaluate_all_scaled(hi, z)?;
        for n in lo..=hi {
            if !mask.retains(n as u64) {
                continue;
            }
            let den = values[n];
            let value = if den.norm() < 1e-300 {
                Complex64::new(f64::NAN, f64::NAN)
            } else {
                fz * values[n - step] / den
            };
            rows.push((n, zi, value));
        }
    }
    rows.sort_by_key(|&(n, zi, _)| (n, zi));
    Ok(RatioTrace {
        rows: rows
            .into_iter()
            .map(|(n, zi, v)| (n, z_grid[zi], v))
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Real-line machinery
// ---------------------------------------------------------------------------

/// Jacobi recurrence coefficients
/// x p_n = a_{n+1} p_{n+1} + b_{n+1} p_n + a_n p_{n-1}, with a\[0\] = a_1.
#[derive(Debug, Clone)]
pub struct JacobiCoeffs {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

/// Extracts Jacobi coefficients from a basis whose Hessenberg table must
/// be tridiagonal (real measure); entries above the first superdiagonal
/// larger than 1e-10 signal a non-real or broken construction.
pub fn jacobi_from_basis(basis: &OrthoBasis) -> Result<JacobiCoeffs> {
    let n = basis.max_degree();
    for k in 0..n {
        for j in 0..k.saturating_sub(1) {
            let h = basis.hessenberg_entry(j, k).norm();
            if h > 1e-10 {
                return Err(Error::InvalidMeasure(format!(
                    "Hessenberg entry h[{j}][{k}] = {h:.3e} breaks tridiagonality; \
                     the measure is not real-symmetric"
                )));
            }
        }
    }
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for j in 1..=n {
        a.push(basis.hessenberg_entry(j, j - 1).re);
        b.push(basis.hessenberg_entry(j - 1, j - 1).re);
    }
    Ok(JacobiCoeffs { a, b })
}

/// Builds the degree-N basis of a real measure and reads off the Jacobi
/// coefficients.
pub fn jacobi_coeffs(mu: &Measure, n: usize) -> Result<JacobiCoeffs> {
    for (index, &(z, _)) in mu.points().iter().enumerate() {
        if z.im.abs() > 1e-12 {
            return Err(Error::NotRealMeasure { index, imag: z.im });
        }
    }
    let basis = crate::opoly::orthonormalize(mu, n)?;
    jacobi_from_basis(&basis)
}

/// Exterior conformal map of [-2, 2]: phi(w) = (w + sqrt(w^2 - 4)) / 2
/// with the branch |phi| > 1 (phi(3) = (3 + sqrt 5)/2).
pub fn joukowski_phi(w: Complex64) -> Result<Complex64> {
    let dist = segment_distance_real(w);
    if dist < 1e-12 {
        return Err(Error::OnSlit { dist });
    }
    let r = (w * w - Complex64::new(4.0, 0.0)).sqrt();
    let plus = (w + r) / 2.0;
    let minus = (w - r) / 2.0;
    Ok(if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    })
}

fn segment_distance_real(w: Complex64) -> f64 {
    let x = w.re.clamp(-2.0, 2.0);
    (w - Complex64::new(x, 0.0)).norm()
}

// ---------------------------------------------------------------------------
// Weak moments and Cesàro Cauchy means
// ---------------------------------------------------------------------------

/// integral w^k conj(w)^{conj_power} |p_n(w)|^2 d mu(w). For
/// Verblunsky-sourced bases (measures on the circle) conj(w) = 1/w on the
/// support and the moment reduces to an exact inner product.
pub fn weak_moments(basis: &OrthoBasis, n: usize, k: u32, conj_power: u32) -> Result<Complex64> {
    match basis.source() {
        BasisSource::Measure(mu) => {
            let pn = basis.node_values(n).ok_or(Error::IndexOutOfRange {
                index: n,
                max: basis.max_degree(),
            })?;
            let mut acc = KahanComplex::default();
            for (&(z, w), &p) in mu.points().iter().zip(pn) {
                acc.add(z.powu(k) * z.conj().powu(conj_power) * p.norm_sqr() * w);
            }
            Ok(acc.value())
        }
        BasisSource::Verblunsky { .. } => {
            let d = k as i64 - conj_power as i64;
            let pn = basis.coefficients(n)?;
            let shifted = |power: usize| {
                let mut poly = pn.clone();
                for _ in 0..power {
                    poly = poly.shift_up();
                }
                poly
            };
            if d >= 0 {
                let a = basis.expand(&shifted(d as usize))?;
                // <p_n, z^d p_n> is the p_n-coefficient of the expansion
                Ok(a.get(n).copied().unwrap_or(Complex64::new(0.0, 0.0)))
            } else {
                let a = basis.expand(&shifted((-d) as usize))?;
                Ok(a.get(n).copied().unwrap_or(Complex64::new(0.0, 0.0)).conj())
            }
        }
    }
}

/// (n+1)^{-1} sum_{j<=n} integral |p_j(w)|^2 / (z - w) d mu(w).
/// z is not validated against the hull: the interesting evaluations sit
/// outside the polynomial convex hull but inside the geometric hull.
pub fn cesaro_cauchy(basis: &OrthoBasis, z: Complex64, n: usize) -> Result<Complex64> {
    let mu = basis.source_measure().ok_or_else(|| {
        Error::InvalidMeasure("cesaro_cauchy needs a quadrature-backed basis".into())
    })?;
    if n > basis.max_degree() {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: basis.max_degree(),
        });
    }
    // sum over support points of w_i K_n(z_i, z_i) / (z - z_i)
    let npts = mu.points().len();
    let mut kernel_diag = vec![0.0f64; npts];
    for j in 0..=n {
        let row = basis.node_values(j).expect("measure-backed");
        for (slot, p) in kernel_diag.iter_mut().zip(row) {
            *slot += p.norm_sqr();
        }
    }
    let mut acc = KahanComplex::default();
    for (&(w_pt, weight), &kd) in mu.points().iter().zip(&kernel_diag) {
        acc.add(Complex64::new(weight * kd, 0.0) / (z - w_pt));
    }
    Ok(acc.value() / (n as f64 + 1.0))
}

/// Closed-form Cauchy transforms of the equilibrium measures used as
/// comparison targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumCauchy {
    /// Normalized arc length on the unit circle: 1/z outside the disk.
    ClosedDisk,
    /// Arcsine measure on [-2, 2]: 1/sqrt(z^2 - 4), principal at infinity.
    Interval,
}

impl EquilibriumCauchy {
    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        match self {
            EquilibriumCauchy::ClosedDisk => Ok(z.inv()),
            EquilibriumCauchy::Interval => {
                // sqrt(z^2 - 4) with the ~ z branch is 2 phi(z) - z
                let phi = joukowski_phi(z)?;
                Ok((phi * 2.0 - z).inv())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Circle-case L2 check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CircaseRow {
    pub n: usize,
    /// Grid value of integral |Q_n/p_n - 1|^2 dtheta/2pi.
    pub l2_distance: f64,
    /// | integral |Q_n/p_n|^2 dtheta/2pi - ||Q_n||^2_mu | (Bernstein-Szegő
    /// identity residual).
    pub bs_residual: f64,
}

/// L2(dtheta/2pi) distance of Q_n/p_n from 1 on an m_grid-point circle
/// grid, for measures supported on the unit circle.
pub fn circase_check<F>(
    basis: &OrthoBasis,
    q_family: F,
    n_range: std::ops::RangeInclusive<usize>,
    m_grid: usize,
) -> Result<Vec<CircaseRow>>
where
    F: Fn(usize) -> Polynomial,
{
    match basis.source() {
        BasisSource::Verblunsky { .. } => {}
        BasisSource::Measure(mu) => {
            if mu.support() != SupportDescriptor::UnitCircle {
                return Err(Error::NotCircleMeasure);
            }
        }
    }
    let (lo, hi) = n_range.into_inner();
    if hi > basis.max_degree() {
        return Err(Error::IndexOutOfRange {
            index: hi,
            max: basis.max_degree(),
        });
    }
    // p_0..p_hi at each grid point
    let grid: Vec<Complex64> = (0..m_grid)
        .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / m_grid as f64))
        .collect();
    let tables: Vec<Vec<Complex64>> = grid
        .iter()
        .map(|&z| basis.evaluate_all(hi, z))
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    for n in lo..=hi {
        let q = q_family(n);
        let mut dist = KahanComplex::default();
        let mut sq = KahanComplex::default();
        for (z, table) in grid.iter().zip(&tables) {
            let ratio = q.eval(*z) / table[n];
            dist.add(Complex64::new(
                (ratio - Complex64::new(1.0, 0.0)).norm_sqr(),
                0.0,
            ));
            sq.add(Complex64::new(ratio.norm_sqr(), 0.0));
        }
        let l2_distance = dist.value().re / m_grid as f64;
        let mean_sq = sq.value().re / m_grid as f64;
        let q_norm_sq = basis.inner_product(&q, &q)?.re;
        rows.push(CircaseRow {
            n,
            l2_distance,
            bs_residual: (mean_sq - q_norm_sq).abs(),
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
