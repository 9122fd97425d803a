//! Orthonormal polynomial bases.
//!
//! Two constructions: a Stieltjes-type orthogonalization against a discrete
//! [`Measure`] (orthogonalize z*p_k against all previous p_j, with one full
//! reorthogonalization pass), and the Szegő recursion driven by Verblunsky
//! coefficients for probability measures on the unit circle.
//!
//! A basis stores the upper-Hessenberg multiplication table
//! `z*p_k = sum_{j <= k+1} h[j][k] p_j`, the leading coefficients kappa_n, and
//! the monomial coefficient vectors of each p_n. Evaluation always runs
//! through the Hessenberg recurrence; the coefficient vectors exist for
//! expansions, synthetic division, and diagnostics, not for evaluation.

use num_complex::Complex64;

use crate::error::Error;
use crate::measure::{fnv1a, KahanComplex, Measure, Polynomial};
use crate::Result;

/// Threshold below which a candidate monic norm, relative to total mass,
/// is treated as rank deficiency of the measure rather than rounding.
const DEGENERACY_RELATIVE: f64 = 1e-13;

// ---------------------------------------------------------------------------
// Verblunsky sequences
// ---------------------------------------------------------------------------

/// A sequence alpha_n in the open unit disk driving the Szegő recursion.
pub struct VerblunskySeq {
    gen: Box<dyn Fn(usize) -> Complex64 + Send + Sync>,
}

impl VerblunskySeq {
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> Complex64 + Send + Sync + 'static,
    {
        Self { gen: Box::new(f) }
    }

    /// The free case alpha == 0 (Lebesgue measure on the circle).
    pub fn zeros() -> Self {
        Self::from_fn(|_| Complex64::new(0.0, 0.0))
    }

    pub fn constant(alpha: Complex64) -> Self {
        Self::from_fn(move |_| alpha)
    }

    /// alpha_n = 1/2 when n is a power of two (including 2^0 = 1), else 0.
    /// A regular measure whose kappa-ratios fail to converge along
    /// n = 2^j + 1.
    pub fn half_at_powers_of_two() -> Self {
        Self::from_fn(|n| {
            if n > 0 && n.is_power_of_two() {
                Complex64::new(0.5, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn alpha(&self, n: usize) -> Complex64 {
        (self.gen)(n)
    }
}

// ---------------------------------------------------------------------------
// OrthoBasis
// ---------------------------------------------------------------------------

/// What defined the basis.
pub enum BasisSource {
    Measure(Measure),
    Verblunsky { alphas: Vec<Complex64> },
}

/// Orthonormal polynomials p_0..p_N with positive leading coefficients.
pub struct OrthoBasis {
    n_max: usize,
    /// Column k (k < n_max) holds h[0..=k+1][k] of
    /// z*p_k = sum h[j][k] p_j.
    hessenberg: Vec<Vec<Complex64>>,
    kappas: Vec<f64>,
    monic_norms: Vec<f64>,
    coeffs: Vec<Polynomial>,
    /// Row n holds p_n evaluated at every support point of the defining
    /// measure (empty for Verblunsky sources). Byproduct of construction;
    /// the quadrature sums in the Cauchy machinery reuse it.
    node_values: Vec<Vec<Complex64>>,
    source: BasisSource,
    warnings: Vec<String>,
}

impl OrthoBasis {
    /// Highest constructed degree N.
    pub fn max_degree(&self) -> usize {
        self.n_max
    }

    pub fn kappa(&self, n: usize) -> f64 {
        self.kappas[n]
    }

    pub fn kappas(&self) -> &[f64] {
        &self.kappas
    }

    /// ||Phi_n|| = 1/kappa_n.
    pub fn monic_norm(&self, n: usize) -> f64 {
        self.monic_norms[n]
    }

    pub fn source(&self) -> &BasisSource {
        &self.source
    }

    pub fn source_measure(&self) -> Option<&Measure> {
        match &self.source {
            BasisSource::Measure(m) => Some(m),
            BasisSource::Verblunsky { .. } => None,
        }
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn hessenberg_entry(&self, j: usize, k: usize) -> Complex64 {
        self.hessenberg
            .get(k)
            .and_then(|col| col.get(j))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Column k of the multiplication table (length k + 2).
    pub fn hessenberg_column(&self, k: usize) -> Option<&[Complex64]> {
        self.hessenberg.get(k).map(|c| c.as_slice())
    }

    /// p_n at every support point of the defining measure, in the order of
    /// [`Measure::points`]. Empty for Verblunsky-sourced bases.
    pub fn node_values(&self, n: usize) -> Option<&[Complex64]> {
        self.node_values.get(n).map(|v| v.as_slice())
    }

    /// Monomial coefficients of p_n.
    pub fn coefficients(&self, n: usize) -> Result<&Polynomial> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            max: self.n_max,
        })
    }

    /// Monomial coefficients of the monic Phi_n = p_n / kappa_n.
    pub fn monic_coefficients(&self, n: usize) -> Result<Polynomial> {
        let p = self.coefficients(n)?;
        Ok(p.scale(Complex64::new(self.monic_norms[n], 0.0)))
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            Err(Error::IndexOutOfRange {
                index: n,
                max: self.n_max,
            })
        } else {
            Ok(())
        }
    }

    /// Values p_0(z)..p_n(z) by the Hessenberg recurrence.
    pub fn evaluate_all(&self, n: usize, z: Complex64) -> Result<Vec<Complex64>> {
        self.check_degree(n)?;
        let mut values = Vec::with_capacity(n + 1);
        values.push(Complex64::new(self.kappas[0], 0.0));
        for k in 0..n {
            let col = &self.hessenberg[k];
            let mut acc = z * values[k];
            for (j, h) in col.iter().take(k + 1).enumerate() {
                acc -= h * values[j];
            }
            values.push(acc / col[k + 1]);
        }
        Ok(values)
    }

    /// p_n(z).
    pub fn evaluate(&self, n: usize, z: Complex64) -> Result<Complex64> {
        Ok(self.evaluate_all(n, z)?[n])
    }

    /// Phi_n(z) = p_n(z) / kappa_n.
    pub fn evaluate_monic(&self, n: usize, z: Complex64) -> Result<Complex64> {
        Ok(self.evaluate(n, z)? * self.monic_norms[n])
    }

    /// Values scaled by a common power of two to avoid overflow at large
    /// degree and |z| > 1: returns (v, s) with `p_j(z) = v[j] * 2^s`.
    /// Ratios of entries are scale-free.
    pub fn evaluate_all_scaled(&self, n: usize, z: Complex64) -> Result<(Vec<Complex64>, i64)> {
        self.check_degree(n)?;
        let mut values = Vec::with_capacity(n + 1);
        values.push(Complex64::new(self.kappas[0], 0.0));
        let mut scale: i64 = 0;
        let downscale = 2.0_f64.powi(-512);
        for k in 0..n {
            let col = &self.hessenberg[k];
            let mut acc = z * values[k];
            for (j, h) in col.iter().take(k + 1).enumerate() {
                acc -= h * values[j];
            }
            let next = acc / col[k + 1];
            values.push(next);
            if next.re.abs() > 1e150 || next.im.abs() > 1e150 {
                for v in values.iter_mut() {
                    *v *= downscale;
                }
                scale += 512;
            }
        }
        Ok((values, scale))
    }

    /// Reproducing kernel K_n(y, z) = sum_{j<=n} p_j(y) conj(p_j(z)).
    pub fn kernel(&self, n: usize, y: Complex64, z: Complex64) -> Result<Complex64> {
        let py = self.evaluate_all(n, y)?;
        let pz = self.evaluate_all(n, z)?;
        let mut acc = KahanComplex::default();
        for (a, b) in py.iter().zip(&pz) {
            acc.add(a * b.conj());
        }
        Ok(acc.value())
    }

    /// Expansion coefficients of f in the basis: f = sum a_j p_j.
    /// Exact triangular back-substitution on the coefficient vectors.
    pub fn expand(&self, f: &Polynomial) -> Result<Vec<Complex64>> {
        let deg = match f.degree() {
            None => return Ok(Vec::new()),
            Some(d) => d,
        };
        self.check_degree(deg)?;
        let mut rem = f.clone();
        let mut out = vec![Complex64::new(0.0, 0.0); deg + 1];
        for j in (0..=deg).rev() {
            let lead = rem.coeff(j);
            let a = lead / self.coeffs[j].coeff(j);
            out[j] = a;
            if !(a.re == 0.0 && a.im == 0.0) {
                rem = rem.sub(&self.coeffs[j].scale(a));
            }
        }
        Ok(out)
    }

    /// <f, g> against the defining measure. For Verblunsky-sourced bases
    /// the form is evaluated through the orthonormal expansion, which is
    /// exact for polynomials of degree <= N.
    pub fn inner_product(&self, f: &Polynomial, g: &Polynomial) -> Result<Complex64> {
        match &self.source {
            BasisSource::Measure(mu) => Ok(mu.inner_product(f, g)),
            BasisSource::Verblunsky { .. } => {
                let a = self.expand(f)?;
                let b = self.expand(g)?;
                let mut acc = KahanComplex::default();
                for j in 0..a.len().min(b.len()) {
                    acc.add(a[j].conj() * b[j]);
                }
                Ok(acc.value())
            }
        }
    }

    /// L2 norm of f against the defining measure.
    pub fn norm(&self, f: &Polynomial) -> Result<f64> {
        let v = self.inner_product(f, f)?;
        Ok(v.re.max(0.0).sqrt())
    }

    /// Monic polynomial of the Christoffel-transformed measure
    /// d nu^x = |z - x|^2 d mu, by the kernel perturbation formula
    ///
    ///   Phi_n(z; nu^x) = (z - x)^{-1} [Phi_{n+1}(z; mu)
    ///       - Phi_{n+1}(x; mu) K_n(z, x; mu) / K_n(x, x; mu)].
    ///
    /// The bracket vanishes at z = x, so near x the value comes from one
    /// step of synthetic division of the bracket by (z - x), never from
    /// dividing values.
    pub fn christoffel_monic(&self, x: Complex64, n: usize, z: Complex64) -> Result<Complex64> {
        self.check_degree(n + 1)?;
        let px = self.evaluate_all(n + 1, x)?;
        let mut kxx = 0.0;
        for p in px.iter().take(n + 1) {
            kxx += p.norm_sqr();
        }
        let phi_next_x = px[n + 1] * self.monic_norms[n + 1];
        let c = phi_next_x / kxx;

        if (z - x).norm() > 1e-8 * (1.0 + x.norm()) {
            let pz = self.evaluate_all(n + 1, z)?;
            let mut kzx = KahanComplex::default();
            for j in 0..=n {
                kzx.add(pz[j] * px[j].conj());
            }
            let bracket = pz[n + 1] * self.monic_norms[n + 1] - c * kzx.value();
            Ok(bracket / (z - x))
        } else {
            let mut bracket = self.monic_coefficients(n + 1)?;
            for (pxj, pj) in px.iter().zip(&self.coeffs).take(n + 1) {
                bracket = bracket.sub(&pj.scale(c * pxj.conj()));
            }
            let (quotient, _remainder) = bracket.divide_linear(x);
            Ok(quotient.eval(z))
        }
    }

    fn source_hash(&self) -> u64 {
        match &self.source {
            BasisSource::Measure(m) => m.content_hash(),
            BasisSource::Verblunsky { alphas } => {
                let mut bytes = Vec::with_capacity(alphas.len() * 16);
                for a in alphas {
                    bytes.extend_from_slice(&a.re.to_le_bytes());
                    bytes.extend_from_slice(&a.im.to_le_bytes());
                }
                fnv1a(&bytes)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n_max,
            "kappas": self.kappas,
            "hessenberg": self
                .hessenberg
                .iter()
                .map(|col| col.iter().map(|h| [h.re, h.im]).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "source_hash": format!("{:016x}", self.source_hash()),
        })
    }
}

// ---------------------------------------------------------------------------
// Construction from a measure
// ---------------------------------------------------------------------------

fn weighted_dot(points: &[(Complex64, f64)], a: &[Complex64], b: &[Complex64]) -> Complex64 {
    crate::measure::reduce_indexed(points.len(), |i| a[i].conj() * b[i] * points[i].1)
}

/// Stieltjes orthogonalization of {1, z, z^2, ...} in L2(mu), one full
/// reorthogonalization pass per degree. Leading coefficients are positive.
pub fn orthonormalize(mu: &Measure, n_max: usize) -> Result<OrthoBasis> {
    if mu.distinct_support_count() < n_max + 1 {
        return Err(Error::DegenerateMeasure(format!(
            "measure has {} distinct support points, cannot orthonormalize to degree {}",
            mu.distinct_support_count(),
            n_max
        )));
    }
    let mut warnings = Vec::new();
    if mu.exactness_degree() >= 0 && 2 * n_max as i64 > mu.exactness_degree() {
        warnings.push(format!(
            "requested degree {} exceeds quadrature exactness {} (inner products of the \
             top degrees are not certified against the continuous measure)",
            n_max,
            mu.exactness_degree()
        ));
    }

    let points = mu.points();
    let mass = mu.total_mass();
    let degeneracy_floor = DEGENERACY_RELATIVE * mass;

    let kappa0 = 1.0 / mass.sqrt();
    let npts = points.len();

    let mut value_table: Vec<Vec<Complex64>> = Vec::with_capacity(n_max + 1);
    value_table.push(vec![Complex64::new(kappa0, 0.0); npts]);
    let mut coeffs = vec![Polynomial::constant(Complex64::new(kappa0, 0.0))];
    let mut kappas = vec![kappa0];
    let mut hessenberg: Vec<Vec<Complex64>> = Vec::with_capacity(n_max);

    for k in 0..n_max {
        let mut v: Vec<Complex64> = points
            .iter()
            .zip(&value_table[k])
            .map(|(&(z, _), &pk)| z * pk)
            .collect();
        let mut col = vec![Complex64::new(0.0, 0.0); k + 2];

        // two passes of classical Gram-Schmidt
        for _pass in 0..2 {
            for (j, pj) in value_table.iter().enumerate().take(k + 1) {
                let h = weighted_dot(points, pj, &v);
                for (vi, pji) in v.iter_mut().zip(pj) {
                    *vi -= h * pji;
                }
                col[j] += h;
            }
        }

        let norm_sq = weighted_dot(points, &v, &v).re.max(0.0);
        let norm = norm_sq.sqrt();
        if norm / kappas[k] <= degeneracy_floor {
            return Err(Error::DegenerateMeasure(format!(
                "monic candidate norm {:.3e} at degree {} below {:.3e}; \
                 the measure cannot support degree {}",
                norm / kappas[k],
                k + 1,
                degeneracy_floor,
                n_max
            )));
        }
        col[k + 1] = Complex64::new(norm, 0.0);

        let inv = 1.0 / norm;
        for vi in v.iter_mut() {
            *vi *= inv;
        }
        value_table.push(v);
        kappas.push(kappas[k] * inv);

        // mirror the same linear combination in coefficient space
        let mut poly = coeffs[k].shift_up();
        for (j, cj) in coeffs.iter().enumerate().take(k + 1) {
            poly = poly.sub(&cj.scale(col[j]));
        }
        coeffs.push(poly.scale(Complex64::new(inv, 0.0)));

        hessenberg.push(col);
    }

    let monic_norms = kappas.iter().map(|k| 1.0 / k).collect();
    Ok(OrthoBasis {
        n_max,
        hessenberg,
        kappas,
        monic_norms,
        coeffs,
        node_values: value_table,
        source: BasisSource::Measure(mu.clone()),
        warnings,
    })
}

// ---------------------------------------------------------------------------
// Construction from Verblunsky coefficients
// ---------------------------------------------------------------------------

/// Szegő recursion Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n*, with
/// ||Phi_{n+1}||^2 / ||Phi_n||^2 = 1 - |alpha_n|^2 and kappa_0 = 1.
/// The Hessenberg table is filled from the closed form
/// `h[j][k] = -alpha_{j-1} conj(alpha_k) prod_{i=j}^{k-1} rho_i` (j <= k),
/// `h[k+1][k] = rho_k`, with alpha_{-1} = -1 and rho = sqrt(1 - |alpha|^2).
pub fn verblunsky_to_basis(seq: &VerblunskySeq, n_max: usize) -> Result<OrthoBasis> {
    let mut alphas = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let a = seq.alpha(n);
        if a.norm() >= 1.0 {
            return Err(Error::InvalidVerblunsky {
                index: n,
                modulus: a.norm(),
            });
        }
        alphas.push(a);
    }
    let rhos: Vec<f64> = alphas.iter().map(|a| (1.0 - a.norm_sqr()).sqrt()).collect();

    // monic norms ||Phi_j|| = prod_{i<j} rho_i
    let mut monic_norms = Vec::with_capacity(n_max + 1);
    monic_norms.push(1.0);
    for r in &rhos {
        monic_norms.push(monic_norms.last().unwrap() * r);
    }
    let kappas: Vec<f64> = monic_norms.iter().map(|m| 1.0 / m).collect();

    // monic coefficient vectors via the recursion
    let mut monic = Vec::with_capacity(n_max + 1);
    monic.push(Polynomial::one());
    for n in 0..n_max {
        let phi: &Polynomial = &monic[n];
        let star = phi.reversed_conj(n);
        let next = phi.shift_up().sub(&star.scale(alphas[n].conj()));
        monic.push(next);
    }
    let coeffs: Vec<Polynomial> = monic
        .iter()
        .zip(&kappas)
        .map(|(phi, &k)| phi.scale(Complex64::new(k, 0.0)))
        .collect();

    let mut hessenberg = Vec::with_capacity(n_max);
    for k in 0..n_max {
        let mut col = vec![Complex64::new(0.0, 0.0); k + 2];
        let ck = alphas[k].conj();
        for (j, slot) in col.iter_mut().enumerate().take(k + 1) {
            let alpha_prev = if j == 0 {
                Complex64::new(-1.0, 0.0)
            } else {
                alphas[j - 1]
            };
            // prod_{i=j}^{k-1} rho_i = ||Phi_k|| / ||Phi_j||
            let prod = monic_norms[k] / monic_norms[j];
            *slot = -alpha_prev * ck * prod;
        }
        col[k + 1] = Complex64::new(rhos[k], 0.0);
        hessenberg.push(col);
    }

    Ok(OrthoBasis {
        n_max,
        hessenberg,
        kappas,
        monic_norms,
        coeffs,
        node_values: Vec::new(),
        source: BasisSource::Verblunsky { alphas },
        warnings: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
