//! Discrete measures and the inner product they induce.
//!
//! A [`Measure`] is a quadrature rule (nodes + positive weights) plus a list
//! of point masses. Continuous measures are represented by rules that carry
//! an explicit `exactness_degree`: the highest joint degree in z and
//! conj(z) for which the discrete sums reproduce the continuous integrals.
//! Intrinsically discrete measures use `exactness_degree = -1`.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Width of the deterministic reduction chunks in [`inner_product`].
/// Fixed independently of the thread count so that results are
/// bit-identical for any parallelism setting.
const CHUNK: usize = 4096;

static PARALLELISM: AtomicUsize = AtomicUsize::new(1);

/// Cap the number of threads used for quadrature reductions. The chunk
/// decomposition is fixed, so any value yields identical results.
pub fn set_parallelism(threads: usize) {
    PARALLELISM.store(threads.max(1), Ordering::Relaxed);
}

pub fn parallelism() -> usize {
    PARALLELISM.load(Ordering::Relaxed).max(1)
}

// ---------------------------------------------------------------------------
// Support descriptors
// ---------------------------------------------------------------------------

/// Coarse description of where a measure lives. Used to select closed-form
/// data (Faber polynomials, equilibrium Cauchy transforms); never used to
/// validate node or atom locations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SupportDescriptor {
    UnitCircle,
    ClosedDisk,
    RealInterval { a: f64, b: f64 },
    Lemniscate { m: u32 },
    Custom,
}

impl SupportDescriptor {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SupportDescriptor::RealInterval { a, b } if !(a < b) => Err(Error::InvalidMeasure(
                format!("RealInterval requires a < b, got [{a}, {b}]"),
            )),
            SupportDescriptor::Lemniscate { m } if m < 1 => {
                Err(Error::InvalidMeasure("Lemniscate requires m >= 1".into()))
            }
            _ => Ok(()),
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Dense polynomial in z with complex coefficients, `coeffs[k]` the
/// coefficient of z^k. The last entry is nonzero; an empty vector is the
/// zero polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing (exactly) zero coefficients.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// c * z^k.
    pub fn monomial(k: usize, c: Complex64) -> Self {
        if c.re == 0.0 && c.im == 0.0 {
            return Self::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(k) + other.coeff(k);
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplication by z.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex64::new(0.0, 0.0));
        out.extend_from_slice(&self.coeffs);
        Self { coeffs: out }
    }

    /// Multiplication by (z - x).
    pub fn mul_linear(&self, x: Complex64) -> Self {
        self.shift_up().sub(&self.scale(x))
    }

    /// Reversed polynomial P*(z) = z^n conj(P(1 / conj(z))) at the stated
    /// degree n (which may exceed deg P): coefficients conjugated and
    /// reversed within a length-(n+1) window.
    pub fn reversed_conj(&self, n: usize) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(n - k).conj();
        }
        Self::new(out)
    }

    /// Synthetic division by (z - x): returns (quotient, remainder) with
    /// self = (z - x) * quotient + remainder.
    pub fn divide_linear(&self, x: Complex64) -> (Self, Complex64) {
        if self.is_zero() {
            return (Self::zero(), Complex64::new(0.0, 0.0));
        }
        let n = self.coeffs.len();
        let mut q = vec![Complex64::new(0.0, 0.0); n.saturating_sub(1)];
        let mut carry = Complex64::new(0.0, 0.0);
        for k in (0..n).rev() {
            let value = self.coeffs[k] + carry * x;
            if k == 0 {
                return (Self::new(q), value);
            }
            q[k - 1] = value;
            carry = value;
        }
        unreachable!()
    }
}

// ---------------------------------------------------------------------------
// Compensated summation
// ---------------------------------------------------------------------------

/// Kahan accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanComplex {
    sum_re: f64,
    c_re: f64,
    sum_im: f64,
    c_im: f64,
}

impl KahanComplex {
    pub fn add(&mut self, v: Complex64) {
        let y = v.re - self.c_re;
        let t = self.sum_re + y;
        self.c_re = (t - self.sum_re) - y;
        self.sum_re = t;

        let y = v.im - self.c_im;
        let t = self.sum_im + y;
        self.c_im = (t - self.sum_im) - y;
        self.sum_im = t;
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.sum_re, self.sum_im)
    }
}

/// Deterministically chunked, optionally threaded reduction of
/// term(0) + term(1) + ... + term(len - 1). The chunk layout never
/// depends on the thread count, so any parallelism gives bit-identical
/// results.
pub(crate) fn reduce_indexed<F>(len: usize, term: F) -> Complex64
where
    F: Fn(usize) -> Complex64 + Sync,
{
    let n_chunks = len.div_ceil(CHUNK).max(1);
    let threads = parallelism().min(n_chunks);
    let chunk_sum = |chunk: usize| {
        let mut acc = KahanComplex::default();
        for i in chunk * CHUNK..((chunk + 1) * CHUNK).min(len) {
            acc.add(term(i));
        }
        acc.value()
    };

    let partials: Vec<Complex64> = if threads <= 1 || n_chunks == 1 {
        (0..n_chunks).map(chunk_sum).collect()
    } else {
        let mut slots = vec![Complex64::new(0.0, 0.0); n_chunks];
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            let slots_ref = &mut slots;
            // Hand out chunk indices; each chunk writes only its own slot.
            let handles: Vec<_> = (0..threads)
                .map(|_| {
                    let next = &next;
                    let chunk_sum = &chunk_sum;
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        loop {
                            let i = next.fetch_add(1, Ordering::Relaxed);
                            if i >= n_chunks {
                                return local;
                            }
                            local.push((i, chunk_sum(i)));
                        }
                    })
                })
                .collect();
            for handle in handles {
                for (i, v) in handle.join().expect("reduction worker panicked") {
                    slots_ref[i] = v;
                }
            }
        });
        slots
    };

    let mut acc = KahanComplex::default();
    for v in partials {
        acc.add(v);
    }
    acc.value()
}

/// Weighted reduction over a point list.
pub(crate) fn reduce_points<F>(points: &[(Complex64, f64)], term: F) -> Complex64
where
    F: Fn(Complex64, f64) -> Complex64 + Sync,
{
    reduce_indexed(points.len(), |i| {
        let (z, w) = points[i];
        term(z, w)
    })
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

/// Quadrature nodes with positive weights, plus point masses.
#[derive(Debug, Clone)]
pub struct Measure {
    nodes: Vec<Complex64>,
    weights: Vec<f64>,
    atoms: Vec<(Complex64, f64)>,
    support: SupportDescriptor,
    exactness_degree: i64,
    /// Flattened (node, weight) then (atom, mass) list, kept in sync for
    /// the reduction kernels.
    points: Vec<(Complex64, f64)>,
}

impl Measure {
    pub fn from_parts(
        nodes: Vec<Complex64>,
        weights: Vec<f64>,
        atoms: Vec<(Complex64, f64)>,
        support: SupportDescriptor,
        exactness_degree: i64,
    ) -> Result<Self> {
        support.validate()?;
        if nodes.len() != weights.len() {
            return Err(Error::InvalidMeasure(format!(
                "{} nodes but {} weights",
                nodes.len(),
                weights.len()
            )));
        }
        if nodes.is_empty() && atoms.is_empty() {
            return Err(Error::InvalidMeasure("no support points".into()));
        }
        if let Some(w) = weights.iter().find(|w| !(**w > 0.0)) {
            return Err(Error::InvalidMeasure(format!("nonpositive weight {w}")));
        }
        if let Some((_, t)) = atoms.iter().find(|(_, t)| !(*t > 0.0)) {
            return Err(Error::InvalidMeasure(format!("nonpositive atom mass {t}")));
        }
        let mut points: Vec<(Complex64, f64)> = Vec::with_capacity(nodes.len() + atoms.len());
        points.extend(nodes.iter().copied().zip(weights.iter().copied()));
        points.extend(atoms.iter().copied());
        Ok(Self {
            nodes,
            weights,
            atoms,
            support,
            exactness_degree,
            points,
        })
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn atoms(&self) -> &[(Complex64, f64)] {
        &self.atoms
    }

    pub fn support(&self) -> SupportDescriptor {
        self.support
    }

    pub fn exactness_degree(&self) -> i64 {
        self.exactness_degree
    }

    /// Nodes followed by atoms, with their weights/masses.
    pub fn points(&self) -> &[(Complex64, f64)] {
        &self.points
    }

    pub fn total_mass(&self) -> f64 {
        let mut acc = KahanComplex::default();
        for &(_, w) in &self.points {
            acc.add(Complex64::new(w, 0.0));
        }
        acc.value().re
    }

    /// Number of distinct support points (exact coordinate equality).
    pub fn distinct_support_count(&self) -> usize {
        let mut pts: Vec<(u64, u64)> = self
            .points
            .iter()
            .map(|(z, _)| (z.re.to_bits(), z.im.to_bits()))
            .collect();
        pts.sort_unstable();
        pts.dedup();
        pts.len()
    }

    /// True if the quadrature part claims exactness for inner products of
    /// polynomials with joint degree `degree`.
    pub fn supports_degree(&self, degree: i64) -> bool {
        self.exactness_degree < 0 || degree <= self.exactness_degree
    }

    // -- constructors -------------------------------------------------------

    /// M-th roots of unity with equal weights: the M-point trapezoid rule
    /// for normalized arc length on the unit circle.
    pub fn unit_circle_uniform(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidMeasure("need at least one node".into()));
        }
        let w = 1.0 / m as f64;
        let nodes = (0..m)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / m as f64))
            .collect();
        Self::from_parts(
            nodes,
            vec![w; m],
            Vec::new(),
            SupportDescriptor::UnitCircle,
            m as i64 - 1,
        )
    }

    /// Tensor rule for two-dimensional area measure on the closed unit
    /// disk: Gauss-Legendre in r^2 crossed with uniform angles. Total mass
    /// is pi; exact for z^j conj(z)^k with j, k up to
    /// min(2 * radial_order - 1, angular_order - 1).
    pub fn disk_area(radial_order: usize, angular_order: usize) -> Result<Self> {
        if radial_order < 1 || angular_order < 1 {
            return Err(Error::InvalidMeasure("orders must be >= 1".into()));
        }
        let (s_nodes, s_weights) = gauss_legendre_01(radial_order);
        let mut nodes = Vec::with_capacity(radial_order * angular_order);
        let mut weights = Vec::with_capacity(radial_order * angular_order);
        let dtheta = 2.0 * std::f64::consts::PI / angular_order as f64;
        for (s, ws) in s_nodes.iter().zip(&s_weights) {
            let r = s.sqrt();
            // dA = pi ds dtheta/(2 pi) after s = r^2
            let w = std::f64::consts::PI * ws / angular_order as f64;
            for j in 0..angular_order {
                nodes.push(Complex64::from_polar(r, dtheta * j as f64));
                weights.push(w);
            }
        }
        let exact = (2 * radial_order - 1).min(angular_order - 1) as i64;
        Self::from_parts(
            nodes,
            weights,
            Vec::new(),
            SupportDescriptor::ClosedDisk,
            exact,
        )
    }

    /// Gauss rule for the Chebyshev (arcsine) or Legendre (uniform) weight
    /// on [a, b], normalized to total mass 1.
    pub fn interval(a: f64, b: f64, kind: IntervalKind, order: usize) -> Result<Self> {
        if !(a < b) {
            return Err(Error::InvalidMeasure(format!("need a < b, got [{a}, {b}]")));
        }
        if order < 1 {
            return Err(Error::InvalidMeasure("order must be >= 1".into()));
        }
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let (u, w): (Vec<f64>, Vec<f64>) = match kind {
            IntervalKind::Chebyshev => {
                let n = order as f64;
                let nodes = (1..=order)
                    .map(|k| ((2 * k - 1) as f64 * std::f64::consts::PI / (2.0 * n)).cos())
                    .collect();
                (nodes, vec![1.0 / n; order])
            }
            IntervalKind::Legendre => {
                let (nodes, weights) = gauss_legendre(order);
                // [-1,1] weights sum to 2; normalize the measure to mass 1.
                (nodes, weights.iter().map(|w| w / 2.0).collect())
            }
        };
        let nodes = u
            .iter()
            .map(|&x| Complex64::new(mid + half * x, 0.0))
            .collect();
        Self::from_parts(
            nodes,
            w,
            Vec::new(),
            SupportDescriptor::RealInterval { a, b },
            2 * order as i64 - 1,
        )
    }

    /// M equally spaced samples (in the conformal angle) of the boundary of
    /// the lemniscate E_m = {z : |z^m - 1| <= 1}, equal weights summing
    /// to 1. Nodes are w_k = exp(2 pi i k / M) pushed through the m
    /// branches of z = (1 + w)^{1/m}; sampling uniformly in the conformal
    /// angle makes this a discretization of the equilibrium measure of E_m.
    /// Exactness in the sense of trigonometric-degree M-1 holds for the
    /// monomial family aligned with multiples of m; other moments are
    /// spectrally accurate rather than exact.
    pub fn lemniscate_boundary(m: u32, nodes_total: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidMeasure("need m >= 1".into()));
        }
        if nodes_total < m as usize {
            return Err(Error::InvalidMeasure(format!(
                "need at least m = {m} nodes"
            )));
        }
        let mm = m as f64;
        let nodes: Vec<Complex64> = (0..nodes_total)
            .map(|k| {
                let phi = 2.0 * std::f64::consts::PI * k as f64 / nodes_total as f64;
                // z = e^{i phi} (1 + e^{-i m phi})^{1/m}, principal root.
                let u = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, -mm * phi);
                let root = principal_root(u, m);
                Complex64::from_polar(1.0, phi) * root
            })
            .collect();
        let w = 1.0 / nodes_total as f64;
        Self::from_parts(
            nodes,
            vec![w; nodes_total],
            Vec::new(),
            SupportDescriptor::Lemniscate { m },
            nodes_total as i64 - 1,
        )
    }

    /// The Uvarov transform: adds the point mass t at x. If x coincides
    /// with an existing atom the masses merge. The atom is carried exactly
    /// by the discrete representation, so the exactness degree of the
    /// quadrature part is unchanged.
    pub fn add_atom(&self, x: Complex64, t: f64) -> Result<Self> {
        if !(t > 0.0) {
            return Err(Error::InvalidMeasure(format!(
                "atom mass must be positive, got {t}"
            )));
        }
        let mut atoms = self.atoms.clone();
        if let Some(existing) = atoms.iter_mut().find(|(y, _)| *y == x) {
            existing.1 += t;
        } else {
            atoms.push((x, t));
        }
        Self::from_parts(
            self.nodes.clone(),
            self.weights.clone(),
            atoms,
            self.support,
            self.exactness_degree,
        )
    }

    /// The Christoffel transform: multiplies the measure by |z - x|^2.
    /// Support points landing exactly on x are annihilated and dropped.
    pub fn christoffel_weight(&self, x: Complex64) -> Result<Self> {
        let reweight = |(z, w): (&Complex64, &f64)| {
            let d = z - x;
            (*z, w * d.norm_sqr())
        };
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for (z, w) in self.nodes.iter().zip(&self.weights).map(reweight) {
            if w > 0.0 {
                nodes.push(z);
                weights.push(w);
            }
        }
        let atoms: Vec<(Complex64, f64)> = self
            .atoms
            .iter()
            .map(|&(y, t)| (y, t * (y - x).norm_sqr()))
            .filter(|(_, t)| *t > 0.0)
            .collect();
        if nodes.is_empty() && atoms.is_empty() {
            return Err(Error::DegenerateMeasure(format!(
                "Christoffel weight at {x} annihilated all mass"
            )));
        }
        let exact = if self.exactness_degree >= 2 {
            self.exactness_degree - 2
        } else if self.exactness_degree >= 0 {
            0
        } else {
            -1
        };
        Self::from_parts(nodes, weights, atoms, self.support, exact)
    }

    // -- inner product ------------------------------------------------------

    /// The sesquilinear form sum_i w_i conj(f(z_i)) g(z_i) over nodes and
    /// atoms. Conjugate-linear in the first argument. Pure; summation
    /// order is fixed by the point list.
    pub fn inner_product(&self, f: &Polynomial, g: &Polynomial) -> Complex64 {
        reduce_points(&self.points, |z, w| f.eval(z).conj() * g.eval(z) * w)
    }

    /// L2(mu) norm of f.
    pub fn norm(&self, f: &Polynomial) -> f64 {
        let v = reduce_points(&self.points, |z, w| {
            Complex64::new(f.eval(z).norm_sqr() * w, 0.0)
        });
        v.re.max(0.0).sqrt()
    }

    // -- serialization ------------------------------------------------------

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "support": self.support,
            "nodes": self.nodes.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            "weights": self.weights,
            "atoms": self.atoms.iter().map(|(z, t)| [z.re, z.im, *t]).collect::<Vec<_>>(),
            "exactness_degree": self.exactness_degree,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            support: SupportDescriptor,
            nodes: Vec<[f64; 2]>,
            weights: Vec<f64>,
            #[serde(default)]
            atoms: Vec<[f64; 3]>,
            exactness_degree: i64,
        }
        let raw: Raw = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidMeasure(format!("bad measure JSON: {e}")))?;
        Self::from_parts(
            raw.nodes
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
            raw.weights,
            raw.atoms
                .iter()
                .map(|[re, im, t]| (Complex64::new(*re, *im), *t))
                .collect(),
            raw.support,
            raw.exactness_degree,
        )
    }

    /// FNV-1a over the canonical JSON body; identifies the source measure
    /// in serialized bases.
    pub fn content_hash(&self) -> u64 {
        fnv1a(self.to_json().to_string().as_bytes())
    }
}

/// Weight family for [`Measure::interval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntervalKind {
    Chebyshev,
    Legendre,
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Principal m-th root. Re(u) >= 0 on our parametrizations, so the
/// principal branch is continuous where we use it.
fn principal_root(u: Complex64, m: u32) -> Complex64 {
    if u.re == 0.0 && u.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let (r, theta) = u.to_polar();
    Complex64::from_polar(r.powf(1.0 / m as f64), theta / m as f64)
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes (Newton on the recurrence, Chebyshev initial guesses)
// ---------------------------------------------------------------------------

/// Legendre P_n(x) and P_n'(x) via the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    // derivative from P_n and P_{n-1}
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes and weights of n-point Gauss-Legendre on [-1, 1] (weights sum
/// to 2). Tolerance 1e-15, at most 50 Newton steps per node.
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..50 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // ascending order
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| nodes[a].total_cmp(&nodes[b]));
    (
        idx.iter().map(|&i| nodes[i]).collect(),
        idx.iter().map(|&i| weights[i]).collect(),
    )
}

/// Gauss-Legendre on [0, 1] with weights summing to 1.
fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    (
        x.iter().map(|&t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|&t| 0.5 * t).collect(),
    )
}

// ---------------------------------------------------------------------------
