//! The non-linear ratio characterization: weighted Cauchy sums, the convex
//! hull lower bound, and the leading-coefficient/normalization verification
//! harness.
//!
//! For z outside the convex hull of the support, the denominator
//! integral(|p_n|^2 / (z - w)) d mu is bounded below by
//! dist(z, ch(mu)) / sup_w |z - w|^2, so for any polynomial Q of degree at
//! most n the ratio of weighted Cauchy sums reproduces Q(z) / p_n(z).

use num_complex::Complex64;

use crate::error::Error;
use crate::measure::{KahanComplex, Measure, Polynomial};
use crate::opoly::OrthoBasis;
use crate::Result;

// ---------------------------------------------------------------------------
// Convex hulls
// ---------------------------------------------------------------------------

/// Convex hull of a finite point set, counterclockwise. Degenerate hulls
/// (single point, collinear segment) keep fewer than three vertices.
#[derive(Debug, Clone)]
pub struct ConvexHullData {
    vertices: Vec<Complex64>,
}

impl ConvexHullData {
    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Largest vertex modulus; 0 for an empty hull.
    pub fn radius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Euclidean distance from z to the hull (0 if inside or on it).
    pub fn distance(&self, z: Complex64) -> f64 {
        match self.vertices.len() {
            0 => f64::INFINITY,
            1 => (z - self.vertices[0]).norm(),
            2 => segment_distance(self.vertices[0], self.vertices[1], z),
            n => {
                let mut inside = true;
                let mut best = f64::INFINITY;
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    if cross(a, b, z) < 0.0 {
                        inside = false;
                    }
                    best = best.min(segment_distance(a, b, z));
                }
                if inside {
                    0.0
                } else {
                    best
                }
            }
        }
    }
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segment_distance(a: Complex64, b: Complex64, z: Complex64) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sqr();
    if len_sq == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a).re * ab.re + (z - a).im * ab.im) / len_sq;
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// Monotone-chain hull of all support points (nodes and atom locations).
pub fn convex_hull(mu: &Measure) -> ConvexHullData {
    let mut pts: Vec<Complex64> = mu.points().iter().map(|&(z, _)| z).collect();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup_by(|a, b| a.re == b.re && a.im == b.im);
    if pts.len() <= 2 {
        return ConvexHullData { vertices: pts };
    }
    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexHullData { vertices: lower }
}

/// Analytic lower bound dist(z, ch(mu)) / sup_{w in ch(mu)} |z - w|^2 on
/// the weighted Cauchy denominator; the sup is attained at a hull vertex.
pub fn lower_bound_az(hull: &ConvexHullData, z: Complex64) -> Result<f64> {
    let dist = hull.distance(z);
    if dist <= 1e-12 {
        return Err(Error::ZInsideHull {
            z: format!("{z}"),
            dist,
        });
    }
    let sup_sq = hull
        .vertices
        .iter()
        .map(|v| (z - v).norm_sqr())
        .fold(0.0, f64::max);
    Ok(dist / sup_sq)
}

// ---------------------------------------------------------------------------
// Weighted Cauchy sums
// ---------------------------------------------------------------------------

/// One evaluation of the ratio formula at (n, z).
#[derive(Debug, Clone)]
pub struct CauchyEvaluation {
    pub z: Complex64,
    pub n: usize,
    /// integral conj(p_n) Q / (z - w) d mu
    pub numerator: Complex64,
    /// integral |p_n|^2 / (z - w) d mu
    pub denominator: Complex64,
    pub ratio: Complex64,
    /// Analytic lower bound on |denominator|.
    pub bound_az: f64,
}

fn require_measure(basis: &OrthoBasis) -> Result<&Measure> {
    basis.source_measure().ok_or_else(|| {
        Error::InvalidMeasure(
            "Cauchy sums need a quadrature-backed basis; this one was built from \
             Verblunsky coefficients"
                .into(),
        )
    })
}

fn cauchy_eval(
    basis: &OrthoBasis,
    mu: &Measure,
    hull: &ConvexHullData,
    n: usize,
    q: &Polynomial,
    z: Complex64,
) -> Result<CauchyEvaluation> {
    if let Some(d) = q.degree() {
        if d > n {
            return Err(Error::IndexOutOfRange { index: d, max: n });
        }
    }
    let bound = lower_bound_az(hull, z)?;
    let pn = basis.node_values(n).ok_or(Error::IndexOutOfRange {
        index: n,
        max: basis.max_degree(),
    })?;
    let mut num = KahanComplex::default();
    let mut den = KahanComplex::default();
    for (&(w_pt, weight), &p) in mu.points().iter().zip(pn) {
        let kernel = weight / (z - w_pt);
        num.add(p.conj() * q.eval(w_pt) * kernel);
        den.add(p.norm_sqr() * kernel);
    }
    let numerator = num.value();
    let denominator = den.value();
    if denominator.norm() < bound / 10.0 {
        return Err(Error::NearZeroDenominator {
            value: denominator.norm(),
            threshold: bound / 10.0,
        });
    }
    Ok(CauchyEvaluation {
        z,
        n,
        numerator,
        denominator,
        ratio: numerator / denominator,
        bound_az: bound,
    })
}

/// Ratio of weighted Cauchy sums for Q against p_n at z outside the hull.
/// Reproduces Q(z) / p_n(z) wherever p_n(z) is away from zero.
pub fn saff_ratio(
    basis: &OrthoBasis,
    n: usize,
    q: &Polynomial,
    z: Complex64,
) -> Result<CauchyEvaluation> {
    let mu = require_measure(basis)?;
    let hull = convex_hull(mu);
    cauchy_eval(basis, mu, &hull, n, q, z)
}

/// The derivation residual
///   Q(z) integral conj(p_n)/(z-w) d mu - integral conj(p_n) Q/(z-w) d mu,
/// zero in exact arithmetic for deg Q <= n, z outside the hull.
pub fn orthogonality_residual(
    basis: &OrthoBasis,
    n: usize,
    q: &Polynomial,
    z: Complex64,
) -> Result<Complex64> {
    let mu = require_measure(basis)?;
    let hull = convex_hull(mu);
    let dist = hull.distance(z);
    if dist <= 1e-12 {
        return Err(Error::ZInsideHull {
            z: format!("{z}"),
            dist,
        });
    }
    if let Some(d) = q.degree() {
        if d > n {
            return Err(Error::IndexOutOfRange { index: d, max: n });
        }
    }
    let pn = basis.node_values(n).ok_or(Error::IndexOutOfRange {
        index: n,
        max: basis.max_degree(),
    })?;
    let mut plain = KahanComplex::default();
    let mut weighted = KahanComplex::default();
    for (&(w_pt, weight), &p) in mu.points().iter().zip(pn) {
        let kernel = weight / (z - w_pt);
        plain.add(p.conj() * kernel);
        weighted.add(p.conj() * q.eval(w_pt) * kernel);
    }
    Ok(q.eval(z) * plain.value() - weighted.value())
}

// ---------------------------------------------------------------------------
// verify_nis
// ---------------------------------------------------------------------------

/// One row of the verification table.
#[derive(Debug, Clone)]
pub struct NisRow {
    pub n: usize,
    pub z: Complex64,
    /// |Q_n(z)/p_n(z) - 1|
    pub ratio_err: f64,
    /// | ||Q_n|| - 1 |  (hypothesis 1)
    pub norm_gap: f64,
    /// | tau_n / kappa_n - 1 |  (hypothesis 2)
    pub leading_gap: f64,
    /// Schwarz envelope ||Q_n - p_n|| / (dist(z, hull) |denominator|);
    /// certifies ratio_err <= envelope up to rounding.
    pub schwarz_envelope: f64,
}

#[derive(Debug, Clone, Default)]
pub struct NisReport {
    pub rows: Vec<NisRow>,
}

impl NisReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,z_re,z_im,ratio_err,norm_gap,leading_gap,schwarz_envelope\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.n, r.z.re, r.z.im, r.ratio_err, r.norm_gap, r.leading_gap, r.schwarz_envelope
            ));
        }
        out
    }
}

/// Runs the two-hypothesis verification for a family n -> Q_n of degree
/// exactly n over a z grid. Rows are ordered by (n, z index).
pub fn verify_nis<F>(
    basis: &OrthoBasis,
    q_family: F,
    z_grid: &[Complex64],
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<NisReport>
where
    F: Fn(usize) -> Polynomial,
{
    let mu = require_measure(basis)?;
    let hull = convex_hull(mu);
    let mut rows = Vec::new();
    for n in n_range {
        let q = q_family(n);
        if q.degree() != Some(n) {
            return Err(Error::InvalidMeasure(format!(
                "Q_{n} must have degree exactly {n}, got {:?}",
                q.degree()
            )));
        }
        let q_norm = mu.norm(&q);
        let tau = q.leading().expect("degree checked above");
        let leading_gap = (tau / basis.kappa(n) - Complex64::new(1.0, 0.0)).norm();
        let diff = q.sub(basis.coefficients(n)?);
        let diff_norm = mu.norm(&diff);
        for &z in z_grid {
            let ce = cauchy_eval(basis, mu, &hull, n, &q, z)?;
            let pnz = basis.evaluate(n, z)?;
            let ratio_err = if pnz.norm() > 1e-12 {
                (q.eval(z) / pnz - Complex64::new(1.0, 0.0)).norm()
            } else {
                (ce.ratio - Complex64::new(1.0, 0.0)).norm()
            };
            let envelope = diff_norm / (hull.distance(z) * ce.denominator.norm());
            rows.push(NisRow {
                n,
                z,
                ratio_err,
                norm_gap: (q_norm - 1.0).abs(),
                leading_gap,
                schwarz_envelope: envelope,
            });
        }
    }
    Ok(NisReport { rows })
}

/// The experiment grid: 16 points on each circle |z| = R for
/// R in {1.25, 1.5, 2, 4}, scaled by the hull radius when the support is
/// not contained in the closed unit disk.
pub fn standard_z_grid(mu: &Measure) -> Vec<Complex64> {
    let hull = convex_hull(mu);
    let scale = hull.radius().max(1.0);
    let mut grid = Vec::with_capacity(64);
    for &factor in &[1.25, 1.5, 2.0, 4.0] {
        let r = factor * scale;
        for j in 0..16 {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 16.0;
            grid.push(Complex64::from_polar(r, theta));
        }
    }
    grid
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{IntervalKind, SupportDescriptor};
    use crate::opoly::orthonormalize;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hull_of_fourth_roots_is_square() {
        let mu = Measure::unit_circle_uniform(4).unwrap();
        let hull = convex_hull(&mu);
        assert_eq!(hull.vertices().len(), 4);
        assert!(!hull.is_degenerate());
        for v in hull.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn hull_of_single_atom_is_degenerate() {
        let mu = Measure::from_parts(
            Vec::new(),
            Vec::new(),
            vec![(c(0.0, 0.0), 1.0)],
            SupportDescriptor::Custom,
            -1,
        )
        .unwrap();
        let hull = convex_hull(&mu);
        assert_eq!(hull.vertices().len(), 1);
        assert!(hull.is_degenerate());
    }

    #[test]
    fn hull_of_collinear_nodes_is_segment() {
        let mu = Measure::from_parts(
            vec![c(-2.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)],
            vec![0.25; 4],
            Vec::new(),
            SupportDescriptor::Custom,
            -1,
        )
        .unwrap();
        let hull = convex_hull(&mu);
        assert_eq!(hull.vertices().len(), 2);
        assert!(hull.is_degenerate());
        assert!((hull.distance(c(0.0, 1.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn all_support_points_inside_hull() {
        let mu = Measure::lemniscate_boundary(3, 64).unwrap();
        let hull = convex_hull(&mu);
        for &(z, _) in mu.points() {
            assert!(hull.distance(z) <= 1e-12);
        }
    }

    #[test]
    fn lower_bound_examples() {
        // fine circle: bound at z = 2 approaches dist/sup^2 = 1/9
        let mu = Measure::unit_circle_uniform(4096).unwrap();
        let hull = convex_hull(&mu);
        let b = lower_bound_az(&hull, c(2.0, 0.0)).unwrap();
        assert!((b - 1.0 / 9.0).abs() < 1e-3, "bound {b}");

        // point hull at 0, z = 3 -> 3/9
        let point = ConvexHullData {
            vertices: vec![c(0.0, 0.0)],
        };
        let b = lower_bound_az(&point, c(3.0, 0.0)).unwrap();
        assert!((b - 1.0 / 3.0).abs() < 1e-15);

        // segment [-1, 1], z = 1 + i: dist 1, farthest vertex -1
        let seg = ConvexHullData {
            vertices: vec![c(-1.0, 0.0), c(1.0, 0.0)],
        };
        let b = lower_bound_az(&seg, c(1.0, 1.0)).unwrap();
        assert!((b - 0.2).abs() < 1e-15);
    }

    #[test]
    fn inside_hull_rejected() {
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let hull = convex_hull(&mu);
        assert!(matches!(
            lower_bound_az(&hull, c(0.2, 0.1)),
            Err(Error::ZInsideHull { .. })
        ));
    }

    #[test]
    fn saff_ratio_self_is_one() {
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let basis = orthonormalize(&mu, 12).unwrap();
        for n in [1usize, 5, 12] {
            let q = basis.coefficients(n).unwrap().clone();
            let ce = saff_ratio(&basis, n, &q, c(2.0, 0.5)).unwrap();
            assert!((ce.ratio - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn saff_ratio_monomial_shift() {
        // free circle case: z^{n-1} / z^n at z = 2 is 1/2
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let basis = orthonormalize(&mu, 10).unwrap();
        let q = Polynomial::monomial(9, c(1.0, 0.0));
        let ce = saff_ratio(&basis, 10, &q, c(2.0, 0.0)).unwrap();
        assert!((ce.ratio - c(0.5, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn saff_ratio_area_closed_form() {
        let mu = Measure::disk_area(16, 32).unwrap();
        let basis = orthonormalize(&mu, 10).unwrap();
        let n = 8;
        let q = basis.coefficients(n - 1).unwrap().clone();
        let ce = saff_ratio(&basis, n, &q, c(2.0, 0.0)).unwrap();
        let expect = (n as f64 / (n as f64 + 1.0)).sqrt() / 2.0;
        assert!((ce.ratio - c(expect, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn saff_ratio_king_identity_random() {
        use crate::rng::SplitMix64;
        let mu = Measure::interval(-2.0, 2.0, IntervalKind::Chebyshev, 128).unwrap();
        let basis = orthonormalize(&mu, 20).unwrap();
        let grid = standard_z_grid(&mu);
        let mut rng = SplitMix64::new(31);
        for _ in 0..50 {
            let n = 1 + rng.below(20);
            let d = rng.below(n + 1);
            let q = Polynomial::new((0..=d).map(|_| rng.complex(2.0)).collect());
            if q.degree().is_none() {
                continue;
            }
            let z = grid[rng.below(grid.len())];
            let ce = saff_ratio(&basis, n, &q, z).unwrap();
            let direct = q.eval(z) / basis.evaluate(n, z).unwrap();
            let tol = 1e-9 * direct.norm().max(1.0);
            assert!((ce.ratio - direct).norm() < tol, "n={n} z={z}");
        }
    }

    #[test]
    fn denominator_respects_lower_bound() {
        let mu = Measure::unit_circle_uniform(256).unwrap();
        let basis = orthonormalize(&mu, 40).unwrap();
        let hull = convex_hull(&mu);
        for dist in [0.1, 0.5, 1.0] {
            let z = c(1.0 + dist, 0.0);
            let bound = lower_bound_az(&hull, z).unwrap();
            for n in [0usize, 10, 40] {
                let q = basis.coefficients(n).unwrap().clone();
                let ce = saff_ratio(&basis, n, &q, z).unwrap();
                assert!(
                    ce.denominator.norm() >= bound - 1e-10,
                    "n={n} dist={dist}: |den|={} < {}",
                    ce.denominator.norm(),
                    bound
                );
            }
        }
    }

    #[test]
    fn orthogonality_residual_small() {
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let basis = orthonormalize(&mu, 8).unwrap();
        let scale = 1.0;
        // constant Q
        let r = orthogonality_residual(&basis, 3, &Polynomial::one(), c(3.0, 0.0)).unwrap();
        assert!(r.norm() < 1e-10 * scale);
        // Q = z^2, n = 5, z = 3
        let q = Polynomial::monomial(2, c(1.0, 0.0));
        let r = orthogonality_residual(&basis, 5, &q, c(3.0, 0.0)).unwrap();
        assert!(r.norm() < 1e-10 * scale);
        // boundary degree: deg Q = n
        let q = Polynomial::monomial(5, c(1.0, 0.0));
        let r = orthogonality_residual(&basis, 5, &q, c(3.0, 0.0)).unwrap();
        assert!(r.norm() < 1e-10 * scale);
    }

    #[test]
    fn degree_above_n_rejected() {
        let mu = Measure::unit_circle_uniform(32).unwrap();
        let basis = orthonormalize(&mu, 6).unwrap();
        let q = Polynomial::monomial(5, c(1.0, 0.0));
        assert!(matches!(
            saff_ratio(&basis, 4, &q, c(2.0, 0.0)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn verify_nis_self_family_is_exact() {
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let basis = orthonormalize(&mu, 10).unwrap();
        let grid = [c(2.0, 0.0), c(0.0, -3.0)];
        let report = verify_nis(
            &basis,
            |n| basis.coefficients(n).unwrap().clone(),
            &grid,
            2..=10,
        )
        .unwrap();
        for row in &report.rows {
            assert!(row.ratio_err < 1e-12);
            assert!(row.norm_gap < 1e-12);
            assert!(row.leading_gap < 1e-12);
            assert!(row.ratio_err <= row.schwarz_envelope + 1e-10);
        }
    }

    #[test]
    fn verify_nis_shifted_family_on_circle() {
        // Q_n = z p_{n-1} on the free circle: z * z^{n-1} = z^n = p_n
        let mu = Measure::unit_circle_uniform(64).unwrap();
        let basis = orthonormalize(&mu, 10).unwrap();
        let grid = [c(1.5, 1.0)];
        let report = verify_nis(
            &basis,
            |n| basis.coefficients(n - 1).unwrap().shift_up(),
            &grid,
            1..=10,
        )
        .unwrap();
        for row in &report.rows {
            assert!(row.ratio_err < 1e-12, "n = {}", row.n);
        }
    }

    #[test]
    fn verify_nis_envelope_certifies_error() {
        // perturbed family: Q_n = p_n + 0.05 p_{n-1}
        let mu = Measure::disk_area(16, 40).unwrap();
        let basis = orthonormalize(&mu, 12).unwrap();
        let grid = standard_z_grid(&mu);
        let report = verify_nis(
            &basis,
            |n| {
                let p = basis.coefficients(n).unwrap();
                let prev = basis.coefficients(n - 1).unwrap();
                p.add(&prev.scale(c(0.05, 0.0)))
            },
            &grid,
            1..=12,
        )
        .unwrap();
        for row in &report.rows {
            assert!(
                row.ratio_err <= row.schwarz_envelope + 1e-10,
                "n = {} z = {}: {} > {}",
                row.n,
                row.z,
                row.ratio_err,
                row.schwarz_envelope
            );
        }
    }

    #[test]
    fn verify_nis_uvarov_family_error_decreases() {
        // Q_n from the atom-perturbed measure: x = 1 satisfies the
        // kernel-decay condition for area measure, so the ratio error
        // falls with n.
        let mu = Measure::disk_area(34, 68).unwrap();
        let basis = orthonormalize(&mu, 30).unwrap();
        let perturbed = orthonormalize(&mu.add_atom(c(1.0, 0.0), 1.0).unwrap(), 30).unwrap();
        let report = verify_nis(
            &basis,
            |n| perturbed.coefficients(n).unwrap().clone(),
            &[c(2.0, 0.0)],
            1..=30,
        )
        .unwrap();
        let early = report.rows[2].ratio_err;
        let late = report.rows.last().unwrap().ratio_err;
        assert!(late < early / 3.0, "early {early}, late {late}");
        // hypothesis gaps close alongside
        assert!(report.rows.last().unwrap().norm_gap < report.rows[2].norm_gap);
        for row in &report.rows {
            assert!(row.ratio_err <= row.schwarz_envelope + 1e-10);
        }
    }

    #[test]
    fn max_ratio_error_nonincreasing_in_ring_radius() {
        // max-modulus proxy: Q_n/p_n - 1 is analytic outside the hull
        // including infinity, so ring maxima shrink as rings grow.
        let mu = Measure::disk_area(16, 40).unwrap();
        let basis = orthonormalize(&mu, 12).unwrap();
        let n = 10usize;
        let q = {
            let p = basis.coefficients(n).unwrap();
            let prev = basis.coefficients(n - 1).unwrap();
            p.add(&prev.scale(c(0.1, 0.0)))
        };
        let mut maxima = Vec::new();
        for &r in &[1.25, 1.5, 2.0, 4.0] {
            let mut worst = 0.0_f64;
            for j in 0..64 {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
                let z = Complex64::from_polar(r, theta);
                let ratio = q.eval(z) / basis.evaluate(n, z).unwrap();
                worst = worst.max((ratio - c(1.0, 0.0)).norm());
            }
            maxima.push(worst);
        }
        for pair in maxima.windows(2) {
            assert!(
                pair[1] <= pair[0] * (1.0 + 1e-9),
                "ring maxima increased: {maxima:?}"
            );
        }
    }

    #[test]
    fn standard_grid_clears_hull() {
        for mu in [
            Measure::unit_circle_uniform(64).unwrap(),
            Measure::interval(-2.0, 2.0, IntervalKind::Chebyshev, 32).unwrap(),
            Measure::lemniscate_boundary(2, 64).unwrap(),
        ] {
            let hull = convex_hull(&mu);
            for z in standard_z_grid(&mu) {
                assert!(hull.distance(z) > 0.1, "z = {z} too close to hull");
            }
        }
    }
}
