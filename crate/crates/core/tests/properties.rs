//! Property tests for the algebraic invariants: sesquilinearity of the
//! inner product, atom additivity, the Christoffel weight identity,
//! polynomial algebra round trips, and the Joukowski branch.

use num_complex::Complex64;
use proptest::prelude::*;

use opx_core::asymptotics::joukowski_phi;
use opx_core::measure::IntervalKind;
use opx_core::opoly::orthonormalize;
use opx_core::transforms::uvarov_norm_ratio;
use opx_core::{Measure, Polynomial};

fn complex_strategy(scale: f64) -> impl Strategy<Value = Complex64> {
    (-scale..scale, -scale..scale).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(complex_strategy(3.0), 0..=max_len).prop_map(Polynomial::new)
}

fn measure_strategy() -> impl Strategy<Value = Measure> {
    prop_oneof![
        (8usize..48).prop_map(|m| Measure::unit_circle_uniform(m).unwrap()),
        (4usize..10, 8usize..20).prop_map(|(r, a)| Measure::disk_area(r, a).unwrap()),
        (8usize..32)
            .prop_map(|n| Measure::interval(-2.0, 2.0, IntervalKind::Chebyshev, n).unwrap()),
    ]
}

proptest! {
    #[test]
    fn inner_product_hermitian(mu in measure_strategy(), f in poly_strategy(6), g in poly_strategy(6)) {
        let fg = mu.inner_product(&f, &g);
        let gf = mu.inner_product(&g, &f);
        prop_assert!((fg - gf.conj()).norm() <= 1e-12 * (1.0 + fg.norm()));
    }

    #[test]
    fn inner_product_self_nonnegative(mu in measure_strategy(), f in poly_strategy(6)) {
        let ff = mu.inner_product(&f, &f);
        prop_assert!(ff.im.abs() <= 1e-12 * (1.0 + ff.re.abs()));
        prop_assert!(ff.re >= -1e-14);
    }

    #[test]
    fn add_atom_additivity(
        mu in measure_strategy(),
        f in poly_strategy(5),
        g in poly_strategy(5),
        x in complex_strategy(2.0),
        t in 0.01f64..10.0,
    ) {
        let nu = mu.add_atom(x, t).unwrap();
        let before = mu.inner_product(&f, &g);
        let after = nu.inner_product(&f, &g);
        let atom_term = f.eval(x).conj() * g.eval(x) * t;
        let scale = 1.0 + before.norm() + atom_term.norm();
        prop_assert!((after - before - atom_term).norm() <= 1e-12 * scale);
    }

    #[test]
    fn christoffel_weight_shifts_the_form(
        f in poly_strategy(4),
        g in poly_strategy(4),
        x in complex_strategy(1.5),
    ) {
        let mu = Measure::disk_area(12, 24).unwrap();
        let nu = mu.christoffel_weight(x).unwrap();
        let lhs = nu.inner_product(&f, &g);
        let rhs = mu.inner_product(&f.mul_linear(x), &g.mul_linear(x));
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn product_evaluation_consistent(f in poly_strategy(6), g in poly_strategy(6), z in complex_strategy(2.0)) {
        let direct = f.mul(&g).eval(z);
        let split = f.eval(z) * g.eval(z);
        prop_assert!((direct - split).norm() <= 1e-9 * (1.0 + split.norm()));
    }

    #[test]
    fn synthetic_division_round_trip(f in poly_strategy(8), x in complex_strategy(2.0)) {
        let (q, r) = f.divide_linear(x);
        let back = q.mul_linear(x).add(&Polynomial::constant(r));
        for k in 0..=f.degree().unwrap_or(0) {
            prop_assert!((back.coeff(k) - f.coeff(k)).norm() <= 1e-10 * (1.0 + f.coeff(k).norm()));
        }
    }

    #[test]
    fn reversed_conj_involution(f in poly_strategy(7)) {
        if let Some(n) = f.degree() {
            let twice = f.reversed_conj(n).reversed_conj(n);
            for k in 0..=n {
                prop_assert!((twice.coeff(k) - f.coeff(k)).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn joukowski_branch_and_inverse(re in -8.0f64..8.0, im in -6.0f64..6.0) {
        let w = Complex64::new(re, im);
        // stay off the slit
        prop_assume!(!(im.abs() < 1e-6 && re.abs() <= 2.0 + 1e-6));
        let phi = joukowski_phi(w).unwrap();
        prop_assert!(phi.norm() > 1.0 - 1e-12);
        prop_assert!((phi + phi.inv() - w).norm() <= 1e-10 * (1.0 + w.norm()));
    }

    #[test]
    fn uvarov_ratio_at_least_one(
        x in complex_strategy(2.0),
        t in 0.01f64..10.0,
        n in 0usize..8,
    ) {
        let mu = Measure::unit_circle_uniform(32).unwrap();
        let basis = orthonormalize(&mu, 8).unwrap();
        prop_assert!(uvarov_norm_ratio(&basis, x, t, n).unwrap() >= 1.0);
    }
}
