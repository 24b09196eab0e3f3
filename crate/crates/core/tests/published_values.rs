//! End-to-end checks of the core pipeline against published numbers.

use std::f64::consts::{E, PI};

use jwkb_core::jwkb::{
    build_mode, jwkb_residual, mode_grid, solve_center_equation, solve_refined_center, CenterPair,
};
use jwkb_core::modefit::{default_cutoffs, optimize_fit, FitOptions};
use jwkb_core::potentials::{to_working_problem, PotentialSpec, WorkingProblem};
use jwkb_core::shooting::{
    argmax_abs, continuation_radius, march_eigenvalues, miss_distance, solve_from_seed,
    MarchOptions, Parity,
};
use jwkb_core::{c64, Complex64};

fn rotation() -> Complex64 {
    Complex64::from_polar(1.0, PI / 8.0)
}

fn problem(spec: PotentialSpec, m_max: usize) -> WorkingProblem {
    let radius = continuation_radius(&spec, m_max).unwrap();
    to_working_problem(&spec, radius).unwrap()
}

fn double_well(m_max: usize) -> WorkingProblem {
    problem(
        PotentialSpec::double_gaussian(100.0 / E, 10.0, 0.03, rotation()).unwrap(),
        m_max,
    )
}

fn bump(b: f64, m_max: usize) -> WorkingProblem {
    problem(PotentialSpec::gaussian_bump(b, rotation()).unwrap(), m_max)
}

fn even_pair(problem: &WorkingProblem, m: usize) -> jwkb_core::shooting::EigenPair {
    let mut all = march_eigenvalues(problem, Parity::Even, m, &MarchOptions::default());
    all.pop().unwrap().unwrap()
}

/// `λ` for which `(a, η)` solves the center equation.
fn implied_lambda(problem: &WorkingProblem, a: f64, eta: f64) -> Complex64 {
    problem.physical_eigenvalue(c64(eta * eta, 0.0) + problem.potential(a))
}

#[test]
fn double_well_march_reproduces_eigenvalue_table() {
    let published = [
        (0, 4.4063, 0.0, 5e-4),
        (10, 19.2609, 0.0, 2e-3),
        (20, 32.6595, 0.0, 2e-3),
        (26, 38.1852, -0.6680, 2e-3),
        (36, 46.9295, -7.3270, 2e-3),
    ];
    let p = double_well(36);
    let pairs = march_eigenvalues(&p, Parity::Even, 36, &MarchOptions::default());
    assert_eq!(pairs.len(), 19);
    for r in &pairs {
        let pair = r.as_ref().unwrap();
        let miss = miss_distance(&p, pair.z, pair.parity, pair.x_match).unwrap();
        assert!(miss.norm() < 1e-8, "m = {}: miss {miss}", pair.index);
        if pair.index <= 20 {
            assert!(
                pair.lambda.im.abs() < 5e-5,
                "m = {}: {}",
                pair.index,
                pair.lambda
            );
        }
    }
    for (m, re, im, tol) in published {
        let lambda = pairs[m / 2].as_ref().unwrap().lambda;
        assert!(
            (lambda.re - re).abs() <= tol && (lambda.im - im).abs() <= tol,
            "m = {m}: {lambda}"
        );
    }
}

#[test]
fn seeded_solve_above_the_barrier() {
    // At m = 40 Re z exceeds Re W everywhere, so there is no turning point.
    let p = double_well(52);
    let marched = even_pair(&p, 40);
    let seed = p.working_eigenvalue(c64(50.6604, -10.9142));
    let seeded = solve_from_seed(&p, seed, Parity::Even, 40, None, 4001).unwrap();
    assert!(
        (seeded.z - marched.z).norm() < 1e-9,
        "{} vs {}",
        seeded.z,
        marched.z
    );
}

#[test]
fn eigenfunction_peaks() {
    let harmonic = problem(PotentialSpec::harmonic(rotation()).unwrap(), 20);
    let peak = argmax_abs(&even_pair(&harmonic, 20));
    assert!((peak - 4.831).abs() <= 5e-3, "{peak}");

    let wide = bump(100.0, 50);
    let pair = even_pair(&wide, 50);
    let peak = argmax_abs(&pair);
    assert!((peak - 7.479).abs() <= 5e-3, "{peak}");
    let refined = solve_refined_center(&wide, pair.lambda);
    assert!(
        (refined[0].center.a - 7.475).abs() <= 5e-3,
        "{:?}",
        refined[0]
    );
}

#[test]
fn harmonic_centers_at_m20() {
    let p = problem(PotentialSpec::harmonic(rotation()).unwrap(), 20);
    let lambda = rotation() * 41.0;
    let plain = solve_center_equation(&p, lambda);
    assert!((plain[0].a - 4.711).abs() <= 1e-3);
    let refined = solve_refined_center(&p, lambda);
    assert!((refined[0].center.a - 4.822).abs() <= 5e-3);
}

#[test]
fn bump_center_equation_recovers_published_pairs() {
    let p = bump(10.0, 50);
    for (a, eta) in [(5.0880, 3.9262), (3.5726, 6.3897)] {
        let lambda = implied_lambda(&p, a, eta);
        let roots = solve_center_equation(&p, lambda);
        let hit = roots
            .iter()
            .find(|r| (r.a - a).abs() < 5e-3 && (r.eta - eta).abs() < 5e-3)
            .unwrap_or_else(|| panic!("({a}, {eta}) not among {roots:?}"));
        let residual = hit.energy(&p) - p.working_eigenvalue(lambda);
        assert!(residual.norm() < 1e-9, "{residual}");
    }
}

#[test]
fn second_bump_mode_has_interior_cutoff() {
    let p = bump(10.0, 50);
    let pair = even_pair(&p, 40);
    let centers = solve_center_equation(&p, pair.lambda);
    assert_eq!(centers.len(), 2);
    let second = build_mode(
        &p,
        centers[1],
        1.0,
        &mode_grid(p.radius(), centers[1].a, 4001),
    )
    .unwrap();
    let (_, s2) = default_cutoffs(&second);
    let right_end = *second.grid.last().unwrap();
    assert!(s2 < right_end, "s2 = {s2} at the end {right_end}");
}

#[test]
fn coefficient_ratio_at_m34() {
    let p = bump(10.0, 50);
    let pair = even_pair(&p, 34);
    let centers = solve_center_equation(&p, pair.lambda);
    let modes: Vec<_> = centers
        .iter()
        .take(2)
        .map(|&c| build_mode(&p, c, 1.0, &mode_grid(p.radius(), c.a, 4001)).unwrap())
        .collect();
    let fit = optimize_fit(&pair, &modes, &FitOptions::default()).unwrap();
    let ratio = fit.coefficient_ratio.unwrap();
    assert!((ratio - 0.7876).abs() <= 0.2 * 0.7876, "{ratio}");
    assert!((fit.delta - fit.delta_direct).abs() < 1e-8);
}

#[test]
fn mode_residual_decreases_with_h() {
    let p = problem(PotentialSpec::harmonic(rotation()).unwrap(), 20);
    let center: CenterPair = solve_center_equation(&p, rotation() * 41.0)[0];
    let grid = mode_grid(p.radius(), center.a, 4001);
    let coarse = jwkb_residual(
        &p,
        &build_mode(&p, center, 1.0, &grid).unwrap(),
        (-0.5, 0.5),
    );
    let fine = jwkb_residual(
        &p,
        &build_mode(&p, center, 0.5, &grid).unwrap(),
        (-0.5, 0.5),
    );
    assert!(coarse.is_finite() && coarse > 0.0);
    assert!(fine < coarse);
}
