//! Named suites of identity checks behind `bargmann verify <suite>`.
//!
//! Every check reduces to one worst error compared against one tolerance.
//! Counting checks (violations, disagreements) use the count as the error
//! and `0` as the tolerance. Random inputs come from a ChaCha stream seeded
//! by `--seed`, so a report is reproducible bit for bit.

use std::f64::consts::PI;

use clap::ValueEnum;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bargmann::{
    bargmann_quadrature, bargmann_series, monomial, pi_a_box_closed_form, reproducing_project, stft_direct,
    stft_gaussian, uv_apply, ComplexPoint, EntireFunction, PlaneFn, UnitSquareLift, DEFAULT_PI_RADIUS,
};
use crate::classify::{
    classify, equiv_backward_check, equiv_forward_check, gaussian_membership, SpaceLabel, Verdict, DEFAULT_TOL,
};
use crate::error::Result;
use crate::fracft::{fractional_ft, verify_commutes_with_h, verify_isometry};
use crate::hermite::{hermite_function, CoefficientRule};
use crate::norms::{
    a2_weighted_norm_quadrature, a2_weighted_norm_series, ln_h_power_norm, mixed_norm, modulation_norm,
    pilipovic_seminorm, GridSpec, PlaneGrid, DEFAULT_N_SUP,
};
use crate::quadrature::UniformAxis;
use crate::special::ln_factorial;
use crate::weights::{
    dirichlet_simplex_identity, theta_closed_exponential, theta_closed_linear_exponential, theta_from_radial,
    RadialProfile, SequenceWeight, WeightSpec,
};
use crate::{analyze, FunctionSpec, GaussianSpec, HermiteExpansion, MultiIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Bridge,
    Reproducing,
    Weights,
    Norms,
    EquivLemma,
    Fracft,
    Classify,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bridge => "bridge",
            Suite::Reproducing => "reproducing",
            Suite::Weights => "weights",
            Suite::Norms => "norms",
            Suite::EquivLemma => "equiv-lemma",
            Suite::Fracft => "fracft",
            Suite::Classify => "classify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub worst_err: f64,
    pub tolerance: f64,
}

impl Check {
    /// Passes iff `worst_err ≤ tolerance`; a NaN error fails.
    pub fn new(name: &str, worst_err: f64, tolerance: f64) -> Self {
        let status = if worst_err <= tolerance { Status::Pass } else { Status::Fail };
        Self {
            name: name.to_string(),
            status,
            worst_err,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = match suite {
        Suite::Bridge => bridge(&mut rng)?,
        Suite::Reproducing => reproducing(&mut rng)?,
        Suite::Weights => weights(seed)?,
        Suite::Norms => norms(&mut rng)?,
        Suite::EquivLemma => equiv_lemma(&mut rng)?,
        Suite::Fracft => fracft(&mut rng)?,
        Suite::Classify => classify_suite(&mut rng)?,
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        checks,
    })
}

/// Maximum that keeps NaN instead of skipping it.
fn worst<I: IntoIterator<Item = f64>>(errs: I) -> f64 {
    errs.into_iter()
        .fold(0.0, |acc: f64, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / (1.0 + want.norm())
}

/// Uniform point in the ball `|z| ≤ radius` of `ℂ^d`.
fn point_in_ball(rng: &mut ChaCha8Rng, dim: usize, radius: f64) -> ComplexPoint {
    loop {
        let z: Vec<Complex64> = (0..dim)
            .map(|_| c(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius)))
            .collect();
        if z.iter().map(|v| v.norm_sqr()).sum::<f64>() <= radius * radius {
            return ComplexPoint::new(z);
        }
    }
}

fn random_phase(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(-PI..PI))
}

/// Random combination of Hermite functions of degree at most `top`.
fn random_finite(rng: &mut ChaCha8Rng, dim: usize, top: u32) -> HermiteExpansion {
    let terms = MultiIndex::all_up_to(dim, top)
        .into_iter()
        .map(|a| {
            let m = rng.gen_range(0.1..1.0);
            (a, m * random_phase(rng))
        })
        .collect::<Vec<_>>();
    HermiteExpansion::from_terms(dim, top, terms).expect("indices within cutoff")
}

fn bridge(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut errs = Vec::new();
    for dim in [1, 2] {
        for a in MultiIndex::all_up_to(dim, 6) {
            let f = FunctionSpec::hermite(a.clone());
            for _ in 0..10 {
                let z = point_in_ball(rng, dim, 3.0);
                errs.push(rel(bargmann_quadrature(&f, &z, None)?, monomial(&a, &z)));
            }
        }
    }
    let mut out = vec![Check::new("hermite_to_monomial", worst(errs), 1e-7)];

    let funcs = [
        FunctionSpec::hermite(MultiIndex::single(0)),
        FunctionSpec::hermite(MultiIndex::single(1)),
        FunctionSpec::hermite(MultiIndex::single(2)),
        FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 2.0, c(1.0, 0.0))?),
    ];
    let mut stft_errs = Vec::new();
    let mut uv_errs = Vec::new();
    for f in &funcs {
        let e = analyze(f, 1, 64, None)?;
        for _ in 0..25 {
            let (x, xi) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            stft_errs.push((stft_gaussian(&e, &[x], &[xi]) - stft_direct(f, &[x], &[xi], None)?).norm());
        }
        let g = f.clone();
        let v = PlaneFn::new(1, move |x: &[f64], xi: &[f64]| stft_direct(&g, x, xi, None).expect("dimension checked"));
        for _ in 0..10 {
            let z = point_in_ball(rng, 1, 2.0);
            let (x, xi) = (z.re(), z.im());
            uv_errs.push(rel(uv_apply(&v, &x, &xi), bargmann_series(&e, &z)));
        }
    }
    out.push(Check::new("stft_series_vs_direct", worst(stft_errs), 1e-7));
    out.push(Check::new("uv_inverts_stft", worst(uv_errs), 1e-6));
    let phi = HermiteExpansion::basis(MultiIndex::single(0));
    let origin = stft_gaussian(&phi, &[0.0], &[0.0]);
    out.push(Check::new(
        "window_stft_at_origin",
        (origin - c((2.0 * PI).sqrt().recip(), 0.0)).norm(),
        1e-15,
    ));
    Ok(out)
}

fn reproducing(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let lift = UnitSquareLift { dim: 1 };
    let mut errs = Vec::new();
    for z in [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(2.0, -1.0)] {
        let z: ComplexPoint = z.into();
        errs.push(rel(reproducing_project(&lift, &z, DEFAULT_PI_RADIUS, None)?, pi_a_box_closed_form(&z)));
    }
    let mut out = vec![Check::new("box_lift_closed_form", worst(errs), 1e-6)];
    let mut errs = Vec::new();
    for k in 0..=6 {
        let a = MultiIndex::single(k);
        let f = EntireFunction::Series(HermiteExpansion::basis(a.clone()));
        for _ in 0..4 {
            let z = point_in_ball(rng, 1, 2.0);
            errs.push(rel(reproducing_project(&f, &z, DEFAULT_PI_RADIUS, None)?, monomial(&a, &z)));
        }
    }
    out.push(Check::new("projection_fixes_monomials", worst(errs), 1e-6));
    Ok(out)
}

fn weights(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exp_errs = Vec::new();
    let mut root_errs = Vec::new();
    for dim in [1, 2] {
        for a in MultiIndex::all_up_to(dim, 25) {
            for h in [0.5, 1.0, 2.0] {
                let got = theta_from_radial(&RadialProfile::Exponential { h }, &a, dim)?;
                let want = theta_closed_exponential(h, &a, dim);
                exp_errs.push((got / want - 1.0).abs());
            }
            for radius in [0.5, 1.0, 2.0] {
                let got = theta_from_radial(&RadialProfile::RootExponential { radius }, &a, dim)?;
                let want = theta_closed_linear_exponential(radius, &a, dim);
                root_errs.push((got / want - 1.0).abs());
            }
        }
    }
    let mut out = vec![
        Check::new("theta_exponential_closed_form", worst(exp_errs), 1e-8),
        Check::new("theta_root_exponential_closed_form", worst(root_errs), 1e-8),
    ];

    let mut errs = Vec::new();
    for h in [0.5, 1.0, 2.0] {
        let theta = SequenceWeight::closed_exponential(h, 1);
        for _ in 0..5 {
            let top = rng.gen_range(0..=8);
            let e = random_finite(&mut rng, 1, top);
            let series = a2_weighted_norm_series(&e, &theta);
            let quad = a2_weighted_norm_quadrature(&EntireFunction::Series(e), |r: &[f64]| -h * r[0], 10.0, Some(96))?;
            errs.push((quad / series - 1.0).abs());
        }
    }
    out.push(Check::new("a2_norm_series_vs_quadrature", worst(errs), 1e-6));

    let mut zs = Vec::new();
    for (i, a) in [[0, 0], [1, 1], [2, 1], [3, 2]].into_iter().enumerate() {
        let r = dirichlet_simplex_identity(&MultiIndex::new(a.to_vec()), 1_000_000, seed.wrapping_add(i as u64))?;
        let dev = (r.lhs - r.rhs).abs();
        zs.push(if dev == 0.0 { 0.0 } else { dev / r.std_err });
    }
    out.push(Check::new("dirichlet_simplex_standard_errors", worst(zs), 3.0));
    Ok(out)
}

fn norms(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let axis = UniformAxis::new(-3.0, 3.0, 41);
    let vals: Vec<Complex64> = (0..41 * 41).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let g = PlaneGrid::new(vec![axis], vec![axis], vals)?;
    let mut errs = Vec::new();
    for (p, q) in [(1.0, 1.0), (2.0, 2.0), (1.0, 3.0), (0.5, 2.0), (f64::INFINITY, 1.0)] {
        let base = mixed_norm(&g, p, q)?;
        for _ in 0..3 {
            let lambda = c(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let scaled = mixed_norm(&g.scaled(lambda), p, q)?;
            errs.push((scaled / (lambda.norm() * base) - 1.0).abs());
        }
    }
    let mut out = vec![Check::new("mixed_norm_homogeneity", worst(errs), 1e-12)];

    let phi = HermiteExpansion::basis(MultiIndex::single(0));
    let n = modulation_norm(&phi, &WeightSpec::Unit, 2.0, 2.0, &GridSpec::symmetric(10.0, 201))?;
    out.push(Check::new("window_modulation_norm", (n - 1.0).abs(), 1e-8));

    let grid = GridSpec::symmetric(8.0, 161);
    let mut errs = Vec::new();
    for w in [WeightSpec::Unit, WeightSpec::Poly { r: 1.0 }, WeightSpec::Quadratic { h: 0.6 }] {
        for (p, q) in [(1.0, 1.0), (2.0, 2.0), (1.0, 2.0)] {
            let top = rng.gen_range(0..=6);
            let e = random_finite(rng, 1, top);
            let coarse = modulation_norm(&e, &w, p, q, &grid)?;
            let fine = modulation_norm(&e, &w, p, q, &grid.refined())?;
            errs.push((coarse / fine - 1.0).abs());
        }
    }
    out.push(Check::new("modulation_grid_refinement", worst(errs), 1e-3));

    let mut errs = Vec::new();
    for _ in 0..5 {
        let top = rng.gen_range(0..=8);
        let e = random_finite(rng, 1, top);
        let (h, s) = (rng.gen_range(0.5..2.0), rng.gen_range(0.25..1.5));
        let rep = pilipovic_seminorm(&e, h, s, 30)?;
        let brute = (0..=30u32)
            .map(|n| e.apply_h(n).l2_norm() / (h.powi(n as i32) * (2.0 * s * ln_factorial(n as u64)).exp()))
            .fold(0.0, f64::max);
        errs.push((rep.value / brute - 1.0).abs());
        for n in [0, 1, 7, 20] {
            errs.push((ln_h_power_norm(&e, n) - e.apply_h(n).l2_norm().ln()).abs());
        }
    }
    out.push(Check::new("seminorm_vs_direct_powers", worst(errs), 1e-10));
    Ok(out)
}

/// Decaying expansions `|c_α| ≈ u e^{−ρ|α|^{1/(2s)}}` with random phases.
fn decaying_corpus(rng: &mut ChaCha8Rng, n: usize) -> Vec<(HermiteExpansion, f64, f64)> {
    (0..n)
        .map(|_| {
            let s = [0.5, 1.0][rng.gen_range(0..2)];
            let h = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
            let dim = rng.gen_range(1..=2);
            let cutoff = rng.gen_range(8..=24);
            let rho = rng.gen_range(0.5..3.0);
            let terms: Vec<(MultiIndex, Complex64)> = MultiIndex::all_up_to(dim, cutoff)
                .into_iter()
                .map(|a| {
                    let m = rng.gen_range(0.1..1.0) * (-rho * (a.order() as f64).powf(0.5 / s)).exp();
                    (a, m * random_phase(rng))
                })
                .collect();
            let e = HermiteExpansion::from_terms(dim, cutoff, terms).expect("indices within cutoff");
            (e, h, s)
        })
        .collect()
}

fn equiv_lemma(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let corpus = decaying_corpus(rng, 50);
    let (mut violations, mut unbounded, mut argmax) = (0usize, 0usize, 0u32);
    for (e, h, s) in &corpus {
        violations += equiv_forward_check(e, *h, *s, DEFAULT_N_SUP)?.violations;
        let b = equiv_backward_check(e, *h, *s, DEFAULT_N_SUP)?;
        unbounded += usize::from(!b.bounded);
        argmax = argmax.max(b.argmax);
    }
    Ok(vec![
        Check::new("forward_bound_violations", violations as f64, 0.0),
        Check::new("backward_ratio_unbounded", unbounded as f64, 0.0),
        Check::new("backward_ratio_argmax", argmax as f64, 20.0),
    ])
}

/// `(−i)^n` built from the quarter-turn table rather than a complex power.
fn quarter_phase(n: i64) -> Complex64 {
    [c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)][n.rem_euclid(4) as usize]
}

/// `(2π)^{-1/2} ∫ f(x) e^{−ixξ} dx` by the trapezoid rule on `[−12, 12]`.
fn fourier_quadrature(e: &HermiteExpansion, xi: f64) -> Complex64 {
    let axis = UniformAxis::new(-12.0, 12.0, 2401);
    let w = axis.trapezoid_weights();
    let acc: Complex64 = axis
        .nodes()
        .iter()
        .zip(&w)
        .map(|(&x, &wt)| e.synthesize(&[x]) * Complex64::from_polar(wt, -x * xi))
        .sum();
    acc / (2.0 * PI).sqrt()
}

fn fracft(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut eigen = 0.0f64;
    for dim in [1usize, 2] {
        for a in MultiIndex::all_up_to(dim, 8) {
            let r: Vec<i64> = (0..dim).map(|_| rng.gen_range(-5..=5)).collect();
            let rf: Vec<f64> = r.iter().map(|&v| v as f64).collect();
            let n: i64 = r.iter().zip(a.entries()).map(|(rj, &aj)| rj * aj as i64).sum();
            let got = fractional_ft(&HermiteExpansion::basis(a.clone()), &rf)?.get(&a);
            eigen = eigen.max((got - quarter_phase(n)).norm());
        }
    }
    let mut out = vec![Check::new("eigenrelation_quarter_turns", eigen, 0.0)];

    let (mut exact, mut frac, mut period) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..10 {
        let e = random_finite(rng, 2, 8);
        let r1 = [rng.gen_range(-4..=4) as f64, rng.gen_range(-4..=4) as f64];
        let r2 = [rng.gen_range(-4..=4) as f64, rng.gen_range(-4..=4) as f64];
        let lhs = fractional_ft(&fractional_ft(&e, &r1)?, &r2)?;
        let rhs = fractional_ft(&e, &[r1[0] + r2[0], r1[1] + r2[1]])?;
        exact = exact.max(max_diff(&lhs, &rhs));
        let f1 = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        let f2 = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        let lhs = fractional_ft(&fractional_ft(&e, &f1)?, &f2)?;
        let rhs = fractional_ft(&e, &[f1[0] + f2[0], f1[1] + f2[1]])?;
        frac = frac.max(max_diff(&lhs, &rhs));
        period = period.max(max_diff(&fractional_ft(&e, &[4.0, -4.0])?, &e));
        let shifted = fractional_ft(&e, &[f1[0] + 4.0, f1[1]])?;
        frac = frac.max(max_diff(&shifted, &fractional_ft(&e, &f1)?));
    }
    out.push(Check::new("group_law_quarter_turns", exact, 0.0));
    out.push(Check::new("group_law_fractional", frac, 1e-13));
    out.push(Check::new("period_four", period, 0.0));

    let (mut bitwise, mut commute) = (0usize, 0.0f64);
    for _ in 0..5 {
        let e = random_finite(rng, 1, 10);
        bitwise += usize::from(!verify_commutes_with_h(&e, &[rng.gen_range(-4..=4) as f64], 3)?.bitwise_equal);
        commute = commute.max(verify_commutes_with_h(&e, &[rng.gen_range(-3.0..3.0)], 3)?.max_rel_diff);
    }
    out.push(Check::new("commutes_with_oscillator_integral", bitwise as f64, 0.0));
    out.push(Check::new("commutes_with_oscillator_fractional", commute, 1e-14));

    let grid = GridSpec::symmetric(10.0, 161);
    let weights = [
        WeightSpec::Unit,
        WeightSpec::Quadratic { h: 0.6 },
        WeightSpec::Poly { r: 1.0 },
        WeightSpec::Radial(RadialProfile::Exponential { h: 0.1 }),
    ];
    let mut iso = 0.0f64;
    for i in 0..10 {
        let top = rng.gen_range(0..=6);
        let e = random_finite(rng, 1, top);
        let r = rng.gen_range(-2.0..2.0);
        iso = iso.max(verify_isometry(&e, &[r], &weights[i % weights.len()], 2.0, &grid)?.rel_dev);
    }
    out.push(Check::new("radial_weight_isometry", iso, 1e-4));

    let mut ft = 0.0f64;
    for _ in 0..3 {
        let top = rng.gen_range(0..=6);
        let e = random_finite(rng, 1, top);
        let f = fractional_ft(&e, &[1.0])?;
        for _ in 0..5 {
            let xi = rng.gen_range(-3.0..3.0);
            ft = ft.max((f.synthesize(&[xi]) - fourier_quadrature(&e, xi)).norm());
        }
    }
    out.push(Check::new("unit_order_is_fourier_transform", ft, 1e-6));

    let h3 = fractional_ft(&HermiteExpansion::basis(MultiIndex::single(3)), &[2.0])?;
    out.push(Check::new(
        "half_turn_reflects_h3",
        (h3.synthesize(&[1.0]) + hermite_function(3, 1.0)).norm(),
        1e-15,
    ));
    Ok(out)
}

fn max_diff(a: &HermiteExpansion, b: &HermiteExpansion) -> f64 {
    a.iter()
        .map(|(k, v)| (v - b.get(k)).norm())
        .chain(b.iter().map(|(k, v)| (v - a.get(k)).norm()))
        .fold(0.0, f64::max)
}

/// `R diag(λ) Rᵀ` for a rotation by `theta`, eigenvalues drawn away from 1.
fn rotated_gaussian(rng: &mut ChaCha8Rng) -> Result<GaussianSpec> {
    let mut eig = || {
        if rng.gen_bool(0.5) {
            rng.gen_range(0.5..0.8)
        } else {
            rng.gen_range(1.25..2.0)
        }
    };
    let lam = [eig(), eig()];
    let theta: f64 = rng.gen_range(0.0..PI);
    let (cs, sn) = (theta.cos(), theta.sin());
    let a = DMatrix::from_fn(2, 2, |i, j| {
        let rot = |i: usize, k: usize| match (i, k) {
            (0, 0) | (1, 1) => cs,
            (0, 1) => -sn,
            _ => sn,
        };
        c((0..2).map(|k| rot(i, k) * lam[k] * rot(j, k)).sum(), 0.0)
    });
    GaussianSpec::new(a, vec![c(0.0, 0.0); 2], c(1.0, 0.0))
}

/// Gaussian inputs whose algebraic verdict the classifier must reproduce.
fn gaussian_cases(rng: &mut ChaCha8Rng) -> Result<Vec<GaussianSpec>> {
    let mut out = vec![
        GaussianSpec::isotropic(1, 1.0, c(1.0, 0.0))?,
        GaussianSpec::new(DMatrix::identity(1, 1), vec![c(1.0, 1.0)], c(1.0, 0.0))?,
        GaussianSpec::isotropic(2, 1.0, c(1.0, 0.0))?,
        GaussianSpec::isotropic(1, 2.0, c(1.0, 0.0))?,
        GaussianSpec::isotropic(2, 2.0, c(1.0, 0.0))?,
        GaussianSpec::new(
            DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0, 0.0), c(3.0, 0.0)])),
            vec![c(0.0, 0.0); 2],
            c(1.0, 0.0),
        )?,
    ];
    for _ in 0..20 {
        out.push(rotated_gaussian(rng)?);
    }
    Ok(out)
}

/// Randomized corpus spanning every rung of the ladder.
fn ladder_corpus(rng: &mut ChaCha8Rng, n: usize) -> Vec<HermiteExpansion> {
    (0..n)
        .map(|i| {
            let dim = rng.gen_range(1..=2);
            let cutoff = 30;
            if i % 5 == 0 {
                let top = rng.gen_range(0..=12);
                return random_finite(rng, dim, top).with_cutoff(cutoff);
            }
            let rule = match i % 5 {
                1 => CoefficientRule::StretchedExp {
                    r: rng.gen_range(0.2..2.0),
                    s: rng.gen_range(0.2..3.0),
                    scale: 1.0,
                },
                2 => CoefficientRule::Factorial {
                    radius: rng.gen_range(0.3..3.0),
                    scale: 1.0,
                },
                3 => CoefficientRule::StretchedGrowth {
                    r: rng.gen_range(0.2..2.0),
                    s: rng.gen_range(0.2..3.0),
                    scale: 1.0,
                },
                _ => CoefficientRule::FactorialGrowth {
                    radius: rng.gen_range(0.3..3.0),
                    scale: 1.0,
                },
            };
            let jitter = rng.gen_range(0.0..0.5);
            let terms: Vec<(MultiIndex, Complex64)> = MultiIndex::all_up_to(dim, cutoff)
                .into_iter()
                .map(|a| {
                    let ln = rule.ln_coefficient(&a) + rng.gen_range(-jitter..=jitter);
                    (a, ln.exp() * random_phase(rng))
                })
                .collect();
            HermiteExpansion::from_terms(dim, cutoff, terms).expect("indices within cutoff")
        })
        .collect()
}

fn classify_suite(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let member = |e: &HermiteExpansion, l: SpaceLabel| -> Result<bool> {
        Ok(classify(e, DEFAULT_TOL)?.verdict(l) == Some(Verdict::Member))
    };
    let non_member = |e: &HermiteExpansion, l: SpaceLabel| -> Result<bool> {
        Ok(classify(e, DEFAULT_TOL)?.verdict(l) == Some(Verdict::NonMember))
    };
    let mut misses = 0usize;
    for _ in 0..5 {
        let dim = rng.gen_range(1..=2);
        let top = rng.gen_range(0..=10);
        misses += usize::from(!member(&random_finite(rng, dim, top).with_cutoff(40), SpaceLabel::S0)?);
    }
    let geometric = CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40);
    misses += usize::from(!member(&geometric, SpaceLabel::S(0.5))?);
    misses += usize::from(!non_member(&geometric, SpaceLabel::SigmaHalf)?);
    let entire = CoefficientRule::Factorial { radius: 2.0, scale: 1.0 }.expansion(1, 40);
    misses += usize::from(!member(&entire, SpaceLabel::HFlat)?);
    let mut out = vec![Check::new("ground_truth_misses", misses as f64, 0.0)];

    let mut disagreements = 0usize;
    for g in gaussian_cases(rng)? {
        let algebraic = gaussian_membership(g.matrix(), g.linear())?.member;
        let e = analyze(&FunctionSpec::Gaussian(g.clone()), g.dim(), 40, None)?;
        let decay = classify(&e, DEFAULT_TOL)?.verdict(SpaceLabel::SigmaHalf);
        let agree = match decay {
            Some(Verdict::Member) => algebraic,
            Some(Verdict::NonMember) => !algebraic,
            _ => false,
        };
        disagreements += usize::from(!agree);
    }
    out.push(Check::new("gaussian_criterion_disagreements", disagreements as f64, 0.0));

    let (mut non_monotone, mut not_invariant) = (0usize, 0usize);
    for e in ladder_corpus(rng, 100) {
        let rep = classify(&e, DEFAULT_TOL)?;
        non_monotone += usize::from(!rep.is_monotone());
        let r: Vec<f64> = (0..e.dim()).map(|_| rng.gen_range(-4.0..4.0)).collect();
        not_invariant += usize::from(!classify(&fractional_ft(&e, &r)?, DEFAULT_TOL)?.same_verdicts(&rep));
    }
    out.push(Check::new("ladder_monotonicity_violations", non_monotone as f64, 0.0));
    out.push(Check::new("fracft_invariance_violations", not_invariant as f64, 0.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_status_follows_tolerance() {
        assert_eq!(Check::new("a", 1e-9, 1e-8).status, Status::Pass);
        assert_eq!(Check::new("a", 1e-7, 1e-8).status, Status::Fail);
        assert_eq!(Check::new("a", f64::NAN, 1.0).status, Status::Fail);
        assert!(worst([1.0, f64::NAN, 0.5]).is_nan());
    }

    #[test]
    fn quarter_phase_matches_power() {
        for n in -8..8 {
            assert!((quarter_phase(n) - c(0.0, -1.0).powi(n as i32)).norm() < 1e-15);
        }
    }

    #[test]
    fn rotated_gaussians_avoid_unit_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let g = rotated_gaussian(&mut rng).unwrap();
            let m = gaussian_membership(g.matrix(), g.linear()).unwrap();
            assert!(!m.member);
            assert!(m.eigenvalues.iter().all(|l| (l.re - 1.0).abs() > 0.2 && l.im.abs() < 1e-12));
        }
    }

    #[test]
    fn fracft_suite_passes() {
        let rep = run_suite(Suite::Fracft, 7).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}
