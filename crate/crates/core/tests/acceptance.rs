//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p collective-qubits --test acceptance`.

use std::f64::consts::{E, PI};
use std::process::ExitCode;

use collective_qubits::collective_params::{collective_damping, dipole_dipole_shift};
use collective_qubits::concurrence::{wootters_concurrence, x_state_concurrence};
use collective_qubits::dynamics::{
    initial_state_matrix, one_photon_leakage, product_to_collective, Propagator,
};
use collective_qubits::events::{
    approx_death_revival, closed_form_events, death_time_independent, death_time_scan,
    second_revival_estimate, Direction,
};
use collective_qubits::{
    analytic_elements, coupling_from_separation, integrate, ClosedForm, CollectiveCoupling,
    DensityMatrix4, Trajectory, XState,
};
use nalgebra::Matrix4;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lambda_20() -> CollectiveCoupling {
    coupling_from_separation(0.05, 1.0).unwrap()
}

fn couplings_values() -> Outcome {
    let kr = 2.0 * PI / 20.0;
    let g12 = collective_damping(kr).unwrap();
    let o12 = dipole_dipole_shift(kr).unwrap();
    let limit = collective_damping(1e-3).unwrap();
    check(
        (g12 - 0.9804).abs() <= 5e-4 && (o12 - 23.08).abs() <= 1e-2 && (limit - 1.0).abs() < 1e-5,
        format!("gamma12 = {g12:.6}, Omega12 = {o12:.4}, gamma12(kr=1e-3) = {limit:.9}"),
    )
}

fn headline_times() -> Outcome {
    let c = lambda_20();
    let model = ClosedForm::new(0.9, 1.0, c.gamma12).unwrap();
    let events = closed_form_events(&model, 20.0, 1e-3).map_err(|e| e.to_string())?;
    let death = events.death_time.unwrap_or(f64::NAN);
    let revival = events.first_revival.unwrap_or(f64::NAN);
    check(
        (death - 0.60).abs() <= 0.02 && (revival - 1.70).abs() <= 0.02,
        format!("t_d = {death:.6} (want 0.60 +/- 0.02), t_r = {revival:.6} (want 1.70 +/- 0.02)"),
    )
}

fn independent_atoms() -> Outcome {
    let model = ClosedForm::new(0.9, 1.0, 0.0).unwrap();
    let events = closed_form_events(&model, 20.0, 1e-3).map_err(|e| e.to_string())?;
    let death = events.death_time.unwrap_or(f64::NAN);
    let eq14 = death_time_independent(0.9, 1.0).unwrap();
    check(
        (death - eq14).abs() < 1e-5
            && (eq14 - 0.4055).abs() < 5e-5
            && events.first_revival.is_none(),
        format!(
            "t_d = {death:.7}, ln(1.5) = {eq14:.7}, revivals = {}",
            events
                .crossings
                .iter()
                .filter(|c| c.direction == Direction::Revival)
                .count()
        ),
    )
}

fn transcendental_roots() -> Outcome {
    // Locate the onset of two roots by bisection on p.
    let (mut lo, mut hi) = (0.5, 0.99);
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if approx_death_revival(mid, 1.0).is_some() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let onset = 0.5 * (lo + hi);
    let expected = E * E / (1.0 + E * E);
    let (td, tr) = approx_death_revival(0.9, 1.0).ok_or("no roots at p = 0.9")?;
    check(
        (onset - expected).abs() < 1e-5
            && (onset - 0.88080).abs() < 1e-5
            && (td - 0.620).abs() < 1e-3
            && (tr - 1.512).abs() < 1e-3,
        format!("onset p = {onset:.7} (e^2/(1+e^2) = {expected:.7}), roots = ({td:.6}, {tr:.6})"),
    )
}

fn max_element_error(traj: &Trajectory, p: f64, gamma12: f64) -> f64 {
    traj.iter()
        .map(|(t, s)| {
            let x = analytic_elements(p, 1.0, gamma12, t).unwrap();
            [
                (s.x.rho_ee - x.rho_ee).abs(),
                (s.x.rho_gg - x.rho_gg).abs(),
                (s.x.rho_ss - x.rho_ss).abs(),
                (s.x.rho_aa - x.rho_aa).abs(),
                (s.x.rho_eg - x.rho_eg).norm(),
            ]
            .into_iter()
            .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

fn oracle_couplings() -> [CollectiveCoupling; 3] {
    let c = lambda_20();
    [
        CollectiveCoupling::independent(1.0).unwrap(),
        CollectiveCoupling::with_rates(1.0, c.gamma12, 0.0).unwrap(),
        c,
    ]
}

fn oracle_equivalence() -> Outcome {
    let p = 0.9;
    let rho0 = initial_state_matrix(p).unwrap().to_product();
    let mut errors = Vec::new();
    let mut trajectories = Vec::new();
    for c in oracle_couplings() {
        let traj = integrate(&rho0, &c, 10.0, 1e-3).map_err(|e| e.to_string())?;
        errors.push(max_element_error(&traj, p, c.gamma12));
        trajectories.push(traj);
    }
    let omega_effect = trajectories[1]
        .samples()
        .iter()
        .zip(trajectories[2].samples())
        .map(|(a, b)| {
            (a.x.rho_ss - b.x.rho_ss)
                .abs()
                .max((a.x.rho_aa - b.x.rho_aa).abs())
                .max((a.x.rho_eg - b.x.rho_eg).norm())
        })
        .fold(0.0, f64::max);
    check(
        errors.iter().all(|&e| e < 1e-8) && omega_effect < 1e-8,
        format!(
            "max |num - closed| = {:.2e} / {:.2e} / {:.2e}; Omega12 on vs off differ by {omega_effect:.2e}",
            errors[0], errors[1], errors[2]
        ),
    )
}

fn random_xstate(rng: &mut ChaCha8Rng, boundary: bool) -> XState {
    let w: [f64; 4] = std::array::from_fn(|_| -rng.gen::<f64>().max(1e-300).ln());
    let total: f64 = w.iter().sum();
    let [ee, gg, ss, aa] = w.map(|x| x / total);
    let scale = if boundary { 1.0 } else { rng.gen::<f64>() };
    let phase = rng.gen_range(0.0..2.0 * PI);
    XState {
        rho_ee: ee,
        rho_gg: gg,
        rho_ss: ss,
        rho_aa: aa,
        rho_eg: Complex64::from_polar(scale * (ee * gg).sqrt(), phase),
    }
}

fn bell() -> DensityMatrix4 {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    DensityMatrix4::pure([h, z, z, h]).unwrap()
}

fn concurrence_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    let cases = 1200;
    for k in 0..cases {
        let x = random_xstate(&mut rng, k % 4 == 0);
        let general = wootters_concurrence(&x.to_product()).map_err(|e| e.to_string())?;
        worst = worst.max((general - x_state_concurrence(&x)).abs());
    }
    let product =
        DensityMatrix4::pure([0.0, 1.0, 0.0, 0.0].map(|v| Complex64::new(v, 0.0))).unwrap();
    let werner = DensityMatrix4::new(
        bell().matrix() * Complex64::new(0.5, 0.0)
            + Matrix4::identity() * Complex64::new(0.125, 0.0),
    )
    .unwrap();
    let fixed = [
        wootters_concurrence(&bell()).unwrap(),
        wootters_concurrence(&product).unwrap(),
        wootters_concurrence(&werner).unwrap(),
    ];
    check(
        worst < 1e-8
            && (fixed[0] - 1.0).abs() < 1e-8
            && fixed[1].abs() < 1e-8
            && (fixed[2] - 0.25).abs() < 1e-8,
        format!(
            "{cases} random X states, max deviation {worst:.2e}; Bell {:.10}, product {:.1e}, Werner(0.5) {:.10}",
            fixed[0], fixed[1], fixed[2]
        ),
    )
}

fn second_revival() -> Outcome {
    let c = lambda_20();
    let model = ClosedForm::new(0.9, 1.0, c.gamma12).unwrap();
    let events = closed_form_events(&model, 20.0, 1e-3).map_err(|e| e.to_string())?;
    let detected = events.second_revival.ok_or("no second revival detected")?;
    let estimate = second_revival_estimate(0.9, &c).unwrap();
    check(
        (detected - estimate).abs() <= 0.2 * estimate && (estimate - 5.48).abs() < 0.01,
        format!("detected {detected:.4}, estimate {estimate:.4}"),
    )
}

fn long_time_law() -> Outcome {
    let c = lambda_20();
    let model = ClosedForm::new(0.9, 1.0, c.gamma12).unwrap();
    let traj = Trajectory::closed_form_uniform(&model, 20.0, 1e-3).unwrap();
    let worst = traj
        .iter()
        .filter(|(t, _)| *t >= 12.0)
        .map(|(_, s)| (s.weights.c - s.x.rho_aa).abs())
        .fold(0.0, f64::max);
    check(
        worst < 1e-4,
        format!("max |C - rho_aa| on [12, 20] = {worst:.3e}"),
    )
}

fn death_time_map() -> Outcome {
    let grid: Vec<f64> = (1..100).map(|k| k as f64 / 100.0).collect();
    let mut fractions = Vec::new();
    let mut full_range = false;
    for r in [1.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 20.0] {
        let scan = death_time_scan(r, 1.0, &grid, 20.0).map_err(|e| e.to_string())?;
        let dying = scan.iter().filter(|(_, t)| t.is_some()).count();
        fractions.push(dying as f64 / grid.len() as f64);
        full_range = scan
            .iter()
            .filter(|(p, _)| (0.05 - 1e-12..=0.95 + 1e-12).contains(p))
            .all(|(_, t)| t.is_some());
    }
    check(
        fractions.windows(2).all(|w| w[1] >= w[0]) && full_range,
        format!("fraction dying at r = lambda, /3, /6, /20: {fractions:.3?}; full range at lambda/20: {full_range}"),
    )
}

fn structural_invariants() -> Outcome {
    let mut worst = [0.0f64; 3];
    let mut min_eig = f64::INFINITY;
    let times: Vec<f64> = (0..=1000).map(|k| k as f64 * 0.01).collect();
    for p in [0.3, 0.5, 0.9, 1.0] {
        let rho0 = initial_state_matrix(p).unwrap().to_product();
        for c in oracle_couplings() {
            let propagator = Propagator::new(&c, 1e-3).map_err(|e| e.to_string())?;
            propagator
                .evolve(&rho0, &times, |_, rho| {
                    worst[0] = worst[0].max((rho.trace() - 1.0).abs());
                    worst[1] = worst[1].max(rho.hermiticity_defect());
                    worst[2] = worst[2].max(one_photon_leakage(&product_to_collective(rho)));
                    min_eig = min_eig.min(rho.min_eigenvalue());
                    Ok(())
                })
                .map_err(|e| e.to_string())?;
        }
    }
    check(
        worst[0] < 1e-8 && worst[1] < 1e-10 && min_eig >= -1e-8 && worst[2] < 1e-10,
        format!(
            "trace err {:.1e}, hermiticity {:.1e}, min eigenvalue {min_eig:.1e}, leakage {:.1e}",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("coupling values at lambda/20 and kr -> 0", couplings_values),
        (
            "death 0.60 and first revival 1.70 at p = 0.9, lambda/20",
            headline_times,
        ),
        (
            "independent atoms die at ln(1.5) without revival",
            independent_atoms,
        ),
        (
            "two transcendental roots iff p > e^2/(1+e^2)",
            transcendental_roots,
        ),
        (
            "integrated master equation matches closed form",
            oracle_equivalence,
        ),
        (
            "general and X-state concurrence agree",
            concurrence_equivalence,
        ),
        ("second revival within 20% of estimate", second_revival),
        ("long-time concurrence equals rho_aa", long_time_law),
        (
            "death-time range grows as separation shrinks",
            death_time_map,
        ),
        (
            "structural invariants along integrated trajectories",
            structural_invariants,
        ),
    ];
    let mut failures = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
