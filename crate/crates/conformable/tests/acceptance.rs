//! End-to-end acceptance gate. Each numbered check prints one pass/fail line;
//! assertions are deferred so every line is reported before the verdict.

use conformable::conformable::{
    apply_a2alpha, conformable_derivative, solde_residual, to_natural, translate_solde, Order,
    SoldeSpec,
};
use conformable::eigenbasis::JBasis;
use conformable::numerics::{integrate, Interval, Tolerance};
use conformable::quantum;
use conformable::specfun;
use conformable::sturm::{apply_sturm, case4_eigensystem, SturmSpec};
use conformable::susy::{self, SusySystem};
use conformable::transforms::{
    self, conformable_fourier, derivative_theorem_check, kappa_derivative_theorem_check, Parity,
    TimeFunction, TransformOrder,
};
use std::f64::consts::PI;
use std::sync::Arc;
use std::time::Instant;

struct Gate {
    results: Vec<(String, bool, String)>,
}

impl Gate {
    fn new() -> Self {
        Self { results: Vec::new() }
    }

    fn record(&mut self, name: &str, pass: bool, detail: String) {
        println!("criterion {:38} {} ({detail})", name, if pass { "PASS" } else { "FAIL" });
        self.results.push((name.to_string(), pass, detail));
    }

    fn finish(self) {
        let failed: Vec<_> = self.results.iter().filter(|r| !r.1).collect();
        assert!(
            failed.is_empty(),
            "failed criteria: {}",
            failed.iter().map(|r| format!("{} ({})", r.0, r.2)).collect::<Vec<_>>().join("; ")
        );
    }
}

fn quad01<F: Fn(f64) -> f64>(f: F) -> f64 {
    integrate(f, Interval::new(0.0, 1.0).unwrap(), Tolerance::with_abs(1e-11)).unwrap().value
}

fn interior_grid() -> Vec<f64> {
    (1..=18).map(|i| 0.05 * i as f64).collect()
}

#[test]
fn acceptance_criteria() {
    let suite_start = Instant::now();
    let mut gate = Gate::new();

    // 1: classical-limit reduction of the eigenbasis
    {
        let t0 = Instant::now();
        let basis = JBasis::new(Order::new(1.0).unwrap(), 5).unwrap();
        let mut worst_f = 0.0f64;
        for n in 1..=5 {
            for i in 0..=1000 {
                let x = i as f64 / 1000.0;
                let sine = 2f64.sqrt() * (n as f64 * PI * x).sin();
                worst_f = worst_f.max((basis.eval(n, x).unwrap() - sine).abs());
            }
        }
        let mut worst_e = 0.0f64;
        let mut worst_z = 0.0f64;
        for n in 1..=5 {
            let en = (n * n) as f64 * PI * PI;
            worst_e = worst_e.max((basis.eigenvalue(n).unwrap() - en).abs());
            for k in 1..n {
                worst_z =
                    worst_z.max((basis.zero_position(n, k).unwrap() - k as f64 / n as f64).abs());
            }
        }
        let dt = t0.elapsed().as_secs_f64();
        gate.record(
            "1 classical limit",
            worst_f < 1e-9 && worst_e < 1e-9 && worst_z < 1e-10 && dt < 5.0,
            format!("basis {worst_f:.2e}, energy {worst_e:.2e}, zeros {worst_z:.2e}, {dt:.2}s"),
        );
    }

    // 2: orthonormality across orders
    {
        let t0 = Instant::now();
        let mut worst = 0.0f64;
        for alpha in [0.25, 0.5, 0.75, 1.0] {
            let basis = JBasis::new(Order::new(alpha).unwrap(), 6).unwrap();
            for m in 1..=6 {
                for n in m..=6 {
                    let ip =
                        quad01(|x| basis.eval(m, x).unwrap() * basis.eval(n, x).unwrap());
                    let target = if m == n { 1.0 } else { 0.0 };
                    worst = worst.max((ip - target).abs());
                }
            }
        }
        let dt = t0.elapsed().as_secs_f64();
        gate.record(
            "2 orthonormality",
            worst < 1e-8 && dt < 30.0,
            format!("worst {worst:.2e}, {dt:.2}s"),
        );
    }

    // 3: eigen-residual of the self-adjoint operator
    {
        let mut worst = 0.0f64;
        for alpha in [0.5, 0.75] {
            let ord = Order::new(alpha).unwrap();
            let basis = JBasis::new(ord, 4).unwrap();
            for n in 1..=4 {
                let en = basis.eigenvalue(n).unwrap();
                for x in interior_grid() {
                    let lhs = apply_a2alpha(|t| basis.eval(n, t).unwrap(), ord, x).unwrap();
                    worst = worst.max((lhs + en * basis.eval(n, x).unwrap()).abs() / en);
                }
            }
        }
        gate.record("3 eigen-residual", worst < 1e-5, format!("worst {worst:.2e}"));
    }

    // 4: second-order ODE translation recipe on three worked solutions
    {
        let grid: Vec<f64> = (1..20).map(|i| 0.1 + 0.1 * i as f64).collect();
        // (a) Bessel equation in the natural variable
        let nu = 1.0 / 3.0;
        let ord = Order::new(0.5).unwrap();
        let cs = translate_solde(
            SoldeSpec {
                p: Box::new(|u| u * u),
                q: Box::new(|u| u),
                r: Box::new(move |u| u * u - nu * nu),
                s: Box::new(|_| 0.0),
            },
            ord,
        );
        let r_bessel = solde_residual(
            &cs,
            move |x: f64| specfun::bessel_j(nu, to_natural(x, ord)).unwrap(),
            &grid,
        )
        .unwrap();
        // (b) confluent limit u y'' + b y' − y = 0 with solution 0F1(; b; u)
        let b = 1.5;
        let ord_c = Order::new(0.5).unwrap();
        let cs_c = translate_solde(
            SoldeSpec {
                p: Box::new(|u| u),
                q: Box::new(move |_| b),
                r: Box::new(|_| -1.0),
                s: Box::new(|_| 0.0),
            },
            ord_c,
        );
        let r_confluent = solde_residual(
            &cs_c,
            move |x: f64| specfun::hyp0f1(b, to_natural(x, ord_c)).unwrap(),
            &grid,
        )
        .unwrap();
        // (c) Airy equation y'' = u y
        let ord_a = Order::new(0.75).unwrap();
        let cs_a = translate_solde(
            SoldeSpec {
                p: Box::new(|_| 1.0),
                q: Box::new(|_| 0.0),
                r: Box::new(|u| -u),
                s: Box::new(|_| 0.0),
            },
            ord_a,
        );
        let r_airy = solde_residual(
            &cs_a,
            move |x: f64| specfun::airy_ai(to_natural(x, ord_a)).unwrap(),
            &grid,
        )
        .unwrap();
        gate.record(
            "4 ODE translation recipe",
            r_bessel < 1e-5 && r_confluent < 1e-5 && r_airy < 1e-5,
            format!("bessel {r_bessel:.2e}, confluent {r_confluent:.2e}, airy {r_airy:.2e}"),
        );
    }

    // 5: transform catalog vs quadrature, discrepant rows reported not hidden
    {
        let pairs = [(0.5, 0.5), (0.75, 1.0), (1.0, 1.0)];
        let s_values = [0.5, 1.0, 2.0, 4.0];
        let report = transforms::verify_catalog(&pairs, &s_values).unwrap();
        let mut laplace_ok = true;
        let mut cos_flag_seen = false;
        let mut fourier_ok = true;
        let mut worst = 0.0f64;
        for row in &report {
            if row.transform == "laplace" {
                if row.entry == "cos" {
                    cos_flag_seen |= row.flagged;
                }
                if !row.flagged {
                    laplace_ok &= row.pass;
                    worst = worst.max(row.rel_error);
                }
            } else if row.entry == "exp_decay" || row.entry == "gaussian" {
                fourier_ok &= row.pass;
                worst = worst.max(row.rel_error);
            }
        }
        gate.record(
            "5 transform table",
            laplace_ok && cos_flag_seen && fourier_ok,
            format!(
                "{} rows, worst unflagged rel {worst:.2e}, cos discrepancy reported: {cos_flag_seen}",
                report.len()
            ),
        );
    }

    // 6: convolution theorem for exponential pairs
    {
        let mut worst = 0.0f64;
        for alpha in [1.0, 0.5] {
            let ord = TransformOrder::new(alpha, alpha).unwrap();
            for (k1, k2) in [(1.0f64, 2.0f64), (0.7, 1.6)] {
                // (f*g)(u) = (e^{−k1 u} − e^{−k2 u})/(k2 − k1)
                let conv = TimeFunction::explicit(
                    move |u: f64| ((-k1 * u).exp() - (-k2 * u).exp()) / (k2 - k1),
                    Parity::OneSided,
                    "exponential decay",
                );
                let f = TimeFunction::explicit(
                    move |u: f64| (-k1 * u).exp(),
                    Parity::OneSided,
                    "exponential decay",
                );
                let g = TimeFunction::explicit(
                    move |u: f64| (-k2 * u).exp(),
                    Parity::OneSided,
                    "exponential decay",
                );
                for omega in [0.5, 1.0, 2.0] {
                    let lhs = conformable_fourier(&conv, &ord, omega).unwrap();
                    let rhs = conformable_fourier(&f, &ord, omega).unwrap()
                        * conformable_fourier(&g, &ord, omega).unwrap();
                    worst = worst.max((lhs - rhs).norm() / rhs.norm());
                }
            }
        }
        gate.record("6 convolution theorem", worst < 1e-5, format!("worst rel {worst:.2e}"));
    }

    // 7: transform derivative theorems
    {
        let omega_grid = [0.5, 1.0, 2.0];
        let mut worst_first = 0.0f64;
        let mut worst_kappa = 0.0f64;
        for (alpha, beta) in [(0.5, 0.5), (0.75, 1.0)] {
            let ord = TransformOrder::new(alpha, beta).unwrap();
            let g = |u: f64| (-u * u).exp();
            let dg = |u: f64| -2.0 * u * (-u * u).exp();
            let d2g = |u: f64| (4.0 * u * u - 2.0) * (-u * u).exp();
            worst_first =
                worst_first.max(derivative_theorem_check(g, dg, &ord, &omega_grid).unwrap());
            worst_kappa = worst_kappa
                .max(kappa_derivative_theorem_check(g, d2g, &ord, &omega_grid).unwrap());
        }
        gate.record(
            "7 derivative theorems",
            worst_first < 1e-5 && worst_kappa < 1e-4,
            format!("first {worst_first:.2e}, kappa {worst_kappa:.2e}"),
        );
    }

    // 8: box superpartner closed forms and ladder shift
    {
        let mut worst_w = 0.0f64;
        let mut worst_v2 = 0.0f64;
        let mut worst_h2 = 0.0f64;
        let mut ladder_ok = true;
        for alpha in [0.5, 0.75] {
            let ord = Order::new(alpha).unwrap();
            let sys = Arc::new(SusySystem::symmetric_box(ord).unwrap());
            // reconstruct W and V2 from the ground state and the defining
            // combination, then compare with the trigonometric closed forms
            let w_built = |x: f64| {
                -conformable_derivative(
                    |t: f64| (PI * t.powf(alpha)).sin(),
                    ord,
                    x,
                )
                .unwrap()
                    / (PI * x.powf(alpha)).sin()
            };
            let v2_built = |x: f64| {
                let w = |t: f64| sys.w(t).unwrap();
                w(x) * w(x) + conformable_derivative(w, ord, x).unwrap()
            };
            for x in interior_grid() {
                let w_closed = -alpha * PI / (PI * x.powf(alpha)).tan();
                let v2_closed =
                    alpha * alpha * PI * PI * (2.0 / (PI * x.powf(alpha)).sin().powi(2) - 1.0);
                worst_w = worst_w.max((w_built(x) - w_closed).abs());
                worst_v2 = worst_v2.max((v2_built(x) - v2_closed).abs());
            }
            // H2 theta_0 = 3 alpha^2 pi^2 theta_0
            let th0 = sys.partner_state(0).unwrap();
            let lam = 3.0 * alpha * alpha * PI * PI;
            for x in interior_grid() {
                let h = sys.apply_h2(|t| th0.eval(t).unwrap(), x).unwrap();
                worst_h2 = worst_h2.max((h - lam * th0.eval(x).unwrap()).abs() / lam);
            }
            for n in 0..=3 {
                ladder_ok &=
                    (sys.ladder2(n).unwrap() - sys.ladder1(n + 1).unwrap()).abs() < 1e-12;
            }
        }
        gate.record(
            "8 susy closed forms",
            worst_w < 1e-8 && worst_v2 < 1e-8 && worst_h2 < 1e-7 && ladder_ok,
            format!("W {worst_w:.2e}, V2 {worst_v2:.2e}, H2 residual {worst_h2:.2e}"),
        );
    }

    // 9: perturbation-theory ordinal claims
    {
        let half_scan = quantum::wall_asymmetry_scan(&[0.5]).unwrap();
        let left_beats_right = half_scan.rows[0].difference > 0.0;
        let alphas: Vec<f64> = (4..=20).map(|i| 0.05 * i as f64).collect();
        let scan = quantum::wall_asymmetry_scan(&alphas).unwrap();
        let argmax_in_band = scan.argmax_alpha >= 0.3 && scan.argmax_alpha <= 0.5;
        let best_half = quantum::phantom_potential_ranking(Order::new(0.5).unwrap()).unwrap()
            .remove(0);
        let half_is_xalpha2 =
            matches!(best_half.trial, quantum::PhantomTrial::XAlphaHalf);
        let best_34 = quantum::phantom_potential_ranking(Order::new(0.75).unwrap()).unwrap()
            .remove(0);
        let three_quarter_is_x = matches!(best_34.trial, quantum::PhantomTrial::X);
        gate.record(
            "9 perturbation ordinals",
            left_beats_right && argmax_in_band && half_is_xalpha2 && three_quarter_is_x,
            format!(
                "left>right {left_beats_right}, argmax {:.2} in [0.3,0.5] {argmax_in_band}, \
                 alpha=1/2 best {}, alpha=3/4 best {}",
                scan.argmax_alpha,
                best_half.trial.label(),
                best_34.trial.label()
            ),
        );
    }

    // 10: moment statistics of the ground level
    {
        let b1 = JBasis::new(Order::new(1.0).unwrap(), 1).unwrap();
        let skew1 = b1.moment_stats(1).unwrap().skewness;
        let b01 = JBasis::new(Order::new(0.1).unwrap(), 1).unwrap();
        let skew01 = b01.moment_stats(1).unwrap().skewness;
        gate.record(
            "10 moment statistics",
            skew1.abs() < 1e-8 && skew01 > 0.10 && skew01 < 0.25,
            format!("skew(1) {skew1:.2e}, skew(0.1) {skew01:.4}"),
        );
    }

    // 11: boundary Sturm-Liouville eigensystem
    {
        let spec = SturmSpec::new(0.75, 0.75, 0.25, false).unwrap();
        let systems: Vec<_> = (1..=3).map(|n| case4_eigensystem(&spec, n).unwrap()).collect();
        let mut worst_ortho = 0.0f64;
        for m in 0..3 {
            for n in m..3 {
                let ip = quad01(|x| systems[m].1(x) * systems[n].1(x));
                let target = if m == n { 1.0 } else { 0.0 };
                worst_ortho = worst_ortho.max((ip - target).abs());
            }
        }
        let mut worst_res = 0.0f64;
        for (lam, y) in &systems {
            for x in interior_grid() {
                let r = apply_sturm(&spec, y, x).unwrap() + lam * y(x);
                worst_res = worst_res.max(r.abs() / lam);
            }
        }
        // p -> 0 recovers the eigenbasis
        let spec0 = SturmSpec::new(0.75, 0.75, 1e-9, false).unwrap();
        let (_, y0) = case4_eigensystem(&spec0, 1).unwrap();
        let basis = JBasis::new(Order::new(0.75).unwrap(), 1).unwrap();
        let mut worst_p0 = 0.0f64;
        for x in interior_grid() {
            worst_p0 = worst_p0.max((y0(x).abs() - basis.eval(1, x).unwrap().abs()).abs());
        }
        gate.record(
            "11 boundary eigensystem",
            worst_ortho < 1e-7 && worst_res < 1e-5 && worst_p0 < 1e-8,
            format!("ortho {worst_ortho:.2e}, residual {worst_res:.2e}, p->0 {worst_p0:.2e}"),
        );
    }

    // 12: suite wall-clock
    {
        let dt = suite_start.elapsed().as_secs_f64();
        gate.record("12 wall-clock", dt < 300.0, format!("{dt:.1}s"));
    }

    gate.finish();
}
