//! First-order perturbation theory on the conformable particle in a box:
//! perturbation matrix elements in the 𝕁 basis, step/linear wall perturbations
//! and their left-right asymmetry, and the phantom-potential fit that mimics
//! the fractional ground state with a classical box plus a potential.

use crate::conformable::Order;
use crate::eigenbasis::JBasis;
use crate::error::{Error, Result};
use crate::numerics::{self, Interval, Tolerance};
use std::f64::consts::PI;

/// Default basis truncation for first-order sums.
pub const DEFAULT_BASIS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PerturbationKind {
    /// V = E₁⁰·x
    Linear,
    /// V = height on x < edge (default edge 1/4)
    StepLeft,
    /// V = height on x > edge (default edge 3/4)
    StepRight,
    /// V = x^exponent
    Power,
}

#[derive(Debug, Clone, Copy)]
pub struct Perturbation {
    pub kind: PerturbationKind,
    pub lambda: f64,
    /// step edge for the step kinds, exponent for `Power`; unused otherwise
    pub param: f64,
}

impl Perturbation {
    pub fn linear(lambda: f64) -> Self {
        Self { kind: PerturbationKind::Linear, lambda, param: 0.0 }
    }

    pub fn step_left(lambda: f64) -> Result<Self> {
        Self::step(PerturbationKind::StepLeft, lambda, 0.25)
    }

    pub fn step_right(lambda: f64) -> Result<Self> {
        Self::step(PerturbationKind::StepRight, lambda, 0.75)
    }

    pub fn step(kind: PerturbationKind, lambda: f64, edge: f64) -> Result<Self> {
        if !(0.0 < edge && edge < 1.0) {
            return Err(Error::DomainError(format!("step edge {edge} outside (0,1)")));
        }
        Ok(Self { kind, lambda, param: edge })
    }

    pub fn power(lambda: f64, exponent: f64) -> Self {
        Self { kind: PerturbationKind::Power, lambda, param: exponent }
    }

    /// The potential profile V(x) at unit strength; `e1` is the unperturbed
    /// ground-state energy that sets the scale of the linear and step walls.
    pub fn profile(&self, e1: f64, x: f64) -> f64 {
        match self.kind {
            PerturbationKind::Linear => e1 * x,
            PerturbationKind::StepLeft => {
                if x < self.param {
                    e1
                } else {
                    0.0
                }
            }
            PerturbationKind::StepRight => {
                if x > self.param {
                    e1
                } else {
                    0.0
                }
            }
            PerturbationKind::Power => x.powf(self.param),
        }
    }
}

/// ⟨𝕁ₘ|V|𝕁ₙ⟩ on [0,1] by quadrature; symmetric in (m, n).
pub fn matrix_element<V: Fn(f64) -> f64>(
    basis: &JBasis,
    v: V,
    m: usize,
    n: usize,
) -> Result<f64> {
    let r = numerics::integrate(
        |x| basis.eval(m, x).unwrap_or(f64::NAN) * v(x) * basis.eval(n, x).unwrap_or(f64::NAN),
        Interval::new(0.0, 1.0)?,
        Tolerance::with_abs(1e-11),
    )?;
    Ok(r.value)
}

/// A state corrected to first order: ψ = φ_n + λ Σ_{m≠n} V_{mn}/(E_n − E_m) φ_m.
#[derive(Debug, Clone)]
pub struct PerturbedState {
    pub n: usize,
    pub energy0: f64,
    pub energy1_correction: f64,
    /// coefficients[m − 1] multiplies φ_m; the entry at n is 1
    pub coefficients: Vec<f64>,
    pub basis_size: usize,
    /// true when the last mixing coefficient fell below 1e−6 of the largest
    pub converged: bool,
}

impl PerturbedState {
    /// Unnormalized ψ(x).
    pub fn eval(&self, basis: &JBasis, x: f64) -> Result<f64> {
        let mut s = 0.0;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c != 0.0 {
                s += c * basis.eval(i + 1, x)?;
            }
        }
        Ok(s)
    }

    /// Mean position of the normalized density |ψ|²/‖ψ‖².
    pub fn mean_position(&self, basis: &JBasis) -> Result<f64> {
        let norm2 = numerics::integrate(
            |x| self.eval(basis, x).unwrap_or(f64::NAN).powi(2),
            Interval::new(0.0, 1.0)?,
            Tolerance::with_abs(1e-11),
        )?
        .value;
        let m1 = numerics::integrate(
            |x| x * self.eval(basis, x).unwrap_or(f64::NAN).powi(2),
            Interval::new(0.0, 1.0)?,
            Tolerance::with_abs(1e-11),
        )?
        .value;
        Ok(m1 / norm2)
    }
}

/// Standard nondegenerate first-order correction of state n, truncated at
/// `n_basis` terms. A state is always returned; lack of coefficient
/// convergence is reported through the `converged` flag because discontinuous
/// perturbations (the wall steps) legitimately mix slowly-decaying tails.
pub fn first_order_state(
    basis: &JBasis,
    pert: &Perturbation,
    n: usize,
    n_basis: usize,
) -> Result<PerturbedState> {
    if n_basis < n + 3 {
        return Err(Error::IndexError { index: n + 3, max: n_basis });
    }
    if n_basis > basis.max_n() {
        return Err(Error::IndexError { index: n_basis, max: basis.max_n() });
    }
    let e1 = basis.eigenvalue(1)?;
    let en = basis.eigenvalue(n)?;
    let vnn = matrix_element(basis, |x| pert.profile(e1, x), n, n)?;
    let mut coefficients = vec![0.0; n_basis];
    coefficients[n - 1] = 1.0;
    let mut largest = 0.0f64;
    let mut last = 0.0f64;
    for m in 1..=n_basis {
        if m == n {
            continue;
        }
        let vmn = matrix_element(basis, |x| pert.profile(e1, x), m, n)?;
        let c = pert.lambda * vmn / (en - basis.eigenvalue(m)?);
        coefficients[m - 1] = c;
        largest = largest.max(c.abs());
        last = c.abs();
    }
    let converged = pert.lambda == 0.0 || last < 1e-6 * largest;
    Ok(PerturbedState {
        n,
        energy0: en,
        energy1_correction: pert.lambda * vnn,
        coefficients,
        basis_size: n_basis,
        converged,
    })
}

/// One row of the wall-asymmetry scan.
#[derive(Debug, Clone, Copy)]
pub struct WallRow {
    pub alpha: f64,
    pub left_correction: f64,
    pub right_correction: f64,
    pub difference: f64,
}

#[derive(Debug, Clone)]
pub struct WallAsymmetryScan {
    pub rows: Vec<WallRow>,
    pub argmax_alpha: f64,
}

/// First-order ground-state corrections for a wall step on either side (edge
/// 1/4 and 3/4, height E₁⁰, unit strength) across an α grid, and the α that
/// maximizes the left-right difference.
pub fn wall_asymmetry_scan(alpha_grid: &[f64]) -> Result<WallAsymmetryScan> {
    let mut rows = Vec::with_capacity(alpha_grid.len());
    let mut best = (f64::NEG_INFINITY, f64::NAN);
    for &alpha in alpha_grid {
        let basis = JBasis::new(Order::new(alpha)?, 1)?;
        let e1 = basis.eigenvalue(1)?;
        let left = matrix_element(&basis, |x| if x < 0.25 { e1 } else { 0.0 }, 1, 1)?;
        let right = matrix_element(&basis, |x| if x > 0.75 { e1 } else { 0.0 }, 1, 1)?;
        let difference = left - right;
        if difference > best.0 {
            best = (difference, alpha);
        }
        rows.push(WallRow { alpha, left_correction: left, right_correction: right, difference });
    }
    Ok(WallAsymmetryScan { rows, argmax_alpha: best.1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhantomTrial {
    /// V = x
    X,
    /// V = x^α
    XAlpha,
    /// V = x^{α/2}
    XAlphaHalf,
}

impl PhantomTrial {
    pub fn exponent(self, alpha: f64) -> f64 {
        match self {
            PhantomTrial::X => 1.0,
            PhantomTrial::XAlpha => alpha,
            PhantomTrial::XAlphaHalf => 0.5 * alpha,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PhantomTrial::X => "x",
            PhantomTrial::XAlpha => "x^alpha",
            PhantomTrial::XAlphaHalf => "x^(alpha/2)",
        }
    }
}

/// Result of fitting one phantom trial potential.
#[derive(Debug, Clone, Copy)]
pub struct PhantomFit {
    pub trial: PhantomTrial,
    pub alpha: f64,
    /// strength minimizing the L² distance of the renormalized state
    pub lambda_opt: f64,
    pub l2_residual: f64,
    pub max_residual: f64,
    /// ‖√2 sin πx − 𝕁₁^{(α)}‖, the λ = 0 do-nothing distance
    pub baseline_l2: f64,
}

/// First-order perturbation of the classical sine box under V = x^p, fit to
/// the conformable ground state 𝕁₁^{(α)}. The strength λ is chosen to
/// minimize the L² distance between the renormalized corrected state and the
/// target; with ψ_λ = ψ₁ + λ Σ d_m ψ_m the optimum is closed-form.
pub fn phantom_potential_fit(ord: Order, trial: PhantomTrial) -> Result<PhantomFit> {
    let alpha = ord.alpha();
    let target_basis = JBasis::new(ord, 1)?;
    let n_basis = DEFAULT_BASIS;
    let p = trial.exponent(alpha);

    // classical sine box: ψ_m = √2 sin mπx, E_m = m²π²
    let psi = |m: usize, x: f64| 2.0f64.sqrt() * (m as f64 * PI * x).sin();
    let quad = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(numerics::integrate(f, Interval::new(0.0, 1.0)?, Tolerance::with_abs(1e-11))?.value)
    };

    // mixing directions d_m = ⟨m|x^p|1⟩/(E₁ − E_m) and target overlaps t_m
    let mut d = vec![0.0; n_basis + 1];
    let mut t = vec![0.0; n_basis + 1];
    for m in 1..=n_basis {
        t[m] = quad(&|x| target_basis.eval(1, x).unwrap_or(f64::NAN) * psi(m, x))?;
        if m > 1 {
            let vm1 = quad(&|x| psi(m, x) * x.powf(p) * psi(1, x))?;
            d[m] = vm1 / (PI * PI * (1.0 - (m * m) as f64));
        }
    }
    // maximize f(λ) = (t₁ + λb)/√(1 + λ²c): λ* = b/(t₁ c)
    let b: f64 = (2..=n_basis).map(|m| d[m] * t[m]).sum();
    let c: f64 = (2..=n_basis).map(|m| d[m] * d[m]).sum();
    let lambda_opt = if c.abs() < 1e-300 { 0.0 } else { b / (t[1] * c) };

    let state = move |lambda: f64, x: f64| {
        let mut s = psi(1, x);
        for m in 2..=n_basis {
            s += lambda * d[m] * psi(m, x);
        }
        s
    };
    let residuals = |lambda: f64| -> Result<(f64, f64)> {
        let norm = quad(&|x| state(lambda, x).powi(2))?.sqrt();
        let l2 = quad(&|x| {
            let r = state(lambda, x) / norm - target_basis.eval(1, x).unwrap_or(f64::NAN);
            r * r
        })?
        .sqrt();
        let mut worst = 0.0f64;
        for i in 0..=400 {
            let x = i as f64 / 400.0;
            let r = state(lambda, x) / norm - target_basis.eval(1, x)?;
            worst = worst.max(r.abs());
        }
        Ok((l2, worst))
    };
    let (l2_residual, max_residual) = residuals(lambda_opt)?;
    let (baseline_l2, _) = residuals(0.0)?;
    Ok(PhantomFit { trial, alpha, lambda_opt, l2_residual, max_residual, baseline_l2 })
}

/// Run all three trials and order them by L² residual (best first).
pub fn phantom_potential_ranking(ord: Order) -> Result<Vec<PhantomFit>> {
    let mut fits = vec![
        phantom_potential_fit(ord, PhantomTrial::X)?,
        phantom_potential_fit(ord, PhantomTrial::XAlpha)?,
        phantom_potential_fit(ord, PhantomTrial::XAlphaHalf)?,
    ];
    fits.sort_by(|a, b| a.l2_residual.total_cmp(&b.l2_residual));
    Ok(fits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(alpha: f64, max_n: usize) -> JBasis {
        JBasis::new(Order::new(alpha).unwrap(), max_n).unwrap()
    }

    #[test]
    fn matrix_element_orthonormality_and_classical_values() {
        let b = basis(0.75, 3);
        for m in 1..=3 {
            for n in 1..=3 {
                let v = matrix_element(&b, |_| 1.0, m, n).unwrap();
                let expect = if m == n { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-8, "({m},{n}): {v}");
            }
        }
        let b1 = basis(1.0, 2);
        let v11 = matrix_element(&b1, |x| x, 1, 1).unwrap();
        assert!((v11 - 0.5).abs() < 1e-9);
        let v12 = matrix_element(&b1, |x| x, 1, 2).unwrap();
        assert!((v12 + 16.0 / (9.0 * PI * PI)).abs() < 1e-9, "{v12}");
    }

    #[test]
    fn hermiticity() {
        let b = basis(0.5, 5);
        let e1 = b.eigenvalue(1).unwrap();
        let v = |x: f64| e1 * x;
        for m in 1..=5 {
            for n in m..=5 {
                let a = matrix_element(&b, v, m, n).unwrap();
                let c = matrix_element(&b, v, n, m).unwrap();
                assert!((a - c).abs() < 1e-9, "({m},{n}): {a} vs {c}");
            }
        }
    }

    #[test]
    fn zero_strength_is_identity() {
        let b = basis(0.6, 6);
        let st = first_order_state(&b, &Perturbation::linear(0.0), 1, 6).unwrap();
        assert_eq!(st.energy1_correction, 0.0);
        assert!(st.converged);
        for (i, &c) in st.coefficients.iter().enumerate() {
            assert_eq!(c, if i == 0 { 1.0 } else { 0.0 });
        }
    }

    #[test]
    fn classical_linear_energy_correction() {
        // α = 1, V = E₁⁰x, λ = 1 → E⁽¹⁾ = π²·½
        let b = basis(1.0, 6);
        let st = first_order_state(&b, &Perturbation::linear(1.0), 1, 6).unwrap();
        assert!((st.energy1_correction - 0.5 * PI * PI).abs() < 1e-7, "{}", st.energy1_correction);
    }

    #[test]
    fn coefficient_decay_for_smooth_potential() {
        let b = basis(1.0, 8);
        let st = first_order_state(&b, &Perturbation::linear(1.0), 1, 8).unwrap();
        // only even m couple to the ground state classically; compare those
        let pick: Vec<f64> = [2, 4, 6, 8].iter().map(|&m| st.coefficients[m - 1].abs()).collect();
        for w in pick.windows(2) {
            assert!(w[1] < w[0], "{pick:?}");
        }
    }

    #[test]
    fn linear_perturbation_shifts_mean_position() {
        let b = basis(0.5, 10);
        let unpert = first_order_state(&b, &Perturbation::linear(0.0), 1, 10).unwrap();
        let plus = first_order_state(&b, &Perturbation::linear(1.0), 1, 10).unwrap();
        let minus = first_order_state(&b, &Perturbation::linear(-1.0), 1, 10).unwrap();
        let m0 = unpert.mean_position(&b).unwrap();
        let mp = plus.mean_position(&b).unwrap();
        let mm = minus.mean_position(&b).unwrap();
        assert!(mp < m0, "lambda > 0 should shift left: {mp} vs {m0}");
        assert!(mm > m0, "lambda < 0 should shift right: {mm} vs {m0}");
    }

    #[test]
    fn first_order_energy_is_quadratically_accurate() {
        // Rayleigh quotient of the corrected state deviates from
        // E₁⁰ + λE⁽¹⁾ only at order λ²
        let b = basis(0.5, 8);
        let e1 = b.eigenvalue(1).unwrap();
        let rayleigh = |lambda: f64| -> f64 {
            let st = first_order_state(&b, &Perturbation::linear(lambda), 1, 8).unwrap();
            let mut num = 0.0;
            let mut den = 0.0;
            for m in 1..=8 {
                let am = st.coefficients[m - 1];
                den += am * am;
                num += am * am * b.eigenvalue(m).unwrap();
                for mp in 1..=8 {
                    let vmm = matrix_element(&b, |x| e1 * x, m, mp).unwrap();
                    num += lambda * am * st.coefficients[mp - 1] * vmm;
                }
            }
            num / den
        };
        let first_order = |lambda: f64| -> f64 {
            e1 + lambda * matrix_element(&b, |x| e1 * x, 1, 1).unwrap()
        };
        let r1 = rayleigh(0.01) - first_order(0.01);
        let r2 = rayleigh(0.02) - first_order(0.02);
        assert!((r2 / r1 - 4.0).abs() < 0.4, "not quadratic: {r1} {r2}");
    }

    #[test]
    fn wall_asymmetry() {
        let grid: Vec<f64> = (1..=19).map(|i| 0.05 * i as f64 + 0.05).collect();
        let scan = wall_asymmetry_scan(&grid).unwrap();
        // α = 1: both walls identical by symmetry
        let last = scan.rows.last().unwrap();
        assert!((last.alpha - 1.0).abs() < 1e-12);
        assert!((last.left_correction - last.right_correction).abs() < 1e-8);
        // α = 1/2: the left wall hits harder
        let half = scan.rows.iter().find(|r| (r.alpha - 0.5).abs() < 1e-9).unwrap();
        assert!(half.left_correction > half.right_correction);
        // the asymmetry peaks in the middle of the range, not at α → 0
        assert!(
            (0.3..=0.5).contains(&scan.argmax_alpha),
            "argmax {}",
            scan.argmax_alpha
        );
    }

    #[test]
    fn phantom_baseline_and_half_alpha_winner() {
        let ord = Order::new(0.5).unwrap();
        let fits = phantom_potential_ranking(ord).unwrap();
        for f in &fits {
            assert!(f.l2_residual < f.baseline_l2, "{:?}", f);
        }
        assert_eq!(fits[0].trial, PhantomTrial::XAlphaHalf, "{fits:?}");
    }

    #[test]
    fn truncation_bounds_checked() {
        let b = basis(0.5, 4);
        assert!(first_order_state(&b, &Perturbation::linear(1.0), 1, 2).is_err());
        assert!(first_order_state(&b, &Perturbation::linear(1.0), 1, 10).is_err());
    }
}
