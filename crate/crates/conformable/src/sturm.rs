//! Conformable Sturm–Liouville operators Ŝ_{α/β} = x^(β-1) D^β f(x) D^α with
//! power-law coefficient f(x) = x^p, their closed-form solution branches, and
//! the boundary-value eigensystem of the f = x^p family on [0,1].
//!
//! Since x^(β-1) D^β g = g' for any β, the operator collapses to
//! d/dx [x^(1-α) f y']; oscillatory solutions satisfy Ŝy + Λy = 0 with Λ ≥ 0
//! (the sign convention under which the printed cosine/Bessel branches are
//! eigenfunctions).

use crate::conformable::Order;
use crate::error::{Error, Result};
use crate::numerics;
use crate::specfun;

#[derive(Debug, Clone, Copy)]
pub struct SturmSpec {
    pub ord_alpha: Order,
    pub ord_beta: Order,
    /// exponent in f(x) = x^p; may be negative (p = α−1 is the cosine case)
    pub f_exponent_p: f64,
    /// weighted form (1/f)·Ŝ
    pub weighted: bool,
}

impl SturmSpec {
    pub fn new(alpha: f64, beta: f64, p: f64, weighted: bool) -> Result<Self> {
        Ok(SturmSpec {
            ord_alpha: Order::new(alpha)?,
            ord_beta: Order::new(beta)?,
            f_exponent_p: p,
            weighted,
        })
    }

    /// κ = 1 + α − p.
    pub fn kappa(&self) -> f64 {
        1.0 + self.ord_alpha.alpha() - self.f_exponent_p
    }
}

/// The two independent closed-form branches for a given Λ.
pub struct SturmSolution {
    pub branch_a: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub branch_b: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

/// Ŝ y at x, by the expanded form x^(1-α) f y'' + (x^(1-α) f' + (1-α) x^(-α) f) y',
/// divided by f for the weighted variant.
pub fn apply_sturm<F: Fn(f64) -> f64>(spec: &SturmSpec, y: F, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::DomainError(format!("Sturm operator needs x > 0, got {x}")));
    }
    let a = spec.ord_alpha.alpha();
    let p = spec.f_exponent_p;
    let d1 = numerics::differentiate(&y, x, 1)?;
    let d2 = numerics::differentiate(&y, x, 2)?;
    let f = x.powf(p);
    let fp = p * x.powf(p - 1.0);
    let mut v = x.powf(1.0 - a) * f * d2 + (x.powf(1.0 - a) * fp + (1.0 - a) * x.powf(-a) * f) * d1;
    if spec.weighted {
        v /= f;
    }
    if !v.is_finite() {
        return Err(Error::NonFinite(format!("Sturm operator at x = {x}")));
    }
    Ok(v)
}

/// Closed-form branch pair solving Ŝy + Λy = 0 (or the Λ = 0 homogeneous
/// problem). Covers: f = 1 and f = x^α as special cases of the general
/// x^p family; f = x^(α-1) (pure trigonometric); the weighted (1/x^r)·Ŝ
/// operator.
pub fn case_solution(spec: &SturmSpec, lambda: f64) -> Result<SturmSolution> {
    let a = spec.ord_alpha.alpha();
    let p = spec.f_exponent_p;
    if spec.weighted {
        // (1/x^r)·Ŝ: order (α−r)/(1+α), argument exponent (1+α)/2
        let r = p;
        if r <= 0.0 {
            return Err(Error::UnmatchedCase(format!("weighted case needs r > 0, got {r}")));
        }
        let nu = (a - r) / (1.0 + a);
        let c = 2.0 * lambda.sqrt() / (1.0 + a);
        let pre = 0.5 * (a - r);
        return Ok(SturmSolution {
            branch_a: bessel_branch(pre, nu, c, 0.5 * (1.0 + a)),
            branch_b: bessel_branch(pre, -nu, c, 0.5 * (1.0 + a)),
        });
    }
    if lambda == 0.0 {
        // homogeneous problem: y = A x^(α-p)/(α-p) + B
        if (a - p).abs() < 1e-12 {
            return Err(Error::UnmatchedCase("homogeneous case degenerate at p = alpha".into()));
        }
        let e = a - p;
        return Ok(SturmSolution {
            branch_a: Box::new(move |x: f64| x.powf(e) / e),
            branch_b: Box::new(|_| 1.0),
        });
    }
    if (p - (a - 1.0)).abs() < 1e-12 {
        // f = x^(α-1): the operator is d²/dx²
        let rt = lambda.sqrt();
        return Ok(SturmSolution {
            branch_a: Box::new(move |x: f64| (rt * x).cos()),
            branch_b: Box::new(move |x: f64| (rt * x).sin()),
        });
    }
    let kappa = spec.kappa();
    if kappa <= 0.0 {
        return Err(Error::UnmatchedCase(format!(
            "kappa = 1 + alpha - p = {kappa} must be positive"
        )));
    }
    let nu = (a - p) / kappa;
    let c = 2.0 * lambda.sqrt() / kappa;
    let pre = 0.5 * (a - p);
    let second: Box<dyn Fn(f64) -> f64 + Send + Sync> = if (nu - nu.round()).abs() < 1e-9 {
        // J_{-ν} degenerates at integer order; use Y_ν (p = α gives Y₀(2√(Λx)))
        let nu_r = nu.round();
        Box::new(move |x: f64| {
            x.powf(pre) * specfun::bessel_y(nu_r, c * x.powf(0.5 * kappa)).unwrap_or(f64::NAN)
        })
    } else {
        bessel_branch(pre, -nu, c, 0.5 * kappa)
    };
    Ok(SturmSolution {
        branch_a: bessel_branch(pre, nu, c, 0.5 * kappa),
        branch_b: second,
    })
}

fn bessel_branch(pre: f64, nu: f64, c: f64, arg_exp: f64) -> Box<dyn Fn(f64) -> f64 + Send + Sync> {
    Box::new(move |x: f64| {
        if x == 0.0 {
            return if pre > 0.0 { 0.0 } else { f64::NAN };
        }
        x.powf(pre) * specfun::bessel_j(nu, c * x.powf(arg_exp)).unwrap_or(f64::NAN)
    })
}

/// Eigen-pair of the zero-boundary problem on [0,1] for f = x^p:
/// y_n = B·x^((α-p)/2)·J_ν(z_n·x^(κ/2)) with ν = (α-p)/κ and z_n the n-th
/// zero of J_ν. The eigenvalue is implicit in the argument scaling:
/// matching 2√Λ/κ = z_n gives Λ_n = (κ·z_n/2)².
pub fn case4_eigensystem(
    spec: &SturmSpec,
    n: usize,
) -> Result<(f64, Box<dyn Fn(f64) -> f64 + Send + Sync>)> {
    if n == 0 {
        return Err(Error::IndexError { index: n, max: usize::MAX });
    }
    let a = spec.ord_alpha.alpha();
    let p = spec.f_exponent_p;
    let kappa = spec.kappa();
    if spec.weighted || kappa <= 0.0 || p < 0.0 || p >= 1.0 + a {
        return Err(Error::UnmatchedCase(format!(
            "boundary eigensystem needs unweighted f = x^p with 0 <= p < 1 + alpha (p = {p})"
        )));
    }
    let nu = (a - p) / kappa;
    let z = specfun::bessel_j_zeros(nu, n)?[n - 1];
    let lambda = (0.5 * kappa * z).powi(2);
    let b = 1.0
        / ((1.0 / kappa) * specfun::bessel_j(nu - 1.0, z)? * specfun::bessel_j(nu + 1.0, z)?)
            .abs()
            .sqrt();
    let pre = 0.5 * (a - p);
    let y = Box::new(move |x: f64| {
        if x <= 0.0 || x >= 1.0 {
            return 0.0;
        }
        b * x.powf(pre) * specfun::bessel_j(nu, z * x.powf(0.5 * kappa)).unwrap_or(f64::NAN)
    });
    Ok((lambda, y))
}

#[derive(Debug, Clone)]
pub struct LambdaDependenceReport {
    pub order_1: f64,
    pub order_2: f64,
    pub exponent_1: f64,
    pub exponent_2: f64,
    pub max_pointwise_gap: f64,
}

/// The boundary eigenfunctions depend on (α, p) only through λ = α − p: two
/// specs with equal difference share the Bessel order λ/κ, the prefactor
/// exponent λ/2, and (κ being 1 + λ) the whole function. Compares the first
/// eigenfunctions on a grid.
pub fn solution_lambda_dependence_check(
    alpha1: f64,
    p1: f64,
    alpha2: f64,
    p2: f64,
) -> Result<LambdaDependenceReport> {
    if ((alpha1 - p1) - (alpha2 - p2)).abs() > 1e-12 {
        return Err(Error::DomainError("alpha - p must match".into()));
    }
    let s1 = SturmSpec::new(alpha1, alpha1, p1, false)?;
    let s2 = SturmSpec::new(alpha2, alpha2, p2, false)?;
    let (_, y1) = case4_eigensystem(&s1, 1)?;
    let (_, y2) = case4_eigensystem(&s2, 1)?;
    let mut gap = 0.0f64;
    for i in 1..100 {
        let x = i as f64 / 100.0;
        gap = gap.max((y1(x) - y2(x)).abs());
    }
    Ok(LambdaDependenceReport {
        order_1: (alpha1 - p1) / (1.0 + alpha1 - p1),
        order_2: (alpha2 - p2) / (1.0 + alpha2 - p2),
        exponent_1: 0.5 * (alpha1 - p1),
        exponent_2: 0.5 * (alpha2 - p2),
        max_pointwise_gap: gap,
    })
}
