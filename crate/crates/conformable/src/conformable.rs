//! The conformable derivative D^α f = x^(1-α) f', its inverse integral with
//! weight τ^(α-1), the natural variable u = x^α/α, the self-adjoint operator
//! Â₂α, and the recipe turning a classical second-order linear ODE into its
//! conformable counterpart.

use crate::error::{Error, Result};
use crate::numerics::{self, Interval, Tolerance};

/// Validated derivative order α ∈ (0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    alpha: f64,
}

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidOrder(alpha));
        }
        Ok(Order { alpha })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    /// η = α/(1+α) ∈ (0, 1/2], the Bessel order of the eigenbasis.
    pub fn eta(self) -> f64 {
        self.alpha / (1.0 + self.alpha)
    }
}

/// u = x^α/α.
pub fn to_natural(x: f64, ord: Order) -> f64 {
    x.powf(ord.alpha) / ord.alpha
}

/// x = (αu)^(1/α).
pub fn from_natural(u: f64, ord: Order) -> f64 {
    (ord.alpha * u).powf(1.0 / ord.alpha)
}

/// D^α f at x > 0: x^(1-α) f'(x), with f' by Richardson differencing.
pub fn conformable_derivative<F: Fn(f64) -> f64>(f: F, ord: Order, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::DomainError(format!(
            "conformable derivative needs x > 0, got {x}"
        )));
    }
    let d = numerics::differentiate(f, x, 1)?;
    let v = x.powf(1.0 - ord.alpha) * d;
    if !v.is_finite() {
        return Err(Error::NonFinite(format!("D^alpha at x = {x}")));
    }
    Ok(v)
}

/// I^α f over [lo, hi]: ∫ f(τ) τ^(α-1) dτ, computed in the natural variable
/// where the weight disappears and the endpoint singularity with it.
pub fn conformable_integral<F: Fn(f64) -> f64>(f: F, ord: Order, iv: Interval) -> Result<f64> {
    if iv.lo < 0.0 {
        return Err(Error::DomainError(format!(
            "conformable integral needs lo >= 0, got {}",
            iv.lo
        )));
    }
    let (ulo, uhi) = (to_natural(iv.lo, ord), to_natural(iv.hi, ord));
    let g = |u: f64| f(from_natural(u, ord));
    Ok(numerics::integrate(g, Interval::new(ulo, uhi)?, Tolerance::default())?.value)
}

/// Â₂α f = d/dx [x^(1-α) f'] = x^(1-α) f'' + (1-α) x^(-α) f'.
pub fn apply_a2alpha<F: Fn(f64) -> f64>(f: F, ord: Order, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::DomainError(format!("A_2alpha needs x > 0, got {x}")));
    }
    let d1 = numerics::differentiate(&f, x, 1)?;
    let d2 = numerics::differentiate(&f, x, 2)?;
    let a = ord.alpha;
    let v = x.powf(1.0 - a) * d2 + (1.0 - a) * x.powf(-a) * d1;
    if !v.is_finite() {
        return Err(Error::NonFinite(format!("A_2alpha at x = {x}")));
    }
    Ok(v)
}

/// Coefficients p, q, r, s of a classical ODE p y'' + q y' + r y = s in the
/// variable u.
pub struct SoldeSpec {
    pub p: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub q: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub r: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub s: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

/// The translated equation P y'' + Q y' + R y = S in x.
pub struct ConformableSolde {
    pub p: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub q: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub r: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub s: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

/// Substituting u = x^α/α into p y'' + q y' + r y = s gives
/// P = p(u(x)) x^(2-2α), Q = (1-α) x^(1-2α) p(u(x)) + x^(1-α) q(u(x)),
/// R = r(u(x)), S = s(u(x)).
pub fn translate_solde(spec: SoldeSpec, ord: Order) -> ConformableSolde {
    let a = ord.alpha;
    let SoldeSpec { p, q, r, s } = spec;
    let u = move |x: f64| to_natural(x, ord);
    let p2 = std::sync::Arc::new(p);
    let pq = p2.clone();
    ConformableSolde {
        p: Box::new(move |x| p2(u(x)) * x.powf(2.0 - 2.0 * a)),
        q: Box::new(move |x| {
            (1.0 - a) * x.powf(1.0 - 2.0 * a) * pq(u(x)) + x.powf(1.0 - a) * q(u(x))
        }),
        r: Box::new(move |x| r(u(x))),
        s: Box::new(move |x| s(u(x))),
    }
}

/// Max over the grid of |P y'' + Q y' + R y − S| with finite-difference
/// derivatives.
pub fn solde_residual<F: Fn(f64) -> f64>(
    csolde: &ConformableSolde,
    y: F,
    grid: &[f64],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for &x in grid {
        let d1 = numerics::differentiate(&y, x, 1)?;
        let d2 = numerics::differentiate(&y, x, 2)?;
        let res = (csolde.p)(x) * d2 + (csolde.q)(x) * d1 + (csolde.r)(x) * y(x) - (csolde.s)(x);
        if !res.is_finite() {
            return Err(Error::NonFinite(format!("residual at x = {x}")));
        }
        worst = worst.max(res.abs());
    }
    Ok(worst)
}
