//! Foundation kernels: adaptive Gauss–Kronrod quadrature, bracketed root
//! finding, and Richardson-extrapolated finite differences.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::DomainError(format!(
                "bad interval [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_depth: 60,
        }
    }
}

impl Tolerance {
    pub fn with_abs(abs_tol: f64) -> Self {
        Tolerance {
            abs_tol,
            rel_tol: abs_tol,
            ..Default::default()
        }
    }
}

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1]; odd-indexed nodes form
// the embedded Gauss-7 rule.
const XGK: [f64; 15] = [
    -0.991455371120813,
    -0.949107912342759,
    -0.864864423359769,
    -0.741531185599394,
    -0.586087235467691,
    -0.405845151377397,
    -0.207784955007898,
    0.0,
    0.207784955007898,
    0.405845151377397,
    0.586087235467691,
    0.741531185599394,
    0.864864423359769,
    0.949107912342759,
    0.991455371120813,
];
const WGK: [f64; 15] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
    0.204432940075298,
    0.190350578064785,
    0.169004726639267,
    0.140653259715525,
    0.104790010322250,
    0.063092092629979,
    0.022935322010529,
];
const WG: [f64; 7] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
    0.381830050505119,
    0.279705391489277,
    0.129484966168870,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for i in 0..15 {
        let x = c + h * XGK[i];
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite(format!("integrand at x = {x}")));
        }
        kronrod += WGK[i] * fx;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fx;
        }
    }
    kronrod *= h;
    gauss *= h;
    Ok((kronrod, (kronrod - gauss).abs()))
}

/// Adaptive quadrature over a finite interval with a global error budget:
/// the worst subinterval is bisected until the summed error estimate meets
/// the tolerance. Integrable power-law endpoint singularities converge
/// because the open rule never evaluates the endpoints themselves.
pub fn integrate<F: Fn(f64) -> f64>(f: F, iv: Interval, tol: Tolerance) -> Result<QuadResult> {
    struct Piece {
        lo: f64,
        hi: f64,
        val: f64,
        err: f64,
        depth: usize,
    }
    let (val, err) = gk15(&f, iv.lo, iv.hi)?;
    let mut evals = 15usize;
    let mut pieces = vec![Piece {
        lo: iv.lo,
        hi: iv.hi,
        val,
        err,
        depth: 0,
    }];
    let splittable = |p: &Piece, max_depth: usize| {
        let mid = 0.5 * (p.lo + p.hi);
        p.depth < max_depth && mid > p.lo && mid < p.hi
    };
    // splittable pieces, ordered on demand by error estimate
    loop {
        let total_val: f64 = pieces.iter().map(|p| p.val).sum();
        let total_err: f64 = pieces.iter().map(|p| p.err).sum();
        let target = tol.abs_tol.max(tol.rel_tol * total_val.abs());
        if total_err <= target {
            return Ok(QuadResult {
                value: total_val,
                abs_error_estimate: total_err,
                evaluations: evals,
            });
        }
        // error stuck at max-depth pieces cannot be reduced further; once it
        // dominates, more splitting of the smooth remainder is pointless
        let stuck_err: f64 = pieces
            .iter()
            .filter(|p| !splittable(p, tol.max_depth))
            .map(|p| p.err)
            .sum();
        let worst = pieces
            .iter()
            .enumerate()
            .filter(|(_, p)| splittable(p, tol.max_depth))
            .max_by(|a, b| a.1.err.total_cmp(&b.1.err))
            .map(|(i, _)| i);
        let done = match worst {
            None => true,
            Some(_) => stuck_err >= 0.5 * total_err,
        };
        if done {
            // best achievable under the depth budget; the (pessimistic)
            // estimate is reported, so callers can still judge the result
            if total_err <= 1e4 * target {
                return Ok(QuadResult {
                    value: total_val,
                    abs_error_estimate: total_err,
                    evaluations: evals,
                });
            }
            return Err(Error::NonConvergence(format!(
                "error estimate {total_err:.3e} above target {target:.3e}"
            )));
        }
        let p = pieces.swap_remove(worst.unwrap());
        let mid = 0.5 * (p.lo + p.hi);
        let (lv, le) = gk15(&f, p.lo, mid)?;
        let (rv, re) = gk15(&f, mid, p.hi)?;
        evals += 30;
        pieces.push(Piece {
            lo: p.lo,
            hi: mid,
            val: lv,
            err: le,
            depth: p.depth + 1,
        });
        pieces.push(Piece {
            lo: mid,
            hi: p.hi,
            val: rv,
            err: re,
            depth: p.depth + 1,
        });
        if pieces.len() > 100_000 {
            return Err(Error::NonConvergence("too many subdivisions".into()));
        }
    }
}

/// Integrate over [0, ∞) through the map t = v/(1-v); the integrand must
/// decay fast enough to be integrable.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, tol: Tolerance) -> Result<QuadResult> {
    let g = |v: f64| {
        let w = 1.0 - v;
        let t = v / w;
        let fv = f(t);
        if fv == 0.0 {
            0.0
        } else {
            fv / (w * w)
        }
    };
    integrate(g, Interval::new(0.0, 1.0)?, tol)
}

/// Bracketed root: bisection to width 1e-6, then secant polish (capped at
/// 50 iterations) that falls back to bisection whenever a step leaves the
/// shrinking bracket.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: Interval, _tol: Tolerance) -> Result<f64> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let (mut flo, mut fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 {
        return Err(Error::NoSignChange(lo, hi));
    }
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    for _ in 0..50 {
        let width = hi - lo;
        if width <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0) {
            break;
        }
        let mut x = lo - flo * width / (fhi - flo);
        if !x.is_finite() || x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    // weight the endpoints by their residuals for the final answer
    Ok(if flo.abs() < fhi.abs() { lo } else { hi })
}

/// Scan [lo, hi] on a uniform grid and return the first `count` roots found
/// by sign change, each polished by `find_root`.
pub fn scan_roots<F: Fn(f64) -> f64>(
    f: F,
    iv: Interval,
    grid: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let mut roots = Vec::with_capacity(count);
    let h = (iv.hi - iv.lo) / grid as f64;
    let mut xa = iv.lo;
    let mut fa = f(xa);
    for k in 1..=grid {
        let xb = iv.lo + h * k as f64;
        let fb = f(xb);
        if fa == 0.0 {
            roots.push(xa);
        } else if fa * fb < 0.0 {
            roots.push(find_root(&f, Interval::new(xa, xb)?, Tolerance::default())?);
        }
        if roots.len() == count {
            return Ok(roots);
        }
        xa = xb;
        fa = fb;
    }
    Ok(roots)
}

/// Central finite difference with Richardson extrapolation, first or second
/// derivative. The table is walked with step halving and the diagonal entry
/// with the smallest successive change is returned, which keeps round-off
/// noise from the deepest rows out of the answer.
pub fn differentiate<F: Fn(f64) -> f64>(f: F, x: f64, order: u8) -> Result<f64> {
    let scale = x.abs().max(1.0);
    let mut h = 1e-2 * scale;
    let stencil = |h: f64| -> f64 {
        match order {
            1 => (f(x + h) - f(x - h)) / (2.0 * h),
            _ => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
        }
    };
    let mut table: Vec<Vec<f64>> = Vec::new();
    let mut best = f64::NAN;
    let mut best_change = f64::INFINITY;
    let mut prev_diag = f64::NAN;
    let mut worse_rows = 0;
    for i in 0..12 {
        let d0 = stencil(h);
        if !d0.is_finite() {
            return Err(Error::NonFinite(format!("stencil at x = {x}, h = {h}")));
        }
        let mut row = vec![d0];
        for j in 1..=i {
            let fac = 4f64.powi(j as i32);
            let v = (fac * row[j - 1] - table[i - 1][j - 1]) / (fac - 1.0);
            row.push(v);
        }
        let diag = *row.last().unwrap();
        if i > 0 {
            let change = (diag - prev_diag).abs();
            if change <= best_change {
                best_change = change;
                best = diag;
                worse_rows = 0;
            } else {
                // once round-off takes over the diagonal only gets noisier
                worse_rows += 1;
                if worse_rows >= 2 {
                    break;
                }
            }
        } else {
            best = diag;
        }
        prev_diag = diag;
        table.push(row);
        h *= 0.5;
    }
    Ok(best)
}
