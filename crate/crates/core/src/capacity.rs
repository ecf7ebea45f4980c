//! Holevo one-shot capacity: the maximum of H_T over the Bloch ball.
//!
//! [`capacity`] runs a multistart downhill-simplex search over the three
//! Bloch coordinates (H_T is smooth but no gradient is available, and
//! nothing guarantees a unimodal landscape). Starts come from a Halton
//! sequence shifted by a seeded rotation, so runs are deterministic for a
//! fixed seed. Points leaving the ball are projected back onto the sphere,
//! where H_T vanishes, so the search is naturally driven inward.
//!
//! [`capacity_degenerate`] maximizes the 1-variable reduction available for
//! the degenerate channel family,
//!
//! ```text
//! C(T_t) = max_{0 ≤ r ≤ 1} [ h(rt) − h((1 − √(1 − 4t(1−t)r²))/2) ]
//! ```
//!
//! and serves as an independent cross-check of the 3-parameter search.

use rand::Rng;

use crate::antilinear::AntiHermOp;
use crate::channel::KrausChannel;
use crate::error::{Error, Result};
use crate::mat2::DensityOp;
use crate::oracle::{mutual_information, Ensemble, OracleConfig};
use crate::roofs::{entropy_wrt_channel, leaf};
use crate::stream::substream;

/// Result of the 3-parameter capacity search.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    /// max_ρ H_T(ρ) in bits.
    pub value: f64,
    /// The maximizing state.
    pub argmax: DensityOp,
    /// The leaf decomposition of the maximizer: an optimal signal ensemble.
    pub ensemble: Ensemble,
}

/// Diagnostics of the optimal signal ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalReport {
    pub capacity: f64,
    /// |⟨φ1|φ2⟩| of the two leaf endpoints.
    pub overlap: f64,
    /// Whether the optimal ensemble is orthogonal (overlap < 1e-6).
    pub orthogonal: bool,
    /// Mutual information of the returned ensemble; equals the capacity at
    /// the optimum.
    pub mutual_information: f64,
    /// |mutual_information − capacity|.
    pub mi_gap: f64,
    /// Set when the capacity is numerically zero, in which case every
    /// state maximizes and the ensemble carries no signal.
    pub degenerate_optimum: bool,
}

/// Maximize H_T over the Bloch ball.
///
/// `opt.restarts` sets the number of simplex starts (32 is a comfortable
/// default for these landscapes), `opt.seed` fixes the start set.
pub fn capacity(
    channel: &KrausChannel,
    theta: &AntiHermOp,
    opt: &OracleConfig,
) -> Result<CapacityResult> {
    opt.validate()?;
    let starts = opt.restarts;
    let objective = |b: [f64; 3]| -> f64 {
        let p = project_into_ball(b);
        let rho = DensityOp::from_bloch(p[0], p[1], p[2]).expect("projected point is a state");
        // maximizer works on −H_T
        -entropy_wrt_channel(channel, theta, &rho).unwrap_or(f64::INFINITY)
    };

    // Cranley–Patterson rotation of a Halton point set, then map the unit
    // cube into the ball
    let mut rng = substream(opt.seed, 0x6361_7061);
    let shift: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
    let mut best: Option<([f64; 3], f64)> = None;
    for k in 0..starts {
        let u = [
            (halton(k as u64 + 1, 2) + shift[0]).fract(),
            (halton(k as u64 + 1, 3) + shift[1]).fract(),
            (halton(k as u64 + 1, 5) + shift[2]).fract(),
        ];
        let r = 0.95 * u[0].cbrt();
        let z = 2.0 * u[1] - 1.0;
        let rxy = (1.0 - z * z).max(0.0).sqrt();
        let phi = 2.0 * std::f64::consts::PI * u[2];
        let start = [r * rxy * phi.cos(), r * rxy * phi.sin(), r * z];
        let (x, v) = nelder_mead(start, 0.15, 800, 1e-12, &objective);
        if best.as_ref().is_none_or(|(_, bv)| v < *bv) {
            best = Some((x, v));
        }
    }
    let (x, v) = best.expect("at least one start");
    if !v.is_finite() {
        return Err(Error::Precondition(
            "channel entropy is undefined everywhere; the channel must be trace preserving".into(),
        ));
    }
    let p = project_into_ball(x);
    let argmax = DensityOp::from_bloch(p[0], p[1], p[2]).expect("projected point is a state");
    let ensemble = leaf(theta, &argmax)?.ensemble()?;
    Ok(CapacityResult {
        value: -v,
        argmax,
        ensemble,
    })
}

/// Capacity of the degenerate channel family by dense grid plus
/// golden-section refinement of the 1-variable reduction. Returns the
/// value and the maximizing diagonal entry r* (smallest maximizer on
/// ties).
pub fn capacity_degenerate(t: f64) -> Result<(f64, f64)> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::Domain(format!(
            "degenerate capacity parameter t = {t} outside (0, 1]"
        )));
    }
    let g = |r: f64| -> f64 {
        let first = binary_entropy_unchecked(r * t);
        let y2 = 4.0 * t * (1.0 - t) * r * r;
        let second = binary_entropy_unchecked((1.0 - (1.0 - y2).max(0.0).sqrt()) / 2.0);
        first - second
    };

    const GRID: usize = 1 << 12;
    let mut best_r = 0.0;
    let mut best_v = g(0.0);
    for k in 1..GRID {
        let r = k as f64 / (GRID - 1) as f64;
        let v = g(r);
        if v > best_v {
            best_v = v;
            best_r = r;
        }
    }
    // golden-section refinement around the best grid point
    let span = 1.0 / (GRID - 1) as f64;
    let (mut a, mut b) = ((best_r - span).max(0.0), (best_r + span).min(1.0));
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - inv_phi * (b - a), a + inv_phi * (b - a));
    let (mut fc, mut fd) = (g(c), g(d));
    for _ in 0..120 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = g(d);
        }
        if b - a < 1e-14 {
            break;
        }
    }
    let r_star = if fc > fd { c } else { d };
    let (r_star, value) = if g(best_r) >= g(r_star) {
        (best_r, g(best_r))
    } else {
        (r_star, g(r_star))
    };
    Ok((value, r_star))
}

/// Run the capacity search and report the geometry of its optimal signal
/// ensemble.
pub fn optimal_signal_report(
    channel: &KrausChannel,
    theta: &AntiHermOp,
    opt: &OracleConfig,
) -> Result<SignalReport> {
    let cap = capacity(channel, theta, opt)?;
    let states = cap.ensemble.states();
    let overlap = if states.len() >= 2 {
        states[0].overlap(&states[1])
    } else {
        1.0
    };
    let mi = mutual_information(channel, &cap.ensemble)?;
    Ok(SignalReport {
        capacity: cap.value,
        overlap,
        orthogonal: overlap < 1e-6,
        mutual_information: mi,
        mi_gap: (mi - cap.value).abs(),
        degenerate_optimum: cap.value < 1e-9,
    })
}

fn binary_entropy_unchecked(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    let mut s = 0.0;
    if x > 0.0 {
        s -= x * x.log2();
    }
    if x < 1.0 {
        s -= (1.0 - x) * (1.0 - x).log2();
    }
    s
}

fn project_into_ball(b: [f64; 3]) -> [f64; 3] {
    let n2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    if n2 <= 1.0 {
        return b;
    }
    let n = n2.sqrt();
    [b[0] / n, b[1] / n, b[2] / n]
}

/// Radical-inverse Halton sequence member `index` in the given base.
fn halton(mut index: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while index > 0 {
        f /= base as f64;
        r += f * (index % base) as f64;
        index /= base;
    }
    r
}

/// Standard downhill simplex (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) minimizing `f` from `start`, returning the best vertex.
fn nelder_mead(
    start: [f64; 3],
    scale: f64,
    max_iter: usize,
    tol: f64,
    f: &impl Fn([f64; 3]) -> f64,
) -> ([f64; 3], f64) {
    let mut simplex: Vec<([f64; 3], f64)> = Vec::with_capacity(4);
    simplex.push((start, f(start)));
    for k in 0..3 {
        let mut v = start;
        v[k] += scale;
        simplex.push((v, f(v)));
    }

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let spread = simplex[3].1 - simplex[0].1;
        let size = (0..3).fold(0.0f64, |acc, k| {
            acc.max((simplex[3].0[k] - simplex[0].0[k]).abs())
        });
        if spread.abs() < tol && size < tol.sqrt() * 1e-3 {
            break;
        }

        let centroid = {
            let mut c = [0.0; 3];
            for v in &simplex[..3] {
                for k in 0..3 {
                    c[k] += v.0[k] / 3.0;
                }
            }
            c
        };
        let worst = simplex[3];
        let at = |coef: f64| {
            let mut p = [0.0; 3];
            for k in 0..3 {
                p[k] = centroid[k] + coef * (centroid[k] - worst.0[k]);
            }
            p
        };

        let refl = at(1.0);
        let f_refl = f(refl);
        if f_refl < simplex[0].1 {
            let exp = at(2.0);
            let f_exp = f(exp);
            simplex[3] = if f_exp < f_refl {
                (exp, f_exp)
            } else {
                (refl, f_refl)
            };
        } else if f_refl < simplex[2].1 {
            simplex[3] = (refl, f_refl);
        } else {
            let contr = if f_refl < worst.1 { at(0.5) } else { at(-0.5) };
            let f_contr = f(contr);
            if f_contr < worst.1.min(f_refl) {
                simplex[3] = (contr, f_contr);
            } else {
                // shrink toward the best vertex
                let best = simplex[0];
                for v in simplex.iter_mut().skip(1) {
                    for k in 0..3 {
                        v.0[k] = best.0[k] + 0.5 * (v.0[k] - best.0[k]);
                    }
                    v.1 = f(v.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    simplex[0]
}
