//! Concurrence of state pairs, channel concurrence, entropy roofs and the
//! flat-leaf optimal decomposition.
//!
//! For a channel with Hermitian anti-linear operator θ the concurrence
//!
//! ```text
//! C_T(ρ)² = tr(ρ θρθ) − 2 det ρ √(det θ²)
//! ```
//!
//! is the convex roof of √(det T(π)) over pure-state decompositions, and it
//! is flat: through every interior ρ runs a chord of the Bloch ball on
//! which C_T is constant, whose endpoints form an optimal two-state
//! decomposition. [`leaf`] computes that chord from the Takagi basis of θ.
//! The entropy roof is E_T = f(2 C_T) and the channel entropy
//! H_T = S_T − E_T.

use crate::antilinear::AntiHermOp;
use crate::channel::KrausChannel;
use crate::entropy::{f_curve, von_neumann_entropy};
use crate::error::{Error, Result};
use crate::mat2::{ComplexMat2, DensityOp, PureState};

/// States this close to the Bloch sphere are treated as pure by [`leaf`].
const PURE_TOL: f64 = 1e-12;

/// An optimal two-point decomposition ρ = p1·π1 + p2·π2 on which the
/// channel concurrence is constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafDecomposition {
    pub endpoints: (PureState, PureState),
    pub weights: (f64, f64),
    /// Chord direction in Bloch coordinates of the original basis; zero for
    /// the trivial decomposition of a pure state.
    pub direction: [f64; 3],
}

impl LeafDecomposition {
    /// The decomposition as a weighted pure-state ensemble.
    pub fn ensemble(&self) -> Result<crate::oracle::Ensemble> {
        crate::oracle::Ensemble::new(
            vec![self.endpoints.0, self.endpoints.1],
            vec![self.weights.0, self.weights.1],
        )
    }
}

/// Concurrence of two density operators,
/// C(ω1, ω2) = max(0, λ1 − λ2) for the eigenvalues of (√ω1 ω2 √ω1)^{1/2},
/// here through the rank-two closed form
/// C² = max(0, tr ω1ω2 − 2√(det ω1 det ω2)).
pub fn concurrence_pair(omega1: &DensityOp, omega2: &DensityOp) -> f64 {
    concurrence_general(omega1.mat(), omega2.mat())
}

/// The same closed form on raw PSD matrices (ω2 may be sub-normalized, as
/// θρθ is).
fn concurrence_general(m1: &ComplexMat2, m2: &ComplexMat2) -> f64 {
    let cross = m1.mul(m2).trace().re;
    let dets = (m1.det().re.max(0.0) * m2.det().re.max(0.0)).sqrt();
    (cross - 2.0 * dets).max(0.0).sqrt()
}

/// Channel concurrence C_T(ρ) = C(ρ, θρθ) in closed form. Ranges over
/// [0, 1/2] for trace-preserving channels.
pub fn channel_concurrence(theta: &AntiHermOp, rho: &DensityOp) -> f64 {
    let cross = rho.mat().mul(&theta.conjugate_action(rho)).trace().re;
    (cross - 2.0 * rho.det() * theta.det_abs()).max(0.0).sqrt()
}

/// Channel concurrence for a θ in diagonal form (β = 0), through the
/// explicit two-term expression
///
/// ```text
/// C_T² = (|α|ρ00 − |δ|ρ11)² + (√(αδ*)ρ01 + √(α*δ)ρ10)²
/// ```
///
/// where the root of α*δ is the complex conjugate of the chosen root of
/// αδ*, which makes the second term an unambiguous real number.
pub fn channel_concurrence_extremal(theta: &AntiHermOp, rho: &DensityOp) -> Result<f64> {
    if theta.beta().norm() > 1e-12 {
        return Err(Error::Precondition(format!(
            "extremal concurrence needs a diagonal θ; |β| = {:.3e}",
            theta.beta().norm()
        )));
    }
    let m = rho.mat();
    let diag = theta.alpha().norm() * m.m[0][0].re - theta.delta().norm() * m.m[1][1].re;
    // the root of α*δ multiplies ρ01 so that the square reproduces the
    // α*δ·ρ01² + αδ*·ρ10² cross terms of tr(ρθρθ)
    let root = (theta.alpha().conj() * theta.delta()).sqrt();
    let off = (root * m.m[0][1] + root.conj() * m.m[1][0]).re;
    Ok((diag * diag + off * off).max(0.0).sqrt())
}

/// Entropy roof E_T(ρ) = f(2 C_T(ρ)), the minimal average output entropy
/// over pure-state decompositions of ρ.
pub fn entropy_roof(theta: &AntiHermOp, rho: &DensityOp) -> f64 {
    let c = channel_concurrence(theta, rho);
    // C_T ≤ 1/2 up to roundoff, so the clamp only strips machine noise
    f_curve((2.0 * c).min(1.0)).expect("2·C_T lies in [0, 1]")
}

/// Channel entropy H_T(ρ) = S(T(ρ)) − E_T(ρ), clamped to ≥ 0 (the raw
/// difference can undershoot zero by roundoff).
pub fn entropy_wrt_channel(
    channel: &KrausChannel,
    theta: &AntiHermOp,
    rho: &DensityOp,
) -> Result<f64> {
    let out = channel.apply(rho)?;
    Ok((von_neumann_entropy(&out) - entropy_roof(theta, rho)).max(0.0))
}

/// The flat leaf through ρ: an optimal two-point decomposition with
/// constant C_T.
///
/// Worked in the Takagi basis of θ, where Θ = diag(d0, d1) with
/// d0 ≥ d1 ≥ 0 and
///
/// ```text
/// C_T² = ¼((d0 − d1) + (d0 + d1)·z̃)² + d0·d1·x̃²
/// ```
///
/// depends only on the Bloch coordinates (x̃, z̃) of that basis. For
/// d1 > 0 the chord through ρ̃ along the ỹ-axis keeps C_T constant; for
/// d1 = 0 the level sets are whole planes z̃ = const and the chord is laid
/// along the original-basis x-axis projected into the plane (falling back
/// to y, then z, when the projection degenerates). Endpoints are the two
/// intersections of the chord with the unit sphere, mapped back to the
/// original basis; the weights split the chord by inverse distance.
pub fn leaf(theta: &AntiHermOp, rho: &DensityOp) -> Result<LeafDecomposition> {
    let b = rho.bloch();
    let r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    if r2 >= (1.0 - PURE_TOL) * (1.0 - PURE_TOL) {
        // pure (or numerically pure) input decomposes as itself
        let phi = PureState::from_bloch_unit(normalize(b));
        return Ok(LeafDecomposition {
            endpoints: (phi, phi),
            weights: (1.0, 0.0),
            direction: [0.0, 0.0, 0.0],
        });
    }

    let (u, d) = theta.takagi();
    let rho_t = u.adjoint().mul(rho.mat()).mul(&u);
    let bt = bloch_of_density(&rho_t);

    let dir_t = if d[1] > 1e-12 * d[0].max(f64::MIN_POSITIVE) {
        [0.0, 1.0, 0.0]
    } else {
        // leaf is the plane z̃ = const; lay the chord along the first
        // original axis with a usable in-plane projection
        let mut chosen = [1.0, 0.0, 0.0];
        for axis in [
            ComplexMat2::sigma_x(),
            ComplexMat2::sigma_y(),
            ComplexMat2::sigma_z(),
        ] {
            let tilted = u.adjoint().mul(&axis).mul(&u);
            let v = bloch_of_direction(&tilted);
            let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
            if n > 0.5 {
                chosen = [v[0] / n, v[1] / n, 0.0];
                break;
            }
        }
        chosen
    };

    // intersect the chord b̃ + λ·dir with the unit sphere
    let bu = bt[0] * dir_t[0] + bt[1] * dir_t[1] + bt[2] * dir_t[2];
    let disc = (bu * bu + 1.0 - r2).max(0.0).sqrt();
    let (lp, lm) = (-bu + disc, -bu - disc);
    let endpoint_at = |l: f64| {
        normalize([
            bt[0] + l * dir_t[0],
            bt[1] + l * dir_t[1],
            bt[2] + l * dir_t[2],
        ])
    };
    let w1 = -lm / (lp - lm);

    // map endpoints and direction back to the original basis
    let back = |b_t: [f64; 3]| {
        let phi_t = PureState::from_bloch_unit(b_t);
        let v = u.apply_vec(phi_t.amps());
        PureState::normalized(v[0], v[1]).expect("unitary image of a unit vector")
    };
    let dir_mat = ComplexMat2::sigma_x()
        .scale_re(dir_t[0])
        .add(&ComplexMat2::sigma_y().scale_re(dir_t[1]))
        .add(&ComplexMat2::sigma_z().scale_re(dir_t[2]));
    let direction = bloch_of_direction(&u.mul(&dir_mat).mul(&u.adjoint()));

    Ok(LeafDecomposition {
        endpoints: (back(endpoint_at(lp)), back(endpoint_at(lm))),
        weights: (w1, 1.0 - w1),
        direction,
    })
}

/// Bloch coordinates of a unit-trace Hermitian matrix.
fn bloch_of_density(m: &ComplexMat2) -> [f64; 3] {
    [
        2.0 * m.m[0][1].re,
        -2.0 * m.m[0][1].im,
        (m.m[0][0] - m.m[1][1]).re,
    ]
}

/// Components n with S = n·σ for a traceless Hermitian S (n_a = ½ tr σ_a S).
fn bloch_of_direction(s: &ComplexMat2) -> [f64; 3] {
    [
        0.5 * (s.m[0][1] + s.m[1][0]).re,
        -(s.m[0][1].im - s.m[1][0].im) * 0.5,
        0.5 * (s.m[0][0] - s.m[1][1]).re,
    ]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if n == 0.0 {
        return v;
    }
    [v[0] / n, v[1] / n, v[2] / n]
}
