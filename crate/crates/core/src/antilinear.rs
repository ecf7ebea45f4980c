//! Hermitian anti-linear operators on a qubit.
//!
//! An anti-linear operator θ satisfies θ(Σ aⱼ|j⟩) = Σ aⱼ* θ|j⟩. We store
//! the matrix Θ of its action in the reference basis, so that on a ket
//! `x` the operator acts as `x ↦ Θ · conj(x)`. Under this convention every
//! identity becomes ordinary matrix algebra:
//!
//! - θ is Hermitian iff Θ is symmetric, so only (α, β, δ) are stored;
//! - the quadratic form ⟨φ|θ|φ⟩ = α x0*² + 2β x0* x1* + δ x1*²;
//! - θρθ is the linear operator Θ · conj(ρ) · conj(Θ);
//! - θ² is the linear operator Θ · conj(Θ), and √det(θ²) = |αδ − β²|.
//!
//! The anti-linear matrix must never be mixed into linear algebra directly:
//! it cannot act on bras and cannot be tensored with linear operators. The
//! accessors here only hand out fully linear objects.
//!
//! [`theta_from_pair`] builds, for any Kraus pair (A, B), the unique
//! Hermitian θ with det(AπA† + BπB†) = |⟨φ|θ|φ⟩|² on pure states, and
//! [`theta_from_channel`] extends this to channels with more Kraus
//! operators whose linear span is at most 2-dimensional, rescaling θ by the
//! determinant sum of their span coefficients.

use num_complex::Complex64;

use crate::channel::KrausChannel;
use crate::error::{Error, Result};
use crate::jacobi;
use crate::mat2::{ComplexMat2, DensityOp, PureState};

/// A Hermitian anti-linear operator, stored as the symmetric matrix
/// Θ = [[α, β], [β, δ]] of the action x ↦ Θ·conj(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiHermOp {
    alpha: Complex64,
    beta: Complex64,
    delta: Complex64,
}

impl AntiHermOp {
    pub fn new(alpha: Complex64, beta: Complex64, delta: Complex64) -> Self {
        Self { alpha, beta, delta }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(z, z, z)
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// The symmetric matrix Θ.
    pub fn matrix(&self) -> ComplexMat2 {
        ComplexMat2::new([[self.alpha, self.beta], [self.beta, self.delta]])
    }

    /// θ scaled by a real factor.
    pub fn scaled(&self, mu: f64) -> Self {
        Self::new(
            self.alpha * mu,
            self.beta * mu,
            self.delta * mu,
        )
    }

    /// The quadratic form ⟨φ|θ|φ⟩ = α x0*² + 2β x0* x1* + δ x1*².
    pub fn pairing(&self, phi: &PureState) -> Complex64 {
        let [x0, x1] = phi.amps();
        let (c0, c1) = (x0.conj(), x1.conj());
        self.alpha * c0 * c0 + 2.0 * self.beta * c0 * c1 + self.delta * c1 * c1
    }

    /// The linear operator θρθ = Θ·conj(ρ)·conj(Θ); Hermitian and positive
    /// semidefinite for ρ a density operator.
    pub fn conjugate_action(&self, rho: &DensityOp) -> ComplexMat2 {
        let theta = self.matrix();
        theta.mul(&rho.mat().conj()).mul(&theta.conj())
    }

    /// √det(θ²) = |det Θ| = |αδ − β²|.
    pub fn det_abs(&self) -> f64 {
        (self.alpha * self.delta - self.beta * self.beta).norm()
    }

    /// Takagi factorization Θ = U·diag(d0, d1)·Uᵀ with U unitary and
    /// d0 ≥ d1 ≥ 0 the singular values of Θ.
    ///
    /// Computed from the real symmetric embedding of the anti-linear action:
    /// with Θ = X + iY, the operator x ↦ Θ·conj(x) acts on (Re x, Im x) as
    /// the symmetric 4×4 matrix [[X, Y], [Y, −X]], whose eigenvectors at the
    /// two algebraically largest eigenvalues are exactly the columns of U.
    /// Already-diagonal Θ with nonnegative entries comes back with U = 1.
    pub fn takagi(&self) -> (ComplexMat2, [f64; 2]) {
        let t = self.matrix();
        let mut kr = [0.0f64; 16];
        for j in 0..2 {
            for k in 0..2 {
                let x = t.m[j][k].re;
                let y = t.m[j][k].im;
                kr[j * 4 + k] = x;
                kr[j * 4 + (k + 2)] = y;
                kr[(j + 2) * 4 + k] = y;
                kr[(j + 2) * 4 + (k + 2)] = -x;
            }
        }
        let (vals, vecs) = jacobi::eigh(4, &kr);
        let unvec = |w: &[f64]| {
            [
                Complex64::new(w[0], w[2]),
                Complex64::new(w[1], w[3]),
            ]
        };
        let mut u0 = unvec(&vecs[0]);
        let mut u1 = unvec(&vecs[1]);
        let d = [vals[0].max(0.0), vals[1].max(0.0)];

        // tidy the pair to machine-precision orthonormality
        let n0 = (u0[0].norm_sqr() + u0[1].norm_sqr()).sqrt();
        u0 = [u0[0] / n0, u0[1] / n0];
        let ip = u0[0].conj() * u1[0] + u0[1].conj() * u1[1];
        u1 = [u1[0] - ip * u0[0], u1[1] - ip * u0[1]];
        let n1 = (u1[0].norm_sqr() + u1[1].norm_sqr()).sqrt();
        u1 = [u1[0] / n1, u1[1] / n1];

        (
            ComplexMat2::new([[u0[0], u1[0]], [u0[1], u1[1]]]),
            d,
        )
    }
}

/// The unique Hermitian anti-linear θ with det(AπA† + BπB†) = |⟨φ|θ|φ⟩|²
/// for all pure π = |φ⟩⟨φ|.
///
/// With z = Aφ and w = Bφ, the determinant of the output is
/// |z0 w1 − z1 w0|², a quadratic form in (x0, x1) whose coefficients are
/// 2×2 minors of the pair:
///
/// ```text
/// c00 = a00 b10 − a10 b00,   c11 = a01 b11 − a11 b01,
/// c01 + c10 = a00 b11 + a01 b10 − a10 b01 − a11 b00.
/// ```
///
/// Matching against ⟨φ|θ|φ⟩* and imposing hermiticity fixes
/// α = c00*, β = (c01 + c10)*/2, δ = c11*. Trace preservation of the pair
/// plays no role here.
pub fn theta_from_pair(a: &ComplexMat2, b: &ComplexMat2) -> AntiHermOp {
    let (a00, a01, a10, a11) = (a.m[0][0], a.m[0][1], a.m[1][0], a.m[1][1]);
    let (b00, b01, b10, b11) = (b.m[0][0], b.m[0][1], b.m[1][0], b.m[1][1]);
    let c00 = a00 * b10 - a10 * b00;
    let c11 = a01 * b11 - a11 * b01;
    let c01_plus_c10 = a00 * b11 + a01 * b10 - a10 * b01 - a11 * b00;
    AntiHermOp::new(c00.conj(), c01_plus_c10.conj() / 2.0, c11.conj())
}

/// θ for a multi-Kraus channel whose operators span at most two dimensions.
///
/// With A_j = μ₁ʲ A + μ₂ʲ B for a span basis (A, B), the determinant picks
/// up one 2×2 minor per operator pair:
///
/// ```text
/// det T(π) = tr π(θπθ) · Σ_{j<k} |μ₁ʲ μ₂ᵏ − μ₂ʲ μ₁ᵏ|²
/// ```
///
/// so the channel's operator is θ(A, B) scaled by the square root of that
/// sum (taken real and nonnegative; only the magnitude is observable).
/// Fails with [`Error::SpanTooLarge`] when the span has dimension > 2.
pub fn theta_from_channel(channel: &KrausChannel) -> Result<AntiHermOp> {
    let span = channel.kraus_span();
    let (basis_a, basis_b) = match span.basis {
        Some(pair) => pair,
        None => {
            return Err(Error::SpanTooLarge {
                span_dim: span.span_dim,
                smallest_sv: span.smallest_retained_sv(),
            })
        }
    };
    Ok(theta_from_pair(&basis_a, &basis_b).scaled(span_scale(&span)))
}

/// The factor relating θ of the span basis to the channel's θ':
/// √(Σ_{j<k} |μ₁ʲ μ₂ᵏ − μ₂ʲ μ₁ᵏ|²), taken real and nonnegative.
pub fn span_scale(span: &crate::channel::SpanBasis) -> f64 {
    let mut scale_sq = 0.0f64;
    for j in 0..span.coeffs.len() {
        for k in (j + 1)..span.coeffs.len() {
            let [mj1, mj2] = span.coeffs[j];
            let [mk1, mk2] = span.coeffs[k];
            scale_sq += (mj1 * mk2 - mj2 * mk1).norm_sqr();
        }
    }
    scale_sq.sqrt()
}

/// Replace a Kraus pair by linear combinations
/// A' = μ11 A + μ12 B, B' = μ21 A + μ22 B.
///
/// The associated θ picks up the factor det μ, so pairing magnitudes (and
/// with them the channel concurrence) scale by |det μ|.
pub fn transform_pair(
    a: &ComplexMat2,
    b: &ComplexMat2,
    mu: &[[Complex64; 2]; 2],
) -> (ComplexMat2, ComplexMat2) {
    (
        a.scale(mu[0][0]).add(&b.scale(mu[0][1])),
        a.scale(mu[1][0]).add(&b.scale(mu[1][1])),
    )
}
