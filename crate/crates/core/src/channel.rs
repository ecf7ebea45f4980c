//! Kraus-form 1-qubit channels.
//!
//! A channel is an ordered list of 2×2 Kraus operators A_j acting as
//! `T(ρ) = Σ_j A_j ρ A_j†`. Construction does not force trace preservation
//! (the θ construction works without it); [`KrausChannel::validate_cptp`]
//! reports how far Σ A_j†A_j is from the identity, and [`KrausChannel::apply`]
//! validates its output instead.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::{ComplexMat2, DensityOp};

/// Entrywise tolerance for the trace-preservation check Σ A_j†A_j = 1.
pub const CPTP_TOL: f64 = 1e-10;
/// Relative singular-value threshold for the numerical rank of the span.
pub const SPAN_RANK_TOL: f64 = 1e-10;

/// A quantum channel in Kraus form.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    kraus: Vec<ComplexMat2>,
}

/// Result of the trace-preservation check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptpReport {
    pub pass: bool,
    /// Largest entrywise deviation of Σ A_j†A_j from the identity.
    pub max_deviation: f64,
}

/// The linear span of the Kraus operators.
///
/// When the span is at most 2-dimensional, `basis` holds a pair (A, B) of
/// generators taken from the channel itself (B = 0 for a 1-dimensional
/// span) and `coeffs[j]` the pair (μ₁ʲ, μ₂ʲ) with A_j = μ₁ʲ A + μ₂ʲ B.
/// For larger spans only the diagnostics are filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanBasis {
    pub span_dim: usize,
    /// Singular values of the stacked, vectorized Kraus operators,
    /// descending. Useful to judge channels near the rank threshold.
    pub singular_values: Vec<f64>,
    pub basis: Option<(ComplexMat2, ComplexMat2)>,
    pub coeffs: Vec<[Complex64; 2]>,
}

impl SpanBasis {
    /// Smallest singular value counted into the rank (0 when rank is 0).
    pub fn smallest_retained_sv(&self) -> f64 {
        if self.span_dim == 0 {
            0.0
        } else {
            self.singular_values[self.span_dim - 1]
        }
    }
}

impl KrausChannel {
    /// Wrap a list of Kraus operators. The list must be nonempty and all
    /// entries finite; trace preservation is checked separately.
    pub fn new(kraus: Vec<ComplexMat2>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::InvalidKraus("empty Kraus list".into()));
        }
        if let Some(j) = kraus.iter().position(|a| !a.is_finite()) {
            return Err(Error::InvalidKraus(format!(
                "operator {j} has non-finite entries"
            )));
        }
        Ok(Self { kraus })
    }

    pub fn identity() -> Self {
        Self {
            kraus: vec![ComplexMat2::identity()],
        }
    }

    /// The extremal normal form A = diag(a00, a11), B = antidiag(b01, b10).
    ///
    /// Requires |a00|² + |b10|² = |a11|² + |b01|² = 1 (trace preservation).
    pub fn extremal(
        a00: Complex64,
        a11: Complex64,
        b01: Complex64,
        b10: Complex64,
    ) -> Result<Self> {
        let dev = (a00.norm_sqr() + b10.norm_sqr() - 1.0)
            .abs()
            .max((a11.norm_sqr() + b01.norm_sqr() - 1.0).abs());
        if !(dev <= CPTP_TOL) {
            return Err(Error::ExtremalNormalization { deviation: dev });
        }
        let z = Complex64::new(0.0, 0.0);
        Ok(Self {
            kraus: vec![
                ComplexMat2::new([[a00, z], [z, a11]]),
                ComplexMat2::new([[z, b01], [b10, z]]),
            ],
        })
    }

    /// The degenerate family A = diag(1, √t), B = [[0, √(1−t)], [0, 0]]
    /// for 0 < t ≤ 1.
    pub fn degenerate(t: f64) -> Result<Self> {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::Domain(format!(
                "degenerate channel parameter t = {t} outside (0, 1]"
            )));
        }
        Self::extremal(
            Complex64::new(1.0, 0.0),
            Complex64::new(t.sqrt(), 0.0),
            Complex64::new((1.0 - t).sqrt(), 0.0),
            Complex64::new(0.0, 0.0),
        )
    }

    /// Depolarizing channel T_s(ρ) = [(tr ρ)·1 + sρ]/(s + 2) as a 4-Kraus
    /// list: a scaled identity plus three scaled Pauli conjugations. The
    /// map is completely positive for s ≥ −1/2; parameters are accepted in
    /// [−1/2, 1]. For s ≠ −1/2 the Kraus span is 4-dimensional, so no
    /// anti-linear θ exists for it.
    pub fn depolarizing(s: f64) -> Result<Self> {
        if !(-0.5..=1.0).contains(&s) {
            return Err(Error::Domain(format!(
                "depolarizing parameter s = {s} outside [-1/2, 1]"
            )));
        }
        let lam = 1.0 / (2.0 * (s + 2.0));
        let c_id = ((2.0 * s + 1.0) * lam).max(0.0).sqrt();
        let c_p = lam.sqrt();
        Ok(Self {
            kraus: vec![
                ComplexMat2::identity().scale_re(c_id),
                ComplexMat2::sigma_x().scale_re(c_p),
                ComplexMat2::sigma_y().scale_re(c_p),
                ComplexMat2::sigma_z().scale_re(c_p),
            ],
        })
    }

    pub fn kraus(&self) -> &[ComplexMat2] {
        &self.kraus
    }

    pub fn len(&self) -> usize {
        self.kraus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kraus.is_empty()
    }

    /// Check Σ A_j†A_j = 1 and report the largest entrywise deviation.
    pub fn validate_cptp(&self) -> CptpReport {
        let mut sum = ComplexMat2::zero();
        for a in &self.kraus {
            sum = sum.add(&a.adjoint().mul(a));
        }
        let max_deviation = sum.max_abs_diff(&ComplexMat2::identity());
        CptpReport {
            pass: max_deviation <= CPTP_TOL,
            max_deviation,
        }
    }

    /// T(ρ) = Σ A_j ρ A_j†, as an unvalidated matrix.
    pub fn apply_mat(&self, rho: &ComplexMat2) -> ComplexMat2 {
        let mut out = ComplexMat2::zero();
        for a in &self.kraus {
            out = out.add(&a.mul(rho).mul(&a.adjoint()));
        }
        out
    }

    /// Apply the channel to a density operator and validate the output.
    pub fn apply(&self, rho: &DensityOp) -> Result<DensityOp> {
        DensityOp::from_mat(self.apply_mat(rho.mat())).map_err(|e| match e {
            Error::InvalidDensity {
                invariant,
                deviation,
            } => Error::InvariantViolation {
                invariant,
                deviation,
            },
            other => other,
        })
    }

    /// Numerical rank and basis of the linear span of the Kraus operators.
    ///
    /// The rank is counted from the singular values of the stacked
    /// vectorized operators, relative threshold [`SPAN_RANK_TOL`]. For rank
    /// ≤ 2 the basis is the first Kraus operator of maximal independence
    /// by index order: A = first operator with nonnegligible norm, B =
    /// first operator with a nonnegligible component orthogonal to A (or 0
    /// when the rank is 1), and the μ coefficients are least-squares
    /// solutions, exact within the span.
    pub fn kraus_span(&self) -> SpanBasis {
        let singular_values = self.span_singular_values();
        let sv_max = singular_values[0];
        let span_dim = if sv_max <= 0.0 {
            0
        } else {
            singular_values
                .iter()
                .filter(|&&s| s > SPAN_RANK_TOL * sv_max)
                .count()
        };

        if span_dim > 2 {
            return SpanBasis {
                span_dim,
                singular_values,
                basis: None,
                coeffs: Vec::new(),
            };
        }

        let zero = Complex64::new(0.0, 0.0);
        if span_dim == 0 {
            return SpanBasis {
                span_dim,
                singular_values,
                basis: Some((ComplexMat2::zero(), ComplexMat2::zero())),
                coeffs: vec![[zero, zero]; self.kraus.len()],
            };
        }

        // basis A: first operator with norm above threshold
        let ja = self
            .kraus
            .iter()
            .position(|k| k.fro_norm() > SPAN_RANK_TOL * sv_max)
            .expect("rank >= 1 guarantees a nonzero operator");
        let basis_a = self.kraus[ja];
        let na = basis_a.fro_norm();
        let q1 = basis_a.scale_re(1.0 / na);

        // basis B: first operator with a residual orthogonal to A
        let mut jb = None;
        for (j, k) in self.kraus.iter().enumerate() {
            let resid = k.sub(&q1.scale(q1.hs_inner(k)));
            if resid.fro_norm() > SPAN_RANK_TOL * sv_max {
                jb = Some(j);
                break;
            }
        }

        let (basis_b, coeffs) = match jb {
            None => {
                // rank 1: every operator is a multiple of A
                let coeffs = self
                    .kraus
                    .iter()
                    .map(|k| [q1.hs_inner(k) / na, zero])
                    .collect();
                (ComplexMat2::zero(), coeffs)
            }
            Some(jb) => {
                let basis_b = self.kraus[jb];
                // orthonormal frame (q1, q2) over span{A, B}
                let p = q1.hs_inner(&basis_b);
                let r2 = basis_b.sub(&q1.scale(p));
                let nb = r2.fro_norm();
                let q2 = r2.scale_re(1.0 / nb);
                let coeffs = self
                    .kraus
                    .iter()
                    .map(|k| {
                        let c1 = q1.hs_inner(k);
                        let c2 = q2.hs_inner(k);
                        let mu2 = c2 / nb;
                        let mu1 = (c1 - mu2 * p) / na;
                        [mu1, mu2]
                    })
                    .collect();
                (basis_b, coeffs)
            }
        };

        SpanBasis {
            span_dim,
            singular_values,
            basis: Some((basis_a, basis_b)),
            coeffs,
        }
    }

    /// Singular values of the m×4 matrix of vectorized Kraus operators,
    /// descending.
    ///
    /// Uses one-sided Jacobi on the realified 2m×8 stack (the complex
    /// matrix M = X + iY embeds as [[X, −Y], [Y, X]] with every singular
    /// value doubled). Working on the matrix itself rather than its Gram
    /// matrix keeps small singular values accurate to machine precision
    /// relative to the largest, which the 1e-10 rank threshold needs.
    fn span_singular_values(&self) -> Vec<f64> {
        let m = self.kraus.len();
        let rows = 2 * m;
        let mut z = vec![0.0f64; rows * 8];
        for (r, a) in self.kraus.iter().enumerate() {
            let v = [a.m[0][0], a.m[0][1], a.m[1][0], a.m[1][1]];
            for (k, e) in v.iter().enumerate() {
                z[r * 8 + k] = e.re;
                z[r * 8 + (k + 4)] = -e.im;
                z[(r + m) * 8 + k] = e.im;
                z[(r + m) * 8 + (k + 4)] = e.re;
            }
        }
        // orthogonalize columns by plane rotations
        for _sweep in 0..60 {
            let mut rotated = false;
            for p in 0..8 {
                for q in (p + 1)..8 {
                    let (mut app, mut aqq, mut apq) = (0.0f64, 0.0f64, 0.0f64);
                    for r in 0..rows {
                        let (x, y) = (z[r * 8 + p], z[r * 8 + q]);
                        app += x * x;
                        aqq += y * y;
                        apq += x * y;
                    }
                    if apq.abs() <= 1e-17 * (app * aqq).sqrt().max(f64::MIN_POSITIVE) {
                        continue;
                    }
                    let tau = (aqq - app) / (2.0 * apq);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for r in 0..rows {
                        let (x, y) = (z[r * 8 + p], z[r * 8 + q]);
                        z[r * 8 + p] = c * x - s * y;
                        z[r * 8 + q] = s * x + c * y;
                    }
                    rotated = true;
                }
            }
            if !rotated {
                break;
            }
        }
        let mut norms: Vec<f64> = (0..8)
            .map(|c| (0..rows).map(|r| z[r * 8 + c] * z[r * 8 + c]).sum::<f64>().sqrt())
            .collect();
        norms.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        (0..4).map(|k| norms[2 * k]).collect()
    }
}
