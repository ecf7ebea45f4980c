//! Complex 2×2 matrices, density operators and pure states.
//!
//! [`ComplexMat2`] is the universal carrier: Kraus operators, channel
//! outputs and anti-linear matrices are all stored in it. [`DensityOp`]
//! wraps a matrix that passed the Hermiticity/trace/positivity checks and
//! exposes the Bloch-vector view `ρ = (1 + x σ1 + y σ2 + z σ3)/2`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for the Hermiticity and unit-trace checks.
pub const HERM_TOL: f64 = 1e-12;
/// Positivity slack: determinants and diagonal entries may undershoot zero
/// by this much (roundoff at the boundary of the Bloch ball) and are
/// clamped back to zero.
pub const POS_TOL: f64 = 1e-12;
/// Bloch vectors may overshoot unit length by this much (squared norm).
pub const BLOCH_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2 {
    pub m: [[Complex64; 2]; 2],
}

impl ComplexMat2 {
    pub const fn new(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn from_rows(r0: [Complex64; 2], r1: [Complex64; 2]) -> Self {
        Self { m: [r0, r1] }
    }

    /// Build from real entries, row-major.
    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self {
            m: [
                [Complex64::new(m[0][0], 0.0), Complex64::new(m[0][1], 0.0)],
                [Complex64::new(m[1][0], 0.0), Complex64::new(m[1][1], 0.0)],
            ],
        }
    }

    pub const fn zero() -> Self {
        Self::new([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    /// Pauli σ1.
    pub const fn sigma_x() -> Self {
        Self::new([[ZERO, ONE], [ONE, ZERO]])
    }

    /// Pauli σ2.
    pub const fn sigma_y() -> Self {
        Self::new([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]])
    }

    /// Pauli σ3.
    pub const fn sigma_z() -> Self {
        Self::new([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]])
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn conj(&self) -> Self {
        Self::new([
            [self.m[0][0].conj(), self.m[0][1].conj()],
            [self.m[1][0].conj(), self.m[1][1].conj()],
        ])
    }

    pub fn transpose(&self) -> Self {
        Self::new([
            [self.m[0][0], self.m[1][0]],
            [self.m[0][1], self.m[1][1]],
        ])
    }

    /// Hermitian adjoint.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = *self;
        for r in &mut out.m {
            for e in r {
                *e *= c;
            }
        }
        out
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for j in 0..2 {
            for k in 0..2 {
                out.m[j][k] += other.m[j][k];
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_re(-1.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let mut out = Self::zero();
        for j in 0..2 {
            for k in 0..2 {
                out.m[j][k] = a[j][0] * b[0][k] + a[j][1] * b[1][k];
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn apply_vec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Hilbert–Schmidt inner product tr(self† other).
    pub fn hs_inner(&self, other: &Self) -> Complex64 {
        let mut s = ZERO;
        for j in 0..2 {
            for k in 0..2 {
                s += self.m[j][k].conj() * other.m[j][k];
            }
        }
        s
    }

    pub fn fro_norm(&self) -> f64 {
        self.hs_inner(self).re.sqrt()
    }

    /// Largest entrywise absolute deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = 0.0f64;
        for j in 0..2 {
            for k in 0..2 {
                d = d.max((self.m[j][k] - other.m[j][k]).norm());
            }
        }
        d
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Principal square root of a Hermitian positive-semidefinite matrix,
    /// via the 2×2 identity √H = (H + √(det H)·1) / √(tr H + 2√(det H)).
    pub fn psd_sqrt(&self) -> Self {
        let d = self.det().re.max(0.0).sqrt();
        let t = (self.trace().re + 2.0 * d).max(0.0).sqrt();
        if t == 0.0 {
            return Self::zero();
        }
        self.add(&Self::identity().scale_re(d)).scale_re(1.0 / t)
    }

    /// Eigenvalues of a Hermitian matrix, descending, in closed form from
    /// trace and determinant.
    pub fn herm_eigenvalues(&self) -> (f64, f64) {
        let tr = self.trace().re;
        let det = self.det().re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }
}

impl std::ops::Add for ComplexMat2 {
    type Output = ComplexMat2;
    fn add(self, rhs: Self) -> Self {
        ComplexMat2::add(&self, &rhs)
    }
}

impl std::ops::Sub for ComplexMat2 {
    type Output = ComplexMat2;
    fn sub(self, rhs: Self) -> Self {
        ComplexMat2::sub(&self, &rhs)
    }
}

impl std::ops::Mul for ComplexMat2 {
    type Output = ComplexMat2;
    fn mul(self, rhs: Self) -> Self {
        ComplexMat2::mul(&self, &rhs)
    }
}

impl std::ops::Mul<Complex64> for ComplexMat2 {
    type Output = ComplexMat2;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

/// A qubit density operator: Hermitian, unit trace, positive semidefinite.
///
/// Construction validates all three invariants eagerly and reports which
/// one failed; after that the value is immutable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOp {
    mat: ComplexMat2,
}

impl DensityOp {
    /// Validate and wrap a matrix.
    pub fn from_mat(mat: ComplexMat2) -> Result<Self> {
        if !mat.is_finite() {
            return Err(Error::InvalidDensity {
                invariant: "finite entries",
                deviation: f64::INFINITY,
            });
        }
        let herm_dev = (mat.m[0][1] - mat.m[1][0].conj())
            .norm()
            .max(mat.m[0][0].im.abs())
            .max(mat.m[1][1].im.abs());
        if !(herm_dev <= HERM_TOL) {
            return Err(Error::InvalidDensity {
                invariant: "Hermitian",
                deviation: herm_dev,
            });
        }
        let tr_dev = (mat.trace().re - 1.0).abs();
        if !(tr_dev <= HERM_TOL) {
            return Err(Error::InvalidDensity {
                invariant: "unit trace",
                deviation: tr_dev,
            });
        }
        let det = mat.det().re;
        if !(det >= -POS_TOL) {
            return Err(Error::InvalidDensity {
                invariant: "positive (det >= 0)",
                deviation: -det,
            });
        }
        let diag_min = mat.m[0][0].re.min(mat.m[1][1].re);
        if !(diag_min >= -POS_TOL) {
            return Err(Error::InvalidDensity {
                invariant: "positive (diagonal >= 0)",
                deviation: -diag_min,
            });
        }
        Ok(Self { mat })
    }

    /// Build from Bloch coordinates. Vectors overshooting the unit sphere by
    /// less than the tolerance are projected back onto it.
    pub fn from_bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !(n2 <= 1.0 + BLOCH_TOL) || !n2.is_finite() {
            return Err(Error::InvalidDensity {
                invariant: "Bloch norm <= 1",
                deviation: n2 - 1.0,
            });
        }
        let s = if n2 > 1.0 { 1.0 / n2.sqrt() } else { 1.0 };
        let (x, y, z) = (x * s, y * s, z * s);
        let mat = ComplexMat2::new([
            [
                Complex64::new((1.0 + z) / 2.0, 0.0),
                Complex64::new(x / 2.0, -y / 2.0),
            ],
            [
                Complex64::new(x / 2.0, y / 2.0),
                Complex64::new((1.0 - z) / 2.0, 0.0),
            ],
        ]);
        Self::from_mat(mat)
    }

    pub fn maximally_mixed() -> Self {
        Self {
            mat: ComplexMat2::identity().scale_re(0.5),
        }
    }

    pub fn from_pure(phi: &PureState) -> Self {
        Self {
            mat: phi.projector(),
        }
    }

    pub fn mat(&self) -> &ComplexMat2 {
        &self.mat
    }

    /// Bloch coordinates (x, y, z).
    pub fn bloch(&self) -> [f64; 3] {
        let m = &self.mat.m;
        [
            2.0 * m[0][1].re,
            -2.0 * m[0][1].im,
            (m[0][0] - m[1][1]).re,
        ]
    }

    pub fn bloch_norm(&self) -> f64 {
        let b = self.bloch();
        (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt()
    }

    /// Determinant, clamped to [0, 1/4].
    pub fn det(&self) -> f64 {
        self.mat.det().re.clamp(0.0, 0.25)
    }

    /// Eigenvalues, descending; clamped to [0, 1].
    pub fn eigenvalues(&self) -> (f64, f64) {
        let disc = (1.0 - 4.0 * self.det()).max(0.0).sqrt();
        (
            ((1.0 + disc) / 2.0).clamp(0.0, 1.0),
            ((1.0 - disc) / 2.0).clamp(0.0, 1.0),
        )
    }

    /// Convex combination λ·self + (1−λ)·other.
    pub fn mix(&self, other: &Self, lambda: f64) -> Result<Self> {
        Self::from_mat(
            self.mat
                .scale_re(lambda)
                .add(&other.mat.scale_re(1.0 - lambda)),
        )
    }
}

/// A normalized qubit state vector with its projector view.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState {
    amps: [Complex64; 2],
}

impl PureState {
    /// Wrap amplitudes that are already unit norm (within 1e-12).
    pub fn new(x0: Complex64, x1: Complex64) -> Result<Self> {
        let n = x0.norm_sqr() + x1.norm_sqr();
        if !((n - 1.0).abs() <= 1e-12) {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(Self { amps: [x0, x1] })
    }

    /// Normalize arbitrary nonzero amplitudes.
    pub fn normalized(x0: Complex64, x1: Complex64) -> Result<Self> {
        let n = (x0.norm_sqr() + x1.norm_sqr()).sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::NotNormalized { norm: n * n });
        }
        Ok(Self {
            amps: [x0 / n, x1 / n],
        })
    }

    pub fn ket0() -> Self {
        Self { amps: [ONE, ZERO] }
    }

    pub fn ket1() -> Self {
        Self { amps: [ZERO, ONE] }
    }

    /// The pure state at a point of the unit Bloch sphere.
    pub fn from_bloch_unit(b: [f64; 3]) -> Self {
        let theta = b[2].clamp(-1.0, 1.0).acos();
        let phi = b[1].atan2(b[0]);
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        Self {
            amps: [
                Complex64::new(c, 0.0),
                Complex64::new(phi.cos() * s, phi.sin() * s),
            ],
        }
    }

    pub fn amps(&self) -> [Complex64; 2] {
        self.amps
    }

    /// |φ⟩⟨φ|.
    pub fn projector(&self) -> ComplexMat2 {
        let [x0, x1] = self.amps;
        ComplexMat2::new([
            [x0 * x0.conj(), x0 * x1.conj()],
            [x1 * x0.conj(), x1 * x1.conj()],
        ])
    }

    pub fn density(&self) -> DensityOp {
        DensityOp::from_pure(self)
    }

    /// |⟨self|other⟩|.
    pub fn overlap(&self, other: &Self) -> f64 {
        (self.amps[0].conj() * other.amps[0] + self.amps[1].conj() * other.amps[1]).norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_algebra() {
        let (sx, sy, sz) = (
            ComplexMat2::sigma_x(),
            ComplexMat2::sigma_y(),
            ComplexMat2::sigma_z(),
        );
        assert_eq!(sx * sx, ComplexMat2::identity());
        assert_eq!(sy * sy, ComplexMat2::identity());
        // σ1 σ2 = i σ3
        assert_eq!(sx * sy, sz.scale(c(0.0, 1.0)));
    }

    #[test]
    fn density_invariants_reported() {
        // non-Hermitian
        let m = ComplexMat2::new([[c(0.5, 0.0), c(0.3, 0.0)], [c(0.1, 0.0), c(0.5, 0.0)]]);
        match DensityOp::from_mat(m) {
            Err(Error::InvalidDensity { invariant, .. }) => assert_eq!(invariant, "Hermitian"),
            other => panic!("expected Hermitian failure, got {other:?}"),
        }
        // wrong trace
        let m = ComplexMat2::from_real([[0.7, 0.0], [0.0, 0.7]]);
        match DensityOp::from_mat(m) {
            Err(Error::InvalidDensity { invariant, .. }) => assert_eq!(invariant, "unit trace"),
            other => panic!("expected trace failure, got {other:?}"),
        }
        // negative eigenvalue
        let m = ComplexMat2::from_real([[1.2, 0.0], [0.0, -0.2]]);
        match DensityOp::from_mat(m) {
            Err(Error::InvalidDensity { invariant, .. }) => {
                assert!(invariant.contains("positive"))
            }
            other => panic!("expected positivity failure, got {other:?}"),
        }
        // NaN entries
        let m = ComplexMat2::from_real([[f64::NAN, 0.0], [0.0, 1.0]]);
        assert!(DensityOp::from_mat(m).is_err());
    }

    #[test]
    fn bloch_round_trip() {
        let rho = DensityOp::from_bloch(0.2, -0.4, 0.5).unwrap();
        let b = rho.bloch();
        assert!((b[0] - 0.2).abs() < 1e-15);
        assert!((b[1] + 0.4).abs() < 1e-15);
        assert!((b[2] - 0.5).abs() < 1e-15);
        // slight overshoot is projected back onto the sphere
        let rho = DensityOp::from_bloch(1.0 + 2e-10, 0.0, 0.0).unwrap();
        assert!(rho.bloch_norm() <= 1.0 + 1e-15);
        // beyond tolerance is rejected
        assert!(DensityOp::from_bloch(1.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn pure_state_projector_is_rank_one() {
        let phi = PureState::normalized(c(1.0, 2.0), c(-0.5, 0.25)).unwrap();
        let pi = phi.projector();
        assert!(pi.det().norm() < 1e-12);
        assert!((pi.trace().re - 1.0).abs() < 1e-12);
        let rho = phi.density();
        assert!((rho.bloch_norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn from_bloch_unit_matches_projector() {
        for b in [
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.6, -0.48, 0.64],
        ] {
            let phi = PureState::from_bloch_unit(b);
            let got = phi.density().bloch();
            for k in 0..3 {
                assert!((got[k] - b[k]).abs() < 1e-12, "axis {k}: {got:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let h = ComplexMat2::new([[c(2.0, 0.0), c(0.3, 0.4)], [c(0.3, -0.4), c(1.0, 0.0)]]);
        let s = h.psd_sqrt();
        assert!(s.mul(&s).max_abs_diff(&h) < 1e-12);
        assert_eq!(ComplexMat2::zero().psd_sqrt(), ComplexMat2::zero());
    }

    #[test]
    fn herm_eigenvalues_closed_form() {
        let h = ComplexMat2::new([[c(0.75, 0.0), c(0.1, -0.2)], [c(0.1, 0.2), c(0.25, 0.0)]]);
        let (l1, l2) = h.herm_eigenvalues();
        // tr and det reproduce
        assert!((l1 + l2 - 1.0).abs() < 1e-14);
        assert!((l1 * l2 - h.det().re).abs() < 1e-14);
        assert!(l1 >= l2);
    }
}
