//! Scalar entropy functions, all in bits.
//!
//! The entropy of a qubit state is a function of a single variable: with
//! eigenvalues μ1 ≥ μ2 one has S(ω) = h(μ1) = f(y) at y = 2√(det ω), where
//! h is the binary entropy and f(y) = h((1 + √(1 − y²))/2). The curve f is
//! even, increasing on [0, 1] and convex on [−1, 1], which is what makes
//! the roof constructions in [`crate::roofs`] work.

use crate::error::{Error, Result};
use crate::mat2::DensityOp;

/// Domain slack for the scalar functions: arguments out of range by at most
/// this much are clamped, beyond it they are rejected.
pub const DOMAIN_TOL: f64 = 1e-12;

/// Binary entropy h(x) = −x log2 x − (1−x) log2 (1−x), with 0·log 0 = 0.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-DOMAIN_TOL..=1.0 + DOMAIN_TOL).contains(&x) {
        return Err(Error::Domain(format!(
            "binary_entropy argument {x} outside [0, 1]"
        )));
    }
    let x = x.clamp(0.0, 1.0);
    Ok(h_unchecked(x))
}

#[inline]
fn h_unchecked(x: f64) -> f64 {
    let mut s = 0.0;
    if x > 0.0 {
        s -= x * x.log2();
    }
    if x < 1.0 {
        s -= (1.0 - x) * (1.0 - x).log2();
    }
    s
}

/// The entropy curve f(y) = h((1 + √(1 − y²))/2) on [−1, 1].
pub fn f_curve(y: f64) -> Result<f64> {
    if !(y.abs() <= 1.0 + DOMAIN_TOL) {
        return Err(Error::Domain(format!(
            "f_curve argument {y} outside [-1, 1]"
        )));
    }
    let y = y.clamp(-1.0, 1.0);
    Ok(h_unchecked((1.0 + (1.0 - y * y).max(0.0).sqrt()) / 2.0))
}

/// Von Neumann entropy S(ω) = h(μ1), μ1 the larger eigenvalue.
pub fn von_neumann_entropy(omega: &DensityOp) -> f64 {
    h_unchecked(omega.eigenvalues().0)
}

/// Relative entropy S(ω1 ∥ ω2) = tr ω1 (log2 ω1 − log2 ω2).
///
/// Returns +∞ when the support of ω1 is not contained in the support of ω2
/// (an eigenvalue of ω2 below 1e-12 carries ω1-weight above 1e-12).
pub fn relative_entropy(omega1: &DensityOp, omega2: &DensityOp) -> f64 {
    const SUPPORT_TOL: f64 = 1e-12;

    let (mu1, mu2) = omega1.eigenvalues();
    let mut s = 0.0;
    for mu in [mu1, mu2] {
        if mu > 0.0 {
            s += mu * mu.log2();
        }
    }

    // tr ω1 log2 ω2 via the spectral projectors of ω2.
    let (l1, l2) = omega2.eigenvalues();
    let m1 = omega1.mat();
    let m2 = omega2.mat();
    if l1 - l2 <= 1e-14 {
        // ω2 ≈ (1/2)·1; log2 ω2 is a multiple of the identity.
        if l1 <= SUPPORT_TOL {
            return f64::INFINITY;
        }
        return s - l1.log2();
    }
    // P1 = (ω2 − l2·1)/(l1 − l2), P2 = 1 − P1; weights w_i = tr(ω1 P_i).
    let w1 = ((m1.m[0][0] * (m2.m[0][0] - l2) + m1.m[0][1] * m2.m[1][0]
        + m1.m[1][0] * m2.m[0][1]
        + m1.m[1][1] * (m2.m[1][1] - l2))
        .re
        / (l1 - l2))
        .clamp(0.0, 1.0);
    let w2 = 1.0 - w1;
    for (w, l) in [(w1, l1), (w2, l2)] {
        if l <= SUPPORT_TOL {
            if w > SUPPORT_TOL {
                return f64::INFINITY;
            }
        } else {
            s -= w * l.log2();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::{ComplexMat2, PureState};

    const H_QUARTER: f64 = 0.811_278_124_459_132_8;
    const F_HALF: f64 = 0.354_578_902_665_27;

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert!((binary_entropy(0.25).unwrap() - H_QUARTER).abs() < 1e-15);
        // symmetric
        assert!((binary_entropy(0.75).unwrap() - H_QUARTER).abs() < 1e-15);
        // clamped just outside, rejected further out
        assert_eq!(binary_entropy(-5e-13).unwrap(), 0.0);
        assert!(binary_entropy(-1e-9).is_err());
        assert!(binary_entropy(1.0 + 1e-9).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }

    #[test]
    fn f_curve_values() {
        assert_eq!(f_curve(0.0).unwrap(), 0.0);
        assert_eq!(f_curve(1.0).unwrap(), 1.0);
        assert_eq!(f_curve(-1.0).unwrap(), 1.0);
        assert!((f_curve(0.5).unwrap() - F_HALF).abs() < 1e-15);
        assert!((f_curve(-0.5).unwrap() - F_HALF).abs() < 1e-15);
        assert!(f_curve(1.0 + 1e-9).is_err());
    }

    #[test]
    fn f_curve_monotone_on_positive_half() {
        let mut prev = -1.0;
        for i in 0..=1000 {
            let y = i as f64 / 1000.0;
            let v = f_curve(y).unwrap();
            assert!(v >= prev, "f not monotone at y = {y}");
            prev = v;
        }
    }

    #[test]
    fn von_neumann_values() {
        let pure = PureState::ket0().density();
        assert_eq!(von_neumann_entropy(&pure), 0.0);
        let mixed = crate::mat2::DensityOp::maximally_mixed();
        assert_eq!(von_neumann_entropy(&mixed), 1.0);
        let diag =
            crate::mat2::DensityOp::from_mat(ComplexMat2::from_real([[0.75, 0.0], [0.0, 0.25]]))
                .unwrap();
        assert!((von_neumann_entropy(&diag) - H_QUARTER).abs() < 1e-15);
    }

    #[test]
    fn relative_entropy_values() {
        let diag =
            crate::mat2::DensityOp::from_mat(ComplexMat2::from_real([[0.75, 0.0], [0.0, 0.25]]))
                .unwrap();
        let mixed = crate::mat2::DensityOp::maximally_mixed();
        assert_eq!(relative_entropy(&diag, &diag), 0.0);
        assert!((relative_entropy(&diag, &mixed) - (1.0 - H_QUARTER)).abs() < 1e-14);
        // orthogonal pure states have disjoint supports
        let p0 = PureState::ket0().density();
        let p1 = PureState::ket1().density();
        assert_eq!(relative_entropy(&p0, &p1), f64::INFINITY);
        // same pure state: zero
        assert_eq!(relative_entropy(&p0, &p0), 0.0);
    }

    #[test]
    fn relative_entropy_nontrivial_projectors() {
        // ω2 with off-diagonal structure; compare against a small spectral
        // computation done by hand here.
        let w2 = crate::mat2::DensityOp::from_bloch(0.3, 0.2, -0.4).unwrap();
        let w1 = crate::mat2::DensityOp::from_bloch(-0.1, 0.5, 0.2).unwrap();
        let got = relative_entropy(&w1, &w2);
        // independent route: diagonalize ω2 by its eigenvectors
        let (l1, l2) = w2.eigenvalues();
        let m = w2.mat();
        // eigenvector for l1 from (ω2 − l2·1) columns
        let col = if (m.m[0][0].re - l2).abs() > m.m[1][0].norm() {
            [m.m[0][0] - l2, m.m[1][0]]
        } else {
            [m.m[0][1], m.m[1][1] - l2]
        };
        let v = PureState::normalized(col[0], col[1]).unwrap();
        let p1 = v.projector();
        let w1m = w1.mat();
        let weight1 = (w1m.mul(&p1)).trace().re;
        let (mu1, mu2) = w1.eigenvalues();
        let expected = mu1 * mu1.log2() + mu2 * mu2.log2()
            - weight1 * l1.log2()
            - (1.0 - weight1) * l2.log2();
        assert!(
            (got - expected).abs() < 1e-12,
            "got {got}, expected {expected}"
        );
    }
}
