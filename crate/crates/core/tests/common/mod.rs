//! Shared generators and independent oracles for the integration suites.

#![allow(dead_code)]

use qchan::{Complex64, ComplexMat2, DensityOp, KrausChannel, PureState};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex number uniform in the closed unit disc.
pub fn rand_unit_disc(rng: &mut impl Rng) -> Complex64 {
    let r = rng.gen_range(0.0f64..1.0).sqrt();
    let phi = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
    Complex64::from_polar(r, phi)
}

/// 2×2 matrix with entries uniform in the unit disc.
pub fn rand_mat_disc(rng: &mut impl Rng) -> ComplexMat2 {
    ComplexMat2::new([
        [rand_unit_disc(rng), rand_unit_disc(rng)],
        [rand_unit_disc(rng), rand_unit_disc(rng)],
    ])
}

/// Random pure state (normalized complex amplitude pair).
pub fn rand_pure(rng: &mut impl Rng) -> PureState {
    loop {
        let x0 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let x1 = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if let Ok(p) = PureState::normalized(x0, x1) {
            return p;
        }
    }
}

/// Density operator uniform over the Bloch ball.
pub fn rand_density(rng: &mut impl Rng) -> DensityOp {
    loop {
        let b: [f64; 3] = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        if b[0] * b[0] + b[1] * b[1] + b[2] * b[2] <= 1.0 {
            return DensityOp::from_bloch(b[0], b[1], b[2]).unwrap();
        }
    }
}

/// Density operator with Bloch radius at most `rmax` (strictly interior).
pub fn rand_interior_density(rng: &mut impl Rng, rmax: f64) -> DensityOp {
    loop {
        let rho = rand_density(rng);
        if rho.bloch_norm() <= rmax {
            return rho;
        }
    }
}

/// Inverse of a 2×2 matrix by Cayley–Hamilton.
pub fn inverse(m: &ComplexMat2) -> Option<ComplexMat2> {
    let det = m.det();
    if det.norm() < 1e-12 {
        return None;
    }
    Some(
        ComplexMat2::identity()
            .scale(m.trace())
            .sub(m)
            .scale(Complex64::new(1.0, 0.0) / det),
    )
}

/// Rescale a Kraus list to satisfy Σ A_j†A_j = 1, multiplying every
/// operator on the right by S^{−1/2}. Fails when S is near-singular.
pub fn normalize_to_cptp(kraus: &[ComplexMat2]) -> Option<Vec<ComplexMat2>> {
    let mut s = ComplexMat2::zero();
    for a in kraus {
        s = s.add(&a.adjoint().mul(a));
    }
    let (_, smallest) = s.herm_eigenvalues();
    if smallest < 0.05 {
        return None;
    }
    let inv_sqrt = inverse(&s.psd_sqrt())?;
    Some(kraus.iter().map(|a| a.mul(&inv_sqrt)).collect())
}

/// Random two-Kraus CPTP channel.
pub fn rand_cptp2(rng: &mut impl Rng) -> KrausChannel {
    loop {
        let raw = [rand_mat_disc(rng), rand_mat_disc(rng)];
        if let Some(ops) = normalize_to_cptp(&raw) {
            let ch = KrausChannel::new(ops).unwrap();
            debug_assert!(ch.validate_cptp().pass);
            return ch;
        }
    }
}

/// Channel with `m` Kraus operators drawn from a random 2-dimensional
/// span; CPTP-normalized when the Gram sum allows it, raw otherwise.
pub fn rand_span2_channel(rng: &mut impl Rng, m: usize) -> KrausChannel {
    let a = rand_mat_disc(rng);
    let b = rand_mat_disc(rng);
    let ops: Vec<ComplexMat2> = (0..m)
        .map(|_| {
            a.scale(rand_unit_disc(rng))
                .add(&b.scale(rand_unit_disc(rng)))
        })
        .collect();
    let ops = normalize_to_cptp(&ops).unwrap_or(ops);
    KrausChannel::new(ops).unwrap()
}

/// Concurrence of two PSD matrices by the eigenvalue route:
/// λ1 − λ2 of (√ω1 ω2 √ω1)^{1/2}, independent of the closed form.
pub fn concurrence_eigenroute(w1: &ComplexMat2, w2: &ComplexMat2) -> f64 {
    let s = w1.psd_sqrt();
    let inner = s.mul(w2).mul(&s);
    let m = inner.psd_sqrt();
    let (l1, l2) = m.herm_eigenvalues();
    (l1 - l2).max(0.0)
}

// Small dense 4-dimensional helpers for the tensor identity.

pub type Vec4 = [Complex64; 4];

/// Kronecker product of two 2×2 matrices, row-major 4×4.
pub fn kron(a: &ComplexMat2, b: &ComplexMat2) -> [[Complex64; 4]; 4] {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a.m[i][j] * b.m[k][l];
                }
            }
        }
    }
    out
}

pub fn mat4_apply(m: &[[Complex64; 4]; 4], v: &Vec4) -> Vec4 {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            out[i] += e * v[j];
        }
    }
    out
}

/// |φ⟩⊗|φ⟩ for amplitudes (x0, x1).
pub fn phi_tensor_phi(phi: &PureState) -> Vec4 {
    let [x0, x1] = phi.amps();
    [x0 * x0, x0 * x1, x1 * x0, x1 * x1]
}
