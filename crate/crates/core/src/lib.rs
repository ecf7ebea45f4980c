//! Closed-form concurrence, entropy roofs and Holevo one-shot capacity for
//! 1-qubit Kraus channels.
//!
//! For a channel `T(ρ) = Σ_j A_j ρ A_j†` whose Kraus operators span at most a
//! 2-dimensional operator space, there is a Hermitian anti-linear operator θ
//! with `det T(π) = tr π (θπθ)` for every pure π. The channel concurrence
//!
//! ```text
//! C_T(ρ)² = tr(ρ θρθ) − 2 det ρ √(det θ²)
//! ```
//!
//! is then a flat convex roof, which turns the variational definitions of the
//! entropy roof `E_T = f(2 C_T)` and the channel entropy `H_T = S_T − E_T`
//! into closed-form expressions. Maximizing `H_T` over the Bloch ball gives
//! the one-shot capacity.
//!
//! The crate couples those closed forms with independent brute-force solvers
//! ([`oracle`]) that minimize over explicit pure-state decompositions, so
//! every formula can be certified against the variational problem it solves.
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs, so everything here is safe to share across
//! threads. Entropies are in bits throughout.

// negated comparisons like !(dev <= tol) are load-bearing: they must also
// reject NaN deviations
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod antilinear;
pub mod capacity;
pub mod channel;
pub mod entropy;
pub mod error;
mod jacobi;
pub mod mat2;
pub mod oracle;
pub mod roofs;
mod stream;

pub use antilinear::{span_scale, theta_from_channel, theta_from_pair, transform_pair, AntiHermOp};
pub use capacity::{capacity, capacity_degenerate, optimal_signal_report, CapacityResult, SignalReport};
pub use channel::{CptpReport, KrausChannel, SpanBasis};
pub use entropy::{binary_entropy, f_curve, relative_entropy, von_neumann_entropy};
pub use error::{Error, Result};
pub use mat2::{ComplexMat2, DensityOp, PureState};
pub use oracle::{
    chord_ensemble, mutual_information, oracle_concurrence, oracle_entropy_roof, Ensemble,
    OracleConfig,
};
pub use roofs::{
    channel_concurrence, channel_concurrence_extremal, concurrence_pair, entropy_roof,
    entropy_wrt_channel, leaf, LeafDecomposition,
};

pub use num_complex::Complex64;
