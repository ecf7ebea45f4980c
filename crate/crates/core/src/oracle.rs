//! Brute-force solvers for the variational definitions of the entropy roof
//! and the channel concurrence.
//!
//! Both quantities minimize an average of a function of pure states over
//! all decompositions ρ = Σ pⱼ πⱼ. Every two-state pure decomposition of an
//! interior ρ is a chord of the Bloch ball through its Bloch point, so the
//! search space is the 2-sphere of chord directions plus convex mixtures of
//! two chords (which covers ensembles of up to four pure states). The
//! solvers scan an equal-area direction grid, refine the best direction by
//! coordinate descent with step halving, and repeat from seeded random
//! starts; with the same seed two runs produce bit-identical results.
//!
//! The closed forms in [`crate::roofs`] are certified against these
//! solvers: a correct roof can never exceed any decomposition average, and
//! the solvers should get within grid-refinement tolerance of it.

use rand::Rng;

use crate::channel::KrausChannel;
use crate::entropy::relative_entropy;
use crate::error::{Error, Result};
use crate::mat2::{ComplexMat2, DensityOp, PureState};
use crate::stream::substream;

/// A finite pure-state ensemble with its average state.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    states: Vec<PureState>,
    weights: Vec<f64>,
    average: DensityOp,
}

impl Ensemble {
    /// Build an ensemble of 1 to 4 pure states; weights must be
    /// nonnegative and sum to 1 within 1e-12.
    pub fn new(states: Vec<PureState>, weights: Vec<f64>) -> Result<Self> {
        if states.is_empty() || states.len() > 4 || states.len() != weights.len() {
            return Err(Error::Config(format!(
                "ensemble needs 1..=4 states with matching weights, got {} states and {} weights",
                states.len(),
                weights.len()
            )));
        }
        if weights.iter().any(|&w| !(w >= 0.0)) {
            return Err(Error::Config("ensemble weights must be >= 0".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Config(format!(
                "ensemble weights sum to {total}, not 1"
            )));
        }
        let mut avg = ComplexMat2::zero();
        for (p, s) in weights.iter().zip(&states) {
            avg = avg.add(&s.projector().scale_re(*p));
        }
        let average = DensityOp::from_mat(avg)?;
        Ok(Self {
            states,
            weights,
            average,
        })
    }

    /// Like [`Ensemble::new`], but also checks that the average equals a
    /// prescribed state within 1e-9 entrywise.
    pub fn with_average(
        states: Vec<PureState>,
        weights: Vec<f64>,
        rho: &DensityOp,
    ) -> Result<Self> {
        let e = Self::new(states, weights)?;
        let dev = e.average.mat().max_abs_diff(rho.mat());
        if dev > 1e-9 {
            return Err(Error::Config(format!(
                "ensemble average deviates from the prescribed state by {dev:.3e}"
            )));
        }
        Ok(e)
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn average(&self) -> &DensityOp {
        &self.average
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Search parameters for the decomposition solvers and the capacity
/// maximizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Seeded random restarts on top of the deterministic grid scan (≥ 1).
    pub restarts: usize,
    /// Direction grid resolution; the scan covers grid × grid points (≥ 8).
    pub grid: usize,
    pub seed: u64,
    /// Iteration cap for the local refinement.
    pub refine_iters: usize,
    /// Step size below which refinement stops.
    pub tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            restarts: 16,
            grid: 64,
            seed: 42,
            refine_iters: 200,
            tol: 1e-10,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::Config("restarts must be >= 1".into()));
        }
        if self.grid < 8 {
            return Err(Error::Config("grid must be >= 8".into()));
        }
        Ok(())
    }
}

/// The two-state ensemble cut out by the chord through ρ along `direction`:
/// endpoints on the unit sphere, weights by inverse distance. A pure ρ
/// yields the singleton ensemble.
pub fn chord_ensemble(rho: &DensityOp, direction: [f64; 3]) -> Result<Ensemble> {
    let n = (direction[0] * direction[0] + direction[1] * direction[1]
        + direction[2] * direction[2])
        .sqrt();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::Config("chord direction must be a nonzero vector".into()));
    }
    let dir = [direction[0] / n, direction[1] / n, direction[2] / n];
    let b = rho.bloch();
    let r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    if r2 >= (1.0 - 1e-12) * (1.0 - 1e-12) {
        let phi = PureState::from_bloch_unit(unit(b));
        return Ensemble::with_average(vec![phi], vec![1.0], rho);
    }
    let (e1, e2, w1) = chord_endpoints(b, r2, dir);
    Ensemble::with_average(
        vec![
            PureState::from_bloch_unit(e1),
            PureState::from_bloch_unit(e2),
        ],
        vec![w1, 1.0 - w1],
        rho,
    )
}

/// Average relative entropy of the channel outputs against the output of
/// the ensemble average, Σ pⱼ S(T(πⱼ) ∥ T(ρ̄)); +∞ propagates when supports
/// split.
pub fn mutual_information(channel: &KrausChannel, ensemble: &Ensemble) -> Result<f64> {
    let avg_out = channel.apply(ensemble.average())?;
    let mut total = 0.0;
    for (p, state) in ensemble.weights().iter().zip(ensemble.states()) {
        if *p == 0.0 {
            continue;
        }
        let out = channel.apply(&state.density())?;
        total += p * relative_entropy(&out, &avg_out);
    }
    Ok(total)
}

/// Minimize the average output entropy Σ pⱼ S(T(πⱼ)) over pure-state
/// decompositions of ρ. Returns the best value and the ensemble achieving
/// it.
pub fn oracle_entropy_roof(
    channel: &KrausChannel,
    rho: &DensityOp,
    cfg: &OracleConfig,
) -> Result<(f64, Ensemble)> {
    let objective = output_entropy_fn(channel);
    minimize_over_decompositions(rho, cfg, &objective)
}

/// Minimize Σ pⱼ √(det T(πⱼ)) over pure-state decompositions of ρ.
pub fn oracle_concurrence(
    channel: &KrausChannel,
    rho: &DensityOp,
    cfg: &OracleConfig,
) -> Result<f64> {
    let objective = output_root_det_fn(channel);
    minimize_over_decompositions(rho, cfg, &objective).map(|(v, _)| v)
}

fn output_entropy_fn(channel: &KrausChannel) -> impl Fn(&PureState) -> f64 + '_ {
    move |phi: &PureState| {
        let out = channel.apply_mat(&phi.projector());
        let (mu1, _) = out.herm_eigenvalues();
        let mu1 = mu1.clamp(0.0, 1.0);
        let mut s = 0.0;
        if mu1 > 0.0 {
            s -= mu1 * mu1.log2();
        }
        if mu1 < 1.0 {
            s -= (1.0 - mu1) * (1.0 - mu1).log2();
        }
        s
    }
}

fn output_root_det_fn(channel: &KrausChannel) -> impl Fn(&PureState) -> f64 + '_ {
    move |phi: &PureState| {
        channel
            .apply_mat(&phi.projector())
            .det()
            .re
            .max(0.0)
            .sqrt()
    }
}

struct ChordEval {
    dir: [f64; 3],
    value: f64,
    ends: ([f64; 3], [f64; 3]),
    w1: f64,
}

fn minimize_over_decompositions(
    rho: &DensityOp,
    cfg: &OracleConfig,
    objective: &impl Fn(&PureState) -> f64,
) -> Result<(f64, Ensemble)> {
    cfg.validate()?;
    let b = rho.bloch();
    let r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    if r2 >= (1.0 - 1e-12) * (1.0 - 1e-12) {
        let phi = PureState::from_bloch_unit(unit(b));
        let value = objective(&phi);
        return Ok((value, Ensemble::with_average(vec![phi], vec![1.0], rho)?));
    }

    let eval = |dir: [f64; 3]| -> ChordEval {
        let (e1, e2, w1) = chord_endpoints(b, r2, dir);
        let f1 = objective(&PureState::from_bloch_unit(e1));
        let f2 = objective(&PureState::from_bloch_unit(e2));
        ChordEval {
            dir,
            value: w1 * f1 + (1.0 - w1) * f2,
            ends: (e1, e2),
            w1,
        }
    };

    // best and runner-up chord over everything evaluated so far
    let mut best: Option<ChordEval> = None;
    let mut second: Option<ChordEval> = None;
    let consider = |cand: ChordEval, best: &mut Option<ChordEval>, second: &mut Option<ChordEval>| {
        match best {
            None => *best = Some(cand),
            Some(b) if cand.value < b.value => {
                *second = best.take();
                *best = Some(cand);
            }
            _ => match second {
                None => *second = Some(cand),
                Some(s) if cand.value < s.value => *second = Some(cand),
                _ => {}
            },
        }
    };

    // deterministic equal-area grid scan
    let g = cfg.grid;
    for i in 0..g {
        let z = -1.0 + 2.0 * (i as f64 + 0.5) / g as f64;
        let rxy = (1.0 - z * z).max(0.0).sqrt();
        for j in 0..g {
            let phi = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / g as f64;
            consider(
                eval([rxy * phi.cos(), rxy * phi.sin(), z]),
                &mut best,
                &mut second,
            );
        }
    }
    let refined = refine_direction(
        best.as_ref().expect("grid is nonempty").dir,
        std::f64::consts::PI / g as f64,
        cfg,
        &eval,
    );
    consider(refined, &mut best, &mut second);

    // seeded random restarts
    for r in 1..cfg.restarts as u64 {
        let mut rng = substream(cfg.seed, r);
        let mut local: Option<ChordEval> = None;
        for _ in 0..g {
            let dir = random_unit(&mut rng);
            let cand = eval(dir);
            if local.as_ref().is_none_or(|l| cand.value < l.value) {
                local = Some(cand);
            }
        }
        let local = local.expect("grid >= 8");
        let start = local.dir;
        consider(local, &mut best, &mut second);
        let refined = refine_direction(start, std::f64::consts::PI / g as f64, cfg, &eval);
        consider(refined, &mut best, &mut second);
    }

    let best = best.expect("at least one chord evaluated");

    // Guard layer: convex mixtures of the two best chords (a 4-state
    // ensemble). The mixture average is linear in the mixing weight, so it
    // can only tie the better chord; it is kept only on strict improvement.
    if let Some(second) = &second {
        let mut best_w = 1.0;
        let mut best_mix = best.value;
        for k in 0..=64 {
            let w = k as f64 / 64.0;
            let v = w * best.value + (1.0 - w) * second.value;
            if v < best_mix {
                best_mix = v;
                best_w = w;
            }
        }
        if best_mix < best.value && best_w > 0.0 && best_w < 1.0 {
            let states = vec![
                PureState::from_bloch_unit(best.ends.0),
                PureState::from_bloch_unit(best.ends.1),
                PureState::from_bloch_unit(second.ends.0),
                PureState::from_bloch_unit(second.ends.1),
            ];
            let weights = vec![
                best_w * best.w1,
                best_w * (1.0 - best.w1),
                (1.0 - best_w) * second.w1,
                (1.0 - best_w) * (1.0 - second.w1),
            ];
            let ens = Ensemble::with_average(states, weights, rho)?;
            return Ok((best_mix, ens));
        }
    }

    let ens = Ensemble::with_average(
        vec![
            PureState::from_bloch_unit(best.ends.0),
            PureState::from_bloch_unit(best.ends.1),
        ],
        vec![best.w1, 1.0 - best.w1],
        rho,
    )?;
    Ok((best.value, ens))
}

/// Coordinate descent over the two tangent directions of the chord
/// direction, with step halving.
fn refine_direction(
    start: [f64; 3],
    step0: f64,
    cfg: &OracleConfig,
    eval: &impl Fn([f64; 3]) -> ChordEval,
) -> ChordEval {
    let mut current = eval(start);
    let mut step = step0;
    for _ in 0..cfg.refine_iters {
        if step < cfg.tol.max(1e-12) {
            break;
        }
        let (t1, t2) = tangent_basis(current.dir);
        let mut improved = false;
        for t in [t1, t2] {
            for sgn in [1.0, -1.0] {
                let cand = eval(unit([
                    current.dir[0] + sgn * step * t[0],
                    current.dir[1] + sgn * step * t[1],
                    current.dir[2] + sgn * step * t[2],
                ]));
                if cand.value < current.value {
                    current = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    current
}

fn chord_endpoints(b: [f64; 3], r2: f64, dir: [f64; 3]) -> ([f64; 3], [f64; 3], f64) {
    let bu = b[0] * dir[0] + b[1] * dir[1] + b[2] * dir[2];
    let disc = (bu * bu + 1.0 - r2).max(0.0).sqrt();
    let (lp, lm) = (-bu + disc, -bu - disc);
    let at = |l: f64| unit([b[0] + l * dir[0], b[1] + l * dir[1], b[2] + l * dir[2]]);
    (at(lp), at(lm), -lm / (lp - lm))
}

fn tangent_basis(dir: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    // seed axis: the coordinate direction least aligned with dir
    let a = [dir[0].abs(), dir[1].abs(), dir[2].abs()];
    let e = if a[0] <= a[1] && a[0] <= a[2] {
        [1.0, 0.0, 0.0]
    } else if a[1] <= a[2] {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let t1 = unit(cross(dir, e));
    let t2 = cross(dir, t1);
    (t1, t2)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn unit(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if n == 0.0 {
        return v;
    }
    [v[0] / n, v[1] / n, v[2] / n]
}

fn random_unit(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if n2 > 1e-4 && n2 <= 1.0 {
            return unit(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antilinear::theta_from_pair;
    use crate::entropy::von_neumann_entropy;
    use crate::roofs::{channel_concurrence, entropy_roof};
    use num_complex::Complex64;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn small_cfg() -> OracleConfig {
        OracleConfig {
            restarts: 4,
            grid: 24,
            seed: 42,
            refine_iters: 200,
            tol: 1e-10,
        }
    }

    #[test]
    fn chord_ensemble_diameter() {
        let ens = chord_ensemble(&DensityOp::maximally_mixed(), [0.0, 0.0, 1.0]).unwrap();
        assert_eq!(ens.len(), 2);
        assert_eq!(ens.weights(), &[0.5, 0.5]);
        let b0 = ens.states()[0].density().bloch();
        let b1 = ens.states()[1].density().bloch();
        assert!((b0[2] - 1.0).abs() < 1e-12);
        assert!((b1[2] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn chord_ensemble_pure_is_singleton() {
        let phi = PureState::from_bloch_unit([0.0, 0.6, 0.8]);
        let ens = chord_ensemble(&phi.density(), [1.0, 0.0, 0.0]).unwrap();
        assert_eq!(ens.len(), 1);
        assert_eq!(ens.weights(), &[1.0]);
    }

    #[test]
    fn chord_ensemble_invariants_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let rho = loop {
                let b: [f64; 3] = [
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ];
                if b.iter().map(|x| x * x).sum::<f64>() < 0.96 {
                    break DensityOp::from_bloch(b[0], b[1], b[2]).unwrap();
                }
            };
            let dir = random_unit(&mut rng);
            // constructor re-validates the average against ρ at 1e-9
            let ens = chord_ensemble(&rho, dir).unwrap();
            assert!(ens.weights().iter().all(|&w| w >= 0.0));
        }
        assert!(chord_ensemble(&DensityOp::maximally_mixed(), [0.0; 3]).is_err());
    }

    #[test]
    fn config_bounds_are_enforced() {
        let bad = OracleConfig {
            restarts: 0,
            ..OracleConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = OracleConfig {
            grid: 4,
            ..OracleConfig::default()
        };
        assert!(bad.validate().is_err());
        assert!(OracleConfig::default().validate().is_ok());
    }

    #[test]
    fn ensemble_validation_errors() {
        let p = PureState::ket0();
        assert!(Ensemble::new(vec![], vec![]).is_err());
        assert!(Ensemble::new(vec![p; 5], vec![0.2; 5]).is_err());
        assert!(Ensemble::new(vec![p; 2], vec![0.7, 0.4]).is_err());
        assert!(Ensemble::new(vec![p; 2], vec![1.2, -0.2]).is_err());
        let far = DensityOp::maximally_mixed();
        assert!(Ensemble::with_average(vec![p], vec![1.0], &far).is_err());
    }

    #[test]
    fn identity_channel_roof_is_zero() {
        let id = KrausChannel::identity();
        let rho = DensityOp::from_bloch(0.1, 0.2, 0.3).unwrap();
        let (v, ens) = oracle_entropy_roof(&id, &rho, &small_cfg()).unwrap();
        assert!(v.abs() < 1e-12);
        assert!(!ens.is_empty());
        assert!(oracle_concurrence(&id, &rho, &small_cfg()).unwrap() < 1e-12);
    }

    #[test]
    fn degenerate_channel_oracle_matches_closed_forms() {
        let t = 0.5;
        let ch = KrausChannel::degenerate(t).unwrap();
        let theta = theta_from_pair(&ch.kraus()[0], &ch.kraus()[1]);
        let rho = DensityOp::maximally_mixed();
        let cfg = small_cfg();

        let (v, ens) = oracle_entropy_roof(&ch, &rho, &cfg).unwrap();
        let closed = entropy_roof(&theta, &rho);
        assert!(v >= closed - 1e-9, "oracle beat the roof: {v} < {closed}");
        assert!(v <= closed + 1e-4, "oracle missed the roof: {v} vs {closed}");
        // flat optimum: both ensemble members have the concurrence of ρ
        for s in ens.states() {
            let cs = channel_concurrence(&theta, &s.density());
            assert!((cs - channel_concurrence(&theta, &rho)).abs() < 1e-3);
        }

        let cv = oracle_concurrence(&ch, &rho, &cfg).unwrap();
        let closed_c = channel_concurrence(&theta, &rho);
        assert!(cv >= closed_c - 1e-9);
        assert!(cv <= closed_c + 1e-4);
    }

    #[test]
    fn oracle_is_seed_deterministic() {
        let ch = KrausChannel::degenerate(0.35).unwrap();
        let rho = DensityOp::from_bloch(0.2, -0.1, 0.3).unwrap();
        let cfg = small_cfg();
        let (v1, _) = oracle_entropy_roof(&ch, &rho, &cfg).unwrap();
        let (v2, _) = oracle_entropy_roof(&ch, &rho, &cfg).unwrap();
        assert_eq!(v1.to_bits(), v2.to_bits());
    }

    #[test]
    fn mutual_information_examples() {
        // singleton: no information
        let ch = KrausChannel::degenerate(0.8).unwrap();
        let phi = PureState::from_bloch_unit([0.0, 0.0, 1.0]);
        let ens = Ensemble::new(vec![phi], vec![1.0]).unwrap();
        assert_eq!(mutual_information(&ch, &ens).unwrap(), 0.0);

        // classical bit through the identity channel
        let id = KrausChannel::identity();
        let ens = Ensemble::new(
            vec![PureState::ket0(), PureState::ket1()],
            vec![0.5, 0.5],
        )
        .unwrap();
        assert!((mutual_information(&id, &ens).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_identity_with_entropies() {
        // Σ pⱼ S(T(πⱼ) ∥ T(ρ̄)) = S(T(ρ̄)) − Σ pⱼ S(T(πⱼ))
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let ch = KrausChannel::degenerate(0.45).unwrap();
        for _ in 0..100 {
            let states: Vec<PureState> = (0..3)
                .map(|_| {
                    let d = random_unit(&mut rng);
                    PureState::from_bloch_unit(d)
                })
                .collect();
            let raw: Vec<f64> = (0..3).map(|_| rng.gen_range(0.05..1.0)).collect();
            let total: f64 = raw.iter().sum();
            let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
            let ens = Ensemble::new(states, weights).unwrap();
            let lhs = mutual_information(&ch, &ens).unwrap();
            let mut rhs = von_neumann_entropy(&ch.apply(ens.average()).unwrap());
            for (p, s) in ens.weights().iter().zip(ens.states()) {
                rhs -= p * von_neumann_entropy(&ch.apply(&s.density()).unwrap());
            }
            assert!((lhs - rhs).abs() < 1e-11, "lhs {lhs} rhs {rhs}");
        }
    }

    #[test]
    fn zero_weight_members_are_skipped() {
        let id = KrausChannel::identity();
        let ens = Ensemble::new(
            vec![PureState::ket0(), PureState::ket1()],
            vec![1.0, 0.0],
        )
        .unwrap();
        assert_eq!(mutual_information(&id, &ens).unwrap(), 0.0);
    }

    #[test]
    fn oracle_never_beats_closed_form_on_random_channels() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let cfg = OracleConfig {
            restarts: 2,
            grid: 12,
            seed: 1,
            refine_iters: 40,
            tol: 1e-10,
        };
        for _ in 0..10 {
            let raw_a = ComplexMat2::new([
                [c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))],
                [c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))],
            ]);
            let raw_b = ComplexMat2::new([
                [c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))],
                [c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))],
            ]);
            let s = raw_a.adjoint().mul(&raw_a).add(&raw_b.adjoint().mul(&raw_b));
            let sq = s.psd_sqrt();
            let det = sq.det().re;
            if det.abs() < 1e-6 {
                continue;
            }
            let inv = ComplexMat2::identity()
                .scale_re(sq.trace().re)
                .sub(&sq)
                .scale_re(1.0 / det);
            let ch = KrausChannel::new(vec![raw_a.mul(&inv), raw_b.mul(&inv)]).unwrap();
            assert!(ch.validate_cptp().pass);
            let theta = theta_from_pair(&ch.kraus()[0], &ch.kraus()[1]);
            let rho = DensityOp::from_bloch(
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
            )
            .unwrap();
            let (v, _) = oracle_entropy_roof(&ch, &rho, &cfg).unwrap();
            assert!(v >= entropy_roof(&theta, &rho) - 1e-9);
            let cv = oracle_concurrence(&ch, &rho, &cfg).unwrap();
            assert!(cv >= channel_concurrence(&theta, &rho) - 1e-9);
        }
    }
}
