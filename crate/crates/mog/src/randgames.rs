//! Seeded random ensembles and Monte-Carlo estimators.
//!
//! Generators draw integer payoffs uniformly and independently; every
//! stochastic routine takes an explicit seed and derives one stream per
//! trial index, so parallel and serial runs produce identical results.
//!
//! The response-table model draws, for every agent and adversary profile, a
//! uniform subset of exactly `beta` efficient responses; the number of
//! equilibria it induces has mean `beta^n` and variance at most `beta^n`.
//! The simplex estimator measures the efficient fraction of uniform draws
//! from `{u >= 0, sum u <= 1}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MogError, Result};
use crate::games::{
    configurations, num_profiles, GraphicalGame, NormalFormGame, SymmetricGame,
};
use crate::rat::rat_int;
use crate::vector::{eff_mask, Point};

/// One deterministic stream per (seed, trial) pair.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    // splitmix-style mixing keeps distinct trials on distinct streams
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

fn check_range(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        return Err(MogError::InvalidArgument(format!(
            "empty payoff range {lo}:{hi}"
        )));
    }
    Ok(())
}

/// Normal-form game with every payoff component i.i.d. uniform on
/// `[lo, hi]`.
pub fn gen_uniform_normal(
    n: usize,
    alpha: usize,
    d: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<NormalFormGame> {
    check_range(lo, hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let actions = vec![alpha; n];
    let total = num_profiles(&actions)?;
    let payoffs = (0..n)
        .map(|_| {
            (0..total)
                .map(|_| Point::new((0..d).map(|_| rat_int(rng.gen_range(lo..=hi))).collect()))
                .collect()
        })
        .collect();
    NormalFormGame::new(actions, d, payoffs)
}

/// Symmetric game with uniform payoffs on every playable (action,
/// configuration) pair.
pub fn gen_uniform_symmetric(
    n: usize,
    alpha: usize,
    d: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<SymmetricGame> {
    check_range(lo, hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for config in configurations(n, alpha) {
        for action in 0..alpha {
            if config[action] >= 1 {
                let payoff =
                    Point::new((0..d).map(|_| rat_int(rng.gen_range(lo..=hi))).collect());
                entries.push((action, config.clone(), payoff));
            }
        }
    }
    SymmetricGame::new(n, alpha, d, entries)
}

/// Graphical game on an `n1 x n2` grid graph: agents are numbered row-major
/// and each agent's scope is itself plus its horizontal and vertical
/// neighbours. Payoffs are uniform on `[lo, hi]` per local profile.
pub fn gen_grid_graphical(
    n1: usize,
    n2: usize,
    alpha: usize,
    d: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<GraphicalGame> {
    check_range(lo, hi)?;
    if n1 == 0 || n2 == 0 {
        return Err(MogError::InvalidArgument("grid sides must be positive".into()));
    }
    let n = n1 * n2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let actions = vec![alpha; n];
    let mut scopes = Vec::with_capacity(n);
    for row in 0..n1 {
        for col in 0..n2 {
            let i = row * n2 + col;
            let mut scope = vec![i];
            if row > 0 {
                scope.push(i - n2);
            }
            if row + 1 < n1 {
                scope.push(i + n2);
            }
            if col > 0 {
                scope.push(i - 1);
            }
            if col + 1 < n2 {
                scope.push(i + 1);
            }
            scope.sort_unstable();
            scopes.push(scope);
        }
    }
    let tables = scopes
        .iter()
        .map(|scope| {
            let local: Vec<usize> = scope.iter().map(|&j| actions[j]).collect();
            let size = num_profiles(&local)?;
            Ok((0..size)
                .map(|_| Point::new((0..d).map(|_| rat_int(rng.gen_range(lo..=hi))).collect()))
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    GraphicalGame::new(actions, d, scopes, tables)
}

/// For each agent and adversary profile, the set of actions marked as
/// Pareto-efficient responses: always exactly `beta` of the `alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResponseTables {
    n: usize,
    alpha: usize,
    beta: usize,
    /// `marked[agent][adversary_index][action]`
    marked: Vec<Vec<Vec<bool>>>,
}

impl ResponseTables {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn is_marked(&self, agent: usize, adversary_index: usize, action: usize) -> bool {
        self.marked[agent][adversary_index][action]
    }
}

/// Draws uniformly random `beta`-subsets of the action set, independently
/// for every (agent, adversary profile) cell.
pub fn gen_response_tables(
    n: usize,
    alpha: usize,
    beta: usize,
    seed: u64,
) -> Result<ResponseTables> {
    if n == 0 || alpha == 0 {
        return Err(MogError::InvalidArgument("need n, alpha at least 1".into()));
    }
    if beta == 0 || beta > alpha {
        return Err(MogError::InvalidArgument(format!(
            "beta = {beta} outside 1..={alpha}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let adversary_cells = alpha.pow((n - 1) as u32);
    let mut scratch: Vec<usize> = (0..alpha).collect();
    let marked = (0..n)
        .map(|_| {
            (0..adversary_cells)
                .map(|_| {
                    // partial Fisher-Yates: the first beta entries are a
                    // uniform beta-subset
                    for i in 0..beta {
                        let j = rng.gen_range(i..alpha);
                        scratch.swap(i, j);
                    }
                    let mut cell = vec![false; alpha];
                    for &a in &scratch[..beta] {
                        cell[a] = true;
                    }
                    cell
                })
                .collect()
        })
        .collect();
    Ok(ResponseTables {
        n,
        alpha,
        beta,
        marked,
    })
}

/// Number of profiles whose every coordinate is marked as an efficient
/// response in the owner's cell.
pub fn count_pn(tables: &ResponseTables) -> u64 {
    let n = tables.n;
    let alpha = tables.alpha;
    let actions = vec![alpha; n];
    let total = num_profiles(&actions).expect("validated");
    // strides over the adversary sub-profile of each agent
    let mut count = 0u64;
    let mut profile = vec![0usize; n];
    for idx in 0..total {
        // decode idx once per profile
        let mut rest = idx;
        for slot in profile.iter_mut().rev() {
            *slot = rest % alpha;
            rest /= alpha;
        }
        let good = (0..n).all(|agent| {
            let mut adversary = 0usize;
            for (j, &a) in profile.iter().enumerate() {
                if j != agent {
                    adversary = adversary * alpha + a;
                }
            }
            tables.marked[agent][adversary][profile[agent]]
        });
        if good {
            count += 1;
        }
    }
    count
}

/// Seeded equilibrium counts over independent table draws.
pub fn z_samples(n: usize, alpha: usize, beta: usize, trials: usize, seed: u64) -> Result<Vec<u64>> {
    (0..trials)
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let table_seed = rng.gen::<u64>();
            Ok(count_pn(&gen_response_tables(n, alpha, beta, table_seed)?))
        })
        .collect()
}

/// Monte-Carlo summary of the equilibrium count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZMoments {
    pub mean: f64,
    /// unbiased sample variance
    pub variance: f64,
    /// fraction of trials with `(1-gamma) beta^n <= Z <= (1+gamma) beta^n`
    pub tail_freq: f64,
}

/// Sample mean, variance and in-band frequency of the equilibrium count
/// over `trials` independent table draws.
pub fn estimate_z_moments(
    n: usize,
    alpha: usize,
    beta: usize,
    trials: usize,
    seed: u64,
    gamma: f64,
) -> Result<ZMoments> {
    if trials == 0 {
        return Err(MogError::InvalidArgument("need at least one trial".into()));
    }
    let samples = z_samples(n, alpha, beta, trials, seed)?;
    let len = samples.len() as f64;
    let mean = samples.iter().map(|&z| z as f64).sum::<f64>() / len;
    let variance = if samples.len() < 2 {
        0.0
    } else {
        samples
            .iter()
            .map(|&z| {
                let dev = z as f64 - mean;
                dev * dev
            })
            .sum::<f64>()
            / (len - 1.0)
    };
    let center = (beta as f64).powi(n as i32);
    let lo = (1.0 - gamma) * center;
    let hi = (1.0 + gamma) * center;
    let in_band = samples
        .iter()
        .filter(|&&z| {
            let z = z as f64;
            z >= lo && z <= hi
        })
        .count() as f64;
    Ok(ZMoments {
        mean,
        variance,
        tail_freq: in_band / len,
    })
}

/// One trial of the simplex experiment: draw `alpha` points uniformly in
/// `{u >= 0, sum u <= 1}` by rejection and count the Pareto-efficient ones.
fn simplex_trial(alpha: usize, d: usize, rng: &mut ChaCha8Rng) -> usize {
    let mut points: Vec<Point<f64>> = Vec::with_capacity(alpha);
    while points.len() < alpha {
        let candidate: Vec<f64> = (0..d).map(|_| rng.gen::<f64>()).collect();
        if candidate.iter().sum::<f64>() <= 1.0 {
            points.push(Point::new(candidate));
        }
    }
    eff_mask(&points).iter().filter(|&&m| m).count()
}

/// Per-trial efficient-point counts of the simplex experiment.
pub fn front_size_samples(alpha: usize, d: usize, trials: usize, seed: u64) -> Result<Vec<usize>> {
    if alpha == 0 || d == 0 {
        return Err(MogError::InvalidArgument("need alpha, d at least 1".into()));
    }
    if d > 8 {
        // rejection sampling acceptance rate is 1/d!; refuse hopeless runs
        return Err(MogError::InvalidArgument(
            "rejection sampling is impractical beyond d = 8".into(),
        ));
    }
    Ok((0..trials)
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            simplex_trial(alpha, d, &mut rng)
        })
        .collect())
}

/// Mean Pareto-front size of `alpha` uniform simplex draws.
pub fn simplex_front_size(alpha: usize, d: usize, trials: usize, seed: u64) -> Result<f64> {
    if trials == 0 {
        return Err(MogError::InvalidArgument("need at least one trial".into()));
    }
    let samples = front_size_samples(alpha, d, trials, seed)?;
    Ok(samples.iter().map(|&b| b as f64).sum::<f64>() / samples.len() as f64)
}
