//! Exact multi-objective potentials and locally efficient profiles.
//!
//! A vector-valued function on profiles is an exact potential when its
//! increment along any unilateral deviation equals the deviating agent's
//! payoff increment, objective by objective. For such games the Pareto-Nash
//! equilibria are exactly the locally efficient profiles of the potential,
//! and that set is never empty on finite games.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equilibria::pareto_nash_normal;
use crate::error::{MogError, Result};
use crate::games::{
    num_profiles, profile_from_index, profile_index, NormalFormGame, PotentialAnnotation,
};
use crate::rat::{rat_int, Rat};
use crate::vector::Point;
use crate::PayoffVector;

fn check_shapes(game: &NormalFormGame, phi: &PotentialAnnotation) -> Result<()> {
    if game.actions() != phi.actions() {
        return Err(MogError::InvalidArgument(format!(
            "potential indexed over actions {:?}, game has {:?}",
            phi.actions(),
            game.actions()
        )));
    }
    if game.d() != phi.d() {
        return Err(MogError::DimensionMismatch {
            left: game.d(),
            right: phi.d(),
        });
    }
    Ok(())
}

/// Exact-potential test: for every profile, agent, deviation and objective,
/// the potential increment must equal the payoff increment (exact rational
/// equality).
pub fn is_exact_potential(game: &NormalFormGame, phi: &PotentialAnnotation) -> Result<bool> {
    check_shapes(game, phi)?;
    let actions = game.actions().to_vec();
    let total = num_profiles(&actions)?;
    let strides = {
        let mut s = vec![1usize; actions.len()];
        for i in (0..actions.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * actions[i + 1];
        }
        s
    };
    for p in 0..total {
        for agent in 0..actions.len() {
            let stride = strides[agent];
            let current = (p / stride) % actions[agent];
            for b in 0..actions[agent] {
                if b == current {
                    continue;
                }
                let q = if b >= current {
                    p + (b - current) * stride
                } else {
                    p - (current - b) * stride
                };
                let phi_diff: Vec<Rat> = phi
                    .value_by_index(q)
                    .iter()
                    .zip(phi.value_by_index(p).iter())
                    .map(|(a, b)| a - b)
                    .collect();
                let u_diff: Vec<Rat> = game
                    .payoff_by_index(agent, q)
                    .iter()
                    .zip(game.payoff_by_index(agent, p).iter())
                    .map(|(a, b)| a - b)
                    .collect();
                if phi_diff != u_diff {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Locally efficient profiles of `phi`: profiles whose value is
/// non-dominated within the one-deviation neighbourhood (which contains the
/// profile itself). Nonempty for every finite table.
pub fn locally_efficient(phi: &PotentialAnnotation) -> Result<Vec<Vec<usize>>> {
    let actions = phi.actions().to_vec();
    let total = num_profiles(&actions)?;
    let mut out = Vec::new();
    for p in 0..total {
        let profile = profile_from_index(p, &actions);
        let here = phi.value_by_index(p);
        let mut dominated = false;
        'neighbours: for agent in 0..actions.len() {
            let mut varied = profile.clone();
            for b in 0..actions[agent] {
                varied[agent] = b;
                let q = profile_index(&varied, &actions)?;
                if phi.value_by_index(q).dominates(here)? {
                    dominated = true;
                    break 'neighbours;
                }
            }
        }
        if !dominated {
            out.push(profile);
        }
    }
    Ok(out)
}

/// Outcome of the potential-characterization check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PotentialReport {
    pub pn: Vec<Vec<usize>>,
    pub loc: Vec<Vec<usize>>,
    /// `PN = LOC(phi)` as sets.
    pub sets_equal: bool,
    /// both sets nonempty
    pub nonempty: bool,
}

impl PotentialReport {
    pub fn holds(&self) -> bool {
        self.sets_equal && self.nonempty
    }
}

/// Verifies that the game's Pareto-Nash equilibria coincide with the
/// potential's locally efficient profiles and that both sets are nonempty.
/// Errors out if `phi` is not an exact potential for `game`.
pub fn check_theorem1(game: &NormalFormGame, phi: &PotentialAnnotation) -> Result<PotentialReport> {
    if !is_exact_potential(game, phi)? {
        return Err(MogError::PotentialInvalid(
            "annotation does not satisfy the exact-potential identity".into(),
        ));
    }
    let pn = pareto_nash_normal(game)?
        .pn
        .as_profiles()
        .expect("normal-form solver returns profiles")
        .to_vec();
    let loc = locally_efficient(phi)?;
    // both are produced in ascending profile-index order
    let sets_equal = pn == loc;
    let nonempty = !pn.is_empty() && !loc.is_empty();
    Ok(PotentialReport {
        pn,
        loc,
        sets_equal,
        nonempty,
    })
}

/// Random potential game: draws an integer-valued potential and per-agent
/// dummy terms over adversary profiles, then sets
/// `u_i(a) = phi(a) + w_i(a_{-i})`. The dummy term cancels in every
/// unilateral increment, so the result always passes [`is_exact_potential`].
pub fn gen_potential_game(
    n: usize,
    alpha: usize,
    d: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<(NormalFormGame, PotentialAnnotation)> {
    if n == 0 || alpha == 0 || d == 0 {
        return Err(MogError::InvalidArgument(
            "need n, alpha, d all at least 1".into(),
        ));
    }
    if lo > hi {
        return Err(MogError::InvalidArgument(format!(
            "empty payoff range {lo}:{hi}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let actions = vec![alpha; n];
    let total = num_profiles(&actions)?;

    let phi_values: Vec<PayoffVector> = (0..total)
        .map(|_| Point::new((0..d).map(|_| rat_int(rng.gen_range(lo..=hi))).collect()))
        .collect();

    // dummy terms, one table per agent over the other agents' profiles
    let others_actions = vec![alpha; n.saturating_sub(1)];
    let others_total = num_profiles(&others_actions).unwrap_or(1).max(1);
    let dummies: Vec<Vec<PayoffVector>> = (0..n)
        .map(|_| {
            (0..others_total)
                .map(|_| Point::new((0..d).map(|_| rat_int(rng.gen_range(lo..=hi))).collect()))
                .collect()
        })
        .collect();

    let mut payoffs: Vec<Vec<PayoffVector>> = vec![Vec::with_capacity(total); n];
    for p in 0..total {
        let profile = profile_from_index(p, &actions);
        for agent in 0..n {
            let others: Vec<usize> = profile
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != agent)
                .map(|(_, &a)| a)
                .collect();
            let w_idx = if others.is_empty() {
                0
            } else {
                profile_index(&others, &others_actions)?
            };
            let components = phi_values[p]
                .iter()
                .zip(dummies[agent][w_idx].iter())
                .map(|(a, b)| a + b)
                .collect();
            payoffs[agent].push(Point::new(components));
        }
    }

    let game = NormalFormGame::new(actions.clone(), d, payoffs)?;
    let phi = PotentialAnnotation::new(actions, d, phi_values)?;
    Ok((game, phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(cs: &[i64]) -> PayoffVector {
        Point::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn identical_interest_game_is_a_potential_game() {
        let phi_values = vec![pt(&[1, 2]), pt(&[3, 1]), pt(&[0, 0]), pt(&[2, 2])];
        let phi = PotentialAnnotation::new(vec![2, 2], 2, phi_values.clone()).unwrap();
        let game =
            NormalFormGame::new(vec![2, 2], 2, vec![phi_values.clone(), phi_values]).unwrap();
        assert!(is_exact_potential(&game, &phi).unwrap());
        let report = check_theorem1(&game, &phi).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn dummy_term_construction_is_exact() {
        for seed in 0..10 {
            let (game, phi) = gen_potential_game(3, 2, 2, -4, 4, seed).unwrap();
            assert!(is_exact_potential(&game, &phi).unwrap());
        }
    }

    #[test]
    fn random_games_are_almost_surely_not_potential_games() {
        // a fixed random game, checked once by the identity itself
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let actions = vec![2usize, 2];
        let total = num_profiles(&actions).unwrap();
        let payoffs: Vec<Vec<PayoffVector>> = (0..2)
            .map(|_| {
                (0..total)
                    .map(|_| Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=20))).collect()))
                    .collect()
            })
            .collect();
        let phi_values: Vec<PayoffVector> = (0..total)
            .map(|_| Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=20))).collect()))
            .collect();
        let game = NormalFormGame::new(actions.clone(), 2, payoffs).unwrap();
        let phi = PotentialAnnotation::new(actions, 2, phi_values).unwrap();
        assert!(!is_exact_potential(&game, &phi).unwrap());
        assert!(matches!(
            check_theorem1(&game, &phi),
            Err(MogError::PotentialInvalid(_))
        ));
    }

    #[test]
    fn constant_potential_marks_every_profile() {
        let phi =
            PotentialAnnotation::new(vec![2, 2], 2, vec![pt(&[1, 1]); 4]).unwrap();
        assert_eq!(locally_efficient(&phi).unwrap().len(), 4);
    }

    #[test]
    fn single_objective_loc_is_the_set_of_local_maxima() {
        let phi = PotentialAnnotation::new(
            vec![2, 2],
            1,
            vec![pt(&[3]), pt(&[1]), pt(&[2]), pt(&[4])],
        )
        .unwrap();
        // [0,0] (value 3) beats neighbours 1 and 2; [1,1] (value 4) beats both
        assert_eq!(
            locally_efficient(&phi).unwrap(),
            vec![vec![0, 0], vec![1, 1]]
        );
    }

    #[test]
    fn loc_matches_naive_neighbourhood_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let actions = vec![2usize, 2, 2];
            let total = num_profiles(&actions).unwrap();
            let phi_values: Vec<PayoffVector> = (0..total)
                .map(|_| Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=5))).collect()))
                .collect();
            let phi = PotentialAnnotation::new(actions.clone(), 2, phi_values.clone()).unwrap();
            let got = locally_efficient(&phi).unwrap();
            // oracle: dominance mask over the explicit neighbourhood list
            let mut expected = Vec::new();
            for p in 0..total {
                let profile = profile_from_index(p, &actions);
                let mut neighbourhood = Vec::new();
                for agent in 0..actions.len() {
                    let mut varied = profile.clone();
                    for b in 0..actions[agent] {
                        varied[agent] = b;
                        let q = profile_index(&varied, &actions).unwrap();
                        neighbourhood.push(phi_values[q].clone());
                    }
                }
                let dominated = neighbourhood
                    .iter()
                    .any(|v| v.dominates(&phi_values[p]).unwrap());
                if !dominated {
                    expected.push(profile);
                }
            }
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn theorem1_holds_on_generated_games() {
        let mut rng = ChaCha8Rng::seed_from_u64(404);
        for seed in 0..25 {
            let n = rng.gen_range(1..=3);
            let alpha = rng.gen_range(1..=3);
            let d = rng.gen_range(1..=3);
            let (game, phi) = gen_potential_game(n, alpha, d, -3, 3, seed).unwrap();
            let report = check_theorem1(&game, &phi).unwrap();
            assert!(report.holds(), "n={n} alpha={alpha} d={d} seed={seed}");
        }
    }

    #[test]
    fn loc_is_invariant_to_constant_shifts() {
        let (_, phi) = gen_potential_game(2, 3, 2, -3, 3, 5).unwrap();
        let shifted_values: Vec<PayoffVector> = phi
            .values()
            .iter()
            .map(|v| {
                Point::new(v.iter().map(|c| c + rat_int(7)).collect())
            })
            .collect();
        let shifted =
            PotentialAnnotation::new(phi.actions().to_vec(), phi.d(), shifted_values).unwrap();
        assert_eq!(
            locally_efficient(&phi).unwrap(),
            locally_efficient(&shifted).unwrap()
        );
    }

    #[test]
    fn generator_is_deterministic_and_dummy_free_case_is_identical_interest() {
        let a = gen_potential_game(3, 2, 2, 0, 9, 42).unwrap();
        let b = gen_potential_game(3, 2, 2, 0, 9, 42).unwrap();
        assert_eq!(a, b);

        // lo = hi pins every dummy term, making payoffs a constant shift of phi
        let (game, phi) = gen_potential_game(2, 2, 1, 5, 5, 1).unwrap();
        for p in 0..4 {
            for agent in 0..2 {
                let u = game.payoff_by_index(agent, p).components()[0].clone();
                let f = phi.value_by_index(p).components()[0].clone();
                assert_eq!(u - f, rat_int(5));
            }
        }
    }

    #[test]
    fn loc_is_nonempty_on_finite_tables() {
        for seed in 0..10 {
            let (_, phi) = gen_potential_game(2, 2, 2, -2, 2, seed).unwrap();
            assert!(!locally_efficient(&phi).unwrap().is_empty());
        }
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let (game, _) = gen_potential_game(2, 2, 2, 0, 3, 9).unwrap();
        let wrong = PotentialAnnotation::new(vec![2, 2], 1, vec![pt(&[0]); 4]).unwrap();
        assert!(is_exact_potential(&game, &wrong).is_err());
    }
}
