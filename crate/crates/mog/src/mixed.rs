//! Mixed-strategy machinery: expected vector payoffs and the two
//! mixed-equilibrium definitions.
//!
//! The convex-hull definition asks every agent's expected payoff to be
//! efficient among *all* mixtures of its actions; deciding it reduces to an
//! exact-rational linear program per agent. The supported-action definition
//! asks only that every action played with positive probability be efficient
//! among the pure rows, which needs a finite efficient-set test. The second
//! contains the first, and unlike the first it contains every pure
//! Pareto-Nash equilibrium.

use crate::error::{MogError, Result};
use crate::games::Game;
use crate::rat::Rat;
use crate::vector::{eff_mask, Point};
use crate::PayoffVector;

mod simplex;

use num_traits::Zero;
pub(crate) use simplex::simplex_max;

/// One probability distribution per agent over that agent's actions.
/// Probabilities are exact rationals summing to one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedProfile {
    probs: Vec<Vec<Rat>>,
}

impl MixedProfile {
    pub fn new(probs: Vec<Vec<Rat>>) -> Result<Self> {
        for (agent, row) in probs.iter().enumerate() {
            if row.is_empty() {
                return Err(MogError::InvalidArgument(format!(
                    "agent {agent} has an empty distribution"
                )));
            }
            if row.iter().any(|p| p < &Rat::zero()) {
                return Err(MogError::InvalidArgument(format!(
                    "agent {agent} has a negative probability"
                )));
            }
            let total: Rat = row.iter().sum();
            if total != Rat::from_integer(1.into()) {
                return Err(MogError::InvalidArgument(format!(
                    "agent {agent}'s probabilities sum to {total}, not 1"
                )));
            }
        }
        Ok(MixedProfile { probs })
    }

    /// Degenerate profile playing `profile` with probability one.
    pub fn pure(profile: &[usize], actions: &[usize]) -> Result<Self> {
        if profile.len() != actions.len() {
            return Err(MogError::InvalidArgument("wrong profile length".into()));
        }
        let probs = profile
            .iter()
            .zip(actions)
            .map(|(&a, &alpha)| {
                if a >= alpha {
                    return Err(MogError::InvalidArgument("action out of range".into()));
                }
                let mut row = vec![Rat::zero(); alpha];
                row[a] = Rat::from_integer(1.into());
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MixedProfile { probs })
    }

    pub fn agent(&self, agent: usize) -> &[Rat] {
        &self.probs[agent]
    }

    pub fn n(&self) -> usize {
        self.probs.len()
    }

    fn check_against(&self, game: &Game) -> Result<()> {
        let actions = game.actions();
        if self.probs.len() != actions.len() {
            return Err(MogError::InvalidArgument(format!(
                "{} distributions for {} agents",
                self.probs.len(),
                actions.len()
            )));
        }
        for (agent, (row, &alpha)) in self.probs.iter().zip(&actions).enumerate() {
            if row.len() != alpha {
                return Err(MogError::InvalidArgument(format!(
                    "agent {agent} has {} probabilities for {alpha} actions",
                    row.len()
                )));
            }
        }
        Ok(())
    }
}

/// Expected pure-action payoffs of `agent` against the other agents'
/// mixtures: entry `b` is `u_agent(b, p_{-agent})`.
pub fn expected_action_row(
    game: &Game,
    profile: &MixedProfile,
    agent: usize,
) -> Result<Vec<PayoffVector>> {
    profile.check_against(game)?;
    let actions = game.actions();
    let n = actions.len();
    let d = game.d();
    let alpha = actions[agent];
    let mut row = vec![vec![Rat::zero(); d]; alpha];

    // walk the support of the adversary product distribution
    let others: Vec<usize> = (0..n).filter(|&j| j != agent).collect();
    let mut assignment = vec![0usize; others.len()];
    let mut full = vec![0usize; n];
    loop {
        let mut weight = Rat::from_integer(1.into());
        for (pos, &j) in others.iter().enumerate() {
            weight *= &profile.probs[j][assignment[pos]];
        }
        if !weight.is_zero() {
            for (pos, &j) in others.iter().enumerate() {
                full[j] = assignment[pos];
            }
            for (b, slot) in row.iter_mut().enumerate() {
                full[agent] = b;
                let payoff = game.payoff(&full, agent)?;
                for (acc, c) in slot.iter_mut().zip(payoff.iter()) {
                    *acc += c * &weight;
                }
            }
        }
        // odometer over the others' actions
        let mut advanced = false;
        for pos in (0..others.len()).rev() {
            assignment[pos] += 1;
            if assignment[pos] < actions[others[pos]] {
                advanced = true;
                break;
            }
            assignment[pos] = 0;
        }
        if !advanced {
            break;
        }
    }
    Ok(row.into_iter().map(Point::new).collect())
}

/// Expected vector payoff of `agent` under the full mixed profile.
pub fn expected_payoff(game: &Game, profile: &MixedProfile, agent: usize) -> Result<PayoffVector> {
    let row = expected_action_row(game, profile, agent)?;
    let d = game.d();
    let mut acc = vec![Rat::zero(); d];
    for (b, v) in row.iter().enumerate() {
        let p = &profile.probs[agent][b];
        if p.is_zero() {
            continue;
        }
        for (slot, c) in acc.iter_mut().zip(v.iter()) {
            *slot += c * p;
        }
    }
    Ok(Point::new(acc))
}

/// Does any mixture `q` over the rows Pareto-dominate `value`? Decided by an
/// exact simplex maximizing the total componentwise surplus: the optimum is
/// positive iff some feasible mixture improves at least one objective while
/// losing none.
fn mixture_dominates(rows: &[PayoffVector], value: &PayoffVector) -> Result<bool> {
    let alpha = rows.len();
    let d = value.dim();
    // variables: q_0..q_{alpha-1}, delta_0..delta_{d-1}, s_0..s_{d-1}
    let vars = alpha + 2 * d;
    let mut objective = vec![Rat::zero(); vars];
    for k in 0..d {
        objective[alpha + k] = Rat::from_integer(1.into());
    }
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 1);
    for k in 0..d {
        let mut rowv = vec![Rat::zero(); vars];
        for (j, r) in rows.iter().enumerate() {
            rowv[j] = r.components()[k].clone();
        }
        rowv[alpha + k] = -Rat::from_integer(1.into());
        rowv[alpha + d + k] = -Rat::from_integer(1.into());
        a.push(rowv);
        b.push(value.components()[k].clone());
    }
    let mut simplex_row = vec![Rat::zero(); vars];
    for slot in simplex_row.iter_mut().take(alpha) {
        *slot = Rat::from_integer(1.into());
    }
    a.push(simplex_row);
    b.push(Rat::from_integer(1.into()));

    let solved = simplex_max(&objective, &a, &b)?
        .ok_or_else(|| MogError::InvalidArgument("domination program infeasible".into()))?;
    Ok(solved.0 > Rat::zero())
}

/// Convex-hull mixed equilibrium test: no agent has a mixture of its actions
/// whose expected payoff Pareto-dominates its current expected payoff.
pub fn is_def4_equilibrium(game: &Game, profile: &MixedProfile) -> Result<bool> {
    profile.check_against(game)?;
    for agent in 0..game.n() {
        let rows = expected_action_row(game, profile, agent)?;
        let current = {
            let d = game.d();
            let mut acc = vec![Rat::zero(); d];
            for (b, v) in rows.iter().enumerate() {
                let p = &profile.probs[agent][b];
                if p.is_zero() {
                    continue;
                }
                for (slot, c) in acc.iter_mut().zip(v.iter()) {
                    *slot += c * p;
                }
            }
            Point::new(acc)
        };
        if mixture_dominates(&rows, &current)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Supported-action mixed equilibrium test: every action played with
/// positive probability must be Pareto-efficient among the agent's pure
/// rows against the others' mixtures.
pub fn is_def5_equilibrium(game: &Game, profile: &MixedProfile) -> Result<bool> {
    profile.check_against(game)?;
    for agent in 0..game.n() {
        let rows = expected_action_row(game, profile, agent)?;
        let mask = eff_mask(&rows);
        for (b, p) in profile.probs[agent].iter().enumerate() {
            if !p.is_zero() && !mask[b] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::NormalFormGame;
    use crate::rat::{rat_int, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(cs: &[i64]) -> PayoffVector {
        Point::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn fig3() -> Game {
        Game::Normal(
            NormalFormGame::new(vec![3], 2, vec![vec![pt(&[1, 4]), pt(&[2, 2]), pt(&[4, 1])]])
                .unwrap(),
        )
    }

    fn mix(rows: Vec<Vec<Rat>>) -> MixedProfile {
        MixedProfile::new(rows).unwrap()
    }

    #[test]
    fn distributions_must_be_proper() {
        assert!(MixedProfile::new(vec![vec![ratio(1, 2), ratio(1, 3)]]).is_err());
        assert!(MixedProfile::new(vec![vec![ratio(3, 2), ratio(-1, 2)]]).is_err());
        assert!(MixedProfile::new(vec![vec![ratio(1, 2), ratio(1, 2)]]).is_ok());
    }

    #[test]
    fn degenerate_profile_reduces_to_pure_payoff() {
        let game = fig3();
        let p = MixedProfile::pure(&[1], &game.actions()).unwrap();
        assert_eq!(expected_payoff(&game, &p, 0).unwrap(), pt(&[2, 2]));
    }

    #[test]
    fn fig3_half_half_expectation() {
        let game = fig3();
        let p = mix(vec![vec![ratio(1, 2), Rat::zero(), ratio(1, 2)]]);
        assert_eq!(
            expected_payoff(&game, &p, 0).unwrap(),
            Point::new(vec![ratio(5, 2), ratio(5, 2)])
        );
    }

    #[test]
    fn fig3_uniform_expectation() {
        let game = fig3();
        let p = mix(vec![vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]]);
        assert_eq!(
            expected_payoff(&game, &p, 0).unwrap(),
            Point::new(vec![ratio(7, 3), ratio(7, 3)])
        );
    }

    #[test]
    fn fig3_def4_rejects_the_balanced_outcome() {
        let game = fig3();
        let actions = game.actions();
        // (2,2) is dominated by the half-half mixture of (1,4) and (4,1)
        let balanced = MixedProfile::pure(&[1], &actions).unwrap();
        assert!(!is_def4_equilibrium(&game, &balanced).unwrap());
        // the extreme outcomes sit on the hull
        let extreme = MixedProfile::pure(&[0], &actions).unwrap();
        assert!(is_def4_equilibrium(&game, &extreme).unwrap());
        // and so does the half-half mixture itself
        let hull_point = mix(vec![vec![ratio(1, 2), Rat::zero(), ratio(1, 2)]]);
        assert!(is_def4_equilibrium(&game, &hull_point).unwrap());
    }

    #[test]
    fn fig3_def5_accepts_every_efficient_support() {
        let game = fig3();
        let actions = game.actions();
        let balanced = MixedProfile::pure(&[1], &actions).unwrap();
        assert!(is_def5_equilibrium(&game, &balanced).unwrap());
        let uniform = mix(vec![vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]]);
        assert!(is_def5_equilibrium(&game, &uniform).unwrap());
    }

    #[test]
    fn dominated_action_in_the_support_fails_def5() {
        let game = Game::Normal(
            NormalFormGame::new(
                vec![4],
                2,
                vec![vec![pt(&[1, 4]), pt(&[2, 2]), pt(&[4, 1]), pt(&[0, 0])]],
            )
            .unwrap(),
        );
        let with_junk = mix(vec![vec![
            ratio(1, 2),
            Rat::zero(),
            ratio(1, 4),
            ratio(1, 4),
        ]]);
        assert!(!is_def5_equilibrium(&game, &with_junk).unwrap());
    }

    /// Grid search over mixtures with denominator 64; reference semantics
    /// for the domination program.
    fn grid_dominates(rows: &[PayoffVector], value: &PayoffVector) -> bool {
        const STEPS: i64 = 64;
        let alpha = rows.len();
        let mut counts = vec![0i64; alpha];
        counts[alpha - 1] = STEPS;
        loop {
            let q: Vec<Rat> = counts.iter().map(|&c| ratio(c, STEPS)).collect();
            let mut mixed = vec![Rat::zero(); value.dim()];
            for (c, row) in q.iter().zip(rows) {
                for (slot, v) in mixed.iter_mut().zip(row.iter()) {
                    *slot += v * c;
                }
            }
            if Point::new(mixed).dominates(value).unwrap() {
                return true;
            }
            // next composition of STEPS into alpha parts
            let mut i = alpha - 1;
            loop {
                if i == 0 {
                    return false;
                }
                if counts[i] > 0 {
                    let rest = counts[i] - 1;
                    counts[i] = 0;
                    counts[i - 1] += 1;
                    counts[alpha - 1] += rest;
                    break;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn lp_agrees_with_grid_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let alpha = rng.gen_range(2..=4usize);
            let rows: Vec<PayoffVector> = (0..alpha)
                .map(|_| Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=8))).collect()))
                .collect();
            // value: either one of the rows or a coarse mixture of two rows
            let value = if rng.gen_bool(0.5) {
                rows[rng.gen_range(0..alpha)].clone()
            } else {
                let i = rng.gen_range(0..alpha);
                let j = rng.gen_range(0..alpha);
                let w = ratio(rng.gen_range(0..=4), 4);
                let one = Rat::from_integer(1.into());
                Point::new(
                    rows[i]
                        .iter()
                        .zip(rows[j].iter())
                        .map(|(a, b)| a * &w + b * (&one - &w))
                        .collect(),
                )
            };
            let lp = mixture_dominates(&rows, &value).unwrap();
            let grid = grid_dominates(&rows, &value);
            // on these coarse instances a dominating mixture, when one
            // exists, always has a denominator-64 witness, so the grid and
            // the program must agree in both directions
            assert_eq!(lp, grid, "rows={rows:?} value={value:?}");
        }
    }

    #[test]
    fn pure_pareto_nash_profiles_satisfy_def5() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3usize);
            let alpha = rng.gen_range(1..=3usize);
            let actions = vec![alpha; n];
            let total = crate::games::num_profiles(&actions).unwrap();
            let payoffs: Vec<Vec<PayoffVector>> = (0..n)
                .map(|_| {
                    (0..total)
                        .map(|_| {
                            Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=6))).collect())
                        })
                        .collect()
                })
                .collect();
            let g = NormalFormGame::new(actions.clone(), 2, payoffs).unwrap();
            let result = crate::equilibria::pareto_nash_normal(&g).unwrap();
            let game = Game::Normal(g);
            for profile in result.pn.as_profiles().unwrap() {
                let lifted = MixedProfile::pure(profile, &actions).unwrap();
                assert!(is_def5_equilibrium(&game, &lifted).unwrap());
            }
        }
    }

    #[test]
    fn def4_implies_def5_on_random_profiles() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut hits = 0;
        for _ in 0..200 {
            let n = rng.gen_range(1..=2usize);
            let alpha = rng.gen_range(2..=3usize);
            let actions = vec![alpha; n];
            let total = crate::games::num_profiles(&actions).unwrap();
            let payoffs: Vec<Vec<PayoffVector>> = (0..n)
                .map(|_| {
                    (0..total)
                        .map(|_| {
                            Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=5))).collect())
                        })
                        .collect()
                })
                .collect();
            let game = Game::Normal(NormalFormGame::new(actions.clone(), 2, payoffs).unwrap());
            let probs: Vec<Vec<Rat>> = actions
                .iter()
                .map(|&a| {
                    let mut weights: Vec<i64> = (0..a).map(|_| rng.gen_range(0..=3)).collect();
                    if weights.iter().all(|&w| w == 0) {
                        weights[0] = 1;
                    }
                    let sum: i64 = weights.iter().sum();
                    weights.iter().map(|&w| ratio(w, sum)).collect()
                })
                .collect();
            let profile = mix(probs);
            if is_def4_equilibrium(&game, &profile).unwrap() {
                hits += 1;
                assert!(is_def5_equilibrium(&game, &profile).unwrap());
            }
        }
        assert!(hits > 0, "vacuous run: no def-4 equilibria sampled");
    }

    #[test]
    fn expected_payoff_is_affine_in_one_agents_probabilities() {
        // fix agent 1's mixture; agent 0's expectation interpolates linearly
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let actions = vec![2usize, 2];
        let total = crate::games::num_profiles(&actions).unwrap();
        let payoffs: Vec<Vec<PayoffVector>> = (0..2)
            .map(|_| {
                (0..total)
                    .map(|_| Point::new((0..2).map(|_| rat_int(rng.gen_range(0..=9))).collect()))
                    .collect()
            })
            .collect();
        let game = Game::Normal(NormalFormGame::new(actions, 2, payoffs).unwrap());
        let fixed = vec![ratio(1, 3), ratio(2, 3)];
        let ends = [
            mix(vec![vec![rat_int(1), Rat::zero()], fixed.clone()]),
            mix(vec![vec![Rat::zero(), rat_int(1)], fixed.clone()]),
        ];
        let mid = mix(vec![vec![ratio(1, 2), ratio(1, 2)], fixed]);
        let a = expected_payoff(&game, &ends[0], 0).unwrap();
        let b = expected_payoff(&game, &ends[1], 0).unwrap();
        let m = expected_payoff(&game, &mid, 0).unwrap();
        let half = ratio(1, 2);
        let blended = Point::new(
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| x * &half + y * &half)
                .collect(),
        );
        assert_eq!(m, blended);
    }

    #[test]
    fn multi_agent_rows_walk_only_the_support() {
        // a two-agent game where agent 1 plays a degenerate mixture
        let g = NormalFormGame::new(
            vec![2, 2],
            1,
            vec![
                vec![pt(&[1]), pt(&[2]), pt(&[3]), pt(&[4])],
                vec![pt(&[0]), pt(&[0]), pt(&[0]), pt(&[0])],
            ],
        )
        .unwrap();
        let game = Game::Normal(g);
        let p = mix(vec![
            vec![ratio(1, 2), ratio(1, 2)],
            vec![Rat::zero(), rat_int(1)],
        ]);
        let rows = expected_action_row(&game, &p, 0).unwrap();
        assert_eq!(rows, vec![pt(&[2]), pt(&[4])]);
    }
}
