//! Pure-strategy Pareto-Nash enumeration and outcome-set extraction.
//!
//! A profile is a Pareto-Nash equilibrium when every agent's action gives a
//! payoff vector that is Pareto-efficient among that agent's unilateral
//! alternatives. The solvers return, along with the equilibria, the
//! equilibrium outcome set, its efficient and worst subsets, and the
//! utilitarian frontier over all profiles.

use rayon::prelude::*;

use crate::error::{MogError, Result};
use crate::games::{
    configurations, next_profile, num_profiles, profile_from_index, profile_index, Game,
    GraphicalGame, NormalFormGame, SymmetricGame,
};
use crate::rat::Rat;
use crate::vector::{eff_mask, Point};
use crate::{PayoffVector, VectorSet};

/// Equilibria are profiles, except for symmetric games where a set of
/// configurations is the (more compact) canonical output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equilibria {
    Profiles(Vec<Vec<usize>>),
    Configurations(Vec<Vec<usize>>),
}

impl Equilibria {
    pub fn len(&self) -> usize {
        match self {
            Equilibria::Profiles(v) | Equilibria::Configurations(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_profiles(&self) -> Option<&[Vec<usize>]> {
        match self {
            Equilibria::Profiles(v) => Some(v),
            Equilibria::Configurations(_) => None,
        }
    }

    pub fn as_configurations(&self) -> Option<&[Vec<usize>]> {
        match self {
            Equilibria::Configurations(v) => Some(v),
            Equilibria::Profiles(_) => None,
        }
    }
}

/// Everything a solver reports: the equilibria, the equilibrium-outcome set
/// `E`, its efficient and worst subsets, and the frontier `F` of efficient
/// utilitarian outcomes over the whole profile space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveResult {
    pub pn: Equilibria,
    pub outcomes_e: VectorSet,
    pub eff_e: VectorSet,
    pub wst_e: VectorSet,
    pub frontier_f: VectorSet,
}

impl SolveResult {
    fn from_outcomes(
        pn: Equilibria,
        e_points: Vec<PayoffVector>,
        all_points: Vec<PayoffVector>,
    ) -> Result<Self> {
        let outcomes_e = VectorSet::new(e_points)?;
        let eff_e = outcomes_e.eff();
        let wst_e = outcomes_e.wst();
        let frontier_f = VectorSet::new(all_points)?.eff();
        Ok(SolveResult {
            pn,
            outcomes_e,
            eff_e,
            wst_e,
            frontier_f,
        })
    }
}

/// The actions of `agent` whose payoff vectors are Pareto-efficient against
/// the adversary assignment carried by `profile` (the agent's own coordinate
/// is ignored). Never empty.
pub fn efficient_responses(game: &Game, agent: usize, profile: &[usize]) -> Result<Vec<usize>> {
    let actions = game.actions();
    if agent >= actions.len() {
        return Err(MogError::InvalidArgument(format!(
            "agent {agent} out of range"
        )));
    }
    let mut varied = profile.to_vec();
    let mut row = Vec::with_capacity(actions[agent]);
    for a in 0..actions[agent] {
        varied[agent] = a;
        row.push(game.payoff(&varied, agent)?.clone());
    }
    let mask = eff_mask(&row);
    Ok((0..actions[agent]).filter(|&a| mask[a]).collect())
}

fn strides(actions: &[usize]) -> Vec<usize> {
    let n = actions.len();
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * actions[i + 1];
    }
    strides
}

/// Per-agent efficient-action marks, one entry per full profile index:
/// `marked[i][p]` answers "is `p`'s action of agent `i` an efficient
/// response to the rest of `p`".
fn mark_efficient_actions(
    total: usize,
    actions: &[usize],
    strides: &[usize],
    payoff_row: impl Fn(usize, usize, usize) -> Vec<PayoffVector> + Sync,
) -> Vec<Vec<bool>> {
    let n = actions.len();
    (0..n)
        .into_par_iter()
        .map(|agent| {
            let stride = strides[agent];
            let alpha = actions[agent];
            let mut marked = vec![false; total];
            for base in 0..total {
                if (base / stride) % alpha != 0 {
                    continue;
                }
                let row = payoff_row(agent, base, stride);
                let mask = eff_mask(&row);
                for (a, &m) in mask.iter().enumerate() {
                    marked[base + a * stride] = m;
                }
            }
            marked
        })
        .collect()
}

/// Exhaustive Pareto-Nash enumeration of a normal-form game.
pub fn pareto_nash_normal(game: &NormalFormGame) -> Result<SolveResult> {
    let actions = game.actions().to_vec();
    let total = num_profiles(&actions)?;
    let strides = strides(&actions);
    let marked = mark_efficient_actions(total, &actions, &strides, |agent, base, stride| {
        (0..actions[agent])
            .map(|a| game.payoff_by_index(agent, base + a * stride).clone())
            .collect()
    });

    let pn_indices: Vec<usize> = (0..total)
        .into_par_iter()
        .filter(|&p| marked.iter().all(|m| m[p]))
        .collect();

    let sum_at = |p: usize| -> PayoffVector {
        let mut acc = vec![Rat::from_integer(0.into()); game.d()];
        for agent in 0..game.n() {
            for (slot, c) in acc.iter_mut().zip(game.payoff_by_index(agent, p).iter()) {
                *slot += c;
            }
        }
        Point::new(acc)
    };

    let e_points: Vec<PayoffVector> = pn_indices.par_iter().map(|&p| sum_at(p)).collect();
    let all_points: Vec<PayoffVector> = (0..total).into_par_iter().map(sum_at).collect();
    let pn = Equilibria::Profiles(
        pn_indices
            .iter()
            .map(|&p| profile_from_index(p, &actions))
            .collect(),
    );
    SolveResult::from_outcomes(pn, e_points, all_points)
}

/// Pareto-Nash enumeration of a symmetric game, reported as configurations.
/// A configuration is an equilibrium when no agent playing some action can
/// move to another action whose payoff under the moved configuration
/// Pareto-dominates what it currently gets.
pub fn pareto_nash_symmetric(game: &SymmetricGame) -> Result<SolveResult> {
    let configs = configurations(game.n(), game.alpha());
    let is_pn = |config: &Vec<usize>| -> Result<bool> {
        for a in 0..game.alpha() {
            if config[a] == 0 {
                continue;
            }
            let current = game.payoff(a, config)?;
            for b in 0..game.alpha() {
                if b == a {
                    continue;
                }
                let mut moved = config.clone();
                moved[a] -= 1;
                moved[b] += 1;
                if game.payoff(b, &moved)?.dominates(current)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };

    // utilitarian outcome of a configuration: c(a) copies of u*(a, c)
    let util = |config: &Vec<usize>| -> Result<PayoffVector> {
        let mut acc = vec![Rat::from_integer(0.into()); game.d()];
        for a in 0..game.alpha() {
            if config[a] == 0 {
                continue;
            }
            let count = Rat::from_integer(config[a].into());
            for (slot, c) in acc.iter_mut().zip(game.payoff(a, config)?.iter()) {
                *slot += c * &count;
            }
        }
        Ok(Point::new(acc))
    };

    let mut pn_configs = Vec::new();
    let mut e_points = Vec::new();
    let mut all_points = Vec::with_capacity(configs.len());
    for config in &configs {
        let outcome = util(config)?;
        if is_pn(config)? {
            pn_configs.push(config.clone());
            e_points.push(outcome.clone());
        }
        all_points.push(outcome);
    }
    SolveResult::from_outcomes(Equilibria::Configurations(pn_configs), e_points, all_points)
}

/// Exhaustive Pareto-Nash enumeration of a graphical game. Efficient-action
/// rows are memoized per (agent, local adversary assignment), so full payoff
/// tables are never materialized.
pub fn pareto_nash_graphical(game: &GraphicalGame) -> Result<SolveResult> {
    let n = game.n();
    let actions = game.actions().to_vec();
    let total = num_profiles(&actions)?;

    struct AgentMarks {
        others: Vec<usize>,
        others_actions: Vec<usize>,
        /// `marked[others_index * alpha + action]`
        marked: Vec<bool>,
    }

    let marks: Vec<AgentMarks> = (0..n)
        .into_par_iter()
        .map(|agent| -> Result<AgentMarks> {
            let scope = &game.scopes()[agent];
            let pos = scope.iter().position(|&j| j == agent).expect("validated");
            let others: Vec<usize> = scope.iter().copied().filter(|&j| j != agent).collect();
            let others_actions: Vec<usize> = others.iter().map(|&j| actions[j]).collect();
            let others_total = num_profiles(&others_actions)?;
            let alpha = actions[agent];
            let local_actions = game.local_actions(agent);
            let mut marked = vec![false; others_total * alpha];
            for others_idx in 0..others_total {
                let others_profile = profile_from_index(others_idx, &others_actions);
                let mut local = others_profile.clone();
                local.insert(pos, 0);
                let mut row = Vec::with_capacity(alpha);
                for a in 0..alpha {
                    local[pos] = a;
                    let idx = profile_index(&local, &local_actions)?;
                    row.push(game.tables()[agent][idx].clone());
                }
                let mask = eff_mask(&row);
                for (a, &m) in mask.iter().enumerate() {
                    marked[others_idx * alpha + a] = m;
                }
            }
            Ok(AgentMarks {
                others,
                others_actions,
                marked,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let is_pn = |profile: &[usize]| -> bool {
        marks.iter().enumerate().all(|(agent, m)| {
            let others_profile: Vec<usize> = m.others.iter().map(|&j| profile[j]).collect();
            let others_idx =
                profile_index(&others_profile, &m.others_actions).expect("validated profile");
            m.marked[others_idx * actions[agent] + profile[agent]]
        })
    };

    let wrapped = Game::Graphical(game.clone());
    let rows: Vec<(bool, PayoffVector)> = (0..total)
        .into_par_iter()
        .map(|p| {
            let profile = profile_from_index(p, &actions);
            let outcome = wrapped.utilitarian(&profile).expect("validated profile");
            (is_pn(&profile), outcome)
        })
        .collect();

    let mut pn_profiles = Vec::new();
    let mut e_points = Vec::new();
    let mut all_points = Vec::with_capacity(total);
    for (p, (good, outcome)) in rows.into_iter().enumerate() {
        if good {
            pn_profiles.push(profile_from_index(p, &actions));
            e_points.push(outcome.clone());
        }
        all_points.push(outcome);
    }
    SolveResult::from_outcomes(Equilibria::Profiles(pn_profiles), e_points, all_points)
}

/// Dispatches on the representation.
pub fn solve(game: &Game) -> Result<SolveResult> {
    match game {
        Game::Normal(g) => pareto_nash_normal(g),
        Game::Symmetric(g) => pareto_nash_symmetric(g),
        Game::Graphical(g) => pareto_nash_graphical(g),
    }
}

/// Pure Nash equilibria of the single-objective game obtained by scalarizing
/// each agent's payoff with its (strictly positive) weight vector. Positive
/// weights are Pareto-monotonic, so the result is always a subset of the
/// Pareto-Nash equilibria.
pub fn scalarized_nash(game: &Game, weights: &[PayoffVector]) -> Result<Vec<Vec<usize>>> {
    let n = game.n();
    let d = game.d();
    if weights.len() != n {
        return Err(MogError::InvalidArgument(format!(
            "{} weight vectors for {n} agents",
            weights.len()
        )));
    }
    for w in weights {
        if w.dim() != d {
            return Err(MogError::DimensionMismatch {
                left: d,
                right: w.dim(),
            });
        }
        if w.iter().any(|c| *c <= Rat::from_integer(0.into())) {
            return Err(MogError::InvalidArgument(
                "scalarization weights must be strictly positive".into(),
            ));
        }
    }

    let actions = game.actions();
    let total = num_profiles(&actions)?;
    let strides = strides(&actions);
    let scalar = |agent: usize, payoff: &PayoffVector| -> Rat {
        weights[agent]
            .iter()
            .zip(payoff.iter())
            .map(|(w, u)| w * u)
            .sum()
    };

    let mut marked: Vec<Vec<bool>> = vec![vec![false; total]; n];
    let mut profile = vec![0usize; n];
    let mut base = 0usize;
    loop {
        for agent in 0..n {
            if profile[agent] != 0 {
                continue;
            }
            let stride = strides[agent];
            let mut varied = profile.clone();
            let mut values = Vec::with_capacity(actions[agent]);
            for a in 0..actions[agent] {
                varied[agent] = a;
                values.push(scalar(agent, game.payoff(&varied, agent)?));
            }
            let best = values.iter().max().expect("nonempty action set").clone();
            for (a, v) in values.iter().enumerate() {
                marked[agent][base + a * stride] = *v == best;
            }
        }
        if !next_profile(&mut profile, &actions) {
            break;
        }
        base += 1;
    }

    Ok((0..total)
        .filter(|&p| marked.iter().all(|m| m[p]))
        .map(|p| profile_from_index(p, &actions))
        .collect())
}
