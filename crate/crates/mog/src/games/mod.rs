//! Game representations and their payoff queries.
//!
//! Four concrete forms share one profile-indexing convention (agent 0 most
//! significant, row-major): full normal form, symmetric games keyed by
//! configurations, graphical games with per-agent scopes, and a potential
//! annotation that sidecars a normal form. [`Game`] wraps the three playable
//! forms behind a uniform payoff query.

pub mod json;

use std::collections::BTreeMap;

use crate::error::{MogError, Result};
use crate::rat::Rat;
use crate::vector::Point;
use crate::PayoffVector;

/// Mixed-radix index of an action profile, agent 0 most significant:
/// `index = sum_i profile[i] * prod_{j>i} actions[j]`.
pub fn profile_index(profile: &[usize], actions: &[usize]) -> Result<usize> {
    if profile.len() != actions.len() {
        return Err(MogError::InvalidArgument(format!(
            "profile has {} entries for {} agents",
            profile.len(),
            actions.len()
        )));
    }
    let mut index = 0usize;
    for (i, (&a, &alpha)) in profile.iter().zip(actions).enumerate() {
        if a >= alpha {
            return Err(MogError::InvalidArgument(format!(
                "action {a} out of range for agent {i} with {alpha} actions"
            )));
        }
        index = index * alpha + a;
    }
    Ok(index)
}

/// Inverse of [`profile_index`].
pub fn profile_from_index(mut index: usize, actions: &[usize]) -> Vec<usize> {
    let mut profile = vec![0; actions.len()];
    for (i, &alpha) in actions.iter().enumerate().rev() {
        profile[i] = index % alpha;
        index /= alpha;
    }
    profile
}

/// Advances `profile` to the next index in row-major order; returns `false`
/// after the last profile. Start from the all-zeros profile.
pub fn next_profile(profile: &mut [usize], actions: &[usize]) -> bool {
    for i in (0..profile.len()).rev() {
        profile[i] += 1;
        if profile[i] < actions[i] {
            return true;
        }
        profile[i] = 0;
    }
    false
}

/// Total number of profiles, with overflow detection.
pub fn num_profiles(actions: &[usize]) -> Result<usize> {
    let mut total = 1usize;
    for &alpha in actions {
        if alpha == 0 {
            return Err(MogError::MalformedGame("agent with zero actions".into()));
        }
        total = total
            .checked_mul(alpha)
            .ok_or_else(|| MogError::InvalidArgument("profile space overflows usize".into()))?;
    }
    Ok(total)
}

/// All length-`alpha` natural vectors summing to `n`, in ascending
/// lexicographic order. Their number is `C(n+alpha-1, alpha-1)`.
pub fn configurations(n: usize, alpha: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; alpha];
    fn rec(current: &mut Vec<usize>, pos: usize, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            current[pos] = v;
            rec(current, pos + 1, remaining - v, out);
        }
    }
    if alpha == 0 {
        return out;
    }
    rec(&mut current, 0, n, &mut out);
    out
}

/// `C(n+alpha-1, alpha-1)`, the number of configurations.
pub fn configuration_count(n: u64, alpha: u64) -> u64 {
    if alpha == 0 {
        return 0;
    }
    binomial(n + alpha - 1, alpha - 1)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Counts how many agents play each action in `profile`.
pub fn config_of_profile(profile: &[usize], alpha: usize) -> Vec<usize> {
    let mut config = vec![0usize; alpha];
    for &a in profile {
        config[a] += 1;
    }
    config
}

/// Full payoff tables: one vector per (agent, profile).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalFormGame {
    actions: Vec<usize>,
    d: usize,
    /// `payoffs[agent][profile_index]`
    payoffs: Vec<Vec<PayoffVector>>,
}

impl NormalFormGame {
    pub fn new(actions: Vec<usize>, d: usize, payoffs: Vec<Vec<PayoffVector>>) -> Result<Self> {
        if actions.is_empty() || d == 0 {
            return Err(MogError::MalformedGame(
                "need at least one agent and one objective".into(),
            ));
        }
        let total = num_profiles(&actions)?;
        if payoffs.len() != actions.len() {
            return Err(MogError::MalformedGame(format!(
                "{} payoff tables for {} agents",
                payoffs.len(),
                actions.len()
            )));
        }
        for (i, table) in payoffs.iter().enumerate() {
            if table.len() != total {
                return Err(MogError::MalformedGame(format!(
                    "agent {i} has {} payoff entries, expected {total}",
                    table.len()
                )));
            }
            if let Some(bad) = table.iter().find(|v| v.dim() != d) {
                return Err(MogError::DimensionMismatch {
                    left: d,
                    right: bad.dim(),
                });
            }
        }
        Ok(NormalFormGame { actions, d, payoffs })
    }

    pub fn n(&self) -> usize {
        self.actions.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn num_profiles(&self) -> usize {
        num_profiles(&self.actions).expect("validated at construction")
    }

    pub fn payoff_by_index(&self, agent: usize, profile_index: usize) -> &PayoffVector {
        &self.payoffs[agent][profile_index]
    }

    pub fn payoff_tables(&self) -> &[Vec<PayoffVector>] {
        &self.payoffs
    }
}

/// Symmetric game: payoffs depend on the chosen action and the configuration
/// (how many agents play each action), not on identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricGame {
    n: usize,
    alpha: usize,
    d: usize,
    /// one entry per (action, configuration) with `config[action] >= 1`
    table: BTreeMap<(usize, Vec<usize>), PayoffVector>,
}

impl SymmetricGame {
    pub fn new(
        n: usize,
        alpha: usize,
        d: usize,
        entries: Vec<(usize, Vec<usize>, PayoffVector)>,
    ) -> Result<Self> {
        if n == 0 || alpha == 0 || d == 0 {
            return Err(MogError::MalformedGame(
                "need n, alpha, d all at least 1".into(),
            ));
        }
        let mut table = BTreeMap::new();
        for (action, config, payoff) in entries {
            if action >= alpha {
                return Err(MogError::MalformedGame(format!(
                    "action {action} out of range (alpha = {alpha})"
                )));
            }
            if config.len() != alpha || config.iter().sum::<usize>() != n {
                return Err(MogError::MalformedGame(format!(
                    "configuration {config:?} is not a length-{alpha} partition of {n}"
                )));
            }
            if config[action] == 0 {
                return Err(MogError::MalformedGame(format!(
                    "entry for action {action} under configuration {config:?} where nobody plays it"
                )));
            }
            if payoff.dim() != d {
                return Err(MogError::DimensionMismatch {
                    left: d,
                    right: payoff.dim(),
                });
            }
            if table.insert((action, config.clone()), payoff).is_some() {
                return Err(MogError::MalformedGame(format!(
                    "duplicate entry for action {action}, configuration {config:?}"
                )));
            }
        }
        // completeness: every playable (action, configuration) pair
        for config in configurations(n, alpha) {
            for action in 0..alpha {
                if config[action] >= 1 && !table.contains_key(&(action, config.clone())) {
                    return Err(MogError::MalformedGame(format!(
                        "missing entry for action {action}, configuration {config:?}"
                    )));
                }
            }
        }
        Ok(SymmetricGame { n, alpha, d, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Vec<usize>), &PayoffVector)> {
        self.table.iter()
    }

    /// Payoff for deciding `action` when `config` occurs (`config[action]`
    /// counts the decider too).
    pub fn payoff(&self, action: usize, config: &[usize]) -> Result<&PayoffVector> {
        self.table
            .get(&(action, config.to_vec()))
            .ok_or_else(|| {
                MogError::MalformedGame(format!(
                    "no table entry for action {action}, configuration {config:?}"
                ))
            })
    }

    /// Expands to the equivalent normal form over `n` identical action sets.
    pub fn to_normal_form(&self) -> Result<NormalFormGame> {
        let actions = vec![self.alpha; self.n];
        let total = num_profiles(&actions)?;
        let mut payoffs = vec![Vec::with_capacity(total); self.n];
        let mut profile = vec![0usize; self.n];
        loop {
            let config = config_of_profile(&profile, self.alpha);
            for (i, table) in payoffs.iter_mut().enumerate() {
                table.push(self.payoff(profile[i], &config)?.clone());
            }
            if !next_profile(&mut profile, &actions) {
                break;
            }
        }
        NormalFormGame::new(actions, self.d, payoffs)
    }
}

/// Graphical game: each agent's payoff reads only the actions of the agents
/// in its scope. Scopes always include the agent itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphicalGame {
    actions: Vec<usize>,
    d: usize,
    /// sorted agent lists, `i` in `scopes[i]`
    scopes: Vec<Vec<usize>>,
    /// `tables[agent][local_profile_index]` over the sorted scope
    tables: Vec<Vec<PayoffVector>>,
}

impl GraphicalGame {
    pub fn new(
        actions: Vec<usize>,
        d: usize,
        scopes: Vec<Vec<usize>>,
        tables: Vec<Vec<PayoffVector>>,
    ) -> Result<Self> {
        let n = actions.len();
        if n == 0 || d == 0 {
            return Err(MogError::MalformedGame(
                "need at least one agent and one objective".into(),
            ));
        }
        if scopes.len() != n || tables.len() != n {
            return Err(MogError::MalformedGame(
                "scopes and tables must have one entry per agent".into(),
            ));
        }
        for (i, scope) in scopes.iter().enumerate() {
            if !scope.windows(2).all(|w| w[0] < w[1]) {
                return Err(MogError::MalformedGame(format!(
                    "scope of agent {i} must be sorted and duplicate-free"
                )));
            }
            if scope.iter().any(|&j| j >= n) {
                return Err(MogError::MalformedGame(format!(
                    "scope of agent {i} names an unknown agent"
                )));
            }
            if !scope.contains(&i) {
                return Err(MogError::MalformedGame(format!(
                    "scope of agent {i} must contain the agent itself"
                )));
            }
            let local: Vec<usize> = scope.iter().map(|&j| actions[j]).collect();
            let expected = num_profiles(&local)?;
            if tables[i].len() != expected {
                return Err(MogError::MalformedGame(format!(
                    "agent {i} has {} local entries, expected {expected}",
                    tables[i].len()
                )));
            }
            if let Some(bad) = tables[i].iter().find(|v| v.dim() != d) {
                return Err(MogError::DimensionMismatch {
                    left: d,
                    right: bad.dim(),
                });
            }
        }
        Ok(GraphicalGame {
            actions,
            d,
            scopes,
            tables,
        })
    }

    pub fn n(&self) -> usize {
        self.actions.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn scopes(&self) -> &[Vec<usize>] {
        &self.scopes
    }

    pub fn tables(&self) -> &[Vec<PayoffVector>] {
        &self.tables
    }

    /// Action counts over agent `i`'s scope, in scope order.
    pub fn local_actions(&self, agent: usize) -> Vec<usize> {
        self.scopes[agent].iter().map(|&j| self.actions[j]).collect()
    }

    pub fn payoff(&self, profile: &[usize], agent: usize) -> Result<&PayoffVector> {
        let local: Vec<usize> = self.scopes[agent].iter().map(|&j| profile[j]).collect();
        let idx = profile_index(&local, &self.local_actions(agent))?;
        self.tables[agent]
            .get(idx)
            .ok_or_else(|| MogError::MalformedGame(format!("missing local entry for agent {agent}")))
    }

    /// Expands to the equivalent normal form by materializing full tables.
    pub fn to_normal_form(&self) -> Result<NormalFormGame> {
        let total = num_profiles(&self.actions)?;
        let mut payoffs = vec![Vec::with_capacity(total); self.n()];
        let mut profile = vec![0usize; self.n()];
        loop {
            for (i, table) in payoffs.iter_mut().enumerate() {
                table.push(self.payoff(&profile, i)?.clone());
            }
            if !next_profile(&mut profile, &self.actions) {
                break;
            }
        }
        NormalFormGame::new(self.actions.clone(), self.d, payoffs)
    }
}

/// A vector-valued potential sidecar for a normal-form game with the given
/// action counts; indexed exactly like the game's payoff tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PotentialAnnotation {
    actions: Vec<usize>,
    d: usize,
    phi: Vec<PayoffVector>,
}

impl PotentialAnnotation {
    pub fn new(actions: Vec<usize>, d: usize, phi: Vec<PayoffVector>) -> Result<Self> {
        let total = num_profiles(&actions)?;
        if phi.len() != total {
            return Err(MogError::MalformedGame(format!(
                "potential has {} entries, expected {total}",
                phi.len()
            )));
        }
        if let Some(bad) = phi.iter().find(|v| v.dim() != d) {
            return Err(MogError::DimensionMismatch {
                left: d,
                right: bad.dim(),
            });
        }
        Ok(PotentialAnnotation { actions, d, phi })
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn value_by_index(&self, profile_index: usize) -> &PayoffVector {
        &self.phi[profile_index]
    }

    pub fn values(&self) -> &[PayoffVector] {
        &self.phi
    }
}

/// Any playable representation behind a uniform payoff query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Game {
    Normal(NormalFormGame),
    Symmetric(SymmetricGame),
    Graphical(GraphicalGame),
}

impl Game {
    pub fn n(&self) -> usize {
        match self {
            Game::Normal(g) => g.n(),
            Game::Symmetric(g) => g.n(),
            Game::Graphical(g) => g.n(),
        }
    }

    pub fn d(&self) -> usize {
        match self {
            Game::Normal(g) => g.d(),
            Game::Symmetric(g) => g.d(),
            Game::Graphical(g) => g.d(),
        }
    }

    pub fn actions(&self) -> Vec<usize> {
        match self {
            Game::Normal(g) => g.actions().to_vec(),
            Game::Symmetric(g) => vec![g.alpha(); g.n()],
            Game::Graphical(g) => g.actions().to_vec(),
        }
    }

    pub fn num_profiles(&self) -> Result<usize> {
        num_profiles(&self.actions())
    }

    /// Payoff of `agent` at a pure action profile.
    pub fn payoff(&self, profile: &[usize], agent: usize) -> Result<&PayoffVector> {
        if agent >= self.n() {
            return Err(MogError::InvalidArgument(format!(
                "agent {agent} out of range"
            )));
        }
        match self {
            Game::Normal(g) => {
                let idx = profile_index(profile, g.actions())?;
                Ok(g.payoff_by_index(agent, idx))
            }
            Game::Symmetric(g) => {
                if profile.len() != g.n() {
                    return Err(MogError::InvalidArgument("wrong profile length".into()));
                }
                if profile.iter().any(|&a| a >= g.alpha()) {
                    return Err(MogError::InvalidArgument("action out of range".into()));
                }
                let config = config_of_profile(profile, g.alpha());
                g.payoff(profile[agent], &config)
            }
            Game::Graphical(g) => {
                if profile.len() != g.n() {
                    return Err(MogError::InvalidArgument("wrong profile length".into()));
                }
                g.payoff(profile, agent)
            }
        }
    }

    /// Utilitarian social welfare: the componentwise sum of all agents'
    /// payoff vectors at `profile`.
    pub fn utilitarian(&self, profile: &[usize]) -> Result<PayoffVector> {
        let d = self.d();
        let mut acc = vec![Rat::from_integer(0.into()); d];
        for agent in 0..self.n() {
            let p = self.payoff(profile, agent)?;
            for (slot, c) in acc.iter_mut().zip(p.iter()) {
                *slot += c;
            }
        }
        Ok(Point::new(acc))
    }

    /// Scalar count of the representation: `n * prod(alpha_j) * d` for
    /// normal forms, `alpha * C(n+alpha-1, alpha-1) * d` for symmetric games
    /// and `sum_i d * prod_{j in scope(i)} alpha_j` for graphical games.
    pub fn representation_length(&self) -> u64 {
        match self {
            Game::Normal(g) => {
                let profiles: u64 = g.actions().iter().map(|&a| a as u64).product();
                g.n() as u64 * profiles * g.d() as u64
            }
            Game::Symmetric(g) => {
                g.alpha() as u64
                    * configuration_count(g.n() as u64, g.alpha() as u64)
                    * g.d() as u64
            }
            Game::Graphical(g) => (0..g.n())
                .map(|i| {
                    let local: u64 = g.local_actions(i).iter().map(|&a| a as u64).product();
                    g.d() as u64 * local
                })
                .sum(),
        }
    }
}
