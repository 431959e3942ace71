//! Algorithms for finite multi-objective games.
//!
//! A multi-objective game gives every agent a *vector-valued* payoff, one
//! component per objective. Agents compare outcomes by Pareto-dominance, so
//! the best-response condition becomes Pareto-efficiency and the stable
//! profiles are the Pareto-Nash equilibria. This crate provides:
//!
//! * [`vector`] — exact dominance predicates, efficient/worst-set extraction
//!   and the componentwise operator algebra, generic over the scalar type;
//! * [`games`] — normal-form, symmetric and graphical representations with a
//!   uniform payoff query and a JSON wire format;
//! * [`equilibria`] — pure-strategy Pareto-Nash enumeration and the
//!   scalarization bridge to single-objective Nash equilibria;
//! * [`potential`] — exact multi-objective potentials and locally efficient
//!   profiles;
//! * [`mixed`] — mixed-strategy equilibrium verification under both the
//!   convex-hull and the supported-action definitions;
//! * [`mocr`] — the multi-objective coordination ratio, its cone-union
//!   algebra and a path-expansion reference oracle;
//! * [`approx`] — logarithmic-grid under/stick coverings and the two-phase
//!   approximation pipeline;
//! * [`randgames`] — seeded random ensembles and Monte-Carlo estimators.
//!
//! All dominance and ratio computations run on exact rationals ([`Rat`]);
//! floating point appears only in Monte-Carlo summaries.

pub mod approx;
pub mod equilibria;
pub mod error;
pub mod games;
pub mod mixed;
pub mod mocr;
pub mod potential;
pub mod randgames;
pub mod rat;
pub mod vector;

pub use error::{MogError, Result};
pub use rat::Rat;

/// A payoff point with exact rational components, one per objective.
pub type PayoffVector = vector::Point<Rat>;

/// A canonical (deduplicated, lexicographically sorted) set of payoff points.
pub type VectorSet = vector::PointSet<Rat>;
