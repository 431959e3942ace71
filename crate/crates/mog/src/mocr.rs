//! The multi-objective coordination ratio.
//!
//! A ratio vector `rho` bounds a game's inefficiency when every equilibrium
//! outcome `y` has some efficient outcome `z` with `y/z` weakly dominating
//! `rho`. The set of such guarantees is a union of lower cones and is fully
//! described by its efficient apex antichain; the layered wedge expansion
//! below computes that antichain in polynomial time, and a path-expansion
//! oracle provides reference semantics for small instances.

use num_traits::Zero;

use crate::error::{MogError, Result};
use crate::rat::Rat;
use crate::{PayoffVector, VectorSet};

fn require_nonempty(set: &VectorSet, what: &str) -> Result<()> {
    if set.is_empty() {
        return Err(MogError::InvalidArgument(format!("{what} must be nonempty")));
    }
    Ok(())
}

fn require_nonnegative(set: &VectorSet, what: &str) -> Result<()> {
    if set.iter().any(|p| p.iter().any(|c| c < &Rat::zero())) {
        return Err(MogError::PositiveDomain(format!(
            "{what} must have nonnegative components"
        )));
    }
    Ok(())
}

fn require_strictly_positive(set: &VectorSet, what: &str) -> Result<()> {
    if set.iter().any(|p| p.iter().any(|c| c <= &Rat::zero())) {
        return Err(MogError::PositiveDomain(format!(
            "{what} must have strictly positive components"
        )));
    }
    Ok(())
}

fn check_dims(e: &VectorSet, f: &VectorSet) -> Result<()> {
    if let (Some(a), Some(b)) = (e.dim(), f.dim()) {
        if a != b {
            return Err(MogError::DimensionMismatch { left: a, right: b });
        }
    }
    Ok(())
}

/// Membership in the guarantee set: `rho` qualifies iff for every `y` in
/// `E` some `z` in `F` satisfies `y/z >= rho` componentwise.
pub fn ratio_member(rho: &PayoffVector, e: &VectorSet, f: &VectorSet) -> Result<bool> {
    require_nonempty(f, "the efficient-outcome set")?;
    require_strictly_positive(f, "the efficient-outcome set")?;
    require_nonnegative(e, "the equilibrium-outcome set")?;
    check_dims(e, f)?;
    for y in e.iter() {
        let mut witnessed = false;
        for z in f.iter() {
            if y.divide(z)?.weakly_dominates(rho)? {
                witnessed = true;
                break;
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A union of lower cones, canonically represented by the efficient members
/// of its apex set (the cone of an apex set equals the cone of its
/// efficient subset).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeUnion {
    apexes: VectorSet,
}

impl ConeUnion {
    pub fn new(apexes: VectorSet) -> Self {
        ConeUnion {
            apexes: apexes.eff(),
        }
    }

    pub fn apexes(&self) -> &VectorSet {
        &self.apexes
    }

    /// A point belongs to the union iff some apex weakly dominates it.
    pub fn contains(&self, point: &PayoffVector) -> Result<bool> {
        for apex in self.apexes.iter() {
            if apex.weakly_dominates(point)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Set union: the union of the apex sets, re-canonicalized.
    pub fn union(&self, other: &Self) -> Result<ConeUnion> {
        Ok(ConeUnion::new(self.apexes.union(&other.apexes)?))
    }

    /// Set intersection: cones intersect at the componentwise minimum of
    /// their apexes, so the union-of-cones intersection is the efficient
    /// set of all pairwise wedges.
    pub fn intersect(&self, other: &Self) -> Result<ConeUnion> {
        let mut wedges = Vec::with_capacity(self.apexes.len() * other.apexes.len());
        for a in self.apexes.iter() {
            for b in other.apexes.iter() {
                wedges.push(a.wedge(b)?);
            }
        }
        Ok(ConeUnion::new(VectorSet::new(wedges)?))
    }
}

fn validate_mocr_inputs(wst_e: &VectorSet, f: &VectorSet) -> Result<()> {
    require_nonempty(wst_e, "the worst-equilibria set")?;
    require_nonempty(f, "the efficient-outcome set")?;
    require_nonnegative(wst_e, "the worst-equilibria set")?;
    require_strictly_positive(f, "the efficient-outcome set")?;
    check_dims(wst_e, f)
}

/// Layered computation of the coordination-ratio antichain.
///
/// Layer 1 holds the ratios of the first worst outcome against every
/// efficient outcome; each following layer wedges the accumulated ratios
/// with the next outcome's ratios and keeps the efficient survivors. The
/// result is the efficient apex set of the guarantee cone-union; its size
/// is at most `(q*m)^(d-1)`.
pub fn mocr(wst_e: &VectorSet, f: &VectorSet) -> Result<VectorSet> {
    validate_mocr_inputs(wst_e, f)?;
    let mut layers = wst_e.iter();
    let first = layers.next().expect("nonempty");
    let mut current = Vec::with_capacity(f.len());
    for z in f.iter() {
        current.push(first.divide(z)?);
    }
    let mut current = VectorSet::new(current)?.eff();
    for y in layers {
        let mut expanded = Vec::with_capacity(current.len() * f.len());
        for z in f.iter() {
            let ratio = y.divide(z)?;
            for rho in current.iter() {
                expanded.push(rho.wedge(&ratio)?);
            }
        }
        current = VectorSet::new(expanded)?.eff();
    }
    Ok(current)
}

/// Reference semantics for [`mocr`]: expand every path that assigns one
/// efficient outcome to each worst outcome, wedge the ratios along the
/// path, and keep the efficient results. Exponential, guarded to at most
/// one million paths.
pub fn mocr_oracle(wst_e: &VectorSet, f: &VectorSet) -> Result<VectorSet> {
    validate_mocr_inputs(wst_e, f)?;
    let q = wst_e.len();
    let m = f.len();
    let mut paths = 1u64;
    for _ in 0..q {
        paths = paths.saturating_mul(m as u64);
        if paths > 1_000_000 {
            return Err(MogError::InvalidArgument(format!(
                "path expansion needs {m}^{q} > 10^6 paths"
            )));
        }
    }
    // ratio matrix, one row per worst outcome
    let mut ratios = Vec::with_capacity(q);
    for y in wst_e.iter() {
        let row = f
            .iter()
            .map(|z| y.divide(z))
            .collect::<Result<Vec<_>>>()?;
        ratios.push(row);
    }
    let mut wedges = Vec::with_capacity(paths as usize);
    let mut path = vec![0usize; q];
    loop {
        let mut acc = ratios[0][path[0]].clone();
        for t in 1..q {
            acc = acc.wedge(&ratios[t][path[t]])?;
        }
        wedges.push(acc);
        let mut advanced = false;
        for slot in path.iter_mut().rev() {
            *slot += 1;
            if *slot < m {
                advanced = true;
                break;
            }
            *slot = 0;
        }
        if !advanced {
            break;
        }
    }
    Ok(VectorSet::new(wedges)?.eff())
}
