//! Logarithmic-grid coverings and the two-phase approximation of the
//! coordination ratio.
//!
//! The `(1+eps)`-grid snaps a positive vector to integer exponents of
//! `1+eps`, computed by exact multiplication loops rather than floating
//! logarithms so the covering definitions stay testable as exact
//! statements. An under-covering bounds a worst-outcome set from below
//! within a factor `1+eps`; a stick-covering thins a frontier to one
//! member per occupied cell. Running the exact ratio computation on the
//! two coverings yields sound guarantees within `(1+eps1)(1+eps2)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{MogError, Result};
use crate::mocr::mocr;
use crate::rat::Rat;
use crate::vector::Point;
use crate::{PayoffVector, VectorSet};

/// Grid factor `1 + eps` with `eps > 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoveringParams {
    eps: Rat,
}

impl CoveringParams {
    pub fn new(eps: Rat) -> Result<Self> {
        if eps <= Rat::zero() {
            return Err(MogError::InvalidArgument(
                "covering precision must be strictly positive".into(),
            ));
        }
        Ok(CoveringParams { eps })
    }

    pub fn eps(&self) -> &Rat {
        &self.eps
    }

    /// The grid base `1 + eps`.
    pub fn factor(&self) -> Rat {
        Rat::from_integer(1.into()) + &self.eps
    }
}

fn require_positive_set(set: &VectorSet, what: &str) -> Result<()> {
    if set.iter().any(|p| p.iter().any(|c| c <= &Rat::zero())) {
        return Err(MogError::PositiveDomain(format!(
            "{what} must have strictly positive components"
        )));
    }
    Ok(())
}

/// Per coordinate, the largest integer `l` with `(1+eps)^l <= x_k`; negative
/// for components below one. Exact: the power is tracked by rational
/// multiplication and division.
pub fn log_grid_index(x: &PayoffVector, params: &CoveringParams) -> Result<Vec<i64>> {
    let base = params.factor();
    let one = Rat::from_integer(1.into());
    let mut out = Vec::with_capacity(x.dim());
    for c in x.iter() {
        if *c <= Rat::zero() {
            return Err(MogError::PositiveDomain(
                "grid index needs strictly positive components".into(),
            ));
        }
        let mut l: i64 = 0;
        let mut power = one.clone();
        if *c >= one {
            // grow while the next power still fits below x_k
            loop {
                let next = &power * &base;
                if next > *c {
                    break;
                }
                power = next;
                l += 1;
            }
        } else {
            // shrink until the power drops to or below x_k
            while power > *c {
                power /= &base;
                l -= 1;
            }
        }
        out.push(l);
    }
    Ok(out)
}

/// The grid point `(1+eps)^l`, componentwise.
pub fn grid_point(l: &[i64], params: &CoveringParams) -> PayoffVector {
    let base = params.factor();
    Point::new(vec![base; l.len()])
        .pow_int(l)
        .expect("matching dimensions")
}

/// Snap-down covering of a worst-outcome set: every member maps to its grid
/// cell corner, then the worst survivors are kept. The output bounds the
/// input from below and is within a multiplicative `1+eps` of it.
pub fn under_cover(wst_e: &VectorSet, params: &CoveringParams) -> Result<VectorSet> {
    require_positive_set(wst_e, "the worst-equilibria set")?;
    let mut cells = BTreeSet::new();
    for y in wst_e.iter() {
        cells.insert(log_grid_index(y, params)?);
    }
    let snapped: Vec<PayoffVector> = cells.iter().map(|l| grid_point(l, params)).collect();
    Ok(VectorSet::new(snapped)?.wst())
}

/// Frontier thinning: one representative (the lexicographically smallest
/// member) per occupied grid cell, then the worst survivors. Always a
/// subset of the input.
pub fn stick_cover(f: &VectorSet, params: &CoveringParams) -> Result<VectorSet> {
    require_positive_set(f, "the frontier")?;
    let mut reps: BTreeMap<Vec<i64>, &PayoffVector> = BTreeMap::new();
    // canonical iteration is ascending lexicographic, so the first member
    // seen in a cell is the lexicographically smallest
    for z in f.iter() {
        reps.entry(log_grid_index(z, params)?).or_insert(z);
    }
    let chosen: Vec<PayoffVector> = reps.values().map(|&p| p.clone()).collect();
    Ok(VectorSet::new(chosen)?.wst())
}

/// Result of the two-phase approximation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ApproxMocr {
    /// ratio antichain computed on the covered inputs
    pub ratios: VectorSet,
    /// multiplicative guarantee `(1+eps1)(1+eps2)`
    pub guarantee: Rat,
    /// size of the under-covering of the worst-outcome set
    pub under_size: usize,
    /// size of the stick-covering of the frontier
    pub stick_size: usize,
}

/// Runs the exact ratio computation on an under-covered worst set and a
/// stick-covered frontier. Every output ratio is a sound guarantee for the
/// original sets, and every exact ratio is dominated by `guarantee` times
/// some output ratio.
pub fn approx_mocr(
    wst_e: &VectorSet,
    f: &VectorSet,
    eps1: &Rat,
    eps2: &Rat,
) -> Result<ApproxMocr> {
    let p1 = CoveringParams::new(eps1.clone())?;
    let p2 = CoveringParams::new(eps2.clone())?;
    let under = under_cover(wst_e, &p1)?;
    let stick = stick_cover(f, &p2)?;
    let ratios = mocr(&under, &stick)?;
    let guarantee = p1.factor() * p2.factor();
    Ok(ApproxMocr {
        ratios,
        guarantee,
        under_size: under.len(),
        stick_size: stick.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mocr::ratio_member;
    use crate::rat::{rat_int, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(cs: &[i64]) -> PayoffVector {
        Point::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn set(points: &[&[i64]]) -> VectorSet {
        VectorSet::new(points.iter().map(|cs| pt(cs)).collect()).unwrap()
    }

    fn eps(p: i64, q: i64) -> CoveringParams {
        CoveringParams::new(ratio(p, q)).unwrap()
    }

    #[test]
    fn grid_index_on_the_doubling_grid() {
        let params = eps(1, 1);
        assert_eq!(log_grid_index(&pt(&[4, 1]), &params).unwrap(), vec![2, 0]);
        assert_eq!(log_grid_index(&pt(&[3, 3]), &params).unwrap(), vec![1, 1]);
        let half_eight = Point::new(vec![ratio(1, 2), rat_int(8)]);
        assert_eq!(
            log_grid_index(&half_eight, &params).unwrap(),
            vec![-1, 3]
        );
    }

    #[test]
    fn grid_index_requires_positive_components() {
        assert!(matches!(
            log_grid_index(&pt(&[0, 1]), &eps(1, 1)),
            Err(MogError::PositiveDomain(_))
        ));
        assert!(CoveringParams::new(Rat::zero()).is_err());
    }

    #[test]
    fn grid_index_brackets_the_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let params = eps(13, 200);
        for _ in 0..100 {
            let x = Point::new(vec![ratio(rng.gen_range(1..=400), rng.gen_range(1..=20))]);
            let l = log_grid_index(&x, &params).unwrap();
            let at = grid_point(&l, &params);
            let above = grid_point(&[l[0] + 1], &params);
            assert!(at.components()[0] <= x.components()[0]);
            assert!(above.components()[0] > x.components()[0]);
        }
    }

    #[test]
    fn under_cover_examples() {
        let params = eps(1, 1);
        assert_eq!(under_cover(&set(&[&[4, 1]]), &params).unwrap(), set(&[&[4, 1]]));
        assert_eq!(under_cover(&set(&[&[3, 3]]), &params).unwrap(), set(&[&[2, 2]]));
        // grid-aligned sets are fixed points
        let aligned = set(&[&[2, 8], &[8, 2]]);
        assert_eq!(under_cover(&aligned, &params).unwrap(), aligned);
    }

    #[test]
    fn under_cover_satisfies_both_quantifiers() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..50 {
            let params = eps(rng.gen_range(1..=30), 100);
            let len = rng.gen_range(1..=10);
            let d = rng.gen_range(1..=3);
            let e = VectorSet::new(
                (0..len)
                    .map(|_| {
                        Point::new(
                            (0..d)
                                .map(|_| ratio(rng.gen_range(1..=60), rng.gen_range(1..=6)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
            .unwrap();
            let cover = under_cover(&e, &params).unwrap();
            assert!(cover.len() <= e.len());
            let factor = params.factor();
            // every member bounds some covering point from above
            for y in e.iter() {
                assert!(cover.iter().any(|yp| y.weakly_dominates(yp).unwrap()));
            }
            // every covering point is within 1+eps of some member
            for yp in cover.iter() {
                let scaled = Point::new(yp.iter().map(|c| c * &factor).collect());
                assert!(e.iter().any(|y| scaled.weakly_dominates(y).unwrap()));
            }
        }
    }

    #[test]
    fn stick_cover_examples() {
        let params = eps(1, 1);
        let singleton = set(&[&[5, 9]]);
        assert_eq!(stick_cover(&singleton, &params).unwrap(), singleton);

        // (3,3) and (7/2,7/2) share the doubling-grid cell (1,1)
        let f = VectorSet::new(vec![
            pt(&[3, 3]),
            Point::new(vec![ratio(7, 2), ratio(7, 2)]),
        ])
        .unwrap();
        let cover = stick_cover(&f, &params).unwrap();
        assert_eq!(cover, set(&[&[3, 3]]));
    }

    #[test]
    fn stick_cover_satisfies_both_quantifiers() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..50 {
            let params = eps(rng.gen_range(1..=30), 100);
            let len = rng.gen_range(1..=10);
            let d = rng.gen_range(1..=3);
            let f = VectorSet::new(
                (0..len)
                    .map(|_| {
                        Point::new(
                            (0..d)
                                .map(|_| ratio(rng.gen_range(1..=60), rng.gen_range(1..=6)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
            .unwrap();
            let cover = stick_cover(&f, &params).unwrap();
            assert!(cover.is_subset_of(&f));
            let factor = params.factor();
            // every frontier member is stuck to some representative
            for z in f.iter() {
                let scaled = Point::new(z.iter().map(|c| c * &factor).collect());
                assert!(cover.iter().any(|zp| scaled.weakly_dominates(zp).unwrap()));
            }
        }
    }

    #[test]
    fn grid_aligned_inputs_reproduce_the_exact_ratios() {
        // powers of two with the doubling grid: coverings are identities
        let wst = set(&[&[2, 4], &[4, 2]]);
        let f = set(&[&[8, 2], &[2, 8]]);
        let exact = mocr(&wst, &f).unwrap();
        let approx = approx_mocr(&wst, &f, &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(approx.ratios, exact);
        assert_eq!(approx.guarantee, rat_int(4));
    }

    #[test]
    fn experiment_precision_compounds_to_about_ten_percent() {
        let wst = set(&[&[5, 7]]);
        let f = set(&[&[9, 3]]);
        let approx = approx_mocr(&wst, &f, &ratio(13, 200), &ratio(7, 200)).unwrap();
        assert_eq!(approx.guarantee, ratio(44091, 40000));
    }

    #[test]
    fn lemma1_soundness_and_covering_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let eps1 = ratio(13, 200);
        let eps2 = ratio(7, 200);
        for _ in 0..10 {
            let mk = |rng: &mut ChaCha8Rng, len: usize| {
                VectorSet::new(
                    (0..len)
                        .map(|_| {
                            Point::new(
                                (0..2)
                                    .map(|_| ratio(rng.gen_range(1..=48), rng.gen_range(1..=4)))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
                .unwrap()
            };
            let e_full = mk(&mut rng, 12);
            let f = mk(&mut rng, 8).eff();
            let wst = e_full.wst();
            let exact = mocr(&wst, &f).unwrap();
            let approx = approx_mocr(&wst, &f, &eps1, &eps2).unwrap();
            // soundness: approximate ratios hold for the original sets
            for rho in approx.ratios.iter() {
                assert!(ratio_member(rho, &e_full, &f).unwrap());
            }
            // covering: guarantee * some approximate ratio dominates each
            // exact ratio
            for rho in exact.iter() {
                let covered = approx.ratios.iter().any(|rp| {
                    let scaled = Point::new(rp.iter().map(|c| c * &approx.guarantee).collect());
                    scaled.weakly_dominates(rho).unwrap()
                });
                assert!(covered, "exact ratio escapes the covering");
            }
        }
    }

    #[test]
    fn covering_sizes_shrink_on_nested_grids() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..20 {
            let e = VectorSet::new(
                (0..12)
                    .map(|_| {
                        Point::new(
                            (0..2)
                                .map(|_| ratio(rng.gen_range(1..=100), rng.gen_range(1..=4)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
            .unwrap();
            let fine = eps(1, 10);
            // (1+eps)^2 - 1 doubles the cell width in log space
            let coarse = CoveringParams::new(fine.factor() * fine.factor() - rat_int(1)).unwrap();
            let fine_cover = under_cover(&e, &fine).unwrap();
            let coarse_cover = under_cover(&e, &coarse).unwrap();
            assert!(coarse_cover.len() <= fine_cover.len());
            let fine_stick = stick_cover(&e, &fine).unwrap();
            let coarse_stick = stick_cover(&e, &coarse).unwrap();
            assert!(coarse_stick.len() <= fine_stick.len());
        }
    }
}
