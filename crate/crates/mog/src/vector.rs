//! Points in objective space, Pareto-dominance and efficient/worst sets.
//!
//! Everything here is generic over the scalar type so the same sweep runs on
//! exact rationals (the solvers) and on `f64` samples (the Monte-Carlo
//! frontier counts). Scalars must be totally comparable: rationals and
//! finite floats qualify, NaN does not.

use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Zero};

use crate::error::{MogError, Result};
use crate::rat::{format_rat, Rat};

/// A point in `d`-objective space.
///
/// `PartialOrd`/`Ord` are the *lexicographic storage order* used for
/// canonical sets, not Pareto-dominance; dominance is [`Point::dominates`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T>(Vec<T>);

impl<T> Point<T> {
    pub fn new(components: Vec<T>) -> Self {
        Point(components)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[T] {
        &self.0
    }

    pub fn into_components(self) -> Vec<T> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(MogError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

impl<T> From<Vec<T>> for Point<T> {
    fn from(v: Vec<T>) -> Self {
        Point(v)
    }
}

impl<T: fmt::Debug> fmt::Debug for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

fn dominates_raw<T: PartialOrd>(x: &[T], y: &[T]) -> bool {
    let mut strict = false;
    for (a, b) in x.iter().zip(y) {
        if a < b {
            return false;
        }
        if a > b {
            strict = true;
        }
    }
    strict
}

fn weakly_dominates_raw<T: PartialOrd>(x: &[T], y: &[T]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

impl<T: PartialOrd> Point<T> {
    /// Pareto-dominance: `self >= other` on every objective and strictly
    /// better on at least one. Irreflexive.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(dominates_raw(&self.0, &other.0))
    }

    /// Weak Pareto-dominance: `self >= other` componentwise. Reflexive.
    pub fn weakly_dominates(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(weakly_dominates_raw(&self.0, &other.0))
    }
}

impl<T: Clone + Mul<Output = T>> Point<T> {
    /// Componentwise product `(x * y)_k = x_k y_k`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        ))
    }
}

impl<T: Clone + PartialOrd + Zero + Div<Output = T>> Point<T> {
    /// Componentwise quotient `(x / y)_k = x_k / y_k`; every `y_k` must be
    /// strictly positive.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if other.0.iter().any(|b| *b <= T::zero()) {
            return Err(MogError::PositiveDomain(
                "division requires strictly positive denominator components".into(),
            ));
        }
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() / b.clone())
                .collect(),
        ))
    }
}

impl<T: Clone + PartialOrd> Point<T> {
    /// Componentwise minimum `(x ∧ y)_k = min(x_k, y_k)`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b < a { b.clone() } else { a.clone() })
                .collect(),
        ))
    }
}

impl<T: Clone + One + Mul<Output = T> + Div<Output = T>> Point<T> {
    /// Componentwise integer power `(x^l)_k = (x_k)^{l_k}`; negative
    /// exponents divide, so the scalar type must support exact division.
    pub fn pow_int(&self, exponents: &[i64]) -> Result<Self> {
        if exponents.len() != self.dim() {
            return Err(MogError::DimensionMismatch {
                left: self.dim(),
                right: exponents.len(),
            });
        }
        let out = self
            .0
            .iter()
            .zip(exponents)
            .map(|(base, &l)| {
                let mut acc = T::one();
                for _ in 0..l.unsigned_abs() {
                    if l >= 0 {
                        acc = acc * base.clone();
                    } else {
                        acc = acc / base.clone();
                    }
                }
                acc
            })
            .collect();
        Ok(Point(out))
    }
}

/// The componentwise operators of the ratio algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementwiseOp {
    Star,
    Divide,
    Wedge,
    Pow,
}

/// Dispatches one of the four componentwise operators on exact-rational
/// points. For `Pow` the right operand must have integer components.
pub fn elementwise(op: ElementwiseOp, x: &Point<Rat>, y: &Point<Rat>) -> Result<Point<Rat>> {
    match op {
        ElementwiseOp::Star => x.star(y),
        ElementwiseOp::Divide => x.divide(y),
        ElementwiseOp::Wedge => x.wedge(y),
        ElementwiseOp::Pow => {
            x.check_dim(y)?;
            let mut exps = Vec::with_capacity(y.dim());
            for e in y.iter() {
                if !e.is_integer() {
                    return Err(MogError::InvalidArgument(format!(
                        "pow exponent {} is not an integer",
                        format_rat(e)
                    )));
                }
                let e: i64 = e
                    .numer()
                    .try_into()
                    .map_err(|_| MogError::InvalidArgument("pow exponent out of range".into()))?;
                exps.push(e);
            }
            x.pow_int(&exps)
        }
    }
}

fn assert_uniform_dim<T>(points: &[Point<T>]) {
    if let Some(first) = points.first() {
        assert!(
            points.iter().all(|p| p.dim() == first.dim()),
            "mixed dimensions in point slice"
        );
    }
}

fn total_cmp<T: PartialOrd>(a: &T, b: &T) -> std::cmp::Ordering {
    a.partial_cmp(b).expect("scalars must be totally comparable")
}

/// Marks the Pareto-efficient members of `points` (duplicates of an
/// efficient value are all efficient). Dispatches to a sort-based sweep for
/// two objectives and to the generic quadratic scan otherwise.
pub fn eff_mask<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    assert_uniform_dim(points);
    match points.first().map(|p| p.dim()) {
        Some(2) => eff_mask_sweep_2d(points),
        _ => eff_mask_quadratic(points),
    }
}

/// Marks the worst members of `points`: those that dominate no other member.
pub fn wst_mask<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    assert_uniform_dim(points);
    match points.first().map(|p| p.dim()) {
        Some(2) => wst_mask_sweep_2d(points),
        _ => wst_mask_quadratic(points),
    }
}

/// Generic quadratic scan; reference semantics for [`eff_mask`].
pub fn eff_mask_quadratic<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    (0..points.len())
        .map(|i| {
            points
                .iter()
                .all(|q| !dominates_raw(q.components(), points[i].components()))
        })
        .collect()
}

/// Generic quadratic scan; reference semantics for [`wst_mask`].
pub fn wst_mask_quadratic<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    (0..points.len())
        .map(|i| {
            points
                .iter()
                .all(|q| !dominates_raw(points[i].components(), q.components()))
        })
        .collect()
}

/// Descending sweep on the first objective, tracking the best second
/// objective seen so far. One pass per group of equal first components:
/// the group maximum survives iff it beats every point with a strictly
/// larger first component.
fn eff_mask_sweep_2d<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    let n = points.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        total_cmp(&points[b].components()[0], &points[a].components()[0])
            .then_with(|| total_cmp(&points[b].components()[1], &points[a].components()[1]))
    });
    let mut mask = vec![false; n];
    let mut best_y: Option<&T> = None;
    let mut g = 0;
    while g < n {
        let x = &points[idx[g]].components()[0];
        let mut h = g;
        while h < n && points[idx[h]].components()[0] == *x {
            h += 1;
        }
        // group maximum on the second objective comes first in the sort
        let gy = &points[idx[g]].components()[1];
        let survives = match best_y {
            None => true,
            Some(by) => gy > by,
        };
        if survives {
            for &i in &idx[g..h] {
                if points[i].components()[1] == *gy {
                    mask[i] = true;
                }
            }
        }
        if best_y.is_none() || gy > best_y.unwrap() {
            best_y = Some(gy);
        }
        g = h;
    }
    mask
}

/// Mirror of [`eff_mask_sweep_2d`]: ascending sweep tracking the smallest
/// second objective among strictly smaller first components.
fn wst_mask_sweep_2d<T: PartialOrd>(points: &[Point<T>]) -> Vec<bool> {
    let n = points.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        total_cmp(&points[a].components()[0], &points[b].components()[0])
            .then_with(|| total_cmp(&points[a].components()[1], &points[b].components()[1]))
    });
    let mut mask = vec![false; n];
    let mut least_y: Option<&T> = None;
    let mut g = 0;
    while g < n {
        let x = &points[idx[g]].components()[0];
        let mut h = g;
        while h < n && points[idx[h]].components()[0] == *x {
            h += 1;
        }
        let gy = &points[idx[g]].components()[1];
        let survives = match least_y {
            None => true,
            Some(ly) => gy < ly,
        };
        if survives {
            for &i in &idx[g..h] {
                if points[i].components()[1] == *gy {
                    mask[i] = true;
                }
            }
        }
        if least_y.is_none() || gy < least_y.unwrap() {
            least_y = Some(gy);
        }
        g = h;
    }
    mask
}

/// A finite set of points in canonical form: deduplicated, ascending
/// lexicographic order, uniform dimension. Iteration order is deterministic
/// given the contents, which keeps solver output diffable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet<T> {
    points: Vec<Point<T>>,
}

impl<T: Ord + Clone> PointSet<T> {
    /// Canonicalizes a multiset: equal points collapse (they never dominate
    /// each other under the strict definition, so nothing is lost).
    pub fn new(mut points: Vec<Point<T>>) -> Result<Self> {
        if let Some(first) = points.first() {
            let d = first.dim();
            if let Some(bad) = points.iter().find(|p| p.dim() != d) {
                return Err(MogError::DimensionMismatch {
                    left: d,
                    right: bad.dim(),
                });
            }
        }
        points.sort_unstable();
        points.dedup();
        Ok(PointSet { points })
    }

    pub fn empty() -> Self {
        PointSet { points: Vec::new() }
    }

    pub fn singleton(p: Point<T>) -> Self {
        PointSet { points: vec![p] }
    }

    /// Builds from points already in canonical form (sorted, dedup, uniform).
    fn from_canonical(points: Vec<Point<T>>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of objectives, `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(|p| p.dim())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<T>> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// The Pareto-efficient members: those no member dominates. Nonempty
    /// whenever the set is nonempty.
    pub fn eff(&self) -> Self {
        let mask = eff_mask(&self.points);
        self.filter_by_mask(&mask)
    }

    /// The worst members: those that dominate no other member. Nonempty
    /// whenever the set is nonempty.
    pub fn wst(&self) -> Self {
        let mask = wst_mask(&self.points);
        self.filter_by_mask(&mask)
    }

    fn filter_by_mask(&self, mask: &[bool]) -> Self {
        let points = self
            .points
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(p, _)| p.clone())
            .collect();
        Self::from_canonical(points)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.dim(), other.dim()) {
            if a != b {
                return Err(MogError::DimensionMismatch { left: a, right: b });
            }
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Self::new(points)
    }
}

impl<T: Ord + Clone> IntoIterator for PointSet<T> {
    type Item = Point<T>;
    type IntoIter = std::vec::IntoIter<Point<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a PointSet<T> {
    type Item = &'a Point<T>;
    type IntoIter = std::slice::Iter<'a, Point<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, ratio};
    use crate::{PayoffVector, VectorSet};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(cs: &[i64]) -> PayoffVector {
        Point::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn set(points: &[&[i64]]) -> VectorSet {
        VectorSet::new(points.iter().map(|cs| pt(cs)).collect()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(pt(&[2, 2]).dominates(&pt(&[1, 1])).unwrap());
        assert!(!pt(&[1, 4]).dominates(&pt(&[4, 1])).unwrap());
        assert!(!pt(&[3, 3]).dominates(&pt(&[3, 3])).unwrap());
    }

    #[test]
    fn weak_dominance_examples() {
        assert!(pt(&[3, 3]).weakly_dominates(&pt(&[3, 3])).unwrap());
        assert!(!pt(&[2, 2]).weakly_dominates(&pt(&[2, 3])).unwrap());
        assert!(!pt(&[4, 1]).weakly_dominates(&pt(&[1, 4])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            pt(&[1, 2]).dominates(&pt(&[1, 2, 3])),
            Err(MogError::DimensionMismatch { .. })
        ));
        assert!(pt(&[1]).star(&pt(&[1, 2])).is_err());
    }

    #[test]
    fn eff_examples() {
        let antichain = set(&[&[1, 4], &[2, 2], &[4, 1]]);
        assert_eq!(antichain.eff(), antichain);
        assert_eq!(set(&[&[1, 1], &[2, 2]]).eff(), set(&[&[2, 2]]));
        let three_d = set(&[&[5, 0, 0], &[0, 5, 0], &[0, 0, 5], &[1, 1, 1]]);
        assert_eq!(three_d.eff(), three_d);
    }

    #[test]
    fn wst_examples() {
        let antichain = set(&[&[1, 4], &[2, 2], &[4, 1]]);
        assert_eq!(antichain.wst(), antichain);
        assert_eq!(set(&[&[1, 1], &[2, 2]]).wst(), set(&[&[1, 1]]));
        assert_eq!(
            set(&[&[3, 1], &[1, 3], &[3, 3]]).wst(),
            set(&[&[3, 1], &[1, 3]])
        );
    }

    #[test]
    fn empty_set_maps_to_empty() {
        let empty = VectorSet::empty();
        assert!(empty.eff().is_empty());
        assert!(empty.wst().is_empty());
    }

    #[test]
    fn elementwise_examples() {
        let wedge = elementwise(ElementwiseOp::Wedge, &pt(&[3, 1]), &pt(&[2, 5])).unwrap();
        assert_eq!(wedge, pt(&[2, 1]));
        let div = elementwise(ElementwiseOp::Divide, &pt(&[2, 2]), &pt(&[4, 1])).unwrap();
        assert_eq!(div, Point::new(vec![ratio(1, 2), rat_int(2)]));
        let star = elementwise(ElementwiseOp::Star, &pt(&[1, 1]), &pt(&[7, 9])).unwrap();
        assert_eq!(star, pt(&[7, 9]));
    }

    #[test]
    fn elementwise_error_paths() {
        assert!(matches!(
            elementwise(ElementwiseOp::Divide, &pt(&[1, 1]), &pt(&[0, 2])),
            Err(MogError::PositiveDomain(_))
        ));
        let half = Point::new(vec![ratio(1, 2), rat_int(3)]);
        assert!(matches!(
            elementwise(ElementwiseOp::Pow, &pt(&[2, 2]), &half),
            Err(MogError::InvalidArgument(_))
        ));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let base = Point::new(vec![rat_int(2), rat_int(2)]);
        let got = elementwise(ElementwiseOp::Pow, &base, &pt(&[-1, 3])).unwrap();
        assert_eq!(got, Point::new(vec![ratio(1, 2), rat_int(8)]));
    }

    #[test]
    fn duplicates_in_rows_are_all_efficient() {
        let row = vec![pt(&[1, 1]), pt(&[2, 2]), pt(&[2, 2])];
        assert_eq!(eff_mask(&row), vec![false, true, true]);
    }

    #[test]
    fn canonical_form_sorts_and_dedups() {
        let s = VectorSet::new(vec![pt(&[2, 1]), pt(&[1, 2]), pt(&[2, 1])]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.as_slice()[0], pt(&[1, 2]));
        assert_eq!(s.as_slice()[1], pt(&[2, 1]));
    }

    fn random_points(rng: &mut ChaCha8Rng, len: usize, d: usize, hi: i64) -> Vec<PayoffVector> {
        (0..len)
            .map(|_| Point::new((0..d).map(|_| rat_int(rng.gen_range(0..=hi))).collect()))
            .collect()
    }

    /// Sweep path must agree with the generic quadratic scan on 1,000
    /// random two-objective sets.
    #[test]
    fn sweep_agrees_with_quadratic_on_1000_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let len = rng.gen_range(0..30);
            let pts = random_points(&mut rng, len, 2, 6);
            assert_eq!(eff_mask_sweep_2d(&pts), eff_mask_quadratic(&pts));
            assert_eq!(wst_mask_sweep_2d(&pts), wst_mask_quadratic(&pts));
        }
    }

    /// On an `M`-value grid the efficient set has at most `M^(d-1)` members.
    #[test]
    fn grid_bound_on_eff_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let d = rng.gen_range(1..=3usize);
            let m = rng.gen_range(1..=5i64);
            let len = rng.gen_range(1..60);
            let pts = random_points(&mut rng, len, d, m - 1);
            let s = VectorSet::new(pts).unwrap();
            let bound = (m as usize).pow(d as u32 - 1);
            assert!(s.eff().len() <= bound, "|eff| > M^(d-1)");
        }
    }

    proptest! {
        #[test]
        fn dominance_is_antisymmetric(
            xs in proptest::collection::vec(0i64..5, 3),
            ys in proptest::collection::vec(0i64..5, 3),
        ) {
            let x = pt(&xs);
            let y = pt(&ys);
            if x.dominates(&y).unwrap() {
                prop_assert!(!y.dominates(&x).unwrap());
            }
        }

        #[test]
        fn dominance_is_transitive(
            xs in proptest::collection::vec(0i64..4, 2),
            ys in proptest::collection::vec(0i64..4, 2),
            zs in proptest::collection::vec(0i64..4, 2),
        ) {
            let (x, y, z) = (pt(&xs), pt(&ys), pt(&zs));
            if x.dominates(&y).unwrap() && y.dominates(&z).unwrap() {
                prop_assert!(x.dominates(&z).unwrap());
            }
        }

        #[test]
        fn eff_and_wst_are_subsets_and_idempotent(
            raw in proptest::collection::vec(proptest::collection::vec(0i64..5, 2), 0..12),
        ) {
            let s = VectorSet::new(raw.iter().map(|cs| pt(cs)).collect()).unwrap();
            let e = s.eff();
            let w = s.wst();
            prop_assert!(e.is_subset_of(&s));
            prop_assert!(w.is_subset_of(&s));
            prop_assert_eq!(e.eff(), e.clone());
            prop_assert_eq!(w.wst(), w.clone());
            if !s.is_empty() {
                prop_assert!(!e.is_empty());
                prop_assert!(!w.is_empty());
            }
            // every member is weakly dominated by some efficient member
            for y in s.iter() {
                prop_assert!(e.iter().any(|m| m.weakly_dominates(y).unwrap()));
            }
        }
    }
}
