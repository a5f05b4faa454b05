//! Monomial graded linear series on model varieties and the order-of-vanishing
//! filtration at a torus-fixed point.
//!
//! A series is a rule that produces, for each degree `m >= 1`, a finite set of
//! exponent vectors. Degrees are materialized on demand; nothing is cached.

mod model;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::geomcore::{int, Halfspace, Rational, RationalPolytope};

pub use model::{ExponentVec, ModelKind, ModelVariety};
pub(crate) use model::compositions;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("point {0} is not torus-fixed; only torus-fixed basepoints are supported")]
    NotTorusFixed(String),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("threshold must be nonnegative, got {0}")]
    NegativeThreshold(Rational),
    #[error("exponent vector {vector} does not have the multidegree of degree {degree}")]
    WrongDegree { vector: ExponentVec, degree: u32 },
}

/// Kind tag of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Complete,
    VanishingModified,
    Veronese,
    FiltrationLevelSeries,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rule {
    Complete,
    /// Sections of the base vanishing to order at least `order` at the point.
    MinOrder { base: Box<MonomialSeries>, order: u32 },
    /// `V_m^(t) = F^{tm} V_m`.
    Level { base: Box<MonomialSeries>, t: Rational },
    /// Degree `i` is the image of `S^i V_step -> V_{i * step}`.
    Veronese { base: Box<MonomialSeries>, step: u32 },
    Explicit(BTreeMap<u32, Vec<ExponentVec>>),
}

/// A graded linear series spanned by monomials in every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSeries {
    model: ModelVariety,
    rule: Rule,
}

/// A pair of degrees where `V_m · V_m'` is not contained in `V_{m+m'}`, or a
/// degree whose basis leaves the complete series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditFailure {
    NotMultiplicative { m: u32, m2: u32, product: ExponentVec },
    OutsideComplete { m: u32, vector: ExponentVec },
}

impl MonomialSeries {
    pub fn model(&self) -> &ModelVariety {
        &self.model
    }

    pub fn kind(&self) -> SeriesKind {
        match self.rule {
            Rule::Complete => SeriesKind::Complete,
            Rule::MinOrder { .. } => SeriesKind::VanishingModified,
            Rule::Level { .. } => SeriesKind::FiltrationLevelSeries,
            Rule::Veronese { .. } => SeriesKind::Veronese,
            Rule::Explicit(_) => SeriesKind::Explicit,
        }
    }

    /// A series given degree by degree; degrees not listed are empty.
    pub fn explicit(model: ModelVariety, degrees: BTreeMap<u32, Vec<ExponentVec>>) -> Result<Self, SeriesError> {
        let mut clean = BTreeMap::new();
        for (m, basis) in degrees {
            if m == 0 {
                return Err(SeriesError::ZeroDegree);
            }
            if let Some(bad) = basis.iter().find(|e| !model.has_degree(e, m)) {
                return Err(SeriesError::WrongDegree { vector: bad.clone(), degree: m });
            }
            let set: BTreeSet<ExponentVec> = basis.into_iter().collect();
            clean.insert(m, set.into_iter().collect());
        }
        Ok(MonomialSeries { model, rule: Rule::Explicit(clean) })
    }

    /// Monomial basis of `V_m`, sorted and without repetition.
    pub fn degree(&self, m: u32) -> Vec<ExponentVec> {
        if m == 0 {
            return Vec::new();
        }
        match &self.rule {
            Rule::Complete => self.model.monomials(m),
            Rule::MinOrder { base, order } => base
                .degree(m)
                .into_iter()
                .filter(|e| ord_at_point(e, &self.model) >= *order)
                .collect(),
            Rule::Level { base, t } => {
                let threshold = t * int(m as i64);
                base.degree(m)
                    .into_iter()
                    .filter(|e| int(ord_at_point(e, &self.model) as i64) >= threshold)
                    .collect()
            }
            Rule::Veronese { base, step } => {
                let gens = base.degree(*step);
                let mut acc: BTreeSet<ExponentVec> = gens.iter().cloned().collect();
                for _ in 1..m {
                    acc = acc.iter().flat_map(|a| gens.iter().map(move |g| a.add(g))).collect();
                }
                acc.into_iter().collect()
            }
            Rule::Explicit(map) => map.get(&m).cloned().unwrap_or_default(),
        }
    }

    /// Limit of the normalized local exponent sets `Γ_m / m`, when it is known in closed form.
    ///
    /// `None` for explicit series, whose behaviour beyond the listed degrees is unknown.
    pub fn limit_region(&self) -> Option<RationalPolytope> {
        let n = self.model.dim();
        match &self.rule {
            Rule::Complete => Some(self.model.local_newton_polytope()),
            Rule::MinOrder { base, order } => {
                let region = base.limit_region()?;
                if *order == 0 || region.is_empty() {
                    return Some(region);
                }
                let reaches_positive_order = region
                    .vertices()
                    .iter()
                    .any(|v| v.iter().fold(Rational::zero(), |a, x| a + x).is_positive());
                Some(if reaches_positive_order { region } else { RationalPolytope::empty(n) })
            }
            Rule::Level { base, t } => {
                let region = base.limit_region()?;
                Some(region.intersect_halfspace(&Halfspace::new(vec![int(-1); n], -t.clone())))
            }
            Rule::Veronese { base, step } => {
                let pts: Vec<Vec<Rational>> = base
                    .degree(*step)
                    .iter()
                    .map(|e| self.model.local_exponents(e).into_iter().map(|x| int(x as i64)).collect())
                    .collect();
                if pts.is_empty() {
                    return Some(RationalPolytope::empty(n));
                }
                Some(RationalPolytope::convex_hull(&pts, n).expect("local exponents have the model dimension"))
            }
            Rule::Explicit(_) => None,
        }
    }

    /// Checks `V_m · V_m' ⊆ V_{m+m'}` for all `m + m' <= m_max`, and containment in the complete series.
    pub fn audit(&self, m_max: u32) -> Result<(), AuditFailure> {
        let degrees: Vec<BTreeSet<ExponentVec>> = (0..=m_max).map(|m| self.degree(m).into_iter().collect()).collect();
        for m in 1..=m_max {
            if let Some(bad) = degrees[m as usize].iter().find(|e| !self.model.has_degree(e, m)) {
                return Err(AuditFailure::OutsideComplete { m, vector: bad.clone() });
            }
        }
        for m in 1..=m_max {
            for m2 in m..=m_max - m {
                for a in &degrees[m as usize] {
                    for b in &degrees[m2 as usize] {
                        let product = a.add(b);
                        if !degrees[(m + m2) as usize].contains(&product) {
                            return Err(AuditFailure::NotMultiplicative { m, m2, product });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The complete series `V_m = H^0(X, O(mD))`.
pub fn complete_series(model: &ModelVariety) -> MonomialSeries {
    MonomialSeries { model: model.clone(), rule: Rule::Complete }
}

/// Order of vanishing at the basepoint: total degree in the local coordinates.
pub fn ord_at_point(e: &ExponentVec, model: &ModelVariety) -> u32 {
    model.local_exponents(e).iter().sum()
}

/// `F^t V_m`: the degree-`m` basis elements with `ord_x >= t`.
pub fn filtration_level(series: &MonomialSeries, m: u32, t: &Rational) -> Vec<ExponentVec> {
    series
        .degree(m)
        .into_iter()
        .filter(|e| &int(ord_at_point(e, series.model()) as i64) >= t)
        .collect()
}

/// The series `V^(t)` with `V_m^(t) = F^{tm} V_m`.
pub fn subseries_vt(series: &MonomialSeries, t: &Rational) -> Result<MonomialSeries, SeriesError> {
    if t.is_negative() {
        return Err(SeriesError::NegativeThreshold(t.clone()));
    }
    if t.is_zero() {
        return Ok(series.clone());
    }
    Ok(MonomialSeries {
        model: series.model.clone(),
        rule: Rule::Level { base: Box::new(series.clone()), t: t.clone() },
    })
}

/// Sections of the complete series that vanish at the basepoint.
pub fn vanishing_subseries(model: &ModelVariety) -> MonomialSeries {
    MonomialSeries {
        model: model.clone(),
        rule: Rule::MinOrder { base: Box::new(complete_series(model)), order: 1 },
    }
}

/// The series generated by `V_m`: its degree-`i` piece is the image of `S^i V_m`
/// inside `V_{im}`, regarded as a series of the divisor `mD`.
pub fn veronese_series(series: &MonomialSeries, m: u32) -> Result<MonomialSeries, SeriesError> {
    if m == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    Ok(MonomialSeries {
        model: series.model.scaled(m),
        rule: Rule::Veronese { base: Box::new(series.clone()), step: m },
    })
}

/// `dim V_m`.
pub fn dimension(series: &MonomialSeries, m: u32) -> usize {
    series.degree(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::rat;

    fn p2() -> ModelVariety {
        ModelVariety::projective(2, 1).unwrap()
    }

    fn q11() -> ModelVariety {
        ModelVariety::p1xp1(1, 1).unwrap()
    }

    #[test]
    fn order_at_point() {
        let x = p2();
        assert_eq!(ord_at_point(&ExponentVec(vec![2, 0, 0]), &x), 0);
        assert_eq!(ord_at_point(&ExponentVec(vec![0, 1, 1]), &x), 2);
        // x0 y1 on P1xP1 is the local coordinate v
        assert_eq!(ord_at_point(&ExponentVec(vec![1, 0, 0, 1]), &q11()), 1);
    }

    #[test]
    fn filtration_levels() {
        let s = complete_series(&p2());
        assert_eq!(filtration_level(&s, 2, &int(1)).len(), 5);
        assert_eq!(filtration_level(&s, 2, &int(0)), s.degree(2));
        assert!(filtration_level(&s, 2, &int(3)).is_empty());
        // rational thresholds compare exactly
        assert_eq!(filtration_level(&s, 2, &rat(1, 2)).len(), 5);
        assert_eq!(filtration_level(&s, 2, &rat(3, 2)).len(), 3);
    }

    #[test]
    fn level_series() {
        let s = complete_series(&p2());
        assert_eq!(subseries_vt(&s, &int(0)).unwrap(), s);
        let v1 = subseries_vt(&s, &int(1)).unwrap();
        for m in 1..=6 {
            assert_eq!(dimension(&v1, m), (m + 1) as usize);
        }
        let q = subseries_vt(&complete_series(&q11()), &int(2)).unwrap();
        for m in 1..=5 {
            assert_eq!(q.degree(m), vec![ExponentVec(vec![0, m, 0, m])]);
        }
        assert!(subseries_vt(&s, &rat(-1, 2)).is_err());
        assert_eq!(v1.kind(), SeriesKind::FiltrationLevelSeries);
    }

    #[test]
    fn vanishing_series() {
        let v = vanishing_subseries(&p2());
        assert_eq!(dimension(&v, 1), 2);
        assert_eq!(dimension(&v, 2), 5);
        assert_eq!(dimension(&v, 3), 9);
        for m in 1..=5 {
            assert!(!v.degree(m).contains(&ExponentVec(vec![m, 0, 0])));
        }
        assert_eq!(v.kind(), SeriesKind::VanishingModified);
    }

    #[test]
    fn veronese() {
        let s = complete_series(&p2());
        let ver = veronese_series(&s, 1).unwrap();
        assert_eq!(ver.degree(2), s.degree(2));
        let v = vanishing_subseries(&p2());
        let vv = veronese_series(&v, 1).unwrap();
        assert_eq!(
            vv.degree(2),
            vec![ExponentVec(vec![0, 0, 2]), ExponentVec(vec![0, 1, 1]), ExponentVec(vec![0, 2, 0])]
        );
        let v3 = veronese_series(&s, 3).unwrap();
        assert_eq!(v3.degree(1), s.degree(3));
        assert_eq!(v3.model().kind(), ModelKind::Pn { n: 2, d: 3 });
        assert!(veronese_series(&s, 0).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&complete_series(&p2()), 3), 10);
        assert_eq!(dimension(&complete_series(&q11()), 3), 16);
        assert_eq!(dimension(&vanishing_subseries(&p2()), 3), 9);
    }

    #[test]
    fn audits() {
        for s in [
            complete_series(&p2()),
            vanishing_subseries(&p2()),
            subseries_vt(&complete_series(&q11()), &rat(1, 2)).unwrap(),
            veronese_series(&vanishing_subseries(&p2()), 2).unwrap(),
        ] {
            assert_eq!(s.audit(6), Ok(()));
        }
        let mut degrees = BTreeMap::new();
        degrees.insert(1, vec![ExponentVec(vec![1, 0, 0])]);
        degrees.insert(2, vec![ExponentVec(vec![0, 2, 0])]);
        let broken = MonomialSeries::explicit(p2(), degrees).unwrap();
        assert!(matches!(broken.audit(2), Err(AuditFailure::NotMultiplicative { m: 1, m2: 1, .. })));
    }

    #[test]
    fn explicit_rejects_wrong_degree() {
        let mut degrees = BTreeMap::new();
        degrees.insert(1, vec![ExponentVec(vec![2, 0, 0])]);
        assert!(matches!(MonomialSeries::explicit(p2(), degrees), Err(SeriesError::WrongDegree { .. })));
    }

    #[test]
    fn limit_regions() {
        let s = complete_series(&p2());
        let tri = s.limit_region().unwrap();
        assert_eq!(vanishing_subseries(&p2()).limit_region().unwrap(), tri);
        let level = subseries_vt(&s, &rat(1, 2)).unwrap().limit_region().unwrap();
        assert_eq!(level.volume(), rat(3, 8));
        let vv = veronese_series(&vanishing_subseries(&p2()), 1).unwrap().limit_region().unwrap();
        assert_eq!(vv.affine_dim(), Some(1));
    }
}
