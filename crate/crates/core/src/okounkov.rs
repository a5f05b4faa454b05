//! Flag valuations, Okounkov and infinitesimal bodies, simplex gauges, and the
//! local positivity constants `μ` and `ε` of monomial series.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geomcore::{int, GeomError, Rational, RationalPolytope, SimplexKind};
use crate::series::{compositions, ord_at_point, ExponentVec, ModelKind, ModelVariety, MonomialSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OkounkovError {
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("empty series")]
    EmptySeries,
    #[error("m_max must be at least {min}, got {got}")]
    BoundTooSmall { min: u32, got: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlagKind {
    Coordinate,
    Infinitesimal,
}

/// A torus-invariant flag centered at the basepoint.
///
/// `order` is a permutation of the local coordinate indices `0..n`. For a
/// coordinate flag, `Y_i` is cut out by the first `i` coordinates in `order`.
/// For an infinitesimal flag, `Y_1 = E ≅ P^{n-1}` and `Y_{i+1} ⊂ E` is cut out
/// by `z_{order[1]}, …, z_{order[i]}`, so the flag ends at the point where only
/// `z_{order[0]}` is nonzero. A monomial with local exponents `a` then has
/// valuation `(Σ a, a_{order[1]}, …, a_{order[n-1]})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flag {
    pub kind: FlagKind,
    pub order: Vec<usize>,
}

impl Flag {
    pub fn coordinate(order: Vec<usize>) -> Self {
        Flag { kind: FlagKind::Coordinate, order }
    }

    pub fn infinitesimal(order: Vec<usize>) -> Self {
        Flag { kind: FlagKind::Infinitesimal, order }
    }

    /// The flag of the given kind with the identity ordering.
    pub fn standard(kind: FlagKind, n: usize) -> Self {
        Flag { kind, order: (0..n).collect() }
    }

    pub fn simplex_kind(&self) -> SimplexKind {
        match self.kind {
            FlagKind::Coordinate => SimplexKind::Standard,
            FlagKind::Infinitesimal => SimplexKind::Inverted,
        }
    }

    pub fn check(&self, n: usize) -> Result<(), OkounkovError> {
        let mut seen: Vec<usize> = self.order.clone();
        seen.sort_unstable();
        if seen != (0..n).collect::<Vec<_>>() {
            return Err(OkounkovError::InvalidFlag(format!(
                "order {:?} is not a permutation of 0..{n}",
                self.order
            )));
        }
        Ok(())
    }

    /// The valuation as an integer matrix acting on local exponents.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.order.len();
        (0..n)
            .map(|row| {
                let mut r = vec![Rational::zero(); n];
                match self.kind {
                    FlagKind::Coordinate => r[self.order[row]] = int(1),
                    FlagKind::Infinitesimal if row == 0 => r.iter_mut().for_each(|x| *x = int(1)),
                    FlagKind::Infinitesimal => r[self.order[row]] = int(1),
                }
                r
            })
            .collect()
    }

    fn apply(&self, local: &[u32]) -> Vec<u32> {
        let ordered: Vec<u32> = self.order.iter().map(|&k| local[k]).collect();
        match self.kind {
            FlagKind::Coordinate => ordered,
            FlagKind::Infinitesimal => {
                let mut v = ordered.clone();
                v[0] = ordered.iter().sum();
                v
            }
        }
    }
}

/// `ν_{Y_•}` of a monomial.
pub fn valuation(flag: &Flag, e: &ExponentVec, model: &ModelVariety) -> Result<Vec<u32>, OkounkovError> {
    flag.check(model.dim())?;
    if e.0.len() != model.num_coords() {
        return Err(OkounkovError::InvalidFlag(format!(
            "exponent vector {e} has {} entries, model has {} coordinates",
            e.0.len(),
            model.num_coords()
        )));
    }
    Ok(flag.apply(&model.local_exponents(e)))
}

/// An Okounkov body together with its finite-degree approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyReport {
    /// The body itself; equal to `truncated` when no closed form is known.
    pub body: RationalPolytope,
    /// Hull of the normalized valuation points of degrees `1..=m_max`.
    pub truncated: RationalPolytope,
    pub m_max: u32,
    /// Whether the truncated hull at `m_max` equals the one at `m_max / 2`.
    pub stabilized: bool,
    /// Whether `body` comes from the closed-form limit rather than truncation.
    pub exact: bool,
}

fn normalized_points(series: &MonomialSeries, flag: &Flag, m_max: u32, lift: bool) -> Vec<(u32, Vec<Vec<Rational>>)> {
    let model = series.model();
    (1..=m_max)
        .into_par_iter()
        .map(|m| {
            let scale = int(m as i64);
            let pts = series
                .degree(m)
                .iter()
                .flat_map(|e| {
                    let base: Vec<Rational> = flag.apply(&model.local_exponents(e)).into_iter().map(|x| int(x as i64) / &scale).collect();
                    if lift {
                        let ord = int(ord_at_point(e, model) as i64) / &scale;
                        let mut low = base.clone();
                        low.push(Rational::zero());
                        let mut high = base;
                        high.push(ord);
                        vec![low, high]
                    } else {
                        vec![base]
                    }
                })
                .collect();
            (m, pts)
        })
        .collect()
}

fn truncated_hulls(per_degree: &[(u32, Vec<Vec<Rational>>)], dim: usize, m_max: u32) -> (RationalPolytope, RationalPolytope) {
    let collect = |bound: u32| -> RationalPolytope {
        let pts: Vec<Vec<Rational>> = per_degree
            .iter()
            .filter(|(m, _)| *m <= bound)
            .flat_map(|(_, p)| p.iter().cloned())
            .collect();
        if pts.is_empty() {
            RationalPolytope::empty(dim)
        } else {
            RationalPolytope::convex_hull(&pts, dim).expect("valuation points have the body dimension")
        }
    };
    (collect(m_max), collect(m_max / 2))
}

pub(crate) fn build_body(
    series: &MonomialSeries,
    flag: &Flag,
    m_max: u32,
    filtered: bool,
) -> Result<BodyReport, OkounkovError> {
    if m_max < 2 {
        return Err(OkounkovError::BoundTooSmall { min: 2, got: m_max });
    }
    let n = series.model().dim();
    flag.check(n)?;
    let dim = if filtered { n + 1 } else { n };
    let per_degree = normalized_points(series, flag, m_max, filtered);
    let (truncated, half) = truncated_hulls(&per_degree, dim, m_max);
    if truncated.is_empty() {
        return Err(OkounkovError::EmptySeries);
    }
    let stabilized = truncated == half;
    let Some(region) = series.limit_region() else {
        return Ok(BodyReport { body: truncated.clone(), truncated, m_max, stabilized, exact: false });
    };
    if region.is_empty() {
        return Err(OkounkovError::EmptySeries);
    }
    let mut rows = flag.matrix();
    let source = if filtered {
        let lifted: Vec<Vec<Rational>> = region
            .vertices()
            .iter()
            .flat_map(|v| {
                let ord: Rational = v.iter().sum();
                let mut low = v.clone();
                low.push(Rational::zero());
                let mut high = v.clone();
                high.push(ord);
                [low, high]
            })
            .collect();
        for row in rows.iter_mut() {
            row.push(Rational::zero());
        }
        let mut last = vec![Rational::zero(); n];
        last.push(int(1));
        rows.push(last);
        RationalPolytope::convex_hull(&lifted, n + 1)?
    } else {
        region
    };
    let body = source.linear_image(&rows)?;
    Ok(BodyReport { body, truncated, m_max, stabilized, exact: true })
}

/// The Okounkov body `Δ_{Y_•}(V_•)`, or `Δ̃` for an infinitesimal flag.
pub fn okounkov_body(series: &MonomialSeries, flag: &Flag, m_max: u32) -> Result<BodyReport, OkounkovError> {
    build_body(series, flag, m_max, false)
}

/// `ξ` for a coordinate flag, `ξ̃` for an infinitesimal one.
pub fn gauges(series: &MonomialSeries, flag: &Flag, m_max: u32) -> Result<Rational, OkounkovError> {
    Ok(okounkov_body(series, flag, m_max)?.body.simplex_gauge(flag.simplex_kind()))
}

/// `μ(V_•; x)`, the largest normalized order of vanishing over degrees `1..=m_max`.
pub fn nakayama_mu(series: &MonomialSeries, m_max: u32) -> Result<Rational, OkounkovError> {
    if m_max < 1 {
        return Err(OkounkovError::BoundTooSmall { min: 1, got: m_max });
    }
    (1..=m_max)
        .into_par_iter()
        .filter_map(|m| {
            let top = series.degree(m).iter().map(|e| ord_at_point(e, series.model())).max()?;
            Some(Rational::new((top as i64).into(), (m as i64).into()))
        })
        .max()
        .ok_or(OkounkovError::EmptySeries)
}

/// `s(V_m; x)`: the largest `s` such that every local monomial of degree at most `s`
/// occurs in degree `m`, or `-1`.
pub fn jet_separation(series: &MonomialSeries, m: u32) -> i64 {
    let model = series.model();
    let n = model.dim();
    let present: BTreeSet<Vec<u32>> = series.degree(m).iter().map(|e| model.local_exponents(e)).collect();
    let mut s: i64 = -1;
    loop {
        let next = (s + 1) as u32;
        if !compositions(next, n).iter().all(|c| present.contains(c)) {
            return s;
        }
        s += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriEstimate {
    /// `max(0, max_m s_m / m)`.
    pub value: Rational,
    /// `(m, s_m)` for `m = 1..=m_max`.
    pub jets: Vec<(u32, i64)>,
    /// Whether `max(0, s_m / m)` is constant for `m` in the top half of the range.
    pub stabilized: bool,
}

/// Lower bound for `ε(V_•; x)` from jet separation in degrees `1..=m_max`.
pub fn seshadri_estimate(series: &MonomialSeries, m_max: u32) -> Result<SeshadriEstimate, OkounkovError> {
    if m_max < 1 {
        return Err(OkounkovError::BoundTooSmall { min: 1, got: m_max });
    }
    let jets: Vec<(u32, i64)> = (1..=m_max).into_par_iter().map(|m| (m, jet_separation(series, m))).collect();
    let ratio = |&(m, s): &(u32, i64)| -> Rational {
        let r = Rational::new(s.into(), (m as i64).into());
        if r.is_negative() {
            Rational::zero()
        } else {
            r
        }
    };
    let value = jets.iter().map(ratio).max().unwrap_or_else(Rational::zero);
    let top: Vec<Rational> = jets[(m_max / 2) as usize..].iter().map(ratio).collect();
    let stabilized = top.windows(2).all(|w| w[0] == w[1]);
    Ok(SeshadriEstimate { value, jets, stabilized })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointGauges {
    pub point: Vec<u32>,
    pub xi: Rational,
    pub xi_tilde: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplenessReport {
    pub points: Vec<PointGauges>,
    pub consistent_with_ample: bool,
}

/// Gauges of the complete series at every torus-fixed point.
///
/// This samples the torus-fixed points only; it is evidence, not a proof.
pub fn ampleness_check(kind: ModelKind, m_max: u32) -> Result<AmplenessReport, OkounkovError> {
    let model = ModelVariety::new(kind)?;
    let n = model.dim();
    let points = model
        .torus_fixed_points()
        .into_iter()
        .map(|x| {
            let s = crate::series::complete_series(&x);
            Ok(PointGauges {
                point: x.point_pattern(),
                xi: gauges(&s, &Flag::standard(FlagKind::Coordinate, n), m_max)?,
                xi_tilde: gauges(&s, &Flag::standard(FlagKind::Infinitesimal, n), m_max)?,
            })
        })
        .collect::<Result<Vec<_>, OkounkovError>>()?;
    let consistent_with_ample = points.iter().all(|p| p.xi.is_positive() && p.xi_tilde.is_positive());
    Ok(AmplenessReport { points, consistent_with_ample })
}
