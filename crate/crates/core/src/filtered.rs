//! Jumping numbers of the order-of-vanishing filtration, bounded mass,
//! filtered Okounkov bodies and the integrated volume function `φ̂`.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::geomcore::{int, rat, PiecewisePolynomial, Polynomial, Rational, RootBound};
use crate::okounkov::{build_body, okounkov_body, BodyReport, Flag, FlagKind, OkounkovError};
use crate::series::{ord_at_point, MonomialSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FilteredError {
    #[error("degree {0} has an empty basis")]
    EmptyDegree(u32),
    #[error("jumping numbers must be nonnegative, got {0}")]
    NegativeJump(Rational),
    #[error("t must be nonnegative, got {0}")]
    NegativeT(Rational),
    #[error(transparent)]
    Okounkov(#[from] OkounkovError),
}

/// Jumping numbers of `ℱ_x` on one graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationProfile {
    pub m: u32,
    /// `e_1 >= e_2 >= … >= e_{v_m} >= 0`.
    pub e: Vec<Rational>,
    /// Distinct values `α_1 > … > α_N`.
    pub alpha: Vec<Rational>,
    /// `β_j = max{ℓ : e_ℓ = α_j}`.
    pub beta: Vec<usize>,
}

impl FiltrationProfile {
    pub fn from_jumping_numbers(m: u32, mut e: Vec<Rational>) -> Result<Self, FilteredError> {
        if e.is_empty() {
            return Err(FilteredError::EmptyDegree(m));
        }
        if let Some(bad) = e.iter().find(|x| x.is_negative()) {
            return Err(FilteredError::NegativeJump(bad.clone()));
        }
        e.sort_by(|a, b| b.cmp(a));
        let mut alpha: Vec<Rational> = Vec::new();
        let mut beta: Vec<usize> = Vec::new();
        for (l, x) in e.iter().enumerate() {
            if alpha.last() == Some(x) {
                *beta.last_mut().unwrap() = l + 1;
            } else {
                alpha.push(x.clone());
                beta.push(l + 1);
            }
        }
        Ok(FiltrationProfile { m, e, alpha, beta })
    }

    /// `N(V_m)`.
    pub fn n_jumps(&self) -> usize {
        self.alpha.len()
    }

    /// `α_j` for `1 <= j <= N + 1`, with `α_{N+1} = 0`.
    pub fn alpha_at(&self, j: usize) -> Rational {
        self.alpha.get(j - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// `β_j` for `0 <= j <= N`, with `β_0 = 0`.
    pub fn beta_at(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.beta[j - 1]
        }
    }

    /// `Σ_{e_ℓ > 0} e_ℓ`.
    pub fn positive_mass(&self) -> Rational {
        self.e.iter().filter(|x| x.is_positive()).sum()
    }

    /// `dim ℱ^v V_m = #{ℓ : e_ℓ >= v}`.
    pub fn dim_at(&self, v: &Rational) -> usize {
        self.e.partition_point(|x| x >= v)
    }
}

/// Jumping numbers of `ℱ_x` on `V_m`: the orders of vanishing of the monomial basis.
pub fn jumping_profile(series: &MonomialSeries, m: u32) -> Result<FiltrationProfile, FilteredError> {
    let e = series
        .degree(m)
        .iter()
        .map(|e| int(ord_at_point(e, series.model()) as i64))
        .collect();
    FiltrationProfile::from_jumping_numbers(m, e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassMethod {
    Closed,
    Integral,
}

/// `mass₊(V_m, t)`.
pub fn mass_plus(profile: &FiltrationProfile, t: &Rational, method: MassMethod) -> Result<Rational, FilteredError> {
    if t.is_negative() {
        return Err(FilteredError::NegativeT(t.clone()));
    }
    Ok(match method {
        MassMethod::Closed => {
            let n = profile.n_jumps();
            let jt = (1..=n + 1).find(|&j| &profile.alpha_at(j) <= t).expect("α_{N+1} = 0 <= t");
            let head = int(profile.beta_at(jt - 1) as i64) * (t - profile.alpha_at(jt));
            let tail: Rational = (jt..=n)
                .map(|j| int(profile.beta[j - 1] as i64) * (profile.alpha_at(j) - profile.alpha_at(j + 1)))
                .sum();
            head + tail
        }
        MassMethod::Integral => {
            // ∫_0^t of a step function that is constant between consecutive jumps
            let mut cuts: Vec<Rational> = profile.alpha.iter().filter(|a| *a < t && a.is_positive()).cloned().collect();
            cuts.push(Rational::zero());
            cuts.push(t.clone());
            cuts.sort();
            cuts.dedup();
            cuts.windows(2)
                .map(|w| {
                    let mid = (&w[0] + &w[1]) / int(2);
                    int(profile.dim_at(&mid) as i64) * (&w[1] - &w[0])
                })
                .sum()
        }
    })
}

/// The filtered Okounkov body `Δ̂_{Y_•}(V_•, ℱ_x)` in `R^{n+1}`.
pub fn filtered_body(series: &MonomialSeries, flag: &Flag, m_max: u32) -> Result<BodyReport, FilteredError> {
    Ok(build_body(series, flag, m_max, true)?)
}

/// `φ̂(t) = ∫_0^t vol(Δ̃_{x_1 >= u}) du`, held constant beyond `μ`.
pub fn integrated_volume(series: &MonomialSeries, m_max: u32) -> Result<PiecewisePolynomial, FilteredError> {
    let n = series.model().dim();
    let body = okounkov_body(series, &Flag::standard(FlagKind::Infinitesimal, n), m_max.max(2))?.body;
    let sigma = body.slice_volume_profile(0).extend_left_to(&Rational::zero());
    let below = sigma.cumulative_integral();
    let total = below.value_after().clone();
    let above = below
        .map_pieces(|p| Polynomial::constant(total.clone()).sub(p), |c| &total - c)
        .merge_identical_pieces();
    Ok(above.cumulative_integral())
}

/// `mass₊(V_m, mt) / m^{n+1}`, the degree-`m` approximant of `φ̂(t)`.
pub fn ivf_mass_approx(series: &MonomialSeries, m: u32, t: &Rational) -> Result<Rational, FilteredError> {
    if t.is_negative() {
        return Err(FilteredError::NegativeT(t.clone()));
    }
    let profile = match jumping_profile(series, m) {
        Ok(p) => p,
        Err(FilteredError::EmptyDegree(_)) => return Ok(Rational::zero()),
        Err(e) => return Err(e),
    };
    let scale = int(m as i64);
    let mass = mass_plus(&profile, &(t * &scale), MassMethod::Closed)?;
    Ok(mass / num_traits::pow(scale, series.model().dim() + 1))
}

/// Approximants for several degrees, computed in parallel.
pub fn ivf_mass_table(series: &MonomialSeries, degrees: &[u32], t: &Rational) -> Result<Vec<(u32, Rational)>, FilteredError> {
    degrees.par_iter().map(|&m| Ok((m, ivf_mass_approx(series, m, t)?))).collect()
}

/// Invariants read off `φ̂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    /// `inf{t : φ̂′(t) = 0}`.
    pub mu: RootBound,
    /// `inf{t >= 0 : φ̂′(0) − φ̂′(t) < tⁿ/n!}`.
    pub seshadri: RootBound,
    /// `t ↦ vol(V^(t)) = n!·φ̂′(t)`.
    pub volume: PiecewisePolynomial,
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).product()
}

fn root_tolerance() -> Rational {
    rat(1, 1_000_000_000)
}

/// First point of `[lo, hi]` to the right of which `g` is positive, if any.
fn first_positive(g: &Polynomial, lo: &Rational, hi: &Rational) -> Option<RootBound> {
    if g.is_zero() {
        return None;
    }
    if g.sign_right_of(lo) > 0 {
        return Some(RootBound::Exact(lo.clone()));
    }
    let mut from = lo.clone();
    loop {
        // strip the root at `from` so the search moves strictly right
        let mut q = g.clone();
        while q.eval(&from).is_zero() {
            q = q.div_rem(&Polynomial::new(vec![-from.clone(), Rational::one()])).0;
        }
        let r = q.smallest_root_in(&from, hi, &root_tolerance())?;
        match r {
            RootBound::Exact(x) => {
                if g.sign_right_of(&x) > 0 {
                    return Some(RootBound::Exact(x));
                }
                from = x;
            }
            bracket => return Some(bracket),
        }
    }
}

/// `μ`, the Seshadri value `ξ̃` and the volume function, from `φ̂` of an `n`-dimensional series.
pub fn extract_invariants(phi: &PiecewisePolynomial, n: usize) -> Invariants {
    let deriv = phi.derivative();
    let zero = Rational::zero();
    let slope0 = deriv.eval(&zero);
    let tol = root_tolerance();

    let mu = deriv
        .intervals()
        .find_map(|(a, b, p)| p.smallest_root_in(a, b, &tol))
        .unwrap_or_else(|| RootBound::Exact(deriv.domain().map_or(zero.clone(), |(_, hi)| hi.clone())));

    let simplex = Polynomial::monomial(int(1) / factorial(n), n);
    let gap = |p: &Polynomial| simplex.sub(&Polynomial::constant(slope0.clone())).add(p);
    let seshadri = deriv
        .intervals()
        .find_map(|(a, b, p)| first_positive(&gap(p), a, b))
        .unwrap_or_else(|| {
            let start = deriv.domain().map_or(zero.clone(), |(_, hi)| hi.clone());
            let tail = gap(&Polynomial::zero());
            let reach = &start + &slope0 * factorial(n) + int(1);
            first_positive(&tail, &start, &reach).expect("tⁿ/n! eventually exceeds φ̂′(0)")
        });

    let nf = factorial(n);
    let volume = deriv.map_pieces(|p| p.scale(&nf), |c| c * &nf);
    Invariants { mu, seshadri, volume }
}
