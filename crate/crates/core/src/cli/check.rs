//! The invariant suite behind the `check` command.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::filtered::{extract_invariants, filtered_body, integrated_volume, jumping_profile, mass_plus, MassMethod};
use crate::geomcore::{int, rat, Polynomial, Rational, RationalPolytope, RootBound, SimplexKind, SliceMode};
use crate::okounkov::{gauges, nakayama_mu, okounkov_body, seshadri_estimate, Flag, FlagKind, OkounkovError};
use crate::series::{subseries_vt, MonomialSeries, SeriesKind};

use super::config::JobConfig;
use super::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub xi: Rational,
    pub xi_tilde: Rational,
    pub mu: Rational,
    pub epsilon: Rational,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.ok).map(|c| format!("{}: {}", c.name, c.detail)).collect()
    }
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

/// `k/4` up to `μ`, together with `μ`.
pub fn quarter_grid(mu: &Rational) -> Vec<Rational> {
    let steps = (mu * int(4)).floor().to_integer();
    let mut grid: BTreeSet<Rational> = num_iter(steps).map(|k| int(k) / int(4)).collect();
    grid.insert(mu.clone());
    grid.into_iter().collect()
}

fn num_iter(steps: num_bigint::BigInt) -> impl Iterator<Item = i64> {
    let top = i64::try_from(steps).unwrap_or(0);
    0..=top
}

fn level_body(series: &MonomialSeries, flag: &Flag, t: &Rational, m_max: u32) -> Result<RationalPolytope, CliError> {
    let level = subseries_vt(series, t).map_err(compute)?;
    match okounkov_body(&level, flag, m_max) {
        Ok(r) => Ok(r.body),
        Err(OkounkovError::EmptySeries) => Ok(RationalPolytope::empty(series.model().dim())),
        Err(e) => Err(compute(e)),
    }
}

fn roundtrip(p: &RationalPolytope) -> bool {
    p.to_json().ok().and_then(|j| RationalPolytope::from_json(&j).ok()).as_ref() == Some(p)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Runs every invariant on the configured series.
pub fn run_checks(cfg: &JobConfig) -> Result<CheckReport, CliError> {
    let series = cfg.build_series();
    let n = series.model().dim();
    let m_max = cfg.m_max;
    let coord = cfg.flag(FlagKind::Coordinate);
    let inf = cfg.flag(FlagKind::Infinitesimal);
    let mut checks = Vec::new();
    let mut record = |name: &'static str, ok: bool, detail: String| checks.push(CheckResult { name, ok, detail });

    let xi = gauges(&series, &coord, m_max).map_err(compute)?;
    let xi_tilde = gauges(&series, &inf, m_max).map_err(compute)?;
    let mu = nakayama_mu(&series, m_max).map_err(compute)?;
    let eps = seshadri_estimate(&series, m_max).map_err(compute)?;
    let body = okounkov_body(&series, &coord, m_max).map_err(compute)?.body;
    let inf_body = okounkov_body(&series, &inf, m_max).map_err(compute)?.body;
    let hat = filtered_body(&series, &coord, m_max).map_err(compute)?.body;
    let phi = integrated_volume(&series, m_max).map_err(compute)?;
    let inv = extract_invariants(&phi, n);
    let grid = cfg.t_grid.clone().unwrap_or_else(|| quarter_grid(&mu));

    let audit = series.audit(m_max.min(6));
    record("multiplicativity", audit.is_ok(), audit.err().map(|f| format!("{f:?}")).unwrap_or_default());

    let mut monotone = true;
    for m in 1..=m_max {
        let Ok(p) = jumping_profile(&series, m) else { continue };
        let top = p.e.first().cloned().unwrap_or_else(Rational::zero);
        let dims: Vec<usize> = num_iter(top.to_integer() + 1).map(|s| p.dim_at(&int(s))).collect();
        monotone &= dims.windows(2).all(|w| w[0] >= w[1]) && dims[0] == series.degree(m).len();
    }
    record("filtration_nonincreasing", monotone, String::new());

    record("xi_tilde_ge_xi", xi_tilde >= xi, format!("xi = {xi}, xi~ = {xi_tilde}"));
    record("xi_tilde_ge_epsilon", xi_tilde >= eps.value, format!("xi~ = {xi_tilde}, eps = {}", eps.value));

    let cap = SimplexKind::Inverted.simplex(n, &mu);
    record("inf_body_in_inverted_simplex", inf_body.is_subset_of(&cap), format!("mu = {mu}"));

    let mut spread = BTreeSet::new();
    for order in permutations(n) {
        spread.insert(gauges(&series, &Flag::infinitesimal(order), m_max).map_err(compute)?);
    }
    let listed: Vec<String> = spread.iter().map(Rational::to_string).collect();
    record("xi_tilde_flag_independent", spread.len() == 1, listed.join(" "));

    let mut bad_hat = Vec::new();
    let mut bad_inf = Vec::new();
    let mut bad_avoid = Vec::new();
    for t in &grid {
        let level = level_body(&series, &coord, t, m_max)?;
        let slice = hat.slice(n, SliceMode::Equal, t).map_err(compute)?;
        if slice != level {
            bad_hat.push(t.to_string());
        }
        if level.vertices().iter().any(|v| v.iter().sum::<Rational>() < *t) {
            bad_avoid.push(t.to_string());
        }
        let inf_level = level_body(&series, &inf, t, m_max)?;
        if inf_body.slice(0, SliceMode::AtLeast, t).map_err(compute)? != inf_level {
            bad_inf.push(t.to_string());
        }
    }
    record("filtered_slice_identity", bad_hat.is_empty(), bad_hat.join(" "));
    record("infinitesimal_slice_identity", bad_inf.is_empty(), bad_inf.join(" "));
    record("level_body_avoids_simplex", bad_avoid.is_empty(), bad_avoid.join(" "));

    let total = hat.volume();
    record(
        "filtered_volume_is_phi_mu",
        total == phi.eval(&mu) && &total == phi.value_after(),
        format!("vol = {total}, phi(mu) = {}", phi.eval(&mu)),
    );

    let slope = phi.derivative();
    let rising = slope.intervals().all(|(a, b, p)| p.is_nonnegative_on(a, b));
    record(
        "phi_nondecreasing_continuous",
        rising && phi.is_continuous() && phi.eval(&Rational::zero()).is_zero(),
        String::new(),
    );

    let slope0 = slope.eval(&Rational::zero());
    let simplex = Polynomial::monomial(int(1) / (1..=n as i64).map(int).product::<Rational>(), n);
    let gap = |p: &Polynomial| simplex.sub(&Polynomial::constant(slope0.clone())).add(p);
    let end = slope.domain().map_or(Rational::zero(), |(_, hi)| hi.clone());
    let bounded = slope.intervals().all(|(a, b, p)| gap(p).is_nonnegative_on(a, b))
        && !gap(&Polynomial::zero()).eval(&end).is_negative();
    record("simplex_bound", bounded, String::new());

    let mut mass_ok = true;
    let mut identity_ok = true;
    for m in 1..=m_max {
        let Ok(p) = jumping_profile(&series, m) else { continue };
        let top = p.e.first().cloned().unwrap_or_else(Rational::zero);
        for k in num_iter((&top * int(4)).to_integer() + 4) {
            let t = rat(k, 4);
            let closed = mass_plus(&p, &t, MassMethod::Closed).map_err(compute)?;
            let integral = mass_plus(&p, &t, MassMethod::Integral).map_err(compute)?;
            mass_ok &= closed == integral;
        }
        let identity: Rational = (1..=p.n_jumps())
            .map(|j| int(p.beta_at(j) as i64) * (p.alpha_at(j) - p.alpha_at(j + 1)))
            .sum();
        let far = mass_plus(&p, &(top + int(1)), MassMethod::Closed).map_err(compute)?;
        identity_ok &= identity == p.positive_mass() && far == p.positive_mass();
    }
    record("mass_closed_equals_integral", mass_ok, String::new());
    record("positive_mass_identity", identity_ok, String::new());

    if total.is_positive() {
        record("mu_matches_nakayama", inv.mu == RootBound::Exact(mu.clone()), format!("{} vs {mu}", inv.mu));
    }
    record(
        "seshadri_matches_xi_tilde",
        inv.seshadri == RootBound::Exact(xi_tilde.clone()),
        format!("{} vs {xi_tilde}", inv.seshadri),
    );
    if series.kind() == SeriesKind::Complete {
        record("epsilon_matches_xi_tilde", eps.value == xi_tilde, format!("eps = {}", eps.value));
    }

    let above = subseries_vt(&series, &(&mu + rat(1, 2))).map_err(compute)?;
    record("empty_above_mu", (1..=m_max).all(|m| above.degree(m).is_empty()), String::new());

    record(
        "polytope_json_roundtrip",
        roundtrip(&body) && roundtrip(&inf_body) && roundtrip(&hat),
        String::new(),
    );

    Ok(CheckReport { xi, xi_tilde, mu, epsilon: eps.value, checks })
}
