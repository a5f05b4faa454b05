use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use okounkov_lab::cli::validate;
use okounkov_lab::filtered::{
    extract_invariants, filtered_body, integrated_volume, ivf_mass_approx, jumping_profile, mass_plus,
    FiltrationProfile, MassMethod,
};
use okounkov_lab::geomcore::{int, rat, Polynomial, Rational, RationalPolytope, RootBound, SimplexKind, SliceMode};
use okounkov_lab::okounkov::{
    gauges, jet_separation, nakayama_mu, okounkov_body, seshadri_estimate, Flag, FlagKind,
};
use okounkov_lab::series::{complete_series, subseries_vt, vanishing_subseries, ModelVariety, MonomialSeries};

struct Outcome {
    ok: bool,
    detail: String,
}

fn poly(c: &[(i64, i64)]) -> Polynomial {
    Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn coord(n: usize) -> Flag {
    Flag::standard(FlagKind::Coordinate, n)
}

fn inf(n: usize) -> Flag {
    Flag::standard(FlagKind::Infinitesimal, n)
}

fn p2() -> MonomialSeries {
    complete_series(&ModelVariety::projective(2, 1).unwrap())
}

fn q(a: u32, b: u32) -> MonomialSeries {
    complete_series(&ModelVariety::p1xp1(a, b).unwrap())
}

fn criterion_1() -> Outcome {
    let s = q(1, 1);
    let phi = integrated_volume(&s, 8).unwrap();
    let phi_ok = phi.breakpoints() == [int(0), int(1), int(2)]
        && phi.pieces() == [poly(&[(0, 1), (1, 1), (0, 1), (-1, 6)]), poly(&[(-1, 3), (2, 1), (-1, 1), (1, 6)])];
    let hat = filtered_body(&s, &coord(2), 8).unwrap().body;
    let profile = hat.slice_volume_profile(2);
    let expected = [poly(&[(1, 1), (0, 1), (-1, 2)]), poly(&[(2, 1), (-2, 1), (1, 2)])];
    let profile_ok = profile.breakpoints() == [int(0), int(1), int(2)] && profile.pieces() == expected;
    let slope_ok = phi.derivative().pieces() == expected;
    Outcome {
        ok: phi_ok && profile_ok && slope_ok,
        detail: format!("phi = {{{}}}, slice profile = {{{}}}", phi.to_string().trim().replace('\n', "; "), profile.to_string().trim().replace('\n', "; ")),
    }
}

fn criterion_2() -> Outcome {
    let s = p2();
    let mut bad = Vec::new();
    for m in 1..=10u32 {
        let p = jumping_profile(&s, m).unwrap();
        let mi = m as i64;
        let alpha: Vec<Rational> = (1..=mi + 1).map(|j| int(mi + 1 - j)).collect();
        let beta: Vec<usize> = (1..=mi + 1)
            .map(|j| ((mi + 2) * (mi + 1) / 2 - (mi + 1 - j) * (mi + 2 - j) / 2) as usize)
            .collect();
        if p.alpha != alpha || p.beta != beta {
            bad.push(m);
        }
    }
    let phi = integrated_volume(&s, 8).unwrap();
    let phi_ok = phi.breakpoints() == [int(0), int(1)] && phi.pieces() == [poly(&[(0, 1), (1, 2), (0, 1), (-1, 6)])];
    Outcome {
        ok: bad.is_empty() && phi_ok,
        detail: format!("profile mismatches at m = {bad:?}, phi = {}", phi.to_string().trim()),
    }
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for (name, s) in [("P2 O(1)", p2()), ("P1xP1 O(1,1)", q(1, 1))] {
        let phi = integrated_volume(&s, 8).unwrap();
        let mu = nakayama_mu(&s, 8).unwrap();
        let steps = (&mu * int(10)).to_integer().to_i64().unwrap();
        let mut worst = (0.0f64, Rational::zero());
        let mut not_improving = Vec::new();
        for k in 0..=steps {
            let t = rat(k, 10);
            let exact = phi.eval(&t);
            let err = |m: u32| (ivf_mass_approx(&s, m, &t).unwrap() - &exact).abs();
            let (e40, e10) = (err(40), err(10));
            let tiny = rat(1, 1_000_000_000);
            if (e40 > tiny || e10 > tiny) && e40 >= e10 {
                not_improving.push(t.to_string());
            }
            let e = e40.to_f64().unwrap();
            if e > worst.0 {
                worst = (e, t);
            }
        }
        let within = worst.0 <= 0.05;
        ok &= within && not_improving.is_empty();
        details.push(format!(
            "{name}: max error at m=40 is {:.6} (t = {}), m=40 worse than m=10 at {:?}",
            worst.0, worst.1, not_improving
        ));
    }
    Outcome { ok, detail: details.join("; ") }
}

fn criterion_4() -> Outcome {
    let mut cases: Vec<(String, MonomialSeries, Rational)> = Vec::new();
    for n in [2, 3] {
        for d in 1..=3u32 {
            cases.push((format!("P{n} O({d})"), complete_series(&ModelVariety::projective(n, d).unwrap()), int(d as i64)));
        }
    }
    for a in 1..=2u32 {
        for b in 1..=2u32 {
            cases.push((format!("P1xP1 O({a},{b})"), q(a, b), int(a.min(b) as i64)));
        }
    }
    let m_max = 6;
    let mut bad = Vec::new();
    for (name, s, expected) in &cases {
        let n = s.model().dim();
        let eps = seshadri_estimate(s, m_max).unwrap().value;
        let xt = gauges(s, &inf(n), m_max).unwrap();
        let xi = gauges(s, &coord(n), m_max).unwrap();
        let extracted = extract_invariants(&integrated_volume(s, m_max).unwrap(), n).seshadri;
        let e = expected.to_integer().to_i64().unwrap();
        let jets_ok = (1..=4u32).all(|m| jet_separation(s, m) == e * m as i64);
        if eps != *expected || xt != *expected || extracted != RootBound::Exact(expected.clone()) || xt < xi || !jets_ok {
            bad.push(format!("{name}: eps={eps} xi~={xt} extracted={extracted} xi={xi} jets_ok={jets_ok}"));
        }
    }
    Outcome { ok: bad.is_empty(), detail: format!("{} models, mismatches: {bad:?}", cases.len()) }
}

fn criterion_5() -> Outcome {
    let s = vanishing_subseries(&ModelVariety::projective(2, 1).unwrap());
    let xt = gauges(&s, &inf(2), 8).unwrap();
    let xi = gauges(&s, &coord(2), 8).unwrap();
    let eps = seshadri_estimate(&s, 8).unwrap().value;
    Outcome {
        ok: xt == int(1) && xi == int(1) && eps == int(0),
        detail: format!("xi~ = {xt}, xi = {xi}, eps = {eps}"),
    }
}

fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(0..=max_num), rng.gen_range(1..=max_den))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut mass_bad = 0;
    for _ in 0..200 {
        let len = rng.gen_range(1..=30);
        let e: Vec<Rational> = (0..len).map(|_| random_rational(&mut rng, 40, 6)).collect();
        let p = FiltrationProfile::from_jumping_numbers(1, e.clone()).unwrap();
        let top = p.e[0].clone() + int(1);
        for _ in 0..50 {
            let t = random_rational(&mut rng, 60, 7).min(top.clone());
            let closed = mass_plus(&p, &t, MassMethod::Closed).unwrap();
            let integral = mass_plus(&p, &t, MassMethod::Integral).unwrap();
            let oracle: Rational = e.iter().map(|x| x.clone().min(t.clone())).sum();
            if closed != integral || closed != oracle {
                mass_bad += 1;
            }
        }
    }

    let series = [
        ("P2 O(1)", p2()),
        ("P1xP1 O(1,1)", q(1, 1)),
        ("P2 vanishing", vanishing_subseries(&ModelVariety::projective(2, 1).unwrap())),
        ("P3 O(1)", complete_series(&ModelVariety::projective(3, 1).unwrap())),
        ("P1xP1 O(2,1)", q(2, 1)),
    ];
    let mut slice_bad = Vec::new();
    let mut samples = 0;
    for (name, s) in &series {
        let n = s.model().dim();
        let mu = nakayama_mu(s, 6).unwrap();
        let hat = filtered_body(s, &coord(n), 6).unwrap().body;
        for _ in 0..20 {
            let t = random_rational(&mut rng, 24, 12).min(mu.clone());
            samples += 1;
            let level = okounkov_body(&subseries_vt(s, &t).unwrap(), &coord(n), 6).unwrap().body;
            if hat.slice(n, SliceMode::Equal, &t).unwrap() != level {
                slice_bad.push(format!("{name} t={t}"));
            }
        }
    }

    let mut shipped_bad = Vec::new();
    for file in ["p2.json", "p1xp1.json", "p2_vanishing.json"] {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(file);
        let cfg = validate(&std::fs::read_to_string(&path).unwrap(), Some(file)).unwrap();
        let s = cfg.build_series();
        let n = s.model().dim();
        let mu = nakayama_mu(&s, cfg.m_max).unwrap();
        let body = okounkov_body(&s, &cfg.flag(FlagKind::Infinitesimal), cfg.m_max).unwrap().body;
        let contained = body.is_subset_of(&SimplexKind::Inverted.simplex(n, &mu));
        let slope = integrated_volume(&s, cfg.m_max).unwrap().derivative();
        let s0 = slope.eval(&int(0));
        let nf: Rational = (1..=n as i64).map(int).product();
        let simplex = Polynomial::monomial(int(1) / nf, n);
        let gap = |p: &Polynomial| simplex.sub(&Polynomial::constant(s0.clone())).add(p);
        let end = slope.domain().map(|(_, hi)| hi.clone()).unwrap_or_else(Rational::zero);
        let bounded = slope.intervals().all(|(a, b, p)| gap(p).is_nonnegative_on(a, b))
            && !gap(&Polynomial::zero()).eval(&end).is_negative();
        if !contained || !bounded {
            shipped_bad.push(format!("{file}: contained={contained} bounded={bounded}"));
        }
    }
    Outcome {
        ok: mass_bad == 0 && slice_bad.is_empty() && shipped_bad.is_empty(),
        detail: format!(
            "mass mismatches {mass_bad}/10000, slice mismatches {}/{samples} {slice_bad:?}, shipped {shipped_bad:?}",
            slice_bad.len()
        ),
    }
}

fn random_polytope(rng: &mut ChaCha8Rng, dim: usize) -> RationalPolytope {
    loop {
        let count = rng.gen_range(dim + 1..=dim + 6);
        let pts: Vec<Vec<Rational>> = (0..count)
            .map(|_| (0..dim).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect())
            .collect();
        let p = RationalPolytope::convex_hull(&pts, dim).unwrap();
        if p.is_full_dimensional() {
            return p;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    let mut checked = 0;
    for dim in 2..=4 {
        for i in 0..50 {
            let p = random_polytope(&mut rng, dim);
            let vol = p.volume();
            for axis in 0..dim {
                checked += 1;
                if p.slice_volume_profile(axis).integral() != vol {
                    bad.push(format!("dim {dim} #{i} axis {axis}"));
                }
            }
        }
    }
    Outcome { ok: bad.is_empty(), detail: format!("{checked} profiles, mismatches {bad:?}") }
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, u64); 7] = [
        (1, "P1xP1 integrated volume and slice profile, exact", criterion_1, 5),
        (2, "P2 jumping profile and integrated volume, exact", criterion_2, 5),
        (3, "mass-limit convergence at m = 40", criterion_3, 30),
        (4, "Seshadri constant = xi~ = extracted value on ample models", criterion_4, 60),
        (5, "vanishing subseries on P2: xi~ = xi = 1, eps = 0", criterion_5, 60),
        (6, "oracle equivalence suites", criterion_6, 60),
        (7, "slice profiles integrate to the volume", criterion_7, 60),
    ];
    let mut failed = 0;
    for (id, title, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = outcome.ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id}: {} {title} ({:.2} s, limit {limit} s) {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    println!("{} of 7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
