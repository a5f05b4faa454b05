//! Exact univariate polynomials and piecewise polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{common_denominator, from_bigint, rat, Rational};
use super::GeomError;

/// Dense polynomial with ascending coefficients; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer((k + 1).into())),
        );
        Self::new(coeffs)
    }

    /// `∫_a^b p(t) dt`.
    pub fn integrate(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Coefficients of `s ↦ p(a + s)`.
    pub fn shift(&self, a: &Rational) -> Self {
        let mut out = Polynomial::zero();
        let lin = Polynomial::new(vec![a.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&Polynomial::constant(c.clone()));
        }
        out
    }

    /// Quotient and remainder of polynomial division.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] / &lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * dc;
            }
            quot[k - dd] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p')`, made monic.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Product of the irreducible factors of odd multiplicity (Yun's decomposition), monic.
    pub fn odd_part(&self) -> Self {
        let one = Polynomial::constant(Rational::one());
        if self.degree().unwrap_or(0) == 0 {
            return one;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut w = d.div_rem(&a0).0.sub(&b.derivative());
        let mut out = one;
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&w);
            if i % 2 == 1 {
                out = out.mul(&a);
            }
            b = b.div_rem(&a).0;
            w = w.div_rem(&a).0.sub(&b.derivative());
            i += 1;
        }
        out.monic()
    }

    /// Whether `p(t) >= 0` for every `t` in `[a, b]`, decided exactly.
    pub fn is_nonnegative_on(&self, a: &Rational, b: &Rational) -> bool {
        if self.is_zero() {
            return true;
        }
        if self.eval(a).is_negative() || self.eval(b).is_negative() {
            return false;
        }
        if a >= b {
            return true;
        }
        if self.sign_right_of(a) < 0 {
            return false;
        }
        let odd = self.odd_part();
        if odd.degree().unwrap_or(0) == 0 {
            return true;
        }
        let chain = odd.sturm_chain();
        let mut crossings = sign_changes(&chain, a) - sign_changes(&chain, b);
        if odd.eval(b).is_zero() {
            crossings -= 1;
        }
        crossings == 0
    }

    /// Lagrange interpolation through `(x_k, y_k)` with distinct nodes.
    pub fn interpolate(nodes: &[(Rational, Rational)]) -> Self {
        let mut out = Polynomial::zero();
        for (i, (xi, yi)) in nodes.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Polynomial::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in nodes.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Polynomial::new(vec![-xj.clone(), Rational::one()]));
                    denom *= xi - xj;
                }
            }
            out = out.add(&basis.scale(&(yi / denom)));
        }
        out
    }

    /// Sign of `p` on `(a, a + δ)` for all small `δ > 0`; zero only for the zero polynomial.
    pub fn sign_right_of(&self, a: &Rational) -> i32 {
        let shifted = self.shift(a);
        match shifted.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }

    /// Rational roots, found with the rational root theorem.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * from_bigint(den.clone())).to_integer()).collect();
        let lowest = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
        let mut roots = Vec::new();
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let a0 = ints[lowest].abs();
        let an = ints.last().unwrap().abs();
        if ints.len() - lowest == 1 {
            return roots;
        }
        let (Some(a0s), Some(ans)) = (a0.to_u64(), an.to_u64()) else {
            return roots;
        };
        if a0s > 1 << 40 || ans > 1 << 40 {
            return roots;
        }
        let p_div = divisors(a0s);
        let q_div = divisors(ans);
        let mut seen = std::collections::BTreeSet::new();
        for p in &p_div {
            for q in &q_div {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(*p as i64 * sign), BigInt::from(*q as i64));
                    if seen.insert(cand.clone()) && self.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    fn sturm_chain(&self) -> Vec<Polynomial> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(r.scale(&-Rational::one()));
        }
        chain.pop();
        chain
    }

    /// Smallest root in `[lo, hi]`, exact when rational, otherwise bracketed to `tol`.
    pub fn smallest_root_in(&self, lo: &Rational, hi: &Rational, tol: &Rational) -> Option<RootBound> {
        if self.is_zero() {
            return Some(RootBound::Exact(lo.clone()));
        }
        if lo > hi {
            return None;
        }
        if self.eval(lo).is_zero() {
            return Some(RootBound::Exact(lo.clone()));
        }
        let sf = self.square_free();
        if sf.degree().unwrap_or(0) == 0 {
            return None;
        }
        let chain = sf.sturm_chain();
        let count = |a: &Rational, b: &Rational| sign_changes(&chain, a) - sign_changes(&chain, b);
        if count(lo, hi) == 0 {
            return None;
        }
        if let Some(r) = sf.rational_roots().into_iter().find(|r| r > lo && r <= hi) {
            // exact unless an irrational root precedes it
            if count(lo, &r) == 1 {
                return Some(RootBound::Exact(r));
            }
        }
        let (mut a, mut b) = (lo.clone(), hi.clone());
        while &(&b - &a) > tol {
            let mid = (&a + &b) / rat(2, 1);
            if sf.eval(&mid).is_zero() && count(&a, &mid) == 1 {
                return Some(RootBound::Exact(mid));
            }
            if count(&a, &mid) >= 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        Some(RootBound::Bracketed { lo: a, hi: b })
    }
}

fn sign_changes(chain: &[Polynomial], x: &Rational) -> i64 {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A root located exactly, or inside a rational bracket when it is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootBound {
    Exact(Rational),
    Bracketed { lo: Rational, hi: Rational },
}

impl fmt::Display for RootBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootBound::Exact(r) => write!(f, "{r}"),
            RootBound::Bracketed { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

impl RootBound {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RootBound::Exact(r) => Some(r),
            RootBound::Bracketed { .. } => None,
        }
    }

    /// Representative value: the root itself, or the bracket midpoint.
    pub fn value(&self) -> Rational {
        match self {
            RootBound::Exact(r) => r.clone(),
            RootBound::Bracketed { lo, hi } => (lo + hi) / rat(2, 1),
        }
    }
}

/// Piecewise polynomial on `[t_0, t_k]` with constant extensions outside the domain.
///
/// Piece `i` is valid on `[t_i, t_{i+1}]`. A profile with a single breakpoint
/// and no pieces describes a function supported on a null set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<Rational>,
    pieces: Vec<Polynomial>,
    before: Rational,
    after: Rational,
}

impl PiecewisePolynomial {
    pub fn new(
        breakpoints: Vec<Rational>,
        pieces: Vec<Polynomial>,
        before: Rational,
        after: Rational,
    ) -> Result<Self, GeomError> {
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GeomError::InvalidPiecewise("breakpoints must be strictly increasing".into()));
        }
        if !breakpoints.is_empty() && pieces.len() + 1 != breakpoints.len() {
            return Err(GeomError::InvalidPiecewise(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                pieces.len()
            )));
        }
        if breakpoints.is_empty() && !pieces.is_empty() {
            return Err(GeomError::InvalidPiecewise("pieces without breakpoints".into()));
        }
        Ok(PiecewisePolynomial { breakpoints, pieces, before, after })
    }

    /// The zero function with an empty domain.
    pub fn zero_profile() -> Self {
        PiecewisePolynomial {
            breakpoints: Vec::new(),
            pieces: Vec::new(),
            before: Rational::zero(),
            after: Rational::zero(),
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    /// `(t_i, t_{i+1}, p_i)` for each piece.
    pub fn intervals(&self) -> impl Iterator<Item = (&Rational, &Rational, &Polynomial)> {
        self.breakpoints.windows(2).zip(&self.pieces).map(|(w, p)| (&w[0], &w[1], p))
    }

    pub fn domain(&self) -> Option<(&Rational, &Rational)> {
        Some((self.breakpoints.first()?, self.breakpoints.last()?))
    }

    pub fn value_before(&self) -> &Rational {
        &self.before
    }

    pub fn value_after(&self) -> &Rational {
        &self.after
    }

    pub fn with_extensions(mut self, before: Rational, after: Rational) -> Self {
        self.before = before;
        self.after = after;
        self
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let Some((lo, hi)) = self.domain() else {
            return self.after.clone();
        };
        if t < lo {
            return self.before.clone();
        }
        if t > hi || self.pieces.is_empty() {
            return self.after.clone();
        }
        let idx = self.breakpoints[1..].partition_point(|b| b < t);
        self.pieces[idx.min(self.pieces.len() - 1)].eval(t)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.pieces.iter().filter_map(|p| p.degree()).max()
    }

    /// True when adjacent pieces agree at every interior breakpoint.
    pub fn is_continuous(&self) -> bool {
        self.pieces
            .windows(2)
            .zip(&self.breakpoints[1..])
            .all(|(w, t)| w[0].eval(t) == w[1].eval(t))
    }

    /// `∫` over the domain.
    pub fn integral(&self) -> Rational {
        self.intervals().map(|(a, b, p)| p.integrate(a, b)).sum()
    }

    pub fn derivative(&self) -> Self {
        PiecewisePolynomial {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(Polynomial::derivative).collect(),
            before: Rational::zero(),
            after: Rational::zero(),
        }
    }

    /// `F(t) = ∫_{t_0}^{t} f`, continuous, zero before the domain and held constant after it.
    pub fn cumulative_integral(&self) -> Self {
        let mut acc = Rational::zero();
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for (a, b, p) in self.intervals() {
            let anti = p.antiderivative();
            let shift = &acc - anti.eval(a);
            pieces.push(anti.add(&Polynomial::constant(shift)));
            acc += p.integrate(a, b);
        }
        PiecewisePolynomial {
            breakpoints: self.breakpoints.clone(),
            pieces,
            before: Rational::zero(),
            after: acc,
        }
    }

    /// Applies `f` to every piece; extensions are mapped through `ext`.
    pub fn map_pieces(&self, f: impl Fn(&Polynomial) -> Polynomial, ext: impl Fn(&Rational) -> Rational) -> Self {
        PiecewisePolynomial {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(f).collect(),
            before: ext(&self.before),
            after: ext(&self.after),
        }
    }

    /// Extends the domain down to `start` with a constant piece equal to the `before` value.
    pub fn extend_left_to(&self, start: &Rational) -> Self {
        match self.breakpoints.first() {
            Some(t0) if start < t0 => {
                let mut breakpoints = vec![start.clone()];
                breakpoints.extend(self.breakpoints.iter().cloned());
                let mut pieces = vec![Polynomial::constant(self.before.clone())];
                pieces.extend(self.pieces.iter().cloned());
                PiecewisePolynomial { breakpoints, pieces, ..self.clone() }
            }
            Some(_) => self.clone(),
            None => PiecewisePolynomial {
                breakpoints: vec![start.clone()],
                pieces: Vec::new(),
                ..self.clone()
            },
        }
    }

    /// Joins adjacent pieces carrying the same polynomial.
    pub fn merge_identical_pieces(self) -> Self {
        if self.pieces.is_empty() {
            return self;
        }
        let mut breakpoints = vec![self.breakpoints[0].clone()];
        let mut pieces: Vec<Polynomial> = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            if pieces.last() == Some(p) {
                *breakpoints.last_mut().unwrap() = self.breakpoints[i + 1].clone();
            } else {
                pieces.push(p.clone());
                breakpoints.push(self.breakpoints[i + 1].clone());
            }
        }
        PiecewisePolynomial { breakpoints, pieces, ..self }
    }
}

impl fmt::Display for PiecewisePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, p) in self.intervals() {
            writeln!(f, "[{a}, {b}]: {p}")?;
        }
        Ok(())
    }
}
