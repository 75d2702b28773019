//! Hilbert series, dimension, degree and lengths, all read off monomial
//! leading-term ideals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::limits::Limits;
use crate::modmat::{ModulePresentation, SubmoduleBasis};
use crate::poly::{Coefficient, Monomial, Polynomial, RingContext};

/// Minimally generated monomial ideal in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())));
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn with(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain(std::iter::once(m)))
    }

    fn quotient_var(&self, i: usize) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| {
            let mut h = g.clone();
            let e = h.exponent_mut(i);
            *e = e.saturating_sub(1);
            h
        });
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `R/M`,
    /// coefficients from degree 0 upwards.
    pub fn series_numerator(&self) -> Vec<BigInt> {
        let mut n = numerator(self);
        trim(&mut n);
        n
    }
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn add_shifted(acc: &mut Vec<BigInt>, p: &[BigInt], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn mul_one_minus_t_pow(p: &[BigInt], a: usize) -> Vec<BigInt> {
    let mut out = p.to_vec();
    out.resize(p.len() + a, BigInt::zero());
    for (k, c) in p.iter().enumerate() {
        out[k + a] -= c;
    }
    out
}

fn numerator(m: &MonomialIdeal) -> Vec<BigInt> {
    if m.gens.is_empty() {
        return vec![BigInt::one()];
    }
    if m.gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pure: Option<Vec<usize>> = m
        .gens
        .iter()
        .map(|g| {
            let mut support = g.exponents().iter().enumerate().filter(|(_, &e)| e > 0);
            let first = support.next().map(|(i, _)| i);
            if support.next().is_some() {
                None
            } else {
                first
            }
        })
        .collect();
    if pure.is_some() {
        // minimal pure powers sit in distinct variables
        let mut out = vec![BigInt::one()];
        for g in &m.gens {
            out = mul_one_minus_t_pow(&out, g.degree() as usize);
        }
        return out;
    }
    let g = m
        .gens
        .iter()
        .find(|g| g.exponents().iter().filter(|&&e| e > 0).count() > 1)
        .expect("some generator is mixed");
    let i = g
        .exponents()
        .iter()
        .enumerate()
        .max_by(|(ia, ea), (ib, eb)| ea.cmp(eb).then(ib.cmp(ia)))
        .map(|(i, _)| i)
        .expect("nonempty");
    let x = Monomial::variable(m.nvars, i);
    let mut out = numerator(&m.with(x));
    let q = numerator(&m.quotient_var(i));
    add_shifted(&mut out, &q, 1);
    trim(&mut out);
    out
}

/// Artinian length, or `Infinite` for positive-dimensional quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// Hilbert series data of `R/I`, taken from the leading-term ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `N(t)` with `HS(t) = N(t) / (1 - t)^n`, lowest degree first.
    pub numerator: Vec<BigInt>,
    /// Krull dimension; `None` for the zero ring.
    pub dimension: Option<usize>,
    /// Degree (multiplicity) of the series at its pole; 0 for the zero ring.
    pub degree: u64,
    pub length: Length,
}

impl HilbertData {
    pub fn of_monomial_ideal(m: &MonomialIdeal) -> Self {
        let num = m.series_numerator();
        if num.is_empty() {
            return HilbertData {
                numerator: num,
                dimension: None,
                degree: 0,
                length: Length::Finite(0),
            };
        }
        let mut q = num.clone();
        let mut k = 0;
        // divide by (1 - t) while t = 1 is a root
        while k < m.nvars && q.iter().sum::<BigInt>().is_zero() {
            let mut out = Vec::with_capacity(q.len());
            let mut acc = BigInt::zero();
            for c in &q[..q.len() - 1] {
                acc += c;
                out.push(acc.clone());
            }
            q = out;
            k += 1;
        }
        let degree = q.iter().sum::<BigInt>();
        let dim = m.nvars - k;
        HilbertData {
            numerator: num,
            dimension: Some(dim),
            degree: degree.to_u64().unwrap_or(u64::MAX),
            length: if dim == 0 {
                Length::Finite(degree.to_u64().unwrap_or(u64::MAX))
            } else {
                Length::Infinite
            },
        }
    }

    /// The numerator as a polynomial in `t`, e.g. `1 - 2*t + t^2`.
    pub fn numerator_string(&self) -> String {
        let ring = RingContext::grevlex(["t"]).expect("one variable");
        let terms = self.numerator.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            (
                Monomial::from_exponents(&[k as u32]),
                Coefficient::from_integer(c.clone()),
            )
        });
        Polynomial::from_terms(&ring, terms).to_string()
    }
}

/// Monomial ideal of leading monomials of the reduced basis.
pub fn leading_term_ideal(i: &Ideal, limits: &Limits) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::new(i.ring().nvars(), i.leading_monomials(limits)?))
}

/// The leading-term ideal as an [`Ideal`] of the same ring.
pub fn leading_term_ideal_as_ideal(i: &Ideal, limits: &Limits) -> Result<Ideal> {
    let m = leading_term_ideal(i, limits)?;
    Ideal::new(
        i.ring(),
        m.gens.into_iter().map(|g| Polynomial::monomial(i.ring(), g, Coefficient::one())),
    )
}

pub fn hilbert_data(i: &Ideal, limits: &Limits) -> Result<HilbertData> {
    Ok(HilbertData::of_monomial_ideal(&leading_term_ideal(i, limits)?))
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Number of degree-`d` monomials outside a monomial ideal.
pub fn monomial_hilbert_function(m: &MonomialIdeal, d: u64) -> u64 {
    let n = m.nvars as i64;
    let num = m.series_numerator();
    let mut acc = BigInt::zero();
    for (k, c) in num.iter().enumerate() {
        let e = d as i64 - k as i64;
        if e < 0 {
            break;
        }
        acc += c * if n == 0 {
            BigInt::from(u8::from(e == 0))
        } else {
            binomial(e + n - 1, n - 1)
        };
    }
    debug_assert!(!acc.is_negative());
    acc.to_u64().unwrap_or(u64::MAX)
}

/// `dim_Q (R/LT(I))_d`.
pub fn hilbert_function(i: &Ideal, d: u64, limits: &Limits) -> Result<u64> {
    Ok(monomial_hilbert_function(&leading_term_ideal(i, limits)?, d))
}

pub fn artinian_length(i: &Ideal, limits: &Limits) -> Result<Length> {
    Ok(hilbert_data(i, limits)?.length)
}

/// Samples `length(R/I^s)` for `s = 1..=n+3` and returns the `n`-th forward
/// difference, `n` the number of variables. The last two differences must
/// agree.
pub fn hilbert_samuel_multiplicity(i: &Ideal, limits: &Limits) -> Result<u64> {
    Ok(hilbert_samuel_profile(i, limits)?.multiplicity)
}

/// Length samples behind [`hilbert_samuel_multiplicity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamuelProfile {
    pub lengths: Vec<u64>,
    pub multiplicity: u64,
}

pub fn hilbert_samuel_profile(i: &Ideal, limits: &Limits) -> Result<SamuelProfile> {
    let n = i.ring().nvars();
    let s_fit = n + 3;
    let mut lengths = Vec::with_capacity(s_fit);
    for s in 1..=s_fit {
        match artinian_length(&i.power(s as u32)?, limits)? {
            Length::Finite(l) => lengths.push(l),
            Length::Infinite => {
                return Err(AlgebraError::NotArtinian(format!("R/{i} has positive dimension")));
            }
        }
    }
    let mut diffs: Vec<BigInt> = lengths.iter().map(|&l| BigInt::from(l)).collect();
    for _ in 0..n {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let k = diffs.len();
    if k < 2 || diffs[k - 1] != diffs[k - 2] || diffs[k - 1].is_negative() {
        return Err(AlgebraError::FitInconsistency(s_fit));
    }
    Ok(SamuelProfile {
        lengths,
        multiplicity: diffs[k - 1].to_u64().unwrap_or(u64::MAX),
    })
}

/// Length of `coker(relations)`: the count of standard monomials over all
/// positions of a position-over-term basis.
pub fn module_length(p: &ModulePresentation, limits: &Limits) -> Result<Length> {
    let basis = SubmoduleBasis::new(p.ring(), p.rank0(), &p.relations().columns(), limits)?;
    let mut total = 0u64;
    for leads in basis.leading_monomials_by_position() {
        let m = MonomialIdeal::new(p.ring().nvars(), leads);
        match HilbertData::of_monomial_ideal(&m).length {
            Length::Finite(l) => total += l,
            Length::Infinite => return Ok(Length::Infinite),
        }
    }
    Ok(Length::Finite(total))
}
