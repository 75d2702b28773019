use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::{MonomialOrder, RingContext};
use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational, always in lowest terms.
pub type Coefficient = BigRational;

/// A polynomial in canonical form: terms sorted in descending monomial order,
/// no zero coefficients. Two polynomials are equal iff their term lists are.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingContext,
    terms: Vec<(Monomial, Coefficient)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn check_same(a: &RingContext, b: &RingContext) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch(format!("{a} vs {b}")))
    }
}

impl Polynomial {
    pub fn zero(ring: &RingContext) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingContext) -> Self {
        Self::constant(ring, Coefficient::one())
    }

    pub fn constant(ring: &RingContext, c: Coefficient) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_int(ring: &RingContext, c: i64) -> Self {
        Self::constant(ring, Coefficient::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &RingContext, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::monomial(ring, Monomial::variable(ring.nvars(), i), Coefficient::one()))
    }

    pub fn monomial(ring: &RingContext, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(ring: &RingContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
            *acc.entry(m).or_insert_with(Coefficient::zero) += c;
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self::from_unsorted(ring, terms)
    }

    fn from_unsorted(ring: &RingContext, mut terms: Vec<(Monomial, Coefficient)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(b.0.exponents(), a.0.exponents()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_sorted_terms(ring: &RingContext, terms: Vec<(Monomial, Coefficient)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coefficient)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coefficient)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True when variable `i` occurs in some term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }

    /// True when every term has the same total degree in the given variables.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let deg = |m: &Monomial| -> u64 { vars.iter().map(|&i| m.exponents()[i] as u64).sum() };
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d0 = deg(m0);
                self.terms.iter().all(|(m, _)| deg(m) == d0)
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &Coefficient| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(a[i].0.exponents(), b[j].0.exponents()) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(AlgebraError::ExponentOverflow)?;
                *acc.entry(m).or_insert_with(Coefficient::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self::from_unsorted(&self.ring, terms))
    }

    /// Multiplies by a single term. Order compatibility keeps the result sorted.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| {
                mm.checked_mul(m)
                    .map(|p| (p, cc * c))
                    .ok_or(AlgebraError::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let m = m.checked_pow(k).ok_or(AlgebraError::ExponentOverflow)?;
            return Ok(Polynomial::monomial(&self.ring, m, num_traits::pow(c.clone(), k as usize)));
        }
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Reinterprets the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &RingContext) -> Result<Polynomial> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let map = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let used = self.uses_var(i);
                match target.var_index(v) {
                    Some(j) => Ok(Some(j)),
                    None if !used => Ok(None),
                    None => Err(AlgebraError::UnknownVariable(v.clone())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    *out.exponent_mut(j) = e;
                }
            }
            (out, c.clone())
        });
        let terms: Vec<_> = terms.collect();
        Ok(Self::from_unsorted(target, terms))
    }

    /// Applies the ring morphism sending each listed variable to its image.
    ///
    /// The images must share one ring, which becomes the result's ring.
    /// Variables without an assignment map to the same-named variable there.
    pub fn substitute<S: AsRef<str>>(&self, assignments: &[(S, Polynomial)]) -> Result<Polynomial> {
        let target = match assignments.first() {
            None => return Ok(self.clone()),
            Some((_, p)) => p.ring.clone(),
        };
        for (name, img) in assignments {
            check_same(&target, &img.ring)?;
            if self.ring.var_index(name.as_ref()).is_none() {
                return Err(AlgebraError::UnknownVariable(name.as_ref().to_string()));
            }
        }
        let mut images: Vec<Option<Polynomial>> = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            let img = match assignments.iter().find(|(n, _)| n.as_ref() == v) {
                Some((_, p)) => Some(p.clone()),
                None if !self.uses_var(i) => None,
                None => Some(Polynomial::var(&target, v)?),
            };
            images.push(img);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().expect("used variable has an image");
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().checked_mul(img)?;
                    cache.push(next);
                }
                term = term.checked_mul(&cache[e as usize])?;
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Coefficient::zero) += tc;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self::from_unsorted(&target, terms))
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        check_same(&self.ring, &g.ring)?;
        let (glm, glc) = match g.leading_term() {
            None => return Err(AlgebraError::InvalidArgument("division by zero".into())),
            Some(t) => t.clone(),
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(qm) = m.checked_div(&glm) else {
                return Ok(None);
            };
            let qc = &c / &glc;
            rem = rem.checked_sub(&g.mul_term(&qm, &qc)?)?;
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_sorted_terms(&self.ring, quot)))
    }

    /// Total comparison used to print generator lists in a stable order:
    /// larger leading terms first, ties broken term by term.
    pub fn cmp_canonical(&self, other: &Polynomial) -> Ordering {
        let order: &MonomialOrder = self.ring.order();
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let o = order.cmp(a.0.exponents(), b.0.exponents());
            if o != Ordering::Equal {
                return o.reverse();
            }
            let o = a.1.cmp(&b.1);
            if o != Ordering::Equal {
                return o.reverse();
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Multiplies through by the lcm of denominators and divides by the
    /// content, making the leading coefficient positive.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let num = self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| {
            acc.gcd(&(c * Coefficient::from_integer(den.clone())).to_integer())
        });
        let mut factor = Coefficient::new(den, num);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect(concat!("Polynomial::", stringify!($method)))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

// Operator forms panic on ring mismatch or exponent overflow; the checked_*
// methods report those as errors.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
