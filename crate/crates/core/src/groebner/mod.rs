//! Gröbner bases and the ideal toolkit built on them.
//!
//! Every derived operation (intersection, quotient, saturation, elimination,
//! radical membership) reduces to a basis computation in a ring extended by
//! auxiliary variables from the reserved `#k` namespace, placed in front of
//! the existing variables under an elimination order.

pub(crate) mod kernel;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::limits::Limits;
use crate::poly::{Monomial, Polynomial, RingContext};
use kernel::{Term, Vector};

pub(crate) fn to_vector(p: &Polynomial, pos: u32) -> Vector {
    p.terms()
        .iter()
        .map(|(m, c)| Term {
            pos,
            mon: m.clone(),
            coeff: c.clone(),
        })
        .collect()
}

pub(crate) fn from_vector(ring: &RingContext, v: Vector) -> Polynomial {
    Polynomial::from_sorted_terms(ring, v.into_iter().map(|t| (t.mon, t.coeff)).collect())
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the order of
/// their common ring.
pub fn groebner_basis(ring: &RingContext, gens: &[Polynomial], limits: &Limits) -> Result<Vec<Polynomial>> {
    for g in gens {
        if g.ring() != ring {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", g.ring(), ring)));
        }
    }
    let inputs = gens.iter().map(|g| to_vector(g, 0)).collect();
    let basis = kernel::groebner(ring.order(), inputs, limits, true)?;
    Ok(basis.into_iter().map(|v| from_vector(ring, v)).collect())
}

/// Remainder of `p` on multivariate division by `divisors`, taken in list
/// order. No term of the result is divisible by a leading monomial of
/// `divisors`.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        if g.ring() != p.ring() {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", g.ring(), p.ring())));
        }
    }
    let vs: Vec<Vector> = divisors.iter().map(|g| to_vector(g, 0)).collect();
    let refs: Vec<&[Term]> = vs.iter().map(|v| v.as_slice()).collect();
    let r = kernel::reduce(p.ring().order(), to_vector(p, 0), &refs)?;
    Ok(from_vector(p.ring(), r))
}

/// An ideal given by generators, with a lazily computed reduced Gröbner basis
/// for the ring's order. Clones share the cache.
#[derive(Clone)]
pub struct Ideal {
    ring: RingContext,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<Vec<Polynomial>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({} in {})", self, self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.sorted_generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new<I>(ring: &RingContext, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial>,
    {
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch(format!("{} vs {}", g.ring(), ring)));
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(ring: &RingContext) -> Self {
        Ideal::new(ring, []).expect("empty generator list")
    }

    pub fn unit(ring: &RingContext) -> Self {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// Ideal generated by the named variables.
    pub fn of_vars<S: AsRef<str>>(ring: &RingContext, names: &[S]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| Polynomial::var(ring, n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators in canonical print order with duplicates removed.
    pub fn sorted_generators(&self) -> Vec<Polynomial> {
        let mut g = self.gens.clone();
        g.sort_by(|a, b| a.cmp_canonical(b));
        g.dedup();
        g
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self, limits: &Limits) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = groebner_basis(&self.ring, &self.gens, limits)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    /// The ideal generated by its own reduced Gröbner basis.
    pub fn normalized(&self, limits: &Limits) -> Result<Ideal> {
        let gb = self.groebner_basis(limits)?.to_vec();
        let out = Ideal::new(&self.ring, gb.clone())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn is_unit(&self, limits: &Limits) -> Result<bool> {
        Ok(self.groebner_basis(limits)?.iter().any(|g| g.is_constant()))
    }

    pub fn reduce(&self, p: &Polynomial, limits: &Limits) -> Result<Polynomial> {
        normal_form(p, self.groebner_basis(limits)?)
    }

    pub fn contains(&self, p: &Polynomial, limits: &Limits) -> Result<bool> {
        Ok(self.reduce(p, limits)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, certified by mutual membership.
    pub fn equals(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        Ok(self.contains_ideal(other, limits)? && other.contains_ideal(self, limits)?)
    }

    /// First generator of `other` that is not in `self`.
    pub fn non_member_of(&self, other: &Ideal, limits: &Limits) -> Result<Option<Polynomial>> {
        for g in other.sorted_generators() {
            if !self.contains(&g, limits)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    /// Tests whether some power of `p` lies in the ideal via `1 ∈ I + (1 - z p)`.
    pub fn radical_contains(&self, p: &Polynomial, limits: &Limits) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", p.ring(), self.ring)));
        }
        if p.is_zero() {
            return Ok(true);
        }
        let z = self.ring.fresh_reserved();
        let big = self.ring.with_front_block(&[z.as_str()])?;
        let zp = Polynomial::var(&big, &z)?.checked_mul(&p.embed(&big)?)?;
        let mut gens = self.embed(&big)?.gens;
        gens.push(Polynomial::one(&big).checked_sub(&zp)?);
        Ideal::new(&big, gens)?.is_unit(limits)
    }

    pub fn embed(&self, target: &RingContext) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        dedup(&mut gens);
        Ideal::new(&self.ring, gens)
    }

    /// `I^s`, generated by all s-fold products of generators. `I^0 = (1)`.
    pub fn power(&self, s: u32) -> Result<Ideal> {
        if s == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let gens = self.sorted_generators();
        // layer[k] holds products whose last factor index is k
        let mut layer: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
        for _ in 1..s {
            let mut next: Vec<Vec<Polynomial>> = vec![Vec::new(); gens.len()];
            for (k, g) in gens.iter().enumerate() {
                for prev in layer.iter().take(k + 1) {
                    for p in prev {
                        next[k].push(p.checked_mul(g)?);
                    }
                }
            }
            layer = next;
        }
        let mut out: Vec<Polynomial> = layer.into_iter().flatten().collect();
        dedup(&mut out);
        Ideal::new(&self.ring, out)
    }

    /// `I ∩ J` by eliminating `z` from `z I + (1 - z) J`.
    pub fn intersect(&self, other: &Ideal, limits: &Limits) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let z = self.ring.fresh_reserved();
        let big = self.ring.with_front_block(&[z.as_str()])?;
        let zv = Polynomial::var(&big, &z)?;
        let one_minus = Polynomial::one(&big).checked_sub(&zv)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(zv.checked_mul(&g.embed(&big)?)?);
        }
        for g in &other.gens {
            gens.push(one_minus.checked_mul(&g.embed(&big)?)?);
        }
        let big_ideal = Ideal::new(&big, gens)?;
        big_ideal.eliminate_front(1, &self.ring, limits)
    }

    /// Basis elements free of the first `k` variables of an elimination ring,
    /// mapped into `target`.
    fn eliminate_front(&self, k: usize, target: &RingContext, limits: &Limits) -> Result<Ideal> {
        let gb = self.groebner_basis(limits)?;
        let kept = gb
            .iter()
            .filter(|g| (0..k).all(|i| !g.uses_var(i)))
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, kept)
    }

    /// `I : J = { f : f J ⊆ I }`.
    pub fn quotient(&self, other: &Ideal, limits: &Limits) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in other.sorted_generators() {
            let q = self.quotient_by(&g, limits)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q, limits)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    fn quotient_by(&self, g: &Polynomial, limits: &Limits) -> Result<Ideal> {
        if g.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, [g.clone()])?;
        let inter = self.intersect(&principal, limits)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            let q = h
                .div_exact(g)?
                .expect("elements of (g) are divisible by g");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J^∞`, iterating quotients until the chain stabilises.
    pub fn saturate(&self, other: &Ideal, limits: &Limits) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..limits.sat_bound {
            let next = current.quotient(other, limits)?;
            if current.contains_ideal(&next, limits)? {
                return Ok(current);
            }
            current = next;
        }
        Err(AlgebraError::SaturationBound(limits.sat_bound))
    }

    /// `I ∩ Q[remaining variables]`, returned in the smaller ring.
    pub fn eliminate<S: AsRef<str>>(&self, vars: &[S], limits: &Limits) -> Result<Ideal> {
        let target = self.ring.without_vars(vars)?;
        if vars.is_empty() {
            return self.embed(&target);
        }
        let big = self.ring.with_front_block(vars)?;
        self.embed(&big)?.eliminate_front(vars.len(), &target, limits)
    }

    /// Monomials generating the leading-term ideal.
    pub fn leading_monomials(&self, limits: &Limits) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis(limits)?
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect())
    }
}

fn dedup(v: &mut Vec<Polynomial>) {
    let mut seen = std::collections::HashSet::new();
    v.retain(|p| seen.insert(p.clone()));
}
