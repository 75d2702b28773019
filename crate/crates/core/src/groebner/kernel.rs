//! Buchberger's algorithm over free modules `R^k` with a position-over-term
//! order. Ideals are the rank-one case.
//!
//! Pairs are pruned with the Gebauer–Möller update (chain criterion, plus the
//! coprime criterion in rank one) and selected by (sugar, lcm, indices), which
//! makes every run deterministic.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::limits::Limits;
use crate::poly::{Coefficient, Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: u32,
    pub mon: Monomial,
    pub coeff: Coefficient,
}

/// Sparse module element, terms sorted descending.
pub(crate) type Vector = Vec<Term>;

/// Position-over-term: lower position index ranks higher.
pub(crate) fn cmp_pot(order: &MonomialOrder, pa: u32, ma: &Monomial, pb: u32, mb: &Monomial) -> Ordering {
    match pa.cmp(&pb) {
        Ordering::Equal => order.cmp(ma.exponents(), mb.exponents()),
        o => o.reverse(),
    }
}

/// `f - c * m * g`.
fn axpy(order: &MonomialOrder, f: &[Term], c: &Coefficient, m: &Monomial, g: &[Term]) -> Result<Vector> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut scaled = g.iter().map(|t| -> Result<Term> {
        Ok(Term {
            pos: t.pos,
            mon: t.mon.checked_mul(m).ok_or(AlgebraError::ExponentOverflow)?,
            coeff: -(c * &t.coeff),
        })
    });
    let mut pending = scaled.next().transpose()?;
    while let Some(gt) = pending.take() {
        while i < f.len() && cmp_pot(order, f[i].pos, &f[i].mon, gt.pos, &gt.mon) == Ordering::Greater {
            out.push(f[i].clone());
            i += 1;
        }
        if i < f.len() && f[i].pos == gt.pos && f[i].mon == gt.mon {
            let s = &f[i].coeff + &gt.coeff;
            if !s.is_zero() {
                out.push(Term { coeff: s, ..gt });
            }
            i += 1;
        } else {
            out.push(gt);
        }
        pending = scaled.next().transpose()?;
    }
    out.extend_from_slice(&f[i..]);
    Ok(out)
}

fn find_reducer<'a>(t: &Term, basis: &'a [&'a [Term]]) -> Option<&'a [Term]> {
    basis
        .iter()
        .copied()
        .find(|g| !g.is_empty() && g[0].pos == t.pos && g[0].mon.divides(&t.mon))
}

/// Full normal form of `f` against `basis`, using the first divisor found in
/// list order at every step.
pub(crate) fn reduce(order: &MonomialOrder, f: Vector, basis: &[&[Term]]) -> Result<Vector> {
    let mut rem: Vector = Vec::new();
    let mut f = f;
    let mut start = 0;
    while start < f.len() {
        match find_reducer(&f[start], basis) {
            Some(g) => {
                let lead = &f[start];
                let m = lead.mon.checked_div(&g[0].mon).expect("divisor checked");
                let c = &lead.coeff / &g[0].coeff;
                f = axpy(order, &f[start..], &c, &m, g)?;
                start = 0;
            }
            None => {
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

/// Reduces only until the leading term is irreducible.
fn reduce_lead(order: &MonomialOrder, mut f: Vector, basis: &[&[Term]]) -> Result<Vector> {
    while let Some(lead) = f.first() {
        match find_reducer(lead, basis) {
            Some(g) => {
                let m = lead.mon.checked_div(&g[0].mon).expect("divisor checked");
                let c = &lead.coeff / &g[0].coeff;
                f = axpy(order, &f, &c, &m, g)?;
            }
            None => break,
        }
    }
    Ok(f)
}

fn make_monic(mut f: Vector) -> Vector {
    if let Some(lc) = f.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = lc.recip();
            for t in &mut f {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
    f
}

fn max_degree(f: &[Term]) -> u64 {
    f.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
}

struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    sugar: u64,
}

struct Buchberger<'a> {
    order: &'a MonomialOrder,
    product_criterion: bool,
    polys: Vec<Vector>,
    sugar: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> Buchberger<'a> {
    fn lead(&self, i: usize) -> (&Monomial, u32) {
        let t = &self.polys[i][0];
        (&t.mon, t.pos)
    }

    fn reducers(&self) -> Vec<&[Term]> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.as_slice())
            .collect()
    }

    /// Gebauer–Möller update for the new element `h`.
    fn insert(&mut self, h: Vector, sugar: u64) {
        let hi = self.polys.len();
        let hpos = h[0].pos;
        let hlm = h[0].mon.clone();
        self.polys.push(h);
        self.sugar.push(sugar);

        let cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g] && self.lead(g).1 == hpos)
            .map(|g| (g, self.lead(g).0.lcm(&hlm)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = self.product_criterion && self.lead(*g).0.is_coprime(&hlm);
            let dominated = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone(), coprime));
            }
        }

        let polys = &self.polys;
        let lcm_with = |g: usize| polys[g][0].mon.lcm(&hlm);
        self.pairs.retain(|p| {
            !(p.pos == hpos && hlm.divides(&p.lcm) && lcm_with(p.i) != p.lcm && lcm_with(p.j) != p.lcm)
        });

        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let sg = self.sugar[g] + lcm.degree() - self.polys[g][0].mon.degree();
            let sh = sugar + lcm.degree() - hlm.degree();
            self.pairs.push(Pair {
                i: g,
                j: hi,
                pos: hpos,
                lcm,
                sugar: sg.max(sh),
            });
        }

        for g in 0..hi {
            if self.active[g] && self.lead(g).1 == hpos && hlm.divides(self.lead(g).0) {
                self.active[g] = false;
            }
        }
        self.active.push(true);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| cmp_pot(order, a.pos, &a.lcm, b.pos, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Result<Vector> {
        let fi = &self.polys[p.i];
        let fj = &self.polys[p.j];
        let mi = p.lcm.checked_div(&fi[0].mon).expect("lcm");
        let mj = p.lcm.checked_div(&fj[0].mon).expect("lcm");
        let lifted = axpy(self.order, &[], &-Coefficient::one(), &mi, fi)?;
        axpy(self.order, &lifted, &Coefficient::one(), &mj, fj)
    }
}

/// Reduced Gröbner basis of the submodule generated by `inputs`, elements
/// monic and sorted by descending leading term.
pub(crate) fn groebner(
    order: &MonomialOrder,
    inputs: Vec<Vector>,
    limits: &Limits,
    product_criterion: bool,
) -> Result<Vec<Vector>> {
    let mut bb = Buchberger {
        order,
        product_criterion,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in inputs {
        if f.is_empty() {
            continue;
        }
        let s = max_degree(&f);
        let h = reduce_lead(order, f, &bb.reducers())?;
        if h.is_empty() {
            continue;
        }
        bb.insert(make_monic(h), s);
    }
    let mut steps = 0usize;
    while let Some(p) = bb.pop_pair() {
        steps += 1;
        if steps > limits.max_pairs {
            return Err(AlgebraError::ResourceLimit(format!(
                "more than {} S-pairs",
                limits.max_pairs
            )));
        }
        if p.lcm.degree() > limits.max_degree as u64 {
            return Err(AlgebraError::ResourceLimit(format!(
                "S-pair of degree {} exceeds the cap {}",
                p.lcm.degree(),
                limits.max_degree
            )));
        }
        let s = bb.spoly(&p)?;
        let h = reduce_lead(order, s, &bb.reducers())?;
        if !h.is_empty() {
            bb.insert(make_monic(h), p.sugar);
        }
    }
    interreduce(order, bb.reducers().into_iter().map(|v| v.to_vec()).collect())
}

/// Turns a minimal basis (pairwise non-dividing leads) into the reduced one.
fn interreduce(order: &MonomialOrder, basis: Vec<Vector>) -> Result<Vec<Vector>> {
    let mut out = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<&[Term]> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, v)| v.as_slice())
            .collect();
        let tail = reduce(order, g[1..].to_vec(), &others)?;
        let mut h = vec![g[0].clone()];
        h.extend(tail);
        out.push(make_monic(h));
    }
    out.sort_by(|a, b| cmp_pot(order, b[0].pos, &b[0].mon, a[0].pos, &a[0].mon));
    Ok(out)
}
