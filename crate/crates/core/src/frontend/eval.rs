use super::ast::PolyExpr;
use crate::error::{AlgebraError, Result};
use crate::limits::Limits;
use crate::poly::{Polynomial, RingContext};

/// Evaluates a resolved expression. Powers of non-monomials are refused once
/// their degree would exceed `limits.max_degree`.
pub fn eval_poly(
    expr: &PolyExpr,
    ring: &RingContext,
    lookup: &dyn Fn(&str) -> Option<Polynomial>,
    limits: &Limits,
) -> Result<Polynomial> {
    let go = |e: &PolyExpr| eval_poly(e, ring, lookup, limits);
    Ok(match expr {
        PolyExpr::Const(q) => Polynomial::constant(ring, q.clone()),
        PolyExpr::Var(v) => Polynomial::var(ring, v)?,
        PolyExpr::Ref(n) => {
            let p = lookup(n).ok_or_else(|| AlgebraError::InvalidArgument(format!("`{n}` has no value")))?;
            if p.ring() != ring {
                return Err(AlgebraError::RingMismatch(format!("`{n}` lives in {}", p.ring())));
            }
            p
        }
        PolyExpr::Add(a, b) => go(a)?.checked_add(&go(b)?)?,
        PolyExpr::Sub(a, b) => go(a)?.checked_sub(&go(b)?)?,
        PolyExpr::Mul(a, b) => {
            let (x, y) = (go(a)?, go(b)?);
            guard(&x, 1, limits)?;
            guard(&y, 1, limits)?;
            let z = x.checked_mul(&y)?;
            guard(&z, 1, limits)?;
            z
        }
        PolyExpr::Neg(a) => go(a)?.scale(&(-num_rational::BigRational::from_integer(1.into()))),
        PolyExpr::Pow(a, k) => {
            let base = go(a)?;
            guard(&base, *k as u64, limits)?;
            base.pow(*k)?
        }
    })
}

fn guard(p: &Polynomial, k: u64, limits: &Limits) -> Result<()> {
    if p.terms().len() > 1 {
        let d = p.total_degree().unwrap_or(0).saturating_mul(k);
        if d > limits.max_degree as u64 {
            return Err(AlgebraError::ResourceLimit(format!(
                "expanded power of degree {d} exceeds max degree {}",
                limits.max_degree
            )));
        }
    }
    Ok(())
}
