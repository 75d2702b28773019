//! Rees algebras, blowups and the special fiber of the blowup of `R[t]`
//! along `I_S[t] + (t)`.
//!
//! Proj data is handled through presentation ideals in a ring extended by
//! proj variables, one per generator of the center, plus affine charts.

mod fiber;

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::limits::Limits;
use crate::poly::{Polynomial, RingContext};

pub use fiber::{
    component_intersection, graded_piece, graded_piece_compare, special_fiber, Component, Containment, FiberCase,
    FiberChart, FiberReport, GradedRow,
};

/// `⊕ I^s` as a quotient of `base[u_0, …, u_k]`, where `u_i` stands for the
/// generator `f_i` in degree one.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    base: RingContext,
    ring: RingContext,
    proj_vars: Vec<(String, Polynomial)>,
    ideal: Ideal,
}

impl GradedPresentation {
    pub fn base(&self) -> &RingContext {
        &self.base
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    /// Proj variables with the generators they represent.
    pub fn proj_vars(&self) -> &[(String, Polynomial)] {
        &self.proj_vars
    }

    pub fn proj_names(&self) -> Vec<String> {
        self.proj_vars.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The irrelevant ideal generated by the proj variables.
    pub fn irrelevant(&self) -> Ideal {
        Ideal::of_vars(&self.ring, &self.proj_names()).expect("proj variables live in the ring")
    }

    pub fn chart(&self, var: &str, limits: &Limits) -> Result<Chart> {
        chart(&self.ideal, &self.proj_names(), var, limits)
    }
}

impl fmt::Display for GradedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.ring, self.ideal)
    }
}

/// `u, v, w, u3, u4, …`, skipping names already in use.
fn proj_names(ring: &RingContext, k: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(k);
    let mut candidates = ["u", "v", "w"]
        .into_iter()
        .map(String::from)
        .chain((3..).map(|i| format!("u{i}")));
    while out.len() < k {
        let c = candidates.next().expect("unbounded");
        if ring.var_index(&c).is_none() {
            out.push(c);
        }
    }
    out
}

/// `ker(base[u] → base[T], u_i ↦ T f_i)`, computed by eliminating `T` from
/// `(u_i - T f_i)`.
pub fn rees_presentation(i: &Ideal, limits: &Limits) -> Result<GradedPresentation> {
    let base = i.ring().clone();
    let gens = i.sorted_generators();
    if gens.is_empty() {
        return Err(AlgebraError::InvalidArgument("the Rees algebra of the zero ideal is not defined here".into()));
    }
    let names = proj_names(&base, gens.len());
    let ring = base.extend(&names)?;
    let t = ring.fresh_reserved();
    let big = ring.extend(&[t.as_str()])?;
    let tv = Polynomial::var(&big, &t)?;
    let mut rel = Vec::with_capacity(gens.len());
    for (n, f) in names.iter().zip(&gens) {
        rel.push(Polynomial::var(&big, n)?.checked_sub(&tv.checked_mul(&f.embed(&big)?)?)?);
    }
    let elim = Ideal::new(&big, rel)?.eliminate(&[t.as_str()], limits)?;
    let ideal = elim.embed(&ring)?;
    Ok(GradedPresentation {
        base,
        ring,
        proj_vars: names.into_iter().zip(gens).collect(),
        ideal,
    })
}

/// The associated graded algebra `⊕ I^s / I^{s+1}`: the Rees ideal plus the
/// extension of `I`.
pub fn exceptional_divisor(g: &GradedPresentation, i: &Ideal) -> Result<Ideal> {
    g.ideal.sum(&i.embed(&g.ring)?)
}

/// An affine chart `u_i ≠ 0` of a presentation ideal.
#[derive(Clone, Debug)]
pub struct Chart {
    pub var: String,
    /// Remaining proj variables and their affine names.
    pub renamed: Vec<(String, String)>,
    /// Reduced Gröbner basis of the dehomogenized ideal.
    pub ideal: Ideal,
}

/// Dehomogenizes `ideal` at the proj variable `var`: sets it to 1 and renames
/// the other proj variables to `z, z1, z2, …`.
pub fn chart(ideal: &Ideal, proj: &[String], var: &str, limits: &Limits) -> Result<Chart> {
    let ring = ideal.ring();
    if !proj.iter().any(|p| p == var) {
        return Err(AlgebraError::InvalidArgument(format!("`{var}` is not a proj variable")));
    }
    let affine = ring.without_vars(proj)?;
    let mut renamed: Vec<(String, String)> = Vec::new();
    let mut taken: Vec<String> = Vec::new();
    for p in proj.iter().filter(|p| p.as_str() != var) {
        let z = affine.fresh_user_name(&["z"], "z", &taken);
        taken.push(z.clone());
        renamed.push((p.clone(), z));
    }
    let target = affine.extend(&taken)?;
    let mut assign: Vec<(String, Polynomial)> = vec![(var.to_string(), Polynomial::one(&target))];
    for (p, z) in &renamed {
        assign.push((p.clone(), Polynomial::var(&target, z)?));
    }
    for v in affine.vars() {
        assign.push((v.clone(), Polynomial::var(&target, v)?));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&assign))
        .collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(&target, gens)?.normalized(limits)?;
    Ok(Chart {
        var: var.to_string(),
        renamed,
        ideal,
    })
}
