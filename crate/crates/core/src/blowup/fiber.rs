use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::hilbert_samuel_multiplicity;
use crate::limits::Limits;
use crate::poly::{Polynomial, RingContext};

use super::{chart, exceptional_divisor, rees_presentation, GradedPresentation};

/// `(I^s, (t^{s+1}))`, numerator and denominator of the degree-`s` piece of
/// `⊕ I^s / (t^{s+1})`.
pub fn graded_piece(i: &Ideal, t: &str, s: u32, limits: &Limits) -> Result<(Ideal, Ideal)> {
    let ring = i.ring();
    let tv = Polynomial::var(ring, t)?;
    if !i.contains(&tv, limits)? {
        return Err(AlgebraError::InvalidArgument(format!("`{t}` is not in {i}")));
    }
    let den = Ideal::new(ring, [tv.pow(s + 1)?])?;
    Ok((i.power(s)?, den))
}

/// How `(t^{s+1})` sits relative to `t I^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Equal,
    /// `(t^{s+1}) ⊊ t I^s`.
    ProperSubset,
    /// `t I^s ⊊ (t^{s+1})`.
    ProperSuperset,
    Incomparable,
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::Equal => "equal",
            Containment::ProperSubset => "proper-subset",
            Containment::ProperSuperset => "proper-superset",
            Containment::Incomparable => "incomparable",
        })
    }
}

/// One degree of the comparison between the two candidate denominators.
#[derive(Clone, Debug)]
pub struct GradedRow {
    pub s: u32,
    pub t_power_in_t_is: bool,
    pub t_is_in_t_power: bool,
    pub relation: Containment,
    /// A generator of one side outside the other, when they differ.
    pub witness: Option<Polynomial>,
}

/// Compares `(t^{s+1})` with `t I^s` for `I = I_S[t] + (t)` and every
/// `s ≤ s_max`.
pub fn graded_piece_compare(i_s: &Ideal, s_max: u32, limits: &Limits) -> Result<Vec<GradedRow>> {
    let (_, t, center) = deformation(i_s)?;
    let tv = Polynomial::var(center.ring(), &t)?;
    let t_ideal = Ideal::new(center.ring(), [tv.clone()])?;
    let mut rows = Vec::new();
    for s in 0..=s_max {
        let t_is = center.power(s)?.product(&t_ideal)?;
        let den = Ideal::new(center.ring(), [tv.pow(s + 1)?])?;
        let missing_in_den = den.non_member_of(&t_is, limits)?;
        let missing_in_t_is = t_is.non_member_of(&den, limits)?;
        let (relation, witness) = match (&missing_in_t_is, &missing_in_den) {
            (None, None) => (Containment::Equal, None),
            (None, Some(w)) => (Containment::ProperSubset, Some(w.clone())),
            (Some(w), None) => (Containment::ProperSuperset, Some(w.clone())),
            (Some(_), Some(w)) => (Containment::Incomparable, Some(w.clone())),
        };
        rows.push(GradedRow {
            s,
            t_power_in_t_is: missing_in_t_is.is_none(),
            t_is_in_t_power: missing_in_den.is_none(),
            relation,
            witness,
        });
    }
    Ok(rows)
}

/// `R[t]` with a fresh deformation variable, and `I_S[t] + (t)` there.
fn deformation(i_s: &Ideal) -> Result<(RingContext, String, Ideal)> {
    let base = i_s.ring();
    let t = base.fresh_user_name(&["t"], "t", &[]);
    let rt = base.extend(&[t.as_str()])?;
    let center = i_s.embed(&rt)?.sum(&Ideal::new(&rt, [Polynomial::var(&rt, &t)?])?)?;
    Ok((rt, t, center))
}

/// `sat(main + exceptional, irrelevant)`.
pub fn component_intersection(main: &Ideal, exceptional: &Ideal, irrelevant: &Ideal, limits: &Limits) -> Result<Ideal> {
    main.sum(exceptional)?.saturate(irrelevant, limits)?.normalized(limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCase {
    /// Unit center: no modification, the fiber is `S` itself.
    IsomorphicToS,
    Degenerate,
}

impl fmt::Display for FiberCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberCase::IsomorphicToS => "isomorphic to S",
            FiberCase::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub name: &'static str,
    pub ideal: Ideal,
    pub contains_fiber: bool,
    /// `p` with `p ∉ sat(ideal)` and `p ∈ √sat(ideal)`, saturation taken
    /// with respect to the irrelevant ideal.
    pub nonreduced_witness: Option<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct FiberChart {
    pub var: String,
    pub generator: Polynomial,
    pub renamed: Vec<(String, String)>,
    pub fiber: Ideal,
    pub main: Ideal,
    pub exceptional: Ideal,
}

/// The special fiber over `t = 0` of the blowup of `R[t]` along
/// `I = I_S[t] + (t)`, with its main component and exceptional divisor.
#[derive(Clone, Debug)]
pub struct FiberReport {
    pub case: FiberCase,
    pub center_base: Ideal,
    pub deformation_var: String,
    pub center: Ideal,
    pub rees: GradedPresentation,
    /// Proj variable standing for `t`, absent for a unit center.
    pub t_proj_var: Option<String>,
    pub fiber_ring: RingContext,
    pub fiber: Ideal,
    pub main: Component,
    pub exceptional: Component,
    pub charts: Vec<FiberChart>,
    pub center_multiplicity: Option<u64>,
    pub intersection: Ideal,
    /// Whether the intersection matches `Rees(I_S) + I_S` embedded with
    /// the `t` variable set to zero, up to saturation.
    pub intersection_matches: bool,
    /// Whether `sat(fiber, I_S)` agrees with the main component up to
    /// irrelevant saturation.
    pub strict_transform_agrees: bool,
    pub graded: Vec<GradedRow>,
}

impl FiberReport {
    pub fn components(&self) -> [&Component; 2] {
        [&self.main, &self.exceptional]
    }
}

fn unit_report(i_s: &Ideal, limits: &Limits) -> Result<FiberReport> {
    let (_, t, center) = deformation(i_s)?;
    let base = i_s.ring().clone();
    let names = super::proj_names(&base, 1);
    let ring = base.extend(&names)?;
    let rees = GradedPresentation {
        base: base.clone(),
        ring: ring.clone(),
        proj_vars: vec![(names[0].clone(), Polynomial::one(&base))],
        ideal: Ideal::zero(&ring),
    };
    let fiber = Ideal::zero(&ring);
    let component = |name, ideal: Ideal| Component {
        name,
        ideal,
        contains_fiber: true,
        nonreduced_witness: None,
    };
    let c = chart(&fiber, &names, &names[0], limits)?;
    let charts = vec![FiberChart {
        var: names[0].clone(),
        generator: Polynomial::one(&base),
        renamed: c.renamed,
        fiber: c.ideal.clone(),
        main: c.ideal,
        exceptional: Ideal::unit(&base),
    }];
    Ok(FiberReport {
        case: FiberCase::IsomorphicToS,
        center_base: i_s.clone(),
        deformation_var: t,
        center,
        rees,
        t_proj_var: None,
        fiber_ring: ring.clone(),
        fiber: fiber.clone(),
        main: component("main", fiber),
        exceptional: component("exceptional", Ideal::unit(&ring)),
        charts,
        center_multiplicity: None,
        intersection: Ideal::unit(&ring),
        intersection_matches: true,
        strict_transform_agrees: true,
        graded: Vec::new(),
    })
}

/// Variables of the ring, base ones first, then the base ideal generators:
/// the first one outside `sat` but inside its radical.
fn nonreduced_witness(sat: &Ideal, extra: &[Polynomial], limits: &Limits) -> Result<Option<Polynomial>> {
    if sat.is_unit(limits)? {
        return Ok(None);
    }
    let ring = sat.ring();
    let mut candidates: Vec<Polynomial> = ring
        .vars()
        .iter()
        .map(|v| Polynomial::var(ring, v))
        .collect::<Result<Vec<_>>>()?;
    candidates.extend(extra.iter().cloned());
    for c in candidates {
        if !sat.contains(&c, limits)? && sat.radical_contains(&c, limits)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn component(name: &'static str, ideal: Ideal, fiber: &Ideal, irrelevant: &Ideal, extra: &[Polynomial], limits: &Limits) -> Result<Component> {
    let contains_fiber = ideal.contains_ideal(fiber, limits)?;
    let sat = ideal.saturate(irrelevant, limits)?;
    let nonreduced_witness = nonreduced_witness(&sat, extra, limits)?;
    Ok(Component {
        name,
        ideal: ideal.normalized(limits)?,
        contains_fiber,
        nonreduced_witness,
    })
}

/// Builds the full fiber report for the center `I_S` of a chart ring.
pub fn special_fiber(i_s: &Ideal, limits: &Limits) -> Result<FiberReport> {
    if i_s.is_unit(limits)? {
        return unit_report(i_s, limits);
    }
    let base = i_s.ring().clone();
    let (_, t, center) = deformation(i_s)?;
    let rees = rees_presentation(&center, limits)?;
    let big = rees.ring().clone();
    let fiber_ring = big.without_vars(&[t.as_str()])?;

    let zero_t: Vec<(String, Polynomial)> = big
        .vars()
        .iter()
        .map(|v| {
            let img = if *v == t {
                Polynomial::zero(&fiber_ring)
            } else {
                Polynomial::var(&fiber_ring, v)?
            };
            Ok((v.clone(), img))
        })
        .collect::<Result<Vec<_>>>()?;
    let restrict = |i: &Ideal| -> Result<Ideal> {
        let gens = i.generators().iter().map(|g| g.substitute(&zero_t)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&fiber_ring, gens)
    };

    let fiber = restrict(rees.ideal())?.normalized(limits)?;
    let exc_raw = restrict(&exceptional_divisor(&rees, &center)?)?;
    let tv = Polynomial::var(center.ring(), &t)?;
    let t_proj = rees
        .proj_vars()
        .iter()
        .find(|(_, f)| *f == tv)
        .map(|(n, _)| n.clone())
        .expect("t is a generator of the center");
    let proj = rees.proj_names();
    let irrelevant = Ideal::of_vars(&fiber_ring, &proj)?;
    let base_gens = i_s.embed(&fiber_ring)?.sorted_generators();

    // proj variables of Rees(I_S) renamed to those of Rees(I) standing for
    // the same generator
    let (main_rees, main_raw) = if i_s.is_zero() {
        (None, Ideal::unit(&fiber_ring))
    } else {
        let g = rees_presentation(i_s, limits)?;
        let mut assign: Vec<(String, Polynomial)> = Vec::new();
        for (name, f) in g.proj_vars() {
            let target = rees
                .proj_vars()
                .iter()
                .find(|(_, h)| f.embed(center.ring()).ok().as_ref() == Some(h))
                .map(|(n, _)| n.clone())
                .expect("generators of I_S are generators of I");
            assign.push((name.clone(), Polynomial::var(&fiber_ring, &target)?));
        }
        for v in base.vars() {
            assign.push((v.clone(), Polynomial::var(&fiber_ring, v)?));
        }
        let mut gens = g
            .ideal()
            .generators()
            .iter()
            .map(|p| p.substitute(&assign))
            .collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::var(&fiber_ring, &t_proj)?);
        (Some((g, assign)), Ideal::new(&fiber_ring, gens)?)
    };

    let (main, exceptional, multiplicity, graded) = std::thread::scope(|sc| {
        let main_h = sc.spawn(|| component("main", main_raw.clone(), &fiber, &irrelevant, &base_gens, limits));
        let exc_h = sc.spawn(|| component("exceptional", exc_raw.clone(), &fiber, &irrelevant, &base_gens, limits));
        let mult_h = sc.spawn(|| match hilbert_samuel_multiplicity(&center, limits) {
            Ok(e) => Ok(Some(e)),
            Err(AlgebraError::NotArtinian(_)) => Ok(None),
            Err(e) => Err(e),
        });
        let graded_h = sc.spawn(|| graded_piece_compare(i_s, limits.s_max as u32, limits));
        (
            main_h.join().expect("main component worker"),
            exc_h.join().expect("exceptional worker"),
            mult_h.join().expect("multiplicity worker"),
            graded_h.join().expect("graded comparison worker"),
        )
    });
    let (main, exceptional, center_multiplicity, graded) = (main?, exceptional?, multiplicity?, graded?);

    let intersection = component_intersection(&main.ideal, &exceptional.ideal, &irrelevant, limits)?;
    let remark = match &main_rees {
        None => Ideal::unit(&fiber_ring),
        Some(_) => main_raw.sum(&i_s.embed(&fiber_ring)?)?,
    }
    .saturate(&irrelevant, limits)?;
    let intersection_matches = intersection.equals(&remark, limits)?;

    let strict = fiber
        .saturate(&i_s.embed(&fiber_ring)?, limits)?
        .saturate(&irrelevant, limits)?;
    let main_sat = main.ideal.saturate(&irrelevant, limits)?;
    let strict_transform_agrees = strict.equals(&main_sat, limits)?;

    let mut charts = Vec::with_capacity(proj.len());
    for (name, generator) in rees.proj_vars() {
        let f = chart(&fiber, &proj, name, limits)?;
        let e = chart(&exceptional.ideal, &proj, name, limits)?;
        let m = match &main_rees {
            Some((g, assign)) if *name != t_proj => {
                let own = assign
                    .iter()
                    .find(|(_, img)| img.to_string() == *name)
                    .map(|(n, _)| n.clone())
                    .expect("proj variable of I_S");
                let c = g.chart(&own, limits)?;
                rename_chart(&c.ideal, &c.renamed, &f.renamed, assign)?
            }
            _ => Ideal::unit(f.ideal.ring()),
        };
        charts.push(FiberChart {
            var: name.clone(),
            generator: generator.clone(),
            renamed: f.renamed.clone(),
            fiber: f.ideal,
            main: m,
            exceptional: e.ideal,
        });
    }

    Ok(FiberReport {
        case: FiberCase::Degenerate,
        center_base: i_s.clone(),
        deformation_var: t,
        center,
        rees,
        t_proj_var: Some(t_proj),
        fiber_ring,
        fiber,
        main,
        exceptional,
        charts,
        center_multiplicity,
        intersection: intersection.clone(),
        intersection_matches,
        strict_transform_agrees,
        graded,
    })
}

/// Moves a chart of `Rees(I_S)` to the affine names used by the fiber chart
/// at the same proj variable.
fn rename_chart(
    ideal: &Ideal,
    own: &[(String, String)],
    fiber: &[(String, String)],
    assign: &[(String, Polynomial)],
) -> Result<Ideal> {
    let mut map: Vec<(String, String)> = Vec::new();
    for (p, z) in own {
        let big_name = assign
            .iter()
            .find(|(n, _)| n == p)
            .map(|(_, img)| img.to_string())
            .expect("proj variable of I_S");
        let target = fiber
            .iter()
            .find(|(q, _)| *q == big_name)
            .map(|(_, z2)| z2.clone())
            .expect("same proj variable in the fiber chart");
        map.push((z.clone(), target));
    }
    let ring = ideal.ring();
    let names: Vec<String> = ring
        .vars()
        .iter()
        .map(|v| map.iter().find(|(a, _)| a == v).map_or(v.clone(), |(_, b)| b.clone()))
        .collect();
    let target = RingContext::new(names.clone(), ring.order().clone())?;
    let assign: Vec<(String, Polynomial)> = ring
        .vars()
        .iter()
        .zip(&names)
        .map(|(v, n)| Ok((v.clone(), Polynomial::var(&target, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let gens = ideal.generators().iter().map(|g| g.substitute(&assign)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}
