//! From a singularity module `κ` on a chart to the center
//! `I_S = Fitt⁰ Ext²(κ, R)` and the degenerate fiber, plus the numeric
//! screen built on the Bogomolov discriminant.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::blowup::{special_fiber, FiberReport};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{module_length, Length};
use crate::limits::Limits;
use crate::modmat::{ext_module, fitting_ideal, is_surjective, kernel_presentation, ModulePresentation, PolyMatrix};
use crate::poly::{Polynomial, RingContext};

/// An Artinian module `κ` with a surjection `q: R^r → κ`.
#[derive(Clone, Debug)]
pub struct SingularityDatum {
    kappa: ModulePresentation,
    q: PolyMatrix,
    length: u64,
}

impl SingularityDatum {
    /// Checks that `q` is onto and that `κ` has finite length.
    pub fn new(kappa: ModulePresentation, q: PolyMatrix, limits: &Limits) -> Result<Self> {
        if q.ring() != kappa.ring() {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", q.ring(), kappa.ring())));
        }
        if q.cols() == 0 {
            return Err(AlgebraError::InvalidArgument("the rank r must be at least 1".into()));
        }
        if q.rows() != kappa.rank0() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "q has {} rows but κ has {} generators",
                q.rows(),
                kappa.rank0()
            )));
        }
        if !is_surjective(&q, &kappa, limits)? {
            return Err(AlgebraError::InvalidArgument("q is not surjective onto κ".into()));
        }
        let length = match module_length(&kappa, limits)? {
            Length::Finite(l) => l,
            Length::Infinite => return Err(AlgebraError::NotArtinian("κ has infinite length".into())),
        };
        Ok(SingularityDatum { kappa, q, length })
    }

    /// `κ = R/J` with `q` the row of images of the basis of `R^r`.
    pub fn cyclic(j: &Ideal, q_row: Vec<Polynomial>, limits: &Limits) -> Result<Self> {
        let r = q_row.len();
        let q = PolyMatrix::new(j.ring(), 1, r, q_row)?;
        SingularityDatum::new(ModulePresentation::cyclic(j), q, limits)
    }

    /// `κ = 0` on a rank-`r` sheaf.
    pub fn zero(ring: &RingContext, r: usize, limits: &Limits) -> Result<Self> {
        SingularityDatum::new(ModulePresentation::zero(ring), PolyMatrix::zeros(ring, 0, r), limits)
    }

    pub fn rank(&self) -> usize {
        self.q.cols()
    }

    pub fn kappa(&self) -> &ModulePresentation {
        &self.kappa
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn ring(&self) -> &RingContext {
        self.kappa.ring()
    }
}

/// `I_S = Fitt⁰ Ext²(κ, R)`; the unit ideal when `κ = 0`.
pub fn singularity_ideal(d: &SingularityDatum, limits: &Limits) -> Result<Ideal> {
    if d.length == 0 {
        return Ok(Ideal::unit(d.ring()));
    }
    fitting_ideal(0, &ext_module(2, &d.kappa, limits)?)?.normalized(limits)
}

/// Both sides of `Fitt⁰ Ext¹(E, R) = Fitt⁰ Ext²(κ, R)` for `E = ker q`.
#[derive(Clone, Debug)]
pub struct ExtIdentityReport {
    pub kernel: ModulePresentation,
    pub ext1_fitting: Ideal,
    pub ext2_fitting: Ideal,
    pub equal: bool,
    /// Generator of the first side outside the second.
    pub lhs_witness: Option<Polynomial>,
    /// Generator of the second side outside the first.
    pub rhs_witness: Option<Polynomial>,
}

pub fn ext_identity_check(d: &SingularityDatum, limits: &Limits) -> Result<ExtIdentityReport> {
    let kernel = kernel_presentation(&d.q, &d.kappa, limits)?;
    let lhs = fitting_ideal(0, &ext_module(1, &kernel, limits)?)?.normalized(limits)?;
    let rhs = fitting_ideal(0, &ext_module(2, &d.kappa, limits)?)?.normalized(limits)?;
    let lhs_witness = rhs.non_member_of(&lhs, limits)?;
    let rhs_witness = lhs.non_member_of(&rhs, limits)?;
    Ok(ExtIdentityReport {
        kernel,
        equal: lhs_witness.is_none() && rhs_witness.is_none(),
        ext1_fitting: lhs,
        ext2_fitting: rhs,
        lhs_witness,
        rhs_witness,
    })
}

/// The fiber report for a datum together with its length and center.
#[derive(Clone, Debug)]
pub struct DegenerateFiber {
    pub rank: usize,
    pub length: u64,
    pub singularity_ideal: Ideal,
    pub report: FiberReport,
}

pub fn degenerate_fiber(d: &SingularityDatum, limits: &Limits) -> Result<DegenerateFiber> {
    let i_s = singularity_ideal(d, limits)?;
    let report = special_fiber(&i_s, limits)?;
    Ok(DegenerateFiber {
        rank: d.rank(),
        length: d.length,
        singularity_ideal: i_s,
        report,
    })
}

/// Rank and Chern numbers of a sheaf on a polarised surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericInvariants {
    pub r: i64,
    pub c1_sq: i64,
    pub c1_h: i64,
    pub c2: i64,
}

impl NumericInvariants {
    pub fn new(r: i64, c1_sq: i64, c1_h: i64, c2: i64) -> Result<Self> {
        if r < 1 {
            return Err(AlgebraError::InvalidArgument(format!("rank {r} must be at least 1")));
        }
        Ok(NumericInvariants { r, c1_sq, c1_h, c2 })
    }
}

/// `2 r c2 - (r - 1) c1²`.
pub fn bogomolov_discriminant(n: &NumericInvariants) -> BigInt {
    let (r, c1_sq, c2) = (BigInt::from(n.r), BigInt::from(n.c1_sq), BigInt::from(n.c2));
    BigInt::from(2) * &r * c2 - (r - 1) * c1_sq
}

/// `c1·H / r`.
pub fn slope(n: &NumericInvariants) -> BigRational {
    BigRational::new(BigInt::from(n.c1_h), BigInt::from(n.r))
}

/// Outcome of the necessary-condition screen. `NotRejected` is not a proof
/// of admissibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// `l > c2`.
    RejectedByLengthBound,
    /// The discriminant with `c2 - l` in place of `c2` is negative.
    RejectedByDiscriminant(BigInt),
    NotRejected(BigInt),
}

impl ScreenVerdict {
    pub fn is_rejected(&self) -> bool {
        !matches!(self, ScreenVerdict::NotRejected(_))
    }
}

impl fmt::Display for ScreenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScreenVerdict::RejectedByLengthBound => f.write_str("rejected (length exceeds c2)"),
            ScreenVerdict::RejectedByDiscriminant(d) => write!(f, "rejected (discriminant {d})"),
            ScreenVerdict::NotRejected(d) => write!(f, "not-rejected (discriminant {d})"),
        }
    }
}

pub fn admissibility_screen(n: &NumericInvariants, l: u64) -> ScreenVerdict {
    if BigInt::from(l) > BigInt::from(n.c2) {
        return ScreenVerdict::RejectedByLengthBound;
    }
    let reduced = NumericInvariants {
        c2: n.c2 - l as i64,
        ..*n
    };
    let d = bogomolov_discriminant(&reduced);
    if d < BigInt::from(0) {
        ScreenVerdict::RejectedByDiscriminant(d)
    } else {
        ScreenVerdict::NotRejected(d)
    }
}

/// `Q[x,y]`, the ring of the built-in corpus.
pub fn corpus_ring() -> RingContext {
    RingContext::grevlex(["x", "y"]).expect("distinct names")
}

/// Monomial ideals of colength 1 to 4 in `Q[x,y]`.
pub fn corpus_ideals() -> Vec<Ideal> {
    let r = corpus_ring();
    let mono = |a: u32, b: u32| {
        Polynomial::monomial(
            &r,
            crate::poly::Monomial::from_exponents(&[a, b]),
            crate::poly::Coefficient::from_integer(1.into()),
        )
    };
    let ideal = |gens: &[(u32, u32)]| Ideal::new(&r, gens.iter().map(|&(a, b)| mono(a, b))).expect("same ring");
    vec![
        ideal(&[(1, 0), (0, 1)]),
        ideal(&[(2, 0), (0, 1)]),
        ideal(&[(1, 0), (0, 2)]),
        ideal(&[(3, 0), (0, 1)]),
        ideal(&[(2, 0), (1, 1), (0, 2)]),
        ideal(&[(1, 0), (0, 3)]),
        ideal(&[(4, 0), (0, 1)]),
        ideal(&[(3, 0), (1, 1), (0, 2)]),
        ideal(&[(2, 0), (0, 2)]),
        ideal(&[(2, 0), (1, 1), (0, 3)]),
        ideal(&[(1, 0), (0, 4)]),
    ]
}

/// Surjections `R^r → R/J` used for every corpus ideal: `[1]`, `[1 1]`,
/// `[1 0]` and `[1 x]`.
pub fn corpus_maps() -> Vec<Vec<Polynomial>> {
    let r = corpus_ring();
    let one = Polynomial::one(&r);
    let x = Polynomial::var(&r, "x").expect("x");
    vec![
        vec![one.clone()],
        vec![one.clone(), one.clone()],
        vec![one.clone(), Polynomial::zero(&r)],
        vec![one, x],
    ]
}

/// Every corpus ideal paired with every corpus map.
pub fn corpus(limits: &Limits) -> Result<Vec<SingularityDatum>> {
    let mut out = Vec::new();
    for j in corpus_ideals() {
        for q in corpus_maps() {
            out.push(SingularityDatum::cyclic(&j, q, limits)?);
        }
    }
    Ok(out)
}
