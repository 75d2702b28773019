use crate::error::{AlgebraError, Result};
use crate::groebner::kernel::{self, Term, Vector};
use crate::groebner::{from_vector, to_vector, Ideal};
use crate::limits::Limits;
use crate::poly::{Polynomial, RingContext};

use super::matrix::PolyMatrix;

fn column_to_vector(col: &[Polynomial], offset: u32) -> Vector {
    let mut v: Vector = Vec::new();
    for (i, e) in col.iter().enumerate() {
        v.extend(to_vector(e, offset + i as u32));
    }
    v
}

fn vector_to_column(ring: &RingContext, v: &[Term], offset: u32, len: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vector> = vec![Vec::new(); len];
    for t in v {
        let k = (t.pos - offset) as usize;
        parts[k].push(Term { pos: 0, ..t.clone() });
    }
    parts.into_iter().map(|p| from_vector(ring, p)).collect()
}

/// Gröbner basis of the submodule of `R^rank` generated by `gens`, under the
/// position-over-term order.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    ring: RingContext,
    rank: usize,
    basis: Vec<Vector>,
}

impl SubmoduleBasis {
    pub fn new(ring: &RingContext, rank: usize, gens: &[Vec<Polynomial>], limits: &Limits) -> Result<Self> {
        for g in gens {
            if g.len() != rank {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "vector of length {} in a free module of rank {rank}",
                    g.len()
                )));
            }
        }
        let inputs = gens.iter().map(|g| column_to_vector(g, 0)).collect();
        let basis = kernel::groebner(ring.order(), inputs, limits, false)?;
        Ok(SubmoduleBasis {
            ring: ring.clone(),
            rank,
            basis,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        if v.len() != self.rank {
            return Err(AlgebraError::DimensionMismatch(format!(
                "vector of length {} in a free module of rank {}",
                v.len(),
                self.rank
            )));
        }
        let refs: Vec<&[Term]> = self.basis.iter().map(|b| b.as_slice()).collect();
        Ok(kernel::reduce(self.ring.order(), column_to_vector(v, 0), &refs)?.is_empty())
    }

    /// Basis elements as columns.
    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.basis
            .iter()
            .map(|b| vector_to_column(&self.ring, b, 0, self.rank))
            .collect()
    }

    /// Leading monomials grouped by position.
    pub fn leading_monomials_by_position(&self) -> Vec<Vec<crate::poly::Monomial>> {
        let mut out = vec![Vec::new(); self.rank];
        for b in &self.basis {
            out[b[0].pos as usize].push(b[0].mon.clone());
        }
        out
    }

    /// Whether the submodule is all of `R^rank`.
    pub fn is_everything(&self) -> Result<bool> {
        for i in 0..self.rank {
            let mut e = vec![Polynomial::zero(&self.ring); self.rank];
            e[i] = Polynomial::one(&self.ring);
            if !self.contains(&e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Drops, last first, every column lying in the span of the others.
fn prune_columns(ring: &RingContext, rank: usize, mut cols: Vec<Vec<Polynomial>>, limits: &Limits) -> Result<Vec<Vec<Polynomial>>> {
    cols.retain(|c| c.iter().any(|e| !e.is_zero()));
    let mut k = cols.len();
    while k > 0 {
        k -= 1;
        if cols.len() == 1 {
            break;
        }
        let others: Vec<Vec<Polynomial>> = cols
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, c)| c.clone())
            .collect();
        if SubmoduleBasis::new(ring, rank, &others, limits)?.contains(&cols[k])? {
            cols.remove(k);
        }
    }
    Ok(cols)
}

/// Columns generating `{ v : M v = 0 }`, redundant generators removed.
pub fn syzygies(m: &PolyMatrix, limits: &Limits) -> Result<PolyMatrix> {
    let ring = m.ring();
    let (r, c) = (m.rows(), m.cols());
    let mut inputs = Vec::with_capacity(c);
    for j in 0..c {
        let mut v = column_to_vector(&m.column(j), 0);
        v.push(Term {
            pos: (r + j) as u32,
            mon: crate::poly::Monomial::one(ring.nvars()),
            coeff: num_traits::One::one(),
        });
        inputs.push(v);
    }
    let basis = kernel::groebner(ring.order(), inputs, limits, false)?;
    let syz: Vec<Vec<Polynomial>> = basis
        .iter()
        .filter(|b| b[0].pos as usize >= r)
        .map(|b| vector_to_column(ring, b, r as u32, c))
        .collect();
    let syz = prune_columns(ring, c, syz, limits)?;
    PolyMatrix::from_columns(ring, c, syz)
}

/// The module `coker(relations)`, a quotient of `R^rank0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    ring: RingContext,
    relations: PolyMatrix,
}

impl ModulePresentation {
    pub fn new(relations: PolyMatrix) -> Self {
        ModulePresentation {
            ring: relations.ring().clone(),
            relations,
        }
    }

    pub fn free(ring: &RingContext, rank: usize) -> Self {
        ModulePresentation::new(PolyMatrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: &RingContext) -> Self {
        ModulePresentation::free(ring, 0)
    }

    /// `R/I` presented by the generators of `I`.
    pub fn cyclic(ideal: &Ideal) -> Self {
        let gens = ideal.sorted_generators();
        let m = PolyMatrix::new(ideal.ring(), 1, gens.len(), gens).expect("one row");
        ModulePresentation::new(m)
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn rank0(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    /// Whether the module is zero, i.e. the relations span `R^rank0`.
    pub fn is_zero(&self, limits: &Limits) -> Result<bool> {
        SubmoduleBasis::new(&self.ring, self.rank0(), &self.relations.columns(), limits)?.is_everything()
    }
}

/// `d_1, d_2, …` with `d_i d_{i+1} = 0` and each `d_{i+1}` generating the
/// syzygies of `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    rank0: usize,
    maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Ranks of `F_0, F_1, …`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![self.rank0];
        out.extend(self.maps.iter().map(|m| m.cols()));
        out
    }
}

/// Resolution of `coker(relations)` of length at most `max_len`, stopping as
/// soon as a syzygy module is zero.
pub fn free_resolution(p: &ModulePresentation, max_len: usize, limits: &Limits) -> Result<FreeResolution> {
    if max_len == 0 {
        return Err(AlgebraError::InvalidArgument("resolution length must be at least 1".into()));
    }
    let mut maps = Vec::new();
    let d1 = p.relations().drop_zero_columns();
    if d1.cols() > 0 {
        maps.push(d1);
        while maps.len() < max_len {
            let next = syzygies(maps.last().expect("nonempty"), limits)?;
            if next.cols() == 0 {
                break;
            }
            maps.push(next);
        }
    }
    Ok(FreeResolution {
        rank0: p.rank0(),
        maps,
    })
}

/// `Ext^i(M, R) = ker(d_{i+1}^T) / im(d_i^T)`, as generators and relations.
pub fn ext_module(i: usize, p: &ModulePresentation, limits: &Limits) -> Result<ModulePresentation> {
    let ring = p.ring();
    let res = free_resolution(p, i + 1, limits)?;
    let ranks = res.ranks();
    if i >= ranks.len() {
        return Ok(ModulePresentation::zero(ring));
    }
    let n_i = ranks[i];
    let kernel = match res.maps().get(i) {
        Some(d) => syzygies(&d.transpose(), limits)?,
        None => PolyMatrix::identity(ring, n_i),
    };
    if kernel.cols() == 0 {
        return Ok(ModulePresentation::zero(ring));
    }
    let image = match i.checked_sub(1).and_then(|k| res.maps().get(k)) {
        Some(d) => d.transpose(),
        None => PolyMatrix::zeros(ring, n_i, 0),
    };
    subquotient(&kernel, &image, limits)
}

/// Presentation of `im(gens) / im(rels)` where `im(rels) ⊆ im(gens)`.
pub fn subquotient(gens: &PolyMatrix, rels: &PolyMatrix, limits: &Limits) -> Result<ModulePresentation> {
    let k = gens.cols();
    let s = syzygies(&gens.hconcat(rels)?, limits)?;
    Ok(ModulePresentation::new(s.top_rows(k).drop_zero_columns()))
}

/// `Fitt_j(M)`: the ideal of `(rank0 - j)`-minors of the relation matrix.
pub fn fitting_ideal(j: usize, p: &ModulePresentation) -> Result<Ideal> {
    let ring = p.ring();
    if j >= p.rank0() {
        return Ok(Ideal::unit(ring));
    }
    let k = p.rank0() - j;
    Ideal::new(ring, p.relations().minors(k)?)
}

/// Kernel of the composite `R^r --q--> R^rank0 --> coker(target)`.
///
/// Generators are the top `r` coordinates of the syzygies of `[q | rel]`;
/// their own syzygies present the kernel.
pub fn kernel_presentation(q: &PolyMatrix, target: &ModulePresentation, limits: &Limits) -> Result<ModulePresentation> {
    let ring = q.ring();
    if q.rows() != target.rank0() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "map with {} rows into a module with {} generators",
            q.rows(),
            target.rank0()
        )));
    }
    let r = q.cols();
    let s = syzygies(&q.hconcat(target.relations())?, limits)?;
    let gens = prune_columns(ring, r, s.top_rows(r).columns(), limits)?;
    let gens = PolyMatrix::from_columns(ring, r, gens)?;
    if gens.cols() == 0 {
        return Ok(ModulePresentation::zero(ring));
    }
    Ok(ModulePresentation::new(syzygies(&gens, limits)?))
}

/// Whether `R^r --q--> coker(target)` is onto.
pub fn is_surjective(q: &PolyMatrix, target: &ModulePresentation, limits: &Limits) -> Result<bool> {
    let all = q.hconcat(target.relations())?;
    SubmoduleBasis::new(q.ring(), q.rows(), &all.columns(), limits)?.is_everything()
}
