use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, RingContext};

/// Dense matrix of polynomials over one ring, stored row-major.
///
/// Matrices with zero rows or zero columns are allowed; they stand for maps
/// from or to the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingContext,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &RingContext, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            if e.ring() != ring {
                return Err(AlgebraError::RingMismatch(format!("{} vs {}", e.ring(), ring)));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &RingContext, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::DimensionMismatch("rows of unequal length".into()));
        }
        PolyMatrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(ring: &RingContext, rows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(AlgebraError::DimensionMismatch(format!("columns must have length {rows}")));
        }
        let ncols = cols.len();
        let mut entries = vec![Polynomial::zero(ring); rows * ncols];
        for (j, c) in cols.into_iter().enumerate() {
            for (i, e) in c.into_iter().enumerate() {
                entries[i * ncols + j] = e;
            }
        }
        PolyMatrix::new(ring, rows, ncols, entries)
    }

    pub fn zeros(ring: &RingContext, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &RingContext, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    /// Block matrix `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        if self.rows != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        PolyMatrix::from_columns(&self.ring, self.rows, cols)
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> PolyMatrix {
        let k = k.min(self.rows);
        PolyMatrix {
            ring: self.ring.clone(),
            rows: k,
            cols: self.cols,
            entries: self.entries[..k * self.cols].to_vec(),
        }
    }

    /// Same matrix with the columns that are entirely zero removed.
    pub fn drop_zero_columns(&self) -> PolyMatrix {
        let cols = self
            .columns()
            .into_iter()
            .filter(|c| c.iter().any(|e| !e.is_zero()))
            .collect();
        PolyMatrix::from_columns(&self.ring, self.rows, cols).expect("same shape")
    }

    pub fn embed(&self, target: &RingContext) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(target, self.rows, self.cols, entries)
    }

    /// Determinant of a square matrix; cofactor expansion up to 4x4,
    /// fraction-free Bareiss elimination beyond.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.sub_determinant(&rows, &cols)
    }

    fn sub_determinant(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() <= 4 {
            cofactor(self, rows, cols)
        } else {
            bareiss(
                &self.ring,
                rows.iter()
                    .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
                    .collect(),
            )
        }
    }

    /// All nonzero `k x k` minors up to sign and scaling, as primitive
    /// polynomials in canonical order. `k = 0`
    /// gives `[1]`; `k` beyond either dimension gives the empty list.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 {
            return Ok(vec![Polynomial::one(&self.ring)]);
        }
        if k > self.rows || k > self.cols {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for rs in combinations(self.rows, k) {
            for cs in combinations(self.cols, k) {
                let d = self.sub_determinant(&rs, &cs)?;
                if !d.is_zero() {
                    out.push(d.primitive());
                }
            }
        }
        out.sort_by(|a, b| a.cmp_canonical(b));
        out.dedup();
        Ok(out)
    }
}

fn cofactor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
    match rows.len() {
        0 => Ok(Polynomial::one(&m.ring)),
        1 => Ok(m.get(rows[0], cols[0]).clone()),
        2 => {
            let a = m.get(rows[0], cols[0]).checked_mul(m.get(rows[1], cols[1]))?;
            let b = m.get(rows[0], cols[1]).checked_mul(m.get(rows[1], cols[0]))?;
            a.checked_sub(&b)
        }
        _ => {
            let mut acc = Polynomial::zero(&m.ring);
            let rest_rows = &rows[1..];
            for (k, &c) in cols.iter().enumerate() {
                let e = m.get(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let rest_cols: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
                let term = e.checked_mul(&cofactor(m, rest_rows, &rest_cols)?)?;
                acc = if k % 2 == 0 {
                    acc.checked_add(&term)?
                } else {
                    acc.checked_sub(&term)?
                };
            }
            Ok(acc)
        }
    }
}

fn bareiss(ring: &RingContext, mut a: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = a.len();
    let mut sign_flip = false;
    let mut prev = Polynomial::one(ring);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(Polynomial::zero(ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].checked_mul(&a[i][j])?.checked_sub(&a[i][k].checked_mul(&a[k][j])?)?;
                a[i][j] = num
                    .div_exact(&prev)?
                    .expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -d } else { d })
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Row list form, `[[a, b], [c, d]]`, re-parseable as a matrix literal.
impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
