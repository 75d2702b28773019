//! Independent reference implementations used to check the engine.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reeskit::frontend::parse_polynomial;
use reeskit::{Ideal, Polynomial, RingContext};

pub mod checks;

pub type Q = BigRational;
/// Exponent vector to coefficient.
pub type P = BTreeMap<Vec<u32>, Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ord {
    Lex,
    GrevLex,
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ring(vars: &[&str]) -> RingContext {
    RingContext::grevlex(vars.iter().copied()).unwrap()
}

pub fn poly(r: &RingContext, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn ideal(r: &RingContext, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| poly(r, g))).unwrap()
}

pub fn to_p(p: &Polynomial) -> P {
    p.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

pub fn cmp(o: Ord, a: &[u32], b: &[u32]) -> Ordering {
    match o {
        Ord::Lex => a.cmp(b),
        Ord::GrevLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            if da != db {
                return da.cmp(&db);
            }
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
    }
}

fn lead(o: Ord, p: &P) -> (Vec<u32>, Q) {
    let (m, c) = p.iter().max_by(|a, b| cmp(o, a.0, b.0)).expect("nonzero");
    (m.clone(), c.clone())
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_scaled(p: &mut P, g: &P, c: &Q, shift: &[u32]) {
    for (m, d) in g {
        let mm: Vec<u32> = m.iter().zip(shift).map(|(a, b)| a + b).collect();
        let e = p.entry(mm.clone()).or_insert_with(Q::zero);
        *e += c * d;
        if e.is_zero() {
            p.remove(&mm);
        }
    }
}

pub fn mul(a: &P, b: &P) -> P {
    let mut out = P::new();
    for (m, c) in a {
        add_scaled(&mut out, b, c, m);
    }
    out
}

/// Full remainder of `f` on division by `g`.
pub fn remainder(o: Ord, f: &P, g: &[P]) -> P {
    let mut p = f.clone();
    let mut r = P::new();
    while !p.is_empty() {
        let (m, c) = lead(o, &p);
        match g.iter().find(|h| divides(&lead(o, h).0, &m)) {
            Some(h) => {
                let (hm, hc) = lead(o, h);
                let shift: Vec<u32> = m.iter().zip(&hm).map(|(a, b)| a - b).collect();
                add_scaled(&mut p, h, &(-(c / hc)), &shift);
            }
            None => {
                p.remove(&m);
                r.insert(m, c);
            }
        }
    }
    r
}

pub fn spoly(o: Ord, f: &P, g: &P) -> P {
    let (fm, fc) = lead(o, f);
    let (gm, gc) = lead(o, g);
    let l: Vec<u32> = fm.iter().zip(&gm).map(|(a, b)| *a.max(b)).collect();
    let mut out = P::new();
    add_scaled(&mut out, f, &(Q::one() / fc), &l.iter().zip(&fm).map(|(a, b)| a - b).collect::<Vec<_>>());
    add_scaled(&mut out, g, &(-(Q::one() / gc)), &l.iter().zip(&gm).map(|(a, b)| a - b).collect::<Vec<_>>());
    out
}

fn monic(o: Ord, p: &P) -> P {
    let c = lead(o, p).1;
    p.iter().map(|(m, d)| (m.clone(), d / &c)).collect()
}

/// Buchberger over every pair, with no criteria, then reduced.
pub fn naive_groebner(o: Ord, gens: &[P]) -> Vec<P> {
    let mut g: Vec<P> = gens.iter().filter(|p| !p.is_empty()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut steps = 0;
    while let Some((i, j)) = pairs.pop() {
        steps += 1;
        assert!(steps < 200_000, "naive Buchberger did not finish");
        let r = remainder(o, &spoly(o, &g[i], &g[j]), &g);
        if !r.is_empty() {
            g.push(r);
            let k = g.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(o, g)
}

pub fn reduce_basis(o: Ord, g: Vec<P>) -> Vec<P> {
    let mut min: Vec<P> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lp = lead(o, p).0;
        let redundant = g.iter().enumerate().any(|(j, h)| {
            let lh = lead(o, h).0;
            j != k && divides(&lh, &lp) && (lh != lp || j < k)
        });
        if !redundant {
            min.push(p.clone());
        }
    }
    let mut out: Vec<P> = (0..min.len())
        .map(|k| {
            let others: Vec<P> = min.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p.clone()).collect();
            let (m, c) = lead(o, &min[k]);
            let mut tail = min[k].clone();
            tail.remove(&m);
            let mut r = remainder(o, &tail, &others);
            r.insert(m, c);
            monic(o, &r)
        })
        .collect();
    out.sort();
    out
}

pub fn sorted(mut v: Vec<P>) -> Vec<P> {
    v.sort();
    v
}

/// Row-reduces the columns `cols` (as sparse vectors) and returns a basis
/// of the kernel of the matrix with those columns.
pub fn kernel(cols: &[P]) -> Vec<Vec<Q>> {
    let mut rows_index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for c in cols {
        for m in c.keys() {
            let n = rows_index.len();
            rows_index.entry(m.clone()).or_insert(n);
        }
    }
    let (nr, nc) = (rows_index.len(), cols.len());
    let mut a = vec![vec![Q::zero(); nc]; nr];
    for (j, c) in cols.iter().enumerate() {
        for (m, v) in c {
            a[rows_index[m]][j] = v.clone();
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nc {
        let Some(p) = (r..nr).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Q::one() / &a[r][col];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nr {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..nc {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == nr {
            break;
        }
    }
    let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); nc];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(cols: &[P]) -> usize {
    cols.len() - kernel(cols).len()
}

/// Exponent vectors of total degree exactly `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Kernel of `R[u_1..u_k]_s -> R`, `u^a ↦ f^a`, restricted to coefficients
/// of degree at most `dx`; returned as polynomials over `x..., u...`.
pub fn rees_kernel(n: usize, f: &[P], s: u32, dx: u32) -> Vec<P> {
    let k = f.len();
    let mut domain: Vec<Vec<u32>> = Vec::new();
    let mut images: Vec<P> = Vec::new();
    for a in monomials_of_degree(k, s) {
        let mut fa: P = P::from([(vec![0; n], Q::one())]);
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                fa = mul(&fa, &f[i]);
            }
        }
        for d in 0..=dx {
            for b in monomials_of_degree(n, d) {
                let mut m = b.clone();
                m.extend(&a);
                domain.push(m);
                images.push(mul(&P::from([(b.clone(), Q::one())]), &fa));
            }
        }
    }
    kernel(&images)
        .into_iter()
        .map(|v| {
            domain
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect()
        })
        .collect()
}

/// Evaluates `p` over `x..., u...` at `u_i = f_i`.
pub fn substitute_u(n: usize, p: &P, f: &[P]) -> P {
    let mut out = P::new();
    for (m, c) in p {
        let mut t: P = P::from([(m[..n].to_vec(), c.clone())]);
        for (i, &e) in m[n..].iter().enumerate() {
            for _ in 0..e {
                t = mul(&t, &f[i]);
            }
        }
        for (mm, cc) in t {
            let e = out.entry(mm.clone()).or_insert_with(Q::zero);
            *e += cc;
            if e.is_zero() {
                out.remove(&mm);
            }
        }
    }
    out
}

pub fn from_p(r: &RingContext, p: &P) -> Polynomial {
    Polynomial::from_terms(r, p.iter().map(|(m, c)| (reeskit::Monomial::from_exponents(m), c.clone())))
}

/// Determinant by the permutation expansion.
pub fn leibniz(m: &[Vec<Polynomial>], r: &RingContext) -> Polynomial {
    let n = m.len();
    let mut total = Polynomial::zero(r);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = Polynomial::one(r);
        for (i, &j) in p.iter().enumerate() {
            t = t.checked_mul(&m[i][j]).unwrap();
        }
        total = if inversions % 2 == 0 { total.checked_add(&t) } else { total.checked_sub(&t) }.unwrap();
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Monomials outside the monomial ideal with generators `gens`, counted up
/// to total degree `bound`.
pub fn standard_monomials(n: usize, gens: &[Vec<u32>], bound: u32) -> usize {
    (0..=bound)
        .map(|d| {
            monomials_of_degree(n, d)
                .iter()
                .filter(|m| !gens.iter().any(|g| divides(g, m)))
                .count()
        })
        .sum()
}

/// Degree-`d` part of `R/I` for homogeneous `gens`, by linear algebra.
pub fn homogeneous_quotient_dim(n: usize, gens: &[P], d: u32) -> usize {
    let mut span = Vec::new();
    for g in gens {
        let dg: u32 = g.keys().next().map_or(0, |m| m.iter().sum());
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - dg) {
            span.push(mul(&P::from([(m, Q::one())]), g));
        }
    }
    monomials_of_degree(n, d).len() - rank(&span)
}

/// Generators of the `s`-th power of a monomial ideal.
pub fn monomial_power(gens: &[Vec<u32>], s: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; gens[0].len()]];
    for _ in 0..s {
        let mut next = Vec::new();
        for a in &out {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect::<Vec<u32>>());
            }
        }
        next.sort();
        next.dedup();
        out = next;
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random polynomial with up to `terms` terms of degree at most `deg` and
/// small integer coefficients; never zero.
pub fn random_poly(rng: &mut ChaCha8Rng, r: &RingContext, terms: usize, deg: u32) -> Polynomial {
    let n = r.nvars();
    let mut p = P::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let d = rng.gen_range(0..=deg);
        let ms = monomials_of_degree(n, d);
        let m = ms[rng.gen_range(0..ms.len())].clone();
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        *p.entry(m).or_insert_with(Q::zero) += q(c);
    }
    p.retain(|_, c| !c.is_zero());
    if p.is_empty() {
        return random_poly(rng, r, terms, deg);
    }
    from_p(r, &p)
}

pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: u32, terms: usize) -> P {
    let ms = monomials_of_degree(n, d);
    let mut p = P::new();
    for _ in 0..terms {
        let m = ms[rng.gen_range(0..ms.len())].clone();
        *p.entry(m).or_insert_with(Q::zero) += q(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    p.retain(|_, c| !c.is_zero());
    p
}

pub fn random_ideal(rng: &mut ChaCha8Rng, r: &RingContext, gens: usize, deg: u32) -> Ideal {
    let g: Vec<Polynomial> = (0..rng.gen_range(1..=gens)).map(|_| random_poly(rng, r, 3, deg)).collect();
    Ideal::new(r, g).unwrap()
}

/// Fixed corpus for comparing the engine against [`naive_groebner`].
pub fn groebner_corpus() -> Vec<(Ord, Vec<&'static str>, Vec<&'static str>)> {
    let xyz = vec!["x", "y", "z"];
    vec![
        (Ord::GrevLex, xyz.clone(), vec!["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
        (Ord::Lex, xyz.clone(), vec!["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
        (Ord::GrevLex, xyz.clone(), vec!["x^2 - y", "x*y - z"]),
        (Ord::GrevLex, xyz.clone(), vec!["x + 2*y + 2*z - 1", "x^2 + 2*y^2 + 2*z^2 - x", "2*x*y + 2*y*z - y"]),
        (Ord::Lex, vec!["x", "y"], vec!["x^2 + y^2 - 1", "x - y"]),
        (Ord::GrevLex, xyz.clone(), vec!["x*z - y^2", "y*z - x^3", "z^2 - x^2*y"]),
        (Ord::Lex, vec!["x", "y"], vec!["x*y - 1", "x^2 - y^2"]),
        (Ord::GrevLex, vec!["x", "y", "t", "u", "v", "w"], vec!["x^2*v - y*u", "x^2*w - t*u", "y*w - t*v"]),
        (Ord::Lex, vec!["x", "y"], vec!["x^5 - y", "y^3 - x*y"]),
        (Ord::GrevLex, xyz, vec!["1/2*x^2 - 3*y*z", "y^2 - 2/3*x", "z^3 + x*y"]),
    ]
}
