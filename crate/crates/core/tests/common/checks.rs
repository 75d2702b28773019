//! Checks shared by the property tests and the acceptance suite. Each one
//! returns a description of the first discrepancy it finds.

use rand::Rng;
use reeskit::blowup::rees_presentation;
use reeskit::hilbert::{artinian_length, hilbert_function, hilbert_samuel_multiplicity, Length};
use reeskit::{Ideal, Limits, MonomialOrder, Polynomial, RingContext};

use super::*;

pub type Check = std::result::Result<(), String>;

fn lim() -> Limits {
    Limits::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn pick_order(rng: &mut ChaCha8Rng) -> (Ord, MonomialOrder) {
    if rng.gen_bool(0.5) {
        (Ord::Lex, MonomialOrder::Lex)
    } else {
        (Ord::GrevLex, MonomialOrder::GrevLex)
    }
}

/// Every S-polynomial of the computed basis reduces to zero under an
/// independent division, and so does every input generator.
pub fn spoly_reduction(seed: u64) -> Check {
    let mut rng = rng(seed);
    let (o, mo) = pick_order(&mut rng);
    let r = RingContext::new(["x", "y", "z"], mo).unwrap();
    let i = random_ideal(&mut rng, &r, 3, 2);
    let gb: Vec<P> = i.groebner_basis(&lim()).map_err(e2s)?.iter().map(to_p).collect();
    for a in 0..gb.len() {
        for b in a + 1..gb.len() {
            let rem = remainder(o, &spoly(o, &gb[a], &gb[b]), &gb);
            ensure(rem.is_empty(), || format!("S({a},{b}) of {i} leaves {rem:?}"))?;
        }
    }
    for g in i.generators() {
        ensure(remainder(o, &to_p(g), &gb).is_empty(), || format!("{g} not reduced to 0 by basis of {i}"))?;
    }
    Ok(())
}

/// Ideal membership is closed under sums and ring multiples.
pub fn membership_closure(seed: u64) -> Check {
    let mut rng = rng(seed);
    let r = ring(&["x", "y", "z"]);
    let i = random_ideal(&mut rng, &r, 3, 2);
    let l = lim();
    let mut combo = Polynomial::zero(&r);
    for g in i.generators() {
        combo = combo.checked_add(&random_poly(&mut rng, &r, 3, 2).checked_mul(g).unwrap()).unwrap();
    }
    let h = random_poly(&mut rng, &r, 3, 2);
    let g0 = i.generators()[0].clone();
    for f in [combo.clone(), combo.checked_add(&g0).unwrap(), h.checked_mul(&combo).unwrap()] {
        ensure(i.contains(&f, &l).map_err(e2s)?, || format!("{f} should lie in {i}"))?;
    }
    let nf = i.reduce(&h, &l).map_err(e2s)?;
    let diff = h.checked_sub(&nf).unwrap();
    ensure(i.contains(&diff, &l).map_err(e2s)?, || format!("h - nf(h) not in {i}"))
}

/// `I ⊆ I:J`, `(I:J)J ⊆ I`, `I:J ⊆ I:J^∞`, and `(I:J^∞):J = I:J^∞`.
pub fn quotient_laws(seed: u64) -> Check {
    let mut rng = rng(seed);
    let r = ring(&["x", "y"]);
    let i = random_ideal(&mut rng, &r, 3, 2);
    let j = random_ideal(&mut rng, &r, 2, 1);
    let l = lim();
    let q = i.quotient(&j, &l).map_err(e2s)?;
    let s = i.saturate(&j, &l).map_err(e2s)?;
    ensure(q.contains_ideal(&i, &l).map_err(e2s)?, || format!("{i} not in {i}:{j}"))?;
    ensure(i.contains_ideal(&q.product(&j).map_err(e2s)?, &l).map_err(e2s)?, || format!("({i}:{j}){j} not in {i}"))?;
    ensure(s.contains_ideal(&q, &l).map_err(e2s)?, || format!("quotient not in saturation for {i}, {j}"))?;
    let again = s.quotient(&j, &l).map_err(e2s)?;
    ensure(again.equals(&s, &l).map_err(e2s)?, || format!("saturation of {i} by {j} is not stable"))
}

/// The elimination ideal lies in `I`, avoids `x`, and agrees with the
/// `x`-free part of an independent lex basis.
pub fn elimination_soundness(seed: u64) -> Check {
    let mut rng = rng(seed);
    let r = ring(&["x", "y", "z"]);
    let i = random_ideal(&mut rng, &r, 2, 2);
    let l = lim();
    let e = i.eliminate(&["x"], &l).map_err(e2s)?;
    let sub = e.ring().clone();
    for g in e.generators() {
        let up = g.embed(&r).map_err(e2s)?;
        ensure(!up.uses_var(0), || format!("{g} uses x"))?;
        ensure(i.contains(&up, &l).map_err(e2s)?, || format!("{g} from elim of {i} is not in it"))?;
    }
    let naive = naive_groebner(Ord::Lex, &i.generators().iter().map(to_p).collect::<Vec<_>>());
    let free: Vec<Polynomial> = naive
        .iter()
        .filter(|p| p.keys().all(|m| m[0] == 0))
        .map(|p| from_p(&sub, &p.iter().map(|(m, c)| (m[1..].to_vec(), c.clone())).collect()))
        .collect();
    let reference = Ideal::new(&sub, free).map_err(e2s)?;
    ensure(reference.equals(&e, &l).map_err(e2s)?, || format!("elimination of {i}: {e} vs lex reference {reference}"))
}

/// Hilbert function of `R/LT(I)` equals that of `R/I`, computed by linear
/// algebra in each degree.
pub fn macaulay(seed: u64) -> Check {
    let mut rng = rng(seed);
    let r = ring(&["x", "y", "z"]);
    let gens: Vec<P> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_homogeneous(&mut rng, 3, d, 3)
        })
        .filter(|p| !p.is_empty())
        .collect();
    let i = Ideal::new(&r, gens.iter().map(|p| from_p(&r, p))).unwrap();
    for d in 0..=5u32 {
        let lt = hilbert_function(&i, d as u64, &lim()).map_err(e2s)? as usize;
        let la = homogeneous_quotient_dim(3, &gens, d);
        ensure(lt == la, || format!("H({i}, {d}): leading terms give {lt}, linear algebra {la}"))?;
    }
    Ok(())
}

/// `e(x^a, (y + λx)^b) = ab`, and `e(x^a, y^b, t^c) = abc`.
pub fn regular_sequence_multiplicity(seed: u64) -> Check {
    let mut rng = rng(seed);
    let (a, b) = (rng.gen_range(1..=3u32), rng.gen_range(1..=3u32));
    if rng.gen_bool(0.75) {
        let r = ring(&["x", "y"]);
        let lambda: i64 = rng.gen_range(-3..=3);
        let f = poly(&r, &format!("x^{a}"));
        let g = poly(&r, &format!("(y + {lambda}*x)^{b}"));
        let i = Ideal::new(&r, [f, g]).unwrap();
        let e = hilbert_samuel_multiplicity(&i, &lim()).map_err(e2s)?;
        ensure(e == (a * b) as u64, || format!("e({i}) = {e}, expected {}", a * b))
    } else {
        let c = rng.gen_range(1..=2u32);
        let r = ring(&["x", "y", "t"]);
        let i = ideal(&r, &[&format!("x^{a}"), &format!("y^{b}"), &format!("t^{c}")]);
        let e = hilbert_samuel_multiplicity(&i, &lim()).map_err(e2s)?;
        ensure(e == (a * b * c) as u64, || format!("e({i}) = {e}, expected {}", a * b * c))
    }
}

/// `length(R/(x,y)^n) = n(n+1)/2`.
pub fn maximal_power_length(n: u32) -> Check {
    let r = ring(&["x", "y"]);
    let m = ideal(&r, &["x", "y"]).power(n).map_err(e2s)?;
    let got = artinian_length(&m, &lim()).map_err(e2s)?;
    let want = (n * (n + 1) / 2) as u64;
    ensure(got == Length::Finite(want), || format!("length of (x,y)^{n} is {got}, expected {want}"))
}

/// The engine's reduced basis equals the criterion-free one.
pub fn groebner_matches_naive(o: Ord, vars: &[&str], gens: &[&str]) -> Check {
    let mo = match o {
        Ord::Lex => MonomialOrder::Lex,
        Ord::GrevLex => MonomialOrder::GrevLex,
    };
    let r = RingContext::new(vars.iter().copied(), mo).unwrap();
    let ps: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
    let i = Ideal::new(&r, ps.clone()).unwrap();
    let got = sorted(i.groebner_basis(&lim()).map_err(e2s)?.iter().map(to_p).collect());
    let want = naive_groebner(o, &ps.iter().map(to_p).collect::<Vec<_>>());
    ensure(got == want, || format!("basis of {i} under {o:?} differs from the naive one"))
}

/// The Rees presentation kills `u_i ↦ f_i`, and every element of the
/// linear-algebra kernel in u-degree `s ≤ 3`, coefficient degree `≤ dx`,
/// lies in it.
pub fn rees_matches_kernel(vars: &[&str], gens: &[&str], dx: u32) -> Check {
    let r = ring(vars);
    let i = ideal(&r, gens);
    let g = rees_presentation(&i, &lim()).map_err(e2s)?;
    let n = r.nvars();
    let f: Vec<P> = g.proj_vars().iter().map(|(_, p)| to_p(p)).collect();
    for h in g.ideal().generators() {
        let img = substitute_u(n, &to_p(h), &f);
        ensure(img.is_empty(), || format!("{h} does not vanish on {i}"))?;
    }
    for s in 1..=3 {
        for k in rees_kernel(n, &f, s, dx) {
            let p = from_p(g.ring(), &k);
            ensure(g.ideal().contains(&p, &lim()).map_err(e2s)?, || format!("kernel element {p} of {i} missing from presentation"))?;
        }
    }
    Ok(())
}

/// Centers with at most three generators of degree at most three.
pub fn rees_corpus() -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
    let xy = vec!["x", "y"];
    vec![
        (xy.clone(), vec!["x", "y"]),
        (xy.clone(), vec!["x^2", "y"]),
        (xy.clone(), vec!["x^2", "x*y", "y^2"]),
        (xy.clone(), vec!["x^3", "y^2"]),
        (xy.clone(), vec!["x^2 - y^3", "x*y"]),
        (xy.clone(), vec!["x^2", "x*y", "y^3"]),
        (vec!["x", "y", "t"], vec!["x^2", "y", "t"]),
        (vec!["x", "y", "t"], vec!["x*y", "y*t", "t*x"]),
        (xy, vec!["x^2 + y^2", "x^3"]),
    ]
}
