//! Finite stages of the dynamic realisation of a cone on the line.
//!
//! Every ball element `g` is written `Δ^{2f} r` with `f = floor(P, g)`, and its
//! coordinate is `t(g) = f + t(r)`, where the residues `r` are placed in `[0, 1)`
//! by midpoint insertion in breadth-first order. Generators then act through
//! the pairs `(t(h), t(σ_i h))`. Since `t(Δ²h) = t(h) + 1`, these maps
//! commute with `x ↦ x + 1`, and they are stored by one period of breakpoints.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::braid::{delta_sq, little_delta, sub_delta_sq, BraidWord, NormalForm};
use crate::cones::{ball_with_limits, floor, fraction, tau_interval, BallLimits, Cone, Q};
use crate::error::{BraidError, Result};
use crate::report::LawReport;

pub type BigQ = BigRational;

fn big(x: &Q) -> BigQ {
    BigQ::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// `p/q` rendering for exact coordinates.
pub fn big_fraction(x: &BigQ) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn floor_big(x: &BigQ) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// A strictly increasing map of the line commuting with `x ↦ x + 1`,
/// affine between breakpoints. Breakpoints are kept for one period `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLMap {
    xs: Vec<BigQ>,
    ys: Vec<BigQ>,
}

impl PLMap {
    /// From pairs with distinct `x` in `[0, 1)`; the pairs must be increasing
    /// and stay increasing across the period.
    pub fn from_pairs(mut pairs: Vec<(BigQ, BigQ)>) -> Result<PLMap> {
        if pairs.is_empty() {
            return Err(BraidError::Coverage("a PL map needs at least one breakpoint".into()));
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        pairs.dedup_by(|a, b| a.0 == b.0);
        let one = BigQ::one();
        for w in pairs.windows(2) {
            if w[1].1 <= w[0].1 {
                return Err(BraidError::Precondition("breakpoints are not increasing".into()));
            }
        }
        let (first, last) = (&pairs[0], &pairs[pairs.len() - 1]);
        if last.1 >= &first.1 + &one || first.0 < BigQ::zero() || last.0 >= one {
            return Err(BraidError::Precondition("breakpoints do not fit one period".into()));
        }
        let (xs, ys) = pairs.into_iter().unzip();
        Ok(PLMap { xs, ys })
    }

    pub fn identity() -> PLMap {
        PLMap { xs: vec![BigQ::zero()], ys: vec![BigQ::zero()] }
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = (&BigQ, &BigQ)> {
        self.xs.iter().zip(&self.ys)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn eval(&self, x: &BigQ) -> BigQ {
        let k = BigQ::from_integer(floor_big(x));
        let u = x - &k;
        let n = self.xs.len();
        let one = BigQ::one();
        let j = self.xs.partition_point(|p| p <= &u);
        // segment between breakpoint j-1 and j, wrapping around the period
        let (x0, y0, x1, y1) = if j == 0 {
            (&self.xs[n - 1] - &one, &self.ys[n - 1] - &one, self.xs[0].clone(), self.ys[0].clone())
        } else if j == n {
            (self.xs[n - 1].clone(), self.ys[n - 1].clone(), &self.xs[0] + &one, &self.ys[0] + &one)
        } else {
            (self.xs[j - 1].clone(), self.ys[j - 1].clone(), self.xs[j].clone(), self.ys[j].clone())
        };
        let y = &y0 + (&y1 - &y0) * (&u - &x0) / (&x1 - &x0);
        y + k
    }

    /// `f(x)` when `x` is a breakpoint up to an integer shift.
    pub fn eval_exact(&self, x: &BigQ) -> Option<BigQ> {
        let k = BigQ::from_integer(floor_big(x));
        let u = x - &k;
        self.xs.binary_search(&u).ok().map(|j| &self.ys[j] + k)
    }

    pub fn inverse(&self) -> PLMap {
        let pairs = self
            .xs
            .iter()
            .zip(&self.ys)
            .map(|(x, y)| {
                let k = BigQ::from_integer(floor_big(y));
                (y - &k, x - &k)
            })
            .collect();
        PLMap::from_pairs(pairs).expect("inverse of an increasing periodic map")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PLMap) -> PLMap {
        let inv = other.inverse();
        let mut xs: Vec<BigQ> = other.xs.clone();
        for x in &self.xs {
            let pre = inv.eval(x);
            let k = BigQ::from_integer(floor_big(&pre));
            xs.push(pre - k);
        }
        let pairs = xs.into_iter().map(|x| {
            let y = self.eval(&other.eval(&x));
            (x, y)
        });
        PLMap::from_pairs(pairs.collect()).expect("composition of increasing periodic maps")
    }

    /// `x y` lines, one per breakpoint.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (x, y) in self.breakpoints() {
            let _ = writeln!(out, "{} {}", big_fraction(x), big_fraction(y));
        }
        out
    }
}

/// Order-preserving coordinates for a ball of `B_n` and its `Δ²`-translates.
pub struct Embedding {
    cone: Cone,
    strands: usize,
    /// residue normal form → coordinate in `[0, 1)`
    residues: HashMap<NormalForm, BigQ>,
    /// ball elements with their coordinates
    points: Vec<(BraidWord, BigQ)>,
}

impl Embedding {
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn points(&self) -> &[(BraidWord, BigQ)] {
        &self.points
    }

    pub fn residue_count(&self) -> usize {
        self.residues.len()
    }

    /// `t(b)` when `b` is a `Δ²`-translate of an embedded element.
    pub fn coordinate(&self, b: &BraidWord) -> Result<Option<BigQ>> {
        self.coordinate_nf(&b.normal_form())
    }

    fn coordinate_nf(&self, nf: &NormalForm) -> Result<Option<BigQ>> {
        let f = floor(&self.cone, &nf.to_word())?;
        Ok(self.residues.get(&nf.shift_delta_sq(-f)).map(|t| t + BigQ::from_integer(BigInt::from(f))))
    }
}

/// Suffixes `s` of the positive word for `Δ²`, so that `ρ(Δ²)` runs through
/// embedded points only.
fn delta_sq_suffixes(n: usize) -> Vec<NormalForm> {
    let d = delta_sq(n);
    let letters = d.letters();
    (1..letters.len())
        .map(|j| NormalForm::from_word(&BraidWord::new(n, letters[j..].to_vec()).expect("valid suffix")))
        .collect()
}

/// Embeds `ball(n, L)` for a cone with `Δ²` positive, together with the
/// products `s·g` for suffixes `s` of `Δ²`.
pub fn build_embedding(p: &Cone, len: usize) -> Result<Embedding> {
    build_embedding_with_limits(p, len, BallLimits::default())
}

pub fn build_embedding_with_limits(p: &Cone, len: usize, limits: BallLimits) -> Result<Embedding> {
    if p.delta_sq_sign() != 1 {
        return Err(BraidError::Precondition(format!("{} has Δ² negative; use its reverse", p.name())));
    }
    let n = p.strands();
    let words = ball_with_limits(n, len, limits)?;
    // residues in insertion order
    let mut order: Vec<NormalForm> = Vec::new();
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut add = |nf: &NormalForm| -> Result<(i64, NormalForm)> {
        let f = floor(p, &nf.to_word())?;
        let r = nf.shift_delta_sq(-f);
        if !seen.contains_key(&r) {
            seen.insert(r.clone(), order.len());
            order.push(r.clone());
        }
        Ok((f, r))
    };
    let mut ball_data = Vec::with_capacity(words.len());
    let nfs: Vec<NormalForm> = words.iter().map(|w| w.normal_form()).collect();
    for (w, nf) in words.iter().zip(&nfs) {
        let (f, r) = add(nf)?;
        ball_data.push((w.clone(), f, r));
    }
    for s in delta_sq_suffixes(n) {
        for nf in &nfs {
            add(&s.multiply(nf))?;
        }
    }
    // sort residues by the cone
    let words_of: Vec<BraidWord> = order.iter().map(|r| r.to_word()).collect();
    let error: RefCell<Option<BraidError>> = RefCell::new(None);
    let mut ranked: Vec<usize> = (0..order.len()).collect();
    ranked.sort_by(|&a, &b| {
        if a == b {
            return Ordering::Equal;
        }
        match p.compare(&words_of[a], &words_of[b]) {
            Ok(o) => o,
            Err(e) => {
                error.borrow_mut().get_or_insert(e);
                Ordering::Equal
            }
        }
    });
    if let Some(e) = error.into_inner() {
        return Err(e);
    }
    let mut rank = vec![0usize; order.len()];
    for (pos, &i) in ranked.iter().enumerate() {
        rank[i] = pos;
    }
    // midpoint insertion; the identity sits at 0 and Δ² at 1
    let id_index = order.iter().position(|r| r.is_identity()).expect("identity is embedded");
    let mut placed: BTreeMap<usize, BigQ> = BTreeMap::new();
    placed.insert(rank[id_index], BigQ::zero());
    let mut coord = vec![BigQ::zero(); order.len()];
    for i in 0..order.len() {
        if i == id_index {
            continue;
        }
        let rk = rank[i];
        let below = placed.range(..rk).next_back().map(|(_, v)| v.clone()).unwrap_or_else(BigQ::zero);
        let above = placed.range(rk + 1..).next().map(|(_, v)| v.clone()).unwrap_or_else(BigQ::one);
        let t = (below + above) / BigQ::from_integer(BigInt::from(2));
        placed.insert(rk, t.clone());
        coord[i] = t;
    }
    let residues: HashMap<NormalForm, BigQ> = order.into_iter().zip(coord.iter().cloned()).collect();
    let points = ball_data
        .into_iter()
        .map(|(w, f, r)| {
            let t = &residues[&r] + BigQ::from_integer(BigInt::from(f));
            (w, t)
        })
        .collect();
    Ok(Embedding { cone: p.clone(), strands: n, residues, points })
}

/// `ρ(σ_i)` through all embedded pairs `(t(h), t(σ_i h))`, with uncovered
/// residues listed.
pub struct Realised {
    pub map: PLMap,
    pub uncovered: Vec<BraidWord>,
}

pub fn realise_generator(e: &Embedding, i: usize) -> Result<Realised> {
    let n = e.strands;
    if i == 0 || i >= n {
        return Err(BraidError::BadGenerator { index: i as i64, strands: n });
    }
    let gen = NormalForm::from_word(&BraidWord::generator(n, i, true)?);
    let mut pairs = Vec::new();
    let mut uncovered = Vec::new();
    for (r, t) in &e.residues {
        match e.coordinate_nf(&gen.multiply(r))? {
            Some(y) => pairs.push((t.clone(), y)),
            None => uncovered.push(r.to_word()),
        }
    }
    if pairs.is_empty() {
        return Err(BraidError::Coverage(format!("no embedded h with σ_{i}·h embedded")));
    }
    uncovered.sort_by_key(|w| (w.len(), w.letters().to_vec()));
    Ok(Realised { map: PLMap::from_pairs(pairs)?, uncovered })
}

/// Generator maps `ρ(σ_1), …, ρ(σ_{n-1})` and their inverses.
pub struct Realisation {
    maps: Vec<PLMap>,
    inverses: Vec<PLMap>,
    pub uncovered: usize,
}

impl Realisation {
    pub fn new(e: &Embedding) -> Result<Realisation> {
        let mut maps = Vec::new();
        let mut uncovered = 0;
        for i in 1..e.strands {
            let r = realise_generator(e, i)?;
            uncovered += r.uncovered.len();
            maps.push(r.map);
        }
        let inverses = maps.iter().map(|m| m.inverse()).collect();
        Ok(Realisation { maps, inverses, uncovered })
    }

    pub fn generator(&self, letter: i8) -> &PLMap {
        let i = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            &self.maps[i]
        } else {
            &self.inverses[i]
        }
    }

    /// `ρ(β)(x)`, applying the rightmost letter first.
    pub fn apply(&self, beta: &BraidWord, x: &BigQ) -> BigQ {
        beta.letters().iter().rev().fold(x.clone(), |acc, &l| self.generator(l).eval(&acc))
    }

    /// `ρ(β)(x)` through breakpoints only; leaving the embedded set is an error.
    pub fn apply_exact(&self, beta: &BraidWord, x: &BigQ) -> Result<BigQ> {
        let mut acc = x.clone();
        for (done, &l) in beta.letters().iter().rev().enumerate() {
            acc = self.generator(l).eval_exact(&acc).ok_or_else(|| {
                BraidError::Coverage(format!(
                    "σ{l} applied after {done} letters leaves the embedded set at {}",
                    big_fraction(&acc)
                ))
            })?;
        }
        Ok(acc)
    }

    /// `ρ(β)` as a single map.
    pub fn word_map(&self, beta: &BraidWord) -> PLMap {
        beta.letters().iter().fold(PLMap::identity(), |acc, &l| acc.compose(self.generator(l)))
    }
}

/// `ρ(β)^iters(0) / iters` on the PL model.
pub fn numeric_tau(e: &Embedding, beta: &BraidWord, iters: u32) -> Result<BigQ> {
    if iters == 0 {
        return Err(BraidError::Precondition("numeric_tau needs at least one iteration".into()));
    }
    let rho = Realisation::new(e)?;
    Ok(numeric_tau_with(&rho, beta, iters))
}

pub fn numeric_tau_with(rho: &Realisation, beta: &BraidWord, iters: u32) -> BigQ {
    let mut x = BigQ::zero();
    for _ in 0..iters {
        x = rho.apply(beta, &x);
    }
    x / BigQ::from_integer(BigInt::from(iters))
}

/// `|x - y| ≤ bound` for a big rational and small ones.
pub fn within(x: &BigQ, y: &Q, bound: &Q) -> bool {
    let d = x - big(y);
    let d = if d < BigQ::zero() { -d } else { d };
    d <= big(bound)
}

/// Order, normalisation, braid relations and translation numbers of the
/// finite realisation of `p` on `ball(n, len)`.
pub fn realisation_experiment(p: &Cone, len: usize, m: u32, k: i64) -> Result<LawReport> {
    let n = p.strands();
    let e = build_embedding(p, len)?;
    let rho = Realisation::new(&e)?;
    let mut r = LawReport::new("realisation")
        .with("cone", p.name())
        .with("L", len)
        .with("m", m)
        .with("k", k)
        .with("points", e.points().len())
        .with("residues", e.residue_count())
        .with("uncovered_pairs", rho.uncovered);
    for i in 1..n {
        r.field(&format!("breakpoints.sigma{i}"), rho.generator(i as i8).len());
    }
    let id = BraidWord::identity(n)?;
    let t_id = e.coordinate(&id)?;
    let t_z = e.coordinate(&delta_sq(n))?;
    r.check(t_id == Some(BigQ::zero()), || format!("t(id) = {t_id:?}"));
    r.check(t_z == Some(BigQ::one()), || format!("t(Δ²) = {t_z:?}"));
    let pts = e.points();
    for (a, ta) in pts {
        let f = BigQ::from_integer(BigInt::from(floor(p, a)?));
        r.check(f <= *ta && *ta < &f + BigQ::one(), || format!("t({}) = {} outside its floor window", a.to_text(), big_fraction(ta)));
        for (b, tb) in pts {
            let s = p.sign(&a.invert().compose(b)?)?;
            r.check(s.cmp(&0) == tb.cmp(ta), || format!("order of {} and {} not preserved", a.to_text(), b.to_text()));
        }
    }
    // Δ² acts as the unit shift on every embedded point
    let z = delta_sq(n);
    for (b, t) in pts {
        match rho.apply_exact(&z, t) {
            Ok(y) => {
                r.check(y == t + BigQ::one(), || format!("ρ(Δ²) moves t({}) to {}", b.to_text(), big_fraction(&y)));
            }
            Err(err) => r.fail(format!("ρ(Δ²) at {}: {err}", b.to_text())),
        }
    }
    // braid relations on common embedded points
    let mut relations = Vec::new();
    for i in 1..n - 1 {
        let (a, b) = (i as i8, i as i8 + 1);
        relations.push((BraidWord::new(n, vec![a, b, a])?, BraidWord::new(n, vec![b, a, b])?));
    }
    for i in 1..n {
        for j in i + 2..n {
            let (a, b) = (i as i8, j as i8);
            relations.push((BraidWord::new(n, vec![a, b])?, BraidWord::new(n, vec![b, a])?));
        }
    }
    let mut common = 0usize;
    for (u, v) in &relations {
        for (b, t) in pts {
            if let (Ok(x), Ok(y)) = (rho.apply_exact(u, t), rho.apply_exact(v, t)) {
                common += 1;
                r.check(x == y, || format!("{} ≠ {} at t({})", u.to_text(), v.to_text(), b.to_text()));
            }
        }
    }
    r.field("relation_points", common);
    // ρ(β)ρ(β⁻¹) is the identity
    let beta = BraidWord::parse(n, "1 -2")?;
    for (b, t) in pts {
        let y = rho.apply(&beta, &rho.apply(&beta.invert(), t));
        r.check(y == *t, || format!("ρ(β)ρ(β⁻¹) moves t({})", b.to_text()));
    }
    // numeric against algebraic translation numbers
    let tol = Q::new(1, m as i64) + Q::new(1, k);
    r.field("tolerance", fraction(&tol));
    for (label, b) in [("delta", little_delta(n)), ("sub_delta_sq", sub_delta_sq(n)), ("sigma1", BraidWord::generator(n, 1, true)?)] {
        let nt = numeric_tau_with(&rho, &b, m);
        let iv = tau_interval(p, &b, k)?;
        r.field(&format!("numeric_tau.{label}"), big_fraction(&nt));
        r.field(&format!("tau_interval.{label}"), iv);
        r.check(within(&nt, &iv.midpoint(), &tol), || {
            format!("numeric τ({label}) = {} too far from {}", big_fraction(&nt), iv)
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigQ {
        BigQ::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn periodic_pl_map() {
        let f = PLMap::from_pairs(vec![(q(0, 1), q(1, 4)), (q(1, 2), q(1, 2))]).unwrap();
        assert_eq!(f.eval(&q(0, 1)), q(1, 4));
        assert_eq!(f.eval(&q(1, 4)), q(3, 8));
        assert_eq!(f.eval(&q(3, 2)), q(3, 2));
        assert_eq!(f.eval(&q(-1, 1)), q(-3, 4));
        let g = f.inverse();
        for x in [q(0, 1), q(1, 3), q(-5, 7), q(9, 4)] {
            assert_eq!(g.eval(&f.eval(&x)), x);
        }
        let h = f.compose(&g);
        assert_eq!(h.eval(&q(2, 9)), q(2, 9));
        assert!(PLMap::from_pairs(vec![(q(0, 1), q(1, 2)), (q(1, 2), q(1, 4))]).is_err());
        assert!(PLMap::from_pairs(vec![(q(0, 1), q(0, 1)), (q(1, 2), q(3, 2))]).is_err());
    }

    #[test]
    fn embedding_is_pinned_and_ordered() {
        let p = Cone::dehornoy(3).unwrap();
        let e = build_embedding(&p, 3).unwrap();
        assert_eq!(e.coordinate(&BraidWord::identity(3).unwrap()).unwrap(), Some(q(0, 1)));
        assert_eq!(e.coordinate(&delta_sq(3)).unwrap(), Some(q(1, 1)));
        let pts = e.points();
        for (a, ta) in pts {
            for (b, tb) in pts {
                let s = p.sign(&a.invert().compose(b).unwrap()).unwrap();
                assert_eq!(s.cmp(&0), tb.cmp(ta), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn realised_delta_sq_is_the_unit_shift() {
        let e = build_embedding(&Cone::dehornoy(3).unwrap(), 4).unwrap();
        let rho = Realisation::new(&e).unwrap();
        for (_, t) in e.points() {
            assert_eq!(rho.apply_exact(&delta_sq(3), t).unwrap(), t + BigQ::one());
            assert_eq!(rho.apply(&delta_sq(3), t), t + BigQ::one());
        }
        assert_eq!(numeric_tau_with(&rho, &delta_sq(3), 8), q(1, 1));
        let tau = numeric_tau_with(&rho, &little_delta(3), 9);
        assert!(within(&tau, &Q::new(1, 3), &Q::new(1, 9)));
    }

    #[test]
    fn experiment_passes_for_small_balls() {
        let r = realisation_experiment(&Cone::dehornoy(3).unwrap(), 3, 8, 32).unwrap();
        assert!(r.passed, "{r}");
        let r = realisation_experiment(&Cone::dd_positive(4).unwrap(), 2, 8, 32).unwrap();
        assert!(r.passed, "{r}");
    }
}
