//! Exact identity checks, ball-scale cone axioms and the rigidity experiments.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::braid::{delta, delta_sq, dd_generators, little_delta, sub_delta_sq, BraidWord, NormalForm};
use crate::cones::{
    ball, boundedness_probe, cone_agreement, floor, fraction, tau_interval, Cone, RationalInterval, Q,
};
use crate::dehornoy::{handle_reduce, in_subgroup, sigma_sign, sigma_sign_with_word};
use crate::error::{BraidError, Result};
use crate::report::LawReport;
use crate::sampling::Sampler;

fn g(n: usize, i: usize) -> BraidWord {
    BraidWord::generator(n, i, true).expect("generator in range")
}

fn text(w: &BraidWord) -> String {
    format!("B{}[{}]", w.strands(), w.to_text())
}

/// `δ_n^n = Δ_n²`, `Δ_n = δ_n ⋯ δ_2`, `δ_n σ_i = σ_{i+1} δ_n` and centrality of `Δ_n²`.
pub fn verify_garside_identities(n: usize) -> Result<LawReport> {
    let mut r = LawReport::new("garside_identities").with("n", n);
    let dn = little_delta(n);
    r.check(dn.pow(n as i64).equals(&delta_sq(n)), || format!("delta_{n}^{n} != Delta_{n}^2"));
    let mut prod = BraidWord::identity(n)?;
    for k in (2..=n).rev() {
        prod = prod.compose(&little_delta(k).embed(n)?)?;
    }
    r.check(prod.equals(&delta(n)), || format!("delta_{n} ... delta_2 != Delta_{n}"));
    for i in 1..=n.saturating_sub(2) {
        let lhs = dn.compose(&g(n, i))?;
        let rhs = g(n, i + 1).compose(&dn)?;
        r.check(lhs.equals(&rhs), || format!("delta_{n} s{i} != s{} delta_{n}", i + 1));
    }
    let z = delta_sq(n);
    for i in 1..n {
        let s = g(n, i);
        r.check(z.compose(&s)?.equals(&s.compose(&z)?), || format!("Delta^2 does not commute with s{i}"));
    }
    Ok(r)
}

/// The two families of identities relating `Δ_{n-1}^{∓2(k+1)} Δ_n^{2k}` to
/// powers of `Δ_n δ_n Δ_n⁻¹ δ_n` and `δ_n⁻¹ Δ_n δ_n^{n-1} Δ_n`.
pub fn verify_lemma_identities(n: usize, k_max: i64) -> Result<LawReport> {
    if n < 3 {
        return Err(BraidError::Precondition(format!("lemma identities need n >= 3, got {n}")));
    }
    let mut r = LawReport::new("lemma_identities").with("n", n).with("k_max", k_max);
    let (d, dl, z, zs) = (delta(n), little_delta(n), delta_sq(n), sub_delta_sq(n));
    let u = d.compose(&dl)?.compose(&d.invert())?.compose(&dl)?;
    let v = dl.invert().compose(&d)?.compose(&dl.pow(n as i64 - 1))?.compose(&d)?;
    for k in 0..=k_max {
        let lhs1 = zs.pow(-(k + 1)).compose(&z.pow(k))?;
        let rhs1 = zs.pow(-1).compose(&u.pow(k))?;
        r.check(lhs1.equals(&rhs1), || format!("identity (1) fails at n={n} k={k}"));
        let lhs2 = zs.pow(k + 1).compose(&z.pow(k))?;
        let rhs2 = zs.compose(&v.pow(k))?;
        r.check(lhs2.equals(&rhs2), || format!("identity (2) fails at n={n} k={k}"));
    }
    Ok(r)
}

/// Sign table of a cone over a ball, keyed by normal form.
struct SignTable {
    words: Vec<BraidWord>,
    forms: Vec<NormalForm>,
    signs: Vec<i8>,
    index: HashMap<NormalForm, usize>,
}

impl SignTable {
    fn new(p: &Cone, words: Vec<BraidWord>) -> Result<SignTable> {
        let forms: Vec<NormalForm> = words.par_iter().map(|w| w.normal_form()).collect();
        let signs = words.par_iter().map(|w| p.sign(w)).collect::<Result<Vec<i8>>>()?;
        let index = forms.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        Ok(SignTable { words, forms, signs, index })
    }

    fn positives(&self) -> Vec<usize> {
        (0..self.words.len()).filter(|&i| self.signs[i] == 1).collect()
    }
}

/// Cone axioms on a ball: `sign = 0` exactly at the identity, antisymmetry,
/// and `P·P ⊂ P` for pairs whose product lies in the ball again.
pub fn verify_cone_axioms(p: &Cone, words: Vec<BraidWord>) -> Result<LawReport> {
    let mut r = LawReport::new("cone_axioms").with("cone", p.name()).with("ball_size", words.len());
    let t = SignTable::new(p, words)?;
    for i in 0..t.words.len() {
        let id = t.forms[i].is_identity();
        r.check((t.signs[i] == 0) == id, || format!("sign {} at {} (identity: {id})", t.signs[i], text(&t.words[i])));
        let inv = p.sign(&t.words[i].invert())?;
        r.check(inv == -t.signs[i], || format!("sign({}) = {} but its inverse has {inv}", text(&t.words[i]), t.signs[i]));
    }
    let pos = t.positives();
    let bad: Vec<(usize, usize, i64)> = pos
        .par_iter()
        .map(|&a| {
            let mut tested = 0i64;
            for &b in &pos {
                let prod = t.forms[a].multiply(&t.forms[b]);
                if let Some(&c) = t.index.get(&prod) {
                    tested += 1;
                    if t.signs[c] != 1 {
                        return (a, b, -1);
                    }
                }
            }
            (a, usize::MAX, tested)
        })
        .collect();
    let mut closed_pairs = 0i64;
    for (a, b, tested) in bad {
        if tested < 0 {
            r.fail(format!("{} and {} positive, product not", text(&t.words[a]), text(&t.words[b])));
        } else {
            closed_pairs += tested;
        }
    }
    r.checks += closed_pairs as u64;
    r.field("closure_pairs", closed_pairs);
    Ok(r)
}

/// Dehornoy-specific checks on `ball(n, len)`: the reduced word certifies the
/// sign, and `B_{n-1}` is convex.
pub fn verify_dehornoy_ball(n: usize, len: usize) -> Result<LawReport> {
    let words = ball(n, len)?;
    let p = Cone::dehornoy(n)?;
    let mut r = LawReport::new("dehornoy_ball").with("n", n).with("L", len);
    r.absorb("axioms", &verify_cone_axioms(&p, words.clone())?);

    // trichotomy with certificate
    for w in &words {
        let (s, red) = sigma_sign_with_word(w)?;
        let is_id = w.is_identity();
        let certified = red.equals(w)
            && match s.main_index {
                None => red.is_empty() && is_id,
                Some(i) => red.letters().iter().all(|&l| (l.unsigned_abs() as usize) < i || (l.unsigned_abs() as usize == i && l.signum() == s.sign)),
            };
        r.check(certified, || format!("no certificate for the sign of {}", text(w)));
        let inv = sigma_sign(&w.invert())?;
        r.check(inv.sign == -s.sign && inv.main_index == s.main_index, || format!("inverse of {} has sign {inv:?}", text(w)));
    }

    // convexity of B_{n-1}: id < x < c with c ∈ B_{n-1} forces x ∈ B_{n-1}
    let inside: Vec<bool> = words.par_iter().map(|w| in_subgroup(w, n - 1)).collect::<Result<_>>()?;
    let signs: Vec<i8> = words.par_iter().map(|w| p.sign(w)).collect::<Result<_>>()?;
    let sub_pos: Vec<usize> = (0..words.len()).filter(|&i| inside[i] && signs[i] == 1).collect();
    let sub_all: Vec<usize> = (0..words.len()).filter(|&i| inside[i]).collect();
    let outer_pos: Vec<usize> = (0..words.len()).filter(|&i| !inside[i] && signs[i] == 1).collect();
    let failures: Vec<String> = outer_pos
        .par_iter()
        .filter_map(|&x| {
            let xi = words[x].invert();
            for &c in &sub_pos {
                // x < c would put x between id and c
                match p.sign(&xi.compose_unchecked(&words[c])) {
                    Ok(1) => return Some(format!("id < {} < {} with the latter in B_{}", text(&words[x]), text(&words[c]), n - 1)),
                    Ok(_) => {}
                    Err(e) => return Some(e.to_string()),
                }
            }
            for &a in &sub_all {
                match p.sign(&words[a].invert().compose_unchecked(&words[x])) {
                    Ok(1) => {}
                    Ok(_) => return Some(format!("a^-1 b not positive for a={} b={}", text(&words[a]), text(&words[x]))),
                    Err(e) => return Some(e.to_string()),
                }
            }
            None
        })
        .collect();
    r.checks += (outer_pos.len() * (sub_pos.len() + sub_all.len())) as u64;
    if let Some(f) = failures.into_iter().next() {
        r.fail(f);
    }
    r.field("subgroup_elements", sub_all.len()).field("outside_positive", outer_pos.len());
    Ok(r)
}

/// Flips the sign of one element (and its inverse stays as it was), giving a
/// cone oracle that violates antisymmetry.
pub fn planted_mutant(base: &Cone, target: &BraidWord) -> Cone {
    let base2 = base.clone();
    let nf = target.normal_form();
    Cone::custom(base.strands(), &format!("mutant:{}", base.name()), base.delta_sq_sign(), move |b| {
        let s = base2.sign(b)?;
        Ok(if b.normal_form() == nf { -s } else { s })
    })
}

/// Positive words of length `1..=len` in the given generators.
fn semigroup_products(gens: &[BraidWord], len: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut layer: Vec<BraidWord> = gens.to_vec();
    for _ in 0..len {
        out.extend(layer.iter().cloned());
        if out.len() > 200_000 {
            break;
        }
        layer = layer.iter().flat_map(|w| gens.iter().map(move |h| w.compose_unchecked(h))).collect();
    }
    out
}

/// DD cone axioms on `ball(n, len)`, positivity of the generator semigroup up
/// to length `len`, and the closed form `(-1)^{i+1}` times the `i`-sign.
pub fn verify_dd_suite(p: &Cone, len: usize, semigroup_len: usize) -> Result<LawReport> {
    let n = p.strands();
    let words = ball(n, len)?;
    let mut r = LawReport::new("dd_suite").with("cone", p.name()).with("n", n).with("L", len);
    r.absorb("axioms", &verify_cone_axioms(p, words.clone())?);
    if !p.is_custom() && p.name().starts_with("dd:") {
        let z = p.sign(&delta_sq(n))?;
        let parity = if n.is_multiple_of(2) { 1 } else { -1 };
        r.field("delta_sq_sign", z);
        r.check(z == parity, || format!("Δ_{n}² has DD sign {z}, expected {parity}"));
    }
    let prods = semigroup_products(&dd_generators(n), semigroup_len);
    r.field("semigroup_products", prods.len());
    let bad = prods
        .par_iter()
        .map(|w| p.sign(w).map(|s| (s, w)))
        .collect::<Result<Vec<_>>>()?;
    for (s, w) in bad {
        r.check(s == 1, || format!("DD generator product {} has sign {s}", text(w)));
    }
    for w in &words {
        let s = sigma_sign(w)?;
        let expected = match s.main_index {
            None => 0,
            Some(i) => if i % 2 == 1 { s.sign } else { -s.sign },
        };
        let got = p.sign(w)?;
        r.check(got == expected, || format!("closed form predicts {expected} for {}, cone says {got}", text(w)));
    }
    Ok(r)
}

pub fn verify_dd_uniqueness(n: usize, len: usize) -> Result<LawReport> {
    verify_dd_suite(&Cone::dd(n)?, len, len)
}

/// Cones relative to which `Δ_{n-1}²` is bounded: Dehornoy, DD with `Δ²`
/// positive, three conjugates of Dehornoy and three lexicographic cones over
/// different subcones of `B_{n-1}`.
pub fn rigid_family(n: usize) -> Result<Vec<Cone>> {
    let d = Cone::dehornoy(n)?;
    let sub = Cone::dehornoy(n - 1)?;
    let top = g(n, n - 1);
    Ok(vec![
        d.clone(),
        Cone::dd_positive(n)?,
        Cone::conjugate(&d, &g(n, 1))?,
        Cone::conjugate(&d, &top.compose(&g(n, 1).invert())?)?,
        Cone::conjugate(&d, &delta(n))?,
        Cone::lex_rel(n, 1, &sub.reverse())?,
        Cone::lex_rel(n, 1, &Cone::dd(n - 1)?)?,
        Cone::lex_rel(n, 1, &Cone::conjugate(&sub, &little_delta(n - 1))?)?,
    ])
}

/// Exponent sum first, Dehornoy on its kernel; `Δ_{n-1}²` is cofinal here.
pub fn contrast_cone(n: usize) -> Result<Cone> {
    Cone::expsum(n, &Cone::dehornoy(n)?)
}

/// `τ_β(expsum) = e(β) / (n(n-1))`, since `e` is a homomorphism and `e(Δ²) = n(n-1)`.
pub fn expsum_tau(beta: &BraidWord) -> Q {
    let n = beta.strands() as i64;
    Q::new(beta.exponent_sum(), n * (n - 1))
}

pub fn rigidity_experiment(n: usize, sample_size: usize, k: i64, seed: u64) -> Result<LawReport> {
    if !(3..=5).contains(&n) {
        return Err(BraidError::Precondition(format!("rigidity experiment needs n in 3..=5, got {n}")));
    }
    let mut r = LawReport::new("rigidity")
        .with("n", n)
        .with("samples", sample_size)
        .with("k", k)
        .with("seed", seed);
    let family = rigid_family(n)?;
    let zs = sub_delta_sq(n);
    let zero = Q::from_integer(0);
    let tau_all = |b: &BraidWord| -> Result<Vec<RationalInterval>> {
        family.par_iter().map(|p| tau_interval(p, b, k)).collect()
    };

    // (i) Δ_{n-1}² bounded with τ = 0 in every member
    for p in &family {
        let probe = boundedness_probe(p, &zs, 2 * k)?;
        r.check(probe.is_bounded(), || format!("{}: Delta_{}^2 {}", p.name(), n - 1, probe.verdict));
        let t = tau_interval(p, &zs, k)?;
        r.check(t.contains(zero), || format!("{}: tau(Delta_{}^2) in {t} misses 0", p.name(), n - 1));
        r.field(&format!("tau_sub.{}", p.name()), t);
    }

    // (ii) pairwise intersection on samples, plus a central sample
    let mut sampler = Sampler::new(seed);
    let mut samples = sampler.words_up_to(n, 8, sample_size);
    samples.push(delta_sq(n).pow(2));
    let mut dehornoy_intervals = Vec::new();
    for (j, b) in samples.iter().enumerate() {
        let ts = tau_all(b)?;
        for a in 0..ts.len() {
            for c in a + 1..ts.len() {
                r.check(ts[a].intersects(&ts[c]), || {
                    format!("{}: {} gives {} but {} gives {}", text(b), family[a].name(), ts[a], family[c].name(), ts[c])
                });
            }
        }
        if j == sample_size {
            r.check(ts.iter().all(|t| t.contains(Q::from_integer(2))), || "Delta^4 intervals miss 2".into());
        }
        dehornoy_intervals.push(ts[0]);
    }

    // (iii) the contrast cone
    let e = contrast_cone(n)?;
    let expected = Q::new(n as i64 - 2, n as i64);
    let te = tau_interval(&e, &zs, k)?;
    r.field("tau_sub.contrast", te).field("tau_sub.contrast_expected", fraction(&expected));
    r.check(te.contains(expected), || format!("expsum tau(Delta_{}^2) = {te} misses {expected}", n - 1));
    let origin = RationalInterval::new(zero, Q::new(1, k));
    r.check(!te.intersects(&origin), || format!("expsum interval {te} meets [0, 1/{k}]"));
    let mut separating = None;
    for (b, td) in samples.iter().zip(&dehornoy_intervals) {
        let t = tau_interval(&e, b, k)?;
        if !t.intersects(td) {
            separating = Some(format!("{} expsum {t} dehornoy {td}", text(b)));
            break;
        }
    }
    r.check(separating.is_some(), || "no sample separates expsum from Dehornoy".into());
    r.field("separating_sample", separating.unwrap_or_else(|| "none".into()));
    Ok(r)
}

/// Agreement between `Δ_{n-1}^{2i}`-conjugates of a base cone and the
/// lexicographic cone over `dehornoy(n-1)`, on ball elements outside `B_{n-1}`.
///
/// The base is Dehornoy conjugated by `Δ_n`; the row for Dehornoy itself is
/// reported as `literal_agreement`.
pub fn convergence_experiment(n: usize, i_max: i64, len: usize) -> Result<LawReport> {
    let mut r = LawReport::new("convergence").with("n", n).with("i_max", i_max).with("L", len);
    let d = Cone::dehornoy(n)?;
    let base = Cone::conjugate(&d, &delta(n))?;
    let target = Cone::lex_rel(n, 1, &Cone::dehornoy(n - 1)?)?;
    let words = ball(n, len)?;
    let outside: Vec<BraidWord> = words
        .into_iter()
        .filter_map(|w| match in_subgroup(&w, n - 1) {
            Ok(true) => None,
            Ok(false) => Some(Ok(w)),
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    r.field("base", base.name()).field("target", target.name()).field("outside", outside.len());
    let zs = sub_delta_sq(n);
    let mut prev = Q::from_integer(0);
    let mut row = Vec::new();
    let mut literal = Vec::new();
    for i in 0..=i_max {
        let c = Cone::conjugate(&base, &zs.pow(i))?;
        let a = cone_agreement(&c, &target, &outside)?;
        r.check(a >= prev, || format!("agreement drops from {prev} to {a} at i={i}"));
        prev = a;
        row.push(fraction(&a));
        let lit = cone_agreement(&Cone::conjugate(&d, &zs.pow(i))?, &target, &outside)?;
        literal.push(fraction(&lit));
    }
    r.check(prev == Q::from_integer(1), || format!("agreement {prev} at i={i_max}, not 1"));
    r.field("agreement", row.join(" ")).field("literal_agreement", literal.join(" "));
    if i_max >= 0 {
        let first = Cone::conjugate(&base, &BraidWord::identity(n)?)?;
        let a0 = cone_agreement(&first, &target, &outside)?;
        r.field("agreement_at_0_below_one", a0 < Q::from_integer(1));
    }
    Ok(r)
}

fn uncountability_candidates(n: usize) -> Result<Vec<Cone>> {
    let d = Cone::dehornoy(n)?;
    let sub = Cone::dehornoy(n - 1)?;
    let top = g(n, n - 1);
    let lex_rev = Cone::lex_rel(n, 1, &sub.reverse())?;
    Ok(vec![
        d.clone(),
        lex_rev.clone(),
        Cone::conjugate(&d, &top)?,
        Cone::conjugate(&d, &top.invert())?,
        Cone::conjugate(&d, &delta(n))?,
        Cone::conjugate(&d, &top.pow(2))?,
        Cone::conjugate(&d, &little_delta(n))?,
        Cone::conjugate(&lex_rev, &top)?,
        Cone::conjugate(&lex_rev, &top.invert())?,
        Cone::conjugate(&d, &top.compose(&g(n, 1).invert())?)?,
        Cone::conjugate(&d, &little_delta(n).invert())?,
        Cone::conjugate(&lex_rev, &delta(n))?,
    ])
}

/// `count` pairwise distinct cones, each with `Δ_{n-1}²` bounded and τ
/// intervals meeting the Dehornoy ones on 10 samples.
pub fn uncountability_witnesses(n: usize, count: usize, seed: u64) -> Result<(LawReport, Vec<Cone>)> {
    if count > 8 {
        return Err(BraidError::Precondition(format!("at most 8 witnesses, asked for {count}")));
    }
    let mut r = LawReport::new("uncountable").with("n", n).with("count", count).with("seed", seed);
    let words = ball(n, 4)?;
    let d = Cone::dehornoy(n)?;
    let zs = sub_delta_sq(n);
    let samples = Sampler::new(seed).words_up_to(n, 8, 10);
    let k = 16;
    let reference: Vec<RationalInterval> = samples.iter().map(|b| tau_interval(&d, b, k)).collect::<Result<_>>()?;
    let mut chosen: Vec<(Cone, Vec<i8>)> = Vec::new();
    for c in uncountability_candidates(n)? {
        if chosen.len() == count {
            break;
        }
        let signs: Vec<i8> = words.par_iter().map(|w| c.sign(w)).collect::<Result<_>>()?;
        if chosen.iter().any(|(_, s)| *s == signs) {
            continue;
        }
        let probe = boundedness_probe(&c, &zs, 64)?;
        r.check(probe.is_bounded(), || format!("{}: {}", c.name(), probe.verdict));
        r.check(c.delta_sq_sign() == 1, || format!("{} has Delta^2 negative", c.name()));
        for (b, t0) in samples.iter().zip(&reference) {
            let t = tau_interval(&c, b, k)?;
            r.check(t.intersects(t0), || format!("{}: tau({}) = {t}, Dehornoy {t0}", c.name(), text(b)));
        }
        chosen.push((c, signs));
    }
    r.check(chosen.len() == count, || format!("only {} distinct candidates", chosen.len()));
    for (i, (c, _)) in chosen.iter().enumerate() {
        r.field(&format!("cone.{i}"), c.name());
    }
    Ok((r, chosen.into_iter().map(|(c, _)| c).collect()))
}

/// Every cone the crate builds on `B_n` with `Δ²` positive.
pub fn z_positive_cones(n: usize) -> Result<Vec<Cone>> {
    let mut out = rigid_family(n)?;
    out.push(contrast_cone(n)?);
    out.push(Cone::expsum(n, &Cone::dd_positive(n)?)?);
    out.push(Cone::lex_rel(n, -1, &Cone::dehornoy(n - 1)?)?.reverse());
    Ok(out)
}

/// `floor(gh) - floor(g) - floor(h) ∈ {0, 1}` on `pairs` seeded pairs per cone.
pub fn verify_floor_defect(cones: &[Cone], pairs: usize, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("floor_defect").with("pairs", pairs).with("seed", seed);
    for p in cones {
        let mut s = Sampler::new(seed);
        let n = p.strands();
        let data: Vec<(BraidWord, BraidWord)> = (0..pairs).map(|_| (s.word_up_to(n, 8), s.word_up_to(n, 8))).collect();
        let outcomes = data
            .par_iter()
            .map(|(a, b)| -> Result<i64> { Ok(floor(p, &a.compose(b)?)? - floor(p, a)? - floor(p, b)?) })
            .collect::<Result<Vec<_>>>()?;
        for ((a, b), d) in data.iter().zip(outcomes) {
            r.check(d == 0 || d == 1, || format!("{}: defect {d} at g={} h={}", p.name(), text(a), text(b)));
        }
    }
    Ok(r)
}

/// Pairs of cones agreeing on floors of `g, …, g^m` keep
/// `|[g^ℓ]_P - [g^ℓ]_Q| < ℓ/m + 1` for `ℓ ≤ 4m`.
pub fn verify_continuity_bound(cones: &[Cone], m: i64, samples: usize, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("continuity_bound").with("m", m).with("samples", samples).with("seed", seed);
    let mut s = Sampler::new(seed);
    let n = cones[0].strands();
    let mut qualifying = 0u64;
    for _ in 0..samples {
        let gw = s.word_up_to(n, 6);
        let floors: Vec<Vec<i64>> = cones
            .par_iter()
            .map(|p| (1..=4 * m).map(|l| floor(p, &gw.pow(l))).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        for a in 0..cones.len() {
            for b in a + 1..cones.len() {
                if floors[a][..m as usize] != floors[b][..m as usize] {
                    continue;
                }
                qualifying += 1;
                for l in 1..=4 * m {
                    let diff = (floors[a][l as usize - 1] - floors[b][l as usize - 1]).abs();
                    // diff < l/m + 1  ⇔  m·diff < l + m
                    r.check(m * diff < l + m, || {
                        format!("{} vs {} at g={} l={l}: diff {diff}", cones[a].name(), cones[b].name(), text(&gw))
                    });
                }
            }
        }
    }
    r.check(qualifying > 0, || "no pair of cones agreed on the first m floors".into());
    r.field("qualifying_pairs", qualifying);
    Ok(r)
}

/// Lexicographic cones with the same orientation but different subcones have
/// floors within 1 of each other on the ball.
pub fn verify_relative_translation(n: usize, len: usize) -> Result<LawReport> {
    let mut r = LawReport::new("relative_translation").with("n", n).with("L", len);
    let sub = Cone::dehornoy(n - 1)?;
    let subs = [sub.clone(),
        sub.reverse(),
        Cone::dd(n - 1)?,
        Cone::dd(n - 1)?.reverse(),
        Cone::conjugate(&sub, &little_delta(n - 1))?];
    let cones: Vec<Cone> = subs.iter().map(|q| Cone::lex_rel(n, 1, q)).collect::<Result<_>>()?;
    let words = ball(n, len)?;
    let floors: Vec<Vec<i64>> = cones
        .par_iter()
        .map(|p| words.iter().map(|w| floor(p, w)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for a in 0..cones.len() {
        for b in a + 1..cones.len() {
            for (j, w) in words.iter().enumerate() {
                let d = (floors[a][j] - floors[b][j]).abs();
                r.check(d <= 1, || format!("{} vs {} on {}: floors differ by {d}", cones[a].name(), cones[b].name(), text(w)));
            }
        }
    }
    Ok(r)
}

/// τ intervals of `P` and `γPγ⁻¹` overlap.
pub fn verify_conjugation_invariance(p: &Cone, samples: usize, k: i64, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("conjugation_invariance").with("cone", p.name()).with("k", k).with("seed", seed);
    let mut s = Sampler::new(seed);
    let n = p.strands();
    for _ in 0..samples {
        let b = s.word_up_to(n, 8);
        let gamma = s.word_up_to(n, 6);
        let c = Cone::conjugate(p, &gamma)?;
        let (t1, t2) = (tau_interval(p, &b, k)?, tau_interval(&c, &b, k)?);
        r.check(t1.intersects(&t2), || format!("tau({}) {t1} vs {t2} after conjugating by {}", text(&b), text(&gamma)));
    }
    Ok(r)
}

/// `τ(Δ_{n-1}²)` at `k` lies in `(-1, 1 + 1/k)` for every cone given.
pub fn verify_bounded_translation(cones: &[Cone], k: i64) -> Result<LawReport> {
    let mut r = LawReport::new("bounded_translation").with("k", k);
    for p in cones {
        let t = tau_interval(p, &sub_delta_sq(p.strands()), k)?;
        r.check(t.inside_open(Q::from_integer(-1), Q::new(k + 1, k)), || format!("{}: {t}", p.name()));
    }
    Ok(r)
}

/// Products of two conjugated roots of `Δ²` are positive and `(xy)^k ≥ Δ²` for some `k ≤ 4`.
pub fn verify_root_products(p: &Cone, samples: usize, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("root_products").with("cone", p.name()).with("seed", seed);
    let n = p.strands();
    let roots = [little_delta(n), little_delta(n).compose(&g(n, 1))?, delta(n)];
    let mut s = Sampler::new(seed);
    for _ in 0..samples {
        let pick = |s: &mut Sampler| -> BraidWord {
            let root = &roots[s.range(0, roots.len() as i64 - 1) as usize];
            let gamma = s.word_up_to(n, 4);
            gamma.compose_unchecked(root).compose_unchecked(&gamma.invert())
        };
        let (x, y) = (pick(&mut s), pick(&mut s));
        let xy = x.compose(&y)?;
        r.check(p.sign(&xy)? == 1, || format!("x={} y={} but xy is not positive", text(&x), text(&y)));
        let probe = boundedness_probe(p, &xy, 4)?;
        r.check(probe.witness().is_some(), || format!("xy={} has no cofinal witness below 4", text(&xy)));
    }
    Ok(r)
}

/// Floor defect, continuity, relative translation, bounded translation,
/// conjugation invariance and root products on `B_n`.
pub fn verify_quasimorphism(n: usize, pairs: usize, k: i64, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("quasimorphism").with("n", n).with("k", k).with("seed", seed);
    let cones = z_positive_cones(n)?;
    let d = Cone::dehornoy(n)?;
    r.absorb("floor_defect", &verify_floor_defect(&cones, pairs, seed)?);
    r.absorb("continuity", &verify_continuity_bound(&cones, 4, 12, seed)?);
    r.absorb("relative_translation", &verify_relative_translation(n, 4)?);
    r.absorb("bounded_translation", &verify_bounded_translation(&cones, 64)?);
    r.absorb("conjugation_invariance", &verify_conjugation_invariance(&d, 10, k, seed)?);
    r.absorb("root_products", &verify_root_products(&d, 10, seed)?);
    Ok(r)
}

/// Handle reduction output for tests and the CLI.
pub fn reduced_text(w: &BraidWord) -> Result<String> {
    Ok(handle_reduce(w)?.to_text())
}
