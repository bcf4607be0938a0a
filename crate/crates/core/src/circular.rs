//! Circular orderings of `G_n = B_n/⟨Δ_n²⟩` as `{0,1}`-valued cocycles, their
//! central-extension lifts and rotation numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::braid::{delta_sq, little_delta, sub_delta_sq, BraidWord, NormalForm};
use crate::cones::{floor, Cone, RationalInterval, Q};
use crate::error::{BraidError, Result};
use crate::laws::{contrast_cone, rigid_family};
use crate::report::LawReport;
use crate::sampling::Sampler;

/// An element of `G_n`, keyed by the normal form with `Δ`-power reduced mod 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    key: NormalForm,
}

impl QuotientElement {
    pub fn identity(n: usize) -> Self {
        QuotientElement { key: NormalForm::identity(n) }
    }

    pub fn from_braid(b: &BraidWord) -> Self {
        QuotientElement::from_normal_form(&b.normal_form())
    }

    fn from_normal_form(nf: &NormalForm) -> Self {
        let shift = nf.delta_power().div_euclid(2);
        QuotientElement { key: nf.shift_delta_sq(-shift) }
    }

    pub fn strands(&self) -> usize {
        self.key.strands()
    }

    pub fn is_identity(&self) -> bool {
        self.key.is_identity()
    }

    /// Some braid mapping to this element.
    pub fn representative(&self) -> BraidWord {
        self.key.to_word()
    }

    pub fn mul(&self, other: &QuotientElement) -> QuotientElement {
        QuotientElement::from_normal_form(&self.key.multiply(&other.key))
    }

    pub fn inverse(&self) -> QuotientElement {
        QuotientElement::from_normal_form(&self.key.inverse())
    }

    pub fn pow(&self, k: i64) -> QuotientElement {
        QuotientElement::from_braid(&self.representative().pow(k))
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}[{}]", self.strands(), self.representative().to_text())
    }
}

/// `a` and `b` have the same image in `G_n`.
pub fn quotient_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(a.invert().compose(b)?.normal_form().is_delta_sq_power())
}

struct CocycleInner {
    cone: Cone,
    /// floor-0 representatives, stored as normal forms
    sections: Mutex<HashMap<QuotientElement, NormalForm>>,
}

/// `f(g,h) = floor(P, s(g)s(h))` where `s` picks the floor-0 lift, or the
/// opposite cocycle of that.
#[derive(Clone)]
pub struct CircularCocycle {
    inner: Arc<CocycleInner>,
    opposite: bool,
}

impl CircularCocycle {
    pub fn from_cone(p: &Cone) -> Result<CircularCocycle> {
        if p.delta_sq_sign() != 1 {
            return Err(BraidError::Precondition(format!("{} has Δ² negative; use its reverse", p.name())));
        }
        Ok(CircularCocycle {
            inner: Arc::new(CocycleInner { cone: p.clone(), sections: Mutex::new(HashMap::new()) }),
            opposite: false,
        })
    }

    pub fn cone(&self) -> &Cone {
        &self.inner.cone
    }

    pub fn is_opposite(&self) -> bool {
        self.opposite
    }

    pub fn strands(&self) -> usize {
        self.inner.cone.strands()
    }

    pub fn name(&self) -> String {
        let base = format!("cocycle({})", self.inner.cone.name());
        if self.opposite {
            format!("op({base})")
        } else {
            base
        }
    }

    /// The lift of `g` with floor 0 in the base cone.
    pub fn section(&self, g: &QuotientElement) -> Result<BraidWord> {
        Ok(self.section_nf(g)?.to_word())
    }

    fn section_nf(&self, g: &QuotientElement) -> Result<NormalForm> {
        if let Some(nf) = self.inner.sections.lock().expect("section cache").get(g) {
            return Ok(nf.clone());
        }
        let rep = g.representative();
        let f = floor(&self.inner.cone, &rep)?;
        let nf = rep.normal_form().shift_delta_sq(-f);
        self.inner.sections.lock().expect("section cache").insert(g.clone(), nf.clone());
        Ok(nf)
    }

    fn base_eval(&self, g: &QuotientElement, h: &QuotientElement) -> Result<i64> {
        let prod = self.section_nf(g)?.multiply(&self.section_nf(h)?);
        floor(&self.inner.cone, &prod.to_word())
    }

    pub fn eval(&self, g: &QuotientElement, h: &QuotientElement) -> Result<i64> {
        let f = self.base_eval(g, h)?;
        if self.opposite && !g.is_identity() && !h.is_identity() && !g.mul(h).is_identity() {
            Ok(1 - f)
        } else {
            Ok(f)
        }
    }

    pub fn opposite(&self) -> CircularCocycle {
        CircularCocycle { inner: self.inner.clone(), opposite: !self.opposite }
    }
}

impl fmt::Debug for CircularCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn cocycle_from_cone(p: &Cone) -> Result<CircularCocycle> {
    CircularCocycle::from_cone(p)
}

pub fn opposite(f: &CircularCocycle) -> CircularCocycle {
    f.opposite()
}

/// `(m, g)` in the central extension `ℤ ×_f G_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftElement {
    pub m: i64,
    pub g: QuotientElement,
}

impl LiftElement {
    pub fn new(m: i64, g: QuotientElement) -> Self {
        LiftElement { m, g }
    }

    /// Floor with respect to the central generator `(1, id)`.
    pub fn floor(&self) -> i64 {
        self.m
    }
}

/// `(m, g)(m', h) = (m + m' + f(g, h), gh)`.
pub fn lift_mul(x: &LiftElement, y: &LiftElement, f: &CircularCocycle) -> Result<LiftElement> {
    Ok(LiftElement { m: x.m + y.m + f.eval(&x.g, &y.g)?, g: x.g.mul(&y.g) })
}

/// Integer part of `(0, g)^k`, i.e. `Σ_{i<k} f(g^i, g)`.
pub fn lift_power_floor(f: &CircularCocycle, g: &QuotientElement, k: i64) -> Result<i64> {
    let mut acc = LiftElement::new(0, g.clone());
    let step = LiftElement::new(0, g.clone());
    for _ in 1..k {
        acc = lift_mul(&acc, &step, f)?;
    }
    Ok(acc.m)
}

/// Rotation number of `g` as `[m_k/k, (m_k+1)/k]` translated into `[0, 1)`.
pub fn rot(f: &CircularCocycle, g: &QuotientElement, k: i64) -> Result<RationalInterval> {
    if k < 1 {
        return Err(BraidError::Precondition(format!("rot needs k >= 1, got {k}")));
    }
    let m = lift_power_floor(f, g, k)?;
    Ok(RationalInterval::from_floor(m, k).mod_one())
}

/// Identity normalisation, `{0,1}` values, `f(g,g⁻¹) = 1` and the cocycle
/// identity on `triples` seeded random triples.
pub fn verify_cocycle_axioms(f: &CircularCocycle, triples: usize, max_len: usize, seed: u64) -> Result<LawReport> {
    let n = f.strands();
    let mut r = LawReport::new("cocycle_axioms").with("cocycle", f.name()).with("triples", triples).with("seed", seed);
    let mut s = Sampler::new(seed);
    let id = QuotientElement::identity(n);
    for _ in 0..triples {
        let [g, h, k] = [0; 3].map(|_| QuotientElement::from_braid(&s.word_up_to(n, max_len)));
        let show = |x: &QuotientElement| format!("{x:?}");
        for x in [&g, &h, &k] {
            let (a, b) = (f.eval(&id, x)?, f.eval(x, &id)?);
            r.check(a == 0 && b == 0, || format!("f(id,{0}) = {a}, f({0},id) = {b}", show(x)));
            if !x.is_identity() {
                let v = f.eval(x, &x.inverse())?;
                r.check(v == 1, || format!("f({0}, {0}^-1) = {v}", show(x)));
            }
        }
        let vals = [f.eval(&h, &k)?, f.eval(&g.mul(&h), &k)?, f.eval(&g, &h.mul(&k))?, f.eval(&g, &h)?];
        r.check(vals.iter().all(|v| *v == 0 || *v == 1), || format!("value outside {{0,1}}: {vals:?}"));
        let d = vals[0] - vals[1] + vals[2] - vals[3];
        r.check(d == 0, || format!("coboundary {d} at ({}, {}, {})", show(&g), show(&h), show(&k)));
    }
    Ok(r)
}

/// Compares rotation numbers of `f1` and `f2` (or `f2^op`, chosen by the rotation
/// number of `δ_n`) on `samples`; a disjoint pair separates the two classes.
pub fn semiconjugacy_test(
    f1: &CircularCocycle,
    f2: &CircularCocycle,
    samples: &[QuotientElement],
    k: i64,
) -> Result<LawReport> {
    if f1.strands() != f2.strands() {
        return Err(BraidError::StrandMismatch { left: f1.strands(), right: f2.strands() });
    }
    let n = f1.strands();
    let mut r = LawReport::new("semiconjugacy").with("f1", f1.name()).with("f2", f2.name()).with("k", k);
    let dn = QuotientElement::from_braid(&little_delta(n));
    let (r1, r2) = (rot(f1, &dn, k)?, rot(f2, &dn, k)?);
    let flip = !r1.intersects_mod_one(&r2) && r1.intersects_mod_one(&r2.neg());
    let f2 = if flip { f2.opposite() } else { f2.clone() };
    r.field("orientation_flipped", flip);
    let mut separating = None;
    for g in samples {
        let (a, b) = (rot(f1, g, k)?, rot(&f2, g, k)?);
        r.checks += 1;
        if !a.intersects_mod_one(&b) {
            separating = Some(format!("{g:?} rot {a} vs {b}"));
            break;
        }
    }
    match &separating {
        None => r.field("conclusion", "consistent with [f1] = ±[f2]"),
        Some(s) => r.field("conclusion", "separated").field("separating", s),
    };
    Ok(r)
}

/// `None` when the test found no separating element.
pub fn separating_element(report: &LawReport) -> Option<&str> {
    report.fields.iter().find(|(k, _)| k == "separating").map(|(_, v)| v.as_str())
}

/// `τ` of the lift `s(g)·Δ^{2j}`; differs from `j = 0` by exactly `j`.
pub fn lift_tau(f: &CircularCocycle, g: &QuotientElement, j: i64, k: i64) -> Result<RationalInterval> {
    let w = f.section(g)?.compose(&delta_sq(f.strands()).pow(j))?;
    crate::cones::tau_interval(f.cone(), &w, k)
}

/// Separates the Dehornoy cocycle from the exponent-sum one, then checks
/// consistency against every cocycle of the rigid family.
pub fn semiconjugacy_experiment(n: usize, samples: usize, k: i64, seed: u64) -> Result<LawReport> {
    let mut r = LawReport::new("semiconjugacy_experiment").with("n", n).with("k", k).with("seed", seed);
    let fd = CircularCocycle::from_cone(&Cone::dehornoy(n)?)?;
    let sub = QuotientElement::from_braid(&sub_delta_sq(n));
    let mut list = vec![sub.clone(), QuotientElement::from_braid(&little_delta(n))];
    let mut s = Sampler::new(seed);
    list.extend(s.words_up_to(n, 8, samples).iter().map(QuotientElement::from_braid));
    let fe = CircularCocycle::from_cone(&contrast_cone(n)?)?;
    let (rd, re) = (rot(&fd, &sub, k)?, rot(&fe, &sub, k)?);
    r.field("rot_sub.dehornoy", rd).field("rot_sub.expsum", re);
    r.check(rd.contains_mod_one(Q::from_integer(0)), || format!("dehornoy rot of Δ²_(n-1) is {rd}"));
    let expected = Q::new(n as i64 - 2, n as i64);
    r.check(re.contains_mod_one(expected), || format!("expsum rot of Δ²_(n-1) is {re}, expected {expected}"));
    let t = semiconjugacy_test(&fd, &fe, &list, k)?;
    r.check(separating_element(&t).is_some(), || "dehornoy and expsum cocycles not separated".into());
    r.absorb("contrast", &t);
    for (i, c) in rigid_family(n)?.iter().enumerate() {
        let c = if c.delta_sq_sign() == 1 { c.clone() } else { c.reverse() };
        let f = CircularCocycle::from_cone(&c)?;
        let t = semiconjugacy_test(&fd, &f, &list, k)?;
        r.check(separating_element(&t).is_none(), || format!("{} separated from the dehornoy cocycle", f.name()));
        r.absorb(&format!("family.{i}"), &t);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn zero() -> Q {
        Q::from_integer(0)
    }

    fn fd() -> CircularCocycle {
        CircularCocycle::from_cone(&Cone::dehornoy(3).unwrap()).unwrap()
    }

    #[test]
    fn quotient_equality() {
        let b = w(3, "1 -2 2 1 -1 2");
        assert!(quotient_eq(&b, &b.compose(&delta_sq(3)).unwrap()).unwrap());
        assert!(!quotient_eq(&w(3, "1"), &w(3, "2")).unwrap());
        assert!(quotient_eq(&little_delta(3).pow(3), &w(3, "")).unwrap());
        assert_eq!(QuotientElement::from_braid(&little_delta(3).pow(3)), QuotientElement::identity(3));
    }

    #[test]
    fn cocycle_examples() {
        let f = fd();
        let a = QuotientElement::from_braid(&little_delta(3));
        let a2 = a.mul(&a);
        assert_eq!(f.eval(&a, &a2).unwrap(), 1);
        assert_eq!(f.eval(&QuotientElement::identity(3), &a).unwrap(), 0);
        let s1 = QuotientElement::from_braid(&w(3, "1"));
        assert_eq!(f.eval(&s1, &s1.inverse()).unwrap(), 1);
        let p = LiftElement::new(0, a.clone());
        let q = LiftElement::new(0, a2);
        let prod = lift_mul(&p, &q, &f).unwrap();
        assert_eq!(prod, LiftElement::new(1, QuotientElement::identity(3)));
    }

    #[test]
    fn opposite_examples() {
        let f = fd();
        let op = f.opposite();
        let s1 = QuotientElement::from_braid(&w(3, "1 -2"));
        assert_eq!(op.eval(&QuotientElement::identity(3), &s1).unwrap(), 0);
        assert_eq!(op.eval(&s1, &s1.inverse()).unwrap(), 1);
        assert!(!op.opposite().is_opposite());
    }

    #[test]
    fn rotation_examples() {
        let f = fd();
        let id = QuotientElement::identity(3);
        assert_eq!(rot(&f, &id, 16).unwrap(), RationalInterval::from_floor(0, 16));
        assert!(rot(&f, &QuotientElement::from_braid(&sub_delta_sq(3)), 64).unwrap().contains(zero()));
        let a = QuotientElement::from_braid(&little_delta(3));
        assert!(rot(&f, &a, 30).unwrap().contains_mod_one(Q::new(1, 3)));
        assert!(rot(&f.opposite(), &a, 30).unwrap().contains_mod_one(Q::new(2, 3)));
    }

    #[test]
    fn experiment_separates_expsum() {
        let r = semiconjugacy_experiment(3, 6, 30, 1).unwrap();
        assert!(r.passed, "{r}");
        assert!(r.pairs().iter().any(|(k, v)| k == "contrast.conclusion" && v == "separated"));
    }
}
