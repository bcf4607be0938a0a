//! The homomorphism `B_3 → SL_2(ℤ)`, a word section of it, and rotation
//! numbers of matrices through their braid lifts.

use std::fmt;
use std::str::FromStr;

use crate::braid::{delta_sq, BraidWord};
use crate::circular::{rot, CircularCocycle, QuotientElement};
use crate::cones::{tau_interval, Cone, RationalInterval};
use crate::error::{BraidError, Result};

/// `[[q, r], [s, t]]` with `qt - rs = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    pub q: i64,
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

fn overflow() -> BraidError {
    BraidError::InvalidArgument("matrix entry overflow".into())
}

impl SL2Matrix {
    pub const IDENTITY: SL2Matrix = SL2Matrix { q: 1, r: 0, s: 0, t: 1 };
    /// `φ(σ_1)`.
    pub const A: SL2Matrix = SL2Matrix { q: 1, r: 1, s: 0, t: 1 };
    /// `φ(σ_2)`.
    pub const B: SL2Matrix = SL2Matrix { q: 1, r: 0, s: -1, t: 1 };

    pub fn new(q: i64, r: i64, s: i64, t: i64) -> Result<SL2Matrix> {
        let det = q.checked_mul(t).zip(r.checked_mul(s)).and_then(|(a, b)| a.checked_sub(b));
        if det != Some(1) {
            return Err(BraidError::InvalidArgument(format!("[[{q},{r}],[{s},{t}]] does not have determinant 1")));
        }
        Ok(SL2Matrix { q, r, s, t })
    }

    pub fn mul(&self, o: &SL2Matrix) -> Result<SL2Matrix> {
        let dot = |a: i64, b: i64, c: i64, d: i64| {
            a.checked_mul(b).zip(c.checked_mul(d)).and_then(|(x, y)| x.checked_add(y)).ok_or_else(overflow)
        };
        Ok(SL2Matrix {
            q: dot(self.q, o.q, self.r, o.s)?,
            r: dot(self.q, o.r, self.r, o.t)?,
            s: dot(self.s, o.q, self.t, o.s)?,
            t: dot(self.s, o.r, self.t, o.t)?,
        })
    }

    pub fn inverse(&self) -> SL2Matrix {
        SL2Matrix { q: self.t, r: -self.r, s: -self.s, t: self.q }
    }

    pub fn neg(&self) -> SL2Matrix {
        SL2Matrix { q: -self.q, r: -self.r, s: -self.s, t: -self.t }
    }

    /// Representative of `±M` whose first nonzero entry among `(q, s)` is positive.
    pub fn psl_normalise(&self) -> SL2Matrix {
        let lead = if self.q != 0 { self.q } else { self.s };
        if lead < 0 {
            self.neg()
        } else {
            *self
        }
    }

    pub fn generator(letter: i8) -> SL2Matrix {
        match letter {
            1 => SL2Matrix::A,
            -1 => SL2Matrix::A.inverse(),
            2 => SL2Matrix::B,
            -2 => SL2Matrix::B.inverse(),
            _ => panic!("no SL2 image for letter {letter}"),
        }
    }

    fn a_pow(k: i64) -> SL2Matrix {
        SL2Matrix { q: 1, r: k, s: 0, t: 1 }
    }

    fn b_pow(k: i64) -> SL2Matrix {
        SL2Matrix { q: 1, r: 0, s: -k, t: 1 }
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.q, self.r, self.s, self.t)
    }
}

impl FromStr for SL2Matrix {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<SL2Matrix> {
        let bad = || BraidError::Parse(format!("expected [[q,r],[s,t]], got {text:?}"));
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = cleaned.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")).ok_or_else(bad)?;
        let (top, bottom) = inner.split_once("],[").ok_or_else(bad)?;
        let nums: Vec<i64> = top
            .split(',')
            .chain(bottom.split(','))
            .map(|x| x.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if nums.len() != 4 {
            return Err(bad());
        }
        SL2Matrix::new(nums[0], nums[1], nums[2], nums[3])
    }
}

fn require_three(b: &BraidWord) -> Result<()> {
    if b.strands() != 3 {
        return Err(BraidError::Precondition(format!("SL2 model needs 3 strands, got {}", b.strands())));
    }
    Ok(())
}

pub fn braid_to_matrix(beta: &BraidWord) -> Result<SL2Matrix> {
    require_three(beta)?;
    beta.letters().iter().try_fold(SL2Matrix::IDENTITY, |m, &l| m.mul(&SL2Matrix::generator(l)))
}

/// Nearest integer to `a/b`, ties towards zero.
fn round_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if 2 * r > b.abs() || (2 * r == b.abs() && q < 0) {
        q + b.signum()
    } else {
        q
    }
}

/// A braid mapping to `m`: clear the bottom-left entry by Euclidean steps
/// `M·A^k` (`t ← t + ks`) and `M·B^k` (`s ← s − kt`), then read off `±A^m`.
pub fn matrix_to_braid(m: &SL2Matrix) -> Result<BraidWord> {
    SL2Matrix::new(m.q, m.r, m.s, m.t)?;
    let mut cur = *m;
    // (letter, exponent) pairs applied on the right, in order
    let mut steps: Vec<(i8, i64)> = Vec::new();
    while cur.s != 0 {
        let (letter, k) = if cur.t == 0 {
            (1, 1)
        } else if cur.t.abs() > cur.s.abs() {
            (1, -round_div(cur.t, cur.s))
        } else {
            (2, round_div(cur.s, cur.t))
        };
        let step = if letter == 1 { SL2Matrix::a_pow(k) } else { SL2Matrix::b_pow(k) };
        cur = cur.mul(&step)?;
        steps.push((letter, k));
    }
    // cur = ε·A^e with ε = q = t = ±1
    let eps = cur.q;
    let e = eps * cur.r;
    let mut letters: Vec<i8> = Vec::new();
    let push_pow = |letters: &mut Vec<i8>, l: i8, k: i64| {
        let sym = if k >= 0 { l } else { -l };
        letters.extend(std::iter::repeat_n(sym, k.unsigned_abs() as usize));
    };
    push_pow(&mut letters, 1, e);
    for &(l, k) in steps.iter().rev() {
        push_pow(&mut letters, l, -k);
    }
    let mut word = BraidWord::new(3, letters)?;
    if eps == -1 {
        word = word.compose(&delta_sq(3))?;
    }
    Ok(word)
}

fn cone_on_three(p: &Cone) -> Result<()> {
    if p.strands() != 3 {
        return Err(BraidError::Precondition(format!("{} is not a cone on B_3", p.name())));
    }
    if p.delta_sq_sign() != 1 {
        return Err(BraidError::Precondition(format!("{} has Δ² negative; use its reverse", p.name())));
    }
    Ok(())
}

/// `τ` of a braid lift with respect to `Δ_3⁴`, mod 1.
pub fn sl2_rot(m: &SL2Matrix, p: &Cone, k: i64) -> Result<RationalInterval> {
    cone_on_three(p)?;
    Ok(tau_interval(p, &matrix_to_braid(m)?, k)?.halve().mod_one())
}

/// Rotation number of `±M ∈ PSL_2(ℤ) ≅ G_3` under the cocycle of `P`.
pub fn psl2_rot(m: &SL2Matrix, p: &Cone, k: i64) -> Result<RationalInterval> {
    cone_on_three(p)?;
    let g = QuotientElement::from_braid(&matrix_to_braid(&m.psl_normalise())?);
    rot(&CircularCocycle::from_cone(p)?, &g, k)
}
