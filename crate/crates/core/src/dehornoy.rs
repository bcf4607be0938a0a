//! σ-positivity with the highest generator as the main one.
//!
//! A word is `i`-positive when `σ_i` occurs only with positive exponent and no
//! `σ_j^{±1}` with `j > i` occurs. Signs are decided by classical handle
//! reduction (main generator of lowest index) applied to the image under the
//! flip automorphism `σ_i ↦ σ_{n-i}`; flipping back turns lowest index `c`
//! into main index `n - c`.

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// Default cap on intermediate word length during handle reduction.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaSign {
    pub sign: i8,
    pub main_index: Option<usize>,
}

impl SigmaSign {
    pub const IDENTITY: SigmaSign = SigmaSign { sign: 0, main_index: None };

    pub fn is_identity(&self) -> bool {
        self.sign == 0
    }
}

/// Leftmost-ending `σ_level`-handle with both ends inside `[lo, hi)`.
///
/// A handle is `σ_level^e v σ_level^{-e}` with every letter of `v` of index
/// strictly above `level`.
fn find_handle(letters: &[i8], lo: usize, hi: usize, level: u8) -> Option<(usize, usize)> {
    // position and sign of the most recent letter of index <= level
    let mut last: Option<(usize, i8)> = None;
    for (q, &l) in letters.iter().enumerate().take(hi).skip(lo) {
        let idx = l.unsigned_abs();
        if idx > level {
            continue;
        }
        if idx == level {
            if let Some((p, s)) = last {
                if s == -l.signum() && letters[p].unsigned_abs() == level {
                    return Some((p, q));
                }
            }
            last = Some((q, l.signum()));
        } else {
            last = Some((q, 0));
        }
    }
    None
}

/// Replaces the handle at `[p, q]` on `level` by its reduct.
fn reduce_handle(letters: &mut Vec<i8>, p: usize, q: usize, level: u8) {
    let e = letters[p].signum();
    let next = (level + 1) as i8;
    let mut reduct = Vec::with_capacity(3 * (q - p));
    for &l in &letters[p + 1..q] {
        if l.unsigned_abs() == level + 1 {
            // σ_{i+1}^d ↦ σ_{i+1}^{-e} σ_i^d σ_{i+1}^e
            let d = l.signum();
            push_reduced(&mut reduct, -e * next);
            push_reduced(&mut reduct, d * level as i8);
            push_reduced(&mut reduct, e * next);
        } else {
            push_reduced(&mut reduct, l);
        }
    }
    letters.splice(p..=q, reduct);
}

fn push_reduced(out: &mut Vec<i8>, l: i8) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Classical handle reduction until the lowest-index generator is single-signed.
fn classical_reduce(word: &BraidWord, cap: usize) -> Result<Vec<i8>> {
    let mut letters = word.freely_reduced().letters().to_vec();
    loop {
        let Some(main) = letters.iter().map(|l| l.unsigned_abs()).min() else {
            return Ok(letters);
        };
        let Some((mut p, mut q)) = find_handle(&letters, 0, letters.len(), main) else {
            return Ok(letters);
        };
        // descend to a permitted handle: one with no handle of the next level inside
        let mut level = main;
        while let Some((pp, qq)) = find_handle(&letters, p + 1, q, level + 1) {
            p = pp;
            q = qq;
            level += 1;
        }
        reduce_handle(&mut letters, p, q, level);
        if letters.len() > cap {
            return Err(BraidError::BlowUp { cap });
        }
    }
}

/// A word equal to `a` that is empty or `i`-positive/`i`-negative for its
/// highest index `i`.
pub fn handle_reduce(a: &BraidWord) -> Result<BraidWord> {
    handle_reduce_capped(a, DEFAULT_WORD_CAP)
}

pub fn handle_reduce_capped(a: &BraidWord, cap: usize) -> Result<BraidWord> {
    // already single-signed at the top: nothing to do
    let free = a.freely_reduced();
    if top_sign(&free).is_some() {
        return Ok(free);
    }
    let reduced = classical_reduce(&free.flip(), cap)?;
    Ok(BraidWord::from_raw(a.strands(), reduced).flip())
}

/// Sign of the highest generator if it occurs with only one sign.
fn top_sign(word: &BraidWord) -> Option<SigmaSign> {
    let top = word.max_index()?;
    let mut sign = 0i8;
    for &l in word.letters() {
        if l.unsigned_abs() as usize == top {
            if sign == 0 {
                sign = l.signum();
            } else if sign != l.signum() {
                return None;
            }
        }
    }
    Some(SigmaSign { sign, main_index: Some(top) })
}

/// Sign read off a word that is already reduced.
fn sign_of_reduced(word: &BraidWord) -> SigmaSign {
    match top_sign(word) {
        Some(s) => s,
        None if word.is_empty() => SigmaSign::IDENTITY,
        None => unreachable!("handle reduction leaves the main generator single-signed"),
    }
}

pub fn sigma_sign(a: &BraidWord) -> Result<SigmaSign> {
    Ok(sign_of_reduced(&handle_reduce(a)?))
}

/// Sign together with the reduced representative.
pub fn sigma_sign_with_word(a: &BraidWord) -> Result<(SigmaSign, BraidWord)> {
    let r = handle_reduce(a)?;
    Ok((sign_of_reduced(&r), r))
}

/// Dehornoy sign as a plain integer.
pub fn dehornoy_sign(a: &BraidWord) -> Result<i8> {
    Ok(sigma_sign(a)?.sign)
}

/// True iff `a` lies in `B_m ⊂ B_n`.
pub fn in_subgroup(a: &BraidWord, m: usize) -> Result<bool> {
    if m < 2 || m >= a.strands() {
        return Err(BraidError::Precondition(format!(
            "in_subgroup needs 2 <= m < n, got m={m}, n={}",
            a.strands()
        )));
    }
    let s = sigma_sign(a)?;
    Ok(match s.main_index {
        None => true,
        Some(i) => i < m,
    })
}

/// If `a ∈ B_m`, a word for it in the generators `σ_1 … σ_{m-1}`, on `m` strands.
pub fn rewrite_in_subgroup(a: &BraidWord, m: usize) -> Result<Option<BraidWord>> {
    let (s, r) = sigma_sign_with_word(a)?;
    match s.main_index {
        Some(i) if i >= m => Ok(None),
        _ => Ok(Some(r.restrict(m)?)),
    }
}

/// Sign in the Dubrovina–Dubrovin ordering, computed by its inductive definition:
/// elements of `B_{n-1}` take their sign from the cone on `B_{n-1}`; the rest
/// take `(-1)^n` times their `(n-1)`-sign.
pub fn dd_sign(a: &BraidWord) -> Result<i8> {
    let n = a.strands();
    let (s, r) = sigma_sign_with_word(a)?;
    match s.main_index {
        None => Ok(0),
        Some(i) if i == n - 1 => Ok(if n.is_multiple_of(2) { s.sign } else { -s.sign }),
        Some(_) => dd_sign(&r.restrict(n - 1)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta_sq, little_delta};

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn handle_reduction_examples() {
        let r = handle_reduce(&w(3, "2 1 -2")).unwrap();
        assert!(r.equals(&w(3, "2 1 -2")));
        assert_eq!(sign_of_reduced(&r), SigmaSign { sign: 1, main_index: Some(2) });
        assert!(handle_reduce(&w(3, "1 -1")).unwrap().is_empty());
        assert_eq!(handle_reduce(&w(3, "1 -2")).unwrap(), w(3, "1 -2"));
    }

    #[test]
    fn sigma_sign_examples() {
        assert_eq!(sigma_sign(&w(3, "1 -2")).unwrap(), SigmaSign { sign: -1, main_index: Some(2) });
        assert_eq!(sigma_sign(&w(3, "")).unwrap(), SigmaSign::IDENTITY);
        assert_eq!(sigma_sign(&delta_sq(3)).unwrap(), SigmaSign { sign: 1, main_index: Some(2) });
        // σ2σ1σ2⁻¹σ1⁻¹ = σ1⁻¹σ2σ1σ1⁻¹... is 2-positive or 2-negative, never in B2
        let c = w(3, "2 1 -2 -1");
        assert_eq!(sigma_sign(&c).unwrap().main_index, Some(2));
    }

    #[test]
    fn subgroup_membership() {
        assert!(in_subgroup(&w(3, "1 1"), 2).unwrap());
        assert!(!in_subgroup(&w(3, "2"), 2).unwrap());
        assert!(!in_subgroup(&w(3, "2 1 -2 -1"), 2).unwrap());
        // σ2σ1σ2⁻¹σ1⁻¹... hidden member: σ1σ2σ1 σ2⁻¹σ1⁻¹σ2⁻¹... = id
        assert!(in_subgroup(&w(4, "3 1 -3 2 -2"), 3).unwrap());
        assert!(in_subgroup(&w(4, "2 3 1 -3 -2"), 2).is_ok());
        assert!(in_subgroup(&w(3, "1"), 3).is_err());
        let r = rewrite_in_subgroup(&w(4, "3 2 1 -3 -2 3"), 3).unwrap();
        assert!(r.is_none() || r.unwrap().strands() == 3);
    }

    #[test]
    fn dd_sign_examples() {
        assert_eq!(dd_sign(&w(3, "1")).unwrap(), 1);
        assert_eq!(dd_sign(&w(3, "1 2")).unwrap(), -1);
        assert_eq!(dd_sign(&delta_sq(3)).unwrap(), -1);
        assert_eq!(dd_sign(&delta_sq(4)).unwrap(), 1);
        assert_eq!(dd_sign(&little_delta(4)).unwrap(), 1);
        assert_eq!(dd_sign(&w(4, "")).unwrap(), 0);
    }

    #[test]
    fn blow_up_cap_is_reported() {
        let hard = w(4, "3 2 1 -3 -2 -1 3 -2 1 2 -3");
        assert!(matches!(handle_reduce_capped(&hard, 2), Err(BraidError::BlowUp { .. })));
    }
}
