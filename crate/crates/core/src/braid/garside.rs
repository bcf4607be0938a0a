//! Garside left normal form `Δ^p · A_1 ⋯ A_r`.
//!
//! Each `A_j` is a permutation braid other than `id` and `Δ`, and every
//! consecutive pair is left-weighted: the starting set of `A_{j+1}` is
//! contained in the finishing set of `A_j`. Normal forms are unique, so they
//! decide the word problem.

use std::fmt;

use super::perm::Permutation;
use super::word::BraidWord;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

/// Moves letters from `b` to `a` until `(a, b)` is left-weighted.
/// Returns true if anything moved.
#[inline]
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let bad = b.left_descents() & !a.right_descents();
        if bad == 0 {
            return changed;
        }
        let i = bad.trailing_zeros() as usize + 1;
        *a = a.times_transposition(i);
        *b = b.transposition_times(i);
        changed = true;
    }
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, delta_power: 0, factors: Vec::new() }
    }

    /// `Δ^p`.
    pub fn delta_power_of(strands: usize, p: i64) -> Self {
        NormalForm { strands, delta_power: p, factors: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// True iff the braid is `Δ^{2k}`, i.e. central (for `n ≥ 3`).
    pub fn is_delta_sq_power(&self) -> bool {
        self.factors.is_empty() && self.delta_power % 2 == 0
    }

    /// Canonical length `r` (number of non-`Δ` factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let letters = word.letters();
        let longest = Permutation::longest(n);
        // σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹); pushing every Δ⁻¹ to the front conjugates each
        // factor by Δ once per negative letter to its right.
        let mut negatives_after = letters.iter().filter(|&&l| l < 0).count();
        let mut raw = Vec::with_capacity(letters.len());
        for &l in letters {
            let i = l.unsigned_abs() as usize;
            let base = if l > 0 {
                Permutation::transposition(n, i)
            } else {
                negatives_after -= 1;
                longest.times_transposition(i)
            };
            raw.push(if negatives_after % 2 == 1 { base.garside_conjugate() } else { base });
        }
        let p = -(letters.iter().filter(|&&l| l < 0).count() as i64);
        let mut nf = NormalForm { strands: n, delta_power: p, factors: Vec::new() };
        for f in raw {
            nf.push_factor(f);
        }
        nf.finish();
        nf
    }

    /// Appends a permutation braid on the right, restoring left-weightedness
    /// by sweeping back towards the front.
    fn push_factor(&mut self, f: Permutation) {
        if f.is_identity() {
            return;
        }
        self.factors.push(f);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        self.absorb();
    }

    /// Drops identity factors and moves leading `Δ` factors into the power.
    fn absorb(&mut self) {
        let n = self.strands;
        let longest = Permutation::longest(n);
        self.factors.retain(|f| !f.is_identity());
        let lead = self.factors.iter().take_while(|f| **f == longest).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta_power += lead as i64;
        }
    }

    /// Slides adjacent pairs to a fixed point.
    fn finish(&mut self) {
        let longest = Permutation::longest(self.strands);
        loop {
            let mut changed = false;
            for j in 0..self.factors.len().saturating_sub(1) {
                let (head, tail) = self.factors.split_at_mut(j + 1);
                changed |= left_weight(&mut head[j], &mut tail[0]);
            }
            // a Δ stranded after a non-Δ factor cannot survive a sweep, but an
            // identity in the middle would block further sliding
            let before = self.factors.len();
            self.absorb();
            if !changed && before == self.factors.len() {
                break;
            }
        }
        debug_assert!(self.factors.iter().all(|f| !f.is_identity() && *f != longest));
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        debug_assert_eq!(self.strands, other.strands);
        // Δ^p A Δ^q B = Δ^{p+q} τ^q(A) B
        let flip = other.delta_power.rem_euclid(2) == 1;
        let mut nf = NormalForm {
            strands: self.strands,
            delta_power: self.delta_power + other.delta_power,
            factors: if flip {
                self.factors.iter().map(|f| f.garside_conjugate()).collect()
            } else {
                self.factors.clone()
            },
        };
        for &f in &other.factors {
            nf.push_factor(f);
        }
        nf.finish();
        nf
    }

    /// Right multiplication by a single generator `σ_i^{±1}`.
    pub fn times_letter(&self, letter: i8) -> NormalForm {
        let n = self.strands;
        let i = letter.unsigned_abs() as usize;
        let mut nf = self.clone();
        if letter > 0 {
            nf.push_factor(Permutation::transposition(n, i));
        } else {
            nf.delta_power -= 1;
            for f in nf.factors.iter_mut() {
                *f = f.garside_conjugate();
            }
            nf.push_factor(Permutation::longest(n).times_transposition(i));
        }
        nf.finish();
        nf
    }

    pub fn inverse(&self) -> NormalForm {
        NormalForm::from_word(&self.to_word().invert())
    }

    /// Multiplies by `Δ^{2k}`; central, so only the power moves.
    pub fn shift_delta_sq(&self, k: i64) -> NormalForm {
        NormalForm { strands: self.strands, delta_power: self.delta_power + 2 * k, factors: self.factors.clone() }
    }

    /// A representative word: `Δ^p` spelled out, then each factor's reduced word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Permutation::longest(n).reduced_word();
        let mut letters: Vec<i8> = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend(delta.iter().map(|&i| i as i8));
            }
        } else {
            for _ in 0..(-self.delta_power) {
                letters.extend(delta.iter().rev().map(|&i| -(i as i8)));
            }
        }
        for f in &self.factors {
            letters.extend(f.reduced_word().into_iter().map(|i| i as i8));
        }
        BraidWord::from_raw(n, letters)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{} ", self.delta_power)?;
        for p in &self.factors {
            write!(f, "{:?}", p.reduced_word())?;
        }
        Ok(())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta_power={} factors=", self.delta_power)?;
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|p| {
                let w: Vec<String> = p.reduced_word().iter().map(|i| i.to_string()).collect();
                format!("({})", w.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

impl BraidWord {
    pub fn normal_form(&self) -> NormalForm {
        NormalForm::from_word(self)
    }

    /// Equality in `B_n`.
    pub fn equals(&self, other: &BraidWord) -> bool {
        self.strands() == other.strands() && self.normal_form() == other.normal_form()
    }

    pub fn is_identity(&self) -> bool {
        self.freely_reduced().is_empty() || self.normal_form().is_identity()
    }
}
