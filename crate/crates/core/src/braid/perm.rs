//! Permutations of `{0, …, n-1}` and the positive permutation braids they encode.
//!
//! A permutation braid is identified with its permutation `w`, where the word
//! `σ_{i1}⋯σ_{ik}` maps to the composite `s_{i1} ∘ ⋯ ∘ s_{ik}` of adjacent
//! transpositions. Its length is the inversion count, its right descents
//! (`w(i) > w(i+1)`) are the generators it ends with, and its left descents
//! (`w⁻¹(i) > w⁻¹(i+1)`) are the generators it starts with.

use std::fmt;

use crate::error::{BraidError, Result};

use super::MAX_STRANDS;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_STRANDS],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        debug_assert!(n <= MAX_STRANDS);
        let mut images = [0u8; MAX_STRANDS];
        for (j, slot) in images.iter_mut().enumerate().take(n) {
            *slot = j as u8;
        }
        Permutation { n: n as u8, images }
    }

    /// Checks bijectivity of a 1-based image list.
    pub fn from_images(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        if n == 0 || n > MAX_STRANDS {
            return Err(BraidError::BadStrands(n));
        }
        let mut seen = [false; MAX_STRANDS];
        let mut images = [0u8; MAX_STRANDS];
        for (j, &v) in one_based.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::InvalidArgument(format!("not a permutation: {one_based:?}")));
            }
            seen[v - 1] = true;
            images[j] = (v - 1) as u8;
        }
        Ok(Permutation { n: n as u8, images })
    }

    /// The transposition `s_i` swapping `i-1` and `i` (generator index `i` is 1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The longest element `j ↦ n-1-j`, image of the Garside element.
    pub fn longest(n: usize) -> Self {
        let mut images = [0u8; MAX_STRANDS];
        for (j, slot) in images.iter_mut().enumerate().take(n) {
            *slot = (n - 1 - j) as u8;
        }
        Permutation { n: n as u8, images }
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// 1-based images, matching the usual one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images[..self.degree()].iter().map(|&v| v as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j] as usize
    }

    /// `self ∘ other`: apply `other` first.
    #[inline]
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut images = [0u8; MAX_STRANDS];
        for j in 0..self.degree() {
            images[j] = self.images[other.images[j] as usize];
        }
        Permutation { n: self.n, images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; MAX_STRANDS];
        for j in 0..self.degree() {
            images[self.images[j] as usize] = j as u8;
        }
        Permutation { n: self.n, images }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|j| self.images[j] as usize == j)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Bit `i-1` set iff `σ_i` is a right divisor (the braid ends with `σ_i`).
    #[inline]
    pub fn right_descents(&self) -> u32 {
        let mut mask = 0;
        for j in 0..self.degree().saturating_sub(1) {
            if self.images[j] > self.images[j + 1] {
                mask |= 1 << j;
            }
        }
        mask
    }

    /// Bit `i-1` set iff `σ_i` is a left divisor (the braid starts with `σ_i`).
    #[inline]
    pub fn left_descents(&self) -> u32 {
        let inv = self.inverse();
        inv.right_descents()
    }

    /// `self ∘ s_i` (append `σ_i` on the right).
    #[inline]
    pub fn times_transposition(&self, i: usize) -> Permutation {
        let mut p = *self;
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i ∘ self` (prepend `σ_i` on the left).
    #[inline]
    pub fn transposition_times(&self, i: usize) -> Permutation {
        let mut p = *self;
        let (a, b) = ((i - 1) as u8, i as u8);
        for v in p.images[..self.degree()].iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
        p
    }

    /// Conjugation by the longest element, the image of `X ↦ ΔXΔ⁻¹`.
    pub fn garside_conjugate(&self) -> Permutation {
        let n = self.degree();
        let mut images = [0u8; MAX_STRANDS];
        for j in 0..n {
            images[j] = (n - 1 - self.images[n - 1 - j] as usize) as u8;
        }
        Permutation { n: self.n, images }
    }

    /// A positive reduced word for the permutation braid, as generator indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut out = Vec::with_capacity(self.inversions());
        loop {
            let d = w.left_descents();
            if d == 0 {
                return out;
            }
            let i = d.trailing_zeros() as usize + 1;
            out.push(i);
            w = w.transposition_times(i);
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descents_of_generators() {
        let s2 = Permutation::transposition(4, 2);
        assert_eq!(s2.right_descents(), 0b010);
        assert_eq!(s2.left_descents(), 0b010);
        let d = Permutation::longest(4);
        assert_eq!(d.right_descents(), 0b111);
        assert_eq!(d.inversions(), 6);
    }

    #[test]
    fn reduced_word_round_trips() {
        for images in [[3, 1, 2, 4], [4, 3, 2, 1], [2, 4, 1, 3], [1, 2, 3, 4]] {
            let p = Permutation::from_images(&images).unwrap();
            let word = p.reduced_word();
            assert_eq!(word.len(), p.inversions());
            let mut q = Permutation::identity(4);
            for &i in &word {
                q = q.times_transposition(i);
            }
            assert_eq!(q, p);
        }
    }

    #[test]
    fn garside_conjugate_flips_generators() {
        let s1 = Permutation::transposition(5, 1);
        assert_eq!(s1.garside_conjugate(), Permutation::transposition(5, 4));
        let p = Permutation::from_images(&[2, 4, 1, 3, 5]).unwrap();
        let d = Permutation::longest(5);
        assert_eq!(p.garside_conjugate(), d.compose(&p).compose(&d));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
    }
}
