use std::fmt;

use crate::error::{BraidError, Result};

use super::MAX_STRANDS;

/// A word in the Artin generators of `B_n`.
///
/// Letters are stored as signed indices: `+i` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i8>,
}

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if (2..=MAX_STRANDS).contains(&n) {
        Ok(())
    } else {
        Err(BraidError::BadStrands(n))
    }
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(BraidWord { strands, letters: Vec::new() })
    }

    /// Builds a word from signed generator indices, validating every letter.
    pub fn new(strands: usize, letters: Vec<i8>) -> Result<Self> {
        check_strands(strands)?;
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= strands {
                return Err(BraidError::BadGenerator { index: l as i64, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Caller guarantees the letters are in range.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self> {
        let l = index as i8;
        BraidWord::new(strands, vec![if positive { l } else { -l }])
    }

    /// Parses the whitespace-separated signed-integer text format, e.g. `"1 -2 1"`;
    /// `id` is the empty word.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        if text.trim() == "id" {
            return BraidWord::identity(strands);
        }
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: i64 = tok
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            if v == 0 || v.unsigned_abs() as usize >= strands {
                return Err(BraidError::BadGenerator { index: v, strands });
            }
            letters.push(v as i8);
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the exponents; a homomorphism `B_n → ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Largest generator index occurring in the word, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max()
    }

    pub fn freely_reduced(&self) -> BraidWord {
        let mut out: Vec<i8> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &BraidWord) -> BraidWord {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `self^k` for any integer `k` (negative powers invert first).
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = BraidWord { strands: self.strands, letters: Vec::with_capacity(base.len() * k.unsigned_abs() as usize) };
        for _ in 0..k.unsigned_abs() {
            out = out.compose_unchecked(&base);
        }
        out
    }

    /// Same letters, read in `B_n` for `n ≥ strands`.
    pub fn embed(&self, n: usize) -> Result<BraidWord> {
        check_strands(n)?;
        if n < self.strands {
            return Err(BraidError::InvalidArgument(format!(
                "cannot embed a {}-strand word into B_{n}",
                self.strands
            )));
        }
        Ok(BraidWord { strands: n, letters: self.letters.clone() })
    }

    /// Reinterprets the word with fewer strands; every letter must fit.
    pub fn restrict(&self, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, self.letters.clone())
    }

    /// The Dynkin flip `σ_i ↦ σ_{n-i}`, an automorphism of `B_n`.
    pub fn flip(&self) -> BraidWord {
        let n = self.strands as i8;
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect(),
        }
    }

    /// Text rendering in the signed-integer format; the empty word renders as `""`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self.to_text())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn compose_cancels_and_concatenates() {
        assert!(w(3, "1").compose(&w(3, "-1")).unwrap().is_empty());
        assert_eq!(w(3, "1").compose(&w(3, "2")).unwrap(), w(3, "1 2"));
        assert!(matches!(
            w(3, "1").compose(&w(4, "1")),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn invert_reverses_and_flips_signs() {
        assert_eq!(w(3, "1 2").invert(), w(3, "-2 -1"));
        assert!(w(3, "").invert().is_empty());
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(BraidWord::parse(3, "1 3").is_err());
        assert!(BraidWord::parse(3, "0").is_err());
        assert!(BraidWord::parse(3, "x").is_err());
        assert!(BraidWord::parse(1, "").is_err());
        assert_eq!(w(4, "1 -2, 3").letters(), &[1, -2, 3]);
    }

    #[test]
    fn embed_keeps_letters() {
        let e = w(2, "1").embed(4).unwrap();
        assert_eq!(e.strands(), 4);
        assert_eq!(e.letters(), &[1]);
        assert!(w(4, "3").embed(3).is_err());
    }

    #[test]
    fn flip_is_an_involution() {
        let a = w(5, "1 -2 4 3");
        assert_eq!(a.flip(), w(5, "4 -3 1 2"));
        assert_eq!(a.flip().flip(), a);
    }

    #[test]
    fn pow_and_exponent_sum() {
        let a = w(3, "1 -2 1");
        assert_eq!(a.pow(0), w(3, ""));
        assert_eq!(a.pow(2).exponent_sum(), 2);
        assert_eq!(a.pow(-2), a.invert().pow(2));
    }
}
