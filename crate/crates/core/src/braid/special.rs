use std::fmt;
use std::str::FromStr;

use crate::error::{BraidError, Result};

use super::word::{check_strands, BraidWord};

/// Named elements of `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    /// Garside element `Δ_n = δ_n δ_{n-1} ⋯ δ_2`.
    Delta,
    /// `Δ_n²`, generator of the centre.
    DeltaSq,
    /// `δ_n = σ_1 σ_2 ⋯ σ_{n-1}`.
    LittleDelta,
    /// `(σ_1 ⋯ σ_k)^{(-1)^{k+1}}`, the k-th generator of the Dubrovina–Dubrovin cone.
    DdGenerator(usize),
    /// `a = δ_n` in the two-generator presentation.
    TwoGenA,
    /// `b = δ_n σ_1` in the two-generator presentation.
    TwoGenB,
}

fn little_delta_letters(k: usize) -> Vec<i8> {
    (1..k).map(|i| i as i8).collect()
}

pub fn special(n: usize, name: Special) -> Result<BraidWord> {
    check_strands(n)?;
    let letters: Vec<i8> = match name {
        Special::Delta => (2..=n).rev().flat_map(little_delta_letters).collect(),
        Special::DeltaSq => {
            let d: Vec<i8> = (2..=n).rev().flat_map(little_delta_letters).collect();
            d.iter().chain(d.iter()).copied().collect()
        }
        Special::LittleDelta | Special::TwoGenA => little_delta_letters(n),
        Special::TwoGenB => {
            let mut v = little_delta_letters(n);
            v.push(1);
            v
        }
        Special::DdGenerator(k) => {
            if k == 0 || k >= n {
                return Err(BraidError::InvalidArgument(format!(
                    "dd_generator({k}) needs 1 <= k <= {} in B_{n}",
                    n - 1
                )));
            }
            let base = little_delta_letters(k + 1);
            if k % 2 == 1 {
                base
            } else {
                base.iter().rev().map(|&l| -l).collect()
            }
        }
    };
    Ok(BraidWord::from_raw(n, letters))
}

/// `Δ_n`.
pub fn delta(n: usize) -> BraidWord {
    special(n, Special::Delta).expect("valid strand count")
}

/// `Δ_n²`.
pub fn delta_sq(n: usize) -> BraidWord {
    special(n, Special::DeltaSq).expect("valid strand count")
}

/// `δ_n`.
pub fn little_delta(n: usize) -> BraidWord {
    special(n, Special::LittleDelta).expect("valid strand count")
}

/// `Δ_{n-1}²` embedded in `B_n`.
pub fn sub_delta_sq(n: usize) -> BraidWord {
    delta_sq(n - 1).embed(n).expect("n-1 < n")
}

/// The generators `σ_1, (σ_1σ_2)⁻¹, σ_1σ_2σ_3, …` of the Dubrovina–Dubrovin semigroup.
pub fn dd_generators(n: usize) -> Vec<BraidWord> {
    (1..n).map(|k| special(n, Special::DdGenerator(k)).expect("k in range")).collect()
}

impl fmt::Display for Special {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Special::Delta => write!(f, "delta"),
            Special::DeltaSq => write!(f, "delta_sq"),
            Special::LittleDelta => write!(f, "little_delta"),
            Special::DdGenerator(k) => write!(f, "dd_generator({k})"),
            Special::TwoGenA => write!(f, "two_gen_a"),
            Special::TwoGenB => write!(f, "two_gen_b"),
        }
    }
}

impl FromStr for Special {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "delta" => Special::Delta,
            "delta_sq" => Special::DeltaSq,
            "little_delta" => Special::LittleDelta,
            "two_gen_a" => Special::TwoGenA,
            "two_gen_b" => Special::TwoGenB,
            other => {
                let inner = other
                    .strip_prefix("dd_generator(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| other.strip_prefix("dd_generator:"))
                    .ok_or_else(|| BraidError::Parse(format!("unknown special element {other:?}")))?;
                let k = inner
                    .trim()
                    .parse()
                    .map_err(|_| BraidError::Parse(format!("bad dd_generator index {inner:?}")))?;
                Special::DdGenerator(k)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_elements() {
        assert_eq!(special(3, Special::LittleDelta).unwrap().letters(), &[1, 2]);
        assert_eq!(special(3, Special::DdGenerator(2)).unwrap().letters(), &[-2, -1]);
        assert_eq!(special(4, Special::DdGenerator(3)).unwrap().letters(), &[1, 2, 3]);
        assert_eq!(special(4, Special::Delta).unwrap().letters(), &[1, 2, 3, 1, 2, 1]);
        assert_eq!(special(4, Special::TwoGenB).unwrap().letters(), &[1, 2, 3, 1]);
        assert!(special(3, Special::DdGenerator(3)).is_err());
        assert!(special(3, Special::DdGenerator(0)).is_err());
        assert!(special(1, Special::Delta).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("dd_generator(2)".parse::<Special>().unwrap(), Special::DdGenerator(2));
        assert_eq!("delta_sq".parse::<Special>().unwrap(), Special::DeltaSq);
        assert!("nope".parse::<Special>().is_err());
    }
}
