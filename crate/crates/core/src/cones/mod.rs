//! Positive cones of left orderings of `B_n`, given as sign oracles.

mod ball;
mod floor;
mod interval;

use std::fmt;
use std::sync::Arc;

use crate::braid::BraidWord;
use crate::dehornoy::{dd_sign, sigma_sign_with_word};
use crate::error::{BraidError, Result};

pub use ball::{ball, ball_with_limits, cone_agreement, BallLimits};
pub use floor::{
    boundedness_probe, fdtc, floor, floor_capped, tau_interval, BoundednessReport, Surface, Verdict,
};
pub use interval::{floor_q, fraction, RationalInterval, Q};

type SignFn = dyn Fn(&BraidWord) -> Result<i8> + Send + Sync;

#[derive(Clone)]
enum Kind {
    Dehornoy,
    Dd,
    /// `γ P γ⁻¹`: sign of `β` is the base sign of `γ⁻¹βγ`.
    Conjugate { base: Cone, gamma: BraidWord },
    /// `(P_D^rel)^orientation` outside `B_{n-1}`, the subcone inside.
    LexRel { orientation: i8, sub: Cone },
    /// Exponent sum first, then the tiebreak on its kernel.
    ExpSum { tiebreak: Cone },
    Reverse(Cone),
    Custom { name: String, sign: Arc<SignFn>, delta_sq_sign: i8 },
}

/// A named total sign function realising the positive cone of a left ordering.
#[derive(Clone)]
pub struct Cone {
    strands: usize,
    kind: Arc<Kind>,
}

impl Cone {
    fn make(strands: usize, kind: Kind) -> Cone {
        Cone { strands, kind: Arc::new(kind) }
    }

    pub fn dehornoy(n: usize) -> Result<Cone> {
        crate::braid::BraidWord::identity(n)?;
        Ok(Cone::make(n, Kind::Dehornoy))
    }

    pub fn dd(n: usize) -> Result<Cone> {
        crate::braid::BraidWord::identity(n)?;
        Ok(Cone::make(n, Kind::Dd))
    }

    pub fn conjugate(base: &Cone, gamma: &BraidWord) -> Result<Cone> {
        if gamma.strands() != base.strands {
            return Err(BraidError::StrandMismatch { left: base.strands, right: gamma.strands() });
        }
        Ok(Cone::make(base.strands, Kind::Conjugate { base: base.clone(), gamma: gamma.freely_reduced() }))
    }

    pub fn lex_rel(n: usize, orientation: i8, sub: &Cone) -> Result<Cone> {
        if orientation != 1 && orientation != -1 {
            return Err(BraidError::InvalidArgument(format!("orientation must be +1 or -1, got {orientation}")));
        }
        if n < 3 || sub.strands + 1 != n {
            return Err(BraidError::InvalidArgument(format!(
                "lex_rel on B_{n} needs a subcone on B_{}, got B_{}",
                n.saturating_sub(1),
                sub.strands
            )));
        }
        Ok(Cone::make(n, Kind::LexRel { orientation, sub: sub.clone() }))
    }

    pub fn expsum(n: usize, tiebreak: &Cone) -> Result<Cone> {
        if tiebreak.strands != n {
            return Err(BraidError::StrandMismatch { left: n, right: tiebreak.strands });
        }
        Ok(Cone::make(n, Kind::ExpSum { tiebreak: tiebreak.clone() }))
    }

    pub fn reverse(&self) -> Cone {
        if let Kind::Reverse(inner) = &*self.kind {
            return inner.clone();
        }
        Cone::make(self.strands, Kind::Reverse(self.clone()))
    }

    /// An arbitrary oracle; nothing about it is checked.
    pub fn custom<F>(n: usize, name: &str, delta_sq_sign: i8, sign: F) -> Cone
    where
        F: Fn(&BraidWord) -> Result<i8> + Send + Sync + 'static,
    {
        Cone::make(n, Kind::Custom { name: name.to_string(), sign: Arc::new(sign), delta_sq_sign })
    }

    /// `dd(n)` for even `n` and its reverse for odd `n`, so `Δ²` is positive.
    pub fn dd_positive(n: usize) -> Result<Cone> {
        let c = Cone::dd(n)?;
        Ok(if n.is_multiple_of(2) { c } else { c.reverse() })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_custom(&self) -> bool {
        matches!(&*self.kind, Kind::Custom { .. })
    }

    pub fn sign(&self, beta: &BraidWord) -> Result<i8> {
        if beta.strands() != self.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: beta.strands() });
        }
        match &*self.kind {
            Kind::Dehornoy => Ok(crate::dehornoy::dehornoy_sign(beta)?),
            Kind::Dd => dd_sign(beta),
            Kind::Conjugate { base, gamma } => {
                base.sign(&gamma.invert().compose_unchecked(beta).compose_unchecked(gamma))
            }
            Kind::LexRel { orientation, sub } => {
                let (s, reduced) = sigma_sign_with_word(beta)?;
                match s.main_index {
                    None => Ok(0),
                    Some(i) if i == self.strands - 1 => Ok(orientation * s.sign),
                    Some(_) => sub.sign(&reduced.restrict(self.strands - 1)?),
                }
            }
            Kind::ExpSum { tiebreak } => match beta.exponent_sum().signum() {
                0 => tiebreak.sign(beta),
                e => Ok(e as i8),
            },
            Kind::Reverse(inner) => Ok(-inner.sign(beta)?),
            Kind::Custom { sign, .. } => sign(beta),
        }
    }

    /// Sign of `a⁻¹b`: `-1` for `a < b`, `0` for equality, `+1` for `a > b`.
    pub fn compare(&self, a: &BraidWord, b: &BraidWord) -> Result<std::cmp::Ordering> {
        let s = self.sign(&a.invert().compose(b)?)?;
        Ok(0.cmp(&s))
    }

    /// Sign of `Δ_n²`.
    pub fn delta_sq_sign(&self) -> i8 {
        match &*self.kind {
            Kind::Dehornoy | Kind::ExpSum { .. } => 1,
            Kind::Dd => {
                if self.strands.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            Kind::Conjugate { base, .. } => base.delta_sq_sign(),
            Kind::LexRel { orientation, .. } => *orientation,
            Kind::Reverse(inner) => -inner.delta_sq_sign(),
            Kind::Custom { delta_sq_sign, .. } => *delta_sq_sign,
        }
    }

    /// The spec string this cone parses from.
    pub fn name(&self) -> String {
        match &*self.kind {
            Kind::Dehornoy => format!("dehornoy:{}", self.strands),
            Kind::Dd => format!("dd:{}", self.strands),
            Kind::Conjugate { base, gamma } => format!("conj:{}:,{}", base.name(), gamma.to_text()),
            Kind::LexRel { orientation, sub } => {
                format!("lex:{}:{}:{}", self.strands, if *orientation > 0 { '+' } else { '-' }, sub.name())
            }
            Kind::ExpSum { tiebreak } => format!("expsum:{}:{}", self.strands, tiebreak.name()),
            Kind::Reverse(inner) => format!("rev:{}", inner.name()),
            Kind::Custom { name, .. } => name.clone(),
        }
    }

    /// Parses `dehornoy:3`, `dd:3`, `rev:<cone>`, `conj:<cone>:,<word>`,
    /// `lex:<n>:<+|->:<cone>` and `expsum:<n>:<cone>`.
    pub fn parse(spec: &str) -> Result<Cone> {
        let spec = spec.trim();
        let bad = || BraidError::Parse(format!("malformed cone spec {spec:?}"));
        let (head, rest) = spec.split_once(':').ok_or_else(bad)?;
        let strands = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        match head {
            "dehornoy" => Cone::dehornoy(strands(rest)?),
            "dd" => Cone::dd(strands(rest)?),
            "rev" => Ok(Cone::parse(rest)?.reverse()),
            "conj" => {
                let (base, word) = rest.rsplit_once(":,").ok_or_else(bad)?;
                let base = Cone::parse(base)?;
                let gamma = BraidWord::parse(base.strands, word)?;
                Cone::conjugate(&base, &gamma)
            }
            "lex" => {
                let mut parts = rest.splitn(3, ':');
                let n = strands(parts.next().ok_or_else(bad)?)?;
                let orientation = match parts.next().ok_or_else(bad)? {
                    "+" | "+1" | "1" => 1,
                    "-" | "-1" => -1,
                    _ => return Err(bad()),
                };
                let sub = Cone::parse(parts.next().ok_or_else(bad)?)?;
                Cone::lex_rel(n, orientation, &sub)
            }
            "expsum" => {
                let (n, tie) = rest.split_once(':').ok_or_else(bad)?;
                Cone::expsum(strands(n)?, &Cone::parse(tie)?)
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone({})", self.name())
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for Cone {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Cone> {
        Cone::parse(s)
    }
}

/// Spec-style constructor.
pub fn make_cone(spec: &str) -> Result<Cone> {
    Cone::parse(spec)
}

pub fn reverse(p: &Cone) -> Cone {
    p.reverse()
}
