//! Floors with respect to the central element `z = Δ_n²` and the translation
//! number brackets they give.

use std::fmt;

use crate::braid::{delta_sq, BraidWord};
use crate::error::{BraidError, Result};

use super::interval::RationalInterval;
use super::Cone;

/// Doublings allowed in the exponential phase before giving up.
const DEFAULT_DOUBLINGS: u32 = 24;

fn require_z_positive(p: &Cone) -> Result<()> {
    if p.delta_sq_sign() != 1 {
        return Err(BraidError::Precondition(format!(
            "{} has Δ² negative; use its reverse",
            p.name()
        )));
    }
    Ok(())
}

/// `Δ^{2k} ≤_P β`
fn z_power_below(p: &Cone, z: &BraidWord, beta: &BraidWord, k: i64) -> Result<bool> {
    Ok(p.sign(&z.pow(-k).compose_unchecked(beta))? >= 0)
}

/// The unique `k` with `Δ^{2k} ≤_P β <_P Δ^{2(k+1)}`.
pub fn floor(p: &Cone, beta: &BraidWord) -> Result<i64> {
    floor_capped(p, beta, DEFAULT_DOUBLINGS)
}

pub fn floor_capped(p: &Cone, beta: &BraidWord, max_doublings: u32) -> Result<i64> {
    require_z_positive(p)?;
    if beta.strands() != p.strands() {
        return Err(BraidError::StrandMismatch { left: p.strands(), right: beta.strands() });
    }
    let z = delta_sq(p.strands());
    let beta = beta.freely_reduced();
    // infimum of the normal form is a good starting point for most cones
    let guess = beta.normal_form().delta_power().div_euclid(2);
    let exhausted = || BraidError::Precondition(format!("floor search under {} did not terminate", p.name()));
    let (mut lo, mut hi);
    if z_power_below(p, &z, &beta, guess)? {
        lo = guess;
        let mut step = 1i64;
        let mut doublings = 0;
        loop {
            let probe = guess + step;
            if !z_power_below(p, &z, &beta, probe)? {
                hi = probe;
                break;
            }
            lo = probe;
            step *= 2;
            doublings += 1;
            if doublings > max_doublings {
                return Err(exhausted());
            }
        }
    } else {
        hi = guess;
        let mut step = 1i64;
        let mut doublings = 0;
        loop {
            let probe = guess - step;
            if z_power_below(p, &z, &beta, probe)? {
                lo = probe;
                break;
            }
            hi = probe;
            step *= 2;
            doublings += 1;
            if doublings > max_doublings {
                return Err(exhausted());
            }
        }
    }
    // invariant: Δ^{2lo} ≤ β < Δ^{2hi}
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if z_power_below(p, &z, &beta, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// `[⌊β^k⌋/k, (⌊β^k⌋+1)/k]`, which contains `τ_β(P)`.
pub fn tau_interval(p: &Cone, beta: &BraidWord, k: i64) -> Result<RationalInterval> {
    if k < 1 {
        return Err(BraidError::Precondition(format!("tau_interval needs k >= 1, got {k}")));
    }
    let f = floor(p, &beta.pow(k))?;
    Ok(RationalInterval::from_floor(f, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    BoundedUpTo(i64),
    /// `β^k ≥ Δ²` when `above`, otherwise `β^k ≤ Δ⁻²`.
    CofinalWitness { k: i64, above: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundednessReport {
    pub cone: String,
    pub verdict: Verdict,
    /// Floors of `β, β², …` up to the exponent where the probe stopped.
    pub floors: Vec<i64>,
}

impl BoundednessReport {
    pub fn is_bounded(&self) -> bool {
        matches!(self.verdict, Verdict::BoundedUpTo(_))
    }

    pub fn witness(&self) -> Option<i64> {
        match self.verdict {
            Verdict::CofinalWitness { k, .. } => Some(k),
            Verdict::BoundedUpTo(_) => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::BoundedUpTo(k) => write!(f, "bounded_up_to({k})"),
            Verdict::CofinalWitness { k, .. } => write!(f, "cofinal_witness({k})"),
        }
    }
}

/// Looks for `k ≤ K` with `β^k ≥_P Δ²` or `β^k ≤_P Δ⁻²`, where `Δ²` is taken
/// with the sign that makes it `P`-positive.
pub fn boundedness_probe(p: &Cone, beta: &BraidWord, max_k: i64) -> Result<BoundednessReport> {
    if max_k < 1 {
        return Err(BraidError::Precondition(format!("probe needs K >= 1, got {max_k}")));
    }
    let z = delta_sq(p.strands()).pow(p.delta_sq_sign() as i64);
    let z_inv = z.invert();
    let beta = beta.freely_reduced();
    let mut power = BraidWord::identity(p.strands())?;
    let mut floors = Vec::new();
    for k in 1..=max_k {
        power = power.compose(&beta)?;
        if p.delta_sq_sign() == 1 {
            floors.push(floor(p, &power)?);
        }
        if p.sign(&z_inv.compose_unchecked(&power))? >= 0 {
            return Ok(BoundednessReport {
                cone: p.name(),
                verdict: Verdict::CofinalWitness { k, above: true },
                floors,
            });
        }
        if p.sign(&z.compose_unchecked(&power))? <= 0 {
            return Ok(BoundednessReport {
                cone: p.name(),
                verdict: Verdict::CofinalWitness { k, above: false },
                floors,
            });
        }
    }
    Ok(BoundednessReport { cone: p.name(), verdict: Verdict::BoundedUpTo(max_k), floors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    /// Disk with `n` marked points; `z = Δ_n²` is the boundary twist.
    Disk,
    /// Once-holed torus via `B_3`; the boundary twist is `Δ_3⁴`.
    Torus,
}

impl std::str::FromStr for Surface {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Surface> {
        match s {
            "disk" | "disk_n" => Ok(Surface::Disk),
            "torus" => Ok(Surface::Torus),
            other => Err(BraidError::Parse(format!("unknown surface {other:?}"))),
        }
    }
}

/// Fractional Dehn twist coefficient as the Dehornoy translation number.
pub fn fdtc(beta: &BraidWord, surface: Surface, k: i64) -> Result<RationalInterval> {
    let p = Cone::dehornoy(beta.strands())?;
    let t = tau_interval(&p, beta, k)?;
    match surface {
        Surface::Disk => Ok(t),
        Surface::Torus if beta.strands() == 3 => Ok(t.halve()),
        Surface::Torus => Err(BraidError::Precondition(format!(
            "the torus model needs 3 strands, got {}",
            beta.strands()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{little_delta, sub_delta_sq};
    use crate::cones::Q;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn floors_of_central_powers() {
        for spec in ["dehornoy:3", "rev:dd:3", "expsum:3:dehornoy:3", "dd:4", "conj:dehornoy:4:,1 -3"] {
            let p = Cone::parse(spec).unwrap();
            let z = delta_sq(p.strands());
            for k in -3..=3 {
                assert_eq!(floor(&p, &z.pow(k)).unwrap(), k, "{spec} k={k}");
            }
        }
    }

    #[test]
    fn dehornoy_floor_of_sub_twists_is_zero() {
        let p = Cone::dehornoy(3).unwrap();
        for m in [1, 5, 32] {
            assert_eq!(floor(&p, &sub_delta_sq(3).pow(m)).unwrap(), 0);
        }
        assert_eq!(floor(&p, &sub_delta_sq(3).pow(-4)).unwrap(), -1);
    }

    #[test]
    fn z_negative_cone_is_rejected() {
        let p = Cone::dd(3).unwrap();
        assert!(matches!(floor(&p, &w(3, "1")), Err(BraidError::Precondition(_))));
    }

    #[test]
    fn tau_examples() {
        let p = Cone::dehornoy(3).unwrap();
        let t = tau_interval(&p, &delta_sq(3), 16).unwrap();
        assert_eq!(t, RationalInterval::new(Q::from_integer(1), Q::new(17, 16)));
        let t = tau_interval(&p, &sub_delta_sq(3), 32).unwrap();
        assert_eq!(t, RationalInterval::new(Q::from_integer(0), Q::new(1, 32)));
        let t = tau_interval(&p, &little_delta(3), 30).unwrap();
        assert!(t.contains(Q::new(1, 3)));
        assert!(tau_interval(&p, &little_delta(3), 0).is_err());
    }

    #[test]
    fn probe_examples() {
        let d = Cone::dehornoy(3).unwrap();
        let r = boundedness_probe(&d, &sub_delta_sq(3), 64).unwrap();
        assert_eq!(r.verdict, Verdict::BoundedUpTo(64));
        let e = Cone::parse("expsum:3:dehornoy:3").unwrap();
        let r = boundedness_probe(&e, &sub_delta_sq(3), 64).unwrap();
        assert!(r.witness().unwrap() <= 4);
        let r = boundedness_probe(&Cone::dd(3).unwrap(), &delta_sq(3), 1).unwrap();
        assert_eq!(r.witness(), Some(1));
    }

    #[test]
    fn fdtc_examples() {
        let t = fdtc(&delta_sq(3).pow(2), Surface::Disk, 8).unwrap();
        assert_eq!(t, RationalInterval::new(Q::from_integer(2), Q::new(17, 8)));
        assert!(fdtc(&w(3, "1"), Surface::Disk, 32).unwrap().contains(Q::from_integer(0)));
        assert!(fdtc(&little_delta(3), Surface::Torus, 30).unwrap().contains(Q::new(1, 6)));
        assert!(fdtc(&little_delta(4), Surface::Torus, 4).is_err());
    }
}
