use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// `p/q` even for integers, so every rational field has one shape.
pub fn fraction(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: Q,
    pub hi: Q,
}

impl RationalInterval {
    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        RationalInterval { lo, hi }
    }

    /// `[f/k, (f+1)/k]`, the bracket produced by a floor at power `k`.
    pub fn from_floor(f: i64, k: i64) -> Self {
        RationalInterval::new(Q::new(f, k), Q::new(f + 1, k))
    }

    pub fn point(x: Q) -> Self {
        RationalInterval { lo: x, hi: x }
    }

    pub fn width(&self) -> Q {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> Q {
        (self.lo + self.hi) / 2
    }

    pub fn contains(&self, x: Q) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Strict containment in the open interval `(a, b)`.
    pub fn inside_open(&self, a: Q, b: Q) -> bool {
        a < self.lo && self.hi < b
    }

    pub fn scale(&self, c: Q) -> Self {
        if c >= Q::zero() {
            RationalInterval::new(self.lo * c, self.hi * c)
        } else {
            RationalInterval::new(self.hi * c, self.lo * c)
        }
    }

    pub fn halve(&self) -> Self {
        self.scale(Q::new(1, 2))
    }

    pub fn shift(&self, c: Q) -> Self {
        RationalInterval { lo: self.lo + c, hi: self.hi + c }
    }

    pub fn neg(&self) -> Self {
        RationalInterval { lo: -self.hi, hi: -self.lo }
    }

    /// Translate so that `lo ∈ [0, 1)`; width is kept.
    pub fn mod_one(&self) -> Self {
        let shift = -self.lo.floor();
        self.shift(shift)
    }

    /// True iff some integer translate of `self` meets `other`.
    pub fn intersects_mod_one(&self, other: &RationalInterval) -> bool {
        let a = self.mod_one();
        let b = other.mod_one();
        // both now start in [0,1); translates by -1, 0, 1 cover every meeting
        // as long as widths stay below 1, and wider intervals meet everything
        if a.width() >= Q::one() || b.width() >= Q::one() {
            return true;
        }
        (-1..=1).any(|j| a.shift(Q::from_integer(j)).intersects(&b))
    }

    pub fn contains_mod_one(&self, x: Q) -> bool {
        self.intersects_mod_one(&RationalInterval::point(x))
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", fraction(&self.lo), fraction(&self.hi))
    }
}

/// Floor of a rational, for the occasional caller outside `Ratio`.
pub fn floor_q(x: &Q) -> i64 {
    x.numer().div_floor(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn floor_brackets() {
        let i = RationalInterval::from_floor(16, 16);
        assert_eq!(i, RationalInterval::new(q(1, 1), q(17, 16)));
        assert_eq!(i.width(), q(1, 16));
        assert!(i.contains(q(1, 1)));
        assert_eq!(fraction(&q(3, 1)), "3/1");
        assert_eq!(i.to_string(), "[1/1, 17/16]");
    }

    #[test]
    fn mod_one_intersection() {
        let a = RationalInterval::new(q(31, 32), q(1, 1));
        let b = RationalInterval::new(q(0, 1), q(1, 64));
        assert!(a.intersects_mod_one(&b));
        let c = RationalInterval::new(q(-1, 3), q(-1, 3) + q(1, 30));
        assert!(c.contains_mod_one(q(2, 3)));
        assert!(!c.contains_mod_one(q(1, 3)));
        assert_eq!(c.mod_one().lo, q(2, 3));
        assert_eq!(floor_q(&q(-1, 3)), -1);
    }
}
