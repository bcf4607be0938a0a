use std::collections::HashSet;

use crate::braid::{BraidWord, NormalForm};
use crate::error::{BraidError, Result};

use super::interval::Q;
use super::Cone;

/// Size guard for [`ball`]; exceeding it is an error, never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallLimits {
    pub max_strands: usize,
    pub max_length: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits { max_strands: 5, max_length: 6 }
    }
}

/// Every element of `B_n` of word length at most `len`, one shortest word each,
/// listed in breadth-first order.
pub fn ball(n: usize, len: usize) -> Result<Vec<BraidWord>> {
    ball_with_limits(n, len, BallLimits::default())
}

pub fn ball_with_limits(n: usize, len: usize, limits: BallLimits) -> Result<Vec<BraidWord>> {
    if n > limits.max_strands || len > limits.max_length {
        return Err(BraidError::ResourceGuard(format!(
            "ball({n}, {len}) exceeds the limit n <= {}, L <= {}",
            limits.max_strands, limits.max_length
        )));
    }
    let id = BraidWord::identity(n)?;
    let letters: Vec<i8> = (1..n as i8).flat_map(|i| [i, -i]).collect();
    let mut seen: HashSet<NormalForm> = HashSet::new();
    seen.insert(id.normal_form());
    let mut out = vec![id.clone()];
    let mut frontier = vec![(id, NormalForm::identity(n))];
    for _ in 0..len {
        let mut next = Vec::new();
        for (word, nf) in &frontier {
            for &l in &letters {
                if word.letters().last() == Some(&-l) {
                    continue;
                }
                let nf2 = nf.times_letter(l);
                if seen.insert(nf2.clone()) {
                    let mut v = word.letters().to_vec();
                    v.push(l);
                    let w = BraidWord::new(n, v)?;
                    out.push(w.clone());
                    next.push((w, nf2));
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Fraction of non-identity elements of `ball` on which `p` and `q` agree.
pub fn cone_agreement(p: &Cone, q: &Cone, ball: &[BraidWord]) -> Result<Q> {
    if p.strands() != q.strands() {
        return Err(BraidError::StrandMismatch { left: p.strands(), right: q.strands() });
    }
    let mut total = 0i64;
    let mut agree = 0i64;
    for b in ball {
        let s = p.sign(b)?;
        if s == 0 {
            continue;
        }
        total += 1;
        if q.sign(b)? == s {
            agree += 1;
        }
    }
    Ok(if total == 0 { Q::from_integer(1) } else { Q::new(agree, total) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_balls() {
        assert_eq!(ball(2, 3).unwrap().len(), 7);
        assert_eq!(ball(3, 1).unwrap().len(), 5);
        // 1 + 4 + 12 freely reduced words, no relation of length <= 4 identifies two of them
        assert_eq!(ball(3, 2).unwrap().len(), 17);
        assert!(matches!(ball(6, 2), Err(BraidError::ResourceGuard(_))));
        assert!(matches!(ball(3, 7), Err(BraidError::ResourceGuard(_))));
        let wide = BallLimits { max_strands: 6, max_length: 7 };
        assert!(ball_with_limits(6, 1, wide).is_ok());
    }

    #[test]
    fn agreement_extremes() {
        let b = ball(3, 2).unwrap();
        let d = Cone::dehornoy(3).unwrap();
        assert_eq!(cone_agreement(&d, &d, &b).unwrap(), Q::from_integer(1));
        assert_eq!(cone_agreement(&d, &d.reverse(), &b).unwrap(), Q::from_integer(0));
        assert!(cone_agreement(&d, &Cone::dd(3).unwrap(), &b).unwrap() < Q::from_integer(1));
    }
}
