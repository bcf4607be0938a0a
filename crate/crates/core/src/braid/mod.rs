//! Exact arithmetic in the braid group `B_n`: words, permutation braids,
//! Garside left normal form and named elements.

mod garside;
mod perm;
mod special;
mod word;

pub use garside::NormalForm;
pub use perm::Permutation;
pub use special::{dd_generators, delta, delta_sq, little_delta, special, sub_delta_sq, Special};
pub use word::BraidWord;

/// Largest supported strand count (permutations are stored inline).
pub const MAX_STRANDS: usize = 16;

pub fn compose(a: &BraidWord, b: &BraidWord) -> crate::Result<BraidWord> {
    a.compose(b)
}

pub fn invert(a: &BraidWord) -> BraidWord {
    a.invert()
}

pub fn normal_form(a: &BraidWord) -> NormalForm {
    a.normal_form()
}

pub fn embed(a: &BraidWord, n: usize) -> crate::Result<BraidWord> {
    a.embed(n)
}

/// `b a b⁻¹`.
pub fn conjugate_by(a: &BraidWord, b: &BraidWord) -> BraidWord {
    b.compose_unchecked(a).compose_unchecked(&b.invert())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn delta_is_a_single_delta_power() {
        let nf = w(3, "1 2 1").normal_form();
        assert_eq!(nf.delta_power(), 1);
        assert!(nf.factors().is_empty());
        assert_eq!(w(3, "2 1 2").normal_form(), nf);
    }

    #[test]
    fn sigma_one_squared_has_two_factors() {
        let nf = w(3, "1 1").normal_form();
        assert_eq!(nf.delta_power(), 0);
        assert_eq!(nf.factors().len(), 2);
        for f in nf.factors() {
            assert_eq!(f.reduced_word(), vec![1]);
        }
    }

    #[test]
    fn little_delta_cubed_is_delta_squared() {
        let nf = little_delta(3).pow(3).normal_form();
        assert_eq!(nf.delta_power(), 2);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn delta_times_delta_is_sigma1_sigma2_cubed() {
        let dd = delta(3).compose(&delta(3)).unwrap();
        assert!(dd.equals(&w(3, "1 2 1 2 1 2")));
    }

    #[test]
    fn delta_sq_in_b4_has_power_two() {
        let nf = delta_sq(4).normal_form();
        assert_eq!(nf.delta_power(), 2);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn inverse_and_identity() {
        let a = w(4, "1 -2 3 2 -1 -3 3");
        assert!(a.compose(&a.invert()).unwrap().is_identity());
        assert!(a.normal_form().multiply(&a.normal_form().inverse()).is_identity());
        assert!(!a.is_identity());
    }

    #[test]
    fn negative_letters_normalise() {
        // σ1⁻¹ = Δ⁻¹ · σ1σ2 in B3
        let nf = w(3, "-1").normal_form();
        assert_eq!(nf.delta_power(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.factors()[0].reduced_word(), vec![1, 2]);
    }

    #[test]
    fn garside_identities_for_small_n() {
        for n in 3..=6 {
            let dn = little_delta(n);
            assert!(dn.pow(n as i64).equals(&delta_sq(n)), "δ^n = Δ² for n={n}");
            let mut prod = BraidWord::identity(n).unwrap();
            for k in (2..=n).rev() {
                prod = prod.compose(&little_delta(k).embed(n).unwrap()).unwrap();
            }
            assert!(prod.equals(&delta(n)), "Δ = δ_n⋯δ_2 for n={n}");
            for i in 1..=n - 2 {
                let lhs = dn.compose(&BraidWord::generator(n, i, true).unwrap()).unwrap();
                let rhs = BraidWord::generator(n, i + 1, true).unwrap().compose(&dn).unwrap();
                assert!(lhs.equals(&rhs), "δσ_{i} = σ_{}δ for n={n}", i + 1);
            }
            let z = delta_sq(n);
            for i in 1..n {
                let s = BraidWord::generator(n, i, true).unwrap();
                assert!(z.compose(&s).unwrap().equals(&s.compose(&z).unwrap()));
            }
        }
    }

    #[test]
    fn multiply_agrees_with_concatenation() {
        let a = w(5, "1 -3 2 4 -1 2");
        let b = w(5, "-4 -4 3 1 -2");
        let lhs = a.normal_form().multiply(&b.normal_form());
        assert_eq!(lhs, a.compose(&b).unwrap().normal_form());
        let mut step = a.normal_form();
        for &l in b.letters() {
            step = step.times_letter(l);
        }
        assert_eq!(step, lhs);
    }

    #[test]
    fn normal_form_word_round_trip() {
        let a = w(4, "2 -1 -3 2 2 -1 3");
        let nf = a.normal_form();
        assert_eq!(nf.to_word().normal_form(), nf);
        assert_eq!(nf.shift_delta_sq(2), a.compose(&delta_sq(4).pow(2)).unwrap().normal_form());
    }

    #[test]
    fn factors_are_left_weighted_and_proper() {
        let a = w(5, "1 2 -3 4 4 -1 2 3 -2 1 1 4");
        let nf = a.normal_form();
        let longest = Permutation::longest(5);
        for f in nf.factors() {
            assert!(!f.is_identity() && *f != longest);
        }
        for pair in nf.factors().windows(2) {
            assert_eq!(pair[1].left_descents() & !pair[0].right_descents(), 0);
        }
    }
}
