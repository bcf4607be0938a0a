//! Oracles independent of the library's normal forms and handle reduction.
#![allow(dead_code)]

use braidlab_core::BraidWord;

/// Reduced word in the free group on `x_1, …, x_n`; letter `±i` is `x_i^{±1}`.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub fn free_mul(a: &[i32], b: &[i32]) -> FreeWord {
    let mut out = a.to_vec();
    for &l in b {
        push_reduced(&mut out, l);
    }
    out
}

pub fn free_inv(a: &[i32]) -> FreeWord {
    a.iter().rev().map(|l| -l).collect()
}

/// Substitutes `images[i-1]` for `x_i` in `w`.
fn substitute(w: &[i32], images: &[FreeWord]) -> FreeWord {
    let mut out = Vec::new();
    for &l in w {
        let img = &images[l.unsigned_abs() as usize - 1];
        let piece = if l > 0 { img.clone() } else { free_inv(img) };
        for p in piece {
            push_reduced(&mut out, p);
        }
    }
    out
}

/// Images of `x_1, …, x_n` under the Artin automorphism of `β`, with
/// `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i` applied letter by letter
/// from the left of the word.
pub fn artin_images(beta: &BraidWord) -> Vec<FreeWord> {
    let n = beta.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|i| vec![i]).collect();
    for &l in beta.letters() {
        let i = l.unsigned_abs() as usize;
        let (xi, xj) = (i as i32, i as i32 + 1);
        let mut gen: Vec<FreeWord> = (1..=n as i32).map(|k| vec![k]).collect();
        if l > 0 {
            gen[i - 1] = vec![xi, xj, -xi];
            gen[i] = vec![xi];
        } else {
            gen[i - 1] = vec![xj];
            gen[i] = vec![-xj, xi, xj];
        }
        // images ∘ gen: substitute the current images into the generator
        images = gen.iter().map(|g| substitute(g, &images)).collect();
    }
    images
}

/// Equality in `B_n` through the faithful Artin action.
pub fn artin_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && artin_images(a) == artin_images(b)
}

/// Every freely reduced word of length at most `len`.
pub fn reduced_words(n: usize, len: usize) -> Vec<BraidWord> {
    let letters: Vec<i8> = (1..n as i8).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::<i8>::new()];
    let mut layer = out.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(|v| BraidWord::new(n, v).unwrap()).collect()
}

/// Number of distinct elements among `words`, judged by the Artin action.
pub fn distinct_by_action(words: &[BraidWord]) -> usize {
    let mut keys: Vec<Vec<FreeWord>> = words.iter().map(artin_images).collect();
    keys.sort();
    keys.dedup();
    keys.len()
}

/// Dehornoy sign with the top generator as the main one, by Larue's
/// criterion on the flipped word: a braid is `σ_i`-positive in the classical
/// sense when it fixes `x_1, …, x_{i-1}` and sends `x_i` to a word ending in `x_i⁻¹`.
pub fn larue_sign(beta: &BraidWord) -> i8 {
    let c = beta.flip();
    let (fwd, back) = (artin_images(&c), artin_images(&c.invert()));
    for i in 1..beta.strands() as i32 {
        let k = i as usize - 1;
        if fwd[k].last() == Some(&-i) {
            return 1;
        }
        if back[k].last() == Some(&-i) {
            return -1;
        }
        if fwd[k] != vec![i] {
            panic!("x_{i} neither fixed nor ending in its inverse for {beta:?}");
        }
    }
    0
}

/// Main index of the library convention (top generator is `σ_{n-1}`).
pub fn larue_main_index(beta: &BraidWord) -> Option<usize> {
    let c = beta.flip();
    let fwd = artin_images(&c);
    let n = beta.strands();
    (1..n).find(|&i| fwd[i - 1] != vec![i as i32]).map(|i| n - i)
}
