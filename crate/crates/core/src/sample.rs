//! Seeded random samples of words, classes and elements.
//!
//! Every trial draws from its own ChaCha8 stream, selected from the run seed
//! by stream number, so results do not depend on scheduling or platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::BundleElement;
use crate::homology::HomologyClass;
use crate::surface::SurfaceContext;
use crate::word::{FreeWord, Letter};

pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, genus: usize) -> Letter {
    Letter::from_slot(rng.random_range(0..2 * genus), rng.random_bool(0.5))
}

/// Uniform among reduced words of exactly `len` letters.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, genus: usize, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, genus);
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

/// A reduced word whose length is uniform in `0..=max_len`.
pub fn random_word_up_to<R: Rng + ?Sized>(rng: &mut R, genus: usize, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    random_reduced_word(rng, genus, len)
}

/// A product of one to three conjugated relator rotations, freely reduced,
/// of length at most `max_len`. Falls back to the empty word when nothing fits.
pub fn random_trivial_word<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &SurfaceContext,
    max_len: usize,
) -> FreeWord {
    let rotations = ctx.rotations();
    for _ in 0..1000 {
        let factors = rng.random_range(1..=3);
        let mut w = FreeWord::identity();
        for _ in 0..factors {
            let r = &rotations[rng.random_range(0..rotations.len())].word;
            let u = random_word_up_to(rng, ctx.genus(), 3);
            w = w.concat(&r.conjugate_by(&u));
        }
        if w.len() <= max_len {
            return w;
        }
    }
    FreeWord::identity()
}

/// Coordinates uniform in `-bound..=bound`.
pub fn random_class<R: Rng + ?Sized>(rng: &mut R, genus: usize, bound: i64) -> HomologyClass {
    HomologyClass(
        (0..2 * genus)
            .map(|_| rng.random_range(-bound..=bound))
            .collect(),
    )
}

pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    genus: usize,
    max_len: usize,
    zbound: i64,
) -> BundleElement {
    let w = random_word_up_to(rng, genus, max_len);
    BundleElement::new(w, rng.random_range(-zbound..=zbound))
}

/// `[u, v]` with `u`, `v` nonempty and at most `max_len` letters each.
pub fn random_commutator<R: Rng + ?Sized>(rng: &mut R, genus: usize, max_len: usize) -> FreeWord {
    let max_len = max_len.max(1);
    let lu = rng.random_range(1..=max_len);
    let lv = rng.random_range(1..=max_len);
    let u = random_reduced_word(rng, genus, lu);
    let v = random_reduced_word(rng, genus, lv);
    crate::word::commutator(&u, &v)
}

/// Every reduced word of length at most `max_len`, shortest first.
pub fn all_reduced_words(genus: usize, max_len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * (4 * genus - 1).max(1));
        for w in &layer {
            for slot in 0..2 * genus {
                for inv in [false, true] {
                    let l = Letter::from_slot(slot, inv);
                    if w.last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned().map(FreeWord::from_letters));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = random_reduced_word(&mut trial_rng(7, 3), 2, 20);
        let b = random_reduced_word(&mut trial_rng(7, 3), 2, 20);
        let c = random_reduced_word(&mut trial_rng(7, 4), 2, 20);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 20);
    }

    #[test]
    fn trivial_words_are_trivial() {
        let ctx = SurfaceContext::new(2).unwrap();
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            let w = random_trivial_word(&mut rng, &ctx, 12);
            assert!(w.len() <= 12);
            assert!(ctx.is_trivial(&w));
        }
    }

    #[test]
    fn enumeration_counts() {
        // 1 + 4 + 12 + 36 for genus 1
        assert_eq!(all_reduced_words(1, 3).len(), 53);
        assert_eq!(all_reduced_words(2, 2).len(), 1 + 8 + 56);
    }
}
