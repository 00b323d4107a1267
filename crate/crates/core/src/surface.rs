//! The closed surface group `<a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>`.
//!
//! For `g >= 2` the presentation is C'(1/6) and the word problem is solved
//! by Dehn's algorithm: any subword longer than half of a cyclic rotation of
//! the relator (or its inverse) is replaced by the shorter complement. Each
//! replacement is tagged with the sign of the relator it used, so a trivial
//! word comes with the net number of relator applications. That number is
//! the `z`-exponent (in units of `k`) of the same word in the bundle group.
//!
//! For `g = 1` the group is `Z^2` and triviality is decided by exponent sums.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::word::{surface_relator, FreeWord, Letter};

/// A cyclic rotation of the relator (`sign = +1`) or of its inverse (`sign = -1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub word: FreeWord,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DehnResult {
    /// Cyclically reduced and free of long relator pieces.
    pub residual: FreeWord,
    /// Net signed number of relator applications.
    pub relator_count: i64,
}

impl DehnResult {
    pub fn is_trivial(&self) -> bool {
        self.residual.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceContext {
    genus: usize,
    relator: FreeWord,
    rotations: Vec<Rotation>,
    /// Long piece `u` of a rotation `u v` mapped to `(v^-1, sign)`.
    rewrite: HashMap<Vec<Letter>, (Vec<Letter>, i64)>,
}

impl SurfaceContext {
    pub fn new(genus: usize) -> Result<SurfaceContext> {
        if genus == 0 {
            return Err(Error::UnsupportedContext("genus must be at least 1".into()));
        }
        let relator = surface_relator(genus);
        let n = relator.len();
        let mut rotations = Vec::with_capacity(2 * n);
        for (base, sign) in [(relator.clone(), 1), (relator.inverse(), -1)] {
            for s in 0..n {
                rotations.push(Rotation {
                    word: base.rotate(s),
                    sign,
                });
            }
        }
        let mut rewrite = HashMap::new();
        if genus >= 2 {
            for rot in &rotations {
                let letters = rot.word.letters();
                for len in (2 * genus + 1)..=n {
                    let rest: Vec<Letter> =
                        letters[len..].iter().rev().map(|l| l.inverse()).collect();
                    rewrite
                        .entry(letters[..len].to_vec())
                        .or_insert((rest, rot.sign));
                }
            }
        }
        Ok(SurfaceContext {
            genus,
            relator,
            rotations,
            rewrite,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `[a1,b1]...[ag,bg]`, the loop around the puncture.
    pub fn relator(&self) -> &FreeWord {
        &self.relator
    }

    /// All `8g` rotations of the relator and its inverse.
    pub fn rotations(&self) -> &[Rotation] {
        &self.rotations
    }

    /// Dehn's algorithm with signed relator counting. Requires `g >= 2`.
    pub fn dehn_reduce(&self, w: &FreeWord) -> Result<DehnResult> {
        if self.genus < 2 {
            return Err(Error::UnsupportedContext(
                "Dehn's algorithm needs genus >= 2; the genus-1 relator is not small cancellation"
                    .into(),
            ));
        }
        w.check_genus(self.genus)?;
        let mut count = 0i64;
        let mut pending: Vec<Letter> = w.letters().iter().rev().copied().collect();
        let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
        loop {
            self.linear_pass(&mut stack, &mut pending, &mut count);
            cyclically_reduce_in_place(&mut stack);
            match self.find_wrapping_piece(&stack) {
                Some((start, len, replacement, sign)) => {
                    // Conjugate so the piece is a prefix, then replace it.
                    stack.rotate_left(start);
                    count += sign;
                    let tail = stack.split_off(len);
                    stack.clear();
                    pending.extend(tail.iter().rev());
                    pending.extend(replacement.iter().rev());
                }
                None => break,
            }
        }
        Ok(DehnResult {
            residual: FreeWord::from_letters(stack),
            relator_count: count,
        })
    }

    fn linear_pass(&self, stack: &mut Vec<Letter>, pending: &mut Vec<Letter>, count: &mut i64) {
        let min_len = 2 * self.genus + 1;
        let max_len = 4 * self.genus;
        while let Some(l) = pending.pop() {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
                continue;
            }
            stack.push(l);
            let top = stack.len();
            for len in (min_len..=max_len.min(top)).rev() {
                if let Some((replacement, sign)) = self.rewrite.get(&stack[top - len..]) {
                    stack.truncate(top - len);
                    *count += sign;
                    pending.extend(replacement.iter().rev());
                    break;
                }
            }
        }
    }

    fn find_wrapping_piece(&self, w: &[Letter]) -> Option<(usize, usize, Vec<Letter>, i64)> {
        let n = w.len();
        let min_len = 2 * self.genus + 1;
        if n < min_len {
            return None;
        }
        let max_len = (4 * self.genus).min(n);
        let mut buf = Vec::with_capacity(max_len);
        for start in 1..n {
            for len in (min_len..=max_len).rev() {
                if start + len <= n {
                    break;
                }
                buf.clear();
                buf.extend_from_slice(&w[start..]);
                buf.extend_from_slice(&w[..start + len - n]);
                if let Some((replacement, sign)) = self.rewrite.get(buf.as_slice()) {
                    return Some((start, len, replacement.clone(), *sign));
                }
            }
        }
        None
    }

    /// Word problem in the surface group, any `g >= 1`.
    pub fn is_trivial(&self, w: &FreeWord) -> bool {
        if self.genus == 1 {
            w.exponent_sums(1).iter().all(|&e| e == 0)
        } else {
            self.dehn_reduce(w).map(|r| r.is_trivial()).unwrap_or(false)
        }
    }

    pub fn equal(&self, u: &FreeWord, v: &FreeWord) -> bool {
        self.is_trivial(&u.concat(&v.inverse()))
    }
}

fn cyclically_reduce_in_place(w: &mut Vec<Letter>) {
    let n = w.len();
    let mut i = 0;
    while 2 * i + 1 < n && w[i] == w[n - 1 - i].inverse() {
        i += 1;
    }
    if i > 0 {
        w.truncate(n - i);
        w.drain(..i);
    }
}

pub fn dehn_reduce(ctx: &SurfaceContext, w: &FreeWord) -> Result<DehnResult> {
    ctx.dehn_reduce(w)
}

pub fn is_trivial_surface(ctx: &SurfaceContext, w: &FreeWord) -> bool {
    ctx.is_trivial(w)
}

pub fn surface_equal(ctx: &SurfaceContext, u: &FreeWord, v: &FreeWord) -> bool {
    ctx.equal(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: usize) -> SurfaceContext {
        SurfaceContext::new(g).unwrap()
    }

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s, 4).unwrap()
    }

    #[test]
    fn rotation_table_shape() {
        for g in 1..=4 {
            let c = ctx(g);
            assert_eq!(c.relator().len(), 4 * g);
            assert_eq!(c.rotations().len(), 8 * g);
            assert!(c
                .rotations()
                .iter()
                .all(|r| r.word.is_cyclically_reduced() && r.word.len() == 4 * g));
        }
    }

    #[test]
    fn max_piece_length_is_one() {
        // Two distinct rotations never share a prefix of length 2.
        for g in 2..=4 {
            let c = ctx(g);
            let rots = c.rotations();
            for (i, r) in rots.iter().enumerate() {
                for s in &rots[i + 1..] {
                    assert_ne!(&r.word.letters()[..2], &s.word.letters()[..2]);
                }
            }
        }
    }

    #[test]
    fn relator_reduces_with_count_one() {
        let c = ctx(2);
        let r = c.dehn_reduce(c.relator()).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.relator_count, 1);
        let r = c.dehn_reduce(&c.relator().inverse()).unwrap();
        assert_eq!(r.relator_count, -1);
    }

    #[test]
    fn identity_reduces_with_count_zero() {
        let r = ctx(2).dehn_reduce(&FreeWord::identity()).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.relator_count, 0);
    }

    #[test]
    fn conjugated_relator() {
        let c = ctx(2);
        let x = w("a1 b2");
        let r = c.dehn_reduce(&c.relator().conjugate_by(&x)).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.relator_count, 1);
    }

    #[test]
    fn nontrivial_words_keep_residual() {
        let c = ctx(2);
        assert!(!c.equal(&w("a1"), &w("b1")));
        let r = c.dehn_reduce(&w("a1 ~b1")).unwrap();
        assert_eq!(r.residual, w("a1 ~b1"));
        assert!(!c.is_trivial(&w("a1 a2 ~a1 ~a2")));
    }

    #[test]
    fn genus_one_is_rejected_by_dehn() {
        let c = ctx(1);
        assert!(matches!(
            c.dehn_reduce(c.relator()),
            Err(Error::UnsupportedContext(_))
        ));
        assert!(c.is_trivial(&w("a1 b1 ~a1 ~b1")));
        assert!(!c.is_trivial(&w("a1 b1")));
    }

    #[test]
    fn wrapping_piece_is_found() {
        // A rotation split across the ends of the word.
        let c = ctx(2);
        let rot = c.relator().rotate(5);
        let r = c.dehn_reduce(&rot).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.relator_count, 1);
    }

    #[test]
    fn complementary_halves() {
        // u v = relator rotation, so u = v^-1 in the group with count +1 for u v^... .
        let c = ctx(2);
        let rel = c.relator();
        let u = FreeWord::from_letters(rel.letters()[..5].iter().copied());
        let v = FreeWord::from_letters(rel.letters()[5..].iter().copied());
        assert!(c.equal(&u, &v.inverse()));
        let r = c.dehn_reduce(&u.concat(&v)).unwrap();
        assert_eq!(r.relator_count, 1);
    }

    #[test]
    fn rejects_out_of_range_letters() {
        assert!(matches!(
            ctx(2).dehn_reduce(&w("a3")),
            Err(Error::Malformed(_))
        ));
    }
}
