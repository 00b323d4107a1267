//! Point-pushing automorphisms of `F_2g`, the fundamental group of the
//! once-punctured surface, for the standard generators.
//!
//! The table is built from finger moves. Sliding the puncture across the
//! edge `x` of the standard polygon changes only the image of `x`; the
//! result sends `c` to a conjugate of itself, and conjugating back gives an
//! automorphism that fixes `c` exactly. On handle `i` the pushes around
//! `ai` and `bi` are the composites `A B A^-1` and `A B^-1 A^-1 B A^-1` of
//! the finger moves `A`, `B` across `ai`, `bi`, transported past the earlier
//! handles. Each entry is finally shortened by composing with a power of
//! `C_c`, which does not change its image in the bundle group.
//!
//! Every entry is checked to fix `c`, act trivially on homology and have an
//! exact inverse. The product of the entries along the relator is `C_c^(2-2g)`.

use crate::endo::{Conjugation, FreeEndo};
use crate::error::{Error, Result};
use crate::homology::IntMatrix;
use crate::word::{surface_relator, FreeWord, Letter};

/// An automorphism of the free group together with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAut {
    pub forward: FreeEndo,
    pub inverse: FreeEndo,
}

impl FreeAut {
    pub fn identity(genus: usize) -> FreeAut {
        FreeAut {
            forward: FreeEndo::identity(genus),
            inverse: FreeEndo::identity(genus),
        }
    }

    /// `self ∘ other`.
    #[must_use]
    pub fn compose(&self, other: &FreeAut) -> FreeAut {
        FreeAut {
            forward: self.forward.compose(&other.forward),
            inverse: other.inverse.compose(&self.inverse),
        }
    }

    #[must_use]
    pub fn inverted(&self) -> FreeAut {
        FreeAut {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// Both composites equal the identity as reduced words.
    pub fn is_certified(&self) -> bool {
        let id = FreeEndo::identity(self.forward.genus());
        self.forward.compose(&self.inverse) == id && self.inverse.compose(&self.forward) == id
    }
}

/// `w -> c^n w c^-n`.
pub fn c_power_conjugation(genus: usize, n: i64) -> FreeEndo {
    FreeEndo::conjugation(genus, &surface_relator(genus).pow(n), Conjugation::Left)
}

fn c_power_aut(genus: usize, n: i64) -> FreeAut {
    FreeAut {
        forward: c_power_conjugation(genus, n),
        inverse: c_power_conjugation(genus, -n),
    }
}

/// Replace `x` by `x -> image`, then conjugate so that `c` is fixed.
fn fix_relator(genus: usize, slot: usize, image: FreeWord) -> FreeEndo {
    let mut images = FreeEndo::identity(genus).images().to_vec();
    images[slot] = image;
    let moved = FreeEndo::new(genus, images).expect("images within genus");
    let c = surface_relator(genus);
    let h = moved
        .apply(&c)
        .conjugator_to(&c)
        .expect("a finger move sends c to a conjugate of c");
    FreeEndo::conjugation(genus, &h.inverse(), Conjugation::Left).compose(&moved)
}

/// The finger move across the positive occurrence of generator `slot` in `c`.
fn finger(genus: usize, slot: usize) -> FreeEndo {
    let c = surface_relator(genus);
    let x = Letter::from_slot(slot, false);
    let j = c
        .letters()
        .iter()
        .position(|&l| l == x)
        .expect("every generator occurs in c");
    let p = FreeWord::from_letters(c.letters()[..j].iter().copied());
    let image = p
        .inverse()
        .concat(&c.inverse())
        .concat(&p)
        .concat(&FreeWord::letter(x));
    fix_relator(genus, slot, image)
}

/// The reverse move across the occurrence of `slot^-1`; inverse to [`finger`] up to a power of `C_c`.
fn finger_back(genus: usize, slot: usize) -> FreeEndo {
    let c = surface_relator(genus);
    let x = Letter::from_slot(slot, false);
    let j = c
        .letters()
        .iter()
        .position(|&l| l == x.inverse())
        .expect("every inverse generator occurs in c");
    let q = FreeWord::from_letters(c.letters()[..j].iter().copied());
    let image = FreeWord::letter(x)
        .concat(&q.inverse())
        .concat(&c)
        .concat(&q);
    fix_relator(genus, slot, image)
}

fn certified_finger(genus: usize, slot: usize) -> Result<FreeAut> {
    let f = finger(genus, slot);
    let back = finger_back(genus, slot);
    let comp = f.compose(&back);
    for n in -10..=10 {
        if comp == c_power_conjugation(genus, n) {
            let aut = FreeAut {
                forward: f,
                inverse: back.compose(&c_power_conjugation(genus, -n)),
            };
            if aut.is_certified() {
                return Ok(aut);
            }
            break;
        }
    }
    Err(Error::Configuration(format!(
        "could not certify an inverse for the finger move on generator slot {slot}"
    )))
}

/// Shortest representative among `C_c^n ∘ f` for small `n`.
fn normalize(genus: usize, aut: FreeAut) -> FreeAut {
    let mut best = aut.clone();
    for n in -6..=6 {
        let cand = c_power_aut(genus, n).compose(&aut);
        if cand.forward.size() < best.forward.size() {
            best = cand;
        }
    }
    best
}

/// Point-pushing automorphisms of the standard generators and their inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushTable {
    genus: usize,
    entries: Vec<FreeAut>,
}

impl PushTable {
    /// The table derived from finger moves. For `g = 1` every push is
    /// inner by a power of `c`, and the identity is used.
    pub fn standard(genus: usize) -> Result<PushTable> {
        if genus == 0 {
            return Err(Error::Configuration("no push table for genus 0".into()));
        }
        if genus == 1 {
            return PushTable::new(1, vec![FreeAut::identity(1), FreeAut::identity(1)]);
        }
        let fingers = (0..2 * genus)
            .map(|s| certified_finger(genus, s))
            .collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(2 * genus);
        let mut transport = FreeAut::identity(genus);
        for i in 0..genus {
            let a = &fingers[2 * i];
            let b = &fingers[2 * i + 1];
            let (ai, bi) = (a.inverted(), b.inverted());
            let back = transport.inverted();
            let pa = back.compose(a).compose(b).compose(&ai).compose(&transport);
            let pb = back
                .compose(a)
                .compose(&bi)
                .compose(&ai)
                .compose(b)
                .compose(&ai)
                .compose(&transport);
            entries.push(normalize(genus, pa));
            entries.push(normalize(genus, pb));
            transport = bi.compose(a).compose(b).compose(&ai).compose(&transport);
        }
        PushTable::new(genus, entries)
    }

    /// A table from explicit entries, one per generator in the order `a1, b1, ...`.
    pub fn new(genus: usize, entries: Vec<FreeAut>) -> Result<PushTable> {
        if entries.len() != 2 * genus || entries.is_empty() {
            return Err(Error::Configuration(format!(
                "push table for genus {genus} needs {} entries, got {}",
                2 * genus,
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|e| e.forward.genus() != genus || e.inverse.genus() != genus)
        {
            return Err(Error::Configuration(
                "push table entry of the wrong rank".into(),
            ));
        }
        Ok(PushTable { genus, entries })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn entries(&self) -> &[FreeAut] {
        &self.entries
    }

    /// The push along a single letter; inverse letters use the inverse entry.
    pub fn letter(&self, l: Letter) -> &FreeEndo {
        let e = &self.entries[l.slot()];
        if l.is_inverse() {
            &e.inverse
        } else {
            &e.forward
        }
    }

    /// `Push(t)` for a word `t` in the standard generators, as the composite
    /// of the entries along its letters (leftmost letter applied last).
    pub fn push(&self, t: &FreeWord) -> Result<FreeEndo> {
        t.check_genus(self.genus)?;
        let mut images = FreeEndo::identity(self.genus).images().to_vec();
        for &l in t.letters().iter().rev() {
            let step = self.letter(l);
            for w in &mut images {
                *w = step.apply(w);
            }
        }
        FreeEndo::new(self.genus, images)
    }

    /// `Push(t)` with its inverse `Push(t^-1)`.
    pub fn push_aut(&self, t: &FreeWord) -> Result<FreeAut> {
        Ok(FreeAut {
            forward: self.push(t)?,
            inverse: self.push(&t.inverse())?,
        })
    }

    /// Exponent `n` with `Push(c) = C_c^n` exactly, if any small one works.
    pub fn relator_exponent(&self) -> Option<i64> {
        let pc = self.push(&surface_relator(self.genus)).ok()?;
        let bound = 4 * self.genus as i64 + 4;
        (-bound..=bound).find(|&n| pc == c_power_conjugation(self.genus, n))
    }

    /// Runs every structural check; returns the first failure.
    pub fn validate(&self) -> Result<()> {
        let id = IntMatrix::identity(2 * self.genus);
        for (slot, e) in self.entries.iter().enumerate() {
            let name = Letter::from_slot(slot, false).literal(crate::word::Alphabet::Surface);
            if !e.forward.fixes_c() || !e.inverse.fixes_c() {
                return Err(Error::Configuration(format!(
                    "push along {name} does not fix c"
                )));
            }
            if e.forward.homology_matrix() != id {
                return Err(Error::Configuration(format!(
                    "push along {name} acts on homology"
                )));
            }
            if !e.is_certified() {
                return Err(Error::Configuration(format!(
                    "push along {name} has no exact inverse"
                )));
            }
        }
        let expected = 2 - 2 * self.genus as i64;
        match self.relator_exponent() {
            Some(n) if n == expected => Ok(()),
            Some(n) => Err(Error::Configuration(format!(
                "push along c is C_c^{n}, expected C_c^{expected}"
            ))),
            None => Err(Error::Configuration(
                "push along c is not a power of C_c".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tables_validate() {
        for g in 1..=4 {
            let t = PushTable::standard(g).unwrap();
            t.validate().unwrap();
            assert_eq!(t.relator_exponent(), Some(2 - 2 * g as i64));
        }
    }

    #[test]
    fn entries_are_short() {
        for g in 2..=4 {
            let t = PushTable::standard(g).unwrap();
            let longest = t
                .entries()
                .iter()
                .flat_map(|e| e.forward.images())
                .map(FreeWord::len)
                .max();
            assert!(longest.unwrap() <= 20 * g, "genus {g}: {longest:?}");
        }
    }

    #[test]
    fn push_of_identity_and_inverse() {
        let t = PushTable::standard(2).unwrap();
        assert_eq!(
            t.push(&FreeWord::identity()).unwrap(),
            FreeEndo::identity(2)
        );
        let w = FreeWord::parse("a1 ~b2 a2", 2).unwrap();
        let p = t.push_aut(&w).unwrap();
        assert!(p.is_certified());
        assert!(p.forward.fixes_c());
    }

    #[test]
    fn push_is_multiplicative() {
        let t = PushTable::standard(3).unwrap();
        let u = FreeWord::parse("a1 b3", 3).unwrap();
        let v = FreeWord::parse("~a2 b1", 3).unwrap();
        let lhs = t.push(&u.concat(&v)).unwrap();
        let rhs = t.push(&u).unwrap().compose(&t.push(&v).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wrong_size_is_a_configuration_error() {
        assert!(matches!(
            PushTable::new(2, vec![]),
            Err(Error::Configuration(_))
        ));
        assert!(matches!(
            PushTable::standard(0),
            Err(Error::Configuration(_))
        ));
    }
}
