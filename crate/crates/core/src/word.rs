//! Letters and freely reduced words over the standard generators
//! `a1, b1, ..., ag, bg` (surface alphabet) or `A1, B1, ..., Ag, Bg`
//! (bundle alphabet).
//!
//! The literal syntax is whitespace-separated tokens such as `a1 ~b2 A1`,
//! where `~` marks an inverse. The empty string and the token `1` both
//! denote the identity.

use std::fmt;

use crate::error::{Error, Result};

/// Which of the two generators of a handle a letter refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
}

/// Rendering alphabet. Words are alphabet-agnostic; only their literals differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `a1 b1 ...`: free group / closed surface group generators.
    Surface,
    /// `A1 B1 ...`: generators of the circle-bundle group.
    Bundle,
}

/// A signed generator packed into one integer: `(2 * (index - 1) + kind) << 1 | inverse`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    /// `index` is 1-based.
    pub fn new(kind: Kind, index: usize, inverse: bool) -> Letter {
        assert!(index >= 1, "letter index is 1-based");
        let slot = 2 * (index - 1) + usize::from(kind == Kind::B);
        Letter::from_slot(slot, inverse)
    }

    /// `slot` is the 0-based position in the ordered basis `a1, b1, a2, b2, ...`.
    pub fn from_slot(slot: usize, inverse: bool) -> Letter {
        Letter(((slot as u32) << 1) | u32::from(inverse))
    }

    pub fn a(index: usize) -> Letter {
        Letter::new(Kind::A, index, false)
    }

    pub fn b(index: usize) -> Letter {
        Letter::new(Kind::B, index, false)
    }

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn slot(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn index(self) -> usize {
        self.slot() / 2 + 1
    }

    pub fn kind(self) -> Kind {
        if self.slot().is_multiple_of(2) {
            Kind::A
        } else {
            Kind::B
        }
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    /// +1 or -1.
    pub fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    #[must_use]
    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    /// The positive letter with the same generator.
    #[must_use]
    pub fn positive(self) -> Letter {
        Letter(self.0 & !1)
    }

    pub fn literal(self, alphabet: Alphabet) -> String {
        let name = match (self.kind(), alphabet) {
            (Kind::A, Alphabet::Surface) => 'a',
            (Kind::B, Alphabet::Surface) => 'b',
            (Kind::A, Alphabet::Bundle) => 'A',
            (Kind::B, Alphabet::Bundle) => 'B',
        };
        let tilde = if self.is_inverse() { "~" } else { "" };
        format!("{tilde}{name}{}", self.index())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal(Alphabet::Surface))
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    pub fn letter(l: Letter) -> FreeWord {
        FreeWord { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence. No genus check.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> FreeWord {
        let mut w = FreeWord::identity();
        for l in raw {
            w.push(l);
        }
        w
    }

    /// Builds a word from the signed-integer encoding `+-(slot + 1)`.
    pub fn from_signed(codes: &[i32]) -> FreeWord {
        FreeWord::from_letters(codes.iter().map(|&c| {
            assert!(c != 0, "signed letter codes are nonzero");
            Letter::from_slot(c.unsigned_abs() as usize - 1, c < 0)
        }))
    }

    /// Appends one letter, cancelling against the last letter if needed.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest handle index used, 0 for the identity.
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn check_genus(&self, genus: usize) -> Result<()> {
        match self.letters.iter().find(|l| l.index() > genus) {
            Some(l) => Err(Error::Malformed(format!(
                "letter {:?} has index {} outside 1..={genus}",
                l,
                l.index()
            ))),
            None => Ok(()),
        }
    }

    #[must_use]
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend(other.letters.iter().copied());
        out
    }

    #[must_use]
    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^n` for any integer `n`.
    #[must_use]
    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out.extend(base.letters.iter().copied());
        }
        out
    }

    /// `x * self * x^-1`.
    #[must_use]
    pub fn conjugate_by(&self, x: &FreeWord) -> FreeWord {
        x.concat(self).concat(&x.inverse())
    }

    /// Returns `(core, x)` with `core` cyclically reduced and `self = x * core * x^-1`.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut i = 0;
        while 2 * i + 1 < n && self.letters[i] == self.letters[n - 1 - i].inverse() {
            i += 1;
        }
        let core = FreeWord {
            letters: self.letters[i..n - i].to_vec(),
        };
        let conj = FreeWord {
            letters: self.letters[..i].to_vec(),
        };
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) if self.letters.len() > 1 => f != l.inverse(),
            _ => true,
        }
    }

    /// Cyclic rotation starting at position `start`.
    #[must_use]
    pub fn rotate(&self, start: usize) -> FreeWord {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let s = start % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[s..]);
        letters.extend_from_slice(&self.letters[..s]);
        FreeWord::from_letters(letters)
    }

    /// Exponent sum of each generator slot, length `2 * genus`.
    pub fn exponent_sums(&self, genus: usize) -> Vec<i64> {
        let mut v = vec![0; 2 * genus];
        for l in &self.letters {
            v[l.slot()] += l.sign();
        }
        v
    }

    /// If `self` is a conjugate `h * other * h^-1` of a cyclically reduced `other`,
    /// returns one such `h`.
    pub fn conjugator_to(&self, other: &FreeWord) -> Option<FreeWord> {
        let (core, outer) = self.cyclic_reduce();
        if core.len() != other.len() {
            return None;
        }
        let n = core.len();
        if n == 0 {
            return Some(FreeWord::identity());
        }
        (0..n)
            .find(|&i| {
                core.letters[..n - i] == other.letters[i..]
                    && core.letters[n - i..] == other.letters[..i]
            })
            .map(|i| {
                let prefix = FreeWord::from_letters(other.letters[..i].iter().copied());
                outer.concat(&prefix.inverse())
            })
    }

    pub fn parse(text: &str, genus: usize) -> Result<FreeWord> {
        let w = parse_tokens(text, false)?.0;
        w.check_genus(genus)?;
        Ok(w)
    }

    pub fn to_literal(&self, alphabet: Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.literal(alphabet)).collect();
        parts.join(" ")
    }
}

impl Extend<Letter> for FreeWord {
    fn extend<T: IntoIterator<Item = Letter>>(&mut self, iter: T) {
        for l in iter {
            self.push(l);
        }
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        FreeWord::from_letters(iter)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({})", self.to_literal(Alphabet::Surface))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal(Alphabet::Surface))
    }
}

/// Freely reduces `raw`, rejecting letters with index outside `1..=genus`.
pub fn free_reduce(raw: &[Letter], genus: usize) -> Result<FreeWord> {
    let w = FreeWord::from_letters(raw.iter().copied());
    if let Some(l) = raw.iter().find(|l| l.index() > genus) {
        return Err(Error::Malformed(format!(
            "letter {:?} has index {} outside 1..={genus}",
            l,
            l.index()
        )));
    }
    Ok(w)
}

/// `[u, v] = u v u^-1 v^-1`.
pub fn commutator(u: &FreeWord, v: &FreeWord) -> FreeWord {
    u.concat(v).concat(&u.inverse()).concat(&v.inverse())
}

/// The word `[a1, b1] [a2, b2] ... [ag, bg]`.
pub fn surface_relator(genus: usize) -> FreeWord {
    let mut w = FreeWord::identity();
    for i in 1..=genus {
        w = w.concat(&commutator(
            &FreeWord::letter(Letter::a(i)),
            &FreeWord::letter(Letter::b(i)),
        ));
    }
    w
}

/// Tokenizes a word literal. Returns the word and the net exponent of `z`
/// tokens; `z` is only accepted when `allow_z` is set.
pub(crate) fn parse_tokens(text: &str, allow_z: bool) -> Result<(FreeWord, i64)> {
    let mut letters = Vec::new();
    let mut zexp = 0i64;
    for (position, token) in text.split_whitespace().enumerate() {
        let err = |reason: &str| Error::Parse {
            position,
            token: token.to_string(),
            reason: reason.to_string(),
        };
        if token == "1" {
            continue;
        }
        let (inverse, body) = match token.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(|| err("empty token"))?;
        let digits = chars.as_str();
        if head == 'z' {
            if !allow_z {
                return Err(err("`z` is only valid in bundle words"));
            }
            if !digits.is_empty() {
                return Err(err("`z` takes no index"));
            }
            zexp += if inverse { -1 } else { 1 };
            continue;
        }
        let kind = match head {
            'a' | 'A' => Kind::A,
            'b' | 'B' => Kind::B,
            _ => return Err(err("expected a generator a<i>, b<i>, A<i>, B<i> or z")),
        };
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err("generator index must be a positive integer"));
        }
        let index: usize = digits
            .parse()
            .map_err(|_| err("generator index out of range"))?;
        if index == 0 {
            return Err(err("generator indices start at 1"));
        }
        letters.push(Letter::new(kind, index, inverse));
    }
    Ok((FreeWord::from_letters(letters), zexp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s, 3).unwrap()
    }

    #[test]
    fn letter_packing() {
        let l = Letter::new(Kind::B, 2, true);
        assert_eq!(l.index(), 2);
        assert_eq!(l.kind(), Kind::B);
        assert!(l.is_inverse());
        assert_eq!(l.slot(), 3);
        assert_eq!(l.inverse().inverse(), l);
        assert_eq!(l.literal(Alphabet::Bundle), "~B2");
    }

    #[test]
    fn inverse_cancellation() {
        assert!(w("a1 ~a1").is_empty());
        assert_eq!(w("a1 b1 ~b1 a2"), w("a1 a2"));
        assert_eq!(w("a1 b1 ~b1 a2").len(), 2);
    }

    #[test]
    fn relator_is_reduced() {
        let r = surface_relator(2);
        assert_eq!(r.len(), 8);
        assert_eq!(r, w("a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2"));
    }

    #[test]
    fn free_reduce_rejects_out_of_range() {
        let raw = [Letter::a(1), Letter::b(3)];
        assert!(matches!(free_reduce(&raw, 2), Err(Error::Malformed(_))));
        assert_eq!(free_reduce(&raw, 3).unwrap().len(), 2);
    }

    #[test]
    fn concat_invert_cyclic() {
        assert!(w("a1").concat(&w("~a1")).is_empty());
        assert_eq!(w("a1 b2").inverse(), w("~b2 ~a1"));
        let (core, x) = w("b1 a1 ~b1").cyclic_reduce();
        assert_eq!(core, w("a1"));
        assert_eq!(x, w("b1"));
    }

    #[test]
    fn conjugator_detection() {
        let c = surface_relator(2);
        let h = w("b1 a2");
        let conj = c.conjugate_by(&h);
        let found = conj.conjugator_to(&c).unwrap();
        assert_eq!(c.conjugate_by(&found), conj);
        assert!(w("a1 a2").conjugator_to(&c).is_none());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(FreeWord::parse("a0", 2), Err(Error::Parse { .. })));
        assert!(matches!(FreeWord::parse("c1", 2), Err(Error::Parse { .. })));
        assert!(matches!(FreeWord::parse("z", 2), Err(Error::Parse { .. })));
        assert!(matches!(FreeWord::parse("a3", 2), Err(Error::Malformed(_))));
        assert!(FreeWord::parse("", 2).unwrap().is_empty());
        assert!(FreeWord::parse("  1 ", 2).unwrap().is_empty());
    }

    #[test]
    fn literal_round_trip() {
        let x = w("a1 ~b2 a3 ~a1");
        assert_eq!(x.to_literal(Alphabet::Surface), "a1 ~b2 a3 ~a1");
        assert_eq!(
            FreeWord::parse(&x.to_literal(Alphabet::Bundle), 3).unwrap(),
            x
        );
        assert_eq!(FreeWord::identity().to_literal(Alphabet::Surface), "1");
    }

    #[test]
    fn powers() {
        let x = w("a1 b1");
        assert_eq!(x.pow(2), w("a1 b1 a1 b1"));
        assert_eq!(x.pow(-1), x.inverse());
        assert!(x.pow(0).is_empty());
    }
}
