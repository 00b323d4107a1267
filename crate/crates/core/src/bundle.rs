//! Exact arithmetic in the fundamental group of the circle bundle with
//! Euler number `k` over the closed genus-`g` surface:
//!
//! ```text
//! < A1, B1, ..., Ag, Bg, z | z central, [A1,B1]...[Ag,Bg] = z^k >
//! ```
//!
//! Elements are stored as `word * z^zexp`, which is always possible because
//! `z` is central. Representatives are not canonical; equality is decided
//! semantically. For `g >= 2` it goes through Dehn's algorithm on the
//! projected word, each relator application contributing `k` to the `z`
//! exponent. For `g = 1` elements are collected into the normal form
//! `A^p B^q z^r` using `B A = A B z^-k`.
//!
//! The bundles with Euler numbers `k` and `-k` are homeomorphic, but no
//! isomorphism between the two contexts is provided here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::SurfaceContext;
use crate::word::{parse_tokens, Alphabet, FreeWord, Kind, Letter};

#[derive(Clone, Debug)]
pub struct BundleContext {
    genus: usize,
    euler: i64,
    surface: SurfaceContext,
}

impl BundleContext {
    /// Rejects `g = 0` and `(g, k) = (1, 0)`, where `<z>` is not the center.
    pub fn new(genus: usize, euler: i64) -> Result<BundleContext> {
        if genus == 0 {
            return Err(Error::UnsupportedContext("genus must be at least 1".into()));
        }
        if genus == 1 && euler == 0 {
            return Err(Error::UnsupportedContext(
                "(g, k) = (1, 0) is excluded: the 3-torus group has center larger than <z>".into(),
            ));
        }
        Ok(BundleContext {
            genus,
            euler,
            surface: SurfaceContext::new(genus)?,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn surface(&self) -> &SurfaceContext {
        &self.surface
    }

    pub fn identity(&self) -> BundleElement {
        BundleElement::identity()
    }

    pub fn z_power(&self, m: i64) -> BundleElement {
        BundleElement::z_power(m)
    }

    /// `[A1,B1]...[Ag,Bg]` with no `z` factor.
    pub fn relator_element(&self) -> BundleElement {
        BundleElement::new(self.surface.relator().clone(), 0)
    }

    fn check(&self, x: &BundleElement) -> Result<()> {
        let found = x.word.max_index();
        if found > self.genus {
            return Err(Error::ContextMismatch {
                expected: self.genus,
                found,
            });
        }
        Ok(())
    }

    pub fn mul(&self, x: &BundleElement, y: &BundleElement) -> Result<BundleElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.mul(y))
    }

    pub fn inv(&self, x: &BundleElement) -> Result<BundleElement> {
        self.check(x)?;
        Ok(x.inverse())
    }

    /// `A^p B^q z^r` for `g = 1`.
    pub fn torus_normal_form(&self, x: &BundleElement) -> Result<TorusNormalForm> {
        if self.genus != 1 {
            return Err(Error::UnsupportedContext(
                "normal form is only defined for genus 1".into(),
            ));
        }
        self.check(x)?;
        Ok(TorusNormalForm::collect(x, self.euler))
    }

    /// Whether `x * y^-1` is the identity.
    pub fn elem_eq(&self, x: &BundleElement, y: &BundleElement) -> bool {
        if self.check(x).is_err() || self.check(y).is_err() {
            return false;
        }
        if self.genus == 1 {
            return TorusNormalForm::collect(x, self.euler)
                == TorusNormalForm::collect(y, self.euler);
        }
        let diff = x.mul(&y.inverse());
        match self.surface.dehn_reduce(&diff.word) {
            Ok(r) => r.is_trivial() && diff.zexp + self.euler * r.relator_count == 0,
            Err(_) => false,
        }
    }

    /// The `m` with `x = z^m`; fails if `x` does not project to the identity.
    pub fn z_exponent(&self, x: &BundleElement) -> Result<i64> {
        self.check(x)?;
        if self.genus == 1 {
            let nf = TorusNormalForm::collect(x, self.euler);
            if nf.a != 0 || nf.b != 0 {
                return Err(Error::NotInCenter {
                    residual: x.word.to_literal(Alphabet::Bundle),
                });
            }
            return Ok(nf.z);
        }
        let r = self.surface.dehn_reduce(&x.word)?;
        if !r.is_trivial() {
            return Err(Error::NotInCenter {
                residual: r.residual.to_literal(Alphabet::Bundle),
            });
        }
        Ok(x.zexp + self.euler * r.relator_count)
    }

    pub fn is_central(&self, x: &BundleElement) -> bool {
        self.surface.is_trivial(&x.word)
    }

    /// Image in the surface group: drop `z`, read `Ai -> ai`, `Bi -> bi`.
    pub fn project_to_surface(&self, x: &BundleElement) -> FreeWord {
        x.word.clone()
    }

    pub fn parse(&self, text: &str) -> Result<BundleElement> {
        let x = BundleElement::parse(text)?;
        x.word.check_genus(self.genus)?;
        Ok(x)
    }
}

/// `word * z^zexp`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BundleElement {
    pub word: FreeWord,
    pub zexp: i64,
}

impl BundleElement {
    pub fn new(word: FreeWord, zexp: i64) -> BundleElement {
        BundleElement { word, zexp }
    }

    pub fn identity() -> BundleElement {
        BundleElement::default()
    }

    pub fn z_power(m: i64) -> BundleElement {
        BundleElement::new(FreeWord::identity(), m)
    }

    pub fn generator(l: Letter) -> BundleElement {
        BundleElement::new(FreeWord::letter(l), 0)
    }

    /// Representative-level product: concatenate words, add exponents.
    #[must_use]
    pub fn mul(&self, other: &BundleElement) -> BundleElement {
        BundleElement::new(self.word.concat(&other.word), self.zexp + other.zexp)
    }

    #[must_use]
    pub fn inverse(&self) -> BundleElement {
        BundleElement::new(self.word.inverse(), -self.zexp)
    }

    #[must_use]
    pub fn pow(&self, n: i64) -> BundleElement {
        BundleElement::new(self.word.pow(n), self.zexp * n)
    }

    /// `x * self * x^-1`; the `z` part is untouched since it is central.
    #[must_use]
    pub fn conjugate_by(&self, x: &BundleElement) -> BundleElement {
        BundleElement::new(self.word.conjugate_by(&x.word), self.zexp)
    }

    /// Parses a bundle literal; `z` and `~z` tokens are folded into the exponent.
    pub fn parse(text: &str) -> Result<BundleElement> {
        let (word, zexp) = parse_tokens(text, true)?;
        Ok(BundleElement::new(word, zexp))
    }

    pub fn to_literal(&self) -> String {
        let z = match self.zexp {
            0 => String::new(),
            m if m > 0 => vec!["z"; m as usize].join(" "),
            m => vec!["~z"; m.unsigned_abs() as usize].join(" "),
        };
        match (self.word.is_empty(), z.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => z,
            (false, true) => self.word.to_literal(Alphabet::Bundle),
            (false, false) => format!("{} {z}", self.word.to_literal(Alphabet::Bundle)),
        }
    }
}

impl fmt::Debug for BundleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BundleElement({} * z^{})",
            self.word.to_literal(Alphabet::Bundle),
            self.zexp
        )
    }
}

impl fmt::Display for BundleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// `A^a B^b z^z` in the genus-1 group, where `B A = A B z^-k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusNormalForm {
    pub a: i64,
    pub b: i64,
    pub z: i64,
}

impl TorusNormalForm {
    /// Left-to-right collection. Moving `A^e` left past `B^q` costs `z^(-k q e)`.
    pub fn collect(x: &BundleElement, euler: i64) -> TorusNormalForm {
        let mut nf = TorusNormalForm {
            a: 0,
            b: 0,
            z: x.zexp,
        };
        for l in x.word.letters() {
            let e = l.sign();
            match l.kind() {
                Kind::A => {
                    nf.z -= euler * nf.b * e;
                    nf.a += e;
                }
                Kind::B => nf.b += e,
            }
        }
        nf
    }
}
