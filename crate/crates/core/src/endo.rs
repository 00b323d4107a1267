//! Endomorphisms given by generator images, of the free group `F_2g` (also
//! read in the surface group) and of the bundle group.
//!
//! `a.compose(b)` is `a ∘ b`: apply `b` first.

use serde_json::{Map, Value};

use crate::bundle::{BundleContext, BundleElement};
use crate::error::{Error, Result};
use crate::homology::{abelianize, is_symplectic_action, IntMatrix, Orientation};
use crate::surface::SurfaceContext;
use crate::word::{surface_relator, Alphabet, FreeWord, Kind, Letter};

/// Direction of an inner automorphism `C_x`.
///
/// With the relator `[a1,b1]...[ag,bg]` (`[x,y] = x y x^-1 y^-1`) and
/// `<ai, bi> = +1`, the point-pushing identity holds for `Left` and fails
/// for `Right`; the verifiers check both and report which one holds.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum Conjugation {
    /// `C_x(w) = x w x^-1`, so `C_x ∘ C_y = C_{xy}`.
    #[default]
    Left,
    /// `C_x(w) = x^-1 w x`, so `C_x ∘ C_y = C_{yx}`.
    Right,
}

impl Conjugation {
    pub fn both() -> [Conjugation; 2] {
        [Conjugation::Left, Conjugation::Right]
    }

    pub fn apply_free(self, w: &FreeWord, x: &FreeWord) -> FreeWord {
        match self {
            Conjugation::Left => w.conjugate_by(x),
            Conjugation::Right => w.conjugate_by(&x.inverse()),
        }
    }

    pub fn apply_bundle(self, w: &BundleElement, x: &BundleElement) -> BundleElement {
        match self {
            Conjugation::Left => w.conjugate_by(x),
            Conjugation::Right => w.conjugate_by(&x.inverse()),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Conjugation::Left => "C_x(w) = x w x^-1",
            Conjugation::Right => "C_x(w) = x^-1 w x",
        }
    }
}

fn slot_key(slot: usize) -> String {
    let l = Letter::from_slot(slot, false);
    match l.kind() {
        Kind::A => format!("a{}", l.index()),
        Kind::B => format!("b{}", l.index()),
    }
}

fn parse_slot_key(key: &str, genus: usize) -> Result<usize> {
    let w = FreeWord::parse(key, genus)
        .map_err(|e| Error::Malformed(format!("bad generator key {key:?}: {e}")))?;
    match w.letters() {
        [l] if !l.is_inverse() => Ok(l.slot()),
        _ => Err(Error::Malformed(format!("bad generator key {key:?}"))),
    }
}

/// Endomorphism of `F_2g` given by the images of `a1, b1, ..., ag, bg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    genus: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(genus: usize) -> FreeEndo {
        FreeEndo {
            genus,
            images: (0..2 * genus)
                .map(|s| FreeWord::letter(Letter::from_slot(s, false)))
                .collect(),
        }
    }

    pub fn new(genus: usize, images: Vec<FreeWord>) -> Result<FreeEndo> {
        if images.len() != 2 * genus {
            return Err(Error::DimensionMismatch {
                left: 2 * genus,
                right: images.len(),
            });
        }
        for w in &images {
            w.check_genus(genus)?;
        }
        Ok(FreeEndo { genus, images })
    }

    /// Inner automorphism of the free group.
    pub fn conjugation(genus: usize, x: &FreeWord, dir: Conjugation) -> FreeEndo {
        FreeEndo {
            genus,
            images: FreeEndo::identity(genus)
                .images
                .iter()
                .map(|w| dir.apply_free(w, x))
                .collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, l: Letter) -> FreeWord {
        let w = &self.images[l.slot()];
        if l.is_inverse() {
            w.inverse()
        } else {
            w.clone()
        }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            let img = &self.images[l.slot()];
            if l.is_inverse() {
                out.extend(img.letters().iter().rev().map(|x| x.inverse()));
            } else {
                out.extend(img.letters().iter().copied());
            }
        }
        out
    }

    /// `self ∘ other`.
    #[must_use]
    pub fn compose(&self, other: &FreeEndo) -> FreeEndo {
        assert_eq!(
            self.genus, other.genus,
            "composing endomorphisms of different rank"
        );
        FreeEndo {
            genus: self.genus,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Total length of all generator images.
    pub fn size(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// Exact free-group equality `f(c) = c`, not conjugacy.
    pub fn fixes_c(&self) -> bool {
        let c = surface_relator(self.genus);
        self.apply(&c) == c
    }

    /// Equality of the induced maps on the surface group.
    pub fn surface_eq(&self, ctx: &SurfaceContext, other: &FreeEndo) -> bool {
        self.genus == other.genus
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(x, y)| ctx.equal(x, y))
    }

    pub fn homology_matrix(&self) -> IntMatrix {
        let cols: Vec<_> = self
            .images
            .iter()
            .map(|w| abelianize(self.genus, w))
            .collect();
        IntMatrix::from_columns(&cols).expect("square by construction")
    }

    pub fn orientation(&self) -> Option<Orientation> {
        is_symplectic_action(&self.homology_matrix())
    }

    /// `{"a1": "<word>", "b1": "<word>", ...}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (s, w) in self.images.iter().enumerate() {
            m.insert(slot_key(s), Value::String(w.to_literal(Alphabet::Surface)));
        }
        Value::Object(m)
    }

    pub fn from_json(genus: usize, v: &Value) -> Result<FreeEndo> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Malformed("endomorphism literal must be a JSON object".into()))?;
        let mut images: Vec<Option<FreeWord>> = vec![None; 2 * genus];
        for (key, val) in obj {
            if key == "z" {
                continue;
            }
            let slot = parse_slot_key(key, genus)?;
            let text = val
                .as_str()
                .ok_or_else(|| Error::Malformed(format!("image of {key} must be a string")))?;
            images[slot] = Some(FreeWord::parse(text, genus)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(s, w)| {
                w.ok_or_else(|| Error::Malformed(format!("missing image for {}", slot_key(s))))
            })
            .collect::<Result<Vec<_>>>()?;
        FreeEndo::new(genus, images)
    }
}

/// Endomorphism of the bundle group: images of `A1, B1, ..., Ag, Bg` and `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleEndo {
    genus: usize,
    images: Vec<BundleElement>,
    z_image: BundleElement,
}

impl BundleEndo {
    pub fn identity(genus: usize) -> BundleEndo {
        BundleEndo {
            genus,
            images: (0..2 * genus)
                .map(|s| BundleElement::generator(Letter::from_slot(s, false)))
                .collect(),
            z_image: BundleElement::z_power(1),
        }
    }

    pub fn new(
        genus: usize,
        images: Vec<BundleElement>,
        z_image: BundleElement,
    ) -> Result<BundleEndo> {
        if images.len() != 2 * genus {
            return Err(Error::DimensionMismatch {
                left: 2 * genus,
                right: images.len(),
            });
        }
        for x in images.iter().chain(std::iter::once(&z_image)) {
            x.word.check_genus(genus)?;
        }
        Ok(BundleEndo {
            genus,
            images,
            z_image,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[BundleElement] {
        &self.images
    }

    pub fn z_image(&self) -> &BundleElement {
        &self.z_image
    }

    pub fn image(&self, l: Letter) -> BundleElement {
        let x = &self.images[l.slot()];
        if l.is_inverse() {
            x.inverse()
        } else {
            x.clone()
        }
    }

    pub fn apply(&self, x: &BundleElement) -> BundleElement {
        let mut word = FreeWord::identity();
        let mut zexp = 0;
        for &l in x.word.letters() {
            let img = &self.images[l.slot()];
            if l.is_inverse() {
                word.extend(img.word.letters().iter().rev().map(|y| y.inverse()));
                zexp -= img.zexp;
            } else {
                word.extend(img.word.letters().iter().copied());
                zexp += img.zexp;
            }
        }
        let zpart = self.z_image.pow(x.zexp);
        BundleElement::new(word, zexp).mul(&zpart)
    }

    /// `self ∘ other`.
    #[must_use]
    pub fn compose(&self, other: &BundleEndo) -> BundleEndo {
        assert_eq!(
            self.genus, other.genus,
            "composing endomorphisms of different rank"
        );
        BundleEndo {
            genus: self.genus,
            images: other.images.iter().map(|x| self.apply(x)).collect(),
            z_image: self.apply(&other.z_image),
        }
    }

    /// Semantic equality on every generator and on `z`.
    pub fn endo_eq(&self, ctx: &BundleContext, other: &BundleEndo) -> bool {
        self.genus == other.genus
            && self.genus == ctx.genus()
            && ctx.elem_eq(&self.z_image, &other.z_image)
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(x, y)| ctx.elem_eq(x, y))
    }

    /// `prod [e(Ai), e(Bi)] = z^k` and `e(z) = z`.
    pub fn preserves_bundle_relation(&self, ctx: &BundleContext) -> bool {
        if self.genus != ctx.genus() {
            return false;
        }
        let mut prod = BundleElement::identity();
        for i in 0..self.genus {
            let a = &self.images[2 * i];
            let b = &self.images[2 * i + 1];
            prod = prod.mul(a).mul(b).mul(&a.inverse()).mul(&b.inverse());
        }
        ctx.elem_eq(&prod, &BundleElement::z_power(ctx.euler()))
            && ctx.elem_eq(&self.z_image, &BundleElement::z_power(1))
    }

    /// Whether `self` equals `C_x` under the given convention.
    pub fn is_inner_by(&self, ctx: &BundleContext, x: &BundleElement, dir: Conjugation) -> bool {
        self.endo_eq(ctx, &BundleEndo::inner(self.genus, x, dir))
    }

    pub fn inner(genus: usize, x: &BundleElement, dir: Conjugation) -> BundleEndo {
        let id = BundleEndo::identity(genus);
        BundleEndo {
            genus,
            images: id.images.iter().map(|w| dir.apply_bundle(w, x)).collect(),
            z_image: id.z_image,
        }
    }

    /// Induced map on the surface group (drop `z`).
    pub fn project(&self) -> FreeEndo {
        FreeEndo {
            genus: self.genus,
            images: self.images.iter().map(|x| x.word.clone()).collect(),
        }
    }

    pub fn homology_matrix(&self) -> IntMatrix {
        self.project().homology_matrix()
    }

    pub fn orientation(&self) -> Option<Orientation> {
        self.project().orientation()
    }

    /// `{"a1": "<word>", ..., "z": "z"}` in the bundle alphabet.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (s, x) in self.images.iter().enumerate() {
            m.insert(slot_key(s), Value::String(x.to_literal()));
        }
        m.insert("z".into(), Value::String(self.z_image.to_literal()));
        Value::Object(m)
    }

    /// A missing `"z"` entry means `z -> z`.
    pub fn from_json(genus: usize, v: &Value) -> Result<BundleEndo> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Malformed("endomorphism literal must be a JSON object".into()))?;
        let mut images: Vec<Option<BundleElement>> = vec![None; 2 * genus];
        let mut z_image = BundleElement::z_power(1);
        for (key, val) in obj {
            let text = val
                .as_str()
                .ok_or_else(|| Error::Malformed(format!("image of {key} must be a string")))?;
            let x = BundleElement::parse(text)?;
            if key == "z" {
                z_image = x;
            } else {
                images[parse_slot_key(key, genus)?] = Some(x);
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(s, w)| {
                w.ok_or_else(|| Error::Malformed(format!("missing image for {}", slot_key(s))))
            })
            .collect::<Result<Vec<_>>>()?;
        BundleEndo::new(genus, images, z_image)
    }
}

/// Both composites are the identity, checked semantically.
pub fn certify_inverse(ctx: &BundleContext, e: &BundleEndo, e_inv: &BundleEndo) -> bool {
    let id = BundleEndo::identity(ctx.genus());
    e.compose(e_inv).endo_eq(ctx, &id) && e_inv.compose(e).endo_eq(ctx, &id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str) -> FreeWord {
        FreeWord::parse(s, 2).unwrap()
    }

    fn el(s: &str) -> BundleElement {
        BundleElement::parse(s).unwrap()
    }

    #[test]
    fn identity_apply() {
        let id = FreeEndo::identity(2);
        let w = fw("a1 ~b2 a2");
        assert_eq!(id.apply(&w), w);
        let bid = BundleEndo::identity(2);
        assert_eq!(bid.apply(&el("A1 z ~B2")), el("A1 z ~B2"));
    }

    #[test]
    fn apply_is_homomorphism() {
        let e = FreeEndo::new(2, vec![fw("a1 b1"), fw("~a2"), fw("b2 b2"), fw("a1")]).unwrap();
        let u = fw("a1 ~b2");
        let v = fw("b2 a2 b1");
        assert_eq!(e.apply(&u.concat(&v)), e.apply(&u).concat(&e.apply(&v)));
    }

    #[test]
    fn compose_order() {
        let g = 2;
        let swap = FreeEndo::new(g, vec![fw("b1"), fw("a1"), fw("a2"), fw("b2")]).unwrap();
        let sq = FreeEndo::new(g, vec![fw("a1 a1"), fw("b1"), fw("a2"), fw("b2")]).unwrap();
        // (swap ∘ sq)(a1) = swap(a1 a1) = b1 b1
        assert_eq!(swap.compose(&sq).image(Letter::a(1)), fw("b1 b1"));
        assert_eq!(sq.compose(&swap).image(Letter::a(1)), fw("b1"));
        assert_eq!(swap.compose(&FreeEndo::identity(g)), swap);
    }

    #[test]
    fn fixes_c_examples() {
        let g = 2;
        let c = surface_relator(g);
        assert!(FreeEndo::identity(g).fixes_c());
        assert!(FreeEndo::conjugation(g, &c, Conjugation::Left).fixes_c());
        assert!(!FreeEndo::conjugation(g, &fw("a1"), Conjugation::Left).fixes_c());
    }

    #[test]
    fn endo_eq_sees_z() {
        let ctx = BundleContext::new(2, 1).unwrap();
        let id = BundleEndo::identity(2);
        let mut images = id.images().to_vec();
        images[0] = el("A1 z");
        let shifted = BundleEndo::new(2, images, el("z")).unwrap();
        assert!(!shifted.endo_eq(&ctx, &id));
        assert!(shifted.preserves_bundle_relation(&ctx));
    }

    #[test]
    fn inner_by_central_is_identity() {
        let ctx = BundleContext::new(2, 3).unwrap();
        let id = BundleEndo::identity(2);
        for m in -2..=2 {
            assert!(id.is_inner_by(&ctx, &BundleElement::z_power(m), Conjugation::Left));
        }
        // The relator is z^k, hence central too.
        assert!(id.is_inner_by(&ctx, &ctx.relator_element(), Conjugation::Right));
        let c = BundleEndo::inner(2, &el("A1"), Conjugation::Left);
        assert!(c.is_inner_by(&ctx, &el("A1"), Conjugation::Left));
        assert!(!c.is_inner_by(&ctx, &el("B1"), Conjugation::Left));
    }

    #[test]
    fn json_round_trip() {
        let e = FreeEndo::new(2, vec![fw("a1 b1"), fw("~a2"), fw("b2 b2"), fw("a1")]).unwrap();
        assert_eq!(FreeEndo::from_json(2, &e.to_json()).unwrap(), e);
        let b = BundleEndo::inner(2, &el("A1 ~B2"), Conjugation::Left);
        let v = b.to_json();
        assert_eq!(v["z"], "z");
        assert_eq!(BundleEndo::from_json(2, &v).unwrap(), b);
        assert!(FreeEndo::from_json(2, &serde_json::json!({"a1": "a1"})).is_err());
    }

    #[test]
    fn homology_of_swap() {
        let swap = FreeEndo::new(
            1,
            vec![
                FreeWord::parse("b1", 1).unwrap(),
                FreeWord::parse("a1", 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(swap.orientation(), Some(Orientation::Reversing));
        assert_eq!(
            FreeEndo::identity(3).orientation(),
            Some(Orientation::Preserving)
        );
    }
}
