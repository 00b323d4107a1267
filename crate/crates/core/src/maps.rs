//! The maps relating automorphisms of the surface group and of the bundle
//! group: the lift `iota`, the section `sigma`, the projection `phi`, the
//! kernel coordinates `tau`, transvections and inner automorphisms.

use crate::bundle::{BundleContext, BundleElement};
use crate::endo::{BundleEndo, Conjugation, FreeEndo};
use crate::error::{Error, Result};
use crate::homology::{abelianize, intersection, CohomologyClass, HomologyClass};
use crate::word::{FreeWord, Letter};

/// Relabel `ai -> Ai`, `bi -> Bi`.
pub fn iota(w: &FreeWord) -> BundleElement {
    BundleElement::new(w.clone(), 0)
}

/// `Ai -> iota(f(ai))`, `Bi -> iota(f(bi))`, `z -> z`. Requires `f(c) = c` exactly.
pub fn sigma(ctx: &BundleContext, f: &FreeEndo) -> Result<BundleEndo> {
    check_genus(ctx, f.genus())?;
    if !f.fixes_c() {
        return Err(Error::Precondition(
            "sigma needs an automorphism with f(c) = c as reduced words; compose with a power of C_c first".into(),
        ));
    }
    BundleEndo::new(
        f.genus(),
        f.images().iter().map(iota).collect(),
        BundleElement::z_power(1),
    )
}

/// The induced automorphism of the surface group.
pub fn phi(e: &BundleEndo) -> FreeEndo {
    e.project()
}

/// Coordinates `(m1, n1, ..., mg, ng)` of a kernel element `Ai -> Ai z^mi`, `Bi -> Bi z^ni`.
pub fn tau(ctx: &BundleContext, e: &BundleEndo) -> Result<CohomologyClass> {
    check_genus(ctx, e.genus())?;
    if !ctx.elem_eq(e.z_image(), &BundleElement::z_power(1)) {
        return Err(Error::Precondition("tau needs e(z) = z".into()));
    }
    let mut coords = Vec::with_capacity(2 * ctx.genus());
    for (slot, img) in e.images().iter().enumerate() {
        let gen = BundleElement::generator(Letter::from_slot(slot, false));
        let diff = img.mul(&gen.inverse());
        match ctx.z_exponent(&diff) {
            Ok(m) => coords.push(m),
            Err(Error::NotInCenter { residual }) => {
                return Err(Error::Precondition(format!(
                    "tau needs phi(e) = id; generator {} moved by {residual}",
                    gen.to_literal()
                )))
            }
            Err(other) => return Err(other),
        }
    }
    Ok(CohomologyClass(coords))
}

/// `w -> w z^<[w], gamma>` on generators.
pub fn transvection(genus: usize, gamma: &HomologyClass) -> Result<BundleEndo> {
    if gamma.genus() != genus || gamma.coords().len() != 2 * genus {
        return Err(Error::DimensionMismatch {
            left: 2 * genus,
            right: gamma.coords().len(),
        });
    }
    let images = (0..2 * genus)
        .map(|slot| {
            let gen = Letter::from_slot(slot, false);
            let m = intersection(&HomologyClass::basis(genus, slot), gamma)?;
            Ok(BundleElement::new(FreeWord::letter(gen), m))
        })
        .collect::<Result<Vec<_>>>()?;
    BundleEndo::new(genus, images, BundleElement::z_power(1))
}

/// `C_x` in the given direction.
pub fn inner(genus: usize, x: &BundleElement, dir: Conjugation) -> BundleEndo {
    BundleEndo::inner(genus, x, dir)
}

/// Inverse of `C_x`: conjugation by `x^-1` in the same direction.
pub fn inner_inverse(genus: usize, x: &BundleElement, dir: Conjugation) -> BundleEndo {
    BundleEndo::inner(genus, &x.inverse(), dir)
}

/// The transvection class `k * [t]`.
pub fn scaled_class(genus: usize, k: i64, t: &FreeWord) -> HomologyClass {
    abelianize(genus, t).scale(k)
}

fn check_genus(ctx: &BundleContext, genus: usize) -> Result<()> {
    if ctx.genus() != genus {
        return Err(Error::ContextMismatch {
            expected: ctx.genus(),
            found: genus,
        });
    }
    Ok(())
}
