use num_bigint::BigInt;

use super::{canonical_resolution, class_of_cocycle, pullback, ExtClass};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom, Presentation};
use crate::intlinalg::IntMatrix;

/// A short exact sequence `B --i--> G --q--> A`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub i: Hom,
    pub q: Hom,
}

impl Extension {
    pub fn middle(&self) -> &FgAbGroup {
        self.i.codomain()
    }

    pub fn check_exact(&self) -> Result<()> {
        let (i, q) = (&self.i, &self.q);
        let qi = q.compose(i).map_err(|e| Error::NotExact(e.to_string()))?;
        if !qi.is_zero() {
            return Err(Error::NotExact("q∘i ≠ 0".into()));
        }
        if !i.is_injective() {
            return Err(Error::NotExact("i is not injective".into()));
        }
        if !q.is_surjective() {
            return Err(Error::NotExact("q is not surjective".into()));
        }
        let ker = q.kernel();
        let im = i.image();
        let inside = (0..ker.group.num_generators())
            .all(|k| im.contains(&ker.inclusion.image_of_generator(k)));
        if !inside {
            return Err(Error::NotExact("ker q is larger than Im i".into()));
        }
        Ok(())
    }
}

/// The Baer class of `B ↣ G ↠ A` on the canonical resolution of `A`.
///
/// The section sends each canonical generator of `A` to the preimage chosen
/// by [`Hom::preimage`]. The cocycle is the negated section defect,
/// `r ↦ −i⁻¹(s(κr))`, which makes this the inverse of
/// [`extension_from_class`].
pub fn class_of_extension(i: &Hom, q: &Hom) -> Result<ExtClass> {
    let e = Extension {
        i: i.clone(),
        q: q.clone(),
    };
    e.check_exact()?;
    let (a, b, g) = (q.codomain(), i.domain(), e.middle());
    let res = canonical_resolution(a);
    let sections: Vec<Vec<BigInt>> = (0..a.num_generators())
        .map(|l| q.preimage(&a.generator(l)).expect("q is surjective"))
        .collect();
    let s = IntMatrix::from_columns(g.num_generators(), &sections);
    let defect = s.mul(res.kappa().matrix());
    let mut cols = Vec::with_capacity(res.r1());
    for k in 0..res.r1() {
        let v = g.reduced(&defect.column(k));
        let x = i
            .preimage(&v)
            .ok_or_else(|| Error::Integrity("section defect leaves Im i".into()))?;
        cols.push(b.neg(&x));
    }
    let phi = Hom::from_images(res.kappa().domain().clone(), b.clone(), &cols)?;
    class_of_cocycle(&res, b, &phi)
}

/// An extension `C ↣ G ↠ A` representing the class, built as the pushout
/// `G = (C ⊕ R₀) / ⟨(φ(r), κ(r))⟩`.
pub fn extension_from_class(c: &ExtClass) -> Extension {
    let res = c.resolution();
    let target = c.target();
    let (nb, r0) = (target.num_generators(), res.r0());
    let top = target
        .relation_matrix()
        .hstack(c.cocycle().matrix());
    let bottom = IntMatrix::zeros(r0, target.torsion().len()).hstack(res.kappa().matrix());
    let p = Presentation::new(nb + r0, &top.vstack(&bottom));
    let i = Hom::new(
        target.clone(),
        p.group.clone(),
        p.to_canonical.select_columns(0..nb),
    )
    .expect("C embeds in the pushout");
    let q = Hom::new(
        p.group.clone(),
        res.base().clone(),
        res.proj()
            .matrix()
            .mul(&p.from_canonical.select_rows(nb..nb + r0)),
    )
    .expect("the pushout maps onto A");
    Extension { i, q }
}

/// `θ`: restriction of a class along an injection `K ↣ H`.
pub fn theta_restrict(c: &ExtClass, incl: &Hom) -> Result<ExtClass> {
    if !incl.is_injective() {
        return Err(Error::NotExact("restriction map is not injective".into()));
    }
    pullback(incl, c)
}
