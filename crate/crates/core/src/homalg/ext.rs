use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{canonical_resolution, FreeResolution};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom, Presentation};
use crate::intlinalg::{solve_matrix, IntMatrix};

/// `Ext¹(A, C) = Hom(R₁, C) / κ*Hom(R₀, C)` on a fixed resolution of `A`.
///
/// A cocycle `φ: R₁ → C` is flattened column by column: entry `(i, k)` sits
/// at position `k·n_C + i`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    resolution: FreeResolution,
    target: FgAbGroup,
    presentation: Presentation,
}

impl PartialEq for ExtGroup {
    fn eq(&self, other: &Self) -> bool {
        self.resolution == other.resolution && self.target == other.target
    }
}

impl Eq for ExtGroup {}

impl ExtGroup {
    pub fn new(resolution: &FreeResolution, target: &FgAbGroup) -> Self {
        let (nc, r0, r1) = (target.num_generators(), resolution.r0(), resolution.r1());
        let kappa = resolution.kappa().matrix();
        let mut relations: Vec<Vec<BigInt>> = Vec::new();
        for k in 0..r1 {
            for (i, e) in target.torsion().iter().enumerate() {
                let mut v = vec![BigInt::zero(); nc * r1];
                v[k * nc + i] = e.clone();
                relations.push(v);
            }
        }
        // Coboundaries: E_il ∘ κ has row i equal to row l of κ.
        for i in 0..nc {
            for l in 0..r0 {
                let mut v = vec![BigInt::zero(); nc * r1];
                for k in 0..r1 {
                    v[k * nc + i] = kappa[(l, k)].clone();
                }
                relations.push(v);
            }
        }
        let presentation = Presentation::new(nc * r1, &IntMatrix::from_columns(nc * r1, &relations));
        debug_assert!(presentation.group.is_finite());
        ExtGroup {
            resolution: resolution.clone(),
            target: target.clone(),
            presentation,
        }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.presentation.group
    }

    pub fn resolution(&self) -> &FreeResolution {
        &self.resolution
    }

    pub fn base(&self) -> &FgAbGroup {
        self.resolution.base()
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    fn flatten(&self, cocycle: &Hom) -> Vec<BigInt> {
        let m = cocycle.matrix();
        let nc = self.target.num_generators();
        let mut v = vec![BigInt::zero(); nc * m.cols()];
        for k in 0..m.cols() {
            for i in 0..nc {
                v[k * nc + i] = m[(i, k)].clone();
            }
        }
        v
    }

    /// Canonical coordinates in `Ext¹` of the class of a cocycle.
    pub fn normal_form(&self, cocycle: &Hom) -> Vec<BigInt> {
        self.presentation.canonical(&self.flatten(cocycle))
    }

    /// A cocycle representing the element with the given coordinates.
    pub fn cocycle_of(&self, coords: &[BigInt]) -> Hom {
        let v = self.presentation.original(coords);
        let nc = self.target.num_generators();
        let r1 = self.resolution.r1();
        let mut m = IntMatrix::zeros(nc, r1);
        for k in 0..r1 {
            for i in 0..nc {
                m[(i, k)] = v[k * nc + i].clone();
            }
        }
        Hom::new(self.resolution.kappa().domain().clone(), self.target.clone(), m)
            .expect("cocycle lands in the target")
    }

    /// The class with the given coordinates.
    pub fn class(self: &Arc<Self>, coords: &[BigInt]) -> ExtClass {
        let cocycle = self.cocycle_of(coords);
        ExtClass {
            group: Arc::clone(self),
            normal_form: self.group().reduced(coords),
            cocycle,
        }
    }

    pub fn zero(self: &Arc<Self>) -> ExtClass {
        self.class(&self.group().zero())
    }

    /// Every class, in the element order of the group.
    pub fn classes(self: &Arc<Self>) -> impl Iterator<Item = ExtClass> + '_ {
        self.group().elements().map(move |c| self.class(&c))
    }

    pub fn generators(self: &Arc<Self>) -> Vec<ExtClass> {
        (0..self.group().num_generators())
            .map(|i| self.class(&self.group().generator(i)))
            .collect()
    }
}

/// An element of `Ext¹(A, C)` pinned to a resolution of `A`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    group: Arc<ExtGroup>,
    cocycle: Hom,
    normal_form: Vec<BigInt>,
}

impl PartialEq for ExtClass {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.normal_form == other.normal_form
    }
}

impl Eq for ExtClass {}

impl ExtClass {
    pub fn ext_group(&self) -> &Arc<ExtGroup> {
        &self.group
    }

    pub fn resolution(&self) -> &FreeResolution {
        self.group.resolution()
    }

    pub fn base(&self) -> &FgAbGroup {
        self.group.base()
    }

    pub fn target(&self) -> &FgAbGroup {
        self.group.target()
    }

    pub fn cocycle(&self) -> &Hom {
        &self.cocycle
    }

    pub fn normal_form(&self) -> &[BigInt] {
        &self.normal_form
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &ExtClass) -> Result<()> {
        if *self.group != *other.group {
            return Err(Error::ResolutionMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ExtClass) -> Result<ExtClass> {
        self.check_same(other)?;
        Ok(class_in(&self.group, self.cocycle.add(&other.cocycle)?))
    }

    pub fn sub(&self, other: &ExtClass) -> Result<ExtClass> {
        self.check_same(other)?;
        Ok(class_in(&self.group, self.cocycle.sub(&other.cocycle)?))
    }

    pub fn neg(&self) -> ExtClass {
        class_in(&self.group, self.cocycle.neg())
    }
}

fn class_in(group: &Arc<ExtGroup>, cocycle: Hom) -> ExtClass {
    ExtClass {
        normal_form: group.normal_form(&cocycle),
        group: Arc::clone(group),
        cocycle,
    }
}

/// `Ext¹(A, B)` on the canonical resolution of `A`.
pub fn ext1(a: &FgAbGroup, b: &FgAbGroup) -> Arc<ExtGroup> {
    Arc::new(ExtGroup::new(&canonical_resolution(a), b))
}

/// The class of `φ: R₁ → C`.
pub fn class_of_cocycle(res: &FreeResolution, target: &FgAbGroup, phi: &Hom) -> Result<ExtClass> {
    if phi.domain() != res.kappa().domain() || phi.codomain() != target {
        return Err(Error::Shape(format!(
            "cocycle {} → {} does not match R₁ = {} and target {target}",
            phi.domain(),
            phi.codomain(),
            res.kappa().domain()
        )));
    }
    let group = Arc::new(ExtGroup::new(res, target));
    Ok(class_in(&group, phi.clone()))
}

pub fn classes_equal(c1: &ExtClass, c2: &ExtClass) -> Result<bool> {
    c1.check_same(c2)?;
    Ok(c1.normal_form == c2.normal_form)
}

/// `f*c` for `f: A' → A`, on the canonical resolution of `A'`.
pub fn pullback(f: &Hom, c: &ExtClass) -> Result<ExtClass> {
    pullback_to(f, c, &canonical_resolution(f.domain()))
}

/// `f*c` on a chosen resolution of `A'`.
pub fn pullback_to(f: &Hom, c: &ExtClass, target_res: &FreeResolution) -> Result<ExtClass> {
    let h = IntMatrix::zeros(c.resolution().r1(), target_res.r0());
    pullback_with_lift(f, c, target_res, &h)
}

/// `f*c` computed with the chain lift `F₀ + κH`, `F₁ + Hκ'`, where `F` is the
/// default lift. The resulting class does not depend on `H`.
pub fn pullback_with_lift(
    f: &Hom,
    c: &ExtClass,
    target_res: &FreeResolution,
    h: &IntMatrix,
) -> Result<ExtClass> {
    let res = c.resolution();
    if f.codomain() != res.base() || f.domain() != target_res.base() {
        return Err(Error::Shape(format!(
            "cannot pull a class over {} back along a map {} → {}",
            res.base(),
            f.domain(),
            f.codomain()
        )));
    }
    if h.rows() != res.r1() || h.cols() != target_res.r0() {
        return Err(Error::Shape("lift perturbation has the wrong shape".into()));
    }
    // F₀: R₀' → R₀ with p∘F₀ = f∘p'.
    let mut cols = Vec::with_capacity(target_res.r0());
    for l in 0..target_res.r0() {
        let y = f.apply(&target_res.proj().image_of_generator(l));
        let x = res
            .proj()
            .preimage(&y)
            .ok_or_else(|| Error::Integrity("resolution projection is not surjective".into()))?;
        cols.push(x);
    }
    let kappa = res.kappa().matrix();
    let f0 = IntMatrix::from_columns(res.r0(), &cols).add(&kappa.mul(h));
    // F₁: R₁' → R₁ with κ∘F₁ = F₀∘κ'.
    let f1 = solve_matrix(kappa, &f0.mul(target_res.kappa().matrix()))
        .ok_or_else(|| Error::Integrity("chain lift does not restrict to R₁".into()))?;
    let f1 = Hom::new(
        target_res.kappa().domain().clone(),
        res.kappa().domain().clone(),
        f1,
    )?;
    let group = Arc::new(ExtGroup::new(target_res, c.target()));
    Ok(class_in(&group, c.cocycle.compose(&f1)?))
}

/// `g_*c` for `g: C → C'`.
pub fn pushforward(g: &Hom, c: &ExtClass) -> Result<ExtClass> {
    let phi = g.compose(&c.cocycle)?;
    let group = Arc::new(ExtGroup::new(c.resolution(), g.codomain()));
    Ok(class_in(&group, phi))
}
