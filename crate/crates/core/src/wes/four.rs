use std::sync::Arc;

use super::{Ladder, WesDegree, WhiteheadSequence};
use crate::error::{Error, Result};
use crate::fgab::{enumerate_isos, iso_search_is_exhaustive, FgAbGroup, Hom};
use crate::gamma::{gamma_group, gamma_hom_with, GammaBasis};
use crate::homalg::{canonical_resolution, class_of_cocycle, pullback, pushforward, ExtClass, ExtGroup};

/// The data of a simply connected 4-dimensional system: `H₂, H₃, H₄`,
/// `b₄: H₄ → Γ(H₂)` and `[π₃] ∈ Ext(H₃, Coker b₄)`.
#[derive(Clone, Debug)]
pub struct FourDimSystem {
    h2: FgAbGroup,
    h3: FgAbGroup,
    h4: FgAbGroup,
    b4: Hom,
    pi3: ExtClass,
}

impl FourDimSystem {
    /// `pi3` is a cocycle on the canonical resolution of `H₃` with values in
    /// `Coker b₄`; `None` means the zero class.
    pub fn new(h2: FgAbGroup, h3: FgAbGroup, h4: FgAbGroup, b4: Hom, pi3: Option<Hom>) -> Result<Self> {
        let gamma = gamma_group(&h2).0;
        if b4.domain() != &h4 || b4.codomain() != &gamma {
            return Err(Error::Shape(format!(
                "b4 must map H4 = {h4} → Γ(H2) = {gamma}, got {} → {}",
                b4.domain(),
                b4.codomain()
            )));
        }
        let coker = b4.cokernel().group;
        let res = canonical_resolution(&h3);
        let pi3 = match pi3 {
            None => Arc::new(ExtGroup::new(&res, &coker)).zero(),
            Some(phi) => class_of_cocycle(&res, &coker, &phi)?,
        };
        Ok(FourDimSystem {
            h2,
            h3,
            h4,
            b4,
            pi3,
        })
    }

    /// `(H₂, 0, H₄, b₄)` with scalar `b₄` between `Z`s: the model of a
    /// complex `S² ∪ e⁴` with attaching map `b` times the Hopf map.
    pub fn hopf(b: i64) -> Self {
        let z = FgAbGroup::free(1);
        FourDimSystem::new(z.clone(), FgAbGroup::trivial(), z.clone(), Hom::of(&z, &z, &[[b]]), None)
            .expect("Γ(Z) = Z")
    }

    pub fn h2(&self) -> &FgAbGroup {
        &self.h2
    }

    pub fn h3(&self) -> &FgAbGroup {
        &self.h3
    }

    pub fn h4(&self) -> &FgAbGroup {
        &self.h4
    }

    pub fn b4(&self) -> &Hom {
        &self.b4
    }

    pub fn pi3_class(&self) -> &ExtClass {
        &self.pi3
    }

    /// The sequence in degrees 2 and 3: `Γ₂ = 0`, `Γ₃ = Γ(H₂)`, `ker b₃ = H₃`.
    pub fn to_wes(&self) -> WhiteheadSequence {
        let trivial = FgAbGroup::trivial();
        let b3 = Hom::zero(&self.h3, &trivial);
        let res2 = canonical_resolution(&self.h2);
        let zero2 = Arc::new(ExtGroup::new(&res2, &trivial)).zero();
        let deg2 = WesDegree {
            n: 2,
            resolution: res2.clone(),
            gamma: trivial.clone(),
            b_next: b3.clone(),
            coker_b: b3.cokernel(),
            ker_b: Hom::zero(&self.h2, &trivial).kernel(),
            pi_class: pullback(&Hom::zero(&self.h2, &trivial).kernel().inclusion, &zero2)
                .expect("restriction of the zero class"),
            char_class: zero2,
        };
        let ker_b3 = b3.kernel();
        let deg3 = WesDegree {
            n: 3,
            resolution: canonical_resolution(&self.h3),
            gamma: self.b4.codomain().clone(),
            b_next: self.b4.clone(),
            coker_b: self.b4.cokernel(),
            pi_class: pullback(&ker_b3.inclusion, &self.pi3).expect("restriction along ker b3"),
            ker_b: ker_b3,
            char_class: self.pi3.clone(),
        };
        WhiteheadSequence {
            degrees: vec![deg2, deg3],
            top_homology: self.h4.clone(),
        }
    }
}

/// Isomorphisms `f₂, f₃, f₄` with `Γ(f₂)∘b₄ = b₄'∘f₄` and
/// `Γ̃(f₂)_*[π₃(X)] = f₃^*[π₃(Y)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub f2: Hom,
    pub f3: Hom,
    pub f4: Hom,
}

impl Witness {
    /// The ladder `(f₂, f₃, f₄; 0, Γ(f₂))`.
    pub fn ladder(&self) -> Ladder {
        let t = FgAbGroup::trivial();
        Ladder {
            f: vec![self.f2.clone(), self.f3.clone(), self.f4.clone()],
            gamma: vec![Hom::zero(&t, &t), crate::gamma::gamma_hom(&self.f2)],
        }
    }

    /// The witness for the reversed pair `(Y, X)`.
    pub fn inverse(&self) -> Option<Witness> {
        Some(Witness {
            f2: self.f2.inverse()?,
            f3: self.f3.inverse()?,
            f4: self.f4.inverse()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Equivalent(Witness),
    NotEquivalent { reason: String },
    NoWitnessWithinBound { reason: String },
}

/// Searches for an algebraic equivalence between two 4-dimensional systems.
///
/// Isomorphisms are enumerated with `f₂` outermost, then `f₄`, then `f₃`,
/// each stream in the order of [`enumerate_isos`]; the first witness found
/// is returned. A negative answer is `NotEquivalent` only when every
/// automorphism search involved is exhaustive.
pub fn classify4(x: &FourDimSystem, y: &FourDimSystem, free_bound: u32) -> Result<Classification> {
    for (name, a, b) in [
        ("H2", &x.h2, &y.h2),
        ("H3", &x.h3, &y.h3),
        ("H4", &x.h4, &y.h4),
    ] {
        if a != b {
            return Ok(Classification::NotEquivalent {
                reason: format!("{name} differs: {a} vs {b}"),
            });
        }
    }
    let exhaustive = [&x.h2, &x.h3, &x.h4]
        .iter()
        .all(|g| iso_search_is_exhaustive(g, free_bound));
    let gx = GammaBasis::new(&x.h2);
    let gy = GammaBasis::new(&y.h2);
    let f3s: Vec<Hom> = enumerate_isos(&x.h3, &y.h3, free_bound).collect();
    let f4s: Vec<Hom> = enumerate_isos(&x.h4, &y.h4, free_bound).collect();
    let mut commuting_pair = false;
    for f2 in enumerate_isos(&x.h2, &y.h2, free_bound) {
        let g = gamma_hom_with(&gx, &gy, &f2);
        let gb = g.compose(&x.b4)?;
        for f4 in &f4s {
            if gb != y.b4.compose(f4)? {
                continue;
            }
            commuting_pair = true;
            let y_proj = y.b4.cokernel().projection;
            let gt = x
                .b4
                .cokernel()
                .descend(&y_proj.compose(&g)?)
                .ok_or_else(|| Error::Integrity("Γ(f2) does not descend to cokernels".into()))?;
            let pushed = pushforward(&gt, &x.pi3)?;
            for f3 in &f3s {
                if pullback(f3, &y.pi3)? == pushed {
                    return Ok(Classification::Equivalent(Witness {
                        f2,
                        f3: f3.clone(),
                        f4: f4.clone(),
                    }));
                }
            }
        }
    }
    let reason = if commuting_pair {
        "no f3 carries the π3 extension class of X to that of Y".to_string()
    } else {
        "no (f2,f4) satisfies Γ(f2)∘b4 = b4'∘f4".to_string()
    };
    Ok(if exhaustive {
        Classification::NotEquivalent { reason }
    } else {
        Classification::NoWitnessWithinBound { reason }
    })
}
