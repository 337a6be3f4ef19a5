use num_bigint::BigInt;

use super::{FgAbGroup, Hom, Presentation};
use crate::intlinalg::{image_basis, smith_normal_form, solve_matrix, IntMatrix, SmithForm};

/// A subgroup of `ambient` generated by given elements, in canonical form.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FgAbGroup,
    pub inclusion: Hom,
    /// Smith form of a basis (columns) of the preimage lattice of the
    /// subgroup in `Z^{n_ambient}`.
    lattice: SmithForm,
    presentation: Presentation,
}

impl Subgroup {
    /// The subgroup generated by the columns of `gens`.
    pub fn generated_by(ambient: &FgAbGroup, gens: &IntMatrix) -> Subgroup {
        assert_eq!(gens.rows(), ambient.num_generators());
        let rel = ambient.relation_matrix();
        let lattice = image_basis(&gens.hstack(&rel));
        let y = solve_matrix(&lattice, &rel).expect("relations lie in the lattice");
        let presentation = Presentation::new(lattice.cols(), &y);
        let inclusion = Hom::new(
            presentation.group.clone(),
            ambient.clone(),
            lattice.mul(&presentation.from_canonical),
        )
        .expect("inclusion is well-defined");
        Subgroup {
            group: presentation.group.clone(),
            inclusion,
            lattice: smith_normal_form(&lattice),
            presentation,
        }
    }

    pub fn ambient(&self) -> &FgAbGroup {
        self.inclusion.codomain()
    }

    pub fn contains(&self, y: &[BigInt]) -> bool {
        self.lattice.solve(y).is_some()
    }

    /// Coordinates in the subgroup of an ambient element that lies in it.
    pub fn coordinates(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let x = self.lattice.solve(y)?;
        Some(self.presentation.canonical(&x))
    }

    /// Corestriction of `f` to this subgroup, when its image lies inside.
    pub fn corestrict(&self, f: &Hom) -> Option<Hom> {
        let cols: Option<Vec<Vec<BigInt>>> = (0..f.domain().num_generators())
            .map(|j| self.coordinates(&f.image_of_generator(j)))
            .collect();
        Hom::from_images(f.domain().clone(), self.group.clone(), &cols?).ok()
    }
}

/// A quotient `ambient / ⟨gens⟩` in canonical form.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FgAbGroup,
    pub projection: Hom,
    presentation: Presentation,
}

impl Quotient {
    /// The quotient of `ambient` by the subgroup generated by the columns of
    /// `gens`.
    pub fn by(ambient: &FgAbGroup, gens: &IntMatrix) -> Quotient {
        assert_eq!(gens.rows(), ambient.num_generators());
        let presentation = Presentation::new(
            ambient.num_generators(),
            &gens.hstack(&ambient.relation_matrix()),
        );
        let projection = Hom::new(
            ambient.clone(),
            presentation.group.clone(),
            presentation.to_canonical.clone(),
        )
        .expect("projection is well-defined");
        Quotient {
            group: presentation.group.clone(),
            projection,
            presentation,
        }
    }

    pub fn ambient(&self) -> &FgAbGroup {
        self.projection.domain()
    }

    /// A representative in the ambient group of a quotient element.
    pub fn lift(&self, q: &[BigInt]) -> Vec<BigInt> {
        self.ambient().reduced(&self.presentation.original(q))
    }

    /// The map `Q → B` induced by `f: ambient → B`, provided `f` kills the
    /// subgroup divided out.
    pub fn descend(&self, f: &Hom) -> Option<Hom> {
        let lifted = self.presentation.from_canonical.clone();
        let m = f.matrix().mul(&lifted);
        let g = Hom::new(self.group.clone(), f.codomain().clone(), m).ok()?;
        // Check that f really factors: f = g∘π.
        (g.compose(&self.projection).ok()? == *f).then_some(g)
    }
}

/// `A₁ ⊕ … ⊕ A_k` in canonical form with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgAbGroup,
    pub injections: Vec<Hom>,
    pub projections: Vec<Hom>,
}

pub fn direct_sum(parts: &[FgAbGroup]) -> DirectSum {
    let n: usize = parts.iter().map(FgAbGroup::num_generators).sum();
    let rel = parts
        .iter()
        .fold(IntMatrix::zeros(0, 0), |acc, g| acc.block_diag(&g.relation_matrix()));
    let p = Presentation::new(n, &rel);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for g in parts {
        let range = offset..offset + g.num_generators();
        injections.push(
            Hom::new(
                g.clone(),
                p.group.clone(),
                p.to_canonical.select_columns(range.clone()),
            )
            .expect("injection is well-defined"),
        );
        projections.push(
            Hom::new(
                p.group.clone(),
                g.clone(),
                p.from_canonical.select_rows(range.clone()),
            )
            .expect("projection is well-defined"),
        );
        offset = range.end;
    }
    DirectSum {
        group: p.group,
        injections,
        projections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn sum_of_coprime_cyclics() {
        let s = direct_sum(&[FgAbGroup::of(0, &[2]), FgAbGroup::of(0, &[3])]);
        assert_eq!(s.group, FgAbGroup::of(0, &[6]));
        for (i, p) in s.projections.iter().enumerate() {
            for (j, inj) in s.injections.iter().enumerate() {
                let c = p.compose(inj).unwrap();
                if i == j {
                    assert_eq!(c, Hom::identity(inj.domain()));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn sum_with_trivial() {
        let a = FgAbGroup::of(1, &[2, 4]);
        let s = direct_sum(&[a.clone(), FgAbGroup::trivial()]);
        assert_eq!(s.group, a);
        assert_eq!(s.injections[0], Hom::identity(&a));
        let s = direct_sum(&[FgAbGroup::free(1), FgAbGroup::of(0, &[2])]);
        assert_eq!(s.group, FgAbGroup::of(1, &[2]));
    }

    #[test]
    fn subgroup_and_quotient() {
        let z4 = FgAbGroup::of(0, &[4]);
        let gens = IntMatrix::from_rows(&[[2]]);
        let s = Subgroup::generated_by(&z4, &gens);
        assert_eq!(s.group, FgAbGroup::of(0, &[2]));
        assert!(s.contains(&[BigInt::from(6)]));
        assert!(!s.contains(&[BigInt::one()]));
        let q = Quotient::by(&z4, &gens);
        assert_eq!(q.group, FgAbGroup::of(0, &[2]));
        assert!(q.projection.compose(&s.inclusion).unwrap().is_zero());
        assert_eq!(q.projection.apply(&q.lift(&[BigInt::one()])), vec![BigInt::one()]);
        assert_eq!(
            s.coordinates(&[BigInt::from(2)]).map(|c| s.inclusion.apply(&c)),
            Some(vec![BigInt::from(2)])
        );
        assert_eq!(s.coordinates(&[BigInt::zero()]), Some(vec![BigInt::zero()]));
    }

    #[test]
    fn descend_through_quotient() {
        let z = FgAbGroup::free(1);
        let q = Quotient::by(&z, &IntMatrix::from_rows(&[[4]]));
        let z2 = FgAbGroup::of(0, &[2]);
        let f = Hom::of(&z, &z2, &[[1]]);
        let g = q.descend(&f).unwrap();
        assert_eq!(g.domain(), &FgAbGroup::of(0, &[4]));
        assert!(q.descend(&Hom::identity(&z)).is_none());
    }
}
