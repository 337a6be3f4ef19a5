use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{FgAbGroup, Quotient, Subgroup};
use crate::error::{Error, Result};
use crate::intlinalg::{kernel_basis, solve, IntMatrix};

/// A homomorphism between groups in canonical form.
///
/// The matrix has one column per domain generator and one row per codomain
/// generator. Entries in torsion rows are kept reduced into `[0, order)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    domain: FgAbGroup,
    codomain: FgAbGroup,
    matrix: IntMatrix,
}

impl Hom {
    /// Checks shape and well-definedness, then reduces torsion rows.
    pub fn new(domain: FgAbGroup, codomain: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.num_generators() || matrix.cols() != domain.num_generators()
        {
            return Err(Error::Shape(format!(
                "a map {domain} → {codomain} needs a {}×{} matrix, got {}×{}",
                codomain.num_generators(),
                domain.num_generators(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut matrix = matrix;
        for i in 0..matrix.rows() {
            let e = codomain.generator_order(i);
            for j in 0..matrix.cols() {
                let d = domain.generator_order(j);
                let x = &matrix[(i, j)];
                let ok = if e.is_zero() {
                    d.is_zero() || x.is_zero()
                } else {
                    (&d * x).is_multiple_of(&e)
                };
                if !ok {
                    return Err(Error::NotWellDefined(format!(
                        "generator {j} of order {d} cannot map with coefficient {x} onto generator {i} of order {e}"
                    )));
                }
                if !e.is_zero() {
                    matrix[(i, j)] = x.mod_floor(&e);
                }
            }
        }
        Ok(Hom {
            domain,
            codomain,
            matrix,
        })
    }

    /// Builds a hom from small-integer rows; panics on invalid input.
    pub fn of<R: AsRef<[i64]>>(domain: &FgAbGroup, codomain: &FgAbGroup, rows: &[R]) -> Self {
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, domain.num_generators())
        } else {
            IntMatrix::from_rows(rows)
        };
        Hom::new(domain.clone(), codomain.clone(), m).expect("well-defined homomorphism")
    }

    /// The hom sending generator `j` of `domain` to `images[j]`.
    pub fn from_images(
        domain: FgAbGroup,
        codomain: FgAbGroup,
        images: &[Vec<BigInt>],
    ) -> Result<Self> {
        let m = IntMatrix::from_columns(codomain.num_generators(), images);
        Hom::new(domain, codomain, m)
    }

    pub fn zero(domain: &FgAbGroup, codomain: &FgAbGroup) -> Self {
        Hom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::zeros(codomain.num_generators(), domain.num_generators()),
        }
    }

    pub fn identity(group: &FgAbGroup) -> Self {
        Hom {
            domain: group.clone(),
            codomain: group.clone(),
            matrix: IntMatrix::identity(group.num_generators()),
        }
    }

    /// Multiplication by `n` on a group.
    pub fn scalar(group: &FgAbGroup, n: i64) -> Self {
        let m = IntMatrix::identity(group.num_generators()).scale(&BigInt::from(n));
        Hom::new(group.clone(), group.clone(), m).expect("scalar maps are well-defined")
    }

    pub fn domain(&self) -> &FgAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.codomain.reduced(&self.matrix.mul_vec(x))
    }

    pub fn image_of_generator(&self, j: usize) -> Vec<BigInt> {
        self.matrix.column(j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if inner.codomain != self.domain {
            return Err(Error::IncompatibleComposition {
                codomain: inner.codomain.to_string(),
                domain: self.domain.to_string(),
            });
        }
        Hom::new(
            inner.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }

    pub fn add(&self, other: &Hom) -> Result<Hom> {
        self.same_shape(other)?;
        Hom::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn sub(&self, other: &Hom) -> Result<Hom> {
        self.same_shape(other)?;
        Hom::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix),
        )
    }

    pub fn neg(&self) -> Hom {
        Hom::new(self.domain.clone(), self.codomain.clone(), self.matrix.neg())
            .expect("negation preserves well-definedness")
    }

    fn same_shape(&self, other: &Hom) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Shape(format!(
                "cannot combine {} → {} with {} → {}",
                self.domain, self.codomain, other.domain, other.codomain
            )));
        }
        Ok(())
    }

    /// Whether two homs agree as maps (same domain and codomain required).
    pub fn equals(&self, other: &Hom) -> bool {
        self == other
    }

    /// Generators of the preimage lattice `{x ∈ Z^n : f(x) = 0}` as columns.
    fn kernel_lattice(&self) -> IntMatrix {
        let n = self.domain.num_generators();
        let stacked = self.matrix.hstack(&self.codomain.relation_matrix());
        kernel_basis(&stacked).select_rows(0..n)
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::generated_by(&self.domain, &self.kernel_lattice())
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::generated_by(&self.codomain, &self.matrix)
    }

    pub fn cokernel(&self) -> Quotient {
        Quotient::by(&self.codomain, &self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().group.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.num_generators() == self.codomain.num_generators()
            && self.domain.rank() == self.codomain.rank()
            && self.is_injective()
            && self.is_surjective()
    }

    /// Some `x` with `f(x) = y`, reduced in the domain, or `None` when `y` is
    /// not in the image. Deterministic in `(f, y)`.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.domain.num_generators();
        let stacked = self.matrix.hstack(&self.codomain.relation_matrix());
        let x = solve(&stacked, y)?;
        Some(self.domain.reduced(&x[..n]))
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<Hom> {
        if !self.is_isomorphism() {
            return None;
        }
        let cols: Option<Vec<Vec<BigInt>>> = (0..self.codomain.num_generators())
            .map(|i| self.preimage(&self.codomain.generator(i)))
            .collect();
        Hom::from_images(self.codomain.clone(), self.domain.clone(), &cols?).ok()
    }
}

/// `g ∘ f`
pub fn compose(g: &Hom, f: &Hom) -> Result<Hom> {
    g.compose(f)
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom({} → {}, {:?})",
            self.domain,
            self.codomain,
            self.matrix.to_rows()
        )
    }
}
