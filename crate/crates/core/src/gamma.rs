//! Whitehead's universal quadratic functor Γ.
//!
//! For `A = ⊕ Z/oᵢ` (with `oᵢ = 0` for a free summand), `Γ(A)` is generated
//! by `γᵢ = γ(eᵢ)` of order `oᵢ` (odd `oᵢ`), `2oᵢ` (even `oᵢ`) or `0`, and by
//! the brackets `βᵢⱼ = [eᵢ, eⱼ]` for `i < j` of order `gcd(oᵢ, oⱼ)`. The
//! labeled generators are kept next to the canonical form so that maps can be
//! evaluated symbolically first and renormalized afterwards.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom, Presentation};
use crate::homalg::tensor;
use crate::intlinalg::{IntMatrix, Lattice};

/// Default cap on `|A|` for [`gamma_oracle`].
pub const ORACLE_LIMIT: u64 = 64;

/// Labeled generating set of `Γ(A)` and its link to the canonical form.
#[derive(Clone, Debug)]
pub struct GammaBasis {
    source: FgAbGroup,
    /// Orders of `γ₁..γₘ` followed by `βᵢⱼ` in lexicographic `(i, j)` order.
    orders: Vec<BigInt>,
    presentation: Presentation,
}

impl GammaBasis {
    pub fn new(source: &FgAbGroup) -> Self {
        let o = source.generator_orders();
        let m = o.len();
        let mut orders = Vec::with_capacity(m + m * (m.saturating_sub(1)) / 2);
        for d in &o {
            orders.push(if d.is_even() { d * 2 } else { d.clone() });
        }
        for i in 0..m {
            for j in i + 1..m {
                orders.push(o[i].gcd(&o[j]));
            }
        }
        let presentation = Presentation::of_cyclics(&orders);
        GammaBasis {
            source: source.clone(),
            orders,
            presentation,
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    /// `Γ(A)` in canonical form.
    pub fn group(&self) -> &FgAbGroup {
        &self.presentation.group
    }

    /// Orders of the labeled generators (`γ` first, then brackets).
    pub fn labeled_orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn num_labeled(&self) -> usize {
        self.orders.len()
    }

    /// Position of `βᵢⱼ` among the labeled generators.
    pub fn bracket_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j, "[eᵢ, eᵢ] is 2γᵢ, not a generator");
        let m = self.source.num_generators();
        m + i * m - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Canonical coordinates of a labeled coordinate vector.
    pub fn to_canonical(&self, labeled: &[BigInt]) -> Vec<BigInt> {
        self.presentation.canonical(labeled)
    }

    /// Labeled coordinates of a canonical element.
    pub fn from_canonical(&self, c: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.presentation.original(c);
        for (xi, o) in x.iter_mut().zip(&self.orders) {
            if !o.is_zero() {
                *xi = xi.mod_floor(o);
            }
        }
        x
    }

    /// The isomorphism from the labeled group `⊕ Z/ord` onto the canonical
    /// form, as a matrix (canonical rows, labeled columns).
    pub fn to_canonical_matrix(&self) -> &IntMatrix {
        &self.presentation.to_canonical
    }

    pub fn from_canonical_matrix(&self) -> &IntMatrix {
        &self.presentation.from_canonical
    }

    fn labeled_eval(&self, x: &[BigInt]) -> Vec<BigInt> {
        let m = self.source.num_generators();
        assert_eq!(x.len(), m, "element has wrong length");
        let mut out = vec![BigInt::zero(); self.orders.len()];
        for i in 0..m {
            out[i] = &x[i] * &x[i];
        }
        for i in 0..m {
            for j in i + 1..m {
                out[self.bracket_index(i, j)] = &x[i] * &x[j];
            }
        }
        out
    }

    fn labeled_bracket(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let m = self.source.num_generators();
        let mut out = vec![BigInt::zero(); self.orders.len()];
        for i in 0..m {
            out[i] = BigInt::from(2) * &x[i] * &y[i];
        }
        for i in 0..m {
            for j in i + 1..m {
                out[self.bracket_index(i, j)] = &x[i] * &y[j] + &x[j] * &y[i];
            }
        }
        out
    }
}

/// `Γ(A)` in canonical form with its labeled basis.
pub fn gamma_group(a: &FgAbGroup) -> (FgAbGroup, GammaBasis) {
    let basis = GammaBasis::new(a);
    (basis.group().clone(), basis)
}

/// `γ(x)` in canonical coordinates of `Γ(A)`.
pub fn gamma_eval(basis: &GammaBasis, x: &[BigInt]) -> Vec<BigInt> {
    basis.to_canonical(&basis.labeled_eval(x))
}

/// `[x, y] = γ(x + y) − γ(x) − γ(y)` in canonical coordinates.
pub fn bracket_eval(basis: &GammaBasis, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    basis.to_canonical(&basis.labeled_bracket(x, y))
}

/// `Γ(f): Γ(A) → Γ(B)` between the canonical forms.
pub fn gamma_hom(f: &Hom) -> Hom {
    let ga = GammaBasis::new(f.domain());
    let gb = GammaBasis::new(f.codomain());
    gamma_hom_with(&ga, &gb, f)
}

/// [`gamma_hom`] reusing precomputed bases.
pub fn gamma_hom_with(ga: &GammaBasis, gb: &GammaBasis, f: &Hom) -> Hom {
    let m = ga.source.num_generators();
    let images: Vec<Vec<BigInt>> = (0..m).map(|i| f.image_of_generator(i)).collect();
    let mut labeled_cols = Vec::with_capacity(ga.num_labeled());
    for img in &images {
        labeled_cols.push(gb.labeled_eval(img));
    }
    for i in 0..m {
        for j in i + 1..m {
            labeled_cols.push(gb.labeled_bracket(&images[i], &images[j]));
        }
    }
    let labeled = IntMatrix::from_columns(gb.num_labeled(), &labeled_cols);
    let matrix = gb
        .to_canonical_matrix()
        .mul(&labeled)
        .mul(ga.from_canonical_matrix());
    Hom::new(ga.group().clone(), gb.group().clone(), matrix)
        .expect("Γ of a homomorphism is well-defined")
}

/// `Γ(A)` computed from its defining presentation on symbols `γ_a`, `a ∈ A`.
///
/// Relations are `γ_{−a} = γ_a` and the vanishing of the third cross-effect.
/// Exponential in `|A|`; refuses groups larger than `limit`.
pub fn gamma_oracle(a: &FgAbGroup, limit: u64) -> Result<FgAbGroup> {
    let too_large = || Error::OracleTooLarge {
        order: a.order().map_or_else(|| "infinite".into(), |o| o.to_string()),
        limit,
    };
    let n = a
        .order()
        .and_then(|o| o.to_u64())
        .filter(|&o| o <= limit)
        .ok_or_else(too_large)? as usize;
    let elements: Vec<Vec<BigInt>> = a.elements().collect();
    let index: HashMap<Vec<BigInt>, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, x)| (x, k))
        .collect();
    let idx = |x: &[BigInt]| index[&a.reduced(x)];
    let sum = |x: &[BigInt], y: &[BigInt]| a.add(x, y);

    let mut lattice = Lattice::new(n);
    let mut rel = vec![BigInt::zero(); n];
    let mut push = |terms: &[(usize, i64)], lattice: &mut Lattice| {
        rel.iter_mut().for_each(|r| *r = BigInt::zero());
        for &(k, c) in terms {
            rel[k] += c;
        }
        lattice.insert(&rel);
    };
    for x in &elements {
        push(&[(idx(&a.neg(x)), 1), (idx(x), -1)], &mut lattice);
    }
    // The cross-effect is symmetric in (x, y, z), so a ≤ b ≤ c suffices.
    for ia in 0..n {
        for ib in ia..n {
            let ab = sum(&elements[ia], &elements[ib]);
            for ic in ib..n {
                let (x, y, z) = (&elements[ia], &elements[ib], &elements[ic]);
                let ac = sum(x, z);
                let bc = sum(y, z);
                let abc = sum(&ab, z);
                push(
                    &[
                        (idx(&abc), 1),
                        (idx(&ab), -1),
                        (idx(&ac), -1),
                        (idx(&bc), -1),
                        (ia, 1),
                        (ib, 1),
                        (ic, 1),
                    ],
                    &mut lattice,
                );
            }
        }
    }
    Ok(FgAbGroup::from_relations(n, &lattice.basis_columns()))
}

/// `P ⊗ Z/2`.
pub fn gamma_upper(p: &FgAbGroup) -> FgAbGroup {
    tensor(p, &FgAbGroup::cyclic(2))
}
