//! `⊗`, `Hom` and `Ext¹` over `Z`, free resolutions, and Baer classes.

mod baer;
mod ext;
mod resolution;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fgab::{FgAbGroup, Presentation};

pub use baer::{class_of_extension, extension_from_class, theta_restrict, Extension};
pub use ext::{
    class_of_cocycle, classes_equal, ext1, pullback, pullback_to, pullback_with_lift,
    pushforward, ExtClass, ExtGroup,
};
pub use resolution::{canonical_resolution, resolution_from_complex, FreeResolution};

/// `A ⊗ B` in canonical form.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    pairwise(a, b, |o, p| o.gcd(p))
}

/// `Hom(A, B)` in canonical form.
pub fn hom_group(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    pairwise(a, b, |o, p| match (o.is_zero(), p.is_zero()) {
        (false, false) => o.gcd(p),
        (false, true) => BigInt::one(),
        (true, _) => p.clone(),
    })
}

fn pairwise(a: &FgAbGroup, b: &FgAbGroup, order: impl Fn(&BigInt, &BigInt) -> BigInt) -> FgAbGroup {
    let mut orders = Vec::new();
    for o in a.generator_orders() {
        for p in b.generator_orders() {
            orders.push(order(&o, &p));
        }
    }
    Presentation::of_cyclics(&orders).group
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_examples() {
        let b = FgAbGroup::of(1, &[2, 6]);
        assert_eq!(tensor(&FgAbGroup::free(1), &b), b);
        assert!(tensor(&FgAbGroup::of(0, &[2]), &FgAbGroup::of(0, &[3])).is_trivial());
        assert_eq!(
            tensor(&FgAbGroup::of(0, &[4]), &FgAbGroup::of(0, &[6])),
            FgAbGroup::of(0, &[2])
        );
        assert_eq!(tensor(&FgAbGroup::free(2), &FgAbGroup::free(3)), FgAbGroup::free(6));
    }

    #[test]
    fn hom_examples() {
        let b = FgAbGroup::of(1, &[3]);
        assert_eq!(hom_group(&FgAbGroup::free(1), &b), b);
        assert!(hom_group(&FgAbGroup::of(0, &[2]), &FgAbGroup::free(1)).is_trivial());
        assert_eq!(
            hom_group(&FgAbGroup::of(0, &[4]), &FgAbGroup::of(0, &[6])),
            FgAbGroup::of(0, &[2])
        );
    }
}
