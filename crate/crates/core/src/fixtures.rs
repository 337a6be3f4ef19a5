//! Named systems used by the documentation, the tests and the command-line
//! fixture corpus.

use crate::fgab::{FgAbGroup, Hom};
use crate::gamma::gamma_group;
use crate::intlinalg::IntMatrix;
use crate::wes::{pi_sequence_class, ChainComplex, Design, FourDimSystem, Ladder};

fn z(n: usize) -> FgAbGroup {
    FgAbGroup::free(n)
}

/// `C₃ = Z --2--> C₂ = Z` with `Γ₂ = Z/2` and `g₃ = 1`: `H₂ = Z/2`,
/// `b₃ = 0` and `π₂ = Z/4`.
pub fn example_a() -> Design {
    let c = ChainComplex::new(3, vec![1, 1], vec![IntMatrix::from_rows(&[[2]])]).unwrap();
    let g2 = FgAbGroup::of(0, &[2]);
    let t = FgAbGroup::trivial();
    Design::new(
        c,
        vec![g2.clone(), t.clone()],
        vec![Hom::of(&z(1), &g2, &[[1]]), Hom::zero(&z(0), &t)],
    )
    .unwrap()
}

/// A ladder that satisfies every ladder condition but is not strong.
///
/// `X`: `C₄ = Z² --diag(2,2)--> C₃ = Z²`, `Γ₂ = Z/2`, `g₃ = (0 1)`.
/// `Y`: `C₄ = Z --2--> C₃ = Z`, `Γ₃ = Z/2`, `g₄ = 1`.
/// The ladder is induced by the projection onto the second summand in
/// degrees 3 and 4, with all `γ` zero.
pub fn not_strong() -> (Design, Design, Ladder) {
    let t = FgAbGroup::trivial();
    let z2 = FgAbGroup::of(0, &[2]);
    let cx = ChainComplex::new(
        4,
        vec![0, 2, 2],
        vec![IntMatrix::zeros(0, 2), IntMatrix::from_rows(&[[2, 0], [0, 2]])],
    )
    .unwrap();
    let x = Design::new(
        cx,
        vec![z2.clone(), t.clone(), t.clone()],
        vec![Hom::of(&z(2), &z2, &[[0, 1]]), Hom::zero(&z(2), &t), Hom::zero(&t, &t)],
    )
    .unwrap();
    let cy = ChainComplex::new(4, vec![0, 1, 1], vec![IntMatrix::zeros(0, 1), IntMatrix::from_rows(&[[2]])])
        .unwrap();
    let y = Design::new(
        cy,
        vec![t.clone(), z2.clone(), t.clone()],
        vec![Hom::zero(&z(1), &t), Hom::of(&z(1), &z2, &[[1]]), Hom::zero(&t, &t)],
    )
    .unwrap();
    let chain = vec![
        IntMatrix::zeros(0, 0),
        IntMatrix::from_rows(&[[0, 1]]),
        IntMatrix::from_rows(&[[0, 1]]),
    ];
    let gamma = vec![Hom::zero(&z2, &t), Hom::zero(&t, &z2), Hom::zero(&t, &t)];
    let l = x.induced_ladder(&y, &chain, &gamma).unwrap();
    (x, y, l)
}

/// Designs with torsion in their homology, `top ≤ 5`. The random ones are
/// kept only if some `π`-extension does not split.
pub fn torsion_designs() -> Vec<(String, Design)> {
    let (x, y, _) = not_strong();
    let mut out = vec![
        ("example-a".to_string(), example_a()),
        ("not-strong-x".to_string(), x),
        ("not-strong-y".to_string(), y),
    ];
    let mut seed = 0;
    while out.len() < 13 {
        let top = 3 + (seed % 3) as usize;
        let d = Design::random(seed, top);
        let s = d.system().expect("designs are valid");
        if (2..=top).any(|n| !pi_sequence_class(&s, n).expect("valid system").is_zero()) {
            out.push((format!("random-{seed}-top{top}"), d));
        }
        seed += 1;
    }
    out
}

/// Designs with free homology in every degree.
pub fn free_designs() -> Vec<(String, Design)> {
    (0..6)
        .map(|seed| {
            let top = 3 + (seed % 2) as usize;
            (format!("free-{seed}-top{top}"), Design::random_free(seed, top))
        })
        .collect()
}

/// Simply connected 4-dimensional systems.
pub fn four_dim() -> Vec<(String, FourDimSystem)> {
    let t = FgAbGroup::trivial();
    let z2 = FgAbGroup::of(0, &[2]);
    let gamma_z2 = gamma_group(&z2).0;
    let z2z = z(2);
    let gamma_z2z = gamma_group(&z2z).0;
    let mut out = vec![
        ("cp2".to_string(), FourDimSystem::hopf(1)),
        ("wedge".to_string(), FourDimSystem::hopf(0)),
        ("hopf2".to_string(), FourDimSystem::hopf(2)),
        ("hopf-2".to_string(), FourDimSystem::hopf(-2)),
    ];
    out.push((
        "rp-like".to_string(),
        FourDimSystem::new(z2.clone(), t.clone(), z(1), Hom::of(&z(1), &gamma_z2, &[[1]]), None).unwrap(),
    ));
    // Coker b₄ = Γ(Z/2) = Z/4 and Ext(Z/2, Z/4) = Z/2.
    let res_coker = FgAbGroup::of(0, &[4]);
    out.push((
        "torsion-pi3".to_string(),
        FourDimSystem::new(
            z2.clone(),
            z2.clone(),
            t.clone(),
            Hom::zero(&t, &gamma_z2),
            Some(Hom::of(&z(1), &res_coker, &[[1]])),
        )
        .unwrap(),
    ));
    out.push((
        "two-spheres".to_string(),
        FourDimSystem::new(
            z2z.clone(),
            t.clone(),
            z(1),
            Hom::of(&z(1), &gamma_z2z, &[[1], [1], [1]]),
            None,
        )
        .unwrap(),
    ));
    out
}
