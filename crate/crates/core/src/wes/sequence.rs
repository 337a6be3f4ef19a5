use num_bigint::BigInt;

use super::complex::Homology;
use super::splitting::{characteristic_extension, choose_splitting};
use super::{validate_system, GammaSystem};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom, Quotient, Subgroup};
use crate::homalg::{class_of_extension, theta_restrict, ExtClass, Extension, FreeResolution};

/// Number of extra splitting seeds every derived `π`-class is checked
/// against.
pub const ROBUSTNESS_SEEDS: u64 = 3;

/// One degree of a Whitehead sequence
/// `H_{n+1} --b--> Γ_n → π_n → H_n --b--> Γ_{n−1}`.
#[derive(Clone, Debug)]
pub struct WesDegree {
    pub n: usize,
    /// `H_n` with the resolution its characteristic class lives on.
    pub resolution: FreeResolution,
    pub gamma: FgAbGroup,
    /// `b_{n+1}: H_{n+1} → Γ_n`.
    pub b_next: Hom,
    /// `Coker b_{n+1}`.
    pub coker_b: Quotient,
    /// `ker b_n ⊆ H_n`.
    pub ker_b: Subgroup,
    /// A characteristic `n`-extension in `Ext(H_n, Coker b_{n+1})`.
    pub char_class: ExtClass,
    /// `[π_n]` in `Ext(ker b_n, Coker b_{n+1})`.
    pub pi_class: ExtClass,
}

impl WesDegree {
    pub fn homology(&self) -> &FgAbGroup {
        self.resolution.base()
    }
}

/// The certain exact sequence, degrees `2..=last`, together with
/// `H_{last+1}`.
#[derive(Clone, Debug)]
pub struct WhiteheadSequence {
    pub degrees: Vec<WesDegree>,
    pub top_homology: FgAbGroup,
}

impl WhiteheadSequence {
    pub fn last(&self) -> usize {
        self.degrees.len() + 1
    }

    pub fn degree(&self, n: usize) -> Option<&WesDegree> {
        n.checked_sub(2).and_then(|k| self.degrees.get(k))
    }

    /// `H_n` for `2 ≤ n ≤ last + 1`.
    pub fn homology(&self, n: usize) -> Option<&FgAbGroup> {
        if n == self.last() + 1 {
            Some(&self.top_homology)
        } else {
            self.degree(n).map(WesDegree::homology)
        }
    }
}

/// Everything about degree `n` that does not depend on a splitting.
pub(crate) struct DegreeCore {
    pub homology: Homology,
    pub homology_next: Homology,
    pub gamma: Subgroup,
    pub b_next: Hom,
    pub coker: Quotient,
}

pub(crate) fn degree_core(s: &GammaSystem, n: usize) -> Result<DegreeCore> {
    let c = s.complex();
    let level = s.level(n)?;
    let homology = c.homology(n)?;
    let homology_next = c.homology_any(n + 1);
    let gamma = level.j.kernel();

    // β_{n+1} must vanish on boundaries for b_{n+1} to be defined.
    let bd = level.beta_next.compose(&c.d_hom(n + 2))?;
    if !bd.is_zero() {
        return Err(Error::Integrity(format!("β{}∘d{} ≠ 0", n + 1, n + 2)));
    }
    let mut cols = Vec::new();
    for i in 0..homology_next.group().num_generators() {
        let z = homology_next.representative(&homology_next.group().generator(i));
        let y = level.beta_next.apply(&z);
        let coords = gamma
            .coordinates(&y)
            .ok_or_else(|| Error::Integrity(format!("β{} of a cycle leaves Γ{n}", n + 1)))?;
        cols.push(coords);
    }
    let b_next = Hom::from_images(homology_next.group().clone(), gamma.group.clone(), &cols)
        .map_err(|e| Error::Integrity(format!("b{} is not well-defined: {e}", n + 1)))?;
    let coker = b_next.cokernel();
    Ok(DegreeCore {
        homology,
        homology_next,
        gamma,
        b_next,
        coker,
    })
}

/// `ker b_n ⊆ H_n`, where `b_n = b` of degree `n − 1` (zero for `n = 2`).
pub(crate) fn ker_b(s: &GammaSystem, n: usize, h: &FgAbGroup) -> Result<Subgroup> {
    if n == 2 {
        return Ok(Hom::zero(h, &FgAbGroup::trivial()).kernel());
    }
    Ok(degree_core(s, n - 1)?.b_next.kernel())
}

/// `[π_n] = θ_n([φ̃_n])` for the splitting selected by `seed`.
pub fn pi_class(s: &GammaSystem, n: usize, seed: u64) -> Result<ExtClass> {
    let core = degree_core(s, n)?;
    let kb = ker_b(s, n, core.homology.group())?;
    let sp = choose_splitting(s, n, seed)?;
    let ch = characteristic_extension(s, n, &sp)?;
    theta_restrict(&ch, &kb.inclusion)
}

/// Derives the certain exact sequence of a valid Γ-system.
///
/// Each `π`-class is computed from the canonical splitting and recomputed
/// with [`ROBUSTNESS_SEEDS`] further seeds; disagreement is an integrity
/// error.
pub fn derive_wes(s: &GammaSystem) -> Result<WhiteheadSequence> {
    derive_wes_checked(s, ROBUSTNESS_SEEDS)
}

pub fn derive_wes_checked(s: &GammaSystem, extra_seeds: u64) -> Result<WhiteheadSequence> {
    derive_wes_with(s, 0, extra_seeds)
}

/// Derives the sequence with characteristic classes taken from the
/// splitting of `seed`, checking the `π`-classes against seeds
/// `0..=extra_seeds` as well.
pub fn derive_wes_with(s: &GammaSystem, seed: u64, extra_seeds: u64) -> Result<WhiteheadSequence> {
    validate_system(s).into_result()?;
    let mut degrees = Vec::new();
    let mut prev_b: Option<Hom> = None;
    for n in 2..=s.top() {
        let core = degree_core(s, n)?;
        let h = core.homology.group().clone();
        let ker_b = match &prev_b {
            None => Hom::zero(&h, &FgAbGroup::trivial()).kernel(),
            Some(b) => b.kernel(),
        };
        let sp = choose_splitting(s, n, seed)?;
        let char_class = characteristic_extension(s, n, &sp)?;
        let pi = theta_restrict(&char_class, &ker_b.inclusion)?;
        for other_seed in (0..=extra_seeds).filter(|&k| k != seed) {
            let sp = choose_splitting(s, n, other_seed)?;
            let other = theta_restrict(&characteristic_extension(s, n, &sp)?, &ker_b.inclusion)?;
            if other != pi {
                return Err(Error::Integrity(format!(
                    "π{n} class differs between splitting seeds {seed} and {other_seed}"
                )));
            }
        }
        prev_b = Some(core.b_next.clone());
        degrees.push(WesDegree {
            n,
            resolution: core.homology.resolution.clone(),
            gamma: core.gamma.group.clone(),
            b_next: core.b_next,
            coker_b: core.coker,
            ker_b,
            char_class,
            pi_class: pi,
        });
    }
    Ok(WhiteheadSequence {
        degrees,
        top_homology: FgAbGroup::trivial(),
    })
}

/// `Coker b_{n+1} ↣ π_n ↠ ker b_n` with `π_n = Π_n / β_{n+1}(C_{n+1})`,
/// built directly from the system without any splitting.
pub fn pi_sequence(s: &GammaSystem, n: usize) -> Result<Extension> {
    let core = degree_core(s, n)?;
    let level = s.level(n)?;
    let kb = ker_b(s, n, core.homology.group())?;
    let pi = level.beta_next.cokernel();
    let gamma_to_pi = pi.projection.compose(&core.gamma.inclusion)?;
    let i = core
        .coker
        .descend(&gamma_to_pi)
        .ok_or_else(|| Error::Integrity(format!("Γ{n} → π{n} does not kill Im b{}", n + 1)))?;
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for g in 0..pi.group.num_generators() {
        let x = pi.lift(&pi.group.generator(g));
        let z = level.j.apply(&x);
        let h = core
            .homology
            .class_of(&z)
            .ok_or_else(|| Error::Integrity(format!("j{n} of an element is not a cycle")))?;
        let k = kb
            .coordinates(&h)
            .ok_or_else(|| Error::Integrity(format!("π{n} → H{n} leaves ker b{n}")))?;
        cols.push(k);
    }
    let q = Hom::from_images(pi.group.clone(), kb.group.clone(), &cols)?;
    Ok(Extension { i, q })
}

/// `class_of_extension` of [`pi_sequence`].
pub fn pi_sequence_class(s: &GammaSystem, n: usize) -> Result<ExtClass> {
    let e = pi_sequence(s, n)?;
    class_of_extension(&e.i, &e.q)
}
