//! Γ-systems built to order.
//!
//! Given a chain complex, groups `Γ_n` and maps `g_{n+1}: C_{n+1} → Γ_n`
//! with `g_{n+1}∘d_{n+2} = 0`, set `K_n = ker d_n ∩ ker g_n`,
//! `Π_n = Γ_n ⊕ K_n`, `j_n = (0, incl)` and `β_{n+1} = (g_{n+1}, d_{n+1})`.
//! Then `b_{n+1}` is induced by `g_{n+1}` and `[π_n]` is the class of
//! `g_{n+1}∘t_{n+1}` on the resolution `Im d_{n+1} ↣ K_n ↠ ker b_n`. Both
//! can be read off the design without touching any splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ChainComplex, GammaSystem, Ladder, Level, WhiteheadSequence};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::homalg::{canonical_resolution, class_of_cocycle, pullback_to, ExtClass, FreeResolution};
use crate::intlinalg::{image_basis, kernel_basis, smith_normal_form, solve_matrix, IntMatrix};

#[derive(Clone, Debug)]
pub struct Design {
    complex: ChainComplex,
    /// `Γ_n` for `2 ≤ n ≤ top`.
    gammas: Vec<FgAbGroup>,
    /// `g_{n+1}: C_{n+1} → Γ_n` for `2 ≤ n ≤ top`.
    g: Vec<Hom>,
}

impl Design {
    pub fn new(complex: ChainComplex, gammas: Vec<FgAbGroup>, g: Vec<Hom>) -> Result<Self> {
        let top = complex.top();
        if gammas.len() != top - 1 || g.len() != top - 1 {
            return Err(Error::Malformed("one Γ and one g per degree 2..=top".into()));
        }
        for n in 2..=top {
            let gn = &g[n - 2];
            if gn.domain() != &complex.chain_group(n + 1) || gn.codomain() != &gammas[n - 2] {
                return Err(Error::Shape(format!("g{} must map C{} → Γ{n}", n + 1, n + 1)));
            }
            if !gn.compose(&complex.d_hom(n + 2))?.is_zero() {
                return Err(Error::NotWellDefined(format!("g{}∘d{} ≠ 0", n + 1, n + 2)));
            }
        }
        Ok(Design { complex, gammas, g })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn gamma(&self, n: usize) -> &FgAbGroup {
        &self.gammas[n - 2]
    }

    /// `g_{n+1}: C_{n+1} → Γ_n`.
    pub fn g(&self, n: usize) -> &Hom {
        &self.g[n - 2]
    }

    /// Basis of `K_n = ker d_n ∩ ker g_n` (columns in `C_n`).
    pub fn k_basis(&self, n: usize) -> IntMatrix {
        let c = &self.complex;
        let d = c.d(n);
        if n == 2 {
            return image_basis(&kernel_basis(&d));
        }
        let gn = self.g(n - 1);
        let gamma = gn.codomain();
        let rel = gamma.relation_matrix();
        let top = gn.matrix().hstack(&rel);
        let bottom = d.hstack(&IntMatrix::zeros(d.rows(), rel.cols()));
        let k = kernel_basis(&top.vstack(&bottom)).select_rows(0..c.rank(n));
        image_basis(&k)
    }

    /// The Γ-system of the design.
    pub fn system(&self) -> Result<GammaSystem> {
        let c = &self.complex;
        let mut levels = Vec::new();
        for n in 2..=c.top() {
            let gamma = self.gamma(n);
            let kb = self.k_basis(n);
            let pi = FgAbGroup::new(gamma.rank() + kb.cols(), gamma.torsion().to_vec())?;
            let j = Hom::new(
                pi.clone(),
                c.chain_group(n),
                IntMatrix::zeros(c.rank(n), gamma.num_generators()).hstack(&kb),
            )?;
            let dk = solve_matrix(&kb, &c.d(n + 1))
                .ok_or_else(|| Error::NotWellDefined(format!("d{} does not land in K{n}", n + 1)))?;
            let beta_next = Hom::new(
                c.chain_group(n + 1),
                pi.clone(),
                self.g(n).matrix().vstack(&dk),
            )?;
            levels.push(Level { pi, j, beta_next });
        }
        GammaSystem::new(c.clone(), levels)
    }

    /// `Γ_n` of the design into `Γ_n = ker j_n` as computed for the system.
    fn system_gamma(&self, s: &GammaSystem, n: usize) -> Result<Hom> {
        let sub = s.level(n)?.j.kernel();
        let gamma = self.gamma(n);
        let k = s.level(n)?.pi.num_generators() - gamma.num_generators();
        let mut cols = Vec::new();
        for i in 0..gamma.num_generators() {
            let mut x = gamma.generator(i);
            x.extend(std::iter::repeat_n(BigInt::from(0), k));
            cols.push(
                sub.coordinates(&x)
                    .ok_or_else(|| Error::Integrity(format!("Γ{n} is not inside ker j{n}")))?,
            );
        }
        Hom::from_images(gamma.clone(), sub.group.clone(), &cols)
    }

    /// `b_{n+1}` as designed: a cycle `z` goes to `g_{n+1}(z)`.
    pub fn designed_b(&self, s: &GammaSystem, n: usize) -> Result<Hom> {
        let h = self.complex.homology_any(n + 1);
        let to_sys = self.system_gamma(s, n)?;
        let mut cols = Vec::new();
        for i in 0..h.group().num_generators() {
            let z = h.representative(&h.group().generator(i));
            cols.push(to_sys.apply(&self.g(n).apply(&z)));
        }
        Hom::from_images(h.group().clone(), to_sys.codomain().clone(), &cols)
    }

    /// `[π_n]` as designed, moved to the canonical resolution of `ker b_n`
    /// of the derived sequence `w` of [`Design::system`].
    pub fn designed_class(&self, s: &GammaSystem, w: &WhiteheadSequence, n: usize) -> Result<ExtClass> {
        let deg = w
            .degree(n)
            .ok_or(Error::DegreeOutOfRange { degree: n, lo: 2, hi: w.last() })?;
        let c = &self.complex;
        let h = c.homology(n)?;
        let kb = self.k_basis(n);
        let boundaries = image_basis(&c.d(n + 1));
        let kappa = solve_matrix(&kb, &boundaries)
            .ok_or_else(|| Error::Integrity(format!("Im d{} is not inside K{n}", n + 1)))?;
        let mut proj_cols = Vec::new();
        for z in kb.columns() {
            let class = h.class_of(&z).expect("K_n consists of cycles");
            proj_cols.push(
                deg.ker_b
                    .coordinates(&class)
                    .ok_or_else(|| Error::Integrity(format!("K{n} does not map into ker b{n}")))?,
            );
        }
        let proj = IntMatrix::from_columns(deg.ker_b.group.num_generators(), &proj_cols);
        let res = FreeResolution::new(deg.ker_b.group.clone(), kappa, proj)?;

        let snf = smith_normal_form(&c.d(n + 1));
        let t = snf.v().select_columns(0..snf.rank());
        let to_sys = self.system_gamma(s, n)?;
        let g_tilde = deg.coker_b.projection.compose(&to_sys)?.compose(self.g(n))?;
        let phi = Hom::new(
            FgAbGroup::free(t.cols()),
            deg.coker_b.group.clone(),
            g_tilde.matrix().mul(&t),
        )?;
        let class = class_of_cocycle(&res, &deg.coker_b.group, &phi)?;
        pullback_to(
            &Hom::identity(&deg.ker_b.group),
            &class,
            &canonical_resolution(&deg.ker_b.group),
        )
    }

    /// The ladder induced by chain maps `F_n: C_n(X) → C_n(Y)` and maps
    /// `Γ_n(X) → Γ_n(Y)` of the designs, for `2 ≤ n ≤ top`, in the
    /// coordinates of the derived sequences.
    pub fn induced_ladder(&self, other: &Design, chain: &[IntMatrix], gamma: &[Hom]) -> Result<Ladder> {
        let top = self.complex.top();
        if other.complex.top() != top || chain.len() != top - 1 || gamma.len() != top - 1 {
            return Err(Error::Shape("one chain map and one Γ map per degree 2..=top".into()));
        }
        let (sx, sy) = (self.system()?, other.system()?);
        let mut f = Vec::new();
        for n in 2..=top {
            let (hx, hy) = (self.complex.homology(n)?, other.complex.homology(n)?);
            let mut cols = Vec::new();
            for i in 0..hx.group().num_generators() {
                let z = chain[n - 2].mul_vec(&hx.representative(&hx.group().generator(i)));
                cols.push(
                    hy.class_of(&z)
                        .ok_or_else(|| Error::NotWellDefined(format!("F{n} does not preserve cycles")))?,
                );
            }
            f.push(Hom::from_images(hx.group().clone(), hy.group().clone(), &cols)?);
        }
        f.push(Hom::zero(&FgAbGroup::trivial(), &FgAbGroup::trivial()));
        let mut gammas = Vec::new();
        for n in 2..=top {
            let (to_x, to_y) = (self.system_gamma(&sx, n)?, other.system_gamma(&sy, n)?);
            let back = to_x
                .inverse()
                .ok_or_else(|| Error::Integrity(format!("Γ{n} is not ker j{n}")))?;
            gammas.push(to_y.compose(&gamma[n - 2])?.compose(&back)?);
        }
        Ok(Ladder { f, gamma: gammas })
    }

    /// A random design with top dimension `top`: the complex is a sum of
    /// elementary pieces `Z --m--> Z` and spheres, conjugated by random
    /// unimodular changes of basis, and each `g` sends the target of an
    /// `m`-piece into the `m`-torsion of `Γ`.
    pub fn random(seed: u64, top: usize) -> Design {
        Design::random_with(seed, top, 4)
    }

    /// A random design whose homology is free in every degree.
    pub fn random_free(seed: u64, top: usize) -> Design {
        Design::random_with(seed, top, 1)
    }

    fn random_with(seed: u64, top: usize, max_mult: i64) -> Design {
        assert!(top >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Block structure: for each n, spheres a_n and pieces C_{n+1} → C_n.
        let spheres: Vec<usize> = (2..=top).map(|_| rng.gen_range(0..=2)).collect();
        let pieces: Vec<Vec<i64>> = (2..=top)
            .map(|n| {
                if n == top {
                    vec![]
                } else {
                    (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(1..=max_mult)).collect()
                }
            })
            .collect();
        // Generators of C_n in block order: spheres, targets of pieces from
        // C_{n+1}, sources of pieces into C_{n−1}.
        let rank = |n: usize| {
            if n > top {
                return 0;
            }
            spheres[n - 2] + pieces[n - 2].len() + if n > 2 { pieces[n - 3].len() } else { 0 }
        };
        let ranks: Vec<usize> = (2..=top).map(rank).collect();
        let block_d = |n: usize| -> IntMatrix {
            // d_n: C_n → C_{n−1}.
            let mut m = IntMatrix::zeros(rank(n - 1), rank(n));
            let below = &pieces[n - 3];
            for (k, &mult) in below.iter().enumerate() {
                let src = spheres[n - 2] + pieces[n - 2].len() + k;
                let dst = spheres[n - 3] + k;
                m[(dst, src)] = BigInt::from(mult);
            }
            m
        };
        let gammas: Vec<FgAbGroup> = (2..=top)
            .map(|_| {
                let shapes: [(usize, &[i64]); 6] =
                    [(0, &[]), (0, &[2]), (0, &[2, 4]), (0, &[3]), (1, &[]), (1, &[2])];
                let (r, t) = shapes[rng.gen_range(0..shapes.len())];
                FgAbGroup::of(r, t)
            })
            .collect();
        let random_elt = |rng: &mut ChaCha8Rng, g: &FgAbGroup, m: i64| -> Vec<BigInt> {
            g.generator_orders()
                .iter()
                .map(|o| {
                    let x = BigInt::from(rng.gen_range(-3i64..=3));
                    if m == 0 {
                        x
                    } else if o == &BigInt::from(0) {
                        BigInt::from(0)
                    } else {
                        x * (o / o.gcd(&BigInt::from(m)))
                    }
                })
                .collect()
        };
        // g_{n+1}: C_{n+1} → Γ_n; targets of pieces from C_{n+2} land in the
        // m-torsion.
        let block_g: Vec<IntMatrix> = (2..=top)
            .map(|n| {
                let gamma = &gammas[n - 2];
                let mut cols = Vec::new();
                for k in 0..rank(n + 1) {
                    let sphere_or_source = n + 1 > top
                        || k < spheres[n - 1]
                        || k >= spheres[n - 1] + pieces[n - 1].len();
                    let m = if sphere_or_source {
                        0
                    } else {
                        pieces[n - 1][k - spheres[n - 1]]
                    };
                    cols.push(random_elt(&mut rng, gamma, m));
                }
                IntMatrix::from_columns(gamma.num_generators(), &cols)
            })
            .collect();
        // Random unimodular bases.
        let mut changes: Vec<(IntMatrix, IntMatrix)> = Vec::new();
        for n in 2..=top {
            let r = rank(n);
            let (mut p, mut p_inv) = (IntMatrix::identity(r), IntMatrix::identity(r));
            if r >= 2 {
                for _ in 0..2 * r {
                    let a = rng.gen_range(0..r);
                    let b = (a + rng.gen_range(1..r)) % r;
                    let c = BigInt::from(rng.gen_range(-2i64..=2));
                    p.add_row_multiple(a, b, &c);
                    p_inv.add_col_multiple(b, a, &-&c);
                }
            }
            changes.push((p, p_inv));
        }
        let change = |n: usize| &changes[n - 2];
        let diffs: Vec<IntMatrix> = (3..=top)
            .map(|n| change(n - 1).0.mul(&block_d(n)).mul(&change(n).1))
            .collect();
        let complex = ChainComplex::new(top, ranks, diffs).expect("shapes are consistent");
        let g = (2..=top)
            .map(|n| {
                let m = if n < top {
                    block_g[n - 2].mul(&change(n + 1).1)
                } else {
                    block_g[n - 2].clone()
                };
                Hom::new(complex.chain_group(n + 1), gammas[n - 2].clone(), m)
                    .expect("g lands in Γ")
            })
            .collect();
        Design::new(complex, gammas, g).expect("random design satisfies g∘d = 0")
    }
}
