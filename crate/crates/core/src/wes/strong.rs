use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::{WesDegree, WhiteheadSequence};
use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::homalg::{pullback, pullback_to, pushforward, theta_restrict, ExtClass, ExtGroup};
use crate::intlinalg::IntMatrix;

/// Maps `f_n: H_n(X) → H_n(Y)` for `2 ≤ n ≤ last + 1` and
/// `γ_n: Γ_n(X) → Γ_n(Y)` for `2 ≤ n ≤ last`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub f: Vec<Hom>,
    pub gamma: Vec<Hom>,
}

impl Ladder {
    pub fn f(&self, n: usize) -> &Hom {
        &self.f[n - 2]
    }

    pub fn gamma(&self, n: usize) -> &Hom {
        &self.gamma[n - 2]
    }

    /// The identity ladder of a sequence.
    pub fn identity(w: &WhiteheadSequence) -> Ladder {
        let f = (2..=w.last() + 1)
            .map(|n| Hom::identity(w.homology(n).expect("degree in range")))
            .collect();
        let gamma = w.degrees.iter().map(|d| Hom::identity(&d.gamma)).collect();
        Ladder { f, gamma }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderCondition {
    Shape,
    /// `γ_n∘b_{n+1} = b'_{n+1}∘f_{n+1}`.
    Commutes,
    /// `(γ̃_n)_*[π_n(X)] = (f_n|)^*[π_n(Y)]`.
    ExtensionClasses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderViolation {
    pub degree: usize,
    pub condition: LadderCondition,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    pub violations: Vec<LadderViolation>,
}

impl LadderReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, degree: usize, condition: LadderCondition, detail: impl Into<String>) {
        self.violations.push(LadderViolation {
            degree,
            condition,
            detail: detail.into(),
        });
    }
}

/// `γ̃_n: Coker b_{n+1}(X) → Coker b_{n+1}(Y)` induced by `γ_n`.
fn induced_on_coker(x: &WesDegree, y: &WesDegree, gamma: &Hom) -> Option<Hom> {
    let g = y.coker_b.projection.compose(gamma).ok()?;
    x.coker_b.descend(&g)
}

/// `f_n` restricted to `ker b_n(X) → ker b_n(Y)`.
fn restricted_to_ker(x: &WesDegree, y: &WesDegree, f: &Hom) -> Option<Hom> {
    let g = f.compose(&x.ker_b.inclusion).ok()?;
    y.ker_b.corestrict(&g)
}

fn check_shapes(wx: &WhiteheadSequence, wy: &WhiteheadSequence, l: &Ladder, r: &mut LadderReport) {
    if wx.last() != wy.last() {
        r.push(2, LadderCondition::Shape, "sequences cover different degrees");
        return;
    }
    let last = wx.last();
    if l.f.len() != last || l.gamma.len() != last - 1 {
        r.push(
            2,
            LadderCondition::Shape,
            format!(
                "expected {} maps f and {} maps γ, got {} and {}",
                last,
                last - 1,
                l.f.len(),
                l.gamma.len()
            ),
        );
        return;
    }
    for n in 2..=last + 1 {
        let (hx, hy) = (wx.homology(n).unwrap(), wy.homology(n).unwrap());
        if l.f(n).domain() != hx || l.f(n).codomain() != hy {
            r.push(n, LadderCondition::Shape, format!("f{n} must map {hx} → {hy}"));
        }
    }
    for n in 2..=last {
        let (gx, gy) = (&wx.degree(n).unwrap().gamma, &wy.degree(n).unwrap().gamma);
        if l.gamma(n).domain() != gx || l.gamma(n).codomain() != gy {
            r.push(n, LadderCondition::Shape, format!("γ{n} must map {gx} → {gy}"));
        }
    }
}

/// Checks that the ladder commutes with the `b` maps and carries `[π_n(X)]`
/// to `[π_n(Y)]`, the latter being the criterion for existence of the maps
/// `Ω_n` between the `π_n`.
pub fn check_ladder(wx: &WhiteheadSequence, wy: &WhiteheadSequence, l: &Ladder) -> LadderReport {
    let mut r = LadderReport::default();
    check_shapes(wx, wy, l, &mut r);
    if !r.passed() {
        return r;
    }
    let last = wx.last();
    let mut commutes = vec![true; last + 2];
    for n in 2..=last {
        let (x, y) = (wx.degree(n).unwrap(), wy.degree(n).unwrap());
        let lhs = l.gamma(n).compose(&x.b_next).expect("shapes checked");
        let rhs = y.b_next.compose(l.f(n + 1)).expect("shapes checked");
        if lhs != rhs {
            commutes[n] = false;
            r.push(
                n,
                LadderCondition::Commutes,
                format!("γ{n}∘b{} ≠ b'{}∘f{}", n + 1, n + 1, n + 1),
            );
        }
    }
    for n in 2..=last {
        if !commutes[n] || (n > 2 && !commutes[n - 1]) {
            continue;
        }
        let (x, y) = (wx.degree(n).unwrap(), wy.degree(n).unwrap());
        let gt = induced_on_coker(x, y, l.gamma(n)).expect("commuting γ descends to cokernels");
        let fr = restricted_to_ker(x, y, l.f(n)).expect("commuting f preserves ker b");
        let same = pushforward(&gt, &x.pi_class)
            .and_then(|p| Ok(p == pullback(&fr, &y.pi_class)?))
            .unwrap_or(false);
        if !same {
            r.push(
                n,
                LadderCondition::ExtensionClasses,
                format!("(γ̃{n})_*[π{n}(X)] ≠ (f{n}|)^*[π{n}(Y)]"),
            );
        }
    }
    r
}

/// Witnessing pair `([φ̃_n(X)], [φ̃_n(Y)])` of characteristic extensions.
#[derive(Clone, Debug)]
pub struct StrongDegree {
    pub n: usize,
    pub witness: Option<(ExtClass, ExtClass)>,
}

#[derive(Clone, Debug)]
pub struct StrongReport {
    pub degrees: Vec<StrongDegree>,
}

impl StrongReport {
    pub fn is_strong(&self) -> bool {
        self.degrees.iter().all(|d| d.witness.is_some())
    }
}

/// A hom between `Ext` groups, read off from a class-level map applied to
/// the generators.
fn ext_map(
    from: &Arc<ExtGroup>,
    to: &FgAbGroup,
    map: impl Fn(&ExtClass) -> Result<ExtClass>,
) -> Result<Hom> {
    let mut cols = Vec::new();
    for g in from.generators() {
        cols.push(map(&g)?.normal_form().to_vec());
    }
    Hom::from_images(from.group().clone(), to.clone(), &cols)
}

/// Decides, for each degree, whether characteristic extensions
/// `[φ̃_n] ∈ S_n(X)`, `[φ̃'_n] ∈ S_n(Y)` exist with
/// `(f_n)^*[φ̃'_n] = (γ̃_n)_*[φ̃_n]`.
///
/// With `S = [φ̃⁰] + ker θ`, this is membership of
/// `(γ̃_n)_*[φ̃⁰_n] − (f_n)^*[φ̃'⁰_n]` in `(γ̃_n)_*(ker θ_X) + (f_n)^*(ker θ_Y)`
/// inside `Ext(H_n(X), Coker b'_{n+1})`.
pub fn check_strong(wx: &WhiteheadSequence, wy: &WhiteheadSequence, l: &Ladder) -> Result<StrongReport> {
    let report = check_ladder(wx, wy, l);
    if let Some(v) = report
        .violations
        .iter()
        .find(|v| v.condition != LadderCondition::ExtensionClasses)
    {
        return Err(Error::Malformed(format!(
            "ladder does not commute at degree {}: {}",
            v.degree, v.detail
        )));
    }
    let mut degrees = Vec::new();
    for n in 2..=wx.last() {
        let (x, y) = (wx.degree(n).unwrap(), wy.degree(n).unwrap());
        let gt = induced_on_coker(x, y, l.gamma(n))
            .ok_or_else(|| Error::Integrity(format!("γ{n} does not descend to cokernels")))?;
        let f = l.f(n);
        let res_x = x.char_class.resolution();
        let push = |c: &ExtClass| pushforward(&gt, c);
        let pull = |c: &ExtClass| pullback_to(f, c, res_x);

        let base = push(&x.char_class)?;
        let d = base.sub(&pull(&y.char_class)?)?;
        let target = Arc::clone(d.ext_group());

        let ext_x = Arc::clone(x.char_class.ext_group());
        let ext_y = Arc::clone(y.char_class.ext_group());
        let theta_x = ext_map(&ext_x, x.pi_class.ext_group().group(), |c| {
            theta_restrict(c, &x.ker_b.inclusion)
        })?;
        let theta_y = ext_map(&ext_y, y.pi_class.ext_group().group(), |c| {
            theta_restrict(c, &y.ker_b.inclusion)
        })?;
        let kx = theta_x.kernel();
        let ky = theta_y.kernel();
        let kx_classes: Vec<ExtClass> = (0..kx.group.num_generators())
            .map(|i| ext_x.class(&kx.inclusion.image_of_generator(i)))
            .collect();
        let ky_classes: Vec<ExtClass> = (0..ky.group.num_generators())
            .map(|i| ext_y.class(&ky.inclusion.image_of_generator(i)))
            .collect();
        let mut span_cols = Vec::new();
        for c in &kx_classes {
            span_cols.push(push(c)?.normal_form().to_vec());
        }
        for c in &ky_classes {
            span_cols.push(pull(c)?.normal_form().to_vec());
        }
        let span = Hom::new(
            FgAbGroup::free(span_cols.len()),
            target.group().clone(),
            IntMatrix::from_columns(target.group().num_generators(), &span_cols),
        )?;
        let witness = match span.preimage(d.normal_form()) {
            None => None,
            Some(coeffs) => {
                let (a, b) = coeffs.split_at(kx_classes.len());
                let mut u = ext_x.zero();
                for (c, k) in a.iter().zip(&kx_classes) {
                    u = u.sub(&scale(c, k)?)?;
                }
                let mut w = ext_y.zero();
                for (c, k) in b.iter().zip(&ky_classes) {
                    w = w.add(&scale(c, k)?)?;
                }
                let phi_x = x.char_class.add(&u)?;
                let phi_y = y.char_class.add(&w)?;
                if push(&phi_x)? != pull(&phi_y)? {
                    return Err(Error::Integrity(format!(
                        "strong-morphism certificate at degree {n} does not verify"
                    )));
                }
                Some((phi_x, phi_y))
            }
        };
        degrees.push(StrongDegree { n, witness });
    }
    Ok(StrongReport { degrees })
}

fn scale(c: &BigInt, k: &ExtClass) -> Result<ExtClass> {
    let coords = k.ext_group().group().scale(c, k.normal_form());
    Ok(k.ext_group().class(&coords))
}
