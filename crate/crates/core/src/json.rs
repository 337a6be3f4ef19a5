//! JSON forms of matrices, groups, homs and systems.
//!
//! Integers are written as JSON numbers while they fit in `±(2^53 − 1)` and
//! as decimal strings beyond that; both forms are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, Hom};
use crate::homalg::{extension_from_class, ExtClass};
use crate::intlinalg::{IntMatrix, SmithForm};
use crate::wes::{ChainComplex, FourDimSystem, GammaSystem, Ladder, Level, WhiteheadSequence, Witness};

/// Largest integer written as a JSON number.
pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if (-MAX_SAFE_INTEGER..=MAX_SAFE_INTEGER).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Int;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Int, E> {
                Err(E::custom(format!("{v} is not an integer")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Int, E> {
                BigInt::from_str(v.trim())
                    .map(Int)
                    .map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
            }
        }
        d.deserialize_any(V)
    }
}

fn ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().cloned().map(Int).collect()
}

fn bigs(v: &[Int]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Int>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &IntMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_rows().iter().map(|r| ints(r)).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Malformed(format!(
                "matrix declares {}×{} but its entries do not match",
                self.rows, self.cols
            )));
        }
        let entries = self.entries.iter().flat_map(|r| bigs(r)).collect();
        Ok(IntMatrix::from_entries(self.rows, self.cols, entries))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl GroupJson {
    pub fn from_group(g: &FgAbGroup) -> Self {
        GroupJson {
            rank: g.rank(),
            torsion: ints(g.torsion()),
        }
    }

    pub fn to_group(&self) -> Result<FgAbGroup> {
        FgAbGroup::new(self.rank, bigs(&self.torsion))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomJson {
    pub domain: GroupJson,
    pub codomain: GroupJson,
    pub matrix: MatrixJson,
}

impl HomJson {
    pub fn from_hom(f: &Hom) -> Self {
        HomJson {
            domain: GroupJson::from_group(f.domain()),
            codomain: GroupJson::from_group(f.codomain()),
            matrix: MatrixJson::from_matrix(f.matrix()),
        }
    }

    pub fn to_hom(&self) -> Result<Hom> {
        Hom::new(self.domain.to_group()?, self.codomain.to_group()?, self.matrix.to_matrix()?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub top: usize,
    /// `rank C_2, …, rank C_top`.
    pub ranks: Vec<usize>,
    /// `d_3, …, d_top`.
    pub differentials: Vec<MatrixJson>,
}

impl ComplexJson {
    pub fn from_complex(c: &ChainComplex) -> Self {
        ComplexJson {
            top: c.top(),
            ranks: c.ranks().to_vec(),
            differentials: c.differentials().iter().map(MatrixJson::from_matrix).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<ChainComplex> {
        let diffs = self
            .differentials
            .iter()
            .map(MatrixJson::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(self.top, self.ranks.clone(), diffs)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelJson {
    pub n: usize,
    pub pi: GroupJson,
    /// `j_n: Π_n → C_n`.
    pub j: MatrixJson,
    /// `β_{n+1}: C_{n+1} → Π_n`.
    pub beta_next: MatrixJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaSystemJson {
    pub complex: ComplexJson,
    pub levels: Vec<LevelJson>,
}

impl GammaSystemJson {
    pub fn from_system(s: &GammaSystem) -> Self {
        GammaSystemJson {
            complex: ComplexJson::from_complex(s.complex()),
            levels: s
                .levels()
                .iter()
                .enumerate()
                .map(|(k, l)| LevelJson {
                    n: k + 2,
                    pi: GroupJson::from_group(&l.pi),
                    j: MatrixJson::from_matrix(l.j.matrix()),
                    beta_next: MatrixJson::from_matrix(l.beta_next.matrix()),
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<GammaSystem> {
        let c = self.complex.to_complex()?;
        let mut levels = Vec::new();
        for (k, l) in self.levels.iter().enumerate() {
            let n = k + 2;
            if l.n != n {
                return Err(Error::Malformed(format!(
                    "levels must be listed for n = 2, 3, …; found n = {} in position {k}",
                    l.n
                )));
            }
            let pi = l.pi.to_group()?;
            let j = Hom::new(pi.clone(), c.chain_group(n), l.j.to_matrix()?)
                .map_err(|e| Error::Malformed(format!("j{n}: {e}")))?;
            let beta_next = Hom::new(c.chain_group(n + 1), pi.clone(), l.beta_next.to_matrix()?)
                .map_err(|e| Error::Malformed(format!("β{}: {e}", n + 1)))?;
            levels.push(Level { pi, j, beta_next });
        }
        GammaSystem::new(c, levels)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FourDimJson {
    #[serde(rename = "H2")]
    pub h2: GroupJson,
    #[serde(rename = "H3")]
    pub h3: GroupJson,
    #[serde(rename = "H4")]
    pub h4: GroupJson,
    pub b4: HomJson,
    /// A cocycle on the canonical resolution of `H₃` with values in
    /// `Coker b₄`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi3_class: Option<HomJson>,
}

impl FourDimJson {
    pub fn from_system(x: &FourDimSystem) -> Self {
        FourDimJson {
            h2: GroupJson::from_group(x.h2()),
            h3: GroupJson::from_group(x.h3()),
            h4: GroupJson::from_group(x.h4()),
            b4: HomJson::from_hom(x.b4()),
            pi3_class: (!x.pi3_class().is_zero()).then(|| HomJson::from_hom(x.pi3_class().cocycle())),
        }
    }

    pub fn to_system(&self) -> Result<FourDimSystem> {
        let pi3 = self.pi3_class.as_ref().map(HomJson::to_hom).transpose()?;
        FourDimSystem::new(
            self.h2.to_group()?,
            self.h3.to_group()?,
            self.h4.to_group()?,
            self.b4.to_hom()?,
            pi3,
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SmithJson {
    pub u: MatrixJson,
    pub d: MatrixJson,
    pub v: MatrixJson,
    pub invariants: Vec<Int>,
    pub rank: usize,
}

impl SmithJson {
    pub fn from_smith(s: &SmithForm) -> Self {
        SmithJson {
            u: MatrixJson::from_matrix(s.u()),
            d: MatrixJson::from_matrix(s.d()),
            v: MatrixJson::from_matrix(s.v()),
            invariants: ints(s.invariants()),
            rank: s.rank(),
        }
    }
}

/// An `Ext` class: the `Ext` group and the class in its coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct ExtClassJson {
    pub group: GroupJson,
    pub coordinates: Vec<Int>,
    pub split: bool,
}

impl ExtClassJson {
    pub fn from_class(c: &ExtClass) -> Self {
        ExtClassJson {
            group: GroupJson::from_group(c.ext_group().group()),
            coordinates: ints(c.normal_form()),
            split: c.is_zero(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WesDegreeJson {
    pub n: usize,
    #[serde(rename = "H")]
    pub homology: GroupJson,
    pub gamma: GroupJson,
    pub b_next: HomJson,
    pub coker_b: GroupJson,
    pub ker_b: GroupJson,
    pub pi: GroupJson,
    pub characteristic_class: ExtClassJson,
    pub pi_class: ExtClassJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct WesJson {
    pub degrees: Vec<WesDegreeJson>,
}

impl WesJson {
    pub fn from_sequence(w: &WhiteheadSequence) -> Self {
        WesJson {
            degrees: w
                .degrees
                .iter()
                .map(|d| WesDegreeJson {
                    n: d.n,
                    homology: GroupJson::from_group(d.homology()),
                    gamma: GroupJson::from_group(&d.gamma),
                    b_next: HomJson::from_hom(&d.b_next),
                    coker_b: GroupJson::from_group(&d.coker_b.group),
                    ker_b: GroupJson::from_group(&d.ker_b.group),
                    pi: GroupJson::from_group(extension_from_class(&d.pi_class).middle()),
                    characteristic_class: ExtClassJson::from_class(&d.char_class),
                    pi_class: ExtClassJson::from_class(&d.pi_class),
                })
                .collect(),
        }
    }
}

/// `f_2, …, f_{last+1}` and `γ_2, …, γ_last`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderJson {
    pub f: Vec<HomJson>,
    pub gamma: Vec<HomJson>,
}

impl LadderJson {
    pub fn from_ladder(l: &Ladder) -> Self {
        LadderJson {
            f: l.f.iter().map(HomJson::from_hom).collect(),
            gamma: l.gamma.iter().map(HomJson::from_hom).collect(),
        }
    }

    pub fn to_ladder(&self) -> Result<Ladder> {
        Ok(Ladder {
            f: self.f.iter().map(HomJson::to_hom).collect::<Result<_>>()?,
            gamma: self.gamma.iter().map(HomJson::to_hom).collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub f2: HomJson,
    pub f3: HomJson,
    pub f4: HomJson,
}

impl WitnessJson {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessJson {
            f2: HomJson::from_hom(&w.f2),
            f3: HomJson::from_hom(&w.f3),
            f4: HomJson::from_hom(&w.f4),
        }
    }
}

/// Compact JSON.
pub fn to_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("DTOs serialize")
}

pub fn from_str<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
}
