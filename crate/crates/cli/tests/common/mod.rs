#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use whitehead::fgab::FgAbGroup;
use whitehead::fixtures;
use whitehead::intlinalg::IntMatrix;
use whitehead::json::{self, ComplexJson, FourDimJson, GammaSystemJson, GroupJson, LadderJson, MatrixJson};
use whitehead::wes::{derive_wes, Ladder};

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(rel: &str) -> PathBuf {
    fixture_dir().join(rel)
}

fn text(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

/// Every fixture file, relative path and contents.
pub fn corpus() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut put = |path: String, body: String| out.push((path, body));

    for (name, m) in [
        ("diag-2-3", IntMatrix::from_rows(&[[2, 0], [0, 3]])),
        ("rank-deficient", IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])),
        ("wide", IntMatrix::from_rows(&[[1, 2, 3, 4], [5, 6, 7, 8]])),
        ("zero", IntMatrix::zeros(2, 3)),
    ] {
        put(format!("matrices/{name}.json"), text(&MatrixJson::from_matrix(&m)));
    }
    put(
        "matrices/huge.json".into(),
        "{\"rows\":1,\"cols\":2,\"entries\":[[\"18014398509481984\",\"27021597764222976\"]]}\n".into(),
    );

    for (name, g) in [
        ("Z", FgAbGroup::free(1)),
        ("Z2", FgAbGroup::of(0, &[2])),
        ("Z3", FgAbGroup::of(0, &[3])),
        ("Z4", FgAbGroup::of(0, &[4])),
        ("Z6", FgAbGroup::of(0, &[6])),
        ("Z2+Z2", FgAbGroup::of(0, &[2, 2])),
        ("Z2+Z4+Z", FgAbGroup::of(1, &[2, 4])),
    ] {
        put(format!("groups/{name}.json"), text(&GroupJson::from_group(&g)));
    }

    let a = fixtures::example_a();
    put("complexes/example-a.json".into(), text(&ComplexJson::from_complex(a.complex())));

    for (name, d) in fixtures::torsion_designs().into_iter().chain(fixtures::free_designs()) {
        let s = d.system().unwrap();
        put(format!("systems/{name}.json"), text(&GammaSystemJson::from_system(&s)));
        let w = derive_wes(&s).unwrap();
        put(format!("ladders/identity-{name}.json"), text(&LadderJson::from_ladder(&Ladder::identity(&w))));
    }
    let (_, _, l) = fixtures::not_strong();
    put("ladders/not-strong.json".into(), text(&LadderJson::from_ladder(&l)));

    for (name, x) in fixtures::four_dim() {
        put(format!("four/{name}.json"), text(&FourDimJson::from_system(&x)));
    }

    put(
        "invalid/dd-nonzero.json".into(),
        text(&json!({
            "top": 4,
            "ranks": [1, 1, 1],
            "differentials": [
                {"rows": 1, "cols": 1, "entries": [[1]]},
                {"rows": 1, "cols": 1, "entries": [[1]]}
            ]
        })),
    );
    let mut tampered: Value =
        serde_json::to_value(GammaSystemJson::from_system(&a.system().unwrap())).unwrap();
    tampered["levels"][1]["pi"] = json!({"rank": 1, "torsion": []});
    tampered["levels"][1]["j"] = json!({"rows": 1, "cols": 1, "entries": [[1]]});
    tampered["levels"][1]["beta_next"] = json!({"rows": 1, "cols": 0, "entries": [[]]});
    put("invalid/exactness.json".into(), text(&tampered));
    put("invalid/bad-torsion.json".into(), "{\"rank\":0,\"torsion\":[4,2]}\n".into());
    put("invalid/not-json.json".into(), "{\"rank\":\n".into());
    out
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_whitehead"))
        .args(args)
        .current_dir(fixture_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Invocations over the corpus with their expected exit codes.
pub fn invocations() -> Vec<(Vec<String>, i32)> {
    let mut v: Vec<(Vec<String>, i32)> = Vec::new();
    let mut add = |args: &[&str], code: i32| v.push((args.iter().map(|s| s.to_string()).collect(), code));
    for m in ["diag-2-3", "rank-deficient", "wide", "zero", "huge"] {
        add(&["snf", &format!("matrices/{m}.json")], 0);
    }
    for g in ["Z", "Z2", "Z3", "Z4", "Z6", "Z2+Z2", "Z2+Z4+Z"] {
        add(&["gamma", &format!("groups/{g}.json")], 0);
    }
    for g in ["Z2", "Z3", "Z4", "Z6", "Z2+Z2"] {
        add(&["gamma", "--oracle", &format!("groups/{g}.json")], 0);
    }
    add(&["gamma", "--oracle", "groups/Z.json"], 2);
    add(&["ext", "groups/Z2.json", "groups/Z3.json"], 0);
    add(&["ext", "groups/Z4.json", "groups/Z6.json"], 0);
    add(&["ext", "groups/Z.json", "groups/Z2+Z4+Z.json"], 0);
    add(&["homology", "complexes/example-a.json"], 0);
    add(&["homology", "invalid/dd-nonzero.json"], 2);
    add(&["homology", "--check-only", "invalid/dd-nonzero.json"], 2);
    add(&["wes", "invalid/exactness.json"], 2);
    add(&["wes", "--check-only", "invalid/exactness.json"], 2);
    add(&["gamma", "invalid/bad-torsion.json"], 2);
    add(&["ext", "invalid/not-json.json", "groups/Z.json"], 2);
    let designs: Vec<String> = fixtures::torsion_designs()
        .into_iter()
        .chain(fixtures::free_designs())
        .map(|(n, _)| n)
        .collect();
    for name in &designs {
        let sys = format!("systems/{name}.json");
        add(&["homology", &sys], 0);
        add(&["wes", &sys], 0);
        add(&["wes", "--check-only", &sys], 0);
        add(&["wes", "--seed", "7", &sys], 0);
        add(&["charext", &sys], 0);
        add(&["charext", "--seed", "5", &sys], 0);
        add(&["check-strong", &sys, &sys, &format!("ladders/identity-{name}.json")], 0);
    }
    add(
        &["check-strong", "systems/not-strong-x.json", "systems/not-strong-y.json", "ladders/not-strong.json"],
        1,
    );
    let four: Vec<String> = fixtures::four_dim().into_iter().map(|(n, _)| n).collect();
    for name in &four {
        let f = format!("four/{name}.json");
        add(&["classify4", &f, &f], 0);
        add(&["wes", &f], 0);
    }
    add(&["classify4", "four/cp2.json", "four/wedge.json"], 1);
    add(&["classify4", "four/hopf2.json", "four/hopf-2.json"], 0);
    add(&["classify4", "four/cp2.json", "four/hopf2.json"], 1);
    add(&["classify4", "four/cp2.json", "four/rp-like.json"], 1);
    v
}

/// Writes the corpus to disk.
pub fn write_corpus() {
    for (rel, body) in corpus() {
        let p = fixture(&rel);
        std::fs::create_dir_all(p.parent().unwrap()).unwrap();
        std::fs::write(p, body).unwrap();
    }
}

pub fn parse_group(v: &Value) -> FgAbGroup {
    json::from_str::<GroupJson>(&v.to_string()).unwrap().to_group().unwrap()
}
