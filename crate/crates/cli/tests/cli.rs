use std::path::{Path, PathBuf};
use std::process::Command;

use dynmult::io;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dynmult(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dynmult"))
        .args(args)
        .env_remove("DYNMULT_TIER")
        .env_remove("DYNMULT_MAX_PAIRS")
        .env_remove("DYNMULT_MAX_COEFF_BITS")
        .env_remove("DYNMULT_TIME_LIMIT")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGULAR: [&str; 5] = [
    "construct",
    "--kind",
    "triangular",
    "--component",
    "x^2 - 3/4",
];

fn triangular_map(dir: &TempDir) -> PathBuf {
    let mut args = TRIANGULAR.to_vec();
    args.extend(["--component", "y^2 - 3/4*x^2 - 21/2*x - 39/8"]);
    let r = dynmult(&args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    write(dir, "tri.json", &r.stdout)
}

#[test]
fn construct_output_is_canonical() {
    let dir = TempDir::new().unwrap();
    let r = dynmult(&["construct", "--kind", "lattes", "--param", "2"]);
    assert_eq!(r.code, 0);
    let f = io::parse_map(&r.stdout).unwrap();
    assert_eq!(io::map_to_json(&f), r.stdout);
    // a product of the file with itself lands on P^1 × P^1 → P^3
    let p = write(&dir, "l.json", &r.stdout);
    let prod = dynmult(&[
        "construct",
        "--kind",
        "product",
        "--map",
        s(&p),
        "--map",
        s(&p),
    ]);
    assert_eq!(prod.code, 0, "{}", prod.stderr);
    let g = io::parse_map(&prod.stdout).unwrap();
    assert_eq!((g.dim(), g.degree()), (3, 4));
}

#[test]
fn text_and_structured_sigma_agree() {
    let dir = TempDir::new().unwrap();
    let map = triangular_map(&dir);
    let text = dynmult(&["sigma", "--map", s(&map)]);
    let json = dynmult(&["sigma", "--map", s(&map), "--format", "structured"]);
    assert_eq!((text.code, json.code), (0, 0));
    let (sp, table) = io::parse_sigma(&json.stdout).unwrap();
    assert!(text.stdout.starts_with(&format!("Sigma_1 = {}\n", sp.poly)));
    let mut n = 0;
    for line in text.stdout.lines().filter(|l| l.starts_with("sigma[")) {
        let (key, val) = line
            .trim_start_matches("sigma[")
            .split_once("] = ")
            .unwrap();
        let (i, j) = key.split_once(',').unwrap();
        assert_eq!(
            table
                .get(i.parse().unwrap(), j.parse().unwrap())
                .to_string(),
            val
        );
        n += 1;
    }
    assert_eq!(n, table.entries.len());
}

#[test]
fn engines_agree_on_p1() {
    let dir = TempDir::new().unwrap();
    let r = dynmult(&[
        "construct",
        "--kind",
        "lattes",
        "--lattes",
        "quartic",
        "--param",
        "3",
    ]);
    let map = write(&dir, "q.json", &r.stdout);
    let outs: Vec<String> = ["quotient", "elimination", "resultant"]
        .iter()
        .map(|e| {
            let r = dynmult(&["sigma", "--map", s(&map), "--engine", e]);
            assert_eq!(r.code, 0, "{e}: {}", r.stderr);
            r.stdout
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[0], outs[2]);
    let plain = dynmult(&[
        "sigma",
        "--map",
        s(&map),
        "--engine",
        "resultant",
        "--mode",
        "plain",
    ]);
    assert_eq!(plain.code, 1);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    // usage
    assert_eq!(dynmult(&["sigma"]).code, 1);
    assert_eq!(dynmult(&["--help"]).code, 0);
    assert_eq!(
        dynmult(&["sigma", "--map", "/nonexistent/map.json"]).code,
        1
    );
    let garbled = write(
        &dir,
        "g.json",
        r#"{"dim": 1, "degree": 2, "coords": ["x0^2 +", "x1^2"]}"#,
    );
    assert_eq!(dynmult(&["sigma", "--map", s(&garbled)]).code, 1);
    // invalid map
    let bad = write(
        &dir,
        "b.json",
        r#"{"dim": 1, "degree": 2, "coords": ["x0^2", "x0*x1"]}"#,
    );
    let r = dynmult(&["sigma", "--map", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a morphism"));
    // resource cap, by flag and by environment
    let map = triangular_map(&dir);
    assert_eq!(
        dynmult(&["--max-pairs", "1", "sigma", "--map", s(&map)]).code,
        3
    );
    let out = Command::new(env!("CARGO_BIN_EXE_dynmult"))
        .args(["sigma", "--map", s(&map)])
        .env("DYNMULT_MAX_PAIRS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // mathematical: spectrum not over Q
    let r = dynmult(&["construct", "--kind", "lattes", "--param", "2"]);
    let l = write(&dir, "l.json", &r.stdout);
    assert_eq!(
        dynmult(&["verify", "--relation", "ueda", "--map", s(&l)]).code,
        4
    );
}

#[test]
fn verify_relations() {
    let dir = TempDir::new().unwrap();
    let map = triangular_map(&dir);
    for rel in ["ueda", "corollary", "dependence"] {
        let r = dynmult(&["verify", "--relation", rel, "--map", s(&map)]);
        assert_eq!(r.code, 0, "{rel}: {}", r.stderr);
        assert!(r.stdout.starts_with("HOLDS"), "{rel}");
    }
    let spec = write(
        &dir,
        "bad.json",
        r#"[{"eigenvalues": [0, 0], "multiplicity": 2}, {"eigenvalues": [3, "21/2"], "multiplicity": 1},
            {"eigenvalues": [-1, "3/2"], "multiplicity": 1}, {"eigenvalues": [-1, "1/2"], "multiplicity": 1},
            {"eigenvalues": [3, "-17/2"], "multiplicity": 1}, {"eigenvalues": [0, -1], "multiplicity": 1}]"#,
    );
    let r = dynmult(&[
        "verify",
        "--relation",
        "ueda",
        "--spectrum",
        s(&spec),
        "--format",
        "structured",
    ]);
    assert_eq!(r.code, 4);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(
        dynmult(&[
            "verify",
            "--relation",
            "ueda",
            "--map",
            s(&map),
            "--spectrum",
            s(&spec)
        ])
        .code,
        1
    );
}

#[test]
fn recover_round_trip() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "s.json",
        r#"[{"eigenvalues": [0, 0], "multiplicity": 1}, {"eigenvalues": [0, 3], "multiplicity": 1},
            {"eigenvalues": [3, "21/2"], "multiplicity": 1}, {"eigenvalues": [-1, "3/2"], "multiplicity": 1},
            {"eigenvalues": [-1, "1/2"], "multiplicity": 1}, {"eigenvalues": [3, "-17/2"], "multiplicity": 1},
            {"eigenvalues": [0, -1], "multiplicity": 1}]"#,
    );
    let r = dynmult(&["recover", "--spectrum", s(&spec), "--format", "structured"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let maps = v.as_array().unwrap();
    assert_eq!(maps.len(), 1);
    let got = io::parse_map(&maps[0]["map"].to_string()).unwrap();
    let map = triangular_map(&dir);
    assert_eq!(
        got,
        io::parse_map(&std::fs::read_to_string(map).unwrap()).unwrap()
    );
}

#[test]
fn scan_and_tiers() {
    let r = dynmult(&["scan", "--kind", "mordell", "--samples", "1,2,-1/3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.ends_with("isospectral\n"));
    assert_eq!(
        dynmult(&["scan", "--kind", "symmetric", "--samples", "2"]).code,
        1
    );
    assert_eq!(
        dynmult(&["scan", "--kind", "nonsense", "--samples", "2"]).code,
        1
    );
    // a = 0 is degenerate: one sample errors, so the family is not reported isospectral
    let r = dynmult(&["scan", "--kind", "mordell", "--samples", "1,0"]);
    assert_eq!(r.code, 4);
}

#[test]
fn monic_report() {
    let r = dynmult(&[
        "monic",
        "--params",
        "1,1,1,1",
        "--check-hypersurface",
        "--fiber",
        "--format",
        "structured",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["generators"][0], "12");
    assert_eq!(v["hypersurface_residual"], "0");
    assert_eq!(v["fiber"]["dimension"], 0);
    assert_eq!(v["fiber"]["degree"], 12);
    assert_eq!(dynmult(&["monic", "--params", "1,1,1"]).code, 1);
}
