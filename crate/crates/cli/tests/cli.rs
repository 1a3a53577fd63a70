use std::io::Write;
use std::process::Command;

use schur_kit_cli::{run, CliConfig, Format};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schur-kit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schur-kit"))
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["lr", "--nu", "[5,3,2,1]", "--lambda", "[3,1]", "--mu", "[4,2,1]"]), "3\n");
    assert_eq!(ok(&["dim", "--gl", "[4,2,1]", "--rank", "6"]), "2520\n");
    assert_eq!(
        ok(&["koszul-check", "--rank", "3", "--max-degree", "6", "--format", "text"]),
        "H_i = 0 for i ≥ 1; H_0 = 1·(degree 0)\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["koszul-check", "--rank", "3", "--max-degree", "6"])).unwrap();
    assert_eq!(json["summary"], "H_i = 0 for i ≥ 1; H_0 = 1·(degree 0)");
}

#[test]
fn lr_tableaux_listing() {
    let out = ok(&["lr", "--nu", "[5,3,2,1]", "--lambda", "[3,1]", "--mu", "[4,2,1]", "--tableaux", "--format", "text"]);
    assert_eq!(out, "3\n1111223\n1121213\n1121312\n");
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["tensor", "--lambda", "[2,1]", "--mu", "[1]"],
        &["kron", "--lambda", "[2,1]", "--mu", "[2,1]", "--nu", "[3]"],
        &["kron", "--lambda", "[2,1]", "--mu", "[2,1]"],
        &["pieri", "--lambda", "[2,2,1]", "--size", "2"],
        &["branch", "--nu", "[2,1]", "--split", "2,1"],
        &["branch", "--nu", "[2,1]", "--all"],
        &["branch", "--nu", "[2,1]"],
        &["dim", "--sym", "[5,3,2]", "--method", "det"],
        &["char", "--lambda", "[2,1]", "--class", "[3]"],
        &["table", "--n", "4"],
        &["plethysm", "--outer", "S[2]", "--inner", "S[1,1]", "--max-degree", "4"],
        &["plethysm", "--outer", "S[2]", "--inner", "S[1]", "--transpose"],
        &["derive", "--object", "S[2,1]", "--times", "2"],
        &["derive", "--object", "S[2,1]", "--nu", "[1,1]"],
        &["coadd", "--object", "S[2]"],
        &["comult", "--object", "S[2,1]"],
        &["transpose", "--object", "S[3,1]"],
        &["hilbert", "--object", "C<2>", "--order", "3"],
        &["hilbert", "--tca", "c1", "--rank", "2", "--order", "3"],
        &["ehilbert", "--object", "C<3>", "--order", "3"],
        &["tca-decompose", "--tca", "S[2]", "--max-degree", "6"],
        &["efw", "--degrees", "0,2,4"],
        &["betti", "--degrees", "0,1,2,3", "--rank", "3"],
        &["koszul-check", "--rank", "1", "--max-degree", "3"],
        &["matchings", "--n", "3"],
    ];
    for args in cases {
        for format in ["json", "csv", "text"] {
            let mut a = args.to_vec();
            a.extend(["--format", format]);
            let out = ok(&a);
            assert!(!out.trim().is_empty(), "{a:?}");
            if format == "json" {
                serde_json::from_str::<serde_json::Value>(&out).unwrap_or_else(|e| panic!("{a:?}: {e}"));
            }
        }
    }
}

#[test]
fn outputs() {
    assert_eq!(
        ok(&["pieri", "--lambda", "[2,2,1]", "--size", "1", "--format", "text"]),
        "[3,2,1]\n[2,2,2]\n[2,2,1,1]\n"
    );
    assert_eq!(
        ok(&["plethysm", "--outer", "S[2]", "--inner", "S[2]", "--max-degree", "4", "--format", "text"]),
        "S[4] + S[2,2] (degrees ≤ 4)\n"
    );
    assert_eq!(
        ok(&["betti", "--alpha", "[1]", "--beta", "[3]", "--n-rows", "2", "--rank", "2", "--format", "csv"]),
        "index,0,2,4\n0,2,0,0\n1,0,4,0\n2,0,0,2\n"
    );
    assert_eq!(
        ok(&["hilbert", "--tca", "u1:2", "--generators", "[1]", "--twist", "-1", "--rank", "3", "--order", "2", "--format", "csv"]),
        "degree,dimension\n0,0\n1,3\n2,18\n"
    );
    assert_eq!(ok(&["hilbert", "--object", "C<2>", "--order", "3", "--format", "text"]), "0 0 1 0\n");
    assert_eq!(ok(&["tensor", "--lambda", "[1]", "--mu", "[1]"]).trim(),
        r#"{"terms":[{"multiplicity":"1","partition":[2]},{"multiplicity":"1","partition":[1,1]}],"truncation_degree":null}"#);
    let efw: serde_json::Value = serde_json::from_str(&ok(&["efw", "--degrees", "0,2,4"])).unwrap();
    assert_eq!(efw["alpha"], serde_json::json!([1]));
    assert_eq!(efw["beta"], serde_json::json!([3]));
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = call(&["lr", "--nu", "[1,2]", "--lambda", "[1]", "--mu", "[1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("weakly decreasing"));
    assert_eq!(call(&["lr", "--nu", "[2]"]).0, 2);
    assert_eq!(call(&["char", "--lambda", "[2]", "--class", "[1]"]).0, 2);
    assert_eq!(call(&["efw", "--alpha", "[2]", "--beta", "[2]", "--n-rows", "1"]).0, 2);
    assert_eq!(call(&["plethysm", "--outer", "S[2]", "--inner", "S[] + S[1]"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    let (code, _, err) = call(&["table", "--n", "15"]);
    assert_eq!(code, 3);
    assert!(err.contains("limit"));
    assert_eq!(call(&["char", "--lambda", "[33]", "--class", "[33]"]).0, 3);
}

#[test]
fn help_texts() {
    let subcommands = [
        "lr", "tensor", "kron", "pieri", "branch", "dim", "char", "table", "plethysm", "derive", "coadd",
        "comult", "transpose", "hilbert", "ehilbert", "tca-decompose", "efw", "betti", "koszul-check",
        "matchings",
    ];
    for s in subcommands {
        let (code, out, _) = call(&[s, "--help"]);
        assert_eq!(code, 0, "{s}");
        assert!(out.contains("Usage: schur-kit"), "{s}");
    }
    assert!(ok(&["lr", "--help"]).contains("Littlewood–Richardson"));
}

#[test]
fn batch_queries_keep_order() {
    let dir = std::env::temp_dir().join(format!("schur-kit-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lr.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# nu lambda mu\n[5,3,2,1] [3,1] [4,2,1]\n[3,2,1] [2,1] [2,1]\n[2] [1] [1,1]").unwrap();
    let p = path.to_str().unwrap();
    let serial = ok(&["lr", "--batch", p, "--format", "text"]);
    assert_eq!(serial, "3\n2\n0\n");
    assert_eq!(ok(&["lr", "--batch", p, "--jobs", "3", "--format", "text"]), serial);
    let kpath = dir.join("kron.txt");
    std::fs::write(&kpath, "[2,1] [2,1] [3]\n[2,1] [2,1] [2,1]\n[2,1] [2,1] [1,1,1]\n").unwrap();
    assert_eq!(ok(&["kron", "--batch", kpath.to_str().unwrap(), "--jobs", "2", "--format", "text"]), "1\n1\n1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn random_plans_follow_seed() {
    let a = ok(&["efw", "--random", "--seed", "7", "--count", "5"]);
    let b = ok(&["efw", "--random", "--seed", "7", "--count", "5"]);
    assert_eq!(a, b);
    let plans: Vec<serde_json::Value> = serde_json::from_str(&a).unwrap();
    assert_eq!(plans.len(), 5);
}

#[test]
fn config_parsing() {
    let cfg = CliConfig::parse("# comment\ncache_size = 10\nmax_table_n=6\noutput_format = text\n").unwrap();
    assert_eq!(cfg.cache_size, 10);
    assert_eq!(cfg.max_table_n, 6);
    assert_eq!(cfg.max_degree_default, 12);
    assert_eq!(cfg.output_format, Format::Text);
    assert!(CliConfig::parse("cache_size = 0").is_err());
    assert!(CliConfig::parse("colour = red").is_err());
    assert!(CliConfig::parse("cache_size").is_err());
}

#[test]
fn config_file_from_environment() {
    let path = std::env::temp_dir().join(format!("schur-kit-cfg-{}.conf", std::process::id()));
    std::fs::write(&path, "max_table_n = 5\noutput_format = csv\nmax_degree_default = 4\n").unwrap();
    let out = binary()
        .args(["table", "--n", "6"])
        .env("SCHUR_KIT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = binary()
        .args(["dim", "--sym", "[2,1]"])
        .env("SCHUR_KIT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "dimension\n2\n");
    let out = binary()
        .args(["matchings", "--n", "1", "--format", "text"])
        .env("SCHUR_KIT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "S[2]\n");
    let out = binary()
        .args(["plethysm", "--outer", "S[3]", "--inner", "S[2]", "--format", "text"])
        .env("SCHUR_KIT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0 (degrees ≤ 4)\n");
    std::fs::remove_file(&path).unwrap();
    let out = binary()
        .args(["dim", "--sym", "[2,1]"])
        .env("SCHUR_KIT_CONFIG", "/nonexistent/schur-kit.conf")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["comult", "--object", "S[3,1] + S[2,2]"];
    let runs: Vec<Vec<u8>> = (0..3).map(|_| binary().args(args).output().unwrap().stdout).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    assert!(!runs[0].is_empty());
}
