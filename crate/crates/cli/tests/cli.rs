use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_ksucc");

fn ksucc(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("KSUCC_CACHE")
        .output()
        .expect("failed to run ksucc")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn tables_match_golden_files() {
    for id in ["T1", "T2", "T3", "T4", "T5", "T6"] {
        for engine in ["formula", "oracle", "both"] {
            let out = ksucc(&["tables", id, "--format", "csv", "--engine", engine]);
            assert!(out.status.success(), "{id} {engine}");
            assert_eq!(stdout(&out), golden(&format!("{id}.csv")), "{id} {engine}");
        }
    }
}

#[test]
fn plain_tables_use_separators_and_flag_fallbacks() {
    let out = ksucc(&["tables", "T1", "--engine", "formula"]);
    assert!(stdout(&out).contains("16,687"));
    let out = ksucc(&["tables", "T6", "--engine", "formula"]);
    let text = stdout(&out);
    assert!(text.contains("39*"));
    assert!(text.contains("closed form inapplicable"));
}

#[test]
fn count_examples() {
    let out = ksucc(&["count", "Dstar", "6", "3", "auto"]);
    assert_eq!(stdout(&out), "192 (engine: oracle)\n");
    let out = ksucc(&["count", "dstar", "5", "2", "formula"]);
    assert_eq!(stdout(&out), "55 (engine: formula)\n");
    let out = ksucc(&["count", "d", "3", "2", "formula"]);
    assert_eq!(stdout(&out), "4 (engine: formula)\n");
    let out = ksucc(&["count", "d", "8", "1", "--engine", "oracle", "--format", "csv"]);
    assert_eq!(stdout(&out), "family,n,k,count,engine\nd,8,1,16687,oracle\n");
}

#[test]
fn exit_codes() {
    assert_eq!(ksucc(&["count", "D", "6", "2", "formula"]).status.code(), Some(3));
    assert_eq!(ksucc(&["count", "D", "12", "5", "oracle"]).status.code(), Some(4));
    assert_eq!(ksucc(&["count", "D", "8", "2", "--cap", "7"]).status.code(), Some(4));
    assert_eq!(ksucc(&["count", "D", "4", "4"]).status.code(), Some(2));
    assert_eq!(ksucc(&["count", "Q", "4", "2"]).status.code(), Some(2));
    assert_eq!(ksucc(&["verify", "CLAIM_NOPE"]).status.code(), Some(2));
    assert_eq!(ksucc(&["tables", "T1", "--format", "bfile"]).status.code(), Some(2));
    assert_eq!(ksucc(&["bfile", "A999999"]).status.code(), Some(2));
    assert_eq!(ksucc(&["verify", "--all", "--n-max", "12"]).status.code(), Some(4));
}

#[test]
fn enumerate_examples() {
    let out = ksucc(&["enumerate", "Dstar", "4", "1"]);
    assert_eq!(stdout(&out), "1432\n2143\n3214\n4321\n");
    let out = ksucc(&["enumerate", "Cstar", "4", "3"]);
    assert_eq!(stdout(&out), "(1 2 3 4)\n");
    let out = ksucc(&["enumerate", "dstar", "2", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
    assert!(String::from_utf8_lossy(&out.stderr).contains("count: 0"));
    let out = ksucc(&["enumerate", "d", "6", "2", "--limit", "2"]);
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn json_outputs_parse_and_carry_engine() {
    let out = ksucc(&["count", "Cstar", "6", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], "39");
    assert_eq!(v["engine"], "oracle");

    let out = ksucc(&["tables", "T5", "--format", "json", "--engine", "formula"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for row in v["rows"].as_array().unwrap() {
        for cell in row["cells"].as_array().unwrap().iter().filter(|c| !c.is_null()) {
            assert!(cell["engine"].is_string());
            assert!(cell["value"].as_str().unwrap().parse::<u64>().is_ok());
        }
    }

    let out = ksucc(&["verify", "CLAIM_C_STAR", "--n-max", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn verify_examples() {
    let out = ksucc(&["verify", "CLAIM_PRIME", "--n-max", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n=7 k=6 Dstar: expected 1603 observed 1603 [pass]"));
    assert!(text.contains("n=5 k=3 Cstar: expected 8 observed 8 [pass]"));
    assert!(text.contains("n=6 k=2 D: inapplicable"));

    let out = ksucc(&["verify", "CLAIM_C_STAR", "--n-max", "8"]);
    assert!(out.status.success());
}

#[test]
fn bfile_is_bit_exact() {
    let out = ksucc(&["bfile", "A000166", "--n-max", "4"]);
    assert_eq!(out.stdout, b"0 1\n1 0\n2 1\n3 2\n4 9\n");
    let out = ksucc(&["bfile", "A000757", "--n-max", "7"]);
    assert_eq!(stdout(&out), "2 0\n3 1\n4 1\n5 8\n6 36\n7 229\n");
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.txt");
    let cache_arg = cache.to_str().unwrap();

    let first = ksucc(&["count", "Dstar", "6", "2", "--cache-file", cache_arg]);
    assert_eq!(stdout(&first), "234 (engine: oracle)\n");
    let second = ksucc(&["count", "Dstar", "6", "2", "--cache-file", cache_arg]);
    assert_eq!(stdout(&second), "234 (engine: oracle, cached)\n");

    // env var selects the same file
    let out = Command::new(BIN)
        .args(["count", "Dstar", "6", "2"])
        .env("KSUCC_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "234 (engine: oracle, cached)\n");

    let mut raw = fs::read_to_string(&cache).unwrap();
    raw.push_str("garbage line\n");
    fs::write(&cache, raw).unwrap();
    let out = ksucc(&["count", "C", "5", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ksucc(&["count", "Cstar", "6", "4", "--cache-file", cache_arg]);
    assert_eq!(stdout(&out), "39 (engine: oracle)\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipping corrupt cache line"));

    // every cached entry agrees with recomputation
    for line in fs::read_to_string(&cache).unwrap().lines() {
        let Ok(entry) = line.parse::<ksucc_cli::cache::CacheEntry>() else { continue };
        let f = &entry.fingerprint;
        let family = ksucc::Family::ALL
            .into_iter()
            .find(|fam| fam.mode() == f.mode && fam.reading() == f.reading && fam.style() == f.style)
            .unwrap();
        let fresh = ksucc::oracle::Oracle::new().count(&family.spec(f.n, f.k).unwrap()).unwrap();
        assert_eq!(entry.count, fresh);
    }
}
