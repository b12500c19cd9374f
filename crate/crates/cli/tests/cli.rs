use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn subgame(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subgame"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn gen_n0_writes_empty_payload() {
    let dir = TempDir::new().unwrap();
    let out = subgame(dir.path(), &["gen", "--n", "0", "--model", "iid", "--p", "0.5", "--seed", "1", "-o", "g.txt"]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(dir.path().join("g.txt")).unwrap();
    assert_eq!(text, "SUBGAME/1\nn=0\nbits=\n");
    assert!(stdout(&out).contains("edge_count: 0"));
}

#[test]
fn gen_lsb_n2_solves_to_expected_table() {
    let dir = TempDir::new().unwrap();
    let out = subgame(dir.path(), &["gen", "--n", "2", "--model", "lsb", "--k", "0", "--seed", "7", "-o", "g.txt"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("win_count: 1"));
    let text = std::fs::read_to_string(dir.path().join("g.txt")).unwrap();
    let game = subgame_core::deserialize(&text).unwrap();
    assert_eq!(subgame_core::solve_classical(&game).to_vec(), vec![0, 1, 0]);
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    for name in ["a.txt", "b.txt"] {
        let out = subgame(dir.path(), &["gen", "--n", "70", "--model", "lsb", "--seed", "12", "-o", name]);
        assert!(out.status.success());
    }
    let a = std::fs::read(dir.path().join("a.txt")).unwrap();
    let b = std::fs::read(dir.path().join("b.txt")).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.last(), Some(&b'\n'));
}

#[test]
fn gen_usage_errors() {
    let dir = TempDir::new().unwrap();
    let cases: &[&[&str]] = &[
        &["gen", "--n", "3", "--model", "iid", "--p", "1.5", "--seed", "1", "-o", "g"],
        &["gen", "--n", "3", "--model", "iid", "--seed", "1", "-o", "g"],
        &["gen", "--n", "3", "--model", "lsb", "--k", "0", "--seed", "1", "-o", "g"],
        &["gen", "--n", "3", "--model", "iid", "--p", "0.5", "-o", "g"],
        &["gen", "--n", "x", "--model", "iid", "--p", "0.5", "--seed", "1", "-o", "g"],
    ];
    for args in cases {
        assert_eq!(subgame(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
    let out = subgame(
        dir.path(),
        &["gen", "--n", "3", "--model", "iid", "--p", "0.5", "--seed", "1", "-o", "missing/dir/g"],
    );
    assert_eq!(out.status.code(), Some(1));
}

fn write_game(dir: &Path, name: &str, game: &subgame_core::Game) {
    std::fs::write(dir.join(name), subgame_core::serialize(game)).unwrap();
}

#[test]
fn solve_classical_examples() {
    let dir = TempDir::new().unwrap();
    write_game(dir.path(), "zero.txt", &subgame_core::Game::zero(6));
    write_game(dir.path(), "set12.txt", &subgame_core::Game::from_subtraction_set(3, &[1, 2]));

    let out = subgame(dir.path(), &["solve", "-i", "zero.txt", "--method", "classical", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["win"], 0);
    assert_eq!(v["queries"], 21);
    assert_eq!(v["n"], 6);
    assert_eq!(v["method"], "classical");

    let out = subgame(dir.path(), &["solve", "-i", "set12.txt", "--method", "classical"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("win: 0"));
}

#[test]
fn solve_quantum_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let game = subgame_core::sample_lsb(subgame_core::LsbConfig::new(30, 0), subgame_core::RngSeed::new(3))
        .unwrap()
        .game;
    write_game(dir.path(), "g.txt", &game);
    for method in ["quantum-model", "quantum-sim"] {
        let args = ["solve", "-i", "g.txt", "--method", method, "--seed", "5", "--trials", "1", "--json"];
        let a = subgame(dir.path(), &args);
        let b = subgame(dir.path(), &args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        let v = json(&a);
        for key in ["n", "method", "win", "queries", "repetitions", "seed", "trials", "win_frequency"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["repetitions"], 10);
        assert_eq!(v["seed"], 5);
    }

    let out = subgame(
        dir.path(),
        &["solve", "-i", "g.txt", "--method", "quantum-model", "--seed", "5", "--trials", "50", "--json"],
    );
    let v = json(&out);
    assert_eq!(v["trials"], 50);
    let freq = v["win_frequency"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&freq));
}

#[test]
fn solve_errors() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "SUBGAME/1\nn=2\nbits=ZZ\n").unwrap();
    write_game(dir.path(), "ok.txt", &subgame_core::Game::zero(3));
    let bad = subgame(dir.path(), &["solve", "-i", "bad.txt", "--method", "classical"]);
    assert_eq!(bad.status.code(), Some(3));
    let missing = subgame(dir.path(), &["solve", "-i", "nope.txt", "--method", "classical"]);
    assert_eq!(missing.status.code(), Some(1));
    let no_seed = subgame(dir.path(), &["solve", "-i", "ok.txt", "--method", "quantum-model"]);
    assert_eq!(no_seed.status.code(), Some(2));
    let bad_method = subgame(dir.path(), &["solve", "-i", "ok.txt", "--method", "oracle"]);
    assert_eq!(bad_method.status.code(), Some(2));
}

#[test]
fn help_exits_zero_everywhere() {
    let dir = TempDir::new().unwrap();
    for sub in ["gen", "solve", "lemma1", "census", "error-rate", "scaling"] {
        assert_eq!(subgame(dir.path(), &[sub, "--help"]).status.code(), Some(0), "{sub}");
    }
    assert_eq!(subgame(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn scaling_classical_full_rows() {
    let dir = TempDir::new().unwrap();
    let out = subgame(dir.path(), &["scaling", "--methods", "classical-full", "--n-list", "10,20", "--trials", "1"]);
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("scaling.csv")).unwrap();
    assert_eq!(
        csv,
        "n,method,trials,seed,mean_queries,stddev_queries\n10,classical-full,1,0,55,0\n20,classical-full,1,0,210,0\n"
    );
    let bad = subgame(dir.path(), &["scaling", "--methods", "classical", "--n-list", "10,20"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn census_fixture_game() {
    let dir = TempDir::new().unwrap();
    let out = subgame(dir.path(), &["census", "--n", "2", "--samples", "1", "--model", "zero"]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("census.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,k,sample_index,seed,crucial_count,total_bits,fraction"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[4], "2");
    assert_eq!(row[5], "3");
}

#[test]
fn lemma1_writes_csv_and_pass_line() {
    let dir = TempDir::new().unwrap();
    let args = ["lemma1", "--n", "200", "--samples", "5000", "--k", "0", "--seed", "3"];
    let out = subgame(dir.path(), &args);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).starts_with("PASS"));
    let first = std::fs::read(dir.path().join("lemma1.csv")).unwrap();
    assert!(first.starts_with(b"n,k,samples,seed,mean,stderr,threshold,pass\n200,0,5000,3,"));
    assert!(first.ends_with(b",true\n"));

    // Re-runs are byte-identical, regardless of the worker count.
    let again = Command::new(env!("CARGO_BIN_EXE_subgame"))
        .current_dir(dir.path())
        .env("SUBGAME_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert!(again.status.success());
    assert_eq!(std::fs::read(dir.path().join("lemma1.csv")).unwrap(), first);
}

#[test]
fn claim_failure_exits_four() {
    // One sample at n = 2: some seeds flip a bit that leaves the game losing.
    let dir = TempDir::new().unwrap();
    let mut saw_failure = false;
    for seed in 0..20 {
        let s = seed.to_string();
        let out = subgame(dir.path(), &["lemma1", "--n", "2", "--samples", "1", "--k", "0", "--seed", &s]);
        match out.status.code() {
            Some(0) => assert!(stdout(&out).starts_with("PASS")),
            Some(4) => {
                assert!(stdout(&out).starts_with("FAIL"));
                saw_failure = true;
            }
            other => panic!("unexpected exit {other:?}"),
        }
    }
    assert!(saw_failure);
}

#[test]
fn error_rate_and_invalid_threads() {
    let dir = TempDir::new().unwrap();
    let out = subgame(
        dir.path(),
        &["error-rate", "--n", "32", "--games", "2", "--runs-per-game", "20", "--mode", "statevector", "--seed", "4"],
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("error_rate.csv")).unwrap();
    assert!(csv.starts_with("n,mode,games,runs_per_game,seed,error_rate,stderr,threshold,pass\n32,statevector,2,20,4,"));

    let bad = Command::new(env!("CARGO_BIN_EXE_subgame"))
        .current_dir(dir.path())
        .env("SUBGAME_THREADS", "many")
        .args(["census", "--n", "2", "--samples", "1", "--model", "zero"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
