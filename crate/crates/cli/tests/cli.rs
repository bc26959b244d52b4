use std::path::PathBuf;
use std::process::{Command, Output};

fn braidknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidknot"))
        .args(args)
        .env_remove("BRAIDKNOT_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn signature_prints_both_computations() {
    let o = braidknot(&["signature", "2", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "closed_form=-12 gordon_litherland=-12\n");
}

#[test]
fn alexander_of_trefoil() {
    let o = braidknot(&["alex", "2: 1 1 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 - t + t^2\n");
}

#[test]
fn report_json_and_csv() {
    let o = braidknot(&["report", "10", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 3);
    assert_eq!(v["verdict"], "pairwise distinct");
    assert_eq!(v["genus"], 9);

    let o = braidknot(&["report", "10", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "label,q,k,m,writhe,genus,tau,signature,verdict,obstruction_used"
    );
    assert_eq!(lines.count(), 3);
}

#[test]
fn bad_braid_is_an_error() {
    let o = braidknot(&["alex", "2: 1 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn verify_is_deterministic_and_flags_the_degree_check() {
    let a = braidknot(&["verify"]);
    let b = braidknot(&["verify"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
    let text = stdout(&a);
    let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 1, "{text}");
    assert!(failed[0].starts_with("FAIL [10b]"));
    assert!(text.ends_with("12 checks, 1 failed\n"));
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("braidknot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.toml");
    std::fs::write(&cfg, "format = \"csv\"\nq_max = 8\n").unwrap();

    let run = |extra: &[&str]| {
        let mut args = vec!["report"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_braidknot"))
            .args(&args)
            .env("BRAIDKNOT_CONFIG", &cfg)
            .output()
            .unwrap()
    };
    let o = run(&[]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("label,q,"));
    let qs: std::collections::BTreeSet<&str> =
        text.lines().skip(1).map(|l| l.rsplit(',').nth(8).unwrap()).collect();
    assert_eq!(qs.into_iter().collect::<Vec<_>>(), ["4", "5", "7", "8"]);

    let o = run(&["--format", "text", "--q-max", "5"]);
    assert!(stdout(&o).contains("pairwise distinct"));
    assert!(!stdout(&o).contains("q = 7"));

    std::fs::write(&cfg, "colour = true\n").unwrap();
    assert_eq!(run(&[]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn goeritz_matches_golden_dump() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    let full = std::fs::read_to_string(golden.join("goeritz_full_2_2.txt")).unwrap();
    let reduced = std::fs::read_to_string(golden.join("goeritz_2_2.txt")).unwrap();
    let o = braidknot(&["goeritz", "2", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let (g_full, rest) = text.strip_prefix("G'(K):\n").unwrap().split_once("G(K):\n").unwrap();
    let (g, mu) = rest.split_once("mu=").unwrap();
    let norm = |s: &str| s.split_whitespace().map(|x| x.trim_start_matches('+').to_string()).collect::<Vec<_>>();
    assert_eq!(norm(g_full), norm(&full));
    assert_eq!(norm(g), norm(&reduced));
    assert_eq!(mu.trim(), "11");
}
