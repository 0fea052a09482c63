use std::process::{Command, Output};

fn rpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpl"))
        .args(args)
        .env_remove("RPL_DEFAULT_ORDER")
        .output()
        .expect("spawn rpl")
}

fn stdout(args: &[&str]) -> String {
    let out = rpl(args);
    assert!(
        out.status.success(),
        "rpl {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const CLASSIFY_9: &str = "\
partitions of 9 by srank mod 4 (rows) and stcrank mod 5 (columns)
srank\\stcrank  0              1              2              3              4
0              (4^1,5^1)      (9^1)          (2^2,5^1)      (2^1,7^1)      (1^2,7^1)
               (1^1,3^1,5^1)  (1^2,2^1,5^1)  (1^1,4^2)      (1^1,2^1,6^1)  (2^3,3^1)
               (1^3,2^1,4^1)  (1^4,5^1)      (1^3,3^2)      (1^6,3^1)      (1^2,2^2,3^1)
               (3^3)          (1^5,2^2)      (1^4,2^1,3^1)  (1^1,2^4)      (1^9)
2              (1^3,6^1)      (1^2,3^1,4^1)  (1^1,8^1)      (1^1,2^2,4^1)  (3^1,6^1)
               (1^3,2^3)      (1^1,2^1,3^2)  (1^5,4^1)      (1^7,2^1)      (2^1,3^1,4^1)
";

const ORBITS_9: &str = "\
orbits of the partitions of 9
orbit  srank  c5=0       c5=1           c5=2           c5=3           c5=4
1      0      (1^4,5^1)  (1^3,3^2)      (1^4,2^1,3^1)  (1^1,2^1,6^1)  (2^2,5^1)
2      0      (3^3)      (1^9)          (1^1,3^1,5^1)  (1^2,2^2,3^1)  (9^1)
3      0      (1^5,2^2)  (2^3,3^1)      (1^2,7^1)      (4^1,5^1)      (1^3,2^1,4^1)
4      0      (2^1,7^1)  (1^2,2^1,5^1)  (1^1,2^4)      (1^6,3^1)      (1^1,4^2)
5      2      (3^1,6^1)  (1^1,2^2,4^1)  (1^7,2^1)      (1^1,2^1,3^2)  (1^5,4^1)
6      2      (1^3,2^3)  (1^3,6^1)      (2^1,3^1,4^1)  (1^1,8^1)      (1^2,3^1,4^1)
";

// rank, crank and srank worked by hand; stcrank = crank(pi1) + srank/2 + psi.
const STATS_4: &str = "\
partition,weight,rank,crank,srank,stcrank,c5core\r
4^1,4,3,4,-4,-2,4\r
1^1.3^1,4,1,0,0,1,3\r
2^2,4,0,2,0,-1,0\r
1^2.2^1,4,-1,-2,0,0,2\r
1^4,4,-3,-4,4,2,1\r
";

#[test]
fn classify_golden() {
    assert_eq!(stdout(&["classify"]), CLASSIFY_9);
    assert_eq!(
        stdout(&["classify", "--n", "9", "--format", "text"]),
        CLASSIFY_9
    );
}

#[test]
fn orbits_golden() {
    assert_eq!(stdout(&["orbits", "--n", "9"]), ORBITS_9);
}

#[test]
fn stats_golden() {
    let args = [
        "stats",
        "--n",
        "4",
        "--stats",
        "rank,crank,srank,stcrank,c5core",
        "--format",
        "csv",
    ];
    assert_eq!(stdout(&args), STATS_4);
}

#[test]
fn stats_json_is_one_object_per_line() {
    let out = stdout(&[
        "stats",
        "--n",
        "6",
        "--stats",
        "srank,stcrank",
        "--format",
        "json",
    ]);
    let lines: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 11);
    for v in &lines {
        assert_eq!(v["weight"], 6);
        assert!(v["stats"]["srank"].as_i64().unwrap() % 2 == 0);
    }
}

#[test]
fn cores_filters_by_crank() {
    let all = stdout(&["cores", "--n", "9", "--format", "csv"]);
    assert_eq!(all.lines().count(), 6);
    let zero = stdout(&["cores", "--n", "9", "--crank", "0", "--format", "csv"]);
    let rows: Vec<&str> = zero.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("1^4.5^1,9,"));
}

#[test]
fn verify_is_deterministic_across_runs_and_threads() {
    let base = [
        "verify", "all", "--max-n", "14", "--order", "12", "--format", "json",
    ];
    let first = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let again = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let wide = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(first, again);
    assert_eq!(first, wide);
    assert_eq!(
        first.lines().count(),
        stdout(&["verify", "--list"]).lines().count()
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        rpl(&["verify", "pentagonal", "--order", "40"])
            .status
            .code(),
        Some(0)
    );
    let broken = rpl(&["verify", "stcrank-table", "--mutation", "negate-psi"]);
    assert_eq!(broken.status.code(), Some(1));
    let text = String::from_utf8(broken.stdout).unwrap();
    assert!(text.starts_with("FAIL stcrank-table"));
    assert!(text.contains("counterexample:"));
    assert_eq!(rpl(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(rpl(&["orbits", "--n", "10"]).status.code(), Some(2));
    assert_eq!(
        rpl(&["stats", "--n", "4", "--stats", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rpl(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn default_order_from_environment() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_rpl"))
            .args(args)
            .env("RPL_DEFAULT_ORDER", "17")
            .output()
            .unwrap();
        String::from_utf8(out.stdout).unwrap()
    };
    assert!(run(&["verify", "pentagonal"]).contains("[order=17]"));
    assert!(run(&["verify", "pentagonal", "--order", "23"]).contains("[order=23]"));
}

#[test]
fn list_names_every_check_once() {
    let out = stdout(&["verify", "--list"]);
    let names: Vec<&str> = out
        .lines()
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    let mut unique = names.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), names.len());
    for name in [
        "stcrank-table",
        "orbits-table",
        "roots-of-unity",
        "elegant-core",
        "partition-count",
    ] {
        assert!(names.contains(&name), "{name} missing from --list");
    }
}
