use std::process::{Command, Output};

fn diagmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagmon")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables() {
    let o = diagmon(&["tables", "1", "--max-n", "3", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,1,2,3\nw_n,1,0,2\n");
    let t3 = stdout(&diagmon(&["tables", "3", "--format", "csv"]));
    assert!(t3.lines().any(|l| l.starts_with("8,4140,17007,28337,")));
    let t10 = stdout(&diagmon(&["tables", "10", "--format", "csv"]));
    assert!(t10.contains("F_n,1,1,2,3,5,8,"));
    let t7 = stdout(&diagmon(&["tables", "7", "--format", "csv"]));
    assert!(t7.lines().any(|l| l.starts_with("d_n,1,6,265,126140,") && l.ends_with(",?")));
    assert_eq!(diagmon(&["tables", "12"]).status.code(), Some(2));
}

#[test]
fn compose() {
    let o = diagmon(&["compose", "2", "[{1,2},{-1,-2}]", "[{1,2},{-1,-2}]", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"m\":1,\"product\":\"[{1,2},{-1,-2}]\"}\n");
    assert_eq!(diagmon(&["compose", "2", "[{1,-1}]", "[{1,-1},{2,-2}]"]).status.code(), Some(2));
}

#[test]
fn checks() {
    let o = diagmon(&["check", "rbr", "partition", "2", "pi1,pi2,lam12,rho12"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "verdict: false\nfailures: 12\n");
    let o = diagmon(&["check", "rbr", "partition", "3", "pi2,pi3,pi12,pi23,pi13,lam31,rho12"]);
    assert_eq!(o.status.code(), Some(0));
    let o = diagmon(&[
        "check",
        "rbr",
        "brauer",
        "4",
        "tau14,tau23,sig214,sig231,sig234,sig241,sig314,sig321,sig324,sig341",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failures: 12"));
    let o = diagmon(&["check", "red-circuit", "brauer", "3", "tau13,tau23,sig213,sig321"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "verdict: false\nfailures: 12\n".to_string()));
    assert_eq!(diagmon(&["check", "closure", "brauer", "3", "tau13,tau23,sig213,sig321"]).status.code(), Some(0));
    assert_eq!(diagmon(&["check", "tournament", "transformation", "3", "1->2,2->3,3->1"]).status.code(), Some(0));
    assert_eq!(diagmon(&["check", "tournament", "transformation", "3", "1->2,1->3,2->3"]).status.code(), Some(1));
    assert_eq!(diagmon(&["check", "strong-hall", "brauer", "5"]).status.code(), Some(0));
    assert_eq!(diagmon(&["check", "rbr", "jones", "4", "tau1,bogus"]).status.code(), Some(2));
}

#[test]
fn graphs() {
    let o = stdout(&diagmon(&["graph", "projection", "jones", "5", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["blue"].as_array().unwrap().len(), 10);
    let o = stdout(&diagmon(&["graph", "projection", "partition", "5", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 15);
    let o = stdout(&diagmon(&["graph", "johnson", "4", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!((v["vertices"].as_array().unwrap().len(), v["edges"].as_array().unwrap().len()), (6, 12));
    let dot = stdout(&diagmon(&["graph", "projection", "jones", "4", "--dot", "--set", "tau1,tau3,lam1,lam2"]));
    assert!(dot.contains("[color=red]") && dot.contains("[color=blue]"));
    assert!(stdout(&diagmon(&["graph", "bratteli", "2", "--dot"])).starts_with("digraph"));
    let gh = stdout(&diagmon(&["graph", "graham-houghton", "brauer", "3", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&gh).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);

    let dir = std::env::temp_dir().join(format!("diagmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("j4.dot");
    let o = diagmon(&["graph", "johnson", "4", "--dot", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("graph G {"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_and_counts() {
    let o = diagmon(&["verify", "rbr_iff_generates_jones", "4..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 128 + 1024);
    assert_eq!(diagmon(&["verify", "rank_formula_partition", "2..5"]).status.code(), Some(0));
    let o = diagmon(&["verify", "unknown_id", "1..2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown_id"));
    assert_eq!(stdout(&diagmon(&["count", "stirling2", "10", "4"])), "34105\n");
    assert_eq!(stdout(&diagmon(&["count", "rank", "jones", "10", "4"])), "75\n");
    assert_eq!(stdout(&diagmon(&["count", "min-gensets", "partition", "3"])), "20\n");
    assert_eq!(stdout(&diagmon(&["count", "idgen-subsets", "jones", "4"])), "41\n");
    assert_eq!(
        stdout(&diagmon(&["count", "green", "jones", "4"])),
        "family,n,r,r_classes,l_classes,h_size\njones,4,0,2,2,1\njones,4,2,3,3,1\njones,4,4,1,1,1\n"
    );
}

#[test]
fn dims() {
    let o = stdout(&diagmon(&["dims", "--algebra", "partition", "--n", "3", "--mu", "1,1"]));
    assert_eq!(o, "label,dim\n\"(1,1)\",6\n");
    let o = stdout(&diagmon(&["dims", "--algebra", "tl", "--n", "6"]));
    assert_eq!(o, "label,dim\n\"6\",1\n\"4\",5\n\"2\",9\n\"0\",5\n");
    assert_eq!(diagmon(&["dims", "--algebra", "brauer", "--n", "4", "--mu", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["graph", "projection", "brauer", "4", "--dot", "--seed", "17"];
    assert_eq!(diagmon(&args).stdout, diagmon(&args).stdout);
    let args = ["tables", "9", "--format", "json", "--seed", "3"];
    assert_eq!(diagmon(&args).stdout, diagmon(&["tables", "9", "--format", "json"]).stdout);
}
