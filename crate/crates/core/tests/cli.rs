use topoidx::cli::run_captured;

fn run(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("topoidx").chain(args.iter().copied()))
}

#[test]
fn indices_from_each_source() {
    let dir = std::env::temp_dir().join(format!("topoidx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("c5.txt");
    std::fs::write(&edges, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let g6 = dir.join("k4.g6");
    std::fs::write(&g6, "C~\nBw\n").unwrap();

    let (code, out, _) = run(&["indices", "--input", edges.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "wiener,harary,m1,m2,pi1,pi2\n15,15/2,20,20,32,1024\n");

    let (code, out, _) = run(&["indices", "--input", g6.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);

    let (code, out, _) = run(&["indices", "--g6", "C~", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["harary"], "6/1");
    assert_eq!(v["pi2"], "531441");

    let (code, out, _) = run(&["indices", "--family", "bouquet", "--lengths", "3,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("m2=40"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("topoidx-crossing-{}.csv", std::process::id()));
    let (code, out, _) = run(&["crossing", "--from", "19", "--to", "21", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,h_g1,h_g2,sign\n19,"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn extremal_report_formats() {
    let (code, out, _) = run(&["extremal", "--class", "eulerian", "--n", "5", "--index", "wiener", "--direction", "max", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["best_value"], "15");
    assert_eq!(v["second_value"], "14");
    assert_eq!(v["scan_size"], 38);
    assert_eq!(v["index"], "wiener");
    assert_eq!(v["direction"], "max");
}

#[test]
fn claim1_over_a_range() {
    let (code, out, _) = run(&["claim1", "--n-max", "12", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().skip(1).all(|l| l.split(',').nth(8) == Some("true")));
}

#[test]
fn rejects_unknown_values() {
    for args in [
        &["extremal", "--class", "trees", "--n", "5", "--index", "wiener", "--direction", "max"][..],
        &["extremal", "--class", "eulerian", "--n", "5", "--index", "randic", "--direction", "max"],
        &["claim1", "--a", "3"],
        &["family", "--kind", "star", "--n", "5"],
        &["indices", "--g6", "C~", "--format", "xml"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}
