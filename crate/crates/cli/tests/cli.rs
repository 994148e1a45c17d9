use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delorder"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("delorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn order_tables() {
    assert_eq!(
        stdout(&["order-table", "A2", "--format", "csv"]),
        golden("sym3.csv")
    );
    assert_eq!(
        stdout(&["order-table", "A3", "--format", "csv"]),
        golden("sym4.csv")
    );
    let text = stdout(&["order-table", "A2"]);
    assert_eq!(text.lines().nth(3), Some("4 | 2 3 1 | s2s1"));
}

#[test]
fn compare_words() {
    assert_eq!(
        stdout(&["compare", "a1a2a3a2a1", "a1a2a3a1a2a2", "-n", "3"]),
        "less\n"
    );
    assert_eq!(stdout(&["compare", "a3a3", "a1a2a3a1a2a2"]), "greater\n");
    assert_eq!(stdout(&["compare", "e", "e"]), "equal\n");
}

#[test]
fn d5_duality_defect() {
    let out = stdout(&["duality", "D5", "--defects-only"]);
    assert!(out
        .lines()
        .any(|l| l.trim() == "s1s2s4s5 769 + 960 = 1729 (expected 1921)"));
    let json = stdout(&["duality", "A3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["order"], 24);
}

#[test]
fn normal_forms_and_bruhat() {
    assert_eq!(stdout(&["nf", "A3", "s2s1s2"]), "s1s2s1\n");
    assert!(stdout(&["nf", "B3", "--all", "--jobs", "3"]).starts_with("48 elements"));
    assert_eq!(stdout(&["bruhat", "A3", "s1", "s2s1"]), "less\n");
    assert_eq!(stdout(&["bruhat", "A2", "s1s2", "s2s1"]), "incomparable\n");
}

#[test]
fn streams_and_artinian_reports() {
    assert_eq!(
        stdout(&["stream", "I2inf", "-n", "4"]),
        "1 e\n2 s1\n3 s2\n4 s2s1\n"
    );
    let report = stdout(&["artinian", "Atilde2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(doc["artinian_for_all_orders"], true);
    assert_eq!(doc["tag"], "affine-or-compact-hyperbolic-candidate");
    assert!(stdout(&["artinian", "U3"]).contains("tag: other"));
}

#[test]
fn label_writes_files() {
    let (table, dot) = (scratch("table.csv"), scratch("graph.dot"));
    let args = [
        "label",
        "A3",
        "--format",
        "csv",
        "--out",
        table.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ];
    assert_eq!(stdout(&args), "");
    assert_eq!(std::fs::read_to_string(&table).unwrap(), golden("sym4.csv"));
    assert!(std::fs::read_to_string(&dot)
        .unwrap()
        .starts_with("graph cayley {"));
}

#[test]
fn matrix_files_and_generator_orders() {
    let path = scratch("a2.json");
    std::fs::write(&path, r#"{"rank": 2, "m": [[1, 3], [3, 1]]}"#).unwrap();
    assert_eq!(
        stdout(&["order-table", path.to_str().unwrap(), "--format", "csv"]),
        golden("sym3.csv")
    );
    let flipped = stdout(&["order-table", "A2", "--order", "2,1", "--format", "csv"]);
    assert_eq!(flipped.lines().nth(4), Some("4,3 1 2,s2s1"));
}

#[test]
fn output_is_deterministic() {
    let args = ["export", "B3", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let dot = ["export", "A3"];
    assert_eq!(stdout(&dot), stdout(&dot));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["order-table", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["nf", "A2", "s7"]).status.code(), Some(2));
    assert_eq!(run(&["order-table", "Atilde2"]).status.code(), Some(2));
    assert_eq!(
        run(&["order-table", "A2", "--order", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["order-table", "A4", "--cap-elements", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["stream", "U3", "-n", "100000"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}
