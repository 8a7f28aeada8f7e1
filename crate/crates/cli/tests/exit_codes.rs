use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str], dir: &std::path::Path) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_smashcheck"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    (o.status.code().expect("exit code"), o.stdout)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Exit 0 exactly when the report has no failed check.
    #[test]
    fn exit_code_matches_report(side in 0usize..2, h in 0usize..2, a in 0usize..2, k in 0usize..2, delta in -3i64..4) {
        let dir = tempfile::tempdir().unwrap();
        prop_assert_eq!(run(&["catalog", "kz2-sign"], dir.path()).0, 0);
        let path = dir.path().join("action.json");
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let key = if side == 0 { "left" } else { "right" };
        let cell = v[key][h][a].as_array_mut().unwrap();
        cell.push(Value::Array(vec![Value::from(k), Value::from(delta.to_string())]));
        std::fs::write(&path, v.to_string()).unwrap();
        for kind in ["partial-action", "symmetry"] {
            let (code, out) = run(&["verify", kind, "action.json"], dir.path());
            let report: Value = serde_json::from_slice(&out).unwrap();
            let any_fail = report["checks"].as_array().unwrap().iter().any(|c| c["status"] == "fail");
            prop_assert_eq!(code, if any_fail { 1 } else { 0 });
            for c in report["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail") {
                prop_assert!(c["counterexample"].is_object());
            }
        }
    }
}
