use std::process::{Command, Output};

use serde_json::Value;

fn hrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = hrank(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

#[test]
fn rank_of_su_star_14() {
    let o = hrank(&["rank", "su*(14) x T^1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("real rank: 6"), "{text}");
    assert!(text.contains("a-hyperbolic rank: 3"), "{text}");
    let v = json(&["rank", "su*(14) x T^1"]);
    assert_eq!(v["real_rank"], 6);
    assert_eq!(v["a_hyperbolic_rank"], 3);
    assert_eq!(v["algebra"], "su*(14) x T^1");
}

#[test]
fn decide_sl10_so55_text_and_json_agree() {
    let o = hrank(&["decide", "sl(10,R)", "so(5,5)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("9 != 5"), "{text}");
    assert!(text.contains("5 != 4"), "{text}");
    assert!(text.contains("5 <= 5"), "{text}");
    assert!(text.contains("verdict: Undetermined"));

    let v = json(&["decide", "sl(10,R)", "so(5,5)"]);
    assert_eq!(v["verdict"], "Undetermined");
    assert_eq!(v["deciding_condition"], Value::Null);
    let trace = v["trace"].as_array().unwrap();
    let nums: Vec<(u64, u64)> = trace
        .iter()
        .map(|s| (s["lhs"].as_u64().unwrap(), s["rhs"].as_u64().unwrap()))
        .collect();
    assert_eq!(nums, vec![(9, 5), (5, 4), (5, 5)]);
    for (l, r) in nums {
        assert!(text.contains(&format!("{l} ")) && text.contains(&format!(" {r} ")));
    }
}

#[test]
fn orbits_of_e6_iv() {
    let o = hrank(&["orbits", "e6(IV)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1,0,0,0,1,0)"));
    let v = json(&["orbits", "e6(IV)"]);
    assert_eq!(v["generators"], serde_json::json!(["(1,0,0,0,1,0)"]));
    assert_eq!(v["generators_bourbaki"], serde_json::json!(["(1,0,0,0,0,1)"]));
}

#[test]
fn satake_show_draws_bourbaki_labels() {
    let o = hrank(&["satake-show", "e6(II)"]);
    let text = stdout(&o);
    assert!(text.contains("1   3   4   5   6"), "{text}");
    assert!(text.contains("arrows: 1<->6, 3<->5"), "{text}");
    let v = json(&["satake-show", "su(1,4)"]);
    assert_eq!(v["diagram"]["numbering"], "bourbaki");
    assert_eq!(v["diagram"]["black"], serde_json::json!([2, 3]));
    assert_eq!(v["diagram"]["arrows"], serde_json::json!([[1, 4]]));
}

#[test]
fn embed_check_reports_witness() {
    let v = json(&["embed-check", "e6(IV)", "so(2,5)"]);
    assert_eq!(v["obstruction"]["obstructed"], true);
    assert_eq!(v["obstruction"]["witness"]["inequality"], "AHyperbolicRank");
    let v = json(&["embed-check", "so(2,7)", "so(2,5)"]);
    assert_eq!(v["obstruction"]["obstructed"], false);
}

#[test]
fn params_substitute_into_templates() {
    let v = json(&["decide", "--params", "k=1,l=1", "SL(4k+2l,R)", "SO(2k,2k) x Sp(l,R)"]);
    assert_eq!(v["verdict"], "NoNonVirtuallyAbelian");
    assert_eq!(v["deciding_condition"], "B");
}

#[test]
fn parse_errors_exit_two_with_position() {
    let o = hrank(&["rank", "su(2) x foo(3)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 8"), "{err}");
    assert_eq!(hrank(&["rank", "gl(3,R)"]).status.code(), Some(2));
    assert_eq!(hrank(&["table2", "--bound", "1"]).status.code(), Some(2));
    assert_eq!(hrank(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hrank(&["satake-show", "su(2,1) x su(2)"]).status.code(), Some(2));
}

#[test]
fn invalid_pair_exits_one() {
    let o = hrank(&["decide", "e6(IV)", "g2(split)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("not a reductive subgroup pair"));
}

#[test]
fn harness_commands_pass() {
    assert_eq!(hrank(&["table1", "--kmax", "4"]).status.code(), Some(0));
    let v = json(&["table2", "--bound", "3"]);
    assert_eq!(v["passes"], true);
    assert!(v["report"]["errata_applied"].as_u64().unwrap() > 0);
    let v = json(&["anomaly-scan", "--rank", "6"]);
    assert_eq!(v["matches_table"], true);
    assert!(v["anomalies"].as_array().unwrap().iter().any(|a| a["form"] == "e6(IV)"));
}

#[test]
fn help_lists_grammar() {
    let o = hrank(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("g2(split)"));
}
