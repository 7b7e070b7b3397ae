use greedy_mis_web::{generate_json, run_json, sweep_json};
use serde_json::Value;

fn parse(text: Result<String, String>) -> Value {
    serde_json::from_str(&text.expect("call succeeds")).unwrap()
}

#[test]
fn interval_instance_layout() {
    let v = parse(generate_json("interval-tight", 2, 0));
    assert_eq!(v["n"], 15);
    assert_eq!(v["intervals"].as_array().unwrap().len(), 15);
    assert_eq!(v["tracks"], Value::Null);
    assert_eq!(v["expected_greedy"], 5);
    assert_eq!(v["chordal"], true);
    let first = &v["intervals"][0];
    assert_eq!((first[0].as_f64(), first[1].as_f64()), (Some(0.0), Some(10.0)));
}

#[test]
fn two_track_layout() {
    let v = parse(generate_json("two-track", 3, 0));
    assert_eq!(v["tracks"][0].as_array().unwrap().len(), 6);
    assert_eq!(v["chordal"], false);
}

#[test]
fn scripted_run_steps() {
    let v = parse(run_json("interval-tight", 2, 0, "scripted", 0));
    assert_eq!(v["greedy"], 5);
    assert_eq!(v["opt"], 7);
    assert_eq!((v["ratio"]["num"].as_i64(), v["ratio"]["den"].as_i64()), (Some(5), Some(7)));
    assert_eq!(v["counts"], serde_json::json!([0, 3, 2]));
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 5);
    let removed: usize = steps.iter().map(|s| s["removed"].as_array().unwrap().len()).sum();
    assert_eq!(removed, 15);
    assert_eq!(steps[0]["j"], 2);
}

#[test]
fn adversarial_and_random_runs() {
    let v = parse(run_json("permutation", 4, 0, "adversarial", 0));
    assert_eq!(v["greedy"], 2);
    let v = parse(run_json("random-chordal", 12, 3, "seeded_random", 8));
    assert!(v["greedy"].as_u64().unwrap() <= v["opt"].as_u64().unwrap());
}

#[test]
fn errors_are_messages() {
    assert!(run_json("random-interval", 10, 1, "scripted", 0).unwrap_err().contains("script"));
    assert!(run_json("interval-tight", 2, 0, "bogus", 0).is_err());
    assert!(generate_json("nope", 2, 0).is_err());
    assert!(generate_json("interval-tight", 500, 0).is_err());
    assert!(sweep_json("chordal-tight", 5, 2).is_err());
}

#[test]
fn sweep_points() {
    let v = parse(sweep_json("chordal-tight", 2, 6));
    let points = v.as_array().unwrap();
    assert_eq!(points.len(), 5);
    for p in points {
        let k = p["k"].as_i64().unwrap();
        assert_eq!(p["ratio"]["num"].as_i64().unwrap() * 2 * k, p["ratio"]["den"].as_i64().unwrap() * (k + 1));
    }
}
