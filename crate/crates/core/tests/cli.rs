use rootlength::cli::run_with;
use rootlength::vector::{parse_rational, qi, Rational};
use rootlength::{LatticeVec, RatVec, RootSystem};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rootlength").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn length_example() {
    let v = json(&["length", "--type", "B", "--rank", "3", "--gamma", "1,0,2"]);
    assert_eq!(v["length"], 2);
    assert_eq!(v["positive_length"], 3);
    let dec: Vec<Vec<i64>> = v["decomposition"].as_array().unwrap().iter().map(ints).collect();
    assert_eq!(dec, vec![vec![0, -1, 0], vec![1, 1, 2]]);
    let same = json(&["length", "--type", "B3", "--gamma", "1,0,2"]);
    assert_eq!(v, same);
}

#[test]
fn weight_basis_and_products() {
    let v = json(&["length", "--type", "G2", "--gamma", "2,0", "--basis", "weight"]);
    assert_eq!(ints(&v["gamma"]), vec![4, 2]);
    assert_eq!(v["length"], 2);
    let p = json(&["length", "--type", "A2xB3", "--gamma", "-1,1,1,0,2"]);
    assert_eq!(p["length"], 4);
    assert_eq!(p["positive_length"], Value::Null);
    let d = json(&["decompose", "--type", "A1xA1", "--gamma", "2,-1"]);
    assert_eq!(d["length"], 3);
    let q = json(&["positive-length", "--type", "A6", "--gamma", "2,3,3,0,4,1"]);
    assert_eq!(q["positive_length"], 7);
}

#[test]
fn generators_example() {
    let v = json(&["generators", "--type", "G", "--rank", "2", "--facet", "1"]);
    let g: Vec<Vec<i64>> = v["generators"].as_array().unwrap().iter().map(ints).collect();
    assert_eq!(g, vec![vec![2, 1], vec![4, 2]]);
    assert_eq!(v["certificate"], "slab-exhaustive");
    assert_eq!(v["level_bound"], "7/1");
    let c = json(&["generators", "--type", "E7", "--facet", "2", "--method", "criterion"]);
    assert_eq!(c["certificate"], "criterion");
    assert_eq!(c["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["length", "--type", "B3", "--gamma", "1,0"]).0, 2);
    assert_eq!(call(&["length", "--type", "Q3", "--gamma", "1,0,0"]).0, 2);
    assert_eq!(call(&["length", "--type", "B3", "--gamma", "1,x,0"]).0, 2);
    assert_eq!(call(&["length", "--type", "B3", "--gamma", "0,0,1", "--basis", "weight"]).0, 2);
    assert_eq!(call(&["positive-length", "--type", "A2", "--gamma", "-1,0"]).0, 2);
    assert_eq!(call(&["generators", "--type", "B3", "--facet", "2"]).0, 2);
    assert_eq!(call(&["facets", "--type", "A2xA1"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn verify_oracle_suite() {
    let (code, out, _) = call(&["verify", "--suite", "length-oracle", "--max-rank", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

/// Re-checks the half-space certificate from the emitted JSON alone.
#[test]
fn facet_json_round_trip() {
    for t in ["B3", "G2", "C3", "F4"] {
        let v = json(&["facets", "--type", t]);
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let facets = v["facets"].as_array().unwrap();
        assert_eq!(v["count"].as_u64().unwrap() as usize, facets.len());
        for f in facets {
            let lam: Vec<Rational> =
                f["lambda"].as_array().unwrap().iter().map(|s| parse_rational(s.as_str().unwrap()).unwrap()).collect();
            let lam = RatVec(lam);
            let mut tight: Vec<LatticeVec> = Vec::new();
            for b in rs.roots() {
                let val = rs.pairing(&lam, &b.to_ratvec()).unwrap();
                assert!(val <= qi(1));
                if val == qi(1) {
                    tight.push(b.clone());
                }
            }
            tight.sort();
            let verts: Vec<LatticeVec> =
                f["vertices"].as_array().unwrap().iter().map(|x| LatticeVec(ints(x))).collect();
            assert_eq!(tight, verts, "{t}");
        }
    }
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["facets", "--type", "B3"],
        vec!["faces", "--type", "A3"],
        vec!["generators", "--type", "B3", "--facet", "3"],
        vec!["length", "--type", "F4", "--gamma", "1,-2,3,0"],
    ] {
        assert_eq!(call(&args).1, call(&args).1);
    }
    let f = json(&["faces", "--type", "A2", "--standard"]);
    assert!(f["faces"].as_array().unwrap().iter().all(|x| x["tau"].as_array().unwrap().is_empty()));
}
