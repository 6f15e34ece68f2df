//! Exit-status contract over a corpus of valid and invalid documents.

use freedim_cli::run;
use proptest::prelude::*;

fn exit_code(dir: &tempfile::TempDir, command: &[&str], doc: &str) -> i32 {
    let path = dir.path().join("doc.json");
    std::fs::write(&path, doc).unwrap();
    let path = path.to_string_lossy().into_owned();
    let mut args = vec!["freedim", command[0], path.as_str()];
    args.extend(&command[1..]);
    run(args).code
}

#[test]
fn corpus() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str, i32)] = &[
        (&["atoms"], r#"{"ground_size":3,"sets":[[0,1]]}"#, 0),
        (&["atoms"], r#"{"ground_size":0,"sets":[]}"#, 0),
        (&["atoms"], r#"{"ground_size":2,"sets":[[0],[0]]}"#, 0),
        (&["atoms"], r#"{"ground_size":2,"sets":[[5]]}"#, 2),
        (&["atoms"], r#"{"sets":[[0]]}"#, 2),
        (&["atoms"], r#"{"ground_size":2,"sets":[[0]],"extra":true}"#, 2),
        (&["atoms"], "not json", 2),
        (&["atoms"], r#"{"ground_size":-1,"sets":[]}"#, 2),
        (&["indep", "--indices", "0,9"], r#"{"ground_size":3,"sets":[[0,1]]}"#, 2),
        (&["heindorf"], r#"{"ground_size":3,"sets":[[0],[0,1],[2]]}"#, 0),
        (&["heindorf"], r#"{"ground_size":3,"sets":[[0,1],[1,2]]}"#, 1),
        (&["heindorf"], r#"{"length":5,"cuts":[2,0]}"#, 0),
        (&["heindorf"], r#"{"length":5,"cuts":[5]}"#, 2),
        (&["ica-check", "--picks", "0,1"], r#"{"nodes":3,"parent":[null,0,1]}"#, 0),
        (&["ica-check", "--picks", "7"], r#"{"nodes":3,"parent":[null,0,1]}"#, 2),
        (&["ica-check", "--picks", "0"], r#"{"nodes":2,"parent":[1,0]}"#, 2),
        (&["ica-check", "--picks", "0"], r#"{"nodes":2,"parent":[null]}"#, 2),
        (&["certify", "--d", "1"], r#"{"length":6,"cuts":[0,1,2,3]}"#, 0),
        (&["certify", "--d", "1"], r#"{"ground_size":4,"sets":[[0,1],[0,2]]}"#, 1),
        (&["refine"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]],[[0,2],[1,3]]]}"#, 0),
        (&["refine"], r#"{"ground_size":4,"covers":[[[0,1],[2]]]}"#, 2),
        (&["refine"], r#"{"ground_size":4,"covers":[]}"#, 2),
        (&["push", "--map", "0,0,1"], r#"{"ground_size":3,"covers":[[[0,1],[2]]]}"#, 0),
        (&["push", "--map", "0,0"], r#"{"ground_size":3,"covers":[[[0,1],[2]]]}"#, 2),
        (&["push", "--map", "0,2,0"], r#"{"ground_size":3,"covers":[[[0,1],[2]]]}"#, 2),
        (&["restrict", "--subset", "1,2"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 0),
        (&["restrict", "--subset", "9"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 2),
        (&["restrict", "--subset", "1", "--cover", "3"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 2),
        (&["witness-check", "--d", "1"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]],"chi":[2]}"#, 0),
        (&["witness-check", "--d", "1", "--m", "0"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 2),
        (&["witness-check", "--d", "1", "--m", "x"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 2),
        (&["witness-check", "--d", "1", "--tuple", "0,4"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]]}"#, 2),
        (&["witness-check", "--d", "1"], r#"{"ground_size":4,"covers":[[[0,1],[2,3]]],"chi":[1,1]}"#, 2),
        (&["counting"], r#"{"d":2,"m":1,"m1":1,"p":4,"n":8}"#, 0),
        (&["counting"], r#"{"d":2,"m":1,"m1":1,"p":4,"n":7}"#, 1),
        (&["counting"], r#"{"d":0,"m":1,"m1":1,"p":4,"n":7}"#, 2),
        (&["grid-demo"], r#"{"d":1,"n":1,"p":1}"#, 0),
        (&["grid-demo"], r#"{"d":1,"n":0,"p":1}"#, 2),
        (&["find-n", "--limit", "100"], r#"{"d":2,"m":1,"m1":1,"p":4}"#, 0),
        (&["find-n", "--limit", "100"], r#"{"d":2,"m":2,"m1":1,"p":4}"#, 1),
        (&["exponent"], r#"{"length":40,"cuts":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20]}"#, 0),
        (&["exponent"], r#"{"ground_size":3,"sets":[[0]]}"#, 2),
    ];
    for (command, doc, want) in cases {
        assert_eq!(exit_code(&dir, command, doc), *want, "{command:?} on {doc}");
    }
}

#[derive(Debug, Clone)]
enum Defect {
    None,
    PointOutOfRange,
    MissingGround,
    Syntax,
}

fn document() -> impl Strategy<Value = (String, Defect)> {
    (
        1usize..10,
        proptest::collection::vec(proptest::collection::vec(0usize..10, 0..5), 0..5),
        prop_oneof![Just(Defect::None), Just(Defect::PointOutOfRange), Just(Defect::MissingGround), Just(Defect::Syntax)],
    )
        .prop_map(|(n, raw, defect)| {
            let mut sets: Vec<Vec<usize>> = raw.into_iter().map(|s| s.into_iter().map(|p| p % n).collect()).collect();
            let sets_json = |sets: &Vec<Vec<usize>>| serde_json::to_string(sets).unwrap();
            let text = match defect {
                Defect::None => format!(r#"{{"ground_size":{n},"sets":{}}}"#, sets_json(&sets)),
                Defect::PointOutOfRange => {
                    sets.push(vec![n]);
                    format!(r#"{{"ground_size":{n},"sets":{}}}"#, sets_json(&sets))
                }
                Defect::MissingGround => format!(r#"{{"sets":{}}}"#, sets_json(&sets)),
                Defect::Syntax => format!(r#"{{"ground_size":{n},"sets":{}"#, sets_json(&sets)),
            };
            (text, defect)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn status_follows_document_validity((text, defect) in document()) {
        let dir = tempfile::tempdir().unwrap();
        for command in [&["atoms"][..], &["heindorf"], &["vc"], &["indep"], &["certify", "--d", "1"]] {
            let code = exit_code(&dir, command, &text);
            match defect {
                Defect::None => prop_assert!(code == 0 || code == 1, "{:?} gave {}", command, code),
                _ => prop_assert_eq!(code, 2),
            }
        }
    }
}
