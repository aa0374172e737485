use std::collections::BTreeMap;

use curvelab::corpus::{default_dir, load_dir, run, CorpusInput, OracleTag, Status};
use curvelab::RankMode;

#[test]
fn corpus_files_are_well_formed() {
    let entries = load_dir(&default_dir()).unwrap();
    assert!(entries.len() >= 50);
    let ids: Vec<_> = entries.iter().map(|e| e.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for e in &entries {
        assert!(!e.expected.is_empty(), "{} asserts nothing", e.id);
        assert!(e.expected.keys().chain(&e.record).all(|p| p.starts_with('/')), "{}", e.id);
    }
    let external: Vec<_> = entries.iter().filter(|e| e.oracle == OracleTag::EXTERNAL).map(|e| e.id.as_str()).collect();
    assert_eq!(external.len(), 2);

    // One anchor per file.
    let mut per_file: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for path in std::fs::read_dir(default_dir()).unwrap() {
        let path = path.unwrap().path();
        let batch = load_dir_file(&path);
        per_file.insert(path.display().to_string(), batch);
    }
    for (file, anchors) in per_file {
        assert_eq!(anchors.iter().collect::<std::collections::BTreeSet<_>>().len(), 1, "{file}");
    }
}

fn load_dir_file(path: &std::path::Path) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v.as_array().unwrap().iter().map(|e| e["anchor"].as_str().unwrap().to_string()).collect()
}

/// Every inexpensive entry, in both modes. The printed `q_6` is the one
/// expected failure: its `s t^5` coefficient differs from the recomputed one.
#[test]
fn inexpensive_entries() {
    let entries = load_dir(&default_dir()).unwrap();
    let cheap: Vec<_> = entries
        .iter()
        .filter(|e| !matches!(e.input, CorpusInput::Family { .. }))
        .filter(|e| !e.id.starts_with("luengo"))
        .collect();
    for mode in [RankMode::Certified, RankMode::Probabilistic { seed: 11 }] {
        let results = run(&cheap, mode);
        for r in &results {
            match r.id.as_str() {
                "fz2-q6" => {
                    assert_eq!(r.status, Status::Fail);
                    assert_eq!(r.mismatches.len(), 1);
                    assert_eq!(r.mismatches[0].expected[5], "468/169");
                    assert_eq!(r.mismatches[0].observed.as_ref().unwrap()[5], "486/169");
                }
                _ if r.oracle == OracleTag::EXTERNAL => assert_eq!(r.status, Status::Info),
                _ => assert_eq!(r.status, Status::Pass, "{}: {:?} {:?}", r.id, r.mismatches, r.error),
            }
        }
    }
}
