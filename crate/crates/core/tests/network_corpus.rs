//! Golden corpus of closed networks. Set `W6J_UPDATE_GOLDEN=1` to rewrite
//! the files from the current builders.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use w6j::network::builders::{corpus, Expected};
use w6j::network::{evaluate_closed, parse, serialize};

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct Entry {
    name: String,
    file: String,
    value: String,
    value_f64: f64,
    source: String,
}

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/networks")
}

fn source(e: &Expected) -> String {
    match e {
        Expected::SixJ(args) => format!("six_j_msum {args}"),
        Expected::Integer(k) => format!("closed form {k}"),
        Expected::Recorded => "recorded".into(),
    }
}

#[test]
fn golden_networks_evaluate_to_recorded_values() {
    let mut entries = Vec::new();
    for (name, net, expected) in corpus().unwrap() {
        let v = evaluate_closed(&net).unwrap();
        entries.push((
            Entry {
                file: format!("{name}.json"),
                name,
                value: v.to_string(),
                value_f64: v.to_f64(),
                source: source(&expected),
            },
            net,
        ));
    }
    let index_path = dir().join("index.json");
    if std::env::var_os("W6J_UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(dir()).unwrap();
        for (entry, net) in &entries {
            fs::write(dir().join(&entry.file), serialize(net).unwrap() + "\n").unwrap();
        }
        let index: Vec<&Entry> = entries.iter().map(|(e, _)| e).collect();
        fs::write(&index_path, serde_json::to_string_pretty(&index).unwrap() + "\n").unwrap();
    }
    let index: Vec<Entry> = serde_json::from_str(&fs::read_to_string(&index_path).unwrap()).unwrap();
    assert_eq!(index.len(), entries.len());
    for (recorded, (fresh, net)) in index.iter().zip(&entries) {
        assert_eq!(recorded, fresh);
        let text = fs::read_to_string(dir().join(&recorded.file)).unwrap();
        let parsed = parse(&text).unwrap();
        assert_eq!(&parsed, net, "{}", recorded.name);
        assert_eq!(evaluate_closed(&parsed).unwrap().to_string(), recorded.value);
    }
}
