//! Keeps the hand-maintained C header aligned with the exported
//! symbols: every `eqlg_*` function must be declared in the header and
//! every declaration must correspond to an exported symbol.

use std::collections::BTreeSet;

fn header_text() -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/include/equilag.h");
    std::fs::read_to_string(path).expect("header file exists")
}

fn declared_functions(header: &str) -> BTreeSet<String> {
    let mut names = BTreeSet::new();
    for line in header.lines() {
        if let Some(pos) = line.find("eqlg_") {
            let tail = &line[pos..];
            if let Some(paren) = tail.find('(') {
                let name = &tail[..paren];
                if name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    names.insert(name.to_string());
                }
            }
        }
    }
    names
}

#[test]
fn header_matches_exported_symbols() {
    let header = header_text();
    let declared = declared_functions(&header);
    let exported: BTreeSet<String> = equilag_ffi::_exported_symbols()
        .iter()
        .map(|s| s.to_string())
        .collect();
    assert_eq!(
        declared, exported,
        "include/equilag.h and the exported eqlg_* functions must agree"
    );
}

#[test]
fn header_has_include_guard_and_status_codes() {
    let header = header_text();
    assert!(header.contains("#ifndef EQUILAG_H"));
    for code in [
        "EQLG_STATUS_OK = 0",
        "EQLG_STATUS_NEGATIVE = 1",
        "EQLG_STATUS_INVALID_INPUT = 2",
        "EQLG_STATUS_INTERNAL = 3",
        "EQLG_STATUS_NULL_ARGUMENT = 4",
    ] {
        assert!(header.contains(code), "missing status code: {code}");
    }
}
