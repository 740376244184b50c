use std::path::Path;

use qshift::corpus::verify_dir;

#[test]
fn shipped_corpus_passes() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let report = verify_dir(&dir).unwrap();
    let failures = report.failures();
    assert!(failures.is_empty(), "{failures:#?}");
}
