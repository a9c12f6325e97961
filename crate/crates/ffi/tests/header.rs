//! Compiles and runs a small C program against the generated header and
//! the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "kinterchange.h"

int main(void) {
    KiObjective *f = NULL;
    if (ki_objective_table1(&f) != KI_STATUS_OK) return 10;
    uint8_t s[4] = {4, 3, 1, 2};
    int64_t num = 0, den = 0;
    if (ki_evaluate(f, s, 4, &num, &den) != KI_STATUS_OK || num != 2 || den != 1) return 11;
    size_t count = 0;
    if (ki_neighborhood(s, 4, 7, NULL, 0, &count) != KI_STATUS_INVALID_K) return 12;
    if (strstr(ki_last_error_message(), "InvalidK") == NULL) return 13;
    int ok = 0;
    if (ki_verify(&ok, NULL) != KI_STATUS_OK || ok != 1) return 14;
    ki_objective_free(f);
    printf("ok %s\n", ki_version());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().expect("test binary path");
    exe.parent()
        .and_then(|p| p.parent())
        .expect("profile dir")
        .to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/kinterchange.h");
    let text = std::fs::read_to_string(&header).expect("generated header");
    for name in [
        "ki_objective_table1",
        "ki_objective_inversion",
        "ki_objective_search_distance",
        "ki_objective_from_json",
        "ki_objective_load",
        "ki_objective_free",
        "ki_evaluate",
        "ki_neighborhood",
        "ki_analyze_json",
        "ki_search_json",
        "ki_verify",
        "ki_string_free",
        "ki_last_error_message",
        "ki_status_name",
        "typedef struct KiObjective KiObjective",
        "KI_STATUS_INVALID_K = 6",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = target_dir().join("libkinterchange_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().expect("tempdir");
    let src = dir.path().join("smoke.c");
    std::fs::write(&src, PROGRAM).expect("write source");
    let exe = dir.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success(), "compilation failed");
    let out = Command::new(&exe).output().expect("run smoke program");
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
