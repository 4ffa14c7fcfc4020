//! Compiles a small C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "farey_gaps.h"

int main(void) {
    FgRegion *r = NULL;
    char *area = NULL;
    if (fg_region_new("2,4,1", &r) != FG_STATUS_OK) return 10;
    if (fg_region_area(r, &area) != FG_STATUS_OK) return 11;
    if (strcmp(area, "1/210") != 0) return 12;
    fg_string_free(area);
    fg_region_free(r);

    FgNu *nu = NULL;
    char *s = NULL;
    if (fg_nu_exact(7, 3, 0, FG_ROUTE_ENUMERATION, &nu) != FG_STATUS_OK) return 20;
    if (fg_nu_string(nu, &s) != FG_STATUS_OK) return 21;
    if (strcmp(s, "54097/3879876") != 0) return 22;
    fg_string_free(s);
    fg_nu_free(nu);

    FgHistogram *h = NULL;
    uint64_t n = 0;
    if (fg_scan(5, 3, 0, 10, &h) != FG_STATUS_OK) return 30;
    if (fg_histogram_count(h, 5, &n) != FG_STATUS_OK || n != 1) return 31;
    fg_histogram_free(h);

    if (fg_region_new(NULL, &r) != FG_STATUS_NULL_POINTER) return 40;
    printf("%s\n", fg_status_message(FG_STATUS_UNSUPPORTED));
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libfarey_gaps_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let work = std::env::temp_dir().join(format!("farey-gaps-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let exe = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "no exact route for these parameters"
    );
}
