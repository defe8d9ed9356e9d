use std::fs;
use std::process::{Command, Output};

use xray_core::builtins::ex22;
use xray_core::{isomorphic, load};

fn xray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xray"))
        .args(args)
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    xray(args).status.code().unwrap()
}

#[test]
fn criterion_exit_codes() {
    assert_eq!(code(&["criterion", "ex21"]), 0);
    assert_eq!(code(&["criterion", "--example", "ex22"]), 0);
    let out = xray(&["criterion", "fig2", "--witness"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("fails\n"));
    assert!(text.contains("compatible, no extension: apex (2,1) sector (-1,1) (-1,0)"));
}

#[test]
fn exported_builtins_validate() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["ex21", "ex22", "fig2", "segment"] {
        let path = dir.path().join(format!("{name}.json"));
        let p = path.to_str().unwrap();
        assert_eq!(code(&["example", name, "--out", p]), 0);
        assert_eq!(code(&["validate", p]), 0, "{name}");
    }
}

#[test]
fn glue_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&[
            "glue", "--a", "ex21", "--b", "ex22", "--normal", "0,1", "--level", "3/2", "--out", p
        ]),
        0
    );
    assert_eq!(code(&["isomorphic", p, "fig2"]), 0);
    assert_eq!(code(&["isomorphic", p, "ex21"]), 1);
}

#[test]
fn toric_prism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prism.json");
    fs::write(
        &path,
        concat!(
            r#"{"format":"lp/1","dim":3,"vertices":["#,
            r#"["0","0","0"],["0","3","0"],["0","0","3"],["1","0","0"],["1","3","0"],["1","0","3"]]}"#
        ),
    )
    .unwrap();
    let out = xray(&[
        "toric",
        "--poly",
        path.to_str().unwrap(),
        "--embed",
        "1,0;1,0;0,1",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let x = load(&out.stdout).unwrap();
    assert!(isomorphic(&x, &ex22()).is_some());
}

#[test]
fn deform_and_chambers() {
    assert_eq!(code(&["deform", "--at", "1,3"]), 0);
    let out = xray(&["deform", "--at", "2,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("unrealizable"));
    let out = xray(&["chambers"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("walls: "));
}

#[test]
fn render_is_svg() {
    let out = xray(&["render", "fig2", "--slice", "0,1:3/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.starts_with(b"<svg "));
    assert_eq!(code(&["render", "segment"]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["validate", "nosuchthing"]), 2);
    assert_eq!(code(&["criterion"]), 2);
    assert_eq!(
        code(&["glue", "--a", "ex21", "--b", "ex22", "--normal", "0,2", "--level", "1"]),
        2
    );
    assert_eq!(code(&["frobnicate"]), 2);
}
