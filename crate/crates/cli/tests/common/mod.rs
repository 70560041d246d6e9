#![allow(dead_code)]

pub mod oracles;
pub mod random;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct GoldenCase {
    pub name: String,
    pub args: Vec<String>,
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let manifest = fs::read_to_string(golden_dir().join("cases.txt")).expect("golden manifest");
    manifest
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (name, args) = line.split_once(':').expect("`name: args`");
            GoldenCase {
                name: name.trim().to_string(),
                args: args.split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn riordan(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .env_remove("RIORDAN_ORDER")
        .output()
        .expect("run riordan binary");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Names of cases whose output differs from the committed fixture. With
/// `UPDATE_GOLDEN=1` the fixtures are rewritten instead.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for case in golden_cases() {
        let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
        let out = riordan(&args);
        let path = golden_dir().join(format!("{}.out", case.name));
        let actual = format!("exit {}\n{}", out.code, out.stdout);
        if update {
            fs::write(&path, &actual).expect("write fixture");
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            _ => bad.push(case.name),
        }
    }
    bad
}
