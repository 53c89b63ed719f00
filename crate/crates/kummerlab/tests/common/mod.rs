#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn kummerlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummerlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// JSON report with the elapsed-time field removed.
pub fn report_without_elapsed(out: &Output) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    v.as_object_mut().expect("object").remove("elapsed_ms");
    v
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn rust_files(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in std::fs::read_dir(dir).expect("readable dir") {
        let path = entry.expect("dir entry").path();
        if path.is_dir() {
            rust_files(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}

/// Code part of a line: string literal contents and `//` comments removed.
fn code_only(line: &str) -> String {
    let chars: Vec<char> = line.chars().collect();
    let mut out = String::new();
    let mut in_string = false;
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if in_string {
            match c {
                '\\' => k += 1,
                '"' => {
                    in_string = false;
                    out.push(' ');
                }
                _ => {}
            }
        } else if c == '"' {
            in_string = true;
            out.push(' ');
        } else if c == '/' && chars.get(k + 1) == Some(&'/') {
            break;
        } else if c == '\'' && chars.get(k + 2) == Some(&'\'') {
            k += 2;
        } else if c == '\'' && chars.get(k + 1) == Some(&'\\') && chars.get(k + 3) == Some(&'\'') {
            k += 3;
        } else {
            out.push(c);
        }
        k += 1;
    }
    out
}

/// Float type names (also as literal suffixes) and decimal literals such as
/// `1.5`.
fn is_float_token(code: &str) -> bool {
    let banned = [["f", "32"].concat(), ["f", "64"].concat()];
    let tokens = code.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_'));
    for t in tokens {
        for b in &banned {
            if let Some(prefix) = t.strip_suffix(b.as_str()) {
                if prefix.is_empty() || prefix.chars().all(|c| c.is_ascii_digit() || c == '_') {
                    return true;
                }
            }
        }
    }
    let bytes = code.as_bytes();
    (1..bytes.len().saturating_sub(1)).any(|k| {
        if bytes[k] != b'.' || !bytes[k - 1].is_ascii_digit() || !bytes[k + 1].is_ascii_digit() {
            return false;
        }
        let mut start = k - 1;
        while start > 0 && bytes[start - 1].is_ascii_digit() {
            start -= 1;
        }
        start == 0
            || !(bytes[start - 1].is_ascii_alphanumeric()
                || matches!(bytes[start - 1], b'_' | b'.'))
    })
}

/// Every `(file, line)` in the workspace crates whose code (outside strings
/// and comments) uses floating point.
pub fn float_mentions() -> Vec<(PathBuf, usize)> {
    let mut files = Vec::new();
    rust_files(&workspace_root().join("crates"), &mut files);
    assert!(files.len() > 10, "source tree found");
    let mut hits = Vec::new();
    for file in files {
        let text = std::fs::read_to_string(&file).expect("readable source");
        for (n, line) in text.lines().enumerate() {
            if is_float_token(&code_only(line)) {
                hits.push((file.clone(), n + 1));
            }
        }
    }
    hits
}

#[test]
fn float_detector_recognizes_floats() {
    let f = ["f", "64"].concat();
    assert!(is_float_token(&format!("let x: {f} = 0;")));
    assert!(is_float_token(&format!("let x = 2{f};")));
    assert!(is_float_token("let x = 1.5;"));
    assert!(!is_float_token("let x = t.0 + v.1;"));
    assert!(!is_float_token("let x = a.0.1;"));
    assert!(!is_float_token(&code_only(&format!(
        "let s = \"1.5 {f}\"; // 2.5"
    ))));
    assert!(is_float_token(&code_only("let q = '\"'; let r = 0.5;")));
}
