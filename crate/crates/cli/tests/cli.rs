use std::io::Write;
use std::process::{Command, Stdio};

use evenmagic_cli::{run, EXIT_NOT_MAGIC, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["evenmagic"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

const LO_SHU: &str = "2 7 6\n9 5 1\n4 3 8\n";

#[test]
fn generate_formats() {
    let o = invoke(&["generate", "--order", "4"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(
        o.stdout,
        " 1  8 12 13\n14 11  7  2\n15 10  6  3\n 4  5  9 16\n"
    );
    assert!(o.stderr.is_empty());

    let o = invoke(&["generate", "--order", "4", "--format", "csv"], "");
    assert_eq!(o.stdout, "1,8,12,13\n14,11,7,2\n15,10,6,3\n4,5,9,16\n");

    let o = invoke(
        &[
            "generate", "--order", "4", "--format", "json", "--method", "walk",
        ],
        "",
    );
    assert_eq!(
        o.stdout,
        "{\"order\":4,\"rows\":[[1,8,12,13],[14,11,7,2],[15,10,6,3],[4,5,9,16]]}\n"
    );
}

#[test]
fn generate_to_file() {
    let dir = std::env::temp_dir().join(format!("evenmagic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("six.txt");
    let o = invoke(
        &["generate", "--order", "6", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let o = invoke(&["verify", "--in", path.to_str().unwrap()], "");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn unsupported_generate_orders() {
    for n in ["0", "2", "3", "7", "10001", "10002"] {
        let o = invoke(&["generate", "--order", n], "");
        assert_eq!(o.code, EXIT_UNSUPPORTED, "n={n}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = invoke(&["generate", "--order", "7"], "");
    assert!(o.stderr.contains("only even orders >= 4"));
}

#[test]
fn usage_errors() {
    for args in [
        &["generate"][..],
        &["generate", "--order", "x"],
        &["generate", "--order", "8", "--bogus"],
        &["frobnicate"],
        &["generate", "--order", "8", "--format", "xml"],
        &[],
    ] {
        let o = invoke(args, "");
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = invoke(&["--help"], "");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("enumerate"));
}

#[test]
fn verify_reports() {
    let o = invoke(&["verify"], LO_SHU);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("magic: true"));
    assert!(o.stdout.contains("classification: associated"));

    let o = invoke(&["verify", "--report", "json"], LO_SHU);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["is_magic"], true);
    assert_eq!(v["magic_sum_expected"], 15);
    assert_eq!(v["classification"], "associated");
    assert_eq!(v["row_sums"], serde_json::json!([15, 15, 15]));

    let o = invoke(&["verify", "--report", "json"], "1 2\n3 4\n");
    assert_eq!(o.code, EXIT_NOT_MAGIC);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["is_magic"], false);
    assert!(v.get("classification").is_none());

    let o = invoke(&["verify", "--format", "csv"], "2,7,6\n9,5,1\n4,3,8\n");
    assert_eq!(o.code, EXIT_OK);
}

#[test]
fn verify_parse_errors() {
    let o = invoke(&["verify"], "1 2 3\n4 5\n6 7 8\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    let o = invoke(&["verify", "--format", "json"], "{\"order\":3}");
    assert_eq!(o.code, EXIT_USAGE);
    let o = invoke(&["verify", "--in", "/nonexistent/square.txt"], "");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn classify_outputs() {
    let ten = invoke(&["generate", "--order", "10"], "").stdout;
    assert_eq!(invoke(&["classify"], &ten).stdout, "mixed\n");
    let eight = invoke(&["generate", "--order", "8"], "").stdout;
    assert_eq!(invoke(&["classify"], &eight).stdout, "associated\n");

    let stacked = "1 2 16 15\n3 4 14 13\n5 6 12 11\n7 8 10 9\n";
    let o = invoke(&["classify"], stacked);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "parallel\n");
    assert!(o.stderr.contains("not magic"));

    let o = invoke(&["classify"], "1 1\n2 3\n");
    assert_eq!(o.code, EXIT_NOT_MAGIC);
    let o = invoke(&["classify"], "2 1 3\n4 5 6\n7 8 9\n");
    assert_eq!(o.code, EXIT_UNSUPPORTED);
}

#[test]
fn enumerate_small() {
    let o = invoke(&["enumerate", "--order", "3", "--reduced"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "total 8\nreduced 1\n");
    assert!(o.stderr.contains("nodes"));

    let o = invoke(&["enumerate", "--order", "3", "--emit", "--reduced"], "");
    assert_eq!(o.stdout, "2 7 6\n9 5 1\n4 3 8\n\ntotal 8\nreduced 1\n");

    let o = invoke(&["enumerate", "--order", "3", "--emit", "--limit", "2"], "");
    assert_eq!(o.stdout.matches('\n').count(), 3 + 1 + 3 + 1 + 1);
    assert!(o.stdout.ends_with("total 8\n"));
}

#[test]
fn enumerate_guard() {
    for n in ["2", "5", "6"] {
        let o = invoke(&["enumerate", "--order", n], "");
        assert_eq!(o.code, EXIT_UNSUPPORTED, "n={n}");
    }
    let o = invoke(&["enumerate", "--order", "2", "--i-know-this-is-slow"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "total 0\n");
    let o = invoke(&["enumerate", "--help"], "");
    assert!(o.stdout.contains("275,305,224"));
}

#[test]
fn generate_pipes_into_verify() {
    let bin = env!("CARGO_BIN_EXE_evenmagic");
    for n in [4, 6, 8, 10, 12, 14, 30, 64] {
        let generated = Command::new(bin)
            .args(["generate", "--order", &n.to_string()])
            .output()
            .unwrap();
        assert!(generated.status.success());
        let mut verify = Command::new(bin)
            .arg("verify")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        verify
            .stdin
            .take()
            .unwrap()
            .write_all(&generated.stdout)
            .unwrap();
        let status = verify.wait_with_output().unwrap().status;
        assert_eq!(status.code(), Some(0), "n={n}");
    }
}
