use std::path::PathBuf;
use std::process::Command;

use menger::cli::parse_blocks_line;
use menger::corpus::named;
use menger::principal::analysis;
use menger::{translation_closure, CongruenceKind, Subset};

fn corpus_file(stem: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(format!("{stem}.menger"))
        .display()
        .to_string()
}

fn data_file(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn menger(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_menger"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

#[test]
fn validate_reports() {
    let ok = menger(&["validate", &corpus_file("rz2")]);
    assert_eq!((ok.code, ok.stdout.as_str()), (0, "OK\n"));

    let bad = menger(&["validate", &data_file("neg2.menger")]);
    assert_eq!(bad.code, 1);
    assert_eq!(bad.stdout, "superassociativity fails at f=0 g=0 h=0\n");

    let missing = menger(&["validate", &data_file("missing-entry.menger")]);
    assert_eq!(missing.code, 2);
    assert!(
        missing.stderr.contains("missing entry for (b b)"),
        "{}",
        missing.stderr
    );
}

#[test]
fn malformed_input_reports_line() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("unknown-element.menger");
    std::fs::write(
        &path,
        "menger v1\nrank 1\nelements a b\ntable\na a -> a\na q -> a\n",
    )
    .unwrap();
    let run = menger(&["validate", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 6"), "{}", run.stderr);

    let absent = menger(&["validate", &data_file("does-not-exist.menger")]);
    assert_eq!(absent.code, 2);
    assert_eq!(menger(&[]).code, 2);
    assert_eq!(
        menger(&[
            "congruence",
            &corpus_file("rz2"),
            "--kind",
            "w",
            "--subset",
            "a"
        ])
        .code,
        2
    );
}

#[test]
fn congruence_reports() {
    let v = menger(&[
        "congruence",
        &corpus_file("rz2"),
        "--kind",
        "v",
        "--subset",
        "a",
    ]);
    assert_eq!(v.code, 0);
    assert_eq!(
        lines(&v.stdout),
        [
            "blocks: {a} {b}",
            "residue: {b}",
            "strong: yes",
            "family: {a} t=x",
            "family: {b} residue"
        ]
    );

    let l = menger(&[
        "congruence",
        &corpus_file("lz2"),
        "--kind",
        "l",
        "--subset",
        "a",
    ]);
    assert_eq!(
        &lines(&l.stdout)[..3],
        ["blocks: {a} {b}", "residue: {b}", "l-strong: yes"]
    );

    let l = menger(&[
        "congruence",
        &corpus_file("rz2"),
        "--kind",
        "l",
        "--subset",
        "a",
    ]);
    let out = lines(&l.stdout);
    assert_eq!(out[2], "l-strong: no");
    assert!(out[3].starts_with("witness: "), "{}", out[3]);

    let full = menger(&[
        "congruence",
        &corpus_file("rz2"),
        "--kind",
        "full",
        "--subset",
        "a,b",
    ]);
    assert_eq!(
        &lines(&full.stdout)[..3],
        ["blocks: {a b}", "residue: empty", "bistrong: yes"]
    );

    let empty = menger(&[
        "congruence",
        &corpus_file("rz2"),
        "--kind",
        "v",
        "--subset",
        "",
    ]);
    assert_eq!(empty.code, 0);
    assert_eq!(
        &lines(&empty.stdout)[..3],
        ["blocks: {a b}", "residue: {a b}", "strong: yes"]
    );

    let unknown = menger(&[
        "congruence",
        &corpus_file("rz2"),
        "--kind",
        "v",
        "--subset",
        "c",
    ]);
    assert_eq!(unknown.code, 2);
}

#[test]
fn congruence_output_reparses_to_library_partition() {
    for entry in named() {
        let alg = &entry.algebra;
        let closure = translation_closure(alg, 100_000).unwrap();
        for h in Subset::all(alg.size()) {
            let names: Vec<&str> = h.iter().map(|e| alg.name(e)).collect();
            let subset = names.join(",");
            for kind in CongruenceKind::ALL {
                let kind_arg = kind.to_string();
                let mut out = Vec::new();
                let mut err = Vec::new();
                let file = corpus_file(&entry.name);
                let args = [
                    "menger",
                    "congruence",
                    &file,
                    "--kind",
                    &kind_arg,
                    "--subset",
                    &subset,
                ];
                assert_eq!(menger::cli::run(args, &mut out, &mut err), 0);
                let text = String::from_utf8(out).unwrap();
                let parsed = parse_blocks_line(alg, text.lines().next().unwrap()).unwrap();
                let expected = analysis(alg, &closure, &h, kind).unwrap().partition;
                assert_eq!(parsed, expected, "{} {kind} {subset}", entry.name);
            }
        }
    }
}

#[test]
fn classify_table_and_tsv() {
    let run = menger(&["classify", &corpus_file("rz2")]);
    assert_eq!(run.code, 0);
    let rows = lines(&run.stdout);
    assert_eq!(rows.len(), 5);
    let empty: Vec<&str> = rows[1].split_whitespace().collect();
    assert_eq!(&empty[..4], ["{}", "yes", "yes", "yes"]);
    let a: Vec<&str> = rows[2].split_whitespace().collect();
    assert_eq!(&a[..4], ["{a}", "yes", "no", "no"]);
    assert_eq!(&a[11..14], ["1", "0", "0"]);

    let tsv = menger(&["classify", "--tsv", &corpus_file("rz2")]);
    for row in lines(&tsv.stdout) {
        assert_eq!(row.split('\t').count(), 17);
        assert!(!row.contains("  "));
    }
    assert_eq!(
        lines(&tsv.stdout)[3],
        "{b}\tyes\tno\tno\tyes\tyes\tyes\tyes\tno\tno\tyes\t1\t0\t0\t2\t2\t2"
    );
}

#[test]
fn classify_capacity_exit() {
    let names: Vec<String> = (0..17).map(|i| format!("e{i}")).collect();
    let mut text = format!("menger v1\nrank 1\nelements {}\ntable\n", names.join(" "));
    for x in &names {
        for y in &names {
            text.push_str(&format!("{x} {y} -> {x}\n"));
        }
    }
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lz17.menger");
    std::fs::write(&path, text).unwrap();
    let run = menger(&["classify", path.to_str().unwrap()]);
    assert_eq!(run.code, 3, "{}", run.stderr);
    assert!(run.stderr.contains("capacity exceeded"));
}

#[test]
fn translations_listing() {
    let lz2 = menger(&["translations", &corpus_file("lz2")]);
    assert_eq!(
        lines(&lz2.stdout),
        ["3 translations", "x: a b", "a[x]: a a", "b[x]: b b"]
    );
    let rz2 = menger(&["translations", &corpus_file("rz2")]);
    assert_eq!(lines(&rz2.stdout), ["1 translation", "x: a b"]);
    let and = menger(&["translations", &corpus_file("bool-and")]);
    assert_eq!(lines(&and.stdout)[0], "1 translation");
    let limited = menger(&["translations", "--limit", "1", &corpus_file("lz2")]);
    assert_eq!(
        lines(&limited.stdout),
        ["3 translations", "x: a b", "… 2 more"]
    );
}

#[test]
fn suite_exit_codes() {
    for stem in ["lz2", "rz2"] {
        let run = menger(&["suite", &corpus_file(stem)]);
        assert_eq!(run.code, 0, "{}", run.stdout);
        assert!(run.stdout.lines().all(|l| !l.starts_with("FAIL")));
        for id in ["P2.1 ", "P2.16 ", "P3.10 ", "P4.10 "] {
            assert!(run.stdout.contains(&format!("PASS {id}")), "{id}");
        }
    }
    let fault = menger(&["suite", "--inject-fault", &corpus_file("rz2")]);
    assert_eq!(fault.code, 1);
    assert!(fault.stdout.contains("FAIL I2.oracle"));
}

#[test]
fn jobs_flag_is_global() {
    let a = menger(&["--jobs", "1", "suite", &corpus_file("nand")]);
    let b = menger(&["suite", "--jobs", "3", &corpus_file("nand")]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.code, b.code);
}
