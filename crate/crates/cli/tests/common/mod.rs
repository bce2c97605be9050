#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

/// Invocations whose stdout and stderr are committed under `tests/golden`.
pub const GOLDEN_CASES: &[Case] = &[
    Case {
        name: "classify_p_-2_3_5",
        args: &["classify", "P(-2,3,5)"],
        exit: 0,
    },
    Case {
        name: "classify_p_-2_3_5_json",
        args: &["classify", "P(-2,3,5)", "--json"],
        exit: 0,
    },
    Case {
        name: "classify_p_3_-3_2",
        args: &["classify", "P(3,-3,2)"],
        exit: 0,
    },
    Case {
        name: "classify_p_-3_5_5",
        args: &["classify", "P(-3,5,5)"],
        exit: 0,
    },
    Case {
        name: "classify_p_0_3_5",
        args: &["classify", "P(0,3,5)"],
        exit: 0,
    },
    Case {
        name: "classify_p_1_1_1_json",
        args: &["classify", "P(1,1,1)", "--json"],
        exit: 0,
    },
    Case {
        name: "classify_algebraic",
        args: &["classify", "C((1/3+1/5)+(1/2+1/7))"],
        exit: 0,
    },
    Case {
        name: "classify_algebraic_json",
        args: &["classify", "C((1/3+1/5)+(1/2+1/7))", "--json"],
        exit: 0,
    },
    Case {
        name: "classify_conway",
        args: &["classify", "C((2/5+1/3)+(1/2+P(-2,3,5)))"],
        exit: 0,
    },
    Case {
        name: "classify_range_-4_4",
        args: &["classify", "--range", "-4:4"],
        exit: 0,
    },
    Case {
        name: "classify_range_-3_3_json",
        args: &["classify", "--range=-3:3", "--json"],
        exit: 0,
    },
    Case {
        name: "classify_not_a_knot",
        args: &["classify", "P(2,4,6)"],
        exit: 2,
    },
    Case {
        name: "classify_tangle",
        args: &["classify", "1/3+1/5"],
        exit: 2,
    },
    Case {
        name: "classify_syntax_error",
        args: &["classify", "P(1,2"],
        exit: 1,
    },
    Case {
        name: "surfaces_p_-2_3_3",
        args: &["surfaces", "P(-2,3,3)"],
        exit: 0,
    },
    Case {
        name: "surfaces_p_-2_3_3_csv",
        args: &["surfaces", "P(-2,3,3)", "--csv"],
        exit: 0,
    },
    Case {
        name: "surfaces_p_-2_3_3_json",
        args: &["surfaces", "P(-2,3,3)", "--json"],
        exit: 0,
    },
    Case {
        name: "surfaces_p_5_-2_3",
        args: &["surfaces", "P(5,-2,3)"],
        exit: 0,
    },
    Case {
        name: "surfaces_p_-6_9_17_csv",
        args: &["surfaces", "P(-6,9,17)", "--csv"],
        exit: 0,
    },
    Case {
        name: "surfaces_p_1_3_5",
        args: &["surfaces", "P(1,3,5)"],
        exit: 2,
    },
    Case {
        name: "lemma_15",
        args: &["lemma", "--max", "15"],
        exit: 0,
    },
    Case {
        name: "lemma_15_json",
        args: &["lemma", "--max", "15", "--json"],
        exit: 0,
    },
    Case {
        name: "lemma_1",
        args: &["lemma", "--max", "1"],
        exit: 2,
    },
    Case {
        name: "trace_p_-2_3_3",
        args: &["trace", "P(-2,3,3)"],
        exit: 0,
    },
    Case {
        name: "trace_p_1_1_1_json",
        args: &["trace", "P(1,1,1)", "--json"],
        exit: 0,
    },
    Case {
        name: "trace_p_2_4_6_json",
        args: &["trace", "P(2,4,6)", "--json"],
        exit: 0,
    },
    Case {
        name: "trace_p_0_3_5",
        args: &["trace", "P(0,3,5)"],
        exit: 2,
    },
    Case {
        name: "parse_algebraic",
        args: &["parse", "C( ( 1/3+1/5 ) + ( 1/2 + 1/7 ) )"],
        exit: 0,
    },
    Case {
        name: "parse_algebraic_json",
        args: &["parse", "C((1/3+1/5)+(1/2+1/7))", "--json"],
        exit: 0,
    },
    Case {
        name: "parse_montesinos",
        args: &["parse", "M(2/4,-1/3) + -6/3"],
        exit: 0,
    },
];

pub struct Output {
    pub exit: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

pub fn run_binary(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_knotrep"))
        .args(args)
        .output()
        .expect("failed to start knotrep");
    Output {
        exit: out.status.code().expect("killed by a signal"),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// The committed golden text for a case: stdout, then stderr, then the
/// exit code.
pub fn golden_text(out: &Output) -> String {
    format!(
        "{}--- stderr\n{}--- exit {}\n",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
        out.exit
    )
}

pub fn golden_path(case: &Case) -> PathBuf {
    golden_dir().join(format!("{}.golden", case.name))
}

/// Runs every case twice and compares both runs with each other and with
/// the committed file. Returns a description of each mismatch.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    let mut problems = Vec::new();
    for case in GOLDEN_CASES {
        let first = run_binary(case.args);
        let second = run_binary(case.args);
        if (first.exit, &first.stdout, &first.stderr)
            != (second.exit, &second.stdout, &second.stderr)
        {
            problems.push(format!("{}: output differs between runs", case.name));
        }
        if first.exit != case.exit {
            problems.push(format!(
                "{}: exit {} instead of {}",
                case.name, first.exit, case.exit
            ));
        }
        let text = golden_text(&first);
        let path = golden_path(case);
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == text => {}
            Ok(_) => problems.push(format!(
                "{}: output differs from {}",
                case.name,
                path.display()
            )),
            Err(e) => problems.push(format!(
                "{}: cannot read {}: {e}",
                case.name,
                path.display()
            )),
        }
    }
    problems
}
