//! The bundled example corpus and the golden-transcript self-test.
//!
//! Each corpus fan is shipped twice: as a fan file under `fans/` (also
//! usable directly from the command line) and as a frozen transcript under
//! `goldens/` recording the exact stdout, stderr, and exit code of every
//! command on that fan.  `selftest` re-runs the commands and compares
//! byte-for-byte, so any drift in output formats, group rendering, or the
//! underlying mathematics is caught immediately.
//!
//! Transcript format: each section starts with a `$ <command>` line, then
//! the command's stdout verbatim, then any stderr lines prefixed with `! `,
//! then `? exit <code>` when the exit code is nonzero.  Regenerate with
//! `torfan selftest --dump` after auditing the new values.

use std::fmt::Write as _;

use torfan::fan_core::{validate_fan, Fan, FanData};

use crate::commands::{cone_arg, execute, Outcome, Request};
use crate::fanfile::parse_fan_file;

/// One bundled example: its name, fan file text, and golden transcript.
pub struct CorpusFan {
    pub name: &'static str,
    pub text: &'static str,
    pub golden: &'static str,
}

/// The bundled corpus, in documentation order.
pub fn corpus() -> &'static [CorpusFan] {
    macro_rules! entry {
        ($name:literal) => {
            CorpusFan {
                name: $name,
                text: include_str!(concat!("../fans/", $name, ".json")),
                golden: include_str!(concat!("../goldens/", $name, ".txt")),
            }
        };
    }
    static CORPUS: &[CorpusFan] = &[
        entry!("affine-plane"),
        entry!("projective-line"),
        entry!("projective-plane"),
        entry!("p1xp1"),
        entry!("p1-cubed"),
        entry!("two-opposite-quadrants"),
        entry!("octant-example"),
        entry!("rank4-blowup"),
    ];
    CORPUS
}

/// Raw fan data for a bundled example; panics on unknown names (the corpus
/// is a compile-time constant, so this is a programmer error).
pub fn fan_data(name: &str) -> FanData {
    let cf = corpus()
        .iter()
        .find(|cf| cf.name == name)
        .unwrap_or_else(|| panic!("no bundled fan named {name}"));
    parse_fan_file(cf.text).expect("bundled corpus parses")
}

/// Every command run on one fan, with display strings for the transcript.
fn command_list(name: &str, fan: &Fan) -> Vec<(String, Request, bool)> {
    let max_arg = cone_arg(fan, &fan.max_cones()[0]);
    let ray_arg = cone_arg(
        fan,
        &torfan::fan_core::Cone::new([0]),
    );
    let mut list = vec![
        ("validate".to_string(), Request::Validate, false),
        ("validate --json".to_string(), Request::Validate, true),
        ("homology".to_string(), Request::Homology, false),
        ("links".to_string(), Request::Links, false),
        ("check-flat".to_string(), Request::CheckFlat, false),
        ("check-limits".to_string(), Request::CheckLimits, false),
        ("check-safe".to_string(), Request::CheckSafe, false),
        ("tor".to_string(), Request::Tor, false),
        ("higher-tor --kq Z/3".to_string(), Request::HigherTor { kq: "Z/3".into() }, false),
        ("e1".to_string(), Request::E1, false),
        (format!("blowup --cone {max_arg}"), Request::Blowup { cone: max_arg.clone() }, false),
        (format!("orbit --cone {max_arg}"), Request::Orbit { cone: max_arg }, false),
        (format!("orbit --cone {ray_arg}"), Request::Orbit { cone: ray_arg }, false),
    ];
    if name == "rank4-blowup" {
        // The headline example: blowing up pos(e1,e2) changes Tor_1 by Z.
        let arg = "1,0,0,0;0,1,0,0".to_string();
        list.push((format!("blowup --cone {arg}"), Request::Blowup { cone: arg.clone() }, false));
        list.push((format!("orbit --cone {arg}"), Request::Orbit { cone: arg }, false));
    }
    list
}

fn append_outcome(out: &mut String, display: &str, o: &Outcome) {
    writeln!(out, "$ {display}").unwrap();
    out.push_str(&o.stdout);
    for line in o.stderr.lines() {
        writeln!(out, "! {line}").unwrap();
    }
    if o.code != 0 {
        writeln!(out, "? exit {}", o.code).unwrap();
    }
}

/// The full transcript of one corpus fan (the golden file's content).
pub fn transcript(name: &str, data: &FanData) -> String {
    let fan = validate_fan(data).expect("corpus fans validate");
    let mut out = String::new();
    for (display, req, json) in command_list(name, &fan) {
        let o = execute(&req, data, json);
        append_outcome(&mut out, &display, &o);
    }
    out
}

fn first_diff_line(actual: &str, expected: &str) -> usize {
    let mut a = actual.lines();
    let mut b = expected.lines();
    let mut i = 0;
    loop {
        i += 1;
        match (a.next(), b.next()) {
            (None, None) => return i,
            (x, y) if x != y => return i,
            _ => {}
        }
    }
}

/// Runs the corpus through every command.  With `dump` the current
/// transcripts are printed (for regenerating the goldens after an audited
/// change); otherwise each fan is compared against its golden transcript.
/// Returns the text to print and the exit code.
pub fn run_selftest(dump: bool) -> (String, i32) {
    let mut out = String::new();
    let mut ok = 0;
    for cf in corpus() {
        let data = parse_fan_file(cf.text).expect("bundled corpus parses");
        let actual = transcript(cf.name, &data);
        if dump {
            writeln!(out, "### {}", cf.name).unwrap();
            out.push_str(&actual);
            continue;
        }
        if actual == cf.golden {
            ok += 1;
            writeln!(out, "{}: OK", cf.name).unwrap();
        } else {
            writeln!(
                out,
                "{}: MISMATCH at transcript line {}",
                cf.name,
                first_diff_line(&actual, cf.golden)
            )
            .unwrap();
        }
    }
    if dump {
        return (out, 0);
    }
    writeln!(out, "selftest: {}/{} fans OK", ok, corpus().len()).unwrap();
    (out, if ok == corpus().len() { 0 } else { 1 })
}
