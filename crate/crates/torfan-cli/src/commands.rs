//! One function per command, all funneled through [`execute`]: validate the
//! raw fan data once, dispatch, and capture stdout/stderr text plus the exit
//! code.  Keeping this below the argument parser lets the self-test (and the
//! test suite) drive every command on in-memory fans, byte for byte.
//!
//! Human-readable reports are line-oriented and frozen; the `--json` switch
//! re-renders the same fields as a single-line JSON object.  All cone and
//! face indices in reports refer to the *canonical* ray order of the
//! validated fan (rays sorted lexicographically), which is why index-bearing
//! reports also carry the ray table.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use torfan::exact_linalg::AbelianGroupInv;
use torfan::fan_core::{is_complete, orbit_closure_fan, validate_fan, Cone, Fan, FanData};
use torfan::ktheory::{
    blowup_tor_delta, flatness_report, higher_tor_table, merkurjev_e1_page, subdivision_safe,
    tor_table, TorTable,
};
use torfan::polyhedral::{enough_limits, LimitsCertificate};
use torfan::simplicial::{complex_of_fan, link, reduced_homology};

use crate::error::CliError;

/// A fully resolved command, independent of where the fan came from.
#[derive(Clone, Debug)]
pub enum Request {
    Validate,
    Homology,
    Links,
    CheckFlat,
    CheckLimits,
    CheckSafe,
    Tor,
    HigherTor { kq: String },
    E1,
    Blowup { cone: String },
    Orbit { cone: String },
}

/// Captured result of one command run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs one command against raw fan data.  Errors never panic out; they
/// become a single `error:` line on stderr plus the documented exit code.
pub fn execute(req: &Request, data: &FanData, json: bool) -> Outcome {
    match run(req, data, json) {
        Ok(stdout) => Outcome { stdout, stderr: String::new(), code: 0 },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn run(req: &Request, data: &FanData, json: bool) -> Result<String, CliError> {
    let fan = validate_fan(data)?;
    match req {
        Request::Validate => cmd_validate(&fan, json),
        Request::Homology => cmd_homology(&fan, json),
        Request::Links => cmd_links(&fan, json),
        Request::CheckFlat => cmd_check_flat(&fan, json),
        Request::CheckLimits => cmd_check_limits(&fan, json),
        Request::CheckSafe => cmd_check_safe(&fan, json),
        Request::Tor => cmd_tor(&fan, json),
        Request::HigherTor { kq } => cmd_higher_tor(&fan, kq, json),
        Request::E1 => cmd_e1(&fan, json),
        Request::Blowup { cone } => cmd_blowup(&fan, cone, json),
        Request::Orbit { cone } => cmd_orbit(&fan, cone),
    }
}

// ---------------------------------------------------------------- helpers

fn yesno(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn rays_i64(fan: &Fan) -> Vec<Vec<i64>> {
    fan.rays()
        .iter()
        .map(|r| {
            r.coords()
                .iter()
                .map(|c| i64::try_from(c).expect("ray coordinate fits in i64"))
                .collect()
        })
        .collect()
}

fn cone_indices(c: &Cone) -> Vec<usize> {
    c.indices().collect()
}

/// `(1,0,-2)` — one lattice vector.
fn vec_str(v: &[BigInt]) -> String {
    let coords: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", coords.join(","))
}

/// `pos((1,0),(0,1))`, or `0` for the zero cone.
fn cone_str(fan: &Fan, c: &Cone) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let gens: Vec<String> = fan.cone_generators(c).iter().map(|g| vec_str(g)).collect();
    format!("pos({})", gens.join(","))
}

/// `{2,4}` — a face as a set of ray indices.
fn face_str(face: &BTreeSet<usize>) -> String {
    let ids: Vec<String> = face.iter().map(usize::to_string).collect();
    format!("{{{}}}", ids.join(","))
}

/// The `--cone` argument that names this cone: `1,0;0,1`.
pub fn cone_arg(fan: &Fan, c: &Cone) -> String {
    let gens: Vec<String> = fan
        .cone_generators(c)
        .iter()
        .map(|g| g.iter().map(BigInt::to_string).collect::<Vec<_>>().join(","))
        .collect();
    gens.join(";")
}

fn parse_cone_arg(text: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        // No generators: the zero cone.
        return Ok(Vec::new());
    }
    trimmed
        .split(';')
        .map(|part| {
            part.split(',')
                .map(|c| {
                    c.trim().parse::<BigInt>().map_err(|_| CliError::ConeSyntax {
                        text: text.to_string(),
                        reason: format!("'{}' is not an integer", c.trim()),
                    })
                })
                .collect()
        })
        .collect()
}

fn resolve_cone(fan: &Fan, text: &str) -> Result<Cone, CliError> {
    let vectors = parse_cone_arg(text)?;
    for v in &vectors {
        if v.len() != fan.ambient_rank() {
            return Err(CliError::ConeSyntax {
                text: text.to_string(),
                reason: format!(
                    "vector has {} coordinates, expected {}",
                    v.len(),
                    fan.ambient_rank()
                ),
            });
        }
    }
    fan.cone_from_ray_vectors(&vectors).ok_or(CliError::ConeNotInFan)
}

// --------------------------------------------------------------- commands

fn cmd_validate(fan: &Fan, json: bool) -> Result<String, CliError> {
    let complete = is_complete(fan);
    if json {
        #[derive(Serialize)]
        struct Out {
            rank: usize,
            rays: Vec<Vec<i64>>,
            max_cones: Vec<Vec<usize>>,
            cone_count: usize,
            complete: bool,
        }
        return Ok(to_line(&Out {
            rank: fan.ambient_rank(),
            rays: rays_i64(fan),
            max_cones: fan.max_cones().iter().map(cone_indices).collect(),
            cone_count: fan.all_cones().len(),
            complete,
        }));
    }
    Ok(format!(
        "valid fan in rank {}: {} rays, {} maximal cones, {} cones in total\ncomplete: {}\n",
        fan.ambient_rank(),
        fan.rays().len(),
        fan.max_cones().len(),
        fan.all_cones().len(),
        yesno(complete)
    ))
}

fn cmd_homology(fan: &Fan, json: bool) -> Result<String, CliError> {
    let cx = complex_of_fan(fan);
    let h = reduced_homology(&cx, &AbelianGroupInv::free(1), false);
    let degrees: Vec<i64> = (-1..=cx.dim()).collect();
    if json {
        #[derive(Serialize)]
        struct Out {
            min_degree: i64,
            groups: Vec<String>,
        }
        return Ok(to_line(&Out {
            min_degree: -1,
            groups: degrees.iter().map(|&d| h.get(d).to_string()).collect(),
        }));
    }
    let mut out = String::new();
    for d in degrees {
        writeln!(out, "H~_{} = {}", d, h.get(d)).unwrap();
    }
    Ok(out)
}

fn cmd_links(fan: &Fan, json: bool) -> Result<String, CliError> {
    let cx = complex_of_fan(fan);
    let mut faces: Vec<&BTreeSet<usize>> = cx.faces().iter().filter(|f| !f.is_empty()).collect();
    faces.sort_by_key(|f| (f.len(), (*f).clone()));

    struct Row {
        face: Vec<usize>,
        dim: i64,
        nonzero: Vec<(i64, String)>,
        violations: Vec<i64>,
    }
    let mut rows = Vec::new();
    for face in faces {
        let lk = link(&cx, face).expect("faces of the complex have links");
        let h = reduced_homology(&lk, &AbelianGroupInv::free(1), false);
        let mut nonzero = Vec::new();
        let mut violations = Vec::new();
        for d in -1..=lk.dim() {
            let g = h.get(d);
            if !g.is_zero() {
                nonzero.push((d, g.to_string()));
                if d < lk.dim() {
                    violations.push(d);
                }
            }
        }
        rows.push(Row { face: face.iter().copied().collect(), dim: lk.dim(), nonzero, violations });
    }

    if json {
        #[derive(Serialize)]
        struct RowOut<'a> {
            face: &'a [usize],
            dim: i64,
            nonzero: &'a [(i64, String)],
            violations: &'a [i64],
        }
        #[derive(Serialize)]
        struct Out<'a> {
            rays: Vec<Vec<i64>>,
            links: Vec<RowOut<'a>>,
        }
        return Ok(to_line(&Out {
            rays: rays_i64(fan),
            links: rows
                .iter()
                .map(|r| RowOut {
                    face: &r.face,
                    dim: r.dim,
                    nonzero: &r.nonzero,
                    violations: &r.violations,
                })
                .collect(),
        }));
    }

    let mut out = String::from("rays:\n");
    for (i, r) in fan.rays().iter().enumerate() {
        writeln!(out, "  {}: {}", i, vec_str(r.coords())).unwrap();
    }
    for r in rows {
        let face: BTreeSet<usize> = r.face.iter().copied().collect();
        let summary = if r.nonzero.is_empty() {
            "H~ = 0".to_string()
        } else {
            r.nonzero
                .iter()
                .map(|(d, g)| {
                    let mark = if r.violations.contains(d) { " !" } else { "" };
                    format!("H~_{d} = {g}{mark}")
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(out, "lk {}: dim {}, {}", face_str(&face), r.dim, summary).unwrap();
    }
    Ok(out)
}

fn cmd_check_flat(fan: &Fan, json: bool) -> Result<String, CliError> {
    let r = flatness_report(fan);
    if json {
        #[derive(Serialize)]
        struct Offender {
            face: Vec<usize>,
            degree: i64,
        }
        #[derive(Serialize)]
        struct Out {
            pure: bool,
            link_conditions_ok: bool,
            link_offenders: Vec<Offender>,
            global_ok: bool,
            flat: bool,
            merkurjev_degenerates: bool,
        }
        return Ok(to_line(&Out {
            pure: r.pure,
            link_conditions_ok: r.link_conditions_ok,
            link_offenders: r
                .link_offenders
                .iter()
                .map(|(f, d)| Offender { face: f.iter().copied().collect(), degree: *d })
                .collect(),
            global_ok: r.global_ok,
            flat: r.flat,
            merkurjev_degenerates: r.merkurjev_degenerates,
        }));
    }
    let mut out = String::new();
    writeln!(out, "pure: {}", yesno(r.pure)).unwrap();
    writeln!(out, "link conditions: {}", yesno(r.link_conditions_ok)).unwrap();
    for (face, degree) in &r.link_offenders {
        writeln!(out, "  face {}: link H~_{} nonzero", face_str(face), degree).unwrap();
    }
    writeln!(out, "global condition: {}", yesno(r.global_ok)).unwrap();
    if r.flat {
        writeln!(out, "flat: YES; Merkurjev spectral sequence degenerates").unwrap();
    } else {
        writeln!(out, "flat: NO; Merkurjev spectral sequence does not degenerate").unwrap();
    }
    Ok(out)
}

fn cmd_check_limits(fan: &Fan, json: bool) -> Result<String, CliError> {
    let (ok, cert) = enough_limits(fan);
    if json {
        #[derive(Serialize)]
        struct Pick {
            cone: Vec<usize>,
            limit_in: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Out {
            enough_limits: bool,
            rays: Vec<Vec<i64>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<Vec<Pick>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            exhausted_branches: Option<usize>,
        }
        let (witness, exhausted_branches) = match &cert {
            LimitsCertificate::Witness(picks) => (
                Some(
                    picks
                        .iter()
                        .map(|(tau, sigma)| Pick {
                            cone: cone_indices(tau),
                            limit_in: cone_indices(sigma),
                        })
                        .collect(),
                ),
                None,
            ),
            LimitsCertificate::Exhausted { branches } => (None, Some(*branches)),
        };
        return Ok(to_line(&Out {
            enough_limits: ok,
            rays: rays_i64(fan),
            witness,
            exhausted_branches,
        }));
    }
    let mut out = format!("enough limits: {}\n", yesno(ok));
    match &cert {
        LimitsCertificate::Witness(picks) => {
            for (tau, sigma) in picks {
                writeln!(out, "  {}: limit in {}", cone_str(fan, tau), cone_str(fan, sigma))
                    .unwrap();
            }
        }
        LimitsCertificate::Exhausted { branches } => {
            let noun = if *branches == 1 { "branch" } else { "branches" };
            writeln!(out, "  search exhausted after {branches} {noun}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_check_safe(fan: &Fan, json: bool) -> Result<String, CliError> {
    let (safe, offenders) = subdivision_safe(fan);
    if json {
        #[derive(Serialize)]
        struct Offender {
            face: Vec<usize>,
            degree: i64,
        }
        #[derive(Serialize)]
        struct Out {
            safe: bool,
            rays: Vec<Vec<i64>>,
            offenders: Vec<Offender>,
        }
        return Ok(to_line(&Out {
            safe,
            rays: rays_i64(fan),
            offenders: offenders
                .iter()
                .map(|(f, d)| Offender { face: f.iter().copied().collect(), degree: *d })
                .collect(),
        }));
    }
    let mut out = format!("subdivision-safe: {}\n", yesno(safe));
    for (face, degree) in &offenders {
        let cone = Cone::new(face.iter().copied());
        writeln!(
            out,
            "  face {} = {}: link H~_{} nonzero",
            face_str(face),
            cone_str(fan, &cone),
            degree
        )
        .unwrap();
    }
    Ok(out)
}

fn render_tor(table: &TorTable, json: bool, kq: Option<&AbelianGroupInv>) -> String {
    if json {
        #[derive(Serialize)]
        struct Out {
            rank: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            kq: Option<String>,
            tor: Vec<(usize, String)>,
        }
        return to_line(&Out {
            rank: table.ambient_rank(),
            kq: kq.map(AbelianGroupInv::to_string),
            tor: table.entries().map(|(p, g)| (p, g.to_string())).collect(),
        });
    }
    if table.ambient_rank() == 0 {
        return "Tor table empty (rank 0)\n".to_string();
    }
    let mut out = String::new();
    for (p, g) in table.entries() {
        writeln!(out, "Tor_{p} = {g}").unwrap();
    }
    out
}

fn cmd_tor(fan: &Fan, json: bool) -> Result<String, CliError> {
    Ok(render_tor(&tor_table(fan)?, json, None))
}

fn cmd_higher_tor(fan: &Fan, kq: &str, json: bool) -> Result<String, CliError> {
    let group: AbelianGroupInv = kq.parse()?;
    Ok(render_tor(&higher_tor_table(fan, &group)?, json, Some(&group)))
}

fn cmd_e1(fan: &Fan, json: bool) -> Result<String, CliError> {
    let page = merkurjev_e1_page(fan)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            rank: usize,
            entries: Vec<(usize, i64, String)>,
            tor0_rank_bound: usize,
        }
        return Ok(to_line(&Out {
            rank: page.ambient_rank(),
            entries: page.entries().map(|((p, q), g)| (p, q, g.to_string())).collect(),
            tor0_rank_bound: page.tor0_rank_bound(),
        }));
    }
    let mut out = String::new();
    for ((p, q), g) in page.entries() {
        writeln!(out, "E1[{p},{q}] = {g}").unwrap();
    }
    writeln!(out, "Tor_0 rank bound: {}", page.tor0_rank_bound()).unwrap();
    Ok(out)
}

fn cmd_blowup(fan: &Fan, cone: &str, json: bool) -> Result<String, CliError> {
    let sigma = resolve_cone(fan, cone)?;
    let (delta, invariant) = blowup_tor_delta(fan, &sigma)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            cone: Vec<usize>,
            deltas: Vec<(usize, String)>,
            invariant: bool,
        }
        return Ok(to_line(&Out {
            cone: cone_indices(&sigma),
            deltas: delta.entries().map(|(p, g)| (p, g.to_string())).collect(),
            invariant,
        }));
    }
    let mut out = format!("blow-up at {}:\n", cone_str(fan, &sigma));
    for (p, g) in delta.entries() {
        writeln!(out, "delta Tor_{p} = {g}").unwrap();
    }
    writeln!(out, "invariant: {}", yesno(invariant)).unwrap();
    Ok(out)
}

fn cmd_orbit(fan: &Fan, cone: &str) -> Result<String, CliError> {
    let sigma = resolve_cone(fan, cone)?;
    let orbit = orbit_closure_fan(fan, &sigma).map_err(CliError::Fan)?;
    // The orbit-closure fan is emitted in the fan-file format so it can be
    // fed straight back into any other command.
    #[derive(Serialize)]
    struct Out {
        dim: usize,
        rays: Vec<Vec<i64>>,
        cones: Vec<Vec<usize>>,
    }
    Ok(to_line(&Out {
        dim: orbit.ambient_rank(),
        rays: rays_i64(&orbit),
        cones: orbit.max_cones().iter().map(cone_indices).collect(),
    }))
}
