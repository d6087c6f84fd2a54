use std::path::Path;

use regmod::chartab::{dixon_character_table, TableExport};
use regmod::dade::{
    check_proposition_hypotheses, construct_regular_vector, remark_counterexample, verify_certificate, DadeInput,
    RegularVectorCertificate, Rejection, RemarkReport,
};
use regmod::ffla::is_prime;
use regmod::gmod::{orbit_and_stabilizer, regular_orbit_scan, ScanMode};
use regmod::grp::GroupSpec;
use regmod::scen::{
    assemble_scenario, run_theorem_check, validate_theorem_hypotheses, HypothesisReport, ScenarioSpec, TheoremReport,
};
use serde::Serialize;
use std::sync::Arc;

use crate::report::{sha256_hex, ReportEnvelope, Timer, REPORT_SCHEMA_VERSION};
use crate::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

struct Outcome<T> {
    code: i32,
    error: Option<String>,
    result: Option<T>,
}

impl<T> Outcome<T> {
    fn ok(code: i32, result: T) -> Self {
        Outcome { code, error: None, result: Some(result) }
    }

    fn fail(msg: impl ToString) -> Self {
        Outcome { code: EXIT_INPUT, error: Some(msg.to_string()), result: None }
    }
}

fn emit<T: Serialize>(cli: &Cli, command: &str, input: Option<&[u8]>, timer: Timer, out: Outcome<T>) -> i32 {
    if let Some(e) = &out.error {
        eprintln!("regmod {command}: {e}");
    }
    let env = ReportEnvelope {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        input_sha256: input.map(sha256_hex),
        seed: cli.seed,
        exit_status: out.code,
        error: out.error,
        timings_ms: timer.finish(),
        result: out.result,
    };
    let text = serde_json::to_string_pretty(&env).expect("reports serialize") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("regmod: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{text}"),
    }
    out.code
}

fn read(path: &Path) -> Result<Vec<u8>, String> {
    std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

pub fn run(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Scenario { path, run, force, .. } => scenario(cli, path, *run, *force),
        Command::Remark { p } => remark(cli, *p),
        Command::Dade { path } => dade(cli, path),
        Command::Chartab { path, .. } => chartab(cli, path),
    }
}

#[derive(Serialize)]
struct ScenarioResult {
    name: Option<String>,
    orders: std::collections::BTreeMap<&'static str, usize>,
    /// Central corrections applied to the lifted generators.
    corrections: Vec<Vec<u64>>,
    repaired: bool,
    hypotheses: HypothesisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<TheoremReport>,
}

fn scenario(cli: &Cli, path: &Path, run: bool, force: bool) -> i32 {
    let mut timer = Timer::new(cli.stable);
    let bytes = match read(path) {
        Ok(b) => b,
        Err(e) => return emit::<()>(cli, "scenario", None, timer, Outcome::fail(e)),
    };
    let outcome = (|| {
        let text = std::str::from_utf8(&bytes).map_err(|e| e.to_string())?;
        let spec = ScenarioSpec::from_json(text).map_err(|e| e.to_string())?;
        let s = assemble_scenario(&spec).map_err(|e| e.to_string())?;
        timer.lap("assemble");
        let hyp =
            validate_theorem_hypotheses(&s.ga, &s.embeddings, spec.p, spec.r, cli.seed).map_err(|e| e.to_string())?;
        timer.lap("hypotheses");
        let mut code = if hyp.all_hold { EXIT_OK } else { EXIT_FALSE };
        let theorem = if run && (hyp.all_hold || force) {
            let mut t = run_theorem_check(s.ga.clone(), &s.embeddings, cli.seed).map_err(|e| e.to_string())?;
            timer.lap("theorem");
            t.hypotheses_hold = Some(hyp.all_hold);
            code = match (t.summary, force) {
                (false, _) => EXIT_FALSE,
                (true, true) => EXIT_OK,
                (true, false) => code,
            };
            Some(t)
        } else {
            None
        };
        let orders = [
            ("P", s.embeddings.p.order()),
            ("R", s.embeddings.r.order()),
            ("A", s.embeddings.a.order()),
            ("RA", s.ra.order()),
            ("GA", s.ga.order()),
        ]
        .into_iter()
        .collect();
        let result = ScenarioResult {
            name: spec.name.clone(),
            orders,
            corrections: s.lifts.iter().map(|l| l.correction.clone()).collect(),
            repaired: s.repaired,
            hypotheses: hyp,
            theorem,
        };
        Ok::<_, String>(Outcome::ok(code, result))
    })();
    let outcome = outcome.unwrap_or_else(Outcome::fail);
    emit(cli, "scenario", Some(&bytes), timer, outcome)
}

fn remark(cli: &Cli, p: u64) -> i32 {
    let mut timer = Timer::new(cli.stable);
    if !is_prime(p) {
        return emit::<RemarkReport>(cli, "remark", None, timer, Outcome::fail(format!("{p} is not prime")));
    }
    let outcome = match remark_counterexample(p) {
        Ok(r) => Outcome::ok(if r.verdict { EXIT_OK } else { EXIT_FALSE }, r),
        Err(e) => Outcome::fail(e),
    };
    timer.lap("scan");
    emit(cli, "remark", None, timer, outcome)
}

#[derive(Serialize)]
struct DadeResult {
    accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    rejection: Option<Rejection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<RegularVectorCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_error: Option<String>,
    /// Independent scan finds a regular orbit.
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_regular_orbit: Option<bool>,
    /// The certificate vector's orbit is regular by direct enumeration.
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_certificate_regular: Option<bool>,
}

fn dade(cli: &Cli, path: &Path) -> i32 {
    let mut timer = Timer::new(cli.stable);
    let bytes = match read(path) {
        Ok(b) => b,
        Err(e) => return emit::<()>(cli, "dade", None, timer, Outcome::fail(e)),
    };
    let outcome = (|| {
        let input: DadeInput = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
        let (module, split) = input.build().map_err(|e| e.to_string())?;
        timer.lap("build");
        let inst = match check_proposition_hypotheses(&module, split, cli.seed) {
            Ok(i) => i,
            Err(rej) => {
                let r = DadeResult {
                    accepted: false,
                    rejection: Some(rej),
                    certificate: None,
                    certificate_error: None,
                    oracle_regular_orbit: None,
                    oracle_certificate_regular: None,
                };
                return Ok(Outcome::ok(EXIT_FALSE, r));
            }
        };
        timer.lap("hypotheses");
        let cert = construct_regular_vector(&inst).map_err(|e| e.to_string())?;
        let verified = verify_certificate(&inst, &cert);
        timer.lap("construct");
        let scan = regular_orbit_scan(&module, ScanMode::UntilRegularOrbit).map_err(|e| e.to_string())?;
        let direct = orbit_and_stabilizer(&module, &cert.v).regular_orbit;
        timer.lap("oracle");
        let good = verified.is_ok() && scan.regular_orbit_witness.is_some() && direct;
        let r = DadeResult {
            accepted: true,
            rejection: None,
            certificate: Some(cert),
            certificate_error: verified.err(),
            oracle_regular_orbit: Some(scan.regular_orbit_witness.is_some()),
            oracle_certificate_regular: Some(direct),
        };
        Ok::<_, String>(Outcome::ok(if good { EXIT_OK } else { EXIT_FALSE }, r))
    })();
    emit(cli, "dade", Some(&bytes), timer, outcome.unwrap_or_else(Outcome::fail))
}

#[derive(serde::Deserialize)]
struct GroupInput {
    #[serde(default)]
    #[allow(dead_code)]
    schema_version: Option<u32>,
    #[serde(flatten)]
    group: GroupSpec,
}

fn chartab(cli: &Cli, path: &Path) -> i32 {
    let mut timer = Timer::new(cli.stable);
    let bytes = match read(path) {
        Ok(b) => b,
        Err(e) => return emit::<()>(cli, "chartab", None, timer, Outcome::fail(e)),
    };
    let outcome = (|| {
        let input: GroupInput = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
        let (g, _) = input.group.build().map_err(|e| e.to_string())?;
        timer.lap("closure");
        let table = dixon_character_table(Arc::new(g), cli.seed).map_err(|e| e.to_string())?;
        timer.lap("table");
        Ok::<TableExport, String>(table.export())
    })();
    let outcome = match outcome {
        Ok(t) => Outcome::ok(EXIT_OK, t),
        Err(e) => Outcome::fail(e),
    };
    emit(cli, "chartab", Some(&bytes), timer, outcome)
}
