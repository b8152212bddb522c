use std::io::Write;
use std::path::Path;
use std::time::Instant;

use casimir_core::casimir::{milton_b, pressure, renormalized_coefficients, renormalized_tensor};
use casimir_core::exec::{Strategy, Unmonitored};
use casimir_core::modesum::{mode_sum_bruteforce_with, regularized_vev_with, PlateConfig, Region, RegulatorU};
use casimir_core::specfun::{
    gamma, hurwitz_zeta, polygamma, polylog_with, riemann_zeta_with, Estimate, GAMMA_REL_ACCURACY,
};
use casimir_core::Complex64;

use crate::args::{Cli, Command, ConvergenceArgs, InspectArgs, ProfileArgs, SpecfunCommand, TensorArgs};
use crate::config::ConfigFile;
use crate::error::{CliError, Result};
use crate::format;
use crate::report::{run_profile, Format, ProfileRequest, RunReport};
use crate::ToleranceProfile;

const PROFILE_KEYS: [&str; 8] = ["a", "xi", "n_points", "x3_min", "x3_max", "include_outside", "format", "output"];
const DEFAULT_POINTS: usize = 99;

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let profile = ToleranceProfile::from_env()?;
    let strategy = if cli.sequential { Strategy::Sequential } else { Strategy::Parallel };
    match cli.command {
        Command::Specfun(f) => specfun(f, profile, out),
        Command::Tensor(t) => tensor(&t, out),
        Command::Profile(p) => profile_cmd(&p, profile, strategy, out),
        Command::Convergence(c) => convergence(&c, profile, strategy, out),
        Command::Pressure(p) => pressure_cmd(p.a, out),
        Command::Inspect(i) => inspect(&i, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("stdout", e))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p.display().to_string(), e)),
        None => emit(out, text),
    }
}

fn specfun(f: SpecfunCommand, profile: ToleranceProfile, out: &mut dyn Write) -> Result<()> {
    let tol = profile.tolerances();
    let est: Estimate = match f {
        SpecfunCommand::Polylog { s, z } => polylog_with(s, z, &tol)?,
        SpecfunCommand::Zeta { s } => riemann_zeta_with(s, &tol)?,
        SpecfunCommand::Hurwitz { s, q } => hurwitz_zeta(s, q)?,
        SpecfunCommand::Polygamma { m, q } => {
            let e = polygamma(m, q)?;
            Estimate::new(Complex64::new(e.value, 0.0), e.error)
        }
        SpecfunCommand::Gamma { s } => {
            let v = gamma(s)?;
            Estimate::new(v, GAMMA_REL_ACCURACY * v.norm())
        }
    };
    emit(out, &format!("value {}\nerror {}\n", format::complex(est.value), format::real(est.error)))
}

fn tensor(t: &TensorArgs, out: &mut dyn Write) -> Result<()> {
    let (cfg, p) = PlateConfig::locate(t.a, t.xi, t.x3)?;
    let tensor = renormalized_tensor(&cfg, &p)?;
    let mut text = format!("region {}\n", cfg.region.name());
    for (name, v) in ["t00", "t11", "t22", "t33"].iter().zip(tensor.re()) {
        text.push_str(&format!("{name} {}\n", format::real(v)));
    }
    if cfg.region == Region::Between {
        text.push_str(&format!("B {}\n", format::real(renormalized_coefficients(&cfg, &p)?.b)));
        if let Ok(m) = milton_b(&cfg, &p) {
            text.push_str(&format!("milton_B {}\n", format::real(m)));
        }
    }
    let (lo, _) = pressure(&cfg)?;
    text.push_str(&format!("pressure_p3 {} at x3=0, {} at x3=a\n", format::real(lo.p3), format::real(-lo.p3)));
    emit(out, &text)
}

fn profile_request(args: &ProfileArgs) -> Result<(ProfileRequest, Option<std::path::PathBuf>)> {
    let cfg = match &args.config {
        Some(path) => ConfigFile::read(path)?,
        None => ConfigFile::default(),
    };
    cfg.check_keys(&PROFILE_KEYS)?;
    let a = match args.a.or(cfg.get("a")?) {
        Some(a) => a,
        None => return Err(CliError::Validation("missing plate separation: pass --a or set `a`".into())),
    };
    let n_points = args.n_points.or(cfg.get("n_points")?).unwrap_or(DEFAULT_POINTS);
    // default grid: interior points a/(n+1) .. a n/(n+1)
    let inner = |k: usize| a * k as f64 / (n_points + 1) as f64;
    let req = ProfileRequest {
        a,
        xi: args.xi.or(cfg.get("xi")?).unwrap_or(0.0),
        n_points,
        x3_min: args.x3_min.or(cfg.get("x3_min")?).unwrap_or_else(|| inner(1)),
        x3_max: args.x3_max.or(cfg.get("x3_max")?).unwrap_or_else(|| inner(n_points)),
        include_outside: args.include_outside.or(cfg.get("include_outside")?).unwrap_or(false),
        format: args.format.or(cfg.get::<Format>("format")?).unwrap_or(Format::Csv),
    };
    let output = args.output.clone().or(cfg.get::<std::path::PathBuf>("output")?);
    Ok((req, output))
}

fn profile_cmd(args: &ProfileArgs, profile: ToleranceProfile, strategy: Strategy, out: &mut dyn Write) -> Result<()> {
    let (req, output) = profile_request(args)?;
    let start = Instant::now();
    let report = run_profile(&req, profile, strategy)?;
    write_output(output.as_deref(), &report.render(req.format), out)?;
    eprintln!("{} rows in {:.3} s", report.rows.len(), start.elapsed().as_secs_f64());
    Ok(())
}

fn convergence(c: &ConvergenceArgs, profile: ToleranceProfile, strategy: Strategy, out: &mut dyn Write) -> Result<()> {
    let u = RegulatorU::new(c.u);
    let cfg = PlateConfig::between(c.a, c.xi)?;
    let p = casimir_core::modesum::EvalPoint::new(&cfg, c.x3)?;
    if c.u.re <= 4.0 {
        return Err(CliError::Validation(format!("the mode sum needs Re u > 4, got u = {}", format::complex(c.u))));
    }
    let tol = profile.tolerances();
    let closed = regularized_vev_with(u, &cfg, &p, &tol)?.as_array();
    let mut text = String::from("L,component,bruteforce,closed_form,difference,tail_bound,status\n");
    let mut failures = 0;
    for &l in &c.l_list {
        let brute = mode_sum_bruteforce_with(u, &cfg, &p, l, strategy, &Unmonitored)?;
        for (k, name) in ["t00", "t11", "t22", "t33"].iter().enumerate() {
            let b = brute.tensor.as_array()[k];
            let diff = (b - closed[k]).norm();
            // the closed form is itself accurate to the series tolerance
            let allowed = brute.tail_bound[k] + tol.series * closed[k].norm();
            let ok = diff <= allowed;
            failures += usize::from(!ok);
            text.push_str(&format!(
                "{l},{name},{},{},{},{},{}\n",
                format::complex(b),
                format::complex(closed[k]),
                format::real(diff),
                format::real(brute.tail_bound[k]),
                if ok { "ok" } else { "FAIL" }
            ));
        }
    }
    emit(out, &text)?;
    if failures > 0 {
        return Err(CliError::CheckFailed(format!("{failures} rows exceed their certified tail bound")));
    }
    Ok(())
}

fn pressure_cmd(a: f64, out: &mut dyn Write) -> Result<()> {
    let cfg = PlateConfig::between(a, 0.0)?;
    let (lo, hi) = pressure(&cfg)?;
    let v = |p: casimir_core::casimir::PressureVector| {
        format!("({}, {}, {})", format::real(p.p1), format::real(p.p2), format::real(p.p3))
    };
    emit(out, &format!("x3=0 {}\nx3=a {}\n", v(lo), v(hi)))
}

fn inspect(i: &InspectArgs, out: &mut dyn Write) -> Result<()> {
    let text = std::fs::read_to_string(&i.input).map_err(|e| CliError::io(i.input.display().to_string(), e))?;
    let report = RunReport::from_json(&text)?;
    write_output(i.output.as_deref(), &report.render(i.format), out)
}
