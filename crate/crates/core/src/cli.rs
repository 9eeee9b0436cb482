//! Command-line front end. [`run`] is pure apart from `diagram --out`, so
//! the binary is a thin wrapper and tests can drive it in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::dyck::DyckPath;
use crate::enumerate::{distribution, generate, joint_distribution, joint_vars, DistributionQuery, Refinement};
use crate::error::Error;
use crate::formulas::{closed_form, f_213_132, family, r_table, Family};
use crate::perm::{Involution, PatternSet, Permutation};
use crate::poly::QPoly;
use crate::series::{rational_series, QSeries};
use crate::stats::{classic_stats, crossings, nestings, ArcPair, Statistic};
use crate::svg::{arc_diagram, dyck_diagram};
use crate::theta::{f_k, g_k, gamma, theta, theta_inverse};
use crate::verify::{run_suite, VerifyConfig};

/// Environment variable that overrides the default `check` cap.
pub const NMAX_ENV: &str = "CROSSINGS_NMAX";

#[derive(Parser, Debug)]
#[command(name = "crossings", version, about = "Crossings and nestings on pattern-avoiding permutations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// All statistics of a permutation, with crossing and nesting pairs.
    Stats {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Size of S_n(T), optionally listing it.
    Avoid {
        n: usize,
        patterns: String,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Image of a permutation under a bijection or symmetry.
    Map {
        map: MapKind,
        perm: String,
        /// Index for fk and gk.
        k: Option<usize>,
    },
    /// Distribution of a statistic (or up to three, comma-separated) over S_n(T).
    Dist {
        n: usize,
        patterns: String,
        stat: String,
        /// one-at=K, last=K, one-at=K,last=J, one-at=K,max-at=J or suffix=K
        #[arg(long)]
        refine: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Truncated F(T; q, z).
    Series {
        patterns: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Triangle rows as CSV.
    Table { name: TableKind, n_max: usize },
    /// Run a verification suite; exits 1 if any check fails.
    Check {
        suite: String,
        #[arg(long, env = NMAX_ENV)]
        nmax: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Include per-entry wall-clock time (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// SVG rendering of an arc diagram or a Dyck path.
    Diagram {
        kind: DiagramKind,
        input: String,
        #[arg(long)]
        tunnels: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapKind {
    Theta,
    ThetaInv,
    Gamma,
    Rci,
    R,
    C,
    I,
    Rc,
    Fk,
    Gk,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableKind {
    R,
    A076791,
    A299927,
    PascalCorok,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DiagramKind {
    Arcs,
    Dyck,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Exit status for a library error: 2 for malformed input, 3 for a
/// well-formed request outside the operation's domain.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::OutOfRange { .. } | Error::UnknownSuite(_) => 2,
        Error::Domain(_)
        | Error::InsufficientDepth { .. }
        | Error::NonUnitDenominator(_)
        | Error::UnsupportedPatternSet(_) => 3,
    }
}

/// Parses and executes `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output::ok(text)
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.cmd) {
        Ok(out) => out,
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cmd: Cmd) -> crate::Result<Output> {
    match cmd {
        Cmd::Stats { perm, json } => stats_cmd(&perm, json),
        Cmd::Avoid { n, patterns, list, json } => avoid_cmd(n, &patterns, list, json),
        Cmd::Map { map, perm, k } => map_cmd(map, &perm, k),
        Cmd::Dist {
            n,
            patterns,
            stat,
            refine,
            json,
        } => dist_cmd(n, &patterns, &stat, refine.as_deref(), json),
        Cmd::Series { patterns, order, json } => series_cmd(&patterns, order, json),
        Cmd::Table { name, n_max } => table_cmd(name, n_max),
        Cmd::Check {
            suite,
            nmax,
            json,
            timing,
        } => check_cmd(&suite, nmax, json, timing),
        Cmd::Diagram {
            kind,
            input,
            tunnels,
            out,
        } => diagram_cmd(kind, &input, tunnels, out),
    }
}

fn pairs_text(pairs: &[ArcPair]) -> String {
    pairs
        .iter()
        .map(|p| format!("({},{})", p.i, p.j))
        .collect::<Vec<_>>()
        .join(" ")
}

fn stats_cmd(perm: &str, json: bool) -> crate::Result<Output> {
    let s: Permutation = perm.parse()?;
    let st = classic_stats(&s);
    let (cr, ne) = (crossings(&s), nestings(&s));
    if json {
        let v = json!({
            "permutation": s.as_slice(),
            "crs": cr.len(), "nes": ne.len(), "inv": st.inv, "exc": st.exc,
            "fp": st.fp, "des": st.des, "maj": st.maj,
            "crossings": cr.iter().map(|p| [p.i, p.j]).collect::<Vec<_>>(),
            "nestings": ne.iter().map(|p| [p.i, p.j]).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(format!("{v:#}\n")));
    }
    Ok(Output::ok(format!(
        "crs={}\nnes={}\ninv={}\nexc={}\nfp={}\ndes={}\nmaj={}\ncrossings={}\nnestings={}\n",
        cr.len(),
        ne.len(),
        st.inv,
        st.exc,
        st.fp,
        st.des,
        st.maj,
        pairs_text(&cr),
        pairs_text(&ne)
    )))
}

fn avoid_cmd(n: usize, patterns: &str, list: bool, json: bool) -> crate::Result<Output> {
    let t: PatternSet = patterns.parse()?;
    let members: Vec<Permutation> = generate(n, &t).collect();
    if json {
        let mut v = json!({ "n": n, "patterns": t.to_string(), "size": members.len() });
        if list {
            v["members"] = json!(members.iter().map(|p| p.as_slice().to_vec()).collect::<Vec<_>>());
        }
        return Ok(Output::ok(format!("{v:#}\n")));
    }
    let mut out = format!("{}\n", members.len());
    if list {
        for p in &members {
            out.push_str(&format!("{p}\n"));
        }
    }
    Ok(Output::ok(out))
}

fn map_cmd(map: MapKind, perm: &str, k: Option<usize>) -> crate::Result<Output> {
    let s: Permutation = perm.parse()?;
    let need_k = || k.ok_or_else(|| Error::InvalidInput("this map needs an index k".into()));
    let image = match map {
        MapKind::Theta => theta(&s)?,
        MapKind::ThetaInv => theta_inverse(&s)?,
        MapKind::Gamma => gamma(&s)?,
        MapKind::Rci => Involution::Rci.apply(&s),
        MapKind::R => Involution::R.apply(&s),
        MapKind::C => Involution::C.apply(&s),
        MapKind::I => Involution::I.apply(&s),
        MapKind::Rc => Involution::Rc.apply(&s),
        MapKind::Fk => f_k(&s, need_k()?)?,
        MapKind::Gk => g_k(&s, need_k()?)?,
    };
    Ok(Output::ok(format!("{image}\n")))
}

/// `one-at=K`, `last=K`, `one-at=K,last=J`, `one-at=K,max-at=J`, `suffix=K`
fn parse_refinement(s: &str) -> crate::Result<Refinement> {
    let mut one_at = None;
    let mut last = None;
    let mut max_at = None;
    let mut suffix = None;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("refinement term `{part}` is not key=value")))?;
        let v: usize = val
            .parse()
            .map_err(|_| Error::InvalidInput(format!("`{val}` is not an index")))?;
        let slot = match key {
            "one-at" => &mut one_at,
            "last" => &mut last,
            "max-at" => &mut max_at,
            "suffix" => &mut suffix,
            _ => return Err(Error::InvalidInput(format!("unknown refinement key `{key}`"))),
        };
        *slot = Some(v);
    }
    Ok(match (one_at, last, max_at, suffix) {
        (None, None, None, None) => Refinement::None,
        (Some(k), None, None, None) => Refinement::OneAt { k },
        (None, Some(k), None, None) => Refinement::LastIs { k },
        (Some(k), Some(j), None, None) => Refinement::OneAtLastIs { k, j },
        (Some(k), None, Some(j), None) => Refinement::OneAtMaxAt { k, j },
        (None, None, None, Some(k)) => Refinement::ReversedSuffix { k },
        _ => return Err(Error::InvalidInput(format!("unsupported refinement combination `{s}`"))),
    })
}

fn dist_cmd(n: usize, patterns: &str, stat: &str, refine: Option<&str>, json: bool) -> crate::Result<Output> {
    let t: PatternSet = patterns.parse()?;
    let stats: Vec<Statistic> = stat.split(',').map(|s| s.trim().parse()).collect::<crate::Result<_>>()?;
    let refinement = refine.map(parse_refinement).transpose()?.unwrap_or(Refinement::None);
    if stats.len() > 1 {
        if refinement != Refinement::None {
            return Err(Error::InvalidInput("refinements apply to a single statistic".into()));
        }
        let m = joint_distribution(n, &t, &stats)?;
        if json {
            let v = json!({
                "n": n, "patterns": t.to_string(),
                "statistics": stats.iter().map(|s| s.name()).collect::<Vec<_>>(),
                "variables": joint_vars(stats.len()),
                "polynomial": m.to_json(),
            });
            return Ok(Output::ok(format!("{v:#}\n")));
        }
        return Ok(Output::ok(format!("{m}\n")));
    }
    let q = DistributionQuery::new(n, t.clone(), stats[0]).refined(refinement);
    let r = distribution(&q)?;
    if json {
        let v = json!({
            "n": n, "patterns": t.to_string(), "statistic": stats[0].name(),
            "refinement": refinement, "count": r.count, "polynomial": r.polynomial.to_json(),
        });
        return Ok(Output::ok(format!("{v:#}\n")));
    }
    Ok(Output::ok(format!("{}\n", r.polynomial)))
}

fn series_cmd(patterns: &str, order: usize, json: bool) -> crate::Result<Output> {
    let t: PatternSet = patterns.parse()?;
    let (source, coeffs): (&str, Vec<QPoly>) = match family(&t) {
        Some(Family::Recurrence132213) => ("recurrence", (0..=order).map(f_213_132).collect()),
        Some(_) => ("formula", (0..=order).map(|n| closed_form(&t, n)).collect::<crate::Result<_>>()?),
        None => ("enumeration", (0..=order).map(|n| crate::enumerate::crs_distribution(n, &t)).collect()),
    };
    let s = QSeries::new(coeffs, order, &QPoly::one());
    if json {
        let v = json!({ "patterns": t.to_string(), "order": order, "source": source, "coefficients": s.to_json() });
        return Ok(Output::ok(format!("{v:#}\n")));
    }
    Ok(Output::ok(format!("source: {source}\nF({t}; q, z) = {s}\n")))
}

fn csv_row(prefix: &[usize], coeffs: &[BigInt]) -> String {
    let cells: Vec<String> = prefix
        .iter()
        .map(ToString::to_string)
        .chain(coeffs.iter().map(ToString::to_string))
        .collect();
    format!("{}\n", cells.join(","))
}

fn table_cmd(name: TableKind, n_max: usize) -> crate::Result<Output> {
    let one = QPoly::one();
    let mut out = String::new();
    match name {
        TableKind::R => {
            out.push_str("n,k,coefficients\n");
            let r = r_table(n_max);
            for (n, row) in r.iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    out.push_str(&csv_row(&[n, k], p.coeffs()));
                }
            }
        }
        TableKind::A076791 | TableKind::A299927 => {
            // (1 - qz)/(1 - (1+q)z - (1-q)z²) and 1 + z(1-qz)/((1-z)(1-(1+q)z))
            let (num, den) = match name {
                TableKind::A076791 => (
                    vec![one.clone(), QPoly::from_i64s(&[0, -1])],
                    vec![one.clone(), QPoly::from_i64s(&[-1, -1]), QPoly::from_i64s(&[-1, 1])],
                ),
                _ => (
                    // (1 - z)(1 - (1+q)z) + z(1 - qz) over the same denominator
                    vec![one.clone(), QPoly::from_i64s(&[-1, -1]), QPoly::from_i64s(&[1])],
                    vec![one.clone(), QPoly::from_i64s(&[-2, -1]), QPoly::from_i64s(&[1, 1])],
                ),
            };
            out.push_str("n,coefficients\n");
            let s = rational_series(&num, &den, n_max, &one)?;
            for (n, p) in s.coeffs().iter().enumerate() {
                out.push_str(&csv_row(&[n], p.coeffs()));
            }
        }
        TableKind::PascalCorok => {
            out.push_str("n,coefficients\n");
            for n in 2..=n_max.max(2) {
                let p = QPoly::from_i64s(&[1, 1]).pow(n as u32 - 2);
                out.push_str(&csv_row(&[n], p.coeffs()));
            }
        }
    }
    Ok(Output::ok(out))
}

fn check_cmd(suite: &str, nmax: Option<usize>, json: bool, timing: bool) -> crate::Result<Output> {
    let (mut cfg, n_max) = match nmax {
        Some(k) => (VerifyConfig::with_nmax(k), k),
        None => {
            let d = VerifyConfig::default();
            let n = d.class_nmax;
            (d, n)
        }
    };
    cfg.timing = timing;
    let report = run_suite(suite, &cfg, n_max)?;
    let stdout = if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_text()
    };
    Ok(Output {
        code: if report.passed() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn diagram_cmd(kind: DiagramKind, input: &str, tunnels: bool, out: Option<PathBuf>) -> crate::Result<Output> {
    let svg = match kind {
        DiagramKind::Arcs => arc_diagram(&input.parse::<Permutation>()?),
        DiagramKind::Dyck => dyck_diagram(&input.parse::<DyckPath>()?, tunnels),
    };
    match out {
        None => Ok(Output::ok(svg)),
        Some(path) => {
            std::fs::write(&path, svg)
                .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            Ok(Output::ok(format!("wrote {}\n", path.display())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut argv = vec!["crossings"];
        argv.extend_from_slice(args);
        let out = run(argv);
        assert_eq!(out.code, 0, "{}", out.stderr);
        out.stdout
    }

    #[test]
    fn refinement_syntax() {
        assert_eq!(parse_refinement("one-at=2").unwrap(), Refinement::OneAt { k: 2 });
        assert_eq!(
            parse_refinement("one-at=2,max-at=1").unwrap(),
            Refinement::OneAtMaxAt { k: 2, j: 1 }
        );
        assert!(parse_refinement("last=1,suffix=2").is_err());
        assert!(parse_refinement("bogus=1").is_err());
    }

    #[test]
    fn tables_match_their_classes() {
        let t = run_ok(&["table", "a076791", "4"]);
        assert_eq!(t.lines().nth(5), Some("4,5,2,1"));
        let t = run_ok(&["table", "a299927", "4"]);
        assert_eq!(t.lines().nth(5), Some("4,4,3,1"));
        let t = run_ok(&["table", "pascal-corok", "4"]);
        assert_eq!(t.lines().last(), Some("4,1,2,1"));
    }
}
