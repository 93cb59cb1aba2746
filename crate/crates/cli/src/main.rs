use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use togglekit::dynamics::{apply_map, Birational, MapKind, PArray, PiecewiseLinear, ToggleAlgebra};
use togglekit::ideal::{promotion_ideal, rowmotion_ideal, OrderIdeal};
use togglekit::orbit::{orbit, DEFAULT_CAP};
use togglekit::poset::Poset;
use togglekit::rational::parse_rational_list;
use togglekit::sample::{regime_sample, seeded_rng, DEFAULT_RANGE};
use togglekit::tableaux::{
    bridge_check, gt_to_ssyt, promotion, ssyt_to_gt, tableau_to_parray, Orientation, Ssyt, TableauDoc,
};
use togglekit::verify::{describe, run_suite, Mode, Suite, VerifyConfig};
use togglekit::Error;

#[derive(Parser)]
#[command(name = "togglekit", version, about = "Toggle dynamics on finite posets in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbit of a starting point under rowmotion or promotion.
    Orbit(OrbitArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Convert or promote a rectangular tableau given as JSON.
    Tableau(TableauArgs),
}

#[derive(Args)]
struct Target {
    /// Rectangle `AxB`.
    #[arg(long, conflicts_with = "poset")]
    shape: Option<String>,
    /// Poset JSON file.
    #[arg(long)]
    poset: Option<PathBuf>,
}

impl Target {
    fn load(&self) -> anyhow::Result<Arc<Poset>> {
        match (&self.shape, &self.poset) {
            (Some(s), _) => Ok(Arc::new(parse_shape(s)?)),
            (None, Some(p)) => {
                let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                Ok(Arc::new(Poset::from_json(&text)?))
            }
            (None, None) => bail!(Error::Config("one of --shape or --poset is required".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Combinatorial,
    Pl,
    Birational,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Rowmotion,
    Promotion,
}

impl From<MapArg> for MapKind {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Rowmotion => MapKind::Rowmotion,
            MapArg::Promotion => MapKind::Promotion,
        }
    }
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long, value_enum)]
    regime: RegimeArg,
    #[arg(long, value_enum, default_value = "rowmotion")]
    map: MapArg,
    #[command(flatten)]
    target: Target,
    /// Comma-separated values, or element names for the combinatorial regime.
    /// A seeded random point when omitted.
    #[arg(long, allow_hyphen_values = true)]
    start: Option<String>,
    #[arg(long, env = "TOGGLEKIT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// order, recombination, reciprocity, quotient, homomesy, three-step, bridge or vertex.
    suite: String,
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum)]
    regime: Option<RegimeArg>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, env = "TOGGLEKIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Comma-separated values used as the first sample.
    #[arg(long)]
    start: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauAction {
    ToGt,
    ToArray,
    Promote,
    BridgeCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Displayed,
    Transposed,
}

#[derive(Args)]
struct TableauArgs {
    #[arg(value_enum)]
    action: TableauAction,
    /// Tableau JSON: inline, a file path, or `-` for stdin.
    input: String,
    /// Placement of the P-array; `to-array` defaults to displayed,
    /// `bridge-check` to transposed.
    #[arg(long, value_enum)]
    orientation: Option<OrientationArg>,
    #[arg(long)]
    json: bool,
}

/// A failed check, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for CheckFailed {}

fn parse_shape(s: &str) -> anyhow::Result<Poset> {
    let (a, b) =
        s.split_once(['x', 'X']).ok_or_else(|| Error::Config(format!("shape {s:?} is not of the form AxB")))?;
    let a: usize = a.trim().parse().map_err(|_| Error::Config(format!("bad shape {s:?}")))?;
    let b: usize = b.trim().parse().map_err(|_| Error::Config(format!("bad shape {s:?}")))?;
    Ok(Poset::rectangle(a, b)?)
}

const SQUARE_NAMES: [(&str, (usize, usize)); 4] = [("w", (1, 1)), ("x", (2, 1)), ("y", (1, 2)), ("z", (2, 2))];

fn is_square(poset: &Poset) -> bool {
    poset.rectangle_dims() == Some((2, 2))
}

/// Element names, with `w, x, y, z` for the corners of `[2]×[2]`.
fn resolve(poset: &Poset, token: &str) -> anyhow::Result<usize> {
    if is_square(poset) {
        if let Some((_, (i, j))) = SQUARE_NAMES.iter().find(|(n, _)| *n == token.trim()) {
            return Ok(poset.index_of_coord(*i, *j).expect("square"));
        }
    }
    Ok(poset.resolve(token)?)
}

fn name(poset: &Poset, x: usize) -> String {
    if is_square(poset) {
        if let Some((n, _)) = SQUARE_NAMES.iter().find(|(_, c)| poset.coord(x) == Some(*c)) {
            return n.to_string();
        }
    }
    poset.label(x).to_string()
}

/// Splits on commas outside parentheses.
fn split_tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

fn header(poset: &Poset) -> String {
    let labels: Vec<String> = (0..poset.len())
        .map(|x| match name(poset, x) {
            n if is_square(poset) => format!("{n}={}", poset.label(x)),
            n => n,
        })
        .collect();
    format!("elements: {}", labels.join(" "))
}

fn cmd_orbit(args: OrbitArgs) -> anyhow::Result<()> {
    let poset = args.target.load()?;
    let map: MapKind = args.map.into();
    let (regime, states): (&str, Vec<Vec<String>>) = match args.regime {
        RegimeArg::Combinatorial => {
            let members = match &args.start {
                Some(s) => split_tokens(s).iter().map(|t| resolve(&poset, t)).collect::<anyhow::Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            let start = OrderIdeal::new(&poset, members)?;
            let rec = orbit(start, args.cap, |i| match map {
                MapKind::Rowmotion => rowmotion_ideal(&poset, i),
                MapKind::Promotion => promotion_ideal(&poset, i),
            })?;
            let states =
                rec.states.iter().map(|i| i.members().into_iter().map(|x| name(&poset, x)).collect()).collect();
            ("combinatorial", states)
        }
        RegimeArg::Pl => ("pl", numeric_orbit(&PiecewiseLinear::default(), &poset, map, &args)?),
        RegimeArg::Birational => ("birational", numeric_orbit(&Birational::default(), &poset, map, &args)?),
    };
    if args.json {
        let doc = json!({
            "regime": regime,
            "map": map,
            "poset": poset.to_doc(),
            "states": states,
            "period": states.len(),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{}", header(&poset));
        for s in &states {
            if regime == "combinatorial" {
                println!("{{{}}}", s.join(","));
            } else {
                println!("({})", s.join(","));
            }
        }
        println!("period: {}", states.len());
    }
    Ok(())
}

fn numeric_orbit<A: ToggleAlgebra>(
    alg: &A,
    poset: &Arc<Poset>,
    map: MapKind,
    args: &OrbitArgs,
) -> anyhow::Result<Vec<Vec<String>>> {
    let start = match &args.start {
        Some(s) => PArray::new(poset.clone(), parse_rational_list(s)?)?,
        None => regime_sample(&mut seeded_rng(args.seed), alg.regime(), poset, DEFAULT_RANGE),
    };
    alg.validate(start.values())?;
    let rec = orbit(start, args.cap, |f| apply_map(alg, map, f))?;
    Ok(rec.states.iter().map(PArray::to_strings).collect())
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<()> {
    let suite: Suite = args.suite.parse()?;
    let poset = args.target.load()?;
    let mut config = VerifyConfig::new(poset, args.samples.unwrap_or(suite.default_samples()), args.seed);
    config.cap = args.cap;
    config.mode = args.regime.map(|r| match r {
        RegimeArg::Combinatorial => Mode::Combinatorial,
        RegimeArg::Pl => Mode::PiecewiseLinear,
        RegimeArg::Birational => Mode::Birational,
    });
    config.start = args.start.as_deref().map(parse_rational_list).transpose()?;
    let report = run_suite(suite, &config)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("suite {} on {} (seed {})", report.suite, describe(&config.poset), report.seed);
        for t in &report.theorems {
            println!("{} {} [{} samples]", if t.pass { "PASS" } else { "FAIL" }, t.theorem, t.samples);
            for v in &t.violations {
                println!("  input ({}): {}", v.input.join(","), v.detail);
            }
        }
        println!("{}", if report.pass { "pass" } else { "fail" });
    }
    if !report.pass {
        bail!(CheckFailed);
    }
    Ok(())
}

fn read_input(input: &str) -> anyhow::Result<String> {
    if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

fn cmd_tableau(args: TableauArgs) -> anyhow::Result<()> {
    let text = read_input(&args.input)?;
    let doc: TableauDoc = serde_json::from_str(&text).map_err(Error::from)?;
    let t = Ssyt::from_doc(&doc)?;
    let orientation = |default| match args.orientation {
        Some(OrientationArg::Displayed) => Orientation::Displayed,
        Some(OrientationArg::Transposed) => Orientation::Transposed,
        None => default,
    };
    match args.action {
        TableauAction::ToGt => {
            let g = ssyt_to_gt(&t);
            debug_assert_eq!(gt_to_ssyt(&g).ok(), Some(t.clone()));
            if args.json {
                println!("{}", serde_json::to_string(&g)?);
            } else {
                println!("{g}");
            }
        }
        TableauAction::ToArray => {
            let v = tableau_to_parray(&t, orientation(Orientation::Displayed))?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&v.to_doc(&PiecewiseLinear::default()))?);
            } else {
                println!("{}", header(v.poset()));
                println!("{}", v.display());
                let ranks: Vec<String> = v
                    .poset()
                    .ranks()
                    .iter()
                    .rev()
                    .map(|r| {
                        format!(
                            "({})",
                            r.iter()
                                .map(|&x| togglekit::rational::format_rational(v.get(x)))
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                println!("ranks, top first: {}", ranks.join(","));
            }
        }
        TableauAction::Promote => {
            let p = promotion(&t)?;
            if args.json {
                println!("{}", serde_json::to_string(&p.to_doc())?);
            } else {
                println!("{p}");
            }
        }
        TableauAction::BridgeCheck => {
            let r = bridge_check(&t, orientation(Orientation::Transposed))?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                let (name, rhs) = match r.orientation {
                    Orientation::Transposed => ("transposed", "π_P(v(T))"),
                    Orientation::Displayed => ("displayed", "π_P⁻¹(v(T))"),
                };
                println!("orientation: {name}");
                println!("v(π_S(T)) = ({})", r.left.join(","));
                println!("{rhs} = ({})", r.right.join(","));
                println!("equal: {}", r.equal);
            }
            if !r.equal {
                bail!(CheckFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Orbit(a) => cmd_orbit(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Tableau(a) => cmd_tableau(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
