mod cache;
mod diagram;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use d2rep::functors::{induce, omega_power, restrict};
use d2rep::groups::Group;
use d2rep::homspaces::{hom_space, is_isomorphic, summand_witness};
use d2rep::modules::{band_module, regular_module, string_module, GroupModule};
use d2rep::scalars::Field;
use d2rep::strings::{c_band, c_band_halves, d_band, BandWord, StringWord};
use d2rep::verifier::{
    verify_band_family_induction, verify_band_parameter_induction, verify_cyclic_induction, verify_d8_vertex_table,
    verify_index_two_syzygy_induction, verify_induced_indecomposability, verify_induction_formula,
    verify_subgroup_vertex_tables, Report, Side, VertexTableConfig, DEFAULT_SEED,
};
use d2rep::vertices::vertex;
use d2rep::Error;
use serde::Deserialize;

use crate::cache::Cache;
use crate::diagram::render_diagram;

const SEED_VAR: &str = "D2REP_SEED";
const CONFIG_VAR: &str = "D2REP_CONFIG";

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 3;
const EXIT_INVALID_WORD: u8 = 4;
const EXIT_UNKNOWN_SUBGROUP: u8 = 5;

#[derive(Parser)]
#[command(name = "d2rep", version, about = "Modules over group algebras of dihedral 2-groups in characteristic 2")]
struct Cli {
    /// TOML file with optional `field_m` and `workers` defaults
    #[arg(long, global = true, env = CONFIG_VAR)]
    config: Option<PathBuf>,
    /// Worker threads for the verify subcommands
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Cache outputs under this directory, keyed by a hash of the inputs
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Word-level operations
    #[command(subcommand)]
    String(StringCmd),
    /// Build modules as JSON
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Induce a module from a subgroup
    Induce {
        #[arg(long)]
        from: String,
        #[arg(long)]
        file: PathBuf,
        /// Order of the ambient dihedral group (default: twice the module's group order)
        #[arg(long, value_parser = parse_order)]
        order: Option<u32>,
    },
    /// Restrict a module to a subgroup
    Restrict {
        #[arg(long)]
        to: String,
        #[arg(long)]
        file: PathBuf,
    },
    /// Homomorphism space between two modules
    Hom {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        dim_only: bool,
    },
    /// Decide whether two modules (the first indecomposable) are isomorphic
    Iso { a: PathBuf, b: PathBuf },
    /// Decide whether the indecomposable `m` is a direct summand of `x`
    Summand {
        m: PathBuf,
        x: PathBuf,
        /// Print the inclusion and projection
        #[arg(long)]
        witness: bool,
    },
    /// Syzygy (`n > 0`) or cosyzygy (`n < 0`) powers
    Omega {
        #[arg(long, allow_hyphen_values = true)]
        n: i32,
        file: PathBuf,
    },
    /// Lift a string from an index-two subalgebra and optionally test the induction formula
    Phi {
        word: String,
        #[command(flatten)]
        lift: LiftArgs,
        /// Compare the induced module with the module of the lifted string
        #[arg(long)]
        check: bool,
    },
    /// Vertex of an indecomposable module
    Vertex { file: PathBuf },
    /// Run verification reports
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct OrderArg {
    /// Order of the dihedral group, e.g. 8 or 2^3
    #[arg(long, default_value = "8", value_parser = parse_order)]
    order: u32,
}

#[derive(Args)]
struct LiftArgs {
    /// Order of the dihedral group lifted into; the word lives over its index-two subalgebra
    #[arg(long, default_value = "8", value_parser = parse_order)]
    order: u32,
    #[arg(long, value_enum, default_value_t = SideArg::T0)]
    side: SideArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    T0,
    T1,
    Both,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::T0 => Side::T0,
            SideArg::T1 => Side::T1,
            SideArg::Both => Side::Both,
        }
    }
}

#[derive(Subcommand)]
enum StringCmd {
    /// Validate a word and draw its diagram
    Parse {
        word: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// The formal inverse of a word
    Inverse {
        word: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Maximal same-direction runs
    Segments {
        word: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Relations between consecutive segments, for a word over the index-two subalgebra
    Compare {
        word: String,
        #[arg(long, default_value = "8", value_parser = parse_order)]
        order: u32,
        /// Only the relation between segments i and i+1
        #[arg(long)]
        index: Option<usize>,
    },
    /// The lifted string
    Phi {
        word: String,
        #[command(flatten)]
        lift: LiftArgs,
    },
    /// The band family C_n (or D_n)
    Cband {
        n: usize,
        #[arg(long)]
        d: bool,
        /// Also print the two palindromic halves and the core
        #[arg(long)]
        halves: bool,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    BuildString {
        word: String,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        field_m: Option<u32>,
    },
    BuildBand {
        word: String,
        #[command(flatten)]
        order: OrderArg,
        /// Jordan block size
        #[arg(long, default_value_t = 1)]
        mult: usize,
        /// Eigenvalue as a hexadecimal bit pattern in GF(2^field_m)
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long)]
        field_m: Option<u32>,
    },
    Regular {
        #[command(flatten)]
        order: OrderArg,
        /// Cyclic group of the given order instead of the dihedral one
        #[arg(long)]
        cyclic: bool,
        #[arg(long)]
        field_m: Option<u32>,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Emit one JSON object per line instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Vertex table of indecomposable kD_8-modules
    #[command(name = "thm3.1")]
    VertexTable {
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        #[arg(long)]
        field_m: Option<u32>,
        #[arg(long, default_value_t = 2)]
        max_mult: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Induction formula Ind M(C) = M(phi(C))
    #[command(name = "conj4.3")]
    InductionFormula {
        #[arg(long, value_parser = parse_order)]
        order: u32,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
        /// Lines for strings with more local-minimum segments are informational
        #[arg(long)]
        assert_max_minima: Option<usize>,
        /// Also decompose this many seeded random induced modules
        #[arg(long, default_value_t = 0)]
        decompose_count: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Band families C_n and D_n as induced modules
    #[command(name = "prop3.9")]
    BandFamilies {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Subgroup tables, cyclic and index-two inductions, band parameters
    Lemmas {
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    field_m: Option<u32>,
    workers: Option<usize>,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidWord(_) | Error::InvalidBand(_) => EXIT_INVALID_WORD,
            Error::UnknownSubgroup(_) | Error::NotSubgroup(_) => EXIT_UNKNOWN_SUBGROUP,
            _ => EXIT_INVALID_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: String) -> Failure {
    Failure { code: EXIT_INVALID_INPUT, message }
}

/// Successful output: the text and whether all requested checks passed.
struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), pass: true }
    }
}

fn parse_order(text: &str) -> Result<u32, String> {
    let order = match text.split_once('^') {
        Some(("2", e)) => e.parse::<u32>().ok().filter(|&e| e < 32).map(|e| 1u32 << e),
        Some(_) => None,
        None => text.parse::<u32>().ok(),
    };
    match order {
        Some(o) if o >= 4 && o.is_power_of_two() => Ok(o.trailing_zeros()),
        _ => Err(format!("{text:?} is not a power of two at least 4")),
    }
}

fn parse_seed(text: &str) -> Result<u64, Failure> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x") {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| invalid(format!("{SEED_VAR}={text:?} is not an integer")))
}

fn load_config(path: Option<&Path>) -> Result<Config, Failure> {
    let Some(path) = path else { return Ok(Config::default()) };
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_module(path: &Path) -> Result<GroupModule, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    GroupModule::from_json(&text).map_err(|e| Failure { message: format!("{}: {e}", path.display()), ..e.into() })
}

fn field(m: Option<u32>, config: &Config) -> Result<Field, Failure> {
    Ok(Field::new(m.or(config.field_m).unwrap_or(1))?)
}

fn string_over(word: &str, n: u32) -> Result<StringWord, Failure> {
    Ok(StringWord::parse(word, n)?)
}

fn lift(word: &StringWord, side: SideArg) -> Result<StringWord, Failure> {
    Ok(match side {
        SideArg::T1 => word.psi()?,
        _ => word.phi()?,
    })
}

fn render_report(report: &Report, args: &ReportArgs) -> Output {
    let text = if args.json { report.json_lines() } else { report.summary_table() };
    Output { text, pass: report.passed() }
}

fn run_string(cmd: StringCmd) -> Result<Output, Failure> {
    match cmd {
        StringCmd::Parse { word, order } => {
            let w = string_over(&word, order.order)?;
            Ok(Output::ok(format!("{w}\nlength {} dimension {}\n{}", w.len(), w.len() + 1, render_diagram(&w))))
        }
        StringCmd::Inverse { word, order } => Ok(Output::ok(format!("{}\n", string_over(&word, order.order)?.inverse()))),
        StringCmd::Segments { word, order } => {
            let w = string_over(&word, order.order)?;
            let text = w.to_string();
            let mut pos = 0;
            let mut parts = Vec::new();
            for s in w.segments()? {
                parts.push(&text[pos..pos + s.len]);
                pos += s.len;
            }
            Ok(Output::ok(parts.join(" ") + "\n"))
        }
        StringCmd::Compare { word, order, index } => {
            let w = string_over(&word, order - 1)?;
            let text = match index {
                Some(i) => w.compare_segments(i)?.to_string(),
                None => {
                    let count = w.segments()?.len();
                    let rels: Result<Vec<_>, _> = (1..count).map(|i| w.compare_segments(i)).collect();
                    rels?.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ")
                }
            };
            Ok(Output::ok(text + "\n"))
        }
        StringCmd::Phi { word, lift: args } => {
            let w = string_over(&word, args.order - 1)?;
            Ok(Output::ok(format!("{}\n", lift(&w, args.side)?)))
        }
        StringCmd::Cband { n, d, halves } => {
            let band = if d { d_band(n)? } else { c_band(n)? };
            let mut text = format!("{}\n", band.word());
            if halves {
                let h = c_band_halves(n)?;
                let _ = writeln!(text, "first {}\nsecond {}\ncore {}", h.first, h.second, h.core);
            }
            Ok(Output::ok(text))
        }
    }
}

fn run_module(cmd: ModuleCmd, config: &Config) -> Result<Output, Failure> {
    let m = match cmd {
        ModuleCmd::BuildString { word, order, field_m } => {
            string_module(&string_over(&word, order.order)?, field(field_m, config)?)?
        }
        ModuleCmd::BuildBand { word, order, mult, lambda, field_m } => {
            let f = field(field_m, config)?;
            let band = BandWord::parse(&word, order.order)?;
            band_module(&band, mult, f.parse_scalar(&lambda)?, f)?
        }
        ModuleCmd::Regular { order, cyclic, field_m } => {
            let g = if cyclic { Group::cyclic(1 << order.order)? } else { Group::dihedral(order.order)? };
            regular_module(g, field(field_m, config)?)?
        }
    };
    Ok(Output::ok(m.to_json() + "\n"))
}

fn run_verify(cmd: VerifyCmd, config: &Config, seed: u64) -> Result<Output, Failure> {
    match cmd {
        VerifyCmd::VertexTable { max_len, field_m, max_mult, report } => {
            let cfg = VertexTableConfig {
                max_string_len: max_len,
                max_band_mult: max_mult,
                field_m: field_m.or(config.field_m).unwrap_or(2),
                ..VertexTableConfig::default()
            };
            Ok(render_report(&verify_d8_vertex_table(&cfg)?, &report))
        }
        VerifyCmd::InductionFormula { order, max_len, side, assert_max_minima, decompose_count, report } => {
            let sweep = verify_induction_formula(order, max_len, side.into(), assert_max_minima)?;
            let mut full = sweep.report;
            if decompose_count > 0 {
                full.extend(verify_induced_indecomposability(order, decompose_count, max_len, seed)?);
            }
            let mut out = render_report(&full, &report);
            if !report.json {
                for s in &sweep.strata {
                    let kind = if s.asserted { "asserted" } else { "recorded" };
                    let _ = writeln!(
                        out.text,
                        "local minima {}: {}/{} passed ({kind})",
                        s.local_minima, s.passed, s.total
                    );
                }
            }
            Ok(out)
        }
        VerifyCmd::BandFamilies { max_n, report } => Ok(render_report(&verify_band_family_induction(max_n)?, &report)),
        VerifyCmd::Lemmas { report } => {
            let mut all = Report::new("subgroup tables and induction lemmas");
            for r in [
                verify_subgroup_vertex_tables()?,
                verify_cyclic_induction()?,
                verify_index_two_syzygy_induction()?,
                verify_band_parameter_induction(2)?,
                verify_band_parameter_induction(4)?,
            ] {
                all.extend(r);
            }
            Ok(render_report(&all, &report))
        }
    }
}

fn verdict(holds: bool) -> Output {
    Output { text: format!("{holds}\n"), pass: holds }
}

fn run(cmd: Command, config: &Config, seed: u64) -> Result<Output, Failure> {
    match cmd {
        Command::String(c) => run_string(c),
        Command::Module(c) => run_module(c, config),
        Command::Induce { from, file, order } => {
            let m = read_module(&file)?;
            let n = match order {
                Some(n) => n,
                None => (2 * m.group().order()).trailing_zeros(),
            };
            let sub = Group::dihedral(n)?.parse_subgroup(&from)?;
            Ok(Output::ok(induce(&m, &sub)?.to_json() + "\n"))
        }
        Command::Restrict { to, file } => {
            let m = read_module(&file)?;
            let sub = m.group().parse_subgroup(&to)?;
            Ok(Output::ok(restrict(&m, &sub)?.to_json() + "\n"))
        }
        Command::Hom { a, b, dim_only } => {
            let hom = hom_space(&read_module(&a)?, &read_module(&b)?)?;
            if dim_only {
                return Ok(Output::ok(format!("{}\n", hom.dim())));
            }
            let basis = serde_json::to_string(&hom.basis).map_err(|e| invalid(e.to_string()))?;
            Ok(Output::ok(basis + "\n"))
        }
        Command::Iso { a, b } => Ok(verdict(is_isomorphic(&read_module(&a)?, &read_module(&b)?)?)),
        Command::Summand { m, x, witness } => {
            let found = summand_witness(&read_module(&m)?, &read_module(&x)?)?;
            match (&found, witness) {
                (Some(w), true) => {
                    let json = serde_json::to_string(w).map_err(|e| invalid(e.to_string()))?;
                    Ok(Output::ok(format!("true\n{json}\n")))
                }
                _ => Ok(verdict(found.is_some())),
            }
        }
        Command::Omega { n, file } => Ok(Output::ok(omega_power(&read_module(&file)?, n)?.to_json() + "\n")),
        Command::Phi { word, lift: args, check } => {
            let w = string_over(&word, args.order - 1)?;
            let sides: Vec<(&str, SideArg)> = match args.side {
                SideArg::Both => vec![("T0", SideArg::T0), ("T1", SideArg::T1)],
                SideArg::T0 => vec![("T0", SideArg::T0)],
                SideArg::T1 => vec![("T1", SideArg::T1)],
            };
            let g = Group::dihedral(args.order)?;
            let f = Field::gf2();
            let mut out = Output::ok(String::new());
            for (name, side) in sides {
                let lifted = lift(&w, side)?;
                let _ = write!(out.text, "{lifted}");
                if check {
                    let induced = induce(&string_module(&w, f)?, &g.parse_subgroup(name)?)?;
                    let holds = is_isomorphic(&string_module(&lifted, f)?, &induced)?;
                    out.pass &= holds;
                    let _ = write!(out.text, " Ind_{name} M({w}) iso M({lifted}): {holds}");
                }
                out.text.push('\n');
            }
            Ok(out)
        }
        Command::Vertex { file } => Ok(Output::ok(format!("{}\n", vertex(&read_module(&file)?)?))),
        Command::Verify(c) => run_verify(c, config, seed),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&argv);
    let result = (|| {
        let config = load_config(cli.config.as_deref())?;
        let seed = match std::env::var(SEED_VAR) {
            Ok(s) => parse_seed(&s)?,
            Err(_) => DEFAULT_SEED,
        };
        if let Some(w) = cli.workers.or(config.workers) {
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build_global()
                .map_err(|e| invalid(format!("worker pool: {e}")))?;
        }
        let cache = cli.cache_dir.as_deref().map(|d| Cache::new(d, &argv, seed));
        if let Some((pass, text)) = cache.as_ref().and_then(Cache::load) {
            return Ok(Output { text, pass });
        }
        let out = run(cli.command, &config, seed)?;
        if let Some(c) = &cache {
            c.store(out.pass, &out.text).map_err(|e| invalid(format!("cache: {e}")))?;
        }
        Ok(out)
    })();
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_parsing() {
        assert_eq!(parse_order("8"), Ok(3));
        assert_eq!(parse_order("2^5"), Ok(5));
        assert!(parse_order("12").is_err());
        assert!(parse_order("2").is_err());
        assert!(parse_order("3^2").is_err());
    }

    #[test]
    fn exit_codes_are_distinct() {
        let word: Failure = Error::InvalidWord("x".into()).into();
        let sub: Failure = Error::UnknownSubgroup("x".into()).into();
        let file: Failure = Error::Malformed("x".into()).into();
        assert_eq!([word.code, sub.code, file.code], [EXIT_INVALID_WORD, EXIT_UNKNOWN_SUBGROUP, EXIT_INVALID_INPUT]);
    }

    #[test]
    fn seeds_accept_hex_and_decimal() {
        assert_eq!(parse_seed("0x5eed").ok(), Some(0x5eed));
        assert_eq!(parse_seed("17").ok(), Some(17));
        assert!(parse_seed("seed").is_err());
    }
}
