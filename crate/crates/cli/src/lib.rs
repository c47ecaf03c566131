//! Command-line front end for `z4codes`.
//!
//! Polynomials are digit strings written lowest degree first: `101001` is
//! `1 + X^2 + X^5` and `323001` is `3 + 2X + 3X^2 + X^5`.
//!
//! Exit codes: 0 on success, 1 when a check ran and failed, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use z4codes::families::{
    kerdock_quaternary, nordstrom_robinson, octacode, preparata_quaternary, resolve_primitive,
    verify_family, FamilyReport,
};
use z4codes::galois::kerdock_via_trace;
use z4codes::gray::{
    gray_image, gray_image_linear_span, image_is_linear, image_is_linear_exhaustive,
    is_distance_invariant, min_distance_binary, reed_muller, swap_condition_exhaustive,
    swap_condition_holds, DistanceVerdict, LinearBinaryCode,
};
use z4codes::io::{parse_code_file, write_binary_code, write_z4_code, CodeFile};
use z4codes::poly::{generator_poly_g, hensel_lift};
use z4codes::{
    BinPoly, BinaryCode, BivariateWeightEnumerator, Error, GaloisRing, QuaternaryCode,
    TrivariateWeightEnumerator, Z4Poly, Z4Vector, DEFAULT_CAP,
};

/// Default bound on the Lee or Hamming weight explored by low-weight
/// searches.
pub const DEFAULT_WMAX: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "z4codes",
    version,
    about = "Linear codes over Z4 and their Gray images"
)]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Largest number of codewords any command will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Weight limit for low-weight searches.
    #[arg(long, global = true, default_value_t = DEFAULT_WMAX as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub wmax: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hensel lift of a binary primitive polynomial to Z4.
    Lift {
        /// Binary polynomial, lowest degree first (e.g. 101001).
        #[arg(long)]
        h2: String,
    },
    /// Kerdock generator polynomial g for degree m.
    Genpoly {
        #[arg(long)]
        m: usize,
        /// Primitive polynomial; defaults to the one with the least bit mask.
        #[arg(long)]
        h2: Option<String>,
    },
    /// Build a code and write it in the code file format.
    Build {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        h2: Option<String>,
        /// Reed-Muller order.
        #[arg(long)]
        r: Option<usize>,
        /// Generator polynomial of a cyclic code, lowest degree first.
        #[arg(long)]
        g: Option<String>,
        /// Length of a cyclic code.
        #[arg(long)]
        n: Option<usize>,
        /// Append an overall parity digit to a cyclic code.
        #[arg(long)]
        extend: bool,
        /// Write the Gray image instead of the quaternary code.
        #[arg(long)]
        binary: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Dual of a quaternary or linear binary code.
    Dual {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Gray image of a quaternary code as an explicit binary code.
    Gray {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Symmetrized weight enumerator of a quaternary code.
    Swe { input: PathBuf },
    /// Hamming weight enumerator of a binary code, or of the Gray image of a
    /// quaternary code.
    Hwe { input: PathBuf },
    /// MacWilliams transform of a code's enumerator or of an enumerator file.
    Macwilliams {
        #[arg(value_enum)]
        kind: TransformKind,
        /// Code file or enumerator JSON.
        input: PathBuf,
        /// Size of the code the enumerator belongs to (default: its mass).
        #[arg(long)]
        size: Option<BigUint>,
    },
    /// Minimum Lee distance of a quaternary code or Hamming distance of a
    /// binary code.
    Mindist { input: PathBuf },
    /// Binary linear span of the Gray image of a quaternary code.
    Span {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Verification commands; exit 1 when the property fails.
    Check {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Kerdock,
    Preparata,
    Octacode,
    Nr,
    Rm,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Swe,
    Binary,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file (default: standard output).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// The quaternary code equals its dual.
    SelfDual { input: PathBuf },
    /// The Gray image of the quaternary code is linear.
    ImageLinear {
        input: PathBuf,
        /// Test every pair of codewords instead of generator pairs.
        #[arg(long)]
        exhaustive: bool,
    },
    /// The swap-map criterion on a linear binary code, in its given
    /// coordinate order.
    Swap {
        /// Linear binary code file; alternatively give --r and --m for a
        /// Reed-Muller code.
        input: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Every codeword has the same distance distribution.
    DistanceInvariant { input: PathBuf },
    /// Parameters of the Kerdock and Preparata codes for degree m.
    Family {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h2: Option<String>,
    },
    /// The trace construction reproduces the cyclic Kerdock code.
    TraceCrosscheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h2: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Reply, Failure>;

/// Command output and whether the checked property held.
struct Reply {
    text: String,
    ok: bool,
}

impl Reply {
    fn ok(text: String) -> Self {
        Reply { text, ok: true }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        pool = pool.num_threads(w as usize);
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| execute(&cli)),
        Err(e) => Err(Failure::Input(format!("cannot start worker pool: {e}"))),
    };
    match result {
        Ok(reply) => Outcome {
            code: if reply.ok { 0 } else { 1 },
            stdout: reply.text,
            stderr: String::new(),
        },
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let ctx = Ctx {
        cap: cli.cap,
        wmax: cli.wmax as usize,
        json: cli.format == Format::Json,
    };
    match &cli.command {
        Command::Lift { h2 } => ctx.lift(h2),
        Command::Genpoly { m, h2 } => ctx.genpoly(*m, h2.as_deref()),
        Command::Build {
            family,
            m,
            h2,
            r,
            g,
            n,
            extend,
            binary,
            out,
        } => {
            let code = build(*family, *m, h2.as_deref(), *r, g.as_deref(), *n, *extend)?;
            let code = match code {
                CodeFile::Z4(d) if *binary => CodeFile::F2(gray_image(&d, ctx.cap)?),
                other => other,
            };
            ctx.emit_code(&code, out)
        }
        Command::Dual { input, out } => {
            let dual = match read_code(input)? {
                CodeFile::Z4(d) => CodeFile::Z4(d.dual()),
                CodeFile::F2(c) => match c.as_linear() {
                    Some(l) => CodeFile::F2(BinaryCode::Linear(l.dual())),
                    None => return input_error("the dual is only defined for linear binary codes"),
                },
            };
            ctx.emit_code(&dual, out)
        }
        Command::Gray { input, out } => {
            let d = read_z4(input)?;
            ctx.emit_code(&CodeFile::F2(gray_image(&d, ctx.cap)?), out)
        }
        Command::Swe { input } => {
            let d = read_z4(input)?;
            Ok(Reply::ok(ctx.trivariate(
                &TrivariateWeightEnumerator::of_code(&d, ctx.cap)?,
            )))
        }
        Command::Hwe { input } => {
            let hwe = match read_code(input)? {
                CodeFile::Z4(d) => TrivariateWeightEnumerator::of_code(&d, ctx.cap)?.to_hamming(),
                CodeFile::F2(c) => BivariateWeightEnumerator::of_words(c.len(), &c.words(ctx.cap)?),
            };
            Ok(Reply::ok(ctx.bivariate(&hwe)))
        }
        Command::Macwilliams { kind, input, size } => ctx.macwilliams(*kind, input, size.as_ref()),
        Command::Mindist { input } => ctx.mindist(input),
        Command::Span { input, out } => {
            let d = read_z4(input)?;
            ctx.emit_code(
                &CodeFile::F2(BinaryCode::Linear(gray_image_linear_span(&d))),
                out,
            )
        }
        Command::Check { check } => ctx.check(check),
    }
}

struct Ctx {
    cap: u64,
    wmax: usize,
    json: bool,
}

fn input_error<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Input(msg.into()))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")));
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<CodeFile, Failure> {
    parse_code_file(&read_text(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_z4(path: &Path) -> Result<QuaternaryCode, Failure> {
    match read_code(path)? {
        CodeFile::Z4(d) => Ok(d),
        CodeFile::F2(_) => input_error(format!("{}: expected a Z4 code file", path.display())),
    }
}

fn parse_h2(m: usize, h2: Option<&str>) -> Result<BinPoly, Failure> {
    let h2 = h2.map(str::parse::<BinPoly>).transpose()?;
    Ok(resolve_primitive(m, h2.as_ref())?)
}

fn required<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Input(format!("{family} requires {flag}")))
}

fn build(
    family: Family,
    m: Option<usize>,
    h2: Option<&str>,
    r: Option<usize>,
    g: Option<&str>,
    n: Option<usize>,
    extend: bool,
) -> Result<CodeFile, Failure> {
    Ok(match family {
        Family::Kerdock => {
            let m = required(m, "--m", "kerdock")?;
            CodeFile::Z4(kerdock_quaternary(m, Some(&parse_h2(m, h2)?))?)
        }
        Family::Preparata => {
            let m = required(m, "--m", "preparata")?;
            CodeFile::Z4(preparata_quaternary(m, Some(&parse_h2(m, h2)?))?)
        }
        Family::Octacode => CodeFile::Z4(octacode()),
        Family::Nr => CodeFile::F2(nordstrom_robinson()),
        Family::Rm => {
            let m = required(m, "--m", "rm")?;
            let r = required(r, "--r", "rm")?;
            CodeFile::F2(BinaryCode::Linear(reed_muller(r, m)?))
        }
        Family::Cyclic => {
            let g: Z4Poly = g
                .ok_or_else(|| Failure::Input("cyclic requires --g".into()))?
                .parse()?;
            let n = required(n, "--n", "cyclic")?;
            let code = QuaternaryCode::cyclic(&g, n)?;
            CodeFile::Z4(if extend { code.extend_parity() } else { code })
        }
    })
}

fn verdict(name: &str, holds: bool, json: bool) -> Reply {
    let text = if json {
        format!("{}\n", json!({ "check": name, "result": holds }))
    } else {
        format!("{name}: {holds}\n")
    };
    Reply { text, ok: holds }
}

fn size_text(size: &BigUint) -> String {
    size.to_string()
}

impl Ctx {
    fn lift(&self, h2: &str) -> CmdResult {
        let h2: BinPoly = h2.parse()?;
        let h = hensel_lift(&h2)?;
        Ok(Reply::ok(if self.json {
            format!("{}\n", json!({ "h2": h2.to_digits(), "h": h.to_digits() }))
        } else {
            format!("{}\n", h.to_digits())
        }))
    }

    fn genpoly(&self, m: usize, h2: Option<&str>) -> CmdResult {
        let h2 = parse_h2(m, h2)?;
        let h = hensel_lift(&h2)?;
        let g = generator_poly_g(&h, m)?;
        Ok(Reply::ok(if self.json {
            let v = json!({ "m": m, "h2": h2.to_digits(), "h": h.to_digits(), "g": g.to_digits() });
            format!("{v}\n")
        } else {
            format!("{}\n", g.to_digits())
        }))
    }

    fn emit_code(&self, code: &CodeFile, out: &Output) -> CmdResult {
        let (text, kind, n, size) = match code {
            CodeFile::Z4(d) => (write_z4_code(d), "Z4", d.len(), d.size()),
            CodeFile::F2(c) => (write_binary_code(c)?, "F2", c.len(), c.size()),
        };
        let Some(path) = &out.output else {
            return Ok(Reply::ok(text));
        };
        fs::write(path, &text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
        Ok(Reply::ok(if self.json {
            let v = json!({
                "path": path.display().to_string(),
                "kind": kind,
                "n": n,
                "size": size_text(&size),
            });
            format!("{v}\n")
        } else {
            format!(
                "wrote {kind} code of length {n} with {size} words to {}\n",
                path.display()
            )
        }))
    }

    fn trivariate(&self, e: &TrivariateWeightEnumerator) -> String {
        if self.json {
            return format!("{}\n", e.to_json());
        }
        let mut s = String::new();
        for ((n0, n1, n2), c) in e.terms() {
            writeln!(s, "{c} x^{n0} y^{n1} z^{n2}").expect("string write");
        }
        s
    }

    fn bivariate(&self, e: &BivariateWeightEnumerator) -> String {
        if self.json {
            return format!("{}\n", e.to_json());
        }
        let n = e.degree();
        let mut s = String::new();
        for (w, c) in e.terms() {
            writeln!(s, "{c} x^{} y^{w}", n - w).expect("string write");
        }
        s
    }

    fn macwilliams(&self, kind: TransformKind, input: &Path, size: Option<&BigUint>) -> CmdResult {
        let text = read_text(input)?;
        let is_json = text.trim_start().starts_with('{');
        let parse_json = || {
            serde_json::from_str::<Value>(&text)
                .map_err(|e| Failure::Input(format!("{}: invalid JSON: {e}", input.display())))
        };
        let code = || {
            parse_code_file(&text).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))
        };
        match kind {
            TransformKind::Swe => {
                let swe = if is_json {
                    TrivariateWeightEnumerator::from_json(&parse_json()?)?
                } else {
                    match code()? {
                        CodeFile::Z4(d) => TrivariateWeightEnumerator::of_code(&d, self.cap)?,
                        CodeFile::F2(_) => return input_error("swe transform needs a Z4 code"),
                    }
                };
                let size = size.cloned().unwrap_or_else(|| swe.mass());
                Ok(Reply::ok(self.trivariate(&swe.macwilliams(&size)?)))
            }
            TransformKind::Binary => {
                let hwe = if is_json {
                    BivariateWeightEnumerator::from_json(&parse_json()?)?
                } else {
                    match code()? {
                        CodeFile::F2(c) => {
                            BivariateWeightEnumerator::of_words(c.len(), &c.words(self.cap)?)
                        }
                        CodeFile::Z4(d) => {
                            TrivariateWeightEnumerator::of_code(&d, self.cap)?.to_hamming()
                        }
                    }
                };
                let size = size.cloned().unwrap_or_else(|| hwe.mass());
                Ok(Reply::ok(self.bivariate(&hwe.macwilliams(&size)?)))
            }
        }
    }

    fn mindist(&self, input: &Path) -> CmdResult {
        let (metric, binary) = match read_code(input)? {
            CodeFile::Z4(d) => ("lee", BinaryCode::GrayImage(d)),
            CodeFile::F2(c) => ("hamming", c),
        };
        let v = min_distance_binary(&binary, self.cap, self.wmax)?;
        Ok(Reply::ok(if self.json {
            let (verdict, distance) = match v {
                DistanceVerdict::Exact(d) => ("exact", json!(d)),
                DistanceVerdict::AboveLimit(_) => ("above-limit", Value::Null),
                DistanceVerdict::Undefined => ("undefined", Value::Null),
            };
            let v = json!({ "metric": metric, "verdict": verdict, "distance": distance, "limit": self.wmax });
            format!("{v}\n")
        } else {
            format!("{metric} distance: {v}\n")
        }))
    }

    fn check(&self, check: &Check) -> CmdResult {
        match check {
            Check::SelfDual { input } => {
                let d = read_z4(input)?;
                Ok(verdict("self-dual", d.equal_as_sets(&d.dual())?, self.json))
            }
            Check::ImageLinear { input, exhaustive } => {
                let d = read_z4(input)?;
                let holds = if *exhaustive {
                    image_is_linear_exhaustive(&d, self.cap)?
                } else {
                    image_is_linear(&d)
                };
                Ok(verdict("image-linear", holds, self.json))
            }
            Check::Swap {
                input,
                r,
                m,
                exhaustive,
            } => {
                let code = swap_input(input.as_deref(), *r, *m)?;
                let holds = if *exhaustive {
                    swap_condition_exhaustive(&code, self.cap)?
                } else {
                    swap_condition_holds(&code)?
                };
                Ok(verdict("swap", holds, self.json))
            }
            Check::DistanceInvariant { input } => {
                let c = match read_code(input)? {
                    CodeFile::Z4(d) => gray_image(&d, self.cap)?,
                    CodeFile::F2(c) => c,
                };
                Ok(verdict(
                    "distance-invariant",
                    is_distance_invariant(&c, self.cap)?,
                    self.json,
                ))
            }
            Check::Family { m, h2 } => {
                let h2 = parse_h2(*m, h2.as_deref())?;
                let report = verify_family(*m, Some(&h2), self.cap)?;
                Ok(Reply {
                    text: self.report(&report),
                    ok: report.passed(),
                })
            }
            Check::TraceCrosscheck { m, h2 } => self.trace_crosscheck(*m, h2.as_deref()),
        }
    }

    fn report(&self, report: &FamilyReport) -> String {
        if self.json {
            return format!("{}\n", report.to_json());
        }
        let mut s = format!("{} m={} h2={}\n", report.family, report.m, report.h2);
        for f in &report.fields {
            let status = match f.pass {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            writeln!(
                s,
                "{status} {}: expected {}, got {}",
                f.name, f.expected, f.actual
            )
            .expect("string write");
        }
        writeln!(
            s,
            "{}",
            if report.passed() {
                "all checks passed"
            } else {
                "some checks failed"
            }
        )
        .expect("string write");
        s
    }

    fn trace_crosscheck(&self, m: usize, h2: Option<&str>) -> CmdResult {
        let h2 = parse_h2(m, h2)?;
        let ring = GaloisRing::from_primitive(&h2)?;
        let d = kerdock_quaternary(m, Some(&h2))?;
        let words = kerdock_via_trace(&ring)?;
        let n = d.len();
        let trace_swe = TrivariateWeightEnumerator::from_terms(
            n,
            words
                .iter()
                .map(|w| (w.symmetrized_counts(), BigUint::from(1u8))),
        )?;
        let swe_equal = trace_swe == TrivariateWeightEnumerator::of_code(&d, self.cap)?;
        let mut distinct = words.clone();
        distinct.sort();
        distinct.dedup();
        let size_equal = d.size() == BigUint::from(distinct.len());
        // Extended coordinate moved from first to last.
        let mut contained = true;
        for w in &words {
            let mut e = w.entries()[1..].to_vec();
            e.push(w.entries()[0]);
            if !d.contains(&Z4Vector::new(e))? {
                contained = false;
                break;
            }
        }
        let coordinate_equal = size_equal && contained;
        let ok = swe_equal && size_equal && coordinate_equal;
        let text = if self.json {
            let v = json!({
                "m": m,
                "h2": h2.to_digits(),
                "swe_equal": swe_equal,
                "size_equal": size_equal,
                "equal_with_extended_coordinate_last": coordinate_equal,
                "result": ok,
            });
            format!("{v}\n")
        } else {
            format!(
                "swe equal: {swe_equal}\nsize equal: {size_equal}\n\
                 equal with extended coordinate last: {coordinate_equal}\n"
            )
        };
        Ok(Reply { text, ok })
    }
}

fn swap_input(
    input: Option<&Path>,
    r: Option<usize>,
    m: Option<usize>,
) -> Result<LinearBinaryCode, Failure> {
    match (input, r, m) {
        (Some(path), None, None) => match read_code(path)? {
            CodeFile::F2(c) => match c.as_linear() {
                Some(l) => Ok(l.clone()),
                None => input_error("the swap check needs a linear binary code"),
            },
            CodeFile::Z4(_) => input_error("the swap check needs a linear binary code"),
        },
        (None, Some(r), Some(m)) => Ok(reed_muller(r, m)?),
        _ => input_error("give either a code file or both --r and --m"),
    }
}
