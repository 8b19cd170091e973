use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use spin_orbits::normal_form::{canonical_m, fixed_point, reduce};
use spin_orbits::orbit::{census, enumerate_orbits, verify_isotropy, MAX_ENUMERATION_GENUS};
use spin_orbits::verify::{verify_range, Status, VerifyOptions};
use spin_orbits::{arf, Error, SpinMatrix};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SKIP: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spin-orbits",
    version,
    about = "Orbits of spin structures under the braid generators sigma_1..sigma_{2g+1}"
)]
struct Cli {
    /// Emit JSON instead of tab-separated text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Largest genus for which enumeration-backed checks run.
    #[arg(long = "max-g", global = true, value_name = "N", default_value_t = 8)]
    max_g: usize,

    /// Treat skipped checks as failures (exit status 3).
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the class index, representative, and Arf invariant of a matrix.
    Classify { genus: usize, matrix: String },
    /// Reduce a matrix to its representative.
    Reduce {
        genus: usize,
        matrix: String,
        /// Print every step with its word and resulting matrix.
        #[arg(long)]
        trace: bool,
    },
    /// Run the verification suite over a genus range such as `3..8` or `5`.
    Verify {
        #[arg(default_value = "3..8")]
        range: String,
    },
    /// Orbit census: sizes, stabilizer orders, Arf invariants.
    Orbits { genus: usize },
    /// Check the isotropy generators of the normal form of class `m`.
    Isotropy { genus: usize, m: usize },
    /// Print the matrix fixed by every generator, or `none`.
    FixedPoint { genus: usize },
}

/// Output of a subcommand and the exit status it implies.
struct Outcome {
    text: String,
    json: serde_json::Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed { .. } | Error::ReductionInvariant { .. } => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("serializable")
}

fn parse_matrix(genus: usize, text: &str) -> Result<SpinMatrix, Failure> {
    SpinMatrix::parse_with_genus(text, genus).map_err(Failure::from)
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "invalid genus range `{text}`, expected `a..b` or `g`"
        ))
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let g = num(text)?;
            g..=g
        }
    };
    if range.is_empty() || *range.start() == 0 {
        return Err(bad());
    }
    Ok(range)
}

fn classify_cmd(genus: usize, text: &str) -> Result<Outcome, Failure> {
    let matrix = parse_matrix(genus, text)?;
    let m = reduce(&matrix)?.class_index;
    let canonical = canonical_m(genus, m)?;
    let a = arf(&matrix);
    Ok(Outcome::ok(
        format!("m\t{m}\ncanonical\t{canonical}\narf\t{a}\n"),
        json!({ "genus": genus, "matrix": matrix, "m": m, "canonical": canonical, "arf": a }),
    ))
}

fn reduce_cmd(genus: usize, text: &str, trace: bool) -> Result<Outcome, Failure> {
    let matrix = parse_matrix(genus, text)?;
    let t = reduce(&matrix)?;
    let mut out = String::new();
    if trace {
        out.push_str(&t.to_text());
    }
    let _ = write!(
        out,
        "word\t{}\nresult\t{}\nm\t{}\n",
        t.total_word,
        t.result(),
        t.class_index
    );
    let mut value = to_json(&t);
    if !trace {
        value.as_object_mut().expect("struct").remove("steps");
    }
    Ok(Outcome::ok(out, value))
}

fn verify_cmd(range: &str, cli: &Cli) -> Result<Outcome, Failure> {
    let range = parse_range(range)?;
    let opts = VerifyOptions {
        max_enumeration_genus: cli.max_g,
        ..VerifyOptions::default()
    };
    let genera: Vec<usize> = range.collect();
    let report = verify_range(&genera, &opts);
    let mut out = String::from("g\tcheck\tstatus\tdetail\n");
    for c in &report.checks {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", c.genus, c.check, c.status, c.detail);
    }
    let (pass, fail, skip) = (
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Skip),
    );
    let _ = writeln!(out, "summary\tpass={pass}\tfail={fail}\tskip={skip}");
    eprintln!("verify: {:.2}s wall time", report.wall_time.as_secs_f64());
    for c in report.checks.iter().filter(|c| c.status == Status::Skip) {
        eprintln!("notice: g={} {}: {}", c.genus, c.check, c.detail);
    }
    let code = if fail > 0 {
        EXIT_FAIL
    } else if skip > 0 && cli.strict {
        EXIT_SKIP
    } else {
        0
    };
    Ok(Outcome {
        text: out,
        json: to_json(&report),
        code,
    })
}

fn check_enumeration_ceiling(genus: usize) -> Result<(), Failure> {
    if genus > MAX_ENUMERATION_GENUS {
        return Err(Failure::Usage(format!(
            "genus {genus} exceeds the enumeration ceiling {MAX_ENUMERATION_GENUS}"
        )));
    }
    Ok(())
}

fn orbits_cmd(genus: usize) -> Result<Outcome, Failure> {
    check_enumeration_ceiling(genus)?;
    let rows = census(&enumerate_orbits(genus)?)?;
    let mut out = String::from("g\tm\tsize\tstabilizer_order\tarf\tbinomial_predicted\tmatch\n");
    for r in &rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.genus, r.class_index, r.size, r.stabilizer_order, r.arf, r.predicted_size, r.matches
        );
    }
    let code = if rows.iter().all(|r| r.matches) {
        0
    } else {
        EXIT_FAIL
    };
    Ok(Outcome {
        text: out,
        json: to_json(&rows),
        code,
    })
}

fn isotropy_cmd(genus: usize, m: usize, cli: &Cli) -> Result<Outcome, Failure> {
    let enumerable = genus <= cli.max_g.min(MAX_ENUMERATION_GENUS);
    let partition = if enumerable {
        Some(enumerate_orbits(genus)?)
    } else {
        None
    };
    let r = verify_isotropy(genus, m, partition.as_ref())?;
    let list = |v: &[usize]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let opt = |v: Option<bool>| v.map_or("-".to_string(), |b| b.to_string());
    let observed = r
        .observed_order
        .as_ref()
        .map_or("-".to_string(), ToString::to_string);
    let text = format!(
        "matrix\t{}\nfixing\t{}\nmoving\t{}\ntau_fixes\t{}\npredicted_order\t{}\nobserved_order\t{}\npasses\t{}\n",
        r.matrix,
        list(&r.fixing),
        list(&r.moving),
        opt(r.tau_fixes),
        r.predicted_order,
        observed,
        r.passes
    );
    let code = if !r.passes {
        EXIT_FAIL
    } else if !enumerable {
        eprintln!("notice: stabilizer order not enumerated for genus {genus}");
        if cli.strict {
            EXIT_SKIP
        } else {
            0
        }
    } else {
        0
    };
    Ok(Outcome {
        text,
        json: to_json(&r),
        code,
    })
}

fn fixed_point_cmd(genus: usize) -> Result<Outcome, Failure> {
    if genus == 0 {
        return Err(Error::ZeroGenus.into());
    }
    let f = fixed_point(genus);
    let text = f.as_ref().map_or("none".to_string(), ToString::to_string);
    Ok(Outcome::ok(
        format!("{text}\n"),
        json!({ "genus": genus, "fixed_point": f }),
    ))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if cli.max_g > MAX_ENUMERATION_GENUS {
        return Err(Failure::Usage(format!(
            "--max-g {} exceeds the enumeration ceiling {MAX_ENUMERATION_GENUS}",
            cli.max_g
        )));
    }
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--threads: {e}")))?;
    }
    match &cli.command {
        Command::Classify { genus, matrix } => classify_cmd(*genus, matrix),
        Command::Reduce {
            genus,
            matrix,
            trace,
        } => reduce_cmd(*genus, matrix, *trace),
        Command::Verify { range } => verify_cmd(range, cli),
        Command::Orbits { genus } => orbits_cmd(*genus),
        Command::Isotropy { genus, m } => isotropy_cmd(*genus, *m, cli),
        Command::FixedPoint { genus } => fixed_point_cmd(*genus),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("valid json")
                );
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
