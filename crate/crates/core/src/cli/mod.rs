//! The `fgc` command line.
//!
//! [`run_command`] does all the work and returns the exit code and output,
//! so the binary is a thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 ok, 1 usage or input error, 2 a verification mismatch,
//! 3 a size bound was exceeded.

mod input;
mod render;

use std::fmt::Write;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand};
use itertools::Itertools;

pub use input::{parse_input, FunctionDocument, ParsedInput, PRESETS};
pub use render::{analysis_json, analysis_text, dot, AnalysisJson};

use crate::centralizer::{count_bij_centralizer, count_centralizer, enumerate_centralizer};
use crate::decompose;
use crate::extremal::{
    antichain_erratum, construct, fig6_value, max_centralizer_fixed_cycles, min_centralizer_with,
    Extremum, FamilySpec, MinMode, ReadingReport,
};
use crate::homcount::{hom_pseudocycle, hom_via_antichains};
use crate::oracle::{brute_centralizer_count_with, Bounds};
use crate::{Count, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fgc",
    version,
    about = "Functional graphs and the functions commuting with them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// INPUT is a file path, `-` for stdin, or the text itself: a JSON
/// document, integers, `powmod:a,n`, `family:SPEC` or a preset name.
#[derive(Debug, Subcommand)]
enum Command {
    /// Decomposition, classes and centralizer counts.
    Analyze {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print |C(f)| and |C_bij(f)|.
    Count {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long)]
        bijective_only: bool,
    },
    /// List commuting functions in lexicographic order.
    Enumerate {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long)]
        bijective_only: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Count homomorphisms between two components.
    HomCount {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Check the counting engines against each other and, with --oracle,
    /// against brute force.
    Verify {
        input: Vec<String>,
        #[arg(long)]
        oracle: bool,
        /// Size bound for brute-force scans (default from FGC_MAX_BRUTE_N).
        #[arg(long)]
        max_n: Option<usize>,
        /// Recompute the two known misprinted example values.
        #[arg(long)]
        errata: bool,
    },
    /// Exhaustive extremal searches.
    Extremal {
        #[arg(long)]
        n: usize,
        /// C_over_bij, Cbij_over_bij or C_over_all.
        #[arg(long, required_unless_present = "cycles")]
        mode: Option<String>,
        /// Maximize |C(f)| over functions with exactly these cycle lengths.
        #[arg(long, value_delimiter = ',')]
        cycles: Option<Vec<usize>>,
        /// Size bound for the search.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
    /// Print the image vector of a family member such as `W:2,3+Z:2`.
    Construct { family: String },
    /// Graphviz DOT of the functional graph.
    ExportDot {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
}

/// Exit code and captured output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::BoundExceeded { .. } => EXIT_BOUNDS,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> CommandOutput {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutput::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => CommandOutput::error(&e),
    }
}

fn read_input(parts: &[String]) -> Result<ParsedInput, Error> {
    let joined = parts.join(" ");
    let text = if joined == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Precondition(format!("cannot read stdin: {e}")))?;
        buf
    } else if parts.len() == 1 && Path::new(&joined).is_file() {
        std::fs::read_to_string(&joined)
            .map_err(|e| Error::Precondition(format!("cannot read {joined}: {e}")))?
    } else {
        joined
    };
    parse_input(&text)
}

fn dispatch(command: Command) -> Result<CommandOutput, Error> {
    let mut out = String::new();
    match command {
        Command::Analyze { input, json } => {
            let input = read_input(&input)?;
            out = if json {
                analysis_json(&input)
            } else {
                analysis_text(&input)
            };
        }
        Command::Count {
            input,
            bijective_only,
        } => {
            let f = read_input(&input)?.function;
            if !bijective_only {
                writeln!(out, "total: {}", count_centralizer::<Count>(&f)).unwrap();
            }
            writeln!(out, "bijective: {}", count_bij_centralizer::<Count>(&f)).unwrap();
        }
        Command::Enumerate {
            input,
            bijective_only,
            limit,
            json,
        } => {
            let f = read_input(&input)?.function;
            let found: Vec<_> = enumerate_centralizer(&f, bijective_only)
                .take(limit.unwrap_or(usize::MAX))
                .collect();
            if json {
                out = serde_json::to_string(&found).expect("serializable");
                out.push('\n');
            } else {
                for g in found {
                    writeln!(out, "{g}").unwrap();
                }
            }
        }
        Command::HomCount { input, from, to } => {
            let f = read_input(&input)?.function;
            let comps = decompose::components(&f);
            let get = |i: usize| {
                comps.get(i).ok_or_else(|| {
                    Error::Precondition(format!(
                        "component {i} does not exist; f has {}",
                        comps.len()
                    ))
                })
            };
            let (src, tgt) = (get(from)?, get(to)?);
            let dp: Count = hom_pseudocycle(src, tgt, &f);
            writeln!(out, "hom(P{from}, P{to}): {dp}").unwrap();
            match hom_via_antichains::<Count>(src, tgt, &f) {
                Ok(sum) => {
                    writeln!(out, "antichain sum: {sum}").unwrap();
                    if sum != dp {
                        return Ok(mismatch(out));
                    }
                }
                Err(Error::BoundExceeded { .. }) => {
                    writeln!(out, "antichain sum: skipped (too many terms)").unwrap()
                }
                Err(e) => return Err(e),
            }
        }
        Command::Verify {
            input,
            oracle,
            max_n,
            errata,
        } => return verify(&input, oracle, max_n, errata),
        Command::Extremal {
            n,
            mode,
            cycles,
            max_n,
            csv,
        } => {
            let result = match (cycles, mode) {
                (Some(cycles), _) => max_centralizer_fixed_cycles(n, &cycles)?,
                (None, Some(mode)) => {
                    let mode: MinMode = mode.parse()?;
                    min_centralizer_with(n, mode, max_n.unwrap_or(mode.default_bound()))?
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            out = if csv {
                extremum_csv(&result)
            } else {
                extremum_text(&result)
            };
        }
        Command::Construct { family } => {
            let spec: FamilySpec = family.trim_start_matches("family:").parse()?;
            writeln!(out, "{}", construct(&spec)?).unwrap();
        }
        Command::ExportDot { input } => out = dot(&read_input(&input)?),
    }
    Ok(CommandOutput::ok(out))
}

fn mismatch(stdout: String) -> CommandOutput {
    CommandOutput {
        code: EXIT_MISMATCH,
        stdout,
        stderr: "error: results disagree\n".into(),
    }
}

fn extremum_text(e: &Extremum) -> String {
    let mut out = format!("value: {}\nclasses: {}\n", e.value, e.classes.len());
    for key in &e.classes {
        writeln!(out, "  {key}").unwrap();
    }
    out
}

fn extremum_csv(e: &Extremum) -> String {
    let mut buf = Vec::new();
    e.write_csv(&mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

fn status(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "MISMATCH"
    }
}

fn reading_lines(out: &mut String, name: &str, r: &ReadingReport) -> bool {
    let ok = r.consistent();
    writeln!(
        out,
        "{name} {}: factors={} brute={} value={} brute_product={} closed_form={} {}",
        r.family,
        r.factors.iter().join("*"),
        r.brute_factors.iter().join("*"),
        r.computed,
        r.brute_product,
        r.formula,
        status(ok)
    )
    .unwrap();
    ok
}

fn verify(
    input: &[String],
    oracle: bool,
    max_n: Option<usize>,
    errata: bool,
) -> Result<CommandOutput, Error> {
    let mut out = String::new();
    let mut all_ok = true;
    if !input.is_empty() {
        let f = read_input(input)?.function;
        let total: Count = count_centralizer(&f);
        let bij: Count = count_bij_centralizer(&f);
        if oracle {
            let bounds = max_n.map(Bounds::uniform).unwrap_or_else(Bounds::from_env);
            let brute = brute_centralizer_count_with(&f, false, &bounds)?;
            let brute_bij = brute_centralizer_count_with(&f, true, &bounds)?;
            let ok = total == Count::from(brute);
            let ok_bij = bij == Count::from(brute_bij);
            writeln!(out, "formula={total} oracle={brute} {}", status(ok)).unwrap();
            writeln!(
                out,
                "bijective formula={bij} oracle={brute_bij} {}",
                status(ok_bij)
            )
            .unwrap();
            all_ok &= ok && ok_bij;
        } else {
            writeln!(out, "formula={total}").unwrap();
            writeln!(out, "bijective formula={bij}").unwrap();
        }
        let comps = decompose::components(&f);
        for (i, p) in comps.iter().enumerate() {
            for (j, q) in comps.iter().enumerate() {
                let dp: Count = hom_pseudocycle(p, q, &f);
                match hom_via_antichains::<Count>(p, q, &f) {
                    Ok(sum) => {
                        let ok = sum == dp;
                        all_ok &= ok;
                        if !ok {
                            writeln!(out, "hom(P{i}, P{j}) dp={dp} antichains={sum} MISMATCH")
                                .unwrap();
                        }
                    }
                    Err(Error::BoundExceeded { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        writeln!(out, "component hom counts {}", status(all_ok)).unwrap();
    }
    if errata {
        let fig6 = fig6_value()?;
        writeln!(
            out,
            "cycles 2,2,4 with three leaves: claimed={} ({}) computed={} value_discrepancy={} factor_discrepancy={}",
            fig6.claimed,
            fig6.claimed_factors.iter().join("*"),
            fig6.text_reading.computed,
            fig6.value_discrepancy,
            fig6.factor_discrepancy
        )
        .unwrap();
        all_ok &= reading_lines(&mut out, "  reading", &fig6.text_reading);
        all_ok &= reading_lines(&mut out, "  alternative reading", &fig6.caption_reading);
        let ac = antichain_erratum()?;
        let ok = Count::from(ac.brute) == ac.recursion && ac.enumerated == ac.brute;
        all_ok &= ok;
        writeln!(
            out,
            "antichains of the six-vertex tree: claimed={} recursion={} enumerated={} brute={} discrepancy={} {}",
            ac.claimed,
            ac.recursion,
            ac.enumerated,
            ac.brute,
            ac.discrepancy,
            status(ok)
        )
        .unwrap();
    }
    if input.is_empty() && !errata {
        return Err(Error::Precondition(
            "verify needs an INPUT or --errata".into(),
        ));
    }
    Ok(if all_ok {
        CommandOutput::ok(out)
    } else {
        mismatch(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &str) -> CommandOutput {
        let argv: Vec<&str> = std::iter::once("fgc").chain(args.split(' ')).collect();
        run_command(&argv)
    }

    #[test]
    fn counts() {
        assert_eq!(
            run("count family-ex5 --bijective-only").stdout,
            "bijective: 8\n"
        );
        assert_eq!(run("count family-ex7").stdout, "total: 300\nbijective: 4\n");
        let out = run("count powmod:2,9");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("bijective: 4\n"));
    }

    #[test]
    fn verification() {
        let out = run("verify family:W:2,3 --oracle");
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.starts_with("formula=65 oracle=65 OK\n"));
        assert_eq!(run("verify family-ex7 --oracle").code, EXIT_BOUNDS);
        assert_eq!(
            run("verify family-ex7 --oracle --max-n 6").code,
            EXIT_BOUNDS
        );
        assert_eq!(run("verify").code, EXIT_USAGE);
    }

    #[test]
    fn enumeration_and_construction() {
        assert_eq!(
            run("enumerate family:Z:3 --limit 2").stdout,
            "[0,1,2]\n[1,2,0]\n"
        );
        assert_eq!(run("enumerate family:Z:2 --json").stdout, "[[0,1],[1,0]]\n");
        assert_eq!(run("construct W:2,3").stdout, "[1,0,0,0,0]\n");
        assert_eq!(run("construct family:Z:4").stdout, "[1,2,3,0]\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run("frobnicate").code, EXIT_USAGE);
        assert_eq!(run("count 0 7").code, EXIT_USAGE);
        assert_eq!(run("hom-count family-ex4 --from 0 --to 5").code, EXIT_USAGE);
        assert_eq!(run("--help").code, EXIT_OK);
        assert_eq!(run("extremal --n 9 --mode C_over_all").code, EXIT_BOUNDS);
    }

    #[test]
    fn hom_counts() {
        let out = run("hom-count family-ex4 --from 0 --to 1");
        assert_eq!(out.stdout, "hom(P0, P1): 2\nantichain sum: 2\n");
    }
}
