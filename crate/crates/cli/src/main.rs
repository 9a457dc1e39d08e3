mod construct;
mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use unisem::act::{principal_congruence, s_as_act};
use unisem::census::{enumerate_semigroups_with, filter_records, load_or_enumerate, CensusFlag};
use unisem::format::{parse_table, write_table, TableFile};
use unisem::verify::{run_all_with, run_check_with, CheckOptions};
use unisem::{
    classify_regular_uniform, construct as build, is_uniform, uniformity_witness, CheckId, Error, StructureTag,
};

use report::{
    AnalysisReport, CensusEntry, CensusReport, ClassifyReport, CongruenceReport, TableReport, UniformReport,
    VerifyReport, WitnessReport, SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "unisem",
    version,
    about = "Right uniform finite semigroups from Cayley tables"
)]
struct Cli {
    /// Emit a structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full profile, uniformity and classification of a table.
    Analyze { file: PathBuf },
    /// Decide uniformity of S as a right act over itself.
    Uniform { file: PathBuf },
    /// Structure of a regular uniform semigroup.
    Classify { file: PathBuf },
    /// Principal right congruence generated by a pair.
    Congruence {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        pair: Vec<String>,
    },
    /// Build a member of a standard family and print its table.
    Construct {
        family: String,
        params: Vec<String>,
        /// Require the action that swaps for every non-identity element.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Semigroups of a given order up to isomorphism.
    Census {
        #[arg(long)]
        order: usize,
        /// Flags such as uniform, band, !regular (comma or space separated).
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Allow order 6.
        #[arg(long)]
        i_have_time: bool,
    },
    /// Check structure results over the census.
    Verify {
        /// C1 to C15, or `all`.
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Allow order 6.
        #[arg(long)]
        i_have_time: bool,
    },
    /// Table of the opposite semigroup.
    Opposite {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A finished command: its output and whether a check failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("report serializes");
        s.push('\n');
        s
    } else {
        text()
    }
}

fn load(path: &Path) -> unisem::Result<TableFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

fn write_out(path: &Path, text: &str) -> unisem::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn set(file: &TableFile, xs: &[usize]) -> String {
    let names: Vec<String> = xs.iter().map(|&x| file.name_of(x)).collect();
    format!("{{{}}}", names.join(","))
}

fn blocks_text(file: &TableFile, blocks: &[Vec<usize>]) -> String {
    blocks.iter().map(|b| set(file, b)).collect::<Vec<_>>().join(" ")
}

fn witness_text(file: &TableFile, w: &WitnessReport) -> String {
    format!(
        "subact {} is not large: the congruence generated by ({}, {}) has blocks {} and merges no two of its elements",
        set(file, &w.subact),
        file.name_of(w.pair.0),
        file.name_of(w.pair.1),
        blocks_text(file, &w.congruence)
    )
}

fn true_flags(value: &impl Serialize) -> Vec<String> {
    match serde_json::to_value(value).expect("profile serializes") {
        serde_json::Value::Object(map) => map
            .into_iter()
            .filter(|(_, v)| v.as_bool() == Some(true))
            .map(|(k, _)| k)
            .collect(),
        _ => Vec::new(),
    }
}

fn analyze(json: bool, path: &Path) -> unisem::Result<Output> {
    let file = load(path)?;
    let r = AnalysisReport::new(&path.display().to_string(), &file)?;
    let text = render(json, &r, || {
        let mut t = String::new();
        let _ = writeln!(t, "input: {}", r.input);
        let _ = writeln!(t, "order: {}", r.order);
        match r.uniform {
            Some(u) => {
                let _ = writeln!(t, "uniform: {u}");
            }
            None => {
                let _ = writeln!(t, "uniform: undefined for the one-element semigroup");
            }
        }
        let class = r.classification.map_or("none".to_string(), |c| c.to_string());
        let _ = writeln!(t, "classification: {class}");
        if let Some(e) = &r.classification_error {
            let _ = writeln!(t, "classification error: {e}");
        }
        let _ = writeln!(t, "zero elements: {}", set(&file, &r.zero_elements));
        let _ = writeln!(
            t,
            "idempotents: {} ({:?})",
            set(&file, &r.idempotents),
            r.idempotent_shape
        );
        let _ = writeln!(t, "flags: {}", true_flags(&r.profile).join(" "));
        let _ = writeln!(t, "left zeros: {}", r.profile.left_zero_count);
        if let Some(w) = &r.witness {
            let _ = writeln!(t, "witness: {}", witness_text(&file, w));
        }
        t
    });
    Ok(Output::ok(text))
}

fn uniform(json: bool, path: &Path) -> unisem::Result<Output> {
    let file = load(path)?;
    let s = &file.semigroup;
    let u = is_uniform(s)?;
    let witness = uniformity_witness(s)?.as_ref().map(WitnessReport::from);
    let r = UniformReport {
        schema: SCHEMA.into(),
        input: path.display().to_string(),
        order: s.order(),
        uniform: Some(u),
        witness,
    };
    let text = render(json, &r, || {
        let mut t = format!("uniform: {u}\n");
        if let Some(w) = &r.witness {
            let _ = writeln!(t, "witness: {}", witness_text(&file, w));
        }
        t
    });
    Ok(Output::ok(text))
}

fn classify(json: bool, path: &Path) -> unisem::Result<Output> {
    let file = load(path)?;
    let s = &file.semigroup;
    let regular = s.elements().all(|a| s.is_regular_element(a));
    let uniform = if s.order() < 2 { None } else { Some(is_uniform(s)?) };
    let mut r = ClassifyReport {
        schema: SCHEMA.into(),
        input: path.display().to_string(),
        order: s.order(),
        regular,
        uniform,
        classification: None,
        group_part: Vec::new(),
        left_zeros: Vec::new(),
        swapping: Vec::new(),
        literal_swap_rule: None,
        error: None,
    };
    match classify_regular_uniform(s) {
        Ok(c) if c.tag == StructureTag::NotApplicable => {}
        Ok(c) => {
            r.classification = Some(c.tag);
            r.group_part = c.group_part;
            r.left_zeros = c.left_zeros;
            r.swapping = c.swapping;
            r.literal_swap_rule = c.literal_swap_rule;
        }
        Err(e) => r.error = Some(e.to_string()),
    }
    let failed = r.error.is_some();
    let text = render(json, &r, || {
        let mut t = String::new();
        match (&r.classification, &r.error) {
            (Some(tag), _) => {
                let _ = writeln!(t, "classification: {tag}");
                if !r.group_part.is_empty() {
                    let _ = writeln!(t, "group part: {}", set(&file, &r.group_part));
                }
                if !r.left_zeros.is_empty() {
                    let _ = writeln!(t, "left zeros: {}", set(&file, &r.left_zeros));
                    let _ = writeln!(t, "swapping: {}", set(&file, &r.swapping));
                }
            }
            (None, Some(e)) => {
                let _ = writeln!(t, "classification: gap ({e})");
            }
            (None, None) => {
                let _ = writeln!(
                    t,
                    "classification: not applicable (regular: {regular}, uniform: {})",
                    uniform.map_or("undefined".to_string(), |u| u.to_string())
                );
            }
        }
        t
    });
    Ok(Output { text, failed })
}

fn congruence(json: bool, path: &Path, pair: &[String]) -> unisem::Result<Output> {
    let file = load(path)?;
    let (a, b) = (file.resolve(&pair[0])?, file.resolve(&pair[1])?);
    let c = principal_congruence(&s_as_act(&file.semigroup), a, b);
    let r = CongruenceReport {
        schema: SCHEMA.into(),
        input: path.display().to_string(),
        pair: (a, b),
        classes: c.blocks().len(),
        blocks: c.blocks(),
    };
    let text = render(json, &r, || {
        format!(
            "congruence generated by ({}, {}): {}\nclasses: {}\n",
            file.name_of(a),
            file.name_of(b),
            blocks_text(&file, &r.blocks),
            r.classes
        )
    });
    Ok(Output::ok(text))
}

fn table_output(json: bool, description: String, file: &TableFile, out: Option<&Path>) -> unisem::Result<Output> {
    let s = &file.semigroup;
    let table_text = write_table(s, file.names.as_deref());
    let r = TableReport {
        schema: SCHEMA.into(),
        description,
        order: s.order(),
        table: s.rows(),
    };
    match out {
        Some(path) => {
            write_out(path, &table_text)?;
            let text = render(json, &r, || format!("wrote {} (order {})\n", path.display(), s.order()));
            Ok(Output::ok(text))
        }
        None => Ok(Output::ok(render(json, &r, || table_text.clone()))),
    }
}

fn construct_cmd(
    json: bool,
    family: &str,
    params: &[String],
    strict: bool,
    out: Option<&Path>,
) -> unisem::Result<Output> {
    let spec = construct::parse_family(family, params, strict)?;
    let file = TableFile {
        semigroup: build(&spec)?,
        names: None,
    };
    let description = std::iter::once(family.to_string())
        .chain(params.iter().cloned())
        .collect::<Vec<_>>()
        .join(" ");
    table_output(json, description, &file, out)
}

fn opposite(json: bool, path: &Path, out: Option<&Path>) -> unisem::Result<Output> {
    let file = load(path)?;
    let op = TableFile {
        semigroup: file.semigroup.opposite(),
        names: file.names.clone(),
    };
    table_output(json, format!("opposite of {}", path.display()), &op, out)
}

fn census(json: bool, order: usize, filter: &[String], cache: Option<&Path>, extended: bool) -> unisem::Result<Output> {
    let flags: Vec<CensusFlag> = filter
        .iter()
        .filter(|f| !f.is_empty())
        .map(|f| f.parse())
        .collect::<unisem::Result<_>>()?;
    let all = match cache {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            load_or_enumerate(dir, order, extended)?
        }
        None => enumerate_semigroups_with(order, extended)?,
    };
    let records = filter_records(&all, &flags);
    let r = CensusReport {
        schema: SCHEMA.into(),
        order,
        filters: filter.to_vec(),
        count: records.len(),
        semigroups: records
            .iter()
            .map(|rec| CensusEntry {
                table: rec.table.clone(),
                uniform: rec.uniform,
                classification: rec.classification,
            })
            .collect(),
    };
    let text = render(json, &r, || {
        let mut t = format!("# {} semigroups of order {order}\n", r.count);
        for rec in &records {
            t.push_str(&rec.cache_line());
            t.push('\n');
        }
        t
    });
    Ok(Output::ok(text))
}

fn verify(json: bool, check: &str, max_order: usize, extended: bool) -> unisem::Result<Output> {
    let options = CheckOptions {
        invert: false,
        allow_extended: extended,
    };
    let reports = if check.eq_ignore_ascii_case("all") {
        run_all_with(max_order, options)?
    } else {
        vec![run_check_with(check.parse::<CheckId>()?, max_order, options)?]
    };
    let passed = reports.iter().all(|r| r.passed());
    let r = VerifyReport {
        schema: SCHEMA.into(),
        max_order,
        passed,
        reports,
    };
    let text = render(json, &r, || {
        let mut t = String::new();
        for rep in &r.reports {
            let _ = writeln!(
                t,
                "{:<4} {}  scanned {}, hypothesis met {}, counterexamples {}  [{}]",
                rep.check.to_string(),
                if rep.passed() { "PASS" } else { "FAIL" },
                rep.instances_scanned,
                rep.hypotheses_met,
                rep.counterexamples.len(),
                rep.title
            );
            for c in rep.counterexamples.iter().take(5) {
                let _ = writeln!(t, "     order {} table {:?}: {}", c.order, c.table, c.detail);
            }
            if rep.counterexamples.len() > 5 {
                let _ = writeln!(t, "     ... {} more", rep.counterexamples.len() - 5);
            }
            for (label, n) in &rep.tallies {
                let _ = writeln!(t, "     {label}: {n}");
            }
            for d in &rep.discrepancies {
                let _ = writeln!(t, "     discrepancy: {}: {}", d.subject, d.detail);
            }
        }
        let _ = writeln!(
            t,
            "{}",
            if passed {
                "all checks passed"
            } else {
                "some checks failed"
            }
        );
        t
    });
    Ok(Output { text, failed: !passed })
}

fn run(cli: Cli) -> unisem::Result<Output> {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file } => analyze(json, &file),
        Command::Uniform { file } => uniform(json, &file),
        Command::Classify { file } => classify(json, &file),
        Command::Congruence { file, pair } => congruence(json, &file, &pair),
        Command::Construct {
            family,
            params,
            strict,
            out,
        } => construct_cmd(json, &family, &params, strict, out.as_deref()),
        Command::Census {
            order,
            filter,
            cache,
            i_have_time,
        } => census(json, order, &filter, cache.as_deref(), i_have_time),
        Command::Verify {
            check,
            max_order,
            i_have_time,
        } => verify(json, &check, max_order, i_have_time),
        Command::Opposite { file, out } => opposite(json, &file, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(out.text.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
