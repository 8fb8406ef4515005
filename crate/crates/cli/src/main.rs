//! chaincount: exact principal-series counting for finite abelian and
//! nilpotent groups, with path-word tooling and verification suites.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 a verification suite
//! found a counterexample.

mod record;
mod verify;

use std::time::Instant;

use chaincount::bijection::{ballot_endpoint_for, phi, theta};
use chaincount::chains::{
    chain_polynomial, closed_form_two_factor, is_prime, nilpotent_chain_count, ChainCounter,
    ExponentTuple, NilpotentSpec,
};
use chaincount::exactmath::BigNat;
use chaincount::weights::{upper_arch_count, word_weight_exponent};
use chaincount::words::{SegmentKind, TailSide, Word, DEFAULT_ENUMERATION_BOUND};
use chaincount::{LatticePoint, PPolynomial};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use record::{envelope, point_json, polynomial_json};

#[derive(Parser)]
#[command(
    name = "chaincount",
    version,
    about = "Count principal series of finite abelian and nilpotent groups exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[default]
    All,
    Forms,
    Bijection,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Chain-count polynomial for an abelian p-group type, optionally
    /// evaluated at a prime
    Count {
        /// Cyclic-factor exponents, e.g. 1,2
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<u32>,
        /// Evaluate the polynomial at this base (warns when not prime)
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Two-factor closed form (binomial differences), requires a1 <= a2
    ClosedForm {
        /// Exactly two exponents a1,a2 with a1 <= a2
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<u32>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Principal series of a direct product of cyclic groups of prime-power
    /// order
    Nilpotent {
        /// Cyclic factor orders, e.g. 4,2,9
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Arch decomposition and weight exponents of a path word
    Decompose {
        /// Word over {N, E}, e.g. NEN
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Map a word to its ballot image (default) or invert a ballot word
    Bijection {
        /// Word over {N, E}
        #[arg(long)]
        word: String,
        /// Invert: treat the word as a ballot word and reconstruct the
        /// arch word (requires --target and --k)
        #[arg(long)]
        inverse: bool,
        /// Target endpoint x,y for the inverse direction
        #[arg(long)]
        target: Option<String>,
        /// Upper-arch count for the inverse direction
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Coefficient tables of chain-count polynomials for all sorted tuples
    Table {
        /// Tuple length (1..=4)
        #[arg(long)]
        k: usize,
        /// Largest exponent per entry (1..=12)
        #[arg(long)]
        max_alpha: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-check the counting routes; exits 2 on the first counterexample
    Verify {
        #[arg(long, value_enum, default_value_t)]
        suite: Suite,
        /// Largest x + y (forms, bijection)
        #[arg(long, default_value_t = 10)]
        max_sum: usize,
        /// Largest group order (oracle)
        #[arg(long, default_value_t = 72)]
        max_order: u64,
        /// Resource cap for lattice enumeration
        #[arg(long, default_value_t = chaincount::group_oracle::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,
        /// Resource cap for path enumeration (x + y)
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        enum_bound: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}

type CmdResult = Result<i32, String>;

fn run(command: Command) -> CmdResult {
    match command {
        Command::Count { alphas, p, format } => cmd_count(alphas, p, format),
        Command::ClosedForm { alphas, p, format } => cmd_closed_form(alphas, p, format),
        Command::Nilpotent { orders, format } => cmd_nilpotent(orders, format),
        Command::Decompose { word, format } => cmd_decompose(word, format),
        Command::Bijection {
            word,
            inverse,
            target,
            k,
            format,
        } => cmd_bijection(word, inverse, target, k, format),
        Command::Table {
            k,
            max_alpha,
            format,
        } => cmd_table(k, max_alpha, format),
        Command::Verify {
            suite,
            max_sum,
            max_order,
            oracle_bound,
            enum_bound,
            format,
        } => cmd_verify(suite, max_sum, max_order, oracle_bound, enum_bound, format),
    }
}

fn reject_csv(format: Format) -> Result<(), String> {
    if format == Format::Csv {
        return Err("csv output is only available for the table command".to_string());
    }
    Ok(())
}

fn parse_tuple(alphas: &[u32]) -> Result<ExponentTuple, String> {
    if alphas.contains(&0) {
        return Err("exponents must be positive integers".to_string());
    }
    ExponentTuple::new(alphas.to_vec()).map_err(|e| e.to_string())
}

fn prime_warning(p: u64, warnings: &mut Vec<String>) {
    if !is_prime(p) {
        let warning = format!(
            "p = {p} is not prime; the value is a polynomial identity without a subgroup-lattice meaning"
        );
        eprintln!("warning: {warning}");
        warnings.push(warning);
    }
}

fn emit(format: Format, record: Value, text: String) -> CmdResult {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("serializable")
        ),
        _ => print!("{text}"),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn polynomial_command(
    command: &'static str,
    label: String,
    tuple_entries: Vec<u32>,
    poly: PPolynomial,
    p: Option<u64>,
    format: Format,
    started: Instant,
) -> CmdResult {
    let mut warnings = Vec::new();
    let mut text = format!("f{label} = {}\n", poly.render("p"));
    let mut result = Map::new();
    result.insert("alphas".to_string(), json!(tuple_entries));
    result.insert("polynomial".to_string(), polynomial_json(&poly, "p"));
    if let Some(p) = p {
        if p < 2 {
            return Err(format!("p must be at least 2, got {p}"));
        }
        prime_warning(p, &mut warnings);
        let value = poly.eval(&BigNat::from(p));
        text.push_str(&format!("at p = {p}: {value}\n"));
        result.insert("evaluated_at".to_string(), json!(p.to_string()));
        result.insert("value".to_string(), json!(value.to_string()));
    }
    let mut diagnostics = Map::new();
    diagnostics.insert("degree".to_string(), json!(poly.degree()));
    diagnostics.insert(
        "coefficient_sum".to_string(),
        json!(poly.coefficient_sum().to_string()),
    );
    let record = envelope(
        command,
        json!({ "alphas": tuple_entries, "p": p }),
        Value::Object(result),
        diagnostics,
        &warnings,
        started.elapsed(),
    );
    emit(format, record, text)
}

fn cmd_count(alphas: Vec<u32>, p: Option<u64>, format: Format) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    let tuple = parse_tuple(&alphas)?;
    let poly = chain_polynomial(&tuple);
    polynomial_command(
        "count",
        tuple.to_string(),
        tuple.entries().to_vec(),
        poly,
        p,
        format,
        started,
    )
}

fn cmd_closed_form(alphas: Vec<u32>, p: Option<u64>, format: Format) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    if alphas.len() != 2 {
        return Err(format!(
            "closed-form takes exactly two exponents, got {}",
            alphas.len()
        ));
    }
    let poly = closed_form_two_factor(alphas[0], alphas[1]).map_err(|e| e.to_string())?;
    let label = format!("({},{})", alphas[0], alphas[1]);
    polynomial_command("closed-form", label, alphas, poly, p, format, started)
}

fn cmd_nilpotent(orders: Vec<u64>, format: Format) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    let spec = NilpotentSpec::from_cyclic_orders(&orders).map_err(|e| e.to_string())?;
    let count = nilpotent_chain_count(&spec);
    let lengths: Vec<u64> = spec.parts().iter().map(|(_, t)| t.sum()).collect();
    let multinomial = chaincount::exactmath::multinomial(&lengths);

    let mut counter = ChainCounter::new();
    let mut factors = Vec::new();
    let mut text = String::new();
    text.push_str(&format!(
        "group order {}: {count} principal series\n",
        spec.group_order()
    ));
    text.push_str(&format!(
        "multinomial over composition lengths {lengths:?}: {multinomial}\n"
    ));
    for (p, tuple) in spec.parts() {
        let poly = counter.polynomial(tuple);
        let value = poly.eval(&BigNat::from(*p));
        text.push_str(&format!(
            "  p = {p}, type {tuple}: f = {}, f({p}) = {value}\n",
            poly.render("p")
        ));
        factors.push(json!({
            "prime": p,
            "alphas": tuple.entries(),
            "polynomial": polynomial_json(&poly, "p"),
            "value": value.to_string(),
        }));
    }
    let record = envelope(
        "nilpotent",
        json!({ "orders": orders }),
        json!({
            "count": count.to_string(),
            "group_order": spec.group_order().to_string(),
            "multinomial": multinomial.to_string(),
            "factors": factors,
        }),
        Map::new(),
        &[],
        started.elapsed(),
    );
    emit(format, record, text)
}

fn segment_exponent(kind: SegmentKind, word: &Word, tail_side: TailSide) -> usize {
    let (e, n) = word.counts();
    match kind {
        SegmentKind::LowerArch => e,
        SegmentKind::UpperArch => e - 1,
        SegmentKind::Tail => match tail_side {
            TailSide::Superdiagonal => e,
            TailSide::Subdiagonal => n,
            TailSide::Empty => 0,
        },
    }
}

fn cmd_decompose(word: String, format: Format) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    let word: Word = word.parse().map_err(|e: chaincount::Error| e.to_string())?;
    let decomposition = word.decompose();
    let endpoint = word.endpoint();
    let total = word_weight_exponent(&word);

    let mut text = format!("word: {word}\nendpoint: {endpoint}\n");
    let mut segments = Vec::new();
    for (i, segment) in decomposition.segments.iter().enumerate() {
        let exponent = segment_exponent(segment.kind, &segment.word, decomposition.tail_side);
        let kind = match segment.kind {
            SegmentKind::LowerArch => "lower arch".to_string(),
            SegmentKind::UpperArch => "upper arch".to_string(),
            SegmentKind::Tail => format!("tail ({:?})", decomposition.tail_side).to_lowercase(),
        };
        text.push_str(&format!(
            "  {}. {kind}  {}  (weight exponent {exponent})\n",
            i + 1,
            segment.word
        ));
        segments.push(json!({
            "kind": format!("{:?}", segment.kind),
            "word": segment.word.to_string(),
            "exponent": exponent,
        }));
    }
    text.push_str(&format!(
        "total weight exponent: {total}\nupper arches: {}\n",
        decomposition.upper_arch_count()
    ));
    let record = envelope(
        "decompose",
        json!({ "word": word.to_string() }),
        json!({
            "word": word.to_string(),
            "endpoint": point_json(endpoint),
            "class": format!("{:?}", word.classify()),
            "segments": segments,
            "tail_side": format!("{:?}", decomposition.tail_side),
            "total_exponent": total,
            "upper_arch_count": decomposition.upper_arch_count(),
        }),
        Map::new(),
        &[],
        started.elapsed(),
    );
    emit(format, record, text)
}

fn parse_point(target: &str) -> Result<LatticePoint, String> {
    let parts: Vec<&str> = target.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("target must be x,y, got '{target}'"));
    }
    let x = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("invalid x in '{target}'"))?;
    let y = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("invalid y in '{target}'"))?;
    Ok(LatticePoint { x, y })
}

fn cmd_bijection(
    word: String,
    inverse: bool,
    target: Option<String>,
    k: Option<usize>,
    format: Format,
) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    let word: Word = word.parse().map_err(|e: chaincount::Error| e.to_string())?;

    let (direction, input, output, k, source, image_endpoint) = if inverse {
        let target = target.ok_or("--inverse requires --target x,y")?;
        let k = k.ok_or("--inverse requires --k")?;
        let target = parse_point(&target)?;
        let preimage = theta(&word, target, k).map_err(|e| e.to_string())?;
        (
            "inverse",
            word.to_string(),
            preimage,
            k,
            target,
            word.endpoint(),
        )
    } else {
        if target.is_some() || k.is_some() {
            return Err("--target and --k only apply together with --inverse".to_string());
        }
        let k = upper_arch_count(&word);
        let source = word.endpoint();
        let image = phi(&word);
        let image_endpoint = ballot_endpoint_for(source, k).map_err(|e| e.to_string())?;
        debug_assert_eq!(image.endpoint(), image_endpoint);
        (
            "forward",
            word.to_string(),
            image,
            k,
            source,
            image_endpoint,
        )
    };

    let text = match direction {
        "forward" => format!(
            "phi({input}) = {output}\nupper arches k = {k}, source {source}, ballot image in B{image_endpoint}\n"
        ),
        _ => format!("theta({input}) = {output}\ntarget {source}, upper arches k = {k}\n"),
    };
    let record = envelope(
        "bijection",
        json!({
            "word": input,
            "inverse": inverse,
            "target": if inverse { Some(point_json(source)) } else { None },
            "k": if inverse { Some(k) } else { None },
        }),
        json!({
            "direction": direction,
            "input": input,
            "output": output.to_string(),
            "k": k,
            "source": point_json(source),
            "image_endpoint": point_json(image_endpoint),
        }),
        Map::new(),
        &[],
        started.elapsed(),
    );
    emit(format, record, text)
}

fn sorted_tuples_of_length(k: usize, max_alpha: u32) -> Vec<Vec<u32>> {
    fn rec(min: u32, max: u32, slots: usize, scratch: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            out.push(scratch.clone());
            return;
        }
        for entry in min..=max {
            scratch.push(entry);
            rec(entry, max, slots - 1, scratch, out);
            scratch.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_alpha, k, &mut Vec::new(), &mut out);
    out
}

fn cmd_table(k: usize, max_alpha: u32, format: Format) -> CmdResult {
    let started = Instant::now();
    if !(1..=4).contains(&k) {
        return Err(format!("k must be between 1 and 4, got {k}"));
    }
    if !(1..=12).contains(&max_alpha) {
        return Err(format!(
            "max-alpha must be between 1 and 12, got {max_alpha}"
        ));
    }
    let mut counter = ChainCounter::new();
    let mut rows = Vec::new();
    for entries in sorted_tuples_of_length(k, max_alpha) {
        let tuple = ExponentTuple::new(entries.clone()).expect("positive entries");
        let poly = counter.polynomial(&tuple);
        rows.push((entries, poly));
    }

    if format == Format::Csv {
        let mut writer = csv::Writer::from_writer(std::io::stdout());
        writer
            .write_record(["alphas", "degree", "coefficient_sum", "coefficients"])
            .map_err(|e| e.to_string())?;
        for (entries, poly) in &rows {
            let alphas = entries
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let coefficients = poly
                .dense_coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writer
                .write_record([
                    alphas,
                    poly.degree().unwrap_or(0).to_string(),
                    poly.coefficient_sum().to_string(),
                    coefficients,
                ])
                .map_err(|e| e.to_string())?;
        }
        writer.flush().map_err(|e| e.to_string())?;
        return Ok(0);
    }

    let mut text = String::new();
    let mut json_rows = Vec::new();
    for (entries, poly) in &rows {
        let tuple_label = format!(
            "({})",
            entries
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        text.push_str(&format!(
            "{tuple_label}  degree {}  sum {}  f = {}\n",
            poly.degree().unwrap_or(0),
            poly.coefficient_sum(),
            poly.render("p")
        ));
        json_rows.push(json!({
            "alphas": entries,
            "coefficients": poly.dense_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "degree": poly.degree(),
            "coefficient_sum": poly.coefficient_sum().to_string(),
        }));
    }
    let record = envelope(
        "table",
        json!({ "k": k, "max_alpha": max_alpha }),
        json!({ "rows": json_rows }),
        Map::new(),
        &[],
        started.elapsed(),
    );
    emit(format, record, text)
}

fn cmd_verify(
    suite: Suite,
    max_sum: usize,
    max_order: u64,
    oracle_bound: u64,
    enum_bound: usize,
    format: Format,
) -> CmdResult {
    let started = Instant::now();
    reject_csv(format)?;
    if max_sum > enum_bound {
        return Err(format!(
            "max-sum {max_sum} exceeds the enumeration bound {enum_bound}"
        ));
    }
    if max_order > oracle_bound {
        return Err(format!(
            "max-order {max_order} exceeds the oracle bound {oracle_bound}"
        ));
    }

    let selected: Vec<&'static str> = match suite {
        Suite::All => vec!["forms", "bijection", "oracle"],
        Suite::Forms => vec!["forms"],
        Suite::Bijection => vec!["bijection"],
        Suite::Oracle => vec!["oracle"],
    };

    let mut text = String::new();
    let mut reports = Vec::new();
    let mut failure: Option<verify::Counterexample> = None;
    for name in &selected {
        let outcome = match *name {
            "forms" => verify::forms_suite(max_sum, enum_bound),
            "bijection" => verify::bijection_suite(max_sum, enum_bound),
            _ => verify::oracle_suite(max_order, oracle_bound),
        };
        match outcome {
            Ok(report) => {
                text.push_str(&format!("ok {}: {} checks\n", report.name, report.checks));
                reports
                    .push(json!({ "suite": report.name, "checks": report.checks, "passed": true }));
            }
            Err(counterexample) => {
                text.push_str(&format!(
                    "FAIL {}: {}\n",
                    counterexample.suite, counterexample.description
                ));
                reports.push(json!({ "suite": counterexample.suite, "passed": false }));
                failure = Some(counterexample);
                break;
            }
        }
    }

    let passed = failure.is_none();
    let record = envelope(
        "verify",
        json!({
            "suite": format!("{suite:?}").to_lowercase(),
            "max_sum": max_sum,
            "max_order": max_order,
            "oracle_bound": oracle_bound,
            "enum_bound": enum_bound,
        }),
        json!({
            "suites": reports,
            "passed": passed,
            "counterexample": failure.as_ref().map(|c| json!({
                "suite": c.suite,
                "description": c.description,
            })),
        }),
        Map::new(),
        &[],
        started.elapsed(),
    );
    emit(format, record, text)?;
    Ok(if passed { 0 } else { 2 })
}
