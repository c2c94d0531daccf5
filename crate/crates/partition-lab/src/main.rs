//! `partition-lab`: command-line front end over the library. Results go to
//! stdout, diagnostics to stderr; exit status 0 means success/affirmative,
//! 1 a negative verdict, 2 a usage or parse error.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use partition_lab::cli::{group_thousands, merge_frames, parse_literal};
use partition_lab::enumeration::{
    count_restricted, partitions_of, partitions_of_dimension, self_conjugate_of_dimension,
    Restriction,
};
use partition_lab::pfn::{
    classical_list_families, prime_power_family, proved_families, rademacher_p, scan_congruences,
    CongruenceFamily, PfnError, DEFAULT_DIGITS, DESK_SCALE_DELTAS,
};
use partition_lab::real::format_fixed;
use partition_lab::series::{
    p_exact, p_exact_recurrence, series_product_bounded, series_product_unrestricted, PartSet,
};
use partition_lab::{area_balance, decompose_nest_egg, theorem_checks, EggShape, Partition};

const SCHEMA: &str = "partition-lab/1";

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "partition-lab",
    version,
    about = "Integer partitions: self-conjugacy from multiplicities, diagrams, \
             nest-and-egg decomposition, and p(n) several ways"
)]
struct Cli {
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Working precision in significant decimal digits for series evaluation
    #[arg(long, global = true, env = "PARTITION_LAB_DIGITS")]
    digits: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMethod {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramStyle {
    Young,
    Ferrers,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PfnMethod {
    Series,
    Recurrence,
    Rademacher,
    Enumerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CongruenceSuite {
    Lists,
    Ramanujan,
    Atkin,
    Chowla,
}

#[derive(Subcommand)]
enum Command {
    /// Decide self-conjugacy from the part multiplicities and/or the
    /// conjugate-and-compare oracle
    Check {
        /// Partition literal, e.g. "5^2,3,2^2"
        partition: String,
        #[arg(long, value_enum, default_value = "both")]
        method: CheckMethod,
    },
    /// Render the Young or Ferrers diagram
    Diagram {
        partition: String,
        #[arg(long, value_enum, default_value = "young")]
        style: DiagramStyle,
        /// Draw the conjugate instead
        #[arg(long)]
        conjugate: bool,
    },
    /// Peel a symmetric partition into nested fancy-L frames around an egg
    Decompose { partition: String },
    /// Count self-conjugate partitions per dimension against 2^(d-1)
    CountSc {
        /// Largest dimension to scan (at most 10)
        d_max: u64,
    },
    /// The partition function p(n)
    Pfn {
        n: u64,
        #[arg(long, value_enum, default_value = "series")]
        method: PfnMethod,
        /// Print the per-k term table (with --method rademacher)
        #[arg(long)]
        trace: bool,
        /// Fixed number of series terms (with --method rademacher)
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Verify partition congruence families
    Congruences {
        #[arg(value_enum)]
        suite: CongruenceSuite,
        /// Largest p-argument to check
        #[arg(long, default_value_t = 500)]
        limit: u64,
    },
    /// Tabulate partitions into odd parts against distinct parts
    Euler {
        /// Largest n to tabulate (at most 300)
        n_max: u64,
    },
    /// Exact areas on both sides of the diagonal of the diagram
    Area { partition: String },
    /// List partitions of a size or a dimension
    Enumerate {
        /// Enumerate partitions of this size (at most 60)
        #[arg(long, conflicts_with = "dimension")]
        size: Option<u64>,
        /// Enumerate partitions of this dimension (at most 10)
        #[arg(long)]
        dimension: Option<u64>,
        /// Keep only partitions with odd parts (with --size)
        #[arg(long, conflicts_with_all = ["distinct", "self_conjugate"])]
        odd: bool,
        /// Keep only partitions with distinct parts (with --size)
        #[arg(long, conflicts_with = "self_conjugate")]
        distinct: bool,
        /// Keep only self-conjugate partitions (with --dimension)
        #[arg(long)]
        self_conjugate: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let digits = cli.digits.unwrap_or(DEFAULT_DIGITS);
    let code = match cli.command {
        Command::Check { ref partition, method } => cmd_check(partition, method, cli.json),
        Command::Diagram {
            ref partition,
            style,
            conjugate,
        } => cmd_diagram(partition, style, conjugate, cli.json),
        Command::Decompose { ref partition } => cmd_decompose(partition, cli.json),
        Command::CountSc { d_max } => cmd_count_sc(d_max, cli.json),
        Command::Pfn {
            n,
            method,
            trace,
            kmax,
        } => cmd_pfn(n, method, trace, kmax, digits, cli.json),
        Command::Congruences { suite, limit } => cmd_congruences(suite, limit, cli.json),
        Command::Euler { n_max } => cmd_euler(n_max, cli.json),
        Command::Area { ref partition } => cmd_area(partition, cli.json),
        Command::Enumerate {
            size,
            dimension,
            odd,
            distinct,
            self_conjugate,
        } => cmd_enumerate(size, dimension, odd, distinct, self_conjugate, cli.json),
    };
    std::process::exit(code);
}

fn parse_or_usage(literal: &str) -> Result<Partition, i32> {
    parse_literal(literal).map_err(|error| {
        eprintln!("error: {error}");
        EXIT_USAGE
    })
}

fn guard(condition: bool, message: &str) -> Result<(), i32> {
    if condition {
        Ok(())
    } else {
        eprintln!("error: {message}");
        Err(EXIT_USAGE)
    }
}

fn parts_json(partition: &Partition) -> serde_json::Value {
    json!(partition.parts())
}

fn cmd_check(literal: &str, method: CheckMethod, as_json: bool) -> i32 {
    let partition = match parse_or_usage(literal) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let form = partition.to_multiplicities();
    let checks = if method != CheckMethod::Oracle {
        theorem_checks(&form)
    } else {
        Vec::new()
    };
    let theorem_verdict = match method {
        CheckMethod::Oracle => None,
        _ => Some(checks.iter().all(|c| c.holds)),
    };
    let oracle_verdict = match method {
        CheckMethod::Theorem => None,
        _ => Some(partition.is_self_conjugate_oracle()),
    };
    if let (Some(t), Some(o)) = (theorem_verdict, oracle_verdict) {
        assert_eq!(t, o, "multiplicity test and oracle disagree: library bug");
    }
    let self_conjugate = theorem_verdict.or(oracle_verdict).unwrap();

    if as_json {
        let rendered_checks: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "part": c.value,
                    "multiplicities": c.terms,
                    "sum": c.sum,
                    "holds": c.holds,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "check",
                "partition": parts_json(&partition),
                "method": method_name(method),
                "checks": rendered_checks,
                "theorem": theorem_verdict,
                "oracle": oracle_verdict,
                "self_conjugate": self_conjugate,
            })
        );
    } else {
        println!("partition: {partition}");
        if method != CheckMethod::Oracle {
            println!("multiplicities: {form}");
            for check in &checks {
                let sum_text = check
                    .terms
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                if check.holds {
                    println!("check: {} = {}", check.value, sum_text);
                } else {
                    println!(
                        "check: {} ≠ {} (part {} vs multiplicity sum {})",
                        check.sum, check.value, check.value, sum_text
                    );
                }
            }
        }
        if let Some(oracle) = oracle_verdict {
            println!(
                "oracle: conjugate {} the partition",
                if oracle { "equals" } else { "differs from" }
            );
        }
        println!(
            "verdict: {}",
            if self_conjugate {
                "self-conjugate"
            } else {
                "not self-conjugate"
            }
        );
    }
    if self_conjugate {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn method_name(method: CheckMethod) -> &'static str {
    match method {
        CheckMethod::Theorem => "theorem",
        CheckMethod::Oracle => "oracle",
        CheckMethod::Both => "both",
    }
}

fn cmd_diagram(literal: &str, style: DiagramStyle, conjugate: bool, as_json: bool) -> i32 {
    let mut partition = match parse_or_usage(literal) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if conjugate {
        partition = partition.conjugate();
    }
    let rendered = match style {
        DiagramStyle::Young => partition.render_young(),
        DiagramStyle::Ferrers => partition.render_ferrers(),
    };
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "diagram",
                "partition": parts_json(&partition),
                "style": if style == DiagramStyle::Young { "young" } else { "ferrers" },
                "diagram": rendered,
            })
        );
    } else {
        print!("{rendered}");
    }
    EXIT_OK
}

fn egg_json(egg: &EggShape) -> serde_json::Value {
    match egg {
        EggShape::Empty => json!({"kind": "empty", "dim": 0}),
        EggShape::DurfeeSquare(d) => json!({"kind": "durfee-square", "dim": d}),
        EggShape::FancyTriangle(d) => json!({"kind": "fancy-triangle", "dim": d}),
    }
}

fn egg_text(egg: &EggShape) -> String {
    match egg {
        EggShape::Empty => "empty".to_string(),
        EggShape::DurfeeSquare(d) => format!("Durfee square of dimension {d}"),
        EggShape::FancyTriangle(d) => format!("fancy triangle of dimension {d}"),
    }
}

fn cmd_decompose(literal: &str, as_json: bool) -> i32 {
    let partition = match parse_or_usage(literal) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let decomposition = decompose_nest_egg(&partition);
    let groups = merge_frames(&decomposition.frames);
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "decompose",
                "partition": parts_json(&partition),
                "frames": decomposition.frames,
                "frames_display": groups
                    .iter()
                    .map(|g| json!({"width": g.width, "outer_arm": g.outer_arm}))
                    .collect::<Vec<_>>(),
                "egg": egg_json(&decomposition.egg),
                "residual": decomposition.residual.as_ref().map(parts_json),
            })
        );
    } else {
        println!("partition: {partition}");
        match &decomposition.residual {
            Some(residual) => {
                println!("residual: {residual}");
                println!("verdict: not self-conjugate (no nest-and-egg form)");
            }
            None => {
                if groups.is_empty() {
                    println!("nest: (none)");
                } else {
                    let described: Vec<String> = groups
                        .iter()
                        .map(|g| format!("L of width {} with outer arm {}", g.width, g.outer_arm))
                        .collect();
                    println!("nest: {}", described.join(", "));
                }
                println!("egg: {}", egg_text(&decomposition.egg));
            }
        }
    }
    if decomposition.residual.is_some() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

fn cmd_count_sc(d_max: u64, as_json: bool) -> i32 {
    if let Err(code) = guard(
        (1..=10).contains(&d_max),
        "count-sc requires 1 <= d_max <= 10",
    ) {
        return code;
    }
    let mut rows = Vec::new();
    let mut all_match = true;
    for d in 1..=d_max {
        let count = self_conjugate_of_dimension(d).count() as u64;
        let expected = 1u64 << (d - 1);
        let matched = count == expected;
        all_match &= matched;
        rows.push((d, count, expected, matched));
    }
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "count-sc",
                "rows": rows
                    .iter()
                    .map(|&(d, count, expected, matched)| json!({
                        "d": d, "count": count, "expected": expected, "matched": matched,
                    }))
                    .collect::<Vec<_>>(),
                "all_match": all_match,
            })
        );
    } else {
        println!("{:>2}  {:>10}  {:>10}  match", "d", "count", "2^(d-1)");
        for (d, count, expected, matched) in &rows {
            println!(
                "{d:>2}  {count:>10}  {expected:>10}  {}",
                if *matched { "yes" } else { "NO" }
            );
        }
    }
    if all_match {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_pfn(
    n: u64,
    method: PfnMethod,
    trace: bool,
    kmax: Option<usize>,
    digits: u32,
    as_json: bool,
) -> i32 {
    let method_text = match method {
        PfnMethod::Series => "series",
        PfnMethod::Recurrence => "recurrence",
        PfnMethod::Rademacher => "rademacher",
        PfnMethod::Enumerate => "enumerate",
    };
    let mut trace_lines: Vec<(u64, String)> = Vec::new();
    let mut partial_sum_text: Option<String> = None;
    let mut distance_text: Option<String> = None;
    let value: BigInt = match method {
        PfnMethod::Series => p_exact(n),
        PfnMethod::Recurrence => p_exact_recurrence(n),
        PfnMethod::Enumerate => {
            if let Err(code) = guard(n <= 60, "enumeration is guarded to n <= 60") {
                return code;
            }
            BigInt::from(count_restricted(n, Restriction::None).expect("guarded"))
        }
        PfnMethod::Rademacher => {
            if let Err(code) = guard(n >= 1, "the series route needs n >= 1") {
                return code;
            }
            match rademacher_p(n, kmax, digits) {
                Ok(result) => {
                    let mut consts = astro_float::Consts::new().expect("constants cache");
                    for term in &result.terms {
                        trace_lines.push((term.k, format_fixed(&term.value, 3, &mut consts)));
                    }
                    partial_sum_text = Some(format_fixed(&result.partial_sum, 3, &mut consts));
                    distance_text = Some(format_fixed(&result.distance, 3, &mut consts));
                    result.rounded
                }
                Err(error @ PfnError::PrecisionExhausted { .. }) => {
                    eprintln!("error: {error}");
                    eprintln!("hint: raise precision with --digits or widen --kmax");
                    return EXIT_USAGE;
                }
                Err(error) => {
                    eprintln!("error: {error}");
                    return EXIT_USAGE;
                }
            }
        }
    };
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "pfn",
                "n": n,
                "method": method_text,
                "value": value.to_string(),
                "terms": if trace {
                    Some(trace_lines.iter().map(|(k, v)| json!({"k": k, "value": v})).collect::<Vec<_>>())
                } else {
                    None
                },
                "partial_sum": partial_sum_text,
                "distance": distance_text,
            })
        );
    } else {
        if trace && !trace_lines.is_empty() {
            let rendered: Vec<(u64, String)> = trace_lines
                .iter()
                .map(|(k, text)| {
                    let grouped = group_thousands(text);
                    let signed = if grouped.starts_with('-') {
                        grouped
                    } else {
                        format!("+{grouped}")
                    };
                    (*k, signed)
                })
                .collect();
            let width = rendered.iter().map(|(_, s)| s.len()).max().unwrap_or(0);
            for (k, text) in &rendered {
                println!("k={k:<3} {text:>width$}");
            }
            println!("{:-<width$}", "", width = width + 6);
            if let Some(sum) = &partial_sum_text {
                let grouped = group_thousands(sum);
                let signed = if grouped.starts_with('-') {
                    grouped
                } else {
                    format!("+{grouped}")
                };
                println!("sum   {signed:>width$}");
            }
        }
        println!("p({n}) = {value}");
        if let (true, Some(distance)) = (trace, &distance_text) {
            println!("rounding distance: {distance}");
        }
    }
    EXIT_OK
}

struct CongruenceCheck {
    n: u64,
    modulus: u64,
    residue: u64,
    expect_zero: bool,
    ok: bool,
}

fn scan_into(
    family: &CongruenceFamily,
    count: u64,
    expect_zero: bool,
    checks: &mut Vec<CongruenceCheck>,
) {
    let report = scan_congruences(family, count);
    for (n, residue) in report.entries {
        let ok = if expect_zero {
            residue == 0
        } else {
            residue != 0
        };
        checks.push(CongruenceCheck {
            n,
            modulus: family.modulus,
            residue,
            expect_zero,
            ok,
        });
    }
}

fn cmd_congruences(suite: CongruenceSuite, limit: u64, as_json: bool) -> i32 {
    let mut checks: Vec<CongruenceCheck> = Vec::new();
    let suite_text = match suite {
        CongruenceSuite::Lists => "lists",
        CongruenceSuite::Ramanujan => "ramanujan",
        CongruenceSuite::Atkin => "atkin",
        CongruenceSuite::Chowla => "chowla",
    };
    match suite {
        CongruenceSuite::Lists => {
            for (family, named) in classical_list_families() {
                let within = (0..named)
                    .take_while(|m| family.offset + m * family.step <= limit)
                    .count() as u64;
                scan_into(&family, within, true, &mut checks);
            }
        }
        CongruenceSuite::Ramanujan => {
            for family in proved_families() {
                let count = if limit >= family.offset {
                    (limit - family.offset) / family.step + 1
                } else {
                    0
                };
                scan_into(&family, count, true, &mut checks);
            }
        }
        CongruenceSuite::Atkin => {
            for delta in DESK_SCALE_DELTAS {
                let family = prime_power_family(delta).expect("desk deltas factor over 5, 7, 11");
                let count = (0..3u64)
                    .take_while(|m| family.offset + m * family.step <= limit)
                    .count() as u64;
                scan_into(&family, count, true, &mut checks);
            }
        }
        CongruenceSuite::Chowla => {
            let family = CongruenceFamily::new(343, 243, 343, "p(243) against 7^3");
            scan_into(&family, 1, false, &mut checks);
        }
    }
    let passed = checks.iter().all(|check| check.ok);
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "congruences",
                "suite": suite_text,
                "limit": limit,
                "checks": checks
                    .iter()
                    .map(|c| json!({
                        "n": c.n,
                        "modulus": c.modulus,
                        "residue": c.residue,
                        "expect_zero": c.expect_zero,
                        "ok": c.ok,
                    }))
                    .collect::<Vec<_>>(),
                "passed": passed,
            })
        );
    } else {
        for check in &checks {
            let relation = if check.residue == 0 { "≡ 0" } else { "≢ 0" };
            let wanted = if check.expect_zero {
                "expected 0"
            } else {
                "expected nonzero"
            };
            println!(
                "p({}) {} (mod {}): residue {} [{}] {}",
                check.n,
                relation,
                check.modulus,
                check.residue,
                wanted,
                if check.ok { "ok" } else { "FAIL" }
            );
        }
        println!(
            "result: {} of {} checks passed",
            checks.iter().filter(|c| c.ok).count(),
            checks.len()
        );
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_euler(n_max: u64, as_json: bool) -> i32 {
    if let Err(code) = guard(n_max <= 300, "euler table is guarded to n_max <= 300") {
        return code;
    }
    let order = n_max as usize;
    let odd = series_product_unrestricted(&PartSet::Odds, order);
    let distinct = series_product_bounded(&PartSet::AllPositive, 1, order);
    let mut rows = Vec::with_capacity(order + 1);
    let mut all_match = true;
    for n in 0..=order {
        let matched = odd.coeff(n) == distinct.coeff(n);
        all_match &= matched;
        rows.push((n, odd.coeff(n).clone(), distinct.coeff(n).clone(), matched));
    }
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "euler",
                "rows": rows
                    .iter()
                    .map(|(n, o, d, m)| json!({
                        "n": n,
                        "odd_parts": o.to_string(),
                        "distinct_parts": d.to_string(),
                        "matched": m,
                    }))
                    .collect::<Vec<_>>(),
                "all_match": all_match,
            })
        );
    } else {
        println!("{:>4}  {:>16}  {:>16}  match", "n", "p(O,n)", "p(D,n)");
        for (n, o, d, m) in &rows {
            println!("{n:>4}  {o:>16}  {d:>16}  {}", if *m { "yes" } else { "NO" });
        }
    }
    if all_match {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn rational_text(value: num_rational::Rational64) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn cmd_area(literal: &str, as_json: bool) -> i32 {
    let partition = match parse_or_usage(literal) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let balance = match area_balance(&partition) {
        Ok(balance) => balance,
        Err(error) => {
            eprintln!("error: {error}");
            return EXIT_USAGE;
        }
    };
    let balanced = balance.is_balanced();
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "area",
                "partition": parts_json(&partition),
                "below": rational_text(balance.below),
                "above": rational_text(balance.above),
                "balanced": balanced,
            })
        );
    } else {
        println!("partition: {partition}");
        println!("area below the diagonal: {}", rational_text(balance.below));
        println!("area above the diagonal: {}", rational_text(balance.above));
        println!("verdict: {}", if balanced { "balanced" } else { "unbalanced" });
    }
    if balanced {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_enumerate(
    size: Option<u64>,
    dimension: Option<u64>,
    odd: bool,
    distinct: bool,
    self_conjugate: bool,
    as_json: bool,
) -> i32 {
    let (label, partitions): (String, Vec<Partition>) = match (size, dimension) {
        (Some(n), None) => {
            if let Err(code) = guard(n <= 60, "enumeration is guarded to --size <= 60") {
                return code;
            }
            let restriction = match (odd, distinct) {
                (true, _) => Restriction::OddPartsOnly,
                (_, true) => Restriction::DistinctParts,
                _ => Restriction::None,
            };
            let kept = partitions_of(n)
                .filter(|p| match restriction {
                    Restriction::None => true,
                    Restriction::OddPartsOnly => p.parts().iter().all(|&x| x % 2 == 1),
                    Restriction::DistinctParts => p.parts().windows(2).all(|w| w[0] > w[1]),
                })
                .collect();
            (format!("partitions of {n}"), kept)
        }
        (None, Some(d)) => {
            if let Err(code) = guard(
                (1..=10).contains(&d),
                "enumeration is guarded to 1 <= --dimension <= 10",
            ) {
                return code;
            }
            if let Err(code) = guard(
                !odd && !distinct,
                "--odd/--distinct apply to --size enumeration",
            ) {
                return code;
            }
            let stream = if self_conjugate {
                self_conjugate_of_dimension(d)
            } else {
                partitions_of_dimension(d)
            };
            (format!("partitions of dimension {d}"), stream.collect())
        }
        _ => {
            eprintln!("error: pass exactly one of --size or --dimension");
            return EXIT_USAGE;
        }
    };
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "enumerate",
                "what": label,
                "partitions": partitions.iter().map(|p| json!(p.parts())).collect::<Vec<_>>(),
                "count": partitions.len(),
            })
        );
    } else {
        for partition in &partitions {
            println!("{partition}");
        }
        println!("count: {}", partitions.len());
    }
    EXIT_OK
}
