//! `liechar` — command-line front end for the liechar library.
//!
//! Every subcommand emits a report in one of three formats (`--out
//! json|csv|text`). JSON reports carry `"schema": "liechar/1"` and encode
//! rationals as `{"num": …, "den": …}` in lowest terms; map keys are
//! sorted, so identical invocations produce byte-identical output.
//!
//! Exit codes: 0 on success, 1 when a verification-style command finds a
//! failing check, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use liechar::acceptance::{run_all, Status};
use liechar::alphabeta::{alpha_classical, beta_bruteforce, f_bound, Rat};
use liechar::classgeom::{GroupFamily, LeviShape};
use liechar::exceptdata::{alpha_table_for, ExceptionalGroup};
use liechar::ffgroup::{ClassTable, FieldSpec, GroupKind, GroupSpec, Mat};
use liechar::spectra::{character_table, main1_bound_audit, steinberg_check};
use liechar::walks::{bound_catalog, mixing_time, norms, step, WalkState};

#[derive(Parser)]
#[command(name = "liechar", version, about = "Character-bound exponents, class geometry and conjugacy-class walks for finite groups of Lie type", max_term_width = 100)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gl,
    Sl,
    Sp,
    SoOdd,
    SoEven,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Gl,
    Sl,
}

impl From<KindArg> for GroupKind {
    fn from(k: KindArg) -> GroupKind {
        match k {
            KindArg::Gl => GroupKind::GL,
            KindArg::Sl => GroupKind::SL,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExceptionalArg {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl From<ExceptionalArg> for ExceptionalGroup {
    fn from(g: ExceptionalArg) -> ExceptionalGroup {
        match g {
            ExceptionalArg::G2 => ExceptionalGroup::G2,
            ExceptionalArg::F4 => ExceptionalGroup::F4,
            ExceptionalArg::E6 => ExceptionalGroup::E6,
            ExceptionalArg::E7 => ExceptionalGroup::E7,
            ExceptionalArg::E8 => ExceptionalGroup::E8,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Maximal class-dimension ratio α of a split Levi subgroup
    Alpha {
        /// Ambient classical family
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Natural (matrix) dimension of the ambient group
        #[arg(long)]
        n: u32,
        /// Comma-separated GL factor sizes, e.g. 3,2
        #[arg(long, default_value = "")]
        sizes: String,
        /// Natural dimension of the residual classical factor
        #[arg(long, default_value_t = 0)]
        classical: u32,
    },
    /// Combinatorial β of GL factor sizes (equal to α for GL Levis)
    Beta {
        /// Comma-separated factor sizes, e.g. 3,2
        sizes: String,
    },
    /// Character-bound constant f(r) at a rank and minimal field size
    Fbound {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        q0: u32,
    },
    /// α table of an exceptional group
    Table {
        #[arg(long, value_enum)]
        group: ExceptionalArg,
    },
    /// Conjugacy class data of GLₙ(q) or SLₙ(q)
    Group {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Field size q = p^k (prime power ≤ 32)
        #[arg(long)]
        q: u32,
    },
    /// Numerical character table (degrees and residuals)
    Chartable {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Exact conjugacy-class random walk and mixing report
    Walk {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Class representative, rows separated by ';', e.g. "2,0;0,4"
        #[arg(long)]
        class_rep: String,
        /// Steps of the walk to report
        #[arg(long, default_value_t = 8)]
        tmax: u32,
    },
    /// Catalog of diameter/mixing bounds for an ambient family and Levi shape
    Bounds {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        classical: u32,
        /// Eigenvalue support of the driving element
        #[arg(long, default_value_t = 1)]
        supp: u32,
    },
    /// Character-ratio audit at a semisimple element with Levi centralizer
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Element, rows separated by ';'
        #[arg(long)]
        rep: String,
        /// Centralizer Levi block sizes, e.g. 1,2
        #[arg(long)]
        blocks: String,
    },
    /// Run the acceptance suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn rat_json(r: Rat) -> Value {
    json!({"num": *r.numer(), "den": *r.denom()})
}

fn parse_sizes(s: &str) -> Result<Vec<u32>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad size {x:?}: {e}")))
        .collect()
}

fn parse_mat(s: &str) -> Result<Mat, String> {
    let rows: Vec<Vec<u32>> = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad entry {x:?}: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err("matrix must be square, rows separated by ';'".into());
    }
    Ok(Mat::from_rows(&rows))
}

fn family(arg: FamilyArg, n: u32) -> GroupFamily {
    match arg {
        FamilyArg::Gl => GroupFamily::GL(n),
        FamilyArg::Sl => GroupFamily::SL(n),
        FamilyArg::Sp => GroupFamily::Sp(n),
        FamilyArg::SoOdd => GroupFamily::SOOdd(n),
        FamilyArg::SoEven => GroupFamily::SOEven(n),
    }
}

fn field(q: u32) -> Result<FieldSpec, String> {
    let p = (2..=q).find(|&p| q % p == 0).ok_or("q must be at least 2")?;
    let mut k = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m != 1 {
        return Err(format!("{q} is not a prime power"));
    }
    FieldSpec::build(p, k).map_err(|e| e.to_string())
}

fn class_table(kind: KindArg, n: usize, q: u32) -> Result<ClassTable, String> {
    let spec = GroupSpec::new(kind.into(), n, field(q)?).map_err(|e| e.to_string())?;
    ClassTable::build(spec).map_err(|e| e.to_string())
}

/// (report, rows-for-csv, check failure flag)
struct Report {
    body: Value,
    csv: Vec<Vec<String>>,
    check_failed: bool,
}

fn run(cmd: Command) -> Result<Report, String> {
    match cmd {
        Command::Alpha { family: fam, n, sizes, classical } => {
            let shape = LeviShape::new(family(fam, n), parse_sizes(&sizes)?, classical)
                .map_err(|e| e.to_string())?;
            let res = alpha_classical(&shape).map_err(|e| e.to_string())?;
            let witness: Vec<Vec<u32>> = res
                .witness
                .gl
                .iter()
                .map(|p| p.parts().to_vec())
                .chain(std::iter::once(res.witness.classical.parts().to_vec()))
                .collect();
            Ok(Report {
                body: json!({"value": rat_json(res.value), "witness_jordan": witness}),
                csv: vec![
                    vec!["value_num".into(), res.value.numer().to_string()],
                    vec!["value_den".into(), res.value.denom().to_string()],
                ],
                check_failed: false,
            })
        }
        Command::Beta { sizes } => {
            let sizes = parse_sizes(&sizes)?;
            let res = beta_bruteforce(&sizes).map_err(|e| e.to_string())?;
            Ok(Report {
                body: json!({"value": rat_json(res.value), "witness_matrix": res.witness_matrix}),
                csv: vec![
                    vec!["value_num".into(), res.value.numer().to_string()],
                    vec!["value_den".into(), res.value.denom().to_string()],
                ],
                check_failed: false,
            })
        }
        Command::Fbound { r, q0 } => {
            let fb = f_bound(r, q0).map_err(|e| e.to_string())?;
            Ok(Report {
                body: json!({
                    "general": {
                        "num": fb.general.numer().to_string(),
                        "den": fb.general.denom().to_string(),
                    },
                    "closed_form": fb.closed_form.as_ref().map(|c| c.to_string()),
                }),
                csv: vec![
                    vec!["general_num".into(), fb.general.numer().to_string()],
                    vec!["general_den".into(), fb.general.denom().to_string()],
                    vec![
                        "closed_form".into(),
                        fb.closed_form.map_or_else(|| "-".into(), |c| c.to_string()),
                    ],
                ],
                check_failed: false,
            })
        }
        Command::Table { group } => {
            let entries = alpha_table_for(group.into());
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "levi": e.levi_label,
                        "alpha": rat_json(e.alpha),
                        "is_upper_bound": e.is_upper_bound,
                        "is_family": e.is_family,
                    })
                })
                .collect();
            let csv = entries
                .iter()
                .map(|e| {
                    vec![
                        e.levi_label.to_string(),
                        e.alpha.numer().to_string(),
                        e.alpha.denom().to_string(),
                        e.is_upper_bound.to_string(),
                        e.is_family.to_string(),
                    ]
                })
                .collect();
            Ok(Report { body: json!({"rows": rows}), csv, check_failed: false })
        }
        Command::Group { kind, n, q } => {
            let t = class_table(kind, n, q)?;
            let classes: Vec<Value> = (0..t.num_classes())
                .map(|k| {
                    json!({
                        "rep": mat_rows(&t.reps[k]),
                        "size": t.sizes[k],
                        "centralizer_order": t.cent_orders[k],
                    })
                })
                .collect();
            let csv = (0..t.num_classes())
                .map(|k| vec![k.to_string(), t.sizes[k].to_string(), t.cent_orders[k].to_string()])
                .collect();
            Ok(Report {
                body: json!({"order": t.spec.order(), "num_classes": t.num_classes(), "classes": classes}),
                csv,
                check_failed: false,
            })
        }
        Command::Chartable { kind, n, q } => {
            let t = class_table(kind, n, q)?;
            let ct = character_table(&t).map_err(|e| e.to_string())?;
            let values: Vec<Vec<Vec<f64>>> = ct
                .values
                .iter()
                .map(|row| row.iter().map(|z| vec![z.re, z.im]).collect())
                .collect();
            let csv = ct.degrees.iter().map(|d| vec![d.to_string()]).collect();
            Ok(Report {
                body: json!({
                    "order": t.spec.order(),
                    "degrees": ct.degrees,
                    "degree_residual": ct.degree_residual,
                    "orthogonality_residual": ct.orthogonality_residual,
                    "values_re_im": values,
                }),
                csv,
                check_failed: false,
            })
        }
        Command::Walk { kind, n, q, class_rep, tmax } => {
            let t = class_table(kind, n, q)?;
            let rep = parse_mat(&class_rep)?;
            let c = t.class_of(&rep).ok_or("representative not in the group")?;
            let tensor = t.structure_tensor();
            let mut state = WalkState::point_identity(&t);
            let mut per_t = Vec::new();
            let mut csv = vec![vec!["t".into(), "l1".into(), "linf".into()]];
            for _ in 0..tmax {
                state = step(&state, c, &t, &tensor);
                let (l1, linf) = norms(&state, &t);
                let (l1, linf) = (l1.to_f64().unwrap(), linf.to_f64().unwrap());
                per_t.push(json!({"t": state.t, "l1": l1, "linf": linf}));
                csv.push(vec![state.t.to_string(), format!("{l1:.12}"), format!("{linf:.12}")]);
            }
            let mixing = mixing_time(c, &t, &tensor, None).map_err(|e| e.to_string())?;
            Ok(Report {
                body: json!({
                    "class_size": t.sizes[c],
                    "norms": per_t,
                    "mixing": {
                        "t_l1": mixing.t_l1,
                        "t_linf": mixing.t_linf,
                        "cover": mixing.cover,
                        "lower_bound": mixing.lower_bound,
                        "support_lower_bound": mixing.support_lower_bound,
                    },
                }),
                csv,
                check_failed: false,
            })
        }
        Command::Bounds { family: fam, n, sizes, classical, supp } => {
            let ambient = family(fam, n);
            let shape = LeviShape::new(ambient, parse_sizes(&sizes)?, classical)
                .map_err(|e| e.to_string())?;
            let cat = bound_catalog(ambient, &shape, supp).map_err(|e| e.to_string())?;
            let rows: Vec<Value> = cat
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "value": {"num": e.value.0, "den": e.value.1},
                        "proviso": e.proviso,
                    })
                })
                .collect();
            let csv = cat
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.name.to_string(),
                        e.value.0.to_string(),
                        e.value.1.to_string(),
                        e.proviso.to_string(),
                    ]
                })
                .collect();
            Ok(Report { body: json!({"bounds": rows}), csv, check_failed: false })
        }
        Command::Audit { n, q, rep, blocks } => {
            let t = class_table(KindArg::Gl, n, q)?;
            let ct = character_table(&t).map_err(|e| e.to_string())?;
            let g = parse_mat(&rep)?;
            let blocks: Vec<usize> = parse_sizes(&blocks)?.iter().map(|&b| b as usize).collect();
            let audit = main1_bound_audit(&ct, &t, &g, &blocks).map_err(|e| e.to_string())?;
            let st = steinberg_check(&ct, &t).map_err(|e| e.to_string())?;
            Ok(Report {
                body: json!({
                    "alpha": {"num": audit.alpha.0, "den": audit.alpha.1},
                    "max_effective_f": audit.max_effective_f,
                    "f_bound": audit.f_bound_value,
                    "within_bound": audit.within_bound,
                    "steinberg_degree": st.steinberg_degree,
                }),
                csv: vec![
                    vec!["alpha_num".into(), audit.alpha.0.to_string()],
                    vec!["alpha_den".into(), audit.alpha.1.to_string()],
                    vec!["max_effective_f".into(), audit.max_effective_f.to_string()],
                    vec!["within_bound".into(), audit.within_bound.to_string()],
                ],
                check_failed: !audit.within_bound,
            })
        }
        Command::Verify { suite } => {
            if suite != "all" {
                return Err(format!("unknown suite {suite:?}; only \"all\" is available"));
            }
            let results = run_all();
            let mut rows = Vec::new();
            let mut csv = Vec::new();
            let mut failed = false;
            for r in &results {
                let pass = r.status == Status::Pass;
                failed |= !pass;
                rows.push(json!({
                    "id": r.id,
                    "name": r.name,
                    "status": if pass { "pass" } else { "fail" },
                    "detail": r.detail,
                }));
                csv.push(vec![
                    r.id.to_string(),
                    if pass { "pass".into() } else { "fail".into() },
                    r.name.to_string(),
                    r.detail.clone(),
                ]);
            }
            Ok(Report { body: json!({"criteria": rows}), csv, check_failed: failed })
        }
    }
}

fn mat_rows(m: &Mat) -> Vec<Vec<u32>> {
    (0..m.n).map(|i| (0..m.n).map(|j| m.get(i, j)).collect()).collect()
}

fn emit_text(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        emit_text(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}-");
                        emit_text(item, indent + 1);
                    }
                    _ => println!("{pad}- {item}"),
                }
            }
        }
        _ => println!("{pad}{v}"),
    }
}

fn main() {
    // reserved thread cap for batch jobs; validated here so a bad value
    // fails fast with a usage error
    if let Ok(threads) = std::env::var("LIECHAR_THREADS") {
        if threads.parse::<usize>().map(|t| t == 0).unwrap_or(true) {
            eprintln!("LIECHAR_THREADS must be a positive integer, got {threads:?}");
            std::process::exit(2);
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            match cli.out {
                OutFormat::Json => {
                    let mut body = report.body;
                    if let Value::Object(map) = &mut body {
                        map.insert("schema".into(), json!("liechar/1"));
                    }
                    // sorted-key map: byte-identical output per invocation
                    println!("{}", serde_json::to_string_pretty(&body).unwrap());
                }
                OutFormat::Csv => {
                    for row in &report.csv {
                        let quoted: Vec<String> = row
                            .iter()
                            .map(|cell| {
                                if cell.contains([',', '"', '\n']) {
                                    format!("\"{}\"", cell.replace('"', "\"\""))
                                } else {
                                    cell.clone()
                                }
                            })
                            .collect();
                        println!("{}", quoted.join(","));
                    }
                }
                OutFormat::Text => emit_text(&report.body, 0),
            }
            std::process::exit(if report.check_failed { 1 } else { 0 });
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
