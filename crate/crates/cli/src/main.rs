//! `slocc`: exact-arithmetic SLOCC orbit classification and verification for
//! 2x2x2, 2x2x3 and 2x3x3 states.

mod ket;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use slocc_core::forms::{act, random_slocc};
use slocc_core::polyalgebra::format_rational;
use slocc_core::{
    classify222, classify223, classify233, hilbert, orbitgeom, Error, Hypermatrix,
    NullityVector, Shape, StateDocument,
};

const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_ZERO_STATE: i32 = 2;
const EXIT_BAD_SHAPE: i32 = 3;
const EXIT_PARSE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "slocc",
    about = "Exact SLOCC orbit classification of 2x2x2, 2x2x3 and 2x3x3 states via classical covariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state into its SLOCC orbit.
    Classify {
        /// JSON state document file; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Bra-ket expression instead of a file, e.g. "|000>+|111>".
        #[arg(long)]
        ket: Option<String>,
        /// Shape n1,n2,n3 (or n1xn2xn3); inferred from the ket when omitted.
        #[arg(long)]
        shape: Option<String>,
        /// Human-readable output instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Print every concomitant value of the state's battery.
    Covariants {
        input: Option<PathBuf>,
        #[arg(long)]
        ket: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Print the registry representative of an orbit as a state document.
    NormalForm {
        #[arg(long)]
        shape: String,
        /// Orbit label, e.g. O_V.
        label: String,
    },
    /// Verify the registry dimensions by tangent ranks; JSON report.
    Dims {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Export the orbit inclusion order as a DOT graph.
    Hasse {
        #[arg(long)]
        shape: String,
    },
    /// Resolve and verify the two polynomial relations.
    SyzygyCheck {
        #[arg(long)]
        pretty: bool,
    },
    /// Compare the closed-form Hilbert series against the kernel oracle.
    Hilbert {
        #[arg(long)]
        shape: String,
        /// Coefficient-degree bound (defaults to the per-shape verification
        /// bound; may be raised up to the configured kernel limit).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        pretty: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        /// One of: tables, dims, syzygy, slocc-fuzz, hilbert.
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Concrete n for the parametric 2x2x(n+1) dimension checks
        /// (default: 3, 4 and 5).
        #[arg(long)]
        n: Option<usize>,
        /// Directory to write the conformance reports into (tables suite).
        #[arg(long)]
        emit_conformance: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ZeroState => EXIT_ZERO_STATE,
        Error::UnsupportedShape(_) | Error::UnknownLabel { .. } | Error::DegreeBound { .. } => {
            EXIT_BAD_SHAPE
        }
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_VERIFY_FAIL,
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Command::Classify { input, ket, shape, pretty } => {
            let h = load_state(input, ket, shape)?;
            cmd_classify(&h, pretty)
        }
        Command::Covariants { input, ket, shape, pretty } => {
            let h = load_state(input, ket, shape)?;
            cmd_covariants(&h, pretty)
        }
        Command::NormalForm { shape, label } => {
            let shape = parse_shape(&shape)?;
            let rec = orbitgeom::record(shape, &label)?;
            let doc = StateDocument::from_hypermatrix(
                &rec.representative,
                Some(rec.label.to_string()),
            );
            println!("{}", serde_json::to_string(&doc).unwrap());
            Ok(0)
        }
        Command::Dims { shape, pretty } => {
            let shape = parse_shape(&shape)?;
            let reports = orbitgeom::verify_registry(shape)?;
            if pretty {
                for r in &reports {
                    println!(
                        "{} {:8} rank {:3} dim {:3} expected {:3}",
                        if r.matches { "PASS" } else { "FAIL" },
                        r.label,
                        r.affine_rank,
                        r.projective_dimension,
                        r.expected
                    );
                }
            } else {
                println!("{}", serde_json::to_string(&reports).unwrap());
            }
            Ok(if reports.iter().all(|r| r.matches) { 0 } else { EXIT_VERIFY_FAIL })
        }
        Command::Hasse { shape } => {
            let shape = parse_shape(&shape)?;
            print!("{}", orbitgeom::hasse_dot(shape)?);
            Ok(0)
        }
        Command::SyzygyCheck { pretty } => cmd_syzygy_check(pretty),
        Command::Hilbert { shape, bound, pretty } => {
            let shape = parse_shape(&shape)?;
            let bound = bound.unwrap_or_else(|| default_hilbert_bound(shape));
            let report = hilbert::verify_hilbert(shape, bound)?;
            if pretty {
                for row in &report.rows {
                    println!(
                        "{} d0={} d=({},{},{}) series={} kernel={}",
                        if row.matches { "PASS" } else { "FAIL" },
                        row.d0, row.d[0], row.d[1], row.d[2], row.series, row.kernel
                    );
                }
            } else {
                println!("{}", serde_json::to_string(&report).unwrap());
            }
            Ok(if report.all_match() { 0 } else { EXIT_VERIFY_FAIL })
        }
        Command::Verify { suite, seed, trials, n, emit_conformance, pretty } => {
            let checks = match suite.as_str() {
                "tables" => suite_tables(emit_conformance)?,
                "dims" => suite_dims(n)?,
                "syzygy" => suite_syzygy(),
                "slocc-fuzz" => suite_fuzz(seed, trials)?,
                "hilbert" => suite_hilbert()?,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown suite `{other}`: expected tables, dims, syzygy, slocc-fuzz or hilbert"
                    )))
                }
            };
            let all_pass = checks.iter().all(|c| c.pass);
            if pretty {
                for c in &checks {
                    println!("{} {} — {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
                println!("{}: {}", suite, if all_pass { "all checks passed" } else { "FAILURES" });
            } else {
                let out = VerifyOutput { suite, all_pass, checks };
                println!("{}", serde_json::to_string(&out).unwrap());
            }
            Ok(if all_pass { 0 } else { EXIT_VERIFY_FAIL })
        }
    }
}

fn parse_shape(s: &str) -> Result<Shape, Error> {
    let parts: Vec<&str> = s.split([',', 'x']).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("shape `{s}` must have three factors")));
    }
    let dims: Vec<usize> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid shape component `{p}`")))
        })
        .collect::<Result<_, _>>()?;
    Shape::new(dims[0], dims[1], dims[2])
}

fn load_state(
    input: Option<PathBuf>,
    ket: Option<String>,
    shape: Option<String>,
) -> Result<Hypermatrix, Error> {
    if let Some(expr) = ket {
        let terms = ket::parse_ket_expression(&expr)?;
        let shape = match shape {
            Some(s) => parse_shape(&s)?,
            None => {
                let mut dims = [2usize; 3];
                for t in &terms {
                    for (d, &i) in dims.iter_mut().zip(t.indices.iter()) {
                        *d = (*d).max(i + 1);
                    }
                }
                // smallest supported shape containing the indices
                if dims[1] <= 2 {
                    Shape::new(dims[0], 2, dims[2])?
                } else {
                    Shape::new(dims[0], dims[1].max(3), dims[2].max(3))?
                }
            }
        };
        let dims = shape.dims();
        let mut entries = vec![slocc_core::Rational::from_integer(0.into()); shape.len()];
        for t in &terms {
            for (slot, &i) in t.indices.iter().enumerate() {
                if i >= dims[slot] {
                    return Err(Error::Parse(format!(
                        "ket index {} exceeds shape {} in slot {}",
                        i,
                        shape,
                        slot + 1
                    )));
                }
            }
            entries[shape.flat(t.indices[0], t.indices[1], t.indices[2])] += &t.coeff;
        }
        Hypermatrix::new(shape, entries)
    } else {
        let mut text = String::new();
        match input {
            Some(p) if p.as_os_str() != "-" => {
                text = std::fs::read_to_string(&p)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
            }
            _ => {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            }
        }
        let doc: StateDocument = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("invalid state document: {e}")))?;
        doc.to_hypermatrix()
    }
}

#[derive(serde::Serialize)]
struct ClassifyOutput {
    format: [usize; 3],
    orbit: &'static str,
    variety: String,
    dim: usize,
    nullity: NullityVector,
    ancestors: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    duality: Option<String>,
}

fn classify_any(h: &Hypermatrix) -> Result<ClassifyOutput, Error> {
    let shape = h.shape();
    let (record, nullity) = match shape.dims() {
        [2, 2, 2] => {
            let cov = classify222::covariants222(h)?;
            (classify222::classify222(h)?, cov.nullity())
        }
        [2, 2, 3] => {
            let cov = classify223::covariants223(h)?;
            (classify223::classify223(h)?, cov.w_vector())
        }
        [2, 3, 3] => {
            let cov = classify233::covariants233(h)?;
            (classify233::classify233(h)?, cov.w_vector())
        }
        other => return Err(Error::UnsupportedShape(other)),
    };
    let variety = if record.ambient {
        format!("{} (ambient)", record.variety)
    } else {
        record.variety.clone()
    };
    Ok(ClassifyOutput {
        format: shape.dims(),
        orbit: record.label,
        variety,
        dim: record.projective_dimension,
        nullity,
        ancestors: orbitgeom::hasse_ancestors(shape, record.label)?,
        duality: record.duality.clone(),
    })
}

fn cmd_classify(h: &Hypermatrix, pretty: bool) -> Result<i32, Error> {
    let out = classify_any(h)?;
    if pretty {
        println!("format    : {}x{}x{}", out.format[0], out.format[1], out.format[2]);
        println!("orbit     : {}", out.orbit);
        println!("variety   : {}", out.variety);
        println!("dimension : {}", out.dim);
        println!("nullity   : {}", out.nullity);
        for (name, bit) in out.nullity.names().iter().zip(out.nullity.bits()) {
            println!("  [{}] = {}", name, *bit as u8);
        }
        println!("ancestors : {}", out.ancestors.join(" < "));
        if let Some(d) = &out.duality {
            println!("duality   : {d}");
        }
    } else {
        println!("{}", serde_json::to_string(&out).unwrap());
    }
    Ok(0)
}

#[derive(serde::Serialize)]
struct NamedValue {
    name: &'static str,
    value: String,
}

fn battery(h: &Hypermatrix) -> Result<Vec<NamedValue>, Error> {
    let nv = |name: &'static str, p: &slocc_core::Polynomial| NamedValue {
        name,
        value: p.to_string(),
    };
    match h.shape().dims() {
        [2, 2, 2] => {
            let c = classify222::covariants222(h)?;
            Ok(vec![
                nv("A", &c.a),
                nv("B_x", &c.b_x),
                nv("B_y", &c.b_y),
                nv("B_z", &c.b_z),
                nv("C", &c.c),
                NamedValue { name: "Delta", value: format_rational(&c.delta) },
            ])
        }
        [2, 2, 3] => {
            let c = classify223::covariants223(h)?;
            Ok(vec![
                nv("A", &c.a),
                nv("B", &c.b),
                nv("C", &c.c),
                nv("D_x", &c.d_x),
                nv("D_y", &c.d_y),
                NamedValue { name: "Delta", value: format_rational(&c.delta) },
                nv("B_xzeta", &c.b_xzeta),
                nv("B_yzeta", &c.b_yzeta),
                nv("D_zeta", &c.d_zeta),
            ])
        }
        [2, 3, 3] => {
            let c = classify233::covariants233(h)?;
            Ok(vec![
                nv("A", &c.a),
                nv("C_x", &c.c_x),
                nv("F_x", &c.f_x),
                nv("I_x", &c.i_x),
                NamedValue { name: "Delta", value: format_rational(&c.delta) },
                nv("D_xyz", &c.d_xyz),
                nv("D_yz", &c.d_yz),
                nv("F_y", &c.f_y),
                nv("B_z_eta", &c.b_z_eta),
                nv("B_y_zeta", &c.b_y_zeta),
                nv("B_x_eta_zeta", &c.b_x_eta_zeta),
                nv("D_eta_zeta", &c.d_eta_zeta),
                nv("D_yz_eta_zeta", &c.d_yz_eta_zeta),
                nv("F_eta", &c.f_eta),
                nv("F_zeta", &c.f_zeta),
                nv("H_xyz_zeta", &c.h_xyz_zeta),
                nv("H_xyz_eta", &c.h_xyz_eta),
            ])
        }
        other => Err(Error::UnsupportedShape(other)),
    }
}

fn cmd_covariants(h: &Hypermatrix, pretty: bool) -> Result<i32, Error> {
    let values = battery(h)?;
    if pretty {
        let width = values.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &values {
            println!("{:width$} = {}", v.name, v.value, width = width);
        }
    } else {
        #[derive(serde::Serialize)]
        struct Out {
            format: [usize; 3],
            concomitants: Vec<NamedValue>,
        }
        let out = Out { format: h.shape().dims(), concomitants: values };
        println!("{}", serde_json::to_string(&out).unwrap());
    }
    Ok(0)
}

fn cmd_syzygy_check(pretty: bool) -> Result<i32, Error> {
    let s222 = classify222::syzygy222();
    let s233 = classify233::cubic_syzygy_search();
    #[derive(serde::Serialize)]
    struct Out {
        lambda_222: Vec<String>,
        residual_222_terms: usize,
        lambda_233: Option<Vec<String>>,
        solution_space_dim_233: usize,
        residual_233_terms: usize,
    }
    let ok = s222.residual.is_zero()
        && s233.solution_space_dim == 1
        && s233.lambda.is_some()
        && s233.residual.is_zero();
    let out = Out {
        lambda_222: s222.lambda.iter().map(format_rational).collect(),
        residual_222_terms: s222.residual.num_terms(),
        lambda_233: s233
            .lambda
            .as_ref()
            .map(|l| l.iter().map(format_rational).collect()),
        solution_space_dim_233: s233.solution_space_dim,
        residual_233_terms: s233.residual.num_terms(),
    };
    if pretty {
        println!(
            "2x2x2: lambda = ({}), residual terms = {}",
            out.lambda_222.join(", "),
            out.residual_222_terms
        );
        println!(
            "2x3x3: lambda = {}, solution space dim = {}, residual terms = {}",
            out.lambda_233
                .as_ref()
                .map(|l| format!("({})", l.join(", ")))
                .unwrap_or_else(|| "none".into()),
            out.solution_space_dim_233,
            out.residual_233_terms
        );
    } else {
        println!("{}", serde_json::to_string(&out).unwrap());
    }
    Ok(if ok { 0 } else { EXIT_VERIFY_FAIL })
}

#[derive(Clone, serde::Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(serde::Serialize)]
struct VerifyOutput {
    suite: String,
    all_pass: bool,
    checks: Vec<Check>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn classify_label(h: &Hypermatrix) -> Result<&'static str, Error> {
    Ok(match h.shape().dims() {
        [2, 2, 2] => classify222::classify222(h)?.label,
        [2, 2, 3] => classify223::classify223(h)?.label,
        [2, 3, 3] => classify233::classify233(h)?.label,
        other => return Err(Error::UnsupportedShape(other)),
    })
}

fn suite_tables(emit: Option<PathBuf>) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    // 2x2x2
    for r in orbitgeom::registry222() {
        let cov = classify222::covariants222(&r.representative)?;
        let got = cov.nullity();
        let expect = classify222::expected_nullity(r.label).unwrap();
        let label = classify222::classify222(&r.representative)?.label;
        checks.push(check(
            format!("2x2x2 {} row", r.label),
            got == expect && label == r.label,
            format!("vector {got}, classified {label}"),
        ));
    }
    // 2x2x3: both vectors
    for r in orbitgeom::registry223() {
        let cov = classify223::covariants223(&r.representative)?;
        let got_w = cov.w_vector();
        let expect_w = classify223::expected_w(r.label).unwrap();
        let got_v = cov.v_vector();
        let expect_v = classify223::expected_v(r.label).unwrap();
        let label = classify223::classify223(&r.representative)?.label;
        checks.push(check(
            format!("2x2x3 {} row", r.label),
            got_w == expect_w && got_v == expect_v && label == r.label,
            format!("w {got_w}, v {got_v}, classified {label}"),
        ));
    }
    // documented non-separation of the covariant-only vector
    let v = |l: &str| -> Result<NullityVector, Error> {
        let rec = orbitgeom::record(Shape::new(2, 2, 3)?, l)?;
        classify223::v_vector223(&rec.representative)
    };
    let collide1 = v("O_VI")? == v("O_V")? && v("O_V")? == v("O_II")?;
    let collide2 = v("O_IV")? == v("O_III")? && v("O_III")? == v("O_I")?;
    checks.push(check(
        "2x2x3 covariant-only vector fails to separate",
        collide1 && collide2,
        "v collides on {O_VI,O_V,O_II} and {O_IV,O_III,O_I}",
    ));
    // 2x3x3
    for r in orbitgeom::registry233() {
        let cov = classify233::covariants233(&r.representative)?;
        let got = cov.w_vector();
        let expect = classify233::expected_w(r.label).unwrap();
        let label = classify233::classify233(&r.representative)?.label;
        checks.push(check(
            format!("2x3x3 {} row", r.label),
            got == expect && label == r.label,
            format!("vector {got}, classified {label}"),
        ));
    }
    // conformance reports
    for (name, report) in [
        ("2x2x3", classify223::conformance_report()),
        ("2x3x3", classify233::conformance_report()),
    ] {
        checks.push(check(
            format!("{name} conformance report"),
            report.deviation_count() == 0 && report.all_match(),
            format!("{} concomitants, {} deviations", report.concomitants.len(), report.deviation_count()),
        ));
        if let Some(dir) = &emit {
            std::fs::create_dir_all(dir)
                .map_err(|e| Error::Parse(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join(format!("conformance_{}.json", name.replace('x', "")));
            std::fs::write(&path, serde_json::to_string_pretty(&report).unwrap())
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(checks)
}

fn suite_dims(n: Option<usize>) -> Result<Vec<Check>, Error> {
    let mut shapes = vec![Shape::new(2, 2, 2)?, Shape::new(2, 2, 3)?, Shape::new(2, 3, 3)?];
    let ns = n.map(|v| vec![v]).unwrap_or_else(|| vec![3, 4, 5]);
    for n in ns {
        shapes.push(Shape::new(2, 2, n + 1)?);
    }
    let mut checks = Vec::new();
    for shape in shapes {
        for r in orbitgeom::verify_registry(shape)? {
            checks.push(check(
                format!("dims {shape} {}", r.label),
                r.matches,
                format!("tangent gives {}, table says {}", r.projective_dimension, r.expected),
            ));
        }
    }
    Ok(checks)
}

fn suite_syzygy() -> Vec<Check> {
    let mut checks = Vec::new();
    let s = classify222::syzygy222();
    checks.push(check(
        "2x2x2 syzygy constants",
        s.lambda.iter().all(|l| *l != slocc_core::Rational::from_integer(0.into())),
        format!(
            "lambda = ({})",
            s.lambda.iter().map(format_rational).collect::<Vec<_>>().join(", ")
        ),
    ));
    checks.push(check(
        "2x2x2 generic residual",
        s.residual.is_zero(),
        format!("{} terms", s.residual.num_terms()),
    ));
    let ghz = Hypermatrix::from_kets(Shape::new(2, 2, 2).unwrap(), &[(0, 0, 0), (1, 1, 1)]);
    let at_ghz = classify222::residual_at(&s.lambda, &ghz).map(|r| r.is_zero()).unwrap_or(false);
    checks.push(check("2x2x2 residual at the GHZ representative", at_ghz, ""));

    let c = classify233::cubic_syzygy_search();
    checks.push(check(
        "2x3x3 cubic relation space",
        c.solution_space_dim == 1,
        format!("solution space dimension {}", c.solution_space_dim),
    ));
    checks.push(check(
        "2x3x3 cubic relation residual",
        c.lambda.is_some() && c.residual.is_zero(),
        c.lambda
            .map(|l| {
                format!(
                    "lambda = ({})",
                    l.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                )
            })
            .unwrap_or_else(|| "no relation found".into()),
    ));
    checks
}

fn thread_count() -> usize {
    std::env::var("SLOCC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

fn mix_seed(seed: u64, a: u64, b: u64, c: u64) -> u64 {
    let mut s = seed ^ 0x9E37_79B9_7F4A_7C15;
    for v in [a, b, c] {
        s = s.wrapping_add(v).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        s ^= s >> 31;
    }
    s
}

fn suite_fuzz(seed: u64, trials: u32) -> Result<Vec<Check>, Error> {
    let shapes = [Shape::new(2, 2, 2)?, Shape::new(2, 2, 3)?, Shape::new(2, 3, 3)?];
    let mut work: Vec<(usize, Shape, &'static str, Hypermatrix)> = Vec::new();
    for (fi, shape) in shapes.iter().enumerate() {
        for r in orbitgeom::registry(*shape)? {
            work.push((fi, *shape, r.label, r.representative.clone()));
        }
    }
    let threads = thread_count().min(work.len().max(1));
    let results: Vec<Check> = if threads <= 1 {
        work.iter()
            .map(|item| fuzz_one(item, seed, trials))
            .collect()
    } else {
        let mut slots: Vec<Option<Check>> = vec![None; work.len()];
        let chunk = work.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (t, part) in work.chunks(chunk).enumerate() {
                let handle = scope.spawn(move || {
                    part.iter()
                        .map(|item| fuzz_one(item, seed, trials))
                        .collect::<Vec<_>>()
                });
                handles.push((t * chunk, handle));
            }
            for (offset, handle) in handles {
                for (i, c) in handle.join().expect("fuzz worker panicked").into_iter().enumerate() {
                    slots[offset + i] = Some(c);
                }
            }
        });
        slots.into_iter().map(|c| c.unwrap()).collect()
    };
    Ok(results)
}

fn fuzz_one(
    (fi, shape, label, rep): &(usize, Shape, &'static str, Hypermatrix),
    seed: u64,
    trials: u32,
) -> Check {
    let mut failures = 0u32;
    let mut first_failure = String::new();
    for t in 0..trials {
        let g = random_slocc(*shape, mix_seed(seed, *fi as u64, hash_label(label), t as u64), 2);
        let img = match act(&g, rep) {
            Ok(img) => img,
            Err(e) => {
                failures += 1;
                if first_failure.is_empty() {
                    first_failure = format!("trial {t}: {e}");
                }
                continue;
            }
        };
        match classify_label(&img) {
            Ok(got) if got == *label => {}
            Ok(got) => {
                failures += 1;
                if first_failure.is_empty() {
                    first_failure = format!("trial {t} classified {got}");
                }
            }
            Err(e) => {
                failures += 1;
                if first_failure.is_empty() {
                    first_failure = format!("trial {t}: {e}");
                }
            }
        }
    }
    check(
        format!("slocc-fuzz {shape} {label} x{trials}"),
        failures == 0,
        if failures == 0 {
            format!("{trials} images kept the label")
        } else {
            format!("{failures} failures; {first_failure}")
        },
    )
}

fn hash_label(label: &str) -> u64 {
    label.bytes().fold(0u64, |acc, b| acc.wrapping_mul(131).wrapping_add(b as u64))
}

fn default_hilbert_bound(shape: Shape) -> u32 {
    match shape.dims() {
        [2, 2, 2] => 4,
        [2, 2, 3] => 3,
        _ => 2,
    }
}

fn suite_hilbert() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for (shape, bound) in [
        (Shape::new(2, 2, 2)?, 4u32),
        (Shape::new(2, 2, 3)?, 3),
        (Shape::new(2, 3, 3)?, 2),
    ] {
        let report = hilbert::verify_hilbert(shape, bound)?;
        let mismatches: Vec<String> = report
            .rows
            .iter()
            .filter(|r| !r.matches)
            .map(|r| {
                format!(
                    "d0={} d=({},{},{}): series {} vs kernel {}",
                    r.d0, r.d[0], r.d[1], r.d[2], r.series, r.kernel
                )
            })
            .collect();
        checks.push(check(
            format!("hilbert {shape} up to d0={bound}"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{} admissible degrees agree", report.rows.len())
            } else {
                mismatches.join("; ")
            },
        ));
    }
    Ok(checks)
}
