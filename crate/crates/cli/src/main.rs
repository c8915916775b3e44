use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grassmann::exterior::{plucker_from_matrix, wedge, Matrix, Multivector, Vector};
use grassmann::harness::{verify, Theorem};
use grassmann::metric::{hodge, standard_form, GramForm};
use grassmann::parse::{parse_flat, parse_gram, parse_matrix, parse_span, parse_terms, parse_vector};
use grassmann::projective::{central_project, join, meet, ProjFlat, ProjPoint};
use grassmann::{worked, Error, FieldSpec};

/// Exact exterior algebra over Q and GF(p).
#[derive(Debug, Parser)]
#[command(name = "grassmann", version)]
struct Cli {
    /// Scalar field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Ambient dimension; inferred from the operands when omitted.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Bilinear form: `diag:+1,-1,...` or `matrix:[[..],..]`. Defaults to the
    /// Euclidean form.
    #[arg(long, global = true)]
    gram: Option<String>,
    /// Trials for `verify`.
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Progressive product of multivectors or vectors `[..]`.
    Wedge {
        #[arg(required = true, allow_hyphen_values = true)]
        operands: Vec<String>,
    },
    /// Intersection of two flats (blade or `span{..}`).
    Meet {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Smallest flat containing all operands.
    Join {
        #[arg(required = true, allow_hyphen_values = true)]
        flats: Vec<String>,
    },
    /// Vector factors of a blade, printed as `span{..}`.
    Factor {
        #[arg(allow_hyphen_values = true)]
        blade: String,
    },
    /// Hodge star with respect to `--gram`.
    Hodge {
        #[arg(allow_hyphen_values = true)]
        operand: String,
    },
    /// Plücker coordinates of a list of vectors, a `span{..}`, or the
    /// columns of a matrix.
    Plucker {
        #[arg(required = true, allow_hyphen_values = true)]
        operands: Vec<String>,
    },
    /// Determinant of a square matrix `[[..],..]`.
    Det {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// A solution of `M x = b`, or `none`.
    Solve {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Central projection of a point from a center flat onto a target flat.
    Project {
        #[arg(allow_hyphen_values = true)]
        center: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Seeded randomized check of a theorem family.
    Verify { theorem: String },
    /// Replays the worked computations against their expected values.
    Examples,
}

/// Outcome of a command: printed text and exit status.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), code: 0 }
    }
}

fn resolve_dim(given: Option<usize>, inferred: usize) -> Result<usize, Error> {
    match given {
        Some(d) => Ok(d),
        None if inferred > 0 => Ok(inferred),
        None => Err(Error::Parse("cannot infer the dimension; pass --dim".into())),
    }
}

fn is_vector(text: &str) -> bool {
    text.trim_start().starts_with('[')
}

fn multivectors(texts: &[String], field: FieldSpec, dim: Option<usize>) -> Result<Vec<Multivector>, Error> {
    let mut inferred = 0;
    let mut parsed = Vec::new();
    for t in texts {
        if is_vector(t) {
            let v = parse_vector(t, field)?;
            inferred = inferred.max(v.dim());
            parsed.push(Err(v));
        } else {
            let terms = parse_terms(t, field)?;
            inferred = inferred.max(terms.max_index());
            parsed.push(Ok(terms));
        }
    }
    let d = resolve_dim(dim, inferred)?;
    parsed
        .into_iter()
        .map(|p| match p {
            Ok(terms) => terms.build(field, d),
            Err(v) if v.dim() != d => Err(Error::DimMismatch { expected: d, found: v.dim() }),
            Err(v) => Multivector::from_vector(&v),
        })
        .collect()
}

fn flats(texts: &[String], field: FieldSpec, dim: Option<usize>) -> Result<Vec<ProjFlat>, Error> {
    let mut inferred = 0;
    for t in texts {
        if t.trim_start().starts_with("span{") {
            inferred = inferred.max(parse_span(t, field)?[0].dim());
        } else if !is_vector(t) {
            inferred = inferred.max(parse_terms(t, field)?.max_index());
        } else {
            inferred = inferred.max(parse_vector(t, field)?.dim());
        }
    }
    let d = resolve_dim(dim, inferred)?;
    texts
        .iter()
        .map(|t| {
            if is_vector(t) {
                ProjFlat::from_span(&[parse_vector(t, field)?])
            } else {
                parse_flat(t, field, Some(d))
            }
        })
        .collect()
}

fn span_text(vs: &[Vector]) -> String {
    let inner: Vec<String> = vs.iter().map(Vector::to_string).collect();
    format!("span{{{}}}", inner.join(","))
}

fn gram_for(cli: &Cli, field: FieldSpec, d: usize) -> Result<GramForm, Error> {
    let g = match &cli.gram {
        Some(text) => parse_gram(text, field)?,
        None => standard_form(field, &vec![1; d])?,
    };
    if g.dim() != d {
        return Err(Error::DimMismatch { expected: d, found: g.dim() });
    }
    Ok(g)
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    let field: FieldSpec = cli.field.parse()?;
    match &cli.command {
        Command::Wedge { operands } => {
            let ms = multivectors(operands, field, cli.dim)?;
            let mut acc = ms[0].clone();
            for m in &ms[1..] {
                acc = wedge(&acc, m)?;
            }
            Ok(Output::ok(acc.to_string()))
        }
        Command::Meet { a, b } => {
            let fs = flats(&[a.clone(), b.clone()], field, cli.dim)?;
            Ok(Output::ok(meet(&fs[0], &fs[1])?.blade().to_string()))
        }
        Command::Join { flats: texts } => {
            let fs = flats(texts, field, cli.dim)?;
            Ok(Output::ok(join(&fs)?.blade().to_string()))
        }
        Command::Factor { blade } => {
            let m = multivectors(std::slice::from_ref(blade), field, cli.dim)?.remove(0);
            let factors = grassmann::exterior::factor_blade_exact(&m)?;
            Ok(Output::ok(span_text(&factors)))
        }
        Command::Hodge { operand } => {
            let form_dim = match &cli.gram {
                Some(text) => Some(parse_gram(text, field)?.dim()),
                None => None,
            };
            let m = multivectors(std::slice::from_ref(operand), field, cli.dim.or(form_dim))?.remove(0);
            let g = gram_for(cli, field, m.dim())?;
            Ok(Output::ok(hodge(&g, &m)?.to_string()))
        }
        Command::Plucker { operands } => {
            let vectors = if operands.len() == 1 && operands[0].trim_start().starts_with("span{") {
                parse_span(&operands[0], field)?
            } else if operands.len() == 1 && operands[0].trim_start().starts_with("[[") {
                parse_matrix(&operands[0], field)?.columns()
            } else {
                operands.iter().map(|t| parse_vector(t, field)).collect::<Result<Vec<_>, _>>()?
            };
            if let Some(d) = cli.dim {
                if vectors[0].dim() != d {
                    return Err(Error::DimMismatch { expected: d, found: vectors[0].dim() });
                }
            }
            Ok(Output::ok(plucker_from_matrix(&Matrix::from_columns(&vectors)?)?.to_string()))
        }
        Command::Det { matrix } => Ok(Output::ok(parse_matrix(matrix, field)?.det()?.to_string())),
        Command::Solve { matrix, rhs } => {
            let m = parse_matrix(matrix, field)?;
            let b = parse_vector(rhs, field)?;
            Ok(Output::ok(match m.solve(&b)? {
                Some(x) => x.to_string(),
                None => "none".to_string(),
            }))
        }
        Command::Project { center, target, point } => {
            let fs = flats(&[center.clone(), target.clone(), point.clone()], field, cli.dim)?;
            let p = ProjPoint::from_flat(&fs[2])?;
            Ok(Output::ok(central_project(&fs[0], &fs[1], &p)?.vector().to_string()))
        }
        Command::Verify { theorem } => {
            let t: Theorem = theorem.parse()?;
            let report = verify(t, field, cli.seed, cli.trials);
            Ok(Output { text: report.to_string(), code: if report.ok() { 0 } else { 1 } })
        }
        Command::Examples => {
            let all = worked::all();
            let mut text = String::new();
            let mut bad = 0;
            for w in &all {
                if w.matches() {
                    writeln!(text, "ok       {}: {}", w.name, w.expected).expect("string write");
                } else {
                    bad += 1;
                    let got = match &w.computed {
                        Ok(s) => s.clone(),
                        Err(e) => format!("error: {e}"),
                    };
                    writeln!(text, "MISMATCH {}: expected {}, got {}", w.name, w.expected, got).expect("string write");
                }
            }
            write!(text, "examples={} mismatches={bad}", all.len()).expect("string write");
            Ok(Output { text, code: if bad == 0 { 0 } else { 1 } })
        }
    }
}

const VALUE_FLAGS: [&str; 5] = ["--field", "--dim", "--gram", "--trials", "--seed"];

/// Moves the global flags in front of the subcommand. Operands may start
/// with `-` (as in `-1*e{2}`), so variadic operand lists would otherwise
/// absorb any flag written after them.
fn hoist_flags(args: Vec<String>) -> Vec<String> {
    let mut it = args.into_iter();
    let mut front: Vec<String> = it.next().into_iter().collect();
    let mut rest = Vec::new();
    while let Some(arg) = it.next() {
        if arg == "--" {
            rest.push(arg);
            rest.extend(it.by_ref());
        } else if VALUE_FLAGS.contains(&arg.as_str()) {
            front.push(arg);
            front.extend(it.next());
        } else if VALUE_FLAGS.iter().any(|f| arg.starts_with(&format!("{f}="))) {
            front.push(arg);
        } else {
            rest.push(arg);
        }
    }
    front.extend(rest);
    front
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(hoist_flags(std::env::args().collect()));
    match execute(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
