use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use appbas::pmbasis::pad_orders;
use appbas::random::{random_instance, random_polymat, seeded_rng};
use appbas::{
    check_form, iterative_appbasis, known_deg_appbasis, matmul_embed, mbasis1, pivot_profile,
    pm_basis, popov_appbasis, popov_pm_basis, shift_around_max, shift_around_min, verify_basis, BasisResult,
    Field, Form, PivotProfile, PolyMat, DEFAULT_MODULUS,
};
use appbas_cli::{parse, parse_orders, parse_shift, parse_sizes, serialize, Document};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "appbas", version, about = "Shifted Popov approximant bases over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a pseudo-random instance.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// One order for every column, or one per column: `4,1,1`.
        #[arg(long)]
        orders: String,
        #[arg(long, env = "APPBAS_MODULUS", default_value_t = DEFAULT_MODULUS)]
        modulus: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute an approximant basis of an instance.
    Solve {
        input: PathBuf,
        /// `uniform`, `hermite` or comma separated integers.
        #[arg(long, default_value = "uniform", allow_hyphen_values = true)]
        shift: String,
        #[arg(long, value_enum, default_value_t = Algo::Popov)]
        algo: Algo,
        /// Normalize a weak Popov output to the Popov basis.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a basis against an instance.
    Verify {
        input: PathBuf,
        basis: PathBuf,
        #[arg(long, default_value = "uniform", allow_hyphen_values = true)]
        shift: String,
    },
    /// Time the algorithms over a grid of orders, as CSV.
    Bench {
        /// `lo:hi`, doubling from `lo`.
        #[arg(long, default_value = "8:64")]
        sizes: String,
        #[arg(long, value_enum, default_value_t = ShiftClass::Uniform)]
        shift: ShiftClass,
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, env = "APPBAS_MODULUS", default_value_t = DEFAULT_MODULUS)]
        modulus: u64,
    },
    /// Multiply two random matrices through an approximant basis.
    MatmulDemo {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        deg: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "APPBAS_MODULUS", default_value_t = DEFAULT_MODULUS)]
        modulus: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Mbasis1,
    Pmbasis,
    PopovPm,
    Popov,
    ShiftMin,
    ShiftMax,
    Oracle,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Mbasis1 => "mbasis1",
            Algo::Pmbasis => "pmbasis",
            Algo::PopovPm => "popov-pm",
            Algo::Popov => "popov",
            Algo::ShiftMin => "shift-min",
            Algo::ShiftMax => "shift-max",
            Algo::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShiftClass {
    Uniform,
    Hermite,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// `Ok(false)` when a requested check fails.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { m, n, orders, modulus, seed, out } => {
            let field = Field::new(modulus)?;
            let d = parse_orders(&orders, n)?;
            let mut rng = seeded_rng(seed);
            let f = random_instance(&mut rng, &field, m, &d);
            emit(out.as_deref(), &serialize(&Document::instance(f, d)))?;
            Ok(true)
        }
        Command::Solve { input, shift, algo, canonical, out } => {
            let (f, d) = read_instance(&input)?;
            let sigma: usize = d.iter().sum();
            let s = parse_shift(&shift, f.rows(), sigma)?;
            let start = Instant::now();
            let mut p = solve(algo, &d, &f, &s)?;
            if canonical && p.form != Form::Popov {
                p = known_deg_appbasis(&d, &f, &s, p.delta())?;
            }
            let ms = start.elapsed().as_secs_f64() * 1e3;
            if let Some(path) = out {
                emit(Some(&path), &serialize(&Document::new(p.matrix.clone())))?;
            }
            let delta: Vec<String> = p.delta().iter().map(ToString::to_string).collect();
            println!(
                "algo={} m={} sigma={sigma} delta=({}) ms={ms:.3}",
                algo.name(),
                f.rows(),
                delta.join(",")
            );
            Ok(true)
        }
        Command::Verify { input, basis, shift } => {
            let (f, d) = read_instance(&input)?;
            let p = read(&basis)?.matrix;
            if p.field() != f.field() {
                bail!("basis and instance use different moduli");
            }
            let s = parse_shift(&shift, f.rows(), d.iter().sum())?;
            let report = verify_basis(&tag(p, &s)?, &d, &f, &s)?;
            let word = |b: bool| if b { "ok" } else { "fail" };
            println!(
                "approximant={} form={} degrees={} generation={}",
                word(report.approximant),
                word(report.form),
                word(report.degrees),
                word(report.generation)
            );
            Ok(report.all())
        }
        Command::Bench { sizes, shift, m, n, modulus } => {
            bench(&parse_sizes(&sizes)?, shift, m, n, Field::new(modulus)?)?;
            Ok(true)
        }
        Command::MatmulDemo { n, deg, seed, modulus } => {
            let field = Field::new(modulus)?;
            let mut rng = seeded_rng(seed);
            let a = random_polymat(&mut rng, &field, n, n, deg + 1);
            let b = random_polymat(&mut rng, &field, n, n, deg + 1);
            let same = matmul_embed(&a, &b)? == a.mul(&b)?;
            println!("match={same}");
            Ok(same)
        }
    }
}

fn solve(algo: Algo, d: &[usize], f: &PolyMat, s: &[i64]) -> Result<BasisResult> {
    Ok(match algo {
        Algo::Mbasis1 => {
            if d.iter().any(|&x| x != 1) {
                bail!("mbasis1 needs every order equal to 1, got {d:?}");
            }
            mbasis1(f.field(), &f.coeff_mat(0), s)?
        }
        Algo::Pmbasis => {
            let (top, g) = pad_orders(d, f);
            pm_basis(top, &g, s)?
        }
        Algo::PopovPm => popov_pm_basis(d, f, s)?,
        Algo::Popov => popov_appbasis(d, f, s)?,
        Algo::ShiftMin => shift_around_min(d, f, s)?,
        Algo::ShiftMax => shift_around_max(d, f, s)?,
        Algo::Oracle => iterative_appbasis(d, f, s)?,
    })
}

/// Tags a basis read from a file: Popov if it is, ordered weak Popov
/// otherwise (the verification then reports whether it is).
fn tag(p: PolyMat, s: &[i64]) -> Result<BasisResult> {
    if !p.is_square() || p.rows() != s.len() {
        bail!("basis is {}x{}, expected a square matrix of size {}", p.rows(), p.cols(), s.len());
    }
    let form = if check_form(&p, s, Form::Popov)? { Form::Popov } else { Form::Owp };
    let pivots = pivot_profile(&p, s).unwrap_or(PivotProfile { index: Vec::new(), degree: Vec::new() });
    Ok(BasisResult { matrix: p, pivots, form })
}

fn bench(sizes: &[usize], shift: ShiftClass, m: usize, n: usize, field: Field) -> Result<()> {
    let algos = [
        Algo::Pmbasis,
        Algo::PopovPm,
        Algo::Popov,
        Algo::ShiftMin,
        Algo::ShiftMax,
        Algo::Oracle,
    ];
    let class = match shift {
        ShiftClass::Uniform => "uniform",
        ShiftClass::Hermite => "hermite",
    };
    println!("algo,m,n,sigma,shift_class,ms");
    for (k, &order) in sizes.iter().enumerate() {
        let d = vec![order; n];
        let sigma = order * n;
        let mut rng = seeded_rng(k as u64);
        let f = random_instance(&mut rng, &field, m, &d);
        let s = parse_shift(class, m, sigma)?;
        for algo in algos {
            let start = Instant::now();
            solve(algo, &d, &f, &s)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            println!("{},{m},{n},{sigma},{class},{ms:.3}", algo.name());
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_instance(path: &Path) -> Result<(PolyMat, Vec<usize>)> {
    let doc = read(path)?;
    let Some(d) = doc.orders else {
        bail!("{} has no `orders` line, it is not an instance", path.display());
    };
    for (j, &dj) in d.iter().enumerate() {
        if let Some(c) = doc.matrix.cdeg()[j] {
            if c >= dj {
                bail!("{}: column {j} has degree {c}, not below its order {dj}", path.display());
            }
        }
    }
    Ok((doc.matrix, d))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
