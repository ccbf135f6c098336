use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use exnil::differential::{cohomology_dims, deformed_total_dim, Differential, RootMultiset, SigmaSign};
use exnil::divdiff::{dual_schubert, schubert};
use exnil::extsym::{
    decompose, exterior_basis, family_polys, is_extended_symmetric, satisfies_coefficient_system, Family,
};
use exnil::json::{nh_from_json, nh_to_json, poly_to_json, superpoly_from_json, superpoly_to_json, ElementJson};
use exnil::nilhecke::{idempotents, NhElement};
use exnil::parse::{parse_nh, parse_superpoly};
use exnil::solomon::{
    e_tuple, exterior_derivative, h_tuple, hq_inverse_check, lemma_triple_check, symmetric_generators, DiffForm,
    FDegrees, JMap,
};
use exnil::superpoly::mask_indices;
use exnil::{AlgebraError, NhElem, Partition, Perm, Poly, Rat, SuperPoly};

mod suites;

#[derive(Parser)]
#[command(name = "exnil", version, about = "Exact computations in the extended nilHecke algebra")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert polynomial S_w
    Schubert(PermArgs),
    /// Dual Schubert polynomial of w
    DualSchubert(PermArgs),
    /// Schur polynomial s_λ(x1..xn)
    Schur {
        #[arg(long)]
        n: usize,
        /// Parts, e.g. "2,1"
        #[arg(long)]
        partition: String,
    },
    /// Exterior generators of a basis family
    Basis {
        #[arg(long)]
        n: usize,
        /// schubert, dual or interp:r
        #[arg(long, default_value = "schubert")]
        family: String,
    },
    /// Membership in the extended symmetric polynomials, by both tests
    Member(InputArgs),
    /// Coordinates of an invariant over the wedge monomials of a family
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "schubert")]
        family: String,
    },
    /// Product of nilHecke elements, left to right
    NhMul {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// The primitive idempotents e_ℓ
    Idempotents {
        #[arg(long)]
        n: usize,
        /// Largest n accepted
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Apply d_N, or the deformed differential when κ is given
    Diff {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "N")]
        big_n: usize,
        #[command(flatten)]
        deform: DeformArgs,
        /// Sign of the deformed differential
        #[arg(long, value_enum, default_value_t = SignArg::AsPrinted)]
        sign: SignArg,
    },
    /// Cohomology of the restricted complex
    Cohomology {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[command(flatten)]
        deform: DeformArgs,
        /// Internal degree cap; defaults to n(N-n)+N
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Checks for the differential-form map of an admissible tuple
    Solomon {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TupleArg::H)]
        family: TupleArg,
        #[arg(long, value_enum, default_value_t = SolomonCheck::All)]
        check: SolomonCheck,
    },
    /// Run property suites and print a pass/fail table
    Verify {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long = "max-N", default_value_t = 4)]
        max_big_n: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct PermArgs {
    #[arg(long)]
    n: usize,
    /// Word such as "s1 s2", or "id"
    #[arg(long, conflicts_with_all = ["images", "all"])]
    perm: Option<String>,
    /// One-line notation such as "2,3,1"
    #[arg(long, conflicts_with = "all")]
    images: Option<String>,
    /// Every permutation of n
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    n: usize,
    /// File holding one expression, as text or in the JSON form
    #[arg(long, conflicts_with = "expr")]
    input: Option<PathBuf>,
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Args)]
struct DeformArgs {
    /// κ_1..κ_N, comma separated rationals
    #[arg(long, conflicts_with = "roots")]
    kappa: Option<String>,
    /// Distinct roots with multiplicities, e.g. "0:2,1:2"
    #[arg(long)]
    roots: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    AsPrinted,
    MatchUndeformed,
}

#[derive(Clone, Copy, ValueEnum)]
enum TupleArg {
    H,
    E,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolomonCheck {
    All,
    Inverse,
    Equivariance,
    Coordinates,
    Triple,
}

/// Command outcome: printed output and whether every check passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn parse_rat(s: &str) -> anyhow::Result<Rat> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v = exnil::parse::parse_poly::<Rat>(body, 1)?
        .as_constant()
        .ok_or_else(|| anyhow!("expected a rational constant, got {:?}", s))?;
    Ok(if neg { -v } else { v })
}

fn parse_perm(n: usize, args: &PermArgs) -> anyhow::Result<Perm> {
    if let Some(images) = &args.images {
        let v = images
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().with_context(|| format!("bad image {:?}", t)))
            .collect::<anyhow::Result<Vec<_>>>()?;
        if v.len() != n {
            bail!("expected {} images, got {}", n, v.len());
        }
        return Ok(Perm::from_images(v)?);
    }
    let word_str = args.perm.as_deref().unwrap_or("id").trim();
    if word_str == "id" || word_str.is_empty() {
        return Ok(Perm::identity(n));
    }
    let word = word_str
        .split_whitespace()
        .map(|t| {
            t.strip_prefix('s')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| anyhow!("bad letter {:?}; expected s1, s2, ...", t))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Perm::from_word(n, &word)?)
}

fn read_input(a: &InputArgs) -> anyhow::Result<String> {
    match (&a.input, &a.expr) {
        (Some(p), _) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        (None, Some(e)) => Ok(e.clone()),
        (None, None) => bail!("one of --input or --expr is required"),
    }
}

fn parse_json(a: &InputArgs, src: &str) -> anyhow::Result<Option<ElementJson>> {
    if !src.trim_start().starts_with('{') {
        return Ok(None);
    }
    let j: ElementJson = serde_json::from_str(src).context("reading JSON input")?;
    if j.nvars != a.n {
        return Err(AlgebraError::NvarsMismatch { left: a.n, right: j.nvars }.into());
    }
    Ok(Some(j))
}

fn read_superpoly(a: &InputArgs) -> anyhow::Result<SuperPoly> {
    let src = read_input(a)?;
    Ok(match parse_json(a, &src)? {
        Some(j) => superpoly_from_json(&j)?,
        None => parse_superpoly(&src, a.n)?,
    })
}

fn read_nh(a: &InputArgs) -> anyhow::Result<NhElem> {
    let src = read_input(a)?;
    Ok(match parse_json(a, &src)? {
        Some(j) => nh_from_json(&j)?,
        None => parse_nh(&src, a.n)?,
    })
}

fn sigma_of(d: &DeformArgs, big_n: usize) -> anyhow::Result<Option<RootMultiset<Rat>>> {
    let s = if let Some(k) = &d.kappa {
        let ks = k.split(',').map(parse_rat).collect::<anyhow::Result<Vec<_>>>()?;
        RootMultiset::from_kappas(ks)?
    } else if let Some(r) = &d.roots {
        let roots = r
            .split(',')
            .map(|t| {
                let (a, m) = t.split_once(':').ok_or_else(|| anyhow!("expected root:multiplicity, got {:?}", t))?;
                Ok((parse_rat(a)?, m.trim().parse::<usize>().with_context(|| format!("bad multiplicity {:?}", m))?))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        RootMultiset::from_roots(&roots)?
    } else {
        return Ok(None);
    };
    if s.big_n() != big_n {
        bail!("deformation has N = {} but --N {} was given", s.big_n(), big_n);
    }
    Ok(Some(s))
}

fn schubert_cmd(args: &PermArgs, dual: bool) -> anyhow::Result<Output> {
    let f = |w: &Perm| if dual { dual_schubert::<Rat>(w) } else { schubert::<Rat>(w) };
    if args.all {
        let mut perms = Perm::all(args.n);
        perms.sort_by_key(|w| (w.length(), w.reduced_word()));
        let mut text = String::new();
        let mut rows = Vec::new();
        for w in &perms {
            let p = f(w);
            writeln!(text, "{}: {}", w.word_string(), p)?;
            rows.push(json!({"perm": w.word_string(), "images": w.images(), "poly": poly_to_json(&p)}));
        }
        return Ok(Output::new(text, Value::Array(rows)));
    }
    let w = parse_perm(args.n, args)?;
    let p = f(&w);
    Ok(Output::new(format!("{}\n", p), serde_json::to_value(poly_to_json(&p))?))
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<AlgebraError>() {
        Some(AlgebraError::CapExceeded { .. }) | Some(AlgebraError::CapTooSmall { .. }) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Schubert(a) => schubert_cmd(a, false),
        Command::DualSchubert(a) => schubert_cmd(a, true),
        Command::Schur { n, partition } => {
            let parts = partition
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().with_context(|| format!("bad part {:?}", t)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let p = Poly::schur(*n, &Partition::new(parts), 1, *n);
            Ok(Output::new(format!("{}\n", p), serde_json::to_value(poly_to_json(&p))?))
        }
        Command::Basis { n, family } => {
            let fam: Family = family.parse()?;
            let gens = exterior_basis::<Rat>(*n, fam);
            let polys = family_polys::<Rat>(*n, fam);
            let mut text = String::new();
            let mut rows = Vec::new();
            for (j, (g, p)) in gens.iter().zip(&polys).enumerate() {
                writeln!(text, "w^s_{} = {}", j + 1, g)?;
                rows.push(json!({"index": j + 1, "p": poly_to_json(p), "generator": superpoly_to_json(g)}));
            }
            Ok(Output::new(text, json!({"family": fam.to_string(), "generators": rows})))
        }
        Command::Member(a) => {
            let v = read_superpoly(a)?;
            let kernel = is_extended_symmetric(&v);
            let system = satisfies_coefficient_system(&v);
            let text = format!("{}\nkernel test: {}\ncoefficient test: {}\n", kernel, kernel, system);
            let mut out = Output::new(
                text,
                json!({"member": kernel, "kernel_test": kernel, "coefficient_test": system}),
            );
            out.ok = kernel == system;
            Ok(out)
        }
        Command::Decompose { input, family } => {
            let fam: Family = family.parse()?;
            let v = read_superpoly(input)?;
            let coords = decompose(&v, &exterior_basis(input.n, fam))?;
            let mut keys: Vec<u32> = coords.keys().copied().collect();
            keys.sort_by_key(|&m| exnil::superpoly::mask_order_key(m));
            let mut text = String::new();
            let mut rows = Vec::new();
            for m in keys {
                let idx = mask_indices(m);
                let label = if idx.is_empty() {
                    "1".to_string()
                } else {
                    idx.iter().map(|i| format!("w^s_{}", i)).collect::<Vec<_>>().join("*")
                };
                writeln!(text, "{}: {}", label, coords[&m])?;
                rows.push(json!({"wedge": idx, "coeff": poly_to_json(&coords[&m])}));
            }
            if text.is_empty() {
                text.push_str("0\n");
            }
            Ok(Output::new(text, json!({"family": fam.to_string(), "coords": rows})))
        }
        Command::NhMul { n, factors } => {
            let mut acc = NhElem::one(*n);
            for f in factors {
                acc = &acc * &parse_nh::<Rat>(f, *n)?;
            }
            Ok(Output::new(format!("{}\n", acc), serde_json::to_value(nh_to_json(&acc))?))
        }
        Command::Idempotents { n, max_n } => {
            let ids = idempotents::<Rat>(*n, *max_n)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (ell, e) in &ids {
                let l: Vec<String> = ell.iter().map(|v| v.to_string()).collect();
                writeln!(text, "[{}]: {}", l.join(" "), e)?;
                rows.push(json!({"ell": ell, "element": nh_to_json(e)}));
            }
            Ok(Output::new(text, Value::Array(rows)))
        }
        Command::Diff { input, big_n, deform, sign } => {
            let e = read_nh(input)?;
            let d = match sigma_of(deform, *big_n)? {
                Some(s) => {
                    let conv = match sign {
                        SignArg::AsPrinted => SigmaSign::AsPrinted,
                        SignArg::MatchUndeformed => SigmaSign::MatchUndeformed,
                    };
                    Differential::deformed(input.n, &s, conv)
                }
                None => Differential::undeformed(input.n, *big_n)?,
            };
            let r: NhElement<Rat> = d.apply_nh(&e)?;
            Ok(Output::new(format!("{}\n", r), serde_json::to_value(nh_to_json(&r))?))
        }
        Command::Cohomology { n, big_n, deform, cap } => cohomology_cmd(*n, *big_n, deform, *cap),
        Command::Solomon { n, family, check } => solomon_cmd(*n, *family, *check),
        Command::Verify { suite, max_n, max_big_n, seed } => suites::run(suite, *max_n, *max_big_n, *seed),
    }
}

fn cohomology_cmd(n: usize, big_n: usize, deform: &DeformArgs, cap: Option<usize>) -> anyhow::Result<Output> {
    let sigma = sigma_of(deform, big_n)?;
    let rep = cohomology_dims(n, big_n, sigma.as_ref(), cap)?;
    let mut text = String::new();
    writeln!(text, "n = {}, N = {}, cap = {}, deformed = {}", rep.n, rep.big_n, rep.cap, rep.deformed)?;
    writeln!(text, "poincare: {}", rep.poincare)?;
    writeln!(text, "reference: {}", rep.reference)?;
    writeln!(text, "matches reference: {}", rep.matches_reference())?;
    writeln!(text, "positive exterior degree vanishes: {}", rep.positive_exterior_vanishes)?;
    writeln!(text, "euler characteristic: {}", rep.euler_ok)?;
    writeln!(text, "(polynomial degree, exterior degree): cohomology / chains")?;
    for (&(deg, ext), &c) in &rep.chains {
        let h = rep.dims.get(&(deg, ext)).copied().unwrap_or(0);
        writeln!(text, "  ({}, {}): {} / {}", deg, ext, h, c)?;
    }
    let mut ok = rep.matches_reference() && rep.positive_exterior_vanishes && rep.euler_ok;
    let mut js = serde_json::to_value(&rep)?;
    js["poincare_string"] = json!(rep.poincare.to_string());
    js["matches_reference"] = json!(rep.matches_reference());
    if let Some(s) = &sigma {
        if s.roots().is_some() {
            let d = deformed_total_dim(n, s)?;
            writeln!(text, "deformed quotient: {} (expected {})", d.total, d.expected_total)?;
            for (comp, got, want) in &d.blocks {
                let c: Vec<String> = comp.iter().map(|v| v.to_string()).collect();
                writeln!(text, "  block ({}): {} (expected {})", c.join(","), got, want)?;
            }
            ok &= d.consistent();
            js["deformed_quotient"] = serde_json::to_value(&d)?;
        }
    }
    let mut out = Output::new(text, js);
    out.ok = ok;
    Ok(out)
}

fn solomon_cmd(n: usize, family: TupleArg, check: SolomonCheck) -> anyhow::Result<Output> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let p = match family {
        TupleArg::H => h_tuple::<Rat>(n),
        TupleArg::E => e_tuple::<Rat>(n),
    };
    let f = symmetric_generators::<Rat>(n, FDegrees::Shifted);
    let j = JMap::new(&p, &f)?;
    let mut results: Vec<(&str, bool)> = Vec::new();
    let want = |c: SolomonCheck| check == SolomonCheck::All || check == c;
    if want(SolomonCheck::Inverse) {
        results.push(("inverse", hq_inverse_check(n)));
    }
    if want(SolomonCheck::Equivariance) {
        results.push(("equivariance", j.equivariance_check()));
    }
    if want(SolomonCheck::Coordinates) {
        let gens = exnil::extsym::exterior_gen(&p)?;
        let mut ok = true;
        for m in 0..1u32 << n {
            let v = exnil::extsym::wedge_monomial(&gens, m).mul_poly(&f[0]);
            ok &= j.coordinates_check(&v, &p)?;
        }
        results.push(("coordinates", ok));
    }
    if want(SolomonCheck::Triple) {
        let theta: Vec<DiffForm<Rat>> = (1..=n).map(|i| j.image(i).clone()).collect();
        let dfs: Vec<DiffForm<Rat>> = f.iter().map(exterior_derivative).collect();
        let r = lemma_triple_check(j.matrix(), &theta, &dfs)?;
        results.push(("triple", r.a && r.b && r.c && r.implications_hold));
    }
    let mut text = String::new();
    for (name, ok) in &results {
        writeln!(text, "{:<14}{}", name, if *ok { "pass" } else { "FAIL" })?;
    }
    let js: Vec<Value> = results.iter().map(|(name, ok)| json!({"check": name, "pass": ok})).collect();
    let mut out = Output::new(text, Value::Array(js));
    out.ok = results.iter().all(|r| r.1);
    Ok(out)
}

fn init_threads() {
    if let Some(k) = std::env::var("EXNIL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    init_threads();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("-3/4").unwrap(), Rat::new((-3).into(), 4.into()));
        assert_eq!(parse_rat(" 2 ").unwrap(), Rat::from_integer(2.into()));
        assert!(parse_rat("x1").is_err());
    }

    #[test]
    fn perms() {
        let a = PermArgs { n: 3, perm: Some("s1 s2".into()), images: None, all: false };
        assert_eq!(parse_perm(3, &a).unwrap().images(), &[2, 3, 1]);
        let a = PermArgs { n: 3, perm: None, images: Some("3,2,1".into()), all: false };
        assert_eq!(parse_perm(3, &a).unwrap(), Perm::longest(3));
        let a = PermArgs { n: 3, perm: Some("t1".into()), images: None, all: false };
        assert!(parse_perm(3, &a).is_err());
    }
}
