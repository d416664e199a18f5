use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use symdet::fedder::{self, CertificateRecord, ColonLemmaOutcome, FptEstimate, NuRecord, SecondSymbolicReport, Status};
use symdet::gbengine::{colon_by, is_member, saturate, Budget, IdealFile};
use symdet::invariants::{self, Exact, InvariantReport, RingDescriptor, RingKind};
use symdet::matgen::Shape;
use symdet::polycore::{parse_poly, print_poly, Coefficients, Field, MonomialOrder, PolyRing, PrimeField, Rationals};
use symdet::Error;

const MAX_TABLE_N: u64 = 50;

#[derive(Parser)]
#[command(name = "symdet", version, about = "F-pure thresholds and F-purity certificates for symmetric determinantal rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants of one ring
    Invariants {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Invariants for every (n, t) up to a bound, as CSV
    Table {
        #[arg(long, value_enum, default_value = "symmetric")]
        kind: KindArg,
        /// Largest n
        #[arg(long)]
        n: u64,
        /// Largest t (defaults to all admissible t)
        #[arg(long)]
        t: Option<u64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Build and verify the F-purity certificate for k[X]/I_t over F_p
    Certify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// nu(p^e) from the colon ideal (I^[q] : I)
    Nu {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// nu(p^e)/p^e for e = 1..=E next to the closed-form threshold
    EstimateFpt {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Whether a product of minors of the given shape lies in I_t^(k)
    SymbolicMember {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        shape: Shape,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Groebner basis and ideal operations on an ideal file
    Gb {
        #[arg(long)]
        ideal_file: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        /// Test membership of this polynomial
        #[arg(long)]
        member: Option<String>,
        /// Compute the colon ideal (I : f)
        #[arg(long)]
        colon: Option<String>,
        /// Compute the saturation (I : f^infinity)
        #[arg(long)]
        saturate: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Consequences of p^(2) = (d) over Q (default) or F_p
    SecondSymbolic {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check D g in I_t^[p] for products of bottom-left minors of the given shapes
    ColonLemma {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: u64,
        /// May be repeated
        #[arg(long, required = true)]
        shape: Vec<Shape>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct RingArgs {
    #[arg(long, value_enum, default_value = "symmetric")]
    kind: KindArg,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    t: u64,
}

impl RingArgs {
    fn descriptor(&self) -> Result<RingDescriptor, Failure> {
        RingDescriptor::new(self.kind.into(), self.n, self.t).map_err(|e| usage("--t", e))
    }
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 120)]
    timeout_secs: u64,
}

impl OutArgs {
    fn budget(&self) -> Budget {
        Budget::within(Duration::from_secs(self.timeout_secs))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Symmetric,
    Pfaffian,
}

impl From<KindArg> for RingKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Symmetric => RingKind::Symmetric,
            KindArg::Pfaffian => RingKind::Pfaffian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Diagonal,
}

enum Failure {
    Usage(String),
    Compute(Error),
}

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// Rendered output and the status that decides the exit code.
struct Report {
    text: String,
    status: Status,
}

fn exit_code(status: Status) -> u8 {
    match status {
        Status::Pass | Status::NotApplicable => 0,
        Status::Fail => 1,
        Status::Inconclusive | Status::Pending => 3,
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String, status: Status) -> Result<Report, Failure> {
    let text = if json {
        serde_json::to_string_pretty(value).expect("records serialize") + "\n"
    } else {
        text(value)
    };
    Ok(Report { text, status })
}

fn check_prime(p: u64) -> Result<PrimeField, Failure> {
    PrimeField::new(p).map_err(|e| usage("--p", e))
}

#[derive(Serialize, Deserialize)]
struct TableRecord {
    kind: RingKind,
    rows: Vec<InvariantReport>,
}

#[derive(Serialize, Deserialize)]
struct NuOutput {
    descriptor: RingDescriptor,
    p: u64,
    e: u32,
    record: NuRecord,
    closed_form: Exact,
}

#[derive(Serialize, Deserialize)]
struct SymbolicMemberOutput {
    n: u64,
    t: u64,
    shape: Shape,
    k: u64,
    gamma: u64,
    member: bool,
}

#[derive(Serialize, Deserialize)]
struct GbOutput {
    coefficients: String,
    order: String,
    basis: Vec<String>,
    member: Option<bool>,
    colon: Option<Vec<String>>,
    saturation: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct ColonLemmaOutput {
    n: u64,
    t: u64,
    p: u64,
    shapes: Vec<ColonLemmaOutcome>,
}

fn invariant_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring            {} n={} t={}", r.kind, r.n, r.t);
    let _ = writeln!(s, "dim             {}", r.dim);
    let _ = writeln!(s, "height          {}", r.height);
    let _ = writeln!(s, "a-invariant     {}", r.a_invariant);
    let _ = writeln!(s, "gorenstein      {}", r.gorenstein);
    let class = match &r.class_group {
        invariants::ClassGroup::CyclicOfOrderTwo { generator } => format!("Z/2 generated by {generator}"),
        invariants::ClassGroup::Degenerate { reason } => format!("not stated ({reason})"),
        invariants::ClassGroup::NotReported => "not reported".into(),
    };
    let _ = writeln!(s, "class group     {class}");
    if let Some(w) = &r.canonical_module {
        let w = match w {
            invariants::CanonicalModule::Free { shift } => format!("R({shift})"),
            invariants::CanonicalModule::PrimeTwisted { shift } => format!("p({shift})"),
        };
        let _ = writeln!(s, "canonical       {w}");
    }
    let _ = writeln!(s, "fpt             {}", r.fpt);
    let _ = writeln!(s, "lct             {}", r.lct);
    if let Some(d) = r.omega2_degree {
        let _ = writeln!(s, "omega2 degree   {d}");
    }
    if let Some(d) = &r.degenerate {
        let _ = writeln!(s, "note            {d}");
    }
    s
}

fn table_rows(kind: RingKind, n_max: u64, t_max: Option<u64>) -> Result<Vec<InvariantReport>, Failure> {
    if n_max > MAX_TABLE_N {
        return Err(usage("--n", format!("table bound {n_max} exceeds {MAX_TABLE_N}")));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let top = match kind {
            RingKind::Symmetric => n,
            RingKind::Pfaffian => n / 2,
        };
        for t in 2..=top.min(t_max.unwrap_or(u64::MAX)) {
            rows.push(invariants::report(&RingDescriptor::new(kind, n, t)?));
        }
    }
    Ok(rows)
}

fn table_text(t: &TableRecord) -> String {
    let mut s = String::from("kind,n,t,dim,height,a_invariant,gorenstein,fpt,lct\n");
    for r in &t.rows {
        let _ = writeln!(s, "{},{},{},{},{},{},{},{},{}", r.kind, r.n, r.t, r.dim, r.height, r.a_invariant, r.gorenstein, r.fpt, r.lct);
    }
    s
}

fn certificate_text(c: &CertificateRecord) -> String {
    let mut s = String::new();
    let d = &c.descriptor;
    let _ = writeln!(s, "certificate     {} n={} t={} p={}", d.kind, d.n, d.t, c.p);
    let _ = writeln!(s, "witness         {}", c.witness);
    let _ = writeln!(s, "initial term    {}", c.initial_monomial);
    let _ = writeln!(s, "shape           {}", c.shape);
    let _ = writeln!(s, "gamma / height  {} / {}", c.gamma, c.height);
    if c.degenerate {
        let _ = writeln!(s, "note            degenerate: R = k");
    }
    for o in &c.obligations {
        let _ = writeln!(s, "  {:<32} {:<12} {} ms", o.name.as_str(), o.status.to_string(), o.millis);
    }
    let _ = writeln!(s, "verified        {}", c.verified);
    s
}

fn nu_text(o: &NuOutput) -> String {
    let r = &o.record;
    let d = &o.descriptor;
    let mut s = format!("nu({}) = {} for {} n={} t={}\n", r.q, r.nu, d.kind, d.n, d.t);
    let _ = writeln!(s, "bounds          ({}, {}]", r.lower, r.upper);
    let _ = writeln!(s, "f-pure at q     {}", r.f_pure);
    let _ = writeln!(s, "closed form     {}", o.closed_form);
    s
}

fn estimate_text(e: &FptEstimate) -> String {
    let d = &e.descriptor;
    let mut s = format!("{} n={} t={} p={}\nclosed form     {}\n", d.kind, d.n, d.t, e.p, e.closed_form);
    if let Some(why) = &e.skipped {
        let _ = writeln!(s, "estimator skipped: {why}");
        return s;
    }
    let _ = writeln!(s, "q,nu,nu/q,(nu+1)/q,bracketed,nu/(q-1)=fpt");
    for ((r, b), m) in e.records.iter().zip(&e.bracketed).zip(&e.q_minus_one) {
        let _ = writeln!(s, "{},{},{},{},{},{}", r.q, r.nu, r.lower, r.upper, b, m);
    }
    s
}

fn symbolic_text(o: &SymbolicMemberOutput) -> String {
    format!(
        "shape {} in I_{}^({}) for n={}: {} (gamma = {})\n",
        o.shape, o.t, o.k, o.n, o.member, o.gamma
    )
}

fn gb_text(o: &GbOutput) -> String {
    let mut s = format!("# Groebner basis over {} ({} order)\n", o.coefficients, o.order);
    for g in &o.basis {
        let _ = writeln!(s, "{g}");
    }
    if let Some(m) = o.member {
        let _ = writeln!(s, "# member: {m}");
    }
    for (label, gens) in [("colon", &o.colon), ("saturation", &o.saturation)] {
        if let Some(gens) = gens {
            let _ = writeln!(s, "# {label}");
            for g in gens {
                let _ = writeln!(s, "{g}");
            }
        }
    }
    s
}

fn second_symbolic_text(r: &SecondSymbolicReport) -> String {
    let mut s = format!("second symbolic power, n={} t={} over {}\nd = {}\n", r.n, r.t, r.coefficients, r.d);
    let _ = writeln!(s, "  (a) d in p                      {}", r.d_in_prime);
    let _ = writeln!(s, "  (b) p^2 in (d) + I_t            {}", r.square_in_principal);
    let _ = writeln!(s, "  (c) d not in p^2 + I_t          {}", r.d_not_in_square);
    let _ = writeln!(s, "  (d) p in rad((d) + I_t)         {}", r.prime_in_radical);
    s
}

fn colon_lemma_text(o: &ColonLemmaOutput) -> String {
    let mut s = format!("n={} t={} p={}\nshape,gamma,threshold,status\n", o.n, o.t, o.p);
    for c in &o.shapes {
        let _ = writeln!(s, "\"{}\",{},{},{}", c.shape, c.gamma, c.threshold, c.status);
    }
    s
}

fn run_gb<F: Field>(
    field: F,
    file: &IdealFile,
    order: OrderArg,
    member: Option<&str>,
    colon: Option<&str>,
    sat: Option<&str>,
    budget: &Budget,
) -> Result<GbOutput, Failure> {
    let table = file.table()?;
    let nvars = table.len();
    let (ord, name) = match order {
        OrderArg::Grevlex => (MonomialOrder::grevlex(nvars), "grevlex"),
        OrderArg::Diagonal => (MonomialOrder::diagonal(nvars), "diagonal"),
    };
    let ring = PolyRing::new(field, table, ord)?;
    let ideal = file.ideal(&ring)?;
    let parse = |flag: &str, text: &str| parse_poly(text, &ring).map_err(|e| usage(flag, e));
    let member = member.map(|m| parse("--member", m)).transpose()?;
    let colon = colon.map(|m| parse("--colon", m)).transpose()?;
    let sat = sat.map(|m| parse("--saturate", m)).transpose()?;
    let basis = ideal.groebner_basis(budget)?.iter().map(print_poly).collect();
    let member = member.map(|f| is_member(&f, &ideal, budget)).transpose()?;
    let printed = |i: symdet::gbengine::Ideal<F>| -> Result<Vec<String>, Failure> {
        Ok(i.groebner_basis(budget)?.iter().map(print_poly).collect())
    };
    let colon = colon.map(|f| colon_by(&ideal, &f, budget)).transpose()?.map(printed).transpose()?;
    let saturation = sat.map(|f| saturate(&ideal, &f, budget)).transpose()?.map(printed).transpose()?;
    Ok(GbOutput {
        coefficients: file.coefficients.to_string(),
        order: name.into(),
        basis,
        member,
        colon,
        saturation,
    })
}

fn run(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Invariants { ring, out } => {
            let rep = invariants::report(&ring.descriptor()?);
            emit(out.json, &rep, invariant_text, Status::Pass)
        }
        Command::Table { kind, n, t, out } => {
            let kind = kind.into();
            let rec = TableRecord { kind, rows: table_rows(kind, n, t)? };
            emit(out.json, &rec, table_text, Status::Pass)
        }
        Command::Certify { n, t, p, out } => {
            RingDescriptor::symmetric(n, t).map_err(|e| usage("--t", e))?;
            check_prime(p)?;
            let cert = fedder::verify_certificate(fedder::build_certificate(n, t, p)?, &out.budget())?;
            let status = cert.status();
            emit(out.json, &cert.record(), certificate_text, status)
        }
        Command::Nu { ring, p, e, out } => {
            let d = ring.descriptor()?;
            check_prime(p)?;
            if e == 0 {
                return Err(usage("--e", "must be at least 1"));
            }
            if d.is_degenerate() {
                return Err(usage("--t", "t = 1 gives R = k; nu is not defined"));
            }
            let record = fedder::nu(&d, p, e, &out.budget())?;
            let o = NuOutput { descriptor: d, p, e, record, closed_form: invariants::fpt(&d) };
            emit(out.json, &o, nu_text, Status::Pass)
        }
        Command::EstimateFpt { ring, p, e, out } => {
            let d = ring.descriptor()?;
            check_prime(p)?;
            if e == 0 {
                return Err(usage("--e", "must be at least 1"));
            }
            let est = fedder::estimate_fpt(&d, p, e, &out.budget())?;
            emit(out.json, &est, estimate_text, Status::Pass)
        }
        Command::SymbolicMember { n, t, shape, k, out } => {
            RingDescriptor::symmetric(n, t).map_err(|e| usage("--t", e))?;
            if let Some(a) = shape.sizes().iter().find(|&&a| a as u64 > n) {
                return Err(usage("--shape", format!("a {a}-minor does not fit an {n}x{n} matrix")));
            }
            let o = SymbolicMemberOutput {
                n,
                t,
                gamma: invariants::gamma(&shape, t),
                member: invariants::symbolic_member_product(&shape, t, k, n),
                shape,
                k,
            };
            emit(out.json, &o, symbolic_text, Status::Pass)
        }
        Command::Gb { ideal_file, order, member, colon, saturate, out } => {
            let text = std::fs::read_to_string(&ideal_file).map_err(|e| usage("--ideal-file", e))?;
            let file = IdealFile::parse(&text).map_err(|e| usage("--ideal-file", e))?;
            let budget = out.budget();
            let (m, c, s) = (member.as_deref(), colon.as_deref(), saturate.as_deref());
            let o = match file.coefficients {
                Coefficients::Prime(p) => {
                    let field = PrimeField::new(p).map_err(|e| usage("--ideal-file", e))?;
                    run_gb(field, &file, order, m, c, s, &budget)?
                }
                Coefficients::Rational => run_gb(Rationals, &file, order, m, c, s, &budget)?,
            };
            emit(out.json, &o, gb_text, Status::Pass)
        }
        Command::SecondSymbolic { n, t, p, out } => {
            RingDescriptor::symmetric(n, t).map_err(|e| usage("--t", e))?;
            if t < 2 {
                return Err(usage("--t", "need t >= 2"));
            }
            let budget = out.budget();
            let rep = match p {
                Some(p) => fedder::verify_second_symbolic(check_prime(p)?, n, t, &budget)?,
                None => fedder::verify_second_symbolic(Rationals, n, t, &budget)?,
            };
            let status = rep.status();
            emit(out.json, &rep, second_symbolic_text, status)
        }
        Command::ColonLemma { n, t, p, shape, out } => {
            RingDescriptor::symmetric(n, t).map_err(|e| usage("--t", e))?;
            check_prime(p)?;
            for s in &shape {
                if let Some(a) = s.sizes().iter().find(|&&a| a as u64 > n) {
                    return Err(usage("--shape", format!("a {a}-minor does not fit an {n}x{n} matrix")));
                }
            }
            let shapes = fedder::verify_colon_lemma(n, t, p, &shape, &out.budget())?;
            let status = fedder::overall(shapes.iter().map(|s| &s.status));
            emit(out.json, &ColonLemmaOutput { n, t, p, shapes }, colon_lemma_text, status)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(exit_code(report.status))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(Error::Timeout)) => {
            eprintln!("error: time budget exhausted; result inconclusive");
            ExitCode::from(3)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
