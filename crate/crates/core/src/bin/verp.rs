use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use verp::acceptance::{self, Options};
use verp::expr::ObjectExpr;
use verp::free_lie::{flie_class_direct, free_lie_report, frlie_class, rp_multiplicity_lemmas};
use verp::koszul::{almost_koszul_certificates, yoneda_pattern, BigradedModel, PeriodicKoszul};
use verp::lie_algebra::{pbw_class_gap, GammaContext, GlAlgebra, PJacobi, TruncatedFree};
use verp::ring::{flie_classes, fuse_classes, power_table, set_cache_dir};
use verp::sym_group::{dynkin_theta, rep_rp};
use verp::{Error, Prime, VerClass};

const SCHEMA: &str = "verp-report/1";

/// Computations in the Verlinde category Ver_p.
#[derive(Parser)]
#[command(name = "verp", version)]
struct Cli {
    /// Characteristic, an odd prime between 3 and 13.
    #[arg(long, global = true, default_value_t = 5)]
    p: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Where power tables are cached; defaults to the user cache directory.
    #[arg(long, global = true, env = "VERP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Seed for the randomized checks of `selftest`.
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Class of A ⊗ B.
    Fusion { a: String, b: String },
    /// Jordan type of an object or of its tensor power.
    Jordan {
        expr: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Classes of the symmetric powers of L_m.
    Sympow {
        #[arg(long)]
        m: usize,
    },
    /// Classes of the exterior powers of L_m.
    Extpow {
        #[arg(long)]
        m: usize,
    },
    /// Koszul homology of K(V) by bidegree.
    Koszul {
        expr: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// De Rham cohomology of DR(V) by bidegree.
    Derham {
        expr: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Exactness of the periodic Koszul complex of SL_m.
    Periodic {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        periods: usize,
    },
    /// (r,s)-Koszul certificates for SL_m and ΛL_m and the Yoneda pattern.
    AlmostKoszul {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        periods: usize,
    },
    /// FOLie_n, FLie_n, FRLie_n and E_n of V.
    FreeLie {
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// FLie classes from the Hilbert series recursion.
    FlieSeries {
        expr: String,
        #[arg(long)]
        max: usize,
    },
    /// Kernel of γ_p on `gl:EXPR` or `free:EXPR:N`.
    Pjacobi {
        #[arg(long)]
        algebra: String,
    },
    /// Classes of S(L)[d] and U(L)[d] for the truncated free Lie algebra.
    PbwGap {
        expr: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// The Dynkin and R_p module facts at p.
    Lemmas,
    /// Runs the acceptance suite.
    Selftest {
        #[arg(long)]
        stretch: bool,
    },
}

/// Envelope of every JSON report.
#[derive(Serialize, Deserialize)]
struct Report {
    schema: String,
    command: String,
    p: u32,
    result: Value,
}

struct Output {
    command: &'static str,
    json: Value,
    table: String,
    ok: bool,
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(x).join("verp"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("verp"))
}

fn parse(p: Prime, s: &str) -> verp::Result<VerClass> {
    Ok(ObjectExpr::parse(p, s)?.class())
}

fn to_json<T: Serialize>(x: &T) -> verp::Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn class_json(c: &VerClass) -> Value {
    json!({ "class": c.to_string(), "mult": c.mults() })
}

fn homology_output(
    command: &'static str,
    v: &VerClass,
    model: &mut BigradedModel,
    dmax: usize,
    de_rham: bool,
) -> verp::Result<Output> {
    let mut records = Vec::new();
    let mut table = format!("{:>4} {:>4}  {:<28} {}\n", "d", "i", "term", "homology");
    for d in 0..=dmax {
        let terms = model.term_classes(d)?;
        let h = if de_rham { model.de_rham_cohomology(d)? } else { model.koszul_homology(d)? };
        for (i, t) in terms.iter().enumerate() {
            let hc = h.get(&i).cloned().unwrap_or_else(|| VerClass::zero(v.prime()));
            if t.is_zero() && hc.is_zero() {
                continue;
            }
            table += &format!("{d:>4} {i:>4}  {:<28} {hc}\n", t.to_string());
            records.push(json!({ "diagonal": d, "degree": i, "term": class_json(t), "homology": class_json(&hc) }));
        }
    }
    Ok(Output {
        command,
        json: json!({ "object": v.to_string(), "max_diagonal": dmax, "records": records }),
        table,
        ok: true,
    })
}

fn run(cli: &Cli) -> verp::Result<Output> {
    let p = Prime::new(cli.p)?;
    Ok(match &cli.cmd {
        Command::Fusion { a, b } => {
            let (x, y) = (parse(p, a)?, parse(p, b)?);
            let c = fuse_classes(&x, &y);
            Output {
                command: "fusion",
                json: json!({ "a": x.to_string(), "b": y.to_string(), "product": class_json(&c) }),
                table: format!("{c}\n"),
                ok: true,
            }
        }
        Command::Jordan { expr, power } => {
            let e = ObjectExpr::parse(p, expr)?;
            if *power == 0 {
                return Err(Error::OutOfRange("tensor power must be at least 1".into()));
            }
            let x = e.lift()?.tensor_power(*power);
            let jt = x.jordan_type();
            let counts: Vec<(usize, usize)> =
                (1..=p.usize()).map(|m| (m, jt.count(m))).filter(|(_, k)| *k > 0).collect();
            let c = verp::ss::ver_class(&x);
            let text: Vec<String> = counts.iter().map(|(m, k)| if *k == 1 { format!("J{m}") } else { format!("{k}*J{m}") }).collect();
            Output {
                command: "jordan",
                json: json!({ "object": expr, "power": power, "dim": x.dim(), "blocks": counts, "ver_class": class_json(&c) }),
                table: format!("{}\nclass in Ver_{p}: {c}\n", if text.is_empty() { "0".into() } else { text.join(" + ") }),
                ok: true,
            }
        }
        Command::Sympow { m } | Command::Extpow { m } => {
            if *m == 0 || *m >= p.usize() {
                return Err(Error::OutOfRange(format!("L_{m} is not a simple of Ver_{p}")));
            }
            let sym = matches!(cli.cmd, Command::Sympow { .. });
            let t = power_table(p)?;
            let top = if sym { t.sym_top(*m).unwrap_or(p.usize() - 1) } else { *m };
            let rows: Vec<VerClass> = (0..=top).map(|i| if sym { t.sym(*m, i) } else { t.ext(*m, i) }).collect();
            let name = if sym { "S" } else { "Λ" };
            let mut table = String::new();
            for (i, c) in rows.iter().enumerate() {
                table += &format!("{name}^{i} L{m} = {c}\n");
            }
            if sym && *m == 1 {
                table += "(all higher powers are L1)\n";
            } else {
                table += &format!("{name}^i L{m} = 0 for i > {top}\n");
            }
            Output {
                command: if sym { "sympow" } else { "extpow" },
                json: json!({ "m": m, "powers": rows.iter().map(class_json).collect::<Vec<_>>(), "vanishes_above": (!(sym && *m == 1)).then_some(top) }),
                table,
                ok: true,
            }
        }
        Command::Koszul { expr, degree } | Command::Derham { expr, degree } => {
            let v = parse(p, expr)?;
            let mut model = BigradedModel::new(&v)?;
            let d = degree.unwrap_or(p.usize() + 3);
            let dr = matches!(cli.cmd, Command::Derham { .. });
            homology_output(if dr { "derham" } else { "koszul" }, &v, &mut model, d, dr)?
        }
        Command::Periodic { m, periods } => {
            let r = PeriodicKoszul::new(p, *m, *periods)?.check();
            let table = format!(
                "periodic complex of SL{m}, {periods} periods\nexact: {}\nsplices are identities: {}\ngenerators in degrees qp: {}\n",
                r.exact, r.splices_are_identities, r.generators_in_degree_qp
            );
            let ok = r.exact && r.splices_are_identities && r.generators_in_degree_qp;
            Output { command: "periodic", json: to_json(&r)?, table, ok }
        }
        Command::AlmostKoszul { m, periods } => {
            let (s, e) = almost_koszul_certificates(p, *m)?;
            let (gens, agree) = yoneda_pattern(p, *m, *periods)?;
            let mut table = String::new();
            for c in [&s, &e] {
                table += &format!("{}: ({},{})-Koszul, certified {}\n", c.algebra, c.r, c.s, c.certified());
            }
            table += "Yoneda generators (degree, diagonal, class):\n";
            for g in &gens {
                table += &format!("  ({}, {}) {}\n", g.degree, g.diagonal, g.class);
            }
            table += &format!("pattern matches: {agree}\n");
            Output {
                command: "almost-koszul",
                json: json!({ "sym": to_json(&s)?, "ext": to_json(&e)?, "yoneda": to_json(&gens)?, "pattern_matches": agree }),
                table,
                ok: s.certified() && e.certified() && agree,
            }
        }
        Command::FreeLie { expr, n } => {
            let v = parse(p, expr)?;
            let r = free_lie_report(&v, *n)?;
            let fr = match frlie_class(&v, *n) {
                Ok(c) => Some(c),
                Err(Error::OutOfRange(_)) => None,
                Err(e) => return Err(e),
            };
            let fr_text = fr.as_ref().map_or("not computed (too large)".to_string(), |c| c.to_string());
            let table = format!(
                "V^{n} = {}\nFOLie_{n} = {}\nFLie_{n} = {}\nFRLie_{n} = {fr_text}\nE_{n} = {}\n",
                r.tensor_class, r.folie, r.flie, r.e
            );
            let mut j = to_json(&r)?;
            j["frlie"] = to_json(&fr)?;
            Output { command: "free-lie", json: j, table, ok: true }
        }
        Command::FlieSeries { expr, max } => {
            let e = ObjectExpr::parse(p, expr)?;
            let v = e.class();
            let rec = flie_classes(&v, *max)?;
            let dim = v.lift_dim() as usize;
            let mut rows = Vec::new();
            let mut table = String::new();
            let mut ok = true;
            for (k, c) in rec.iter().enumerate() {
                let n = k + 1;
                // direct computation only while V^{⊗n} stays small
                let direct = if n <= 7 && dim.checked_pow(n as u32).is_some_and(|d| d <= 20_000) {
                    Some(flie_class_direct(&v, n)?)
                } else {
                    None
                };
                let agrees = direct.as_ref().map(|d| d == c);
                ok &= agrees != Some(false);
                let mark = match agrees {
                    Some(true) => "direct agrees",
                    Some(false) => "DIRECT DIFFERS",
                    None => "not checked",
                };
                table += &format!("FLie_{n} = {c}  [{mark}]\n");
                rows.push(json!({ "n": n, "flie": class_json(c), "direct_agrees": agrees }));
            }
            Output { command: "flie-series", json: json!({ "object": v.to_string(), "rows": rows }), table, ok }
        }
        Command::Pjacobi { algebra } => pjacobi(p, algebra)?,
        Command::PbwGap { expr, n, degree } => {
            let v = parse(p, expr)?;
            let l = TruncatedFree::new(&v, *n)?;
            let rows = pbw_class_gap(l.components(), &v, *degree)?;
            let mut table = format!("{:>3}  {:<30} {:<30} {}\n", "d", "S(L)[d]", "U(L)[d]", "gap");
            for r in &rows {
                table += &format!("{:>3}  {:<30} {:<30} {}\n", r.degree, r.s_side.to_string(), r.u_side.to_string(), r.difference);
            }
            Output { command: "pbw-gap", json: to_json(&rows)?, table, ok: true }
        }
        Command::Lemmas => {
            let r = rp_multiplicity_lemmas(p)?;
            let n = p.usize();
            let theta_zero = rep_rp(p).apply_elem(&dynkin_theta(n)).is_zero();
            let table = format!(
                "θ_{n} acts by zero on R_{n}: {theta_zero}\ndim (R_{n} ⊗ Lie_{n})_(S_{n}) = {}\nL{}-multiplicity space of L2^{n}: dim {}, isomorphic to R_{n}: {}\nother multiplicities {:?}, projective: {}\n",
                r.rp_lie_coinvariants,
                n - 1,
                r.odd_multiplicity,
                r.isomorphic_to_rp,
                r.other_multiplicities,
                r.others_projective
            );
            let mut j = to_json(&r)?;
            j["theta_vanishes_on_rp"] = json!(theta_zero);
            Output { command: "lemmas", json: j, table, ok: true }
        }
        Command::Selftest { stretch } => {
            let opts = Options { seed: cli.seed, stretch: *stretch };
            let outcomes = acceptance::run_all(&opts);
            let mut table = String::new();
            for o in &outcomes {
                table += &o.line();
                table.push('\n');
                for c in o.checks.iter().filter(|c| !c.passed) {
                    table += &format!("    failed: {} {}\n", c.label, c.mismatch.as_deref().unwrap_or(""));
                }
                if let Some(e) = &o.error {
                    table += &format!("    error: {e}\n");
                }
            }
            let ok = outcomes.iter().all(|o| o.passed || o.skipped);
            Output { command: "selftest", json: to_json(&outcomes)?, table, ok }
        }
    })
}

fn pjacobi(p: Prime, algebra: &str) -> verp::Result<Output> {
    let ctx = GammaContext::new(p)?;
    let parts: Vec<&str> = algebra.split(':').collect();
    let (desc, alg, gap): (String, Box<dyn PJacobi>, Option<Value>) = match parts.as_slice() {
        ["gl", e] => {
            let v = parse(p, e)?;
            let g = GlAlgebra::new(&v)?;
            (format!("gl({v}) = {}", g.class()), Box::new(g), None)
        }
        ["free", e, n] => {
            let v = parse(p, e)?;
            let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad truncation degree {n:?}")))?;
            let l = TruncatedFree::new(&v, n)?;
            let rows = pbw_class_gap(l.components(), &v, n)?;
            (format!("truncated_free({v}, {n})"), Box::new(l), Some(to_json(&rows)?))
        }
        _ => return Err(Error::Parse(format!("expected gl:EXPR or free:EXPR:N, got {algebra:?}"))),
    };
    let k = alg.hom_l2_dim();
    let g = alg.gamma_matrix(&ctx)?;
    let kernel = k - g.rank();
    let mut lifts_agree = true;
    for i in 0..k {
        let mut e = vec![0; k];
        e[i] = 1;
        lifts_agree &= alg.lift_independent(&ctx, &e)?;
    }
    let verdict = if g.is_zero() { "γ_p vanishes" } else { "γ_p is nonzero" };
    let table = format!(
        "{desc}\ndim Hom(L2, L) = {k}\nkernel of γ_{p}: dim {kernel}\n{verdict}\nlifts agree: {lifts_agree}\n"
    );
    Ok(Output {
        command: "pjacobi",
        json: json!({ "algebra": desc, "hom_l2_dim": k, "gamma_kernel_dim": kernel, "gamma_vanishes": g.is_zero(), "lifts_agree": lifts_agree, "pbw_gap": gap }),
        table,
        ok: lifts_agree,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    set_cache_dir(cli.cache_dir.clone().or_else(default_cache_dir));
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Table => print!("{}", out.table),
                Format::Json => {
                    let r = Report { schema: SCHEMA.into(), command: out.command.into(), p: cli.p, result: out.json };
                    match serde_json::to_string_pretty(&r) {
                        Ok(s) => println!("{s}"),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return ExitCode::from(3);
                        }
                    }
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("consistency check failed");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
