use clap::{Parser, Subcommand};
use ffkernel::invariants;
use ffkernel::liealg::LieAlgebra;
use ffkernel::mmap::{self, Mmap};
use ffkernel::special::{self, SpecialError};
use ffkernel::ssvec::{self, SSCandidate, SsError};
use ffkernel::suite;
use ffkernel::sympoly::CommPoly;
use ffkernel::uea::NCPoly;
use ffkernel::Q;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ffkernel", version, about = "Segal-Sugawara vectors: construction, exact verification, specializations")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "FFKERNEL_JOBS", global = true)]
    jobs: Option<usize>,
    /// Run the whole acceptance grid and print one line per criterion.
    #[arg(long)]
    paper_suite: bool,
    /// Restrict --paper-suite to these criteria (comma separated).
    #[arg(long, value_delimiter = ',', requires = "paper_suite")]
    only: Vec<u8>,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a vector and check [H[-1], S] = 0.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Iterate 𝗆 on a basic invariant and compare with the closed form.
    Mmap {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Gaudin generators ρ_z̄(τ^m S) and the quadratic Hamiltonians.
    Gaudin {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sites: usize,
        /// Evaluation points, e.g. 1,-1 or 1/2,3.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Quantum shift-of-argument generators ϖ(∂_μ^m H_k).
    Qmf {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        /// Coordinates of μ; a `-diag` suffix reads them as matrix diagonal
        /// entries, `-cartan` as coefficients of the Cartan basis vectors.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Write an invariant, a vector or an algebra as JSON.
    Emit {
        /// An invariant name (Delta, DeltaTilde, DeltaSp, Phi, Pf, G2Delta2,
        /// G2Delta6, G2Htilde), `SS` (needs --family) or `algebra`.
        #[arg(long)]
        what: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: String,
    },
}

enum Fail {
    Usage(String),
    Math,
}

type Outcome = Result<(), Fail>;

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn emit_line(v: Value) {
    println!("{v}");
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Fail> {
    v.ok_or_else(|| Fail::Usage(format!("--{name} is required for this family")))
}

fn ss_error(e: SsError) -> Fail {
    match e {
        SsError::Lift { .. } => {
            emit_line(json!({"status": "lift_failed", "error": e.to_string()}));
            Fail::Math
        }
        e => usage(e),
    }
}

fn special_error(e: SpecialError) -> Fail {
    match e {
        SpecialError::Ss(e) => ss_error(e),
        e => usage(e),
    }
}

fn build_vector(family: &str, n: Option<usize>, k: Option<usize>) -> Result<SSCandidate, Fail> {
    let s = match family {
        "A" => ssvec::ss_type_a(need(n, "n")?, need(k, "k")?),
        "C" => ssvec::ss_type_c(need(n, "n")?, need(k, "k")?),
        "BD" => ssvec::ss_type_bd(need(n, "n")?, need(k, "k")?),
        "Pf" => ssvec::ss_pfaffian(need(n, "n")?),
        "G2" => match k.unwrap_or(6) {
            6 => ssvec::ss_g2(),
            2 => ssvec::ss_g2_quadratic(),
            k => return Err(Fail::Usage(format!("G2 has vectors of degree 2 and 6, not {k}"))),
        },
        f => return Err(Fail::Usage(format!("unknown family {f}; expected A, C, BD, Pf or G2"))),
    };
    s.map_err(ss_error)
}

fn cmd_verify(family: &str, n: Option<usize>, k: Option<usize>) -> Outcome {
    let t = Instant::now();
    let s = build_vector(family, n, k)?;
    let rem = ssvec::verify_central(&s);
    emit_line(json!({
        "family": family,
        "n": s.n,
        "k": s.k,
        "central": rem.is_zero(),
        "terms": s.value.len(),
        "remainder_terms": rem.len(),
        "wall_time": t.elapsed().as_secs_f64(),
    }));
    if rem.is_zero() {
        Ok(())
    } else {
        Err(Fail::Math)
    }
}

/// Input invariant, the expected image and the closed-form scalar.
fn mmap_case(family: &str, n: Option<usize>, k: Option<usize>, r: usize) -> Result<(LieAlgebra, String, CommPoly, String, CommPoly, Q), Fail> {
    let bad = |m: String| Err(Fail::Usage(m));
    if r == 0 {
        return bad("--r must be at least 1".into());
    }
    Ok(match family {
        "A" => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            if 2 * r >= k {
                return bad(format!("need 2r < k, got r = {r}, k = {k}"));
            }
            let (g, top) = invariants::delta_sl(n, k).map_err(usage)?;
            let (_, low) = invariants::delta_sl(n, k - 2 * r).map_err(usage)?;
            (g, format!("DeltaTilde{k}"), top, format!("DeltaTilde{}", k - 2 * r), low, mmap::type_a_scalar(n, k, r))
        }
        "C" => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            if r >= k {
                return bad(format!("need r < k, got r = {r}, k = {k}"));
            }
            let (g, top) = invariants::delta_sp(n, k).map_err(usage)?;
            let (_, low) = invariants::delta_sp(n, k - r).map_err(usage)?;
            (g, format!("DeltaSp{}", 2 * k), top, format!("DeltaSp{}", 2 * (k - r)), low, mmap::type_c_scalar(n / 2, k, r))
        }
        "BD" => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            if r >= k {
                return bad(format!("need r < k, got r = {r}, k = {k}"));
            }
            let (g, top) = invariants::phi_so(n, k).map_err(usage)?;
            let (_, low) = invariants::phi_so(n, k - r).map_err(usage)?;
            let s = (0..r).fold(Q::one(), |s, i| &s * &mmap::so_r(n, k - i));
            (g, format!("Phi{}", 2 * k), top, format!("Phi{}", 2 * (k - r)), low, s)
        }
        "Pf" => {
            let n = need(n, "n")?;
            let (g, pf) = invariants::pfaffian(n).map_err(usage)?;
            (g, "Pf".into(), pf, "0".into(), CommPoly::zero(), Q::zero())
        }
        "G2" => {
            let (g, d2, _) = invariants::g2_invariants().map_err(usage)?;
            match (k.unwrap_or(6), r) {
                (6, 1) => {
                    let ht = invariants::g2_htilde(&g).map_err(usage)?;
                    (g, "G2Htilde".into(), ht, "G2Delta2^2".into(), d2.pow(2), Q::new(-13, 12))
                }
                (6, 2) => {
                    let ht = invariants::g2_htilde(&g).map_err(usage)?;
                    (g, "G2Htilde".into(), ht, "G2Delta2".into(), d2, Q::new(-65, 9))
                }
                (4, 1) => (g, "G2Delta2^2".into(), d2.pow(2), "G2Delta2".into(), d2, Q::new(20, 3)),
                (k, r) => return bad(format!("G2 accepts k = 6 with r ≤ 2 or k = 4 with r = 1, not k = {k}, r = {r}")),
            }
        }
        f => return bad(format!("unknown family {f}; expected A, C, BD, Pf or G2")),
    })
}

fn cmd_mmap(family: &str, n: Option<usize>, k: Option<usize>, r: usize) -> Outcome {
    let t = Instant::now();
    let (g, input, f, target_name, target, expected) = mmap_case(family, n, k, r)?;
    let res = Mmap::new(&g).m_power(&f, r);
    let mut report = mmap::report(&input, r, &res, (!target.is_zero()).then_some((target_name.as_str(), &target)));
    let matched = match &res {
        Ok(p) => *p == target.scale(&expected),
        Err(_) => false,
    };
    if target.is_zero() {
        report["target"] = json!(target_name);
        if let Ok(p) = &res {
            report["scalar"] = json!(if p.is_zero() { Some("0") } else { None });
        }
    }
    report["family"] = json!(family);
    report["n"] = json!(n);
    report["k"] = json!(k);
    report["expected"] = json!(expected.to_string());
    report["match"] = json!(matched);
    report["wall_time"] = json!(t.elapsed().as_secs_f64());
    emit_line(report);
    if matched {
        Ok(())
    } else {
        Err(Fail::Math)
    }
}

fn parse_rationals(s: &str) -> Result<Vec<Q>, Fail> {
    s.split(',')
        .map(|x| x.trim().parse::<Q>().map_err(|e| Fail::Usage(format!("malformed number {x:?}: {e}"))))
        .collect()
}

fn write_json(path: &str, v: &Value) -> Result<(), Fail> {
    std::fs::write(path, format!("{v}\n")).map_err(|e| Fail::Usage(format!("cannot write {path}: {e}")))
}

fn family_size(family: &str, n: Option<usize>) -> Result<usize, Fail> {
    if family == "G2" {
        Ok(7)
    } else {
        need(n, "n")
    }
}

fn report_commuting(g: &LieAlgebra, elems: &[NCPoly], mut head: Value, out: Option<&str>, t: Instant) -> Outcome {
    let certs = special::commute_check(g, elems);
    if let Some(path) = out {
        write_json(path, &Value::Array(elems.iter().map(|p| p.to_json(g)).collect()))?;
        head["out"] = json!(path);
    }
    if let (Value::Object(h), Value::Object(r)) = (&mut head, special::commute_report(elems.len(), &certs)) {
        h.extend(r);
    }
    head["generators"] = json!(elems.len());
    head["wall_time"] = json!(t.elapsed().as_secs_f64());
    emit_line(head);
    if certs.is_empty() {
        Ok(())
    } else {
        Err(Fail::Math)
    }
}

fn cmd_gaudin(family: &str, n: Option<usize>, sites: usize, z: &str, out: Option<&str>) -> Outcome {
    let t = Instant::now();
    let z = parse_rationals(z)?;
    if z.len() != sites {
        return Err(Fail::Usage(format!("--z has {} points for {sites} sites", z.len())));
    }
    let size = family_size(family, n)?;
    let list = special::complete_set(family, size).map_err(special_error)?;
    let g = list[0].g.clone();
    let mut elems = special::gaudin_generators(&list, &z).map_err(special_error)?;
    for k in 1..=sites {
        elems.push(special::gaudin_quadratic(&g, k, &z).map_err(special_error)?);
    }
    let head = json!({"family": family, "n": size, "sites": sites, "z": z.iter().map(|q| q.to_string()).collect::<Vec<_>>()});
    report_commuting(&g, &elems, head, out, t)
}

fn parse_mu(g: &LieAlgebra, s: &str) -> Result<Vec<Q>, Fail> {
    if let Some(d) = s.strip_suffix("-diag") {
        let d = parse_rationals(d)?;
        let mut m = vec![vec![Q::zero(); d.len()]; d.len()];
        for (i, c) in d.into_iter().enumerate() {
            m[i][i] = c;
        }
        g.coords_of_matrix(&m).map_err(usage)
    } else if let Some(c) = s.strip_suffix("-cartan") {
        let c = parse_rationals(c)?;
        if c.len() != g.cartan.len() {
            return Err(Fail::Usage(format!("{} Cartan coefficients given, rank is {}", c.len(), g.cartan.len())));
        }
        let mut mu = vec![Q::zero(); g.dim()];
        for (i, v) in g.cartan.iter().zip(c) {
            mu[*i] = v;
        }
        Ok(mu)
    } else {
        let mu = parse_rationals(s)?;
        if mu.len() != g.dim() {
            return Err(Fail::Usage(format!("μ has {} coordinates, dim g = {}", mu.len(), g.dim())));
        }
        Ok(mu)
    }
}

fn cmd_qmf(family: &str, n: Option<usize>, mu: &str, out: Option<&str>) -> Outcome {
    let t = Instant::now();
    if family == "G2" {
        let g = ffkernel::liealg::build_g2().map_err(usage)?;
        let mu = parse_mu(&g, mu)?;
        let r = special::g2_qmf(&mu).map_err(special_error)?;
        let ok = r.failures.is_empty() && r.tau4_parts && r.y_parts.iter().all(|&b| b) && r.identities == (true, true);
        if let Some(path) = out {
            write_json(path, &Value::Array(r.generators.iter().map(|p| p.to_json(&r.g)).collect()))?;
        }
        let mut v = r.to_json();
        v["family"] = json!("G2");
        v["wall_time"] = json!(t.elapsed().as_secs_f64());
        emit_line(v);
        return if ok { Ok(()) } else { Err(Fail::Math) };
    }
    let size = family_size(family, n)?;
    let list = special::complete_set(family, size).map_err(special_error)?;
    let g = list[0].g.clone();
    let mu = parse_mu(&g, mu)?;
    let hs: Vec<CommPoly> = list.iter().map(|s| s.top.clone()).collect();
    let elems = special::qmf_generators(&g, &mu, &hs).map_err(special_error)?;
    let head = json!({"family": family, "n": size, "mu": mu.iter().map(|q| q.to_string()).collect::<Vec<_>>(), "regular": g.is_regular(&mu)});
    report_commuting(&g, &elems, head, out, t)
}

fn cmd_emit(what: &str, family: Option<&str>, n: Option<usize>, k: Option<usize>, out: &str) -> Outcome {
    let (v, terms) = match what {
        "SS" => {
            let family = family.ok_or_else(|| Fail::Usage("--what SS needs --family".into()))?;
            let s = build_vector(family, n, k)?;
            (s.to_json(), s.value.len())
        }
        "algebra" => {
            let family = family.ok_or_else(|| Fail::Usage("--what algebra needs --family".into()))?;
            let size = family_size(family, n)?;
            let g = special::complete_set(family, size).map_err(special_error)?.swap_remove(0).g;
            (g.to_json(), g.dim())
        }
        name => {
            let needs_k = !matches!(name, "Pf" | "G2Delta2" | "G2Delta6" | "G2Htilde");
            let size = if name.starts_with("G2") { 7 } else { need(n, "n")? };
            let k = if needs_k { need(k, "k")? } else { 0 };
            let (g, p) = invariants::named(name, size, k).map_err(usage)?;
            let v = json!({"name": name, "algebra": g.name, "n": size, "k": k, "degree": p.degree(), "poly": p.to_json(&g)});
            (v, p.len())
        }
    };
    write_json(out, &v)?;
    emit_line(json!({"what": what, "n": n, "k": k, "terms": terms, "out": out}));
    Ok(())
}

fn paper_suite(only: &[u8]) -> Outcome {
    let ids: Vec<u8> = if only.is_empty() { suite::CRITERIA.to_vec() } else { only.to_vec() };
    let mut all = true;
    for id in ids {
        let v = suite::run(id).ok_or_else(|| Fail::Usage(format!("no criterion {id}")))?;
        eprintln!("{}", v.line());
        all &= v.pass;
        emit_line(json!({
            "criterion": v.id,
            "title": v.title,
            "statement": v.statement,
            "pass": v.pass,
            "checks": v.checks.len(),
            "failures": v.failures(),
            "wall_time": v.seconds,
        }));
    }
    if all {
        Ok(())
    } else {
        Err(Fail::Math)
    }
}

fn dispatch(cli: Cli) -> Outcome {
    if cli.paper_suite {
        return paper_suite(&cli.only);
    }
    match cli.cmd {
        Some(Cmd::Verify { family, n, k }) => cmd_verify(&family, n, k),
        Some(Cmd::Mmap { family, n, k, r }) => cmd_mmap(&family, n, k, r),
        Some(Cmd::Gaudin { family, n, sites, z, out }) => cmd_gaudin(&family, n, sites, &z, out.as_deref()),
        Some(Cmd::Qmf { family, n, mu, out }) => cmd_qmf(&family, n, &mu, out.as_deref()),
        Some(Cmd::Emit { what, family, n, k, out }) => cmd_emit(&what, family.as_deref(), n, k, &out),
        None => Err(Fail::Usage("a subcommand or --paper-suite is required".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(if code == 0 { 0 } else { 2 });
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            emit_line(json!({"error": "--jobs must be positive"}));
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            emit_line(json!({"error": e.to_string()}));
            return ExitCode::from(2);
        }
    }
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Math) => ExitCode::from(1),
        Err(Fail::Usage(m)) => {
            emit_line(json!({"error": m}));
            ExitCode::from(2)
        }
    }
}
