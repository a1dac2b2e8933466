//! `qr` — command-line front end for the quandle-rings toolkit.
//!
//! Exit codes: 0 success / all checks pass; 1 a mathematical check
//! failed; 2 usage or input error (including searches over the size cap,
//! overridable with the `QR_SIZE_CAP` environment variable).

mod claims;
mod report;
mod spec;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use quandle_rings::caps::Caps;
use quandle_rings::corez;
use quandle_rings::idempotents::{
    build_system, enumerate_idempotents, search_system, verify_ring_morphism,
};
use quandle_rings::perm::cycle_notation;
use quandle_rings::qring::{filtration, DeltaVector};
use quandle_rings::quandle::{automorphisms, homomorphisms, inner_group, properties};
use report::{ClaimStatus, Document};
use serde_json::json;
use spec::QuandleSpec;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qr",
    about = "Exact computations in finite quandles and their quandle rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AugChoice {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorezCheck {
    Extremal,
    Idempotent,
    Commutator,
    Order,
    Dyadic,
}

#[derive(Subcommand)]
enum Command {
    /// Structural flags of a quandle (latin, connected, degrees, ...).
    Props {
        #[arg(long, value_name = "SPEC")]
        quandle: QuandleSpec,
        #[arg(long)]
        json: bool,
    },
    /// Powers of the augmentation ideal with graded quotients.
    Delta {
        #[arg(long, value_name = "SPEC")]
        quandle: QuandleSpec,
        #[arg(long, value_name = "K")]
        max_power: usize,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive idempotent search over a coordinate box.
    Idem {
        #[arg(long, value_name = "SPEC")]
        quandle: QuandleSpec,
        #[arg(long, value_name = "B")]
        bound: i64,
        #[arg(long, value_enum, default_value = "both")]
        aug: AugChoice,
        #[arg(long)]
        json: bool,
    },
    /// The quadratic system of u^2 = u in one augmentation slice.
    System {
        #[arg(long, value_name = "SPEC")]
        quandle: QuandleSpec,
        #[arg(long, value_enum)]
        aug: AugChoice,
        #[arg(long, value_name = "B")]
        search_box: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Quandle automorphisms; --ring also checks them as ring maps.
    Aut {
        #[arg(long, value_name = "SPEC")]
        quandle: QuandleSpec,
        /// Also verify each automorphism as a ring automorphism and
        /// enumerate boxed idempotents as rigidity evidence.
        #[arg(long)]
        ring: bool,
        #[arg(long, value_name = "B", default_value_t = 3)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
    /// All quandle homomorphisms between two quandles.
    Hom {
        #[arg(long, value_name = "SPEC")]
        from: QuandleSpec,
        #[arg(long, value_name = "SPEC")]
        to: QuandleSpec,
        #[arg(long)]
        json: bool,
    },
    /// Probes of the infinite quandle on the integers.
    Corez {
        #[arg(long, value_enum)]
        check: CorezCheck,
        #[arg(long, value_name = "N", default_value_t = 1000)]
        samples: u64,
        #[arg(long, value_name = "S", default_value_t = corez::DEFAULT_SEED)]
        seed: u64,
        /// Closure depth for the dyadic probe.
        #[arg(long, value_name = "D", default_value_t = 6)]
        depth: usize,
        /// Window half-width for the order probe.
        #[arg(long, value_name = "W", default_value_t = 20)]
        window: i64,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive reference computational claims (pass/fail/evidence).
    Reproduce {
        /// A claim id, or `all`.
        claim: String,
        #[arg(long)]
        json: bool,
        /// Run independent claims on up to N worker threads.
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
    },
}

fn caps_from_env() -> Caps {
    match std::env::var("QR_SIZE_CAP") {
        Ok(v) => match v.parse::<u64>() {
            Ok(limit) => Caps::with_search_limit(limit),
            Err(_) => {
                eprintln!("warning: ignoring unparsable QR_SIZE_CAP={v:?}");
                Caps::default()
            }
        },
        Err(_) => Caps::default(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    let caps = caps_from_env();
    match command {
        Command::Props { quandle, json } => {
            let q = quandle.build()?;
            let p = properties(&q);
            let (inn_order, _) = inner_group(&q);
            let data = json!({
                "order": q.order(),
                "latin": p.latin,
                "semi_latin": p.semi_latin,
                "commutative": p.commutative,
                "connected": p.connected,
                "faithful": p.faithful,
                "involutory": p.involutory,
                "almost_latin_degree": p.almost_latin_degree,
                "inn_order": inn_order,
            });
            if json {
                let mut doc = Document::new("props");
                doc.quandle = Some(quandle.to_string());
                doc.data = data;
                doc.print();
            } else {
                println!("quandle {quandle} (order {})", q.order());
                println!("  latin              {}", p.latin);
                println!("  semi-latin         {}", p.semi_latin);
                println!("  commutative        {}", p.commutative);
                println!("  connected          {}", p.connected);
                println!("  faithful           {}", p.faithful);
                println!("  involutory         {}", p.involutory);
                match p.almost_latin_degree {
                    Some(m) => println!("  almost-latin degree {m}"),
                    None => println!("  almost-latin degree -"),
                }
                println!("  |Inn|              {inn_order}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Delta {
            quandle,
            max_power,
            json,
        } => {
            if max_power < 2 {
                return Err("--max-power must be at least 2".into());
            }
            let q = std::sync::Arc::new(quandle.build()?);
            let symbol = delta_symbol(&quandle);
            let f = filtration(&q, max_power);
            if json {
                let mut doc = Document::new("delta");
                doc.quandle = Some(quandle.to_string());
                doc.data = json!({
                    "symbol": symbol,
                    "powers": f.powers.iter().map(claims::lattice_json).collect::<Vec<_>>(),
                    "quotients": f.quotients.iter().map(|(free, tors)| json!({
                        "free_rank": free,
                        "torsion": tors.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                doc.print();
            } else {
                println!("augmentation ideal powers for {quandle}:");
                for (i, l) in f.powers.iter().enumerate() {
                    println!("  power {}:", i + 1);
                    for line in claims::lattice_lines(l, symbol) {
                        println!("    {line}");
                    }
                    if i < f.quotients.len() {
                        let (free, tors) = &f.quotients[i];
                        println!(
                            "    quotient by the next power: {}",
                            quotient_text(*free, tors)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Idem {
            quandle,
            bound,
            aug,
            json,
        } => {
            let q = quandle.build()?;
            let set = enumerate_idempotents(&q, bound, &caps).map_err(|e| e.to_string())?;
            let show0 = aug != AugChoice::One;
            let show1 = aug != AugChoice::Zero;
            let fmt_list = |list: &[DeltaVector]| -> Vec<String> {
                list.iter().map(|v| v.display_with("E")).collect()
            };
            if json {
                let mut doc = Document::new("idem");
                doc.quandle = Some(quandle.to_string());
                doc.data = json!({
                    "bound": bound,
                    "aug0": if show0 { Some(fmt_list(&set.aug0)) } else { None },
                    "aug1": if show1 { Some(fmt_list(&set.aug1)) } else { None },
                    "aug0_count": set.aug0.len(),
                    "aug1_count": set.aug1.len(),
                });
                doc.print();
            } else {
                println!(
                    "idempotents of {quandle} with coordinates in [-{bound}, {bound}]:"
                );
                if show0 {
                    println!("  augmentation 0: {} found", set.aug0.len());
                    for v in fmt_list(&set.aug0) {
                        println!("    {v}");
                    }
                }
                if show1 {
                    println!("  augmentation 1: {} found (each is e0 + ...)", set.aug1.len());
                    for v in fmt_list(&set.aug1) {
                        println!("    e0 + {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::System {
            quandle,
            aug,
            search_box,
            json,
        } => {
            let q = quandle.build()?;
            let aug_value = match aug {
                AugChoice::Zero => 0u8,
                AugChoice::One => 1,
                AugChoice::Both => return Err("--aug must be 0 or 1 for system".into()),
            };
            let symbol = if properties(&q).commutative { "b" } else { "a" };
            let sys = build_system(&q, aug_value);
            let rendered: Vec<String> = sys
                .equations
                .iter()
                .enumerate()
                .map(|(i, eq)| eq.render(symbol, Some(i + 1)))
                .collect();
            let sols = match search_box {
                Some(bx) => Some(search_system(&sys, bx, &caps).map_err(|e| e.to_string())?),
                None => None,
            };
            if json {
                let mut doc = Document::new("system");
                doc.quandle = Some(quandle.to_string());
                doc.data = json!({
                    "aug": aug_value,
                    "num_vars": sys.num_vars,
                    "equations": rendered,
                    "search_box": search_box,
                    "solutions": sols,
                });
                doc.print();
            } else {
                println!(
                    "idempotency system of {quandle} in the augmentation-{aug_value} slice:"
                );
                for line in &rendered {
                    println!("  {line}");
                }
                if let Some(sols) = &sols {
                    println!(
                        "solutions with every variable in [-{}, {}]: {}",
                        search_box.unwrap(),
                        search_box.unwrap(),
                        sols.len()
                    );
                    for s in sols {
                        println!("  {s:?}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Aut {
            quandle,
            ring,
            bound,
            json,
        } => {
            let q = quandle.build()?;
            let auts = automorphisms(&q, &caps).map_err(|e| e.to_string())?;
            let cycles: Vec<String> = auts.iter().map(|a| cycle_notation(a)).collect();
            let mut ring_info = None;
            let mut failed_math = false;
            if ring {
                let all_ring = auts.iter().all(|sigma| {
                    let m = quandle_rings::idempotents::permutation_matrix(sigma);
                    verify_ring_morphism(&q, &m).unwrap_or(false)
                });
                let set = enumerate_idempotents(&q, bound, &caps).map_err(|e| e.to_string())?;
                let only_trivial = set.aug0.is_empty() && set.aug1.len() == q.order();
                if !all_ring {
                    failed_math = true;
                }
                ring_info = Some(json!({
                    "all_automorphisms_are_ring_automorphisms": all_ring,
                    "bound": bound,
                    "only_trivial_idempotents_in_box": only_trivial,
                }));
            }
            if json {
                let mut doc = Document::new("aut");
                doc.quandle = Some(quandle.to_string());
                doc.data = json!({
                    "count": auts.len(),
                    "automorphisms": cycles,
                    "ring": ring_info,
                });
                doc.print();
            } else {
                println!("automorphisms of {quandle}: {}", auts.len());
                for c in &cycles {
                    println!("  {c}");
                }
                if let Some(info) = &ring_info {
                    println!(
                        "ring check: every automorphism induces a ring automorphism: {}",
                        info["all_automorphisms_are_ring_automorphisms"]
                    );
                    println!(
                        "idempotent box [-{bound}, {bound}]: only trivial idempotents: {}",
                        info["only_trivial_idempotents_in_box"]
                    );
                }
            }
            Ok(if failed_math {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }

        Command::Hom { from, to, json } => {
            let qf = from.build()?;
            let qt = to.build()?;
            let maps = homomorphisms(&qf, &qt, &caps).map_err(|e| e.to_string())?;
            if json {
                let mut doc = Document::new("hom");
                doc.data = json!({
                    "from": from.to_string(),
                    "to": to.to_string(),
                    "count": maps.len(),
                    "maps": maps,
                });
                doc.print();
            } else {
                println!("homomorphisms {from} -> {to}: {}", maps.len());
                for m in &maps {
                    println!("  {m:?}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Corez {
            check,
            samples,
            seed,
            depth,
            window,
            json,
        } => run_corez(check, samples, seed, depth, window, json),

        Command::Reproduce { claim, json, jobs } => run_reproduce(&claim, json, jobs, &caps),
    }
}

/// Commutative-family quandles print `f`-basis coordinates, everything
/// else the `E`-basis.
fn delta_symbol(spec: &QuandleSpec) -> &'static str {
    match spec {
        QuandleSpec::Commutative(_) => "f",
        QuandleSpec::Prod(a, b) => {
            if delta_symbol(a) == "f" && delta_symbol(b) == "f" {
                "f"
            } else {
                "E"
            }
        }
        _ => "E",
    }
}

fn quotient_text(free: usize, torsion: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for _ in 0..free {
        parts.push("Z".to_string());
    }
    for t in torsion {
        parts.push(format!("Z{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn run_corez(
    check: CorezCheck,
    samples: u64,
    seed: u64,
    depth: usize,
    window: i64,
    json: bool,
) -> Result<ExitCode, String> {
    let mut doc = Document::new("corez");
    let passed;
    match check {
        CorezCheck::Extremal | CorezCheck::Idempotent => {
            let sweep = corez::cz_idempotent_sweep(samples, seed);
            passed = sweep.all_verified;
            doc.data = json!({
                "check": if check == CorezCheck::Extremal { "extremal" } else { "idempotent" },
                "samples": sweep.samples,
                "seed": sweep.seed,
                "failures": sweep.failures,
                "all_verified": sweep.all_verified,
            });
            if !json {
                println!(
                    "{} random support->=2 elements (seed {}): u^2 != u with the chain \
                     min(u^2) < min(u) <= max(u) < max(u^2): {}",
                    sweep.samples,
                    sweep.seed,
                    if passed { "all verified" } else { "FAILURES" }
                );
            }
        }
        CorezCheck::Commutator => {
            let mut all = true;
            let mut a = -3 * samples as i64;
            let hi = 3 * samples as i64;
            let mut count = 0u64;
            while a <= hi {
                all &= corez::cz_commutator_identity(a).map_err(|e| e.to_string())?;
                a += 3;
                count += 1;
            }
            passed = all;
            doc.data = json!({ "check": "commutator", "values_checked": count, "all_passed": all });
            if !json {
                println!(
                    "commutator identity over multiples of 3 in [-{hi}, {hi}]: {}",
                    if all { "all verified" } else { "FAILURES" }
                );
            }
        }
        CorezCheck::Order => {
            let r = corez::cz_order_probe(window);
            passed = r.all_passed;
            doc.data = json!({
                "check": "order",
                "window": r.window,
                "checks": r.checks,
                "all_passed": r.all_passed,
            });
            if !json {
                println!(
                    "order probe, window {}: left multiplication preserves and right \
                     reverses on all {} checks: {}",
                    r.window, r.checks, r.all_passed
                );
            }
        }
        CorezCheck::Dyadic => {
            let r = corez::dyadic_probe(depth).map_err(|e| e.to_string())?;
            passed = r.commutative && r.idempotent;
            doc.data = json!({
                "check": "dyadic",
                "depth": r.depth,
                "closure_sizes": r.sizes,
                "commutative": r.commutative,
                "idempotent": r.idempotent,
            });
            if !json {
                println!(
                    "dyadic closure of {{0, 1}} under midpoint and reflection, sizes per \
                     round: {:?}",
                    r.sizes
                );
                println!(
                    "midpoint commutative: {}, idempotent: {}",
                    r.commutative, r.idempotent
                );
            }
        }
    }
    if json {
        doc.print();
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_reproduce(
    claim: &str,
    json: bool,
    jobs: Option<usize>,
    caps: &Caps,
) -> Result<ExitCode, String> {
    let ids: Vec<&str> = if claim == "all" {
        claims::CLAIM_IDS.to_vec()
    } else if claims::CLAIM_IDS.contains(&claim) {
        vec![claims::CLAIM_IDS
            .iter()
            .find(|&&c| c == claim)
            .copied()
            .unwrap()]
    } else {
        return Err(format!(
            "unknown claim id {claim:?}; known: {} or all",
            claims::CLAIM_IDS.join(", ")
        ));
    };

    let reports: Vec<report::ClaimReport> = match jobs {
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(|| {
                use rayon::prelude::*;
                ids.par_iter()
                    .map(|id| claims::run_claim(id, caps).expect("registered claim"))
                    .collect()
            })
        }
        _ => ids
            .iter()
            .map(|id| claims::run_claim(id, caps).expect("registered claim"))
            .collect(),
    };

    let all_pass = reports
        .iter()
        .all(|r| r.status != ClaimStatus::Fail);
    if json {
        let mut doc = Document::new("reproduce");
        doc.claims = Some(reports);
        doc.all_pass = Some(all_pass);
        doc.print();
    } else {
        for r in &reports {
            println!(
                "[{}] {} ({:.3}s)",
                r.status.text(),
                r.claim_id,
                r.wall_time_s
            );
            for line in &r.detail {
                println!("    {line}");
            }
        }
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| r.status == ClaimStatus::Fail)
            .map(|r| r.claim_id.as_str())
            .collect();
        if failed.is_empty() {
            println!("all non-evidence claims pass");
        } else {
            println!("failing claims: {}", failed.join(", "));
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
