//! Command-line interface. Every run is deterministic for a given set of
//! flags; JSON outputs carry a `schema` tag (format version v1).
//!
//! Exit codes: 0 success, 1 negative verdict (not isotopic / not realizable
//! predicate false), 2 unrealizable or unsupported construction input,
//! 3 input error, 4 geometry check failure.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use legendrian::classifier::{classify_cable, Outcome, Verdict};
use legendrian::constructor::{self, ConstructionSpec, Family};
use legendrian::front::FrontDiagram;
use legendrian::geometry::run_geometry_suite;
use legendrian::jet::{
    classify_jet, default_transverse_floor, jet_max_tb, max_sl2, transverse_cable_realizable,
    transverse_jet_realizable, transverse_realizable_and_classify, JetKnotInvariants,
    TransverseInvariants,
};
use legendrian::ranges::{mountain_range, normalize, realizable, LinkInvariants};
use legendrian::{Error, Result};

#[derive(Parser)]
#[command(name = "legendrian", version, about = "Classification of Legendrian cable links and torus knots by classical invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Compute tb, rot and pairwise linking numbers of a front-v1 diagram.
    Invariants {
        /// Path to a front-v1 JSON file.
        front: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide Legendrian isotopy of two cable-link tuples.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// First tuple "p,q,tb1,rot1,tb2,rot2".
        #[arg(long)]
        a: String,
        /// Second tuple "p,q,tb1,rot1,tb2,rot2".
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Test whether a tuple is realizable by a Legendrian cable link.
    #[command(allow_negative_numbers = true)]
    Realizable {
        /// Tuple "p,q,tb1,rot1,tb2,rot2".
        #[arg(long)]
        tuple: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate the mountain range of realizable (rot2, tb2) pairs.
    #[command(allow_negative_numbers = true)]
    Range {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        rot1: i64,
        #[arg(long)]
        floor: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a front diagram realizing prescribed invariants (front-v1 JSON).
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Torus knots in the jet space of the circle.
    #[command(subcommand)]
    Jet(JetCmd),
    /// Transverse links and knots (self-linking numbers).
    #[command(subcommand)]
    Transverse(TransverseCmd),
    /// Run the numerical verification of the jet-space contactomorphism.
    VerifyGeometry {
        #[arg(long, default_value_t = 10000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 512)]
        segments: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the front-v1 JSON here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Stabilized unknot front with the given invariants.
    #[command(allow_negative_numbers = true)]
    Unknot {
        #[arg(long)]
        tb: i64,
        #[arg(long)]
        rot: i64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Positive (p, q) torus cable with meridional companion (-m, rot1).
    #[command(allow_negative_numbers = true)]
    PositiveCable {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        rot1: i64,
        /// Cable invariants; defaults to the peak (pq-p-q, 0).
        #[arg(long)]
        tb2: Option<i64>,
        #[arg(long)]
        rot2: Option<i64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// (-1, q)-cable link realizing the full tuple.
    #[command(allow_negative_numbers = true)]
    MinusOneCable {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        rot1: i64,
        #[arg(long)]
        tb2: i64,
        #[arg(long)]
        rot2: i64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand)]
enum JetCmd {
    /// Decide Legendrian isotopy of two jet-space torus knots "n,p,tb,rot".
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Realizable (rot, tb) pairs of a jet-space (p, n) torus knot.
    #[command(allow_negative_numbers = true)]
    Range {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        /// Floor in jet tb coordinates; defaults to 8 below the maximum.
        #[arg(long)]
        floor: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TransverseCmd {
    /// Decide transverse isotopy. Tuples: "p,q,sl1,sl2" for cable links,
    /// "n,p,sl" for jet-space torus knots.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        floor: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Realizable self-linking values of the cable component.
    #[command(allow_negative_numbers = true)]
    Range {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Companion self-linking; omit for the jet-space family.
        #[arg(long)]
        sl1: Option<i64>,
        #[arg(long)]
        floor: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn parse_ints(s: &str, n: usize, what: &str) -> Result<Vec<i64>> {
    let parts: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    match parts {
        Ok(v) if v.len() == n => Ok(v),
        _ => Err(Error::InvalidInput(format!(
            "expected {what} as {n} comma-separated integers, got {s:?}"
        ))),
    }
}

fn parse_tuple(s: &str) -> Result<LinkInvariants> {
    let v = parse_ints(s, 6, "a cable tuple \"p,q,tb1,rot1,tb2,rot2\"")?;
    normalize(LinkInvariants::new(v[0], v[1], v[2], v[3], v[4], v[5])?)
}

fn parse_jet(s: &str) -> Result<JetKnotInvariants> {
    let v = parse_ints(s, 4, "a jet tuple \"n,p,tb,rot\"")?;
    Ok(JetKnotInvariants {
        n: v[0],
        p: v[1],
        tb: v[2],
        rot: v[3],
    })
}

fn parse_transverse(s: &str) -> Result<TransverseInvariants> {
    let fields = s.split(',').count();
    if fields == 3 {
        let v = parse_ints(s, 3, "a jet transverse tuple \"n,p,sl\"")?;
        Ok(TransverseInvariants {
            q: v[0],
            p: v[1],
            sl1: None,
            sl2: v[2],
        })
    } else {
        let v = parse_ints(s, 4, "a transverse tuple \"p,q,sl1,sl2\"")?;
        Ok(TransverseInvariants {
            p: v[0],
            q: v[1],
            sl1: Some(v[2]),
            sl2: v[3],
        })
    }
}

fn tuple_json(t: &LinkInvariants) -> Value {
    json!({
        "p": t.p, "q": t.q,
        "tb1": t.tb1, "rot1": t.rot1,
        "tb2": t.tb2, "rot2": t.rot2,
    })
}

fn verdict_json(v: &Verdict, a: &LinkInvariants, b: &LinkInvariants) -> Value {
    let mut out = serde_json::to_value(v).expect("verdict serializes");
    out["schema"] = json!("verdict-v1");
    out["normalized_a"] = tuple_json(a);
    out["normalized_b"] = tuple_json(b);
    out
}

fn verdict_exit(v: &Verdict) -> u8 {
    match v.outcome {
        Outcome::Isotopic => 0,
        Outcome::NotIsotopic => 1,
        Outcome::NotRealizable => 2,
        Outcome::OutOfScope => 2,
    }
}

fn print_verdict(v: &Verdict, payload: Value, format: Format) -> u8 {
    match format {
        Format::Json => println!("{}", pretty(&payload)),
        _ => {
            println!("{:?}: {}", v.outcome, v.reason);
            if let Some(w) = &v.witness {
                let role = if w.swapped { "component 1" } else { "component 2" };
                println!("destabilization witness ({role}, max tb {}):", w.max_tb);
                for e in &w.entries {
                    println!(
                        "  peak rot {} -> {} positive, {} negative stabilizations",
                        e.peak.rot2, e.pos_stabs, e.neg_stabs
                    );
                }
            }
        }
    }
    verdict_exit(v)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json renders")
}

fn emit_front(d: &FrontDiagram, out: &OutArg) -> Result<()> {
    let mut v = d.to_front_v1()?;
    v["schema"] = json!("front-v1");
    let text = pretty(&v);
    match &out.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
            writeln!(f, "{text}").map_err(|e| Error::InvalidInput(e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Invariants { front, format } => {
            let text = std::fs::read_to_string(&front)
                .map_err(|e| Error::InvalidInput(format!("cannot read {front}: {e}")))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("bad JSON in {front}: {e}")))?;
            let d = FrontDiagram::from_front_v1(&value)?;
            let violations = legendrian::front::validate(&d);
            if !violations.is_empty() {
                let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                let payload = json!({
                    "schema": "invariants-v1",
                    "valid": false,
                    "violations": msgs,
                });
                println!("{}", pretty(&payload));
                return Ok(3);
            }
            let n = d.components.len();
            let mut comps = Vec::new();
            for c in 0..n {
                let (tb, rot) = legendrian::front::classical_invariants(&d, c)?;
                comps.push(json!({"component": c, "tb": tb, "rot": rot}));
            }
            let mut links = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let lk = legendrian::front::linking_number(&d, i, j)?;
                    links.push(json!({"a": i, "b": j, "lk": lk}));
                }
            }
            let payload = json!({
                "schema": "invariants-v1",
                "valid": true,
                "components": comps,
                "linking": links,
            });
            match format {
                Format::Json => println!("{}", pretty(&payload)),
                _ => {
                    for c in payload["components"].as_array().unwrap() {
                        println!("component {}: tb {}, rot {}", c["component"], c["tb"], c["rot"]);
                    }
                    for l in payload["linking"].as_array().unwrap() {
                        println!("lk({}, {}) = {}", l["a"], l["b"], l["lk"]);
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { a, b, format } => {
            let a = parse_tuple(&a)?;
            let b = parse_tuple(&b)?;
            let v = classify_cable(&a, &b)?;
            let payload = verdict_json(&v, &a, &b);
            Ok(print_verdict(&v, payload, format))
        }
        Command::Realizable { tuple, format } => {
            let t = parse_tuple(&tuple)?;
            let (ok, label) = realizable(&t)?;
            let payload = json!({
                "schema": "realizable-v1",
                "realizable": ok,
                "case": format!("{:?}", label.case),
                "swapped": label.swapped,
                "normalized": tuple_json(&t),
            });
            match format {
                Format::Json => println!("{}", pretty(&payload)),
                _ => println!(
                    "{} ({:?}{})",
                    if ok { "realizable" } else { "not realizable" },
                    label.case,
                    if label.swapped { ", roles swapped" } else { "" }
                ),
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Range {
            p,
            q,
            m,
            rot1,
            floor,
            format,
        } => {
            let mr = mountain_range(p, q, m, rot1, floor)?;
            match format {
                Format::Ascii => print!("{}", mr.ascii_plot()),
                Format::Json => {
                    let mut v = serde_json::to_value(&mr).expect("range serializes");
                    v["schema"] = json!("mountain-range-v1");
                    println!("{}", pretty(&v));
                }
                Format::Text => {
                    println!("max tb2 = {}", mr.max_tb2);
                    let peaks: Vec<String> =
                        mr.peaks.iter().map(|pk| pk.rot2.to_string()).collect();
                    println!("peak rot2 values: {}", peaks.join(", "));
                    println!("{} points down to floor {}", mr.points.len(), mr.floor);
                }
            }
            Ok(0)
        }
        Command::Construct(c) => {
            let (spec, out) = match c {
                ConstructCmd::Unknot { tb, rot, out } => (
                    ConstructionSpec {
                        target: LinkInvariants {
                            p: 1,
                            q: 0,
                            tb1: tb,
                            rot1: rot,
                            tb2: -1,
                            rot2: 0,
                            normalized: true,
                        },
                        family: Family::Unknot,
                    },
                    out,
                ),
                ConstructCmd::PositiveCable {
                    p,
                    q,
                    m,
                    rot1,
                    tb2,
                    rot2,
                    out,
                } => {
                    let peak = legendrian::ranges::max_tb2(p, q, m.max(1))?;
                    (
                        ConstructionSpec {
                            target: LinkInvariants {
                                p,
                                q,
                                tb1: -m,
                                rot1,
                                tb2: tb2.unwrap_or(peak),
                                rot2: rot2.unwrap_or(0),
                                normalized: true,
                            },
                            family: Family::PositiveCable,
                        },
                        out,
                    )
                }
                ConstructCmd::MinusOneCable {
                    q,
                    m,
                    rot1,
                    tb2,
                    rot2,
                    out,
                } => (
                    ConstructionSpec {
                        target: LinkInvariants {
                            p: -1,
                            q,
                            tb1: -m,
                            rot1,
                            tb2,
                            rot2,
                            normalized: true,
                        },
                        family: Family::MinusOneCable,
                    },
                    out,
                ),
            };
            let d = constructor::build(&spec)?;
            emit_front(&d, &out)?;
            Ok(0)
        }
        Command::Jet(j) => match j {
            JetCmd::Classify { a, b, format } => {
                let ka = parse_jet(&a)?;
                let kb = parse_jet(&b)?;
                let v = classify_jet(&ka, &kb)?;
                let ia = legendrian::jet::jet_to_sphere(&ka)?;
                let ib = legendrian::jet::jet_to_sphere(&kb)?;
                let payload = verdict_json(&v, &ia, &ib);
                Ok(print_verdict(&v, payload, format))
            }
            JetCmd::Range { n, p, floor, format } => {
                let top = jet_max_tb(n, p)?;
                let floor_jet = floor.unwrap_or(top - 8);
                let mr = mountain_range(
                    if n < 0 { -p } else { p },
                    n.abs(),
                    1,
                    0,
                    floor_jet - n * n,
                )?;
                let points: Vec<[i64; 2]> = mr
                    .points
                    .iter()
                    .map(|&(r, t)| [r, t + n * n])
                    .collect();
                let payload = json!({
                    "schema": "jet-range-v1",
                    "n": n,
                    "p": p,
                    "max_tb": top,
                    "floor": floor_jet,
                    "peaks": mr.peaks.iter().map(|pk| pk.rot2).collect::<Vec<_>>(),
                    "points": points,
                });
                match format {
                    Format::Json => println!("{}", pretty(&payload)),
                    _ => {
                        println!("max jet tb = {top}");
                        println!("{} points down to floor {floor_jet}", points.len());
                    }
                }
                Ok(0)
            }
        },
        Command::Transverse(t) => match t {
            TransverseCmd::Classify { a, b, floor, format } => {
                let ta = parse_transverse(&a)?;
                let tb = parse_transverse(&b)?;
                let fl = match floor {
                    Some(f) => f,
                    None => default_transverse_floor(ta.p, ta.q, ta.sl1)?
                        .min(default_transverse_floor(tb.p, tb.q, tb.sl1)?),
                };
                let v = transverse_realizable_and_classify(&ta, &tb, fl)?;
                let mut payload = serde_json::to_value(&v).expect("verdict serializes");
                payload["schema"] = json!("verdict-v1");
                payload["a"] = serde_json::to_value(ta).unwrap();
                payload["b"] = serde_json::to_value(tb).unwrap();
                payload["floor"] = json!(fl);
                Ok(print_verdict(&v, payload, format))
            }
            TransverseCmd::Range {
                p,
                q,
                sl1,
                floor,
                format,
            } => {
                let fl = match floor {
                    Some(f) => f,
                    None => default_transverse_floor(p, q, sl1)?,
                };
                let top = max_sl2(p, q, sl1)?;
                let mut values = Vec::new();
                let mut sl2 = top;
                // The floor also cuts off this listing: for split pairs, Hopf
                // links and swapped-role views the realizable sl2 values are
                // unbounded below.
                while sl2 >= fl {
                    let r = match sl1 {
                        Some(s1) => transverse_cable_realizable(p, q, s1, sl2, fl),
                        None => transverse_jet_realizable(q, p, sl2, fl),
                    };
                    match r {
                        Ok(true) => values.push(sl2),
                        Ok(false) => {}
                        Err(Error::FloorTooShallow { .. }) => break,
                        Err(e) => return Err(e),
                    }
                    sl2 -= 2;
                }
                let payload = json!({
                    "schema": "transverse-range-v1",
                    "p": p,
                    "q": q,
                    "sl1": sl1,
                    "floor": fl,
                    "max_sl2": top,
                    "values": values,
                });
                match format {
                    Format::Json => println!("{}", pretty(&payload)),
                    _ => {
                        println!("max sl2 = {top}");
                        println!(
                            "realizable values above the floor: {}",
                            values
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
                Ok(0)
            }
        },
        Command::VerifyGeometry {
            samples,
            seed,
            segments,
            format,
        } => {
            let report = run_geometry_suite(samples, seed, segments)?;
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&report).expect("report serializes");
                    v["schema"] = json!("geometry-report-v1");
                    println!("{}", pretty(&v));
                }
                _ => {
                    println!(
                        "{:<28} {:>8} {:>14} {:>10} {:>6}",
                        "check", "samples", "max residual", "tolerance", "pass"
                    );
                    for c in &report.checks {
                        println!(
                            "{:<28} {:>8} {:>14.3e} {:>10.0e} {:>6}",
                            c.name, c.samples, c.max_residual, c.tolerance, c.pass
                        );
                        for e in &c.integer_estimates {
                            println!(
                                "    {:<40} {:>12.6} -> {} (expected {})",
                                e.label, e.estimate, e.rounded, e.expected
                            );
                        }
                    }
                }
            }
            Ok(if report.pass { 0 } else { 4 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage errors land on stderr with exit code 3.
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(3);
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = match &e {
                Error::NotRealizable(_) | Error::Unsupported(_) => 2u8,
                _ => 3u8,
            };
            eprintln!("{}", json!({"error": e.to_string()}));
            ExitCode::from(code)
        }
    }
}
