//! `lh` — command-line front end for the `lhall` library.
//!
//! Verbs: `enum`, `genfun`, `tableaux`, `paths`, `qjacobi`, `verify`,
//! `selftest`. Output is JSON (default, with a `"schema": 1` marker) or TSV.
//! Exit codes: 0 on success/PASS, 1 when a verification fails, 2 on bad
//! flags or invalid parameters.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lhall::exactmath::{parse_rat, QSeries};
use lhall::lhcomb::{enum_set, genfun_closed, genfun_enum, Variant};
use lhall::partitions::{Partition, SkewShape};
use lhall::paths::{path_from_sequence, svg_document, LatticePath, PathKind};
use lhall::qjacobi::{expansion_check, little_q_jacobi, selberg_check, SpecParams};
use lhall::tableaux::{enumerate, jacobi_trudi, ls_product, ls_series, JtForm, OrderType};

mod selftest;

#[derive(Parser)]
#[command(name = "lh", version, about = "Lecture hall tableaux toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Format {
    /// Emit JSON (default).
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated values instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List a truncated lecture hall family with weights ≤ cap.
    Enum {
        /// Family: L, Lbar, AL, or ALbar.
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Upper bound on the entry sum.
        #[arg(long)]
        cap: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Truncated generating function of a family, by enumeration or closed
    /// product.
    Genfun {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Truncation degree of the q-series.
        #[arg(long)]
        cap: usize,
        /// Expand the closed product formula.
        #[arg(long, conflicts_with = "enum")]
        closed: bool,
        /// Sum over the enumerated family (default).
        #[arg(long = "enum")]
        r#enum: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Enumerate or sum lecture hall tableaux of a skew shape.
    Tableaux {
        /// Outer shape, comma-separated parts, e.g. 6,6,4,3.
        #[arg(long)]
        shape: String,
        /// Inner shape (default empty).
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        n: u64,
        /// Order type: ge-gt, lt-le, gt-ge, or le-lt.
        #[arg(long = "type", default_value = "ge-gt")]
        otype: String,
        /// Upper bound on the entry sum.
        #[arg(long)]
        cap: u64,
        /// Print the truncated generating series.
        #[arg(long, conflicts_with_all = ["count", "list"])]
        series: bool,
        /// Print only the number of tableaux.
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every tableau.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Convert a lecture hall object to its non-intersecting lattice path.
    Paths {
        /// Anti-lecture hall composition, comma-separated.
        #[arg(long = "from-alhc", conflicts_with = "from_lhp")]
        from_alhc: Option<String>,
        /// Lecture hall partition, comma-separated.
        #[arg(long = "from-lhp")]
        from_lhp: Option<String>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Also write a deterministic SVG rendering to this path.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Little q-Jacobi polynomial computations at exact rationals.
    Qjacobi {
        #[command(subcommand)]
        sub: QjacobiCmd,
    },
    /// Verify one identity; prints PASS/FAIL and exits 1 on failure.
    Verify {
        #[command(subcommand)]
        sub: VerifyCmd,
    },
    /// Run the full regression battery.
    Selftest {
        /// Print the identity table instead of running it.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum QjacobiCmd {
    /// Monic little q-Jacobi polynomial p_n(x; a, b; q).
    Poly {
        #[arg(long)]
        n: u64,
        /// Base q as a rational, e.g. 1/3.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Closed product formula of a family against enumeration.
    Genfun {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Jacobi–Trudi determinants (h- and e-forms) against enumeration.
    Jt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        n: u64,
        #[arg(long = "type", default_value = "ge-gt")]
        otype: String,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Closed lecture hall Schur product against enumeration (straight
    /// shapes).
    Product {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u64,
        #[arg(long = "type", default_value = "ge-gt")]
        otype: String,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Schur/power expansions through mixed moment determinants at exact
    /// rationals.
    Expansion {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 10)]
        cap: usize,
    },
    /// Selberg-type multivariate moment against its closed product, with a
    /// certified truncation bound.
    Selberg {
        /// Partition λ; omit for the empty partition.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// a parameter (default −uv at u=1/5, v=2/7).
        #[arg(long, allow_hyphen_values = true, default_value = "-2/35")]
        a: String,
        /// b parameter (default −u/v at u=1/5, v=2/7).
        #[arg(long, allow_hyphen_values = true, default_value = "-7/10")]
        b: String,
        /// Lattice points per variable.
        #[arg(long, default_value_t = 50)]
        terms: u64,
        /// Required certified bound, as a rational such as 1/1000000000000000.
        #[arg(long, default_value = "1e-15")]
        tol: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // All computation is single-threaded; LH_THREADS is accepted as an
    // upper bound on parallelism and a value of 0 is rejected.
    if let Ok(t) = std::env::var("LH_THREADS") {
        match t.parse::<usize>() {
            Ok(n) if n >= 1 => {}
            _ => {
                eprintln!("error: LH_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: &str) -> lhall::error::Result<Partition> {
    if s.is_empty() || s == "0" {
        Ok(Partition::empty())
    } else {
        Partition::parse(s)
    }
}

fn parse_shape(outer: &str, inner: Option<&str>) -> lhall::error::Result<SkewShape> {
    let outer = parse_partition(outer)?;
    let inner = match inner {
        Some(s) => parse_partition(s)?,
        None => Partition::empty(),
    };
    SkewShape::new(outer, inner)
}

fn parse_seq(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect()
}

/// Accept either "p/q" rationals or the literal "1e-15" used for the default
/// Selberg tolerance.
fn parse_tol(s: &str) -> lhall::error::Result<lhall::exactmath::Rat> {
    if let Some(exp) = s.strip_prefix("1e-") {
        if let Ok(e) = exp.parse::<u32>() {
            let den = num_pow10(e);
            return parse_rat(&format!("1/{den}"));
        }
    }
    parse_rat(s)
}

fn num_pow10(e: u32) -> String {
    let mut s = String::from("1");
    s.extend(std::iter::repeat('0').take(e as usize));
    s
}

fn series_json(series: &QSeries) -> serde_json::Value {
    series.to_json()
}

fn print_series_tsv(series: &QSeries) {
    println!("deg\tu_exp\tv_exp\tcoeff");
    for deg in 0..=series.cap() {
        for (&(ue, ve), c) in series.coeff(deg).terms() {
            println!("{deg}\t{ue}\t{ve}\t{c}");
        }
    }
}

fn path_json(p: &LatticePath) -> serde_json::Value {
    serde_json::json!({
        "kind": match p.kind() { PathKind::Nw => "NW", PathKind::Ne => "NE" },
        "start_col": p.start_col(),
        "end_col": p.end_col(),
        "numerators": p.numerators(),
        "weight_q": p.weight_q(),
    })
}

fn run(cmd: Cmd) -> Result<u8, Box<dyn std::error::Error>> {
    match cmd {
        Cmd::Enum {
            variant,
            n,
            k,
            cap,
            format,
        } => {
            let variant = Variant::parse(&variant)?;
            let seqs = enum_set(variant, n, k, cap)?;
            if format.tsv {
                println!("entries\tweight\tu_exp\tv_exp");
                for s in &seqs {
                    let (ue, ve, _) = s.uv_monomial().as_monomial().unwrap();
                    let entries = s
                        .entries()
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!("{entries}\t{}\t{ue}\t{ve}", s.weight());
                }
            } else {
                let list: Vec<_> = seqs
                    .iter()
                    .map(|s| {
                        let (ue, ve, _) = s.uv_monomial().as_monomial().unwrap();
                        serde_json::json!({
                            "entries": s.entries(),
                            "weight": s.weight(),
                            "u_exp": ue,
                            "v_exp": ve,
                        })
                    })
                    .collect();
                let out = serde_json::json!({
                    "schema": 1,
                    "variant": variant.name(),
                    "n": n, "k": k, "cap": cap,
                    "count": seqs.len(),
                    "sequences": list,
                });
                println!("{}", serde_json::to_string(&out)?);
            }
            Ok(0)
        }
        Cmd::Genfun {
            variant,
            n,
            k,
            cap,
            closed,
            format,
            ..
        } => {
            let variant = Variant::parse(&variant)?;
            let series = if closed {
                genfun_closed(variant, n, k, cap)?
            } else {
                genfun_enum(variant, n, k, cap)?
            };
            if format.tsv {
                print_series_tsv(&series);
            } else {
                let out = serde_json::json!({
                    "schema": 1,
                    "variant": variant.name(),
                    "n": n, "k": k, "cap": cap,
                    "method": if closed { "closed" } else { "enum" },
                    "series": series_json(&series),
                });
                println!("{}", serde_json::to_string(&out)?);
            }
            Ok(0)
        }
        Cmd::Tableaux {
            shape,
            inner,
            n,
            otype,
            cap,
            series,
            count,
            list,
            format,
        } => {
            let shape = parse_shape(&shape, inner.as_deref())?;
            let otype = OrderType::parse(&otype)?;
            if series {
                let s = ls_series(&shape, n, otype, cap as usize)?;
                if format.tsv {
                    print_series_tsv(&s);
                } else {
                    let out = serde_json::json!({
                        "schema": 1,
                        "shape": shape.outer().parts(),
                        "inner": shape.inner().parts(),
                        "n": n, "type": otype.name(), "cap": cap,
                        "series": series_json(&s),
                    });
                    println!("{}", serde_json::to_string(&out)?);
                }
                return Ok(0);
            }
            let tabs = enumerate(&shape, n, otype, cap)?;
            if count {
                if format.tsv {
                    println!("{}", tabs.len());
                } else {
                    let out = serde_json::json!({
                        "schema": 1,
                        "shape": shape.outer().parts(),
                        "inner": shape.inner().parts(),
                        "n": n, "type": otype.name(), "cap": cap,
                        "count": tabs.len(),
                    });
                    println!("{}", serde_json::to_string(&out)?);
                }
                return Ok(0);
            }
            if list {
                if format.tsv {
                    println!("entries\tentry_sum");
                    for t in &tabs {
                        let entries = t
                            .entries()
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        println!("{entries}\t{}", t.entry_sum());
                    }
                } else {
                    let items: Vec<_> = tabs
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "shape": t.shape().outer().parts(),
                                "inner": t.shape().inner().parts(),
                                "n": t.n(),
                                "type": t.order_type().name(),
                                "entries": rows_of(t),
                                "entry_sum": t.entry_sum(),
                            })
                        })
                        .collect();
                    let out = serde_json::json!({
                        "schema": 1,
                        "count": tabs.len(),
                        "tableaux": items,
                    });
                    println!("{}", serde_json::to_string(&out)?);
                }
                return Ok(0);
            }
            Err("pass one of --series, --count, --list".into())
        }
        Cmd::Paths {
            from_alhc,
            from_lhp,
            n,
            k,
            svg,
            format,
        } => {
            let (variant, entries) = match (&from_alhc, &from_lhp) {
                (Some(s), None) => (Variant::AL, parse_seq(s)?),
                (None, Some(s)) => (Variant::L, parse_seq(s)?),
                _ => return Err("pass exactly one of --from-alhc, --from-lhp".into()),
            };
            let seq = lhall::lhcomb::BoundedSequence::new(variant, n, k, entries)?;
            let path = path_from_sequence(&seq)?;
            if let Some(out) = &svg {
                std::fs::write(out, svg_document(std::slice::from_ref(&path), 40))?;
            }
            if format.tsv {
                println!("kind\tstart_col\tend_col\tnumerators\tweight_q");
                let nums = path
                    .numerators()
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "{}\t{}\t{}\t{nums}\t{}",
                    match path.kind() {
                        PathKind::Nw => "NW",
                        PathKind::Ne => "NE",
                    },
                    path.start_col(),
                    path.end_col(),
                    path.weight_q()
                );
            } else {
                let out = serde_json::json!({
                    "schema": 1,
                    "variant": variant.name(),
                    "n": n, "k": k,
                    "sequence": seq.entries(),
                    "path": path_json(&path),
                });
                println!("{}", serde_json::to_string(&out)?);
            }
            Ok(0)
        }
        Cmd::Qjacobi { sub } => match sub {
            QjacobiCmd::Poly {
                n,
                q,
                a,
                b,
                format,
            } => {
                let params =
                    SpecParams::from_ab(parse_rat(&q)?, parse_rat(&a)?, parse_rat(&b)?)?;
                let p = little_q_jacobi(n, &params)?;
                if format.tsv {
                    println!("deg\tcoeff");
                    for (d, c) in p.coeffs().iter().enumerate() {
                        println!("{d}\t{c}");
                    }
                } else {
                    let out = serde_json::json!({
                        "schema": 1,
                        "n": n, "q": q, "a": a, "b": b,
                        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string(&out)?);
                }
                Ok(0)
            }
        },
        Cmd::Verify { sub } => run_verify(sub),
        Cmd::Selftest { list } => {
            if list {
                selftest::print_identity_table();
                Ok(0)
            } else if selftest::run_all() {
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}

/// Row-major entry arrays split by row, matching the JSON tableau format.
fn rows_of(t: &lhall::tableaux::Tableau) -> Vec<Vec<u64>> {
    let cells = t.shape().cells();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (&(i, _), &e) in cells.iter().zip(t.entries()) {
        if rows.len() < i {
            rows.resize(i, Vec::new());
        }
        rows[i - 1].push(e);
    }
    rows
}

fn verdict(name: &str, ok: bool, detail: Option<String>) -> u8 {
    if ok {
        println!("PASS {name}");
        0
    } else {
        match detail {
            Some(d) => println!("FAIL {name}: {d}"),
            None => println!("FAIL {name}"),
        }
        1
    }
}

fn series_verdict(name: &str, lhs: &QSeries, rhs: &QSeries) -> u8 {
    match lhs.first_mismatch(rhs) {
        None => verdict(name, true, None),
        Some(d) => verdict(
            name,
            false,
            Some(format!(
                "first mismatch at q^{d}: {:?} vs {:?}",
                lhs.coeff(d),
                rhs.coeff(d)
            )),
        ),
    }
}

fn run_verify(sub: VerifyCmd) -> Result<u8, Box<dyn std::error::Error>> {
    match sub {
        VerifyCmd::Genfun {
            variant,
            n,
            k,
            cap,
        } => {
            let variant = Variant::parse(&variant)?;
            let lhs = genfun_enum(variant, n, k, cap)?;
            let rhs = genfun_closed(variant, n, k, cap)?;
            Ok(series_verdict(
                &format!("genfun {} n={n} k={k} cap={cap}", variant.name()),
                &lhs,
                &rhs,
            ))
        }
        VerifyCmd::Jt {
            shape,
            inner,
            n,
            otype,
            cap,
        } => {
            let shape = parse_shape(&shape, inner.as_deref())?;
            let otype = OrderType::parse(&otype)?;
            let byenum = ls_series(&shape, n, otype, cap)?;
            let h = jacobi_trudi(&shape, n, otype, JtForm::H, cap)?;
            let e = jacobi_trudi(&shape, n, otype, JtForm::E, cap)?;
            let mut code = series_verdict(
                &format!("jt-h {} n={n} cap={cap}", otype.name()),
                &h,
                &byenum,
            );
            code |= series_verdict(
                &format!("jt-e {} n={n} cap={cap}", otype.name()),
                &e,
                &byenum,
            );
            Ok(code)
        }
        VerifyCmd::Product {
            shape,
            n,
            otype,
            cap,
        } => {
            let lam = parse_partition(&shape)?;
            let otype = OrderType::parse(&otype)?;
            let byenum = ls_series(&SkewShape::straight(lam.clone()), n, otype, cap)?;
            let closed = ls_product(&lam, n, otype, cap)?;
            Ok(series_verdict(
                &format!("product {} n={n} cap={cap}", otype.name()),
                &closed,
                &byenum,
            ))
        }
        VerifyCmd::Expansion {
            shape,
            n,
            q,
            u,
            v,
            cap,
        } => {
            let lam = parse_partition(&shape)?;
            let params = SpecParams::from_uv(parse_rat(&q)?, parse_rat(&u)?, parse_rat(&v)?)?;
            let ok = expansion_check(&lam, n, &params, cap)?;
            Ok(verdict(&format!("expansion n={n} cap={cap}"), ok, None))
        }
        VerifyCmd::Selberg {
            shape,
            n,
            q,
            a,
            b,
            terms,
            tol,
        } => {
            let lam = match shape {
                Some(s) => parse_partition(&s)?,
                None => Partition::empty(),
            };
            let params = SpecParams::from_ab(parse_rat(&q)?, parse_rat(&a)?, parse_rat(&b)?)?;
            let tol = parse_tol(&tol)?;
            let report = selberg_check(&lam, n, &params, terms)?;
            let ok = report.passes(&tol);
            Ok(verdict(
                &format!("selberg n={n} terms={terms}"),
                ok,
                Some(format!(
                    "|lhs-rhs| bound {} exceeds tolerance",
                    lhall::exactmath::format_rat(&report.bound)
                )),
            ))
        }
    }
}
