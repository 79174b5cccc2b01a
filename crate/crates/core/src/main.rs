use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use racg::coxeter::Racg;
use racg::davis::{chi_orb_consistency, commutator_cover, CubicalComplex};
use racg::fibration::{self, OrientationAssignment};
use racg::homology::{self, BettiVector};
use racg::io::{self, Complex};
use racg::l2;
use racg::rational::render;
use racg::simplicial::{FlagComplex, SimplicialComplex};
use racg::sphere2::{self, Certificate};
use racg::{corpus, Error, Result};

/// Invariants of right-angled Coxeter groups and their Davis complexes.
///
/// Complex arguments are JSON files, `-` for stdin, or `corpus:NAME`.
#[derive(Parser)]
#[command(name = "racg", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Accept simplicial input that is not flag by taking the flag
    /// complex of its 1-skeleton.
    #[arg(long, global = true)]
    assume_flag: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rational Betti numbers (optionally relative to a subcomplex).
    Homology {
        input: String,
        #[arg(long)]
        relative: Option<String>,
    },
    /// Is the complex a generalized homology n-sphere?
    GhsCheck {
        input: String,
        #[arg(short)]
        n: isize,
    },
    /// Is the pair a generalized homology n-disk?
    GhdCheck {
        input: String,
        #[arg(long)]
        boundary: String,
        #[arg(short)]
        n: isize,
    },
    /// Every codimension-one simplex lies in exactly two facets and links are spheres.
    Pseudomanifold { input: String },
    /// Links of simplices of codimension at most m have sphere homology.
    SphericalLinks {
        input: String,
        #[arg(short)]
        m: usize,
    },
    /// Word problem, balls, cosets and walls in W_L.
    Racg {
        /// The nerve L.
        #[arg(long)]
        nerve: String,
        #[command(subcommand)]
        cmd: RacgCmd,
    },
    /// κ(L) = Σ (−1/2)^{i+1} f_i.
    Kappa { input: String },
    /// f-vector (f_{−1}, f_0, …).
    FVector { input: String },
    /// The ball of radius N in the Davis complex.
    DavisBall {
        input: String,
        #[arg(short = 'N')]
        radius: usize,
        #[arg(long, value_enum, default_value_t = CubeFormat::Summary)]
        format: CubeFormat,
    },
    /// The commutator cover P_L.
    CommutatorCover {
        input: String,
        #[arg(long, value_enum, default_value_t = CubeFormat::Summary)]
        format: CubeFormat,
    },
    /// Gromov's link condition on P_L.
    NpcCheck { input: String },
    /// χ(P_L) against 2^p κ(L).
    ChiCheck { input: String },
    /// ℓ²-Betti numbers of an expression or a recognised complex.
    L2 {
        #[arg(long, conflicts_with = "recognize", required_unless_present = "recognize")]
        expr: Option<String>,
        #[arg(long)]
        recognize: Option<String>,
    },
    /// Σ (−1)^i β_i against κ.
    AtiyahCheck { input: String },
    /// Certify a flag 2-sphere.
    CertifyS2 {
        input: String,
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// Re-validate a certificate.
    VerifyCert { cert: PathBuf },
    /// Fibration criterion machinery.
    Fibration {
        #[command(subcommand)]
        cmd: FibCmd,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
    /// S1 □ S2 along valence-4 vertices.
    SquareCompose {
        first: String,
        first_vertex: String,
        second: String,
        second_vertex: String,
        /// Matching of link vertices as `a=b,c=d,…` (first=second).
        #[arg(long = "match")]
        matching: Option<String>,
    },
}

#[derive(Subcommand)]
enum RacgCmd {
    /// Normal form of a word (letters separated by `.`, spaces or commas).
    Nf { word: String },
    /// Elements of length at most N.
    Ball {
        #[arg(short = 'N')]
        radius: usize,
    },
    /// Spherical cosets with representative of length at most N.
    Cosets {
        #[arg(short = 'N')]
        radius: usize,
    },
    /// Nerve of a convex union of chambers (words, one per line).
    Nerve {
        #[arg(long)]
        chambers: PathBuf,
    },
}

#[derive(Subcommand)]
enum FibCmd {
    /// Quadrant census, B(l), ∂B(l) and P(l) in the octahedral model.
    LocalModel {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        l: usize,
    },
    /// The doubling fundamental domain D of the commutator subgroup.
    Domain { input: String },
    /// Disk test for the positive region of an orientation.
    Dplus(DplusArgs),
    /// Exhaustive search for an orientation with D+ a disk.
    Search { input: String },
}

#[derive(Args)]
struct DplusArgs {
    input: String,
    /// One `+` or `-` per hypersurface class.
    #[arg(long)]
    orient: String,
}

#[derive(Subcommand)]
enum CorpusCmd {
    List,
    /// Check every entry against its annotation.
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum CubeFormat {
    Summary,
    Json,
    Off,
}

/// A command result: text and JSON renderings and whether the answer
/// is affirmative.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, ok: true }
    }

    fn verdict(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, ok }
    }
}

fn read_text(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(src).map_err(|e| Error::Parse(format!("{src}: {e}")))?)
    }
}

fn load(src: &str) -> Result<Complex> {
    match src.strip_prefix("corpus:") {
        Some(name) => Ok(Complex::Flag(corpus::get(name)?)),
        None => io::parse_complex(&read_text(src)?).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{src}: {m}")),
            other => other,
        }),
    }
}

fn load_flag(src: &str, assume_flag: bool) -> Result<FlagComplex> {
    load(src)?.into_flag(assume_flag)
}

fn load_simplicial(src: &str) -> Result<SimplicialComplex> {
    Ok(load(src)?.to_simplicial())
}

fn betti_report(b: &BettiVector) -> Report {
    Report::new(format!("betti: {}", b.rendered().join(" ")), json!({ "betti": b }))
}

fn cube_report(k: &CubicalComplex, format: CubeFormat) -> Result<Report> {
    Ok(match format {
        CubeFormat::Json => Report::new(k.to_json().to_string(), k.to_json()),
        CubeFormat::Off => Report::new(k.to_off(), json!({ "off": k.to_off() })),
        CubeFormat::Summary => {
            let counts = k.cell_counts();
            let betti = k.betti()?;
            let text = format!(
                "cells by dimension: {:?}\nEuler characteristic: {}\nbetti: {}",
                counts,
                k.euler_characteristic(),
                betti.rendered().join(" ")
            );
            Report::new(text, json!({ "cells": counts, "euler_characteristic": k.euler_characteristic(), "betti": betti }))
        }
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let af = cli.assume_flag;
    match &cli.cmd {
        Cmd::Homology { input, relative } => {
            let k = load_simplicial(input)?;
            let b = match relative {
                Some(sub) => homology::relative_betti(&k, &load_simplicial(sub)?)?,
                None => homology::betti(&k),
            };
            Ok(betti_report(&b))
        }
        Cmd::GhsCheck { input, n } => {
            let r = homology::is_ghs(&load_simplicial(input)?, *n)?;
            Ok(Report::verdict(r, yes_no(r), json!({ "ghs": r, "n": n })))
        }
        Cmd::GhdCheck { input, boundary, n } => {
            let r = homology::is_ghd(&load_simplicial(input)?, &load_simplicial(boundary)?, *n)?;
            Ok(Report::verdict(r, yes_no(r), json!({ "ghd": r, "n": n })))
        }
        Cmd::Pseudomanifold { input } => {
            let r = homology::is_pseudomanifold(&load_simplicial(input)?)?;
            Ok(Report::verdict(r, yes_no(r), json!({ "pseudomanifold": r })))
        }
        Cmd::SphericalLinks { input, m } => {
            let r = homology::spherical_links_codim(&load_simplicial(input)?, *m)?;
            Ok(Report::verdict(r, yes_no(r), json!({ "spherical_links": r, "m": m })))
        }
        Cmd::Racg { nerve, cmd } => run_racg(Racg::new(load_flag(nerve, af)?), cmd),
        Cmd::Kappa { input } => {
            let k = render(&load_flag(input, af)?.kappa());
            Ok(Report::new(k.clone(), json!({ "kappa": k })))
        }
        Cmd::FVector { input } => {
            let f = load(input)?.to_simplicial().f_vector();
            Ok(Report::new(f.to_string(), json!({ "f_vector": f.as_slice() })))
        }
        Cmd::DavisBall { input, radius, format } => {
            let w = Racg::new(load_flag(input, af)?);
            cube_report(&w.davis_ball(*radius), *format)
        }
        Cmd::CommutatorCover { input, format } => cube_report(&commutator_cover(&load_flag(input, af)?)?, *format),
        Cmd::NpcCheck { input } => {
            let r = commutator_cover(&load_flag(input, af)?)?.npc_check();
            Ok(Report::verdict(r, yes_no(r), json!({ "npc": r })))
        }
        Cmd::ChiCheck { input } => {
            let r = chi_orb_consistency(&load_flag(input, af)?)?;
            let text = format!(
                "χ(P_L) = {}\n2^{} κ(L) = {}\nconsistent: {}",
                r.chi_cover,
                r.generators,
                render(&r.scaled_kappa),
                r.consistent
            );
            Ok(Report::verdict(r.consistent, text, serde_json::to_value(&r)?))
        }
        Cmd::L2 { expr, recognize } => {
            let r = match (expr, recognize) {
                (Some(e), _) => l2::evaluate_text(e)?,
                (None, Some(src)) => l2::l2_betti_of_complex(&load_flag(src, af)?),
                (None, None) => return Err(Error::Precondition("give --expr or --recognize".into())),
            };
            if !r.satisfies_denominator_bound() {
                return Err(Error::LemmaViolation("denominator bound 2^{dim+1} violated".into()));
            }
            Ok(Report::new(r.summary(), serde_json::to_value(&r)?))
        }
        Cmd::AtiyahCheck { input } => {
            let r = l2::atiyah_check(&load_flag(input, af)?);
            if r.consistent == Some(false) {
                return Err(Error::LemmaViolation(format!(
                    "alternating sum {:?} differs from κ {:?}",
                    r.alternating_sum, r.kappa
                )));
            }
            let text = format!(
                "Σ (−1)^i β_i = {}\nκ = {}\nconsistent: {}",
                r.alternating_sum.as_deref().unwrap_or("unknown"),
                r.kappa.as_deref().unwrap_or("unknown"),
                r.consistent.map_or("undetermined", |b| yes_no(b))
            );
            Ok(Report::new(text, serde_json::to_value(&r)?))
        }
        Cmd::CertifyS2 { input, emit_cert } => {
            let l = load_flag(input, af)?;
            let cert = sphere2::certify(&l)?;
            let summary = sphere2::verify(&cert).map_err(|e| Error::LemmaViolation(format!("own certificate rejected: {e}")))?;
            if let Some(path) = emit_cert {
                std::fs::write(path, serde_json::to_string_pretty(&cert.to_json())?)?;
            }
            let text = format!(
                "certified: {} ({} nodes, {} suspension leaves, {} Andreev leaves); κ = 0",
                cert.root.kind(),
                summary.nodes,
                summary.suspension_leaves,
                summary.andreev_leaves
            );
            Ok(Report::new(text, cert.to_json()))
        }
        Cmd::VerifyCert { cert } => {
            let text = std::fs::read_to_string(cert)?;
            match Certificate::from_json(&text).and_then(|c| sphere2::verify(&c)) {
                Ok(s) => Ok(Report::new(
                    format!("valid: {} nodes, depth {}", s.nodes, s.max_depth),
                    json!({ "valid": true, "nodes": s.nodes, "depth": s.max_depth }),
                )),
                Err(e) => Ok(Report::verdict(false, format!("invalid: {e}"), json!({ "valid": false, "reason": e.to_string() }))),
            }
        }
        Cmd::Fibration { cmd } => run_fibration(cmd, af),
        Cmd::Corpus { cmd } => match cmd {
            CorpusCmd::List => {
                let lines: Vec<String> =
                    corpus::ENTRIES.iter().map(|e| format!("{:<24} {}", e.name, e.description)).collect();
                let names: Vec<&str> = corpus::ENTRIES.iter().map(|e| e.name).collect();
                Ok(Report::new(lines.join("\n"), json!({ "entries": names })))
            }
            CorpusCmd::Check => {
                let (lines, ok) = corpus::check();
                Ok(Report::verdict(ok, lines.join("\n"), json!({ "ok": ok, "lines": lines })))
            }
        },
        Cmd::SquareCompose { first, first_vertex, second, second_vertex, matching } => {
            let pairs = matching
                .as_deref()
                .map(|m| {
                    m.split(',')
                        .map(|p| {
                            p.split_once('=')
                                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                                .ok_or_else(|| Error::Parse(format!("matching entry `{p}`: expected a=b")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            let c = sphere2::square_compose(
                &load_flag(first, af)?,
                first_vertex,
                &load_flag(second, af)?,
                second_vertex,
                pairs.as_deref(),
            )?;
            let j = io::flag_to_json(&c);
            Ok(Report::new(j.to_string(), j))
        }
    }
}

fn run_racg(w: Racg, cmd: &RacgCmd) -> Result<Report> {
    match cmd {
        RacgCmd::Nf { word } => {
            let nf = w.normal_form_of(word)?;
            let r = w.render(&nf);
            Ok(Report::new(r.clone(), json!({ "normal_form": r, "length": nf.len() })))
        }
        RacgCmd::Ball { radius } => {
            let elems: Vec<String> = w.ball(*radius).iter().map(|x| w.render(x)).collect();
            Ok(Report::new(elems.join("\n"), json!({ "elements": elems })))
        }
        RacgCmd::Cosets { radius } => {
            let poset = w.spherical_cosets(*radius);
            let rows = w.coset_rows(&poset);
            let text: Vec<String> = poset
                .cosets
                .iter()
                .map(|c| {
                    let labels: Vec<&str> = c.simplex.iter().map(|&s| w.generator_label(s)).collect();
                    format!("{} W{{{}}}", w.render(&c.rep), labels.join(","))
                })
                .collect();
            Ok(Report::new(text.join("\n"), rows))
        }
        RacgCmd::Nerve { chambers } => {
            let words: Vec<String> = std::fs::read_to_string(chambers)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect();
            let cs = w.parse_chambers(&words)?;
            let nerve = w.nerve_of_convex_union(&cs)?;
            let j = io::flag_to_json(&nerve);
            Ok(Report::new(j.to_string(), j))
        }
    }
}

fn run_fibration(cmd: &FibCmd, af: bool) -> Result<Report> {
    match cmd {
        FibCmd::LocalModel { n, l } => {
            let census = fibration::quadrants(*n)?.len();
            let b = fibration::ball_b(*n, *l)?;
            let db = fibration::boundary_b(*n, *l)?;
            let ball = homology::is_homology_ball(&b);
            let sphere = homology::has_sphere_homology(&db, *n as isize - 2);
            let p = fibration::sheet(*n, *l)?;
            let text = format!(
                "quadrants: {census} (n·2^(n−1) = {})\nB({l}): {} facets, {:?}\n∂B({l}): f = {}, homology sphere S^{}: {}\nP({l}): f = {}",
                n << (n - 1),
                b.facets().len(),
                ball.verdict,
                db.f_vector(),
                *n as isize - 2,
                sphere,
                p.f_vector()
            );
            let j = json!({
                "quadrants": census,
                "ball": io::simplicial_to_json(&b),
                "ball_report": ball,
                "boundary": io::simplicial_to_json(&db),
                "boundary_is_sphere": sphere,
                "sheet": io::simplicial_to_json(&p),
            });
            Ok(Report::verdict(ball.is_ball() && sphere, text, j))
        }
        FibCmd::Domain { input } => {
            let w = Racg::new(load_flag(input, af)?);
            let d = fibration::doubling_domain(&w)?;
            let text = format!(
                "chambers: {} (bijective onto (Z/2)^{})\nboundary panels: {} (paired by the commutator subgroup)\nhypersurface classes: {}",
                d.chambers.len(),
                w.rank(),
                d.panels.len(),
                d.class_count()
            );
            Ok(Report::new(text, d.to_json(&w)))
        }
        FibCmd::Dplus(DplusArgs { input, orient }) => {
            let w = Racg::new(load_flag(input, af)?);
            let d = fibration::doubling_domain(&w)?;
            let o = OrientationAssignment::parse(orient)?;
            let r = fibration::dplus_check(&w, &d, &o)?;
            Ok(Report::verdict(r.is_disk, r.conclusion(), r.to_json()))
        }
        FibCmd::Search { input } => {
            let w = Racg::new(load_flag(input, af)?);
            let d = fibration::doubling_domain(&w)?;
            match fibration::search_orientations(&w, &d)? {
                Some(o) => Ok(Report::new(
                    format!("found orientation {} over {} classes", o.render(), d.class_count()),
                    json!({ "found": true, "orientation": o.render(), "classes": d.class_count() }),
                )),
                None => Ok(Report::verdict(
                    false,
                    format!("no orientation of the {} classes makes D+ a disk", d.class_count()),
                    json!({ "found": false, "classes": d.class_count() }),
                )),
            }
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::LemmaViolation(_) => 3,
        Error::InvalidCertificate(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let body = if cli.json { serde_json::to_string_pretty(&r.json).expect("json output") } else { r.text };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
