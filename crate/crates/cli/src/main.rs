use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use ladder_graphs::expr::{evaluate, format, parse};
use ladder_graphs::graph::{enumerate_compositions, to_dot};
use ladder_graphs::ladder::{commutator_powers, join_counts, multiply_monomials};
use ladder_graphs::oracle::{run_oracle_check_with, Bounds, OracleConfig};
use ladder_graphs::{DiagGraph, NormalMonomial, NormalPolynomial};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ladder", version, about = "Normal ordering of ladder operators and its graph model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order an expression such as "a ad" or "(ad a)^2".
    NormalOrder {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print [a^s, ad^k] in normal order.
    Commutator {
        s: u32,
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all compositions of two single-vertex graphs Γ(r,s) · Γ(k,l).
    Compose {
        r: u32,
        s: u32,
        k: u32,
        l: u32,
        /// Write one DOT file per composition into this directory.
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Validate a graph stored as JSON and print its projection.
    ProjectCheck {
        file: PathBuf,
        /// Fail unless the projection equals Γ(r,s).
        #[arg(long, value_name = "R,S", value_parser = parse_pair)]
        expect: Option<(u32, u32)>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the closed-form product against the graph model.
    OracleCheck {
        #[arg(long, value_name = "R,S,K,L", value_parser = parse_bounds, default_value = "4,4,4,4")]
        bounds: Bounds,
        #[arg(long, default_value_t = 200)]
        words: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_word_len: usize,
        /// Corrupt the closed form to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Render a graph stored as JSON in DOT format.
    Render {
        file: PathBuf,
        #[arg(long, default_value = "G")]
        name: String,
    },
}

fn parse_numbers(s: &str, n: usize) -> Result<Vec<u32>, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{:?}: {}", p, e)))
        .collect::<Result<_, _>>()?;
    if parts.len() != n {
        return Err(format!("expected {} comma-separated numbers, got {}", n, parts.len()));
    }
    Ok(parts)
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let v = parse_numbers(s, 2)?;
    Ok((v[0], v[1]))
}

fn parse_bounds(s: &str) -> Result<Bounds, String> {
    let v = parse_numbers(s, 4)?;
    Ok(Bounds {
        r: v[0],
        s: v[1],
        k: v[2],
        l: v[3],
    })
}

fn print_poly(p: &NormalPolynomial, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(p)?);
    } else {
        println!("{}", format(p));
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<DiagGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing graph in {}", path.display()))
}

fn compose_report(r: u32, s: u32, k: u32, l: u32, dot: Option<&Path>, json: bool) -> Result<bool> {
    let first = DiagGraph::make_vertex(r, s);
    let second = DiagGraph::make_vertex(k, l);
    let all = enumerate_compositions(&first, &second);

    // multiplicity per number of joined lines
    let mut counts = vec![0u64; s.min(k) as usize + 1];
    for g in &all {
        counts[g.edges().len()] += 1;
    }
    let formula = join_counts(s, k);
    let agrees = counts
        .iter()
        .zip(&formula)
        .all(|(c, f)| f.to_string() == c.to_string());

    if let Some(dir) = dot {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (n, g) in all.iter().enumerate() {
            let name = format!("composition_{:04}", n);
            let path = dir.join(format!("{}.dot", name));
            fs::write(&path, to_dot(g, &name)).with_context(|| format!("writing {}", path.display()))?;
        }
    }

    let target = |i: usize| NormalMonomial::new(r + k - i as u32, s + l - i as u32);
    if json {
        let classes: Vec<_> = counts
            .iter()
            .enumerate()
            .map(|(i, c)| json!({"i": i, "multiplicity": c, "r": target(i).creators, "s": target(i).annihilators}))
            .collect();
        let out = json!({
            "total": all.len(),
            "classes": classes,
            "product": multiply_monomials(NormalMonomial::new(r, s), NormalMonomial::new(k, l)),
            "formula_agrees": agrees,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("Γ^({},{}) · Γ^({},{})", r, s, k, l);
        println!("total {}", all.len());
        for (i, c) in counts.iter().enumerate() {
            println!("i={}  {}×{}", i, target(i), c);
        }
        if !agrees {
            println!("multiplicities disagree with the closed form: {:?}", formula);
        }
    }
    Ok(agrees)
}

/// Adds one to the coefficient with the most joined lines.
fn corrupted(m1: NormalMonomial, m2: NormalMonomial) -> NormalPolynomial {
    let p = multiply_monomials(m1, m2);
    let top = m1.annihilators.min(m2.creators);
    if top == 0 {
        return p;
    }
    let last = NormalMonomial::new(
        m1.creators + m2.creators - top,
        m1.annihilators + m2.annihilators - top,
    );
    &p + &NormalPolynomial::monomial(last)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::NormalOrder { expr, json } => {
            let tree = match parse(&expr) {
                Ok(t) => t,
                Err(e) => bail!("{}\n  {}\n  {}^", e, expr, " ".repeat(e.position)),
            };
            print_poly(&evaluate(&tree), json)?;
            Ok(true)
        }
        Command::Commutator { s, k, json } => {
            print_poly(&commutator_powers(s, k), json)?;
            Ok(true)
        }
        Command::Compose {
            r,
            s,
            k,
            l,
            dot,
            json,
        } => compose_report(r, s, k, l, dot.as_deref(), json),
        Command::ProjectCheck { file, expect, json } => {
            let g = read_graph(&file)?;
            let p = g.project();
            let ok = expect.is_none_or(|(r, s)| p == NormalMonomial::new(r, s));
            if json {
                let out = json!({
                    "vertices": g.vertices().len(),
                    "edges": g.edges().len(),
                    "r": p.creators,
                    "s": p.annihilators,
                    "acyclic": g.is_acyclic(),
                    "matches_expectation": ok,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!(
                    "{} vertices, {} lines, projects to {}",
                    g.vertices().len(),
                    g.edges().len(),
                    p
                );
                if let Some((r, s)) = expect {
                    println!("expected Γ^({},{}): {}", r, s, if ok { "ok" } else { "MISMATCH" });
                }
            }
            Ok(ok)
        }
        Command::OracleCheck {
            bounds,
            words,
            seed,
            max_word_len,
            inject_fault,
        } => {
            let config = OracleConfig {
                bounds,
                words,
                max_word_len,
                seed,
            };
            let report = if inject_fault {
                run_oracle_check_with(&config, &corrupted)
            } else {
                run_oracle_check_with(&config, &multiply_monomials)
            };
            println!("{}", report);
            Ok(report.passed())
        }
        Command::Render { file, name } => {
            let g = read_graph(&file)?;
            print!("{}", to_dot(&g, &name));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
