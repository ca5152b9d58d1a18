use clap::{Parser, Subcommand, ValueEnum};
use stlab::campaigns::{
    campaign_ce_gap, campaign_cycle_extension, campaign_pancyclicity, campaign_qform,
    campaign_triangle_free, campaign_z_family, CampaignReport, Source,
};
use stlab::canon::canonical_graph;
use stlab::constructions::{
    blow_up, c5_blowup, complete_graph, complete_minus_edge, cycle_graph, join, z_graph,
};
use stlab::enumerate::{canonical_dedup, generate, Filters, PostFilter, PruneFilter};
use stlab::graph::Graph;
use stlab::properties::{summarize, StQuery};
use stlab::qforms::{brute_force_extrema, cycle_form_lower, path_form_bounds, FormKind};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "stlab", version, about = "Exact small-graph verification engine")]
struct Cli {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true, env = "STLAB_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification campaign
    Campaign {
        /// pancyclicity | cycle-extension | ce-gap | triangle-free | qform | z-family
        name: String,
        /// Order or order range, e.g. 9, 7..9 or 7,8,9
        #[arg(long)]
        n: Option<String>,
        /// Degree parameter for the triangle-free campaign (2, 4 or 6)
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        report: ReportFormat,
        /// Read the population as graph6 lines from a file ('-' for stdin)
        #[arg(long)]
        input: Option<String>,
        /// Allow populations above the default order ceiling
        #[arg(long)]
        big: bool,
    },
    /// Print the property summary of one graph (graph6 or "n; u-v,..." edge list)
    Check {
        graph: String,
        /// Print the full property summary (the default)
        #[arg(long, default_value_t = true)]
        props: bool,
    },
    /// Emit a named graph family
    Construct {
        /// cycle | complete | complete-minus-edge | c5-blowup | z | blowup | join
        family: String,
        /// Numeric parameters (order, multiplicity, ...)
        params: Vec<usize>,
        /// Base graph (graph6) for blowup; sides for join are --base and --other
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        other: Option<String>,
        #[arg(long, default_value = "g6")]
        format: String,
    },
    /// Stream one canonical graph6 line per isomorphism class
    Enumerate {
        #[arg(long)]
        n: usize,
        /// triangle-free | st:S,T | max-edges:M (repeatable)
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// min-degree:D | kconn:K (repeatable)
        #[arg(long = "post")]
        posts: Vec<String>,
        /// Deduplicate/filter an external graph6 stream instead of generating
        #[arg(long)]
        input: Option<String>,
    },
    /// Print the closed-form-vs-oracle quadratic form table as CSV
    Qform {
        #[arg(long, default_value_t = 14)]
        max: usize,
    },
}

fn parse_orders(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| format!("bad range {text:?}"))?;
        let hi: usize = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| format!("bad range {text:?}"))?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad order {s:?}")))
        .collect()
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    if text.contains(';') {
        Graph::from_edge_list(text).map_err(|e| e.to_string())
    } else {
        Graph::from_graph6(text).map_err(|e| e.to_string())
    }
}

fn read_graph6_stream(path: &str) -> Result<Vec<Graph>, String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| e.to_string())?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| Graph::from_graph6(l).map_err(|e| format!("{l:?}: {e}")))
        .collect()
}

fn parse_filters(filters: &[String], posts: &[String]) -> Result<Filters, String> {
    let mut out = Filters::none();
    for f in filters {
        let f = f.trim();
        if f == "triangle-free" {
            out = out.with_prune(PruneFilter::TriangleFree);
        } else if let Some(rest) = f.strip_prefix("st:") {
            let (s, t) = rest
                .split_once(',')
                .ok_or_else(|| format!("expected st:S,T in {f:?}"))?;
            let s: usize = s.trim().parse().map_err(|_| format!("bad s in {f:?}"))?;
            let t: u64 = t.trim().parse().map_err(|_| format!("bad t in {f:?}"))?;
            let q = StQuery::new(s, t).map_err(|e| e.to_string())?;
            out = out.with_prune(PruneFilter::StHereditary(q));
        } else if let Some(m) = f.strip_prefix("max-edges:") {
            let m: u64 = m.trim().parse().map_err(|_| format!("bad bound in {f:?}"))?;
            out = out.with_prune(PruneFilter::MaxEdges(m));
        } else {
            return Err(format!("unknown filter {f:?}"));
        }
    }
    for p in posts {
        let p = p.trim();
        if let Some(d) = p.strip_prefix("min-degree:") {
            let d: usize = d.trim().parse().map_err(|_| format!("bad degree in {p:?}"))?;
            out = out.with_post(PostFilter::MinDegree(d));
        } else if let Some(k) = p.strip_prefix("kconn:") {
            let k: usize = k.trim().parse().map_err(|_| format!("bad k in {p:?}"))?;
            out = out.with_post(PostFilter::ConnectivityAtLeast(k));
        } else {
            return Err(format!("unknown post filter {p:?}"));
        }
    }
    Ok(out)
}

fn load_source(input: &Option<String>) -> Result<Source, String> {
    match input {
        None => Ok(Source::Generated),
        Some(path) => Ok(Source::External(read_graph6_stream(path)?)),
    }
}

fn run_campaign(
    name: &str,
    n: Option<String>,
    p: Option<usize>,
    input: Option<String>,
    big: bool,
) -> Result<CampaignReport, String> {
    let source = load_source(&input)?;
    let orders = |default: Vec<usize>| -> Result<Vec<usize>, String> {
        match &n {
            Some(text) => parse_orders(text),
            None => Ok(default),
        }
    };
    let ceiling = |orders: &[usize], cap: usize| -> Result<(), String> {
        if !big && orders.iter().any(|&n| n > cap) {
            return Err(format!(
                "orders above {cap} are gated behind --big for this campaign"
            ));
        }
        Ok(())
    };
    match name {
        "pancyclicity" => {
            let orders = orders(vec![7, 8, 9])?;
            ceiling(&orders, 9)?;
            campaign_pancyclicity(&orders, &source).map_err(|e| e.to_string())
        }
        "cycle-extension" => {
            let orders = orders(vec![7, 8])?;
            ceiling(&orders, 9)?;
            campaign_cycle_extension(&orders, &source).map_err(|e| e.to_string())
        }
        "ce-gap" => {
            let orders = orders(vec![9])?;
            if orders.len() != 1 {
                return Err("ce-gap takes a single order".into());
            }
            ceiling(&orders, 9)?;
            campaign_ce_gap(orders[0], &source).map_err(|e| e.to_string())
        }
        "triangle-free" => {
            let p = p.unwrap_or(2);
            let (default, cap) = match p {
                2 => (vec![7, 8, 9], 9),
                4 => (vec![11], 11),
                _ => (Vec::new(), usize::MAX),
            };
            let orders = match &n {
                Some(text) => parse_orders(text)?,
                None => default,
            };
            if p != 6 {
                ceiling(&orders, cap)?;
            }
            campaign_triangle_free(p, &orders, &source).map_err(|e| e.to_string())
        }
        "qform" => {
            let max = match &n {
                Some(text) => {
                    let orders = parse_orders(text)?;
                    *orders.iter().max().expect("nonempty")
                }
                None => 14,
            };
            campaign_qform(max).map_err(|e| e.to_string())
        }
        "z-family" => {
            let orders = orders((7..=16).collect())?;
            campaign_z_family(&orders).map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown campaign {other:?}; expected pancyclicity, cycle-extension, ce-gap, \
             triangle-free, qform or z-family"
        )),
    }
}

fn emit_graph(g: &Graph, format: &str) -> Result<(), String> {
    match format {
        "g6" => println!("{}", g.to_graph6().map_err(|e| e.to_string())?),
        "edges" => println!("{}", g.to_edge_list()),
        other => return Err(format!("unknown format {other:?} (use g6 or edges)")),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match cli.command {
        Command::Campaign {
            name,
            n,
            p,
            report,
            input,
            big,
        } => {
            let result = run_campaign(&name, n, p, input, big)?;
            match report {
                ReportFormat::Json => println!("{}", result.to_json()),
                ReportFormat::Csv => print!("{}", result.to_csv()),
            }
            Ok(result.passed())
        }
        Command::Check { graph, props: _ } => {
            let g = parse_graph(&graph)?;
            let summary = summarize(&g);
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).map_err(|e| e.to_string())?
            );
            Ok(true)
        }
        Command::Construct {
            family,
            params,
            base,
            other,
            format,
        } => {
            let arg = |i: usize| -> Result<usize, String> {
                params
                    .get(i)
                    .copied()
                    .ok_or_else(|| format!("{family} needs a numeric parameter"))
            };
            let g = match family.as_str() {
                "cycle" => cycle_graph(arg(0)?),
                "complete" => complete_graph(arg(0)?),
                "complete-minus-edge" => complete_minus_edge(arg(0)?),
                "c5-blowup" => c5_blowup(arg(0)?),
                "z" => z_graph(arg(0)?),
                "blowup" => {
                    let base = base.ok_or("blowup needs --base <graph6>")?;
                    let base = parse_graph(&base)?;
                    blow_up(&base, arg(0)?)
                }
                "join" => {
                    let a = parse_graph(&base.ok_or("join needs --base <graph6>")?)?;
                    let b = parse_graph(&other.ok_or("join needs --other <graph6>")?)?;
                    join(&a, &b)
                }
                other => {
                    return Err(format!(
                        "unknown family {other:?}; expected cycle, complete, \
                         complete-minus-edge, c5-blowup, z, blowup or join"
                    ))
                }
            }
            .map_err(|e| e.to_string())?;
            emit_graph(&g, &format)?;
            Ok(true)
        }
        Command::Enumerate {
            n,
            filters,
            posts,
            input,
        } => {
            let filters = parse_filters(&filters, &posts)?;
            let classes = match input {
                None => generate(n, &filters).map_err(|e| e.to_string())?,
                Some(path) => {
                    let graphs = read_graph6_stream(&path)?;
                    let of_order: Vec<Graph> =
                        graphs.into_iter().filter(|g| g.order() == n).collect();
                    canonical_dedup(&of_order, &filters).map_err(|e| e.to_string())?
                }
            };
            for g in &classes {
                let canon = canonical_graph(g).map_err(|e| e.to_string())?;
                println!("{}", canon.to_graph6().map_err(|e| e.to_string())?);
            }
            Ok(true)
        }
        Command::Qform { max } => {
            if !(2..=14).contains(&max) {
                return Err(format!("--max {max} outside 2..=14"));
            }
            println!(
                "n,k,path_lower,path_upper,oracle_path_min,oracle_path_max,cycle_lower,oracle_cycle_min"
            );
            for n in 2..=max as u64 {
                for k in 2..=n as usize {
                    let b = path_form_bounds(n, k).map_err(|e| e.to_string())?;
                    let po = brute_force_extrema(n, k, FormKind::Path).map_err(|e| e.to_string())?;
                    let c = cycle_form_lower(n, k).map_err(|e| e.to_string())?;
                    let co =
                        brute_force_extrema(n, k, FormKind::Cycle).map_err(|e| e.to_string())?;
                    println!(
                        "{n},{k},{},{},{},{},{},{}",
                        b.lower,
                        b.upper.expect("path upper is always present"),
                        po.min,
                        po.max,
                        c.lower,
                        co.min
                    );
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1), // campaign ran but found violations
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
