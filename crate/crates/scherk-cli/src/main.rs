//! Command-line frontend: table generation, normal-form expansion,
//! enumeration, and identity verification with deterministic output.

mod render;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scherk_core::alpha_beta::{alpha_poly, alpha_rec, beta_poly, beta_rec};
use scherk_core::exact_numbers::{
    eulerian, int, lah, stirling_first_unsigned, stirling_second, Integer,
};
use scherk_core::gamma::{gamma_by_tree_count, gamma_closed_form, gamma_table};
use scherk_core::increasing_trees::{enumerate_trees, from_dfs_sequence};
use scherk_core::multi_index::enumerate_lambda;
use scherk_core::pk_forests::{
    enumerate_distributions_with_budget, forest_from_distribution, omega, xi, xi_inverse,
    DEFAULT_ENUM_BUDGET,
};

use table::{Format, Table};

const TOOL: &str = "scherk-calculus";
const VERSION: &str = env!("CARGO_PKG_VERSION");
const BUDGET_ENV: &str = "SCHERK_BUDGET";

#[derive(Parser)]
#[command(name = "scherk", version, about = "Exact tables and identity checks for iterated f(x)D operators")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StirlingKind {
    First,
    Second,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stirling number triangle, rows 0..=n.
    Stirling {
        #[arg(long)]
        n: u64,
        /// First kind (unsigned, cycles) or second kind (partitions).
        #[arg(long, value_enum, default_value_t = StirlingKind::Second)]
        kind: StirlingKind,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Eulerian number triangle, rows 0..=n.
    Eulerian {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Lah number triangle, rows 1..=n.
    Lah {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Normal-form coefficient table of (fD)^p over the support Lambda_p.
    Gamma {
        #[arg(long)]
        p: u64,
        /// Cross-check every entry against the closed form and, within the
        /// enumeration bound, the exhaustive tree count.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Coefficients of (x^k D)^p = x^{p(k-1)} sum alpha_pm x^m D^m.
    Alpha {
        #[arg(long)]
        p: u64,
        /// Evaluation point; omit together with --poly for symbolic output.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Emit polynomials in (k-1) instead of values.
        #[arg(long)]
        poly: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Coefficients of the inverse expansion x^{kp} D^p in powers of x^k D.
    Beta {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        poly: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Rendered symbolic expansion of an iterated operator.
    Expand {
        /// Expand (fD)^p for a generic coefficient function f.
        #[arg(long = "fD", group = "what")]
        f_d: bool,
        /// Expand (x^k D)^p.
        #[arg(long = "xkD", group = "what")]
        xk_d: bool,
        /// Expand (e^{kx} D)^p.
        #[arg(long = "ekxD", group = "what")]
        ekx_d: bool,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Increasing trees on [0, p]: enumeration, counts, DFS codec.
    Trees {
        #[arg(long)]
        p: u64,
        /// List every tree as a parent array and its DFS code.
        #[arg(long, group = "mode")]
        enumerate: bool,
        /// Count trees grouped by profile.
        #[arg(long, group = "mode")]
        count: bool,
        /// Exercise the DFS codec.
        #[arg(long, group = "mode")]
        codec: bool,
        /// With --codec: verify the roundtrip on all p! trees.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Ball/urn distributions for (x^k D)^p and their forests.
    Forests {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        /// List distributions with the root out-degrees of their triples.
        #[arg(long, group = "mode")]
        enumerate: bool,
        /// Print each forest's colored tree (edge list with colors).
        #[arg(long, group = "mode")]
        omega: bool,
        /// Check the forest <-> triple roundtrip on every object.
        #[arg(long, group = "mode")]
        roundtrip: bool,
        /// Enumeration budget override.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a named identity suite (or `all`).
    Verify {
        /// Suite name: stirling-rows, gamma-three-way, gamma-identities,
        /// operator, eigen, alpha-beta, matrix-count, bijection, codec, all.
        suite: String,
        #[arg(long, default_value_t = 6)]
        pmax: u64,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
        #[arg(long, default_value_t = 8)]
        n: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn budget_from(flag: Option<u64>) -> Result<u64, String> {
    if let Some(b) = flag {
        if b == 0 {
            return Err("budget must be positive".into());
        }
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| format!("invalid {BUDGET_ENV} value: {s}")),
        Err(_) => Ok(DEFAULT_ENUM_BUDGET),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<bool, String> {
    match cmd {
        Cmd::Stirling { n, kind, format } => {
            let (command, f): (&str, fn(u64, u64) -> Integer) = match kind {
                StirlingKind::First => ("stirling --kind first", stirling_first_unsigned),
                StirlingKind::Second => ("stirling --kind second", stirling_second),
            };
            triangle(command, n, 0, f, format.format);
            Ok(true)
        }
        Cmd::Eulerian { n, format } => {
            triangle("eulerian", n, 0, eulerian, format.format);
            Ok(true)
        }
        Cmd::Lah { n, format } => {
            let mut t = Table::new("lah", &["n", "m", "value"]);
            for row in 1..=n {
                for m in 1..=row {
                    t.push(vec![
                        row.to_string(),
                        m.to_string(),
                        lah(row, m).map_err(|e| e.to_string())?.to_string(),
                    ]);
                }
            }
            t.emit(format.format);
            Ok(true)
        }
        Cmd::Gamma { p, check, format } => gamma_cmd(p, check, format.format),
        Cmd::Alpha { p, k, poly, format } => {
            coefficient_family("alpha", p, k, poly, format.format)
        }
        Cmd::Beta { p, k, poly, format } => coefficient_family("beta", p, k, poly, format.format),
        Cmd::Expand { f_d, xk_d, ekx_d, p, k } => expand_cmd(f_d, xk_d, ekx_d, p, k),
        Cmd::Trees { p, enumerate, count, codec, check, format } => {
            trees_cmd(p, enumerate, count, codec, check, format.format)
        }
        Cmd::Forests { p, k, enumerate, omega, roundtrip, budget, format } => {
            forests_cmd(p, k, enumerate, omega, roundtrip, budget_from(budget)?, format.format)
        }
        Cmd::Verify { suite, pmax, kmax, n, budget } => {
            verify::run_suite(&suite, pmax, kmax, n, budget_from(budget)?)
        }
    }
}

fn triangle(command: &str, n: u64, start: u64, f: fn(u64, u64) -> Integer, format: Format) {
    let mut t = Table::new(command, &["n", "m", "value"]);
    for row in start..=n {
        for m in 0..=row {
            t.push(vec![row.to_string(), m.to_string(), f(row, m).to_string()]);
        }
    }
    t.emit(format);
}

fn gamma_cmd(p: u64, check: bool, format: Format) -> Result<bool, String> {
    if p == 0 {
        return Err("gamma needs p >= 1".into());
    }
    let table = gamma_table(p);
    let mut t = Table::new("gamma", &["a", "gamma"]);
    for (a, c) in table.terms() {
        t.push(vec![a.render(), c.to_string()]);
    }
    t.emit(format);
    if !check {
        return Ok(true);
    }
    let mut ok = true;
    for a in enumerate_lambda(p) {
        let rec = table.coefficient(&a);
        let closed = gamma_closed_form(p, &a).map_err(|e| e.to_string())?;
        if rec != closed {
            eprintln!("FAIL recurrence vs closed form at p={p} a={}: {rec} != {closed}", a.render());
            ok = false;
        }
        if let Ok(trees) = gamma_by_tree_count(p, &a) {
            if rec != trees {
                eprintln!("FAIL recurrence vs tree count at p={p} a={}: {rec} != {trees}", a.render());
                ok = false;
            }
        }
    }
    if ok {
        eprintln!("gamma cross-check passed for p={p}");
    }
    Ok(ok)
}

fn coefficient_family(
    which: &str,
    p: u64,
    k: Option<i64>,
    poly: bool,
    format: Format,
) -> Result<bool, String> {
    if p == 0 {
        return Err(format!("{which} needs p >= 1"));
    }
    if poly {
        let mut t = Table::new(&format!("{which} --poly"), &["m", "coeffs of (k-1)^d, low to high"]);
        for m in 1..=p {
            let poly = match which {
                "alpha" => alpha_poly(p, m),
                _ => beta_poly(p, m),
            }
            .map_err(|e| e.to_string())?;
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            t.push(vec![m.to_string(), coeffs.join(" ")]);
        }
        t.emit(format);
        return Ok(true);
    }
    let k = k.ok_or_else(|| format!("{which} needs --k (or --poly)"))?;
    let mut t = Table::new(which, &["m", "value"]);
    for m in 1..=p {
        let v = match which {
            "alpha" => alpha_rec(p, m, &int(k)),
            _ => beta_rec(p, m, &int(k)),
        };
        t.push(vec![m.to_string(), v.to_string()]);
    }
    t.emit(format);
    Ok(true)
}

fn expand_cmd(f_d: bool, xk_d: bool, ekx_d: bool, p: u64, k: Option<i64>) -> Result<bool, String> {
    if p == 0 {
        return Err("expand needs p >= 1".into());
    }
    if f_d {
        println!("{}", render::render_fd_normal_form(&gamma_table(p)));
        return Ok(true);
    }
    let k = k.ok_or("expand --xkD/--ekxD needs --k")?;
    if xk_d {
        println!("{}", render::render_xkd_expansion(p, k));
        return Ok(true);
    }
    if ekx_d {
        println!("{}", render::render_ekxd_expansion(p, k));
        return Ok(true);
    }
    Err("expand needs one of --fD, --xkD, --ekxD".into())
}

fn trees_cmd(
    p: u64,
    enumerate: bool,
    count: bool,
    codec: bool,
    check: bool,
    format: Format,
) -> Result<bool, String> {
    if p == 0 {
        return Err("trees needs p >= 1".into());
    }
    if p > 9 {
        return Err("trees enumeration is limited to p <= 9".into());
    }
    let all = enumerate_trees(p as usize);
    if count {
        let mut t = Table::new("trees --count", &["a", "count"]);
        for a in enumerate_lambda(p) {
            let c = all.iter().filter(|t| t.profile() == a).count();
            t.push(vec![a.render(), c.to_string()]);
        }
        t.emit(format);
        return Ok(true);
    }
    if codec {
        if check {
            let mut ok = 0usize;
            for tree in &all {
                let code = tree.to_dfs_sequence();
                if from_dfs_sequence(&code).as_ref() == Ok(tree) {
                    ok += 1;
                }
            }
            println!("{ok}/{} roundtrips pass", all.len());
            return Ok(ok == all.len());
        }
        let mut t = Table::new("trees --codec", &["code"]);
        for tree in &all {
            let code: Vec<String> = tree.to_dfs_sequence().iter().map(|v| v.to_string()).collect();
            t.push(vec![code.join(" ")]);
        }
        t.emit(format);
        return Ok(true);
    }
    // default and --enumerate both list the trees
    let _ = enumerate;
    let mut t = Table::new("trees", &["parents", "code"]);
    for tree in &all {
        let parents: Vec<String> = tree.parent_array().iter().map(usize::to_string).collect();
        let code: Vec<String> = tree.to_dfs_sequence().iter().map(|v| v.to_string()).collect();
        t.push(vec![parents.join(" "), code.join(" ")]);
    }
    t.emit(format);
    Ok(true)
}

fn forests_cmd(
    p: usize,
    k: usize,
    enumerate: bool,
    omega_mode: bool,
    roundtrip: bool,
    budget: u64,
    format: Format,
) -> Result<bool, String> {
    if k == 1 {
        return Err(
            "k = 1 has no forest coloring (the color range [1, k-1] is empty); \
             the expansion of (x D)^p is covered by `gamma` and `verify eigen`"
                .into(),
        );
    }
    let all = enumerate_distributions_with_budget(p, k, budget).map_err(|e| e.to_string())?;
    if roundtrip {
        let mut ok = 0usize;
        for d in &all {
            let f = forest_from_distribution(d).map_err(|e| e.to_string())?;
            let (t, s0) = xi(&f).map_err(|e| e.to_string())?;
            if xi_inverse(&t, &s0).as_ref() == Ok(&f) {
                ok += 1;
            }
        }
        println!("{ok}/{} roundtrips pass", all.len());
        return Ok(ok == all.len());
    }
    if omega_mode {
        let mut t = Table::new("forests --omega", &["urns", "edges"]);
        for d in &all {
            let f = forest_from_distribution(d).map_err(|e| e.to_string())?;
            let colored = omega(&f).map_err(|e| e.to_string())?;
            let urns: Vec<String> = d.urns().iter().map(usize::to_string).collect();
            let edges: Vec<String> = (1..=p)
                .map(|v| {
                    format!("{}-{}:{}", colored.tree().parent_of(v), v, colored.color_of(v))
                })
                .collect();
            t.push(vec![urns.join(" "), edges.join(" ")]);
        }
        t.emit(format);
        return Ok(true);
    }
    let _ = enumerate;
    let mut t = Table::new("forests", &["urns", "forest", "x0", "j", "m"]);
    for d in &all {
        let f = forest_from_distribution(d).map_err(|e| e.to_string())?;
        let (tree, s0) = xi(&f).map_err(|e| e.to_string())?;
        let urns: Vec<String> = d.urns().iter().map(usize::to_string).collect();
        let parents: Vec<String> = f
            .parent_map()
            .iter()
            .map(|(v, u)| format!("{v}:{u}"))
            .collect();
        t.push(vec![
            urns.join(" "),
            parents.join(" "),
            d.balls_in_x0().to_string(),
            tree.tree().out_degree(0).to_string(),
            s0.root_out_degree().to_string(),
        ]);
    }
    t.emit(format);
    Ok(true)
}
