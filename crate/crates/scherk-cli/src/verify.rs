//! Named identity suites behind `scherk verify`.

use num_traits::Zero;

use scherk_core::alpha_beta::{
    alpha_fd, alpha_poly, alpha_rec, beta_fd, beta_poly, beta_rec, reflection_check,
    integrality_check, inverse_check, lah_check, n_pmt_formula, n_pmt_oracle,
};
use scherk_core::exact_numbers::{
    binomial, eulerian, exact_div, factorial, int, int_pow, rat, stirling_first_unsigned,
    stirling_second, Integer,
};
use scherk_core::gamma::{
    gamma_by_tree_count, gamma_closed_form, gamma_table, verify_identity_suite,
};
use scherk_core::increasing_trees::{count_by_class, enumerate_trees, from_dfs_sequence, TreeClass};
use scherk_core::multi_index::enumerate_lambda;
use scherk_core::operator_engine::{
    apply_fd_power, apply_normal_form, euler_eigen_check, seeded_series, verify_ekx_identities,
    verify_xdp_identities,
};
use scherk_core::pk_forests::{
    enumerate_distributions_with_budget, forest_from_distribution,
    verify_counting_identity_with_budget, xi, xi_inverse,
};
use scherk_core::report::Report;

const SUITES: &[&str] = &[
    "stirling-rows",
    "gamma-three-way",
    "gamma-identities",
    "operator",
    "eigen",
    "alpha-beta",
    "matrix-count",
    "bijection",
    "codec",
];

pub fn run_suite(suite: &str, pmax: u64, kmax: u64, n: u64, budget: u64) -> Result<bool, String> {
    if suite == "all" {
        let mut all_ok = true;
        for s in SUITES {
            all_ok &= run_one(s, pmax, kmax, n, budget)?;
        }
        println!("verify all: {}", if all_ok { "pass" } else { "FAIL" });
        return Ok(all_ok);
    }
    run_one(suite, pmax, kmax, n, budget)
}

fn run_one(suite: &str, pmax: u64, kmax: u64, n: u64, budget: u64) -> Result<bool, String> {
    let report = match suite {
        "stirling-rows" => stirling_rows(n),
        "gamma-three-way" => gamma_three_way(pmax),
        "gamma-identities" => {
            let mut r = Report::new();
            for p in 1..=pmax {
                r.merge(verify_identity_suite(p));
            }
            r
        }
        "operator" => operator_suite(pmax),
        "eigen" => eigen_suite(pmax, kmax),
        "alpha-beta" => alpha_beta_suite(pmax, kmax, budget).map_err(|e| e.to_string())?,
        "matrix-count" => matrix_count_suite(pmax, kmax),
        "bijection" => bijection_suite(pmax, kmax, budget).map_err(|e| e.to_string())?,
        "codec" => codec_suite(pmax),
        other => return Err(format!("unknown suite `{other}`; known: {SUITES:?}, all")),
    };
    let fails = report.checks.iter().filter(|c| !c.pass).count();
    for c in report.checks.iter().filter(|c| !c.pass) {
        println!(
            "FAIL {} [{}]: {}",
            c.name,
            c.params,
            c.detail.as_deref().unwrap_or("mismatch")
        );
    }
    println!(
        "suite {suite}: {} checks, {fails} failures",
        report.checks.len()
    );
    Ok(fails == 0)
}

fn stirling_rows(n: u64) -> Report {
    let mut r = Report::new();
    for row in 0..=n {
        let cycles: Integer = (0..=row).map(|m| stirling_first_unsigned(row, m)).sum();
        r.eq("stirling1 row sum vs factorial", format!("n={row}"), cycles, factorial(row));
        let descents: Integer = (0..row.max(1)).map(|m| eulerian(row, m)).sum();
        r.eq("eulerian row sum vs factorial", format!("n={row}"), descents, factorial(row));
    }
    r
}

fn gamma_three_way(pmax: u64) -> Report {
    let mut r = Report::new();
    for p in 1..=pmax {
        let table = gamma_table(p);
        for a in enumerate_lambda(p) {
            let rec = table.coefficient(&a);
            match gamma_closed_form(p, &a) {
                Ok(closed) => r.eq(
                    "gamma recurrence vs closed form",
                    format!("p={p} a={}", a.render()),
                    rec.clone(),
                    closed,
                ),
                Err(e) => r.fail(
                    "gamma recurrence vs closed form",
                    format!("p={p} a={}", a.render()),
                    e.to_string(),
                ),
            }
            if let Ok(trees) = gamma_by_tree_count(p, &a) {
                r.eq(
                    "gamma recurrence vs tree count",
                    format!("p={p} a={}", a.render()),
                    rec,
                    trees,
                );
            }
        }
    }
    r
}

fn operator_suite(pmax: u64) -> Report {
    const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];
    const ORDER: usize = 16;
    let mut r = Report::new();
    for p in 1..=pmax.min(6) {
        let table = gamma_table(p);
        for seed in SEEDS {
            let f = seeded_series(seed, ORDER);
            let g = seeded_series(seed.wrapping_mul(0x9e37_79b9).wrapping_add(1), ORDER);
            let direct = apply_fd_power(&f, p as usize, &g);
            let via_nf = apply_normal_form(&table, &f, &g);
            match (direct, via_nf) {
                (Ok(a), Ok(b)) => {
                    if let Some(i) = a.first_disagreement(&b) {
                        r.fail(
                            "fD power vs normal form",
                            format!("p={p} seed={seed}"),
                            format!("first disagreement at x^{i}: {} != {}", a.coeff(i), b.coeff(i)),
                        );
                    } else {
                        r.ok("fD power vs normal form", format!("p={p} seed={seed}"));
                    }
                }
                (a, b) => r.fail(
                    "fD power vs normal form",
                    format!("p={p} seed={seed}"),
                    format!("application error: {:?} / {:?}", a.err(), b.err()),
                ),
            }
        }
    }
    r
}

fn eigen_suite(pmax: u64, kmax: u64) -> Report {
    let mut r = Report::new();
    for p in 1..=pmax.min(8) {
        for k in 1..=kmax.max(2).min(5) {
            for m in 0..=10u64 {
                let (a, b) = euler_eigen_check(p, k, m);
                r.eq(
                    "iterated monomial vs eigenvalue product",
                    format!("p={p} k={k} m={m}"),
                    a,
                    b,
                );
            }
        }
        r.merge(verify_xdp_identities(p));
        for k in -(kmax as i64)..=kmax as i64 {
            r.merge(verify_ekx_identities(p, k));
        }
    }
    r
}

fn alpha_beta_suite(pmax: u64, kmax: u64, budget: u64) -> Result<Report, scherk_core::Error> {
    let mut r = Report::new();
    for p in 1..=pmax.min(8) {
        for m in 1..=p {
            let ap = alpha_poly(p, m)?;
            let bp = beta_poly(p, m)?;
            for k in 1..=kmax.min(5) as i64 {
                let ki = int(k);
                let a = alpha_rec(p, m, &ki);
                r.eq("alpha recurrence vs polynomial", format!("p={p} m={m} k={k}"), a.clone(), ap.eval_int(&ki));
                r.eq("alpha recurrence vs finite difference", format!("p={p} m={m} k={k}"), a.clone(), alpha_fd(p, m, &ki));
                let b = beta_rec(p, m, &ki);
                r.eq("beta recurrence vs polynomial", format!("p={p} m={m} k={k}"), b.clone(), bp.eval_int(&ki));
                if k != 1 {
                    let bf = beta_fd(p, m, &ki)?;
                    r.eq(
                        "beta recurrence vs finite difference",
                        format!("p={p} m={m} k={k}"),
                        rat(0, 1) + bf,
                        scherk_core::exact_numbers::Rational::from_integer(b),
                    );
                    r.merge(reflection_check(p, m, &ki)?);
                }
            }
            r.merge(lah_check(p, m));
        }
        // distribution counts give alpha a fourth, combinatorial route
        for k in 2..=kmax.min(4) as usize {
            if let Ok(all) = enumerate_distributions_with_budget(p as usize, k, budget) {
                for m in 1..=p {
                    let count = all.iter().filter(|d| d.balls_in_x0() == m as usize).count();
                    r.eq(
                        "alpha recurrence vs distribution count",
                        format!("p={p} m={m} k={k}"),
                        alpha_rec(p, m, &int(k as i64)),
                        int(count as i64),
                    );
                }
            }
        }
    }
    r.merge(inverse_check(pmax.min(10)));
    Ok(r)
}

fn matrix_count_suite(pmax: u64, kmax: u64) -> Report {
    let mut r = Report::new();
    for p in 0..=pmax.min(8) {
        for m in 0..=p {
            for t in 0..=4u64 {
                r.eq(
                    "matrix count formula vs oracle",
                    format!("p={p} m={m} t={t}"),
                    n_pmt_formula(p, m, t),
                    n_pmt_oracle(p, m, t),
                );
                if p >= 1 && m >= 1 {
                    let mut lhs = Integer::zero();
                    for j in 1..=p {
                        lhs += stirling_first_unsigned(p, j)
                            * stirling_second(j, m)
                            * int_pow(&int(t as i64), j);
                    }
                    let rhs = exact_div(&(factorial(p) * n_pmt_formula(p, m, t)), &factorial(m));
                    r.eq(
                        "stirling product sum vs matrix count",
                        format!("p={p} m={m} t={t}"),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    for p in 1..=pmax.min(6) {
        for m in 1..=p {
            for k in 2..=kmax.max(2).min(4) {
                match integrality_check(p, m, k) {
                    Ok(rep) => r.merge(rep),
                    Err(e) => r.fail(
                        "scaled |beta| vs matrix count",
                        format!("p={p} m={m} k={k}"),
                        e.to_string(),
                    ),
                }
            }
        }
    }
    r
}

fn bijection_suite(pmax: u64, kmax: u64, budget: u64) -> Result<Report, scherk_core::Error> {
    let mut r = Report::new();
    for p in 1..=pmax.min(5) as usize {
        for k in 2..=kmax.min(4) as usize {
            let all = enumerate_distributions_with_budget(p, k, budget)?;
            for m in 1..=p as u64 {
                let count = all.iter().filter(|d| d.balls_in_x0() == m as usize).count();
                r.eq(
                    "distribution histogram vs alpha",
                    format!("p={p} m={m} k={k}"),
                    int(count as i64),
                    alpha_rec(p as u64, m, &int(k as i64)),
                );
            }
            if p <= 4 && k <= 3 {
                for d in &all {
                    let f = forest_from_distribution(d)?;
                    let (t, s0) = xi(&f)?;
                    let back = xi_inverse(&t, &s0)?;
                    if back == f {
                        r.ok("forest bijection roundtrip", format!("p={p} k={k}"));
                    } else {
                        r.fail(
                            "forest bijection roundtrip",
                            format!("p={p} k={k}"),
                            format!("urns {:?}", d.urns()),
                        );
                    }
                }
            }
            r.merge(verify_counting_identity_with_budget(p, k, budget)?);
        }
    }
    Ok(r)
}

fn codec_suite(pmax: u64) -> Report {
    let mut r = Report::new();
    for p in 1..=pmax.min(7) as usize {
        let all = enumerate_trees(p);
        let ok = all
            .iter()
            .filter(|t| from_dfs_sequence(&t.to_dfs_sequence()).as_ref() == Ok(t))
            .count();
        r.eq(
            "dfs codec roundtrip count",
            format!("p={p}"),
            int(ok as i64),
            int(all.len() as i64),
        );
    }
    for p in 1..=pmax.min(8) {
        for m in 1..=(p.saturating_sub(1)).max(0) as usize {
            if let Ok(c) = count_by_class(p as usize, TreeClass::SingleInternal(m)) {
                r.eq(
                    "single-internal starlike count vs binomial",
                    format!("p={p} m={m}"),
                    c,
                    binomial(p, m as i64 + 1),
                );
            }
        }
        for m in 1..=p as usize {
            if let Ok(c) = count_by_class(p as usize, TreeClass::StarlikeMLeaves(m)) {
                r.eq(
                    "starlike leaf count vs stirling2",
                    format!("p={p} m={m}"),
                    c,
                    stirling_second(p, m as u64),
                );
            }
            if let Ok(c) = count_by_class(p as usize, TreeClass::RootMChildren(m)) {
                r.eq(
                    "root out-degree count vs stirling1",
                    format!("p={p} m={m}"),
                    c,
                    stirling_first_unsigned(p, m as u64),
                );
            }
        }
        for m in 0..p as usize {
            if let Ok(c) = count_by_class(p as usize, TreeClass::MPlusOneLeaves(m)) {
                r.eq(
                    "leaf count vs eulerian",
                    format!("p={p} m={m}"),
                    c,
                    eulerian(p, m as u64),
                );
            }
        }
    }
    r
}
