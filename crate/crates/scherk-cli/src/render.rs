//! Plain-text renderers for the symbolic expansions.

use num_traits::{One, Signed, Zero};

use scherk_core::alpha_beta::alpha_rec;
use scherk_core::exact_numbers::{int, int_pow, stirling_first_unsigned, Integer};
use scherk_core::gamma::NormalForm;
use scherk_core::multi_index::MultiIndex;

/// `(fD)^p` as e.g. `f^3 D^3 + 3 f^2 f' D^2 + f (f')^2 D + f^2 f'' D`.
pub fn render_fd_normal_form(nf: &NormalForm) -> String {
    let terms: Vec<String> = nf
        .terms()
        .iter()
        .map(|(a, c)| render_fd_term(nf.p(), a, c))
        .collect();
    terms.join(" + ")
}

fn render_fd_term(p: u64, a: &MultiIndex, c: &Integer) -> String {
    let mut parts = Vec::new();
    if !c.is_one() {
        parts.push(c.to_string());
    }
    parts.push(power("f", a.get(0) + 1));
    for (i, mult) in a.iter() {
        if i == 0 {
            continue;
        }
        let d = derivative_symbol(i);
        if mult == 1 {
            parts.push(d);
        } else {
            parts.push(format!("({d})^{mult}"));
        }
    }
    parts.push(power("D", p - a.degree()));
    parts.join(" ")
}

fn derivative_symbol(order: usize) -> String {
    match order {
        1 => "f'".to_string(),
        2 => "f''".to_string(),
        3 => "f'''".to_string(),
        i => format!("f^({i})"),
    }
}

fn power(base: &str, e: u64) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

/// `(x^k D)^p` at an integer `k`, e.g. `x^4 (2 x D + x^2 D^2)` for
/// `p = 2, k = 3`.
pub fn render_xkd_expansion(p: u64, k: i64) -> String {
    let terms: Vec<(Integer, String)> = (1..=p)
        .map(|m| {
            let c = alpha_rec(p, m, &int(k));
            (c, format!("{} {}", power("x", m), power("D", m)))
        })
        .collect();
    let body = join_signed(&terms);
    let shift = (p as i64) * (k - 1);
    if shift == 0 {
        body
    } else if shift == 1 {
        format!("x ({body})")
    } else {
        format!("x^{shift} ({body})")
    }
}

/// `(e^{kx} D)^p = e^{pkx} sum_m [p brack m] k^{p-m} D^m`.
pub fn render_ekxd_expansion(p: u64, k: i64) -> String {
    let terms: Vec<(Integer, String)> = (1..=p)
        .map(|m| {
            let c = stirling_first_unsigned(p, m) * int_pow(&int(k), p - m);
            (c, power("D", m))
        })
        .collect();
    let body = join_signed(&terms);
    let pk = p as i64 * k;
    if pk == 0 {
        body
    } else {
        format!("e^({pk}x) ({body})")
    }
}

/// Join `coeff * symbol` terms with explicit signs, skipping zero terms
/// and unit coefficients.
fn join_signed(terms: &[(Integer, String)]) -> String {
    let mut out = String::new();
    for (c, sym) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(sym);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
