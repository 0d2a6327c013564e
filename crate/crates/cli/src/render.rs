//! Text, JSON and LaTeX renderings. Everything here is deterministic: no
//! timestamps, no locale, fixed decimal formatting.

use std::fmt::Write;

use pi_ladder::basel::IDENTITY_LABELS;
use pi_ladder::{
    ClosedFormValue, LadderRung, PiPolynomial, Rational, Series, TrigKind, VerificationReport,
};

fn pi_power_text(p: u32) -> String {
    match p {
        0 => String::new(),
        1 => "π".to_owned(),
        _ => format!("π^{p}"),
    }
}

/// `(1/8)·π^2 - (1/4)·π·x`
pub fn poly_text(p: &PiPolynomial) -> String {
    let mut out = String::new();
    for t in p.terms().filter(|t| !t.coeff.is_zero()) {
        let negative = !t.coeff.is_positive();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        write!(out, "({})", t.coeff.abs()).unwrap();
        let pi = pi_power_text(t.pi_power);
        if !pi.is_empty() {
            write!(out, "·{pi}").unwrap();
        }
        match t.x_power {
            0 => {}
            1 => out.push_str("·x"),
            k => write!(out, "·x^{k}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_monomial(numer_abs: &str, pi_power: u32, x_power: u32) -> String {
    let mut body = String::new();
    if numer_abs != "1" {
        body.push_str(numer_abs);
    }
    match pi_power {
        0 => {}
        1 => body.push_str("\\pi"),
        p => write!(body, "\\pi^{{{p}}}").unwrap(),
    }
    match x_power {
        0 => {}
        1 => body.push_str(" x"),
        k => write!(body, " x^{{{k}}}").unwrap(),
    }
    if body.is_empty() {
        body.push('1');
    }
    body.trim_start().to_owned()
}

fn latex_term(c: &Rational, pi_power: u32, x_power: u32) -> String {
    let numer = c.numer().magnitude().to_string();
    let body = latex_monomial(&numer, pi_power, x_power);
    if c.denom() == &1.into() {
        body
    } else {
        format!("\\frac{{{body}}}{{{}}}", c.denom())
    }
}

/// `\frac{\pi^{2}}{8} - \frac{\pi x}{4}`
pub fn poly_latex(p: &PiPolynomial) -> String {
    let mut out = String::new();
    for t in p.terms().filter(|t| !t.coeff.is_zero()) {
        let negative = !t.coeff.is_positive();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&latex_term(t.coeff, t.pi_power, t.x_power));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn ladder_text(rungs: &[LadderRung]) -> String {
    let mut out = String::new();
    for r in rungs {
        writeln!(out, "s={:<3} {}  {}", r.s(), r.kind(), poly_text(r.poly())).unwrap();
    }
    out
}

pub fn ladder_json(rungs: &[LadderRung]) -> String {
    serde_json::to_string(rungs).expect("rungs serialize") + "\n"
}

pub fn ladder_latex(rungs: &[LadderRung]) -> String {
    let mut out = String::from("\\begin{tabular}{rl}\n$s$ & closed form \\\\\n\\hline\n");
    for r in rungs {
        let (trig, var) = match r.kind() {
            TrigKind::CosineForm => ("\\cos", "x"),
            TrigKind::SineForm => ("\\sin", "x"),
        };
        writeln!(
            out,
            "{} & $\\sum_{{n=0}}^{{\\infty}} \\frac{{{trig}[(2n+1){var}]}}{{(2n+1)^{{{}}}}} = {}$ \\\\",
            r.s(),
            r.s(),
            poly_latex(r.poly())
        )
        .unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn value_text(v: &ClosedFormValue) -> String {
    format!(
        "{}({}) = ({})·π^{}\n",
        v.series(),
        v.s(),
        v.coeff(),
        v.pi_power()
    )
}

pub fn value_json(v: &ClosedFormValue) -> String {
    serde_json::to_string(v).expect("value serializes") + "\n"
}

pub fn value_latex(v: &ClosedFormValue) -> String {
    let name = match v.series() {
        Series::Lambda => "\\lambda",
        Series::Zeta => "\\zeta",
        Series::Phi => "\\Phi",
    };
    format!(
        "${name}({}) = {}$\n",
        v.s(),
        latex_term(v.coeff(), v.pi_power(), 0)
    )
}

fn summary(reports: &[VerificationReport]) -> String {
    let passed = reports.iter().filter(|r| r.passed).count();
    format!("{passed}/{} checks passed\n", reports.len())
}

pub fn reports_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(
            out,
            "{} {}: exact={} numeric={} abs_error={:.3e} tol={:.3e}",
            r.status(),
            r.subject,
            r.exact,
            r.numeric,
            r.abs_error,
            r.tolerance
        )
        .unwrap();
    }
    out.push_str(&summary(reports));
    out
}

pub fn reports_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string(reports).expect("reports serialize") + "\n"
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            'π' => out.push_str("$\\pi$"),
            '·' => out.push_str("$\\cdot$"),
            _ => out.push(ch),
        }
    }
    out
}

pub fn reports_latex(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "\\begin{tabular}{lllll}\ncheck & exact & numeric & abs.\\ error & status \\\\\n\\hline\n",
    );
    for r in reports {
        writeln!(
            out,
            "{} & {} & {} & ${:.3e}$ & {} \\\\",
            latex_escape(&r.subject),
            latex_escape(&r.exact),
            latex_escape(&r.numeric),
            r.abs_error,
            r.status()
        )
        .unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn closed_label(subject: &str) -> &'static str {
    match subject {
        "J" => "-π²/6",
        "I(2)" => "-π²/3",
        "I(-2)" => "π²/6",
        "I(0)" => "π²/24",
        _ => "",
    }
}

/// Integral values first, then the identities with their statements.
pub fn quad_text(values: &[VerificationReport], identities: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in values {
        writeln!(
            out,
            "{} = {} ≈ {} {}",
            r.subject,
            r.numeric,
            closed_label(&r.subject),
            r.status()
        )
        .unwrap();
    }
    for r in identities {
        let statement = IDENTITY_LABELS
            .iter()
            .find(|(s, _)| *s == r.subject)
            .map_or("", |(_, l)| l);
        writeln!(
            out,
            "{} {}: lhs={} rhs={} abs_error={:.3e} {}",
            r.subject,
            statement,
            r.numeric,
            r.exact,
            r.abs_error,
            r.status()
        )
        .unwrap();
    }
    let all: Vec<_> = values.iter().chain(identities).cloned().collect();
    out.push_str(&summary(&all));
    out
}
