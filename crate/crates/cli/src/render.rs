use std::fmt::Write;

use operad_pbw::format::{DimReportDoc, VerdictDoc};
use operad_pbw::groebner::{GroebnerBasis, Presentation};
use operad_pbw::rational::format_q;
use operad_pbw::series::SeriesReport;

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn certification(g: &GroebnerBasis) -> String {
    if g.certified {
        format!("certified to arity {}", g.certified_arity)
    } else {
        "not certified".into()
    }
}

pub fn basis(name: &str, g: &GroebnerBasis, dims: &[usize]) -> String {
    let mut s = format!("{name}: {} elements, {} order, {}\n", g.len(), g.order.kind().name(), certification(g));
    for (e, lead) in g.elements().iter().zip(g.leading_monomials()) {
        let _ = writeln!(s, "  [{lead}]  {e}");
    }
    let _ = writeln!(s, "dims: {}", join(dims));
    s
}

pub fn verify(name: &str, g: &GroebnerBasis, max_arity: usize, nonreducing: Option<&str>) -> String {
    match nonreducing {
        None if g.certified => format!("{name}: confluent up to arity {max_arity}\n"),
        None => format!("{name}: not confluent up to arity {max_arity}\n"),
        Some(e) => format!("{name}: not confluent up to arity {max_arity}\n  irreducible S-element: {e}\n"),
    }
}

pub fn presentation(name: &str, p: &Presentation, dims: &[usize]) -> String {
    let mut s = format!("{name}: generators {}\n", p.signature.names().join(", "));
    for r in &p.relations {
        let _ = writeln!(s, "  {r}");
    }
    let _ = writeln!(s, "dims: {}", join(dims));
    s
}

pub fn series_report(r: &SeriesReport) -> String {
    let mut s = String::new();
    match &r.series {
        operad_pbw::series::SeriesData::Egf(f) => {
            let _ = writeln!(s, "series: {f}");
        }
        operad_pbw::series::SeriesData::Sym(f) => {
            let _ = writeln!(s, "character: {f}");
        }
    }
    match &r.first_violation {
        None => s.push_str("nonnegative\n"),
        Some(v) => {
            let at = match (&v.partition, v.q_exponent) {
                (Some(p), _) => format!(" at {p}"),
                (None, Some(e)) if e != 0 => format!(" at q^{e}"),
                _ => String::new(),
            };
            let _ = writeln!(s, "negative coefficient {} in degree {}{at}", format_q(&v.value), v.degree);
        }
    }
    s
}

pub fn dim_report(d: &DimReportDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "filtered:           {}", join(&d.filtered_dims));
    let _ = writeln!(s, "trivial filtered:   {}", join(&d.reference_filtered));
    let _ = writeln!(s, "graded:             {}", join(&d.graded_dims));
    let _ = writeln!(s, "trivial graded:     {}", join(&d.reference_dims));
    let verdict = if d.verdict.status == "match" {
        format!("match up to length {}", d.verdict.degree)
    } else if d.refutes {
        format!("mismatch at length {}: not PBW", d.verdict.degree)
    } else {
        format!("mismatch at length {}: undecided", d.verdict.degree)
    };
    let _ = writeln!(s, "{verdict}");
    s
}

pub fn verdict(name: &str, g: &GroebnerBasis, v: &VerdictDoc) -> String {
    let mut s = format!("{name}: {}\n", v.conclusion);
    let _ = writeln!(s, "  basis: {} elements, {}", g.len(), certification(g));
    let _ = writeln!(s, "  dim P(n):   {}", join(&v.details.operad));
    let _ = writeln!(s, "  U0(n):      {}", join(&v.details.u0));
    let _ = writeln!(s, "  forced:     {}", v.details.forced.join(" "));
    for f in &v.findings {
        let _ = writeln!(s, "  {} [{}]: {}", f.source, f.conclusion, f.detail);
    }
    s
}
