//! JSON renderings shared by the command-line tool and the C interface.
//!
//! Rationals are `"num/den"` strings (integers too, as `"n/1"`),
//! prime-field elements are residue strings, monomials are exponent arrays
//! and polynomials are lists of `[coefficient, exponents]` pairs. Object keys
//! come out sorted, so identical inputs give byte-identical output.

use serde_json::{json, Value};

use crate::binomial::{BinomialNormalForm, ClassificationReport, CrossValidation};
use crate::inverse::HilbertData;
use crate::lefschetz::LefschetzReport;
use crate::poly::Polynomial;

pub const SCHEMA_VERSION: &str = "1";

/// `{schema_version, command, input, result}`.
pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input,
        "result": result,
    })
}

pub fn lowercase_names(names: &[String]) -> Vec<String> {
    names.iter().map(|n| n.to_lowercase()).collect()
}

pub fn polynomial(p: &Polynomial) -> Value {
    p.to_json()
}

pub fn normal_form(nf: &BinomialNormalForm, names: &[String]) -> Value {
    json!({
        "n": nf.n,
        "a": nf.a,
        "b": nf.b,
        "r": nf.r,
        "c": nf.c.to_canonical_string(),
        "scale": nf.scale.to_canonical_string(),
        "degree": nf.degree,
        "variable_map": nf.variable_map.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
        "tensor_factors": nf
            .tensor_factors
            .iter()
            .map(|t| json!({"variable": names[t.variable], "exponent": t.exponent}))
            .collect::<Vec<_>>(),
    })
}

pub fn classification(report: &ClassificationReport, names: &[String]) -> Value {
    let ring_names = lowercase_names(names);
    let generators = report.generators.as_ref().map(|gens| {
        gens.iter()
            .map(|g| json!({"terms": polynomial(g), "text": g.display_with(&ring_names).to_string()}))
            .collect::<Vec<_>>()
    });
    json!({
        "is_ci": report.is_ci,
        "reason": report.reason.as_str(),
        "mirrored": report.mirrored,
        "q": report.q,
        "m": report.m,
        "witness_index": report.witness_index,
        "normal_form": normal_form(&report.normal_form, names),
        "generators": generators,
    })
}

pub fn verification(cv: &CrossValidation) -> Value {
    json!({
        "agrees": cv.agrees(),
        "oracle_is_ci": cv.oracle_is_ci,
        "oracle_mu": cv.oracle_mu,
        "generators_match": cv.generators_match,
    })
}

pub fn hilbert(h: &HilbertData) -> Value {
    json!({
        "socle_degree": h.socle_degree,
        "h_vector": h.h_vector,
        "palindromic": h.is_palindromic(),
        "total_dimension": h.total_dimension(),
    })
}

pub fn lefschetz(report: &LefschetzReport, names: &[String]) -> Value {
    let ring_names = lowercase_names(names);
    json!({
        "ell": polynomial(&report.ell),
        "ell_text": report.ell.display_with(&ring_names).to_string(),
        "characteristic": report.characteristic,
        "mode": report.mode,
        "h_vector": report.h_vector,
        "wlp": report.wlp,
        "slp": report.slp,
        "first_failure": report.first_failure.map(|(i, k)| json!({"i": i, "k": k})),
        "trials": report.trials,
        "certified": report.certified,
        "exhaustive": report.exhaustive,
        "rank_table": report.rank_table,
    })
}
