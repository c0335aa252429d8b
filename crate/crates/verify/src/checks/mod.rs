//! Named verification checks.

mod algebra_a;
mod grassmann;
mod lemmas;
mod survey;

use std::collections::BTreeMap;
use std::time::Instant;

use pi_core::algebras::{AlgebraKind, FiniteAlgebra};
use pi_core::engine::{compare_identity_spaces, Comparison, Relation, Witness};
use pi_core::free_algebra::{format, multilinearize, parse};
use pi_core::{QMultilinear, QPoly, QSubspace, Rational};

use crate::report::{CheckReport, Status, WitnessReport};
use crate::VerifyError;

/// Largest degree run without `--force`.
pub const DEGREE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Overrides each check's default maximum degree.
    pub degree_max: Option<usize>,
    pub force: bool,
}

pub(crate) struct Ctx {
    params: BTreeMap<String, String>,
    pub degree_max: usize,
    pub force: bool,
}

impl Ctx {
    pub fn usize_param(&self, key: &str, default: usize) -> Result<usize, VerifyError> {
        match self.params.get(key) {
            None => Ok(default),
            Some(v) => v
                .trim()
                .parse()
                .map_err(|_| VerifyError::Usage(format!("parameter {key} must be a nonnegative integer, got {v:?}"))),
        }
    }

    pub fn opt_usize_param(&self, key: &str) -> Result<Option<usize>, VerifyError> {
        if self.params.contains_key(key) {
            self.usize_param(key, 0).map(Some)
        } else {
            Ok(None)
        }
    }

    /// The rank parameter `n` of `F_n(A)`: even and at least 2.
    pub fn even_rank(&self) -> Result<usize, VerifyError> {
        let n = self.usize_param("n", 2)?;
        if n < 2 || n % 2 == 1 {
            return Err(VerifyError::Usage(format!(
                "n = {n}: only even n >= 2 is accepted (the statement says n >= 1 even, every proof assumes n >= 2)"
            )));
        }
        Ok(n)
    }

    /// Whether degree `d` may run.
    pub fn allows(&self, d: usize) -> bool {
        d <= DEGREE_CAP || self.force
    }
}

pub(crate) enum Ran {
    Done,
    Skipped,
}

type Runner = fn(&Ctx, &mut CheckReport) -> Result<Ran, VerifyError>;

pub struct CheckInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub gating: bool,
    pub params: &'static [&'static str],
    run: Runner,
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        name: "thm_TE",
        summary: "T(E) is generated by [x1,x2,x3]; c_n(E) = 2^(n-1)",
        gating: true,
        params: &[],
        run: grassmann::thm_te,
    },
    CheckInfo {
        name: "thm_E2k",
        summary: "T(E^(2k)) = T(E^(2k+1)) is generated by [x1,x2,x3] and a product of k+1 commutators",
        gating: true,
        params: &["k"],
        run: grassmann::thm_e2k,
    },
    CheckInfo {
        name: "thm_TA",
        summary: "T(A) is generated by [x1,x2][x3,x4,x5]",
        gating: true,
        params: &[],
        run: algebra_a::thm_ta,
    },
    CheckInfo {
        name: "cochar_A",
        summary: "proper cocharacter of A: dimensions of Gamma_m(A)",
        gating: true,
        params: &["m"],
        run: algebra_a::cochar_a,
    },
    CheckInfo {
        name: "lemma_swap",
        summary: "commutators in a product can be regrouped and permuted up to sign modulo T(A)",
        gating: true,
        params: &[],
        run: lemmas::lemma_swap,
    },
    CheckInfo {
        name: "prop_long_product",
        summary: "[x1,x2]...[x_(n+3),x_(n+4)] is an identity of F_n(A) and F_(n+1)(A)",
        gating: true,
        params: &["n"],
        run: algebra_a::prop_long_product,
    },
    CheckInfo {
        name: "lemma_f1",
        summary: "f^(1)_m is not an identity of F_n(A)",
        gating: true,
        params: &["n"],
        run: lemmas::lemma_f1,
    },
    CheckInfo {
        name: "lemma_f2",
        summary: "f^(2)_(m,i) is not an identity of F_n(A) for i <= n",
        gating: true,
        params: &["n"],
        run: lemmas::lemma_f2,
    },
    CheckInfo {
        name: "lemma_f3",
        summary: "f^(3)_(m,i) is not an identity of F_n(A) for i <= n+1",
        gating: true,
        params: &["n"],
        run: lemmas::lemma_f3,
    },
    CheckInfo {
        name: "lemma_f4",
        summary: "f^(4)_(m,i) is not an identity of F_n(A) for i <= n+1",
        gating: true,
        params: &["n"],
        run: lemmas::lemma_f4,
    },
    CheckInfo {
        name: "lemma_f5",
        summary: "f^(5)_(m,i) is not an identity of F_n(A) for i <= n+2",
        gating: true,
        params: &["n"],
        run: lemmas::lemma_f5,
    },
    CheckInfo {
        name: "main_theorem",
        summary: "T(F_n(A)) is generated by [x1,x2][x3,x4,x5] and [x1,x2]...[x_(n+3),x_(n+4)]",
        gating: true,
        params: &["n"],
        run: algebra_a::main_theorem,
    },
    CheckInfo {
        name: "an_equivalence",
        summary: "A^(n) and A^(n+1) satisfy the identities of F_n(A)",
        gating: true,
        params: &["n"],
        run: algebra_a::an_equivalence,
    },
    CheckInfo {
        name: "m11_rank2",
        summary: "identities of M11^(2) against the representative model of M11",
        gating: false,
        params: &[],
        run: survey::m11_rank2,
    },
    CheckInfo {
        name: "r2_ut2",
        summary: "R_2 and UT_2(K) satisfy the same identities",
        gating: true,
        params: &["m_max"],
        run: survey::r2_ut2,
    },
    CheckInfo {
        name: "r4_f2a",
        summary: "R_4 and F_2(A) satisfy the same identities up to degree m_max",
        gating: false,
        params: &["m_max"],
        run: survey::r4_f2a,
    },
    CheckInfo {
        name: "subvar_E",
        summary: "the chain K, E^(2), E^(4), E of subvarieties of var(E)",
        gating: true,
        params: &[],
        run: grassmann::subvar_e,
    },
];

pub fn find_check(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Runs one named check. Usage problems are errors; computational errors
/// inside a check turn into a failing report.
pub fn run_check(name: &str, params: &BTreeMap<String, String>, opts: Options) -> Result<CheckReport, VerifyError> {
    let info = find_check(name).ok_or_else(|| VerifyError::Usage(format!("unknown check {name:?}")))?;
    if let Some(bad) = params.keys().find(|k| !info.params.contains(&k.as_str())) {
        return Err(VerifyError::Usage(format!(
            "check {name} does not take parameter {bad:?} (accepted: {})",
            if info.params.is_empty() { "none".to_string() } else { info.params.join(", ") }
        )));
    }
    let degree_max = opts.degree_max.unwrap_or(DEGREE_CAP);
    let ctx = Ctx {
        params: params.clone(),
        degree_max,
        force: opts.force,
    };
    let mut shown = params.clone();
    shown.insert("degree_max".into(), degree_max.to_string());
    let mut report = CheckReport::new(name, shown, info.gating);
    let start = Instant::now();
    if !ctx.allows(degree_max) {
        report.skip(format!("degree_max {degree_max} exceeds the cap {DEGREE_CAP}; pass --force to run it"));
    } else {
        match (info.run)(&ctx, &mut report) {
            Ok(Ran::Done) => report.settle(),
            Ok(Ran::Skipped) => report.status = Status::Skipped,
            Err(VerifyError::Core(e)) => {
                report.note(format!("error: {e}"));
                report.status = Status::Fail;
            }
            Err(e) => return Err(e),
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

impl Suite {
    pub fn degree_max(self) -> usize {
        match self {
            Suite::Fast => 5,
            Suite::Full => 6,
        }
    }
}

/// Every check with default parameters at the suite's degree.
pub fn run_suite(suite: Suite, mut each: impl FnMut(&CheckReport)) -> Result<Vec<CheckReport>, VerifyError> {
    let opts = Options {
        degree_max: Some(suite.degree_max()),
        force: false,
    };
    let mut out = Vec::new();
    for c in CHECKS {
        let r = run_check(c.name, &BTreeMap::new(), opts)?;
        each(&r);
        out.push(r);
    }
    Ok(out)
}

/// A suite passes when no gating check fails.
pub fn suite_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| !r.gating || r.status != Status::Fail)
}

// Shared helpers.

pub(crate) fn poly(text: &str) -> Result<QPoly, VerifyError> {
    Ok(parse::<Rational>(text)?)
}

pub(crate) fn ml(text: &str) -> Result<QMultilinear, VerifyError> {
    Ok(multilinearize(&poly(text)?)?)
}

/// `[x1,x2][x3,x4]⋯` with `count` factors.
pub(crate) fn commutator_chain(count: usize) -> String {
    (0..count)
        .map(|j| format!("[x{},x{}]", 2 * j + 1, 2 * j + 2))
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn algebra(kind: AlgebraKind) -> Result<FiniteAlgebra, VerifyError> {
    Ok(FiniteAlgebra::build(kind)?)
}

pub(crate) fn witness_from(label: String, f: &QPoly, w: &Witness<Rational>) -> WitnessReport {
    WitnessReport {
        label,
        polynomial: format(f),
        algebra: Some(w.algebra.name()),
        tuple: w.rendered_tuple(),
        value: Some(w.rendered_value()),
    }
}

/// Compares two spaces, recording a polynomial witness on inequality.
pub(crate) fn relation(
    report: &mut CheckReport,
    label: String,
    lhs: &QSubspace,
    rhs: &QSubspace,
) -> Result<Relation, VerifyError> {
    let Comparison { relation, witness } = compare_identity_spaces(lhs, rhs)?;
    if let (Some(w), false) = (witness, relation == Relation::Equal) {
        report.witness.push(WitnessReport {
            label,
            polynomial: format(&w.to_ncpoly()),
            algebra: None,
            tuple: Vec::new(),
            value: None,
        });
    }
    Ok(relation)
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn cochar_at_four() {
        let r = run_check("cochar_A", &params(&[("m", "4")]), Options::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.computed["gamma"], serde_json::json!([9]));
    }

    #[test]
    fn lemma_f1_records_e12() {
        let r = run_check("lemma_f1", &BTreeMap::new(), Options { degree_max: Some(4), force: false }).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.iter().any(|w| w.label == "f^(1)_2" && w.value.as_deref() == Some("e12")));
    }

    #[test]
    fn bad_parameters_are_usage_errors() {
        let usage = |name: &str, kv: &[(&str, &str)]| {
            matches!(run_check(name, &params(kv), Options::default()), Err(VerifyError::Usage(_)))
        };
        assert!(usage("main_theorem", &[("n", "1")]));
        assert!(usage("an_equivalence", &[("n", "0")]));
        assert!(usage("thm_E2k", &[("k", "x")]));
        assert!(usage("thm_TA", &[("m", "3")]));
        assert!(usage("nope", &[]));
    }

    #[test]
    fn capped_degrees_skip() {
        let r = run_check("thm_TE", &BTreeMap::new(), Options { degree_max: Some(7), force: false }).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let r = run_check("prop_long_product", &BTreeMap::new(), Options { degree_max: Some(5), force: false }).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn chain_text() {
        assert_eq!(commutator_chain(2), "[x1,x2]*[x3,x4]");
    }
}
