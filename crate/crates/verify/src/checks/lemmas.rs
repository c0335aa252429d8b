use pi_core::algebras::{AlgElement, AlgebraKind, MonoKey, Profile};
use pi_core::engine::{evaluate_ncpoly, is_identity, Model};
use pi_core::free_algebra::{family, format, multilinearize, FamilySpec};
use pi_core::kernel::Permutation;
use pi_core::{QAlgElement, QPoly, Rational};

use super::{algebra, poly, witness_from, Ctx, Ran};
use crate::report::{CheckReport, Provenance, WitnessReport};
use crate::VerifyError;

/// `u0 [v1,v2] u1 [w_a,w_b] u2 ⋯ u_(n+1)` with `n` commutators after the first.
struct SwapCase {
    u: &'static [&'static str],
    v: [&'static str; 2],
    w: &'static [&'static str],
}

const SWAP_CASES: &[SwapCase] = &[
    SwapCase { u: &["", "x5", ""], v: ["x1", "x2"], w: &["x3", "x4"] },
    SwapCase { u: &["x5", "x6", ""], v: ["x1", "x2"], w: &["x3", "x4"] },
    SwapCase { u: &["", "x5*x6", ""], v: ["x1", "x2"], w: &["x3", "x4"] },
    SwapCase { u: &["x6", "", "x5"], v: ["x1", "x2"], w: &["x3", "x4"] },
    SwapCase { u: &["", "x6", ""], v: ["x1*x2", "x3"], w: &["x4", "x5"] },
    SwapCase { u: &["", "x6", ""], v: ["x1", "x2"], w: &["x3*x4", "x5"] },
    SwapCase { u: &["", "x1", ""], v: ["x1", "x2"], w: &["x3", "x2"] },
    SwapCase { u: &["x3", "x3", ""], v: ["x1", "x2"], w: &["x1", "x2"] },
    SwapCase { u: &["", "", "", ""], v: ["x1", "x2"], w: &["x3", "x4", "x5", "x6"] },
];

fn product(factors: &[String]) -> String {
    let kept: Vec<&str> = factors.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    kept.join("*")
}

fn bracket(a: &str, b: &str) -> String {
    format!("[{a},{b}]")
}

impl SwapCase {
    fn is_multilinear(&self) -> bool {
        let text = [self.u.join("*"), self.v.join("*"), self.w.join("*")].join("*");
        let mut seen = std::collections::BTreeSet::new();
        text.split('*').filter(|s| !s.is_empty()).all(|x| seen.insert(x))
    }

    fn pairs(&self) -> usize {
        self.w.len() / 2
    }

    /// The left side for `σ` (zero-based images) and the reordered right side.
    fn sides(&self, sigma: &[usize]) -> (String, String) {
        let mut lhs = vec![self.u[0].to_string(), bracket(self.v[0], self.v[1])];
        for j in 0..self.pairs() {
            lhs.push(self.u[j + 1].to_string());
            lhs.push(bracket(self.w[sigma[2 * j]], self.w[sigma[2 * j + 1]]));
        }
        lhs.push(self.u[self.pairs() + 1].to_string());
        let mut rhs = vec![self.u[0].to_string(), bracket(self.v[0], self.v[1])];
        for j in 0..self.pairs() {
            rhs.push(bracket(self.w[2 * j], self.w[2 * j + 1]));
        }
        rhs.extend(self.u[1..].iter().map(|s| s.to_string()));
        (product(&lhs), product(&rhs))
    }
}

fn difference(lhs: &str, rhs: &str, sign: i64) -> Result<QPoly, VerifyError> {
    Ok(&poly(lhs)? - &poly(rhs)?.scale(&Rational::from(sign)))
}

pub(super) fn lemma_swap(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let a = Model::profile(Profile::A);
    let (mut holds, mut total, mut rejected, mut flipped) = (0usize, 0usize, 0usize, 0usize);
    let mut failures = Vec::new();
    for case in SWAP_CASES {
        let degree = poly(&case.sides(&(0..case.w.len()).collect::<Vec<_>>()).0)?.homogeneous_degree();
        if degree.is_some_and(|d| d > ctx.degree_max) {
            continue;
        }
        for sigma in Permutation::all(case.w.len()) {
            let images: Vec<usize> = sigma.images().iter().map(|i| i - 1).collect();
            let (lhs, rhs) = case.sides(&images);
            let sign = i64::from(sigma.sign());
            total += 1;
            let d = difference(&lhs, &rhs, sign)?;
            if d.is_zero() || is_identity(&multilinearize(&d)?, &a)?.is_identity {
                holds += 1;
            } else {
                failures.push(format!("{lhs} vs {sign}*{rhs}"));
            }
            if case.is_multilinear() {
                flipped += 1;
                let wrong = multilinearize(&difference(&lhs, &rhs, -sign)?)?;
                let v = is_identity(&wrong, &a)?;
                if !v.is_identity {
                    rejected += 1;
                    if images.iter().enumerate().all(|(i, &j)| i == j) && r.witness.len() < 4 {
                        let w = v.witness.as_ref().expect("non-identities carry a witness");
                        r.witness.push(witness_from(format!("sign flipped: {lhs} + {rhs}"), &wrong.to_ncpoly(), w));
                    }
                }
            }
        }
    }
    if total == 0 {
        r.skip("every instance exceeds degree_max");
        return Ok(Ran::Skipped);
    }
    r.info("instances", total);
    r.expect("congruences_mod_T(A)", holds, total, Provenance::Literature, "u0[v1,v2]u1[w_s1,w_s2]... = sgn(s) u0[v1,v2][w1,w2]...u1...");
    r.expect("failures", failures, Vec::<String>::new(), Provenance::Literature, "");
    r.expect(
        "wrong_sign_rejected",
        rejected,
        flipped,
        Provenance::DerivedOracle,
        "multilinear instances with the opposite sign are not identities",
    );
    Ok(Ran::Done)
}

fn term(row: u8, col: u8, mask: u64, c: i64) -> QAlgElement {
    AlgElement::monomial(MonoKey::new(row, col, 0, mask), Rational::from(c))
}

/// Largest `i` for which `f^(kind)_(m,i)` survives on `n` generators.
fn cutoff(kind: u8, n: usize) -> Option<usize> {
    match kind {
        1 => None,
        2 => Some(n),
        3 | 4 => Some(n + 1),
        _ => Some(n + 2),
    }
}

fn replay(
    r: &mut CheckReport,
    rank: usize,
    spec: &FamilySpec,
    tuple: &[QAlgElement],
    computed: &mut Vec<String>,
) -> Result<(), VerifyError> {
    let alg = algebra(AlgebraKind::A { n: rank })?;
    let f = family::<Rational>(spec)?;
    let v = evaluate_ncpoly(&alg, &f, tuple)?;
    let shown = alg.render(&v);
    if r.witness.iter().all(|w| w.label != spec.to_string()) {
        r.witness.push(WitnessReport {
            label: spec.to_string(),
            polynomial: format(&f),
            algebra: Some(alg.name()),
            tuple: tuple.iter().map(|x| alg.render(x)).collect(),
            value: Some(shown.clone()),
        });
    }
    computed.push(shown);
    Ok(())
}

fn lemma_family(kind: u8, ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let n = ctx.even_rank()?;
    let d = ctx.degree_max;
    let an = Model::algebra(algebra(AlgebraKind::A { n })?);
    let mut specs = Vec::new();
    for m in 2..=d {
        match cutoff(kind, n) {
            None => specs.extend(FamilySpec::new(kind, m, None).ok()),
            Some(top) => specs.extend((2..=top).filter_map(|i| FamilySpec::new(kind, m, Some(i)).ok())),
        }
    }
    if specs.is_empty() {
        r.skip(format!("no member of f^({kind}) has degree <= {d} and i within the cutoff"));
        return Ok(Ran::Skipped);
    }
    let (mut identities, mut replays) = (Vec::new(), 0usize);
    for spec in &specs {
        let f = multilinearize(&family::<Rational>(spec)?)?;
        let v = is_identity(&f, &an)?;
        match &v.witness {
            Some(w) => {
                if w.replays(&f)? {
                    replays += 1;
                }
                if r.witness.len() < 8 {
                    r.witness.push(witness_from(format!("{spec} multilinearized"), &f.to_ncpoly(), w));
                }
            }
            None => identities.push(spec.to_string()),
        }
    }
    r.info("members", specs.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    r.expect(
        "identities_of_A^(n)",
        identities,
        Vec::<String>::new(),
        Provenance::Literature,
        "no member within the cutoff vanishes on A^(n)",
    );
    r.expect("witnesses_replayed", replays, specs.len(), Provenance::DerivedOracle, "re-evaluation of each witness");

    // the substitutions written out in the proofs
    if kind == 1 {
        let (mut got, mut want) = (Vec::new(), Vec::new());
        for m in 2..=d {
            replay(r, n, &FamilySpec::new(1, m, None)?, &[term(1, 1, 0, 1), term(0, 1, 0, 1)], &mut got)?;
            want.push("e12");
        }
        r.expect("substitution_e22_e12", got, want, Provenance::Literature, "f^(1)_m(e22, e12) = e12");
    }
    if kind == 2 {
        let x1 = term(1, 1, 0, 1).add(&term(1, 1, 0b1, 1));
        let x2 = term(0, 1, 0, 1).add(&term(1, 1, 0b10, 1));
        let (mut got, mut want) = (Vec::new(), Vec::new());
        for m in 4..=d {
            replay(r, 2, &FamilySpec::new(2, m, Some(2))?, &[x1.clone(), x2.clone()], &mut got)?;
            want.push("2e{1}e{2}e12");
        }
        if !got.is_empty() {
            r.expect(
                "substitution_rank_2",
                got,
                want,
                Provenance::Literature,
                "f^(2)_(m,2)((1+e1)e22, e12+e2e22) in A^(2)",
            );
        }
        let tail = [term(1, 1, 0b100, 1), term(1, 1, 0b1000, 1)];
        let (mut got, mut want) = (Vec::new(), Vec::new());
        for m in 6..=d {
            let tuple = [x1.clone(), x2.clone(), tail[0].clone(), tail[1].clone()];
            replay(r, 4, &FamilySpec::new(2, m, Some(4))?, &tuple, &mut got)?;
            want.push("4e{1}e{2}e{3}e{4}e12");
        }
        if !got.is_empty() {
            r.expect(
                "substitution_rank_4",
                got,
                want,
                Provenance::Literature,
                "f^(2)_(m,4)((1+e1)e22, e12+e2e22, e3e22, e4e22) in A^(4)",
            );
        }
    }
    Ok(Ran::Done)
}

pub(super) fn lemma_f1(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    lemma_family(1, ctx, r)
}

pub(super) fn lemma_f2(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    lemma_family(2, ctx, r)
}

pub(super) fn lemma_f3(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    lemma_family(3, ctx, r)
}

pub(super) fn lemma_f4(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    lemma_family(4, ctx, r)
}

pub(super) fn lemma_f5(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    lemma_family(5, ctx, r)
}
