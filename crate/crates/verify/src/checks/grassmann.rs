use pi_core::algebras::{AlgebraKind, Profile};
use pi_core::engine::{identity_space, tideal_component, Model, Relation};
use pi_core::{QSubspace, Rational};

use super::{algebra, commutator_chain, factorial, poly, relation, Ctx, Ran};
use crate::report::{CheckReport, Provenance};
use crate::VerifyError;

fn e_space(n: usize, m: usize) -> Result<QSubspace, VerifyError> {
    Ok(identity_space(&Model::algebra(algebra(AlgebraKind::E { n })?), m, false)?)
}

pub(super) fn thm_te(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let d = ctx.degree_max;
    if d < 3 {
        r.skip("needs degree_max >= 3");
        return Ok(Ran::Skipped);
    }
    let gens = [poly("[x1,x2,x3]")?];
    let e = Model::profile(Profile::E);
    let (mut rels, mut via_parity, mut via_tideal) = (Vec::new(), Vec::new(), Vec::new());
    for n in 2..=d {
        let t = tideal_component(&gens, n, false)?;
        let s = identity_space::<Rational>(&e, n, false)?;
        via_parity.push(factorial(n) - s.dim());
        via_tideal.push(factorial(n) - t.dim());
        if n >= 3 {
            rels.push(relation(r, format!("degree {n}"), &t, &s)?.to_string());
        }
    }
    let powers: Vec<usize> = (2..=d).map(|n| 1 << (n - 1)).collect();
    r.info("degrees", (2..=d).collect::<Vec<_>>());
    r.expect(
        "tideal_vs_parity",
        rels,
        vec!["equal"; d - 2],
        Provenance::DerivedOracle,
        "degrees 3..=degree_max, parity calculus nullspace",
    );
    r.expect("codim_parity", via_parity, &powers, Provenance::Literature, "Krakowski-Regev: c_n(E) = 2^(n-1)");
    r.expect("codim_tideal", via_tideal, &powers, Provenance::Literature, "same values through the T-ideal component");
    Ok(Ran::Done)
}

pub(super) fn thm_e2k(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let k = ctx.usize_param("k", 1)?;
    if k == 0 {
        return Err(VerifyError::Usage("k must be at least 1".into()));
    }
    let d = ctx.degree_max;
    if d < 2 {
        r.skip("needs degree_max >= 2");
        return Ok(Ran::Skipped);
    }
    let gens = [poly("[x1,x2,x3]")?, poly(&commutator_chain(k + 1))?];
    let (mut even_odd, mut even_tideal) = (Vec::new(), Vec::new());
    for m in 2..=d {
        let even = e_space(2 * k, m)?;
        let odd = e_space(2 * k + 1, m)?;
        let t = tideal_component(&gens, m, false)?;
        even_odd.push(relation(r, format!("E({}) vs E({}), degree {m}", 2 * k, 2 * k + 1), &even, &odd)?.to_string());
        even_tideal.push(relation(r, format!("E({}) vs T-ideal, degree {m}", 2 * k), &even, &t)?.to_string());
    }
    r.info("degrees", (2..=d).collect::<Vec<_>>());
    r.expect(
        "even_vs_odd_rank",
        even_odd,
        vec!["equal"; d - 1],
        Provenance::Literature,
        "T(E^(2k)) = T(E^(2k+1))",
    );
    r.expect(
        "even_rank_vs_tideal",
        even_tideal,
        vec!["equal"; d - 1],
        Provenance::Literature,
        "generated by [x1,x2,x3] and [x1,x2]...[x_(2k+1),x_(2k+2)]",
    );
    Ok(Ran::Done)
}

pub(super) fn subvar_e(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let d = ctx.degree_max;
    if d < 2 {
        r.skip("needs degree_max >= 2");
        return Ok(Ran::Skipped);
    }
    let e = Model::profile(Profile::E);
    let mut chain: Vec<Vec<String>> = vec![Vec::new(); 3];
    let mut expected: Vec<Vec<&str>> = vec![Vec::new(); 3];
    let (mut e2_e3, mut e4_e5) = (Vec::new(), Vec::new());
    let mut codims: Vec<[usize; 4]> = Vec::new();
    for m in 2..=d {
        // E(1) is commutative, so it is PI-equivalent to K
        let k = e_space(1, m)?;
        let e2 = e_space(2, m)?;
        let e3 = e_space(3, m)?;
        let e4 = e_space(4, m)?;
        let e5 = e_space(5, m)?;
        let inf = identity_space::<Rational>(&e, m, false)?;
        chain[0].push(relation(r, format!("K vs E(2), degree {m}"), &k, &e2)?.to_string());
        chain[1].push(relation(r, format!("E(2) vs E(4), degree {m}"), &e2, &e4)?.to_string());
        chain[2].push(relation(r, format!("E(4) vs E, degree {m}"), &e4, &inf)?.to_string());
        // the first separating identity has degree 2, 4, 6 respectively
        for (slot, first) in [2, 4, 6].into_iter().enumerate() {
            let rel = if m < first { Relation::Equal } else { Relation::RhsStrictlySmaller };
            expected[slot].push(match rel {
                Relation::Equal => "equal",
                _ => "rhs_strictly_smaller",
            });
        }
        e2_e3.push(relation(r, format!("E(2) vs E(3), degree {m}"), &e2, &e3)?.to_string());
        e4_e5.push(relation(r, format!("E(4) vs E(5), degree {m}"), &e4, &e5)?.to_string());
        let f = factorial(m);
        codims.push([f - k.dim(), f - e2.dim(), f - e4.dim(), f - inf.dim()]);
    }
    r.info("degrees", (2..=d).collect::<Vec<_>>());
    r.info("codims_K_E2_E4_E", codims);
    let note = "a larger identity space on the left; separating identities [x1,x2], [x1,x2][x3,x4], [x1,x2][x3,x4][x5,x6]";
    r.expect("K_vs_E2", &chain[0], &expected[0], Provenance::DerivedOracle, note);
    r.expect("E2_vs_E4", &chain[1], &expected[1], Provenance::DerivedOracle, note);
    r.expect("E4_vs_E", &chain[2], &expected[2], Provenance::DerivedOracle, note);
    r.expect("E2_vs_E3", e2_e3, vec!["equal"; d - 1], Provenance::Literature, "T(E^(2k)) = T(E^(2k+1)), k = 1");
    r.expect("E4_vs_E5", e4_e5, vec!["equal"; d - 1], Provenance::Literature, "T(E^(2k)) = T(E^(2k+1)), k = 2");
    Ok(Ran::Done)
}
