use pi_core::algebras::{AlgebraKind, Profile};
use pi_core::engine::{identity_space, Model, Relation};
use pi_core::kernel::derangements;

use super::{algebra, factorial, relation, Ctx, Ran};
use crate::report::{CheckReport, Provenance};
use crate::VerifyError;

fn degrees(ctx: &Ctx, default_top: usize) -> Result<Vec<usize>, VerifyError> {
    let top = ctx.usize_param("m_max", default_top)?;
    if !ctx.allows(top) {
        return Err(VerifyError::Usage(format!("m_max = {top} exceeds the degree cap; pass --force")));
    }
    Ok((2..=top.min(ctx.degree_max)).collect())
}

pub(super) fn m11_rank2(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let d = ctx.degree_max;
    if d < 2 {
        r.skip("needs degree_max >= 2");
        return Ok(Ran::Skipped);
    }
    let profile = Model::profile(Profile::M11);
    let rank2 = Model::algebra(algebra(AlgebraKind::M11 { k: 2 })?);
    let (mut rels, mut contained, mut gammas) = (Vec::new(), Vec::new(), Vec::new());
    for m in 2..=d {
        let p = identity_space(&profile, m, true)?;
        let s = identity_space(&rank2, m, true)?;
        let rel = relation(r, format!("degree {m}"), &p, &s)?;
        contained.push(matches!(rel, Relation::Equal | Relation::LhsStrictlySmaller));
        rels.push(rel.to_string());
        let g = derangements(m) as usize;
        gammas.push([g - p.dim(), g - s.dim()]);
    }
    r.info("degrees", (2..=d).collect::<Vec<_>>());
    r.info("relation_M11_vs_M11^(2)", rels);
    r.info("gamma_M11_M11^(2)", gammas);
    r.expect(
        "T(M11)_inside_T(M11^(2))",
        contained,
        vec![true; d - 1],
        Provenance::DerivedOracle,
        "M11^(2) is a subalgebra of M11",
    );
    r.note("F_2(M11) itself is not modelled; only the subalgebra M11^(2) is compared");
    Ok(Ran::Done)
}

pub(super) fn r2_ut2(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let ms = degrees(ctx, 5)?;
    if ms.is_empty() {
        r.skip("needs degree_max >= 2");
        return Ok(Ran::Skipped);
    }
    let ut2 = Model::algebra(algebra(AlgebraKind::UT2)?);
    let (mut rels, mut codims) = (Vec::new(), Vec::new());
    for &m in &ms {
        // a degree-m evaluation touches at most 2m Grassmann generators
        let rp = Model::algebra(algebra(AlgebraKind::Rp { p: 2, d: 2 * m })?);
        let lhs = identity_space(&rp, m, false)?;
        let rhs = identity_space(&ut2, m, false)?;
        rels.push(relation(r, format!("degree {m}"), &lhs, &rhs)?.to_string());
        codims.push(factorial(m) - rhs.dim());
    }
    r.info("degrees", &ms);
    r.info("codim_UT2", codims);
    r.expect(
        "R_2_vs_UT2",
        rels,
        vec!["equal"; ms.len()],
        Provenance::Literature,
        "R_2 ~ UT_2(K), all multilinear polynomials",
    );
    r.note("R_p is built with the upper-left entry in E_0 and no power of t, as defined; a C_p tensor E_0 reading would change dimensions");
    Ok(Ran::Done)
}

pub(super) fn r4_f2a(ctx: &Ctx, r: &mut CheckReport) -> Result<Ran, VerifyError> {
    let ms = degrees(ctx, 5)?;
    if ms.is_empty() {
        r.skip("needs degree_max >= 2");
        return Ok(Ran::Skipped);
    }
    let a2 = Model::algebra(algebra(AlgebraKind::A { n: 2 })?);
    let mut rels = Vec::new();
    for &m in &ms {
        let rp = Model::algebra(algebra(AlgebraKind::Rp { p: 4, d: 2 * m })?);
        let lhs = identity_space(&rp, m, true)?;
        let rhs = identity_space(&a2, m, true)?;
        rels.push(relation(r, format!("degree {m}"), &lhs, &rhs)?.to_string());
    }
    r.info("degrees", &ms);
    r.expect(
        "R_4_vs_A^(2)",
        rels,
        vec!["equal"; ms.len()],
        Provenance::Literature,
        "R_(2p) ~ F_(2p-2)(A) with p = 2, proper polynomials",
    );
    r.note("only finite-degree agreement is checked; the asymptotic statement is out of reach");
    r.note("R_p is built with the upper-left entry in E_0 and no power of t, as defined; a C_p tensor E_0 reading would change dimensions");
    Ok(Ran::Done)
}
