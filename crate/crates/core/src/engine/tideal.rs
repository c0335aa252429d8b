use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::engine::subspace::Subspace;
use crate::error::{Error, Result};
use crate::free_algebra::{multilinearize, MultilinearPoly, NCPoly};
use crate::kernel::perm::next_permutation;
use crate::kernel::{factorial, DenseRowSpace, Scalar};

/// A multilinear generator with integer coefficients, as (word, coeff).
struct Generator {
    degree: usize,
    terms: Vec<(Vec<u32>, i64)>,
    proper: bool,
}

fn integral_generator<S: Scalar>(g: &NCPoly<S>) -> Result<Option<Generator>> {
    if g.is_zero() {
        return Ok(None);
    }
    if g.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let ml = multilinearize(g)?;
    let support = ml.support();
    if support.is_empty() {
        return Ok(None);
    }
    let qs: Vec<_> = support.iter().map(|(_, c)| c.to_big_rational()).collect();
    let denom = qs.iter().fold(num_bigint::BigInt::one(), |l, q| l.lcm(q.denom()));
    let mut terms = Vec::with_capacity(support.len());
    for ((w, _), q) in support.iter().zip(&qs) {
        let c = (q * num_rational::BigRational::from_integer(denom.clone())).to_integer();
        let c = c
            .to_i64()
            .ok_or_else(|| Error::InvalidParameter("generator coefficients are too large".into()))?;
        terms.push((MultilinearPoly::<S>::word_at(ml.degree(), *w), c));
    }
    let proper = ml.to_ncpoly().vanishes_on_unit_substitution();
    Ok(Some(Generator {
        degree: ml.degree(),
        terms,
        proper,
    }))
}

/// Cut points `c_0 ≤ c_1 < … < c_k ≤ n` splitting an arrangement into a left
/// factor, `k` nonempty argument words and a right factor.
fn for_each_cut(n: usize, k: usize, emit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, cuts: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if cuts.len() == k + 1 {
            emit(cuts);
            return;
        }
        let slots_left = k + 1 - cuts.len();
        let lo = match cuts.last() {
            None => 0,
            Some(&c) => c + 1,
        };
        // remaining slots each need one letter
        let hi = n + 1 - slots_left;
        for c in lo..=hi {
            cuts.push(c);
            rec(n, k, cuts, emit);
            cuts.pop();
        }
    }
    rec(n, k, &mut Vec::new(), emit);
}

/// All instances `L · g(w_1, …, w_k) · R` of one generator in `P_n`.
fn instances(g: &Generator, n: usize, emit: &mut dyn FnMut(Vec<(u32, i64)>)) {
    let k = g.degree;
    let mut arr: Vec<u32> = (1..=n as u32).collect();
    let mut word = Vec::with_capacity(n);
    loop {
        for_each_cut(n, k, &mut |cuts| {
            let mut row: Vec<(u32, i64)> = g
                .terms
                .iter()
                .map(|(tau, c)| {
                    word.clear();
                    word.extend_from_slice(&arr[..cuts[0]]);
                    for &slot in tau {
                        let s = slot as usize;
                        word.extend_from_slice(&arr[cuts[s - 1]..cuts[s]]);
                    }
                    word.extend_from_slice(&arr[cuts[k]..]);
                    (MultilinearPoly::<crate::kernel::Rational>::rank_of(&word) as u32, *c)
                })
                .collect();
            row.sort_unstable();
            emit(row);
        });
        if !next_permutation(&mut arr) {
            break;
        }
    }
}

/// `Φ(f) = Σ_T (−1)^{|T|} x_T · f|_{x_T = 1}`, with `x_T` the increasing
/// product of the variables in `T`.
///
/// `Φ` fixes `Γ_n` pointwise and its image vanishes under every single
/// substitution `x_i = 1`, so it maps `P_n` onto `Γ_n`. Each term is a
/// consequence of `f`, hence `Φ` maps `P_n ∩ I` onto `Γ_n ∩ I` for every
/// T-ideal `I` closed under substituting `1`.
pub fn gamma_projection<S: Scalar>(f: &MultilinearPoly<S>) -> MultilinearPoly<S> {
    let n = f.degree();
    let table = projection_table(n);
    project_with(&table, f)
}

fn projection_table(n: usize) -> Vec<(Vec<u32>, bool)> {
    (0..1u32 << n)
        .map(|t| {
            let targets = (0..factorial(n) as usize)
                .map(|r| {
                    let w = MultilinearPoly::<crate::kernel::Rational>::word_at(n, r);
                    let mut out: Vec<u32> = (1..=n as u32).filter(|l| t >> (l - 1) & 1 == 1).collect();
                    out.extend(w.iter().filter(|l| t >> (*l - 1) & 1 == 0));
                    MultilinearPoly::<crate::kernel::Rational>::rank_of(&out) as u32
                })
                .collect();
            (targets, t.count_ones() % 2 == 1)
        })
        .collect()
}

fn project_with<S: Scalar>(table: &[(Vec<u32>, bool)], f: &MultilinearPoly<S>) -> MultilinearPoly<S> {
    let support = f.support();
    let mut out = vec![S::zero(); f.coeffs().len()];
    for (targets, negative) in table {
        for (r, c) in &support {
            let j = targets[*r] as usize;
            out[j] = if *negative { out[j].clone() - c.clone() } else { out[j].clone() + c.clone() };
        }
    }
    MultilinearPoly::from_coeffs(f.degree(), out).expect("same width")
}

/// The degree-`n` multilinear component of the T-ideal generated by
/// `generators`, or its intersection with `Γ_n` when `proper`.
pub fn tideal_component<S: Scalar>(generators: &[NCPoly<S>], n: usize, proper: bool) -> Result<Subspace<S>> {
    if n == 0 || (proper && n < 2) {
        return Err(Error::InvalidParameter(format!("degree {n} is too small")));
    }
    let gens: Vec<Generator> = generators
        .iter()
        .map(integral_generator)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let width = factorial(n) as usize;
    let mut space = DenseRowSpace::<S>::new(width);
    let mut seen: HashSet<Vec<(u32, i64)>> = HashSet::new();
    let mut failure = None;
    for g in gens.iter().filter(|g| g.degree <= n) {
        instances(g, n, &mut |row| {
            if failure.is_some() || space.rank() == width || !seen.insert(row.clone()) {
                return;
            }
            let v: Vec<(usize, S)> = row.iter().map(|(j, c)| (*j as usize, S::from_i64(*c))).collect();
            if let Err(e) = space.insert_sparse(&v) {
                failure = Some(e);
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    let full = Subspace::from_space(n, false, space);
    if !proper {
        return Ok(full);
    }
    if gens.iter().all(|g| g.proper) {
        let table = projection_table(n);
        let mut out = Subspace::zero(n, true);
        for f in full.basis() {
            out.insert(&project_with(&table, &f))?;
        }
        Ok(out)
    } else {
        proper_part(&full)
    }
}

/// `U ∩ Γ_n` by exact intersection, valid for any subspace.
pub fn proper_part<S: Scalar>(u: &Subspace<S>) -> Result<Subspace<S>> {
    let mut out = u.intersect(&Subspace::gamma(u.degree()))?;
    if !out.is_proper() {
        out = Subspace::span(u.degree(), true, &out.basis())?;
    }
    Ok(out)
}
