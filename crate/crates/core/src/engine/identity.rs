use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::algebras::{AlgElement, AlgebraKind, FiniteAlgebra, MonoKey, Profile};
use crate::engine::eval::{evaluate, tuple_rows, TupleRows, TupleSpace, TupleStrategy};
use crate::engine::subspace::Subspace;
use crate::error::{Error, Result};
use crate::free_algebra::{proper_basis, MultilinearPoly};
use crate::kernel::{derangements, factorial, DenseRowSpace, Scalar};

/// What an identity is tested against.
#[derive(Clone, Debug)]
pub enum Target {
    Algebra(FiniteAlgebra),
    Profile(Profile),
}

/// How tuples are drawn.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// All basis tuples of a finite algebra, up to relabelling generators.
    Exhaustive,
    /// All basis tuples, literally.
    Literal,
    /// Representative tuples of a profile.
    Representative,
    /// The parity calculus of the infinite Grassmann algebra.
    Parity,
}

/// A validated target and mode.
#[derive(Clone, Debug)]
pub struct Model {
    target: Target,
    mode: Mode,
}

impl Model {
    pub fn new(target: Target, mode: Mode) -> Result<Self> {
        let ok = matches!(
            (&target, mode),
            (Target::Algebra(_), Mode::Exhaustive | Mode::Literal)
                | (Target::Profile(_), Mode::Representative)
                | (Target::Profile(Profile::E), Mode::Parity)
        );
        if !ok {
            let what = match &target {
                Target::Algebra(a) => a.name(),
                Target::Profile(p) => format!("profile {p}"),
            };
            return Err(Error::ModeMismatch(format!("{mode:?} mode is not available for {what}")));
        }
        Ok(Model { target, mode })
    }

    /// Exhaustive testing on a finite algebra.
    pub fn algebra(alg: FiniteAlgebra) -> Self {
        Model {
            target: Target::Algebra(alg),
            mode: Mode::Exhaustive,
        }
    }

    /// Representative tuples, or the parity calculus for `E`.
    pub fn profile(p: Profile) -> Self {
        let mode = if p == Profile::E { Mode::Parity } else { Mode::Representative };
        Model {
            target: Target::Profile(p),
            mode,
        }
    }

    /// `A`, `M11` and `E` name profiles, anything else is an algebra name.
    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().parse::<Profile>() {
            Ok(p) => Ok(Self::profile(p)),
            Err(_) => Ok(Self::algebra(FiniteAlgebra::parse(name)?)),
        }
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.target {
            Target::Algebra(a) => write!(f, "{}", a.name()),
            Target::Profile(p) => write!(f, "profile {p}"),
        }
    }
}

/// A falsifying tuple together with the nonzero value it produces.
#[derive(Clone, Debug)]
pub struct Witness<S: Scalar> {
    pub algebra: FiniteAlgebra,
    pub tuple: Vec<AlgElement<S>>,
    pub value: AlgElement<S>,
}

impl<S: Scalar> Witness<S> {
    pub fn rendered_tuple(&self) -> Vec<String> {
        self.tuple.iter().map(|x| self.algebra.render(x)).collect()
    }

    pub fn rendered_value(&self) -> String {
        self.algebra.render(&self.value)
    }

    /// Re-evaluates `f` on the tuple and checks the stored value.
    pub fn replays(&self, f: &MultilinearPoly<S>) -> Result<bool> {
        Ok(evaluate(&self.algebra, f, &self.tuple)? == self.value && !self.value.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct IdentityVerdict<S: Scalar> {
    pub is_identity: bool,
    pub witness: Option<Witness<S>>,
}

impl<S: Scalar> IdentityVerdict<S> {
    fn holds() -> Self {
        IdentityVerdict {
            is_identity: true,
            witness: None,
        }
    }
}

fn strategy(model: &Model) -> Option<(FiniteAlgebra, TupleStrategy)> {
    match (&model.target, model.mode) {
        (Target::Algebra(a), Mode::Exhaustive) => Some((a.clone(), TupleStrategy::Compressed)),
        (Target::Algebra(a), Mode::Literal) => Some((a.clone(), TupleStrategy::Literal)),
        (Target::Profile(p), Mode::Representative) => Some((p.host(1), TupleStrategy::Representative(*p))),
        _ => None,
    }
}

/// Splits the tuple tree into work units: the shortest prefix length that
/// yields enough units to keep every thread busy.
fn work_units(space: &TupleSpace, n: usize) -> Vec<Vec<MonoKey>> {
    let want = 8 * rayon::current_num_threads().max(1);
    let mut depth = 1.min(n);
    loop {
        let units = space.prefixes(depth);
        if units.len() >= want || depth >= n {
            return units;
        }
        depth += 1;
    }
}

fn batch_size() -> usize {
    4 * rayon::current_num_threads().max(4)
}

/// Whether `f` vanishes on every tuple of the model. The witness is the
/// first falsifying tuple in enumeration order.
pub fn is_identity<S: Scalar>(f: &MultilinearPoly<S>, model: &Model) -> Result<IdentityVerdict<S>> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::InvalidParameter("degree 0 polynomials are not tested".into()));
    }
    let Some((alg, strat)) = strategy(model) else {
        return is_identity_e(f);
    };
    if f.is_zero() {
        return Ok(IdentityVerdict::holds());
    }
    let space = TupleSpace::new(&alg, n, strat);
    let coeffs = f.coeffs();
    let units = work_units(&space, n);
    let hit = units.par_iter().find_map_first(|unit| {
        let mut rows = TupleRows::new();
        let mut found = None;
        space.for_each_extension(unit, &mut |t| {
            tuple_rows(space.host(), t, &mut rows);
            let nonzero = rows.iter().any(|(_, entries)| {
                let mut acc = S::zero();
                for (w, s) in entries {
                    let c = &coeffs[*w as usize];
                    if !c.is_zero() {
                        acc = if *s > 0 { acc + c.clone() } else { acc - c.clone() };
                    }
                }
                !acc.is_zero()
            });
            if nonzero {
                found = Some(t.to_vec());
            }
            !nonzero
        });
        found
    });
    match hit {
        None => Ok(IdentityVerdict::holds()),
        Some(keys) => {
            let host = space.host().clone();
            let tuple: Vec<AlgElement<S>> = keys.iter().map(|k| AlgElement::monomial(*k, S::one())).collect();
            let value = evaluate(&host, f, &tuple)?;
            Ok(IdentityVerdict {
                is_identity: false,
                witness: Some(Witness {
                    algebra: host,
                    tuple,
                    value,
                }),
            })
        }
    }
}

/// Sign picked up by the word `w` when the slots flagged in `odd` hold
/// distinct Grassmann generators and the others hold `1`: the parity of the
/// inversions among odd letters.
fn parity_sign(word: &[u32], odd: u32) -> i64 {
    let letters: Vec<u32> = word.iter().copied().filter(|l| odd >> (l - 1) & 1 == 1).collect();
    let mut inv = 0;
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[i] > letters[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn parity_rows(n: usize) -> Vec<Vec<(u32, i64)>> {
    let words: Vec<Vec<u32>> = (0..factorial(n) as usize)
        .map(|r| MultilinearPoly::<crate::kernel::Rational>::word_at(n, r))
        .collect();
    (0..1u32 << n)
        .map(|odd| {
            words
                .iter()
                .enumerate()
                .map(|(r, w)| (r as u32, parity_sign(w, odd)))
                .collect()
        })
        .collect()
}

/// Identity test for the infinite Grassmann algebra `E`.
///
/// On homogeneous elements only the parity of each slot matters: a word
/// evaluates to the fixed product of the slot elements times the sign of
/// the inversions among odd slots. The witness realizes the first bad
/// parity vector with generators `e_1, e_2, …` on the odd slots.
pub fn is_identity_e<S: Scalar>(f: &MultilinearPoly<S>) -> Result<IdentityVerdict<S>> {
    let n = f.degree();
    let support = f.support();
    for odd in 0..1u32 << n {
        let mut acc = S::zero();
        for (r, c) in &support {
            let w = MultilinearPoly::<S>::word_at(n, *r);
            acc = if parity_sign(&w, odd) > 0 { acc + c.clone() } else { acc - c.clone() };
        }
        if acc.is_zero() {
            continue;
        }
        let k = odd.count_ones() as usize;
        let host = FiniteAlgebra::build(AlgebraKind::E { n: k.max(1) })?;
        let mut next = 0;
        let tuple: Vec<AlgElement<S>> = (0..n)
            .map(|i| {
                let mask = if odd >> i & 1 == 1 {
                    next += 1;
                    1u64 << (next - 1)
                } else {
                    0
                };
                AlgElement::monomial(MonoKey::new(0, 0, 0, mask), S::one())
            })
            .collect();
        let value = evaluate(&host, f, &tuple)?;
        return Ok(IdentityVerdict {
            is_identity: false,
            witness: Some(Witness {
                algebra: host,
                tuple,
                value,
            }),
        });
    }
    Ok(IdentityVerdict::holds())
}

/// Change of coordinates from `P_n` to the certified basis of `Γ_n`: for each
/// word, the basis elements containing it and the coefficient there.
struct GammaCoords<S> {
    basis: Vec<MultilinearPoly<S>>,
    by_word: Vec<Vec<(u32, i64)>>,
}

impl<S: Scalar> GammaCoords<S> {
    fn new(n: usize) -> Self {
        let basis = proper_basis::<S>(n);
        let mut by_word = vec![Vec::new(); factorial(n) as usize];
        for (j, g) in basis.iter().enumerate() {
            for (w, c) in g.support() {
                let c = c.to_big_rational().to_integer().to_i64().expect("small integer coefficients");
                by_word[w].push((j as u32, c));
            }
        }
        GammaCoords { basis, by_word }
    }
}

/// Collects evaluation rows, deduplicated after normalization, into an
/// exact row space whose kernel is the identity space.
struct RowSink<S> {
    gamma: Option<GammaCoords<S>>,
    space: DenseRowSpace<S>,
    seen: HashSet<Vec<(u32, i64)>>,
}

impl<S: Scalar> RowSink<S> {
    fn new(n: usize, proper: bool) -> Self {
        let gamma = proper.then(|| GammaCoords::new(n));
        let width = match &gamma {
            Some(g) => g.basis.len(),
            None => factorial(n) as usize,
        };
        RowSink {
            gamma,
            space: DenseRowSpace::new(width),
            seen: HashSet::new(),
        }
    }

    fn width(&self) -> usize {
        self.space.width()
    }

    /// Converts a row over words into working coordinates and normalizes it
    /// (content removed, first entry positive). Pure, so workers call it.
    fn prepare(&self, row: &[(u32, i64)], buf: &mut Vec<i64>) -> Option<Vec<(u32, i64)>> {
        let mut out: Vec<(u32, i64)> = match &self.gamma {
            None => row.iter().copied().filter(|(_, c)| *c != 0).collect(),
            Some(g) => {
                buf.clear();
                buf.resize(g.basis.len(), 0);
                for (w, s) in row {
                    for (j, c) in &g.by_word[*w as usize] {
                        buf[*j as usize] += s * c;
                    }
                }
                buf.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(j, c)| (j as u32, *c))
                    .collect()
            }
        };
        let first = out.first()?.1;
        let g = out.iter().fold(0i64, |g, (_, c)| g.gcd(c));
        let g = if first < 0 { -g } else { g };
        for (_, c) in out.iter_mut() {
            *c /= g;
        }
        Some(out)
    }

    /// Inserts rows in the given order; returns the rank afterwards.
    fn absorb(&mut self, rows: Vec<Vec<(u32, i64)>>) -> Result<usize> {
        for r in rows {
            if self.space.rank() == self.width() {
                break;
            }
            if !self.seen.insert(r.clone()) {
                continue;
            }
            let v: Vec<(usize, S)> = r.iter().map(|(j, c)| (*j as usize, S::from_i64(*c))).collect();
            self.space.insert_sparse(&v)?;
        }
        Ok(self.space.rank())
    }

    /// Kernel of the accumulated rows, mapped back to `P_n`.
    fn finish(self, n: usize, proper: bool) -> Subspace<S> {
        let width = factorial(n) as usize;
        let mut out = DenseRowSpace::new(width);
        for k in self.space.kernel() {
            let v = match &self.gamma {
                None => crate::kernel::rowspace::to_dense(&k, width),
                Some(g) => {
                    let mut v = vec![S::zero(); width];
                    for (j, c) in &k {
                        for (w, x) in g.basis[*j].support() {
                            v[w] = v[w].clone() + c.clone() * x;
                        }
                    }
                    v
                }
            };
            out.rank_insert(&v).expect("width n!");
        }
        Subspace::from_space(n, proper, out)
    }
}

/// `P_n ∩ T` (or `Γ_n ∩ T` when `proper`) for the identities `T` of the
/// model, as the kernel of the evaluation pairing.
pub fn identity_space<S: Scalar>(model: &Model, n: usize, proper: bool) -> Result<Subspace<S>> {
    identity_space_bounded(model, n, proper, None)
}

/// Like [`identity_space`], but stops once the evaluation rank reaches
/// `rank_bound`. The result is exact whenever the true rank is at most the
/// bound, which is how known codimension bounds shortcut a sweep.
pub fn identity_space_bounded<S: Scalar>(
    model: &Model,
    n: usize,
    proper: bool,
    rank_bound: Option<usize>,
) -> Result<Subspace<S>> {
    if n == 0 || (proper && n < 2) {
        return Err(Error::InvalidParameter(format!(
            "degree {n} is too small for a {} identity space",
            if proper { "proper" } else { "full" }
        )));
    }
    let mut sink = RowSink::<S>::new(n, proper);
    let limit = rank_bound.unwrap_or(usize::MAX).min(sink.width());
    let Some((alg, strat)) = strategy(model) else {
        let mut buf = Vec::new();
        let rows = parity_rows(n).iter().filter_map(|r| sink.prepare(r, &mut buf)).collect();
        sink.absorb(rows)?;
        return Ok(sink.finish(n, proper));
    };
    let space = TupleSpace::new(&alg, n, strat);
    let units = work_units(&space, n);
    for batch in units.chunks(batch_size()) {
        let produced: Vec<Vec<Vec<(u32, i64)>>> = batch
            .par_iter()
            .map(|unit| {
                let mut rows = TupleRows::new();
                let mut local = HashSet::new();
                let mut out = Vec::new();
                let mut buf = Vec::new();
                let mut plain = Vec::new();
                space.for_each_extension(unit, &mut |t| {
                    tuple_rows(space.host(), t, &mut rows);
                    for (_, entries) in &rows {
                        plain.clear();
                        plain.extend(entries.iter().map(|(w, s)| (*w, *s as i64)));
                        if let Some(r) = sink.prepare(&plain, &mut buf) {
                            if local.insert(r.clone()) {
                                out.push(r);
                            }
                        }
                    }
                    true
                });
                out
            })
            .collect();
        let mut rank = 0;
        for rows in produced {
            rank = sink.absorb(rows)?;
        }
        if rank >= limit {
            break;
        }
    }
    Ok(sink.finish(n, proper))
}

/// Proper codimension `γ_n = dim Γ_n − dim(Γ_n ∩ T)`.
pub fn gamma_dim(model: &Model, n: usize) -> Result<usize> {
    let space = identity_space::<crate::kernel::Rational>(model, n, true)?;
    Ok(derangements(n) as usize - space.dim())
}

/// Codimension `c_n = n! − dim(P_n ∩ T)`.
pub fn codim(model: &Model, n: usize) -> Result<usize> {
    let space = identity_space::<crate::kernel::Rational>(model, n, false)?;
    Ok(factorial(n) as usize - space.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::parse;
    use crate::kernel::Rational;

    type Q = Rational;

    fn ml(s: &str) -> MultilinearPoly<Q> {
        crate::free_algebra::multilinearize(&parse(s).unwrap()).unwrap()
    }

    fn alg(name: &str) -> Model {
        Model::algebra(FiniteAlgebra::parse(name).unwrap())
    }

    /// Identity space by brute force: literal tuples, direct evaluation of
    /// every monomial, dense elimination.
    fn oracle_codim(a: &FiniteAlgebra, n: usize) -> usize {
        let basis: Vec<AlgElement<Q>> = (0..a.dim()).map(|i| a.basis_element(i).unwrap()).collect();
        let width = factorial(n) as usize;
        let mut rows = DenseRowSpace::<Q>::new(width);
        let mut idx = vec![0usize; n];
        loop {
            let tuple: Vec<AlgElement<Q>> = idx.iter().map(|&i| basis[i].clone()).collect();
            let values: Vec<AlgElement<Q>> = (0..width)
                .map(|r| evaluate(a, &MultilinearPoly::from_sparse(n, &[(r, Q::from(1))]), &tuple).unwrap())
                .collect();
            let mut keys: Vec<MonoKey> = values.iter().flat_map(|v| v.terms().map(|(k, _)| *k)).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let row: Vec<Q> = values
                    .iter()
                    .map(|v| v.terms().find(|(kk, _)| **kk == k).map(|(_, c)| c.clone()).unwrap_or_default())
                    .collect();
                rows.rank_insert(&row).unwrap();
            }
            let mut j = n;
            loop {
                if j == 0 {
                    return rows.rank();
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < basis.len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    }

    #[test]
    fn codimensions_match_brute_force() {
        for (name, max_n) in [("UT2", 4), ("E(n=2)", 4), ("E(n=3)", 3), ("A(n=1)", 3), ("M11(k=1)", 3), ("A(n=2)", 3)] {
            let a = FiniteAlgebra::parse(name).unwrap();
            for n in 1..=max_n {
                let expected = oracle_codim(&a, n);
                assert_eq!(codim(&Model::algebra(a.clone()), n).unwrap(), expected, "{name} n={n}");
                let lit = Model::new(Target::Algebra(a.clone()), Mode::Literal).unwrap();
                assert_eq!(codim(&lit, n).unwrap(), expected, "{name} literal n={n}");
            }
        }
    }

    #[test]
    fn paper_examples_for_is_identity() {
        let a2 = alg("A(n=2)");
        assert!(is_identity(&ml("[x1,x2]*[x3,x4,x5]"), &a2).unwrap().is_identity);
        let f = ml("[x2,x1,x1]");
        let v = is_identity(&f, &a2).unwrap();
        assert!(!v.is_identity);
        assert!(v.witness.unwrap().replays(&f).unwrap());
        let v = is_identity(&ml("[x1,x2]"), &alg("UT2")).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.rendered_tuple(), ["e11", "e12"]);
        assert_eq!(w.rendered_value(), "e12");
    }

    #[test]
    fn parity_calculus_examples() {
        assert!(is_identity_e(&ml("[x1,x2,x3]")).unwrap().is_identity);
        assert!(is_identity_e(&ml("[x1,x2]*[x3,x4] + [x1,x3]*[x2,x4]")).unwrap().is_identity);
        let f = ml("[x1,x2]");
        let v = is_identity_e(&f).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.rendered_tuple(), ["e{1}", "e{2}"]);
        assert_eq!(w.rendered_value(), "2e{1}e{2}");
        assert!(w.replays(&f).unwrap());
    }

    #[test]
    fn parity_calculus_agrees_with_representatives() {
        let rep = Model::new(Target::Profile(Profile::E), Mode::Representative).unwrap();
        for s in ["[x1,x2,x3]", "[x1,x2]*[x3,x4]", "[x1,x2]*[x3,x4] + [x1,x3]*[x2,x4]", "x1*x2*x3 - x3*x2*x1", "[x1,x2]*[x3,x4]*x5"] {
            let f = ml(s);
            assert_eq!(is_identity_e(&f).unwrap().is_identity, is_identity(&f, &rep).unwrap().is_identity, "{s}");
        }
    }

    #[test]
    fn codimensions_of_e() {
        let e = Model::profile(Profile::E);
        for n in 1..=6 {
            assert_eq!(codim(&e, n).unwrap(), 1 << (n - 1), "n = {n}");
        }
        let rep = Model::new(Target::Profile(Profile::E), Mode::Representative).unwrap();
        for n in 2..=5 {
            assert_eq!(
                identity_space::<Q>(&e, n, false).unwrap(),
                identity_space::<Q>(&rep, n, false).unwrap()
            );
        }
    }

    #[test]
    fn spec_identity_space_examples() {
        assert_eq!(identity_space::<Q>(&alg("UT2"), 2, false).unwrap().dim(), 0);
        assert_eq!(identity_space::<Q>(&Model::profile(Profile::E), 3, false).unwrap().dim(), 2);
        assert_eq!(gamma_dim(&Model::profile(Profile::A), 2).unwrap(), 1);
        assert_eq!(gamma_dim(&Model::profile(Profile::A), 4).unwrap(), 9);
        assert_eq!(codim(&Model::profile(Profile::E), 4).unwrap(), 8);
    }

    #[test]
    fn proper_space_is_full_space_inside_gamma() {
        for m in [alg("A(n=2)"), alg("UT2"), Model::profile(Profile::A), Model::profile(Profile::E)] {
            for n in 2..=4 {
                let full = identity_space::<Q>(&m, n, false).unwrap();
                let proper = identity_space::<Q>(&m, n, true).unwrap();
                assert_eq!(full.intersect(&Subspace::gamma(n)).unwrap(), proper, "{m} n={n}");
            }
        }
    }

    #[test]
    fn rank_bound_is_exact_when_tight() {
        let m = alg("A(n=2)");
        let full = identity_space::<Q>(&m, 4, true).unwrap();
        let bound = derangements(4) as usize - full.dim();
        assert_eq!(identity_space_bounded::<Q>(&m, 4, true, Some(bound)).unwrap(), full);
    }

    #[test]
    fn mode_mismatches() {
        let a = FiniteAlgebra::parse("UT2").unwrap();
        assert!(Model::new(Target::Algebra(a), Mode::Representative).is_err());
        assert!(Model::new(Target::Profile(Profile::A), Mode::Exhaustive).is_err());
        assert!(Model::new(Target::Profile(Profile::A), Mode::Parity).is_err());
        assert!(Model::new(Target::Profile(Profile::E), Mode::Parity).is_ok());
        assert!(identity_space::<Q>(&Model::profile(Profile::A), 1, true).is_err());
    }
}
