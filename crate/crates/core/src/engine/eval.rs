//! Evaluation of polynomials on algebra elements and the enumeration of
//! basis tuples that feeds the identity tests.

use crate::algebras::{AlgElement, FiniteAlgebra, MonoKey, Profile};
use crate::error::{Error, Result};
use crate::free_algebra::{MultilinearPoly, NCPoly};
use crate::kernel::{factorial, Scalar};

/// Value of a multilinear polynomial on a tuple of elements.
pub fn evaluate<S: Scalar>(
    alg: &FiniteAlgebra,
    f: &MultilinearPoly<S>,
    tuple: &[AlgElement<S>],
) -> Result<AlgElement<S>> {
    if tuple.len() != f.degree() {
        return Err(Error::TupleLength {
            expected: f.degree(),
            found: tuple.len(),
        });
    }
    for x in tuple {
        alg.validate(x)?;
    }
    let mut out = AlgElement::zero();
    for (j, c) in f.support() {
        let word = MultilinearPoly::<S>::word_at(f.degree(), j);
        let mut prod = tuple[word[0] as usize - 1].clone();
        for &l in &word[1..] {
            if prod.is_zero() {
                break;
            }
            prod = alg.mul_unchecked(&prod, &tuple[l as usize - 1]);
        }
        out = out.add(&prod.scale(&c));
    }
    Ok(out)
}

/// Value of an arbitrary polynomial with `x_i ↦ assignment[i - 1]`.
///
/// This is how the non-multilinear witness computations (repeated variables
/// folded onto the same element) are replayed.
pub fn evaluate_ncpoly<S: Scalar>(
    alg: &FiniteAlgebra,
    f: &NCPoly<S>,
    assignment: &[AlgElement<S>],
) -> Result<AlgElement<S>> {
    for x in assignment {
        alg.validate(x)?;
    }
    let mut out = AlgElement::zero();
    for (w, c) in f.terms() {
        let mut prod = alg.one();
        for &l in w.letters() {
            let x = assignment
                .get(l as usize - 1)
                .ok_or(Error::MissingAssignment(l))?;
            prod = alg.mul_unchecked(&prod, x);
            if prod.is_zero() {
                break;
            }
        }
        out = out.add(&prod.scale(c));
    }
    Ok(out)
}

/// Evaluation rows of one tuple of basis monomials: for each output
/// monomial, the signed list of word ranks producing it.
pub(crate) type TupleRows = Vec<(MonoKey, Vec<(u32, i8)>)>;

/// Walks all orderings of the tuple, pruning as soon as a prefix product
/// vanishes, and groups the surviving words by their product monomial.
pub(crate) fn tuple_rows(alg: &FiniteAlgebra, keys: &[MonoKey], out: &mut TupleRows) {
    out.clear();
    let n = keys.len();
    if n == 0 {
        return;
    }
    let fact: Vec<usize> = (0..n).map(|k| factorial(k) as usize).collect();
    let mut walker = Walker { alg, keys, n, fact: &fact, out };
    for (v, &k) in keys.iter().enumerate() {
        let r = v * walker.fact[n - 1];
        walker.go(1, 1 << v, k, 1, r);
    }
}

struct Walker<'a> {
    alg: &'a FiniteAlgebra,
    keys: &'a [MonoKey],
    n: usize,
    fact: &'a [usize],
    out: &'a mut TupleRows,
}

impl Walker<'_> {
    fn go(&mut self, depth: usize, used: u32, cur: MonoKey, sign: i8, rank: usize) {
        if depth == self.n {
            match self.out.iter_mut().find(|(k, _)| *k == cur) {
                Some((_, v)) => v.push((rank as u32, sign)),
                None => self.out.push((cur, vec![(rank as u32, sign)])),
            }
            return;
        }
        let f = self.fact[self.n - 1 - depth];
        let mut smaller = 0;
        for v in 0..self.n {
            if used & (1 << v) != 0 {
                continue;
            }
            if let Some((k, s)) = self.alg.key_mul(&cur, &self.keys[v]) {
                self.go(depth + 1, used | (1 << v), k, sign * s, rank + smaller * f);
            }
            smaller += 1;
        }
    }
}

/// How tuples of basis monomials are chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TupleStrategy {
    /// Every tuple of basis elements (tuples whose Grassmann parts overlap
    /// are skipped, they evaluate to zero on every word).
    Literal,
    /// One tuple per orbit of the generator relabelling symmetry: slot `j`
    /// receives the next consecutive block of generators.
    Compressed,
    /// Per-slot representative sets over fresh generators.
    Representative(Profile),
}

#[derive(Clone, Copy)]
struct SlotOption {
    key: MonoKey,
    /// Compressed strategy: number of generators to allocate.
    alloc: Option<u32>,
}

/// Depth-first enumerator of basis tuples with early pruning.
pub(crate) struct TupleSpace {
    host: FiniteAlgebra,
    options: Vec<Vec<SlotOption>>,
    n: usize,
    has_lower: bool,
}

impl TupleSpace {
    pub(crate) fn new(alg: &FiniteAlgebra, n: usize, strategy: TupleStrategy) -> Self {
        let (host, options) = match strategy {
            TupleStrategy::Literal => {
                let opts: Vec<SlotOption> = alg.basis().iter().map(|k| SlotOption { key: *k, alloc: None }).collect();
                (alg.clone(), vec![opts; n])
            }
            TupleStrategy::Compressed => {
                let mut shapes: Vec<MonoKey> = alg
                    .basis()
                    .iter()
                    .map(|k| MonoKey::new(k.row, k.col, k.tpow, (1u64 << k.size()) - 1))
                    .collect();
                shapes.sort();
                shapes.dedup();
                let opts: Vec<SlotOption> = shapes
                    .into_iter()
                    .map(|k| SlotOption { key: k, alloc: Some(k.size()) })
                    .collect();
                (alg.clone(), vec![opts; n])
            }
            TupleStrategy::Representative(profile) => {
                let opts = (1..=n)
                    .map(|i| profile.slot_options(i).into_iter().map(|k| SlotOption { key: k, alloc: None }).collect())
                    .collect();
                (profile.host(n), opts)
            }
        };
        let has_lower = options.iter().flatten().any(|o| o.key.row > o.key.col);
        TupleSpace {
            host,
            options,
            n,
            has_lower,
        }
    }

    pub(crate) fn host(&self) -> &FiniteAlgebra {
        &self.host
    }

    /// Tuples of length `depth` that survive pruning, in enumeration order.
    /// They serve as independent work units.
    pub(crate) fn prefixes(&self, depth: usize) -> Vec<Vec<MonoKey>> {
        let mut out = Vec::new();
        self.walk(depth.min(self.n), &mut Vec::new(), &mut |t| {
            out.push(t.to_vec());
            true
        });
        out
    }

    /// Calls `visit` on every complete tuple extending `prefix` until it
    /// returns `false`.
    pub(crate) fn for_each_extension(&self, prefix: &[MonoKey], visit: &mut dyn FnMut(&[MonoKey]) -> bool) {
        let mut cur = prefix.to_vec();
        self.walk(self.n, &mut cur, visit);
    }

    fn walk(&self, depth: usize, cur: &mut Vec<MonoKey>, visit: &mut dyn FnMut(&[MonoKey]) -> bool) -> bool {
        if cur.len() == depth {
            if depth < self.n || self.final_ok(cur) {
                return visit(cur);
            }
            return true;
        }
        let slot = cur.len();
        let used: u64 = cur.iter().fold(0, |m, k| m | k.mask);
        let tsum: usize = cur.iter().map(|k| k.tpow as usize).sum();
        let upper_offdiag = cur.iter().filter(|k| k.row < k.col).count();
        for opt in &self.options[slot] {
            let mut key = opt.key;
            if let Some(size) = opt.alloc {
                let start = 64 - used.leading_zeros();
                if start + size > self.host.grassmann_rank() as u32 {
                    continue;
                }
                key.mask = if size == 0 { 0 } else { ((1u64 << size) - 1) << start };
            } else if key.mask & used != 0 {
                continue;
            }
            if tsum + key.tpow as usize >= self.host.tpow_limit() as usize {
                continue;
            }
            if !self.has_lower && key.row < key.col && upper_offdiag >= 1 {
                continue;
            }
            cur.push(key);
            let go_on = self.walk(depth, cur, visit);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// A walk through the two matrix positions needs the numbers of
    /// `(1,2)` and `(2,1)` entries to differ by at most one.
    fn final_ok(&self, t: &[MonoKey]) -> bool {
        if !self.has_lower {
            return true;
        }
        let up = t.iter().filter(|k| k.row < k.col).count() as i64;
        let down = t.iter().filter(|k| k.row > k.col).count() as i64;
        (up - down).abs() <= 1
    }
}
