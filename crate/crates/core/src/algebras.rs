//! Finite-dimensional test algebras: 2×2 matrices (or a single entry) over
//! `𝒞_p ⊗ E⁽ʳ⁾` with `𝒞_p = K[t]/(tᵖ)`, restricted by a per-entry profile.
//!
//! Every algebra here has a basis of monomials `tᵏ e_S e_{ij}`, described by
//! a [`MonoKey`], and the product of two basis monomials is again a signed
//! basis monomial or zero. That makes evaluation of multilinear polynomials
//! on basis tuples a pure sign computation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grassmann::{format_mask, format_term, mask_sign, GrassmannElement};
use crate::kernel::Scalar;

/// Basis monomial `t^tpow · e_mask · e_{row+1, col+1}` (zero-based position).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonoKey {
    pub row: u8,
    pub col: u8,
    pub tpow: u8,
    pub mask: u64,
}

impl MonoKey {
    pub const fn new(row: u8, col: u8, tpow: u8, mask: u64) -> Self {
        MonoKey { row, col, tpow, mask }
    }

    pub fn size(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_even(&self) -> bool {
        self.size().is_multiple_of(2)
    }
}

/// The algebras that can be built, with their parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AlgebraKind {
    /// `A⁽ⁿ⁾ = (E₀⁽ⁿ⁾ E⁽ⁿ⁾; 0 E⁽ⁿ⁾)`.
    A { n: usize },
    /// `M₁,₁⁽ᵏ⁾ = (E₀⁽ᵏ⁾ E₁⁽ᵏ⁾; E₁⁽ᵏ⁾ E₀⁽ᵏ⁾)`.
    M11 { k: usize },
    /// Upper triangular 2×2 matrices over `K`.
    UT2,
    /// `E⁽ⁿ⁾` itself.
    E { n: usize },
    /// `R_p` with the Grassmann part truncated to `E⁽ᵈ⁾`.
    Rp { p: usize, d: usize },
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::A { n } => write!(f, "A(n={n})"),
            AlgebraKind::M11 { k } => write!(f, "M11(k={k})"),
            AlgebraKind::UT2 => write!(f, "UT2"),
            AlgebraKind::E { n } => write!(f, "E(n={n})"),
            AlgebraKind::Rp { p, d } => write!(f, "Rp(p={p},d={d})"),
        }
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    /// Parses `A(n=2)`, `M11(k=2)`, `UT2`, `E(n=4)`, `Rp(p=2,d=4)`; whitespace
    /// is ignored and a lone positional value is accepted for one-parameter names.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidAlgebra(format!("{s:?}: {msg}"));
        let (name, args) = match compact.find('(') {
            Some(open) => {
                if !compact.ends_with(')') {
                    return Err(bad("missing ')'"));
                }
                (&compact[..open], &compact[open + 1..compact.len() - 1])
            }
            None => (compact.as_str(), ""),
        };
        let mut params: BTreeMap<String, usize> = BTreeMap::new();
        let mut positional = Vec::new();
        for part in args.split(',').filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => {
                    let v = v.parse().map_err(|_| bad(&format!("bad value in {part:?}")))?;
                    params.insert(k.to_string(), v);
                }
                None => positional.push(part.parse::<usize>().map_err(|_| bad(&format!("bad value {part:?}")))?),
            }
        }
        let mut take = |key: &str, pos: usize| -> Result<usize> {
            params
                .remove(key)
                .or_else(|| positional.get(pos).copied())
                .ok_or_else(|| bad(&format!("missing parameter {key}")))
        };
        let kind = match name {
            "A" => AlgebraKind::A { n: take("n", 0)? },
            "M11" => AlgebraKind::M11 { k: take("k", 0)? },
            "UT2" => AlgebraKind::UT2,
            "E" => AlgebraKind::E { n: take("n", 0)? },
            "Rp" => AlgebraKind::Rp {
                p: take("p", 0)?,
                d: take("d", 1)?,
            },
            _ => return Err(bad("unknown algebra name")),
        };
        if let Some(k) = params.keys().next() {
            return Err(bad(&format!("unexpected parameter {k}")));
        }
        Ok(kind)
    }
}

/// An element: a finite combination of basis monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement<S> {
    terms: BTreeMap<MonoKey, S>,
}

impl<S: Scalar> Default for AlgElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AlgElement<S> {
    pub fn zero() -> Self {
        AlgElement { terms: BTreeMap::new() }
    }

    pub fn monomial(key: MonoKey, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (MonoKey, S)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    /// `g · e_{row+1,col+1}` for a Grassmann element `g` (no `t` factor).
    pub fn from_grassmann(row: u8, col: u8, g: &GrassmannElement<S>) -> Self {
        Self::from_terms(g.terms().map(|(m, c)| (MonoKey::new(row, col, 0, m), c.clone())))
    }

    pub fn add_term(&mut self, key: MonoKey, c: S) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoKey, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(k, x)| (*k, x.clone() * c.clone())).collect(),
        }
    }

    /// The `(row, col)` entry's `tᵏ` coefficient as a Grassmann element of `rank`.
    pub fn entry(&self, row: u8, col: u8, tpow: u8, rank: usize) -> Result<GrassmannElement<S>> {
        let mut g = GrassmannElement::zero(rank)?;
        for (k, c) in &self.terms {
            if k.row == row && k.col == col && k.tpow == tpow {
                g = g.add(&GrassmannElement::monomial(rank, k.mask, c.clone())?)?;
            }
        }
        Ok(g)
    }
}

fn position_name(k: &MonoKey, single: bool) -> String {
    let mut s = String::new();
    if k.tpow == 1 {
        s.push('t');
    } else if k.tpow > 1 {
        s.push_str(&format!("t^{}", k.tpow));
    }
    if k.mask != 0 {
        s.push_str(&format_mask(k.mask));
    }
    if !single {
        s.push_str(&format!("e{}{}", k.row + 1, k.col + 1));
    } else if s.is_empty() {
        s.push('1');
    }
    s
}

impl<S: Scalar> AlgElement<S> {
    /// Renders like `2e{1}e{2}e12 - te{3}e22`; `single` drops the matrix
    /// position (for Grassmann algebras).
    pub fn render(&self, single: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let body = position_name(k, single);
            let unit = single && k.mask == 0 && k.tpow == 0;
            format_term(&mut out, i == 0, c, &body, unit);
        }
        out
    }
}

impl<S: Scalar> fmt::Display for AlgElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl<S: Scalar> fmt::Debug for AlgElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// A built algebra: its kind, Grassmann rank, `t` nilpotency order and basis.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    kind: AlgebraKind,
    rank: usize,
    tpow_limit: u8,
    basis: Vec<MonoKey>,
}

impl FiniteAlgebra {
    pub fn build(kind: AlgebraKind) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidAlgebra(format!("{kind}: {msg}")));
        let (rank, tpow_limit) = match kind {
            AlgebraKind::A { n } | AlgebraKind::E { n } => {
                if n < 1 {
                    return bad("n must be at least 1".into());
                }
                (n, 1)
            }
            AlgebraKind::M11 { k } => {
                if k < 1 {
                    return bad("k must be at least 1".into());
                }
                (k, 1)
            }
            AlgebraKind::UT2 => (0, 1),
            AlgebraKind::Rp { p, d } => {
                if p < 2 {
                    return bad("p must be at least 2".into());
                }
                if d < 1 {
                    return bad("d must be at least 1".into());
                }
                if p > u8::MAX as usize {
                    return bad("p is too large".into());
                }
                (d, p as u8)
            }
        };
        if rank > 24 {
            return bad(format!("Grassmann rank {rank} is too large to enumerate a basis"));
        }
        let mut alg = FiniteAlgebra {
            kind,
            rank,
            tpow_limit,
            basis: Vec::new(),
        };
        let positions: &[(u8, u8)] = match kind {
            AlgebraKind::E { .. } => &[(0, 0)],
            AlgebraKind::M11 { .. } => &[(0, 0), (0, 1), (1, 0), (1, 1)],
            _ => &[(0, 0), (0, 1), (1, 1)],
        };
        let mut basis = Vec::new();
        for &(row, col) in positions {
            for tpow in 0..tpow_limit {
                for mask in 0..(1u64 << rank) {
                    let key = MonoKey::new(row, col, tpow, mask);
                    if alg.allows(&key) {
                        basis.push(key);
                    }
                }
            }
        }
        alg.basis = basis;
        Ok(alg)
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::build(name.parse()?)
    }

    /// Same kind of algebra with a different Grassmann rank; used to host
    /// representative tuples for the infinite-rank algebras.
    pub(crate) fn with_rank(kind: AlgebraKind, rank: usize) -> FiniteAlgebra {
        let (kind, tpow_limit) = match kind {
            AlgebraKind::A { .. } => (AlgebraKind::A { n: rank }, 1),
            AlgebraKind::M11 { .. } => (AlgebraKind::M11 { k: rank }, 1),
            AlgebraKind::E { .. } => (AlgebraKind::E { n: rank }, 1),
            AlgebraKind::Rp { p, .. } => (AlgebraKind::Rp { p, d: rank }, p as u8),
            AlgebraKind::UT2 => (AlgebraKind::UT2, 1),
        };
        FiniteAlgebra {
            kind,
            rank,
            tpow_limit,
            basis: Vec::new(),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn grassmann_rank(&self) -> usize {
        self.rank
    }

    pub fn tpow_limit(&self) -> u8 {
        self.tpow_limit
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MonoKey] {
        &self.basis
    }

    pub fn is_single_entry(&self) -> bool {
        matches!(self.kind, AlgebraKind::E { .. })
    }

    pub fn basis_element<S: Scalar>(&self, i: usize) -> Result<AlgElement<S>> {
        let key = self.basis.get(i).ok_or_else(|| {
            Error::InvalidParameter(format!("basis index {i} out of range 0..{}", self.basis.len()))
        })?;
        Ok(AlgElement::monomial(*key, S::one()))
    }

    pub fn one<S: Scalar>(&self) -> AlgElement<S> {
        let mut out = AlgElement::monomial(MonoKey::new(0, 0, 0, 0), S::one());
        if !self.is_single_entry() {
            out.add_term(MonoKey::new(1, 1, 0, 0), S::one());
        }
        out
    }

    /// Whether a basis monomial belongs to this algebra.
    pub fn allows(&self, k: &MonoKey) -> bool {
        if k.tpow >= self.tpow_limit || (self.rank < 64 && k.mask >> self.rank != 0) {
            return false;
        }
        let (r, c) = (k.row, k.col);
        match self.kind {
            AlgebraKind::E { .. } => (r, c) == (0, 0),
            AlgebraKind::UT2 => r <= c && c <= 1 && k.mask == 0,
            AlgebraKind::A { .. } => match (r, c) {
                (0, 0) => k.is_even(),
                (0, 1) | (1, 1) => true,
                _ => false,
            },
            AlgebraKind::M11 { .. } => r <= 1 && c <= 1 && (k.is_even() == (r == c)),
            AlgebraKind::Rp { .. } => match (r, c) {
                (0, 0) => k.tpow == 0 && k.is_even(),
                (0, 1) => true,
                (1, 1) => k.is_even() || k.tpow >= 1,
                _ => false,
            },
        }
    }

    /// Product of two basis monomials: the resulting monomial and its sign,
    /// or `None` when the product vanishes.
    #[inline]
    pub fn key_mul(&self, a: &MonoKey, b: &MonoKey) -> Option<(MonoKey, i8)> {
        if a.col != b.row {
            return None;
        }
        let tpow = a.tpow + b.tpow;
        if tpow >= self.tpow_limit {
            return None;
        }
        let sign = mask_sign(a.mask, b.mask)?;
        Some((MonoKey::new(a.row, b.col, tpow, a.mask | b.mask), sign))
    }

    pub fn validate<S: Scalar>(&self, x: &AlgElement<S>) -> Result<()> {
        for (k, _) in x.terms() {
            if !self.allows(k) {
                return Err(Error::ProfileViolation {
                    algebra: self.name(),
                    detail: format!("monomial {} is not allowed", position_name(k, self.is_single_entry())),
                });
            }
        }
        Ok(())
    }

    /// Product of two elements of this algebra.
    pub fn mul<S: Scalar>(&self, x: &AlgElement<S>, y: &AlgElement<S>) -> Result<AlgElement<S>> {
        self.validate(x)?;
        self.validate(y)?;
        let out = self.mul_unchecked(x, y);
        self.validate(&out)?;
        Ok(out)
    }

    pub(crate) fn mul_unchecked<S: Scalar>(&self, x: &AlgElement<S>, y: &AlgElement<S>) -> AlgElement<S> {
        let mut out = AlgElement::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some((k, sign)) = self.key_mul(a, b) {
                    let v = c.clone() * d.clone();
                    out.add_term(k, if sign > 0 { v } else { -v });
                }
            }
        }
        out
    }

    pub fn render<S: Scalar>(&self, x: &AlgElement<S>) -> String {
        x.render(self.is_single_entry())
    }
}

/// The infinite-rank algebras that are tested through representative tuples.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Profile {
    A,
    M11,
    E,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Profile::A => "A",
            Profile::M11 => "M11",
            Profile::E => "E",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" => Ok(Profile::A),
            "M11" => Ok(Profile::M11),
            "E" => Ok(Profile::E),
            other => Err(Error::InvalidAlgebra(format!("unknown profile {other:?}"))),
        }
    }
}

impl Profile {
    /// The finite algebra of Grassmann rank `2m` that hosts degree-`m` tuples.
    pub fn host(&self, m: usize) -> FiniteAlgebra {
        let kind = match self {
            Profile::A => AlgebraKind::A { n: 2 * m },
            Profile::M11 => AlgebraKind::M11 { k: 2 * m },
            Profile::E => AlgebraKind::E { n: 2 * m },
        };
        FiniteAlgebra::with_rank(kind, 2 * m)
    }

    /// Representatives for variable slot `i` (1-based), built from the two
    /// generators `e_{2i-1}`, `e_{2i}` reserved for that slot.
    pub fn slot_options(&self, i: usize) -> Vec<MonoKey> {
        let a = 1u64 << (2 * i - 2);
        let ab = a | (a << 1);
        let k = MonoKey::new;
        match self {
            Profile::A => vec![
                k(0, 0, 0, 0),
                k(0, 0, 0, ab),
                k(0, 1, 0, 0),
                k(0, 1, 0, a),
                k(0, 1, 0, ab),
                k(1, 1, 0, 0),
                k(1, 1, 0, a),
                k(1, 1, 0, ab),
            ],
            Profile::M11 => vec![
                k(0, 0, 0, 0),
                k(0, 0, 0, ab),
                k(0, 1, 0, a),
                k(1, 0, 0, a),
                k(1, 1, 0, 0),
                k(1, 1, 0, ab),
            ],
            Profile::E => vec![k(0, 0, 0, 0), k(0, 0, 0, a), k(0, 0, 0, ab)],
        }
    }
}

/// All representative `m`-tuples, first slot varying slowest.
pub fn representative_tuples(profile: Profile, m: usize) -> Vec<Vec<MonoKey>> {
    let options: Vec<Vec<MonoKey>> = (1..=m).map(|i| profile.slot_options(i)).collect();
    let mut out = vec![Vec::new()];
    for opts in &options {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for o in opts {
                let mut t = prefix.clone();
                t.push(*o);
                next.push(t);
            }
        }
        out = next;
    }
    out
}
