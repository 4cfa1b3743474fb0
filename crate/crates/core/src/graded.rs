//! Z2-graded spaces, Koszul signs and canonical super-wedge bases.
//!
//! Permutations act on tuples as `σ.X = (X_{σ⁻¹(1)}, …, X_{σ⁻¹(n)})`, so
//! `σ⁻¹X = (X_{σ(1)}, …, X_{σ(n)})`, and on multilinear maps as
//! `(σ.F)(X) = ε(σ, X) F(σ⁻¹X)`. With this convention the Koszul sign is
//! a cocycle: `ε(σσ′, X) = ε(σ, X) ε(σ′, σ⁻¹X)`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Parity {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^self`
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn sum<I: IntoIterator<Item = Parity>>(items: I) -> Parity {
        items.into_iter().fold(Parity::Even, |a, b| a + b)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() * rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parities of the slots of a tuple.
pub type ParityVector = Vec<Parity>;

/// A finite-dimensional Z2-graded space with a labelled basis.
///
/// Basis positions follow the canonical order: every even vector, then
/// every odd vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    labels: Vec<String>,
    n_even: usize,
}

impl GradedSpace {
    pub fn new<S: Into<String>>(
        even: impl IntoIterator<Item = S>,
        odd: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut labels: Vec<String> = even.into_iter().map(Into::into).collect();
        let n_even = labels.len();
        labels.extend(odd.into_iter().map(Into::into));
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Validation(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(GradedSpace { labels, n_even })
    }

    /// Space of dimension `(p|q)` with labels `{prefix}0..` for the even
    /// part and `{prefix}{p}..` for the odd part.
    pub fn with_dims(prefix: &str, p: usize, q: usize) -> Self {
        let labels = (0..p + q).map(|i| format!("{prefix}{i}")).collect();
        GradedSpace { labels, n_even: p }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `(p|q)`
    pub fn dims(&self) -> (usize, usize) {
        (self.n_even, self.labels.len() - self.n_even)
    }

    pub fn parity(&self, pos: usize) -> Parity {
        if pos < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn even_basis(&self) -> &[String] {
        &self.labels[..self.n_even]
    }

    pub fn odd_basis(&self) -> &[String] {
        &self.labels[self.n_even..]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn parities(&self, slots: &[usize]) -> ParityVector {
        slots.iter().map(|&s| self.parity(s)).collect()
    }

    pub fn tuple_parity(&self, slots: &[usize]) -> Parity {
        Parity::sum(slots.iter().map(|&s| self.parity(s)))
    }
}

/// A permutation of `{0, …, n-1}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || hit[i] {
                return Err(Error::Validation(format!("{images:?} is not a permutation")));
            }
            hit[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn signature(&self) -> i32 {
        let n = self.images.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `σ.X = (X_{σ⁻¹(1)}, …, X_{σ⁻¹(n)})`
    pub fn act<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        let mut out = xs.to_vec();
        for (i, &s) in self.images.iter().enumerate() {
            out[s] = xs[i].clone();
        }
        out
    }

    /// `σ⁻¹X = (X_{σ(1)}, …, X_{σ(n)})`
    pub fn act_inverse<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        self.images.iter().map(|&s| xs[s].clone()).collect()
    }
}

fn check_arity(sigma: &Permutation, parities: &[Parity]) -> Result<()> {
    if sigma.degree() != parities.len() {
        return Err(Error::ArityMismatch {
            expected: sigma.degree(),
            got: parities.len(),
        });
    }
    Ok(())
}

/// `K(σ, X) = #{(i, j) : i < j, X_{σ(i)}, X_{σ(j)} odd, σ(j) < σ(i)}`
pub fn koszul_k(sigma: &Permutation, parities: &[Parity]) -> Result<usize> {
    check_arity(sigma, parities)?;
    let s = sigma.images();
    let n = s.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if parities[s[i]].is_odd() && parities[s[j]].is_odd() && s[j] < s[i] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `ε(σ, X) = sgn(σ) · (-1)^{K(σ, X)}`
pub fn koszul_sign(sigma: &Permutation, parities: &[Parity]) -> Result<i32> {
    let k = koszul_k(sigma, parities)?;
    let twist = if k % 2 == 0 { 1 } else { -1 };
    Ok(sigma.signature() * twist)
}

/// A basis element of a super-wedge power: positions sorted ascending with
/// no repeated even position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeIndex(Vec<usize>);

impl WedgeIndex {
    /// Wraps slots already known to be in normal form.
    pub fn from_sorted(slots: Vec<usize>) -> Self {
        debug_assert!(slots.windows(2).all(|w| w[0] <= w[1]));
        WedgeIndex(slots)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn slots(&self) -> &[usize] {
        &self.0
    }

    pub fn into_slots(self) -> Vec<usize> {
        self.0
    }

    pub fn parity(&self, space: &GradedSpace) -> Parity {
        space.tuple_parity(&self.0)
    }

    pub fn is_normal(&self, space: &GradedSpace) -> bool {
        self.0.windows(2).all(|w| {
            w[0] < w[1] || (w[0] == w[1] && space.parity(w[0]).is_odd())
        }) && self.0.iter().all(|&s| s < space.dim())
    }
}

/// Lexicographic enumeration of the normal-form basis of `∧ⁿ space`.
pub fn wedge_basis(space: &GradedSpace, n: usize) -> Vec<WedgeIndex> {
    fn extend(space: &GradedSpace, n: usize, cur: &mut Vec<usize>, out: &mut Vec<WedgeIndex>) {
        if cur.len() == n {
            out.push(WedgeIndex(cur.clone()));
            return;
        }
        let start = match cur.last() {
            None => 0,
            Some(&last) if space.parity(last).is_odd() => last,
            Some(&last) => last + 1,
        };
        for pos in start..space.dim() {
            cur.push(pos);
            extend(space, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(space, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sorts a tuple of basis positions into normal form.
///
/// Returns the normal form `W` and the sign `s` with `F(slots) = s·F(W)`
/// for every sign-invariant `F`, or `None` when an even position repeats
/// (every such `F` vanishes there).
pub fn normalize_tuple(space: &GradedSpace, slots: &[usize]) -> Option<(WedgeIndex, i32)> {
    let n = slots.len();
    let mut sign = 1;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (slots[i], slots[j]);
            if a == b && !space.parity(a).is_odd() {
                return None;
            }
            if a > b && !(space.parity(a).is_odd() && space.parity(b).is_odd()) {
                sign = -sign;
            }
        }
    }
    let mut sorted = slots.to_vec();
    sorted.sort_unstable();
    Some((WedgeIndex(sorted), sign))
}

/// Stable sorting permutation σ, i.e. `σ⁻¹X` is sorted.
pub fn sorting_permutation(slots: &[usize]) -> Permutation {
    let mut idx: Vec<usize> = (0..slots.len()).collect();
    idx.sort_by_key(|&i| (slots[i], i));
    Permutation { images: idx }
}

/// All permutations increasing on each consecutive block of the given
/// sizes, in lexicographic order of their image lists.
pub fn shuffles(block_sizes: &[usize]) -> Vec<Permutation> {
    fn choose(k: usize, avail: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..avail.len() {
            if avail.len() - i < k - cur.len() {
                break;
            }
            cur.push(avail[i]);
            choose(k, avail, i + 1, cur, out);
            cur.pop();
        }
    }
    fn rec(blocks: &[usize], avail: Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some((&k, rest)) = blocks.split_first() else {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        };
        let mut subsets = Vec::new();
        choose(k, &avail, 0, &mut Vec::new(), &mut subsets);
        for subset in subsets {
            let remaining: Vec<usize> = avail.iter().copied().filter(|x| !subset.contains(x)).collect();
            let len = prefix.len();
            prefix.extend(&subset);
            rec(rest, remaining, prefix, out);
            prefix.truncate(len);
        }
    }
    let total: usize = block_sizes.iter().sum();
    let mut out = Vec::new();
    rec(block_sizes, (0..total).collect(), &mut Vec::new(), &mut out);
    out
}
