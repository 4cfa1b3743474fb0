//! Lie superalgebras given by structure constants, homogeneous linear maps,
//! axiom checkers and the standard constructors.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::graded::{wedge_basis, GradedSpace, Parity, WedgeIndex};
use crate::linalg::{is_zero_vec, Matrix, Scalar};
use crate::sum::DirectSum;
use crate::triple::{check_action, ActionMap};

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    /// Basis labels of the arguments at which the identity fails.
    pub at: Vec<String>,
    /// Nonzero terms of `lhs - rhs`, labelled by target basis.
    pub defect: Vec<(String, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation when `defect` is nonzero.
    pub(crate) fn expect_zero(
        &mut self,
        axiom: &str,
        at: Vec<String>,
        target: &GradedSpace,
        defect: &[Scalar],
    ) {
        if !is_zero_vec(defect) {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                at,
                defect: labelled(target, defect),
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }
}

pub(crate) fn labelled(space: &GradedSpace, v: &[Scalar]) -> Vec<(String, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (space.label(i).to_string(), x.clone()))
        .collect()
}

pub(crate) fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

pub(crate) fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (y, xi) in acc.iter_mut().zip(x) {
        if !xi.is_zero() {
            *y += a * xi;
        }
    }
}

pub(crate) fn signed(sign: i32, v: Vec<Scalar>) -> Vec<Scalar> {
    if sign < 0 {
        v.into_iter().map(|x| -x).collect()
    } else {
        v
    }
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A bracket on a graded space, stored as `[bᵢ, bⱼ]` for `i ≤ j` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    space: Arc<GradedSpace>,
    sc: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl SuperAlgebra {
    /// The zero bracket on `space`.
    pub fn new(space: Arc<GradedSpace>) -> Self {
        SuperAlgebra {
            space,
            sc: BTreeMap::new(),
        }
    }

    pub fn abelian(p: usize, q: usize) -> Self {
        SuperAlgebra::new(Arc::new(GradedSpace::with_dims("b", p, q)))
    }

    /// The general linear superalgebra `gl(m|n)` on elementary matrices
    /// with the super-commutator `[a, b] = ab - (-1)^{|a||b|} ba`.
    pub fn gl(m: usize, n: usize) -> Result<Self> {
        let size = m + n;
        if size == 0 {
            return Err(Error::Validation("gl(m, n) needs m + n >= 1".into()));
        }
        let side = |p: usize| p >= m;
        let name = |p: usize, q: usize| {
            if size < 10 {
                format!("E{}{}", p + 1, q + 1)
            } else {
                format!("E{},{}", p + 1, q + 1)
            }
        };
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for p in 0..size {
            for q in 0..size {
                if side(p) == side(q) {
                    even.push((p, q));
                } else {
                    odd.push((p, q));
                }
            }
        }
        let space = Arc::new(GradedSpace::new(
            even.iter().map(|&(p, q)| name(p, q)),
            odd.iter().map(|&(p, q)| name(p, q)),
        )?);
        let units: Vec<(usize, usize)> = even.into_iter().chain(odd).collect();
        let pos = |pq: (usize, usize)| units.iter().position(|&u| u == pq).unwrap();
        let mut alg = SuperAlgebra::new(space.clone());
        for i in 0..units.len() {
            for j in i..units.len() {
                let ((p, q), (r, s)) = (units[i], units[j]);
                let mut v = vec![Scalar::zero(); units.len()];
                if q == r {
                    v[pos((p, s))] += Scalar::one();
                }
                if s == p {
                    let sign = (space.parity(i) * space.parity(j)).sign();
                    v[pos((r, q))] -= Scalar::from_integer(sign.into());
                }
                alg.set_bracket(i, j, v)?;
            }
        }
        Ok(alg)
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Sets `[bᵢ, bⱼ]`; for `i > j` the stored entry is `[bⱼ, bᵢ]`
    /// obtained by super-skew-symmetry. The value must have degree 0.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        let d = self.dim();
        if value.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: value.len(),
            });
        }
        if i >= d || j >= d {
            return Err(Error::Validation(format!("basis index out of range: ({i}, {j})")));
        }
        let expected = self.space.parity(i) + self.space.parity(j);
        if let Some(k) = (0..d).find(|&k| !value[k].is_zero() && self.space.parity(k) != expected) {
            return Err(Error::Validation(format!(
                "[{}, {}] has a {} component {} but must be {}",
                self.space.label(i),
                self.space.label(j),
                self.space.parity(k),
                self.space.label(k),
                expected
            )));
        }
        let (key, value) = if i <= j {
            ((i, j), value)
        } else {
            let sign = -(self.space.parity(i) * self.space.parity(j)).sign();
            ((j, i), signed(sign, value))
        };
        if is_zero_vec(&value) {
            self.sc.remove(&key);
        } else {
            self.sc.insert(key, value);
        }
        Ok(())
    }

    /// Stored entries `((i, j), [bᵢ, bⱼ])` with `i ≤ j`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Scalar>)> {
        self.sc.iter()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let d = self.dim();
        if i <= j {
            self.sc.get(&(i, j)).cloned().unwrap_or_else(|| vec![Scalar::zero(); d])
        } else {
            let sign = -(self.space.parity(i) * self.space.parity(j)).sign();
            match self.sc.get(&(j, i)) {
                Some(v) => signed(sign, v.clone()),
                None => vec![Scalar::zero(); d],
            }
        }
    }

    pub fn bracket_eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dim();
        for v in [x, y] {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let b = self.bracket_basis(i, j);
                axpy(&mut out, &(xi * yj), &b);
            }
        }
        Ok(out)
    }

    fn basis_bracket_vec(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        self.bracket_eval(&basis_vector(self.dim(), i), y)
            .expect("dimensions match")
    }

    /// `[a, b] = -(-1)^{|a||b|}[b, a]` on all basis pairs, including `i = j`.
    pub fn check_super_skew(&self) -> CheckReport {
        let mut report = CheckReport::new("super-skew-symmetry");
        let s = &self.space;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let sign = (s.parity(i) * s.parity(j)).sign();
                let lhs = self.bracket_basis(i, j);
                let rhs = signed(-sign, self.bracket_basis(j, i));
                // The i = j case reads directly from storage.
                let rhs = if i == j {
                    signed(-sign, self.sc.get(&(i, i)).cloned().unwrap_or_else(|| vec![Scalar::zero(); s.dim()]))
                } else {
                    rhs
                };
                let defect = sub_vec(&lhs, &rhs);
                report.expect_zero(
                    "[a,b] = -(-1)^{|a||b|}[b,a]",
                    vec![s.label(i).into(), s.label(j).into()],
                    s,
                    &defect,
                );
            }
        }
        report
    }

    /// `[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]` on all basis triples.
    pub fn check_jacobi(&self) -> CheckReport {
        let mut report = CheckReport::new("Jacobi identity");
        let s = &self.space;
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                let ab = self.bracket_basis(a, b);
                let sign = (s.parity(a) * s.parity(b)).sign();
                for c in 0..d {
                    let lhs = self.basis_bracket_vec(a, &self.bracket_basis(b, c));
                    let first = self
                        .bracket_eval(&ab, &basis_vector(d, c))
                        .expect("dimensions match");
                    let second = signed(sign, self.basis_bracket_vec(b, &self.bracket_basis(a, c)));
                    let defect = sub_vec(&lhs, &add_vec(&first, &second));
                    report.expect_zero(
                        "[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]",
                        vec![s.label(a).into(), s.label(b).into(), s.label(c).into()],
                        s,
                        &defect,
                    );
                }
            }
        }
        report
    }

    pub fn is_lie(&self) -> bool {
        self.check_super_skew().passed() && self.check_jacobi().passed()
    }

    /// The bracket as an element of `Hom(∧²V, V)`. Nonzero even
    /// self-brackets have no image there and are dropped.
    pub fn to_cochain(&self) -> Cochain {
        let mut c = Cochain::zero(self.space.clone(), self.space.clone(), 2);
        for (&(i, j), v) in &self.sc {
            if i == j && !self.space.parity(i).is_odd() {
                continue;
            }
            c.set(WedgeIndex::from_sorted(vec![i, j]), v.clone())
                .expect("normal form key");
        }
        c
    }

    pub fn from_cochain(c: &Cochain) -> Result<Self> {
        if c.arity() != 2 || c.source() != c.target() {
            return Err(Error::ShapeMismatch("a bracket is an arity-2 map V x V -> V".into()));
        }
        let mut alg = SuperAlgebra::new(c.source().clone());
        for (key, v) in c.entries() {
            let s = key.slots();
            alg.set_bracket(s[0], s[1], v.clone())?;
        }
        Ok(alg)
    }

    /// Bases of the even and odd derivation spaces.
    pub fn derivation_space(&self) -> (Vec<LinearMap>, Vec<LinearMap>) {
        (self.derivations_of(Parity::Even), self.derivations_of(Parity::Odd))
    }

    fn derivations_of(&self, parity: Parity) -> Vec<LinearMap> {
        let s = &self.space;
        let d = self.dim();
        // unknown (k, i): coefficient of b_k in D(b_i)
        let unknowns: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (0..d).map(move |k| (k, i)))
            .filter(|&(k, i)| s.parity(k) == s.parity(i) + parity)
            .collect();
        let col_of = |k: usize, i: usize| unknowns.iter().position(|&u| u == (k, i));
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let cij = self.bracket_basis(i, j);
                let twist = (parity * s.parity(i)).sign();
                let mut block = vec![vec![Scalar::zero(); unknowns.len()]; d];
                // D([b_i, b_j])
                for (m, c) in cij.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (r, row) in block.iter_mut().enumerate() {
                        if let Some(col) = col_of(r, m) {
                            row[col] += c;
                        }
                    }
                }
                // - [D b_i, b_j] - (-1)^{s|i|} [b_i, D b_j]
                for k in 0..d {
                    if let Some(col) = col_of(k, i) {
                        for (r, x) in self.bracket_basis(k, j).iter().enumerate() {
                            block[r][col] -= x;
                        }
                    }
                    if let Some(col) = col_of(k, j) {
                        for (r, x) in self.bracket_basis(i, k).iter().enumerate() {
                            if twist > 0 {
                                block[r][col] -= x;
                            } else {
                                block[r][col] += x;
                            }
                        }
                    }
                }
                rows.extend(block);
            }
        }
        let system = if rows.is_empty() {
            Matrix::zeros(0, unknowns.len())
        } else {
            Matrix::from_rows(rows).expect("rectangular system")
        };
        system
            .kernel_basis()
            .into_iter()
            .map(|sol| {
                let mut m = Matrix::zeros(d, d);
                for (&(k, i), x) in unknowns.iter().zip(sol) {
                    m.set(k, i, x);
                }
                LinearMap::new(s.clone(), s.clone(), m).expect("square")
            })
            .collect()
    }
}

/// Bracket of the semidirect product `g ⋉_ρ h` on `g ⊕ h`:
/// `[x+u, y+v] = [x,y] + ρ(x)v - (-1)^{|u||y|}ρ(y)u + [u,v]`.
pub fn semidirect(g: &SuperAlgebra, h: &SuperAlgebra, rho: &ActionMap) -> Result<SuperAlgebra> {
    let report = check_action(g, h, rho);
    if !report.passed() {
        let v = &report.violations[0];
        return Err(Error::InvalidAction(format!("{} fails at {:?}", v.axiom, v.at)));
    }
    semidirect_unchecked(g, h, rho)
}

/// [`semidirect`] without validating the action; used on candidate data.
pub fn semidirect_unchecked(g: &SuperAlgebra, h: &SuperAlgebra, rho: &ActionMap) -> Result<SuperAlgebra> {
    let sum = DirectSum::new(g.space().clone(), h.space().clone());
    let total = sum.space().dim();
    let mut alg = SuperAlgebra::new(sum.space().clone());
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let v = sum.embed_g(&g.bracket_basis(i, j));
            let (a, b) = (sum.g_pos(i), sum.g_pos(j));
            if a <= b {
                alg.set_bracket(a, b, v)?;
            }
        }
        for u in 0..h.dim() {
            // [x, u] = ρ(x)u; the reversed order follows by skew-symmetry.
            let v = sum.embed_h(rho.get(i, u));
            alg.set_bracket(sum.g_pos(i), sum.h_pos(u), v)?;
        }
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let v = sum.embed_h(&h.bracket_basis(i, j));
            let (a, b) = (sum.h_pos(i), sum.h_pos(j));
            if a <= b {
                alg.set_bracket(a, b, v)?;
            }
        }
    }
    debug_assert_eq!(alg.dim(), total);
    Ok(alg)
}

/// Linear map between graded spaces as a `target × source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: Arc<GradedSpace>,
    target: Arc<GradedSpace>,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: Arc<GradedSpace>, target: Arc<GradedSpace>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, map needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(LinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: Arc<GradedSpace>, target: Arc<GradedSpace>) -> Self {
        let m = Matrix::zeros(target.dim(), source.dim());
        LinearMap::new(source, target, m).unwrap()
    }

    pub fn identity(space: Arc<GradedSpace>) -> Self {
        let m = Matrix::identity(space.dim());
        LinearMap::new(space.clone(), space, m).unwrap()
    }

    /// Map sending source basis vector `i` to `images[i]`.
    pub fn from_images(
        source: Arc<GradedSpace>,
        target: Arc<GradedSpace>,
        images: &[Vec<Scalar>],
    ) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: images.len(),
            });
        }
        let m = Matrix::from_columns(target.dim(), images)?;
        LinearMap::new(source, target, m)
    }

    pub fn source(&self) -> &Arc<GradedSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedSpace> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: Scalar) {
        self.matrix.set(row, col, value);
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.target != self.source {
            return Err(Error::SpaceMismatch);
        }
        LinearMap::new(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix)?)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_invertible(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.rank() == self.source.dim()
    }

    /// Component sending parity-β vectors into parity-(β + parity) vectors.
    pub fn parity_part(&self, parity: Parity) -> LinearMap {
        let mut m = self.matrix.clone();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if self.target.parity(r) != self.source.parity(c) + parity {
                    m.set(r, c, Scalar::zero());
                }
            }
        }
        LinearMap::new(self.source.clone(), self.target.clone(), m).unwrap()
    }

    pub fn is_homogeneous(&self, parity: Parity) -> bool {
        self.parity_part(parity) == *self
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &LinearMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinearMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SpaceMismatch);
        }
        let mut m = self.matrix.clone();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                m.set(r, c, f(self.matrix.get(r, c), other.matrix.get(r, c)));
            }
        }
        LinearMap::new(self.source.clone(), self.target.clone(), m)
    }

    pub fn scale(&self, factor: &Scalar) -> LinearMap {
        let mut m = self.matrix.clone();
        for r in 0..m.rows() {
            m.scale_row(r, factor);
        }
        LinearMap::new(self.source.clone(), self.target.clone(), m).unwrap()
    }

    /// `[a, b] = ab - (-1)^{|a||b|} ba`, extended bilinearly over parity parts.
    pub fn super_commutator(a: &LinearMap, b: &LinearMap) -> Result<LinearMap> {
        if a.source != a.target || b.source != b.target || a.source != b.source {
            return Err(Error::SpaceMismatch);
        }
        let mut out = LinearMap::zero(a.source.clone(), a.source.clone());
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let (x, y) = (a.parity_part(pa), b.parity_part(pb));
                let xy = x.compose(&y)?;
                let yx = y.compose(&x)?;
                let term = if (pa * pb).is_odd() { xy.add(&yx)? } else { xy.sub(&yx)? };
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// Whether `D(ab) = D(a)b + (-1)^{s|a|} a D(b)` holds on all basis pairs.
    pub fn is_derivation_of(&self, alg: &SuperAlgebra, parity: Parity) -> bool {
        let s = alg.space();
        let d = alg.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = self.apply(&alg.bracket_basis(i, j)).unwrap();
                let first = alg.bracket_eval(&self.image(i), &basis_vector(d, j)).unwrap();
                let second = alg.bracket_eval(&basis_vector(d, i), &self.image(j)).unwrap();
                let second = signed((parity * s.parity(i)).sign(), second);
                is_zero_vec(&sub_vec(&lhs, &add_vec(&first, &second)))
            })
        })
    }

    /// Whether `f[a, b] = [f a, f b]` on all basis pairs.
    pub fn is_homomorphism(&self, from: &SuperAlgebra, to: &SuperAlgebra) -> bool {
        (0..from.dim()).all(|i| {
            (0..from.dim()).all(|j| {
                let lhs = self.apply(&from.bracket_basis(i, j)).unwrap();
                let rhs = to.bracket_eval(&self.image(i), &self.image(j)).unwrap();
                lhs == rhs
            })
        })
    }
}

/// Normal-form keys of `∧ⁿ` paired with the source space; re-exported for
/// callers that enumerate cochain coordinates.
pub fn wedge_keys(space: &GradedSpace, n: usize) -> Vec<WedgeIndex> {
    wedge_basis(space, n)
}
