//! Super-antisymmetric multilinear maps, the insertion product `∘` and the
//! graded bracket built from it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{koszul_sign, normalize_tuple, shuffles, wedge_basis, GradedSpace, Parity, WedgeIndex};
use crate::linalg::{is_zero_vec, Scalar};

/// `(weight, parity)` with weight = arity − 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub weight: usize,
    pub parity: Parity,
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.parity)
    }
}

/// A sign-invariant multilinear map `Vⁿ → W`, stored on normal-form tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    source: Arc<GradedSpace>,
    target: Arc<GradedSpace>,
    arity: usize,
    coeffs: BTreeMap<WedgeIndex, Vec<Scalar>>,
}

impl Cochain {
    pub fn zero(source: Arc<GradedSpace>, target: Arc<GradedSpace>, arity: usize) -> Self {
        Cochain {
            source,
            target,
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(space: Arc<GradedSpace>) -> Self {
        let mut c = Cochain::zero(space.clone(), space.clone(), 1);
        for i in 0..space.dim() {
            let mut v = vec![Scalar::zero(); space.dim()];
            v[i] = Scalar::one();
            c.coeffs.insert(WedgeIndex::from_sorted(vec![i]), v);
        }
        c
    }

    /// Builds a cochain from its values on normal-form tuples.
    pub fn from_fn(
        source: Arc<GradedSpace>,
        target: Arc<GradedSpace>,
        arity: usize,
        f: impl Fn(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let mut c = Cochain::zero(source.clone(), target, arity);
        for key in wedge_basis(&source, arity) {
            let v = f(key.slots());
            debug_assert_eq!(v.len(), c.target.dim());
            if !is_zero_vec(&v) {
                c.coeffs.insert(key, v);
            }
        }
        c
    }

    /// Coordinates in the basis `(key, t)` with key-major order over
    /// `wedge_basis(source, arity)`.
    pub fn from_coords(
        source: Arc<GradedSpace>,
        target: Arc<GradedSpace>,
        arity: usize,
        coords: &[Scalar],
    ) -> Result<Self> {
        let keys = wedge_basis(&source, arity);
        let d = target.dim();
        if coords.len() != keys.len() * d {
            return Err(Error::DimensionMismatch {
                expected: keys.len() * d,
                got: coords.len(),
            });
        }
        let mut c = Cochain::zero(source, target, arity);
        for (k, key) in keys.into_iter().enumerate() {
            let v = coords[k * d..(k + 1) * d].to_vec();
            if !is_zero_vec(&v) {
                c.coeffs.insert(key, v);
            }
        }
        Ok(c)
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        let d = self.target.dim();
        let mut out = Vec::new();
        for key in wedge_basis(&self.source, self.arity) {
            match self.coeffs.get(&key) {
                Some(v) => out.extend(v.iter().cloned()),
                None => out.extend(std::iter::repeat_with(Scalar::zero).take(d)),
            }
        }
        out
    }

    pub fn source(&self) -> &Arc<GradedSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedSpace> {
        &self.target
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn weight(&self) -> usize {
        self.arity.saturating_sub(1)
    }

    /// Nonzero stored values in key order.
    pub fn entries(&self) -> impl Iterator<Item = (&WedgeIndex, &Vec<Scalar>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn set(&mut self, key: WedgeIndex, value: Vec<Scalar>) -> Result<()> {
        if key.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: key.arity(),
            });
        }
        if !key.is_normal(&self.source) {
            return Err(Error::Validation(format!("{:?} is not in normal form", key.slots())));
        }
        if value.len() != self.target.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.target.dim(),
                got: value.len(),
            });
        }
        if is_zero_vec(&value) {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    pub fn get(&self, key: &WedgeIndex) -> Option<&Vec<Scalar>> {
        self.coeffs.get(key)
    }

    /// Value on an arbitrary tuple of basis positions.
    pub fn eval(&self, slots: &[usize]) -> Result<Vec<Scalar>> {
        if slots.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: slots.len(),
            });
        }
        if let Some(&bad) = slots.iter().find(|&&s| s >= self.source.dim()) {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                got: bad,
            });
        }
        Ok(self.eval_unchecked(slots))
    }

    pub(crate) fn eval_unchecked(&self, slots: &[usize]) -> Vec<Scalar> {
        let zero = || vec![Scalar::zero(); self.target.dim()];
        match normalize_tuple(&self.source, slots) {
            None => zero(),
            Some((key, sign)) => match self.coeffs.get(&key) {
                None => zero(),
                Some(v) if sign > 0 => v.clone(),
                Some(v) => v.iter().map(|x| -x).collect(),
            },
        }
    }

    /// The component raising parity by `parity`.
    pub fn parity_part(&self, parity: Parity) -> Cochain {
        let mut out = Cochain::zero(self.source.clone(), self.target.clone(), self.arity);
        for (key, v) in &self.coeffs {
            let want = key.parity(&self.source) + parity;
            let w: Vec<Scalar> = v
                .iter()
                .enumerate()
                .map(|(t, x)| {
                    if self.target.parity(t) == want {
                        x.clone()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect();
            if !is_zero_vec(&w) {
                out.coeffs.insert(key.clone(), w);
            }
        }
        out
    }

    pub fn split(&self) -> (Cochain, Cochain) {
        (self.parity_part(Parity::Even), self.parity_part(Parity::Odd))
    }

    /// Nonzero homogeneous components tagged by parity.
    pub(crate) fn parts(&self) -> Vec<(Parity, Cochain)> {
        [Parity::Even, Parity::Odd]
            .into_iter()
            .map(|p| (p, self.parity_part(p)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `None` if both parity components are nonzero; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        match self.parts().as_slice() {
            [] => Some(Parity::Even),
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn bidegree(&self) -> Option<Bidegree> {
        self.parity().map(|parity| Bidegree {
            weight: self.weight(),
            parity,
        })
    }

    fn check_same_shape(&self, other: &Cochain) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SpaceMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (key, v) in &other.coeffs {
            out.add_at(key, v, &Scalar::one());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (key, v) in &other.coeffs {
            out.add_at(key, v, &-Scalar::one());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Cochain {
        let mut out = Cochain::zero(self.source.clone(), self.target.clone(), self.arity);
        if factor.is_zero() {
            return out;
        }
        for (key, v) in &self.coeffs {
            out.coeffs.insert(key.clone(), v.iter().map(|x| x * factor).collect());
        }
        out
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-Scalar::one())
    }

    fn add_at(&mut self, key: &WedgeIndex, v: &[Scalar], factor: &Scalar) {
        let d = self.target.dim();
        let entry = self
            .coeffs
            .entry(key.clone())
            .or_insert_with(|| vec![Scalar::zero(); d]);
        for (y, x) in entry.iter_mut().zip(v) {
            *y += x * factor;
        }
        if is_zero_vec(entry) {
            self.coeffs.remove(key);
        }
    }
}

fn check_insertable(f: &Cochain, g: &Cochain) -> Result<()> {
    if f.source != g.source || g.target != f.source {
        return Err(Error::SpaceMismatch);
    }
    if f.arity == 0 || g.arity == 0 {
        return Err(Error::ShapeMismatch("insertion needs arities >= 1".into()));
    }
    Ok(())
}

/// `(F∘G)(X)` for `G` homogeneous of parity `g_par`:
/// `Σ_{σ ∈ S(n, n'+1)} ε(σ,X) (-1)^{g_par·(x_{σ(1)}+…+x_{σ(n)})} F(X_{σ(1..n)}, G(X_{σ(n+1..)}))`.
fn circ_hom_at(f: &Cochain, g: &Cochain, g_par: Parity, slots: &[usize]) -> Vec<Scalar> {
    let space = &f.source;
    let n = f.arity - 1;
    let parities = space.parities(slots);
    let mut out = vec![Scalar::zero(); f.target.dim()];
    for sigma in shuffles(&[n, g.arity]) {
        let idx = sigma.images();
        let xi: Vec<usize> = idx[..n].iter().map(|&i| slots[i]).collect();
        let xj: Vec<usize> = idx[n..].iter().map(|&i| slots[i]).collect();
        let inner = g.eval_unchecked(&xj);
        if is_zero_vec(&inner) {
            continue;
        }
        let mut sign = koszul_sign(&sigma, &parities).expect("matching lengths");
        if (g_par * space.tuple_parity(&xi)).is_odd() {
            sign = -sign;
        }
        let mut args = xi;
        args.push(0);
        for (k, c) in inner.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            args[n] = k;
            let outer = f.eval_unchecked(&args);
            let coeff = if sign > 0 { c.clone() } else { -c };
            for (y, x) in out.iter_mut().zip(&outer) {
                if !x.is_zero() {
                    *y += &coeff * x;
                }
            }
        }
    }
    out
}

fn add_into(acc: &mut [Scalar], v: &[Scalar], sign: i32) {
    for (y, x) in acc.iter_mut().zip(v) {
        if x.is_zero() {
            continue;
        }
        if sign > 0 {
            *y += x;
        } else {
            *y -= x;
        }
    }
}

fn circ_parts_at(f: &Cochain, g_parts: &[(Parity, Cochain)], slots: &[usize]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); f.target.dim()];
    for (p, g) in g_parts {
        add_into(&mut out, &circ_hom_at(f, g, *p, slots), 1);
    }
    out
}

/// `[F,G] = Σ F_f∘G_g − (−1)^{nn'+fg} G_g∘F_f` over homogeneous parts.
pub(crate) fn bracket_parts_at(
    f_parts: &[(Parity, Cochain)],
    g_parts: &[(Parity, Cochain)],
    slots: &[usize],
) -> Vec<Scalar> {
    let dim = match (f_parts.first(), g_parts.first()) {
        (Some((_, f)), _) => f.target.dim(),
        (None, Some((_, g))) => g.target.dim(),
        (None, None) => return Vec::new(),
    };
    let mut out = vec![Scalar::zero(); dim];
    for (pf, f) in f_parts {
        for (pg, g) in g_parts {
            let (n, m) = (f.weight(), g.weight());
            add_into(&mut out, &circ_hom_at(f, g, *pg, slots), 1);
            let sign = if (n * m) % 2 == 1 { -1 } else { 1 } * (*pf * *pg).sign();
            add_into(&mut out, &circ_hom_at(g, f, *pf, slots), -sign);
        }
    }
    out
}

fn materialize(
    source: Arc<GradedSpace>,
    target: Arc<GradedSpace>,
    arity: usize,
    value: impl Fn(&[usize]) -> Vec<Scalar> + Sync,
) -> Cochain {
    let keys = wedge_basis(&source, arity);
    let values: Vec<(WedgeIndex, Vec<Scalar>)> = keys
        .into_par_iter()
        .map(|k| {
            let v = value(k.slots());
            (k, v)
        })
        .filter(|(_, v)| !is_zero_vec(v))
        .collect();
    let mut out = Cochain::zero(source, target, arity);
    out.coeffs.extend(values);
    out
}

/// The insertion product `F∘G`, bilinear over homogeneous parts of `G`.
pub fn circ(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_insertable(f, g)?;
    let g_parts = g.parts();
    let arity = f.arity + g.arity - 1;
    Ok(materialize(f.source.clone(), f.target.clone(), arity, |s| {
        circ_parts_at(f, &g_parts, s)
    }))
}

/// `(F∘G)` evaluated at one tuple.
pub fn circ_at(f: &Cochain, g: &Cochain, slots: &[usize]) -> Result<Vec<Scalar>> {
    check_insertable(f, g)?;
    check_slots(f, g, slots)?;
    Ok(circ_parts_at(f, &g.parts(), slots))
}

fn check_slots(f: &Cochain, g: &Cochain, slots: &[usize]) -> Result<()> {
    let arity = f.arity + g.arity - 1;
    if slots.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: slots.len(),
        });
    }
    if let Some(&bad) = slots.iter().find(|&&s| s >= f.source.dim()) {
        return Err(Error::DimensionMismatch {
            expected: f.source.dim(),
            got: bad,
        });
    }
    Ok(())
}

fn check_bracketable(f: &Cochain, g: &Cochain) -> Result<()> {
    if f.source != f.target {
        return Err(Error::SpaceMismatch);
    }
    check_insertable(f, g)
}

/// The graded bracket `[F,G] = F∘G − (−1)^{nn'+ff'} G∘F`.
pub fn nr_bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_bracketable(f, g)?;
    let (fp, gp) = (f.parts(), g.parts());
    let arity = f.arity + g.arity - 1;
    Ok(materialize(f.source.clone(), f.target.clone(), arity, |s| {
        bracket_parts_at(&fp, &gp, s)
    }))
}

pub fn bracket_at(f: &Cochain, g: &Cochain, slots: &[usize]) -> Result<Vec<Scalar>> {
    check_bracketable(f, g)?;
    check_slots(f, g, slots)?;
    Ok(bracket_parts_at(&f.parts(), &g.parts(), slots))
}
