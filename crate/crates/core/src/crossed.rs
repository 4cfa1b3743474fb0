//! Crossed homomorphisms `D: g → h` with respect to an action, their
//! bracket and differential, cohomology, and morphisms between them.

use std::sync::Arc;

use num_traits::Zero;

use crate::cochain::{bracket_parts_at, nr_bracket, Cochain};
use crate::error::{Error, Result};
use crate::graded::{koszul_sign, shuffles, wedge_basis, Parity, WedgeIndex};
use crate::linalg::{is_zero_vec, Matrix, Scalar};
use crate::superalgebra::{add_vec, basis_vector, signed, sub_vec, CheckReport, LinearMap};
use crate::sum::{Block, BlockShape, DirectSum, Side};
use crate::triple::{bracket_matrix, parity_cohomology, ComplexBasis, LieSupActTriple, ParityDims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verification {
    Unverified,
    Verified,
    Failed,
}

/// An even linear map `g → h` together with the triple it refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedHom {
    triple: Arc<LieSupActTriple>,
    map: LinearMap,
    status: Verification,
}

impl CrossedHom {
    pub fn candidate(triple: Arc<LieSupActTriple>, map: LinearMap) -> Result<Self> {
        if map.source() != triple.g().space() || map.target() != triple.h().space() {
            return Err(Error::SpaceMismatch);
        }
        if !map.is_homogeneous(Parity::Even) {
            return Err(Error::Validation("a crossed homomorphism must be even".into()));
        }
        Ok(CrossedHom {
            triple,
            map,
            status: Verification::Unverified,
        })
    }

    /// A candidate that must pass [`check_crossed`].
    pub fn new(triple: Arc<LieSupActTriple>, map: LinearMap) -> Result<Self> {
        let mut d = CrossedHom::candidate(triple, map)?;
        let report = d.verify();
        if let Some(v) = report.violations.first() {
            return Err(Error::Validation(format!("not a crossed homomorphism: fails at {:?}", v.at)));
        }
        Ok(d)
    }

    pub fn zero(triple: Arc<LieSupActTriple>) -> Self {
        let map = LinearMap::zero(triple.g().space().clone(), triple.h().space().clone());
        CrossedHom {
            triple,
            map,
            status: Verification::Verified,
        }
    }

    pub fn verify(&mut self) -> CheckReport {
        let report = check_crossed(self);
        self.status = if report.passed() {
            Verification::Verified
        } else {
            Verification::Failed
        };
        report
    }

    pub fn status(&self) -> Verification {
        self.status
    }

    pub fn triple(&self) -> &Arc<LieSupActTriple> {
        &self.triple
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `D` as an arity-1 cochain `g → h`.
    pub fn to_cochain(&self) -> Cochain {
        let t = &self.triple;
        Cochain::from_fn(t.g().space().clone(), t.h().space().clone(), 1, |s| self.map.image(s[0]))
    }
}

/// `D[x,y] = ρ(x)D(y) − (−1)^{|x||y|}ρ(y)D(x) + [D(x), D(y)]` on basis pairs.
pub fn check_crossed(d: &CrossedHom) -> CheckReport {
    let t = &d.triple;
    let gs = t.g().space();
    let mut report = CheckReport::new("crossed homomorphism");
    for i in 0..gs.dim() {
        for j in 0..gs.dim() {
            report.expect_zero(
                "D[x,y] = ρ(x)D(y) - (-1)^{|x||y|}ρ(y)D(x) + [D(x),D(y)]",
                vec![gs.label(i).into(), gs.label(j).into()],
                t.h().space(),
                &crossed_defect(d, i, j),
            );
        }
    }
    report
}

fn crossed_defect(d: &CrossedHom, i: usize, j: usize) -> Vec<Scalar> {
    let t = &d.triple;
    let (gs, dg) = (t.g().space(), t.g().dim());
    let (x, y) = (basis_vector(dg, i), basis_vector(dg, j));
    let (dx, dy) = (d.map.image(i), d.map.image(j));
    let lhs = d.map.apply(&t.g().bracket_basis(i, j)).unwrap();
    let sign = (gs.parity(i) * gs.parity(j)).sign();
    let rhs = sub_vec(&t.rho().apply(&x, &dy), &signed(sign, t.rho().apply(&y, &dx)));
    let rhs = add_vec(&rhs, &t.h().bracket_eval(&dx, &dy).unwrap());
    sub_vec(&lhs, &rhs)
}

/// Basis pairs `(i, j)` at which the graph of `D` is not closed under the
/// semidirect bracket.
pub fn graph_failures(d: &CrossedHom) -> Vec<(usize, usize)> {
    let t = &d.triple;
    let sum = t.sum();
    let l = t.semidirect();
    let dg = t.g().dim();
    let lift = |v: &[Scalar]| add_vec(&sum.embed_g(v), &sum.embed_h(&d.map.apply(v).unwrap()));
    let mut out = Vec::new();
    for i in 0..dg {
        for j in 0..dg {
            let (x, y) = (basis_vector(dg, i), basis_vector(dg, j));
            let lhs = l.bracket_eval(&lift(&x), &lift(&y)).unwrap();
            let rhs = lift(&t.g().bracket_basis(i, j));
            if lhs != rhs {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn graph_check(d: &CrossedHom) -> bool {
    graph_failures(d).is_empty()
}

fn hat_g_to_h(sum: &DirectSum, f: &Cochain) -> Result<Cochain> {
    Ok(Block::from_cochain(sum, Side::G, f, Side::H)?.hat_extend(sum))
}

fn check_g_to_h(t: &LieSupActTriple, f: &Cochain) -> Result<()> {
    if f.source() != t.g().space() || f.target() != t.h().space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

/// `[a, b]` read off on the block `∧ⁿg → h`, as a cochain on `g`.
fn bracket_on_g(sum: &DirectSum, a: &Cochain, b: &Cochain) -> Result<Cochain> {
    let arity = a.arity() + b.arity() - 1;
    let (ap, bp) = (a.parts(), b.parts());
    let shape = BlockShape::new(arity, 0, Side::H);
    let mut block = Block::zero(sum, shape);
    for (gk, hk) in shape.keys(sum) {
        let v = bracket_parts_at(&ap, &bp, &sum.block_tuple(&gk, &hk));
        if !v.is_empty() {
            block.set(gk, hk, sum.project_h(&v))?;
        }
    }
    block.to_cochain(sum)
}

/// `⟦f₁, f₂⟧ = (−1)^{m−1}[[μ̂, f̂₁], f̂₂]` restricted to `∧^{m+n}g → h`.
pub fn ch_bracket(t: &LieSupActTriple, f1: &Cochain, f2: &Cochain) -> Result<Cochain> {
    check_g_to_h(t, f1)?;
    check_g_to_h(t, f2)?;
    let sum = t.sum();
    let inner = nr_bracket(&t.mu_hat(), &hat_g_to_h(sum, f1)?)?;
    let out = bracket_on_g(sum, &inner, &hat_g_to_h(sum, f2)?)?;
    Ok(if f1.arity() % 2 == 0 { out.neg() } else { out })
}

/// `⟦f₁, f₂⟧(X) = Σ_{σ ∈ S(m,n)} ε(σ,X) (−1)^{|f₂|(x_{σ(1)}+…+x_{σ(m)})}
/// μ(f₁(X_{σ(1..m)}), f₂(X_{σ(m+1..)}))`, per parity part of `f₂`.
pub fn ch_bracket_closed_form(t: &LieSupActTriple, f1: &Cochain, f2: &Cochain) -> Result<Cochain> {
    check_g_to_h(t, f1)?;
    check_g_to_h(t, f2)?;
    let (m, n) = (f1.arity(), f2.arity());
    let gs = t.g().space().clone();
    let parts = f2.parts();
    let perms = shuffles(&[m, n]);
    Ok(Cochain::from_fn(gs.clone(), t.h().space().clone(), m + n, |xs| {
        let ps = gs.parities(xs);
        let mut out = vec![Scalar::zero(); t.h().dim()];
        for sigma in &perms {
            let idx = sigma.images();
            let xi: Vec<usize> = idx[..m].iter().map(|&i| xs[i]).collect();
            let xj: Vec<usize> = idx[m..].iter().map(|&i| xs[i]).collect();
            let a = f1.eval(&xi).unwrap();
            if is_zero_vec(&a) {
                continue;
            }
            let eps = koszul_sign(sigma, &ps).unwrap();
            for (s, f) in &parts {
                let b = f.eval(&xj).unwrap();
                let sign = eps * (*s * gs.tuple_parity(&xi)).sign();
                let v = t.h().bracket_eval(&a, &b).unwrap();
                out = add_vec(&out, &signed(sign, v));
            }
        }
        out
    }))
}

/// `∂f = [π̂ + ρ̂, f̂]` restricted to `∧^{m+1}g → h`.
pub fn del_pi_rho(t: &LieSupActTriple, f: &Cochain) -> Result<Cochain> {
    check_g_to_h(t, f)?;
    let sum = t.sum();
    let omega = t.pi_hat().add(&t.rho_hat())?;
    bracket_on_g(sum, &omega, &hat_g_to_h(sum, f)?)
}

/// `∂D + ½⟦D, D⟧`.
pub fn ch_mc_residual(d: &CrossedHom) -> Result<Cochain> {
    let t = &d.triple;
    let c = d.to_cochain();
    let half = Scalar::new(1.into(), 2.into());
    del_pi_rho(t, &c)?.add(&ch_bracket(t, &c, &c)?.scale(&half))
}

/// `π̂ + ρ̂ + [μ̂, D̂]`; bracketing with it is `d_D = ∂ + ⟦D, ·⟧`.
pub fn twisted_element(d: &CrossedHom) -> Result<Cochain> {
    let t = &d.triple;
    let sum = t.sum();
    let twist = nr_bracket(&t.mu_hat(), &hat_g_to_h(sum, &d.to_cochain())?)?;
    t.pi_hat().add(&t.rho_hat())?.add(&twist)
}

/// `d_D f` as a cochain.
pub fn d_d(d: &CrossedHom, f: &Cochain) -> Result<Cochain> {
    let t = &d.triple;
    check_g_to_h(t, f)?;
    bracket_on_g(t.sum(), &twisted_element(d)?, &hat_g_to_h(t.sum(), f)?)
}

/// Matrix of `d_D: Hom(∧ⁿg, h) → Hom(∧ⁿ⁺¹g, h)`. Defined for any
/// candidate; it squares to zero when `D` is crossed.
pub fn d_d_matrix(d: &CrossedHom, n: usize) -> Result<Matrix> {
    let sum = d.triple.sum();
    Ok(bracket_matrix(
        sum,
        &twisted_element(d)?,
        &ComplexBasis::crossed(sum, n),
        &ComplexBasis::crossed(sum, n + 1),
    ))
}

pub fn ch_cohomology_table(d: &CrossedHom, max_n: usize) -> Result<Vec<ParityDims>> {
    let sum = d.triple.sum();
    let omega = twisted_element(d)?;
    let bases: Vec<ComplexBasis> = (1..=max_n + 1).map(|n| ComplexBasis::crossed(sum, n)).collect();
    let mats: Vec<Matrix> = (0..max_n)
        .map(|k| bracket_matrix(sum, &omega, &bases[k], &bases[k + 1]))
        .collect();
    (0..max_n)
        .map(|k| {
            let (d_in, prev) = if k == 0 { (None, None) } else { (Some(&mats[k - 1]), Some(&bases[k - 1])) };
            parity_cohomology(d_in, &mats[k], prev, &bases[k], &bases[k + 1])
        })
        .collect()
}

pub fn ch_cohomology(d: &CrossedHom, n: usize) -> Result<ParityDims> {
    if n == 0 {
        return Err(Error::Validation("the complex starts in degree 1".into()));
    }
    Ok(ch_cohomology_table(d, n)?[n - 1])
}

/// Normal-form keys of `Hom(∧ⁿg, h)` in coordinate order.
pub fn crossed_keys(t: &LieSupActTriple, n: usize) -> Vec<WedgeIndex> {
    wedge_basis(t.g().space(), n)
}

/// A pair `(φ₁: g → g', φ₂: h → h')` between crossed homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CHMorphism {
    pub phi1: LinearMap,
    pub phi2: LinearMap,
}

impl CHMorphism {
    pub fn identity(d: &CrossedHom) -> Self {
        CHMorphism {
            phi1: LinearMap::identity(d.triple.g().space().clone()),
            phi2: LinearMap::identity(d.triple.h().space().clone()),
        }
    }

    /// `(ψ₁∘φ₁, ψ₂∘φ₂)` for `self = φ` followed by `next = ψ`.
    pub fn compose(&self, next: &CHMorphism) -> Result<CHMorphism> {
        Ok(CHMorphism {
            phi1: next.phi1.compose(&self.phi1)?,
            phi2: next.phi2.compose(&self.phi2)?,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.phi1.is_invertible() && self.phi2.is_invertible()
    }
}

/// Whether `m` is a morphism from `d` to `d2`: both components are even
/// algebra homomorphisms, `D'∘φ₁ = φ₂∘D`, and `φ₂(ρ(x)u) = ρ'(φ₁x)(φ₂u)`.
pub fn check_morphism(d: &CrossedHom, d2: &CrossedHom, m: &CHMorphism) -> bool {
    let (t, t2) = (&d.triple, &d2.triple);
    let shapes_ok = m.phi1.source() == t.g().space()
        && m.phi1.target() == t2.g().space()
        && m.phi2.source() == t.h().space()
        && m.phi2.target() == t2.h().space();
    if !shapes_ok {
        return false;
    }
    if !m.phi1.is_homogeneous(Parity::Even) || !m.phi2.is_homogeneous(Parity::Even) {
        return false;
    }
    if !m.phi1.is_homomorphism(t.g(), t2.g()) || !m.phi2.is_homomorphism(t.h(), t2.h()) {
        return false;
    }
    let intertwines = d2.map.compose(&m.phi1).ok() == m.phi2.compose(&d.map).ok();
    let (dg, dh) = (t.g().dim(), t.h().dim());
    let equivariant = (0..dg).all(|i| {
        (0..dh).all(|a| {
            let lhs = m.phi2.apply(t.rho().get(i, a)).unwrap();
            let rhs = t2.rho().apply(&m.phi1.image(i), &m.phi2.image(a));
            lhs == rhs
        })
    });
    intertwines && equivariant
}
