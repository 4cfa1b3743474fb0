//! Truncated one-parameter deformations of triples and of crossed
//! homomorphisms, checked order by order.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::crossed::{d_d, d_d_matrix, CrossedHom};
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::linalg::{is_zero_vec, Scalar};
use crate::superalgebra::{add_vec, basis_vector, labelled, signed, sub_vec, LinearMap, SuperAlgebra};
use crate::triple::{triple_coboundary_matrix, ActionMap, LieSupActTriple, TripleCochain};

/// Nonzero values of a multilinear defect on basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    target: Arc<GradedSpace>,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl Defect {
    fn new(target: Arc<GradedSpace>) -> Self {
        Defect {
            target,
            values: BTreeMap::new(),
        }
    }

    fn record(&mut self, at: Vec<usize>, v: Vec<Scalar>) {
        if !is_zero_vec(&v) {
            self.values.insert(at, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, at: &[usize]) -> Vec<Scalar> {
        self.values
            .get(at)
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); self.target.dim()])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Scalar>)> {
        self.values.iter()
    }

    /// Entries with the value written in target labels.
    pub fn labelled(&self) -> Vec<(Vec<usize>, Vec<(String, Scalar)>)> {
        self.values
            .iter()
            .map(|(k, v)| (k.clone(), labelled(&self.target, v)))
            .collect()
    }
}

/// The four order-`n` defects of a triple deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleResidual {
    /// `Σ [πᵢ, πⱼ](u, v, w)`
    pub pi: Defect,
    /// `Σ [μᵢ, μⱼ](x, y, z)`
    pub mu: Defect,
    /// `Σ ρᵢ(πⱼ(u,v))x − ρᵢ(u)ρⱼ(v)x + (−1)^{|u||v|}ρᵢ(v)ρⱼ(u)x`
    pub action: Defect,
    /// `Σ ρᵢ(u)μⱼ(x,y) − μᵢ(ρⱼ(u)x, y) − (−1)^{|u||x|}μᵢ(x, ρⱼ(u)y)`
    pub derivation: Defect,
}

impl TripleResidual {
    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|(_, d)| d.is_zero())
    }

    pub fn components(&self) -> [(&'static str, &Defect); 4] {
        [
            ("pi", &self.pi),
            ("mu", &self.mu),
            ("action", &self.action),
            ("derivation", &self.derivation),
        ]
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.components()
            .into_iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(n, _)| n)
            .collect()
    }
}

/// `π_t = Σ πᵢtⁱ`, `ρ_t`, `μ_t` modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDeformation {
    base: LieSupActTriple,
    pi: Vec<SuperAlgebra>,
    rho: Vec<ActionMap>,
    mu: Vec<SuperAlgebra>,
}

impl TripleDeformation {
    /// Coefficient lists include the zeroth term, which must equal the base.
    pub fn new(base: LieSupActTriple, pi: Vec<SuperAlgebra>, rho: Vec<ActionMap>, mu: Vec<SuperAlgebra>) -> Result<Self> {
        if pi.len() < 2 || pi.len() != rho.len() || pi.len() != mu.len() {
            return Err(Error::Validation("coefficient lists need equal lengths and order >= 1".into()));
        }
        if pi[0] != *base.g() || rho[0] != *base.rho() || mu[0] != *base.h() {
            return Err(Error::Validation("zeroth coefficients must equal the base structure".into()));
        }
        let sum = base.sum();
        for k in 0..pi.len() {
            if pi[k].space() != sum.g() || mu[k].space() != sum.h() || rho[k].g() != sum.g() || rho[k].h() != sum.h() {
                return Err(Error::SpaceMismatch);
            }
        }
        Ok(TripleDeformation { base, pi, rho, mu })
    }

    /// All coefficients beyond the base vanish.
    pub fn constant(base: LieSupActTriple, order: usize) -> Self {
        let order = order.max(1);
        let zg = SuperAlgebra::new(base.g().space().clone());
        let zh = SuperAlgebra::new(base.h().space().clone());
        let zr = ActionMap::zero(base.g().space().clone(), base.h().space().clone());
        let mut pi = vec![base.g().clone()];
        let mut rho = vec![base.rho().clone()];
        let mut mu = vec![base.h().clone()];
        pi.extend(std::iter::repeat(zg).take(order));
        rho.extend(std::iter::repeat(zr).take(order));
        mu.extend(std::iter::repeat(zh).take(order));
        TripleDeformation { base, pi, rho, mu }
    }

    /// `(π + tπ₁, ρ + tρ₁, μ + tμ₁)` modulo `t²`.
    pub fn linear(base: LieSupActTriple, pi1: SuperAlgebra, rho1: ActionMap, mu1: SuperAlgebra) -> Result<Self> {
        let pi = vec![base.g().clone(), pi1];
        let rho = vec![base.rho().clone(), rho1];
        let mu = vec![base.h().clone(), mu1];
        TripleDeformation::new(base, pi, rho, mu)
    }

    pub fn order(&self) -> usize {
        self.pi.len() - 1
    }

    pub fn base(&self) -> &LieSupActTriple {
        &self.base
    }

    pub fn coefficients(&self, k: usize) -> (&SuperAlgebra, &ActionMap, &SuperAlgebra) {
        (&self.pi[k], &self.rho[k], &self.mu[k])
    }

    /// The order-`n` equations evaluated on every basis tuple.
    pub fn residual(&self, n: usize) -> Result<TripleResidual> {
        if n > self.order() {
            return Err(Error::Validation(format!("order {n} exceeds the truncation {}", self.order())));
        }
        let (gs, hs) = (self.base.g().space().clone(), self.base.h().space().clone());
        let (dg, dh) = (gs.dim(), hs.dim());
        let pairs: Vec<(usize, usize)> = (0..=n).map(|i| (i, n - i)).collect();
        let two = Scalar::from_integer(2.into());

        let jacobiator = |alg: &[SuperAlgebra], s: &GradedSpace, a: usize, b: usize, c: usize| {
            let d = s.dim();
            let mut out = vec![Scalar::zero(); d];
            for &(i, j) in &pairs {
                let (x, y, z) = (basis_vector(d, a), basis_vector(d, b), basis_vector(d, c));
                let t1 = alg[i].bracket_eval(&x, &alg[j].bracket_basis(b, c)).unwrap();
                let t2 = alg[i].bracket_eval(&alg[j].bracket_basis(a, b), &z).unwrap();
                let t3 = alg[i].bracket_eval(&y, &alg[j].bracket_basis(a, c)).unwrap();
                let t3 = signed((s.parity(a) * s.parity(b)).sign(), t3);
                out = add_vec(&out, &sub_vec(&sub_vec(&t1, &t2), &t3));
            }
            out.into_iter().map(|v| v * &two).collect::<Vec<_>>()
        };

        let mut pi = Defect::new(gs.clone());
        for a in 0..dg {
            for b in 0..dg {
                for c in 0..dg {
                    pi.record(vec![a, b, c], jacobiator(&self.pi, &gs, a, b, c));
                }
            }
        }
        let mut mu = Defect::new(hs.clone());
        for a in 0..dh {
            for b in 0..dh {
                for c in 0..dh {
                    mu.record(vec![a, b, c], jacobiator(&self.mu, &hs, a, b, c));
                }
            }
        }

        let mut action = Defect::new(hs.clone());
        for u in 0..dg {
            for v in 0..dg {
                let (eu, ev) = (basis_vector(dg, u), basis_vector(dg, v));
                let sign = (gs.parity(u) * gs.parity(v)).sign();
                for x in 0..dh {
                    let ex = basis_vector(dh, x);
                    let mut out = vec![Scalar::zero(); dh];
                    for &(i, j) in &pairs {
                        let (ri, rj) = (&self.rho[i], &self.rho[j]);
                        let lhs = ri.apply(&self.pi[j].bracket_basis(u, v), &ex);
                        let uv = ri.apply(&eu, &rj.apply(&ev, &ex));
                        let vu = signed(sign, ri.apply(&ev, &rj.apply(&eu, &ex)));
                        out = add_vec(&out, &sub_vec(&lhs, &sub_vec(&uv, &vu)));
                    }
                    action.record(vec![u, v, x], out);
                }
            }
        }

        let mut derivation = Defect::new(hs.clone());
        for u in 0..dg {
            let eu = basis_vector(dg, u);
            for x in 0..dh {
                for y in 0..dh {
                    let (ex, ey) = (basis_vector(dh, x), basis_vector(dh, y));
                    let sign = (gs.parity(u) * hs.parity(x)).sign();
                    let mut out = vec![Scalar::zero(); dh];
                    for &(i, j) in &pairs {
                        let (rj, mi) = (&self.rho[j], &self.mu[i]);
                        let lhs = self.rho[i].apply(&eu, &self.mu[j].bracket_basis(x, y));
                        let first = mi.bracket_eval(&rj.apply(&eu, &ex), &ey).unwrap();
                        let second = signed(sign, mi.bracket_eval(&ex, &rj.apply(&eu, &ey)).unwrap());
                        out = add_vec(&out, &sub_vec(&lhs, &add_vec(&first, &second)));
                    }
                    derivation.record(vec![u, x, y], out);
                }
            }
        }
        Ok(TripleResidual {
            pi,
            mu,
            action,
            derivation,
        })
    }
}

/// First nonzero coefficient of a deformation, placed in `C²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infinitesimal {
    pub order: usize,
    pub cochain: TripleCochain,
    /// Whether `∂` annihilates it.
    pub cocycle: bool,
    /// Residual components that fail at `order`.
    pub failing: Vec<&'static str>,
}

/// `None` for a constant deformation.
pub fn triple_infinitesimal(def: &TripleDeformation) -> Result<Option<Infinitesimal>> {
    let t = def.base();
    for k in 1..=def.order() {
        let (pi, rho, mu) = def.coefficients(k);
        let c = TripleCochain::from_structure(t, pi, rho, mu)?;
        if c.is_zero() {
            continue;
        }
        let image = triple_coboundary_matrix(t, 2).mul_vec(&c.to_coords(t)?)?;
        let failing = def.residual(k)?.failing();
        let cocycle = is_zero_vec(&image);
        if cocycle != failing.is_empty() {
            return Err(Error::Invariant("order residual disagrees with the differential".into()));
        }
        return Ok(Some(Infinitesimal {
            order: k,
            cochain: c,
            cocycle,
            failing,
        }));
    }
    Ok(None)
}

/// Whether `(π + tπ₁, ρ + tρ₁, μ + tμ₁)` is a deformation modulo `t²`,
/// cross-checked against `∂(π₁ + ρ₁ + μ₁) = 0`.
pub fn linear_triple_check(t: &LieSupActTriple, pi1: &SuperAlgebra, rho1: &ActionMap, mu1: &SuperAlgebra) -> Result<bool> {
    let def = TripleDeformation::linear(t.clone(), pi1.clone(), rho1.clone(), mu1.clone())?;
    let by_residual = def.residual(1)?.is_zero();
    let coords = TripleCochain::from_structure(t, pi1, rho1, mu1)?.to_coords(t)?;
    let by_cocycle = is_zero_vec(&triple_coboundary_matrix(t, 2).mul_vec(&coords)?);
    if by_residual != by_cocycle {
        return Err(Error::Invariant("linear deformation test disagrees with the cocycle test".into()));
    }
    Ok(by_residual)
}

/// `D_t = Σ Dᵢtⁱ` modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChDeformation {
    base: CrossedHom,
    coeffs: Vec<LinearMap>,
}

impl ChDeformation {
    /// `coeffs[0]` must be the base map.
    pub fn new(base: CrossedHom, coeffs: Vec<LinearMap>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Validation("a deformation needs order >= 1".into()));
        }
        if coeffs[0] != *base.map() {
            return Err(Error::Validation("zeroth coefficient must equal the base map".into()));
        }
        for c in &coeffs {
            if c.source() != base.map().source() || c.target() != base.map().target() {
                return Err(Error::SpaceMismatch);
            }
            if !c.is_homogeneous(crate::graded::Parity::Even) {
                return Err(Error::Validation("deformation coefficients must be even".into()));
            }
        }
        Ok(ChDeformation { base, coeffs })
    }

    pub fn constant(base: CrossedHom, order: usize) -> Self {
        let zero = LinearMap::zero(base.map().source().clone(), base.map().target().clone());
        let mut coeffs = vec![base.map().clone()];
        coeffs.extend(std::iter::repeat(zero).take(order.max(1)));
        ChDeformation { base, coeffs }
    }

    pub fn linear(base: CrossedHom, d1: LinearMap) -> Result<Self> {
        let coeffs = vec![base.map().clone(), d1];
        ChDeformation::new(base, coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &LinearMap {
        &self.coeffs[k]
    }

    pub fn base(&self) -> &CrossedHom {
        &self.base
    }

    /// `Σ_{i+j=n}[Dᵢx, Dⱼy] + ρ(x)Dₙy − (−1)^{|x||y|}ρ(y)Dₙx − Dₙ[x,y]`.
    pub fn residual(&self, n: usize) -> Result<Defect> {
        if n > self.order() {
            return Err(Error::Validation(format!("order {n} exceeds the truncation {}", self.order())));
        }
        let t = self.base.triple();
        let gs = t.g().space();
        let dg = gs.dim();
        let dn = &self.coeffs[n];
        let mut out = Defect::new(t.h().space().clone());
        for a in 0..dg {
            for b in 0..dg {
                let (x, y) = (basis_vector(dg, a), basis_vector(dg, b));
                let mut v = vec![Scalar::zero(); t.h().dim()];
                for i in 0..=n {
                    let br = t.h().bracket_eval(&self.coeffs[i].image(a), &self.coeffs[n - i].image(b))?;
                    v = add_vec(&v, &br);
                }
                let sign = (gs.parity(a) * gs.parity(b)).sign();
                v = add_vec(&v, &t.rho().apply(&x, &dn.image(b)));
                v = sub_vec(&v, &signed(sign, t.rho().apply(&y, &dn.image(a))));
                v = sub_vec(&v, &dn.apply(&t.g().bracket_basis(a, b))?);
                out.record(vec![a, b], v);
            }
        }
        Ok(out)
    }

    /// `d_D(Dₙ) + Σ_{i+j=n, i,j≥1} μ(Dᵢx, Dⱼy)`; equals [`Self::residual`].
    pub fn residual_via_differential(&self, n: usize) -> Result<Defect> {
        let t = self.base.triple();
        let dg = t.g().dim();
        let dn = CrossedHom::candidate(t.clone(), self.coeffs[n].clone())?.to_cochain();
        let lin = d_d(&self.base, &dn)?;
        let mut out = Defect::new(t.h().space().clone());
        for a in 0..dg {
            for b in 0..dg {
                let mut v = lin.eval(&[a, b])?;
                for i in 1..n {
                    let br = t.h().bracket_eval(&self.coeffs[i].image(a), &self.coeffs[n - i].image(b))?;
                    v = add_vec(&v, &br);
                }
                out.record(vec![a, b], v);
            }
        }
        Ok(out)
    }
}

/// Whether `D + tD₁` is a deformation modulo `t²`, cross-checked against
/// `d_D(D₁) = 0`.
pub fn linear_ch_check(d: &CrossedHom, d1: &LinearMap) -> Result<bool> {
    let def = ChDeformation::linear(d.clone(), d1.clone())?;
    let by_residual = def.residual(1)?.is_zero();
    let coords = CrossedHom::candidate(d.triple().clone(), d1.clone())?.to_cochain().to_coords();
    let by_cocycle = is_zero_vec(&d_d_matrix(d, 1)?.mul_vec(&coords)?);
    if by_residual != by_cocycle {
        return Err(Error::Invariant("linear deformation test disagrees with the cocycle test".into()));
    }
    Ok(by_residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn gl11_adjoint() -> LieSupActTriple {
        let g = SuperAlgebra::gl(1, 1).unwrap();
        LieSupActTriple::new(g.clone(), g.clone(), ActionMap::adjoint(&g)).unwrap()
    }

    #[test]
    fn constant_deformations_have_no_residual() {
        let t = gl11_adjoint();
        let def = TripleDeformation::constant(t, 2);
        for n in 0..=2 {
            assert!(def.residual(n).unwrap().is_zero());
        }
        assert!(triple_infinitesimal(&def).unwrap().is_none());
    }

    #[test]
    fn pi_residual_matches_bracket() {
        let g = SuperAlgebra::gl(1, 1).unwrap();
        let mut pi1 = SuperAlgebra::new(g.space().clone());
        pi1.set_bracket(0, 2, vec![int(0), int(0), int(1), int(0)]).unwrap();
        let t = LieSupActTriple::new(g.clone(), g.clone(), ActionMap::adjoint(&g)).unwrap();
        let zr = ActionMap::zero(g.space().clone(), g.space().clone());
        let def = TripleDeformation::linear(t, pi1.clone(), zr, SuperAlgebra::new(g.space().clone())).unwrap();
        let res = def.residual(1).unwrap();
        let (p0, p1) = (g.to_cochain(), pi1.to_cochain());
        let b = crate::cochain::nr_bracket(&p0, &p1).unwrap().scale(&int(2));
        for a in 0..4 {
            for bb in 0..4 {
                for c in 0..4 {
                    assert_eq!(res.pi.get(&[a, bb, c]), b.eval(&[a, bb, c]).unwrap());
                }
            }
        }
    }

    #[test]
    fn zero_first_order_is_linear_deformation() {
        let t = gl11_adjoint();
        let s = t.g().space().clone();
        let ok = linear_triple_check(
            &t,
            &SuperAlgebra::new(s.clone()),
            &ActionMap::zero(s.clone(), s.clone()),
            &SuperAlgebra::new(s),
        )
        .unwrap();
        assert!(ok);
    }
}
