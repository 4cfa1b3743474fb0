use std::sync::Arc;

use proptest::prelude::*;
use supercochain::deformation::triple_infinitesimal;
use supercochain::random::Sampler;
use supercochain::{
    catalog, d_d_matrix, linear_ch_check, linear_triple_check, triple_coboundary_matrix, ActionMap, ChDeformation,
    ComplexBasis, CrossedHom, LieSupActTriple, LinearMap, Parity, Scalar, SuperAlgebra, TripleCochain,
    TripleDeformation,
};

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

fn zero() -> Scalar {
    int(0)
}

/// A random combination of the given vectors, restricted to even coordinates.
fn combine(s: &mut Sampler, basis: &[Vec<Scalar>], parities: &[Parity]) -> Vec<Scalar> {
    let mut out = vec![zero(); parities.len()];
    for v in basis {
        let c = s.scalar();
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    for (o, p) in out.iter_mut().zip(parities) {
        if p.is_odd() {
            *o = zero();
        }
    }
    out
}

fn random_even(s: &mut Sampler, parities: &[Parity]) -> Vec<Scalar> {
    parities.iter().map(|p| if p.is_odd() { zero() } else { s.scalar() }).collect()
}

fn structure(t: &LieSupActTriple, coords: &[Scalar]) -> (SuperAlgebra, ActionMap, SuperAlgebra) {
    TripleCochain::from_coords(t, 2, coords).unwrap().to_structure(t).unwrap()
}

fn map_from_coords(d: &CrossedHom, coords: &[Scalar]) -> LinearMap {
    let t = d.triple();
    let dh = t.h().dim();
    let images: Vec<Vec<Scalar>> = coords.chunks(dh).map(<[Scalar]>::to_vec).collect();
    LinearMap::from_images(t.g().space().clone(), t.h().space().clone(), &images).unwrap()
}

fn crossed_sample(s: &mut Sampler) -> CrossedHom {
    let odd_line = Arc::new(catalog::odd_line_adjoint());
    let gl = Arc::new(catalog::gl11_adjoint());
    match s.below(3) {
        0 => {
            let b = s.scalar();
            let a = int(2) * &b + &b * &b;
            let images = [vec![a, zero()], vec![zero(), b]];
            let map = LinearMap::from_images(odd_line.g().space().clone(), odd_line.h().space().clone(), &images);
            CrossedHom::new(odd_line, map.unwrap()).unwrap()
        }
        1 => {
            let map = LinearMap::identity(gl.g().space().clone()).scale(&int(-1));
            CrossedHom::new(gl, map).unwrap()
        }
        _ => CrossedHom::zero(Arc::new(s.valid_triple())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn triple_cocycles_are_linear_deformations(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let t = s.valid_triple();
        let m = triple_coboundary_matrix(&t, 2);
        let parities = ComplexBasis::triple(t.sum(), 2).parities().to_vec();
        let cocycle = combine(&mut s, &m.kernel_basis(), &parities);
        let (pi1, rho1, mu1) = structure(&t, &cocycle);
        prop_assert!(linear_triple_check(&t, &pi1, &rho1, &mu1).unwrap());

        let other = random_even(&mut s, &parities);
        let is_cocycle = m.mul_vec(&other).unwrap().iter().all(|x| *x == zero());
        let (pi1, rho1, mu1) = structure(&t, &other);
        prop_assert_eq!(linear_triple_check(&t, &pi1, &rho1, &mu1).unwrap(), is_cocycle);
        let def = TripleDeformation::linear(t.clone(), pi1, rho1, mu1).unwrap();
        match triple_infinitesimal(&def).unwrap() {
            None => prop_assert!(other.iter().all(|x| *x == zero())),
            Some(inf) => {
                prop_assert_eq!(inf.order, 1);
                prop_assert_eq!(inf.cocycle, is_cocycle);
                prop_assert_eq!(inf.failing.is_empty(), is_cocycle);
                prop_assert_eq!(inf.cochain.to_coords(&t).unwrap(), other);
            }
        }
    }

    #[test]
    fn crossed_cocycles_are_linear_deformations(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let d = crossed_sample(&mut s);
        let m = d_d_matrix(&d, 1).unwrap();
        let parities = ComplexBasis::crossed(d.triple().sum(), 1).parities().to_vec();
        let cocycle = combine(&mut s, &m.kernel_basis(), &parities);
        prop_assert!(linear_ch_check(&d, &map_from_coords(&d, &cocycle)).unwrap());

        let other = random_even(&mut s, &parities);
        let is_cocycle = m.mul_vec(&other).unwrap().iter().all(|x| *x == zero());
        prop_assert_eq!(linear_ch_check(&d, &map_from_coords(&d, &other)).unwrap(), is_cocycle);
    }

    #[test]
    fn crossed_residual_matches_differential_form(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let d = crossed_sample(&mut s);
        let parities = ComplexBasis::crossed(d.triple().sum(), 1).parities().to_vec();
        let mut coeffs = vec![d.map().clone()];
        for _ in 0..3 {
            let c = random_even(&mut s, &parities);
            coeffs.push(map_from_coords(&d, &c));
        }
        let def = ChDeformation::new(d, coeffs).unwrap();
        for n in 1..=3 {
            prop_assert_eq!(def.residual(n).unwrap(), def.residual_via_differential(n).unwrap());
        }
    }

    #[test]
    fn constant_deformations_have_no_residual(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let t = s.valid_triple();
        let def = TripleDeformation::constant(t, 3);
        for n in 1..=3 {
            prop_assert!(def.residual(n).unwrap().is_zero());
        }
        prop_assert!(triple_infinitesimal(&def).unwrap().is_none());
        let d = crossed_sample(&mut s);
        let def = ChDeformation::constant(d, 2);
        prop_assert!(def.residual(1).unwrap().is_zero() && def.residual(2).unwrap().is_zero());
    }
}

#[test]
fn quadratic_family_of_crossed_homs() {
    // D_t(x) = (a + (2 + 2b)t + t²)u, D_t(y) = (b + t)v stays crossed.
    let t = Arc::new(catalog::odd_line_adjoint());
    let (g, h) = (t.g().space().clone(), t.h().space().clone());
    let diag = |p: i64, q: i64| LinearMap::from_images(g.clone(), h.clone(), &[vec![int(p), int(0)], vec![int(0), int(q)]]);
    for b in -2..=2 {
        let a = 2 * b + b * b;
        let d = CrossedHom::new(t.clone(), diag(a, b).unwrap()).unwrap();
        let coeffs = vec![diag(a, b).unwrap(), diag(2 + 2 * b, 1).unwrap(), diag(1, 0).unwrap()];
        let def = ChDeformation::new(d.clone(), coeffs).unwrap();
        assert!(def.residual(1).unwrap().is_zero());
        assert!(def.residual(2).unwrap().is_zero());
        // Dropping the t² term breaks the second-order equation only.
        let coeffs = vec![diag(a, b).unwrap(), diag(2 + 2 * b, 1).unwrap(), diag(0, 0).unwrap()];
        let def = ChDeformation::new(d, coeffs).unwrap();
        assert!(def.residual(1).unwrap().is_zero());
        assert!(!def.residual(2).unwrap().is_zero());
    }
}

#[test]
fn scalar_action_family() {
    // ρ_t(x) = (c + t), π and μ fixed: a deformation to every order.
    let t = catalog::scalar_action(2);
    let mut rho1 = ActionMap::zero(t.g().space().clone(), t.h().space().clone());
    rho1.set(0, 0, vec![int(1)]).unwrap();
    let zg = SuperAlgebra::new(t.g().space().clone());
    let zh = SuperAlgebra::new(t.h().space().clone());
    let def = TripleDeformation::new(
        t.clone(),
        vec![t.g().clone(), zg.clone(), zg],
        vec![t.rho().clone(), rho1.clone(), ActionMap::zero(t.g().space().clone(), t.h().space().clone())],
        vec![t.h().clone(), zh.clone(), zh],
    )
    .unwrap();
    assert!(def.residual(1).unwrap().is_zero() && def.residual(2).unwrap().is_zero());
    let inf = triple_infinitesimal(&def).unwrap().unwrap();
    assert_eq!(inf.order, 1);
    assert!(inf.cocycle);
}

#[test]
fn infinitesimal_skips_vanishing_orders() {
    let t = catalog::gl11_natural();
    let (gs, hs) = (t.g().space().clone(), t.h().space().clone());
    let zg = SuperAlgebra::new(gs.clone());
    let zh = SuperAlgebra::new(hs.clone());
    let zr = ActionMap::zero(gs.clone(), hs.clone());
    // A nonzero bracket on h at order 2; the action does not preserve it.
    let mut mu2 = SuperAlgebra::new(hs.clone());
    mu2.set_bracket(1, 1, vec![int(1), int(0)]).unwrap();
    let def = TripleDeformation::new(
        t.clone(),
        vec![t.g().clone(), zg.clone(), zg],
        vec![t.rho().clone(), zr.clone(), zr],
        vec![t.h().clone(), zh, mu2],
    )
    .unwrap();
    let inf = triple_infinitesimal(&def).unwrap().unwrap();
    assert_eq!(inf.order, 2);
    assert!(!inf.cocycle);
    assert_eq!(inf.failing, vec!["derivation"]);
}
