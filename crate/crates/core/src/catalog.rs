//! Small named algebras and triples.

use std::sync::Arc;

use crate::graded::GradedSpace;
use crate::linalg::Scalar;
use crate::superalgebra::{semidirect, SuperAlgebra};
use crate::triple::{ActionMap, LieSupActTriple};

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// `(x | y)` with `[y, y] = x`, using the given labels.
pub fn odd_line(even: &str, odd: &str) -> SuperAlgebra {
    let space = Arc::new(GradedSpace::new([even], [odd]).expect("distinct labels"));
    let mut alg = SuperAlgebra::new(space);
    alg.set_bracket(1, 1, vec![int(1), int(0)]).expect("even value");
    alg
}

/// `gl(1|0)` acting on a line by `ρ(x)u = c·u`.
pub fn scalar_action(c: i64) -> LieSupActTriple {
    let g = SuperAlgebra::new(Arc::new(GradedSpace::new(["x"], Vec::<&str>::new()).unwrap()));
    let h = SuperAlgebra::new(Arc::new(GradedSpace::new(["u"], Vec::<&str>::new()).unwrap()));
    let mut rho = ActionMap::zero(g.space().clone(), h.space().clone());
    rho.set(0, 0, vec![int(c)]).unwrap();
    LieSupActTriple::new(g, h, rho).unwrap()
}

/// The odd line acting on a second copy of itself by `ρ(y)v = u`.
pub fn odd_line_adjoint() -> LieSupActTriple {
    let g = odd_line("x", "y");
    let h = odd_line("u", "v");
    let mut rho = ActionMap::zero(g.space().clone(), h.space().clone());
    rho.set(1, 1, vec![int(1), int(0)]).unwrap();
    LieSupActTriple::new(g, h, rho).unwrap()
}

/// `gl(1|1)` acting on itself.
pub fn gl11_adjoint() -> LieSupActTriple {
    let g = SuperAlgebra::gl(1, 1).unwrap();
    LieSupActTriple::new(g.clone(), g.clone(), ActionMap::adjoint(&g)).unwrap()
}

/// `gl(1|1)` acting on the abelian `(1|1)` by matrix multiplication.
pub fn gl11_natural() -> LieSupActTriple {
    let g = SuperAlgebra::gl(1, 1).unwrap();
    let h = SuperAlgebra::new(Arc::new(GradedSpace::new(["e1"], ["e2"]).unwrap()));
    let mut rho = ActionMap::zero(g.space().clone(), h.space().clone());
    for i in 0..g.dim() {
        let label = g.space().label(i);
        let p = label.as_bytes()[1] - b'1';
        let q = label.as_bytes()[2] - b'1';
        let mut v = vec![int(0), int(0)];
        v[p as usize] = int(1);
        rho.set(i, q as usize, v).unwrap();
    }
    LieSupActTriple::new(g, h, rho).unwrap()
}

/// `g = (0|1)` and `h = (1|0)`, both abelian, zero action.
pub fn odd_abelian() -> LieSupActTriple {
    let g = SuperAlgebra::new(Arc::new(GradedSpace::new(Vec::<&str>::new(), ["y"]).unwrap()));
    let h = SuperAlgebra::new(Arc::new(GradedSpace::new(["u"], Vec::<&str>::new()).unwrap()));
    let rho = ActionMap::zero(g.space().clone(), h.space().clone());
    LieSupActTriple::new(g, h, rho).unwrap()
}

/// The two-dimensional solvable algebra `[x, u] = u` acting on itself.
pub fn solvable_adjoint() -> LieSupActTriple {
    let s = scalar_action(1);
    let l = semidirect(s.g(), s.h(), s.rho()).unwrap();
    LieSupActTriple::new(l.clone(), l.clone(), ActionMap::adjoint(&l)).unwrap()
}
