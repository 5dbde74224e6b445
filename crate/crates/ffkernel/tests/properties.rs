use ffkernel::liealg::{build_g2, build_sl, build_sp, LieAlgebra};
use ffkernel::sympoly::CommPoly;
use ffkernel::uea::{NCPoly, Uea};
use ffkernel::var::Var;
use ffkernel::{invariants, ssvec, Q};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use std::sync::OnceLock;

fn config() -> Config {
    Config { cases: 64, rng_seed: RngSeed::Fixed(20261014), failure_persistence: None, ..Config::default() }
}

fn algebras() -> &'static [LieAlgebra] {
    static A: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    A.get_or_init(|| vec![build_sl(2).unwrap(), build_sl(3).unwrap(), build_sp(4).unwrap(), build_g2().unwrap()])
}

/// Words as (basis seed, t-degree) pairs with a small coefficient.
type Raw = Vec<(Vec<(usize, i16)>, i64, i64)>;

fn raw(max_len: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::collection::vec((0usize..64, -3i16..=-1), 0..=max_len), -5i64..=5, 1i64..=3), 1..=4)
}

fn comm(g: &LieAlgebra, r: &Raw) -> CommPoly {
    let mut p = CommPoly::zero();
    for (m, n, d) in r {
        let vars: Vec<Var> = m.iter().map(|&(i, t)| Var::loop_var(i % g.dim(), t)).collect();
        p.add_assign(&CommPoly::monomial(&vars, Q::new(*n, *d)));
    }
    p
}

fn nc(u: &Uea, r: &Raw) -> NCPoly {
    let mut p = NCPoly::zero();
    for (m, n, d) in r {
        let w: Vec<Var> = m.iter().map(|&(i, t)| Var::loop_var(i % u.g.dim(), t)).collect();
        p.add_scaled(&u.normal_order(&w), &Q::new(*n, *d));
    }
    p
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn json_round_trips(which in 0usize..4, a in raw(4)) {
        let g = &algebras()[which];
        let u = Uea::new(g);
        let p = comm(g, &a);
        let v = p.to_json(g);
        let back = CommPoly::from_json(&v, g).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serde_json::to_string(&back.to_json(g)).unwrap(), serde_json::to_string(&v).unwrap());
        let x = nc(&u, &a);
        let back = NCPoly::from_json(&x.to_json(g), g).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = Q::new(n, d);
        prop_assert_eq!(q.to_string().parse::<Q>().unwrap(), q);
    }

    #[test]
    fn multiplication_is_associative(which in 0usize..3, a in raw(2), b in raw(2), c in raw(2)) {
        let g = &algebras()[which];
        let u = Uea::new(g);
        let (a, b, c) = (nc(&u, &a), nc(&u, &b), nc(&u, &c));
        prop_assert_eq!(u.mul(&u.mul(&a, &b), &c), u.mul(&a, &u.mul(&b, &c)));
    }

    #[test]
    fn commutators_satisfy_jacobi(which in 0usize..3, a in raw(2), b in raw(2), c in raw(2)) {
        let g = &algebras()[which];
        let u = Uea::new(g);
        let (a, b, c) = (nc(&u, &a), nc(&u, &b), nc(&u, &c));
        let j = u.commutator(&a, &u.commutator(&b, &c))
            .add(&u.commutator(&b, &u.commutator(&c, &a)))
            .add(&u.commutator(&c, &u.commutator(&a, &b)));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn poisson_bracket_laws(which in 0usize..4, a in raw(2), b in raw(2), c in raw(2)) {
        let g = &algebras()[which];
        let (a, b, c) = (comm(g, &a), comm(g, &b), comm(g, &c));
        prop_assert_eq!(a.poisson(&b, g), b.poisson(&a, g).neg());
        prop_assert_eq!(a.poisson(&b.mul(&c), g), a.poisson(&b, g).mul(&c).add(&b.mul(&a.poisson(&c, g))));
        let j = a.poisson(&b.poisson(&c, g), g).add(&b.poisson(&c.poisson(&a, g), g)).add(&c.poisson(&a.poisson(&b, g), g));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn symbol_of_commutator_is_poisson_bracket(which in 0usize..3, a in raw(2), b in raw(2)) {
        let g = &algebras()[which];
        let u = Uea::new(g);
        let (x, y) = (u.symmetrize(&comm(g, &a)), u.symmetrize(&comm(g, &b)));
        let (dx, dy) = (x.degree().unwrap_or(0), y.degree().unwrap_or(0));
        let pb = x.degree_part(dx).poisson(&y.degree_part(dy), g);
        let c = u.commutator(&x, &y);
        if !pb.is_zero() {
            prop_assert_eq!(c.degree_part(dx + dy - 1), pb);
        }
    }

    #[test]
    fn w_elements_are_antisymmetric(a in raw(3), r0 in 1usize..=3) {
        let (g, _) = invariants::delta_sl(2, 2).unwrap();
        let f = comm(&g, &a).map_vars(|v| v.with_tdeg(0));
        prop_assume!(f.is_homogeneous() && f.degree().unwrap_or(0) >= 1);
        let m = f.degree().unwrap();
        prop_assume!(r0 <= m);
        let alpha = [(-1i16, r0), (-2, m + 1 - r0)];
        let w01 = ssvec::w_element(&g, &f, &alpha, (0, 1)).unwrap().value;
        let w10 = ssvec::w_element(&g, &f, &alpha, (1, 0)).unwrap().value;
        prop_assert_eq!(w01, w10.neg());
    }
}

#[test]
fn universal_relations_need_invariance() {
    // a non-invariant F generally breaks the relations, so the check is not vacuous
    let (g, _) = invariants::delta_sl(2, 2).unwrap();
    let e = Var::finite(g.parse_label("E[1,2]").unwrap());
    let h = Var::finite(g.parse_label("H[1]").unwrap());
    let f = CommPoly::monomial(&[e, h], Q::one());
    assert!(!ssvec::universal_check(&g, &f, &[(-1, 1), (-2, 2)]).unwrap());
}
