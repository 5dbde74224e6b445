//! Specializations of `U(t⁻¹g[t⁻¹])`: quantum Mishchenko–Fomenko
//! subalgebras of `U(g)` through `ϱ_{μ,u}` and Gaudin subalgebras of
//! `U(g)^{⊗n} = U(g^{⊕n})` through `ρ_z̄`.
//!
//! Sites of `U(g^{⊕n})` are the components `1..=n` of [`Var`]; `U(g)` uses
//! component 0 at t-degree 0.

use crate::invariants::{self, InvariantError};
use crate::liealg::{g2_index, G2Letter, LieAlgebra};
use crate::linalg;
use crate::rational::Q;
use crate::ssvec::{self, SSCandidate, SsError};
use crate::sympoly::{bi_degree_components, BiMode, CommPoly};
use crate::uea::{NCPoly, Uea, Word};
use crate::var::Var;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialError {
    #[error("u must be non-zero")]
    ZeroU,
    #[error("evaluation points must be non-zero and pairwise distinct")]
    Points,
    #[error("site index out of range")]
    Site,
    #[error("mu is not regular: centralizer has dimension {0}")]
    NotRegular(usize),
    #[error("shift has {got} coordinates, expected {want}")]
    Shape { got: usize, want: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Ss(#[from] SsError),
}

/// Image of one generator: `Σ c·u^e·letter`, a `None` letter being `1`.
type Image = Vec<(Option<Var>, Q, i32)>;

/// Apply the algebra map defined on generators by `image` to a τ-free
/// element, keeping the power of the formal parameter `u` separate.
fn apply_hom(target: &Uea, x: &NCPoly, image: impl Fn(Var) -> Image + Sync) -> BTreeMap<i32, NCPoly> {
    let terms: Vec<(&Word, &Q)> = x.iter().collect();
    terms
        .par_iter()
        .map(|(w, c)| {
            let mut acc: BTreeMap<i32, NCPoly> = BTreeMap::new();
            acc.insert(0, NCPoly::constant((*c).clone()));
            for &v in w.iter() {
                assert!(!v.is_tau(), "apply τ on the vacuum first");
                let mut next: BTreeMap<i32, NCPoly> = BTreeMap::new();
                for (e, p) in &acc {
                    for (l, k, de) in image(v) {
                        let term = match l {
                            Some(l) => target.right_mul_poly(p, l).scale(&k),
                            None => p.scale(&k),
                        };
                        next.entry(e + de).or_default().add_assign(&term);
                    }
                }
                acc = next;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (e, p) in b {
                a.entry(e).or_default().add_assign(&p);
            }
            a
        })
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

fn mu_value(g: &LieAlgebra, mu: &[Q], i: usize) -> Q {
    g.form_vec(&g.basis_vec(i), mu)
}

/// `ϱ_{μ,u}` as a Laurent polynomial in `u`: `x[d] ↦ u^d x + δ_{d,-1}(x, μ)`.
/// The map key is the power of `u`.
pub fn rho_mu_formal(g: &LieAlgebra, x: &NCPoly, mu: &[Q]) -> BTreeMap<i32, NCPoly> {
    let u = Uea::new(g);
    apply_hom(&u, x, |v| {
        let d = v.tdeg() as i32;
        let mut img: Image = vec![(Some(Var::finite(v.index())), Q::one(), d)];
        if d == -1 {
            img.push((None, mu_value(g, mu, v.index()), 0));
        }
        img
    })
}

fn eval_laurent(parts: &BTreeMap<i32, NCPoly>, u: &Q) -> NCPoly {
    let mut r = NCPoly::zero();
    for (e, p) in parts {
        let s = if *e >= 0 { u.pow(*e as u32) } else { u.recip().pow((-*e) as u32) };
        r.add_scaled(p, &s);
    }
    r
}

/// `ϱ_{μ,u}(X) ∈ U(g)`.
pub fn rho_mu_u(g: &LieAlgebra, x: &NCPoly, mu: &[Q], u: &Q) -> Result<NCPoly, SpecialError> {
    if u.is_zero() {
        return Err(SpecialError::ZeroU);
    }
    check_shape(g, mu)?;
    Ok(eval_laurent(&rho_mu_formal(g, x, mu), u))
}

fn check_shape(g: &LieAlgebra, mu: &[Q]) -> Result<(), SpecialError> {
    if mu.len() != g.dim() {
        return Err(SpecialError::Shape { got: mu.len(), want: g.dim() });
    }
    Ok(())
}

fn check_points(z: &[Q]) -> Result<(), SpecialError> {
    let distinct = z.iter().enumerate().all(|(i, a)| z[..i].iter().all(|b| a != b));
    if z.is_empty() || !distinct || z.iter().any(|c| c.is_zero()) || z.len() >= 64 {
        return Err(SpecialError::Points);
    }
    Ok(())
}

/// `ρ_z̄(X) ∈ U(g^{⊕n})`: `x[d] ↦ Σ_k z_k^d x⁽ᵏ⁾`.
pub fn gaudin_rho(g: &LieAlgebra, x: &NCPoly, z: &[Q]) -> Result<NCPoly, SpecialError> {
    check_points(z)?;
    let u = Uea::new(g);
    let parts = apply_hom(&u, x, |v| {
        let d = -(v.tdeg() as i32);
        z.iter().enumerate().map(|(k, zk)| (Some(Var::site(k + 1, v.index())), zk.recip().pow(d as u32), 0)).collect()
    });
    Ok(parts.into_values().fold(NCPoly::zero(), |a, p| a.add(&p)))
}

/// `Σ_{j≠k} Σ_a x_a⁽ᵏ⁾ x^{a(j)} / (z_k - z_j)` for site `k` (from 1).
pub fn gaudin_quadratic(g: &LieAlgebra, k: usize, z: &[Q]) -> Result<NCPoly, SpecialError> {
    check_points(z)?;
    if k == 0 || k > z.len() {
        return Err(SpecialError::Site);
    }
    let u = Uea::new(g);
    let mut r = NCPoly::zero();
    for j in (1..=z.len()).filter(|&j| j != k) {
        let w = (&z[k - 1] - &z[j - 1]).recip();
        for (a, b, s) in g.casimir_terms() {
            r.add_scaled(&u.normal_order(&[Var::site(k, a), Var::site(j, b)]), &(&s * &w));
        }
    }
    Ok(r)
}

/// `ϖ(∂_μ^m H)` for every `H` in the list and `0 ≤ m < deg H`.
pub fn qmf_generators(g: &LieAlgebra, mu: &[Q], hs: &[CommPoly]) -> Result<Vec<NCPoly>, SpecialError> {
    check_shape(g, mu)?;
    let u = Uea::new(g);
    let mut out = Vec::new();
    for h in hs {
        let d = h.degree().unwrap_or(0);
        let mut cur = h.clone();
        for _ in 0..d {
            out.push(u.symmetrize(&cur));
            cur = cur.directional_derivative(mu, g);
        }
    }
    Ok(out)
}

/// Rank of the span of a list of elements.
pub fn span_rank(polys: &[NCPoly]) -> usize {
    let mut keys: Vec<Word> = polys.iter().flat_map(|p| p.iter().map(|(w, _)| w.clone())).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<Vec<Q>> = polys.iter().map(|p| keys.iter().map(|k| p.coeff(k)).collect()).collect();
    linalg::rank(&rows)
}

/// `span(a) = span(b)`.
pub fn same_span(a: &[NCPoly], b: &[NCPoly]) -> bool {
    let both: Vec<NCPoly> = a.iter().chain(b).cloned().collect();
    let r = span_rank(&both);
    r == span_rank(a) && r == span_rank(b)
}

/// `span(a) ⊆ span(b)`.
pub fn in_span(a: &[NCPoly], b: &[NCPoly]) -> bool {
    let both: Vec<NCPoly> = a.iter().chain(b).cloned().collect();
    span_rank(&both) == span_rank(b)
}

/// The images `ϱ_{μ,u}(ϖ(F)[ā])` at `p+2` distinct `u`, `p = #{a_i = -1}`,
/// against `ϖ(∂_μ^l F)` for `0 ≤ l ≤ p`.
pub fn mf_span_check(g: &LieAlgebra, f: &CommPoly, abar: &[i16], mu: &[Q]) -> Result<bool, SpecialError> {
    check_shape(g, mu)?;
    let u = Uea::new(g);
    let p = abar.iter().filter(|&&a| a == -1).count();
    let parts = rho_mu_formal(g, &u.sym_at(f, abar), mu);
    let images: Vec<NCPoly> = (0..p + 2).map(|i| eval_laurent(&parts, &Q::int(i as i64 + 1))).collect();
    let shifts: Vec<NCPoly> = (0..=p).map(|l| u.symmetrize(&f.directional_power(mu, g, l))).collect();
    Ok(same_span(&images, &shifts))
}

/// `ϖ((H_k)_{d-j,j})` in `U(g ⊕ g)` for every `H_k` and `0 ≤ j ≤ deg H_k`.
pub fn two_point_generators(g: &LieAlgebra, hs: &[CommPoly]) -> Vec<NCPoly> {
    let u = Uea::new(g);
    hs.iter()
        .filter_map(|h| bi_degree_components(h, BiMode::Evaluation))
        .flatten()
        .filter(|p| !p.is_zero())
        .map(|p| u.symmetrize(&p))
        .collect()
}

/// `ρ_z̄(τ^m S)` for every vector in the list and `0 ≤ m ≤ deg S`.
pub fn gaudin_generators(list: &[SSCandidate], z: &[Q]) -> Result<Vec<NCPoly>, SpecialError> {
    let mut out = Vec::new();
    for s in list {
        let u = Uea::new(&s.g);
        let mut cur = s.value.clone();
        for _ in 0..=s.top.degree().unwrap_or(0) {
            out.push(gaudin_rho(&s.g, &cur, z)?);
            cur = u.tau_derivation(&cur);
        }
    }
    Ok(out)
}

/// A non-vanishing commutator `[elems[i], elems[j]]`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub i: usize,
    pub j: usize,
    pub commutator: NCPoly,
}

/// All non-zero pairwise commutators; empty for a commutative family.
pub fn commute_check(g: &LieAlgebra, elems: &[NCPoly]) -> Vec<Certificate> {
    let u = Uea::new(g);
    let pairs: Vec<(usize, usize)> = (0..elems.len()).flat_map(|i| (i + 1..elems.len()).map(move |j| (i, j))).collect();
    let mut out: Vec<Certificate> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let c = u.commutator(&elems[i], &elems[j]);
            (!c.is_zero()).then_some(Certificate { i, j, commutator: c })
        })
        .collect();
    out.sort_by_key(|c| (c.i, c.j));
    out
}

/// `{pairs_checked, failures}`.
pub fn commute_report(n: usize, certs: &[Certificate]) -> Value {
    json!({
        "pairs_checked": n * n.saturating_sub(1) / 2,
        "failures": certs.len(),
        "failing_pairs": certs.iter().map(|c| [c.i, c.j]).collect::<Vec<_>>(),
    })
}

/// `c₁` with `Σ_a x_a·[ξ, x^a] = c₁ξ` in `U(g)` for every basis `ξ`, if one
/// constant works for all.
pub fn hsc_constant(g: &LieAlgebra) -> Option<Q> {
    let u = Uea::new(g);
    let cas = g.casimir_terms();
    let mut c1: Option<Q> = None;
    for xi in 0..g.dim() {
        let mut r = NCPoly::zero();
        for (a, b, s) in &cas {
            let br = g.bracket_vec(&g.basis_vec(xi), &g.basis_vec(*b));
            r.add_assign(&u.left_mul_poly(Var::finite(*a), &u.element(&br, 0, 0)).scale(s));
        }
        let base = NCPoly::var(Var::finite(xi));
        let c = r.coeff(&[Var::finite(xi)]);
        if r != base.scale(&c) || c1.as_ref().is_some_and(|d| *d != c) {
            return None;
        }
        c1 = Some(c);
    }
    c1
}

/// `H = Σ_a x_a x^a` in `U(g)`.
pub fn casimir_element(g: &LieAlgebra) -> NCPoly {
    Uea::new(g).casimir_on(0, 0, 0)
}

/// `(Σ x_a x_b x^b x^a = H², Σ x_a x_b x^a x^b = H² + c₁H)`.
pub fn hsc_identities(g: &LieAlgebra, c1: &Q) -> (bool, bool) {
    let u = Uea::new(g);
    let h = casimir_element(g);
    let h2 = u.mul(&h, &h);
    let cas = g.casimir_terms();
    let (mut nested, mut crossed) = (NCPoly::zero(), NCPoly::zero());
    for (a, a2, s) in &cas {
        for (b, b2, t) in &cas {
            let st = s * t;
            let v = |i: &usize| Var::finite(*i);
            nested.add_scaled(&u.normal_order(&[v(a), v(b), v(b2), v(a2)]), &st);
            crossed.add_scaled(&u.normal_order(&[v(a), v(b), v(a2), v(b2)]), &st);
        }
    }
    (nested == h2, crossed == h2.add(&h.scale(c1)))
}

/// Generators and checks for the quantum MF subalgebra of G2.
#[derive(Clone, Debug)]
pub struct G2Qmf {
    pub g: LieAlgebra,
    pub mu: Vec<Q>,
    /// `μ, H, ϖ(∂_μ^m H̃)` for `0 ≤ m ≤ 5`.
    pub generators: Vec<NCPoly>,
    pub c1: Option<Q>,
    /// `ϱ(ϖ(τ⁴H[-1])·1) = u⁻⁶·(multiple of H) + u⁻⁵·(multiple of μ)`.
    pub tau4_parts: bool,
    /// `Y_1 ∈ ⟨μ⟩, Y_2 ∈ ⟨H, μ²⟩, Y_3 ∈ ⟨μH, μ⟩, Y_4 ∈ ⟨H², H⟩` for the
    /// u-components of `ϱ(ϖ(τ²H²[-1])·1)`.
    pub y_parts: [bool; 4],
    pub identities: (bool, bool),
    /// Pairwise commutators of the generators that do not vanish.
    pub failures: Vec<(usize, usize)>,
}

impl G2Qmf {
    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "generators": self.generators.len(),
            "c1": self.c1.as_ref().map(|c| c.to_string()),
            "tau4_parts": self.tau4_parts,
            "y_parts": self.y_parts,
            "hsc_identities": [self.identities.0, self.identities.1],
            "pairs_checked": self.generators.len() * (self.generators.len() - 1) / 2,
            "failures": self.failures.len(),
        })
    }
}

/// Regular elements `a·H1 + b·H2` of the G2 Cartan subalgebra.
pub fn g2_cartan(g: &LieAlgebra, a: i64, b: i64) -> Vec<Q> {
    let mut mu = vec![Q::zero(); g.dim()];
    mu[g2_index(G2Letter::H1)] = Q::int(a);
    mu[g2_index(G2Letter::H2)] = Q::int(b);
    mu
}

/// Generators of `Ã_μ` for G2, their pairwise commutators, and the image
/// analysis showing that they suffice.
pub fn g2_qmf(mu: &[Q]) -> Result<G2Qmf, SpecialError> {
    let (g, d2, _) = invariants::g2_invariants()?;
    check_shape(&g, mu)?;
    let cdim = g.centralizer_dim(mu);
    if cdim != g.rank {
        return Err(SpecialError::NotRegular(cdim));
    }
    let u = Uea::new(&g);
    let ht = invariants::g2_htilde(&g)?;
    let h = casimir_element(&g);
    let m = u.element(mu, 0, 0);
    let mut generators = vec![m.clone(), h.clone()];
    generators.extend(qmf_generators(&g, mu, &[ht])?);

    let t4 = rho_mu_formal(&g, &u.sym_tau_apply(&d2, 4), mu);
    let tau4_parts = t4.iter().all(|(e, p)| match e {
        -6 => in_span(&[p.clone()], &[h.clone()]),
        -5 => in_span(&[p.clone()], &[m.clone()]),
        _ => false,
    });

    let y = rho_mu_formal(&g, &u.sym_tau_apply(&d2.pow(2), 2), mu);
    let part = |e: i32| y.get(&e).cloned().unwrap_or_default();
    let mh = u.mul(&m, &h);
    let y_parts = [
        in_span(&[part(-3)], &[m.clone()]),
        in_span(&[part(-4)], &[h.clone(), u.mul(&m, &m)]),
        in_span(&[part(-5)], &[mh, m.clone()]),
        in_span(&[part(-6)], &[u.mul(&h, &h), h.clone()]),
    ];
    let only_listed = y.keys().all(|e| (-6..=-3).contains(e));
    let c1 = hsc_constant(&g);
    let identities = c1.as_ref().map(|c| hsc_identities(&g, c)).unwrap_or((false, false));
    let failures = commute_check(&g, &generators).iter().map(|c| (c.i, c.j)).collect();
    Ok(G2Qmf {
        failures,
        mu: mu.to_vec(),
        generators,
        c1,
        tau4_parts,
        y_parts: if only_listed { y_parts } else { [false; 4] },
        identities,
        g,
    })
}

/// Central vectors of a complete set, built for the `qmf` and `gaudin`
/// verbs: `(H_k, S_k)` pairs for A, C and G2 and the odd orthogonal case.
pub fn complete_set(family: &str, n: usize) -> Result<Vec<SSCandidate>, SpecialError> {
    let list = match family {
        "A" => (2..=n).map(|k| ssvec::ss_type_a(n, k)).collect::<Result<Vec<_>, _>>()?,
        "C" => (1..=n / 2).map(|k| ssvec::ss_type_c(n, k)).collect::<Result<Vec<_>, _>>()?,
        "BD" if n % 2 == 1 => (1..=n / 2).map(|k| ssvec::ss_type_bd(n, k)).collect::<Result<Vec<_>, _>>()?,
        "BD" => {
            let mut v = (1..n / 2).map(|k| ssvec::ss_type_bd(n, k)).collect::<Result<Vec<_>, _>>()?;
            v.push(ssvec::ss_pfaffian(n)?);
            v
        }
        "G2" => vec![ssvec::ss_g2_quadratic()?, ssvec::ss_g2()?],
        _ => return Err(SsError::Range { family: "?", n, k: 0 }.into()),
    };
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_sl;

    fn diag_mu(g: &LieAlgebra, d: &[i64]) -> Vec<Q> {
        let n = d.len();
        let mut m = vec![vec![Q::zero(); n]; n];
        for (i, c) in d.iter().enumerate() {
            m[i][i] = Q::int(*c);
        }
        g.coords_of_matrix(&m).unwrap()
    }

    #[test]
    fn rho_on_generators_and_quadratics() {
        let g = build_sl(2).unwrap();
        let mu = diag_mu(&g, &[1, -1]);
        let u = Uea::new(&g);
        for i in 0..3 {
            let x = NCPoly::var(Var::loop_var(i, -1));
            let want = NCPoly::var(Var::finite(i)).scale(&Q::new(1, 3)).add(&NCPoly::constant(mu_value(&g, &mu, i)));
            assert_eq!(rho_mu_u(&g, &x, &mu, &Q::int(3)).unwrap(), want);
        }
        let h = casimir_element(&g);
        let m = u.element(&mu, 0, 0);
        let mm = g.form_vec(&mu, &mu);
        let uq = Q::int(2);
        let got = rho_mu_u(&g, &u.casimir_loop(-1, -1), &mu, &uq).unwrap();
        let want = h.scale(&Q::new(1, 4)).add(&m).add(&NCPoly::constant(mm));
        assert_eq!(got, want);
        let got = rho_mu_u(&g, &u.casimir_loop(-2, -1), &mu, &uq).unwrap();
        assert_eq!(got, h.scale(&Q::new(1, 8)).add(&m.scale(&Q::new(1, 4))));
        assert!(matches!(rho_mu_u(&g, &h, &mu, &Q::zero()), Err(SpecialError::ZeroU)));
    }

    #[test]
    fn maps_are_homomorphisms() {
        let g = build_sl(2).unwrap();
        let u = Uea::new(&g);
        let mu = diag_mu(&g, &[2, -2]);
        let z = [Q::int(1), Q::int(-3)];
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as usize
        };
        for _ in 0..10 {
            let w = |n: &mut dyn FnMut() -> usize| -> NCPoly {
                let len = 1 + n() % 3;
                let letters: Vec<Var> = (0..len).map(|_| Var::loop_var(n() % 3, -1 - (n() % 3) as i16)).collect();
                u.normal_order(&letters)
            };
            let (a, b) = (w(&mut next), w(&mut next));
            let ab = u.mul(&a, &b);
            let r = |p: &NCPoly| rho_mu_u(&g, p, &mu, &Q::int(5)).unwrap();
            assert_eq!(r(&ab), u.mul(&r(&a), &r(&b)));
            let s = |p: &NCPoly| gaudin_rho(&g, p, &z).unwrap();
            assert_eq!(s(&ab), u.mul(&s(&a), &s(&b)));
        }
    }

    #[test]
    fn gaudin_basics() {
        let g = build_sl(2).unwrap();
        let pm = [Q::int(1), Q::int(-1)];
        let x = NCPoly::var(Var::loop_var(0, -3));
        let want = NCPoly::var(Var::site(1, 0)).sub(&NCPoly::var(Var::site(2, 0)));
        assert_eq!(gaudin_rho(&g, &x, &pm).unwrap(), want);
        assert_eq!(gaudin_rho(&g, &NCPoly::var(Var::loop_var(1, -1)), &[Q::int(4)]).unwrap(), NCPoly::var(Var::site(1, 1)).scale(&Q::new(1, 4)));
        assert!(gaudin_rho(&g, &x, &[Q::int(1), Q::int(1)]).is_err());
        let z = [Q::int(1), Q::int(2), Q::int(4)];
        let hs: Vec<NCPoly> = (1..=3).map(|k| gaudin_quadratic(&g, k, &z).unwrap()).collect();
        assert!(hs.iter().fold(NCPoly::zero(), |a, h| a.add(h)).is_zero());
        assert!(commute_check(&g, &hs).is_empty());
        let u = Uea::new(&g);
        for i in 0..3 {
            let diag = (1..=3).fold(NCPoly::zero(), |a, k| a.add(&NCPoly::var(Var::site(k, i))));
            for h in &hs {
                assert!(u.commutator(h, &diag).is_zero());
            }
        }
    }

    #[test]
    fn commute_check_certificates() {
        let g = build_sl(2).unwrap();
        let u = Uea::new(&g);
        let x = NCPoly::var(Var::finite(0));
        assert!(commute_check(&g, &[x.clone(), u.mul(&x, &x)]).is_empty());
        let e = g.parse_label("E[1,2]").unwrap();
        let f = g.parse_label("E[2,1]").unwrap();
        let c = commute_check(&g, &[NCPoly::var(Var::finite(e)), NCPoly::var(Var::finite(f))]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].commutator, NCPoly::var(Var::finite(g.parse_label("H[1]").unwrap())));
    }

    #[test]
    fn mf_spans() {
        let (g, d2) = invariants::delta_sl(2, 2).unwrap();
        let mu = diag_mu(&g, &[3, -3]);
        assert!(mf_span_check(&g, &d2, &[-2, -2], &mu).unwrap());
        assert!(mf_span_check(&g, &d2, &[-1, -1], &mu).unwrap());
        let (g, d3) = invariants::delta_sl(3, 3).unwrap();
        let mu = diag_mu(&g, &[1, 2, -3]);
        assert!(mf_span_check(&g, &d3, &[-1, -1, -2], &mu).unwrap());
    }

    #[test]
    fn two_point_sl2() {
        let (g, d2) = invariants::delta_sl(2, 2).unwrap();
        let gens = two_point_generators(&g, &[d2]);
        assert_eq!(gens.len(), 3);
        let pm = [Q::int(1), Q::int(-1)];
        let s = ssvec::ss_type_a(2, 2).unwrap();
        let mut all = gens.clone();
        all.push(gaudin_rho(&g, &s.value, &pm).unwrap());
        assert!(commute_check(&g, &all).is_empty());
        let vg = gaudin_generators(&[s], &pm).unwrap();
        assert!(same_span(&vg, &gens));
    }

    #[test]
    fn hsc_sl2() {
        let g = build_sl(2).unwrap();
        let c1 = hsc_constant(&g).unwrap();
        assert_eq!(hsc_identities(&g, &c1), (true, true));
        assert!(!hsc_identities(&g, &(&c1 + &Q::one())).1);
    }
}
