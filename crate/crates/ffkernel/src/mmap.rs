//! The map `𝗆 : S^k(g) → Λ²g ⊗ S^{k-3}(g)`, the pullback `so(g) → g`, and
//! lifting of `𝗆`-images back to `S^{k-2}(g)`.

use crate::invariants;
use crate::liealg::{g2_index, G2Letter, LieAlgebra};
use crate::linalg::{self, Mat};
use crate::rational::Q;
use crate::sympoly::{mono_powers, CommPoly, Mono};
use crate::var::Var;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};
use std::cell::RefCell;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiftError {
    #[error("not in g ⊗ S: a coefficient matrix is outside ad(g)")]
    Pullback,
    #[error("in g ⊗ S but not symmetric")]
    Asymmetric,
    #[error("input is not homogeneous")]
    Inhomogeneous,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("not proportional")]
    NotProportional,
    #[error("reference polynomial is zero")]
    ZeroReference,
    #[error("degree mismatch")]
    Degree,
}

/// Element of `End(g) ⊗ S(g)`: one dense coefficient matrix per cofactor
/// monomial. Column `j` of a matrix is the image of `x_j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MatPoly {
    pub dim: usize,
    pub terms: FxHashMap<Mono, Mat<Q>>,
}

impl MatPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|m| m.iter().flatten().all(|c| c.is_zero()))
    }

    pub fn coefficient(&self, m: &[Var]) -> Mat<Q> {
        let mut k: Mono = m.iter().copied().collect();
        k.sort_unstable();
        self.terms.get(&k).cloned().unwrap_or_else(|| linalg::zeros(self.dim, self.dim))
    }

    /// Entry `(i, j)` as a polynomial.
    pub fn entry(&self, i: usize, j: usize) -> CommPoly {
        let mut p = CommPoly::zero();
        for (m, mat) in &self.terms {
            p.add_term(m.clone(), mat[i][j].clone());
        }
        p
    }

    /// Every coefficient matrix satisfies `(M x, y) + (x, M y) = 0`.
    pub fn is_skew(&self, g: &LieAlgebra) -> bool {
        let b = g.form_matrix();
        self.terms.values().all(|m| {
            let bm = linalg::mat_mul(b, m);
            (0..self.dim).all(|i| (0..self.dim).all(|j| (&bm[i][j] + &bm[j][i]).is_zero()))
        })
    }

    fn add_scaled(&mut self, cof: Mono, m: &Mat<Q>, s: &Q) {
        let d = self.dim;
        let e = self.terms.entry(cof).or_insert_with(|| linalg::zeros(d, d));
        for i in 0..d {
            for j in 0..d {
                if !m[i][j].is_zero() {
                    e[i][j] += &m[i][j] * s;
                }
            }
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, m| m.iter().flatten().any(|c| !c.is_zero()));
    }
}

/// `𝗆` and its relatives over a fixed algebra.
pub struct Mmap<'g> {
    pub g: &'g LieAlgebra,
    ads: Vec<Mat<Q>>,
    killing_inv: Mat<Q>,
    sym6: RefCell<FxHashMap<Mono, Mat<Q>>>,
}

impl<'g> Mmap<'g> {
    pub fn new(g: &'g LieAlgebra) -> Mmap<'g> {
        let ads: Vec<Mat<Q>> = (0..g.dim()).map(|i| g.ad_matrix(&g.basis_vec(i))).collect();
        let killing_inv = linalg::inverse(&g.killing()).expect("Killing form is nondegenerate");
        Mmap { g, ads, killing_inv, sym6: RefCell::new(FxHashMap::default()) }
    }

    pub fn ad(&self, i: usize) -> &Mat<Q> {
        &self.ads[i]
    }

    /// Average of the six products `ad(y_σ1) ad(y_σ2) ad(y_σ3)`.
    pub fn sym6(&self, t: &[Var]) -> Mat<Q> {
        let key: Mono = t.iter().copied().collect();
        if let Some(m) = self.sym6.borrow().get(&key) {
            return m.clone();
        }
        let d = self.g.dim();
        let mut acc = linalg::zeros::<Q>(d, d);
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let m = linalg::mat_mul(
                &linalg::mat_mul(&self.ads[t[p[0]].index()], &self.ads[t[p[1]].index()]),
                &self.ads[t[p[2]].index()],
            );
            for i in 0..d {
                for j in 0..d {
                    if !m[i][j].is_zero() {
                        acc[i][j] += &m[i][j];
                    }
                }
            }
        }
        let sixth = Q::new(1, 6);
        for row in acc.iter_mut() {
            for c in row.iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &sixth;
                }
            }
        }
        self.sym6.borrow_mut().insert(key, acc.clone());
        acc
    }

    /// `𝗆(F)` for homogeneous `F`, zero in degrees at most two.
    pub fn m3(&self, f: &CommPoly) -> MatPoly {
        let d = self.g.dim();
        let mut out = MatPoly { dim: d, terms: FxHashMap::default() };
        let Some(k) = f.degree() else { return out };
        if k <= 2 {
            return out;
        }
        let norm = &(&Q::factorial(3) * &Q::factorial(k as u64 - 3)) / &Q::factorial(k as u64);
        for (mono, c) in f.iter() {
            assert_eq!(mono.len(), k, "m3 needs a homogeneous input");
            let pw = mono_powers(mono);
            let base = c * &norm;
            for_each_submultiset(&pw, 3, &mut |take: &[usize]| {
                let mut t = Mono::new();
                let mut cof = Mono::new();
                let mut w = base.clone();
                for (i, (v, e)) in pw.iter().enumerate() {
                    for _ in 0..take[i] {
                        t.push(*v);
                    }
                    for _ in take[i]..*e {
                        cof.push(*v);
                    }
                    w = &w * &Q::binomial(*e as i64, take[i] as i64);
                }
                let s = self.sym6(&t);
                out.add_scaled(cof, &s, &w);
            });
        }
        out.prune();
        out
    }

    /// Solve `ad(ξ) = M`: the trace-pairing projection onto `ad(g)` is
    /// `ξ = K^{-1}(tr(M ad x_b))_b`; a nonzero residual is returned on failure.
    pub fn ad_pullback(&self, m: &Mat<Q>) -> Result<Vec<Q>, Mat<Q>> {
        let d = self.g.dim();
        let mut rhs = vec![Q::zero(); d];
        for (b, r) in rhs.iter_mut().enumerate() {
            let adb = &self.ads[b];
            let mut s = Q::zero();
            for i in 0..d {
                for j in 0..d {
                    if !m[i][j].is_zero() && !adb[j][i].is_zero() {
                        s += &m[i][j] * &adb[j][i];
                    }
                }
            }
            *r = s;
        }
        let mut xi = vec![Q::zero(); d];
        for (a, x) in xi.iter_mut().enumerate() {
            let mut s = Q::zero();
            for b in 0..d {
                if !self.killing_inv[a][b].is_zero() && !rhs[b].is_zero() {
                    s += &self.killing_inv[a][b] * &rhs[b];
                }
            }
            *x = s;
        }
        let back = self.g.ad_matrix(&xi);
        let mut res = linalg::zeros::<Q>(d, d);
        let mut ok = true;
        for i in 0..d {
            for j in 0..d {
                res[i][j] = &m[i][j] - &back[i][j];
                ok &= res[i][j].is_zero();
            }
        }
        if ok {
            Ok(xi)
        } else {
            Err(res)
        }
    }

    /// Lift `𝗆(H)` to `H' ∈ S^{k-2}(g)`, checking that `Σ_w ξ_w ⊗ R_w` is the
    /// symmetric embedding `(1/(k-2)) Σ_a x_a ⊗ ∂H'/∂x_a` of `H'`.
    pub fn lift_to_sym(&self, m: &MatPoly, cof_deg: usize) -> Result<CommPoly, LiftError> {
        let d = self.g.dim();
        let mut slots: Vec<CommPoly> = vec![CommPoly::zero(); d];
        for (cof, mat) in &m.terms {
            if cof.len() != cof_deg {
                return Err(LiftError::Inhomogeneous);
            }
            let xi = self.ad_pullback(mat).map_err(|_| LiftError::Pullback)?;
            for (a, c) in xi.iter().enumerate() {
                if !c.is_zero() {
                    slots[a].add_term(cof.clone(), c.clone());
                }
            }
        }
        let mut h = CommPoly::zero();
        for (a, s) in slots.iter().enumerate() {
            if !s.is_zero() {
                h.add_assign(&s.mul(&CommPoly::var(Var::finite(a))));
            }
        }
        let scale = Q::new(1, cof_deg as i64 + 1);
        for (a, s) in slots.iter().enumerate() {
            if h.derivative(Var::finite(a)).scale(&scale) != *s {
                return Err(LiftError::Asymmetric);
            }
        }
        Ok(h)
    }

    /// `𝗆(F)` read as an element of `S^{k-2}(g)`.
    pub fn m_sym(&self, f: &CommPoly) -> Result<CommPoly, LiftError> {
        let Some(k) = f.degree() else { return Ok(CommPoly::zero()) };
        if !f.is_homogeneous() {
            return Err(LiftError::Inhomogeneous);
        }
        if k <= 2 {
            return Ok(CommPoly::zero());
        }
        self.lift_to_sym(&self.m3(f), k - 3)
    }

    /// `𝗆^r(F)`.
    pub fn m_power(&self, f: &CommPoly, r: usize) -> Result<CommPoly, LiftError> {
        let mut p = f.clone();
        for _ in 0..r {
            p = self.m_sym(&p)?;
        }
        Ok(p)
    }

    /// Direct five-fold `𝗆₅`: average over five-element position sets of the
    /// symmetrised products of five adjoint operators plus the reversed
    /// products, with the analogous normalization. Used only as a cross-check.
    pub fn m5(&self, f: &CommPoly) -> MatPoly {
        let d = self.g.dim();
        let mut out = MatPoly { dim: d, terms: FxHashMap::default() };
        let Some(k) = f.degree() else { return out };
        if k <= 4 {
            return out;
        }
        let norm = &(&Q::factorial(5) * &Q::factorial(k as u64 - 5)) / &Q::factorial(k as u64);
        for (mono, c) in f.iter() {
            let pw = mono_powers(mono);
            let base = c * &norm;
            for_each_submultiset(&pw, 5, &mut |take: &[usize]| {
                let mut t: Vec<Var> = Vec::new();
                let mut cof = Mono::new();
                let mut w = base.clone();
                for (i, (v, e)) in pw.iter().enumerate() {
                    for _ in 0..take[i] {
                        t.push(*v);
                    }
                    for _ in take[i]..*e {
                        cof.push(*v);
                    }
                    w = &w * &Q::binomial(*e as i64, take[i] as i64);
                }
                let s = self.sym_odd(&t);
                out.add_scaled(cof, &s, &w);
            });
        }
        out.prune();
        out
    }

    /// `(1/(2·m!)) Σ_σ (ad y_σ1 ⋯ ad y_σm + ad y_σm ⋯ ad y_σ1)`; for odd `m`
    /// both halves agree up to the symmetric average.
    fn sym_odd(&self, t: &[Var]) -> Mat<Q> {
        let d = self.g.dim();
        let n = t.len();
        let mut acc = linalg::zeros::<Q>(d, d);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0i64;
        permute(&mut perm, 0, &mut |p: &[usize]| {
            let mut m = self.ads[t[p[0]].index()].clone();
            for &i in &p[1..] {
                m = linalg::mat_mul(&m, &self.ads[t[i].index()]);
            }
            for i in 0..d {
                for j in 0..d {
                    if !m[i][j].is_zero() {
                        acc[i][j] += &m[i][j];
                    }
                }
            }
            count += 1;
        });
        let s = Q::new(1, count);
        for row in acc.iter_mut() {
            for c in row.iter_mut() {
                *c = &*c * &s;
            }
        }
        acc
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Calls `f(take)` for every way to take `size` letters from a multiset
/// given as `(letter, multiplicity)`.
fn for_each_submultiset(pw: &[(Var, usize)], size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(pw: &[(Var, usize)], i: usize, left: usize, take: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if i == pw.len() {
            if left == 0 {
                f(take);
            }
            return;
        }
        for t in 0..=pw[i].1.min(left) {
            take[i] = t;
            rec(pw, i + 1, left - t, take, f);
        }
        take[i] = 0;
    }
    let mut take = vec![0; pw.len()];
    rec(pw, 0, size, &mut take, f);
}

/// `c` with `P = c·Q`.
pub fn identify_scalar(p: &CommPoly, q: &CommPoly) -> Result<Q, ScalarError> {
    if q.is_zero() {
        return if p.is_zero() { Ok(Q::zero()) } else { Err(ScalarError::ZeroReference) };
    }
    if p.is_zero() {
        return Ok(Q::zero());
    }
    if p.degree() != q.degree() {
        return Err(ScalarError::Degree);
    }
    let (m, cq) = q.sorted_terms()[0];
    let c = &p.coeff(m) / cq;
    if p.sub(&q.scale(&c)).is_zero() {
        Ok(c)
    } else {
        Err(ScalarError::NotProportional)
    }
}

/// Scalar for `𝗆_{2r+1}(Δ̃_k)` in type A: `((2r)!(k-2r)!/k!)·binom(n-k+2r, 2r)`.
pub fn type_a_scalar(n: usize, k: usize, r: usize) -> Q {
    let (n, k, r) = (n as i64, k as i64, r as i64);
    &(&(&Q::factorial(2 * r as u64) * &Q::factorial((k - 2 * r) as u64)) / &Q::factorial(k as u64))
        * &Q::binomial(n - k + 2 * r, 2 * r)
}

/// Scalar for `𝗆^r(Δ_2k)` in sp_2n: `((2k-2r)!(2r)!/(2k)!)·binom(2n-2k+2r+1, 2r)`.
pub fn type_c_scalar(n: usize, k: usize, r: usize) -> Q {
    let (n, k, r) = (n as i64, k as i64, r as i64);
    &(&(&Q::factorial((2 * k - 2 * r) as u64) * &Q::factorial(2 * r as u64)) / &Q::factorial(2 * k as u64))
        * &Q::binomial(2 * n - 2 * k + 2 * r + 1, 2 * r)
}

/// `R(k) = (binom(N,2) + 2N(k-1) + (k-1)(2k-3)) / (k(2k-1))` with `𝗆(Φ_2k) = R(k)Φ_{2k-2}` in so_N.
pub fn so_r(size: usize, k: usize) -> Q {
    let (n, k) = (size as i64, k as i64);
    Q::new(n * (n - 1) / 2 + 2 * n * (k - 1) + (k - 1) * (2 * k - 3), k * (2 * k - 1))
}

/// Outcome of one lift, as a JSON report.
pub fn report(input: &str, r: usize, res: &Result<CommPoly, LiftError>, target: Option<(&str, &CommPoly)>) -> Value {
    let status = match res {
        Ok(_) => "lifted",
        Err(LiftError::Pullback) => "pullback_failed",
        Err(_) => "asym",
    };
    let scalar = match (res, target) {
        (Ok(p), Some((_, t))) => identify_scalar(p, t).ok().map(|c| c.to_string()),
        _ => None,
    };
    json!({
        "input": input,
        "r": r,
        "status": status,
        "scalar": scalar,
        "target": target.map(|t| t.0),
    })
}

/// One computed constant next to its expected value.
#[derive(Clone, Debug)]
pub struct Probe {
    pub name: &'static str,
    pub value: Q,
    pub expected: Q,
}

impl Probe {
    pub fn ok(&self) -> bool {
        self.value == self.expected
    }
}

/// If `y = c·z` for vectors, return `c`.
pub fn ratio(y: &[Q], z: &[Q]) -> Option<Q> {
    let pos = z.iter().position(|c| !c.is_zero())?;
    let c = &y[pos] / &z[pos];
    if y.iter().zip(z).all(|(a, b)| *a == b * &c) {
        Some(c)
    } else {
        None
    }
}

fn apply(m: &Mat<Q>, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |s, (a, b)| if a.is_zero() || b.is_zero() { s } else { &s + &(a * b) })).collect()
}

/// The G2 constants: coefficient matrices of `𝗆(Δ₂³)` and `𝗆(Δ₆)` at the
/// cofactors `e₃²f₁` and `e₃²f₃`, evaluated on `e₃`, `a`, `h₃` and the
/// complement of the `sl₂`-triple; the scalar `b`; and `𝗆(H̃)`, `𝗆(Δ₂²)`.
pub fn g2_probe_suite(g: &LieAlgebra) -> Vec<Probe> {
    use G2Letter::*;
    let mm = Mmap::new(g);
    let v = |l: G2Letter| Var::finite(g2_index(l));
    let e = |l: G2Letter| g.basis_vec(g2_index(l));
    let d2 = invariants::g2_delta2();
    let d6 = invariants::g2_delta6(g).expect("rational Δ₆");
    let m23 = mm.m3(&d2.pow(3));
    let m6 = mm.m3(&d6);
    let xi = m23.coefficient(&[v(E3), v(E3), v(F1)]);
    let xit = m6.coefficient(&[v(E3), v(E3), v(F1)]);
    let eta = m23.coefficient(&[v(E3), v(E3), v(F3)]);
    let etat = m6.coefficient(&[v(E3), v(E3), v(F3)]);
    let f2 = e(F2);
    let h3 = g.bracket_vec(&e(E3), &e(F3));
    let adf3 = mm.g.ad_matrix(&e(F3));
    let along_f3 = |m: &Mat<Q>, x: &[Q]| ratio(&apply(m, x), &apply(&adf3, x)).unwrap_or_else(|| Q::int(i64::MAX));
    let nan = || Q::int(i64::MAX);
    let mut out = vec![
        Probe { name: "xi(e3)/f2", value: ratio(&apply(&xi, &e(E3)), &f2).unwrap_or_else(nan), expected: Q::new(6, 5) },
        Probe { name: "eta on e3", value: along_f3(&eta, &e(E3)), expected: Q::new(48, 5) },
        Probe { name: "eta on h3", value: along_f3(&eta, &h3), expected: Q::new(48, 5) },
    ];
    // sl2-stable complement of the triple: orthogonal under the form
    let triple = [e(E3), e(F3), h3.clone()];
    let b = g.form_matrix();
    let cons: Mat<Q> = triple.iter().map(|t| apply(b, t)).collect();
    let comp = linalg::nullspace(&cons);
    let mut ok = comp.len() == 11;
    for c in &comp {
        let img = apply(&adf3, c);
        if img.iter().all(|x| x.is_zero()) {
            ok &= apply(&eta, c).iter().all(|x| x.is_zero());
        } else {
            ok &= ratio(&apply(&eta, c), &img) == Some(Q::new(42, 5));
        }
    }
    out.push(Probe {
        name: "eta on complement",
        value: if ok { Q::new(42, 5) } else { nan() },
        expected: Q::new(42, 5),
    });
    out.push(Probe {
        name: "xi~(e3)/f2",
        value: ratio(&apply(&xit, &e(E3)), &f2).unwrap_or_else(nan),
        expected: Q::new(5, 18),
    });
    out.push(Probe { name: "eta~ on a", value: along_f3(&etat, &e(A)), expected: Q::new(-2, 9) });
    out.push(Probe { name: "eta~ on h3", value: along_f3(&etat, &h3), expected: Q::new(1, 18) });
    let bq = Q::new(invariants::G2_B.0, invariants::G2_B.1);
    let comb: Mat<Q> = etat
        .iter()
        .zip(&eta)
        .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, c)| a - &(&bq * c)).collect())
        .collect();
    out.push(Probe { name: "(eta~ - b eta) on a", value: along_f3(&comb, &e(A)), expected: Q::new(-13, 6) });
    out.push(Probe { name: "(eta~ - b eta) on h3", value: along_f3(&comb, &h3), expected: Q::new(-13, 6) });
    // b from (xi~ - b xi)(e3) = 0
    let bval = match (ratio(&apply(&xit, &e(E3)), &f2), ratio(&apply(&xi, &e(E3)), &f2)) {
        (Some(x1), Some(x2)) => &x1 / &x2,
        _ => nan(),
    };
    out.push(Probe { name: "b", value: bval, expected: bq.clone() });
    let ht = d6.sub(&d2.pow(3).scale(&bq));
    let mh = mm.m_sym(&ht).ok().and_then(|p| identify_scalar(&p, &d2.pow(2)).ok()).unwrap_or_else(nan);
    out.push(Probe { name: "m(Htilde)/Delta2^2", value: mh, expected: Q::new(-13, 12) });
    let m22 = mm.m_sym(&d2.pow(2)).ok().and_then(|p| identify_scalar(&p, &d2).ok()).unwrap_or_else(nan);
    out.push(Probe { name: "m(Delta2^2)/Delta2", value: m22, expected: Q::new(20, 3) });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_sl, build_sp};

    #[test]
    fn low_degree_is_zero() {
        let g = build_sl(3).unwrap();
        let mm = Mmap::new(&g);
        assert!(mm.m3(&invariants::casimir(&g)).is_zero());
        let (_, d3) = invariants::delta_sl(3, 3).unwrap();
        let m = mm.m3(&d3);
        assert!(m.is_zero());
    }

    #[test]
    fn pullback_round_trip() {
        let g = build_sp(4).unwrap();
        let mm = Mmap::new(&g);
        for i in 0..g.dim() {
            let mut x = g.basis_vec(i);
            x[(i + 3) % g.dim()] += Q::new(2, 3);
            assert_eq!(mm.ad_pullback(&g.ad_matrix(&x)).unwrap(), x);
        }
    }

    #[test]
    fn sl4_quartic_lifts() {
        let (g, d4) = invariants::delta_sl(4, 4).unwrap();
        let mm = Mmap::new(&g);
        let m = mm.m3(&d4);
        assert!(m.is_skew(&g));
        let l = mm.lift_to_sym(&m, 1).unwrap();
        let (_, d2) = invariants::delta_sl(4, 2).unwrap();
        assert_eq!(identify_scalar(&l, &d2), Ok(Q::new(1, 6)));
    }

    #[test]
    fn scalar_identification() {
        let (_, d2) = invariants::delta_sl(3, 2).unwrap();
        let (_, d3) = invariants::delta_sl(3, 3).unwrap();
        assert_eq!(identify_scalar(&CommPoly::zero(), &d2), Ok(Q::zero()));
        assert_eq!(identify_scalar(&d2, &d3), Err(ScalarError::Degree));
        assert_eq!(identify_scalar(&d2.scale(&Q::new(-3, 7)), &d2), Ok(Q::new(-3, 7)));
    }

    #[test]
    fn g2_constants() {
        let g = crate::liealg::build_g2().unwrap();
        for p in g2_probe_suite(&g) {
            assert!(p.ok(), "{}: got {} expected {}", p.name, p.value, p.expected);
        }
    }
}
