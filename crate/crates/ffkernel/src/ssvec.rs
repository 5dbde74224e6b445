//! Segal–Sugawara vectors: explicit constructions for each type, the exact
//! centrality check, and the commutator laboratory (`X`-decompositions, the
//! constants `c_{2,3}`, `W`-elements and half-brackets).

use crate::invariants::{self, InvariantError};
use crate::liealg::{build_sl, LieAlgebra};
use crate::linalg::{self, Mat, Solution};
use crate::mmap::{LiftError, Mmap};
use crate::rational::Q;
use crate::sympoly::{independence_check, mono_powers, orbit_size, CommPoly, Mono};
use crate::uea::{NCPoly, Uea};
use crate::var::Var;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SsError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("k = {k} out of range for {family} with n = {n}")]
    Range { family: &'static str, n: usize, k: usize },
    #[error("𝗆^{r} does not lift: {err}")]
    Lift { r: usize, err: LiftError },
}

/// One correction term `coeff · ϖ(τ^{2r} H[-1])·1`; `r = 0` is the leading term.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Q,
    pub invariant: String,
    pub r: usize,
}

#[derive(Clone, Debug)]
pub struct SSCandidate {
    pub g: LieAlgebra,
    pub family: String,
    pub n: usize,
    pub k: usize,
    /// The invariant whose symbol the vector has, in degree-zero variables.
    pub top: CommPoly,
    pub terms: Vec<Term>,
    pub value: NCPoly,
}

impl SSCandidate {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "algebra": self.g.name,
            "terms": self.terms.iter().map(|t| json!({
                "coeff": t.coeff.to_string(),
                "invariant": t.invariant,
                "r": t.r,
            })).collect::<Vec<_>>(),
            "value": self.value.to_json(&self.g),
        })
    }

    /// Symbol of the value with the `[-1]` grading dropped.
    pub fn symbol(&self) -> CommPoly {
        self.value.gr().map_vars(|v| v.with_tdeg(0))
    }

    /// `ω(S) = (-1)^{deg} S`.
    pub fn is_omega_eigenvector(&self) -> bool {
        let u = Uea::new(&self.g);
        let w = u.antipode(&self.value);
        let deg = self.value.degree().unwrap_or(0);
        if deg % 2 == 0 {
            w == self.value
        } else {
            w == self.value.scale(&Q::int(-1))
        }
    }
}

/// Leading term plus `Σ coeff·ϖ(τ^{2r} F[-1])·1` over the given corrections.
fn assemble(u: &Uea, top: &CommPoly, corr: &[(Q, &CommPoly, usize)]) -> NCPoly {
    let mut v = u.symmetrize(&top.at_tdeg(-1));
    for (c, f, r) in corr {
        if !c.is_zero() && !f.is_zero() {
            v.add_scaled(&u.sym_tau_apply(f, 2 * r), c);
        }
    }
    v
}

fn build(
    g: LieAlgebra,
    family: &str,
    n: usize,
    k: usize,
    top_name: String,
    top: CommPoly,
    corr: Vec<(Q, String, CommPoly, usize)>,
) -> SSCandidate {
    let value = {
        let u = Uea::new(&g);
        let refs: Vec<(Q, &CommPoly, usize)> = corr.iter().map(|(c, _, f, r)| (c.clone(), f, *r)).collect();
        assemble(&u, &top, &refs)
    };
    let mut terms = vec![Term { coeff: Q::one(), invariant: top_name, r: 0 }];
    terms.extend(corr.into_iter().map(|(coeff, invariant, _, r)| Term { coeff, invariant, r }));
    SSCandidate { g, family: family.into(), n, k, top, terms, value }
}

/// Type A, sl_n: `ϖ(Δ̃_k[-1]) + Σ_{1≤r<k/2} binom(n-k+2r, 2r) ϖ(τ^{2r}Δ̃_{k-2r}[-1])·1`.
pub fn ss_type_a(n: usize, k: usize) -> Result<SSCandidate, SsError> {
    if n < 2 || k < 2 || k > n {
        return Err(SsError::Range { family: "A", n, k });
    }
    let (g, top) = invariants::delta_sl(n, k)?;
    let mut corr = Vec::new();
    for r in 1..k.div_ceil(2) {
        let (_, f) = invariants::delta_sl(n, k - 2 * r)?;
        let c = Q::binomial((n - k + 2 * r) as i64, 2 * r as i64);
        corr.push((c, format!("DeltaTilde{}", k - 2 * r), f, r));
    }
    Ok(build(g, "A", n, k, format!("DeltaTilde{}", k), top, corr))
}

/// `S̃_{k-1}`: the type A sum with `1 ≤ r < (k-1)/2`, i.e. without the
/// `τ^{k-1}Δ̃_1` term for odd `k`.
pub fn ss_type_a_intro(n: usize, k: usize) -> Result<SSCandidate, SsError> {
    if n < 2 || k < 2 || k > n {
        return Err(SsError::Range { family: "A", n, k });
    }
    let (g, top) = invariants::delta_sl(n, k)?;
    let mut corr = Vec::new();
    for r in (1..).take_while(|r| 2 * r + 1 < k) {
        let (_, f) = invariants::delta_sl(n, k - 2 * r)?;
        let c = Q::binomial((n - k + 2 * r) as i64, 2 * r as i64);
        corr.push((c, format!("DeltaTilde{}", k - 2 * r), f, r));
    }
    Ok(build(g, "A", n, k, format!("DeltaTilde{}", k), top, corr))
}

/// `ϖ(H[-1]) + Σ_{1≤r<k/2} binom(k, 2r) ϖ(τ^{2r}𝗆^r(H)[-1])·1` for any
/// invariant whose powers of `𝗆` lift.
pub fn ss_generic(g: &LieAlgebra, h: &CommPoly, name: &str) -> Result<SSCandidate, SsError> {
    let k = h.degree().unwrap_or(0);
    let mm = Mmap::new(g);
    let mut corr = Vec::new();
    let mut cur = h.clone();
    for r in 1..k.div_ceil(2) {
        cur = mm.m_sym(&cur).map_err(|err| SsError::Lift { r, err })?;
        let c = Q::binomial(k as i64, 2 * r as i64);
        corr.push((c, format!("m^{}({})", r, name), cur.clone(), r));
    }
    Ok(build(g.clone(), "generic", g.rank, k, name.into(), h.clone(), corr))
}

/// Type C, sp_2n: `ϖ(Δ_2k[-1]) + Σ_{1≤r<k} binom(2n-2k+2r+1, 2r) ϖ(τ^{2r}Δ_{2k-2r}[-1])·1`.
pub fn ss_type_c(two_n: usize, k: usize) -> Result<SSCandidate, SsError> {
    if two_n < 2 || two_n % 2 == 1 || k < 1 || k > two_n / 2 {
        return Err(SsError::Range { family: "C", n: two_n, k });
    }
    let n = two_n / 2;
    let (g, top) = invariants::delta_sp(two_n, k)?;
    let mut corr = Vec::new();
    for r in 1..k {
        let (_, f) = invariants::delta_sp(two_n, k - r)?;
        let c = Q::binomial((2 * n - 2 * k + 2 * r + 1) as i64, 2 * r as i64);
        corr.push((c, format!("DeltaSp{}", 2 * (k - r)), f, r));
    }
    Ok(build(g, "C", two_n, k, format!("DeltaSp{}", 2 * k), top, corr))
}

/// `R(k,r) = 2^r/(2r)! · Π_{u=1}^r (binom(N,2) + 2N(k-u) + (k-u)(2k-2u-1))`.
pub fn so_coefficient(size: usize, k: usize, r: usize) -> Q {
    let (n, k) = (size as i64, k as i64);
    let mut c = &Q::int(1 << r) / &Q::factorial(2 * r as u64);
    for u in 1..=r as i64 {
        c = &c * &Q::int(n * (n - 1) / 2 + 2 * n * (k - u) + (k - u) * (2 * k - 2 * u - 1));
    }
    c
}

/// Types B and D, so_N: `ϖ(Φ_2k[-1]) + Σ_{1≤r<k} R(k,r) ϖ(τ^{2r}Φ_{2k-2r}[-1])·1`.
pub fn ss_type_bd(size: usize, k: usize) -> Result<SSCandidate, SsError> {
    let ell = size / 2;
    let ok = size >= 3 && k >= 1 && if size % 2 == 0 { k < ell } else { k <= ell };
    if !ok {
        return Err(SsError::Range { family: "BD", n: size, k });
    }
    let (g, top) = invariants::phi_so(size, k)?;
    let mut corr = Vec::new();
    for r in 1..k {
        let (_, f) = invariants::phi_so(size, k - r)?;
        corr.push((so_coefficient(size, k, r), format!("Phi{}", 2 * (k - r)), f, r));
    }
    Ok(build(g, "BD", size, k, format!("Phi{}", 2 * k), top, corr))
}

/// `ϖ(Pf[-1])` on so_2n.
pub fn ss_pfaffian(two_n: usize) -> Result<SSCandidate, SsError> {
    if two_n < 2 || two_n % 2 == 1 {
        return Err(SsError::Range { family: "Pf", n: two_n, k: two_n / 2 });
    }
    let (g, top) = invariants::pfaffian(two_n)?;
    Ok(build(g, "Pf", two_n, two_n / 2, "Pf".into(), top, vec![]))
}

pub const G2_TAU2: (i64, i64) = (-65, 4);
pub const G2_TAU4: (i64, i64) = (-325, 3);

/// The degree-six G2 vector
/// `ϖ(H̃[-1]) - (65/4)ϖ(τ²Δ₂²[-1])·1 - (325/3)ϖ(τ⁴Δ₂[-1])·1`.
pub fn ss_g2() -> Result<SSCandidate, SsError> {
    let (g, d2, _) = invariants::g2_invariants()?;
    let top = invariants::g2_htilde(&g)?;
    let corr = vec![
        (Q::new(G2_TAU2.0, G2_TAU2.1), "G2Delta2^2".to_string(), d2.pow(2), 1),
        (Q::new(G2_TAU4.0, G2_TAU4.1), "G2Delta2".to_string(), d2, 2),
    ];
    Ok(build(g, "G2", 7, 6, "G2Htilde".into(), top, corr))
}

/// `ϖ(Δ₂[-1])` for G2.
pub fn ss_g2_quadratic() -> Result<SSCandidate, SsError> {
    let (g, d2, _) = invariants::g2_invariants()?;
    Ok(build(g, "G2", 7, 2, "G2Delta2".into(), d2, vec![]))
}

/// A vector from an arbitrary leading invariant with no corrections.
pub fn ss_plain(g: &LieAlgebra, top: &CommPoly, name: &str) -> SSCandidate {
    build(g.clone(), "plain", g.rank, top.degree().unwrap_or(0), name.into(), top.clone(), vec![])
}

/// `[H[-1], S]`; zero exactly when `S` is central.
pub fn verify_central(s: &SSCandidate) -> NCPoly {
    let u = Uea::new(&s.g);
    u.commutator_with_casimir(-1, -1, &s.value)
}

/// Whether the symbols, read in `S(g)`, are algebraically independent and
/// as many as the rank.
pub fn verify_complete_set(list: &[SSCandidate]) -> bool {
    let Some(first) = list.first() else { return false };
    if list.len() != first.g.rank {
        return false;
    }
    let syms: Vec<CommPoly> = list.iter().map(|s| s.symbol()).collect();
    independence_check(&syms)
}

/// `Σ_a x_a[b1] x^a[b2]` as a commutative polynomial.
fn casimir_sym(g: &LieAlgebra, b1: i16, b2: i16) -> CommPoly {
    invariants::casimir(g).polarize(&[b1, b2])
}

/// `X_Ŷ = [H[b1,b2], ϖ(Ŷ)] - ϖ({H[b1,b2], Ŷ})` for `Ŷ ∈ S(ĝ⁻)`.
pub fn x_element(u: &Uea, y: &CommPoly, b1: i16, b2: i16) -> NCPoly {
    let full = u.commutator_with_casimir(b1, b2, &u.symmetrize(y));
    let pb = casimir_sym(u.g, b1, b2).poisson(y, u.g);
    full.sub(&u.symmetrize(&pb))
}

/// `X_{F[ā]}` for `F ∈ S^m(g)`.
pub fn x_decomposition(u: &Uea, f: &CommPoly, abar: &[i16], bbar: (i16, i16)) -> NCPoly {
    x_element(u, &f.polarize(abar), bbar.0, bbar.1)
}

/// All orderings of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Constants `c_{2,3}(j,p)` and `c_{3,2}(j,p)`, `1 ≤ j < p ≤ m-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CConstants {
    pub m: usize,
    pub c23: Vec<((usize, usize), Q)>,
    pub c32: Vec<((usize, usize), Q)>,
}

impl CConstants {
    /// Constants produced by moving commutators towards the centre: the
    /// term `X(σ;j,l)` with weight `(j+l-m-1)/(m+1)!`, `j+l < m+1`, sends its
    /// commutator at `l` to `m+1-j`, leaving a double commutator at each
    /// merged position on the way. Hence
    /// `(m+1)!·c_{2,3}(j,p) = Σ_{l=j+1}^{p} (j+l-m-1)` for `p ≤ m-j`, mirrored
    /// to `c_{3,2}(j,p) = c_{2,3}(m-p, m-j)`.
    pub fn transport(m: usize) -> CConstants {
        let f = Q::factorial(m as u64 + 1);
        let pairs: Vec<(usize, usize)> = (1..m).flat_map(|j| (j + 1..m).map(move |p| (j, p))).collect();
        let c23 = |j: usize, p: usize| -> Q {
            if p + j > m {
                return Q::zero();
            }
            let s: i64 = (j + 1..=p).map(|l| (j + l) as i64 - m as i64 - 1).sum();
            &Q::int(s) / &f
        };
        CConstants {
            m,
            c23: pairs.iter().map(|&(j, p)| ((j, p), c23(j, p))).collect(),
            c32: pairs.iter().map(|&(j, p)| ((j, p), c23(m - p, m - j))).collect(),
        }
    }

    pub fn c23(&self, j: usize, p: usize) -> Q {
        self.c23.iter().find(|e| e.0 == (j, p)).map(|e| e.1.clone()).unwrap_or_else(Q::zero)
    }

    pub fn c32(&self, j: usize, p: usize) -> Q {
        self.c32.iter().find(|e| e.0 == (j, p)).map(|e| e.1.clone()).unwrap_or_else(Q::zero)
    }

    /// `c_{2,3}(j,p) = c_{3,2}(m-p, m-j)`.
    pub fn symmetric(&self) -> bool {
        self.c23.iter().all(|((j, p), c)| *c == self.c32(self.m - p, self.m - j))
    }

    /// `c_{2,3}(j,p) ≤ 0`, strictly when `p ≤ m-j`.
    pub fn signs_ok(&self) -> bool {
        self.c23.iter().all(|((j, p), c)| c.signum() <= 0 && (*p > self.m - j || c.signum() < 0))
    }

    /// Unknowns in the column order of [`c_system`].
    pub fn as_vector(&self) -> Vec<Q> {
        self.c23.iter().chain(&self.c32).map(|e| e.1.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        let list = |v: &[((usize, usize), Q)]| -> Vec<Value> {
            v.iter().map(|((j, p), c)| json!({"j": j, "p": p, "c": c.to_string()})).collect()
        };
        json!({"m": self.m, "c23": list(&self.c23), "c32": list(&self.c32)})
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum FitError {
    #[error("the ansatz cannot reproduce X_Y")]
    Inconsistent,
    #[error("need 3 ≤ m ≤ 6")]
    Range,
}

/// Outcome of fitting the structural expansion of `X_Ŷ`.
#[derive(Clone, Debug)]
pub struct CProbe {
    pub constants: CConstants,
    /// Dimension of the space of constant vectors that reproduce `X_Ŷ` on
    /// both monomials.
    pub ambiguity: usize,
    /// One constant vector serves both monomials.
    pub y_independent: bool,
    /// `s` with `ansatz(constants) = s·X_Ŷ` on both monomials, 0 if neither sign works.
    pub orientation: i64,
}

impl CProbe {
    pub fn to_json(&self) -> Value {
        json!({
            "constants": self.constants.to_json(),
            "ambiguity": self.ambiguity,
            "y_independent": self.y_independent,
            "orientation": self.orientation,
        })
    }
}

fn apply_rows(mat: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    mat.iter()
        .map(|r| r.iter().zip(x).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Q::zero(), |s, (a, b)| &s + &(a * b)))
        .collect()
}

fn particular(mat: &Mat<Q>, rhs: &[Q]) -> Option<Vec<Q>> {
    match linalg::solve(mat, rhs) {
        Solution::Unique(x) | Solution::Family(x, _) => Some(x),
        Solution::Inconsistent => None,
    }
}


/// Linear system for the constants: the pairs `(j,p)`, one column per
/// unknown (`c_{2,3}` first), one row per PBW word, and the coordinates of
/// `X_Ŷ`.
pub fn c_system(u: &Uea, y: &[usize], a: &[i16], b: (i16, i16)) -> (Vec<(usize, usize)>, Vec<Vec<Q>>, Vec<Q>) {
    let g = u.g;
    let m = y.len();
    let pairs: Vec<(usize, usize)> = (1..m).flat_map(|j| (j + 1..m).map(move |p| (j, p))).collect();
    let np = pairs.len();
    let yhat = CommPoly::monomial(&y.iter().zip(a).map(|(&i, &d)| Var::loop_var(i, d)).collect::<Vec<_>>(), Q::one());
    let target = x_element(u, &yhat, b.0, b.1);
    let cas = g.casimir_terms();
    let basis = |i: usize| g.basis_vec(i);
    // raw words per unknown, normal ordered once at the end
    let mut raw: Vec<FxHashMap<Vec<Var>, Q>> = vec![FxHashMap::default(); 2 * np];
    for l in 0..m {
        let others: Vec<usize> = (0..m).filter(|&q| q != l).collect();
        for sigma in permutations(&others) {
            for (col, &(j, p)) in pairs.iter().enumerate() {
                let (sj, sp) = (sigma[j - 1], sigma[p - 1]);
                // Σ_a x^a ⊗ ad(y_σp) ad(y_l) ad(y_σj) x_a
                let mut tensor: Vec<(usize, usize, Q)> = Vec::new();
                for (ia, ib, c) in &cas {
                    let v = g.bracket_vec(&basis(y[sj]), &basis(*ia));
                    let v = g.bracket_vec(&basis(y[l]), &v);
                    let v = g.bracket_vec(&basis(y[sp]), &v);
                    for (iu, cu) in v.iter().enumerate() {
                        if !cu.is_zero() {
                            tensor.push((*ib, iu, c * cu));
                        }
                    }
                }
                if tensor.is_empty() {
                    continue;
                }
                let kinds: [(usize, i16, i16, i64); 4] = [
                    (col, b.0 + a[sj], b.1 + a[l] + a[sp], 1),
                    (col, b.1 + a[sj], b.0 + a[l] + a[sp], 1),
                    (np + col, b.0 + a[sj] + a[l], b.1 + a[sp], -1),
                    (np + col, b.1 + a[sj] + a[l], b.0 + a[sp], -1),
                ];
                for (target_col, tj, tp, sign) in kinds {
                    for (xi, xu, c) in &tensor {
                        let word: Vec<Var> = (1..m)
                            .map(|q| {
                                if q == j {
                                    Var::loop_var(*xi, tj)
                                } else if q == p {
                                    Var::loop_var(*xu, tp)
                                } else {
                                    Var::loop_var(y[sigma[q - 1]], a[sigma[q - 1]])
                                }
                            })
                            .collect();
                        let e = raw[target_col].entry(word).or_insert_with(Q::zero);
                        *e += &(c * &Q::int(sign));
                    }
                }
            }
        }
    }
    let cols: Vec<NCPoly> = raw
        .into_iter()
        .map(|words| {
            let mut p = NCPoly::zero();
            for (w, c) in words {
                if !c.is_zero() {
                    p.add_scaled(&u.normal_order(&w), &c);
                }
            }
            p
        })
        .collect();
    let mut index: FxHashMap<Vec<Var>, usize> = FxHashMap::default();
    for p in cols.iter().chain(std::iter::once(&target)) {
        for (w, _) in p.iter() {
            let n = index.len();
            index.entry(w.to_vec()).or_insert(n);
        }
    }
    let mut mat = vec![vec![Q::zero(); 2 * np]; index.len()];
    let mut rhs = vec![Q::zero(); index.len()];
    for (c, p) in cols.iter().enumerate() {
        for (w, v) in p.iter() {
            mat[index[w.as_slice()]][c] = v.clone();
        }
    }
    for (w, v) in target.iter() {
        rhs[index[w.as_slice()]] = v.clone();
    }
    (pairs, mat, rhs)
}

/// Fit the expansion of `X_Ŷ` in `U(t⁻¹sl_3[t⁻¹])` for two monomials with
/// distinct t-degrees, and test the transported constants against it.
pub fn c_constants_probe(m: usize) -> Result<CProbe, FitError> {
    if !(3..=6).contains(&m) {
        return Err(FitError::Range);
    }
    let g = build_sl(3).expect("sl3");
    let u = Uea::new(&g);
    let idx = |s: &str| g.parse_label(s).expect("sl3 label");
    let letters = [idx("E[1,2]"), idx("E[2,3]"), idx("E[3,1]"), idx("H[1]"), idx("E[2,1]"), idx("H[2]")];
    let first: Vec<usize> = letters[..m].to_vec();
    let second: Vec<usize> = letters.iter().rev().take(m).copied().collect();
    let a1: Vec<i16> = (0..m).map(|i| -(1 << i)).collect();
    let a2: Vec<i16> = (0..m).map(|i| -(3 * i as i16) - 1).collect();
    let (_, m1, r1) = c_system(&u, &first, &a1, (-64, -128));
    u.clear_memo();
    let (_, m2, r2) = c_system(&u, &second, &a2, (-1, -2));
    if particular(&m1, &r1).is_none() || particular(&m2, &r2).is_none() {
        return Err(FitError::Inconsistent);
    }
    let mut both = m1.clone();
    both.extend(m2.iter().cloned());
    let rhs: Vec<Q> = r1.iter().chain(&r2).cloned().collect();
    let y_independent = particular(&both, &rhs).is_some();
    let constants = CConstants::transport(m);
    let x = constants.as_vector();
    let (v1, v2) = (apply_rows(&m1, &x), apply_rows(&m2, &x));
    let neg = |r: &[Q]| -> Vec<Q> { r.iter().map(|c| -c).collect() };
    let orientation = if v1 == r1 && v2 == r2 {
        1
    } else if v1 == neg(&r1) && v2 == neg(&r2) {
        -1
    } else {
        0
    };
    Ok(CProbe { constants, ambiguity: x.len() - linalg::rank(&both), y_independent, orientation })
}

/// The lowest symbol of `X_{F[-1]}` (all t-degrees `-1`, `H = H[-1,-1]`)
/// against `P_F = Σ_a x^a[-2]·(M(F) x_a)[-3]·R_F` where `M(F)` is the
/// matrix-valued cubic map and `R_F` its coefficient moved to t-degree `-1`.
/// Returns `κ` with `gr X = κ·P_F`, or `None` if they are not proportional.
pub fn msym_shape(g: &LieAlgebra, f: &CommPoly) -> Option<Q> {
    let m = f.degree()?;
    let u = Uea::new(g);
    let gx = x_decomposition(&u, f, &vec![-1; m], (-1, -1)).degree_part(m - 1);
    let mut pred = CommPoly::zero();
    let cas = g.casimir_terms();
    for (mono, mat) in Mmap::new(g).m3(f).terms.iter() {
        let r = CommPoly::monomial(&mono.iter().map(|v| v.with_tdeg(-1)).collect::<Vec<_>>(), Q::one());
        for (a, b, s) in &cas {
            for (i, row) in mat.iter().enumerate() {
                let c = &row[*a] * s;
                if !c.is_zero() {
                    pred.add_assign(&CommPoly::monomial(&[Var::loop_var(*b, -2), Var::loop_var(i, -3)], c).mul(&r));
                }
            }
        }
    }
    let keys: Vec<Mono> = gx.iter().map(|(k, _)| k.clone()).chain(pred.iter().map(|(k, _)| k.clone())).collect();
    let y: Vec<Q> = keys.iter().map(|k| gx.coeff(k)).collect();
    let z: Vec<Q> = keys.iter().map(|k| pred.coeff(k)).collect();
    crate::mmap::ratio(&y, &z)
}

#[derive(Debug, Error, PartialEq)]
pub enum WError {
    #[error("multiset must have distinct negative values with positive multiplicities")]
    Malformed,
    #[error("multiplicities must add up to deg F + 1 = {0}")]
    Size(usize),
    #[error("pair must name two different groups")]
    Pair,
}

/// `W[F, ᾱ, (i,j)] ∈ S^ᾱ(ĝ⁻)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WElement {
    pub f: CommPoly,
    pub alpha: Vec<(i16, usize)>,
    pub pair: (usize, usize),
    pub value: CommPoly,
}

fn check_alpha(alpha: &[(i16, usize)]) -> Result<(), WError> {
    let mut seen: Vec<i16> = Vec::new();
    for &(a, r) in alpha {
        if a >= 0 || r == 0 || seen.contains(&a) {
            return Err(WError::Malformed);
        }
        seen.push(a);
    }
    Ok(())
}

/// `W[F, ᾱ, (i,j)]` with groups indexed from 0. Computed as the adjoint of
/// "bracket one factor of group `i` with one of group `j`, then forget the
/// t-degrees": the merged factor is split back by `z ↦ Σ_a x_a ⊗ [z, x^a]`
/// after the forgetful adjoint, which is `|S_m β̄|·F[β̄]`.
pub fn w_element(g: &LieAlgebra, f: &CommPoly, alpha: &[(i16, usize)], pair: (usize, usize)) -> Result<WElement, WError> {
    check_alpha(alpha)?;
    let m = f.degree().unwrap_or(0);
    let total: usize = alpha.iter().map(|x| x.1).sum();
    if total != m + 1 {
        return Err(WError::Size(m + 1));
    }
    let (i, j) = pair;
    if i == j || i >= alpha.len() || j >= alpha.len() {
        return Err(WError::Pair);
    }
    let (ai, aj) = (alpha[i].0, alpha[j].0);
    // an unused t-degree marks the merged factor
    let mark = alpha.iter().map(|x| x.0).min().unwrap() - 1;
    let mut beta: Vec<i16> = vec![mark];
    for (q, &(a, r)) in alpha.iter().enumerate() {
        let r = if q == i || q == j { r - 1 } else { r };
        beta.extend(std::iter::repeat(a).take(r));
    }
    let big = f.polarize(&beta).scale(&orbit_size(&beta));
    let mut value = CommPoly::zero();
    let cas = g.casimir_terms();
    for c in 0..g.dim() {
        let d = big.derivative(Var::loop_var(c, mark));
        if d.is_zero() {
            continue;
        }
        // Σ_a x_a[α_i] · [x_c, x^a][α_j]
        let mut split = CommPoly::zero();
        for (a, b, s) in &cas {
            for (k, v) in g.bracket_vec(&g.basis_vec(c), &g.basis_vec(*b)).iter().enumerate() {
                if !v.is_zero() {
                    split.add_assign(&CommPoly::monomial(&[Var::loop_var(*a, ai), Var::loop_var(k, aj)], s * v));
                }
            }
        }
        value.add_assign(&split.mul(&d));
    }
    Ok(WElement { f: f.clone(), alpha: alpha.to_vec(), pair, value })
}

/// A basis of `g` orthogonal for the invariant form, by symmetric
/// elimination (a pair sum is used when every remaining vector is isotropic).
pub fn orthogonal_basis(g: &LieAlgebra) -> Vec<Vec<Q>> {
    let mut rest: Vec<Vec<Q>> = (0..g.dim()).map(|i| g.basis_vec(i)).collect();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let pick = (0..rest.len()).find(|&i| !g.form_vec(&rest[i], &rest[i]).is_zero());
        let v = match pick {
            Some(i) => rest.remove(i),
            None => {
                let (i, j) = (0..rest.len())
                    .flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !g.form_vec(&rest[i], &rest[j]).is_zero())
                    .expect("nondegenerate form");
                let s: Vec<Q> = rest[i].iter().zip(&rest[j]).map(|(a, b)| a + b).collect();
                rest.remove(i);
                s
            }
        };
        let vv = g.form_vec(&v, &v);
        for w in rest.iter_mut() {
            let c = &g.form_vec(w, &v) / &vv;
            for (x, y) in w.iter_mut().zip(&v) {
                *x -= &(&c * y);
            }
        }
        out.push(v);
    }
    out
}

fn lin_at(v: &[Q], d: i16) -> CommPoly {
    let mut p = CommPoly::zero();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            p.add_assign(&CommPoly::monomial(&[Var::loop_var(i, d)], c.clone()));
        }
    }
    p
}

fn multisets(n: usize, r: usize, from: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in from..n {
        for mut rest in multisets(n, r - 1, i) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

/// Reference `W[F, ᾱ, (i,j)]` straight from the coefficient formula
/// `A(V) = (V,V)^{-1} Σ_{l,p} (F, [v_l,v_p] Π_{u≠l,p} v_u)` over the monomial
/// basis of `S^ᾱ` built on an orthogonal basis of `g`. Only sensible for
/// small algebras and degrees.
pub fn w_element_literal(g: &LieAlgebra, f: &CommPoly, alpha: &[(i16, usize)], pair: (usize, usize)) -> Result<CommPoly, WError> {
    check_alpha(alpha)?;
    let m = f.degree().unwrap_or(0);
    if alpha.iter().map(|x| x.1).sum::<usize>() != m + 1 {
        return Err(WError::Size(m + 1));
    }
    let (i, j) = pair;
    if i == j || i >= alpha.len() || j >= alpha.len() {
        return Err(WError::Pair);
    }
    let ob = orthogonal_basis(g);
    let per_group: Vec<Vec<Vec<usize>>> = alpha.iter().map(|&(_, r)| multisets(ob.len(), r, 0)).collect();
    let mut choice: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for opts in &per_group {
        let mut next = Vec::new();
        for c in &choice {
            for o in opts {
                let mut c2 = c.clone();
                c2.push(o.clone());
                next.push(c2);
            }
        }
        choice = next;
    }
    let mut out = CommPoly::zero();
    for sel in choice {
        let mut v = CommPoly::one();
        for (q, letters) in sel.iter().enumerate() {
            for &k in letters {
                v = v.mul(&lin_at(&ob[k], alpha[q].0));
            }
        }
        // D(V): bracket one factor from group i with one from group j
        let mut dv = CommPoly::zero();
        for (l_pos, &l) in sel[i].iter().enumerate() {
            for (p_pos, &p) in sel[j].iter().enumerate() {
                let mut prod = CommPoly::linear(&g.bracket_vec(&ob[l], &ob[p]));
                for (q, letters) in sel.iter().enumerate() {
                    for (pos, &k) in letters.iter().enumerate() {
                        if (q == i && pos == l_pos) || (q == j && pos == p_pos) {
                            continue;
                        }
                        prod = prod.mul(&CommPoly::linear(&ob[k]));
                    }
                }
                dv.add_assign(&prod);
            }
        }
        let num = f.graded_scalar_product(&dv, g);
        if num.is_zero() {
            continue;
        }
        let vv = v.graded_scalar_product(&v, g);
        out.add_scaled(&v, &(&num / &vv));
    }
    Ok(out)
}

/// `Σ_{j≠i} W[F, ᾱ, (i,j)] = 0` for every group `i`.
pub fn universal_check(g: &LieAlgebra, f: &CommPoly, alpha: &[(i16, usize)]) -> Result<bool, WError> {
    for i in 0..alpha.len() {
        let mut s = CommPoly::zero();
        for j in (0..alpha.len()).filter(|&j| j != i) {
            s.add_assign(&w_element(g, f, alpha, (i, j))?.value);
        }
        if !s.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Poisson half-bracket `P_Ŷ(b1,b2) = Σ_a x^a[b1]·{x_a[b2], Ŷ}`.
pub fn half_bracket(g: &LieAlgebra, yhat: &CommPoly, b1: i16, b2: i16) -> CommPoly {
    let mut out = CommPoly::zero();
    for (a, b, s) in g.casimir_terms() {
        let pb = CommPoly::var(Var::loop_var(a, b2)).poisson(yhat, g);
        if !pb.is_zero() {
            out.add_scaled(&CommPoly::var(Var::loop_var(b, b1)).mul(&pb), &s);
        }
    }
    out
}

/// `|S_m ā|·P_{Y[ā]}(b1,b2)` next to the matching sum of `W`-elements:
/// `ᾱ` runs over the multisets obtained from `ā` by shifting one value
/// `a_l ↦ a_l + b2` (with `a_l + b2 ≠ b1`) and adding `b1`; the pair is
/// (group of `a_l + b2`, group of `b1`).
pub fn half_bracket_decomposition(g: &LieAlgebra, y: &CommPoly, abar: &[i16], b1: i16, b2: i16) -> (CommPoly, CommPoly) {
    let lhs = half_bracket(g, &y.polarize(abar), b1, b2).scale(&orbit_size(abar));
    let mut values: Vec<i16> = abar.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut rhs = CommPoly::zero();
    for &v in &values {
        if v + b2 == b1 {
            continue;
        }
        let mut entries: Vec<i16> = abar.to_vec();
        let pos = entries.iter().position(|&x| x == v).unwrap();
        entries[pos] = v + b2;
        entries.push(b1);
        let alpha: Vec<(i16, usize)> = {
            let mut e = entries.clone();
            e.sort_unstable();
            let mono: Mono = e.iter().map(|&d| Var::loop_var(0, d)).collect();
            mono_powers(&mono).into_iter().map(|(x, r)| (x.tdeg(), r)).collect()
        };
        let gi = alpha.iter().position(|x| x.0 == v + b2).unwrap();
        let gj = alpha.iter().position(|x| x.0 == b1).unwrap();
        rhs.add_assign(&w_element(g, y, &alpha, (gi, gj)).expect("well-formed multiset").value);
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_vectors_are_central() {
        for (n, k) in [(2, 2), (3, 2), (3, 3)] {
            let s = ss_type_a(n, k).unwrap();
            assert!(verify_central(&s).is_zero(), "A n={} k={}", n, k);
            assert!(s.is_omega_eigenvector());
        }
        let s = ss_type_c(4, 2).unwrap();
        assert_eq!(s.terms[1].coeff, Q::int(3));
        assert!(verify_central(&s).is_zero());
        assert!(ss_type_a(1, 2).is_err());
    }

    #[test]
    fn omitted_corrections_break_centrality() {
        let s = ss_type_c(4, 2).unwrap();
        let plain = ss_plain(&s.g, &s.top, "DeltaSp4");
        assert!(!verify_central(&plain).is_zero());
    }

    #[test]
    fn orthogonal_coefficients() {
        assert_eq!(so_coefficient(7, 2, 1), Q::int(36));
        assert_eq!(so_coefficient(8, 2, 1), Q::int(45));
    }

    #[test]
    fn w_matches_literal_formula() {
        let (g, f) = invariants::delta_sl(2, 2).unwrap();
        for alpha in [vec![(-1, 2), (-2, 1)], vec![(-1, 1), (-2, 1), (-3, 1)]] {
            for pair in [(0, 1), (1, 0)] {
                let w = w_element(&g, &f, &alpha, pair).unwrap();
                let lit = w_element_literal(&g, &f, &alpha, pair).unwrap();
                assert_eq!(w.value, lit);
            }
        }
        let x = CommPoly::var(Var::finite(0)).mul(&CommPoly::var(Var::finite(2))).add(&CommPoly::var(Var::finite(1)).pow(2));
        let alpha = vec![(-1, 1), (-2, 2)];
        assert_eq!(w_element(&g, &x, &alpha, (0, 1)).unwrap().value, w_element_literal(&g, &x, &alpha, (0, 1)).unwrap());
        assert!(!w_element(&g, &x, &alpha, (0, 1)).unwrap().value.is_zero());
    }

    #[test]
    fn half_bracket_decomposes() {
        let (g, f) = invariants::delta_sl(2, 2).unwrap();
        let (l, r) = half_bracket_decomposition(&g, &f, &[-1, -2], -1, -1);
        assert_eq!(l, r);
        let y = CommPoly::var(Var::finite(0)).mul(&CommPoly::var(Var::finite(2))).add(&CommPoly::var(Var::finite(1)).pow(2));
        let (l, r) = half_bracket_decomposition(&g, &y, &[-1, -2], -1, -3);
        assert!(!l.is_zero());
        assert_eq!(l, r);
        let (g, f) = invariants::delta_sl(3, 3).unwrap();
        let (l, r) = half_bracket_decomposition(&g, &f, &[-1, -2, -2], -3, -1);
        assert_eq!(l, r);
    }

    #[test]
    fn intro_form_of_type_a() {
        for (n, k) in [(3, 3), (4, 3), (4, 4)] {
            assert_eq!(ss_type_a_intro(n, k).unwrap().value, ss_type_a(n, k).unwrap().value);
        }
        assert!(invariants::delta_sl(4, 1).unwrap().1.is_zero());
    }

    #[test]
    fn generic_chain_matches_closed_forms() {
        let (g, h) = invariants::delta_sl(4, 4).unwrap();
        assert_eq!(ss_generic(&g, &h, "D4").unwrap().value, ss_type_a(4, 4).unwrap().value);
        let (g, h) = invariants::delta_sp(4, 2).unwrap();
        assert_eq!(ss_generic(&g, &h, "D4").unwrap().value, ss_type_c(4, 2).unwrap().value);
        let (g, h) = invariants::phi_so(5, 2).unwrap();
        assert_eq!(ss_generic(&g, &h, "P4").unwrap().value, ss_type_bd(5, 2).unwrap().value);
        let (g, _, _) = invariants::g2_invariants().unwrap();
        let h = invariants::g2_htilde(&g).unwrap();
        assert_eq!(ss_generic(&g, &h, "H6").unwrap().value, ss_g2().unwrap().value);
    }

    #[test]
    fn universal_relations() {
        let (g, f) = invariants::delta_sl(2, 2).unwrap();
        assert!(universal_check(&g, &f, &[(-1, 2), (-2, 1)]).unwrap());
        let alpha = [(-1, 1), (-2, 1), (-3, 1)];
        assert!(universal_check(&g, &f, &alpha).unwrap());
        let w = |i, j| w_element(&g, &f, &alpha, (i, j)).unwrap().value;
        assert!(!w(0, 1).is_zero());
        assert_eq!(w(0, 1), w(0, 2).scale(&Q::int(-1)));
        assert_eq!(w(0, 1), w(1, 2));
        let (g, f) = invariants::delta_sl(3, 3).unwrap();
        assert!(universal_check(&g, &f, &[(-1, 2), (-2, 1), (-3, 1)]).unwrap());
        assert_eq!(w_element(&g, &f, &[(-1, 3), (-2, 1)], (0, 0)).unwrap_err(), WError::Pair);
        assert_eq!(w_element(&g, &f, &[(-1, 2), (-2, 1)], (0, 1)).unwrap_err(), WError::Size(4));
    }

    #[test]
    fn msym_symbol_is_proportional() {
        let (g, d2) = invariants::delta_sl(2, 2).unwrap();
        assert_eq!(msym_shape(&g, &d2.pow(2)), Some(Q::int(4)));
    }

    #[test]
    fn c_constants_small() {
        for m in 3..=5 {
            let p = c_constants_probe(m).unwrap();
            assert!(p.y_independent, "m={m}");
            assert_eq!(p.orientation, -1, "m={m}");
            assert!(p.constants.symmetric() && p.constants.signs_ok());
        }
        assert_eq!(CConstants::transport(3).c23(1, 2), Q::new(-1, 24));
    }
}
