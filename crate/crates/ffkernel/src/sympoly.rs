//! Sparse commutative polynomials over `Q` in loop variables `x_i[d]`.
//!
//! With all t-degrees zero this is `S(g)`; with several components it is
//! `S(g ⊕ … ⊕ g)`. A monomial is a sorted multiset of variables.

use crate::liealg::LieAlgebra;
use crate::rational::Q;
use crate::var::Var;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};
use smallvec::SmallVec;
use std::fmt;

pub type Mono = SmallVec<[Var; 8]>;

#[derive(Clone, Default, PartialEq, Eq)]
pub struct CommPoly {
    terms: FxHashMap<Mono, Q>,
}

fn mono_mul(a: &[Var], b: &[Var]) -> Mono {
    let mut out = Mono::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Distinct variables of a sorted monomial with their multiplicities.
pub fn mono_powers(m: &[Var]) -> Vec<(Var, usize)> {
    let mut out: Vec<(Var, usize)> = Vec::new();
    for &v in m {
        match out.last_mut() {
            Some((w, e)) if *w == v => *e += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

impl CommPoly {
    pub fn zero() -> CommPoly {
        CommPoly::default()
    }

    pub fn constant(c: Q) -> CommPoly {
        let mut p = CommPoly::zero();
        p.add_term(Mono::new(), c);
        p
    }

    pub fn one() -> CommPoly {
        CommPoly::constant(Q::one())
    }

    pub fn var(v: Var) -> CommPoly {
        CommPoly::monomial(&[v], Q::one())
    }

    /// `c · Π vars` (the slice need not be sorted).
    pub fn monomial(vars: &[Var], c: Q) -> CommPoly {
        let mut m: Mono = vars.iter().copied().collect();
        m.sort_unstable();
        let mut p = CommPoly::zero();
        p.add_term(m, c);
        p
    }

    /// A linear form `Σ c_i x_i` in the degree-zero variables.
    pub fn linear(coords: &[Q]) -> CommPoly {
        let mut p = CommPoly::zero();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(smallvec::smallvec![Var::finite(i)], c.clone());
            }
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    /// Terms in canonical (sorted monomial) order.
    pub fn sorted_terms(&self) -> Vec<(&Mono, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn coeff(&self, m: &[Var]) -> Q {
        let mut k: Mono = m.iter().copied().collect();
        k.sort_unstable();
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.len());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> CommPoly {
        CommPoly {
            terms: self.terms.iter().filter(|(m, _)| m.len() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, o: &CommPoly) -> CommPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &CommPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &CommPoly, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn sub(&self, o: &CommPoly) -> CommPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Q::int(-1));
        r
    }

    pub fn scale(&self, s: &Q) -> CommPoly {
        if s.is_zero() {
            return CommPoly::zero();
        }
        CommPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn neg(&self) -> CommPoly {
        self.scale(&Q::int(-1))
    }

    pub fn mul(&self, o: &CommPoly) -> CommPoly {
        let mut r = CommPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> CommPoly {
        let mut acc = CommPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to the coordinate `v`.
    pub fn derivative(&self, v: Var) -> CommPoly {
        let mut r = CommPoly::zero();
        for (m, c) in &self.terms {
            let e = m.iter().filter(|&&w| w == v).count();
            if e == 0 {
                continue;
            }
            let pos = m.iter().position(|&w| w == v).unwrap();
            let mut k = m.clone();
            k.remove(pos);
            r.add_term(k, c * &Q::int(e as i64));
        }
        r
    }

    /// `Σ_v c_v ∂/∂v`.
    pub fn derivative_along(&self, dir: &[(Var, Q)]) -> CommPoly {
        let mut r = CommPoly::zero();
        for (v, c) in dir {
            r.add_scaled(&self.derivative(*v), c);
        }
        r
    }

    /// `∂_μ` for `μ ∈ g* ≅ g` given by coordinates: `∂_μ x = (x, μ)`.
    pub fn directional_derivative(&self, mu: &[Q], g: &LieAlgebra) -> CommPoly {
        let dir: Vec<(Var, Q)> = self
            .variables()
            .into_iter()
            .map(|v| (v, g.form_vec(&g.basis_vec(v.index()), mu)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        self.derivative_along(&dir)
    }

    /// `∂_μ^m`.
    pub fn directional_power(&self, mu: &[Q], g: &LieAlgebra, m: usize) -> CommPoly {
        (0..m).fold(self.clone(), |p, _| p.directional_derivative(mu, g))
    }

    /// Variables occurring in the polynomial, sorted.
    pub fn variables(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Replace every variable by a polynomial; `f` is called once per variable.
    pub fn substitute(&self, f: impl Fn(Var) -> CommPoly) -> CommPoly {
        let mut cache: FxHashMap<Var, Vec<CommPoly>> = FxHashMap::default();
        let mut r = CommPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = CommPoly::constant(c.clone());
            for (v, e) in mono_powers(m) {
                let powers = cache.entry(v).or_insert_with(|| vec![CommPoly::one(), f(v)]);
                while powers.len() <= e {
                    let next = powers.last().unwrap().mul(&powers[1]);
                    powers.push(next);
                }
                acc = acc.mul(&powers[e]);
            }
            r.add_assign(&acc);
        }
        r
    }

    /// Rename variables by a map of variables.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> CommPoly {
        let mut r = CommPoly::zero();
        for (m, c) in &self.terms {
            let mut k: Mono = m.iter().map(|&v| f(v)).collect();
            k.sort_unstable();
            r.add_term(k, c.clone());
        }
        r
    }

    /// `F ↦ F[d]`: every variable gets t-degree `d`.
    pub fn at_tdeg(&self, d: i16) -> CommPoly {
        self.map_vars(|v| v.with_tdeg(d))
    }

    pub fn eval(&self, f: impl Fn(Var) -> Q) -> Q {
        let mut s = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m {
                t = &t * &f(*v);
                if t.is_zero() {
                    break;
                }
            }
            s += &t;
        }
        s
    }

    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> CommPoly {
        CommPoly {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Poisson bracket `{x[a], y[b]} = [x, y][a+b]`, extended by Leibniz.
    /// Variables on different components commute.
    pub fn poisson(&self, o: &CommPoly, g: &LieAlgebra) -> CommPoly {
        let mut r = CommPoly::zero();
        let va = self.variables();
        let vb = o.variables();
        for &u in &va {
            let du = self.derivative(u);
            for &v in &vb {
                if u.component() != v.component() {
                    continue;
                }
                let br = g.bracket(u.index(), v.index());
                if br.is_empty() {
                    continue;
                }
                let mut lin = CommPoly::zero();
                for (k, c) in br {
                    lin.add_term(
                        smallvec::smallvec![Var::new(u.component(), *k as u16, u.tdeg() + v.tdeg())],
                        c.clone(),
                    );
                }
                r.add_assign(&du.mul(&o.derivative(v)).mul(&lin));
            }
        }
        r
    }

    /// `{x, F}` for a finite element `x = Σ c_i x_i`, as a derivation.
    pub fn adjoint_action(&self, x: &[Q], g: &LieAlgebra) -> CommPoly {
        CommPoly::linear(x).poisson(self, g)
    }

    /// Polarization `F[ā] = (1/m!) Σ_σ Π y_σ(i)[a_i]` of a homogeneous `F` of
    /// degree `m = ā.len()` in degree-zero variables.
    pub fn polarize(&self, a: &[i16]) -> CommPoly {
        let m = a.len();
        let mut r = CommPoly::zero();
        let mf = Q::factorial(m as u64);
        for (mono, c) in &self.terms {
            assert_eq!(mono.len(), m, "polarize needs a homogeneous polynomial of degree {}", m);
            let powers = mono_powers(mono);
            // weight of each distinct assignment: Π e_v! / m!
            let mut w = Q::one();
            for (_, e) in &powers {
                w = &w * &Q::factorial(*e as u64);
            }
            let w = &(&w / &mf) * c;
            let mut counts: Vec<usize> = powers.iter().map(|p| p.1).collect();
            let mut cur: Vec<Var> = Vec::with_capacity(m);
            fn rec(
                pos: usize,
                a: &[i16],
                powers: &[(Var, usize)],
                counts: &mut [usize],
                cur: &mut Vec<Var>,
                w: &Q,
                out: &mut CommPoly,
            ) {
                if pos == a.len() {
                    let mut k: Mono = cur.iter().copied().collect();
                    k.sort_unstable();
                    out.add_term(k, w.clone());
                    return;
                }
                for i in 0..powers.len() {
                    if counts[i] == 0 {
                        continue;
                    }
                    counts[i] -= 1;
                    cur.push(powers[i].0.with_tdeg(a[pos]));
                    rec(pos + 1, a, powers, counts, cur, w, out);
                    cur.pop();
                    counts[i] += 1;
                }
            }
            rec(0, a, &powers, &mut counts, &mut cur, &w, &mut r);
        }
        r
    }

    /// Graded scalar product: monomials pair through `B` factor by factor,
    /// only between equal t-degrees and components, summed over matchings.
    pub fn graded_scalar_product(&self, o: &CommPoly, g: &LieAlgebra) -> Q {
        let mut s = Q::zero();
        let mut bykey: FxHashMap<Vec<(i16, u8)>, Vec<(&Mono, &Q)>> = FxHashMap::default();
        for (m, c) in &o.terms {
            let k: Vec<(i16, u8)> = m.iter().map(|v| (v.tdeg(), v.component())).collect();
            bykey.entry(k).or_default().push((m, c));
        }
        for (m1, c1) in &self.terms {
            let k: Vec<(i16, u8)> = m1.iter().map(|v| (v.tdeg(), v.component())).collect();
            let Some(list) = bykey.get(&k) else { continue };
            for (m2, c2) in list {
                let p = permanent_pairing(m1, m2, g);
                if !p.is_zero() {
                    s += &(&p * c1) * *c2;
                }
            }
        }
        s
    }

    /// Serialize as `{"terms":[{"c":"p/q","m":[[label, tdeg], …]}, …]}`.
    /// Variables on a nonzero component carry it as a third entry.
    pub fn to_json(&self, g: &LieAlgebra) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let vars: Vec<Value> = m.iter().map(|v| var_json(*v, g)).collect();
                json!({"c": c.to_string(), "m": vars})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value, g: &LieAlgebra) -> Result<CommPoly, String> {
        let mut p = CommPoly::zero();
        let terms = v.get("terms").and_then(|t| t.as_array()).ok_or("missing \"terms\" array")?;
        for t in terms {
            let c: Q = t
                .get("c")
                .and_then(|c| c.as_str())
                .ok_or("missing coefficient")?
                .parse()
                .map_err(|e| format!("{}", e))?;
            let ms = t.get("m").and_then(|m| m.as_array()).ok_or("missing monomial")?;
            let mut mono = Mono::new();
            for x in ms {
                mono.push(var_from_json(x, g)?);
            }
            mono.sort_unstable();
            p.add_term(mono, c);
        }
        Ok(p)
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("({})", c));
            for v in m.iter() {
                s.push('*');
                s.push_str(&var_name(*v, g));
            }
        }
        s
    }
}

pub(crate) fn var_name(v: Var, g: &LieAlgebra) -> String {
    if v.is_tau() {
        return "tau".into();
    }
    let mut s = g.label(v.index()).to_string();
    if v.tdeg() != 0 {
        s.push_str(&format!("<{}>", v.tdeg()));
    }
    if v.component() != 0 {
        s.push_str(&format!("^({})", v.component()));
    }
    s
}

pub(crate) fn var_json(v: Var, g: &LieAlgebra) -> Value {
    if v.is_tau() {
        return json!(["tau", 0]);
    }
    let l = g.label(v.index()).to_string();
    if v.component() == 0 {
        json!([l, v.tdeg()])
    } else {
        json!([l, v.tdeg(), v.component()])
    }
}

pub(crate) fn var_from_json(x: &Value, g: &LieAlgebra) -> Result<Var, String> {
    let a = x.as_array().ok_or("variable must be an array")?;
    let label = a.first().and_then(|l| l.as_str()).ok_or("variable label")?;
    let tdeg = a.get(1).and_then(|d| d.as_i64()).ok_or("variable t-degree")?;
    if label == "tau" {
        return Ok(Var::TAU);
    }
    if tdeg > 0 || tdeg < i16::MIN as i64 {
        return Err(format!("t-degree {} out of range", tdeg));
    }
    let comp = a.get(2).and_then(|c| c.as_u64()).unwrap_or(0);
    let idx = g.parse_label(label).map_err(|e| e.to_string())?;
    Ok(Var::new(comp as u8, idx as u16, tdeg as i16))
}

/// Permanent of the matrix `B(m1_i, m2_j)` restricted to equal (tdeg, component).
fn permanent_pairing(m1: &[Var], m2: &[Var], g: &LieAlgebra) -> Q {
    let n = m1.len();
    if n == 0 {
        return Q::one();
    }
    let entry = |i: usize, j: usize| -> Q {
        let (a, b) = (m1[i], m2[j]);
        if a.tdeg() != b.tdeg() || a.component() != b.component() {
            Q::zero()
        } else {
            g.form(a.index(), b.index()).clone()
        }
    };
    // Ryser-free DP over subsets of columns: fine for n ≤ 12
    let mut dp: FxHashMap<u32, Q> = FxHashMap::default();
    dp.insert(0, Q::one());
    for i in 0..n {
        let mut next: FxHashMap<u32, Q> = FxHashMap::default();
        for (mask, val) in &dp {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let e = entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let slot = next.entry(mask | (1 << j)).or_default();
                *slot += &(val * &e);
            }
        }
        dp = next;
    }
    dp.get(&((1u32 << n) - 1)).cloned().unwrap_or_default()
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.sorted_terms();
        write!(f, "CommPoly[")?;
        for (i, (m, c)) in t.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}·{:?}", c, m.as_slice())?;
        }
        write!(f, "]")
    }
}

/// Splitting of `S(g)` into `S(g ⊕ g)` components.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BiMode {
    /// `H(ξ⁽¹⁾ + c·η⁽²⁾)`: entry `j` is `H_{d-j,j}`.
    Evaluation,
    /// Along diagonal and antidiagonal, `x ↦ (x⁽¹⁾ - x⁽²⁾) + c·(x⁽¹⁾ + x⁽²⁾)`:
    /// entry `j` is `H_{[j,d-j]}` with `j` the diagonal degree.
    Symmetric,
}

/// The `d+1` bi-degree components of a homogeneous `H ∈ S^d(g)` in the
/// variables of sites 1 and 2; `None` if `H` is not homogeneous.
pub fn bi_degree_components(h: &CommPoly, mode: BiMode) -> Option<Vec<CommPoly>> {
    if !h.is_homogeneous() {
        return None;
    }
    let d = h.degree().unwrap_or(0);
    let parts = |v: Var| -> (CommPoly, CommPoly) {
        let (a, b) = (CommPoly::var(Var::site(1, v.index())), CommPoly::var(Var::site(2, v.index())));
        match mode {
            BiMode::Evaluation => (a, b),
            BiMode::Symmetric => (a.sub(&b), a.add(&b)),
        }
    };
    let mut out = vec![CommPoly::zero(); d + 1];
    for (m, c) in h.iter() {
        // Π (p_v + c·q_v) as a polynomial in c
        let mut acc = vec![CommPoly::constant(c.clone())];
        for &v in m.iter() {
            let (p, q) = parts(v);
            let mut next = vec![CommPoly::zero(); acc.len() + 1];
            for (j, a) in acc.iter().enumerate() {
                next[j].add_assign(&a.mul(&p));
                next[j + 1].add_assign(&a.mul(&q));
            }
            acc = next;
        }
        for (j, a) in acc.into_iter().enumerate() {
            out[j].add_assign(&a);
        }
    }
    Some(out)
}

/// `ā` ↦ number of distinct permutations `|S_m ā|`.
pub fn orbit_size(a: &[i16]) -> Q {
    let mut s: Vec<i16> = a.to_vec();
    s.sort_unstable();
    let mut r = Q::factorial(a.len() as u64);
    let mut i = 0;
    while i < s.len() {
        let mut j = i;
        while j < s.len() && s[j] == s[i] {
            j += 1;
        }
        r = &r / &Q::factorial((j - i) as u64);
        i = j;
    }
    r
}

/// Jacobian-rank test for algebraic independence at a rational point with
/// small fixed coordinates; retries three alternates before giving up.
pub fn independence_check(polys: &[CommPoly]) -> bool {
    let mut vars: Vec<Var> = polys.iter().flat_map(|p| p.variables()).collect();
    vars.sort_unstable();
    vars.dedup();
    for attempt in 0..4i64 {
        let point = |v: Var| -> Q {
            let h = (v.raw() as i64).wrapping_mul(2654435761 + 97 * attempt) % 17;
            Q::int(h - 8 + attempt)
        };
        let jac: Vec<Vec<Q>> = polys
            .iter()
            .map(|p| vars.iter().map(|&v| p.derivative(v).eval(point)).collect())
            .collect();
        if crate::linalg::rank(&jac) == polys.len() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_gl, build_sl};

    fn x(i: usize) -> CommPoly {
        CommPoly::var(Var::finite(i))
    }

    #[test]
    fn poisson_of_matrix_units() {
        let g = build_gl(2).unwrap();
        // {E12, E21} = E11 - E22
        let e = |i, j| g.parse_label(&format!("E[{},{}]", i, j)).unwrap();
        let b = x(e(1, 2)).poisson(&x(e(2, 1)), &g);
        assert_eq!(b, x(e(1, 1)).sub(&x(e(2, 2))));
        // Leibniz in the second slot
        let f = x(e(2, 1)).mul(&x(e(1, 1)));
        let lhs = x(e(1, 2)).poisson(&f, &g);
        let rhs = x(e(1, 2))
            .poisson(&x(e(2, 1)), &g)
            .mul(&x(e(1, 1)))
            .add(&x(e(2, 1)).mul(&x(e(1, 2)).poisson(&x(e(1, 1)), &g)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn polarize_and_scalar_product() {
        let g = build_gl(3).unwrap();
        let e11 = g.parse_label("E[1,1]").unwrap();
        let e22 = g.parse_label("E[2,2]").unwrap();
        let f = x(e11).pow(2).mul(&x(e22).pow(3));
        let fa = f.at_tdeg(-1);
        assert_eq!(fa.graded_scalar_product(&fa, &g), Q::int(12));
        // polarization of a pure power is the product of shifts
        let p = x(e11).pow(2).polarize(&[-1, -2]);
        assert_eq!(p, CommPoly::monomial(&[Var::loop_var(e11, -1), Var::loop_var(e11, -2)], Q::one()));
        let q = x(e11).mul(&x(e22)).polarize(&[-1, -2]);
        assert_eq!(q.len(), 2);
        assert_eq!(q.coeff(&[Var::loop_var(e11, -1), Var::loop_var(e22, -2)]), Q::new(1, 2));
        assert_eq!(orbit_size(&[-1, -1, -2]), Q::int(3));
    }

    #[test]
    fn json_roundtrip() {
        let g = build_sl(3).unwrap();
        let p = x(0).mul(&x(3)).scale(&Q::new(-3, 7)).add(&CommPoly::var(Var::new(2, 1, -2)));
        let j = p.to_json(&g);
        let back = CommPoly::from_json(&j, &g).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(&g).to_string(), j.to_string());
    }

    #[test]
    fn substitution_and_derivative() {
        let p = x(0).pow(3).add(&x(1));
        let s = p.substitute(|v| if v.index() == 0 { x(2).add(&CommPoly::one()) } else { x(1) });
        assert_eq!(s.derivative(Var::finite(2)), x(2).add(&CommPoly::one()).pow(2).scale(&Q::int(3)));
        assert!(independence_check(&[x(0), x(1).mul(&x(0))]));
        assert!(!independence_check(&[x(0), x(0).pow(2)]));
    }

    fn span_rank(polys: &[CommPoly]) -> usize {
        let mut keys: Vec<Mono> = polys.iter().flat_map(|p| p.iter().map(|(m, _)| m.clone())).collect();
        keys.sort_unstable();
        keys.dedup();
        let rows: Vec<Vec<Q>> = polys.iter().map(|p| keys.iter().map(|k| p.coeff(k)).collect()).collect();
        crate::linalg::rank(&rows)
    }

    #[test]
    fn directional_derivatives() {
        let g = build_gl(2).unwrap();
        let mu: Vec<Q> = [3, -1, 5, 7].iter().map(|&c| Q::int(c)).collect();
        let (_, d1) = crate::invariants::delta_gl(2, 1).unwrap();
        assert_eq!(d1.directional_derivative(&mu, &g), CommPoly::constant(Q::int(10)));
        for g in [build_sl(2).unwrap(), build_sl(3).unwrap()] {
            let mu: Vec<Q> = (0..g.dim()).map(|i| Q::int(i as i64 * 2 - 3)).collect();
            let h = crate::invariants::casimir(&g);
            assert_eq!(h.directional_derivative(&mu, &g), CommPoly::linear(&mu).scale(&Q::int(2)));
        }
        let (g, d3) = crate::invariants::delta_sl(3, 3).unwrap();
        let mu: Vec<Q> = (0..8).map(|i| Q::new(i as i64 - 2, 3)).collect();
        let dual: Vec<Q> = (0..8).map(|a| g.form_vec(&g.basis_vec(a), &mu)).collect();
        let second = d3.directional_power(&mu, &g, 2);
        for seed in 0..3i64 {
            let pt = |v: Var| Q::int((v.index() as i64 * 7 + seed * 5) % 11 - 5);
            let f = |t: i64| d3.eval(|v| &pt(v) + &(&dual[v.index()] * &Q::int(t)));
            let fd = &(&f(1) - &(&f(0) * &Q::int(2))) + &f(-1);
            assert_eq!(second.eval(pt), fd);
        }
        assert_eq!(d3.directional_power(&mu, &g, 3), CommPoly::constant(&d3.eval(|v| dual[v.index()].clone()) * &Q::int(6)));
    }

    #[test]
    fn bi_degree_splitting() {
        let s = |k, i| CommPoly::var(Var::site(k, i));
        let parts = bi_degree_components(&x(4).pow(2), BiMode::Evaluation).unwrap();
        assert_eq!(parts, vec![s(1, 4).pow(2), s(1, 4).mul(&s(2, 4)).scale(&Q::int(2)), s(2, 4).pow(2)]);
        let (_, d2) = crate::invariants::delta_sl(2, 2).unwrap();
        let ev = bi_degree_components(&d2, BiMode::Evaluation).unwrap();
        let total = ev.iter().fold(CommPoly::zero(), |a, p| a.add(p));
        let diag = total.map_vars(|v| Var::finite(v.index()));
        assert_eq!(diag, d2.scale(&Q::int(4)));
        let sym = bi_degree_components(&d2, BiMode::Symmetric).unwrap();
        let both: Vec<CommPoly> = ev.iter().chain(&sym).cloned().collect();
        assert_eq!(span_rank(&ev), 3);
        assert_eq!(span_rank(&sym), 3);
        assert_eq!(span_rank(&both), 3);
        assert!(bi_degree_components(&x(0).add(&x(1).pow(2)), BiMode::Evaluation).is_none());
    }
}
