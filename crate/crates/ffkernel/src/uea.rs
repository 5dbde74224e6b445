//! Universal enveloping algebras in PBW normal form.
//!
//! Elements of `U(t⁻¹g[t⁻¹])`, of `U(g)` and of `U(g^{⊕n})` are linear
//! combinations of non-decreasing words in [`Var`] order. The extra
//! generator `τ` (the largest letter) satisfies `[τ, x[a]] = -a·x[a-1]` and is
//! only used transiently: [`Uea::sym_tau_apply`] evaluates on the vacuum.

use crate::liealg::LieAlgebra;
use crate::rational::Q;
use crate::sympoly::{mono_powers, var_from_json, var_json, CommPoly, Mono};
use crate::var::Var;
use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};
use serde_json::{json, Value};
use smallvec::{smallvec, SmallVec};
use std::fmt;
use std::sync::Arc;

pub type Word = SmallVec<[Var; 8]>;
type Terms = Arc<Vec<(Word, Q)>>;
type Bracket = SmallVec<[(Var, Q); 4]>;

/// A PBW-normal-ordered element.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: FxHashMap<Word, Q>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    pub fn constant(c: Q) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(Word::new(), c);
        p
    }

    pub fn one() -> NCPoly {
        NCPoly::constant(Q::one())
    }

    /// Single PBW word; panics unless `w` is non-decreasing.
    pub fn word(w: &[Var], c: Q) -> NCPoly {
        assert!(w.windows(2).all(|p| p[0] <= p[1]), "word is not in PBW order");
        let mut p = NCPoly::zero();
        p.add_term(w.iter().copied().collect(), c);
        p
    }

    pub fn var(v: Var) -> NCPoly {
        NCPoly::word(&[v], Q::one())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
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

    fn add_terms_scaled(&mut self, t: &[(Word, Q)], s: &Q) {
        for (w, c) in t {
            self.add_term(w.clone(), c * s);
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

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Var]) -> Q {
        let k: Word = w.iter().copied().collect();
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn sorted_terms(&self) -> Vec<(&Word, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &NCPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Q::int(-1));
        r
    }

    pub fn scale(&self, s: &Q) -> NCPoly {
        if s.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect() }
    }

    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Highest PBW-degree component, read as a commutative polynomial.
    pub fn gr(&self) -> CommPoly {
        let Some(d) = self.degree() else { return CommPoly::zero() };
        let mut p = CommPoly::zero();
        for (w, c) in &self.terms {
            if w.len() == d {
                p.add_term(w.iter().copied().collect::<Mono>(), c.clone());
            }
        }
        p
    }

    /// Component of PBW degree `d`, as a commutative polynomial.
    pub fn degree_part(&self, d: usize) -> CommPoly {
        let mut p = CommPoly::zero();
        for (w, c) in &self.terms {
            if w.len() == d {
                p.add_term(w.iter().copied().collect::<Mono>(), c.clone());
            }
        }
        p
    }

    pub fn contains_tau(&self) -> bool {
        self.terms.keys().any(|w| w.last().is_some_and(|v| v.is_tau()))
    }

    /// `{"terms":[{"c":"p/q","w":[[label, tdeg], …]}, …]}` in canonical order.
    pub fn to_json(&self, g: &LieAlgebra) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| json!({"c": c.to_string(), "w": w.iter().map(|v| var_json(*v, g)).collect::<Vec<_>>()}))
            .collect();
        json!({ "terms": terms })
    }

    /// Parse; words must already be in PBW order.
    pub fn from_json(v: &Value, g: &LieAlgebra) -> Result<NCPoly, String> {
        let terms = v.get("terms").and_then(|t| t.as_array()).ok_or("missing \"terms\" array")?;
        let mut p = NCPoly::zero();
        for t in terms {
            let c: Q = t
                .get("c")
                .and_then(|c| c.as_str())
                .ok_or("missing coefficient")?
                .parse()
                .map_err(|e| format!("{}", e))?;
            let ws = t.get("w").and_then(|w| w.as_array()).ok_or("missing word")?;
            let mut w = Word::new();
            for x in ws {
                w.push(var_from_json(x, g)?);
            }
            if !w.windows(2).all(|p| p[0] <= p[1]) {
                return Err("word is not in PBW order".into());
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("({})", c));
            for v in w.iter() {
                s.push('*');
                s.push_str(&crate::sympoly::var_name(*v, g));
            }
        }
        s
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[")?;
        for (i, (w, c)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}·{:?}", c, w.as_slice())?;
        }
        write!(f, "]")
    }
}

/// Straightening engine over one Lie algebra, with memo tables shared
/// between worker threads.
pub struct Uea<'g> {
    pub g: &'g LieAlgebra,
    left: DashMap<(Var, Word), Terms, FxBuildHasher>,
    right: DashMap<(Word, Var), Terms, FxBuildHasher>,
    sym: DashMap<Mono, Arc<NCPoly>, FxBuildHasher>,
    /// Words longer than this are not memoized.
    pub memo_len: usize,
    /// Stop inserting once a table holds this many entries.
    pub memo_cap: usize,
}

impl<'g> Uea<'g> {
    pub fn new(g: &'g LieAlgebra) -> Uea<'g> {
        Uea {
            g,
            left: DashMap::with_hasher(FxBuildHasher),
            right: DashMap::with_hasher(FxBuildHasher),
            sym: DashMap::with_hasher(FxBuildHasher),
            memo_len: 8,
            memo_cap: 2_000_000,
        }
    }

    pub fn clear_memo(&self) {
        self.left.clear();
        self.right.clear();
        self.sym.clear();
    }

    /// `[u, v]` for generators, including `τ`.
    pub fn bracket(&self, u: Var, v: Var) -> Bracket {
        let mut out = Bracket::new();
        match (u.is_tau(), v.is_tau()) {
            (true, true) => {}
            (true, false) => {
                let a = v.tdeg();
                if a != 0 {
                    out.push((v.with_tdeg(a - 1), Q::int(-(a as i64))));
                }
            }
            (false, true) => {
                let a = u.tdeg();
                if a != 0 {
                    out.push((u.with_tdeg(a - 1), Q::int(a as i64)));
                }
            }
            (false, false) => {
                if u.component() != v.component() {
                    return out;
                }
                let t = u.tdeg() + v.tdeg();
                for (k, c) in self.g.bracket(u.index(), v.index()) {
                    out.push((Var::new(u.component(), *k as u16, t), c.clone()));
                }
            }
        }
        out
    }

    /// `g · w` for a PBW word `w`.
    pub fn left_mul(&self, g: Var, w: &[Var]) -> Terms {
        if w.is_empty() || g <= w[0] {
            let mut k = Word::with_capacity(w.len() + 1);
            k.push(g);
            k.extend_from_slice(w);
            return Arc::new(vec![(k, Q::one())]);
        }
        let memo = w.len() <= self.memo_len;
        if memo {
            let key = (g, Word::from_slice(w));
            if let Some(t) = self.left.get(&key) {
                return t.clone();
            }
        }
        let mut res = NCPoly::zero();
        let w0 = w[0];
        let rest = &w[1..];
        let p1 = self.left_mul(g, rest);
        for (m, c) in p1.iter() {
            if m.is_empty() || w0 <= m[0] {
                let mut k = Word::with_capacity(m.len() + 1);
                k.push(w0);
                k.extend_from_slice(m);
                res.add_term(k, c.clone());
            } else {
                res.add_terms_scaled(&self.left_mul(w0, m), c);
            }
        }
        for (z, cz) in self.bracket(g, w0) {
            res.add_terms_scaled(&self.left_mul(z, rest), &cz);
        }
        let out: Terms = Arc::new(res.terms.into_iter().collect());
        if memo && self.left.len() < self.memo_cap {
            self.left.insert((g, Word::from_slice(w)), out.clone());
        }
        out
    }

    /// `w · g` for a PBW word `w`.
    pub fn right_mul(&self, w: &[Var], g: Var) -> Terms {
        let n = w.len();
        if n == 0 || w[n - 1] <= g {
            let mut k = Word::with_capacity(n + 1);
            k.extend_from_slice(w);
            k.push(g);
            return Arc::new(vec![(k, Q::one())]);
        }
        let memo = n <= self.memo_len;
        if memo {
            let key = (Word::from_slice(w), g);
            if let Some(t) = self.right.get(&key) {
                return t.clone();
            }
        }
        let mut res = NCPoly::zero();
        let wl = w[n - 1];
        let rest = &w[..n - 1];
        let p1 = self.right_mul(rest, g);
        for (m, c) in p1.iter() {
            if m.is_empty() || *m.last().unwrap() <= wl {
                let mut k = m.clone();
                k.push(wl);
                res.add_term(k, c.clone());
            } else {
                res.add_terms_scaled(&self.right_mul(m, wl), c);
            }
        }
        for (z, cz) in self.bracket(wl, g) {
            res.add_terms_scaled(&self.right_mul(rest, z), &cz);
        }
        let out: Terms = Arc::new(res.terms.into_iter().collect());
        if memo && self.right.len() < self.memo_cap {
            self.right.insert((Word::from_slice(w), g), out.clone());
        }
        out
    }

    pub fn left_mul_poly(&self, g: Var, p: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &p.terms {
            r.add_terms_scaled(&self.left_mul(g, w), c);
        }
        r
    }

    pub fn right_mul_poly(&self, p: &NCPoly, g: Var) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &p.terms {
            r.add_terms_scaled(&self.right_mul(w, g), c);
        }
        r
    }

    /// `(letters) · p`, where `letters` is an arbitrary word.
    pub fn word_times(&self, letters: &[Var], p: &NCPoly) -> NCPoly {
        let mut acc = p.clone();
        for &l in letters.iter().rev() {
            acc = self.left_mul_poly(l, &acc);
        }
        acc
    }

    /// Normal form of an arbitrary word.
    pub fn normal_order(&self, w: &[Var]) -> NCPoly {
        self.word_times(w, &NCPoly::one())
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &a.terms {
            r.add_scaled(&self.word_times(w, b), c);
        }
        r
    }

    pub fn commutator(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// `[y, w]` by the derivation rule, for one PBW word.
    pub fn ad_var_word(&self, y: Var, w: &[Var], out: &mut NCPoly, scale: &Q) {
        for i in 0..w.len() {
            let br = self.bracket(y, w[i]);
            if br.is_empty() {
                continue;
            }
            let prefix = &w[..i];
            let suffix = &w[i + 1..];
            for (z, cz) in br {
                let tail = self.left_mul(z, suffix);
                let c = &cz * scale;
                for (m, cm) in tail.iter() {
                    let cc = &c * cm;
                    if prefix.is_empty() || m.is_empty() || *prefix.last().unwrap() <= m[0] {
                        let mut k = Word::with_capacity(prefix.len() + m.len());
                        k.extend_from_slice(prefix);
                        k.extend_from_slice(m);
                        out.add_term(k, cc);
                    } else {
                        let t = self.word_times(prefix, &NCPoly::word(m, Q::one()));
                        out.add_scaled(&t, &cc);
                    }
                }
            }
        }
    }

    pub fn ad_var(&self, y: Var, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &p.terms {
            self.ad_var_word(y, w, &mut out, c);
        }
        out
    }

    /// `Σ_a x_a[b1] x^a[b2]` in normal form.
    pub fn casimir_loop(&self, b1: i16, b2: i16) -> NCPoly {
        self.casimir_on(0, b1, b2)
    }

    /// Casimir tensor with both factors on component `comp`.
    pub fn casimir_on(&self, comp: u8, b1: i16, b2: i16) -> NCPoly {
        let mut r = NCPoly::zero();
        for (a, b, c) in self.g.casimir_terms() {
            let w = [Var::new(comp, a as u16, b1), Var::new(comp, b as u16, b2)];
            r.add_scaled(&self.normal_order(&w), &c);
        }
        r
    }

    /// `[Σ_a x_a[b1] x^a[b2], p]`, computed term by term through the
    /// derivation rule and split over the worker pool.
    pub fn commutator_with_casimir(&self, b1: i16, b2: i16, p: &NCPoly) -> NCPoly {
        let cas: Vec<(Var, Var, Q)> = self
            .g
            .casimir_terms()
            .into_iter()
            .map(|(a, b, c)| (Var::loop_var(a, b1), Var::loop_var(b, b2), c))
            .collect();
        let terms: Vec<(&Word, &Q)> = p.terms.iter().collect();
        let chunk = (terms.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
        terms
            .par_chunks(chunk)
            .map(|ch| {
                let mut acc = NCPoly::zero();
                for (w, c) in ch {
                    for (u, v, cc) in &cas {
                        let s = *c * cc;
                        // u · [v, w]
                        let mut inner = NCPoly::zero();
                        self.ad_var_word(*v, w, &mut inner, &s);
                        acc.add_assign(&self.left_mul_poly(*u, &inner));
                        // [u, w] · v
                        let mut inner = NCPoly::zero();
                        self.ad_var_word(*u, w, &mut inner, &s);
                        acc.add_assign(&self.right_mul_poly(&inner, *v));
                    }
                }
                acc
            })
            .reduce(NCPoly::zero, |mut a, b| {
                a.add_assign(&b);
                a
            })
    }

    fn sym_mono(&self, m: &Mono) -> Arc<NCPoly> {
        if m.len() <= 1 {
            let mut p = NCPoly::one();
            if let Some(v) = m.first() {
                p = NCPoly::var(*v);
            }
            return Arc::new(p);
        }
        if let Some(p) = self.sym.get(m) {
            return p.clone();
        }
        let k = m.len() as i64;
        let mut r = NCPoly::zero();
        for (v, e) in mono_powers(m) {
            let pos = m.iter().position(|&w| w == v).unwrap();
            let mut sub = m.clone();
            sub.remove(pos);
            let inner = self.sym_mono(&sub);
            r.add_scaled(&self.left_mul_poly(v, &inner), &Q::new(e as i64, k));
        }
        let r = Arc::new(r);
        if self.sym.len() < self.memo_cap {
            self.sym.insert(m.clone(), r.clone());
        }
        r
    }

    /// Symmetrisation `ϖ`: average of all orderings of each monomial.
    pub fn symmetrize(&self, f: &CommPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (m, c) in f.iter() {
            r.add_scaled(&self.sym_mono(m), c);
        }
        r
    }

    /// `(1/m!) Σ_σ y_σ(1)[a_1] ⋯ y_σ(m)[a_m]` for `F ∈ S^m(g)`, summed over
    /// the monomials of `F` by direct enumeration of arrangements.
    pub fn sym_at(&self, f: &CommPoly, a: &[i16]) -> NCPoly {
        let m = a.len();
        let mf = Q::factorial(m as u64);
        let mut r = NCPoly::zero();
        for (mono, c) in f.iter() {
            assert_eq!(mono.len(), m);
            let powers = mono_powers(mono);
            let mut w = Q::one();
            for (_, e) in &powers {
                w = &w * &Q::factorial(*e as u64);
            }
            let w = &(&w / &mf) * c;
            for arr in multiset_arrangements(&powers) {
                let word: Vec<Var> = arr.iter().zip(a).map(|(v, d)| v.with_tdeg(*d)).collect();
                r.add_scaled(&self.normal_order(&word), &w);
            }
        }
        r
    }

    /// Derivation `τ` applied to a τ-free element of `U(t⁻¹g[t⁻¹])`.
    pub fn tau_derivation(&self, p: &NCPoly) -> NCPoly {
        self.ad_var(Var::TAU, p)
    }

    /// `ϖ(τ^r F[-1])·1` for `F ∈ S^m(g)`, via
    /// `Φ(r,Y) = (r·τΦ(r-1,Y) + Σ_i y_i Φ(r,Y/y_i)) / (m+r)` on the vacuum.
    pub fn sym_tau_apply(&self, f: &CommPoly, r: usize) -> NCPoly {
        let mut memo: FxHashMap<(usize, Mono), Arc<NCPoly>> = FxHashMap::default();
        let mut out = NCPoly::zero();
        for (m, c) in f.iter() {
            let lifted: Mono = m.iter().map(|v| v.with_tdeg(-1)).collect();
            out.add_scaled(&self.phi_tau(r, &lifted, &mut memo), c);
        }
        out
    }

    fn phi_tau(&self, r: usize, y: &Mono, memo: &mut FxHashMap<(usize, Mono), Arc<NCPoly>>) -> Arc<NCPoly> {
        if r == 0 {
            return self.sym_mono(y);
        }
        if y.is_empty() {
            return Arc::new(NCPoly::zero());
        }
        if let Some(p) = memo.get(&(r, y.clone())) {
            return p.clone();
        }
        let total = (y.len() + r) as i64;
        let mut acc = NCPoly::zero();
        let prev = self.phi_tau(r - 1, y, memo);
        acc.add_scaled(&self.tau_derivation(&prev), &Q::new(r as i64, total));
        for (v, e) in mono_powers(y) {
            let pos = y.iter().position(|&w| w == v).unwrap();
            let mut sub = y.clone();
            sub.remove(pos);
            let inner = self.phi_tau(r, &sub, memo);
            acc.add_scaled(&self.left_mul_poly(v, &inner), &Q::new(e as i64, total));
        }
        let acc = Arc::new(acc);
        memo.insert((r, y.clone()), acc.clone());
        acc
    }

    /// Literal definition of `ϖ(τ^r F[-1])·1`: average the normal forms of
    /// all distinct arrangements of `τ^r` and the factors, then drop words
    /// ending in `τ`.
    pub fn sym_tau_apply_direct(&self, f: &CommPoly, r: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m, c) in f.iter() {
            let mut powers: Vec<(Var, usize)> = mono_powers(m).into_iter().map(|(v, e)| (v.with_tdeg(-1), e)).collect();
            if r > 0 {
                powers.push((Var::TAU, r));
            }
            let n = m.len() + r;
            let mut w = Q::one();
            for (_, e) in &powers {
                w = &w * &Q::factorial(*e as u64);
            }
            let w = &(&w / &Q::factorial(n as u64)) * c;
            for arr in multiset_arrangements(&powers) {
                out.add_scaled(&self.normal_order(&arr), &w);
            }
        }
        out.filter(|w| !w.iter().any(|v| v.is_tau()))
    }

    /// Antipode: `x ↦ -x`, anti-multiplicative.
    pub fn antipode(&self, p: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &p.terms {
            let rev: Vec<Var> = w.iter().rev().copied().collect();
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c };
            r.add_scaled(&self.normal_order(&rev), &sign);
        }
        r
    }

    /// Embed a finite element `x = Σ c_i x_i` as a degree-one polynomial on
    /// component `comp` at t-degree `tdeg`.
    pub fn element(&self, x: &[Q], comp: u8, tdeg: i16) -> NCPoly {
        let mut p = NCPoly::zero();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(smallvec![Var::new(comp, i as u16, tdeg)], c.clone());
            }
        }
        p
    }
}

/// All distinct arrangements of a multiset given as `(letter, multiplicity)`.
pub fn multiset_arrangements(powers: &[(Var, usize)]) -> Vec<Vec<Var>> {
    let n: usize = powers.iter().map(|p| p.1).sum();
    let mut counts: Vec<usize> = powers.iter().map(|p| p.1).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(powers: &[(Var, usize)], counts: &mut [usize], cur: &mut Vec<Var>, n: usize, out: &mut Vec<Vec<Var>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..powers.len() {
            if counts[i] == 0 {
                continue;
            }
            counts[i] -= 1;
            cur.push(powers[i].0);
            rec(powers, counts, cur, n, out);
            cur.pop();
            counts[i] += 1;
        }
    }
    rec(powers, &mut counts, &mut cur, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_g2, build_sl};

    fn sl2() -> LieAlgebra {
        build_sl(2).unwrap()
    }

    #[test]
    fn commutator_of_generators() {
        let g = sl2();
        let u = Uea::new(&g);
        let e = g.parse_label("E[1,2]").unwrap();
        let f = g.parse_label("E[2,1]").unwrap();
        let h = g.parse_label("H[1]").unwrap();
        let ef = u.normal_order(&[Var::finite(e), Var::finite(f)]);
        let fe = u.normal_order(&[Var::finite(f), Var::finite(e)]);
        assert_eq!(ef.sub(&fe), NCPoly::var(Var::finite(h)));
        // loop degrees add
        let c = u.commutator(&NCPoly::var(Var::loop_var(e, -1)), &NCPoly::var(Var::loop_var(f, -2)));
        assert_eq!(c, NCPoly::var(Var::loop_var(h, -3)));
    }

    #[test]
    fn associativity_on_words() {
        let g = build_g2().unwrap();
        let u = Uea::new(&g);
        let w1 = [Var::loop_var(9, -1), Var::loop_var(3, -1)];
        let w2 = [Var::loop_var(12, -2), Var::loop_var(0, -1), Var::loop_var(11, -1)];
        let a = u.normal_order(&w1);
        let b = u.normal_order(&w2);
        let joined: Vec<Var> = w1.iter().chain(w2.iter()).copied().collect();
        assert_eq!(u.mul(&a, &b), u.normal_order(&joined));
    }

    #[test]
    fn tau_on_vacuum() {
        let g = sl2();
        let u = Uea::new(&g);
        // τ x[-1] · 1 = x[-2]
        let p = u.normal_order(&[Var::TAU, Var::loop_var(0, -1)]).filter(|w| !w.iter().any(|v| v.is_tau()));
        assert_eq!(p, NCPoly::var(Var::loop_var(0, -2)));
    }

    #[test]
    fn sym_tau_recursion_matches_definition() {
        let g = build_sl(3).unwrap();
        let u = Uea::new(&g);
        let f = CommPoly::monomial(&[Var::finite(0), Var::finite(3), Var::finite(6)], Q::one())
            .add(&CommPoly::monomial(&[Var::finite(1), Var::finite(1), Var::finite(7)], Q::int(2)));
        for r in 0..3 {
            assert_eq!(u.sym_tau_apply(&f, r), u.sym_tau_apply_direct(&f, r), "r = {}", r);
        }
    }

    #[test]
    fn antipode_is_involution() {
        let g = sl2();
        let u = Uea::new(&g);
        let p = u.normal_order(&[Var::loop_var(0, -1), Var::loop_var(1, -2), Var::loop_var(2, -1)]);
        assert_eq!(u.antipode(&u.antipode(&p)), p);
    }

    #[test]
    fn casimir_commutes_with_everything() {
        let g = build_sl(3).unwrap();
        let u = Uea::new(&g);
        let h = u.casimir_on(0, 0, 0);
        for i in 0..g.dim() {
            let x = NCPoly::var(Var::finite(i));
            assert!(u.commutator(&h, &x).is_zero());
        }
    }

    #[test]
    fn json_roundtrip() {
        let g = build_g2().unwrap();
        let u = Uea::new(&g);
        let p = u.normal_order(&[Var::loop_var(11, -1), Var::loop_var(0, -1), Var::loop_var(3, -2)]);
        let j = p.to_json(&g);
        assert_eq!(NCPoly::from_json(&j, &g).unwrap(), p);
    }
}
