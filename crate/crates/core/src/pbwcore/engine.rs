//! Straightening into PBW normal form.
//!
//! E-side products use single-atom swap rules; the F side is the Ω-image of
//! the E side. E/F crossings are only ever done against one simple F_c, with
//! composite E atoms expanded one level at a time.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use super::monomial::{Monomial, RootTable};
use crate::rootdata::Shape;
use crate::scalars::RatFunc;

pub(crate) type Lin<K> = HashMap<K, RatFunc>;
pub(crate) type Key = Vec<u32>;
type Words = Vec<(RatFunc, Vec<usize>)>;

pub(crate) fn add_into<K: Hash + Eq>(acc: &mut Lin<K>, k: K, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Per-shape tables and memo caches. Locks are never held across recursion.
pub struct Algebra {
    pub table: RootTable,
    eatom: Mutex<HashMap<(Key, usize), Arc<Lin<Key>>>>,
    ref_: Mutex<HashMap<(Key, usize), Arc<Lin<Monomial>>>>,
    cross: Mutex<HashMap<(usize, usize), Arc<Lin<Monomial>>>>,
    fwords: Vec<Words>,
    ewords: Vec<Words>,
}

static REGISTRY: OnceLock<Mutex<HashMap<Shape, Arc<Algebra>>>> = OnceLock::new();

impl Algebra {
    /// Shared instance for `shape`.
    pub fn get(shape: Shape) -> Arc<Algebra> {
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut g = reg.lock().unwrap();
        g.entry(shape).or_insert_with(|| Arc::new(Algebra::new(shape))).clone()
    }

    fn new(shape: Shape) -> Self {
        let table = RootTable::new(shape);
        let mut alg = Algebra {
            table,
            eatom: Mutex::new(HashMap::new()),
            ref_: Mutex::new(HashMap::new()),
            cross: Mutex::new(HashMap::new()),
            fwords: Vec::new(),
            ewords: Vec::new(),
        };
        alg.ewords = (0..alg.table.len()).map(|id| alg.expand_root(id, false)).collect();
        alg.fwords = (0..alg.table.len()).map(|id| alg.expand_root(id, true)).collect();
        alg
    }

    pub fn shape(&self) -> Shape {
        self.table.shape
    }

    pub(crate) fn qc(&self, c: usize) -> RatFunc {
        RatFunc::q_pow(self.shape().q_sign(c) as i64)
    }

    pub(crate) fn qc_inv(&self, c: usize) -> RatFunc {
        RatFunc::q_pow(-(self.shape().q_sign(c) as i64))
    }

    /// Words in simple indices for a root vector:
    /// E_ij = E_ic E_cj − q_c⁻¹ E_cj E_ic and F_ij = −q_c F_ic F_cj + F_cj F_ic, c = i+1.
    fn expand_root(&self, id: usize, is_f: bool) -> Words {
        let r = self.table.root(id);
        if r.j == r.i + 1 {
            return vec![(RatFunc::one(), vec![r.i])];
        }
        let c = r.i + 1;
        let rest = self.expand_root(self.table.id(c, r.j).unwrap(), is_f);
        let mut out = Vec::new();
        let (first, second) = if is_f {
            (-&self.qc(c), RatFunc::one())
        } else {
            (RatFunc::one(), -&self.qc_inv(c))
        };
        for (coef, w) in &rest {
            let mut a = vec![r.i];
            a.extend(w);
            out.push((&first * coef, a));
            let mut b = w.clone();
            b.push(r.i);
            out.push((&second * coef, b));
        }
        out
    }

    pub(crate) fn root_words(&self, id: usize, is_f: bool) -> &Words {
        if is_f {
            &self.fwords[id]
        } else {
            &self.ewords[id]
        }
    }

    /// (μ, ε_i − ε_j) for root `id`.
    pub(crate) fn kpair(&self, mu: &[i64], id: usize) -> i64 {
        let r = self.table.root(id);
        let s = self.shape();
        s.eps_norm(r.i) * mu[r.i - 1] - s.eps_norm(r.j) * mu[r.j - 1]
    }

    /// (μ, weight of the positive part with exponents `x`).
    pub(crate) fn kpair_part(&self, mu: &[i64], x: &[u32]) -> i64 {
        x.iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(id, &p)| p as i64 * self.kpair(mu, id))
            .sum()
    }

    // ---- E side ----

    fn swap_rule(&self, r1: usize, r2: usize) -> Words {
        let t = &self.table;
        let (a, b) = (t.root(r1).i, t.root(r1).j);
        let (s, u) = (t.root(r2).i, t.root(r2).j);
        let p1 = t.is_odd(r1);
        let p2 = t.is_odd(r2);
        let sigma = if p1 && p2 { -1 } else { 1 };
        let sg = |neg: bool| RatFunc::from_int(if neg { -1 } else { 1 });
        let sw = vec![r2, r1];
        if b < s || u < a || (a < s && u < b) || (s < a && b < u) {
            return vec![(RatFunc::from_int(sigma), sw)];
        }
        if a == s {
            return if b < u {
                vec![(&sg(p1) * &self.qc(a), sw)]
            } else {
                vec![(&sg(p2) * &self.qc_inv(a), sw)]
            };
        }
        if b == u {
            return if a > s {
                vec![(&sg(p1) * &self.qc_inv(b), sw)]
            } else {
                vec![(&sg(p2) * &self.qc(b), sw)]
            };
        }
        if b == s {
            return vec![(RatFunc::one(), vec![t.id(a, u).unwrap()]), (self.qc_inv(b), sw)];
        }
        if u == a {
            return vec![(self.qc(a), sw), (-&self.qc(a), vec![t.id(s, b).unwrap()])];
        }
        let sigma = RatFunc::from_int(sigma);
        if a < s && s < b && b < u {
            let d = &self.qc(b) - &self.qc_inv(b);
            return vec![(sigma, sw), (d, vec![t.id(a, u).unwrap(), t.id(s, b).unwrap()])];
        }
        debug_assert!(s < a && a < u && u < b);
        let d = &self.qc(u) - &self.qc_inv(u);
        let c = -&(&sigma * &d);
        vec![(sigma, sw), (c, vec![t.id(s, b).unwrap(), t.id(a, u).unwrap()])]
    }

    /// Normal E-monomial `a` times the single atom E_x.
    pub(crate) fn emul_atom(&self, a: &Key, x: usize) -> Arc<Lin<Key>> {
        let last = a.iter().rposition(|&p| p > 0);
        let append = |a: &Key| {
            let mut k = a.clone();
            k[x] += 1;
            let mut l = Lin::new();
            l.insert(k, RatFunc::one());
            Arc::new(l)
        };
        match last {
            None => return append(a),
            Some(l) if l < x => return append(a),
            Some(l) if l == x => {
                if self.table.is_odd(x) {
                    return Arc::new(Lin::new());
                }
                return append(a);
            }
            _ => {}
        }
        let key = (a.clone(), x);
        if let Some(v) = self.eatom.lock().unwrap().get(&key) {
            return v.clone();
        }
        let l = last.unwrap();
        let mut a1 = a.clone();
        a1[l] -= 1;
        let mut out = Lin::new();
        for (c, word) in self.swap_rule(l, x) {
            for (k, v) in self.efold(&a1, &word) {
                add_into(&mut out, k, &c * &v);
            }
        }
        let out = Arc::new(out);
        self.eatom.lock().unwrap().insert(key, out.clone());
        out
    }

    fn efold(&self, a: &Key, word: &[usize]) -> Lin<Key> {
        let mut cur = Lin::new();
        cur.insert(a.clone(), RatFunc::one());
        for &x in word {
            let mut next = Lin::new();
            for (k, c) in &cur {
                for (k2, c2) in self.emul_atom(k, x).iter() {
                    add_into(&mut next, k2.clone(), c * c2);
                }
            }
            cur = next;
        }
        cur
    }

    /// Product of two normal E-monomials.
    pub(crate) fn emul(&self, a: &Key, b: &Key) -> Lin<Key> {
        let word: Vec<usize> = b
            .iter()
            .enumerate()
            .flat_map(|(id, &p)| std::iter::repeat(id).take(p as usize))
            .collect();
        self.efold(a, &word)
    }

    /// Product of two normal F-monomials, via Ω(xy) = Ω(y)Ω(x).
    pub(crate) fn fmul(&self, a: &Key, b: &Key) -> Lin<Key> {
        if b.iter().all(|&p| p == 0) {
            let mut l = Lin::new();
            l.insert(a.clone(), RatFunc::one());
            return l;
        }
        if a.iter().all(|&p| p == 0) {
            let mut l = Lin::new();
            l.insert(b.clone(), RatFunc::one());
            return l;
        }
        self.emul(b, a).into_iter().map(|(k, c)| (k, c.bar())).collect()
    }

    // ---- crossing ----

    fn mono(&self, f: Key, k: Vec<i64>, e: Key) -> Monomial {
        Monomial { f, k, e }
    }

    fn zero_key(&self) -> Key {
        vec![0; self.table.len()]
    }

    fn zero_k(&self) -> Vec<i64> {
        vec![0; self.shape().rank()]
    }

    /// E_r · F_c for a simple index c.
    fn cross_ef(&self, r: usize, c: usize) -> Arc<Lin<Monomial>> {
        if let Some(v) = self.cross.lock().unwrap().get(&(r, c)) {
            return v.clone();
        }
        let t = &self.table;
        let root = t.root(r);
        let fc = t.simple(c);
        let mut out = Lin::new();
        if root.j == root.i + 1 {
            let mut f = self.zero_key();
            f[fc] = 1;
            let mut e = self.zero_key();
            e[r] = 1;
            let sign = if root.i == c && c == self.shape().m { -1 } else { 1 };
            add_into(&mut out, self.mono(f, self.zero_k(), e), RatFunc::from_int(sign));
            if root.i == c {
                let d = &self.qc(c) - &self.qc_inv(c);
                let inv = RatFunc::one() / d;
                let mut kp = self.zero_k();
                kp[c - 1] = 1;
                kp[c] = -1;
                let km: Vec<i64> = kp.iter().map(|x| -x).collect();
                add_into(&mut out, self.mono(self.zero_key(), kp, self.zero_key()), inv.clone());
                add_into(&mut out, self.mono(self.zero_key(), km, self.zero_key()), -inv);
            }
        } else {
            let mid = root.i + 1;
            let s1 = t.simple(root.i);
            let s2 = t.id(mid, root.j).unwrap();
            let p1 = self.lmul_e(s1, &self.cross_ef(s2, c));
            let p2 = self.lmul_e(s2, &self.cross_ef(s1, c));
            let qi = self.qc_inv(mid);
            for (k, v) in p1 {
                add_into(&mut out, k, v);
            }
            for (k, v) in p2 {
                add_into(&mut out, k, -&(&qi * &v));
            }
        }
        let out = Arc::new(out);
        self.cross.lock().unwrap().insert((r, c), out.clone());
        out
    }

    fn lmul_e(&self, r: usize, x: &Lin<Monomial>) -> Lin<Monomial> {
        let mut e = self.zero_key();
        e[r] = 1;
        let m = self.mono(self.zero_key(), self.zero_k(), e);
        let mut out = Lin::new();
        for (k, c) in x {
            for (k2, c2) in self.mul_mono(&m, k) {
                add_into(&mut out, k2, c * &c2);
            }
        }
        out
    }

    /// Normal E-monomial `a` times F_c.
    fn rmul_ef(&self, a: &Key, c: usize) -> Arc<Lin<Monomial>> {
        let last = a.iter().rposition(|&p| p > 0);
        let Some(l) = last else {
            let mut f = self.zero_key();
            f[self.table.simple(c)] = 1;
            let mut out = Lin::new();
            out.insert(self.mono(f, self.zero_k(), self.zero_key()), RatFunc::one());
            return Arc::new(out);
        };
        let key = (a.clone(), c);
        if let Some(v) = self.ref_.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut a1 = a.clone();
        a1[l] -= 1;
        let mut out = Lin::new();
        for (t, ct) in self.cross_ef(l, c).iter() {
            let fdeg: u32 = t.f.iter().sum();
            if fdeg == 0 {
                let s = -self.kpair_part(&t.k, &a1);
                let sc = ct * &RatFunc::q_pow(s);
                for (e2, c2) in self.emul(&a1, &t.e) {
                    add_into(&mut out, self.mono(self.zero_key(), t.k.clone(), e2), &sc * &c2);
                }
            } else {
                debug_assert!(fdeg == 1 && t.f[self.table.simple(c)] == 1);
                for (y, cy) in self.rmul_ef(&a1, c).iter() {
                    let s = -self.kpair_part(&t.k, &y.e);
                    let sc = &(ct * cy) * &RatFunc::q_pow(s);
                    let kk: Vec<i64> = y.k.iter().zip(&t.k).map(|(a, b)| a + b).collect();
                    for (e2, c2) in self.emul(&y.e, &t.e) {
                        add_into(&mut out, self.mono(y.f.clone(), kk.clone(), e2), &sc * &c2);
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.ref_.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Monomial `m` times the simple generator F_c.
    fn rmul_simple_f(&self, m: &Monomial, c: usize) -> Lin<Monomial> {
        let mut out = Lin::new();
        for (t, ct) in self.rmul_ef(&m.e, c).iter() {
            let s = -self.kpair_part(&m.k, &t.f);
            let sc = ct * &RatFunc::q_pow(s);
            let kk: Vec<i64> = m.k.iter().zip(&t.k).map(|(a, b)| a + b).collect();
            for (f2, c2) in self.fmul(&m.f, &t.f) {
                add_into(&mut out, self.mono(f2, kk.clone(), t.e.clone()), &sc * &c2);
            }
        }
        out
    }

    /// Product of two normal monomials.
    pub fn mul_mono(&self, x: &Monomial, y: &Monomial) -> Lin<Monomial> {
        // Ex · Fy
        let mut s = Lin::new();
        s.insert(self.mono(self.zero_key(), self.zero_k(), x.e.clone()), RatFunc::one());
        for (id, p) in y.f_atoms() {
            for _ in 0..p {
                let mut next = Lin::new();
                for (coef, word) in &self.fwords[id] {
                    let mut cur = s.clone();
                    for &c in word {
                        let mut n2 = Lin::new();
                        for (m, cm) in &cur {
                            for (m2, c2) in self.rmul_simple_f(m, c) {
                                add_into(&mut n2, m2, cm * &c2);
                            }
                        }
                        cur = n2;
                    }
                    for (m, cm) in cur {
                        add_into(&mut next, m, coef * &cm);
                    }
                }
                s = next;
            }
        }
        // Fx Kx (Ft Kt Et) Ky Ey
        let mut out = Lin::new();
        for (t, ct) in s {
            let sh = -self.kpair_part(&x.k, &t.f) - self.kpair_part(&y.k, &t.e);
            let sc = &ct * &RatFunc::q_pow(sh);
            let kk: Vec<i64> = (0..x.k.len()).map(|i| x.k[i] + t.k[i] + y.k[i]).collect();
            let fs = self.fmul(&x.f, &t.f);
            let es = self.emul(&t.e, &y.e);
            for (f2, cf) in &fs {
                let scf = &sc * cf;
                for (e2, ce) in &es {
                    add_into(&mut out, self.mono(f2.clone(), kk.clone(), e2.clone()), &scf * ce);
                }
            }
        }
        out
    }

    /// Lemma-style closed form for E_r F_c with r composite, used to cross-check
    /// the expansion route: E_ij F_c − (−1)^{p p'} F_c E_ij equals
    /// δ_{c+1,j} q_c⁻¹ E_ic K_c K_{c+1}⁻¹ − δ_ic (−1)^{δ_cm} E_{c+1,j} K_c⁻¹ K_{c+1}.
    pub fn cross_closed_form(&self, r: usize, c: usize) -> Lin<Monomial> {
        let t = &self.table;
        let root = t.root(r);
        assert!(root.j > root.i + 1, "closed form is for composite roots");
        let fc = t.simple(c);
        let mut out = Lin::new();
        let sign = if t.is_odd(r) && t.is_odd(fc) { -1 } else { 1 };
        let mut f = self.zero_key();
        f[fc] = 1;
        let mut e = self.zero_key();
        e[r] = 1;
        add_into(&mut out, self.mono(f, self.zero_k(), e), RatFunc::from_int(sign));
        let mut kp = self.zero_k();
        kp[c - 1] = 1;
        kp[c] = -1;
        if root.j == c + 1 {
            let id = t.id(root.i, c).unwrap();
            let mut e = self.zero_key();
            e[id] = 1;
            // E K_μ = q^{-(μ,β)} K_μ E
            let sh = -self.kpair(&kp, id);
            let coef = &self.qc_inv(c) * &RatFunc::q_pow(sh);
            add_into(&mut out, self.mono(self.zero_key(), kp.clone(), e), coef);
        }
        if root.i == c {
            let id = t.id(c + 1, root.j).unwrap();
            let mut e = self.zero_key();
            e[id] = 1;
            let km: Vec<i64> = kp.iter().map(|x| -x).collect();
            let sh = -self.kpair(&km, id);
            let sgn = if c == self.shape().m { 1 } else { -1 };
            add_into(&mut out, self.mono(self.zero_key(), km, e), &RatFunc::from_int(sgn) * &RatFunc::q_pow(sh));
        }
        out
    }

    /// The expansion-route value of E_r F_c, exposed for comparison.
    pub fn cross_expanded(&self, r: usize, c: usize) -> Lin<Monomial> {
        (*self.cross_ef(r, c)).clone()
    }
}
