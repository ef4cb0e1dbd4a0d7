//! Defining relations as data, so they can be evaluated in U_q, under Δ or
//! T_{α_i}, or on a module.

use super::{generator, k_alpha_vector, k_monomial, Element, GenMap, Kind};
use crate::rootdata::Shape;
use crate::scalars::RatFunc;

/// A letter of a relation word: a root vector or a K-monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    E(usize, usize),
    F(usize, usize),
    K(Vec<i64>),
}

impl Letter {
    pub fn parity(&self, shape: Shape) -> u8 {
        match self {
            Letter::E(i, j) | Letter::F(i, j) => shape.is_odd(*i, *j) as u8,
            Letter::K(_) => 0,
        }
    }

    /// The letter as an element of U_q.
    pub fn element(&self, shape: Shape) -> Element {
        match self {
            Letter::E(i, j) => generator(shape, Kind::E, *i, *j).unwrap(),
            Letter::F(i, j) => generator(shape, Kind::F, *i, *j).unwrap(),
            Letter::K(mu) => k_monomial(shape, mu).unwrap(),
        }
    }
}

/// Σ c_w · w = 0, with `family` naming the relation group (e.g. "a3").
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: &'static str,
    pub label: String,
    pub terms: Vec<(RatFunc, Vec<Letter>)>,
}

impl Relation {
    fn new(family: &'static str, label: String) -> Self {
        Relation { family, label, terms: Vec::new() }
    }

    fn term(mut self, c: RatFunc, w: Vec<Letter>) -> Self {
        self.terms.push((c, w));
        self
    }

    /// Value of the left-hand side in U_q.
    pub fn evaluate(&self, shape: Shape) -> Element {
        let mut out = Element::zero(shape);
        for (c, w) in &self.terms {
            let mut acc = Element::scalar(shape, c.clone());
            for l in w {
                acc = &acc * &l.element(shape);
            }
            out = &out + &acc;
        }
        out
    }

    /// Value of the left-hand side under a map given on letters.
    pub fn evaluate_with<T: Clone>(&self, ops: &GenMap<'_, T, Letter>) -> T {
        let mut total = ops.zero.clone();
        for (c, w) in &self.terms {
            let mut acc = ops.one.clone();
            for l in w {
                acc = (ops.mul)(&acc, &(ops.image)(l));
            }
            total = (ops.add)(&total, &(ops.scale)(&acc, c));
        }
        total
    }
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

fn sgn(odd: bool) -> RatFunc {
    RatFunc::from_int(if odd { -1 } else { 1 })
}

fn qq(shape: Shape, i: usize, e: i64) -> RatFunc {
    q(shape.q_sign(i) as i64 * e)
}

/// Relations (a1)–(a5), (b1)–(b5), (c1)–(c2), (d1)–(d3) in root vectors.
pub fn prop86_relations(shape: Shape) -> Vec<Relation> {
    let mut out = Vec::new();
    let k = shape.rank();
    let roots = shape.positive_roots();
    let one = RatFunc::one;
    let minus = || RatFunc::from_int(-1);
    for side in [true, false] {
        let (fam1, fam2, fam3, fam4, fam5) =
            if side { ("a1", "a2", "a3", "a4", "a5") } else { ("b1", "b2", "b3", "b4", "b5") };
        let x = |i: usize, j: usize| if side { Letter::E(i, j) } else { Letter::F(i, j) };
        let nm = if side { "E" } else { "F" };
        for r in &roots {
            if shape.is_odd(r.i, r.j) {
                out.push(Relation::new(fam1, format!("{nm}{}{}^2", r.i, r.j)).term(one(), vec![x(r.i, r.j), x(r.i, r.j)]));
            }
        }
        for a in &roots {
            for b in &roots {
                let (i, j, s, t) = (a.i, a.j, b.i, b.j);
                if (i < s && s < t && t < j) || (s < t && t < i && i < j) {
                    let sig = sgn(shape.is_odd(i, j) && shape.is_odd(s, t));
                    out.push(
                        Relation::new(fam2, format!("{nm}{i}{j},{nm}{s}{t}"))
                            .term(one(), vec![x(i, j), x(s, t)])
                            .term(-&sig, vec![x(s, t), x(i, j)]),
                    );
                }
            }
        }
        for t in 1..=k {
            for a in t + 1..=k {
                for b in a + 1..=k {
                    let c = &sgn(shape.is_odd(t, a)) * &qq(shape, t, 1);
                    out.push(
                        Relation::new(fam3, format!("{nm}{t}{a},{nm}{t}{b}"))
                            .term(one(), vec![x(t, a), x(t, b)])
                            .term(-&c, vec![x(t, b), x(t, a)]),
                    );
                }
            }
        }
        for a in 1..=k {
            for b in a + 1..=k {
                for t in b + 1..=k {
                    let c = &sgn(shape.is_odd(b, t)) * &qq(shape, t, -1);
                    out.push(
                        Relation::new(fam4, format!("{nm}{b}{t},{nm}{a}{t}"))
                            .term(one(), vec![x(b, t), x(a, t)])
                            .term(-&c, vec![x(a, t), x(b, t)]),
                    );
                }
            }
        }
        for i in 1..=k {
            for c in i + 1..=k {
                for j in c + 1..=k {
                    let rel = Relation::new(fam5, format!("{nm}{i}{j} via {c}")).term(one(), vec![x(i, j)]);
                    let rel = if side {
                        rel.term(minus(), vec![x(i, c), x(c, j)]).term(qq(shape, c, -1), vec![x(c, j), x(i, c)])
                    } else {
                        rel.term(qq(shape, c, 1), vec![x(i, c), x(c, j)]).term(minus(), vec![x(c, j), x(i, c)])
                    };
                    out.push(rel);
                }
            }
        }
    }
    let ka = |i: usize, e: i64| Letter::K(k_alpha_vector(shape, i, e));
    for i in 1..=k {
        for j in 1..=k {
            if i < j {
                out.push(
                    Relation::new("c1", format!("Ka{i},Ka{j}"))
                        .term(one(), vec![ka(i, 1), ka(j, 1)])
                        .term(minus(), vec![ka(j, 1), ka(i, 1)]),
                );
            }
        }
        out.push(Relation::new("c2", format!("Ka{i}")).term(one(), vec![ka(i, 1), ka(i, -1)]).term(minus(), vec![]));
    }
    for i in 1..k {
        for j in 1..k {
            // super-bracket reading: the sign is −1 only for i = j = m
            let s = sgn(i == shape.m && j == shape.m);
            let mut rel = Relation::new("d1", format!("E{i},F{j}"))
                .term(one(), vec![Letter::E(i, i + 1), Letter::F(j, j + 1)])
                .term(-&s, vec![Letter::F(j, j + 1), Letter::E(i, i + 1)]);
            if i == j {
                let d = (&qq(shape, i, 1) - &qq(shape, i, -1)).inv().unwrap();
                rel = rel.term(-&d, vec![ka(i, 1)]).term(d, vec![ka(i, -1)]);
            }
            out.push(rel);
        }
    }
    for i in 1..=k {
        for j in 1..k {
            let a = shape.cartan_entry(i, j).unwrap();
            out.push(
                Relation::new("d2", format!("Ka{i},E{j}"))
                    .term(one(), vec![ka(i, 1), Letter::E(j, j + 1)])
                    .term(-&qq(shape, i, a), vec![Letter::E(j, j + 1), ka(i, 1)]),
            );
            out.push(
                Relation::new("d3", format!("Ka{i},F{j}"))
                    .term(one(), vec![ka(i, 1), Letter::F(j, j + 1)])
                    .term(-&qq(shape, i, -a), vec![Letter::F(j, j + 1), ka(i, 1)]),
            );
        }
    }
    out
}

/// (R4)–(R8) in simple generators, with (R8) also in its expanded u_ex form.
pub fn higher_relations(shape: Shape) -> Vec<Relation> {
    let mut out = Vec::new();
    let k = shape.rank();
    let m = shape.m;
    let one = RatFunc::one;
    let qsum = &q(1) + &q(-1);
    for side in [true, false] {
        let x = |i: usize| if side { Letter::E(i, i + 1) } else { Letter::F(i, i + 1) };
        let xr = |i: usize, j: usize| if side { Letter::E(i, j) } else { Letter::F(i, j) };
        let nm = if side { "E" } else { "F" };
        out.push(Relation::new("R4", format!("{nm}{m}^2")).term(one(), vec![x(m), x(m)]));
        for i in 1..k {
            for j in 1..k {
                if i.abs_diff(j) > 1 {
                    out.push(
                        Relation::new("R5", format!("{nm}{i},{nm}{j}"))
                            .term(one(), vec![x(i), x(j)])
                            .term(-&one(), vec![x(j), x(i)]),
                    );
                }
                if i.abs_diff(j) == 1 && i != m {
                    let fam = if side { "R6" } else { "R7" };
                    out.push(
                        Relation::new(fam, format!("{nm}{i}^2{nm}{j}"))
                            .term(one(), vec![x(i), x(i), x(j)])
                            .term(-&qsum, vec![x(i), x(j), x(i)])
                            .term(one(), vec![x(j), x(i), x(i)]),
                    );
                }
            }
        }
        if m >= 2 && shape.n >= 2 {
            // [X_{m-1,m+2}, X_{m,m+1}] with both factors odd·even → plain commutator sign
            let p = shape.is_odd(m - 1, m + 2) && shape.is_odd(m, m + 1);
            out.push(
                Relation::new("R8", format!("[{nm}{},{}, {nm}{},{}]", m - 1, m + 2, m, m + 1))
                    .term(one(), vec![xr(m - 1, m + 2), xr(m, m + 1)])
                    .term(-&sgn(p), vec![xr(m, m + 1), xr(m - 1, m + 2)]),
            );
            out.push(
                Relation::new("uex", format!("u_ex {nm}"))
                    .term(one(), vec![x(m - 1), x(m), x(m + 1), x(m)])
                    .term(one(), vec![x(m), x(m - 1), x(m), x(m + 1)])
                    .term(one(), vec![x(m + 1), x(m), x(m - 1), x(m)])
                    .term(one(), vec![x(m), x(m + 1), x(m), x(m - 1)])
                    .term(-&qsum, vec![x(m), x(m - 1), x(m + 1), x(m)]),
            );
        }
    }
    out
}

/// Everything checked by the relation suite.
pub fn all_relations(shape: Shape) -> Vec<Relation> {
    let mut v = prop86_relations(shape);
    v.extend(higher_relations(shape));
    v
}
