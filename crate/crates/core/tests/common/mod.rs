//! Independent oracles and random generators shared by the integration
//! tests. Nothing here calls the library's reduction, multiplication or
//! canonical-code routines.

#![allow(dead_code)]

pub mod golden;

use std::collections::HashMap;

use bott_core::{BottDiagram, BottMatrix, Monomial, RingElement};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Poly = HashMap<Vec<u32>, BigInt>;

/// Expand `a * b` in the free commutative ring `Z[x_0..x_{n-1}]`.
pub fn free_product(a: &RingElement, b: &RingElement, n: usize) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut e = vec![0u32; n];
            for i in ma.indices() {
                e[i] += 1;
            }
            for i in mb.indices() {
                e[i] += 1;
            }
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out
}

/// Exhaustively rewrite `x_j^2 -> -x_j h_j` one term at a time, with `pick`
/// choosing which squared generator to rewrite, until every monomial is
/// squarefree.
pub fn reduce_by<F>(poly: &Poly, rows: &[Vec<BigInt>], mut pick: F) -> RingElement
where
    F: FnMut(&[usize]) -> usize,
{
    let n = rows.len();
    let mut stack: Vec<(Vec<u32>, BigInt)> = poly
        .iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e.resize(n.max(e.len()), 0);
            (e, c.clone())
        })
        .collect();
    let mut out = RingElement::zero();
    while let Some((e, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let squared: Vec<usize> = (0..e.len()).filter(|&i| e[i] >= 2).collect();
        if squared.is_empty() {
            let mut bits = 0u64;
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    bits |= 1 << i;
                }
            }
            out.add_term(Monomial::from_bits(bits), c);
            continue;
        }
        let j = pick(&squared);
        for (k, a) in rows[j].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut f = e.clone();
            f[j] -= 1;
            f[k] += 1;
            stack.push((f, -(a * &c)));
        }
    }
    out
}

/// Reduction always rewriting the highest squared index.
pub fn reduce_descending(poly: &Poly, rows: &[Vec<BigInt>]) -> RingElement {
    reduce_by(poly, rows, |sq| *sq.last().unwrap())
}

/// Reduction rewriting a random squared index at every step.
pub fn reduce_random<R: Rng>(poly: &Poly, rows: &[Vec<BigInt>], rng: &mut R) -> RingElement {
    reduce_by(poly, rows, |sq| *sq.choose(rng).unwrap())
}

/// Multiplication oracle: expand, then reduce.
pub fn oracle_multiply(a: &RingElement, b: &RingElement, rows: &[Vec<BigInt>]) -> RingElement {
    reduce_descending(&free_product(a, b, rows.len()), rows)
}

/// Search for a bijection `f` with `f(parent(v)) = parent(f(v))`, roots to
/// roots, and (when `labelled`) equal edge labels.
pub fn brute_isomorphic(a: &BottDiagram, b: &BottDiagram, labelled: bool) -> bool {
    let n = a.n();
    if n != b.n() {
        return false;
    }
    // parents before children
    let depth = a.depths();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| depth[v]);

    fn go(
        i: usize,
        order: &[usize],
        a: &BottDiagram,
        b: &BottDiagram,
        labelled: bool,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let want_parent = a.parent(v).map(|p| image[p].expect("parent placed first"));
        for w in 0..b.n() {
            if used[w] || b.parent(w) != want_parent {
                continue;
            }
            if labelled && a.label(v) != b.label(w) {
                continue;
            }
            image[v] = Some(w);
            used[w] = true;
            if go(i + 1, order, a, b, labelled, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = None;
        }
        false
    }

    let mut image = vec![None; n];
    let mut used = vec![false; n];
    go(0, &order, a, b, labelled, &mut image, &mut used)
}

/// Every forest on `n` vertices with `parent(v) < v`, labels in `1..=qmax`.
pub fn all_ordered_forests(n: usize, qmax: u64) -> Vec<BottDiagram> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for v in 0..n {
        let mut next = Vec::new();
        for (parents, labels) in &out {
            let mut p: Vec<Option<usize>> = Vec::clone(parents);
            let mut l: Vec<Option<u64>> = Vec::clone(labels);
            p.push(None);
            l.push(None);
            next.push((p, l));
            for u in 0..v {
                for q in 1..=qmax {
                    let mut p: Vec<Option<usize>> = Vec::clone(parents);
                    let mut l: Vec<Option<u64>> = Vec::clone(labels);
                    p.push(Some(u));
                    l.push(Some(q));
                    next.push((p, l));
                }
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(p, l)| BottDiagram::new(p, l).unwrap())
        .collect()
}

/// Classes of `forests` under brute-force isomorphism.
pub fn brute_classes(forests: &[BottDiagram], labelled: bool) -> Vec<BottDiagram> {
    let mut reps: Vec<BottDiagram> = Vec::new();
    for f in forests {
        if !reps.iter().any(|r| brute_isomorphic(r, f, labelled)) {
            reps.push(f.clone());
        }
    }
    reps
}

/// Random forest on `n` vertices, each vertex a root with probability
/// `p_root`, labels uniform in `1..=qmax`, vertex ids shuffled.
pub fn random_forest<R: Rng>(rng: &mut R, n: usize, qmax: u64, p_root: f64) -> BottDiagram {
    let mut parent = Vec::with_capacity(n);
    let mut label = Vec::with_capacity(n);
    for v in 0..n {
        if v == 0 || rng.gen_bool(p_root) {
            parent.push(None);
            label.push(None);
        } else {
            parent.push(Some(rng.gen_range(0..v)));
            label.push(Some(rng.gen_range(1..=qmax)));
        }
    }
    let d = BottDiagram::new(parent, label).unwrap();
    random_renumber(rng, &d)
}

pub fn random_renumber<R: Rng>(rng: &mut R, d: &BottDiagram) -> BottDiagram {
    let mut perm: Vec<usize> = (0..d.n()).collect();
    perm.shuffle(rng);
    d.renumber(&perm)
}

/// A random Z-trivial tower built directly in the `z` generators: pick
/// `sigma(j) < j` and a signed twist `s_j`, then set
/// `h_j = 2 s_j z_sigma = 2 s_j x_sigma + s_j h_sigma`.
pub fn random_z_trivial<R: Rng>(rng: &mut R, n: usize, max_twist: i64) -> BottMatrix {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut row = vec![BigInt::zero(); j];
        if j > 0 && rng.gen_bool(0.6) {
            let k = rng.gen_range(0..j);
            let mut s = rng.gen_range(1..=max_twist);
            if rng.gen_bool(0.5) {
                s = -s;
            }
            let s = BigInt::from(s);
            row[k] += &s * 2;
            for (l, a) in rows[k].iter().enumerate() {
                row[l] += &s * a;
            }
        }
        rows.push(row);
    }
    BottMatrix::new(rows).unwrap()
}

/// Uniform random matrix with entries in `-bound..=bound`.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> BottMatrix {
    BottMatrix::new(
        (0..n)
            .map(|j| {
                (0..j)
                    .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

/// Random element with up to `terms` terms on `n` generators.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, terms: usize, bound: i64) -> RingElement {
    let mut e = RingElement::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let bits = if n == 0 {
            0
        } else {
            rng.gen_range(0..(1u64 << n))
        };
        e.add_term(
            Monomial::from_bits(bits),
            BigInt::from(rng.gen_range(-bound..=bound)),
        );
    }
    e
}

pub fn max_abs_entry(m: &BottMatrix) -> BigInt {
    use num_traits::Signed;
    m.rows()
        .iter()
        .flatten()
        .map(|a| a.abs())
        .max()
        .unwrap_or_default()
}
