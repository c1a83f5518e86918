//! Bott towers as integer matrices, the Z-triviality test, and the passage
//! between towers and Bott diagrams.
//!
//! A tower on `n` stages is given by the strictly lower-triangular matrix
//! `a_{jk}` with `h_j = sum_{k<j} a_{jk} x_k`. It is Z-trivial exactly when
//! every `h_j` is even and squares to zero; then `z_j = x_j + h_j / 2`
//! satisfies `z_j^2 = 0` and each nonzero `h_j` equals `2 s_j z_{sigma(j)}`
//! for one `sigma(j) < j`. Dualizing stage `j` flips the sign of `s_j`, so
//! the diagram records the label `|s_j|`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::coh_ring::{is_even, Monomial, RingElement, RingPresentation, MAX_GENERATORS};
use crate::error::{Error, NotZTrivial, NotZTrivialReason, Result};
use crate::forest::{BottDiagram, Label};

/// Strictly lower-triangular integer matrix; `row(j)` has `j` entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BottMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl BottMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.len() > MAX_GENERATORS {
            return Err(Error::DimensionTooLarge {
                n: rows.len(),
                max: MAX_GENERATORS,
            });
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {}",
                    j + 1,
                    row.len(),
                    j
                )));
            }
        }
        Ok(BottMatrix { rows })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new((0..n).map(|j| vec![BigInt::zero(); j]).collect())
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[BigInt] {
        &self.rows[j]
    }

    pub fn entry(&self, j: usize, k: usize) -> &BigInt {
        &self.rows[j][k]
    }

    pub fn set(&mut self, j: usize, k: usize, a: impl Into<BigInt>) {
        assert!(k < j, "entry ({j}, {k}) is not strictly below the diagonal");
        self.rows[j][k] = a.into();
    }

    /// The ring presentation with `h_j = sum_k a_{jk} x_k`.
    pub fn presentation(&self) -> RingPresentation {
        RingPresentation::from_rows(self.rows.clone()).expect("matrix shape already validated")
    }

    /// Rewrite every `h_j` in the `z` generators and accept iff each one is
    /// zero or a single even multiple of some `z_k`.
    pub fn z_basis(&self) -> Result<ZBasis> {
        let n = self.n();
        // z[k] as coefficients over x_0..x_k (coefficient of x_k is 1)
        let mut z: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut sigma = vec![None; n];
        let mut twist = vec![BigInt::zero(); n];
        let mut label = vec![None; n];

        for j in 0..n {
            let row = &self.rows[j];
            if row.iter().any(|a| !is_even(a)) {
                return Err(NotZTrivial {
                    index: j,
                    reason: NotZTrivialReason::OddCoefficient,
                }
                .into());
            }
            // triangular back substitution: h_j = sum_k b_k z_k
            let mut rest = row.clone();
            let mut b = vec![BigInt::zero(); j];
            for k in (0..j).rev() {
                if rest[k].is_zero() {
                    continue;
                }
                let c = rest[k].clone();
                for (l, zl) in z[k].iter().enumerate() {
                    rest[l] -= &c * zl;
                }
                b[k] = c;
            }
            debug_assert!(rest.iter().all(Zero::is_zero));

            let mut support = b.iter().enumerate().filter(|(_, c)| !c.is_zero());
            match (support.next(), support.next()) {
                (None, _) => {}
                (Some((k, c)), None) => {
                    if !is_even(c) {
                        return Err(NotZTrivial {
                            index: j,
                            reason: NotZTrivialReason::OddCoefficient,
                        }
                        .into());
                    }
                    let s: BigInt = c / 2;
                    let q = s.abs().to_u64().ok_or(Error::LabelOverflow { index: j })?;
                    sigma[j] = Some(k);
                    label[j] = Some(q);
                    twist[j] = s;
                }
                (Some(_), Some(_)) => {
                    return Err(NotZTrivial {
                        index: j,
                        reason: NotZTrivialReason::MultipleZTerms,
                    }
                    .into());
                }
            }

            let mut zj: Vec<BigInt> = row.iter().map(|a| a / 2).collect();
            zj.push(BigInt::from(1));
            z.push(zj);
        }

        let mut level = vec![0usize; n];
        for j in 0..n {
            if let Some(k) = sigma[j] {
                level[j] = level[k] + 1;
            }
        }
        let height = level.iter().copied().max().map_or(0, |r| r + 1);
        let mut levels = vec![Vec::new(); height];
        for (j, &l) in level.iter().enumerate() {
            levels[l].push(j);
        }

        Ok(ZBasis {
            z: z.iter().map(|c| RingElement::linear(c)).collect(),
            sigma,
            label,
            twist,
            levels,
        })
    }

    /// The Bott diagram: parent map `sigma`, edge labels `q_j`.
    pub fn diagram(&self) -> Result<BottDiagram> {
        let zb = self.z_basis()?;
        BottDiagram::new(zb.sigma, zb.label)
    }

    /// The total Chern class rewritten in the `z` generators, as an element of
    /// the ring `Z[z]/(z_j^2)` (printed with variable `z`).
    ///
    /// Computed by expanding `prod (1 + 2x_j + h_j)` in the `x` basis and then
    /// substituting `x_j = z_j - s_j z_{sigma(j)}`.
    pub fn chern_in_z_basis(&self) -> Result<RingElement> {
        let zb = self.z_basis()?;
        let n = self.n();
        let target = RingPresentation::trivial(n)?;
        let image: Vec<RingElement> = (0..n)
            .map(|j| {
                let mut e = RingElement::generator(j);
                if let Some(k) = zb.sigma[j] {
                    e.add_term(Monomial::generator(k), -zb.twist[j].clone());
                }
                e
            })
            .collect();

        let chern = self.presentation().total_chern();
        let mut out = RingElement::zero();
        for (m, c) in chern.terms() {
            let mut value = RingElement::one();
            for j in m.indices() {
                value = target.multiply(&value, &image[j])?;
            }
            out.add_scaled(&value, c);
        }
        Ok(out)
    }
}

/// Output of the Z-triviality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZBasis {
    /// `z_j = x_j + h_j / 2` in the `x` generators.
    pub z: Vec<RingElement>,
    pub sigma: Vec<Option<usize>>,
    /// Positive labels `q_j = |s_j|` on non-roots.
    pub label: Vec<Option<Label>>,
    /// Signed `s_j` with `h_j = 2 s_j z_{sigma(j)}`; zero on roots.
    pub twist: Vec<BigInt>,
    pub levels: Vec<Vec<usize>>,
}

/// Vertex numbering used by [`tower_of_diagram`]: parents first, sorted by
/// (level, subtree code, original index). Entry `i` is the original vertex
/// that becomes stage `i`.
pub fn tower_order(d: &BottDiagram) -> Vec<usize> {
    let depth = d.depths();
    let codes = d.subtree_codes();
    let mut order: Vec<usize> = (0..d.n()).collect();
    order.sort_by(|&u, &v| {
        depth[u]
            .cmp(&depth[v])
            .then_with(|| codes[u].cmp(&codes[v]))
            .then_with(|| u.cmp(&v))
    });
    order
}

/// A tower realizing `d`: with `h_j = 2 q_j z_{sigma(j)}` unfolded into the
/// `x` generators as `h_j = 2 q_j x_{sigma(j)} + q_j h_{sigma(j)}`.
pub fn tower_of_diagram(d: &BottDiagram) -> Result<BottMatrix> {
    // revalidate; the fields are public through the constructor only, but
    // callers may hand in diagrams from other sources
    let d = BottDiagram::new(d.parents().to_vec(), d.labels().to_vec())?;
    if d.n() > MAX_GENERATORS {
        return Err(Error::DimensionTooLarge {
            n: d.n(),
            max: MAX_GENERATORS,
        });
    }
    let order = tower_order(&d);
    let mut stage = vec![0usize; d.n()];
    for (i, &v) in order.iter().enumerate() {
        stage[v] = i;
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d.n());
    for (j, &v) in order.iter().enumerate() {
        let mut row = vec![BigInt::zero(); j];
        if let (Some(p), Some(q)) = (d.parent(v), d.label(v)) {
            let s = stage[p];
            let q = BigInt::from(q);
            row[s] += &q * 2;
            for (l, a) in rows[s].iter().enumerate() {
                row[l] += &q * a;
            }
        }
        rows.push(row);
    }
    BottMatrix::new(rows)
}

/// Whether two Z-trivial towers give biholomorphic manifolds, i.e. have
/// isomorphic Bott diagrams.
pub fn biholomorphic(m1: &BottMatrix, m2: &BottMatrix) -> Result<bool> {
    let d1 = m1.diagram()?;
    let d2 = m2.diagram()?;
    Ok(d1.is_isomorphic(&d2))
}

/// `prod_j (1 + 2 z_j)` in `Z[z]/(z_j^2)`.
pub fn product_chern(n: usize) -> RingElement {
    let ring = RingPresentation::trivial(n).expect("n within limits");
    let mut c = RingElement::one();
    for j in 0..n {
        let factor = &RingElement::one() + &RingElement::term(Monomial::generator(j), 2);
        c = ring.multiply(&c, &factor).expect("generators in range");
    }
    c
}
