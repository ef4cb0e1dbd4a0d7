//! Root and weight combinatorics of gl(m,n).
//!
//! All indices are 1-based. Weights are integer vectors in the ε-basis; the
//! α-coordinates `z` are the exponents by which the `K_{α_i}` act.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("shape must have m >= 1 and n >= 1, got ({0},{1})")]
    BadShape(usize, usize),
    #[error("weight has {got} coordinates, shape needs {want}")]
    ShapeMismatch { want: usize, got: usize },
    #[error("({0},{1}) is not an odd positive root")]
    NotOdd(usize, usize),
    #[error("index {0} out of range")]
    BadIndex(usize),
    #[error("z is not in the dominant cone")]
    NotDominantZ,
    #[error("l must be odd and at least 3, got {0}")]
    BadOrder(u32),
}

/// The pair (m, n) of gl(m,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

/// Positive root ε_i − ε_j with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex {
    pub i: usize,
    pub j: usize,
}

impl RootIndex {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i < j);
        RootIndex { i, j }
    }
}

/// Weight in ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub eps: Vec<i64>,
}

impl Weight {
    pub fn new(eps: Vec<i64>) -> Self {
        Weight { eps }
    }
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Result<Self, RootDataError> {
        if m == 0 || n == 0 {
            return Err(RootDataError::BadShape(m, n));
        }
        Ok(Shape { m, n })
    }

    /// m + n.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// Exponent sign of `q_i`: `q_i = q` for `i <= m`, `q^-1` otherwise.
    pub fn q_sign(&self, i: usize) -> i32 {
        if i <= self.m {
            1
        } else {
            -1
        }
    }

    /// (ε_i, ε_i).
    pub fn eps_norm(&self, i: usize) -> i64 {
        self.q_sign(i) as i64
    }

    pub fn is_odd(&self, i: usize, j: usize) -> bool {
        i <= self.m && self.m < j
    }

    pub fn contains(&self, r: RootIndex) -> bool {
        1 <= r.i && r.i < r.j && r.j <= self.rank()
    }

    /// Even positive roots in lexicographic order.
    pub fn i0(&self) -> Vec<RootIndex> {
        self.positive_roots().into_iter().filter(|r| !self.is_odd(r.i, r.j)).collect()
    }

    /// Odd positive roots in lexicographic order.
    pub fn i1(&self) -> Vec<RootIndex> {
        self.positive_roots().into_iter().filter(|r| self.is_odd(r.i, r.j)).collect()
    }

    pub fn positive_roots(&self) -> Vec<RootIndex> {
        let k = self.rank();
        let mut v = Vec::new();
        for i in 1..=k {
            for j in i + 1..=k {
                v.push(RootIndex::new(i, j));
            }
        }
        v
    }

    fn check(&self, w: &Weight) -> Result<(), RootDataError> {
        if w.eps.len() != self.rank() {
            return Err(RootDataError::ShapeMismatch { want: self.rank(), got: w.eps.len() });
        }
        Ok(())
    }

    /// The form with (ε_i, ε_j) = δ_ij for i ≤ m and −δ_ij for i > m.
    pub fn bilinear_form(&self, a: &Weight, b: &Weight) -> Result<i64, RootDataError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.form(&a.eps, &b.eps))
    }

    pub(crate) fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).enumerate().map(|(k, (x, y))| self.eps_norm(k + 1) * x * y).sum()
    }

    /// Unit vector ε_i.
    pub fn epsilon(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[i - 1] = 1;
        Weight::new(v)
    }

    /// ε_i − ε_j as a coordinate vector.
    pub fn root_vector(&self, i: usize, j: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        v
    }

    /// 2ρ = 2ρ₀ − 2ρ₁ as an integer vector.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for r in self.positive_roots() {
            let s = if self.is_odd(r.i, r.j) { -1 } else { 1 };
            v[r.i - 1] += s;
            v[r.j - 1] -= s;
        }
        v
    }

    /// c(i,j) = i + j − 2m − 1 for odd roots.
    pub fn c_value(&self, i: usize, j: usize) -> Result<i64, RootDataError> {
        if !(i < j && j <= self.rank() && self.is_odd(i, j)) {
            return Err(RootDataError::NotOdd(i, j));
        }
        Ok(i as i64 + j as i64 - 2 * self.m as i64 - 1)
    }

    /// P(λ) = Π over odd positive roots α of (λ + ρ, α).
    pub fn p_factor(&self, lam: &Weight) -> Result<i64, RootDataError> {
        self.check(lam)?;
        let tr = self.two_rho();
        let shifted: Vec<i64> = lam.eps.iter().zip(&tr).map(|(l, r)| 2 * l + r).collect();
        let mut p = 1i64;
        for r in self.i1() {
            let twice = self.form(&shifted, &self.root_vector(r.i, r.j));
            assert!(twice % 2 == 0, "(λ+ρ, α) must be integral on odd roots");
            p *= twice / 2;
        }
        Ok(p)
    }

    /// Typicality, decided both through P(λ) and through the c(i,j) test.
    pub fn is_typical(&self, lam: &Weight) -> Result<bool, RootDataError> {
        let via_p = self.p_factor(lam)? != 0;
        let via_c = self.i1().iter().all(|r| {
            lam.eps[r.i - 1] + lam.eps[r.j - 1] != self.c_value(r.i, r.j).unwrap()
        });
        assert_eq!(via_p, via_c, "typicality tests disagree");
        Ok(via_p)
    }

    /// z_i = λ_i − (−1)^{δ_im} λ_{i+1}, z_{m+n} = λ_{m+n}.
    pub fn weight_to_z(&self, lam: &Weight) -> Result<Vec<i64>, RootDataError> {
        self.check(lam)?;
        let k = self.rank();
        let l = &lam.eps;
        Ok((1..=k)
            .map(|i| {
                if i == k {
                    l[i - 1]
                } else if i == self.m {
                    l[i - 1] + l[i]
                } else {
                    l[i - 1] - l[i]
                }
            })
            .collect())
    }

    pub fn z_to_weight(&self, z: &[i64]) -> Result<Weight, RootDataError> {
        let k = self.rank();
        if z.len() != k {
            return Err(RootDataError::ShapeMismatch { want: k, got: z.len() });
        }
        let mut l = vec![0i64; k];
        l[k - 1] = z[k - 1];
        for i in (1..k).rev() {
            l[i - 1] = if i == self.m { z[i - 1] - l[i] } else { z[i - 1] + l[i] };
        }
        Ok(Weight::new(l))
    }

    /// Indices whose z-coordinate is constrained by dominance (all but m and m+n).
    pub fn constrained(&self, i: usize) -> bool {
        i != self.m && i != self.rank()
    }

    /// λ₁ ≥ … ≥ λ_m and λ_{m+1} ≥ … ≥ λ_{m+n}.
    pub fn in_xplus(&self, lam: &Weight) -> Result<bool, RootDataError> {
        self.check(lam)?;
        let l = &lam.eps;
        Ok((1..self.rank()).filter(|&i| i != self.m).all(|i| l[i - 1] >= l[i]))
    }

    /// z_i ≥ 0 at constrained indices.
    pub fn in_zplus(&self, z: &[i64]) -> bool {
        z.len() == self.rank() && (1..=self.rank()).all(|i| !self.constrained(i) || z[i - 1] >= 0)
    }

    /// 0 ≤ z_i ≤ l − 1 at constrained indices.
    pub fn in_xplus_l(&self, z: &[i64], l: u32) -> bool {
        let l = l as i64;
        z.len() == self.rank()
            && (1..=self.rank()).all(|i| !self.constrained(i) || (0..l).contains(&z[i - 1]))
    }

    /// Writes z = z' + l·z'' with z' ∈ ℤ_l and z'' ∈ ℤ₊.
    ///
    /// Constrained coordinates are split by Euclidean division. The
    /// unconstrained coordinates m and m+n are not restricted in z', so they
    /// stay there whole and z'' is zero at those indices.
    pub fn frobenius_decompose(
        &self,
        z: &[i64],
        l: u32,
    ) -> Result<(Vec<i64>, Vec<i64>), RootDataError> {
        if l < 3 || l % 2 == 0 {
            return Err(RootDataError::BadOrder(l));
        }
        if !self.in_zplus(z) {
            return Err(RootDataError::NotDominantZ);
        }
        let li = l as i64;
        let mut a = Vec::with_capacity(z.len());
        let mut b = Vec::with_capacity(z.len());
        for (k, &x) in z.iter().enumerate() {
            if self.constrained(k + 1) {
                a.push(x.rem_euclid(li));
                b.push(x.div_euclid(li));
            } else {
                a.push(x);
                b.push(0);
            }
        }
        Ok((a, b))
    }

    /// Entry of the augmented distinguished Cartan matrix, `i ∈ [1,m+n]`, `j ∈ [1,m+n)`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i64, RootDataError> {
        let k = self.rank();
        if i == 0 || i > k {
            return Err(RootDataError::BadIndex(i));
        }
        if j == 0 || j >= k {
            return Err(RootDataError::BadIndex(j));
        }
        if i == k {
            return Ok(if j == k - 1 { -1 } else { 0 });
        }
        Ok(if i == j {
            if i == self.m {
                0
            } else {
                2
            }
        } else if (i, j) == (self.m, self.m + 1) {
            1
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        })
    }

    /// Simple root α_i as an ε-vector; α_{m+n} is taken to be ε_{m+n}.
    pub fn alpha(&self, i: usize) -> Vec<i64> {
        if i == self.rank() {
            let mut v = vec![0; self.rank()];
            v[i - 1] = 1;
            v
        } else {
            self.root_vector(i, i + 1)
        }
    }

    /// Dimension of the simple gl(k)-module with highest weight `lam` (Weyl's formula).
    pub fn weyl_dim_block(lam: &[i64]) -> u64 {
        let k = lam.len();
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..k {
            for j in i + 1..k {
                num *= (lam[i] - lam[j] + (j - i) as i64) as i128;
                den *= (j - i) as i128;
            }
        }
        (num / den) as u64
    }

    /// Product of the Weyl dimensions of the two even blocks.
    pub fn even_dimension(&self, lam: &Weight) -> u64 {
        Self::weyl_dim_block(&lam.eps[..self.m]) * Self::weyl_dim_block(&lam.eps[self.m..])
    }
}
