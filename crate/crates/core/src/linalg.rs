//! Dense exact linear algebra over a [`Field`].

use crate::scalars::Field;

/// Row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        Matrix { rows, cols, data: vec![proto.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros(n, n, proto);
        for i in 0..n {
            m.data[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows);
        let proto = self.data.first().or(o.data.first());
        let Some(proto) = proto else {
            return Matrix { rows: self.rows, cols: o.cols, data: Vec::new() };
        };
        let mut out = Self::zeros(self.rows, o.cols, proto);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Field>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    if !rows[r][j].is_zero() {
                        let v = rows[i][j].sub(&f.mul(&rows[r][j]));
                        rows[i][j] = v;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace<T: Field>(rows: &[Vec<T>], ncols: usize, proto: &T) -> Vec<Vec<T>> {
    let mut m = rows.to_vec();
    let piv = rref(&mut m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![proto.zero_like(); ncols];
        v[free] = proto.one_like();
        for (r, &pc) in piv.iter().enumerate() {
            v[pc] = m[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// Solves `A x = b` for square or overdetermined consistent systems.
/// `cols` are the columns of `A`. Returns `None` if there is no solution.
pub fn solve_columns<T: Field>(cols: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = cols.len();
    let m = b.len();
    let mut rows: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let mut r: Vec<T> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let piv = rref(&mut rows);
    if piv.contains(&n) {
        return None;
    }
    let proto = &b[0];
    let mut x = vec![proto.zero_like(); n];
    for (r, &pc) in piv.iter().enumerate() {
        x[pc] = rows[r][n].clone();
    }
    Some(x)
}
