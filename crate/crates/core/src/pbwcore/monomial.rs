use std::cmp::Ordering;

use crate::rootdata::{RootIndex, Shape};

/// One PBW basis word `F₁^d F₀^ψ K_μ E₀^ψ' E₁^d'` with ordinary powers.
///
/// `f` and `e` are exponent vectors indexed by root id (see [`RootTable`]);
/// E-atoms appear in increasing id order, F-atoms in decreasing id order, so
/// the F side is the mirror image of the E side. Odd exponents are 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub(crate) f: Vec<u32>,
    pub(crate) k: Vec<i64>,
    pub(crate) e: Vec<u32>,
}

/// Root ids: the even roots in lexicographic order, then the odd roots in
/// lexicographic order. This is the E-side factor order.
#[derive(Clone, Debug)]
pub struct RootTable {
    pub shape: Shape,
    pub roots: Vec<RootIndex>,
    pub n_even: usize,
    index: Vec<Vec<Option<usize>>>,
}

impl RootTable {
    pub fn new(shape: Shape) -> Self {
        let mut roots = shape.i0();
        let n_even = roots.len();
        roots.extend(shape.i1());
        let k = shape.rank();
        let mut index = vec![vec![None; k + 1]; k + 1];
        for (id, r) in roots.iter().enumerate() {
            index[r.i][r.j] = Some(id);
        }
        RootTable { shape, roots, n_even, index }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn id(&self, i: usize, j: usize) -> Option<usize> {
        self.index.get(i).and_then(|row| row.get(j)).copied().flatten()
    }

    pub fn root(&self, id: usize) -> RootIndex {
        self.roots[id]
    }

    pub fn is_odd(&self, id: usize) -> bool {
        id >= self.n_even
    }

    /// Id of the simple root α_c.
    pub fn simple(&self, c: usize) -> usize {
        self.id(c, c + 1).expect("simple root index out of range")
    }
}

impl Monomial {
    pub fn identity(table: &RootTable) -> Self {
        Monomial {
            f: vec![0; table.len()],
            k: vec![0; table.shape.rank()],
            e: vec![0; table.len()],
        }
    }

    /// Exponents of F-atoms indexed by root id.
    pub fn f_exponents(&self) -> &[u32] {
        &self.f
    }

    /// Exponents of K₁…K_{m+n}.
    pub fn k_exponents(&self) -> &[i64] {
        &self.k
    }

    /// Exponents of E-atoms indexed by root id.
    pub fn e_exponents(&self) -> &[u32] {
        &self.e
    }

    pub fn is_identity(&self) -> bool {
        self.f.iter().all(|&x| x == 0) && self.e.iter().all(|&x| x == 0) && self.k.iter().all(|&x| x == 0)
    }

    pub fn degree(&self) -> u32 {
        self.f.iter().sum::<u32>() + self.e.iter().sum::<u32>()
    }

    /// Number of odd atoms mod 2.
    pub fn parity(&self, table: &RootTable) -> u8 {
        let odd: u32 = (table.n_even..table.len()).map(|id| self.f[id] + self.e[id]).sum();
        (odd % 2) as u8
    }

    /// Weight in ε-coordinates: E_ij adds ε_i − ε_j, F_ij subtracts it.
    pub fn weight(&self, table: &RootTable) -> Vec<i64> {
        let mut w = vec![0i64; table.shape.rank()];
        for (id, r) in table.roots.iter().enumerate() {
            let d = self.e[id] as i64 - self.f[id] as i64;
            w[r.i - 1] += d;
            w[r.j - 1] -= d;
        }
        w
    }

    /// Odd F exponents in F-side order (reversed lexicographic).
    pub fn fd(&self, table: &RootTable) -> Vec<u32> {
        (table.n_even..table.len()).rev().map(|id| self.f[id]).collect()
    }

    /// Even F exponents in F-side order (reversed lexicographic).
    pub fn fpsi(&self, table: &RootTable) -> Vec<u32> {
        (0..table.n_even).rev().map(|id| self.f[id]).collect()
    }

    pub fn epsi(&self, table: &RootTable) -> Vec<u32> {
        self.e[..table.n_even].to_vec()
    }

    pub fn ed(&self, table: &RootTable) -> Vec<u32> {
        self.e[table.n_even..].to_vec()
    }

    /// Inverse of the accessors above.
    pub fn from_parts(
        table: &RootTable,
        fd: &[u32],
        fpsi: &[u32],
        k: &[i64],
        epsi: &[u32],
        ed: &[u32],
    ) -> Option<Self> {
        let ne = table.n_even;
        let no = table.len() - ne;
        if fd.len() != no || ed.len() != no || fpsi.len() != ne || epsi.len() != ne {
            return None;
        }
        if k.len() != table.shape.rank() {
            return None;
        }
        if fd.iter().chain(ed).any(|&x| x > 1) {
            return None;
        }
        let mut f = vec![0; table.len()];
        for (pos, id) in (ne..table.len()).rev().enumerate() {
            f[id] = fd[pos];
        }
        for (pos, id) in (0..ne).rev().enumerate() {
            f[id] = fpsi[pos];
        }
        let mut e = epsi.to_vec();
        e.extend_from_slice(ed);
        Some(Monomial { f, k: k.to_vec(), e })
    }

    /// Atoms in word order: `(is_f, root id, power)` for F and E atoms.
    pub fn f_atoms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.f.len()).rev().filter(move |&id| self.f[id] > 0).map(move |id| (id, self.f[id]))
    }

    pub fn e_atoms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.e.len()).filter(move |&id| self.e[id] > 0).map(move |id| (id, self.e[id]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| o.f.cmp(&self.f))
            .then_with(|| self.k.cmp(&o.k))
            .then_with(|| o.e.cmp(&self.e))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
