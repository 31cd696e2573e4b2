//! Integer linear algebra over free abelian groups.
//!
//! Matrices act on column vectors: a `rows x cols` map sends `Z^cols` to
//! `Z^rows`. Hermite and Smith forms use a fixed pivot rule (smallest
//! nonzero absolute value, ties broken by lowest index) so every output is
//! reproducible.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Int, IntVec, Rat, RatVec, Result};

/// Integer matrix between free abelian groups, with optional labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    rows: usize,
    cols: usize,
    entries: Vec<IntVec>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl LatticeMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<IntVec>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "entry grid does not have shape {rows}x{cols}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
            row_labels: None,
            col_labels: None,
        })
    }

    /// Matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<IntVec>) -> Result<Self> {
        Self::new(rows.len(), cols, rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[IntVec]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension(format!("columns must have length {rows}")));
        }
        let entries = (0..rows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Self::new(rows, columns.len(), entries)
    }

    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(cols, crate::ivecs(rows)).expect("ragged i64 matrix")
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![vec![Int::zero(); cols]; rows]).unwrap()
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = Int::one();
        }
        m
    }

    pub fn diagonal(diag: &[Int]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i][i] = d.clone();
        }
        m
    }

    pub fn with_labels(mut self, rows: Option<Vec<String>>, cols: Option<Vec<String>>) -> Self {
        self.row_labels = rows.filter(|l| l.len() == self.rows);
        self.col_labels = cols.filter(|l| l.len() == self.cols);
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn entries(&self) -> &[IntVec] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &IntVec {
        &self.entries[i]
    }

    pub fn column(&self, j: usize) -> IntVec {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols).map(|j| self.column(j)).collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    pub fn mul(&self, other: &LatticeMap) -> Result<LatticeMap> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|r| {
                (0..other.cols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.entries)
                            .fold(Int::zero(), |acc, (a, orow)| acc + a * &orow[j])
                    })
                    .collect()
            })
            .collect();
        LatticeMap::new(self.rows, other.cols, entries)
    }

    pub fn apply(&self, v: &[Int]) -> Result<IntVec> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} applied to a map with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self.entries.iter().map(|r| dot(r, v)).collect())
    }

    /// Sub-matrix made of the given columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> LatticeMap {
        let cols: Vec<IntVec> = idx.iter().map(|&j| self.column(j)).collect();
        LatticeMap::from_columns(self.rows, &cols).unwrap()
    }

    pub fn select_rows(&self, idx: &[usize]) -> LatticeMap {
        LatticeMap::from_rows(self.cols, idx.iter().map(|&i| self.entries[i].clone()).collect())
            .unwrap()
    }

    pub fn rank(&self) -> usize {
        rank(&self.entries)
    }

    pub fn determinant(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(determinant(&self.entries))
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && determinant(&self.entries).abs().is_one()
    }

    /// Exact inverse over the rationals.
    pub fn inverse_rational(&self) -> Result<Vec<RatVec>> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        inverse_rational(&self.entries).ok_or(Error::Singular)
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<LatticeMap> {
        let inv = self.inverse_rational()?;
        let mut rows = Vec::with_capacity(self.rows);
        for r in inv {
            let mut row = Vec::with_capacity(self.cols);
            for x in r {
                if !x.is_integer() {
                    return Err(Error::Invalid("matrix is not unimodular".into()));
                }
                row.push(x.to_integer());
            }
            rows.push(row);
        }
        LatticeMap::from_rows(self.cols, rows)
    }
}

impl fmt::Display for LatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// vector helpers

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_rat(a: &[Int], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + y * Rat::from_integer(x.clone()))
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn gcd_vec(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> IntVec {
    let g = gcd_vec(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_primitive(v: &[Int]) -> bool {
    gcd_vec(v).is_one()
}

pub fn add_vec(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Int, v: &[Int]) -> IntVec {
    v.iter().map(|x| c * x).collect()
}

pub fn neg_vec(v: &[Int]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Clears denominators: returns `(d, w)` with `v = w / d`, `d > 0` minimal.
pub fn clear_denominators(v: &[Rat]) -> (Int, IntVec) {
    let d = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let w = v.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (d, w)
}

/// Reduces a rational vector into `[0,1)` componentwise.
pub fn normalize_phase(v: &[Rat]) -> RatVec {
    v.iter().map(|x| x - x.floor()).collect()
}

/// Same direction test for nonzero integer vectors: `a = t b` with `t > 0`.
pub fn same_ray(a: &[Int], b: &[Int]) -> bool {
    primitive(a) == primitive(b) && !is_zero_vec(a)
}

// ---------------------------------------------------------------------------
// rank, determinant, inverse

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[IntVec]) -> usize {
    let mut m: Vec<IntVec> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            let g = gcd_vec(&m[i]);
            if !g.is_zero() && !g.is_one() {
                for x in m[i].iter_mut() {
                    *x /= &g;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant by Bareiss elimination.
pub fn determinant(rows: &[IntVec]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::one();
    }
    let mut m = rows.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn inverse_rational(rows: &[IntVec]) -> Option<Vec<RatVec>> {
    let n = rows.len();
    let mut a: Vec<RatVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = to_rat_vec(r);
            v.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = Rat::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `A x = b` over the rationals, returning one solution if any.
pub fn solve_rational(a: &LatticeMap, b: &[Rat]) -> Option<RatVec> {
    let (m, n) = (a.rows(), a.cols());
    let mut aug: Vec<RatVec> = (0..m)
        .map(|i| {
            let mut r = to_rat_vec(a.row(i));
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = Rat::one() / &aug[r][c];
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        let pr = aug[r].clone();
        for i in 0..m {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for (x, y) in aug[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// Hermite normal form

fn min_abs_index<'a>(it: impl Iterator<Item = (usize, &'a Int)>) -> Option<usize> {
    let mut best: Option<(usize, Int)> = None;
    for (i, x) in it {
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        match &best {
            Some((_, b)) if *b <= a => {}
            _ => best = Some((i, a)),
        }
    }
    best.map(|(i, _)| i)
}

fn row_axpy(rows: &mut [IntVec], target: usize, q: &Int, source: usize) {
    if q.is_zero() {
        return;
    }
    let src = rows[source].clone();
    for (x, y) in rows[target].iter_mut().zip(&src) {
        *x -= q * y;
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `H = U A`, `U`
/// unimodular, `H` in echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)` and zero rows last.
pub fn hnf(a: &LatticeMap) -> (LatticeMap, LatticeMap) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.entries.clone();
    let mut u = LatticeMap::identity(m).entries;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let Some(p) = min_abs_index((r..m).map(|i| (i, &h[i][c]))) else {
                break;
            };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in (r + 1)..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            h[r] = neg_vec(&h[r]);
            u[r] = neg_vec(&u[r]);
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_axpy(&mut h, i, &q, r);
            row_axpy(&mut u, i, &q, r);
        }
        r += 1;
    }
    (
        LatticeMap::new(m, n, h).unwrap(),
        LatticeMap::new(m, m, u).unwrap(),
    )
}

/// Canonical basis (HNF rows, zero rows dropped) of the lattice spanned by
/// the given vectors.
pub fn lattice_basis(dim: usize, gens: &[IntVec]) -> Vec<IntVec> {
    let m = LatticeMap::from_rows(dim, gens.to_vec()).expect("generators of wrong length");
    let (h, _) = hnf(&m);
    h.entries
        .into_iter()
        .filter(|r| !is_zero_vec(r))
        .collect()
}

// ---------------------------------------------------------------------------
// Smith normal form

/// `U A V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`, all nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: LatticeMap,
    pub d: LatticeMap,
    pub v: LatticeMap,
}

impl SmithDecomposition {
    /// Diagonal entries, including zeros, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<Int> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }
}

fn col_axpy(rows: &mut [IntVec], target: usize, q: &Int, source: usize) {
    if q.is_zero() {
        return;
    }
    for r in rows.iter_mut() {
        let s = r[source].clone();
        r[target] -= q * s;
    }
}

fn swap_cols(rows: &mut [IntVec], a: usize, b: usize) {
    if a != b {
        for r in rows.iter_mut() {
            r.swap(a, b);
        }
    }
}

pub fn snf(a: &LatticeMap) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.entries.clone();
    let mut u = LatticeMap::identity(m).entries;
    let mut v = LatticeMap::identity(n).entries;
    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block, row-major ties
            let mut best: Option<(usize, usize, Int)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &d[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    let ax = x.abs();
                    if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                        best = Some((i, j, ax));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                break;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in (t + 1)..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, &q, t);
                row_axpy(&mut u, i, &q, t);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, &q, t);
                col_axpy(&mut v, j, &q, t);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = d[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    // pull the offending row into the pivot row and retry
                    let q = -Int::one();
                    row_axpy(&mut d, t, &q, i);
                    row_axpy(&mut u, t, &q, i);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            d[t] = neg_vec(&d[t]);
            u[t] = neg_vec(&u[t]);
        }
    }
    SmithDecomposition {
        u: LatticeMap::new(m, m, u).unwrap(),
        d: LatticeMap::new(m, n, d).unwrap(),
        v: LatticeMap::new(n, n, v).unwrap(),
    }
}

// ---------------------------------------------------------------------------
// kernels, cokernels, solving

/// Saturated basis of `{x : A x = 0}`, returned as the columns of a
/// `cols x k` matrix in Hermite-reduced form.
pub fn kernel_basis(a: &LatticeMap) -> LatticeMap {
    let (h, u) = hnf(&a.transpose());
    let r = h.entries.iter().filter(|row| !is_zero_vec(row)).count();
    let raw: Vec<IntVec> = u.entries[r..].to_vec();
    let basis = lattice_basis(a.cols(), &raw);
    LatticeMap::from_columns(a.cols(), &basis).unwrap()
}

/// `Z^rows / im(A)` as free rank plus torsion with integer lifts of the
/// torsion generators in the codomain.
pub fn cokernel(a: &LatticeMap) -> (usize, FiniteAbelianGroup) {
    let s = snf(a);
    let diag = s.diagonal();
    let r = s.rank();
    let free_rank = a.rows() - r;
    let uinv = s.u.inverse_unimodular().expect("unimodular by construction");
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    for (i, di) in diag.iter().enumerate().take(r) {
        if di.is_one() {
            continue;
        }
        factors.push(di.clone());
        lifts.push(uinv.column(i));
    }
    (
        free_rank,
        FiniteAbelianGroup {
            invariant_factors: factors,
            generators: GroupGenerators::Classes(lifts),
        },
    )
}

/// Some integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &LatticeMap, b: &[Int]) -> Option<IntVec> {
    if b.len() != a.rows() {
        return None;
    }
    let s = snf(a);
    let ub = s.u.apply(b).ok()?;
    let diag = s.diagonal();
    let mut y = vec![Int::zero(); a.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(Int::zero);
        if di.is_zero() {
            if !ubi.is_zero() {
                return None;
            }
        } else {
            let (q, rem) = ubi.div_rem(&di);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    s.v.apply(&y).ok()
}

/// Basis (as columns) of `{m in Z^n : m . q in Z for every phase q}`.
pub fn annihilator_lattice(phases: &[RatVec], ambient_rank: usize) -> Result<LatticeMap> {
    if phases.iter().any(|q| q.len() != ambient_rank) {
        return Err(Error::Dimension(format!(
            "phase vectors must have length {ambient_rank}"
        )));
    }
    if phases.is_empty() {
        return Ok(LatticeMap::identity(ambient_rank));
    }
    let all: Vec<Rat> = phases.iter().flatten().cloned().collect();
    let (den, _) = clear_denominators(&all);
    let k = phases.len();
    // rows: [d q_j | den e_j]; the kernel projected to the first block is M
    let rows: Vec<IntVec> = phases
        .iter()
        .enumerate()
        .map(|(j, q)| {
            let mut row: IntVec = q
                .iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect();
            row.extend((0..k).map(|i| if i == j { den.clone() } else { Int::zero() }));
            row
        })
        .collect();
    let big = LatticeMap::from_rows(ambient_rank + k, rows)?;
    let ker = kernel_basis(&big);
    let gens: Vec<IntVec> = ker
        .columns()
        .into_iter()
        .map(|c| c[..ambient_rank].to_vec())
        .collect();
    let basis = lattice_basis(ambient_rank, &gens);
    LatticeMap::from_columns(ambient_rank, &basis)
}

// ---------------------------------------------------------------------------
// finite abelian groups

/// How the generators of a [`FiniteAbelianGroup`] are realized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupGenerators {
    /// Phase vectors in `[0,1)^n`, i.e. elements of `(Q/Z)^n` acting on a
    /// torus by `x_i -> exp(2 pi i q_i) x_i`.
    Phases(Vec<RatVec>),
    /// Integer representatives of classes in a cokernel.
    Classes(Vec<IntVec>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<Int>,
    generators: GroupGenerators,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
            generators: GroupGenerators::Phases(Vec::new()),
        }
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> &GroupGenerators {
        &self.generators
    }

    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Isomorphism of finite abelian groups: equal invariant factors.
    pub fn is_isomorphic(&self, other: &FiniteAbelianGroup) -> bool {
        self.invariant_factors == other.invariant_factors
    }

    /// The finite group `Hom(Z^n / L, Q/Z)` for a full-rank sublattice
    /// `L` given by the columns of `basis`. Its phase generators are the
    /// rows of `U` divided by the invariant factors, where `U L V = D`.
    pub fn dual_of_quotient(basis: &LatticeMap) -> Result<Self> {
        if !basis.is_square() || basis.rank() != basis.rows() {
            return Err(Error::Invalid(
                "sublattice must have full rank in its ambient lattice".into(),
            ));
        }
        let s = snf(basis);
        let mut factors = Vec::new();
        let mut phases = Vec::new();
        for (i, di) in s.diagonal().iter().enumerate() {
            if di.is_one() {
                continue;
            }
            factors.push(di.clone());
            let q: RatVec = s
                .u
                .row(i)
                .iter()
                .map(|x| Rat::new(x.clone(), di.clone()))
                .collect();
            phases.push(normalize_phase(&q));
        }
        Ok(Self {
            invariant_factors: factors,
            generators: GroupGenerators::Phases(phases),
        })
    }

    /// Subgroup of `(Q/Z)^n` generated by the phases, in invariant-factor
    /// form.
    pub fn generated_by(phases: &[RatVec], ambient_rank: usize) -> Result<Self> {
        let m = annihilator_lattice(phases, ambient_rank)?;
        Self::dual_of_quotient(&m)
    }

    /// Invariant factors of a finite quotient `big / small` of lattices,
    /// both given by column bases of equal rank with `small` inside `big`.
    pub fn lattice_quotient(big: &LatticeMap, small: &LatticeMap) -> Result<Self> {
        let mut coords = Vec::new();
        for c in small.columns() {
            let x = solve_integer(big, &c).ok_or_else(|| {
                Error::Invalid("sublattice is not contained in the lattice".into())
            })?;
            coords.push(x);
        }
        let m = LatticeMap::from_columns(big.cols(), &coords)?;
        if m.rank() != big.cols() {
            return Err(Error::Invalid("quotient of lattices is not finite".into()));
        }
        let (_, g) = cokernel(&m);
        Ok(g)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Order of a phase vector in `(Q/Z)^n`: lcm of the reduced denominators.
pub fn phase_order(q: &[Rat]) -> Int {
    normalize_phase(q)
        .iter()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}
