//! Exact linear algebra for every supported coefficient ring.
//!
//! The integer engine is Smith normal form with tracked unimodular
//! transforms: `snf` returns `(U, D, V)` with `U * A * V = D`, `D` diagonal
//! with a divisibility chain, and `U`, `V` of determinant plus or minus one.
//! Modular rings solve by lifting `A x = b` to the integer system
//! `[A | n*I] [x; z] = b`; prime fields run reduced row echelon with a
//! recorded row transform; products of fields work componentwise.
//!
//! Kernels are returned as matrices whose columns generate the solution
//! module of `A x = 0`. Over a field or the integers the columns are a
//! basis; over `Z/n` they are only guaranteed to generate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::ring::{RingElement, RingSpec};

/// Result of `snf`: `u * a * v = d` for the input `a`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl SmithDecomposition {
    /// The diagonal of `d`, length `min(rows, cols)`. Entries are
    /// non-negative and each divides the next (zeros trail).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.entry_bigint(i, i))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form of an integer matrix.
pub fn snf(a: &Matrix) -> SmithDecomposition {
    assert!(
        matches!(a.ring, RingSpec::Integers),
        "Smith normal form is computed over the integers"
    );
    let raw: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|i| (0..a.cols).map(|j| a.entry_bigint(i, j)).collect())
        .collect();
    let (u, d, v) = snf_raw(raw, a.rows, a.cols);
    let z = RingSpec::integers();
    let wrap = |m: &[Vec<BigInt>], rows: usize, cols: usize| {
        Matrix::from_fn(&z, rows, cols, |i, j| RingElement::Int(m[i][j].clone()))
    };
    SmithDecomposition {
        u: wrap(&u, a.rows, a.rows),
        d: wrap(&d, a.rows, a.cols),
        v: wrap(&v, a.cols, a.cols),
    }
}

fn identity_raw(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// row_i += c * row_j
fn row_addmul(m: &mut [Vec<BigInt>], i: usize, j: usize, c: &BigInt) {
    let cols = m[i].len();
    for k in 0..cols {
        let t = c * &m[j][k];
        m[i][k] += t;
    }
}

/// col_i += c * col_j
fn col_addmul(m: &mut [Vec<BigInt>], i: usize, j: usize, c: &BigInt) {
    for row in m.iter_mut() {
        let t = c * &row[j];
        row[i] += t;
    }
}

/// Replace rows (i, j) by (x*row_i + y*row_j, z*row_i + w*row_j).
fn row_combine(
    m: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    z: &BigInt,
    w: &BigInt,
) {
    let cols = m[i].len();
    for k in 0..cols {
        let ai = m[i][k].clone();
        let aj = m[j][k].clone();
        m[i][k] = x * &ai + y * &aj;
        m[j][k] = z * &ai + w * &aj;
    }
}

/// Replace columns (i, j) by (x*col_i + y*col_j, z*col_i + w*col_j).
fn col_combine(
    m: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    z: &BigInt,
    w: &BigInt,
) {
    for row in m.iter_mut() {
        let ai = row[i].clone();
        let aj = row[j].clone();
        row[i] = x * &ai + y * &aj;
        row[j] = z * &ai + w * &aj;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn egcd_big(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    let (mut g, mut x, mut y) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        x = -x;
        y = -y;
    }
    (g, x, y)
}

fn snf_raw(
    mut a: Vec<Vec<BigInt>>,
    m: usize,
    n: usize,
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut u = identity_raw(m);
    let mut v = identity_raw(n);
    let mn = m.min(n);

    let mut t = 0;
    while t < mn {
        // Pivot: the nonzero entry of smallest magnitude in the trailing
        // block. Small pivots keep intermediate entries from exploding.
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j].is_zero() {
                    continue;
                }
                let mag = a[i][j].abs();
                if best.as_ref().map_or(true, |(_, _, b)| mag < *b) {
                    best = Some((i, j, mag));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        if pi != t {
            a.swap(pi, t);
            u.swap(pi, t);
        }
        if pj != t {
            col_swap(&mut a, pj, t);
            col_swap(&mut v, pj, t);
        }

        // Clear row and column t. A gcd column step can re-dirty the column
        // (it mixes in a column with entries below row t), but it strictly
        // shrinks the pivot, so the loop terminates.
        loop {
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                if (&a[i][t] % &a[t][t]).is_zero() {
                    let q = -(&a[i][t] / &a[t][t]);
                    row_addmul(&mut a, i, t, &q);
                    row_addmul(&mut u, i, t, &q);
                } else {
                    let (g, x, y) = egcd_big(&a[t][t].clone(), &a[i][t].clone());
                    let zc = -(&a[i][t] / &g);
                    let wc = &a[t][t] / &g;
                    row_combine(&mut a, t, i, &x, &y, &zc, &wc);
                    row_combine(&mut u, t, i, &x, &y, &zc, &wc);
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                if (&a[t][j] % &a[t][t]).is_zero() {
                    let q = -(&a[t][j] / &a[t][t]);
                    col_addmul(&mut a, j, t, &q);
                    col_addmul(&mut v, j, t, &q);
                } else {
                    let (g, x, y) = egcd_big(&a[t][t].clone(), &a[t][j].clone());
                    let zc = -(&a[t][j] / &g);
                    let wc = &a[t][t] / &g;
                    col_combine(&mut a, t, j, &x, &y, &zc, &wc);
                    col_combine(&mut v, t, j, &x, &y, &zc, &wc);
                }
            }
            let col_clean = (t + 1..m).all(|i| a[i][t].is_zero());
            let row_clean = (t + 1..n).all(|j| a[t][j].is_zero());
            if col_clean && row_clean {
                break;
            }
        }
        t += 1;
    }

    // Divisibility chain: for a bad adjacent pair (d, e), fold e into row i
    // and run a gcd column step; the pair becomes (gcd(d,e), d*e/gcd(d,e)).
    loop {
        let mut changed = false;
        for i in 0..mn.saturating_sub(1) {
            let di = a[i][i].clone();
            let dj = a[i + 1][i + 1].clone();
            if dj.is_zero() {
                continue;
            }
            if !di.is_zero() && (&dj % &di).is_zero() {
                continue;
            }
            let one = BigInt::one();
            row_addmul(&mut a, i, i + 1, &one);
            row_addmul(&mut u, i, i + 1, &one);
            let (g, x, y) = egcd_big(&di, &dj);
            let zc = -(&dj / &g);
            let wc = &di / &g;
            col_combine(&mut a, i, i + 1, &x, &y, &zc, &wc);
            col_combine(&mut v, i, i + 1, &x, &y, &zc, &wc);
            let q = -(&a[i + 1][i] / &a[i][i]);
            row_addmul(&mut a, i + 1, i, &q);
            row_addmul(&mut u, i + 1, i, &q);
            changed = true;
        }
        if !changed {
            break;
        }
    }

    for i in 0..mn {
        if a[i][i].is_negative() {
            for x in &mut a[i] {
                *x = -std::mem::take(x);
            }
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    (u, a, v)
}

/// Integer solver backed by a Smith decomposition of the lifted matrix.
#[derive(Clone, Debug)]
struct IntSolver {
    m: usize,
    n: usize,
    u: Vec<Vec<BigInt>>,
    diag: Vec<BigInt>,
    v: Vec<Vec<BigInt>>,
}

impl IntSolver {
    fn build(entries: Vec<Vec<BigInt>>, m: usize, n: usize) -> Self {
        let (u, d, v) = snf_raw(entries, m, n);
        let diag = (0..m.min(n)).map(|i| d[i][i].clone()).collect();
        IntSolver { m, n, u, diag, v }
    }

    fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.m);
        let ub: Vec<BigInt> = (0..self.m)
            .map(|i| {
                (0..self.m).fold(BigInt::zero(), |acc, k| acc + &self.u[i][k] * &b[k])
            })
            .collect();
        let mut y = vec![BigInt::zero(); self.n];
        for i in 0..self.m {
            let pivot = self.diag.get(i).filter(|d| !d.is_zero());
            match pivot {
                Some(d) => {
                    let (q, r) = ub[i].div_rem(d);
                    if !r.is_zero() {
                        return None;
                    }
                    y[i] = q;
                }
                None => {
                    if !ub[i].is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(
            (0..self.n)
                .map(|i| {
                    (0..self.n).fold(BigInt::zero(), |acc, k| acc + &self.v[i][k] * &y[k])
                })
                .collect(),
        )
    }

    /// Basis of the integer kernel: the columns of `v` past the rank.
    fn kernel(&self) -> Vec<Vec<BigInt>> {
        let r = self.diag.iter().filter(|d| !d.is_zero()).count();
        (r..self.n)
            .map(|j| (0..self.n).map(|i| self.v[i][j].clone()).collect())
            .collect()
    }
}

/// Row echelon solver for a prime field, all residues canonical.
#[derive(Clone, Debug)]
struct FieldSolver {
    p: u64,
    m: usize,
    n: usize,
    /// Row transform with e * a in reduced row echelon form.
    e: Vec<Vec<u64>>,
    r: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl FieldSolver {
    fn build(p: u64, mut r: Vec<Vec<u64>>, m: usize, n: usize) -> Self {
        let mut e: Vec<Vec<u64>> = (0..m)
            .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(src) = (row..m).find(|&i| r[i][col] != 0) else {
                continue;
            };
            r.swap(row, src);
            e.swap(row, src);
            let inv = inv_mod(r[row][col], p);
            for x in &mut r[row] {
                *x = mul_mod(*x, inv, p);
            }
            for x in &mut e[row] {
                *x = mul_mod(*x, inv, p);
            }
            for i in 0..m {
                if i == row || r[i][col] == 0 {
                    continue;
                }
                let f = r[i][col];
                for k in 0..n {
                    let t = mul_mod(f, r[row][k], p);
                    r[i][k] = sub_mod(r[i][k], t, p);
                }
                for k in 0..m {
                    let t = mul_mod(f, e[row][k], p);
                    e[i][k] = sub_mod(e[i][k], t, p);
                }
            }
            pivots.push(col);
            row += 1;
        }
        FieldSolver { p, m, n, e, r, pivots }
    }

    fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.m);
        let rb: Vec<u64> = (0..self.m)
            .map(|i| {
                (0..self.m).fold(0u64, |acc, k| {
                    add_mod(acc, mul_mod(self.e[i][k], b[k], self.p), self.p)
                })
            })
            .collect();
        if rb[self.pivots.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut x = vec![0u64; self.n];
        for (k, &col) in self.pivots.iter().enumerate() {
            x[col] = rb[k];
        }
        Some(x)
    }

    fn kernel(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for f in 0..self.n {
            if self.pivots.contains(&f) {
                continue;
            }
            let mut x = vec![0u64; self.n];
            x[f] = 1;
            for (k, &col) in self.pivots.iter().enumerate() {
                x[col] = neg_mod(self.r[k][f], self.p);
            }
            out.push(x);
        }
        out
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, neg_mod(b, p), p)
}

fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a nonzero mod p, so a^(p-2) works.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

#[derive(Clone, Debug)]
enum SolverKind {
    Integers(IntSolver),
    /// Solver for the lifted system `[A | n*I]` with `cols` original columns.
    Modular { cols: usize, inner: IntSolver },
    Field(FieldSolver),
    Product { ps: Vec<u64>, parts: Vec<FieldSolver> },
}

/// A factored linear system `A x = b`, reusable across many right-hand
/// sides. Construction cost is paid once per matrix.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    kind: SolverKind,
}

impl LinearSolver {
    pub fn new(a: &Matrix) -> Self {
        let kind = match &a.ring {
            RingSpec::Integers => {
                let entries = (0..a.rows)
                    .map(|i| (0..a.cols).map(|j| a.entry_bigint(i, j)).collect())
                    .collect();
                SolverKind::Integers(IntSolver::build(entries, a.rows, a.cols))
            }
            RingSpec::IntegersMod(n) => {
                let width = a.cols + a.rows;
                let entries: Vec<Vec<BigInt>> = (0..a.rows)
                    .map(|i| {
                        (0..width)
                            .map(|j| {
                                if j < a.cols {
                                    a.entry_bigint(i, j)
                                } else if j - a.cols == i {
                                    BigInt::from(*n)
                                } else {
                                    BigInt::zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                SolverKind::Modular {
                    cols: a.cols,
                    inner: IntSolver::build(entries, a.rows, width),
                }
            }
            RingSpec::PrimeField(p) => {
                let entries = (0..a.rows)
                    .map(|i| {
                        (0..a.cols)
                            .map(|j| match a.get(i, j) {
                                RingElement::Residue(r) => *r,
                                other => panic!("non-residue entry {other:?} over a field"),
                            })
                            .collect()
                    })
                    .collect();
                SolverKind::Field(FieldSolver::build(*p, entries, a.rows, a.cols))
            }
            RingSpec::PrimeProduct(ps) => {
                let parts = (0..ps.len())
                    .map(|k| {
                        let comp = a.component(k);
                        let entries = (0..comp.rows)
                            .map(|i| {
                                (0..comp.cols)
                                    .map(|j| match comp.get(i, j) {
                                        RingElement::Residue(r) => *r,
                                        _ => unreachable!(),
                                    })
                                    .collect()
                            })
                            .collect();
                        FieldSolver::build(ps[k], entries, comp.rows, comp.cols)
                    })
                    .collect();
                SolverKind::Product { ps: ps.clone(), parts }
            }
        };
        LinearSolver { ring: a.ring.clone(), rows: a.rows, cols: a.cols, kind }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn target_dim(&self) -> usize {
        self.rows
    }

    pub fn source_dim(&self) -> usize {
        self.cols
    }

    /// One solution of `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[RingElement]) -> Option<Vec<RingElement>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        match &self.kind {
            SolverKind::Integers(s) => {
                let bb: Vec<BigInt> = b.iter().map(|e| self.ring.lift(e)).collect();
                let x = s.solve(&bb)?;
                Some(x.into_iter().map(RingElement::Int).collect())
            }
            SolverKind::Modular { cols, inner, .. } => {
                let bb: Vec<BigInt> = b.iter().map(|e| self.ring.lift(e)).collect();
                let x = inner.solve(&bb)?;
                Some(
                    x[..*cols]
                        .iter()
                        .map(|v| self.ring.from_bigint(v))
                        .collect(),
                )
            }
            SolverKind::Field(s) => {
                let bb: Vec<u64> = b
                    .iter()
                    .map(|e| match e {
                        RingElement::Residue(r) => *r,
                        other => panic!("non-residue element {other:?} over a field"),
                    })
                    .collect();
                let x = s.solve(&bb)?;
                Some(x.into_iter().map(RingElement::Residue).collect())
            }
            SolverKind::Product { ps, parts } => {
                let mut comps: Vec<Vec<u64>> = Vec::with_capacity(ps.len());
                for (k, part) in parts.iter().enumerate() {
                    let bb: Vec<u64> = b
                        .iter()
                        .map(|e| match e {
                            RingElement::Tuple(t) => t[k],
                            other => panic!("non-tuple element {other:?} over a product"),
                        })
                        .collect();
                    comps.push(part.solve(&bb)?);
                }
                Some(
                    (0..self.cols)
                        .map(|i| RingElement::Tuple(comps.iter().map(|c| c[i]).collect()))
                        .collect(),
                )
            }
        }
    }

    /// Solve `A X = B` columnwise; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows, "right-hand side height mismatch");
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.col(j))?);
        }
        Some(Matrix::from_cols(&self.ring, self.cols, &cols))
    }

    /// Columns generating `{x : A x = 0}` as a module.
    pub fn kernel(&self) -> Matrix {
        match &self.kind {
            SolverKind::Integers(s) => {
                let cols: Vec<Vec<RingElement>> = s
                    .kernel()
                    .into_iter()
                    .map(|c| c.into_iter().map(RingElement::Int).collect())
                    .collect();
                Matrix::from_cols(&self.ring, self.cols, &cols)
            }
            SolverKind::Modular { cols, inner, .. } => {
                let mut out: Vec<Vec<RingElement>> = Vec::new();
                for kcol in inner.kernel() {
                    let v: Vec<RingElement> =
                        kcol[..*cols].iter().map(|x| self.ring.from_bigint(x)).collect();
                    if v.iter().any(|e| !self.ring.is_zero(e)) {
                        out.push(v);
                    }
                }
                Matrix::from_cols(&self.ring, *cols, &out)
            }
            SolverKind::Field(s) => {
                let cols: Vec<Vec<RingElement>> = s
                    .kernel()
                    .into_iter()
                    .map(|c| c.into_iter().map(RingElement::Residue).collect())
                    .collect();
                Matrix::from_cols(&self.ring, self.cols, &cols)
            }
            SolverKind::Product { ps, parts } => {
                let width = ps.len();
                let mut cols: Vec<Vec<RingElement>> = Vec::new();
                for (k, part) in parts.iter().enumerate() {
                    for kcol in part.kernel() {
                        cols.push(
                            kcol.into_iter()
                                .map(|r| {
                                    RingElement::Tuple(
                                        (0..width).map(|j| if j == k { r } else { 0 }).collect(),
                                    )
                                })
                                .collect(),
                        );
                    }
                }
                Matrix::from_cols(&self.ring, self.cols, &cols)
            }
        }
    }
}

pub fn solve(a: &Matrix, b: &[RingElement]) -> Option<Vec<RingElement>> {
    LinearSolver::new(a).solve(b)
}

pub fn solve_many(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    LinearSolver::new(a).solve_matrix(b)
}

pub fn kernel(a: &Matrix) -> Matrix {
    LinearSolver::new(a).kernel()
}

/// Determinant by cofactor expansion along the first column. Exponential in
/// the dimension, intended for the small matrices that arise here.
pub fn det(a: &Matrix) -> RingElement {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let ring = &a.ring;
    let n = a.rows;
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return a.get(0, 0).clone();
    }
    let mut acc = ring.zero();
    for i in 0..n {
        if ring.is_zero(a.get(i, 0)) {
            continue;
        }
        let minor = Matrix::from_fn(ring, n - 1, n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            a.get(rr, c + 1).clone()
        });
        let term = ring.mul(a.get(i, 0), &det(&minor));
        acc = if i % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn check_snf(a: &Matrix) {
        let dec = snf(a);
        assert_eq!(dec.u.mul(a).mul(&dec.v), dec.d, "U A V is not D for\n{a}");
        let one = RingElement::Int(BigInt::one());
        let minus_one = RingElement::Int(-BigInt::one());
        for m in [&dec.u, &dec.v] {
            let dt = det(m);
            assert!(dt == one || dt == minus_one, "transform not unimodular");
        }
        for i in 0..dec.d.rows {
            for j in 0..dec.d.cols {
                if i != j {
                    assert!(dec.d.ring.is_zero(dec.d.get(i, j)), "off-diagonal junk");
                }
            }
        }
        let diag = dec.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in diagonal");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "diagonal not a divisibility chain");
            }
        }
    }

    #[test]
    fn snf_of_upper_triangular_pair() {
        let a = Matrix::from_int_rows(&z(), &[vec![2, 4], vec![0, 6]]);
        let dec = snf(&a);
        assert_eq!(
            dec.diagonal(),
            vec![BigInt::from(2), BigInt::from(6)]
        );
        check_snf(&a);
    }

    #[test]
    fn snf_fixes_divisibility() {
        let a = Matrix::from_int_rows(&z(), &[vec![4, 0], vec![0, 6]]);
        let dec = snf(&a);
        assert_eq!(dec.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
        check_snf(&a);
    }

    #[test]
    fn snf_handles_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            check_snf(&Matrix::zero(&z(), r, c));
        }
        check_snf(&Matrix::zero(&z(), 2, 2));
    }

    #[test]
    fn snf_random_matrices_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let a = Matrix::from_fn(&z(), rows, cols, |_, _| {
                RingElement::Int(BigInt::from(rng.gen_range(-9i64..=9)))
            });
            check_snf(&a);
        }
    }

    #[test]
    fn integer_solve_and_kernel() {
        let a = Matrix::from_int_rows(&z(), &[vec![2, 0], vec![0, 3]]);
        let b = [RingElement::Int(BigInt::from(4)), RingElement::Int(BigInt::from(6))];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        let bad = [RingElement::Int(BigInt::one()), RingElement::Int(BigInt::zero())];
        assert!(solve(&a, &bad).is_none());

        let row = Matrix::from_int_rows(&z(), &[vec![2, 4]]);
        let k = kernel(&row);
        assert_eq!(k.cols, 1);
        assert!(row.mul(&k).is_zero());
        let g0 = k.entry_bigint(0, 0).abs();
        let g1 = k.entry_bigint(1, 0).abs();
        assert_eq!((g0, g1), (BigInt::from(2), BigInt::one()));
    }

    #[test]
    fn modular_solve_and_kernel() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        let a = Matrix::from_int_rows(&z4, &[vec![2]]);
        let b = [z4.from_i64(2)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert!(solve(&a, &[z4.from_i64(1)]).is_none());

        let k = kernel(&a);
        assert!(k.cols >= 1);
        assert!(a.mul(&k).is_zero());
        // The kernel of multiplication by 2 on Z/4 is {0, 2}; some generator
        // must hit the nonzero element.
        assert!((0..k.cols).any(|j| k.get(0, j) == &z4.from_i64(2)));
    }

    #[test]
    fn field_solve_and_kernel() {
        let f5 = RingSpec::prime_field(5).unwrap();
        let a = Matrix::from_int_rows(&f5, &[vec![1, 2], vec![3, 4]]);
        let b = [f5.from_i64(1), f5.from_i64(2)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert_eq!(kernel(&a).cols, 0);

        let singular = Matrix::from_int_rows(&f5, &[vec![1, 2], vec![2, 4]]);
        let k = kernel(&singular);
        assert_eq!(k.cols, 1);
        assert!(singular.mul(&k).is_zero());
        assert!(solve(&singular, &[f5.from_i64(0), f5.from_i64(1)]).is_none());
    }

    #[test]
    fn product_solve_and_kernel() {
        let prod = RingSpec::prime_product(vec![2, 3]).unwrap();
        // 3 = (1, 0) annihilates the second factor.
        let a = Matrix::from_int_rows(&prod, &[vec![3]]);
        let k = kernel(&a);
        assert!(a.mul(&k).is_zero());
        assert!(k.cols >= 1);
        let b = [RingElement::Tuple(vec![1, 0])];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert!(solve(&a, &[RingElement::Tuple(vec![0, 1])]).is_none());
    }

    #[test]
    fn solve_matrix_batches_columns() {
        let a = Matrix::from_int_rows(&z(), &[vec![1, 0], vec![0, 2]]);
        let b = Matrix::from_int_rows(&z(), &[vec![5, 0], vec![2, 4]]);
        let x = solve_many(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
        let bad = Matrix::from_int_rows(&z(), &[vec![0], vec![1]]);
        assert!(solve_many(&a, &bad).is_none());
    }

    #[test]
    fn determinant_values() {
        let a = Matrix::from_int_rows(&z(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(det(&a), RingElement::Int(BigInt::from(-2)));
        assert_eq!(det(&Matrix::identity(&z(), 4)), RingElement::Int(BigInt::one()));
        let z4 = RingSpec::integers_mod(4).unwrap();
        assert_eq!(det(&Matrix::from_int_rows(&z4, &[vec![3]])), z4.from_i64(3));
        assert_eq!(det(&Matrix::zero(&z(), 0, 0)), RingElement::Int(BigInt::one()));
    }

    #[test]
    fn zero_row_and_zero_col_systems() {
        // No equations: everything solves, kernel is everything.
        let a = Matrix::zero(&z(), 0, 3);
        let x = solve(&a, &[]).unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(kernel(&a).cols, 3);
        // No unknowns: only b = 0 solves.
        let b = Matrix::zero(&z(), 2, 0);
        assert!(solve(&b, &[z().zero(), z().zero()]).is_some());
        assert!(solve(&b, &[z().one(), z().zero()]).is_none());
        assert_eq!(kernel(&b).cols, 0);
    }
}
