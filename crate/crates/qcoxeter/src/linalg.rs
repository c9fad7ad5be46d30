//! Exact linear algebra helpers: rational points, small integer matrices,
//! Smith normal form, and fraction-free elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A point of the ambient space in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Rat>);

impl Point {
    pub fn zero(dim: usize) -> Self {
        Point(vec![Rat::zero(); dim])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> Point {
        Point(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    /// Pairing against an integer covector: dot product.
    pub fn pair(&self, covector: &[i64]) -> Rat {
        assert_eq!(self.dim(), covector.len());
        let mut acc = Rat::zero();
        for (a, &c) in self.0.iter().zip(covector) {
            if c != 0 {
                acc += a * rat(c);
            }
        }
        acc
    }

    /// The pairing when it is known to be an integer; panics otherwise.
    pub fn pair_int(&self, covector: &[i64]) -> Int {
        let v = self.pair(covector);
        assert!(v.is_integer(), "expected integral pairing, got {}", v);
        v.to_integer()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }
}

pub fn floor_to_i64(x: &Rat) -> i64 {
    let f = x.floor().to_integer();
    i64::try_from(&f).expect("alcove coordinate out of i64 range")
}

/// Small square integer matrix, row-major, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IntMat { n, a }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            a.extend(r);
        }
        IntMat { n, a }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat::identity(self.n)
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.get(i, k);
                if s == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += s * other.get(k, j);
                }
            }
        }
        IntMat { n, a }
    }

    pub fn mul_point(&self, p: &Point) -> Point {
        assert_eq!(self.n, p.dim());
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut acc = Rat::zero();
            for j in 0..self.n {
                let m = self.get(i, j);
                if m != 0 {
                    acc += &p.0[j] * rat(m);
                }
            }
            out.push(acc);
        }
        Point(out)
    }

    pub fn mul_ivec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> IntMat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.get(i, j);
            }
        }
        IntMat { n, a }
    }

    pub fn det(&self) -> i64 {
        let n = self.n;
        match n {
            0 => 1,
            1 => self.get(0, 0),
            _ => {
                let mut d = 0i64;
                for j in 0..n {
                    let m = self.minor(0, j).det();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    d += sign * self.get(0, j) * m;
                }
                d
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> IntMat {
        let n = self.n;
        let mut a = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j == col {
                    continue;
                }
                a.push(self.get(i, j));
            }
        }
        IntMat { n: n - 1, a }
    }

    /// Inverse of a matrix with determinant +-1, via the adjugate.
    pub fn inverse_unimodular(&self) -> IntMat {
        let n = self.n;
        let d = self.det();
        assert!(d == 1 || d == -1, "matrix is not unimodular (det {})", d);
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                // adjugate entry divided by det; det is +-1 so divide = multiply
                a[i * n + j] = sign * self.minor(j, i).det() * d;
            }
        }
        let inv = IntMat { n, a };
        debug_assert!(self.mul(&inv).is_identity());
        inv
    }
}

/// Solves G x = b for square rational G by Gaussian elimination. Returns None
/// when G is singular.
pub fn solve_square(g: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = g.len();
    assert!(g.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = g
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let v = &m[col][j] * &f;
                    m[i][j] = &m[i][j] - &v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Smith normal form of an integer matrix: returns (u, d, v) with u*m*v = d
/// diagonal and d[i] | d[i+1]; u, v unimodular.
pub fn smith_normal_form(m: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let rows = m.len();
    let cols = m[0].len();
    let mut d: Vec<Vec<Int>> = m.to_vec();
    let mut u: Vec<Vec<Int>> = (0..rows)
        .map(|i| (0..rows).map(|j| Int::from((i == j) as i64)).collect())
        .collect();
    let mut v: Vec<Vec<Int>> = (0..cols)
        .map(|i| (0..cols).map(|j| Int::from((i == j) as i64)).collect())
        .collect();

    let swap_rows = |d: &mut Vec<Vec<Int>>, u: &mut Vec<Vec<Int>>, a: usize, b: usize| {
        d.swap(a, b);
        u.swap(a, b);
    };
    let swap_cols = |d: &mut Vec<Vec<Int>>, v: &mut Vec<Vec<Int>>, a: usize, b: usize| {
        for row in d.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // find a nonzero pivot
        let mut found = None;
        'search: for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let (pi, pj) = match found {
            Some(p) => p,
            None => break,
        };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in (t + 1)..rows {
                if !d[i][t].is_zero() {
                    let q = div_floor_to_min(&d[i][t], &d[t][t]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let s = &d[t][j] * &q;
                            d[i][j] = &d[i][j] - &s;
                        }
                        for j in 0..rows {
                            let s = &u[t][j] * &q;
                            u[i][j] = &u[i][j] - &s;
                        }
                    }
                    if !d[i][t].is_zero() {
                        swap_rows(&mut d, &mut u, t, i);
                        dirty = true;
                    }
                }
            }
            for j in (t + 1)..cols {
                if !d[t][j].is_zero() {
                    let q = div_floor_to_min(&d[t][j], &d[t][t]);
                    if !q.is_zero() {
                        for i in 0..rows {
                            let s = &d[i][t] * &q;
                            d[i][j] = &d[i][j] - &s;
                        }
                        for i in 0..cols {
                            let s = &v[i][t] * &q;
                            v[i][j] = &v[i][j] - &s;
                        }
                    }
                    if !d[t][j].is_zero() {
                        swap_cols(&mut d, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty
                && (t + 1..rows).all(|i| d[i][t].is_zero())
                && (t + 1..cols).all(|j| d[t][j].is_zero())
            {
                break;
            }
        }
        t += 1;
    }

    // enforce divisibility d[i] | d[i+1]
    let k = rows.min(cols);
    for i in 0..k.saturating_sub(1) {
        if d[i][i].is_zero() || d[i + 1][i + 1].is_zero() {
            continue;
        }
        if (&d[i + 1][i + 1] % &d[i][i]).is_zero() {
            continue;
        }
        // add column i+1 to column i and re-run the reduction
        for row in 0..rows {
            let s = d[row][i + 1].clone();
            d[row][i] = &d[row][i] + &s;
        }
        for row in 0..cols {
            let s = v[row][i + 1].clone();
            v[row][i] = &v[row][i] + &s;
        }
        return recombine_snf(&d, &u, &v);
    }

    for i in 0..k {
        if d[i][i].is_negative() {
            for j in 0..cols {
                d[i][j] = -d[i][j].clone();
            }
            for j in 0..rows {
                u[i][j] = -u[i][j].clone();
            }
        }
    }
    (u, d, v)
}

fn recombine_snf(
    d: &[Vec<Int>],
    u: &[Vec<Int>],
    v: &[Vec<Int>],
) -> (Vec<Vec<Int>>, Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let (u2, d2, v2) = smith_normal_form(d);
    (mat_mul_big(&u2, u), d2, mat_mul_big(v, &v2))
}

pub fn mat_mul_big(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let s = &a[i][t] * &b[t][j];
                out[i][j] = &out[i][j] + &s;
            }
        }
    }
    out
}

/// Rounded quotient used in SNF reduction steps.
fn div_floor_to_min(a: &Int, b: &Int) -> Int {
    // plain truncated division is enough: remainders shrink either way
    a / b
}

/// Inverse of a unimodular big-integer matrix.
pub fn inverse_unimodular_big(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = m.len();
    let det = det_big(m);
    assert!(
        det == Int::one() || det == -Int::one(),
        "matrix is not unimodular"
    );
    let mut inv = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut sub = Vec::with_capacity(n - 1);
            for r in 0..n {
                if r == j {
                    continue;
                }
                let mut row = Vec::with_capacity(n - 1);
                for c in 0..n {
                    if c == i {
                        continue;
                    }
                    row.push(m[r][c].clone());
                }
                sub.push(row);
            }
            let cof = if sub.is_empty() { Int::one() } else { det_big(&sub) };
            let sign = if (i + j) % 2 == 0 { Int::one() } else { -Int::one() };
            inv[i][j] = sign * cof * &det;
        }
    }
    inv
}

pub fn det_big(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut d = Int::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let mut sub = Vec::with_capacity(n - 1);
        for r in 1..n {
            let mut row = Vec::with_capacity(n - 1);
            for c in 0..n {
                if c == j {
                    continue;
                }
                row.push(m[r][c].clone());
            }
            sub.push(row);
        }
        let sign = if j % 2 == 0 { Int::one() } else { -Int::one() };
        d += sign * &m[0][j] * det_big(&sub);
    }
    d
}

/// Row echelon form by fraction-free (Bareiss-style) elimination over the
/// integers. Returns (echelon rows, pivot column per row).
pub fn fraction_free_echelon(rows: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<usize>) {
    let mut m: Vec<Vec<Int>> = rows.into_iter().filter(|r| !r.iter().all(|x| x.is_zero())).collect();
    if m.is_empty() {
        return (vec![], vec![]);
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut prev = Int::one();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in (rank + 1)..m.len() {
            if m[i].iter().all(|x| x.is_zero()) {
                continue;
            }
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let t = &pivot * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = &t / &prev;
            }
            m[i][col] = Int::zero();
        }
        pivots.push(col);
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

/// Rational nullspace basis of an integer matrix in echelon form (as produced
/// by `fraction_free_echelon`). One basis vector per free column.
pub fn nullspace_from_echelon(
    echelon: &[Vec<Int>],
    pivots: &[usize],
    cols: usize,
) -> Vec<Vec<Rat>> {
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rat::zero(); cols];
        x[f] = Rat::one();
        // back-substitute pivot rows from the bottom
        for (row_idx, &pc) in pivots.iter().enumerate().rev() {
            let row = &echelon[row_idx];
            let mut acc = Rat::zero();
            for c in (pc + 1)..cols {
                if !row[c].is_zero() && !x[c].is_zero() {
                    acc += Rat::from_integer(row[c].clone()) * &x[c];
                }
            }
            x[pc] = -acc / Rat::from_integer(row[pc].clone());
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_square_2x2() {
        let g = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let b = vec![rat(1), rat(0)];
        let x = solve_square(&g, &b).unwrap();
        assert_eq!(x, vec![ratio(2, 3), ratio(1, 3)]);
    }

    #[test]
    fn snf_of_diag() {
        let m = vec![
            vec![Int::from(2), Int::from(0)],
            vec![Int::from(0), Int::from(3)],
        ];
        let (u, d, v) = smith_normal_form(&m);
        let prod = mat_mul_big(&mat_mul_big(&u, &m), &v);
        assert_eq!(prod, d);
        assert_eq!(d[0][0], Int::from(1));
        assert_eq!(d[1][1], Int::from(6));
    }

    #[test]
    fn snf_identity_and_index_two() {
        // lattice Z*(1/2) over Z: quotient Z/2 seen through the 1x1 matrix [2]
        let m = vec![vec![Int::from(2)]];
        let (u, d, v) = smith_normal_form(&m);
        assert_eq!(mat_mul_big(&mat_mul_big(&u, &m), &v), d);
        assert_eq!(d[0][0], Int::from(2));
    }

    #[test]
    fn echelon_rank_and_nullspace() {
        // x + y + z = 0, x - z = 0  ->  rank 2, nullspace dim 1
        let rows = vec![
            vec![Int::from(1), Int::from(1), Int::from(1)],
            vec![Int::from(1), Int::from(0), Int::from(-1)],
        ];
        let (ech, pivots) = fraction_free_echelon(rows);
        assert_eq!(pivots.len(), 2);
        let ns = nullspace_from_echelon(&ech, &pivots, 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // check both equations
        assert!((&v[0] + &v[1] + &v[2]).is_zero());
        assert!((&v[0] - &v[2]).is_zero());
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMat::from_rows(vec![vec![1, 2], vec![0, 1]]);
        let inv = m.inverse_unimodular();
        assert!(m.mul(&inv).is_identity());
    }
}
