//! Arithmetic in small prime fields GF(p) and dense linear algebra over them.
//!
//! Residues are stored as `u64` in `0..p`. The moduli used here are far below
//! 2^32, so every product of two residues fits in a `u64` without reduction
//! tricks.

/// Trial-division primality test. Only used on small moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_above(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 31), "modulus {p} too large");
        Self { p }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Residue of a signed integer.
    #[inline]
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(
            !a.is_multiple_of(self.p),
            "inverse of zero in GF({})",
            self.p
        );
        self.pow(a, self.p - 2)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self, a: u64) -> i64 {
        let a = a % self.p;
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, f: &PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(pr, lead);
            let s = f.inv(self.get(lead, c));
            for j in c..self.cols {
                let v = f.mul(self.get(lead, j), s);
                self.set(lead, j, v);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(lead, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        self.data.truncate(lead * self.cols);
        self.rows = lead;
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per
    /// free column.
    pub fn null_space(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental rank computation for long lists of sparse rows.
///
/// Rows are reduced against the current echelon basis as they arrive, so the
/// full constraint matrix is never materialized. Rows and basis vectors are
/// kept sparse as sorted `(column, value)` lists.
#[derive(Debug, Clone)]
pub struct RankAccumulator {
    field: PrimeField,
    // pivot column -> normalized row with leading 1 at the pivot
    basis: Vec<Option<Vec<(usize, u64)>>>,
    rank: usize,
}

impl RankAccumulator {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            basis: vec![None; cols],
            rank: 0,
        }
    }

    /// Adds a row given as `(column, coefficient)` pairs with signed
    /// coefficients. Returns true if it increased the rank.
    pub fn push_sparse(&mut self, entries: &[(usize, i64)]) -> bool {
        let f = self.field;
        let mut row: Vec<(usize, u64)> = Vec::with_capacity(entries.len());
        let mut sorted = entries.to_vec();
        sorted.sort_unstable_by_key(|e| e.0);
        for (c, v) in sorted {
            let v = f.from_i64(v);
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 = f.add(last.1, v),
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.push(row)
    }

    /// Dense convenience wrapper.
    pub fn push_dense(&mut self, row: &[u64]) -> bool {
        let sparse = row
            .iter()
            .enumerate()
            .filter(|e| *e.1 % self.field.modulus() != 0)
            .map(|(c, &v)| (c, v % self.field.modulus()))
            .collect();
        self.push(sparse)
    }

    fn push(&mut self, mut row: Vec<(usize, u64)>) -> bool {
        let f = self.field;
        while let Some(&(c, lead)) = row.first() {
            match &self.basis[c] {
                Some(b) => row = axpy(&f, &row, f.neg(lead), b),
                None => {
                    let s = f.inv(lead);
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, s);
                    }
                    self.basis[c] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// `x + a*y` for sorted sparse vectors, dropping zeros.
fn axpy(f: &PrimeField, x: &[(usize, u64)], a: u64, y: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = match (x.get(i), y.get(j)) {
            (Some(&(cx, vx)), Some(&(cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                (cx, f.add(vx, f.mul(a, vy)))
            }
            (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                i += 1;
                (cx, vx)
            }
            (Some(&(cx, vx)), None) => {
                i += 1;
                (cx, vx)
            }
            (_, Some(&(cy, vy))) => {
                j += 1;
                (cy, f.mul(a, vy))
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}
