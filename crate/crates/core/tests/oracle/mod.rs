//! Brute-force reference for Hochschild (co)homology dimensions of an algebra
//! with coefficients in itself.
//!
//! Deliberately shares nothing with the library: the algebra is read from the
//! raw JSON with `serde_json::Value`, tuples are indexed little-endian (first
//! factor least significant), matrices are dense, and ranks come from plain
//! Gaussian elimination over `BigRational` or integers mod p.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

pub struct OracleAlgebra {
    pub d: usize,
    /// c[i][j][l]: coefficient of e_l in e_i e_j.
    pub c: Vec<Vec<Vec<i64>>>,
    pub p: Option<i64>,
}

impl OracleAlgebra {
    pub fn from_json(text: &str) -> OracleAlgebra {
        let v: Value = serde_json::from_str(text).unwrap();
        let d = v["dimension"].as_u64().unwrap() as usize;
        let p = match v["field"]["kind"].as_str().unwrap() {
            "Q" => None,
            _ => Some(v["field"]["p"].as_i64().unwrap()),
        };
        let mut c = vec![vec![vec![0i64; d]; d]; d];
        for q in v["structure"].as_array().unwrap() {
            let q = q.as_array().unwrap();
            let (i, j, l) = (q[0].as_u64().unwrap() as usize, q[1].as_u64().unwrap() as usize, q[2].as_u64().unwrap() as usize);
            let coef: i64 = match &q[3] {
                Value::String(s) => s.parse().expect("integer structure constants"),
                other => other.as_i64().unwrap(),
            };
            c[i][j][l] += coef;
        }
        OracleAlgebra { d, c, p }
    }

    fn tuple(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut t = Vec::with_capacity(n);
        for _ in 0..n {
            t.push(idx % self.d);
            idx /= self.d;
        }
        t
    }

    fn index(&self, t: &[usize]) -> usize {
        t.iter().rev().fold(0, |acc, &a| acc * self.d + a)
    }

    fn size(&self, n: usize) -> usize {
        self.d.pow(n as u32)
    }

    /// Chains `x ⊗ a_1 ⊗ … ⊗ a_n` stored as the (n+1)-tuple `(x, a_1, …, a_n)`.
    /// Returns b_n as a dense matrix (rows: degree n-1, columns: degree n).
    pub fn boundary(&self, n: usize) -> Vec<Vec<i64>> {
        let rows = self.size(n);
        let cols = self.size(n + 1);
        let mut m = vec![vec![0i64; cols]; rows];
        for col in 0..cols {
            let t = self.tuple(col, n + 1);
            // Merging slots k and k+1 of (x, a_1, …, a_n) for k = 0..n-1 with sign (−1)^k.
            for k in 0..n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                for l in 0..self.d {
                    let coef = self.c[t[k]][t[k + 1]][l];
                    if coef != 0 {
                        let mut s: Vec<usize> = t[..k].to_vec();
                        s.push(l);
                        s.extend_from_slice(&t[k + 2..]);
                        m[self.index(&s)][col] += sign * coef;
                    }
                }
            }
            // (−1)^n (a_n x; a_1, …, a_{n-1})
            let sign = if n % 2 == 0 { 1 } else { -1 };
            for l in 0..self.d {
                let coef = self.c[t[n]][t[0]][l];
                if coef != 0 {
                    let mut s = vec![l];
                    s.extend_from_slice(&t[1..n]);
                    m[self.index(&s)][col] += sign * coef;
                }
            }
        }
        m
    }

    /// Cochains `T(a_1, …, a_m)_k` stored as the tuple `(a_1, …, a_m, k)`.
    /// Returns δ^m (rows: degree m+1, columns: degree m).
    pub fn coboundary(&self, m: usize) -> Vec<Vec<i64>> {
        let rows = self.size(m + 2);
        let cols = self.size(m + 1);
        let mut out = vec![vec![0i64; cols]; rows];
        for row in 0..rows {
            let s = self.tuple(row, m + 2);
            let (args, y) = (&s[..m + 1], s[m + 1]);
            // a_1 · T(a_2, …): coefficient of e_y in e_{a_1} e_k.
            for k in 0..self.d {
                let coef = self.c[args[0]][k][y];
                if coef != 0 {
                    let mut t = args[1..].to_vec();
                    t.push(k);
                    out[row][self.index(&t)] += coef;
                }
            }
            for i in 1..=m {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for l in 0..self.d {
                    let coef = self.c[args[i - 1]][args[i]][l];
                    if coef != 0 {
                        let mut t = args[..i - 1].to_vec();
                        t.push(l);
                        t.extend_from_slice(&args[i + 1..]);
                        t.push(y);
                        out[row][self.index(&t)] += sign * coef;
                    }
                }
            }
            let sign = if (m + 1) % 2 == 0 { 1 } else { -1 };
            for k in 0..self.d {
                let coef = self.c[k][args[m]][y];
                if coef != 0 {
                    let mut t = args[..m].to_vec();
                    t.push(k);
                    out[row][self.index(&t)] += sign * coef;
                }
            }
        }
        out
    }

    pub fn rank(&self, m: &[Vec<i64>]) -> usize {
        match self.p {
            None => rank_q(m),
            Some(p) => rank_p(m, p),
        }
    }

    pub fn homology_dims(&self, max: usize) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=max + 1).map(|n| if n == 0 { 0 } else { self.rank(&self.boundary(n)) }).collect();
        (0..=max).map(|n| self.size(n + 1) - ranks[n] - ranks[n + 1]).collect()
    }

    pub fn cohomology_dims(&self, max: usize) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=max).map(|m| self.rank(&self.coboundary(m))).collect();
        (0..=max).map(|m| self.size(m + 1) - ranks[m] - if m == 0 { 0 } else { ranks[m - 1] }).collect()
    }
}

pub fn rank_q(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        let pivot_row: Vec<BigRational> = a[rank].iter().map(|x| x * &inv).collect();
        for i in rank + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    let v = &a[i][j] - &f * &pivot_row[j];
                    a[i][j] = v;
                }
            }
        }
        a[rank] = pivot_row;
        rank += 1;
    }
    rank
}

pub fn rank_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let inv = |x: i64| -> i64 {
        // Fermat: x^(p-2)
        let (mut base, mut e, mut acc) = (x, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][c]);
        for j in c..cols {
            a[rank][j] = a[rank][j] * iv % p;
        }
        for i in rank + 1..rows {
            let f = a[i][c];
            if f != 0 {
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}
