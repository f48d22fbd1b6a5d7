//! Dense polynomials over a small prime field 𝔽ₚ and Berlekamp splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub(crate) type FpPoly = Vec<u64>;

pub(crate) fn trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn reduce(v: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    trim(
        v.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_scalar(a, p - 2, p)
}

fn pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> FpPoly {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub(crate) fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

/// Division with remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let li = inv(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * li % p;
        if c != 0 {
            for (j, &bc) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bc % p) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    div_rem(a, b, p).1
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
pub(crate) fn bezout(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    debug_assert_eq!(r0.len(), 1, "inputs not coprime");
    let li = inv(r0[0], p);
    (scale(&s0, li, p), scale(&t0, li, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> FpPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && gcd(f, &d, p).len() == 1
}

/// Null space basis of an `rows × cols` matrix over 𝔽ₚ.
fn null_space(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, sel);
        let li = inv(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * li % p;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && line[col] != 0 {
                let f = line[col];
                for (v, pv) in line.iter_mut().zip(&pivot) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Complete factorization of a monic squarefree polynomial over 𝔽ₚ into
/// monic irreducibles. Deterministic.
pub(crate) fn berlekamp(f: &[u64], p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let xp = powmod(&[0, 1], p, f, p);
    // rows[i] = x^(i·p) mod f
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut r = cur.clone();
        r.resize(n, 0);
        rows.push(r);
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // transpose(Q - I)
    let m: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| (rows[i][j] + if i == j { p - 1 } else { 0 }) % p)
                .collect()
        })
        .collect();
    let basis = null_space(m, n, p);
    let r = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in basis {
        if factors.len() == r {
            break;
        }
        let v = trim(v);
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::with_capacity(r);
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut pieces = Vec::new();
            for s in 0..p {
                let g = gcd(&u, &sub(&v, &[s], p), p);
                if g.len() > 1 {
                    pieces.push(g);
                }
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_product() {
        let p = 7;
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 is irreducible mod 7
        let f = mul(&mul(&[1, 1], &[2, 1], p), &[1, 0, 1], p);
        let mut fs = berlekamp(&f, p);
        fs.sort();
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, p));
        assert_eq!(prod, f);
    }

    #[test]
    fn bezout_identity() {
        let p = 11;
        let a = vec![3, 0, 1];
        let b = vec![5, 1];
        let (s, t) = bezout(&a, &b, p);
        let one = add(&mul(&s, &a, p), &mul(&t, &b, p), p);
        assert_eq!(one, vec![1]);
    }
}
