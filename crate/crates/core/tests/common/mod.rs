//! Reference implementations that share no code with the library.
#![allow(dead_code)]

/// h0 on `F(d)` by visiting every point of the box `[0, h]^n` and keeping
/// those on the simplex `Σe = h`.
pub fn h0_box(d: &[i64], h: i64, f: i64) -> i64 {
    if h < 0 {
        return 0;
    }
    let n = d.len();
    let side = (h + 1) as usize;
    let total = side.pow(n as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let (mut sum, mut weight) = (0i64, 0i64);
        for &di in d {
            let e = (rest % side) as i64;
            rest /= side;
            sum += e;
            weight += e * di;
        }
        if sum == h {
            count += (weight + f + 1).max(0);
        }
    }
    count
}

/// h0 of `xi·ξ + fib·𝔣` on `Σ_e`, from `π_*O(xi·ξ) = ⊕ O(-i·e)`.
pub fn h0_sigma(e: i64, xi: i64, fib: i64) -> i64 {
    (0..=xi).map(|i| (fib - i * e + 1).max(0)).sum()
}

/// Intersection number on `P(⊕O(d_i))` in the Chow ring
/// `Z[H, F] / (F², Hⁿ - δ·Hⁿ⁻¹F)`. An element is stored as the pair of
/// polynomials `p(H) + q(H)·F`.
pub fn intersect_chow(d: &[i64], classes: &[(i64, i64)]) -> i64 {
    let n = d.len();
    assert_eq!(classes.len(), n);
    let delta: i64 = d.iter().sum();
    // p[k], q[k] are the coefficients of H^k and H^k·F
    let mut p = vec![0i64; n + 1];
    let mut q = vec![0i64; n + 1];
    p[0] = 1;
    for &(h, f) in classes {
        let mut np = vec![0i64; n + 1];
        let mut nq = vec![0i64; n + 1];
        for k in 0..n {
            np[k + 1] += h * p[k];
            nq[k + 1] += h * q[k];
            nq[k] += f * p[k];
        }
        p = np;
        q = nq;
    }
    p[n] * delta + q[n - 1]
}

/// Series of `Π(1 - t^e) / Π(1 - t^w)` by expanding the numerator and
/// denominator polynomials and dividing term by term.
pub fn series_by_division(weights: &[u32], rels: &[u32], len: usize) -> Vec<i64> {
    let mul = |a: &[i64], deg: usize| {
        let mut out = vec![0i64; a.len() + deg];
        for (i, &c) in a.iter().enumerate() {
            out[i] += c;
            out[i + deg] -= c;
        }
        out
    };
    let mut num = vec![1i64];
    for &e in rels {
        num = mul(&num, e as usize);
    }
    let mut den = vec![1i64];
    for &w in weights {
        den = mul(&den, w as usize);
    }
    let mut out = vec![0i64; len];
    for k in 0..len {
        let mut c = num.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(den.len() - 1) {
            c -= den[j] * out[k - j];
        }
        out[k] = c;
    }
    out
}

/// `χ(-kK)` from the unreduced polynomial `1 + k(k+1)(2k+1)d/12 + 2k`, in
/// rationals scaled by 12.
pub fn rr_scaled(d: i64, k: i64) -> Option<i64> {
    let twelve = 12 * (2 * k + 1) + k * (k + 1) * (2 * k + 1) * d;
    (twelve % 12 == 0).then_some(twelve / 12)
}
