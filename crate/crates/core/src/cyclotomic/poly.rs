//! Dense univariate polynomials over Q, lowest coefficient first.

use num_rational::BigRational;
use num_traits::Zero;

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().expect("nonempty") / lead;
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[shift + i] -= &c * d;
            }
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    (quot, rem)
}

fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus`. `a` must be nonzero mod `modulus`.
pub(crate) fn inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Vec<BigRational> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![num_traits::One::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    assert_eq!(r0.len(), 1, "element shares a factor with an irreducible modulus");
    let c = r0[0].clone();
    let (_, mut red) = divrem(&s0, modulus);
    for x in red.iter_mut() {
        *x /= &c;
    }
    red
}
