//! Multivariate gcd by content / primitive-part recursion on the highest
//! variable present, with a primitive pseudo-remainder sequence in that
//! variable.

use super::{ArithError, SparsePoly};

/// Greatest common divisor, normalized to an integer polynomial with content
/// 1 and positive leading coefficient.
pub fn poly_gcd(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, ArithError> {
    a.check_space(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::GcdOfZeros);
    }
    Ok(gcd(a, b))
}

pub(crate) fn gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return SparsePoly::one(a.space());
    }
    if a.nterms() == 1 || b.nterms() == 1 {
        return monomial_gcd(a, b);
    }
    let ua = a.used_vars();
    let ub = b.used_vars();
    let v = *ua.last().unwrap().max(ub.last().unwrap());
    let in_a = ua.contains(&v);
    let in_b = ub.contains(&v);
    if !in_b {
        return gcd(&content_in(a, v), b);
    }
    if !in_a {
        return gcd(a, &content_in(b, v));
    }

    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if !r.uses_var(v) {
            // g and f are primitive in v, so their gcd has degree 0 in v.
            return c.normalized();
        }
        f = g;
        g = primitive_in(&r, v);
    }
    (&c * &primitive_in(&g, v)).normalized()
}

/// gcd of the single term's monomial with every monomial of the other
/// polynomial; coefficients contribute only a unit.
fn monomial_gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut mono = a.terms().next().unwrap().0.clone();
    for (m, _) in a.terms().chain(b.terms()) {
        mono = mono.gcd_with(m);
    }
    SparsePoly::term(a.space(), mono, num_traits::One::one())
}

/// gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
fn content_in(p: &SparsePoly, v: usize) -> SparsePoly {
    let mut coeffs = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero());
    let mut acc = coeffs.next().expect("nonzero polynomial");
    for c in coeffs {
        if acc.is_constant() {
            break;
        }
        acc = gcd(&acc, &c);
    }
    if acc.is_constant() {
        SparsePoly::one(p.space())
    } else {
        acc.normalized()
    }
}

fn primitive_in(p: &SparsePoly, v: usize) -> SparsePoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalized()
}

/// A nonzero multiple of the pseudo-remainder of `f` by `g` in variable `v`.
fn pseudo_rem(f: &SparsePoly, g: &SparsePoly, v: usize) -> SparsePoly {
    let dg = g.degree_in(v);
    let g_coeffs = g.coeffs_in(v);
    let lc_g = g_coeffs.last().unwrap().clone();
    let nvars = f.space().len();
    let one = num_traits::One::one();
    let mut r = f.clone();
    while !r.is_zero() && r.uses_var(v) && r.degree_in(v) >= dg {
        let dr = r.degree_in(v);
        let lc_r = r.coeffs_in(v).pop().unwrap();
        let shift = super::Monomial::var(nvars, v, dr - dg);
        let t = (&lc_r * g).mul_monomial(&shift, &one);
        r = &(&lc_g * &r) - &t;
    }
    r
}
