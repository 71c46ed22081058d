//! Certified real-root isolation over ℚ.
//!
//! An [`IsolatingInterval`] holds a squarefree polynomial and a half-open
//! interval `(lo, hi]` containing exactly one of its real roots. Rational
//! roots found along the way are pinned to `hi`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::engine::indpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{sturm_chain, Poly, Rational, SturmChain};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    poly: Poly,
    lo: Rational,
    hi: Rational,
}

/// `10^-12`, the width `xi` refines to.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

impl IsolatingInterval {
    /// Caller guarantees `poly` is squarefree with exactly one root in `(lo, hi]`.
    fn new_unchecked(poly: Poly, lo: Rational, hi: Rational) -> IsolatingInterval {
        IsolatingInterval { poly, lo, hi }
    }

    /// Validate and build an interval; `poly` is replaced by its squarefree part.
    pub fn new(poly: &Poly, lo: Rational, hi: Rational) -> Result<IsolatingInterval> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial("isolating interval"));
        }
        if lo >= hi {
            return Err(Error::Precondition(
                "isolating interval needs lo < hi".into(),
            ));
        }
        let sqf = poly.squarefree_part();
        let count = sturm_chain(&sqf).count_roots(&lo, &hi);
        if count != 1 {
            return Err(Error::Precondition(format!(
                "interval ({lo}, {hi}] holds {count} roots, not 1"
            )));
        }
        Ok(IsolatingInterval::new_unchecked(sqf, lo, hi))
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The root itself when it is known to be the rational `hi`.
    pub fn exact(&self) -> Option<&Rational> {
        (self.poly.sign_at(&self.hi) == 0).then_some(&self.hi)
    }

    /// Midpoint as a float, for display only.
    pub fn approx(&self) -> f64 {
        if let Some(r) = self.exact() {
            return to_f64(r);
        }
        (to_f64(&self.lo) + to_f64(&self.hi)) / 2.0
    }

    /// Bisect until `hi − lo ≤ width`, then try to pin a rational root.
    pub fn refine(&self, width: &Rational) -> IsolatingInterval {
        let mut iv = self.clone();
        let mut chain: Option<SturmChain> = None;
        while &iv.width() > width || iv.poly.sign_at(&iv.lo) == 0 {
            iv.halve(&mut chain);
        }
        iv.snap_rational();
        iv
    }

    /// One bisection step.
    fn halve(&mut self, chain: &mut Option<SturmChain>) {
        let mid = (&self.lo + &self.hi) / two();
        let s_hi = self.poly.sign_at(&self.hi);
        let s_mid = self.poly.sign_at(&mid);
        let upper = if s_hi == 0 {
            true
        } else if s_mid == 0 {
            false
        } else {
            let s_lo = self.poly.sign_at(&self.lo);
            if s_lo != 0 {
                s_mid != s_hi
            } else {
                let c = chain.get_or_insert_with(|| sturm_chain(&self.poly));
                c.count_roots(&mid, &self.hi) == 1
            }
        };
        if upper {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// If the simplest rational in the interval is the root, move `hi` onto it.
    fn snap_rational(&mut self) {
        if self.poly.sign_at(&self.hi) == 0 {
            return;
        }
        let q = simplest_between(&self.lo, &self.hi);
        if q > self.lo && q <= self.hi && self.poly.sign_at(&q) == 0 {
            self.hi = q;
        }
    }

    /// Whether the root lies below, at or above `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if q <= &self.lo {
            return Ordering::Greater;
        }
        let s_hi = self.poly.sign_at(&self.hi);
        if q >= &self.hi {
            return if q == &self.hi && s_hi == 0 {
                Ordering::Equal
            } else {
                Ordering::Less
            };
        }
        if s_hi == 0 {
            return Ordering::Greater;
        }
        match self.poly.sign_at(q) {
            0 => Ordering::Equal,
            s if s == s_hi => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// Exact comparison of the two algebraic numbers.
    pub fn cmp_root(&self, other: &IsolatingInterval) -> Ordering {
        let g = self.poly.gcd(&other.poly);
        let shared = if g.degree().unwrap_or(0) > 0 {
            let c = sturm_chain(&g);
            c.count_roots(&self.lo, &self.hi) == 1 && c.count_roots(&other.lo, &other.hi) == 1
        } else {
            false
        };
        let gchain = shared.then(|| sturm_chain(&g));
        let (mut a, mut b) = (self.clone(), other.clone());
        let (mut ca, mut cb) = (None, None);
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let (Some(x), Some(y)) = (a.exact(), b.exact()) {
                return x.cmp(y);
            }
            if let Some(c) = &gchain {
                let lo = std::cmp::min(&a.lo, &b.lo);
                let hi = std::cmp::max(&a.hi, &b.hi);
                if c.count_roots(lo, hi) == 1 {
                    return Ordering::Equal;
                }
            }
            if a.width() >= b.width() {
                a.halve(&mut ca);
            } else {
                b.halve(&mut cb);
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "poly": self.poly.to_string(),
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
            "exact": self.exact().map(|r| r.to_string()),
        })
    }

    /// `lo..hi` with `digits` decimals, rounded outward; the exact value if
    /// the root is a known rational.
    pub fn to_decimal(&self, digits: usize) -> String {
        if let Some(r) = self.exact() {
            return r.to_string();
        }
        format!(
            "{}..{}",
            decimal(&self.lo, digits, false),
            decimal(&self.hi, digits, true)
        )
    }
}

impl Serialize for IsolatingInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// `q` to `digits` decimal places, rounded towards +∞ if `up`, else −∞.
pub fn decimal(q: &Rational, digits: usize, up: bool) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q * Rational::from_integer(scale.clone());
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let (int, frac) = n.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>digits$}")
    }
}

/// The rational with the smallest denominator in `[a, b]`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a <= b);
    if a.is_negative() && b.is_positive() || a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= b {
        return next;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

/// One interval per distinct real root of `p` in `(a, b]`, increasing.
pub fn isolate_roots(p: &Poly, a: &Rational, b: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation"));
    }
    if a >= b {
        return Err(Error::Precondition("isolate_roots needs a < b".into()));
    }
    let sqf = p.squarefree_part();
    let chain = sturm_chain(&sqf);
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone(), chain.count_roots(a, b))];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                let mut iv = IsolatingInterval::new_unchecked(sqf.clone(), lo, hi);
                iv.snap_rational();
                out.push(iv);
            }
            _ => {
                let mid = (&lo + &hi) / two();
                let upper = chain.count_roots(&mid, &hi);
                // push the lower half last so it is processed first
                stack.push((mid.clone(), hi, upper));
                stack.push((lo, mid, count - upper));
            }
        }
    }
    Ok(out)
}

/// The largest real root of `p` in `(a, b]`, if any.
pub fn largest_root(p: &Poly, a: &Rational, b: &Rational) -> Result<Option<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation"));
    }
    let sqf = p.squarefree_part();
    let chain = sturm_chain(&sqf);
    let (mut lo, hi) = (a.clone(), b.clone());
    let mut count = chain.count_roots(&lo, &hi);
    if count == 0 {
        return Ok(None);
    }
    let mut hi = hi;
    while count > 1 {
        let mid = (&lo + &hi) / two();
        let upper = chain.count_roots(&mid, &hi);
        if upper >= 1 {
            lo = mid;
            count = upper;
        } else {
            hi = mid;
        }
    }
    Ok(Some(IsolatingInterval::new_unchecked(sqf, lo, hi)))
}

/// `ξ(G)`: the largest real root of `I(G, x)`, refined to width `10^-12`.
pub fn xi(g: &Graph) -> Result<IsolatingInterval> {
    xi_of_poly(&indpoly(g))
}

/// `ξ` for a polynomial already known to be some `I(G, x)`.
pub fn xi_of_poly(p: &Poly) -> Result<IsolatingInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(
            "the null graph has no independence root".into(),
        ));
    }
    let minus_one = -Rational::one();
    let iv = match largest_root(p, &minus_one, &Rational::zero())? {
        Some(iv) => iv,
        None if p.sign_at(&minus_one) == 0 => {
            let sqf = p.squarefree_part();
            IsolatingInterval::new_unchecked(sqf, &minus_one - default_width(), minus_one)
        }
        None => return Err(Error::Invariant(format!("{p} has no real root in [-1, 0)"))),
    };
    Ok(iv.refine(&default_width()))
}

/// Exact sign of `q` at the root isolated by `iv`.
pub fn sign_at_root(q: &Poly, iv: &IsolatingInterval) -> i8 {
    if q.degree().unwrap_or(0) == 0 {
        return q
            .leading()
            .map_or(0, |c| if c.is_positive() { 1 } else { -1 });
    }
    let g = q.gcd(&iv.poly);
    if g.degree().unwrap_or(0) > 0 && sturm_chain(&g).count_roots(&iv.lo, &iv.hi) == 1 {
        return 0;
    }
    let qchain = sturm_chain(&q.squarefree_part());
    let mut iv = iv.clone();
    let mut chain = None;
    while qchain.count_roots(&iv.lo, &iv.hi) > 0 {
        iv.halve(&mut chain);
    }
    q.sign_at(&iv.hi)
}
