use num_traits::Signed;

use super::{sign, Poly, Rational};

/// Sturm sequence `p_0 = P, p_1 = P', p_{k+1} = −rem(p_{k−1}, p_k)`,
/// computed with sign-corrected pseudo-remainders and with contents removed.
/// Every member differs from the classical one by a positive factor only.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

pub fn sturm_chain(p: &Poly) -> SturmChain {
    let mut chain = Vec::new();
    if p.is_zero() {
        return SturmChain { chain };
    }
    chain.push(p.without_content());
    let dp = p.derivative().without_content();
    if dp.is_zero() {
        return SturmChain { chain };
    }
    chain.push(dp);
    loop {
        let k = chain.len();
        let (a, b) = (&chain[k - 2], &chain[k - 1]);
        let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
        let mut r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^delta · rem, so fix the sign before negating
        let flip = b.leading().unwrap().is_negative() && delta % 2 == 1;
        if !flip {
            r = -r;
        }
        chain.push(r.without_content());
    }
    SturmChain { chain }
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

impl SturmChain {
    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    pub fn variations_at(&self, q: &Rational) -> usize {
        count_changes(self.chain.iter().map(|p| p.sign_at(q)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        count_changes(self.chain.iter().map(|p| {
            let s = sign(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        count_changes(self.chain.iter().map(|p| sign(p.leading().unwrap())))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> usize {
        assert!(a <= b, "empty interval");
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}
