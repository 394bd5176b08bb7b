use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Largest number of variables a ring may have, elimination tags included.
pub const MAX_VARS: usize = 8;

/// Dense exponent vector. Unused trailing slots stay zero, so monomials of
/// a ring and of its tag-variable extension compare consistently.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn new(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.exps[i] = e;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = other.exps[i].checked_sub(self.exps[i])?;
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the single variable if this is a pure power `x_i^e`, e ≥ 1.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn involves_any(&self, mask: VarMask) -> bool {
        (0..MAX_VARS).any(|i| mask.contains(i) && self.exps[i] > 0)
    }

    fn masked(&self, mask: VarMask, keep: bool) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            if mask.contains(i) != keep {
                m.exps[i] = 0;
            }
        }
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Set of variable indices, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarMask(pub u16);

impl VarMask {
    pub fn single(i: usize) -> VarMask {
        VarMask(1 << i)
    }

    pub fn from_indices(idx: &[usize]) -> VarMask {
        VarMask(idx.iter().fold(0, |m, &i| m | (1 << i)))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Grevlex,
    Lex,
}

/// A monomial well-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    /// Lexicographic with `x0 > x1 > …`.
    Lex,
    /// Elimination order: monomials are compared first on the `elim`
    /// variables, then on the rest, each block by `inner`.
    Block { elim: VarMask, inner: BaseOrder },
}

impl MonomialOrder {
    pub fn elimination(elim: VarMask) -> MonomialOrder {
        MonomialOrder::Block { elim, inner: BaseOrder::Grevlex }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block { elim, inner } => {
                let base = |x: &Monomial, y: &Monomial| match inner {
                    BaseOrder::Grevlex => grevlex(x, y),
                    BaseOrder::Lex => x.exps.cmp(&y.exps),
                };
                base(&a.masked(elim, true), &b.masked(elim, true))
                    .then_with(|| base(&a.masked(elim, false), &b.masked(elim, false)))
            }
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..MAX_VARS).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// All degree-`d` monomials in `n` variables, in descending grevlex order.
/// This enumeration fixes the column layout of every coefficient vector.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = [0u16; MAX_VARS];
    fill(n, 0, d, &mut cur, &mut out);
    out.sort_by(|a, b| grevlex(b, a));
    out
}

fn fill(n: usize, i: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    if n == 0 {
        if left == 0 {
            out.push(Monomial::ONE);
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left as u16;
        out.push(Monomial { exps: *cur });
        cur[i] = 0;
        return;
    }
    for e in 0..=left {
        cur[i] = e as u16;
        fill(n, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

/// `C(d + n − 1, n − 1)`.
pub fn count_monomials(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    let (mut num, mut den) = (1u128, 1u128);
    for k in 1..n as u128 {
        num *= d as u128 + k;
        den *= k;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_degree_two_enumeration() {
        let m = monomials_of_degree(3, 2);
        let exps: Vec<[u16; 3]> = m.iter().map(|m| [m.exp(0), m.exp(1), m.exp(2)]).collect();
        assert_eq!(
            exps,
            [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]]
        );
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(5, 2).len(), 15);
        assert_eq!(count_monomials(5, 2), 15);
        assert_eq!(count_monomials(4, 4), 35);
        assert_eq!(count_monomials(3, 6), 28);
        assert_eq!(monomials_of_degree(3, 6).len(), 28);
        assert_eq!(count_monomials(0, 0), 1);
    }

    #[test]
    fn block_order_eliminates() {
        let ord = MonomialOrder::elimination(VarMask::single(2));
        let t = Monomial::new(&[0, 0, 1]);
        let big = Monomial::new(&[5, 5, 0]);
        assert_eq!(ord.cmp(&t, &big), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&t, &big), Ordering::Less);
    }

    #[test]
    fn lex_order() {
        let a = Monomial::new(&[1, 0]);
        let b = Monomial::new(&[0, 7]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }
}
