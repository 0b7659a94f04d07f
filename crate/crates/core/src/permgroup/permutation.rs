use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{ratio, ExactInt};

/// A bijection of `{0, .., n-1}` acting on the right: point `i` maps to
/// `images[i]`, and `a.compose(b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree || seen[x] {
                return Err(Error::NotABijection { degree });
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(Error::NotABijection { degree });
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Self::compose); panics on degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `h^-1 * self * h`, the conjugate of `self` by `h` for the right action.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().then(self).then(h)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles, including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Cycle type in exponent notation, e.g. `1^4 2^3`.
    pub fn cycle_type_string(&self) -> String {
        let lens = self.cycle_type();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < lens.len() {
            let j = lens[i..].iter().take_while(|&&l| l == lens[i]).count();
            parts.push(format!("{}^{}", lens[i], j));
            i += j;
        }
        parts.join(" ")
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] == i).collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x).count()
    }

    /// Image of a point set, sorted.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.images[x]).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Points of `domain` fixed by `g`.
pub fn fixed_points(g: &Permutation, domain: &[usize]) -> Vec<usize> {
    domain.iter().copied().filter(|&x| g.apply(x) == x).collect()
}

/// Exact fixed-point ratio of `g` on its whole point set.
pub fn fpr<I: ExactInt>(g: &Permutation) -> Result<Ratio<I>> {
    if g.degree() == 0 {
        return Err(Error::EmptyDomain);
    }
    Ok(ratio(g.fixed_point_count(), g.degree()))
}

/// Exact fixed-point ratio of `g` restricted to a `g`-invariant domain.
pub fn fpr_on<I: ExactInt>(g: &Permutation, domain: &[usize]) -> Result<Ratio<I>> {
    if domain.is_empty() {
        return Err(Error::EmptyDomain);
    }
    Ok(ratio(fixed_points(g, domain).len(), domain.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Fraction;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_identity_left() {
        let g = p(4, &[&[0, 2, 3]]);
        assert_eq!(Permutation::identity(4).compose(&g).unwrap(), g);
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p(3, &[&[0, 1]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn three_cycle_squared() {
        let c = p(3, &[&[0, 1, 2]]);
        assert_eq!(c.compose(&c).unwrap(), p(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn composition_is_left_to_right() {
        // (0 1) then (1 2): 0 -> 1 -> 2
        let a = p(3, &[&[0, 1]]);
        let b = p(3, &[&[1, 2]]);
        assert_eq!(a.then(&b).apply(0), 2);
    }

    #[test]
    fn degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn conjugation_convention() {
        let g = p(3, &[&[0, 1]]);
        let h = p(3, &[&[1, 2]]);
        // h^-1 g h moves h(0), h(1): the transposition (0 2)
        assert_eq!(g.conjugate_by(&h), p(3, &[&[0, 2]]));
    }

    #[test]
    fn cycle_type_and_order() {
        let g = p(6, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(g.cycle_type(), vec![1, 2, 3]);
        assert_eq!(g.cycle_type_string(), "1^1 2^1 3^1");
        assert_eq!(g.order(), 6);
        assert!(g.pow(6).is_identity());
        assert_eq!(g.to_string(), "(0 1)(2 3 4)");
    }

    #[test]
    fn fpr_values() {
        let id = Permutation::identity(5);
        assert_eq!(fpr::<i64>(&id).unwrap(), Fraction::from_integer(1));
        let inv = p(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(fpr::<i64>(&inv).unwrap(), Fraction::from_integer(0));
        assert_eq!(fpr::<i64>(&Permutation::identity(0)), Err(Error::EmptyDomain));
        assert_eq!(fpr_on::<i64>(&inv, &[]), Err(Error::EmptyDomain));
    }
}
