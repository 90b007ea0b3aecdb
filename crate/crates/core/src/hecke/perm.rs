//! Permutations indexing the standard basis `T_w` of the type-A Hecke algebra.

use std::fmt;

/// A permutation of `0..n`, stored as the image array of positions.
///
/// The generator `g_i` (1-based) swaps positions `i - 1` and `i`; a reduced
/// word is read left to right, each letter acting on positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &s in word {
            p.0.swap(s - 1, s);
        }
        p
    }

    /// All permutations of `0..n`, in a fixed order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = vec![Self::identity(n)];
        let mut i = 0;
        while i < out.len() {
            for s in 1..n {
                let (p, _) = out[i].right_mul(s);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let a = &self.0;
        let mut n = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `w g_s`, and whether the length went up.
    pub fn right_mul(&self, s: usize) -> (Perm, bool) {
        let up = self.0[s - 1] < self.0[s];
        let mut p = self.clone();
        p.0.swap(s - 1, s);
        (p, up)
    }

    /// `g_s w`, and whether the length went up.
    pub fn left_mul(&self, s: usize) -> (Perm, bool) {
        let a = self.position(s as u8 - 1);
        let b = self.position(s as u8);
        let mut p = self.clone();
        p.0.swap(a, b);
        (p, a < b)
    }

    fn position(&self, v: u8) -> usize {
        self.0.iter().position(|&x| x == v).expect("value present")
    }

    /// The same permutation on `n ≥ len` points.
    pub fn embed(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u8..n as u8);
        Perm(v)
    }

    /// Restriction to the first `n - 1` points; requires the last point fixed.
    pub fn restrict(&self) -> Perm {
        let n = self.0.len();
        debug_assert_eq!(self.0[n - 1] as usize, n - 1);
        Perm(self.0[..n - 1].to_vec())
    }

    /// Splits `w = u c` with `u` fixing the last point and
    /// `c = g_{n-1} g_{n-2} … g_j` (possibly empty). Returns `(u, j)`,
    /// with `j = n` meaning `c` is empty.
    pub fn split_top(&self) -> (Perm, usize) {
        let n = self.0.len();
        let pos = self.position(n as u8 - 1);
        let mut u = self.clone();
        for i in pos..n - 1 {
            u.0.swap(i, i + 1);
        }
        (u, pos + 1)
    }

    /// The canonical reduced word `(g_{i_1} … g_{i_1-k_1})(g_{i_2} …)…` with
    /// `i_1 < i_2 < …`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut blocks = Vec::new();
        let mut w = self.clone();
        while w.len() > 1 {
            let n = w.len();
            let (u, j) = w.split_top();
            blocks.push((j..n).rev().collect::<Vec<_>>());
            w = u.restrict();
        }
        blocks.into_iter().rev().flatten().collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Perm> {
        Perm::all(n)
    }

    #[test]
    fn reduced_words_are_reduced_and_canonical() {
        for n in 1..=5 {
            let perms = all_perms(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            for p in &perms {
                let w = p.reduced_word();
                assert_eq!(w.len(), p.length());
                assert_eq!(&Perm::from_word(n, &w), p);
                let mut i = 0;
                let mut last_top = 0;
                while i < w.len() {
                    let top = w[i];
                    assert!(top > last_top);
                    last_top = top;
                    let mut j = i + 1;
                    while j < w.len() && w[j] + 1 == w[j - 1] {
                        j += 1;
                    }
                    i = j;
                }
            }
        }
    }

    #[test]
    fn length_changes() {
        for p in all_perms(4) {
            for s in 1..4 {
                let (r, up) = p.right_mul(s);
                assert_eq!(r.length() > p.length(), up);
                let (l, up) = p.left_mul(s);
                assert_eq!(l.length() > p.length(), up);
                assert_eq!(l, Perm::from_word(4, &[s]).compose_word_right(&p));
            }
        }
    }

    impl Perm {
        fn compose_word_right(&self, other: &Perm) -> Perm {
            let mut p = self.clone();
            for s in other.reduced_word() {
                p = p.right_mul(s).0;
            }
            p
        }
    }
}
