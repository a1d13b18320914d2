use std::fmt;

/// A permutation of `1..=n` in one-line notation (`map[i]` is the image of
/// `i+1`, stored 0-based internally).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { map: (0..n).collect() }
    }

    pub fn from_images(images_1based: &[usize]) -> Self {
        let map: Vec<usize> = images_1based.iter().map(|&x| x - 1).collect();
        let mut seen = vec![false; map.len()];
        for &x in &map {
            assert!(x < map.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Basic transposition `s_i` swapping `i` and `i+1` (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i - 1, i);
        Perm { map }
    }

    /// Group product: `(self * rhs)(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n());
        Perm { map: rhs.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.n()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x] = i;
        }
        Perm { map }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.map[i] > self.map[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Whether right multiplication by `s_i` increases length,
    /// i.e. `w(i) < w(i+1)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.map[i - 1] < self.map[i]
    }

    /// Multiply by `s_i` on the right: `w * s_i`.
    pub fn mul_s_right(&self, i: usize) -> Perm {
        let mut map = self.map.clone();
        map.swap(i - 1, i);
        Perm { map }
    }

    /// Multiply by `s_i` on the left: `s_i * w`.
    pub fn mul_s_left(&self, i: usize) -> Perm {
        let mut map = self.map.clone();
        for x in map.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
        Perm { map }
    }

    /// The smallest right descent, if any.
    pub fn smallest_right_descent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| !self.right_ascent(i))
    }

    /// Lexicographically smallest reduced word `(i_1, ..., i_p)` with
    /// `w = s_{i_1} ... s_{i_p}`, built by greedily removing the smallest
    /// left descent.
    pub fn canonical_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.length());
        'outer: loop {
            for i in 1..w.n() {
                // Left descent: w^{-1}(i) > w^{-1}(i+1).
                let inv = w.inverse();
                if inv.map[i - 1] > inv.map[i] {
                    word.push(i);
                    w = w.mul_s_left(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Whether `self` fixes all of `k+1..=n` pointwise.
    pub fn fixes_tail(&self, k: usize) -> bool {
        (k..self.n()).all(|i| self.map[i] == i)
    }

    /// Restriction to `1..=k`; requires the tail to be fixed.
    pub fn restrict(&self, k: usize) -> Perm {
        assert!(self.fixes_tail(k));
        Perm { map: self.map[..k].to_vec() }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.map.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_word_reconstructs() {
        // All of S4.
        fn all_perms(n: usize) -> Vec<Perm> {
            let mut out = vec![Perm::identity(n)];
            for _ in 0..n * n * n {
                let mut next = Vec::new();
                for p in &out {
                    for i in 1..n {
                        next.push(p.mul_s_right(i));
                    }
                }
                out.extend(next);
                out.sort();
                out.dedup();
            }
            out
        }
        for p in all_perms(4) {
            let word = p.canonical_word();
            assert_eq!(word.len(), p.length());
            let mut q = Perm::identity(4);
            for &i in &word {
                q = q.compose(&Perm::transposition(4, i));
            }
            assert_eq!(q, p);
            // Lexicographically smallest: no reduced word can start lower
            // than the smallest left descent, which is what we picked.
        }
    }

    #[test]
    fn length_additivity_on_ascent() {
        let w = Perm::from_images(&[2, 3, 1]);
        assert_eq!(w.length(), 2);
        assert!(w.right_ascent(1) || w.right_ascent(2));
    }
}
