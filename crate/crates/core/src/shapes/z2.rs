use std::fmt;

/// A length-n vector over Z2, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Z2Vector {
    pub len: usize,
    pub bits: u64,
}

impl Z2Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= 64);
        Z2Vector { len, bits: 0 }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zero(len);
        for &k in support {
            v = v.with_bit(k, true);
        }
        v
    }

    /// 1-based coordinate access.
    pub fn get(&self, k: usize) -> bool {
        debug_assert!(k >= 1 && k <= self.len);
        (self.bits >> (k - 1)) & 1 == 1
    }

    pub fn with_bit(&self, k: usize, on: bool) -> Self {
        debug_assert!(k >= 1 && k <= self.len);
        let mut bits = self.bits;
        if on {
            bits |= 1 << (k - 1);
        } else {
            bits &= !(1 << (k - 1));
        }
        Z2Vector { len: self.len, bits }
    }

    pub fn flip(&self, k: usize) -> Self {
        self.with_bit(k, !self.get(k))
    }

    pub fn add(&self, rhs: &Z2Vector) -> Self {
        assert_eq!(self.len, rhs.len);
        Z2Vector { len: self.len, bits: self.bits ^ rhs.bits }
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.len).filter(|&k| self.get(k)).collect()
    }

    /// nu(k) in {-1, +1}: -1 where the coordinate is 1.
    pub fn nu(&self, k: usize) -> i64 {
        if self.get(k) {
            -1
        } else {
            1
        }
    }

    /// delta(k) in {0, 1} with nu = 1 - 2*delta.
    pub fn delta(&self, k: usize) -> u8 {
        self.get(k) as u8
    }

    /// Sum of coordinates strictly below `i`, as an integer.
    pub fn weight_below(&self, i: usize) -> usize {
        (1..i.min(self.len + 1)).filter(|&k| self.get(k)).count()
    }

    pub fn weight_at_most(&self, i: usize) -> usize {
        self.weight_below(i + 1)
    }

    pub fn weight_above(&self, i: usize) -> usize {
        ((i + 1)..=self.len).filter(|&k| self.get(k)).count()
    }

    pub fn weight_at_least(&self, i: usize) -> usize {
        (i.max(1)..=self.len).filter(|&k| self.get(k)).count()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn parity(&self) -> u8 {
        (self.weight() % 2) as u8
    }

    /// Truncation to the first `k` coordinates.
    pub fn restrict(&self, k: usize) -> Z2Vector {
        let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Z2Vector { len: k, bits: self.bits & mask }
    }

    /// Extension by zero coordinates to length `len`.
    pub fn extend(&self, len: usize) -> Z2Vector {
        assert!(len >= self.len);
        Z2Vector { len, bits: self.bits }
    }

    /// Swap of coordinates `i` and `i+1`.
    pub fn swap_adjacent(&self, i: usize) -> Z2Vector {
        let (a, b) = (self.get(i), self.get(i + 1));
        self.with_bit(i, b).with_bit(i + 1, a)
    }

    /// All Z2-vectors of length `len` supported on `support`.
    pub fn all_supported(len: usize, support: &[usize]) -> Vec<Z2Vector> {
        let mut out = Vec::with_capacity(1 << support.len());
        for mask in 0u64..(1 << support.len()) {
            let mut v = Self::zero(len);
            for (j, &k) in support.iter().enumerate() {
                if (mask >> j) & 1 == 1 {
                    v = v.with_bit(k, true);
                }
            }
            out.push(v);
        }
        out.sort();
        out
    }
}

impl fmt::Display for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len).map(|k| if self.get(k) { '1' } else { '0' }).collect();
        write!(f, "{}", s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_delta_relation() {
        let v = Z2Vector::from_support(5, &[2, 5]);
        for k in 1..=5 {
            assert_eq!(v.nu(k), 1 - 2 * v.delta(k) as i64);
        }
        assert_eq!(v.weight_below(5), 1);
        assert_eq!(v.weight(), 2);
    }
}
