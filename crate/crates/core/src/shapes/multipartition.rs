use std::fmt;

/// Which combinatorial family a multipartition belongs to. Families s and ss
/// carry one resp. two leading strict components.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Zero,
    S,
    SS,
}

impl Family {
    pub fn strict_components(&self) -> usize {
        match self {
            Family::Zero => 0,
            Family::S => 1,
            Family::SS => 2,
        }
    }

    pub fn component_count(&self, m: usize) -> usize {
        m + self.strict_components()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Zero => write!(f, "0"),
            Family::S => write!(f, "s"),
            Family::SS => write!(f, "ss"),
        }
    }
}

/// Label of a component for residue purposes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompLabel {
    ZeroMinus,
    ZeroPlus,
    Zero,
    Q(usize),
}

/// A box `(row, col, component)` of a multipartition diagram; rows and
/// columns are 1-based, the component is a 0-based index into `components`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Box_ {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Box_ {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Box_ { row, col, comp }
    }

    /// The paper's box order for the closed c-formulas: `y < x` iff the
    /// component of y is smaller, or components agree and the column of y is
    /// larger.
    pub fn before(&self, other: &Box_) -> bool {
        self.comp < other.comp || (self.comp == other.comp && self.col > other.col)
    }
}

/// A multipartition: `m` ordinary components preceded by the family's strict
/// components. Strict components are identified with shifted diagrams, so row
/// `i` occupies columns `i ..= i + part - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multipartition {
    pub family: Family,
    pub m: usize,
    pub components: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(family: Family, m: usize, components: Vec<Vec<usize>>) -> Self {
        assert_eq!(components.len(), family.component_count(m));
        let mp = Multipartition { family, m, components };
        assert!(mp.is_valid(), "invalid multipartition {:?}", mp);
        mp
    }

    pub fn empty(family: Family, m: usize) -> Self {
        Multipartition { family, m, components: vec![Vec::new(); family.component_count(m)] }
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(|c| c.iter().sum::<usize>()).sum()
    }

    pub fn is_strict_component(&self, comp: usize) -> bool {
        comp < self.family.strict_components()
    }

    pub fn component_label(&self, comp: usize) -> CompLabel {
        match self.family {
            Family::Zero => CompLabel::Q(comp + 1),
            Family::S => {
                if comp == 0 {
                    CompLabel::Zero
                } else {
                    CompLabel::Q(comp)
                }
            }
            Family::SS => match comp {
                0 => CompLabel::ZeroMinus,
                1 => CompLabel::ZeroPlus,
                c => CompLabel::Q(c - 1),
            },
        }
    }

    pub fn is_valid(&self) -> bool {
        for (c, parts) in self.components.iter().enumerate() {
            let strict = self.is_strict_component(c);
            for w in parts.windows(2) {
                if strict {
                    if w[0] <= w[1] {
                        return false;
                    }
                } else if w[0] < w[1] {
                    return false;
                }
            }
            if parts.iter().any(|&p| p == 0) {
                return false;
            }
        }
        true
    }

    /// First column of row `r` (1-based) in component `c`.
    pub fn col_start(&self, comp: usize, row: usize) -> usize {
        if self.is_strict_component(comp) {
            row
        } else {
            1
        }
    }

    pub fn contains(&self, b: &Box_) -> bool {
        let parts = &self.components[b.comp];
        if b.row == 0 || b.row > parts.len() {
            return false;
        }
        let start = self.col_start(b.comp, b.row);
        b.col >= start && b.col < start + parts[b.row - 1]
    }

    /// All boxes in reading order: component by component, rows top to
    /// bottom, columns left to right. This is the filling order of the
    /// row-initial tableau.
    pub fn boxes(&self) -> Vec<Box_> {
        let mut out = Vec::with_capacity(self.n());
        for (c, parts) in self.components.iter().enumerate() {
            for (r0, &len) in parts.iter().enumerate() {
                let row = r0 + 1;
                let start = self.col_start(c, row);
                for col in start..start + len {
                    out.push(Box_::new(row, col, c));
                }
            }
        }
        out
    }

    /// Boxes in column-reading order starting from the last component; the
    /// filling order of the column-initial tableau.
    pub fn boxes_by_columns(&self) -> Vec<Box_> {
        let mut out = Vec::with_capacity(self.n());
        for (c, parts) in self.components.iter().enumerate().rev() {
            if parts.is_empty() {
                continue;
            }
            let start0 = self.col_start(c, 1);
            let max_col = parts
                .iter()
                .enumerate()
                .map(|(r0, &len)| self.col_start(c, r0 + 1) + len - 1)
                .max()
                .unwrap();
            for col in start0..=max_col {
                for (r0, &len) in parts.iter().enumerate() {
                    let row = r0 + 1;
                    let s = self.col_start(c, row);
                    if col >= s && col < s + len {
                        out.push(Box_::new(row, col, c));
                    }
                }
            }
        }
        out
    }

    /// Addable boxes; for strict components only those preserving
    /// strictness.
    pub fn addable(&self) -> Vec<Box_> {
        let mut out = Vec::new();
        for (c, parts) in self.components.iter().enumerate() {
            let strict = self.is_strict_component(c);
            for (r0, &len) in parts.iter().enumerate() {
                let row = r0 + 1;
                let can = if r0 == 0 {
                    true
                } else if strict {
                    parts[r0 - 1] > len + 1
                } else {
                    parts[r0 - 1] > len
                };
                if can {
                    out.push(Box_::new(row, self.col_start(c, row) + len, c));
                }
            }
            let new_row = parts.len() + 1;
            let last_ok = parts.last().map(|&p| p > 1 || !strict).unwrap_or(true);
            if last_ok {
                out.push(Box_::new(new_row, self.col_start(c, new_row), c));
            }
        }
        out
    }

    /// Removable boxes; for strict components only those preserving
    /// strictness.
    pub fn removable(&self) -> Vec<Box_> {
        let mut out = Vec::new();
        for (c, parts) in self.components.iter().enumerate() {
            let strict = self.is_strict_component(c);
            for (r0, &len) in parts.iter().enumerate() {
                let row = r0 + 1;
                let below = parts.get(r0 + 1).copied().unwrap_or(0);
                let can = if strict {
                    below == 0 || len - 1 > below
                } else {
                    len > below
                };
                if can {
                    out.push(Box_::new(row, self.col_start(c, row) + len - 1, c));
                }
            }
        }
        out
    }

    pub fn with_box(&self, b: &Box_) -> Multipartition {
        let mut mp = self.clone();
        if b.row == mp.components[b.comp].len() + 1 {
            mp.components[b.comp].push(1);
        } else {
            mp.components[b.comp][b.row - 1] += 1;
        }
        debug_assert!(mp.is_valid());
        mp
    }

    pub fn without_box(&self, b: &Box_) -> Multipartition {
        let mut mp = self.clone();
        let parts = &mut mp.components[b.comp];
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.remove(b.row - 1);
        }
        debug_assert!(mp.is_valid());
        mp
    }

    /// Diagonal boxes `(a, a, l)` of the strict components, in reading order.
    pub fn diagonal_boxes(&self) -> Vec<Box_> {
        let mut out = Vec::new();
        for c in 0..self.family.strict_components() {
            for (r0, &len) in self.components[c].iter().enumerate() {
                let row = r0 + 1;
                let _ = len;
                out.push(Box_::new(row, row, c));
            }
        }
        out
    }

    /// Whether a diagonal box is addable, i.e. the strict component's last
    /// part differs from 1 (or the component is empty). Family 0 has no
    /// diagonal boxes. Only meaningful for families with a single strict
    /// component at index 0.
    pub fn delta_lambda0(&self) -> bool {
        match self.family {
            Family::Zero => false,
            _ => self.components[0].last().map(|&p| p != 1).unwrap_or(true),
        }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|p| {
                let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        write!(f, "[{}]", comps.join("|"))
    }
}

/// All partitions of `n`, weakly decreasing, in a deterministic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of `n`.
pub fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            if p >= 1 {
                rec(n - p, p.saturating_sub(1), cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Complete, duplicate-free enumeration of the family's multipartitions of
/// `n` with `m` ordinary components, sorted for determinism.
pub fn enumerate_multipartitions(n: usize, m: usize, family: Family) -> Vec<Multipartition> {
    let count = family.component_count(m);
    let mut out = Vec::new();
    let mut sizes = vec![0usize; count];
    fn distribute(
        idx: usize,
        remaining: usize,
        sizes: &mut Vec<usize>,
        family: Family,
        m: usize,
        out: &mut Vec<Multipartition>,
    ) {
        let count = sizes.len();
        if idx == count {
            if remaining != 0 {
                return;
            }
            // Cartesian product of per-component partitions.
            let per_comp: Vec<Vec<Vec<usize>>> = sizes
                .iter()
                .enumerate()
                .map(|(c, &s)| {
                    if c < family.strict_components() {
                        strict_partitions(s)
                    } else {
                        partitions(s)
                    }
                })
                .collect();
            let mut picks = vec![0usize; count];
            loop {
                let comps: Vec<Vec<usize>> = picks
                    .iter()
                    .enumerate()
                    .map(|(c, &k)| per_comp[c][k].clone())
                    .collect();
                out.push(Multipartition::new(family, m, comps));
                let mut c = 0;
                loop {
                    if c == count {
                        return;
                    }
                    picks[c] += 1;
                    if picks[c] < per_comp[c].len() {
                        break;
                    }
                    picks[c] = 0;
                    c += 1;
                }
            }
        } else {
            for s in 0..=remaining {
                sizes[idx] = s;
                distribute(idx + 1, remaining - s, sizes, family, m, out);
            }
            sizes[idx] = 0;
        }
    }
    distribute(0, n, &mut sizes, family, m, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_shape_enumeration() {
        let v = enumerate_multipartitions(0, 2, Family::Zero);
        assert_eq!(v, vec![Multipartition::empty(Family::Zero, 2)]);
    }

    #[test]
    fn bipartitions_of_two() {
        assert_eq!(enumerate_multipartitions(2, 1, Family::Zero).len(), 5);
    }

    #[test]
    fn family_s_contains_paper_example() {
        let v = enumerate_multipartitions(5, 1, Family::S);
        let expect = Multipartition::new(Family::S, 1, vec![vec![2, 1], vec![1, 1]]);
        assert!(v.contains(&expect));
    }

    #[test]
    fn strict_partitions_are_strict() {
        for p in strict_partitions(8) {
            for w in p.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
        assert_eq!(strict_partitions(5).len(), 3); // (5), (4,1), (3,2)
    }

    #[test]
    fn addable_removable_counts_family_zero() {
        for mp in enumerate_multipartitions(4, 2, Family::Zero) {
            assert_eq!(mp.addable().len(), mp.removable().len() + 2);
        }
    }

    #[test]
    fn addable_removable_counts_family_s() {
        for n in 0..=6 {
            for m in 0..=2 {
                for mp in enumerate_multipartitions(n, m, Family::S) {
                    let delta = mp.delta_lambda0() as usize;
                    assert_eq!(
                        mp.addable().len(),
                        mp.removable().len() + m + delta,
                        "shape {}",
                        mp
                    );
                }
            }
        }
    }

    #[test]
    fn addable_of_empty() {
        let mp = Multipartition::empty(Family::Zero, 1);
        assert_eq!(mp.addable(), vec![Box_::new(1, 1, 0)]);
        assert!(mp.removable().is_empty());
    }

    #[test]
    fn strict_component_addable_respects_strictness() {
        // Strict (2,1): cannot add a third row (last part is 1); can add to
        // rows 1. Row 2 would give (2,2) which is not strict.
        let mp = Multipartition::new(Family::S, 0, vec![vec![2, 1]]);
        let adds = mp.addable();
        assert!(adds.contains(&Box_::new(1, 3, 0)));
        assert!(!adds.iter().any(|b| b.row == 2));
        assert!(!adds.iter().any(|b| b.row == 3));
    }
}
